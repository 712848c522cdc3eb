use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use ctrldep::{parse_cfg, Cfg, GraphFormat};

use crate::InputArgs;

/// `.json` files are JSON, everything else is an edge list.
pub fn infer_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => GraphFormat::Json,
        _ => GraphFormat::EdgeList,
    }
}

pub fn read_graph(args: &InputArgs) -> Result<Cfg> {
    let path = &args.input;
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let format = args.format.unwrap_or_else(|| infer_format(path));
    parse_cfg(&text, format).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_output(path: &Path, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        io::stdout().write_all(text.as_bytes())?;
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}
