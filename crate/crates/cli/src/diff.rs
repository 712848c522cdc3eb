use anyhow::{bail, Result};

use crate::algo::{self, Output};
use crate::{io, DiffArgs};

fn show(items: &[String]) -> String {
    format!("({})", items.join(","))
}

/// Prints `-item` for items only the first algorithm produced and `+item`
/// for items only the second produced.
pub fn run(args: DiffArgs) -> Result<i32> {
    let [a, b] = args.algo[..] else {
        bail!(
            "diff needs exactly two --algo flags, got {}",
            args.algo.len()
        );
    };
    if a.kind() != b.kind() {
        bail!("{} and {} compute different relations", a.name(), b.name());
    }
    let g = io::read_graph(&args.input)?;
    let closure = args.select.closure();
    let run = |algo| -> Result<Vec<Vec<String>>> {
        let prepared = algo::prepare(&g, algo, &args.select.policy, &closure)?;
        Ok(match algo::run(&g, algo, &prepared)?.0 {
            Output::Ntscd(r) => r.to_labels(&g).into_iter().map(Vec::from).collect(),
            Output::Dod(r) => r.to_labels(&g).into_iter().map(Vec::from).collect(),
            Output::Closure { nodes, .. } => nodes
                .labels(&g)
                .into_iter()
                .map(|l| vec![l.to_owned()])
                .collect(),
        })
    };
    let left = run(a)?;
    let right = run(b)?;
    let mut differs = false;
    for item in left.iter().filter(|i| !right.contains(i)) {
        println!("-{}", show(item));
        differs = true;
    }
    for item in right.iter().filter(|i| !left.contains(i)) {
        println!("+{}", show(item));
        differs = true;
    }
    Ok(i32::from(differs))
}
