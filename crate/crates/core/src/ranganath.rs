//! The forward worklist NTSCD algorithm, reproduced
//! as published, plus a fixpoint variant that repairs it.
//!
//! `S[n, p]` holds a subset of the symbols `t_pr`, one per successor `r` of
//! predicate `p`. A symbol in `S[n, p]` means `n` is on all maximal paths
//! from `p` that start with `p r`. The published loop propagates symbols
//! only when a node is popped from the workbag, and the result depends on
//! the popping order: some orders never deliver a symbol to a node that
//! needs it. The fixed variant ignores the workbag and reruns the loop body
//! on every node until `S` stops changing.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::cfg::{Cfg, NodeId};
use crate::relation::NtscdRelation;

/// How the next node is taken from the workbag.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum WorklistPolicy {
    /// Oldest element first.
    #[default]
    Fifo,
    /// Newest element first.
    Lifo,
    /// The element listed earliest here. Nodes missing from the list rank
    /// after every listed node, oldest first.
    Order(Vec<NodeId>),
}

/// Unresolved textual policy: `fifo`, `lifo` or `order:a,b,c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolicySpec {
    Fifo,
    Lifo,
    Order(Vec<String>),
}

impl FromStr for PolicySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fifo" => Ok(PolicySpec::Fifo),
            "lifo" => Ok(PolicySpec::Lifo),
            _ => match s.strip_prefix("order:") {
                Some(list) => Ok(PolicySpec::Order(
                    list.split(',')
                        .map(str::trim)
                        .filter(|l| !l.is_empty())
                        .map(str::to_owned)
                        .collect(),
                )),
                None => Err(format!(
                    "unknown worklist policy `{s}` (expected fifo, lifo or order:a,b,...)"
                )),
            },
        }
    }
}

impl PolicySpec {
    pub fn resolve(&self, g: &Cfg) -> Result<WorklistPolicy, crate::error::CfgError> {
        Ok(match self {
            PolicySpec::Fifo => WorklistPolicy::Fifo,
            PolicySpec::Lifo => WorklistPolicy::Lifo,
            PolicySpec::Order(labels) => WorklistPolicy::Order(
                labels
                    .iter()
                    .map(|l| g.require(l))
                    .collect::<Result<_, _>>()?,
            ),
        })
    }
}

/// The array `S`: for each node and predicate, a 2-bit mask over the
/// predicate's successor slots.
#[derive(Clone, PartialEq, Eq)]
pub struct SymbolTable {
    predicates: Vec<NodeId>,
    slot_of: Vec<Option<usize>>,
    cells: Vec<u8>,
}

impl SymbolTable {
    fn new(g: &Cfg) -> Self {
        let predicates = g.predicates();
        let mut slot_of = vec![None; g.node_count()];
        for (i, &p) in predicates.iter().enumerate() {
            slot_of[p.index()] = Some(i);
        }
        SymbolTable {
            cells: vec![0; g.node_count() * predicates.len()],
            predicates,
            slot_of,
        }
    }

    #[inline]
    fn cell(&self, n: NodeId, pi: usize) -> u8 {
        self.cells[n.index() * self.predicates.len() + pi]
    }

    #[inline]
    fn cell_mut(&mut self, n: NodeId, pi: usize) -> &mut u8 {
        let w = self.predicates.len();
        &mut self.cells[n.index() * w + pi]
    }

    /// Raw mask of `S[n, p]`; bit `i` stands for the symbol of the `i`-th
    /// successor of `p`. `None` if `p` is not a predicate.
    pub fn mask(&self, n: NodeId, p: NodeId) -> Option<u8> {
        self.slot_of[p.index()].map(|pi| self.cell(n, pi))
    }

    /// Successors `r` of `p` with `t_pr` in `S[n, p]`, in edge order.
    pub fn symbols(&self, g: &Cfg, n: NodeId, p: NodeId) -> Vec<NodeId> {
        let mask = self.mask(n, p).unwrap_or(0);
        g.successors(p)
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &r)| r)
            .collect()
    }

    /// Non-empty cells as `(n, p, [r...])`, by node then predicate.
    pub fn entries<'a>(
        &'a self,
        g: &'a Cfg,
    ) -> impl Iterator<Item = (NodeId, NodeId, Vec<NodeId>)> + 'a {
        g.nodes().flat_map(move |n| {
            self.predicates
                .iter()
                .enumerate()
                .filter(move |&(pi, _)| self.cell(n, pi) != 0)
                .map(move |(_, &p)| (n, p, self.symbols(g, n, p)))
        })
    }

    fn relation(&self, g: &Cfg) -> NtscdRelation {
        let mut out = NtscdRelation::new();
        for n in g.nodes() {
            for (pi, &p) in self.predicates.iter().enumerate() {
                let size = self.cell(n, pi).count_ones() as usize;
                if 0 < size && size < g.successors(p).len() {
                    out.insert(p, n);
                }
            }
        }
        out
    }
}

impl fmt::Debug for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for n in 0..self.slot_of.len() {
            for (pi, p) in self.predicates.iter().enumerate() {
                let c = self.cells[n * self.predicates.len() + pi];
                if c != 0 {
                    m.entry(&(n, p.index()), &format_args!("{c:02b}"));
                }
            }
        }
        m.finish()
    }
}

/// Result of a worklist run: the relation plus the final `S`.
#[derive(Clone, Debug)]
pub struct RanganathOutcome {
    pub relation: NtscdRelation,
    pub table: SymbolTable,
    /// Nodes in the order they were popped.
    pub pops: Vec<NodeId>,
}

struct Workbag {
    queue: VecDeque<NodeId>,
    present: Vec<bool>,
    policy: WorklistPolicy,
    rank: HashMap<NodeId, usize>,
}

impl Workbag {
    fn new(g: &Cfg, policy: WorklistPolicy) -> Self {
        let rank = match &policy {
            WorklistPolicy::Order(order) => {
                let mut rank = HashMap::new();
                for (i, &n) in order.iter().enumerate() {
                    rank.entry(n).or_insert(i);
                }
                rank
            }
            _ => HashMap::new(),
        };
        Workbag {
            queue: VecDeque::new(),
            present: vec![false; g.node_count()],
            policy,
            rank,
        }
    }

    fn push(&mut self, n: NodeId) {
        if !std::mem::replace(&mut self.present[n.index()], true) {
            self.queue.push_back(n);
        }
    }

    fn pop(&mut self) -> Option<NodeId> {
        let n = match &self.policy {
            WorklistPolicy::Fifo => self.queue.pop_front()?,
            WorklistPolicy::Lifo => self.queue.pop_back()?,
            WorklistPolicy::Order(_) => {
                let (at, _) =
                    self.queue.iter().enumerate().min_by_key(|&(i, n)| {
                        (self.rank.get(n).copied().unwrap_or(usize::MAX), i)
                    })?;
                self.queue.remove(at)?
            }
        };
        self.present[n.index()] = false;
        Some(n)
    }
}

/// One execution of the loop body for node `n`. Calls `changed(m)` for
/// every node whose row of `S` grew.
fn process(g: &Cfg, s: &mut SymbolTable, n: NodeId, mut changed: impl FnMut(NodeId)) {
    let succ = g.successors(n);
    let width = s.predicates.len();
    if let &[t] = succ {
        if t != n {
            let mut grew = false;
            for pi in 0..width {
                let from = s.cell(n, pi);
                let to = s.cell_mut(t, pi);
                if from & !*to != 0 {
                    *to |= from;
                    grew = true;
                }
            }
            if grew {
                changed(t);
            }
        }
    }
    if succ.len() > 1 {
        let ni = s.slot_of[n.index()].expect("node with two successors is a predicate");
        let full = (1u8 << succ.len()) - 1;
        for m in g.nodes() {
            if s.cell(m, ni) != full {
                continue;
            }
            let mut grew = false;
            for pi in 0..width {
                if pi == ni {
                    continue;
                }
                let from = s.cell(n, pi);
                let to = s.cell_mut(m, pi);
                if from & !*to != 0 {
                    *to |= from;
                    grew = true;
                }
            }
            if grew {
                changed(m);
            }
        }
    }
}

/// Seeds `S[r, p] = {t_pr}` for every predicate and successor, in node
/// order then edge order; returns the seeded nodes in that order.
fn initialize(g: &Cfg, s: &mut SymbolTable) -> Vec<NodeId> {
    let mut seeded = Vec::new();
    for pi in 0..s.predicates.len() {
        let p = s.predicates[pi];
        for (slot, &r) in g.successors(p).iter().enumerate() {
            *s.cell_mut(r, pi) |= 1 << slot;
            seeded.push(r);
        }
    }
    seeded
}

/// The published worklist algorithm. Sound, but incomplete under some
/// popping orders.
pub fn ntscd_ranganath(g: &Cfg, policy: &WorklistPolicy) -> NtscdRelation {
    ranganath_run(g, policy).relation
}

pub fn ranganath_run(g: &Cfg, policy: &WorklistPolicy) -> RanganathOutcome {
    let mut s = SymbolTable::new(g);
    let mut bag = Workbag::new(g, policy.clone());
    for r in initialize(g, &mut s) {
        bag.push(r);
    }
    let mut pops = Vec::new();
    while let Some(n) = bag.pop() {
        pops.push(n);
        process(g, &mut s, n, |m| bag.push(m));
    }
    RanganathOutcome {
        relation: s.relation(g),
        table: s,
        pops,
    }
}

/// Order in which the fixed variant sweeps the nodes on each pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PassOrder {
    #[default]
    Ascending,
    Descending,
}

/// Reruns the loop body over all nodes until `S` is stable.
pub fn ntscd_ranganath_fixed(g: &Cfg) -> NtscdRelation {
    ranganath_fixed_run(g, PassOrder::Ascending).relation
}

pub fn ranganath_fixed_run(g: &Cfg, order: PassOrder) -> RanganathOutcome {
    let mut s = SymbolTable::new(g);
    initialize(g, &mut s);
    let nodes: Vec<NodeId> = match order {
        PassOrder::Ascending => g.nodes().collect(),
        PassOrder::Descending => g.nodes().rev().collect(),
    };
    let mut pops = Vec::new();
    loop {
        let mut changed = false;
        for &n in &nodes {
            pops.push(n);
            process(g, &mut s, n, |_| changed = true);
        }
        if !changed {
            break;
        }
    }
    RanganathOutcome {
        relation: s.relation(g),
        table: s,
        pops,
    }
}
