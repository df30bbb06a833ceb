//! Exact Hamiltonian path/cycle decision procedures and witness handling.
//!
//! Two engines sit behind one interface. Up to [`OracleConfig::dp_limit`]
//! vertices, a Held–Karp subset DP answers every `s → t` query against a
//! fixed `s` in one `O(2^n · n)` sweep; the table rows are endpoint bitsets,
//! so batch queries (one per non-edge at `s`) reuse a single sweep. Above
//! the crossover, memory rules the DP out and a backtracking search with
//! degree, articulation and connectivity pruning takes over. Both engines
//! are deterministic: ties break toward the smallest vertex label, so a
//! given graph always yields the same witness.

use std::collections::BTreeMap;

use crate::graph::{bits, mask_all, Graph, NonEdge};
use crate::{Error, Result};

/// Default crossover from subset DP to backtracking, chosen so the DP table
/// (`2^n` words) stays within a couple hundred megabytes.
pub const DEFAULT_DP_LIMIT: usize = 24;

/// Hard cap on the DP table exponent regardless of configuration.
const DP_HARD_CAP: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Orders up to this use the subset DP; larger ones backtrack.
    /// Values above 30 are clamped (the table would not fit in memory).
    pub dp_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            dp_limit: DEFAULT_DP_LIMIT,
        }
    }
}

impl OracleConfig {
    fn effective_limit(&self) -> usize {
        self.dp_limit.min(DP_HARD_CAP)
    }
}

/// A Hamiltonian cycle through a designated non-edge.
///
/// `order` lists all `n` vertices; consecutive entries are edges of the
/// graph, and the wrap-around pair `(order[n-1], order[0])` is exactly
/// `through` — the one pair the cycle uses that the graph lacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub through: NonEdge,
    pub order: Vec<usize>,
}

/// Outcome of checking every non-edge of a graph.
#[derive(Clone, Debug)]
pub struct ExpandabilityReport {
    /// One entry per non-edge, in lexicographic order; `None` marks a
    /// non-edge with no Hamiltonian cycle through it.
    pub entries: BTreeMap<NonEdge, Option<CycleWitness>>,
    pub expandable: bool,
}

impl ExpandabilityReport {
    /// Non-edges that fail to extend, in order.
    pub fn failures(&self) -> Vec<NonEdge> {
        self.entries
            .iter()
            .filter(|(_, w)| w.is_none())
            .map(|(&e, _)| e)
            .collect()
    }
}

/// Finds a Hamiltonian path from `s` to `t`, if any.
pub fn ham_path(g: &Graph, s: usize, t: usize) -> Result<Option<Vec<usize>>> {
    ham_path_with(g, s, t, OracleConfig::default())
}

pub fn ham_path_with(
    g: &Graph,
    s: usize,
    t: usize,
    cfg: OracleConfig,
) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if s >= n {
        return Err(Error::VertexOutOfRange { v: s, n });
    }
    if t >= n {
        return Err(Error::VertexOutOfRange { v: t, n });
    }
    if s == t {
        return Err(Error::EqualEndpoints);
    }
    if n <= cfg.effective_limit() {
        let table = dp_table(g, s);
        Ok(dp_extract(g, &table, s, t))
    } else {
        Ok(backtrack_path(g, s, t))
    }
}

/// Finds a Hamiltonian cycle through the non-edge `e`, if any.
///
/// This is the "extension" query: the cycle exists in `G + e` and traverses
/// `e`, which happens exactly when `G` has a Hamiltonian `u`-`v` path.
pub fn ham_cycle_containing(g: &Graph, e: NonEdge) -> Result<Option<CycleWitness>> {
    ham_cycle_containing_with(g, e, OracleConfig::default())
}

pub fn ham_cycle_containing_with(
    g: &Graph,
    e: NonEdge,
    cfg: OracleConfig,
) -> Result<Option<CycleWitness>> {
    let e = g.non_edge(e.u(), e.v())?;
    let path = ham_path_with(g, e.u(), e.v(), cfg)?;
    Ok(path.map(|order| CycleWitness { through: e, order }))
}

/// Checks every non-edge, returning a witness where one exists.
///
/// Non-edges sharing their smaller endpoint are answered from one DP sweep,
/// so the whole report costs one sweep per distinct left endpoint rather
/// than one per pair.
pub fn expandability_report(g: &Graph) -> ExpandabilityReport {
    expandability_report_with(g, OracleConfig::default())
}

pub fn expandability_report_with(g: &Graph, cfg: OracleConfig) -> ExpandabilityReport {
    let mut entries = BTreeMap::new();
    let mut expandable = true;
    for_each_nonedge_grouped(g, cfg, |e, order| {
        if order.is_none() {
            expandable = false;
        }
        entries.insert(
            e,
            order.map(|order| CycleWitness { through: e, order }),
        );
        true
    });
    ExpandabilityReport {
        entries,
        expandable,
    }
}

/// Fast expandability predicate: stops at the first failing non-edge.
pub fn is_expandable(g: &Graph) -> bool {
    is_expandable_with(g, OracleConfig::default())
}

pub fn is_expandable_with(g: &Graph, cfg: OracleConfig) -> bool {
    let mut ok = true;
    for_each_nonedge_grouped(g, cfg, |_, order| {
        if order.is_none() {
            ok = false;
        }
        ok
    });
    ok
}

/// Drives `f` over every non-edge with its witness path (endpoints `e.u()`
/// to `e.v()`); `f` returns `false` to stop early. DP sweeps are shared per
/// left endpoint.
fn for_each_nonedge_grouped<F>(g: &Graph, cfg: OracleConfig, mut f: F)
where
    F: FnMut(NonEdge, Option<Vec<usize>>) -> bool,
{
    let n = g.n();
    let use_dp = n <= cfg.effective_limit();
    let full = mask_all(n);
    for u in 0..n {
        let missing = full & !g.neighbors(u) & !mask_all(u + 1);
        if missing == 0 {
            continue;
        }
        let table = if use_dp { Some(dp_table(g, u)) } else { None };
        for v in bits(missing) {
            let e = NonEdge::new(u, v).expect("u < v");
            let order = match &table {
                Some(t) => dp_extract(g, t, u, v),
                None => backtrack_path(g, u, v),
            };
            if !f(e, order) {
                return;
            }
        }
    }
}

/// Checks a claimed witness against the graph: a permutation of all
/// vertices whose consecutive pairs are edges, with the wrap-around pair
/// equal to `through`, which must be a genuine non-edge. Malformed input
/// returns `false` rather than erroring.
pub fn validate_witness(g: &Graph, w: &CycleWitness) -> bool {
    let n = g.n();
    if w.order.len() != n || n < 3 {
        return false;
    }
    let (tu, tv) = (w.through.u(), w.through.v());
    if tu >= n || tv >= n || g.has_edge(tu, tv) {
        return false;
    }
    let mut seen = 0u64;
    for &v in &w.order {
        if v >= n || seen & (1 << v) != 0 {
            return false;
        }
        seen |= 1 << v;
    }
    let mut through_seen = 0usize;
    for i in 0..n {
        let a = w.order[i];
        let b = w.order[(i + 1) % n];
        if (a.min(b), a.max(b)) == (tu, tv) {
            through_seen += 1;
        } else if !g.has_edge(a, b) {
            return false;
        }
    }
    through_seen == 1
}

/// Held–Karp sweep from `s`: `table[mask]` is the bitset of endpoints `v`
/// such that some path from `s` spans exactly `mask` and ends at `v`.
fn dp_table(g: &Graph, s: usize) -> Vec<u64> {
    let n = g.n();
    debug_assert!(n <= DP_HARD_CAP);
    let size = 1usize << n;
    let mut table = vec![0u64; size];
    let start = 1usize << s;
    table[start] = start as u64;
    for mask in start..size {
        if mask & start == 0 {
            continue;
        }
        let ends = table[mask];
        if ends == 0 {
            continue;
        }
        let unvisited = !(mask as u64);
        for v in bits(ends) {
            let frontier = g.neighbors(v) & unvisited;
            for w in bits(frontier) {
                table[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    table
}

/// Walks a full-mask endpoint back to `s`, preferring smaller labels.
fn dp_extract(g: &Graph, table: &[u64], s: usize, t: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let full = (1usize << n) - 1;
    if table[full] & (1 << t) == 0 {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = full;
    let mut cur = t;
    loop {
        order.push(cur);
        mask &= !(1usize << cur);
        if mask == 0 {
            break;
        }
        let cands = table[mask] & g.neighbors(cur);
        debug_assert_ne!(cands, 0, "dp table must be walkable");
        cur = cands.trailing_zeros() as usize;
    }
    debug_assert_eq!(*order.last().unwrap(), s);
    order.reverse();
    Some(order)
}

/// Depth-first search for a Hamiltonian `s`-`t` path with pruning. Used
/// above the DP crossover.
fn backtrack_path(g: &Graph, s: usize, t: usize) -> Option<Vec<usize>> {
    let full = mask_all(g.n());
    let mut path = Vec::with_capacity(g.n());
    path.push(s);
    if search(g, s, t, 1u64 << s, full, &mut path) {
        Some(path)
    } else {
        None
    }
}

fn search(g: &Graph, cur: usize, t: usize, visited: u64, full: u64, path: &mut Vec<usize>) -> bool {
    let unvisited = full & !visited;
    if unvisited == 1 << t {
        if g.has_edge(cur, t) {
            path.push(t);
            return true;
        }
        return false;
    }
    let cands = match next_candidates(g, cur, t, unvisited) {
        Some(c) => c,
        None => return false,
    };
    for w in bits(cands) {
        path.push(w);
        if search(g, w, t, visited | (1 << w), full, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Candidate successors of `cur`, or `None` when the node is a dead end.
///
/// Prunes on three conditions, each preserved by every completion of the
/// current partial path: an unvisited region disconnected from `cur`; an
/// interior vertex left with fewer than two usable neighbors (it could
/// never be both entered and exited); and two vertices that both depend on
/// `cur` as one of their last two doors — only one can take it. A single
/// such dependent vertex forces the next move.
fn next_candidates(g: &Graph, cur: usize, t: usize, unvisited: u64) -> Option<u64> {
    let cur_bit = 1u64 << cur;
    let live = unvisited | cur_bit;

    let mut reach = cur_bit;
    loop {
        let mut next = reach;
        for v in bits(reach) {
            next |= g.neighbors(v) & live;
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    if reach & unvisited != unvisited {
        return None;
    }

    let mut forced = 0u64;
    for u in bits(unvisited) {
        let avail = g.neighbors(u) & live;
        if u == t {
            // t is entered once, at the very end, never exited — but its
            // door cannot be `cur` unless cur moves straight to it, which
            // only happens in the base case handled by the caller.
            if avail == 0 || avail == cur_bit {
                return None;
            }
            continue;
        }
        match avail.count_ones() {
            0 | 1 => return None,
            2 if avail & cur_bit != 0 => {
                if forced != 0 {
                    return None;
                }
                forced = 1 << u;
            }
            _ => {}
        }
    }

    let step = g.neighbors(cur) & unvisited & !(1u64 << t);
    if forced != 0 {
        Some(step & forced)
    } else {
        Some(step)
    }
}
