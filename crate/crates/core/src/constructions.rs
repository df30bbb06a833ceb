//! Extremal expandable graphs for every order, with closed-form witnesses.
//!
//! For `n ≥ 7` the minimum-size expandable graphs used here are *ladders*:
//! two disjoint "rails" on `p` vertices each (`a_1..a_p` and `b_1..b_p`)
//! joined column-by-column.
//!
//! * **Even ladder** (`n = 2p`, `p ≥ 4`): both rails are cycles, columns
//!   `2..p-1` carry a rung `a_i b_i`, and the two ends are tied by the
//!   crossings `a_1 b_p` and `a_p b_1`. Cubic, `m = 3p = 3n/2`.
//! * **Odd ladder** (`n = 2p+1`, `p ≥ 3`): both rails are paths, every
//!   column carries a rung, and a hub vertex `v` closes both rails into
//!   cycles (`v` is adjacent to `a_1, a_p, b_1, b_p`). `m = 3p+2 = ⌈3n/2⌉`.
//!
//! Every non-edge of a ladder extends to a Hamiltonian cycle along a fixed
//! zig-zag route; [`template_witness`] emits that route in `O(n)` with no
//! search. The small orders `3..6`, where the ladder pattern does not yet
//! exist, use fixed extremal graphs (path, paw, butterfly, and a 9-edge
//! graph on 6 vertices).
//!
//! Vertex labels: `a_i ↦ i-1`, `b_i ↦ p+i-1`, hub `↦ 2p`.

use std::collections::HashSet;

use crate::graph::{Graph, GraphJson, NonEdge};
use crate::oracle::CycleWitness;
use crate::{Error, Result};

/// Minimum number of edges of an expandable graph on `n ≥ 3` vertices.
pub fn exp_h(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    Ok(match n {
        3 => 2,
        4 => 4,
        5 => 6,
        _ => (3 * n).div_ceil(2), // ⌈3n/2⌉
    })
}

/// Shape of a minimum construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Path on 3 vertices.
    Tiny3,
    /// Paw: a triangle with a pendant edge.
    Tiny4,
    /// Butterfly: two triangles sharing a vertex.
    Tiny5,
    /// The 9-edge extremal graph on 6 vertices.
    Tiny6,
    /// Two `p`-cycles with interior rungs and crossed ends (`n = 2p`).
    EvenLadder,
    /// Two `p`-paths, all rungs, and a shared hub (`n = 2p+1`).
    OddLadder,
}

/// Maps structured vertex names (`a_i`, `b_i`, hub) to integer labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyLabeling {
    kind: FamilyKind,
    p: usize,
}

impl FamilyLabeling {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Rail length `p`; zero for the tiny kinds.
    pub fn half(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        match self.kind {
            FamilyKind::Tiny3 => 3,
            FamilyKind::Tiny4 => 4,
            FamilyKind::Tiny5 => 5,
            FamilyKind::Tiny6 => 6,
            FamilyKind::EvenLadder => 2 * self.p,
            FamilyKind::OddLadder => 2 * self.p + 1,
        }
    }

    fn is_ladder(&self) -> bool {
        matches!(self.kind, FamilyKind::EvenLadder | FamilyKind::OddLadder)
    }

    /// Label of `a_i` (1-indexed; ladder kinds only).
    pub fn a(&self, i: usize) -> usize {
        debug_assert!(self.is_ladder() && (1..=self.p).contains(&i));
        i - 1
    }

    /// Label of `b_i` (1-indexed; ladder kinds only).
    pub fn b(&self, i: usize) -> usize {
        debug_assert!(self.is_ladder() && (1..=self.p).contains(&i));
        self.p + i - 1
    }

    /// Hub label, present only in the odd ladder.
    pub fn hub(&self) -> Option<usize> {
        match self.kind {
            FamilyKind::OddLadder => Some(2 * self.p),
            _ => None,
        }
    }

    /// Human-readable vertex name (used for DOT output and diagnostics).
    pub fn vertex_name(&self, v: usize) -> String {
        if self.is_ladder() {
            if v < self.p {
                format!("a{}", v + 1)
            } else if v < 2 * self.p {
                format!("b{}", v - self.p + 1)
            } else {
                "v".to_string()
            }
        } else {
            format!("v{v}")
        }
    }
}

/// A constructed family member.
///
/// Stored as an explicit edge list rather than a [`Graph`] so constructions
/// and templates keep working past 64 vertices; convert with
/// [`FamilyGraph::to_graph`] when an oracle is needed.
#[derive(Clone, Debug)]
pub struct FamilyGraph {
    labeling: FamilyLabeling,
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_set: HashSet<(usize, usize)>,
}

impl FamilyGraph {
    fn from_parts(labeling: FamilyLabeling, raw: Vec<(usize, usize)>) -> Self {
        let n = labeling.n();
        let mut edges: Vec<(usize, usize)> = raw
            .into_iter()
            .map(|(x, y)| (x.min(y), x.max(y)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|&(x, y)| x < y && y < n));
        let edge_set = edges.iter().copied().collect();
        FamilyGraph {
            labeling,
            n,
            edges,
            edge_set,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labeling(&self) -> &FamilyLabeling {
        &self.labeling
    }

    /// Sorted edge list, `u < v` in each pair.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_edge(&self, x: usize, y: usize) -> bool {
        x != y && self.edge_set.contains(&(x.min(y), x.max(y)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(x, y) in &self.edges {
            d[x] += 1;
            d[y] += 1;
        }
        d
    }

    /// All non-edges in lexicographic order.
    pub fn non_edges(&self) -> Vec<NonEdge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.is_edge(u, v) {
                    out.push(NonEdge::new(u, v).expect("u < v"));
                }
            }
        }
        out
    }

    /// Bitset form; fails for `n > 64`.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, &self.edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }

    /// Structural witness check that works at any order: `order` must be a
    /// permutation of the vertices whose consecutive pairs are edges and
    /// whose wrap-around pair is exactly the claimed non-edge.
    pub fn validate_witness(&self, w: &CycleWitness) -> bool {
        let n = self.n;
        if w.order.len() != n || n < 3 {
            return false;
        }
        let (tu, tv) = (w.through.u(), w.through.v());
        if tu >= n || tv >= n || self.is_edge(tu, tv) {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &w.order {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let mut through_seen = 0usize;
        for i in 0..n {
            let x = w.order[i];
            let y = w.order[(i + 1) % n];
            if (x.min(y), x.max(y)) == (tu, tv) {
                through_seen += 1;
            } else if !self.is_edge(x, y) {
                return false;
            }
        }
        through_seen == 1
    }
}

const TINY3: &[(usize, usize)] = &[(0, 1), (1, 2)];
const TINY4: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 2), (2, 3)];
const TINY5: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)];
// Lexicographically least 9-edge expandable graph on 6 vertices (degree
// sequence 5,3,3,3,2,2): a K4 on {0,1,2,3} plus the path 4-0-5 and edge 4-5.
const TINY6: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 2),
    (1, 3),
    (2, 3),
    (4, 5),
];

/// Even ladder on `2p` vertices, `p ≥ 4`.
pub fn build_even(p: usize) -> Result<FamilyGraph> {
    if p < 4 {
        return Err(Error::HalfSizeTooSmall { p, min: 4 });
    }
    let lab = FamilyLabeling {
        kind: FamilyKind::EvenLadder,
        p,
    };
    let mut e = Vec::with_capacity(3 * p);
    for k in 1..p {
        e.push((lab.a(k), lab.a(k + 1)));
        e.push((lab.b(k), lab.b(k + 1)));
    }
    e.push((lab.a(1), lab.a(p)));
    e.push((lab.b(1), lab.b(p)));
    for k in 2..p {
        e.push((lab.a(k), lab.b(k)));
    }
    e.push((lab.a(1), lab.b(p)));
    e.push((lab.a(p), lab.b(1)));
    Ok(FamilyGraph::from_parts(lab, e))
}

/// Odd ladder on `2p + 1` vertices, `p ≥ 3`.
pub fn build_odd(p: usize) -> Result<FamilyGraph> {
    if p < 3 {
        return Err(Error::HalfSizeTooSmall { p, min: 3 });
    }
    let lab = FamilyLabeling {
        kind: FamilyKind::OddLadder,
        p,
    };
    let hub = 2 * p;
    let mut e = Vec::with_capacity(3 * p + 2);
    for k in 1..p {
        e.push((lab.a(k), lab.a(k + 1)));
        e.push((lab.b(k), lab.b(k + 1)));
    }
    e.push((lab.a(1), hub));
    e.push((lab.a(p), hub));
    e.push((lab.b(1), hub));
    e.push((lab.b(p), hub));
    for k in 1..=p {
        e.push((lab.a(k), lab.b(k)));
    }
    Ok(FamilyGraph::from_parts(lab, e))
}

/// A minimum expandable graph on `n ≥ 3` vertices (`m = exp_h(n)`).
pub fn build_minimum(n: usize) -> Result<FamilyGraph> {
    let tiny = |kind, edges: &[(usize, usize)]| {
        Ok(FamilyGraph::from_parts(
            FamilyLabeling { kind, p: 0 },
            edges.to_vec(),
        ))
    };
    match n {
        0..=2 => Err(Error::OrderTooSmall { n, min: 3 }),
        3 => tiny(FamilyKind::Tiny3, TINY3),
        4 => tiny(FamilyKind::Tiny4, TINY4),
        5 => tiny(FamilyKind::Tiny5, TINY5),
        6 => tiny(FamilyKind::Tiny6, TINY6),
        _ if n.is_multiple_of(2) => build_even(n / 2),
        _ => build_odd(n / 2),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    A,
    B,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Column coordinates of a ladder with rail length `p`.
#[derive(Clone, Copy)]
struct Cols {
    p: usize,
}

impl Cols {
    fn a(&self, k: usize) -> usize {
        debug_assert!((1..=self.p).contains(&k));
        k - 1
    }

    fn b(&self, k: usize) -> usize {
        debug_assert!((1..=self.p).contains(&k));
        self.p + k - 1
    }

    fn at(&self, k: usize, s: Side) -> usize {
        match s {
            Side::A => self.a(k),
            Side::B => self.b(k),
        }
    }

    fn hub(&self) -> usize {
        2 * self.p
    }
}

// ---------------------------------------------------------------------------
// Even-ladder templates.
//
// The four end vertices {a_1, b_1, a_p, b_p} form a complete bipartite block
// ({a_p,b_p} × {a_1,b_1}: two crossings plus the two rail-closing edges), so
// a route may enter column p on either rail and leave column 1 on either —
// the block absorbs the parity of any zig-zag. Every template below walks
// rail segments between the removed pair, zig-zags across the remaining
// interior columns, and threads the end block to close up.
// ---------------------------------------------------------------------------

/// Route for the non-edge `(a_i, a_j)`, `1 ≤ i`, `i+2 ≤ j ≤ p-1`.
/// Starts at `a_j`, ends at `a_i`.
fn even_aa(c: &Cols, i: usize, j: usize) -> Vec<usize> {
    let p = c.p;
    debug_assert!(i >= 1 && i + 2 <= j && j < p);
    let mut ord = Vec::with_capacity(2 * p);
    for k in ((i + 1)..=j).rev() {
        ord.push(c.a(k));
    }
    for k in (i + 1)..=(j + 1) {
        ord.push(c.b(k));
    }
    let w_in = if j < p - 1 {
        ord.push(c.a(j + 1));
        let mut s = Side::A;
        for k in (j + 2)..=(p - 1) {
            ord.push(c.at(k, s));
            ord.push(c.at(k, s.flip()));
            s = s.flip();
        }
        ord.push(c.at(p, s));
        s
    } else {
        Side::B // b_p was already pushed as b_{j+1}
    };
    finish_wrap(c, i, w_in, &mut ord);
    ord
}

/// Route for the non-edge `(a_i, b_j)`, `1 ≤ i < j ≤ p-1`.
/// Starts at `b_j`, ends at `a_i`.
fn even_ab(c: &Cols, i: usize, j: usize) -> Vec<usize> {
    let p = c.p;
    debug_assert!(i >= 1 && i < j && j < p);
    let mut ord = Vec::with_capacity(2 * p);
    for k in ((i + 1)..=j).rev() {
        ord.push(c.b(k));
    }
    for k in (i + 1)..=(j + 1) {
        ord.push(c.a(k));
    }
    let w_in = if j < p - 1 {
        ord.push(c.b(j + 1));
        let mut s = Side::B;
        for k in (j + 2)..=(p - 1) {
            ord.push(c.at(k, s));
            ord.push(c.at(k, s.flip()));
            s = s.flip();
        }
        ord.push(c.at(p, s));
        s
    } else {
        Side::A // a_p was already pushed as a_{j+1}
    };
    finish_wrap(c, i, w_in, &mut ord);
    ord
}

/// Route for the non-edge `(a_1, b_1)`: one rail backwards, the other
/// forwards, crossing at both ends.
fn even_rung1(c: &Cols) -> Vec<usize> {
    let p = c.p;
    let mut ord = Vec::with_capacity(2 * p);
    ord.push(c.a(1));
    for k in (2..=p).rev() {
        ord.push(c.b(k));
    }
    for k in 2..=p {
        ord.push(c.a(k));
    }
    ord.push(c.b(1));
    ord
}

/// Shared tail of the even routes: the partial route has consumed columns
/// `i+1..p-1` entirely plus one vertex of column `p` (on side `w_in`), and
/// must consume the rest of the end block plus columns `2..i`, ending on
/// `a_i`. The exit side from column 1 is chosen so the zig-zag through
/// columns `2..i-1` lands on `b_i`'s rail.
fn finish_wrap(c: &Cols, i: usize, w_in: Side, ord: &mut Vec<usize>) {
    if i == 1 {
        ord.push(c.b(1));
        ord.push(c.at(c.p, w_in.flip()));
        ord.push(c.a(1));
        return;
    }
    let exit = if i.is_multiple_of(2) { Side::B } else { Side::A };
    ord.push(c.at(1, exit.flip()));
    ord.push(c.at(c.p, w_in.flip()));
    ord.push(c.at(1, exit));
    let mut s = exit;
    for k in 2..=(i - 1) {
        ord.push(c.at(k, s));
        ord.push(c.at(k, s.flip()));
        s = s.flip();
    }
    ord.push(c.b(i));
    ord.push(c.a(i));
}

/// Even-ladder automorphisms used to reduce boundary cases: reversal of the
/// column order, swap of the two rails, and their composition.
#[derive(Clone, Copy)]
enum EvenSym {
    Id,
    Rev,
    Swap,
    RevSwap,
}

fn even_apply(sym: EvenSym, p: usize, v: usize) -> usize {
    let (on_b, i) = if v < p { (false, v + 1) } else { (true, v - p + 1) };
    let (on_b, i) = match sym {
        EvenSym::Id => (on_b, i),
        EvenSym::Rev => (on_b, p + 1 - i),
        EvenSym::Swap => (!on_b, i),
        EvenSym::RevSwap => (!on_b, p + 1 - i),
    };
    if on_b {
        p + i - 1
    } else {
        i - 1
    }
}

/// Witness order for any non-edge `(x, y)` of the even ladder, `x < y`.
fn even_witness(p: usize, x: usize, y: usize) -> Vec<usize> {
    let c = Cols { p };
    let (ord, sym) = if y < p {
        // both on rail A
        let (i, j) = (x + 1, y + 1);
        if j == p {
            (even_aa(&c, 1, p + 1 - i), EvenSym::Rev)
        } else {
            (even_aa(&c, i, j), EvenSym::Id)
        }
    } else if x >= p {
        // both on rail B
        let (i, j) = (x - p + 1, y - p + 1);
        if j == p {
            (even_aa(&c, 1, p + 1 - i), EvenSym::RevSwap)
        } else {
            (even_aa(&c, i, j), EvenSym::Swap)
        }
    } else {
        // mixed: x = a_i, y = b_j
        let (i, j) = (x + 1, y - p + 1);
        if i == j {
            // missing rung at an end column
            if i == 1 {
                (even_rung1(&c), EvenSym::Id)
            } else {
                (even_rung1(&c), EvenSym::Rev)
            }
        } else if i < j {
            if j < p {
                (even_ab(&c, i, j), EvenSym::Id)
            } else {
                (even_ab(&c, p + 1 - j, p + 1 - i), EvenSym::RevSwap)
            }
        } else if i < p {
            (even_ab(&c, j, i), EvenSym::Swap)
        } else {
            (even_ab(&c, p + 1 - i, p + 1 - j), EvenSym::Rev)
        }
    };
    ord.into_iter().map(|v| even_apply(sym, p, v)).collect()
}

// ---------------------------------------------------------------------------
// Odd-ladder templates. Simpler than the even case: every column has its
// rung, and the hub joins both rails' ends, so a single zig-zag pattern
// covers everything. Reduction uses only the rail swap.
// ---------------------------------------------------------------------------

/// Route for `(a_i, a_j)`, `1 ≤ i`, `i+2 ≤ j ≤ p`. Starts `a_i`, ends `a_j`.
fn odd_aa(c: &Cols, i: usize, j: usize) -> Vec<usize> {
    let p = c.p;
    debug_assert!(i >= 1 && i + 2 <= j && j <= p);
    let mut ord = Vec::with_capacity(2 * p + 1);
    for k in i..=(j - 1) {
        ord.push(c.a(k));
    }
    for k in (i..=(j - 1)).rev() {
        ord.push(c.b(k));
    }
    let mut s = Side::B;
    for k in (1..=(i.saturating_sub(1))).rev() {
        ord.push(c.at(k, s));
        ord.push(c.at(k, s.flip()));
        s = s.flip();
    }
    ord.push(c.hub());
    let mut s = if (p - j).is_multiple_of(2) { Side::B } else { Side::A };
    for k in (j..=p).rev() {
        ord.push(c.at(k, s));
        ord.push(c.at(k, s.flip()));
        s = s.flip();
    }
    ord
}

/// Route for `(a_i, b_j)`, `1 ≤ i < j ≤ p`. Starts `a_i`, ends `b_j`.
fn odd_ab(c: &Cols, i: usize, j: usize) -> Vec<usize> {
    let p = c.p;
    debug_assert!(i >= 1 && i < j && j <= p);
    let mut ord = Vec::with_capacity(2 * p + 1);
    for k in i..=(j - 1) {
        ord.push(c.a(k));
    }
    for k in (i..=(j - 1)).rev() {
        ord.push(c.b(k));
    }
    let mut s = Side::B;
    for k in (1..=(i.saturating_sub(1))).rev() {
        ord.push(c.at(k, s));
        ord.push(c.at(k, s.flip()));
        s = s.flip();
    }
    ord.push(c.hub());
    let mut s = if (p - j).is_multiple_of(2) { Side::A } else { Side::B };
    for k in (j..=p).rev() {
        ord.push(c.at(k, s));
        ord.push(c.at(k, s.flip()));
        s = s.flip();
    }
    ord
}

/// Route for `(hub, a_i)`, `2 ≤ i ≤ p-1`. Starts at the hub, ends `a_i`.
fn odd_va(c: &Cols, i: usize) -> Vec<usize> {
    let p = c.p;
    debug_assert!((2..=p - 1).contains(&i));
    let mut ord = Vec::with_capacity(2 * p + 1);
    ord.push(c.hub());
    let mut s = if (p - i - 1).is_multiple_of(2) { Side::A } else { Side::B };
    for k in ((i + 1)..=p).rev() {
        ord.push(c.at(k, s));
        ord.push(c.at(k, s.flip()));
        s = s.flip();
    }
    for k in (1..=i).rev() {
        ord.push(c.b(k));
    }
    for k in 1..=i {
        ord.push(c.a(k));
    }
    ord
}

fn odd_swap(p: usize, v: usize) -> usize {
    if v == 2 * p {
        v
    } else if v < p {
        v + p
    } else {
        v - p
    }
}

/// Witness order for any non-edge `(x, y)` of the odd ladder, `x < y`.
fn odd_witness(p: usize, x: usize, y: usize) -> Vec<usize> {
    let c = Cols { p };
    let hub = 2 * p;
    let (ord, swap) = if y == hub {
        if x < p {
            (odd_va(&c, x + 1), false)
        } else {
            (odd_va(&c, x - p + 1), true)
        }
    } else if y < p {
        (odd_aa(&c, x + 1, y + 1), false)
    } else if x >= p {
        (odd_aa(&c, x - p + 1, y - p + 1), true)
    } else {
        let (i, j) = (x + 1, y - p + 1);
        if i < j {
            (odd_ab(&c, i, j), false)
        } else {
            (odd_ab(&c, j, i), true)
        }
    };
    if swap {
        ord.into_iter().map(|v| odd_swap(p, v)).collect()
    } else {
        ord
    }
}

/// Closed-form Hamiltonian cycle through a ladder non-edge. `O(n)`, no
/// search. Tiny kinds have no template; use the oracle for those.
pub fn template_witness(fam: &FamilyGraph, e: NonEdge) -> Result<CycleWitness> {
    let lab = fam.labeling;
    if !lab.is_ladder() {
        return Err(Error::NoTemplate);
    }
    let n = fam.n();
    if e.u() >= n || e.v() >= n {
        return Err(Error::VertexOutOfRange {
            v: e.u().max(e.v()),
            n,
        });
    }
    if fam.is_edge(e.u(), e.v()) {
        return Err(Error::AlreadyEdge { u: e.u(), v: e.v() });
    }
    let order = match lab.kind {
        FamilyKind::EvenLadder => even_witness(lab.p, e.u(), e.v()),
        FamilyKind::OddLadder => odd_witness(lab.p, e.u(), e.v()),
        _ => unreachable!(),
    };
    let w = CycleWitness { through: e, order };
    debug_assert!(fam.validate_witness(&w), "template broke for {e}");
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn exp_h_table() {
        assert_eq!(exp_h(2), Err(Error::OrderTooSmall { n: 2, min: 3 }));
        let want = [
            (3, 2),
            (4, 4),
            (5, 6),
            (6, 9),
            (7, 11),
            (8, 12),
            (9, 14),
            (10, 15),
            (11, 17),
            (12, 18),
            (100, 150),
            (101, 152),
        ];
        for (n, m) in want {
            assert_eq!(exp_h(n).unwrap(), m, "n={n}");
        }
    }

    #[test]
    fn build_sizes_and_degrees() {
        for n in 3..=40 {
            let fam = build_minimum(n).unwrap();
            assert_eq!(fam.n(), n);
            assert_eq!(fam.m(), exp_h(n).unwrap(), "n={n}");
        }
        // even ladders are cubic
        let g8 = build_even(4).unwrap();
        assert!(g8.degrees().iter().all(|&d| d == 3));
        // odd ladders: hub has degree 4, everything else 3
        let g9 = build_odd(4).unwrap();
        let d = g9.degrees();
        assert_eq!(d[8], 4);
        assert!(d[..8].iter().all(|&d| d == 3));
    }

    #[test]
    fn build_preconditions() {
        assert!(matches!(
            build_minimum(2),
            Err(Error::OrderTooSmall { n: 2, min: 3 })
        ));
        assert!(matches!(
            build_even(3),
            Err(Error::HalfSizeTooSmall { p: 3, min: 4 })
        ));
        assert!(matches!(
            build_odd(2),
            Err(Error::HalfSizeTooSmall { p: 2, min: 3 })
        ));
    }

    #[test]
    fn even_edge_inventory() {
        let g = build_even(4).unwrap();
        let lab = *g.labeling();
        // crossings present, end rungs absent
        assert!(g.is_edge(lab.a(1), lab.b(4)));
        assert!(g.is_edge(lab.a(4), lab.b(1)));
        assert!(!g.is_edge(lab.a(1), lab.b(1)));
        assert!(!g.is_edge(lab.a(4), lab.b(4)));
        assert!(g.is_edge(lab.a(2), lab.b(2)));
        assert!(g.is_edge(lab.a(1), lab.a(4))); // rail closes
    }

    #[test]
    fn odd_edge_inventory() {
        let g = build_odd(3).unwrap();
        let lab = *g.labeling();
        let hub = lab.hub().unwrap();
        assert_eq!(hub, 6);
        for k in 1..=3 {
            assert!(g.is_edge(lab.a(k), lab.b(k)));
        }
        assert!(g.is_edge(lab.a(1), hub));
        assert!(g.is_edge(lab.b(3), hub));
        assert!(!g.is_edge(lab.a(2), hub));
        assert!(!g.is_edge(lab.a(1), lab.a(3))); // rails are paths
    }

    #[test]
    fn golden_witness_orders() {
        // Pinned routes; any change to the walkers must be deliberate.
        let g8 = build_even(4).unwrap();
        let w = template_witness(&g8, NonEdge::new(0, 4).unwrap()).unwrap();
        assert_eq!(w.order, vec![0, 7, 6, 5, 1, 2, 3, 4]); // (a1, b1)
        let w = template_witness(&g8, NonEdge::new(0, 2).unwrap()).unwrap();
        assert_eq!(w.order, vec![2, 1, 5, 6, 7, 4, 3, 0]); // (a1, a3)
        let w = template_witness(&g8, NonEdge::new(1, 6).unwrap()).unwrap();
        assert_eq!(w.order, vec![6, 2, 3, 0, 7, 4, 5, 1]); // (a2, b3)

        let g7 = build_odd(3).unwrap();
        let w = template_witness(&g7, NonEdge::new(0, 2).unwrap()).unwrap();
        assert_eq!(w.order, vec![0, 1, 4, 3, 6, 5, 2]); // (a1, a3)

        let g10 = build_even(5).unwrap();
        let w = template_witness(&g10, NonEdge::new(0, 2).unwrap()).unwrap();
        assert_eq!(w.order, vec![2, 1, 6, 7, 8, 3, 4, 5, 9, 0]); // (a1, a3)
    }

    #[test]
    fn symmetries_are_automorphisms() {
        for p in [4usize, 5, 6, 7] {
            let g = build_even(p).unwrap();
            for sym in [EvenSym::Rev, EvenSym::Swap, EvenSym::RevSwap] {
                for &(x, y) in g.edges() {
                    let (x2, y2) = (even_apply(sym, p, x), even_apply(sym, p, y));
                    assert!(g.is_edge(x2, y2), "p={p} edge {x}-{y}");
                }
            }
        }
        for p in [3usize, 4, 5] {
            let g = build_odd(p).unwrap();
            for &(x, y) in g.edges() {
                assert!(g.is_edge(odd_swap(p, x), odd_swap(p, y)), "p={p} {x}-{y}");
            }
        }
    }

    #[test]
    fn templates_cover_every_nonedge_small() {
        for n in 7..=16 {
            let fam = build_minimum(n).unwrap();
            let g = fam.to_graph().unwrap();
            for e in fam.non_edges() {
                let w = template_witness(&fam, e).unwrap();
                assert_eq!(w.through, e);
                assert!(fam.validate_witness(&w), "n={n} e={e}");
                // cross-check the structural validator against the bitset one
                assert!(oracle::validate_witness(&g, &w), "n={n} e={e}");
            }
        }
    }

    #[test]
    fn template_works_past_bitset_range() {
        let fam = build_minimum(101).unwrap();
        assert!(fam.to_graph().is_err());
        for e in [
            NonEdge::new(0, 30).unwrap(),  // a1-a31
            NonEdge::new(1, 100).unwrap(), // a2-hub
            NonEdge::new(17, 68).unwrap(), // a18-b19
            NonEdge::new(49, 98).unwrap(), // a50-b49
            NonEdge::new(60, 80).unwrap(), // b11-b31
        ] {
            let w = template_witness(&fam, e).unwrap();
            assert!(fam.validate_witness(&w), "e={e}");
        }
    }

    #[test]
    fn template_error_paths() {
        let tiny = build_minimum(5).unwrap();
        assert_eq!(
            template_witness(&tiny, NonEdge::new(0, 3).unwrap()),
            Err(Error::NoTemplate)
        );
        let g8 = build_even(4).unwrap();
        assert_eq!(
            template_witness(&g8, NonEdge::new(0, 1).unwrap()),
            Err(Error::AlreadyEdge { u: 0, v: 1 })
        );
        assert_eq!(
            template_witness(&g8, NonEdge::new(0, 8).unwrap()),
            Err(Error::VertexOutOfRange { v: 8, n: 8 })
        );
    }

    #[test]
    fn vertex_names() {
        let g9 = build_odd(4).unwrap();
        let lab = g9.labeling();
        assert_eq!(lab.vertex_name(0), "a1");
        assert_eq!(lab.vertex_name(3), "a4");
        assert_eq!(lab.vertex_name(4), "b1");
        assert_eq!(lab.vertex_name(8), "v");
        let tiny = build_minimum(4).unwrap();
        assert_eq!(tiny.labeling().vertex_name(2), "v2");
    }

    #[test]
    fn family_graph_plumbing() {
        let fam = build_minimum(8).unwrap();
        let wire = fam.to_json();
        assert_eq!(wire.n, 8);
        assert_eq!(wire.edges.len(), 12);
        let mut sorted = wire.edges.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, wire.edges);
        assert_eq!(
            fam.non_edges().len() + fam.m(),
            8 * 7 / 2
        );
    }
}
