//! Structural rejection rules for the lower-bound search.
//!
//! Each filter recognizes a local configuration that is incompatible with
//! expandability — most name a concrete non-edge that provably cannot lie
//! on any Hamiltonian cycle, so rejection is sound for every edge budget.
//! The last rule additionally assumes the budget is below `⌈3n/2⌉`, which
//! is exactly the regime the exhaustive search runs in. Scan order is
//! deterministic (ascending vertex labels), so verdicts are reproducible.

use crate::graph::{mask_all, Graph, NonEdge};
use crate::{Error, Result};

/// Which rule rejected a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FilterReason {
    PendantNonedge,
    Deg2OpenNeighborhood,
    Deg2Deg3Distinct,
    Deg2Deg3Shared,
    SharedNeighborTwoDeg2,
}

impl FilterReason {
    pub const ALL: [FilterReason; 5] = [
        FilterReason::PendantNonedge,
        FilterReason::Deg2OpenNeighborhood,
        FilterReason::Deg2Deg3Distinct,
        FilterReason::Deg2Deg3Shared,
        FilterReason::SharedNeighborTwoDeg2,
    ];

    /// Stable key used in certificates and reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            FilterReason::PendantNonedge => "pendant_nonedge",
            FilterReason::Deg2OpenNeighborhood => "deg2_open_neighborhood",
            FilterReason::Deg2Deg3Distinct => "deg2_deg3_distinct",
            FilterReason::Deg2Deg3Shared => "deg2_deg3_shared",
            FilterReason::SharedNeighborTwoDeg2 => "shared_neighbor_two_deg2",
        }
    }
}

impl std::fmt::Display for FilterReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a filter: either a pass, or a rejection with the rule that
/// fired and (when the rule is witness-producing) a non-edge that provably
/// does not extend.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FilterVerdict {
    reason: Option<FilterReason>,
    witness_nonedge: Option<NonEdge>,
}

impl FilterVerdict {
    pub fn pass() -> Self {
        FilterVerdict {
            reason: None,
            witness_nonedge: None,
        }
    }

    fn reject(reason: FilterReason, witness: Option<NonEdge>) -> Self {
        FilterVerdict {
            reason: Some(reason),
            witness_nonedge: witness,
        }
    }

    pub fn rejected(&self) -> bool {
        self.reason.is_some()
    }

    pub fn reason(&self) -> Option<FilterReason> {
        self.reason
    }

    /// A non-edge the rejected graph cannot extend, when the rule names one.
    pub fn witness_nonedge(&self) -> Option<NonEdge> {
        self.witness_nonedge
    }
}

fn require_order(g: &Graph, min: usize) -> Result<()> {
    if g.n() < min {
        return Err(Error::OrderTooSmall { n: g.n(), min });
    }
    Ok(())
}

/// Degree-two neighborhoods, smaller endpoint first. Helper for the scans.
fn two_neighbors(g: &Graph, v: usize) -> (usize, usize) {
    let nb = g.neighbors(v);
    debug_assert_eq!(nb.count_ones(), 2);
    let u1 = nb.trailing_zeros() as usize;
    let u2 = (nb & (nb - 1)).trailing_zeros() as usize;
    (u1, u2)
}

/// Rejects when some vertex `w` has degree ≤ 1 and a non-edge avoids `w`.
///
/// A Hamiltonian cycle through that non-edge would still have to pass `w`
/// with both cycle edges drawn from the graph, impossible at degree ≤ 1.
/// Requires `n ≥ 4`.
pub fn pendant_filter(g: &Graph) -> Result<FilterVerdict> {
    require_order(g, 4)?;
    let n = g.n();
    let full = mask_all(n);
    for w in 0..n {
        if g.degree(w) > 1 {
            continue;
        }
        for x in 0..n {
            if x == w {
                continue;
            }
            let missing = full & !g.neighbors(x) & !mask_all(x + 1) & !(1 << w);
            if missing != 0 {
                let y = missing.trailing_zeros() as usize;
                return Ok(FilterVerdict::reject(
                    FilterReason::PendantNonedge,
                    Some(NonEdge::new(x, y).expect("x < y")),
                ));
            }
        }
    }
    Ok(FilterVerdict::pass())
}

/// Rejects when some degree-2 vertex `v` has non-adjacent neighbors
/// `u_1, u_2`.
///
/// A Hamiltonian cycle through `u_1 u_2` must also use both of `v`'s edges
/// `v u_1`, `v u_2`, closing a triangle — a 3-cycle is Hamiltonian only at
/// `n = 3`. Requires `n ≥ 4`.
pub fn deg2_open_filter(g: &Graph) -> Result<FilterVerdict> {
    require_order(g, 4)?;
    for v in 0..g.n() {
        if g.degree(v) != 2 {
            continue;
        }
        let (u1, u2) = two_neighbors(g, v);
        if !g.has_edge(u1, u2) {
            return Ok(FilterVerdict::reject(
                FilterReason::Deg2OpenNeighborhood,
                Some(NonEdge::new(u1, u2).expect("distinct")),
            ));
        }
    }
    Ok(FilterVerdict::pass())
}

/// Rejects when a degree-2 vertex `v` sits in a triangle `v u_1 u_2` with
/// both `u_i` of degree 3.
///
/// Let `v_i` be `u_i`'s third neighbor. Forcing both of `v`'s edges into a
/// hypothetical cycle pins down the cycle edges at `u_1` and `u_2`, and
/// either choice of extending non-edge (`u_1 v_2` when `v_1 ≠ v_2`, `v v_1`
/// when `v_1 = v_2`) closes a 4-cycle — impossible at `n ≥ 7`.
pub fn deg2_deg3_filter(g: &Graph) -> Result<FilterVerdict> {
    require_order(g, 7)?;
    for v in 0..g.n() {
        if g.degree(v) != 2 {
            continue;
        }
        let (u1, u2) = two_neighbors(g, v);
        if !g.has_edge(u1, u2) || g.degree(u1) != 3 || g.degree(u2) != 3 {
            continue;
        }
        let v1 = (g.neighbors(u1) & !(1 << v) & !(1 << u2)).trailing_zeros() as usize;
        let v2 = (g.neighbors(u2) & !(1 << v) & !(1 << u1)).trailing_zeros() as usize;
        if v1 != v2 {
            return Ok(FilterVerdict::reject(
                FilterReason::Deg2Deg3Distinct,
                Some(NonEdge::new(u1, v2).expect("distinct")),
            ));
        }
        return Ok(FilterVerdict::reject(
            FilterReason::Deg2Deg3Shared,
            Some(NonEdge::new(v, v1).expect("distinct")),
        ));
    }
    Ok(FilterVerdict::pass())
}

/// Rejects when two degree-2 vertices share a neighbor. No witness
/// non-edge: the rule comes from the counting argument behind the `⌈3n/2⌉`
/// bound, so it is only sound for budgets strictly below that bound and
/// `n ≥ 7`; both are enforced.
pub fn shared_neighbor_filter(g: &Graph, m_budget: usize) -> Result<FilterVerdict> {
    require_order(g, 7)?;
    let threshold = (3 * g.n()).div_ceil(2);
    if m_budget >= threshold {
        return Err(Error::BudgetTooHigh {
            m_budget,
            threshold,
        });
    }
    let mut seen = 0u64;
    for v in 0..g.n() {
        if g.degree(v) != 2 {
            continue;
        }
        if g.neighbors(v) & seen != 0 {
            return Ok(FilterVerdict::reject(
                FilterReason::SharedNeighborTwoDeg2,
                None,
            ));
        }
        seen |= g.neighbors(v);
    }
    Ok(FilterVerdict::pass())
}

/// Runs every filter whose preconditions hold, in the fixed order pendant,
/// open-neighborhood, triangle-degree-3, shared-neighbor; the first
/// rejection wins. Requires `n ≥ 4`.
pub fn apply_filters(g: &Graph, m_budget: usize) -> Result<FilterVerdict> {
    require_order(g, 4)?;
    let v = pendant_filter(g)?;
    if v.rejected() {
        return Ok(v);
    }
    let v = deg2_open_filter(g)?;
    if v.rejected() {
        return Ok(v);
    }
    if g.n() >= 7 {
        let v = deg2_deg3_filter(g)?;
        if v.rejected() {
            return Ok(v);
        }
        if m_budget < (3 * g.n()).div_ceil(2) {
            let v = shared_neighbor_filter(g, m_budget)?;
            if v.rejected() {
                return Ok(v);
            }
        }
    }
    Ok(FilterVerdict::pass())
}
