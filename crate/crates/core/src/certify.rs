//! Exhaustive lower-bound certification.
//!
//! To certify that `exp_h(n)` is exact, two things are established and
//! recorded in a [`Certificate`]:
//!
//! * **Upper bound** — the constructed minimum graph, with one validated
//!   Hamiltonian-cycle witness per non-edge.
//! * **Lower bound** — every graph with one edge fewer is *not* expandable.
//!   Edge sets are enumerated in colexicographic order (so the space shards
//!   into contiguous rank ranges for threading), cheap structural filters
//!   reject most candidates with a named reason, and the exact oracle
//!   settles the rest. One edge count suffices: expandability is monotone
//!   under adding edges, so an expandable graph below `exp_h(n) - 1` edges
//!   could be topped up to one with exactly that many.
//!
//! A certificate is self-contained: [`verify_certificate`] re-checks every
//! claim that doesn't require redoing the search (witness validity,
//! coverage, counts, totals) without trusting the producer.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::constructions;
use crate::filters::{self, FilterReason};
use crate::graph::{bits, Graph, GraphJson};
use crate::oracle::{self, CycleWitness};
use crate::{Error, NonEdge, Result};

/// Hard ceiling for exhaustive work: `C(45, m)` edge sets is already the
/// practical limit, and the canonical-form search assumes small `n` too.
pub const MAX_ENUM_VERTICES: usize = 10;

/// Orders whose certification is quick enough to run casually; 9 and 10
/// need an explicit opt-in.
pub const MAX_CASUAL_VERTICES: usize = 8;

const SPOT_CHECK_DENOM: u64 = 100;

// ---------------------------------------------------------------------------
// Binomials and the colex cursor.
// ---------------------------------------------------------------------------

const N_BINOM: usize = 46;

static BINOM: [[u64; N_BINOM]; N_BINOM] = {
    let mut t = [[0u64; N_BINOM]; N_BINOM];
    let mut a = 0;
    while a < N_BINOM {
        t[a][0] = 1;
        let mut b = 1;
        while b <= a {
            t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
            b += 1;
        }
        a += 1;
    }
    t
};

/// `C(a, b)` for `a ≤ 45`.
pub fn binom(a: usize, b: usize) -> u64 {
    debug_assert!(a < N_BINOM);
    if b > a {
        0
    } else {
        BINOM[a][b]
    }
}

/// Pair decoding for edge slots: slot `v(v-1)/2 + u` is the pair `(u, v)`,
/// `u < v`. Slot order is colex order on pairs.
fn slot_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Position in the colexicographic enumeration of `m`-edge graphs on `n`
/// vertices.
///
/// A state is an ascending list of `m` edge slots. Rank `r` and state are
/// interconvertible (`rank = Σ C(slot_i, i)` over 1-based `i`), which is
/// what makes contiguous rank ranges addressable shards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationCursor {
    n: usize,
    m: usize,
    slots: usize,
    combo: Vec<usize>,
    rank: u64,
}

impl EnumerationCursor {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        Self::at_rank(n, m, 0)
    }

    /// Cursor positioned at `rank` (colex unranking).
    pub fn at_rank(n: usize, m: usize, rank: u64) -> Result<Self> {
        if n == 0 || n > MAX_ENUM_VERTICES {
            return Err(Error::EnumTooLarge {
                n,
                max: MAX_ENUM_VERTICES,
            });
        }
        let slots = n * (n - 1) / 2;
        if m > slots {
            return Err(Error::TooManyEdges { m, slots });
        }
        let total = binom(slots, m);
        if rank >= total {
            return Err(Error::RankOutOfRange { rank, total });
        }
        let mut combo = vec![0usize; m];
        let mut r = rank;
        let mut hi = slots;
        for i in (1..=m).rev() {
            let mut c = hi - 1;
            while binom(c, i) > r {
                c -= 1;
            }
            combo[i - 1] = c;
            r -= binom(c, i);
            hi = c;
        }
        debug_assert_eq!(r, 0);
        Ok(EnumerationCursor {
            n,
            m,
            slots,
            combo,
            rank,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    /// Number of `m`-subsets of the slot space.
    pub fn total(&self) -> u64 {
        binom(self.slots, self.m)
    }

    /// Current edge-slot subset, ascending.
    pub fn combo(&self) -> &[usize] {
        &self.combo
    }

    /// Current subset decoded to vertex pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let pairs = slot_pairs(self.n);
        self.combo.iter().map(|&s| pairs[s]).collect()
    }

    /// Step to the colex successor; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        let m = self.combo.len();
        if m == 0 {
            return false;
        }
        let mut i = 0;
        while i + 1 < m && self.combo[i] + 1 == self.combo[i + 1] {
            i += 1;
        }
        if i + 1 == m && self.combo[i] + 1 >= self.slots {
            return false;
        }
        self.combo[i] += 1;
        for j in 0..i {
            self.combo[j] = j;
        }
        self.rank += 1;
        true
    }
}

// ---------------------------------------------------------------------------
// Canonical forms (small n).
// ---------------------------------------------------------------------------

/// Dense ranks of a value sequence, preserving order.
fn rank_values<T: Ord + Clone>(vals: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = vals.to_vec();
    sorted.sort();
    sorted.dedup();
    vals.iter()
        .map(|v| sorted.binary_search(v).expect("value present"))
        .collect()
}

/// Iterated color refinement: start from degree ranks, re-rank by
/// (own color, sorted neighbor colors) until stable. Label-independent.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut colors = rank_values(&degs);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(g.neighbors(v)).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank_values(&sigs);
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

struct CanonSearch<'g> {
    g: &'g Graph,
    n: usize,
    class_of: Vec<usize>,
    class_at_pos: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    cur: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl CanonSearch<'_> {
    /// Depth-first minimization of the block sequence. `tight` tracks
    /// whether the current prefix equals the best one (enables pruning).
    fn dfs(&mut self, k: usize, tight: bool) {
        if k == self.n {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        for v in 0..self.n {
            if self.used & (1 << v) != 0 || self.class_of[v] != self.class_at_pos[k] {
                continue;
            }
            let mut val = 0u64;
            for j in 0..k {
                val = (val << 1) | u64::from(self.g.has_edge(self.perm[j], v));
            }
            let mut child_tight = tight;
            if k >= 1 {
                if let Some(b) = &self.best {
                    if tight && val > b[k - 1] {
                        continue;
                    }
                    child_tight = tight && val == b[k - 1];
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            if k >= 1 {
                self.cur.push(val);
            }
            self.dfs(k + 1, child_tight);
            if k >= 1 {
                self.cur.pop();
            }
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Minimal block sequence over all labelings compatible with the stable
/// coloring. Block `k` packs the adjacency bits between position `k` and
/// positions `0..k`, earlier positions more significant.
fn canonical_blocks(g: &Graph) -> Result<Vec<u64>> {
    let n = g.n();
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::EnumTooLarge {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    let class_of = refine_colors(g);
    let mut class_at_pos = class_of.clone();
    class_at_pos.sort_unstable();
    let mut search = CanonSearch {
        g,
        n,
        class_of,
        class_at_pos,
        perm: Vec::with_capacity(n),
        used: 0,
        cur: Vec::with_capacity(n.saturating_sub(1)),
        best: None,
    };
    search.dfs(0, true);
    Ok(search.best.expect("at least one labeling"))
}

fn identity_blocks(g: &Graph) -> Vec<u64> {
    (1..g.n())
        .map(|k| {
            let mut val = 0u64;
            for j in 0..k {
                val = (val << 1) | u64::from(g.has_edge(j, k));
            }
            val
        })
        .collect()
}

fn blocks_to_key(n: usize, blocks: &[u64]) -> Vec<u8> {
    let slots = n * (n - 1) / 2;
    let mut key = vec![0u8; 1 + slots.div_ceil(8)];
    key[0] = n as u8;
    let mut t = 0usize;
    for k in 1..n {
        for j in 0..k {
            if (blocks[k - 1] >> (k - 1 - j)) & 1 != 0 {
                key[1 + t / 8] |= 1 << (7 - t % 8);
            }
            t += 1;
        }
    }
    key
}

/// Isomorphism-complete key for graphs on at most 10 vertices: equal keys
/// if and only if isomorphic. Built by branch-and-bound over labelings
/// compatible with an iterated degree refinement.
pub fn canonical_key(g: &Graph) -> Result<Vec<u8>> {
    Ok(blocks_to_key(g.n(), &canonical_blocks(g)?))
}

/// True when the graph's own labeling already attains its canonical key;
/// exactly one labeled copy per isomorphism class qualifies.
pub fn is_canonical_labeling(g: &Graph) -> Result<bool> {
    Ok(canonical_blocks(g)? == identity_blocks(g))
}

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

/// Deduplication policy for the search space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DedupMode {
    /// Every labeled edge set is its own candidate.
    Labeled,
    /// Only canonically-labeled representatives are visited.
    Canonical,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub dedup: DedupMode,
    /// Run the structural filters (sound only in the below-bound regime).
    pub use_filters: bool,
    /// When set, roughly 1% of filter-rejected graphs (chosen by a mix of
    /// this seed with the rank, so the sample is shard-independent) are
    /// re-tested with the oracle; any disagreement aborts the enumeration.
    pub spot_check_seed: Option<u64>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            dedup: DedupMode::Labeled,
            use_filters: false,
            spot_check_seed: None,
        }
    }
}

/// Counters from one enumeration pass. All bookkeeping is exact:
/// `examined = skipped_noncanonical + rejections + visited`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumSummary {
    /// Labeled edge sets decoded in the requested range.
    pub examined: u64,
    /// Dropped by canonical dedup (zero in labeled mode).
    pub skipped_noncanonical: u64,
    /// Filter rejections by rule.
    pub filtered: BTreeMap<FilterReason, u64>,
    /// Graphs handed to the visitor.
    pub visited: u64,
    /// Filter rejections re-confirmed against the oracle.
    pub spot_checked: u64,
}

impl EnumSummary {
    pub fn filtered_total(&self) -> u64 {
        self.filtered.values().sum()
    }

    fn absorb(&mut self, other: EnumSummary) {
        self.examined += other.examined;
        self.skipped_noncanonical += other.skipped_noncanonical;
        self.visited += other.visited;
        self.spot_checked += other.spot_checked;
        for (k, v) in other.filtered {
            *self.filtered.entry(k).or_insert(0) += v;
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Visits every `m`-edge graph on `n` labeled vertices whose rank lies in
/// `range` (default: all of them), in rank order. Candidates removed by
/// dedup or filters are counted, not visited. The visitor receives the
/// rank and the decoded graph.
pub fn enumerate_graphs<F>(
    n: usize,
    m: usize,
    opts: EnumOptions,
    range: Option<(u64, u64)>,
    mut visitor: F,
) -> Result<EnumSummary>
where
    F: FnMut(u64, &Graph),
{
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(Error::EnumTooLarge {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    let slots = n * (n - 1) / 2;
    if m > slots {
        return Err(Error::TooManyEdges { m, slots });
    }
    let total = binom(slots, m);
    let (lo, hi) = range.unwrap_or((0, total));
    if lo > hi || hi > total {
        return Err(Error::RankOutOfRange {
            rank: lo.max(hi),
            total,
        });
    }
    let mut summary = EnumSummary::default();
    if lo == hi {
        return Ok(summary);
    }
    let pairs = slot_pairs(n);
    let mut cursor = EnumerationCursor::at_rank(n, m, lo)?;
    loop {
        let rank = cursor.rank();
        if rank >= hi {
            break;
        }
        let mut adj = vec![0u64; n];
        for &s in cursor.combo() {
            let (u, v) = pairs[s];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph::from_adj(n, adj);
        summary.examined += 1;

        let mut keep = true;
        if opts.dedup == DedupMode::Canonical && !is_canonical_labeling(&g)? {
            summary.skipped_noncanonical += 1;
            keep = false;
        }
        if keep && opts.use_filters && n >= 4 {
            let verdict = filters::apply_filters(&g, m)?;
            if let Some(reason) = verdict.reason() {
                *summary.filtered.entry(reason).or_insert(0) += 1;
                keep = false;
                if let Some(seed) = opts.spot_check_seed {
                    if splitmix64(seed ^ rank).is_multiple_of(SPOT_CHECK_DENOM) {
                        summary.spot_checked += 1;
                        let witness_extends = match verdict.witness_nonedge() {
                            Some(e) => oracle::ham_cycle_containing(&g, e)?.is_some(),
                            None => false,
                        };
                        if witness_extends || oracle::is_expandable(&g) {
                            return Err(Error::FilterOracleDisagreement { n, m, rank });
                        }
                    }
                }
            }
        }
        if keep {
            summary.visited += 1;
            visitor(rank, &g);
        }
        if !cursor.advance() {
            break;
        }
    }
    Ok(summary)
}

// ---------------------------------------------------------------------------
// Certificates.
// ---------------------------------------------------------------------------

/// One Hamiltonian-cycle witness in wire form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub through: [usize; 2],
    pub order: Vec<usize>,
}

/// The constructed minimum graph plus a witness per non-edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperWitness {
    pub graph: GraphJson,
    pub witnesses: Vec<WitnessJson>,
}

/// Outcome of the exhaustive search one edge below the claimed minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    /// Edge count searched (`claimed_m - 1`).
    pub m: usize,
    /// Candidates after dedup; equals `C(n(n-1)/2, m)` in labeled mode.
    pub total: u64,
    /// Rejections by reason, including `disconnected`.
    pub filtered: BTreeMap<String, u64>,
    /// Connected candidates the oracle proved non-expandable.
    pub oracle_rejected: u64,
    /// Expandable graphs found below the claimed minimum — must be zero.
    pub survivors: u64,
    /// The survivors themselves, when any exist.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<GraphJson>,
}

/// Machine-checkable record that `exp_h(n) = claimed_m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub claimed_m: usize,
    pub upper: UpperWitness,
    pub lower: LowerBound,
    pub dedup: DedupMode,
    pub runtime_seconds: f64,
    pub toolchain: String,
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    /// Worker threads for the lower-bound sweep.
    pub jobs: usize,
    pub dedup: DedupMode,
    /// Unlocks n = 9, 10 (hours of CPU, not minutes).
    pub allow_long_run: bool,
    /// Seed for the 1% filter spot-check.
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            jobs: 1,
            dedup: DedupMode::Labeled,
            allow_long_run: false,
            seed: 0x5EED,
        }
    }
}

/// Builds and checks both bounds for one order. Deterministic for a fixed
/// `(n, dedup, seed)` triple — thread count only changes wall time.
pub fn certify(n: usize, opts: CertifyOptions) -> Result<Certificate> {
    let start = Instant::now();
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    if n > MAX_ENUM_VERTICES {
        return Err(Error::EnumTooLarge {
            n,
            max: MAX_ENUM_VERTICES,
        });
    }
    if n > MAX_CASUAL_VERTICES && !opts.allow_long_run {
        return Err(Error::LongRunRequired(n));
    }
    let claimed_m = constructions::exp_h(n)?;

    // Upper bound: construct, then let the oracle witness every non-edge.
    let fam = constructions::build_minimum(n)?;
    let g = fam.to_graph()?;
    debug_assert_eq!(g.m(), claimed_m);
    let report = oracle::expandability_report(&g);
    if !report.expandable {
        return Err(Error::UpperWitnessFailed(n));
    }
    let witnesses = report
        .entries
        .iter()
        .map(|(e, w)| {
            let w = w.as_ref().expect("expandable graph has all witnesses");
            WitnessJson {
                through: [e.u(), e.v()],
                order: w.order.clone(),
            }
        })
        .collect();
    let upper = UpperWitness {
        graph: g.to_json(),
        witnesses,
    };

    // Lower bound: sweep every graph one edge short of the claim.
    let m_low = claimed_m - 1;
    let slots = n * (n - 1) / 2;
    let grand_total = binom(slots, m_low);
    let jobs = opts.jobs.max(1).min(grand_total.max(1) as usize);
    let enum_opts = EnumOptions {
        dedup: opts.dedup,
        use_filters: n >= 7,
        spot_check_seed: (n >= 7).then_some(opts.seed),
    };

    struct Shard {
        summary: EnumSummary,
        disconnected: u64,
        oracle_rejected: u64,
        survivors: Vec<GraphJson>,
    }

    let mut ranges = Vec::with_capacity(jobs);
    let per = grand_total / jobs as u64;
    let rem = grand_total % jobs as u64;
    let mut lo = 0u64;
    for k in 0..jobs as u64 {
        let hi = lo + per + u64::from(k < rem);
        ranges.push((lo, hi));
        lo = hi;
    }

    let shard_results: Vec<Result<Shard>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                scope.spawn(move || -> Result<Shard> {
                    let mut disconnected = 0u64;
                    let mut oracle_rejected = 0u64;
                    let mut survivors = Vec::new();
                    let summary =
                        enumerate_graphs(n, m_low, enum_opts, Some((lo, hi)), |_, g| {
                            // a graph with a non-edge can only be expandable
                            // if some Hamiltonian path exists, so it must be
                            // connected
                            if !g.is_connected() {
                                disconnected += 1;
                            } else if oracle::is_expandable(g) {
                                survivors.push(g.to_json());
                            } else {
                                oracle_rejected += 1;
                            }
                        })?;
                    Ok(Shard {
                        summary,
                        disconnected,
                        oracle_rejected,
                        survivors,
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("certification shard panicked"))
            .collect()
    });

    let mut summary = EnumSummary::default();
    let mut disconnected = 0u64;
    let mut oracle_rejected = 0u64;
    let mut counterexamples = Vec::new();
    for shard in shard_results {
        let shard = shard?;
        summary.absorb(shard.summary);
        disconnected += shard.disconnected;
        oracle_rejected += shard.oracle_rejected;
        counterexamples.extend(shard.survivors);
    }
    debug_assert_eq!(summary.examined, grand_total);

    let mut filtered: BTreeMap<String, u64> = summary
        .filtered
        .iter()
        .map(|(k, &v)| (k.as_str().to_string(), v))
        .collect();
    if disconnected > 0 {
        filtered.insert("disconnected".to_string(), disconnected);
    }
    let lower = LowerBound {
        m: m_low,
        total: summary.examined - summary.skipped_noncanonical,
        survivors: counterexamples.len() as u64,
        filtered,
        oracle_rejected,
        counterexamples,
    };

    Ok(Certificate {
        n,
        claimed_m,
        upper,
        lower,
        dedup: opts.dedup,
        runtime_seconds: start.elapsed().as_secs_f64(),
        toolchain: format!("hamex {}", env!("CARGO_PKG_VERSION")),
    })
}

/// Result of re-checking a certificate. `ok` exactly when `reasons` is
/// empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertCheck {
    pub ok: bool,
    pub reasons: Vec<String>,
}

/// Re-validates everything in a certificate that can be checked without
/// redoing the exhaustive sweep: the claimed value, the upper graph and
/// all its witnesses, non-edge coverage, and the lower-bound arithmetic.
pub fn verify_certificate(cert: &Certificate) -> CertCheck {
    let mut reasons = Vec::new();

    match constructions::exp_h(cert.n) {
        Ok(m) if m == cert.claimed_m => {}
        Ok(m) => reasons.push(format!(
            "claimed_m is {} but the formula gives {} at n = {}",
            cert.claimed_m, m, cert.n
        )),
        Err(e) => reasons.push(format!("bad order: {e}")),
    }

    match Graph::from_json(&cert.upper.graph) {
        Err(e) => reasons.push(format!("upper graph unreadable: {e}")),
        Ok(g) => {
            if g.n() != cert.n {
                reasons.push(format!("upper graph has {} vertices, not {}", g.n(), cert.n));
            }
            if g.m() != cert.claimed_m {
                reasons.push(format!(
                    "upper graph has {} edges, claimed_m is {}",
                    g.m(),
                    cert.claimed_m
                ));
            }
            let mut covered: Vec<[usize; 2]> = Vec::new();
            for (i, w) in cert.upper.witnesses.iter().enumerate() {
                match NonEdge::new(w.through[0], w.through[1]) {
                    Err(e) => reasons.push(format!("witness {i}: bad pair: {e}")),
                    Ok(e) => {
                        covered.push([e.u(), e.v()]);
                        let cw = CycleWitness {
                            through: e,
                            order: w.order.clone(),
                        };
                        if !oracle::validate_witness(&g, &cw) {
                            reasons.push(format!(
                                "witness {i} (through {}-{}) is not a Hamiltonian cycle \
                                 through its non-edge",
                                e.u(),
                                e.v()
                            ));
                        }
                    }
                }
            }
            covered.sort_unstable();
            covered.dedup();
            let wanted: Vec<[usize; 2]> = g.non_edges().iter().map(|e| [e.u(), e.v()]).collect();
            if covered != wanted {
                reasons.push(format!(
                    "witnesses cover {} non-edges, graph has {}",
                    covered.len(),
                    wanted.len()
                ));
            }
        }
    }

    if cert.lower.m + 1 != cert.claimed_m {
        reasons.push(format!(
            "lower bound searched m = {}, expected claimed_m - 1 = {}",
            cert.lower.m,
            cert.claimed_m.saturating_sub(1)
        ));
    }
    if cert.n <= MAX_ENUM_VERTICES {
        let slots = cert.n * cert.n.saturating_sub(1) / 2;
        if cert.dedup == DedupMode::Labeled {
            let expected = binom(slots, cert.lower.m.min(slots));
            if cert.lower.m > slots || cert.lower.total != expected {
                reasons.push(format!(
                    "lower.total is {}, but there are {} labeled edge sets",
                    cert.lower.total, expected
                ));
            }
        }
    } else {
        reasons.push(format!(
            "order {} is beyond the checkable enumeration range",
            cert.n
        ));
    }
    let accounted: u64 = cert.lower.filtered.values().sum::<u64>()
        + cert.lower.oracle_rejected
        + cert.lower.survivors;
    if accounted != cert.lower.total {
        reasons.push(format!(
            "lower-bound counters sum to {}, total is {}",
            accounted, cert.lower.total
        ));
    }
    if cert.lower.survivors != cert.lower.counterexamples.len() as u64 {
        reasons.push(format!(
            "survivors is {} but {} counterexamples are listed",
            cert.lower.survivors,
            cert.lower.counterexamples.len()
        ));
    }
    if cert.lower.survivors != 0 {
        reasons.push(format!(
            "{} expandable graphs exist below the claimed minimum",
            cert.lower.survivors
        ));
    }

    CertCheck {
        ok: reasons.is_empty(),
        reasons,
    }
}
