//! Exhaustive subset enumeration: the ground truth for every formula.
//!
//! Subsets are visited in reflected Gray-code order. The walker keeps, for
//! every vertex, the number of its neighbours inside the current set `S`;
//! flipping one vertex then updates `|B(S)|` in `O(d(v))`. The top `t`
//! membership bits split the walk into `2^t` independent blocks that run in
//! parallel and are summed at the end, so the result does not depend on the
//! schedule.

use rayon::prelude::*;

use crate::boundary::BoundaryPolynomial;
use crate::error::{Error, Result};
use crate::formulas::TransferVector;
use crate::graph::{bit, iter_bits, Graph};

pub const DEFAULT_ENUMERATION_CAP: usize = 24;
/// Upper bound for the configurable cap.
pub const HARD_ENUMERATION_LIMIT: usize = 30;

/// Below this order the walk runs as a single block on the calling thread.
const PARALLEL_THRESHOLD: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest order accepted for enumeration (clamped to
    /// [`HARD_ENUMERATION_LIMIT`]).
    pub max_n: usize,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_n: DEFAULT_ENUMERATION_CAP,
            threads: None,
        }
    }
}

impl EnumConfig {
    pub fn with_max_n(max_n: usize) -> Self {
        EnumConfig {
            max_n,
            ..Default::default()
        }
    }

    pub fn cap(&self) -> usize {
        self.max_n.min(HARD_ENUMERATION_LIMIT)
    }

    pub fn check(&self, order: usize) -> Result<()> {
        if order > self.cap() {
            Err(Error::CapExceeded {
                order,
                cap: self.cap(),
            })
        } else {
            Ok(())
        }
    }
}

/// Condition on `N(v) ∩ S` (or on `(S∖{w}) ∩ N(v)` in a two-vertex spec,
/// where `w` is the other constrained vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NeighborCondition {
    Any,
    Empty,
    NonEmpty,
}

impl NeighborCondition {
    #[inline]
    fn admits(self, count: u8) -> bool {
        match self {
            NeighborCondition::Any => true,
            NeighborCondition::Empty => count == 0,
            NeighborCondition::NonEmpty => count != 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexCondition {
    pub vertex: usize,
    /// Required value of `1_S(vertex)`.
    pub member: bool,
    pub neighbors: NeighborCondition,
}

impl VertexCondition {
    pub fn new(vertex: usize, member: bool, neighbors: NeighborCondition) -> Self {
        VertexCondition {
            vertex,
            member,
            neighbors,
        }
    }
}

/// Membership and neighbourhood constraints at up to two marked vertices.
///
/// With one marked vertex `v` the neighbour condition reads `N(v) ∩ S`.
/// With two marked vertices `u`, `v`, the condition at `u` reads
/// `(S∖{v}) ∩ N(u)` and symmetrically at `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RestrictedSpec {
    conditions: Vec<VertexCondition>,
}

impl RestrictedSpec {
    pub fn single(vertex: usize, member: bool, neighbors: NeighborCondition) -> Self {
        RestrictedSpec {
            conditions: vec![VertexCondition::new(vertex, member, neighbors)],
        }
    }

    pub fn pair(first: VertexCondition, second: VertexCondition) -> Result<Self> {
        if first.vertex == second.vertex {
            return Err(Error::InvalidSpec(format!(
                "vertex {} is constrained twice",
                first.vertex
            )));
        }
        Ok(RestrictedSpec {
            conditions: vec![first, second],
        })
    }

    pub fn conditions(&self) -> &[VertexCondition] {
        &self.conditions
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        for c in &self.conditions {
            if c.vertex >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: c.vertex,
                    order: g.order(),
                });
            }
        }
        Ok(())
    }

    #[inline]
    fn admits(&self, g: &Graph, set: u64, counts: &[u8; 64]) -> bool {
        match self.conditions.as_slice() {
            [] => true,
            [c] => {
                (set & bit(c.vertex) != 0) == c.member && c.neighbors.admits(counts[c.vertex])
            }
            [a, b] => {
                let ca = masked_count(g, set, counts, a.vertex, b.vertex);
                let cb = masked_count(g, set, counts, b.vertex, a.vertex);
                (set & bit(a.vertex) != 0) == a.member
                    && (set & bit(b.vertex) != 0) == b.member
                    && a.neighbors.admits(ca)
                    && b.neighbors.admits(cb)
            }
            _ => unreachable!("at most two constrained vertices"),
        }
    }
}

/// `|(S∖{other}) ∩ N(v)|` from the maintained `|S ∩ N(v)|`.
#[inline]
fn masked_count(g: &Graph, set: u64, counts: &[u8; 64], v: usize, other: usize) -> u8 {
    let other_bit = bit(other);
    counts[v] - (set & other_bit != 0 && g.neighbors(v) & other_bit != 0) as u8
}

/// Incremental state of the Gray-code walk.
struct Walker<'g> {
    g: &'g Graph,
    set: u64,
    counts: [u8; 64],
    boundary: u32,
}

impl<'g> Walker<'g> {
    fn new(g: &'g Graph, set: u64) -> Self {
        let mut counts = [0u8; 64];
        for v in 0..g.order() {
            counts[v] = (g.neighbors(v) & set).count_ones() as u8;
        }
        let boundary = g.boundary(set).count_ones();
        Walker {
            g,
            set,
            counts,
            boundary,
        }
    }

    #[inline]
    fn flip(&mut self, v: usize) {
        let b = bit(v);
        let nbrs = self.g.neighbors(v);
        if self.set & b == 0 {
            if self.counts[v] > 0 {
                self.boundary -= 1;
            }
            self.set |= b;
            for w in iter_bits(nbrs) {
                self.counts[w] += 1;
                if self.counts[w] == 1 && self.set & bit(w) == 0 {
                    self.boundary += 1;
                }
            }
        } else {
            self.set &= !b;
            for w in iter_bits(nbrs) {
                self.counts[w] -= 1;
                if self.counts[w] == 0 && self.set & bit(w) == 0 {
                    self.boundary -= 1;
                }
            }
            if self.counts[v] > 0 {
                self.boundary += 1;
            }
        }
    }
}

/// Walks every subset and adds `x^{|B(S)|} y^{|S|}` to the grid of the
/// bucket chosen by `classify` (skipped on `None`). Grids are flat,
/// indexed `j * (n + 1) + i`.
fn enumerate_buckets<F>(g: &Graph, cfg: &EnumConfig, buckets: usize, classify: F) -> Result<Vec<Vec<u64>>>
where
    F: Fn(u64, &[u8; 64]) -> Option<usize> + Sync,
{
    let n = g.order();
    cfg.check(n)?;
    let stride = n + 1;
    let cells = stride * stride;

    let run_block = |prefix: u64, low_bits: usize| -> Vec<Vec<u64>> {
        let mut grids = vec![vec![0u64; cells]; buckets];
        let mut w = Walker::new(g, prefix << low_bits);
        let mut record = |w: &Walker| {
            if let Some(k) = classify(w.set, &w.counts) {
                grids[k][w.set.count_ones() as usize * stride + w.boundary as usize] += 1;
            }
        };
        record(&w);
        for step in 1u64..(1u64 << low_bits) {
            w.flip(step.trailing_zeros() as usize);
            record(&w);
        }
        grids
    };

    if n < PARALLEL_THRESHOLD {
        return Ok(run_block(0, n));
    }

    let run = || {
        let workers = rayon::current_num_threads().max(1);
        let top = ((4 * workers) as f64).log2().ceil() as usize;
        let top = top.clamp(1, n);
        let low = n - top;
        (0..1u64 << top)
            .into_par_iter()
            .map(|p| run_block(p, low))
            .reduce(
                || vec![vec![0u64; cells]; buckets],
                |mut acc, part| {
                    for (a, b) in acc.iter_mut().zip(part) {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                    }
                    acc
                },
            )
    };
    Ok(match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(run),
        None => run(),
    })
}

fn grid_to_poly(n: usize, flat: &[u64]) -> BoundaryPolynomial {
    let rows: Vec<Vec<u64>> = flat.chunks(n + 1).map(|r| r.to_vec()).collect();
    BoundaryPolynomial::from_counts(n, &rows)
}

/// Outer boundary `(∪_{v∈S} N(v)) ∖ S` of a vertex bitset.
pub fn boundary(g: &Graph, set: u64) -> u64 {
    g.boundary(set)
}

pub fn boundary_polynomial(g: &Graph) -> Result<BoundaryPolynomial> {
    boundary_polynomial_with(g, &EnumConfig::default())
}

pub fn boundary_polynomial_with(g: &Graph, cfg: &EnumConfig) -> Result<BoundaryPolynomial> {
    let grids = enumerate_buckets(g, cfg, 1, |_, _| Some(0))?;
    Ok(grid_to_poly(g.order(), &grids[0]))
}

/// Sum of `x^{|B(S)|} y^{|S|}` over the subsets admitted by `spec`.
pub fn restricted_polynomial(g: &Graph, spec: &RestrictedSpec, cfg: &EnumConfig) -> Result<BoundaryPolynomial> {
    spec.validate(g)?;
    let grids = enumerate_buckets(g, cfg, 1, |set, counts| spec.admits(g, set, counts).then_some(0))?;
    Ok(grid_to_poly(g.order(), &grids[0]))
}

/// `(B⁰_{v⁰}, B⁰_{v¹}, B¹_{v⁰}, B¹_{v¹})` at `v`, from one walk.
pub fn restricted_vector(g: &Graph, v: usize, cfg: &EnumConfig) -> Result<TransferVector> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let vb = bit(v);
    let grids = enumerate_buckets(g, cfg, 4, |set, counts| {
        let inside = (set & vb != 0) as usize;
        let dominated = (counts[v] != 0) as usize;
        Some(2 * inside + dominated)
    })?;
    let n = g.order();
    let [a, b, c, d] = [0, 1, 2, 3].map(|k| grid_to_poly(n, &grids[k]).into_poly());
    Ok(TransferVector::new(n, [a, b, c, d]))
}

/// All two-vertex restricted polynomials at `(u, v)`, from one walk.
///
/// The subsets are split into 16 classes by `1_S(u)`, `1_S(v)`, whether
/// `(S∖{v}) ∩ N(u)` is empty and whether `(S∖{u}) ∩ N(v)` is empty; any
/// two-vertex quantity is a sum of classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTable {
    pub u: usize,
    pub v: usize,
    classes: Vec<BoundaryPolynomial>,
}

impl PairTable {
    pub fn compute(g: &Graph, u: usize, v: usize, cfg: &EnumConfig) -> Result<Self> {
        RestrictedSpec::pair(
            VertexCondition::new(u, false, NeighborCondition::Any),
            VertexCondition::new(v, false, NeighborCondition::Any),
        )?
        .validate(g)?;
        let (ub, vb) = (bit(u), bit(v));
        let grids = enumerate_buckets(g, cfg, 16, |set, counts| {
            let u_in = (set & ub != 0) as usize;
            let v_in = (set & vb != 0) as usize;
            let u_empty = (masked_count(g, set, counts, u, v) == 0) as usize;
            let v_empty = (masked_count(g, set, counts, v, u) == 0) as usize;
            Some(u_in | v_in << 1 | u_empty << 2 | v_empty << 3)
        })?;
        let n = g.order();
        Ok(PairTable {
            u,
            v,
            classes: grids.iter().map(|grid| grid_to_poly(n, grid)).collect(),
        })
    }

    /// Sum of the classes matching the given memberships and conditions;
    /// `u_cond` reads `(S∖{v}) ∩ N(u)` and `v_cond` reads `(S∖{u}) ∩ N(v)`.
    pub fn get(
        &self,
        u_member: bool,
        v_member: bool,
        u_cond: NeighborCondition,
        v_cond: NeighborCondition,
    ) -> BoundaryPolynomial {
        let order = self.classes[0].order();
        let mut acc = BoundaryPolynomial::zero(order);
        for (k, class) in self.classes.iter().enumerate() {
            let u_in = k & 1 != 0;
            let v_in = k & 2 != 0;
            let u_count = if k & 4 != 0 { 0 } else { 1 };
            let v_count = if k & 8 != 0 { 0 } else { 1 };
            if u_in == u_member
                && v_in == v_member
                && u_cond.admits(u_count)
                && v_cond.admits(v_count)
            {
                acc = acc.add(class);
            }
        }
        acc
    }

    /// Membership-only quantity `B^{i,j}_{u,v}`.
    pub fn membership(&self, u_member: bool, v_member: bool) -> BoundaryPolynomial {
        self.get(u_member, v_member, NeighborCondition::Any, NeighborCondition::Any)
    }
}
