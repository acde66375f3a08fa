//! Brute-force graph parameters computed straight from the adjacency
//! structure, independent of any polynomial.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{iter_bits, Graph};

/// Largest order accepted by the subset-scanning oracles.
pub const ORACLE_LIMIT: usize = 16;
/// Largest order accepted by the `{0,1,2}`-labelling scan.
pub const ROMAN_LABELING_LIMIT: usize = 10;

fn check(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        Err(Error::CapExceeded {
            order: g.order(),
            cap: limit,
        })
    } else {
        Ok(())
    }
}

fn closed_neighborhood(g: &Graph, set: u64) -> u64 {
    iter_bits(set).fold(set, |acc, v| acc | g.neighbors(v))
}

/// Minimum size of a dominating set.
pub fn oracle_gamma(g: &Graph) -> Result<usize> {
    check(g, ORACLE_LIMIT)?;
    let all = g.vertex_mask();
    Ok((0..=all)
        .filter(|&s| s & !all == 0 && closed_neighborhood(g, s) == all)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

/// `max_S |B(S)| − |S|`.
pub fn oracle_differential(g: &Graph) -> Result<usize> {
    check(g, ORACLE_LIMIT)?;
    let all = g.vertex_mask();
    let best = (0..=all)
        .filter(|&s| s & !all == 0)
        .map(|s| g.boundary(s).count_ones() as i64 - s.count_ones() as i64)
        .max()
        .unwrap_or(0);
    Ok(best as usize)
}

/// Minimum weight of a Roman dominating function, by scanning every
/// labelling `V → {0,1,2}`.
pub fn oracle_roman(g: &Graph) -> Result<usize> {
    check(g, ROMAN_LABELING_LIMIT)?;
    let n = g.order();
    let mut best = usize::MAX;
    let mut label = vec![0u8; n];
    loop {
        let twos = (0..n).filter(|&v| label[v] == 2).fold(0u64, |m, v| m | 1 << v);
        let covered = iter_bits(twos).fold(0u64, |acc, v| acc | g.neighbors(v));
        let valid = (0..n).all(|v| label[v] != 0 || covered >> v & 1 == 1);
        if valid {
            best = best.min(label.iter().map(|&l| l as usize).sum());
        }
        // Base-3 increment.
        let mut k = 0;
        while k < n && label[k] == 2 {
            label[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        label[k] += 1;
    }
    Ok(best)
}

/// Minimum `|C|` such that removing `C` disconnects some component of `g`
/// or leaves it with a single vertex. This is the usual vertex
/// connectivity for connected graphs (`n − 1` for `Kₙ`) and the minimum over
/// components otherwise.
pub fn oracle_kv(g: &Graph) -> Result<usize> {
    check(g, ORACLE_LIMIT)?;
    let all = g.vertex_mask();
    let components = g.connected_components();
    let mut best: Option<usize> = None;
    for cut in 0..=all {
        if cut & !all != 0 {
            continue;
        }
        let size = cut.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        let separates = components.iter().any(|&k| {
            let rest = k & !cut;
            rest.count_ones() == 1 || (rest != 0 && g.count_components_in(rest) > 1)
        });
        if separates {
            best = Some(size);
        }
    }
    Ok(best.unwrap_or(0))
}

/// Checks that `∂`, `γ_R` and `γ` add over components and that the
/// connectivity parameter is the minimum over components, for the disjoint
/// union of `parts`.
pub fn check_component_additivity(parts: &[Graph]) -> Result<bool> {
    let mut union = Graph::empty(0)?;
    for p in parts {
        union = union.disjoint_union(p)?;
    }
    let mut sums = [0usize; 3];
    let mut kv_min = usize::MAX;
    for p in parts {
        sums[0] += oracle_differential(p)?;
        sums[1] += oracle_roman(p)?;
        sums[2] += oracle_gamma(p)?;
        kv_min = kv_min.min(oracle_kv(p)?);
    }
    if parts.is_empty() {
        kv_min = 0;
    }
    Ok(oracle_differential(&union)? == sums[0]
        && oracle_roman(&union)? == sums[1]
        && oracle_gamma(&union)? == sums[2]
        && oracle_kv(&union)? == kv_min)
}

/// Which of the four closed-form join parameter rules hold for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JoinIdentityReport {
    /// `∂(G₁+G₂)` is `n₁+n₂−2` when some `∂(Gᵢ) = nᵢ−2`, else `n₁+n₂−4`.
    pub differential: bool,
    /// `γ_R(G₁+G₂)` is `2` when some `γ_R(Gᵢ) ≤ 2`, else `4`.
    pub roman: bool,
    /// `γ(G₁+G₂)` is `1` when some `γ(Gᵢ) = 1`, else `2`.
    pub gamma: bool,
    /// `k_v(G₁+G₂) = min(k_v(G₁)+n₂, k_v(G₂)+n₁)`.
    pub kv: bool,
}

impl JoinIdentityReport {
    pub fn holds(&self) -> bool {
        self.differential && self.roman && self.gamma && self.kv
    }
}

/// Evaluates each join parameter rule against the oracles on `g1 + g2`.
/// The rules are not identities in general; the report says which ones
/// hold for this pair.
pub fn check_join_identities(g1: &Graph, g2: &Graph) -> Result<JoinIdentityReport> {
    let (n1, n2) = (g1.order(), g2.order());
    let joined = g1.join(g2)?;

    let d_pred = if oracle_differential(g1)? + 2 == n1 || oracle_differential(g2)? + 2 == n2 {
        n1 + n2 - 2
    } else {
        (n1 + n2).saturating_sub(4)
    };
    let r_pred = if oracle_roman(g1)? <= 2 || oracle_roman(g2)? <= 2 { 2 } else { 4 };
    let g_pred = if oracle_gamma(g1)? == 1 || oracle_gamma(g2)? == 1 { 1 } else { 2 };
    let kv_pred = (oracle_kv(g1)? + n2).min(oracle_kv(g2)? + n1);

    Ok(JoinIdentityReport {
        differential: oracle_differential(&joined)? == d_pred,
        roman: oracle_roman(&joined)? == r_pred,
        gamma: oracle_gamma(&joined)? == g_pred,
        kv: oracle_kv(&joined)? == kv_pred,
    })
}
