//! Small-graph catalog: every labelled graph on a few vertices, seeded
//! random samples, and a brute-force canonical form.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 0x5eed_b0da;
/// Largest order for exhaustive generation (2^C(n,2) graphs).
pub const EXHAUSTIVE_LIMIT: usize = 7;
/// Largest order for the permutation-based canonical form.
pub const CANONICAL_LIMIT: usize = 9;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

/// Graph whose edge set is selected by the bits of `mask`, pairs taken in
/// lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Result<Graph> {
    let ps = pairs(n);
    Graph::from_edges(
        n,
        ps.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e),
    )
}

/// Every labelled graph of order `n`.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::Precondition(format!(
            "exhaustive catalog supports n <= {EXHAUSTIVE_LIMIT}, got {n}"
        )));
    }
    let count = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << count).map(move |mask| graph_from_mask(n, mask).expect("catalog graph is valid")))
}

/// `G(n, ½)` sample.
pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    Graph::from_edges(n, edges).expect("sampled graph is valid")
}

pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    (0..count).map(|_| random_graph(n, &mut rng)).collect()
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Lexicographically smallest adjacency bit string over all relabellings.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > CANONICAL_LIMIT {
        return Err(Error::Precondition(format!(
            "canonical form supports n <= {CANONICAL_LIMIT}, got {n}"
        )));
    }
    let ps = pairs(n);
    let code = |perm: &[usize]| {
        ps.iter()
            .fold(0u64, |acc, &(u, v)| acc << 1 | g.has_edge(perm[u], perm[v]) as u64)
    };
    Ok((0..n).permutations(n).map(|p| code(&p)).min().unwrap_or(0))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Catalog selector: `n<=K`, `n=K` or `random:N:COUNT`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogSpec {
    UpTo(usize),
    Exactly(usize),
    Random { order: usize, count: usize },
}

impl CatalogSpec {
    pub fn graphs(&self, seed: u64) -> Result<Vec<Graph>> {
        match *self {
            CatalogSpec::UpTo(k) => {
                let mut out = Vec::new();
                for n in 1..=k {
                    out.extend(all_graphs(n)?);
                }
                Ok(out)
            }
            CatalogSpec::Exactly(k) => Ok(all_graphs(k)?.collect()),
            CatalogSpec::Random { order, count } => {
                if order > crate::graph::MAX_ORDER {
                    return Err(Error::OrderTooLarge(order));
                }
                Ok(random_graphs(order, count, seed))
            }
        }
    }
}

impl FromStr for CatalogSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unrecognised catalog `{s}` (use n<=K, n=K or random:N:COUNT)"));
        let s = s.trim();
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        if let Some(k) = s.strip_prefix("n<=") {
            Ok(CatalogSpec::UpTo(num(k)?))
        } else if let Some(k) = s.strip_prefix("n=") {
            Ok(CatalogSpec::Exactly(num(k)?))
        } else if let Some(rest) = s.strip_prefix("random:") {
            let (n, c) = rest.split_once(':').ok_or_else(bad)?;
            Ok(CatalogSpec::Random {
                order: num(n)?,
                count: num(c)?,
            })
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::UpTo(k) => write!(f, "n<={k}"),
            CatalogSpec::Exactly(k) => write!(f, "n={k}"),
            CatalogSpec::Random { order, count } => write!(f, "random:{order}:{count}"),
        }
    }
}
