//! Generators for the classic graph families, with fixed labelings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family member together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `Kₙ`.
    Complete(usize),
    /// `Eₙ`, no edges.
    Empty(usize),
    /// `Pₙ` with edges `(i, i+1)`.
    Path(usize),
    /// `Cₙ`, `n ≥ 3`.
    Cycle(usize),
    /// `Wₙ = E₁ + Cₙ₋₁`, hub at vertex 0, `n ≥ 4`.
    Wheel(usize),
    /// `Sₙ = K₁ + Eₙ₋₁`, center at vertex 0, `n ≥ 2`.
    Star(usize),
    /// `K_{n,m}` with parts `0..n` and `n..n+m`.
    CompleteBipartite(usize, usize),
    /// `Kₙ − e` with the edge `0–1` removed, `n ≥ 3`.
    CompleteMinusEdge(usize),
    /// `S_{r,t}`: centers `0` and `r` adjacent, `r, t ≥ 2`.
    DoubleStar(usize, usize),
    /// The triangular prism `P₂ □ C₃`.
    Prism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Complete,
    Empty,
    Path,
    Cycle,
    Wheel,
    Star,
    CompleteBipartite,
    CompleteMinusEdge,
    DoubleStar,
    Prism,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Complete,
        FamilyKind::Empty,
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Wheel,
        FamilyKind::Star,
        FamilyKind::CompleteBipartite,
        FamilyKind::CompleteMinusEdge,
        FamilyKind::DoubleStar,
        FamilyKind::Prism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::Empty => "empty",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Star => "star",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::CompleteMinusEdge => "complete_minus_edge",
            FamilyKind::DoubleStar => "double_star",
            FamilyKind::Prism => "prism",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Family {
    /// Assembles a family member from CLI-style parameters. `n` is the main
    /// parameter, `m` the second part of a complete bipartite graph, and
    /// `r`/`t` the star orders of a double star.
    pub fn from_parts(
        kind: FamilyKind,
        n: Option<usize>,
        m: Option<usize>,
        r: Option<usize>,
        t: Option<usize>,
    ) -> Result<Family> {
        let need = |v: Option<usize>, what: &'static str| {
            v.ok_or(Error::FamilyBounds {
                family: kind.name(),
                requirement: what,
            })
        };
        let fam = match kind {
            FamilyKind::Complete => Family::Complete(need(n, "--n")?),
            FamilyKind::Empty => Family::Empty(need(n, "--n")?),
            FamilyKind::Path => Family::Path(need(n, "--n")?),
            FamilyKind::Cycle => Family::Cycle(need(n, "--n")?),
            FamilyKind::Wheel => Family::Wheel(need(n, "--n")?),
            FamilyKind::Star => Family::Star(need(n, "--n")?),
            FamilyKind::CompleteBipartite => {
                Family::CompleteBipartite(need(n, "--n")?, need(m, "--m")?)
            }
            FamilyKind::CompleteMinusEdge => Family::CompleteMinusEdge(need(n, "--n")?),
            FamilyKind::DoubleStar => Family::DoubleStar(need(r, "--r")?, need(t, "--t")?),
            FamilyKind::Prism => Family::Prism,
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Complete(_) => FamilyKind::Complete,
            Family::Empty(_) => FamilyKind::Empty,
            Family::Path(_) => FamilyKind::Path,
            Family::Cycle(_) => FamilyKind::Cycle,
            Family::Wheel(_) => FamilyKind::Wheel,
            Family::Star(_) => FamilyKind::Star,
            Family::CompleteBipartite(..) => FamilyKind::CompleteBipartite,
            Family::CompleteMinusEdge(_) => FamilyKind::CompleteMinusEdge,
            Family::DoubleStar(..) => FamilyKind::DoubleStar,
            Family::Prism => FamilyKind::Prism,
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Complete(n)
            | Family::Empty(n)
            | Family::Path(n)
            | Family::Cycle(n)
            | Family::Wheel(n)
            | Family::Star(n)
            | Family::CompleteMinusEdge(n) => n,
            Family::CompleteBipartite(n, m) => n + m,
            Family::DoubleStar(r, t) => r + t,
            Family::Prism => 6,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bound = |ok: bool, requirement: &'static str| {
            if ok {
                Ok(())
            } else {
                Err(Error::FamilyBounds {
                    family: self.kind().name(),
                    requirement,
                })
            }
        };
        match *self {
            Family::Cycle(n) => bound(n >= 3, "n >= 3"),
            Family::Wheel(n) => bound(n >= 4, "n >= 4"),
            Family::Star(n) => bound(n >= 2, "n >= 2"),
            Family::CompleteMinusEdge(n) => bound(n >= 3, "n >= 3"),
            Family::CompleteBipartite(n, m) => bound(n >= 1 && m >= 1, "n, m >= 1"),
            Family::DoubleStar(r, t) => bound(r >= 2 && t >= 2, "r, t >= 2"),
            _ => Ok(()),
        }?;
        if self.order() > crate::graph::MAX_ORDER {
            return Err(Error::OrderTooLarge(self.order()));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            Family::Complete(n) => complete(n),
            Family::Empty(n) => Graph::empty(n),
            Family::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            Family::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            Family::Wheel(n) => Graph::empty(1)?.join(&Family::Cycle(n - 1).build()?),
            Family::Star(n) => Graph::empty(1)?.join(&Graph::empty(n - 1)?),
            Family::CompleteBipartite(n, m) => Graph::empty(n)?.join(&Graph::empty(m)?),
            Family::CompleteMinusEdge(n) => {
                complete(n)?.delete_edge(crate::graph::Edge { u: 0, v: 1 })
            }
            Family::DoubleStar(r, t) => {
                Family::Star(r).build()?.bridge(0, &Family::Star(t).build()?, 0)
            }
            Family::Prism => Graph::from_edges(
                6,
                [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
            ),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::CompleteBipartite(n, m) => write!(f, "complete_bipartite({n},{m})"),
            Family::DoubleStar(r, t) => write!(f, "double_star({r},{t})"),
            Family::Prism => f.write_str("prism"),
            other => write!(f, "{}({})", other.kind(), other.order()),
        }
    }
}

fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}
