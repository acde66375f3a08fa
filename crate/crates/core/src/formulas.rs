//! Closed forms for graph families and compositional identities.
//!
//! Intermediate arithmetic is signed ([`BivarPoly`]); every public result is
//! re-validated as a [`BoundaryPolynomial`], so an inconsistent input shows up
//! as [`Error::NegativeCoefficient`] or [`Error::DegreeExceedsOrder`].

use crate::boundary::BoundaryPolynomial;
use crate::enumerate::{EnumConfig, NeighborCondition, PairTable};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{Edge, Graph};
use crate::poly::BivarPoly;

fn x_plus_y_pow(n: usize) -> BivarPoly {
    (&BivarPoly::x() + &BivarPoly::y()).pow(n as u32)
}

fn x_pow(n: usize) -> BivarPoly {
    BivarPoly::monomial(1, n, 0)
}

fn one_plus_y_pow(n: usize) -> BivarPoly {
    (&BivarPoly::one() + &BivarPoly::y()).pow(n as u32)
}

fn raw_complete(n: usize) -> BivarPoly {
    if n == 0 {
        BivarPoly::one()
    } else {
        &(&x_plus_y_pow(n) + &BivarPoly::one()) - &x_pow(n)
    }
}

fn finish(order: usize, poly: BivarPoly) -> Result<BoundaryPolynomial> {
    BoundaryPolynomial::new(order, poly)
}

fn trusted(order: usize, poly: BivarPoly) -> BoundaryPolynomial {
    BoundaryPolynomial::new(order, poly).expect("closed form is a boundary polynomial")
}

/// `(1+y)ⁿ`.
pub fn poly_empty(n: usize) -> BoundaryPolynomial {
    trusted(n, one_plus_y_pow(n))
}

/// `(x+y)ⁿ + 1 − xⁿ`, and `1` for `n = 0`.
pub fn poly_complete(n: usize) -> BoundaryPolynomial {
    trusted(n, raw_complete(n))
}

/// Adds an isolated vertex: `P·(1+y)`.
pub fn poly_vertex_addition(p: &BoundaryPolynomial) -> BoundaryPolynomial {
    p.multiply(&poly_empty(1))
}

/// Polynomial of `G₁ + G₂` from the operand polynomials; the orders are
/// taken from the operands and must both be positive.
pub fn poly_join(p1: &BoundaryPolynomial, p2: &BoundaryPolynomial) -> Result<BoundaryPolynomial> {
    let (n1, n2) = (p1.order(), p2.order());
    if n1 == 0 || n2 == 0 {
        return Err(Error::Precondition("join operands need order >= 1".into()));
    }
    let mut acc = raw_complete(n1 + n2);
    acc += &(&(p1.as_poly() - &raw_complete(n1)) * &x_pow(n2));
    acc += &(&(p2.as_poly() - &raw_complete(n2)) * &x_pow(n1));
    finish(n1 + n2, acc)
}

/// `E₁ + G`.
pub fn poly_cone(p: &BoundaryPolynomial) -> Result<BoundaryPolynomial> {
    poly_join(&poly_empty(1), p)
}

pub fn poly_wheel(n: usize) -> Result<BoundaryPolynomial> {
    Family::Wheel(n).validate()?;
    let rim = poly_cycle(n - 1)?;
    let mut acc = &(rim.as_poly() * &BivarPoly::x()) - &BivarPoly::x();
    acc += &(&x_plus_y_pow(n - 1) * &BivarPoly::y());
    acc += &BivarPoly::one();
    finish(n, acc)
}

pub fn poly_complete_bipartite(n: usize, m: usize) -> Result<BoundaryPolynomial> {
    Family::CompleteBipartite(n, m).validate()?;
    let one = BivarPoly::one();
    let mut acc = x_plus_y_pow(n + m);
    acc += &(&x_pow(n) * &(&one_plus_y_pow(m) - &x_plus_y_pow(m)));
    acc += &(&x_pow(m) * &(&one_plus_y_pow(n) - &x_plus_y_pow(n)));
    acc += &(&(&x_pow(n) - &one) * &(&x_pow(m) - &one));
    finish(n + m, acc)
}

pub fn poly_star(n: usize) -> Result<BoundaryPolynomial> {
    Family::Star(n).validate()?;
    let one = BivarPoly::one();
    let inner = &(&one_plus_y_pow(n - 1) - &x_plus_y_pow(n - 1)) - &one;
    let acc = &(&x_plus_y_pow(n) + &one) + &(&BivarPoly::x() * &inner);
    finish(n, acc)
}

pub fn poly_complete_minus_edge(n: usize) -> Result<BoundaryPolynomial> {
    Family::CompleteMinusEdge(n).validate()?;
    let correction = BivarPoly::from_terms([(n - 2, 1, 2i64), (n - 1, 1, -2i64)]);
    finish(n, &raw_complete(n) + &correction)
}

/// `y(x−1)(A + B)`, the shared correction of the double star and the corona.
fn hub_correction(a: BivarPoly, b: BivarPoly) -> BivarPoly {
    let y_x_minus_one = BivarPoly::from_terms([(1, 1, 1i64), (0, 1, -1i64)]);
    &y_x_minus_one * &(&a + &b)
}

pub fn poly_double_star(r: usize, t: usize) -> Result<BoundaryPolynomial> {
    Family::DoubleStar(r, t).validate()?;
    let product = poly_star(r)?.multiply(&poly_star(t)?);
    let acc = product.as_poly() + &hub_correction(x_plus_y_pow(r - 1), x_plus_y_pow(t - 1));
    finish(r + t, acc)
}

/// Restricted polynomials at a marked vertex `v`, in the order
/// `(B⁰_{v⁰}, B⁰_{v¹}, B¹_{v⁰}, B¹_{v¹})`: `v` out or in, and `N(v) ∩ S`
/// empty or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferVector {
    order: usize,
    slots: [BivarPoly; 4],
}

impl TransferVector {
    pub fn new(order: usize, slots: [BivarPoly; 4]) -> Self {
        TransferVector { order, slots }
    }

    pub fn zero(order: usize) -> Self {
        TransferVector::new(order, Default::default())
    }

    /// Vector of `E₁` (equivalently `P₁`).
    pub fn single_vertex() -> Self {
        TransferVector::new(
            1,
            [BivarPoly::one(), BivarPoly::zero(), BivarPoly::y(), BivarPoly::zero()],
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn slots(&self) -> &[BivarPoly; 4] {
        &self.slots
    }

    pub fn slot(&self, k: usize) -> &BivarPoly {
        &self.slots[k]
    }

    /// Full polynomial of the underlying graph.
    pub fn sum(&self) -> Result<BoundaryPolynomial> {
        let total = self
            .slots
            .iter()
            .fold(BivarPoly::zero(), |acc, s| &acc + s);
        finish(self.order, total)
    }

    /// The three-component form used by the bridge identity.
    pub fn bridge_vector(&self) -> BridgeVector {
        BridgeVector {
            order: self.order,
            inside: &self.slots[2] + &self.slots[3],
            outside_free: self.slots[0].clone(),
            outside_dominated: self.slots[1].clone(),
        }
    }
}

/// The fixed pendant transfer matrix
/// `[[1,1,0,0],[0,0,x,x],[xy,y,0,0],[0,0,y,y]]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TransferMatrix;

impl TransferMatrix {
    /// Entries as `(coefficient, x-power, y-power)`, `None` for zero.
    pub const ENTRIES: [[Option<(usize, usize)>; 4]; 4] = [
        [Some((0, 0)), Some((0, 0)), None, None],
        [None, None, Some((1, 0)), Some((1, 0))],
        [Some((1, 1)), Some((0, 1)), None, None],
        [None, None, Some((0, 1)), Some((0, 1))],
    ];

    pub fn apply(&self, v: &TransferVector) -> TransferVector {
        let mut out: [BivarPoly; 4] = Default::default();
        for (row, entries) in Self::ENTRIES.iter().enumerate() {
            for (col, entry) in entries.iter().enumerate() {
                if let Some((dx, dy)) = *entry {
                    out[row] += &v.slots[col].shift(dx, dy);
                }
            }
        }
        TransferVector::new(v.order + 1, out)
    }
}

/// Vector of `G` with a new pendant vertex `u` attached at the marked
/// vertex, classified at `u`.
pub fn pendant_transfer(v: &TransferVector) -> TransferVector {
    TransferMatrix.apply(v)
}

/// Vector of `Pₙ` at an end vertex; `n = 0` is the zero-order start
/// `(0, 1, 0, 0)`.
pub fn path_vector(n: usize) -> TransferVector {
    let mut v = TransferVector::new(
        0,
        [BivarPoly::zero(), BivarPoly::one(), BivarPoly::zero(), BivarPoly::zero()],
    );
    for _ in 0..n {
        v = pendant_transfer(&v);
    }
    v
}

pub fn poly_path(n: usize) -> BoundaryPolynomial {
    path_vector(n).sum().expect("path vector sums to a boundary polynomial")
}

/// Sum over subsets of `Pₙ` with `v₁ ∉ S`, `v₂ ∉ S` and `vₙ ∈ S`, computed by
/// running the transfer with the first two vertices forced out. `n ≥ 3`.
pub fn cycle_restricted_term(n: usize) -> Result<BoundaryPolynomial> {
    Family::Cycle(n).validate()?;
    let zero = BivarPoly::zero;
    let mut v = TransferVector::new(1, [BivarPoly::one(), zero(), zero(), zero()]);
    v = pendant_transfer(&v);
    v.slots[2] = zero();
    v.slots[3] = zero();
    for _ in 0..n - 2 {
        v = pendant_transfer(&v);
    }
    finish(n, &v.slots[2] + &v.slots[3])
}

pub fn poly_cycle(n: usize) -> Result<BoundaryPolynomial> {
    let r = cycle_restricted_term(n)?;
    let two_x_minus_one = BivarPoly::from_terms([(1, 0, 2i64), (0, 0, -2i64)]);
    finish(n, poly_path(n).as_poly() + &(&two_x_minus_one * r.as_poly()))
}

/// `B(G)` from `B(G−e)` and the two restricted terms
/// `B(G−e)^{0,1}_{u⁰,v}` and `B(G−e)^{1,0}_{u,v⁰}`.
pub fn poly_edge_deleted(
    without_edge: &BoundaryPolynomial,
    u_free_v_in: &BoundaryPolynomial,
    u_in_v_free: &BoundaryPolynomial,
) -> Result<BoundaryPolynomial> {
    let x_minus_one = BivarPoly::from_terms([(1, 0, 1i64), (0, 0, -1i64)]);
    let terms = u_free_v_in.as_poly() + u_in_v_free.as_poly();
    finish(without_edge.order(), without_edge.as_poly() + &(&x_minus_one * &terms))
}

/// The two restricted terms of `g` at a non-adjacent pair `(u, v)`.
pub fn edge_addition_terms(
    g: &Graph,
    u: usize,
    v: usize,
    cfg: &EnumConfig,
) -> Result<(BoundaryPolynomial, BoundaryPolynomial)> {
    use NeighborCondition::{Any, Empty};
    let table = PairTable::compute(g, u, v, cfg)?;
    Ok((table.get(false, true, Empty, Any), table.get(true, false, Any, Empty)))
}

/// `B(G + uv)` from enumerations of `G` only.
pub fn poly_edge_added(g: &Graph, u: usize, v: usize, cfg: &EnumConfig) -> Result<BoundaryPolynomial> {
    if g.has_edge(u, v) {
        return Err(Error::EdgeExists { u: u.min(v), v: u.max(v) });
    }
    let (a, b) = edge_addition_terms(g, u, v, cfg)?;
    poly_edge_deleted(&crate::enumerate::boundary_polynomial_with(g, cfg)?, &a, &b)
}

/// `(B¹_v, B⁰_{v⁰}, B⁰_{v¹})` at the attachment vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeVector {
    pub order: usize,
    pub inside: BivarPoly,
    pub outside_free: BivarPoly,
    pub outside_dominated: BivarPoly,
}

impl BridgeVector {
    fn components(&self) -> [&BivarPoly; 3] {
        [&self.inside, &self.outside_free, &self.outside_dominated]
    }
}

/// `row · [[1,x,1],[x,1,1],[1,1,1]] · column` for `G₁ ⊎ G₂` plus the edge
/// between the two attachment vertices.
pub fn poly_bridge(left: &BridgeVector, right: &BridgeVector) -> Result<BoundaryPolynomial> {
    const X_POWER: [[usize; 3]; 3] = [[0, 1, 0], [1, 0, 0], [0, 0, 0]];
    let mut acc = BivarPoly::zero();
    for (a, pa) in left.components().into_iter().enumerate() {
        for (b, pb) in right.components().into_iter().enumerate() {
            acc += &(pa * pb).shift(X_POWER[a][b], 0);
        }
    }
    finish(left.order + right.order, acc)
}

/// `P₂ ⊙ {G₁, G₂}` from the operand polynomials.
pub fn poly_corona_p2(p1: &BoundaryPolynomial, p2: &BoundaryPolynomial) -> Result<BoundaryPolynomial> {
    let (n1, n2) = (p1.order(), p2.order());
    let product = poly_cone(p1)?.multiply(&poly_cone(p2)?);
    let acc = product.as_poly() + &hub_correction(x_plus_y_pow(n1), x_plus_y_pow(n2));
    finish(n1 + n2 + 2, acc)
}

/// `B` of `g` with the edge `e` subdivided once, from restricted
/// polynomials of `g` at the endpoints.
pub fn poly_subdivided(g: &Graph, e: Edge, cfg: &EnumConfig) -> Result<BoundaryPolynomial> {
    use NeighborCondition::{Any as A, Empty as E, NonEmpty as N};
    if !g.has_edge(e.u, e.v) {
        return Err(Error::NotAnEdge { u: e.u, v: e.v });
    }
    let t = PairTable::compute(g, e.u, e.v, cfg)?;
    let one = BivarPoly::one();
    let x = BivarPoly::x();
    let y = BivarPoly::y();
    let xy = BivarPoly::monomial(1, 1, 1);
    let x2y = BivarPoly::monomial(1, 2, 1);
    let parts: [(&BivarPoly, bool, bool, NeighborCondition, NeighborCondition); 13] = [
        (&one, false, false, A, A),
        (&one, true, false, A, E),
        (&x, true, false, A, N),
        (&one, false, true, E, A),
        (&x, false, true, N, A),
        (&x, true, true, A, A),
        (&x2y, false, false, E, E),
        (&xy, false, false, N, E),
        (&xy, false, false, E, N),
        (&y, false, false, N, N),
        (&y, true, true, A, A),
        (&y, true, false, A, A),
        (&y, false, true, A, A),
    ];
    let mut acc = BivarPoly::zero();
    for (factor, um, vm, uc, vc) in parts {
        acc += &(factor * t.get(um, vm, uc, vc).as_poly());
    }
    finish(g.order() + 1, acc)
}

/// Closed form for a family member; the prism has none.
pub fn family_polynomial(family: &Family) -> Result<BoundaryPolynomial> {
    family.validate()?;
    match *family {
        Family::Complete(n) => Ok(poly_complete(n)),
        Family::Empty(n) => Ok(poly_empty(n)),
        Family::Path(n) => Ok(poly_path(n)),
        Family::Cycle(n) => poly_cycle(n),
        Family::Wheel(n) => poly_wheel(n),
        Family::Star(n) => poly_star(n),
        Family::CompleteBipartite(n, m) => poly_complete_bipartite(n, m),
        Family::CompleteMinusEdge(n) => poly_complete_minus_edge(n),
        Family::DoubleStar(r, t) => poly_double_star(r, t),
        Family::Prism => Err(Error::Precondition("no closed form for the prism".into())),
    }
}

pub fn has_closed_form(family: &Family) -> bool {
    !matches!(family, Family::Prism)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{boundary_polynomial, restricted_polynomial, restricted_vector, RestrictedSpec, VertexCondition};
    use crate::families::FamilyKind;

    fn bp(order: usize, terms: &[(usize, usize, i64)]) -> BoundaryPolynomial {
        BoundaryPolynomial::new(order, BivarPoly::from_terms(terms.iter().copied())).unwrap()
    }

    fn enumerate(g: &Graph) -> BoundaryPolynomial {
        boundary_polynomial(g).unwrap()
    }

    fn k4() -> BoundaryPolynomial {
        bp(4, &[(0, 0, 1), (3, 1, 4), (2, 2, 6), (1, 3, 4), (0, 4, 1)])
    }

    fn p4() -> BoundaryPolynomial {
        bp(4, &[(0, 0, 1), (1, 1, 2), (2, 1, 2), (1, 2, 2), (2, 2, 4), (1, 3, 4), (0, 4, 1)])
    }

    fn p3() -> BoundaryPolynomial {
        bp(3, &[(0, 0, 1), (1, 1, 2), (2, 1, 1), (1, 2, 3), (0, 3, 1)])
    }

    #[test]
    fn empty_and_complete() {
        assert_eq!(poly_complete(4), k4());
        assert_eq!(poly_complete(1), bp(1, &[(0, 0, 1), (0, 1, 1)]));
        assert_eq!(poly_complete(0), BoundaryPolynomial::one());
        assert_eq!(poly_empty(3), bp(3, &[(0, 0, 1), (0, 1, 3), (0, 2, 3), (0, 3, 1)]));
        assert_eq!(poly_empty(0), BoundaryPolynomial::one());
    }

    #[test]
    fn vertex_addition() {
        assert_eq!(poly_vertex_addition(&poly_empty(2)), poly_empty(3));
        let k2 = Family::Complete(2).build().unwrap();
        let k2_e1 = k2.add_isolated_vertex().unwrap();
        assert_eq!(poly_vertex_addition(&enumerate(&k2)), enumerate(&k2_e1));
        let mut p = BoundaryPolynomial::one();
        for _ in 0..5 {
            p = poly_vertex_addition(&p);
        }
        assert_eq!(p, poly_empty(5));
    }

    #[test]
    fn join_and_cone() {
        assert_eq!(poly_join(&poly_empty(1), &poly_empty(1)).unwrap(), poly_complete(2));
        let c3 = poly_cycle(3).unwrap();
        assert_eq!(poly_join(&poly_empty(1), &c3).unwrap(), k4());
        assert_eq!(poly_cone(&c3).unwrap(), k4());
        for n in 1..7 {
            assert_eq!(poly_cone(&poly_complete(n)).unwrap(), poly_complete(n + 1));
            assert_eq!(poly_cone(&poly_empty(n)).unwrap(), poly_star(n + 1).unwrap());
            for m in 1..5 {
                assert_eq!(
                    poly_join(&poly_empty(n), &poly_empty(m)).unwrap(),
                    poly_complete_bipartite(n, m).unwrap()
                );
            }
        }
        assert!(poly_join(&BoundaryPolynomial::one(), &k4()).is_err());
    }

    #[test]
    fn join_rejects_inconsistent_operands() {
        // Not a graph polynomial of order 2: forces a negative result.
        let bogus = BoundaryPolynomial::zero(2);
        assert!(matches!(
            poly_join(&bogus, &poly_empty(1)),
            Err(Error::NegativeCoefficient { .. })
        ));
    }

    #[test]
    fn family_closed_forms() {
        assert_eq!(poly_wheel(4).unwrap(), k4());
        assert_eq!(poly_complete_minus_edge(3).unwrap(), p3());
        assert_eq!(poly_double_star(2, 2).unwrap(), p4());
        assert!(poly_wheel(3).is_err());
        assert!(poly_star(1).is_err());
        assert!(poly_double_star(1, 2).is_err());
        assert!(poly_complete_minus_edge(2).is_err());
    }

    #[test]
    fn formulas_match_enumeration() {
        for kind in FamilyKind::ALL {
            for a in 0..=10 {
                for b in 0..=6 {
                    let Ok(fam) = Family::from_parts(kind, Some(a), Some(b), Some(a), Some(b)) else {
                        continue;
                    };
                    if fam.order() > 10 || !has_closed_form(&fam) {
                        continue;
                    }
                    assert_eq!(
                        family_polynomial(&fam).unwrap(),
                        enumerate(&fam.build().unwrap()),
                        "{fam}"
                    );
                }
            }
        }
        assert!(family_polynomial(&Family::Prism).is_err());
    }

    #[test]
    fn pendant_examples() {
        let e1 = TransferVector::single_vertex();
        let once = pendant_transfer(&e1);
        let xy = BivarPoly::monomial(1, 1, 1);
        assert_eq!(
            once,
            TransferVector::new(2, [BivarPoly::one(), xy.clone(), xy, BivarPoly::monomial(1, 0, 2)])
        );
        assert_eq!(once.sum().unwrap(), poly_complete(2));
        assert_eq!(pendant_transfer(&once).sum().unwrap(), p3());
        assert_eq!(pendant_transfer(&TransferVector::zero(3)), TransferVector::zero(4));
    }

    #[test]
    fn pendant_matches_restricted_enumeration() {
        let cfg = EnumConfig::default();
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        for v in 0..5 {
            let grown = g.bridge(v, &Graph::empty(1).unwrap(), 0).unwrap();
            let predicted = pendant_transfer(&restricted_vector(&g, v, &cfg).unwrap());
            assert_eq!(predicted, restricted_vector(&grown, 5, &cfg).unwrap());
        }
    }

    #[test]
    fn paths() {
        assert_eq!(poly_path(0), BoundaryPolynomial::one());
        assert_eq!(poly_path(1), poly_empty(1));
        assert_eq!(poly_path(3), p3());
        assert_eq!(poly_path(4), p4());
        for k in 1..10 {
            assert_eq!(path_vector(k).sum().unwrap(), enumerate(&Family::Path(k).build().unwrap()));
        }
    }

    #[test]
    fn cycle_restricted_term_matches_enumeration() {
        let cfg = EnumConfig::default();
        for n in 3..=12 {
            let path = Family::Path(n).build().unwrap();
            let spec = RestrictedSpec::pair(
                VertexCondition::new(0, false, NeighborCondition::Empty),
                VertexCondition::new(n - 1, true, NeighborCondition::Any),
            )
            .unwrap();
            assert_eq!(
                cycle_restricted_term(n).unwrap(),
                restricted_polynomial(&path, &spec, &cfg).unwrap(),
                "n = {n}"
            );
        }
        assert_eq!(cycle_restricted_term(3).unwrap(), bp(3, &[(1, 1, 1)]));
    }

    #[test]
    fn cycles() {
        assert_eq!(poly_cycle(3).unwrap(), poly_complete(3));
        let c4 = bp(4, &[(0, 0, 1), (2, 1, 4), (2, 2, 6), (1, 3, 4), (0, 4, 1)]);
        assert_eq!(poly_cycle(4).unwrap(), c4);
        let c5 = bp(5, &[(0, 0, 1), (2, 1, 5), (2, 2, 5), (3, 2, 5), (2, 3, 10), (1, 4, 5), (0, 5, 1)]);
        assert_eq!(poly_cycle(5).unwrap(), c5);
        assert!(poly_cycle(2).is_err());
    }

    #[test]
    fn edge_deletion_examples() {
        let cfg = EnumConfig::default();
        let xy = bp(3, &[(1, 1, 1)]);
        let p3g = Family::Path(3).build().unwrap();
        // P₃ is K₃ minus the edge 0-2.
        let (a, b) = edge_addition_terms(&p3g, 0, 2, &cfg).unwrap();
        assert_eq!((a.clone(), b.clone()), (xy.clone(), xy));
        assert_eq!(poly_edge_deleted(&p3(), &a, &b).unwrap(), poly_complete(3));

        let y = bp(2, &[(0, 1, 1)]);
        assert_eq!(poly_edge_deleted(&poly_empty(2), &y, &y).unwrap(), poly_complete(2));
        let zero = BoundaryPolynomial::zero(4);
        assert_eq!(poly_edge_deleted(&p4(), &zero, &zero).unwrap(), p4());

        assert_eq!(poly_edge_added(&p3g, 0, 2, &cfg).unwrap(), poly_complete(3));
        assert!(poly_edge_added(&p3g, 0, 1, &cfg).is_err());
    }

    #[test]
    fn bridge_examples() {
        let cfg = EnumConfig::default();
        let e1 = TransferVector::single_vertex().bridge_vector();
        assert_eq!(poly_bridge(&e1, &e1).unwrap(), poly_complete(2));
        let p2 = restricted_vector(&Family::Path(2).build().unwrap(), 0, &cfg).unwrap();
        assert_eq!(poly_bridge(&e1, &p2.bridge_vector()).unwrap(), p3());
        for n in 1..=8 {
            let grown = poly_bridge(&path_vector(n).bridge_vector(), &e1).unwrap();
            assert_eq!(grown, poly_path(n + 1));
        }
    }

    #[test]
    fn corona_examples() {
        let e1 = poly_empty(1);
        assert_eq!(poly_corona_p2(&e1, &e1).unwrap(), p4());
        for r in 2..6 {
            for t in 2..6 {
                let c = poly_corona_p2(&poly_empty(r - 1), &poly_empty(t - 1)).unwrap();
                assert_eq!(c, poly_double_star(r, t).unwrap());
            }
        }
        let k2 = poly_complete(2);
        let c3 = poly_cycle(3).unwrap();
        assert_eq!(poly_corona_p2(&k2, &c3).unwrap(), poly_corona_p2(&c3, &k2).unwrap());
        let g = Family::Complete(2).build().unwrap().corona_p2(&Family::Cycle(3).build().unwrap()).unwrap();
        assert_eq!(poly_corona_p2(&k2, &c3).unwrap(), enumerate(&g));
    }

    #[test]
    fn subdivision_examples() {
        let cfg = EnumConfig::default();
        let k2 = Family::Complete(2).build().unwrap();
        assert_eq!(poly_subdivided(&k2, Edge::new(0, 1).unwrap(), &cfg).unwrap(), p3());
        let k3 = Family::Complete(3).build().unwrap();
        let e = Edge::new(0, 2).unwrap();
        assert_eq!(
            poly_subdivided(&k3, e, &cfg).unwrap(),
            enumerate(&k3.subdivide_edge(e).unwrap())
        );
        assert_eq!(poly_subdivided(&k3, e, &cfg).unwrap(), poly_cycle(4).unwrap());
        let p3g = Family::Path(3).build().unwrap();
        assert_eq!(poly_subdivided(&p3g, Edge::new(0, 1).unwrap(), &cfg).unwrap(), p4());
        assert!(poly_subdivided(&p3g, Edge::new(0, 2).unwrap(), &cfg).is_err());
    }
}
