//! The boundary polynomial `B(G;x,y) = Σ_S x^{|B(S)|} y^{|S|}` and the
//! analyses that read it directly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{write_plain_term, BivarPoly, UniPoly};

/// Coefficient grid `B_{i,j}` (`i` = boundary size, `j` = set size) of a
/// polynomial attached to a graph order `n`.
///
/// Every coefficient is non-negative and every term satisfies `i + j ≤ n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundaryPolynomial {
    order: usize,
    poly: BivarPoly,
}

/// Extremal exponent combinations over the non-zero terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LaurentProfile {
    /// `max{i + j}`, the degree of `B(G;x,x)`.
    pub degree_sum: usize,
    /// `max{i − j}`, the degree of `B(G;x,x⁻¹)`.
    pub degree_diff: i64,
}

impl BoundaryPolynomial {
    /// Wraps `poly`, checking non-negativity and the `i + j ≤ order` bound.
    pub fn new(order: usize, poly: BivarPoly) -> Result<Self> {
        if let Some((i, j)) = poly.first_negative() {
            return Err(Error::NegativeCoefficient { i, j });
        }
        if let Some((i, j, _)) = poly.terms().find(|&(i, j, _)| i + j > order) {
            return Err(Error::DegreeExceedsOrder { i, j, order });
        }
        Ok(BoundaryPolynomial { order, poly })
    }

    /// The constant `1`: the polynomial of the null graph.
    pub fn one() -> Self {
        BoundaryPolynomial {
            order: 0,
            poly: BivarPoly::one(),
        }
    }

    pub fn zero(order: usize) -> Self {
        BoundaryPolynomial {
            order,
            poly: BivarPoly::zero(),
        }
    }

    /// Grid built from non-negative machine-word counts, `counts[j][i]`.
    pub(crate) fn from_counts(order: usize, counts: &[Vec<u64>]) -> Self {
        let rows = counts
            .iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        BoundaryPolynomial {
            order,
            poly: BivarPoly::from_rows(rows),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn as_poly(&self) -> &BivarPoly {
        &self.poly
    }

    pub fn into_poly(self) -> BivarPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `B_{i,j}`; zero for any index outside the grid.
    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        self.poly.coeff(i, j)
    }

    /// `B_{i,j}` narrowed to a machine word (graph coefficients are at most
    /// `C(64, 32)`).
    pub fn coefficient_u64(&self, i: usize, j: usize) -> u64 {
        self.poly
            .coeff_ref(i, j)
            .map(|c| u64::try_from(c).expect("coefficient fits in u64"))
            .unwrap_or(0)
    }

    /// Non-zero terms `(i, j, B_{i,j})`, ascending `j` then ascending `i`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.poly.terms()
    }

    pub fn add(&self, other: &Self) -> Self {
        BoundaryPolynomial {
            order: self.order.max(other.order),
            poly: &self.poly + &other.poly,
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        BoundaryPolynomial {
            order: self.order,
            poly: self.poly.scale(&BigInt::from(c)),
        }
    }

    /// Product; the order is the sum of the orders, matching disjoint union.
    pub fn multiply(&self, other: &Self) -> Self {
        BoundaryPolynomial {
            order: self.order + other.order,
            poly: &self.poly * &other.poly,
        }
    }

    /// `Σ_i B_{i,j} xⁱ`.
    pub fn slice_y(&self, j: usize) -> UniPoly {
        self.poly.slice_y(j)
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.poly.eval(x, y)
    }

    /// Integer convenience wrapper over [`evaluate`](Self::evaluate).
    pub fn evaluate_int(&self, x: i64, y: i64) -> BigRational {
        self.evaluate(
            &BigRational::from_integer(x.into()),
            &BigRational::from_integer(y.into()),
        )
    }

    /// `B(G;0,y) = Σ_j B_{0,j} yʲ`.
    pub fn substitute_x0(&self) -> UniPoly {
        self.poly.at_x(&BigInt::zero())
    }

    /// `B(G;1,y)`.
    pub fn substitute_x1(&self) -> UniPoly {
        self.poly.at_x(&BigInt::one())
    }

    /// The one-variable differential polynomial `xⁿ B(G;x,x⁻¹)`, i.e.
    /// `Σ B_{i,j} x^{n+i−j}`.
    pub fn differential_polynomial(&self) -> UniPoly {
        let mut coeffs = vec![BigInt::zero(); 2 * self.order + 1];
        for (i, j, c) in self.poly.terms() {
            // i + j <= n keeps the exponent inside [0, 2n].
            coeffs[self.order + i - j] += c;
        }
        UniPoly::new(coeffs)
    }

    /// `None` for the zero polynomial.
    pub fn laurent_profile(&self) -> Option<LaurentProfile> {
        let mut terms = self.poly.terms().peekable();
        terms.peek()?;
        let (mut sum, mut diff) = (0usize, i64::MIN);
        for (i, j, _) in terms {
            sum = sum.max(i + j);
            diff = diff.max(i as i64 - j as i64);
        }
        Some(LaurentProfile {
            degree_sum: sum,
            degree_diff: diff,
        })
    }

    /// Largest `k` with `(y+1)^k` dividing the polynomial exactly.
    pub fn y_plus_one_multiplicity(&self) -> usize {
        self.peel_y_plus_one().0
    }

    /// The polynomial divided by `(y+1)^k`, `k` the multiplicity. The result
    /// has order `n − k`; it fails only when the quotient is not a valid
    /// boundary grid, which never happens for graph polynomials.
    pub fn deflate(&self) -> Result<BoundaryPolynomial> {
        let (k, q) = self.peel_y_plus_one();
        BoundaryPolynomial::new(self.order.saturating_sub(k), q)
    }

    fn peel_y_plus_one(&self) -> (usize, BivarPoly) {
        if self.poly.is_zero() {
            return (0, BivarPoly::zero());
        }
        let mut cur = self.poly.clone();
        let mut k = 0;
        while let Some(q) = cur.div_y_plus_one() {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    pub fn emit(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => self.to_string(),
            OutputFormat::Latex => self.to_latex(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, j, c) in self.terms() {
            let mut s = String::new();
            if !c.is_one() || (i == 0 && j == 0) {
                s.push_str(&c.to_string());
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => s.push_str(var),
                    _ => s.push_str(&format!("{var}^{{{e}}}")),
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_document()).expect("polynomial serializes")
    }

    pub fn to_json_document(&self) -> PolynomialDocument {
        PolynomialDocument {
            n: self.order,
            coefficients: self
                .terms()
                .map(|(i, j, c)| JsonTerm {
                    x: i,
                    y: j,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    /// First differing coefficient in term order, `None` if identical grids.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let diff = &self.poly - &other.poly;
        let first = diff.terms().next().map(|(i, j, _)| (i, j));
        first
    }

    /// `true` when every coefficient is non-negative (always, by
    /// construction) and no term exceeds the order.
    pub fn is_well_formed(&self) -> bool {
        self.poly.first_negative().is_none() && self.terms().all(|(i, j, c)| {
            i + j <= self.order && !c.is_negative()
        })
    }
}

impl fmt::Display for BoundaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write_plain_term(f, c, i, j)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoundaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B[n={}]({})", self.order, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialDocument {
    pub n: usize,
    pub coefficients: Vec<JsonTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonTerm {
    pub x: usize,
    pub y: usize,
    /// Decimal string, so that no precision is lost.
    pub c: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Latex,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "latex" => Ok(OutputFormat::Latex),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(order: usize, terms: &[(usize, usize, i64)]) -> BoundaryPolynomial {
        BoundaryPolynomial::new(order, BivarPoly::from_terms(terms.iter().copied())).unwrap()
    }

    fn k4() -> BoundaryPolynomial {
        bp(4, &[(0, 0, 1), (3, 1, 4), (2, 2, 6), (1, 3, 4), (0, 4, 1)])
    }

    fn p3() -> BoundaryPolynomial {
        bp(3, &[(0, 0, 1), (1, 1, 2), (2, 1, 1), (1, 2, 3), (0, 3, 1)])
    }

    fn e(n: usize) -> BoundaryPolynomial {
        let one_plus_y = bp(1, &[(0, 0, 1), (0, 1, 1)]);
        (0..n).fold(BoundaryPolynomial::one(), |acc, _| acc.multiply(&one_plus_y))
    }

    fn k2() -> BoundaryPolynomial {
        bp(2, &[(0, 0, 1), (1, 1, 2), (0, 2, 1)])
    }

    #[test]
    fn construction_rejects_bad_grids() {
        assert!(matches!(
            BoundaryPolynomial::new(2, BivarPoly::monomial(-1, 0, 0)),
            Err(Error::NegativeCoefficient { i: 0, j: 0 })
        ));
        assert!(matches!(
            BoundaryPolynomial::new(2, BivarPoly::monomial(1, 2, 1)),
            Err(Error::DegreeExceedsOrder { .. })
        ));
    }

    #[test]
    fn arithmetic() {
        let yy = e(1).multiply(&e(1));
        assert_eq!(yy, e(2));
        assert_eq!(yy.order(), 2);
        let prod = k2().multiply(&e(1));
        assert_eq!(
            prod,
            bp(3, &[(0, 0, 1), (1, 1, 2), (0, 2, 1), (0, 1, 1), (1, 2, 2), (0, 3, 1)])
        );
        assert_eq!(k4().add(&BoundaryPolynomial::zero(4)), k4());
        assert_eq!(k2().scale(3).coefficient(1, 1), BigInt::from(6));
    }

    #[test]
    fn coefficients_and_slices() {
        assert_eq!(k4().coefficient(3, 1), BigInt::from(4));
        assert_eq!(p3().slice_y(1), UniPoly::from_i64s(&[0, 2, 1]));
        assert_eq!(k4().coefficient(5, 0), BigInt::zero());
    }

    #[test]
    fn evaluations() {
        let sixteen = BigRational::from_integer(16.into());
        assert_eq!(k4().evaluate_int(1, 1), sixteen);
        assert_eq!(k4().evaluate_int(1, -1), BigRational::zero());
        let p2e1 = k2().multiply(&e(1));
        assert_eq!(p2e1.evaluate_int(0, 1), BigRational::from_integer(4.into()));
    }

    #[test]
    fn substitution_at_zero() {
        assert_eq!(k4().substitute_x0(), UniPoly::from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(e(1).substitute_x0(), UniPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn differential_polynomial() {
        assert_eq!(k4().differential_polynomial(), UniPoly::from_i64s(&[1, 0, 4, 0, 7, 0, 4]));
        assert_eq!(e(1).differential_polynomial(), UniPoly::from_i64s(&[1, 1]));
        assert_eq!(k2().differential_polynomial(), UniPoly::from_i64s(&[1, 0, 3]));
    }

    #[test]
    fn laurent_profiles() {
        let lp = k4().laurent_profile().unwrap();
        assert_eq!((lp.degree_diff, lp.degree_sum), (2, 4));
        let lp = e(5).laurent_profile().unwrap();
        assert_eq!((lp.degree_diff, lp.degree_sum), (0, 5));
        let lp = p3().laurent_profile().unwrap();
        assert_eq!((lp.degree_diff, lp.degree_sum), (1, 3));
        assert!(BoundaryPolynomial::zero(3).laurent_profile().is_none());
    }

    #[test]
    fn y_plus_one_peeling() {
        assert_eq!(e(3).y_plus_one_multiplicity(), 3);
        assert_eq!(k4().y_plus_one_multiplicity(), 0);
        let p2e1 = k2().multiply(&e(1));
        assert_eq!(p2e1.y_plus_one_multiplicity(), 1);
        assert_eq!(p2e1.deflate().unwrap(), k2());
        assert_eq!(e(3).deflate().unwrap(), BoundaryPolynomial::one());
    }

    #[test]
    fn emitters() {
        assert_eq!(k2().emit(OutputFormat::Plain), "1 + 2*x*y + y^2");
        assert_eq!(e(1).emit(OutputFormat::Latex), "1 + y");
        assert_eq!(k4().to_latex(), "1 + 4x^{3}y + 6x^{2}y^{2} + 4xy^{3} + y^{4}");
        assert_eq!(
            k2().emit(OutputFormat::Json),
            r#"{"n":2,"coefficients":[{"x":0,"y":0,"c":"1"},{"x":1,"y":1,"c":"2"},{"x":0,"y":2,"c":"1"}]}"#
        );
        assert_eq!(k4().to_string(), "1 + 4*x^3*y + 6*x^2*y^2 + 4*x*y^3 + y^4");
        assert!("yaml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn first_difference_in_term_order() {
        assert_eq!(k4().first_difference(&k4()), None);
        assert_eq!(k2().first_difference(&e(2)), Some((0, 1)));
    }
}
