//! Dense bivariate and univariate polynomials over the integers.
//!
//! Coefficients are arbitrary precision and may be negative: several
//! composition identities subtract polynomials, so the working type is
//! signed. Non-negativity is enforced where a [`BoundaryPolynomial`] is
//! constructed.
//!
//! [`BoundaryPolynomial`]: crate::boundary::BoundaryPolynomial

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `Σ c_{i,j} xⁱ yʲ`, stored as rows by ascending power of `y`.
///
/// `rows[j][i]` is the coefficient of `xⁱ yʲ`. Rows carry no trailing
/// zeros and there are no trailing empty rows, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    rows: Vec<Vec<BigInt>>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0, 0)
    }

    /// `c · xⁱ yʲ`.
    pub fn monomial(c: impl Into<BigInt>, i: usize, j: usize) -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(i, j, &c.into());
        p
    }

    /// Builds from `(i, j, c)` triples; repeated positions accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, C)>,
        C: Into<BigInt>,
    {
        let mut p = BivarPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, &c.into());
        }
        p
    }

    /// Builds from a row-major grid `grid[j][i]`.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let mut p = BivarPoly { rows };
        p.normalize();
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.rows.len() <= j {
            self.rows.resize_with(j + 1, Vec::new);
        }
        let row = &mut self.rows[j];
        if row.len() <= i {
            row.resize_with(i + 1, BigInt::zero);
        }
        row[i] += c;
        self.normalize();
    }

    fn normalize(&mut self) {
        for row in &mut self.rows {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coefficient of `xⁱ yʲ`; zero outside the stored range.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeff_ref(i, j).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, i: usize, j: usize) -> Option<&BigInt> {
        self.rows.get(j).and_then(|r| r.get(i))
    }

    /// Highest power of `y` present, `None` for the zero polynomial.
    pub fn y_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Highest power of `x` present, `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.len().checked_sub(1)).max()
    }

    /// Non-zero terms ordered by ascending `j`, then ascending `i`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows.iter().enumerate().flat_map(|(j, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (i, j, c))
        })
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// First term with a negative coefficient, in term order.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.terms().find(|(_, _, c)| c.is_negative()).map(|(i, j, _)| (i, j))
    }

    /// Multiplies by `x^dx y^dy`.
    pub fn shift(&self, dx: usize, dy: usize) -> Self {
        if self.is_zero() {
            return BivarPoly::zero();
        }
        let mut rows = vec![Vec::new(); dy];
        rows.extend(self.rows.iter().map(|row| {
            if row.is_empty() {
                Vec::new()
            } else {
                let mut r = vec![BigInt::zero(); dx];
                r.extend(row.iter().cloned());
                r
            }
        }));
        BivarPoly { rows }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BivarPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        // Horner in y, with each row evaluated by Horner in x.
        self.rows.iter().rev().fold(BigRational::zero(), |acc, row| {
            let row_val = row
                .iter()
                .rev()
                .fold(BigRational::zero(), |a, c| a * x + BigRational::from_integer(c.clone()));
            acc * y + row_val
        })
    }

    /// `[yʲ]P` as a polynomial in `x`.
    pub fn slice_y(&self, j: usize) -> UniPoly {
        UniPoly::new(self.rows.get(j).cloned().unwrap_or_default())
    }

    /// `P(x₀, y)` for an integer `x₀`, as a polynomial in `y`.
    pub fn at_x(&self, x0: &BigInt) -> UniPoly {
        UniPoly::new(self.rows.iter().map(|r| UniPoly::new(r.clone()).eval_int(x0)).collect())
    }

    /// Exact quotient by `(y + 1)`, or `None` if the remainder is non-zero.
    pub fn div_y_plus_one(&self) -> Option<Self> {
        let Some(d) = self.y_degree() else {
            return Some(BivarPoly::zero());
        };
        if d == 0 {
            return None;
        }
        // Synthetic division in y with coefficients in Z[x]: q_{j-1} = c_j - q_j.
        let mut q = vec![UniPoly::zero(); d];
        let mut carry = UniPoly::zero();
        for j in (1..=d).rev() {
            let cj = self.slice_y(j);
            carry = &cj - &carry;
            q[j - 1] = carry.clone();
        }
        let remainder = &self.slice_y(0) - &carry;
        if !remainder.is_zero() {
            return None;
        }
        Some(BivarPoly::from_rows(q.into_iter().map(|u| u.coeffs).collect()))
    }

    /// Exact quotient by `(x − 1)`, or `None` if the remainder is non-zero.
    pub fn div_x_minus_one(&self) -> Option<Self> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            // c(x) = (x - 1) q(x): q_{i-1} = c_i + q_i, remainder c_0 + q_0.
            let d = row.len();
            if d == 0 {
                rows.push(Vec::new());
                continue;
            }
            let mut q = vec![BigInt::zero(); d - 1];
            let mut carry = BigInt::zero();
            for i in (1..d).rev() {
                carry = &row[i] + &carry;
                q[i - 1] = carry.clone();
            }
            if !(&row[0] + &carry).is_zero() {
                return None;
            }
            rows.push(q);
        }
        Some(BivarPoly::from_rows(rows))
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            write_plain_term(f, &mag, i, j)?;
        }
        Ok(())
    }
}

/// Writes `c*x^i*y^j` with unit coefficients and exponents elided.
pub(crate) fn write_plain_term(
    f: &mut impl fmt::Write,
    c: &BigInt,
    i: usize,
    j: usize,
) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    if !c.is_one() || (i == 0 && j == 0) {
        parts.push(c.to_string());
    }
    for (var, e) in [("x", i), ("y", j)] {
        match e {
            0 => {}
            1 => parts.push(var.to_string()),
            _ => parts.push(format!("{var}^{e}")),
        }
    }
    f.write_str(&parts.join("*"))
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        if self.rows.len() < rhs.rows.len() {
            self.rows.resize_with(rhs.rows.len(), Vec::new);
        }
        for (row, other) in self.rows.iter_mut().zip(&rhs.rows) {
            if row.len() < other.len() {
                row.resize_with(other.len(), BigInt::zero);
            }
            for (a, b) in row.iter_mut().zip(other) {
                *a += b;
            }
        }
        self.normalize();
    }
}

impl SubAssign<&BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &BivarPoly) {
        *self += &(-rhs);
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            rows: self.rows.iter().map(|r| r.iter().map(|c| -c).collect()).collect(),
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        let xlen = self.x_degree().unwrap_or(0) + rhs.x_degree().unwrap_or(0) + 1;
        let mut rows = vec![vec![BigInt::zero(); xlen]; self.rows.len() + rhs.rows.len() - 1];
        for (j1, r1) in self.rows.iter().enumerate() {
            for (j2, r2) in rhs.rows.iter().enumerate() {
                let out = &mut rows[j1 + j2];
                for (i1, a) in r1.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (i2, b) in r2.iter().enumerate() {
                        if !b.is_zero() {
                            out[i1 + i2] += a * b;
                        }
                    }
                }
            }
        }
        BivarPoly::from_rows(rows)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: &BivarPoly) -> BivarPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<BivarPoly> for &BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Dense univariate polynomial, `coeffs[k]` multiplies `tᵏ`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `p'(1)`.
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .sum()
    }

    /// `p''(1)`.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .skip(2)
            .map(|(k, c)| c * BigInt::from(k * (k - 1)))
            .sum()
    }

    /// Smallest positive exponent with a non-zero coefficient.
    pub fn lowest_positive_exponent(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
    }

    /// Exact quotient by `1 + t^k` (`k ≥ 1`), or `None` on a remainder.
    pub fn div_one_plus_power(&self, k: usize) -> Option<UniPoly> {
        assert!(k >= 1);
        let mut rem = self.coeffs.clone();
        let Some(d) = self.degree() else {
            return Some(UniPoly::zero());
        };
        if d < k {
            return None;
        }
        let mut q = vec![BigInt::zero(); d - k + 1];
        for e in (k..=d).rev() {
            let c = std::mem::take(&mut rem[e]);
            if c.is_zero() {
                continue;
            }
            rem[e - k] -= &c;
            q[e - k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(q))
    }

    /// Renders with the given variable name, ascending powers.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if !mag.is_one() || k == 0 {
                parts.push(mag.to_string());
            }
            match k {
                0 => {}
                1 => parts.push(var.to_string()),
                _ => parts.push(format!("{var}^{k}")),
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                out[a + b] += ca * cb;
            }
        }
        UniPoly::new(out)
    }
}
