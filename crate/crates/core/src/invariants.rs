//! Graph parameters read back from the coefficients of a boundary
//! polynomial. Nothing here looks at a graph.
//!
//! Every extractor assumes a polynomial that came from a graph; the checks
//! that can fail on arbitrary input report [`Error::NotGraphPolynomial`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryPolynomial;
use crate::error::{Error, Result};

fn not_graph(msg: impl Into<String>) -> Error {
    Error::NotGraphPolynomial(msg.into())
}

fn small(c: &BigInt, what: &str) -> Result<usize> {
    c.to_usize()
        .ok_or_else(|| not_graph(format!("{what} is not a small non-negative integer")))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_i B_{i,1}`.
pub fn order_from(p: &BoundaryPolynomial) -> Result<usize> {
    small(&p.slice_y(1).eval_int(&BigInt::one()), "order")
}

/// Half the derivative of the `y`-slice at `x = 1`.
pub fn size_from(p: &BoundaryPolynomial) -> Result<usize> {
    let twice = p.slice_y(1).derivative_at_one();
    if twice.is_odd() {
        return Err(not_graph("odd degree sum"));
    }
    small(&(twice / 2), "size")
}

/// `(d/dx [y²]B |₁ + ½ d²/dx² [y]B |₁) / (2(n−2))`, defined for `n ≥ 3`.
pub fn size_from_alt(p: &BoundaryPolynomial) -> Result<usize> {
    let n = p.order();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "the pair-based size formula needs n >= 3, got {n}"
        )));
    }
    let pairs = p.slice_y(2).derivative_at_one();
    let second = p.slice_y(1).second_derivative_at_one();
    if second.is_odd() {
        return Err(not_graph("odd second derivative of the vertex slice"));
    }
    let numerator: BigInt = pairs + second / 2;
    let (q, r) = numerator.div_rem(&BigInt::from(2 * (n - 2)));
    if !r.is_zero() {
        return Err(not_graph("pair-based size is not an integer"));
    }
    small(&q, "size")
}

/// Degree `d` repeated `B_{d,1}` times, non-increasing.
pub fn degree_sequence(p: &BoundaryPolynomial) -> Result<Vec<usize>> {
    let slice = p.slice_y(1);
    let mut seq = Vec::new();
    for (d, c) in slice.coeffs().iter().enumerate().rev() {
        seq.extend(std::iter::repeat(d).take(small(c, "degree multiplicity")?));
    }
    Ok(seq)
}

/// `B_{0,1}`, cross-checked against the multiplicity of the factor `(y+1)`.
pub fn isolated_count(p: &BoundaryPolynomial) -> Result<usize> {
    let by_coefficient = small(&p.coefficient(0, 1), "isolated count")?;
    let by_factor = p.y_plus_one_multiplicity();
    if by_coefficient != by_factor {
        return Err(not_graph(format!(
            "B_{{0,1}} = {by_coefficient} but (y+1) has multiplicity {by_factor}"
        )));
    }
    Ok(by_coefficient)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub connected: bool,
    pub count: usize,
    /// Non-decreasing.
    pub orders: Vec<usize>,
}

/// Connectivity from the vanishing of `B_{0,j}`, the number of components
/// from `B(0,1) = 2^k`, and their orders by peeling `B(0,y) = Π(1 + y^{nᵢ})`.
pub fn connectivity_and_components(p: &BoundaryPolynomial) -> Result<ComponentSummary> {
    let n = p.order();
    let connected = (1..n).all(|j| p.coefficient(0, j).is_zero());

    let mut running = p.substitute_x0();
    let at_one = running.eval_int(&BigInt::one());
    let count = match at_one.to_u64() {
        Some(v) if v.is_power_of_two() => v.trailing_zeros() as usize,
        _ => return Err(not_graph(format!("B(0,1) = {at_one} is not a power of two"))),
    };

    let mut orders = Vec::with_capacity(count);
    for _ in 0..count {
        let k = running
            .lowest_positive_exponent()
            .ok_or_else(|| not_graph("component peeling ran out of factors"))?;
        running = running
            .div_one_plus_power(k)
            .ok_or_else(|| not_graph(format!("B(0,y) is not divisible by 1 + y^{k}")))?;
        orders.push(k);
    }
    if running.coeffs() != [BigInt::one()] {
        return Err(not_graph("component peeling left a non-trivial quotient"));
    }
    if orders.iter().sum::<usize>() != n {
        return Err(not_graph("component orders do not sum to the order"));
    }
    if connected != (count == 1) && n > 0 {
        return Err(not_graph("connectivity test disagrees with the component count"));
    }
    Ok(ComponentSummary {
        connected,
        count,
        orders,
    })
}

/// Components isomorphic to `P₂`: `B_{0,2} − C(B_{0,1}, 2)`.
pub fn p2_components(p: &BoundaryPolynomial) -> Result<usize> {
    let iso = small(&p.coefficient(0, 1), "isolated count")?;
    small(&(p.coefficient(0, 2) - binomial(iso, 2)), "P2 component count")
}

/// Components isomorphic to `P₃` or `C₃`:
/// `B_{0,3} − C(B_{0,1}, 3) − p·B_{0,1}`.
pub fn p3_or_c3_components(p: &BoundaryPolynomial) -> Result<usize> {
    let iso = small(&p.coefficient(0, 1), "isolated count")?;
    let pairs = p2_components(p)?;
    let q = p.coefficient(0, 3) - binomial(iso, 3) - BigInt::from(pairs * iso);
    small(&q, "P3/C3 component count")
}

/// Smallest `k ≥ 1` with `B_{n−k,k} ≠ 0` (`0` for the null graph).
pub fn domination_number(p: &BoundaryPolynomial) -> usize {
    let n = p.order();
    (1..=n)
        .find(|&k| !p.coefficient(n - k, k).is_zero())
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialRoman {
    pub differential: usize,
    pub roman: usize,
}

/// `∂ = deg B(x, x⁻¹)` and `γ_R = deg B(x, x) − ∂`, cross-checked against
/// `γ_R + ∂ = n`.
pub fn differential_and_roman(p: &BoundaryPolynomial) -> Result<DifferentialRoman> {
    let profile = p
        .laurent_profile()
        .ok_or_else(|| not_graph("zero polynomial"))?;
    let differential = usize::try_from(profile.degree_diff)
        .map_err(|_| not_graph("negative differential"))?;
    let roman = profile
        .degree_sum
        .checked_sub(differential)
        .ok_or_else(|| not_graph("differential exceeds the total degree"))?;
    if roman + differential != p.order() {
        return Err(not_graph(format!(
            "Roman number {roman} plus differential {differential} is not the order {}",
            p.order()
        )));
    }
    Ok(DifferentialRoman {
        differential,
        roman,
    })
}

/// Smallest `k ≥ 1` such that `B_{k,j} ≠ 0` for some `j` with `k + j < n`:
/// a set whose boundary separates it from a non-empty rest. Without such a
/// term the graph is complete and the answer is `n − 1`.
pub fn vertex_connectivity(p: &BoundaryPolynomial) -> Result<usize> {
    let n = p.order();
    if !connectivity_and_components(p)?.connected {
        return Err(Error::Disconnected);
    }
    let best = p
        .terms()
        .filter(|&(i, j, _)| i >= 1 && j >= 1 && i + j < n)
        .map(|(i, _, _)| i)
        .min();
    Ok(best.unwrap_or(n.saturating_sub(1)))
}

/// For every `k ≤ δ`: `B_{k,n−k} = C(n,k)` and `B_{r,n−k} = 0` for `r ≠ k`,
/// with `δ` read from the degree sequence.
pub fn min_degree_check(p: &BoundaryPolynomial) -> Result<bool> {
    let n = p.order();
    let delta = degree_sequence(p)?.last().copied().unwrap_or(0);
    for k in 0..=delta.min(n) {
        let row = p.slice_y(n - k);
        for (r, c) in row.coeffs().iter().enumerate() {
            let expected = if r == k { binomial(n, k) } else { BigInt::zero() };
            if *c != expected {
                return Ok(false);
            }
        }
        if row.coeffs().len() <= k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All parameters recoverable from the polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    /// Size from the pair-based formula; `None` for `n ≤ 2`.
    pub m_alt: Option<usize>,
    pub degree_sequence: Vec<usize>,
    pub isolated: usize,
    pub connected: bool,
    pub components: usize,
    pub component_orders: Vec<usize>,
    pub p2_components: usize,
    pub p3_c3_components: usize,
    pub gamma: usize,
    pub differential: usize,
    pub gamma_r: usize,
    /// `None` for disconnected graphs.
    pub kv: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl InvariantReport {
    pub fn from_polynomial(p: &BoundaryPolynomial) -> Result<Self> {
        let n = order_from(p)?;
        if n != p.order() {
            return Err(not_graph(format!(
                "vertex slice counts {n} vertices, polynomial order is {}",
                p.order()
            )));
        }
        let m = size_from(p)?;
        let m_alt = if n >= 3 { Some(size_from_alt(p)?) } else { None };
        if m_alt.is_some_and(|alt| alt != m) {
            return Err(not_graph("the two size computations disagree"));
        }
        let components = connectivity_and_components(p)?;
        let dr = differential_and_roman(p)?;
        let mut notes = Vec::new();
        let kv = if components.connected {
            Some(vertex_connectivity(p)?)
        } else {
            notes.push("vertex connectivity is reported only for connected graphs".to_string());
            None
        };
        Ok(InvariantReport {
            n,
            m,
            m_alt,
            degree_sequence: degree_sequence(p)?,
            isolated: isolated_count(p)?,
            connected: components.connected,
            components: components.count,
            component_orders: components.orders,
            p2_components: p2_components(p)?,
            p3_c3_components: p3_or_c3_components(p)?,
            gamma: domination_number(p),
            differential: dr.differential,
            gamma_r: dr.roman,
            kv,
            notes,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
