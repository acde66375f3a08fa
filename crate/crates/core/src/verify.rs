//! Identity checks comparing formulas and extractors against enumeration
//! and brute-force oracles on a concrete graph.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::boundary::BoundaryPolynomial;
use crate::enumerate::{
    boundary_polynomial_with, restricted_polynomial, restricted_vector, EnumConfig, NeighborCondition,
    RestrictedSpec, VertexCondition,
};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::formulas::{
    cycle_restricted_term, edge_addition_terms, family_polynomial, path_vector, pendant_transfer, poly_bridge,
    poly_corona_p2, poly_cycle, poly_double_star, poly_edge_deleted, poly_join, poly_path, poly_subdivided,
};
use crate::graph::{Edge, Graph};
use crate::invariants::{self, InvariantReport};
use crate::oracle;
use crate::poly::BivarPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Factors,
    Eval,
    Isolated,
    Coefficients,
    Join,
    Pendant,
    Path,
    EdgeDelete,
    Cycle,
    Bridge,
    Corona,
    DoubleStar,
    Subdivision,
    Subgraph,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Factors,
        Check::Eval,
        Check::Isolated,
        Check::Coefficients,
        Check::Join,
        Check::Pendant,
        Check::Path,
        Check::EdgeDelete,
        Check::Cycle,
        Check::Bridge,
        Check::Corona,
        Check::DoubleStar,
        Check::Subdivision,
        Check::Subgraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Factors => "factors",
            Check::Eval => "eval",
            Check::Isolated => "isolated",
            Check::Coefficients => "coefficients",
            Check::Join => "join",
            Check::Pendant => "pendant",
            Check::Path => "path",
            Check::EdgeDelete => "edge-delete",
            Check::Cycle => "cycle",
            Check::Bridge => "bridge",
            Check::Corona => "corona",
            Check::DoubleStar => "double-star",
            Check::Subdivision => "subdivision",
            Check::Subgraph => "subgraph",
        }
    }

    /// Parses `all` or a comma-separated list of names.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                return Ok(Check::ALL.to_vec());
            }
            let c: Check = part.parse()?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        if out.is_empty() {
            return Err(Error::Precondition("empty check list".into()));
        }
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::Precondition(format!("unknown check `{s}`")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one check on one subject graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} cases)", self.check, self.cases),
            Some(c) => write!(f, "FAIL {}: {}", self.check, c),
        }
    }
}

/// Collects cases and keeps the first failure.
struct Tally {
    name: String,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            failure: None,
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn same(&mut self, what: impl fmt::Display, expected: &BoundaryPolynomial, got: &BoundaryPolynomial) {
        self.expect(expected == got, || match expected.first_difference(got) {
            Some((i, j)) => format!(
                "{what}: coefficient of x^{i}*y^{j} is {} by enumeration, {} by identity",
                expected.coefficient(i, j),
                got.coefficient(i, j)
            ),
            None => format!("{what}: orders {} and {} differ", expected.order(), got.order()),
        });
    }

    fn equal<T: PartialEq + fmt::Debug>(&mut self, what: impl fmt::Display, expected: T, got: T) {
        self.expect(expected == got, || format!("{what}: expected {expected:?}, got {got:?}"));
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            check: self.name,
            cases: self.cases,
            counterexample: self.failure,
        }
    }
}

/// Small fixed partner graphs for the two-graph identities.
fn partners() -> Vec<(&'static str, Graph)> {
    vec![
        ("E1", Graph::empty(1).expect("E1")),
        ("E2", Graph::empty(2).expect("E2")),
        ("K2", Family::Complete(2).build().expect("K2")),
        ("P3", Family::Path(3).build().expect("P3")),
    ]
}

pub struct Verifier {
    cfg: EnumConfig,
}

impl Verifier {
    pub fn new(cfg: EnumConfig) -> Self {
        Verifier { cfg }
    }

    fn poly(&self, g: &Graph) -> Result<BoundaryPolynomial> {
        boundary_polynomial_with(g, &self.cfg)
    }

    pub fn run(&self, check: Check, g: &Graph) -> Result<CheckOutcome> {
        match check {
            Check::Factors => self.factors(g),
            Check::Eval => self.eval(g),
            Check::Isolated => self.isolated(g),
            Check::Coefficients => self.coefficients(g),
            Check::Join => self.join(g),
            Check::Pendant => self.pendant(g),
            Check::Path => self.path(g.order()),
            Check::EdgeDelete => self.edge_delete(g),
            Check::Cycle => self.cycle(g.order().max(3)),
            Check::Bridge => self.bridge(g),
            Check::Corona => self.corona(g),
            Check::DoubleStar => self.double_star(g.order().max(4)),
            Check::Subdivision => self.subdivision(g),
            Check::Subgraph => self.subgraph(g),
        }
    }

    /// Closed form against enumeration for a family member.
    pub fn family_formula(&self, family: &Family) -> Result<CheckOutcome> {
        let mut t = Tally::new("formula");
        let g = family.build()?;
        t.same(family, &self.poly(&g)?, &family_polynomial(family)?);
        Ok(t.finish())
    }

    fn factors(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Factors.name());
        let mut product = BoundaryPolynomial::one();
        for comp in g.connected_components() {
            product = product.multiply(&self.poly(&g.induced_subgraph(comp))?);
        }
        t.same("product over components", &self.poly(g)?, &product);
        Ok(t.finish())
    }

    fn eval(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Eval.name());
        let p = self.poly(g)?;
        let n = g.order();
        let binomial_row = (&BivarPoly::one() + &BivarPoly::y()).pow(n as u32).at_x(&BigInt::zero());
        t.equal("B(1,y)", binomial_row, p.substitute_x1());
        let two_n = BigRational::from_integer(BigInt::one() << n);
        t.equal("B(1,1)", two_n, p.evaluate_int(1, 1));
        if n >= 1 {
            t.equal("B(1,-1)", BigRational::zero(), p.evaluate_int(1, -1));
        }
        let k = g.connected_components().len();
        t.equal("B(0,1)", BigRational::from_integer(BigInt::one() << k), p.evaluate_int(0, 1));
        for j in 0..=n {
            let expected = (&BivarPoly::one() + &BivarPoly::y()).pow(n as u32).coeff(0, j);
            t.equal(format!("row sum j={j}"), expected, p.slice_y(j).eval_int(&BigInt::one()));
        }
        Ok(t.finish())
    }

    fn isolated(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Isolated.name());
        let p = self.poly(g)?;
        t.equal("(y+1) multiplicity", g.isolated_vertices(), p.y_plus_one_multiplicity());
        t.equal("B_{0,1}", BigInt::from(g.isolated_vertices()), p.coefficient(0, 1));
        let non_isolated = g.vertex_mask() & !(0..g.order()).filter(|&v| g.degree(v) == 0).fold(0u64, |m, v| m | 1 << v);
        t.same("deflated polynomial", &self.poly(&g.induced_subgraph(non_isolated))?, &p.deflate()?);
        Ok(t.finish())
    }

    fn coefficients(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Coefficients.name());
        let p = self.poly(g)?;
        let n = g.order();
        let report = InvariantReport::from_polynomial(&p)?;
        t.equal("order", n, report.n);
        t.equal("size", g.size(), report.m);
        if n >= 3 {
            t.equal("pair-based size", Some(g.size()), report.m_alt);
        }
        let mut degrees = g.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        t.equal("degree sequence", degrees, report.degree_sequence.clone());
        t.equal("isolated", g.isolated_vertices(), report.isolated);
        t.equal("connected", g.is_connected(), report.connected);
        let comps = g.connected_components();
        let mut orders: Vec<usize> = comps.iter().map(|c| c.count_ones() as usize).collect();
        orders.sort_unstable();
        t.equal("component orders", orders, report.component_orders.clone());

        let shape = |c: u64| {
            let sub = g.induced_subgraph(c);
            (sub.order(), sub.size())
        };
        let p2 = comps.iter().filter(|&&c| shape(c) == (2, 1)).count();
        let p3c3 = comps
            .iter()
            .filter(|&&c| matches!(shape(c), (3, 2) | (3, 3)))
            .count();
        t.equal("P2 components", p2, report.p2_components);
        t.equal("P3/C3 components", p3c3, report.p3_c3_components);

        if n <= oracle::ORACLE_LIMIT {
            t.equal("domination number", oracle::oracle_gamma(g)?, report.gamma);
            let diff = oracle::oracle_differential(g)?;
            t.equal("differential", diff, report.differential);
            let roman = if n <= oracle::ROMAN_LABELING_LIMIT {
                oracle::oracle_roman(g)?
            } else {
                n - diff
            };
            t.equal("Roman domination number", roman, report.gamma_r);
            if g.is_connected() {
                t.equal("vertex connectivity", Some(oracle::oracle_kv(g)?), report.kv);
            }
        }
        t.equal("minimum-degree rows", true, invariants::min_degree_check(&p)?);
        for j in 0..=n {
            t.equal(format!("B_(0,{j}) symmetry"), p.coefficient(0, j), p.coefficient(0, n - j));
        }
        Ok(t.finish())
    }

    fn join(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Join.name());
        if g.order() == 0 {
            return Ok(t.finish());
        }
        let p = self.poly(g)?;
        for (name, h) in partners() {
            let joined = g.join(&h)?;
            t.same(format!("G + {name}"), &self.poly(&joined)?, &poly_join(&p, &self.poly(&h)?)?);
        }
        Ok(t.finish())
    }

    fn pendant(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Pendant.name());
        let e1 = Graph::empty(1)?;
        for v in 0..g.order() {
            let grown = g.bridge(v, &e1, 0)?;
            let predicted = pendant_transfer(&restricted_vector(g, v, &self.cfg)?);
            let actual = restricted_vector(&grown, g.order(), &self.cfg)?;
            t.expect(predicted == actual, || format!("pendant at vertex {v}: restricted vectors differ"));
        }
        Ok(t.finish())
    }

    fn path(&self, n: usize) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Path.name());
        for k in 0..=n {
            let g = Family::Path(k).build()?;
            let enumerated = self.poly(&g)?;
            t.same(format!("P{k}"), &enumerated, &poly_path(k));
            t.same(format!("P{k} transfer sum"), &enumerated, &path_vector(k).sum()?);
        }
        Ok(t.finish())
    }

    fn edge_delete(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::EdgeDelete.name());
        let p = self.poly(g)?;
        for e in g.edges().collect::<Vec<_>>() {
            let minus = g.delete_edge(e)?;
            let (a, b) = edge_addition_terms(&minus, e.u, e.v, &self.cfg)?;
            t.same(format!("edge {e}"), &p, &poly_edge_deleted(&self.poly(&minus)?, &a, &b)?);
        }
        Ok(t.finish())
    }

    fn cycle(&self, n: usize) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Cycle.name());
        for k in 3..=n {
            let path = Family::Path(k).build()?;
            let spec = RestrictedSpec::pair(
                VertexCondition::new(0, false, NeighborCondition::Empty),
                VertexCondition::new(k - 1, true, NeighborCondition::Any),
            )?;
            t.same(
                format!("restricted term of P{k}"),
                &restricted_polynomial(&path, &spec, &self.cfg)?,
                &cycle_restricted_term(k)?,
            );
            t.same(format!("C{k}"), &self.poly(&Family::Cycle(k).build()?)?, &poly_cycle(k)?);
        }
        Ok(t.finish())
    }

    fn bridge(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Bridge.name());
        for (name, h) in partners() {
            for u in 0..g.order() {
                let left = restricted_vector(g, u, &self.cfg)?.bridge_vector();
                for v in 0..h.order() {
                    let right = restricted_vector(&h, v, &self.cfg)?.bridge_vector();
                    let bridged = g.bridge(u, &h, v)?;
                    t.same(
                        format!("bridge G:{u} to {name}:{v}"),
                        &self.poly(&bridged)?,
                        &poly_bridge(&left, &right)?,
                    );
                }
            }
        }
        Ok(t.finish())
    }

    fn corona(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Corona.name());
        if g.order() == 0 {
            return Ok(t.finish());
        }
        let p = self.poly(g)?;
        for (name, h) in partners() {
            let built = g.corona_p2(&h)?;
            t.same(
                format!("corona of G and {name}"),
                &self.poly(&built)?,
                &poly_corona_p2(&p, &self.poly(&h)?)?,
            );
        }
        Ok(t.finish())
    }

    fn double_star(&self, n: usize) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::DoubleStar.name());
        for r in 2..=n - 2 {
            for s in 2..=n - r {
                let g = Family::DoubleStar(r, s).build()?;
                t.same(format!("S({r},{s})"), &self.poly(&g)?, &poly_double_star(r, s)?);
            }
        }
        Ok(t.finish())
    }

    fn subdivision(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Subdivision.name());
        for e in g.edges().collect::<Vec<_>>() {
            let sub = g.subdivide_edge(e)?;
            t.same(format!("edge {e}"), &self.poly(&sub)?, &poly_subdivided(g, e, &self.cfg)?);
        }
        Ok(t.finish())
    }

    fn subgraph(&self, g: &Graph) -> Result<CheckOutcome> {
        let mut t = Tally::new(Check::Subgraph.name());
        let p = self.poly(g)?;
        for e in g.edges().collect::<Vec<_>>() {
            let minus = self.poly(&g.delete_edge(e)?)?;
            t.expect(minus != p, || format!("removing edge {e} leaves the polynomial unchanged"));
            let diff = p.as_poly() - minus.as_poly();
            t.expect(
                diff.div_x_minus_one().is_some_and(|q| q.first_negative().is_none()),
                || format!("removing edge {e}: difference is not (x-1) times a non-negative polynomial"),
            );
        }
        for v in 0..g.order() {
            let minus = self.poly(&g.delete_vertex(v)?)?;
            t.expect(minus.as_poly() != p.as_poly(), || format!("removing vertex {v} leaves the polynomial unchanged"));
        }
        Ok(t.finish())
    }
}

/// Removing an edge changes the polynomial by `(x−1)·Q` with `Q ≥ 0`,
/// `Q ≠ 0`.
pub fn edge_removal_quotient(g: &Graph, e: Edge, cfg: &EnumConfig) -> Result<Option<BivarPoly>> {
    let p = boundary_polynomial_with(g, cfg)?;
    let minus = boundary_polynomial_with(&g.delete_edge(e)?, cfg)?;
    Ok((p.as_poly() - minus.as_poly()).div_x_minus_one())
}
