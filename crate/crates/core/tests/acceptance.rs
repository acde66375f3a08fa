//! Acceptance suite: eight end-to-end criteria, one PASS/FAIL line each.
//! Run with `cargo test -p boundary-poly --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use boundary_poly::catalog::{all_graphs, are_isomorphic, random_graph, random_graphs, seeded_rng};
use boundary_poly::enumerate::{boundary_polynomial, restricted_vector, EnumConfig};
use boundary_poly::formulas::{
    edge_addition_terms, family_polynomial, pendant_transfer, poly_bridge, poly_complete, poly_cone, poly_corona_p2,
    poly_cycle, poly_edge_deleted, poly_join, poly_path, poly_subdivided, poly_wheel,
};
use boundary_poly::oracle::{oracle_differential, oracle_gamma, oracle_kv, oracle_roman};
use boundary_poly::{BivarPoly, BoundaryPolynomial, Family, FamilyKind, Graph, InvariantReport, UniPoly};

type Outcome = Result<String, String>;

const SEED: u64 = 20_240_601;

fn enumerate(g: &Graph) -> BoundaryPolynomial {
    boundary_polynomial(g).expect("within cap")
}

fn bp(order: usize, terms: &[(usize, usize, i64)]) -> BoundaryPolynomial {
    BoundaryPolynomial::new(order, BivarPoly::from_terms(terms.iter().copied())).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(what: &str, a: &BoundaryPolynomial, b: &BoundaryPolynomial) -> Result<(), String> {
    ensure(a == b, || format!("{what}: {a} != {b}"))
}

fn golden_k4() -> Outcome {
    let expected = bp(4, &[(0, 0, 1), (3, 1, 4), (2, 2, 6), (1, 3, 4), (0, 4, 1)]);
    same("enumeration", &enumerate(&Family::Complete(4).build().unwrap()), &expected)?;
    same("complete formula", &poly_complete(4), &expected)?;
    same("wheel formula", &poly_wheel(4).unwrap(), &expected)?;
    let c3 = enumerate(&Family::Cycle(3).build().unwrap());
    same("cone over C3", &poly_cone(&c3).unwrap(), &expected)?;
    let diff = expected.differential_polynomial();
    ensure(diff == UniPoly::from_i64s(&[1, 0, 4, 0, 7, 0, 4]), || format!("differential polynomial {diff:?}"))?;
    Ok("four routes agree; differential polynomial 4x^6+7x^4+4x^2+1".into())
}

fn golden_pair() -> Outcome {
    let k33 = Family::CompleteBipartite(3, 3).build().unwrap();
    let prism = Family::Prism.build().unwrap();
    let printed = bp(
        6,
        &[(0, 0, 1), (3, 1, 6), (3, 2, 6), (4, 2, 9), (3, 3, 20), (2, 4, 15), (1, 5, 6), (0, 6, 1)],
    );
    same("K3,3", &enumerate(&k33), &printed)?;
    same("prism", &enumerate(&prism), &printed)?;
    ensure(!are_isomorphic(&k33, &prism).unwrap(), || "canonical forms coincide".into())?;
    Ok("identical polynomials, distinct canonical forms".into())
}

fn check_small_graph(g: &Graph) -> Result<(), String> {
    let n = g.order();
    let p = enumerate(g);
    let tag = || format!("{g:?}");
    for j in 0..=n {
        let row: BigInt = p.slice_y(j).eval_int(&BigInt::one());
        let binom = (&BivarPoly::one() + &BivarPoly::y()).pow(n as u32).coeff(0, j);
        ensure(row == binom, || format!("{}: row sum j={j}", tag()))?;
    }
    ensure(p.evaluate_int(1, 1) == BigRational::from_integer(BigInt::one() << n), || format!("{}: B(1,1)", tag()))?;
    ensure(n == 0 || p.evaluate_int(1, -1).is_zero(), || format!("{}: B(1,-1)", tag()))?;

    let mut product = BoundaryPolynomial::one();
    for comp in g.connected_components() {
        product = product.multiply(&enumerate(&g.induced_subgraph(comp)));
    }
    ensure(product == p, || format!("{}: component product", tag()))?;
    ensure(p.y_plus_one_multiplicity() == g.isolated_vertices(), || format!("{}: (y+1) multiplicity", tag()))?;

    let r = InvariantReport::from_polynomial(&p).map_err(|e| format!("{}: {e}", tag()))?;
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    ensure(r.m == g.size(), || format!("{}: size", tag()))?;
    ensure(r.degree_sequence == degrees, || format!("{}: degree sequence", tag()))?;
    ensure(r.gamma == oracle_gamma(g).unwrap(), || format!("{}: domination number", tag()))?;
    ensure(r.differential == oracle_differential(g).unwrap(), || format!("{}: differential", tag()))?;
    ensure(r.gamma_r == oracle_roman(g).unwrap(), || format!("{}: Roman domination", tag()))?;
    if g.is_connected() {
        ensure(r.kv == Some(oracle_kv(g).unwrap()), || format!("{}: vertex connectivity", tag()))?;
    }
    Ok(())
}

fn exhaustive_oracles() -> Outcome {
    let mut count = 0;
    for g in all_graphs(5).unwrap() {
        check_small_graph(&g)?;
        count += 1;
    }
    for n in [6, 7] {
        for g in random_graphs(n, 500, SEED) {
            check_small_graph(&g)?;
            count += 1;
        }
    }
    Ok(format!("{count} graphs"))
}

fn formulas_vs_enumeration() -> Outcome {
    let mut count = 0;
    for kind in FamilyKind::ALL {
        for a in 0..=12 {
            for b in 0..=12 {
                let Ok(f) = Family::from_parts(kind, Some(a), Some(b), Some(a), Some(b)) else {
                    continue;
                };
                if f.order() > 12 || f == Family::Prism {
                    continue;
                }
                // Single-parameter families ignore the second value.
                if !matches!(kind, FamilyKind::CompleteBipartite | FamilyKind::DoubleStar) && b > 0 {
                    continue;
                }
                same(&f.to_string(), &enumerate(&f.build().unwrap()), &family_polynomial(&f).unwrap())?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} family members"))
}

fn recurrences() -> Outcome {
    let cfg = EnumConfig::default();
    let e1 = Graph::empty(1).unwrap();
    let (mut edges, mut pendants) = (0, 0);
    for g in all_graphs(5).unwrap() {
        let p = enumerate(&g);
        for e in g.edges().collect::<Vec<_>>() {
            let minus = g.delete_edge(e).unwrap();
            let (a, b) = edge_addition_terms(&minus, e.u, e.v, &cfg).unwrap();
            same(&format!("edge removal {g:?} {e}"), &p, &poly_edge_deleted(&enumerate(&minus), &a, &b).unwrap())?;
            let sub = poly_subdivided(&g, e, &cfg).unwrap();
            same(&format!("subdivision {g:?} {e}"), &enumerate(&g.subdivide_edge(e).unwrap()), &sub)?;
            edges += 1;
        }
        for v in 0..5 {
            let grown = g.bridge(v, &e1, 0).unwrap();
            let predicted = pendant_transfer(&restricted_vector(&g, v, &cfg).unwrap());
            ensure(predicted == restricted_vector(&grown, 5, &cfg).unwrap(), || {
                format!("pendant at {v} of {g:?}")
            })?;
            pendants += 1;
        }
    }
    Ok(format!("{edges} edges, {pendants} pendant attachments"))
}

fn compositions() -> Outcome {
    let cfg = EnumConfig::default();
    let mut rng = seeded_rng(SEED);
    for k in 0..500 {
        let n1 = rng.gen_range(1..=8);
        let n2 = rng.gen_range(1..=9 - n1);
        let g1 = random_graph(n1, &mut rng);
        let g2 = random_graph(n2, &mut rng);
        let (p1, p2) = (enumerate(&g1), enumerate(&g2));
        same(&format!("join #{k}"), &enumerate(&g1.join(&g2).unwrap()), &poly_join(&p1, &p2).unwrap())?;
        same(&format!("corona #{k}"), &enumerate(&g1.corona_p2(&g2).unwrap()), &poly_corona_p2(&p1, &p2).unwrap())?;
    }
    for k in 0..200 {
        let n1 = rng.gen_range(1..=8);
        let n2 = rng.gen_range(1..=9 - n1);
        let g1 = random_graph(n1, &mut rng);
        let g2 = random_graph(n2, &mut rng);
        let (u, v) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        let left = restricted_vector(&g1, u, &cfg).unwrap().bridge_vector();
        let right = restricted_vector(&g2, v, &cfg).unwrap().bridge_vector();
        same(&format!("bridge #{k}"), &enumerate(&g1.bridge(u, &g2, v).unwrap()), &poly_bridge(&left, &right).unwrap())?;
    }
    Ok("500 join/corona pairs, 200 bridge pairs".into())
}

fn scaling() -> Outcome {
    let start = Instant::now();
    let p64 = poly_path(64);
    let path_time = start.elapsed();
    let two_64 = BigRational::from_integer(BigInt::one() << 64);
    ensure(p64.evaluate_int(1, 1) == two_64, || "B(P64;1,1) != 2^64".into())?;
    ensure(path_time < Duration::from_secs(2), || format!("P64 took {path_time:?}"))?;
    same("C12", &enumerate(&Family::Cycle(12).build().unwrap()), &poly_cycle(12).unwrap())?;
    Ok(format!("P64 in {path_time:?}"))
}

fn subgraph_distinctness() -> Outcome {
    let mut rng = seeded_rng(SEED ^ 8);
    let mut pairs = 0;
    while pairs < 100 {
        let n = rng.gen_range(2..=6);
        let g = random_graph(n, &mut rng);
        let edges: Vec<_> = g.edges().collect();
        let Some(&e) = edges.choose(&mut rng) else {
            continue;
        };
        let p = enumerate(&g);
        let minus = enumerate(&g.delete_edge(e).unwrap());
        ensure(p != minus, || format!("{g:?} minus {e}: equal polynomials"))?;
        let q = (p.as_poly() - minus.as_poly()).div_x_minus_one();
        ensure(q.as_ref().is_some_and(|q| q.first_negative().is_none()), || {
            format!("{g:?} minus {e}: difference is not (x-1)Q with Q >= 0")
        })?;
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("1 golden K4", Duration::from_millis(100), golden_k4),
        ("2 golden K3,3 / prism pair", Duration::from_millis(100), golden_pair),
        ("3 exhaustive small-graph oracles", Duration::from_secs(300), exhaustive_oracles),
        ("4 formulas vs enumeration", Duration::from_secs(60), formulas_vs_enumeration),
        ("5 recurrence identities", Duration::from_secs(300), recurrences),
        ("6 compositional identities", Duration::from_secs(300), compositions),
        ("7 scaling", Duration::from_secs(60), scaling),
        ("8 proper-subgraph distinctness", Duration::from_secs(60), subgraph_distinctness),
    ];
    let mut failures = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
