//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use rayon::prelude::*;

use ddet::algebra::{Field, Monomial, OrderChoice, VariableId, DEFAULT_PRIME};
use ddet::combinatorics::{
    hilbert_by_counting, hilbert_function_upto, stanley_reisner, MonomialIdeal, SimplicialComplex,
};
use ddet::dimension::{serre_r1_check, verify_dimension, DimensionOptions};
use ddet::grid::{acceptance_grid, run_grid, CaseReport, GridOptions};
use ddet::groebner::{verify_groebner, Reducer};
use ddet::ideals::{
    build_region, diagonal_monomials, hat_diagram, induction_step, lambda_family_generators, minor_determinant,
    verify_diagonal_order, BlockMatrixShape, DiagramFamily, Family, IdealSpec, Orientation, YCell, YoungDiagram,
};
use ddet::liaison::{detect_trivial_step, replay_induction, ReplayOptions};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn yd(parts: &[u16]) -> YoungDiagram {
    YoungDiagram::new(parts.to_vec()).expect("partition")
}

/// Every report must carry a passing check whose name starts with `prefix`.
fn grid_checks(reports: &[CaseReport], prefix: &str, expected_per_case: usize) -> Result<(), String> {
    for rep in reports {
        let hits: Vec<_> = rep.checks.iter().filter(|c| c.name.starts_with(prefix)).collect();
        ensure(hits.len() == expected_per_case, || {
            format!(
                "{}: expected {expected_per_case} `{prefix}` checks, found {}",
                rep.case.label(),
                hits.len()
            )
        })?;
        if let Some(bad) = hits.iter().find(|c| !c.passed()) {
            return Err(format!(
                "{} {}: {}",
                rep.case.label(),
                bad.name,
                bad.witness.clone().unwrap_or_default()
            ));
        }
    }
    Ok(())
}

fn groebner_bases(reports: &[CaseReport]) -> Outcome {
    grid_checks(reports, "gb_", 2)?;
    for rep in reports {
        let family = rep.case.spec().family().map_err(|e| e.to_string())?;
        for order in [OrderChoice::VReading, OrderChoice::BlockColumn] {
            let ring = family.ring(Field::Prime(DEFAULT_PRIME), order);
            let gens = family.generators(&ring).map_err(|e| e.to_string())?;
            verify_diagonal_order(&gens).map_err(|w| {
                format!(
                    "{} {order}: generator #{} is not led by its diagonal",
                    rep.case.label(),
                    w.index
                )
            })?;
        }
    }
    Ok(format!(
        "{} cases under v-reading and block-column, both diagonal",
        reports.len()
    ))
}

fn initial_ideals(reports: &[CaseReport]) -> Outcome {
    grid_checks(reports, "initial", 1)?;
    Ok("diagonal monomials equal leading terms and are squarefree".into())
}

fn hilbert_functions(reports: &[CaseReport]) -> Outcome {
    grid_checks(reports, "hilbert", 1)?;
    Ok("Macaulay ranks match the monomial count for d <= 6".into())
}

fn heights(reports: &[CaseReport]) -> Outcome {
    grid_checks(reports, "height", 1)?;
    let opts = DimensionOptions {
        use_computed: true,
        ..DimensionOptions::default()
    };
    let rep = verify_dimension(&IdealSpec::double_det(3, 3, 3, 2, 3), &opts).map_err(|e| e.to_string())?;
    ensure(rep.formula_height == 17 && rep.computed_height == Some(17), || {
        format!(
            "(3,3,3,2,3): formula {} computed {:?}",
            rep.formula_height, rep.computed_height
        )
    })?;
    ensure(rep.groebner_verified == Some(true), || {
        "(3,3,3,2,3): basis not verified".into()
    })?;
    ensure(rep.projective_dim == 9, || {
        format!("(3,3,3,2,3): projective dimension {}", rep.projective_dim)
    })?;

    // With a single block both H and V are X, so the ideal is I_s(X).
    let mut r1_cases = Vec::new();
    for m in 1..=4u16 {
        for n in 1..=4u16 {
            for s in 1..=m.min(n) {
                for t in s..=n {
                    r1_cases.push((m, n, s, t));
                }
            }
        }
    }
    r1_cases.par_iter().try_for_each(|&(m, n, s, t)| {
        let rep = verify_dimension(&IdealSpec::double_det(m, n, 1, s, t), &opts).map_err(|e| e.to_string())?;
        let expected = ((m - s + 1) * (n - s + 1)) as u64;
        ensure(
            rep.formula_height == expected
                && rep.computed_height == Some(expected)
                && rep.groebner_verified == Some(true),
            || {
                format!(
                    "r=1 ({m},{n},{s},{t}): expected {expected}, formula {} computed {:?}",
                    rep.formula_height, rep.computed_height
                )
            },
        )
    })?;
    Ok(format!(
        "{} grid heights, (3,3,3,2,3) height 17 / projective dim 9, {} single-block cases",
        reports.len(),
        r1_cases.len()
    ))
}

fn vertex_decomposability(reports: &[CaseReport]) -> Outcome {
    grid_checks(reports, "vertex_decomposable", 1)?;
    Ok("pure, vertex decomposable, certificates re-verified".into())
}

fn replays() -> Outcome {
    let mut lines = Vec::new();
    for (m, n, r, s, t) in [(2, 2, 2, 2, 2), (2, 3, 2, 2, 2), (3, 3, 2, 2, 2)] {
        let spec = IdealSpec::double_det(m, n, r, s, t);
        let trace = replay_induction(&spec, &ReplayOptions::default()).map_err(|e| e.to_string())?;
        let label = format!("({m},{n},{r},{s},{t})");
        if let Some(step) = trace.steps.iter().find(|st| !st.passed()) {
            let bad = step.checks.iter().find(|c| !c.passed()).expect("a failing check");
            return Err(format!(
                "{label} step {}: {} {}",
                step.index,
                bad.name,
                bad.witness.clone().unwrap_or_default()
            ));
        }
        ensure(trace.passed, || format!("{label}: base checks failed"))?;
        ensure(trace.base.is_some(), || format!("{label}: no base case reached"))?;
        ensure(trace.shift_unique, || format!("{label}: Hilbert shift is not unique"))?;
        lines.push(format!("{label} {} steps", trace.steps.len()));
    }
    Ok(lines.join(", "))
}

fn worked_example() -> Outcome {
    let shape = BlockMatrixShape::new(5, 7, 2).map_err(|e| e.to_string())?;
    let (lambda, mu) = (yd(&[12, 12, 11, 11]), yd(&[12, 12]));
    let hat_l = hat_diagram(&lambda, shape).map_err(|e| e.to_string())?;
    let hat_m = hat_diagram(&mu, shape).map_err(|e| e.to_string())?;
    ensure(hat_l == yd(&[5, 5, 5, 5, 5, 5, 5, 4, 4]), || {
        format!("hat(lambda) = {:?}", hat_l.parts())
    })?;
    ensure(hat_m == yd(&[5, 5, 5, 5, 5, 5, 5]), || {
        format!("hat(mu) = {:?}", hat_m.parts())
    })?;

    let j = DiagramFamily::new(shape, 3, 4, vec![lambda.clone(), mu.clone()]).map_err(|e| e.to_string())?;
    let step = induction_step(&j).map_err(|e| e.to_string())?;
    ensure(step.cell == YCell { row: 4, col: 4 }, || {
        format!("removal cell {:?}", step.cell)
    })?;
    let lt = yd(&[12, 12, 11, 10]);
    ensure(step.n_family.diagrams == vec![lt.clone(), mu.clone()], || {
        "N family diagrams".into()
    })?;
    ensure(step.i_family.diagrams == vec![lt, yd(&[12, 12, 10])], || {
        "I family diagrams".into()
    })?;

    let ring = Family::Lambda(j.clone()).ring(Field::Prime(DEFAULT_PRIME), OrderChoice::VReading);
    let jg = lambda_family_generators(&ring, &j).map_err(|e| e.to_string())?;
    let ng = lambda_family_generators(&ring, &step.n_family).map_err(|e| e.to_string())?;

    let region = build_region(shape, Orientation::H, Some(&lambda)).map_err(|e| e.to_string())?;
    let minor = minor_determinant(&region, &ring, &[2, 3, 4], &[9, 10, 11]).map_err(|e| e.to_string())?;
    let diag = ring
        .monomial_of(&[
            (VariableId::new(2, 2, 2), 1),
            (VariableId::new(2, 3, 3), 1),
            (VariableId::new(2, 4, 4), 1),
        ])
        .map_err(|e| e.to_string())?;
    ensure(minor.leading_monomial() == Some(&diag), || {
        "witness minor has the wrong leading term".into()
    })?;
    ensure(!Reducer::for_generators(&ng).reduces_to_zero(&minor), || {
        "witness minor reduces to zero modulo N".into()
    })?;
    ensure(!detect_trivial_step(&jg, &ng), || "first step reported trivial".into())?;

    let next = induction_step(&step.i_family).map_err(|e| e.to_string())?;
    ensure(next.cell == YCell { row: 3, col: 4 }, || {
        format!("second removal cell {:?}", next.cell)
    })?;
    let ig = lambda_family_generators(&ring, &step.i_family).map_err(|e| e.to_string())?;
    let ng2 = lambda_family_generators(&ring, &next.n_family).map_err(|e| e.to_string())?;
    ensure(detect_trivial_step(&ig, &ng2), || {
        "second step not detected as trivial".into()
    })?;
    Ok("cell y44 nontrivial with witness y22*y33*y44, then cell y34 trivial".into())
}

fn serre_r1(reports: &[CaseReport]) -> Outcome {
    grid_checks(reports, "r1", 1)?;
    for (m, n, r, s, t) in [(3, 3, 3, 2, 3), (4, 4, 2, 3, 3)] {
        let c = serre_r1_check(m, n, r, s, t).map_err(|e| e.to_string())?;
        ensure(c.pass, || {
            format!(
                "({m},{n},{r},{s},{t}): jacobian {} height {}",
                c.jacobian_height, c.height
            )
        })?;
    }
    Ok(format!("{} grid cases plus (3,3,3,2,3) and (4,4,2,3,3)", reports.len()))
}

/// Faces of the complex with the given minimal nonfaces, by enumerating subsets.
fn brute_faces(vertices: &[u32], nonfaces: &[Vec<u32>]) -> Vec<BTreeSet<u32>> {
    let n = vertices.len();
    (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| vertices[i])
                .collect::<BTreeSet<u32>>()
        })
        .filter(|f| !nonfaces.iter().any(|nf| nf.iter().all(|v| f.contains(v))))
        .collect()
}

fn maximal(faces: &[BTreeSet<u32>]) -> BTreeSet<Vec<u32>> {
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
        .map(|f| f.iter().copied().collect())
        .collect()
}

fn facet_set(c: &SimplicialComplex) -> BTreeSet<Vec<u32>> {
    c.facets().into_iter().collect()
}

fn check_complex(label: &str, c: &SimplicialComplex, ideal: &MonomialIdeal) -> Result<(), String> {
    let nonfaces: Vec<Vec<u32>> = ideal.generators().iter().map(|g| g.support().collect()).collect();
    let faces = brute_faces(c.vertices(), &nonfaces);
    ensure(facet_set(c) == maximal(&faces), || {
        format!("{label}: facets differ from subset enumeration")
    })?;
    for &v in c.vertices() {
        let link = c.link(v).map_err(|e| e.to_string())?;
        let del = c.deletion(v).map_err(|e| e.to_string())?;
        let link_faces: Vec<BTreeSet<u32>> = faces
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&u| u != v).collect())
            .collect();
        let del_faces: Vec<BTreeSet<u32>> = faces.iter().filter(|f| !f.contains(&v)).cloned().collect();
        ensure(facet_set(&link) == maximal(&link_faces), || {
            format!("{label}: link of {v}")
        })?;
        ensure(facet_set(&del) == maximal(&del_faces), || {
            format!("{label}: deletion of {v}")
        })?;
    }
    let h = hilbert_function_upto(ideal, 6);
    for d in 0..=6 {
        let count = hilbert_by_counting(ideal, d);
        ensure(h[d as usize] == count, || {
            format!("{label}: H({d}) pivot {} count {count}", h[d as usize])
        })?;
    }
    Ok(())
}

fn random_squarefree(rng: &mut StdRng) -> MonomialIdeal {
    let nv = rng.random_range(3..=12u32);
    let ngens = rng.random_range(1..=8usize);
    let gens = (0..ngens)
        .map(|_| {
            let size = rng.random_range(1..=4u32.min(nv));
            let mut support = BTreeSet::new();
            while support.len() < size as usize {
                support.insert(rng.random_range(0..nv));
            }
            Monomial::from_support(support)
        })
        .collect();
    MonomialIdeal::new((0..nv).collect(), gens).expect("support inside ambient")
}

fn combinatorics_corpus() -> Outcome {
    let mut corpus: Vec<(String, MonomialIdeal)> = Vec::new();
    for case in acceptance_grid(3, 3, 3) {
        let family = case.spec().family().map_err(|e| e.to_string())?;
        if family.pool().len() > 12 {
            continue;
        }
        let ring = family.ring(Field::Prime(DEFAULT_PRIME), OrderChoice::VReading);
        let gens = family.generators(&ring).map_err(|e| e.to_string())?;
        ensure(verify_groebner(&gens).is_verified(), || {
            format!("{}: not a basis", case.label())
        })?;
        let init = diagonal_monomials(&gens);
        let delta = stanley_reisner(&init).map_err(|e| e.to_string())?;
        for &v in delta.vertices() {
            let link = delta.link(v).map_err(|e| e.to_string())?;
            let del = delta.deletion(v).map_err(|e| e.to_string())?;
            corpus.push((format!("{} link {v}", case.label()), link.ideal()));
            corpus.push((format!("{} deletion {v}", case.label()), del.ideal()));
        }
        corpus.push((case.label(), init));
    }
    let grid_count = corpus.len();
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    for i in 0..60 {
        corpus.push((format!("random #{i}"), random_squarefree(&mut rng)));
    }
    corpus.par_iter().try_for_each(|(label, ideal)| {
        let c = stanley_reisner(ideal).map_err(|e| format!("{label}: {e}"))?;
        check_complex(label, &c, ideal)
    })?;
    Ok(format!(
        "{grid_count} grid-derived and {} random ideals",
        corpus.len() - grid_count
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let grid = acceptance_grid(3, 3, 3);
    let reports: Result<Vec<CaseReport>, String> = run_grid(&grid, &GridOptions::default())
        .into_iter()
        .map(|r| r.map_err(|e| e.to_string()))
        .collect();
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            println!("grid battery could not run: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!(
        "grid battery: {} cases in {:.1}s",
        reports.len(),
        start.elapsed().as_secs_f64()
    );

    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("1 groebner bases", Box::new(|| groebner_bases(&reports))),
        ("2 initial ideals", Box::new(|| initial_ideals(&reports))),
        ("3 hilbert functions", Box::new(|| hilbert_functions(&reports))),
        ("4 heights", Box::new(|| heights(&reports))),
        (
            "5 vertex decomposability",
            Box::new(|| vertex_decomposability(&reports)),
        ),
        ("6 induction replays", Box::new(replays)),
        ("7 worked example", Box::new(worked_example)),
        ("8 serre R1", Box::new(|| serre_r1(&reports))),
        ("9 combinatorics corpus", Box::new(combinatorics_corpus)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail}; {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why}; {secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
