//! The parameter grid of double determinantal ideals and the per-case battery
//! run by the `grid` command.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Field, OrderChoice, DEFAULT_PRIME};
use crate::combinatorics::{hilbert_function_upto, is_vertex_decomposable, stanley_reisner, verify_vd_certificate};
use crate::dimension::{height_formula, serre_r1_check};
use crate::error::Result;
use crate::groebner::{macaulay_hilbert_upto, verify_groebner};
use crate::ideals::{diagonal_monomials, leading_monomial_ideal, IdealSpec};
use crate::liaison::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GridCase {
    pub m: u16,
    pub n: u16,
    pub r: u16,
    pub s: u16,
    pub t: u16,
}

impl GridCase {
    pub fn spec(&self) -> IdealSpec {
        IdealSpec::double_det(self.m, self.n, self.r, self.s, self.t)
    }

    pub fn label(&self) -> String {
        format!("({},{},{},{},{})", self.m, self.n, self.r, self.s, self.t)
    }
}

/// Every case with `2 <= m <= max_m`, `2 <= n <= max_n`, `2 <= r <= max_r`,
/// `2 <= s <= m` and `2 <= t <= n`, in lexicographic order of `(m,n,r,s,t)`.
pub fn acceptance_grid(max_m: u16, max_n: u16, max_r: u16) -> Vec<GridCase> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        for n in 2..=max_n {
            for r in 2..=max_r {
                for s in 2..=m {
                    for t in 2..=n {
                        out.push(GridCase { m, n, r, s, t });
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct GridOptions {
    pub field: Field,
    pub orders: Vec<OrderChoice>,
    pub max_degree: u32,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions {
            field: Field::Prime(DEFAULT_PRIME),
            orders: vec![OrderChoice::VReading, OrderChoice::BlockColumn],
            max_degree: 6,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: GridCase,
    pub generators: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub millis: u64,
}

/// Gröbner status under each order, initial ideal, Hilbert agreement, height,
/// vertex decomposability and the R1 arithmetic for one case.
pub fn run_case(case: GridCase, opts: &GridOptions) -> Result<CaseReport> {
    let start = Instant::now();
    let family = case.spec().family()?;
    let mut checks = Vec::new();
    let mut main = None;
    for &order in &opts.orders {
        let ring = family.ring(opts.field, order);
        let gens = family.generators(&ring)?;
        let report = verify_groebner(&gens);
        let mut c = Check::new(
            &format!("gb_{order}"),
            report.is_verified(),
            report.witness.as_ref().map(|w| w.to_string()),
        );
        c.millis = report.millis as u64;
        checks.push(c);
        main.get_or_insert(gens);
    }
    let gens = main.expect("at least one order");
    let diag = diagonal_monomials(&gens);
    checks.push(Check::timed("initial", || {
        let lead = leading_monomial_ideal(&gens);
        let ok = lead == diag && diag.is_squarefree();
        (
            ok,
            (!ok).then(|| "diagonal monomials differ from leading terms or are not squarefree".to_string()),
        )
    }));
    checks.push(Check::timed("hilbert", || {
        match macaulay_hilbert_upto(&gens, opts.max_degree) {
            Ok(h) => {
                let mono = hilbert_function_upto(&diag, opts.max_degree);
                let ok = h == mono;
                let detail = if ok {
                    format!("{h:?}")
                } else {
                    format!("macaulay={h:?} monomial={mono:?}")
                };
                (ok, Some(detail))
            }
            Err(e) => (false, Some(e.to_string())),
        }
    }));
    checks.push(Check::timed("height", || {
        let formula = height_formula(case.m, case.n, case.r, case.s, case.t);
        match (crate::combinatorics::height(&diag), formula) {
            (Ok(h), Ok(f)) => (h as u64 == f, Some(format!("computed={h} formula={f}"))),
            (Err(e), _) | (_, Err(e)) => (false, Some(e.to_string())),
        }
    }));
    checks.push(Check::timed("vertex_decomposable", || {
        let delta = match stanley_reisner(&diag) {
            Ok(d) => d,
            Err(e) => return (false, Some(e.to_string())),
        };
        let out = is_vertex_decomposable(&delta);
        let certified = out
            .certificate
            .as_ref()
            .is_some_and(|c| verify_vd_certificate(&delta, c).is_ok());
        let pure = delta.is_pure();
        (
            pure && out.decomposable && certified,
            Some(format!(
                "pure={pure} decomposable={} certified={certified}",
                out.decomposable
            )),
        )
    }));
    checks.push(Check::timed("r1", || {
        match serre_r1_check(case.m, case.n, case.r, case.s, case.t) {
            Ok(r) => (
                r.pass,
                Some(format!("jacobian={} height={}", r.jacobian_height, r.height)),
            ),
            Err(e) => (false, Some(e.to_string())),
        }
    }));
    let passed = checks.iter().all(Check::passed);
    Ok(CaseReport {
        case,
        generators: gens.len(),
        checks,
        passed,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Runs the cases in parallel; results come back in input order.
pub fn run_grid(cases: &[GridCase], opts: &GridOptions) -> Vec<Result<CaseReport>> {
    cases.par_iter().map(|&c| run_case(c, opts)).collect()
}
