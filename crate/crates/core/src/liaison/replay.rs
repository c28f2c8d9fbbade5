//! Walking the induction from a spec down to a base case.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use super::bdl::{verify_basic_double_link, verify_link_deletion};
use super::certificate::{BaseTag, Check, InductionTrace, StepCertificate, TRACE_SCHEMA};
use super::chain::HilbertTable;
use crate::algebra::{Field, OrderChoice, Polynomial, Ring, TermOrder, VariableId, DEFAULT_PRIME};
use crate::combinatorics::MonomialIdeal;
use crate::error::{Error, Result};
use crate::groebner::{verify_groebner, Reducer};
use crate::ideals::{
    admissible_cells, diagonal_monomials, induction_step_at, lambda_family_generators, s3_family_generators,
    s3_induction_step, select_removal_cell, verify_diagonal_order, DiagramFamily, Family, Generator, GeneratorSet,
    IdealSpec, SectionThreeFamily,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReplayPath {
    /// Always remove the cell chosen by `select_removal_cell`.
    Canonical,
    /// Branch over every admissible cell for the first `k` steps.
    ExhaustiveFirst(usize),
}

impl fmt::Display for ReplayPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayPath::Canonical => write!(f, "canonical"),
            ReplayPath::ExhaustiveFirst(k) => write!(f, "exhaustive-first-{k}"),
        }
    }
}

impl FromStr for ReplayPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "canonical" {
            return Ok(ReplayPath::Canonical);
        }
        s.strip_prefix("exhaustive-first-")
            .and_then(|k| k.parse().ok())
            .map(ReplayPath::ExhaustiveFirst)
            .ok_or_else(|| Error::Parse(format!("unknown path `{s}` (canonical | exhaustive-first-K)")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReplayOptions {
    pub field: Field,
    pub order: OrderChoice,
    pub max_degree: u32,
    pub path: ReplayPath,
}

impl Default for ReplayOptions {
    fn default() -> Self {
        ReplayOptions {
            field: Field::Prime(DEFAULT_PRIME),
            order: OrderChoice::VReading,
            max_degree: 6,
            path: ReplayPath::Canonical,
        }
    }
}

/// The first generator of `j` that is not in the ideal of `n`, using `n` as a
/// Gröbner basis. Generators shared verbatim are skipped.
pub fn trivial_step_witness(j: &GeneratorSet, n: &GeneratorSet) -> Option<Generator> {
    let shared: HashSet<Polynomial> = n.generators().iter().map(|g| g.poly.monic()).collect();
    let reducer = Reducer::for_generators(n);
    j.generators()
        .par_iter()
        .filter(|g| !shared.contains(&g.poly.monic()))
        .find_first(|g| !reducer.reduces_to_zero(&g.poly))
        .cloned()
}

/// True when every generator of `j` reduces to zero against `n`.
pub fn detect_trivial_step(j: &GeneratorSet, n: &GeneratorSet) -> bool {
    trivial_step_witness(j, n).is_none()
}

#[derive(Clone, Debug)]
enum Stage {
    Lambda(DiagramFamily),
    S3(SectionThreeFamily),
}

struct Move {
    cell: VariableId,
    n: Stage,
    i: Stage,
}

impl Stage {
    fn from_family(f: Family) -> Result<Stage> {
        Ok(match f {
            Family::DoubleDet { shape, s, t } => Stage::Lambda(DiagramFamily::full(shape, s, t)?),
            Family::SectionThree(f) => Stage::S3(f),
            Family::Lambda(f) => Stage::Lambda(f),
        })
    }

    fn pool(&self) -> Vec<VariableId> {
        match self {
            Stage::Lambda(f) => f.shape.pool(),
            Stage::S3(f) => f.pool(),
        }
    }

    fn generators(&self, ring: &Arc<Ring>) -> Result<GeneratorSet> {
        match self {
            Stage::Lambda(f) => lambda_family_generators(ring, f),
            Stage::S3(f) => s3_family_generators(ring, f),
        }
    }

    fn label(&self) -> String {
        match self {
            Stage::Lambda(f) => f.to_string(),
            Stage::S3(f) => f.to_string(),
        }
    }

    /// Available steps, or the base case reached.
    fn moves(&self, all: bool) -> Result<std::result::Result<Vec<Move>, BaseTag>> {
        match self {
            Stage::Lambda(f) => {
                let Some(canonical) = select_removal_cell(f) else {
                    return Ok(Err(BaseTag::RReduction));
                };
                let first = match induction_step_at(f, canonical) {
                    Ok(step) => Some(step),
                    Err(Error::BaseCase(_)) => None,
                    Err(e) => return Err(e),
                };
                let mut steps: Vec<_> = first.into_iter().collect();
                if all {
                    steps.extend(
                        admissible_cells(f)
                            .into_iter()
                            .filter(|&c| c != canonical)
                            .filter_map(|c| induction_step_at(f, c).ok()),
                    );
                }
                if steps.is_empty() {
                    return Ok(Err(BaseTag::Cone));
                }
                Ok(Ok(steps
                    .into_iter()
                    .map(|s| Move {
                        cell: s.cell.variable(f),
                        n: Stage::Lambda(s.n_family),
                        i: Stage::Lambda(s.i_family),
                    })
                    .collect()))
            }
            Stage::S3(f) => match s3_induction_step(f) {
                Ok(s) => Ok(Ok(vec![Move {
                    cell: s.cell,
                    n: Stage::S3(s.n),
                    i: Stage::S3(s.i),
                }])),
                Err(Error::BaseCase(_)) if f.a >= f.n => Ok(Err(BaseTag::MixedLadder)),
                Err(Error::BaseCase(_)) => Ok(Err(BaseTag::Cone)),
                Err(e) => Err(e),
            },
        }
    }

    /// Every variable any family along the canonical path can mention.
    fn reachable_pool(&self) -> Result<Vec<VariableId>> {
        let mut pool = self.pool();
        if let Stage::S3(_) = self {
            let mut cur = self.clone();
            while let Ok(mut moves) = cur.moves(false)? {
                let mv = moves.remove(0);
                pool.extend(mv.n.pool());
                pool.extend(mv.i.pool());
                cur = mv.n;
            }
        }
        pool.sort();
        pool.dedup();
        Ok(pool)
    }
}

fn union_pool(sets: &[&GeneratorSet]) -> Vec<VariableId> {
    let mut pool: Vec<VariableId> = sets.iter().flat_map(|g| g.pool().iter().copied()).collect();
    pool.sort();
    pool.dedup();
    pool
}

fn gb_check(name: &str, g: &GeneratorSet) -> Check {
    let mut report = verify_groebner(g);
    let witness = report.witness.take().map(|w| {
        let (a, b) = report.witness_pair.expect("pair accompanies witness");
        format!("S({a},{b}) leaves {w}")
    });
    let mut c = Check::new(name, report.is_verified(), witness);
    c.millis = report.millis as u64;
    c
}

fn diagonal_check(sets: &[(&str, &GeneratorSet)]) -> Check {
    Check::timed("diagonal_order", || {
        for (label, g) in sets {
            if let Err(w) = verify_diagonal_order(g) {
                return (
                    false,
                    Some(format!(
                        "{label}: generator {} has leading term off its diagonal",
                        w.index
                    )),
                );
            }
        }
        (true, None)
    })
}

struct Replayer {
    ring: Arc<Ring>,
    opts: ReplayOptions,
    spec: IdealSpec,
}

impl Replayer {
    fn step(&self, index: usize, j_stage: &Stage, mv: &Move) -> Result<StepCertificate> {
        let start = Instant::now();
        let j = j_stage.generators(&self.ring)?;
        let n = mv.n.generators(&self.ring)?;
        let i = mv.i.generators(&self.ring)?;
        let pool = union_pool(&[&j, &n, &i]);
        let (j, n, i) = (
            j.with_pool(pool.clone()),
            n.with_pool(pool.clone()),
            i.with_pool(pool.clone()),
        );
        let mut checks = vec![gb_check("gb_n", &n)];
        let mut cert = StepCertificate {
            index,
            cell: mv.cell.to_string(),
            j_family: j_stage.label(),
            n_family: mv.n.label(),
            i_family: mv.i.label(),
            trivial: false,
            checks: Vec::new(),
            passing_shifts: Vec::new(),
            millis: 0,
        };
        let witness = trivial_step_witness(&j, &n);
        let Some(witness) = witness else {
            cert.trivial = true;
            checks.push(Check::new("trivial_step", true, None));
            cert.checks = checks;
            cert.millis = start.elapsed().as_millis() as u64;
            return Ok(cert);
        };
        checks.push(Check::new(
            "nontrivial_step",
            true,
            Some(witness.provenance.to_string()),
        ));
        checks.push(gb_check("gb_i", &i));
        checks.push(diagonal_check(&[("J", &j), ("N", &n), ("I", &i)]));

        let ambient: Vec<u32> = pool.iter().map(|&v| self.ring.index_of(v)).collect::<Result<_>>()?;
        let in_ambient =
            |g: &GeneratorSet| -> Result<MonomialIdeal> { diagonal_monomials(g).with_ambient(ambient.clone()) };
        let (a, b, c) = (in_ambient(&n)?, in_ambient(&i)?, in_ambient(&j)?);
        let v = self.ring.index_of(mv.cell)?;
        checks.extend(verify_basic_double_link(&a, &b, &c, v));
        checks.extend(verify_link_deletion(&a, &b, &c, v));

        let hstart = Instant::now();
        match HilbertTable::compute(&n, &i, &j, &a, &b, &c, self.opts.max_degree) {
            Ok(table) => {
                let results: Vec<_> = (0..=3).map(|l| table.chain(l)).collect();
                cert.passing_shifts = results.iter().filter(|r| r.pass).map(|r| r.shift).collect();
                let main = &results[1];
                let witness = main.first_failure().map(|f| {
                    format!(
                        "d={}: H_J={} H_N-chain={} H_C={} H_A-chain={}",
                        f.d, f.h_j, f.h_nij, f.h_c, f.h_abc
                    )
                });
                let mut chk = Check::new("hilbert_chain", main.pass, witness);
                chk.millis = hstart.elapsed().as_millis() as u64;
                checks.push(chk);
            }
            Err(e) => checks.push(Check::new("hilbert_chain", false, Some(e.to_string()))),
        }
        cert.checks = checks;
        cert.millis = start.elapsed().as_millis() as u64;
        Ok(cert)
    }

    fn finish(&self, stage: &Stage, steps: Vec<StepCertificate>, base: Option<BaseTag>) -> Result<InductionTrace> {
        let mut base_checks = Vec::new();
        let mut tag = base;
        if base.is_some() {
            let g = stage.generators(&self.ring)?;
            if g.is_empty() {
                tag = Some(BaseTag::Empty);
            }
            base_checks.push(gb_check("base_gb", &g));
        }
        let consistent = steps.windows(2).all(|w| w[0].n_family == w[1].j_family);
        base_checks.push(Check::new("chain_consistency", consistent, None));
        let passed =
            base.is_some() && steps.iter().all(StepCertificate::passed) && base_checks.iter().all(Check::passed);
        let shift_unique = steps.iter().any(|s| !s.trivial && s.passing_shifts == [1]);
        Ok(InductionTrace {
            schema: TRACE_SCHEMA,
            spec: self.spec.clone(),
            path: self.opts.path.to_string(),
            steps,
            base: tag,
            base_checks,
            passed,
            shift_unique,
        })
    }

    fn walk(
        &self,
        stage: Stage,
        steps: Vec<StepCertificate>,
        branch: usize,
        out: &mut Vec<InductionTrace>,
    ) -> Result<()> {
        let moves = match stage.moves(branch > 0)? {
            Ok(m) => m,
            Err(tag) => {
                out.push(self.finish(&stage, steps, Some(tag))?);
                return Ok(());
            }
        };
        for mv in moves {
            let cert = self.step(steps.len(), &stage, &mv)?;
            let ok = cert.passed();
            let mut next = steps.clone();
            next.push(cert);
            if ok {
                self.walk(mv.n, next, branch.saturating_sub(1), out)?;
            } else {
                out.push(self.finish(&mv.n, next, None)?);
            }
        }
        Ok(())
    }
}

/// All traces selected by `opts.path`, in branch order.
pub fn replay_paths(spec: &IdealSpec, opts: &ReplayOptions) -> Result<Vec<InductionTrace>> {
    let stage = Stage::from_family(spec.family()?)?;
    if matches!(opts.field, Field::Rationals) {
        return Err(Error::InvalidField(
            "replay needs a prime field for the Hilbert oracle".into(),
        ));
    }
    let pool = stage.reachable_pool()?;
    let ring = Arc::new(Ring::new(opts.field, TermOrder::from_choice(opts.order, &pool)));
    let replayer = Replayer {
        ring,
        opts: *opts,
        spec: spec.clone(),
    };
    let branch = match opts.path {
        ReplayPath::Canonical => 0,
        ReplayPath::ExhaustiveFirst(k) => k,
    };
    let mut out = Vec::new();
    replayer.walk(stage, Vec::new(), branch, &mut out)?;
    Ok(out)
}

/// The canonical trace, or for branching paths the first failing trace (else the first).
pub fn replay_induction(spec: &IdealSpec, opts: &ReplayOptions) -> Result<InductionTrace> {
    let mut traces = replay_paths(spec, opts)?;
    let pick = traces.iter().position(|t| !t.passed).unwrap_or(0);
    Ok(traces.swap_remove(pick))
}
