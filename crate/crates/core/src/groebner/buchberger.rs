//! S-polynomials, Gröbner basis verification and completion.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::division::{order_divisors, Reducer};
use crate::algebra::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::ideals::GeneratorSet;

/// `(L/lt f) f - (L/lt g) g` with monic normalization of the leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let (Some((cf, mf)), Some((cg, mg))) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(ring);
    };
    let l = mf.lcm(mg);
    let left = f.mul_term(&field.inv(cf), &mf.quotient_of(&l));
    left.add_scaled(&field.neg(&field.inv(cg)), &mg.quotient_of(&l), g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbStatus {
    Verified,
    Completed,
    Failed,
}

impl GbStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            GbStatus::Verified => "verified",
            GbStatus::Completed => "completed",
            GbStatus::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerReport {
    pub status: GbStatus,
    pub spairs_total: usize,
    pub spairs_pruned: usize,
    pub spairs_reduced: usize,
    /// First nonzero remainder, in canonical S-pair order.
    pub witness: Option<Polynomial>,
    /// Generator indices (into the input set) of the witnessing pair.
    pub witness_pair: Option<(usize, usize)>,
    pub added: Vec<Polynomial>,
    pub millis: u128,
}

impl GroebnerReport {
    pub fn is_verified(&self) -> bool {
        self.status == GbStatus::Verified
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status.as_str(),
            "spairs_total": self.spairs_total,
            "spairs_pruned": self.spairs_pruned,
            "spairs_reduced": self.spairs_reduced,
            "witness": self.witness.as_ref().map(|w| w.to_string()),
            "witness_pair": self.witness_pair,
            "added": self.added.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "millis": self.millis as u64,
        })
    }
}

#[derive(Clone, Debug)]
struct Pair {
    deg: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Pair {
    fn canonical_cmp(&self, other: &Pair) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.lcm.grlex_cmp(&other.lcm))
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_cmp(other) == Ordering::Equal
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    /// Reversed so that `BinaryHeap` pops the canonically smallest pair.
    fn cmp(&self, other: &Self) -> Ordering {
        other.canonical_cmp(self)
    }
}

/// Pairs among `leads[..n]` that survive the coprimality criterion, plus the pruned count.
fn pairs_for(leads: &[Monomial], new: usize) -> (Vec<Pair>, usize) {
    let mut out = Vec::new();
    let mut pruned = 0;
    for i in 0..new {
        if leads[i].is_coprime(&leads[new]) {
            pruned += 1;
        } else {
            let lcm = leads[i].lcm(&leads[new]);
            out.push(Pair {
                deg: lcm.degree(),
                lcm,
                i,
                j: new,
            });
        }
    }
    (out, pruned)
}

/// Checks every S-pair not pruned by the coprimality criterion for a zero
/// remainder against the whole set.
pub fn verify_groebner(gens: &GeneratorSet) -> GroebnerReport {
    let start = Instant::now();
    let order = order_divisors(gens);
    let reducer = Reducer::for_generators(gens);
    let n = reducer.divisors().len();
    let mut pairs = Vec::new();
    let mut pruned = 0;
    for j in 1..n {
        let (p, c) = pairs_for(reducer.leads(), j);
        pairs.extend(p);
        pruned += c;
    }
    pairs.sort_by(|a, b| a.canonical_cmp(b));
    let divs = reducer.divisors();
    let failure = pairs.par_iter().enumerate().find_map_first(|(k, p)| {
        let s = s_polynomial(&divs[p.i], &divs[p.j]);
        let r = reducer.normal_form(&s);
        (!r.is_zero()).then_some((k, p.i, p.j, r))
    });
    let total = n * n.saturating_sub(1) / 2;
    let (status, reduced, witness, witness_pair) = match failure {
        None => (GbStatus::Verified, pairs.len(), None, None),
        Some((k, i, j, r)) => (GbStatus::Failed, k + 1, Some(r), Some((order[i], order[j]))),
    };
    GroebnerReport {
        status,
        spairs_total: total,
        spairs_pruned: pruned,
        spairs_reduced: reduced,
        witness,
        witness_pair,
        added: Vec::new(),
        millis: start.elapsed().as_millis(),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_spairs: usize,
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_spairs: 1_000_000,
            max_basis: 10_000,
        }
    }
}

/// Buchberger's algorithm (normal selection strategy, coprimality pruning)
/// starting from the natural generators. The status is `Verified` when no
/// element had to be added.
pub fn buchberger_complete(gens: &GeneratorSet, limits: Limits) -> Result<GroebnerReport> {
    let start = Instant::now();
    let mut reducer = Reducer::for_generators(gens);
    let mut heap = BinaryHeap::new();
    let mut pruned = 0;
    for j in 1..reducer.divisors().len() {
        let (p, c) = pairs_for(reducer.leads(), j);
        heap.extend(p);
        pruned += c;
    }
    let mut reduced = 0;
    let mut added = Vec::new();
    while let Some(p) = heap.pop() {
        if reduced >= limits.max_spairs {
            return Err(Error::LimitExceeded(format!("more than {} S-pairs", limits.max_spairs)));
        }
        reduced += 1;
        let divs = reducer.divisors();
        let r = reducer.normal_form(&s_polynomial(&divs[p.i], &divs[p.j]));
        if r.is_zero() {
            continue;
        }
        if reducer.divisors().len() >= limits.max_basis {
            return Err(Error::LimitExceeded(format!("basis larger than {}", limits.max_basis)));
        }
        let r = r.monic();
        added.push(r.clone());
        reducer.push(r);
        let (p, c) = pairs_for(reducer.leads(), reducer.divisors().len() - 1);
        heap.extend(p);
        pruned += c;
    }
    let n = reducer.divisors().len();
    Ok(GroebnerReport {
        status: if added.is_empty() {
            GbStatus::Verified
        } else {
            GbStatus::Completed
        },
        spairs_total: n * n.saturating_sub(1) / 2,
        spairs_pruned: pruned,
        spairs_reduced: reduced,
        witness: None,
        witness_pair: None,
        added,
        millis: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_polynomial;
    use crate::algebra::{Field, OrderChoice, Ring, TermOrder, VariableId};
    use crate::ideals::IdealSpec;
    use std::sync::Arc;

    fn ring() -> Arc<Ring> {
        let pool: Vec<_> = (1..=2)
            .flat_map(|i| (1..=2).map(move |j| VariableId::new(1, i, j)))
            .collect();
        Arc::new(Ring::new(Field::prime(32003).unwrap(), TermOrder::v_reading(&pool)))
    }

    fn set(r: &Arc<Ring>, polys: &[&str]) -> GeneratorSet {
        let ps = polys
            .iter()
            .map(|s| parse_polynomial(s).unwrap().to_polynomial(r).unwrap())
            .collect();
        GeneratorSet::from_polynomials(r, r.variables().to_vec(), ps)
    }

    const MINOR: &str = "x[1,1,1]*x[1,2,2]-x[1,1,2]*x[1,2,1]";

    #[test]
    fn s_polynomial_examples() {
        let r = ring();
        let g = set(&r, &["x[1,1,1]", MINOR]).polynomials();
        assert!(s_polynomial(&g[1], &g[1]).is_zero());
        assert_eq!(s_polynomial(&g[0], &g[1]).to_string(), "x[1,1,2]*x[1,2,1]");
    }

    #[test]
    fn single_minor_is_a_basis() {
        let r = ring();
        assert!(verify_groebner(&set(&r, &[MINOR])).is_verified());
    }

    #[test]
    fn failing_pair_reports_witness() {
        let r = ring();
        let rep = verify_groebner(&set(&r, &["x[1,1,1]", MINOR]));
        assert_eq!(rep.status, GbStatus::Failed);
        assert_eq!(rep.witness.unwrap().to_string(), "x[1,1,2]*x[1,2,1]");
    }

    #[test]
    fn completion_adds_the_witness() {
        let r = ring();
        let rep = buchberger_complete(&set(&r, &["x[1,1,1]", MINOR]), Limits::default()).unwrap();
        assert_eq!(rep.status, GbStatus::Completed);
        let added: Vec<String> = rep.added.iter().map(|p| p.to_string()).collect();
        assert_eq!(added, vec!["x[1,1,2]*x[1,2,1]"]);
    }

    #[test]
    fn zero_pair_limit_is_exceeded() {
        let r = ring();
        let lim = Limits {
            max_spairs: 0,
            max_basis: 100,
        };
        assert!(matches!(
            buchberger_complete(&set(&r, &["x[1,1,1]", MINOR]), lim),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn double_det_2222_is_verified_and_complete() {
        let fam = IdealSpec::double_det(2, 2, 2, 2, 2).family().unwrap();
        let ring = fam.ring(Field::prime(32003).unwrap(), OrderChoice::VReading);
        let g = fam.generators(&ring).unwrap();
        assert!(verify_groebner(&g).is_verified());
        let rep = buchberger_complete(&g, Limits::default()).unwrap();
        assert_eq!(rep.status, GbStatus::Verified);
        assert!(rep.added.is_empty());
    }

    #[test]
    fn status_ignores_generator_permutation() {
        let r = ring();
        let a = verify_groebner(&set(&r, &["x[1,1,1]", MINOR]));
        let b = verify_groebner(&set(&r, &[MINOR, "x[1,1,1]"]));
        assert_eq!(a.status, b.status);
    }
}
