//! Deterministic multivariate division.

use std::sync::Arc;

use crate::algebra::{Monomial, Polynomial, Ring, Term};
use crate::ideals::{GeneratorSet, Source};

/// Quotients and remainder of one division.
#[derive(Clone, Debug)]
pub struct DivisionResult {
    pub remainder: Polynomial,
    /// `(divisor index, quotient)` for every divisor that was used.
    pub quotients: Vec<(usize, Polynomial)>,
}

impl DivisionResult {
    /// Recomputes `Σ q_i d_i + remainder`.
    pub fn recombine(&self, divisors: &[Polynomial]) -> Polynomial {
        let mut acc = self.remainder.clone();
        for (i, q) in &self.quotients {
            acc = acc.add(&q.mul(&divisors[*i]).expect("same ring")).expect("same ring");
        }
        acc
    }
}

/// Divisor priority: H minors first, then V minors, each block sorted by
/// ascending leading term; anything else keeps its canonical position after them.
pub fn order_divisors(gens: &GeneratorSet) -> Vec<usize> {
    let g = gens.generators();
    let ring = gens.ring();
    let mut idx: Vec<usize> = (0..g.len()).filter(|&i| !g[i].poly.is_zero()).collect();
    let rank = |s: Source| match s {
        Source::H => 0,
        Source::V => 1,
        Source::Input => 2,
    };
    idx.sort_by(|&a, &b| {
        let (sa, sb) = (rank(g[a].provenance.source), rank(g[b].provenance.source));
        sa.cmp(&sb).then_with(|| {
            if sa == 2 {
                a.cmp(&b)
            } else {
                let (la, lb) = (
                    g[a].poly.leading_monomial().unwrap(),
                    g[b].poly.leading_monomial().unwrap(),
                );
                ring.cmp(la, lb).then(a.cmp(&b))
            }
        })
    });
    idx
}

/// An ordered divisor list with precomputed leading data.
#[derive(Clone, Debug)]
pub struct Reducer {
    ring: Arc<Ring>,
    divisors: Vec<Polynomial>,
    leads: Vec<Monomial>,
    masks: Vec<u128>,
}

impl Reducer {
    pub fn new(ring: &Arc<Ring>, divisors: Vec<Polynomial>) -> Self {
        let divisors: Vec<Polynomial> = divisors.into_iter().filter(|d| !d.is_zero()).collect();
        let leads: Vec<Monomial> = divisors.iter().map(|d| d.leading_monomial().unwrap().clone()).collect();
        let masks = leads.iter().map(|m| m.mask()).collect();
        Reducer {
            ring: ring.clone(),
            divisors,
            leads,
            masks,
        }
    }

    /// Divisors of a generator set in priority order.
    pub fn for_generators(gens: &GeneratorSet) -> Self {
        let g = gens.generators();
        let polys = order_divisors(gens).into_iter().map(|i| g[i].poly.clone()).collect();
        Reducer::new(gens.ring(), polys)
    }

    pub fn divisors(&self) -> &[Polynomial] {
        &self.divisors
    }

    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn push(&mut self, d: Polynomial) {
        if let Some(lm) = d.leading_monomial() {
            self.masks.push(lm.mask());
            self.leads.push(lm.clone());
            self.divisors.push(d);
        }
    }

    /// First divisor whose leading monomial divides `m`.
    pub fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mm = m.mask();
        (0..self.leads.len()).find(|&i| self.masks[i] & !mm == 0 && self.leads[i].divides(m))
    }

    fn step(&self, p: &Polynomial, i: usize, lead: &Term) -> (Term, Polynomial) {
        let field = self.ring.field();
        let d = &self.divisors[i];
        let q_mon = self.leads[i].quotient_of(&lead.1);
        let q_coef = field.div(&lead.0, d.leading_coeff().unwrap());
        let next = p.add_scaled(&field.neg(&q_coef), &q_mon, d);
        ((q_coef, q_mon), next)
    }

    /// Full division, recording quotients. The identity
    /// `f = Σ q_i d_i + r` is asserted before returning.
    pub fn reduce(&self, f: &Polynomial) -> DivisionResult {
        let mut p = f.clone();
        let mut rem: Vec<Term> = Vec::new();
        let mut quot: Vec<Vec<Term>> = vec![Vec::new(); self.divisors.len()];
        while let Some(lead) = p.leading_term().cloned() {
            match self.find_divisor(&lead.1) {
                Some(i) => {
                    let (t, next) = self.step(&p, i, &lead);
                    quot[i].push(t);
                    p = next;
                }
                None => {
                    rem.push(p.pop_leading().unwrap());
                }
            }
        }
        let result = DivisionResult {
            remainder: Polynomial::from_sorted(&self.ring, rem),
            quotients: quot
                .into_iter()
                .enumerate()
                .filter(|(_, q)| !q.is_empty())
                .map(|(i, q)| (i, Polynomial::from_sorted(&self.ring, q)))
                .collect(),
        };
        assert!(result.recombine(&self.divisors) == *f, "division identity violated");
        result
    }

    /// Remainder only.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut p = f.clone();
        let mut rem: Vec<Term> = Vec::new();
        while let Some(lead) = p.leading_term().cloned() {
            match self.find_divisor(&lead.1) {
                Some(i) => p = self.step(&p, i, &lead).1,
                None => rem.push(p.pop_leading().unwrap()),
            }
        }
        Polynomial::from_sorted(&self.ring, rem)
    }

    /// Whether `f` reduces to zero.
    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        let mut p = f.clone();
        while let Some(lead) = p.leading_term().cloned() {
            match self.find_divisor(&lead.1) {
                Some(i) => p = self.step(&p, i, &lead).1,
                None => return false,
            }
        }
        true
    }
}

/// Divides `f` by `divisors` in the given order.
pub fn reduce_deterministic(f: &Polynomial, divisors: &[Polynomial]) -> DivisionResult {
    Reducer::new(f.ring(), divisors.to_vec()).reduce(f)
}

pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    Reducer::new(f.ring(), divisors.to_vec()).normal_form(f)
}
