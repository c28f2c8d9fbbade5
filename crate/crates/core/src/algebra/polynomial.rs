//! Sparse polynomials with terms kept strictly descending under the ring's order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::Coeff;
use super::monomial::Monomial;
use super::order::Ring;
use crate::error::{Error, Result};

pub type Term = (Coeff, Monomial);

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Polynomial::term(ring, c, Monomial::one())
    }

    pub fn term(ring: &Arc<Ring>, c: Coeff, m: Monomial) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(c, m)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Polynomial::term(ring, ring.field().one(), m)
    }

    /// Canonicalizes arbitrary terms: sorts, merges equal monomials, drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<Term>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| b.1.grlex_cmp(&a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| !field.is_zero(&t.0));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusts that `terms` is already canonical.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1.grlex_cmp(&w[1].1) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree of the leading term (the polynomials here are homogeneous).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].1.degree() == w[1].1.degree())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else if self.ring.field() != other.ring.field() {
            Err(Error::FieldMismatch(self.ring.field(), other.ring.field()))
        } else {
            Err(Error::InvalidOrder("operands use different term orders".into()))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(&self.ring.field().one(), &Monomial::one(), other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        Ok(self.add_scaled(&field.neg(&field.one()), &Monomial::one(), other))
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (field.neg(c), m.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(c, &Monomial::one())
    }

    /// `c * m * self`; order is preserved because the order is multiplicative.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(d, n)| (field.mul(c, d), n.mul(m))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &other.terms {
            acc = acc.add_scaled(c, m, self);
        }
        Ok(acc)
    }

    /// `self + c * m * other`, merging in one pass.
    pub(crate) fn add_scaled(&self, c: &Coeff, m: &Monomial, other: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out: Vec<Term> = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<Term> = None;
        while i < a.len() || j < b.len() {
            if pending.is_none() && j < b.len() {
                pending = Some((field.mul(c, &b[j].0), b[j].1.mul(m)));
            }
            let ord = match (&pending, i < a.len()) {
                (Some(p), true) => a[i].1.grlex_cmp(&p.1),
                (Some(_), false) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let p = pending.take().unwrap();
                    if !field.is_zero(&p.0) {
                        out.push(p);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let p = pending.take().unwrap();
                    let s = field.add(&a[i].0, &p.0);
                    if !field.is_zero(&s) {
                        out.push((s, p.1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let field = self.ring.field();
                if field.is_one(lc) {
                    self.clone()
                } else {
                    self.scale(&field.inv(lc))
                }
            }
        }
    }

    /// Rewrites the polynomial over another ring holding the same variables
    /// (different order and/or field). Terms are re-sorted.
    pub fn change_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let src = self.ring.field();
        let dst = target.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let c2 = match (c, dst) {
                (_, _) if src == dst => c.clone(),
                (Coeff::Q(q), _) => dst.from_rational(q)?,
                (Coeff::P(_), _) => return Err(Error::FieldMismatch(src, dst)),
            };
            let mut pairs = Vec::with_capacity(m.exps().len());
            for &(v, e) in m.exps() {
                pairs.push((target.index_of(self.ring.var(v))?, e));
            }
            terms.push((c2, Monomial::from_pairs(pairs)));
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
