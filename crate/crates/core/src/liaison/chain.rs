//! The Hilbert-function chain relating J, N and I, and its monomial shadow on C, A and B.

use serde::Serialize;

use crate::combinatorics::{hilbert_function_upto, MonomialIdeal};
use crate::error::Result;
use crate::groebner::macaulay_hilbert_upto;
use crate::ideals::GeneratorSet;

#[derive(Clone, Debug)]
pub struct LemmaChainInstance {
    pub n: GeneratorSet,
    pub i: GeneratorSet,
    pub j: GeneratorSet,
    pub a: MonomialIdeal,
    pub b: MonomialIdeal,
    pub c: MonomialIdeal,
    pub shift: u32,
    pub max_degree: u32,
}

/// Hilbert functions of the six quotients for `d = 0..=max_degree`; N, I and J
/// are evaluated over J's variable pool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub j: Vec<u64>,
    pub n: Vec<u64>,
    pub i: Vec<u64>,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub d: u32,
    pub h_j: i64,
    /// `H_N(d) - H_N(d-ℓ) + H_I(d-ℓ)`
    pub h_nij: i64,
    pub h_c: i64,
    /// `H_A(d) - H_A(d-ℓ) + H_B(d-ℓ)`
    pub h_abc: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainResult {
    pub shift: u32,
    pub degrees: Vec<DegreeCheck>,
    pub pass: bool,
}

impl ChainResult {
    pub fn first_failure(&self) -> Option<&DegreeCheck> {
        self.degrees.iter().find(|d| !d.pass)
    }
}

impl HilbertTable {
    pub fn compute(
        n: &GeneratorSet,
        i: &GeneratorSet,
        j: &GeneratorSet,
        a: &MonomialIdeal,
        b: &MonomialIdeal,
        c: &MonomialIdeal,
        max_degree: u32,
    ) -> Result<Self> {
        let pool = j.pool().to_vec();
        let n = n.clone().with_pool(pool.clone());
        let i = i.clone().with_pool(pool);
        let (hj, (hn, hi)) = rayon::join(
            || macaulay_hilbert_upto(j, max_degree),
            || {
                rayon::join(
                    || macaulay_hilbert_upto(&n, max_degree),
                    || macaulay_hilbert_upto(&i, max_degree),
                )
            },
        );
        Ok(HilbertTable {
            j: hj?,
            n: hn?,
            i: hi?,
            a: hilbert_function_upto(a, max_degree),
            b: hilbert_function_upto(b, max_degree),
            c: hilbert_function_upto(c, max_degree),
        })
    }

    pub fn max_degree(&self) -> u32 {
        self.j.len() as u32 - 1
    }

    /// Evaluates the three equalities for shift `ℓ` at every tabulated degree.
    pub fn chain(&self, shift: u32) -> ChainResult {
        let at = |h: &[u64], d: i64| if d < 0 { 0 } else { h[d as usize] as i64 };
        let l = shift as i64;
        let degrees: Vec<DegreeCheck> = (0..=self.max_degree())
            .map(|d| {
                let di = d as i64;
                let h_j = at(&self.j, di);
                let h_nij = at(&self.n, di) - at(&self.n, di - l) + at(&self.i, di - l);
                let h_c = at(&self.c, di);
                let h_abc = at(&self.a, di) - at(&self.a, di - l) + at(&self.b, di - l);
                DegreeCheck {
                    d,
                    h_j,
                    h_nij,
                    h_c,
                    h_abc,
                    pass: h_j == h_nij && h_c == h_abc && h_j == h_c,
                }
            })
            .collect();
        let pass = degrees.iter().all(|d| d.pass);
        ChainResult { shift, degrees, pass }
    }
}

pub fn verify_lemma_chain(inst: &LemmaChainInstance) -> Result<ChainResult> {
    let table = HilbertTable::compute(&inst.n, &inst.i, &inst.j, &inst.a, &inst.b, &inst.c, inst.max_degree)?;
    Ok(table.chain(inst.shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, OrderChoice};
    use crate::ideals::{diagonal_monomials, IdealSpec};

    #[test]
    fn identical_ideals_with_zero_shift() {
        let fam = IdealSpec::double_det(2, 2, 2, 2, 2).family().unwrap();
        let ring = fam.ring(Field::prime(101).unwrap(), OrderChoice::VReading);
        let g = fam.generators(&ring).unwrap();
        let c = diagonal_monomials(&g);
        let inst = LemmaChainInstance {
            n: g.clone(),
            i: g.clone(),
            j: g,
            a: c.clone(),
            b: c.clone(),
            c,
            shift: 0,
            max_degree: 4,
        };
        let r = verify_lemma_chain(&inst).unwrap();
        assert!(r.pass);
        assert_eq!(r.degrees[2].h_j, 27);
    }
}
