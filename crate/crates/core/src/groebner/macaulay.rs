//! Hilbert function of R/J by linear algebra on Macaulay matrices over GF(p).
//!
//! The degree-d piece of J is spanned by all products `u * g` with `u` a
//! monomial. Every generator produced by this crate is homogeneous for the
//! grading by row, column and block content of the variables, so the span
//! splits into independent pieces, one per multidegree; each piece is
//! row-reduced on its own.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{Coeff, Field, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::ideals::GeneratorSet;

type Key = Vec<u8>;

struct Grading {
    /// Multidegree of each ring variable (empty for the standard grading).
    var_keys: HashMap<u32, Key>,
    width: usize,
}

impl Grading {
    fn content(ring: &Ring, vars: &[u32]) -> Self {
        let ids: Vec<_> = vars.iter().map(|&v| ring.var(v)).collect();
        let rmax = ids.iter().map(|v| v.row).max().unwrap_or(0) as usize;
        let cmax = ids.iter().map(|v| v.col).max().unwrap_or(0) as usize;
        let bmax = ids.iter().map(|v| v.block).max().unwrap_or(0) as usize;
        let width = rmax + cmax + bmax;
        let var_keys = vars
            .iter()
            .zip(&ids)
            .map(|(&v, id)| {
                let mut k = vec![0u8; width];
                k[id.row as usize - 1] += 1;
                k[rmax + id.col as usize - 1] += 1;
                k[rmax + cmax + id.block as usize - 1] += 1;
                (v, k)
            })
            .collect();
        Grading { var_keys, width }
    }

    fn standard(vars: &[u32]) -> Self {
        Grading {
            var_keys: vars.iter().map(|&v| (v, Vec::new())).collect(),
            width: 0,
        }
    }

    fn key(&self, m: &Monomial) -> Key {
        let mut k = vec![0u8; self.width];
        for &(v, e) in m.exps() {
            for (a, b) in k.iter_mut().zip(&self.var_keys[&v]) {
                *a += b * e as u8;
            }
        }
        k
    }

    fn is_homogeneous(&self, p: &Polynomial) -> bool {
        let mut keys = p.terms().iter().map(|t| self.key(&t.1));
        match keys.next() {
            None => true,
            Some(first) => keys.all(|k| k == first),
        }
    }
}

fn monomials_of_degree(vars: &[u32], d: u32) -> Vec<Monomial> {
    fn rec(vars: &[u32], start: usize, left: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_pairs(cur.iter().copied()));
            return;
        }
        for k in start..vars.len() {
            for e in (1..=left).rev() {
                cur.push((vars[k], e));
                rec(vars, k + 1, left - e, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, 0, d, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Rank of a set of sparse rows over GF(p). Columns are arbitrary ids.
fn sparse_rank(rows: Vec<Vec<(u32, u32)>>, ncols: usize, p: u32) -> usize {
    let p64 = p as u64;
    let mut pivots: Vec<Option<Vec<(u32, u32)>>> = vec![None; ncols];
    let mut rank = 0;
    for mut row in rows {
        if rank == ncols {
            break;
        }
        loop {
            let Some(&(lead, c)) = row.first() else { break };
            match &pivots[lead as usize] {
                Some(piv) => {
                    // row <- row - c * piv (piv has leading coefficient 1)
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < piv.len() {
                        let take_row = j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0);
                        let take_piv = i >= row.len() || (j < piv.len() && piv[j].0 < row[i].0);
                        if take_row {
                            out.push(row[i]);
                            i += 1;
                        } else if take_piv {
                            let v = (p64 - (c as u64 * piv[j].1 as u64) % p64) % p64;
                            if v != 0 {
                                out.push((piv[j].0, v as u32));
                            }
                            j += 1;
                        } else {
                            let v = (row[i].1 as u64 + p64 - (c as u64 * piv[j].1 as u64) % p64) % p64;
                            if v != 0 {
                                out.push((row[i].0, v as u32));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = crate::algebra::field::inv_mod(c, p) as u64;
                    for t in row.iter_mut() {
                        t.1 = (t.1 as u64 * inv % p64) as u32;
                    }
                    pivots[lead as usize] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

struct Prepared {
    p: u32,
    grading: Grading,
    vars: Vec<u32>,
    gens: Vec<(Polynomial, Key, u32)>,
}

fn prepare(gens: &GeneratorSet) -> Result<Prepared> {
    let ring = gens.ring();
    let p = match ring.field() {
        Field::Prime(p) => p,
        f => {
            return Err(Error::InvalidField(format!(
                "Macaulay ranks need a prime field, got {f}"
            )))
        }
    };
    let mut vars = gens
        .pool()
        .iter()
        .map(|&v| ring.index_of(v))
        .collect::<Result<Vec<u32>>>()?;
    vars.sort_unstable();
    let polys: Vec<Polynomial> = gens.polynomials().into_iter().filter(|g| !g.is_zero()).collect();
    for g in &polys {
        for (_, m) in g.terms() {
            if let Some(v) = m.support().find(|v| vars.binary_search(v).is_err()) {
                return Err(Error::InvalidParameters(format!(
                    "generator uses {} outside the ambient variables",
                    ring.var(v)
                )));
            }
        }
    }
    let content = Grading::content(ring, &vars);
    let grading = if polys.iter().all(|g| content.is_homogeneous(g)) {
        content
    } else {
        let standard = Grading::standard(&vars);
        if !polys.iter().all(|g| g.is_homogeneous()) {
            return Err(Error::InvalidParameters(
                "Hilbert functions need homogeneous generators".into(),
            ));
        }
        standard
    };
    let gens = polys
        .into_iter()
        .map(|g| {
            let lm = g.leading_monomial().unwrap().clone();
            (g, grading.key(&lm), lm.degree())
        })
        .collect();
    Ok(Prepared { p, grading, vars, gens })
}

impl Prepared {
    fn value(&self, d: u32, monos: &[Vec<Monomial>], mono_keys: &[Vec<Key>]) -> u64 {
        let mut buckets: HashMap<Key, Vec<(u32, u32)>> = HashMap::new();
        for (gi, (_, gkey, gdeg)) in self.gens.iter().enumerate() {
            if *gdeg > d {
                continue;
            }
            let e = (d - gdeg) as usize;
            for (ui, ukey) in mono_keys[e].iter().enumerate() {
                let key: Key = gkey.iter().zip(ukey).map(|(a, b)| a + b).collect();
                buckets.entry(key).or_default().push((gi as u32, ui as u32));
            }
        }
        let total_rank: usize = buckets
            .into_par_iter()
            .map(|(_, rows)| {
                let mut cols: HashMap<Monomial, u32> = HashMap::new();
                let built: Vec<Vec<(u32, u32)>> = rows
                    .iter()
                    .map(|&(gi, ui)| {
                        let (g, _, gdeg) = &self.gens[gi as usize];
                        let u = &monos[(d - gdeg) as usize][ui as usize];
                        let mut row: Vec<(u32, u32)> = g
                            .terms()
                            .iter()
                            .map(|(c, m)| {
                                let next = cols.len() as u32;
                                let id = *cols.entry(m.mul(u)).or_insert(next);
                                (id, coeff_mod(c))
                            })
                            .collect();
                        row.sort_unstable();
                        row
                    })
                    .collect();
                sparse_rank(built, cols.len(), self.p)
            })
            .sum();
        let n = self.vars.len() as u64;
        let count = if d == 0 {
            1
        } else {
            binomial(n + d as u64 - 1, d as u64)
        };
        count - total_rank as u64
    }
}

fn coeff_mod(c: &Coeff) -> u32 {
    c.as_mod().expect("prime field coefficient")
}

/// `dim_k [R/J]_d` for `d = 0..=max_d`, with R the polynomial ring on the
/// generator set's ambient variables.
pub fn macaulay_hilbert_upto(gens: &GeneratorSet, max_d: u32) -> Result<Vec<u64>> {
    let prep = prepare(gens)?;
    let monos: Vec<Vec<Monomial>> = (0..=max_d).map(|e| monomials_of_degree(&prep.vars, e)).collect();
    let keys: Vec<Vec<Key>> = monos
        .iter()
        .map(|ms| ms.iter().map(|m| prep.grading.key(m)).collect())
        .collect();
    Ok((0..=max_d).map(|d| prep.value(d, &monos, &keys)).collect())
}

pub fn macaulay_hilbert(gens: &GeneratorSet, d: u32) -> Result<u64> {
    Ok(macaulay_hilbert_upto(gens, d)?[d as usize])
}
