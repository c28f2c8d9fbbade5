//! Hilbert functions of monomial quotients by the pivot recursion
//! `H_{R/I}(d) = H_{R/(I:x)}(d-1) + H_{R'/I'}(d)`, where `R'` drops `x` and `I'`
//! keeps the generators free of `x`.

use std::collections::HashMap;

use super::ideal::{minimalize, MonomialIdeal};
use crate::algebra::Monomial;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> u64 {
    if d == 0 {
        1
    } else if n == 0 {
        0
    } else {
        binomial(n as u64 + d as u64 - 1, d as u64)
    }
}

type Memo = HashMap<(usize, Vec<Monomial>), Vec<u64>>;

fn rec(n: usize, gens: Vec<Monomial>, max_d: u32, memo: &mut Memo) -> Vec<u64> {
    if gens.iter().any(|g| g.is_one()) {
        return vec![0; max_d as usize + 1];
    }
    if gens.is_empty() {
        return (0..=max_d).map(|d| monomial_count(n, d)).collect();
    }
    if gens.len() == 1 {
        let e = gens[0].degree();
        return (0..=max_d)
            .map(|d| monomial_count(n, d) - if d >= e { monomial_count(n, d - e) } else { 0 })
            .collect();
    }
    let key = (n, gens);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let gens = &key.1;
    let mut freq: HashMap<u32, usize> = HashMap::new();
    for g in gens {
        for v in g.support() {
            *freq.entry(v).or_default() += 1;
        }
    }
    let x = freq
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&v, _)| v)
        .expect("nonempty support");
    let colon = minimalize(gens.iter().map(|g| g.colon_var(x)).collect());
    let rest: Vec<Monomial> = gens.iter().filter(|g| g.exponent(x) == 0).cloned().collect();
    let a = rec(n, colon, max_d, memo);
    let b = rec(n - 1, rest, max_d, memo);
    let out: Vec<u64> = (0..=max_d as usize)
        .map(|d| b[d] + if d >= 1 { a[d - 1] } else { 0 })
        .collect();
    memo.insert(key, out.clone());
    out
}

/// `H_{R/I}(d)` for `d = 0..=max_d`, `R` the polynomial ring on the ambient variables.
pub fn hilbert_function_upto(ideal: &MonomialIdeal, max_d: u32) -> Vec<u64> {
    let mut memo = Memo::new();
    rec(ideal.ambient().len(), ideal.generators().to_vec(), max_d, &mut memo)
}

pub fn hilbert_function_monomial(ideal: &MonomialIdeal, d: u32) -> u64 {
    hilbert_function_upto(ideal, d)[d as usize]
}

/// Direct count of degree-`d` monomials outside the ideal.
pub fn hilbert_by_counting(ideal: &MonomialIdeal, d: u32) -> u64 {
    fn walk(vars: &[u32], k: usize, left: u32, cur: &mut Vec<(u32, u32)>, ideal: &MonomialIdeal, count: &mut u64) {
        if left == 0 {
            if !ideal.contains(&Monomial::from_pairs(cur.iter().copied())) {
                *count += 1;
            }
            return;
        }
        if k == vars.len() {
            return;
        }
        for e in (0..=left).rev() {
            if e > 0 {
                cur.push((vars[k], e));
            }
            walk(vars, k + 1, left - e, cur, ideal, count);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut count = 0;
    walk(ideal.ambient(), 0, d, &mut Vec::new(), ideal, &mut count);
    count
}
