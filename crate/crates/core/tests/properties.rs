use std::sync::Arc;

use proptest::prelude::*;

use ddet::algebra::text::{format_polynomial, parse_polynomial};
use ddet::algebra::{Field, Monomial, Polynomial, Ring, TermOrder, VariableId};
use ddet::combinatorics::{hilbert_by_counting, hilbert_function_upto, minimalize, stanley_reisner, MonomialIdeal};
use ddet::dimension::height_formula;
use ddet::groebner::reduce_deterministic;
use ddet::ideals::{diagonal_monomials, leading_monomial_ideal, IdealSpec};

const NV: u32 = 4;

fn ring(field: Field) -> Arc<Ring> {
    let pool: Vec<VariableId> = (1..=NV as u16).map(|j| VariableId::new(1, 1, j)).collect();
    Arc::new(Ring::new(field, TermOrder::v_reading(&pool)))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..3, NV as usize).prop_map(|es| {
        Monomial::from_pairs(
            es.into_iter()
                .enumerate()
                .filter(|e| e.1 > 0)
                .map(|(v, e)| (v as u32, e)),
        )
    })
}

fn poly(field: Field) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-20i64..20, monomial()), 0..6).prop_map(move |ts| {
        let r = ring(field);
        let terms = ts.into_iter().map(|(c, m)| (field.from_i64(c), m)).collect();
        Polynomial::from_terms(&r, terms)
    })
}

fn squarefree_ideal(nv: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::btree_set(0..nv, 1..4), 0..7).prop_map(move |sets| {
        MonomialIdeal::new(
            (0..nv).collect(),
            sets.into_iter().map(Monomial::from_support).collect(),
        )
        .unwrap()
    })
}

fn small_cases() -> impl Strategy<Value = (u16, u16, u16, u16, u16)> {
    (1u16..=3, 1u16..=3, 1u16..=2)
        .prop_flat_map(|(m, n, r)| (Just((m, n, r)), 1..=m.min(n)))
        .prop_flat_map(|((m, n, r), s)| (Just((m, n, r, s)), s..=n))
        .prop_map(|((m, n, r, s), t)| (m, n, r, s, t))
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Prime(32003)), Just(Field::Prime(7)), Just(Field::Rationals)]
}

proptest! {
    #[test]
    fn ring_axioms((f, g, h) in fields().prop_flat_map(|k| (poly(k), poly(k), poly(k)))) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        let lhs = f.add(&g).unwrap().mul(&h).unwrap();
        let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.sub(&g).unwrap().add(&g).unwrap(), f.clone());
        prop_assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn text_round_trip(f in fields().prop_flat_map(poly)) {
        let text = format_polynomial(&f);
        let back = parse_polynomial(&text).unwrap().to_polynomial(f.ring()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn division_recombines(f in poly(Field::Prime(101)), ds in prop::collection::vec(poly(Field::Prime(101)), 1..4)) {
        let ds: Vec<Polynomial> = ds.into_iter().filter(|d| !d.is_zero()).collect();
        let res = reduce_deterministic(&f, &ds);
        prop_assert_eq!(res.recombine(&ds), f);
        for t in res.remainder.terms() {
            prop_assert!(ds.iter().all(|d| !d.leading_monomial().unwrap().divides(&t.1)));
        }
    }

    #[test]
    fn minimalize_is_an_antichain(gens in prop::collection::vec(monomial(), 0..10)) {
        let min = minimalize(gens.clone());
        prop_assert_eq!(minimalize(min.clone()), min.clone());
        for (i, a) in min.iter().enumerate() {
            for (j, b) in min.iter().enumerate() {
                prop_assert!(i == j || !a.divides(b));
            }
        }
        for g in &gens {
            prop_assert!(min.iter().any(|m| m.divides(g)));
        }
    }

    #[test]
    fn colon_membership(i in squarefree_ideal(6), v in 0u32..6, m in prop::collection::btree_set(0u32..6, 0..4)) {
        let m = Monomial::from_support(m);
        let colon = i.colon_by_variable(v);
        prop_assert_eq!(colon.contains(&m), i.contains(&m.mul(&Monomial::var(v))));
    }

    #[test]
    fn colon_of_sum_with_multiple(a in squarefree_ideal(6), b in squarefree_ideal(6), v in 0u32..6) {
        let lhs = a.sum_with_multiple(v, &b).colon_by_variable(v);
        let rhs = a.colon_by_variable(v).sum(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pivot_hilbert_matches_counting(i in squarefree_ideal(7)) {
        let h = hilbert_function_upto(&i, 5);
        for d in 0..=5u32 {
            prop_assert_eq!(h[d as usize], hilbert_by_counting(&i, d));
        }
    }

    #[test]
    fn stanley_reisner_round_trip(i in squarefree_ideal(8)) {
        let c = stanley_reisner(&i).unwrap();
        prop_assert_eq!(c.ideal(), i);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_have_diagonal_leading_terms((m, n, r, s, t) in small_cases()) {
        let family = IdealSpec::double_det(m, n, r, s, t).family().unwrap();
        let ring = family.ring(Field::Prime(32003), ddet::algebra::OrderChoice::VReading);
        let gens = family.generators(&ring).unwrap();
        prop_assert!(gens.generators().iter().all(|g| g.poly.is_homogeneous()));
        prop_assert_eq!(diagonal_monomials(&gens), leading_monomial_ideal(&gens));
    }
}

#[test]
fn height_formula_is_monotone_on_the_box() {
    for m in 1..=5u16 {
        for n in 1..=5u16 {
            for r in 1..=4u16 {
                for s in 1..=m {
                    for t in s..=n {
                        let h = height_formula(m, n, r, s, t).unwrap();
                        assert!(
                            h <= (r * m * n) as u64,
                            "({m},{n},{r},{s},{t}) exceeds the variable count"
                        );
                        if s < m && s + 1 <= t {
                            assert!(
                                height_formula(m, n, r, s + 1, t).unwrap() <= h,
                                "s at ({m},{n},{r},{s},{t})"
                            );
                        }
                        if t < n {
                            assert!(
                                height_formula(m, n, r, s, t + 1).unwrap() <= h,
                                "t at ({m},{n},{r},{s},{t})"
                            );
                        }
                        if r < 4 {
                            assert!(
                                height_formula(m, n, r + 1, s, t).unwrap() >= h,
                                "r at ({m},{n},{r},{s},{t})"
                            );
                        }
                        if m < 5 {
                            assert!(
                                height_formula(m + 1, n, r, s, t).unwrap() >= h,
                                "m at ({m},{n},{r},{s},{t})"
                            );
                        }
                        if n < 5 {
                            assert!(
                                height_formula(m, n + 1, r, s, t).unwrap() >= h,
                                "n at ({m},{n},{r},{s},{t})"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn single_block_formula_is_the_classical_one() {
    for m in 1..=5u16 {
        for n in 1..=5u16 {
            for s in 1..=m.min(n) {
                for t in s..=n {
                    assert_eq!(
                        height_formula(m, n, 1, s, t).unwrap(),
                        ((m - s + 1) * (n - s + 1)) as u64
                    );
                }
            }
        }
    }
}
