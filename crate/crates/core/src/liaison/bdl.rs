use super::certificate::Check;
use crate::combinatorics::{height, stanley_reisner, MonomialIdeal};

/// Basic double link identities for `C = A + v B`, with `v` a ring variable index.
///
/// Returns the checks `bdl_sum`, `bdl_colon`, `bdl_nzd` and `heights`.
pub fn verify_basic_double_link(a: &MonomialIdeal, b: &MonomialIdeal, c: &MonomialIdeal, v: u32) -> Vec<Check> {
    let sum = Check::timed("bdl_sum", || {
        let expected = a.sum_with_multiple(v, b);
        let ok = expected.generators() == c.generators();
        (
            ok,
            (!ok).then(|| {
                format!(
                    "A+vB has {} minimal generators, C has {}",
                    expected.generators().len(),
                    c.generators().len()
                )
            }),
        )
    });
    let colon = Check::timed("bdl_colon", || {
        let q = c.colon_by_variable(v);
        let ok = q.generators() == b.generators();
        let witness = (!ok).then(|| match q.generators().iter().find(|g| !b.contains(g)) {
            Some(g) => format!("(C:v) contains {g:?} outside B"),
            None => "B has a generator outside (C:v)".to_string(),
        });
        (ok, witness)
    });
    let nzd = Check::timed("bdl_nzd", || match a.generators().iter().find(|g| g.exponent(v) > 0) {
        Some(g) => (false, Some(format!("v divides the generator {g:?} of A"))),
        None => (true, None),
    });
    let heights = Check::timed("heights", || match (height(a), height(b), height(c)) {
        (Ok(ha), Ok(hb), Ok(hc)) => (hc == hb && hc == ha + 1, Some(format!("A={ha} B={hb} C={hc}"))),
        (ra, rb, rc) => {
            let err = [ra.err(), rb.err(), rc.err()]
                .into_iter()
                .flatten()
                .next()
                .expect("one failed");
            (false, Some(err.to_string()))
        }
    });
    vec![sum, colon, nzd, heights]
}

/// `lk_Δ_C(v) = Δ_B` and `Δ_C - v = Δ_A`, both on the vertex set without `v`.
///
/// Returns the checks `sr_link` and `sr_deletion`.
pub fn verify_link_deletion(a: &MonomialIdeal, b: &MonomialIdeal, c: &MonomialIdeal, v: u32) -> Vec<Check> {
    let rest: Vec<u32> = c.ambient().iter().copied().filter(|&u| u != v).collect();
    let compare = |name: &str, other: &MonomialIdeal, link: bool| {
        Check::timed(name, || {
            let delta = match stanley_reisner(c) {
                Ok(d) => d,
                Err(e) => return (false, Some(e.to_string())),
            };
            let side = if link { delta.link(v) } else { delta.deletion(v) };
            let expected = other.with_ambient(rest.clone()).and_then(|o| stanley_reisner(&o));
            match (side, expected) {
                (Ok(x), Ok(y)) => {
                    let ok = x.vertices() == y.vertices() && x.minimal_nonfaces() == y.minimal_nonfaces();
                    (
                        ok,
                        (!ok).then(|| {
                            format!(
                                "{} vs {} minimal nonfaces",
                                x.minimal_nonfaces().len(),
                                y.minimal_nonfaces().len()
                            )
                        }),
                    )
                }
                (Err(e), _) | (_, Err(e)) => (false, Some(e.to_string())),
            }
        })
    };
    vec![compare("sr_link", b, true), compare("sr_deletion", a, false)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn ideal(vars: &[u32], gens: &[&[(u32, u32)]]) -> MonomialIdeal {
        let gens = gens.iter().map(|g| Monomial::from_pairs(g.iter().copied())).collect();
        MonomialIdeal::new(vars.to_vec(), gens).unwrap()
    }

    #[test]
    fn square_over_zero() {
        let a = ideal(&[0], &[]);
        let b = ideal(&[0], &[&[(0, 1)]]);
        let c = ideal(&[0], &[&[(0, 2)]]);
        let checks = verify_basic_double_link(&a, &b, &c, 0);
        assert!(checks.iter().all(Check::passed), "{checks:?}");
        assert_eq!(checks[3].witness.as_deref(), Some("A=0 B=1 C=1"));
    }

    #[test]
    fn wrong_colon_is_reported() {
        let a = ideal(&[0, 1], &[&[(0, 1)]]);
        let b = ideal(&[0, 1], &[&[(1, 1)]]);
        let c = ideal(&[0, 1], &[&[(0, 1)], &[(1, 2)]]);
        let checks = verify_basic_double_link(&a, &b, &c, 1);
        assert!(!checks.iter().find(|c| c.name == "bdl_colon").unwrap().passed());
    }

    #[test]
    fn link_and_deletion_of_a_squarefree_link() {
        // A = (x0 x1), B = (x0, x1), C = A + x2 B
        let a = ideal(&[0, 1, 2], &[&[(0, 1), (1, 1)]]);
        let b = ideal(&[0, 1, 2], &[&[(0, 1)], &[(1, 1)]]);
        let c = a.sum_with_multiple(2, &b);
        assert!(verify_basic_double_link(&a, &b, &c, 2).iter().all(Check::passed));
        assert!(verify_link_deletion(&a, &b, &c, 2).iter().all(Check::passed));
    }
}
