//! Closed-form heights of double determinantal ideals, compared against the
//! height of the initial ideal, and the codimension test behind condition R1.

use serde::Serialize;

use crate::algebra::{Field, OrderChoice};
use crate::combinatorics::height;
use crate::error::{Error, Result};
use crate::groebner::verify_groebner;
use crate::ideals::{diagonal_monomials, Family, IdealSpec};

fn check_params(m: u16, n: u16, r: u16, s: u16, t: u16) -> Result<()> {
    if m == 0 || n == 0 || r == 0 {
        return Err(Error::InvalidParameters("m, n and r must be positive".into()));
    }
    if s < 1 || s > m || t < 1 || t > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= s <= m and 1 <= t <= n, got s={s}, t={t}"
        )));
    }
    Ok(())
}

/// Height of the ideal of s-minors of H and t-minors of V.
///
/// With `s <= t`:
/// `(m-s+1)(n-s+1) + (r-1)n(m-s+1) + (n-t+1) Σ_{q=2..r} [(s-1) - max(0, t-(s-1)(q-1)-1)]`.
/// For `s > t` the transposed problem `(n, m, r, t, s)` is evaluated, and when
/// `min(s,t) = 1` the ideal contains every variable.
pub fn height_formula(m: u16, n: u16, r: u16, s: u16, t: u16) -> Result<u64> {
    check_params(m, n, r, s, t)?;
    if s.min(t) == 1 {
        return Ok(r as u64 * m as u64 * n as u64);
    }
    if s > t {
        return height_formula(n, m, r, t, s);
    }
    let (m, n, r, s, t) = (m as i64, n as i64, r as i64, s as i64, t as i64);
    let sum: i64 = (2..=r).map(|q| (s - 1) - 0.max(t - (s - 1) * (q - 1) - 1)).sum();
    Ok(((m - s + 1) * (n - s + 1) + (r - 1) * n * (m - s + 1) + (n - t + 1) * sum) as u64)
}

/// The alternative expression
/// `(m-s+1)(n-s+1) + (r-1)(m-s) + (n-t+1) Σ_{q=2..r} max(0, m-(t-(s-1)(q-1))+1)`.
pub fn height_formula_proof_variant(m: u16, n: u16, r: u16, s: u16, t: u16) -> Result<u64> {
    check_params(m, n, r, s, t)?;
    let (m, n, r, s, t) = (m as i64, n as i64, r as i64, s as i64, t as i64);
    let sum: i64 = (2..=r).map(|q| 0.max(m - (t - (s - 1) * (q - 1)) + 1)).sum();
    Ok(((m - s + 1) * (n - s + 1) + (r - 1) * (m - s) + (n - t + 1) * sum).max(0) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct R1Check {
    pub jacobian_height: u64,
    pub height: u64,
    pub pass: bool,
}

/// Passes when the ideal of (s-1)-minors of H and (t-1)-minors of V has height
/// at least `height + 2`.
pub fn serre_r1_check(m: u16, n: u16, r: u16, s: u16, t: u16) -> Result<R1Check> {
    if s < 2 || t < 2 {
        return Err(Error::InvalidParameters("R1 check needs s, t >= 2".into()));
    }
    let h = height_formula(m, n, r, s, t)?;
    let jac = height_formula(m, n, r, s - 1, t - 1)?;
    Ok(R1Check {
        jacobian_height: jac,
        height: h,
        pass: jac >= h + 2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub m: u16,
    pub n: u16,
    pub r: u16,
    pub s: u16,
    pub t: u16,
    pub formula: &'static str,
    pub formula_height: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed_height: Option<u64>,
    /// Whether the generators were confirmed to be a Gröbner basis before
    /// reading the height off their diagonals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner_verified: Option<bool>,
    pub affine_dim: u64,
    pub projective_dim: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r1_pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

#[derive(Clone, Copy, Debug)]
pub struct DimensionOptions {
    pub use_computed: bool,
    pub proof_variant: bool,
    pub field: Field,
    pub order: OrderChoice,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions {
            use_computed: false,
            proof_variant: false,
            field: Field::Prime(crate::algebra::DEFAULT_PRIME),
            order: OrderChoice::VReading,
        }
    }
}

/// Formula height for a double-det spec, optionally checked against the
/// height of the diagonal-monomial ideal.
pub fn verify_dimension(spec: &IdealSpec, opts: &DimensionOptions) -> Result<DimensionReport> {
    let family = spec.family()?;
    let Family::DoubleDet { shape, s, t } = family else {
        return Err(Error::InvalidParameters(
            "dimension reports need a double-det spec".into(),
        ));
    };
    let (m, n, r) = (shape.m, shape.n, shape.r);
    let formula_height = if opts.proof_variant {
        height_formula_proof_variant(m, n, r, s, t)?
    } else {
        height_formula(m, n, r, s, t)?
    };
    let total = r as u64 * m as u64 * n as u64;
    let (computed_height, groebner_verified) = if opts.use_computed {
        let ring = family.ring(opts.field, opts.order);
        let gens = family.generators(&ring)?;
        let verified = verify_groebner(&gens).is_verified();
        (Some(height(&diagonal_monomials(&gens))? as u64), Some(verified))
    } else {
        (None, None)
    };
    let affine_dim = total.saturating_sub(formula_height);
    let r1_pass = if s >= 2 && t >= 2 {
        Some(serre_r1_check(m, n, r, s, t)?.pass)
    } else {
        None
    };
    Ok(DimensionReport {
        m,
        n,
        r,
        s,
        t,
        formula: if opts.proof_variant {
            "proof-variant"
        } else {
            "statement"
        },
        formula_height,
        computed_height,
        groebner_verified,
        affine_dim,
        projective_dim: affine_dim as i64 - 1,
        r1_pass,
        matches: computed_height.map(|c| c == formula_height),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values() {
        assert_eq!(height_formula(3, 3, 1, 2, 2).unwrap(), 4);
        assert_eq!(height_formula(3, 3, 3, 2, 3).unwrap(), 17);
        assert_eq!(height_formula(1, 1, 2, 1, 1).unwrap(), 2);
        assert_eq!(height_formula(2, 2, 2, 2, 2).unwrap(), 4);
        assert_eq!(height_formula(4, 4, 2, 2, 2).unwrap(), 24);
        assert_eq!(height_formula(4, 4, 2, 3, 3).unwrap(), 16);
    }

    #[test]
    fn transposed_when_s_exceeds_t() {
        assert_eq!(
            height_formula(3, 2, 2, 3, 2).unwrap(),
            height_formula(2, 3, 2, 2, 3).unwrap()
        );
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(height_formula(2, 2, 2, 3, 2).is_err());
        assert!(height_formula(2, 2, 0, 2, 2).is_err());
        assert!(serre_r1_check(2, 2, 2, 1, 2).is_err());
    }

    #[test]
    fn r1_examples() {
        assert_eq!(
            serre_r1_check(3, 3, 3, 2, 3).unwrap(),
            R1Check {
                jacobian_height: 27,
                height: 17,
                pass: true
            }
        );
        assert!(serre_r1_check(4, 4, 2, 3, 3).unwrap().pass);
        assert_eq!(serre_r1_check(2, 2, 1, 2, 2).unwrap().jacobian_height, 4);
    }

    #[test]
    fn report_for_small_case() {
        let opts = DimensionOptions {
            use_computed: true,
            ..Default::default()
        };
        let rep = verify_dimension(&IdealSpec::double_det(2, 2, 2, 2, 2), &opts).unwrap();
        assert_eq!(rep.formula_height, 4);
        assert_eq!(rep.computed_height, Some(4));
        assert_eq!(rep.affine_dim + rep.formula_height, 8);
        assert_eq!(rep.matches, Some(true));
    }

    #[test]
    fn proof_variant_differs_on_the_worked_example() {
        assert_eq!(height_formula_proof_variant(3, 3, 3, 2, 3).unwrap(), 11);
    }
}
