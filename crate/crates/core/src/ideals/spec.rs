//! JSON ideal specifications.
//!
//! ```json
//! {"family": "double-det", "m": 2, "n": 2, "r": 2, "s": 2, "t": 2}
//! {"family": "s3", "m": 3, "n": 3, "k": 0, "l": 0, "a": 1, "b": 1}
//! {"family": "lambda", "m": 5, "n": 7, "r": 2, "s": 3, "t": 4, "diagrams": [[12,12,11,11],[12,12]]}
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::families::{
    double_det_generators, lambda_family_generators, s3_family_generators, DiagramFamily, SectionThreeFamily,
};
use super::minors::GeneratorSet;
use super::shape::{BlockMatrixShape, YoungDiagram};
use crate::algebra::{Field, OrderChoice, Ring, TermOrder, VariableId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "double-det")]
    DoubleDet,
    #[serde(rename = "s3")]
    SectionThree,
    #[serde(rename = "lambda")]
    Lambda,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub family: FamilyKind,
    pub m: u16,
    pub n: u16,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagrams: Option<Vec<Vec<u16>>>,
    /// Explicit V-side diagrams for lambda specs; defaults to the hat of each diagram.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_diagrams: Option<Vec<Vec<u16>>>,
}

/// A validated specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    DoubleDet { shape: BlockMatrixShape, s: u16, t: u16 },
    SectionThree(SectionThreeFamily),
    Lambda(DiagramFamily),
}

fn need<T>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameters(format!("missing field `{name}`")))
}

impl IdealSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn double_det(m: u16, n: u16, r: u16, s: u16, t: u16) -> Self {
        IdealSpec {
            family: FamilyKind::DoubleDet,
            m,
            n,
            r: Some(r),
            s: Some(s),
            t: Some(t),
            k: None,
            l: None,
            a: None,
            b: None,
            diagrams: None,
            v_diagrams: None,
        }
    }

    pub fn family(&self) -> Result<Family> {
        match self.family {
            FamilyKind::DoubleDet => {
                let shape = BlockMatrixShape::new(self.m, self.n, need(self.r, "r")?)?;
                let (s, t) = (need(self.s, "s")?, need(self.t, "t")?);
                if s < 1 || s > self.m || t < 1 || t > self.n {
                    return Err(Error::InvalidParameters(format!(
                        "need 1 <= s <= m and 1 <= t <= n, got s={s}, t={t}"
                    )));
                }
                Ok(Family::DoubleDet { shape, s, t })
            }
            FamilyKind::SectionThree => Ok(Family::SectionThree(SectionThreeFamily::new(
                self.m,
                self.n,
                need(self.k, "k")?,
                need(self.l, "l")?,
                need(self.a, "a")?,
                need(self.b, "b")?,
            )?)),
            FamilyKind::Lambda => {
                let shape = BlockMatrixShape::new(self.m, self.n, need(self.r, "r")?)?;
                let diagrams = need(self.diagrams.clone(), "diagrams")?
                    .into_iter()
                    .map(YoungDiagram::new)
                    .collect::<Result<Vec<_>>>()?;
                if let Some(k) = self.k {
                    if k as usize != diagrams.len() {
                        return Err(Error::InvalidParameters(format!(
                            "k={k} but {} diagrams given",
                            diagrams.len()
                        )));
                    }
                }
                let (s, t) = (need(self.s, "s")?, need(self.t, "t")?);
                Ok(Family::Lambda(match &self.v_diagrams {
                    None => DiagramFamily::new(shape, s, t, diagrams)?,
                    Some(vs) => {
                        let vs = vs.iter().cloned().map(YoungDiagram::new).collect::<Result<Vec<_>>>()?;
                        DiagramFamily::with_v_diagrams(shape, s, t, diagrams, vs)?
                    }
                }))
            }
        }
    }
}

impl Family {
    /// Ambient variables of the ideal.
    pub fn pool(&self) -> Vec<VariableId> {
        match self {
            Family::DoubleDet { shape, .. } => shape.pool(),
            Family::SectionThree(f) => f.pool(),
            Family::Lambda(f) => f.shape.pool(),
        }
    }

    pub fn generators(&self, ring: &Arc<Ring>) -> Result<GeneratorSet> {
        match self {
            Family::DoubleDet { shape, s, t } => double_det_generators(ring, *shape, *s, *t),
            Family::SectionThree(f) => s3_family_generators(ring, f),
            Family::Lambda(f) => lambda_family_generators(ring, f),
        }
    }

    /// A ring over this family's pool.
    pub fn ring(&self, field: Field, order: OrderChoice) -> Arc<Ring> {
        Arc::new(Ring::new(field, TermOrder::from_choice(order, &self.pool())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_three_kinds() {
        let d = IdealSpec::from_json(r#"{"family":"double-det","m":2,"n":2,"r":2,"s":2,"t":2}"#).unwrap();
        assert!(matches!(d.family().unwrap(), Family::DoubleDet { .. }));
        let s = IdealSpec::from_json(r#"{"family":"s3","m":3,"n":3,"k":0,"l":0,"a":1,"b":1}"#).unwrap();
        assert!(matches!(s.family().unwrap(), Family::SectionThree(_)));
        let l = IdealSpec::from_json(
            r#"{"family":"lambda","m":5,"n":7,"r":2,"s":3,"t":4,"diagrams":[[12,12,11,11],[12,12]]}"#,
        )
        .unwrap();
        assert!(matches!(l.family().unwrap(), Family::Lambda(_)));
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(IdealSpec::from_json(r#"{"family":"cubic","m":2,"n":2}"#).is_err());
        assert!(
            IdealSpec::from_json(r#"{"family":"double-det","m":2,"n":2,"r":2,"s":2}"#)
                .unwrap()
                .family()
                .is_err()
        );
        assert!(
            IdealSpec::from_json(r#"{"family":"s3","m":1,"n":2,"k":0,"l":0,"a":1,"b":1}"#)
                .unwrap()
                .family()
                .is_err()
        );
    }

    #[test]
    fn generation_is_deterministic() {
        let fam = IdealSpec::double_det(2, 3, 2, 2, 2).family().unwrap();
        let ring = fam.ring(Field::Rationals, OrderChoice::VReading);
        let a = fam.generators(&ring).unwrap().to_text();
        let b = fam.generators(&ring).unwrap().to_text();
        assert_eq!(a, b);
        assert!(a.starts_with("field: QQ\n# provenance: H size=2 rows=1,2 cols=1,2\n"));
    }
}
