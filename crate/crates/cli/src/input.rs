use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};

use ddet::algebra::text::parse_file;
use ddet::algebra::{Ring, TermOrder};
use ddet::combinatorics::MonomialIdeal;
use ddet::ideals::{Family, GeneratorSet, IdealSpec};

use crate::{IdealSource, RunConfig};

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

impl IdealSource {
    pub fn spec(&self) -> Result<IdealSpec> {
        if let Some(p) = &self.spec {
            return Ok(IdealSpec::from_json(&read(p)?)?);
        }
        match (self.m, self.n, self.r, self.s, self.t) {
            (Some(m), Some(n), Some(r), Some(s), Some(t)) => Ok(IdealSpec::double_det(m, n, r, s, t)),
            _ => bail!(ddet::Error::InvalidParameters(
                "give --spec, --polys or all of --m --n --r --s --t".into()
            )),
        }
    }

    pub fn family(&self) -> Result<Family> {
        Ok(self.spec()?.family()?)
    }
}

/// A loaded ideal: generators from a spec or from a polynomial file.
pub struct Loaded {
    pub gens: GeneratorSet,
    pub from_spec: bool,
}

pub fn load(source: &IdealSource, cfg: &RunConfig) -> Result<Loaded> {
    if let Some(p) = &source.polys {
        let file = parse_file(&read(p)?)?;
        let pool = file.variables();
        let ring = Arc::new(Ring::new(file.field, TermOrder::from_choice(cfg.order, &pool)));
        let polys = file
            .polynomials
            .iter()
            .map(|raw| raw.to_polynomial(&ring))
            .collect::<ddet::Result<Vec<_>>>()?;
        return Ok(Loaded {
            gens: GeneratorSet::from_polynomials(&ring, pool, polys),
            from_spec: false,
        });
    }
    let family = source.family()?;
    let ring = family.ring(cfg.field, cfg.order);
    Ok(Loaded {
        gens: family.generators(&ring)?,
        from_spec: true,
    })
}

/// A polynomial file whose lines are all single monomials, as a monomial ideal.
pub fn monomial_ideal(gens: &GeneratorSet) -> Result<MonomialIdeal> {
    let ring = gens.ring();
    let mut monos = Vec::new();
    for p in gens.polynomials() {
        if p.terms().len() != 1 {
            bail!(ddet::Error::Parse(format!("expected a monomial, got `{p}`")));
        }
        monos.push(p.terms()[0].1.clone());
    }
    Ok(MonomialIdeal::from_variables(ring, gens.pool(), monos)?)
}
