//! Line-oriented polynomial text format.
//!
//! ```text
//! field: GF(32003)
//! # provenance: H size=2 rows=1,2 cols=1,2
//! x[1,1,1]*x[1,2,2]-x[1,1,2]*x[1,2,1]
//! ```

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Coeff, Field};
use super::monomial::{Monomial, VariableId};
use super::order::Ring;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// A parsed polynomial not yet attached to a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct RawPolynomial {
    pub terms: Vec<(BigRational, Vec<(VariableId, u32)>)>,
}

/// A parsed polynomial file.
#[derive(Clone, Debug)]
pub struct PolynomialFile {
    pub field: Field,
    pub polynomials: Vec<RawPolynomial>,
    /// The `# provenance:` comment preceding each polynomial, if any.
    pub provenance: Vec<Option<String>>,
}

impl RawPolynomial {
    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.terms.iter().flat_map(|t| t.1.iter().map(|p| p.0))
    }

    pub fn to_polynomial(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        let field = ring.field();
        let terms = self
            .terms
            .iter()
            .map(|(c, vars)| Ok((field.from_rational(c)?, ring.monomial_of(vars)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(ring, terms))
    }
}

impl PolynomialFile {
    pub fn variables(&self) -> Vec<VariableId> {
        let set: BTreeSet<VariableId> = self.polynomials.iter().flat_map(|p| p.variables()).collect();
        set.into_iter().collect()
    }
}

fn signed_parts(field: Field, c: &Coeff) -> (bool, String) {
    match (field, c) {
        (Field::Prime(p), Coeff::P(v)) if *v > p / 2 => (true, (p - v).to_string()),
        _ => (field.is_negative(c), c.abs_string()),
    }
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let ring = p.ring();
    let field = ring.field();
    let mut out = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let (neg, abs) = signed_parts(field, c);
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        if m.is_one() {
            out.push_str(&abs);
        } else {
            if abs != "1" {
                out.push_str(&abs);
                out.push('*');
            }
            out.push_str(&ring.format_monomial(m));
        }
    }
    out
}

/// Renders a whole file: header, then each polynomial with an optional comment line.
pub fn format_file(field: Field, polys: &[Polynomial], provenance: &[Option<String>]) -> String {
    let mut out = format!("field: {field}\n");
    for (k, p) in polys.iter().enumerate() {
        if let Some(Some(c)) = provenance.get(k) {
            out.push_str("# provenance: ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&format_polynomial(p));
        out.push('\n');
    }
    out
}

pub fn parse_file(text: &str) -> Result<PolynomialFile> {
    let mut field = None;
    let mut polynomials = Vec::new();
    let mut provenance = Vec::new();
    let mut pending: Option<String> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(p) = rest.trim().strip_prefix("provenance:") {
                pending = Some(p.trim().to_string());
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("field:") {
            field = Some(rest.trim().parse::<Field>()?);
            continue;
        }
        let poly = parse_polynomial(line).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        polynomials.push(poly);
        provenance.push(pending.take());
    }
    let field = field.ok_or_else(|| Error::Parse("missing `field:` header".into()))?;
    Ok(PolynomialFile {
        field,
        polynomials,
        provenance,
    })
}

pub fn parse_polynomial(s: &str) -> Result<RawPolynomial> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let bytes = s.as_bytes();
    for k in 0..bytes.len() {
        match bytes[k] {
            b'[' => depth += 1,
            b']' => depth -= 1,
            b'+' | b'-' if depth == 0 && k > start => {
                terms.push(parse_term(&s[start..k])?);
                start = k;
            }
            _ => {}
        }
    }
    terms.push(parse_term(&s[start..])?);
    let terms: Vec<_> = terms.into_iter().filter(|t| !t.0.is_zero()).collect();
    Ok(RawPolynomial { terms })
}

fn parse_term(s: &str) -> Result<(BigRational, Vec<(VariableId, u32)>)> {
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    if body.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    let mut coeff = BigRational::one();
    let mut vars = Vec::new();
    for factor in split_factors(body) {
        if factor.starts_with('x') {
            vars.push(parse_power(factor)?);
        } else {
            coeff *= parse_rational(factor)?;
        }
    }
    if neg {
        coeff = -coeff;
    }
    Ok((coeff, vars))
}

fn split_factors(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() || d.is_negative() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
    }
}

fn parse_power(s: &str) -> Result<(VariableId, u32)> {
    let (var, exp) = match s.split_once('^') {
        Some((v, e)) => (
            v,
            e.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?,
        ),
        None => (s, 1),
    };
    Ok((parse_variable(var)?, exp))
}

pub fn parse_variable(s: &str) -> Result<VariableId> {
    let bad = || Error::Parse(format!("bad variable `{s}`"));
    let inner = s.strip_prefix("x[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
    let parts: Vec<u16> = inner
        .split(',')
        .map(|p| p.trim().parse::<u16>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match parts.as_slice() {
        [q, i, j] if *q >= 1 && *i >= 1 && *j >= 1 => Ok(VariableId::new(*q, *i, *j)),
        _ => Err(bad()),
    }
}

/// Parses a single-term line as a monomial (used for monomial ideal files).
pub fn parse_monomial(ring: &Ring, s: &str) -> Result<Monomial> {
    let raw = parse_polynomial(s)?;
    match raw.terms.as_slice() {
        [(_, vars)] => ring.monomial_of(vars),
        _ => Err(Error::Parse(format!("expected a single term, got `{s}`"))),
    }
}
