//! Minor enumeration and generator sets with provenance.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::shape::{Orientation, Region};
use crate::algebra::text::format_file;
use crate::algebra::{Monomial, Polynomial, Ring, VariableId};
use crate::combinatorics::MonomialIdeal;
use crate::error::{Error, Result};

/// Where a generator came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Source {
    H,
    V,
    Input,
}

impl From<Orientation> for Source {
    fn from(o: Orientation) -> Self {
        match o {
            Orientation::H => Source::H,
            Orientation::V => Source::V,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Provenance {
    pub source: Source,
    /// Index of the Young diagram that produced the minor, when there is one.
    pub diagram: Option<usize>,
    pub size: u16,
    pub rows: Vec<u16>,
    pub cols: Vec<u16>,
}

impl Provenance {
    pub fn input(index: usize) -> Self {
        Provenance {
            source: Source::Input,
            diagram: None,
            size: 0,
            rows: vec![index as u16],
            cols: Vec::new(),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u16]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self.source {
            Source::Input => write!(f, "input #{}", self.rows.first().copied().unwrap_or(0)),
            s => {
                write!(
                    f,
                    "{s:?} size={} rows={} cols={}",
                    self.size,
                    join(&self.rows),
                    join(&self.cols)
                )?;
                if let Some(d) = self.diagram {
                    write!(f, " diagram={d}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub poly: Polynomial,
    pub provenance: Provenance,
    /// Product of the main-diagonal entries (absent for input polynomials).
    pub diagonal: Option<Monomial>,
}

/// A deduplicated, canonically ordered list of natural generators.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    ring: Arc<Ring>,
    pool: Vec<VariableId>,
    gens: Vec<Generator>,
    raw_count: usize,
}

impl GeneratorSet {
    /// Sorts by provenance and drops polynomials equal (up to a scalar) to an earlier one.
    pub fn from_generators(ring: &Arc<Ring>, pool: Vec<VariableId>, mut gens: Vec<Generator>) -> Self {
        let raw_count = gens.len();
        gens.sort_by(|a, b| a.provenance.cmp(&b.provenance));
        let mut seen: HashSet<Polynomial> = HashSet::with_capacity(gens.len());
        gens.retain(|g| !g.poly.is_zero() && seen.insert(g.poly.monic()));
        let mut pool = pool;
        pool.sort();
        pool.dedup();
        GeneratorSet {
            ring: ring.clone(),
            pool,
            gens,
            raw_count,
        }
    }

    /// Wraps arbitrary polynomials (e.g. read from a file).
    pub fn from_polynomials(ring: &Arc<Ring>, pool: Vec<VariableId>, polys: Vec<Polynomial>) -> Self {
        let gens = polys
            .into_iter()
            .enumerate()
            .map(|(k, poly)| Generator {
                poly,
                provenance: Provenance::input(k),
                diagonal: None,
            })
            .collect();
        GeneratorSet::from_generators(ring, pool, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Same generators over a different ambient variable set.
    pub fn with_pool(mut self, pool: Vec<VariableId>) -> Self {
        let mut pool = pool;
        pool.sort();
        pool.dedup();
        self.pool = pool;
        self
    }

    /// Ambient variables of the ideal.
    pub fn pool(&self) -> &[VariableId] {
        &self.pool
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.gens.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Number of generators before deduplication.
    pub fn raw_count(&self) -> usize {
        self.raw_count
    }

    pub fn union(&self, other: &GeneratorSet) -> GeneratorSet {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        let mut pool = self.pool.clone();
        pool.extend_from_slice(&other.pool);
        let mut out = GeneratorSet::from_generators(&self.ring, pool, gens);
        out.raw_count = self.raw_count + other.raw_count;
        out
    }

    pub fn to_text(&self) -> String {
        let polys = self.polynomials();
        let prov: Vec<Option<String>> = self.gens.iter().map(|g| Some(g.provenance.to_string())).collect();
        format_file(self.ring.field(), &polys, &prov)
    }
}

/// A generator whose leading term differs from its main diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalWitness {
    pub index: usize,
    pub leading: Monomial,
    pub diagonal: Monomial,
}

/// Checks that every minor's leading monomial is its main diagonal.
pub fn verify_diagonal_order(gens: &GeneratorSet) -> std::result::Result<(), DiagonalWitness> {
    for (index, g) in gens.gens.iter().enumerate() {
        if let (Some(d), Some(lm)) = (&g.diagonal, g.poly.leading_monomial()) {
            if d != lm {
                return Err(DiagonalWitness {
                    index,
                    leading: lm.clone(),
                    diagonal: d.clone(),
                });
            }
        }
    }
    Ok(())
}

fn ambient_indices(gens: &GeneratorSet) -> Vec<u32> {
    gens.pool
        .iter()
        .map(|&v| gens.ring.index_of(v).expect("pool variables belong to the ring"))
        .collect()
}

/// Monomial ideal of the main diagonals (leading terms for input polynomials).
pub fn diagonal_monomials(gens: &GeneratorSet) -> MonomialIdeal {
    let monos = gens
        .gens
        .iter()
        .filter_map(|g| g.diagonal.clone().or_else(|| g.poly.leading_monomial().cloned()))
        .collect();
    MonomialIdeal::new(ambient_indices(gens), monos).expect("generators live in the pool")
}

/// Monomial ideal of the leading terms under the ring's order.
pub fn leading_monomial_ideal(gens: &GeneratorSet) -> MonomialIdeal {
    let monos = gens
        .gens
        .iter()
        .filter_map(|g| g.poly.leading_monomial().cloned())
        .collect();
    MonomialIdeal::new(ambient_indices(gens), monos).expect("generators live in the pool")
}

fn bits(mask: u64) -> impl Iterator<Item = u16> {
    (0..64u16).filter(move |&b| mask >> b & 1 == 1)
}

/// All `k`-element submasks of `mask`, in lexicographic order of the chosen positions.
fn k_subsets(mask: u64, k: usize) -> Vec<u64> {
    let positions: Vec<u16> = bits(mask).collect();
    let n = positions.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &p| m | 1u64 << positions[p]));
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone)]
struct DetCtx<'a> {
    region: &'a Region,
    ring: &'a Arc<Ring>,
    vars: Vec<Option<u32>>,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl<'a> DetCtx<'a> {
    fn new(region: &'a Region, ring: &'a Arc<Ring>) -> Result<Self> {
        let mut vars = Vec::with_capacity(region.rows() as usize * region.cols() as usize);
        for i in 1..=region.rows() {
            for j in 1..=region.cols() {
                vars.push(match region.entry(i, j) {
                    Some(v) => Some(ring.index_of(v)?),
                    None => None,
                });
            }
        }
        Ok(DetCtx {
            region,
            ring,
            vars,
            memo: HashMap::new(),
        })
    }

    fn var(&self, row_bit: u16, col_bit: u16) -> Option<u32> {
        self.vars[row_bit as usize * self.region.cols() as usize + col_bit as usize]
    }

    /// Determinant of the submatrix on the given row/column bitmasks
    /// (bit `b` means row/column `b+1`).
    fn det(&mut self, rows: u64, cols: u64) -> Polynomial {
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let field = self.ring.field();
        let r0 = rows.trailing_zeros() as u16;
        let rest = rows & !(1u64 << r0);
        let mut acc = Polynomial::zero(self.ring);
        for (k, c) in bits(cols).enumerate() {
            let Some(v) = self.var(r0, c) else { continue };
            let sign = if k % 2 == 0 {
                field.one()
            } else {
                field.neg(&field.one())
            };
            let m = Monomial::var(v);
            if rest == 0 {
                acc = acc.add_scaled(&sign, &m, &Polynomial::constant(self.ring, field.one()));
            } else {
                let sub = self.det(rest, cols & !(1u64 << c));
                acc = acc.add_scaled(&sign, &m, &sub);
            }
        }
        if rest != 0 {
            self.memo.insert((rows, cols), acc.clone());
        }
        acc
    }

    fn diagonal(&self, rows: u64, cols: u64) -> Monomial {
        Monomial::from_support(
            bits(rows)
                .zip(bits(cols))
                .map(|(r, c)| self.var(r, c).expect("minor inside mask")),
        )
    }
}

/// Determinant of the submatrix of `region` on the given 1-based rows and columns.
pub fn minor_determinant(region: &Region, ring: &Arc<Ring>, rows: &[u16], cols: &[u16]) -> Result<Polynomial> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(Error::InvalidParameters(
            "a minor needs equally many rows and columns".into(),
        ));
    }
    let to_mask = |v: &[u16], lim: u16| -> Result<u64> {
        let mut m = 0u64;
        for &x in v {
            if x == 0 || x > lim || m >> (x - 1) & 1 == 1 {
                return Err(Error::InvalidParameters(format!("index {x} out of range or repeated")));
            }
            m |= 1u64 << (x - 1);
        }
        Ok(m)
    };
    let rm = to_mask(rows, region.rows())?;
    let cm = to_mask(cols, region.cols())?;
    for r in bits(rm) {
        if region.row_mask(r + 1) & cm != cm {
            return Err(Error::DiagramBounds("submatrix leaves the region".into()));
        }
    }
    Ok(DetCtx::new(region, ring)?.det(rm, cm))
}

fn to_list(mask: u64) -> Vec<u16> {
    bits(mask).map(|b| b + 1).collect()
}

/// Every `size`-minor of `region` whose submatrix lies entirely inside the mask.
pub fn region_minors(region: &Region, ring: &Arc<Ring>, size: usize, diagram: Option<usize>) -> Result<Vec<Generator>> {
    if size == 0 {
        return Err(Error::InvalidParameters("minor size must be at least 1".into()));
    }
    let row_masks: Vec<u64> = (1..=region.rows()).map(|i| region.row_mask(i)).collect();
    let live_rows = row_masks
        .iter()
        .enumerate()
        .filter(|(_, m)| m.count_ones() as usize >= size)
        .fold(0u64, |acc, (i, _)| acc | 1u64 << i);
    let row_sets = k_subsets(live_rows, size);
    let base = DetCtx::new(region, ring)?;
    let chunks: Vec<Vec<Generator>> = row_sets
        .par_iter()
        .map(|&rs| {
            let mut ctx = base.clone();
            let allowed = bits(rs).fold(u64::MAX, |acc, r| acc & row_masks[r as usize]);
            k_subsets(allowed, size)
                .into_iter()
                .map(|cs| Generator {
                    poly: ctx.det(rs, cs),
                    provenance: Provenance {
                        source: region.orientation.into(),
                        diagram,
                        size: size as u16,
                        rows: to_list(rs),
                        cols: to_list(cs),
                    },
                    diagonal: Some(ctx.diagonal(rs, cs)),
                })
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// The `size`-minors of a region as a generator set over the region's variables.
pub fn enumerate_minors(region: &Region, ring: &Arc<Ring>, size: usize) -> Result<GeneratorSet> {
    let gens = region_minors(region, ring, size, None)?;
    Ok(GeneratorSet::from_generators(ring, region.variables().collect(), gens))
}

/// Determinant of δ's submatrix bordered by one extra row and column through `cell`.
pub fn augment_minor(region: &Region, ring: &Arc<Ring>, delta: &Provenance, cell: (u16, u16)) -> Result<Polynomial> {
    let (ci, cj) = cell;
    let below = delta.rows.iter().all(|&r| r < ci);
    let right = delta.cols.iter().all(|&c| c < cj);
    if !below || !right {
        return Err(Error::NotSoutheast(format!(
            "cell ({ci},{cj}) vs rows {:?} cols {:?}",
            delta.rows, delta.cols
        )));
    }
    let mut rows = delta.rows.clone();
    rows.push(ci);
    let mut cols = delta.cols.clone();
    cols.push(cj);
    minor_determinant(region, ring, &rows, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, TermOrder};
    use crate::ideals::shape::{build_region, BlockMatrixShape};

    fn setup(m: u16, n: u16, r: u16) -> (BlockMatrixShape, Arc<Ring>) {
        let shape = BlockMatrixShape::new(m, n, r).unwrap();
        let ring = Arc::new(Ring::new(Field::Rationals, TermOrder::v_reading(&shape.pool())));
        (shape, ring)
    }

    #[test]
    fn subsets_are_counted_correctly() {
        assert_eq!(k_subsets(0b1111, 2).len(), 6);
        assert_eq!(k_subsets(0b1011, 3), vec![0b1011]);
        assert!(k_subsets(0b1, 2).is_empty());
    }

    #[test]
    fn two_by_two_determinant() {
        let (shape, ring) = setup(2, 2, 1);
        let h = build_region(shape, Orientation::H, None).unwrap();
        let set = enumerate_minors(&h, &ring, 2).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(
            set.generators()[0].poly.to_string(),
            "x[1,1,1]*x[1,2,2]-x[1,1,2]*x[1,2,1]"
        );
    }

    #[test]
    fn full_h_has_six_two_minors() {
        let (shape, ring) = setup(2, 2, 2);
        let h = build_region(shape, Orientation::H, None).unwrap();
        assert_eq!(enumerate_minors(&h, &ring, 2).unwrap().len(), 6);
    }

    #[test]
    fn single_row_region_has_no_two_minors() {
        let (shape, ring) = setup(1, 3, 1);
        let h = build_region(shape, Orientation::H, None).unwrap();
        assert!(enumerate_minors(&h, &ring, 2).unwrap().is_empty());
    }

    #[test]
    fn three_by_three_determinant_has_six_terms() {
        let (shape, ring) = setup(3, 3, 1);
        let h = build_region(shape, Orientation::H, None).unwrap();
        let set = enumerate_minors(&h, &ring, 3).unwrap();
        assert_eq!(set.generators()[0].poly.len(), 6);
        assert!(verify_diagonal_order(&set).is_ok());
    }

    #[test]
    fn augment_two_by_two() {
        let (shape, ring) = setup(2, 2, 2);
        let h = build_region(shape, Orientation::H, None).unwrap();
        let delta = Provenance {
            source: Source::H,
            diagram: None,
            size: 1,
            rows: vec![1],
            cols: vec![1],
        };
        let p = augment_minor(&h, &ring, &delta, (2, 4)).unwrap();
        assert_eq!(p.to_string(), "x[1,1,1]*x[2,2,2]-x[1,2,1]*x[2,1,2]");
        assert!(matches!(
            augment_minor(&h, &ring, &delta, (1, 4)),
            Err(Error::NotSoutheast(_))
        ));
    }

    #[test]
    fn diagonal_of_single_minor() {
        let (shape, ring) = setup(2, 2, 1);
        let h = build_region(shape, Orientation::H, None).unwrap();
        let set = enumerate_minors(&h, &ring, 2).unwrap();
        let d = diagonal_monomials(&set);
        assert_eq!(d.display(&ring).to_string(), "(x[1,1,1]*x[1,2,2])");
        let empty = GeneratorSet::from_generators(&ring, shape.pool(), Vec::new());
        assert!(diagonal_monomials(&empty).is_zero());
    }

    #[test]
    fn dedup_keeps_first_provenance() {
        let (shape, ring) = setup(2, 2, 1);
        let h = build_region(shape, Orientation::H, None).unwrap();
        let v = build_region(shape, Orientation::V, None).unwrap();
        let mut gens = region_minors(&h, &ring, 2, None).unwrap();
        gens.extend(region_minors(&v, &ring, 2, None).unwrap());
        let set = GeneratorSet::from_generators(&ring, shape.pool(), gens);
        assert_eq!(set.raw_count(), 2);
        assert_eq!(set.len(), 1);
        assert_eq!(set.generators()[0].provenance.source, Source::H);
    }
}
