//! Simplicial complexes stored by their minimal nonfaces.
//!
//! Vertices are ring variable indices; internally a face is a `u128` bitmask
//! over the position of each vertex in `vertices`.

use super::ideal::MonomialIdeal;
use crate::algebra::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    nonfaces: Vec<u128>,
}

fn minimal_masks(mut sets: Vec<u128>) -> Vec<u128> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u128> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&t| t & !s == 0) {
            out.push(s);
        }
    }
    out
}

fn bits(mask: u128) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Stanley–Reisner complex of a squarefree monomial ideal.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let sets: Vec<Vec<u32>> = ideal.generators().iter().map(|g| g.support().collect()).collect();
    SimplicialComplex::from_nonfaces(ideal.ambient().to_vec(), &sets)
}

impl SimplicialComplex {
    pub fn from_nonfaces(mut vertices: Vec<u32>, nonfaces: &[Vec<u32>]) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() > 128 {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let mut masks = Vec::with_capacity(nonfaces.len());
        for nf in nonfaces {
            let mut m = 0u128;
            for v in nf {
                let pos = vertices
                    .binary_search(v)
                    .map_err(|_| Error::InvalidParameters(format!("nonface vertex #{v} is not a vertex")))?;
                m |= 1u128 << pos;
            }
            masks.push(m);
        }
        Ok(SimplicialComplex {
            vertices,
            nonfaces: minimal_masks(masks),
        })
    }

    /// The complex whose facets are the given sets.
    pub fn from_facets(mut vertices: Vec<u32>, facets: &[Vec<u32>]) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() > 20 {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let n = vertices.len();
        let masks: Vec<u128> = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| vertices.binary_search(v).map(|p| 1u128 << p))
                    .sum::<std::result::Result<u128, usize>>()
                    .map_err(|_| Error::InvalidParameters("facet vertex is not a vertex".into()))
            })
            .collect::<Result<_>>()?;
        let is_face = |s: u128| masks.iter().any(|&f| s & !f == 0);
        let nonfaces: Vec<u128> = (0..1u128 << n)
            .filter(|&s| !is_face(s) && bits(s).all(|b| is_face(s & !(1u128 << b))))
            .collect();
        Ok(SimplicialComplex {
            vertices,
            nonfaces: minimal_masks(nonfaces),
        })
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn nonface_masks(&self) -> &[u128] {
        &self.nonfaces
    }

    fn to_vars(&self, mask: u128) -> Vec<u32> {
        bits(mask).map(|b| self.vertices[b]).collect()
    }

    pub fn minimal_nonfaces(&self) -> Vec<Vec<u32>> {
        self.nonfaces.iter().map(|&m| self.to_vars(m)).collect()
    }

    /// Stanley–Reisner ideal.
    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self
            .nonfaces
            .iter()
            .map(|&m| Monomial::from_support(self.to_vars(m)))
            .collect();
        MonomialIdeal::new(self.vertices.clone(), gens).expect("vertices are the ambient")
    }

    /// The void complex has no faces at all (its ideal is the unit ideal).
    pub fn is_void(&self) -> bool {
        self.nonfaces.first() == Some(&0)
    }

    pub fn is_face_mask(&self, f: u128) -> bool {
        !self.nonfaces.iter().any(|&n| n & !f == 0)
    }

    pub fn is_face(&self, face: &[u32]) -> bool {
        let mut m = 0u128;
        for v in face {
            match self.vertices.binary_search(v) {
                Ok(p) => m |= 1u128 << p,
                Err(_) => return false,
            }
        }
        self.is_face_mask(m)
    }

    fn position(&self, v: u32) -> Result<usize> {
        self.vertices
            .binary_search(&v)
            .map_err(|_| Error::InvalidParameters(format!("#{v} is not a vertex")))
    }

    /// Removes position `p` from every mask, shifting higher bits down.
    fn squeeze(mask: u128, p: usize) -> u128 {
        let low = mask & ((1u128 << p) - 1);
        let high = if p + 1 >= 128 { 0 } else { (mask >> (p + 1)) << p };
        low | high
    }

    /// `lk(v)` on the vertex set without `v`; its ideal is `(I : v)`.
    pub fn link(&self, v: u32) -> Result<SimplicialComplex> {
        let p = self.position(v)?;
        let bit = 1u128 << p;
        let masks = self.nonfaces.iter().map(|&n| Self::squeeze(n & !bit, p)).collect();
        let mut vertices = self.vertices.clone();
        vertices.remove(p);
        Ok(SimplicialComplex {
            vertices,
            nonfaces: minimal_masks(masks),
        })
    }

    /// `Δ - {v}` on the vertex set without `v`.
    pub fn deletion(&self, v: u32) -> Result<SimplicialComplex> {
        let p = self.position(v)?;
        let bit = 1u128 << p;
        let masks = self
            .nonfaces
            .iter()
            .filter(|&&n| n & bit == 0)
            .map(|&n| Self::squeeze(n, p))
            .collect();
        let mut vertices = self.vertices.clone();
        vertices.remove(p);
        Ok(SimplicialComplex {
            vertices,
            nonfaces: minimal_masks(masks),
        })
    }

    /// Facet bitmasks, in lexicographic order of the search.
    pub fn facet_masks(&self) -> Vec<u128> {
        if self.is_void() {
            return Vec::new();
        }
        let mut search = FacetSearch::new(self);
        search.run(0, 0, 0);
        search.out
    }

    pub fn facets(&self) -> Vec<Vec<u32>> {
        self.facet_masks().into_iter().map(|m| self.to_vars(m)).collect()
    }

    /// Largest facet size (−1 would be the void complex; reported as `None`).
    pub fn max_facet_size(&self) -> Option<usize> {
        if self.is_void() {
            return None;
        }
        Some(max_independent_set(self))
    }

    /// Krull dimension of the Stanley–Reisner ring (= largest facet size).
    pub fn krull_dim(&self) -> usize {
        self.max_facet_size().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let f = self.facet_masks();
        f.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }
}

struct FacetSearch<'a> {
    c: &'a SimplicialComplex,
    /// Nonfaces containing each vertex position.
    by_vertex: Vec<Vec<u128>>,
    n: usize,
    out: Vec<u128>,
}

impl<'a> FacetSearch<'a> {
    fn new(c: &'a SimplicialComplex) -> Self {
        let n = c.vertices.len();
        let by_vertex = (0..n)
            .map(|p| c.nonfaces.iter().copied().filter(|&m| m >> p & 1 == 1).collect())
            .collect();
        FacetSearch {
            c,
            by_vertex,
            n,
            out: Vec::new(),
        }
    }

    /// Can excluded vertex `p` still be blocked, given which vertices are already excluded?
    fn blockable(&self, p: usize, excluded: u128) -> bool {
        let bit = 1u128 << p;
        self.by_vertex[p].iter().any(|&m| (m & !bit) & excluded == 0)
    }

    fn run(&mut self, k: usize, included: u128, excluded: u128) {
        if k == self.n {
            self.out.push(included);
            return;
        }
        let bit = 1u128 << k;
        let with = included | bit;
        if self.c.is_face_mask(with) {
            self.run(k + 1, with, excluded);
        }
        let ex = excluded | bit;
        // every excluded vertex must keep a nonface made of itself plus
        // vertices that are included or still undecided
        if bits(ex).all(|p| self.blockable(p, ex)) {
            self.run(k + 1, included, ex);
        }
    }
}

/// Branch and bound for the largest face.
fn max_independent_set(c: &SimplicialComplex) -> usize {
    let n = c.vertices.len();
    // greedy lower bound
    let mut greedy = 0u128;
    for p in 0..n {
        if c.is_face_mask(greedy | 1u128 << p) {
            greedy |= 1u128 << p;
        }
    }
    let mut best = greedy.count_ones() as usize;
    fn rec(c: &SimplicialComplex, n: usize, k: usize, included: u128, best: &mut usize) {
        let size = included.count_ones() as usize;
        if size + (n - k) <= *best {
            return;
        }
        if k == n {
            *best = size;
            return;
        }
        let with = included | 1u128 << k;
        if c.is_face_mask(with) {
            rec(c, n, k + 1, with, best);
        }
        rec(c, n, k + 1, included, best);
    }
    rec(c, n, 0, 0, &mut best);
    best
}

/// `dim R/I`, via the Stanley–Reisner complex of the radical.
pub fn krull_dim(ideal: &MonomialIdeal) -> Result<usize> {
    let c = stanley_reisner(&ideal.radical())?;
    Ok(c.krull_dim())
}

/// `#variables - dim R/I`.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.ambient().len() - krull_dim(ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(vs: &[u32], nf: &[&[u32]]) -> SimplicialComplex {
        let nf: Vec<Vec<u32>> = nf.iter().map(|s| s.to_vec()).collect();
        SimplicialComplex::from_nonfaces(vs.to_vec(), &nf).unwrap()
    }

    #[test]
    fn edge_nonface() {
        let c = cx(&[0, 1, 2], &[&[0, 1]]);
        assert_eq!(c.facets(), vec![vec![0, 2], vec![1, 2]]);
        assert_eq!(c.krull_dim(), 2);
    }

    #[test]
    fn zero_ideal_is_a_simplex() {
        let c = cx(&[0, 1, 2, 3], &[]);
        assert_eq!(c.facets(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(c.krull_dim(), 4);
    }

    #[test]
    fn variables_have_height_k() {
        let i = MonomialIdeal::new((0..6).collect(), (0..3).map(Monomial::var).collect()).unwrap();
        assert_eq!(height(&i).unwrap(), 3);
    }

    #[test]
    fn link_and_deletion_of_path() {
        // facets {0,2},{1,2}
        let c = cx(&[0, 1, 2], &[&[0, 1]]);
        let l = c.link(2).unwrap();
        assert_eq!(l.facets(), vec![vec![0], vec![1]]);
        let d = c.deletion(2).unwrap();
        assert_eq!(d.facets(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn link_of_missing_vertex_is_void() {
        let c = cx(&[0, 1], &[&[0]]);
        assert!(c.link(0).unwrap().is_void());
        assert!(c.link(0).unwrap().facets().is_empty());
    }

    #[test]
    fn facets_round_trip() {
        let f = vec![vec![0, 1, 2], vec![2, 3], vec![3, 4]];
        let c = SimplicialComplex::from_facets((0..5).collect(), &f).unwrap();
        assert_eq!(c.facets(), f);
        assert!(!c.is_pure());
    }

    #[test]
    fn non_squarefree_is_rejected() {
        let i = MonomialIdeal::new(vec![0], vec![Monomial::var_pow(0, 2)]).unwrap();
        assert!(matches!(stanley_reisner(&i), Err(Error::NotSquarefree)));
        assert_eq!(krull_dim(&i).unwrap(), 0);
    }
}
