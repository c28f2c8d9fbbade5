//! The ideal families: plain double determinantal, the (k,ℓ,a,b) families on
//! extended X|Y matrices, and Young-diagram families.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::minors::{region_minors, GeneratorSet};
use super::shape::{build_region, BlockMatrixShape, Orientation, Region, YoungDiagram};
use crate::algebra::{Ring, VariableId};
use crate::error::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// s-minors of H together with t-minors of V.
pub fn double_det_generators(ring: &Arc<Ring>, shape: BlockMatrixShape, s: u16, t: u16) -> Result<GeneratorSet> {
    if s < 1 || s > shape.m || t < 1 || t > shape.n {
        return Err(bad(format!(
            "need 1 <= s <= {} and 1 <= t <= {}, got s={s}, t={t}",
            shape.m, shape.n
        )));
    }
    let h = build_region(shape, Orientation::H, None)?;
    let v = build_region(shape, Orientation::V, None)?;
    let mut gens = region_minors(&h, ring, s as usize, None)?;
    gens.extend(region_minors(&v, ring, t as usize, None)?);
    Ok(GeneratorSet::from_generators(ring, shape.pool(), gens))
}

/// Parameters of the two-block family built from `H^{m,n}_{k,a}` and `V^{m,n}_{ℓ,b}`.
///
/// Block 1 plays the role of X (with `k` extra columns and `ℓ` extra rows) and
/// block 2 the role of Y (with `a` columns and `b` rows deleted).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SectionThreeFamily {
    pub m: u16,
    pub n: u16,
    pub k: u16,
    pub l: u16,
    pub a: u16,
    pub b: i32,
}

impl SectionThreeFamily {
    /// Validates the full parameter constraints.
    pub fn new(m: u16, n: u16, k: u16, l: u16, a: u16, b: i32) -> Result<Self> {
        let fam = SectionThreeFamily { m, n, k, l, a, b };
        fam.validate()?;
        Ok(fam)
    }

    /// Only checks that both matrices are well formed. Induction steps produce
    /// such parameter sets outside the validated range.
    pub fn structural(m: u16, n: u16, k: u16, l: u16, a: u16, b: i32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(bad("m and n must be positive"));
        }
        if a > n {
            return Err(bad(format!("a={a} exceeds n={n}")));
        }
        if b > m as i32 {
            return Err(bad(format!("b={b} exceeds m={m}")));
        }
        if n as u32 + k as u32 + (n - a) as u32 > 64 || (2 * m as i32 + l as i32 - b) > 64 {
            return Err(bad("matrices are limited to 64 rows/cols"));
        }
        Ok(SectionThreeFamily { m, n, k, l, a, b })
    }

    pub fn validate(&self) -> Result<()> {
        let &SectionThreeFamily { m, n, k, l, a, b } = self;
        SectionThreeFamily::structural(m, n, k, l, a, b)?;
        let (m_, k_, l_) = (m as i32, k as i32, l as i32);
        if !(k <= l && l_ <= k_ + m_ - 2) {
            return Err(bad(format!("need 0 <= k <= l <= k+m-2, got k={k}, l={l}, m={m}")));
        }
        if !(-m_ + 2 <= b && b <= m_ - 1) {
            return Err(bad(format!("need -m+2 <= b <= m-1, got b={b}, m={m}")));
        }
        if a == 0 && !(k == l && b == 0) {
            return Err(bad("a = 0 requires k = l and b = 0"));
        }
        if a > 0 && b != 1 - (l_ - k_) {
            return Err(bad(format!("a > 0 requires b = 1-(l-k) = {}", 1 - (l_ - k_))));
        }
        Ok(())
    }

    pub fn x(i: u16, j: u16) -> VariableId {
        VariableId::new(1, i, j)
    }

    pub fn y(i: u16, j: u16) -> VariableId {
        VariableId::new(2, i, j)
    }

    /// `m x (n+k + n-a)`: X with k extra columns, then the first n-a columns of Y.
    pub fn h_region(&self) -> Region {
        let xc = self.n + self.k;
        let cols = xc + (self.n - self.a);
        let mut cells = Vec::new();
        for i in 1..=self.m {
            for c in 1..=cols {
                cells.push(Some(if c <= xc { Self::x(i, c) } else { Self::y(i, c - xc) }));
            }
        }
        Region::from_grid(Orientation::H, self.m, cols, cells).expect("dimensions checked on construction")
    }

    /// `(m+ℓ + m-b) x n`: X with ℓ extra rows, then the first m-b rows of Y.
    pub fn v_region(&self) -> Region {
        let xr = self.m + self.l;
        let rows = (xr as i32 + self.m as i32 - self.b) as u16;
        let mut cells = Vec::new();
        for i in 1..=rows {
            for j in 1..=self.n {
                cells.push(Some(if i <= xr { Self::x(i, j) } else { Self::y(i - xr, j) }));
            }
        }
        Region::from_grid(Orientation::V, rows, self.n, cells).expect("dimensions checked on construction")
    }

    /// Variables appearing in at least one of the two matrices.
    pub fn pool(&self) -> Vec<VariableId> {
        let mut v: Vec<VariableId> = self.h_region().variables().chain(self.v_region().variables()).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for SectionThreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I_{{{},{},{},{}}}({},{})",
            self.k, self.l, self.a, self.b, self.m, self.n
        )
    }
}

/// m-minors of `H^{m,n}_{k,a}` and n-minors of `V^{m,n}_{ℓ,b}`.
pub fn s3_family_generators(ring: &Arc<Ring>, fam: &SectionThreeFamily) -> Result<GeneratorSet> {
    let mut gens = region_minors(&fam.h_region(), ring, fam.m as usize, None)?;
    gens.extend(region_minors(&fam.v_region(), ring, fam.n as usize, None)?);
    Ok(GeneratorSet::from_generators(ring, fam.pool(), gens))
}

/// A nested list of Young diagrams laid over H, each with its own minor size,
/// paired with diagrams laid over V that cover the same Y-cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramFamily {
    pub shape: BlockMatrixShape,
    pub s: u16,
    pub t: u16,
    pub diagrams: Vec<YoungDiagram>,
    pub v_diagrams: Vec<YoungDiagram>,
}

impl DiagramFamily {
    /// V-side diagrams default to `hat_diagram` of each H diagram.
    pub fn new(shape: BlockMatrixShape, s: u16, t: u16, diagrams: Vec<YoungDiagram>) -> Result<Self> {
        let v_diagrams = diagrams
            .iter()
            .map(|d| hat_diagram(d, shape))
            .collect::<Result<Vec<_>>>()?;
        DiagramFamily::with_v_diagrams(shape, s, t, diagrams, v_diagrams)
    }

    pub fn with_v_diagrams(
        shape: BlockMatrixShape,
        s: u16,
        t: u16,
        diagrams: Vec<YoungDiagram>,
        v_diagrams: Vec<YoungDiagram>,
    ) -> Result<Self> {
        let fam = DiagramFamily {
            shape,
            s,
            t,
            diagrams,
            v_diagrams,
        };
        fam.validate()?;
        Ok(fam)
    }

    /// The family whose only diagram is all of H.
    pub fn full(shape: BlockMatrixShape, s: u16, t: u16) -> Result<Self> {
        let d = YoungDiagram::rectangle(shape.m, shape.r * shape.n);
        DiagramFamily::new(shape, s, t, vec![d])
    }

    pub fn k(&self) -> usize {
        self.diagrams.len()
    }

    /// Columns of H before the Y block.
    pub fn y_offset(&self) -> u16 {
        (self.shape.r - 1) * self.shape.n
    }

    /// Rows of V before the Y block.
    pub fn v_y_offset(&self) -> u16 {
        (self.shape.r - 1) * self.shape.m
    }

    /// True when every V diagram is the hat of its H diagram.
    pub fn has_hat_v_diagrams(&self) -> bool {
        self.diagrams
            .iter()
            .zip(&self.v_diagrams)
            .all(|(d, v)| hat_diagram(d, self.shape).map_or(false, |h| &h == v))
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(bad("a diagram family needs at least one diagram"));
        }
        if k > self.s as usize || k > self.t as usize {
            return Err(bad(format!("k={k} exceeds min(s,t)")));
        }
        let (m, rn) = (self.shape.m, self.shape.r * self.shape.n);
        let lo = self.y_offset();
        for (i, d) in self.diagrams.iter().enumerate() {
            if d.num_rows() > m {
                return Err(Error::DiagramBounds(format!("diagram {i} has more than m={m} rows")));
            }
            if d.parts().iter().any(|&p| p < lo || p > rn) {
                return Err(Error::DiagramBounds(format!(
                    "diagram {i} = {d} has a part outside [{lo},{rn}]"
                )));
            }
            if i > 0 && !d.is_subset(&self.diagrams[i - 1]) {
                return Err(bad(format!("diagram {i} is not contained in diagram {}", i - 1)));
            }
        }
        for alpha in 1..k {
            for (i, c) in self.diagrams[alpha].corners() {
                if c > lo && self.diagrams[alpha - 1].contains(i + 1, c + 1) {
                    return Err(bad(format!(
                        "corner ({i},{c}) of diagram {alpha} is interior to diagram {}",
                        alpha - 1
                    )));
                }
            }
        }
        if self.v_diagrams.len() != k {
            return Err(bad(format!("{} V diagrams for {k} H diagrams", self.v_diagrams.len())));
        }
        let (rm, n, off) = (self.shape.r * m, self.shape.n, self.v_y_offset());
        for (i, (d, v)) in self.diagrams.iter().zip(&self.v_diagrams).enumerate() {
            if v.num_rows() > rm || v.part(1) > n {
                return Err(Error::DiagramBounds(format!("V diagram {i} = {v} does not fit in V")));
            }
            if i > 0 && !v.is_subset(&self.v_diagrams[i - 1]) {
                return Err(bad(format!("V diagram {i} is not contained in V diagram {}", i - 1)));
            }
            if let Some(row) = (1..=m).find(|&row| v.part(off + row) != d.part(row).saturating_sub(lo)) {
                return Err(bad(format!("diagram {i} and its V diagram disagree on Y-row {row}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for DiagramFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.diagrams.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "(m={},n={},r={},s={},t={}) [{}]",
            self.shape.m,
            self.shape.n,
            self.shape.r,
            self.s,
            self.t,
            ds.join(" ⊇ ")
        )?;
        if !self.has_hat_v_diagrams() {
            let vs: Vec<String> = self.v_diagrams.iter().map(|d| d.to_string()).collect();
            write!(f, " V[{}]", vs.join(" ⊇ "))?;
        }
        Ok(())
    }
}

/// The V-side diagram matching `d`: the first `(r-1)m` rows of V get the full
/// Y-width of `d`, and the rows of block r follow the Y-widths of `d` row by row.
pub fn hat_diagram(d: &YoungDiagram, shape: BlockMatrixShape) -> Result<YoungDiagram> {
    let lo = (shape.r - 1) * shape.n;
    let hi = shape.r * shape.n;
    if let Some(&p) = d.parts().iter().find(|&&p| p < lo || p > hi) {
        return Err(Error::DiagramBounds(format!("part {p} outside [{lo},{hi}]")));
    }
    if d.is_empty() {
        return Ok(YoungDiagram::empty());
    }
    let lead = (shape.r - 1) * shape.m;
    let mut parts = vec![d.part(1) - lo; lead as usize];
    parts.extend(d.parts().iter().map(|&p| p - lo));
    YoungDiagram::new(parts)
}

/// For each diagram index i: (s-i)-minors of H inside λ^i and (t-i)-minors of
/// V inside the matching V diagram.
pub fn lambda_family_generators(ring: &Arc<Ring>, fam: &DiagramFamily) -> Result<GeneratorSet> {
    fam.validate()?;
    let mut gens = Vec::new();
    for (i, (d, vd)) in fam.diagrams.iter().zip(&fam.v_diagrams).enumerate() {
        let (hs, vs) = (fam.s as usize - i, fam.t as usize - i);
        let h = build_region(fam.shape, Orientation::H, Some(d))?;
        gens.extend(region_minors(&h, ring, hs, Some(i))?);
        let v = build_region(fam.shape, Orientation::V, Some(vd))?;
        gens.extend(region_minors(&v, ring, vs, Some(i))?);
    }
    Ok(GeneratorSet::from_generators(ring, fam.shape.pool(), gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, TermOrder};
    use crate::ideals::minors::verify_diagonal_order;

    fn ring_for(pool: &[VariableId]) -> Arc<Ring> {
        Arc::new(Ring::new(Field::prime(32003).unwrap(), TermOrder::v_reading(pool)))
    }

    fn yd(parts: &[u16]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn two_two_two_has_ten_generators() {
        let shape = BlockMatrixShape::new(2, 2, 2).unwrap();
        let ring = ring_for(&shape.pool());
        let g = double_det_generators(&ring, shape, 2, 2).unwrap();
        assert_eq!(g.raw_count(), 12);
        assert_eq!(g.len(), 10);
        assert!(verify_diagonal_order(&g).is_ok());
    }

    #[test]
    fn linear_generators_for_single_entries() {
        let shape = BlockMatrixShape::new(1, 1, 2).unwrap();
        let ring = ring_for(&shape.pool());
        let g = double_det_generators(&ring, shape, 1, 1).unwrap();
        let text: Vec<String> = g.polynomials().iter().map(|p| p.to_string()).collect();
        assert_eq!(text, vec!["x[1,1,1]", "x[2,1,1]"]);
    }

    #[test]
    fn double_det_rejects_oversized_minors() {
        let shape = BlockMatrixShape::new(2, 2, 2).unwrap();
        let ring = ring_for(&shape.pool());
        assert!(double_det_generators(&ring, shape, 3, 2).is_err());
        assert!(double_det_generators(&ring, shape, 2, 0).is_err());
    }

    #[test]
    fn hat_examples() {
        let shape = BlockMatrixShape::new(5, 7, 2).unwrap();
        assert_eq!(
            hat_diagram(&yd(&[12, 12, 11, 11]), shape).unwrap().parts(),
            &[5, 5, 5, 5, 5, 5, 5, 4, 4]
        );
        assert_eq!(hat_diagram(&yd(&[12, 12]), shape).unwrap().parts(), &[5; 7]);
        assert!(hat_diagram(&yd(&[7, 7, 7]), shape).unwrap().is_empty());
        assert!(hat_diagram(&yd(&[6]), shape).is_err());
    }

    #[test]
    fn hat_of_full_diagram_is_full_v() {
        for (m, n, r) in [(2, 2, 2), (2, 3, 3), (3, 2, 3)] {
            let shape = BlockMatrixShape::new(m, n, r).unwrap();
            let full = YoungDiagram::rectangle(m, r * n);
            assert_eq!(hat_diagram(&full, shape).unwrap(), YoungDiagram::rectangle(r * m, n));
        }
    }

    #[test]
    fn full_family_matches_double_det() {
        for (m, n, r, s, t) in [(2, 2, 2, 2, 2), (2, 3, 3, 2, 2), (3, 3, 2, 2, 3)] {
            let shape = BlockMatrixShape::new(m, n, r).unwrap();
            let ring = ring_for(&shape.pool());
            let a = double_det_generators(&ring, shape, s, t).unwrap();
            let b = lambda_family_generators(&ring, &DiagramFamily::full(shape, s, t).unwrap()).unwrap();
            assert_eq!(a.polynomials(), b.polynomials());
        }
    }

    #[test]
    fn family_invariants_are_enforced() {
        let shape = BlockMatrixShape::new(5, 7, 2).unwrap();
        assert!(DiagramFamily::new(shape, 3, 4, vec![yd(&[12, 12, 11, 11]), yd(&[12, 12])]).is_ok());
        assert!(DiagramFamily::new(shape, 3, 4, vec![yd(&[12, 12]), yd(&[12, 12, 11])]).is_err());
        assert!(DiagramFamily::new(shape, 3, 4, vec![yd(&[12, 6])]).is_err());
        // corner (1,10) of the inner diagram sits inside the outer one
        assert!(DiagramFamily::new(shape, 3, 4, vec![yd(&[14, 14]), yd(&[10])]).is_err());
        assert!(DiagramFamily::new(shape, 1, 4, vec![yd(&[14]), yd(&[10])]).is_err());
    }

    #[test]
    fn example_family_generator_counts() {
        let shape = BlockMatrixShape::new(5, 7, 2).unwrap();
        let ring = ring_for(&shape.pool());
        let fam = DiagramFamily::new(shape, 3, 4, vec![yd(&[12, 12, 11, 11]), yd(&[12, 12])]).unwrap();
        let g = lambda_family_generators(&ring, &fam).unwrap();
        assert!(verify_diagonal_order(&g).is_ok());
        let count = |src: crate::ideals::Source, d: usize| {
            g.generators()
                .iter()
                .filter(|x| x.provenance.source == src && x.provenance.diagram == Some(d))
                .count()
        };
        // 3-minors inside (12,12,11,11): rows {1,2,x} choose cols <= 11 or 12, etc.
        assert!(count(crate::ideals::Source::H, 0) > 0);
        // 2-minors of a 2x12 rectangle
        assert_eq!(count(crate::ideals::Source::H, 1), 66);
        assert!(count(crate::ideals::Source::V, 0) > 0);
        // 3-minors of a 7x5 rectangle
        assert!(count(crate::ideals::Source::V, 1) > 0);
    }

    #[test]
    fn section_three_validation() {
        assert!(SectionThreeFamily::new(2, 2, 0, 0, 0, 0).is_ok());
        assert!(SectionThreeFamily::new(2, 2, 0, 0, 2, 1).is_ok());
        assert!(SectionThreeFamily::new(1, 2, 0, 0, 1, 1).is_err());
        assert!(SectionThreeFamily::new(3, 3, 0, 0, 0, 1).is_err());
        assert!(SectionThreeFamily::new(3, 3, 0, 1, 1, 1).is_err());
        assert!(SectionThreeFamily::new(3, 3, 0, 1, 1, 0).is_ok());
    }

    #[test]
    fn section_three_base_matches_double_det() {
        let shape = BlockMatrixShape::new(2, 2, 2).unwrap();
        let ring = ring_for(&shape.pool());
        let fam = SectionThreeFamily::new(2, 2, 0, 0, 0, 0).unwrap();
        assert_eq!(fam.pool(), shape.pool());
        let a = s3_family_generators(&ring, &fam).unwrap();
        let b = double_det_generators(&ring, shape, 2, 2).unwrap();
        assert_eq!(a.polynomials(), b.polynomials());
    }

    #[test]
    fn section_three_with_y_columns_removed() {
        let fam = SectionThreeFamily::new(2, 2, 0, 0, 2, 1).unwrap();
        let ring = ring_for(&fam.pool());
        let g = s3_family_generators(&ring, &fam).unwrap();
        // det X plus the 3 two-minors of [X; y-row 1], det X shared
        assert_eq!(g.raw_count(), 4);
        assert_eq!(g.len(), 3);
        assert_eq!(fam.pool().len(), 6);
    }
}
