//! Single induction steps: which Y-variable to peel off, and the families N and
//! I that sit on either side of it.

use serde::Serialize;

use super::families::{DiagramFamily, SectionThreeFamily};
use super::shape::YoungDiagram;
use crate::algebra::VariableId;
use crate::error::{Error, Result};

/// A position in the last block, `y_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct YCell {
    pub row: u16,
    pub col: u16,
}

impl YCell {
    /// The corresponding variable of the diagram family (block r).
    pub fn variable(&self, fam: &DiagramFamily) -> VariableId {
        VariableId::new(fam.shape.r, self.row, self.col)
    }

    /// Column of the cell inside H.
    pub fn h_col(&self, fam: &DiagramFamily) -> u16 {
        fam.y_offset() + self.col
    }
}

/// Southernmost cell of the easternmost Y-column of `outer - inner`.
fn southeast_y_cell(outer: &YoungDiagram, inner: &YoungDiagram, y_offset: u16) -> Option<YCell> {
    let rows = outer.num_rows();
    let in_diff = |i: u16, c: u16| outer.contains(i, c) && !inner.contains(i, c);
    let c = (y_offset + 1..=outer.part(1))
        .rev()
        .find(|&c| (1..=rows).any(|i| in_diff(i, c)))?;
    let i = (1..=rows).rev().find(|&i| in_diff(i, c))?;
    Some(YCell {
        row: i,
        col: c - y_offset,
    })
}

/// The cell removed by the next induction step, or `None` when λ^0 holds no
/// Y-variable.
pub fn select_removal_cell(fam: &DiagramFamily) -> Option<YCell> {
    let off = fam.y_offset();
    let outer = &fam.diagrams[0];
    fam.diagrams[1..]
        .iter()
        .find_map(|inner| southeast_y_cell(outer, inner, off))
        .or_else(|| southeast_y_cell(outer, &YoungDiagram::empty(), off))
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramStep {
    pub cell: YCell,
    /// Largest diagram index containing the cell.
    pub beta: usize,
    pub n_family: DiagramFamily,
    pub i_family: DiagramFamily,
}

/// `Λ̄` (cell removed everywhere) and `Λ̃` (`Λ̄` with λ^{β+1} widened by the
/// rectangle strictly northwest of the cell), for the canonical removal cell.
/// Both are applied on H and on V, so the V diagrams keep their X-columns
/// when a first-row cell is removed.
pub fn induction_step(fam: &DiagramFamily) -> Result<DiagramStep> {
    fam.validate()?;
    let cell = select_removal_cell(fam).ok_or_else(|| Error::BaseCase("λ^0 contains no Y-variable".into()))?;
    induction_step_at(fam, cell)
}

/// The same transformation for an arbitrary cell of λ^0 that is a corner of
/// every diagram containing it.
pub fn induction_step_at(fam: &DiagramFamily, cell: YCell) -> Result<DiagramStep> {
    let c = cell.h_col(fam);
    let beta = fam
        .diagrams
        .iter()
        .rposition(|d| d.contains(cell.row, c))
        .ok_or_else(|| Error::InvalidParameters(format!("y[{},{}] is not in λ^0", cell.row, cell.col)))?;
    let k = fam.k();
    if beta + 1 == k && (k >= fam.s as usize || k >= fam.t as usize) {
        return Err(Error::BaseCase(format!(
            "cone: y[{},{}] lies in the last diagram, which carries 1-minors",
            cell.row, cell.col
        )));
    }
    let vr = fam.v_y_offset() + cell.row;
    let remove = |ds: &[YoungDiagram], i: u16, c: u16| -> Result<Vec<YoungDiagram>> {
        ds.iter()
            .map(|d| {
                if d.contains(i, c) {
                    d.remove_corner(i, c)
                } else {
                    Ok(d.clone())
                }
            })
            .collect()
    };
    let bar = remove(&fam.diagrams, cell.row, c)?;
    let v_bar = remove(&fam.v_diagrams, vr, cell.col)?;
    let rect = YoungDiagram::rectangle(cell.row - 1, c - 1);
    let v_rect = YoungDiagram::rectangle(vr - 1, cell.col - 1);
    let (mut tilde, mut v_tilde) = (bar.clone(), v_bar.clone());
    if beta + 1 < k {
        tilde[beta + 1] = tilde[beta + 1].union(&rect);
        v_tilde[beta + 1] = v_tilde[beta + 1].union(&v_rect);
    } else {
        tilde.push(rect);
        v_tilde.push(v_rect);
    }
    let n_family = DiagramFamily::with_v_diagrams(fam.shape, fam.s, fam.t, bar, v_bar)?;
    let i_family = DiagramFamily::with_v_diagrams(fam.shape, fam.s, fam.t, tilde, v_tilde)?;
    Ok(DiagramStep {
        cell,
        beta,
        n_family,
        i_family,
    })
}

/// Y-cells of λ^0 for which `induction_step_at` succeeds.
pub fn admissible_cells(fam: &DiagramFamily) -> Vec<YCell> {
    let off = fam.y_offset();
    fam.diagrams[0]
        .corners()
        .into_iter()
        .filter(|&(_, c)| c > off)
        .map(|(i, c)| YCell { row: i, col: c - off })
        .filter(|&cell| induction_step_at(fam, cell).is_ok())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionThreeStep {
    pub j: SectionThreeFamily,
    pub n: SectionThreeFamily,
    pub i: SectionThreeFamily,
    pub cell: VariableId,
}

pub fn s3_induction_step(fam: &SectionThreeFamily) -> Result<SectionThreeStep> {
    let &SectionThreeFamily { m, n, k, l, a, b } = fam;
    if a >= n {
        return Err(Error::BaseCase("a = n: mixed ladder".into()));
    }
    if m < 2 {
        return Err(Error::BaseCase("m = 1: cone".into()));
    }
    let (nf, i, cell) = if a == 0 {
        (
            SectionThreeFamily::structural(m, n, k, l, 1, 1)?,
            SectionThreeFamily::structural(m - 1, n - 1, k + 1, l + 1, 0, 0)?,
            SectionThreeFamily::y(m, n),
        )
    } else {
        (
            SectionThreeFamily::structural(m, n, k, l, a + 1, b)?,
            SectionThreeFamily::structural(m - 1, n, k, l + 1, a + 1, b - 1)?,
            SectionThreeFamily::y(m, n - a),
        )
    };
    Ok(SectionThreeStep {
        j: *fam,
        n: nf,
        i,
        cell,
    })
}
