//! Block matrix shapes, Young diagrams and the masked regions of H and V.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::VariableId;
use crate::error::{Error, Result};

/// `r` matrices of size `m x n`, concatenated horizontally into H (`m x rn`)
/// and vertically into V (`rm x n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockMatrixShape {
    pub m: u16,
    pub n: u16,
    pub r: u16,
}

impl BlockMatrixShape {
    pub fn new(m: u16, n: u16, r: u16) -> Result<Self> {
        if m == 0 || n == 0 || r == 0 {
            return Err(Error::InvalidParameters(format!(
                "shape needs m,n,r >= 1, got {m},{n},{r}"
            )));
        }
        if (r as u32) * (m as u32) > 64 || (r as u32) * (n as u32) > 64 {
            return Err(Error::InvalidParameters(
                "concatenated matrices are limited to 64 rows/cols".into(),
            ));
        }
        Ok(BlockMatrixShape { m, n, r })
    }

    pub fn num_vars(&self) -> usize {
        self.m as usize * self.n as usize * self.r as usize
    }

    /// All variables, in `(block,row,col)` order.
    pub fn pool(&self) -> Vec<VariableId> {
        let mut v = Vec::with_capacity(self.num_vars());
        for q in 1..=self.r {
            for i in 1..=self.m {
                for j in 1..=self.n {
                    v.push(VariableId::new(q, i, j));
                }
            }
        }
        v
    }

    /// Variable at H position `(i, c)`, 1-based.
    pub fn h_var(&self, i: u16, c: u16) -> VariableId {
        let q = (c - 1) / self.n + 1;
        let j = (c - 1) % self.n + 1;
        VariableId::new(q, i, j)
    }

    /// Variable at V position `(row, j)`, 1-based.
    pub fn v_var(&self, row: u16, j: u16) -> VariableId {
        let q = (row - 1) / self.m + 1;
        let i = (row - 1) % self.m + 1;
        VariableId::new(q, i, j)
    }

    pub fn dims(&self, o: Orientation) -> (u16, u16) {
        match o {
            Orientation::H => (self.m, self.r * self.n),
            Orientation::V => (self.r * self.m, self.n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    H,
    V,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::H => "H",
            Orientation::V => "V",
        })
    }
}

/// A northwest-justified Young diagram, English orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    parts: Vec<u16>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<u16>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    pub fn rectangle(rows: u16, cols: u16) -> Self {
        if rows == 0 || cols == 0 {
            return YoungDiagram::empty();
        }
        YoungDiagram {
            parts: vec![cols; rows as usize],
        }
    }

    pub fn parts(&self) -> &[u16] {
        &self.parts
    }

    pub fn num_rows(&self) -> u16 {
        self.parts.len() as u16
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length of row `i` (1-based); zero past the last row.
    pub fn part(&self, i: u16) -> u16 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, i: u16, c: u16) -> bool {
        i >= 1 && c >= 1 && c <= self.part(i)
    }

    pub fn cells(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Cellwise containment `self ⊆ other`.
    pub fn is_subset(&self, other: &YoungDiagram) -> bool {
        (1..=self.num_rows()).all(|i| self.part(i) <= other.part(i))
    }

    pub fn union(&self, other: &YoungDiagram) -> YoungDiagram {
        let rows = self.num_rows().max(other.num_rows());
        YoungDiagram {
            parts: (1..=rows).map(|i| self.part(i).max(other.part(i))).collect(),
        }
    }

    /// Removes the corner cell `(i, c)`.
    pub fn remove_corner(&self, i: u16, c: u16) -> Result<YoungDiagram> {
        if self.part(i) != c || self.part(i + 1) >= c {
            return Err(Error::InvalidParameters(format!("({i},{c}) is not a corner of {self}")));
        }
        let mut parts = self.parts.clone();
        parts[i as usize - 1] -= 1;
        YoungDiagram::new(parts)
    }

    /// Southeast (removable) corners `(row, col)`.
    pub fn corners(&self) -> Vec<(u16, u16)> {
        (1..=self.num_rows())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i)))
            .collect()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The admissible entries of H or V (or of an explicitly given matrix).
///
/// `cells[(i-1)*cols + (j-1)]` is the variable at position `(i, j)` when that
/// position is inside the mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub orientation: Orientation,
    rows: u16,
    cols: u16,
    cells: Vec<Option<VariableId>>,
}

impl Region {
    pub fn from_grid(orientation: Orientation, rows: u16, cols: u16, cells: Vec<Option<VariableId>>) -> Result<Self> {
        if cells.len() != rows as usize * cols as usize {
            return Err(Error::InvalidParameters("grid size mismatch".into()));
        }
        if rows > 64 || cols > 64 {
            return Err(Error::InvalidParameters("regions are limited to 64 rows/cols".into()));
        }
        Ok(Region {
            orientation,
            rows,
            cols,
            cells,
        })
    }

    pub fn rows(&self) -> u16 {
        self.rows
    }

    pub fn cols(&self) -> u16 {
        self.cols
    }

    #[inline]
    pub fn entry(&self, i: u16, j: u16) -> Option<VariableId> {
        if i == 0 || j == 0 || i > self.rows || j > self.cols {
            return None;
        }
        self.cells[(i as usize - 1) * self.cols as usize + (j as usize - 1)]
    }

    /// Bitmask of admissible columns in row `i` (bit `j-1`).
    pub fn row_mask(&self, i: u16) -> u64 {
        (1..=self.cols)
            .filter(|&j| self.entry(i, j).is_some())
            .fold(0u64, |m, j| m | 1u64 << (j - 1))
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.cells.iter().flatten().copied()
    }

    pub fn mask_size(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }
}

/// H or V of `shape`, restricted to `diagram` (the whole matrix when absent).
pub fn build_region(
    shape: BlockMatrixShape,
    orientation: Orientation,
    diagram: Option<&YoungDiagram>,
) -> Result<Region> {
    let (rows, cols) = shape.dims(orientation);
    if let Some(d) = diagram {
        if d.num_rows() > rows || d.part(1) > cols {
            return Err(Error::DiagramBounds(format!(
                "{d} exceeds the {rows}x{cols} matrix {orientation}"
            )));
        }
    }
    let mut cells = Vec::with_capacity(rows as usize * cols as usize);
    for i in 1..=rows {
        for j in 1..=cols {
            let inside = diagram.map_or(true, |d| d.contains(i, j));
            cells.push(inside.then(|| match orientation {
                Orientation::H => shape.h_var(i, j),
                Orientation::V => shape.v_var(i, j),
            }));
        }
    }
    Region::from_grid(orientation, rows, cols, cells)
}
