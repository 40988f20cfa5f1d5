//! The type-A quantum-matrices word and its `p × m` grid.
//!
//! For `n = p + m − 1` the word is made of `m` descending runs, run `c` being
//! `(p + c − 1, p + c − 2, …, c)`. Box `(r, c)` (row 1 on top, column 1 on the
//! left) carries the linear position `(c − 1)·p + r`, so labels run down the
//! columns:
//!
//! ```text
//!   1   p+1  …  (m−1)p+1
//!   ⋮    ⋮          ⋮
//!   p   2p   …     mp
//! ```
//!
//! Box `(r, c)` holds the letter `ε_{p + c − r}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cartan::{CartanType, Family};
use crate::diagrams::{Diagram, ReducedExpression};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, WeylElement};
use crate::words::Word;

pub mod wiring;

pub use wiring::{render_wiring, trace_wiring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GridShape {
    p: usize,
    m: usize,
}

impl GridShape {
    pub fn new(p: usize, m: usize) -> Result<Self> {
        if p == 0 || m == 0 {
            return Err(Error::InvalidShape { p, m });
        }
        Ok(GridShape { p, m })
    }

    pub fn rows(&self) -> usize {
        self.p
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    /// Rank of the ambient type-A system.
    pub fn rank(&self) -> usize {
        self.p + self.m - 1
    }

    /// Number of boxes, which is also the word length.
    pub fn size(&self) -> usize {
        self.p * self.m
    }

    /// `p = 1` or `m = 1` is a quantum affine space rather than a genuine
    /// matrix algebra; the word is still reduced.
    pub fn is_degenerate(&self) -> bool {
        self.p == 1 || self.m == 1
    }

    pub fn cartan_type(&self) -> CartanType {
        CartanType::new(Family::A, self.rank()).expect("rank is at least 1")
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(self.cartan_type())
    }

    /// Linear position `(c − 1)·p + r` of a box.
    pub fn position(&self, row: usize, col: usize) -> usize {
        (col - 1) * self.p + row
    }

    /// Inverse of [`GridShape::position`].
    pub fn box_at(&self, position: usize) -> (usize, usize) {
        let k = position - 1;
        (k % self.p + 1, k / self.p + 1)
    }

    /// Simple-root index `p + c − r` carried by a box.
    pub fn letter(&self, row: usize, col: usize) -> usize {
        self.p + col - row
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.m).flat_map(move |c| (1..=self.p).map(move |r| (r, c)))
    }

    fn check_box(&self, row: usize, col: usize) -> Result<()> {
        if row == 0 || col == 0 || row > self.p || col > self.m {
            return Err(Error::BoxOutOfRange {
                row,
                col,
                p: self.p,
                m: self.m,
            });
        }
        Ok(())
    }
}

/// The word `(s_{ε_p} ⋯ s_{ε_1})(s_{ε_{p+1}} ⋯ s_{ε_2}) ⋯ (s_{ε_n} ⋯ s_{ε_{n−p+1}})`.
pub fn quantum_matrices_word(shape: GridShape) -> Word {
    let letters: Vec<usize> = shape
        .boxes()
        .map(|(r, c)| shape.letter(r, c))
        .collect();
    Word::new(letters)
}

/// The grid shape whose quantum-matrices word is `word`, if any.
pub fn match_quantum_matrices(system: &RootSystem, word: &Word) -> Option<GridShape> {
    if system.cartan_type().family() != Family::A {
        return None;
    }
    let n = system.rank();
    (1..=n).find_map(|p| {
        let shape = GridShape::new(p, n + 1 - p).ok()?;
        (quantum_matrices_word(shape) == *word).then_some(shape)
    })
}

/// A filling of the `p × m` grid. Text form: `r,c` pairs separated by spaces,
/// e.g. `2,2 1,2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    shape: GridShape,
    boxes: BTreeSet<(usize, usize)>,
}

impl GridDiagram {
    pub fn new(shape: GridShape, boxes: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (r, c) in boxes {
            shape.check_box(r, c)?;
            set.insert((r, c));
        }
        Ok(GridDiagram { shape, boxes: set })
    }

    pub fn empty(shape: GridShape) -> Self {
        GridDiagram {
            shape,
            boxes: BTreeSet::new(),
        }
    }

    pub fn full(shape: GridShape) -> Self {
        GridDiagram {
            shape,
            boxes: shape.boxes().collect(),
        }
    }

    pub fn parse(shape: GridShape, text: &str) -> Result<Self> {
        let mut boxes = Vec::new();
        for tok in text.split_whitespace() {
            let (r, c) = tok
                .split_once(',')
                .ok_or_else(|| Error::parse(text, format!("{tok:?} is not an r,c pair")))?;
            let r = r
                .trim()
                .parse()
                .map_err(|_| Error::parse(text, format!("bad row in {tok:?}")))?;
            let c = c
                .trim()
                .parse()
                .map_err(|_| Error::parse(text, format!("bad column in {tok:?}")))?;
            boxes.push((r, c));
        }
        GridDiagram::new(shape, boxes)
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.boxes.contains(&(row, col))
    }

    pub fn filled(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.boxes.iter()
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// The diagram of linear positions over [`quantum_matrices_word`].
    pub fn to_diagram(&self) -> Diagram {
        let positions = self
            .boxes
            .iter()
            .map(|&(r, c)| self.shape.position(r, c))
            .collect();
        Diagram::new(positions).expect("box positions are distinct and nonzero")
    }

    pub fn from_diagram(shape: GridShape, diagram: &Diagram) -> Result<Self> {
        if let Some(p) = diagram.max_position().filter(|&p| p > shape.size()) {
            return Err(Error::PositionOutOfRange {
                position: p,
                len: shape.size(),
            });
        }
        Ok(GridDiagram {
            shape,
            boxes: diagram.positions().iter().map(|&p| shape.box_at(p)).collect(),
        })
    }

    /// Every filling of the shape, ordered by the bitmask of linear positions.
    pub fn all(shape: GridShape) -> impl Iterator<Item = GridDiagram> {
        (0..1u64 << shape.size()).map(move |mask| {
            GridDiagram::from_diagram(shape, &Diagram::from_mask(mask))
                .expect("mask fits the grid")
        })
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (r, c)) in self.boxes.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{r},{c}")?;
        }
        Ok(())
    }
}

/// Parses against a shape given as `pxm` before a colon, e.g. `2x2:2,2 1,2`.
impl FromStr for GridDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (shape, boxes) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "expected <p>x<m>:<boxes>"))?;
        let (p, m) = shape
            .split_once('x')
            .ok_or_else(|| Error::parse(s, "expected <p>x<m>"))?;
        let p = p.trim().parse().map_err(|_| Error::parse(s, "bad row count"))?;
        let m = m.trim().parse().map_err(|_| Error::parse(s, "bad column count"))?;
        GridDiagram::parse(GridShape::new(p, m)?, boxes)
    }
}

/// Le condition: whenever `(u, v)` is filled, every `i < u`, `j < v` has
/// `(i, v)` or `(u, j)` filled.
pub fn is_le_diagram(grid: &GridDiagram) -> bool {
    grid.filled().all(|&(u, v)| {
        let above = (1..u).all(|i| grid.contains(i, v));
        let left = (1..v).all(|j| grid.contains(u, j));
        // Some box above is empty and some box to the left is empty: that pair
        // (i, j) violates the condition.
        above || left
    })
}

/// One-line notation `[σ(1), …, σ(n+1)]` of a type-A Weyl group element,
/// with `s_{ε_i}` acting as the transposition `(i, i+1)`.
pub fn one_line(system: &RootSystem, w: &WeylElement) -> Vec<usize> {
    assert_eq!(system.cartan_type().family(), Family::A, "one-line form needs type A");
    let n = system.rank();
    // In ε-coordinates α_i = e_i − e_{i+1} and w(α_i) = e_{σ(i)} − e_{σ(i+1)}.
    let to_eps = |coeffs: &[i32]| -> Vec<i32> {
        (0..=n)
            .map(|k| {
                let here = if k < n { coeffs[k] } else { 0 };
                let before = if k > 0 { coeffs[k - 1] } else { 0 };
                here - before
            })
            .collect()
    };
    let mut sigma = vec![0usize; n + 1];
    for i in 1..=n {
        let eps = to_eps(w.image_of_simple(i).coeffs());
        sigma[i - 1] = eps.iter().position(|&x| x == 1).expect("image is e_a - e_b") + 1;
        if i == n {
            sigma[n] = eps.iter().position(|&x| x == -1).expect("image is e_a - e_b") + 1;
        }
    }
    sigma
}

/// `v^Δ = ζ′(Δ)` for the linearized grid, in one-line notation.
pub fn pipe_dream_permutation(grid: &GridDiagram) -> Vec<usize> {
    let shape = grid.shape();
    let system = shape.root_system();
    let expr = ReducedExpression::new(&system, quantum_matrices_word(shape))
        .expect("the quantum-matrices word is reduced");
    let v = expr
        .zeta_prime(&grid.to_diagram())
        .expect("grid positions fit the word");
    one_line(&system, &v)
}
