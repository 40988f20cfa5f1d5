//! ASCII wiring diagrams for grid fillings, and a tracer that reads them back.
//!
//! Wires enter on the left and top edges and leave on the right and bottom
//! edges. A filled box is a crossing (both wires go straight through); an empty
//! box is a pair of elbows (the wire from the left turns down, the wire from
//! above turns right). Each wire end carries the label of its lane, so the
//! wire entering at label `a` leaves at label `σ(a)` where `σ = v^Δ`.
//!
//! Layout of the full `2 × 2` grid:
//!
//! ```text
//!     3  4
//!     |  |
//!     |  |
//! 2 --+--+-- 4
//!     |  |
//!     |  |
//! 1 --+--+-- 3
//!     |  |
//!     |  |
//!     1  2
//! ```

use std::collections::BTreeMap;

use super::{GridDiagram, GridShape};
use crate::error::{Error, Result};

const WIRE_CHARS: [char; 4] = ['|', '-', '+', '.'];

struct Layout {
    label_width: usize,
    tile_width: usize,
}

impl Layout {
    fn new(shape: GridShape) -> Self {
        let label_width = (shape.rank() + 1).to_string().len();
        Layout {
            label_width,
            tile_width: (label_width + 1).max(3),
        }
    }

    /// Column of the first tile.
    fn origin(&self) -> usize {
        self.label_width + 2
    }

    /// Column carrying the vertical wire of grid column `c`.
    fn wire_col(&self, c: usize) -> usize {
        self.origin() + self.tile_width * (c - 1) + 1
    }

    fn tile(&self, filled: bool) -> [String; 3] {
        let w = self.tile_width;
        if filled {
            [
                format!(" |{}", " ".repeat(w - 2)),
                format!("-+{}", "-".repeat(w - 2)),
                format!(" |{}", " ".repeat(w - 2)),
            ]
        } else {
            [
                format!(" .{}.", "-".repeat(w - 3)),
                format!(".{}.", " ".repeat(w - 2)),
                format!("..{}", " ".repeat(w - 2)),
            ]
        }
    }
}

fn put(line: &mut Vec<char>, col: usize, text: &str) {
    for (k, ch) in text.chars().enumerate() {
        if line.len() <= col + k {
            line.resize(col + k + 1, ' ');
        }
        line[col + k] = ch;
    }
}

/// Draws the wiring diagram of a grid filling. Output uses only the
/// characters `| - + .`, digits, spaces and newlines.
pub fn render_wiring(grid: &GridDiagram) -> String {
    let shape = grid.shape();
    let layout = Layout::new(shape);
    let (p, m) = (shape.rows(), shape.cols());
    let mut lines: Vec<Vec<char>> = Vec::with_capacity(3 * p + 4);

    let mut top = Vec::new();
    let mut lead = Vec::new();
    for c in 1..=m {
        put(&mut top, layout.wire_col(c), &(p + c).to_string());
        put(&mut lead, layout.wire_col(c), "|");
    }
    lines.push(top);
    lines.push(lead.clone());

    for r in 1..=p {
        let mut rows = [Vec::new(), Vec::new(), Vec::new()];
        for c in 1..=m {
            let tile = layout.tile(grid.contains(r, c));
            let col = layout.origin() + layout.tile_width * (c - 1);
            for (line, text) in rows.iter_mut().zip(&tile) {
                put(line, col, text);
            }
        }
        let left = format!("{:>width$} -", p + 1 - r, width = layout.label_width);
        put(&mut rows[1], 0, &left);
        let end = layout.origin() + layout.tile_width * m;
        put(&mut rows[1], end, &format!("- {}", p + m + 1 - r));
        lines.extend(rows);
    }

    let mut bottom = Vec::new();
    for c in 1..=m {
        put(&mut bottom, layout.wire_col(c), &c.to_string());
    }
    lines.push(lead);
    lines.push(bottom);

    let mut out = String::new();
    for line in lines {
        let text: String = line.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Up,
    Down,
    Left,
    Right,
}

impl Dir {
    fn step(self, (y, x): (usize, usize)) -> Option<(usize, usize)> {
        match self {
            Dir::Up => y.checked_sub(1).map(|y| (y, x)),
            Dir::Down => Some((y + 1, x)),
            Dir::Left => x.checked_sub(1).map(|x| (y, x)),
            Dir::Right => Some((y, x + 1)),
        }
    }

    fn reverse(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }

    fn vertical(self) -> bool {
        matches!(self, Dir::Up | Dir::Down)
    }
}

struct Canvas {
    cells: Vec<Vec<char>>,
}

impl Canvas {
    fn at(&self, (y, x): (usize, usize)) -> char {
        self.cells.get(y).and_then(|row| row.get(x)).copied().unwrap_or(' ')
    }

    /// Digits starting at `(y, x)`, read left to right.
    fn number_at(&self, (y, x): (usize, usize)) -> Option<usize> {
        let digits: String = (x..)
            .map(|x| self.at((y, x)))
            .take_while(char::is_ascii_digit)
            .collect();
        digits.parse().ok()
    }

    /// Follows a wire from `pos` heading `dir` and returns the label it ends at.
    fn follow(&self, mut pos: (usize, usize), mut dir: Dir) -> Result<usize> {
        let limit = self.cells.iter().map(Vec::len).sum::<usize>() + 1;
        for _ in 0..limit {
            let ch = self.at(pos);
            match ch {
                '|' if dir.vertical() => {}
                '-' if !dir.vertical() => {}
                '+' => {}
                '.' => {
                    let came_from = dir.reverse();
                    let turns: Vec<Dir> = [Dir::Up, Dir::Down, Dir::Left, Dir::Right]
                        .into_iter()
                        .filter(|&d| d != came_from)
                        .filter(|&d| d.step(pos).is_some_and(|q| WIRE_CHARS.contains(&self.at(q))))
                        .collect();
                    match turns.as_slice() {
                        [d] => dir = *d,
                        _ => {
                            return Err(Error::Wiring(format!(
                                "ambiguous corner at line {}, column {}",
                                pos.0 + 1,
                                pos.1 + 1
                            )))
                        }
                    }
                }
                ' ' if dir == Dir::Right => {
                    let mut q = pos;
                    while self.at(q) == ' ' && q.1 < self.cells[q.0].len() {
                        q.1 += 1;
                    }
                    return self.number_at(q).ok_or_else(|| {
                        Error::Wiring(format!("no label after wire on line {}", pos.0 + 1))
                    });
                }
                c if c.is_ascii_digit() && dir == Dir::Down => {
                    return self.number_at(pos).ok_or_else(|| {
                        Error::Wiring(format!("bad label on line {}", pos.0 + 1))
                    });
                }
                other => {
                    return Err(Error::Wiring(format!(
                        "wire runs into {other:?} heading {dir:?} at line {}, column {}",
                        pos.0 + 1,
                        pos.1 + 1
                    )))
                }
            }
            pos = dir
                .step(pos)
                .ok_or_else(|| Error::Wiring("wire leaves the drawing".into()))?;
        }
        Err(Error::Wiring("wire does not terminate".into()))
    }
}

/// Reads a drawing produced by [`render_wiring`] and returns the permutation
/// its wires realize, in one-line notation.
pub fn trace_wiring(text: &str) -> Result<Vec<usize>> {
    let canvas = Canvas {
        cells: text.lines().map(|l| l.chars().collect()).collect(),
    };
    if canvas.cells.len() < 2 {
        return Err(Error::Wiring("drawing is too short".into()));
    }
    let mut map: BTreeMap<usize, usize> = BTreeMap::new();
    let mut record = |source: usize, sink: usize| -> Result<()> {
        if map.insert(source, sink).is_some() {
            return Err(Error::Wiring(format!("label {source} enters twice")));
        }
        Ok(())
    };

    // Sources along the top edge.
    let top = &canvas.cells[0];
    let mut x = 0;
    while x < top.len() {
        if top[x].is_ascii_digit() && (x == 0 || !top[x - 1].is_ascii_digit()) {
            let label = canvas.number_at((0, x)).expect("digit run");
            record(label, canvas.follow((1, x), Dir::Down)?)?;
        }
        x += 1;
    }

    // Sources along the left edge: lines of the form `<label> -`.
    for (y, line) in canvas.cells.iter().enumerate().skip(1) {
        let Some(start) = line.iter().position(|c| *c != ' ') else {
            continue;
        };
        if !line[start].is_ascii_digit() {
            continue;
        }
        let end = (start..line.len())
            .find(|&x| !line[x].is_ascii_digit())
            .unwrap_or(line.len());
        if line.get(end) == Some(&' ') && line.get(end + 1) == Some(&'-') {
            let label = canvas.number_at((y, start)).expect("digit run");
            record(label, canvas.follow((y, end + 1), Dir::Right)?)?;
        }
    }

    let size = map.len();
    let sigma: Vec<usize> = (1..=size)
        .map(|a| {
            map.get(&a)
                .copied()
                .ok_or_else(|| Error::Wiring(format!("no wire enters at label {a}")))
        })
        .collect::<Result<_>>()?;
    let mut seen = sigma.clone();
    seen.sort_unstable();
    if seen != (1..=size).collect::<Vec<_>>() {
        return Err(Error::Wiring(format!("wire ends {sigma:?} are not a permutation")));
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::pipe_dream_permutation;

    fn shape(p: usize, m: usize) -> GridShape {
        GridShape::new(p, m).unwrap()
    }

    #[test]
    fn full_two_by_two_golden() {
        let text = render_wiring(&GridDiagram::full(shape(2, 2)));
        let expected = [
            "    3  4",
            "    |  |",
            "    |  |",
            "2 --+--+-- 4",
            "    |  |",
            "    |  |",
            "1 --+--+-- 3",
            "    |  |",
            "    |  |",
            "    1  2",
            "",
        ]
        .join("\n");
        assert_eq!(text, expected);
        assert_eq!(trace_wiring(&text).unwrap(), vec![3, 4, 1, 2]);
    }

    #[test]
    fn single_box_tiles() {
        let empty = render_wiring(&GridDiagram::empty(shape(1, 1)));
        assert_eq!(empty, "    2\n    |\n    ..\n1 -. .- 2\n   ..\n    |\n    1\n");
        assert_eq!(trace_wiring(&empty).unwrap(), vec![1, 2]);
        let full = render_wiring(&GridDiagram::full(shape(1, 1)));
        assert_eq!(full, "    2\n    |\n    |\n1 --+-- 2\n    |\n    |\n    1\n");
        assert_eq!(trace_wiring(&full).unwrap(), vec![2, 1]);
    }

    #[test]
    fn traced_wires_match_permutation() {
        for (p, m) in [(1, 3), (2, 2), (3, 2), (2, 3)] {
            for grid in GridDiagram::all(shape(p, m)) {
                let text = render_wiring(&grid);
                assert_eq!(
                    trace_wiring(&text).unwrap(),
                    pipe_dream_permutation(&grid),
                    "{p}x{m} {grid}\n{text}"
                );
            }
        }
    }

    #[test]
    fn wide_labels_render_and_trace() {
        // n + 1 = 11 needs two-digit labels.
        let sh = shape(5, 6);
        let grid = GridDiagram::new(sh, [(1, 1), (2, 3), (5, 6), (4, 2)]).unwrap();
        let text = render_wiring(&grid);
        assert_eq!(trace_wiring(&text).unwrap(), pipe_dream_permutation(&grid));
    }

    #[test]
    fn output_charset() {
        let text = render_wiring(&GridDiagram::new(shape(2, 3), [(1, 2), (2, 1)]).unwrap());
        assert!(text
            .chars()
            .all(|c| "|-+. \n".contains(c) || c.is_ascii_digit()));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn tracer_rejects_garbage() {
        assert!(trace_wiring("").is_err());
        assert!(trace_wiring("   1\n   |\n   x\n").is_err());
    }
}
