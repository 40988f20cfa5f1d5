//! Cartan types and their Dynkin data.
//!
//! Nodes are numbered as in Bourbaki's plates:
//!
//! | type | diagram                                   | long / short          |
//! |------|-------------------------------------------|-----------------------|
//! | A_n  | 1 - 2 - ... - n                           | simply laced          |
//! | B_n  | 1 - 2 - ... - (n-1) => n                  | α_n short             |
//! | C_n  | 1 - 2 - ... - (n-1) <= n                  | α_n long              |
//! | D_n  | 1 - ... - (n-2) - (n-1), (n-2) - n        | simply laced          |
//! | E_n  | 1 - 3 - 4 - 5 - ... - n, 2 - 4            | simply laced          |
//! | F_4  | 1 - 2 => 3 - 4                            | α_1, α_2 long         |
//! | G_2  | 1 <= 2 (triple bond)                      | α_1 short, α_2 long   |
//!
//! The invariant form is normalized so that short roots have squared norm 2.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn allowed_ranks(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B | Family::C => "n >= 2",
            Family::D => "n >= 3",
            Family::E => "6, 7, 8",
            Family::F => "4",
            Family::G => "2",
        }
    }

    fn rank_ok(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_char(self.letter())
    }
}

/// A finite irreducible Cartan type such as `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.rank_ok(rank) {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                allowed: family.allowed_ranks(),
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Labels that are legal but coincide with another family.
    pub fn warning(&self) -> Option<&'static str> {
        match (self.family, self.rank) {
            (Family::D, 3) => Some("D3 is isomorphic to A3"),
            (Family::C, 2) => Some("C2 is isomorphic to B2"),
            _ => None,
        }
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots, row-major.
    pub(crate) fn gram_matrix(&self) -> Vec<i32> {
        let n = self.rank;
        let mut g = vec![0i32; n * n];
        let mut norms = vec![2i32; n];
        let mut bonds: Vec<(usize, usize, i32)> = Vec::new();
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    bonds.push((i, i + 1, -1));
                }
            }
            Family::B => {
                for norm in norms.iter_mut().take(n - 1) {
                    *norm = 4;
                }
                for i in 0..n - 1 {
                    bonds.push((i, i + 1, -2));
                }
            }
            Family::C => {
                norms[n - 1] = 4;
                for i in 0..n - 2 {
                    bonds.push((i, i + 1, -1));
                }
                bonds.push((n - 2, n - 1, -2));
            }
            Family::D => {
                for i in 0..n - 2 {
                    bonds.push((i, i + 1, -1));
                }
                bonds.push((n - 3, n - 1, -1));
            }
            Family::E => {
                bonds.push((0, 2, -1));
                bonds.push((1, 3, -1));
                for i in 2..n - 1 {
                    bonds.push((i, i + 1, -1));
                }
            }
            Family::F => {
                norms = vec![4, 4, 2, 2];
                bonds.extend([(0, 1, -2), (1, 2, -2), (2, 3, -1)]);
            }
            Family::G => {
                norms = vec![2, 6];
                bonds.push((0, 1, -3));
            }
        }
        for (i, &norm) in norms.iter().enumerate() {
            g[i * n + i] = norm;
        }
        for (i, j, v) in bonds {
            g[i * n + j] = v;
            g[j * n + i] = v;
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses labels such as `A2` or `g2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::parse(s, "empty Cartan type"))?
            .to_string()
            .parse()?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::parse(s, "expected a family letter followed by a rank"))?;
        CartanType::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_validity() {
        assert!(CartanType::new(Family::A, 1).is_ok());
        assert!(CartanType::new(Family::A, 0).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::C, 2).is_ok());
        assert!(CartanType::new(Family::D, 3).is_ok());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::F, 3).is_err());
        assert!(CartanType::new(Family::G, 3).is_err());
    }

    #[test]
    fn invalid_rank_names_family_and_allowed_ranks() {
        let err = CartanType::new(Family::E, 5).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains('E') && msg.contains("6, 7, 8"), "{msg}");
    }

    #[test]
    fn parse_labels() {
        assert_eq!("G2".parse::<CartanType>().unwrap().to_string(), "G2");
        assert_eq!("d4".parse::<CartanType>().unwrap().rank(), 4);
        assert!("X3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn gram_diagonals_are_short_normalized() {
        for label in ["A3", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let ct: CartanType = label.parse().unwrap();
            let g = ct.gram_matrix();
            let n = ct.rank();
            let diag: Vec<i32> = (0..n).map(|i| g[i * n + i]).collect();
            assert!(diag.iter().all(|d| [2, 4, 6].contains(d)), "{label}");
            assert!(diag.contains(&2), "{label} has no short simple root");
        }
    }

    #[test]
    fn degenerate_labels_warn() {
        assert!(CartanType::new(Family::D, 3).unwrap().warning().is_some());
        assert!(CartanType::new(Family::D, 4).unwrap().warning().is_none());
    }
}
