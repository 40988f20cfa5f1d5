//! Words in the simple reflections: reducedness, root sequences, canonical
//! reduced words and extension to a reduced word of the longest element.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, WeylElement};

/// A sequence of 1-based simple-root indices. Text form: `1,2,1`; the empty
/// string is the empty word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The first `len` letters.
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(Word)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Comma-separated unsigned integers; whitespace around tokens is ignored.
pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::parse(s, format!("{tok:?} is not a nonnegative integer")))
        })
        .collect()
}

/// The roots `(β_1, …, β_t)` attached to the positions of a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RootSequence(Vec<Root>);

impl RootSequence {
    pub fn betas(&self) -> &[Root] {
        &self.0
    }

    /// `β_i` for a 1-based position.
    pub fn beta(&self, position: usize) -> &Root {
        &self.0[position - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn prefix(&self, len: usize) -> RootSequence {
        RootSequence(self.0[..len].to_vec())
    }
}

/// True iff `l(s_{α_1} ⋯ s_{α_t}) = t`.
pub fn is_reduced(system: &RootSystem, word: &Word) -> Result<bool> {
    let w = system.element_of_word(word)?;
    Ok(w.length() == word.len())
}

/// `β_i = s_{α_1} ⋯ s_{α_{i−1}}(α_i)`. Fails on the first β that is not a
/// new positive root, which happens exactly when the word is not reduced.
pub fn root_sequence(system: &RootSystem, word: &Word) -> Result<RootSequence> {
    for &a in word.letters() {
        system.check_letter(a)?;
    }
    let mut prefix = system.identity();
    let mut betas: Vec<Root> = Vec::with_capacity(word.len());
    for (k, &a) in word.letters().iter().enumerate() {
        let beta = prefix.image_of_simple(a);
        if !beta.is_positive() {
            return Err(Error::NotReduced {
                word: word.to_string(),
                detail: format!("beta_{} = {} is a negative root", k + 1, beta),
            });
        }
        if let Some(prev) = betas.iter().position(|b| *b == beta) {
            return Err(Error::NotReduced {
                word: word.to_string(),
                detail: format!("beta_{} = {} repeats beta_{}", k + 1, beta, prev + 1),
            });
        }
        betas.push(beta);
        prefix = system.right_multiply(&prefix, a);
    }
    Ok(RootSequence(betas))
}

/// Fails with [`Error::NotReduced`] unless the word is reduced.
pub fn require_reduced(system: &RootSystem, word: &Word) -> Result<()> {
    root_sequence(system, word).map(|_| ())
}

/// Canonical reduced word of `w`: repeatedly strip the smallest left descent
/// `i` (the one with `w^{-1}(α_i)` negative).
pub fn reduced_word(system: &RootSystem, w: &WeylElement) -> Word {
    let mut cur = w.clone();
    let mut cur_inv = system.invert(w);
    let mut letters = Vec::with_capacity(w.length());
    while !cur.is_identity() {
        let i = (1..=system.rank())
            .find(|&i| cur_inv.image_of_simple(i).is_negative())
            .expect("non-identity elements have a left descent");
        letters.push(i);
        cur = system.left_multiply(i, &cur);
        cur_inv = system.right_multiply(&cur_inv, i);
    }
    Word(letters)
}

/// The longest element, found by greedy ascent with the smallest index first.
pub fn longest_element(system: &RootSystem) -> WeylElement {
    let mut w = system.identity();
    while let Some(i) = (1..=system.rank()).find(|&i| w.image_of_simple(i).is_positive()) {
        w = system.right_multiply(&w, i);
    }
    w
}

/// Extends a reduced word of `w` to a reduced word of `w_0` by appending a
/// reduced word of `w^{-1} w_0`.
pub fn extend_to_w0(system: &RootSystem, word: &Word) -> Result<Word> {
    require_reduced(system, word)?;
    let w = system.element_of_word(word)?;
    let w0 = longest_element(system);
    let rest = system.compose(&system.invert(&w), &w0);
    let extended = word.concat(&reduced_word(system, &rest));
    assert_eq!(extended.len(), system.num_positive_roots());
    assert!(is_reduced(system, &extended)?);
    Ok(extended)
}

/// Braid order `m_ij` of the product `s_i s_j`.
pub fn braid_order(system: &RootSystem, i: usize, j: usize) -> usize {
    if i == j {
        return 1;
    }
    match system.cartan_entry(i, j) * system.cartan_entry(j, i) {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        p => panic!("impossible Cartan product {p}"),
    }
}

/// All words obtained from `word` by a single braid move
/// `s_i s_j s_i ⋯ = s_j s_i s_j ⋯` (commutations included), in order of the
/// starting position.
pub fn braid_neighbors(system: &RootSystem, word: &Word) -> Vec<Word> {
    let letters = word.letters();
    let mut out = Vec::new();
    for start in 0..letters.len() {
        if start + 1 >= letters.len() {
            break;
        }
        let (i, j) = (letters[start], letters[start + 1]);
        if i == j {
            continue;
        }
        let m = braid_order(system, i, j);
        if start + m > letters.len() {
            continue;
        }
        let alternating = (0..m).all(|k| letters[start + k] == if k % 2 == 0 { i } else { j });
        if !alternating {
            continue;
        }
        let mut next = letters.to_vec();
        for k in 0..m {
            next[start + k] = if k % 2 == 0 { j } else { i };
        }
        out.push(Word(next));
    }
    out
}
