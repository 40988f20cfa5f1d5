//! Diagrams over a reduced word and the positivity test.
//!
//! A diagram is a subset of the positions `1..=t` of a fixed reduced word
//! `w = s_{α_1} ∘ ⋯ ∘ s_{α_t}`. Positive diagrams (positive subexpressions of
//! the reversed word) are the same thing as admissible (Cauchon) diagrams, so
//! admissibility is computed here through positivity.
//!
//! Positivity has two independent implementations:
//!
//! * [`ReducedExpression::is_positive_by_trace`] walks the subexpression
//!   `v_0, …, v_t` of `v = w^{-1}` and checks that every step
//!   `v_{i-1} → v_{i-1} s_{α_{t−i+1}}` goes up in length;
//! * [`ReducedExpression::is_positive_by_lengths`] checks, for every `j`, that
//!   `s_{α_j} s_{α_{j_1}} ⋯ s_{α_{j_s}}` has length `1 + s`, where
//!   `{j_1 < ⋯ < j_s} = Δ ∩ (j, t]`.
//!
//! [`ReducedExpression::is_positive`] runs both in debug builds and asserts
//! that they agree.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem, WeylElement};
use crate::words::{self, parse_list, write_list, RootSequence, Word};

/// A set of 1-based word positions. Text form: `2,3`; empty string is `∅`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Diagram(Vec<usize>);

impl Diagram {
    /// Accepts positions in any order; duplicates and `0` are rejected.
    pub fn new(mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        if let Some(w) = positions.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePosition(w[0]));
        }
        if positions.first() == Some(&0) {
            return Err(Error::PositionOutOfRange {
                position: 0,
                len: 0,
            });
        }
        Ok(Diagram(positions))
    }

    pub fn empty() -> Self {
        Diagram(Vec::new())
    }

    /// `⟦1, t⟧`.
    pub fn full(t: usize) -> Self {
        Diagram((1..=t).collect())
    }

    /// Bit `k` set means position `k + 1` is in the diagram.
    pub fn from_mask(mask: u64) -> Self {
        Diagram((0..64).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &p| acc | 1 << (p - 1))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.binary_search(&position).is_ok()
    }

    /// `⟦1, t⟧ ∖ Δ`.
    pub fn complement(&self, t: usize) -> Vec<usize> {
        (1..=t).filter(|&p| !self.contains(p)).collect()
    }

    pub fn is_subset(&self, other: &Diagram) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    /// Largest position, if any.
    pub fn max_position(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Diagram::new(parse_list(s)?)
    }
}

/// The subexpression `(v_0^Δ, …, v_t^Δ)` with `v_0^Δ = Id` and
/// `v_i^Δ = v_{i−1}^Δ s^Δ_{α_{t−i+1}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubexpressionTrace(Vec<WeylElement>);

impl SubexpressionTrace {
    pub fn elements(&self) -> &[WeylElement] {
        &self.0
    }

    /// `v_t^Δ = v^Δ = ζ′(Δ)`.
    pub fn last(&self) -> &WeylElement {
        self.0.last().expect("a trace always holds v_0")
    }
}

/// The γ-sequence attached to a diagram and a pair `j < m` with `m ∈ Δ`.
///
/// `ls` lists the complement positions `l_1 < ⋯ < l_p` strictly between `j`
/// and `m`; `gammas[i-1] = γ_i` with `γ_{p+1} = β_m` and
/// `γ_i = s_{β_{l_i}}(γ_{i+1})`; `coefficients[i-1] = a_i = (β_{l_i}^∨, γ_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaTrace {
    pub j: usize,
    pub m: usize,
    pub ls: Vec<usize>,
    pub gammas: Vec<Root>,
    pub coefficients: Vec<i32>,
}

impl GammaTrace {
    /// `a_p β_{l_p} + ⋯ + a_1 β_{l_1}`.
    pub fn weighted_sum(&self, betas: &RootSequence) -> Root {
        let rank = betas.beta(self.m).rank();
        self.ls
            .iter()
            .zip(&self.coefficients)
            .fold(Root::zero(rank), |acc, (&l, &a)| &acc + &betas.beta(l).scaled(a))
    }

    /// `γ_1 = β_m − (a_p β_{l_p} + ⋯ + a_1 β_{l_1})`.
    pub fn telescopes(&self, betas: &RootSequence) -> bool {
        self.gammas[0] == betas.beta(self.m) - &self.weighted_sum(betas)
    }

    /// Checks `γ_i = w′_i(α_m)` for every `i`, where `w′_i` is the product of the
    /// first `m − 1` letters with the positions `l_i, …, l_p` left out.
    pub fn matches_truncations(&self, expr: &ReducedExpression<'_>) -> bool {
        let system = expr.system();
        let alpha_m = system.simple_root(expr.letter(self.m));
        (0..self.ls.len()).all(|i| {
            let omitted = &self.ls[i..];
            let letters: Vec<usize> = (1..self.m)
                .filter(|p| !omitted.contains(p))
                .map(|p| expr.letter(p))
                .collect();
            let image = letters
                .iter()
                .rev()
                .fold(alpha_m.clone(), |x, &a| system.simple_reflect(a, &x));
            image == self.gammas[i]
        })
    }
}

/// Result of [`ReducedExpression::positivity_obstruction`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    /// The complement has at least one position strictly between `j` and `m`.
    pub applicable: bool,
    /// `β_j + β_m = a_p β_{l_p} + ⋯ + a_1 β_{l_1}`; certifies non-positivity.
    pub violated: bool,
    pub trace: Option<GammaTrace>,
}

/// A word that has been checked to be reduced, together with its root
/// sequence. All diagram operations hang off this type.
#[derive(Debug, Clone)]
pub struct ReducedExpression<'a> {
    system: &'a RootSystem,
    word: Word,
    betas: RootSequence,
}

impl<'a> ReducedExpression<'a> {
    pub fn new(system: &'a RootSystem, word: Word) -> Result<Self> {
        let betas = words::root_sequence(system, &word)?;
        Ok(ReducedExpression {
            system,
            word,
            betas,
        })
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `t`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn betas(&self) -> &RootSequence {
        &self.betas
    }

    /// The simple-root index at a 1-based position.
    pub fn letter(&self, position: usize) -> usize {
        self.word.letters()[position - 1]
    }

    /// `w = s_{α_1} ∘ ⋯ ∘ s_{α_t}`.
    pub fn element(&self) -> WeylElement {
        self.system.element_of_letters(self.word.letters())
    }

    /// The reduced expression `s_{α_1} ∘ ⋯ ∘ s_{α_p}`.
    pub fn prefix(&self, p: usize) -> ReducedExpression<'a> {
        ReducedExpression {
            system: self.system,
            word: self.word.prefix(p),
            betas: self.betas.prefix(p),
        }
    }

    pub fn check(&self, diagram: &Diagram) -> Result<()> {
        match diagram.max_position() {
            Some(p) if p > self.len() => Err(Error::PositionOutOfRange {
                position: p,
                len: self.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn subexpression(&self, diagram: &Diagram) -> Result<SubexpressionTrace> {
        self.check(diagram)?;
        let t = self.len();
        let mut vs = Vec::with_capacity(t + 1);
        vs.push(self.system.identity());
        for i in 1..=t {
            let pos = t - i + 1;
            let prev = &vs[i - 1];
            let next = if diagram.contains(pos) {
                self.system.right_multiply(prev, self.letter(pos))
            } else {
                prev.clone()
            };
            vs.push(next);
        }
        Ok(SubexpressionTrace(vs))
    }

    /// Recovers the unique diagram whose subexpression is `trace`, or `None`
    /// when `trace` is not a subexpression of the reversed word.
    pub fn diagram_from_trace(&self, trace: &SubexpressionTrace) -> Option<Diagram> {
        let t = self.len();
        let vs = trace.elements();
        if vs.len() != t + 1 || !vs[0].is_identity() {
            return None;
        }
        let mut positions = Vec::new();
        for i in 1..=t {
            let pos = t - i + 1;
            if vs[i] == vs[i - 1] {
                continue;
            }
            if vs[i] == self.system.right_multiply(&vs[i - 1], self.letter(pos)) {
                positions.push(pos);
            } else {
                return None;
            }
        }
        positions.reverse();
        Some(Diagram(positions))
    }

    /// `ζ(Δ) = w^Δ = s_{α_{j_1}} ∘ ⋯ ∘ s_{α_{j_s}}`.
    pub fn zeta(&self, diagram: &Diagram) -> Result<WeylElement> {
        self.check(diagram)?;
        Ok(self.zeta_unchecked(diagram))
    }

    fn zeta_unchecked(&self, diagram: &Diagram) -> WeylElement {
        diagram
            .positions()
            .iter()
            .fold(self.system.identity(), |acc, &p| {
                self.system.right_multiply(&acc, self.letter(p))
            })
    }

    /// `ζ′(Δ) = v^Δ = ζ(Δ)^{-1}`.
    pub fn zeta_prime(&self, diagram: &Diagram) -> Result<WeylElement> {
        Ok(self.system.invert(&self.zeta(diagram)?))
    }

    pub fn is_positive(&self, diagram: &Diagram) -> Result<bool> {
        self.check(diagram)?;
        let by_lengths = self.lengths_test(diagram);
        if cfg!(debug_assertions) {
            let by_trace = self.trace_test(diagram);
            assert_eq!(
                by_trace, by_lengths,
                "positivity tests disagree on {{{diagram}}} over {}",
                self.word
            );
        }
        Ok(by_lengths)
    }

    /// Positivity as an ascending subexpression:
    /// `l(v_{i−1} s_{α_{t−i+1}}) = l(v_{i−1}) + 1` for every `i`.
    pub fn is_positive_by_trace(&self, diagram: &Diagram) -> Result<bool> {
        self.check(diagram)?;
        Ok(self.trace_test(diagram))
    }

    /// Positivity as a length count: `l(s_{α_j} s_{α_{j_1}} ⋯ s_{α_{j_s}}) = 1 + s`
    /// for every `j`.
    pub fn is_positive_by_lengths(&self, diagram: &Diagram) -> Result<bool> {
        self.check(diagram)?;
        Ok(self.lengths_test(diagram))
    }

    fn trace_test(&self, diagram: &Diagram) -> bool {
        let t = self.len();
        let mut v = self.system.identity();
        for i in 1..=t {
            let pos = t - i + 1;
            let up = self.system.right_multiply(&v, self.letter(pos));
            if up.length() != v.length() + 1 {
                return false;
            }
            if diagram.contains(pos) {
                v = up;
            }
        }
        true
    }

    fn lengths_test(&self, diagram: &Diagram) -> bool {
        // tail = s_{α_{j_1}} ⋯ s_{α_{j_s}} for Δ ∩ (j, t]
        let mut tail = self.system.identity();
        let mut s = 0;
        for j in (1..=self.len()).rev() {
            let extended = self.system.left_multiply(self.letter(j), &tail);
            if extended.length() != 1 + s {
                return false;
            }
            if diagram.contains(j) {
                tail = extended;
                s += 1;
            }
        }
        true
    }

    /// For a positive diagram: every `s_{α_i} s_{α_{j_c}} ⋯ s_{α_{j_s}}` with
    /// `{j_c, …, j_s} = Δ ∩ (i, t]` is reduced, and so is the word of `Δ` itself.
    pub fn suffix_products_reduced(&self, diagram: &Diagram) -> Result<bool> {
        self.check(diagram)?;
        let letters: Vec<usize> = diagram.positions().iter().map(|&p| self.letter(p)).collect();
        if !words::is_reduced(self.system, &Word::new(letters))? {
            return Ok(false);
        }
        for i in 1..=self.len() {
            let mut letters = vec![self.letter(i)];
            letters.extend(
                diagram
                    .positions()
                    .iter()
                    .filter(|&&p| p > i)
                    .map(|&p| self.letter(p)),
            );
            if !words::is_reduced(self.system, &Word::new(letters))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Builds the positive diagram `Δ` with `ζ(Δ) = u` by the left-to-right
    /// recursion: position `i + 1` is taken iff `u_i^{-1}(α_{i+1})` is negative,
    /// and then `u_{i+1} = s_{α_{i+1}} ∘ u_i`. Returns `None` when the residual
    /// element is not the identity, i.e. when `u ≰ w`.
    pub fn diagram_for(&self, u: &WeylElement) -> Option<Diagram> {
        let mut residual_inv = self.system.invert(u);
        let mut positions = Vec::new();
        for pos in 1..=self.len() {
            let a = self.letter(pos);
            if residual_inv.image_of_simple(a).is_negative() {
                positions.push(pos);
                residual_inv = self.system.right_multiply(&residual_inv, a);
            }
        }
        residual_inv.is_identity().then_some(Diagram(positions))
    }

    /// Every product of a subsequence of the word, kept in order. This is the
    /// Bruhat interval `{u ≤ w}` by the subword property.
    pub fn subword_products(&self) -> HashSet<WeylElement> {
        let mut reachable: HashSet<WeylElement> = HashSet::from([self.system.identity()]);
        for &a in self.word.letters().iter().rev() {
            let extended: Vec<WeylElement> = reachable
                .iter()
                .map(|x| self.system.left_multiply(a, x))
                .collect();
            reachable.extend(extended);
        }
        reachable
    }

    /// Independent Bruhat test: `u` is a product of some subword.
    pub fn bruhat_leq_oracle(&self, u: &WeylElement) -> bool {
        if u.length() > self.len() {
            return false;
        }
        self.subword_products().contains(u)
    }

    /// The γ-sequence test for the pair `j < m` with `m ∈ Δ`.
    pub fn positivity_obstruction(&self, diagram: &Diagram, j: usize, m: usize) -> Result<Obstruction> {
        self.check(diagram)?;
        if j == 0 || j >= m || m > self.len() || !diagram.contains(m) {
            return Err(Error::ObstructionDomain { j, m });
        }
        let ls: Vec<usize> = (j + 1..m).filter(|&p| !diagram.contains(p)).collect();
        if ls.is_empty() {
            return Ok(Obstruction {
                applicable: false,
                violated: false,
                trace: None,
            });
        }
        let p = ls.len();
        let mut gammas = vec![Root::zero(self.system.rank()); p + 1];
        let mut coefficients = vec![0i32; p];
        gammas[p] = self.betas.beta(m).clone();
        for i in (0..p).rev() {
            let beta_l = self.betas.beta(ls[i]);
            coefficients[i] = self.system.coroot_pairing(beta_l, &gammas[i + 1]);
            gammas[i] = self
                .system
                .reflect(beta_l, &gammas[i + 1])
                .expect("root sequence entries are roots");
        }
        let trace = GammaTrace {
            j,
            m,
            ls,
            gammas,
            coefficients,
        };
        debug_assert!(trace.telescopes(&self.betas));
        debug_assert!(trace.matches_truncations(self));
        let lhs = self.betas.beta(j) + self.betas.beta(m);
        let violated = lhs == trace.weighted_sum(&self.betas);
        Ok(Obstruction {
            applicable: true,
            violated,
            trace: Some(trace),
        })
    }
}

/// `u ≤ v` in Bruhat order, via the recursion over a reduced word of `v`.
pub fn bruhat_leq(system: &RootSystem, u: &WeylElement, v: &WeylElement) -> bool {
    if u.length() > v.length() {
        return false;
    }
    let word = words::reduced_word(system, v);
    ReducedExpression::new(system, word)
        .expect("canonical reduced words are reduced")
        .diagram_for(u)
        .is_some()
}
