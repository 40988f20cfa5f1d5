//! Root systems and exact Weyl-group arithmetic on the root lattice.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::words::Word;

/// A vector of the root lattice, in coordinates of the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    /// The simple root α_i (1-based).
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i - 1] = 1;
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Root {
    type Output = Root;

    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;

    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    /// Writes e.g. `a1+a2` or `-a1-2a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// An element of the Weyl group, stored as its action on the simple roots.
///
/// Column `j` of the matrix is the image of α_{j+1} in the simple-root basis.
/// Two elements are equal exactly when their matrices are equal.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    // column-major
    matrix: Vec<i32>,
    length: usize,
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Entry in row `i`, column `j` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[j * self.rank + i]
    }

    /// The image of α_j (1-based) in the simple-root basis.
    pub fn image_of_simple(&self, j: usize) -> Root {
        let n = self.rank;
        Root(self.matrix[(j - 1) * n..j * n].to_vec())
    }

    /// Row-major rows of the action matrix.
    pub fn rows(&self) -> Vec<Vec<i32>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn apply(&self, x: &Root) -> Root {
        assert_eq!(x.rank(), self.rank, "rank mismatch");
        let n = self.rank;
        let mut out = vec![0i32; n];
        for (j, &xj) in x.coeffs().iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                *o += self.matrix[j * n + i] * xj;
            }
        }
        Root(out)
    }

    /// Sign of the image of `x`, which must be a root: `true` when negative.
    fn sends_negative(&self, x: &[i32]) -> bool {
        let n = self.rank;
        for i in 0..n {
            let mut v = 0;
            for (j, &xj) in x.iter().enumerate() {
                v += self.matrix[j * n + i] * xj;
            }
            if v != 0 {
                return v < 0;
            }
        }
        unreachable!("Weyl group elements never send a root to zero")
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by length first, then by matrix entries, so sorted lists are stable
/// and readable.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.length, self.rank, &self.matrix).cmp(&(other.length, other.rank, &other.matrix))
    }
}

/// A finite irreducible root system with its positive roots and the
/// symmetrized invariant form.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<i32>,
    form: Vec<i32>,
    positive_roots: Vec<Root>,
    generators: Vec<WeylElement>,
}

impl RootSystem {
    /// Builds the system by closing the simple roots under the simple
    /// reflections.
    pub fn new(ctype: CartanType) -> Self {
        let n = ctype.rank();
        let form = ctype.gram_matrix();
        let mut cartan = vec![0i32; n * n];
        for i in 0..n {
            for j in 0..n {
                let num = 2 * form[i * n + j];
                let den = form[i * n + i];
                assert_eq!(num % den, 0, "non-integral Cartan entry");
                cartan[i * n + j] = num / den;
            }
        }

        let simple: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
        let mut seen: HashSet<Root> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Root> = simple.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for i in 0..n {
                let pairing: i32 = (0..n).map(|j| cartan[i * n + j] * x.0[j]).sum();
                let mut y = x.clone();
                y.0[i] -= pairing;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen.into_iter().filter(Root::is_positive).collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));

        let mut system = RootSystem {
            ctype,
            cartan,
            form,
            positive_roots,
            generators: Vec::new(),
        };
        system.generators = (1..=n)
            .map(|i| {
                let mut matrix = vec![0i32; n * n];
                for j in 0..n {
                    matrix[j * n + j] = 1;
                    matrix[j * n + (i - 1)] -= system.cartan[(i - 1) * n + j];
                }
                system.element_from_matrix(matrix)
            })
            .collect();
        system
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    /// Cartan integer `a_ij = ⟨α_i^∨, α_j⟩` (1-based indices).
    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[(i - 1) * self.rank() + (j - 1)]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        (1..=n)
            .map(|i| (1..=n).map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    /// The invariant form `(α_i, α_j)` (1-based indices).
    pub fn form_entry(&self, i: usize, j: usize) -> i32 {
        self.form[(i - 1) * self.rank() + (j - 1)]
    }

    pub fn form(&self, x: &Root, y: &Root) -> i32 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += x.0[i] * self.form[i * n + j] * y.0[j];
            }
        }
        acc
    }

    /// `d_β = ‖β‖² / 2`.
    pub fn half_norm(&self, beta: &Root) -> i32 {
        self.form(beta, beta) / 2
    }

    /// `(β^∨, x) = 2 (β, x) / (β, β)`. Integral for roots β and lattice
    /// vectors x; non-integrality panics.
    pub fn coroot_pairing(&self, beta: &Root, x: &Root) -> i32 {
        let num = 2 * self.form(beta, x);
        let den = self.form(beta, beta);
        assert!(den != 0, "pairing against the zero vector");
        assert_eq!(num % den, 0, "non-integral coroot pairing");
        num / den
    }

    /// Positive roots sorted by height, then by descending coefficients.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn is_root(&self, x: &Root) -> bool {
        if x.rank() != self.rank() {
            return false;
        }
        if x.is_positive() {
            self.positive_roots.binary_search_by(|r| cmp_root(r, x)).is_ok()
        } else if x.is_negative() {
            let y = -x;
            self.positive_roots.binary_search_by(|r| cmp_root(r, &y)).is_ok()
        } else {
            false
        }
    }

    /// `s_β(x) = x − (β^∨, x) β`.
    pub fn reflect(&self, beta: &Root, x: &Root) -> Result<Root> {
        self.check_dimension(beta)?;
        self.check_dimension(x)?;
        if !self.is_root(beta) {
            return Err(Error::NotARoot {
                coeffs: beta.coeffs().to_vec(),
                system: self.ctype.to_string(),
            });
        }
        let k = self.coroot_pairing(beta, x);
        Ok(x - &beta.scaled(k))
    }

    /// `s_{α_i}(x)` computed from the Cartan matrix.
    pub(crate) fn simple_reflect(&self, i: usize, x: &Root) -> Root {
        let pairing: i32 = (1..=self.rank())
            .map(|k| self.cartan_entry(i, k) * x.coeffs()[k - 1])
            .sum();
        let mut coeffs = x.coeffs().to_vec();
        coeffs[i - 1] -= pairing;
        Root::new(coeffs)
    }

    fn check_dimension(&self, x: &Root) -> Result<()> {
        if x.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                got: x.rank(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut matrix = vec![0i32; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        WeylElement {
            rank: n,
            matrix,
            length: 0,
        }
    }

    /// The simple reflection `s_{α_i}` (1-based).
    pub fn simple_reflection(&self, i: usize) -> &WeylElement {
        &self.generators[i - 1]
    }

    pub fn check_letter(&self, letter: usize) -> Result<()> {
        if letter == 0 || letter > self.rank() {
            return Err(Error::LetterOutOfRange {
                letter,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `a ∘ b`: apply `b` first.
    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut matrix = vec![0i32; n * n];
        for j in 0..n {
            for k in 0..n {
                let bkj = b.matrix[j * n + k];
                if bkj == 0 {
                    continue;
                }
                for i in 0..n {
                    matrix[j * n + i] += a.matrix[k * n + i] * bkj;
                }
            }
        }
        self.element_from_matrix(matrix)
    }

    /// `s_{α_i} ∘ w`.
    pub fn left_multiply(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.compose(self.simple_reflection(i), w)
    }

    /// `w ∘ s_{α_i}`.
    pub fn right_multiply(&self, w: &WeylElement, i: usize) -> WeylElement {
        self.compose(w, self.simple_reflection(i))
    }

    /// `s_{α_1} ∘ ⋯ ∘ s_{α_t}`; the rightmost letter acts first.
    pub fn element_of_word(&self, word: &Word) -> Result<WeylElement> {
        for &a in word.letters() {
            self.check_letter(a)?;
        }
        Ok(self.element_of_letters(word.letters()))
    }

    pub(crate) fn element_of_letters(&self, letters: &[usize]) -> WeylElement {
        letters.iter().fold(self.identity(), |acc, &a| self.right_multiply(&acc, a))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        w.length
    }

    /// Inverse element; the matrix is the inverse of `w`'s matrix.
    pub fn invert(&self, w: &WeylElement) -> WeylElement {
        // w^{-1} is the reversed product of a reduced word of w.
        let mut cur = w.clone();
        let mut inv = self.identity();
        while !cur.is_identity() {
            let i = self
                .right_descent(&cur)
                .expect("non-identity elements have a right descent");
            cur = self.right_multiply(&cur, i);
            inv = self.right_multiply(&inv, i);
        }
        inv
    }

    /// Smallest `i` with `l(w s_i) < l(w)`, i.e. `w(α_i)` negative.
    pub fn right_descent(&self, w: &WeylElement) -> Option<usize> {
        (1..=self.rank()).find(|&i| w.image_of_simple(i).is_negative())
    }

    /// Every element of W, by breadth-first search over right multiplication
    /// by simple reflections. Returned sorted.
    pub fn enumerate_group(&self) -> Vec<WeylElement> {
        let id = self.identity();
        let mut seen: HashSet<WeylElement> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let next = self.right_multiply(&w, i);
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut all: Vec<WeylElement> = seen.into_iter().collect();
        all.sort();
        all
    }

    fn element_from_matrix(&self, matrix: Vec<i32>) -> WeylElement {
        let mut w = WeylElement {
            rank: self.rank(),
            matrix,
            length: 0,
        };
        w.length = self
            .positive_roots
            .iter()
            .filter(|alpha| w.sends_negative(alpha.coeffs()))
            .count();
        w
    }
}

fn cmp_root(a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.cmp(a))
}
