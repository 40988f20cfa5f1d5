//! Exhaustive sweeps over all diagrams of a word, Bruhat intervals, and the
//! verification report that ties the diagram invariants together.
//!
//! Sweeps visit every subset of `⟦1,t⟧`, so they are capped at
//! [`MAX_SWEEP_LEN`] positions. The cap can be lowered or raised through the
//! `WEYL_DIAGRAMS_SWEEP_CAP` environment variable.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::CartanType;
use crate::diagrams::{bruhat_leq, Diagram, ReducedExpression};
use crate::error::{Error, Result};
use crate::grassmann::{is_le_diagram, match_quantum_matrices, GridDiagram, GridShape};
use crate::root_system::{RootSystem, WeylElement};
use crate::words::{self, Word};

/// Default upper bound on the word length of a full sweep (`2^24` diagrams).
pub const MAX_SWEEP_LEN: usize = 24;

/// Environment variable overriding [`MAX_SWEEP_LEN`].
pub const SWEEP_CAP_VAR: &str = "WEYL_DIAGRAMS_SWEEP_CAP";

/// Hard ceiling: masks are `u64` and the sweep index is a `usize`.
const ABSOLUTE_CAP: usize = 40;

/// The sweep cap in force: the environment override if set, else the default.
pub fn sweep_cap() -> Result<usize> {
    match std::env::var(SWEEP_CAP_VAR) {
        Ok(raw) => {
            let cap: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::parse(&raw, format!("{SWEEP_CAP_VAR} must be a non-negative integer")))?;
            Ok(cap.min(ABSOLUTE_CAP))
        }
        Err(_) => Ok(MAX_SWEEP_LEN),
    }
}

fn guard(len: usize) -> Result<()> {
    let cap = sweep_cap()?;
    if len > cap {
        return Err(Error::SweepCap { len, cap });
    }
    Ok(())
}

/// All positive diagrams of the word, in ascending bitmask order
/// (position `k` is bit `k − 1`).
pub fn enumerate_positive(expr: &ReducedExpression<'_>) -> Result<Vec<Diagram>> {
    guard(expr.len())?;
    let total = 1usize << expr.len();
    Ok((0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let diagram = Diagram::from_mask(mask as u64);
            expr.is_positive(&diagram)
                .expect("mask fits the word")
                .then_some(diagram)
        })
        .collect())
}

/// The Bruhat interval `{u ≤ w}` as the image of `ζ` on positive diagrams.
/// Debug builds also compute it as the set of subword products and check that
/// the two agree.
pub fn bruhat_interval(expr: &ReducedExpression<'_>) -> Result<BTreeSet<WeylElement>> {
    let positives = enumerate_positive(expr)?;
    let images: BTreeSet<WeylElement> = positives
        .par_iter()
        .map(|d| expr.zeta(d).expect("positive diagrams fit the word"))
        .collect();
    debug_assert_eq!(images, expr.subword_products().into_iter().collect());
    Ok(images)
}

/// Optional parts of [`verify_word`].
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Compute [`OrderStats`].
    pub order_stats: bool,
    /// Record wall-clock time in the report.
    pub timing: bool,
}

/// How Bruhat order on `ζ`-images relates to inclusion of positive diagrams.
/// Reported for inspection only; no relation is asserted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderStats {
    /// Pairs `Δ₁ ⊊ Δ₂` of positive diagrams.
    pub inclusion_pairs: u64,
    /// Of those, pairs with `ζ(Δ₁) ≤ ζ(Δ₂)`.
    pub inclusion_then_bruhat: u64,
    /// Pairs of positive diagrams with `ζ(Δ₁) < ζ(Δ₂)`.
    pub bruhat_pairs: u64,
    /// Of those, pairs with `Δ₁ ⊆ Δ₂`.
    pub bruhat_then_inclusion: u64,
}

/// Outcome of [`verify_word`]. Serializes with keys in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub word: Word,
    pub length: usize,
    pub total_diagrams: u64,
    pub positive_count: usize,
    pub interval_count: usize,
    /// `ζ` is injective on positive diagrams and its image is the set of
    /// subword products.
    pub bijection_ok: bool,
    /// `diagram_for` inverts `ζ` in both directions.
    pub roundtrip_ok: bool,
    /// `ζ′(Δ)` is the last trace element and `ζ(Δ) ζ′(Δ) = 1`.
    pub inverse_ok: bool,
    /// The trace and length positivity tests agree on every diagram.
    pub dual_tests_ok: bool,
    /// Every positive diagram gives reduced suffix products and
    /// `l(ζ(Δ)) = |Δ|`.
    pub reduced_suffix_ok: bool,
    /// Positivity of `Δ ⊆ ⟦1,p⟧` does not depend on truncating the word to
    /// its first `p` letters.
    pub prefix_ok: bool,
    /// Every diagram is recovered from its subexpression trace.
    pub trace_ok: bool,
    /// No positive diagram carries a violated γ-obstruction, and every
    /// γ-sequence matches its truncated-word description.
    pub obstruction_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridShape>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub le_equivalence_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_stats: Option<OrderStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    /// Every boolean in the report, by key.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let mut out = vec![
            ("bijection_ok", self.bijection_ok),
            ("roundtrip_ok", self.roundtrip_ok),
            ("inverse_ok", self.inverse_ok),
            ("dual_tests_ok", self.dual_tests_ok),
            ("reduced_suffix_ok", self.reduced_suffix_ok),
            ("prefix_ok", self.prefix_ok),
            ("trace_ok", self.trace_ok),
            ("obstruction_ok", self.obstruction_ok),
        ];
        if let Some(le) = self.le_equivalence_ok {
            out.push(("le_equivalence_ok", le));
        }
        out
    }

    pub fn all_ok(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }
}

/// Per-diagram results of the sweep inside [`verify_word`].
struct Sweep {
    positive: bool,
    dual_agree: bool,
    trace_ok: bool,
    inverse_ok: bool,
    obstruction_ok: bool,
}

fn sweep_one(expr: &ReducedExpression<'_>, diagram: &Diagram) -> Sweep {
    let system = expr.system();
    let by_lengths = expr.is_positive_by_lengths(diagram).expect("mask fits the word");
    let by_trace = expr.is_positive_by_trace(diagram).expect("mask fits the word");

    let trace = expr.subexpression(diagram).expect("mask fits the word");
    let trace_ok = expr.diagram_from_trace(&trace).as_ref() == Some(diagram);

    let zeta = expr.zeta(diagram).expect("mask fits the word");
    let zeta_prime = expr.zeta_prime(diagram).expect("mask fits the word");
    let inverse_ok = *trace.last() == zeta_prime && system.compose(&zeta, &zeta_prime).is_identity();

    let mut obstruction_ok = true;
    'pairs: for &m in diagram.positions() {
        for j in 1..m {
            let obstruction = expr
                .positivity_obstruction(diagram, j, m)
                .expect("pair lies in the obstruction domain");
            let consistent = obstruction.trace.as_ref().is_none_or(|g| {
                g.telescopes(expr.betas()) && g.matches_truncations(expr)
            });
            if !consistent || (obstruction.violated && by_lengths) {
                obstruction_ok = false;
                break 'pairs;
            }
        }
    }

    Sweep {
        positive: by_lengths,
        dual_agree: by_lengths == by_trace,
        trace_ok,
        inverse_ok,
        obstruction_ok,
    }
}

/// Runs every diagram invariant over all `2^t` diagrams of the word, plus
/// the Le-diagram comparison when the word is a quantum-matrices word.
pub fn verify_word(expr: &ReducedExpression<'_>, options: VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let t = expr.len();
    guard(t)?;
    let system = expr.system();
    let total = 1usize << t;

    let sweep: Vec<Sweep> = (0..total)
        .into_par_iter()
        .map(|mask| sweep_one(expr, &Diagram::from_mask(mask as u64)))
        .collect();
    let positive_masks: Vec<usize> = (0..total).filter(|&mask| sweep[mask].positive).collect();
    let positives: Vec<Diagram> = positive_masks
        .iter()
        .map(|&mask| Diagram::from_mask(mask as u64))
        .collect();

    let zetas: Vec<WeylElement> = positives
        .par_iter()
        .map(|d| expr.zeta(d).expect("positive diagrams fit the word"))
        .collect();
    let images: BTreeSet<WeylElement> = zetas.iter().cloned().collect();
    let interval: BTreeSet<WeylElement> = expr.subword_products().into_iter().collect();
    let bijection_ok = images.len() == positives.len() && images == interval;

    let forward = positives
        .par_iter()
        .zip(zetas.par_iter())
        .all(|(d, u)| expr.diagram_for(u).as_ref() == Some(d));
    let backward = interval.par_iter().all(|u| {
        expr.diagram_for(u)
            .is_some_and(|d| expr.zeta(&d).is_ok_and(|v| v == *u))
    });

    let reduced_suffix_ok = positives.par_iter().zip(zetas.par_iter()).all(|(d, u)| {
        u.length() == d.len() && expr.suffix_products_reduced(d).expect("positive diagrams fit the word")
    });

    let prefix_ok = (0..t).into_par_iter().all(|p| {
        let prefix = expr.prefix(p);
        (0..1usize << p).all(|mask| {
            let diagram = Diagram::from_mask(mask as u64);
            prefix.is_positive_by_lengths(&diagram).expect("mask fits the prefix") == sweep[mask].positive
        })
    });

    let grid = match_quantum_matrices(system, expr.word());
    let le_equivalence_ok = grid.map(|shape| {
        (0..total).into_par_iter().all(|mask| {
            let grid = GridDiagram::from_diagram(shape, &Diagram::from_mask(mask as u64))
                .expect("quantum-matrices positions fill the grid");
            is_le_diagram(&grid) == sweep[mask].positive
        })
    });

    let order_stats = options
        .order_stats
        .then(|| order_stats(system, &positives, &zetas));

    Ok(VerificationReport {
        cartan_type: system.cartan_type().to_string(),
        word: expr.word().clone(),
        length: t,
        total_diagrams: total as u64,
        positive_count: positives.len(),
        interval_count: interval.len(),
        bijection_ok,
        roundtrip_ok: forward && backward,
        inverse_ok: sweep.iter().all(|s| s.inverse_ok),
        dual_tests_ok: sweep.iter().all(|s| s.dual_agree),
        reduced_suffix_ok,
        prefix_ok,
        trace_ok: sweep.iter().all(|s| s.trace_ok),
        obstruction_ok: sweep.iter().all(|s| s.obstruction_ok),
        grid,
        le_equivalence_ok,
        order_stats,
        elapsed_ms: options.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

fn order_stats(system: &RootSystem, positives: &[Diagram], zetas: &[WeylElement]) -> OrderStats {
    let n = positives.len();
    (0..n)
        .into_par_iter()
        .map(|a| {
            let mut stats = OrderStats::default();
            for b in 0..n {
                if a == b {
                    continue;
                }
                let included = positives[a].is_subset(&positives[b]);
                let below = bruhat_leq(system, &zetas[a], &zetas[b]);
                if included {
                    stats.inclusion_pairs += 1;
                    stats.inclusion_then_bruhat += below as u64;
                }
                if below {
                    stats.bruhat_pairs += 1;
                    stats.bruhat_then_inclusion += included as u64;
                }
            }
            stats
        })
        .reduce(OrderStats::default, |mut x, y| {
            x.inclusion_pairs += y.inclusion_pairs;
            x.inclusion_then_bruhat += y.inclusion_then_bruhat;
            x.bruhat_pairs += y.bruhat_pairs;
            x.bruhat_then_inclusion += y.bruhat_then_inclusion;
            x
        })
}

/// Result of [`longest_word_census`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub word: Word,
    /// `N = |Φ⁺| = l(w₀)`.
    pub n: usize,
    pub positive_count: usize,
    /// `|W|` by breadth-first search over the generators.
    pub group_order: usize,
}

impl Census {
    pub fn is_ok(&self) -> bool {
        self.positive_count == self.group_order
    }
}

/// Counts the positive diagrams of a reduced word of `w₀` and compares with
/// the order of the group.
pub fn longest_word_census(ctype: CartanType) -> Result<Census> {
    let system = RootSystem::new(ctype);
    guard(system.num_positive_roots())?;
    let word = words::extend_to_w0(&system, &Word::empty())?;
    let expr = ReducedExpression::new(&system, word)?;
    let positive_count = enumerate_positive(&expr)?.len();
    Ok(Census {
        cartan_type: ctype.to_string(),
        word: expr.word().clone(),
        n: expr.len(),
        positive_count,
        group_order: system.enumerate_group().len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;
    use crate::grassmann::quantum_matrices_word;

    fn system(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(CartanType::new(family, rank).unwrap())
    }

    fn expr<'a>(system: &'a RootSystem, letters: &[usize]) -> ReducedExpression<'a> {
        ReducedExpression::new(system, Word::new(letters.to_vec())).unwrap()
    }

    fn diagrams(list: &[&[usize]]) -> Vec<Diagram> {
        list.iter().map(|p| Diagram::new(p.to_vec()).unwrap()).collect()
    }

    #[test]
    fn a2_positive_diagrams_in_mask_order() {
        let a2 = system(Family::A, 2);
        let found = enumerate_positive(&expr(&a2, &[1, 2, 1])).unwrap();
        // masks 0, 1, 2, 3, 6, 7
        assert_eq!(found, diagrams(&[&[], &[1], &[2], &[1, 2], &[2, 3], &[1, 2, 3]]));
    }

    #[test]
    fn a1_and_empty_word() {
        let a1 = system(Family::A, 1);
        assert_eq!(enumerate_positive(&expr(&a1, &[1])).unwrap().len(), 2);
        let interval = bruhat_interval(&expr(&a1, &[])).unwrap();
        assert_eq!(interval.into_iter().collect::<Vec<_>>(), vec![a1.identity()]);
    }

    #[test]
    fn intervals() {
        let a2 = system(Family::A, 2);
        assert_eq!(bruhat_interval(&expr(&a2, &[1, 2, 1])).unwrap().len(), 6);
        let a3 = system(Family::A, 3);
        let qm = quantum_matrices_word(GridShape::new(2, 2).unwrap());
        let e = ReducedExpression::new(&a3, qm).unwrap();
        assert_eq!(enumerate_positive(&e).unwrap().len(), 14);
        assert_eq!(bruhat_interval(&e).unwrap().len(), 14);
    }

    #[test]
    fn a2_report() {
        let a2 = system(Family::A, 2);
        let report = verify_word(&expr(&a2, &[1, 2, 1]), VerifyOptions::default()).unwrap();
        assert_eq!(report.total_diagrams, 8);
        assert_eq!(report.positive_count, 6);
        assert_eq!(report.interval_count, 6);
        assert!(report.all_ok(), "{report:?}");
        assert_eq!(report.le_equivalence_ok, None);
        assert_eq!(report.elapsed_ms, None);
    }

    #[test]
    fn g2_longest_word_report() {
        let g2 = system(Family::G, 2);
        let report = verify_word(&expr(&g2, &[1, 2, 1, 2, 1, 2]), VerifyOptions::default()).unwrap();
        assert_eq!(report.positive_count, 12);
        assert!(report.all_ok());
    }

    #[test]
    fn quantum_matrices_report_has_le_flag() {
        let a4 = system(Family::A, 4);
        let qm = quantum_matrices_word(GridShape::new(2, 3).unwrap());
        let report = verify_word(&ReducedExpression::new(&a4, qm).unwrap(), VerifyOptions::default()).unwrap();
        assert_eq!(report.le_equivalence_ok, Some(true));
        assert_eq!(report.positive_count, report.interval_count);
        assert!(report.all_ok());
    }

    #[test]
    fn order_stats_are_counted() {
        let a2 = system(Family::A, 2);
        let options = VerifyOptions {
            order_stats: true,
            timing: false,
        };
        let report = verify_word(&expr(&a2, &[1, 2, 1]), options).unwrap();
        let stats = report.order_stats.unwrap();
        // Every inclusion of positive diagrams is a subword relation.
        assert_eq!(stats.inclusion_pairs, stats.inclusion_then_bruhat);
        assert!(stats.bruhat_pairs >= stats.bruhat_then_inclusion);
    }

    #[test]
    fn report_key_order() {
        let a1 = system(Family::A, 1);
        let report = verify_word(&expr(&a1, &[1]), VerifyOptions::default()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"{"type":"A1","word":[1],"length":1,"total_diagrams":2,"positive_count":2"#));
        assert!(!json.contains("elapsed_ms"));
    }

    #[test]
    fn census_small_types() {
        for (family, rank, expected) in [(Family::A, 2, (3, 6)), (Family::B, 2, (4, 8)), (Family::A, 3, (6, 24))] {
            let census = longest_word_census(CartanType::new(family, rank).unwrap()).unwrap();
            assert_eq!((census.n, census.positive_count), expected);
            assert_eq!(census.group_order, expected.1);
        }
    }

    #[test]
    fn census_refuses_large_sweeps() {
        // E6 has 36 positive roots.
        let err = longest_word_census(CartanType::new(Family::E, 6).unwrap()).unwrap_err();
        assert!(matches!(err, Error::SweepCap { len: 36, .. }));
    }
}
