//! Exhaustive sweeps: the arc-deletion bound over a corpus, and the maximum
//! α trace norm over `T(n)` and `U(n)` against `(n−1)·f(α)` and `n·f(α)`.
//!
//! Sweeps fan out over rayon. Maxima are folded with an associative,
//! commutative merge and maximizer classes are keyed by canonical form, so
//! the output does not depend on scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::digraph::{canonical_form, CanonicalForm, Digraph};
use crate::error::{Error, Result};
use crate::families::{
    directed_cycle, directed_path, has_directed_cycle, labeled_unicyclic_graphs, orientations, tree_partition_count,
    tree_shape, Family, FamilySpec, UnicyclicVariant,
};
use crate::spectra::{trace_norm, AlphaParam};
use crate::variation::{all_arc_reports, arc_bound, vertex_deletion_report, DeletionReport};

/// Strictly increasing α values in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaGrid {
    values: Vec<AlphaParam>,
}

impl AlphaGrid {
    pub fn new(values: impl IntoIterator<Item = f64>) -> Result<Self> {
        let values = values.into_iter().map(AlphaParam::new).collect::<Result<Vec<_>>>()?;
        if values.is_empty() {
            return Err(Error::input("alpha grid is empty"));
        }
        if values.windows(2).any(|w| w[0].value() >= w[1].value()) {
            return Err(Error::input("alpha grid must be strictly increasing"));
        }
        Ok(AlphaGrid { values })
    }

    pub fn single(alpha: AlphaParam) -> Self {
        AlphaGrid { values: vec![alpha] }
    }

    pub fn values(&self) -> &[AlphaParam] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl Default for AlphaGrid {
    /// `{0, 0.1, …, 0.9}`, which contains 0.5.
    fn default() -> Self {
        AlphaGrid::new((0..10).map(|k| k as f64 / 10.0)).expect("valid grid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Slack below `−tol`.
    BoundExceeded,
    /// Observed equality differs from the predicted equality case.
    EqualityMismatch,
}

/// One deletion report that contradicts the bound or its equality case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub digraph: Digraph,
    pub report: DeletionReport,
}

fn classify(d: &Digraph, report: DeletionReport) -> Option<Violation> {
    let kind = if !report.bound_respected() {
        ViolationKind::BoundExceeded
    } else if report.equality_predicted != report.equality_observed {
        ViolationKind::EqualityMismatch
    } else {
        return None;
    };
    Some(Violation { kind, digraph: d.clone(), report })
}

const CHUNK: usize = 4096;

fn sweep_corpus<F>(corpus: impl IntoIterator<Item = Digraph>, per_digraph: F) -> Result<Vec<Violation>>
where
    F: Fn(&Digraph) -> Result<Vec<Violation>> + Sync,
{
    let mut out = Vec::new();
    let mut it = corpus.into_iter().peekable();
    while it.peek().is_some() {
        let chunk: Vec<Digraph> = it.by_ref().take(CHUNK).collect();
        let found: Vec<Vec<Violation>> = chunk.par_iter().map(&per_digraph).collect::<Result<_>>()?;
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

/// Checks every arc of every digraph at every grid point. An empty result
/// means the bound held and equality occurred exactly in the predicted cases.
pub fn verify_arc_deletions(
    corpus: impl IntoIterator<Item = Digraph>,
    grid: &AlphaGrid,
    tol: f64,
) -> Result<Vec<Violation>> {
    sweep_corpus(corpus, |d| {
        let mut v = Vec::new();
        for &alpha in grid.values() {
            v.extend(all_arc_reports(d, alpha, tol)?.into_iter().filter_map(|r| classify(d, r)));
        }
        Ok(v)
    })
}

/// Leaf and nonleaf deletion check for every non-isolated vertex.
pub fn verify_vertex_deletions(
    corpus: impl IntoIterator<Item = Digraph>,
    grid: &AlphaGrid,
    tol: f64,
) -> Result<Vec<Violation>> {
    sweep_corpus(corpus, |d| {
        let deg = d.degrees();
        let mut v = Vec::new();
        for &alpha in grid.values() {
            for u in (0..d.order()).filter(|&u| deg.total(u) > 0) {
                if let Some(x) = classify(d, vertex_deletion_report(d, u, alpha, tol)?) {
                    v.push(x);
                }
            }
        }
        Ok(v)
    })
}

/// Maximum α trace norm over a family at one α, with the extremal claims checked.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub family: FamilySpec,
    pub variant: Option<UnicyclicVariant>,
    pub alpha: AlphaParam,
    /// `(n−1)·f(α)` for trees, `n·f(α)` for unicyclic digraphs.
    pub paper_bound: f64,
    pub max_trace_norm: f64,
    /// One canonical representative per isomorphism class attaining the
    /// maximum within tolerance, sorted by canonical form.
    pub maximizers: Vec<Digraph>,
    /// Labelled digraphs attaining the maximum.
    pub maximizer_count: usize,
    /// Number of labelled digraphs swept.
    pub members: usize,
    pub bound_attained: bool,
    pub unique_maximizer: bool,
    /// `P_n` resp. `C_n` is the only maximizer class.
    pub expected_maximizer: bool,
    /// Order 2 trees: the single arc meets the bound at every α, so the
    /// α = 0 clause is not checked.
    pub degenerate: bool,
    pub tol: f64,
}

impl ExtremalReport {
    /// Human-readable descriptions of every failed claim.
    pub fn claim_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let tag = format!("{} n={} alpha={}", family_label(self), self.family.n, self.alpha.value());
        if self.max_trace_norm > self.paper_bound + self.tol {
            out.push(format!("{tag}: max {} exceeds bound {}", self.max_trace_norm, self.paper_bound));
        }
        if self.degenerate {
            return out;
        }
        if self.alpha.is_zero() {
            if !self.bound_attained {
                out.push(format!("{tag}: bound {} not attained (max {})", self.paper_bound, self.max_trace_norm));
            }
            if !self.expected_maximizer {
                out.push(format!("{tag}: maximizer classes are not exactly the expected one"));
            }
        } else if self.max_trace_norm >= self.paper_bound - self.tol {
            out.push(format!(
                "{tag}: bound {} attained at nonzero alpha (max {})",
                self.paper_bound, self.max_trace_norm
            ));
        }
        out
    }
}

fn family_label(r: &ExtremalReport) -> &'static str {
    match (r.family.family, r.variant) {
        (Family::Unicyclic, Some(UnicyclicVariant::DirectedCycle)) => "unicyclic_directed",
        (f, _) => f.name(),
    }
}

/// Running maximum with the classes within `tol` of it.
#[derive(Debug, Clone, Default)]
struct Best {
    max: f64,
    classes: BTreeMap<CanonicalForm, (f64, usize)>,
    members: usize,
}

impl Best {
    fn offer(&mut self, d: &Digraph, norm: f64, tol: f64) {
        self.members += 1;
        if norm < self.max - tol {
            return;
        }
        if norm > self.max {
            self.max = norm;
            self.prune(tol);
        }
        let entry = self.classes.entry(canonical_form(d)).or_insert((norm, 0));
        entry.0 = entry.0.max(norm);
        entry.1 += 1;
    }

    fn prune(&mut self, tol: f64) {
        let floor = self.max - tol;
        self.classes.retain(|_, (norm, _)| *norm >= floor);
    }

    fn merge(mut self, other: Best, tol: f64) -> Best {
        self.max = self.max.max(other.max);
        self.members += other.members;
        for (k, (norm, count)) in other.classes {
            let e = self.classes.entry(k).or_insert((norm, 0));
            e.0 = e.0.max(norm);
            e.1 += count;
        }
        self.prune(tol);
        self
    }
}

fn fold_shapes<S, G>(shapes: S, grid: &AlphaGrid, tol: f64, members: G) -> Result<Vec<Best>>
where
    S: IndexedParallelIterator,
    G: Fn(S::Item) -> Vec<Digraph> + Sync + Send,
{
    let k = grid.len();
    shapes
        .map(|shape| -> Result<Vec<Best>> {
            let mut acc = vec![Best::default(); k];
            for d in members(shape) {
                for (slot, &alpha) in acc.iter_mut().zip(grid.values()) {
                    slot.offer(&d, trace_norm(&d, alpha)?, tol);
                }
            }
            Ok(acc)
        })
        .try_reduce(
            || vec![Best::default(); k],
            |a, b| Ok(a.into_iter().zip(b).map(|(x, y)| x.merge(y, tol)).collect()),
        )
}

#[allow(clippy::too_many_arguments)]
fn build_reports(
    spec: FamilySpec,
    variant: Option<UnicyclicVariant>,
    grid: &AlphaGrid,
    tol: f64,
    arcs: usize,
    expected: &Digraph,
    degenerate: bool,
    bests: Vec<Best>,
) -> Vec<ExtremalReport> {
    let expected_key = canonical_form(expected);
    grid.values()
        .iter()
        .zip(bests)
        .map(|(&alpha, best)| {
            let paper_bound = arcs as f64 * arc_bound(alpha);
            let maximizer_count = best.classes.values().map(|c| c.1).sum();
            let unique = best.classes.len() == 1;
            let expected_maximizer = unique && best.classes.contains_key(&expected_key);
            let maximizers = best.classes.keys().map(CanonicalForm::representative).collect();
            ExtremalReport {
                family: spec,
                variant,
                alpha,
                paper_bound,
                max_trace_norm: best.max,
                maximizers,
                maximizer_count,
                members: best.members,
                bound_attained: best.max >= paper_bound - tol,
                unique_maximizer: unique,
                expected_maximizer,
                degenerate,
                tol,
            }
        })
        .collect()
}

/// Maximum α trace norm over all labelled oriented trees on `n` vertices.
pub fn extremal_trees(n: usize, grid: &AlphaGrid, tol: f64, force: bool) -> Result<Vec<ExtremalReport>> {
    let parts = tree_partition_count(n, force)?;
    let bests = fold_shapes((0..parts).into_par_iter(), grid, tol, |i| orientations(n, &tree_shape(n, i)).collect())?;
    let spec = FamilySpec { family: Family::OrientedTrees, n, dedupe: false };
    Ok(build_reports(spec, None, grid, tol, n.saturating_sub(1), &directed_path(n)?, n <= 2, bests))
}

/// Maximum α trace norm over all labelled unicyclic digraphs on `n` vertices.
pub fn extremal_unicyclic(
    n: usize,
    variant: UnicyclicVariant,
    grid: &AlphaGrid,
    tol: f64,
    force: bool,
) -> Result<Vec<ExtremalReport>> {
    let graphs = labeled_unicyclic_graphs(n, force)?;
    let bests = fold_shapes(graphs.par_iter(), grid, tol, |edges| {
        orientations(n, edges)
            .filter(|d| variant == UnicyclicVariant::AnyOrientation || has_directed_cycle(d))
            .collect()
    })?;
    let spec = FamilySpec { family: Family::Unicyclic, n, dedupe: false };
    Ok(build_reports(spec, Some(variant), grid, tol, n, &directed_cycle(n, false)?, false, bests))
}

/// `(α, ‖A_α(D)‖_*)` at each grid point.
pub fn alpha_sweep(d: &Digraph, grid: &AlphaGrid) -> Result<Vec<(AlphaParam, f64)>> {
    grid.values().iter().map(|&a| Ok((a, trace_norm(d, a)?))).collect()
}

/// Arcs as `u>v` separated by spaces.
pub fn arcs_inline(d: &Digraph) -> String {
    d.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect::<Vec<_>>().join(" ")
}

pub const CSV_HEADER: [&str; 8] =
    ["family", "n", "alpha", "max_trace_norm", "paper_bound", "bound_attained", "unique_maximizer", "maximizer_arcs"];

/// CSV with [`CSV_HEADER`]; floats use shortest round-trip formatting and
/// maximizers in `maximizer_arcs` are separated by ` | `.
pub fn reports_to_csv(reports: &[ExtremalReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::input(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in reports {
        let maximizers = r.maximizers.iter().map(arcs_inline).collect::<Vec<_>>().join(" | ");
        w.write_record([
            family_label(r).to_string(),
            r.family.n.to_string(),
            r.alpha.value().to_string(),
            r.max_trace_norm.to_string(),
            r.paper_bound.to_string(),
            r.bound_attained.to_string(),
            r.unique_maximizer.to_string(),
            maximizers,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// JSON array of reports; maximizers are embedded in the digraph text format.
pub fn reports_to_json(reports: &[ExtremalReport]) -> serde_json::Value {
    serde_json::Value::Array(
        reports
            .iter()
            .map(|r| {
                serde_json::json!({
                    "family": family_label(r),
                    "n": r.family.n,
                    "alpha": r.alpha.value(),
                    "max_trace_norm": r.max_trace_norm,
                    "paper_bound": r.paper_bound,
                    "bound_attained": r.bound_attained,
                    "unique_maximizer": r.unique_maximizer,
                    "expected_maximizer": r.expected_maximizer,
                    "degenerate": r.degenerate,
                    "members": r.members,
                    "maximizer_count": r.maximizer_count,
                    "maximizers": r.maximizers.iter().map(Digraph::to_text).collect::<Vec<_>>(),
                    "claim_failures": r.claim_failures(),
                })
            })
            .collect(),
    )
}
