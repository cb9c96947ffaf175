//! How far the α trace norm can drop when an arc or a vertex is deleted.
//!
//! Deleting one arc lowers `‖A_α(D)‖_*` by at most `f(α) = √(2α² − 2α + 1)`.
//! Vertex deletion removes `d(u)` arcs, so the bound scales with the total
//! degree. Every report carries both the predicted equality case and the one
//! actually observed on the computed spectra, so disagreements show up as data.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::spectra::{trace_norm, AlphaParam};

/// `f(α) = √(2α² − 2α + 1)`, the singular value of a lone arc in `A_α`.
pub fn arc_bound(alpha: AlphaParam) -> f64 {
    let a = alpha.value();
    (2.0 * a * a - 2.0 * a + 1.0).sqrt()
}

/// [`arc_bound`] from a raw value, with the `[0, 1)` check.
pub fn arc_bound_checked(alpha: f64) -> Result<f64> {
    AlphaParam::new(alpha).map(arc_bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionKind {
    Arc,
    LeafVertex,
    NonleafVertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DeletionTarget {
    Arc { tail: usize, head: usize },
    Vertex { vertex: usize },
}

/// Which half of the leaf equality condition held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafEquality {
    /// `d⁺(u) = d⁻(v) = 1`: the leaf points at its neighbour.
    OutIn,
    /// `d⁻(u) = d⁺(v) = 1`: the neighbour points at the leaf.
    InOut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeletionReport {
    pub kind: DeletionKind,
    pub target: DeletionTarget,
    pub alpha: AlphaParam,
    pub norm_before: f64,
    pub norm_after: f64,
    pub bound: f64,
    /// `norm_after + bound − norm_before`
    pub slack: f64,
    pub equality_predicted: bool,
    pub equality_observed: bool,
    /// Set for leaf deletions whose degree condition holds.
    pub leaf_equality: Option<LeafEquality>,
    pub tol: f64,
}

impl DeletionReport {
    #[allow(clippy::too_many_arguments)]
    fn build(
        kind: DeletionKind,
        target: DeletionTarget,
        alpha: AlphaParam,
        norm_before: f64,
        norm_after: f64,
        bound: f64,
        equality_predicted: bool,
        tol: f64,
    ) -> Self {
        let slack = norm_after + bound - norm_before;
        DeletionReport {
            kind,
            target,
            alpha,
            norm_before,
            norm_after,
            bound,
            slack,
            equality_predicted,
            equality_observed: slack <= tol,
            leaf_equality: None,
            tol,
        }
    }

    /// The bound held within tolerance.
    pub fn bound_respected(&self) -> bool {
        self.slack >= -self.tol
    }

    /// Bound held and predicted equality matched observed equality.
    pub fn is_consistent(&self) -> bool {
        self.bound_respected() && self.equality_predicted == self.equality_observed
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// Compares `‖D‖` with `‖D − uv‖ + f(α)`. Equality is predicted iff
/// `α = 0` and `d⁺(u) = d⁻(v) = 1`.
pub fn arc_deletion_report(d: &Digraph, u: usize, v: usize, alpha: AlphaParam, tol: f64) -> Result<DeletionReport> {
    check_tol(tol)?;
    let after = d.delete_arc(u, v)?;
    let predicted = alpha.is_zero() && d.out_degree(u)? == 1 && d.in_degree(v)? == 1;
    Ok(DeletionReport::build(
        DeletionKind::Arc,
        DeletionTarget::Arc { tail: u, head: v },
        alpha,
        trace_norm(d, alpha)?,
        trace_norm(&after, alpha)?,
        arc_bound(alpha),
        predicted,
        tol,
    ))
}

/// Deletes a leaf `u`. Equality is predicted iff `α = 0` and either
/// `d⁺(u) = d⁻(v) = 1` or `d⁻(u) = d⁺(v) = 1`, with `v` the neighbour.
pub fn leaf_deletion_report(d: &Digraph, u: usize, alpha: AlphaParam, tol: f64) -> Result<DeletionReport> {
    check_tol(tol)?;
    if !d.is_leaf(u)? {
        return Err(Error::input(format!("vertex {u} is not a leaf")));
    }
    let outs = d.out_neighbours(u)?;
    let ins = d.in_neighbours(u)?;
    let case = if let [v] = outs[..] {
        (d.in_degree(v)? == 1).then_some(LeafEquality::OutIn)
    } else {
        let v = ins[0];
        (d.out_degree(v)? == 1).then_some(LeafEquality::InOut)
    };
    let leaf_equality = case.filter(|_| alpha.is_zero());
    let mut report = DeletionReport::build(
        DeletionKind::LeafVertex,
        DeletionTarget::Vertex { vertex: u },
        alpha,
        trace_norm(d, alpha)?,
        trace_norm(&d.delete_vertex(u)?, alpha)?,
        arc_bound(alpha),
        leaf_equality.is_some(),
        tol,
    );
    report.leaf_equality = leaf_equality;
    Ok(report)
}

/// Deletes a nonleaf `u` with bound `d(u)·f(α)`. Equality is predicted iff
/// `α = 0`, `d⁺(u) = d⁻(u) = 1`, and with `w₁ → u → w₂` also
/// `d⁺(w₁) = 1` and `d⁻(w₂) = 1`.
pub fn nonleaf_deletion_report(d: &Digraph, u: usize, alpha: AlphaParam, tol: f64) -> Result<DeletionReport> {
    check_tol(tol)?;
    if !d.is_nonleaf(u)? {
        return Err(Error::input(format!("vertex {u} is not a nonleaf")));
    }
    let outs = d.out_neighbours(u)?;
    let ins = d.in_neighbours(u)?;
    let total = outs.len() + ins.len();
    let predicted = alpha.is_zero()
        && match (&ins[..], &outs[..]) {
            (&[w1], &[w2]) => d.out_degree(w1)? == 1 && d.in_degree(w2)? == 1,
            _ => false,
        };
    Ok(DeletionReport::build(
        DeletionKind::NonleafVertex,
        DeletionTarget::Vertex { vertex: u },
        alpha,
        trace_norm(d, alpha)?,
        trace_norm(&d.delete_vertex(u)?, alpha)?,
        total as f64 * arc_bound(alpha),
        predicted,
        tol,
    ))
}

/// Leaf or nonleaf report depending on the degree of `u`; isolated vertices are rejected.
pub fn vertex_deletion_report(d: &Digraph, u: usize, alpha: AlphaParam, tol: f64) -> Result<DeletionReport> {
    match d.total_degree(u)? {
        0 => Err(Error::input(format!("vertex {u} is isolated"))),
        1 => leaf_deletion_report(d, u, alpha, tol),
        _ => nonleaf_deletion_report(d, u, alpha, tol),
    }
}

/// One arc report per arc, arcs in lexicographic order.
pub fn all_arc_reports(d: &Digraph, alpha: AlphaParam, tol: f64) -> Result<Vec<DeletionReport>> {
    check_tol(tol)?;
    // The undeleted norm is shared by every report.
    let before = trace_norm(d, alpha)?;
    let deg = d.degrees();
    d.arcs()
        .iter()
        .map(|&(u, v)| {
            let after = trace_norm(&d.delete_arc(u, v)?, alpha)?;
            let predicted = alpha.is_zero() && deg.out_degree[u] == 1 && deg.in_degree[v] == 1;
            Ok(DeletionReport::build(
                DeletionKind::Arc,
                DeletionTarget::Arc { tail: u, head: v },
                alpha,
                before,
                after,
                arc_bound(alpha),
                predicted,
                tol,
            ))
        })
        .collect()
}
