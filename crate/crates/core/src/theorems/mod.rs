//! Mechanical verification of the identities linking a graph's Randić
//! spectrum to its normalized signless Laplacian, its subdivision and its
//! distinct-eigenvalue count.
//!
//! Every verifier returns a [`VerificationReport`]. Residuals in
//! [`VerificationReport::residuals`] gate the verdict; values in
//! [`VerificationReport::diagnostics`] are reported only.
//!
//! # Subdivision identities
//!
//! With `n` vertices, `m` edges, `φ_M(G, λ) = det(λI - M)` and `Q = I + R`
//! the normalized signless Laplacian:
//!
//! ```text
//! 2ⁿ λⁿ φ_R(S(G), λ) = λᵐ φ_Q(G, 2λ²)
//! ```
//!
//! Consequently the Randić eigenvalues of `S(G)` are `±√(θ/2)` over the
//! eigenvalues `θ` of `Q`, padded with `m - n` zeros (or with `n - m` zeros
//! removed), and `RE(S(G)) = √2 Σ √θ`.
//!
//! # Distinct eigenvalues
//!
//! A connected graph with `m` edges has exactly the distinct Randić
//! eigenvalues `1, ρ_2, ..., ρ_k` iff
//!
//! ```text
//! ∏ (R - ρ_i I) = c ααᵀ,   c = ∏ (1 - ρ_i) / 2m,   α = (√d_1, ..., √d_n)
//! ```
//!
//! with the product nonzero. For `k = 2` this forces a complete graph; for
//! `k = 3` it reduces to local degree and common-neighbour conditions, and
//! a regular graph has `k = 3` exactly when it is strongly regular.

mod scan;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    matrix_polynomial, outer_product, Polynomial, Spectrum, SymMatrix, DEFAULT_DISTINCT_TOL,
};
use crate::spectra::{
    normalized_signless, perron_vector, randic_matrix, randic_spectrum, BOUND_SLACK,
};

pub use scan::{
    is_subdivided_star, scan_small_graphs, ClaimTally, Counterexample, EnergyRecord, ScanOptions,
    ScanSummary, CLAIMS,
};

/// Default verdict tolerance for a graph of order `n`: `n² · 1e-8`.
pub fn default_verdict_tolerance(order: usize) -> f64 {
    (order * order) as f64 * 1e-8
}

/// Tolerances used by the verifiers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Gap below which eigenvalues are clustered together.
    pub distinct: f64,
    /// Verdict threshold; `None` means [`default_verdict_tolerance`].
    pub verdict: Option<f64>,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            distinct: DEFAULT_DISTINCT_TOL,
            verdict: None,
        }
    }
}

impl Tolerances {
    pub fn with_verdict(verdict: f64) -> Tolerances {
        Tolerances {
            verdict: Some(verdict),
            ..Tolerances::default()
        }
    }

    pub fn verdict_for(&self, order: usize) -> f64 {
        self.verdict.unwrap_or_else(|| default_verdict_tolerance(order))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Measurement {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

/// Outcome of one check on one graph.
///
/// `passed` holds iff every residual is below `tolerance` and every
/// condition holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub residuals: Vec<Measurement>,
    pub conditions: Vec<Condition>,
    pub diagnostics: Vec<Measurement>,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
}

impl VerificationReport {
    pub fn residual(&self, name: &str) -> Option<f64> {
        find(&self.residuals, name)
    }

    pub fn diagnostic(&self, name: &str) -> Option<f64> {
        find(&self.diagnostics, name)
    }

    /// Largest gating residual.
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|m| m.value).fold(0.0, f64::max)
    }
}

fn find(list: &[Measurement], name: &str) -> Option<f64> {
    list.iter().find(|m| m.name == name).map(|m| m.value)
}

struct ReportBuilder {
    report: VerificationReport,
}

impl ReportBuilder {
    fn new(check_name: &str, tolerance: f64) -> ReportBuilder {
        ReportBuilder {
            report: VerificationReport {
                check_name: check_name.to_owned(),
                residuals: Vec::new(),
                conditions: Vec::new(),
                diagnostics: Vec::new(),
                tolerance,
                passed: false,
                detail: String::new(),
            },
        }
    }

    fn residual(mut self, name: &str, value: f64) -> Self {
        self.report.residuals.push(Measurement {
            name: name.to_owned(),
            value,
        });
        self
    }

    fn condition(mut self, name: &str, holds: bool) -> Self {
        self.report.conditions.push(Condition {
            name: name.to_owned(),
            holds,
        });
        self
    }

    fn diagnostic(mut self, name: &str, value: f64) -> Self {
        self.report.diagnostics.push(Measurement {
            name: name.to_owned(),
            value,
        });
        self
    }

    fn finish(mut self, detail: String) -> VerificationReport {
        let r = &mut self.report;
        // NaN residuals fail: the comparison is false.
        r.passed = r.residuals.iter().all(|m| m.value < r.tolerance)
            && r.conditions.iter().all(|c| c.holds);
        r.detail = detail;
        self.report
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Clamps eigenvalues of the positive semidefinite `Q` before a square
/// root: values within [`BOUND_SLACK`] of zero become exactly zero, since
/// the square root would turn rounding noise of 1e-16 into 1e-8.
fn clamp_nonnegative(theta: &[f64]) -> Result<Vec<f64>> {
    theta
        .iter()
        .map(|&t| {
            if t < -BOUND_SLACK {
                Err(Error::NegativeEigenvalue(t))
            } else if t <= BOUND_SLACK {
                Ok(0.0)
            } else {
                Ok(t)
            }
        })
        .collect()
}

/// Spectra consumed by the subdivision checks.
#[derive(Debug, Clone)]
pub(crate) struct SubdivisionData {
    order: usize,
    size: usize,
    /// Eigenvalues of `I + R(G)`, descending.
    signless: Vec<f64>,
    /// Eigenvalues of `R(S(G))`, descending.
    subdivided: Vec<f64>,
}

impl SubdivisionData {
    pub(crate) fn compute(g: &Graph, signless: Option<&Spectrum>, distinct: f64) -> Result<Self> {
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        if g.size() == 0 {
            return Err(Error::NoEdges);
        }
        let signless = match signless {
            Some(s) => s.values().to_vec(),
            None => crate::linalg::eigenvalues(&normalized_signless(g)?, distinct)?
                .values()
                .to_vec(),
        };
        let subdivided = randic_spectrum(&g.subdivision(), distinct)?.values().to_vec();
        Ok(SubdivisionData {
            order: g.order(),
            size: g.size(),
            signless,
            subdivided,
        })
    }

    fn charpoly_report(&self, tol: f64) -> VerificationReport {
        let (n, m) = (self.order, self.size);
        let phi_sub = Polynomial::from_roots(&self.subdivided);
        let phi_q = Polynomial::from_roots(&self.signless);

        let lhs = phi_sub.shift(n).scale(2f64.powi(n as i32));
        let rhs = phi_q.substitute_quadratic(2.0).shift(m);
        let cross = lhs.scaled_deviation(&rhs);

        // φ_Q(G, λ) = Σ a_i λ^(n-i)  ⇒  φ_R(S(G), λ) = Σ 2^(-i) a_i λ^(m+n-2i).
        let mut expected = vec![0.0; n + m + 1];
        let mut stray: f64 = 0.0;
        for i in 0..=n {
            let term = phi_q.coefficient(n - i) * 2f64.powi(-(i as i32));
            match (m + n).checked_sub(2 * i) {
                Some(degree) => expected[degree] = term,
                None => stray = stray.max(term.abs()),
            }
        }
        let expected = Polynomial::new(expected);
        let scale = phi_sub.max_abs_coefficient().max(expected.max_abs_coefficient());
        let coefficient_form = phi_sub.scaled_deviation(&expected).max(stray / scale);

        ReportBuilder::new("subdivision_charpoly", tol)
            .residual("cross_multiplied", cross)
            .residual("coefficient_form", coefficient_form)
            .diagnostic("order", n as f64)
            .diagnostic("size", m as f64)
            .finish(format!(
                "2^{n}·λ^{n}·φ_R(S(G)) vs λ^{m}·φ_Q(G, 2λ²): scaled deviation {cross:e}; \
                 coefficients of φ_R(S(G)) vs 2^(-i)·a_i at degree {m}+{n}-2i: {coefficient_form:e}"
            ))
    }

    fn correspondence_report(&self, tol: f64) -> Result<VerificationReport> {
        let (n, m) = (self.order, self.size);
        let theta = clamp_nonnegative(&self.signless)?;
        let mut predicted: Vec<f64> = theta
            .iter()
            .flat_map(|&t| {
                let r = (t / 2.0).sqrt();
                [r, -r]
            })
            .collect();
        let mut dropped: f64 = 0.0;
        if m >= n {
            predicted.extend(std::iter::repeat_n(0.0, m - n));
        } else {
            predicted.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
            dropped = predicted.drain(..n - m).map(f64::abs).fold(0.0, f64::max);
        }
        predicted.sort_by(|a, b| b.total_cmp(a));

        let deviation = predicted
            .iter()
            .zip(&self.subdivided)
            .map(|(p, s)| (p - s).abs())
            .fold(0.0, f64::max);
        Ok(ReportBuilder::new("eigenvalue_correspondence", tol)
            .residual("max_entry_deviation", deviation)
            .residual("dropped_zero_magnitude", dropped)
            .condition("lengths_match", predicted.len() == self.subdivided.len())
            .diagnostic("zero_adjustment", m as f64 - n as f64)
            .finish(format!(
                "{{±√(θ/2)}} adjusted by {} zeros vs the {} Randić eigenvalues of S(G): \
                 max deviation {deviation:e}",
                m as i64 - n as i64,
                self.subdivided.len()
            )))
    }

    fn energy_report(&self, tol: f64) -> Result<VerificationReport> {
        let theta = clamp_nonnegative(&self.signless)?;
        let direct: f64 = self.subdivided.iter().map(|x| x.abs()).sum();
        let formula = 2f64.sqrt() * theta.iter().map(|t| t.sqrt()).sum::<f64>();
        let gap = (direct - formula).abs();
        Ok(ReportBuilder::new("subdivision_energy", tol)
            .residual("energy_gap", gap)
            .diagnostic("randic_energy_of_subdivision", direct)
            .diagnostic("sqrt2_sum_sqrt_theta", formula)
            .finish(format!("RE(S(G)) = {direct} vs √2·Σ√θ = {formula}")))
    }
}

/// Checks `2ⁿ λⁿ φ_R(S(G), λ) = λᵐ φ_Q(G, 2λ²)` coefficient-wise, together
/// with the explicit coefficient form of `φ_R(S(G))`.
///
/// Characteristic polynomials are expanded from eigenvalues. Residuals are
/// scaled by the largest coefficient magnitude.
pub fn verify_subdivision_charpoly(g: &Graph, tol: &Tolerances) -> Result<VerificationReport> {
    let data = SubdivisionData::compute(g, None, tol.distinct)?;
    Ok(data.charpoly_report(tol.verdict_for(g.order())))
}

/// Compares the Randić spectrum of `S(G)` with `±√(θ/2)` over the
/// normalized signless eigenvalues of `G`, plus `m - n` zeros when `m >= n`
/// or with `n - m` zeros removed when `m < n`.
pub fn verify_eigenvalue_correspondence(
    g: &Graph,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let data = SubdivisionData::compute(g, None, tol.distinct)?;
    data.correspondence_report(tol.verdict_for(g.order()))
}

/// `|RE(S(G)) - √2 Σ √θ_i|` against the tolerance.
pub fn subdivision_energy_check(g: &Graph, tol: &Tolerances) -> Result<VerificationReport> {
    let data = SubdivisionData::compute(g, None, tol.distinct)?;
    data.energy_report(tol.verdict_for(g.order()))
}

/// Number of distinct Randić eigenvalues of a connected graph.
pub fn classify_distinct_count(g: &Graph, distinct_tol: f64) -> Result<usize> {
    require_connected(g)?;
    Ok(randic_spectrum(g, distinct_tol)?.distinct_count())
}

/// Non-unit cluster representatives `ρ_2, ..., ρ_k` of a connected graph's
/// Randić spectrum. The top cluster is the Perron eigenvalue 1.
pub fn non_unit_eigenvalues(spectrum: &Spectrum) -> Vec<f64> {
    spectrum.clusters().iter().skip(1).map(|c| c.value).collect()
}

fn identity_report(
    g: &Graph,
    r: &SymMatrix,
    roots: &[f64],
    distinct: f64,
    tol: f64,
) -> VerificationReport {
    let m = g.size() as f64;
    let c = roots.iter().map(|r| 1.0 - r).product::<f64>() / (2.0 * m);
    let target = outer_product(&perron_vector(g)).scale(c);
    let product = matrix_polynomial(r, roots);
    let residual = product
        .iter()
        .zip(target.as_row_major())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let product_size = product.iter().fold(0.0, |acc: f64, x| acc.max(x.abs()));

    let mut sorted = roots.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let distinct_roots = sorted.windows(2).all(|w| w[0] - w[1] >= distinct)
        && sorted.iter().all(|&r| (1.0 - r).abs() >= distinct);

    ReportBuilder::new("k_distinct_identity", tol)
        .residual("product_minus_c_alpha_alpha_t", residual)
        .condition("product_nonzero", product_size > tol)
        .condition("roots_distinct_and_not_one", distinct_roots)
        .diagnostic("k", (roots.len() + 1) as f64)
        .diagnostic("c", c)
        .diagnostic("product_max_abs", product_size)
        .finish(format!(
            "k = {}, roots {roots:?}, c = {c}: max |∏(R - ρI) - c·ααᵀ| = {residual:e}, \
             max |∏(R - ρI)| = {product_size:e}",
            roots.len() + 1
        ))
}

/// Checks `∏ (R - ρ_i I) = c ααᵀ` using the graph's own non-unit distinct
/// eigenvalues.
pub fn verify_k_distinct_identity(g: &Graph, tol: &Tolerances) -> Result<VerificationReport> {
    require_connected(g)?;
    let r = randic_matrix(g)?;
    let spectrum = crate::linalg::eigenvalues(&r, tol.distinct)?;
    if spectrum.distinct_count() < 2 {
        return Err(Error::Precondition(format!(
            "needs at least 2 distinct eigenvalues, found {}",
            spectrum.distinct_count()
        )));
    }
    let roots = non_unit_eigenvalues(&spectrum);
    Ok(identity_report(g, &r, &roots, tol.distinct, tol.verdict_for(g.order())))
}

/// Same check with caller-supplied `ρ_2, ..., ρ_k`, for negative controls.
pub fn verify_k_distinct_identity_with(
    g: &Graph,
    roots: &[f64],
    tol: &Tolerances,
) -> Result<VerificationReport> {
    require_connected(g)?;
    let r = randic_matrix(g)?;
    Ok(identity_report(g, &r, roots, tol.distinct, tol.verdict_for(g.order())))
}

/// Local conditions for a connected graph with exactly three distinct Randić
/// eigenvalues `1, ρ_2, ρ_3`, where `c = (1 - ρ_2)(1 - ρ_3) / 2m`:
///
/// 1. for every vertex `i`: `Σ_{j~i} 1/d_j = c d_i² - ρ_2 ρ_3 d_i`;
/// 2. for adjacent `i, j`: `W_ij = c d_i d_j + ρ_2 + ρ_3`;
/// 3. for nonadjacent `i, j`: `W_ij = c d_i d_j`.
///
/// Here `W_ij = Σ 1/d_k` over common neighbours `k`, which is what the
/// off-diagonal entries of `(R - ρ_2 I)(R - ρ_3 I) = c ααᵀ` give. Items 2
/// and 3 are also evaluated with the plain common-neighbour count in place
/// of `W_ij`; that reading is reported as a diagnostic and does not gate
/// the verdict (the Petersen graph violates it).
pub fn local_conditions_check(g: &Graph, tol: &Tolerances) -> Result<VerificationReport> {
    require_connected(g)?;
    let spectrum = randic_spectrum(g, tol.distinct)?;
    if spectrum.distinct_count() != 3 {
        return Err(Error::Precondition(format!(
            "local conditions require exactly 3 distinct eigenvalues, found {}",
            spectrum.distinct_count()
        )));
    }
    let roots = non_unit_eigenvalues(&spectrum);
    let (rho2, rho3) = (roots[0], roots[1]);
    let c = (1.0 - rho2) * (1.0 - rho3) / (2.0 * g.size() as f64);
    let n = g.order();
    let d = |v: usize| g.degree(v) as f64;

    let mut vertex_sum: f64 = 0.0;
    for i in 0..n {
        let lhs: f64 = g.neighbors(i).map(|j| 1.0 / d(j)).sum();
        let rhs = c * d(i) * d(i) - rho2 * rho3 * d(i);
        vertex_sum = vertex_sum.max((lhs - rhs).abs());
    }

    let (mut adj_w, mut adj_n, mut non_w, mut non_n) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for i in 0..n {
        for j in i + 1..n {
            let (count, weighted) = g.common_neighbor_stats(i, j)?;
            let count = count as f64;
            if g.is_adjacent(i, j) {
                let rhs = c * d(i) * d(j) + rho2 + rho3;
                adj_w = adj_w.max((weighted - rhs).abs());
                adj_n = adj_n.max((count - rhs).abs());
            } else {
                let rhs = c * d(i) * d(j);
                non_w = non_w.max((weighted - rhs).abs());
                non_n = non_n.max((count - rhs).abs());
            }
        }
    }

    let tol = tol.verdict_for(n);
    let verdict = |x: f64| if x < tol { "holds" } else { "fails" };
    Ok(ReportBuilder::new("local_conditions", tol)
        .residual("vertex_reciprocal_degree_sum", vertex_sum)
        .residual("adjacent_weighted_common", adj_w)
        .residual("nonadjacent_weighted_common", non_w)
        .diagnostic("adjacent_common_count", adj_n)
        .diagnostic("nonadjacent_common_count", non_n)
        .diagnostic("c", c)
        .diagnostic("rho2", rho2)
        .diagnostic("rho3", rho3)
        .finish(format!(
            "rho2 = {rho2}, rho3 = {rho3}, c = {c}; with reciprocal-degree weights: \
             adjacent {}, nonadjacent {}; with plain common-neighbour counts: \
             adjacent {} ({adj_n:e}), nonadjacent {} ({non_n:e})",
            verdict(adj_w),
            verdict(non_w),
            verdict(adj_n),
            verdict(non_n),
        )))
}

/// Parameters `(n, k, δ, σ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    /// Common neighbours of an adjacent pair.
    pub delta: usize,
    /// Common neighbours of a nonadjacent pair.
    pub sigma: usize,
}

/// Returns the parameters iff `g` is `k`-regular with `0 < k < n - 1` and
/// the common-neighbour count is constant over adjacent pairs and over
/// nonadjacent pairs.
pub fn is_strongly_regular(g: &Graph) -> Option<SrgParameters> {
    let n = g.order();
    let k = g.regular_degree()?;
    if k == 0 || k + 1 >= n {
        return None;
    }
    let (mut delta, mut sigma) = (None, None);
    for i in 0..n {
        for j in i + 1..n {
            let count = g.neighbors(i).filter(|&w| g.is_adjacent(j, w)).count();
            let slot = if g.is_adjacent(i, j) { &mut delta } else { &mut sigma };
            match *slot {
                None => *slot = Some(count),
                Some(seen) if seen != count => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParameters {
        n,
        k,
        delta: delta?,
        sigma: sigma?,
    })
}
