//! Randić matrix, normalized Laplacian and normalized signless Laplacian of a
//! graph, with their spectra, the Randić index and the Randić energy.
//!
//! For a graph without isolated vertices the Randić matrix is
//! `R = D^(-1/2) A D^(-1/2)`, so `r_ij = 1/√(d_i d_j)` on edges and zero
//! elsewhere. The normalized Laplacian is `I - R` and the normalized signless
//! Laplacian is `I + R`; their eigenvalues are `1 - ρ` and `1 + ρ` for each
//! Randić eigenvalue `ρ`, and all Randić eigenvalues lie in `[-1, 1]`.
//!
//! Every function here rejects graphs with an isolated vertex.
//! Disconnected graphs are accepted except where a vector identity needs
//! connectivity ([`perron_residual`]).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eigenvalues, Spectrum, SymMatrix};

/// Slack allowed on the `[-1, 1]` and `[0, 2]` eigenvalue bounds.
pub const BOUND_SLACK: f64 = 1e-9;

fn require_no_isolated(g: &Graph) -> Result<()> {
    match g.isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

fn inv_sqrt_degrees(g: &Graph) -> Vec<f64> {
    g.degrees().iter().map(|&d| 1.0 / (d as f64).sqrt()).collect()
}

pub fn randic_matrix(g: &Graph) -> Result<SymMatrix> {
    require_no_isolated(g)?;
    let s = inv_sqrt_degrees(g);
    Ok(SymMatrix::from_fn(g.order(), |i, j| {
        if g.is_adjacent(i, j) {
            s[i] * s[j]
        } else {
            0.0
        }
    }))
}

/// `I - R`.
pub fn normalized_laplacian(g: &Graph) -> Result<SymMatrix> {
    Ok(randic_matrix(g)?.scale(-1.0).shift_diagonal(1.0))
}

/// `I + R`.
pub fn normalized_signless(g: &Graph) -> Result<SymMatrix> {
    Ok(randic_matrix(g)?.shift_diagonal(1.0))
}

/// `(D^(-1/2) B)(D^(-1/2) B)ᵀ` from the incidence matrix `B`. Agrees with
/// [`normalized_signless`] since `B Bᵀ = D + A`.
pub fn normalized_signless_via_incidence(g: &Graph) -> Result<SymMatrix> {
    require_no_isolated(g)?;
    let b = g.incidence_matrix()?;
    let s = inv_sqrt_degrees(g);
    Ok(SymMatrix::from_fn(g.order(), |i, j| {
        let shared = (0..b.cols()).filter(|&e| b.get(i, e) == 1 && b.get(j, e) == 1).count();
        shared as f64 * s[i] * s[j]
    }))
}

/// The three spectra of a graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSpectra {
    /// Eigenvalues `ρ` of `R`.
    pub randic: Spectrum,
    /// Eigenvalues `μ` of `I - R`.
    pub norm_laplacian: Spectrum,
    /// Eigenvalues `θ` of `I + R`.
    pub norm_signless: Spectrum,
}

impl GraphSpectra {
    /// Largest deviation of the Laplacian and signless spectra from the
    /// images `1 - ρ` and `1 + ρ` of the Randić spectrum.
    ///
    /// Both spectra are sorted descending, so `μ` is matched against `ρ`
    /// read in reverse.
    pub fn relation_residual(&self) -> f64 {
        let rho = self.randic.values();
        let mu = self.norm_laplacian.values();
        let theta = self.norm_signless.values();
        let mut worst: f64 = 0.0;
        for (i, &r) in rho.iter().enumerate() {
            worst = worst.max((mu[rho.len() - 1 - i] - (1.0 - r)).abs());
            worst = worst.max((theta[i] - (1.0 + r)).abs());
        }
        worst
    }

    /// Largest violation of `-1 <= ρ <= 1` and `0 <= μ, θ <= 2`, zero when
    /// every eigenvalue is inside its interval.
    pub fn bound_violation(&self) -> f64 {
        let excess = |s: &Spectrum, lo: f64, hi: f64| {
            s.values()
                .iter()
                .map(|&x| (lo - x).max(x - hi).max(0.0))
                .fold(0.0, f64::max)
        };
        excess(&self.randic, -1.0, 1.0)
            .max(excess(&self.norm_laplacian, 0.0, 2.0))
            .max(excess(&self.norm_signless, 0.0, 2.0))
    }

    /// Largest deviation of `Σρ`, `Σμ - n`, `Σθ - n` from zero.
    pub fn trace_residual(&self) -> f64 {
        let n = self.randic.len() as f64;
        self.randic
            .sum()
            .abs()
            .max((self.norm_laplacian.sum() - n).abs())
            .max((self.norm_signless.sum() - n).abs())
    }
}

/// Eigensolves `R`, `I - R` and `I + R` independently.
pub fn spectra(g: &Graph, distinct_tol: f64) -> Result<GraphSpectra> {
    let r = randic_matrix(g)?;
    Ok(GraphSpectra {
        randic: eigenvalues(&r, distinct_tol)?,
        norm_laplacian: eigenvalues(&r.scale(-1.0).shift_diagonal(1.0), distinct_tol)?,
        norm_signless: eigenvalues(&r.shift_diagonal(1.0), distinct_tol)?,
    })
}

/// Eigenvalues of the Randić matrix alone.
pub fn randic_spectrum(g: &Graph, distinct_tol: f64) -> Result<Spectrum> {
    eigenvalues(&randic_matrix(g)?, distinct_tol)
}

/// `RE(G) = Σ |ρ_i|`.
pub fn randic_energy(g: &Graph) -> Result<f64> {
    Ok(randic_spectrum(g, crate::linalg::DEFAULT_DISTINCT_TOL)?.energy())
}

/// `Σ_{i~j} 1/√(d_i d_j)` over edges.
pub fn randic_index(g: &Graph) -> Result<f64> {
    require_no_isolated(g)?;
    let s = inv_sqrt_degrees(g);
    Ok(g.edges().iter().map(|&(u, v)| s[u] * s[v]).sum())
}

/// `α = (√d_1, ..., √d_n)`.
pub fn perron_vector(g: &Graph) -> Vec<f64> {
    g.degrees().iter().map(|&d| (d as f64).sqrt()).collect()
}

/// Max-abs-entry of `R α - α`; zero in exact arithmetic for every connected
/// graph.
pub fn perron_residual(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let r = randic_matrix(g)?;
    let alpha = perron_vector(g);
    let n = g.order();
    Ok((0..n)
        .map(|i| {
            let row: f64 = (0..n).map(|j| r.get(i, j) * alpha[j]).sum();
            (row - alpha[i]).abs()
        })
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    fn gen(kind: GraphKind, n: usize) -> Graph {
        generate(kind, n).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn randic_matrix_examples() {
        let k2 = randic_matrix(&gen(GraphKind::Complete, 2)).unwrap();
        assert_eq!(k2.as_row_major(), &[0.0, 1.0, 1.0, 0.0]);

        let p3 = randic_matrix(&gen(GraphKind::Path, 3)).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!(close(p3.as_row_major(), &[0.0, h, 0.0, h, 0.0, h, 0.0, h, 0.0], 1e-15));

        let k4 = randic_matrix(&gen(GraphKind::Complete, 4)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 0.0 } else { 1.0 / 3.0 };
                assert!((k4.get(i, j) - want).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(randic_matrix(&g), Err(Error::IsolatedVertex(2)));
        assert_eq!(randic_energy(&g), Err(Error::IsolatedVertex(2)));
        assert_eq!(randic_index(&g), Err(Error::IsolatedVertex(2)));
        assert!(spectra(&g, 1e-7).is_err());
    }

    #[test]
    fn laplacians_of_k2() {
        let k2 = gen(GraphKind::Complete, 2);
        assert_eq!(normalized_laplacian(&k2).unwrap().as_row_major(), &[1.0, -1.0, -1.0, 1.0]);
        assert_eq!(normalized_signless(&k2).unwrap().as_row_major(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn laplacians_sum_to_twice_identity() {
        let g = gen(GraphKind::Petersen, 0);
        let sum = &normalized_laplacian(&g).unwrap() + &normalized_signless(&g).unwrap();
        assert_eq!(sum, SymMatrix::identity(10).scale(2.0));
    }

    #[test]
    fn signless_matches_incidence_route() {
        for g in [gen(GraphKind::Star, 5), gen(GraphKind::Petersen, 0), gen(GraphKind::Path, 4)] {
            let direct = normalized_signless(&g).unwrap();
            let via_b = normalized_signless_via_incidence(&g).unwrap();
            assert!((&direct - &via_b).max_abs() < 1e-15);
        }
    }

    #[test]
    fn star_signless_spectrum() {
        let s = spectra(&gen(GraphKind::Star, 4), 1e-7).unwrap();
        assert!(close(s.norm_signless.values(), &[2.0, 1.0, 1.0, 0.0], 1e-12));
    }

    #[test]
    fn spectra_examples() {
        let third = 1.0 / 3.0;
        let k4 = spectra(&gen(GraphKind::Complete, 4), 1e-7).unwrap();
        assert!(close(k4.randic.values(), &[1.0, -third, -third, -third], 1e-12));

        let c4 = spectra(&gen(GraphKind::Cycle, 4), 1e-7).unwrap();
        assert!((c4.randic.min().unwrap() + 1.0).abs() < 1e-12);

        let p = spectra(&gen(GraphKind::Petersen, 0), 1e-7).unwrap();
        let mut want = vec![1.0];
        want.extend([third; 5]);
        want.extend([-2.0 * third; 4]);
        assert!(close(p.randic.values(), &want, 1e-12));
        for s in [&k4, &c4, &p] {
            assert!(s.relation_residual() < 1e-9);
            assert!(s.bound_violation() < BOUND_SLACK);
            assert!(s.trace_residual() < 1e-9);
        }
    }

    #[test]
    fn energies() {
        assert!((randic_energy(&gen(GraphKind::Complete, 2)).unwrap() - 2.0).abs() < 1e-12);
        for n in 2..=10 {
            assert!((randic_energy(&gen(GraphKind::Complete, n)).unwrap() - 2.0).abs() < 1e-12);
        }
        let sun = gen(GraphKind::Star, 5).subdivision();
        let want = 5.0 * 2f64.sqrt() + 2.0 - 2.0 * 2f64.sqrt();
        assert!((randic_energy(&sun).unwrap() - want).abs() < 1e-12);
        assert!((want - 6.242640687).abs() < 1e-9);
    }

    #[test]
    fn randic_index_examples() {
        assert!((randic_index(&gen(GraphKind::Complete, 3)).unwrap() - 1.5).abs() < 1e-15);
        assert_eq!(randic_index(&gen(GraphKind::Complete, 2)).unwrap(), 1.0);
        for n in 2..12 {
            let direct: f64 = (1..n).map(|_| 1.0 / ((n - 1) as f64).sqrt()).sum();
            let got = randic_index(&gen(GraphKind::Star, n)).unwrap();
            assert!((got - direct).abs() < 1e-12);
            assert!((got - ((n - 1) as f64).sqrt()).abs() < 1e-12);
        }
        let g = gen(GraphKind::Petersen, 0);
        let half_sum = randic_matrix(&g).unwrap().as_row_major().iter().sum::<f64>() / 2.0;
        assert!((randic_index(&g).unwrap() - half_sum).abs() < 1e-10);
    }

    #[test]
    fn perron_examples() {
        for g in [
            gen(GraphKind::Complete, 4),
            gen(GraphKind::Path, 3),
            gen(GraphKind::Star, 5).subdivision(),
        ] {
            assert!(perron_residual(&g).unwrap() < 1e-12);
        }
        assert_eq!(perron_vector(&gen(GraphKind::Path, 3))[1], 2f64.sqrt());
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(perron_residual(&two_edges), Err(Error::Disconnected));
    }
}
