use serde::Serialize;

/// Default gap below which two eigenvalues count as equal.
pub const DEFAULT_DISTINCT_TOL: f64 = 1e-7;

/// A group of numerically equal eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cluster {
    /// Mean of the members.
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues sorted in descending order together with their clusters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    clusters: Vec<Cluster>,
    tolerance: f64,
}

impl Spectrum {
    /// Sorts `values` descending and clusters them at `tolerance`.
    pub fn from_values(mut values: Vec<f64>, tolerance: f64) -> Spectrum {
        values.sort_by(|a, b| b.total_cmp(a));
        let clusters = cluster_distinct(&values, tolerance);
        Spectrum {
            values,
            clusters,
            tolerance,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of distinct eigenvalues.
    pub fn distinct_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Sum of absolute values, the energy of the underlying matrix.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.last().copied()
    }
}

/// Greedy gap clustering of descending values: a new cluster starts whenever
/// the gap to the previous value is at least `tol`.
pub fn cluster_distinct(values: &[f64], tol: f64) -> Vec<Cluster> {
    let mut clusters = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] >= tol {
            let members = &values[start..i];
            clusters.push(Cluster {
                value: members.iter().sum::<f64>() / members.len() as f64,
                multiplicity: members.len(),
            });
            start = i;
        }
    }
    clusters
}
