use proptest::prelude::*;

use randic::graph::{encode_graph6, parse_graph6, Graph};
use randic::linalg::{
    cluster_distinct, eigenvalues, matrix_polynomial_residual, Polynomial, SymMatrix,
};
use randic::spectra::{normalized_laplacian, normalized_signless, randic_index, randic_matrix, spectra};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_without_isolated(max_order: usize) -> impl Strategy<Value = Graph> {
    graph(max_order).prop_filter("no isolated vertex", |g| {
        g.order() >= 2 && g.isolated_vertex().is_none()
    })
}

/// Symmetric matrices with entries in [-1, 1] scaled by 1/dim, so the
/// spectral radius is at most 1.
fn sym_matrix(max_dim: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max_dim).prop_flat_map(|dim| {
        proptest::collection::vec(-1.0f64..1.0, dim * dim).prop_map(move |raw| {
            SymMatrix::from_fn(dim, |i, j| raw[i * dim + j] / dim as f64)
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(30)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn subdivision_shape(g in graph(10)) {
        let (n, m) = (g.order(), g.size());
        let s = g.subdivision();
        prop_assert_eq!(s.order(), n + m);
        prop_assert_eq!(s.size(), 2 * m);
        let sides = s.bipartition().unwrap();
        for (u, v) in s.edges() {
            prop_assert!(sides[*u] != sides[*v]);
            prop_assert!(*u < n && *v >= n);
        }
    }

    #[test]
    fn incidence_gram_is_signless_laplacian(g in graph(9)) {
        prop_assume!(g.size() > 0);
        prop_assert_eq!(g.incidence_matrix().unwrap().gram(), g.signless_laplacian());
    }

    #[test]
    fn common_neighbors_symmetric(g in graph(9), i in 0usize..9, j in 0usize..9) {
        prop_assume!(i < g.order() && j < g.order() && i != j);
        prop_assert_eq!(g.common_neighbor_stats(i, j).unwrap(), g.common_neighbor_stats(j, i).unwrap());
    }

    #[test]
    fn eigenvalues_preserve_trace_and_frobenius(m in sym_matrix(12)) {
        let s = eigenvalues(&m, 1e-7).unwrap();
        let dim = m.dim() as f64;
        let slack = dim * 1e-10 * m.frobenius_norm().max(1.0);
        prop_assert!((s.sum() - m.trace()).abs() < slack);
        let squares: f64 = s.values().iter().map(|x| x * x).sum();
        prop_assert!((squares - m.frobenius_norm().powi(2)).abs() < slack);
        prop_assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(s.clusters().iter().map(|c| c.multiplicity).sum::<usize>(), m.dim());
    }

    #[test]
    fn cayley_hamilton(m in sym_matrix(8)) {
        let s = eigenvalues(&m, 1e-7).unwrap();
        let residual = matrix_polynomial_residual(&m, s.values(), &SymMatrix::zeros(m.dim()));
        prop_assert!(residual < (m.dim() * m.dim()) as f64 * 1e-8);
    }

    #[test]
    fn charpoly_vanishes_at_eigenvalues(m in sym_matrix(8)) {
        let s = eigenvalues(&m, 1e-7).unwrap();
        let p = Polynomial::from_roots(s.values());
        prop_assert_eq!(p.degree(), Some(m.dim()));
        for &x in s.values() {
            prop_assert!(p.eval(x).abs() < 1e-8);
        }
    }

    #[test]
    fn substitute_quadratic_has_even_support(coeffs in proptest::collection::vec(-5.0f64..5.0, 0..8), a in -3.0f64..3.0) {
        let q = Polynomial::new(coeffs).substitute_quadratic(a);
        for (k, c) in q.coefficients().iter().enumerate() {
            if k % 2 == 1 {
                prop_assert_eq!(*c, 0.0);
            }
        }
    }

    #[test]
    fn clustering_is_idempotent(groups in proptest::collection::vec((-10i32..10, 1usize..4), 1..8)) {
        let mut values: Vec<f64> = groups
            .iter()
            .flat_map(|&(centre, mult)| (0..mult).map(move |i| centre as f64 * 0.1 + i as f64 * 1e-10))
            .collect();
        values.sort_by(|a, b| b.total_cmp(a));
        let first = cluster_distinct(&values, 1e-7);
        let reps: Vec<f64> = first.iter().map(|c| c.value).collect();
        let second = cluster_distinct(&reps, 1e-7);
        prop_assert_eq!(second.len(), first.len());
        for (a, b) in first.iter().zip(&second) {
            prop_assert_eq!(a.value, b.value);
        }
        for w in reps.windows(2) {
            prop_assert!(w[0] - w[1] >= 1e-7);
        }
    }

    #[test]
    fn spectra_relations(g in graph_without_isolated(9)) {
        let s = spectra(&g, 1e-7).unwrap();
        let n = g.order() as f64;
        prop_assert!(s.relation_residual() < 1e-9);
        prop_assert!(s.bound_violation() <= 1e-9);
        prop_assert!(s.trace_residual() < n * 1e-9);
        if g.is_connected() {
            prop_assert!((s.randic.max().unwrap() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn laplacians_sum_to_two(g in graph_without_isolated(9)) {
        let sum = &normalized_laplacian(&g).unwrap() + &normalized_signless(&g).unwrap();
        prop_assert_eq!(sum, SymMatrix::identity(g.order()).scale(2.0));
    }

    #[test]
    fn randic_index_is_half_entry_sum(g in graph_without_isolated(9)) {
        let half: f64 = randic_matrix(&g).unwrap().as_row_major().iter().sum::<f64>() / 2.0;
        prop_assert!((randic_index(&g).unwrap() - half).abs() < 1e-10);
    }
}
