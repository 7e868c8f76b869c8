mod common;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nsgraph::eigen::symmetric_eigenvalues;
use nsgraph::indices::oracle;
use nsgraph::QuotientMatrix;

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn reference(a: &[f64], n: usize) -> Vec<f64> {
    let m = DMatrix::from_row_slice(n, n, a);
    sorted(SymmetricEigen::new(m).eigenvalues.iter().copied().collect())
}

fn assert_close(x: &[f64], y: &[f64], tol: f64) {
    assert_eq!(x.len(), y.len());
    for (a, b) in x.iter().zip(y) {
        assert!((a - b).abs() < tol, "{x:?} vs {y:?}");
    }
}

#[test]
fn jacobi_matches_nalgebra_on_random_dense_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let n = rng.random_range(1..30);
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = rng.random_range(-5.0..5.0);
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let ours = sorted(symmetric_eigenvalues(a.clone(), n));
        assert_close(&ours, &reference(&a, n), 1e-9);
    }
}

#[test]
fn adjacency_spectra_match_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let n = rng.random_range(2..45);
        let g = common::random_graph(&mut rng, n, 0.3);
        let ours = oracle::spectrum(&g);
        assert_close(ours.values(), &reference(&g.adjacency_matrix(), n), 1e-9);
    }
}

#[test]
fn symmetrized_quotient_matches_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let a = common::random_sequence(&mut rng, 60);
        let q = QuotientMatrix::new(&a);
        let ours = sorted(q.eigenvalues());
        assert_close(&ours, &reference(&q.symmetrized(), q.dim()), 1e-9);
    }
}
