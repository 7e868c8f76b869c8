//! Cyclic Jacobi eigenvalue solver for dense symmetric matrices.

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the symmetric `n x n` row-major matrix `a`, unsorted.
///
/// Sweeps until the off-diagonal Frobenius norm drops to
/// `1e-12 * n * max(1, max |a_ij|)`.
///
/// # Panics
///
/// If `a.len() != n * n`.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    if n == 0 {
        return Vec::new();
    }
    let scale = a.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let tolerance = 1e-12 * n as f64 * scale;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) <= tolerance {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sum.sqrt()
}
