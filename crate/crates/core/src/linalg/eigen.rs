//! Hermitian eigen-decomposition by cyclic complex Jacobi rotations.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Entrywise `|M − M†|` allowed before a matrix is rejected as non-Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Convergence threshold on the off-diagonal Frobenius norm (scaled by
/// `max(1, ‖M‖_F)`).
const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with matching unit eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
    pub sweeps: usize,
}

impl HermitianEigen {
    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }

    /// `V f(Λ) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.vectors.dim();
        let weights: Vec<f64> = self.values.iter().map(|&v| f(v)).collect();
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * self.vectors[(j, k)].conj() * weights[k])
                .sum()
        })
    }
}

fn checked_symmetrize(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let drift = m.hermitian_drift();
    if !(drift <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian { drift });
    }
    Ok(m.symmetrized())
}

pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<HermitianEigen> {
    let mut a = checked_symmetrize(m)?;
    let mut v = ComplexMatrix::identity(a.dim());
    let sweeps = jacobi(&mut a, Some(&mut v));

    let n = a.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen {
        values,
        vectors,
        sweeps,
    })
}

/// All eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let mut a = checked_symmetrize(m)?;
    jacobi(&mut a, None);
    let mut values = a.diagonal_real();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

pub fn min_eigenvalue(m: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?[0])
}

/// Whether the smallest eigenvalue of `m` lies strictly below `threshold`.
///
/// Decided by attempting a Cholesky factorization of `m − threshold·I`, which
/// succeeds exactly when that shifted matrix is positive definite.
pub fn has_eigenvalue_below(m: &ComplexMatrix, threshold: f64) -> Result<bool> {
    let a = checked_symmetrize(m)?;
    let n = a.dim();
    let mut l = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let mut d = a[(j, j)].re - threshold;
        for k in 0..j {
            d -= l[j * n + k].norm_sqr();
        }
        if !(d > 0.0) {
            return Ok(true);
        }
        let ljj = d.sqrt();
        l[j * n + j] = Complex64::new(ljj, 0.0);
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = s / ljj;
        }
    }
    Ok(false)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Diagonalizes the Hermitian matrix `a` in place; accumulates rotations into
/// `vectors` when given. Returns the number of sweeps performed.
fn jacobi(a: &mut ComplexMatrix, mut vectors: Option<&mut ComplexMatrix>) -> usize {
    let n = a.dim();
    let scale = a
        .as_slice()
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    let tol = OFF_DIAGONAL_TOL * scale;

    for sweep in 0..MAX_SWEEPS {
        if off_diagonal_norm(a) <= tol {
            return sweep;
        }
        for p in 0..n {
            for q in p + 1..n {
                let h = a[(p, q)];
                let abs_h = h.norm();
                if abs_h < f64::MIN_POSITIVE {
                    continue;
                }
                // Phase e^{−iα} on column q makes the (p, q) entry real and
                // positive; a real rotation then annihilates it.
                let phase = (h / abs_h).conj();
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * abs_h);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = phase * (-s);
                let g_qq = phase * c;

                rotate_columns(a, p, q, g_pp, g_pq, g_qp, g_qq);
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(app - t * abs_h, 0.0);
                a[(q, q)] = Complex64::new(aqq + t * abs_h, 0.0);

                if let Some(v) = vectors.as_deref_mut() {
                    rotate_columns(v, p, q, g_pp, g_pq, g_qp, g_qq);
                }
            }
        }
    }
    MAX_SWEEPS
}

#[inline]
fn rotate_columns(
    m: &mut ComplexMatrix,
    p: usize,
    q: usize,
    g_pp: Complex64,
    g_pq: Complex64,
    g_qp: Complex64,
    g_qq: Complex64,
) {
    for k in 0..m.dim() {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * g_pp + mkq * g_qp;
        m[(k, q)] = mkp * g_pq + mkq * g_qq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{partial_transpose, Bipartition, QubitRegisterShape};
    use proptest::prelude::*;

    fn random_hermitian(dim: usize, entries: &[(f64, f64)]) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(dim);
        let mut it = entries.iter();
        for i in 0..dim {
            for j in i..dim {
                let &(re, im) = it.next().unwrap();
                if i == j {
                    m[(i, i)] = Complex64::new(re, 0.0);
                } else {
                    m[(i, j)] = Complex64::new(re, im);
                    m[(j, i)] = Complex64::new(re, -im);
                }
            }
        }
        m
    }

    /// Roots of the characteristic polynomial (Faddeev–LeVerrier coefficients)
    /// by Durand–Kerner iteration, independent of the Jacobi path.
    fn char_poly_roots(m: &ComplexMatrix) -> Vec<f64> {
        let n = m.dim();
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        let mut mk = ComplexMatrix::zeros(n);
        let id = ComplexMatrix::identity(n);
        for k in 1..=n {
            let shifted = &mk + &id.map(|z| z * coeffs[k - 1]);
            mk = m * &shifted;
            coeffs.push(-mk.trace() / k as f64);
        }
        let mut roots: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new(0.4, 0.9).powu(k as u32))
            .collect();
        let eval = |z: Complex64| coeffs.iter().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
        for _ in 0..500 {
            for i in 0..n {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        denom *= roots[i] - roots[j];
                    }
                }
                let step = eval(roots[i]) / denom;
                roots[i] -= step;
            }
        }
        let mut re: Vec<f64> = roots.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        re
    }

    #[test]
    fn diagonal_input_sorted() {
        let m = ComplexMatrix::from_real_diagonal(&[3.0, 1.0, 2.0]);
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn rank_one_projector() {
        let m = ComplexMatrix::from_real_rows(&[
            &[0.5, 0.0, 0.0, 0.5],
            &[0.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 0.0],
            &[0.5, 0.0, 0.0, 0.5],
        ])
        .unwrap();
        let ev = hermitian_eigenvalues(&m).unwrap();
        for (got, want) in ev.iter().zip([0.0, 0.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = [h, 0.0, 0.0, h].map(|x| Complex64::new(x, 0.0));
        let rho = ComplexMatrix::outer(&v, &v).unwrap();
        let shape = QubitRegisterShape::new(2).unwrap();
        let pt = partial_transpose(&rho, &shape, &Bipartition::single(2, 1).unwrap()).unwrap();
        let ev = hermitian_eigenvalues(&pt).unwrap();
        for (got, want) in ev.iter().zip([-0.5, 0.5, 0.5, 0.5]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!((min_eigenvalue(&pt).unwrap() + 0.5).abs() < 1e-12);
        assert!(min_eigenvalue(&ComplexMatrix::identity(4)).unwrap() == 1.0);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]).unwrap();
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::NotHermitian { .. })
        ));
        assert!(has_eigenvalue_below(&m, 0.0).is_err());
    }

    #[test]
    fn tiny_drift_is_symmetrized() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = Complex64::new(1e-12, 0.0);
        assert!(hermitian_eigenvalues(&m).is_ok());
    }

    #[test]
    fn two_by_two_closed_form() {
        // λ = (a+d)/2 ± sqrt(((a−d)/2)² + |b|²)
        let m = random_hermitian(2, &[(0.3, 0.0), (0.2, -0.7), (-1.1, 0.0)]);
        let mean = (0.3 - 1.1) / 2.0;
        let rad = (((0.3 + 1.1) / 2.0_f64).powi(2) + 0.04 + 0.49).sqrt();
        let ev = hermitian_eigenvalues(&m).unwrap();
        assert!((ev[0] - (mean - rad)).abs() < 1e-12);
        assert!((ev[1] - (mean + rad)).abs() < 1e-12);
    }

    #[test]
    fn vectors_reconstruct_matrix() {
        let entries: Vec<(f64, f64)> = (0..36)
            .map(|k| ((k as f64 * 0.77).sin(), (k as f64 * 1.31).cos()))
            .collect();
        let m = random_hermitian(8, &entries);
        let eig = hermitian_eigen(&m).unwrap();
        assert!(eig.reconstruct_with(|x| x).max_abs_diff(&m) < 1e-12);
        let vv = &eig.vectors.dagger() * &eig.vectors;
        assert!(vv.max_abs_diff(&ComplexMatrix::identity(8)) < 1e-12);
    }

    #[test]
    fn dimension_32_is_accurate() {
        let entries: Vec<(f64, f64)> = (0..32 * 33 / 2)
            .map(|k| ((k as f64 * 0.377).sin(), (k as f64 * 0.911).cos()))
            .collect();
        let m = random_hermitian(32, &entries);
        let eig = hermitian_eigen(&m).unwrap();
        assert!(eig.reconstruct_with(|x| x).max_abs_diff(&m) < 1e-10);
        let sum: f64 = eig.values.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-10);
    }

    proptest! {
        #[test]
        fn matches_characteristic_polynomial(
            dim in 2usize..=4,
            entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 10),
        ) {
            let m = random_hermitian(dim, &entries);
            let ev = hermitian_eigenvalues(&m).unwrap();
            let oracle = char_poly_roots(&m);
            for (a, b) in ev.iter().zip(&oracle) {
                prop_assert!((a - b).abs() < 1e-8, "{ev:?} vs {oracle:?}");
            }
            let sum: f64 = ev.iter().sum();
            prop_assert!((sum - m.trace().re).abs() < 1e-10);
        }

        #[test]
        fn cholesky_test_agrees_with_spectrum(
            entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 36),
            shift in -2.5f64..2.5,
        ) {
            let m = random_hermitian(8, &entries);
            let min = min_eigenvalue(&m).unwrap();
            prop_assume!((min - shift).abs() > 1e-9);
            prop_assert_eq!(has_eigenvalue_below(&m, shift).unwrap(), min < shift);
        }
    }
}
