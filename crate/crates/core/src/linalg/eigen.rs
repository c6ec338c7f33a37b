use serde::Serialize;

use super::{HermitianMatrix, LinalgError, SymmetricMatrix};

/// Hard cap on cyclic Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Relative off-diagonal Frobenius threshold for convergence.
const CONVERGENCE_TOL: f64 = 1e-12;

/// Eigenvalues of a Hermitian matrix, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    /// Largest off-diagonal magnitude left when the iteration stopped.
    residual: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue.
    pub fn max(&self) -> f64 {
        self.values[0]
    }

    /// Smallest eigenvalue.
    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

fn sort_descending(values: &mut [f64]) {
    values.sort_by(|a, b| b.total_cmp(a));
}

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Iterates until the off-diagonal Frobenius norm drops below
/// `1e-12 * (1 + ||M||_F)`, giving up after [`MAX_SWEEPS`] sweeps.
pub fn eigen_symmetric(m: &SymmetricMatrix) -> Result<Spectrum, LinalgError> {
    let n = m.n();
    let mut a = m.as_slice().to_vec();
    let tol = CONVERGENCE_TOL * (1.0 + m.frobenius_norm());

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += a[p * n + q] * a[p * n + q];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = off_norm(&a) < tol;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        converged = off_norm(&a) < tol;
    }

    let residual = (0..n)
        .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
        .map(|(p, q)| a[p * n + q].abs())
        .fold(0.0, f64::max);
    if !converged {
        return Err(LinalgError::NoConvergence {
            sweeps,
            residual: off_norm(&a),
        });
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    sort_descending(&mut values);
    Ok(Spectrum { values, residual })
}

/// One Jacobi rotation annihilating `a[p][q]` (`p < q`), applied to the full
/// symmetric buffer.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
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

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
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
}

/// All eigenvalues of a Hermitian matrix.
///
/// Real input goes straight to [`eigen_symmetric`]. Complex input is solved
/// through the `2n x 2n` real embedding, whose eigenvalues come in equal
/// pairs; each adjacent pair of the sorted embedded spectrum is averaged.
pub fn eigen_hermitian(m: &HermitianMatrix) -> Result<Spectrum, LinalgError> {
    if m.is_real() {
        return eigen_symmetric(&m.real_part());
    }
    let doubled = eigen_symmetric(&m.real_embedding())?;
    let values = doubled
        .values
        .chunks_exact(2)
        .map(|pair| 0.5 * (pair[0] + pair[1]))
        .collect();
    Ok(Spectrum {
        values,
        residual: doubled.residual,
    })
}
