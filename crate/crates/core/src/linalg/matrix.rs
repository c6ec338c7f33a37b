use num_complex::Complex64;

use super::LinalgError;

/// Largest dimension accepted by the public constructors.
pub const MAX_DIM: usize = 1024;

fn check_dim(n: usize) -> Result<(), LinalgError> {
    if n == 0 {
        return Err(LinalgError::Empty);
    }
    if n > MAX_DIM {
        return Err(LinalgError::TooLarge { n, max: MAX_DIM });
    }
    Ok(())
}

/// Dense real symmetric matrix, stored in full row-major form.
///
/// Symmetry is exact: every constructor either mirrors the upper triangle or
/// rejects input with `a[i][j] != a[j][i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Result<Self, LinalgError> {
        check_dim(n)?;
        Ok(Self {
            n,
            data: vec![0.0; n * n],
        })
    }

    pub fn identity(n: usize) -> Result<Self, LinalgError> {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn diagonal(values: &[f64]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(values.len())?;
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(LinalgError::NonFinite { i, j: i });
            }
            m.data[i * m.n + i] = v;
        }
        Ok(m)
    }

    /// Builds a matrix by evaluating `f(i, j)` on the upper triangle (`i <= j`)
    /// and mirroring it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self, LinalgError> {
        check_dim(n)?;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                if !v.is_finite() {
                    return Err(LinalgError::NonFinite { i, j });
                }
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Ok(Self { n, data })
    }

    /// Validates a full row-major buffer for exact symmetry.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self, LinalgError> {
        check_dim(n)?;
        if data.len() != n * n {
            return Err(LinalgError::WrongLength {
                expected: n * n,
                found: data.len(),
            });
        }
        for i in 0..n {
            for j in i..n {
                let a = data[i * n + j];
                if !a.is_finite() {
                    return Err(LinalgError::NonFinite { i, j });
                }
                if a != data[j * n + i] {
                    return Err(LinalgError::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(LinalgError::WrongLength {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(n, data)
    }

    /// Unchecked construction for internal buffers that are symmetric by
    /// construction (may exceed `MAX_DIM`, e.g. the Hermitian embedding).
    pub(crate) fn from_raw(n: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn diagonal_entries(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_diagonal(&self) -> bool {
        self.first_off_diagonal().is_none()
    }

    pub(crate) fn first_off_diagonal(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != 0.0 {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `self + t * I`.
    pub fn shifted(&self, t: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] += t;
        }
        out
    }

    /// Entrywise `self + c * other`.
    pub fn add_scaled(&self, other: &SymmetricMatrix, c: f64) -> Result<Self, LinalgError> {
        if self.n != other.n {
            return Err(LinalgError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + c * b)
            .collect();
        Ok(Self { n: self.n, data })
    }

    /// `x^T M x` for a real vector.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| x[i] * self.row(i).iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
            .sum()
    }
}

/// Dense complex Hermitian matrix with a real diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Result<Self, LinalgError> {
        check_dim(n)?;
        Ok(Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        })
    }

    /// Evaluates `f(i, j)` on the upper triangle and fills the lower triangle
    /// with conjugates. Diagonal values must be real.
    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Complex64,
    ) -> Result<Self, LinalgError> {
        check_dim(n)?;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in i..n {
                let z = f(i, j);
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(LinalgError::NonFinite { i, j });
                }
                if i == j && z.im != 0.0 {
                    return Err(LinalgError::ComplexDiagonal { i });
                }
                data[i * n + j] = z;
                data[j * n + i] = z.conj();
            }
        }
        Ok(Self { n, data })
    }

    /// Validates a full row-major buffer for exact Hermitian symmetry.
    pub fn from_row_major(n: usize, data: Vec<Complex64>) -> Result<Self, LinalgError> {
        check_dim(n)?;
        if data.len() != n * n {
            return Err(LinalgError::WrongLength {
                expected: n * n,
                found: data.len(),
            });
        }
        for i in 0..n {
            if data[i * n + i].im != 0.0 {
                return Err(LinalgError::ComplexDiagonal { i });
            }
            for j in i..n {
                let z = data[i * n + j];
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(LinalgError::NonFinite { i, j });
                }
                if z != data[j * n + i].conj() {
                    return Err(LinalgError::NotHermitian { i, j });
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn from_real(m: &SymmetricMatrix) -> Self {
        Self {
            n: m.n,
            data: m.data.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    pub fn real_part(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_raw(self.n, self.data.iter().map(|z| z.re).collect())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re).sum()
    }

    /// The real symmetric embedding `[[X, -Y], [Y, X]]` of `X + iY`.
    ///
    /// Its spectrum is the spectrum of `self` with every eigenvalue doubled.
    pub fn real_embedding(&self) -> SymmetricMatrix {
        let n = self.n;
        let m = 2 * n;
        let mut data = vec![0.0; m * m];
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                data[i * m + j] = z.re;
                data[(i + n) * m + (j + n)] = z.re;
                data[i * m + (j + n)] = -z.im;
                data[(i + n) * m + j] = z.im;
            }
        }
        SymmetricMatrix::from_raw(m, data)
    }
}

/// Entrywise `B + c A` for a real diagonal `B`.
pub fn scaled_combination(
    b: &SymmetricMatrix,
    a: &HermitianMatrix,
    c: f64,
) -> Result<HermitianMatrix, LinalgError> {
    if b.n() != a.n() {
        return Err(LinalgError::DimensionMismatch {
            left: b.n(),
            right: a.n(),
        });
    }
    if let Some((i, j)) = b.first_off_diagonal() {
        return Err(LinalgError::NotDiagonal { i, j });
    }
    let n = a.n();
    let mut data: Vec<Complex64> = a.data.iter().map(|z| z * c).collect();
    for i in 0..n {
        // c * a_ii is real; keep the imaginary part exactly zero.
        data[i * n + i] = Complex64::new(b.get(i, i) + c * a.get(i, i).re, 0.0);
    }
    Ok(HermitianMatrix { n, data })
}
