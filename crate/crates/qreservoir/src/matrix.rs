//! Dense complex matrices and the small-dimension linear algebra the
//! simulator runs on: Kronecker products, operator embedding, the matrix
//! exponential, Hermitian eigendecomposition and linear solves.
//!
//! Everything here targets dimensions up to 2^6, so the implementations
//! favour robustness and determinism over asymptotic speed.

use num_complex::Complex64;

use crate::error::{QrError, Result};

/// Dense complex matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
#[allow(dead_code)] // test helper
pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

impl ComplexMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = ONE;
        }
        m
    }

    /// Build from row-major data; panics if the length does not match.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length mismatch");
        Self { rows, cols, data }
    }

    /// Build from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Convenience constructor from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self {
            rows,
            cols,
            data: entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// Diagonal matrix from complex entries.
    pub fn diag(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (k, &e) in entries.iter().enumerate() {
            m.data[k * n + k] = e;
        }
        m
    }

    /// Column vector from a slice.
    pub fn col_vector(entries: &[Complex64]) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Dimension of a square matrix; panics otherwise.
    pub fn dim(&self) -> usize {
        assert!(self.is_square(), "dim() requires a square matrix");
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn all_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        out
    }

    /// Matrix-vector style application to a raw slice (length = cols).
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![ZERO; self.rows];
        for i in 0..self.rows {
            let mut acc = ZERO;
            for j in 0..self.cols {
                acc += self.data[i * self.cols + j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|k| self.data[k * self.cols + k]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Deviation from Hermiticity, max |A - A†| entrywise.
    pub fn hermiticity_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// (A + A†)/2.
    pub fn hermitize(&self) -> Self {
        self.add(&self.adjoint()).scale_re(0.5)
    }

    /// U A U†.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.adjoint())
    }

    /// Row-major vectorization as a column vector.
    pub fn vectorize(&self) -> Vec<Complex64> {
        self.data.clone()
    }

    /// Inverse of [`vectorize`](Self::vectorize) for square matrices.
    pub fn unvectorize(v: &[Complex64], dim: usize) -> Self {
        assert_eq!(v.len(), dim * dim);
        Self {
            rows: dim,
            cols: dim,
            data: v.to_vec(),
        }
    }
}

/// Kronecker product; `a` indexes the coarse blocks of the result.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ia in 0..a.rows() {
        for ja in 0..a.cols() {
            let f = a.get(ia, ja);
            if f == ZERO {
                continue;
            }
            for ib in 0..b.rows() {
                for jb in 0..b.cols() {
                    out.set(ia * b.rows() + ib, ja * b.cols() + jb, f * b.get(ib, jb));
                }
            }
        }
    }
    out
}

/// Kronecker product over an ordered list of factors.
pub fn tensor_all(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    assert!(!factors.is_empty());
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = tensor(&acc, f);
    }
    acc
}

/// Embed a single-qubit operator at `site` in an `n`-qubit register.
///
/// Site 0 carries the most significant bit of the basis index.
pub fn embed_op(op: &ComplexMatrix, site: usize, n: usize) -> Result<ComplexMatrix> {
    assert_eq!(
        (op.rows(), op.cols()),
        (2, 2),
        "embed_op takes a 2x2 operator"
    );
    if site >= n {
        return Err(QrError::SiteOutOfRange { site, n });
    }
    let left = ComplexMatrix::identity(1 << site);
    let right = ComplexMatrix::identity(1 << (n - site - 1));
    Ok(tensor(&tensor(&left, op), &right))
}

/// Embed a two-qubit operator acting on ordered sites `(a, b)` of an
/// `n`-qubit register. The operator's first tensor factor addresses site
/// `a` and its second addresses site `b`.
pub fn embed_pair(op: &ComplexMatrix, a: usize, b: usize, n: usize) -> Result<ComplexMatrix> {
    assert_eq!(
        (op.rows(), op.cols()),
        (4, 4),
        "embed_pair takes a 4x4 operator"
    );
    if a >= n {
        return Err(QrError::SiteOutOfRange { site: a, n });
    }
    if b >= n || a == b {
        return Err(QrError::SiteOutOfRange { site: b, n });
    }
    let dim = 1 << n;
    let bit = |idx: usize, site: usize| (idx >> (n - 1 - site)) & 1;
    let mut out = ComplexMatrix::zeros(dim, dim);
    for col in 0..dim {
        let (ca, cb) = (bit(col, a), bit(col, b));
        for (ra, rb) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let amp = op.get(ra * 2 + rb, ca * 2 + cb);
            if amp == ZERO {
                continue;
            }
            let mut row = col;
            row = (row & !(1 << (n - 1 - a))) | (ra << (n - 1 - a));
            row = (row & !(1 << (n - 1 - b))) | (rb << (n - 1 - b));
            out.set(row, col, amp);
        }
    }
    Ok(out)
}

/// Matrix exponential by scaling and squaring with a truncated series.
///
/// The series for the scaled matrix is summed until the running term falls
/// below 1e-16 in Frobenius norm.
pub fn matexp(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !m.is_square() {
        return Err(QrError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.all_finite() {
        return Err(QrError::NonFinite);
    }
    let n = m.dim();
    if n == 0 {
        return Ok(ComplexMatrix::zeros(0, 0));
    }
    let norm = m.frobenius_norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.scale_re(0.5_f64.powi(squarings as i32));

    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..200 {
        term = term.mul(&scaled).scale_re(1.0 / k as f64);
        result = result.add(&term);
        if term.frobenius_norm() < 1e-16 {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    Ok(result)
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Eigh {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub vectors: ComplexMatrix,
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// 1e-12 relative to the matrix scale.
pub fn eigh(matrix: &ComplexMatrix) -> Eigh {
    assert!(matrix.is_square(), "eigh requires a square matrix");
    let n = matrix.dim();
    let mut a = matrix.hermitize();
    let mut q = ComplexMatrix::identity(n);
    if n <= 1 {
        return Eigh {
            values: (0..n).map(|k| a.get(k, k).re).collect(),
            vectors: q,
        };
    }

    let scale = a.frobenius_norm().max(1.0);
    let tol = 1e-12 * scale;
    for _sweep in 0..60 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a.get(i, j).norm_sqr();
            }
        }
        if (2.0 * off).sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for qi in (p + 1)..n {
                let apq = a.get(p, qi);
                if apq.norm() <= tol / (n as f64 * 10.0) {
                    continue;
                }
                let app = a.get(p, p).re;
                let aqq = a.get(qi, qi).re;
                let mag = apq.norm();
                let phase = apq / mag;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let sigma = phase * Complex64::new(s, 0.0);

                // A <- J† A J with J = [[c, sigma], [-conj(sigma), c]] on (p, q).
                for i in 0..n {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, qi);
                    a.set(i, p, aip * c - aiq * sigma.conj());
                    a.set(i, qi, aip * sigma + aiq * c);
                }
                for j in 0..n {
                    let apj = a.get(p, j);
                    let aqj = a.get(qi, j);
                    a.set(p, j, apj * c - aqj * sigma);
                    a.set(qi, j, apj * sigma.conj() + aqj * c);
                }
                // Keep the pivot block exactly Hermitian.
                a.set(p, qi, ZERO);
                a.set(qi, p, ZERO);
                let app_new = a.get(p, p).re;
                let aqq_new = a.get(qi, qi).re;
                a.set(p, p, Complex64::new(app_new, 0.0));
                a.set(qi, qi, Complex64::new(aqq_new, 0.0));

                for i in 0..n {
                    let qip = q.get(i, p);
                    let qiq = q.get(i, qi);
                    q.set(i, p, qip * c - qiq * sigma.conj());
                    q.set(i, qi, qip * sigma + qiq * c);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|k| a.get(k, k).re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let values = order.iter().map(|&k| diag[k]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| q.get(i, order[j]));
    Eigh { values, vectors }
}

/// Solve A x = b by LU decomposition with partial pivoting.
pub fn lu_solve(a: &ComplexMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    if !a.is_square() {
        return Err(QrError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.dim();
    assert_eq!(b.len(), n);
    let mut lu = a.clone();
    let mut x = b.to_vec();

    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_mag = lu.get(col, col).norm();
        for row in (col + 1)..n {
            let mag = lu.get(row, col).norm();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = row;
            }
        }
        if pivot_mag == 0.0 {
            return Err(QrError::SingularMatrix);
        }
        if pivot_row != col {
            for j in 0..n {
                let tmp = lu.get(col, j);
                lu.set(col, j, lu.get(pivot_row, j));
                lu.set(pivot_row, j, tmp);
            }
            x.swap(col, pivot_row);
        }
        let pivot = lu.get(col, col);
        for row in (col + 1)..n {
            let factor = lu.get(row, col) / pivot;
            if factor == ZERO {
                continue;
            }
            for j in col..n {
                let v = lu.get(row, j) - factor * lu.get(col, j);
                lu.set(row, j, v);
            }
            let step = factor * x[col];
            x[row] -= step;
        }
    }
    for col in (0..n).rev() {
        let mut acc = x[col];
        for j in (col + 1)..n {
            acc -= lu.get(col, j) * x[j];
        }
        x[col] = acc / lu.get(col, col);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli;

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} != {b} (tol {tol})");
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor(&i2, &i2), ComplexMatrix::identity(4));
    }

    #[test]
    fn tensor_mixed_product_identity() {
        let mut rng = crate::random::rng(11);
        for _ in 0..20 {
            let a = crate::random::ginibre(&mut rng, 2);
            let b = crate::random::ginibre(&mut rng, 2);
            let c = crate::random::ginibre(&mut rng, 2);
            let d = crate::random::ginibre(&mut rng, 2);
            let lhs = tensor(&a, &b).mul(&tensor(&c, &d));
            let rhs = tensor(&a.mul(&c), &b.mul(&d));
            assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        }
    }

    #[test]
    fn tensor_sigma_z_pair_diagonal() {
        let zz = tensor(&pauli::sigma_z(), &pauli::sigma_z());
        let expect = [1.0, -1.0, -1.0, 1.0];
        for (k, &e) in expect.iter().enumerate() {
            approx(zz.get(k, k).re, e, 0.0);
            approx(zz.get(k, k).im, 0.0, 0.0);
        }
    }

    #[test]
    fn tensor_is_associative_exactly() {
        // Integer-valued entries keep every product exactly representable,
        // so the two association orders agree bit for bit.
        use rand::Rng;
        let mut rng = crate::random::rng(7);
        let mut small = |dim: usize| {
            ComplexMatrix::from_fn(dim, dim, |_, _| {
                Complex64::new(rng.gen_range(-3..=3) as f64, rng.gen_range(-3..=3) as f64)
            })
        };
        let (a, b, c) = (small(2), small(3), small(2));
        assert_eq!(tensor(&tensor(&a, &b), &c), tensor(&a, &tensor(&b, &c)));
    }

    #[test]
    fn embed_single_qubit_cases() {
        let sm = pauli::sigma_minus();
        assert_eq!(embed_op(&sm, 0, 1).unwrap(), sm);
        for k in 0..3 {
            let e = embed_op(&ComplexMatrix::identity(2), k, 3).unwrap();
            assert!(e.max_abs_diff(&ComplexMatrix::identity(8)) == 0.0);
        }
        assert!(matches!(
            embed_op(&sm, 2, 2),
            Err(QrError::SiteOutOfRange { .. })
        ));
    }

    #[test]
    fn embed_lowering_on_second_qubit() {
        // sigma_minus on site 1 maps |01> to |00>.
        let op = embed_op(&pauli::sigma_minus(), 1, 2).unwrap();
        let out = op.apply(&[ZERO, ONE, ZERO, ZERO]);
        assert_eq!(out, vec![ONE, ZERO, ZERO, ZERO]);
    }

    #[test]
    fn embedded_ops_commute_on_distinct_sites() {
        let a = embed_op(&pauli::sigma_minus(), 0, 3).unwrap();
        let b = embed_op(&pauli::sigma_x(), 2, 3).unwrap();
        assert!(a.mul(&b).max_abs_diff(&b.mul(&a)) <= 1e-14);
    }

    #[test]
    fn embed_pair_matches_tensor_on_adjacent_sites() {
        let mut rng = crate::random::rng(3);
        let op = crate::random::ginibre(&mut rng, 4);
        let direct = embed_pair(&op, 0, 1, 2).unwrap();
        assert!(direct.max_abs_diff(&op) < 1e-14);
        // Swapping the site order permutes the operator's tensor factors.
        let swapped = embed_pair(&op, 1, 0, 2).unwrap();
        let swap = ComplexMatrix::from_real(
            4,
            4,
            &[
                1.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 1.0, 0.0, //
                0.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 1.0,
            ],
        );
        let expect = swap.mul(&op).mul(&swap);
        assert!(swapped.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn matexp_zero_is_identity() {
        let z = ComplexMatrix::zeros(3, 3);
        assert!(
            matexp(&z)
                .unwrap()
                .max_abs_diff(&ComplexMatrix::identity(3))
                == 0.0
        );
    }

    #[test]
    fn matexp_rejects_non_square_input() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(matches!(matexp(&m), Err(QrError::NotSquare { .. })));
    }

    #[test]
    fn matexp_pauli_rotation() {
        // exp(i theta sigma_x) = cos(theta) I + i sin(theta) sigma_x; theta = pi/2.
        let arg = pauli::sigma_x().scale(I * Complex64::new(std::f64::consts::FRAC_PI_2, 0.0));
        let got = matexp(&arg).unwrap();
        let expect = pauli::sigma_x().scale(I);
        assert!(got.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn matexp_agrees_with_spectral_route_on_hermitian_input() {
        // Independent route: exp(H) = Q exp(diag) Q† from the eigensolver.
        let mut rng = crate::random::rng(83);
        for _ in 0..10 {
            let h = crate::random::hermitian(&mut rng, 5);
            let series = matexp(&h).unwrap();
            let decomposition = eigh(&h);
            let exp_diag = ComplexMatrix::diag(
                &decomposition
                    .values
                    .iter()
                    .map(|&v| Complex64::new(v.exp(), 0.0))
                    .collect::<Vec<_>>(),
            );
            let spectral = exp_diag.conjugate_by(&decomposition.vectors);
            let rel = series.max_abs_diff(&spectral) / spectral.frobenius_norm();
            assert!(rel < 1e-12, "relative disagreement {rel}");
        }
    }

    #[test]
    fn matexp_diagonal_case() {
        let d = ComplexMatrix::diag(&[Complex64::new(0.3, -1.0), Complex64::new(-2.0, 0.5)]);
        let got = matexp(&d).unwrap();
        let expect = ComplexMatrix::diag(&[
            Complex64::new(0.3, -1.0).exp(),
            Complex64::new(-2.0, 0.5).exp(),
        ]);
        assert!(got.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn matexp_inverse_pairs() {
        let mut rng = crate::random::rng(23);
        for _ in 0..10 {
            let mut a = crate::random::ginibre(&mut rng, 4);
            let norm = a.frobenius_norm();
            if norm > 5.0 {
                a = a.scale_re(5.0 / norm);
            }
            let e = matexp(&a).unwrap();
            let e_inv = matexp(&a.scale_re(-1.0)).unwrap();
            assert!(e.mul(&e_inv).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-10);
        }
    }

    #[test]
    fn matexp_halving_recurrence() {
        let mut rng = crate::random::rng(5);
        for _ in 0..10 {
            let a = crate::random::ginibre(&mut rng, 4);
            let full = matexp(&a).unwrap();
            let half = matexp(&a.scale_re(0.5)).unwrap();
            let rel = full.sub(&half.mul(&half)).frobenius_norm() / full.frobenius_norm();
            assert!(rel <= 1e-12, "relative residual {rel}");
        }
    }

    #[test]
    fn eigh_known_two_by_two() {
        let m = ComplexMatrix::from_vec(
            2,
            2,
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(1.0, 1.0),
                Complex64::new(1.0, -1.0),
                Complex64::new(3.0, 0.0),
            ],
        );
        let e = eigh(&m);
        approx(e.values[0], 1.0, 1e-12);
        approx(e.values[1], 4.0, 1e-12);
    }

    #[test]
    fn eigh_reconstructs_random_hermitian() {
        let mut rng = crate::random::rng(17);
        for _ in 0..10 {
            let h = crate::random::hermitian(&mut rng, 6);
            let e = eigh(&h);
            let lambda = ComplexMatrix::diag(
                &e.values
                    .iter()
                    .map(|&v| Complex64::new(v, 0.0))
                    .collect::<Vec<_>>(),
            );
            let rebuilt = e.vectors.mul(&lambda).mul(&e.vectors.adjoint());
            assert!(rebuilt.max_abs_diff(&h) < 1e-11);
            let gram = e.vectors.adjoint().mul(&e.vectors);
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(6)) < 1e-12);
        }
    }

    #[test]
    fn lu_solve_recovers_solution() {
        let mut rng = crate::random::rng(29);
        for _ in 0..10 {
            let a = crate::random::ginibre(&mut rng, 5);
            let x_true = crate::random::ginibre(&mut rng, 5);
            let b = a.apply(&x_true.as_slice()[..5]);
            let x = lu_solve(&a, &b).unwrap();
            let resid: f64 = a
                .apply(&x)
                .iter()
                .zip(&b)
                .map(|(u, v)| (u - v).norm())
                .fold(0.0, f64::max);
            assert!(resid < 1e-10);
        }
    }
}
