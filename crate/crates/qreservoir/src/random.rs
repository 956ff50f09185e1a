//! Seeded random matrices, states and unitaries.
//!
//! Used by the verification suite and the tests; everything is driven by
//! an explicit ChaCha stream so runs are reproducible.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::ComplexMatrix;
use crate::state::DensityMatrix;

/// Deterministic generator for a given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    // Box-Muller; avoids a rand_distr dependency.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Square matrix with independent standard complex Gaussian entries.
pub fn ginibre(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(gaussian(rng), gaussian(rng))
    })
}

/// Random Hermitian matrix (G + G†)/2.
pub fn hermitian(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    ginibre(rng, dim).hermitize()
}

/// Random density matrix G G† / tr, distributed over the full rank states.
pub fn density(rng: &mut impl Rng, dims: &[usize]) -> DensityMatrix {
    let dim: usize = dims.iter().product();
    let g = ginibre(rng, dim);
    let rho = g.mul(&g.adjoint());
    let trace = rho.trace().re;
    DensityMatrix::new(rho.scale_re(1.0 / trace), dims).expect("Wishart matrix is a state")
}

/// Random normalized pure-state column vector.
pub fn pure_state(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    loop {
        let v = ComplexMatrix::from_fn(dim, 1, |_, _| Complex64::new(gaussian(rng), gaussian(rng)));
        let norm: f64 = v
            .as_slice()
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        if norm > 1e-6 {
            return v.scale_re(1.0 / norm);
        }
    }
}

/// Haar-like random unitary via Gram-Schmidt on a Ginibre matrix.
pub fn unitary(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = ginibre(rng, dim);
    // Modified Gram-Schmidt on the columns.
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|j| (0..dim).map(|i| g.get(i, j)).collect())
        .collect();
    for j in 0..dim {
        for k in 0..j {
            let overlap: Complex64 = cols[k]
                .iter()
                .zip(&cols[j])
                .map(|(a, b)| a.conj() * b)
                .sum();
            for i in 0..dim {
                let c = cols[k][i];
                cols[j][i] -= overlap * c;
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i])
}

/// Convex mixture of random two-qubit product states.
pub fn separable_two_qubit(rng: &mut impl Rng, terms: usize) -> DensityMatrix {
    let dim = 4;
    let mut weights: Vec<f64> = (0..terms).map(|_| rng.gen_range(0.01..1.0)).collect();
    let total: f64 = weights.iter().sum();
    for w in weights.iter_mut() {
        *w /= total;
    }
    let mut acc = ComplexMatrix::zeros(dim, dim);
    for &w in &weights {
        let a = density(rng, &[2]);
        let b = density(rng, &[2]);
        acc = acc.add(&crate::matrix::tensor(a.matrix(), b.matrix()).scale_re(w));
    }
    DensityMatrix::new(acc, &[2, 2]).expect("mixture of products is a state")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_is_unitary() {
        let mut r = rng(101);
        for dim in [2, 4] {
            let u = unitary(&mut r, dim);
            let gram = u.adjoint().mul(&u);
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(dim)) < 1e-12);
        }
    }

    #[test]
    fn density_is_reproducible_for_fixed_seed() {
        let a = density(&mut rng(7), &[2, 2]);
        let b = density(&mut rng(7), &[2, 2]);
        assert!(a.matrix().max_abs_diff(b.matrix()) == 0.0);
    }
}
