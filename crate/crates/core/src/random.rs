//! Seeded random generators for test data: Haar unitaries, Hermitian
//! matrices and modular pairs `(J, Δ)` with `JΔJ = Δ^{-1}`.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::{AntilinearOperator, CMatrix, CVector, ComplexOperator, C64};

/// Standard complex Gaussian entry (real and imaginary parts of variance 1/2).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CVector {
    CVector::from_fn(n, |_, _| complex_gaussian(rng))
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of the
/// diagonal of `R` moved into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexOperator {
    let qr = gaussian_matrix(n, n, rng).qr();
    let (mut q, r) = qr.unpack();
    for k in 0..n {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        let col = q.column(k) * phase;
        q.set_column(k, &col);
    }
    ComplexOperator::new(q).expect("square")
}

pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexOperator {
    let g = gaussian_matrix(n, n, rng);
    ComplexOperator::new((&g + g.adjoint()) * C64::new(0.5, 0.0)).expect("square")
}

/// Random element of `SU(2)` from a normalised Gaussian quaternion.
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> CMatrix {
    let mut q = [0.0f64; 4];
    for x in q.iter_mut() {
        *x = StandardNormal.sample(rng);
    }
    let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [a, b, c, d] = q.map(|x| x / norm);
    let alpha = C64::new(a, b);
    let beta = C64::new(c, d);
    CMatrix::from_row_slice(2, 2, &[alpha, -beta.conj(), beta, alpha.conj()])
}

/// Random element of `SL(2,C)`: a Gaussian matrix divided by a square root of
/// its determinant.
pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R) -> CMatrix {
    loop {
        let g = gaussian_matrix(2, 2, rng);
        let det = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
        if det.norm() > 1e-3 {
            return g / det.sqrt();
        }
    }
}

/// Block model of a modular pair: `J₀` swaps coordinates pairwise and
/// conjugates, `Δ₀ = diag(λ, 1/λ, …)`, with a trailing fixed coordinate when
/// `n` is odd.
pub fn model_modular_pair(log_eigenvalues: &[f64], n: usize) -> (AntilinearOperator, ComplexOperator) {
    assert!(2 * log_eigenvalues.len() <= n, "too many eigenvalue pairs");
    let mut a = CMatrix::identity(n, n);
    let mut d = vec![1.0; n];
    for (k, &l) in log_eigenvalues.iter().enumerate() {
        let (i, j) = (2 * k, 2 * k + 1);
        a[(i, i)] = C64::new(0.0, 0.0);
        a[(j, j)] = C64::new(0.0, 0.0);
        a[(i, j)] = C64::new(1.0, 0.0);
        a[(j, i)] = C64::new(1.0, 0.0);
        d[i] = l.exp();
        d[j] = (-l).exp();
    }
    (
        AntilinearOperator::new(a).expect("square"),
        ComplexOperator::real_diagonal(&d),
    )
}

/// Random modular pair in dimension `n`: the block model with log-eigenvalues
/// uniform in `[-spread, spread]`, conjugated by a Haar unitary.
pub fn random_modular_pair<R: Rng + ?Sized>(
    n: usize,
    spread: f64,
    rng: &mut R,
) -> (AntilinearOperator, ComplexOperator) {
    let logs: Vec<f64> = (0..n / 2).map(|_| rng.random_range(-spread..=spread)).collect();
    let (j0, d0) = model_modular_pair(&logs, n);
    let u = haar_unitary(n, rng);
    (j0.conjugate_by(&u), d0.conjugate_by(&u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn haar_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..6 {
            assert!(haar_unitary(n, &mut rng).is_unitary(1e-12));
        }
    }

    #[test]
    fn modular_pair_relation() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 1..7 {
            let (j, d) = random_modular_pair(n, 2.0, &mut rng);
            assert!(j.is_involution(1e-10));
            assert!(j.is_antiunitary(1e-10));
            let inv = d.try_inverse().unwrap();
            assert!(j.sandwich(&d).distance(&inv) < 1e-9);
        }
    }

    #[test]
    fn su2_and_sl2_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = random_su2(&mut rng);
        assert!((u.adjoint() * &u - CMatrix::identity(2, 2)).norm() < 1e-12);
        let g = random_sl2(&mut rng);
        let det = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
        assert!((det - C64::new(1.0, 0.0)).norm() < 1e-12);
    }
}
