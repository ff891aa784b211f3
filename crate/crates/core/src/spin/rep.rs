use crate::error::{Error, Result};
use crate::linalg::{CMatrix, ComplexOperator, C64};
use crate::lorentz::SL2Element;

use super::SpinLabel;

/// `(S_x, S_y, S_z)` in the weight basis.
pub fn spin_matrices(s: SpinLabel) -> (ComplexOperator, ComplexOperator, ComplexOperator) {
    let n = s.dim();
    let sv = s.value();
    // S₊ e_k = √((s−m)(s+m+1)) e_{k−1} with m = s − k
    let mut raise = CMatrix::zeros(n, n);
    for k in 1..n {
        let m = s.weight(k);
        raise[(k - 1, k)] = C64::new(((sv - m) * (sv + m + 1.0)).sqrt(), 0.0);
    }
    let lower = raise.adjoint();
    let sx = (&raise + &lower) * C64::new(0.5, 0.0);
    let sy = (&raise - &lower) * C64::new(0.0, -0.5);
    let sz = CMatrix::from_diagonal(&nalgebra::DVector::from_fn(n, |k, _| C64::new(s.weight(k), 0.0)));
    (
        ComplexOperator::from_matrix_unchecked(sx),
        ComplexOperator::from_matrix_unchecked(sy),
        ComplexOperator::from_matrix_unchecked(sz),
    )
}

/// `S_x² + S_y² + S_z²`.
pub fn casimir(s: SpinLabel) -> ComplexOperator {
    let (x, y, z) = spin_matrices(s);
    &(&(&x * &x) + &(&y * &y)) + &(&z * &z)
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// The holomorphic representation of `SL(2,C)` on `Sym^{2s}(C²)`.
///
/// Unitary exactly on `SU(2)`; on boosts it is the non-unitary finite-dimensional
/// representation. Weight-basis index `k` corresponds to the monomial
/// `e₁^{2s−k} e₂^k`, normalized by `√C(2s, k)`.
pub fn symmetric_power(s: SpinLabel, a: &SL2Element) -> ComplexOperator {
    let n = s.twice();
    let dim = s.dim();
    let m = a.matrix();
    let (a11, a12, a21, a22) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let mut out = CMatrix::zeros(dim, dim);
    for col in 0..dim {
        // image of e₁^p e₂^q is (a11 e₁ + a21 e₂)^p (a12 e₁ + a22 e₂)^q
        let p = n - col as u32;
        let q = col as u32;
        for i in 0..=p {
            let left = a11.powu(i) * a21.powu(p - i) * binomial(p, i);
            for j in 0..=q {
                let right = a12.powu(j) * a22.powu(q - j) * binomial(q, j);
                let power_e1 = i + j;
                let row = (n - power_e1) as usize;
                out[(row, col)] += left * right * (binomial(n, q) / binomial(n, row as u32)).sqrt();
            }
        }
    }
    ComplexOperator::from_matrix_unchecked(out)
}

/// `D^s(A)` for `A ∈ SU(2)`.
pub fn wigner_d(s: SpinLabel, a: &SL2Element, tol: f64) -> Result<ComplexOperator> {
    let residual = a.unitarity_defect().max(a.determinant_defect());
    if residual > tol {
        return Err(Error::NotSpecialUnitary { residual });
    }
    Ok(symmetric_power(s, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_function, SpectralFunction};
    use crate::lorentz::Axis;

    #[test]
    fn half_spin_is_pauli_over_two() {
        let (x, y, z) = spin_matrices(SpinLabel::HALF);
        for (op, mu) in [(x, 1), (y, 2), (z, 3)] {
            let p = ComplexOperator::from_matrix_unchecked(crate::lorentz::pauli(mu) * C64::new(0.5, 0.0));
            assert!(op.distance(&p) < 1e-15);
        }
        let (x, y, z) = spin_matrices(SpinLabel::ZERO);
        assert!(x.frobenius_norm() + y.frobenius_norm() + z.frobenius_norm() == 0.0);
    }

    #[test]
    fn commutation_relations_and_casimir() {
        for twice in 0..8 {
            let s = SpinLabel::from_twice(twice);
            let (x, y, z) = spin_matrices(s);
            let i = C64::new(0.0, 1.0);
            assert!(x.commutator(&y).distance(&z.scale(i)) < 1e-12);
            assert!(y.commutator(&z).distance(&x.scale(i)) < 1e-12);
            assert!(z.commutator(&x).distance(&y.scale(i)) < 1e-12);
            let target = ComplexOperator::identity(s.dim()).scale(C64::new(s.value() * (s.value() + 1.0), 0.0));
            assert!(casimir(s).distance(&target) < 1e-12);
        }
    }

    #[test]
    fn rotation_matches_exponential_of_generators() {
        for twice in 0..6 {
            let s = SpinLabel::from_twice(twice);
            let gens = spin_matrices(s);
            for (axis, gen) in [(Axis::X1, &gens.0), (Axis::X2, &gens.1), (Axis::X3, &gens.2)] {
                let theta = 0.83;
                // exp(iθS) = f(S) with f(λ) = e^{iθλ}
                let e = crate::linalg::eigh(gen, 1e-12).unwrap().apply(|l| C64::new(0.0, theta * l).exp());
                let d = wigner_d(s, &SL2Element::rotation(axis, theta), 1e-12).unwrap();
                assert!(d.distance(&e) < 1e-12, "2s={twice} axis={axis:?}");
            }
        }
    }

    #[test]
    fn boosts_are_exponentials_of_hermitian_generators() {
        let s = SpinLabel::from_twice(3);
        let (_, _, z) = spin_matrices(s);
        let b = symmetric_power(s, &SL2Element::boost(Axis::X3, 0.7));
        let e = hermitian_function(&z.scale(C64::new(0.7, 0.0)), SpectralFunction::Exp, 1e-12).unwrap();
        assert!(b.distance(&e) < 1e-12);
        assert!(wigner_d(s, &SL2Element::boost(Axis::X3, 0.7), 1e-9).is_err());
    }

    #[test]
    fn full_turn_gives_statistics_sign() {
        for twice in 0..7 {
            let s = SpinLabel::from_twice(twice);
            let d = wigner_d(s, &SL2Element::rotation(Axis::X3, 2.0 * std::f64::consts::PI), 1e-12).unwrap();
            let sign = if s.is_integer() { 1.0 } else { -1.0 };
            assert!(d.distance(&ComplexOperator::identity(s.dim()).scale(C64::new(sign, 0.0))) < 1e-12);
        }
    }

    #[test]
    fn spin_one_weight_phases() {
        let theta = 0.4;
        let d = wigner_d(SpinLabel::ONE, &SL2Element::rotation(Axis::X3, theta), 1e-12).unwrap();
        let expect = ComplexOperator::diagonal(&[
            C64::new(0.0, theta).exp(),
            C64::new(1.0, 0.0),
            C64::new(0.0, -theta).exp(),
        ]);
        assert!(d.distance(&expect) < 1e-14);
    }
}
