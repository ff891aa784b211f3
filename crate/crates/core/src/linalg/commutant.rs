//! Commutants of finite sets of operators.
//!
//! Solving `[G, X] = 0` directly costs an SVD on `n²` unknowns. Instead a
//! random Hermitian element `H` of the generated *-algebra is diagonalised
//! first: every commutant element preserves the eigenspaces of `H`, so the
//! unknowns shrink to matrix units inside eigenvalue clusters. The remaining
//! linear constraints are imposed one generator at a time through
//! [`nullspace`], and the singular-value gap of every step is recorded.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{eigh, nullspace, CMatrix, ComplexOperator, C64, GAP_RATIO};
use crate::{Error, Result};

/// Eigenvalues of the probe element closer than this (relative) are treated
/// as one eigenspace. Merging too much only costs speed, never correctness.
const PROBE_CLUSTER_WIDTH: f64 = 1e-7;
const PROBE_SEED: u64 = 0x6d6f_646e_6574;

/// Basis of a commutant together with conditioning evidence.
#[derive(Clone, Debug)]
pub struct CommutantReport {
    /// Hilbert-Schmidt orthonormal basis of `{X : [G, X] = [G*, X] = 0}`.
    pub basis: Vec<ComplexOperator>,
    /// Smallest singular-value gap met while solving the constraints.
    pub min_gap: f64,
    /// Singular values of the step that produced `min_gap`.
    pub worst_singular_values: Vec<f64>,
    pub clear_gap: bool,
}

impl CommutantReport {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Largest `‖[r, X_j]‖_F` over the basis.
    pub fn max_commutator(&self, r: &ComplexOperator) -> f64 {
        self.basis
            .iter()
            .map(|x| r.commutator(x).frobenius_norm())
            .fold(0.0, f64::max)
    }
}

/// Computes the commutant of `generators ∪ generators*`.
pub fn commutant(generators: &[ComplexOperator], tol: f64) -> Result<CommutantReport> {
    let n = match generators.first() {
        Some(g) => g.dim(),
        None => return Err(Error::Invalid("commutant of an empty generator list".into())),
    };
    if let Some(bad) = generators.iter().find(|g| g.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.dim(),
        });
    }

    let mut constraints: Vec<CMatrix> = Vec::new();
    for g in generators {
        constraints.push(g.matrix().clone());
        if !g.is_unitary(tol) && !g.is_hermitian(tol) {
            constraints.push(g.matrix().adjoint());
        }
    }

    let probe = probe_element(&constraints, n);
    let eig = eigh(&probe, 1e-6)?;
    let v = eig.vectors.clone();
    let clusters = eig.clusters(PROBE_CLUSTER_WIDTH);

    // Matrix units E_ab with a, b in the same cluster (indices in the eigenbasis).
    let units: Vec<(usize, usize)> = clusters
        .iter()
        .flat_map(|c| c.iter().flat_map(move |&a| c.iter().map(move |&b| (a, b))))
        .collect();
    let m = units.len();

    // Current solution space: columns are coefficient vectors over `units`.
    let mut coeffs = CMatrix::identity(m, m);
    let mut min_gap = f64::INFINITY;
    let mut worst = Vec::new();

    for g in &constraints {
        if coeffs.ncols() == 0 {
            break;
        }
        let gt = v.adjoint() * g * &v;
        let scale = gt.norm().max(f64::MIN_POSITIVE);
        let mut system = CMatrix::zeros(n * n, m);
        for (col, &(a, b)) in units.iter().enumerate() {
            // [G, E_ab] = G e_a e_bᵀ − e_a e_bᵀ G
            for i in 0..n {
                system[(i * n + b, col)] += gt[(i, a)];
                system[(a * n + i, col)] -= gt[(b, i)];
            }
        }
        let reduced = &system * &coeffs;
        if reduced.norm() <= tol * scale * 1e-3 {
            continue;
        }
        let report = nullspace(&reduced, tol);
        if report.gap < min_gap {
            min_gap = report.gap;
            worst = report.singular_values.clone();
        }
        if report.basis.is_empty() {
            coeffs = CMatrix::zeros(m, 0);
            break;
        }
        let kernel = CMatrix::from_columns(&report.basis);
        coeffs = &coeffs * kernel;
    }

    // Re-orthonormalise against accumulated rounding.
    if coeffs.ncols() > 0 {
        coeffs = coeffs.qr().q();
    }

    let basis = (0..coeffs.ncols())
        .map(|k| {
            let mut x = CMatrix::zeros(n, n);
            for (row, &(a, b)) in units.iter().enumerate() {
                x[(a, b)] += coeffs[(row, k)];
            }
            ComplexOperator::from_matrix_unchecked(&v * x * v.adjoint())
        })
        .collect();

    Ok(CommutantReport {
        basis,
        min_gap,
        worst_singular_values: worst,
        clear_gap: min_gap >= GAP_RATIO,
    })
}

/// A pseudo-random Hermitian element of the *-algebra spanned by the
/// generators and their pairwise products.
fn probe_element(gens: &[CMatrix], n: usize) -> ComplexOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    let mut coef = || {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        C64::new(re, im)
    };
    let mut acc = CMatrix::zeros(n, n);
    let add = |m: CMatrix, acc: &mut CMatrix, w: C64| {
        let norm = m.norm();
        if norm > 0.0 {
            *acc += m * (w / norm);
        }
    };
    for (i, g) in gens.iter().enumerate() {
        add(g.clone(), &mut acc, coef());
        for h in &gens[i..] {
            add(g * h, &mut acc, coef());
            add(g * h.adjoint(), &mut acc, coef());
        }
    }
    ComplexOperator::from_matrix_unchecked(&acc + acc.adjoint()).hermitian_part()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    fn pauli() -> (ComplexOperator, ComplexOperator) {
        let z = c(0.0, 0.0);
        let o = c(1.0, 0.0);
        (
            ComplexOperator::from_rows(&[vec![z, o], vec![o, z]]).unwrap(),
            ComplexOperator::from_rows(&[vec![o, z], vec![z, -o]]).unwrap(),
        )
    }

    #[test]
    fn irreducible_pair_has_scalar_commutant() {
        let (x, z) = pauli();
        let r = commutant(&[x, z], 1e-9).unwrap();
        assert_eq!(r.dim(), 1);
        let b = &r.basis[0];
        // proportional to the identity
        let t = b.trace() / 2.0;
        assert!(b.distance(&ComplexOperator::identity(2).scale(t)) < 1e-12);
    }

    #[test]
    fn distinct_diagonal_has_diagonal_commutant() {
        let d = ComplexOperator::diagonal(&[c(1.0, 0.0), C64::from_polar(1.0, 1.0), c(-1.0, 0.0)]);
        let r = commutant(&[d], 1e-9).unwrap();
        assert_eq!(r.dim(), 3);
        for b in &r.basis {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert!(b.entry(i, j).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicity_gives_full_block() {
        let d = ComplexOperator::real_diagonal(&[1.0, 1.0, 2.0]);
        assert_eq!(commutant(&[d], 1e-9).unwrap().dim(), 5);
    }

    #[test]
    fn tensor_with_identity() {
        // commutant of {σx⊗1, σz⊗1} is 1⊗M_2, dimension 4
        let (x, z) = pauli();
        let one = ComplexOperator::identity(2);
        let r = commutant(&[x.kron(&one), z.kron(&one)], 1e-9).unwrap();
        assert_eq!(r.dim(), 4);
        assert!(r.clear_gap);
    }

    #[test]
    fn non_normal_generator_uses_adjoint() {
        // nilpotent Jordan block: algebra generated with its adjoint is M_2
        let n = ComplexOperator::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert_eq!(commutant(&[n], 1e-9).unwrap().dim(), 1);
    }
}
