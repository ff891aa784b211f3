//! Numerical test of the statement: a closed real subspace `K ⊆ H` that is
//! invariant under the modular group of `H` and cyclic must equal `H`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{random_standard_subspace, RealSubspace, StandardSubspace};
use crate::linalg::{eigh, CVector, C64};
use crate::{Error, Result};

/// Outcome of [`takesaki_test`].
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct TakesakiReport {
    /// `max ‖Δ^{it}K − K‖` over the sampled `t` (projection distance).
    pub invariance_residual: f64,
    pub invariant: bool,
    /// `K + iK = C^n`.
    pub cyclic_in_ambient: bool,
    /// `K` is standard inside its own complex span `K + iK`.
    pub standard_in_span: bool,
    pub equal: bool,
    /// Invariance and cyclicity in the ambient space both hold.
    pub hypotheses_hold: bool,
    /// `equal` whenever `hypotheses_hold`.
    pub lemma_consistent: bool,
}

pub fn takesaki_test(k: &RealSubspace, h: &StandardSubspace, t_samples: &[f64], tol: f64) -> Result<TakesakiReport> {
    let contained = k.containment_residual(h.space());
    if contained > tol.sqrt().max(tol * 1e3) {
        return Err(Error::NotContained { residual: contained });
    }
    let invariance_residual = t_samples
        .iter()
        .map(|&t| k.image(&h.modular_flow(t), tol).distance(k))
        .fold(0.0, f64::max);
    let invariant = invariance_residual <= tol.sqrt();
    let cyclic_in_ambient = k.is_cyclic(tol);
    let separating = k.is_separating(tol);
    let standard_in_span = separating && k.dim_real() == k.complex_span_dim(tol);
    let equal = k.equals(h.space(), tol.sqrt());
    let hypotheses_hold = invariant && cyclic_in_ambient;
    Ok(TakesakiReport {
        invariance_residual,
        invariant,
        cyclic_in_ambient,
        standard_in_span,
        equal,
        hypotheses_hold,
        lemma_consistent: !hypotheses_hold || equal,
    })
}

/// Tally of a randomized search for counterexamples.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct TakesakiSearch {
    pub trials: usize,
    /// Trials in which `K` was invariant and cyclic.
    pub hypotheses_met: usize,
    /// Invariant, cyclic, proper subspaces found. Should stay zero.
    pub counterexamples: usize,
    /// Invariant proper subspaces that are standard only inside `K + iK`.
    pub standard_in_span_only: usize,
}

/// Tries `trials` random pairs `K ⊆ H` in dimensions `1..=max_dim`.
///
/// Candidates for `K` are `H` itself, intersections of `H` with spectral
/// subspaces of `Δ_H` (these are invariant), and random real subspaces of `H`.
pub fn takesaki_search(trials: usize, max_dim: usize, seed: u64, tol: f64) -> Result<TakesakiSearch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = [0.37, -1.1, 2.3];
    let mut out = TakesakiSearch {
        trials,
        ..Default::default()
    };
    for _ in 0..trials {
        let n = rng.random_range(1..=max_dim);
        let h = random_standard_subspace(n, 1.5, &mut rng)?;
        let k = match rng.random_range(0..3) {
            0 => h.space().clone(),
            1 => {
                let eig = eigh(h.modular_operator(), 1e-8)?;
                let clusters = eig.clusters(1e-6);
                let mut vectors = Vec::new();
                for c in &clusters {
                    if rng.random_bool(0.5) {
                        for &idx in c {
                            let v: CVector = eig.vectors.column(idx).into_owned();
                            vectors.push(v.map(|z| z * C64::new(0.0, 1.0)));
                            vectors.push(v);
                        }
                    }
                }
                let e = RealSubspace::span(n, &vectors, tol)?;
                e.intersection(h.space(), tol)
            }
            _ => {
                let dim = rng.random_range(0..=n);
                let vectors: Vec<CVector> = (0..dim)
                    .map(|_| {
                        h.basis()
                            .iter()
                            .fold(CVector::zeros(n), |acc, b| acc + b * C64::new(rng.random_range(-1.0..1.0), 0.0))
                    })
                    .collect();
                RealSubspace::span(n, &vectors, tol)?
            }
        };
        let report = takesaki_test(&k, &h, &samples, tol)?;
        if report.hypotheses_hold {
            out.hypotheses_met += 1;
            if !report.equal {
                out.counterexamples += 1;
            }
        } else if report.invariant && report.standard_in_span && !report.equal && k.dim_real() > 0 {
            out.standard_in_span_only += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn k_equal_h() {
        let h = StandardSubspace::real_form(2);
        let r = takesaki_test(h.space(), &h, &[0.5, 1.0], 1e-9).unwrap();
        assert!(r.invariant && r.cyclic_in_ambient && r.equal && r.lemma_consistent);
    }

    #[test]
    fn real_line_in_real_plane() {
        let h = StandardSubspace::real_form(2);
        let k = RealSubspace::new(2, &[CVector::from_column_slice(&[c(1.0, 0.0), c(0.0, 0.0)])], 1e-9).unwrap();
        let r = takesaki_test(&k, &h, &[0.5, 1.0], 1e-9).unwrap();
        assert!(r.invariant);
        assert!(!r.cyclic_in_ambient);
        assert!(!r.equal);
        assert!(r.standard_in_span);
        assert!(!r.hypotheses_hold && r.lemma_consistent);
    }

    #[test]
    fn outside_vector_rejected() {
        let h = StandardSubspace::real_form(2);
        let k = RealSubspace::new(2, &[CVector::from_column_slice(&[c(0.0, 1.0), c(0.0, 0.0)])], 1e-9).unwrap();
        assert!(matches!(takesaki_test(&k, &h, &[1.0], 1e-9), Err(Error::NotContained { .. })));
    }

    #[test]
    fn small_search_finds_nothing() {
        let s = takesaki_search(200, 4, 11, 1e-9).unwrap();
        assert_eq!(s.counterexamples, 0);
        assert!(s.hypotheses_met > 0);
    }
}
