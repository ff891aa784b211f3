//! The modularity condition: is the reflection unitary in the bicommutant
//! of the stabilizer unitaries? In finite dimension the bicommutant is the
//! generated *-algebra, and `r ∈ M''` exactly when `r` commutes with a basis
//! of the commutant `M'`.

use serde::{Deserialize, Serialize};

use super::OrbitModel;
use crate::linalg::{commutant, eigh, ComplexOperator, C64};
use crate::{Error, Result};

/// A finite family of unitaries standing for `U(G_W)` plus the reflection
/// unitary `U(r_W)`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub elements: Vec<(String, ComplexOperator)>,
    pub reflection: ComplexOperator,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.reflection.dim()
    }

    pub fn generators(&self) -> Vec<ComplexOperator> {
        self.elements.iter().map(|(_, u)| u.clone()).collect()
    }

    /// `U ⊗ 1` on the stabilizer, `U(r) ⊗ x` on the reflection.
    pub fn tensor_internal(&self, x: &ComplexOperator) -> Representation {
        let one = ComplexOperator::identity(x.dim());
        Representation {
            elements: self.elements.iter().map(|(l, u)| (l.clone(), u.kron(&one))).collect(),
            reflection: self.reflection.kron(x),
        }
    }

    /// Block-diagonal sum; element lists must carry the same labels.
    pub fn direct_sum(blocks: &[Representation]) -> Result<Representation> {
        let first = blocks.first().ok_or_else(|| Error::Invalid("empty block list".into()))?;
        for b in blocks {
            let same = b.elements.len() == first.elements.len()
                && b.elements.iter().zip(&first.elements).all(|(x, y)| x.0 == y.0);
            if !same {
                return Err(Error::Invalid("blocks must register the same group elements".into()));
            }
        }
        let elements = first
            .elements
            .iter()
            .enumerate()
            .map(|(i, (label, _))| {
                let parts: Vec<ComplexOperator> = blocks.iter().map(|b| b.elements[i].1.clone()).collect();
                Ok((label.clone(), ComplexOperator::block_diagonal(&parts)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let refl: Vec<ComplexOperator> = blocks.iter().map(|b| b.reflection.clone()).collect();
        Ok(Representation {
            elements,
            reflection: ComplexOperator::block_diagonal(&refl)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum McVerdict {
    Holds,
    Fails,
    /// The commutant could not be resolved with a clear singular-value gap.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct McReport {
    pub verdict: McVerdict,
    pub commutant_dim: usize,
    /// `max_j ‖[r, X_j]‖_F` over an orthonormal commutant basis.
    pub residual: f64,
    pub min_gap: f64,
    pub worst_singular_values: Vec<f64>,
    /// A projection in the commutant that fails to commute with `r`.
    #[serde(skip)]
    pub certificate: Option<ComplexOperator>,
    /// `‖[r, P]‖_F` for the certificate.
    pub certificate_residual: Option<f64>,
}

impl McReport {
    pub fn holds(&self) -> bool {
        self.verdict == McVerdict::Holds
    }
}

fn membership_threshold(tol: f64, dim: usize) -> f64 {
    tol * 1e3 * (dim as f64).sqrt()
}

/// Decides `r ∈ {generators}''`.
pub fn mc_check(generators: &[ComplexOperator], r: &ComplexOperator, tol: f64) -> Result<McReport> {
    for g in generators.iter().chain(std::iter::once(r)) {
        g.ensure_unitary(tol.sqrt())?;
        if g.dim() != r.dim() {
            return Err(Error::DimensionMismatch {
                expected: r.dim(),
                found: g.dim(),
            });
        }
    }
    let gens: Vec<ComplexOperator> = if generators.is_empty() {
        vec![ComplexOperator::identity(r.dim())]
    } else {
        generators.to_vec()
    };
    let comm = commutant(&gens, tol)?;
    let residual = comm.max_commutator(r);
    let threshold = membership_threshold(tol, r.dim());
    let verdict = if !comm.clear_gap {
        McVerdict::Inconclusive
    } else if residual <= threshold {
        McVerdict::Holds
    } else {
        McVerdict::Fails
    };
    let (certificate, certificate_residual) = if verdict == McVerdict::Fails {
        match certificate_projection(&comm.basis, r)? {
            Some((p, res)) => (Some(p), Some(res)),
            None => (None, None),
        }
    } else {
        (None, None)
    };
    Ok(McReport {
        verdict,
        commutant_dim: comm.dim(),
        residual,
        min_gap: comm.min_gap,
        worst_singular_values: comm.worst_singular_values,
        certificate,
        certificate_residual,
    })
}

/// Among the spectral projections of the Hermitian and anti-Hermitian parts
/// of the worst commutant basis element, the one with the largest commutator
/// with `r`. Spectral projections of commutant elements stay in the commutant.
fn certificate_projection(basis: &[ComplexOperator], r: &ComplexOperator) -> Result<Option<(ComplexOperator, f64)>> {
    let worst = basis
        .iter()
        .max_by(|a, b| {
            r.commutator(a)
                .frobenius_norm()
                .total_cmp(&r.commutator(b).frobenius_norm())
        });
    let Some(x) = worst else { return Ok(None) };
    let herm = x.hermitian_part();
    let anti = (x - &x.adjoint()).scale(C64::new(0.0, -0.5));
    let mut best: Option<(ComplexOperator, f64)> = None;
    for h in [herm, anti] {
        let eig = eigh(&h, 1e-8)?;
        for cluster in eig.clusters(1e-6) {
            let n = r.dim();
            let p = ComplexOperator::from_fn(n, |i, j| {
                cluster
                    .iter()
                    .map(|&k| eig.vectors[(i, k)] * eig.vectors[(j, k)].conj())
                    .sum()
            });
            let res = r.commutator(&p).frobenius_norm();
            if best.as_ref().is_none_or(|(_, b)| res > *b) {
                best = Some((p, res));
            }
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, Serialize)]
pub struct MasaReport {
    pub is_masa: bool,
    pub commutant_dim: usize,
    pub dim: usize,
    /// Largest off-diagonal entry over the commutant basis.
    pub off_diagonal: f64,
}

/// Checks that the translations registered in a model generate a maximal
/// abelian algebra: their commutant must consist of diagonal operators.
pub fn masa_check(model: &OrbitModel, tol: f64) -> Result<MasaReport> {
    let translations: Vec<ComplexOperator> = model
        .registered()
        .iter()
        .filter(|g| matches!(g, super::GroupElement::Translation { .. }))
        .map(|g| model.unitary(g))
        .collect::<Result<_>>()?;
    let samples = model.samples();
    // points must be told apart by at least one phase
    let phases: Vec<Vec<C64>> = (0..samples.len())
        .map(|i| {
            model
                .registered()
                .iter()
                .filter_map(|g| match g {
                    super::GroupElement::Translation { a } => {
                        Some(C64::from_polar(1.0, crate::lorentz::FourVector(*a).dot(&samples[i].momentum)))
                    }
                    _ => None,
                })
                .collect()
        })
        .collect();
    for i in 0..samples.len() {
        for j in 0..i {
            let close = phases[i]
                .iter()
                .zip(&phases[j])
                .all(|(a, b)| (a - b).norm() <= tol.sqrt());
            if close {
                return Err(Error::PhasesNotSeparating(j, i));
            }
        }
    }
    let dim = model.dim();
    let gens = if translations.is_empty() {
        vec![ComplexOperator::identity(dim)]
    } else {
        translations
    };
    let comm = commutant(&gens, tol)?;
    let off_diagonal = comm
        .basis
        .iter()
        .flat_map(|x| {
            (0..dim).flat_map(move |i| (0..dim).filter(move |&j| j != i).map(move |j| x.entry(i, j).norm()))
        })
        .fold(0.0, f64::max);
    Ok(MasaReport {
        is_masa: comm.dim() == dim && off_diagonal <= tol.sqrt(),
        commutant_dim: comm.dim(),
        dim,
        off_diagonal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DirectSumReport {
    /// Result of the check on the full block-diagonal representation.
    pub verdict: McVerdict,
    pub total: McReport,
    pub blocks: Vec<McReport>,
    /// Pairs of blocks `(i, j)` with a nonzero intertwiner space, with its dimension.
    pub equivalent_pairs: Vec<(usize, usize, usize)>,
    pub disjoint: bool,
    /// Every block satisfies the condition and the blocks are pairwise disjoint.
    pub sufficient_condition: bool,
}

/// Modularity check for a finite direct sum, together with the per-block
/// checks and the pairwise disjointness of the stabilizer restrictions.
pub fn direct_sum_mc(blocks: &[Representation], tol: f64) -> Result<DirectSumReport> {
    let sum = Representation::direct_sum(blocks)?;
    let total = mc_check(&sum.generators(), &sum.reflection, tol)?;
    let per_block = blocks
        .iter()
        .map(|b| mc_check(&b.generators(), &b.reflection, tol))
        .collect::<Result<Vec<_>>>()?;
    let mut equivalent_pairs = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let pair = Representation::direct_sum(&[blocks[i].clone(), blocks[j].clone()])?;
            let joint = commutant(&pair.generators(), tol)?.dim();
            let own = per_block[i].commutant_dim + per_block[j].commutant_dim;
            if joint > own {
                equivalent_pairs.push((i, j, (joint - own) / 2));
            }
        }
    }
    let disjoint = equivalent_pairs.is_empty();
    let sufficient_condition = disjoint && per_block.iter().all(McReport::holds);
    Ok(DirectSumReport {
        verdict: total.verdict,
        total,
        blocks: per_block,
        equivalent_pairs,
        disjoint,
        sufficient_condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn irreducible_generators() {
        let sx = ComplexOperator::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        let sz = ComplexOperator::real_diagonal(&[1.0, -1.0]);
        let r = ComplexOperator::diagonal(&[c(0.0, 1.0), c(1.0, 0.0)]);
        let rep = mc_check(&[sx, sz], &r, 1e-9).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.commutant_dim, 1);
    }

    #[test]
    fn diagonal_generator_with_swap() {
        let d = ComplexOperator::diagonal(&[c(1.0, 0.0), C64::from_polar(1.0, 1.0)]);
        let swap = ComplexOperator::permutation(&[1, 0]);
        let rep = mc_check(&[d], &swap, 1e-9).unwrap();
        assert_eq!(rep.verdict, McVerdict::Fails);
        let p = rep.certificate.unwrap();
        // a rank-one diagonal projection
        assert!(p.entry(0, 1).norm() < 1e-10 && p.entry(1, 0).norm() < 1e-10);
        let diag = (p.entry(0, 0).re, p.entry(1, 1).re);
        assert!((diag.0 - 1.0).abs() < 1e-10 && diag.1.abs() < 1e-10 || (diag.1 - 1.0).abs() < 1e-10 && diag.0.abs() < 1e-10);
    }
}
