use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{eigh, AntilinearOperator, ComplexOperator, HermitianEigen, C64};
use crate::lorentz::{pauli, FourVector};
use crate::momentum::{GroupElement, OrbitModel, Representation};

/// A finite unitary action: registered group elements with their unitaries,
/// diagonal translations `e^{i a·p}` with one momentum per basis vector, and
/// the self-adjoint boost generator `K` of the `W₃` boosts,
/// `U(λ₃(t)) = e^{iKt}`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    elements: Vec<(GroupElement, ComplexOperator)>,
    momenta: Vec<FourVector>,
    boost_generator: ComplexOperator,
    boost_eigen: HermitianEigen,
}

impl ActionTable {
    pub fn new(
        elements: Vec<(GroupElement, ComplexOperator)>,
        momenta: Vec<FourVector>,
        boost_generator: ComplexOperator,
        tol: f64,
    ) -> Result<Self> {
        let n = boost_generator.dim();
        if momenta.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: momenta.len(),
            });
        }
        for (_, u) in &elements {
            if u.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: u.dim(),
                });
            }
            u.ensure_unitary(tol)?;
        }
        let boost_eigen = eigh(&boost_generator, tol)?;
        Ok(Self {
            elements,
            momenta,
            boost_generator,
            boost_eigen,
        })
    }

    /// Registered elements, momenta and boost generator of an orbit model.
    /// The boost generator needs odd rapidity lattices.
    pub fn from_model(model: &OrbitModel) -> Result<Self> {
        let elements = model
            .registered()
            .iter()
            .map(|g| Ok((g.clone(), model.unitary(g)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut momenta = Vec::with_capacity(model.dim());
        for s in model.samples() {
            for _ in 0..model.spec().multiplicities[s.mass_index] {
                momenta.push(s.momentum);
            }
        }
        Self::new(elements, momenta, model.boost_generator()?, crate::DEFAULT_TOL)
    }

    pub fn dim(&self) -> usize {
        self.momenta.len()
    }

    pub fn elements(&self) -> &[(GroupElement, ComplexOperator)] {
        &self.elements
    }

    pub fn momenta(&self) -> &[FourVector] {
        &self.momenta
    }

    pub fn boost_generator(&self) -> &ComplexOperator {
        &self.boost_generator
    }

    /// `U(a) = diag(e^{i a·p})`.
    pub fn translation(&self, a: FourVector) -> ComplexOperator {
        let d: Vec<C64> = self.momenta.iter().map(|p| C64::from_polar(1.0, a.dot(p))).collect();
        ComplexOperator::diagonal(&d)
    }

    /// `e^{iKt}`.
    pub fn boost(&self, t: f64) -> ComplexOperator {
        self.boost_eigen.apply(|l| C64::from_polar(1.0, l * t))
    }

    /// `e^{sK}` for real `s`.
    pub fn boost_real_exponential(&self, s: f64) -> ComplexOperator {
        self.boost_eigen.apply(|l| C64::new((s * l).exp(), 0.0))
    }

    /// `U(g)`: translations and boosts from their generators, everything else
    /// from the registered list.
    pub fn unitary(&self, g: &GroupElement) -> Result<ComplexOperator> {
        match g {
            GroupElement::Translation { a } => Ok(self.translation(FourVector(*a))),
            GroupElement::Boost { t } => Ok(self.boost(*t)),
            _ => self
                .elements
                .iter()
                .find(|(h, _)| h == g)
                .map(|(_, u)| u.clone())
                .ok_or_else(|| Error::UnknownElement(g.label())),
        }
    }

    /// Product `U(g_k) ⋯ U(g_1)` for the word `[g_1, …, g_k]`.
    pub fn word(&self, word: &[GroupElement]) -> Result<ComplexOperator> {
        let mut u = ComplexOperator::identity(self.dim());
        for g in word {
            u = &self.unitary(g)? * &u;
        }
        Ok(u)
    }

    /// Stabilizer elements of `W₃` and `U(r₁(π))`, as consumed by
    /// [`crate::momentum::mc_check`].
    pub fn representation(&self) -> Result<Representation> {
        let elements = self
            .elements
            .iter()
            .filter(|(g, _)| g.in_w3_stabilizer())
            .map(|(g, u)| (g.label(), u.clone()))
            .collect();
        Ok(Representation {
            elements,
            reflection: self.unitary(&GroupElement::R1Pi)?,
        })
    }

    /// `U(g) ⊗ X(g)` with the second factor supplied per element; the boost
    /// generator becomes `K ⊗ 1 + 1 ⊗ L` for the supplied internal generator `L`.
    pub fn tensor(
        &self,
        internal: impl Fn(&GroupElement) -> ComplexOperator,
        internal_generator: &ComplexOperator,
    ) -> Result<ActionTable> {
        let m = internal_generator.dim();
        let one_m = ComplexOperator::identity(m);
        let one_n = ComplexOperator::identity(self.dim());
        let elements = self
            .elements
            .iter()
            .map(|(g, u)| (g.clone(), u.kron(&internal(g))))
            .collect();
        let momenta = self.momenta.iter().flat_map(|p| std::iter::repeat_n(*p, m)).collect();
        let k = &self.boost_generator.kron(&one_m) + &one_n.kron(internal_generator);
        ActionTable::new(elements, momenta, k, crate::DEFAULT_TOL)
    }

    /// The spin-½ lift on `C^n ⊗ C²`: rotations `r₃(θ)` pick up
    /// `diag(e^{iθ/2}, e^{−iθ/2})`, `r₁(π)` picks up `iσ₁`, `r(2π)` acts as `−1`;
    /// boosts and translations act on the first factor only.
    pub fn spin_half_lift(&self) -> Result<ActionTable> {
        let sigma1 = ComplexOperator::new(pauli(1))?;
        self.tensor(
            |g| match g {
                GroupElement::Rotation { theta } => ComplexOperator::diagonal(&[
                    C64::from_polar(1.0, theta / 2.0),
                    C64::from_polar(1.0, -theta / 2.0),
                ]),
                GroupElement::R1Pi => sigma1.scale(C64::new(0.0, 1.0)),
                GroupElement::TwoPi => ComplexOperator::identity(2).scale(C64::new(-1.0, 0.0)),
                _ => ComplexOperator::identity(2),
            },
            &ComplexOperator::zeros(2),
        )
    }
}

/// The scalar `W₃` conjugation of an orbit model: complex conjugation composed
/// with the sample permutation of `R₃(π)`, `(Jφ)(p) = conj φ(R₃(π)p)`.
/// Requires every orbit's angle set to be closed under `θ ↦ θ + π`.
pub fn scalar_conjugation(model: &OrbitModel) -> Result<AntilinearOperator> {
    let perm = model.unitary(&GroupElement::Rotation { theta: PI })?;
    AntilinearOperator::new(perm.into_matrix())
}

/// `J ⊗ (σ₁ ∘ conj)`, the conjugation of the spin-½ lift.
pub fn spin_half_conjugation(j: &AntilinearOperator) -> Result<AntilinearOperator> {
    AntilinearOperator::new(j.matrix().kronecker(&pauli(1)))
}

/// `J₁ ⊗ J₂` for antilinear operators with matrices `A₁`, `A₂`.
pub fn tensor_conjugation(j1: &AntilinearOperator, j2: &AntilinearOperator) -> Result<AntilinearOperator> {
    AntilinearOperator::new(j1.matrix().kronecker(j2.matrix()))
}
