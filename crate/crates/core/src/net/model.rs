use serde::{Deserialize, Serialize};

use super::action::ActionTable;
use crate::error::{Error, Result};
use crate::linalg::{AntilinearOperator, ComplexOperator, C64};
use crate::lorentz::{Axis, FourVector, Wedge};
use crate::momentum::GroupElement;
use crate::subspace::{RealSubspace, StandardSubspace};

/// A wedge of the registered family together with its subspace.
#[derive(Clone, Debug)]
pub struct NetWedge {
    pub name: String,
    pub wedge: Wedge,
    /// `H(W) = U(word) H(W₃)`, the word read right to left as in [`ActionTable::word`].
    pub word: Vec<GroupElement>,
    pub unitary: ComplexOperator,
    pub subspace: StandardSubspace,
}

/// A registered element `g` with `g·W_from = W_to` inside the family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CovariancePair {
    pub element: GroupElement,
    pub from: usize,
    pub to: usize,
}

/// A covariant net of standard subspaces on a finite wedge family.
///
/// The family contains `W₃`, `W₃' = r₁(π)W₃` and their images under single
/// registered elements. Wedges reached twice are recorded as covariance
/// pairs rather than rebuilt.
#[derive(Clone, Debug)]
pub struct NetModel {
    table: ActionTable,
    conjugation: AntilinearOperator,
    gamma: ComplexOperator,
    twist: ComplexOperator,
    fermionic: bool,
    wedges: Vec<NetWedge>,
    pairs: Vec<CovariancePair>,
    tol: f64,
}

/// A region given by the wedges containing it, `H(O) = ⋂ H(W)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalRegion {
    pub wedges: Vec<String>,
}

/// `H(O)` and its cyclicity.
#[derive(Clone, Debug)]
pub struct LocalSubspace {
    pub subspace: RealSubspace,
    pub dim_real: usize,
    pub complex_span_dim: usize,
    pub cyclic: bool,
}

/// `C = S_geo S_alg⁻¹` and how well it commutes with the action.
#[derive(Clone, Debug)]
pub struct TomitaComparison {
    pub c: ComplexOperator,
    /// `max_g ‖[C, U(g)]‖_F` over the registered elements.
    pub commutant_residual: f64,
    /// `μ` when `C = μ·1` within tolerance.
    pub scalar: Option<C64>,
}

fn scale_of(x: &ComplexOperator) -> f64 {
    x.frobenius_norm().max(1.0)
}

/// Whether a registered element fixes `W₃`: everything but `r₁(π)` and the
/// translations with a time or `x₃` component.
pub fn fixes_w3(g: &GroupElement) -> bool {
    match g {
        GroupElement::R1Pi => false,
        GroupElement::Translation { a } => a[0] == 0.0 && a[3] == 0.0,
        _ => true,
    }
}

/// Builds the net from a conjugation `J` and boost generator `K` of `W₃`:
/// `Δ = e^{−2πK}`, `S = J e^{−πK}`, `H(W₃) = ker(1 − S)`, and
/// `H(gW₃) = U(g) H(W₃)` on the family.
///
/// Checks `JKJ = −K`, that `J` commutes with the registered `W₃`-fixing
/// elements, and that registered boosts agree with `e^{iKt}`. The fermionic
/// flag installs `Γ = U(r(2π))` (or `−1` when `r(2π)` is not registered) and
/// the twist `B = (1 + iΓ)/(1 + i)`.
pub fn bgl_construct(j: &AntilinearOperator, table: &ActionTable, fermionic: bool, tol: f64) -> Result<NetModel> {
    let n = table.dim();
    if j.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: j.dim() });
    }
    if !j.is_involution(tol) {
        return Err(Error::NotInvolution { residual: j.involution_defect() });
    }
    if !j.is_antiunitary(tol) {
        return Err(Error::Invalid("J must be antiunitary".into()));
    }
    let k = table.boost_generator();
    let relation = (&j.sandwich(k) + k).frobenius_norm();
    if relation > tol * scale_of(k) {
        return Err(Error::ModularRelation { residual: relation });
    }
    for (g, u) in table.elements() {
        if fixes_w3(g) {
            let r = j.conjugate_by(u).distance(j);
            if r > tol * (n as f64).sqrt() {
                return Err(Error::Covariance(format!("J does not commute with U({}) (residual {r:.3e})", g.label())));
            }
        }
        if let GroupElement::Boost { t } = g {
            let r = u.distance(&table.boost(*t));
            if r > tol * (n as f64).sqrt() {
                return Err(Error::Covariance(format!("U({}) differs from e^{{iKt}} by {r:.3e}", g.label())));
            }
        }
    }
    let s = j.after_linear(&table.boost_real_exponential(-std::f64::consts::PI));
    let h3 = StandardSubspace::from_involution(&s, tol)?;

    let id = ComplexOperator::identity(n);
    let gamma = if fermionic {
        table
            .unitary(&GroupElement::TwoPi)
            .unwrap_or_else(|_| id.scale(C64::new(-1.0, 0.0)))
    } else {
        id.clone()
    };
    let twist = (&id + &gamma.scale(C64::new(0.0, 1.0))).scale(C64::new(1.0, 0.0) / C64::new(1.0, 1.0));

    let mut net = NetModel {
        table: table.clone(),
        conjugation: j.clone(),
        gamma,
        twist,
        fermionic,
        wedges: Vec::new(),
        pairs: Vec::new(),
        tol,
    };
    net.wedges.push(NetWedge {
        name: "W3".into(),
        wedge: Wedge::base(Axis::X3),
        word: Vec::new(),
        unitary: id,
        subspace: h3,
    });
    net.push_image(0, &GroupElement::R1Pi, "W3'".into())?;
    for base in 0..2 {
        let registered: Vec<GroupElement> = net.table.elements().iter().map(|(g, _)| g.clone()).collect();
        for g in registered {
            let image = net.wedges[base].wedge.transform(&g.covering());
            if net.find_wedge(&image).is_none() {
                let name = format!("{}·{}", g.label(), net.wedges[base].name);
                net.push_image(base, &g, name)?;
            }
        }
    }
    net.rebuild_pairs();
    Ok(net)
}

impl NetModel {
    fn push_image(&mut self, from: usize, g: &GroupElement, name: String) -> Result<()> {
        let u = self.table.unitary(g)?;
        let source = &self.wedges[from];
        let mut word = source.word.clone();
        word.push(g.clone());
        let unitary = &u * &source.unitary;
        let subspace = self.wedges[0].subspace.transport(&unitary, self.tol)?;
        let wedge = source.wedge.transform(&g.covering());
        self.wedges.push(NetWedge {
            name,
            wedge,
            word,
            unitary,
            subspace,
        });
        Ok(())
    }

    fn rebuild_pairs(&mut self) {
        self.pairs.clear();
        for (g, _) in self.table.elements() {
            for (i, w) in self.wedges.iter().enumerate() {
                let image = w.wedge.transform(&g.covering());
                if let Some(to) = self.find_wedge(&image) {
                    self.pairs.push(CovariancePair {
                        element: g.clone(),
                        from: i,
                        to,
                    });
                }
            }
        }
    }

    fn find_wedge(&self, w: &Wedge) -> Option<usize> {
        self.wedges.iter().position(|x| x.wedge.same_as(w, 1e-9))
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &ActionTable {
        &self.table
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn is_fermionic(&self) -> bool {
        self.fermionic
    }

    /// The `W₃` conjugation the net was built from.
    pub fn conjugation(&self) -> &AntilinearOperator {
        &self.conjugation
    }

    /// `Γ`.
    pub fn gamma(&self) -> &ComplexOperator {
        &self.gamma
    }

    /// `B = (1 + iΓ)/(1 + i)`.
    pub fn twist(&self) -> &ComplexOperator {
        &self.twist
    }

    pub fn wedges(&self) -> &[NetWedge] {
        &self.wedges
    }

    pub fn covariance_pairs(&self) -> &[CovariancePair] {
        &self.pairs
    }

    pub fn wedge_index(&self, name: &str) -> Result<usize> {
        self.wedges
            .iter()
            .position(|w| w.name == name)
            .ok_or_else(|| Error::UnknownWedge(name.into()))
    }

    pub fn wedge(&self, name: &str) -> Result<&NetWedge> {
        Ok(&self.wedges[self.wedge_index(name)?])
    }

    /// Index of the causal complement of wedge `i` inside the family.
    pub fn complement_of(&self, i: usize) -> Option<usize> {
        self.find_wedge(&self.wedges[i].wedge.complement())
    }

    /// Replaces the subspace of one wedge, leaving everything else alone.
    /// Used to inject faults that the axiom checks must catch.
    pub fn with_override(mut self, name: &str, subspace: StandardSubspace) -> Result<Self> {
        let i = self.wedge_index(name)?;
        if subspace.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: subspace.ambient_dim(),
            });
        }
        self.wedges[i].subspace = subspace;
        Ok(self)
    }

    /// `U(λ_W(t)) = U(g) e^{iKt} U(g)*` for `W = gW₃`.
    pub fn wedge_boost(&self, i: usize, t: f64) -> ComplexOperator {
        self.table.boost(t).conjugate_by(&self.wedges[i].unitary)
    }

    /// `K_W = U(g) K U(g)*`.
    pub fn wedge_generator(&self, i: usize) -> ComplexOperator {
        self.table.boost_generator().conjugate_by(&self.wedges[i].unitary)
    }

    /// `Z(t) = Δ_{H(W)}^{it} U(λ_W(2πt))`, with `Δ` recomputed from `H(W)`.
    pub fn z_map(&self, i: usize, t: f64) -> ComplexOperator {
        &self.wedges[i].subspace.modular_flow(t) * &self.wedge_boost(i, 2.0 * std::f64::consts::PI * t)
    }

    /// `H(O) = ⋂_{W ⊃ O} H(W)` for the listed wedges.
    pub fn local_subspace(&self, region: &LocalRegion) -> Result<LocalSubspace> {
        let first = region
            .wedges
            .first()
            .ok_or_else(|| Error::Invalid("a local region needs at least one wedge".into()))?;
        let mut h = self.wedge(first)?.subspace.space().clone();
        for name in &region.wedges[1..] {
            h = h.intersection(self.wedge(name)?.subspace.space(), self.tol);
        }
        let complex_span_dim = h.complex_span_dim(self.tol);
        Ok(LocalSubspace {
            dim_real: h.dim_real(),
            cyclic: complex_span_dim == self.dim(),
            complex_span_dim,
            subspace: h,
        })
    }

    /// The same construction with `J` replaced by `λJ`, `|λ| = 1`.
    pub fn phase_variant(&self, lambda: C64) -> Result<NetModel> {
        if (lambda.norm() - 1.0).abs() > self.tol {
            return Err(Error::Invalid(format!("phase must have modulus one, got {lambda}")));
        }
        bgl_construct(&self.conjugation.scale(lambda), &self.table, self.fermionic, self.tol)
    }

    /// Unitaries of all registered elements.
    pub fn registered_unitaries(&self) -> Vec<ComplexOperator> {
        self.table.elements().iter().map(|(_, u)| u.clone()).collect()
    }
}

/// `C = S_geo · S_alg⁻¹` with `S_geo = J_geo e^{−πK_W}` and
/// `S_alg = J_{H(W)} Δ_{H(W)}^{1/2}`, checked against `actions`.
pub fn tomita_quotient(
    subspace: &StandardSubspace,
    j_geo: &AntilinearOperator,
    k_w: &ComplexOperator,
    actions: &[ComplexOperator],
    tol: f64,
) -> Result<TomitaComparison> {
    let e = crate::linalg::hermitian_function(
        &k_w.scale(C64::new(-std::f64::consts::PI, 0.0)),
        crate::linalg::SpectralFunction::Exp,
        tol,
    )?;
    let s_geo = j_geo.after_linear(&e);
    // S_alg is an involution, so S_alg⁻¹ = S_alg
    let c = s_geo.compose(subspace.tomita());
    let commutant_residual = actions.iter().map(|u| c.commutator(u).frobenius_norm()).fold(0.0, f64::max);
    let n = c.dim();
    let mu = c.trace() / n as f64;
    let scalar = (c.distance(&ComplexOperator::identity(n).scale(mu)) <= tol * (n as f64).sqrt()).then_some(mu);
    Ok(TomitaComparison {
        c,
        commutant_residual,
        scalar,
    })
}

/// [`tomita_quotient`] on wedge `name` of `net`, using the net's own boost
/// generator transported to the wedge.
pub fn compare_tomita(net: &NetModel, name: &str, j_geo: &AntilinearOperator) -> Result<TomitaComparison> {
    let i = net.wedge_index(name)?;
    tomita_quotient(
        &net.wedges[i].subspace,
        j_geo,
        &net.wedge_generator(i),
        &net.registered_unitaries(),
        net.tol,
    )
}

/// Whether `W₁ ⊆ W₂`: equal null normals and offsets `c₁ ≤ c₂`.
pub fn wedge_included(w1: &Wedge, w2: &Wedge, tol: f64) -> bool {
    let (a, b) = (w1.normal_form(), w2.normal_form());
    let check = |p: [usize; 2]| {
        (0..2).all(|i| a.normals[i].distance(&b.normals[p[i]]) <= tol && a.offsets[i] <= b.offsets[p[i]] + tol)
    };
    check([0, 1]) || check([1, 0])
}

/// `t·v₊` with `v₊ = (1, 0, 0, 1)`.
pub fn light_ray(t: f64) -> FourVector {
    FourVector::new(t, 0.0, 0.0, t)
}

