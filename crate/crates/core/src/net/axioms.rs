use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::model::{light_ray, wedge_included, NetModel};
use crate::error::{Error, Result};
use crate::linalg::ComplexOperator;
use crate::momentum::GroupElement;

/// The checks run by [`verify_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Isotony,
    Covariance,
    Positivity,
    ReehSchlieder,
    TwistedLocality,
    BisognanoWichmann,
    ZMap,
    Duality,
    Twist,
    /// Half-sided inclusion `U(t·v₊)H(W₃) ⊆ H(W₃)` for `t ≥ 0`.
    Borchers,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::Isotony,
        Axiom::Covariance,
        Axiom::Positivity,
        Axiom::ReehSchlieder,
        Axiom::TwistedLocality,
        Axiom::BisognanoWichmann,
        Axiom::ZMap,
        Axiom::Duality,
        Axiom::Twist,
        Axiom::Borchers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Isotony => "isotony",
            Axiom::Covariance => "covariance",
            Axiom::Positivity => "positivity",
            Axiom::ReehSchlieder => "reeh_schlieder",
            Axiom::TwistedLocality => "twisted_locality",
            Axiom::BisognanoWichmann => "bisognano_wichmann",
            Axiom::ZMap => "z_map",
            Axiom::Duality => "duality",
            Axiom::Twist => "twist",
            Axiom::Borchers => "borchers",
        }
    }

    /// Parses a comma-separated list such as `bw,duality,borchers,locality`.
    pub fn parse_list(text: &str) -> Result<Vec<Axiom>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Axiom::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let a = match s {
            "isotony" => Axiom::Isotony,
            "covariance" => Axiom::Covariance,
            "positivity" => Axiom::Positivity,
            "rs" | "reeh_schlieder" => Axiom::ReehSchlieder,
            "locality" | "twisted_locality" => Axiom::TwistedLocality,
            "bw" | "bisognano_wichmann" => Axiom::BisognanoWichmann,
            "z" | "zmap" | "z_map" => Axiom::ZMap,
            "duality" => Axiom::Duality,
            "twist" => Axiom::Twist,
            "borchers" | "half_sided" => Axiom::Borchers,
            other => return Err(Error::Invalid(format!("unknown check {other:?}"))),
        };
        Ok(a)
    }
}

/// One line of an axiom report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub pass: bool,
    pub residual: f64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AxiomReport {
    pub entries: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }
}

/// Sampled parameters for the Z-map and boost checks.
pub const Z_SAMPLES: [f64; 5] = [-0.5, 0.0, 0.25, 0.5, 1.0];
/// Sampled non-negative light-ray parameters for the half-sided inclusion.
pub const HALF_SIDED_SAMPLES: [f64; 4] = [0.0, 0.25, 0.5, 1.0];

fn result(axiom: Axiom, residual: f64, tol: f64, detail: String) -> AxiomResult {
    AxiomResult {
        axiom,
        pass: residual.is_finite() && residual <= tol,
        residual,
        detail,
    }
}

fn max(iter: impl IntoIterator<Item = f64>) -> f64 {
    iter.into_iter().fold(0.0, f64::max)
}

/// Runs the selected checks (all of them when `checks` is empty) and returns
/// one entry per check, in the order of [`Axiom::ALL`]. A check passes when
/// its residual is at most `tol`.
pub fn verify_axioms(net: &NetModel, checks: &[Axiom], tol: f64) -> AxiomReport {
    let selected: Vec<Axiom> = Axiom::ALL
        .into_iter()
        .filter(|a| checks.is_empty() || checks.contains(a))
        .collect();
    AxiomReport {
        entries: selected.into_iter().map(|a| check(net, a, tol)).collect(),
    }
}

fn check(net: &NetModel, axiom: Axiom, tol: f64) -> AxiomResult {
    let wedges = net.wedges();
    let n = net.dim();
    let stol = net.tolerance();
    match axiom {
        Axiom::Isotony => {
            let mut count = 0;
            let mut r = 0.0f64;
            for (i, a) in wedges.iter().enumerate() {
                for (j, b) in wedges.iter().enumerate() {
                    if i != j && wedge_included(&a.wedge, &b.wedge, 1e-9) {
                        count += 1;
                        r = r.max(a.subspace.space().containment_residual(b.subspace.space()));
                    }
                }
            }
            result(axiom, r, tol, format!("{count} registered inclusions among {} wedges", wedges.len()))
        }
        Axiom::Covariance => {
            let mut r = 0.0f64;
            let mut worst = String::new();
            for p in net.covariance_pairs() {
                let u = net.table().unitary(&p.element).expect("registered element");
                let moved = wedges[p.from].subspace.space().image(&u, stol);
                let d = moved.distance(wedges[p.to].subspace.space());
                if d > r {
                    r = d;
                    worst = format!("; worst U({})H({}) vs H({})", p.element.label(), wedges[p.from].name, wedges[p.to].name);
                }
            }
            result(axiom, r, tol, format!("{} element-wedge pairs{worst}", net.covariance_pairs().len()))
        }
        Axiom::Positivity => {
            let r = max(net.table().momenta().iter().map(|p| (-p.0[0]).max(-p.square()).max(0.0)));
            result(
                axiom,
                r,
                tol,
                "model-certified: translations act diagonally on sample momenta; residual is the worst distance outside the closed forward cone".into(),
            )
        }
        Axiom::ReehSchlieder => {
            let missing = wedges
                .iter()
                .map(|w| (n - w.subspace.space().complex_span_dim(stol)) as f64)
                .fold(0.0, f64::max);
            result(axiom, missing, tol, "residual counts missing complex dimensions of H(W) + iH(W)".into())
        }
        Axiom::TwistedLocality => {
            let b = net.twist();
            let gamma = net.gamma();
            let mut count = 0;
            let mut r = 0.0f64;
            for (i, a) in wedges.iter().enumerate() {
                for (j, c) in wedges.iter().enumerate() {
                    if wedge_included(&a.wedge, &c.wedge.complement(), 1e-9) {
                        count += 1;
                        let bh = a.subspace.space().image(b, stol);
                        let comp = c.subspace.space().symplectic_complement(stol);
                        r = r.max(bh.containment_residual(&comp));
                    }
                    let _ = (i, j);
                }
            }
            let gamma_comm = max(net.registered_unitaries().iter().map(|u| gamma.commutator(u).frobenius_norm()));
            let gamma_fix = max(wedges.iter().map(|w| w.subspace.space().image(gamma, stol).distance(w.subspace.space())));
            let gamma_inv = (gamma * gamma).distance(&ComplexOperator::identity(n));
            result(
                axiom,
                r.max(gamma_comm).max(gamma_fix).max(gamma_inv),
                tol,
                format!("{count} spacelike pairs; Γ commutes with the action and fixes every H(W)"),
            )
        }
        Axiom::BisognanoWichmann => {
            let id = ComplexOperator::identity(n);
            let r = max((0..wedges.len()).flat_map(|i| Z_SAMPLES.map(|t| net.z_map(i, t).distance(&id))));
            result(axiom, r, tol, format!("max ‖Z(t) − 1‖ over {} wedges, t ∈ {:?}", wedges.len(), Z_SAMPLES))
        }
        Axiom::ZMap => {
            let mut r = 0.0f64;
            for i in 0..wedges.len() {
                let mut stabilizer: Vec<ComplexOperator> = net
                    .covariance_pairs()
                    .iter()
                    .filter(|p| p.from == i && p.to == i)
                    .map(|p| net.table().unitary(&p.element).expect("registered"))
                    .collect();
                // translations belong to G_W whatever their direction
                for (g, u) in net.table().elements() {
                    if matches!(g, GroupElement::Translation { .. }) {
                        stabilizer.push(u.clone());
                    }
                }
                for t in Z_SAMPLES {
                    let z = net.z_map(i, t);
                    r = r.max(max(stabilizer.iter().map(|u| z.commutator(u).frobenius_norm())));
                    let law = (&z * &net.z_map(i, 0.25)).distance(&net.z_map(i, t + 0.25));
                    r = r.max(law);
                }
            }
            result(axiom, r, tol, "Z(t) commutes with the registered stabilizer unitaries and is a one-parameter group".into())
        }
        Axiom::Duality => {
            let b = net.twist();
            let mut count = 0;
            let mut r = 0.0f64;
            let mut inverse = 0.0f64;
            for i in 0..wedges.len() {
                if let Some(j) = net.complement_of(i) {
                    count += 1;
                    let lhs = wedges[i].subspace.space().symplectic_complement(stol);
                    let rhs = wedges[j].subspace.space().image(b, stol);
                    r = r.max(lhs.distance(&rhs));
                    let di = wedges[i].subspace.modular_operator();
                    let dj = wedges[j].subspace.modular_operator();
                    inverse = inverse.max((di * dj).distance(&ComplexOperator::identity(n)));
                }
            }
            result(
                axiom,
                r,
                tol,
                format!("{count} wedges with complement in the family; max ‖Δ_W Δ_W' − 1‖ = {inverse:.3e}"),
            )
        }
        Axiom::Twist => {
            let b = net.twist();
            let bstar = b.adjoint();
            let r = max(wedges.iter().map(|w| {
                let d = w.subspace.modular_operator();
                let j = w.subspace.modular_conjugation();
                d.commutator(b).frobenius_norm().max(j.sandwich(b).distance(&bstar))
            }));
            result(axiom, r, tol, "[Δ, B] = 0 and J B J = B* on every wedge".into())
        }
        Axiom::Borchers => {
            let h = wedges[0].subspace.space();
            let r = max(HALF_SIDED_SAMPLES.map(|t| {
                let u = net.table().translation(light_ray(t));
                h.image(&u, stol).containment_residual(h)
            }));
            result(
                axiom,
                r,
                tol,
                format!(
                    "U(t·v₊)H(W₃) ⊆ H(W₃) for t ∈ {HALF_SIDED_SAMPLES:?}; in finite dimension inclusion forces equality, which forces U(t·v₊) = 1"
                ),
            )
        }
    }
}
