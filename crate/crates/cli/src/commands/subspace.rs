use std::path::Path;

use modnet::io::{read_json, MatrixFile, SubspaceFile};
use modnet::linalg::CVector;
use modnet::subspace::{ModularResiduals, RealSubspace, StandardSubspace};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::output::{sci, yes_no, Report};

pub const NOT_SEPARATING: &str = "H ∩ iH ≠ {0}";
pub const NOT_CYCLIC: &str = "H + iH ≠ C^n";
pub const DEPENDENT: &str = "basis vectors are real-linearly dependent";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckReport {
    pub dim: usize,
    pub vectors: usize,
    /// `dim_R H`.
    pub real_dim: usize,
    /// `dim_R (H ∩ iH)`.
    pub intersection_dim: usize,
    /// `dim_C (H + iH)`.
    pub complex_span_dim: usize,
    pub separating: bool,
    pub cyclic: bool,
    pub standard: bool,
    pub reasons: Vec<String>,
}

impl CheckReport {
    fn pretty_lines(&self) -> String {
        let mut s = format!(
            "ambient dimension   {}\nreal dimension      {} (from {} vectors)\ndim_R(H ∩ iH)       {}\ndim_C(H + iH)       {}\nseparating          {}\ncyclic              {}\nstandard            {}\n",
            self.dim,
            self.real_dim,
            self.vectors,
            self.intersection_dim,
            self.complex_span_dim,
            yes_no(self.separating),
            yes_no(self.cyclic),
            yes_no(self.standard)
        );
        for r in &self.reasons {
            s.push_str(&format!("reason: {r}\n"));
        }
        s
    }
}

impl Report for CheckReport {
    fn pass(&self) -> bool {
        self.standard
    }

    fn failures(&self) -> Vec<String> {
        self.reasons.clone()
    }

    fn pretty(&self) -> String {
        self.pretty_lines()
    }
}

fn load(path: &Path) -> Result<(SubspaceFile, Vec<CVector>), CliError> {
    let file: SubspaceFile = read_json(path)?;
    let vectors = file.vectors()?;
    Ok((file, vectors))
}

fn check_vectors(dim: usize, vectors: &[CVector], tol: f64) -> Result<CheckReport, CliError> {
    let space = RealSubspace::span(dim, vectors, tol)?;
    let intersection_dim = space.intersection(&space.times_i(), tol).dim_real();
    let complex_span_dim = space.complex_span_dim(tol);
    let separating = intersection_dim == 0;
    let cyclic = complex_span_dim == dim;
    let mut reasons = Vec::new();
    if space.dim_real() < vectors.len() {
        reasons.push(DEPENDENT.to_string());
    }
    if !separating {
        reasons.push(NOT_SEPARATING.to_string());
    }
    if !cyclic {
        reasons.push(NOT_CYCLIC.to_string());
    }
    Ok(CheckReport {
        dim,
        vectors: vectors.len(),
        real_dim: space.dim_real(),
        intersection_dim,
        complex_span_dim,
        separating,
        cyclic,
        standard: separating && cyclic && space.dim_real() == dim && vectors.len() == dim,
        reasons,
    })
}

pub fn check(path: &Path, tol: f64) -> Result<CheckReport, CliError> {
    let (file, vectors) = load(path)?;
    check_vectors(file.dim, &vectors, tol)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularData {
    /// Ascending.
    pub delta_eigenvalues: Vec<f64>,
    pub delta_determinant: f64,
    pub tomita: MatrixFile,
    pub conjugation: MatrixFile,
    pub delta: MatrixFile,
    pub residuals: ModularResiduals,
    /// Residuals are compared with `tol · scale`, `scale = max(1, ‖Δ‖_F)`.
    pub scale: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularReport {
    pub tol: f64,
    pub check: CheckReport,
    pub modular: Option<ModularData>,
}

impl Report for ModularReport {
    fn pass(&self) -> bool {
        self.check.standard
            && self
                .modular
                .as_ref()
                .is_some_and(|m| m.residuals.max() <= self.tol * m.scale)
    }

    fn failures(&self) -> Vec<String> {
        let mut out = self.check.reasons.clone();
        if let Some(m) = &self.modular {
            if m.residuals.max() > self.tol * m.scale {
                out.push(format!("modular residual {} exceeds tolerance", sci(m.residuals.max())));
            }
        }
        out
    }

    fn pretty(&self) -> String {
        let mut s = self.check.pretty_lines();
        if let Some(m) = &self.modular {
            s.push_str("Δ eigenvalues:\n");
            for l in &m.delta_eigenvalues {
                s.push_str(&format!("  {l}\n"));
            }
            s.push_str(&format!("det Δ               {}\n", m.delta_determinant));
            s.push_str(&format!("max residual        {}\n", sci(m.residuals.max())));
        }
        s
    }
}

fn scale_of(h: &StandardSubspace) -> f64 {
    h.modular_operator().frobenius_norm().max(1.0)
}

pub fn modular(path: &Path, tol: f64) -> Result<ModularReport, CliError> {
    let (file, vectors) = load(path)?;
    let check = check_vectors(file.dim, &vectors, tol)?;
    let modular = if check.standard {
        let h = StandardSubspace::new(&vectors, tol)?;
        Some(ModularData {
            delta_eigenvalues: h.modular_spectrum(),
            delta_determinant: h.modular_operator().determinant().re,
            tomita: MatrixFile::from_antilinear(h.tomita()),
            conjugation: MatrixFile::from_antilinear(h.modular_conjugation()),
            delta: MatrixFile::from_operator(h.modular_operator()),
            residuals: h.residuals(),
            scale: scale_of(&h),
        })
    } else {
        None
    };
    Ok(ModularReport { tol, check, modular })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplementData {
    pub basis: SubspaceFile,
    /// `max |Im⟨h, k⟩| / (‖h‖‖k‖)` over the two bases.
    pub symplectic_residual: f64,
    /// `‖S_{H'} − S_H*‖`.
    pub tomita_adjoint_residual: f64,
    pub scale: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplementReport {
    pub tol: f64,
    pub check: CheckReport,
    pub complement: Option<ComplementData>,
}

impl ComplementData {
    fn within(&self, tol: f64) -> bool {
        self.symplectic_residual <= tol && self.tomita_adjoint_residual <= tol * self.scale
    }
}

impl Report for ComplementReport {
    fn pass(&self) -> bool {
        self.check.standard && self.complement.as_ref().is_some_and(|c| c.within(self.tol))
    }

    fn failures(&self) -> Vec<String> {
        let mut out = self.check.reasons.clone();
        if self.complement.as_ref().is_some_and(|c| !c.within(self.tol)) {
            out.push("complement residuals exceed tolerance".into());
        }
        out
    }

    fn pretty(&self) -> String {
        let mut s = self.check.pretty_lines();
        if let Some(c) = &self.complement {
            s.push_str("H' basis:\n");
            for v in &c.basis.basis {
                let parts: Vec<String> = v.iter().map(|[re, im]| format!("{re:+.6}{im:+.6}i")).collect();
                s.push_str(&format!("  ({})\n", parts.join(", ")));
            }
            s.push_str(&format!("symplectic residual {}\n", sci(c.symplectic_residual)));
            s.push_str(&format!("‖S_H' − S_H*‖       {}\n", sci(c.tomita_adjoint_residual)));
        }
        s
    }
}

pub fn complement(path: &Path, tol: f64) -> Result<ComplementReport, CliError> {
    let (file, vectors) = load(path)?;
    let check = check_vectors(file.dim, &vectors, tol)?;
    let complement = if check.standard {
        let h = StandardSubspace::new(&vectors, tol)?;
        let hc = h.complement(tol)?;
        let mut symplectic_residual = 0.0f64;
        for a in h.basis() {
            for b in hc.basis() {
                let r = a.dotc(b).im.abs() / (a.norm() * b.norm());
                symplectic_residual = symplectic_residual.max(r);
            }
        }
        Some(ComplementData {
            basis: SubspaceFile::from_vectors(file.dim, hc.basis()),
            symplectic_residual,
            tomita_adjoint_residual: hc.tomita().distance(&h.tomita().adjoint()),
            scale: scale_of(&h),
        })
    } else {
        None
    };
    Ok(ComplementReport { tol, check, complement })
}
