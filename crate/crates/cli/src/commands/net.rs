use std::path::Path;

use modnet::io::{read_json, NetSpec};
use modnet::net::{canonical_scalar_net, tensor_demonstrator, verify_axioms, Axiom, AxiomReport, DemonstratorReport, InternalAction};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::output::{sci, yes_no, Report};

pub const BW_FAILS: &str = "B-W FAILS for U_V";
pub const BW_HOLDS: &str = "B-W holds for U_V";

fn base_dir(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyReport {
    pub dim: usize,
    pub fermionic: bool,
    pub wedges: Vec<String>,
    pub results: AxiomReport,
}

impl Report for VerifyReport {
    fn pass(&self) -> bool {
        self.results.all_pass()
    }

    fn failures(&self) -> Vec<String> {
        self.results
            .failures()
            .into_iter()
            .map(|r| format!("{} failed (residual {}): {}", r.axiom.name(), sci(r.residual), r.detail))
            .collect()
    }

    fn table(&self) -> Option<String> {
        let mut s = String::from("axiom,pass,residual\n");
        for r in &self.results.entries {
            s.push_str(&format!("{},{},{:e}\n", r.axiom.name(), r.pass, r.residual));
        }
        Some(s)
    }

    fn pretty(&self) -> String {
        let mut s = format!(
            "dimension {}, fermionic {}, wedges: {}\n",
            self.dim,
            yes_no(self.fermionic),
            self.wedges.join(", ")
        );
        for r in &self.results.entries {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!("  {:<20} {verdict}  {}  {}\n", r.axiom.name(), sci(r.residual), r.detail));
        }
        s
    }
}

pub fn verify(spec_path: &Path, checks: Option<&str>, tol: f64) -> Result<VerifyReport, CliError> {
    let spec: NetSpec = read_json(spec_path)?;
    let net = spec.build(base_dir(spec_path), tol)?;
    let checks = match checks {
        Some(text) => Axiom::parse_list(text)?,
        None => Axiom::ALL.to_vec(),
    };
    if checks.is_empty() {
        return Err(CliError::Input("--checks names no check".into()));
    }
    Ok(VerifyReport {
        dim: net.dim(),
        fermionic: net.is_fermionic(),
        wedges: net.wedges().iter().map(|w| w.name.clone()).collect(),
        results: verify_axioms(&net, &checks, tol),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DemoReport {
    pub omega: f64,
    /// The base net file, or `canonical` for the built-in scalar net.
    pub base: String,
    pub demonstrator: DemonstratorReport,
}

impl Report for DemoReport {
    /// The construction is sound when the untwisted action `U ⊗ 1` keeps B-W;
    /// whether `U_V` breaks it is the reported finding, not a failure.
    fn pass(&self) -> bool {
        self.demonstrator.bw_holds_u_i
    }

    fn failures(&self) -> Vec<String> {
        if self.pass() {
            Vec::new()
        } else {
            vec![format!("B-W fails already for U ⊗ 1 (residual {})", sci(self.demonstrator.bw_residual_u_i))]
        }
    }

    fn pretty(&self) -> String {
        let d = &self.demonstrator;
        let mut s = format!(
            "base net {}, ω = {}, dimension {} ⊗ {}\n",
            self.base,
            self.omega,
            d.total_dim / d.internal_dim,
            d.internal_dim
        );
        s.push_str(&format!("B-W residual for U ⊗ 1: {}\n", sci(d.bw_residual_u_i)));
        s.push_str(&format!("B-W residual for U_V:   {}\n", sci(d.bw_residual_u_v)));
        s.push_str("Z_V(t) eigenphases:\n");
        for row in &d.z_phases {
            let phases: Vec<String> = row.phases_over_pi.iter().map(|p| format!("e^{{{p}·πi}}")).collect();
            s.push_str(&format!("  t = {:<5} {}\n", row.t, phases.join(", ")));
        }
        s.push_str(if d.bw_fails_u_v { BW_FAILS } else { BW_HOLDS });
        s.push('\n');
        s
    }
}

pub fn demo(omega: f64, spec_path: Option<&Path>, tol: f64) -> Result<DemoReport, CliError> {
    if !omega.is_finite() {
        return Err(CliError::Input(format!("--omega must be finite, got {omega}")));
    }
    let (base, net) = match spec_path {
        Some(path) => {
            let spec: NetSpec = read_json(path)?;
            (path.display().to_string(), spec.build(base_dir(path), tol)?)
        }
        None => ("canonical".to_string(), canonical_scalar_net(tol)?),
    };
    Ok(DemoReport {
        omega,
        base,
        demonstrator: tensor_demonstrator(&net, &InternalAction::plane_rotation(omega))?,
    })
}
