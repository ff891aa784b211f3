use std::f64::consts::PI;
use std::path::Path;

use modnet::io::{parse_json, MatrixFile};
use modnet::lorentz::{covering_map, Axis, SL2Element};
use modnet::momentum::{mc_check, reflect_decompose, McVerdict, MassShellPoint, ModelSpec, OrbitModel};
use modnet::{ComplexOperator, Error};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::{CoverArgs, ReflectArgs};
use crate::error::CliError;
use crate::output::{sci, yes_no, Report};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverReport {
    pub tol: f64,
    pub sl2: MatrixFile,
    /// Row-major `Λ(A)`.
    pub lorentz: [[f64; 4]; 4],
    /// `‖Λᵀ g Λ − g‖_F`.
    pub metric_defect: f64,
    pub determinant: f64,
    /// `‖Λ(−A) − Λ(A)‖_F`.
    pub kernel_residual: f64,
    /// `max(1, ‖Λ‖_F)`; defects are compared with `tol · scale²`.
    pub scale: f64,
    pub proper_orthochronous: bool,
}

impl Report for CoverReport {
    fn pass(&self) -> bool {
        self.proper_orthochronous && self.kernel_residual <= self.tol * self.scale
    }

    fn failures(&self) -> Vec<String> {
        if self.pass() {
            Vec::new()
        } else {
            vec!["Λ(A) is not a proper orthochronous Lorentz matrix within tolerance".into()]
        }
    }

    fn pretty(&self) -> String {
        let mut s = String::from("Λ(A) =\n");
        for row in &self.lorentz {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>14.9}")).collect();
            s.push_str(&format!("  [{} ]\n", cells.join(" ")));
        }
        s.push_str(&format!("metric defect        {}\n", sci(self.metric_defect)));
        s.push_str(&format!("det Λ                {}\n", self.determinant));
        s.push_str(&format!("Λ(−A) − Λ(A)         {}\n", sci(self.kernel_residual)));
        s.push_str(&format!("proper orthochronous {}\n", yes_no(self.proper_orthochronous)));
        s
    }
}

pub fn cover(args: &CoverArgs, tol: f64) -> Result<CoverReport, CliError> {
    let axis = Axis::try_from(args.axis)?;
    let a = if let Some(path) = &args.input {
        let file: MatrixFile = modnet::io::read_json(path)?;
        let op = file.to_operator()?;
        if op.dim() != 2 {
            return Err(CliError::Input(format!("expected a 2x2 matrix, found {0}x{0}", op.dim())));
        }
        SL2Element::new(op.into_matrix(), tol)?
    } else if let Some(t) = args.boost {
        SL2Element::boost(axis, t)
    } else if let Some(theta) = args.rotation {
        SL2Element::rotation(axis, theta)
    } else {
        return Err(CliError::Input("one of --input, --boost, --rotation is required".into()));
    };
    let l = covering_map(&a);
    let scale = l.0.norm().max(1.0);
    let mut lorentz = [[0.0; 4]; 4];
    for (i, row) in lorentz.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = l.0[(i, j)];
        }
    }
    Ok(CoverReport {
        tol,
        sl2: MatrixFile::from_operator(&ComplexOperator::new(a.matrix().clone())?),
        lorentz,
        metric_defect: l.metric_defect(),
        determinant: l.determinant(),
        kernel_residual: covering_map(&-a.clone()).distance(&l),
        scale,
        proper_orthochronous: l.is_proper_orthochronous(tol * scale * scale),
    })
}

pub const EXCLUDED: &str = "excluded null orbit";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReflectReport {
    pub tol: f64,
    pub mass: f64,
    pub p: [f64; 4],
    pub excluded: bool,
    pub t_p: Option<f64>,
    pub theta_p: Option<f64>,
    pub theta_p_over_pi: Option<f64>,
    /// `‖Λ₃(t_p) R₃(θ_p) p − R₁(π) p‖`, compared with `tol · max(1, p₀)`.
    pub residual: Option<f64>,
    pub reasons: Vec<String>,
}

impl Report for ReflectReport {
    fn pass(&self) -> bool {
        !self.excluded && self.residual.is_some_and(|r| r <= self.tol * self.p[0].max(1.0))
    }

    fn failures(&self) -> Vec<String> {
        let mut out = self.reasons.clone();
        if !self.excluded && !self.pass() {
            out.push("reflection residual exceeds tolerance".into());
        }
        out
    }

    fn pretty(&self) -> String {
        let [p0, p1, p2, p3] = self.p;
        let mut s = format!("p = ({p0}, {p1}, {p2}, {p3}), m = {}\n", self.mass);
        if let (Some(t), Some(th), Some(r)) = (self.t_p, self.theta_p_over_pi, self.residual) {
            s.push_str(&format!("t_p      {t}\nθ_p      {th}·π\nresidual {}\n", sci(r)));
        }
        for r in &self.reasons {
            s.push_str(&format!("reason: {r}\n"));
        }
        s
    }
}

fn parse_momentum(text: &str) -> Result<[f64; 3], CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Input(format!("--p needs three comma-separated numbers, got {text:?}")));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| CliError::Input(format!("--p: {part:?} is not a number")))?;
    }
    Ok(out)
}

pub fn reflect(args: &ReflectArgs, tol: f64) -> Result<ReflectReport, CliError> {
    let p = MassShellPoint::new(args.mass, parse_momentum(&args.p)?)?;
    let mut report = ReflectReport {
        tol,
        mass: args.mass,
        p: p.momentum().0,
        excluded: false,
        t_p: None,
        theta_p: None,
        theta_p_over_pi: None,
        residual: None,
        reasons: Vec::new(),
    };
    match reflect_decompose(&p) {
        Ok(d) => {
            report.t_p = Some(d.t_p);
            report.theta_p = Some(d.theta_p);
            report.theta_p_over_pi = Some(d.theta_p / PI);
            report.residual = Some(d.residual(&p));
        }
        Err(Error::ExcludedNullOrbit) => {
            report.excluded = true;
            report.reasons.push(format!(
                "{EXCLUDED}: massless momentum along the x3 axis has no reflection decomposition"
            ));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}

/// Explicit unitaries for `U(G_W)` and `U(r_W)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitRepresentation {
    pub generators: Vec<MatrixFile>,
    pub reflection: MatrixFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McOutcome {
    /// `orbit_model` or `explicit`.
    pub source: String,
    pub dim: usize,
    pub generators: usize,
    pub verdict: McVerdict,
    pub commutant_dim: usize,
    pub residual: f64,
    /// Smallest singular-value gap met while solving for the commutant;
    /// `null` when every step separated its nullspace exactly.
    pub min_gap: Option<f64>,
    pub worst_singular_values: Vec<f64>,
    pub certificate_residual: Option<f64>,
    /// Path of the certificate projection, written when the check fails.
    pub certificate: Option<String>,
}

impl Report for McOutcome {
    fn pass(&self) -> bool {
        self.verdict == McVerdict::Holds
    }

    fn failures(&self) -> Vec<String> {
        match self.verdict {
            McVerdict::Holds => Vec::new(),
            McVerdict::Fails => vec![format!(
                "U(r_W) is not in U(G_W)''{}",
                self.certificate
                    .as_ref()
                    .map(|p| format!(" (certificate written to {p})"))
                    .unwrap_or_default()
            )],
            McVerdict::Inconclusive => vec!["commutant has no clear singular-value gap".into()],
        }
    }

    fn pretty(&self) -> String {
        let verdict = match self.verdict {
            McVerdict::Holds => "holds",
            McVerdict::Fails => "fails",
            McVerdict::Inconclusive => "inconclusive",
        };
        let mut s = format!(
            "source          {}\ndimension       {}\ngenerators      {}\ncommutant dim   {}\nverdict         {verdict}\nresidual        {}\nmin gap         {}\n",
            self.source,
            self.dim,
            self.generators,
            self.commutant_dim,
            sci(self.residual),
            self.min_gap.map_or_else(|| "exact".to_string(), sci)
        );
        if let Some(p) = &self.certificate {
            s.push_str(&format!("certificate     {p}\n"));
        }
        s
    }
}

pub fn mc(model: &Path, certificate: &Path, tol: f64) -> Result<McOutcome, CliError> {
    let text = std::fs::read_to_string(model)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", model.display())))?;
    let name = model.display().to_string();
    let value: Value = parse_json(&text, &name)?;
    let explicit = value.as_object().is_some_and(|o| o.contains_key("generators"));
    let (source, generators, reflection) = if explicit {
        let rep: ExplicitRepresentation = parse_json(&text, &name)?;
        let generators = rep
            .generators
            .iter()
            .map(MatrixFile::to_operator)
            .collect::<Result<Vec<_>, _>>()?;
        ("explicit", generators, rep.reflection.to_operator()?)
    } else {
        let spec: ModelSpec = parse_json(&text, &name)?;
        let rep = OrbitModel::build(&spec)?.representation()?;
        ("orbit_model", rep.generators(), rep.reflection)
    };
    let report = mc_check(&generators, &reflection, tol)?;
    let certificate_path = match (&report.verdict, &report.certificate) {
        (McVerdict::Fails, Some(p)) => {
            let json = serde_json::to_string_pretty(&MatrixFile::from_operator(p))
                .map_err(|e| CliError::Internal(e.to_string()))?;
            std::fs::write(certificate, json + "\n")
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", certificate.display())))?;
            Some(certificate.display().to_string())
        }
        _ => None,
    };
    Ok(McOutcome {
        source: source.into(),
        dim: reflection.dim(),
        generators: generators.len(),
        verdict: report.verdict,
        commutant_dim: report.commutant_dim,
        residual: report.residual,
        min_gap: Some(report.min_gap).filter(|g| g.is_finite()),
        worst_singular_values: report.worst_singular_values,
        certificate_residual: report.certificate_residual,
        certificate: certificate_path,
    })
}
