use std::path::Path;

use modnet::io::read_json;
use modnet::split::{growth_report, trace_below_one, GrowthReport, GrowthVerdict, MeasureModel, ModularSpectrum, Provenance};
use serde::{Deserialize, Serialize};

use crate::args::GrowthArgs;
use crate::error::CliError;
use crate::output::{sci, Report};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceReport {
    pub count: usize,
    pub provenance: Provenance,
    /// `Σ_{λ ≤ 1} λ`, exactly rounded.
    pub trace_below_one: f64,
    /// Distance of the spectrum from being closed under `λ ↦ 1/λ`.
    pub pairing_defect: f64,
}

impl Report for TraceReport {
    fn pass(&self) -> bool {
        true
    }

    fn table(&self) -> Option<String> {
        Some(format!(
            "count,trace_below_one,pairing_defect\n{},{},{:e}\n",
            self.count, self.trace_below_one, self.pairing_defect
        ))
    }

    fn pretty(&self) -> String {
        format!(
            "eigenvalues        {}\nTr Δ|_[0,1]        {}\npairing defect     {}\n",
            self.count,
            self.trace_below_one,
            sci(self.pairing_defect)
        )
    }
}

pub fn trace(path: &Path) -> Result<TraceReport, CliError> {
    let spec: ModularSpectrum = read_json(path)?;
    spec.validate()?;
    Ok(TraceReport {
        count: spec.len(),
        provenance: spec.provenance,
        trace_below_one: trace_below_one(&spec),
        pairing_defect: spec.pairing_defect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthOutcome {
    pub max_n: usize,
    pub multiplicity_bound: u32,
    pub growth: GrowthReport,
}

impl Report for GrowthOutcome {
    fn pass(&self) -> bool {
        true
    }

    fn table(&self) -> Option<String> {
        Some(self.growth.to_csv())
    }

    fn pretty(&self) -> String {
        let verdict = match self.growth.verdict {
            GrowthVerdict::AtomicLike => "atomic-like",
            GrowthVerdict::ContinuumLike => "continuum-like",
            GrowthVerdict::Indeterminate => "indeterminate",
        };
        let mut s = String::from("   N  points  Tr Δ_F|_[0,1]\n");
        for r in &self.growth.rows {
            s.push_str(&format!("{:>4}  {:>6}  {}\n", r.n, r.mass_points, r.trace));
        }
        s.push_str(&format!(
            "per-point lower bound c = {}\ntrace ≥ N·c on every row: {}\nverdict: {verdict}\n",
            self.growth.per_point_lower_bound, self.growth.linear_bound_holds
        ));
        s
    }
}

pub fn growth(args: &GrowthArgs) -> Result<GrowthOutcome, CliError> {
    let model: MeasureModel = read_json(&args.surrogate)?;
    let max_n = args.max_n as usize;
    Ok(GrowthOutcome {
        max_n,
        multiplicity_bound: args.multiplicity_bound,
        growth: growth_report(&model, max_n, args.multiplicity_bound)?,
    })
}
