use modnet::spin::{decompose_counterexample, SpinDecomposition, SpinLabel};
use serde::{Deserialize, Serialize};

use crate::args::DecomposeArgs;
use crate::error::CliError;
use crate::output::Report;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeReport {
    pub n: u32,
    pub s: f64,
    pub cutoff: f64,
    pub records: SpinDecomposition,
    /// `Σ k (2j + 1)`.
    pub total_dimension: usize,
}

impl Report for DecomposeReport {
    fn pass(&self) -> bool {
        true
    }

    fn table(&self) -> Option<String> {
        Some(self.records.to_csv())
    }

    fn pretty(&self) -> String {
        let mut s = format!(
            "(⊕_{{i={}/2}}^{{{}}} D^i) ⊗ D^{}\n  mass  spin  multiplicity\n",
            self.n, self.cutoff, self.s
        );
        for r in &self.records.records {
            s.push_str(&format!("  {:<5} {:<5} {}\n", r.mass, r.spin.value(), r.multiplicity));
        }
        s.push_str(&format!("total dimension {}\n", self.total_dimension));
        s
    }
}

pub fn decompose(args: &DecomposeArgs) -> Result<DecomposeReport, CliError> {
    if !(args.mass >= 0.0) || !args.mass.is_finite() {
        return Err(CliError::Input(format!("--mass must be a finite non-negative number, got {}", args.mass)));
    }
    let spin = SpinLabel::new(args.s)?;
    let records = decompose_counterexample(args.n, spin, args.cutoff)?.with_mass(args.mass);
    Ok(DecomposeReport {
        n: args.n,
        s: spin.value(),
        cutoff: args.cutoff,
        total_dimension: records.total_dimension(),
        records,
    })
}
