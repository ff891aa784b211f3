use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::SpinLabel;

/// Multiplicities of `D^{s1} ⊗ D^{s2}`: every `j = |s1−s2|, …, s1+s2` once.
pub fn clebsch_multiplicities(s1: SpinLabel, s2: SpinLabel) -> Vec<(SpinLabel, u32)> {
    let (a, b) = (s1.twice(), s2.twice());
    let lo = a.abs_diff(b);
    (lo..=a + b).step_by(2).map(|t| (SpinLabel::from_twice(t), 1)).collect()
}

/// One irreducible summand class with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinRecord {
    pub mass: f64,
    pub spin: SpinLabel,
    pub multiplicity: u32,
}

/// A finite multiset of `(mass, spin)` classes, sorted by mass then spin.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpinDecomposition {
    pub records: Vec<SpinRecord>,
}

impl SpinDecomposition {
    /// Aggregates `(mass, spin, multiplicity)` terms, summing repeated classes.
    /// Masses must be non-negative.
    pub fn from_terms(terms: impl IntoIterator<Item = (f64, SpinLabel, u32)>) -> Self {
        // non-negative floats order like their bit patterns
        let mut map: BTreeMap<(u64, SpinLabel), u32> = BTreeMap::new();
        for (mass, spin, k) in terms {
            if k > 0 {
                *map.entry((mass.to_bits(), spin)).or_default() += k;
            }
        }
        let records = map
            .into_iter()
            .map(|((bits, spin), multiplicity)| SpinRecord {
                mass: f64::from_bits(bits),
                spin,
                multiplicity,
            })
            .collect();
        Self { records }
    }

    /// Multiplicity of spin `j` summed over masses.
    pub fn multiplicity(&self, j: SpinLabel) -> u32 {
        self.records.iter().filter(|r| r.spin == j).map(|r| r.multiplicity).sum()
    }

    /// `Σ k (2j+1)`.
    pub fn total_dimension(&self) -> usize {
        self.records.iter().map(|r| r.multiplicity as usize * r.spin.dim()).sum()
    }

    pub fn with_mass(mut self, mass: f64) -> Self {
        for r in &mut self.records {
            r.mass = mass;
        }
        self
    }

    /// `mass,spin,multiplicity` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("mass,spin,multiplicity\n");
        for r in &self.records {
            out.push_str(&format!("{},{},{}\n", r.mass, r.spin.value(), r.multiplicity));
        }
        out
    }
}

/// The spins `i = n/2, n/2 + 1, …` not exceeding `cutoff`.
pub fn restriction_spins(n: u32, cutoff: f64) -> Result<Vec<SpinLabel>> {
    let lower = n as f64 / 2.0;
    if !(cutoff >= lower) {
        return Err(Error::InvalidCutoff { cutoff, lower });
    }
    let mut out = Vec::new();
    let mut twice = n;
    while twice as f64 / 2.0 <= cutoff + 1e-9 {
        out.push(SpinLabel::from_twice(twice));
        twice += 2;
    }
    Ok(out)
}

/// Truncated content of `(⊕_{i ≥ n/2} D^i) ⊗ D^s`: for each `i = n/2, …, N` in
/// integer steps, the spins `|s−i|, …, s+i` once each, aggregated. Records
/// carry mass `1`; use [`SpinDecomposition::with_mass`] to relabel.
pub fn decompose_counterexample(n: u32, s: SpinLabel, cutoff: f64) -> Result<SpinDecomposition> {
    let spins = restriction_spins(n, cutoff)?;
    Ok(SpinDecomposition::from_terms(
        spins
            .into_iter()
            .flat_map(|i| clebsch_multiplicities(i, s))
            .map(|(j, k)| (1.0, j, k)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let half = SpinLabel::HALF;
        assert_eq!(
            clebsch_multiplicities(half, half),
            vec![(SpinLabel::ZERO, 1), (SpinLabel::ONE, 1)]
        );
        let s = SpinLabel::from_twice(3);
        assert_eq!(clebsch_multiplicities(SpinLabel::ZERO, s), vec![(s, 1)]);

        let d = decompose_counterexample(1, half, 1.5).unwrap();
        assert_eq!(d.multiplicity(SpinLabel::ZERO), 1);
        assert_eq!(d.multiplicity(SpinLabel::ONE), 2);
        assert_eq!(d.multiplicity(SpinLabel::from_twice(4)), 1);
        assert_eq!(d.records.len(), 3);
        assert_eq!(d.total_dimension(), (2 + 4) * 2);
    }

    #[test]
    fn cutoff_below_lower_end_is_rejected() {
        assert!(matches!(
            decompose_counterexample(3, SpinLabel::ZERO, 1.0),
            Err(Error::InvalidCutoff { .. })
        ));
        assert_eq!(restriction_spins(3, 1.5).unwrap(), vec![SpinLabel::from_twice(3)]);
        assert_eq!(restriction_spins(0, 2.7).unwrap().len(), 3);
    }

    #[test]
    fn json_and_csv_shapes() {
        let d = decompose_counterexample(0, SpinLabel::ZERO, 1.0).unwrap().with_mass(2.0);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"[{"mass":2.0,"spin":0.0,"multiplicity":1},{"mass":2.0,"spin":1.0,"multiplicity":1}]"#
        );
        assert_eq!(serde_json::from_str::<SpinDecomposition>(&json).unwrap(), d);
        assert_eq!(d.to_csv(), "mass,spin,multiplicity\n2,0,1\n2,1,1\n");
    }
}
