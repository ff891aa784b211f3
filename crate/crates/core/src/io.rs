//! JSON file formats.
//!
//! Complex numbers are written as `[re, im]` pairs everywhere. Every record
//! rejects unknown keys.
//!
//! | file | shape |
//! |------|-------|
//! | matrix | `{"dim": n, "entries": [[re, im], ...], "antilinear": true?}`, row-major |
//! | subspace | `{"dim": n, "basis": [[[re, im], ...], ...]}` |
//! | model | [`ModelSpec`] |
//! | net | [`NetSpec`] |
//! | spectrum | [`ModularSpectrum`](crate::split::ModularSpectrum) |
//! | surrogate | [`MassMeasureSurrogate`](crate::split::MassMeasureSurrogate) or [`MeasureModel`](crate::split::MeasureModel) |
//!
//! ```
//! use modnet::io::{MatrixFile, SubspaceFile};
//!
//! let h: SubspaceFile = serde_json::from_str(
//!     r#"{"dim": 2, "basis": [[[1, 0], [0, 0]], [[0, 1], [1, 0]]]}"#,
//! ).unwrap();
//! let s = h.to_standard(1e-9).unwrap();
//! let m = MatrixFile::from_operator(s.modular_operator());
//! assert_eq!(m.entries.len(), 4);
//! assert!(serde_json::from_str::<SubspaceFile>(r#"{"dim": 1, "basis": [], "extra": 0}"#).is_err());
//! ```

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{AntilinearOperator, CMatrix, CVector, ComplexOperator, C64};
use crate::momentum::{ModelSpec, OrbitModel};
use crate::net::{bgl_construct, scalar_conjugation, spin_half_conjugation, ActionTable, NetModel};
use crate::subspace::StandardSubspace;

fn to_pair(z: &C64) -> [f64; 2] {
    [z.re, z.im]
}

fn from_pair(p: &[f64; 2]) -> C64 {
    C64::new(p[0], p[1])
}

/// A dense matrix, linear or antilinear.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub antilinear: bool,
}

impl MatrixFile {
    fn from_matrix(m: &CMatrix, antilinear: bool) -> Self {
        let n = m.nrows();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(to_pair(&m[(i, j)]));
            }
        }
        MatrixFile { dim: n, entries, antilinear }
    }

    pub fn from_operator(op: &ComplexOperator) -> Self {
        Self::from_matrix(op.matrix(), false)
    }

    pub fn from_antilinear(op: &AntilinearOperator) -> Self {
        Self::from_matrix(op.matrix(), true)
    }

    fn matrix(&self) -> Result<CMatrix> {
        if self.dim == 0 || self.entries.len() != self.dim * self.dim {
            return Err(Error::Invalid(format!(
                "a {0}x{0} matrix needs {1} entries, found {2}",
                self.dim,
                self.dim * self.dim,
                self.entries.len()
            )));
        }
        if self.entries.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Invalid("matrix entries must be finite".into()));
        }
        Ok(CMatrix::from_fn(self.dim, self.dim, |i, j| from_pair(&self.entries[i * self.dim + j])))
    }

    pub fn to_operator(&self) -> Result<ComplexOperator> {
        if self.antilinear {
            return Err(Error::Invalid("expected a linear operator, found \"antilinear\": true".into()));
        }
        ComplexOperator::new(self.matrix()?)
    }

    pub fn to_antilinear(&self) -> Result<AntilinearOperator> {
        if !self.antilinear {
            return Err(Error::Invalid("expected an antilinear operator (\"antilinear\": true)".into()));
        }
        AntilinearOperator::new(self.matrix()?)
    }
}

/// A list of vectors spanning a real subspace of `C^dim`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub dim: usize,
    pub basis: Vec<Vec<[f64; 2]>>,
}

impl SubspaceFile {
    pub fn from_vectors(dim: usize, vectors: &[CVector]) -> Self {
        SubspaceFile {
            dim,
            basis: vectors.iter().map(|v| v.iter().map(to_pair).collect()).collect(),
        }
    }

    pub fn vectors(&self) -> Result<Vec<CVector>> {
        if self.dim == 0 {
            return Err(Error::Invalid("dim must be positive".into()));
        }
        self.basis
            .iter()
            .map(|v| {
                if v.len() != self.dim {
                    return Err(Error::DimensionMismatch {
                        expected: self.dim,
                        found: v.len(),
                    });
                }
                if v.iter().flatten().any(|x| !x.is_finite()) {
                    return Err(Error::Invalid("vector entries must be finite".into()));
                }
                Ok(CVector::from_iterator(self.dim, v.iter().map(from_pair)))
            })
            .collect()
    }

    pub fn to_standard(&self, tol: f64) -> Result<StandardSubspace> {
        StandardSubspace::new(&self.vectors()?, tol)
    }
}

/// Where a net takes its model from: a path (relative to the net file) or an
/// inline model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModelSource {
    Path(PathBuf),
    Inline(ModelSpec),
}

/// Net description. `J` and `K` default to the scalar conjugation and the
/// boost generator of the model; with `fermionic` the model's action is
/// lifted to spin ½ and a default `J` is lifted with it. A supplied `J` or `K`
/// must already match the (lifted) dimension. `wedges` names wedges that must
/// exist in the generated family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetSpec {
    pub model: ModelSource,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<MatrixFile>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<MatrixFile>,
    #[serde(default)]
    pub fermionic: bool,
    #[serde(default)]
    pub wedges: Vec<String>,
}

impl NetSpec {
    /// Resolves the model (paths relative to `base`) and builds the net.
    pub fn build(&self, base: &Path, tol: f64) -> Result<NetModel> {
        let spec = match &self.model {
            ModelSource::Inline(s) => s.clone(),
            ModelSource::Path(p) => read_json(&base.join(p))?,
        };
        let model = OrbitModel::build(&spec)?;
        let scalar = ActionTable::from_model(&model)?;
        let mut table = if self.fermionic { scalar.spin_half_lift()? } else { scalar };
        if let Some(k) = &self.k {
            let k = k.to_operator()?;
            k.ensure_hermitian(tol)?;
            table = ActionTable::new(table.elements().to_vec(), table.momenta().to_vec(), k, tol)?;
        }
        let j = match &self.j {
            Some(j) => j.to_antilinear()?,
            None if self.fermionic => spin_half_conjugation(&scalar_conjugation(&model)?)?,
            None => scalar_conjugation(&model)?,
        };
        let net = bgl_construct(&j, &table, self.fermionic, tol)?;
        for name in &self.wedges {
            net.wedge(name)?;
        }
        Ok(net)
    }
}

/// Parses JSON text, naming `source_name` in errors.
pub fn parse_json<T: DeserializeOwned>(text: &str, source_name: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        source_name: source_name.to_string(),
        reason: e.to_string(),
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_json(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn matrix_round_trip() {
        let op = ComplexOperator::new(CMatrix::from_fn(3, 3, |i, j| c(i as f64, j as f64 - 1.0))).unwrap();
        let file = MatrixFile::from_operator(&op);
        let text = serde_json::to_string(&file).unwrap();
        assert!(!text.contains("antilinear"));
        let back: MatrixFile = parse_json(&text, "test").unwrap();
        assert_eq!(back.to_operator().unwrap().distance(&op), 0.0);
        assert!(back.to_antilinear().is_err());
    }

    #[test]
    fn antilinear_flag_is_kept() {
        let j = AntilinearOperator::conjugation(2);
        let text = serde_json::to_string(&MatrixFile::from_antilinear(&j)).unwrap();
        assert!(text.contains("\"antilinear\":true"));
        let back: MatrixFile = parse_json(&text, "test").unwrap();
        assert_eq!(back.to_antilinear().unwrap().matrix(), j.matrix());
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let short = MatrixFile { dim: 2, entries: vec![[1.0, 0.0]; 3], antilinear: false };
        assert!(matches!(short.to_operator(), Err(Error::Invalid(_))));
        let ragged = SubspaceFile { dim: 2, basis: vec![vec![[1.0, 0.0]]] };
        assert!(matches!(ragged.vectors(), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(parse_json::<MatrixFile>("{", "x"), Err(Error::Parse { .. })));
        assert!(parse_json::<NetSpec>(r#"{"model": "m.json", "bogus": 1}"#, "x").is_err());
    }

    #[test]
    fn inline_net_spec_builds() {
        let text = r#"{
            "model": {"masses": [1], "orbits": [{"r": 1, "rapidity_N": 3, "angle_N": 2}],
                      "elements": [{"kind": "r1_pi"}], "rapidity_step": 6.283185307179586},
            "wedges": ["W3", "W3'"]
        }"#;
        let spec: NetSpec = parse_json(text, "inline").unwrap();
        let net = spec.build(Path::new("."), 1e-9).unwrap();
        assert_eq!(net.dim(), 6);
        let mut bad = spec.clone();
        bad.wedges.push("W7".into());
        assert!(matches!(bad.build(Path::new("."), 1e-9), Err(Error::UnknownWedge(_))));
        let mut fermi = spec;
        fermi.fermionic = true;
        assert_eq!(fermi.build(Path::new("."), 1e-9).unwrap().dim(), 12);
    }
}
