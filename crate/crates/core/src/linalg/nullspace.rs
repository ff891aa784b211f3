//! Numerical kernels via the singular value decomposition.

use nalgebra::{ComplexField, DMatrix, DVector};

/// A kernel is called well separated when the smallest discarded singular
/// value exceeds the largest kept one by at least this factor.
pub const GAP_RATIO: f64 = 1e3;

/// Kernel basis together with the singular-value evidence behind it.
#[derive(Clone, Debug)]
pub struct NullspaceReport<T: ComplexField<RealField = f64>> {
    /// Orthonormal kernel vectors.
    pub basis: Vec<DVector<T>>,
    /// All singular values, descending, padded with zeros up to the column count.
    pub singular_values: Vec<f64>,
    /// Absolute cut: singular values at or below it count as zero.
    pub threshold: f64,
    /// Ratio of the smallest retained-as-nonzero singular value to the
    /// largest one treated as zero. Infinite when the kernel is empty.
    pub gap: f64,
    pub clear_gap: bool,
}

impl<T: ComplexField<RealField = f64>> NullspaceReport<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Numerical rank at the chosen threshold.
    pub fn rank(&self) -> usize {
        self.singular_values.len() - self.basis.len()
    }
}

/// Orthonormal basis of `{v : M v ≈ 0}`.
///
/// Right singular vectors whose singular value is at most `tol·σ_max` are
/// returned. The report states how clearly the spectrum separates at that cut;
/// a blurry gap is reported through `clear_gap` rather than as an error.
pub fn nullspace<T: ComplexField<RealField = f64>>(m: &DMatrix<T>, tol: f64) -> NullspaceReport<T> {
    let cols = m.ncols();
    if cols == 0 {
        return NullspaceReport {
            basis: Vec::new(),
            singular_values: Vec::new(),
            threshold: 0.0,
            gap: f64::INFINITY,
            clear_gap: true,
        };
    }
    // Tall inputs are first compressed to a square triangular factor with the
    // same singular values and right singular vectors.
    let square = if m.nrows() > cols {
        m.clone().qr().r()
    } else {
        let mut padded = DMatrix::<T>::zeros(cols, cols);
        padded.rows_mut(0, m.nrows()).copy_from(m);
        padded
    };
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let sigma: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let sigma_max = sigma[0];
    let threshold = tol * sigma_max;

    let mut basis = Vec::new();
    let mut largest_zero: Option<f64> = None;
    let mut smallest_nonzero: Option<f64> = None;
    for (&idx, &s) in order.iter().zip(&sigma) {
        if s <= threshold {
            basis.push(v_t.row(idx).adjoint());
            largest_zero = Some(largest_zero.map_or(s, |z: f64| z.max(s)));
        } else {
            smallest_nonzero = Some(smallest_nonzero.map_or(s, |z: f64| z.min(s)));
        }
    }

    let floor = f64::EPSILON * sigma_max.max(f64::MIN_POSITIVE);
    let gap = match (smallest_nonzero, largest_zero) {
        (_, None) => f64::INFINITY,
        (Some(lo), Some(hi)) => lo / hi.max(floor),
        (None, Some(_)) => {
            if threshold > 0.0 {
                // everything sits under the cut; measure against the cut itself
                threshold / largest_zero.unwrap().max(floor)
            } else {
                f64::INFINITY
            }
        }
    };
    NullspaceReport {
        basis,
        singular_values: sigma,
        threshold,
        gap,
        clear_gap: gap >= GAP_RATIO,
    }
}
