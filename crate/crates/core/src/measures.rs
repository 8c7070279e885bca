//! Scalar operations underlying the similarity and distance measures.
//!
//! All pairwise functions validate dimensions up front and evaluate both
//! orders of their arguments with the same sequence of floating-point
//! operations, so symmetric measures are symmetric bit for bit.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::vector::{AngleDeg, Vector};

/// Magnitude below which a vector is treated as numerically zero when a
/// nonzero magnitude is required for sampling.
pub const ZERO_MAGNITUDE_FLOOR: f64 = 1e-6;

fn check_dims(u: &Vector, v: &Vector) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(())
}

fn raw_dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn raw_norm2(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Inner product of two vectors of equal dimension.
///
/// Used directly as a similarity score: larger means more similar. The score
/// is unbounded and grows with vector magnitude, so collinear far-apart
/// vectors can outscore nearby ones.
pub fn dot_product(u: &Vector, v: &Vector) -> Result<f64> {
    check_dims(u, v)?;
    Ok(raw_dot(u.components(), v.components()))
}

/// The p-norm of a vector for integer order p >= 1.
///
/// p = 1 is the city-block length, p = 2 the Euclidean length. Orders 1 and 2
/// take dedicated paths so the common cases avoid `powf` rounding.
pub fn norm(u: &Vector, p: u32) -> Result<f64> {
    if p == 0 {
        return Err(Error::InvalidOrder);
    }
    Ok(raw_norm_slice(u.components(), p))
}

fn raw_norm_slice(a: &[f64], p: u32) -> f64 {
    match p {
        1 => a.iter().map(|x| x.abs()).sum(),
        2 => raw_norm2(a),
        _ => a
            .iter()
            .map(|x| x.abs().powi(p as i32))
            .sum::<f64>()
            .powf(1.0 / f64::from(p)),
    }
}

/// Cosine of the angle between two vectors, in [-1, 1].
///
/// Undefined when either vector has zero magnitude. Identical inputs return
/// exactly 1 so that downstream products keep self-comparisons exact; all
/// other results are clamped to the unit interval to absorb rounding spill.
pub fn cosine_similarity(u: &Vector, v: &Vector) -> Result<f64> {
    check_dims(u, v)?;
    let nu = raw_norm2(u.components());
    let nv = raw_norm2(v.components());
    if nu == 0.0 {
        return Err(Error::ZeroMagnitude { id: u.id().into() });
    }
    if nv == 0.0 {
        return Err(Error::ZeroMagnitude { id: v.id().into() });
    }
    if u.components() == v.components() {
        return Ok(1.0);
    }
    Ok((raw_dot(u.components(), v.components()) / (nu * nv)).clamp(-1.0, 1.0))
}

/// Angle between two vectors in degrees, in [0, 180].
pub fn angle_between(u: &Vector, v: &Vector) -> Result<AngleDeg> {
    let cos = cosine_similarity(u, v)?;
    AngleDeg::new(cos.acos().to_degrees())
}

/// Minkowski distance of integer order p >= 1.
///
/// p = 1 is the city-block distance, p = 2 the Euclidean distance. The
/// result is zero exactly when the component lists are equal.
pub fn minkowski_distance(u: &Vector, v: &Vector, p: u32) -> Result<f64> {
    if p == 0 {
        return Err(Error::InvalidOrder);
    }
    check_dims(u, v)?;
    let diffs = u
        .components()
        .iter()
        .zip(v.components())
        .map(|(x, y)| (x - y).abs());
    Ok(match p {
        1 => diffs.sum(),
        2 => diffs.map(|d| d * d).sum::<f64>().sqrt(),
        _ => diffs
            .map(|d| d.powi(p as i32))
            .sum::<f64>()
            .powf(1.0 / f64::from(p)),
    })
}

/// Euclidean distance reassembled from the two magnitudes and the dot
/// product, via ||u - v||^2 = ||u||^2 + ||v||^2 - 2 (u . v).
///
/// Rejects negative magnitudes and any dot product that exceeds the
/// Cauchy-Schwarz bound beyond rounding slack, since no vector pair can
/// produce such parts. A slightly negative radicand from cancellation is
/// clamped to zero.
pub fn euclidean_via_cosine_parts(norm_u: f64, norm_v: f64, dot: f64) -> Result<f64> {
    for value in [norm_u, norm_v] {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::NegativeNorm { value });
        }
    }
    let bound = norm_u * norm_v;
    if dot.abs() > bound * (1.0 + 1e-9) + 1e-12 {
        return Err(Error::InconsistentParts {
            dot_abs: dot.abs(),
            bound,
        });
    }
    let radicand = (norm_u * norm_u + norm_v * norm_v) - 2.0 * dot;
    Ok(radicand.max(0.0).sqrt())
}

/// Angle-dependent stretch factor 2 - cos(theta), in [1, 3].
///
/// The factor is 1 for aligned vectors, 2 for perpendicular ones, and 3 for
/// opposed ones, so multiplying a distance by it triples the separation of
/// antipodal pairs while leaving aligned pairs untouched.
pub fn jdm_factor(cosine: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&cosine) {
        return Err(Error::OutOfRange {
            value: cosine,
            lo: -1.0,
            hi: 1.0,
        });
    }
    Ok(2.0 - cosine)
}

/// Joint distance of order p: the Minkowski distance scaled by the
/// angle factor 2 - cos(theta).
///
/// Equal inputs short-circuit to exactly zero before the cosine is taken,
/// so self-distance never trips the zero-magnitude rule. A zero-magnitude
/// vector paired with a distinct one remains undefined.
pub fn jdm(u: &Vector, v: &Vector, p: u32) -> Result<f64> {
    let d = minkowski_distance(u, v, p)?;
    if d == 0.0 {
        return Ok(0.0);
    }
    let factor = jdm_factor(cosine_similarity(u, v)?)?;
    Ok(d * factor)
}

/// Joint similarity of order p: 1 / (1 + joint distance), in (0, 1].
///
/// Equal inputs score exactly 1, and the score decays toward zero as the
/// joint distance grows.
pub fn jsm(u: &Vector, v: &Vector, p: u32) -> Result<f64> {
    Ok(1.0 / (1.0 + jdm(u, v, p)?))
}

/// Number of positions at which two equal-length sequences differ.
pub fn hamming_distance<T: PartialEq>(a: &[T], b: &[T]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// A finite set of items for overlap-based comparison.
///
/// Items are deduplicated and kept in sorted order, so iteration and
/// equality are independent of insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ItemSet(BTreeSet<String>);

impl ItemSet {
    pub fn new<I, S>(items: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ItemSet(items.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, item: &str) -> bool {
        self.0.contains(item)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

impl<S: Into<String>> FromIterator<S> for ItemSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        ItemSet::new(iter)
    }
}

/// Jaccard index of two item sets: |intersection| / |union|, in [0, 1].
///
/// Undefined when both sets are empty. Two copies of the same non-empty set
/// score exactly 1; disjoint sets score exactly 0.
pub fn jaccard_index(a: &ItemSet, b: &ItemSet) -> Result<f64> {
    let union = a.0.union(&b.0).count();
    if union == 0 {
        return Err(Error::EmptyUnion);
    }
    let intersection = a.0.intersection(&b.0).count();
    Ok(intersection as f64 / union as f64)
}

/// Pearson correlation coefficient of two vectors, in [-1, 1].
///
/// Centers both inputs on their means before taking a normalized dot
/// product, so the score reflects linear co-movement rather than raw
/// magnitude. Undefined when either input is constant.
pub fn pearson_correlation(u: &Vector, v: &Vector) -> Result<f64> {
    check_dims(u, v)?;
    let n = u.dim() as f64;
    let mean_u = u.components().iter().sum::<f64>() / n;
    let mean_v = v.components().iter().sum::<f64>() / n;
    let mut cross = 0.0;
    let mut su2 = 0.0;
    let mut sv2 = 0.0;
    for (x, y) in u.components().iter().zip(v.components()) {
        let du = x - mean_u;
        let dv = y - mean_v;
        cross += du * dv;
        su2 += du * du;
        sv2 += dv * dv;
    }
    if su2 == 0.0 || sv2 == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok((cross / (su2 * sv2).sqrt()).clamp(-1.0, 1.0))
}
