use std::fmt;

use crate::error::{Error, Result};
use crate::measures;
use crate::vector::Vector;

/// Whether a measure grows with closeness or with separation.
///
/// Ranking needs the direction: similarity scores rank best-first by
/// descending value, distances by ascending value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Similarity,
    Distance,
}

/// A selectable measure, including its integer order where one applies.
///
/// The parameterized variants carry their order so that, for example,
/// `Jdm(1)` and `Jdm(2)` act as distinct columns in a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Cosine,
    DotProduct,
    Euclidean,
    CityBlock,
    Minkowski(u32),
    Hamming,
    Jaccard,
    Pearson,
    Jdm(u32),
    Jsm(u32),
}

impl MeasureKind {
    pub fn polarity(self) -> Polarity {
        match self {
            MeasureKind::Cosine
            | MeasureKind::DotProduct
            | MeasureKind::Jaccard
            | MeasureKind::Pearson
            | MeasureKind::Jsm(_) => Polarity::Similarity,
            MeasureKind::Euclidean
            | MeasureKind::CityBlock
            | MeasureKind::Minkowski(_)
            | MeasureKind::Hamming
            | MeasureKind::Jdm(_) => Polarity::Distance,
        }
    }

    /// Short column label, stable across output styles.
    pub fn label(self) -> String {
        match self {
            MeasureKind::Cosine => "CSM".into(),
            MeasureKind::DotProduct => "DPSM".into(),
            MeasureKind::Euclidean => "EDM".into(),
            MeasureKind::CityBlock => "CBDM".into(),
            MeasureKind::Minkowski(p) => format!("MDM {p}"),
            MeasureKind::Hamming => "Hamming".into(),
            MeasureKind::Jaccard => "JSI".into(),
            MeasureKind::Pearson => "PCC".into(),
            MeasureKind::Jdm(p) => format!("JDM {p}"),
            MeasureKind::Jsm(p) => format!("JSM {p}"),
        }
    }

    /// True for measures whose value depends on the angle between the
    /// vectors, and which therefore reject zero-magnitude inputs.
    pub fn needs_cosine(self) -> bool {
        matches!(
            self,
            MeasureKind::Cosine | MeasureKind::Jdm(_) | MeasureKind::Jsm(_)
        )
    }

    /// Evaluate this measure on a pair of numeric vectors.
    ///
    /// The set-based Jaccard index has no numeric-vector form and always
    /// errors here; the Hamming variant counts differing components.
    pub fn evaluate(self, u: &Vector, v: &Vector) -> Result<f64> {
        match self {
            MeasureKind::Cosine => measures::cosine_similarity(u, v),
            MeasureKind::DotProduct => measures::dot_product(u, v),
            MeasureKind::Euclidean => measures::minkowski_distance(u, v, 2),
            MeasureKind::CityBlock => measures::minkowski_distance(u, v, 1),
            MeasureKind::Minkowski(p) => measures::minkowski_distance(u, v, p),
            MeasureKind::Hamming => {
                measures::hamming_distance(u.components(), v.components()).map(|d| d as f64)
            }
            MeasureKind::Jaccard => Err(Error::NotAVectorMeasure {
                label: self.label(),
            }),
            MeasureKind::Pearson => measures::pearson_correlation(u, v),
            MeasureKind::Jdm(p) => measures::jdm(u, v, p),
            MeasureKind::Jsm(p) => measures::jsm(u, v, p),
        }
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
