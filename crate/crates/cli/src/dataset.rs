//! Loading named vector collections from CSV and JSON files.
//!
//! Both formats describe the same thing: an ordered list of vectors with
//! unique string ids and one shared dimension. CSV files carry a header
//! whose first column is `id` followed by one column per component. JSON
//! files carry an array of `{"id": ..., "values": [...]}` objects.

use std::fmt;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use thiserror::Error;
use vecsim::Vector;

/// On-disk encoding of a dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Infer the encoding from a file extension, case-insensitively.
    pub fn infer(path: &Path) -> Option<Format> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Format::Csv => f.write_str("csv"),
            Format::Json => f.write_str("json"),
        }
    }
}

/// Why a dataset could not be produced from a file.
///
/// `line` fields are 1-based file lines for CSV sources and 1-based entry
/// ordinals for JSON sources, where physical lines carry no meaning.
#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot infer csv or json from {path:?}; pass --format")]
    UnknownFormat { path: String },
    #[error("malformed csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("header must name an id column first, found {found:?}")]
    InvalidHeader { found: String },
    #[error("header names no component columns")]
    NoComponents,
    #[error("row at line {line} has {found} components, expected {expected}")]
    RaggedRow {
        line: u64,
        expected: usize,
        found: usize,
    },
    #[error("component {token:?} at line {line} is not a finite number")]
    NonNumeric { line: u64, token: String },
    #[error("json root must be an array of objects")]
    NotAnArray,
    #[error("json entry {line} is malformed: {reason}")]
    MalformedEntry { line: u64, reason: String },
    #[error("duplicate vector id {id:?}")]
    DuplicateId { id: String },
    #[error("dataset {name:?} contains no vectors")]
    EmptyDataset { name: String },
    #[error("no vector with id {id:?} in dataset {name:?}")]
    UnknownId { id: String, name: String },
    #[error(transparent)]
    Invalid(#[from] vecsim::Error),
}

/// An ordered collection of uniquely identified vectors sharing one
/// dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    name: String,
    vectors: Vec<Vector>,
}

impl Dataset {
    /// Wrap already-parsed vectors, enforcing the collection invariants:
    /// at least one vector, unique ids, and a single shared dimension.
    pub fn from_vectors(name: &str, vectors: Vec<Vector>) -> Result<Self, DatasetError> {
        let Some(first) = vectors.first() else {
            return Err(DatasetError::EmptyDataset {
                name: name.to_string(),
            });
        };
        let dim = first.dim();
        let mut seen = std::collections::BTreeSet::new();
        for vector in &vectors {
            if !seen.insert(vector.id().to_string()) {
                return Err(DatasetError::DuplicateId {
                    id: vector.id().to_string(),
                });
            }
            if vector.dim() != dim {
                return Err(DatasetError::Invalid(vecsim::Error::DimensionMismatch {
                    left: dim,
                    right: vector.dim(),
                }));
            }
        }
        Ok(Dataset {
            name: name.to_string(),
            vectors,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Vectors in file order.
    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Shared dimension of every vector in the collection.
    pub fn dim(&self) -> usize {
        self.vectors[0].dim()
    }

    /// Look up a vector by id.
    pub fn get(&self, id: &str) -> Result<&Vector, DatasetError> {
        self.vectors
            .iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| DatasetError::UnknownId {
                id: id.to_string(),
                name: self.name.clone(),
            })
    }
}

/// Parse a dataset from any byte source in the given encoding. `name` is
/// carried into the dataset and its error messages; file loaders pass the
/// file stem.
pub fn parse_dataset(
    source: impl Read,
    format: Format,
    name: &str,
) -> Result<Dataset, DatasetError> {
    let vectors = match format {
        Format::Csv => parse_csv(source)?,
        Format::Json => parse_json(source)?,
    };
    Dataset::from_vectors(name, vectors)
}

/// Load a dataset from disk, inferring the encoding from the extension
/// unless one is given.
pub fn load_dataset(path: &Path, format: Option<Format>) -> Result<Dataset, DatasetError> {
    let format = match format {
        Some(format) => format,
        None => Format::infer(path).ok_or_else(|| DatasetError::UnknownFormat {
            path: path.display().to_string(),
        })?,
    };
    let file = File::open(path).map_err(|source| DatasetError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let name = path
        .file_stem()
        .and_then(|stem| stem.to_str())
        .unwrap_or("dataset");
    parse_dataset(file, format, name)
}

fn parse_csv(source: impl Read) -> Result<Vec<Vector>, DatasetError> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(source);

    let headers = reader.headers()?.clone();
    match headers.get(0) {
        Some("id") => {}
        found => {
            return Err(DatasetError::InvalidHeader {
                found: found.unwrap_or("").to_string(),
            })
        }
    }
    let expected = headers.len() - 1;
    if expected == 0 {
        return Err(DatasetError::NoComponents);
    }

    let mut vectors = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != expected + 1 {
            return Err(DatasetError::RaggedRow {
                line,
                expected,
                found: record.len().saturating_sub(1),
            });
        }
        let id = record.get(0).unwrap_or("");
        let mut components = Vec::with_capacity(expected);
        for token in record.iter().skip(1) {
            let value: f64 = token.parse().map_err(|_| DatasetError::NonNumeric {
                line,
                token: token.to_string(),
            })?;
            if !value.is_finite() {
                return Err(DatasetError::NonNumeric {
                    line,
                    token: token.to_string(),
                });
            }
            components.push(value);
        }
        vectors.push(Vector::new(id, components)?);
    }
    Ok(vectors)
}

fn parse_json(mut source: impl Read) -> Result<Vec<Vector>, DatasetError> {
    let mut text = String::new();
    source.read_to_string(&mut text).map_err(|source| DatasetError::Io {
        path: "<json source>".to_string(),
        source,
    })?;
    let root: serde_json::Value = serde_json::from_str(&text)?;
    let entries = root.as_array().ok_or(DatasetError::NotAnArray)?;

    let mut expected = None;
    let mut vectors = Vec::with_capacity(entries.len());
    for (index, entry) in entries.iter().enumerate() {
        let line = index as u64 + 1;
        let malformed = |reason: &str| DatasetError::MalformedEntry {
            line,
            reason: reason.to_string(),
        };
        let object = entry.as_object().ok_or_else(|| malformed("not an object"))?;
        let id = object
            .get("id")
            .and_then(|v| v.as_str())
            .ok_or_else(|| malformed("missing string field \"id\""))?;
        let values = object
            .get("values")
            .and_then(|v| v.as_array())
            .ok_or_else(|| malformed("missing array field \"values\""))?;

        let dim = *expected.get_or_insert(values.len());
        if values.len() != dim {
            return Err(DatasetError::RaggedRow {
                line,
                expected: dim,
                found: values.len(),
            });
        }
        let mut components = Vec::with_capacity(values.len());
        for value in values {
            let number = value.as_f64().filter(|n| n.is_finite()).ok_or_else(|| {
                DatasetError::NonNumeric {
                    line,
                    token: value.to_string(),
                }
            })?;
            components.push(number);
        }
        vectors.push(Vector::new(id, components)?);
    }
    Ok(vectors)
}
