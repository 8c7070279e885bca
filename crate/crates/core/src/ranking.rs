//! Comparison rows over a measure set and competition-ranked tables.
//!
//! A comparison row evaluates every requested measure for one vector pair,
//! recording per-cell errors instead of aborting, so a single degenerate
//! candidate cannot take down the table. Ranking then orders each measure
//! column by its polarity and assigns competition ranks, where tied values
//! share the smaller rank and the next distinct value skips the tie width.
//!
//! Row computations are independent and run in parallel under the
//! `parallel` feature; row order, cell values, and ranks are identical to
//! the sequential twins.

use indexmap::IndexMap;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec;
use crate::kind::{MeasureKind, Polarity};
use crate::measures;
use crate::vector::{AngleDeg, Vector};

/// One compared pair: the requested measures, their values or errors, and
/// the angle between the vectors when both are nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub case_label: String,
    pub index_id: String,
    pub candidate_id: String,
    /// Present exactly when both vectors have nonzero magnitude.
    pub theta: Option<AngleDeg>,
    /// Measure values in request order. A measure appears here or in
    /// `errors`, never both.
    pub values: IndexMap<MeasureKind, f64>,
    pub errors: IndexMap<MeasureKind, Error>,
}

/// Comparison rows plus one competition-rank column per measure.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    pub rows: Vec<ComparisonRow>,
    /// Per measure, the rank of each row in row order, starting at 1.
    pub ranks: IndexMap<MeasureKind, Vec<usize>>,
}

/// Rendering style for tables and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputStyle {
    Text,
    Csv,
    Json,
}

fn build_row(
    case_label: String,
    index: &Vector,
    candidate: &Vector,
    measures_list: &[MeasureKind],
) -> ComparisonRow {
    let theta = if index.is_zero() || candidate.is_zero() {
        None
    } else {
        // Dimensions were checked by the caller and both magnitudes are
        // nonzero, so the angle cannot fail; `ok` keeps the type local.
        measures::angle_between(index, candidate).ok()
    };
    let mut values = IndexMap::new();
    let mut errors = IndexMap::new();
    for &measure in measures_list {
        match measure.evaluate(index, candidate) {
            Ok(value) => {
                values.insert(measure, value);
            }
            Err(error) => {
                errors.insert(measure, error);
            }
        }
    }
    ComparisonRow {
        case_label,
        index_id: index.id().to_string(),
        candidate_id: candidate.id().to_string(),
        theta,
        values,
        errors,
    }
}

fn check_table_inputs(
    index: &Vector,
    candidates: &[Vector],
    measures_list: &[MeasureKind],
) -> Result<()> {
    if measures_list.is_empty() || candidates.is_empty() {
        return Err(Error::EmptyInput);
    }
    for candidate in candidates {
        if candidate.dim() != index.dim() {
            return Err(Error::DimensionMismatch {
                left: index.dim(),
                right: candidate.dim(),
            });
        }
    }
    Ok(())
}

fn comparison_table_impl(
    index: &Vector,
    candidates: &[Vector],
    measures_list: &[MeasureKind],
    parallel: bool,
) -> Result<Vec<ComparisonRow>> {
    check_table_inputs(index, candidates, measures_list)?;
    let build = |i: usize| {
        build_row(
            (i + 1).to_string(),
            index,
            &candidates[i],
            measures_list,
        )
    };
    Ok(if parallel {
        exec::map_collect(candidates.len(), build)
    } else {
        exec::map_collect_seq(candidates.len(), build)
    })
}

/// One row per candidate, in input order, comparing each against the index
/// vector. Cases are labeled 1, 2, ... in row order.
pub fn comparison_table(
    index: &Vector,
    candidates: &[Vector],
    measures_list: &[MeasureKind],
) -> Result<Vec<ComparisonRow>> {
    comparison_table_impl(index, candidates, measures_list, true)
}

/// Single-threaded twin of [`comparison_table`].
pub fn comparison_table_sequential(
    index: &Vector,
    candidates: &[Vector],
    measures_list: &[MeasureKind],
) -> Result<Vec<ComparisonRow>> {
    comparison_table_impl(index, candidates, measures_list, false)
}

fn pair_table_impl(
    pairs: &[(Vector, Vector)],
    measures_list: &[MeasureKind],
    parallel: bool,
) -> Result<Vec<ComparisonRow>> {
    if measures_list.is_empty() || pairs.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (left, right) in pairs {
        if left.dim() != right.dim() {
            return Err(Error::DimensionMismatch {
                left: left.dim(),
                right: right.dim(),
            });
        }
    }
    let build = |i: usize| {
        let (left, right) = &pairs[i];
        build_row((i + 1).to_string(), left, right, measures_list)
    };
    Ok(if parallel {
        exec::map_collect(pairs.len(), build)
    } else {
        exec::map_collect_seq(pairs.len(), build)
    })
}

/// One row per explicit pair, for tables that mix different left-hand
/// vectors instead of holding one index fixed.
pub fn pair_comparison_table(
    pairs: &[(Vector, Vector)],
    measures_list: &[MeasureKind],
) -> Result<Vec<ComparisonRow>> {
    pair_table_impl(pairs, measures_list, true)
}

/// Single-threaded twin of [`pair_comparison_table`].
pub fn pair_comparison_table_sequential(
    pairs: &[(Vector, Vector)],
    measures_list: &[MeasureKind],
) -> Result<Vec<ComparisonRow>> {
    pair_table_impl(pairs, measures_list, false)
}

/// Round to nine decimals for tie detection, collapsing signed zeros.
fn tie_key(value: f64) -> f64 {
    let rounded = (value * 1e9).round() / 1e9;
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

fn competition_ranks(values: &[f64], polarity: Polarity) -> Vec<usize> {
    let keys: Vec<f64> = values.iter().map(|&v| tie_key(v)).collect();
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| match polarity {
        Polarity::Similarity => keys[b].total_cmp(&keys[a]),
        Polarity::Distance => keys[a].total_cmp(&keys[b]),
    });
    let mut ranks = vec![0; keys.len()];
    for (position, &row) in order.iter().enumerate() {
        let tied_with_previous =
            position > 0 && keys[row].total_cmp(&keys[order[position - 1]]).is_eq();
        ranks[row] = if tied_with_previous {
            ranks[order[position - 1]]
        } else {
            position + 1
        };
    }
    ranks
}

/// Assign competition ranks to every measure present in the rows.
///
/// Every measure that appears in any row must have a value in all rows;
/// a row where it failed or is absent makes the column unrankable.
pub fn rank_table(rows: Vec<ComparisonRow>) -> Result<RankTable> {
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let columns = measure_columns(&rows);
    let mut ranks = IndexMap::new();
    for measure in columns {
        let mut column = Vec::with_capacity(rows.len());
        for row in &rows {
            match row.values.get(&measure) {
                Some(&value) => column.push(value),
                None => {
                    return Err(Error::MissingValue {
                        label: measure.label(),
                        row: row.case_label.clone(),
                    })
                }
            }
        }
        ranks.insert(measure, competition_ranks(&column, measure.polarity()));
    }
    Ok(RankTable { rows, ranks })
}

/// Measures in first-seen order across all rows, values before errors
/// within a row.
fn measure_columns(rows: &[ComparisonRow]) -> Vec<MeasureKind> {
    let mut columns = Vec::new();
    for row in rows {
        for &measure in row.values.keys().chain(row.errors.keys()) {
            if !columns.contains(&measure) {
                columns.push(measure);
            }
        }
    }
    columns
}

fn include_theta(columns: &[MeasureKind]) -> bool {
    columns.iter().any(|m| m.needs_cosine())
}

/// Render a value with half-away-from-zero rounding at fixed decimals.
///
/// Values too large for exact integer scaling fall back to the standard
/// formatter; a negative value that rounds to zero prints without a sign.
pub fn format_rounded(value: f64, decimals: usize) -> String {
    let fallback = || format!("{value:.decimals$}");
    let Ok(exponent) = u32::try_from(decimals) else {
        return fallback();
    };
    let Some(base) = 10u64.checked_pow(exponent) else {
        return fallback();
    };
    let scaled = value * base as f64;
    if !scaled.is_finite() || scaled.abs() >= 9_007_199_254_740_992.0 {
        return fallback();
    }
    let rounded = scaled.round() as i64;
    let sign = if rounded < 0 { "-" } else { "" };
    let magnitude = rounded.unsigned_abs();
    if decimals == 0 {
        return format!("{sign}{magnitude}");
    }
    let whole = magnitude / base;
    let fraction = magnitude % base;
    format!("{sign}{whole}.{fraction:0width$}", width = decimals)
}

fn format_theta(theta: Option<AngleDeg>, style: OutputStyle) -> String {
    match (theta, style) {
        (Some(angle), OutputStyle::Text) => {
            format!("{}\u{b0}", format_rounded(angle.degrees(), 1))
        }
        (Some(angle), OutputStyle::Csv) => format_rounded(angle.degrees(), 1),
        (None, OutputStyle::Text) => "\u{2014}".into(),
        (None, OutputStyle::Csv) => String::new(),
        (_, OutputStyle::Json) => unreachable!("json rows carry theta as a number"),
    }
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

/// Pad and join a grid of cells. The first two columns are left-aligned
/// labels, everything after is right-aligned numbers.
fn align_grid(grid: &[Vec<String>]) -> String {
    let column_count = grid.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; column_count];
    for row in grid {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in grid {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = widths[i] - cell.chars().count();
            if i < 2 {
                line.push_str(cell);
                if i + 1 < row.len() {
                    line.push_str(&" ".repeat(pad));
                }
            } else {
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn row_json(row: &ComparisonRow) -> Value {
    let values: serde_json::Map<String, Value> = row
        .values
        .iter()
        .map(|(measure, value)| (measure.label(), json!(value)))
        .collect();
    let errors: serde_json::Map<String, Value> = row
        .errors
        .iter()
        .map(|(measure, error)| {
            (
                measure.label(),
                json!({ "name": error.name(), "message": error.to_string() }),
            )
        })
        .collect();
    json!({
        "case": row.case_label,
        "index": row.index_id,
        "candidate": row.candidate_id,
        "theta_deg": row.theta.map(AngleDeg::degrees),
        "values": values,
        "errors": errors,
    })
}

fn error_footnotes(rows: &[ComparisonRow]) -> String {
    let mut out = String::new();
    for row in rows {
        for (measure, error) in &row.errors {
            out.push_str(&format!(
                "note: case {}, {}: {} ({error})\n",
                row.case_label,
                measure.label(),
                error.name()
            ));
        }
    }
    out
}

/// Render comparison rows in the requested style.
///
/// Text aligns columns and appends one footnote per failed cell; csv emits
/// a header plus one data line per row with failed cells left empty; json
/// emits an array of row objects at full precision. The angle column is
/// included whenever a requested measure depends on the cosine. Output
/// always ends with a single newline.
pub fn format_table(rows: &[ComparisonRow], style: OutputStyle, decimals: usize) -> String {
    let columns = measure_columns(rows);
    let with_theta = include_theta(&columns);
    match style {
        OutputStyle::Text => {
            let mut grid = Vec::with_capacity(rows.len() + 1);
            let mut header = vec!["Case".to_string(), "Vector pair".to_string()];
            if with_theta {
                header.push("\u{3b8}".to_string());
            }
            header.extend(columns.iter().map(|m| m.label()));
            grid.push(header);
            for row in rows {
                let mut cells = vec![
                    row.case_label.clone(),
                    format!("{} and {}", row.index_id, row.candidate_id),
                ];
                if with_theta {
                    cells.push(format_theta(row.theta, OutputStyle::Text));
                }
                for measure in &columns {
                    cells.push(match row.values.get(measure) {
                        Some(&value) => format_rounded(value, decimals),
                        None => "\u{2014}".into(),
                    });
                }
                grid.push(cells);
            }
            let mut out = align_grid(&grid);
            out.push_str(&error_footnotes(rows));
            out
        }
        OutputStyle::Csv => {
            let mut lines = Vec::with_capacity(rows.len() + 1);
            let mut header = vec!["case".to_string(), "index".to_string(), "candidate".to_string()];
            if with_theta {
                header.push("theta_deg".to_string());
            }
            header.extend(columns.iter().map(|m| m.label()));
            lines.push(csv_line(&header));
            for row in rows {
                let mut fields = vec![
                    row.case_label.clone(),
                    row.index_id.clone(),
                    row.candidate_id.clone(),
                ];
                if with_theta {
                    fields.push(format_theta(row.theta, OutputStyle::Csv));
                }
                for measure in &columns {
                    fields.push(match row.values.get(measure) {
                        Some(&value) => format_rounded(value, decimals),
                        None => String::new(),
                    });
                }
                lines.push(csv_line(&fields));
            }
            lines.join("\n") + "\n"
        }
        OutputStyle::Json => {
            let array: Vec<Value> = rows.iter().map(row_json).collect();
            let mut out = serde_json::to_string(&array).expect("row json serializes");
            out.push('\n');
            out
        }
    }
}

/// Render a rank table in the requested style.
///
/// Layout mirrors [`format_table`] with rank integers in the measure
/// columns, so no decimal count applies; json pairs the full-precision
/// rows with a rank map.
pub fn format_rank_table(table: &RankTable, style: OutputStyle) -> String {
    let columns: Vec<MeasureKind> = table.ranks.keys().copied().collect();
    let with_theta = include_theta(&columns);
    match style {
        OutputStyle::Text => {
            let mut grid = Vec::with_capacity(table.rows.len() + 1);
            let mut header = vec!["Case".to_string(), "Vector pair".to_string()];
            if with_theta {
                header.push("\u{3b8}".to_string());
            }
            header.extend(columns.iter().map(|m| m.label()));
            grid.push(header);
            for (row_index, row) in table.rows.iter().enumerate() {
                let mut cells = vec![
                    row.case_label.clone(),
                    format!("{} and {}", row.index_id, row.candidate_id),
                ];
                if with_theta {
                    cells.push(format_theta(row.theta, OutputStyle::Text));
                }
                for measure in &columns {
                    cells.push(table.ranks[measure][row_index].to_string());
                }
                grid.push(cells);
            }
            align_grid(&grid)
        }
        OutputStyle::Csv => {
            let mut lines = Vec::with_capacity(table.rows.len() + 1);
            let mut header = vec!["case".to_string(), "index".to_string(), "candidate".to_string()];
            if with_theta {
                header.push("theta_deg".to_string());
            }
            header.extend(columns.iter().map(|m| m.label()));
            lines.push(csv_line(&header));
            for (row_index, row) in table.rows.iter().enumerate() {
                let mut fields = vec![
                    row.case_label.clone(),
                    row.index_id.clone(),
                    row.candidate_id.clone(),
                ];
                if with_theta {
                    fields.push(format_theta(row.theta, OutputStyle::Csv));
                }
                for measure in &columns {
                    fields.push(table.ranks[measure][row_index].to_string());
                }
                lines.push(csv_line(&fields));
            }
            lines.join("\n") + "\n"
        }
        OutputStyle::Json => {
            let ranks: serde_json::Map<String, Value> = table
                .ranks
                .iter()
                .map(|(measure, column)| (measure.label(), json!(column)))
                .collect();
            let rows: Vec<Value> = table.rows.iter().map(row_json).collect();
            let mut out = serde_json::to_string(&json!({ "rows": rows, "ranks": ranks }))
                .expect("rank json serializes");
            out.push('\n');
            out
        }
    }
}
