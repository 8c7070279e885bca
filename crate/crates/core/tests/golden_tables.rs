//! Frozen reference tables for the comparison and ranking pipeline.
//!
//! Expected values were hand-computed from the vector definitions below
//! and carry three decimals, so computed cells are rounded to display
//! precision before comparison. Rank matrices are exact integers.

use vecsim::ranking::{
    comparison_table, comparison_table_sequential, pair_comparison_table, rank_table,
};
use vecsim::{MeasureKind, Vector};

/// Reference cells carry three decimals, so a computed cell may sit half a
/// unit in the last place away before rounding.
const DISPLAY_TOL: f64 = 5e-3;
/// Guard for comparisons that land exactly on the display boundary.
const BOUNDARY_GUARD: f64 = 1e-9;
/// Reference angles carry one decimal.
const ANGLE_TOL: f64 = 0.1;

const COLUMNS: [MeasureKind; 6] = [
    MeasureKind::Cosine,
    MeasureKind::DotProduct,
    MeasureKind::CityBlock,
    MeasureKind::Euclidean,
    MeasureKind::Jdm(1),
    MeasureKind::Jdm(2),
];

fn v(id: &str, x: f64, y: f64) -> Vector {
    Vector::new(id, vec![x, y]).unwrap()
}

fn round3(value: f64) -> f64 {
    (value * 1000.0).round() / 1000.0
}

struct ExpectedRow {
    theta_deg: f64,
    cells: [f64; 6],
}

fn assert_rows_match(rows: &[vecsim::ranking::ComparisonRow], expected: &[ExpectedRow]) {
    assert_eq!(rows.len(), expected.len());
    for (row, want) in rows.iter().zip(expected) {
        let theta = row
            .theta
            .unwrap_or_else(|| panic!("case {} lost its angle", row.case_label))
            .degrees();
        assert!(
            (theta - want.theta_deg).abs() <= ANGLE_TOL,
            "case {}: angle {theta} vs {}",
            row.case_label,
            want.theta_deg
        );
        for (measure, want_cell) in COLUMNS.iter().zip(want.cells) {
            let got = row.values[measure];
            let diff = (round3(got) - want_cell).abs();
            assert!(
                diff <= DISPLAY_TOL + BOUNDARY_GUARD,
                "case {} {}: {got} (rounded {}) vs {want_cell}",
                row.case_label,
                measure.label(),
                round3(got)
            );
        }
        assert!(row.errors.is_empty(), "case {}", row.case_label);
    }
}

/// The nine named two-dimensional vectors used across the reference pairs.
fn named_vectors() -> Vec<Vector> {
    vec![
        v("r", -1.0, 0.0),
        v("s", 1.0, 0.0),
        v("t", 4.0, 0.0),
        v("u", 8.0, 0.0),
        v("v", 10.0, 0.0),
        v("w", 0.0, 2.0),
        v("x", -1.0, 5.0),
        v("y", 2.0, -4.0),
        v("z", 1.0, 1.0),
    ]
}

fn pick(vectors: &[Vector], id: &str) -> Vector {
    vectors.iter().find(|vec| vec.id() == id).unwrap().clone()
}

#[test]
fn mixed_pairs_match_reference_values() {
    let vectors = named_vectors();
    let pairs: Vec<(Vector, Vector)> = [
        ("r", "s"),
        ("s", "t"),
        ("u", "v"),
        ("s", "w"),
        ("t", "w"),
        ("s", "z"),
        ("x", "y"),
    ]
    .iter()
    .map(|(a, b)| (pick(&vectors, a), pick(&vectors, b)))
    .collect();
    let rows = pair_comparison_table(&pairs, &COLUMNS).unwrap();
    let expected = [
        ExpectedRow { theta_deg: 180.0, cells: [-1.0, -1.0, 2.0, 2.0, 6.0, 6.0] },
        ExpectedRow { theta_deg: 0.0, cells: [1.0, 4.0, 3.0, 3.0, 3.0, 3.0] },
        ExpectedRow { theta_deg: 0.0, cells: [1.0, 80.0, 2.0, 2.0, 2.0, 2.0] },
        ExpectedRow { theta_deg: 90.0, cells: [0.0, 0.0, 3.0, 2.236, 6.0, 4.472] },
        ExpectedRow { theta_deg: 90.0, cells: [0.0, 0.0, 6.0, 4.472, 12.0, 8.944] },
        ExpectedRow { theta_deg: 45.0, cells: [0.707, 1.0, 1.0, 1.0, 1.293, 1.293] },
        ExpectedRow { theta_deg: 164.8, cells: [-0.965, -22.0, 12.0, 9.487, 35.577, 28.126] },
    ];
    assert_rows_match(&rows, &expected);
}

/// Index [-1, 2] compared against itself and four candidates.
fn small_index_scenario() -> (Vector, Vec<Vector>) {
    (
        v("z0", -1.0, 2.0),
        vec![
            v("z0", -1.0, 2.0),
            v("z1", -2.0, 3.0),
            v("z2", -12.0, 16.0),
            v("z3", -5.0, -8.0),
            v("z4", 12.0, 16.0),
        ],
    )
}

/// Index [-10, 15] against the same four candidates; its first candidate
/// is an exact scalar multiple of the index, forcing a cosine tie.
fn large_index_scenario() -> (Vector, Vec<Vector>) {
    (
        v("z0", -10.0, 15.0),
        vec![
            v("z0", -10.0, 15.0),
            v("z1", -2.0, 3.0),
            v("z2", -12.0, 16.0),
            v("z3", -5.0, -8.0),
            v("z4", 12.0, 16.0),
        ],
    )
}

#[test]
fn small_index_scenario_matches_reference_values() {
    let (index, candidates) = small_index_scenario();
    let rows = comparison_table(&index, &candidates, &COLUMNS).unwrap();
    let expected = [
        ExpectedRow { theta_deg: 0.0, cells: [1.0, 5.0, 0.0, 0.0, 0.0, 0.0] },
        ExpectedRow { theta_deg: 7.12, cells: [0.992, 8.0, 2.0, 1.414, 2.015, 1.425] },
        ExpectedRow { theta_deg: 10.3, cells: [0.984, 44.0, 25.0, 17.8, 25.4, 18.09] },
        ExpectedRow { theta_deg: 121.4, cells: [-0.521, -11.0, 14.0, 10.77, 35.3, 27.16] },
        ExpectedRow { theta_deg: 63.4, cells: [0.447, 20.0, 27.0, 19.11, 41.93, 29.67] },
    ];
    assert_rows_match(&rows, &expected);
}

#[test]
fn large_index_scenario_matches_reference_values() {
    let (index, candidates) = large_index_scenario();
    let rows = comparison_table(&index, &candidates, &COLUMNS).unwrap();
    let expected = [
        ExpectedRow { theta_deg: 0.0, cells: [1.0, 325.0, 0.0, 0.0, 0.0, 0.0] },
        ExpectedRow { theta_deg: 0.0, cells: [1.0, 65.0, 20.0, 14.42, 20.0, 14.42] },
        ExpectedRow { theta_deg: 3.18, cells: [0.998, 360.0, 3.0, 2.236, 3.005, 2.24] },
        ExpectedRow { theta_deg: 114.3, cells: [-0.412, -70.0, 28.0, 23.54, 67.52, 56.76] },
        ExpectedRow { theta_deg: 70.6, cells: [0.333, 120.0, 23.0, 22.02, 38.35, 36.72] },
    ];
    assert_rows_match(&rows, &expected);
}

fn rank_matrix(index: &Vector, candidates: &[Vector]) -> Vec<(MeasureKind, Vec<usize>)> {
    let rows = comparison_table(index, candidates, &COLUMNS).unwrap();
    let table = rank_table(rows).unwrap();
    COLUMNS
        .iter()
        .map(|measure| (*measure, table.ranks[measure].clone()))
        .collect()
}

#[test]
fn small_index_scenario_ranks_are_exact() {
    let (index, candidates) = small_index_scenario();
    let expected: [(MeasureKind, [usize; 5]); 6] = [
        (MeasureKind::Cosine, [1, 2, 3, 5, 4]),
        (MeasureKind::DotProduct, [4, 3, 1, 5, 2]),
        (MeasureKind::CityBlock, [1, 2, 4, 3, 5]),
        (MeasureKind::Euclidean, [1, 2, 4, 3, 5]),
        (MeasureKind::Jdm(1), [1, 2, 3, 4, 5]),
        (MeasureKind::Jdm(2), [1, 2, 3, 4, 5]),
    ];
    for ((measure, got), (want_measure, want)) in
        rank_matrix(&index, &candidates).into_iter().zip(expected)
    {
        assert_eq!(measure, want_measure);
        assert_eq!(got, want, "{}", measure.label());
    }
}

#[test]
fn large_index_scenario_ranks_are_exact_including_the_cosine_tie() {
    let (index, candidates) = large_index_scenario();
    let expected: [(MeasureKind, [usize; 5]); 6] = [
        (MeasureKind::Cosine, [1, 1, 3, 5, 4]),
        (MeasureKind::DotProduct, [2, 4, 1, 5, 3]),
        (MeasureKind::CityBlock, [1, 3, 2, 5, 4]),
        (MeasureKind::Euclidean, [1, 3, 2, 5, 4]),
        (MeasureKind::Jdm(1), [1, 3, 2, 5, 4]),
        (MeasureKind::Jdm(2), [1, 3, 2, 5, 4]),
    ];
    for ((measure, got), (want_measure, want)) in
        rank_matrix(&index, &candidates).into_iter().zip(expected)
    {
        assert_eq!(measure, want_measure);
        assert_eq!(got, want, "{}", measure.label());
    }
    // The tie itself: a scalar multiple of the index shares cosine rank 1
    // with the self-comparison, and the next cosine rank skips to 3.
    let cosine_ranks = &rank_matrix(&index, &candidates)[0].1;
    assert_eq!(cosine_ranks[0], cosine_ranks[1]);
    assert_eq!(cosine_ranks[2], 3);
}

#[test]
fn similarity_rank_columns_survive_monotone_transforms() {
    let (index, candidates) = small_index_scenario();
    let rows = comparison_table(&index, &candidates, &COLUMNS).unwrap();
    let baseline = rank_table(rows.clone()).unwrap();
    for transform in [|value: f64| 2.0 * value + 1.0, |value: f64| value * value * value] {
        let mut transformed = rows.clone();
        for row in &mut transformed {
            for measure in [MeasureKind::Cosine, MeasureKind::DotProduct] {
                let cell = row.values[&measure];
                row.values.insert(measure, transform(cell));
            }
        }
        let reranked = rank_table(transformed).unwrap();
        for measure in [MeasureKind::Cosine, MeasureKind::DotProduct] {
            assert_eq!(
                reranked.ranks[&measure], baseline.ranks[&measure],
                "{} ranks moved under a strictly increasing transform",
                measure.label()
            );
        }
    }
}

#[test]
fn rank_assignments_permute_with_the_rows() {
    let (index, mut candidates) = small_index_scenario();
    let baseline = rank_matrix(&index, &candidates);
    candidates.reverse();
    let reversed = rank_matrix(&index, &candidates);
    for ((measure, forward), (_, backward)) in baseline.into_iter().zip(reversed) {
        let mut flipped = backward.clone();
        flipped.reverse();
        assert_eq!(forward, flipped, "{}", measure.label());
    }
}

#[test]
fn parallel_and_sequential_pipelines_agree_on_reference_data() {
    for (index, candidates) in [small_index_scenario(), large_index_scenario()] {
        let parallel = comparison_table(&index, &candidates, &COLUMNS).unwrap();
        let sequential = comparison_table_sequential(&index, &candidates, &COLUMNS).unwrap();
        assert_eq!(parallel, sequential);
        assert_eq!(
            rank_table(parallel).unwrap(),
            rank_table(sequential).unwrap()
        );
    }
}
