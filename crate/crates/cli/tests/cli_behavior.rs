//! End-to-end command behavior: stream discipline, exit codes, and the
//! dataset error surface, all exercised through the in-process runner.

use vecsim_cli::{run_capture, CommandOutcome};

fn vecsim(args: &[&str]) -> CommandOutcome {
    let mut full = vec!["vecsim"];
    full.extend_from_slice(args);
    run_capture(full)
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Write a throwaway dataset under a process-unique name so parallel
/// tests cannot collide.
fn write_temp(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("vecsim-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn assert_success(outcome: &CommandOutcome) {
    assert_eq!(outcome.exit_code, 0, "stderr: {}", outcome.stderr);
    assert!(outcome.stderr.is_empty(), "stderr: {}", outcome.stderr);
}

#[test]
fn table_output_is_stable_across_runs() {
    let args = ["table", "--input", &fixture("scenario1.csv"), "--index", "z0"];
    let first = vecsim(&args);
    let second = vecsim(&args);
    assert_success(&first);
    assert_eq!(first, second);
}

#[test]
fn csv_and_json_datasets_produce_identical_tables() {
    let from_csv = vecsim(&["table", "--input", &fixture("basic.csv"), "--index", "r"]);
    let from_json = vecsim(&["table", "--input", &fixture("basic.json"), "--index", "r"]);
    assert_success(&from_csv);
    assert_eq!(from_csv.stdout, from_json.stdout);
}

#[test]
fn unknown_index_id_is_a_domain_error() {
    let outcome = vecsim(&["table", "--input", &fixture("scenario1.csv"), "--index", "nope"]);
    assert_eq!(outcome.exit_code, 1);
    assert!(outcome.stdout.is_empty());
    assert!(outcome.stderr.contains("nope"), "stderr: {}", outcome.stderr);
}

#[test]
fn ragged_csv_reports_the_line_number() {
    let path = write_temp("ragged.csv", "id,x,y\nr,1,2\ns,1\n");
    let outcome = vecsim(&["table", "--input", &path, "--index", "r"]);
    assert_eq!(outcome.exit_code, 1);
    assert!(outcome.stderr.contains("line 3"), "stderr: {}", outcome.stderr);
}

#[test]
fn duplicate_id_is_rejected() {
    let path = write_temp("duplicate.csv", "id,x,y\nr,1,2\nr,3,4\n");
    let outcome = vecsim(&["table", "--input", &path, "--index", "r"]);
    assert_eq!(outcome.exit_code, 1);
    assert!(
        outcome.stderr.contains("duplicate"),
        "stderr: {}",
        outcome.stderr
    );
}

#[test]
fn header_only_dataset_is_rejected() {
    let path = write_temp("empty.csv", "id,x,y\n");
    let outcome = vecsim(&["table", "--input", &path, "--index", "r"]);
    assert_eq!(outcome.exit_code, 1);
    assert!(
        outcome.stderr.contains("no vectors"),
        "stderr: {}",
        outcome.stderr
    );
}

#[test]
fn non_numeric_component_is_rejected_with_its_line() {
    let path = write_temp("words.csv", "id,x,y\nr,1,two\n");
    let outcome = vecsim(&["table", "--input", &path, "--index", "r"]);
    assert_eq!(outcome.exit_code, 1);
    assert!(outcome.stderr.contains("line 2"), "stderr: {}", outcome.stderr);
    assert!(outcome.stderr.contains("two"), "stderr: {}", outcome.stderr);
}

#[test]
fn unreadable_input_is_a_domain_error() {
    let outcome = vecsim(&["table", "--input", "/no/such/file.csv", "--index", "r"]);
    assert_eq!(outcome.exit_code, 1);
    assert!(
        outcome.stderr.contains("cannot read"),
        "stderr: {}",
        outcome.stderr
    );
}

#[test]
fn unknown_extension_needs_an_explicit_format() {
    let path = write_temp("vectors.dat", "id,x,y\nr,1,2\ns,3,4\n");
    let bare = vecsim(&["table", "--input", &path, "--index", "r"]);
    assert_eq!(bare.exit_code, 1);
    assert!(
        bare.stderr.contains("--format"),
        "stderr: {}",
        bare.stderr
    );

    let explicit = vecsim(&["table", "--input", &path, "--format", "csv", "--index", "r"]);
    assert_success(&explicit);
}

#[test]
fn selecting_both_index_and_pair_is_a_usage_error() {
    let outcome = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--index",
        "z0",
        "--pair",
        "z0,z1",
    ]);
    assert_eq!(outcome.exit_code, 2);
    assert!(outcome.stdout.is_empty());
    assert!(!outcome.stderr.is_empty());
}

#[test]
fn selecting_neither_index_nor_pair_is_a_usage_error() {
    let outcome = vecsim(&["table", "--input", &fixture("scenario1.csv")]);
    assert_eq!(outcome.exit_code, 2);
}

#[test]
fn unknown_measure_is_a_usage_error() {
    let outcome = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--index",
        "z0",
        "--measures",
        "jaccard",
    ]);
    assert_eq!(outcome.exit_code, 2);
    assert!(
        outcome.stderr.contains("jaccard"),
        "stderr: {}",
        outcome.stderr
    );
}

#[test]
fn malformed_pair_selector_is_a_usage_error() {
    let outcome = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--pair",
        "z0",
    ]);
    assert_eq!(outcome.exit_code, 2);
    assert!(
        outcome.stderr.contains("comma-separated"),
        "stderr: {}",
        outcome.stderr
    );
}

#[test]
fn audit_rejects_similarity_measures() {
    let outcome = vecsim(&["audit", "cosine", "--trials", "10"]);
    assert_eq!(outcome.exit_code, 1);
    assert!(outcome.stdout.is_empty());
    assert!(
        outcome.stderr.contains("distance"),
        "stderr: {}",
        outcome.stderr
    );
}

#[test]
fn audit_csv_output_is_a_usage_error() {
    let outcome = vecsim(&["audit", "jdm2", "--trials", "10", "--output", "csv"]);
    assert_eq!(outcome.exit_code, 2);
}

#[test]
fn audit_positional_and_flag_forms_agree() {
    let positional = vecsim(&["audit", "jdm2", "--trials", "200"]);
    let flagged = vecsim(&["audit", "--measure", "jdm", "--p", "2", "--trials", "200"]);
    assert_success(&positional);
    assert_eq!(positional.stdout, flagged.stdout);
    assert!(positional.stdout.contains("not a metric"));
}

#[test]
fn audit_conflicting_order_spellings_are_a_usage_error() {
    let outcome = vecsim(&["audit", "jdm2", "--p", "1", "--trials", "10"]);
    assert_eq!(outcome.exit_code, 2);
}

#[test]
fn identity_pair_prints_the_worked_breakdown() {
    let outcome = vecsim(&[
        "identity",
        "--input",
        &fixture("identity.csv"),
        "--pair",
        "u,v",
    ]);
    assert_success(&outcome);
    assert!(outcome.stdout.contains("l1_square  = 121"));
    assert!(outcome.stdout.contains("121 = 33 + 88 PASS"));
    assert!(
        outcome.stdout.contains("trace = 33, upper-triangle sum = 44 PASS"),
        "stdout: {}",
        outcome.stdout
    );
}

#[test]
fn identity_of_an_identical_pair_is_all_zero() {
    let outcome = vecsim(&[
        "identity",
        "--input",
        &fixture("identity.csv"),
        "--pair",
        "u,u",
    ]);
    assert_success(&outcome);
    assert!(outcome.stdout.contains("0 = 0 + 0 PASS"));
}

#[test]
fn identity_random_mode_summarizes_all_pairs() {
    let outcome = vecsim(&["identity", "--random", "50", "--seed", "7"]);
    assert_success(&outcome);
    assert!(outcome.stdout.ends_with("50/50 PASS\n"), "stdout: {}", outcome.stdout);
}

#[test]
fn identity_pair_without_input_is_a_usage_error() {
    let outcome = vecsim(&["identity", "--pair", "u,v"]);
    assert_eq!(outcome.exit_code, 2);
    let outcome = vecsim(&["identity"]);
    assert_eq!(outcome.exit_code, 2);
    let outcome = vecsim(&[
        "identity",
        "--random",
        "5",
        "--input",
        &fixture("identity.csv"),
    ]);
    assert_eq!(outcome.exit_code, 2);
}

#[test]
fn help_prints_to_stdout_and_exits_zero() {
    let outcome = vecsim(&["--help"]);
    assert_eq!(outcome.exit_code, 0);
    assert!(outcome.stdout.contains("Usage"));
    assert!(outcome.stderr.is_empty());
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let outcome = run_capture(["vecsim"]);
    assert_eq!(outcome.exit_code, 2);
    assert!(outcome.stdout.is_empty());
    assert!(!outcome.stderr.is_empty());
}

#[test]
fn json_stream_is_pure_json() {
    let outcome = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--index",
        "z0",
        "--output",
        "json",
    ]);
    assert_success(&outcome);
    let value: serde_json::Value = serde_json::from_str(&outcome.stdout).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 5);

    let outcome = vecsim(&["audit", "minkowski", "--p", "2", "--trials", "50", "--output", "json"]);
    assert_success(&outcome);
    let value: serde_json::Value = serde_json::from_str(&outcome.stdout).unwrap();
    assert_eq!(value["verdict"], "metric_on_sample");
}

#[test]
fn csv_stream_is_pure_csv() {
    let outcome = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--index",
        "z0",
        "--output",
        "csv",
    ]);
    assert_success(&outcome);
    let mut reader = csv::Reader::from_reader(outcome.stdout.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().next(),
        Some("case")
    );
    assert_eq!(reader.records().count(), 5);
}

#[test]
fn rank_of_a_single_vector_dataset_is_all_ones() {
    let path = write_temp("single.csv", "id,x,y\na,1,2\n");
    let outcome = vecsim(&["rank", "--input", &path, "--index", "a", "--output", "csv"]);
    assert_success(&outcome);
    let mut lines = outcome.stdout.lines();
    assert_eq!(
        lines.next(),
        Some("case,index,candidate,theta_deg,CSM,DPSM,CBDM,EDM,JDM 1,JDM 2")
    );
    assert_eq!(lines.next(), Some("1,a,a,0.0,1,1,1,1,1,1"));
    assert_eq!(lines.next(), None);
}

#[test]
fn theta_column_appears_only_with_cosine_dependent_measures() {
    let without = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--index",
        "z0",
        "--measures",
        "euclidean,cityblock",
        "--output",
        "csv",
    ]);
    assert_success(&without);
    assert!(
        without.stdout.starts_with("case,index,candidate,EDM,CBDM"),
        "stdout: {}",
        without.stdout
    );
    assert!(!without.stdout.contains("theta_deg"));

    let with = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--index",
        "z0",
        "--measures",
        "jdm2",
        "--output",
        "csv",
    ]);
    assert_success(&with);
    assert!(with.stdout.starts_with("case,index,candidate,theta_deg,JDM 2"));
}

#[test]
fn decimals_flag_controls_cell_rounding() {
    let outcome = vecsim(&[
        "table",
        "--input",
        &fixture("scenario1.csv"),
        "--index",
        "z0",
        "--measures",
        "euclidean",
        "--decimals",
        "1",
        "--output",
        "csv",
    ]);
    assert_success(&outcome);
    assert!(outcome.stdout.contains("z0,z2,17.8\n"), "stdout: {}", outcome.stdout);
}

#[test]
fn version_flag_prints_and_exits_zero() {
    let outcome = vecsim(&["--version"]);
    assert_eq!(outcome.exit_code, 0);
    assert!(outcome.stdout.contains("vecsim"));
}
