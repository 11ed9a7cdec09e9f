use std::process::{Command, Output};

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bench")).args(args).output().expect("bench binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn run_emits_exact_csv_header() {
    let o = bench(&["run", "--algos", "listsort,quick", "--patterns", "random,asc", "--sizes", "100,200", "--trials", "2", "--quiet"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("algo,pattern,n,seed,trial,elapsed_ns,comparisons,relinks,runs_created,merges,capacity_used")
    );
    assert_eq!(lines.count(), 2 * 2 * 2 * 2);
}

#[test]
fn markdown_counts_table() {
    let o = bench(&[
        "run", "--algos", "quicksort,listsort,mergesort_array", "--patterns", "asc", "--sizes", "500,1000", "--trials",
        "1", "--counts", "--format", "markdown", "--quiet",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("| Number of Elements | quick | listsort | mergearr |"), "{text}");
    // last-element pivot on sorted data: n(n-1)/2
    assert!(text.contains("| 1000 | 499500 | 1998 |"), "{text}");
}

#[test]
fn unknown_algorithm_is_config_error() {
    let o = bench(&["run", "--algos", "bogo", "--sizes", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_pattern_and_bad_capacity_are_config_errors() {
    assert_eq!(bench(&["run", "--patterns", "zigzag", "--sizes", "10"]).status.code(), Some(1));
    assert_eq!(bench(&["run", "--capacity", "1", "--sizes", "10"]).status.code(), Some(1));
    assert_eq!(bench(&["run", "--trials", "0", "--sizes", "10"]).status.code(), Some(1));
    assert_eq!(bench(&["sweep", "--n", "100", "--capacities", "2,1"]).status.code(), Some(1));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(bench(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_one_row_per_capacity() {
    let o = bench(&["sweep", "--n", "3000", "--capacities", "2,10,25,50", "--pattern", "random", "--seed", "42", "--trials", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "capacity,median_elapsed_ns,median_comparisons");
    assert_eq!(rows.len(), 5);
    assert!(rows[1].starts_with("2,"));
}

#[test]
fn verify_small_fuzz() {
    let o = Command::new(env!("CARGO_BIN_EXE_bench"))
        .args(["verify", "--fuzz", "200", "--max-len", "64"])
        .env("BENCH_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("ok: 200 cases"));
}

#[test]
fn predictions_file_has_ratio_columns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pred.csv");
    let o = bench(&[
        "run", "--algos", "listsort,quick", "--patterns", "asc,worst", "--sizes", "1000", "--trials", "1", "--quiet",
        "--predictions", path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "algo,pattern,n,trial,regime,predicted,measured,ratio");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("listsort,asc,1000,0,best,1000,1998,"));
    assert!(lines[2].contains(",worst,"));
}
