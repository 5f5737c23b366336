use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hyperdeg(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperdeg"))
        .args(args)
        .env("HYPERDEG_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn count_degseq_prints_table_value() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperdeg(&["count-degseq", "--n", "6", "--k", "3"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "42175");
}

#[test]
fn second_run_hits_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["count-degseq", "--n", "5", "--k", "3", "--stats"];
    let first = hyperdeg(&args, dir.path());
    assert!(stderr(&first).contains("hits=0 misses=1 rebuilds=0"), "{}", stderr(&first));
    let second = hyperdeg(&args, dir.path());
    assert!(stderr(&second).contains("hits=1 misses=0 rebuilds=0"), "{}", stderr(&second));
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn cache_dir_flag_beats_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    hyperdeg(&["count-degseq", "--n", "4", "--k", "2", "--cache-dir", flag], env_dir.path());
    assert_eq!(fs::read_dir(flag_dir.path()).unwrap().count(), 1);
    assert!(fs::read_dir(env_dir.path()).unwrap().next().is_none());
}

#[test]
fn no_cache_always_rebuilds() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["enumerate-shifted", "--k", "3", "--m", "4", "--no-cache", "--stats"];
    for _ in 0..2 {
        let o = hyperdeg(&args, dir.path());
        assert!(stderr(&o).contains("hits=0 misses=1"), "{}", stderr(&o));
    }
    assert!(fs::read_dir(dir.path()).unwrap().next().is_none());
}

#[test]
fn tampered_entry_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["count-degseq", "--n", "5", "--k", "2", "--stats"];
    let clean = hyperdeg(&args, dir.path());
    let entry = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut bytes = fs::read(&entry).unwrap();
    // flip the first digit of the payload: `"payload":"[[4,...`
    let pos = bytes.windows(9).position(|w| w == b"\"payload\"").unwrap() + 13;
    assert!(bytes[pos].is_ascii_digit());
    bytes[pos] = if bytes[pos] == b'1' { b'2' } else { b'1' };
    fs::write(&entry, bytes).unwrap();
    let o = hyperdeg(&args, dir.path());
    assert!(stderr(&o).contains("rebuilds=1"), "{}", stderr(&o));
    assert!(stderr(&o).contains("digest mismatch"), "{}", stderr(&o));
    assert_eq!(stdout(&o), stdout(&clean));
    assert!(stdout(&o).contains("533"));
}

#[test]
fn classify_triangle_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triangle.json");
    fs::write(&path, r#"{"n":3,"k":2,"members":[[1,2],[1,3],[2,3]]}"#).unwrap();
    let o = hyperdeg(&["classify", "--family", path.to_str().unwrap(), "--format", "json"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["uniquely_realizable"], true);
    assert_eq!(report["degree_sequence"], serde_json::json!([2, 2, 2]));
}

#[test]
fn upsilon_of_single_sets_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperdeg(&["upsilon", "--k", "3", "--m", "1"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
    let o = hyperdeg(&["upsilon", "--k", "3", "--m", "3", "--check-positivity", "--format", "json"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let domain = hyperdeg(&["check-degseq", "--k", "3", "--d", "2,2"], dir.path());
    assert_eq!(domain.status.code(), Some(1));
    let budget = hyperdeg(&["plethysm", "--m", "5", "--k", "3"], dir.path());
    assert_eq!(budget.status.code(), Some(2));
    assert!(stderr(&budget).contains("budget"));
    let bad_swing = hyperdeg(&["swing", "--sets", "123,124", "--a", "12", "--i", "3", "--j", "4"], dir.path());
    assert_eq!(bad_swing.status.code(), Some(1));
}

#[test]
fn json_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let runs = [
        vec!["enumerate-shifted", "--k", "3", "--m", "6", "--no-cache", "--format", "json"],
        vec!["classify", "--generators", "178,239,456", "--format", "json"],
        vec!["plethysm", "--m", "4", "--k", "3", "--format", "json"],
        vec!["holes", "--n", "5", "--k", "2", "--format", "json"],
    ];
    for args in runs {
        let outs: Vec<Vec<u8>> = ["1", "4"]
            .iter()
            .map(|t| {
                let mut a = args.clone();
                a.extend(["--threads", t]);
                let o = hyperdeg(&a, dir.path());
                assert!(o.status.success(), "{args:?}: {}", stderr(&o));
                o.stdout
            })
            .collect();
        assert_eq!(outs[0], outs[1], "{args:?}");
    }
}

#[test]
fn out_file_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let holes = dir.path().join("holes.csv");
    let o = hyperdeg(&["holes", "--n", "6", "--k", "3", "--format", "csv", "--out", holes.to_str().unwrap()], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&holes).unwrap(), "");
    let seqs = dir.path().join("seqs.csv");
    hyperdeg(&["count-degseq", "--n", "4", "--k", "2", "--format", "csv", "--out", seqs.to_str().unwrap()], dir.path());
    let text = fs::read_to_string(&seqs).unwrap();
    assert!(text.starts_with("sequence,rearrangements\n3 3 3 3,1\n"));
    let unwritable = hyperdeg(&["phi", "--k", "2", "--m", "2", "--out", "/nonexistent/dir/x"], dir.path());
    assert_eq!(unwritable.status.code(), Some(1));
}

#[test]
fn hwv_multiplicity_and_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperdeg(&["hwv", "--lambda", "2,2,2", "--k", "2", "--n", "4"], dir.path());
    assert_eq!(stdout(&o).trim(), "1");
    let o = hyperdeg(&["hwv", "--k", "2", "--n", "5", "--verify-shifted"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn cubes_reports_equivalence() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperdeg(&["cubes", "--sets", "123,134,145", "--check", "--dump-cells", "--format", "json"], dir.path());
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equivalence"]["shifted"], false);
    assert_eq!(v["vert"].as_array().unwrap().len(), 9);
}
