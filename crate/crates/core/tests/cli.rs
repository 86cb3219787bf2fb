use std::ffi::OsStr;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use threshold_synth::{equivalent, Dnf, Lpb};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn tsynth(args: &[&dyn AsRef<OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsynth"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn greedy_prints_lpb_and_interval() {
    let o = tsynth(&[
        &"synth",
        &"--algo",
        &"greedy",
        &"--verify",
        &data("five_vars.dnf"),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "4 3 2 2 1 >= 5\ninterval (4,5]\nverified\n");
}

#[test]
fn lp_output_is_an_equivalent_lpb() {
    for name in [
        "single_block.dnf",
        "equidistant.dnf",
        "five_vars.dnf",
        "dead_end.dnf",
    ] {
        let path = data(name);
        let o = tsynth(&[&"synth", &"--algo", &"lp", &path]);
        assert_eq!(code(&o), 0, "{name}");
        let lpb: Lpb = stdout(&o).parse().unwrap();
        let dnf = Dnf::parse(&fs::read_to_string(&path).unwrap()).unwrap();
        assert!(equivalent(&dnf, &lpb, 20).unwrap(), "{name}");
    }
}

#[test]
fn dead_end_exits_unknown() {
    let path = data("dead_end.dnf");
    let o = tsynth(&[&"synth", &"--algo", &"greedy", &path]);
    assert_eq!(code(&o), 2);
    assert_eq!(stdout(&o), "unknown: column 3: empty interval (3,3)\n");
    let o = tsynth(&[&"synth", &"--algo", &"backtrack", &"--verify", &path]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("verified\n"));
}

#[test]
fn non_threshold_exits_rejected() {
    let path = data("split_pairs.dnf");
    for algo in ["lp", "greedy", "backtrack"] {
        let o = tsynth(&[&"synth", &"--algo", &algo, &path]);
        assert_eq!(code(&o), 1, "{algo}");
        assert!(stdout(&o).starts_with("not a threshold function"), "{algo}");
    }
}

#[test]
fn check_reports_equivalence() {
    let o = tsynth(&[&"check", &data("dead_end.dnf"), &data("dead_end.lpb")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "equivalent\n");

    let dir = tempfile::tempdir().unwrap();
    let wrong = dir.path().join("wrong.lpb");
    fs::write(&wrong, "4 3 2 2 1 >= 6\n").unwrap();
    let o = tsynth(&[&"check", &data("five_vars.dnf"), &wrong]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("not equivalent: differ at "));
}

#[test]
fn dumps_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let (csv, dot, lp) = (
        dir.path().join("t.csv"),
        dir.path().join("t.dot"),
        dir.path().join("w.lp"),
    );
    let o = tsynth(&[
        &"synth",
        &"--algo",
        &"greedy",
        &"--dump-table",
        &csv,
        &"--dump-dot",
        &dot,
        &data("five_vars.dnf"),
    ]);
    assert_eq!(code(&o), 0);
    let table = fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("column,kind,final,formula,s,b\n"));
    assert_eq!(
        table
            .lines()
            .filter(|l| l.split(',').nth(2) == Some("true"))
            .count(),
        12
    );
    assert!(fs::read_to_string(&dot).unwrap().starts_with("digraph"));

    let o = tsynth(&[&"synth", &"--dump-lp", &lp, &data("five_vars.dnf")]);
    assert_eq!(code(&o), 0);
    let program = fs::read_to_string(&lp).unwrap();
    assert!(program.lines().any(|l| l.contains(">=")) && program.lines().any(|l| l.contains("<=")));
}

#[test]
fn gen_then_synth_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = tsynth(&[
        &"gen",
        &"--vars",
        &"6",
        &"--count",
        &"5",
        &"--seed",
        &"3",
        &"--out",
        &dir.path(),
    ]);
    assert_eq!(code(&o), 0);
    for i in 0..5 {
        let dnf = dir.path().join(format!("m06_{i:05}.dnf"));
        let lpb = dir.path().join(format!("m06_{i:05}.lpb"));
        assert_eq!(code(&tsynth(&[&"check", &dnf, &lpb])), 0);
        let o = tsynth(&[&"synth", &"--algo", &"backtrack", &"--verify", &dnf]);
        assert_eq!(code(&o), 0, "{}", dnf.display());
    }
}

#[test]
fn experiment_writes_csv() {
    let o = tsynth(&[
        &"experiment",
        &"--vars",
        &"3..4",
        &"--count",
        &"3",
        &"--seed",
        &"5",
        &"--algos",
        &"lp,greedy",
        &"--out",
        &"-",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("id,m,seed,algo,outcome,verified,final_nodes,elapsed_us,backtrack_steps")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.contains(",success,true,")));

    let again = tsynth(&[
        &"experiment",
        &"--vars",
        &"3..4",
        &"--count",
        &"3",
        &"--seed",
        &"5",
        &"--algos",
        &"lp,greedy",
        &"--out",
        &"-",
    ]);
    assert_eq!(stdout(&again), text);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.csv");
    let o = tsynth(&[
        &"experiment",
        &"--vars",
        &"5",
        &"--count",
        &"4",
        &"--out",
        &path,
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        fs::read_to_string(&path).unwrap().lines().count(),
        1 + 4 * 3
    );
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn bad_input_exits_with_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dnf");
    fs::write(&bad, "p dnf 3\n1 -2 0\n").unwrap();
    let o = tsynth(&[&"synth", &bad]);
    assert_eq!(code(&o), 3);
    assert!(!o.stderr.is_empty());
    assert_eq!(code(&tsynth(&[&"synth", &"/nonexistent.dnf"])), 3);
    assert_eq!(code(&tsynth(&[&"frobnicate"])), 3);
    assert_eq!(code(&tsynth(&[&"--help"])), 0);
}
