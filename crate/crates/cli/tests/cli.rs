use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sdcodes::formats;

fn sdcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdcodes")).args(args).env_remove("SDCODES_ORBIT_BUDGET").output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn classify_writes_a_database_that_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("m3n6.db");
    let db = db.to_str().unwrap();
    stdout(&sdcodes(&["classify", "--m", "3", "--n", "6", "--out", db]));
    let text = fs::read_to_string(db).unwrap();
    let parsed = formats::parse_database(&text).unwrap();
    assert_eq!(parsed.db.i_count(), 21);
    assert_eq!(formats::write_database(&parsed), text);
    assert!(text.ends_with('\n'));

    let next = stdout(&sdcodes(&["lengthen", db, "--target-d", "4"]));
    let next = formats::parse_database(&next).unwrap();
    assert_eq!((next.db.n, next.db.i_count()), (7, 2));
}

#[test]
fn worker_count_does_not_change_output() {
    let one = stdout(&sdcodes(&["--workers", "1", "classify", "--m", "4", "--n", "5", "--enumerators"]));
    let many = stdout(&sdcodes(&["--workers", "4", "classify", "--m", "4", "--n", "5", "--enumerators"]));
    assert_eq!(one, many);
}

#[test]
fn code_queries() {
    let dir = tempfile::tempdir().unwrap();
    let circ = write(dir.path(), "c.txt", "circ 3 01110\n");
    assert_eq!(stdout(&sdcodes(&["mindist", &circ])), "4\n");
    assert_eq!(stdout(&sdcodes(&["wenum", &circ])), "1 + 120y^4 + 240y^5 + 368y^6\n");
    let edgeless = write(dir.path(), "e.txt", "3 2\n00\n00\n");
    assert_eq!(stdout(&sdcodes(&["wenum", &edgeless])), "1 + 4y + 4y^2\n");
    let a = write(dir.path(), "a.txt", "circ 3 110011\n");
    let b = write(dir.path(), "b.txt", "circ 3 022220\n");
    assert_eq!(stdout(&sdcodes(&["equiv", &a, &b])), "no\n");
    assert_eq!(stdout(&sdcodes(&["equiv", &a, &a])), "yes\n");
}

#[test]
fn graphform_output_parses_and_is_a_fixpoint() {
    let dir = tempfile::tempdir().unwrap();
    let stab = write(
        dir.path(),
        "s.txt",
        "stab 3 4\n1101 0200\n1211 1010\n0210 0212\n1222 0202\n",
    );
    let out = sdcodes(&["graphform", &stab]);
    let graph = stdout(&out);
    assert!(String::from_utf8_lossy(&out.stderr).contains("row-reduce"));
    let g = formats::parse_graph(&graph).unwrap();
    assert_eq!(formats::write_graph(&g), graph);
    let path = write(dir.path(), "g.txt", &graph);
    assert_eq!(stdout(&sdcodes(&["mindist", &path])), "3\n");
    let again = stdout(&sdcodes(&["graphform", &write(dir.path(), "s2.txt", &formats::write_stabilizer(
        &sdcodes::StabilizerMatrix::from_graph(&g),
    ))]));
    assert_eq!(again, graph);
}

#[test]
fn tables_and_mass() {
    let table = stdout(&sdcodes(&["table", "--m", "3", "--n", "6"]));
    let last = table.lines().last().unwrap();
    assert_eq!(last, "6\t21\t39\t1\t2:15,3:5,4:1");
    let euler = stdout(&sdcodes(&["table", "--m", "3", "--n", "8", "--counts", "1,1,1,3,5,21,73,659"]));
    assert!(euler.lines().last().unwrap().starts_with("8\t659\t817\t"));
    let mass = stdout(&sdcodes(&["mass", "--m", "2", "--n", "2", "--oracle"]));
    assert_eq!(mass, "total\t15\nlower_bound\t1\noracle\t15\n");
}

#[test]
fn circulant_search_and_listed_codes() {
    let out = stdout(&sdcodes(&["circulant", "--m", "2", "--n", "12", "--witnesses"]));
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.starts_with("2\t12\t6\t")));
    let listed = stdout(&sdcodes(&["circulant", "--verify-paper-list", "--m", "4"]));
    assert!(listed.lines().count() >= 7);
    assert!(listed.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "3 2\n01\n20\n");
    let out = sdcodes(&["mindist", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 1"));
    assert_eq!(sdcodes(&["classify", "--m", "7", "--n", "2"]).status.code(), Some(2));
    assert_eq!(sdcodes(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sdcodes(&["circulant", "--m", "5", "--n", "30"]).status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_sdcodes"))
        .args(["classify", "--m", "3", "--n", "6"])
        .env("SDCODES_ORBIT_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}
