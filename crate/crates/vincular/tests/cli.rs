mod common;

use common::{cli, fixture};
use serde_json::Value;
use std::process::Command;
use vincular::cli::{CliError, Outcome};

fn json_lines(s: &str) -> Vec<Value> {
    s.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn avoids_reports_avoidance() {
    let (res, out) = cli(&["avoids", "--perm", "31542", "--set", "B"]);
    assert_eq!(res.unwrap(), Outcome::Success);
    assert_eq!(out, "avoids\n");
}

#[test]
fn avoids_reports_first_occurrence() {
    let (_, text) = cli(&["avoids", "--perm", "1324", "--set", "B"]);
    assert_eq!(text, "contains 1-3-2-4 at (1,2,3,4)\n");
    let (_, json) = cli(&["avoids", "--perm", "1324", "--set", "B", "--format", "json"]);
    let v = &json_lines(&json)[0];
    assert_eq!(v["avoids"], false);
    assert_eq!(v["pattern"], "1-3-2-4");
    assert_eq!(v["occurrence"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn count_prints_a_single_integer() {
    let (res, out) = cli(&["count", "--set", "A", "--n", "4"]);
    assert_eq!(res.unwrap(), Outcome::Success);
    assert_eq!(out, "20\n");
    let (_, out) = cli(&[
        "count",
        "--set",
        "1-32-4,1-42-3,2-31-4,2-41-3",
        "--n",
        "6",
        "--jobs",
        "3",
    ]);
    assert_eq!(out, "232\n");
}

#[test]
fn verify_table_passes_to_8() {
    let (res, out) = cli(&["verify", "--max-n", "8"]);
    assert_eq!(res.unwrap(), Outcome::Success);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines[0].starts_with("n\t"));
    let expected = [1, 2, 6, 20, 68, 232, 792, 2704];
    for (row, a_n) in lines[1..9].iter().zip(expected) {
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(cols[1], a_n.to_string());
        assert_eq!(cols[2], a_n.to_string());
        assert_eq!(cols[3], a_n.to_string());
        assert_eq!(*cols.last().unwrap(), "PASS");
    }
    assert_eq!(lines[9], "verified");
}

#[test]
fn json_and_text_carry_the_same_data() {
    // enumerate: text rows are the comma grammar of the JSON arrays
    let (_, text) = cli(&["enumerate", "--set", "B", "--n", "5"]);
    let (_, json) = cli(&["enumerate", "--set", "B", "--n", "5", "--format", "json"]);
    let from_json: Vec<String> = json_lines(&json)
        .iter()
        .map(|v| {
            let parts: Vec<String> = v["perm"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect();
            parts.join(",")
        })
        .collect();
    assert_eq!(text.lines().collect::<Vec<_>>(), from_json);

    // verify: every text row matches the JSON row field by field
    let (_, text) = cli(&["verify", "--max-n", "6"]);
    let (_, json) = cli(&["verify", "--max-n", "6", "--format", "json"]);
    let rows = json_lines(&json);
    for (line, v) in text.lines().skip(1).zip(&rows[..rows.len() - 1]) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols[0], v["n"].to_string());
        assert_eq!(cols[1], v["count_a"].to_string());
        assert_eq!(cols[3], v["a_n"].as_str().unwrap());
        assert_eq!(
            cols[7],
            if v["double_counted"].is_null() {
                "-".into()
            } else {
                v["double_counted"].to_string()
            }
        );
    }
    assert_eq!(rows.last().unwrap()["verified"], true);

    // sequence: text is the b-file line of each JSON record
    let (_, text) = cli(&["sequence", "--terms", "6"]);
    let (_, json) = cli(&["sequence", "--terms", "6", "--format", "json"]);
    for (line, v) in text.lines().zip(json_lines(&json)) {
        assert_eq!(
            line,
            format!("{} {}", v["index"], v["value"].as_str().unwrap())
        );
    }
}

#[test]
fn occurrences_lists_everything() {
    let (_, out) = cli(&["occurrences", "--perm", "251346", "--pattern", "3-1-24"]);
    assert!(out.lines().any(|l| l == "3-1-24 (2,3,5,6)"));
    let (_, out) = cli(&["occurrences", "--perm", "251346", "--pattern", "32-1-4"]);
    assert!(out.is_empty());
    let (_, out) = cli(&["occurrences", "--perm", "1324", "--set", "A"]);
    assert_eq!(out, "1-32-4 (1,2,3,4)\n");
}

#[test]
fn generate_matches_enumerate() {
    let (_, generated) = cli(&["generate", "--set", "B", "--n", "7"]);
    let (_, brute) = cli(&["enumerate", "--set", "B", "--n", "7"]);
    assert_eq!(generated, brute);
    let (res, _) = cli(&["generate", "--set", "A", "--n", "3"]);
    assert!(matches!(res, Err(CliError::Usage(_))));
}

#[test]
fn witness_output() {
    let (_, out) = cli(&["witness", "--perm", "31542"]);
    assert_eq!(out, "avoids B\n");
    let (_, out) = cli(&["witness", "--perm", "2413"]);
    assert_eq!(
        out,
        "B-occurrence (1,2,3,4) of 2-4-1-3\ne = 2\nA-occurrence (1,2,3,4) of 2-41-3\n"
    );
    let (_, json) = cli(&["witness", "--perm", "2413", "--format", "json"]);
    let v = &json_lines(&json)[0];
    assert_eq!(v["e"], 2);
    assert_eq!(v["a_pattern"], "2-41-3");
}

#[test]
fn bfile_check_against_fixture() {
    let path = fixture("b006012.txt");
    let (res, out) = cli(&[
        "bfile-check",
        "--file",
        path.to_str().unwrap(),
        "--terms",
        "20",
    ]);
    assert_eq!(res.unwrap(), Outcome::Success);
    assert_eq!(out.lines().last().unwrap(), "indices 0..=19: all match");
    // paper offset is shifted by one against the file, so it must disagree
    let (res, _) = cli(&[
        "bfile-check",
        "--file",
        path.to_str().unwrap(),
        "--terms",
        "20",
        "--offset",
        "paper",
    ]);
    assert_eq!(res.unwrap(), Outcome::Mismatch);
}

#[test]
fn operational_errors() {
    assert!(matches!(
        cli(&["avoids", "--perm", "1223"]).0,
        Err(CliError::Parse(_))
    ));
    assert!(matches!(
        cli(&["count", "--set", "Z", "--n", "3"]).0,
        Err(CliError::Parse(_))
    ));
    assert!(matches!(
        cli(&["count", "--set", "B", "--n", "12"]).0,
        Err(CliError::Enumerate(_))
    ));
    assert!(matches!(
        cli(&[
            "bfile-check",
            "--file",
            "/nonexistent/b.txt",
            "--terms",
            "3"
        ])
        .0,
        Err(CliError::Io(_))
    ));
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vincular"))
}

#[test]
fn exit_codes() {
    let ok = binary()
        .args(["avoids", "--perm", "31542", "--set", "B"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "avoids\n");

    let usage = binary().args(["count", "--set", "B"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));

    let parse = binary().args(["avoids", "--perm", "12,"]).output().unwrap();
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).starts_with("error:"));

    let dir = std::env::temp_dir().join(format!("vincular-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "0 1\n1 2\n2 7\n").unwrap();
    let mismatch = binary()
        .args([
            "bfile-check",
            "--file",
            bad.to_str().unwrap(),
            "--terms",
            "5",
        ])
        .output()
        .unwrap();
    assert_eq!(mismatch.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&mismatch.stdout).contains("first mismatch at 2"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cutoff_env_override() {
    let out = binary()
        .args(["count", "--set", "B", "--n", "4"])
        .env("VINCULAR_CUTOFF", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = binary()
        .args(["count", "--set", "B", "--n", "4", "--cutoff", "4"])
        .env("VINCULAR_CUTOFF", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "20\n");
}
