use assert_cmd::Command;
use serde_json::Value;

fn shiftrank() -> Command {
    Command::cargo_bin("shiftrank").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = shiftrank().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn exit_code(args: &[&str]) -> (i32, String) {
    let out = shiftrank().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn dedekind_bound_for_q8() {
    assert!(stdout(&["bounds", "Q8", "--q", "2"]).contains("dedekind_upper = 12"));
}

#[test]
fn permutation_and_lower_bounds_for_s4() {
    let out = stdout(&["bounds", "S4", "--q", "2"]);
    assert!(out.contains("permutation_upper = 40"));
    assert!(out.contains("lower = 10"));
    assert!(out.contains("dedekind_upper = n/a"));
}

#[test]
fn oracle_matches_on_c4() {
    let out = stdout(&["oracle", "C4", "--q", "2"]);
    assert!(out.contains("aut_count = 1536, structure_order = 1536, verdict = MATCH"));
}

#[test]
fn chain_lower_bounds() {
    let out = stdout(&["chain", "--family", "c2pow", "--depth", "4", "--q", "2"]);
    assert!(out.contains("lower_bounds = 1,2,3,4"));
}

#[test]
fn oracle_smoke_over_small_instances() {
    for (spec, q) in [("C1", "2"), ("C2", "2"), ("C3", "2"), ("C4", "2"), ("C2xC2", "2"), ("C2", "3")] {
        let out = stdout(&["oracle", spec, "--q", q]);
        assert!(out.contains("verdict = MATCH"), "{spec} q={q}");
    }
}

#[test]
fn exit_codes() {
    let (code, err) = exit_code(&["group", "C0"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error kind=parse exit=2 reason="));
    assert_eq!(err.lines().count(), 1);
    assert_eq!(exit_code(&["group", "D7"]).0, 2);
    assert_eq!(exit_code(&["bounds", "C4", "--q", "1"]).0, 2);
    assert_eq!(exit_code(&["oracle", "C5", "--q", "2"]).0, 3);
    assert_eq!(exit_code(&["group", "S5", "--max-order", "100"]).0, 3);
    assert_eq!(exit_code(&["lattice", "S5"]).0, 3);
    assert_eq!(exit_code(&["oracle", "C4", "--census-budget", "4"]).0, 3);
    assert_eq!(exit_code(&["chain", "--depth", "7"]).0, 3);
}

#[test]
fn json_has_fixed_top_level_keys() {
    let v = json(&["bounds", "Q8", "--q", "2"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["group", "q", "lattice", "alpha", "aut", "bounds", "oracle", "meta"]);
    assert_eq!(v["aut"]["order"].as_str().unwrap().len(), 63);
    let rows = v["bounds"]["rows"].as_array().unwrap();
    let dedekind = rows.iter().find(|r| r["name"] == "dedekind_upper").unwrap();
    assert_eq!(dedekind["value"], 12);
    assert_eq!(dedekind["applicable"], true);
    assert!(rows.iter().all(|r| r["provenance"].is_string()));
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        &["bounds", "S4", "--q", "2", "--json"][..],
        &["oracle", "C2xC2", "--json"],
        &["lattice", "D8", "--mobius", "--json"],
        &["chain", "--depth", "3", "--json"],
    ] {
        let text = stdout(args);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    }
}

#[test]
fn inapplicable_bounds_are_listed() {
    let v = json(&["bounds", "S4", "--q", "2"]);
    let rows = v["bounds"]["rows"].as_array().unwrap();
    let dedekind = rows.iter().find(|r| r["name"] == "dedekind_upper").unwrap();
    assert_eq!(dedekind["applicable"], false);
    assert!(dedekind["value"].is_null());
    assert_eq!(rows.len(), 7);
}

#[test]
fn json_and_text_agree() {
    let text = stdout(&["oracle", "C2", "--q", "3"]);
    let v = json(&["oracle", "C2", "--q", "3"]);
    let o = &v["oracle"];
    let line = format!(
        "aut_count = {}, structure_order = {}, verdict = {}",
        o["aut_count"].as_str().unwrap(),
        o["structure_order"].as_str().unwrap(),
        o["verdict"].as_str().unwrap()
    );
    assert!(text.contains(&line));
    assert_eq!(o["aut_count"], "288");

    let text = stdout(&["bounds", "D8", "--q", "3"]);
    let v = json(&["bounds", "D8", "--q", "3"]);
    let row = v["bounds"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == "dihedral_interval")
        .unwrap()
        .clone();
    assert_eq!((row["value"]["lower"].clone(), row["value"]["upper"].clone()), (15.into(), 18.into()));
    assert!(text.contains("dihedral_interval = [15, 18]"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let strip = |mut v: Value| {
        v["meta"]["threads"] = Value::Null;
        v
    };
    let one = strip(json(&["oracle", "C2xC2", "--threads", "1"]));
    let four = strip(json(&["oracle", "C2xC2", "--threads", "4"]));
    assert_eq!(one, four);
}

#[test]
fn cayley_input() {
    // C3 as a Cayley table
    let path = std::env::temp_dir().join(format!("shiftrank-c3-{}.txt", std::process::id()));
    std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let p = path.to_str().unwrap();
    let v = json(&["oracle", "--cayley", p]);
    assert_eq!(v["group"]["order"], 3);
    assert_eq!(v["group"]["family"], "cyclic(n=3)");
    assert_eq!(v["oracle"]["aut_count"], "36");
    assert_eq!(v["oracle"]["verdict"], "MATCH");

    std::fs::write(&path, "2\n0 1\n0 1\n").unwrap();
    assert_eq!(exit_code(&["group", "--cayley", p]).0, 2);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn group_and_lattice_commands() {
    let v = json(&["group", "C2wrS2"]);
    assert_eq!(v["group"]["order"], 8);
    assert_eq!(v["group"]["rank"], 2);
    assert_eq!(v["group"]["family"], "dihedral(n=4, order=8)");
    let v = json(&["lattice", "S4"]);
    assert_eq!(v["lattice"]["r"], 11);
    assert_eq!(v["lattice"]["subgroup_count"], 30);
    assert_eq!(v["lattice"]["subgroups"].as_array().unwrap().len(), 30);
    let v = json(&["lattice", "C2xC2", "--mobius"]);
    // μ(1, V4) = 2
    assert_eq!(v["lattice"]["mobius"][0][4], 2);
}

#[test]
fn aut_command_reports_rank_when_small() {
    let v = json(&["aut", "C2", "--q", "2"]);
    assert_eq!(v["aut"]["order"], "4");
    assert_eq!(v["aut"]["rank"], 2);
    let v = json(&["aut", "S4", "--q", "2"]);
    assert!(v["aut"]["order"].is_null());
    assert!(v["aut"]["rank"].is_null());
}
