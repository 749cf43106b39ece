use std::process::{Command, Output};

fn twin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn reduce_and_normal_form() {
    let o = twin(&["reduce", "s1 s1 s2"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "s2"));
    let o = twin(&["nf", "s3 s1"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "s1 s3"));
}

#[test]
fn eq_exit_codes() {
    let o = twin(&["eq", "(s1 s2)^3 (s2 s1)^3", "", "--n", "3"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "true"));
    let o = twin(&["eq", "s1", "s2"]);
    assert_eq!((code(&o), stdout(&o).trim()), (1, "false"));
}

#[test]
fn purity() {
    assert_eq!(code(&twin(&["is-pure", "(s1 s2)^3"])), 0);
    assert_eq!(code(&twin(&["is-pure", "s1"])), 1);
}

#[test]
fn schreier_pt3_has_one_generator() {
    let o = twin(&["schreier-pt", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("generators: 1"), "{out}");
    assert!(out.contains("relators: 0"), "{out}");
}

#[test]
fn schreier_pt4_json_is_free_of_rank_seven() {
    let o = twin(&["schreier-pt", "4", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 7);
    assert!(v["relators"].as_array().unwrap().is_empty());
    assert_eq!(v["meanings"].as_object().unwrap().len(), 7);
}

#[test]
fn schreier_pt4_lists_the_basis() {
    let out = stdout(&twin(&["schreier-pt", "4"]));
    for i in 1..=7 {
        assert!(out.contains(&format!("-> b{i}")), "b{i} missing:\n{out}");
    }
}

#[test]
fn counting_commands() {
    assert_eq!(stdout(&twin(&["rank-bound", "4"])).trim(), "7");
    assert_eq!(stdout(&twin(&["rank-bound", "5"])).trim(), "43");
    assert_eq!(stdout(&twin(&["betti", "5"])).trim(), "31");
    assert_eq!(stdout(&twin(&["gens-pt", "4"])).lines().count(), 6);
    assert_eq!(stdout(&twin(&["gens-pt", "5"])).lines().count(), 36);
}

#[test]
fn phi4_commands() {
    let o = twin(&["phi4", "check"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("order 24"));
    let o = twin(&["phi4", "faithful", "--depth", "5"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "none"));
    let o = twin(&["phi4", "apply", "s1", "b2"]);
    assert_eq!(stdout(&o).trim(), "b2^-1");
}

#[test]
fn surface_check_json() {
    let o = twin(&["surface", "check", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let r = &v["report"];
    assert_eq!(r["triangles"], 24);
    assert_eq!(r["edges"], 36);
    assert_eq!(r["filledEulerChar"], 2);
    assert_eq!(r["idealVertexClasses"], 8);
    assert_eq!(r["pi1Rank"], 7);
}

#[test]
fn vt_eq_exit_codes() {
    let o = twin(&["vt", "eq", "r1 r2 r1", "r2 r1 r2", "--depth", "1"]);
    assert_eq!((code(&o), stdout(&o).lines().next()), (0, Some("EQUAL")));
    let o = twin(&["vt", "eq", "s1 s2 s1", "s2 s1 s2", "--depth", "4"]);
    assert_eq!((code(&o), stdout(&o).trim()), (3, "UNKNOWN"));
    let o = twin(&["vt", "eq", "s1 s2 r1", "r2 s1 s2", "--depth", "2", "--welded"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn vt_check_passes() {
    assert_eq!(code(&twin(&["vt", "check", "--max-n", "5"])), 0);
}

#[test]
fn verify_suites() {
    let o = twin(&["verify", "lemma41", "--max-n", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS lemma41"));
    let o = twin(&["verify", "all", "--json", "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 8);
    assert!(reports.iter().all(|r| r["failures"].as_array().unwrap().is_empty()));
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["verify", "nope"][..], &["reduce", "s1 x"], &["frobnicate"], &["rank-bound", "2"]] {
        let o = twin(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
