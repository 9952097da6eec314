use std::process::{Command, Output};

fn qeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qeta"))
        .args(args)
        .env_remove("QETA_MAXDEG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn product_v1_six_terms() {
    let o = qeta(&["product", "--method", "v1", "--left", "1,2", "--right", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    // -q η_(a+b+c) + (q-1) η_(a,b+c) + (q-1) η_(a+c,b) + η_(c,a,b) + η_(a,c,b) + η_(a,b,c)
    let want = "-q * eta[6]\n(q - 1) * eta[1,5]\n(q - 1) * eta[4,2]\neta[1,2,3]\neta[1,3,2]\neta[3,1,2]\n";
    assert_eq!(stdout(&o), want);
    for m in ["v2", "v3"] {
        let other = qeta(&["product", "--method", m, "--left", "1,2", "--right", "3"]);
        assert_eq!(stdout(&other), want, "method {}", m);
    }
}

#[test]
fn antipode_s2_of_eta_1() {
    let o = qeta(&["antipode", "--method", "s2", "--comp", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1 * eta[1]\n");
}

#[test]
fn antipode_methods_agree_after_conversion() {
    let s = qeta(&["--json", "antipode", "--method", "s", "--comp", "2,1"]);
    let m = qeta(&["antipode", "--method", "m", "eta:2,1"]);
    assert!(s.status.success() && m.status.success());
    let via_s = qeta(&["expand", stdout(&s).trim()]);
    assert_eq!(stdout(&via_s), stdout(&m));
}

#[test]
fn verify_dual_at_four() {
    let o = qeta(&["verify", "--maxdeg", "4", "--suite", "dual"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    // |Comp_n|^2 entries for n = 0..4: 1 + 1 + 4 + 16 + 64
    assert!(out.contains("PASS dual/gram-identity: 86 checks"), "{}", out);
    assert!(out.lines().last().unwrap().starts_with("PASS"));
}

#[test]
fn verify_output_is_stable() {
    let a = qeta(&["verify", "--maxdeg", "3"]);
    let b = qeta(&["verify", "--maxdeg", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let names: Vec<String> = stdout(&a)
        .lines()
        .filter_map(|l| l.split(':').next().map(str::to_string))
        .collect();
    assert!(names.iter().any(|n| n == "PASS subalg/even-entries"));
}

#[test]
fn maxdeg_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qeta"))
        .args(["verify", "--suite", "series"])
        .env("QETA_MAXDEG", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("(maxdeg 2)"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["verify", "--suite", "nonsense"],
        vec!["product", "--left", "1,0", "--right", "1"],
        vec!["convert", "eta:1", "--to", "Z"],
        vec!["frobnicate"],
        vec!["antipode", "--method", "s2"],
        vec!["expand", "eta:1,1", "--nvars", "2", "--maxdeg", "1"],
    ] {
        let o = qeta(&args);
        assert_eq!(o.status.code(), Some(2), "{:?}: {}", args, stderr(&o));
    }
}

#[test]
fn malformed_json_mentions_line() {
    let o = qeta(&["expand", "{\"algebra\": \"QSym\",\n \"basis\": }"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn poles_exit_3() {
    let o = qeta(&["antipode", "--method", "s", "--comp", "1,1", "--q", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("pole"), "{}", stderr(&o));
    let o = qeta(&["convert", "M:2", "--to", "eta", "--q", "-1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("pole"));
    let o = qeta(&["expand", "EtaStar:1", "--q", "-1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn specialization_at_output() {
    let o = qeta(&["product", "--left", "1", "--right", "2", "--q", "1"]);
    assert_eq!(stdout(&o), "eta[1,2]\neta[2,1]\n");
    let o = qeta(&["pair", "EtaStar:1,2", "eta:1,2"]);
    assert_eq!(stdout(&o), "1\n");
    let o = qeta(&["pair", "H:1,1", "eta:1,1"]);
    assert_eq!(stdout(&o), "q^2 + 2*q + 1\n");
}

#[test]
fn json_round_trips() {
    let producers: Vec<Vec<&str>> = vec![
        vec!["convert", "M:2,1", "--to", "eta"],
        vec!["convert", "H:2,1", "--to", "EtaStar"],
        vec!["product", "--method", "v2", "--left", "1,1", "--right", "2"],
        vec!["sharp", "--left", "1,2", "--right", "1"],
        vec!["antipode", "--method", "f", "--comp", "1,2"],
    ];
    for args in producers {
        let mut with_json = vec!["--json"];
        with_json.extend(&args);
        let o = qeta(&with_json);
        assert!(o.status.success(), "{:?}: {}", args, stderr(&o));
        let text = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let basis = v["basis"].as_str().unwrap();
        let back = qeta(&["--json", "convert", text.trim(), "--to", basis]);
        assert_eq!(stdout(&back), text, "{:?}", args);
    }
}

#[test]
fn tensors_are_not_elements() {
    for input in ["eta:1,2", "EtaStar:2"] {
        let o = qeta(&["--json", "coproduct", input]);
        assert!(o.status.success());
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(v["left_basis"].is_string());
        assert_eq!(qeta(&["expand", stdout(&o).trim()]).status.code(), Some(2));
    }
}

#[test]
fn json_from_file() {
    let dir = std::env::temp_dir().join(format!("qeta-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("elem.json");
    std::fs::write(
        &path,
        r#"{"algebra":"QSym","basis":"M","terms":[{"comp":[2],"coeff":{"num":[0,1],"den":[1]}}]}"#,
    )
    .unwrap();
    let o = qeta(&["expand", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "q * M[2]\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn stufufufflers_listing() {
    let o = qeta(&["stufufufflers", "--left", "1,2", "--right", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.ends_with("total: 6\n"), "{}", out);
    let o = qeta(&["stufufufflers", "--left", "1,2", "--right", "3,4"]);
    assert!(stdout(&o).ends_with("total: 18\n"));
}

#[test]
fn sharp_recursive_matches_explicit() {
    let a = qeta(&["sharp", "--left", "1,2", "--right", "3,1"]);
    let b = qeta(&["sharp", "--left", "1,2", "--right", "3,1", "--explicit"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
