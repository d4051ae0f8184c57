//! Command-line behavior: exit codes, round trips, JSON determinism.


use quantum3::cli::dispatch_str;

fn tmpdir() -> tempfile::TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn builtin_emit_then_validate_round_trip() {
    let dir = tmpdir();
    for name in ["vec_z2", "vec_z3", "fibonacci", "ising"] {
        let path = dir.path().join(format!("{name}.json"));
        let p = path.to_str().unwrap();
        let r = dispatch_str(&["quantum3", "builtin", name, "--emit", p]);
        assert_eq!(r.exit_code, 0, "{name} emit: {}", r.output);
        let r = dispatch_str(&["quantum3", "validate", p]);
        assert_eq!(r.exit_code, 0, "{name} validate: {}", r.output);
        assert!(r.output.contains("valid"));
    }
}

#[test]
fn validate_rejects_perturbed_sixj() {
    let dir = tmpdir();
    let path = dir.path().join("fib.json");
    let p = path.to_str().unwrap();
    assert_eq!(dispatch_str(&["quantum3", "builtin", "fibonacci", "--emit", p]).exit_code, 0);
    // perturb one 6j entry by 0.01
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entry = &mut v["sixj"][0][6];
    *entry = serde_json::json!(entry.as_f64().unwrap() + 0.01);
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let r = dispatch_str(&["quantum3", "validate", p]);
    assert_eq!(r.exit_code, 1, "{}", r.output);
    assert!(r.output.contains("pentagon"), "{}", r.output);
}

#[test]
fn tv_command_golden_value() {
    let dir = tmpdir();
    let fib = dir.path().join("fib.json");
    let s3 = dir.path().join("s3.json");
    assert_eq!(
        dispatch_str(&["quantum3", "builtin", "fibonacci", "--emit", fib.to_str().unwrap()]).exit_code,
        0
    );
    assert_eq!(
        dispatch_str(&["quantum3", "tri", "emit", "s3", s3.to_str().unwrap()]).exit_code,
        0
    );
    for method in ["enumerate", "contract"] {
        let r = dispatch_str(&[
            "quantum3",
            "--json",
            "tv",
            fib.to_str().unwrap(),
            s3.to_str().unwrap(),
            "--method",
            method,
        ]);
        assert_eq!(r.exit_code, 0, "{method}: {}", r.output);
        let v: serde_json::Value = serde_json::from_str(&r.output).unwrap();
        let re = v["value"][0].as_f64().unwrap();
        assert!((re - 0.2763932).abs() < 1e-6, "{method}: {re}");
        assert_eq!(v["schema_version"], 1);
    }
}

#[test]
fn tri_subcommands() {
    let dir = tmpdir();
    let path = dir.path().join("lens3.json");
    let p = path.to_str().unwrap();
    let r = dispatch_str(&["quantum3", "tri", "emit", "lens:3", p]);
    assert_eq!(r.exit_code, 0, "{}", r.output);
    let r = dispatch_str(&["quantum3", "tri", "validate", p]);
    assert_eq!(r.exit_code, 0);
    let r = dispatch_str(&["quantum3", "--json", "tri", "info", p]);
    assert_eq!(r.exit_code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.output).unwrap();
    assert_eq!(v["tetrahedra"], 12);
    assert_eq!(v["euler"], 0);
}

#[test]
fn eval_command_with_omega() {
    let dir = tmpdir();
    let ising = dir.path().join("ising.json");
    assert_eq!(
        dispatch_str(&["quantum3", "builtin", "ising", "--emit", ising.to_str().unwrap()]).exit_code,
        0
    );
    // unknot diagram with framing +1, component 0 uncolored
    let diagram = dir.path().join("unknot.json");
    std::fs::write(
        &diagram,
        r#"{
            "components": [{"id": 0, "framing": 1}],
            "slices": [
                [{"type": "cup", "pos": 0, "component": 0, "left_dir": "up"}],
                [{"type": "cap", "pos": 0}]
            ]
        }"#,
    )
    .unwrap();
    let r = dispatch_str(&[
        "quantum3",
        "--json",
        "eval",
        ising.to_str().unwrap(),
        diagram.to_str().unwrap(),
        "--omega",
        "0",
    ]);
    assert_eq!(r.exit_code, 0, "{}", r.output);
    let v: serde_json::Value = serde_json::from_str(&r.output).unwrap();
    // Delta+ of ising = 2 exp(i pi/8)
    let re = v["value"][0].as_f64().unwrap();
    let im = v["value"][1].as_f64().unwrap();
    assert!((re - 2.0 * (std::f64::consts::PI / 8.0).cos()).abs() < 1e-9);
    assert!((im - 2.0 * (std::f64::consts::PI / 8.0).sin()).abs() < 1e-9);
}

#[test]
fn wrt_command_with_tau() {
    let dir = tmpdir();
    let fib = dir.path().join("fib.json");
    assert_eq!(
        dispatch_str(&["quantum3", "builtin", "fibonacci", "--emit", fib.to_str().unwrap()]).exit_code,
        0
    );
    let pres = dir.path().join("s1xs2.json");
    std::fs::write(
        &pres,
        r#"{
            "components": [{"id": 0, "framing": 0}],
            "slices": [
                [{"type": "cup", "pos": 0, "component": 0, "left_dir": "up"}],
                [{"type": "cap", "pos": 0}]
            ],
            "surgery_components": [0]
        }"#,
    )
    .unwrap();
    let r = dispatch_str(&[
        "quantum3",
        "--json",
        "wrt",
        fib.to_str().unwrap(),
        pres.to_str().unwrap(),
        "--tau",
    ]);
    assert_eq!(r.exit_code, 0, "{}", r.output);
    let v: serde_json::Value = serde_json::from_str(&r.output).unwrap();
    // WRT(S1xS2) = dim = 1 + phi^2; tau = 1; b1 = nullity = 1
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((v["value"][0].as_f64().unwrap() - (1.0 + phi * phi)).abs() < 1e-9);
    assert_eq!(v["nullity"], 1);
    assert!((v["tau"][0].as_f64().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn pachner_fuzz_command_with_category() {
    let dir = tmpdir();
    let cat = dir.path().join("vz2.json");
    let tri = dir.path().join("s3.json");
    assert_eq!(dispatch_str(&["quantum3", "builtin", "vec_z2", "--emit", cat.to_str().unwrap()]).exit_code, 0);
    assert_eq!(dispatch_str(&["quantum3", "tri", "emit", "s3", tri.to_str().unwrap()]).exit_code, 0);
    let r = dispatch_str(&[
        "quantum3",
        "--seed",
        "3",
        "pachner-fuzz",
        tri.to_str().unwrap(),
        "--moves",
        "12",
        "--category",
        cat.to_str().unwrap(),
    ]);
    assert_eq!(r.exit_code, 0, "{}", r.output);
    assert!(r.output.contains("max invariant deviation"));
}

#[test]
fn verlinde_command() {
    let dir = tmpdir();
    let fib = dir.path().join("fib.json");
    assert_eq!(dispatch_str(&["quantum3", "builtin", "fibonacci", "--emit", fib.to_str().unwrap()]).exit_code, 0);
    let r = dispatch_str(&["quantum3", "--json", "verlinde", fib.to_str().unwrap(), "--genus", "2"]);
    assert_eq!(r.exit_code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.output).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - 5.0).abs() < 1e-6);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dispatch_str(&["quantum3", "frobnicate"]).exit_code, 2);
    assert_eq!(dispatch_str(&["quantum3", "builtin", "su2_k9000"]).exit_code, 2);
    assert_eq!(dispatch_str(&["quantum3", "validate", "/nonexistent/file.json"]).exit_code, 2);
    // malformed file: diagnostics name the file
    let dir = tmpdir();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let r = dispatch_str(&["quantum3", "validate", bad.to_str().unwrap()]);
    assert_eq!(r.exit_code, 2);
    assert!(r.output.contains("bad.json"));
}

#[test]
fn json_output_is_deterministic_modulo_timing() {
    let dir = tmpdir();
    let fib = dir.path().join("fib.json");
    let s3 = dir.path().join("s3.json");
    dispatch_str(&["quantum3", "builtin", "fibonacci", "--emit", fib.to_str().unwrap()]);
    dispatch_str(&["quantum3", "tri", "emit", "s3", s3.to_str().unwrap()]);
    let strip = |out: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(out).unwrap();
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v.as_object_mut().unwrap().remove("compute_ms");
        v
    };
    let args = [
        "quantum3",
        "--json",
        "tv",
        fib.to_str().unwrap(),
        s3.to_str().unwrap(),
        "--method",
        "contract",
    ];
    let a = strip(&dispatch_str(&args).output);
    let b = strip(&dispatch_str(&args).output);
    assert_eq!(a, b);
}

#[test]
fn contraction_plan_cache() {
    let dir = tmpdir();
    let cache = dir.path().join("cache");
    let fib = dir.path().join("fib.json");
    let s3 = dir.path().join("s3.json");
    dispatch_str(&["quantum3", "builtin", "fibonacci", "--emit", fib.to_str().unwrap()]);
    dispatch_str(&["quantum3", "tri", "emit", "s3", s3.to_str().unwrap()]);
    std::env::set_var("QUANTUM3_CACHE_DIR", cache.to_str().unwrap());
    let args = ["quantum3", "--json", "tv", fib.to_str().unwrap(), s3.to_str().unwrap()];
    let a = dispatch_str(&args);
    assert_eq!(a.exit_code, 0);
    let n_plans = std::fs::read_dir(&cache).map(|d| d.count()).unwrap_or(0);
    assert!(n_plans >= 1, "plan file should be cached");
    let b = dispatch_str(&args);
    std::env::remove_var("QUANTUM3_CACHE_DIR");
    assert_eq!(b.exit_code, 0);
    let va: serde_json::Value = serde_json::from_str(&a.output).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&b.output).unwrap();
    assert_eq!(va["value"], vb["value"]);
}
