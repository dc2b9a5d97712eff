use std::process::Command;

use serde_json::Value;

fn freeabel(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_freeabel")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = freeabel(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn prove_snake_json_passes() {
    let (code, v) = json(&["prove", "snake", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["command"], "prove");
    assert_eq!(v["timings"], Value::Null);
    assert!(!v["certificates"].as_array().unwrap().is_empty());
}

#[test]
fn sweep_is_exact_only_at_units() {
    let (code, v) = json(&["--json", "sweep", "--range", "-3..3"]);
    assert_eq!(code, 0);
    let exact = v["results"]["exact"].as_object().unwrap();
    assert_eq!(exact.len(), 7);
    for (s, e) in exact {
        let s: i64 = s.parse().unwrap();
        assert_eq!(e.as_bool().unwrap(), s.abs() == 1, "s = {s}");
    }
}

#[test]
fn hom_group_of_dowker_objects() {
    let (code, v) = json(&["--json", "hom-group", "(alpha | beta*gamma)", "(alpha*beta | gamma)"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariant_factors"]["free_rank"], 1);
    assert_eq!(v["invariant_factors"]["factors"].as_array().unwrap().len(), 0);
    let g = v["results"]["generators"].as_array().unwrap();
    assert_eq!(g.len(), 1);
    assert!(g[0] == "[[beta]]" || g[0] == "[[-beta]]", "{g:?}");
}

#[test]
fn json_is_byte_stable() {
    for args in [
        &["--json", "prove", "uniqueness"][..],
        &["--json", "--seed", "9", "eval"],
        &["--json", "kernel", "alpha*beta"],
    ] {
        assert_eq!(freeabel(args), freeabel(args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(freeabel(&["is-mono", "alpha"]).0, 1);
    assert_eq!(freeabel(&["is-exact", "alpha", "beta"]).0, 1);
    let (code, v) = json(&["--json", "is-exact", "alpha*beta", "gamma"]);
    assert_eq!((code, &v["results"]["complex"]), (1, &Value::Bool(true)));
    assert_eq!(freeabel(&["check-equal", "alpha*beta*gamma", "0*alpha*beta*gamma"]).0, 0);
    assert_eq!(freeabel(&["kernel", "nonsense"]).0, 2);
    assert_eq!(freeabel(&["frobnicate"]).0, 2);
    assert_eq!(freeabel(&["eval"]).0, 2);
    assert_eq!(freeabel(&["--category", "/nonexistent/file", "print"]).0, 2);
    let (code, v) = json(&["--json", "kernel", "nonsense"]);
    assert_eq!(code, 2);
    assert_eq!(v["verdict"], "error");
}

#[test]
fn category_and_rep_files() {
    let dir = std::env::temp_dir().join(format!("freeabel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cat = dir.join("snake.cat");
    std::fs::write(
        &cat,
        "category S { objects a b c d; arrows alpha: a->b; beta: b->c; gamma: c->d; relations alpha*beta*gamma = 0; }\n\
         let al : a -> b = [[alpha]];\nlet bg : b -> d = [[beta*gamma]];\n\
         let ab : a -> c = [[alpha*beta]];\nlet g : c -> d = [[gamma]];\n\
         object K = (al | bg);\nobject C = (ab | g);\nmorphism conn : K -> C = [[beta]];\n",
    )
    .unwrap();
    let rep = dir.join("r.rep");
    std::fs::write(
        &rep,
        "rank a = 1\nrank b = 1\nrank c = 1\nrank d = 1\nmatrix alpha = [[2]]\nmatrix beta = [[3]]\n",
    )
    .unwrap();
    let c = cat.to_str().unwrap();
    let (code, out) = freeabel(&["--category", c, "print"]);
    assert_eq!(code, 0);
    assert!(out.contains("alpha*beta*gamma = 0;"));
    // Ker(b) -> K is nonzero, so the connecting morphism is not mono.
    assert_eq!(freeabel(&["--category", c, "is-mono", "conn"]).0, 1);
    assert_eq!(freeabel(&["--category", c, "hom-group", "K", "C"]).0, 0);
    let (code, v) = json(&["--category", c, "--json", "eval", "--rep", rep.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["results"]["objects"]["K"], "Z/2");
    std::fs::write(&rep, "rank a = 1\nmatrix alpha = [[1, 2]]\n").unwrap();
    assert_eq!(freeabel(&["--category", c, "eval", "--rep", rep.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
