use adelic::cli::{run, Outcome};
use serde_json::Value;

fn adelic(args: &[&str]) -> Outcome {
    run(std::iter::once("adelic").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = adelic(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout.trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut v: Vec<&str> = args.to_vec();
    v.push("--json");
    let out = adelic(&v);
    serde_json::from_str(&out.stdout).expect("one JSON document")
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["val", "--field", "Q", "--place", "7", "98/3"]), "2");
    assert_eq!(ok(&["idele-to-ideal", "--field", "Q", "{2: 2, 3: 1/3; tail 1}"]), "(2/3)");
    let g = json(&["class-group", "--field", "Q(sqrt -23)"]);
    assert_eq!(g["result"]["order"], 3);
    assert_eq!(g["result"]["forms"], serde_json::json!([[1, 1, 6], [2, 1, 3], [2, -1, 3]]));
    assert_eq!(g["schema"], "adelic/1");
}

#[test]
fn exit_codes() {
    assert_eq!(adelic(&["val", "--field", "Q", "--place", "7", "98/"]).code, 2);
    assert_eq!(adelic(&["val", "--field", "Q(sqrt 4)", "--place", "7", "1"]).code, 2);
    assert_eq!(adelic(&["frobnicate", "--field", "Q"]).code, 2);
    assert_eq!(adelic(&["adele-op", "inv", "--field", "Q", "{3: 3; tail 0}"]).code, 3);
    assert_eq!(adelic(&["factor-ideal", "--field", "Q", "0"]).code, 3);
    assert_eq!(adelic(&["class-group", "--field", "Q(sqrt 7)"]).code, 3);
    assert_eq!(adelic(&["val", "--field", "Q", "--place", "5", "--prec", "3", "125"]).code, 4);
    assert_eq!(adelic(&["adele-op", "inv", "--field", "Q", "{2: 4 prec 3; tail 1}"]).code, 4);
    assert_eq!(adelic(&["--help"]).code, 0);
}

#[test]
fn errors_go_to_stderr_and_json_stays_single() {
    let out = adelic(&["factor-ideal", "--field", "Q", "0", "--json"]);
    assert!(out.stderr.starts_with("error:"));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "ZeroIdeal");
    let plain = adelic(&["factor-ideal", "--field", "Q", "0"]);
    assert!(plain.stdout.is_empty());
}

#[test]
fn deterministic_self_check() {
    let args = ["ck-quotient-check", "--field", "Q(sqrt -23)", "--seed", "3", "--samples", "8", "--json"];
    let a = adelic(&args);
    assert_eq!(a, adelic(&args));
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["result"]["ok"], true);
    assert_eq!(v["result"]["classes"].as_array().unwrap().len(), 3);
    for field in ["Q", "Fq(t;q=3)", "Q(sqrt -1)"] {
        let v = json(&["ck-quotient-check", "--field", field, "--samples", "5"]);
        assert_eq!(v["result"]["ok"], true, "{field}");
    }
}

#[test]
fn places_by_name() {
    assert_eq!(ok(&["val", "--field", "Q(sqrt -5)", "--place", "[2, 1+w]", "2"]), "2");
    // 5 ramifies in Q(sqrt -5), so one prime lies above it
    assert_eq!(ok(&["val", "--field", "Q(sqrt -5)", "--place", "5", "w"]), "1");
    assert_eq!(adelic(&["val", "--field", "Q(sqrt -5)", "--place", "3", "w"]).code, 3);
    assert_eq!(ok(&["val", "--field", "Fq(t;q=3)", "--place", "inf", "t^2"]), "-2");
    assert_eq!(ok(&["val", "--field", "Fq(t;q=3)", "--place", "t^2+1", "(t^2+1)/t"]), "1");
    assert_eq!(adelic(&["val", "--field", "Fq(t;q=3)", "--place", "t^2-1", "t"]).code, 3);
    assert_eq!(adelic(&["val", "--field", "Q", "--place", "real0", "3"]).code, 3);
}

/// Printed adeles parse back: `(x + y) - y == x`.
#[test]
fn printed_adeles_reparse() {
    let cases = [
        ("Q", "{2: 1/2, 3: 5; tail 7}", "{2: 1/3; tail 1}"),
        ("Q", "{2: 1/2 prec 3, 3: 5; tail 7}", "{2: 1/3 prec 4; tail 1}"),
        ("Q(sqrt -5)", "{[2, 1+w]: 1+w; tail 1/3}", "{[3, 2+w]: w; tail 2}"),
        ("Fq(t;q=3)", "{t: 1/t prec 3; tail t+1}", "{t+1: t; tail 1/t}"),
        ("Q", "{3: 2; tail 1; inf 1.25}", "{tail 5; inf -0.5}"),
        ("Q(sqrt -1)", "{tail w; inf 1-2i}", "{[2, 1+w]: 1+w; tail 1; inf 0.5+0.5i}"),
    ];
    for (field, x, y) in cases {
        for (op, undo) in [("add", "sub"), ("mul", "mul")] {
            let z = ok(&["adele-op", op, "--field", field, x, y]);
            let back = if undo == "sub" {
                ok(&["adele-op", "sub", "--field", field, &z, y])
            } else {
                let yi = ok(&["adele-op", "inv", "--field", field, y]);
                ok(&["adele-op", "mul", "--field", field, &z, &yi])
            };
            assert_eq!(ok(&["adele-op", "eq", "--field", field, &back, x]), "true", "{field}: {op} {x} {y} -> {z}");
        }
    }
}

#[test]
fn printed_ideals_reparse() {
    let cases = [
        ("Q", "98/3"),
        ("Q(sqrt -5)", "[2, 1+w]^-3 * [3, 1+w]"),
        ("Q(sqrt -23)", "[2, w]^2 / 5"),
        ("Q(sqrt -1)", "[1+w]^-1 * 3"),
        ("Fq(t;q=3)", "(t^3-t)/(t^2+1)"),
        ("Fq(t;q=4)", "(a*t+1)^2"),
    ];
    for (field, ideal) in cases {
        let first = ok(&["factor-ideal", "--field", field, ideal]);
        let shown = first.split(" = ").next().unwrap();
        let second = ok(&["factor-ideal", "--field", field, shown]);
        assert_eq!(first, second, "{field}");
        let idele = ok(&["preimage", "--field", field, shown]);
        assert_eq!(ok(&["idele-to-ideal", "--field", field, &idele]), shown, "{field}");
    }
}

#[test]
fn printed_uniformizers_reparse() {
    for (field, place) in [("Q", "13"), ("Q(sqrt -5)", "[3, 2+w]"), ("Q(sqrt -23)", "[23, 11+w]"), ("Fq(t;q=4)", "t+a"), ("Fq(t;q=3)", "inf")] {
        let pi = ok(&["uniformizer", "--field", field, "--place", place]);
        assert_eq!(ok(&["val", "--field", field, "--place", place, &pi]), "1", "{field} {place}");
    }
}

#[test]
fn localization_output() {
    let v = json(&["adele-op", "localize", "--field", "Q", "{2: 1/2, 3: 5/9; tail 7}"]);
    assert_eq!(v["result"]["denominator"], "18");
    assert_eq!(v["result"]["round_trip"], true);
}

#[test]
fn precision_flag_applies_to_bare_components() {
    let out = ok(&["adele-op", "mul", "--field", "Q", "--prec", "3", "{5: 5; tail 1}", "{5: 10 prec 4; tail 1}"]);
    assert_eq!(out, "{5: 50 prec 4; tail 1}");
}
