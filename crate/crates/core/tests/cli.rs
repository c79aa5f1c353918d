//! The command-line front end driven through `cli::run`: documented examples,
//! exit codes, schema conformance and plain/JSON parity.

use std::sync::OnceLock;

use beatty::cli::{run, Outcome, EXIT_OK, EXIT_PRECISION, EXIT_USAGE, EXIT_VERDICT_NO};
use serde_json::{json, Value};

const GOLDEN: &str = "(-1+1*sqrt 5)/2";
const GOLDEN_CO: &str = "(3-1*sqrt 5)/2";
const THREE_MINUS_E: &str = "~0.281718171540954764639712528647337502242752906300040425033032:3-e";
const E_MINUS_TWO: &str = "~0.718281828459045235360287471352662497757247093699959574966968:e-2";

fn invoke(format: &str, args: &[&str]) -> Outcome {
    let mut argv = vec!["beatty", "--format", format];
    argv.extend_from_slice(args);
    run(argv)
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let out = invoke("json", args);
    let value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {:?}", out.stdout));
    (out.code, value)
}

fn schema() -> &'static jsonschema::Validator {
    static SCHEMA: OnceLock<jsonschema::Validator> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        let text =
            std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/cli-output.schema.json")).unwrap();
        jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
    })
}

fn assert_valid(args: &[&str], value: &Value) {
    let errors: Vec<String> = schema().iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} -> {value} violates the schema: {errors:?}");
}

fn pair<'a>(a: &'a str, a_off: &'a str, b: &'a str, b_off: &'a str) -> Vec<&'a str> {
    vec![
        "--alpha",
        a,
        "--alpha-offset",
        a_off,
        "--beta",
        b,
        "--beta-offset",
        b_off,
    ]
}

fn with<'a>(cmd: &'a str, mut rest: Vec<&'a str>) -> Vec<&'a str> {
    rest.insert(0, cmd);
    rest
}

/// One invocation per subcommand plus the error paths, with expected exit codes.
fn corpus() -> Vec<(Vec<&'static str>, i32)> {
    vec![
        (vec!["member", "--alpha", "2/5", "--offset", "0", "--k", "5"], EXIT_OK),
        (vec!["member", "--alpha", GOLDEN, "--k", "1"], EXIT_OK),
        (vec!["enumerate", "--alpha", GOLDEN, "--bound", "30"], EXIT_OK),
        (
            vec!["enumerate", "--alpha", "2/5", "--offset", "-3/5", "--bound", "20"],
            EXIT_OK,
        ),
        (vec!["count", "--alpha", GOLDEN, "--k", "100"], EXIT_OK),
        (vec!["term", "--alpha", "1/2", "--offset", "1/2", "--n", "4"], EXIT_OK),
        (with("tile-check", pair(GOLDEN, "0", GOLDEN_CO, "0")), EXIT_OK),
        (with("tile-check", pair("1/2", "0", "1/2", "0")), EXIT_OK),
        (with("tile-check", pair("1/2", "0", "1/2", "1/2")), EXIT_OK),
        (
            with("tile-check", pair(THREE_MINUS_E, "2/5", E_MINUS_TWO, "-2/5")),
            EXIT_OK,
        ),
        (with("tile-check-z", pair(GOLDEN, "0", GOLDEN_CO, "0")), EXIT_OK),
        (with("tile-check-z", pair(GOLDEN, "1/3", GOLDEN_CO, "-1/3")), EXIT_OK),
        (
            with(
                "tile-verify",
                [pair(GOLDEN, "0", GOLDEN_CO, "0"), vec!["--window", "500"]].concat(),
            ),
            EXIT_OK,
        ),
        (
            with(
                "tile-verify",
                [pair("1/2", "0", "1/2", "0"), vec!["--window", "50"]].concat(),
            ),
            EXIT_VERDICT_NO,
        ),
        (
            with(
                "tile-verify",
                [
                    pair(GOLDEN, "0", GOLDEN_CO, "0"),
                    vec!["--window", "200", "--start", "-200"],
                ]
                .concat(),
            ),
            EXIT_VERDICT_NO,
        ),
        (vec!["cf", "--x", "3/7"], EXIT_OK),
        (vec!["cf", "--x", GOLDEN, "--terms", "6"], EXIT_OK),
        (vec!["cf", "--x", "(-3+1*sqrt 14)/5"], EXIT_OK),
        (vec!["continuants", "--alpha", GOLDEN, "--count", "6"], EXIT_OK),
        (vec!["ostrowski", "--alpha", "(-1+1*sqrt 2)/1", "--m", "100"], EXIT_OK),
        (vec!["word", "--alpha", GOLDEN, "--m", "20"], EXIT_OK),
        (vec!["decompose", "--alpha", GOLDEN, "--m", "11"], EXIT_OK),
        (vec!["decompose", "--alpha", "2/5", "--m", "12"], EXIT_OK),
        (vec!["verify-decompose", "--alpha", GOLDEN, "--m-max", "200"], EXIT_OK),
        (vec!["spacing", "--alpha", GOLDEN, "--t", "4"], EXIT_OK),
        (
            vec!["morphism", "--word", "1011", "--one", "10", "--zero", "1"],
            EXIT_OK,
        ),
        (
            with(
                "circle-svg",
                [pair("1/2", "0", "1/2", "1/2"), vec!["--k-max", "4"]].concat(),
            ),
            EXIT_OK,
        ),
        (vec!["member", "--alpha", "3/2x", "--k", "1"], EXIT_USAGE),
        (vec!["member", "--alpha", "-1/2", "--k", "1"], EXIT_USAGE),
        (vec!["member", "--alpha", "1/2"], EXIT_USAGE),
        (vec!["no-such-command"], EXIT_USAGE),
        (vec!["cf", "--x", "45/16"], EXIT_USAGE),
        (
            vec!["--precision", "5", "member", "--alpha", "~0.5:x", "--k", "2"],
            EXIT_PRECISION,
        ),
    ]
}

#[test]
fn every_json_output_matches_the_schema() {
    for (args, code) in corpus() {
        let (got, value) = json_of(&args);
        assert_eq!(got, code, "{args:?} -> {value}");
        assert_valid(&args, &value);
        assert_eq!(
            value.get("error").is_some(),
            code == EXIT_USAGE || code == EXIT_PRECISION,
            "{args:?}"
        );
    }
}

#[test]
fn schema_rejects_malformed_documents() {
    for bad in [
        json!({"member": "yes"}),
        json!({"tiles": "maybe", "failed": []}),
        json!({"window": 10, "status": "uncovered"}),
        json!({"word": "012"}),
        json!([{"i": 1, "len": 2, "z": 1}]),
        json!({"error": {"kind": "parse"}}),
        json!({"member": true, "extra": 1}),
    ] {
        assert!(!schema().is_valid(&bad), "{bad} should be rejected");
    }
}

#[test]
fn documented_examples() {
    let member = |a: &str, k: &str| json_of(&["member", "--alpha", a, "--offset", "0", "--k", k]).1;
    assert_eq!(member("2/5", "5"), json!({"member": true}));
    assert_eq!(member("1/2", "3"), json!({"member": false}));
    assert_eq!(member(GOLDEN, "1"), json!({"member": true}));

    let check = |a, b, c, d| json_of(&with("tile-check", pair(a, b, c, d))).1;
    assert_eq!(check("1/2", "0", "1/2", "1/2")["tiles"], "yes");
    assert_eq!(check("1/2", "0", "1/2", "0"), json!({"tiles": "no", "failed": ["5b"]}));
    assert_eq!(check(GOLDEN, "0", GOLDEN_CO, "0")["tiles"], "yes");

    let decompose = |a: &str, m: &str| json_of(&["decompose", "--alpha", a, "--m", m]).1;
    assert_eq!(decompose(GOLDEN, "11"), json!([{"i": 5, "z": 1}, {"i": 3, "z": 1}]));
    assert_eq!(decompose(GOLDEN, "5"), json!([{"i": 4, "z": 1}]));
    assert_eq!(decompose("2/5", "12"), json!([{"len": 5, "z": 2}, {"len": 2, "z": 1}]));
}

#[test]
fn usage_errors_are_structured_in_json_and_silent_on_stdout_in_plain() {
    let out = invoke("json", &["member", "--alpha", "1/2"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "usage");
    assert!(v["error"]["message"].as_str().unwrap().contains("--k"));
    assert!(out.stderr.contains("Usage:"));

    let out = invoke("plain", &["member", "--alpha", "1/2"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stdout.is_empty());

    let out = run(["beatty", "member", "--alpha", "1/2", "--format=plain"]);
    assert!(out.stdout.is_empty());
}

#[test]
fn help_and_version_succeed() {
    for flag in ["--help", "--version"] {
        let out = run(["beatty", flag]);
        assert_eq!(out.code, EXIT_OK);
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn svg_is_deterministic_and_identical_across_formats() {
    let args = with(
        "circle-svg",
        [pair(THREE_MINUS_E, "2/5", E_MINUS_TWO, "-2/5"), vec!["--k-max", "16"]].concat(),
    );
    let plain = invoke("plain", &args);
    assert_eq!(plain.code, EXIT_OK);
    assert_eq!(plain.stdout, invoke("plain", &args).stdout);
    let (_, json) = json_of(&args);
    assert_eq!(json["svg"].as_str().unwrap(), plain.stdout);
    for k in [2, 5, 9, 12, 16] {
        assert!(
            plain.stdout.contains(&format!(r#"class="point in-a" data-k="{k}""#)),
            "k = {k}"
        );
    }
}

fn list<T: std::str::FromStr>(s: &str) -> Vec<T>
where
    T::Err: std::fmt::Debug,
{
    s.split_whitespace().map(|t| t.parse().unwrap()).collect()
}

fn scalar(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|_| Value::String(s.to_string()))
}

/// Rebuilds the JSON document from plain output, so parity is a round trip.
fn plain_to_json(command: &str, stdout: &str) -> Value {
    let lines: Vec<&str> = stdout.lines().collect();
    let fields: Vec<(&str, &str)> = lines
        .iter()
        .filter_map(|l| l.split_once(": ").or_else(|| l.strip_suffix(':').map(|k| (k, ""))))
        .collect();
    let field = |k: &str| fields.iter().find(|(key, _)| *key == k).map(|(_, v)| *v);
    match command {
        "terms" | "enumerate" => json!({"terms": list::<i64>(field("terms").unwrap())}),
        "continuants" => json!({"q": list::<u64>(field("q").unwrap())}),
        "word" | "morphism" => json!({"word": lines[0]}),
        "tile-check" | "tile-check-z" => {
            let mut v = json!({"tiles": field("tiles").unwrap(), "failed": list::<String>(field("failed").unwrap())});
            if let Some(w) = field("witness") {
                v["witness"] = scalar(w);
            }
            if let Some(u) = field("undecided") {
                v["undecided"] = json!(list::<String>(u));
            }
            v
        }
        "tile-verify" => {
            let window = list::<i64>(field("window").unwrap());
            let mut v = json!({});
            if window[0] != 1 {
                v["start"] = json!(window[0]);
            }
            v["window"] = json!(window[1]);
            v["status"] = json!(field("status").unwrap());
            if let Some(k) = field("k") {
                v["k"] = scalar(k);
            }
            v
        }
        "cf" => {
            let mut v = json!({
                "kind": field("kind").unwrap(),
                "quotients": list::<u64>(field("quotients").unwrap()),
                "notation": lines[0],
            });
            for k in ["preperiod", "period"] {
                if let Some(x) = field(k) {
                    v[k] = scalar(x);
                }
            }
            v
        }
        "ostrowski" => json!({
            "m": scalar(field("m").unwrap()),
            "digits": list::<u64>(field("digits").unwrap()),
            "repr": lines[0],
            "valid": scalar(field("valid").unwrap()),
        }),
        "decompose" => {
            let factors: Vec<Value> = lines[0]
                .split(" * ")
                .filter(|f| !f.is_empty())
                .map(|f| {
                    let (base, z) = f.strip_prefix("C_").unwrap().split_once('^').unwrap();
                    let z: u64 = z.parse().unwrap();
                    match base.strip_prefix("{q").and_then(|b| b.strip_suffix('}')) {
                        Some(i) => json!({"i": i.parse::<u64>().unwrap(), "z": z}),
                        None => json!({"len": base.parse::<u64>().unwrap(), "z": z}),
                    }
                })
                .collect();
            Value::Array(factors)
        }
        "circle-svg" => json!({"svg": stdout}),
        _ => {
            let mut v = json!({});
            for (k, x) in &fields {
                v[*k] = scalar(x);
            }
            v
        }
    }
}

#[test]
fn plain_and_json_carry_the_same_information() {
    for (args, code) in corpus() {
        let plain = invoke("plain", &args);
        let json = invoke("json", &args);
        assert_eq!(plain.code, json.code, "{args:?}");
        let value: Value = serde_json::from_str(&json.stdout).unwrap();
        if code == EXIT_USAGE || code == EXIT_PRECISION {
            assert!(plain.stdout.is_empty());
            let kind = value["error"]["kind"].as_str().unwrap();
            if kind != "usage" {
                let message = value["error"]["message"].as_str().unwrap();
                assert_eq!(plain.stderr, format!("error: {message} [{kind}]\n"), "{args:?}");
            }
            continue;
        }
        let command = args
            .iter()
            .find(|a| !a.starts_with('-') && a.chars().all(|c| c.is_ascii_lowercase() || c == '-'))
            .unwrap();
        assert_eq!(
            plain_to_json(command, &plain.stdout),
            value,
            "{args:?}\n{}",
            plain.stdout
        );
    }
}

#[test]
fn interval_precision_flag_controls_certification() {
    let coarse = run(["beatty", "--precision", "5", "member", "--alpha", "~0.5:x", "--k", "2"]);
    assert_eq!(coarse.code, EXIT_PRECISION);
    let exact = run(["beatty", "member", "--alpha", "1/2", "--k", "2"]);
    assert_eq!(exact.code, EXIT_OK);
}
