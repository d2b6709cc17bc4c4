use babyverma::report::{contains_float, run_suite, run_tensor_filtration, Options};
use serde_json::Value;

fn normalized(mut v: Value) -> Value {
    v["elapsed_ms"] = Value::from(0);
    v
}

fn golden(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}.json", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn example_options() -> Options {
    Options {
        alg: Some("sl2".into()),
        p: Some(5),
        chi: Some("f=1".into()),
        chi2: Some("f=-1".into()),
        lambda: Some("2".into()),
        mu: Some("3".into()),
        ..Options::default()
    }
}

#[test]
fn tensor_report_matches_golden() {
    let r = run_tensor_filtration(&example_options()).unwrap();
    assert_eq!(normalized(r.to_value()), golden("tensor-filt-sl2"));
}

#[test]
fn pyramid_report_matches_golden() {
    let r = run_suite("pyramid-1224", &Options::default()).unwrap();
    assert_eq!(normalized(r.to_value()), golden("pyramid-1224"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for r in [
        run_tensor_filtration(&example_options()).unwrap(),
        run_suite("mindim-12-of-3", &Options::default()).unwrap(),
        run_suite("thm317-N2", &Options::default()).unwrap(),
    ] {
        let text = r.to_json().unwrap();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert!(!contains_float(&parsed));
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap(), text);
        assert_eq!(parsed["report_version"], 1);
    }
}

#[test]
fn rational_weights_are_reduced() {
    // λ = 1/2 is 3 mod 5, so the first layer has weight 3 + 3 = 1.
    let opts = Options {
        lambda: Some("1/2".into()),
        ..example_options()
    };
    let r = run_tensor_filtration(&opts).unwrap();
    assert!(r.passed());
    assert_eq!(r.results["quotient_weights"][0][0], 1);
}
