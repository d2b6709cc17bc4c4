use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_babyverma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn tensor_filtration_example() {
    let out = run(&["tensor-filt", "--alg", "sl2", "--p", "5", "--chi", "f=1", "--chi2", "f=-1", "--lambda", "2", "--mu", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report_version"], 1);
    assert_eq!(v["results"]["step_count"], 5);
    let order: Vec<u64> = v["results"]["quotient_weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w[0].as_u64().unwrap())
        .collect();
    assert_eq!(order, [0, 3, 1, 4, 2]);
}

#[test]
fn sl3_trivial_characters_give_27_steps() {
    let out = run(&["tensor-filt", "--alg", "sl3", "--p", "3", "--chi", "zero", "--chi2", "zero", "--lambda", "0", "--mu", "0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["step_count"], 27);
}

#[test]
fn usage_errors_exit_with_two() {
    let missing = run(&["tensor-filt", "--alg", "sl2", "--p", "5", "--mu", "3"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("--lambda"));
    let bad_prime = run(&["tensor-filt", "--alg", "sl2", "--p", "4", "--lambda", "1", "--mu", "1"]);
    assert_eq!(bad_prime.status.code(), Some(2));
    let unknown = run(&["suite", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));
    let bad_chi = run(&["tensor-filt", "--alg", "sl2", "--p", "5", "--chi", "h=1", "--lambda", "1", "--mu", "1"]);
    assert_eq!(bad_chi.status.code(), Some(2));
}

#[test]
fn characters_on_raising_operators_are_rejected() {
    let out = run(&["tensor-filt", "--alg", "gl2", "--p", "3", "--chi", "e12=1", "--lambda", "0", "--mu", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_suite_passes() {
    for name in ["example-2-3", "pyramid-1224", "mindim-12-of-3", "thm317-N2"] {
        let out = run(&["suite", name, "--json"]);
        assert_eq!(out.status.code(), Some(0), "suite {name}");
        let v = json(&out);
        assert!(v["certifications"].as_object().unwrap().values().all(|b| b == true));
    }
}

#[test]
fn example_suite_flags_the_listed_factors() {
    let v = json(&run(&["suite", "example-2-3", "--json", "--seed", "11"]));
    let cmp = &v["results"]["listed_factor_comparison"];
    assert_eq!(cmp["listed_dim_sum"], 21);
    assert_eq!(cmp["module_dim"], 25);
    assert_eq!(cmp["labels_missing_from_list"], serde_json::json!([3]));
    assert_eq!(v["parameters"]["seed"], 11);
}

#[test]
fn summation_suite_accepts_one_prime_and_partition() {
    let out = run(&["suite", "thm317-N2", "--p", "5", "--partition", "1,1", "--depth", "20", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"]["label_count"], 5);
    assert_eq!(v["results"]["primality_and_variety_statements"], "not checked");
}

#[test]
fn text_output_lists_certifications() {
    let out = run(&["suite", "pyramid-1224"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[pass] orbit_dim_is_54"));
    assert!(text.contains("PASS: 15/15"));
}
