mod common;

use common::{assert_schema, salem, salem_with_env};

#[test]
fn salem_verify_verdicts_and_exit_codes() {
    let r = salem(&["salem-verify", "--poly", "1,-3,1"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["salem"], true);
    assert!(v["lambda"].as_str().unwrap().starts_with("2.6180339887"));
    assert_schema("salem_verify.json", &v);

    for bad in ["2,-3,1", "1,-3,2"] {
        let r = salem(&["salem-verify", "--poly", bad]);
        assert_eq!(r.code, 1, "{bad}");
        assert_eq!(r.json()["salem"], false);
        assert_schema("salem_verify.json", &r.json());
    }
    let r = salem(&["salem-verify", "--poly", "1,x"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("error"));
    assert_eq!(salem(&["no-such-command"]).code, 2);
}

#[test]
fn invariants_and_hilbert() {
    let r = salem(&["invariants", "--form", "-30,6,1"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["det_class"], "-5");
    assert_eq!(v["hasse_ram"], serde_json::json!(["2", "3"]));
    assert_schema("invariants.json", &v);

    let r = salem(&["invariants", "--gram", r#"[["2","3"],["3","2"]]"#]);
    assert_eq!(r.json()["det_class"], "-5");
    assert_schema("invariants.json", &r.json());
    assert_eq!(salem(&["invariants", "--form", "1,0"]).code, 2);

    let r = salem(&["hilbert", "--a", "-1", "--b", "-1"]);
    let v = r.json();
    assert_eq!(v["ram"], serde_json::json!(["inf", "2"]));
    assert_eq!(v["symbols"]["2"], -1);
    assert_schema("hilbert.json", &v);
    let r = salem(&["hilbert", "--a", "2", "--b", "3", "--place", "3"]);
    assert_eq!(r.json()["symbols"]["3"], -1);
    assert_eq!(salem(&["hilbert", "--a", "0", "--b", "3"]).code, 2);
    assert_eq!(salem(&["hilbert", "--a", "2", "--b", "3", "--place", "4"]).code, 2);
}

#[test]
fn splitting_output() {
    let r = salem(&["splitting", "--poly", "1,-3,1", "--n", "2", "--primes", "3,5,11", "--candidates", "4"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["candidates"], serde_json::json!([3, 7, 13, 17]));
    assert_eq!(v["profiles"][0]["in_sigma_ns"], true);
    assert_eq!(v["profiles"][1]["critical"], true);
    assert_eq!(v["profiles"][2]["in_sigma_ns"], false);
    assert_schema("splitting.json", &v);
}

#[test]
fn realize_and_family() {
    let r = salem(&["realize", "--poly", "1,-3,1", "--n", "2", "--a-set", "2,3"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["form_diag"], serde_json::json!(["-30", "6", "1"]));
    assert_eq!(v["case_tag"], "n2");
    assert_schema("realize.json", &v);
    assert_schema("certificate.json", &v);

    let r = salem(&["realize", "--poly", "1,-3,1", "--n", "2", "--a-set", "11,13"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["failed_check"], "a_constraint");
    assert_schema("realize.json", &r.json());

    let r = salem(&["family", "--poly", "1,-3,1", "--n", "2", "--count", "3"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["pairwise_incommensurable"], true);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 3);
    assert_schema("family.json", &v);

    assert_eq!(salem(&["family", "--poly", "1,-3,2", "--n", "2"]).code, 2);
    assert_eq!(salem(&["family", "--poly", "1,-1,-1,-1,1", "--n", "2"]).code, 2);
}

#[test]
fn exhausted_search_exits_3() {
    let r = salem_with_env(
        &["family", "--poly", "1,-1,-1,-1,1", "--n", "3", "--count", "2"],
        &[("SALEM_SEARCH_CEILING", "50")],
    );
    assert_eq!(r.code, 3, "{}", r.stderr);
}

#[test]
fn exhibit_commensurable_integralize() {
    let r = salem(&["exhibit", "--poly", "1,-3,1", "--n", "2", "--b", "1", "--b", "3", "--b", "7"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
    assert!(v["classes"].as_array().unwrap().len() >= 2);
    assert_schema("exhibit.json", &v);

    let r = salem(&["exhibit", "--poly", "1,-3,1", "--n", "2", "--form", "-30,6,1"]);
    let w = &r.json()["witnesses"][0];
    assert_eq!(w["ell"], "0.962423650119");
    assert_schema("witness.json", w);

    let r = salem(&["commensurable", "--n", "2", "--form", "-30,6,1", "--form2", "-70,14,1"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["commensurable"], false);
    assert_schema("commensurable.json", &r.json());
    let r = salem(&["commensurable", "--n", "2", "--form", "-30,6,1", "--form2", "-30,6,1"]);
    assert_eq!(r.code, 0);
    assert_eq!(salem(&["commensurable", "--n", "2", "--form", "1,1,1", "--form2", "-30,6,1"]).code, 2);

    let r = salem(&["integralize", "--matrix", r#"[["0","-2"],["1/2","3"]]"#, "--gram", r#"[["2","6"],["6","8"]]"#]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["equivalent"], true);
    assert_schema("integralize.json", &v);
    let r = salem(&["integralize", "--matrix", r#"[["2","0"],["0","1"]]"#, "--form", "1,1"]);
    assert_eq!(r.code, 2);
}

#[test]
fn output_is_identical_across_thread_counts() {
    let args = ["family", "--poly", "1,-1,-1,-1,1", "--n", "3", "--count", "3"];
    let one = salem_with_env(&args, &[("RAYON_NUM_THREADS", "1")]);
    let many = salem_with_env(&args, &[("RAYON_NUM_THREADS", "8")]);
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(salem(&args).stdout, one.stdout);
}
