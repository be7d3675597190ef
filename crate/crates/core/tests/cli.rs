//! End-to-end checks of the command-line surface: exit codes, selector
//! handling, and the machine-format round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbifan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn validate_accepts_all_fixtures() {
    for name in [
        "ex_type_a_to_b.toml",
        "ex_type_2a_to_b.toml",
        "ex_doubling_colors.toml",
        "ex_l.toml",
        "ex_new_sph_root_2.toml",
        "ex_clfan.toml",
    ] {
        let out = run(&["validate", fixture(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
        assert!(stdout(&out).contains("paper-level checks passed"));
    }
}

#[test]
fn validate_reports_completeness() {
    let out = run(&[
        "validate",
        fixture("ex_clfan.toml").to_str().unwrap(),
        "--check-complete",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("covers the valuation cone"));

    let out = run(&[
        "validate",
        fixture("ex_l.toml").to_str().unwrap(),
        "--check-complete",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("does not cover"));
}

#[test]
fn validate_cross_validate_flag() {
    let out = run(&[
        "validate",
        fixture("ex_clfan.toml").to_str().unwrap(),
        "--cross-validate",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("all orbit checks passed"));
}

#[test]
fn validate_rejects_dependent_sigma_with_exit_1() {
    let dir = std::env::temp_dir().join("orbifan-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dependent_sigma.toml");
    let text = std::fs::read_to_string(fixture("ex_clfan.toml")).unwrap();
    // make sigma dependent: duplicate the first spherical root
    let text = text.replace(
        "sigma = [[1, 0, 0], [0, 1, 0]]",
        "sigma = [[1, 0, 0], [2, 0, 0]]",
    );
    std::fs::write(&path, text).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(
        err.contains("primitive") || err.contains("dependent") || err.contains("twice"),
        "got: {err}"
    );
}

#[test]
fn parse_errors_exit_2() {
    let dir = std::env::temp_dir().join("orbifan-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.toml");
    std::fs::write(&path, "root_system = [not toml").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["validate", "/nonexistent/file.toml"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_on_f4_fixture_prints_reference_values() {
    let out = run(&["orbit", fixture("ex_l.toml").to_str().unwrap(), "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("beta_1 + beta_2 + beta_3"), "{text}");
    assert!(text.contains("S^p_0 = {beta_2}"), "{text}");
    assert!(text.contains("not applicable"), "{text}");
}

#[test]
fn orbit_with_inline_selector_and_cross_validation() {
    let out = run(&[
        "orbit",
        fixture("ex_clfan.toml").to_str().unwrap(),
        "gens=(0,0,1);colors=D_b(delta)",
        "--cross-validate",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("S^p_0 = {delta}"), "{text}");
    assert!(text.contains("D'@X0 -> D'"), "{text}");
    assert!(text.contains("all orbit checks passed"), "{text}");
}

#[test]
fn orbit_selector_errors() {
    let out = run(&["orbit", fixture("ex_clfan.toml").to_str().unwrap(), "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of range"));

    let out = run(&[
        "orbit",
        fixture("ex_clfan.toml").to_str().unwrap(),
        "gens=(1,1,1);colors=",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no fan member matches"));
}

#[test]
fn star_and_closure_fan_counts() {
    let out = run(&[
        "star",
        fixture("ex_clfan.toml").to_str().unwrap(),
        "gens=(0,0,1);colors=D_b(delta)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("4 members"));

    let out = run(&[
        "closure-fan",
        fixture("ex_clfan.toml").to_str().unwrap(),
        "gens=(-1,-1,0);colors=",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("9 cones"), "{}", stdout(&out));
}

#[test]
fn intersect_outputs() {
    let out = run(&[
        "intersect",
        fixture("ex_new_sph_root_2.toml").to_str().unwrap(),
        "0",
        "D''",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(
        stdout(&out).contains("closure(D'') ∩ X0 = D''@X0 + D_b(beta_1)"),
        "{}",
        stdout(&out)
    );

    // a color of F: the orbit lies inside its closure
    let out = run(&[
        "intersect",
        fixture("ex_l.toml").to_str().unwrap(),
        "0",
        "D'''",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("X0 ⊆ closure(D''')"));

    let out = run(&[
        "intersect",
        fixture("ex_l.toml").to_str().unwrap(),
        "0",
        "missing",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn poset_output() {
    let out = run(&["poset", fixture("ex_clfan.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("12 orbits"), "{text}");
}

#[test]
fn colors_listing() {
    let out = run(&["colors", fixture("ex_l.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["D'", "D''", "D'''", "D_b(beta_2)", "D_b(beta_3)", "D_b(beta_4)"] {
        assert!(text.contains(name), "missing {name} in {text}");
    }
}

#[test]
fn machine_validate_round_trips() {
    for name in [
        "ex_type_a_to_b.toml",
        "ex_type_2a_to_b.toml",
        "ex_doubling_colors.toml",
        "ex_l.toml",
        "ex_new_sph_root_2.toml",
        "ex_clfan.toml",
    ] {
        let out = run(&[
            "validate",
            fixture(name).to_str().unwrap(),
            "--format",
            "machine",
        ]);
        assert_eq!(out.status.code(), Some(0));
        let emitted = stdout(&out);

        let dir = std::env::temp_dir().join("orbifan-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("roundtrip_{name}"));
        std::fs::write(&path, &emitted).unwrap();
        let out2 = run(&["validate", path.to_str().unwrap(), "--format", "machine"]);
        assert_eq!(out2.status.code(), Some(0), "{}", stderr(&out2));
        assert_eq!(stdout(&out2), emitted, "round trip of {name}");
    }
}

#[test]
fn machine_orbit_output_is_toml() {
    let out = run(&[
        "orbit",
        fixture("ex_new_sph_root_2.toml").to_str().unwrap(),
        "0",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parsed: toml::Table = text.parse().expect("machine output is valid TOML");
    assert!(parsed.contains_key("m0_basis"));
    assert!(parsed.contains_key("sigma0"));
    assert_eq!(
        parsed["refinement"].as_str(),
        Some("not_applicable"),
        "{text}"
    );
    assert!(parsed.contains_key("psi"));
}

#[test]
fn machine_intersect_output_is_toml() {
    let out = run(&[
        "intersect",
        fixture("ex_type_2a_to_b.toml").to_str().unwrap(),
        "0",
        "D_2a(alpha)",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: toml::Table = stdout(&out).parse().expect("valid TOML");
    assert_eq!(parsed["cross_check"].as_bool(), Some(true));
    let terms = parsed["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["multiplicity"].as_integer(), Some(2));
}
