use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    dir.join(name).to_string_lossy().into_owned()
}

/// Runs the binary and returns (exit code, stdout).
fn goldman(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_goldman")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn info_on_sample_surfaces() {
    let (code, out) = goldman(&["info", &data("torus.surface")]);
    assert_eq!(code, 0);
    assert_eq!(out, "rank 2\nchi -1\ngenus 1\nboundary 1\nC0: aBAb\n");

    let (code, out) = goldman(&["info", &data("pants.surface")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with('C')).count(), 3);
    assert!(out.contains("genus 0\n"));
}

#[test]
fn invalid_surfaces_exit_2() {
    let path = std::env::temp_dir().join(format!("goldman-duplicate-{}.surface", std::process::id()));
    std::fs::write(&path, "rank 2\norder a b a B\n").unwrap();
    let (code, _) = goldman(&["info", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 2);
    assert_eq!(goldman(&["info", &data("no-such.surface")]).0, 2);
}

#[test]
fn bracket_outputs() {
    let torus = data("torus.surface");
    assert_eq!(goldman(&["bracket", &torus, "a", "b"]), (0, "+1*(ab)\n".into()));
    assert_eq!(goldman(&["bracket", &torus, "b", "a"]), (0, "-1*(ab)\n".into()));
    assert_eq!(goldman(&["bracket", &torus, "abAB", "ab"]), (0, "0\n".into()));
    // conjugated spelling of a
    assert_eq!(goldman(&["bracket", &torus, "bbaBB", "b"]), (0, "+1*(ab)\n".into()));
    assert_eq!(goldman(&["bracket", &data("pants.surface"), "a", "b"]), (0, "0\n".into()));
    assert_eq!(goldman(&["bracket", &torus, "a", "c"]).0, 2);
    assert_eq!(goldman(&["bracket", &torus, "a"]).0, 1);
}

#[test]
fn peripheral_verdicts() {
    let (torus, pants) = (data("torus.surface"), data("pants.surface"));
    assert_eq!(goldman(&["peripheral", &torus, "aBAb"]), (0, "peripheral component 0 exponent 1\n".into()));
    assert_eq!(goldman(&["peripheral", &torus, "abAB"]), (0, "peripheral component 0 exponent -1\n".into()));
    assert_eq!(goldman(&["peripheral", &torus, "a"]), (5, "not peripheral\n".into()));
    assert_eq!(goldman(&["peripheral", &pants, "BABA"]), (0, "peripheral component 0 exponent -2\n".into()));
    assert_eq!(goldman(&["peripheral", &pants, "x"]).0, 2);
}

#[test]
fn mapcheck_exit_codes() {
    let (torus, pants) = (data("torus.surface"), data("pants.surface"));

    let (code, out) = goldman(&["mapcheck", &pants, &torus, "a->a,b->b"]);
    assert_eq!(code, 4);
    assert!(out.contains("reason: boundary-class-not-peripheral("));
    assert!(out.ends_with("witness: (a, b)\n"));

    let (code, out) = goldman(&["mapcheck", &torus, &torus, "a->a,b->ba"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("geometric: yes\norientation: +1\n"));

    assert_eq!(goldman(&["mapcheck", &torus, &torus, "a->a,b->a"]).0, 3);
    assert_eq!(goldman(&["mapcheck", &torus, &torus, "a->a"]).0, 2);
    assert_eq!(goldman(&["mapcheck", &data("annulus.surface"), &data("annulus.surface"), "a->a"]).0, 2);
}

#[test]
fn strict_mode_rejects_orientation_reversal() {
    let torus = data("torus.surface");
    let (code, out) = goldman(&["mapcheck", &torus, &torus, "a->b,b->a"]);
    assert_eq!(code, 0);
    assert_eq!(out, "geometric: yes\norientation: -1\nreason: ok\nC0 -> C'0 (exponent -1)\n");

    let (code, out) = goldman(&["mapcheck", &torus, &torus, "a->b,b->a", "--strict"]);
    assert_eq!(code, 4);
    assert!(out.contains("strict: not bracket-commuting\nwitness: (a, b)\n"));
}

#[test]
fn witness_search() {
    let (torus, pants) = (data("torus.surface"), data("pants.surface"));
    assert_eq!(goldman(&["witness", &pants, &torus, "a->a,b->b"]), (4, "witness: (a, b)\n".into()));
    assert_eq!(goldman(&["witness", &torus, &torus, "a->a,b->ba", "--maxlen", "5"]).0, 0);
    assert_eq!(goldman(&["witness", &pants, &torus, "a->a,b->b", "--maxlen", "0"]).0, 0);
}

#[test]
fn selftest_is_deterministic_and_scales() {
    let args = ["selftest", "--trials", "10", "--seed", "42"];
    let (code, first) = goldman(&args);
    assert_eq!(code, 0);
    assert!(first.starts_with("seed 42 "));
    assert_eq!(goldman(&args).1, first);

    let cases = |len: &str| {
        let (_, out) = goldman(&["selftest", "--trials", "10", "--len-max", len]);
        let last = out.lines().last().unwrap().to_string();
        last.trim_start_matches("PASS: ").trim_end_matches(" cases").parse::<usize>().unwrap()
    };
    assert!(cases("3") < cases("5"));
}

#[test]
fn default_selftest_passes() {
    let (code, out) = goldman(&["selftest"]);
    assert_eq!(code, 0, "{out}");
}
