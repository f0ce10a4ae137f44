use std::path::Path;
use std::process::{Command, Output};

fn youngs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_youngs")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Runs and returns stdout, asserting the expected exit code.
fn run(args: &[&str], code: i32) -> String {
    let out = youngs(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "youngs {}\nstdout:\n{}\nstderr:\n{}",
        args.join(" "),
        stdout(&out),
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).display().to_string();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &path]);
    run(&all, 0);
    path
}

#[test]
fn gen_k4_projective_to_stdout() {
    let out = youngs(&["gen", "k4-projective"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "vertices: 4\ncells: [[0,1,2,3],[0,1,3,2],[0,2,1,3]]\n");
    let report = String::from_utf8(out.stderr).unwrap();
    assert!(report.contains("cells: 3\n"));
}

#[test]
fn gen_torus_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.cx").display().to_string();
    let text = run(&["gen", "torus-grid", "--m", "3", "--n", "3", "--out", &path], 0);
    for line in ["vertices: 9", "edges: 18", "cells: 9", "euler: 0"] {
        assert!(text.contains(line), "{text}");
    }
}

#[test]
fn gen_is_deterministic_and_reparses_identically() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.cx", &["klein-grid", "--m", "3", "--n", "4"]);
    let b = gen(dir.path(), "b.cx", &["klein-grid", "--m", "3", "--n", "4"]);
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let x = youngs_core::format::parse_complex(std::str::from_utf8(&ta).unwrap()).unwrap();
    assert_eq!(youngs_core::format::write_complex(&x).as_bytes(), &ta[..]);
}

#[test]
fn gen_missing_parameter_fails() {
    run(&["gen", "torus-grid", "--m", "3"], 1);
}

#[test]
fn cubical_rp_homology_is_z2() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "rp.cx", &["cubical-rp", "--d", "2"]);
    run(&["validate", &path], 0);
    let text = run(&["homology", &path], 0);
    assert!(text.contains("h1.z: Z/2\n"), "{text}");
    assert!(text.contains("h1.z2: Z2\n"), "{text}");
}

#[test]
fn homology_exports_boundaries() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "k4.cx", &["k4-projective"]);
    let prefix = dir.path().join("k4").display().to_string();
    run(&["homology", &path, "--ring", "z", "--export", &prefix], 0);
    let d2 = std::fs::read_to_string(format!("{prefix}.d2.txt")).unwrap();
    assert!(!d2.is_empty());
    assert!(Path::new(&format!("{prefix}.d1.txt")).exists());
}

#[test]
fn validate_rejects_odd_cell() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cx");
    std::fs::write(&path, "vertices: 3\ncells: [[0,1,2]]\n").unwrap();
    let out = youngs(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("odd cell length 3"));
}

#[test]
fn verify_k4_projective_all_checks() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "k4.cx", &["k4-projective"]);
    let text = run(&["verify", &path, "--format", "keyvalue"], 0);
    for line in [
        "h1.z=Z/2",
        "youngs.chi=4",
        "bound=>= 4",
        "rainbow.colorings=1",
        "rainbow.min_rainbow_faces=3",
        "check.homology=pass",
        "check.torsion=pass",
        "check.youngs=pass",
        "check.rainbow=pass",
        "check.bound=pass",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line}\n{text}");
    }
}

#[test]
fn verify_sphere_is_bipartite() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "s.cx", &["sphere-grid", "--m", "3", "--n", "2"]);
    let text = run(&["verify", &path], 0);
    assert!(text.contains("youngs.chi: 2\n"));
    assert!(text.contains("bound: inapplicable\n"));
    assert!(text.contains("check torsion: pass (no odd walk)"));
}

#[test]
fn torsion_with_explicit_walk() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "k4.cx", &["k4-projective"]);
    let text = run(&["torsion", &path, "--walk", "0,1,2,0"], 0);
    assert!(text.contains("torsion: yes\n"));
    assert!(text.contains("z2_nonzero: yes\n"));
    run(&["torsion", &path, "--walk", "0,1,2"], 1);
}

#[test]
fn rainbow_with_coloring_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "k4.cx", &["k4-projective"]);
    let coloring = dir.path().join("c.txt");
    std::fs::write(&coloring, "colors: 4\nassignment: [3,2,1,0]\n").unwrap();
    let text = run(&["rainbow", &path, "--coloring", coloring.to_str().unwrap()], 0);
    assert!(text.contains("rainbow.count: 3\n"), "{text}");
}

#[test]
fn chi_writes_certificates_that_replay() {
    let dir = tempfile::tempdir().unwrap();
    let refutation = dir.path().join("r.txt").display().to_string();
    let coloring = dir.path().join("c.txt").display().to_string();
    let text = run(
        &["chi", "--family", "circular", "7", "3", "--refutation-out", &refutation, "--coloring-out", &coloring],
        0,
    );
    assert!(text.contains("chi: 3\n"));
    let text = run(&["replay", "--family", "circular", "7", "3", "--refutation", &refutation], 0);
    assert!(text.contains("refutation: valid"));
    // the same trace does not refute 2-colorings of a different graph
    run(&["replay", "--family", "cycle", "6", "--refutation", &refutation], 1);
    assert!(std::fs::read_to_string(coloring).unwrap().starts_with("colors: 3\n"));
}

#[test]
fn chic_cycle_seven_is_exact() {
    let text = run(&["chic", "--family", "cycle", "7", "--max-den", "8"], 0);
    assert!(text.contains("chi_c: 7/3\n"));
    assert!(text.contains("status: exact\n"));
}

#[test]
fn chic_small_denominator_brackets() {
    let text = run(&["chic", "--family", "cycle", "7", "--max-den", "2"], 0);
    assert!(text.contains("status: bracket\n"), "{text}");
}

#[test]
fn hom_between_families() {
    let text = run(&["hom", "--source-family", "cycle", "5", "--target-family", "circular", "5", "2"], 0);
    assert!(text.contains("homomorphism: found\n"));
    let text = run(&["hom", "--source-family", "cycle", "5", "--target-family", "complete", "2"], 0);
    assert!(text.contains("homomorphism: none\n"));
}

#[test]
fn pi1k_circular_five_two() {
    let text = run(&["pi1k", "--family", "circular", "5", "2", "--k", "2..6", "--expect", "circular", "5", "2"], 0);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("pi1k.")).collect();
    assert_eq!(rows, ["pi1k.k2: Z", "pi1k.k3: Z", "pi1k.k4: Z", "pi1k.k5: Z/2", "pi1k.k6: Z/2"]);
}

#[test]
fn pi1k_mismatch_exits_two() {
    let out = youngs(&["pi1k", "--family", "circular", "7", "3", "--k", "6..7", "--expect", "circular", "5", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("check expect: VIOLATION"));
}

#[test]
fn pi1k_tree_is_trivial() {
    let text = run(&["pi1k", "--family", "path", "4", "--k", "2..3"], 0);
    assert!(text.contains("pi1k.k2: 0\n") && text.contains("pi1k.k3: 0\n"), "{text}");
}

#[test]
fn lift_pentagram_winds_once() {
    let text = run(&["lift", "--n", "5", "--m", "2", "--walk", "0,2,4,1,3,0"], 0);
    assert!(text.contains("winding: -1\n"));
    let text = run(&["lift", "--n", "5", "--m", "2", "--walk", "0,2,4,1,3,0", "--start", "-5"], 0);
    assert!(text.contains("start: (-5, -)\n"), "{text}");
}

#[test]
fn reduce_square_gives_short_replayable_script() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("s.txt").display().to_string();
    let text =
        run(&["reduce", "--family", "cycle", "4", "--walk", "0,1,2,3,0", "--k", "2", "--script-out", &script], 0);
    assert!(text.contains("k_homotopic: yes\n"));
    let moves: usize = text.lines().find_map(|l| l.strip_prefix("moves: ")).unwrap().parse().unwrap();
    assert!(moves <= 4);
    run(&["replay", "--family", "cycle", "4", "--script", &script], 0);
}

#[test]
fn reduce_pentagon_reversal_with_cover() {
    let args = ["reduce", "--family", "circular", "5", "2", "--walk", "0,2,4,1,3,0", "--target", "0,3,1,4,2,0"];
    let text = run(&[&args[..], &["--k", "2", "--cover", "5", "2"]].concat(), 0);
    assert!(text.contains("k_homotopic: no\n"));
    assert!(text.contains("invariant: lifts end at"));
}

#[test]
fn covering_order_of_five_two() {
    assert!(run(&["covering", "--n", "5", "--m", "2", "--k", "4"], 0).contains("k_covering: yes\n"));
    assert!(run(&["covering", "--n", "5", "--m", "2", "--k", "5"], 0).contains("k_covering: no\n"));
}

#[test]
fn nbhd_of_pentagon() {
    let text = run(&["nbhd", "--family", "cycle", "5", "--j", "1..3"], 0);
    assert!(text.contains("nbhd.j1.h1: Z\n") && text.contains("nbhd.j3.h1: 0\n"));
}

#[test]
fn graph_file_input_and_digest() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "vertices: 3\nedges: [[0,1],[1,2],[0,2]]\n").unwrap();
    let text = run(&["chi", "--graph", path.to_str().unwrap()], 0);
    assert!(text.contains("chi: 3\n"));
    let digest = format!("{:x}", <sha2::Sha256 as sha2::Digest>::digest(std::fs::read(&path).unwrap()));
    assert!(text.contains(&format!("sha256 {digest}")));
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let strip = |s: String| s.lines().filter(|l| !l.starts_with("elapsed")).collect::<Vec<_>>().join("\n");
    let args = ["chi", "--family", "circular", "8", "3", "--format", "keyvalue"];
    let a = strip(run(&args, 0));
    let b = strip(run(&[&args[..], &["--jobs", "3"]].concat(), 0));
    assert_eq!(a.replace(" --jobs 3", ""), b.replace(" --jobs 3", ""));
}

#[test]
fn verify_never_reports_a_violation_on_generated_families() {
    let dir = tempfile::tempdir().unwrap();
    let families: [&[&str]; 9] = [
        &["k4-projective"],
        &["sphere-grid", "--m", "3", "--n", "3"],
        &["torus-grid", "--m", "3", "--n", "4"],
        &["klein-grid", "--m", "3", "--n", "4"],
        &["projective-grid", "--m", "2", "--n", "5"],
        &["projective-grid", "--m", "3", "--n", "3"],
        &["cube-boundary", "--d", "2"],
        &["cubical-rp", "--d", "2"],
        &["cubical-rp", "--d", "3"],
    ];
    for (i, args) in families.iter().enumerate() {
        let path = gen(dir.path(), &format!("{i}.cx"), args);
        let text = run(&["verify", &path, "--format", "keyvalue"], 0);
        assert!(!text.contains("=violation"), "{text}");
    }
}
