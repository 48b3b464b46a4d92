use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = flood_cli::run(std::iter::once("flood").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn gadget() -> String {
    let source = fixture("edge.json", r#"{"n": 2, "edges": [[0, 1]]}"#);
    let (code, doc, _) = run(&["reduce", "vc-caterpillar", &source]);
    assert_eq!(code, 0);
    fixture("gadget.flood.json", &doc)
}

#[test]
fn monochrome_instance_needs_no_moves() {
    let file = fixture("mono.flood.json", r#"{"variant": "free", "k": 1, "colors": [1, 1], "edges": [[0, 1]]}"#);
    let (code, out, _) = run(&["solve", &file]);
    assert_eq!(code, 0);
    assert!(out.starts_with("opt 0\n"), "{out}");
}

#[test]
fn gadget_takes_four_moves() {
    let file = gadget();
    let (code, out, _) = run(&["solve", &file]);
    assert_eq!(code, 0);
    assert!(out.starts_with("opt 4\nengine interval\nwitness ["), "{out}");
    let (_, oracle, _) = run(&["oracle", &file]);
    assert!(oracle.starts_with("opt 4\nengine oracle\n"), "{oracle}");
}

#[test]
fn verify_accepts_the_witness_and_rejects_a_prefix() {
    let file = gadget();
    let (_, out, _) = run(&["solve", &file]);
    let witness = out.lines().find_map(|l| l.strip_prefix("witness ")).unwrap();
    let moves: Vec<serde_json::Value> = serde_json::from_str(witness).unwrap();
    let full = fixture("full.json", witness);
    let (code, out, _) = run(&["verify", &file, "--moves", &full]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid length 4"), "{out}");
    let prefix = fixture("prefix.json", &serde_json::to_string(&moves[..3]).unwrap());
    let (code, out, _) = run(&["verify", &file, "--moves", &prefix]);
    assert_eq!(code, 1);
    assert!(out.starts_with("invalid at move 3"), "{out}");
}

#[test]
fn exit_codes() {
    let file = gadget();
    let (code, _, err) = run(&["oracle", &file, "--max-states", "3"]);
    assert_eq!(code, 2, "{err}");
    let bad = fixture("bad.flood.json", r#"{"variant": "free", "k": 1, "colors": [2], "edges": []}"#);
    let (code, _, err) = run(&["solve", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("colors[0]"), "{err}");
    let (code, _, _) = run(&["solve", "--engine", "nonsense", &bad]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let (_, a, _) = run(&["gen", "split", "--n", "9", "--k", "4", "--seed", "3"]);
    let (_, b, _) = run(&["gen", "split", "--n", "9", "--k", "4", "--seed", "3"]);
    assert_eq!(a, b);
    let file = fixture("split.flood.json", &a);
    let (code, out, _) = run(&["solve", &file]);
    assert_eq!(code, 0);
    assert!(out.contains("engine split"), "{out}");
}

#[test]
fn oracle_and_interval_engines_agree() {
    for seed in 0..20 {
        let (_, doc, _) = run(&["gen", "proper-interval", "--n", "8", "--k", "3", "--seed", &seed.to_string()]);
        let file = fixture(&format!("pi-{seed}.flood.json"), &doc);
        let opt = |engine: &str| {
            let (code, out, err) = run(&["solve", &file, "--engine", engine]);
            assert_eq!(code, 0, "{err}");
            out.lines().next().unwrap().to_string()
        };
        assert_eq!(opt("oracle"), opt("interval"));
        assert_eq!(opt("oracle"), opt("proper-interval"));
    }
}

#[test]
fn fixed_variant_goes_to_the_oracle() {
    let (_, doc, _) = run(&["gen", "path", "--n", "5", "--k", "2", "--seed", "1", "--pivot", "0"]);
    let file = fixture("fixed.flood.json", &doc);
    let (code, out, _) = run(&["solve", &file]);
    assert_eq!(code, 0);
    assert!(out.contains("engine oracle"), "{out}");
    let (code, _, _) = run(&["solve", &file, "--engine", "interval"]);
    assert_eq!(code, 1);
}

#[test]
fn bench_prints_a_table() {
    let (code, out, _) = run(&["bench", "--suite", "gadget"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("instance"));
    assert_eq!(lines.len(), 3);
    assert!(lines[1].contains("oracle") && lines[2].contains("interval"));
}

#[test]
fn binary_reports_errors_on_stderr() {
    let out = Command::new(env!("CARGO_BIN_EXE_flood")).args(["solve", "/nonexistent.flood.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
