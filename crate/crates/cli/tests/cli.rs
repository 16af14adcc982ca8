use std::path::Path;

use maxcut_cli::run_cli_with;
use maxcut_core::generate::{complete, generate, petersen, Model};
use maxcut_core::write_edge_list;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["maxcut"];
    argv.extend_from_slice(args);
    let code = run_cli_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn approx_triangle_with_thm1() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", "3 3\n0 1\n1 2\n2 0\n");
    let (code, out, _) = run(&["approx", &k3, "--algo", "thm1"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"cut_size\":2"), "{out}");
    assert!(out.contains("\"x\":1"), "{out}");
    assert!(out.contains("\"algorithm\":\"Thm1\""), "{out}");
}

#[test]
fn approx_all_algorithms() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", &write_edge_list(&petersen()));
    for algo in ["thm1", "thm2", "thm3", "auto"] {
        let (code, out, err) = run(&["approx", &p, "--algo", algo]);
        assert_eq!(code, 0, "{err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["cut_size"].as_u64().unwrap() >= 10);
        assert_eq!(v["sides"].as_array().unwrap().len(), 10);
    }
    let k6 = write(dir.path(), "k6.txt", &write_edge_list(&complete(6)));
    let (code, _, err) = run(&["approx", &k6, "--algo", "thm3"]);
    assert_eq!(code, 1);
    assert!(err.contains("use thm2"), "{err}");
    let (_, out, _) = run(&["approx", &k6, "--effort", "fast"]);
    assert!(out.contains("\"algorithm\":\"Thm1\""), "{out}");
}

#[test]
fn exact_petersen() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", &write_edge_list(&petersen()));
    let (code, out, _) = run(&["exact", &p]);
    assert_eq!(code, 0);
    assert!(out.contains("\"mc\":12"), "{out}");
}

#[test]
fn disconnected_input_is_split() {
    let dir = tempfile::tempdir().unwrap();
    // triangle, C5 and an isolated vertex
    let f = write(
        dir.path(),
        "g.txt",
        "9 8\n0 1\n1 2\n2 0\n3 4\n4 5\n5 6\n6 7\n7 3\n",
    );
    let (code, out, err) = run(&["exact", &f]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("\"mc\":6"), "{out}");
    let (code, out, _) = run(&["approx", &f, "--algo", "thm2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cut_size"], 6);
    assert_eq!(v["components"], 3);
    assert_eq!(v["guaranteed_ratio"], "1/1");
    let (code, _, err) = run(&["decompose", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("disconnected"), "{err}");
}

#[test]
fn decompose_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", &write_edge_list(&complete(4)));
    let (code, out, _) = run(&["decompose", &k4]);
    assert_eq!(code, 0);
    assert!(
        out.contains("IocTree") && out.contains("\"root_edges\""),
        "{out}"
    );
    let d = write(dir.path(), "d.json", &out);
    let (code, out, _) = run(&["validate", &k4, "--decomposition", &d]);
    assert_eq!(code, 0);
    assert!(out.contains("\"valid\":true"));

    let bad = r#"{"components":[{"kind":"Tree","vertices":[0,1,2,3]}]}"#;
    let bad = write(dir.path(), "bad.json", bad);
    let (code, out, _) = run(&["validate", &k4, "--decomposition", &bad]);
    assert_eq!(code, 1);
    assert!(out.contains("\"valid\":false"), "{out}");
}

#[test]
fn validate_generator_output() {
    let dir = tempfile::tempdir().unwrap();
    let models = [
        Model::GnmConnected { n: 30, m: 60 },
        Model::RandomSubcubic { n: 40 },
        Model::RandomMaxDeg {
            n: 40,
            max_degree: 4,
        },
        Model::RandomCactus {
            n: 30,
            odd_only: false,
        },
        Model::RandomRegular {
            n: 20,
            d: 3,
            min_girth: None,
        },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for k in 0..1000 {
        let g = generate(&models[k % models.len()], &mut rng).unwrap();
        let f = write(dir.path(), "g.txt", &write_edge_list(&g));
        let (code, _, err) = run(&["validate", &f]);
        assert_eq!(code, 0, "{err}");
    }
}

#[test]
fn input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "loop.txt", "2 1\n0 0\n");
    let (code, _, err) = run(&["approx", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2") && err.contains("self-loop"), "{err}");
    let (code, _, err) = run(&["exact", "/nonexistent/graph.txt"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    let (code, _, err) = run(&["approx", &f, "--bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("--bogus"));
    let big = write(
        dir.path(),
        "big.txt",
        &write_edge_list(&maxcut_core::generate::path(30)),
    );
    let (code, _, err) = run(&["exact", &big]);
    assert_eq!(code, 1);
    assert!(err.contains("too large"), "{err}");
}

const BENCH: &str = r#"
instances = 6
seed = 7
algorithms = ["thm1", "thm2", "thm3", "auto"]
oracle = true

[model]
model = "random_subcubic"
n = 14
"#;

fn strip_time(csv: &str) -> String {
    csv.lines()
        .map(|l| l.rsplit_once(',').unwrap().0.to_owned())
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn bench_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bench.toml", BENCH);
    let (code, first, err) = run(&["bench", "--config", &cfg]);
    assert_eq!(code, 0, "{err}");
    let (_, second, _) = run(&["bench", "--config", &cfg]);
    assert_eq!(strip_time(&first), strip_time(&second));
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(
        lines[0],
        "instance,seed,n,m,algo,cut,exact_mc,achieved_ratio,certified_ratio,time_ns"
    );
    assert_eq!(lines.len(), 1 + 6 * 4);
    assert!(lines[1..].iter().all(|l| l.split(',').nth(1) == Some("7")));

    let out_path = dir.path().join("out.csv");
    let with_output = format!("output = {:?}\n{BENCH}", out_path.to_str().unwrap());
    let cfg = write(dir.path(), "bench2.toml", &with_output);
    let (code, stdout, _) = run(&["bench", "--config", &cfg]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(out_path).unwrap();
    assert_eq!(strip_time(&written), strip_time(&first));
}

#[test]
fn bench_rejects_bad_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.toml", "instances = 1\nseed = 1\nalgorithms = [\"thm9\"]\n[model]\nmodel = \"random_subcubic\"\nn = 5\n");
    let (code, _, err) = run(&["bench", "--config", &cfg]);
    assert_eq!(code, 1);
    assert!(err.contains("thm9"), "{err}");
}
