//! Exit codes and payloads of every command.

use std::path::PathBuf;

use k3irreg_cli::{run_from, CommandOutcome, EXIT_EXHAUSTED, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> CommandOutcome {
    run_from(std::iter::once("k3irreg").chain(args.iter().copied()))
}

fn json(out: &CommandOutcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn verify_table1() {
    let out = run(&["verify", &fixture("table1_9reg_24.adj")]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out
        .stdout
        .starts_with("9-regular, 24 vertices, K3-irregular"));
    let out = run(&["verify", "--json", &fixture("table1_9reg_24.adj")]);
    let v = json(&out);
    for key in [
        "order",
        "regularity",
        "k3_degrees",
        "distinct",
        "duplicate_values",
        "pair_count",
        "bound_audit",
        "partition_audit",
        "triangle_count",
        "edge_count",
        "triangles_exceed_edges",
        "complement_check",
        "certified",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["regularity"], 9);
    assert_eq!(v["triangle_count"], 116);
}

#[test]
fn verify_near_miss_is_negative() {
    let out = run(&["verify", &fixture("near_miss_8reg_19.adj")]);
    assert_eq!(out.exit_code, EXIT_NEGATIVE);
    assert!(out.stdout.contains("{7, 15}"));
    let v = json(&run(&[
        "verify",
        "--json",
        &fixture("near_miss_8reg_19.adj"),
    ]));
    let dups: Vec<u64> = v["duplicate_values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["value"].as_u64().unwrap())
        .collect();
    assert_eq!(dups, vec![7, 15]);
    assert_eq!(v["pair_count"], 2);
}

#[test]
fn verify_exit_codes_on_corpus() {
    assert_eq!(
        run(&["verify", &fixture("table1_switched_9reg_24.adj")]).exit_code,
        EXIT_OK
    );
    // distinct but not regular
    assert_eq!(
        run(&["verify", &fixture("smallest_k3_irregular_7.adj")]).exit_code,
        EXIT_NEGATIVE
    );
}

#[test]
fn verify_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("table1_9reg_24.adj")).unwrap();
    let truncated = dir.path().join("cut.adj");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    let out = run(&["verify", truncated.to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_INPUT);
    assert!(out.stderr.contains("error"));
    assert_eq!(
        run(&["verify", "/nonexistent/file.adj"]).exit_code,
        EXIT_INPUT
    );
    let junk = dir.path().join("junk.g6");
    std::fs::write(&junk, "DQ\u{7f}\n").unwrap();
    assert_eq!(
        run(&["verify", junk.to_str().unwrap()]).exit_code,
        EXIT_INPUT
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).exit_code, EXIT_INPUT);
    assert_eq!(run(&["bounds"]).exit_code, EXIT_INPUT);
    assert_eq!(run(&["frobnicate"]).exit_code, EXIT_INPUT);
    assert_eq!(run(&["--help"]).exit_code, EXIT_OK);
}

#[test]
fn bounds_reports() {
    let v = json(&run(&["bounds", "--r", "6", "--json"]));
    let c = v["candidates"].as_array().unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(
        (
            c[0]["n"].as_u64(),
            c[0]["k3_lo"].as_u64(),
            c[0]["k3_hi"].as_u64()
        ),
        (Some(13), Some(0), Some(12))
    );

    let v = json(&run(&["bounds", "--r", "7", "--json"]));
    let ns: Vec<u64> = v["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["n"].as_u64().unwrap())
        .collect();
    assert_eq!(ns, vec![14, 16, 18]);

    let v = json(&run(&["bounds", "--r", "8", "--json"]));
    let c = v["candidates"].as_array().unwrap();
    let ns: Vec<u64> = c.iter().map(|c| c["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, (17..=22).collect::<Vec<_>>());
    assert!(c.iter().all(|c| c["k3_hi"] == 22));
    assert_eq!(v["known"]["status"], "open");

    let out = run(&["bounds", "--r", "9", "--n", "24"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.stdout.contains("partition around a vertex"));
    let v = json(&run(&["bounds", "--r", "9", "--n", "24", "--json"]));
    assert_eq!(v["partition"].as_array().unwrap().len(), 32);
    assert_eq!(run(&["bounds", "--r", "0"]).exit_code, EXIT_INPUT);
}

#[test]
fn search_rejections() {
    let out = run(&["search", "--r", "7", "--n", "16", "--max-gens", "5"]);
    assert_eq!(out.exit_code, EXIT_INPUT);
    assert!(out.stderr.contains("known result"));
    let out = run(&["search", "--r", "8", "--n", "23", "--max-gens", "5"]);
    assert_eq!(out.exit_code, EXIT_INPUT);
    assert!(out.stderr.contains("17..=22"));
    assert_eq!(
        run(&["search", "--n", "24", "--max-gens", "5"]).exit_code,
        EXIT_INPUT
    );
    assert_eq!(
        run(&["search", "--r", "9", "--n", "24"]).exit_code,
        EXIT_INPUT
    );
    assert_eq!(
        run(&[
            "search",
            "--r",
            "9",
            "--n",
            "24",
            "--max-gens",
            "1",
            "--mutations",
            "teleport"
        ])
        .exit_code,
        EXIT_INPUT
    );
}

#[test]
fn search_is_deterministic_and_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let trace = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let args = |t: &str, threads: &str| {
        vec![
            "search",
            "--r",
            "9",
            "--n",
            "24",
            "--mutations",
            "switch",
            "--seed",
            "17",
            "--pop",
            "20",
            "--offspring",
            "10",
            "--max-gens",
            "15",
            "--threads",
            threads,
            "--trace",
            t,
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>()
    };
    let (t1, t2) = (trace("a.csv"), trace("b.csv"));
    let a = run_from(std::iter::once("k3irreg".to_string()).chain(args(&t1, "1")));
    let b = run_from(std::iter::once("k3irreg".to_string()).chain(args(&t2, "3")));
    assert_eq!(a.exit_code, EXIT_EXHAUSTED);
    assert_eq!(b.exit_code, EXIT_EXHAUSTED);
    let ta = std::fs::read_to_string(&t1).unwrap();
    assert_eq!(ta, std::fs::read_to_string(&t2).unwrap());
    assert_eq!(ta.lines().count(), 1 + 16);
    assert!(ta.starts_with("generation,best_fitness"));
}

#[test]
fn search_json_checkpoint_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"r": 10, "n": 26, "population_size": 10, "offspring_factor": 5, "max_generations": 4, "seed": 2}"#,
    )
    .unwrap();
    let out = run(&[
        "search",
        "--config",
        cfg.to_str().unwrap(),
        "--json",
        "--checkpoint",
        cp.to_str().unwrap(),
        "--checkpoint-every",
        "2",
    ]);
    assert_eq!(out.exit_code, EXIT_EXHAUSTED);
    let v = json(&out);
    assert_eq!(v["result"]["outcome"], "budget_exhausted");
    assert_eq!(v["result"]["trace"].as_array().unwrap().len(), 5);
    assert!(v["certificate"]["order"] == 26);
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&cp).unwrap()).unwrap();
    assert_eq!(saved["generation"], 4);

    let resumed = run(&[
        "search",
        "--config",
        cfg.to_str().unwrap(),
        "--max-gens",
        "6",
        "--json",
        "--resume",
        cp.to_str().unwrap(),
    ]);
    let full = run(&[
        "search",
        "--config",
        cfg.to_str().unwrap(),
        "--max-gens",
        "6",
        "--json",
    ]);
    let (r, f) = (json(&resumed), json(&full));
    assert_eq!(r["result"]["trace"], f["result"]["trace"]);
    assert_eq!(r["result"]["best"], f["result"]["best"]);
}

#[test]
fn convert_and_complement() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("t.g6");
    let adj = dir.path().join("t.adj");
    let src = fixture("table1_9reg_24.adj");
    assert_eq!(
        run(&["convert", &src, g6.to_str().unwrap()]).exit_code,
        EXIT_OK
    );
    assert_eq!(
        run(&["convert", g6.to_str().unwrap(), adj.to_str().unwrap()]).exit_code,
        EXIT_OK
    );
    assert_eq!(run(&["verify", adj.to_str().unwrap()]).exit_code, EXIT_OK);
    let to_stdout = run(&["convert", &src]);
    assert_eq!(
        to_stdout.stdout.trim(),
        std::fs::read_to_string(&g6).unwrap().trim()
    );

    let c1 = dir.path().join("c1.g6");
    let c2 = dir.path().join("c2.g6");
    assert_eq!(
        run(&["complement", &src, c1.to_str().unwrap()]).exit_code,
        EXIT_OK
    );
    let out = run(&["verify", c1.to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out
        .stdout
        .starts_with("14-regular, 24 vertices, K3-irregular"));
    assert_eq!(
        run(&["complement", c1.to_str().unwrap(), c2.to_str().unwrap()]).exit_code,
        EXIT_OK
    );
    assert_eq!(std::fs::read(&c2).unwrap(), std::fs::read(&g6).unwrap());
    assert_eq!(run(&["convert", "/nonexistent.adj"]).exit_code, EXIT_INPUT);
}

#[test]
fn verify_multi_graph6_file() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("w.g6");
    let one = run(&["convert", &fixture("table1_9reg_24.adj")]).stdout;
    let two = run(&["convert", &fixture("near_miss_8reg_19.adj")]).stdout;
    std::fs::write(&g6, format!("{one}{one}")).unwrap();
    assert_eq!(run(&["verify", g6.to_str().unwrap()]).exit_code, EXIT_OK);
    std::fs::write(&g6, format!("{one}{two}")).unwrap();
    let out = run(&["verify", "--json", g6.to_str().unwrap()]);
    assert_eq!(out.exit_code, EXIT_NEGATIVE);
    assert_eq!(json(&out).as_array().unwrap().len(), 2);
}
