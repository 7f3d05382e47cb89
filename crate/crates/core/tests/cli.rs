use std::process::{Command, Output};

fn pgaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgaut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn build_formats() {
    let o = pgaut(&["build", "6", "--format", "edgelist"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 13);
    let o = pgaut(&["build", "1", "--format", "edgelist"]);
    assert_eq!(stdout(&o), "");
    let o = pgaut(&["build", "4", "--format", "dimacs"]);
    assert_eq!(stdout(&o).lines().next(), Some("p edge 4 6"));
    let o = pgaut(&["build", "2", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"n\":2,\"orders\":[1,2],\"edges\":[[0,1]]}\n");
}

#[test]
fn build_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let o = pgaut(&[
        "build",
        "3",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches("--").count(), 3);
}

#[test]
fn build_usage_errors() {
    assert_eq!(pgaut(&["build", "0"]).status.code(), Some(2));
    assert_eq!(pgaut(&["build", "x"]).status.code(), Some(2));
    assert_eq!(
        pgaut(&["build", "6", "--format", "png"]).status.code(),
        Some(2)
    );
    assert_eq!(pgaut(&["build", "1000000"]).status.code(), Some(3));
}

#[test]
fn aut_methods() {
    let o = pgaut(&["aut", "6", "--method", "formula"]);
    let v = json(&o);
    assert_eq!(v["order"], "12");
    assert_eq!(
        v["decomposition"]["factors"],
        serde_json::json!([[2, 1], [3, 2]])
    );
    assert_eq!(v["decomposition"]["top_factor"], 3);
    for method in ["brute", "ir", "twin"] {
        let o = pgaut(&["aut", "6", "--method", method]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["order"], "12", "{method}");
    }
    assert_eq!(
        pgaut(&["aut", "11", "--method", "brute"]).status.code(),
        Some(3)
    );
    assert_eq!(
        pgaut(&["aut", "60", "--method", "ir", "--budget", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        pgaut(&["aut", "6", "--method", "magic"]).status.code(),
        Some(2)
    );
}

#[test]
fn aut_from_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("c5.txt");
    std::fs::write(&edges, "0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let o = pgaut(&[
        "aut",
        "--graph",
        edges.to_str().unwrap(),
        "--graph-format",
        "edgelist",
    ]);
    assert_eq!(json(&o)["order"], "10");
    // Two isolated vertices past the last edge.
    let o = pgaut(&[
        "aut",
        "--graph",
        edges.to_str().unwrap(),
        "--graph-format",
        "edgelist",
        "--vertices",
        "7",
    ]);
    assert_eq!(json(&o)["order"], "20");

    let dimacs = dir.path().join("k3.dimacs");
    std::fs::write(&dimacs, "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    let o = pgaut(&[
        "aut",
        "--graph",
        dimacs.to_str().unwrap(),
        "--method",
        "brute",
    ]);
    assert_eq!(json(&o)["order"], "6");

    let js = dir.path().join("p3.json");
    std::fs::write(&js, r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    let o = pgaut(&["aut", "--graph", js.to_str().unwrap()]);
    assert_eq!(json(&o)["order"], "2");

    let broken = dir.path().join("bad.dimacs");
    std::fs::write(&broken, "p edge 2 1\ne 1 5\n").unwrap();
    assert_eq!(
        pgaut(&["aut", "--graph", broken.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pgaut(&[
            "aut",
            "--graph",
            js.to_str().unwrap(),
            "--method",
            "formula"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn verify_reports() {
    let o = pgaut(&[
        "verify",
        "--from",
        "2",
        "--to",
        "10",
        "--methods",
        "formula,brute",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["entries"].as_array().unwrap().len(), 9);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["passed"], 9);

    let o = pgaut(&["verify", "--from", "2", "--to", "2"]);
    let v = json(&o);
    assert_eq!(v["entries"][0]["method_orders"]["formula"], "2");
    assert_eq!(v["entries"][0]["branch"], "prime-power");

    let o = pgaut(&[
        "verify",
        "--from",
        "9",
        "--to",
        "12",
        "--methods",
        "formula,brute",
        "--report",
        "csv",
    ]);
    let text = stdout(&o);
    assert!(text.contains("11,prime-power,brute,skipped,"));
    assert_eq!(text.lines().count(), 1 + 4 * 2);

    assert_eq!(
        pgaut(&["verify", "--from", "1", "--to", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        pgaut(&["verify", "--from", "6", "--to", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        pgaut(&[
            "verify",
            "--from",
            "2",
            "--to",
            "5",
            "--methods",
            "formula,nope"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let strip = |o: &Output| {
        let mut v = json(o);
        for e in v["entries"].as_array_mut().unwrap() {
            e.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let a = pgaut(&["verify", "--from", "2", "--to", "60", "--jobs", "1"]);
    let b = pgaut(&["verify", "--from", "2", "--to", "60", "--jobs", "4"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn lemma_checks() {
    let o = pgaut(&["lemmas", "--which", "2.2", "--ms", "3,2", "--m", "5"]);
    assert_eq!(
        stdout(&o),
        "[{\"from\":[2],\"to\":[3,5],\"lhs\":2,\"rhs\":3}]\n"
    );
    let o = pgaut(&["lemmas", "--which", "2.5", "--n", "15"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["status"], "pass");
    let o = pgaut(&["lemmas", "--which", "2.5", "--n", "9"]);
    assert_eq!(json(&o)["status"], "hypothesis-not-met");
    let o = pgaut(&["lemmas", "--which", "2.3", "--n", "30"]);
    assert_eq!(json(&o)["status"], "pass");
    let o = pgaut(&["lemmas", "--which", "2.4", "--n", "72"]);
    assert_eq!(json(&o)["status"], "pass");

    assert_eq!(
        pgaut(&["lemmas", "--which", "2.2", "--ms", "2,3", "--m", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pgaut(&["lemmas", "--which", "2.2", "--ms", "3,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pgaut(&["lemmas", "--which", "2.5"]).status.code(), Some(2));
    assert_eq!(
        pgaut(&["lemmas", "--which", "2.6", "--n", "6"])
            .status
            .code(),
        Some(2)
    );
}
