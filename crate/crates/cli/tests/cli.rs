use std::path::Path;
use std::process::{Command, Output};

use graphstring_core::{is_isomorphic, parse_edgelist, Graph};

fn graphstring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphstring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn decode_writes_the_example_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let res = graphstring(&["decode", "--string", "VvNV", "--out", out.to_str().unwrap()]);
    assert!(res.status.success());
    assert_eq!(
        std::fs::read_to_string(out).unwrap(),
        "undirected\n0 1\n0 2\n2 3\n"
    );
}

#[test]
fn encode_k2_from_node_zero() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "undirected\n0 1\n");
    let res = graphstring(&["encode", "--in", &k2, "--method", "greedy", "--start", "0"]);
    assert_eq!((res.status.code(), stdout(&res).as_str()), (Some(0), "V\n"));
}

#[test]
fn canonical_string_of_a_single_node_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.txt", "undirected\n# nodes 1\n");
    let res = graphstring(&["canon", "--in", &one]);
    assert_eq!((res.status.code(), stdout(&res).as_str()), (Some(0), "\n"));
}

#[test]
fn exit_statuses() {
    assert_eq!(graphstring(&["encode", "--bogus"]).status.code(), Some(1));
    assert_eq!(graphstring(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(graphstring(&[]).status.code(), Some(1));
    assert_eq!(graphstring(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.txt");
    let res = graphstring(&["canon", "--in", missing.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(2));
    assert!(!res.stderr.is_empty());

    // Ids remap to 0 -> 1 <- 2, so node 0 cannot reach node 2.
    let arc = write(dir.path(), "arc.txt", "directed\n0 1\n2 1\n");
    let res = graphstring(&["encode", "--in", &arc, "--method", "greedy", "--start", "0"]);
    assert_eq!(res.status.code(), Some(2));

    let k4 = write(
        dir.path(),
        "k4.txt",
        "undirected\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
    );
    assert_eq!(
        graphstring(&["canon", "--in", &k4, "--budget", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn generate_encode_decode_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (family, n, param) in [
        ("petersen", "10", "0"),
        ("ba", "12", "2"),
        ("er", "9", "0.4"),
        ("wheel", "7", "0"),
    ] {
        let gen = graphstring(&["gen", "--family", family, "--n", n, "--param", param]);
        assert!(gen.status.success(), "{family}");
        let text = stdout(&gen);
        let file = write(dir.path(), "g.txt", &text);
        let g: Graph = parse_edgelist(&text).unwrap();
        for method in ["greedy-min", "greedy-rnd", "canonical"] {
            if method == "canonical" && g.node_count() > 9 {
                continue;
            }
            let enc = graphstring(&["encode", "--in", &file, "--method", method]);
            let w = stdout(&enc);
            let dec = graphstring(&["decode", "--string", w.trim_end()]);
            let back = parse_edgelist(&stdout(&dec)).unwrap();
            assert!(is_isomorphic(&g, &back, 20).unwrap(), "{family} {method}");
        }
    }
}

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |sub: &str| {
        let out = dir.path().join(sub);
        let res = graphstring(&[
            "bench-corr",
            "--count",
            "8",
            "--max-n",
            "6",
            "--seed",
            "7",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(
            res.status.success(),
            "{}",
            String::from_utf8_lossy(&res.stderr)
        );
        (
            stdout(&res),
            std::fs::read(out.join("pairs.csv")).unwrap(),
            std::fs::read(out.join("summary.json")).unwrap(),
        )
    };
    assert_eq!(run("a"), run("b"));
    let g1 = graphstring(&[
        "gen", "--family", "er", "--n", "10", "--param", "0.3", "--seed", "5",
    ]);
    let g2 = graphstring(&[
        "gen", "--family", "er", "--n", "10", "--param", "0.3", "--seed", "5",
    ]);
    assert_eq!(g1.stdout, g2.stdout);
}

#[test]
fn dist_reports_both_distances() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", "undirected\n0 1\n1 2\n0 2\n");
    let p3 = write(dir.path(), "p3.txt", "undirected\n0 1\n1 2\n");
    let res = graphstring(&["dist", "--a", &k3, "--b", &p3]);
    let text = stdout(&res);
    let lev: usize = text
        .lines()
        .next()
        .unwrap()
        .strip_prefix("levenshtein ")
        .unwrap()
        .parse()
        .unwrap();
    assert!(lev >= 1);
    assert_eq!(text.lines().nth(1), Some("ged 1"));
}

#[test]
fn neighborhood_writes_a_listing() {
    let dir = tempfile::tempdir().unwrap();
    let res = graphstring(&["neighborhood", "--out", dir.path().to_str().unwrap()]);
    assert!(res.status.success());
    assert!(stdout(&res).contains("edit neighbours 10 (6 deletions, 4 insertions"));
    let csv = std::fs::read_to_string(dir.path().join("neighborhood.csv")).unwrap();
    assert!(csv.starts_with("direction,kind,u,v,string,lev,ged,isomorphic,class\n"));
    assert_eq!(csv.lines().filter(|l| l.starts_with("edit,")).count(), 10);
}
