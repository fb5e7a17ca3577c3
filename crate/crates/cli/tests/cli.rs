use std::io::Write;
use std::process::{Command, Output, Stdio};

use gallai_core::{parse_graph6, Graph, Pattern};

fn gallai(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(str::to_owned).collect()
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    stdout_lines(out).iter().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn f8_minus_is_a_tree_on_every_route() {
    let out = gallai(&["recognize", "tree", "--route", "all"], "Eh^G\n");
    assert_eq!(out.status.code(), Some(0));
    let verdicts = json_lines(&out);
    assert_eq!(verdicts.len(), 3);
    for (v, route) in verdicts.iter().zip(["direct", "characterization", "structural"]) {
        assert_eq!(v["answer"], true);
        assert_eq!(v["route"], route);
        assert_eq!(v["certificate"]["kind"], "ok");
    }
}

#[test]
fn recognize_reports_false_with_exit_one() {
    let out = gallai(&["recognize", "forest"], "Ch\nCF\n");
    assert_eq!(out.status.code(), Some(1));
    let verdicts = json_lines(&out);
    assert_eq!(verdicts[0]["input"], "Ch");
    assert_eq!(verdicts[0]["answer"], true);
    assert_eq!(verdicts[1]["input"], "CF");
    assert_eq!(verdicts[1]["answer"], false);
    assert_eq!(verdicts[1]["certificate"]["kind"], "pattern-embedding");
    assert_eq!(verdicts[1]["certificate"]["data"]["pattern"], "F1");
}

#[test]
fn json_keys_come_in_a_fixed_order() {
    let out = gallai(&["recognize", "tree"], "Bw\n");
    let line = &stdout_lines(&out)[0];
    let keys = ["\"input\"", "\"question\"", "\"route\"", "\"answer\"", "\"certificate\""];
    let positions: Vec<usize> = keys.iter().map(|k| line.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
}

#[test]
fn transform_triangle() {
    let out = gallai(&["transform", "gallai"], "Bw\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out), ["B?"]);
    let out = gallai(&["transform", "anti-gallai"], "Bw\n");
    assert_eq!(stdout_lines(&out), ["Bw"]);
    let out = gallai(&["transform", "line", "--output", "dot"], "Bw\n");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[label=\"0-1\"]"));
}

#[test]
fn output_order_follows_input_order() {
    let input: Vec<String> = (3..40).map(|n| gallai_core::to_graph6(&Graph::path(n).unwrap())).collect();
    let out = gallai(&["transform", "gallai"], &input.join("\n"));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), input.len());
    for (line, n) in lines.iter().zip(3..) {
        assert_eq!(parse_graph6(line).unwrap(), Graph::path(n - 1).unwrap());
    }
}

#[test]
fn edge_list_input() {
    let out = gallai(&["transform", "gallai", "--format", "edgelist"], "3\n0 1\n1 2\n0 2\n\n2\n0 1\n");
    assert_eq!(stdout_lines(&out), ["B?", "@"]);
}

#[test]
fn embed_reports_apex() {
    let out = gallai(&["embed"], "Ch\n");
    let v = &json_lines(&out)[0];
    assert_eq!(v["apex"], 4);
    let g = parse_graph6(v["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(g.n(), 5);
    assert_eq!(g.degree(4), 4);
}

#[test]
fn crosscheck_summary() {
    let out = gallai(&["crosscheck", "thm1", "--n-max", "6"], "");
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["mismatches"], 0);
    assert_eq!(lines[0]["n_max"], 6);
    let out = gallai(&["crosscheck", "embedding", "--n-max", "4", "--dedup", "--threads", "2"], "");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn patterns_round_trip() {
    let out = gallai(&["patterns"], "");
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), Pattern::ALL.len());
    for (line, p) in lines.iter().zip(Pattern::ALL) {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields[0], p.name());
        let g = parse_graph6(fields[1]).unwrap();
        assert_eq!(&g, p.graph());
        let edges: Vec<(usize, usize)> = fields[2]
            .split(' ')
            .map(|e| {
                let (a, b) = e.split_once('-').unwrap();
                (a.parse().unwrap(), b.parse().unwrap())
            })
            .collect();
        assert_eq!(Graph::from_edges(g.n(), edges).unwrap(), g);
        let cyclic = gallai_core::gallai(&g).unwrap().graph().find_cycle().is_some();
        assert_eq!(cyclic, Pattern::FORBIDDEN.contains(&p), "{p}");
    }
}

#[test]
fn errors_exit_two_with_one_line() {
    let cases: [(&[&str], &str); 5] = [
        (&["recognize", "tree", "--bogus"], ""),
        (&["transform", "gallai"], "B\n"),
        (&["recognize", "tree"], "A?\n"),
        (&["recognize", "forest", "--route", "structural"], "Bw\n"),
        (&["transform", "gallai", "/nonexistent/input"], ""),
    ];
    for (args, stdin) in cases {
        let out = gallai(args, stdin);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
    let out = gallai(&["crosscheck", "thm1", "--n-max", "12"], "");
    assert_eq!(out.status.code(), Some(2));
}
