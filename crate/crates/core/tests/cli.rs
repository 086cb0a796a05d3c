use std::io::Write;
use std::process::{Command, Output, Stdio};

const RUNNING_TABLEAU: &str = r#"{"kind":"tableau","rows":[[1,3,4],[2,5,6]]}"#;
const GAMMA6: &str = r#"{"kind":"graph","loops":[["10","1"],["10","1"],["10","1"],["10","1"],["10","1"],["10","1"]]}"#;
const RUNNING_DIVISOR: &str = r#"{"kind":"divisor","graph":{"kind":"graph","loops":[["10","1"],["10","1"],["10","1"],["10","1"],["10","1"],["10","1"]]},"head":2,"underline":[2,3,1,0,1,0],"raw":["3","4","2","0","2","0"]}"#;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chipchain"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn convert_running_example_with_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    std::fs::write(&graph, GAMMA6).unwrap();
    let out = run(&["convert", "--to", "divisor", "--graph", graph.to_str().unwrap()], RUNNING_TABLEAU);
    assert_eq!(stdout(&out), format!("{RUNNING_DIVISOR}\n"));
}

#[test]
fn path_tableau_round_trip_is_byte_identical() {
    let path = stdout(&run(&["convert", "--to", "path"], RUNNING_TABLEAU));
    let tableau = stdout(&run(&["convert", "--to", "tableau"], &path));
    assert_eq!(tableau.trim(), RUNNING_TABLEAU);
    assert_eq!(stdout(&run(&["convert", "--to", "path"], &tableau)), path);
    assert_eq!(path.trim(), r#"{"kind":"path","r":2,"points":[[2,1],[3,1],[4,1],[4,2],[3,1],[3,2],[2,1]]}"#);
}

#[test]
fn transforms_and_rank() {
    assert_eq!(stdout(&run(&["evacuate"], RUNNING_TABLEAU)).trim(), r#"{"kind":"tableau","rows":[[1,2,5],[3,4,6]]}"#);
    assert_eq!(
        stdout(&run(&["transpose"], RUNNING_TABLEAU)).trim(),
        r#"{"kind":"tableau","rows":[[1,2],[3,5],[4,6]]}"#
    );
    let reflected = stdout(&run(&["reflect"], RUNNING_DIVISOR));
    assert!(reflected.contains(r#""head":2,"underline":[2,1,3,2,0,0]"#), "{reflected}");
    let dual = stdout(&run(&["dual"], RUNNING_DIVISOR));
    assert!(dual.contains(r#""head":1,"underline":[1,0,1,2,0,0]"#), "{dual}");

    let rank: serde_json::Value = serde_json::from_str(&stdout(&run(&["rank"], RUNNING_DIVISOR))).unwrap();
    assert_eq!(rank["rank"], 2);
    let dual_rank: serde_json::Value = serde_json::from_str(&stdout(&run(&["rank"], &dual))).unwrap();
    assert_eq!(dual_rank["rank"], 1);
    let negative = RUNNING_DIVISOR.replace(
        r#""head":2,"underline":[2,3,1,0,1,0],"raw":["3","4","2","0","2","0"]"#,
        r#""head":-1,"underline":[0,0,0,0,0,0]"#,
    );
    let neg_rank: serde_json::Value = serde_json::from_str(&stdout(&run(&["rank"], &negative))).unwrap();
    assert_eq!(neg_rank["rank"], -1);
    assert!(neg_rank["witness"].is_null());
}

#[test]
fn input_file_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.json");
    let output = dir.path().join("ev.json");
    std::fs::write(&input, RUNNING_TABLEAU).unwrap();
    let out = run(&["evacuate", input.to_str().unwrap(), "--out", output.to_str().unwrap()], "");
    assert_eq!(stdout(&out), "");
    assert_eq!(std::fs::read_to_string(output).unwrap().trim(), r#"{"kind":"tableau","rows":[[1,2,5],[3,4,6]]}"#);
}

#[test]
fn verify_ceiling_six() {
    let report = stdout(&run(&["verify", "--ceiling", "6"], ""));
    for shape in ["1x6: 1 tableaux", "2x3: 5 tableaux", "3x2: 5 tableaux", "6x1: 1 tableaux"] {
        assert!(report.contains(&format!("shape {shape}, 0 failures")), "{report}");
    }
    assert!(report.contains("0 failures\n"));
    let one = stdout(&run(&["verify", "--ceiling", "1"], ""));
    assert!(one.contains("total: 1 tableaux over 1 shapes, 0 failures"), "{one}");
    let shape = stdout(&run(&["verify", "--shape", "2", "5", "--ceiling", "10"], ""));
    assert!(shape.contains("shape 2x5: 42 tableaux, 0 failures"), "{shape}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--template", "1:1", "--ceiling", "6"], "").status.code(), Some(3));
    assert_eq!(run(&["verify", "--ceiling", "17"], "").status.code(), Some(1));
    assert_eq!(run(&["evacuate"], "{\"kind\":\"tableau\",\"rows\":[[2,1]]}").status.code(), Some(1));
    assert_eq!(run(&["evacuate"], "garbage").status.code(), Some(1));
    assert_eq!(run(&["nonsense"], "").status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let g5 = dir.path().join("g5.json");
    std::fs::write(&g5, r#"{"kind":"graph","loops":[[10,1],[10,1],[10,1],[10,1],[10,1]]}"#).unwrap();
    let out = run(&["convert", "--to", "divisor", "--graph", g5.to_str().unwrap()], RUNNING_TABLEAU);
    assert_eq!(out.status.code(), Some(2));

    let non_generic = RUNNING_DIVISOR
        .replacen(r#"["10","1"],["10","1"],["10","1"]"#, r#"["10","1"],["10","1"],["3","2"]"#, 1)
        .replace(r#","raw":["3","4","2","0","2","0"]"#, "");
    for cmd in ["rank", "reflect", "dual"] {
        let out = run(&[cmd], &non_generic);
        assert_eq!(out.status.code(), Some(3), "{cmd}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("not generic"));
    }
    let not_image = RUNNING_DIVISOR
        .replace(r#""underline":[2,3,1,0,1,0],"raw":["3","4","2","0","2","0"]"#, r#""underline":[1,1,1,1,1,1]"#);
    assert_eq!(run(&["reflect"], &not_image).status.code(), Some(1));
    assert_eq!(run(&["dual"], &not_image).status.code(), Some(1));
}

#[test]
fn enumerate_is_ndjson_in_fixed_order() {
    let text = stdout(&run(&["enumerate", "--shape", "2", "3"], ""));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], r#"{"kind":"tableau","rows":[[1,2,3],[4,5,6]]}"#);
    assert_eq!(lines[4], r#"{"kind":"tableau","rows":[[1,3,5],[2,4,6]]}"#);
    assert_eq!(run(&["enumerate", "--shape", "4", "5"], "").status.code(), Some(1));
    let capped = stdout(&run(&["enumerate", "--shape", "3", "4", "--ceiling", "12"], ""));
    assert_eq!(capped.lines().count(), 462);
}

#[test]
fn render_is_deterministic() {
    let path = stdout(&run(&["convert", "--to", "path"], RUNNING_TABLEAU));
    let svg = stdout(&run(&["render"], &path));
    assert_eq!(svg, stdout(&run(&["render", "--style", "lattice-path"], &path)));
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"data-cusps="0,2 1,3 2,4 3,4 4,3 5,3 6,2""#));
    assert!(svg.contains(r#"data-cusps="0,1 1,1 2,1 3,2 4,1 5,2 6,1""#));

    let chips = stdout(&run(&["render"], RUNNING_DIVISOR));
    assert_eq!(chips.matches(r#"class="chip""#).count(), 5);
    assert!(chips.contains("d0 = 2"));
    assert_eq!(run(&["render", "--style", "chip-config"], &path).status.code(), Some(1));
    assert_eq!(run(&["render"], RUNNING_TABLEAU).status.code(), Some(1));

    let zero = stdout(&run(&["convert", "--to", "divisor"], r#"{"kind":"tableau","rows":[[1],[2],[3]]}"#));
    assert!(zero.contains(r#""head":0,"underline":[0,0,0]"#), "{zero}");
    let empty = stdout(&run(&["render"], &zero));
    assert_eq!(empty.matches(r#"class="loop""#).count(), 3);
    assert!(empty.contains("d0 = 0"));
}
