use braid_cli::dispatch;
use serde::Deserialize;

#[derive(Deserialize)]
struct Case {
    cmd: Vec<String>,
    stdout: String,
    exit: i32,
}

#[test]
fn golden_vectors() {
    let text = include_str!("../testdata/golden.jsonl");
    let mut count = 0;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let case: Case = serde_json::from_str(line).unwrap();
        let argv = std::iter::once("braid".to_string()).chain(case.cmd.iter().cloned());
        let out = dispatch(argv);
        assert_eq!(
            out.code,
            case.exit,
            "line {}: {:?}\n{}",
            lineno + 1,
            case.cmd,
            out.stderr
        );
        assert_eq!(
            out.stdout,
            case.stdout,
            "line {}: {:?}",
            lineno + 1,
            case.cmd
        );
        count += 1;
    }
    assert!(count >= 50);
}
