//! The `bent` front end driven in-process: build, store, verify.

use bentkit::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("bentkit-example");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let file = dir.join("fa.bfn");
    let file = file.to_str().expect("utf-8 path");
    for args in [
        vec![
            "bent",
            "construct",
            "--kind",
            "fa",
            "--m",
            "6",
            "--k",
            "2",
            "--u-label",
            "0",
            "--out",
            file,
        ],
        vec!["bent", "verify", "--mode", "zbent", file],
        vec![
            "bent",
            "analyze",
            "constant-on",
            "--partition",
            "gamma1",
            "--k",
            "2",
            file,
        ],
        vec!["bent", "analyze", "degree", file],
    ] {
        let (code, report) = run(args.clone());
        print!("$ {}\n{report}(exit {code})\n", args[1..].join(" "));
    }
}
