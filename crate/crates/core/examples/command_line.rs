// The command-line interface driven in-process on the bundled data files.

use steinberg::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let calls = [
        vec!["validate".to_string(), format!("{data}/broken_z2.json")],
        vec![
            "socle".into(),
            format!("{data}/pair3.json"),
            "--field".into(),
            "q".into(),
        ],
        vec!["socle".into(), format!("{data}/z2.json"), "--field".into(), "f2".into()],
        vec![
            "minimal".into(),
            format!("{data}/z2.json"),
            "--unit".into(),
            "e".into(),
            "--field".into(),
            "f2".into(),
        ],
        vec![
            "graph-socle".into(),
            format!("{data}/line3.json"),
            "--materialize".into(),
        ],
    ];
    for args in calls {
        let out = run(std::iter::once("steinberg".to_string()).chain(args.iter().cloned()));
        let first_lines: Vec<&str> = out.stdout.lines().take(4).collect();
        println!(
            "steinberg {} -> exit {}",
            args.join(" ").replace(data, "data"),
            out.code
        );
        println!("  {}", first_lines.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
