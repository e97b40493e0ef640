// Driving the command line in-process and reading its JSON.

use obstruct::cli;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        [
            "obstruct", "obstruct", "--m", "-15", "--group", "m", "--q", "3",
        ],
        &mut out,
        &mut err,
    );
    let report: serde_json::Value = serde_json::from_slice(&out)?;
    println!("exit code {code}");
    println!(
        "{}",
        serde_json::to_string_pretty(&report["result"]["verdict"])?
    );
    assert_eq!(code, 0);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
