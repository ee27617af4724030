//! Runs every reproduction criterion and prints one line per criterion.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;

use casimir_core::verify;

fn main() -> ExitCode {
    let verbose = std::env::args().any(|a| a == "--nocapture" || a == "-v");
    let results = verify::run_all();
    println!();
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2}: {}", r.id, r.title);
        for c in &r.checks {
            if verbose || !c.passed {
                let t = if c.passed { "ok" } else { "FAILED" };
                println!("       - {} [{t}] {}", c.name, c.detail);
            }
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
