//! Run the identity suite: the eight relations tying the counting
//! functions together, checked exhaustively on a small grid against both
//! the enumerator and the classical recurrences.
//!
//! ```bash
//! cargo run --example identity_report
//! ```

use partcount::reference::identity_suite;

fn main() {
    let report = identity_suite(16, 6).unwrap();
    for check in &report.checks {
        match &check.failure {
            None => println!("PASS  {} ({} cases)", check.name, check.cases),
            Some(counterexample) => println!("FAIL  {}: {}", check.name, counterexample),
        }
    }
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}
