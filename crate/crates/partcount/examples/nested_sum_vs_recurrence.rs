//! Compare the nested-sum evaluation of p(n) against Euler's pentagonal
//! recurrence: same values, very different cost profiles, and the effect
//! of the frame cache.
//!
//! ```bash
//! cargo run --release --example nested_sum_vs_recurrence
//! ```

use std::time::Instant;

use partcount::reference::p_table_pentagonal;
use partcount::Evaluator;

fn main() {
    println!("{:>4} {:>12} {:>14} {:>14} {:>12}", "n", "p(n)", "nested (ns)", "memoized (ns)", "pentagonal (ns)");
    for n in [10u64, 20, 30, 40] {
        let plain = Evaluator::new(false);
        let start = Instant::now();
        let nested = plain.count_all(n).unwrap();
        let nested_ns = start.elapsed().as_nanos();

        let memoized = Evaluator::new(true);
        let start = Instant::now();
        let cached = memoized.count_all(n).unwrap();
        let memo_ns = start.elapsed().as_nanos();

        let start = Instant::now();
        let table = p_table_pentagonal(n).unwrap();
        let classical = table.get(n);
        let pent_ns = start.elapsed().as_nanos();

        assert_eq!(nested, classical);
        assert_eq!(cached, classical);
        println!("{n:>4} {nested:>12} {nested_ns:>14} {memo_ns:>14} {pent_ns:>12}");
    }
}
