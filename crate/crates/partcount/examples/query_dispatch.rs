//! Driving the counting functions through the single query front door.
//!
//! ```bash
//! cargo run --example query_dispatch
//! ```

use partcount::{CoprimalityClass, Evaluator, PartitionQuery, SmallestPart};

fn main() {
    let ev = Evaluator::new(true);

    let queries = [
        PartitionQuery {
            n: 6,
            parts: None,
            smallest: None,
            class: CoprimalityClass::Unrestricted,
        },
        PartitionQuery {
            n: 6,
            parts: None,
            smallest: None,
            class: CoprimalityClass::RelPrime,
        },
        PartitionQuery {
            n: 10,
            parts: Some(2),
            smallest: Some(SmallestPart::AtLeast(2)),
            class: CoprimalityClass::RelPrimeTo(6),
        },
        PartitionQuery {
            n: 12,
            parts: Some(3),
            smallest: Some(SmallestPart::Exact(2)),
            class: CoprimalityClass::RelPrime,
        },
        // k > n collapses to zero by convention
        PartitionQuery {
            n: 5,
            parts: Some(6),
            smallest: None,
            class: CoprimalityClass::Unrestricted,
        },
    ];
    for query in &queries {
        println!("{query:?} -> {}", ev.evaluate(query).unwrap());
    }

    // malformed queries are rejected with the offending field named
    let bad = PartitionQuery {
        n: 6,
        parts: None,
        smallest: Some(SmallestPart::Exact(2)),
        class: CoprimalityClass::Unrestricted,
    };
    println!("{bad:?} -> {}", ev.evaluate(&bad).unwrap_err());
}
