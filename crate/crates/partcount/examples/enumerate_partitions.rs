//! The brute-force enumerator: list constrained partitions in
//! descending-lex order and export them as JSON.
//!
//! ```bash
//! cargo run --example enumerate_partitions
//! ```

use partcount::oracle::{enumerate, partitions_to_json, Constraints};

fn main() {
    let all = enumerate(7, &Constraints::default()).unwrap();
    println!("partitions of 7 ({}):", all.len());
    for p in &all {
        println!("  {:?}", p.parts());
    }

    let constrained = enumerate(
        12,
        &Constraints {
            parts: Some(3),
            min_part: Some(2),
            ..Default::default()
        },
    )
    .unwrap();
    println!("\npartitions of 12 into 3 parts, all >= 2:");
    for p in &constrained {
        println!("  {:?}", p.parts());
    }

    println!("\nJSON export: {}", partitions_to_json(&constrained));
}
