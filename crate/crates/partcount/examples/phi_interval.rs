//! The coprime-interval counter: how many integers in [a, b] are coprime
//! to n, by a Mobius divisor sum rather than a scan. Over the full
//! interval [1, n] it reduces to Euler's totient.
//!
//! ```bash
//! cargo run --example phi_interval
//! ```

use partcount::arith::phi_interval;

fn main() {
    println!("Phi([a,b], n) for a few intervals:");
    for (a, b, n) in [(3u64, 10, 6), (5, 9, 1), (100, 200, 30), (1, 1000, 210)] {
        println!(
            "  Phi([{a},{b}], {n}) = {}",
            phi_interval(a, b, n).unwrap()
        );
    }

    println!("\nPhi([1,n], n) is Euler's totient:");
    for n in [10u64, 12, 36, 97, 360] {
        println!("  phi({n}) = {}", phi_interval(1, n, n).unwrap());
    }
}
