//! The seven counting functions, evaluated through the nested-sum
//! formulas for one small n.
//!
//! ```bash
//! cargo run --example compute_counts
//! ```

use partcount::{Evaluator, Result};

fn main() -> Result<()> {
    let ev = Evaluator::new(false);
    let (n, k, l, m) = (12u64, 3u64, 2u64, 5u64);

    println!("p({n})                 = {}", ev.count_all(n)?);
    println!("p_psi({n})             = {}", ev.count_relprime(n)?);
    println!("p_psi_m({n}; m={m})      = {}", ev.count_relprime_to_m(n, m)?);
    println!("p({n}, {k})              = {}", ev.count_with_k_parts(n, k)?);
    println!(
        "p_psi({n}, {k})          = {}",
        ev.count_with_k_parts_relprime(n, k)?
    );
    println!(
        "p_psi_m({n}, {k}; m={m})   = {}",
        ev.count_with_k_parts_relprime_to_m(n, k, m)?
    );
    println!(
        "p_psi_m({n}, {k}, {l}; m={m}) = {}   (smallest part exactly {l})",
        ev.count_exact_smallest(n, k, l, m)?
    );
    println!(
        "p_psi_m({n}, {k}, >={l}; m={m}) = {}  (no part below {l})",
        ev.count_min_part(n, k, l, m)?
    );
    println!(
        "p_psi_m({n}, 2, >={l}; m={m}) = {}  (two-part closed form)",
        ev.count_two_parts_min(n, l, m)?
    );
    Ok(())
}
