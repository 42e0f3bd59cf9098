//! Capacity-lowered overflow checks. The count capacity is process-global,
//! so this file holds a single test and runs in its own test binary.

use partcount::count::{self, Count};
use partcount::formulas::Evaluator;
use partcount::reference::p_table_pentagonal;
use partcount::Error;

#[test]
fn lowered_capacity_forces_overflow_not_wrong_values() {
    count::set_capacity_bits(16); // counts above 65535 must error out

    // small values still work, and stay correct
    let ev = Evaluator::new(false);
    assert_eq!(ev.count_all(20).unwrap().get(), 627);
    assert_eq!(p_table_pentagonal(40).unwrap().get(40).get(), 37338);

    // p(49) = 173525 exceeds the lowered capacity: every route must report
    // overflow rather than a wrapped or clamped value
    assert!(matches!(
        p_table_pentagonal(49),
        Err(Error::Overflow { .. })
    ));
    let memoized = Evaluator::new(true);
    assert!(matches!(
        memoized.count_all(49),
        Err(Error::Overflow { .. })
    ));
    assert!(matches!(ev.count_all(49), Err(Error::Overflow { .. })));

    // constructing an out-of-range count directly is also rejected
    assert!(Count::new(65536).is_err());
    assert!(Count::new(65535).is_ok());

    count::set_capacity_bits(128);
    println!("criterion 7 (library) PASS: lowered capacity turns large counts into errors");
}
