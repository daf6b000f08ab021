#![no_main]

//! Input `coeffs;init`, e.g. `0,1,1;1,0,0`.

use bellrec::arith::{lift_all, BigRational};
use bellrec::linrec::{decompose, eval_recurrence, reconstruct, RecurrenceSpec};
use bellrec::parse::parse_list;
use libfuzzer_sys::fuzz_target;

const N: usize = 12;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((coeffs, init)) = text.split_once(';') else {
        return;
    };
    let (Ok(coeffs), Ok(init)) = (parse_list(coeffs), parse_list(init)) else {
        return;
    };
    if coeffs.len() > 8 {
        return;
    }
    let (Ok(coeffs), Ok(init)) = (lift_all::<BigRational>(&coeffs), lift_all::<BigRational>(&init)) else {
        return;
    };
    let Ok(spec) = RecurrenceSpec::new(coeffs, init) else {
        return;
    };
    let rebuilt = reconstruct(&decompose(&spec), spec.coeffs(), N).expect("rational INVERT paths agree");
    assert_eq!(rebuilt.values, eval_recurrence(&spec, N).values);
});
