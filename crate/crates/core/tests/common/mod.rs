#![allow(dead_code)]

use ivpoly::IntPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 0..=max_degree + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

pub fn nonzero_poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    poly(max_degree, bound).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn monic(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 0..=max_degree).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn falling(k: u64) -> IntPoly {
    IntPoly::from_roots((0..k).map(BigInt::from))
}
