//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use fockbasis::Symbol;

pub const EXAMPLE1: [&[i64]; 4] = [&[0, 1, 2, 4, 5, 7], &[0, 2, 3, 5], &[1, 2, 4], &[1, 2, 4]];
pub const EXAMPLE2: [&[i64]; 4] = [&[0, 1, 3, 4, 7], &[0, 2, 3, 5, 8], &[0, 3, 4, 6], &[1, 3, 4, 7]];
/// Term 527 of the second example, coefficient `v^6`.
pub const EXAMPLE2_TERM: [&[i64]; 4] = [&[0, 2, 3, 6, 7], &[0, 3, 4, 7, 8], &[1, 3, 4, 5], &[0, 1, 3, 4]];

/// Rows top to bottom and the listed power of `v`, items 1 to 18.
pub const EXAMPLE1_TERMS: [(i64, [&[i64]; 4]); 18] = [
    (0, [&[0, 1, 2, 4, 5, 7], &[0, 2, 3, 5], &[1, 2, 4], &[1, 2, 4]]),
    (1, [&[0, 1, 2, 4, 5, 7], &[0, 2, 4, 5], &[1, 2, 3], &[1, 2, 4]]),
    (2, [&[0, 1, 2, 4, 5, 7], &[0, 2, 4, 5], &[1, 2, 4], &[1, 2, 3]]),
    (1, [&[0, 1, 2, 4, 5, 7], &[1, 2, 3, 5], &[0, 2, 4], &[1, 2, 4]]),
    (2, [&[0, 1, 2, 4, 5, 7], &[1, 2, 4, 5], &[0, 2, 3], &[1, 2, 4]]),
    (3, [&[0, 1, 2, 4, 5, 7], &[1, 2, 4, 5], &[0, 2, 4], &[1, 2, 3]]),
    (2, [&[0, 1, 2, 4, 5, 7], &[1, 2, 3, 5], &[1, 2, 4], &[0, 2, 4]]),
    (3, [&[0, 1, 2, 4, 5, 7], &[1, 2, 4, 5], &[1, 2, 3], &[0, 2, 4]]),
    (4, [&[0, 1, 2, 4, 5, 7], &[1, 2, 4, 5], &[1, 2, 4], &[0, 2, 3]]),
    (1, [&[0, 2, 3, 4, 5, 7], &[0, 1, 2, 5], &[1, 2, 4], &[1, 2, 4]]),
    (2, [&[1, 2, 3, 4, 5, 7], &[0, 1, 2, 5], &[0, 2, 4], &[1, 2, 4]]),
    (3, [&[1, 2, 3, 4, 5, 7], &[0, 1, 2, 5], &[1, 2, 4], &[0, 2, 4]]),
    (2, [&[0, 2, 3, 4, 5, 7], &[1, 2, 4, 5], &[0, 1, 2], &[1, 2, 4]]),
    (3, [&[1, 2, 3, 4, 5, 7], &[0, 2, 4, 5], &[0, 1, 2], &[1, 2, 4]]),
    (4, [&[1, 2, 3, 4, 5, 7], &[1, 2, 4, 5], &[0, 1, 2], &[0, 2, 4]]),
    (3, [&[0, 2, 3, 4, 5, 7], &[1, 2, 4, 5], &[1, 2, 4], &[0, 1, 2]]),
    (4, [&[1, 2, 3, 4, 5, 7], &[0, 2, 4, 5], &[1, 2, 4], &[0, 1, 2]]),
    (5, [&[1, 2, 3, 4, 5, 7], &[1, 2, 4, 5], &[0, 2, 4], &[0, 1, 2]]),
];

pub fn finite(rows: &[&[i64]]) -> Symbol {
    Symbol::finite(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}
