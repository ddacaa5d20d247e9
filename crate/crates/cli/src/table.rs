//! Tables of `dim(i, j, j)` and its row-to-row differences.

use std::fmt::Write;

use cidim_core::{dimension, ExponentTriple};

fn dim_ijj(i: u64, j: u64) -> i64 {
    dimension(ExponentTriple::new(i, j, j)).dimension as i64
}

/// Cell `(i, j)`: `dim(i, j, j)`, or with `diff` the increment
/// `dim(i, j, j) - dim(i, j-1, j-1)` (where `dim(i, 0, 0) = 0`).
pub fn cell(i: u64, j: u64, diff: bool) -> i64 {
    if diff {
        dim_ijj(i, j) - dim_ijj(i, j - 1)
    } else {
        dim_ijj(i, j)
    }
}

/// CSV with header `j\i,1,...,max_i` and one row per `j` in `1..=max_j`.
pub fn render(max_i: u64, max_j: u64, diff: bool) -> String {
    let mut out = String::from("j\\i");
    for i in 1..=max_i {
        write!(out, ",{i}").unwrap();
    }
    out.push('\n');
    for j in 1..=max_j {
        write!(out, "{j}").unwrap();
        for i in 1..=max_i {
            write!(out, ",{}", cell(i, j, diff)).unwrap();
        }
        out.push('\n');
    }
    out
}
