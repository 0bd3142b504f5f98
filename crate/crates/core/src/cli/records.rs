//! Line-oriented output records.

use std::fmt::Write;

use itertools::Itertools;

use crate::betti::{BettiTable, Convention, GradedBetti};

/// `beta <i> <b1,...,bn> <value>`
pub fn multigraded_records<C: Convention>(table: &BettiTable<C>) -> String {
    table
        .entries()
        .map(|(i, b, v)| format!("beta {i} {} {v}\n", b.to_csv()))
        .collect()
}

/// `beta <i> <j> <value>`
pub fn graded_records(graded: &GradedBetti) -> String {
    graded
        .entries()
        .map(|(i, j, v)| format!("beta {i} {j} {v}\n"))
        .collect()
}

/// `total <i> <value>`
pub fn total_records(totals: &[u64]) -> String {
    totals
        .iter()
        .enumerate()
        .map(|(i, v)| format!("total {i} {v}\n"))
        .collect()
}

/// `pdim`, `reg` and one `extremal <i> <j>` line per extremal position.
pub fn invariant_records(graded: &GradedBetti) -> String {
    let inv = graded.invariants();
    let mut out = format!("pdim {}\nreg {}\n", inv.pdim, inv.reg);
    for (i, j) in &inv.extremals {
        writeln!(out, "extremal {i} {j}").unwrap();
    }
    out
}

pub fn csv<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).join(",")
}
