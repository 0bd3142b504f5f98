//! Betti numbers from the Taylor complex.
//!
//! The Taylor complex has a basis element for every subset `S` of the
//! minimal generators, in multidegree `lcm(S)`. Tensoring with `k` keeps
//! only the faces `S \ {g}` with the same lcm, so `β_{i,b}(R/I)` is the
//! `i`-th homology of the strand of subsets whose lcm is exactly `b`. This
//! shares nothing with the upper-Koszul route except the rank kernel.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::betti::{BettiTable, Quotient};
use crate::error::{Error, Result};
use crate::homology::{FieldSpec, Matrix};
use crate::ideal::{Monomial, MonomialIdeal};

pub const TAYLOR_CAP: usize = 20;

pub fn taylor_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable<Quotient>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens = ideal.generators();
    let g = gens.len();
    if g > TAYLOR_CAP {
        return Err(Error::GeneratorCap {
            count: g,
            cap: TAYLOR_CAP,
            estimate: 1u128 << g,
        });
    }
    let n = ideal.n_vars();
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << g);
    lcms.push(Monomial::one(n));
    for mask in 1u32..(1u32 << g) {
        let low = mask.trailing_zeros() as usize;
        lcms.push(lcms[(mask & (mask - 1)) as usize].lcm(&gens[low]));
    }
    let mut strands: HashMap<&Monomial, Vec<u32>> = HashMap::new();
    for (mask, l) in lcms.iter().enumerate() {
        strands.entry(l).or_default().push(mask as u32);
    }
    let results: Vec<(Monomial, Vec<u64>)> = strands
        .into_par_iter()
        .map(|(b, masks)| (b.clone(), strand_homology(&masks, &lcms, field)))
        .collect();
    let mut entries = BTreeMap::new();
    for (b, dims) in results {
        for (i, d) in dims.into_iter().enumerate() {
            if d > 0 {
                entries.insert((i, b.clone()), d);
            }
        }
    }
    Ok(BettiTable::from_entries(n, entries))
}

/// Homology dimensions of one strand, indexed by subset size.
fn strand_homology(masks: &[u32], lcms: &[Monomial], field: FieldSpec) -> Vec<u64> {
    let top = masks
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &m in masks {
        by_size[m.count_ones() as usize].push(m);
    }
    let b = &lcms[masks[0] as usize];
    // ranks[i] = rank of ∂_i : C_i -> C_{i-1}
    let mut ranks = vec![0usize; top + 2];
    for i in 1..=top {
        let index: HashMap<u32, usize> = by_size[i - 1]
            .iter()
            .enumerate()
            .map(|(k, &m)| (m, k))
            .collect();
        let mut d = Matrix::zeros(by_size[i - 1].len(), by_size[i].len());
        for (c, &s) in by_size[i].iter().enumerate() {
            let mut pos = 0;
            for bit in 0..32 {
                if s >> bit & 1 == 0 {
                    continue;
                }
                let face = s & !(1 << bit);
                if &lcms[face as usize] == b {
                    if let Some(&r) = index.get(&face) {
                        d.set(r, c, field.sign(pos % 2 == 1));
                    }
                }
                pos += 1;
            }
        }
        ranks[i] = d.rank(field);
    }
    (0..=top)
        .map(|i| (by_size[i].len() - ranks[i] - ranks[i + 1]) as u64)
        .collect()
}
