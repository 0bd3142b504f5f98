//! Multigraded Betti tables of monomial ideals.
//!
//! `β_{i,b}(I)` is the dimension of `H̃_{i-1}` of the upper-Koszul complex
//! `K_b(I) = {F ⊆ supp(b) : x^b / x^F ∈ I}`. Only lcm-lattice multidegrees
//! can carry nonzero entries, so only those are visited.
//!
//! Tables carry their module convention in the type: [`BettiTable<Ideal>`]
//! holds `β(I)` and [`BettiTable<Quotient>`] holds `β(R/I)`, with
//! `β_{i+1,b}(R/I) = β_{i,b}(I)` plus `β_{0,0}(R/I) = 1`.
//! [`BettiTable::to_quotient`] is the only way across.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::{Face, FieldSpec, SimplicialComplex};
use crate::ideal::{Monomial, MonomialIdeal, DEFAULT_GENERATOR_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConventionKind {
    Ideal,
    Quotient,
}

impl fmt::Display for ConventionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Ideal => "ideal",
            Self::Quotient => "quotient",
        })
    }
}

pub trait Convention: Copy + fmt::Debug + Eq + Send + Sync + 'static {
    const KIND: ConventionKind;
}

/// Betti numbers of the ideal `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ideal;

/// Betti numbers of the quotient `R/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quotient;

impl Convention for Ideal {
    const KIND: ConventionKind = ConventionKind::Ideal;
}

impl Convention for Quotient {
    const KIND: ConventionKind = ConventionKind::Quotient;
}

/// Nonzero multigraded Betti numbers, keyed by `(i, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable<C: Convention> {
    n: usize,
    entries: BTreeMap<(usize, Monomial), u64>,
    _convention: PhantomData<C>,
}

/// Graded Betti numbers `β_{i,j}`, keyed by homological index and total degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedBetti(BTreeMap<(usize, usize), u64>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicInvariants {
    pub pdim: usize,
    pub reg: usize,
    /// Graded positions `(i, j)` of the extremal Betti numbers.
    pub extremals: Vec<(usize, usize)>,
    pub unique_extremal: bool,
}

impl<C: Convention> BettiTable<C> {
    pub(crate) fn from_entries(n: usize, entries: BTreeMap<(usize, Monomial), u64>) -> Self {
        let entries = entries.into_iter().filter(|&(_, v)| v != 0).collect();
        Self {
            n,
            entries,
            _convention: PhantomData,
        }
    }

    pub fn convention(&self) -> ConventionKind {
        C::KIND
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> + '_ {
        self.entries.iter().map(|((i, b), &v)| (*i, b, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, b: &Monomial) -> u64 {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    /// Sums over multidegrees of equal total degree.
    pub fn graded(&self) -> GradedBetti {
        let mut out = BTreeMap::new();
        for ((i, b), v) in &self.entries {
            *out.entry((*i, b.degree() as usize)).or_insert(0) += v;
        }
        GradedBetti(out)
    }

    /// Total Betti numbers `β_0, β_1, ...` up to the last nonzero one.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for ((i, _), v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    /// Re-indexes multidegrees, merging entries that collide.
    pub fn map_multidegrees(&self, n: usize, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        let mut out = BTreeMap::new();
        for ((i, b), v) in &self.entries {
            *out.entry((*i, f(b))).or_insert(0) += v;
        }
        Self::from_entries(n, out)
    }
}

impl BettiTable<Ideal> {
    pub fn to_quotient(&self) -> BettiTable<Quotient> {
        let mut entries: BTreeMap<_, _> = self
            .entries
            .iter()
            .map(|((i, b), &v)| ((i + 1, b.clone()), v))
            .collect();
        entries.insert((0, Monomial::one(self.n)), 1);
        BettiTable::from_entries(self.n, entries)
    }
}

impl BettiTable<Quotient> {
    /// Table of `R/(0) = R`.
    pub fn free(n: usize) -> Self {
        Self::from_entries(n, BTreeMap::from([((0, Monomial::one(n)), 1)]))
    }

    pub fn invariants(&self) -> AlgebraicInvariants {
        self.graded().invariants()
    }

    pub fn render_diagram(&self) -> String {
        render_diagram(&self.graded())
    }
}

impl GradedBetti {
    pub fn from_map(map: BTreeMap<(usize, usize), u64>) -> Self {
        Self(map.into_iter().filter(|&(_, v)| v != 0).collect())
    }

    /// `β_{i,j}`, zero for negative or absent indices.
    pub fn get(&self, i: i64, j: i64) -> u64 {
        if i < 0 || j < 0 {
            return 0;
        }
        self.0.get(&(i as usize, j as usize)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.0.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn as_map(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.0
    }

    pub fn pdim(&self) -> usize {
        self.0.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.0
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.0.keys().map(|k| k.0 + 1).max().unwrap_or(0)];
        for (&(i, _), v) in &self.0 {
            out[i] += v;
        }
        out
    }

    /// Nonzero `β_{k,l}` with no other nonzero entry to its lower right in
    /// the diagram: none at `i ≥ k` with row `j - i ≥ l - k`.
    pub fn extremals(&self) -> Vec<(usize, usize)> {
        let row = |i: usize, j: usize| j as i64 - i as i64;
        self.0
            .keys()
            .filter(|&&(k, l)| {
                !self
                    .0
                    .keys()
                    .any(|&(i, j)| (i, j) != (k, l) && i >= k && row(i, j) >= row(k, l))
            })
            .copied()
            .collect()
    }

    pub fn invariants(&self) -> AlgebraicInvariants {
        let extremals = self.extremals();
        AlgebraicInvariants {
            pdim: self.pdim(),
            reg: self.reg(),
            unique_extremal: extremals.len() == 1,
            extremals,
        }
    }
}

const CELL: usize = 4;

/// Betti diagram: column `i`, row `r` holds `β_{i,i+r}` or `-`, followed by
/// a `Tot:` row. Cells are right-aligned in 4 characters.
pub fn render_diagram(graded: &GradedBetti) -> String {
    let pdim = graded.pdim();
    let reg = graded.reg();
    let label = CELL.max(format!("{reg}:").len());
    let width = label + CELL * (pdim + 1);
    let mut out = String::new();
    out.push_str(&" ".repeat(label));
    for i in 0..=pdim {
        out.push_str(&format!("{i:>CELL$}"));
    }
    out.push('\n');
    let rule = "-".repeat(width);
    out.push_str(&rule);
    out.push('\n');
    for r in 0..=reg {
        out.push_str(&format!("{:<label$}", format!("{r}:")));
        for i in 0..=pdim {
            let v = graded.get(i as i64, (i + r) as i64);
            let cell = if v == 0 {
                "-".to_string()
            } else {
                v.to_string()
            };
            out.push_str(&format!("{cell:>CELL$}"));
        }
        out.push('\n');
    }
    out.push_str(&rule);
    out.push('\n');
    out.push_str(&format!("{:<label$}", "Tot:"));
    let totals = graded.totals();
    for i in 0..=pdim {
        out.push_str(&format!("{:>CELL$}", totals.get(i).copied().unwrap_or(0)));
    }
    out.push('\n');
    out
}

/// `K_b(I)`: subsets `F` of `supp(b)` with `x^b / x^F ∈ I`.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if b.n_vars() != ideal.n_vars() {
        return Err(Error::AmbientMismatch {
            expected: ideal.n_vars(),
            found: b.n_vars(),
        });
    }
    if b.n_vars() >= 64 {
        return Err(Error::LabelTooLarge(b.n_vars()));
    }
    let support = b.support();
    let mut faces = Vec::new();
    let mut scratch = b.exponents().to_vec();
    for mask in 0u64..(1 << support.len()) {
        scratch.copy_from_slice(b.exponents());
        let mut bits = 0u64;
        for (k, &v) in support.iter().enumerate() {
            if mask >> k & 1 == 1 {
                scratch[v - 1] -= 1;
                bits |= 1 << v;
            }
        }
        let quotient = Monomial::new(scratch.clone());
        if ideal.contains(&quotient) {
            faces.push(Face::from_bits(bits));
        }
    }
    Ok(SimplicialComplex::from_face_set(support, faces))
}

/// `β_{i,b}(I)` at every lcm-lattice multidegree, with the default generator cap.
pub fn multigraded_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable<Ideal>> {
    multigraded_betti_capped(ideal, field, DEFAULT_GENERATOR_CAP)
}

pub fn multigraded_betti_capped(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: usize,
) -> Result<BettiTable<Ideal>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lattice = ideal.lcm_closure_capped(cap)?;
    let strands: Vec<(Monomial, BTreeMap<isize, usize>)> = lattice
        .into_par_iter()
        .map(|b| {
            let homology = upper_koszul(ideal, &b).map(|k| k.reduced_homology(field));
            homology.map(|h| (b, h))
        })
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    for (b, homology) in strands {
        for (d, dim) in homology {
            entries.insert(((d + 1) as usize, b.clone()), dim as u64);
        }
    }
    Ok(BettiTable::from_entries(ideal.n_vars(), entries))
}

/// `β(R/I)` with the default generator cap.
pub fn quotient_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable<Quotient>> {
    multigraded_betti(ideal, field).map(|t| t.to_quotient())
}
