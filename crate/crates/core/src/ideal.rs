//! Monomials, monomial ideals with minimal generators, and the lcm lattice.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;

/// Default cap on generator count for lcm-lattice enumeration.
pub const DEFAULT_GENERATOR_CAP: usize = 18;

/// An exponent vector `b` in `N^n`, standing for `x^b`. Ordered
/// lexicographically on the exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `x_i^e`, with `i` counted from 1.
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(n);
        m.0[i - 1] = e;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i`, with `i` counted from 1.
    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `lcm(self, m) / m`, the generator contributed to `(self) : m`.
    pub fn colon(&self, m: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&m.0)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// Variables with positive exponent, counted from 1.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.0.len()).filter(|&i| self.0[i - 1] > 0).collect()
    }

    /// Pushes a monomial forward along a label map: variable `k` goes to
    /// `labels[k - 1]` in a ring with `n` variables.
    pub fn embed(&self, labels: &[usize], n: usize) -> Self {
        let mut out = Self::one(n);
        for (k, &e) in self.0.iter().enumerate() {
            out.0[labels[k] - 1] = e;
        }
        out
    }

    /// Comma-separated exponents, as used in record output.
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", k + 1)?,
                _ => write!(f, "x{}^{}", k + 1, e)?,
            }
        }
        Ok(())
    }
}

/// A monomial ideal stored by its minimal generators in lexicographic order.
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `monomials` into an ideal of `k[x_1..x_n]`.
    pub fn new(n: usize, monomials: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = monomials.iter().find(|m| m.n_vars() != n) {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: bad.n_vars(),
            });
        }
        Ok(Self {
            n,
            generators: minimalize(monomials),
        })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            generators: Vec::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Ideal membership of a monomial.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// The colon ideal `I : m`, generated by `lcm(g, m) / m`.
    pub fn colon(&self, m: &Monomial) -> Self {
        Self {
            n: self.n,
            generators: minimalize(self.generators.iter().map(|g| g.colon(m)).collect()),
        }
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Self {
        let lcms = self
            .generators
            .iter()
            .flat_map(|g| other.generators.iter().map(move |h| g.lcm(h)))
            .collect();
        Self {
            n: self.n,
            generators: minimalize(lcms),
        }
    }

    /// Lcms of all nonempty subsets of generators, in lexicographic order.
    /// Rejects ideals with more than [`DEFAULT_GENERATOR_CAP`] generators.
    pub fn lcm_closure(&self) -> Result<Vec<Monomial>> {
        self.lcm_closure_capped(DEFAULT_GENERATOR_CAP)
    }

    pub fn lcm_closure_capped(&self, cap: usize) -> Result<Vec<Monomial>> {
        let count = self.generators.len();
        if count > cap {
            return Err(Error::GeneratorCap {
                count,
                cap,
                estimate: (1u128 << count.min(127)) - 1,
            });
        }
        // Joining the lattice built so far with each new generator reaches
        // lcm(S) for every subset S.
        let mut lattice: BTreeSet<Monomial> = BTreeSet::new();
        for g in &self.generators {
            let joins: Vec<Monomial> = lattice.iter().map(|m| m.lcm(g)).collect();
            lattice.extend(joins);
            lattice.insert(g.clone());
        }
        Ok(lattice.into_iter().collect())
    }

    /// Lcm of all generators; `1` for the zero ideal.
    pub fn top_lcm(&self) -> Monomial {
        self.generators
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Monomial::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Divisibility-minimal antichain of `monomials`, deduplicated, in
/// lexicographic order.
pub fn minimalize(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort_by_key(Monomial::degree);
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in monomials {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

/// `I(D) = (x_i x_j^{w_j} : (i, j) an edge of D)` in `k[x_1..x_n]`.
pub fn edge_ideal(d: &WeightedOrientedGraph) -> MonomialIdeal {
    let n = d.n();
    let gens: Vec<Monomial> = d
        .edges()
        .map(|(i, j)| {
            let mut m = Monomial::var_power(n, j, d.weight(j));
            m.0[i - 1] += 1;
            m
        })
        .collect();
    let count = gens.len();
    let ideal = MonomialIdeal {
        n,
        generators: minimalize(gens),
    };
    debug_assert_eq!(
        ideal.generators.len(),
        count,
        "edge generators must be incomparable"
    );
    ideal
}
