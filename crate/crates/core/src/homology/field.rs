use crate::error::{Error, Result};

/// Prime field `GF(p)`. Elements are residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self { p: 32003 }
    }
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(self.p) - u64::from(b)) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (u64::from(a) * u64::from(b) % u64::from(self.p)) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    /// `±1` for a boundary sign.
    #[inline]
    pub fn sign(&self, negative: bool) -> u32 {
        if negative {
            self.p - 1
        } else {
            1 % self.p
        }
    }

    /// Multiplicative inverse by Fermat; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        let mut base = u64::from(a % self.p);
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        let p = u64::from(self.p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
