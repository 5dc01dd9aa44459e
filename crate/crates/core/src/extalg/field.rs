//! Prime field GF(p) arithmetic.
//!
//! Residues are stored as `u32` in `[0, p)`. The modulus is restricted to
//! primes below 2^16 so that `a * b + c` of three residues fits in a `u32`,
//! which lets the elimination kernels use a single precomputed reduction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default coefficient prime.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldContext {
    p: u32,
    // Lemire's fastmod constant: u64::MAX / p + 1.
    magic: u64,
}

impl FieldContext {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || p >= 1 << 16 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldContext { p, magic: u64::MAX / p as u64 + 1 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary `u32`.
    #[inline(always)]
    pub fn reduce(&self, a: u32) -> u32 {
        let low = self.magic.wrapping_mul(a as u64);
        ((low as u128 * self.p as u128) >> 64) as u32
    }

    pub fn from_i64(&self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    #[inline(always)]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline(always)]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline(always)]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a * b)
    }

    /// `a + b * c`
    #[inline(always)]
    pub fn mul_add(&self, a: u32, b: u32, c: u32) -> u32 {
        self.reduce(a + b * c)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, (self.p - 2) as u64)
    }

    pub fn sign(&self, negative: bool) -> u32 {
        if negative {
            self.p - 1
        } else {
            1
        }
    }
}

impl Default for FieldContext {
    fn default() -> Self {
        FieldContext::new(DEFAULT_PRIME).unwrap()
    }
}

impl TryFrom<u32> for FieldContext {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        FieldContext::new(p)
    }
}

impl From<FieldContext> for u32 {
    fn from(f: FieldContext) -> u32 {
        f.p
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composites_and_large() {
        assert!(FieldContext::new(1).is_err());
        assert!(FieldContext::new(32004).is_err());
        assert!(FieldContext::new(65537).is_err());
        assert!(FieldContext::new(2).is_ok());
        assert!(FieldContext::new(101).is_ok());
    }

    #[test]
    fn inverse_small_field() {
        let f = FieldContext::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    proptest! {
        #[test]
        fn fastmod_matches_rem(a in any::<u32>(), pi in 0usize..4) {
            let p = [2u32, 101, 32003, 65521][pi];
            let f = FieldContext::new(p).unwrap();
            prop_assert_eq!(f.reduce(a), a % p);
        }

        #[test]
        fn mul_add_matches_u64(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
            let f = FieldContext::default();
            let want = ((a as u64 + b as u64 * c as u64) % 32003) as u32;
            prop_assert_eq!(f.mul_add(a, b, c), want);
        }
    }
}
