//! Exact arithmetic in a prime field F_p and the seeded random stream
//! backing every "generic" choice in the pipeline.

use crate::error::{Error, Result};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

/// Default characteristic: a conventional "generic" prime, large enough
/// that random linear changes of coordinates behave generically.
pub const DEFAULT_CHAR: u64 = 32003;

/// An element of F_p, stored as the canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp(pub u64);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The prime field F_p. Cheap to copy; all element operations go
/// through this context so the modulus is never ambient state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 37u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// Checks the genericity headroom `p > nvars + 2` on top of primality.
    pub fn for_ring(p: u64, nvars: usize) -> Result<Self> {
        let f = Self::new(p)?;
        if p <= nvars as u64 + 2 {
            return Err(Error::ModulusTooSmall {
                p,
                min: nvars as u64 + 2,
            });
        }
        Ok(f)
    }

    pub fn characteristic(self) -> u64 {
        self.p
    }

    /// Canonical residue of a signed integer.
    pub fn el(self, v: i64) -> Fp {
        let m = v.rem_euclid(self.p as i64);
        Fp(m as u64)
    }

    pub fn add(self, a: Fp, b: Fp) -> Fp {
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(self, a: Fp, b: Fp) -> Fp {
        Fp(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    pub fn neg(self, a: Fp) -> Fp {
        Fp(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(self, a: Fp, b: Fp) -> Fp {
        Fp((a.0 as u128 * b.0 as u128 % self.p as u128) as u64)
    }

    pub fn pow(self, a: Fp, mut e: u64) -> Fp {
        let mut base = a;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; errors on zero input.
    pub fn inv(self, a: Fp) -> Result<Fp> {
        if a.is_zero() {
            return Err(Error::DivisionByZero(self.p));
        }
        Ok(self.pow(a, self.p - 2))
    }

    pub fn div(self, a: Fp, b: Fp) -> Result<Fp> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Balanced signed representative in `(-p/2, p/2]`, used for display.
    pub fn signed(self, a: Fp) -> i64 {
        if a.0 > self.p / 2 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }
}

/// Deterministic random stream. Every "generic" choice in the pipeline
/// draws from an explicit one of these, threaded by the caller.
#[derive(Debug, Clone)]
pub struct Wrng(ChaCha8Rng);

impl Wrng {
    pub fn from_seed(seed: u64) -> Self {
        Wrng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform draw in `[0, n)` by rejection; exact and stream-stable.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.0.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Uniform field element.
    pub fn field_element(&mut self, k: PrimeField) -> Fp {
        Fp(self.below(k.characteristic()))
    }

    /// Uniform nonzero field element.
    pub fn nonzero(&mut self, k: PrimeField) -> Fp {
        Fp(1 + self.below(k.characteristic() - 1))
    }

    /// Derives an independent stream for a subtask, deterministically.
    pub fn fork(&mut self, salt: u64) -> Wrng {
        Wrng::from_seed(self.next_u64() ^ salt.wrapping_mul(0x9e3779b97f4a7c15))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn fdefault() -> PrimeField {
        PrimeField::new(DEFAULT_CHAR).unwrap()
    }

    #[test]
    fn multiplicative_identity() {
        let k = fdefault();
        for x in [0u64, 1, 2, 17, 32002] {
            assert_eq!(k.mul(Fp::ONE, Fp(x)), Fp(x));
        }
    }

    #[test]
    fn additive_inverse() {
        let k = fdefault();
        for x in [1u64, 2, 17, 32002] {
            assert_eq!(k.add(Fp(x), k.neg(Fp(x))), Fp::ZERO);
        }
    }

    #[test]
    fn two_times_three_mod_five() {
        let k = f5();
        assert_eq!(k.mul(Fp(2), Fp(3)), Fp(1));
    }

    #[test]
    fn inverse_of_one() {
        let k = fdefault();
        assert_eq!(k.inv(Fp::ONE).unwrap(), Fp::ONE);
    }

    #[test]
    fn inverse_of_two_mod_five() {
        let k = f5();
        assert_eq!(k.inv(Fp(2)).unwrap(), Fp(3));
    }

    #[test]
    fn inverse_is_exact_on_sample() {
        // brute-force check a·inv(a) = 1 over a stride through F_32003
        let k = fdefault();
        let mut a = 1u64;
        while a < DEFAULT_CHAR {
            let inv = k.inv(Fp(a)).unwrap();
            assert_eq!(k.mul(Fp(a), inv), Fp::ONE, "a = {a}");
            a += 7;
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(fdefault().inv(Fp::ZERO).is_err());
    }

    #[test]
    fn rng_is_deterministic() {
        let mut a = Wrng::from_seed(42);
        let mut b = Wrng::from_seed(42);
        for _ in 0..32 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn distinct_seeds_give_distinct_streams() {
        let mut a = Wrng::from_seed(1);
        let mut b = Wrng::from_seed(2);
        let va: Vec<u64> = (0..16).map(|_| a.next_u64()).collect();
        let vb: Vec<u64> = (0..16).map(|_| b.next_u64()).collect();
        assert_ne!(va, vb);
    }

    #[test]
    fn residue_frequencies_mod_five() {
        // 10^4 draws mod 5: each bucket within 5 sigma of 2000,
        // sigma = sqrt(10^4 * 1/5 * 4/5) = 40.
        let k = f5();
        let mut rng = Wrng::from_seed(0);
        let mut counts = [0i64; 5];
        for _ in 0..10_000 {
            counts[rng.field_element(k).0 as usize] += 1;
        }
        for (r, c) in counts.iter().enumerate() {
            assert!((c - 2000).abs() <= 200, "residue {r} count {c}");
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rejects_small_modulus_for_ring() {
        assert!(PrimeField::for_ring(5, 4).is_err());
        assert!(PrimeField::for_ring(101, 4).is_ok());
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u64..DEFAULT_CHAR, b in 0u64..DEFAULT_CHAR, c in 0u64..DEFAULT_CHAR) {
            let k = fdefault();
            let (a, b, c) = (Fp(a), Fp(b), Fp(c));
            prop_assert_eq!(k.add(a, k.add(b, c)), k.add(k.add(a, b), c));
            prop_assert_eq!(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
            prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
            prop_assert_eq!(k.add(a, b), k.add(b, a));
            prop_assert_eq!(k.mul(a, b), k.mul(b, a));
            if !a.is_zero() {
                prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), Fp::ONE);
            }
        }
    }
}
