//! Monomials as dense exponent vectors with cached total degree.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A monomial in a fixed number of variables. Exponents are dense;
/// the total degree is cached and kept consistent by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps: SmallVec<[u16; 8]> = smallvec::smallvec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m.deg += 1;
        m
    }

    pub fn pow(&self, e: u16) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self.exps.iter().map(|a| a * e).collect();
        Monomial {
            exps,
            deg: self.deg * e as u32,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when the division is exact.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Largest variable index with positive exponent, or None for 1.
    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Smallest variable index with positive exponent, or None for 1.
    pub fn min_index(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// True when every variable with positive exponent lies in `[lo, hi)`.
    pub fn supported_in(&self, lo: usize, hi: usize) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || (lo <= i && i < hi))
    }

    /// Part of the monomial supported on `[lo, hi)`, padded to full length.
    pub fn restrict(&self, lo: usize, hi: usize) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &e)| if lo <= i && i < hi { e } else { 0 })
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    /// Exponent of x_j set to zero.
    pub fn without_var(&self, j: usize) -> Monomial {
        let mut m = self.clone();
        m.deg -= m.exps[j] as u32;
        m.exps[j] = 0;
        m
    }

    /// Extends the exponent vector with `extra` trailing zero slots.
    pub fn extend_vars(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Keeps only the last `keep` variables (for elimination maps).
    pub fn drop_first_vars(&self, drop: usize) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self.exps[drop..].iter().copied().collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }
}

/// All monomials of the given total degree in `nvars` variables, in a
/// deterministic (lexicographic on exponent vectors, descending) order.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn rec(cur: &mut Vec<u16>, i: usize, left: u32, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(cur, i + 1, left - e, out);
        }
    }
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial::from_exps(&[]));
        }
        return out;
    }
    rec(&mut cur, 0, deg, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_exponent_sum() {
        let m = Monomial::from_exps(&[1, 0, 4, 2]);
        assert_eq!(m.deg(), 7);
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exps(&[2, 1, 0]);
        let b = Monomial::from_exps(&[1, 1, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.div_into(&a).unwrap(), Monomial::from_exps(&[1, 0, 0]));
        assert!(!a.divides(&b));
        let c = Monomial::from_exps(&[0, 2, 1]);
        assert_eq!(a.lcm(&c), Monomial::from_exps(&[2, 2, 1]));
        assert!(!a.gcd_is_one(&c));
        assert!(Monomial::from_exps(&[1, 0, 0]).gcd_is_one(&Monomial::from_exps(&[0, 0, 3])));
    }

    #[test]
    fn enumeration_counts_match_binomials() {
        // C(d + n - 1, n - 1) monomials of degree d in n variables
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(2, 5).len(), 6);
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
    }

    #[test]
    fn support_helpers() {
        let m = Monomial::from_exps(&[2, 0, 1, 0]);
        assert_eq!(m.max_index(), Some(2));
        assert_eq!(m.min_index(), Some(0));
        assert!(!m.supported_in(0, 2));
        assert_eq!(m.restrict(0, 2), Monomial::from_exps(&[2, 0, 0, 0]));
        assert_eq!(m.restrict(2, 4), Monomial::from_exps(&[0, 0, 1, 0]));
    }
}
