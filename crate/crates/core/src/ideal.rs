//! Homogeneous ideals and monomial ideals with minimal generators.

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A homogeneous ideal given by generators. Construction enforces that
/// every generator is nonzero and homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub ring: Arc<PolyRing>,
    pub gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if g.homogeneous_degree().is_none() {
                let top = g.degree().unwrap_or(0);
                let low = g.terms().iter().map(|t| t.0.deg()).min().unwrap_or(0);
                return Err(Error::NotHomogeneous {
                    expected: top,
                    found: low,
                });
            }
            if g.nvars() != Some(ring.nvars()) {
                return Err(Error::RingMismatch(format!(
                    "generator in {} variables, ring has {}",
                    g.nvars().unwrap_or(0),
                    ring.nvars()
                )));
            }
        }
        Ok(Ideal { ring, gens })
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Ideal { ring, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Smallest degree among the generators.
    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).min()
    }

    pub fn from_monomial_ideal(ring: Arc<PolyRing>, m: &MonomialIdeal) -> Self {
        let gens = m
            .gens()
            .iter()
            .map(|mono| Polynomial::monomial(mono.clone(), crate::field::Fp::ONE))
            .collect();
        Ideal { ring, gens }
    }
}

/// A monomial ideal stored by its unique minimal generators, sorted
/// ascending under degrevlex for determinism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generating set of monomials.
    pub fn new(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a, b));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    /// (x_lo, ..., x_{hi-1})^power as a monomial ideal in `nvars` variables.
    pub fn power_of_segment(nvars: usize, lo: usize, hi: usize, power: u32) -> Self {
        let seg = hi - lo;
        let gens = monomials_of_degree(seg, power)
            .into_iter()
            .map(|m| {
                let mut exps = vec![0u16; nvars];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[lo + i] = e;
                }
                Monomial::from_exps(&exps)
            })
            .collect();
        MonomialIdeal::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn plus(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn plus_monomial(&self, m: Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(m);
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Colon ideal (self : x_j).
    pub fn quotient_by_var(&self, j: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                if g.exp(j) > 0 {
                    let mut exps = g.exps().to_vec();
                    exps[j] -= 1;
                    Monomial::from_exps(&exps)
                } else {
                    g.clone()
                }
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Image in the quotient by the variables `[lo, nvars)`; generators
    /// involving any killed variable are dropped (absorbed by the
    /// linear generators), the rest survive verbatim.
    pub fn set_vars_to_zero(&self, lo: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| g.supported_in(0, lo))
            .cloned()
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Number of degree-d monomials not in the ideal.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// Strong stability with x0 largest: for every generator m, every
    /// variable x_j dividing m, and every i < j, the swap (m/x_j)*x_i
    /// stays in the ideal.
    pub fn is_stable(&self) -> bool {
        for g in &self.gens {
            for j in 1..self.nvars {
                if g.exp(j) == 0 {
                    continue;
                }
                let mut exps = g.exps().to_vec();
                exps[j] -= 1;
                for i in 0..j {
                    exps[i] += 1;
                    let swapped = Monomial::from_exps(&exps);
                    if !self.contains(&swapped) {
                        return false;
                    }
                    exps[i] -= 1;
                }
            }
        }
        true
    }

    /// Rendered generator list, for reports and error messages.
    pub fn display(&self, ring: &PolyRing) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|m| crate::text::render_monomial(m, ring))
            .collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn minimal_generators_deduplicate() {
        let i = MonomialIdeal::new(3, vec![m(&[2, 0, 0]), m(&[2, 1, 0]), m(&[0, 1, 0])]);
        assert_eq!(i.gens().len(), 2);
        assert!(i.contains(&m(&[2, 1, 1])));
        assert!(!i.contains(&m(&[1, 0, 3])));
    }

    #[test]
    fn power_of_segment_counts() {
        // (x0, x1)^3 in 4 variables has 4 generators
        let i = MonomialIdeal::power_of_segment(4, 0, 2, 3);
        assert_eq!(i.num_gens(), 4);
        assert!(i.gens().iter().all(|g| g.deg() == 3 && g.supported_in(0, 2)));
    }

    #[test]
    fn initial_segment_powers_are_stable() {
        for e in 1..=3usize {
            for r in 0..3u32 {
                let i = MonomialIdeal::power_of_segment(4, 0, e, r + 1);
                assert!(i.is_stable(), "e={e} r={r}");
            }
        }
    }

    #[test]
    fn x1_squared_is_not_stable() {
        let i = MonomialIdeal::new(2, vec![m(&[0, 2])]);
        assert!(!i.is_stable());
    }

    #[test]
    fn stable_with_uv_tail() {
        // (x0,x1)^3 + x0^2*x2^2 is stable, (x0,x1)^3 + x0*x1*x2^2 is not
        let base = MonomialIdeal::power_of_segment(4, 0, 2, 3);
        assert!(base.plus_monomial(m(&[2, 0, 2, 0])).is_stable());
        assert!(!base.plus_monomial(m(&[1, 1, 2, 0])).is_stable());
    }

    #[test]
    fn ideal_rejects_inhomogeneous() {
        let k = PrimeField::new(32003).unwrap();
        let ring = PolyRing::standard(2, k);
        let f = Polynomial::var(2, 0).add(&Polynomial::constant(2, crate::field::Fp::ONE), k);
        assert!(Ideal::new(ring, vec![f]).is_err());
    }

    #[test]
    fn quotient_by_var() {
        let i = MonomialIdeal::new(2, vec![m(&[2, 0])]);
        assert_eq!(i.quotient_by_var(0).gens(), &[m(&[1, 0])]);
    }
}
