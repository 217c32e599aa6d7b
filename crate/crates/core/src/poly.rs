//! Sparse multivariate polynomials over F_p.
//!
//! Terms are kept sorted strictly descending under degrevlex; that is the
//! canonical storage form regardless of which order a computation uses.
//! Engines that run under another order re-sort internally.

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::linalg::FpMat;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

pub type Term = (Monomial, Fp);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    terms: Vec<Term>,
}

const CANON: MonomialOrder = MonomialOrder::DegRevLex;

/// Merges term lists sorted descending under `cmp`, combining equal
/// monomials and dropping zero coefficients. `scale` multiplies `b`.
pub(crate) fn merge_scaled(
    a: &[Term],
    b: &[Term],
    b_coef: Fp,
    b_mono: Option<&Monomial>,
    k: PrimeField,
    cmp: &dyn Fn(&Monomial, &Monomial) -> Ordering,
) -> Vec<Term> {
    let shift = |m: &Monomial| match b_mono {
        Some(s) => s.mul(m),
        None => m.clone(),
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<(Monomial, Fp)> = None;
    loop {
        if bj.is_none() && j < b.len() {
            let c = k.mul(b[j].1, b_coef);
            bj = Some((shift(&b[j].0), c));
            j += 1;
        }
        match (i < a.len(), &bj) {
            (false, None) => break,
            (true, None) => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            (false, Some(_)) => {
                let (m, c) = bj.take().unwrap();
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
            (true, Some((bm, bc))) => match cmp(&a[i].0, bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    if !bc.is_zero() {
                        out.push((bm.clone(), *bc));
                    }
                    bj = None;
                }
                Ordering::Equal => {
                    let c = k.add(a[i].1, *bc);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    bj = None;
                }
            },
        }
    }
    out
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Fp) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    pub fn monomial(m: Monomial, c: Fp) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: vec![(m, c)] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Polynomial {
            terms: vec![(Monomial::var(nvars, i), Fp::ONE)],
        }
    }

    /// Builds a polynomial from arbitrary terms, canonicalizing.
    pub fn from_terms(mut terms: Vec<Term>, k: PrimeField) -> Self {
        terms.sort_by(|x, y| CANON.cmp(&y.0, &x.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = k.add(last.1, c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { terms: out }
    }

    /// Wraps terms already sorted descending under degrevlex with no
    /// zero coefficients or duplicates.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| CANON.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|t| t.0.nvars())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.deg()).max()
    }

    /// The common degree when all terms share one; None for zero or
    /// inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.deg();
        if self.terms.iter().all(|t| t.0.deg() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// The order-maximal term. Constant time for degrevlex.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(&Monomial, Fp)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match order {
            MonomialOrder::DegRevLex => Ok((&self.terms[0].0, self.terms[0].1)),
            _ => {
                let t = self
                    .terms
                    .iter()
                    .max_by(|a, b| order.cmp(&a.0, &b.0))
                    .expect("nonzero");
                Ok((&t.0, t.1))
            }
        }
    }

    pub fn add(&self, other: &Polynomial, k: PrimeField) -> Polynomial {
        Polynomial {
            terms: merge_scaled(&self.terms, &other.terms, Fp::ONE, None, k, &|a, b| {
                CANON.cmp(a, b)
            }),
        }
    }

    pub fn sub(&self, other: &Polynomial, k: PrimeField) -> Polynomial {
        Polynomial {
            terms: merge_scaled(
                &self.terms,
                &other.terms,
                k.neg(Fp::ONE),
                None,
                k,
                &|a, b| CANON.cmp(a, b),
            ),
        }
    }

    pub fn scale(&self, c: Fp, k: PrimeField) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), k.mul(*x, c)))
                .collect(),
        }
    }

    pub fn mul_by_monomial(&self, m: &Monomial, c: Fp, k: PrimeField) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, x)| (m.mul(t), k.mul(*x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, k: PrimeField) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        // multiply by the shorter factor termwise
        let (short, long) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: Vec<Term> = Vec::new();
        for (m, c) in &short.terms {
            acc = merge_scaled(&acc, &long.terms, *c, Some(m), k, &|a, b| CANON.cmp(a, b));
        }
        Polynomial { terms: acc }
    }

    pub fn pow(&self, e: u32, k: PrimeField, nvars: usize) -> Polynomial {
        let mut acc = Polynomial::constant(nvars, Fp::ONE);
        for _ in 0..e {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// Makes the degrevlex-leading coefficient 1.
    pub fn monic(&self, k: PrimeField) -> Result<Polynomial> {
        let lc = self.terms.first().ok_or(Error::ZeroPolynomial)?.1;
        Ok(self.scale(k.inv(lc)?, k))
    }

    /// Substitutes x_i -> sum_j M[i][j] x_j. Degree and homogeneity are
    /// preserved; apply(M2) after apply(M1) equals apply(M1 * M2).
    pub fn apply_linear_change(&self, mat: &FpMat, k: PrimeField) -> Result<Polynomial> {
        if !mat.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let n = mat.rows;
        // linear forms and their power caches
        let forms: Vec<Polynomial> = (0..n)
            .map(|i| {
                let terms: Vec<Term> = (0..n)
                    .filter(|&j| !mat.get(i, j).is_zero())
                    .map(|j| (Monomial::var(n, j), mat.get(i, j)))
                    .collect();
                Polynomial::from_terms(terms, k)
            })
            .collect();
        let maxdeg = self.degree().unwrap_or(0) as usize;
        let mut powers: Vec<Vec<Polynomial>> = forms
            .iter()
            .map(|f| vec![Polynomial::constant(n, Fp::ONE), f.clone()])
            .collect();
        for pc in powers.iter_mut() {
            while pc.len() <= maxdeg {
                let next = pc.last().unwrap().mul(&pc[1], k);
                pc.push(next);
            }
        }
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(n, *c);
            for i in 0..n {
                let e = m.exp(i);
                if e > 0 {
                    prod = prod.mul(&powers[i][e as usize], k);
                }
            }
            acc = acc.add(&prod, k);
        }
        Ok(acc)
    }

    /// Coefficient of a specific monomial.
    pub fn coeff(&self, m: &Monomial) -> Fp {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or(Fp::ZERO, |(_, c)| *c)
    }

    /// Constant coefficient (degree-0 term).
    pub fn constant_coeff(&self) -> Fp {
        self.terms
            .last()
            .filter(|(m, _)| m.is_one())
            .map_or(Fp::ZERO, |(_, c)| *c)
    }

    /// Is this a nonzero constant?
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Re-expresses the terms in a larger ring (extra trailing variables).
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend_vars(extra), *c))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Wrng;

    fn k() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn x(i: usize) -> Polynomial {
        Polynomial::var(3, i)
    }

    #[test]
    fn add_zero_is_identity() {
        let k = k();
        let f = x(0).add(&x(1).scale(k.el(5), k), k);
        assert_eq!(f.add(&Polynomial::zero(), k), f);
    }

    #[test]
    fn difference_of_squares() {
        let k = k();
        let f = x(0).add(&x(1), k);
        let g = x(0).sub(&x(1), k);
        let sq = x(0).mul(&x(0), k).sub(&x(1).mul(&x(1), k), k);
        assert_eq!(f.mul(&g, k), sq);
    }

    #[test]
    fn scale_inverse_cancels_in_product() {
        let k = k();
        let mut rng = Wrng::from_seed(7);
        for _ in 0..20 {
            let c = rng.nonzero(k);
            let f = random_poly(&mut rng, k, 3, 3, 4);
            let g = random_poly(&mut rng, k, 3, 2, 4);
            let lhs = f.scale(c, k).mul(&g.scale(k.inv(c).unwrap(), k), k);
            assert_eq!(lhs, f.mul(&g, k));
        }
    }

    fn random_poly(rng: &mut Wrng, k: PrimeField, nvars: usize, deg: u32, nterms: usize) -> Polynomial {
        let monos = crate::monomial::monomials_of_degree(nvars, deg);
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let m = monos[rng.below(monos.len() as u64) as usize].clone();
            terms.push((m, rng.field_element(k)));
        }
        Polynomial::from_terms(terms, k)
    }

    #[test]
    fn leading_term_degrevlex() {
        let k = k();
        // x0*x2^4 - x1^5: the degrevlex leading term is -x1^5
        let f = Polynomial::from_terms(
            vec![
                (Monomial::from_exps(&[1, 0, 4]), Fp::ONE),
                (Monomial::from_exps(&[0, 5, 0]), k.neg(Fp::ONE)),
            ],
            k,
        );
        let (m, c) = f.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m, &Monomial::from_exps(&[0, 5, 0]));
        assert_eq!(c, k.neg(Fp::ONE));
    }

    #[test]
    fn leading_term_of_monomial_is_itself() {
        let k = k();
        let m = Monomial::from_exps(&[2, 1, 0]);
        let f = Polynomial::monomial(m.clone(), k.el(9));
        let (lm, lc) = f.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(lm, &m);
        assert_eq!(lc, k.el(9));
    }

    #[test]
    fn leading_term_multiplicative() {
        let k = k();
        let mut rng = Wrng::from_seed(3);
        for o in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            for _ in 0..20 {
                let f = random_poly(&mut rng, k, 3, 3, 3);
                let g = random_poly(&mut rng, k, 3, 2, 3);
                if f.is_zero() || g.is_zero() {
                    continue;
                }
                let (fm, fc) = f.leading_term(o).unwrap();
                let (gm, gc) = g.leading_term(o).unwrap();
                let prod = f.mul(&g, k);
                let (pm, pc) = prod.leading_term(o).unwrap();
                assert_eq!(pm, &fm.mul(gm));
                assert_eq!(pc, k.mul(fc, gc));
            }
        }
    }

    #[test]
    fn zero_poly_has_no_leading_term() {
        assert!(Polynomial::zero().leading_term(MonomialOrder::DegRevLex).is_err());
    }

    #[test]
    fn homogeneity_flags() {
        let k = k();
        let f = x(0).mul(&x(1), k).add(&x(2).mul(&x(2), k), k);
        assert_eq!(f.homogeneous_degree(), Some(2));
        let g = f.add(&x(0), k);
        assert_eq!(g.homogeneous_degree(), None);
        assert!(!g.is_homogeneous());
        assert!(Polynomial::zero().is_homogeneous());
    }

    #[test]
    fn identity_change_fixes_polynomial() {
        let k = k();
        let f = x(0).mul(&x(1), k).add(&x(2).mul(&x(2), k), k);
        let id = FpMat::identity(k, 3);
        assert_eq!(f.apply_linear_change(&id, k).unwrap(), f);
    }

    #[test]
    fn swap_change_swaps_variables() {
        let k = k();
        let mut m = FpMat::zero(k, 3, 3);
        m.set(0, 1, Fp::ONE);
        m.set(1, 0, Fp::ONE);
        m.set(2, 2, Fp::ONE);
        assert_eq!(x(0).apply_linear_change(&m, k).unwrap(), x(1));
    }

    #[test]
    fn singular_change_rejected() {
        let k = k();
        let m = FpMat::zero(k, 3, 3);
        assert!(x(0).apply_linear_change(&m, k).is_err());
    }

    #[test]
    fn inverse_change_roundtrip_on_random_cubics() {
        let k = k();
        let mut rng = Wrng::from_seed(11);
        for trial in 0..100 {
            let mut mat = FpMat::zero(k, 3, 3);
            loop {
                for i in 0..3 {
                    for j in 0..3 {
                        mat.set(i, j, rng.field_element(k));
                    }
                }
                if mat.is_invertible() {
                    break;
                }
            }
            let inv = mat.inverse().unwrap();
            let f = random_poly(&mut rng, k, 3, 3, 5);
            let g = f
                .apply_linear_change(&mat, k)
                .unwrap()
                .apply_linear_change(&inv, k)
                .unwrap();
            assert_eq!(g, f, "trial {trial}");
            // homogeneity and degree preserved
            let h = f.apply_linear_change(&mat, k).unwrap();
            assert_eq!(h.homogeneous_degree(), f.homogeneous_degree());
        }
    }

    #[test]
    fn composition_law() {
        let k = k();
        let mut rng = Wrng::from_seed(5);
        let mut m1 = FpMat::zero(k, 3, 3);
        let mut m2 = FpMat::zero(k, 3, 3);
        loop {
            for i in 0..3 {
                for j in 0..3 {
                    m1.set(i, j, rng.field_element(k));
                    m2.set(i, j, rng.field_element(k));
                }
            }
            if m1.is_invertible() && m2.is_invertible() {
                break;
            }
        }
        let f = random_poly(&mut rng, k, 3, 3, 5);
        let lhs = f
            .apply_linear_change(&m1, k)
            .unwrap()
            .apply_linear_change(&m2, k)
            .unwrap();
        let rhs = f.apply_linear_change(&m1.mul(&m2), k).unwrap();
        assert_eq!(lhs, rhs);
    }
}
