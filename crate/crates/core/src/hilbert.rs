//! Hilbert series, Hilbert polynomials, dimension, degree, and
//! arithmetic genus, all exact over the integers.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};

/// Integer polynomials in t as dense coefficient vectors.
pub type ZPoly = Vec<i64>;

fn zp_trim(p: &mut ZPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn zp_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    zp_trim(&mut out);
    out
}

fn zp_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(&mut out);
    out
}

fn zp_shift(a: &ZPoly, s: usize) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; s];
    out.extend_from_slice(a);
    out
}

pub fn zp_eval_at_one(a: &ZPoly) -> i64 {
    a.iter().sum()
}

/// Divides by (1 - t) when the value at 1 vanishes.
fn zp_div_one_minus_t(a: &ZPoly) -> Option<ZPoly> {
    if zp_eval_at_one(a) != 0 {
        return None;
    }
    // a(t) = (1 - t) q(t) with q_i = a_0 + ... + a_i
    let mut q = Vec::with_capacity(a.len().saturating_sub(1));
    let mut acc = 0i64;
    for (i, c) in a.iter().enumerate() {
        if i + 1 == a.len() {
            break;
        }
        acc += c;
        q.push(acc);
    }
    let mut q = q;
    zp_trim(&mut q);
    Some(q)
}

/// Numerator N(t) with HS(S/M) = N(t)/(1-t)^nvars, by the pivot
/// recursion N(M) = N(M + (x)) + t N(M : x) on the most frequent
/// variable among the generators.
pub fn hilbert_numerator(m: &MonomialIdeal) -> ZPoly {
    let gens = m.gens();
    if gens.is_empty() {
        return vec![1];
    }
    // complete intersection base case: pairwise disjoint supports
    let disjoint = (0..gens.len()).all(|i| {
        (i + 1..gens.len()).all(|j| gens[i].gcd_is_one(&gens[j]))
    });
    if disjoint {
        let mut acc = vec![1i64];
        for g in gens {
            let mut f = vec![0i64; g.deg() as usize + 1];
            f[0] = 1;
            f[g.deg() as usize] -= 1;
            acc = zp_mul(&acc, &f);
        }
        return acc;
    }
    // pivot: variable dividing the most generators, smallest index on ties
    let n = m.nvars();
    let mut counts = vec![0usize; n];
    for g in gens {
        for i in 0..n {
            if g.exp(i) > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = (0..n).max_by_key(|&i| (counts[i], n - i)).unwrap();
    let plus = m.plus_monomial(Monomial::var(n, pivot));
    let colon = m.quotient_by_var(pivot);
    zp_add(&hilbert_numerator(&plus), &zp_shift(&hilbert_numerator(&colon), 1))
}

/// Hilbert series data of S/M: raw numerator over (1-t)^nvars, reduced
/// numerator Q with Q(1) != 0 over (1-t)^dim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: ZPoly,
    pub nvars: usize,
    pub reduced_numerator: ZPoly,
    /// Krull dimension of S/M.
    pub dim: usize,
}

pub fn hilbert_series_from_numerator(numerator: ZPoly, nvars: usize) -> Result<HilbertSeries> {
    if numerator.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let mut q = numerator.clone();
    let mut cancelled = 0usize;
    while cancelled < nvars {
        match zp_div_one_minus_t(&q) {
            Some(next) => {
                q = next;
                cancelled += 1;
            }
            None => break,
        }
    }
    Ok(HilbertSeries {
        numerator,
        nvars,
        reduced_numerator: q,
        dim: nvars - cancelled,
    })
}

pub fn hilbert_series(m: &MonomialIdeal) -> Result<HilbertSeries> {
    hilbert_series_from_numerator(hilbert_numerator(m), m.nvars())
}

impl HilbertSeries {
    /// deg(S/M) = Q(1).
    pub fn degree(&self) -> i64 {
        zp_eval_at_one(&self.reduced_numerator)
    }

    /// Hilbert function value: coefficient of t^d in N(t)/(1-t)^nvars.
    /// Powers of t below the shift contribute nothing, so this is the
    /// truncated (not generalized) binomial sum.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(j, _)| d >= *j as i64)
            .map(|(j, c)| c * binom_int(d - j as i64 + n - 1, n - 1))
            .sum()
    }
}

/// dim/codim/degree bookkeeping: Krull dimension of S/I, projective
/// dimension dim X = Krull - 1, codimension e = N - Krull, degree Q(1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionData {
    pub krull_dim: usize,
    pub dim_x: i64,
    pub codim: usize,
    pub degree: i64,
}

pub fn dimension_degree(hs: &HilbertSeries) -> DimensionData {
    DimensionData {
        krull_dim: hs.dim,
        dim_x: hs.dim as i64 - 1,
        codim: hs.nvars - hs.dim,
        degree: hs.degree(),
    }
}

/// Generalized binomial coefficient C(m, k) for integer m (possibly
/// negative), as the falling-factorial polynomial value. C(-1, 1) = -1.
pub fn binom_int(m: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    for i in 0..k {
        num *= (m - i) as i128;
    }
    let mut den: i128 = 1;
    for i in 1..=k {
        den *= i as i128;
    }
    (num / den) as i64
}

/// Exact rational, for power-basis coefficients of Hilbert polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Frac {
        assert!(den != 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Frac {
            num: (sign * num / g as i128) as i64,
            den: (sign * den / g as i128) as i64,
        }
    }

    pub fn zero() -> Frac {
        Frac { num: 0, den: 1 }
    }

    pub fn add(self, o: Frac) -> Frac {
        Frac::new(
            self.num as i128 * o.den as i128 + o.num as i128 * self.den as i128,
            self.den as i128 * o.den as i128,
        )
    }

    pub fn mul_int(self, c: i64) -> Frac {
        Frac::new(self.num as i128 * c as i128, self.den as i128)
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A Hilbert polynomial, stored exactly in the binomial basis
/// C(T + n - j, n) as (shift j, integer coefficient) pairs, with the
/// expanded power-basis coefficients alongside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPolynomial {
    /// dimension of X (degree of the polynomial when nonzero)
    pub n: usize,
    pub binomial_basis: Vec<(i64, i64)>,
    pub power_basis: Vec<Frac>,
}

fn power_basis_from_binomial(n: usize, terms: &[(i64, i64)]) -> Vec<Frac> {
    // C(T + n - j, n) = prod_{i=1..n} (T + n - j - i + 1) / n!
    let mut acc = vec![Frac::zero(); n + 1];
    for &(j, c) in terms {
        // expand the falling product into integer coefficients
        let mut poly: Vec<i128> = vec![1];
        for i in 1..=n as i64 {
            let a = n as i64 - j - i + 1;
            // poly * (T + a)
            let mut next = vec![0i128; poly.len() + 1];
            for (d, &co) in poly.iter().enumerate() {
                next[d + 1] += co;
                next[d] += co * a as i128;
            }
            poly = next;
        }
        let nfact: i128 = (1..=n as i128).product();
        for (d, &co) in poly.iter().enumerate() {
            acc[d] = acc[d].add(Frac::new(co * c as i128, nfact));
        }
    }
    while acc.len() > 1 && acc.last() == Some(&Frac::zero()) {
        acc.pop();
    }
    acc
}

impl HilbertPolynomial {
    pub fn from_binomial(n: usize, mut terms: Vec<(i64, i64)>) -> Self {
        terms.retain(|t| t.1 != 0);
        terms.sort();
        // combine equal shifts
        let mut combined: Vec<(i64, i64)> = Vec::new();
        for (j, c) in terms {
            if let Some(last) = combined.last_mut() {
                if last.0 == j {
                    last.1 += c;
                    continue;
                }
            }
            combined.push((j, c));
        }
        combined.retain(|t| t.1 != 0);
        let power_basis = power_basis_from_binomial(n, &combined);
        HilbertPolynomial {
            n,
            binomial_basis: combined,
            power_basis,
        }
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.binomial_basis
            .iter()
            .map(|&(j, c)| c * binom_int(t + self.n as i64 - j, self.n as i64))
            .sum()
    }

    /// Polynomials are equal iff their power-basis expansions agree.
    pub fn same_polynomial(&self, other: &HilbertPolynomial) -> bool {
        self.power_basis == other.power_basis
    }
}

/// P(T) = sum_j Q_j C(T - j + dim - 1, dim - 1) from the reduced
/// numerator; requires positive Krull dimension.
pub fn hilbert_polynomial(hs: &HilbertSeries) -> Result<HilbertPolynomial> {
    if hs.dim == 0 {
        return Err(Error::DimensionZero);
    }
    let n = hs.dim - 1;
    let terms: Vec<(i64, i64)> = hs
        .reduced_numerator
        .iter()
        .enumerate()
        .map(|(j, &c)| (j as i64, c))
        .collect();
    Ok(HilbertPolynomial::from_binomial(n, terms))
}

/// The closed-form Hilbert polynomial for subschemes of almost maximal
/// degree and almost maximal arithmetic depth:
/// P(T) = sum_{j=0..r} C(e-1+j, e-1) C(T+n-j, n) - C(T-reg-1+n, n).
pub fn cor34_hilbert_polynomial(e: usize, r: u32, reg_r: u32, n: usize) -> HilbertPolynomial {
    let mut terms: Vec<(i64, i64)> = (0..=r as i64)
        .map(|j| (j, binom_int(e as i64 - 1 + j, e as i64 - 1)))
        .collect();
    terms.push((reg_r as i64 + 1, -1));
    HilbertPolynomial::from_binomial(n, terms)
}

/// g(X) = (-1)^n (P(0) - 1).
pub fn arithmetic_genus(p: &HilbertPolynomial) -> i64 {
    let sign = if p.n % 2 == 0 { 1 } else { -1 };
    sign * (p.eval(0) - 1)
}

/// The paper-stated closed form for the genus, kept verbatim so the
/// discrepancy with the direct definition can be detected and flagged:
/// sum_{j=n+1..r} C(e-1+j, e-1) C(j-1, n) - C(reg, n) + (-1)^{n+1}.
pub fn genus_closed_form(e: usize, r: u32, reg_r: u32, n: usize) -> i64 {
    let mut acc = 0i64;
    for j in (n as i64 + 1)..=(r as i64) {
        acc += binom_int(e as i64 - 1 + j, e as i64 - 1) * binom_int(j - 1, n as i64);
    }
    acc -= binom_int(reg_r as i64, n as i64);
    acc + if n % 2 == 0 { -1 } else { 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::monomial::Monomial;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn numerator_of_zero_ideal() {
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(4)), vec![1]);
    }

    #[test]
    fn numerator_of_power_ideal_degree() {
        // M = (x0,...,x_{e-1})^{r+1}: Q(1) = C(e+r, e)
        for e in 1..=3usize {
            for r in 0..=3u32 {
                let nvars = e + 2;
                let i = MonomialIdeal::power_of_segment(nvars, 0, e, r + 1);
                let hs = hilbert_series(&i).unwrap();
                assert_eq!(hs.dim, nvars - e);
                assert_eq!(
                    hs.degree(),
                    binom_int(e as i64 + r as i64, e as i64),
                    "e={e} r={r}"
                );
            }
        }
    }

    #[test]
    fn hilbert_function_matches_standard_monomials() {
        let i = MonomialIdeal::new(
            4,
            vec![m(&[2, 0, 0, 0]), m(&[1, 1, 0, 0]), m(&[0, 3, 1, 0])],
        );
        let hs = hilbert_series(&i).unwrap();
        for d in 0..8u32 {
            assert_eq!(
                hs.hilbert_function(d as i64),
                i.standard_monomials(d).len() as i64,
                "degree {d}"
            );
        }
    }

    #[test]
    fn dimension_of_full_ring() {
        let hs = hilbert_series(&MonomialIdeal::zero(4)).unwrap();
        let dd = dimension_degree(&hs);
        assert_eq!(dd.krull_dim, 4);
        assert_eq!(dd.degree, 1);
    }

    #[test]
    fn unit_ideal_is_flagged() {
        let i = MonomialIdeal::new(3, vec![m(&[0, 0, 0])]);
        assert!(matches!(hilbert_series(&i), Err(Error::UnitIdeal)));
    }

    #[test]
    fn p1_hilbert_polynomial() {
        let hs = hilbert_series(&MonomialIdeal::zero(2)).unwrap();
        let p = hilbert_polynomial(&hs).unwrap();
        // P(T) = T + 1
        assert_eq!(p.eval(0), 1);
        assert_eq!(p.eval(5), 6);
        assert_eq!(p.power_basis, vec![Frac { num: 1, den: 1 }, Frac { num: 1, den: 1 }]);
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binom_int(-1, 1), -1);
        assert_eq!(binom_int(-1, 2), 1);
        assert_eq!(binom_int(3, 5), 0);
        assert_eq!(binom_int(5, 2), 10);
        assert_eq!(binom_int(7, 0), 1);
        assert_eq!(binom_int(4, -1), 0);
    }

    #[test]
    fn cor34_fixture_values() {
        // (e=2, r=2, reg=3, n=1) -> 5T + 1; (e=2, r=3, reg=4, n=1) -> 9T - 6
        let p47 = cor34_hilbert_polynomial(2, 2, 3, 1);
        assert_eq!((p47.eval(0), p47.eval(1), p47.eval(10)), (1, 6, 51));
        let p48 = cor34_hilbert_polynomial(2, 3, 4, 1);
        assert_eq!((p48.eval(0), p48.eval(1), p48.eval(10)), (-6, 3, 84));
    }

    #[test]
    fn cor34_leading_coefficient_sweep() {
        // leading coefficient * n! = C(e+r, e) - 1
        for e in 1..=3usize {
            for r in 1..=3u32 {
                for n in 1..=2usize {
                    let p = cor34_hilbert_polynomial(e, r, r + 2, n);
                    let lead = *p.power_basis.last().unwrap();
                    let nfact: i64 = (1..=n as i64).product();
                    let expect = binom_int(e as i64 + r as i64, e as i64) - 1;
                    assert_eq!(lead.mul_int(nfact), Frac { num: expect, den: 1 });
                }
            }
        }
    }

    #[test]
    fn genus_values_and_closed_form_flag() {
        let p47 = cor34_hilbert_polynomial(2, 2, 3, 1);
        assert_eq!(arithmetic_genus(&p47), 0);
        assert_eq!(genus_closed_form(2, 2, 3, 1), 1);
        let p48 = cor34_hilbert_polynomial(2, 3, 4, 1);
        assert_eq!(arithmetic_genus(&p48), 7);
        assert_eq!(genus_closed_form(2, 3, 4, 1), 8);
    }

    #[test]
    fn rational_normal_curve_genus() {
        // twisted cubic: h-vector (1, 2), dim 2 -> P(T) = 3T + 1, g = 0
        let hs = hilbert_series_from_numerator(vec![1, 2], 2).unwrap();
        let hs = HilbertSeries {
            nvars: 4,
            numerator: zp_mul(&vec![1, 2], &vec![1, -2, 1]),
            reduced_numerator: hs.numerator.clone(),
            dim: 2,
        };
        let p = hilbert_polynomial(&hs).unwrap();
        assert_eq!(p.eval(0), 1);
        assert_eq!(p.eval(4), 13);
        assert_eq!(arithmetic_genus(&p), 0);
    }
}
