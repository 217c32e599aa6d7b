//! Elements of free modules S^r and module-level Groebner machinery:
//! normal forms with standard-representation tracking, Buchberger for
//! submodules, and syzygy computation for arbitrary generator lists.

use crate::field::{Fp, PrimeField};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use std::cmp::Ordering;

/// One term of a free-module element: component, monomial, coefficient.
pub type ModTerm = (u32, Monomial, Fp);

/// Module element, terms sorted strictly descending under the active
/// module order.
pub type ModElem = Vec<ModTerm>;

/// A total order on module terms (component, monomial).
pub trait ModOrd {
    fn cmp_term(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering;
}

/// Position-over-term with smaller component greater, monomial ties by
/// the ring order. Eliminates low-numbered components first composed
/// blockwise, which is exactly what the syzygy extraction needs.
pub struct Pot(pub MonomialOrder);

impl ModOrd for Pot {
    fn cmp_term(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.0.cmp(a.1, b.1))
    }
}

/// Schreyer order induced by generator leads one level down. Terms
/// compare by their images (monomial times the full descent monomial of
/// the generator) under the ring order; ties resolve along the descent
/// path, earlier components winning, deepest level first.
pub struct Schreyer<'a> {
    pub base: MonomialOrder,
    pub desc_mono: &'a [Monomial],
    pub desc_path: &'a [Vec<u32>],
}

impl<'a> ModOrd for Schreyer<'a> {
    fn cmp_term(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        let ia = a.0 as usize;
        let ib = b.0 as usize;
        let ma = a.1.mul(&self.desc_mono[ia]);
        let mb = b.1.mul(&self.desc_mono[ib]);
        self.base
            .cmp(&ma, &mb)
            .then_with(|| {
                // smaller component along the path is greater
                for (pa, pb) in self.desc_path[ia].iter().zip(&self.desc_path[ib]) {
                    match pa.cmp(pb) {
                        Ordering::Equal => {}
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            })
    }
}

pub fn sort_elem(mut e: ModElem, ord: &dyn ModOrd) -> ModElem {
    e.sort_by(|a, b| ord.cmp_term((b.0, &b.1), (a.0, &a.1)));
    e
}

/// a - c * m * b, both sorted descending under `ord`.
pub fn sub_scaled(
    a: &ModElem,
    b: &ModElem,
    c: Fp,
    m: &Monomial,
    k: PrimeField,
    ord: &dyn ModOrd,
) -> ModElem {
    let neg = k.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.push(a[i].clone());
            i += 1;
            continue;
        }
        let bt = (b[j].0, m.mul(&b[j].1), k.mul(b[j].2, neg));
        if i == a.len() {
            if !bt.2.is_zero() {
                out.push(bt);
            }
            j += 1;
            continue;
        }
        match ord.cmp_term((a[i].0, &a[i].1), (bt.0, &bt.1)) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                if !bt.2.is_zero() {
                    out.push(bt);
                }
                j += 1;
            }
            Ordering::Equal => {
                let s = k.add(a[i].2, bt.2);
                if !s.is_zero() {
                    out.push((a[i].0, a[i].1.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full normal form. When `record` is set, also returns the standard
/// representation: the list of (reducer index, monomial, coefficient)
/// subtracted along the way, so that
/// input = sum_i c_i m_i g_{r_i} + remainder.
pub fn normal_form(
    mut f: ModElem,
    reducers: &[ModElem],
    k: PrimeField,
    ord: &dyn ModOrd,
    record: bool,
) -> (ModElem, Vec<(usize, Monomial, Fp)>) {
    let mut rep = Vec::new();
    let mut out: ModElem = Vec::new();
    'outer: while let Some(t) = f.first().cloned() {
        for (gi, g) in reducers.iter().enumerate() {
            let (gc, gm, gcoef) = (&g[0].0, &g[0].1, g[0].2);
            if *gc == t.0 && gm.divides(&t.1) {
                let q = gm.div_into(&t.1).unwrap();
                let factor = k.div(t.2, gcoef).expect("lead coefficient nonzero");
                f = sub_scaled(&f, g, factor, &q, k, ord);
                if record {
                    rep.push((gi, q, factor));
                }
                continue 'outer;
            }
        }
        out.push(t);
        f.remove(0);
    }
    (out, rep)
}

/// Buchberger at module level; returns a (not necessarily reduced)
/// Groebner basis with monic leads. Pairs only form inside a common
/// lead component.
pub fn buchberger(gens: Vec<ModElem>, k: PrimeField, ord: &dyn ModOrd) -> Vec<ModElem> {
    let mut basis: Vec<ModElem> = Vec::new();
    for g in gens {
        if g.is_empty() {
            continue;
        }
        let inv = k.inv(g[0].2).unwrap();
        basis.push(
            g.iter()
                .map(|(c, m, x)| (*c, m.clone(), k.mul(*x, inv)))
                .collect(),
        );
    }
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            if basis[i][0].0 == basis[j][0].0 {
                pairs.push((i, j, basis[i][0].1.lcm(&basis[j][0].1)));
            }
        }
    }
    let mut done: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    while !pairs.is_empty() {
        let mut best = 0;
        for t in 1..pairs.len() {
            let a = &pairs[t];
            let b = &pairs[best];
            if a.2
                .deg()
                .cmp(&b.2.deg())
                .then_with(|| MonomialOrder::DegRevLex.cmp(&a.2, &b.2))
                .then_with(|| (a.0, a.1).cmp(&(b.0, b.1)))
                == Ordering::Less
            {
                best = t;
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        done.insert((i, j));
        // chain criterion within the component
        let comp = basis[i][0].0;
        let chain = (0..basis.len()).any(|l| {
            l != i
                && l != j
                && basis[l][0].0 == comp
                && basis[l][0].1.divides(&lcm)
                && done.contains(&sorted_key(l, i))
                && done.contains(&sorted_key(l, j))
        });
        if chain {
            continue;
        }
        let qi = basis[i][0].1.div_into(&lcm).unwrap();
        let qj = basis[j][0].1.div_into(&lcm).unwrap();
        let si: ModElem = basis[i]
            .iter()
            .map(|(c, m, x)| (*c, qi.mul(m), *x))
            .collect();
        let spoly = sub_scaled(&si, &basis[j], Fp::ONE, &qj, k, ord);
        let (nf, _) = normal_form(spoly, &basis, k, ord, false);
        if nf.is_empty() {
            continue;
        }
        let inv = k.inv(nf[0].2).unwrap();
        let monic: ModElem = nf
            .iter()
            .map(|(c, m, x)| (*c, m.clone(), k.mul(*x, inv)))
            .collect();
        let new = basis.len();
        for t in 0..new {
            if basis[t][0].0 == monic[0].0 {
                pairs.push((t, new, basis[t][0].1.lcm(&monic[0].1)));
            }
        }
        basis.push(monic);
    }
    basis
}

fn sorted_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Converts a vector of polynomials (one per component of S^r) into a
/// module element.
pub fn from_polys(polys: &[Polynomial], ord: &dyn ModOrd) -> ModElem {
    let mut e: ModElem = Vec::new();
    for (c, p) in polys.iter().enumerate() {
        for (m, x) in p.terms() {
            e.push((c as u32, m.clone(), *x));
        }
    }
    sort_elem(e, ord)
}

/// Splits a module element of S^r into its component polynomials.
pub fn to_polys(e: &ModElem, rank: usize, k: PrimeField) -> Vec<Polynomial> {
    let mut buckets: Vec<Vec<(Monomial, Fp)>> = vec![Vec::new(); rank];
    for (c, m, x) in e {
        buckets[*c as usize].push((m.clone(), *x));
    }
    buckets
        .into_iter()
        .map(|t| Polynomial::from_terms(t, k))
        .collect()
}

/// Syzygies of an arbitrary list of elements of S^f: embeds each
/// generator g_i as (g_i, e_i) in S^f (+) S^len, computes a Groebner
/// basis under an order eliminating the first block, and returns the
/// elements with vanishing first block as elements of S^len.
pub fn syzygies_of(
    gens: &[Vec<Polynomial>],
    f_rank: usize,
    ring_order: MonomialOrder,
    k: PrimeField,
) -> Vec<Vec<Polynomial>> {
    let n = gens.len();
    let ord = Pot(ring_order);
    let nvars = gens
        .iter()
        .flat_map(|g| g.iter())
        .find_map(|p| p.nvars())
        .unwrap_or(0);
    let mut aug: Vec<ModElem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut e: ModElem = Vec::new();
        for (c, p) in g.iter().enumerate() {
            for (m, x) in p.terms() {
                e.push((c as u32, m.clone(), *x));
            }
        }
        e.push(((f_rank + i) as u32, Monomial::one(nvars), Fp::ONE));
        aug.push(sort_elem(e, &ord));
    }
    let gb = buchberger(aug, k, &ord);
    let mut out = Vec::new();
    for e in gb {
        if e.iter().all(|(c, _, _)| *c as usize >= f_rank) {
            let shifted: ModElem = e
                .into_iter()
                .map(|(c, m, x)| (c - f_rank as u32, m, x))
                .collect();
            out.push(to_polys(&shifted, n, k));
        }
    }
    out
}
