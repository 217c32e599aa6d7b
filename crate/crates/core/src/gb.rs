//! Buchberger's algorithm, reduced Groebner bases, initial ideals,
//! elimination, and curve implicitization.

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::ideal::{Ideal, MonomialIdeal};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::MonomialOrder;
use crate::poly::{merge_scaled, Polynomial, Term};
use crate::ring::PolyRing;
use std::cmp::Ordering;

/// An order-tagged Groebner basis. When `reduced` is set the elements
/// are monic, pairwise tail-irreducible, and sorted by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
}

/// Term list sorted strictly descending under the engine's active order.
type Terms = Vec<Term>;

fn to_active(f: &Polynomial, order: MonomialOrder) -> Terms {
    let mut t = f.terms().to_vec();
    if order != MonomialOrder::DegRevLex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

fn from_active(mut t: Terms, order: MonomialOrder) -> Polynomial {
    if order != MonomialOrder::DegRevLex {
        t.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(&b.0, &a.0));
    }
    Polynomial::from_sorted(t)
}

/// f - c * m * g on active-sorted term lists.
fn sub_scaled(f: &Terms, g: &Terms, c: Fp, m: &Monomial, k: PrimeField, order: MonomialOrder) -> Terms {
    merge_scaled(f, g, k.neg(c), Some(m), k, &|a, b| order.cmp(a, b))
}

/// Full normal form: no remaining term is divisible by any leading
/// monomial of the reducers.
fn normal_form_terms(mut f: Terms, reducers: &[Terms], k: PrimeField, order: MonomialOrder) -> Terms {
    let leads: Vec<(&Monomial, Fp)> = reducers
        .iter()
        .map(|g| (&g[0].0, g[0].1))
        .collect();
    let mut out: Terms = Vec::new();
    'outer: while let Some((m, c)) = f.first().cloned() {
        for (gi, (lm, lc)) in leads.iter().enumerate() {
            if lm.divides(&m) {
                let q = lm.div_into(&m).unwrap();
                let factor = k.div(c, *lc).expect("leading coefficient nonzero");
                f = sub_scaled(&f, &reducers[gi], factor, &q, k, order);
                continue 'outer;
            }
        }
        // head irreducible: move it to the output
        out.push((m, c));
        f.remove(0);
    }
    out
}

/// Remainder of f on division by G; no term of the result is divisible
/// by any leading monomial of G, and f - result lies in (G).
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
    k: PrimeField,
) -> Polynomial {
    let reducers: Vec<Terms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_active(g, order))
        .collect();
    if reducers.is_empty() {
        return f.clone();
    }
    let nf = normal_form_terms(to_active(f, order), &reducers, k, order);
    from_active(nf, order)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger with the normal selection strategy (minimal lcm degree
/// first) and both classical criteria. Deterministic pair order.
fn buchberger_raw(gens: Vec<Terms>, k: PrimeField, order: MonomialOrder) -> Vec<Terms> {
    let mut basis: Vec<Terms> = Vec::new();
    for g in gens {
        if !g.is_empty() {
            // keep basis elements monic
            let inv = k.inv(g[0].1).unwrap();
            basis.push(g.iter().map(|(m, c)| (m.clone(), k.mul(*c, inv))).collect());
        }
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push(Pair {
                i,
                j,
                lcm: basis[i][0].0.lcm(&basis[j][0].0),
            });
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree, ties by order on lcm then indices
        let mut best = 0;
        for t in 1..pairs.len() {
            let a = &pairs[t];
            let b = &pairs[best];
            let cmp = a
                .lcm
                .deg()
                .cmp(&b.lcm.deg())
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if cmp == Ordering::Less {
                best = t;
            }
        }
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));
        let (mi, mj) = (&basis[i][0].0, &basis[j][0].0);
        // first criterion: coprime leading monomials
        if mi.gcd_is_one(mj) {
            continue;
        }
        // chain criterion
        let chain = (0..basis.len()).any(|l| {
            l != i
                && l != j
                && basis[l][0].0.divides(&pair.lcm)
                && done.contains(&key(l, i))
                && done.contains(&key(l, j))
        });
        if chain {
            continue;
        }
        // s-polynomial, fully reduced
        let qi = mi.div_into(&pair.lcm).unwrap();
        let qj = mj.div_into(&pair.lcm).unwrap();
        let si: Terms = basis[i].iter().map(|(m, c)| (qi.mul(m), *c)).collect();
        let spoly = sub_scaled(&si, &basis[j], Fp::ONE, &qj, k, order);
        let nf = normal_form_terms(spoly, &basis, k, order);
        if nf.is_empty() {
            continue;
        }
        let inv = k.inv(nf[0].1).unwrap();
        let monic: Terms = nf.iter().map(|(m, c)| (m.clone(), k.mul(*c, inv))).collect();
        let new_idx = basis.len();
        for t in 0..new_idx {
            pairs.push(Pair {
                i: t,
                j: new_idx,
                lcm: basis[t][0].0.lcm(&monic[0].0),
            });
        }
        basis.push(monic);
    }
    basis
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Inter-reduces a Groebner basis into the unique reduced one.
fn reduce_basis(mut basis: Vec<Terms>, k: PrimeField, order: MonomialOrder) -> Vec<Terms> {
    // drop elements whose lead is divisible by another lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            if basis[b][0].0.divides(&basis[a][0].0) {
                // prefer keeping b; on equal leads keep the earlier
                if basis[a][0].0 == basis[b][0].0 && a < b {
                    keep[b] = false;
                } else {
                    keep[a] = false;
                    break;
                }
            }
        }
    }
    let mut kept: Vec<Terms> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, kp)| kp.then_some(g))
        .collect();
    // tail-reduce each against the others until stable
    loop {
        let mut changed = false;
        for idx in 0..kept.len() {
            let others: Vec<Terms> = kept
                .iter()
                .enumerate()
                .filter(|(t, _)| *t != idx)
                .map(|(_, g)| g.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let nf = normal_form_terms(kept[idx].clone(), &others, k, order);
            if nf != kept[idx] {
                assert!(!nf.is_empty(), "reduced GB element vanished");
                let inv = k.inv(nf[0].1).unwrap();
                kept[idx] = nf.iter().map(|(m, c)| (m.clone(), k.mul(*c, inv))).collect();
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    kept
}

/// The unique reduced Groebner basis of the ideal under `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let k = ideal.ring.field;
    let gens: Vec<Terms> = ideal.gens.iter().map(|g| to_active(g, order)).collect();
    let basis = reduce_basis(buchberger_raw(gens, k, order), k, order);
    GroebnerBasis {
        order,
        elements: basis.into_iter().map(|t| from_active(t, order)).collect(),
        reduced: true,
    }
}

/// Groebner engine entry for raw generator lists (used internally by
/// elimination, where inputs need not be homogeneous).
pub(crate) fn buchberger_polys(
    gens: &[Polynomial],
    k: PrimeField,
    order: MonomialOrder,
) -> Vec<Polynomial> {
    let gens: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_active(g, order))
        .collect();
    let basis = reduce_basis(buchberger_raw(gens, k, order), k, order);
    basis.into_iter().map(|t| from_active(t, order)).collect()
}

/// Minimal monomial generators of the ideal of leading monomials.
pub fn initial_ideal(gb: &GroebnerBasis) -> Result<MonomialIdeal> {
    if !gb.reduced {
        return Err(Error::NotGroebnerBasis);
    }
    let nvars = gb
        .elements
        .first()
        .and_then(|f| f.nvars())
        .unwrap_or(0);
    let leads = gb
        .elements
        .iter()
        .map(|f| f.leading_term(gb.order).map(|(m, _)| m.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::new(nvars, leads))
}

/// Membership test via normal form against a Groebner basis.
pub fn in_ideal(f: &Polynomial, gb: &GroebnerBasis, k: PrimeField) -> bool {
    normal_form(f, &gb.elements, gb.order, k).is_zero()
}

/// Two ideals are equal iff their reduced Groebner bases coincide.
pub fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
    let ga = buchberger(a, MonomialOrder::DegRevLex);
    let gb = buchberger(b, MonomialOrder::DegRevLex);
    ga.elements == gb.elements
}

/// dim_k (S/I)_d: the number of degree-d standard monomials of in(I).
pub fn graded_piece_dim(gb: &GroebnerBasis, nvars: usize, d: u32) -> usize {
    let init = initial_ideal(gb).expect("reduced basis");
    monomials_of_degree(nvars, d)
        .iter()
        .filter(|m| !init.contains(m))
        .count()
}

/// Generators of I ∩ k[x_block, ..., x_{N-1}] obtained from a Groebner
/// basis under the block elimination order, re-expressed in the smaller
/// ring. Inputs may be inhomogeneous.
pub fn elimination_ideal_polys(
    gens: &[Polynomial],
    k: PrimeField,
    block: usize,
) -> Vec<Polynomial> {
    let gb = buchberger_polys(gens, k, MonomialOrder::Elimination(block));
    gb.into_iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.restrict(0, block).is_one())
        })
        .map(|g| {
            let terms: Vec<Term> = g
                .terms()
                .iter()
                .map(|(m, c)| (m.drop_first_vars(block), *c))
                .collect();
            Polynomial::from_terms(terms, k)
        })
        .collect()
}

/// Public elimination entry on ideals (block = number of leading
/// variables to eliminate); returns an ideal of the smaller ring.
pub fn elimination_ideal(ideal: &Ideal, block: usize) -> Result<Ideal> {
    let k = ideal.ring.field;
    let gens = elimination_ideal_polys(&ideal.gens, k, block);
    let vars = ideal.ring.vars[block..].to_vec();
    let ring = PolyRing::new(vars, k)?;
    Ideal::new(ring, gens)
}

/// The homogeneous defining ideal of the image of the map
/// P^1 -> P^{m-1}, (s:t) -> (form_0 : ... : form_{m-1}), computed as
/// the elimination of the graph ideal (x_i - form_i). Kernels of maps
/// onto domains are prime, hence saturated.
pub fn implicitize_curve(forms: &[Polynomial], k: PrimeField) -> Result<Ideal> {
    let m = forms.len();
    assert!(m >= 2);
    let deg = forms
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.homogeneous_degree())
        .collect::<Vec<_>>();
    if deg.iter().any(|d| d.is_none()) {
        return Err(Error::Precondition(
            "parametrizing forms must be homogeneous".into(),
        ));
    }
    let degs: Vec<u32> = deg.into_iter().map(|d| d.unwrap()).collect();
    if degs.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Precondition(
            "parametrizing forms must have equal degree".into(),
        ));
    }
    if all_proportional(forms, k) {
        return Err(Error::DegenerateImage);
    }
    // graph ideal in k[s, t, x_0..x_{m-1}]
    let total = 2 + m;
    let mut graph: Vec<Polynomial> = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        // x_i - f(s, t), with s, t mapped to the first two variables
        let shifted: Vec<Term> = f
            .terms()
            .iter()
            .map(|(mono, c)| {
                let mut exps = vec![0u16; total];
                exps[0] = mono.exp(0);
                exps[1] = mono.exp(1);
                (Monomial::from_exps(&exps), *c)
            })
            .collect();
        let fs = Polynomial::from_terms(shifted, k);
        let xi = Polynomial::var(total, 2 + i);
        graph.push(xi.sub(&fs, k));
    }
    let gens = elimination_ideal_polys(&graph, k, 2);
    let ring = PolyRing::standard(m, k);
    Ideal::new(ring, gens)
}

fn all_proportional(forms: &[Polynomial], k: PrimeField) -> bool {
    let nonzero: Vec<&Polynomial> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.len() <= 1 {
        return true;
    }
    let f0 = nonzero[0];
    nonzero.iter().skip(1).all(|f| {
        // f proportional to f0 iff f*lc(f0) == f0*lc(f)
        let (m0, c0) = f0.leading_term(MonomialOrder::DegRevLex).unwrap();
        let (m1, c1) = f.leading_term(MonomialOrder::DegRevLex).unwrap();
        m0 == m1 && f.scale(c0, k) == f0.scale(c1, k)
    })
}
