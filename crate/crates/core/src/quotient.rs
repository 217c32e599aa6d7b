//! Ideal quotients, intersections, and saturation, built on module
//! syzygies so every intermediate object stays homogeneous.

use crate::error::{Error, Result};
use crate::gb::same_ideal;
use crate::ideal::Ideal;
use crate::modules::syzygies_of;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

const SATURATION_CAP: usize = 50;

/// (I : f) = { g : g f in I }, via syzygies of [gens(I), f]: the
/// f-coordinates of the syzygies generate the quotient.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if ideal.gens.is_empty() {
        return Ok(ideal.clone());
    }
    let k = ideal.ring.field;
    let mut gens: Vec<Vec<Polynomial>> = ideal.gens.iter().map(|g| vec![g.clone()]).collect();
    gens.push(vec![f.clone()]);
    let last = gens.len() - 1;
    let syz = syzygies_of(&gens, 1, MonomialOrder::DegRevLex, k);
    let mut out: Vec<Polynomial> = syz
        .into_iter()
        .map(|s| s[last].clone())
        .filter(|p| !p.is_zero())
        .collect();
    out = crate::gb::buchberger_polys(&out, k, MonomialOrder::DegRevLex);
    Ideal::new(ideal.ring.clone(), out)
}

/// Intersection of two ideals via syzygies of the concatenated
/// generator lists.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let k = a.ring.field;
    if a.gens.is_empty() || b.gens.is_empty() {
        return Ok(Ideal::zero(a.ring.clone()));
    }
    let mut gens: Vec<Vec<Polynomial>> = a.gens.iter().map(|g| vec![g.clone()]).collect();
    gens.extend(b.gens.iter().map(|g| vec![g.clone()]));
    let syz = syzygies_of(&gens, 1, MonomialOrder::DegRevLex, k);
    let na = a.gens.len();
    let mut out = Vec::new();
    for s in syz {
        let mut acc = Polynomial::zero();
        for (c, g) in s.iter().take(na).zip(&a.gens) {
            acc = acc.add(&c.mul(g, k), k);
        }
        if !acc.is_zero() {
            out.push(acc);
        }
    }
    let out = crate::gb::buchberger_polys(&out, k, MonomialOrder::DegRevLex);
    Ideal::new(a.ring.clone(), out)
}

/// (I : J) for an ideal J, as the intersection of the single quotients.
pub fn ideal_quotient_by_ideal(ideal: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in &j.gens {
        let q = ideal_quotient(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q)?,
        });
    }
    acc.ok_or_else(|| Error::Precondition("quotient by the zero ideal".into()))
}

/// (I : J^infinity): iterate single quotient steps until they
/// stabilize; capped, with a hard error past the cap.
pub fn saturation(ideal: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut cur = ideal.clone();
    for _ in 0..SATURATION_CAP {
        let next = ideal_quotient_by_ideal(&cur, j)?;
        if same_ideal(&next, &cur) {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::SaturationDiverged(SATURATION_CAP))
}

/// The irrelevant maximal ideal (x_0, ..., x_{N-1}).
pub fn irrelevant_ideal(ideal: &Ideal) -> Ideal {
    let n = ideal.nvars();
    Ideal {
        ring: ideal.ring.clone(),
        gens: (0..n).map(|i| Polynomial::var(n, i)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::PolyRing;
    use crate::text::parse_polynomial;

    fn setup() -> (PrimeField, std::sync::Arc<PolyRing>) {
        let k = PrimeField::new(32003).unwrap();
        (k, PolyRing::standard(4, k))
    }

    fn poly(r: &PolyRing, s: &str) -> Polynomial {
        parse_polynomial(s, r, 1).unwrap()
    }

    #[test]
    fn quotient_of_square_by_variable() {
        let (_, r) = setup();
        let i = Ideal::new(r.clone(), vec![poly(&r, "x0^2")]).unwrap();
        let q = ideal_quotient(&i, &poly(&r, "x0")).unwrap();
        let expect = Ideal::new(r.clone(), vec![poly(&r, "x0")]).unwrap();
        assert!(same_ideal(&q, &expect));
    }

    #[test]
    fn quotient_by_zero_errors() {
        let (_, r) = setup();
        let i = Ideal::new(r, vec![]).unwrap();
        assert!(ideal_quotient(&i, &Polynomial::zero()).is_err());
    }

    #[test]
    fn saturation_strips_irrelevant_component() {
        // (x0) ∩ m^2 = x0 * m; saturating by m recovers (x0)
        let (_, r) = setup();
        let gens = vec![
            poly(&r, "x0^2"),
            poly(&r, "x0*x1"),
            poly(&r, "x0*x2"),
            poly(&r, "x0*x3"),
        ];
        let i = Ideal::new(r.clone(), gens).unwrap();
        let m = irrelevant_ideal(&i);
        let sat = saturation(&i, &m).unwrap();
        let expect = Ideal::new(r, vec![poly(&sat.ring, "x0")]).unwrap();
        assert!(same_ideal(&sat, &expect));
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let (_, r) = setup();
        let a = Ideal::new(r.clone(), vec![poly(&r, "x0")]).unwrap();
        let b = Ideal::new(r.clone(), vec![poly(&r, "x1")]).unwrap();
        let c = intersect(&a, &b).unwrap();
        let expect = Ideal::new(r, vec![poly(&c.ring, "x0*x1")]).unwrap();
        assert!(same_ideal(&c, &expect));
    }
}
