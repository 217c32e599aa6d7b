//! Monomial orders: degree reverse lexicographic (the default throughout),
//! lexicographic, and block elimination orders.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A total multiplicative order on monomials with 1 minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Degree first; ties broken by the smaller exponent at the last
    /// variable where the monomials differ ("last declared variable"
    /// is the revlex-cheapest, matching the convention where x_{n+e}
    /// comes last).
    DegRevLex,
    /// First nonzero entry of the exponent difference decides.
    Lex,
    /// Lex on the first `block` variables, then degrevlex on the rest.
    /// Eliminates the first block.
    Elimination(usize),
}

fn cmp_degrevlex(a: &[u16], b: &[u16], adeg: u32, bdeg: u32) -> Ordering {
    match adeg.cmp(&bdeg) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            // smaller exponent in the latest differing variable wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Total-order comparison. Callers must pass monomials from the same
    /// ring; `compare_monomials` is the checked public entry point.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::DegRevLex => cmp_degrevlex(a.exps(), b.exps(), a.deg(), b.deg()),
            MonomialOrder::Lex => cmp_lex(a.exps(), b.exps()),
            MonomialOrder::Elimination(block) => {
                let (a1, a2) = a.exps().split_at(block.min(a.nvars()));
                let (b1, b2) = b.exps().split_at(block.min(b.nvars()));
                match cmp_lex(a1, b1) {
                    Ordering::Equal => {
                        let d2a = a2.iter().map(|&e| e as u32).sum();
                        let d2b = b2.iter().map(|&e| e as u32).sum();
                        cmp_degrevlex(a2, b2, d2a, d2b)
                    }
                    o => o,
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(b) => format!("elimination({b})"),
        }
    }
}

/// Checked comparison: errors when the monomials live in different rings.
pub fn compare_monomials(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch(format!(
            "monomials with {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_of_degree;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x0^2 vs x0*x1: equal degree, x0*x1 has the larger exponent in
        // the later variable, so x0^2 is greater.
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        // degree dominates: x2^3 > x0*x1
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
        // x0*x2^4 vs x1^5: equal degree 5; the difference has its last
        // nonzero entry at x2 and it is positive, so x0*x2^4 is smaller.
        assert_eq!(o.cmp(&m(&[1, 0, 4]), &m(&[0, 5, 0])), Ordering::Less);
    }

    #[test]
    fn any_order_is_reflexive() {
        for o in [
            MonomialOrder::DegRevLex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination(2),
        ] {
            let x = m(&[3, 1, 2, 0]);
            assert_eq!(o.cmp(&x, &x), Ordering::Equal);
        }
    }

    #[test]
    fn lex_first_difference() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::Elimination(2);
        // any monomial involving the first block beats any without it
        assert_eq!(o.cmp(&m(&[0, 1, 0, 0]), &m(&[0, 0, 9, 9])), Ordering::Greater);
        // within zero block part: degrevlex on the remainder
        assert_eq!(o.cmp(&m(&[0, 0, 2, 0]), &m(&[0, 0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn mismatched_rings_error() {
        assert!(compare_monomials(MonomialOrder::Lex, &m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..5, 4).prop_map(|v| Monomial::from_exps(&v))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::DegRevLex),
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Elimination(2)),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(a in arb_mono(), b in arb_mono(), c in arb_mono(), o in arb_order()) {
            // antisymmetry and totality
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            // multiplicativity: a > b implies ac > bc
            let ac = a.mul(&c);
            let bc = b.mul(&c);
            prop_assert_eq!(o.cmp(&ac, &bc), o.cmp(&a, &b));
            // 1 is minimal
            let one = Monomial::one(4);
            prop_assert_ne!(o.cmp(&one, &a), Ordering::Greater);
        }

        #[test]
        fn order_transitive_on_sample(d in 1u32..5, o in arb_order()) {
            let ms = monomials_of_degree(3, d);
            let mut sorted = ms.clone();
            sorted.sort_by(|a, b| o.cmp(a, b));
            for w in sorted.windows(2) {
                prop_assert_ne!(o.cmp(&w[0], &w[1]), Ordering::Greater);
            }
        }
    }
}
