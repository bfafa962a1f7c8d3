//! Monomial orders for the Groebner engine.

use crate::poly::Monomial;
use std::cmp::Ordering;

/// A term order on exponent vectors of a fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic on the variable order.
    Lex,
    /// Elimination (block) order: the listed variables dominate. Both the
    /// block and the remaining variables are compared by grevlex, so the
    /// restriction to block-free monomials is plain grevlex.
    Block(Vec<usize>),
    /// Graded by a weight per variable, ties broken by grevlex. Weight
    /// vectors with zeros (parameter and auxiliaries) give the
    /// degree-compatible orders used for homogenization by space degree.
    WeightedGrevlex(Vec<u64>),
}

fn grevlex_on(a: &Monomial, b: &Monomial, idxs: &[usize]) -> Ordering {
    let da: u32 = idxs.iter().map(|&i| a.exp(i)).sum();
    let db: u32 = idxs.iter().map(|&i| b.exp(i)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for &i in idxs.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Grevlex => a.cmp(b),
            MonomialOrder::Lex => {
                for i in 0..a.len() {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(block) => {
                match grevlex_on(a, b, block) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let rest: Vec<usize> =
                    (0..a.len()).filter(|i| !block.contains(i)).collect();
                grevlex_on(a, b, &rest)
            }
            MonomialOrder::WeightedGrevlex(w) => {
                let wd = |m: &Monomial| -> u64 {
                    m.exps().iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum()
                };
                match wd(a).cmp(&wd(b)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                a.cmp(b)
            }
        }
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_vs_grevlex() {
        // vars (x, y, z); lex x > y^5
        let x = m(&[1, 0, 0]);
        let y5 = m(&[0, 5, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y5), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&x, &y5), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates() {
        // block {z}: any monomial containing z beats any z-free monomial
        let ord = MonomialOrder::Block(vec![2]);
        let z = m(&[0, 0, 1]);
        let x9 = m(&[9, 0, 0]);
        assert_eq!(ord.cmp(&z, &x9), Ordering::Greater);
        // z-free monomials compare by grevlex
        let xy = m(&[1, 1, 0]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(ord.cmp(&xy, &y2), MonomialOrder::Grevlex.cmp(&xy, &y2));
    }

    #[test]
    fn weighted_respects_weights() {
        // vars (x, t) with weights (1, 0): x beats any power of t
        let ord = MonomialOrder::WeightedGrevlex(vec![1, 0]);
        let x = m(&[1, 0]);
        let t4 = m(&[0, 4]);
        assert_eq!(ord.cmp(&x, &t4), Ordering::Greater);
        // equal weighted degree falls back to grevlex
        let xt = m(&[1, 1]);
        assert_eq!(ord.cmp(&xt, &x), Ordering::Greater);
    }
}
