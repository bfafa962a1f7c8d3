//! Groebner-basis engine: Buchberger's algorithm with the coprime and chain
//! criteria (Gebauer-Moeller pair update), normal forms, elimination,
//! saturation and the staircase counts behind every dimension argument in
//! this crate.
//!
//! Everything is deterministic for a fixed input and order: pairs are
//! selected by the normal strategy (smallest lcm, ties by generator index)
//! and reducers by basis position.

mod ops;
mod order;

pub use ops::{parameter_shift, principal, staircase_coordinates, Staircase};
pub use order::MonomialOrder;

use crate::poly::{Monomial, PolyError, Polynomial, Rational, VarSet};
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("ideal is not zero-dimensional (dimension {dimension})")]
    NotZeroDimensional { dimension: i64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Polynomial ideal with a chosen term order and cached reduced basis.
#[derive(Debug)]
pub struct Ideal {
    vars: Arc<VarSet>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            vars: self.vars.clone(),
            generators: self.generators.clone(),
            order: self.order.clone(),
            gb,
        }
    }
}

/// Leading term under an arbitrary order (grevlex takes the cached fast path).
fn lead<'p>(p: &'p Polynomial, order: &MonomialOrder) -> Option<(&'p Monomial, &'p Rational)> {
    match order {
        MonomialOrder::Grevlex => p.leading_grevlex(),
        _ => p
            .terms()
            .max_by(|(a, _), (b, _)| order.cmp(a, b)),
    }
}

/// Fully reduce `p` modulo `basis`: no term of the result is divisible by any
/// basis leading monomial. Reducers are tried in basis order.
fn reduce_full(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let vars = p.varset().clone();
    let leads: Vec<(Monomial, Rational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = lead(g, order).expect("basis elements are nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut work = p.clone();
    let mut out = Polynomial::zero(&vars);
    'outer: while !work.is_zero() {
        let (wm, wc) = {
            let (m, c) = lead(&work, order).expect("nonzero");
            (m.clone(), c.clone())
        };
        for (g, (gm, gc)) in basis.iter().zip(&leads) {
            if let Some(q) = wm.try_div(gm) {
                let factor = &wc / gc;
                work = work.try_sub(&g.mul_term(&q, &factor)).expect("same varset");
                continue 'outer;
            }
        }
        // leading term is irreducible: move it to the result
        let t = Polynomial::from_terms(&vars, [(wm.clone(), wc.clone())]);
        out = out.try_add(&t).expect("same varset");
        work = work.try_sub(&t).expect("same varset");
    }
    out
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = lead(f, order).expect("nonzero");
    let (gm, gc) = lead(g, order).expect("nonzero");
    let l = fm.lcm(gm);
    let fq = l.try_div(fm).unwrap();
    let gq = l.try_div(gm).unwrap();
    let a = f.mul_term(&fq, &fc.recip());
    let b = g.mul_term(&gq, &gc.recip());
    a.try_sub(&b).expect("same varset")
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Gebauer-Moeller update of the pending pair set for a new basis element.
fn update_pairs(
    pairs: &mut Vec<Pair>,
    basis: &[Polynomial],
    t: usize,
    order: &MonomialOrder,
) {
    let lm = |k: usize| lead(&basis[k], order).expect("nonzero").0;
    let lm_t = lm(t).clone();
    let lcm_with = |k: usize| lm(k).lcm(&lm_t);

    // candidate pairs (i, t), pruned by the lcm-divisibility criterion
    let mut kept: Vec<usize> = Vec::new();
    let candidates: Vec<usize> = (0..t).collect();
    for &i in &candidates {
        let l_i = lcm_with(i);
        let coprime = lm(i).is_coprime(&lm_t);
        let dominated = candidates.iter().any(|&j| {
            if j == i {
                return false;
            }
            let l_j = lcm_with(j);
            if !l_j.divides(&l_i) {
                return false;
            }
            if l_j != l_i {
                return true;
            }
            // equal lcm: keep only the first
            j < i && kept.contains(&j)
        });
        if coprime || !dominated {
            kept.push(i);
        }
    }
    // coprime pairs are dropped outright (product criterion) after having
    // served to dominate others above
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|&i| !lm(i).is_coprime(&lm_t))
        .map(|i| Pair { lcm: lcm_with(i), i, j: t })
        .collect();

    // chain criterion on the old pairs
    pairs.retain(|p| {
        let l = &p.lcm;
        !(lm_t.divides(l) && lcm_with(p.i) != *l && lcm_with(p.j) != *l)
    });
    pairs.extend(new_pairs);
}

/// Buchberger's algorithm; returns the raw (non-reduced) basis.
fn buchberger_raw(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        basis.push(g.primitive());
        update_pairs(&mut pairs, &basis, basis.len() - 1, order);
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm, ties by (i, j)
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp(&a.lcm, &b.lcm)
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            })
            .map(|(k, _)| k)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order);
        let r = reduce_full(&s, &basis, order);
        if !r.is_zero() {
            basis.push(r.primitive());
            update_pairs(&mut pairs, &basis, basis.len() - 1, order);
        }
    }
    basis
}

/// Minimalize and inter-reduce a basis into the unique reduced basis:
/// monic elements, pairwise non-divisible leading monomials, fully reduced
/// tails, sorted ascending by leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        let la = lead(a, order).expect("nonzero").0;
        let lb = lead(b, order).expect("nonzero").0;
        order.cmp(la, lb)
    });
    // minimal generating set of the leading-term ideal
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lg = lead(&g, order).expect("nonzero").0.clone();
        if !minimal
            .iter()
            .any(|h| lead(h, order).expect("nonzero").0.divides(&lg))
        {
            minimal.push(g);
        }
    }
    // tail reduction against the others
    let snapshot = minimal.clone();
    let mut out = Vec::with_capacity(minimal.len());
    for (k, g) in snapshot.iter().enumerate() {
        let others: Vec<Polynomial> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, h)| h.clone())
            .collect();
        let red = reduce_full(g, &others, order);
        debug_assert!(!red.is_zero());
        let lc = lead(&red, order).expect("nonzero").1.clone();
        out.push(red.scale(&lc.recip()));
    }
    out.sort_by(|a, b| {
        let la = lead(a, order).expect("nonzero").0;
        let lb = lead(b, order).expect("nonzero").0;
        order.cmp(la, lb)
    });
    out
}

/// Compute the reduced Groebner basis of the generated ideal.
pub fn buchberger(
    generators: Vec<Polynomial>,
    order: MonomialOrder,
) -> Result<Ideal, PolyError> {
    let ideal = Ideal::new(generators, order)?;
    ideal.groebner_basis();
    Ok(ideal)
}

impl Ideal {
    /// Build an ideal; all generators must share one variable set. Zero
    /// generators are dropped; an empty list is the zero ideal, which needs
    /// an explicit variable set via [`Ideal::zero`].
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self, PolyError> {
        let vars = generators
            .first()
            .map(|g| g.varset().clone())
            .ok_or(PolyError::VarSetMismatch)?;
        Self::with_vars(&vars, generators, order)
    }

    pub fn zero(vars: &Arc<VarSet>, order: MonomialOrder) -> Self {
        Ideal {
            vars: vars.clone(),
            generators: Vec::new(),
            order,
            gb: OnceLock::new(),
        }
    }

    pub fn with_vars(
        vars: &Arc<VarSet>,
        generators: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Result<Self, PolyError> {
        for g in &generators {
            if g.varset() != vars && **g.varset() != **vars {
                return Err(PolyError::VarSetMismatch);
            }
        }
        let generators: Vec<Polynomial> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            vars: vars.clone(),
            generators,
            order,
            gb: OnceLock::new(),
        })
    }

    pub fn varset(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The reduced Groebner basis (computed once, then cached).
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| {
            if self.generators.is_empty() {
                return Vec::new();
            }
            let raw = buchberger_raw(&self.generators, &self.order);
            reduce_basis(raw, &self.order)
        })
    }

    /// Same ideal under a different order (fresh basis computation).
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            vars: self.vars.clone(),
            generators: self.generators.clone(),
            order,
            gb: OnceLock::new(),
        }
    }

    /// The ideal generated by these generators plus `extra`, same order.
    pub fn with_extra(&self, extra: &[Polynomial]) -> Result<Ideal, PolyError> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::with_vars(&self.vars, gens, self.order.clone())
    }

    /// Unique remainder modulo the reduced basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let basis = self.groebner_basis();
        if basis.is_empty() {
            return p.clone();
        }
        reduce_full(p, basis, &self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        let basis = self.groebner_basis();
        basis.len() == 1 && basis[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.groebner_basis().is_empty()
    }

    /// Equality as ideals, decided by mutual normal-form containment.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
            && other.generators.iter().all(|g| self.contains(g))
    }

    pub(crate) fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis()
            .iter()
            .map(|g| lead(g, &self.order).expect("nonzero").0.clone())
            .collect()
    }
}

/// Post-hoc Buchberger audit: every S-polynomial of the reduced basis must
/// reduce to zero, leading monomials must be pairwise non-divisible and
/// monic, and all generators must reduce to zero.
pub fn audit_reduced_basis(ideal: &Ideal) -> bool {
    use num_traits::One;
    let basis = ideal.groebner_basis();
    let order = ideal.order();
    for (k, g) in basis.iter().enumerate() {
        let (lm, lc) = match lead(g, order) {
            Some(x) => x,
            None => return false,
        };
        if !lc.is_one() {
            return false;
        }
        for (j, h) in basis.iter().enumerate() {
            if j == k {
                continue;
            }
            let hm = lead(h, order).expect("nonzero").0;
            if hm.divides(lm) {
                return false;
            }
        }
        // tails reduced
        for (m, _) in g.terms() {
            if m == lm {
                continue;
            }
            for h in basis {
                if lead(h, order).expect("nonzero").0.divides(m) {
                    return false;
                }
            }
        }
    }
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !reduce_full(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    for g in ideal.generators() {
        if !ideal.contains(g) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn vars3() -> Arc<VarSet> {
        VarSet::space_only(&["x", "y", "z"]).unwrap()
    }

    fn p(vars: &Arc<VarSet>, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn twisted_cubic_lex() {
        // lex with z > y > x: list vars in that order
        let v = VarSet::space_only(&["z", "y", "x"]).unwrap();
        let gens = vec![p(&v, "y - x^2"), p(&v, "z - x^3")];
        let ideal = buchberger(gens, MonomialOrder::Lex).unwrap();
        let basis = ideal.groebner_basis();
        assert_eq!(basis.len(), 2);
        assert!(ideal.contains(&p(&v, "y - x^2")));
        assert!(ideal.contains(&p(&v, "z - x^3")));
        assert!(ideal.contains(&p(&v, "z*y - x^5")));
        assert!(!ideal.contains(&p(&v, "x")));
        assert!(audit_reduced_basis(&ideal));
    }

    #[test]
    fn principal_and_duplicate() {
        let v = vars3();
        let ideal = buchberger(vec![p(&v, "x - 1")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(ideal.groebner_basis(), &[p(&v, "x - 1")]);
        let ideal = buchberger(vec![p(&v, "x"), p(&v, "x")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(ideal.groebner_basis(), &[p(&v, "x")]);
    }

    #[test]
    fn normal_form_examples() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let ideal = buchberger(vec![p(&v, "x^2 - y")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(ideal.normal_form(&p(&v, "x^2")), p(&v, "y"));
        assert!(ideal.normal_form(&p(&v, "x^2 - y")).is_zero());
        assert_eq!(ideal.normal_form(&p(&v, "1")), p(&v, "1"));
    }

    #[test]
    fn normal_form_is_linear() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let ideal =
            buchberger(vec![p(&v, "x^2 + y^2 - 1"), p(&v, "x*y - 2")], MonomialOrder::Grevlex)
                .unwrap();
        let a = p(&v, "x^3 - y + 4");
        let b = p(&v, "x*y^2 + x - 1/2");
        let lhs = ideal.normal_form(
            &a.scale(&rat(3)).try_add(&b.scale(&rat(-7))).unwrap(),
        );
        let rhs = ideal
            .normal_form(&a)
            .scale(&rat(3))
            .try_add(&ideal.normal_form(&b).scale(&rat(-7)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclic3_audit() {
        let v = vars3();
        let gens = vec![
            p(&v, "x + y + z"),
            p(&v, "x*y + y*z + z*x"),
            p(&v, "x*y*z - 1"),
        ];
        let ideal = buchberger(gens, MonomialOrder::Grevlex).unwrap();
        assert!(audit_reduced_basis(&ideal));
        let lex = ideal.with_order(MonomialOrder::Lex);
        assert!(audit_reduced_basis(&lex));
        assert!(lex.equals(&ideal));
    }

    #[test]
    fn unit_ideal_detection() {
        let v = vars3();
        let ideal = buchberger(vec![p(&v, "x"), p(&v, "x - 1")], MonomialOrder::Grevlex).unwrap();
        assert!(ideal.is_unit());
    }
}
