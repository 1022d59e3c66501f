use std::collections::hash_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by descending graded-lex order of their monomials
/// and never carry a zero coefficient, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::term(Monomial::var(v), 1)
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(m, 1)
    }

    pub fn term<C: Into<BigInt>>(m: Monomial, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// Collects terms, combining repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        LaurentPoly::from_map(acc)
    }

    pub(crate) fn from_map(acc: FxHashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        LaurentPoly { terms }
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The single term, if this polynomial is a nonzero multiple of a monomial.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_default()
    }

    /// Largest variable index occurring in any term.
    pub fn max_var(&self) -> Var {
        self.terms.iter().map(|(m, _)| m.max_var()).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) != 0)
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.has_negative_exponent())
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// `p / m` in the Laurent ring.
    pub fn monomial_quotient(&self, m: &Monomial) -> LaurentPoly {
        self.mul_monomial(&m.inverse())
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_adjacent(&self, i: Var) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (m.swap_adjacent(i), c.clone())))
    }

    /// Renames every `x_k` to `x_{k+offset}`.
    pub fn shift_vars(&self, offset: u32) -> LaurentPoly {
        // Shifting is order-preserving, no re-sort needed.
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shift_vars(offset), c.clone()))
                .collect(),
        }
    }

    /// Value with every variable set to 1.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Image under the ring map sending `x_v` to `assignment[v]`; variables
    /// not in the map are left alone. A variable raised to a negative power
    /// must map to a unit (a single monomial with coefficient ±1).
    pub fn substitute(&self, assignment: &BTreeMap<Var, LaurentPoly>) -> Result<LaurentPoly> {
        let mut inverses: FxHashMap<Var, LaurentPoly> = FxHashMap::default();
        let mut powers: FxHashMap<(Var, i32), LaurentPoly> = FxHashMap::default();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut kept: Vec<(Var, i32)> = Vec::new();
            let mut image = LaurentPoly::constant(c.clone());
            for (v, e) in m.iter() {
                let Some(target) = assignment.get(&v) else {
                    kept.push((v, e));
                    continue;
                };
                if let Entry::Vacant(slot) = powers.entry((v, e)) {
                    let base: &LaurentPoly = if e < 0 {
                        match inverses.entry(v) {
                            Entry::Occupied(o) => o.into_mut(),
                            Entry::Vacant(inv) => inv.insert(unit_inverse(target).ok_or_else(|| {
                                Error::Domain(format!(
                                    "x{v} occurs with exponent {e} but maps to the non-unit {target}"
                                ))
                            })?),
                        }
                    } else {
                        target
                    };
                    slot.insert(base.pow(e.unsigned_abs()));
                }
                image = &image * &powers[&(v, e)];
            }
            out += image.mul_monomial(&Monomial::from_pairs(kept));
        }
        Ok(out)
    }

    /// Principal specialization `x_i -> q^{i-1}`, with `q` encoded as `x1`.
    pub fn principal_specialization(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let deg: i32 = m.iter().map(|(v, e)| (v as i32 - 1) * e).sum();
            (Monomial::var_pow(1, deg), c.clone())
        }))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent ring.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (lead_m, lead_c) = d.leading_term()?;
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some((m, c)) = d.as_term() {
            if c.is_one() {
                return Some(self.monomial_quotient(m));
            }
        }
        // Every quotient exponent of x_v lies in
        // [min_v(self) - max_v(d), max_v(self) - min_v(d)]; outside means no quotient.
        let nvars = self.max_var().max(d.max_var()) as usize;
        let bounds = |p: &LaurentPoly| {
            let mut lo = vec![i32::MAX; nvars];
            let mut hi = vec![i32::MIN; nvars];
            for (m, _) in &p.terms {
                for v in 0..nvars {
                    let e = m.exponent(v as Var + 1);
                    lo[v] = lo[v].min(e);
                    hi[v] = hi[v].max(e);
                }
            }
            (lo, hi)
        };
        let (plo, phi) = bounds(self);
        let (dlo, dhi) = bounds(d);

        // Remainder kept in an ordered map so the leading term is a cheap pop.
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            let qm = rm.div(lead_m);
            for v in 0..nvars {
                let e = qm.exponent(v as Var + 1);
                if e < plo[v] - dhi[v] || e > phi[v] - dlo[v] {
                    return None;
                }
            }
            if !(&rc % lead_c).is_zero() {
                return None;
            }
            let qc = rc / lead_c;
            for (m, c) in d.terms.iter().skip(1) {
                let key = m.mul(&qm);
                let delta = c * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() -= delta;
                        if slot.get().is_zero() {
                            slot.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(-delta);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Some(LaurentPoly::from_terms(quotient))
    }

    /// Canonical text with a custom variable renderer.
    pub fn display_with<F: Fn(Var) -> String>(&self, name: F) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&abs.to_string());
                continue;
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            for (j, (v, e)) in m.iter().enumerate() {
                if j > 0 {
                    out.push('*');
                }
                out.push_str(&name(v));
                if e != 1 {
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

fn unit_inverse(p: &LaurentPoly) -> Option<LaurentPoly> {
    let (m, c) = p.as_term()?;
    if c.abs().is_one() {
        Some(LaurentPoly::term(m.inverse(), c.clone()))
    } else {
        None
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|v| format!("x{v}")))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(m)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    let mut terms = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let fix = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        let (am, ac) = &a.terms[i];
        let (bm, bc) = &b.terms[j];
        match am.cmp(bm) {
            std::cmp::Ordering::Greater => {
                terms.push((am.clone(), ac.clone()));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                terms.push((bm.clone(), fix(bc)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { ac - bc } else { ac + bc };
                if !c.is_zero() {
                    terms.push((am.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    terms.extend(a.terms[i..].iter().cloned());
    terms.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
    LaurentPoly { terms }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if let Some((m, c)) = small.as_term() {
            let p = large.mul_monomial(m);
            return if c.is_one() { p } else { p.scale(c) };
        }
        let mut acc: FxHashMap<Monomial, BigInt> =
            FxHashMap::with_capacity_and_hasher(large.len() * 2, Default::default());
        for (am, ac) in &small.terms {
            for (bm, bc) in &large.terms {
                let m = am.mul(bm);
                match acc.get_mut(&m) {
                    Some(c) => *c += ac * bc,
                    None => {
                        acc.insert(m, ac * bc);
                    }
                }
            }
        }
        LaurentPoly::from_map(acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.is_zero() {
            *self = rhs;
        } else {
            *self = &*self + &rhs;
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self = &*self - &rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        LaurentPoly::from_terms(iter.flat_map(|p| p.terms.into_iter()))
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}
