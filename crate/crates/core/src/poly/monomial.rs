use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Variable index. Variables are `x1, x2, ...`; index 0 is never used.
pub type Var = u32;

/// A Laurent monomial `x1^e1 x2^e2 ...` with integer exponents.
///
/// Stored densely (slot `k` holds the exponent of `x_{k+1}`) with trailing
/// zero exponents trimmed, so equal monomials have identical storage.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[i32; 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The monomial `x_var^exp`.
    pub fn var_pow(var: Var, exp: i32) -> Self {
        assert!(var >= 1, "variable indices start at 1");
        let mut m = Monomial::one();
        m.set(var, exp);
        m
    }

    pub fn var(var: Var) -> Self {
        Monomial::var_pow(var, 1)
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables have their exponents added.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            let cur = m.exponent(v);
            m.set(v, cur + e);
        }
        m
    }

    /// Builds `x1^e[0] x2^e[1] ...`.
    pub fn from_exponents(exps: &[i32]) -> Self {
        let mut m = Monomial {
            exps: SmallVec::from_slice(exps),
        };
        m.trim();
        m
    }

    /// The underline notation: `(x_first, x_{first+1}, ...)^parts`, i.e.
    /// `x_first^{parts[0]} x_{first+1}^{parts[1]} ...`.
    pub fn consecutive_powers(first: Var, parts: &[usize]) -> Self {
        Monomial::from_pairs(
            parts
                .iter()
                .enumerate()
                .map(|(k, &p)| (first + k as Var, p as i32)),
        )
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    fn set(&mut self, var: Var, exp: i32) {
        let idx = (var - 1) as usize;
        if idx >= self.exps.len() {
            if exp == 0 {
                return;
            }
            self.exps.resize(idx + 1, 0);
        }
        self.exps[idx] = exp;
        self.trim();
    }

    pub fn exponent(&self, var: Var) -> i32 {
        if var == 0 {
            return 0;
        }
        self.exps.get((var - 1) as usize).copied().unwrap_or(0)
    }

    /// Dense exponent slice, `x1` first, trailing zeros trimmed.
    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    /// Nonzero `(variable, exponent)` pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| (k as Var + 1, e))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest variable index with a nonzero exponent, 0 for the unit.
    pub fn max_var(&self) -> Var {
        self.exps.len() as Var
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.exps.iter().any(|&e| e < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(short.exps.iter()) {
            *e += s;
        }
        let mut m = Monomial { exps };
        m.trim();
        m
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| -e).collect(),
        }
    }

    /// `self / other`, always defined in the Laurent ring.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut m = Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
        };
        m.trim();
        m
    }

    /// Exchanges the exponents of `x_i` and `x_{i+1}`.
    pub fn swap_adjacent(&self, i: Var) -> Monomial {
        let a = self.exponent(i);
        let b = self.exponent(i + 1);
        if a == b {
            return self.clone();
        }
        let mut m = self.clone();
        m.set(i, b);
        m.set(i + 1, a);
        m
    }

    /// Renames `x_k` to `x_{k+offset}`.
    pub fn shift_vars(&self, offset: u32) -> Monomial {
        if self.is_one() {
            return self.clone();
        }
        let mut exps: SmallVec<[i32; 8]> = SmallVec::from_elem(0, offset as usize);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// Splits off the `x_var` exponent, returning it and the remaining monomial.
    pub fn split_var(&self, var: Var) -> (i32, Monomial) {
        let e = self.exponent(var);
        if e == 0 {
            return (0, self.clone());
        }
        let mut rest = self.clone();
        rest.set(var, 0);
        (e, rest)
    }
}

/// Graded lexicographic: total degree first, then the larger exponent of the
/// smallest-index variable wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for k in 0..n {
                let a = self.exps.get(k).copied().unwrap_or(0);
                let b = other.exps.get(k).copied().unwrap_or(0);
                match a.cmp(&b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_canonical() {
        let a = Monomial::from_exponents(&[1, 0, 0]);
        let b = Monomial::var(1);
        assert_eq!(a, b);
        assert_eq!(Monomial::from_pairs([(3, 2), (3, -2)]), Monomial::one());
    }

    #[test]
    fn grlex_order() {
        let m = |e: &[i32]| Monomial::from_exponents(e);
        assert!(m(&[2, 1]) > m(&[2, 0, 1]));
        assert!(m(&[2, 0, 1]) > m(&[1, 2]));
        assert!(m(&[1, 2]) > m(&[1, 1, 1]));
        assert!(m(&[1]) > m(&[1, 0, -1]));
        assert!(m(&[0, 0, 1]) > m(&[]));
    }

    #[test]
    fn exponent_arithmetic() {
        let a = Monomial::from_exponents(&[3, 4]);
        let b = Monomial::from_exponents(&[-2, -1]);
        assert_eq!(a.mul(&b), Monomial::from_exponents(&[1, 3]));
        assert_eq!(a.div(&a), Monomial::one());
        assert_eq!(a.swap_adjacent(1), Monomial::from_exponents(&[4, 3]));
        assert_eq!(a.shift_vars(2), Monomial::from_exponents(&[0, 0, 3, 4]));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::from_exponents(&[2, 1]).to_string(), "x1^2*x2");
        assert_eq!(Monomial::from_exponents(&[0, 0, -1]).to_string(), "x3^-1");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
