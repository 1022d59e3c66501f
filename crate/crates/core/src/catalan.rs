//! Catalan numbers, their q-analogue and Hankel determinants, as counts
//! and specializations of Schubert polynomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perms::Permutation;
use crate::poly::{LaurentPoly, Monomial, PolyMatrix};
use crate::schubert::schubert_poly;
use crate::shapes::Partition;

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    let mut binom = BigInt::one();
    for k in 0..n {
        binom = binom * (2 * n - k) / (k + 1);
    }
    binom / (n + 1)
}

/// Number of subdiagrams of the staircase `(n-1, ..., 1)`.
pub fn catalan_by_subdiagrams(n: usize) -> usize {
    Partition::staircase(n).subdiagrams().len()
}

/// `Σ_{μ ⊆ Λ_n} q^{n(n-1)/2 - |μ|}`, with `q` written as `x1`.
pub fn q_catalan(n: usize) -> LaurentPoly {
    let top = n * n.saturating_sub(1) / 2;
    Partition::staircase(n)
        .subdiagrams()
        .iter()
        .map(|mu| LaurentPoly::monomial(Monomial::var_pow(1, (top - mu.size()) as i32)))
        .sum()
}

fn binom3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Whether `𝔖_{1 × w0(n)}(1, q, q^2, ...) = q^{binom(n,3)} Cat_q(n)`.
pub fn woo_check(n: usize, max_n: usize) -> Result<bool> {
    if n > max_n {
        return Err(Error::Budget(format!("n = {n} exceeds the limit {max_n}")));
    }
    let w = Permutation::longest(n).shift(1);
    let lhs = schubert_poly(&w).principal_specialization();
    let rhs = q_catalan(n).mul_monomial(&Monomial::var_pow(1, binom3(n) as i32));
    Ok(lhs == rhs)
}

/// `det(Cat(n + i + j - 2))_{i,j=1..h}`; 1 for `h = 0`.
pub fn catalan_hankel(n: usize, h: usize) -> BigInt {
    let m = PolyMatrix::from_fn(h, h, |i, j| LaurentPoly::constant(catalan(n + i + j)));
    m.determinant().expect("square by construction").eval_at_ones()
}

/// `𝔖_w(1, ..., 1)` for a Richardson `w` as a product of Hankel
/// determinants, one per decreasing block.
pub fn richardson_value(w: &Permutation) -> Result<BigInt> {
    let blocks = w
        .richardson_blocks()
        .ok_or_else(|| Error::Domain(format!("{w} is not Richardson")))?;
    let mut offset = 0;
    let mut value = BigInt::one();
    for size in blocks {
        value *= catalan_hankel(size, offset);
        offset += size;
    }
    Ok(value)
}
