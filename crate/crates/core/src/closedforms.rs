//! Closed-form counts from Lagrange inversion, evaluated exactly over
//! `BigInt`. Each formula's division is asserted exact, so a transcription
//! slip fails loudly instead of rounding.
//!
//! `n = 0` returns 1 for the path-family counts (the empty path); the
//! formulas themselves start at `n = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::paths::{enum_paths, Family, LatticePath, Step};
use crate::polyring::{f3, m_prime, MultiPoly};

/// Exact binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn exact_div(numerator: BigInt, divisor: i64, what: &str) -> BigInt {
    let (q, r) = numerator.div_rem(&BigInt::from(divisor));
    assert!(r.is_zero(), "{what}: division by {divisor} is not exact");
    q
}

fn check_k(k: u32) -> Result<()> {
    if k < 1 {
        Err(Error::OutOfDomain("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `|Dyck(n;k)| = C((k+1)n, n) / (kn + 1)`, the Fuss-Catalan number.
pub fn fuss_catalan(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    let n = n as i64;
    let k = i64::from(k);
    Ok(exact_div(
        binomial((k + 1) * n, n),
        k * n + 1,
        "fuss-catalan",
    ))
}

pub fn catalan(n: u64) -> BigInt {
    fuss_catalan(n, 1).expect("k = 1 is valid")
}

/// `|Sch^A(n;k)| = (1/n) sum_j C(n,j) C(n+kj, n-1)`.
pub fn sch_a(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let n = n as i64;
    let k = i64::from(k);
    let sum: BigInt = (0..=n)
        .map(|j| binomial(n, j) * binomial(n + k * j, n - 1))
        .sum();
    Ok(exact_div(sum, n, "sch-a"))
}

/// `|Sch^B(n;k)| = (1/n) sum_j C(n,j) C(kn+j, n-1)` (binomial form).
pub fn sch_b(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let n = n as i64;
    let k = i64::from(k);
    let sum: BigInt = (0..=n)
        .map(|j| binomial(n, j) * binomial(k * n + j, n - 1))
        .sum();
    Ok(exact_div(sum, n, "sch-b"))
}

/// `|Sch^B(n;k)| = (1/n) sum_m 2^{m+1} C(nk, m) C(n, n-m-1)` (peak form).
pub fn sch_b_peak_form(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let n = n as i64;
    let k = i64::from(k);
    let sum: BigInt = (0..n)
        .map(|m| BigInt::from(2).pow(m as u32 + 1) * binomial(n * k, m) * binomial(n, n - m - 1))
        .sum();
    Ok(exact_div(sum, n, "sch-b-peaks"))
}

/// `|Sch(n)| = (1/n) sum_j C(n,j) C(n+j, n-1)`, the large Schroeder number.
pub fn schroeder(n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let n = n as i64;
    let sum: BigInt = (0..=n).map(|j| binomial(n, j) * binomial(n + j, n - 1)).sum();
    exact_div(sum, n, "schroeder")
}

/// `|Mot(n;k)| = (1/(n+1)) sum_j C(n+1, n-kj) C(n-kj, j)`.
pub fn motzkin(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    let n = n as i64;
    let k = i64::from(k);
    let sum: BigInt = (0..=n / k)
        .map(|j| binomial(n + 1, n - k * j) * binomial(n - k * j, j))
        .sum();
    Ok(exact_div(sum, n + 1, "motzkin"))
}

/// Number of `k`-Dyck paths of size `n` with `m+1` peaks (`UD` patterns):
/// `(1/n) C(nk, m) C(n, n-m-1)`. These are the generalized Runyon numbers;
/// `k = 1` gives the Narayana triangle.
pub fn runyon(n: u64, k: u32, m: u64) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(BigInt::zero());
    }
    let n = n as i64;
    let k = i64::from(k);
    let m = m as i64;
    let product = binomial(n * k, m) * binomial(n, n - m - 1);
    Ok(exact_div(product, n, "runyon"))
}

/// `A(n,k,j) = (1/n) C(n,j) C(k(n-j)+n, n-1-j)`, the size of the
/// three-step family with exactly `j` steps `u = (k,1)`.
pub fn a_count(n: u64, k: u32, j: u64) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(if j == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let n = n as i64;
    let k = i64::from(k);
    let j = j as i64;
    let product = binomial(n, j) * binomial(k * (n - j) + n, n - 1 - j);
    Ok(exact_div(product, n, "a-triangle"))
}

/// `S_k(n;1,1) = (1/n) sum_j 3^j C(n,j) C(n+kj, n-1)`.
pub fn s_k_11(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let n = n as i64;
    let k = i64::from(k);
    let sum: BigInt = (0..=n)
        .map(|j| BigInt::from(3).pow(j as u32) * binomial(n, j) * binomial(n + k * j, n - 1))
        .sum();
    Ok(exact_div(sum, n, "s-k-11"))
}

/// Coefficients of the type-II series at `(m,r,s,u) = (2,r,1,2)`:
/// `(1/n) sum_{p,q} 3^{n-p-q} 4^q C(n,p) C(n-p,q) C(nk-p(k-1), n-1-q)`.
pub fn xi_spec_2212(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let n = n as i64;
    let k = i64::from(k);
    let mut sum = BigInt::zero();
    for p in 0..=n {
        for q in 0..=(n - p) {
            sum += BigInt::from(3).pow((n - p - q) as u32)
                * BigInt::from(4).pow(q as u32)
                * binomial(n, p)
                * binomial(n - p, q)
                * binomial(n * k - p * (k - 1), n - 1 - q);
        }
    }
    Ok(exact_div(sum, n, "xi-2212"))
}

/// Coefficients of the type-II H series at `(m,r,s,u) = (2,-r,1,1)`:
/// `(1/n) sum_j (-1)^j 2^{n-j} C(n,j) C(k(n-j)+n, n-1-j)`.
pub fn alpha_coeff(n: u64, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let n = n as i64;
    let k = i64::from(k);
    let sum: BigInt = (0..=n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            BigInt::from(sign)
                * BigInt::from(2).pow((n - j) as u32)
                * binomial(n, j)
                * binomial(k * (n - j) + n, n - 1 - j)
        })
        .sum();
    let value = exact_div(sum, n, "alpha");
    assert!(!value.is_negative(), "alpha coefficients are positive");
    Ok(value)
}

/// The scaled `q = 1` coefficient of the empty-dimer series (`k = 1`):
/// `(-1)^n (m-1)^{2n+1} [p^n] chi*(p, 1) = (1/n) sum_t C(n,t) C(2n-t, n-1)
/// (m-1)^t (mu-m+1)^{n-t}`, a genuine polynomial in `m, u`.
pub fn chi_star_q1(n: u64) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let n = n as i64;
    let mut sum = MultiPoly::zero();
    for t in 0..=n {
        let c = exact_div(binomial(n, t) * binomial(2 * n - t, n - 1), n, "chi-star-q1");
        let term = &m_prime().pow(t as u32) * &f3().pow((n - t) as u32);
        sum = &sum + &term.scale(&c);
    }
    sum
}

/// Enumerate the three-step family with exactly `j` small up steps;
/// the length of the result is `A(n,k,j)`.
pub fn enum_a_paths(n: u64, k: u32, j: u64) -> Result<Vec<LatticePath>> {
    if j > n {
        return Err(Error::OutOfDomain("j must satisfy 0 <= j <= n".into()));
    }
    Ok(enum_paths(Family::AFamily, n as usize, k)?
        .into_iter()
        .filter(|p| p.count(Step::SmallUp) as u64 == j)
        .collect())
}
