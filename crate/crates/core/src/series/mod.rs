//! Triangular solvers for the functional equations of the formal power
//! series attached to each recurrence family.
//!
//! Every equation here rearranges to a fixed point `x = Phi(x)` in which
//! each term on the right carries a factor of the expansion variable, so
//! the order-`n` coefficient of `Phi(x)` only involves coefficients below
//! `n`. Solving is then an iteration from 1, and `residual = x - Phi(x)`
//! vanishes exactly when `x` solves the defining equation.
//!
//! Sign and scale conventions (applied by [`normalized_coeff`]):
//!
//! * `r`-equations expand against `(-rs)^n`, so the path sum at size `n`
//!   is `(-1)^n` times coefficient `n` divided by `s^n`;
//! * the empty-dimer family expands against `(-pq)^n` with an extra pole
//!   scale: [`solve`] returns the scaled coefficients
//!   `c_n = (m-1)^{(k+1)n+1} [p^n] chi*`, which are polynomials;
//! * the three-step series `beta` is sign- and scale-free.

mod pathsum;

pub use pathsum::{path_sum, schb_weight_sum, wt_star, zeta_tree_sum};

use crate::error::{Error, Result};
use crate::polyring::{f3, m_prime, Exponents, MultiPoly, RSeries, SeriesVar, Var};

/// A functional equation identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquationId {
    /// Dyck paths, `k = 1`: `f(rs) x = 1 - g(rs) x(r) x(rs)`.
    Chi,
    /// Empty dimers, `k = 1`; alias for `ChiStarK(1)`.
    ChiStar,
    /// Empty dimers over `k`-Dyck paths, solved in scaled form.
    ChiStarK(u32),
    /// The degree-four distance-two equation.
    Zeta,
    /// Type I over `k`-Dyck paths.
    Nu(u32),
    /// Type I specialized to `k`-Motzkin paths.
    NuMotzkin(u32),
    /// Type II over `k`-Dyck paths.
    Xi(u32),
    /// Type III over `k`-Dyck paths.
    Kappa(u32),
    /// Type II (H form); no path expansion, sequences via specialization.
    Alpha(u32),
    /// Three-step family marker series: `x = 1 + r(z(x-1)x + x^{k+1})`.
    Beta(u32),
}

impl EquationId {
    pub fn name(&self) -> String {
        match self {
            EquationId::Chi => "chi".into(),
            EquationId::ChiStar => "chi-star".into(),
            EquationId::ChiStarK(k) => format!("chi-star-k({k})"),
            EquationId::Zeta => "zeta".into(),
            EquationId::Nu(k) => format!("nu({k})"),
            EquationId::NuMotzkin(k) => format!("nu-motzkin({k})"),
            EquationId::Xi(k) => format!("xi({k})"),
            EquationId::Kappa(k) => format!("kappa({k})"),
            EquationId::Alpha(k) => format!("alpha({k})"),
            EquationId::Beta(k) => format!("beta({k})"),
        }
    }

    pub fn series_var(&self) -> SeriesVar {
        match self {
            EquationId::ChiStar | EquationId::ChiStarK(_) => SeriesVar::P,
            _ => SeriesVar::R,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            EquationId::ChiStarK(k)
            | EquationId::Nu(k)
            | EquationId::NuMotzkin(k)
            | EquationId::Xi(k)
            | EquationId::Kappa(k)
            | EquationId::Alpha(k)
            | EquationId::Beta(k)
                if *k < 1 =>
            {
                Err(Error::OutOfDomain(format!("{} needs k >= 1", self.name())))
            }
            _ => Ok(()),
        }
    }

    fn k(&self) -> u32 {
        match self {
            EquationId::Chi | EquationId::ChiStar => 1,
            EquationId::Zeta => 2,
            EquationId::ChiStarK(k)
            | EquationId::Nu(k)
            | EquationId::NuMotzkin(k)
            | EquationId::Xi(k)
            | EquationId::Kappa(k)
            | EquationId::Alpha(k)
            | EquationId::Beta(k) => *k,
        }
    }
}

fn msu() -> MultiPoly {
    MultiPoly::monomial(Exponents([1, 1, 1, 0, 0]), 1)
}

fn mprime_s() -> MultiPoly {
    m_prime().mul_var_pow(Var::S, 1)
}

/// Product of the shifted series `x(r) x(rs) ... x(rs^{count-1})`.
fn shift_product(x: &RSeries, count: u32) -> RSeries {
    let mut acc = x.clone();
    for j in 1..count {
        acc = &acc * &x.shift(j);
    }
    acc
}

/// One application of the fixed-point map of the equation.
fn phi(id: EquationId, x: &RSeries) -> RSeries {
    let order = x.order();
    let var = id.series_var();
    let one = RSeries::one(var, order);
    let k = id.k();
    match id {
        EquationId::Chi | EquationId::Nu(_) => {
            // x = 1 - r[ m' s x + s f3 prod_{j<=k} x(rs^j) ]
            let inner = &x.scale(&mprime_s())
                + &shift_product(x, k + 1).scale(&f3().mul_var_pow(Var::S, 1));
            &one - &inner.mul_expansion_var()
        }
        EquationId::Xi(_) => {
            // x = 1 + r[ -m' s x + m' s prod_{j<k} x(rs^j) - m s u prod_{j<=k} x(rs^j) ]
            let inner = &(&shift_product(x, k).scale(&mprime_s()) - &x.scale(&mprime_s()))
                - &shift_product(x, k + 1).scale(&msu());
            &one + &inner.mul_expansion_var()
        }
        EquationId::Kappa(_) => {
            // x = 1 - r[ m' s prod_{j<k} x(rs^j) + s f3 prod_{j<=k} x(rs^j) ]
            let inner = &shift_product(x, k).scale(&mprime_s())
                + &shift_product(x, k + 1).scale(&f3().mul_var_pow(Var::S, 1));
            &one - &inner.mul_expansion_var()
        }
        EquationId::Alpha(_) => {
            // x = 1 - r[ m' s x - m' s x x(rs) + m s u prod_{j<=k} x(rs^j) ]
            let inner = &(&x.scale(&mprime_s()) - &(x * &x.shift(1)).scale(&mprime_s()))
                + &shift_product(x, k + 1).scale(&msu());
            &one - &inner.mul_expansion_var()
        }
        EquationId::NuMotzkin(_) => {
            // signed Motzkin series: x = 1 - rs x + (-1)^{k+1} r^{k+1}
            // s^{(k+1)(k+2)/2} prod_{j<=k} x(rs^j)
            let exp = (k + 1) * (k + 2) / 2;
            let sign: i64 = if (k + 1).is_multiple_of(2) { 1 } else { -1 };
            let coeff = MultiPoly::monomial_in(Var::S, exp, sign);
            let mut tail = shift_product(x, k + 1).scale(&coeff);
            for _ in 0..=k {
                tail = tail.mul_expansion_var();
            }
            &(&one - &x.scale(&MultiPoly::var(Var::S)).mul_expansion_var()) + &tail
        }
        EquationId::Zeta => {
            // 1 = (1+rs(m-2)) x + rs x x(rs) + rs(1+rs^2(m-1)) x x(rs) x(rs^2)
            //     + r^2 s^3 x x(rs) x(rs^2) x(rs^3)
            let q2 = x * &x.shift(1);
            let q3 = &q2 * &x.shift(2);
            let q4 = &q3 * &x.shift(3);
            let m_minus_2 = &MultiPoly::var(Var::M) - &MultiPoly::constant(2);
            let first = &(&x.scale(&m_minus_2.mul_var_pow(Var::S, 1))
                + &q2.scale(&MultiPoly::var(Var::S)))
                + &q3.scale(&MultiPoly::var(Var::S));
            let second = &q3.scale(&m_prime().mul_var_pow(Var::S, 3))
                + &q4.scale(&MultiPoly::var_pow(Var::S, 3));
            &(&one - &first.mul_expansion_var())
                - &second.mul_expansion_var().mul_expansion_var()
        }
        EquationId::ChiStar | EquationId::ChiStarK(_) => {
            // scaled form: c = 1 - p[ q m' prod_{j<k} c(pq^j) + q^2 f3 prod_{j<=k} c(pq^j) ]
            let inner = &shift_product(x, k).scale(&m_prime().mul_var_pow(Var::Q, 1))
                + &shift_product(x, k + 1).scale(&f3().mul_var_pow(Var::Q, 2));
            &one - &inner.mul_expansion_var()
        }
        EquationId::Beta(_) => {
            // x = 1 + r[ z (x - 1) x + x^{k+1} ]
            let mut power = x.clone();
            for _ in 0..k {
                power = &power * x;
            }
            let inner = &(&(x - &one) * x).scale(&MultiPoly::var(Var::Z)) + &power;
            &one + &inner.mul_expansion_var()
        }
    }
}

/// Solve the equation through the given truncation order.
pub fn solve(id: EquationId, order: usize) -> Result<RSeries> {
    id.validate()?;
    let mut x = RSeries::one(id.series_var(), order);
    for _ in 0..=order {
        x = phi(id, &x);
    }
    let res = residual(id, &x)?;
    if let Some(bad) = res.lowest_nonzero() {
        return Err(Error::NotTriangular(id.name(), bad));
    }
    Ok(x)
}

/// The defining equation rearranged to `x - Phi(x)`; identically zero on a
/// solution through the series order.
pub fn residual(id: EquationId, x: &RSeries) -> Result<RSeries> {
    id.validate()?;
    if x.var() != id.series_var() {
        return Err(Error::OutOfDomain(format!(
            "series variable {} does not match equation {}",
            x.var().symbol(),
            id.name()
        )));
    }
    Ok(x - &phi(id, x))
}

/// Extract the order-`n` coefficient with the equation's sign and scale
/// conventions removed, ready to compare against a weighted path sum.
pub fn normalized_coeff(id: EquationId, x: &RSeries, n: usize) -> Result<MultiPoly> {
    let c = x.coeff(n);
    let de_scaled = match id {
        EquationId::Chi
        | EquationId::Zeta
        | EquationId::Nu(_)
        | EquationId::NuMotzkin(_)
        | EquationId::Xi(_)
        | EquationId::Kappa(_) => c.div_var_pow(Var::S, n as u32)?,
        EquationId::ChiStar | EquationId::ChiStarK(_) => c.div_var_pow(Var::Q, n as u32)?,
        EquationId::Alpha(_) => c.clone(),
        EquationId::Beta(_) => return Ok(c.clone()),
    };
    Ok(if n.is_multiple_of(2) {
        de_scaled
    } else {
        -&de_scaled
    })
}
