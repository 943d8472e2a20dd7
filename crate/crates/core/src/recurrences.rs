//! The seven recurrence families, computed bottom-up as exact series.
//!
//! Every family has the form `G_n = sum_p  c_p(r) * G_{n-p}(r s^p)` for a
//! fixed list of offsets `p` with polynomial coefficient series `c_p`, so
//! one table-driven evaluator covers all of them. Shifts are realized by
//! [`RSeries::shift`].

use crate::error::{Error, Result};
use crate::polyring::{f3, m_prime, MultiPoly, RSeries, SeriesVar, Var};

/// A recurrence family. The `k` parameter is the family's own; it is not
/// the series order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecurrenceKind {
    /// `G_n = f(rs) G_{n-1}(rs) + g(rs) G_{n-2}(rs^2)`.
    Fibonacci,
    /// `G*_n = (pq + m - 1) G*_{n-1}(pq) + p q^2 (m(u-1)+1) G*_{n-2}(pq^2)`.
    EmptyDimer,
    /// The degree-four recurrence of the same-color distance-two model.
    Dist2,
    /// `G_n = f(rs) G_{n-1}(rs) + g(rs) G_{n-k-1}(rs^{k+1})`.
    Type1(u32),
    /// `G_n = f(rs) G_{n-1}(rs) - rs(m-1) G_{n-k}(rs^k) + mrsu G_{n-k-1}(rs^{k+1})`, `k >= 2`.
    Type2G(u32),
    /// `H_n = f(rs) H_{n-1}(rs) - rs(m-1) H_{n-2}(rs^2) + mrsu H_{n-k-1}(rs^{k+1})`.
    Type2H(u32),
    /// `G_n = G_{n-1}(rs) + rs(m-1) G_{n-k}(rs^k) + rs(m(u-1)+1) G_{n-k-1}(rs^{k+1})`.
    Type3(u32),
}

impl RecurrenceKind {
    pub fn name(&self) -> String {
        match self {
            RecurrenceKind::Fibonacci => "fibonacci".into(),
            RecurrenceKind::EmptyDimer => "empty-dimer".into(),
            RecurrenceKind::Dist2 => "dist2".into(),
            RecurrenceKind::Type1(k) => format!("type-1({k})"),
            RecurrenceKind::Type2G(k) => format!("type-2-g({k})"),
            RecurrenceKind::Type2H(k) => format!("type-2-h({k})"),
            RecurrenceKind::Type3(k) => format!("type-3({k})"),
        }
    }

    pub fn series_var(&self) -> SeriesVar {
        match self {
            RecurrenceKind::EmptyDimer => SeriesVar::P,
            _ => SeriesVar::R,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            RecurrenceKind::Type1(k) | RecurrenceKind::Type2H(k) | RecurrenceKind::Type3(k)
                if *k < 1 =>
            {
                Err(Error::OutOfDomain(format!("{} needs k >= 1", self.name())))
            }
            RecurrenceKind::Type2G(k) if *k < 2 => {
                Err(Error::OutOfDomain("type-2-g is defined for k >= 2".into()))
            }
            _ => Ok(()),
        }
    }
}

/// A single term `coeff * G_{n - offset}(r s^offset)`.
struct Term {
    offset: usize,
    coeff: RSeries,
}

/// `f(rs) = 1 + rs(m-1)` as a coefficient series.
fn f_series(order: usize) -> RSeries {
    let mut s = RSeries::one(SeriesVar::R, order.max(1));
    s.set_coeff(1, m_prime().mul_var_pow(Var::S, 1));
    s.truncate(order)
}

/// `g(rs) = rs(m(u-1)+1)`.
fn g_series(order: usize) -> RSeries {
    let mut s = RSeries::zero(SeriesVar::R, order.max(1));
    s.set_coeff(1, f3().mul_var_pow(Var::S, 1));
    s.truncate(order)
}

fn r_coeff(order: usize, degree: usize, poly: MultiPoly) -> RSeries {
    let mut s = RSeries::zero(SeriesVar::R, order.max(degree));
    s.set_coeff(degree, poly);
    s.truncate(order)
}

fn terms(kind: RecurrenceKind, order: usize) -> Vec<Term> {
    let msu = MultiPoly::monomial(crate::polyring::Exponents([1, 1, 1, 0, 0]), 1);
    match kind {
        RecurrenceKind::Fibonacci => vec![
            Term { offset: 1, coeff: f_series(order) },
            Term { offset: 2, coeff: g_series(order) },
        ],
        RecurrenceKind::EmptyDimer => {
            // coefficients live in the p-series: (pq + m - 1) and pq^2 f3
            let mut c1 = RSeries::constant(SeriesVar::P, order.max(1), m_prime());
            c1.set_coeff(1, MultiPoly::var(Var::Q));
            let mut c2 = RSeries::zero(SeriesVar::P, order.max(1));
            c2.set_coeff(1, f3().mul_var_pow(Var::Q, 2));
            vec![
                Term { offset: 1, coeff: c1.truncate(order) },
                Term { offset: 2, coeff: c2.truncate(order) },
            ]
        }
        RecurrenceKind::Dist2 => {
            let m_minus_2 = &MultiPoly::var(Var::M) - &MultiPoly::constant(2);
            let mut c1 = RSeries::one(SeriesVar::R, order.max(1));
            c1.set_coeff(1, m_minus_2.mul_var_pow(Var::S, 1));
            // rs(1 + rs^2(m-1)) = rs + r^2 s^3 (m-1)
            let mut c3 = RSeries::zero(SeriesVar::R, order.max(2));
            c3.set_coeff(1, MultiPoly::var(Var::S));
            if order >= 2 {
                c3.set_coeff(2, m_prime().mul_var_pow(Var::S, 3));
            }
            vec![
                Term { offset: 1, coeff: c1.truncate(order) },
                Term { offset: 2, coeff: r_coeff(order, 1, MultiPoly::var(Var::S)) },
                Term { offset: 3, coeff: c3.truncate(order) },
                Term { offset: 4, coeff: r_coeff(order, 2, MultiPoly::var_pow(Var::S, 3)) },
            ]
        }
        RecurrenceKind::Type1(k) => vec![
            Term { offset: 1, coeff: f_series(order) },
            Term { offset: k as usize + 1, coeff: g_series(order) },
        ],
        RecurrenceKind::Type2G(k) | RecurrenceKind::Type2H(k) => {
            let middle = if matches!(kind, RecurrenceKind::Type2G(_)) {
                k as usize
            } else {
                2
            };
            vec![
                Term { offset: 1, coeff: f_series(order) },
                Term {
                    offset: middle,
                    coeff: r_coeff(order, 1, (-&m_prime()).mul_var_pow(Var::S, 1)),
                },
                Term {
                    offset: k as usize + 1,
                    coeff: r_coeff(order, 1, msu),
                },
            ]
        }
        RecurrenceKind::Type3(k) => vec![
            Term { offset: 1, coeff: RSeries::one(SeriesVar::R, order) },
            Term {
                offset: k as usize,
                coeff: r_coeff(order, 1, m_prime().mul_var_pow(Var::S, 1)),
            },
            Term { offset: k as usize + 1, coeff: g_series(order) },
        ],
    }
}

/// Explicit low-index values that are not produced by the recurrence.
fn initial(kind: RecurrenceKind, n: i64, var: SeriesVar, order: usize) -> Option<RSeries> {
    if n <= 0 {
        return Some(RSeries::one(var, order));
    }
    match (kind, n) {
        (RecurrenceKind::Dist2, 1) => {
            // 1 + rsm
            let mut s = RSeries::one(var, order.max(1));
            s.set_coeff(1, MultiPoly::var(Var::M).mul_var_pow(Var::S, 1));
            Some(s.truncate(order))
        }
        (RecurrenceKind::EmptyDimer, 1) => {
            // mu + pq
            let mut s = RSeries::constant(var, order.max(1), f_mu());
            s.set_coeff(1, MultiPoly::var(Var::Q));
            Some(s.truncate(order))
        }
        _ => None,
    }
}

fn f_mu() -> MultiPoly {
    &MultiPoly::var(Var::M) * &MultiPoly::var(Var::U)
}

/// Compute `G_n` exactly, truncated at order `max(n, 0)` (the polynomial
/// degree never exceeds `n`). Indices `n <= 0` return the constant 1.
pub fn compute_g(kind: RecurrenceKind, n: i64) -> Result<RSeries> {
    compute_g_with_order(kind, n, n.max(0) as usize)
}

/// Compute `G_n` at an explicit truncation order. Evaluation is memoized
/// bottom-up in a local table keyed by index.
pub fn compute_g_with_order(kind: RecurrenceKind, n: i64, order: usize) -> Result<RSeries> {
    kind.validate()?;
    let var = kind.series_var();
    if let Some(series) = initial(kind, n, var, order) {
        return Ok(series);
    }
    let term_list = terms(kind, order);
    let mut table: Vec<RSeries> = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let value = match initial(kind, i, var, order) {
            Some(series) => series,
            None => {
                let mut acc = RSeries::zero(var, order);
                for term in &term_list {
                    let j = i - term.offset as i64;
                    let lower = if j <= 0 {
                        RSeries::one(var, order)
                    } else {
                        table[j as usize - 1].clone()
                    };
                    acc = &acc + &(&term.coeff * &lower.shift(term.offset as u32));
                }
                acc
            }
        };
        table.push(value);
    }
    Ok(table.pop().expect("n >= 1 here"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimers::{brute_gf, Regime};
    use crate::polyring::Exponents;

    fn mono(e: [u32; 5], c: i64) -> MultiPoly {
        MultiPoly::monomial(Exponents(e), c)
    }

    #[test]
    fn fibonacci_g2_golden() {
        // G_2 = 1 + m r u (s + s^2) + m(m-1) r^2 u s^3
        let g2 = compute_g(RecurrenceKind::Fibonacci, 2).unwrap();
        assert_eq!(g2.coeff(0), &MultiPoly::one());
        assert_eq!(
            g2.coeff(1),
            &(&mono([1, 1, 1, 0, 0], 1) + &mono([1, 1, 2, 0, 0], 1))
        );
        assert_eq!(
            g2.coeff(2),
            &(&mono([2, 1, 3, 0, 0], 1) - &mono([1, 1, 3, 0, 0], 1))
        );
    }

    #[test]
    fn dist2_g3_golden() {
        let g3 = compute_g(RecurrenceKind::Dist2, 3).unwrap();
        assert_eq!(g3, brute_gf(3, Regime::SameColorDist2).unwrap());
    }

    #[test]
    fn type1_k1_is_fibonacci() {
        for n in 0..=8 {
            assert_eq!(
                compute_g(RecurrenceKind::Type1(1), n).unwrap(),
                compute_g(RecurrenceKind::Fibonacci, n).unwrap()
            );
        }
    }

    #[test]
    fn type2_g_and_h_coincide_at_k2() {
        for n in 0..=8 {
            assert_eq!(
                compute_g(RecurrenceKind::Type2G(2), n).unwrap(),
                compute_g(RecurrenceKind::Type2H(2), n).unwrap()
            );
        }
    }

    #[test]
    fn type2h_k1_and_type3_k1_are_fibonacci() {
        for n in 0..=8 {
            let fib = compute_g(RecurrenceKind::Fibonacci, n).unwrap();
            assert_eq!(compute_g(RecurrenceKind::Type2H(1), n).unwrap(), fib);
            assert_eq!(compute_g(RecurrenceKind::Type3(1), n).unwrap(), fib);
        }
    }

    #[test]
    fn constant_term_is_one() {
        let kinds = [
            RecurrenceKind::Fibonacci,
            RecurrenceKind::Dist2,
            RecurrenceKind::Type1(2),
            RecurrenceKind::Type2G(2),
            RecurrenceKind::Type2H(3),
            RecurrenceKind::Type3(2),
        ];
        for kind in kinds {
            for n in 0..=8 {
                let g = compute_g(kind, n).unwrap();
                assert_eq!(g.coeff(0), &MultiPoly::one(), "{} n={n}", kind.name());
            }
        }
    }

    #[test]
    fn initial_conditions() {
        assert_eq!(
            compute_g(RecurrenceKind::Fibonacci, -1).unwrap().coeff(0),
            &MultiPoly::one()
        );
        let g1 = compute_g(RecurrenceKind::EmptyDimer, 1).unwrap();
        assert_eq!(g1.coeff(0), &mono([1, 1, 0, 0, 0], 1));
        assert_eq!(g1.coeff(1), &mono([0, 0, 0, 1, 0], 1));
        let d1 = compute_g(RecurrenceKind::Dist2, 1).unwrap();
        assert_eq!(d1.coeff(1), &mono([1, 0, 1, 0, 0], 1));
    }

    #[test]
    fn rejects_bad_k() {
        assert!(compute_g(RecurrenceKind::Type1(0), 3).is_err());
        assert!(compute_g(RecurrenceKind::Type2G(1), 3).is_err());
        assert!(compute_g(RecurrenceKind::Type3(0), 3).is_err());
    }

    #[test]
    fn positivity_in_shifted_variables() {
        // substituting m -> m+1, u -> u+1 exposes non-negative coefficients
        use num_traits::Signed;
        use std::collections::BTreeMap;
        let mut bindings = BTreeMap::new();
        bindings.insert(Var::M, &MultiPoly::var(Var::M) + &MultiPoly::one());
        bindings.insert(Var::U, &MultiPoly::var(Var::U) + &MultiPoly::one());
        for n in 0..=8 {
            let g = compute_g(RecurrenceKind::Fibonacci, n).unwrap();
            for c in g.coeffs() {
                let shifted = c.eval(&bindings);
                for (_, coeff) in shifted.terms() {
                    assert!(!coeff.is_negative(), "negative coefficient at n={n}");
                }
            }
        }
    }
}
