//! Weighted path sums: the combinatorial side of each functional equation.
//!
//! For every equation with a path expansion, `path_sum(id, n)` returns the
//! exact weighted sum over the relevant family at size `n`; it must equal
//! `normalized_coeff(id, solve(id, N), n)`.

use super::EquationId;
use crate::error::{Error, Result};
use crate::paths::{
    dyck_components, dyck_to_tree, enum_paths, path_stats, prime_decompose, tree_statistic_nt,
    Family, LatticePath,
};
use crate::polyring::{f3, f4, m_prime, MultiPoly, Var};

/// Weighted sum over the equation's path family at size `n`.
///
/// The zeta sum is the `m = 1` expansion (the area generating polynomial
/// of `Dyck(n;2)`); `alpha` and `beta` have no declared path expansion.
pub fn path_sum(id: EquationId, n: usize) -> Result<MultiPoly> {
    match id {
        EquationId::Chi => Ok(dyck_weighted(n, 1, WeightKind::Peaks)),
        EquationId::Nu(k) => Ok(dyck_weighted(n, k, WeightKind::PeaksK)),
        EquationId::Kappa(k) => Ok(dyck_weighted(n, k, WeightKind::Peaks)),
        EquationId::Xi(k) => Ok(dyck_weighted(n, k, WeightKind::Valleys)),
        EquationId::NuMotzkin(k) => Ok(motzkin_area_sum(n, k)),
        EquationId::Zeta => Ok(dyck_area_sum(n, 2)),
        EquationId::ChiStar => Ok(chi_star_sum(n, 1)),
        EquationId::ChiStarK(k) => Ok(chi_star_sum(n, k)),
        EquationId::Alpha(_) | EquationId::Beta(_) => {
            Err(Error::NoPathExpansion(id.name()))
        }
    }
}

enum WeightKind {
    /// `(mu)^{Peak} f3^{n - Peak}` with plain `UD` peaks.
    Peaks,
    /// Same with `UD^k` peaks.
    PeaksK,
    /// `(mu)^{n - Val} f3^{Val}` with small valleys.
    Valleys,
}

fn dyck_weighted(n: usize, k: u32, kind: WeightKind) -> MultiPoly {
    let mut sum = MultiPoly::zero();
    for path in enum_paths(Family::Dyck, n, k).expect("k >= 1") {
        let st = path_stats(&path);
        let (big, small) = match kind {
            WeightKind::Peaks => (st.peaks, n - st.peaks),
            WeightKind::PeaksK => (st.peaks_k, n - st.peaks_k),
            WeightKind::Valleys => (n - st.val2_k, st.val2_k),
        };
        let weight = &f4().pow(big as u32) * &f3().pow(small as u32);
        sum = &sum + &weight.mul_var_pow(Var::S, st.area2 as u32 / 2);
    }
    sum
}

fn motzkin_area_sum(n: usize, k: u32) -> MultiPoly {
    let mut sum = MultiPoly::zero();
    for path in enum_paths(Family::Motzkin, n, k).expect("k >= 1") {
        let st = path_stats(&path);
        sum = &sum + &MultiPoly::var_pow(Var::S, st.area2 as u32 / 2);
    }
    sum
}

fn dyck_area_sum(n: usize, k: u32) -> MultiPoly {
    let mut sum = MultiPoly::zero();
    for path in enum_paths(Family::Dyck, n, k).expect("k >= 1") {
        let st = path_stats(&path);
        sum = &sum + &MultiPoly::var_pow(Var::S, st.area2 as u32 / 2);
    }
    sum
}

fn chi_star_sum(n: usize, k: u32) -> MultiPoly {
    let mut sum = MultiPoly::zero();
    for path in enum_paths(Family::Dyck, n, k).expect("k >= 1") {
        sum = &sum + &wt_star(&path).expect("enumerated Dyck path");
    }
    sum
}

/// The recursive empty-dimer weight of a `k`-Dyck path.
///
/// Multiplicative over prime factors. A prime `U w_1 D ... w_k D` weighs
/// `q f3 prod_i q^{(k+1-i)|w_i|} wt*(w_i)` when `w_1` is nonempty and
/// `(m' + q f3) prod_{i>=2} ...` when it is empty; the zig-zag path
/// `(UD^k)^n` therefore weighs `(m' + q f3)^n`.
pub fn wt_star(path: &LatticePath) -> Result<MultiPoly> {
    if path.family() != Family::Dyck {
        return Err(Error::WrongFamily {
            expected: "dyck",
            got: path.family().name(),
        });
    }
    Ok(wt_star_word(path, path.k()))
}

fn wt_star_word(path: &LatticePath, k: u32) -> MultiPoly {
    let mut out = MultiPoly::one();
    for prime in prime_decompose(path).expect("dyck path") {
        out = &out * &wt_star_prime(&prime, k);
    }
    out
}

fn wt_star_prime(prime: &LatticePath, k: u32) -> MultiPoly {
    let comps = dyck_components(prime).expect("nonempty dyck prime");
    debug_assert!(comps[k as usize].is_empty(), "prime path");
    let inner = &comps[..k as usize];
    let start = if inner[0].is_empty() {
        // m' + q f3
        &m_prime() + &f3().mul_var_pow(Var::Q, 1)
    } else {
        f3().mul_var_pow(Var::Q, 1)
    };
    let first = usize::from(inner[0].is_empty());
    let mut weight = start;
    for (i, lambda) in inner.iter().enumerate().skip(first) {
        let q_pow = (k as usize - i) * lambda.size();
        weight = &weight * &wt_star_word(lambda, k).mul_var_pow(Var::Q, q_pow as u32);
    }
    weight
}

/// The type-B Schroeder side of the empty-dimer duality:
/// `sum over Sch^B(n;k) of (m-1)^{N(H)} f3^{N(U)} q^{d}` with
/// `d = Area(lift) + n - N(H)`.
pub fn schb_weight_sum(n: usize, k: u32) -> Result<MultiPoly> {
    let mut sum = MultiPoly::zero();
    for path in enum_paths(Family::SchroederB, n, k)? {
        let st = path_stats(&path);
        let d = st.d_stat.expect("type-B path has d");
        let weight = &m_prime().pow(st.n_h as u32) * &f3().pow(st.n_u as u32);
        sum = &sum + &weight.mul_var_pow(Var::Q, d as u32);
    }
    Ok(sum)
}

/// The tree-statistic polynomial of the open-problem experiment:
/// `zeta'_n = sum over ternary trees of size n of m^{N(T)} s^{Area}`.
pub fn zeta_tree_sum(n: usize) -> Result<MultiPoly> {
    let mut sum = MultiPoly::zero();
    for path in enum_paths(Family::Dyck, n, 2)? {
        if path.is_empty() {
            sum = &sum + &MultiPoly::one();
            continue;
        }
        let tree = dyck_to_tree(&path)?;
        let nt = tree_statistic_nt(&tree)? as u32;
        let area = path_stats(&path).area2 as u32 / 2;
        let term = MultiPoly::var_pow(Var::M, nt).mul_var_pow(Var::S, area);
        sum = &sum + &term;
    }
    Ok(sum)
}
