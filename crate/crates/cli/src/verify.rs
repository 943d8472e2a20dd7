//! Verification suites: each suite is a grid of independent cells that
//! recompute one identity family from scratch. Cells run in parallel;
//! output is buffered and printed in grid order, so stdout is
//! byte-identical across runs. Wall time goes to stderr.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use latpath_core::closedforms;
use latpath_core::dimers::{brute_gf, Regime};
use latpath_core::paths::{enum_paths, path_stats, Family};
use latpath_core::polyring::{MultiPoly, Var};
use latpath_core::recurrences::{compute_g, RecurrenceKind};
use latpath_core::series::{
    normalized_coeff, path_sum, residual, schb_weight_sum, solve, zeta_tree_sum, EquationId,
};

pub struct Cell {
    pub label: String,
    pub run: Box<dyn Fn() -> Result<(), String> + Send + Sync>,
}

pub struct SuiteReport {
    pub suite: String,
    /// (label, pass, failure detail)
    pub cells: Vec<(String, bool, Option<String>)>,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cells.iter().filter(|c| c.1).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.cells.len()
    }
}

/// Grid bounds of a suite run.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub max_n: usize,
    pub max_k: u32,
    pub order: usize,
}

pub const SUITES: [&str; 6] = [
    "recurrence-vs-dimers",
    "series-vs-paths",
    "closedform-vs-enum",
    "schb-duality",
    "specialization-ladders",
    "zeta-problem1",
];

/// Per-suite default grid bounds; flags and the config file override.
pub fn default_bounds(suite: &str) -> Bounds {
    match suite {
        "recurrence-vs-dimers" => Bounds { max_n: 8, max_k: 3, order: 8 },
        "series-vs-paths" => Bounds { max_n: 6, max_k: 3, order: 8 },
        "closedform-vs-enum" => Bounds { max_n: 6, max_k: 3, order: 8 },
        "schb-duality" => Bounds { max_n: 5, max_k: 3, order: 8 },
        "specialization-ladders" => Bounds { max_n: 7, max_k: 3, order: 8 },
        "zeta-problem1" => Bounds { max_n: 4, max_k: 2, order: 8 },
        other => panic!("unknown suite {other}"),
    }
}

pub fn run_suite(suite: &str, bounds: Bounds) -> SuiteReport {
    let cells = match suite {
        "recurrence-vs-dimers" => recurrence_vs_dimers(bounds),
        "series-vs-paths" => series_vs_paths(bounds),
        "closedform-vs-enum" => closedform_vs_enum(bounds),
        "schb-duality" => schb_duality(bounds),
        "specialization-ladders" => specialization_ladders(bounds),
        "zeta-problem1" => zeta_problem1(bounds),
        other => panic!("unknown suite {other}"),
    };
    let start = Instant::now();
    let results: Vec<(String, bool, Option<String>)> = cells
        .par_iter()
        .map(|cell| match (cell.run)() {
            Ok(()) => (cell.label.clone(), true, None),
            Err(detail) => (cell.label.clone(), false, Some(detail)),
        })
        .collect();
    SuiteReport {
        suite: suite.to_string(),
        cells: results,
        wall_ms: start.elapsed().as_millis(),
    }
}

fn mismatch(label: &str, expected: &MultiPoly, got: &MultiPoly) -> String {
    format!("{label}: expected {expected}, got {got}")
}

fn recurrence_vs_dimers(bounds: Bounds) -> Vec<Cell> {
    let mut pairs: Vec<(RecurrenceKind, Regime)> = vec![
        (RecurrenceKind::Fibonacci, Regime::Standard),
        (RecurrenceKind::Dist2, Regime::SameColorDist2),
        (RecurrenceKind::Type2G(2), Regime::ComponentGap(2)),
        (RecurrenceKind::EmptyDimer, Regime::EmptyDimer),
    ];
    for k in 1..=bounds.max_k {
        pairs.push((RecurrenceKind::Type3(k), Regime::Glued(k)));
        pairs.push((RecurrenceKind::Type2H(k), Regime::ComponentGap(k)));
    }
    let mut cells = Vec::new();
    for (kind, regime) in pairs {
        for n in 0..=bounds.max_n as u32 {
            cells.push(Cell {
                label: format!("{} == brute {} at n={n}", kind.name(), regime.name()),
                run: Box::new(move || {
                    let lhs = compute_g(kind, i64::from(n)).map_err(|e| e.to_string())?;
                    let rhs = brute_gf(n, regime).map_err(|e| e.to_string())?;
                    for order in 0..=lhs.order().min(rhs.order()) {
                        if lhs.coeff(order) != rhs.coeff(order) {
                            return Err(mismatch(
                                &format!("order {order}"),
                                rhs.coeff(order),
                                lhs.coeff(order),
                            ));
                        }
                    }
                    Ok(())
                }),
            });
        }
    }
    cells
}

fn equation_ids(max_k: u32) -> Vec<EquationId> {
    let mut ids = vec![EquationId::Chi, EquationId::ChiStar, EquationId::Zeta];
    for k in 1..=max_k {
        ids.extend([
            EquationId::ChiStarK(k),
            EquationId::Nu(k),
            EquationId::NuMotzkin(k),
            EquationId::Xi(k),
            EquationId::Kappa(k),
            EquationId::Alpha(k),
            EquationId::Beta(k),
        ]);
    }
    ids
}

fn series_vs_paths(bounds: Bounds) -> Vec<Cell> {
    let mut cells = Vec::new();
    let mut expandable = vec![EquationId::Chi, EquationId::Zeta];
    for k in 1..=bounds.max_k {
        expandable.extend([
            EquationId::Nu(k),
            EquationId::NuMotzkin(k),
            EquationId::Xi(k),
            EquationId::Kappa(k),
            EquationId::ChiStarK(k),
        ]);
    }
    for id in expandable {
        let max_n = bounds.max_n;
        cells.push(Cell {
            label: format!("{} coefficients equal path sums, n <= {max_n}", id.name()),
            run: Box::new(move || {
                let x = solve(id, max_n).map_err(|e| e.to_string())?;
                for n in 0..=max_n {
                    let mut lhs = normalized_coeff(id, &x, n).map_err(|e| e.to_string())?;
                    if id == EquationId::Zeta {
                        lhs = lhs.eval_ints(&[(Var::M, 1)]);
                    }
                    let rhs = path_sum(id, n).map_err(|e| e.to_string())?;
                    if lhs != rhs {
                        return Err(mismatch(&format!("n={n}"), &rhs, &lhs));
                    }
                }
                Ok(())
            }),
        });
    }
    for id in equation_ids(bounds.max_k) {
        let order = bounds.order;
        cells.push(Cell {
            label: format!("{} residual vanishes through order {order}", id.name()),
            run: Box::new(move || {
                let x = solve(id, order).map_err(|e| e.to_string())?;
                let res = residual(id, &x).map_err(|e| e.to_string())?;
                match res.lowest_nonzero() {
                    None => Ok(()),
                    Some(bad) => Err(format!(
                        "residual nonzero at order {bad}: {}",
                        res.coeff(bad)
                    )),
                }
            }),
        });
    }
    cells
}

fn closedform_vs_enum(bounds: Bounds) -> Vec<Cell> {
    let mut cells = Vec::new();
    let int_mismatch =
        |label: &str, expected: &BigInt, got: &BigInt| format!("{label}: expected {expected}, got {got}");
    for k in 1..=bounds.max_k {
        for n in 0..=bounds.max_n as u64 {
            cells.push(Cell {
                label: format!("counts vs enumeration at n={n}, k={k}"),
                run: Box::new(move || {
                    let grid: [(&str, Family, BigInt); 4] = [
                        ("fuss-catalan", Family::Dyck, closedforms::fuss_catalan(n, k).unwrap()),
                        ("sch-a", Family::SchroederA, closedforms::sch_a(n, k).unwrap()),
                        ("sch-b", Family::SchroederB, closedforms::sch_b(n, k).unwrap()),
                        ("motzkin", Family::Motzkin, closedforms::motzkin(n, k).unwrap()),
                    ];
                    for (name, family, closed) in grid {
                        let listed =
                            BigInt::from(enum_paths(family, n as usize, k).unwrap().len());
                        if listed != closed {
                            return Err(int_mismatch(name, &closed, &listed));
                        }
                    }
                    // peak distribution against the Runyon numbers
                    if n >= 1 {
                        let dyck = enum_paths(Family::Dyck, n as usize, k).unwrap();
                        for m in 0..n {
                            let with = dyck
                                .iter()
                                .filter(|p| path_stats(p).peaks == m as usize + 1)
                                .count();
                            let closed = closedforms::runyon(n, k, m).unwrap();
                            if BigInt::from(with) != closed {
                                return Err(int_mismatch(
                                    &format!("runyon m={m}"),
                                    &closed,
                                    &BigInt::from(with),
                                ));
                            }
                        }
                    }
                    Ok(())
                }),
            });
        }
        for n in 0..=bounds.max_n.min(5) as u64 {
            cells.push(Cell {
                label: format!("a-triangle vs enumeration at n={n}, k={k}"),
                run: Box::new(move || {
                    for j in 0..=n {
                        let listed =
                            BigInt::from(closedforms::enum_a_paths(n, k, j).unwrap().len());
                        let closed = closedforms::a_count(n, k, j).unwrap();
                        if listed != closed {
                            return Err(format!("j={j}: expected {closed}, got {listed}"));
                        }
                    }
                    Ok(())
                }),
            });
        }
    }
    cells.push(Cell {
        label: "both Sch^B closed forms agree, n <= 12, k <= 5".into(),
        run: Box::new(|| {
            for n in 0..=12u64 {
                for k in 1..=5u32 {
                    let a = closedforms::sch_b(n, k).unwrap();
                    let b = closedforms::sch_b_peak_form(n, k).unwrap();
                    if a != b {
                        return Err(format!("n={n} k={k}: {a} vs {b}"));
                    }
                }
            }
            Ok(())
        }),
    });
    cells.push(Cell {
        label: "printed a-triangle rows".into(),
        run: Box::new(|| {
            let rows: [(u64, u32, &[i64]); 4] = [
                (3, 2, &[12, 7, 1]),
                (4, 2, &[55, 45, 12, 1]),
                (4, 3, &[140, 78, 15, 1]),
                (4, 4, &[285, 120, 18, 1]),
            ];
            for (n, k, row) in rows {
                for (j, &v) in row.iter().enumerate() {
                    let got = closedforms::a_count(n, k, j as u64).unwrap();
                    if got != BigInt::from(v) {
                        return Err(format!("A({n},{k},{j}): expected {v}, got {got}"));
                    }
                }
            }
            Ok(())
        }),
    });
    cells
}

fn schb_duality(bounds: Bounds) -> Vec<Cell> {
    let mut cells = Vec::new();
    for k in 1..=bounds.max_k {
        for n in 0..=bounds.max_n {
            cells.push(Cell {
                label: format!("Dyck wt* sum == Sch^B d-sum at n={n}, k={k}"),
                run: Box::new(move || {
                    let dyck_side = path_sum(EquationId::ChiStarK(k), n).unwrap();
                    let schb_side = schb_weight_sum(n, k).unwrap();
                    if dyck_side != schb_side {
                        return Err(mismatch("termwise", &dyck_side, &schb_side));
                    }
                    // d is defined and non-negative on every path
                    for p in enum_paths(Family::SchroederB, n, k).unwrap() {
                        if path_stats(&p).d_stat.is_none() {
                            return Err(format!("missing d on {}", p.word_string()));
                        }
                    }
                    Ok(())
                }),
            });
        }
    }
    cells
}

fn specialization_ladders(bounds: Bounds) -> Vec<Cell> {
    let order = bounds.max_n;
    let corner = move |id, x: &latpath_core::RSeries, n: usize, m: i64, u: i64| -> BigInt {
        normalized_coeff(id, x, n)
            .unwrap()
            .eval_ints(&[(Var::M, m), (Var::U, u), (Var::S, 1)])
            .as_integer()
            .expect("fully bound")
    };
    let mut cells = Vec::new();
    cells.push(Cell {
        label: format!("chi corners: Catalan / 2^n Catalan / Schroeder / S_1(n;1,1), n <= {order}"),
        run: Box::new(move || {
            let chi = solve(EquationId::Chi, order).unwrap();
            for n in 0..=order {
                let nn = n as u64;
                let checks = [
                    ("(0,0)", corner(EquationId::Chi, &chi, n, 1, 1), closedforms::catalan(nn)),
                    (
                        "(0,1)",
                        corner(EquationId::Chi, &chi, n, 1, 2),
                        BigInt::from(2).pow(n as u32) * closedforms::catalan(nn),
                    ),
                    ("(1,0)", corner(EquationId::Chi, &chi, n, 2, 1), closedforms::schroeder(nn)),
                    (
                        "(1,1)",
                        corner(EquationId::Chi, &chi, n, 2, 2),
                        closedforms::s_k_11(nn, 1).unwrap(),
                    ),
                ];
                for (corner_name, got, expect) in checks {
                    if got != expect {
                        return Err(format!("n={n} {corner_name}: expected {expect}, got {got}"));
                    }
                }
            }
            Ok(())
        }),
    });
    for k in 1..=bounds.max_k {
        cells.push(Cell {
            label: format!("S_k(n;1,0) = |Sch^A(n;{k})|, n <= {order}"),
            run: Box::new(move || {
                let nu = solve(EquationId::Nu(k), order).unwrap();
                for n in 0..=order {
                    let got = corner(EquationId::Nu(k), &nu, n, 2, 1);
                    let expect = closedforms::sch_a(n as u64, k).unwrap();
                    if got != expect {
                        return Err(format!("n={n}: expected {expect}, got {got}"));
                    }
                }
                Ok(())
            }),
        });
        cells.push(Cell {
            label: format!("S^III(n;1,0) = |Sch^B(n;{k})|, n <= {order}"),
            run: Box::new(move || {
                let kappa = solve(EquationId::Kappa(k), order).unwrap();
                for n in 0..=order {
                    let got = corner(EquationId::Kappa(k), &kappa, n, 2, 1);
                    let expect = closedforms::sch_b(n as u64, k).unwrap();
                    if got != expect {
                        return Err(format!("n={n}: expected {expect}, got {got}"));
                    }
                }
                Ok(())
            }),
        });
        cells.push(Cell {
            label: format!("xi at (2,r,1,2), k={k}, vs closed form, n <= {order}"),
            run: Box::new(move || {
                let xi = solve(EquationId::Xi(k), order).unwrap();
                for n in 0..=order {
                    let got = corner(EquationId::Xi(k), &xi, n, 2, 2);
                    let expect = closedforms::xi_spec_2212(n as u64, k).unwrap();
                    if got != expect {
                        return Err(format!("n={n}: expected {expect}, got {got}"));
                    }
                    if k == 1 {
                        let catalan4 =
                            BigInt::from(4).pow(n as u32) * closedforms::catalan(n as u64);
                        if got != catalan4 {
                            return Err(format!("n={n}: expected {catalan4}, got {got}"));
                        }
                    }
                }
                Ok(())
            }),
        });
    }
    cells
}

fn zeta_problem1(bounds: Bounds) -> Vec<Cell> {
    let top = bounds.max_n.max(4);
    let mut cells = Vec::new();
    for n in 1..=top {
        cells.push(Cell {
            label: if n <= 3 {
                format!("zeta_{n} equals the tree-statistic sum")
            } else {
                format!("zeta_{n} differs from the tree-statistic sum")
            },
            run: Box::new(move || {
                let zeta = solve(EquationId::Zeta, n).unwrap();
                let solved = normalized_coeff(EquationId::Zeta, &zeta, n).unwrap();
                let tree = zeta_tree_sum(n).unwrap();
                if n <= 3 && solved != tree {
                    return Err(mismatch("agreement expected", &solved, &tree));
                }
                if n >= 4 && solved == tree {
                    return Err(format!("expected disagreement at n={n}, both equal {solved}"));
                }
                Ok(())
            }),
        });
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_failing_cell_fails_the_report() {
        let report = SuiteReport {
            suite: "synthetic".into(),
            cells: vec![
                ("good".into(), true, None),
                ("bad".into(), false, Some("expected 1, got 2".into())),
            ],
            wall_ms: 0,
        };
        assert_eq!(report.passed(), 1);
        assert!(!report.all_passed());
    }

    #[test]
    fn every_suite_has_cells() {
        for suite in SUITES {
            let bounds = Bounds { max_n: 1, max_k: 1, order: 1 };
            let cells = match suite {
                "recurrence-vs-dimers" => recurrence_vs_dimers(bounds),
                "series-vs-paths" => series_vs_paths(bounds),
                "closedform-vs-enum" => closedform_vs_enum(bounds),
                "schb-duality" => schb_duality(bounds),
                "specialization-ladders" => specialization_ladders(bounds),
                "zeta-problem1" => zeta_problem1(bounds),
                _ => unreachable!(),
            };
            assert!(!cells.is_empty(), "{suite}");
        }
    }
}
