//! Shared inputs for the criterion benchmarks.

use latpath_core::dimers::Regime;
use latpath_core::recurrences::RecurrenceKind;
use latpath_core::series::EquationId;

/// (label, regime) pairs exercised by the brute-force benchmark.
pub fn regimes() -> Vec<(&'static str, Regime)> {
    vec![
        ("standard", Regime::Standard),
        ("dist2", Regime::SameColorDist2),
        ("glued-2", Regime::Glued(2)),
        ("empty", Regime::EmptyDimer),
    ]
}

/// Recurrence kinds worth timing.
pub fn kinds() -> Vec<(&'static str, RecurrenceKind)> {
    vec![
        ("fibonacci", RecurrenceKind::Fibonacci),
        ("dist2", RecurrenceKind::Dist2),
        ("type-3-2", RecurrenceKind::Type3(2)),
    ]
}

/// Equations worth timing.
pub fn equations() -> Vec<(&'static str, EquationId)> {
    vec![
        ("nu-2", EquationId::Nu(2)),
        ("zeta", EquationId::Zeta),
        ("chi-star-k-2", EquationId::ChiStarK(2)),
    ]
}
