//! Empirical probes on swap tables: the `s_d(1)` recursion, the
//! second-moment inequality behind eventual monotonicity, and the even-`d`
//! pairing identity. Probes are reported, the identity is asserted.

use super::SwapTable;
use crate::arith::{binomial, rat_int};
use crate::report::Report;
use crate::{Integer, Rational};

fn table(tables: &[SwapTable], d: usize) -> &SwapTable {
    let t = &tables[d - 1];
    assert_eq!(t.d, d, "tables must be indexed by d - 1");
    t
}

/// Does `s_{d+1}(1) = s_d(1) + s_{d-1}(1) + d - 1` hold for `d` in
/// `3..=tables.len() - 1`? `tables[i]` is the swap table of dimension `i + 1`.
pub fn facet_recursion_probe(tables: &[SwapTable]) -> Report {
    let mut report = Report::new("s_{d+1}(1) = s_d(1) + s_{d-1}(1) + d - 1");
    for d in 3..tables.len() {
        let lhs = table(tables, d + 1).get(1);
        let rhs = table(tables, d).get(1) + table(tables, d - 1).get(1) + Integer::from(d - 1);
        report.probe(format!("d = {d}"), lhs == rhs, format!("{lhs} vs {rhs}"));
    }
    report
}

/// `24 u^n_{n-2} / u^n_n - 3n^2 + 17n - 25` with `u^n_{n-r} = Σ_m C(m, r) s_n(m)`.
pub fn second_moment_gap(t: &SwapTable) -> Rational {
    let n = t.d as i64;
    let ratio = Rational::new(t.binomial_moment(2) * 24, t.total());
    ratio - rat_int(3 * n * n - 17 * n + 25)
}

/// Sign of [`second_moment_gap`] for every table with `n >= 2`.
pub fn second_moment_probe(tables: &[SwapTable]) -> Report {
    let mut report = Report::new("24 u^n_{n-2}/u^n_n - 3n^2 + 17n - 25 >= 0");
    for t in tables.iter().filter(|t| t.d >= 2) {
        let gap = second_moment_gap(t);
        report.probe(format!("n = {}", t.d), gap >= rat_int(0), gap.to_string());
    }
    report
}

/// For even `d` with `c = d/2 - 1`:
/// `Σ_m C(m,2) s_d(m) = C(c,2) E_d + Σ_{a=1}^{c} a^2 s_d(c + a)`.
pub fn even_pairing_identity(t: &SwapTable) -> Option<bool> {
    if !t.d.is_multiple_of(2) || t.d < 2 {
        return None;
    }
    let c = t.d / 2 - 1;
    let rhs = binomial(c, 2) * t.total()
        + (1..=c).map(|a| Integer::from(a * a) * t.get(c + a)).sum::<Integer>();
    Some(t.binomial_moment(2) == rhs)
}
