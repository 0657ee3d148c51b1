use rayon::prelude::*;

use super::{ehk_ehrhart, gm_limit};
use crate::error::Result;
use crate::report::Report;
use crate::Rational;

fn odd_range(p_max: usize) -> Vec<usize> {
    (3..=p_max).step_by(2).collect()
}

/// `(p, (e_HK - limit) p^2)` for each `p`.
pub fn convergence_probe(d: usize, ps: &[usize]) -> Result<Vec<(usize, Rational)>> {
    let limit = gm_limit(d);
    ps.par_iter()
        .map(|&p| {
            let gap = ehk_ehrhart(p, d)? - &limit;
            Ok((p, gap * Rational::from_integer((p * p).into())))
        })
        .collect()
}

/// Strict decrease in `d` over `1..=d_max` at fixed `p`. Returns the report
/// and the values for `d = 1..=d_max`.
pub fn scan_monotone_d(p: usize, d_max: usize) -> Result<(Report, Vec<Rational>)> {
    let values = (1..=d_max).into_par_iter().map(|d| ehk_ehrhart(p, d)).collect::<Result<Vec<_>>>()?;
    let mut r = Report::new(format!("e_HK(A_{{{p},d}}) decreasing in d <= {d_max}"));
    for (i, w) in values.windows(2).enumerate() {
        let d = i + 1;
        r.assert(format!("p={p} d={d}"), w[0] > w[1], format!("{} > {}", w[0], w[1]));
    }
    Ok((r, values))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonePScan {
    pub d: usize,
    pub values: Vec<(usize, Rational)>,
    /// First `(p, p')` with `e(p') > e(p)` for consecutive odd `p < p'`.
    pub first_increase: Option<(usize, usize)>,
    pub strictly_decreasing: bool,
    pub constant: bool,
}

impl MonotonePScan {
    pub fn non_increasing(&self) -> bool {
        self.first_increase.is_none()
    }

    /// Non-increase is asserted; strictness is only reported.
    pub fn report(&self) -> Report {
        let mut r = Report::new(format!("e_HK(A_{{p,{}}}) over odd p", self.d));
        let last = self.values.last().map_or(0, |v| v.0);
        let detail = match self.first_increase {
            Some((p, q)) => format!("increase from p={p} to p={q}"),
            None => format!("odd p in [3, {last}]"),
        };
        r.assert(format!("d={} non-increasing", self.d), self.non_increasing(), detail);
        let shape = if self.constant {
            "constant"
        } else if self.strictly_decreasing {
            "strictly decreasing"
        } else {
            "non-strict somewhere"
        };
        r.probe(format!("d={} strictly decreasing", self.d), self.strictly_decreasing, shape);
        r
    }
}

pub fn scan_monotone_p(d: usize, p_max: usize) -> Result<MonotonePScan> {
    let ps = odd_range(p_max);
    let values: Vec<(usize, Rational)> =
        ps.par_iter().map(|&p| Ok((p, ehk_ehrhart(p, d)?))).collect::<Result<Vec<_>>>()?;
    let first_increase = values.windows(2).find(|w| w[1].1 > w[0].1).map(|w| (w[0].0, w[1].0));
    let strictly_decreasing = values.windows(2).all(|w| w[1].1 < w[0].1);
    let constant = values.windows(2).all(|w| w[1].1 == w[0].1);
    Ok(MonotonePScan { d, values, first_increase, strictly_decreasing, constant })
}
