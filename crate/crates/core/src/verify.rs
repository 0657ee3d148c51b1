//! Verification suites: every identity and theorem the crate implements,
//! checked over a finite grid and collected into a [`Report`].

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Deserialize;

use crate::appendix::{fiber_law_report, leading_coeff_report, verify_alt_volume_lemma, BoundaryRule};
use crate::arith::json::RationalJson;
use crate::arith::{binomial, int_pow};
use crate::combinatorics::{
    cached_swap_table, even_pairing_identity, facet_recursion_probe, kreweras_u, second_moment_probe, swap_table,
    zigzag, Limits, SwapTable,
};
use crate::error::{Error, Result};
use crate::hk::{
    convergence_probe, ehk_ehrhart, ehk_function, ehk_matrix, ehrhart_coeff_check, gm_limit, parity_check,
    scan_monotone_d, scan_monotone_p,
};
use crate::matrices::StructuredMatrix;
use crate::polytope::{count_extended, count_fibonacci};
use crate::rep_ring::{ehk_quadric_repring, is_prime};
use crate::report::Report;
use crate::{Integer, Rational};

/// Word length for the fiber law.
pub const FIBER_LEN: usize = 10;
const CONVERGENCE_GOLDEN: &str = include_str!("../tests/golden/convergence_max.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Ehrhart,
    MonotoneD,
    MonotoneP,
    Parity,
    Convergence,
    Appendix,
    Volumes,
    Kreweras,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Identities,
        Suite::Ehrhart,
        Suite::MonotoneD,
        Suite::MonotoneP,
        Suite::Parity,
        Suite::Convergence,
        Suite::Appendix,
        Suite::Volumes,
        Suite::Kreweras,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Ehrhart => "ehrhart",
            Suite::MonotoneD => "monotone-d",
            Suite::MonotoneP => "monotone-p",
            Suite::Parity => "parity",
            Suite::Convergence => "convergence",
            Suite::Appendix => "appendix",
            Suite::Volumes => "volumes",
            Suite::Kreweras => "kreweras",
            Suite::All => "all",
        }
    }

    pub fn default_bounds(self) -> Bounds {
        let (d_max, p_max, n_max) = match self {
            Suite::Identities => (8, 31, 12),
            Suite::Ehrhart => (10, 0, 6),
            Suite::MonotoneD => (12, 31, 0),
            Suite::MonotoneP => (12, 199, 0),
            Suite::Parity => (10, 0, 0),
            Suite::Convergence => (8, 999, 0),
            Suite::Appendix => (0, 0, 6),
            Suite::Volumes => (0, 0, 6),
            Suite::Kreweras => (0, 0, 9),
            Suite::All => (0, 0, 0),
        };
        Bounds { d_max, p_max, n_max }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Grid bounds. `n_max` is the matrix half-size for `identities`, the
/// dilation bound for `ehrhart` and the permutation/word size elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub d_max: usize,
    pub p_max: usize,
    pub n_max: usize,
}

fn odd_primes(p_max: usize) -> Vec<usize> {
    (3..=p_max).step_by(2).filter(|&p| is_prime(p as u64)).collect()
}

fn table(d: usize, cache: Option<&Path>) -> Result<SwapTable> {
    match cache {
        Some(dir) => cached_swap_table(dir, d, Limits::default().swap_d),
        None => swap_table(d),
    }
}

pub fn run(suite: Suite, bounds: Bounds, cache: Option<&Path>) -> Result<Report> {
    let b = bounds;
    match suite {
        Suite::Identities => {
            let mut r = triple_agreement(b.d_max, b.p_max)?;
            r.extend(fibonacci_theorem(b.n_max, b.d_max));
            r.extend(matrix_identities(b.n_max, b.d_max));
            r.title = format!("identities (d <= {}, p <= {}, n <= {})", b.d_max, b.p_max, b.n_max);
            Ok(r)
        }
        Suite::Ehrhart => hstar_suite(b.d_max, b.n_max, cache),
        Suite::MonotoneD => monotone_d_suite(b.d_max, b.p_max),
        Suite::MonotoneP => monotone_p_suite(b.d_max, b.p_max),
        Suite::Parity => parity_suite(b.d_max),
        Suite::Convergence => convergence_suite(b.d_max, b.p_max),
        Suite::Appendix => appendix_suite(FIBER_LEN, b.n_max),
        Suite::Volumes => volumes_suite(b.n_max),
        Suite::Kreweras => kreweras_suite(b.n_max, cache),
        Suite::All => {
            let mut r = Report::new("all suites");
            for s in Suite::EACH {
                r.extend(run(s, s.default_bounds(), cache)?);
            }
            Ok(r)
        }
    }
}

/// Representation ring, matrix and Ehrhart forms agree for odd primes.
pub fn triple_agreement(d_max: usize, p_max: usize) -> Result<Report> {
    let cells: Vec<(usize, usize)> =
        odd_primes(p_max).into_iter().flat_map(|p| (1..=d_max).map(move |d| (p, d))).collect();
    let rows = cells
        .par_iter()
        .map(|&(p, d)| Ok((p, d, ehk_quadric_repring(p, d)?, ehk_matrix(p, d)?, ehk_ehrhart(p, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut r = Report::new("three methods agree");
    for (p, d, ring, mat, ehr) in rows {
        r.assert(format!("p={p} d={d}"), ring == mat && mat == ehr, format!("{ring} / {mat} / {ehr}"));
    }
    Ok(r)
}

/// `[T_n^{d+1}]_11 = (2n+1)^d + 2^d |(n-1) F_d|`.
pub fn fibonacci_theorem(n_max: usize, d_max: usize) -> Report {
    let mut r = Report::new("[T_n^(d+1)]_11 = (2n+1)^d + 2^d |(n-1)F_d|");
    for n in 1..=n_max {
        for d in 1..=d_max {
            let lhs = StructuredMatrix::<Integer>::T { a: n }.corner_power(d + 1);
            let rhs = int_pow(2 * n as u64 + 1, d) + int_pow(2, d) * count_fibonacci::<Integer>(d, n - 1);
            r.assert(format!("n={n} d={d}"), lhs == rhs, format!("{lhs} vs {rhs}"));
        }
    }
    r
}

/// `[Z^{d+1}]_11 = 2^d |(n-1) F_d|` and `[N_a^{d+1}]_11 = |a E_{d-2}|`.
pub fn matrix_identities(n_max: usize, d_max: usize) -> Report {
    let mut r = Report::new("Z and N identities");
    for n in 1..=n_max {
        for d in 1..=d_max {
            let z = StructuredMatrix::<Integer>::Z { n }.corner_power(d + 1);
            let want = int_pow(2, d) * count_fibonacci::<Integer>(d, n - 1);
            r.assert(format!("Z n={n} d={d}"), z == want, format!("{z} vs {want}"));
            let nm = StructuredMatrix::<Integer>::N { a: n }.corner_power(d + 1);
            let ext = if d <= 2 { Integer::one() } else { count_extended(d - 2, n) };
            r.assert(format!("N a={n} d={d}"), nm == ext, format!("{nm} vs {ext}"));
        }
    }
    r
}

/// h*-consistency, swap-table invariants and the Ehrhart coefficient formulas.
pub fn hstar_suite(d_max: usize, k_max: usize, cache: Option<&Path>) -> Result<Report> {
    let e = zigzag::<Integer>(d_max);
    let mut r = Report::new(format!("Ehrhart and h* (d <= {d_max}, k <= {k_max})"));
    for d in 1..=d_max {
        let t = table(d, cache)?;
        let bad: Vec<usize> =
            (0..=k_max).filter(|&k| t.ehrhart_count(k) != count_fibonacci::<Integer>(d, k)).collect();
        r.assert(format!("d={d} h* counts"), bad.is_empty(), format!("mismatch at k in {bad:?}"));
        let v = t.invariant_violations(&e[d]);
        r.assert(format!("d={d} swap invariants"), v.is_empty(), v.join("; "));
    }
    for d in 3..=d_max {
        r.extend(ehrhart_coeff_check(d)?);
    }
    Ok(r)
}

/// `u^n_{n-r} = Σ_m C(m, r) s_n(m)`, the even pairing identity, and the two
/// reported probes.
pub fn kreweras_suite(n_max: usize, cache: Option<&Path>) -> Result<Report> {
    let mut r = Report::new(format!("Kreweras identity (n <= {n_max})"));
    let tables = (1..=n_max).map(|n| table(n, cache)).collect::<Result<Vec<_>>>()?;
    for t in &tables {
        let n = t.d;
        for rr in 0..=n {
            let u = kreweras_u(n, n - rr)?;
            let s = t.binomial_moment(rr);
            r.assert(format!("n={n} r={rr}"), u == s, format!("u = {u}, Σ C(m,r) s = {s}"));
        }
        if let Some(ok) = even_pairing_identity(t) {
            r.assert(format!("n={n} even pairing"), ok, "");
        }
    }
    r.extend(facet_recursion_probe(&tables));
    r.extend(second_moment_probe(&tables));
    Ok(r)
}

/// Reduced function against the matrix form, and the degree claim.
pub fn function_agreement(d_max: usize, p_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("rational function (d <= {d_max}, odd p <= {p_max})"));
    for d in 1..=d_max {
        let f = ehk_function(d)?;
        let bad = (3..=p_max)
            .step_by(2)
            .map(|p| Ok((p, f.eval(p)?, ehk_matrix(p, d)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .find(|(_, a, b)| a != b);
        let detail = match &bad {
            Some((p, a, b)) => format!("p={p}: {a} vs {b}"),
            None => format!("e_HK = {}", f.reduced),
        };
        r.assert(format!("d={d} values"), bad.is_none(), detail);
        let degs = (f.unreduced_num.degree(), f.unreduced_den.degree());
        r.assert(format!("d={d} degrees"), degs == (Some(d), Some(d)), format!("{degs:?}"));
    }
    Ok(r)
}

pub fn monotone_d_suite(d_max: usize, p_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("strictly decreasing in d (d <= {d_max}, primes p <= {p_max})"));
    for p in odd_primes(p_max) {
        r.extend(scan_monotone_d(p, d_max)?.0);
    }
    Ok(r)
}

pub fn monotone_p_suite(d_max: usize, p_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("non-increasing in p (d <= {d_max}, odd p <= {p_max})"));
    for d in 1..=d_max {
        r.extend(scan_monotone_p(d, p_max)?.report());
    }
    Ok(r)
}

/// Degree claim asserted, parity of exponents reported.
pub fn parity_suite(d_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("parity of the unreduced pair (d <= {d_max})"));
    for d in 1..=d_max {
        let par = parity_check(d)?;
        r.probe(
            format!("d={d} only exponents ≡ d mod 2"),
            par.holds(),
            format!("num {:?}, den {:?}", par.num_degrees, par.den_degrees),
        );
    }
    Ok(r)
}

#[derive(Deserialize)]
struct GoldenMax {
    d: usize,
    max: RationalJson,
}

#[derive(Deserialize)]
struct Golden {
    p_max: usize,
    maxima: Vec<GoldenMax>,
}

/// Recorded maxima of `(e_HK - limit) p^2` over odd `p <= p_max`.
pub fn convergence_golden() -> Result<(usize, Vec<(usize, Rational)>)> {
    let g: Golden = serde_json::from_str(CONVERGENCE_GOLDEN).map_err(|e| Error::Inconsistent(e.to_string()))?;
    let maxima = g
        .maxima
        .iter()
        .map(|m| Ok((m.d, Rational::try_from(&m.max).map_err(Error::Inconsistent)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((g.p_max, maxima))
}

/// Approach to `1 + E_d / d!` from above and the `O(p^-2)` regression bound.
pub fn convergence_suite(d_max: usize, p_max: usize) -> Result<Report> {
    let (golden_p, maxima) = convergence_golden()?;
    let mut r = Report::new(format!("convergence to 1 + E_d/d! (d <= {d_max}, odd p <= {p_max})"));
    let ps: Vec<usize> = (3..=p_max).step_by(2).collect();
    for d in 1..=d_max {
        let limit = gm_limit(d);
        let rows = convergence_probe(d, &ps)?;
        let constant = rows.iter().all(|(_, g)| g.is_zero());
        if constant {
            r.probe(format!("d={d} equals the limit"), true, format!("constant {limit}"));
        } else {
            let below = rows.iter().find(|(_, g)| *g <= Rational::zero());
            r.assert(
                format!("d={d} above the limit"),
                below.is_none(),
                below.map_or(format!("limit {limit}"), |(p, g)| format!("p={p}: gap·p² = {g}")),
            );
        }
        let observed = rows.iter().map(|(_, g)| g.clone()).max().unwrap_or_default();
        match maxima.iter().find(|(gd, _)| *gd == d) {
            Some((_, cap)) if p_max <= golden_p => {
                r.assert(format!("d={d} bounded"), observed <= *cap, format!("max {observed}, golden {cap}"));
            }
            Some((_, cap)) => {
                let detail = format!("max {observed}, golden {cap} (p <= {golden_p})");
                r.probe(format!("d={d} bounded"), observed <= *cap, detail);
            }
            None => {
                r.probe(format!("d={d} bounded"), true, format!("max {observed}, no golden value"));
            }
        }
    }
    Ok(r)
}

/// Fiber law and leading-coefficient laws.
pub fn appendix_suite(fiber_len: usize, n_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("appendix (words <= {fiber_len}, n <= {n_max})"));
    r.extend(fiber_law_report(fiber_len, BoundaryRule::Proof)?);
    r.extend(leading_coeff_report(&[0, 1, 2, 3, 5], n_max)?);
    Ok(r)
}

pub fn volumes_suite(n_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("alternating volume lemma (n <= {n_max})"));
    for n in 1..=n_max {
        r.extend(verify_alt_volume_lemma(n)?);
    }
    Ok(r)
}

/// `C(c, 2) < (3d^2 - 17d + 25) / 24` for `c = d/2 - 1`: the pairing alone
/// does not settle the second-moment inequality.
pub fn pairing_shortfall(d: usize) -> bool {
    let c = d / 2 - 1;
    let di = d as i64;
    Rational::from_integer(binomial(c, 2) * 24) < Rational::from_integer((3 * di * di - 17 * di + 25).into())
}
