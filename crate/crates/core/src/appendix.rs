//! Corner words, their `{g, l}` shadows, and the leading coefficient of
//! `k ↦ [Q(q, k)^{n+1}]_{(1,1)}`.
//!
//! Letters split into an upper group `{u, c^+, c^-}` and a lower group
//! `{b, c_+, c_-}`. An upper letter is followed by one of `{u, c^+, c_+}`,
//! a lower letter by one of `{b, c^-, c_-}`. The boundary letters are
//! governed by [`BoundaryRule`].

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{factorial, interpolate, rat_int};
use crate::combinatorics::{alt_descent_table, zigzag, AltDescentTable};
use crate::error::{Error, Result};
use crate::matrices::StructuredMatrix;
use crate::polytope::{all_patterns, volume_of_region, Relation};
use crate::report::Report;
use crate::{Integer, Rational};

pub const WORD_CAP: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    B,
    U,
    /// `c^+`
    CPlusUp,
    /// `c^-`
    CMinusUp,
    /// `c_+`
    CPlusDown,
    /// `c_-`
    CMinusDown,
}

impl Letter {
    pub const ALL: [Letter; 6] =
        [Letter::B, Letter::U, Letter::CPlusUp, Letter::CMinusUp, Letter::CPlusDown, Letter::CMinusDown];

    pub fn is_upper(self) -> bool {
        matches!(self, Letter::U | Letter::CPlusUp | Letter::CMinusUp)
    }

    pub fn is_c(self) -> bool {
        !matches!(self, Letter::B | Letter::U)
    }

    /// Whether `next` may follow `self`.
    pub fn allows(self, next: Letter) -> bool {
        if self.is_upper() {
            matches!(next, Letter::U | Letter::CPlusUp | Letter::CPlusDown)
        } else {
            matches!(next, Letter::B | Letter::CMinusUp | Letter::CMinusDown)
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::B => "b",
            Letter::U => "u",
            Letter::CPlusUp => "c^+",
            Letter::CMinusUp => "c^-",
            Letter::CPlusDown => "c_+",
            Letter::CMinusDown => "c_-",
        }
    }

    pub fn shadow(self) -> Gl {
        if self.is_c() {
            Gl::L
        } else {
            Gl::G
        }
    }
}

/// Admissible first and last letters.
///
/// `Proof` is the assignment the fiber argument uses: a lone `l` lifts to
/// `c^+`, and a trailing `l` after `g ... g` lifts to `u ... u c^+` or
/// `b ... b c^-`. That forces first letters in `{u, c^+, c_+}` and last
/// letters in `{u, c^+, c^-}`. `Printed` swaps the two `c` letters
/// (first in `{u, c^+, c^-}`, last in `{u, c^+, c_+}`); under it the fiber
/// over `gl` has two elements, so the fiber law fails.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BoundaryRule {
    #[default]
    Proof,
    Printed,
}

impl BoundaryRule {
    pub fn first_ok(self, l: Letter) -> bool {
        match self {
            BoundaryRule::Proof => matches!(l, Letter::U | Letter::CPlusUp | Letter::CPlusDown),
            BoundaryRule::Printed => matches!(l, Letter::U | Letter::CPlusUp | Letter::CMinusUp),
        }
    }

    pub fn last_ok(self, l: Letter) -> bool {
        match self {
            BoundaryRule::Proof => matches!(l, Letter::U | Letter::CPlusUp | Letter::CMinusUp),
            BoundaryRule::Printed => matches!(l, Letter::U | Letter::CPlusUp | Letter::CPlusDown),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerWord {
    pub letters: Vec<Letter>,
}

impl CornerWord {
    pub fn is_valid(&self, rule: BoundaryRule) -> bool {
        let (Some(&first), Some(&last)) = (self.letters.first(), self.letters.last()) else {
            return false;
        };
        rule.first_ok(first) && rule.last_ok(last) && self.letters.windows(2).all(|w| w[0].allows(w[1]))
    }

    /// Number of `c` letters.
    pub fn signature(&self) -> usize {
        self.letters.iter().filter(|l| l.is_c()).count()
    }

    pub fn phi(&self) -> GlWord {
        GlWord { letters: self.letters.iter().map(|l| l.shadow()).collect() }
    }
}

impl fmt::Display for CornerWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| f.write_str(l.symbol()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gl {
    G,
    L,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlWord {
    pub letters: Vec<Gl>,
}

impl GlWord {
    /// All words of length `n`, `g` before `l`.
    pub fn all(n: usize) -> impl Iterator<Item = GlWord> {
        (0u64..1 << n).map(move |bits| GlWord {
            letters: (0..n).map(|i| if bits >> (n - 1 - i) & 1 == 1 { Gl::L } else { Gl::G }).collect(),
        })
    }

    pub fn count_l(&self) -> usize {
        self.letters.iter().filter(|&&g| g == Gl::L).count()
    }
}

impl std::str::FromStr for GlWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'g' => Ok(Gl::G),
                'l' => Ok(Gl::L),
                other => Err(Error::InvalidArgument(format!("letter {other:?} is not g or l"))),
            })
            .collect::<Result<_>>()?;
        Ok(GlWord { letters })
    }
}

impl fmt::Display for GlWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|g| f.write_str(if *g == Gl::G { "g" } else { "l" }))
    }
}

/// Depth-first walk over valid words of length `n`, optionally restricted
/// to a fixed shadow. Visits in lexicographic letter order.
fn walk(n: usize, rule: BoundaryRule, shadow: Option<&GlWord>, visit: &mut impl FnMut(&[Letter])) {
    fn rec(
        buf: &mut Vec<Letter>,
        n: usize,
        rule: BoundaryRule,
        shadow: Option<&GlWord>,
        visit: &mut impl FnMut(&[Letter]),
    ) {
        if buf.len() == n {
            if rule.last_ok(*buf.last().expect("n >= 1")) {
                visit(buf);
            }
            return;
        }
        for l in Letter::ALL {
            let ok = match buf.last() {
                None => rule.first_ok(l),
                Some(prev) => prev.allows(l),
            };
            if ok && shadow.is_none_or(|s| s.letters[buf.len()] == l.shadow()) {
                buf.push(l);
                rec(buf, n, rule, shadow, visit);
                buf.pop();
            }
        }
    }
    if n > 0 {
        rec(&mut Vec::with_capacity(n), n, rule, shadow, visit);
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("word length must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { what: "n", value: n as u64, cap: cap as u64 });
    }
    Ok(())
}

pub fn enumerate_words(n: usize) -> Result<Vec<CornerWord>> {
    enumerate_words_with(n, BoundaryRule::default(), WORD_CAP)
}

pub fn enumerate_words_with(n: usize, rule: BoundaryRule, cap: usize) -> Result<Vec<CornerWord>> {
    check_cap(n, cap)?;
    let mut out = Vec::new();
    walk(n, rule, None, &mut |w| out.push(CornerWord { letters: w.to_vec() }));
    Ok(out)
}

pub fn fiber_count(v: &GlWord) -> Result<Integer> {
    fiber_count_with(v, BoundaryRule::default())
}

pub fn fiber_count_with(v: &GlWord, rule: BoundaryRule) -> Result<Integer> {
    check_cap(v.letters.len(), WORD_CAP)?;
    let mut count = 0u64;
    walk(v.letters.len(), rule, Some(v), &mut |_| count += 1);
    Ok(Integer::from(count))
}

/// `|φ^{-1}(v)| = 2^{max(0, k-1)}` for every `v` of length `1..=n_max`,
/// plus the double count `Σ_v |φ^{-1}(v)| = |W_n|`.
pub fn fiber_law_report(n_max: usize, rule: BoundaryRule) -> Result<Report> {
    let mut r = Report::new(format!("fiber law, n <= {n_max}"));
    for n in 1..=n_max {
        let mut witness = None;
        let mut total = Integer::zero();
        for v in GlWord::all(n) {
            let got = fiber_count_with(&v, rule)?;
            let want = Integer::one() << v.count_l().saturating_sub(1);
            if got != want && witness.is_none() {
                witness = Some(format!("fiber({v}) = {got}, expected {want}"));
            }
            total += got;
        }
        let words = enumerate_words_with(n, rule, WORD_CAP)?.len();
        r.assert(format!("n={n} fibers"), witness.is_none(), witness.unwrap_or_else(|| format!("{} words", 1u64 << n)));
        r.assert(format!("n={n} double count"), total == Integer::from(words), format!("Σ fibers {total}, |W_n| {words}"));
    }
    Ok(r)
}

/// `k^n` coefficient of `k ↦ [Q(q, k)^{n+1}]_{(1,1)}`, interpolated from
/// `k = 1..=n+2`. Fails if the interpolant has degree above `n`.
pub fn leading_coeff_q(q: &Integer, n: usize) -> Result<Rational> {
    Ok(q_power_polynomial(q, n)?.coeff(n))
}

/// The interpolant itself.
pub fn q_power_polynomial(q: &Integer, n: usize) -> Result<crate::QPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let points: Vec<(Rational, Rational)> = (1..=n + 2)
        .map(|k| {
            let m = StructuredMatrix::Q { q: q.clone(), k };
            (rat_int(k as u64), Rational::from_integer(m.corner_power(n + 1)))
        })
        .collect();
    let poly = interpolate(&points)?;
    if poly.degree().is_some_and(|deg| deg > n) {
        return Err(Error::Inconsistent(format!("[Q({q},k)^{}]_11 has degree {:?} > {n} in k", n + 1, poly.degree())));
    }
    Ok(poly)
}

fn eval_alt_eulerian(t: &AltDescentTable, x: &Rational) -> Rational {
    t.a.iter().rev().fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

/// `q^2 / (2 n!) (A(n, 0) + A_n(2q))`, as stated for the leading coefficient.
pub fn stated_leading_coeff(q: &Integer, n: usize) -> Result<Rational> {
    let t = alt_descent_table(n)?;
    let q = Rational::from_integer(q.clone());
    let inner = Rational::from_integer(t.get(0)) + eval_alt_eulerian(&t, &(&q * rat_int(2)));
    Ok(&q * &q * inner / (rat_int(2) * Rational::from_integer(factorial(n))))
}

/// `q^2 / n! · Σ_j q^j 2^{max(0, n-2-j)} A(n, j)`, which for `q != 0` is
/// `q^{n+1} / (2 n!) (A(n, 0) + A_n(2/q))`.
pub fn corrected_leading_coeff(q: &Integer, n: usize) -> Result<Rational> {
    let t = alt_descent_table(n)?;
    let q = Rational::from_integer(q.clone());
    let mut sum = Rational::zero();
    let mut qj = Rational::one();
    for (j, a) in t.a.iter().enumerate() {
        let two = Integer::one() << (n.saturating_sub(2 + j));
        sum += &qj * Rational::from_integer(two * a);
        qj *= &q;
    }
    Ok(&q * &q * sum / Rational::from_integer(factorial(n)))
}

/// Stated law, the bridge `L(2, n) = 2^n (1 + E_n / n!)`, the corrected law
/// and degree exactness.
pub fn leading_coeff_report(qs: &[u64], n_max: usize) -> Result<Report> {
    let mut r = Report::new(format!("leading coefficient of [Q(q,k)^(n+1)]_11, n <= {n_max}"));
    let e = zigzag::<Integer>(n_max);
    for n in 1..=n_max {
        for &q in qs {
            let qi = Integer::from(q);
            let poly = q_power_polynomial(&qi, n)?;
            let got = poly.coeff(n);
            let stated = stated_leading_coeff(&qi, n)?;
            r.assert(format!("q={q} n={n} stated law"), got == stated, format!("interpolated {got}, stated {stated}"));
            let corrected = corrected_leading_coeff(&qi, n)?;
            r.assert(format!("q={q} n={n} corrected law"), got == corrected, format!("{got} vs {corrected}"));
            if q >= 1 {
                r.assert(format!("q={q} n={n} degree"), poly.degree() == Some(n), format!("{:?}", poly.degree()));
            }
        }
        let bridge = leading_coeff_q(&Integer::from(2), n)?;
        let want = Rational::from_integer(Integer::one() << n)
            * (Rational::one() + Rational::new(e[n].clone(), factorial(n)));
        r.assert(format!("q=2 n={n} bridge"), bridge == want, format!("{bridge} vs 2^n(1 + E_n/n!) = {want}"));
    }
    Ok(r)
}

/// Volumes of the regions with `j` `≥` signs against `A(n, j) / n!`.
pub fn verify_alt_volume_lemma(n: usize) -> Result<Report> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidArgument(format!("n = {n} outside 1..=6")));
    }
    let table = alt_descent_table(n)?;
    let fact = Rational::from_integer(factorial(n));
    let mut by_j = vec![Rational::zero(); n];
    for pattern in all_patterns(n - 1) {
        let j = pattern.iter().filter(|&&r| r == Relation::AtLeast).count();
        by_j[j] += volume_of_region(&pattern);
    }
    let mut r = Report::new(format!("alternating volume lemma, n = {n}"));
    for (j, v) in by_j.iter().enumerate() {
        let want = Rational::from_integer(table.get(j)) / &fact;
        r.assert(format!("n={n} j={j}"), *v == want, format!("volume {v}, A(n,j)/n! = {want}"));
    }
    let total: Rational = by_j.iter().sum();
    r.assert(format!("n={n} total"), total == Rational::one(), format!("{total}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use Letter::*;

    fn word(ls: &[Letter]) -> CornerWord {
        CornerWord { letters: ls.to_vec() }
    }

    #[test]
    fn short_words() {
        let one: Vec<String> = enumerate_words(1).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(one, vec!["u", "c^+"]);
        let printed: Vec<String> =
            enumerate_words_with(1, BoundaryRule::Printed, 14).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(printed, vec!["u", "c^+"]);
        let two = enumerate_words(2).unwrap();
        assert!(two.contains(&word(&[U, U])));
        assert!(two.contains(&word(&[U, CPlusUp])));
        assert!(!word(&[U, B]).is_valid(BoundaryRule::Proof));
        assert!(two.iter().all(|w| w.is_valid(BoundaryRule::Proof)));
        assert!(enumerate_words(15).is_err());
        assert!(enumerate_words(0).is_err());
    }

    #[test]
    fn enumeration_matches_filter() {
        for n in 1..=5 {
            for rule in [BoundaryRule::Proof, BoundaryRule::Printed] {
                let mut all = vec![vec![]];
                for _ in 0..n {
                    all = all
                        .into_iter()
                        .flat_map(|w: Vec<Letter>| {
                            Letter::ALL.into_iter().map(move |l| {
                                let mut w = w.clone();
                                w.push(l);
                                w
                            })
                        })
                        .collect();
                }
                let filtered: Vec<CornerWord> =
                    all.into_iter().map(|l| CornerWord { letters: l }).filter(|w| w.is_valid(rule)).collect();
                assert_eq!(enumerate_words_with(n, rule, 14).unwrap(), filtered);
            }
        }
    }

    #[test]
    fn signature_and_phi() {
        let w = word(&[U, CPlusUp]);
        assert_eq!(w.signature(), 1);
        assert_eq!(w.phi().to_string(), "gl");
        assert_eq!(word(&[U, U, U]).signature(), 0);
        for w in enumerate_words(6).unwrap() {
            assert_eq!(w.signature(), w.phi().count_l());
        }
    }

    #[test]
    fn fibers() {
        assert_eq!(fiber_count(&"gggg".parse().unwrap()).unwrap(), Integer::from(1));
        assert_eq!(fiber_count(&"glgg".parse().unwrap()).unwrap(), Integer::from(1));
        assert_eq!(fiber_count(&"lll".parse().unwrap()).unwrap(), Integer::from(4));
        assert!(fiber_law_report(8, BoundaryRule::Proof).unwrap().passed());
    }

    #[test]
    fn printed_boundary_breaks_the_law() {
        let gl: GlWord = "gl".parse().unwrap();
        assert_eq!(fiber_count_with(&gl, BoundaryRule::Printed).unwrap(), Integer::from(2));
        assert!(!fiber_law_report(3, BoundaryRule::Printed).unwrap().passed());
    }

    #[test]
    fn leading_coefficients() {
        for n in 1..=4 {
            assert_eq!(leading_coeff_q(&Integer::from(0), n).unwrap(), rat(0, 1));
        }
        assert_eq!(leading_coeff_q(&Integer::from(1), 2).unwrap(), rat(1, 1));
        assert_eq!(stated_leading_coeff(&Integer::from(1), 2).unwrap(), rat(1, 1));
        assert_eq!(leading_coeff_q(&Integer::from(2), 3).unwrap(), rat(32, 3));
        assert_eq!(stated_leading_coeff(&Integer::from(2), 3).unwrap(), rat(44, 3));
        for q in [0u64, 1, 2, 3, 5] {
            for n in 1..=6 {
                let qi = Integer::from(q);
                assert_eq!(leading_coeff_q(&qi, n).unwrap(), corrected_leading_coeff(&qi, n).unwrap(), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn stated_law_holds_only_in_low_cases() {
        for q in [0u64, 1, 2, 3, 5] {
            for n in 1..=6 {
                let qi = Integer::from(q);
                let agree = leading_coeff_q(&qi, n).unwrap() == stated_leading_coeff(&qi, n).unwrap();
                assert_eq!(agree, n <= 2 || q <= 1, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn volume_lemma() {
        for n in 1..=6 {
            let r = verify_alt_volume_lemma(n).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(verify_alt_volume_lemma(7).is_err());
    }
}
