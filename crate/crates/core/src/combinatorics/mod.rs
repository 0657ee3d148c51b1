//! Alternating permutations and their statistics.
//!
//! Convention: a permutation `σ` of `[d]` is *alternating* when
//! `σ(1) > σ(2) < σ(3) > ...` (first step down). Under this convention the
//! swap histogram is the h*-vector of the Fibonacci polytope, which the
//! polytope tests check against direct lattice counts.

mod cache;
mod descents;
mod kreweras;
mod probes;
mod swap;
mod zigzag;

pub use cache::{cached_swap_table, swap_table_cache_path};
pub use descents::{alt_descent_table, alt_descent_table_capped, alt_descents, alt_eulerian_poly, AltDescentTable};
pub use kreweras::{kreweras_u, kreweras_u_capped};
pub use probes::{even_pairing_identity, facet_recursion_probe, second_moment_gap, second_moment_probe};
pub use swap::{
    alternating_permutations, coeff_sum_binom, is_alternating, swap, swap_table, swap_table_capped, SwapTable,
    CONVENTION,
};
pub use zigzag::zigzag;

/// Enumeration caps. All are configuration; the defaults keep the full test
/// suite within a few minutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub swap_d: usize,
    pub kreweras_n: usize,
    pub alt_descent_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { swap_d: 12, kreweras_n: 9, alt_descent_n: 10 }
    }
}
