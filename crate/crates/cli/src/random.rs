//! Seeded random hosts. Everything draws from ChaCha8 so a seed pins the
//! whole run.

use comblab_core::random::{gnp, gnp_with, rng};
use comblab_core::search::{is_family_free, PatternGraph};
use comblab_core::Graph;

/// `G(n, p)` from a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    gnp(n, p, seed)
}

/// Rejection sampling: up to `budget` draws of `G(n, p)`, returning the
/// first one with no induced member of `family`.
pub fn random_family_free(n: usize, p: f64, family: &[PatternGraph], seed: u64, budget: usize) -> Option<Graph> {
    let mut r = rng(seed);
    (0..budget).map(|_| gnp_with(n, p, &mut r)).find(|g| is_family_free(g, family))
}

/// Derives a per-case seed so cases can run in any order.
pub fn case_seed(seed: u64, case: usize) -> u64 {
    seed ^ (case as u64).wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        assert_eq!(random_graph(9, 0.0, 1).edge_count(), 0);
        assert_eq!(random_graph(9, 1.0, 1).edge_count(), 36);
        assert_eq!(random_graph(12, 0.3, 5), random_graph(12, 0.3, 5));
    }

    #[test]
    fn family_free_postcondition() {
        let fam = vec!["C5".parse::<PatternGraph>().unwrap()];
        let g = random_family_free(12, 0.2, &fam, 3, 1000).expect("some draw is C5-free");
        assert!(is_family_free(&g, &fam));
        assert_eq!(random_family_free(12, 1.0, &["K3".parse().unwrap()], 3, 5), None);
    }
}
