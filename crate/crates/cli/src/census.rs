//! Census records and minimum-kappa scans over families of small graphs.

use std::ops::RangeInclusive;

use comblab_core::extremal::kappa;
use comblab_core::format::{from_graph6, to_graph6};
use comblab_core::random::{gnp_with, rng};
use comblab_core::search::{is_family_free, PatternGraph};
use comblab_core::Graph;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{enumerate_free, ENUMERATION_CAP};
use crate::error::{HarnessError, Result};
use crate::random::case_seed;

pub fn family(names: &[&str]) -> Vec<PatternGraph> {
    names.iter().map(|s| s.parse().expect("built-in pattern name")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    pub kappa: usize,
    pub c5_free: bool,
    /// Free of the hatted C5 and of its complement.
    pub hat_c5_free: bool,
    /// Free of the star-expansion of P4 and of its complement.
    pub star_p4_free: bool,
}

impl CensusEntry {
    pub fn of(g: &Graph) -> Self {
        let k = kappa(g, &g.vertices()).expect("full vertex set");
        CensusEntry {
            graph6: to_graph6(g),
            n: g.n(),
            alpha: k.alpha,
            omega: k.omega,
            kappa: k.kappa,
            c5_free: is_family_free(g, &family(&["C5"])),
            hat_c5_free: is_family_free(g, &family(&["hatC5", "co:hatC5"])),
            star_p4_free: is_family_free(g, &family(&["star:P4", "co:star:P4"])),
        }
    }

    /// Recomputes every field from the stored graph6.
    pub fn recheck(&self) -> bool {
        from_graph6(&self.graph6).is_ok_and(|g| CensusEntry::of(&g) == *self)
    }

    /// `log kappa / log n`, the exponent the entry witnesses.
    pub fn exponent(&self) -> Option<f64> {
        (self.n > 1).then(|| (self.kappa as f64).ln() / (self.n as f64).ln())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ScanMode {
    Exhaustive,
    Random { p: f64, trials: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentRow {
    pub n: usize,
    /// Family-free graphs examined.
    pub graphs: usize,
    pub min_kappa: Option<usize>,
    pub argmin: Option<String>,
    /// `log(min kappa) / log n`.
    pub exponent: Option<f64>,
}

fn row(n: usize, graphs: &[Graph]) -> ExponentRow {
    let best = graphs
        .par_iter()
        .map(|g| (kappa(g, &g.vertices()).expect("full vertex set").kappa, to_graph6(g)))
        .min();
    let exponent = best
        .as_ref()
        .filter(|_| n > 1)
        .map(|(k, _)| (*k as f64).ln() / (n as f64).ln());
    ExponentRow {
        n,
        graphs: graphs.len(),
        min_kappa: best.as_ref().map(|b| b.0),
        argmin: best.map(|b| b.1),
        exponent,
    }
}

/// Minimum `kappa` per `n` over family-free graphs, either over every
/// isomorphism class or over seeded random draws.
pub fn empirical_exponent(
    family: &[PatternGraph],
    ns: RangeInclusive<usize>,
    mode: ScanMode,
    seed: u64,
) -> Result<Vec<ExponentRow>> {
    let mut out = Vec::new();
    for n in ns {
        let graphs = match mode {
            ScanMode::Exhaustive => {
                if n > ENUMERATION_CAP {
                    return Err(HarnessError::Cap {
                        what: "exhaustive scan vertex count",
                        size: n,
                        cap: ENUMERATION_CAP,
                    });
                }
                enumerate_free(n, |g| is_family_free(g, family))?
            }
            ScanMode::Random { p, trials } => {
                let mut r = rng(case_seed(seed, n));
                (0..trials)
                    .map(|_| gnp_with(n, p, &mut r))
                    .filter(|g| is_family_free(g, family))
                    .collect()
            }
        };
        out.push(row(n, &graphs));
    }
    Ok(out)
}
