//! Exhaustive and seeded instance generation with parallel evaluation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{self, Set};
use crate::error::Result;
use crate::generators::{random_ordered_groupoid, random_relation};
use crate::groupoid::OrderedGroupoid;
use crate::order::{classify, TransRel};
use crate::spectrum::{
    locally_tight_spectrum, spectra_coincide, tight_spectrum, verify_equivalence,
    EquivalenceReport, Theorem,
};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_SAMPLES: usize = 500;
pub const DEFAULT_MAX_SIZE: usize = 5;
/// Sizes up to this are enumerated exhaustively.
pub const EXHAUSTIVE_MAX: usize = 3;

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Every labelled transitive round relation on `n` elements.
pub fn all_relations(n: usize) -> Vec<TransRel> {
    assert!(n <= 4, "exhaustive enumeration is limited to four elements");
    let cells = n * n;
    let mut out = Vec::new();
    for code in 0u64..(1u64 << cells) {
        let below: Vec<Set> = (0..n).map(|q| (code >> (q * n)) & bits::full(n)).collect();
        if below.contains(&0) {
            continue;
        }
        if let Ok(rel) = TransRel::from_below(names(n), below, false) {
            out.push(rel);
        }
    }
    out
}

fn rng_for(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// `k` seeded random transitive round relations on `n` elements.
pub fn sample_relations(n: usize, k: usize, seed: u64) -> Vec<TransRel> {
    let mut rng = rng_for(seed, n);
    (0..k).map(|_| random_relation(n, &mut rng)).collect()
}

/// Exhaustive instances up to size three, then `samples` seeded instances
/// for each size from four to `max_size`.
pub fn instances(max_size: usize, samples: usize, seed: u64) -> Vec<TransRel> {
    let mut out = Vec::new();
    for n in 1..=max_size.min(EXHAUSTIVE_MAX) {
        out.extend(all_relations(n));
    }
    for n in EXHAUSTIVE_MAX + 1..=max_size {
        out.extend(sample_relations(n, samples, seed));
    }
    out
}

/// `count` seeded random ordered groupoids.
pub fn random_groupoids(count: usize, seed: u64) -> Result<Vec<OrderedGroupoid>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_ordered_groupoid(&mut rng)).collect()
}

/// Outcome of an equivalence run.
#[derive(Debug, Clone)]
pub struct HarnessReport {
    pub theorem: Theorem,
    /// Instances meeting the theorem's hypothesis.
    pub checked: usize,
    /// Instances outside the hypothesis.
    pub skipped: usize,
    pub inconsistencies: Vec<(TransRel, EquivalenceReport)>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.inconsistencies.is_empty()
    }
}

/// Whether `rel` meets the hypothesis of `theorem`.
pub fn applies(rel: &TransRel, theorem: Theorem) -> bool {
    let r = classify(rel);
    r.round
        && match theorem {
            Theorem::Meet => r.pseudobasis,
            Theorem::Trapping | Theorem::Hausdorff => r.local_bi_pseudobasis,
        }
}

pub fn run_equivalence(theorem: Theorem, rels: &[TransRel]) -> Result<HarnessReport> {
    let results: Vec<Option<EquivalenceReport>> = rels
        .par_iter()
        .map(|rel| {
            if applies(rel, theorem) {
                verify_equivalence(rel, theorem).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = HarnessReport { theorem, checked: 0, skipped: 0, inconsistencies: Vec::new() };
    for (rel, res) in rels.iter().zip(results) {
        match res {
            None => rep.skipped += 1,
            Some(r) => {
                rep.checked += 1;
                if !r.consistent {
                    rep.inconsistencies.push((rel.clone(), r));
                }
            }
        }
    }
    Ok(rep)
}

/// Counts of phenomena the harness watches for without asserting them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Survey {
    /// Local bi-pseudobases that are not bi-pseudobases.
    pub local_not_bi: usize,
    /// Local bi-pseudobases whose locally tight and tight spectra differ.
    pub spectra_differ: usize,
}

pub fn survey(rels: &[TransRel]) -> Survey {
    rels.par_iter()
        .map(|rel| {
            let r = classify(rel);
            let mut s = Survey::default();
            if r.round && r.local_bi_pseudobasis && !r.bi_pseudobasis {
                s.local_not_bi = 1;
            }
            if r.round && r.local_bi_pseudobasis {
                if let (Ok(a), Ok(b)) = (locally_tight_spectrum(rel), tight_spectrum(rel)) {
                    if !spectra_coincide(&a, &b) {
                        s.spectra_differ = 1;
                    }
                }
            }
            s
        })
        .reduce(Survey::default, |a, b| Survey {
            local_not_bi: a.local_not_bi + b.local_not_bi,
            spectra_differ: a.spectra_differ + b.spectra_differ,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_relations(1).len(), 1);
        // On two elements: round transitive relations, checked by hand.
        let two = all_relations(2);
        assert!(two.iter().all(|r| r.is_round()));
        let brute = (0u64..16)
            .filter(|&code| {
                let b = |p: usize, q: usize| code >> (q * 2 + p) & 1 == 1;
                let trans = (0..2).all(|x| {
                    (0..2).all(|y| (0..2).all(|z| !(b(x, y) && b(y, z)) || b(x, z)))
                });
                let round = (0..2).all(|q| (0..2).any(|p| b(p, q)));
                trans && round
            })
            .count();
        assert_eq!(two.len(), brute);
    }

    #[test]
    fn samples_are_deterministic() {
        let a = sample_relations(4, 20, 9);
        let b = sample_relations(4, 20, 9);
        assert_eq!(a, b);
    }
}
