//! Stratified k-fold partitions.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, Result};

/// Fold index of every sample.
///
/// Each class is shuffled with a generator seeded from `seed` and dealt
/// round-robin over the folds; the dealing position carries over from one
/// class to the next so fold sizes stay balanced. Every fold gets within one
/// sample of its share of each class.
pub fn stratified_folds(labels: &[usize], folds: usize, seed: u64) -> Result<Vec<usize>> {
    if folds < 2 {
        return Err(CliError::config(format!("folds must be at least 2, got {folds}")));
    }
    let num_classes = labels.iter().max().map_or(0, |m| m + 1);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); num_classes];
    for (i, &c) in labels.iter().enumerate() {
        members[c].push(i);
    }
    if let Some((c, m)) = members
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_empty())
        .min_by_key(|(_, m)| m.len())
    {
        if m.len() < folds {
            return Err(CliError::Stratification(format!(
                "class {c} has {} samples, fewer than the {folds} folds",
                m.len()
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assign = vec![0; labels.len()];
    let mut pos = 0;
    for m in &mut members {
        m.shuffle(&mut rng);
        for &i in m.iter() {
            assign[i] = pos % folds;
            pos += 1;
        }
    }
    Ok(assign)
}
