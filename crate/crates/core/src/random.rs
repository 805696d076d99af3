//! Seeded random knots as closures of random braid words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::diagram::{from_braid, BraidWord, LongKnotDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("produced {produced} of {requested} knots before the attempt budget ran out")]
pub struct GenerationError {
    pub produced: usize,
    pub requested: usize,
}

/// Attempts allowed per requested knot before giving up.
const ATTEMPTS_PER_KNOT: usize = 1000;

/// Draws one braid word with between 1 and `max_crossings` letters. The
/// closure may have several components.
pub fn random_braid<R: Rng>(rng: &mut R, max_crossings: usize) -> BraidWord {
    let max = max_crossings.max(1);
    let strands = rng.gen_range(2..=5.min(max + 1));
    let len = rng.gen_range(strands - 1..=max);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("generators are in range")
}

/// `count` braid words whose closures are knots with at most
/// `max_crossings` crossings, reproducible from `seed`.
pub fn random_knot_braids(seed: u64, count: usize, max_crossings: usize) -> Result<Vec<BraidWord>, GenerationError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut budget = ATTEMPTS_PER_KNOT.saturating_mul(count);
    while out.len() < count {
        if budget == 0 {
            return Err(GenerationError { produced: out.len(), requested: count });
        }
        budget -= 1;
        let word = random_braid(&mut rng, max_crossings);
        if word.closure_components() == 1 {
            out.push(word);
        }
    }
    Ok(out)
}

/// Random long knots cut at a uniformly chosen basepoint.
pub fn random_long_knots(
    seed: u64,
    count: usize,
    max_crossings: usize,
) -> Result<Vec<(BraidWord, LongKnotDiagram)>, GenerationError> {
    let words = random_knot_braids(seed, count, max_crossings)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    Ok(words
        .into_iter()
        .map(|w| {
            let d = from_braid(&w).expect("single-component words close to knots");
            let edges = d.edge_count().max(1);
            let lk = LongKnotDiagram::new(d, rng.gen_range(0..edges)).expect("basepoint in range");
            (w, lk)
        })
        .collect())
}
