//! Seeded, splittable randomness for shots.
//!
//! Every shot draws from its own ChaCha8 stream seeded with
//! `seed ^ splitmix64(shot)`, so results do not depend on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type ShotRng = ChaCha8Rng;

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn shot_rng(seed: u64, shot: u64) -> ShotRng {
    ChaCha8Rng::seed_from_u64(seed ^ splitmix64(shot))
}

/// Seed for an independent sub-experiment labelled `tag`.
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    splitmix64(seed ^ splitmix64(tag.wrapping_add(0x5eed)))
}
