//! Deterministic seed derivation for parallel Monte-Carlo loops.
//!
//! Every parallel work item derives its own generator from the master seed
//! and a tag path (e.g. `[drop_index, cell_index]`), so results do not depend
//! on how rayon batches the work or on the worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 step; a solid small mixer for seed derivation.
#[inline]
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive an independent generator from a master seed and a tag path.
pub fn derive_rng(master: u64, tags: &[u64]) -> ChaCha8Rng {
    let mut state = master ^ 0x6A09_E667_F3BC_C908;
    splitmix64(&mut state);
    for &t in tags {
        state ^= t.wrapping_mul(0x2545_F491_4F6C_DD1D);
        splitmix64(&mut state);
    }
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(seed)
}
