//! Counter-based randomness: every draw is a pure function of a seed and
//! integer coordinates, so parallel and sequential evaluation produce
//! identical results and a single pair's draw never depends on the order in
//! which other pairs are visited.

const PHI: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer; bijective on u64.
#[inline]
fn mix(mut x: u64) -> u64 {
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^= x >> 31;
    x
}

/// 64-bit key for an undirected pair, determined only by `(seed, u, v)`.
#[inline]
pub fn pair_key(seed: u64, u: u32, v: u32) -> u64 {
    let coord = ((u as u64) << 32) | v as u64;
    mix(mix(seed.wrapping_add(PHI)) ^ coord)
}

/// Uniform draw in `[0, 1)` for an undirected pair.
#[inline]
pub fn pair_unit(seed: u64, u: u32, v: u32) -> f64 {
    to_unit(pair_key(seed, u, v))
}

/// Derive an independent child seed from `(seed, tag)`.
#[inline]
pub fn derive(seed: u64, tag: u64) -> u64 {
    mix(seed ^ mix(tag.wrapping_add(PHI)))
}

/// Map a 64-bit key to `[0, 1)` using the top 53 bits.
#[inline]
pub fn to_unit(key: u64) -> f64 {
    (key >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Small sequential generator (SplitMix64 stream) for shuffles and
/// position sampling, where a stream is more natural than a counter.
#[derive(Debug, Clone)]
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(PHI);
        mix(self.state)
    }

    #[inline]
    pub fn next_unit(&mut self) -> f64 {
        to_unit(self.next_u64())
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = (self.next_u64() % (i as u64 + 1)) as usize;
            items.swap(i, j);
        }
    }
}
