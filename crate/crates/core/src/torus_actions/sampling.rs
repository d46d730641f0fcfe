//! Deterministic sampling of valid orbit data, used by the randomized
//! synthesis checks. Sampling is seed-driven and dependency-free so the
//! report front end can reproduce runs byte for byte.

use alloc::vec;
use alloc::vec::Vec;

use super::orbit::OrbitData;

/// Small deterministic generator (splitmix64 step function).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n.max(1)
    }

    pub fn sign(&mut self) -> i64 {
        if self.next_u64() & 1 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A valid cyclic sequence of `k >= 2` coprime pairs with all adjacent
/// determinants of absolute value one.
///
/// Built from the standard two-pair cycle by moves that preserve validity:
/// inserting `e*P_i + f*P_(i+1)` between neighbors (any signs `e`, `f`),
/// negating a single pair, and rotating the cycle.
pub fn random_valid_orbit_data(rng: &mut SplitMix64, k: usize) -> OrbitData {
    assert!(k >= 2, "orbit data needs at least two pairs");
    let mut pairs: Vec<(i64, i64)> = vec![(1, 0), (0, 1)];
    while pairs.len() < k {
        let n = pairs.len();
        let at = rng.below(n as u64) as usize;
        let next = (at + 1) % n;
        let (e, f) = (rng.sign(), rng.sign());
        let inserted =
            (e * pairs[at].0 + f * pairs[next].0, e * pairs[at].1 + f * pairs[next].1);
        pairs.insert(at + 1, inserted);
    }
    if rng.below(2) == 0 {
        let at = rng.below(pairs.len() as u64) as usize;
        pairs[at] = (-pairs[at].0, -pairs[at].1);
    }
    let rotate = rng.below(pairs.len() as u64) as usize;
    OrbitData::new((0..pairs.len()).map(|i| pairs[(i + rotate) % pairs.len()]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus_actions::orbit::validate_orbit_data;

    #[test]
    fn sampled_data_is_valid_for_all_small_sizes() {
        let mut rng = SplitMix64::new(42);
        for k in 2..=8 {
            for _ in 0..100 {
                let d = random_valid_orbit_data(&mut rng, k);
                assert_eq!(d.len(), k);
                assert!(validate_orbit_data(&d).passed(), "{d}");
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for k in 2..=6 {
            assert_eq!(random_valid_orbit_data(&mut a, k), random_valid_orbit_data(&mut b, k));
        }
    }
}
