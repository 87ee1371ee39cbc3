//! Counter-based random streams.
//!
//! Every random draw in this crate comes from a [`SubStream`] keyed by a
//! user-visible seed plus integer tags (cell coordinates, replication
//! indices, role markers). Output at counter `t` is a pure function of
//! `(key, t)`, so sampling order and thread scheduling never change
//! results, and any cell or replication can be regenerated in isolation.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer; full-avalanche 64-bit mix.
#[inline]
fn avalanche(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Combine a key with one more tag.
#[inline]
pub fn mix(key: u64, tag: u64) -> u64 {
    avalanche(key ^ avalanche(tag.wrapping_add(GOLDEN)))
}

/// Fold a sequence of tags into a stream key.
pub fn derive_key(seed: u64, tags: &[u64]) -> u64 {
    let mut k = avalanche(seed.wrapping_add(GOLDEN));
    for &t in tags {
        k = mix(k, t);
    }
    k
}

/// A keyed counter stream: `next_u64()` returns `mix(key, ctr++)`.
#[derive(Clone, Debug)]
pub struct SubStream {
    key: u64,
    ctr: u64,
}

impl SubStream {
    pub fn new(key: u64) -> Self {
        SubStream { key, ctr: 0 }
    }

    pub fn from_parts(seed: u64, tags: &[u64]) -> Self {
        SubStream::new(derive_key(seed, tags))
    }

    /// Stream for matrix cell `(k, i)` under `seed`.
    pub fn cell(seed: u64, k: usize, i: usize) -> Self {
        SubStream::from_parts(seed, &[k as u64, i as u64])
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let out = mix(self.key, self.ctr);
        self.ctr += 1;
        out
    }

    /// Uniform draw on the open interval (0, 1).
    ///
    /// The 53-bit midpoint mapping never returns 0 or 1, so quantile
    /// transforms of unbounded distributions stay finite.
    #[inline]
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9_007_199_254_740_992.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_order_free() {
        let mut a = SubStream::cell(42, 3, 7);
        let mut b = SubStream::cell(42, 3, 7);
        let xs: Vec<u64> = (0..10).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..10).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
        // distinct cells decorrelate
        let mut c = SubStream::cell(42, 7, 3);
        assert_ne!(xs[0], c.next_u64());
    }

    #[test]
    fn open01_stays_inside_unit_interval() {
        let mut s = SubStream::from_parts(7, &[1, 2, 3]);
        for _ in 0..10_000 {
            let u = s.next_open01();
            assert!(u > 0.0 && u < 1.0);
        }
    }

    #[test]
    fn tag_order_matters() {
        assert_ne!(derive_key(1, &[2, 3]), derive_key(1, &[3, 2]));
    }
}
