//! Seeded instance generation.
//!
//! The stream is ChaCha20 keyed by the little-endian bytes of a `u64` seed
//! (zero-padded to 32 bytes, nonce 0). Each draw takes the next `u64` word
//! and reduces it modulo the range, so the same seed gives the same
//! instances in any implementation of ChaCha20.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::codes::{Alphabet, LinearCode};
use crate::error::Result;
use crate::field::{Fe, Field};
use crate::linalg::Matrix;
use crate::skew::{check_inverse_p_independent, check_p_independent, InvariantSpec, SkewPoly, SkewRing};

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha20Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        Sampler { rng: ChaCha20Rng::from_seed(key) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform-ish index in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        (self.next_u64() % n as u64) as usize
    }

    /// Integer in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    pub fn element(&mut self, f: &Field) -> Fe {
        Fe(self.below(f.order() as usize) as u32)
    }

    pub fn nonzero(&mut self, f: &Field) -> Fe {
        Fe(1 + self.below(f.order() as usize - 1) as u32)
    }

    pub fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.below(items.len())]
    }

    pub fn elements(&mut self, f: &Field, n: usize) -> Vec<Fe> {
        (0..n).map(|_| self.element(f)).collect()
    }

    pub fn nonzeros(&mut self, f: &Field, n: usize) -> Vec<Fe> {
        (0..n).map(|_| self.nonzero(f)).collect()
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            items.swap(i, self.below(i + 1));
        }
    }

    pub fn matrix(&mut self, f: &Field, rows: usize, cols: usize) -> Result<Matrix> {
        let data = (0..rows).map(|_| self.elements(f, cols)).collect();
        Matrix::from_rows(f, cols, data)
    }

    /// Code spanned by `k` random vectors of length `n` over the extension field.
    pub fn code(&mut self, f: &Field, n: usize, k: usize) -> Result<LinearCode> {
        LinearCode::from_generator(Alphabet::Extension, &self.matrix(f, k, n)?)
    }

    /// `size` distinct elements, optionally avoiding zero.
    pub fn distinct(&mut self, f: &Field, size: usize, nonzero: bool) -> Vec<Fe> {
        let mut pool: Vec<Fe> = if nonzero { f.nonzero_elements().collect() } else { f.elements().collect() };
        self.shuffle(&mut pool);
        pool.truncate(size);
        pool
    }

    pub fn poly(&mut self, ring: &SkewRing, degree: usize) -> SkewPoly {
        let mut c = self.elements(ring.field(), degree + 1);
        c[degree] = self.nonzero(ring.field());
        SkewPoly::new(ring, c)
    }

    /// Scans a shuffled list of nonzero elements, keeping each one that leaves
    /// both `S` and `S^{-1}` P-independent. Returns at most `size` points.
    pub fn independent_set(&mut self, ring: &SkewRing, size: usize) -> Vec<Fe> {
        let mut pool: Vec<Fe> = ring.field().nonzero_elements().collect();
        self.shuffle(&mut pool);
        let mut out = Vec::new();
        for a in pool {
            if out.len() == size {
                break;
            }
            out.push(a);
            if !check_p_independent(ring, &out) || !check_inverse_p_independent(ring, &out).unwrap_or(false) {
                out.pop();
            }
        }
        out
    }

    /// Nonzero points with `S` P-independent but `S^{-1}` dependent, if the
    /// scan finds one.
    pub fn independent_set_without_inverse(&mut self, ring: &SkewRing, size: usize) -> Option<Vec<Fe>> {
        let mut pool: Vec<Fe> = ring.field().nonzero_elements().collect();
        self.shuffle(&mut pool);
        let mut out = Vec::new();
        for a in pool {
            out.push(a);
            if !check_p_independent(ring, &out) {
                out.pop();
                continue;
            }
            if out.len() >= size && !check_inverse_p_independent(ring, &out).unwrap_or(true) {
                return Some(out);
            }
        }
        None
    }

    /// `a·v(X^o)·X^l` with `deg v ≥ 1` or `l ≥ 1`, of total degree at most `max_degree`.
    pub fn invariant_spec(&mut self, ring: &SkewRing, max_degree: usize) -> Result<InvariantSpec> {
        let o = ring.order() as usize;
        let fixed: Vec<Fe> = ring.field().elements().filter(|&a| ring.is_fixed(a)).collect();
        let fixed_nonzero: Vec<Fe> = fixed.iter().copied().filter(|a| !a.is_zero()).collect();
        let a = self.nonzero(ring.field());
        loop {
            let dv = self.range(0, max_degree / o);
            let l = self.range(0, max_degree - dv * o);
            if dv + l == 0 {
                continue;
            }
            let mut v: Vec<Fe> = (0..=dv).map(|_| self.pick(&fixed)).collect();
            v[0] = self.pick(&fixed_nonzero);
            v[dv] = self.pick(&fixed_nonzero);
            return InvariantSpec::new(ring, a, &v, l);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let a: Vec<u64> = (0..4).map({
            let mut s = Sampler::new(7);
            move |_| s.next_u64()
        }).collect();
        let mut s = Sampler::new(7);
        assert_eq!(a, (0..4).map(|_| s.next_u64()).collect::<Vec<_>>());
        assert_ne!(Sampler::new(0).next_u64(), Sampler::new(1).next_u64());
    }

    #[test]
    fn independent_sets_satisfy_hypotheses() {
        let ring = SkewRing::frobenius(Field::new(2, 1, 3, 1, None).unwrap());
        let mut s = Sampler::new(3);
        for _ in 0..10 {
            let pts = s.independent_set(&ring, 3);
            assert!(!pts.is_empty());
            assert!(check_p_independent(&ring, &pts));
            assert!(check_inverse_p_independent(&ring, &pts).unwrap());
        }
    }

    #[test]
    fn invariant_specs_expand_to_invariants() {
        let ring = SkewRing::frobenius(Field::new(2, 2, 2, 1, None).unwrap());
        let mut s = Sampler::new(11);
        for _ in 0..20 {
            let spec = s.invariant_spec(&ring, 6).unwrap();
            let g = spec.expand(&ring);
            assert!(g.degree().unwrap() >= 1 && g.degree().unwrap() <= 6);
            assert!(g.is_invariant_by_definition());
        }
    }
}
