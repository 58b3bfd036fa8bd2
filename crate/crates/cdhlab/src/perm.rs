//! Permutations of small vertex sets, acting on vertices and bitmask edges.
//!
//! Vertices are 0-indexed internally; the JSON layer is 1-indexed.

use crate::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, u: usize, v: usize) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(u, v);
        Perm { images }
    }

    /// Builds a permutation from an image table, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::BadPermutation(format!(
                    "images {images:?} are not a bijection on 0..{n}"
                )));
            }
            seen[img] = true;
        }
        Ok(Perm { images })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    /// Image of an edge given as a bitmask.
    #[inline]
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            out |= 1 << self.images[v];
            rest &= rest - 1;
        }
        out
    }

    /// Composition acting as `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Perm {
            images: (0..self.n()).map(|v| self.images[other.images[v]]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (v, &img) in self.images.iter().enumerate() {
            images[img] = v;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &img)| v == img)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// Calls `f` with every permutation of `0..n` exactly once (Heap's
/// algorithm; no allocation per permutation).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            heap(items, k - 1, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    if n == 0 {
        f(&[]);
    } else {
        heap(&mut items, n, &mut f);
    }
}

/// All permutations of `0..n` that fix every vertex outside `support_mask`,
/// as full-degree permutations. The support must be small; the list has
/// `|support|!` entries.
pub fn perms_on_support(n: usize, support_mask: u32) -> Vec<Perm> {
    let support: Vec<usize> = (0..n).filter(|v| support_mask >> v & 1 == 1).collect();
    let mut out = Vec::new();
    for_each_permutation(support.len(), |arrangement| {
        let mut images: Vec<usize> = (0..n).collect();
        for (slot, &target) in arrangement.iter().enumerate() {
            images[support[slot]] = support[target];
        }
        out.push(Perm { images });
    });
    out.sort();
    out
}
