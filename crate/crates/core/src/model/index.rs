use std::fmt;

/// Position in the canonical orthonormal basis of l2(N), 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisIndex(pub usize);

/// Position of a block in the fixed enumeration of a projection family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BlockId(pub usize);

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<usize> for BasisIndex {
    fn from(v: usize) -> Self {
        BasisIndex(v)
    }
}

impl From<usize> for BlockId {
    fn from(v: usize) -> Self {
        BlockId(v)
    }
}

/// Cantor pairing `(i + j)(i + j + 1)/2 + j`.
pub fn cantor_pair(i: usize, j: usize) -> usize {
    let s = i + j;
    s * (s + 1) / 2 + j
}

/// Inverse of [`cantor_pair`].
pub fn cantor_unpair(z: usize) -> (usize, usize) {
    // w is the anti-diagonal: the largest w with w(w+1)/2 <= z.
    let disc = 8u128 * z as u128 + 1;
    let mut w = ((disc.isqrt() - 1) / 2) as usize;
    while w * (w + 1) / 2 > z {
        w -= 1;
    }
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    let j = z - w * (w + 1) / 2;
    (w - j, j)
}
