//! Vectors over `F_m` packed four bits per coordinate into a `u128`, in the
//! additive (base-p digit) representation so that vector addition is a few
//! word operations. Lengths up to 32 are supported.

use crate::field::Field;

pub(crate) const MAX_LEN: usize = 32;
const ONES: u128 = 0x1111_1111_1111_1111_1111_1111_1111_1111;
const EIGHTS: u128 = ONES << 3;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Packer {
    p: u8,
}

impl Packer {
    pub fn new(field: &Field) -> Self {
        Packer { p: field.p() }
    }

    /// Packs base-field codes.
    pub fn pack(field: &Field, coords: &[u8]) -> u128 {
        debug_assert!(coords.len() <= MAX_LEN);
        coords
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &c)| acc | ((field.additive(c) as u128) << (4 * i)))
    }

    #[inline(always)]
    pub fn add(self, x: u128, y: u128) -> u128 {
        if self.p == 2 {
            return x ^ y;
        }
        let p = self.p as u128;
        let s = x + y;
        let over = ((s + (8 - p) * ONES) & EIGHTS) >> 3;
        s - over * p
    }

    /// `k·x` for a prime-field integer `k`, by repeated addition.
    pub fn times(self, x: u128, k: u8) -> u128 {
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }
}

/// One bit (the low bit of the nibble) per nonzero coordinate.
#[inline(always)]
pub(crate) fn nonzero(x: u128) -> u128 {
    (x | x >> 1 | x >> 2 | x >> 3) & ONES
}

#[inline(always)]
pub(crate) fn weight(x: u128) -> u32 {
    nonzero(x).count_ones()
}

/// Nibble mask selecting coordinate `i`.
#[inline(always)]
pub(crate) fn unit(i: usize) -> u128 {
    1u128 << (4 * i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unpack(field: &Field, x: u128, n: usize) -> Vec<u8> {
        (0..n).map(|i| field.from_additive(((x >> (4 * i)) & 0xf) as u8)).collect()
    }

    proptest! {
        #[test]
        fn packed_addition_matches_field(m in prop::sample::select(vec![2u8, 3, 4, 5]),
                                         seed in prop::collection::vec((0u8..5, 0u8..5), 1..=32)) {
            let f = Field::standard(m).unwrap();
            let u: Vec<u8> = seed.iter().map(|&(a, _)| a % m).collect();
            let v: Vec<u8> = seed.iter().map(|&(_, b)| b % m).collect();
            let pk = Packer::new(f);
            let s = pk.add(Packer::pack(f, &u), Packer::pack(f, &v));
            let expected: Vec<u8> = u.iter().zip(&v).map(|(&a, &b)| f.add(a, b)).collect();
            prop_assert_eq!(unpack(f, s, u.len()), expected);
            let w = u.iter().filter(|&&a| a != 0).count() as u32;
            prop_assert_eq!(weight(Packer::pack(f, &u)), w);
        }
    }
}
