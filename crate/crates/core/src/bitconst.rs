//! Constant bounds with most-significant-bit-first indexing.
//!
//! Bit `1` of an `n`-bit constant is its most significant bit and bit `n`
//! its least significant one, so the binary string `(c_1 ... c_n)` reads in
//! index order.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported width. Keeps `2^width` representable in a `u64`.
pub const MAX_WIDTH: u32 = 62;

/// A nonnegative constant of a fixed bit width.
///
/// `value` may equal `2^width`; that value only serves as the exclusive
/// upper bound of a full interval and has no bit representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitConstant {
    value: u64,
    width: u32,
}

impl BitConstant {
    pub fn new(value: u64, width: u32) -> Result<Self> {
        if width == 0 || width > MAX_WIDTH {
            return Err(Error::InvalidWidth(width));
        }
        if value > 1u64 << width {
            return Err(Error::ValueOutOfRange { value, width });
        }
        Ok(BitConstant { value, width })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// `2^width`, the value one past the largest representable constant.
    pub fn modulus(&self) -> u64 {
        1u64 << self.width
    }

    /// True when the value is `2^width`.
    pub fn is_full(&self) -> bool {
        self.value == self.modulus()
    }

    /// Bit `k` counted from the most significant end, `1 <= k <= width`.
    pub fn bit(&self, k: u32) -> Result<bool> {
        if k == 0 || k > self.width {
            return Err(Error::BitIndex {
                index: k,
                width: self.width,
            });
        }
        Ok((self.value >> (self.width - k)) & 1 == 1)
    }

    /// Largest `j <= width` such that `value / 2^j` is an integer.
    pub fn trailing_zeros(&self) -> u32 {
        if self.value == 0 {
            self.width
        } else {
            self.value.trailing_zeros().min(self.width)
        }
    }

    /// Splits a constant `0 < value < 2^width` into its odd part, taken as a
    /// `width - j` bit constant, and `j`.
    pub fn reduced(&self) -> Option<(BitConstant, u32)> {
        if self.value == 0 || self.is_full() {
            return None;
        }
        let j = self.trailing_zeros();
        let odd = BitConstant {
            value: self.value >> j,
            width: self.width - j,
        };
        Some((odd, j))
    }
}

impl fmt::Display for BitConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            write!(f, "2^{}", self.width)
        } else {
            write!(f, "{:0w$b}", self.value, w = self.width as usize)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(value: u64, width: u32) -> BitConstant {
        BitConstant::new(value, width).unwrap()
    }

    #[test]
    fn msb_first_bits() {
        assert!(c(5, 3).bit(1).unwrap());
        assert!(!c(5, 3).bit(2).unwrap());
        assert!(c(1, 4).bit(4).unwrap());
        assert!(!c(1, 4).bit(1).unwrap());
    }

    #[test]
    fn bit_index_out_of_range() {
        assert_eq!(c(5, 3).bit(0), Err(Error::BitIndex { index: 0, width: 3 }));
        assert_eq!(c(5, 3).bit(4), Err(Error::BitIndex { index: 4, width: 3 }));
    }

    #[test]
    fn trailing_zero_counts() {
        assert_eq!(c(12, 4).trailing_zeros(), 2);
        assert_eq!(c(0, 4).trailing_zeros(), 4);
        assert_eq!(c(7, 3).trailing_zeros(), 0);
        assert_eq!(c(16, 4).trailing_zeros(), 4);
    }

    #[test]
    fn construction_limits() {
        assert_eq!(BitConstant::new(0, 0), Err(Error::InvalidWidth(0)));
        assert_eq!(BitConstant::new(0, 63), Err(Error::InvalidWidth(63)));
        assert!(BitConstant::new(8, 3).unwrap().is_full());
        assert_eq!(
            BitConstant::new(9, 3),
            Err(Error::ValueOutOfRange { value: 9, width: 3 })
        );
        assert!(BitConstant::new(1 << 62, 62).is_ok());
    }

    #[test]
    fn reduction() {
        assert_eq!(c(12, 4).reduced(), Some((c(3, 2), 2)));
        assert_eq!(c(0, 4).reduced(), None);
        assert_eq!(c(16, 4).reduced(), None);
        assert_eq!(c(8, 4).reduced(), Some((c(1, 1), 3)));
    }

    proptest! {
        #[test]
        fn odd_part_after_trailing_zeros(width in 1u32..=62, raw in any::<u64>()) {
            let value = raw % (1u64 << width);
            prop_assume!(value > 0);
            let k = c(value, width);
            prop_assert_eq!((value >> k.trailing_zeros()) % 2, 1);
            prop_assert_eq!(value % (1u64 << k.trailing_zeros()), 0);
        }

        #[test]
        fn bits_reconstruct_value(width in 1u32..=62, raw in any::<u64>()) {
            let value = raw % (1u64 << width);
            let k = c(value, width);
            let rebuilt = (1..=width).fold(0u64, |acc, i| (acc << 1) | k.bit(i).unwrap() as u64);
            prop_assert_eq!(rebuilt, value);
        }
    }
}
