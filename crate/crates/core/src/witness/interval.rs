//! Outward-rounded interval arithmetic on positive reals, with binary
//! floating-point endpoints of configurable mantissa precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// `m · 2^e` with `m > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Float {
    m: BigInt,
    e: i64,
}

impl Float {
    fn rounded(m: BigInt, e: i64, prec: u64, up: bool) -> Float {
        let bits = m.bits();
        if bits <= prec {
            return Float { m, e };
        }
        let shift = bits - prec;
        let mut q: BigInt = &m >> shift;
        if up && (&q << shift) != m {
            q += 1;
        }
        Float {
            m: q,
            e: e + shift as i64,
        }
    }

    fn mul(&self, other: &Float, prec: u64, up: bool) -> Float {
        Float::rounded(&self.m * &other.m, self.e + other.e, prec, up)
    }

    fn cmp_one(&self) -> Ordering {
        if self.e >= 0 {
            (&self.m << self.e as u64).cmp(&BigInt::one())
        } else {
            self.m.cmp(&(BigInt::one() << (-self.e) as u64))
        }
    }

    /// `floor(x · 2^k) · 2^-k` or the ceiling, for positive rational `x`.
    fn from_rational(x: &BigRational, k: u64, up: bool, prec: u64) -> Float {
        let scaled = x * BigRational::from_integer(BigInt::one() << k);
        let m = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
        debug_assert!(m.is_positive());
        Float::rounded(m, -(k as i64), prec, up)
    }
}

/// A closed interval `[lo, hi]` with `0 < lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosInterval {
    lo: Float,
    hi: Float,
}

impl PosInterval {
    pub fn one() -> PosInterval {
        let one = Float {
            m: BigInt::one(),
            e: 0,
        };
        PosInterval {
            lo: one.clone(),
            hi: one,
        }
    }

    /// Encloses `[|a|, |b|]`-style magnitudes of a rational interval not
    /// containing zero. Returns `None` if it does.
    pub fn magnitude_of(lo: &BigRational, hi: &BigRational, prec: u64) -> Option<PosInterval> {
        let (a, b) = if lo.is_positive() {
            (lo.clone(), hi.clone())
        } else if hi.is_negative() {
            (-hi, -lo)
        } else {
            return None;
        };
        if a.is_zero() {
            return None;
        }
        // Enough fractional bits that the rounding is relative to the value.
        let k = prec + 8 + a.recip().to_integer().bits();
        Some(PosInterval {
            lo: Float::from_rational(&a, k, false, prec),
            hi: Float::from_rational(&b, k, true, prec),
        })
    }

    pub fn mul(&self, other: &PosInterval, prec: u64) -> PosInterval {
        PosInterval {
            lo: self.lo.mul(&other.lo, prec, false),
            hi: self.hi.mul(&other.hi, prec, true),
        }
    }

    pub fn pow(&self, mut k: u64, prec: u64) -> PosInterval {
        let mut base = self.clone();
        let mut acc = PosInterval::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            base = base.mul(&base, prec);
            k >>= 1;
        }
        acc
    }

    /// `Less` / `Greater` if the whole interval lies below / above 1,
    /// `None` if it contains 1.
    pub fn compare_one(&self) -> Option<Ordering> {
        if self.hi.cmp_one() == Ordering::Less {
            Some(Ordering::Less)
        } else if self.lo.cmp_one() == Ordering::Greater {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn products_around_one() {
        // 1.4142 and 0.7071 bracket sqrt(2) and 1/sqrt(2).
        let a = PosInterval::magnitude_of(&q(14142, 10000), &q(14143, 10000), 64).unwrap();
        let b = PosInterval::magnitude_of(&q(-7072, 10000), &q(-7071, 10000), 64).unwrap();
        assert_eq!(a.mul(&b, 64).compare_one(), None);
        assert_eq!(a.compare_one(), Some(Ordering::Greater));
        assert_eq!(b.compare_one(), Some(Ordering::Less));
        assert_eq!(a.pow(100, 64).compare_one(), Some(Ordering::Greater));
        assert_eq!(b.pow(100, 64).compare_one(), Some(Ordering::Less));
        assert!(PosInterval::magnitude_of(&q(-1, 2), &q(1, 2), 64).is_none());
    }

    #[test]
    fn enclosures_are_outward() {
        let third = PosInterval::magnitude_of(&q(1, 3), &q(1, 3), 16).unwrap();
        let three = PosInterval::magnitude_of(&q(3, 1), &q(3, 1), 16).unwrap();
        let prod = third.mul(&three, 16);
        assert_eq!(prod.compare_one(), None);
        assert_eq!(prod.lo.cmp_one(), Ordering::Less);
    }
}
