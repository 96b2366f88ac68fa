//! Exact scalar fields.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num::rational::Ratio;
use num::{Integer, Num, Signed, Zero};

/// An exact field of characteristic zero.
///
/// Every algorithm in this crate tests entries against zero, so only exact
/// types implement this trait. `Ratio<BigInt>` is the workhorse; fixed-width
/// ratios work for small inputs.
pub trait Scalar: Clone + Debug + Display + Eq + Ord + Hash + Num + Signed + Send + Sync + 'static {
    fn from_i64(n: i64) -> Self;

    /// Parses `"p/q"` or `"p"`.
    fn parse_exact(s: &str) -> Option<Self>;

    /// Least common multiple of the denominators of `xs` (one for an empty slice).
    fn denominator_lcm(xs: &[Self]) -> Self;

    fn is_integral(&self) -> bool;

    fn half() -> Self {
        Self::one() / Self::from_i64(2)
    }

    fn sign(positive: bool) -> Self {
        if positive {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + Hash + FromStr + From<i64> + Send + Sync + 'static,
{
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(I::from(n))
    }

    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        s.parse::<Ratio<I>>().ok()
    }

    fn denominator_lcm(xs: &[Self]) -> Self {
        let l = xs.iter().fold(I::one(), |acc, x| acc.lcm(x.denom()));
        Ratio::from_integer(l)
    }

    fn is_integral(&self) -> bool {
        self.denom().is_one()
    }
}

/// `(-1)^k` as a scalar.
pub fn parity_sign<T: Scalar>(k: i64) -> T {
    T::sign(k.rem_euclid(2) == 0)
}

pub(crate) fn is_zero_slice<T: Scalar>(xs: &[T]) -> bool {
    xs.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigRational, One};

    #[test]
    fn parses_fractions_and_integers() {
        let a = BigRational::parse_exact("-6/4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(BigRational::parse_exact("7").unwrap(), BigRational::from_i64(7));
        assert!(BigRational::parse_exact("1/0").is_none());
        assert!(BigRational::parse_exact("").is_none());
        assert!(BigRational::parse_exact("x").is_none());
    }

    #[test]
    fn zero_is_canonical() {
        let z = BigRational::parse_exact("0/5").unwrap();
        assert_eq!(z.to_string(), "0");
        assert!(z.denom().is_one());
    }

    #[test]
    fn denominator_lcm_clears_fractions() {
        let xs: Vec<BigRational> = ["1/4", "5/6", "2"].iter().map(|s| BigRational::parse_exact(s).unwrap()).collect();
        let l = BigRational::denominator_lcm(&xs);
        assert_eq!(l, BigRational::from_i64(12));
        assert!(xs.iter().all(|x| (x * &l).is_integral()));
    }

    #[test]
    fn fixed_width_ratios_are_scalars() {
        let a = Ratio::<i64>::parse_exact("2/3").unwrap();
        assert_eq!(a * Ratio::<i64>::from_i64(3), Ratio::<i64>::from_i64(2));
        assert_eq!(parity_sign::<Ratio<i64>>(-3), -Ratio::<i64>::one());
    }
}
