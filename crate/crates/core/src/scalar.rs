//! Exact scalar types.
//!
//! Everything in this crate is generic over [`Scalar`], an exact field. The
//! rationals ([`crate::Q`]) are the main instance; [`Fp`] is a small prime
//! field used for cross-checks and characteristic-p experiments.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{self, echelon, Echelon, RowBasis, Solver, SparseRow};

/// An exact field. Zero tests are decisive, so floating-point types are not
/// instances.
pub trait Scalar:
    Num + Clone + Debug + Display + Neg<Output = Self> + PartialEq + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Parse the `"p/q"` / `"p"` textual form.
    fn parse_exact(s: &str) -> Option<Self>;

    /// Reduced row-echelon form of the system given as sparse rows.
    fn echelon(cols: usize, rows: &[SparseRow<Self>]) -> Echelon<Self> {
        echelon::field_echelon(cols, rows)
    }

    /// Nullspace of the system under the requested solver.
    fn nullspace(
        cols: usize,
        rows: &[SparseRow<Self>],
        _solver: &Solver,
    ) -> Result<RowBasis<Self>, Error> {
        Ok(linalg::nullspace_from_echelon(&Self::echelon(cols, rows)))
    }

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse_exact(s: &str) -> Option<Self> {
        parse_rational(s)
    }

    fn echelon(cols: usize, rows: &[SparseRow<Self>]) -> Echelon<Self> {
        linalg::fraction_free::rational_echelon(cols, rows)
    }

    fn nullspace(
        cols: usize,
        rows: &[SparseRow<Self>],
        solver: &Solver,
    ) -> Result<RowBasis<Self>, Error> {
        match solver.strategy {
            linalg::Strategy::Modular => {
                linalg::modular::modular_nullspace(cols, rows, solver.prime_budget)
            }
            _ => Ok(linalg::nullspace_from_echelon(&Self::echelon(cols, rows))),
        }
    }
}

/// Strict parser for exact rationals: an optional sign, digits, and an
/// optional `/digits` denominator. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    fn integer(t: &str) -> Option<BigInt> {
        let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (integer(n)?, integer(d)?),
        None => (integer(s)?, BigInt::one()),
    };
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Element of the prime field Z/PZ. `P` must be an odd prime below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        assert!(o.0 != 0, "division by zero in Fp");
        self * o.pow(P - 2)
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _o: Self) -> Self {
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u64> FromStr for Fp<P> {
    type Err = std::num::ParseIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<i64>().map(Fp::new)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn parse_exact(s: &str) -> Option<Self> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.parse::<i64>().ok()?, d.parse::<i64>().ok()?),
            None => (s.parse::<i64>().ok()?, 1),
        };
        let d = Fp::new(d);
        if d.is_zero() {
            return None;
        }
        Some(Fp::new(n) / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_floats() {
        assert!(parse_rational("0.5").is_none());
        assert!(parse_rational("1e3").is_none());
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("").is_none());
        assert!(parse_rational(" 1").is_none());
        assert_eq!(parse_rational("-6/4").unwrap(), BigRational::new((-3).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap().to_string(), "7");
    }

    #[test]
    fn fp_field_laws() {
        type F = Fp<101>;
        let a = F::new(37);
        assert_eq!(a / a, F::one());
        assert_eq!(a + (-a), F::zero());
        assert_eq!(F::half() * F::from_i64(2), F::one());
        assert_eq!(F::parse_exact("1/2"), Some(F::half()));
    }
}
