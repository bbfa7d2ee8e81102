//! Exact coefficient arithmetic: arbitrary-precision integers and rationals.
//!
//! Coefficients are either `BigInt` (ring ZZ) or `BigRational` (field QQ),
//! wrapped in a [`Scalar`] tagged by the ring's [`Domain`]. Rationals are kept
//! reduced with a positive denominator, so equality is structural everywhere.
//! There is no floating point anywhere in the engine.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient domain of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// The integers ZZ.
    Integer,
    /// The rationals QQ.
    Rational,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => write!(f, "ZZ"),
            Domain::Rational => write!(f, "QQ"),
        }
    }
}

/// An exact scalar: integer or reduced rational, matching its ring's domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
}

impl Scalar {
    pub fn zero(domain: Domain) -> Scalar {
        match domain {
            Domain::Integer => Scalar::Int(BigInt::zero()),
            Domain::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(domain: Domain) -> Scalar {
        match domain {
            Domain::Integer => Scalar::Int(BigInt::one()),
            Domain::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    /// Embed an integer into the given domain.
    pub fn from_int(domain: Domain, value: BigInt) -> Scalar {
        match domain {
            Domain::Integer => Scalar::Int(value),
            Domain::Rational => Scalar::Rat(BigRational::from_integer(value)),
        }
    }

    /// A rational scalar `num/den` in canonical reduced form.
    pub fn from_fraction(num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rat(BigRational::new(num, den)))
    }

    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Int(_) => Domain::Integer,
            Scalar::Rat(_) => Domain::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_negative(),
            Scalar::Rat(v) => v.is_negative(),
        }
    }

    /// True for 1 and -1 (and every nonzero rational).
    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Int(v) => v.abs().is_one(),
            Scalar::Rat(v) => !v.is_zero(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(v) => Some(v),
            Scalar::Rat(_) => None,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => unreachable!("mixed-domain scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a - b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => unreachable!("mixed-domain scalar arithmetic"),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => unreachable!("mixed-domain scalar arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(a.abs()),
            Scalar::Rat(a) => Scalar::Rat(a.abs()),
        }
    }

    /// Exact division. Over QQ this is plain division; over ZZ the divisor
    /// must divide exactly.
    pub fn div_exact(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(div_exact_int(a, b)?)),
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a / b)),
            _ => unreachable!("mixed-domain scalar arithmetic"),
        }
    }

    /// Parse a decimal integer or `p/q` fraction in the given domain.
    pub fn parse(domain: Domain, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let make_int = |s: &str| -> Result<BigInt> {
            s.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad number `{s}`")))
        };
        match text.split_once('/') {
            None => Ok(Scalar::from_int(domain, make_int(text)?)),
            Some((num, den)) => {
                if domain == Domain::Integer {
                    return Err(Error::DomainMismatch(format!(
                        "fraction `{text}` in an integer ring"
                    )));
                }
                let d = make_int(den)?;
                Scalar::from_fraction(make_int(num)?, d)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}

/// Extended gcd: `g = gcd(a, b) > 0` together with `u, v` so `u*a + v*b = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let egcd = a.extended_gcd(b);
    debug_assert!(egcd.gcd.is_positive());
    debug_assert_eq!(&egcd.x * a + &egcd.y * b, egcd.gcd);
    Ok((egcd.gcd, egcd.x, egcd.y))
}

/// Exact integer division; errors unless `b` divides `a`.
pub fn div_exact_int(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NotDivisible)
    }
}

/// Division with least-nonnegative remainder: `a = q*b + r`, `0 <= r < b`.
/// The divisor must be positive; this is the remainder convention used for
/// coefficient reduction over ZZ.
pub fn div_rem_least_nonneg(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(b.is_positive());
    let (q, r) = a.div_mod_floor(b);
    debug_assert!(!r.is_negative() && &r < b);
    (q, r)
}

/// gcd of a slice of integers, ignoring zeros; zero for an all-zero slice.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(values: I) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        if v.is_zero() {
            continue;
        }
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

/// lcm of the denominators of a slice of rationals (1 for an empty slice).
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a BigRational>>(values: I) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        l = l.lcm(v.denom());
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::RandBigInt;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(n: i64, d: i64) -> Scalar {
        Scalar::from_fraction(int(n), int(d)).unwrap()
    }

    /// Schoolbook multiplication on decimal digit strings, as an oracle
    /// independent of the bignum backend.
    fn schoolbook_mul(a: &str, b: &str) -> String {
        let da: Vec<u32> = a.chars().rev().map(|c| c.to_digit(10).unwrap()).collect();
        let db: Vec<u32> = b.chars().rev().map(|c| c.to_digit(10).unwrap()).collect();
        let mut acc = vec![0u64; da.len() + db.len()];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                acc[i + j] += (*x as u64) * (*y as u64);
            }
        }
        let mut carry = 0u64;
        for d in acc.iter_mut() {
            let v = *d + carry;
            *d = v % 10;
            carry = v / 10;
        }
        assert_eq!(carry, 0);
        let s: String = acc
            .iter()
            .rev()
            .skip_while(|&&d| d == 0)
            .map(|d| char::from_digit(*d as u32, 10).unwrap())
            .collect();
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    #[test]
    fn div_exact_small() {
        assert_eq!(div_exact_int(&int(6), &int(3)).unwrap(), int(2));
        assert_eq!(div_exact_int(&int(7), &int(2)), Err(Error::NotDivisible));
        assert_eq!(div_exact_int(&int(1), &int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn mod_zero_case() {
        use num_integer::Integer;
        assert_eq!(int(0).mod_floor(&int(7)), int(0));
    }

    #[test]
    fn big_mul_matches_schoolbook_oracle() {
        // (2^64 + 1)^2, cross-checked against digit-string multiplication.
        let a: BigInt = BigInt::from(2u8).pow(64u32) + 1;
        let product = (&a * &a).to_string();
        assert_eq!(product, schoolbook_mul(&a.to_string(), &a.to_string()));
    }

    #[test]
    fn ext_gcd_textbook() {
        let (g, u, v) = ext_gcd(&int(6), &int(4)).unwrap();
        assert_eq!(g, int(2));
        assert_eq!(u * 6 + v * 4, int(2));

        let (g, u, v) = ext_gcd(&int(5), &int(0)).unwrap();
        assert_eq!((g, u, v), (int(5), int(1), int(0)));

        assert_eq!(ext_gcd(&int(0), &int(0)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn ext_gcd_random_128bit() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..50 {
            let a = rng.gen_bigint(128);
            let b = rng.gen_bigint(128);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let (g, u, v) = ext_gcd(&a, &b).unwrap();
            assert!(g.is_positive());
            assert_eq!(&u * &a + &v * &b, g);
        }
    }

    #[test]
    fn rational_renormalization() {
        assert_eq!(rat(3, 2).add(&rat(1, 2)), Scalar::from_int(Domain::Rational, int(2)));
        assert_eq!(rat(9, 4).div_exact(&rat(3, 2)).unwrap(), rat(3, 2));
        let third = rat(1, 3);
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
    }

    #[test]
    fn canonical_form_is_structural() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-1, -2), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(Scalar::parse(Domain::Rational, "0/5").unwrap(), rat(0, 1));
    }

    #[test]
    fn least_nonneg_remainder() {
        let (q, r) = div_rem_least_nonneg(&int(5), &int(2));
        assert_eq!((q, r), (int(2), int(1)));
        let (q, r) = div_rem_least_nonneg(&int(-5), &int(2));
        assert_eq!((q, r), (int(-3), int(1)));
    }

    #[test]
    fn parse_round_trip() {
        let s = Scalar::parse(Domain::Rational, "-22/7").unwrap();
        assert_eq!(s.to_string(), "-22/7");
        assert!(Scalar::parse(Domain::Integer, "3/2").is_err());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000, d in 1i64..60, e in 1i64..60, f in 1i64..60) {
            let (x, y, z) = (rat(a, d), rat(b, e), rat(c, f));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert!(x.add(&x.neg()).is_zero());
        }

        #[test]
        fn divexact_undoes_mul(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            prop_assume!(b != 0);
            let prod = int(a) * int(b);
            prop_assert_eq!(div_exact_int(&prod, &int(b)).unwrap(), int(a));
        }
    }
}
