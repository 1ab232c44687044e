//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! Every scalar in this crate is exact; there is no floating point anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

use crate::error::FieldError;

/// An exact field of coefficients.
///
/// `Ctx` carries whatever session configuration is needed to build elements
/// from literals: `()` for the rationals, the modulus for a prime field. The
/// modulus is fixed per session; mixing elements of different prime fields is
/// a programming error.
pub trait Field:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    type Ctx: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Build `numer/denom`. Fails when the denominator vanishes in the field.
    fn from_ratio(ctx: &Self::Ctx, numer: &BigInt, denom: &BigInt) -> Result<Self, FieldError>;
    fn from_int(ctx: &Self::Ctx, value: i64) -> Self;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for BigRational {
    type Ctx = ();

    fn zero() -> Self {
        num::zero()
    }
    fn one() -> Self {
        num::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_ratio(_ctx: &(), numer: &BigInt, denom: &BigInt) -> Result<Self, FieldError> {
        if Zero::is_zero(denom) {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(BigRational::new(numer.clone(), denom.clone()))
    }
    fn from_int(_ctx: &(), value: i64) -> Self {
        BigRational::from_integer(value.into())
    }
}

/// Largest admissible prime modulus; keeps `u64` products from overflowing.
pub const MAX_PRIME: u64 = 1 << 31;

/// Suggested default modulus for the prime-field configuration.
pub const DEFAULT_PRIME: u64 = 32003;

/// An element of a prime field `Z/p` with the modulus carried per element.
///
/// `Int` holds the small integer constants produced by [`Field::zero`] and
/// [`Field::one`], which have no modulus to hand; they bind to the modulus of
/// the first bound operand they meet. All other elements are `Mod` values in
/// canonical reduced form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fp {
    Int(i64),
    Mod { value: u64, modulus: u64 },
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        let v = ((value % m) + m) % m;
        Fp::Mod {
            value: v as u64,
            modulus,
        }
    }

    fn bind(&self, modulus: u64) -> (u64, u64) {
        match *self {
            Fp::Int(v) => {
                let m = modulus as i64;
                ((((v % m) + m) % m) as u64, modulus)
            }
            Fp::Mod { value, modulus: m } => {
                assert_eq!(m, modulus, "mixed prime-field moduli");
                (value, m)
            }
        }
    }

    fn modulus(&self) -> Option<u64> {
        match self {
            Fp::Int(_) => None,
            Fp::Mod { modulus, .. } => Some(*modulus),
        }
    }

    pub fn value(&self) -> i64 {
        match *self {
            Fp::Int(v) => v,
            Fp::Mod { value, .. } => value as i64,
        }
    }

    fn binop(&self, rhs: &Self, f: impl Fn(u64, u64, u64) -> u64, int: impl Fn(i64, i64) -> i64) -> Self {
        match self.modulus().or(rhs.modulus()) {
            Some(p) => {
                let (a, _) = self.bind(p);
                let (b, _) = rhs.bind(p);
                Fp::Mod {
                    value: f(a, b, p),
                    modulus: p,
                }
            }
            None => Fp::Int(int(self.value(), rhs.value())),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Trial-division primality test, adequate for moduli below [`MAX_PRIME`].
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates a session modulus: odd prime below [`MAX_PRIME`].
pub fn validate_modulus(p: u64) -> Result<u64, FieldError> {
    if p <= 2 || p >= MAX_PRIME || !is_prime(p) {
        return Err(FieldError::BadModulus(p));
    }
    Ok(p)
}

impl Field for Fp {
    type Ctx = u64;

    fn zero() -> Self {
        Fp::Int(0)
    }
    fn one() -> Self {
        Fp::Int(1)
    }
    fn is_zero(&self) -> bool {
        match *self {
            Fp::Int(v) => v == 0,
            Fp::Mod { value, .. } => value == 0,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b, p| (a + b) % p, |a, b| a.checked_add(b).expect("unbound constant overflow"))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b, p| (a + p - b) % p, |a, b| a.checked_sub(b).expect("unbound constant overflow"))
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b, p| a * b % p, |a, b| a.checked_mul(b).expect("unbound constant overflow"))
    }
    fn neg(&self) -> Self {
        match *self {
            Fp::Int(v) => Fp::Int(-v),
            Fp::Mod { value, modulus } => Fp::Mod {
                value: if value == 0 { 0 } else { modulus - value },
                modulus,
            },
        }
    }
    fn inv(&self) -> Self {
        match *self {
            Fp::Int(1) => Fp::Int(1),
            Fp::Int(-1) => Fp::Int(-1),
            Fp::Int(0) => panic!("inverse of zero"),
            Fp::Int(v) => panic!("unbound constant {v} has no inverse without a modulus"),
            Fp::Mod { value, modulus } => {
                assert!(value != 0, "inverse of zero");
                Fp::Mod {
                    value: pow_mod(value, modulus - 2, modulus),
                    modulus,
                }
            }
        }
    }
    fn from_ratio(ctx: &u64, numer: &BigInt, denom: &BigInt) -> Result<Self, FieldError> {
        let p = *ctx;
        let reduce = |x: &BigInt| -> u64 {
            let m = BigInt::from(p);
            let mut r = x % &m;
            if r.is_negative() {
                r += &m;
            }
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        };
        let n = reduce(numer);
        let d = reduce(denom);
        if d == 0 {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Fp::Mod {
            value: n * pow_mod(d, p - 2, p) % p,
            modulus: p,
        })
    }
    fn from_int(ctx: &u64, value: i64) -> Self {
        Fp::new(value, *ctx)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Fp::Int(v) => write!(f, "{v}"),
            Fp::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialEq<Fp> for &Fp {
    fn eq(&self, other: &Fp) -> bool {
        **self == *other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = BigRational;

    #[test]
    fn rational_ops_are_exact() {
        let ctx = ();
        let a = Q::from_ratio(&ctx, &BigInt::from(1), &BigInt::from(3)).unwrap();
        let b = Q::from_ratio(&ctx, &BigInt::from(1), &BigInt::from(6)).unwrap();
        let half = Q::from_ratio(&ctx, &BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(a.add(&b), half);
        assert_eq!(half.inv(), Q::from_int(&ctx, 2));
        assert!(Q::from_ratio(&ctx, &BigInt::from(1), &BigInt::from(0)).is_err());
    }

    #[test]
    fn fp_binds_unbound_constants() {
        let p = 7u64;
        let five = Fp::from_int(&p, 5);
        assert_eq!(Fp::one().add(&five), Fp::from_int(&p, 6));
        assert_eq!(Fp::one().add(&Fp::one()), Fp::Int(2));
        assert_eq!(Fp::Int(2).add(&five), Fp::from_int(&p, 0));
        assert_eq!(five.mul(&five.inv()), Fp::from_int(&p, 1));
        assert_eq!(Fp::one().neg().mul(&five), Fp::from_int(&p, 2));
    }

    #[test]
    fn fp_equality_respects_reduction() {
        let p = 7u64;
        assert_eq!(Fp::from_int(&p, -1), Fp::from_int(&p, 6));
        assert!(Fp::from_int(&p, 7).is_zero());
    }

    #[test]
    fn fp_from_ratio_inverts_denominator() {
        let p = 32003u64;
        let x = Fp::from_ratio(&p, &BigInt::from(2), &BigInt::from(3)).unwrap();
        assert_eq!(x.mul(&Fp::from_int(&p, 3)), Fp::from_int(&p, 2));
        assert!(Fp::from_ratio(&p, &BigInt::from(1), &BigInt::from(32003)).is_err());
    }

    #[test]
    fn modulus_validation() {
        assert!(validate_modulus(32003).is_ok());
        assert!(validate_modulus(2).is_err());
        assert!(validate_modulus(32004).is_err());
        assert!(is_prime(2147483647));
    }
}
