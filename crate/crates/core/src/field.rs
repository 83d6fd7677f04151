//! Exact scalar fields.
//!
//! Every structure in the crate is generic over a [`Field`]. Two fields are
//! provided: the rationals ([`Rational`], arbitrary precision, always in
//! lowest terms) and prime fields ([`Fp`], residues in `[0, p)`). A field may
//! need runtime data to build its constants (the modulus of a prime field),
//! which is carried by the associated [`Field::Ctx`].

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Arbitrary-precision rational in canonical form.
pub type Rational = BigRational;

/// Which base field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u64 },
}

impl FieldSpec {
    pub fn validate(self) -> Result<Self, AlgebraError> {
        match self {
            FieldSpec::Rationals => Ok(self),
            FieldSpec::PrimeField { p } if is_prime(p) && p < (1 << 32) => Ok(self),
            FieldSpec::PrimeField { p } => Err(AlgebraError::InvalidField(format!(
                "modulus {p} is not a prime below 2^32"
            ))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F{p}"),
        }
    }
}

/// Trial division; moduli are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Arithmetic never rounds, so equality is decidable and
/// every axiom check reduces to comparing canonical representatives.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Runtime data needed to produce constants (unit for ℚ, the modulus for 𝔽ₚ).
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn context(spec: FieldSpec) -> Result<Self::Ctx, AlgebraError>;
    fn spec(ctx: &Self::Ctx) -> FieldSpec;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Parses the canonical text form (`"a/b"`, `"a"`, or a residue).
    fn parse(ctx: &Self::Ctx, s: &str) -> Result<Self, AlgebraError>;
}

impl Field for Rational {
    type Ctx = ();

    fn context(spec: FieldSpec) -> Result<(), AlgebraError> {
        match spec {
            FieldSpec::Rationals => Ok(()),
            other => Err(AlgebraError::FieldMismatch {
                expected: FieldSpec::Rationals,
                found: other,
            }),
        }
    }

    fn spec(_: &()) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }

    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }

    fn from_i64(_: &(), v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
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

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse(_: &(), s: &str) -> Result<Self, AlgebraError> {
        let bad = || AlgebraError::Parse(format!("invalid rational scalar {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if Zero::is_zero(&den) {
            return Err(bad());
        }
        // BigRational::new reduces and normalises the sign of the denominator.
        let r = BigRational::new(num, den);
        debug_assert!(r.denom().is_positive());
        Ok(r)
    }
}

/// Element of the prime field 𝔽ₚ, stored as a reduced residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        Fp {
            value: v as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn with(&self, value: u64) -> Self {
        Fp {
            value,
            modulus: self.modulus,
        }
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.modulus, rhs.modulus, "arithmetic across different prime fields");
    }

    fn pow(&self, mut e: u64) -> Self {
        let m = self.modulus as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        self.with(acc as u64)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    type Ctx = u64;

    fn context(spec: FieldSpec) -> Result<u64, AlgebraError> {
        match spec.validate()? {
            FieldSpec::PrimeField { p } => Ok(p),
            other => Err(AlgebraError::FieldMismatch {
                expected: FieldSpec::PrimeField { p: 2 },
                found: other,
            }),
        }
    }

    fn spec(ctx: &u64) -> FieldSpec {
        FieldSpec::PrimeField { p: *ctx }
    }

    fn zero(ctx: &u64) -> Self {
        Fp {
            value: 0,
            modulus: *ctx,
        }
    }

    fn one(ctx: &u64) -> Self {
        Fp::new(1, *ctx)
    }

    fn from_i64(ctx: &u64, v: i64) -> Self {
        Fp::new(v, *ctx)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(((self.value as u128 + self.modulus as u128 - rhs.value as u128) % self.modulus as u128) as u64)
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64)
    }

    fn neg(&self) -> Self {
        self.with((self.modulus - self.value) % self.modulus)
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            // Fermat: a^(p-2) = a^-1.
            Some(self.pow(self.modulus - 2))
        }
    }

    fn parse(ctx: &u64, s: &str) -> Result<Self, AlgebraError> {
        let v: u64 = s
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("invalid residue {s:?}")))?;
        if v >= *ctx {
            return Err(AlgebraError::Parse(format!("residue {v} is not reduced modulo {ctx}")));
        }
        Ok(Fp {
            value: v,
            modulus: *ctx,
        })
    }
}
