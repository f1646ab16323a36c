use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The prime field `F_p`. Residues are stored as `u32` in `[0, p)`.
///
/// Reduction of 64-bit products uses a precomputed Barrett constant, which
/// keeps the elimination inner loops free of hardware division.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
    barrett: u64,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl PrimeField {
    pub const DEFAULT_CHAR: u32 = 101;

    pub fn new(p: u32) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField {
            p,
            barrett: u64::MAX / p as u64,
        })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces any `u64` into `[0, p)`.
    #[inline(always)]
    pub fn reduce(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p as u64;
        while r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as u32
    }

    pub fn reduce_i64(&self, x: i64) -> u32 {
        let r = x.rem_euclid(self.p as i64);
        r as u32
    }

    #[inline(always)]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline(always)]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline(always)]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline(always)]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in {:?}", self);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn scalar(&self, value: i64) -> FieldScalar {
        FieldScalar {
            value: self.reduce_i64(value),
            field: *self,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue together with its field. Convenient at API boundaries; the
/// matrix and polynomial internals work on raw `u32` residues.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u32,
    field: PrimeField,
}

impl FieldScalar {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Option<FieldScalar> {
        (self.value != 0).then(|| FieldScalar {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.field.p)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                assert_eq!(self.field, rhs.field, "mixed characteristics");
                FieldScalar {
                    value: self.field.$method(self.value, rhs.value),
                    field: self.field,
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(100).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(101).is_ok());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(4_294_967_291).is_err());
    }

    #[test]
    fn barrett_matches_remainder() {
        for p in [2u32, 3, 101, 65_521, 1_000_003, 2_147_483_629] {
            let f = PrimeField::new(p).unwrap();
            for x in [0u64, 1, p as u64 - 1, p as u64, u64::MAX, u64::MAX / 3, 12_345_678_901] {
                assert_eq!(f.reduce(x) as u64, x % p as u64, "p={p} x={x}");
            }
        }
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let s = f.scalar(-3);
        assert_eq!(s.value(), 98);
        assert_eq!((s * s.inv().unwrap()).value(), 1);
        assert_eq!((s + f.scalar(3)).value(), 0);
    }
}
