//! Exact arithmetic in the cyclotomic field Q(ζ), ζ a primitive 12th root of unity.
//!
//! Elements are stored in the power basis `1, ζ, ζ², ζ³` and kept reduced modulo
//! the cyclotomic polynomial `Φ₁₂(x) = x⁴ − x² + 1`. The field contains both
//! `i = ζ³` and the cube root of unity `ω = ζ⁴ = ζ² − 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldError;

/// An element `a₀ + a₁ζ + a₂ζ² + a₃ζ³` of Q(ζ₁₂).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycNum {
    c: [BigRational; 4],
}

/// Power-basis coordinates of ζᵏ for k = 0..11.
const ZETA_POW: [[i8; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

impl CycNum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut c: [BigRational; 4] = Default::default();
        c[0] = r;
        CycNum { c }
    }

    /// `p/q` as a field element. Panics on `q == 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_coeffs(c: [BigRational; 4]) -> Self {
        CycNum { c }
    }

    pub fn from_int_coeffs(c: [i64; 4]) -> Self {
        CycNum {
            c: c.map(|v| BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// ζᵏ for any integer exponent.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(12) as usize;
        Self::from_int_coeffs(ZETA_POW[k].map(i64::from))
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// The imaginary unit, ζ³.
    pub fn i() -> Self {
        Self::zeta_pow(3)
    }

    /// ω = −½ + (√3/2)i = ζ⁴.
    pub fn omega() -> Self {
        Self::zeta_pow(4)
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.c[0])
    }

    /// Complex conjugation, the automorphism ζ ↦ ζ¹¹.
    pub fn conj(&self) -> Self {
        self.galois(11)
    }

    /// The Galois automorphism ζ ↦ ζᵏ, for k coprime to 12.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert!(matches!(k.rem_euclid(12), 1 | 5 | 7 | 11));
        let mut out = CycNum::zero();
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let p = ZETA_POW[(k * j as i64).rem_euclid(12) as usize];
            for (slot, &s) in out.c.iter_mut().zip(p.iter()) {
                match s {
                    1 => *slot += a,
                    -1 => *slot -= a,
                    _ => {}
                }
            }
        }
        out
    }

    /// Field norm down to Q: the product of the four Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let prod = self * &self.galois(5) * &self.galois(7) * &self.galois(11);
        debug_assert!(prod.is_rational());
        prod.c[0].clone()
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNum::from_rational(r.recip()));
        }
        let others = self.galois(5) * &self.galois(7) * &self.galois(11);
        let n = (self * &others).c[0].clone();
        Ok(others.scale(&n.recip()))
    }

    pub fn div(&self, rhs: &CycNum) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return CycNum::zero();
        }
        CycNum {
            c: [0, 1, 2, 3].map(|j| {
                if self.c[j].is_zero() {
                    BigRational::zero()
                } else {
                    &self.c[j] * r
                }
            }),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self += a * b` without materialising the product when either side is zero.
    pub fn add_mul(&mut self, a: &CycNum, b: &CycNum) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_rational() && b.is_rational() {
            self.c[0] += &a.c[0] * &b.c[0];
            return;
        }
        *self += &(a * b);
    }
}

fn mul_raw(a: &CycNum, b: &CycNum) -> CycNum {
    let mut prod: [BigRational; 7] = Default::default();
    for (i, x) in a.c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.c.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            prod[i + j] += x * y;
        }
    }
    let [c0, c1, c2, c3, c4, c5, c6] = prod;
    // ζ⁴ = ζ² − 1, ζ⁵ = ζ³ − ζ, ζ⁶ = −1
    CycNum {
        c: [c0 - &c4 - c6, c1 - &c5, c2 + c4, c3 + c5],
    }
}

impl Mul<&CycNum> for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero();
        }
        if self.is_rational() {
            return rhs.scale(&self.c[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.c[0]);
        }
        mul_raw(self, rhs)
    }
}

impl Mul<&CycNum> for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        &self * rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Add<&CycNum> for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(mut self, rhs: CycNum) -> CycNum {
        self += &rhs;
        self
    }
}

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(mut self, rhs: CycNum) -> CycNum {
        self -= &rhs;
        self
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            c: [0, 1, 2, 3].map(|j| -&self.c[j]),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl From<BigRational> for CycNum {
    fn from(r: BigRational) -> Self {
        CycNum::from_rational(r)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "z", "z^2", "z^3"];
        let mut first = true;
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{}", names[j])?,
                (_, false) => write!(f, "{mag}*{}", names[j])?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}
