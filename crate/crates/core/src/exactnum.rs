//! Exact natural-number arithmetic: factorials, p-adic valuations and the
//! small amount of number theory the sweeps need.
//!
//! Group orders in the exceptional families run far past 10^30, so nothing
//! here ever touches floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Returns `n!`.
pub fn factorial(n: u64) -> Natural {
    (2..=n).fold(Natural::one(), |acc, i| acc * i)
}

/// Largest `e` with `p^e | x`.
pub fn valuation(x: &Natural, p: u64) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroArgument("valuation"));
    }
    check_prime(p)?;
    let p = Natural::from(p);
    let mut x = x.clone();
    let mut e = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        x = q;
        e += 1;
    }
}

/// `v_p(n!)` by Legendre's formula `sum_i floor(n / p^i)`.
pub fn factorial_valuation(n: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let mut total = 0;
    let mut m = n;
    while m > 0 {
        m /= p;
        total += m;
    }
    Ok(total)
}

/// True iff `a | b`. Errors on `a = 0`.
pub fn divides(a: &Natural, b: &Natural) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroArgument("divides"));
    }
    Ok((b % a).is_zero())
}

/// `b / a`, provided the division is exact.
pub fn exact_div(b: &Natural, a: &Natural) -> Result<Natural> {
    if a.is_zero() {
        return Err(Error::ZeroArgument("exact_div"));
    }
    let (q, r) = b.div_rem(a);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            dividend: b.to_string(),
            divisor: a.to_string(),
        })
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Smallest prime strictly greater than `p`.
pub fn next_prime(p: u64) -> u64 {
    let mut c = p + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs in
/// increasing prime order. Intended for group orders and codegrees whose
/// prime divisors are small; cost grows with the largest prime factor.
pub fn factorize(x: &Natural) -> Vec<(Natural, u64)> {
    let mut out = Vec::new();
    if x.is_zero() {
        return out;
    }
    let mut x = x.clone();
    let mut d = Natural::from(2u32);
    while &d * &d <= x {
        let mut e = 0;
        loop {
            let (q, r) = x.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            x = q;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if x > Natural::one() {
        out.push((x, 1));
    }
    out
}

/// Renders `x` as `2^6·3^2·5`. One renders as `1`.
pub fn factored_form(x: &Natural) -> String {
    let f = factorize(x);
    if f.is_empty() {
        return x.to_string();
    }
    f.iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("·")
}

/// `q = p^k` with `p` prime and `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    p: u64,
    k: u32,
}

impl PrimePower {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        check_prime(p)?;
        if k == 0 {
            return Err(Error::InvalidParameter(format!(
                "prime power exponent must be >= 1, got {p}^0"
            )));
        }
        Ok(Self { p, k })
    }

    /// Splits `q` into `p^k`, rejecting anything that is not a prime power.
    pub fn from_value(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
        let mut rest = q;
        let mut k = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        Self::new(p, k)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `q` when it fits in a `u64`.
    pub fn value(&self) -> Option<u64> {
        self.p.checked_pow(self.k)
    }

    pub fn is(&self, q: u64) -> bool {
        self.value() == Some(q)
    }

    pub fn natural(&self) -> Natural {
        Natural::from(self.p).pow(self.k)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.natural())
    }
}

/// Non-negative exact rational `num/den`, used for class-number bounds such
/// as `2.5·q^m` or `8.26·q^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    num: Natural,
    den: Natural,
}

impl Fraction {
    pub fn new(num: Natural, den: Natural) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroArgument("fraction denominator"));
        }
        let g = num.gcd(&den);
        if g.is_zero() {
            return Ok(Self {
                num,
                den: Natural::one(),
            });
        }
        Ok(Self {
            num: num / &g,
            den: den / &g,
        })
    }

    pub fn integer(n: Natural) -> Self {
        Self {
            num: n,
            den: Natural::one(),
        }
    }

    /// Parses a terminating decimal such as `"8.26"` exactly.
    pub fn from_decimal(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("not a decimal constant: {s:?}"));
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let num: Natural = digits.parse().map_err(|_| bad())?;
        let den = Natural::from(10u32).pow(frac.len() as u32);
        Self::new(num, den)
    }

    pub fn numer(&self) -> &Natural {
        &self.num
    }

    pub fn denom(&self) -> &Natural {
        &self.den
    }

    pub fn mul_natural(&self, x: &Natural) -> Self {
        Self::new(&self.num * x, self.den.clone()).expect("non-zero denominator")
    }

    /// Exact `lhs < rhs·self`, evaluated as `lhs·den < rhs·num`.
    pub fn scaled_exceeds(&self, lhs: &Natural, rhs: &Natural) -> bool {
        lhs * &self.den < rhs * &self.num
    }

    /// Largest integer not exceeding the fraction.
    pub fn floor(&self) -> Natural {
        &self.num / &self.den
    }

    pub fn cmp_natural(&self, x: &Natural) -> Ordering {
        self.num.cmp(&(x * &self.den))
    }

    /// Decimal rendering; exact when the denominator only has factors 2 and 5,
    /// otherwise `num/den`.
    pub fn to_decimal_string(&self) -> String {
        let mut den = self.den.clone();
        let mut shift = 0u32;
        let two = Natural::from(2u32);
        let five = Natural::from(5u32);
        let ten = Natural::from(10u32);
        let mut scale = Natural::one();
        while !den.is_one() {
            if (&den % &two).is_zero() {
                den /= &two;
                scale *= &five;
            } else if (&den % &five).is_zero() {
                den /= &five;
                scale *= &two;
            } else {
                return format!("{}/{}", self.num, self.den);
            }
            shift += 1;
        }
        if shift == 0 {
            return self.num.to_string();
        }
        let scaled = &self.num * scale;
        let base = ten.pow(shift);
        let (int, frac) = scaled.div_rem(&base);
        let mut frac = format!("{:0>width$}", frac.to_string(), width = shift as usize);
        while frac.ends_with('0') {
            frac.pop();
        }
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

/// Converts a small natural to `u64` when it fits.
pub fn to_u64(x: &Natural) -> Option<u64> {
    x.to_u64()
}
