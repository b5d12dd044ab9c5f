//! Exact arithmetic in `Z[ζ_e]`, the ring of integers the Jacobi sums live
//! in.
//!
//! Elements are integer vectors over the power basis `1, ζ, ..., ζ^{φ(e)-1}`,
//! kept in canonical form by reduction modulo the cyclotomic polynomial
//! `Φ_e`, so equality is plain coefficient-wise equality. Coefficients are
//! arbitrary-precision: intermediate accumulations can exceed machine range
//! even when final results are small.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// The cyclotomic polynomial `Φ_e`, little-endian integer coefficients,
/// monic, of degree `φ(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycPoly {
    e: u64,
    coeffs: Vec<BigInt>,
}

impl CycPoly {
    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// An element of `Z[ζ_e]` in canonical reduced form: exactly `φ(e)`
/// coefficients on the power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    e: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Negate every coefficient; used when expanding signed orbit members.
    pub fn negated(&self) -> CycInt {
        CycInt {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// The value as a rational integer: the constant coefficient when every
    /// other coefficient vanishes.
    pub fn as_integer(&self) -> Result<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotAnInteger)
        }
    }
}

impl fmt::Display for CycInt {
    /// Signed integer combination with `z` denoting `ζ_e`, e.g. `-1-3*z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote && c.is_positive() {
                write!(f, "+")?;
            }
            let unit = c.magnitude().is_one();
            if t == 0 {
                write!(f, "{c}")?;
            } else {
                if unit {
                    if c.is_negative() {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, "{c}*")?;
                }
                if t == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{t}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// --- integer polynomial helpers (little-endian, trailing zeros trimmed) ---

fn trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic divisor; panics if the remainder is nonzero,
/// which cannot happen for cyclotomic factors of `x^e - 1`.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::ZERO; rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let lead = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - dd;
        if !lead.is_zero() {
            quot[shift] = lead.clone();
            for (i, d) in den.iter().enumerate() {
                let delta = &lead * d;
                rem[shift + i] -= delta;
            }
        }
        rem.pop();
        trim(&mut rem);
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "division was not exact"
    );
    quot
}

/// Remainder modulo a monic divisor, exact over the integers.
fn poly_rem_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    trim(&mut rem);
    while rem.len() > dd {
        let lead = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - dd;
        if !lead.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let delta = &lead * d;
                rem[shift + i] -= delta;
            }
        }
        rem.pop();
        trim(&mut rem);
    }
    rem
}

fn x_pow_minus_one(n: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::ZERO; n as usize + 1];
    v[0] = BigInt::from(-1);
    v[n as usize] = BigInt::one();
    v
}

fn ascending_divisors(n: u64) -> Vec<u64> {
    let mut divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    divs.sort_unstable();
    divs
}

/// Compute `Φ_e` by iterated exact division: `x^e - 1` divided by `Φ_d` for
/// every proper divisor `d` of `e`.
pub fn cyclotomic_polynomial(e: u64) -> CycPoly {
    assert!(e >= 1, "order must be positive");
    let mut memo: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for d in ascending_divisors(e) {
        let mut f = x_pow_minus_one(d);
        for dd in memo.keys().copied().filter(|&dd| d % dd == 0).collect::<Vec<_>>() {
            f = poly_div_exact(&f, &memo[&dd]);
        }
        memo.insert(d, f);
    }
    CycPoly { e, coeffs: memo.remove(&e).unwrap() }
}

/// Euler's totient by trial factorization.
pub fn totient(e: u64) -> u64 {
    let mut phi = e;
    for p in crate::field::prime_factors(e) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// The ring `Z[ζ_e]` with its reduction modulus and the table of reduced
/// powers `ζ^0, ..., ζ^{e-1}`.
#[derive(Debug, Clone)]
pub struct CycRing {
    e: u64,
    phi: usize,
    modulus: CycPoly,
    powers: Vec<Vec<BigInt>>,
}

impl CycRing {
    pub fn new(e: u64) -> CycRing {
        let modulus = cyclotomic_polynomial(e);
        let phi = modulus.degree();
        let mut powers = Vec::with_capacity(e as usize);
        for t in 0..e {
            let mut mono = vec![BigInt::ZERO; t as usize + 1];
            mono[t as usize] = BigInt::one();
            let mut red = poly_rem_monic(&mono, &modulus.coeffs);
            red.resize(phi, BigInt::ZERO);
            powers.push(red);
        }
        CycRing { e, phi, modulus, powers }
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// Degree of the reduction modulus, `φ(e)`.
    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &CycPoly {
        &self.modulus
    }

    fn check(&self, a: &CycInt) -> Result<()> {
        if a.e != self.e {
            return Err(Error::OrderMismatch { left: self.e, right: a.e });
        }
        Ok(())
    }

    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_reduced(&self, coeffs: Vec<BigInt>) -> CycInt {
        debug_assert_eq!(coeffs.len(), self.phi);
        CycInt { e: self.e, coeffs }
    }

    /// Coefficient slice of the canonical form of `ζ^t` (any `t`).
    pub(crate) fn power_coeffs(&self, t: u64) -> &[BigInt] {
        &self.powers[(t % self.e) as usize]
    }

    pub fn zero(&self) -> CycInt {
        self.from_reduced(vec![BigInt::ZERO; self.phi])
    }

    pub fn one(&self) -> CycInt {
        self.from_int(1)
    }

    pub fn from_int<T: Into<BigInt>>(&self, n: T) -> CycInt {
        let mut coeffs = vec![BigInt::ZERO; self.phi];
        coeffs[0] = n.into();
        self.from_reduced(coeffs)
    }

    /// Canonical form of `ζ_e^t`; exponents are taken mod `e` and powers at
    /// or above `φ(e)` are reduced by `Φ_e`.
    pub fn zeta_pow(&self, t: u64) -> CycInt {
        self.from_reduced(self.power_coeffs(t).to_vec())
    }

    /// Reduce an arbitrary integer combination `Σ raw[t]·ζ^t` to canonical
    /// form.
    pub fn from_coeffs(&self, raw: &[i64]) -> CycInt {
        let poly: Vec<BigInt> = raw.iter().map(|&c| BigInt::from(c)).collect();
        let mut red = poly_rem_monic(&poly, &self.modulus.coeffs);
        red.resize(self.phi, BigInt::ZERO);
        self.from_reduced(red)
    }

    pub fn add(&self, a: &CycInt, b: &CycInt) -> Result<CycInt> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(self.from_reduced(coeffs))
    }

    pub fn sub(&self, a: &CycInt, b: &CycInt) -> Result<CycInt> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Ok(self.from_reduced(coeffs))
    }

    pub fn mul(&self, a: &CycInt, b: &CycInt) -> Result<CycInt> {
        self.check(a)?;
        self.check(b)?;
        if self.phi == 1 {
            return Ok(self.from_reduced(vec![&a.coeffs[0] * &b.coeffs[0]]));
        }
        let prod = poly_mul(&a.coeffs, &b.coeffs);
        let mut red = poly_rem_monic(&prod, &self.modulus.coeffs);
        red.resize(self.phi, BigInt::ZERO);
        Ok(self.from_reduced(red))
    }

    /// Image of `a` under the automorphism `ζ ↦ ζ^t`; requires
    /// `gcd(t, e) = 1`.
    pub fn conjugate(&self, a: &CycInt, t: u64) -> Result<CycInt> {
        self.check(a)?;
        if gcd(t % self.e, self.e) != 1 {
            return Err(Error::NotCoprime { t, e: self.e });
        }
        let mut acc = vec![BigInt::ZERO; self.phi];
        for (m, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, w) in self.power_coeffs(m as u64 * t).iter().enumerate() {
                if !w.is_zero() {
                    acc[i] += c * w;
                }
            }
        }
        Ok(self.from_reduced(acc))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
