//! Exact arithmetic in the cyclotomic integers `Z[zeta_N]`.
//!
//! An element is an integer polynomial in `zeta_N` reduced modulo the
//! cyclotomic polynomial `Phi_N`, so equal numbers have identical
//! coefficient vectors. Operands with different conductors are lifted to
//! the lcm of the two before combining.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::lcm;

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Divides `num` by the monic polynomial `den`, asserting zero remainder.
fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = checked_add(rem[i + j], -checked_mul(c, d));
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division was not exact");
    quot
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<[i64]>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<[i64]>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn phi(n: u64) -> Arc<[i64]> {
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 = prod_{d | n} Phi_d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|&d| n.is_multiple_of(d)) {
        poly = exact_div_monic(&poly, &phi(d));
    }
    let p: Arc<[i64]> = poly.into();
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
///
/// Computed by exact division of `x^n - 1` by `Phi_d` for every proper
/// divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    phi(n).to_vec()
}

/// Reduces a polynomial in `zeta_n` (any degree) to canonical form.
fn reduce(n: u64, poly: &[i64]) -> Vec<i64> {
    let n_us = n as usize;
    // fold modulo x^n - 1 first
    let mut folded = vec![0i64; n_us.min(poly.len()).max(1)];
    for (i, &c) in poly.iter().enumerate() {
        if c != 0 {
            let k = i % n_us;
            if k >= folded.len() {
                folded.resize(k + 1, 0);
            }
            folded[k] = checked_add(folded[k], c);
        }
    }
    let p = phi(n);
    let deg = p.len() - 1;
    for i in (deg..folded.len()).rev() {
        let c = folded[i];
        if c != 0 {
            for (j, &d) in p.iter().enumerate() {
                let k = i - deg + j;
                folded[k] = checked_add(folded[k], -checked_mul(c, d));
            }
        }
    }
    folded.truncate(deg);
    trim(folded)
}

/// An element of `Z[zeta_N]` in canonical form.
#[derive(Clone, Debug)]
pub struct CyclotomicInteger {
    conductor: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    fn normalized(conductor: u64, coeffs: Vec<i64>) -> Self {
        // Z[zeta_1] = Z[zeta_2] = Z
        let conductor = if conductor <= 2 { 1 } else { conductor };
        Self { conductor, coeffs }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::normalized(1, trim(vec![n]))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `zeta_n^e`.
    pub fn root_of_unity(n: u64, e: u64) -> Self {
        assert!(n >= 1);
        let e = (e % n) as usize;
        let mut poly = vec![0i64; e + 1];
        poly[e] = 1;
        Self::normalized(n, reduce(n, &poly))
    }

    /// `sum_e counts[e] * zeta_n^e`; `counts` may be longer than `n`.
    pub fn from_exponent_counts(n: u64, counts: &[i64]) -> Self {
        assert!(n >= 1);
        Self::normalized(n, reduce(n, counts))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Canonical coefficients, constant term first, trailing zeros removed.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn as_integer(&self) -> Result<i64> {
        match self.coeffs.as_slice() {
            [] => Ok(0),
            [c] => Ok(*c),
            _ => Err(Error::NonRationalValue(self.to_string())),
        }
    }

    /// Re-expresses `self` with conductor `m`, which must be a multiple of
    /// the current conductor.
    pub fn lift(&self, m: u64) -> Self {
        if m <= 2 || m == self.conductor {
            return self.clone();
        }
        assert_eq!(m % self.conductor, 0, "lift target must be a multiple");
        let stretch = (m / self.conductor) as usize;
        let mut poly = vec![0i64; self.coeffs.len().saturating_sub(1) * stretch + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            poly[i * stretch] = c;
        }
        Self::normalized(m, reduce(m, &poly))
    }

    fn common(&self, other: &Self) -> (Self, Self, u64) {
        let m = lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m), m)
    }

    /// Deterministic total order: rationals first by value, then the rest by
    /// conductor and coefficient vector. Not an order on the real line.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => self.as_integer().unwrap().cmp(&other.as_integer().unwrap()),
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => (self.conductor, &self.coeffs).cmp(&(other.conductor, &other.coeffs)),
        }
    }
}

impl PartialEq for CyclotomicInteger {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicInteger {}

impl From<i64> for CyclotomicInteger {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Add for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn add(self, rhs: Self) -> CyclotomicInteger {
        let (a, b, m) = self.common(rhs);
        let len = a.coeffs.len().max(b.coeffs.len());
        let sum: Vec<i64> = (0..len)
            .map(|i| {
                checked_add(
                    a.coeffs.get(i).copied().unwrap_or(0),
                    b.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        CyclotomicInteger::normalized(m, trim(sum))
    }
}

impl Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn neg(self) -> CyclotomicInteger {
        CyclotomicInteger {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|&c| checked_mul(c, -1)).collect(),
        }
    }
}

impl Sub for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn sub(self, rhs: Self) -> CyclotomicInteger {
        self + &(-rhs)
    }
}

impl Mul for &CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn mul(self, rhs: Self) -> CyclotomicInteger {
        let (a, b, m) = self.common(rhs);
        if a.is_zero() || b.is_zero() {
            return CyclotomicInteger::zero();
        }
        let mut prod = vec![0i64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = checked_add(prod[i + j], checked_mul(x, y));
            }
        }
        CyclotomicInteger::normalized(m, reduce(m.max(1), &prod))
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $f(self, rhs: Self) -> CyclotomicInteger {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for CyclotomicInteger {
    type Output = CyclotomicInteger;

    fn neg(self) -> CyclotomicInteger {
        -&self
    }
}

/// Renders as a polynomial in `zN`, e.g. `1-2*z5^2+z5^3`.
impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first && c > 0 {
                f.write_str("+")?;
            }
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                match c {
                    1 => {}
                    -1 => f.write_str("-")?,
                    _ => write!(f, "{c}*")?,
                }
                write!(f, "z{}", self.conductor)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Convenience for `zeta_n^e` in tests and examples.
pub fn zeta(n: u64, e: u64) -> CyclotomicInteger {
    CyclotomicInteger::root_of_unity(n, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn ring_identities() {
        assert_eq!(
            &zeta(4, 1) * &zeta(4, 1),
            CyclotomicInteger::from_integer(-1)
        );
        let s = &(&CyclotomicInteger::one() + &zeta(3, 1)) + &zeta(3, 2);
        assert!(s.is_zero());
        let a = &zeta(5, 1) + &zeta(5, 4);
        let b = &zeta(5, 2) + &zeta(5, 3);
        assert_eq!(a, a.clone());
        assert_ne!(a, b);
        // golden-ratio relation: (z+z^4) + (z^2+z^3) = -1
        assert_eq!(&a + &b, CyclotomicInteger::from_integer(-1));
    }

    #[test]
    fn mixed_conductors() {
        // zeta_3 = zeta_6^2 and zeta_4 * zeta_4 = zeta_2
        assert_eq!(zeta(3, 1), zeta(6, 2));
        assert_eq!(zeta(12, 3), zeta(4, 1));
        let s = &zeta(3, 1) + &zeta(4, 1);
        assert_eq!(s.conductor(), 12);
        assert_eq!(&s - &zeta(4, 1), zeta(3, 1));
        assert_eq!(zeta(2, 1), CyclotomicInteger::from_integer(-1));
    }

    #[test]
    fn as_integer_rejects_irrational() {
        assert_eq!(zeta(4, 2).as_integer().unwrap(), -1);
        assert!(matches!(
            zeta(4, 1).as_integer(),
            Err(Error::NonRationalValue(_))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(CyclotomicInteger::from_integer(-7).to_string(), "-7");
        assert_eq!(zeta(4, 1).to_string(), "z4");
        let x = &(&zeta(5, 1) + &zeta(5, 1)) - &zeta(5, 3);
        assert_eq!(x.to_string(), "2*z5-z5^3");
    }

    #[test]
    fn phi_vanishes_at_its_root() {
        for n in 1..=30u64 {
            let p = cyclotomic_polynomial(n);
            let v = CyclotomicInteger::from_exponent_counts(n, &p);
            assert!(v.is_zero(), "Phi_{n}(zeta_{n}) = {v}");
        }
    }

    proptest! {
        #[test]
        fn integer_embedding_round_trips(n in -1_000_000i64..=1_000_000) {
            prop_assert_eq!(CyclotomicInteger::from_integer(n).as_integer().unwrap(), n);
        }

        #[test]
        fn multiplication_of_roots(n in 1u64..40, e in 0u64..80, f in 0u64..80) {
            prop_assert_eq!(&zeta(n, e) * &zeta(n, f), zeta(n, e + f));
        }

        #[test]
        fn distributive(n in 3u64..20, a in proptest::collection::vec(-5i64..5, 1..20),
                        b in proptest::collection::vec(-5i64..5, 1..20),
                        c in proptest::collection::vec(-5i64..5, 1..20)) {
            let (a, b, c) = (
                CyclotomicInteger::from_exponent_counts(n, &a),
                CyclotomicInteger::from_exponent_counts(n, &b),
                CyclotomicInteger::from_exponent_counts(n, &c),
            );
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }
    }
}
