//! Finite abelian groups as direct products of cyclic groups.
//!
//! A group `Z_{m_1} x ... x Z_{m_k}` stores the factor orders; an element is
//! its vector of residues. Elements are enumerated in lexicographic
//! coordinate order, so the element with coordinates `(g_1, ..., g_k)` has
//! rank `sum_i g_i * stride_i` with the first coordinate most significant.
//! For `Z_2^d` this makes the rank of an element equal to its bitstring read
//! left to right as a binary number, which the Walsh-Hadamard path relies on.
//!
//! Characters are indexed by group elements: `a` names the character
//! `psi_a(g) = zeta_N^(sum_i a_i g_i N / m_i)` where `N` is the exponent.

use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::CyclotomicInteger;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
    order: u64,
    exponent: u64,
    // rank contribution of one unit in coordinate i
    strides: Vec<u64>,
    // N / m_i
    weights: Vec<u64>,
}

/// An element of a [`FiniteAbelianGroup`], stored as its residue vector.
///
/// Ordering is lexicographic on coordinates, which agrees with rank order
/// for elements of the same group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

/// Index of a character: the character `psi_a` is named by the element `a`.
pub type CharacterIndex = GroupElement;

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Bitstring rendering, leftmost character is coordinate 0. Only
    /// meaningful when every coordinate is 0 or 1.
    pub fn to_bitstring(&self) -> String {
        self.0
            .iter()
            .map(|&c| if c == 0 { '0' } else { '1' })
            .collect()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl FiniteAbelianGroup {
    /// Builds `Z_{orders[0]} x ... x Z_{orders[k-1]}`. The empty list gives
    /// the trivial group.
    pub fn new(orders: impl Into<Vec<u64>>) -> Result<Self> {
        let orders = orders.into();
        if let Some(&bad) = orders.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidOrder(bad));
        }
        let order = orders
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .ok_or(Error::GroupTooLarge)?;
        let exponent = orders.iter().fold(1, |acc, &m| lcm(acc, m));
        let mut strides = vec![1u64; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        let weights = orders.iter().map(|&m| exponent / m).collect();
        Ok(Self {
            orders,
            order,
            exponent,
            strides,
            weights,
        })
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new()).expect("empty product is valid")
    }

    /// The elementary abelian group `Z_2^d`.
    pub fn cube(d: usize) -> Self {
        Self::new(vec![2; d]).expect("Z_2^d is valid")
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// True for `Z_2^d` (including the trivial group).
    pub fn is_cubelike(&self) -> bool {
        self.exponent <= 2
    }

    pub(crate) fn require_cubelike(&self) -> Result<()> {
        if self.is_cubelike() {
            Ok(())
        } else {
            Err(Error::NotCubelike(self.to_string()))
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Standard basis element `e_i` (coordinate `i` set to 1).
    pub fn basis(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        GroupElement(coords)
    }

    pub fn element(&self, coords: impl Into<Vec<u64>>) -> Result<GroupElement> {
        let g = GroupElement(coords.into());
        self.check(&g)?;
        Ok(g)
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if g.0.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: g.0.len(),
            });
        }
        for (index, (&value, &order)) in g.0.iter().zip(&self.orders).enumerate() {
            if value >= order {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    value,
                    order,
                });
            }
        }
        Ok(())
    }

    /// Element at position `rank` in lexicographic order.
    pub fn element_at(&self, rank: usize) -> GroupElement {
        debug_assert!((rank as u64) < self.order);
        let r = rank as u64;
        GroupElement(
            self.strides
                .iter()
                .zip(&self.orders)
                .map(|(&s, &m)| (r / s) % m)
                .collect(),
        )
    }

    /// Lexicographic position of `g`.
    pub fn rank_of(&self, g: &GroupElement) -> usize {
        g.0.iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c * s)
            .sum::<u64>() as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order as usize).map(move |r| self.element_at(r))
    }

    /// Elements with `2g = 0`, in lexicographic order, including zero.
    pub fn involutions(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.elements().filter(|g| self.is_involution(g))
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.orders)
                .map(|((&a, &b), &m)| (a + b) % m)
                .collect(),
        )
    }

    pub fn neg(&self, g: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&self.orders)
                .map(|(&a, &m)| (m - a) % m)
                .collect(),
        )
    }

    pub fn sub(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.add(g, &self.neg(h))
    }

    /// True iff `2g = 0` (zero counts).
    pub fn is_involution(&self, g: &GroupElement) -> bool {
        g.0.iter()
            .zip(&self.orders)
            .all(|(&a, &m)| (2 * a) % m == 0)
    }

    /// `lcm_i m_i / gcd(g_i, m_i)`.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        g.0.iter()
            .zip(&self.orders)
            .fold(1, |acc, (&a, &m)| lcm(acc, m / gcd(a, m)))
    }

    /// Exponent `e` with `psi_a(g) = zeta_N^e`.
    pub fn char_exponent(&self, a: &CharacterIndex, g: &GroupElement) -> u64 {
        let n = self.exponent;
        a.0.iter()
            .zip(&g.0)
            .zip(&self.weights)
            .fold(0, |acc, ((&x, &y), &w)| (acc + (x * y % n) * w) % n)
    }

    /// The character value `psi_a(g)` as an exact cyclotomic integer of
    /// conductor equal to the group exponent.
    pub fn char_value(&self, a: &CharacterIndex, g: &GroupElement) -> Result<CyclotomicInteger> {
        self.check(a)?;
        self.check(g)?;
        Ok(CyclotomicInteger::root_of_unity(
            self.exponent,
            self.char_exponent(a, g),
        ))
    }

    /// `psi_a(g)` for an involution `g`, as `+1` or `-1`.
    pub fn char_sign(&self, a: &CharacterIndex, g: &GroupElement) -> i8 {
        debug_assert!(self.is_involution(g));
        if self.char_exponent(a, g) == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return f.write_str("Z1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.orders.len() {
            let m = self.orders[i];
            let run = self.orders[i..].iter().take_while(|&&x| x == m).count();
            if !first {
                f.write_str("x")?;
            }
            first = false;
            if run == 1 {
                write!(f, "Z{m}")?;
            } else {
                write!(f, "Z{m}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Parses literals such as `Z2^5`, `Z4^2`, `Z2^5xZ3` (case-insensitive).
/// `Z1` alone denotes the trivial group.
impl FromStr for FiniteAbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let literal = s.trim();
        let fail = |reason: &str| Error::GroupLiteral {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        if literal.eq_ignore_ascii_case("z1") {
            return Ok(Self::trivial());
        }
        let mut orders = Vec::new();
        for factor in literal.split(['x', 'X']) {
            let factor = factor.trim();
            let body = factor
                .strip_prefix(['Z', 'z'])
                .ok_or_else(|| fail("each factor must start with 'Z'"))?;
            let (base, reps) = match body.split_once('^') {
                Some((b, r)) => (b.trim(), r.trim()),
                None => (body.trim(), "1"),
            };
            let m: u64 = base.parse().map_err(|_| fail("bad cyclic order"))?;
            let reps: usize = reps.parse().map_err(|_| fail("bad repetition count"))?;
            if m < 2 {
                return Err(fail("cyclic orders must be at least 2"));
            }
            orders.extend(std::iter::repeat_n(m, reps));
        }
        Self::new(orders)
    }
}
