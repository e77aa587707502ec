//! Ground-set-indexed rational vectors.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::num::Rational;

/// A rational coordinate vector indexed by a ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QVector {
    ground: Arc<GroundSet>,
    coords: Vec<Rational>,
}

impl QVector {
    pub fn zeros(ground: Arc<GroundSet>) -> Self {
        let coords = vec![Rational::zero(); ground.len()];
        QVector { ground, coords }
    }

    pub fn from_coords(ground: Arc<GroundSet>, coords: Vec<Rational>) -> Self {
        assert_eq!(ground.len(), coords.len(), "coordinate count mismatch");
        QVector { ground, coords }
    }

    pub fn from_fn(ground: Arc<GroundSet>, f: impl Fn(&str) -> Rational) -> Self {
        let coords = ground.iter().map(f).collect();
        QVector {
            ground: ground.clone(),
            coords,
        }
    }

    /// Elementary vector with a single one at `label`.
    pub fn unit(ground: Arc<GroundSet>, label: &str) -> Result<Self> {
        let i = ground.require(label)?;
        let mut v = Self::zeros(ground);
        v.coords[i] = Rational::one();
        Ok(v)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn coord_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.coords[i]
    }

    pub fn get(&self, label: &str) -> Result<&Rational> {
        Ok(&self.coords[self.ground.require(label)?])
    }

    pub fn set(&mut self, label: &str, value: Rational) -> Result<()> {
        let i = self.ground.require(label)?;
        self.coords[i] = value;
        Ok(())
    }

    fn check_same_ground(&self, other: &QVector) {
        assert!(
            Arc::ptr_eq(&self.ground, &other.ground) || self.ground == other.ground,
            "vectors over different ground sets"
        );
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        self.check_same_ground(other);
        let mut acc = Rational::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn add(&self, other: &QVector) -> QVector {
        self.check_same_ground(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        QVector {
            ground: self.ground.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        self.check_same_ground(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        QVector {
            ground: self.ground.clone(),
            coords,
        }
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        let coords = self.coords.iter().map(|a| a * c).collect();
        QVector {
            ground: self.ground.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> QVector {
        let coords = self.coords.iter().map(|a| -a).collect();
        QVector {
            ground: self.ground.clone(),
            coords,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// Componentwise partial order: true iff self(i) <= other(i) everywhere.
    pub fn le_componentwise(&self, other: &QVector) -> bool {
        self.check_same_ground(other);
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b)
    }

    /// Total lexicographic order in ground coordinate order.
    pub fn lex_cmp(&self, other: &QVector) -> Ordering {
        self.check_same_ground(other);
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Maximum absolute coordinate value.
    pub fn max_norm(&self) -> Rational {
        let mut best = Rational::zero();
        for c in &self.coords {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    pub fn coord_sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in &self.coords {
            acc += c;
        }
        acc
    }

    /// Clear the common denominator: returns integer numerators and the
    /// (positive) common denominator.
    pub fn to_integers(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coords {
            den = den.lcm(c.denom());
        }
        let ints = self
            .coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    pub fn from_integers(ground: Arc<GroundSet>, ints: &[BigInt]) -> Self {
        let coords = ints
            .iter()
            .map(|n| Rational::from_big(n.clone(), BigInt::one()))
            .collect();
        QVector { ground, coords }
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Reduce an integer vector by the gcd of its entries, keeping orientation.
pub fn primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

/// Reduce by the gcd and flip signs so the first nonzero entry is positive.
pub fn primitive_signed(v: &mut [BigInt]) {
    primitive(v);
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }
}
