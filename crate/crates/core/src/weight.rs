//! Weight vectors in the fundamental-weight basis.
//!
//! Two flavours are used throughout the crate. [`Weight`] carries integer
//! coordinates and is what every representation-theoretic computation works
//! with. [`QWeight`] carries exact rational coordinates and only shows up
//! where genuinely fractional points occur (polytope vertices of a general
//! regular weight, orbit averages, membership queries).

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// An integral weight `λ = Σ coords[i] ω_i`, so that `λ(H_{α_i}) = coords[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `(1, …, 1)`, i.e. ρ.
    pub fn ones(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn to_rational(&self) -> QWeight {
        QWeight(
            self.0
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `self += k * other`
    pub fn add_scaled(&mut self, k: i64, other: &Weight) {
        debug_assert_eq!(self.rank(), other.rank());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += k * b;
        }
    }
}

impl Index<usize> for Weight {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;

    fn add(self, rhs: &'a Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;

    fn sub(self, rhs: &'a Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
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

/// A weight with exact rational fundamental coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QWeight(Vec<BigRational>);

impl QWeight {
    pub fn new(coords: Vec<BigRational>) -> Self {
        QWeight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        QWeight(vec![BigRational::zero(); rank])
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        QWeight(
            coords
                .iter()
                .map(|&(p, q)| BigRational::new(p.into(), q.into()))
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// The integral weight with the same coordinates, if there is one.
    pub fn to_integral(&self) -> Option<Weight> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }

    pub fn scale(&self, k: &BigRational) -> QWeight {
        QWeight(self.0.iter().map(|c| c * k).collect())
    }

    /// Coordinates rendered as `"p/q"` strings (`"p"` when integral).
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

impl Index<usize> for QWeight {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl<'a> Add<&'a QWeight> for &'a QWeight {
    type Output = QWeight;

    fn add(self, rhs: &'a QWeight) -> QWeight {
        QWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a QWeight> for &'a QWeight {
    type Output = QWeight;

    fn sub(self, rhs: &'a QWeight) -> QWeight {
        QWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<'a> Mul<&'a BigRational> for &'a QWeight {
    type Output = QWeight;

    fn mul(self, rhs: &'a BigRational) -> QWeight {
        self.scale(rhs)
    }
}

impl From<&Weight> for QWeight {
    fn from(w: &Weight) -> Self {
        w.to_rational()
    }
}

impl fmt::Debug for QWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QWeight {
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

/// Coordinates in the simple-root basis: `Σ coords[i] α_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootCoords(Vec<BigRational>);

impl RootCoords {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RootCoords(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RootCoords(
            coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// Integer coordinates, when every entry is an integer that fits.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Sum of the coordinates (the height, for roots).
    pub fn height(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }
}

impl fmt::Debug for RootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
