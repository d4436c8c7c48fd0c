use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{GeomError, Result};
use crate::linalg;

fn validate(coords: &[f64]) -> Result<()> {
    if coords.is_empty() {
        return Err(GeomError::ZeroDimension);
    }
    match coords.iter().position(|c| !c.is_finite()) {
        Some(i) => Err(GeomError::NonFinite(i)),
        None => Ok(()),
    }
}

/// A point of the space, in standard coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        validate(&coords)?;
        Ok(Self(coords))
    }

    /// Skips validation; callers guarantee a finite, nonempty coordinate list.
    pub(crate) fn from_raw(coords: Vec<f64>) -> Self {
        debug_assert!(validate(&coords).is_ok());
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(alloc::vec![0.0; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = alloc::vec![0.0; dim];
        v[i] = 1.0;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0.0)
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self(linalg::scale(&self.0, s))
    }
}

impl From<Vector> for Vec<f64> {
    fn from(v: Vector) -> Self {
        v.0
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(linalg::add(&self.0, &rhs.0))
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(linalg::sub(&self.0, &rhs.0))
    }
}

impl Mul<f64> for &Vector {
    type Output = Vector;
    fn mul(self, s: f64) -> Vector {
        self.scaled(s)
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scaled(-1.0)
    }
}

/// A linear functional, acting by the standard pairing.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional(Vec<f64>);

impl Functional {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        validate(&coeffs)?;
        Ok(Self(coeffs))
    }

    pub(crate) fn from_raw(coeffs: Vec<f64>) -> Self {
        debug_assert!(validate(&coeffs).is_ok());
        Self(coeffs)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0.0)
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self(linalg::scale(&self.0, s))
    }

    /// `f(x)`.
    pub fn apply(&self, x: &Vector) -> Result<f64> {
        if x.dim() != self.dim() {
            return Err(GeomError::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(linalg::dot(&self.0, x.coords()))
    }
}

impl Sub for &Functional {
    type Output = Functional;
    fn sub(self, rhs: &Functional) -> Functional {
        Functional(linalg::sub(&self.0, &rhs.0))
    }
}
