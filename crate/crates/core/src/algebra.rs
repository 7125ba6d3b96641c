//! Graded cohomology-algebra presentations.
//!
//! A presentation is a list of generators, each with a cohomological degree
//! and a height: the largest nonzero power. Exterior generators have height
//! 1; a truncated generator with relation `x^a = 0` has height `a - 1`.
//! The algebra is the tensor product of the corresponding truncated
//! polynomial algebras, so its Poincaré polynomial is a product of
//! geometric factors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub degree: usize,
    pub height: usize,
}

impl Generator {
    pub const fn new(degree: usize, height: usize) -> Self {
        Self { degree, height }
    }

    pub const fn exterior(degree: usize) -> Self {
        Self { degree, height: 1 }
    }

    /// Generator subject to `x^exponent = 0`.
    pub const fn truncated(degree: usize, exponent: usize) -> Self {
        Self {
            degree,
            height: exponent - 1,
        }
    }
}

/// Coefficient field label. Metadata only; no field arithmetic happens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldLabel {
    F2,
    F3,
    F5,
    Q,
    Custom(String),
}

impl FieldLabel {
    pub fn parse(label: &str) -> FieldLabel {
        match label {
            "F2" => FieldLabel::F2,
            "F3" => FieldLabel::F3,
            "F5" => FieldLabel::F5,
            "Q" => FieldLabel::Q,
            other => FieldLabel::Custom(other.to_string()),
        }
    }

    pub fn as_str(&self) -> &str {
        match self {
            FieldLabel::F2 => "F2",
            FieldLabel::F3 => "F3",
            FieldLabel::F5 => "F5",
            FieldLabel::Q => "Q",
            FieldLabel::Custom(s) => s,
        }
    }
}

impl fmt::Display for FieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedPresentation {
    pub name: String,
    pub field: FieldLabel,
    pub generators: Vec<Generator>,
}

impl GradedPresentation {
    pub fn new(name: impl Into<String>, field: FieldLabel, generators: Vec<Generator>) -> Self {
        Self {
            name: name.into(),
            field,
            generators,
        }
    }

    /// Validating constructor; see [`validate_presentation`].
    pub fn validated(
        name: impl Into<String>,
        field: FieldLabel,
        generators: Vec<Generator>,
    ) -> Result<Self> {
        validate_presentation(Self::new(name, field, generators))
    }

    /// Degrees of the nonzero product of all generator powers, one entry per
    /// factor: each generator contributes its degree `height` times.
    pub fn factor_degrees(&self) -> Vec<usize> {
        self.generators
            .iter()
            .flat_map(|g| std::iter::repeat_n(g.degree, g.height))
            .collect()
    }

    pub fn formal_dimension(&self) -> usize {
        formal_dimension(self)
    }

    pub fn poincare_polynomial(&self) -> PoincarePolynomial {
        poincare_polynomial(self)
    }
}

/// Checks the generator invariants and sorts generators by (degree, height).
pub fn validate_presentation(mut pres: GradedPresentation) -> Result<GradedPresentation> {
    if let Some((index, g)) = pres
        .generators
        .iter()
        .enumerate()
        .find(|(_, g)| g.degree == 0 || g.height == 0)
    {
        return Err(Error::InvalidGenerator {
            index,
            degree: g.degree,
            height: g.height,
        });
    }
    pres.generators.sort();
    Ok(pres)
}

/// Top nonzero degree: the sum of `height * degree` over generators.
pub fn formal_dimension(pres: &GradedPresentation) -> usize {
    pres.generators.iter().map(|g| g.height * g.degree).sum()
}

/// Poincaré polynomial with nonnegative coefficients and constant term 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincarePolynomial(IntPoly);

impl PoincarePolynomial {
    pub fn new(poly: IntPoly) -> Result<Self> {
        if !poly.coeff(0).is_one() {
            return Err(Error::InvalidBetti(
                "Poincaré polynomial must have constant term 1".into(),
            ));
        }
        if poly.coeffs().iter().any(Signed::is_negative) {
            return Err(Error::InvalidBetti(
                "Poincaré polynomial has a negative coefficient".into(),
            ));
        }
        Ok(Self(poly))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }

    pub fn is_palindromic(&self) -> bool {
        let c = self.0.coeffs();
        c.iter().eq(c.iter().rev())
    }

    pub fn betti_vector(&self) -> BettiVector {
        betti_vector(self)
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn poincare_polynomial(pres: &GradedPresentation) -> PoincarePolynomial {
    let poly = pres.generators.iter().fold(IntPoly::one(), |acc, g| {
        acc.mul(&IntPoly::geometric(g.degree, g.height))
    });
    PoincarePolynomial(poly)
}

/// Reduced Betti numbers `β_0..β_d` with `β_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    betti: Vec<BigInt>,
}

impl BettiVector {
    /// Takes reduced Betti numbers; rejects `β_0 != 0`, negative entries and
    /// an empty vector.
    pub fn new(betti: Vec<BigInt>) -> Result<Self> {
        match betti.first() {
            None => return Err(Error::InvalidBetti("empty Betti vector".into())),
            Some(b0) if !b0.is_zero() => {
                return Err(Error::InvalidBetti(format!(
                    "reduced β_0 must be 0, got {b0}"
                )))
            }
            _ => {}
        }
        if let Some((j, b)) = betti.iter().enumerate().find(|(_, b)| b.is_negative()) {
            return Err(Error::InvalidBetti(format!("β_{j} = {b} is negative")));
        }
        Ok(Self { betti })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// All-zero vector of dimension `d`.
    pub fn zeros(d: usize) -> Self {
        Self {
            betti: vec![BigInt::zero(); d + 1],
        }
    }

    pub fn dimension(&self) -> usize {
        self.betti.len() - 1
    }

    pub fn len(&self) -> usize {
        self.betti.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, j: usize) -> &BigInt {
        &self.betti[j]
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.betti
    }

    /// Replaces `β_j` (`j >= 1`).
    pub fn with(mut self, j: usize, value: BigInt) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidBetti("reduced β_0 is fixed at 0".into()));
        }
        if value.is_negative() {
            return Err(Error::InvalidBetti(format!("β_{j} = {value} is negative")));
        }
        self.betti[j] = value;
        Ok(self)
    }
}

pub fn betti_vector(pp: &PoincarePolynomial) -> BettiVector {
    let d = pp.degree();
    let mut betti: Vec<BigInt> = (0..=d).map(|j| pp.0.coeff(j)).collect();
    betti[0] = BigInt::zero();
    BettiVector { betti }
}
