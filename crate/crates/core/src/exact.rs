//! Exact integer and dense integer-polynomial arithmetic.
//!
//! Everything downstream (Poincaré polynomials, face bounds, totals) is
//! computed on [`BigInt`] so that 120-digit totals come out exact.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `C(n, k)`, with the convention that out-of-range `k` yields zero.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for step in 0..k {
        acc *= n - step;
        acc /= step + 1;
    }
    acc
}

/// Pascal triangle of binomials `C(n, k)` for `0 <= n <= max_n`.
///
/// Built once per face-vector evaluation; lookups are then clones.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Borrowing lookup; `None` means the value is zero (k out of range).
    ///
    /// Panics if `n` exceeds the table size.
    pub fn get(&self, n: usize, k: i64) -> Option<&BigInt> {
        let row = &self.rows[n];
        if k < 0 || k as usize >= row.len() {
            None
        } else {
            Some(&row[k as usize])
        }
    }

    pub fn value(&self, n: usize, k: i64) -> BigInt {
        self.get(n, k).cloned().unwrap_or_default()
    }
}

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are stripped on
/// construction, so the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exponent: usize, coeff: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = coeff;
        Self::new(coeffs)
    }

    /// `1 + t^step + t^(2 step) + ... + t^(terms*step)`.
    pub fn geometric(step: usize, terms: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); step * terms + 1];
        for k in 0..=terms {
            coeffs[k * step] = BigInt::one();
        }
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: usize) -> BigInt {
        self.coeffs.get(exponent).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn mass(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// Free-function form of [`IntPoly::mul`].
pub fn poly_mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p.mul(q)
}

/// Free-function form of [`IntPoly::eval`].
pub fn poly_eval(p: &IntPoly, x: i64) -> BigInt {
    p.eval(&BigInt::from(x))
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}
