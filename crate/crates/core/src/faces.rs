//! Face-number lower bounds for triangulated homology manifolds.
//!
//! For a connected, orientable, closed `d`-dimensional homology manifold
//! with reduced Betti numbers `β_j` and at least `f_0` vertices, every face
//! number satisfies
//!
//! ```text
//! f_i >= f_0 C(d+1,i) - i C(d+2,i+1) + C(d+1,i+1) Σ_{j<=i} C(i,j) β_j
//!        + Σ_{j=2}^{⌊(d+2)/2⌋} [C(d+2-j, d+1-i) - C(j, d+1-i)] C(d+1,j-1) β_{j-1}
//! ```
//!
//! for `i < d`, and
//!
//! ```text
//! f_d >= f_0 d - (d+2)(d-1) + Σ_{j<d} C(d,j) β_j
//!        + Σ_{j=2}^{⌊(d+2)/2⌋} (d+2-2j) C(d+1,j-1) β_{j-1}.
//! ```
//!
//! With all `β = 0` these degenerate to the classical Lower Bound Theorem.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::BettiVector;
use crate::catalog;
use crate::covering::{ceil_with_flag, classical_ct_bound, kahler_ct_bound, ClassicalFamily};
use crate::error::{Error, Result};
use crate::exact::BinomialTable;

/// Lower bounds `(f_0, ..., f_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceBoundVector {
    pub d: usize,
    pub f0_input: BigInt,
    pub bounds: Vec<BigInt>,
}

impl FaceBoundVector {
    pub fn total(&self) -> BigInt {
        total_bound(self)
    }
}

/// Evaluates the bound formula for one `(d, f_0, β)` triple, sharing a
/// binomial table across indices.
#[derive(Debug, Clone)]
pub struct FaceBoundEvaluator<'a> {
    d: usize,
    f0: BigInt,
    betti: &'a BettiVector,
    table: BinomialTable,
}

impl<'a> FaceBoundEvaluator<'a> {
    pub fn new(d: usize, f0: &BigInt, betti: &'a BettiVector) -> Result<Self> {
        if betti.len() != d + 1 {
            return Err(Error::DimensionMismatch {
                expected: d + 1,
                found: betti.len(),
            });
        }
        Ok(Self {
            d,
            f0: f0.clone(),
            betti,
            table: BinomialTable::new(d + 2),
        })
    }

    fn c(&self, n: usize, k: i64) -> BigInt {
        self.table.value(n, k)
    }

    pub fn bound(&self, i: usize) -> Result<BigInt> {
        let d = self.d;
        if i > d {
            return Err(Error::IndexError { i, d });
        }
        // A closed 0-manifold is a point.
        if d == 0 {
            return Ok(self.f0.clone());
        }
        let (di, d_i64) = (i as i64, d as i64);
        let beta = |j: usize| self.betti.get(j);
        let upper = (d + 2) / 2;

        let value = if i < d {
            let mut v = &self.f0 * self.c(d + 1, di) - BigInt::from(i) * self.c(d + 2, di + 1);

            let inner: BigInt = (0..=i)
                .filter(|&j| !beta(j).is_zero())
                .map(|j| self.c(i, j as i64) * beta(j))
                .sum();
            v += self.c(d + 1, di + 1) * inner;

            let k = d_i64 + 1 - di;
            for j in 2..=upper {
                let b = beta(j - 1);
                if b.is_zero() {
                    continue;
                }
                let diff = self.c(d + 2 - j, k) - self.c(j, k);
                v += diff * self.c(d + 1, j as i64 - 1) * b;
            }
            v
        } else {
            let mut v = &self.f0 * d - BigInt::from(d + 2) * (d - 1);
            for j in 0..d {
                if !beta(j).is_zero() {
                    v += self.c(d, j as i64) * beta(j);
                }
            }
            for j in 2..=upper {
                let b = beta(j - 1);
                if b.is_zero() {
                    continue;
                }
                let weight = BigInt::from(d_i64 + 2 - 2 * j as i64);
                v += weight * self.c(d + 1, j as i64 - 1) * b;
            }
            v
        };
        Ok(value)
    }

    pub fn vector(&self) -> FaceBoundVector {
        let bounds = (0..=self.d)
            .map(|i| self.bound(i).expect("index in range"))
            .collect();
        FaceBoundVector {
            d: self.d,
            f0_input: self.f0.clone(),
            bounds,
        }
    }
}

/// Lower bound for `f_i`. Builds a fresh binomial table; use
/// [`face_bound_vector`] or [`FaceBoundEvaluator`] for many indices.
pub fn face_bound(i: usize, d: usize, f0: &BigInt, betti: &BettiVector) -> Result<BigInt> {
    FaceBoundEvaluator::new(d, f0, betti)?.bound(i)
}

pub fn face_bound_vector(d: usize, f0: &BigInt, betti: &BettiVector) -> Result<FaceBoundVector> {
    Ok(FaceBoundEvaluator::new(d, f0, betti)?.vector())
}

/// Lower bound on the total number of simplices.
pub fn total_bound(v: &FaceBoundVector) -> BigInt {
    v.bounds.iter().sum()
}

/// Classical families indexed the way their facet estimates are stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FacetFamily {
    U,
    SU,
    /// `SO(2n+1)`.
    SoOdd,
    /// `SO(2n)`.
    SoEven,
    Sp,
}

impl FacetFamily {
    pub const ALL: [FacetFamily; 5] = [
        FacetFamily::U,
        FacetFamily::SU,
        FacetFamily::SoOdd,
        FacetFamily::SoEven,
        FacetFamily::Sp,
    ];

    pub fn catalog_name(self) -> &'static str {
        match self {
            FacetFamily::U => "U",
            FacetFamily::SU => "SU",
            FacetFamily::SoOdd => "SO_odd",
            FacetFamily::SoEven => "SO_even",
            FacetFamily::Sp => "Sp",
        }
    }

    pub fn parse(name: &str) -> Option<FacetFamily> {
        FacetFamily::ALL
            .into_iter()
            .find(|f| f.catalog_name().eq_ignore_ascii_case(name))
    }

    fn min_n(self) -> usize {
        match self {
            FacetFamily::SU | FacetFamily::SoEven => 2,
            _ => 1,
        }
    }

    /// Covering-type closed form used as `f_0`.
    fn ct_family_and_arg(self, n: usize) -> (ClassicalFamily, usize) {
        match self {
            FacetFamily::U => (ClassicalFamily::U, n),
            FacetFamily::SU => (ClassicalFamily::SU, n),
            FacetFamily::Sp => (ClassicalFamily::Sp, n),
            FacetFamily::SoOdd => (ClassicalFamily::SO, 2 * n + 1),
            FacetFamily::SoEven => (ClassicalFamily::SO, 2 * n),
        }
    }

    /// Published quintic-plus-exponential facet estimate, evaluated exactly.
    /// The SO forms contain a stray `k`, read here as `n`.
    pub fn closed_form(self, n: usize) -> BigRational {
        let x = BigInt::from(n);
        let poly = |coeffs: [i64; 6], den: i64| {
            let num = coeffs
                .iter()
                .fold(BigInt::zero(), |acc, &c| acc * &x + BigInt::from(c));
            BigRational::new(num, BigInt::from(den))
        };
        let pow2 = |e: usize| BigRational::from_integer((BigInt::from(1) << e) - 1);
        match self {
            FacetFamily::U => poly([4, -3, 5, 6, 0, 12], 6) + pow2(n),
            FacetFamily::SU => poly([4, -9, 1, 15, 0, 6], 6) + pow2(n - 1),
            FacetFamily::SoOdd => poly([32, 64, 64, 38, 9, 6], 3) + pow2(n),
            FacetFamily::SoEven => poly([32, -16, 16, -2, -3, 6], 3) + pow2(n),
            FacetFamily::Sp => poly([8, 15, 12, 11, 6, 12], 6) + pow2(n),
        }
    }
}

/// A facet bound computed through the formula pipeline next to a closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetComparison {
    /// Canonical value.
    pub derived: BigInt,
    pub closed_form: BigRational,
    pub agree: bool,
    /// `f_0` came from a non-integral closed form and was rounded up.
    pub f0_nonintegral: bool,
}

impl FacetComparison {
    fn new(derived: BigInt, closed_form: BigRational, f0_nonintegral: bool) -> Self {
        let agree = closed_form == BigRational::from_integer(derived.clone());
        Self {
            derived,
            closed_form,
            agree,
            f0_nonintegral,
        }
    }

    /// Ceiling of the closed form and whether rounding happened.
    pub fn closed_form_ceil(&self) -> (BigInt, bool) {
        ceil_with_flag(&self.closed_form)
    }
}

/// Truncated facet bound `f_0 d - (d+2)(d-1) + (2^l - 1)`.
///
/// The Betti sum is bounded below by counting the nonempty subsets of the
/// `l` rational exterior generators, and the final correction sum is
/// dropped, so this never exceeds the full `f_d` bound when `l >= 2`.
pub fn classical_facet_bound(family: FacetFamily, n: usize) -> Result<FacetComparison> {
    if n < family.min_n() {
        return Err(Error::DomainError {
            what: family.catalog_name(),
            n,
        });
    }
    let data = catalog::group_data(family.catalog_name(), Some(n))?;
    let (ct_family, ct_arg) = family.ct_family_and_arg(n);
    let f0 = classical_ct_bound(ct_family, ct_arg)?;
    let (d, l) = (data.dim, data.rank);
    let derived = &f0.value * d - BigInt::from(d + 2) * BigInt::from(d as i64 - 1)
        + ((BigInt::from(1) << l) - 1);
    Ok(FacetComparison::new(
        derived,
        family.closed_form(n),
        f0.nonintegral,
    ))
}

/// Betti numbers forced by a class `ω` of degree 2 with `ω^m != 0`.
pub fn kahler_betti(m: usize) -> BettiVector {
    (1..=m).fold(BettiVector::zeros(2 * m), |b, j| {
        b.with(2 * j, BigInt::from(1)).expect("j >= 1")
    })
}

/// Facet bound for a Kähler or closed symplectic `2m`-manifold.
pub fn kahler_facet_bound(m: usize) -> Result<FacetComparison> {
    let f0 = kahler_ct_bound(m)?;
    let d = 2 * m;
    let derived = face_bound(d, d, &f0.value, &kahler_betti(m))?;
    let x = BigInt::from(m);
    let closed =
        BigInt::from(2) * &x * &x * &x + BigInt::from(2) * &x + (BigInt::from(1) << (2 * (m - 1)));
    Ok(FacetComparison::new(
        derived,
        BigRational::from_integer(closed),
        false,
    ))
}
