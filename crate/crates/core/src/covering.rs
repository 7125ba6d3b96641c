//! Lower bounds for the covering type `ct(X)`, and therefore for the number
//! of vertices `f_0` of any triangulation of `X`.
//!
//! A nonzero product `x_1 ⋯ x_l` of positive-degree classes with degrees
//! `i_1 <= ... <= i_l` forces `ct(X) >= l + 1 + Σ k·i_k`, one more when the
//! degrees are not all equal. Everything here is a specialisation of that
//! estimate: to a presentation, to a rational type, to only `(dim, rank)`,
//! or to the closed forms of the classical families.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::algebra::GradedPresentation;
use crate::error::{Error, Result};

/// Exponents `(m_1, ..., m_l)` such that the rational cohomology is exterior
/// on generators of degrees `2 m_j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalType {
    m: Vec<usize>,
}

impl RationalType {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::InvalidRationalType("empty rational type".into()));
        }
        if m.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidRationalType(format!(
                "{m:?} is not nondecreasing"
            )));
        }
        Ok(Self { m })
    }

    /// Like [`RationalType::new`], additionally checking `2 Σ m_j = d - l`.
    pub fn with_dimension(m: Vec<usize>, d: usize) -> Result<Self> {
        let rt = Self::new(m)?;
        if rt.dimension() != d {
            return Err(Error::InvalidRationalType(format!(
                "{:?} has l + 2Σm = {}, expected dimension {d}",
                rt.m,
                rt.dimension()
            )));
        }
        Ok(rt)
    }

    /// Sorts odd generator degrees and converts them to exponents.
    pub fn from_degrees(degrees: &[usize]) -> Result<Self> {
        if let Some(bad) = degrees.iter().find(|&&deg| deg % 2 == 0) {
            return Err(Error::InvalidRationalType(format!(
                "generator degree {bad} is even"
            )));
        }
        let mut m: Vec<usize> = degrees.iter().map(|deg| deg / 2).collect();
        m.sort_unstable();
        Self::new(m)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.m.iter().sum::<usize>()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.m.iter().map(|m| 2 * m + 1).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CtSource {
    WeightedLength,
    RationalType,
    RankDim,
    ClassicalFormula,
    Kahler,
}

impl fmt::Display for CtSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CtSource::WeightedLength => "weighted-length",
            CtSource::RationalType => "rational-type",
            CtSource::RankDim => "rank-dim",
            CtSource::ClassicalFormula => "classical-formula",
            CtSource::Kahler => "kahler",
        })
    }
}

/// A lower bound for `ct(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CtBound {
    pub value: BigInt,
    pub source: CtSource,
    /// The "+1 for unequal degrees" refinement was applied.
    pub refined: bool,
    /// The closed form evaluated to a non-integer and `value` is its ceiling.
    pub nonintegral: bool,
}

impl CtBound {
    fn exact(value: BigInt, source: CtSource) -> Self {
        Self {
            value,
            source,
            refined: false,
            nonintegral: false,
        }
    }
}

/// `Σ k·i_k` for the degrees in the order given (k is 1-based).
pub fn weighted_sum(degrees: &[usize]) -> BigInt {
    degrees
        .iter()
        .enumerate()
        .map(|(k, &deg)| BigInt::from(k + 1) * deg)
        .sum()
}

/// Weighted length of a nonzero product with the given factor degrees.
///
/// Degrees are sorted ascending first, which maximises `Σ k·i_k`.
pub fn weighted_length(degrees: &[usize]) -> CtBound {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let refined = sorted.first() != sorted.last();
    let mut value = BigInt::from(sorted.len() + 1) + weighted_sum(&sorted);
    if refined {
        value += 1;
    }
    CtBound {
        value,
        source: CtSource::WeightedLength,
        refined,
        nonintegral: false,
    }
}

/// Covering-type bound from the product of all generator powers of `pres`.
pub fn weighted_length_bound(pres: &GradedPresentation) -> Result<CtBound> {
    if pres.generators.is_empty() {
        return Err(Error::EmptyPresentation);
    }
    Ok(weighted_length(&pres.factor_degrees()))
}

/// `l + 1 + Σ j (2 m_j + 1)`, without the unequal-degree refinement.
pub fn rational_type_bound(rt: &RationalType) -> CtBound {
    let l = rt.rank();
    let value = BigInt::from(l + 1) + weighted_sum(&rt.degrees());
    CtBound::exact(value, CtSource::RationalType)
}

/// Smallest [`rational_type_bound`] compatible with dimension `d` and rank `l`.
///
/// With `M = (d - l)/2 = q l + r`, the minimising type spreads `M` as evenly
/// as monotonicity allows, giving
/// `(l+1)(l+2)/2 + 2 l M - q l (l-1) - r (r-1)`.
pub fn rank_dim_bound(d: usize, l: usize) -> Result<CtBound> {
    if l < 1 || d < l {
        return Err(Error::RankError { d, l });
    }
    if !(d - l).is_multiple_of(2) {
        return Err(Error::ParityError { d, l });
    }
    let big = |x: usize| BigInt::from(x);
    let m = (d - l) / 2;
    let (q, r) = m.div_rem(&l);
    let value = big((l + 1) * (l + 2) / 2) + big(2 * l) * big(m)
        - big(q) * big(l) * big(l - 1)
        - big(r) * big(r.saturating_sub(1));
    Ok(CtBound::exact(value, CtSource::RankDim))
}

/// Families with a closed-form covering-type bound in `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    Torus,
    U,
    SU,
    Sp,
    /// `SO(n)` with `n` the matrix size.
    SO,
}

impl ClassicalFamily {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalFamily::Torus => "Torus",
            ClassicalFamily::U => "U",
            ClassicalFamily::SU => "SU",
            ClassicalFamily::Sp => "Sp",
            ClassicalFamily::SO => "SO",
        }
    }
}

pub(crate) fn ceil_with_flag(q: &BigRational) -> (BigInt, bool) {
    (q.ceil().to_integer(), !q.is_integer())
}

/// Closed-form bound for the classical families, rounded up when the cubic
/// is not an integer at `n`.
pub fn classical_ct_bound(family: ClassicalFamily, n: usize) -> Result<CtBound> {
    let min_n = if family == ClassicalFamily::SO { 2 } else { 1 };
    if n < min_n {
        return Err(Error::DomainError {
            what: family.name(),
            n,
        });
    }
    let x = BigInt::from(n);
    let cubic = |a: i64, b: i64, c: i64, e: i64, den: i64| {
        let num = BigInt::from(a) * &x * &x * &x
            + BigInt::from(b) * &x * &x
            + BigInt::from(c) * &x
            + BigInt::from(e);
        BigRational::new(num, BigInt::from(den))
    };
    let exact = match family {
        ClassicalFamily::Torus => BigRational::new((&x + 1u32) * (&x + 2u32), BigInt::from(2)),
        ClassicalFamily::U | ClassicalFamily::SO => cubic(4, 3, 5, 12, 6),
        ClassicalFamily::SU => cubic(4, -3, 5, 6, 6),
        ClassicalFamily::Sp => cubic(8, 13, 11, 12, 6),
    };
    let (value, nonintegral) = ceil_with_flag(&exact);
    Ok(CtBound {
        value,
        source: CtSource::ClassicalFormula,
        refined: false,
        nonintegral,
    })
}

/// `(m+1)^2` for a Kähler or closed symplectic manifold of real dimension `2m`.
pub fn kahler_ct_bound(m: usize) -> Result<CtBound> {
    if m < 1 {
        return Err(Error::DomainError {
            what: "Kahler",
            n: m,
        });
    }
    let v = BigInt::from(m + 1);
    Ok(CtBound::exact(&v * &v, CtSource::Kahler))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldLabel, Generator};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn pres(gens: &[(usize, usize)]) -> GradedPresentation {
        GradedPresentation::validated(
            "t",
            FieldLabel::F2,
            gens.iter().map(|&(d, h)| Generator::new(d, h)).collect(),
        )
        .unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// All nondecreasing sequences of length `l` summing to `total`.
    fn monotone_types(total: usize, l: usize, lo: usize) -> Vec<Vec<usize>> {
        if l == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in lo..=total {
            for mut rest in monotone_types(total - first, l - 1, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn exceptional_mod2_examples() {
        let g2 = weighted_length_bound(&pres(&[(3, 3), (5, 1)])).unwrap();
        assert_eq!(g2.value, int(44));
        assert!(g2.refined);
        let e8 = pres(&[
            (3, 15),
            (5, 7),
            (9, 3),
            (15, 3),
            (17, 1),
            (23, 1),
            (27, 1),
            (29, 1),
        ]);
        assert_eq!(weighted_length_bound(&e8).unwrap().value, int(5870));
    }

    #[test]
    fn torus_and_sphere() {
        for n in 1..12usize {
            let b = weighted_length_bound(&pres(&vec![(1, 1); n])).unwrap();
            assert_eq!(b.value, BigInt::from((n + 1) * (n + 2) / 2));
            assert!(!b.refined);
            assert_eq!(
                classical_ct_bound(ClassicalFamily::Torus, n).unwrap().value,
                b.value
            );
            let rt = RationalType::new(vec![0; n]).unwrap();
            assert_eq!(rational_type_bound(&rt).value, b.value);
        }
        assert_eq!(
            weighted_length_bound(&pres(&[(2, 1)])).unwrap().value,
            int(4)
        );
        assert_eq!(
            weighted_length_bound(&pres(&[])).unwrap_err(),
            Error::EmptyPresentation
        );
    }

    #[test]
    fn rational_type_examples() {
        assert_eq!(
            rational_type_bound(&RationalType::new(vec![1]).unwrap()).value,
            int(5)
        );
        assert_eq!(
            rational_type_bound(&RationalType::new(vec![1, 5]).unwrap()).value,
            int(28)
        );
        assert!(RationalType::new(vec![2, 1]).is_err());
        assert!(RationalType::new(vec![]).is_err());
        assert!(RationalType::with_dimension(vec![1, 5], 14).is_ok());
        assert!(RationalType::with_dimension(vec![1, 5], 15).is_err());
        assert_eq!(
            RationalType::from_degrees(&[11, 3]).unwrap().exponents(),
            &[1, 5]
        );
        assert!(RationalType::from_degrees(&[4]).is_err());
    }

    #[test]
    fn rank_dim_examples_and_errors() {
        assert_eq!(rank_dim_bound(3, 1).unwrap().value, int(5));
        assert_eq!(rank_dim_bound(14, 2).unwrap().value, int(24));
        for l in 1..10usize {
            assert_eq!(
                rank_dim_bound(l, l).unwrap().value,
                BigInt::from((l + 1) * (l + 2) / 2)
            );
        }
        assert_eq!(
            rank_dim_bound(4, 1).unwrap_err(),
            Error::ParityError { d: 4, l: 1 }
        );
        assert_eq!(
            rank_dim_bound(2, 3).unwrap_err(),
            Error::RankError { d: 2, l: 3 }
        );
        assert_eq!(
            rank_dim_bound(2, 0).unwrap_err(),
            Error::RankError { d: 2, l: 0 }
        );
    }

    #[test]
    fn rank_dim_is_minimum_over_rational_types() {
        for l in 1..=4 {
            for m in 0..=8 {
                let brute = monotone_types(m, l, 0)
                    .into_iter()
                    .map(|t| rational_type_bound(&RationalType::new(t).unwrap()).value)
                    .min()
                    .unwrap();
                assert_eq!(
                    rank_dim_bound(l + 2 * m, l).unwrap().value,
                    brute,
                    "l={l} M={m}"
                );
            }
        }
    }

    #[test]
    fn rank_dim_beats_chebyshev_bound() {
        for l in 1..=60usize {
            for d in (l..=60).step_by(2) {
                let lower = BigInt::from((l + 1) * (d + 2)) / 2;
                let v = rank_dim_bound(d, l).unwrap().value;
                // (l+1)(d+2) may be odd; compare doubled values
                assert!(
                    v.clone() * 2 >= BigInt::from((l + 1) * (d + 2)),
                    "d={d} l={l}"
                );
                assert!(v >= lower);
            }
        }
    }

    #[test]
    fn classical_closed_forms() {
        assert_eq!(
            classical_ct_bound(ClassicalFamily::U, 2).unwrap().value,
            int(11)
        );
        assert_eq!(
            classical_ct_bound(ClassicalFamily::SU, 2).unwrap().value,
            int(6)
        );
        assert_eq!(
            classical_ct_bound(ClassicalFamily::Torus, 2).unwrap().value,
            int(6)
        );
        let sp1 = classical_ct_bound(ClassicalFamily::Sp, 1).unwrap();
        assert_eq!(sp1.value, int(8));
        assert!(sp1.nonintegral);
        assert!(
            !classical_ct_bound(ClassicalFamily::Sp, 2)
                .unwrap()
                .nonintegral
        );
        assert!(classical_ct_bound(ClassicalFamily::SO, 1).is_err());
        assert!(classical_ct_bound(ClassicalFamily::U, 0).is_err());
    }

    #[test]
    fn unitary_closed_form_matches_presentation() {
        for n in 2..=10usize {
            let gens: Vec<(usize, usize)> = (1..=n).map(|k| (2 * k - 1, 1)).collect();
            assert_eq!(
                classical_ct_bound(ClassicalFamily::U, n).unwrap().value,
                weighted_length_bound(&pres(&gens)).unwrap().value,
                "n={n}"
            );
        }
    }

    #[test]
    fn kahler() {
        assert_eq!(kahler_ct_bound(1).unwrap().value, int(4));
        assert_eq!(kahler_ct_bound(2).unwrap().value, int(9));
        assert_eq!(kahler_ct_bound(10).unwrap().value, int(121));
        assert!(kahler_ct_bound(0).is_err());
    }

    #[test]
    fn ascending_order_is_optimal_exhaustive_small() {
        let degrees = [1usize, 3, 3, 5, 8, 2, 7];
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        let best = weighted_sum(&sorted);
        for perm in degrees.iter().copied().permutations(degrees.len()) {
            assert!(weighted_sum(&perm) <= best);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ascending_order_is_optimal(degrees in prop::collection::vec(1usize..40, 1..=8)) {
            let mut sorted = degrees.clone();
            sorted.sort_unstable();
            let best = weighted_sum(&sorted);
            for perm in degrees.iter().copied().permutations(degrees.len()) {
                prop_assert!(weighted_sum(&perm) <= best);
            }
        }

        #[test]
        fn appending_generator_increases_bound(
            gens in prop::collection::vec((1usize..20, 1usize..4), 1..6),
            extra in (1usize..20, 1usize..4),
        ) {
            let before = weighted_length_bound(&pres(&gens)).unwrap().value;
            let mut more = gens.clone();
            more.push(extra);
            let after = weighted_length_bound(&pres(&more)).unwrap().value;
            prop_assert!(after > before);
        }
    }
}
