//! Built-in presentations for compact Lie groups.
//!
//! Exceptional groups carry mod-2, mod-3, mod-5 and rational presentations;
//! classical families are parametric in `n`. Truncation exponents are
//! converted to heights here, once.

use std::fmt;

use crate::algebra::{FieldLabel, Generator, GradedPresentation};
use crate::covering::{weighted_length_bound, CtBound, RationalType};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Exceptional,
    ClassicalParametric,
}

/// Static description of a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupRecord {
    pub name: &'static str,
    pub kind: FamilyKind,
    pub fields: &'static [FieldLabelStatic],
    /// Simple and simply connected, so the rational type starts with `m_1 = 1`.
    pub simple_simply_connected: bool,
    /// Smallest admissible `n` for parametric entries.
    pub min_n: usize,
    /// Human-readable form of the presented algebras.
    pub notation: &'static str,
}

/// `Copy` mirror of the four standard [`FieldLabel`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldLabelStatic {
    F2,
    F3,
    F5,
    Q,
}

impl FieldLabelStatic {
    pub fn label(self) -> FieldLabel {
        match self {
            FieldLabelStatic::F2 => FieldLabel::F2,
            FieldLabelStatic::F3 => FieldLabel::F3,
            FieldLabelStatic::F5 => FieldLabel::F5,
            FieldLabelStatic::Q => FieldLabel::Q,
        }
    }
}

use FieldLabelStatic as Fl;

const ALL_FIELDS: &[Fl] = &[Fl::F2, Fl::F3, Fl::F5, Fl::Q];

pub const EXCEPTIONAL: [&str; 5] = ["G2", "F4", "E6", "E7", "E8"];

const RECORDS: &[GroupRecord] = &[
    GroupRecord {
        name: "G2",
        kind: FamilyKind::Exceptional,
        fields: ALL_FIELDS,
        simple_simply_connected: true,
        min_n: 0,
        notation: "F2: F2[z3]/(z3^4) ⊗ Λ(z5); F3,F5,Q: Λ(z3,z11)",
    },
    GroupRecord {
        name: "F4",
        kind: FamilyKind::Exceptional,
        fields: ALL_FIELDS,
        simple_simply_connected: true,
        min_n: 0,
        notation: "F2: F2[z3]/(z3^4) ⊗ Λ(z5,z15,z23); F3: F3[x8]/(x8^3) ⊗ Λ(z3,z7,z11,z15); \
                   F5,Q: Λ(z3,z11,z15,z23)",
    },
    GroupRecord {
        name: "E6",
        kind: FamilyKind::Exceptional,
        fields: ALL_FIELDS,
        simple_simply_connected: true,
        min_n: 0,
        notation: "F2: F2[z3]/(z3^4) ⊗ Λ(z5,z9,z15,z17,z23); \
                   F3: F3[x8]/(x8^3) ⊗ Λ(z3,z7,z9,z11,z15,z17); F5,Q: Λ(z3,z9,z11,z15,z17,z23)",
    },
    GroupRecord {
        name: "E7",
        kind: FamilyKind::Exceptional,
        fields: ALL_FIELDS,
        simple_simply_connected: true,
        min_n: 0,
        notation: "F2: F2[z3,z5,z9]/(z3^4,z5^4,z9^4) ⊗ Λ(z15,z17,z23,z27); \
                   F3: F3[x8]/(x8^3) ⊗ Λ(z3,z7,z11,z15,z19,z27,z35); \
                   F5,Q: Λ(z3,z11,z15,z19,z23,z27,z35)",
    },
    GroupRecord {
        name: "E8",
        kind: FamilyKind::Exceptional,
        fields: ALL_FIELDS,
        simple_simply_connected: true,
        min_n: 0,
        notation: "F2: F2[z3,z5,z9,z15]/(z3^16,z5^8,z9^4,z15^4) ⊗ Λ(z17,z23,z27,z29); \
                   F3: F3[x8,x20]/(x8^3,x20^3) ⊗ Λ(z3,z7,z15,z19,z27,z35,z39,z47); \
                   F5: F5[x12]/(x12^5) ⊗ Λ(z3,z11,z15,z23,z27,z35,z39,z47); \
                   Q: Λ(z3,z15,z23,z27,z35,z39,z47,z59)",
    },
    GroupRecord {
        name: "Torus",
        kind: FamilyKind::ClassicalParametric,
        fields: &[Fl::Q],
        simple_simply_connected: false,
        min_n: 1,
        notation: "Λ(t1,...,tn), deg t_i = 1",
    },
    GroupRecord {
        name: "U",
        kind: FamilyKind::ClassicalParametric,
        fields: &[Fl::Q],
        simple_simply_connected: false,
        min_n: 1,
        notation: "U(n): Λ(x1,x3,...,x(2n-1))",
    },
    GroupRecord {
        name: "SU",
        kind: FamilyKind::ClassicalParametric,
        fields: &[Fl::Q],
        simple_simply_connected: true,
        min_n: 2,
        notation: "SU(n): Λ(x3,x5,...,x(2n-1))",
    },
    GroupRecord {
        name: "Sp",
        kind: FamilyKind::ClassicalParametric,
        fields: &[Fl::Q],
        simple_simply_connected: true,
        min_n: 1,
        notation: "Sp(n): Λ(x3,x7,...,x(4n-1))",
    },
    GroupRecord {
        name: "SO_odd",
        kind: FamilyKind::ClassicalParametric,
        fields: &[Fl::Q],
        simple_simply_connected: false,
        min_n: 1,
        notation: "SO(2n+1): Λ(x3,x7,...,x(4n-1))",
    },
    GroupRecord {
        name: "SO_even",
        kind: FamilyKind::ClassicalParametric,
        fields: &[Fl::Q],
        simple_simply_connected: false,
        min_n: 2,
        notation: "SO(2n): Λ(x3,x7,...,x(4n-5), x(2n-1))",
    },
    GroupRecord {
        name: "SO_mod2",
        kind: FamilyKind::ClassicalParametric,
        fields: &[Fl::F2],
        simple_simply_connected: false,
        min_n: 3,
        notation: "SO(n) mod 2: F2[x1,x3,...,x(2m-1)]/(x_i^a_i), m = ⌊n/2⌋, \
                   a_i least power of two with i·a_i >= n",
    },
];

pub fn records() -> &'static [GroupRecord] {
    RECORDS
}

pub fn record(group: &str) -> Result<&'static GroupRecord> {
    RECORDS
        .iter()
        .find(|r| r.name == group)
        .ok_or_else(|| Error::UnknownGroup(group.to_string()))
}

/// One line of `catalog list`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub group: &'static str,
    pub fields: Vec<FieldLabel>,
    pub parametric: bool,
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields: Vec<&str> = self.fields.iter().map(FieldLabel::as_str).collect();
        if self.parametric {
            write!(f, "{} (parametric n) [{}]", self.group, fields.join(","))
        } else {
            write!(f, "{} [{}]", self.group, fields.join(","))
        }
    }
}

pub fn list_entries() -> Vec<CatalogEntry> {
    RECORDS
        .iter()
        .map(|r| CatalogEntry {
            group: r.name,
            fields: r.fields.iter().map(|f| f.label()).collect(),
            parametric: r.kind == FamilyKind::ClassicalParametric,
        })
        .collect()
}

fn ext(degrees: &[usize]) -> impl Iterator<Item = Generator> + '_ {
    degrees.iter().map(|&d| Generator::exterior(d))
}

fn exceptional_generators(group: &str, field: &FieldLabel) -> Option<Vec<Generator>> {
    use FieldLabel::*;
    let t = Generator::truncated;
    let gens: Vec<Generator> = match (group, field) {
        ("G2", F2) => std::iter::once(t(3, 4)).chain(ext(&[5])).collect(),
        ("G2", F3 | F5 | Q) => ext(&[3, 11]).collect(),
        ("F4", F2) => std::iter::once(t(3, 4)).chain(ext(&[5, 15, 23])).collect(),
        ("F4", F3) => std::iter::once(t(8, 3))
            .chain(ext(&[3, 7, 11, 15]))
            .collect(),
        ("F4", F5 | Q) => ext(&[3, 11, 15, 23]).collect(),
        ("E6", F2) => std::iter::once(t(3, 4))
            .chain(ext(&[5, 9, 15, 17, 23]))
            .collect(),
        ("E6", F3) => std::iter::once(t(8, 3))
            .chain(ext(&[3, 7, 9, 11, 15, 17]))
            .collect(),
        ("E6", F5 | Q) => ext(&[3, 9, 11, 15, 17, 23]).collect(),
        ("E7", F2) => [t(3, 4), t(5, 4), t(9, 4)]
            .into_iter()
            .chain(ext(&[15, 17, 23, 27]))
            .collect(),
        ("E7", F3) => std::iter::once(t(8, 3))
            .chain(ext(&[3, 7, 11, 15, 19, 27, 35]))
            .collect(),
        ("E7", F5 | Q) => ext(&[3, 11, 15, 19, 23, 27, 35]).collect(),
        ("E8", F2) => [t(3, 16), t(5, 8), t(9, 4), t(15, 4)]
            .into_iter()
            .chain(ext(&[17, 23, 27, 29]))
            .collect(),
        ("E8", F3) => [t(8, 3), t(20, 3)]
            .into_iter()
            .chain(ext(&[3, 7, 15, 19, 27, 35, 39, 47]))
            .collect(),
        ("E8", F5) => std::iter::once(t(12, 5))
            .chain(ext(&[3, 11, 15, 23, 27, 35, 39, 47]))
            .collect(),
        ("E8", Q) => ext(&[3, 15, 23, 27, 35, 39, 47, 59]).collect(),
        _ => return None,
    };
    Some(gens)
}

/// Odd generator degrees of the rational exterior presentation.
fn rational_degrees(group: &str, n: usize) -> Vec<usize> {
    match group {
        "Torus" => vec![1; n],
        "U" => (1..=n).map(|k| 2 * k - 1).collect(),
        "SU" => (2..=n).map(|k| 2 * k - 1).collect(),
        "Sp" | "SO_odd" => (1..=n).map(|k| 4 * k - 1).collect(),
        "SO_even" => (1..n)
            .map(|k| 4 * k - 1)
            .chain(std::iter::once(2 * n - 1))
            .collect(),
        "G2" | "F4" | "E6" | "E7" | "E8" => exceptional_generators(group, &FieldLabel::Q)
            .expect("rational presentation exists")
            .iter()
            .map(|g| g.degree)
            .collect(),
        _ => unreachable!("not a rational-type family: {group}"),
    }
}

fn check_n(rec: &GroupRecord, n: Option<usize>) -> Result<usize> {
    match (rec.kind, n) {
        (FamilyKind::Exceptional, _) => Ok(0),
        (FamilyKind::ClassicalParametric, None) => Err(Error::MissingParameter(rec.name.into())),
        (FamilyKind::ClassicalParametric, Some(n)) if n < rec.min_n => {
            Err(Error::DomainError { what: rec.name, n })
        }
        (FamilyKind::ClassicalParametric, Some(n)) => Ok(n),
    }
}

/// Mod-2 presentation of `SO(n)`: generators `x_i` for odd `i < n` (up to
/// `2⌊n/2⌋ - 1`) with height `a_i - 1`, where `a_i` is the least power of
/// two with `i·a_i >= n`.
pub fn so_mod2_heights(n: usize) -> Result<GradedPresentation> {
    if n < 3 {
        return Err(Error::DomainError { what: "SO_mod2", n });
    }
    let gens = (0..n / 2)
        .map(|k| {
            let i = 2 * k + 1;
            let mut alpha = 1;
            while i * alpha < n {
                alpha *= 2;
            }
            Generator::new(i, alpha - 1)
        })
        .collect();
    GradedPresentation::validated(format!("SO({n})"), FieldLabel::F2, gens)
}

fn display_name(group: &str, n: usize) -> String {
    match group {
        "SO_odd" => format!("SO({})", 2 * n + 1),
        "SO_even" => format!("SO({})", 2 * n),
        "SO_mod2" => format!("SO({n})"),
        "Torus" => format!("T^{n}"),
        g if EXCEPTIONAL.contains(&g) => g.to_string(),
        g => format!("{g}({n})"),
    }
}

/// The pinned presentation of `group` over `field`.
pub fn presentation(
    group: &str,
    field: &FieldLabel,
    n: Option<usize>,
) -> Result<GradedPresentation> {
    let rec = record(group)?;
    let n = check_n(rec, n)?;
    let unknown_field = || Error::UnknownField {
        group: group.to_string(),
        field: field.to_string(),
    };
    if !rec.fields.iter().any(|f| &f.label() == field) {
        return Err(unknown_field());
    }
    match rec.kind {
        FamilyKind::Exceptional => {
            let gens = exceptional_generators(group, field).ok_or_else(unknown_field)?;
            GradedPresentation::validated(group, field.clone(), gens)
        }
        FamilyKind::ClassicalParametric if group == "SO_mod2" => so_mod2_heights(n),
        FamilyKind::ClassicalParametric => GradedPresentation::validated(
            display_name(group, n),
            field.clone(),
            ext(&rational_degrees(group, n)).collect(),
        ),
    }
}

/// Dimension, rank and rational type of a catalog group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub rational_type: RationalType,
    /// Small `SO(2n)` cases whose rational degrees collide or reorder.
    pub degenerate: bool,
}

pub fn group_data(group: &str, n: Option<usize>) -> Result<GroupData> {
    let rec = record(group)?;
    let n = check_n(rec, n)?;
    if group == "SO_mod2" {
        let half = if n % 2 == 1 { "SO_odd" } else { "SO_even" };
        // SO(3), SO(5), ... and SO(4), SO(6), ...
        let mut data = group_data(half, Some(n / 2))?;
        data.name = display_name(group, n);
        return Ok(data);
    }
    let (dim, rank) = match group {
        "Torus" => (n, n),
        "U" => (n * n, n),
        "SU" => (n * n - 1, n - 1),
        "Sp" | "SO_odd" => (n * (2 * n + 1), n),
        "SO_even" => (n * (2 * n - 1), n),
        "G2" => (14, 2),
        "F4" => (52, 4),
        "E6" => (78, 6),
        "E7" => (133, 7),
        "E8" => (248, 8),
        _ => return Err(Error::UnknownGroup(group.to_string())),
    };
    let degrees = rational_degrees(group, n);
    let rational_type = RationalType::with_dimension(
        RationalType::from_degrees(&degrees)?.exponents().to_vec(),
        dim,
    )?;
    Ok(GroupData {
        name: display_name(group, n),
        dim,
        rank,
        rational_type,
        degenerate: group == "SO_even" && n <= 3,
    })
}

/// Largest weighted-length bound among the group's presentations.
///
/// The covering type does not depend on the coefficient field, so any of
/// these is a valid `f_0` for every field's face bounds.
pub fn best_ct_bound(group: &str, n: Option<usize>) -> Result<(FieldLabel, CtBound)> {
    let rec = record(group)?;
    let mut best: Option<(FieldLabel, CtBound)> = None;
    for f in rec.fields {
        let label = f.label();
        let ct = weighted_length_bound(&presentation(group, &label, n)?)?;
        if best.as_ref().is_none_or(|(_, b)| ct.value > b.value) {
            best = Some((label, ct));
        }
    }
    best.ok_or(Error::EmptyPresentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly_eval;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn degrees_heights(p: &GradedPresentation) -> Vec<(usize, usize)> {
        p.generators.iter().map(|g| (g.degree, g.height)).collect()
    }

    /// Every (group, field, n) combination exercised by the sweeps.
    fn all_instances() -> Vec<(&'static str, FieldLabel, Option<usize>)> {
        let mut out = Vec::new();
        for rec in records() {
            for f in rec.fields {
                match rec.kind {
                    FamilyKind::Exceptional => out.push((rec.name, f.label(), None)),
                    FamilyKind::ClassicalParametric => {
                        for n in rec.min_n..=10 {
                            out.push((rec.name, f.label(), Some(n)));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn presentation_examples() {
        let f4 = presentation("F4", &FieldLabel::F3, None).unwrap();
        assert_eq!(
            degrees_heights(&f4),
            vec![(3, 1), (7, 1), (8, 2), (11, 1), (15, 1)]
        );
        let su4 = presentation("SU", &FieldLabel::Q, Some(4)).unwrap();
        assert_eq!(degrees_heights(&su4), vec![(3, 1), (5, 1), (7, 1)]);
        let e8 = presentation("E8", &FieldLabel::Q, None).unwrap();
        assert_eq!(
            e8.generators.iter().map(|g| g.degree).collect::<Vec<_>>(),
            vec![3, 15, 23, 27, 35, 39, 47, 59]
        );
        assert!(e8.generators.iter().all(|g| g.height == 1));
        let e7 = presentation("E7", &FieldLabel::F2, None).unwrap();
        assert_eq!(&degrees_heights(&e7)[..3], &[(3, 3), (5, 3), (9, 3)]);
        let e8 = presentation("E8", &FieldLabel::F2, None).unwrap();
        assert_eq!(
            &degrees_heights(&e8)[..4],
            &[(3, 15), (5, 7), (9, 3), (15, 3)]
        );
    }

    #[test]
    fn presentation_errors() {
        assert_eq!(
            presentation("G3", &FieldLabel::Q, None).unwrap_err(),
            Error::UnknownGroup("G3".into())
        );
        assert!(matches!(
            presentation("G2", &FieldLabel::parse("F7"), None),
            Err(Error::UnknownField { .. })
        ));
        assert!(matches!(
            presentation("SU", &FieldLabel::F2, Some(3)),
            Err(Error::UnknownField { .. })
        ));
        assert_eq!(
            presentation("SU", &FieldLabel::Q, None).unwrap_err(),
            Error::MissingParameter("SU".into())
        );
        assert!(matches!(
            presentation("SU", &FieldLabel::Q, Some(1)),
            Err(Error::DomainError { .. })
        ));
    }

    #[test]
    fn so_mod2_examples() {
        assert_eq!(degrees_heights(&so_mod2_heights(3).unwrap()), vec![(1, 3)]);
        assert_eq!(
            degrees_heights(&so_mod2_heights(4).unwrap()),
            vec![(1, 3), (3, 1)]
        );
        assert_eq!(
            degrees_heights(&so_mod2_heights(5).unwrap()),
            vec![(1, 7), (3, 1)]
        );
        for n in 3..=40 {
            assert_eq!(
                so_mod2_heights(n).unwrap().formal_dimension(),
                n * (n - 1) / 2
            );
        }
        assert!(so_mod2_heights(2).is_err());
    }

    #[test]
    fn group_data_examples() {
        let g2 = group_data("G2", None).unwrap();
        assert_eq!((g2.dim, g2.rank), (14, 2));
        assert_eq!(g2.rational_type.exponents(), &[1, 5]);
        let sp3 = group_data("Sp", Some(3)).unwrap();
        assert_eq!((sp3.dim, sp3.rank), (21, 3));
        assert_eq!(sp3.rational_type.exponents(), &[1, 3, 5]);
        let e7 = group_data("E7", None).unwrap();
        assert_eq!((e7.dim, e7.rank), (133, 7));
        assert_eq!(e7.rational_type.exponents(), &[1, 5, 7, 9, 11, 13, 17]);
        assert!(group_data("SO_even", Some(2)).unwrap().degenerate);
        assert!(!group_data("SO_even", Some(4)).unwrap().degenerate);
        assert_eq!(
            group_data("Spin", None).unwrap_err(),
            Error::UnknownGroup("Spin".into())
        );
    }

    #[test]
    fn exceptional_pairs() {
        let expected = [(14, 2), (52, 4), (78, 6), (133, 7), (248, 8)];
        for (g, pair) in EXCEPTIONAL.iter().zip(expected) {
            let data = group_data(g, None).unwrap();
            assert_eq!((data.dim, data.rank), pair);
            for f in ALL_FIELDS {
                assert_eq!(
                    presentation(g, &f.label(), None)
                        .unwrap()
                        .formal_dimension(),
                    pair.0,
                    "{g} over {f:?}"
                );
            }
        }
    }

    #[test]
    fn dimensions_match_presentations() {
        for (g, f, n) in all_instances() {
            let p = presentation(g, &f, n).unwrap();
            let data = group_data(g, n).unwrap();
            assert_eq!(p.formal_dimension(), data.dim, "{g} {f} {n:?}");
            assert_eq!(data.rational_type.dimension(), data.dim);
            assert_eq!(data.rational_type.rank(), data.rank);
        }
    }

    #[test]
    fn orthogonal_dimensions_are_k_choose_2() {
        for n in 1..=10 {
            let k = 2 * n + 1;
            assert_eq!(group_data("SO_odd", Some(n)).unwrap().dim, k * (k - 1) / 2);
        }
        for n in 2..=10 {
            let k = 2 * n;
            assert_eq!(group_data("SO_even", Some(n)).unwrap().dim, k * (k - 1) / 2);
        }
    }

    #[test]
    fn poincare_duality_and_euler_characteristic() {
        for (g, f, n) in all_instances() {
            let pp = presentation(g, &f, n).unwrap().poincare_polynomial();
            assert!(pp.is_palindromic(), "{g} {f} {n:?}");
            if pp.degree() >= 1 {
                assert!(poly_eval(pp.poly(), -1).is_zero(), "{g} {f} {n:?}");
            }
        }
    }

    #[test]
    fn simple_groups_start_with_degree_three() {
        for rec in records().iter().filter(|r| r.simple_simply_connected) {
            let ns: Vec<Option<usize>> = match rec.kind {
                FamilyKind::Exceptional => vec![None],
                FamilyKind::ClassicalParametric => (rec.min_n..=10).map(Some).collect(),
            };
            for n in ns {
                let data = group_data(rec.name, n).unwrap();
                assert_eq!(data.rational_type.exponents()[0], 1, "{} {n:?}", rec.name);
            }
        }
    }

    #[test]
    fn f5_and_q_coincide_except_e8() {
        for g in EXCEPTIONAL {
            let f5 = presentation(g, &FieldLabel::F5, None)
                .unwrap()
                .poincare_polynomial();
            let q = presentation(g, &FieldLabel::Q, None)
                .unwrap()
                .poincare_polynomial();
            assert_eq!(f5 == q, g != "E8", "{g}");
        }
    }

    #[test]
    fn mod2_beats_rational_for_exceptional() {
        for g in EXCEPTIONAL {
            let f2 =
                weighted_length_bound(&presentation(g, &FieldLabel::F2, None).unwrap()).unwrap();
            let q = weighted_length_bound(&presentation(g, &FieldLabel::Q, None).unwrap()).unwrap();
            assert!(f2.value >= q.value, "{g}");
            let (field, best) = best_ct_bound(g, None).unwrap();
            assert_eq!(field, FieldLabel::F2);
            assert_eq!(best.value, f2.value);
        }
    }

    #[test]
    fn catalog_bounds_exceed_simplex_count() {
        for (g, f, n) in all_instances() {
            let p = presentation(g, &f, n).unwrap();
            let d = p.formal_dimension();
            let ct = weighted_length_bound(&p).unwrap();
            assert!(ct.value >= BigInt::from(d + 2), "{g} {f} {n:?}");
        }
    }

    #[test]
    fn listing() {
        let lines: Vec<String> = list_entries().iter().map(ToString::to_string).collect();
        assert!(lines.iter().any(|l| l == "G2 [F2,F3,F5,Q]"));
        assert!(lines
            .iter()
            .any(|l| l.starts_with("SO_mod2 (parametric n)")));
        assert_eq!(list_entries().iter().filter(|e| !e.parametric).count(), 5);
        assert_eq!(
            lines,
            list_entries()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
    }
}
