//! Plain-text algebra presentations.
//!
//! ```text
//! # G2 mod 2
//! name G2m2
//! field F2
//! gen degree=3 height=3
//! gen degree=5 height=1
//! ```
//!
//! `name` comes first and exactly once, `field` at most once (default
//! `custom`), then any number of `gen` lines. `#` starts a comment.

use lieface::{FieldLabel, Generator, GradedPresentation};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraFileError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: duplicate `{key}`")]
    DuplicateKey {
        line: usize,
        column: usize,
        key: String,
    },
    #[error("line {line}: {source}")]
    InvalidGenerator {
        line: usize,
        #[source]
        source: lieface::Error,
    },
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> AlgebraFileError {
    AlgebraFileError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

fn parse_uint(text: &str, line: usize, column: usize) -> Result<usize, AlgebraFileError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(
            line,
            column,
            format!("expected an unsigned decimal integer, found `{text}`"),
        ));
    }
    text.parse()
        .map_err(|_| parse_err(line, column, format!("integer `{text}` is too large")))
}

fn parse_gen(
    args: &[(usize, &str)],
    line: usize,
    keyword_col: usize,
) -> Result<Generator, AlgebraFileError> {
    let mut degree = None;
    let mut height = None;
    for &(col, tok) in args {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(line, col, format!("expected key=value, found `{tok}`")))?;
        let slot = match key {
            "degree" => &mut degree,
            "height" => &mut height,
            other => {
                return Err(parse_err(
                    line,
                    col,
                    format!("unknown generator key `{other}`"),
                ))
            }
        };
        if slot.is_some() {
            return Err(AlgebraFileError::DuplicateKey {
                line,
                column: col,
                key: key.to_string(),
            });
        }
        *slot = Some(parse_uint(value, line, col + key.len() + 1)?);
    }
    match (degree, height) {
        (Some(d), Some(h)) => Ok(Generator::new(d, h)),
        (None, _) => Err(parse_err(line, keyword_col, "`gen` is missing degree=")),
        (_, None) => Err(parse_err(line, keyword_col, "`gen` is missing height=")),
    }
}

/// Parses and validates an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<GradedPresentation, AlgebraFileError> {
    let mut name: Option<String> = None;
    let mut field: Option<FieldLabel> = None;
    let mut gens: Vec<(usize, Generator)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let args = &toks[1..];
        match keyword {
            "name" => {
                if name.is_some() {
                    return Err(AlgebraFileError::DuplicateKey {
                        line: line_no,
                        column: col,
                        key: "name".into(),
                    });
                }
                if args.is_empty() {
                    return Err(parse_err(line_no, col, "`name` needs a value"));
                }
                let start = args[0].0;
                let value: String = content.chars().skip(start - 1).collect();
                name = Some(value.trim_end().to_string());
            }
            "field" => {
                if name.is_none() {
                    return Err(parse_err(line_no, col, "`name` must come before `field`"));
                }
                if field.is_some() {
                    return Err(AlgebraFileError::DuplicateKey {
                        line: line_no,
                        column: col,
                        key: "field".into(),
                    });
                }
                if !gens.is_empty() {
                    return Err(parse_err(
                        line_no,
                        col,
                        "`field` must come before `gen` lines",
                    ));
                }
                match args {
                    [(_, label)] => field = Some(FieldLabel::parse(label)),
                    [] => return Err(parse_err(line_no, col, "`field` needs a label")),
                    [_, (extra, _), ..] => {
                        return Err(parse_err(line_no, *extra, "`field` takes a single label"))
                    }
                }
            }
            "gen" => {
                if name.is_none() {
                    return Err(parse_err(line_no, col, "`name` must come before `gen`"));
                }
                gens.push((line_no, parse_gen(args, line_no, col)?));
            }
            other => {
                return Err(parse_err(
                    line_no,
                    col,
                    format!("unknown keyword `{other}`"),
                ));
            }
        }
    }

    let name = name.ok_or_else(|| parse_err(1, 1, "missing `name` line"))?;
    let field = field.unwrap_or_else(|| FieldLabel::Custom("custom".into()));
    let lines: Vec<usize> = gens.iter().map(|(l, _)| *l).collect();
    let generators = gens.into_iter().map(|(_, g)| g).collect();
    GradedPresentation::validated(name, field, generators).map_err(|e| {
        let line = match &e {
            lieface::Error::InvalidGenerator { index, .. } => lines[*index],
            _ => 1,
        };
        AlgebraFileError::InvalidGenerator { line, source: e }
    })
}

/// Inverse of [`parse_algebra_file`] on normalized presentations.
pub fn render_algebra_file(pres: &GradedPresentation) -> String {
    let mut out = format!("name {}\nfield {}\n", pres.name, pres.field);
    for g in &pres.generators {
        out.push_str(&format!("gen degree={} height={}\n", g.degree, g.height));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn g2_mod2() {
        let p =
            parse_algebra_file("name G2m2\nfield F2\ngen degree=3 height=3\ngen degree=5 height=1")
                .unwrap();
        assert_eq!(p.name, "G2m2");
        assert_eq!(p.field, FieldLabel::F2);
        assert_eq!(
            p.generators,
            vec![Generator::new(3, 3), Generator::new(5, 1)]
        );
    }

    #[test]
    fn point_and_defaults() {
        let p = parse_algebra_file("name P\n").unwrap();
        assert!(p.generators.is_empty());
        assert_eq!(p.formal_dimension(), 0);
        assert_eq!(p.field, FieldLabel::Custom("custom".into()));
    }

    #[test]
    fn comments_blank_lines_and_spacing() {
        let text = "# header\n\n  name   my algebra  # trailing\n\tgen height=1   degree=7\n";
        let p = parse_algebra_file(text).unwrap();
        assert_eq!(p.name, "my algebra");
        assert_eq!(p.generators, vec![Generator::new(7, 1)]);
    }

    #[test]
    fn missing_name_is_line_one() {
        let err = parse_algebra_file("gen degree=3").unwrap_err();
        assert!(
            matches!(
                err,
                AlgebraFileError::Parse {
                    line: 1,
                    column: 1,
                    ..
                }
            ),
            "{err}"
        );
        assert!(matches!(
            parse_algebra_file("").unwrap_err(),
            AlgebraFileError::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn diagnostics_carry_positions() {
        let err = parse_algebra_file("name X\ngen degree=-3 height=1").unwrap_err();
        assert_eq!(
            err,
            AlgebraFileError::Parse {
                line: 2,
                column: 12,
                message: "expected an unsigned decimal integer, found `-3`".into()
            }
        );
        let err = parse_algebra_file("name X\nfield F2\nfield F3").unwrap_err();
        assert!(matches!(
            err,
            AlgebraFileError::DuplicateKey { line: 3, .. }
        ));
        let err = parse_algebra_file("name X\nname Y").unwrap_err();
        assert!(matches!(
            err,
            AlgebraFileError::DuplicateKey { line: 2, .. }
        ));
        let err = parse_algebra_file("name X\ngen degree=3 degree=4 height=1").unwrap_err();
        assert!(matches!(
            err,
            AlgebraFileError::DuplicateKey {
                line: 2,
                column: 14,
                ..
            }
        ));
        let err = parse_algebra_file("name X\ngen degree=3\n").unwrap_err();
        assert!(matches!(err, AlgebraFileError::Parse { line: 2, .. }));
        let err = parse_algebra_file("name X\ngen degree=3 height=1\nfield F2").unwrap_err();
        assert!(matches!(err, AlgebraFileError::Parse { line: 3, .. }));
        let err = parse_algebra_file("name X\nrelation x^4").unwrap_err();
        assert!(matches!(
            err,
            AlgebraFileError::Parse {
                line: 2,
                column: 1,
                ..
            }
        ));
        let err = parse_algebra_file("Name X").unwrap_err();
        assert!(matches!(err, AlgebraFileError::Parse { line: 1, .. }));
    }

    #[test]
    fn invalid_generator_points_at_its_line() {
        let err = parse_algebra_file("name X\ngen degree=3 height=1\n\ngen degree=0 height=1")
            .unwrap_err();
        match err {
            AlgebraFileError::InvalidGenerator { line, source } => {
                assert_eq!(line, 4);
                assert!(matches!(
                    source,
                    lieface::Error::InvalidGenerator { index: 1, .. }
                ));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    fn presentation_strategy() -> impl Strategy<Value = GradedPresentation> {
        (
            "[A-Za-z][A-Za-z0-9_ ()]{0,12}[A-Za-z0-9)]",
            prop_oneof![
                Just(FieldLabel::F2),
                Just(FieldLabel::F3),
                Just(FieldLabel::F5),
                Just(FieldLabel::Q),
                "[a-z][a-z0-9]{0,6}".prop_map(FieldLabel::Custom),
            ],
            prop::collection::vec((1usize..100, 1usize..20), 0..8),
        )
            .prop_map(|(name, field, gens)| {
                GradedPresentation::validated(
                    name,
                    field,
                    gens.into_iter()
                        .map(|(d, h)| Generator::new(d, h))
                        .collect(),
                )
                .unwrap()
            })
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(p in presentation_strategy()) {
            let parsed = parse_algebra_file(&render_algebra_file(&p)).unwrap();
            prop_assert_eq!(FieldLabel::parse(parsed.field.as_str()), parsed.field.clone());
            prop_assert_eq!(parsed, p);
        }
    }
}
