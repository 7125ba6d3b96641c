//! Command dispatch for the `lieface` binary.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lieface::catalog::{self, EXCEPTIONAL};
use lieface::covering::{classical_ct_bound, kahler_ct_bound, ClassicalFamily};
use lieface::faces::{classical_facet_bound, kahler_facet_bound, FacetFamily};
use lieface::{
    face_bound_vector, rank_dim_bound, rational_type_bound, weighted_length_bound, BigInt, CtBound,
    FaceBoundVector, FieldLabel, GradedPresentation, RationalType,
};

use crate::algebra_file::{parse_algebra_file, AlgebraFileError};
use crate::check::{check_against_embedded, exceptional_vector};
use crate::render::{render_comparison, render_table, significant_figures, Column, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lieface",
    version,
    about = "Lower bounds on face numbers of triangulated Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Browse the built-in groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Poincaré polynomial of a catalog presentation.
    Poincare(GroupArgs),
    /// Lower bound for the covering type.
    Ct {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Method::Weighted)]
        method: Method,
    },
    /// Lower bounds for the face numbers f_0, ..., f_d.
    Faces {
        #[command(flatten)]
        source: MultiSourceArgs,
        /// Print only f_i.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Override the vertex bound f_0.
        #[arg(long)]
        f0: Option<BigInt>,
    },
    /// Lower bound for the total number of simplices.
    Total(GroupArgs),
    /// Closed-form bounds for the classical families.
    Classical {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Facet bound instead of the covering-type bound.
        #[arg(long)]
        facets: bool,
    },
    /// Summary of the reproduced tables.
    Report {
        /// Compare against the embedded published values.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
}

#[derive(Debug, Args)]
struct GroupArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    field: String,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "input")]
struct SourceSelect {
    #[arg(long, requires = "field")]
    group: Option<String>,
    /// Algebra file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SourceArgs {
    #[command(flatten)]
    select: SourceSelect,
    #[arg(long, conflicts_with = "file")]
    field: Option<String>,
    #[arg(long, conflicts_with = "file")]
    n: Option<usize>,
}

#[derive(Debug, Args)]
struct MultiSourceArgs {
    #[command(flatten)]
    select: SourceSelect,
    /// One field, or several separated by commas for a comparison table.
    #[arg(long, value_delimiter = ',', conflicts_with = "file")]
    field: Vec<String>,
    #[arg(long, conflicts_with = "file")]
    n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Weighted,
    Rational,
    Rankdim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "Torus", alias = "torus")]
    Torus,
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "SU", alias = "su")]
    Su,
    #[value(name = "Sp", alias = "sp")]
    Sp,
    /// SO(n) with n the matrix size.
    #[value(name = "SO", alias = "so")]
    So,
    /// SO(2n+1).
    #[value(name = "SO_odd", alias = "so_odd")]
    SoOdd,
    /// SO(2n).
    #[value(name = "SO_even", alias = "so_even")]
    SoEven,
    #[value(name = "Kahler", alias = "kahler")]
    Kahler,
}

#[derive(Debug, thiserror::Error)]
enum AppError {
    #[error(transparent)]
    Core(#[from] lieface::Error),
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Algebra {
        path: String,
        source: AlgebraFileError,
    },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Output(#[from] std::io::Error),
}

type AppResult<T> = std::result::Result<T, AppError>;

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(AppError::Output(e)) => {
            let _ = writeln!(err, "error: writing output: {e}");
            EXIT_VALIDATION
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VALIDATION
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> AppResult<i32> {
    match command {
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for entry in catalog::list_entries() {
                writeln!(out, "{entry}")?;
            }
        }
        Command::Poincare(g) => {
            let pres = group_presentation(&g.group, &g.field, g.n)?;
            writeln!(out, "{}", pres.poincare_polynomial().poly())?;
        }
        Command::Ct { source, method } => {
            let bound = ct(&source, method)?;
            writeln!(out, "{}", bound.value)?;
        }
        Command::Faces {
            source,
            i,
            format,
            f0,
        } => faces(&source, i, format, f0, out)?,
        Command::Total(g) => {
            let pres = group_presentation(&g.group, &g.field, g.n)?;
            let (_, f0) = catalog::best_ct_bound(&g.group, g.n)?;
            writeln!(out, "{}", vector_for(&pres, &f0.value)?.total())?;
        }
        Command::Classical { family, n, facets } => classical(family, n, facets, out)?,
        Command::Report { check } => return report(check, out),
    }
    Ok(EXIT_OK)
}

fn group_presentation(group: &str, field: &str, n: Option<usize>) -> AppResult<GradedPresentation> {
    Ok(catalog::presentation(group, &FieldLabel::parse(field), n)?)
}

fn read_file(path: &PathBuf) -> AppResult<GradedPresentation> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| AppError::File {
        path: shown.clone(),
        source,
    })?;
    parse_algebra_file(&text).map_err(|source| AppError::Algebra {
        path: shown,
        source,
    })
}

/// Rational type of an exterior algebra on odd generators.
fn rational_type_of(pres: &GradedPresentation) -> AppResult<RationalType> {
    if pres.generators.iter().any(|g| g.height != 1) {
        return Err(AppError::Invalid(format!(
            "{}: rational methods need an exterior algebra (all heights 1)",
            pres.name
        )));
    }
    let degrees: Vec<usize> = pres.generators.iter().map(|g| g.degree).collect();
    Ok(RationalType::from_degrees(&degrees)?)
}

fn ct(source: &SourceArgs, method: Method) -> AppResult<CtBound> {
    if let Some(path) = &source.select.file {
        let pres = read_file(path)?;
        return Ok(match method {
            Method::Weighted => weighted_length_bound(&pres)?,
            Method::Rational => rational_type_bound(&rational_type_of(&pres)?),
            Method::Rankdim => {
                let rt = rational_type_of(&pres)?;
                rank_dim_bound(rt.dimension(), rt.rank())?
            }
        });
    }
    let group = source
        .select
        .group
        .as_deref()
        .expect("clap enforces group or file");
    let field = source
        .field
        .as_deref()
        .expect("clap enforces field with group");
    let pres = group_presentation(group, field, source.n)?;
    Ok(match method {
        Method::Weighted => weighted_length_bound(&pres)?,
        Method::Rational => {
            rational_type_bound(&catalog::group_data(group, source.n)?.rational_type)
        }
        Method::Rankdim => {
            let data = catalog::group_data(group, source.n)?;
            rank_dim_bound(data.dim, data.rank)?
        }
    })
}

fn vector_for(pres: &GradedPresentation, f0: &BigInt) -> AppResult<FaceBoundVector> {
    let betti = pres.poincare_polynomial().betti_vector();
    Ok(face_bound_vector(pres.formal_dimension(), f0, &betti)?)
}

fn faces(
    source: &MultiSourceArgs,
    i: Option<usize>,
    format: Format,
    f0: Option<BigInt>,
    out: &mut dyn Write,
) -> AppResult<()> {
    let columns: Vec<Column> = if let Some(path) = &source.select.file {
        let pres = read_file(path)?;
        let f0 = match f0 {
            Some(v) => v,
            None => weighted_length_bound(&pres)?.value,
        };
        vec![Column {
            label: pres.field.to_string(),
            vector: vector_for(&pres, &f0)?,
        }]
    } else {
        let group = source
            .select
            .group
            .as_deref()
            .expect("clap enforces group or file");
        let f0 = match f0 {
            Some(v) => v,
            None => catalog::best_ct_bound(group, source.n)?.1.value,
        };
        source
            .field
            .iter()
            .map(|field| {
                let pres = group_presentation(group, field, source.n)?;
                Ok(Column {
                    label: pres.field.to_string(),
                    vector: vector_for(&pres, &f0)?,
                })
            })
            .collect::<AppResult<_>>()?
    };

    if let Some(i) = i {
        let d = columns[0].vector.d;
        if i > d {
            return Err(lieface::Error::IndexError { i, d }.into());
        }
        if let [only] = columns.as_slice() {
            writeln!(out, "{}", only.vector.bounds[i])?;
        } else {
            for c in &columns {
                writeln!(out, "{} {}", c.label, c.vector.bounds[i])?;
            }
        }
        return Ok(());
    }
    let text = match columns.as_slice() {
        [only] => render_table(&only.vector, format),
        many => render_comparison(many, format),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn facet_family(family: Family) -> Option<FacetFamily> {
    match family {
        Family::U => Some(FacetFamily::U),
        Family::Su => Some(FacetFamily::SU),
        Family::Sp => Some(FacetFamily::Sp),
        Family::SoOdd => Some(FacetFamily::SoOdd),
        Family::SoEven => Some(FacetFamily::SoEven),
        Family::Torus | Family::So | Family::Kahler => None,
    }
}

fn classical(family: Family, n: usize, facets: bool, out: &mut dyn Write) -> AppResult<()> {
    if facets {
        let cmp = match (family, facet_family(family)) {
            (Family::Kahler, _) => kahler_facet_bound(n)?,
            (_, Some(f)) => classical_facet_bound(f, n)?,
            _ => {
                return Err(AppError::Invalid(
                    "facet bounds are available for U, SU, Sp, SO_odd, SO_even and Kahler".into(),
                ))
            }
        };
        writeln!(out, "derived {}", cmp.derived)?;
        writeln!(out, "closed-form {}", cmp.closed_form)?;
        writeln!(out, "agree {}", cmp.agree)?;
        return Ok(());
    }
    let bound = match family {
        Family::Torus => classical_ct_bound(ClassicalFamily::Torus, n)?,
        Family::U => classical_ct_bound(ClassicalFamily::U, n)?,
        Family::Su => classical_ct_bound(ClassicalFamily::SU, n)?,
        Family::Sp => classical_ct_bound(ClassicalFamily::Sp, n)?,
        Family::So => classical_ct_bound(ClassicalFamily::SO, n)?,
        Family::SoOdd => classical_ct_bound(ClassicalFamily::SO, 2 * n + 1)?,
        Family::SoEven => classical_ct_bound(ClassicalFamily::SO, 2 * n)?,
        Family::Kahler => kahler_ct_bound(n)?,
    };
    if bound.nonintegral {
        writeln!(out, "{} (rounded up)", bound.value)?;
    } else {
        writeln!(out, "{}", bound.value)?;
    }
    Ok(())
}

fn report(check: bool, out: &mut dyn Write) -> AppResult<i32> {
    if check {
        let ledger = check_against_embedded();
        writeln!(out, "{ledger}")?;
        return Ok(if ledger.is_clean() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        });
    }
    writeln!(out, "group  ct  field  d  f_d  total")?;
    for group in EXCEPTIONAL {
        let (best, ct) = catalog::best_ct_bound(group, None)?;
        let rec = catalog::record(group)?;
        for field in rec.fields.iter().map(|f| f.label()) {
            let v = exceptional_vector(group, &field)?;
            writeln!(
                out,
                "{group}  {}{}  {field}  {}  {}  {}",
                ct.value,
                if best == field { "*" } else { "" },
                v.d,
                significant_figures(&v.bounds[v.d], 6),
                significant_figures(&v.total(), 6)
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("lieface").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["ct"]).0, EXIT_USAGE);
        assert_eq!(call(&["ct", "--group", "G2"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["faces", "--group", "G2", "--field", "F2", "--format", "xml"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["ct", "--group", "G2", "--field", "F2", "--file", "x"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn validation_errors_exit_two() {
        let (code, out, err) = call(&["ct", "--group", "G9", "--field", "F2"]);
        assert_eq!(code, EXIT_VALIDATION);
        assert!(out.is_empty());
        assert!(err.contains("G9"), "{err}");
        assert_eq!(
            call(&["ct", "--group", "G2", "--field", "F7"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            call(&["ct", "--group", "U", "--field", "Q"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            call(&["faces", "--group", "G2", "--field", "F2", "--i", "15"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            call(&["classical", "--family", "Torus", "--n", "3", "--facets"]).0,
            EXIT_VALIDATION
        );
    }

    #[test]
    fn ct_methods() {
        assert_eq!(call(&["ct", "--group", "G2", "--field", "Q"]).1, "29\n");
        assert_eq!(
            call(&["ct", "--group", "G2", "--field", "Q", "--method", "rational"]).1,
            "28\n"
        );
        assert_eq!(
            call(&["ct", "--group", "G2", "--field", "Q", "--method", "rankdim"]).1,
            "24\n"
        );
        assert_eq!(
            call(&["ct", "--group", "U", "--field", "Q", "--n", "2"]).1,
            "11\n"
        );
    }

    #[test]
    fn classical_outputs() {
        assert_eq!(
            call(&["classical", "--family", "Sp", "--n", "1"]).1,
            "8 (rounded up)\n"
        );
        assert_eq!(call(&["classical", "--family", "U", "--n", "2"]).1, "11\n");
        let (code, out, _) = call(&["classical", "--family", "SU", "--n", "3", "--facets"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "derived 69\nclosed-form 143/2\nagree false\n");
    }

    #[test]
    fn comparison_header_and_marks() {
        let (_, out, _) = call(&[
            "faces", "--group", "G2", "--field", "F2,F3", "--format", "csv",
        ]);
        assert!(out.starts_with("i,F2,F3\n0,44,44\n"), "{out}");
        let (_, out, _) = call(&["faces", "--group", "G2", "--field", "F2,Q", "--i", "14"]);
        assert_eq!(out, "F2 36808\nQ 4776\n");
    }
}
