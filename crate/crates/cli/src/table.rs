use std::io::Write;
use std::process::ExitCode;

use num_traits::Signed;
use serde_json::json;

use spivey_core::format::{
    lambda_poly_csv, lambda_poly_json, lambda_poly_text, xpoly_csv, xpoly_json, xpoly_text,
};
use spivey_core::special::{PolyFamily, PolyKind};
use spivey_core::triangles::{Family, TableCache};
use spivey_core::{Rational, XPoly};

use crate::args::{TableArgs, TableFamily, TableFormat};
use crate::output::{lambda_arg, rational_arg, subst_lp, subst_xp, writer};
use crate::CliError;

fn require_m(args: &TableArgs) -> Result<u32, CliError> {
    match args.m {
        Some(0) => Err(CliError::Usage("--m must be positive".into())),
        Some(m) => Ok(m),
        None => Err(CliError::Usage(format!(
            "--m is required for family {:?}",
            args.family
        ))),
    }
}

fn require_r(args: &TableArgs) -> Result<Rational, CliError> {
    let text = args
        .r
        .as_deref()
        .ok_or_else(|| CliError::Usage("--r is required for r-families".into()))?;
    let r = rational_arg("r", text)?;
    if r.is_negative() {
        return Err(CliError::Usage("--r must be nonnegative".into()));
    }
    Ok(r)
}

enum Source {
    Triangle(Family),
    Polynomials(PolyKind),
}

fn source(args: &TableArgs) -> Result<Source, CliError> {
    Ok(match args.family {
        TableFamily::Stirling2Deg => Source::Triangle(Family::Stirling2Deg),
        TableFamily::Stirling1Deg => Source::Triangle(Family::Stirling1Deg),
        TableFamily::Whitney => Source::Triangle(Family::WhitneyDeg(require_m(args)?)),
        TableFamily::RWhitney => {
            Source::Triangle(Family::RWhitneyDeg(require_m(args)?, require_r(args)?))
        }
        TableFamily::Bell => Source::Polynomials(PolyKind::BellDeg),
        TableFamily::Dowling => Source::Polynomials(PolyKind::DowlingDeg(require_m(args)?)),
        TableFamily::RDowling => {
            Source::Polynomials(PolyKind::RDowlingDeg(require_m(args)?, require_r(args)?))
        }
    })
}

pub fn run(args: &TableArgs) -> Result<ExitCode, CliError> {
    let source = source(args)?;
    let lambda = lambda_arg(args.lambda.as_deref())?;
    let lambda = lambda.as_ref();
    let mut out = writer(args.output.as_deref())?;
    let n_max = args.n_max as usize;

    match source {
        Source::Triangle(family) => {
            let cache = TableCache::new();
            let table = cache.table(&family);
            if args.format == TableFormat::Csv {
                writeln!(out, "n,k,coeff")?;
            }
            for n in 0..=n_max {
                let row = table.row(n);
                for (k, c) in row.iter().enumerate() {
                    let c = subst_lp(c, lambda);
                    match args.format {
                        TableFormat::Csv => writeln!(out, "{n},{k},{}", lambda_poly_csv(&c))?,
                        TableFormat::Json => writeln!(
                            out,
                            "{}",
                            json!({ "n": n, "k": k, "coeff": lambda_poly_json(&c) })
                        )?,
                        TableFormat::Text => {
                            writeln!(out, "n={n} k={k}: {}", lambda_poly_text(&c))?
                        }
                    }
                }
            }
        }
        Source::Polynomials(kind) => {
            let family = PolyFamily::new(kind);
            if args.format == TableFormat::Csv {
                writeln!(out, "n,poly")?;
            }
            for n in 0..=n_max {
                let p: XPoly = subst_xp(&family.get(n), lambda);
                match args.format {
                    TableFormat::Csv => writeln!(out, "{n},{}", xpoly_csv(&p))?,
                    TableFormat::Json => {
                        writeln!(out, "{}", json!({ "n": n, "poly": xpoly_json(&p) }))?
                    }
                    TableFormat::Text => writeln!(out, "n={n}: {}", xpoly_text(&p))?,
                }
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
