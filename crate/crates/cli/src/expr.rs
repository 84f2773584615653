use std::io::{self, Write};
use std::process::ExitCode;

use serde_json::{json, Value};

use spivey_core::diffrep::{apply, vacuum_coherent};
use spivey_core::format::{lambda_poly_json, lambda_poly_text};
use spivey_core::parser::{eval_str, format_nf, Style};
use spivey_core::{NormalForm, Rational};

use crate::args::{ApplyArgs, ExprFormat, NormalOrderArgs};
use crate::output::{lambda_arg, subst_lp};
use crate::CliError;

fn evaluate(expr: &str, lambda: Option<&Rational>) -> Result<NormalForm, CliError> {
    let nf = eval_str(expr).map_err(|e| CliError::Usage(format!("parse error: {e}")))?;
    Ok(nf.map_coeffs(|c| subst_lp(c, lambda)))
}

fn style(format: ExprFormat) -> Style {
    match format {
        ExprFormat::Text => Style::Text,
        ExprFormat::Json => Style::Json,
    }
}

pub fn run_normal_order(args: &NormalOrderArgs) -> Result<ExitCode, CliError> {
    let lambda = lambda_arg(args.lambda.as_deref())?;
    let nf = evaluate(&args.expr, lambda.as_ref())?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", format_nf(&nf, style(args.format)))?;
    Ok(ExitCode::SUCCESS)
}

pub fn run_apply(args: &ApplyArgs) -> Result<ExitCode, CliError> {
    let lambda = lambda_arg(args.lambda.as_deref())?;
    let nf = evaluate(&args.expr, lambda.as_ref())?;
    let series = apply(&nf, &vacuum_coherent(args.degree as usize));
    let valid = series.valid_up_to();
    let mut out = io::stdout().lock();
    match args.format {
        ExprFormat::Json => {
            let coeffs: Vec<Value> = series.coeffs().iter().map(lambda_poly_json).collect();
            let doc = json!({
                "degree_bound": series.degree_bound(),
                "valid_up_to": valid,
                "coeffs": coeffs,
            });
            writeln!(out, "{doc}")?;
        }
        ExprFormat::Text => {
            match valid {
                Some(v) => writeln!(
                    out,
                    "# degree bound {}, exact up to x^{v}",
                    series.degree_bound()
                )?,
                None => writeln!(
                    out,
                    "# degree bound {}, no exact coefficients",
                    series.degree_bound()
                )?,
            }
            for (d, c) in series.coeffs().iter().enumerate() {
                let marker = if valid.is_some_and(|v| d <= v) {
                    ""
                } else {
                    "  (truncated)"
                };
                writeln!(out, "x^{d}: {}{marker}", lambda_poly_text(c))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
