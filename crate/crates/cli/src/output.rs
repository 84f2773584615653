use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use spivey_core::{parse_rational, LambdaPoly, Rational, SubstLambda, XPoly};

use crate::CliError;

pub fn writer(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn rational_arg(flag: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text)
        .ok_or_else(|| CliError::Usage(format!("--{flag}: {text:?} is not a rational p or p/q")))
}

pub fn lambda_arg(text: Option<&str>) -> Result<Option<Rational>, CliError> {
    text.map(|t| rational_arg("lambda", t)).transpose()
}

pub fn subst_lp(p: &LambdaPoly, value: Option<&Rational>) -> LambdaPoly {
    match value {
        Some(v) => LambdaPoly::constant(p.subst_lambda(v)),
        None => p.clone(),
    }
}

pub fn subst_xp(p: &XPoly, value: Option<&Rational>) -> XPoly {
    match value {
        Some(v) => p.subst_lambda(v),
        None => p.clone(),
    }
}
