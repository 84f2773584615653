use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use spivey_core::diffrep::{check_dowling_fock, check_theorem22, check_theorem22b};
use spivey_core::scalar::format_rational;
use spivey_core::spivey::{
    spivey_classical, spivey_degenerate_bell, spivey_degenerate_dowling,
    spivey_degenerate_r_dowling,
};
use spivey_core::weyl::{check_eq10, check_eq34_35, check_theorem23, check_theorem24};
use spivey_core::{int, Rational};

use crate::args::{IdentitySelector, VerifyArgs};
use crate::output::{rational_arg, writer};
use crate::CliError;

impl IdentitySelector {
    fn name(self) -> &'static str {
        match self {
            IdentitySelector::SpiveyClassical => "spivey-classical",
            IdentitySelector::SpiveyDegBell => "spivey-deg-bell",
            IdentitySelector::SpiveyDegDowling => "spivey-deg-dowling",
            IdentitySelector::SpiveyDegRDowling => "spivey-deg-r-dowling",
            IdentitySelector::Eq10 => "eq10",
            IdentitySelector::Eq34 => "eq34",
            IdentitySelector::Eq35 => "eq35",
            IdentitySelector::Thm22 => "thm22",
            IdentitySelector::Thm22b => "thm22b",
            IdentitySelector::Thm23 => "thm23",
            IdentitySelector::Thm24 => "thm24",
            IdentitySelector::FockDowling => "fock-dowling",
        }
    }
}

/// One grid point: parameter name to value.
type Point = BTreeMap<&'static str, Rational>;

type Axes = Vec<(&'static str, Vec<Rational>)>;

/// Result of checking one grid point.
pub struct Outcome {
    pub json: Value,
    pub pass: bool,
}

fn axis(
    name: &str,
    exact: Option<u32>,
    max: Option<u32>,
    min: u32,
) -> Result<Vec<Rational>, CliError> {
    let values: Vec<u32> = match (exact, max) {
        (Some(v), _) => vec![v],
        (None, Some(hi)) => (min..=hi).collect(),
        (None, None) => vec![min],
    };
    if values.is_empty() || values[0] < min {
        return Err(CliError::Usage(format!("--{name} must be at least {min}")));
    }
    Ok(values.into_iter().map(|v| int(v as i64)).collect())
}

fn r_axis(text: Option<&str>) -> Result<Option<Vec<Rational>>, CliError> {
    let Some(text) = text else { return Ok(None) };
    let mut values = Vec::new();
    for part in text.split(',') {
        let r = rational_arg("r", part)?;
        if r.is_negative() {
            return Err(CliError::Usage(format!("--r value {part} is negative")));
        }
        values.push(r);
    }
    Ok(Some(values))
}

fn cartesian(axes: Axes) -> Vec<Point> {
    let mut points = vec![Point::new()];
    for (name, values) in axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.insert(name, v.clone());
                    q
                })
            })
            .collect();
    }
    points
}

fn get(p: &Point, name: &str) -> usize {
    p[name]
        .to_usize()
        .expect("grid values are small nonnegative integers")
}

/// Grid for the selected identity, in nested order of its parameters.
pub fn grid(args: &VerifyArgs) -> Result<Vec<Point>, CliError> {
    use IdentitySelector as I;
    let n = || axis("n", args.n, args.n_max, 0);
    let l = || axis("l", args.l, args.l_max, 0);
    let k = || axis("k", args.k, args.k_max, 0);
    let index_m = || axis("m", args.m, args.m_max, 0);
    let family_m = || axis("m", args.m, args.m_max, 1);
    let r = r_axis(args.r.as_deref())?;
    let r_or_one = || r.clone().unwrap_or_else(|| vec![int(1)]);

    let (axes, pair): (Axes, Option<(&str, &str)>) = match args.identity {
        I::SpiveyClassical | I::SpiveyDegBell => {
            (vec![("n", n()?), ("m", index_m()?)], Some(("n", "m")))
        }
        I::SpiveyDegDowling => (
            vec![("m", family_m()?), ("n", n()?), ("l", l()?)],
            Some(("n", "l")),
        ),
        I::SpiveyDegRDowling => (
            vec![
                ("m", family_m()?),
                ("r", r_or_one()),
                ("n", n()?),
                ("l", l()?),
            ],
            Some(("n", "l")),
        ),
        I::Eq10 => (vec![("n", n()?)], None),
        I::Eq34 => (vec![("m", family_m()?), ("n", n()?)], None),
        I::Eq35 => (
            vec![("m", family_m()?), ("r", r_or_one()), ("n", n()?)],
            None,
        ),
        I::Thm22 => (vec![("k", k()?)], None),
        I::Thm22b => (vec![("n", n()?)], None),
        I::Thm23 => (vec![("m", index_m()?), ("n", n()?), ("k", k()?)], None),
        I::Thm24 => (vec![("n", n()?), ("m", index_m()?)], Some(("n", "m"))),
        I::FockDowling => {
            let mut axes = vec![("m", family_m()?)];
            if let Some(r) = r.clone() {
                axes.push(("r", r));
            }
            axes.push(("l", l()?));
            (axes, None)
        }
    };

    let mut points = cartesian(axes);
    if let (Some(total), Some((a, b))) = (args.total_max, pair) {
        points.retain(|p| get(p, a) + get(p, b) <= total as usize);
    }

    // Representation checks carry their series degree bound as parameter N.
    let target = match args.identity {
        I::Thm22 => Some("k"),
        I::Thm22b => Some("n"),
        I::FockDowling => Some("l"),
        _ => None,
    };
    if let Some(target) = target {
        for p in &mut points {
            let idx = get(p, target);
            let bound = args.degree.map_or(idx + 4, |d| d as usize);
            if bound < idx {
                return Err(CliError::Usage(format!(
                    "--degree {bound} is smaller than {target} = {idx}"
                )));
            }
            p.insert("N", int(bound as i64));
        }
    }
    Ok(points)
}

fn params_json(p: &Point) -> Value {
    let map: Map<String, Value> = p
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(format_rational(v))))
        .collect();
    Value::Object(map)
}

/// Check one point.
pub fn evaluate(identity: IdentitySelector, p: &Point) -> Outcome {
    use IdentitySelector as I;
    let m32 = || get(p, "m") as u32;
    let cert = match identity {
        I::SpiveyClassical => Some(spivey_classical(get(p, "n"), get(p, "m"))),
        I::SpiveyDegBell => Some(spivey_degenerate_bell(get(p, "n"), get(p, "m"))),
        I::SpiveyDegDowling => Some(spivey_degenerate_dowling(m32(), get(p, "n"), get(p, "l"))),
        I::SpiveyDegRDowling => Some(spivey_degenerate_r_dowling(
            m32(),
            &p["r"],
            get(p, "n"),
            get(p, "l"),
        )),
        _ => None,
    };
    if let Some(cert) = cert {
        return Outcome {
            pass: cert.all_pass(),
            json: cert.to_json(),
        };
    }
    let pass = match identity {
        I::Eq10 => check_eq10(get(p, "n")),
        I::Eq34 => check_eq34_35(m32(), get(p, "n"), None),
        I::Eq35 => check_eq34_35(m32(), get(p, "n"), p.get("r")),
        I::Thm22 => check_theorem22(get(p, "k") as u32, get(p, "N")),
        I::Thm22b => check_theorem22b(get(p, "n"), get(p, "N")),
        I::Thm23 => check_theorem23(get(p, "m"), get(p, "n"), get(p, "k") as u32),
        I::Thm24 => check_theorem24(get(p, "n"), get(p, "m")),
        I::FockDowling => check_dowling_fock(m32(), get(p, "l"), get(p, "N"), p.get("r")),
        _ => unreachable!("certificate identities handled above"),
    };
    Outcome {
        json: json!({
            "identity": identity.name(),
            "params": params_json(p),
            "pass": pass,
        }),
        pass,
    }
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let points = grid(args)?;
    let outcomes: Vec<Outcome> = points
        .par_iter()
        .map(|p| evaluate(args.identity, p))
        .collect();

    let mut out = writer(args.output.as_deref())?;
    let mut failed = 0usize;
    for (point, outcome) in points.iter().zip(&outcomes) {
        writeln!(out, "{}", outcome.json)?;
        if !outcome.pass {
            failed += 1;
            let params: Vec<String> = point
                .iter()
                .map(|(k, v)| format!("{k}={}", format_rational(v)))
                .collect();
            eprintln!("FAIL {} {}", args.identity.name(), params.join(" "));
        }
    }
    let summary = json!({
        "summary": {
            "identity": args.identity.name(),
            "total": outcomes.len(),
            "passed": outcomes.len() - failed,
            "failed": failed,
        }
    });
    writeln!(out, "{summary}")?;
    out.flush()?;
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
