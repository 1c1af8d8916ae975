use hankel_core::closedform::{closed_form_at, closed_form_transform, family_formula, Family, SignedMonomial};
use hankel_core::orthopoly::{p_poly, r_table, classify_p_polys, Relation, RelationReport};
use hankel_core::{hankel_transform, reconstruct_cfrac, Error};
use serde_json::{json, Value};

use crate::args::PolyKind;
use crate::error::{CliError, CliResult};
use crate::output::{poly, scalar, scalars};
use crate::source::Resolved;

/// Output of a command; `failure` makes the process exit with status 3 after
/// the value is printed.
pub struct Outcome {
    pub value: Value,
    pub failure: Option<String>,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Self { value, failure: None }
    }
}

pub fn expand(src: &Resolved, order: usize) -> CliResult<Value> {
    Ok(scalars(src.series(order)?.coeffs()))
}

pub fn transform(src: &Resolved, offset: i64, upto: usize) -> CliResult<Value> {
    let order = (2 * upto as i64 + offset).max(0) as usize;
    let s = src.series(order)?;
    Ok(scalars(&hankel_transform(&s, offset, upto)?))
}

fn monomial(d: &SignedMonomial, src: &Resolved) -> CliResult<Value> {
    if src.explicit_numerators {
        Ok(scalar(&d.evaluate(&src.numerators)?))
    } else {
        Ok(Value::String(d.to_string()))
    }
}

pub fn closedform(
    src: &Resolved,
    k: Option<usize>,
    upto: Option<usize>,
    family: Option<&str>,
) -> CliResult<Value> {
    if let Some(name) = family {
        if name == "help" {
            return Ok(json!(Family::NAMES));
        }
        let family = Family::from_name(name, src.m, src.a.clone())?;
        let upto = upto.ok_or_else(|| CliError::Input("--family needs --upto".into()))?;
        let values = (0..=upto)
            .map(|n| family_formula(&family, &src.numerators, n))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(scalars(&values));
    }
    let b = src.bseq()?;
    match (k, upto) {
        (Some(k), _) => monomial(&closed_form_at(b, k)?, src),
        (None, Some(upto)) => closed_form_transform(b, upto)?
            .iter()
            .map(|d| monomial(d, src))
            .collect::<CliResult<Vec<_>>>()
            .map(Value::Array),
        (None, None) => Err(CliError::Input("closedform needs --k, --upto or --family".into())),
    }
}

fn relation_text(r: &RelationReport) -> String {
    match &r.relation {
        Relation::Unit { k, scale } => format!("({scale})*r{k}"),
        Relation::Zero => "0".into(),
        Relation::Boundary { base, sign, factor } => {
            let sign = if *sign < 0 { "-" } else { "" };
            format!("{sign}({factor})*p{base}")
        }
    }
}

pub fn polys(src: &Resolved, kind: PolyKind, k: usize) -> CliResult<Outcome> {
    match kind {
        PolyKind::R => {
            let r = r_table(src.bseq()?, &src.numerators, k)?;
            Ok(Value::Array(r.iter().map(poly).collect()).into())
        }
        PolyKind::P => {
            let s = src.series((2 * k).max(1))?;
            let p = (0..=k).map(|n| p_poly(&s, n)).collect::<Result<Vec<_>, _>>()?;
            Ok(Value::Array(p.iter().map(poly).collect()).into())
        }
        PolyKind::Relations => {
            let reports = classify_p_polys(src.bseq()?, &src.numerators, k)?;
            let failed: Vec<usize> = reports.iter().filter(|r| !r.holds).map(|r| r.m).collect();
            let value = Value::Array(
                reports
                    .iter()
                    .map(|r| {
                        json!({
                            "m": r.m,
                            "relation": relation_text(r),
                            "p": poly(&r.p),
                            "holds": r.holds,
                        })
                    })
                    .collect(),
            );
            let failure = (!failed.is_empty()).then(|| format!("relations fail for m = {failed:?}"));
            Ok(Outcome { value, failure })
        }
    }
}

pub fn reconstruct(src: &Resolved, k: usize) -> CliResult<Outcome> {
    let s = src.series(2 * k + 2)?;
    match reconstruct_cfrac(&s, k) {
        Ok(a) => Ok(scalars(&a).into()),
        Err(Error::ZeroDeterminant { n, offset, partial }) => Ok(Outcome {
            value: json!({
                "numerators": scalars(&partial),
                "zero_determinant": { "n": n, "offset": offset },
            }),
            failure: Some(format!(
                "determinant of order {} at offset {offset} vanishes",
                n + 1
            )),
        }),
        Err(e) => Err(e.into()),
    }
}

