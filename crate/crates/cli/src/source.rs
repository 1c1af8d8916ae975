use hankel_core::{BSeq, Builtin, CFrac, Numerators, PowerSeq, PowerSeries, Scalar, Universe, Var};

use crate::args::Source;
use crate::error::{CliError, CliResult};

/// A C-fraction given by its index sequence or directly by its powers.
#[derive(Clone, Debug)]
pub enum Fraction {
    B(BSeq),
    Powers(PowerSeq),
}

/// A [`Source`] with every field parsed.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub fraction: Option<Fraction>,
    pub numerators: Numerators,
    pub explicit_numerators: bool,
    pub builtin: Option<Builtin>,
    pub series: Option<PowerSeries>,
    pub m: Option<u32>,
    pub a: Option<Scalar>,
}

struct Params {
    universe: Universe,
    values: Vec<(Var, Scalar)>,
}

impl Params {
    fn parse(&self, text: &str) -> CliResult<Scalar> {
        let mut s = Scalar::parse_in(text.trim(), &self.universe)?;
        for (v, value) in &self.values {
            s = s.subs(*v, value);
        }
        Ok(s)
    }
}

fn parse_param(text: Option<&str>, v: Var) -> CliResult<Option<Scalar>> {
    text.map(|t| Ok(Scalar::parse_in(t.trim(), &Universe::default().with(v))?))
        .transpose()
}

pub fn parse_ints(text: &str, what: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| CliError::Input(format!("{what}: cannot read {t:?}: {e}")))
        })
        .collect()
}

/// Accepts the sequence with or without its leading `b_{-1} = -1`.
pub fn bseq_from_values(values: Vec<i64>) -> CliResult<BSeq> {
    let b = if values.first() == Some(&-1) {
        BSeq::new(values)?
    } else {
        BSeq::from_b0(&values)?
    };
    Ok(b)
}

fn parse_powers(text: &str) -> CliResult<PowerSeq> {
    let as_u32 = |part: &str| -> CliResult<Vec<u32>> {
        if part.trim().is_empty() {
            return Ok(Vec::new());
        }
        parse_ints(part, "powers")?
            .into_iter()
            .map(|m| u32::try_from(m).map_err(|_| CliError::Input(format!("power {m} is negative"))))
            .collect()
    };
    let (prefix, cycle) = match text.split_once(';') {
        Some((p, c)) => (as_u32(p)?, as_u32(c)?),
        None => (as_u32(text)?, Vec::new()),
    };
    Ok(PowerSeq::new(prefix, cycle)?)
}

impl Resolved {
    pub fn from_source(src: &Source) -> CliResult<Self> {
        let q = parse_param(src.q.as_deref(), Var::Q)?;
        let u = parse_param(src.u.as_deref(), Var::U)?;
        let a = parse_param(src.a.as_deref(), Var::PARAM)?;
        let mut params = Params {
            universe: Universe::default(),
            values: Vec::new(),
        };
        for (v, value) in [(Var::Q, &q), (Var::U, &u), (Var::PARAM, &a)] {
            if let Some(value) = value {
                params.universe = params.universe.clone().with(v);
                params.values.push((v, value.clone()));
            }
        }

        let fraction = match (&src.b, &src.powers) {
            (Some(b), _) => Some(Fraction::B(bseq_from_values(parse_ints(b, "b")?)?)),
            (None, Some(p)) => Some(Fraction::Powers(parse_powers(p)?)),
            (None, None) => None,
        };
        let numerators = match src.numerators.as_deref().map(str::trim) {
            None => Numerators::Symbolic,
            Some("ones") => Numerators::ones(),
            Some("eisenstein") => Numerators::Eisenstein(q.clone().unwrap_or_else(Scalar::q)),
            Some(list) => Numerators::List(
                list.split(',')
                    .map(|t| params.parse(t))
                    .collect::<CliResult<_>>()?,
            ),
        };
        let builtin = match &src.builtin {
            Some(name) => {
                let param = match name.as_str() {
                    "motzkin-u" => u.clone(),
                    "eisenstein" => q.clone(),
                    _ => a.clone(),
                };
                Some(Builtin::from_name(name, src.m, param)?)
            }
            None => None,
        };
        let series = match &src.series {
            Some(list) => Some(PowerSeries::new(
                list.split(',')
                    .map(|t| params.parse(t))
                    .collect::<CliResult<_>>()?,
            )),
            None => None,
        };
        Ok(Self {
            fraction,
            numerators,
            explicit_numerators: src.numerators.is_some(),
            builtin,
            series,
            m: src.m,
            a,
        })
    }

    pub fn bseq(&self) -> CliResult<&BSeq> {
        match &self.fraction {
            Some(Fraction::B(b)) => Ok(b),
            _ => Err(CliError::Input("this command needs --b".into())),
        }
    }

    /// Coefficients `f_0..f_order`. Index sequences are continued with unit
    /// steps when the fraction is too shallow for `order`.
    pub fn series(&self, order: usize) -> CliResult<PowerSeries> {
        if let Some(b) = &self.builtin {
            return Ok(b.series(order));
        }
        if let Some(s) = &self.series {
            s.require_order(order as i64)?;
            return Ok(s.truncate(order));
        }
        let cf = match &self.fraction {
            Some(Fraction::B(b)) => {
                CFrac::from_bseq(&b.extended_for_order(order), self.numerators.clone())
            }
            Some(Fraction::Powers(p)) => CFrac::new(p.clone(), self.numerators.clone()),
            None => {
                return Err(CliError::Input(
                    "give one of --b, --powers, --builtin or --series".into(),
                ))
            }
        };
        Ok(cf.expand(order)?)
    }
}
