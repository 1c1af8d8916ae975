//! JSON job files:
//!
//! ```json
//! { "b": [-1, 0, 1, 2], "symbolic": true, "order": 6,
//!   "tasks": ["expand", {"task": "transform", "offset": 1}] }
//! ```
//!
//! `powers` may replace `b`, and `numerators` (strings or integers) may replace
//! `symbolic`.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::{PolyKind, Source};
use crate::commands::{self, Outcome};
use crate::error::{CliError, CliResult};
use crate::source::Resolved;

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct Job {
    #[serde(default)]
    b: Option<Vec<i64>>,
    #[serde(default)]
    powers: Option<Vec<u32>>,
    #[serde(default)]
    numerators: Option<Vec<NumeratorText>>,
    #[serde(default)]
    symbolic: bool,
    order: usize,
    tasks: Vec<TaskSpec>,
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum NumeratorText {
    Int(i64),
    Text(String),
}

#[derive(Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum TaskName {
    Expand,
    Transform,
    Closedform,
    Polys,
    Reconstruct,
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum TaskSpec {
    Name(TaskName),
    Full(Task),
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct Task {
    task: TaskName,
    #[serde(default)]
    offset: Option<i64>,
    #[serde(default)]
    upto: Option<usize>,
    #[serde(default)]
    k: Option<usize>,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn load_job(path: &Path) -> CliResult<Job> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| CliError::Input(format!("job {}: at {}: {}", path.display(), e.path(), e.inner())))
}

impl Job {
    fn source(&self) -> CliResult<Source> {
        if self.b.is_some() == self.powers.is_some() {
            return Err(CliError::Input("job needs exactly one of \"b\" and \"powers\"".into()));
        }
        if self.symbolic && self.numerators.is_some() {
            return Err(CliError::Input("job has both \"numerators\" and \"symbolic\"".into()));
        }
        let numerators = self.numerators.as_ref().map(|list| {
            list.iter()
                .map(|n| match n {
                    NumeratorText::Int(i) => i.to_string(),
                    NumeratorText::Text(t) => t.clone(),
                })
                .collect::<Vec<_>>()
                .join(",")
        });
        Ok(Source {
            b: self.b.as_deref().map(join),
            powers: self.powers.as_deref().map(join),
            numerators,
            symbolic: self.symbolic,
            ..Source::default()
        })
    }

    pub fn run(&self) -> CliResult<Outcome> {
        let src = Resolved::from_source(&self.source()?)?;
        let mut results = Vec::with_capacity(self.tasks.len());
        let mut failure = None;
        for spec in &self.tasks {
            let task = match spec {
                TaskSpec::Name(name) => Task {
                    task: *name,
                    offset: None,
                    upto: None,
                    k: None,
                },
                TaskSpec::Full(t) => Task { ..*t },
            };
            let outcome = self.run_task(&src, &task)?;
            failure = failure.or(outcome.failure);
            results.push(json!({ "task": task.task, "result": outcome.value }));
        }
        Ok(Outcome {
            value: Value::Array(results),
            failure,
        })
    }

    fn run_task(&self, src: &Resolved, t: &Task) -> CliResult<Outcome> {
        let order = self.order;
        let offset = t.offset.unwrap_or(0);
        let default_upto = ((order as i64 - offset).max(0) / 2) as usize;
        let last_index = src.bseq().map(|b| b.last_index()).ok();
        Ok(match t.task {
            TaskName::Expand => commands::expand(src, order)?.into(),
            TaskName::Transform => commands::transform(src, offset, t.upto.unwrap_or(default_upto))?.into(),
            TaskName::Closedform => {
                let b_last = src.bseq()?.largest() as usize;
                let upto = t.upto.unwrap_or(default_upto.min(b_last));
                commands::closedform(src, t.k, t.k.is_none().then_some(upto), None)?.into()
            }
            TaskName::Polys => commands::polys(src, PolyKind::R, t.k.or(last_index).unwrap_or(0))?,
            TaskName::Reconstruct => commands::reconstruct(src, t.k.unwrap_or(order.saturating_sub(2) / 2))?,
        })
    }
}

impl serde::Serialize for TaskName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Self::Expand => "expand",
            Self::Transform => "transform",
            Self::Closedform => "closedform",
            Self::Polys => "polys",
            Self::Reconstruct => "reconstruct",
        })
    }
}
