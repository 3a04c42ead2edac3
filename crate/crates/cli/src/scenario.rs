//! Scenario files: category parameters, named simple-minded systems and an
//! ordered task list.
//!
//! ```toml
//! [category]
//! w = 6
//! n = 5
//!
//! [sms.A]
//! arcs = [[28, 34], [14, 20], [21, 27], [1, 7], [0, 13]]
//!
//! [[tasks]]
//! kind = "filter"
//! object = [[7, 27]]
//! ```

use std::collections::BTreeMap;
use std::ops::Range;
use std::path::{Path, PathBuf};

use negcat_core::{Arc, CObject, CatParams, SmsCandidate};
use serde::Deserialize;
use toml::Spanned;

use crate::diagram::{DiagramKind, Format};
use crate::error::{CliError, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioWire {
    category: Spanned<CategoryWire>,
    #[serde(default)]
    sms: BTreeMap<String, SmsWire>,
    #[serde(default)]
    tasks: Vec<Spanned<TaskWire>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryWire {
    w: usize,
    n: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SmsWire {
    arcs: Vec<Spanned<[usize; 2]>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TaskWire {
    kind: Spanned<String>,
    object: Option<Vec<Spanned<[usize; 2]>>>,
    sms: Option<String>,
    what: Option<String>,
    list: Option<bool>,
    diagram: Option<String>,
    format: Option<String>,
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerateWhat {
    TorsionClasses,
    Sms,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    /// All named systems, or just one.
    CheckSms {
        sms: Option<String>,
    },
    CheckSetup,
    Esets,
    Filter {
        object: CObject,
    },
    Verify,
    Enumerate {
        what: EnumerateWhat,
        sms: String,
        list: bool,
    },
    Diagram {
        kind: DiagramKind,
        format: Format,
        sms: Option<String>,
        out: Option<PathBuf>,
    },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::CheckSms { .. } => "check_sms",
            Task::CheckSetup => "check_setup",
            Task::Esets => "esets",
            Task::Filter { .. } => "filter",
            Task::Verify => "verify",
            Task::Enumerate { .. } => "enumerate",
            Task::Diagram { .. } => "diagram",
        }
    }

    /// Whether the task works on the pair of systems named `A` and `B`.
    pub fn needs_pair(&self) -> bool {
        matches!(
            self,
            Task::CheckSetup
                | Task::Esets
                | Task::Filter { .. }
                | Task::Verify
                | Task::Diagram {
                    kind: DiagramKind::Arquiver,
                    ..
                }
        )
    }
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub params: CatParams,
    pub sms: BTreeMap<String, SmsCandidate>,
    pub tasks: Vec<Task>,
}

pub fn load(path: &Path) -> Result<Scenario> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    parse(&text, &path.display().to_string())
}

struct Locator<'a> {
    text: &'a str,
    label: &'a str,
}

impl Locator<'_> {
    fn error(&self, span: Option<Range<usize>>, message: impl Into<String>) -> CliError {
        let (line, column) = match span {
            Some(r) => line_col(self.text, r.start),
            None => (0, 0),
        };
        CliError::Parse {
            path: self.label.to_owned(),
            line,
            column,
            message: message.into(),
        }
    }

    fn arc(&self, params: &CatParams, raw: &Spanned<[usize; 2]>) -> Result<Arc> {
        let [a, b] = *raw.get_ref();
        if a >= b {
            return Err(self.error(Some(raw.span()), format!("arc [{a}, {b}] must have a < b")));
        }
        let x = Arc::new(a, b);
        params
            .check(x)
            .map_err(|e| self.error(Some(raw.span()), e.to_string()))?;
        Ok(x)
    }
}

/// 1-based line and column of a byte offset.
fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

pub fn parse(text: &str, label: &str) -> Result<Scenario> {
    let loc = Locator { text, label };
    let wire: ScenarioWire = toml::from_str(text).map_err(|e| loc.error(e.span(), e.message()))?;
    let cat_span = wire.category.span();
    let cat = wire.category.into_inner();
    let params = CatParams::new(cat.w, cat.n)
        .map_err(|e| loc.error(Some(cat_span.clone()), e.to_string()))?;

    let mut sms = BTreeMap::new();
    for (name, s) in &wire.sms {
        let arcs = s
            .arcs
            .iter()
            .map(|r| loc.arc(&params, r))
            .collect::<Result<Vec<_>>>()?;
        sms.insert(name.clone(), SmsCandidate::new(&params, arcs)?);
    }

    let mut tasks = Vec::with_capacity(wire.tasks.len());
    for raw in &wire.tasks {
        let span = raw.span();
        let t = raw.get_ref();
        let err = |m: String| loc.error(Some(span.clone()), m);
        let unexpected = |field: &str, present: bool| -> Result<()> {
            if present {
                Err(err(format!(
                    "task '{}' does not take '{field}'",
                    t.kind.get_ref()
                )))
            } else {
                Ok(())
            }
        };
        let no_object = || unexpected("object", t.object.is_some());
        let task = match t.kind.get_ref().as_str() {
            "check_sms" => {
                no_object()?;
                Task::CheckSms { sms: t.sms.clone() }
            }
            "check_setup" => {
                no_object()?;
                Task::CheckSetup
            }
            "esets" => {
                no_object()?;
                Task::Esets
            }
            "verify" => {
                no_object()?;
                Task::Verify
            }
            "filter" => {
                let Some(obj) = &t.object else {
                    return Err(err("task 'filter' needs 'object = [[a, b], ...]'".into()));
                };
                let arcs = obj.iter().map(|r| loc.arc(&params, r)).collect::<Result<Vec<_>>>()?;
                Task::Filter {
                    object: CObject::new(arcs),
                }
            }
            "enumerate" => {
                no_object()?;
                let what = match t.what.as_deref() {
                    None | Some("torsion_classes") => EnumerateWhat::TorsionClasses,
                    Some("sms") => EnumerateWhat::Sms,
                    Some(o) => return Err(err(format!("unknown enumeration '{o}' (torsion_classes, sms)"))),
                };
                Task::Enumerate {
                    what,
                    sms: t.sms.clone().unwrap_or_else(|| "A".into()),
                    list: t.list.unwrap_or(true),
                }
            }
            "diagram" => {
                no_object()?;
                let kind = t
                    .diagram
                    .as_deref()
                    .unwrap_or("polygon")
                    .parse()
                    .map_err(err)?;
                let format = t.format.as_deref().unwrap_or("svg").parse().map_err(err)?;
                Task::Diagram {
                    kind,
                    format,
                    sms: t.sms.clone(),
                    out: t.out.clone(),
                }
            }
            other => {
                return Err(loc.error(Some(t.kind.span()), format!(
                    "unknown task kind '{other}' (check_sms, check_setup, esets, filter, verify, enumerate, diagram)"
                )))
            }
        };
        if task.needs_pair() {
            for name in ["A", "B"] {
                if !sms.contains_key(name) {
                    return Err(err(format!(
                        "task '{}' needs a system named '{name}'",
                        task.name()
                    )));
                }
            }
        }
        let named = match &task {
            Task::CheckSms { sms } => sms.clone(),
            Task::Enumerate {
                what: EnumerateWhat::TorsionClasses,
                sms,
                ..
            } => Some(sms.clone()),
            Task::Diagram { sms, .. } => sms.clone(),
            _ => None,
        };
        if let Some(name) = named {
            if !sms.contains_key(&name) {
                return Err(err(format!(
                    "task '{}' refers to unknown system '{name}'",
                    task.name()
                )));
            }
        }
        tasks.push(task);
    }
    Ok(Scenario { params, sms, tasks })
}
