//! Executes scenario tasks and assembles the JSON report.

use std::collections::BTreeMap;
use std::sync::Arc as Shared;

use negcat_core::torsion3::{
    brute_force_filtrations, distinct_shapes, enumerate_torsion_classes, filter_object, phi,
    phi_inv, verify_triple, Status,
};
use negcat_core::{
    AbelianModel, Arc, ArcModel, CObject, Error as CoreError, SetupPair, TorsionData,
};
use serde_json::{json, Value};

use crate::diagram::{self, DiagramKind, Format, Marking};
use crate::error::{core_exit_code, exit};
use crate::scenario::{EnumerateWhat, Scenario, Task};

/// Schema tag of the JSON report.
pub const REPORT_VERSION: &str = "negcat-report/1";

type CoreResult<T> = Result<T, CoreError>;

#[derive(Clone, Debug)]
pub struct Report {
    pub value: Value,
    pub status: Status,
}

impl Report {
    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.value).expect("report is valid JSON");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        status_code(self.status)
    }
}

pub fn status_code(s: Status) -> i32 {
    match s {
        Status::Pass => exit::PASS,
        Status::Fail => exit::FAIL,
        Status::Inconclusive => exit::INCONCLUSIVE,
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inconclusive => "inconclusive",
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Lazily built models shared by the tasks of one run.
struct Context<'s> {
    scenario: &'s Scenario,
    arc_model: Option<CoreResult<Shared<ArcModel>>>,
    hearts: BTreeMap<String, CoreResult<Shared<AbelianModel>>>,
    pair: Option<CoreResult<SetupPair>>,
    data: Option<CoreResult<TorsionData>>,
}

impl<'s> Context<'s> {
    fn new(scenario: &'s Scenario) -> Self {
        Context {
            scenario,
            arc_model: None,
            hearts: BTreeMap::new(),
            pair: None,
            data: None,
        }
    }

    fn arc_model(&mut self) -> CoreResult<Shared<ArcModel>> {
        let params = self.scenario.params;
        self.arc_model
            .get_or_insert_with(|| ArcModel::new(params).map(Shared::new))
            .clone()
    }

    fn heart(&mut self, name: &str) -> CoreResult<Shared<AbelianModel>> {
        if let Some(h) = self.hearts.get(name) {
            return h.clone();
        }
        let built = self.arc_model().and_then(|am| {
            let c = &self.scenario.sms[name];
            AbelianModel::from_sms(am, c).map(Shared::new)
        });
        self.hearts.insert(name.to_owned(), built.clone());
        built
    }

    fn pair(&mut self) -> CoreResult<SetupPair> {
        if let Some(p) = &self.pair {
            return p.clone();
        }
        let built = self
            .heart("A")
            .and_then(|a| self.heart("B").map(|b| (a, b)))
            .and_then(|(a, b)| SetupPair::new(a, b));
        self.pair = Some(built.clone());
        built
    }

    fn data(&mut self) -> CoreResult<TorsionData> {
        if let Some(d) = &self.data {
            return d.clone();
        }
        let built = self.pair().and_then(|p| p.compute_esets());
        self.data = Some(built.clone());
        built
    }
}

fn arcs_json(arcs: &[Arc]) -> Value {
    json!(arcs)
}

/// Runs every task in order. Task failures are recorded in the report; they
/// never abort the run.
pub fn run_scenario(scenario: &Scenario) -> Report {
    let mut ctx = Context::new(scenario);
    let mut overall = Status::Pass;
    let mut tasks = Vec::with_capacity(scenario.tasks.len());
    for (index, task) in scenario.tasks.iter().enumerate() {
        let (status, result) = match run_task(&mut ctx, task) {
            Ok(r) => r,
            Err(e) => {
                let s = if core_exit_code(&e) == exit::INCONCLUSIVE {
                    Status::Inconclusive
                } else {
                    Status::Fail
                };
                (s, json!({ "error": e.to_string() }))
            }
        };
        overall = overall.and(status);
        tasks.push(json!({
            "index": index,
            "kind": task.name(),
            "status": status_str(status),
            "result": result,
        }));
    }
    let p = &scenario.params;
    let value = json!({
        "version": REPORT_VERSION,
        "category": {
            "w": p.w(),
            "n": p.n(),
            "polygon_size": p.polygon_size(),
            "arc_count": p.arc_count(),
        },
        "sms": scenario.sms.iter().map(|(k, v)| (k.clone(), arcs_json(v.arcs()))).collect::<BTreeMap<_, _>>(),
        "tasks": tasks,
        "status": status_str(overall),
    });
    Report {
        value,
        status: overall,
    }
}

fn run_task(ctx: &mut Context<'_>, task: &Task) -> CoreResult<(Status, Value)> {
    match task {
        Task::CheckSms { sms } => check_sms(ctx, sms.as_deref()),
        Task::CheckSetup => {
            let (a, b) = (ctx.heart("A")?, ctx.heart("B")?);
            let r = negcat_core::torsion3::check_setup(&a, &b)?;
            let status = r.status();
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["status"] = json!(status_str(status));
            Ok((status, v))
        }
        Task::Esets => {
            let td = ctx.data()?;
            let a = ctx.heart("A")?;
            let cls = |c| arcs_json(&a.arcs_of(c));
            Ok((
                Status::Pass,
                json!({
                    "e0": cls(td.e0),
                    "e1": cls(td.e1),
                    "e2": cls(td.e2),
                    "pair_low": { "torsion": cls(td.pair_low.torsion), "torsion_free": cls(td.pair_low.torsion_free) },
                    "pair_high": { "torsion": cls(td.pair_high.torsion), "torsion_free": cls(td.pair_high.torsion_free) },
                }),
            ))
        }
        Task::Filter { object } => filter(ctx, object),
        Task::Verify => {
            let td = ctx.data()?;
            let a = ctx.heart("A")?;
            let rep = verify_triple(&a, &td)?;
            let pairs = phi(&a, td.classes())?;
            let back = phi_inv(&a, pairs)?;
            let pairs_match = pairs == [td.pair_low, td.pair_high];
            let round_trip = back == td.classes();
            let ok = rep.passed() && pairs_match && round_trip;
            Ok((
                pass_if(ok),
                json!({
                    "triple": rep,
                    "phi_matches_pairs": pairs_match,
                    "phi_inv_round_trip": round_trip,
                }),
            ))
        }
        Task::Enumerate { what, sms, list } => match what {
            EnumerateWhat::TorsionClasses => {
                let a = ctx.heart(sms)?;
                let ts = enumerate_torsion_classes(&a)?;
                let mut v = json!({ "sms": sms, "count": ts.len() });
                if *list {
                    let mut classes: Vec<Vec<Arc>> = ts.iter().map(|&t| a.arcs_of(t)).collect();
                    classes.sort();
                    v["classes"] = json!(classes);
                }
                Ok((Status::Pass, v))
            }
            EnumerateWhat::Sms => {
                let all = ctx.scenario.params.enumerate_sms();
                let mut v = json!({ "count": all.len() });
                if *list {
                    v["systems"] = json!(all.iter().map(|c| c.arcs()).collect::<Vec<_>>());
                }
                Ok((Status::Pass, v))
            }
        },
        Task::Diagram {
            kind,
            format,
            sms,
            out,
        } => {
            let text = render(ctx, *kind, *format, sms.as_deref())?;
            let mut v = json!({ "diagram": kind.as_str(), "format": format.as_str() });
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        v["error"] = json!(format!("cannot write {}: {e}", path.display()));
                        return Ok((Status::Fail, v));
                    }
                    v["path"] = json!(path.display().to_string());
                }
                None => v["content"] = json!(text),
            }
            Ok((Status::Pass, v))
        }
    }
}

/// Renders a diagram of the scenario's category. Polygons show the named
/// system (default: the first one); AR quivers need the pair `A`, `B`.
pub fn render_diagram(
    scenario: &Scenario,
    kind: DiagramKind,
    format: Format,
    sms: Option<&str>,
) -> CoreResult<String> {
    render(&mut Context::new(scenario), kind, format, sms)
}

fn render(
    ctx: &mut Context<'_>,
    kind: DiagramKind,
    format: Format,
    sms: Option<&str>,
) -> CoreResult<String> {
    let params = &ctx.scenario.params;
    Ok(match kind {
        DiagramKind::Polygon => {
            let arcs = sms
                .or_else(|| ctx.scenario.sms.keys().next().map(String::as_str))
                .and_then(|k| ctx.scenario.sms.get(k))
                .map(|c| c.arcs().to_vec())
                .unwrap_or_default();
            diagram::polygon(params, &arcs, format)
        }
        DiagramKind::Arquiver => {
            let marking = marking(ctx)?;
            diagram::arquiver(&ctx.scenario.params, &marking, format)
        }
    })
}

/// E-set fills and heart outlines for the AR quiver.
pub fn marking_for(a: &AbelianModel, b: &AbelianModel, td: &TorsionData) -> Marking {
    Marking {
        fills: [a.arcs_of(td.e0), a.arcs_of(td.e1), a.arcs_of(td.e2)],
        a: a.arcs(),
        b: b.arcs(),
    }
}

fn marking(ctx: &mut Context<'_>) -> CoreResult<Marking> {
    let (a, b) = (ctx.heart("A")?, ctx.heart("B")?);
    let td = ctx.data()?;
    Ok(marking_for(&a, &b, &td))
}

fn check_sms(ctx: &mut Context<'_>, only: Option<&str>) -> CoreResult<(Status, Value)> {
    let params = ctx.scenario.params;
    let mut systems = BTreeMap::new();
    let mut ok = true;
    for (name, c) in &ctx.scenario.sms {
        if only.is_some_and(|o| o != name) {
            continue;
        }
        let v = params.sms_verdict(c);
        ok &= v.is_accepted();
        systems.insert(
            name.clone(),
            json!({
                "arcs": c.arcs(),
                "accepted": v.is_accepted(),
                "code": v.code(),
                "reason": v.reason(),
            }),
        );
    }
    Ok((pass_if(ok), json!({ "systems": systems })))
}

fn filter(ctx: &mut Context<'_>, object: &CObject) -> CoreResult<(Status, Value)> {
    let td = ctx.data()?;
    let a = ctx.heart("A")?;
    let part = filter_object(&a, &td, object)?;
    let mut v = json!({
        "object": object,
        "chain": part.chain_arcs(&a)?,
        "quotients": part.quotient_arcs(&a)?,
        "dims": part.chain.iter().map(|s| s.dims()).collect::<Vec<_>>(),
    });
    let status = match brute_force_filtrations(&a, &td, &part.object) {
        Ok(all) => {
            let distinct = distinct_shapes(&a, &all)?;
            let matches = match all.first() {
                Some(first) => first.shape(&a)? == part.shape(&a)?,
                None => false,
            };
            v["brute_force"] = json!({
                "chains": all.len(),
                "distinct_up_to_isomorphism": distinct,
                "matches": matches,
            });
            pass_if(distinct == 1 && matches)
        }
        Err(CoreError::BoundExceeded { bound, found }) => {
            v["brute_force"] =
                json!({ "skipped": format!("total dimension {found} exceeds {bound}") });
            Status::Inconclusive
        }
        Err(e) => return Err(e),
    };
    Ok((status, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::parse;

    const EXAMPLE: &str = include_str!("../examples/paper_4_2.toml");

    #[test]
    fn empty_task_list() {
        let s = parse("[category]\nw = 2\nn = 3\n", "t").unwrap();
        let r = run_scenario(&s);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.value["tasks"], json!([]));
        assert_eq!(r.value["version"], REPORT_VERSION);
    }

    #[test]
    fn bundled_scenario() {
        let s = parse(EXAMPLE, "example").unwrap();
        let r = run_scenario(&s);
        assert_eq!(r.status, Status::Pass, "{}", r.to_json());
        let esets = r.value["tasks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|t| t["kind"] == "esets")
            .unwrap();
        assert_eq!(esets["result"]["e0"], json!([[1, 7], [7, 13]]));
        assert_eq!(esets["result"]["e2"], json!([[21, 27]]));
    }

    #[test]
    fn report_round_trips() {
        let s = parse(EXAMPLE, "example").unwrap();
        let text = run_scenario(&s).to_json();
        let back: Value = serde_json::from_str(&text).unwrap();
        let mut again = serde_json::to_string_pretty(&back).unwrap();
        again.push('\n');
        assert_eq!(again, text);
    }

    #[test]
    fn failures_are_reported() {
        let text = "[category]\nw = 6\nn = 5\n[sms.A]\narcs = [[1, 7], [7, 13]]\n[[tasks]]\nkind = \"check_sms\"\n";
        let r = run_scenario(&parse(text, "t").unwrap());
        assert_eq!(r.exit_code(), exit::FAIL);
        assert_eq!(
            r.value["tasks"][0]["result"]["systems"]["A"]["code"],
            "wrong_size"
        );
    }

    #[test]
    fn filter_outside_heart() {
        let text = EXAMPLE.to_owned() + "\n[[tasks]]\nkind = \"filter\"\nobject = [[23, 29]]\n";
        let r = run_scenario(&parse(&text, "t").unwrap());
        assert_eq!(r.status, Status::Fail);
        let last = r.value["tasks"].as_array().unwrap().last().unwrap().clone();
        assert!(last["result"]["error"]
            .as_str()
            .unwrap()
            .contains("not an object"));
    }
}
