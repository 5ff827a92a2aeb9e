//! One function per subcommand, each producing a [`Report`].

use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use twohilb::linalg::{self, CMat};
use twohilb::rep::{
    balancing, catalog, classify_self_dual, frobenius_schur, Adjunction, RepCategory, RepObject,
    SelfDuality,
};
use twohilb::suite::{run_criterion, run_suite, SuiteReport, CRITERIA};
use twohilb::tangle::{move_suite, parse, EvalContext, MoveStatus, Requirement};
use twohilb::transforms::{check_injection, reconstruct_abelian, Fourier};

use crate::output::{complex6, Cell, Report};
use crate::{Cli, Command, TangleCommand};

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Irreps => irreps(cli),
        Command::Fusion => fusion(cli),
        Command::Report => report(cli),
        Command::Tangle {
            action: TangleCommand::Eval { expr },
        } => tangle_eval(cli, expr),
        Command::Tangle {
            action: TangleCommand::Moves { mis_scale },
        } => tangle_moves(cli, *mis_scale),
        Command::Fourier => fourier(cli),
        Command::Tannaka => tannaka(cli),
        Command::Suite { only } => suite(cli, only),
    }
}

fn category(cli: &Cli) -> Result<Arc<RepCategory>> {
    let (group, z) = catalog::lookup_in(cli.catalog.as_deref(), &cli.group)
        .with_context(|| format!("loading group `{}`", cli.group))?;
    Ok(RepCategory::with_grading(group, z, 0)?)
}

/// Parses `2*std + triv`, `regular` or `unit` into an object.
fn parse_object(cat: &Arc<RepCategory>, expr: &str) -> Result<RepObject> {
    let mut x = RepObject::zero(cat);
    for term in expr.split('+') {
        let term = term.trim();
        let (count, label) = match term.split_once('*') {
            Some((k, label)) => (
                k.trim()
                    .parse::<usize>()
                    .map_err(|_| anyhow!("bad multiplicity `{k}` in `{expr}`"))?,
                label.trim(),
            ),
            None => (1, term),
        };
        let summand = match label {
            "regular" => RepObject::regular(cat),
            "unit" => RepObject::unit(cat),
            _ => RepObject::irrep_named(cat, label)?,
        };
        for _ in 0..count {
            x = x.direct_sum(&summand)?;
        }
    }
    if x.dim() == 0 {
        bail!("object `{expr}` is zero");
    }
    Ok(x)
}

fn required_object(cli: &Cli, cat: &Arc<RepCategory>) -> Result<RepObject> {
    let expr = cli
        .object
        .as_deref()
        .ok_or_else(|| anyhow!("--object is required here"))?;
    parse_object(cat, expr)
}

/// `triv+sgn+2*std`, or `0` for the zero object.
fn decomposition_label(cat: &RepCategory, mult: &[usize]) -> String {
    let terms: Vec<String> = mult
        .iter()
        .zip(cat.irreps())
        .filter(|(&m, _)| m > 0)
        .map(|(&m, r)| {
            if m == 1 {
                r.label.clone()
            } else {
                format!("{m}*{}", r.label)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn irreps(cli: &Cli) -> Result<Report> {
    let cat = category(cli)?;
    let g = cat.group();
    let mut columns = vec!["index", "label", "aliases", "degree", "parity"];
    let chi: Vec<String> = g
        .element_names()
        .iter()
        .map(|n| format!("chi[{n}]"))
        .collect();
    columns.extend(chi.iter().map(String::as_str));
    let mut r = Report::table(&columns);
    let mut narrow = Report::table(&["index", "label", "aliases", "degree", "parity"]);
    let mut docs = Vec::new();
    for (i, irrep) in cat.irreps().iter().enumerate() {
        let head: Vec<Cell> = vec![
            i.into(),
            irrep.label.as_str().into(),
            irrep.aliases.join(";").into(),
            irrep.degree.into(),
            cat.irrep_parity(i).into(),
        ];
        narrow.push(head.clone());
        let mut row = head;
        row.extend(irrep.character.iter().map(|&z| Cell::from(z)));
        r.push(row);
        docs.push(json!({
            "index": i,
            "label": irrep.label,
            "aliases": irrep.aliases,
            "degree": irrep.degree,
            "parity": cat.irrep_parity(i),
            "character": irrep.character.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        }));
    }
    r.text = Some(narrow.render(crate::output::Format::Text));
    r.json = json!({ "group": g.name(), "elements": g.element_names(), "irreps": docs });
    Ok(r)
}

fn fusion(cli: &Cli) -> Result<Report> {
    let cat = category(cli)?;
    let labels: Vec<String> = cat.irreps().iter().map(|r| r.label.clone()).collect();
    let mut columns = vec!["⊗"];
    columns.extend(labels.iter().map(String::as_str));
    let mut r = Report::table(&columns);
    let mut table = Vec::new();
    for i in 0..labels.len() {
        let mut row: Vec<Cell> = vec![labels[i].as_str().into()];
        let mut json_row = Vec::new();
        for j in 0..labels.len() {
            let xy = RepObject::irrep(&cat, i).tensor(&RepObject::irrep(&cat, j))?;
            let mult = xy.multiplicities();
            row.push(decomposition_label(&cat, &mult).into());
            let entry: serde_json::Map<String, Value> = mult
                .iter()
                .zip(&labels)
                .filter(|(&m, _)| m > 0)
                .map(|(&m, l)| (l.clone(), json!(m)))
                .collect();
            json_row.push(Value::Object(entry));
        }
        r.push(row);
        table.push(json_row);
    }
    r.json = json!({ "group": cat.group().name(), "labels": labels, "table": table });
    Ok(r)
}

fn report(cli: &Cli) -> Result<Report> {
    let cat = category(cli)?;
    let mut r = Report::table(&[
        "object",
        "degree",
        "dim",
        "qdim",
        "parity",
        "self_dual",
        "balancing",
    ]);
    let mut objects: Vec<(String, RepObject)> = cat
        .irreps()
        .iter()
        .enumerate()
        .map(|(i, irrep)| (irrep.label.clone(), RepObject::irrep(&cat, i)))
        .collect();
    if let Some(expr) = &cli.object {
        objects.push((expr.clone(), parse_object(&cat, expr)?));
    }
    for (label, x) in &objects {
        let adj = Adjunction::well_balanced(x);
        let (dim, qdim) = (adj.dim(), adj.qdim());
        if (dim - x.dim() as f64).abs() > cli.tol.max(1e-9) {
            r.failures.push(format!(
                "{label}: dim {dim} differs from degree {}",
                x.dim()
            ));
        }
        let (self_dual, phase) = if x.is_simple() {
            let class = classify_self_dual(x)?.class;
            let fs = frobenius_schur(x).re;
            let expected = match class {
                SelfDuality::Plus => 1.0,
                SelfDuality::Minus => -1.0,
                SelfDuality::NotSelfDual => 0.0,
            };
            if (fs - expected).abs() > 1e-6 {
                r.failures.push(format!(
                    "{label}: {} but indicator {fs:.6}",
                    class.describe()
                ));
            }
            (
                Cell::from(class.describe()),
                Cell::from(balancing(x)[(0, 0)]),
            )
        } else {
            (Cell::Missing, Cell::Missing)
        };
        r.push(vec![
            label.as_str().into(),
            x.dim().into(),
            dim.into(),
            qdim.into(),
            x.parity().into(),
            self_dual,
            phase,
        ]);
    }
    Ok(r)
}

fn matrix_json(m: &CMat) -> Value {
    json!((0..m.nrows())
        .map(|i| (0..m.ncols())
            .map(|j| [m[(i, j)].re, m[(i, j)].im])
            .collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn context(cli: &Cli, adj: Adjunction, checked: bool) -> Result<EvalContext> {
    Ok(if checked {
        EvalContext::new(adj, cli.ambient, cli.tol)?
    } else {
        EvalContext::unchecked(adj, cli.ambient, cli.tol)?
    })
}

fn tangle_eval(cli: &Cli, expr: &str) -> Result<Report> {
    let cat = category(cli)?;
    let x = required_object(cli, &cat)?;
    let ctx = context(cli, Adjunction::well_balanced(&x), true)?;
    let t = parse(expr)?;
    let m = ctx.evaluate(&t)?;
    let mut r = Report::table(&["row", "col", "value"]);
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            r.push(vec![i.into(), j.into(), m[(i, j)].into()]);
        }
    }
    let mut doc = json!({
        "tangle": t.to_string(),
        "src": t.src.to_string(),
        "tgt": t.tgt.to_string(),
        "ambient": cli.ambient,
        "matrix": matrix_json(&m),
    });
    if t.is_closed() {
        let v = ctx.scalar(&t)?;
        doc["value"] = json!([v.re, v.im]);
        r.text = Some(format!("{}\n", complex6(v)));
    } else {
        let lines: Vec<String> = (0..m.nrows())
            .map(|i| {
                (0..m.ncols())
                    .map(|j| complex6(m[(i, j)]))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        r.text = Some(format!("{} → {}\n{}\n", t.src, t.tgt, lines.join("\n")));
    }
    r.json = doc;
    Ok(r)
}

fn tangle_moves(cli: &Cli, mis_scale: Option<f64>) -> Result<Report> {
    let cat = category(cli)?;
    let x = required_object(cli, &cat)?;
    let ctx = match mis_scale {
        Some(lambda) if !(lambda > 0.0) => bail!("--mis-scale must be positive"),
        Some(lambda) => context(cli, Adjunction::mis_scaled(&x, lambda), false)?,
        None => context(cli, Adjunction::well_balanced(&x), true)?,
    };
    let results = move_suite(&ctx)?;
    let moves = twohilb::tangle::standard_moves();
    let mut r = Report::table(&["move", "requirement", "status", "deviation"]);
    for (res, m) in results.iter().zip(&moves) {
        let requirement = match m.requirement {
            Requirement::Planar => "planar",
            Requirement::Braided => "braided",
            Requirement::Symmetric => "symmetric",
        };
        let status = match res.status {
            MoveStatus::Pass => "pass",
            MoveStatus::Fail => "FAIL",
            MoveStatus::Skipped => "skipped",
            MoveStatus::NotRequired => "not-required",
        };
        if res.status == MoveStatus::Fail {
            r.failures.push(format!(
                "{}: deviation {:.3e}",
                res.name,
                res.deviation.unwrap_or(f64::NAN)
            ));
        }
        r.push(vec![
            res.name.as_str().into(),
            requirement.into(),
            status.into(),
            res.deviation.into(),
        ]);
    }
    r.json = json!({ "group": cat.group().name(), "ambient": cli.ambient, "moves": results });
    Ok(r)
}

fn fourier(cli: &Cli) -> Result<Report> {
    let cat = category(cli)?;
    let f = Fourier::new(cat.clone())?;
    let mut r = Report::table(&["object", "fibers", "defect"]);
    let mut docs = Vec::new();
    let k = cat.irreps().len();
    for (i, irrep) in cat.irreps().iter().enumerate() {
        let fx = f.transform(&RepObject::irrep(&cat, i))?;
        let delta: Vec<usize> = (0..k).map(|j| usize::from(i == j)).collect();
        if fx.graded.fibers() != delta.as_slice() {
            r.failures.push(format!(
                "{}: fibers {:?} are not a delta",
                irrep.label,
                fx.graded.fibers()
            ));
        }
        r.push(vec![
            irrep.label.as_str().into(),
            format!("{:?}", fx.graded.fibers()).into(),
            Cell::Missing,
        ]);
        docs.push(json!({ "object": irrep.label, "graded": fx.graded.to_json() }));
    }
    let x = match &cli.object {
        Some(expr) => parse_object(&cat, expr)?,
        None => RepObject::regular(&cat),
    };
    let label = cli.object.clone().unwrap_or_else(|| "regular".into());
    let y = RepObject::regular(&cat);
    let fx = f.transform(&x)?;
    let monoidal = f.check_monoidal(&x, &y, &linalg::identity(x.dim()))?;
    let (_, round_trip) = f.round_trip(&x)?;
    let defect = monoidal.worst().max(round_trip);
    if defect >= cli.tol {
        r.failures
            .push(format!("{label}: monoidal/round-trip defect {defect:.3e}"));
    }
    r.push(vec![
        label.as_str().into(),
        format!("{:?}", fx.graded.fibers()).into(),
        defect.into(),
    ]);
    docs.push(json!({
        "object": label,
        "graded": fx.graded.to_json(),
        "structure_defect": monoidal.structure,
        "braiding_defect": monoidal.braiding,
        "star_defect": monoidal.star,
        "round_trip_defect": round_trip,
    }));
    r.json = json!({ "group": cat.group().name(), "dual_group": f.dual().group.name(), "objects": docs });
    Ok(r)
}

fn tannaka(cli: &Cli) -> Result<Report> {
    let cat = category(cli)?;
    let order = cat.group().order();
    let mut r = Report::table(&["quantity", "value"]);
    if cat.group().is_abelian() {
        let rec = reconstruct_abelian(&cat)?;
        r.push(vec!["group order".into(), order.into()]);
        r.push(vec!["transformations".into(), rec.order.into()]);
        r.push(vec!["cyclic".into(), rec.cyclic.to_string().into()]);
        r.push(vec![
            "evaluation is isomorphism".into(),
            rec.evaluation_is_isomorphism.to_string().into(),
        ]);
        if rec.order != order || !rec.evaluation_is_isomorphism {
            r.failures.push(format!(
                "reconstructed {} transformations from a group of order {order}",
                rec.order
            ));
        }
        r.json = json!({ "group": cat.group().name(), "abelian": rec });
    } else {
        let inj = check_injection(&cat)?;
        r.push(vec!["group order".into(), order.into()]);
        r.push(vec!["distinct images".into(), inj.distinct_images.into()]);
        r.push(vec![
            "homomorphism defect".into(),
            inj.homomorphism_defect.into(),
        ]);
        r.push(vec!["monoidal defect".into(), inj.monoidal_defect.into()]);
        if !inj.injective {
            r.failures.push(format!(
                "{} distinct images for {order} elements",
                inj.distinct_images
            ));
        }
        if inj.homomorphism_defect.max(inj.monoidal_defect) >= cli.tol {
            r.failures
                .push("images are not monoidal unitary transformations".into());
        }
        r.json = json!({ "group": cat.group().name(), "injection": inj });
    }
    Ok(r)
}

fn suite(cli: &Cli, only: &[u8]) -> Result<Report> {
    let report = if only.is_empty() {
        run_suite(cli.seed)
    } else {
        if let Some(bad) = only.iter().find(|id| !CRITERIA.iter().any(|c| c.0 == **id)) {
            bail!("no criterion with id {bad}");
        }
        let mut criteria: Vec<_> = only.iter().map(|&id| run_criterion(id, cli.seed)).collect();
        criteria.sort_by_key(|c| c.id);
        criteria.dedup_by_key(|c| c.id);
        SuiteReport {
            seed: cli.seed,
            passed: criteria.iter().all(|c| c.passed),
            criteria,
        }
    };
    let mut r = Report::table(&["id", "criterion", "status", "summary"]);
    for c in &report.criteria {
        let status = if c.passed { "pass" } else { "FAIL" };
        r.push(vec![
            usize::from(c.id).into(),
            c.name.as_str().into(),
            status.into(),
            c.summary.as_str().into(),
        ]);
        r.failures.extend(
            c.failures
                .iter()
                .map(|f| format!("{} {}: {f}", c.id, c.name)),
        );
    }
    r.json = serde_json::to_value(&report)?;
    Ok(r)
}
