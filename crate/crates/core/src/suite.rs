//! The numerical acceptance checks, shared by the `suite` subcommand and the
//! `acceptance` test target.
//!
//! Each criterion is seeded from the suite seed and its id, so runs are
//! reproducible and criteria can be evaluated independently.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::functors::{adjoint_duality_holds, FusionFunctor};
use crate::hstar::{BlockMorphism, HStarAlgebraData, ObjectExpr, SpaceTable};
use crate::linalg::{self, CMat};
use crate::rep::symmetrizer::falling_factorial_over_factorial;
use crate::rep::{
    balancing, braiding, catalog, classify_self_dual, frobenius_schur, symmetrizer_power,
    symmetrizer_projections, Adjunction, FiniteGroupoid, RepCategory, RepGroupoid, RepObject,
    SelfDuality,
};
use crate::tangle::{check_move, standard_moves, EvalContext, MoveStatus};
use crate::transforms::{check_injection, reconstruct_abelian, Fourier};

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Catalog groups scanned by the catalog-wide criteria.
pub const CATALOG: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z2xZ2",
    "S3",
    "S4",
    "D4",
    "Q8",
    "SuperHilb",
];

/// `(id, name)` of every criterion, in report order.
pub const CRITERIA: [(u8, &str); 10] = [
    (1, "hstar-axioms"),
    (2, "ambrose-round-trip"),
    (3, "adjoint-duality"),
    (4, "tangle-moves"),
    (5, "falling-factorial-trace"),
    (6, "dimension-spectrum"),
    (7, "self-duality"),
    (8, "fourier"),
    (9, "tannaka"),
    (10, "balancing-laws"),
];

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub metrics: BTreeMap<String, f64>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn failures(&self) -> Vec<&CriterionReport> {
        self.criteria.iter().filter(|c| !c.passed).collect()
    }
}

/// Accumulates the outcome of one criterion.
#[derive(Default)]
struct Outcome {
    metrics: BTreeMap<String, f64>,
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn metric(&mut self, key: &str, value: f64) {
        self.metrics.insert(key.to_string(), value);
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Runs all criteria concurrently; the report is sorted by id.
pub fn run_suite(seed: u64) -> SuiteReport {
    let mut criteria: Vec<CriterionReport> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(id, _)| s.spawn(move || run_criterion(id, seed)))
            .collect();
        handles
            .into_iter()
            .zip(CRITERIA)
            .map(|(h, (id, name))| {
                h.join().unwrap_or_else(|_| CriterionReport {
                    id,
                    name: name.to_string(),
                    passed: false,
                    summary: "check panicked".into(),
                    metrics: BTreeMap::new(),
                    failures: vec!["check panicked".into()],
                })
            })
            .collect()
    });
    criteria.sort_by_key(|c| c.id);
    SuiteReport {
        seed,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

/// Runs one criterion. Unknown ids yield a failed report.
pub fn run_criterion(id: u8, seed: u64) -> CriterionReport {
    let name = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|c| c.1)
        .unwrap_or("unknown");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(id) << 32));
    let mut out = Outcome::default();
    let result = match id {
        1 => hstar_axioms(&mut out, &mut rng),
        2 => ambrose_round_trip(&mut out, &mut rng),
        3 => adjoint_duality(&mut out, &mut rng),
        4 => tangle_moves(&mut out),
        5 => falling_factorial(&mut out),
        6 => dimension_spectrum(&mut out, &mut rng),
        7 => self_duality(&mut out),
        8 => fourier(&mut out, &mut rng),
        9 => tannaka(&mut out),
        10 => balancing_laws(&mut out, &mut rng),
        _ => {
            out.failures.push(format!("no criterion with id {id}"));
            Ok(())
        }
    };
    if let Err(e) = result {
        out.failures.push(format!("error: {e}"));
    }
    CriterionReport {
        id,
        name: name.to_string(),
        passed: out.failures.is_empty(),
        summary: out.summary,
        metrics: out.metrics,
        failures: out.failures,
    }
}

fn random_space(rng: &mut ChaCha8Rng) -> Result<Arc<SpaceTable>> {
    let n = rng.gen_range(1..=4);
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.25..4.0)).collect();
    Ok(SpaceTable::numbered(&weights)?.into_arc())
}

fn random_object(rng: &mut ChaCha8Rng, space: &Arc<SpaceTable>) -> Result<ObjectExpr> {
    let mult = (0..space.dim()).map(|_| rng.gen_range(0..=3)).collect();
    ObjectExpr::new(space.clone(), mult)
}

fn random_morphism(rng: &mut ChaCha8Rng, x: &ObjectExpr, y: &ObjectExpr) -> Result<BlockMorphism> {
    let blocks = x
        .mult()
        .iter()
        .zip(y.mult())
        .map(|(&m, &n)| linalg::random_matrix(rng, n, m))
        .collect();
    BlockMorphism::new(x.clone(), y.clone(), blocks)
}

fn hstar_axioms(out: &mut Outcome, rng: &mut ChaCha8Rng) -> Result<()> {
    const TRIPLES: usize = 500;
    const BUDGET: Duration = Duration::from_secs(10);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..TRIPLES {
        let space = random_space(rng)?;
        let (x, y, z) = (
            random_object(rng, &space)?,
            random_object(rng, &space)?,
            random_object(rng, &space)?,
        );
        // g: x → y, f: y → z, h: x → z
        let g = random_morphism(rng, &x, &y)?;
        let f = random_morphism(rng, &y, &z)?;
        let h = random_morphism(rng, &x, &z)?;
        let fg = g.compose(&f)?;
        let lhs = fg.inner_product(&h)?;
        let mid = g.inner_product(&h.compose(&f.star())?)?;
        let rhs = f.inner_product(&g.star().compose(&h)?)?;
        worst = worst.max((lhs - mid).norm()).max((lhs - rhs).norm());
        // antiunitarity: ⟨a*, b*⟩ = conj⟨a, b⟩ = ⟨b, a⟩
        let anti = fg.star().inner_product(&h.star())?;
        worst = worst.max((anti - lhs.conj()).norm());
        worst = worst.max(fg.star().star().deviation(&fg));
    }
    let elapsed = start.elapsed();
    out.metric("max_deviation", worst);
    out.require(worst < 1e-9, || format!("max deviation {worst:.3e} ≥ 1e-9"));
    out.require(elapsed < BUDGET, || {
        format!("took {:.1} s, budget 10 s", elapsed.as_secs_f64())
    });
    out.summary = format!("{TRIPLES} triples, max deviation {worst:.2e}");
    Ok(())
}

fn ambrose_round_trip(out: &mut Outcome, rng: &mut ChaCha8Rng) -> Result<()> {
    const MODELS: usize = 50;
    let mut worst = 0.0f64;
    for trial in 0..MODELS {
        let ideals = rng.gen_range(1..=3);
        let mut blocks: Vec<(usize, f64)> = (0..ideals)
            .map(|_| (rng.gen_range(1..=3), rng.gen_range(0.25..4.0)))
            .collect();
        let model = HStarAlgebraData::block_model(&blocks)?;
        let w = linalg::random_unitary(rng, model.dim());
        let hidden = model.change_basis(&w)?;
        let text =
            serde_json::to_string(&hidden).map_err(|e| crate::Error::Invalid(e.to_string()))?;
        let parsed: HStarAlgebraData =
            serde_json::from_str(&text).map_err(|e| crate::Error::Invalid(e.to_string()))?;
        let dec = parsed.ambrose_decompose(1e-9, rng.gen())?;
        let found = dec.sizes_and_weights();
        blocks.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let sizes: Vec<usize> = found.iter().map(|b| b.0).collect();
        let expected: Vec<usize> = blocks.iter().map(|b| b.0).collect();
        if sizes != expected {
            out.failures.push(format!(
                "model {trial}: sizes {sizes:?}, expected {expected:?}"
            ));
            continue;
        }
        for (a, b) in found.iter().zip(&blocks) {
            worst = worst.max((a.1 - b.1).abs());
        }
    }
    out.metric("max_weight_error", worst);
    out.require(worst < 1e-7, || format!("weight error {worst:.3e} ≥ 1e-7"));
    out.summary = format!("{MODELS} block models, max weight error {worst:.2e}");
    Ok(())
}

fn adjoint_duality(out: &mut Outcome, rng: &mut ChaCha8Rng) -> Result<()> {
    const MATRICES: usize = 100;
    let mut failures = 0;
    for trial in 0..MATRICES {
        let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let src = SpaceTable::numbered(&vec![1.0; m])?.into_arc();
        let dst = SpaceTable::numbered(&vec![1.0; n])?.into_arc();
        let mult = (0..m)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=3)).collect())
            .collect();
        let f = FusionFunctor::new(src, dst, mult)?;
        if !adjoint_duality_holds(&f) {
            failures += 1;
            out.failures.push(format!("matrix {trial}: {:?}", f.mult()));
        }
    }
    out.metric("violations", failures as f64);
    out.summary = format!("{MATRICES} random matrices, {failures} violations");
    Ok(())
}

/// Objects on which the move suite is checked: `(group, irrep)`.
pub const MOVE_OBJECTS: [(&str, &str); 4] = [
    ("S3", "std"),
    ("Q8", "std"),
    ("D4", "std"),
    ("SuperHilb", "odd"),
];

fn tangle_moves(out: &mut Outcome) -> Result<()> {
    const TOL: f64 = 1e-8;
    let moves = standard_moves();
    let mut worst = 0.0f64;
    for (group, irrep) in MOVE_OBJECTS {
        let cat = RepCategory::catalog(group, 0)?;
        let x = RepObject::irrep_named(&cat, irrep)?;
        let ctx3 = EvalContext::new(Adjunction::well_balanced(&x), 3, TOL)?;
        let ctx4 = ctx3.with_ambient(4)?;
        for m in &moves {
            let symmetric = m.name.starts_with("crossing-symmetry");
            let ctx = if symmetric { &ctx4 } else { &ctx3 };
            let r = check_move(m, ctx)?;
            if let Some(d) = r.deviation {
                worst = worst.max(d);
            }
            out.require(r.status == MoveStatus::Pass, || {
                format!(
                    "{group}/{irrep}: {} {:?} (deviation {:?})",
                    m.name, r.status, r.deviation
                )
            });
        }
    }
    out.metric("max_deviation", worst);
    let cat = RepCategory::catalog("S3", 0)?;
    let x = RepObject::irrep_named(&cat, "std")?;
    let lambda = 2.0;
    let bad = EvalContext::unchecked(Adjunction::mis_scaled(&x, lambda), 3, TOL)?;
    let r1 = moves
        .iter()
        .find(|m| m.name == "framed-r1")
        .expect("framed R1 is a standard move");
    let r = check_move(r1, &bad)?;
    let dev = r.deviation.unwrap_or(f64::NAN);
    let expected = lambda * lambda - 1.0;
    out.metric("mis_scaled_r1_deviation", dev);
    out.require(r.status == MoveStatus::Fail, || {
        "mis-scaled adjunction passes framed R1".into()
    });
    out.require((dev - expected).abs() < 1e-6, || {
        format!("mis-scaled R1 deviation {dev}, expected {expected}")
    });
    out.summary = format!(
        "{} moves on {} objects, max deviation {worst:.2e}; mis-scaled R1 deviation {dev:.6}",
        moves.len(),
        MOVE_OBJECTS.len()
    );
    Ok(())
}

/// All multiplicity vectors with `Σ m_λ d_λ` in `1..=max_dim`.
fn objects_up_to(degrees: &[usize], max_dim: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0; degrees.len()];
    fn go(
        k: usize,
        left: usize,
        degrees: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == degrees.len() {
            if current.iter().any(|&m| m > 0) {
                out.push(current.clone());
            }
            return;
        }
        let mut m = 0;
        while m * degrees[k] <= left {
            current[k] = m;
            go(k + 1, left - m * degrees[k], degrees, current, out);
            m += 1;
        }
        current[k] = 0;
    }
    go(0, max_dim, degrees, &mut current, &mut out);
    out
}

fn falling_factorial(out: &mut Outcome) -> Result<()> {
    let mut worst = 0.0f64;
    let mut checked = 0usize;
    let mut cats: Vec<Arc<RepCategory>> = ["Z2", "S3", "Q8"]
        .iter()
        .map(|g| RepCategory::catalog(g, 0))
        .collect::<Result<_>>()?;
    cats.push(RepCategory::super_rep(&catalog::super_quaternion(), 0)?);
    for cat in &cats {
        // even simples only; for ungraded categories that is all of them
        let degrees: Vec<usize> = cat
            .irreps()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if cat.irrep_parity(i) > 0 {
                    r.degree
                } else {
                    usize::MAX / 8
                }
            })
            .collect();
        let objects = objects_up_to(&degrees, 4);
        let results: Vec<Result<(f64, usize, Vec<String>)>> = std::thread::scope(|s| {
            let handles: Vec<_> = objects
                .iter()
                .map(|mult| s.spawn(move || falling_factorial_object(cat, mult)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("trace check panicked"))
                .collect()
        });
        for r in results {
            let (w, n, fails) = r?;
            worst = worst.max(w);
            checked += n;
            out.failures.extend(fails);
        }
    }
    out.metric("max_deviation", worst);
    out.require(worst < 1e-8, || format!("max deviation {worst:.3e} ≥ 1e-8"));
    out.summary = format!("{checked} (object, n) pairs, max deviation {worst:.2e}");
    Ok(())
}

fn falling_factorial_object(
    cat: &Arc<RepCategory>,
    mult: &[usize],
) -> Result<(f64, usize, Vec<String>)> {
    let x = RepObject::random_with_multiplicities(
        cat,
        mult,
        &mut ChaCha8Rng::seed_from_u64(mult.len() as u64),
    );
    let d = Adjunction::well_balanced(&x).dim();
    let mut worst = 0.0f64;
    let mut fails = Vec::new();
    for n in 1..=4 {
        let (_, p_alt) = symmetrizer_projections(&x, n)?;
        // unitary carriers: the canonical pairing is already its own polar part
        let adj = Adjunction::canonical(&x.tensor_power(n)?);
        let tr = adj.trace(&p_alt)?;
        let expected = falling_factorial_over_factorial(d, n);
        worst = worst.max((tr.re - expected).abs()).max(tr.im.abs());
    }
    if x.dim() == 2 {
        let alt = symmetrizer_power(&x, 3)?.alt_power.dim();
        if alt != 0 {
            fails.push(format!(
                "{} {mult:?}: Λ³x has dimension {alt}",
                cat.group().name()
            ));
        }
    }
    Ok((worst, 4, fails))
}

fn integrality(value: f64) -> f64 {
    if value < -1e-8 {
        return value.abs() + 1.0;
    }
    (value - value.round()).abs()
}

fn dimension_spectrum(out: &mut Outcome, rng: &mut ChaCha8Rng) -> Result<()> {
    let mut worst = 0.0f64;
    let mut count = 0usize;
    let mut cats: Vec<Arc<RepCategory>> = CATALOG
        .iter()
        .map(|g| RepCategory::catalog(g, 0))
        .collect::<Result<_>>()?;
    cats.push(RepCategory::super_rep(&catalog::super_quaternion(), 0)?);
    for cat in &cats {
        let k = cat.irreps().len();
        let mut objects: Vec<RepObject> = (0..k).map(|i| RepObject::irrep(cat, i)).collect();
        for i in 0..k {
            for j in i..k {
                objects.push(objects[i].tensor(&objects[j])?);
            }
        }
        for _ in 0..3 {
            let mult: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=2)).collect();
            objects.push(RepObject::random_with_multiplicities(cat, &mult, rng));
        }
        for x in &objects {
            for adj in [Adjunction::well_balanced(x), Adjunction::canonical(x)] {
                let d = adj.dim();
                worst = worst.max(integrality(d));
                count += 1;
            }
        }
    }
    // groupoid: S3 acting on three points, plus a disjoint Z2
    let s3 = catalog::symmetric(3)?;
    let action: Vec<Vec<usize>> = (0..s3.order())
        .map(|g| {
            s3.element_name(g)
                .bytes()
                .map(|b| usize::from(b - b'0'))
                .collect()
        })
        .collect();
    let gd = FiniteGroupoid::action(&s3, &action)?
        .disjoint_union(&FiniteGroupoid::from_group(catalog::cyclic(2)?, None));
    let rg = RepGroupoid::new(&gd, 0)?;
    for comp in 0..rg.categories().len() {
        for irrep in 0..rg.categories()[comp].irreps().len() {
            let x = rg.simple(comp, irrep);
            let xx = x.tensor(&x.conjugate())?;
            for d in x.dim().into_iter().chain(xx.dim()) {
                worst = worst.max(integrality(d));
                count += 1;
            }
        }
    }
    out.metric("max_distance", worst);
    out.require(worst < 1e-8, || {
        format!("a dimension is {worst:.3e} away from ℕ")
    });
    out.summary = format!("{count} dimensions, max distance to ℕ {worst:.2e}");
    Ok(())
}

fn self_duality(out: &mut Outcome) -> Result<()> {
    let mut self_dual = 0usize;
    for name in CATALOG {
        let cat = RepCategory::catalog(name, 0)?;
        for (i, r) in cat.irreps().iter().enumerate() {
            let x = RepObject::irrep(&cat, i);
            let report = classify_self_dual(&x)?;
            let fs = frobenius_schur(&x);
            let fs_class = if (fs.re - 1.0).abs() < 1e-6 {
                SelfDuality::Plus
            } else if (fs.re + 1.0).abs() < 1e-6 {
                SelfDuality::Minus
            } else {
                SelfDuality::NotSelfDual
            };
            out.require(report.class == fs_class, || {
                format!(
                    "{name}/{}: dagger gives {}, indicator {fs}",
                    r.label,
                    report.class.describe()
                )
            });
            out.require(
                report.witness.is_some() == report.class.sign().is_some(),
                || format!("{name}/{}: witness and class disagree", r.label),
            );
            if report.class.sign().is_some() {
                self_dual += 1;
            }
        }
    }
    let expect = |out: &mut Outcome, group: &str, irrep: &str, class: SelfDuality| -> Result<()> {
        let cat = RepCategory::catalog(group, 0)?;
        let got = classify_self_dual(&RepObject::irrep_named(&cat, irrep)?)?.class;
        out.require(got == class, || {
            format!(
                "{group}/{irrep}: {}, expected {}",
                got.describe(),
                class.describe()
            )
        });
        Ok(())
    };
    expect(out, "S3", "std", SelfDuality::Plus)?;
    expect(out, "Q8", "std", SelfDuality::Minus)?;
    expect(out, "Z3", "chi1", SelfDuality::NotSelfDual)?;
    expect(out, "Z3", "chi2", SelfDuality::NotSelfDual)?;
    out.metric("self_dual_simples", self_dual as f64);
    out.summary = format!("{self_dual} self-dual simples over the catalog, one sign each");
    Ok(())
}

/// Groups of the Fourier and Tannaka criteria with the expected cyclicity.
pub const ABELIAN: [(&str, usize, bool); 4] = [
    ("Z2", 2, true),
    ("Z3", 3, true),
    ("Z4", 4, true),
    ("Z2xZ2", 4, false),
];

fn fourier(out: &mut Outcome, rng: &mut ChaCha8Rng) -> Result<()> {
    let mut worst = 0.0f64;
    for (name, _, _) in ABELIAN {
        let cat = RepCategory::catalog(name, 0)?;
        let f = Fourier::new(cat.clone())?;
        let k = cat.irreps().len();
        for i in 0..k {
            let fibers = f
                .transform(&RepObject::irrep(&cat, i))?
                .graded
                .fibers()
                .to_vec();
            let delta: Vec<usize> = (0..k).map(|j| usize::from(i == j)).collect();
            out.require(fibers == delta, || {
                format!("{name}: irrep {i} goes to {fibers:?}")
            });
        }
        for _ in 0..5 {
            let mx: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=2)).collect();
            let my: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=2)).collect();
            let x = RepObject::random_with_multiplicities(&cat, &mx, rng);
            let y = RepObject::random_with_multiplicities(&cat, &my, rng);
            if x.dim() == 0 || y.dim() == 0 {
                continue;
            }
            let basis = RepObject::hom_basis(&x, &x)?;
            let sample = basis
                .iter()
                .fold(linalg::zeros(x.dim(), x.dim()), |acc, b| {
                    acc + b * linalg::c(rng.gen(), rng.gen())
                });
            let report = f.check_monoidal(&x, &y, &sample)?;
            let (_, round_trip) = f.round_trip(&x)?;
            worst = worst.max(report.worst()).max(round_trip);
        }
    }
    out.metric("max_defect", worst);
    out.require(worst < 1e-9, || format!("max defect {worst:.3e} ≥ 1e-9"));
    out.summary = format!("{} groups, max defect {worst:.2e}", ABELIAN.len());
    Ok(())
}

fn tannaka(out: &mut Outcome) -> Result<()> {
    for (name, order, cyclic) in ABELIAN {
        let cat = RepCategory::catalog(name, 0)?;
        let r = reconstruct_abelian(&cat)?;
        out.metric(&format!("order_{name}"), r.order as f64);
        out.require(r.order == order && r.cyclic == cyclic, || {
            format!(
                "{name}: order {} cyclic {}, expected {order} {cyclic}",
                r.order, r.cyclic
            )
        });
        out.require(r.evaluation_is_isomorphism, || {
            format!("{name}: evaluation is not an isomorphism")
        });
    }
    let s3 = RepCategory::catalog("S3", 0)?;
    let inj = check_injection(&s3)?;
    out.metric("s3_distinct_images", inj.distinct_images as f64);
    out.require(inj.distinct_images == 6 && inj.injective, || {
        format!("S3: {} distinct images", inj.distinct_images)
    });
    out.require(
        inj.homomorphism_defect < 1e-9 && inj.monoidal_defect < 1e-9,
        || {
            format!(
                "S3: homomorphism defect {:.3e}, monoidal defect {:.3e}",
                inj.homomorphism_defect, inj.monoidal_defect
            )
        },
    );
    out.summary = format!(
        "orders 2, 3, 4, 4 recovered; S3 has {} distinct images",
        inj.distinct_images
    );
    Ok(())
}

fn balancing_laws(out: &mut Outcome, rng: &mut ChaCha8Rng) -> Result<()> {
    const PAIRS: usize = 100;
    let cat = RepCategory::super_rep(&catalog::super_quaternion(), 0)?;
    let boson = cat.bosonize()?;
    let k = cat.irreps().len();
    let random = |rng: &mut ChaCha8Rng| -> RepObject {
        loop {
            let mult: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=1)).collect();
            if mult.iter().any(|&m| m > 0) {
                return RepObject::random_with_multiplicities(&cat, &mult, rng);
            }
        }
    };
    let mut worst_sum = 0.0f64;
    let mut worst_tensor = 0.0f64;
    let mut worst_boson = 0.0f64;
    for _ in 0..PAIRS {
        let (x, y) = (random(rng), random(rng));
        let (bx, by) = (balancing(&x), balancing(&y));
        let sum = balancing(&x.direct_sum(&y)?);
        worst_sum = worst_sum.max(linalg::deviation(
            &sum,
            &linalg::block_diag(&[bx.clone(), by.clone()]),
        ));
        let xy = x.tensor(&y)?;
        let double: CMat = braiding(&y, &x)? * braiding(&x, &y)?;
        let expected = linalg::kron(&bx, &by) * double;
        worst_tensor = worst_tensor.max(linalg::deviation(&balancing(&xy), &expected));
        for z in [&x, &xy] {
            let b = balancing(&z.rebind(&boson)?);
            worst_boson = worst_boson.max(linalg::deviation(&b, &linalg::identity(z.dim())));
        }
    }
    out.metric("direct_sum_deviation", worst_sum);
    out.metric("tensor_deviation", worst_tensor);
    out.metric("bosonized_deviation", worst_boson);
    out.require(worst_sum < 1e-9, || {
        format!("b on direct sums off by {worst_sum:.3e}")
    });
    out.require(worst_tensor < 1e-9, || {
        format!("b on tensor products off by {worst_tensor:.3e}")
    });
    out.require(worst_boson < 1e-9, || {
        format!("bosonized balancing off identity by {worst_boson:.3e}")
    });
    out.summary = format!(
        "{PAIRS} pairs, deviations {worst_sum:.2e} (⊕), {worst_tensor:.2e} (⊗), {worst_boson:.2e} (bosonized)"
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_small_objects() {
        // degrees 1 and 2, total dimension ≤ 2: (1,0), (2,0), (0,1)
        let mut objects = objects_up_to(&[1, 2], 2);
        objects.sort();
        assert_eq!(objects, vec![vec![0, 1], vec![1, 0], vec![2, 0]]);
    }

    #[test]
    fn unknown_criterion_fails() {
        let r = run_criterion(42, 0);
        assert!(!r.passed);
    }

    #[test]
    fn integrality_penalises_negatives() {
        assert!(integrality(2.0) < 1e-15);
        assert!(integrality(-1.0) > 1.0);
    }
}
