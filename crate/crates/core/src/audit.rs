//! Randomized audit of the four metric axioms for distance measures.
//!
//! Given a seeded configuration, the auditor checks self-distance zero,
//! positivity of distinct points, symmetry, and the triangle inequality
//! over sampled vectors. Triangle trials start with a fixed library of
//! witness triples that provably break the joint distance before any
//! random sampling happens, so a non-metric verdict never depends on luck.
//!
//! Sampling is decoupled from evaluation: every random input is drawn
//! up front from a single seeded stream, trials are then evaluated in
//! parallel under the `parallel` feature, and results are reduced in trial
//! order. A report is therefore a pure function of measure and
//! configuration, independent of thread count.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exec;
use crate::kind::{MeasureKind, Polarity};
use crate::measures::{self, ZERO_MAGNITUDE_FLOOR};
use crate::vector::Vector;

/// Attempts allowed when resampling a rejected vector before the
/// configuration is declared unsatisfiable.
const MAX_SAMPLE_ATTEMPTS: usize = 10_000;

/// Parameters of one audit run. Two runs with equal configurations produce
/// equal reports for the same measure.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub seed: u64,
    pub trials: usize,
    pub dimension: usize,
    /// Closed interval each component is drawn from, low before high.
    pub component_range: (f64, f64),
    /// Slack added to the right side of every axiom comparison.
    pub tolerance: f64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            seed: 42,
            trials: 10_000,
            dimension: 3,
            component_range: (-10.0, 10.0),
            tolerance: 1e-9,
        }
    }
}

impl AuditConfig {
    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig {
                reason: "at least one trial is required".into(),
            });
        }
        if self.dimension == 0 {
            return Err(Error::InvalidConfig {
                reason: "sampled vectors need at least one component".into(),
            });
        }
        let (lo, hi) = self.component_range;
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::InvalidConfig {
                reason: format!("component range [{lo}, {hi}] is empty or not finite"),
            });
        }
        if !self.tolerance.is_finite() || self.tolerance < 0.0 {
            return Err(Error::InvalidConfig {
                reason: format!("tolerance {} must be finite and nonnegative", self.tolerance),
            });
        }
        Ok(())
    }
}

/// The four axioms a distance must satisfy to be a metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    SelfDistanceZero,
    PositivityOfDistinct,
    Symmetry,
    TriangleInequality,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::SelfDistanceZero,
        Axiom::PositivityOfDistinct,
        Axiom::Symmetry,
        Axiom::TriangleInequality,
    ];

    /// Human-readable name used in text reports.
    pub fn title(self) -> &'static str {
        match self {
            Axiom::SelfDistanceZero => "self-distance zero",
            Axiom::PositivityOfDistinct => "positivity of distinct",
            Axiom::Symmetry => "symmetry",
            Axiom::TriangleInequality => "triangle inequality",
        }
    }

    /// Snake-case tag used in JSON reports.
    pub fn tag(self) -> &'static str {
        match self {
            Axiom::SelfDistanceZero => "self_distance_zero",
            Axiom::PositivityOfDistinct => "positivity_of_distinct",
            Axiom::Symmetry => "symmetry",
            Axiom::TriangleInequality => "triangle_inequality",
        }
    }
}

/// One concrete input on which an axiom comparison failed.
///
/// `lhs` and `rhs` are the two sides of the violated comparison; for the
/// triangle inequality, `lhs` is the direct distance and `rhs` the detour
/// sum it exceeded.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    /// Position in the trial sequence, library triples first. The reduction
    /// keeps the lowest failing index regardless of evaluation order.
    pub trial_index: usize,
    pub vectors: Vec<Vector>,
    pub lhs: f64,
    pub rhs: f64,
}

/// Outcome of all trials for a single axiom.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub trials_run: usize,
    pub failures: usize,
    pub first_counterexample: Option<Counterexample>,
}

/// Overall audit verdict. A single failed trial on any axiom disqualifies
/// the measure; a clean sample is evidence, not proof, hence the wording.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    MetricOnSample,
    NotAMetric(Counterexample),
}

/// Full audit outcome for one measure under one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub measure: MeasureKind,
    pub config: AuditConfig,
    pub results: Vec<AxiomResult>,
    pub verdict: Verdict,
}

impl AuditReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let (lo, hi) = self.config.component_range;
        out.push_str(&format!("metric audit: {}\n", self.measure.label()));
        out.push_str(&format!(
            "seed {}, trials {}, dimension {}, components in [{lo}, {hi}], tolerance {}\n",
            self.config.seed, self.config.trials, self.config.dimension, self.config.tolerance
        ));
        for result in &self.results {
            out.push_str(&format!(
                "  {:<24} {} trials, {} failures\n",
                result.axiom.title(),
                result.trials_run,
                result.failures
            ));
            if let Some(ce) = &result.first_counterexample {
                out.push_str(&format!("    first counterexample at trial {}:\n", ce.trial_index));
                for vector in &ce.vectors {
                    out.push_str(&format!("      {vector}\n"));
                }
                out.push_str(&format!(
                    "      {}\n",
                    describe_violation(result.axiom, ce)
                ));
            }
        }
        let verdict = match &self.verdict {
            Verdict::MetricOnSample => "metric on this sample",
            Verdict::NotAMetric(_) => "not a metric",
        };
        out.push_str(&format!("verdict: {verdict}\n"));
        out
    }

    pub fn to_json(&self) -> Value {
        let (lo, hi) = self.config.component_range;
        json!({
            "measure": self.measure.label(),
            "config": {
                "seed": self.config.seed,
                "trials": self.config.trials,
                "dimension": self.config.dimension,
                "component_range": [lo, hi],
                "tolerance": self.config.tolerance,
            },
            "axioms": self.results.iter().map(|r| json!({
                "axiom": r.axiom.tag(),
                "trials": r.trials_run,
                "failures": r.failures,
                "first_counterexample": r.first_counterexample.as_ref().map(counterexample_json),
            })).collect::<Vec<_>>(),
            "verdict": match &self.verdict {
                Verdict::MetricOnSample => "metric_on_sample",
                Verdict::NotAMetric(_) => "not_a_metric",
            },
        })
    }
}

fn counterexample_json(ce: &Counterexample) -> Value {
    json!({
        "trial_index": ce.trial_index,
        "vectors": ce.vectors.iter().map(|v| json!({
            "id": v.id(),
            "components": v.components(),
        })).collect::<Vec<_>>(),
        "lhs": ce.lhs,
        "rhs": ce.rhs,
    })
}

fn describe_violation(axiom: Axiom, ce: &Counterexample) -> String {
    match axiom {
        Axiom::SelfDistanceZero => format!("d(u0, u0) = {} differs from 0", ce.lhs),
        Axiom::PositivityOfDistinct => {
            format!("d(u0, u1) = {} is not positive for distinct vectors", ce.lhs)
        }
        Axiom::Symmetry => format!("d(u0, u1) = {} differs from d(u1, u0) = {}", ce.lhs, ce.rhs),
        Axiom::TriangleInequality => format!(
            "d(u0, u2) = {} exceeds d(u0, u1) + d(u1, u2) = {}",
            ce.lhs, ce.rhs
        ),
    }
}

/// Fixed triangle triples evaluated ahead of the random trials, embedded
/// into the requested dimension.
///
/// Each triple places two opposed vectors on the first axis with a small
/// midpoint off to the side (on the axis itself when the dimension is one).
/// The detour through the midpoint keeps both legs near-perpendicular or
/// aligned while the direct hop is fully opposed, which is exactly the
/// geometry where an angle-scaled distance overshoots the leg sum. Plain
/// Minkowski distances satisfy the triangle inequality on every triple.
pub fn triangle_witness_triples(dimension: usize) -> Vec<[Vector; 3]> {
    let patterns: [[(f64, f64); 3]; 6] = [
        [(1.0, 0.0), (0.0, 0.1), (-1.0, 0.0)],
        [(10.0, 0.0), (0.0, 1.0), (-10.0, 0.0)],
        [(0.1, 0.0), (0.0, 0.01), (-0.1, 0.0)],
        [(1.0, 0.0), (0.0, 0.01), (-1.0, 0.0)],
        [(2.0, 0.0), (0.0, 0.5), (-2.0, 0.0)],
        [(1.0, 0.0), (0.001, 0.0), (-1.0, 0.0)],
    ];
    patterns
        .iter()
        .map(|pattern| {
            let build = |role: usize, (x, y): (f64, f64)| {
                let mut components = vec![0.0; dimension];
                if dimension == 1 {
                    // No second axis to hold the midpoint offset; fold it
                    // onto the first so the triple stays collinear but the
                    // midpoint keeps a small nonzero magnitude.
                    components[0] = x + y;
                } else {
                    components[0] = x;
                    components[1] = y;
                }
                Vector::new(format!("u{role}"), components).expect("witness components are finite")
            };
            [
                build(0, pattern[0]),
                build(1, pattern[1]),
                build(2, pattern[2]),
            ]
        })
        .collect()
}

struct Sampler {
    rng: ChaCha8Rng,
    dimension: usize,
    lo: f64,
    hi: f64,
    /// Reject vectors below the magnitude floor. Enabled for measures that
    /// divide by magnitudes, where a near-zero draw would turn a sampling
    /// accident into a spurious evaluation error.
    require_magnitude: bool,
}

impl Sampler {
    fn new(config: &AuditConfig, require_magnitude: bool) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            dimension: config.dimension,
            lo: config.component_range.0,
            hi: config.component_range.1,
            require_magnitude,
        }
    }

    fn draw(&mut self, id: &str) -> Result<Vector> {
        for _ in 0..MAX_SAMPLE_ATTEMPTS {
            let components: Vec<f64> = (0..self.dimension)
                .map(|_| self.rng.random_range(self.lo..=self.hi))
                .collect();
            if self.require_magnitude {
                let magnitude = components.iter().map(|c| c * c).sum::<f64>().sqrt();
                if magnitude < ZERO_MAGNITUDE_FLOOR {
                    continue;
                }
            }
            return Vector::new(id, components);
        }
        Err(Error::InvalidConfig {
            reason: "component range cannot produce vectors of usable magnitude".into(),
        })
    }

    /// Draw a vector distinct from `other` componentwise.
    fn draw_distinct_from(&mut self, id: &str, other: &Vector) -> Result<Vector> {
        for _ in 0..MAX_SAMPLE_ATTEMPTS {
            let candidate = self.draw(id)?;
            if candidate.components() != other.components() {
                return Ok(candidate);
            }
        }
        Err(Error::InvalidConfig {
            reason: "component range cannot produce two distinct vectors".into(),
        })
    }
}

fn run_map<T, F>(parallel: bool, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if parallel {
        exec::map_collect(count, f)
    } else {
        exec::map_collect_seq(count, f)
    }
}

/// Pass through trial outcomes in index order, counting failures and
/// keeping the first counterexample. The first erroring trial aborts the
/// axiom, again by lowest index.
fn reduce_outcomes<I>(
    axiom: Axiom,
    outcomes: Vec<Result<Option<(f64, f64)>>>,
    vectors_for: I,
) -> Result<AxiomResult>
where
    I: Fn(usize) -> Vec<Vector>,
{
    let trials_run = outcomes.len();
    let mut failures = 0;
    let mut first_counterexample = None;
    for (trial_index, outcome) in outcomes.into_iter().enumerate() {
        if let Some((lhs, rhs)) = outcome? {
            failures += 1;
            if first_counterexample.is_none() {
                first_counterexample = Some(Counterexample {
                    trial_index,
                    vectors: vectors_for(trial_index),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(AxiomResult {
        axiom,
        trials_run,
        failures,
        first_counterexample,
    })
}

fn audit_impl(measure: MeasureKind, config: &AuditConfig, parallel: bool) -> Result<AuditReport> {
    if measure.polarity() != Polarity::Distance {
        return Err(Error::NotADistance {
            label: measure.label(),
        });
    }
    config.validate()?;

    let mut sampler = Sampler::new(config, measure.needs_cosine());
    let trials = config.trials;
    let tol = config.tolerance;

    // All random inputs are drawn before any evaluation, one axiom after
    // another, so the stream layout depends only on the configuration and
    // the measure's sampling needs.
    let singles: Vec<Vector> = (0..trials)
        .map(|_| sampler.draw("u0"))
        .collect::<Result<_>>()?;
    let distinct_pairs: Vec<(Vector, Vector)> = (0..trials)
        .map(|_| {
            let u = sampler.draw("u0")?;
            let v = sampler.draw_distinct_from("u1", &u)?;
            Ok((u, v))
        })
        .collect::<Result<_>>()?;
    let pairs: Vec<(Vector, Vector)> = (0..trials)
        .map(|_| Ok((sampler.draw("u0")?, sampler.draw("u1")?)))
        .collect::<Result<_>>()?;
    let mut triples: Vec<[Vector; 3]> = triangle_witness_triples(config.dimension);
    for _ in 0..trials {
        triples.push([
            sampler.draw("u0")?,
            sampler.draw("u1")?,
            sampler.draw("u2")?,
        ]);
    }

    let self_result = reduce_outcomes(
        Axiom::SelfDistanceZero,
        run_map(parallel, singles.len(), |i| {
            let u = &singles[i];
            let d = measure.evaluate(u, u)?;
            Ok((d.abs() > tol).then_some((d, 0.0)))
        }),
        |i| vec![singles[i].clone()],
    )?;

    let positivity_result = reduce_outcomes(
        Axiom::PositivityOfDistinct,
        run_map(parallel, distinct_pairs.len(), |i| {
            let (u, v) = &distinct_pairs[i];
            let d = measure.evaluate(u, v)?;
            Ok((d <= 0.0).then_some((d, 0.0)))
        }),
        |i| {
            let (u, v) = &distinct_pairs[i];
            vec![u.clone(), v.clone()]
        },
    )?;

    let symmetry_result = reduce_outcomes(
        Axiom::Symmetry,
        run_map(parallel, pairs.len(), |i| {
            let (u, v) = &pairs[i];
            let forward = measure.evaluate(u, v)?;
            let backward = measure.evaluate(v, u)?;
            Ok(((forward - backward).abs() > tol).then_some((forward, backward)))
        }),
        |i| {
            let (u, v) = &pairs[i];
            vec![u.clone(), v.clone()]
        },
    )?;

    let triangle_result = reduce_outcomes(
        Axiom::TriangleInequality,
        run_map(parallel, triples.len(), |i| {
            let [a, b, c] = &triples[i];
            let leg_ab = measure.evaluate(a, b)?;
            let leg_bc = measure.evaluate(b, c)?;
            let direct = measure.evaluate(a, c)?;
            Ok((direct > leg_ab + leg_bc + tol).then_some((direct, leg_ab + leg_bc)))
        }),
        |i| triples[i].to_vec(),
    )?;

    let results = vec![
        self_result,
        positivity_result,
        symmetry_result,
        triangle_result,
    ];
    let verdict = results
        .iter()
        .find_map(|r| r.first_counterexample.clone())
        .map_or(Verdict::MetricOnSample, Verdict::NotAMetric);

    Ok(AuditReport {
        measure,
        config: config.clone(),
        results,
        verdict,
    })
}

/// Audit all four metric axioms for a distance measure.
///
/// Trials evaluate in parallel when the `parallel` feature is active. The
/// report equals the one from [`check_axioms_sequential`] in every field.
pub fn check_axioms(measure: MeasureKind, config: &AuditConfig) -> Result<AuditReport> {
    audit_impl(measure, config, true)
}

/// Single-threaded twin of [`check_axioms`], kept as the reference path for
/// equivalence tests and benchmarks.
pub fn check_axioms_sequential(measure: MeasureKind, config: &AuditConfig) -> Result<AuditReport> {
    audit_impl(measure, config, false)
}

/// Look for a triangle-inequality violation only, library triples first.
///
/// Random triples are drawn from a fresh stream seeded by `config.seed`,
/// so the result matches a full audit whenever the violation sits in the
/// witness library (as it does for the joint distance).
pub fn search_triangle_counterexample(
    measure: MeasureKind,
    config: &AuditConfig,
) -> Result<Option<Counterexample>> {
    if measure.polarity() != Polarity::Distance {
        return Err(Error::NotADistance {
            label: measure.label(),
        });
    }
    config.validate()?;
    let mut sampler = Sampler::new(config, measure.needs_cosine());
    let mut triples = triangle_witness_triples(config.dimension);
    for _ in 0..config.trials {
        triples.push([
            sampler.draw("u0")?,
            sampler.draw("u1")?,
            sampler.draw("u2")?,
        ]);
    }
    let tol = config.tolerance;
    let outcomes = run_map(true, triples.len(), |i| {
        let [a, b, c] = &triples[i];
        let leg_ab = measure.evaluate(a, b)?;
        let leg_bc = measure.evaluate(b, c)?;
        let direct = measure.evaluate(a, c)?;
        Ok((direct > leg_ab + leg_bc + tol).then_some((direct, leg_ab + leg_bc)))
    });
    let result = reduce_outcomes(Axiom::TriangleInequality, outcomes, |i| triples[i].to_vec())?;
    Ok(result.first_counterexample)
}

/// Draw `count` vectors from the configuration's seeded stream, in draw
/// order, with ids g0, g1, and so on.
///
/// Uses the same generator as the axiom audit, so callers that need raw
/// deterministic samples (identity spot checks, external tooling) see the
/// exact distribution the audit would. No magnitude floor is applied.
pub fn sample_vectors(config: &AuditConfig, count: usize) -> Result<Vec<Vector>> {
    config.validate()?;
    let mut sampler = Sampler::new(config, false);
    (0..count).map(|i| sampler.draw(&format!("g{i}"))).collect()
}

/// A sampled pair on which the joint distance left its bracket around the
/// base Minkowski distance.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundViolation {
    pub trial_index: usize,
    pub u: Vector,
    pub v: Vector,
    pub base: f64,
    pub joint: f64,
}

/// Outcome of sampling the bracket base <= joint <= 3 * base.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub p: u32,
    pub trials_run: usize,
    pub failures: usize,
    pub first_violation: Option<BoundViolation>,
}

/// Sample random pairs and confirm the joint distance of order `p` stays
/// within one to three times the Minkowski distance of the same order.
pub fn verify_jdm_bound(config: &AuditConfig, p: u32) -> Result<BoundReport> {
    if p == 0 {
        return Err(Error::InvalidOrder);
    }
    config.validate()?;
    let mut sampler = Sampler::new(config, true);
    let pairs: Vec<(Vector, Vector)> = (0..config.trials)
        .map(|_| Ok((sampler.draw("u0")?, sampler.draw("u1")?)))
        .collect::<Result<_>>()?;
    let tol = config.tolerance;
    let outcomes = run_map(true, pairs.len(), |i| {
        let (u, v) = &pairs[i];
        let base = measures::minkowski_distance(u, v, p)?;
        let joint = measures::jdm(u, v, p)?;
        let violated = joint + tol < base || joint > 3.0 * base + tol;
        Ok(violated.then_some((base, joint)))
    });
    let trials_run = outcomes.len();
    let mut failures = 0;
    let mut first_violation = None;
    for (trial_index, outcome) in outcomes.into_iter().enumerate() {
        if let Some((base, joint)) = outcome? {
            failures += 1;
            if first_violation.is_none() {
                let (u, v) = &pairs[trial_index];
                first_violation = Some(BoundViolation {
                    trial_index,
                    u: u.clone(),
                    v: v.clone(),
                    base,
                    joint,
                });
            }
        }
    }
    Ok(BoundReport {
        p,
        trials_run,
        failures,
        first_violation,
    })
}
