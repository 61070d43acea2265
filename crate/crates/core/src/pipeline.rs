//! End-to-end run: equation → quartic → (translation) → Weierstrass cubic →
//! certified seed points → multiples nP → verified integer identities.

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{FactorBudget, Rational};
use crate::bridge::{BridgeError, QuarticCubicBridge};
use crate::equation::{clear_denominators, EquationError, IntegerSolution, Model};
use crate::quartic::{QuarticCurve, QuarticPoint};
use crate::weierstrass::{CurveError, CurvePoint, SquareCompletion, WeierstrassCurve};

pub const DEFAULT_SEARCH_HEIGHT: u64 = 100;
pub const DEFAULT_FAMILY_SIZE: u32 = 10;
pub const DEFAULT_MAX_SEARCH_SEEDS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("no rational points up to height {height}")]
    NoPointsFound { height: u64 },
    #[error(transparent)]
    Bridge(#[from] BridgeError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Equation(#[from] EquationError),
}

impl PipelineError {
    /// Failures while building the curves, as opposed to running out of points.
    pub fn is_curve_construction(&self) -> bool {
        matches!(
            self,
            PipelineError::Bridge(
                BridgeError::ConstantNotSquare(_)
                    | BridgeError::ZeroConstant
                    | BridgeError::SingularCubic(_)
            )
        )
    }
}

/// Which model a configured seed point lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedCurve {
    /// (t, v) on the quartic derived from the equation, before any translation.
    Quartic,
    /// (x, y) on the long Weierstrass cubic attached to the (translated) quartic.
    Cubic,
    /// (x, y) on the square-completed model y² = x³ + Fx² + Gx + H.
    Completed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedPoint {
    pub curve: SeedCurve,
    pub x: Rational,
    pub y: Rational,
}

impl SeedPoint {
    pub fn new(curve: SeedCurve, x: Rational, y: Rational) -> Self {
        SeedPoint { curve, x, y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub model: Model,
    pub search_height: u64,
    pub family_size: u32,
    /// Explicit seeds; when non-empty, search is only used to find a translation.
    pub seed_points: Vec<SeedPoint>,
    /// Translation t = T + shift applied before building the cubic. Chosen
    /// from the search when absent and the constant term is not a square.
    pub shift: Option<Rational>,
    /// Also emit families for pairwise sums of certified seeds.
    pub combine_seeds: bool,
    /// Cap on seeds taken from the search (both signs of v count separately).
    pub max_search_seeds: usize,
    pub budget: FactorBudget,
}

impl PipelineConfig {
    pub fn new(model: Model) -> Self {
        PipelineConfig {
            model,
            search_height: DEFAULT_SEARCH_HEIGHT,
            family_size: DEFAULT_FAMILY_SIZE,
            seed_points: Vec::new(),
            shift: None,
            combine_seeds: false,
            max_search_seeds: DEFAULT_MAX_SEARCH_SEEDS,
            budget: FactorBudget::default(),
        }
    }

    pub fn with_seeds(mut self, seeds: Vec<SeedPoint>) -> Self {
        self.seed_points = seeds;
        self
    }

    pub fn with_shift(mut self, shift: Rational) -> Self {
        self.shift = Some(shift);
        self
    }

    pub fn with_family_size(mut self, n: u32) -> Self {
        self.family_size = n;
        self
    }

    pub fn with_search_height(mut self, h: u64) -> Self {
        self.search_height = h;
        self
    }

    pub fn validate(&self) -> Result<(), PipelineError> {
        if self.family_size == 0 {
            return Err(PipelineError::InvalidConfig("family_size must be at least 1".into()));
        }
        if self.search_height == 0 {
            return Err(PipelineError::InvalidConfig("search_height must be at least 1".into()));
        }
        self.model.validate().map_err(|e| PipelineError::InvalidConfig(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SeedOrigin {
    /// Index into the configured seed list.
    Configured { index: usize },
    /// A point found by the quartic search (untranslated coordinates).
    Search { point: QuarticPoint },
    /// Sum of two earlier seeds.
    Sum { left: usize, right: usize },
}

impl fmt::Display for SeedOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedOrigin::Configured { index } => write!(f, "configured seed #{index}"),
            SeedOrigin::Search { point } => write!(f, "search point {point}"),
            SeedOrigin::Sum { left, right } => write!(f, "seed {left} + seed {right}"),
        }
    }
}

/// A point on the bridge cubic that passed the infinite-order check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Seed {
    pub origin: SeedOrigin,
    pub point: CurvePoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SolutionSource {
    /// n·(seed) mapped back to the quartic.
    Multiple { seed: usize, n: u32 },
    /// A searched quartic point used directly (only when no cubic is available).
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmittedSolution {
    pub source: SolutionSource,
    /// Point on the original quartic that produced the solution.
    pub t: Rational,
    pub v: Rational,
    pub mu: BigUint,
    pub mu_minimal: bool,
    pub solution: IntegerSolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub context: String,
    pub message: String,
}

impl Diagnostic {
    fn new(context: impl Into<String>, message: impl fmt::Display) -> Self {
        Diagnostic { context: context.into(), message: message.to_string() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.context, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    pub height: u64,
    pub points: Vec<QuarticPoint>,
}

/// The curves derived from a configuration, up to the Weierstrass models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveStages {
    pub quartic: QuarticCurve,
    pub search: Option<SearchSummary>,
    pub shift: Option<Rational>,
    pub working_quartic: QuarticCurve,
    pub bridge: Result<QuarticCubicBridge, PipelineError>,
}

impl CurveStages {
    pub fn completion(&self) -> Option<SquareCompletion> {
        self.bridge.as_ref().ok().map(|b| b.cubic().complete_square())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub quartic: QuarticCurve,
    pub search: Option<SearchSummary>,
    pub shift: Option<Rational>,
    pub working_quartic: QuarticCurve,
    pub bridge: Option<QuarticCubicBridge>,
    pub completed: Option<WeierstrassCurve>,
    pub seeds: Vec<Seed>,
    pub solutions: Vec<EmittedSolution>,
    pub diagnostics: Vec<Diagnostic>,
    /// Why the run stopped before generating families, if it did.
    pub halt: Option<PipelineError>,
}

fn has_usable_constant(quartic: &QuarticCurve) -> bool {
    matches!(quartic.constant_is_square(), Some(q) if !q.is_zero())
}

/// Ordering used to pick a translation point and to rank search seeds:
/// smaller height first, then smaller denominator, then positive t first.
fn seed_rank(p: &QuarticPoint) -> (BigInt, BigInt, BigInt, bool) {
    (p.t.height(), p.t.denom().clone(), p.t.numer().magnitude().clone().into(), p.t.is_negative())
}

fn by_height(points: &[QuarticPoint]) -> Vec<QuarticPoint> {
    let mut sorted = points.to_vec();
    sorted.sort_by_key(seed_rank);
    sorted
}

/// Derives the quartic, searches when needed, picks the translation and
/// builds the cubic. Construction failures are kept in `bridge`.
pub fn derive_curves(config: &PipelineConfig) -> Result<CurveStages, PipelineError> {
    config.validate()?;
    let quartic = config.model.quartic()?;
    let needs_translation = !has_usable_constant(&quartic);
    let search = if config.seed_points.is_empty() || (needs_translation && config.shift.is_none()) {
        Some(SearchSummary {
            height: config.search_height,
            points: quartic.search_points(config.search_height),
        })
    } else {
        None
    };

    let shift = match (&config.shift, needs_translation, &search) {
        (Some(s), _, _) => Some(s.clone()),
        (None, true, Some(summary)) => {
            by_height(&summary.points).into_iter().find(|p| !p.v.is_zero()).map(|p| p.t)
        }
        _ => None,
    };

    let working_quartic = match &shift {
        Some(s) => quartic.translate(s),
        None => quartic.clone(),
    };

    let bridge = if needs_translation && shift.is_none() {
        Err(PipelineError::NoPointsFound { height: config.search_height })
    } else {
        QuarticCubicBridge::new(&working_quartic).map_err(PipelineError::from)
    };

    Ok(CurveStages { quartic, search, shift, working_quartic, bridge })
}

/// Maps a cubic point back to the original quartic, undoing the translation.
pub fn cubic_to_quartic(
    bridge: &QuarticCubicBridge,
    shift: Option<&Rational>,
    point: &CurvePoint,
) -> Result<QuarticPoint, PipelineError> {
    let QuarticPoint { t, v } = bridge.from_cubic(point)?;
    let t = match shift {
        Some(s) => t + s,
        None => t,
    };
    Ok(QuarticPoint::new(t, v))
}

fn quartic_to_cubic(
    bridge: &QuarticCubicBridge,
    shift: Option<&Rational>,
    point: &QuarticPoint,
) -> Result<CurvePoint, PipelineError> {
    let t = match shift {
        Some(s) => &point.t - s,
        None => point.t.clone(),
    };
    Ok(bridge.to_cubic(&QuarticPoint::new(t, point.v.clone()))?)
}

fn solution_at(
    model: &Model,
    t: &Rational,
    v: &Rational,
    budget: &FactorBudget,
    source: SolutionSource,
) -> Result<EmittedSolution, PipelineError> {
    let rational = model.build_solution(t, v)?;
    let (solution, factor) = clear_denominators(&rational, budget)?;
    if !solution.is_verified() {
        return Err(EquationError::Unverified.into());
    }
    Ok(EmittedSolution {
        source,
        t: t.clone(),
        v: v.clone(),
        mu: factor.mu,
        mu_minimal: factor.minimal,
        solution,
    })
}

/// The integer identity coming from n·seed.
#[allow(clippy::too_many_arguments)]
pub fn emit_solution_for_multiple(
    bridge: &QuarticCubicBridge,
    shift: Option<&Rational>,
    model: &Model,
    seed: &CurvePoint,
    seed_index: usize,
    n: u32,
    budget: &FactorBudget,
) -> Result<EmittedSolution, PipelineError> {
    let point = bridge.cubic().multiply(n as i64, seed)?;
    emit_from_point(bridge, shift, model, &point, seed_index, n, budget)
}

fn emit_from_point(
    bridge: &QuarticCubicBridge,
    shift: Option<&Rational>,
    model: &Model,
    point: &CurvePoint,
    seed_index: usize,
    n: u32,
    budget: &FactorBudget,
) -> Result<EmittedSolution, PipelineError> {
    let QuarticPoint { t, v } = cubic_to_quartic(bridge, shift, point)?;
    solution_at(model, &t, &v, budget, SolutionSource::Multiple { seed: seed_index, n })
}

struct Collector {
    solutions: Vec<EmittedSolution>,
    seen: HashSet<(Vec<BigInt>, Vec<BigInt>)>,
    diagnostics: Vec<Diagnostic>,
}

impl Collector {
    fn push(&mut self, context: String, result: Result<EmittedSolution, PipelineError>) {
        match result {
            Ok(s) => {
                let key = (s.solution.quintic_values.clone(), s.solution.cubic_values.clone());
                if self.seen.insert(key) {
                    self.solutions.push(s);
                } else {
                    self.diagnostics.push(Diagnostic::new(context, "duplicate of an earlier solution"));
                }
            }
            Err(e) => self.diagnostics.push(Diagnostic::new(context, e)),
        }
    }
}

fn configured_seed(
    stages: &CurveStages,
    bridge: &QuarticCubicBridge,
    seed: &SeedPoint,
) -> Result<CurvePoint, PipelineError> {
    let (x, y) = (seed.x.clone(), seed.y.clone());
    match seed.curve {
        SeedCurve::Quartic => {
            let p = QuarticPoint::new(x, y);
            let image = quartic_to_cubic(bridge, stages.shift.as_ref(), &p)?;
            if image.is_infinity() {
                // (0, q) is the identity; its mirror (0, −q) is usable
                quartic_to_cubic(bridge, stages.shift.as_ref(), &p.negate_v())
            } else {
                Ok(image)
            }
        }
        SeedCurve::Cubic => {
            let p = CurvePoint::affine(x, y);
            if bridge.cubic().contains(&p) {
                Ok(p)
            } else {
                Err(CurveError::PointNotOnCurve(p).into())
            }
        }
        SeedCurve::Completed => {
            let completion = bridge.cubic().complete_square();
            let p = CurvePoint::affine(x, y);
            if !completion.target.contains(&p) {
                return Err(CurveError::PointNotOnCurve(p).into());
            }
            Ok(completion.backward(&p))
        }
    }
}

fn certify(
    cubic: &WeierstrassCurve,
    origin: SeedOrigin,
    point: CurvePoint,
    seeds: &mut Vec<Seed>,
    diagnostics: &mut Vec<Diagnostic>,
) {
    match cubic.torsion_order(&point) {
        Ok(None) => seeds.push(Seed { origin, point }),
        Ok(Some(order)) => diagnostics.push(Diagnostic::new(
            origin.to_string(),
            format!("{point} is torsion of order {order}, discarded"),
        )),
        Err(e) => diagnostics.push(Diagnostic::new(origin.to_string(), e)),
    }
}

/// Runs every stage and collects what each produced. Only an invalid
/// configuration is an error; curve failures end up in `halt` and per-point
/// failures in `diagnostics`.
pub fn run(config: &PipelineConfig) -> Result<PipelineReport, PipelineError> {
    let stages = derive_curves(config)?;
    let mut diagnostics = Vec::new();
    if let Some(search) = &stages.search {
        for p in search.points.iter().filter(|p| p.is_ramification()) {
            diagnostics.push(Diagnostic::new(format!("search point {p}"), "v = 0, a ramification point of the quartic"));
        }
    }
    let mut collector = Collector { solutions: Vec::new(), seen: HashSet::new(), diagnostics };

    let bridge = match &stages.bridge {
        Ok(b) => b.clone(),
        Err(e) => {
            // no cubic: the searched points are all we have
            if let Some(search) = &stages.search {
                for p in &search.points {
                    let r = solution_at(&config.model, &p.t, &p.v, &config.budget, SolutionSource::Search);
                    collector.push(format!("search point {p}"), r);
                }
            }
            return Ok(PipelineReport {
                quartic: stages.quartic.clone(),
                search: stages.search.clone(),
                shift: stages.shift.clone(),
                working_quartic: stages.working_quartic.clone(),
                bridge: None,
                completed: None,
                seeds: Vec::new(),
                solutions: collector.solutions,
                diagnostics: collector.diagnostics,
                halt: Some(e.clone()),
            });
        }
    };
    let cubic = bridge.cubic();
    let shift = stages.shift.as_ref();

    let mut candidates: Vec<(SeedOrigin, CurvePoint)> = Vec::new();
    if !config.seed_points.is_empty() {
        for (index, seed) in config.seed_points.iter().enumerate() {
            let origin = SeedOrigin::Configured { index };
            match configured_seed(&stages, &bridge, seed) {
                Ok(p) => candidates.push((origin, p)),
                Err(e) => collector.diagnostics.push(Diagnostic::new(origin.to_string(), e)),
            }
        }
    } else if let Some(search) = &stages.search {
        let mut seen = HashSet::new();
        'points: for p in by_height(&search.points) {
            for q in [p.clone(), p.negate_v()] {
                if candidates.len() >= config.max_search_seeds {
                    break 'points;
                }
                match quartic_to_cubic(&bridge, shift, &q) {
                    Ok(img) if img.is_infinity() => {}
                    Ok(img) => {
                        if seen.insert(img.clone()) {
                            candidates.push((SeedOrigin::Search { point: q }, img));
                        }
                    }
                    Err(e) => collector.diagnostics.push(Diagnostic::new(format!("search point {q}"), e)),
                }
                if p.v.is_zero() {
                    break;
                }
            }
        }
    }

    let mut seeds: Vec<Seed> = Vec::new();
    for (origin, point) in candidates {
        certify(cubic, origin, point, &mut seeds, &mut collector.diagnostics);
    }
    if config.combine_seeds {
        let base = seeds.clone();
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let sum = cubic.add(&base[i].point, &base[j].point)?;
                certify(cubic, SeedOrigin::Sum { left: i, right: j }, sum, &mut seeds, &mut collector.diagnostics);
            }
        }
    }

    for (index, seed) in seeds.iter().enumerate() {
        let mut multiple = CurvePoint::Infinity;
        for n in 1..=config.family_size {
            multiple = cubic.add(&multiple, &seed.point)?;
            let r = emit_from_point(&bridge, shift, &config.model, &multiple, index, n, &config.budget);
            collector.push(format!("seed {index}, n = {n}"), r);
        }
    }

    let completed = Some(cubic.complete_square().target);
    Ok(PipelineReport {
        quartic: stages.quartic,
        search: stages.search,
        shift: stages.shift,
        working_quartic: stages.working_quartic,
        bridge: Some(bridge),
        completed,
        seeds,
        solutions: collector.solutions,
        diagnostics: collector.diagnostics,
        halt: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equation::{DiophantineEquation, PairedEquation, PairedParametrization, Parametrization};

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn ri(n: i64) -> Rational {
        Rational::from(n)
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn example31() -> Model {
        Model::direct(
            DiophantineEquation::new(ri(1), ri(1), vec![ri(1)], vec![ri(1)]).unwrap(),
            Parametrization { x1: ri(1), alphas: vec![ri(2)], betas: vec![ri(2)] },
        )
        .unwrap()
    }

    fn example33_m17() -> Model {
        Model::paired(
            PairedEquation::new(vec![ri(3), ri(3)], vec![ri(17), ri(17)]).unwrap(),
            PairedParametrization { xs: vec![ri(1), ri(2)], ys: vec![ri(1)] },
        )
        .unwrap()
    }

    fn g1() -> SeedPoint {
        SeedPoint::new(SeedCurve::Completed, r(-44, 3), r(20, 3))
    }

    fn g2() -> SeedPoint {
        SeedPoint::new(SeedCurve::Completed, r(-152, 9), r(140, 27))
    }

    #[test]
    fn first_generator_gives_small_identity() {
        let config = PipelineConfig::new(example31()).with_seeds(vec![g1()]).with_shift(ri(1)).with_family_size(1);
        let report = run(&config).unwrap();
        assert!(report.halt.is_none());
        assert_eq!(report.seeds.len(), 1);
        let s = &report.solutions[0];
        assert_eq!((s.t.clone(), s.v.clone()), (ri(7), ri(-117)));
        assert_eq!(s.solution.quintic_values, ints(&[8, 6, 14]));
        assert_eq!(s.solution.cubic_values, ints(&[-110, 124, 14]));
        assert!(report.search.is_none());
    }

    #[test]
    fn doubled_second_generator() {
        let config = PipelineConfig::new(example31()).with_seeds(vec![g2()]).with_shift(ri(1));
        let stages = derive_curves(&config).unwrap();
        let bridge = stages.bridge.unwrap();
        let seed = bridge.cubic().complete_square().backward(&CurvePoint::affine(r(-152, 9), r(140, 27)));
        let s = emit_solution_for_multiple(&bridge, Some(&ri(1)), &example31(), &seed, 0, 2, &config.budget).unwrap();
        assert_eq!((s.t.clone(), s.v.clone()), (r(11, 47), r(2943, 2209)));
        assert_eq!(s.mu, 47u32.into());
        assert_eq!(s.solution.quintic_values, ints(&[128122, -79524, 48598]));
        assert_eq!(s.solution.cubic_values, ints(&[359227580, -251874598, 107352982]));
    }

    #[test]
    fn paired_example_from_cubic_seed() {
        let config = PipelineConfig::new(example33_m17())
            .with_seeds(vec![SeedPoint::new(SeedCurve::Cubic, ri(4), r(160, 17))])
            .with_family_size(3);
        let report = run(&config).unwrap();
        assert!(report.shift.is_none());
        let first = &report.solutions[0];
        assert_eq!(first.source, SolutionSource::Multiple { seed: 0, n: 1 });
        assert_eq!(first.solution.quintic_values, ints(&[99, 45, 126, 18]));
        assert_eq!(first.solution.cubic_values, ints(&[1890, -594, 891, 405]));
        assert_eq!(report.solutions.len(), 3);
        assert!(report.solutions.iter().all(|s| s.solution.is_verified()));
    }

    #[test]
    fn translation_chosen_from_search() {
        let config = PipelineConfig::new(example31()).with_search_height(10).with_family_size(2);
        let report = run(&config).unwrap();
        // (1, 3) and (−1, 3) tie on height; positive t wins
        assert_eq!(report.shift, Some(ri(1)));
        assert_eq!(report.working_quartic.coeff0(), &ri(9));
        assert!(!report.seeds.is_empty());
        assert!(!report.solutions.is_empty());
        assert!(report.solutions.iter().all(|s| s.solution.is_verified()));
    }

    #[test]
    fn singular_cubic_still_reports_points() {
        // v² = t²(t² − 1)/3 has a node at t = 0
        let model = Model::direct(
            DiophantineEquation::new(ri(1), ri(1), vec![], vec![]).unwrap(),
            Parametrization { x1: ri(0), alphas: vec![], betas: vec![] },
        )
        .unwrap();
        let report = run(&PipelineConfig::new(model).with_search_height(3)).unwrap();
        let points = &report.search.as_ref().unwrap().points;
        // brute force over t = p/q, |p|, q ≤ 3: only t ∈ {0, ±1, ±2} give squares
        assert_eq!(
            points,
            &vec![
                QuarticPoint::new(ri(-2), ri(2)),
                QuarticPoint::new(ri(-1), ri(0)),
                QuarticPoint::new(ri(0), ri(0)),
                QuarticPoint::new(ri(1), ri(0)),
                QuarticPoint::new(ri(2), ri(2)),
            ]
        );
        assert_eq!(report.shift, Some(ri(2)));
        assert!(matches!(report.halt, Some(PipelineError::Bridge(BridgeError::SingularCubic(_)))));
        // t = ±1 give nontrivial (if degenerate-looking) solutions, t = 0 does not
        assert_eq!(report.solutions.len(), 4);
        assert!(report.solutions.iter().all(|s| s.source == SolutionSource::Search));
        assert!(report.diagnostics.iter().any(|d| d.message.contains("trivial")));
    }

    #[test]
    fn no_points_found() {
        // v² = (1/3)t⁴ + 3t² + 5/3 has no points up to height 2
        let model = Model::direct(
            DiophantineEquation::new(ri(1), ri(1), vec![], vec![]).unwrap(),
            Parametrization { x1: ri(1), alphas: vec![], betas: vec![] },
        )
        .unwrap();
        let quartic = model.quartic().unwrap();
        assert_eq!(quartic.coeff0(), &r(5, 3));
        let report = run(&PipelineConfig::new(model).with_search_height(2)).unwrap();
        assert_eq!(report.search.as_ref().unwrap().points, vec![]);
        assert_eq!(report.halt, Some(PipelineError::NoPointsFound { height: 2 }));
        assert!(report.solutions.is_empty());
    }

    #[test]
    fn bad_seed_is_a_diagnostic() {
        let config = PipelineConfig::new(example31())
            .with_seeds(vec![SeedPoint::new(SeedCurve::Completed, ri(1), ri(1)), g1()])
            .with_shift(ri(1))
            .with_family_size(1);
        let report = run(&config).unwrap();
        assert_eq!(report.seeds.len(), 1);
        assert_eq!(report.solutions.len(), 1);
        assert_eq!(report.diagnostics.len(), 1);
    }

    #[test]
    fn invalid_config() {
        let config = PipelineConfig::new(example31()).with_family_size(0);
        assert!(matches!(run(&config), Err(PipelineError::InvalidConfig(_))));
    }

    #[test]
    fn deterministic() {
        let config = PipelineConfig::new(example31()).with_seeds(vec![g1(), g2()]).with_shift(ri(1)).with_family_size(3);
        assert_eq!(run(&config).unwrap(), run(&config).unwrap());
    }
}
