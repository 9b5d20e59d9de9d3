//! Seeded, reproducible verification suites.
//!
//! Every suite runs a fixed number of independent trials. Trial `i` draws
//! its randomness from a dedicated generator keyed by
//! `(master seed, suite name, stream label, i)`, so a suite is reproducible
//! in isolation and trials can run concurrently without changing the
//! outcome. Random bicomplex values draw their four real coordinates
//! uniformly from `[-10, 10]`; five percent of the time one idempotent
//! component is scaled down to `1e-14` of its size to stress the
//! tolerance handling near the null cone.
//!
//! Each trial reports a violation measure (a relative or absolute defect,
//! depending on the suite); a trial fails when the measure exceeds the
//! suite tolerance. Sub-checks with a stricter tolerance are folded in
//! scaled by the tolerance ratio, so the single reported `max_violation`
//! keeps the invariant "zero failures iff max violation within tolerance".
//! Hard failures (a missing error, a wrong classification) record the
//! sentinel violation `1.0`.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::bicomplex::{Component, Conjugation, Modulus};
use crate::ortho::gram_schmidt;
use crate::scalar::Real as _;
use crate::{
    Bicomplex64, BicomplexSequence64, Error, Ket64, OrthonormalSystem64, RieszFischerMap64,
    ScalarProductSpec64,
};

/// The named property suites exposed by the verification front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    CoreIdentities,
    Conjugations,
    Moduli,
    Norms,
    ScalarAxioms,
    Schwarz,
    Continuity,
    GramSchmidt,
    BestApprox,
    L2NormEquality,
    RfIsometry,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::CoreIdentities,
        Suite::Conjugations,
        Suite::Moduli,
        Suite::Norms,
        Suite::ScalarAxioms,
        Suite::Schwarz,
        Suite::Continuity,
        Suite::GramSchmidt,
        Suite::BestApprox,
        Suite::L2NormEquality,
        Suite::RfIsometry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CoreIdentities => "core-identities",
            Suite::Conjugations => "conjugations",
            Suite::Moduli => "moduli",
            Suite::Norms => "norms",
            Suite::ScalarAxioms => "scalar-axioms",
            Suite::Schwarz => "schwarz",
            Suite::Continuity => "continuity",
            Suite::GramSchmidt => "gram-schmidt",
            Suite::BestApprox => "best-approx",
            Suite::L2NormEquality => "l2-norm-equality",
            Suite::RfIsometry => "rf-isometry",
        }
    }

    /// The pass/fail threshold on the violation measure.
    pub fn tolerance(self) -> f64 {
        match self {
            Suite::CoreIdentities => 0.0,
            Suite::Conjugations => 1e-12,
            Suite::Moduli => 1e-11,
            Suite::Norms => 1e-12,
            Suite::ScalarAxioms => 1e-10,
            Suite::Schwarz => 1e-10,
            Suite::Continuity => 1e-10,
            Suite::GramSchmidt => 1e-10,
            Suite::BestApprox => 1e-10,
            Suite::L2NormEquality => 1e-12,
            Suite::RfIsometry => 1e-10,
        }
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

/// Knobs shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub trials: u64,
    pub seed: u64,
    pub dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 1000,
            seed: 0,
            dim: 16,
        }
    }
}

/// Aggregate outcome of one suite run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub trials: u64,
    pub failures: u64,
    pub max_violation: f64,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Violation recorded when an expected error is missing or a boolean
/// classification is wrong.
const HARD_FAILURE: f64 = 1.0;

/// Runs one suite. Deterministic for a fixed `(suite, config)` regardless
/// of how many worker threads carry the trials.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteOutcome {
    let trial = |i: u64| -> f64 {
        let mut rng = trial_rng(cfg.seed, suite.name(), "trial", i);
        match suite {
            Suite::CoreIdentities => core_identities_trial(),
            Suite::Conjugations => conjugations_trial(&mut rng),
            Suite::Moduli => moduli_trial(&mut rng),
            Suite::Norms => norms_trial(&mut rng),
            Suite::ScalarAxioms => scalar_axioms_trial(&mut rng, cfg.dim),
            Suite::Schwarz => schwarz_trial(&mut rng, cfg.dim),
            Suite::Continuity => continuity_trial(&mut rng, cfg.dim),
            Suite::GramSchmidt => gram_schmidt_trial(&mut rng, cfg.dim),
            Suite::BestApprox => best_approx_trial(&mut rng, cfg.dim),
            Suite::L2NormEquality => l2_norm_equality_trial(&mut rng, cfg.dim),
            Suite::RfIsometry => {
                // Shared read-only bases are derived outside the trial
                // stream; see below.
                unreachable!("handled separately")
            }
        }
    };

    let violations: Vec<f64> = if suite == Suite::RfIsometry {
        let bases = rf_bases(cfg);
        (0..cfg.trials)
            .into_par_iter()
            .map(|i| {
                let mut rng = trial_rng(cfg.seed, suite.name(), "trial", i);
                rf_isometry_trial(&mut rng, &bases[(i % bases.len() as u64) as usize])
            })
            .collect()
    } else {
        (0..cfg.trials).into_par_iter().map(trial).collect()
    };

    let fixed = fixed_checks(suite);
    let tol = suite.tolerance();
    let failures = violations.iter().chain(&fixed).filter(|&&v| v > tol).count() as u64;
    let max_violation = violations
        .iter()
        .chain(&fixed)
        .fold(0.0_f64, |m, &v| m.max(v));
    SuiteOutcome {
        suite,
        trials: cfg.trials,
        failures,
        max_violation,
    }
}

/// Deterministic one-off checks that are part of a suite but not of the
/// randomized trial stream.
fn fixed_checks(suite: Suite) -> Vec<f64> {
    match suite {
        Suite::Norms => {
            // Equality witness for the multiplicative norm bound:
            // |e1*e1| = sqrt(2)*|e1|^2 up to 1e-15, folded at the
            // tolerance ratio 1e-12/1e-15.
            let e1 = Bicomplex64::e1();
            let defect = ((e1 * e1).norm() - 2.0_f64.sqrt() * e1.norm() * e1.norm()).abs();
            vec![defect * 1e3]
        }
        Suite::GramSchmidt => {
            let spec = ScalarProductSpec64::standard(2);
            let null_input = Ket64::new(vec![Bicomplex64::e1(), zero()]).unwrap();
            let breakdown = match gram_schmidt(spec.clone(), &[null_input]) {
                Err(Error::NullConeBreakdown { index: 0 }) => 0.0,
                _ => HARD_FAILURE,
            };
            let basis = standard_basis(3);
            let sys = gram_schmidt(ScalarProductSpec64::standard(3), &basis).unwrap();
            let unchanged = basis
                .iter()
                .zip(sys.kets())
                .map(|(a, b)| ket_dist(a, b))
                .fold(0.0_f64, f64::max);
            vec![breakdown, unchanged]
        }
        _ => Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// randomness

/// Derives the generator for one trial from the master seed, the suite
/// name, a stream label and a counter.
pub fn trial_rng(seed: u64, suite: &str, stream: &str, index: u64) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(suite.as_bytes());
    h.update(stream.as_bytes());
    h.update(index.to_le_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

/// Uniform coordinates in `[-10, 10]^4`, with a five percent chance of
/// scaling one idempotent component down to `1e-14` of its size.
pub fn random_bicomplex(rng: &mut impl Rng) -> Bicomplex64 {
    let mut w = Bicomplex64::from_coords(
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
    );
    if rng.gen_bool(0.05) {
        let mut p = w.to_idempotent();
        if rng.gen_bool(0.5) {
            p.h1 = p.h1.scale(1e-14);
        } else {
            p.h2 = p.h2.scale(1e-14);
        }
        w = Bicomplex64::from_idempotent(p);
    }
    w
}

pub fn random_ket(rng: &mut impl Rng, dim: usize) -> Ket64 {
    Ket64::new((0..dim).map(|_| random_bicomplex(rng)).collect()).unwrap()
}

pub fn random_spec(rng: &mut impl Rng, dim: usize) -> ScalarProductSpec64 {
    let mut draw = || (0..dim).map(|_| rng.gen_range(0.1..10.0)).collect();
    let w1 = draw();
    let w2 = draw();
    ScalarProductSpec64::new(dim, w1, w2).unwrap()
}

/// A random orthonormal basis built by orthonormalizing random kets.
/// Random families are independent so breakdown does not occur in
/// practice; if it ever does the draw is retried.
pub fn random_basis(rng: &mut impl Rng, spec: &ScalarProductSpec64) -> OrthonormalSystem64 {
    loop {
        let kets: Vec<Ket64> = (0..spec.dim()).map(|_| random_ket(rng, spec.dim())).collect();
        if let Ok(sys) = gram_schmidt(spec.clone(), &kets) {
            return sys;
        }
    }
}

// ---------------------------------------------------------------------------
// cross-check route

/// Classical Gram-Schmidt carried out in straight bicomplex arithmetic
/// (bicomplex projections, division by the bicomplex square root of the
/// self-product), with one re-orthogonalization pass. This is the
/// independent route used to cross-check the componentwise implementation.
pub fn reference_gram_schmidt(
    space: &ScalarProductSpec64,
    kets: &[Ket64],
) -> Result<Vec<Ket64>, Error> {
    let scale_sq = kets
        .iter()
        .map(|k| space.scalar_product(k, k).map(|p| p.norm()))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .fold(0.0_f64, f64::max);

    let mut out: Vec<Ket64> = Vec::with_capacity(kets.len());
    for (i, ket) in kets.iter().enumerate() {
        let mut v = ket.clone();
        for _ in 0..2 {
            for q in &out {
                let c = space.scalar_product(q, &v)?;
                v = &v - &q.scale(c);
            }
        }
        let p = space.scalar_product(&v, &v)?;
        let pair = p.to_idempotent();
        let floor = f64::GS_BREAKDOWN_TOL * scale_sq;
        if pair.h1.norm() <= floor || pair.h2.norm() <= floor {
            return Err(Error::NullConeBreakdown { index: i });
        }
        let inv_root = p.nth_root(2).inverse().map_err(|_| Error::NullConeBreakdown { index: i })?;
        out.push(v.scale(inv_root));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// violation measures

fn zero() -> Bicomplex64 {
    Bicomplex64::from_real(0.0)
}

fn one() -> Bicomplex64 {
    Bicomplex64::from_real(1.0)
}

/// Relative distance between two bicomplex values.
fn reldist(a: Bicomplex64, b: Bicomplex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn reldist_f(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Positive part of `lhs - rhs`, relative to the bound: how far an
/// inequality `lhs <= rhs` is overshot.
fn overshoot(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).max(0.0) / rhs.abs().max(1.0)
}

fn ket_dist(a: &Ket64, b: &Ket64) -> f64 {
    let diff: f64 = a
        .coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(&x, &y)| (x - y).norm_sqr())
        .sum();
    let scale: f64 = a.coeffs().iter().map(|c| c.norm_sqr()).sum();
    diff.sqrt() / scale.sqrt().max(1.0)
}

fn seq_dist(a: &BicomplexSequence64, b: &BicomplexSequence64) -> f64 {
    let diff: f64 = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(&x, &y)| (x - y).norm_sqr())
        .sum();
    diff.sqrt() / a.l2_norm().max(b.l2_norm()).max(1.0)
}

/// Defect of membership in the positive hyperbolic cone, together with
/// the residual imaginary part that would take the value out of the
/// hyperbolic plane in the first place.
fn d_plus_defect(p: Bicomplex64) -> f64 {
    let pair = p.to_idempotent();
    let scale = p.norm().max(1.0);
    let imag = pair.h1.im.abs().max(pair.h2.im.abs()) / scale;
    let negative = (-pair.h1.re.min(pair.h2.re)).max(0.0) / scale;
    let member = if p.hyperbolic_part().in_d_plus() {
        0.0
    } else {
        HARD_FAILURE
    };
    imag.max(negative).max(member)
}

// ---------------------------------------------------------------------------
// suites

fn core_identities_trial() -> f64 {
    let e1 = Bicomplex64::e1();
    let e2 = Bicomplex64::e2();
    let i1 = Bicomplex64::i1();
    let i2 = Bicomplex64::i2();
    let j = Bicomplex64::j();
    let checks = [
        (e1 * e1 - e1).norm(),
        (e2 * e2 - e2).norm(),
        (e1 + e2 - one()).norm(),
        (e1 * e2).norm(),
        (e1.conj(Conjugation::Dag3) - e1).norm(),
        (e2.conj(Conjugation::Dag3) - e2).norm(),
        (i1 * i2 - j).norm(),
        (i1 * j + i2).norm(),
        (i2 * j + i1).norm(),
        (j * j - one()).norm(),
        (i1 * i1 + one()).norm(),
        (i2 * i2 + one()).norm(),
        (Bicomplex64::from_idempotent(one().to_idempotent()) - one()).norm(),
        (Bicomplex64::from_idempotent(j.to_idempotent()) - j).norm(),
    ];
    checks.into_iter().fold(0.0, f64::max)
}

fn conjugations_trial(rng: &mut impl Rng) -> f64 {
    let s = random_bicomplex(rng);
    let t = random_bicomplex(rng);
    let mut v: f64 = 0.0;
    for k in Conjugation::ALL {
        v = v.max(reldist(s.conj(k).conj(k), s));
        v = v.max(reldist((s * t).conj(k), s.conj(k) * t.conj(k)));
        v = v.max(reldist((s + t).conj(k), s.conj(k) + t.conj(k)));
    }
    v
}

fn moduli_trial(rng: &mut impl Rng) -> f64 {
    let s = random_bicomplex(rng);
    let t = random_bicomplex(rng);
    // both sides are quadratic in each operand, so the operand scale
    // |s|^2*|t|^2 is the right denominator: near the null cone the values
    // themselves cancel toward zero while the rounding noise does not
    let scale = s.norm_sqr() * t.norm_sqr();
    let mut v: f64 = 0.0;
    for k in Modulus::ALL {
        let lhs = (s * t).modulus_sq(k);
        let rhs = s.modulus_sq(k) * t.modulus_sq(k);
        v = v.max((lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(scale).max(1.0));
    }
    v.max(d_plus_defect(s.modulus_sq(Modulus::J)))
}

fn norms_trial(rng: &mut impl Rng) -> f64 {
    let s = random_bicomplex(rng);
    let t = random_bicomplex(rng);
    let triangle = overshoot((s + t).norm(), s.norm() + t.norm());
    let product = overshoot((s * t).norm(), 2.0_f64.sqrt() * s.norm() * t.norm());
    triangle.max(product)
}

fn scalar_axioms_trial(rng: &mut impl Rng, dim: usize) -> f64 {
    let spec = random_spec(rng, dim);
    let psi = random_ket(rng, dim);
    let phi = random_ket(rng, dim);
    let chi = random_ket(rng, dim);
    let s = random_bicomplex(rng);

    let sp = |a: &Ket64, b: &Ket64| spec.scalar_product(a, b).unwrap();
    let mut v: f64 = 0.0;

    // additivity in the second slot
    v = v.max(reldist(sp(&psi, &(&phi + &chi)), sp(&psi, &phi) + sp(&psi, &chi)));
    // bicomplex homogeneity in the second slot
    v = v.max(reldist(sp(&psi, &phi.scale(s)), s * sp(&psi, &phi)));
    // hermiticity under the third conjugation
    v = v.max(reldist(sp(&psi, &phi), sp(&phi, &psi).conj(Conjugation::Dag3)));
    // conjugate homogeneity in the first slot
    v = v.max(reldist(sp(&psi.scale(s), &phi), s.conj(Conjugation::Dag3) * sp(&psi, &phi)));
    // hyperbolic positivity of the self-product
    v = v.max(d_plus_defect(sp(&psi, &psi)));

    let norm = |a: &Ket64| spec.induced_norm(a).unwrap();
    // norm agrees with the Euclidean norm of the principal root
    v = v.max(reldist_f(norm(&psi), sp(&psi, &psi).nth_root(2).norm()));
    // componentwise consistency of the product
    for k in Component::BOTH {
        let direct = spec.component_product(
            k,
            &psi.component_coords(k),
            &phi.component_coords(k),
        );
        let projected = sp(&psi, &phi).project(k);
        v = v.max((projected - direct).norm() / direct.norm().max(1.0));
    }
    // norm axioms: triangle and the relaxed homogeneity bound
    v = v.max(overshoot(norm(&(&psi + &phi)), norm(&psi) + norm(&phi)));
    v = v.max(overshoot(norm(&psi.scale(s)), 2.0_f64.sqrt() * s.norm() * norm(&psi)));
    // homogeneity equality witness: w = e1 on a ket with zero second part
    let half_ket = psi.split(Component::One);
    let e1 = Bicomplex64::e1();
    v = v.max(reldist_f(
        norm(&half_ket.scale(e1)),
        2.0_f64.sqrt() * e1.norm() * norm(&half_ket),
    ));
    // operational nondegeneracy: coefficients are bounded by the norm
    let min_w = Component::BOTH
        .into_iter()
        .flat_map(|k| spec.weights(k).iter().copied())
        .fold(f64::INFINITY, f64::min);
    let coeff_max = psi.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    v = v.max(overshoot(coeff_max, norm(&psi) / min_w.sqrt()));
    v
}

fn schwarz_trial(rng: &mut impl Rng, dim: usize) -> f64 {
    let spec = random_spec(rng, dim);
    let psi = random_ket(rng, dim);
    let phi = random_ket(rng, dim);
    let product = spec.scalar_product(&psi, &phi).unwrap().norm();
    let bound = 2.0_f64.sqrt()
        * spec.induced_norm(&psi).unwrap()
        * spec.induced_norm(&phi).unwrap();
    overshoot(product, bound)
}

fn continuity_trial(rng: &mut impl Rng, dim: usize) -> f64 {
    let spec = random_spec(rng, dim);
    let psi = random_ket(rng, dim);
    let phi = random_ket(rng, dim);
    // perturbations spanning several orders of magnitude
    let eps: f64 = 10.0_f64.powf(rng.gen_range(-8.0..0.0));
    let d_psi = random_ket(rng, dim).scale(Bicomplex64::from_real(eps));
    let d_phi = random_ket(rng, dim).scale(Bicomplex64::from_real(eps));
    let psi_n = &psi + &d_psi;
    let phi_n = &phi + &d_phi;

    let sp = |a: &Ket64, b: &Ket64| spec.scalar_product(a, b).unwrap();
    let norm = |a: &Ket64| spec.induced_norm(a).unwrap();
    let drift = (sp(&psi_n, &phi_n) - sp(&psi, &phi)).norm();
    let bound = 2.0_f64.sqrt()
        * (norm(&d_psi) * norm(&d_phi) + norm(&d_psi) * norm(&phi) + norm(&psi) * norm(&d_phi));
    overshoot(drift, bound)
}

fn gram_schmidt_trial(rng: &mut impl Rng, dim: usize) -> f64 {
    let dim = dim.min(32);
    let spec = random_spec(rng, dim);
    let kets: Vec<Ket64> = (0..dim).map(|_| random_ket(rng, dim)).collect();
    let sys = match gram_schmidt(spec.clone(), &kets) {
        Ok(sys) => sys,
        Err(_) => return HARD_FAILURE,
    };
    let mut v: f64 = 0.0;
    for (i, a) in sys.kets().iter().enumerate() {
        for (j, b) in sys.kets().iter().enumerate().skip(i) {
            let p = spec.scalar_product(a, b).unwrap();
            let expected = if i == j { one() } else { zero() };
            v = v.max((p - expected).norm());
        }
    }
    // cross-check against the straight bicomplex-arithmetic route
    let reference = match reference_gram_schmidt(&spec, &kets) {
        Ok(r) => r,
        Err(_) => return HARD_FAILURE,
    };
    for (a, b) in sys.kets().iter().zip(&reference) {
        v = v.max(ket_dist(a, b));
    }
    v
}

fn best_approx_trial(rng: &mut impl Rng, dim: usize) -> f64 {
    let spec = random_spec(rng, dim);
    let sys = random_basis(rng, &spec);
    let psi = random_ket(rng, dim);
    let alphas: Vec<Bicomplex64> = (0..dim).map(|_| random_bicomplex(rng)).collect();

    let mut v: f64 = 0.0;
    let mut previous = f64::INFINITY;
    for n in 0..=dim {
        let (proj, residual) = sys.best_approximation(&psi, n).unwrap();
        // no free coefficient choice beats the Fourier projection
        let mut free = Ket64::zero(dim);
        for (alpha, m) in alphas[..n].iter().zip(sys.kets()) {
            free = &free + &m.scale(*alpha);
        }
        let free_residual = spec.induced_norm(&(&psi - &free)).unwrap();
        v = v.max(residual - free_residual);
        // residuals shrink as the prefix grows; tolerance 1e-12, folded
        // at the ratio to the suite tolerance 1e-10
        if n > 0 {
            v = v.max((residual - previous) * 1e2);
        }
        previous = residual;
        // the leftover is orthogonal to every member used
        let rest = &psi - &proj;
        for m in &sys.kets()[..n] {
            let p = spec.scalar_product(m, &rest).unwrap();
            v = v.max(p.norm() / psi.coeffs().iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt().max(1.0));
        }
    }
    // a full basis reconstructs: residual at n = dim is zero
    let (_, full_residual) = sys.best_approximation(&psi, dim).unwrap();
    v = v.max(full_residual / spec.induced_norm(&psi).unwrap().max(1.0));
    v
}

fn l2_norm_equality_trial(rng: &mut impl Rng, dim: usize) -> f64 {
    let s = BicomplexSequence64::new((0..dim).map(|_| random_bicomplex(rng)).collect()).unwrap();
    let h1 = s.split(Component::One);
    let h2 = s.split(Component::Two);
    let component_sum: f64 = h1.iter().chain(&h2).map(|z| z.norm_sqr()).sum();
    let via_split = (component_sum / 2.0).sqrt();
    reldist_f(s.l2_norm(), via_split)
}

fn rf_bases(cfg: &SuiteConfig) -> Vec<(ScalarProductSpec64, RieszFischerMap64)> {
    (0..20)
        .map(|b| {
            let mut rng = trial_rng(cfg.seed, Suite::RfIsometry.name(), "basis", b);
            let spec = random_spec(&mut rng, cfg.dim);
            let sys = random_basis(&mut rng, &spec);
            let map = RieszFischerMap64::new(sys).unwrap();
            (spec, map)
        })
        .collect()
}

fn rf_isometry_trial(
    rng: &mut impl Rng,
    basis: &(ScalarProductSpec64, RieszFischerMap64),
) -> f64 {
    let (spec, map) = basis;
    let dim = spec.dim();
    let psi = random_ket(rng, dim);
    let phi = random_ket(rng, dim);
    let alpha = random_bicomplex(rng);
    let beta = random_bicomplex(rng);

    let mut v: f64 = 0.0;
    // isometry
    let image = map.forward(&psi).unwrap();
    v = v.max(reldist_f(image.l2_norm(), spec.induced_norm(&psi).unwrap()));
    // bicomplex linearity, null-cone scalars included
    let combined = map
        .forward(&(&psi.scale(alpha) + &phi.scale(beta)))
        .unwrap();
    let separate: Vec<Bicomplex64> = image
        .values()
        .iter()
        .zip(map.forward(&phi).unwrap().values())
        .map(|(&a, &b)| alpha * a + beta * b)
        .collect();
    v = v.max(seq_dist(
        &combined,
        &BicomplexSequence64::new(separate).unwrap(),
    ));
    // round trips in both directions
    let back = map.inverse(&image).unwrap();
    v = v.max(ket_dist(&back, &psi));
    let s = BicomplexSequence64::new((0..dim).map(|_| random_bicomplex(rng)).collect()).unwrap();
    let forward_again = map.forward(&map.inverse(&s).unwrap()).unwrap();
    v = v.max(seq_dist(&forward_again, &s));
    // component lemma: e_k * T(psi) = T(e_k * psi)
    for k in Component::BOTH {
        let lhs = map.component(&psi, k).unwrap();
        let rhs = map.forward(&psi.split(k)).unwrap();
        v = v.max(seq_dist(&lhs, &rhs));
    }
    v
}

fn standard_basis(dim: usize) -> Vec<Ket64> {
    (0..dim)
        .map(|l| {
            let mut cs = vec![zero(); dim];
            cs[l] = one();
            Ket64::new(cs).unwrap()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("no-such-suite".parse::<Suite>().is_err());
    }

    #[test]
    fn trial_rng_is_reproducible_and_keyed() {
        let mut a = trial_rng(7, "norms", "trial", 3);
        let mut b = trial_rng(7, "norms", "trial", 3);
        assert_eq!(a.gen::<u64>(), b.gen::<u64>());
        let mut c = trial_rng(7, "norms", "trial", 4);
        let mut d = trial_rng(8, "norms", "trial", 3);
        let mut e = trial_rng(7, "moduli", "trial", 3);
        let base = trial_rng(7, "norms", "trial", 3).gen::<u64>();
        assert_ne!(c.gen::<u64>(), base);
        assert_ne!(d.gen::<u64>(), base);
        assert_ne!(e.gen::<u64>(), base);
    }

    #[test]
    fn every_suite_passes_on_a_smoke_run() {
        let cfg = SuiteConfig {
            trials: 25,
            seed: 11,
            dim: 6,
        };
        for suite in Suite::ALL {
            let outcome = run_suite(suite, &cfg);
            assert_eq!(outcome.failures, 0, "{} violated: {outcome:?}", suite.name());
            assert!(outcome.max_violation <= suite.tolerance());
        }
    }

    #[test]
    fn outcomes_are_deterministic() {
        let cfg = SuiteConfig {
            trials: 40,
            seed: 5,
            dim: 8,
        };
        let a = run_suite(Suite::RfIsometry, &cfg);
        let b = run_suite(Suite::RfIsometry, &cfg);
        assert_eq!(a, b);
    }

    #[test]
    fn reference_route_rejects_null_cone_input() {
        let spec = ScalarProductSpec64::standard(2);
        let input = Ket64::new(vec![Bicomplex64::e1(), zero()]).unwrap();
        assert_eq!(
            reference_gram_schmidt(&spec, &[input]),
            Err(Error::NullConeBreakdown { index: 0 })
        );
    }
}
