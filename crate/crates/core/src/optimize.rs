//! Deterministic derivative-free maximization and asymptotic-series fitting.
//!
//! Derivative-free methods are used on purpose: the regime objectives carry
//! square roots and exponentials with kinks at regime boundaries, and the
//! problem sizes (1-D and 2-D) make gradients unnecessary. Both maximizers
//! are grid-seeded so the narrow feasibility window of the Ω objectives
//! (`τωh > ωc > ζ_C·ωh/(2 + ζ_C)`) cannot be missed, and both are exactly
//! deterministic: identical inputs give bit-identical results, with ties
//! broken toward the smaller coordinate.

use crate::error::{Error, Result};
use crate::exec;

/// Number of coarse-scan points used to seed the 1-D bracket.
pub const DEFAULT_GRID_POINTS: usize = 256;
/// Number of deterministic quasi-uniform starts of the 2-D maximizer.
pub const DEFAULT_STARTS: usize = 16;
/// Default abscissas for the asymptotic-series fit.
pub const DEFAULT_SAMPLE_POINTS: [f64; 3] = [1e3, 1e4, 1e5];
/// Default held-out abscissa reporting the fit residual.
pub const DEFAULT_HOLDOUT: f64 = 1e6;

/// Outcome of a maximization run.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    /// Coordinates of the best point found.
    pub argmax: Vec<f64>,
    /// Objective value at `argmax`; never below any probe point evaluated.
    pub value: f64,
    /// Total number of objective evaluations.
    pub evaluations: u64,
    /// Whether the bracket/simplex reached the requested tolerance.
    pub converged: bool,
    /// Final bracket width (1-D) or simplex diameter (2-D).
    pub bracket_width: f64,
}

struct Tracker1<'f, F> {
    f: &'f F,
    evaluations: u64,
    best_x: f64,
    best_f: f64,
}

impl<'f, F: Fn(f64) -> f64> Tracker1<'f, F> {
    fn new(f: &'f F) -> Self {
        Self {
            f,
            evaluations: 0,
            best_x: f64::NAN,
            best_f: f64::NEG_INFINITY,
        }
    }

    fn eval(&mut self, x: f64) -> Result<f64> {
        let v = (self.f)(x);
        self.evaluations += 1;
        if !v.is_finite() {
            return Err(Error::NonFiniteObjective { point: vec![x] });
        }
        if v > self.best_f || (v == self.best_f && x < self.best_x) {
            self.best_f = v;
            self.best_x = x;
        }
        Ok(v)
    }
}

/// Maximize a scalar function on `[lo, hi]`: coarse grid scan to locate the
/// best bracket, golden-section refinement to width `tol`, then a short
/// parabolic polish to push the argmax below the golden-section noise floor.
pub fn maximize_scalar<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<OptimizationResult>
where
    F: Fn(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidParameter {
            name: "lo",
            value: lo,
            constraint: "finite and below hi",
        });
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            constraint: "finite and positive",
        });
    }
    let mut t = Tracker1::new(&f);

    let n = DEFAULT_GRID_POINTS;
    let step = (hi - lo) / (n - 1) as f64;
    let mut best_i = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..n {
        let x = if i == n - 1 { hi } else { lo + i as f64 * step };
        let v = t.eval(x)?;
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let mut a = lo + best_i.saturating_sub(1) as f64 * step;
    let mut b = (lo + (best_i + 1) as f64 * step).min(hi);

    // golden-section on the bracket
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INVPHI * (b - a);
    let mut x2 = a + INVPHI * (b - a);
    let mut f1 = t.eval(x1)?;
    let mut f2 = t.eval(x2)?;
    let mut iterations = 0;
    while b - a > tol && iterations < 300 {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INVPHI * (b - a);
            f1 = t.eval(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INVPHI * (b - a);
            f2 = t.eval(x2)?;
        }
        iterations += 1;
    }
    let width = b - a;
    let converged = width <= tol;

    // Parabolic polish: golden section alone stalls at |x − x*| ~ √(ε·f/f″);
    // a vertex fit at a spacing well above that floor recovers the argmax to
    // near machine precision on a smooth peak.
    let mut h = ((hi - lo) * 1e-5).max(tol);
    for _ in 0..3 {
        let c = t.best_x;
        let (xl, xr) = (c - h, c + h);
        if xl <= lo || xr >= hi {
            break;
        }
        let fl = t.eval(xl)?;
        let fc = t.best_f;
        let fr = t.eval(xr)?;
        let denom = fr - 2.0 * fc + fl;
        if denom < 0.0 {
            let shift = 0.5 * h * (fl - fr) / denom;
            if shift.abs() < h {
                t.eval(c + shift)?;
            }
        }
        h /= 32.0;
    }

    Ok(OptimizationResult {
        argmax: vec![t.best_x],
        value: t.best_f,
        evaluations: t.evaluations,
        converged,
        bracket_width: width,
    })
}

/// Maximize a two-variable function on a box via multi-start Nelder-Mead
/// with projection onto the box. The starts form a deterministic 4×4
/// quasi-uniform pattern; runs are independent (and evaluate concurrently
/// under the `parallel` feature) and merge deterministically by value, with
/// ties broken toward the lexicographically smaller coordinate pair.
pub fn maximize_box<F>(f: F, lower: [f64; 2], upper: [f64; 2], tol: f64) -> Result<OptimizationResult>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    for d in 0..2 {
        if !(lower[d].is_finite() && upper[d].is_finite() && lower[d] < upper[d]) {
            return Err(Error::InvalidParameter {
                name: "box",
                value: lower[d],
                constraint: "finite with lower < upper",
            });
        }
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            constraint: "finite and positive",
        });
    }

    let side = 4;
    let starts: Vec<[f64; 2]> = (0..side * side)
        .map(|k| {
            let (i, j) = (k / side, k % side);
            [
                lower[0] + (upper[0] - lower[0]) * (0.5 + i as f64) / side as f64,
                lower[1] + (upper[1] - lower[1]) * (0.5 + j as f64) / side as f64,
            ]
        })
        .collect();

    let runs = exec::par_map(&starts, |s| nelder_mead(&f, *s, lower, upper, tol));

    let mut best: Option<OptimizationResult> = None;
    for run in runs {
        let run = run?;
        best = Some(match best {
            None => run,
            Some(cur) => {
                let run_wins = run.value > cur.value
                    || (run.value == cur.value && run.argmax < cur.argmax);
                if run_wins {
                    OptimizationResult {
                        evaluations: cur.evaluations + run.evaluations,
                        ..run
                    }
                } else {
                    OptimizationResult {
                        evaluations: cur.evaluations + run.evaluations,
                        ..cur
                    }
                }
            }
        });
    }
    Ok(best.expect("at least one start"))
}

fn clamp2(p: [f64; 2], lower: [f64; 2], upper: [f64; 2]) -> [f64; 2] {
    [
        p[0].clamp(lower[0], upper[0]),
        p[1].clamp(lower[1], upper[1]),
    ]
}

fn nelder_mead<F>(
    f: &F,
    start: [f64; 2],
    lower: [f64; 2],
    upper: [f64; 2],
    tol: f64,
) -> Result<OptimizationResult>
where
    F: Fn(f64, f64) -> f64,
{
    let mut evaluations = 0u64;
    let mut eval = |p: [f64; 2]| -> Result<f64> {
        let v = f(p[0], p[1]);
        evaluations += 1;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteObjective {
                point: p.to_vec(),
            })
        }
    };

    // initial simplex: axis steps of 5% of the box, flipped if they leave it
    let mut simplex = [start, start, start];
    for d in 0..2 {
        let step = 0.05 * (upper[d] - lower[d]);
        let mut p = start;
        p[d] = if p[d] + step <= upper[d] { p[d] + step } else { p[d] - step };
        simplex[d + 1] = p;
    }
    let mut values = [eval(simplex[0])?, eval(simplex[1])?, eval(simplex[2])?];

    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    let mut diameter = f64::INFINITY;
    let mut converged = false;
    for _ in 0..4000 {
        // order descending by value (maximization), ties toward smaller point
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| {
            values[b]
                .partial_cmp(&values[a])
                .unwrap()
                .then(simplex[a].partial_cmp(&simplex[b]).unwrap())
        });
        let (best, mid, worst) = (idx[0], idx[1], idx[2]);

        diameter = (0..2)
            .map(|d| {
                (simplex[mid][d] - simplex[best][d])
                    .abs()
                    .max((simplex[worst][d] - simplex[best][d]).abs())
            })
            .fold(0.0, f64::max);
        if diameter <= tol {
            converged = true;
            break;
        }

        let centroid = [
            0.5 * (simplex[best][0] + simplex[mid][0]),
            0.5 * (simplex[best][1] + simplex[mid][1]),
        ];
        let reflect = clamp2(
            [
                centroid[0] + alpha * (centroid[0] - simplex[worst][0]),
                centroid[1] + alpha * (centroid[1] - simplex[worst][1]),
            ],
            lower,
            upper,
        );
        let f_r = eval(reflect)?;

        if f_r > values[best] {
            let expand = clamp2(
                [
                    centroid[0] + gamma * (reflect[0] - centroid[0]),
                    centroid[1] + gamma * (reflect[1] - centroid[1]),
                ],
                lower,
                upper,
            );
            let f_e = eval(expand)?;
            if f_e > f_r {
                simplex[worst] = expand;
                values[worst] = f_e;
            } else {
                simplex[worst] = reflect;
                values[worst] = f_r;
            }
            continue;
        }
        if f_r > values[mid] {
            simplex[worst] = reflect;
            values[worst] = f_r;
            continue;
        }
        let contract = clamp2(
            [
                centroid[0] + rho * (simplex[worst][0] - centroid[0]),
                centroid[1] + rho * (simplex[worst][1] - centroid[1]),
            ],
            lower,
            upper,
        );
        let f_c = eval(contract)?;
        if f_c > values[worst] {
            simplex[worst] = contract;
            values[worst] = f_c;
            continue;
        }
        for &i in &[mid, worst] {
            simplex[i] = [
                simplex[best][0] + sigma * (simplex[i][0] - simplex[best][0]),
                simplex[best][1] + sigma * (simplex[i][1] - simplex[best][1]),
            ];
            values[i] = eval(simplex[i])?;
        }
    }

    let mut best_i = 0;
    for i in 1..3 {
        if values[i] > values[best_i]
            || (values[i] == values[best_i] && simplex[i] < simplex[best_i])
        {
            best_i = i;
        }
    }
    Ok(OptimizationResult {
        argmax: simplex[best_i].to_vec(),
        value: values[best_i],
        evaluations,
        converged,
        bracket_width: diameter,
    })
}

/// Basis for the three-term asymptotic fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesBasis {
    /// `{x, 1, 1/x}` — the Ω-family expansions.
    Linear,
    /// `{√x, 1, 1/√x}` — the χ-family expansions.
    Sqrt,
}

impl SeriesBasis {
    fn row(&self, x: f64) -> [f64; 3] {
        match self {
            SeriesBasis::Linear => [x, 1.0, 1.0 / x],
            SeriesBasis::Sqrt => {
                let r = x.sqrt();
                [r, 1.0, 1.0 / r]
            }
        }
    }
}

/// Fitted coefficients of `a·φ₁(x) + b + c·φ₃(x)` plus diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Largest absolute misfit over the sample points and the held-out
    /// abscissa; reported, never hidden.
    pub residual: f64,
    /// Condition number of the design matrix (2-norm estimate).
    pub condition: f64,
}

/// Solve for the coefficients of a three-term asymptotic expansion from
/// sample evaluations at large abscissas (least squares for more than three
/// points), and report the misfit at a held-out abscissa.
pub fn fit_asymptotic_series<G>(
    g: G,
    samples: &[f64],
    holdout: f64,
    basis: SeriesBasis,
) -> Result<SeriesFit>
where
    G: Fn(f64) -> f64,
{
    if samples.len() < 3 {
        return Err(Error::InvalidParameter {
            name: "samples",
            value: samples.len() as f64,
            constraint: "at least 3 points",
        });
    }
    for &x in samples.iter().chain(std::iter::once(&holdout)) {
        if !(x.is_finite() && x > 1.0) {
            return Err(Error::InvalidParameter {
                name: "sample point",
                value: x,
                constraint: "finite and above 1",
            });
        }
    }
    // Column equilibration: the raw design matrix spans ~σ(x_max/x_min)²
    // in scale, which would leak solver roundoff into the small trailing
    // coefficient. Scaling each column to unit ∞-norm keeps the solve
    // well-conditioned; coefficients are unscaled afterwards.
    let mut m = nalgebra::DMatrix::from_fn(samples.len(), 3, |i, j| basis.row(samples[i])[j]);
    let mut col_scale = [0.0f64; 3];
    for j in 0..3 {
        col_scale[j] = (0..samples.len())
            .map(|i| m[(i, j)].abs())
            .fold(0.0, f64::max);
        if col_scale[j] == 0.0 {
            return Err(Error::SingularSystem("series fit"));
        }
        for i in 0..samples.len() {
            m[(i, j)] /= col_scale[j];
        }
    }
    let rhs = nalgebra::DVector::from_fn(samples.len(), |i, _| g(samples[i]));
    let svd = m.svd(true, true);
    let s_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let s_min = svd.singular_values.iter().cloned().fold(f64::INFINITY, f64::min);
    let sol = svd
        .solve(&rhs, s_max * 1e-15)
        .map_err(|_| Error::SingularSystem("series fit"))?;
    let (a, b, c) = (
        sol[0] / col_scale[0],
        sol[1] / col_scale[1],
        sol[2] / col_scale[2],
    );
    let model = |x: f64| {
        let r = basis.row(x);
        a * r[0] + b * r[1] + c * r[2]
    };
    let residual = samples
        .iter()
        .chain(std::iter::once(&holdout))
        .map(|&x| (g(x) - model(x)).abs())
        .fold(0.0, f64::max);
    Ok(SeriesFit {
        a,
        b,
        c,
        residual,
        condition: s_max / s_min,
    })
}
