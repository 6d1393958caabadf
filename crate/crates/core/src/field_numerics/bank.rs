//! Seeded test-function banks. Frame verification is sampled, so "for every
//! f ∈ L²" quantifiers are realized by reproducible banks mixing smooth
//! random profiles, Gaussian-profile × indicator fields, single-cell
//! indicators, and wide two-bump functions that probe shift truncation.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::heisenberg_group::SampledLine;
use crate::C64;

use super::field::{Field, UniformT};
use super::grid::LambdaGrid;

/// Shapes available to the 2D bank generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BankKind {
    /// Piece-windowed random harmonic λ-profile × modulated Gaussian t-bump.
    SmoothSeparable,
    /// Constant on a random contiguous λ-cell block × Gaussian t-bump
    /// (genuine λ-jumps).
    GaussianTimesBlock,
    /// Indicator of a single (λ-cell × t-cell) rectangle: completeness probe.
    CellIndicator,
    /// Smooth bump plus a far low-energy companion bump in t.
    FarPair,
}

#[derive(Debug, Clone)]
pub struct BankSpec {
    pub seed: u64,
    pub count: usize,
    pub t_min: f64,
    pub dt: f64,
    pub n_t: usize,
    /// Cycled in order; defaults to the full mix.
    pub kinds: Vec<BankKind>,
    /// Cap on the t-modulation frequency of smooth bumps.
    pub max_modulation: f64,
    /// Offset range of the far companion bump (FarPair).
    pub far_offset: (f64, f64),
    /// Energy fraction carried by the far companion bump.
    pub far_energy: f64,
}

impl BankSpec {
    pub fn new(seed: u64, count: usize, t_min: f64, dt: f64, n_t: usize) -> Self {
        BankSpec {
            seed,
            count,
            t_min,
            dt,
            n_t,
            kinds: vec![
                BankKind::SmoothSeparable,
                BankKind::GaussianTimesBlock,
                BankKind::CellIndicator,
            ],
            max_modulation: 1.5,
            far_offset: (12.0, 18.0),
            far_energy: 0.008,
        }
    }
}

/// Reproducible bank of positive-norm fields.
#[derive(Debug, Clone)]
pub struct TestBank {
    pub seed: u64,
    pub functions: Vec<Field>,
}

fn gaussian_profile(
    rng: &mut ChaCha8Rng,
    t_lo: f64,
    t_hi: f64,
    max_modulation: f64,
) -> impl Fn(f64) -> C64 {
    let span = t_hi - t_lo;
    let sigma = (0.3 + 0.3 * rng.gen::<f64>()) * span.min(3.0) / 3.0 + 0.05;
    let margin = (3.0 * sigma).min(0.45 * span);
    let center = t_lo + margin + (span - 2.0 * margin) * rng.gen::<f64>();
    let freq = max_modulation * (2.0 * rng.gen::<f64>() - 1.0);
    let phase = std::f64::consts::TAU * rng.gen::<f64>();
    move |t: f64| {
        let arg = (t - center) / sigma;
        let env = (-0.5 * arg * arg).exp();
        env * crate::accum::cis(std::f64::consts::TAU * freq * t + phase)
    }
}

/// Piece index of each grid cell within the support union.
fn piece_of_cells(grid: &LambdaGrid) -> Vec<usize> {
    let pieces = grid.support().pieces();
    grid.cells()
        .iter()
        .map(|c| {
            pieces
                .iter()
                .position(|(lo, hi)| &c.lo >= lo && &c.hi <= hi)
                .expect("grid cell inside a support piece")
        })
        .collect()
}

/// λ-profile vanishing at the endpoints of each support piece (one or two
/// harmonics with random complex coefficients).
fn windowed_lambda_profile(rng: &mut ChaCha8Rng, grid: &LambdaGrid) -> Vec<C64> {
    let pieces = grid.support().pieces();
    let membership = piece_of_cells(grid);
    let coeffs: Vec<[C64; 2]> = pieces
        .iter()
        .map(|_| {
            [
                C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5) * 2.0,
                C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5),
            ]
        })
        .collect();
    grid.geom()
        .iter()
        .zip(&membership)
        .map(|(g, &p)| {
            let (lo, hi) = (&pieces[p].0.to_f64(), &pieces[p].1.to_f64());
            let x = (g.mid - lo) / (hi - lo);
            coeffs[p][0] * (std::f64::consts::PI * x).sin()
                + coeffs[p][1] * (2.0 * std::f64::consts::PI * x).sin()
        })
        .collect()
}

fn generate_field(rng: &mut ChaCha8Rng, grid: &LambdaGrid, spec: &BankSpec, kind: BankKind) -> Field {
    let t = UniformT {
        t_min: spec.t_min,
        dt: spec.dt,
        n_t: spec.n_t,
    };
    let t_hi = spec.t_min + spec.dt * spec.n_t as f64;
    let midpoint = |n: usize| spec.t_min + (n as f64 + 0.5) * spec.dt;
    let values: Vec<Vec<C64>> = match kind {
        BankKind::SmoothSeparable => {
            let lam = windowed_lambda_profile(rng, grid);
            let bump = gaussian_profile(rng, spec.t_min, t_hi, spec.max_modulation);
            (0..grid.len())
                .map(|c| (0..spec.n_t).map(|n| lam[c] * bump(midpoint(n))).collect())
                .collect()
        }
        BankKind::GaussianTimesBlock => {
            let n_cells = grid.len();
            let start = rng.gen_range(0..n_cells);
            let len = rng.gen_range(1..=(n_cells - start).min(n_cells.div_ceil(2)).max(1));
            let amp = C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5) * 1.2;
            let bump = gaussian_profile(rng, spec.t_min, t_hi, spec.max_modulation);
            (0..n_cells)
                .map(|c| {
                    if c >= start && c < start + len {
                        (0..spec.n_t).map(|n| amp * bump(midpoint(n))).collect()
                    } else {
                        vec![C64::new(0.0, 0.0); spec.n_t]
                    }
                })
                .collect()
        }
        BankKind::CellIndicator => {
            let c0 = rng.gen_range(0..grid.len());
            let n0 = rng.gen_range(0..spec.n_t);
            (0..grid.len())
                .map(|c| {
                    (0..spec.n_t)
                        .map(|n| {
                            if c == c0 && n == n0 {
                                C64::new(1.0, 0.0)
                            } else {
                                C64::new(0.0, 0.0)
                            }
                        })
                        .collect()
                })
                .collect()
        }
        BankKind::FarPair => {
            let lam = windowed_lambda_profile(rng, grid);
            let span = t_hi - spec.t_min;
            let sigma = 0.35;
            let main_center = spec.t_min + span * (0.45 + 0.1 * rng.gen::<f64>());
            let (off_lo, off_hi) = spec.far_offset;
            let offset = off_lo + (off_hi - off_lo) * rng.gen::<f64>();
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            let far_center = (main_center + sign * offset)
                .clamp(spec.t_min + 3.0 * sigma, t_hi - 3.0 * sigma);
            // both bumps have equal plain norm; scale the far one so that its
            // energy fraction matches the spec
            let rho = (spec.far_energy / (1.0 - spec.far_energy)).sqrt();
            let main = move |t: f64| {
                let a = (t - main_center) / sigma;
                (-0.5 * a * a).exp()
            };
            let far = move |t: f64| {
                let a = (t - far_center) / sigma;
                (-0.5 * a * a).exp()
            };
            (0..grid.len())
                .map(|c| {
                    (0..spec.n_t)
                        .map(|n| {
                            let tt = midpoint(n);
                            lam[c] * (main(tt) + rho * far(tt))
                        })
                        .collect()
                })
                .collect()
        }
    };
    Field::uniform(grid.clone(), t, values).expect("bank grid shapes agree")
}

/// Deterministic per seed; every function is normalized to unit weighted norm.
pub fn make_test_bank(grid: &LambdaGrid, spec: &BankSpec) -> TestBank {
    assert!(spec.count >= 1, "bank must hold at least one function");
    assert!(!spec.kinds.is_empty(), "bank needs at least one kind");
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut functions = Vec::with_capacity(spec.count);
    let mut i = 0usize;
    while functions.len() < spec.count {
        let kind = spec.kinds[i % spec.kinds.len()];
        i += 1;
        let f = generate_field(&mut rng, grid, spec, kind);
        let n2 = f.norm2();
        if n2 > 1e-12 {
            functions.push(f.scale(C64::new(1.0 / n2.sqrt(), 0.0)));
        }
    }
    TestBank {
        seed: spec.seed,
        functions,
    }
}

/// Shapes for fiberwise (1D) banks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    /// Modulated Gaussian bump.
    SmoothBump,
    /// Random steps on a coarse sub-grid (rough; for probing, not tight
    /// Parseval tolerances).
    StepBlock,
    /// Single t-cell indicator.
    CellIndicator,
    /// Smooth bump plus far low-energy companion.
    FarPair,
}

#[derive(Debug, Clone)]
pub struct LineBankSpec {
    pub seed: u64,
    pub count: usize,
    pub t_min: f64,
    pub dt: f64,
    pub n_t: usize,
    pub kinds: Vec<LineKind>,
    pub max_modulation: f64,
    pub far_offset: (f64, f64),
    pub far_energy: f64,
}

impl LineBankSpec {
    pub fn new(seed: u64, count: usize, t_min: f64, dt: f64, n_t: usize) -> Self {
        LineBankSpec {
            seed,
            count,
            t_min,
            dt,
            n_t,
            kinds: vec![LineKind::SmoothBump, LineKind::StepBlock, LineKind::CellIndicator],
            max_modulation: 1.5,
            far_offset: (12.0, 18.0),
            far_energy: 0.008,
        }
    }
}

/// Deterministic 1D bank of unit-norm sampled lines.
pub fn make_line_bank(spec: &LineBankSpec) -> Vec<SampledLine> {
    assert!(spec.count >= 1 && !spec.kinds.is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let t_hi = spec.t_min + spec.dt * spec.n_t as f64;
    let midpoint = |n: usize| spec.t_min + (n as f64 + 0.5) * spec.dt;
    let mut out = Vec::with_capacity(spec.count);
    let mut i = 0usize;
    while out.len() < spec.count {
        let kind = spec.kinds[i % spec.kinds.len()];
        i += 1;
        let values: Vec<C64> = match kind {
            LineKind::SmoothBump => {
                let bump = gaussian_profile(&mut rng, spec.t_min, t_hi, spec.max_modulation);
                (0..spec.n_t).map(|n| bump(midpoint(n))).collect()
            }
            LineKind::StepBlock => {
                let steps = rng.gen_range(3..=6);
                let step_width = spec.n_t / steps;
                let levels: Vec<C64> = (0..steps)
                    .map(|_| C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5) * 2.0)
                    .collect();
                (0..spec.n_t)
                    .map(|n| levels[(n / step_width.max(1)).min(steps - 1)])
                    .collect()
            }
            LineKind::CellIndicator => {
                let n0 = rng.gen_range(0..spec.n_t);
                (0..spec.n_t)
                    .map(|n| {
                        if n == n0 {
                            C64::new(1.0, 0.0)
                        } else {
                            C64::new(0.0, 0.0)
                        }
                    })
                    .collect()
            }
            LineKind::FarPair => {
                let span = t_hi - spec.t_min;
                let sigma = 0.35;
                let main_center = spec.t_min + span * (0.45 + 0.1 * rng.gen::<f64>());
                let (off_lo, off_hi) = spec.far_offset;
                let offset = off_lo + (off_hi - off_lo) * rng.gen::<f64>();
                let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                let far_center = (main_center + sign * offset)
                    .clamp(spec.t_min + 3.0 * sigma, t_hi - 3.0 * sigma);
                let rho = (spec.far_energy / (1.0 - spec.far_energy)).sqrt();
                (0..spec.n_t)
                    .map(|n| {
                        let tt = midpoint(n);
                        let a = (tt - main_center) / sigma;
                        let b = (tt - far_center) / sigma;
                        C64::new((-0.5 * a * a).exp() + rho * (-0.5 * b * b).exp(), 0.0)
                    })
                    .collect()
            }
        };
        let line = SampledLine::new(spec.t_min, spec.dt, values);
        let n2 = line.norm2();
        if n2 > 1e-12 {
            out.push(line.scale(C64::new(1.0 / n2.sqrt(), 0.0)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval_set::IntervalUnion;

    #[test]
    fn bank_is_reproducible_and_positive() {
        let grid = LambdaGrid::new(&IntervalUnion::shannon(), &"1/8".parse().unwrap());
        let spec = BankSpec::new(42, 32, -1.0, 0.25, 12);
        let a = make_test_bank(&grid, &spec);
        let b = make_test_bank(&grid, &spec);
        assert_eq!(a.functions.len(), 32);
        for (fa, fb) in a.functions.iter().zip(&b.functions) {
            assert_eq!(fa, fb);
            assert!((fa.norm2() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn bank_spans_single_cells() {
        // the completeness probe: CellIndicator members hit single rectangles
        let grid = LambdaGrid::new(&IntervalUnion::shannon(), &"1/4".parse().unwrap());
        let mut spec = BankSpec::new(7, 8, 0.0, 0.5, 4);
        spec.kinds = vec![BankKind::CellIndicator];
        let bank = make_test_bank(&grid, &spec);
        for f in &bank.functions {
            let nonzero: usize = f
                .rows()
                .iter()
                .map(|r| r.values.iter().filter(|v| v.norm_sqr() > 0.0).count())
                .sum();
            assert_eq!(nonzero, 1);
        }
    }

    #[test]
    fn line_bank_deterministic() {
        let spec = LineBankSpec::new(5, 6, -2.0, 0.125, 48);
        let a = make_line_bank(&spec);
        let b = make_line_bank(&spec);
        assert_eq!(a.len(), 6);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
            assert!((x.norm2() - 1.0).abs() < 1e-10);
        }
    }
}
