//! Analytic inner products on `L²(Λ×ℝ, |λ| dλ dt)`.
//!
//! Fields are piecewise constant, so
//! `⟨f, T̂_{k,l,m} g⟩ = ∬ f(λ,t) conj(g(λ,t-k)) e^{-2πiλm} e^{2πiλlt} |λ| dλ dt`
//! reduces to a sum of closed-form integrals of `e^{2πiλ(lt-m)} |λ|` over
//! grid rectangles. The oscillatory factors are integrated exactly per cell;
//! the only numerical error left in a frame sum is lattice truncation and
//! floating-point rounding.
//!
//! Stable primitives (for a λ-cell `[a₀,a₁)`, midpoint `μ`, width `Δ`):
//!
//! * `∫ e^{2πiλθ} dλ = Δ e^{2πiμθ} sinc(πΔθ)`
//! * `∫ λ e^{2πiλθ} dλ = Δ e^{2πiμθ} (μ sinc(πΔθ) - i(Δ/2) sinc'(πΔθ))`
//!
//! Both forms are free of cancellation for every θ, including θ = 0.

use crate::accum::{cis, sinc, sinc_prime, Accumulator};
use crate::C64;

use super::field::{Field, FieldRow};
use super::grid::LambdaGrid;

const TAU: f64 = std::f64::consts::TAU;

/// Translation phase consumed by the analytic integration: the inner product
/// is taken against `T̂_{k,l,m} g` with `k` = `shift`, `l` = `modulation`,
/// `m` = `central`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseIndex {
    pub shift: f64,
    pub modulation: f64,
    pub central: i64,
}

impl PhaseIndex {
    pub const ZERO: PhaseIndex = PhaseIndex {
        shift: 0.0,
        modulation: 0.0,
        central: 0,
    };
}

/// `∫_{a0}^{a1} e^{2πiλθ} dλ`.
#[inline]
pub(crate) fn plain_cell_integral(mid: f64, width: f64, theta: f64) -> C64 {
    width * cis(TAU * mid * theta) * sinc(std::f64::consts::PI * width * theta)
}

/// `∫_{a0}^{a1} e^{2πiλθ} |λ| dλ` for a sign-definite cell.
#[inline]
pub(crate) fn weighted_cell_integral(mid: f64, width: f64, sign: f64, theta: f64) -> C64 {
    let x = std::f64::consts::PI * width * theta;
    let radial = C64::new(mid * sinc(x), -0.5 * width * sinc_prime(x));
    sign * width * cis(TAU * mid * theta) * radial
}

/// λ-cell common to both grids, with indices into each field's rows.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MergedCell {
    pub a0: f64,
    pub a1: f64,
    pub mid: f64,
    pub width: f64,
    pub sign: f64,
    pub fi: usize,
    pub gi: usize,
}

/// Intersect the λ-cells of two grids (exact rational two-pointer sweep).
pub(crate) fn merge_lambda(fg: &LambdaGrid, gg: &LambdaGrid) -> Vec<MergedCell> {
    let mut out = Vec::new();
    let (fc, gc) = (fg.cells(), gg.cells());
    let mut i = 0;
    let mut j = 0;
    while i < fc.len() && j < gc.len() {
        let lo = fc[i].lo.clone().max(gc[j].lo.clone());
        let hi = fc[i].hi.clone().min(gc[j].hi.clone());
        if lo < hi {
            let a0 = lo.to_f64();
            let a1 = hi.to_f64();
            out.push(MergedCell {
                a0,
                a1,
                mid: 0.5 * (a0 + a1),
                width: a1 - a0,
                sign: if lo.is_negative() { -1.0 } else { 1.0 },
                fi: i,
                gi: j,
            });
        }
        if fc[i].hi <= gc[j].hi {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

/// Overlap of `f_row` with `g_row` shifted by `k`: merged breakpoints and the
/// per-segment products `f · conj(g(·-k))`. Returns `None` when the supports
/// do not overlap.
pub(crate) fn merge_t_segments(
    f_row: &FieldRow,
    g_row: &FieldRow,
    shift: f64,
) -> Option<(Vec<f64>, Vec<C64>)> {
    if f_row.values.is_empty() || g_row.values.is_empty() {
        return None;
    }
    let fb = &f_row.t_breaks;
    let g_lo = g_row.t_breaks[0] + shift;
    let g_hi = g_row.t_breaks[g_row.t_breaks.len() - 1] + shift;
    let w0 = fb[0].max(g_lo);
    let w1 = fb[fb.len() - 1].min(g_hi);
    if w0 >= w1 {
        return None;
    }
    let mut fi = 0usize;
    while fb[fi + 1] <= w0 {
        fi += 1;
    }
    let mut gi = 0usize;
    while g_row.t_breaks[gi + 1] + shift <= w0 {
        gi += 1;
    }
    let mut breaks = Vec::with_capacity(f_row.values.len() + g_row.values.len() + 2);
    let mut products = Vec::with_capacity(breaks.capacity());
    let mut cursor = w0;
    loop {
        let f_next = fb[fi + 1];
        let g_next = g_row.t_breaks[gi + 1] + shift;
        let next = f_next.min(g_next).min(w1);
        if next > cursor {
            breaks.push(cursor);
            products.push(f_row.values[fi] * g_row.values[gi].conj());
        }
        if next >= w1 {
            breaks.push(w1);
            break;
        }
        if f_next <= next {
            fi += 1;
        }
        if g_next <= next {
            gi += 1;
        }
        cursor = next;
    }
    if products.is_empty() {
        None
    } else {
        Some((breaks, products))
    }
}

/// `⟨f, T̂_{k,l,m} g⟩` with all oscillatory factors integrated in closed form
/// per grid rectangle. Arbitrary real shifts are exact: the product grid is
/// the merged breakpoint set.
pub fn inner_product(f: &Field, g: &Field, idx: &PhaseIndex) -> C64 {
    let merged = merge_lambda(f.grid(), g.grid());
    let l = idx.modulation;
    let m = idx.central as f64;
    let mut re = Accumulator::new();
    let mut im = Accumulator::new();
    for mc in &merged {
        let Some((breaks, products)) =
            merge_t_segments(&f.rows()[mc.fi], &g.rows()[mc.gi], idx.shift)
        else {
            continue;
        };
        let mut cell = C64::new(0.0, 0.0);
        if l == 0.0 {
            let w = weighted_cell_integral(mc.mid, mc.width, mc.sign, -m);
            let mut hw = C64::new(0.0, 0.0);
            for (s, p) in products.iter().enumerate() {
                hw += p * (breaks[s + 1] - breaks[s]);
            }
            cell = hw * w;
        } else {
            // Telescoped over breakpoints: Σ_b (H_{b-1} - H_b) E(l t_b - m),
            // then the prefactor sign/(2πil) from |λ|/λ and the t-integral.
            let prefactor = C64::new(0.0, -mc.sign / (TAU * l));
            let mut acc = C64::new(0.0, 0.0);
            for (b, t_b) in breaks.iter().enumerate() {
                let before = if b > 0 { products[b - 1] } else { C64::new(0.0, 0.0) };
                let after = if b < products.len() {
                    products[b]
                } else {
                    C64::new(0.0, 0.0)
                };
                let diff = before - after;
                if diff.norm_sqr() == 0.0 {
                    continue;
                }
                let theta = l * t_b - m;
                acc += diff * plain_cell_integral(mc.mid, mc.width, theta);
            }
            cell = prefactor * acc;
        }
        re.add(cell.re);
        im.add(cell.im);
    }
    C64::new(re.total(), im.total())
}

/// Coefficient `∫ u(λ) e^{-2πiλm} dλ` (plain Lebesgue measure) of a
/// piecewise-constant profile `u` given by one value per grid cell.
pub fn plain_modulation_coefficient(grid: &LambdaGrid, values: &[C64], m: i64) -> C64 {
    assert_eq!(grid.len(), values.len());
    let mut out = C64::new(0.0, 0.0);
    for (geom, v) in grid.geom().iter().zip(values) {
        out += v * plain_cell_integral(geom.mid, geom.width, -(m as f64));
    }
    out
}

/// Symmetric truncation box `|k/α| ≤ k_max`, `|l/β| ≤ l_max`, `|m| ≤ m_max`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct IndexBox {
    pub k_max: usize,
    pub l_max: usize,
    pub m_max: usize,
}

impl IndexBox {
    pub fn cubic(n: usize) -> Self {
        IndexBox {
            k_max: n,
            l_max: n,
            m_max: n,
        }
    }
}

/// Receives every inner product produced by a frame-sum sweep.
pub(crate) trait GramSink {
    fn record(&mut self, ik: i64, il: i64, m: i64, value: C64);
}

/// Accumulates `Σ |⟨f, g_{k,l,m}⟩|²` with compensated summation.
pub(crate) struct SumSink {
    acc: Accumulator,
}

impl SumSink {
    pub fn new() -> Self {
        SumSink {
            acc: Accumulator::new(),
        }
    }

    pub fn total(&self) -> f64 {
        self.acc.total()
    }
}

impl GramSink for SumSink {
    #[inline]
    fn record(&mut self, _ik: i64, _il: i64, _m: i64, value: C64) {
        self.acc.add(value.norm_sqr());
    }
}

/// Keeps every |inner product| (for scans and CSV export).
pub(crate) struct DetailSink {
    pub entries: Vec<(i64, i64, i64, f64)>,
}

impl GramSink for DetailSink {
    fn record(&mut self, ik: i64, il: i64, m: i64, value: C64) {
        self.entries.push((ik, il, m, value.norm()));
    }
}

/// Per-cell working state for one translate `k`.
struct CellWork {
    a0: f64,
    a1: f64,
    mid: f64,
    width: f64,
    sign: f64,
    /// cis(-2π a0), cis(-2π a1): the m-recurrence multipliers.
    u: C64,
    v: C64,
    breaks: Vec<f64>,
    /// Breakpoint diffs `H_{b-1} - H_b` (length breaks.len()).
    diffs: Vec<C64>,
    /// `Σ_seg H_seg · width_seg` for the l = 0 path.
    hw: C64,
    // scratch: per-breakpoint phases at the current l, and power states.
    w_ph: Vec<C64>,
    x_ph: Vec<C64>,
    pow_u: C64,
    pow_v: C64,
}

/// Sweep the whole index box `{(αi, βj, m)}`, feeding every inner product to
/// the sink in a fixed deterministic order (k ascending, then l, then
/// m = 0,1,…,M,-1,…,-M).
pub(crate) fn sweep_box<S: GramSink>(
    f: &Field,
    g: &Field,
    alpha: f64,
    beta: f64,
    bx: &IndexBox,
    sink: &mut S,
) {
    let merged = merge_lambda(f.grid(), g.grid());
    let kk = bx.k_max as i64;
    let ll = bx.l_max as i64;
    let mm = bx.m_max as i64;
    for ik in -kk..=kk {
        let k = alpha * ik as f64;
        let mut cells: Vec<CellWork> = Vec::with_capacity(merged.len());
        for mc in &merged {
            let Some((breaks, products)) =
                merge_t_segments(&f.rows()[mc.fi], &g.rows()[mc.gi], k)
            else {
                continue;
            };
            if products.iter().all(|p| p.norm_sqr() == 0.0) {
                continue;
            }
            let nb = breaks.len();
            let mut diffs = Vec::with_capacity(nb);
            let mut hw = C64::new(0.0, 0.0);
            for b in 0..nb {
                let before = if b > 0 { products[b - 1] } else { C64::new(0.0, 0.0) };
                let after = if b < products.len() {
                    products[b]
                } else {
                    C64::new(0.0, 0.0)
                };
                diffs.push(before - after);
                if b < products.len() {
                    hw += products[b] * (breaks[b + 1] - breaks[b]);
                }
            }
            cells.push(CellWork {
                a0: mc.a0,
                a1: mc.a1,
                mid: mc.mid,
                width: mc.width,
                sign: mc.sign,
                u: cis(-TAU * mc.a0),
                v: cis(-TAU * mc.a1),
                w_ph: vec![C64::new(0.0, 0.0); nb],
                x_ph: vec![C64::new(0.0, 0.0); nb],
                pow_u: C64::new(1.0, 0.0),
                pow_v: C64::new(1.0, 0.0),
                breaks,
                diffs,
                hw,
            });
        }
        if cells.is_empty() {
            for il in -ll..=ll {
                for m in -mm..=mm {
                    sink.record(ik, il, m, C64::new(0.0, 0.0));
                }
            }
            continue;
        }
        for il in -ll..=ll {
            let l = beta * il as f64;
            if il == 0 {
                for m in -mm..=mm {
                    let mut s = C64::new(0.0, 0.0);
                    for c in &cells {
                        s += c.hw * weighted_cell_integral(c.mid, c.width, c.sign, -(m as f64));
                    }
                    sink.record(ik, 0, m, s);
                }
                continue;
            }
            for c in &mut cells {
                for b in 0..c.breaks.len() {
                    let t_b = c.breaks[b];
                    c.w_ph[b] = cis(TAU * c.a0 * l * t_b);
                    c.x_ph[b] = cis(TAU * c.a1 * l * t_b);
                }
                c.pow_u = C64::new(1.0, 0.0);
                c.pow_v = C64::new(1.0, 0.0);
            }
            // ascending half m = 0..=M
            for m in 0..=mm {
                let s = eval_cells(&cells, l, m as f64);
                sink.record(ik, il, m, s);
                for c in &mut cells {
                    c.pow_u *= c.u;
                    c.pow_v *= c.v;
                }
            }
            // descending half m = -1..=-M
            for c in &mut cells {
                c.pow_u = c.u.conj();
                c.pow_v = c.v.conj();
            }
            for mneg in 1..=mm {
                let s = eval_cells(&cells, l, -(mneg as f64));
                sink.record(ik, il, -mneg, s);
                for c in &mut cells {
                    c.pow_u *= c.u.conj();
                    c.pow_v *= c.v.conj();
                }
            }
        }
    }
}

#[inline]
fn eval_cells(cells: &[CellWork], l: f64, m: f64) -> C64 {
    let mut s = C64::new(0.0, 0.0);
    for c in cells {
        let mut acc = C64::new(0.0, 0.0);
        for (b, &t_b) in c.breaks.iter().enumerate() {
            let d = c.diffs[b];
            if d.norm_sqr() == 0.0 {
                continue;
            }
            let theta = l * t_b - m;
            let e = if theta.abs() > 1e-3 {
                // (e^{2πi a1 θ} - e^{2πi a0 θ}) / (2πiθ) from the phase powers
                let num = c.x_ph[b] * c.pow_v - c.w_ph[b] * c.pow_u;
                num * C64::new(0.0, -1.0 / (TAU * theta))
            } else {
                plain_cell_integral(c.mid, c.width, theta)
            };
            acc += d * e;
        }
        s += acc * C64::new(0.0, -c.sign / (TAU * l));
    }
    s
}

/// `Σ_box |⟨f, T̂_{k,l,m} g⟩|²` over the symmetric index box.
pub fn frame_sum(f: &Field, g: &Field, alpha: f64, beta: f64, bx: &IndexBox) -> f64 {
    let mut sink = SumSink::new();
    sweep_box(f, g, alpha, beta, bx, &mut sink);
    sink.total()
}

/// All |⟨f, T̂_{k,l,m} g⟩| over the box, as `(i, j, m, magnitude)` with
/// `k = αi`, `l = βj`.
pub fn gram_magnitudes(
    f: &Field,
    g: &Field,
    alpha: f64,
    beta: f64,
    bx: &IndexBox,
) -> Vec<(i64, i64, i64, f64)> {
    let mut sink = DetailSink {
        entries: Vec::with_capacity((2 * bx.k_max + 1) * (2 * bx.l_max + 1) * (2 * bx.m_max + 1)),
    };
    sweep_box(f, g, alpha, beta, bx, &mut sink);
    sink.entries
}
