//! Discretization of the spectral support: rational λ-cells refining an
//! interval union, with exact per-cell Plancherel masses.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::interval_set::IntervalUnion;
use crate::rational::Rational;

/// One λ-cell `[lo, hi)`. Cells never straddle 0, so each carries a sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaCell {
    pub lo: Rational,
    pub hi: Rational,
}

/// Cached floating-point geometry of a λ-cell.
#[derive(Debug, Clone, Copy)]
pub struct CellGeom {
    pub lo: f64,
    pub hi: f64,
    pub mid: f64,
    pub width: f64,
    /// Sign of λ on the cell interior (+1.0 or -1.0).
    pub sign: f64,
    /// `∫_cell |λ| dλ`, computed from the exact primitive `|hi² - lo²|/2`.
    pub abs_mass: f64,
    /// `∫_cell |λ|⁻¹ dλ = |ln(hi/lo)|`; `None` when an endpoint is 0.
    pub inv_mass: Option<f64>,
}

/// Partition of an interval union into λ-cells of width at most `Δλ`.
#[derive(Debug, Clone)]
pub struct LambdaGrid {
    support: IntervalUnion,
    cells: Vec<LambdaCell>,
    geom: Vec<CellGeom>,
}

fn geom_of(cell: &LambdaCell) -> CellGeom {
    let lo = cell.lo.to_f64();
    let hi = cell.hi.to_f64();
    let sign = if cell.lo.is_negative() { -1.0 } else { 1.0 };
    let mass = {
        let m = (&cell.hi * &cell.hi - &cell.lo * &cell.lo).to_f64() / 2.0;
        m.abs()
    };
    let inv_mass = if cell.lo.is_zero() || cell.hi.is_zero() {
        None
    } else {
        let ratio = if sign > 0.0 {
            &cell.hi / &cell.lo
        } else {
            &cell.lo / &cell.hi
        };
        Some(ratio.to_f64().ln())
    };
    CellGeom {
        lo,
        hi,
        mid: 0.5 * (lo + hi),
        width: hi - lo,
        sign,
        abs_mass: mass,
        inv_mass,
    }
}

impl LambdaGrid {
    /// Split every piece of `support` (at 0 first, so cells are
    /// sign-definite) into equal rational cells of width at most `max_width`.
    pub fn new(support: &IntervalUnion, max_width: &Rational) -> Self {
        assert!(
            max_width.is_positive(),
            "cell width bound must be positive"
        );
        let mut cells = Vec::new();
        for (lo, hi) in support.pieces() {
            let mut segments: Vec<(Rational, Rational)> = Vec::new();
            let zero = Rational::zero();
            if lo < &zero && &zero < hi {
                segments.push((lo.clone(), zero.clone()));
                segments.push((zero, hi.clone()));
            } else {
                segments.push((lo.clone(), hi.clone()));
            }
            for (slo, shi) in segments {
                let width = &shi - &slo;
                // ceil(width / max_width)
                let ratio = &width / max_width;
                let mut n = ratio.floor_int();
                if Rational::integer(n) < ratio {
                    n += 1;
                }
                let n = n.max(1);
                let step = width / Rational::integer(n);
                for i in 0..n {
                    let c_lo = &slo + &(step.clone() * Rational::integer(i));
                    let c_hi = if i == n - 1 {
                        shi.clone()
                    } else {
                        &slo + &(step.clone() * Rational::integer(i + 1))
                    };
                    cells.push(LambdaCell { lo: c_lo, hi: c_hi });
                }
            }
        }
        let geom = cells.iter().map(geom_of).collect();
        LambdaGrid {
            support: support.clone(),
            cells,
            geom,
        }
    }

    /// Grid with exactly the given cells (must be sorted, disjoint,
    /// sign-definite).
    pub fn from_cells(cells: Vec<LambdaCell>) -> Result<Self> {
        let support = IntervalUnion::normalize(
            cells.iter().map(|c| (c.lo.clone(), c.hi.clone())).collect(),
        )?;
        let geom = cells.iter().map(geom_of).collect();
        Ok(LambdaGrid {
            support,
            cells,
            geom,
        })
    }

    pub fn support(&self) -> &IntervalUnion {
        &self.support
    }

    pub fn cells(&self) -> &[LambdaCell] {
        &self.cells
    }

    pub fn geom(&self) -> &[CellGeom] {
        &self.geom
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Scale every cell by `2^j` (the λ-grid of `D̂_{-j} f` is `2^j`
    /// times the grid of `f`).
    pub fn scale_pow2(&self, j: i32) -> Self {
        let cells: Vec<LambdaCell> = self
            .cells
            .iter()
            .map(|c| LambdaCell {
                lo: c.lo.times_pow2(j),
                hi: c.hi.times_pow2(j),
            })
            .collect();
        let geom = cells.iter().map(geom_of).collect();
        LambdaGrid {
            support: self.support.dilate(j),
            cells,
            geom,
        }
    }

    /// Total `∫ |λ| dλ` over the grid.
    pub fn total_abs_mass(&self) -> f64 {
        self.geom.iter().map(|g| g.abs_mass).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn shannon_grid_masses() {
        let grid = LambdaGrid::new(&IntervalUnion::shannon(), &r("1/8"));
        assert_eq!(grid.len(), 8);
        // ∫_{I₀} |λ| dλ = 3/4 exactly
        assert!((grid.total_abs_mass() - 0.75).abs() < 1e-15);
        for g in grid.geom() {
            assert!(g.width <= 0.125 + 1e-15);
            let inv = g.inv_mass.unwrap();
            assert!(inv > 0.0);
        }
        // Σ ln(hi/lo) per half-line is ln 2
        let pos: f64 = grid
            .geom()
            .iter()
            .filter(|g| g.sign > 0.0)
            .map(|g| g.inv_mass.unwrap())
            .sum();
        assert!((pos - std::f64::consts::LN_2).abs() < 1e-13);
    }

    #[test]
    fn zero_straddling_piece_is_split() {
        let set = IntervalUnion::normalize(vec![(r("-1/4"), r("1/4"))]).unwrap();
        let grid = LambdaGrid::new(&set, &r("1/4"));
        assert_eq!(grid.len(), 2);
        assert!(grid.geom()[0].sign < 0.0 && grid.geom()[1].sign > 0.0);
        assert!(grid.geom()[0].inv_mass.is_none());
    }

    #[test]
    fn dyadic_scaling_is_exact() {
        let grid = LambdaGrid::new(&IntervalUnion::shannon(), &r("1/4"));
        let scaled = grid.scale_pow2(3);
        assert_eq!(scaled.support(), &IntervalUnion::shannon().dilate(3));
        let back = scaled.scale_pow2(-3);
        assert_eq!(back.cells(), grid.cells());
    }
}
