//! Piecewise-constant complex fields on `I × ℝ`, the weighted norm, exact
//! restriction, and the file format (JSON header + base64 value block).

use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine;
use serde::{Deserialize, Serialize};

use crate::accum::Accumulator;
use crate::error::{Error, Result};
use crate::interval_set::IntervalUnion;
use crate::rational::Rational;
use crate::C64;

use super::grid::{LambdaCell, LambdaGrid};

/// Values of one λ-cell: piecewise constant in `t` with value `values[n]` on
/// `[t_breaks[n], t_breaks[n+1])`, zero outside.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldRow {
    pub t_breaks: Vec<f64>,
    pub values: Vec<C64>,
}

impl FieldRow {
    pub fn empty() -> Self {
        FieldRow {
            t_breaks: vec![],
            values: vec![],
        }
    }

    pub fn new(t_breaks: Vec<f64>, values: Vec<C64>) -> Result<Self> {
        if t_breaks.len() != values.len() + 1 && !(t_breaks.is_empty() && values.is_empty()) {
            return Err(Error::GridMismatch(format!(
                "row needs {} breakpoints for {} values, got {}",
                values.len() + 1,
                values.len(),
                t_breaks.len()
            )));
        }
        if t_breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::GridMismatch(
                "row breakpoints must be strictly increasing".into(),
            ));
        }
        Ok(FieldRow { t_breaks, values })
    }

    /// `∫ |row|² dt`.
    pub fn norm2_plain(&self) -> f64 {
        let mut acc = Accumulator::new();
        for (n, v) in self.values.iter().enumerate() {
            acc.add(v.norm_sqr() * (self.t_breaks[n + 1] - self.t_breaks[n]));
        }
        acc.total()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.norm_sqr() == 0.0)
    }
}

/// Uniform tensor metadata used by the file format and fiber extraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UniformT {
    pub t_min: f64,
    pub dt: f64,
    pub n_t: usize,
}

impl UniformT {
    pub fn breakpoints(&self) -> Vec<f64> {
        (0..=self.n_t)
            .map(|n| self.t_min + n as f64 * self.dt)
            .collect()
    }
}

/// Piecewise-constant model of an element of `L²(Λ×ℝ, |λ| dλ dt)`: one value
/// row per λ-cell of the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: LambdaGrid,
    rows: Vec<FieldRow>,
    uniform: Option<UniformT>,
}

impl Field {
    /// Field on a shared uniform t-grid: `values[c][n]` on cell `c`, t-cell `n`.
    pub fn uniform(grid: LambdaGrid, t: UniformT, values: Vec<Vec<C64>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} value rows for {} λ-cells",
                values.len(),
                grid.len()
            )));
        }
        let breaks = t.breakpoints();
        let mut rows = Vec::with_capacity(values.len());
        for row in values {
            if row.len() != t.n_t {
                return Err(Error::GridMismatch(format!(
                    "row has {} values, expected {}",
                    row.len(),
                    t.n_t
                )));
            }
            rows.push(FieldRow {
                t_breaks: breaks.clone(),
                values: row,
            });
        }
        Ok(Field {
            grid,
            rows,
            uniform: Some(t),
        })
    }

    /// Field with per-cell breakpoint lists (ragged rows).
    pub fn from_rows(grid: LambdaGrid, rows: Vec<FieldRow>) -> Result<Self> {
        if rows.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} rows for {} λ-cells",
                rows.len(),
                grid.len()
            )));
        }
        for row in &rows {
            if row.t_breaks.len() != row.values.len() + 1
                && !(row.t_breaks.is_empty() && row.values.is_empty())
            {
                return Err(Error::GridMismatch("row breakpoint/value mismatch".into()));
            }
        }
        Ok(Field {
            grid,
            rows,
            uniform: None,
        })
    }

    pub fn grid(&self) -> &LambdaGrid {
        &self.grid
    }

    pub fn rows(&self) -> &[FieldRow] {
        &self.rows
    }

    pub fn uniform_t(&self) -> Option<UniformT> {
        self.uniform
    }

    /// `‖f‖² = Σ_c (∫_c |λ| dλ) · ∫ |f(λ_c, t)|² dt`.
    pub fn norm2(&self) -> f64 {
        let mut acc = Accumulator::new();
        for (geom, row) in self.grid.geom().iter().zip(&self.rows) {
            acc.add(geom.abs_mass * row.norm2_plain());
        }
        acc.total()
    }

    pub fn scale(&self, c: C64) -> Field {
        Field {
            grid: self.grid.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| FieldRow {
                    t_breaks: r.t_breaks.clone(),
                    values: r.values.iter().map(|v| c * v).collect(),
                })
                .collect(),
            uniform: self.uniform,
        }
    }

    /// Multiply every t-breakpoint by `s > 0` (used by the dilation operator).
    pub(crate) fn stretch_t(&self, s: f64) -> Vec<FieldRow> {
        self.rows
            .iter()
            .map(|r| FieldRow {
                t_breaks: r.t_breaks.iter().map(|t| t * s).collect(),
                values: r.values.clone(),
            })
            .collect()
    }

    /// Exact restriction to `I × ℝ`: λ-cells are intersected with `I` in
    /// rational arithmetic (cells may split; values are constant in λ on each
    /// cell so the rows carry over).
    pub fn restrict(&self, set: &IntervalUnion) -> Result<Field> {
        let mut cells: Vec<LambdaCell> = Vec::new();
        let mut rows: Vec<FieldRow> = Vec::new();
        for (cell, row) in self.grid.cells().iter().zip(&self.rows) {
            let single =
                IntervalUnion::normalize(vec![(cell.lo.clone(), cell.hi.clone())]).unwrap();
            for (lo, hi) in single.intersect(set).pieces() {
                cells.push(LambdaCell {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
                rows.push(row.clone());
            }
        }
        if cells.is_empty() {
            // Empty restriction: keep an empty grid.
            let grid = LambdaGrid::new(&IntervalUnion::empty(), &Rational::one());
            return Field::from_rows(grid, vec![]);
        }
        let grid = LambdaGrid::from_cells(cells)?;
        Field::from_rows(grid, rows)
    }

    /// Fiber `f(λ_c, ·)` as a sampled line; requires a uniform t-grid.
    pub fn fiber_line(&self, cell: usize) -> Result<crate::heisenberg_group::SampledLine> {
        let t = self.uniform.ok_or_else(|| {
            Error::GridMismatch("fiber extraction requires a uniform t-grid".into())
        })?;
        Ok(crate::heisenberg_group::SampledLine::new(
            t.t_min,
            t.dt,
            self.rows[cell].values.clone(),
        ))
    }

    /// Write `lambda_lo,lambda_hi,t_lo,t_hi,abs2` rows for plotting.
    pub fn write_abs2_csv<W: std::io::Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "lambda_lo,lambda_hi,t_lo,t_hi,abs2")?;
        for (geom, row) in self.grid.geom().iter().zip(&self.rows) {
            for (n, v) in row.values.iter().enumerate() {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    geom.lo,
                    geom.hi,
                    row.t_breaks[n],
                    row.t_breaks[n + 1],
                    v.norm_sqr()
                )?;
            }
        }
        Ok(())
    }

    pub fn save_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&FieldFile::from_field(self))?)
    }

    pub fn load_json(text: &str) -> Result<Field> {
        let file: FieldFile = serde_json::from_str(text)?;
        file.into_field()
    }
}

/// On-disk format: header (grid and t-layout) plus one base64 block of
/// little-endian `f64` pairs (re, im), row-major.
#[derive(Debug, Serialize, Deserialize)]
struct FieldFile {
    cells: Vec<LambdaCell>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_grid: Option<UniformT>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<Vec<f64>>>,
    values_b64: String,
}

fn encode_values(rows: &[FieldRow]) -> String {
    let mut bytes = Vec::new();
    for row in rows {
        for v in &row.values {
            bytes.extend_from_slice(&v.re.to_le_bytes());
            bytes.extend_from_slice(&v.im.to_le_bytes());
        }
    }
    B64.encode(bytes)
}

fn decode_values(b64: &str) -> Result<Vec<C64>> {
    let bytes = B64
        .decode(b64)
        .map_err(|e| Error::Parse(format!("invalid base64 value block: {e}")))?;
    if bytes.len() % 16 != 0 {
        return Err(Error::Parse(
            "value block length is not a multiple of 16 bytes".into(),
        ));
    }
    Ok(bytes
        .chunks_exact(16)
        .map(|c| {
            C64::new(
                f64::from_le_bytes(c[0..8].try_into().unwrap()),
                f64::from_le_bytes(c[8..16].try_into().unwrap()),
            )
        })
        .collect())
}

impl FieldFile {
    fn from_field(f: &Field) -> Self {
        FieldFile {
            cells: f.grid.cells().to_vec(),
            t_grid: f.uniform,
            rows: if f.uniform.is_some() {
                None
            } else {
                Some(f.rows.iter().map(|r| r.t_breaks.clone()).collect())
            },
            values_b64: encode_values(&f.rows),
        }
    }

    fn into_field(self) -> Result<Field> {
        let grid = LambdaGrid::from_cells(self.cells)?;
        let flat = decode_values(&self.values_b64)?;
        match (self.t_grid, self.rows) {
            (Some(t), None) => {
                let expected = grid.len() * t.n_t;
                if flat.len() != expected {
                    return Err(Error::Parse(format!(
                        "value block holds {} samples, header implies {expected}",
                        flat.len()
                    )));
                }
                let values = flat.chunks(t.n_t.max(1)).map(|c| c.to_vec()).collect();
                Field::uniform(grid, t, values)
            }
            (None, Some(breaks)) => {
                if breaks.len() != grid.len() {
                    return Err(Error::Parse("row count mismatch".into()));
                }
                let mut rows = Vec::with_capacity(breaks.len());
                let mut cursor = 0usize;
                for b in breaks {
                    let n = b.len().saturating_sub(1);
                    if cursor + n > flat.len() {
                        return Err(Error::Parse("value block too short".into()));
                    }
                    rows.push(FieldRow::new(b, flat[cursor..cursor + n].to_vec())?);
                    cursor += n;
                }
                if cursor != flat.len() {
                    return Err(Error::Parse("value block too long".into()));
                }
                Field::from_rows(grid, rows)
            }
            _ => Err(Error::Parse(
                "field file needs exactly one of t_grid or rows".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    pub(crate) fn small_field() -> Field {
        let grid = LambdaGrid::new(&IntervalUnion::shannon(), &r("1/4"));
        let t = UniformT {
            t_min: 0.0,
            dt: 0.25,
            n_t: 4,
        };
        let values = (0..grid.len())
            .map(|c| {
                (0..4)
                    .map(|n| C64::new((c + 1) as f64 * 0.3, n as f64 * 0.1 - 0.2))
                    .collect()
            })
            .collect();
        Field::uniform(grid, t, values).unwrap()
    }

    #[test]
    fn norm_of_unit_indicator_over_shannon() {
        // value 1 on I₀ × [0,1): ‖f‖² = ∫_{I₀} |λ| dλ = 3/4
        let grid = LambdaGrid::new(&IntervalUnion::shannon(), &r("1/8"));
        let t = UniformT {
            t_min: 0.0,
            dt: 0.25,
            n_t: 4,
        };
        let values = vec![vec![C64::new(1.0, 0.0); 4]; grid.len()];
        let f = Field::uniform(grid, t, values).unwrap();
        assert!((f.norm2() - 0.75).abs() < 1e-14);
        // zero field and quadratic scaling
        assert_eq!(f.scale(C64::new(0.0, 0.0)).norm2(), 0.0);
        let scaled = f.scale(C64::new(0.0, 2.0));
        assert!((scaled.norm2() - 4.0 * f.norm2()).abs() < 1e-13);
    }

    #[test]
    fn restriction_is_exact() {
        let f = small_field();
        let half = IntervalUnion::normalize(vec![(r("1/2"), r("1"))]).unwrap();
        let g = f.restrict(&half).unwrap();
        assert_eq!(g.grid().support(), &half);
        // splitting a cell: restrict to [5/8, 1)
        let odd = IntervalUnion::normalize(vec![(r("5/8"), r("1"))]).unwrap();
        let h = f.restrict(&odd).unwrap();
        assert_eq!(h.grid().support(), &odd);
        let total: f64 = h.grid().geom().iter().map(|g| g.abs_mass).sum();
        assert!((total - (1.0 - 25.0 / 64.0) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn file_round_trip_is_bitwise() {
        let f = small_field();
        let text = f.save_json().unwrap();
        let back = Field::load_json(&text).unwrap();
        assert_eq!(back, f);
    }
}
