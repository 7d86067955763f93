//! Exact rational matrices and fraction-free rank computation.

use dashu_int::ops::Gcd;
use dashu_int::{IBig, UBig};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DegenerateInput(format!(
                "matrix wants {}x{} = {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DegenerateInput("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = RationalMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact rank over Q by fraction-free Bareiss elimination: rows are
    /// scaled to integers first, then eliminated with exact divisions only.
    pub fn exact_rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m: Vec<Vec<IBig>> = (0..self.rows).map(|i| clear_denominators(self.row(i))).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev = IBig::ONE;
        let mut pivot_row = 0usize;
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(r) = (pivot_row..rows).find(|&r| m[r][col] != IBig::ZERO) else {
                continue;
            };
            m.swap(pivot_row, r);
            let pivot = m[pivot_row][col].clone();
            for i in (pivot_row + 1)..rows {
                for j in (col + 1)..cols {
                    let t = &m[i][j] * &pivot - &m[i][col] * &m[pivot_row][j];
                    m[i][j] = t / &prev; // exact by the Bareiss identity
                }
                m[i][col] = IBig::ZERO;
            }
            prev = pivot;
            pivot_row += 1;
            rank += 1;
        }
        rank
    }
}

fn clear_denominators(row: &[Rational]) -> Vec<IBig> {
    let mut lcm = UBig::ONE;
    for x in row {
        let d = x.denominator().clone();
        let g = lcm.clone().gcd(d.clone());
        lcm = lcm / g * d;
    }
    let lcm = IBig::from(lcm);
    row.iter()
        .map(|x| x.numerator() * (&lcm / IBig::from(x.denominator().clone())))
        .collect()
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}
