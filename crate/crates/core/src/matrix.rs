//! Exact integer matrices built from a hypergraph, plus the determinant and
//! permanent used as oracles for the contributor sums.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{OrientedHypergraph, VertexId};

/// Row-major matrix of arbitrary-precision integers with row and column
/// labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl ExactMatrix {
    pub fn zeros(row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        let (rows, cols) = (row_labels.len(), col_labels.len());
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
            row_labels,
            col_labels,
        }
    }

    /// Unlabelled matrix from small integer rows; labels are `1..n`.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let labels = |n: usize| (1..=n).map(|k| k.to_string()).collect::<Vec<_>>();
        let mut m = ExactMatrix::zeros(labels(r), labels(c));
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.as_ref().len(), c, "ragged rows");
            for (j, &x) in row.as_ref().iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.col_labels.clone(), self.row_labels.clone());
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Matrix product. Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = ExactMatrix::zeros(self.row_labels.clone(), rhs.col_labels.clone());
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let prod = a * &rhs[(k, c)];
                    out[(r, c)] += prod;
                }
            }
        }
        out
    }

    /// Entrywise difference. Panics on a dimension mismatch.
    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a -= b;
        }
        out
    }

    /// Entries equal, labels ignored.
    pub fn same_entries(&self, other: &ExactMatrix) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }

    /// Strikes the given row and column indices, keeping the original order
    /// of what remains. The result may be rectangular.
    pub fn strike(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let keep_r: Vec<usize> = (0..self.rows).filter(|r| !rows.contains(r)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|c| !cols.contains(c)).collect();
        let mut out = ExactMatrix::zeros(
            keep_r.iter().map(|&r| self.row_labels[r].clone()).collect(),
            keep_c.iter().map(|&c| self.col_labels[c].clone()).collect(),
        );
        for (i, &r) in keep_r.iter().enumerate() {
            for (j, &c) in keep_c.iter().enumerate() {
                out[(i, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn determinant(&self) -> Result<BigInt> {
        determinant_exact(self)
    }

    pub fn permanent(&self) -> Result<BigInt> {
        permanent_exact(self)
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for ExactMatrix {
    /// Right-aligned text table with a label header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_string()).collect())
            .collect();
        let label_w = self.row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.cols)
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].len())
                    .chain(std::iter::once(self.col_labels[c].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        write!(f, "{:label_w$}", "")?;
        for (c, l) in self.col_labels.iter().enumerate() {
            write!(f, " {:>w$}", l, w = widths[c])?;
        }
        writeln!(f)?;
        for (r, row) in cells.iter().enumerate() {
            write!(f, "{:<label_w$}", self.row_labels[r])?;
            for (c, x) in row.iter().enumerate() {
                write!(f, " {:>w$}", x, w = widths[c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn vertex_labels(g: &OrientedHypergraph) -> Vec<String> {
    g.vertex_names().to_vec()
}

/// `V x E` matrix; entry `(v,e)` is the sum of the signs of the incidences
/// joining `v` to `e`, so a loop with opposite signs contributes 0.
pub fn incidence_matrix(g: &OrientedHypergraph) -> ExactMatrix {
    let mut h = ExactMatrix::zeros(vertex_labels(g), g.edge_names().to_vec());
    for inc in g.incidences() {
        h[(inc.vertex.index(), inc.edge.index())] += inc.sign;
    }
    h
}

/// Laplacian from length-1 weak walks: entry `(v,w)` sums `-sgn(ω)` over
/// every walk from `v` to `w`, backsteps included.
pub fn laplacian(g: &OrientedHypergraph) -> ExactMatrix {
    let mut l = ExactMatrix::zeros(vertex_labels(g), vertex_labels(g));
    for v in g.vertices() {
        for step in g.steps_from(v) {
            l[(step.tail.index(), step.head.index())] -= g.step_sign(&step);
        }
    }
    l
}

/// Adjacency matrix: entry `(v,w)` sums `sgn(ω)` over incidence-monic walks
/// from `v` to `w`. A loop contributes both of its traversals to the
/// diagonal.
pub fn adjacency_matrix(g: &OrientedHypergraph) -> ExactMatrix {
    let mut a = ExactMatrix::zeros(vertex_labels(g), vertex_labels(g));
    for v in g.vertices() {
        for step in g.steps_from(v).filter(|s| !s.is_backstep()) {
            a[(step.tail.index(), step.head.index())] += g.step_sign(&step);
        }
    }
    a
}

/// Diagonal degree matrix counting incidences at each vertex. A 0-signed
/// incidence contributes `0² = 0`, which keeps `L = D - A` on completed
/// graphs.
pub fn degree_matrix(g: &OrientedHypergraph) -> ExactMatrix {
    let mut d = ExactMatrix::zeros(vertex_labels(g), vertex_labels(g));
    for inc in g.incidences() {
        let v = inc.vertex.index();
        d[(v, v)] += inc.sign * inc.sign;
    }
    d
}

/// Fraction-free (Bareiss) elimination. The 0x0 determinant is 1.
pub fn determinant_exact(m: &ExactMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Ryser's inclusion-exclusion over column subsets, walked in Gray-code
/// order so each step updates the row sums by one column.
pub fn permanent_exact(m: &ExactMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    if n > 30 {
        return Err(Error::TooLarge(n));
    }
    let mut row_sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        gray ^= 1 << col;
        let adding = gray & (1 << col) != 0;
        for (r, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += &m[(r, col)];
            } else {
                *s -= &m[(r, col)];
            }
        }
        let prod = row_sums.iter().fold(BigInt::one(), |acc, s| acc * s);
        if gray.count_ones() % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    Ok(if n % 2 == 1 { -total } else { total })
}

/// Strikes rows `U` and columns `W` given as labels. Labels must exist; the
/// kept rows and columns stay in their original order.
pub fn minor<S: AsRef<str>>(
    m: &ExactMatrix,
    strike_rows: &[S],
    strike_cols: &[S],
) -> Result<ExactMatrix> {
    let find = |labels: &[String], l: &S| {
        labels
            .iter()
            .position(|x| x == l.as_ref())
            .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
    };
    let rows = strike_rows
        .iter()
        .map(|l| find(&m.row_labels, l))
        .collect::<Result<Vec<_>>>()?;
    let cols = strike_cols
        .iter()
        .map(|l| find(&m.col_labels, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(m.strike(&rows, &cols))
}

/// Vertex-indexed variant of [`minor`] for `V x V` matrices.
pub fn vertex_minor(
    m: &ExactMatrix,
    strike_rows: &[VertexId],
    strike_cols: &[VertexId],
) -> ExactMatrix {
    let r: Vec<usize> = strike_rows.iter().map(|v| v.index()).collect();
    let c: Vec<usize> = strike_cols.iter().map(|v| v.index()).collect();
    m.strike(&r, &c)
}
