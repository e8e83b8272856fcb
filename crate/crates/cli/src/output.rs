//! Table, matrix and sign rendering shared by the commands.

use hyperkirchhoff_core::{ExactMatrix, OrientedHypergraph, VertexId};

use crate::{CliError, Format, Result};

/// Rows of string cells with a header; renders as aligned text or CSV.
#[derive(Debug, Clone, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.to_text()),
            Format::Csv => self.to_csv(),
            Format::Dot => Err(CliError::Usage(
                "dot output is only available for activation lattices and cuts".into(),
            )),
        }
    }

    fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let last = row.len().saturating_sub(1);
            let mut line = String::new();
            for (k, cell) in row.iter().enumerate() {
                if k == last {
                    line.push_str(cell);
                } else {
                    line.push_str(&format!("{:<w$}  ", cell, w = widths[k]));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub fn render_matrix(m: &ExactMatrix, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(m.to_string()),
        _ => {
            let mut t =
                Table::new(std::iter::once(String::new()).chain(m.col_labels().iter().cloned()));
            for r in 0..m.rows() {
                t.push(
                    std::iter::once(m.row_labels()[r].clone())
                        .chain(m.row(r).iter().map(|x| x.to_string())),
                );
            }
            t.render(format)
        }
    }
}

/// `(v1 v2 v3)(v4)`: the head permutation in cycle notation, fixed points
/// included, each cycle starting at its first vertex in vertex order.
pub fn cycle_notation(g: &OrientedHypergraph, heads: &[VertexId]) -> String {
    let mut seen = vec![false; heads.len()];
    let mut out = String::new();
    for start in 0..heads.len() {
        if seen[start] {
            continue;
        }
        let mut names = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            names.push(g.vertex_name(VertexId(cur)));
            cur = heads[cur].index();
        }
        out.push('(');
        out.push_str(&names.join(" "));
        out.push(')');
    }
    out
}

pub fn vertex_set(g: &OrientedHypergraph, vs: &[VertexId]) -> String {
    let names: Vec<&str> = vs.iter().map(|&v| g.vertex_name(v)).collect();
    format!("{{{}}}", names.join(","))
}

/// `+1` / `-1` / `0`.
pub fn signed(x: i64) -> String {
    if x > 0 {
        format!("+{x}")
    } else {
        x.to_string()
    }
}

pub fn parity(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}
