//! Tables of `h0(-K)` over ranges of the invariant `e`.

use std::fmt::Write as _;

use poisson_core::{classify, BundleSpec, CurveClass, SurfaceSpec, ValidationError, Verdict};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    /// Hirzebruch surfaces F_n.
    Fn,
    /// Ruled surfaces over an elliptic curve.
    Elliptic,
    /// Ruled surfaces over a curve of genus >= 2.
    Highgenus,
}

/// Widest range a table may cover.
pub const MAX_ROWS: i64 = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("range [{from}, {to}] is out of bounds: {reason}")]
    Range { from: i64, to: i64, reason: String },
    #[error(transparent)]
    Classify(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// Tab-separated, header first, one trailing newline per row.
    pub fn to_tsv(&self) -> String {
        let mut out = self.header.join("\t");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Space-aligned columns.
    pub fn to_human(&self) -> String {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain(std::iter::once(self.header[c].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let mut line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(self.header.clone());
        for row in &self.rows {
            line(row.iter().map(String::as_str).collect());
        }
        out
    }
}

fn check_range(from: i64, to: i64, min: i64, what: &str) -> Result<(), TableError> {
    let fail = |reason: String| Err(TableError::Range { from, to, reason });
    if from > to {
        return fail("start exceeds end".into());
    }
    if from < min {
        return fail(format!("{what} starts at {min}"));
    }
    if to - from >= MAX_ROWS {
        return fail(format!("at most {MAX_ROWS} values of e per table"));
    }
    Ok(())
}

fn verdict_cell(v: &Verdict) -> String {
    v.to_string()
}

pub fn build_table(
    kind: TableKind,
    genus: Option<u32>,
    from: i64,
    to: i64,
) -> Result<Table, TableError> {
    match kind {
        TableKind::Fn => {
            check_range(from, to, 0, "F_n")?;
            let mut rows = Vec::new();
            for n in from..=to {
                if n == 1 {
                    // Not minimal.
                    continue;
                }
                let r = classify(&SurfaceSpec::MinimalRuledRational { e: n })?;
                rows.push(vec![n.to_string(), r.dim.to_string()]);
            }
            Ok(Table {
                header: vec!["n", "h0"],
                rows,
            })
        }
        TableKind::Elliptic => {
            check_range(from, to, -1, "an elliptic base")?;
            let mut rows = Vec::new();
            for e in from..=to {
                let cases: Vec<(&str, BundleSpec)> = match e {
                    -1 => vec![("indecomposable", BundleSpec::elliptic_odd())],
                    0 => vec![
                        (
                            "decomposable-trivial",
                            BundleSpec::decomposable_with(CurveClass::trivial(), 0),
                        ),
                        ("indecomposable", BundleSpec::elliptic_unipotent()),
                        (
                            "decomposable-nontrivial",
                            BundleSpec::decomposable(0).with_residual_effective(Some(false)),
                        ),
                    ],
                    _ => vec![("decomposable", BundleSpec::decomposable(e))],
                };
                for (label, bundle) in cases {
                    let r = classify(&SurfaceSpec::ruled(1, bundle))?;
                    rows.push(vec![
                        e.to_string(),
                        label.to_string(),
                        r.dim.to_string(),
                        verdict_cell(&r.verdict),
                    ]);
                }
            }
            Ok(Table {
                header: vec!["e", "bundle", "h0", "verdict"],
                rows,
            })
        }
        TableKind::Highgenus => {
            let g = match genus {
                Some(g) if g >= 2 => g,
                _ => {
                    return Err(TableError::Range {
                        from,
                        to,
                        reason: "the highgenus table needs --genus >= 2".into(),
                    })
                }
            };
            let gi = i64::from(g);
            check_range(from, to, -gi, "genus g requires e >= -g and")?;
            let mut rows = Vec::new();
            for e in from..=to {
                let mut cases = Vec::new();
                if e >= 0 {
                    cases.push(("decomposable", BundleSpec::decomposable(e)));
                }
                if e <= 2 * gi - 2 {
                    cases.push(("indecomposable", BundleSpec::indecomposable(e)));
                }
                for (label, bundle) in cases {
                    let r = classify(&SurfaceSpec::ruled(g, bundle))?;
                    rows.push(vec![
                        g.to_string(),
                        e.to_string(),
                        label.to_string(),
                        verdict_cell(&r.verdict),
                        r.dim.to_string(),
                    ]);
                }
            }
            Ok(Table {
                header: vec!["g", "e", "bundle", "verdict", "h0"],
                rows,
            })
        }
    }
}
