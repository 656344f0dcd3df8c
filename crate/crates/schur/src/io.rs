//! File formats: scheme matrices, permutation-group generator files, and
//! result tables.
//!
//! Scheme files are whitespace-separated color matrices with an optional
//! leading size line; blank lines and `#` comments are skipped, and colors
//! are relabeled to the canonical order on load. Permutation-group files
//! start with the degree, followed by one generator per line, either in
//! cycle notation `(1,2,3)(4,5)` or as an image list. All points in files
//! are 1-based; conversion to the crate's 0-based indexing happens here and
//! only here.

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::scheme::AssociationScheme;

/// Parses a scheme file: optional `n` header, then `n` rows of `n` color
/// indices. Colors are canonicalized and the scheme axioms validated.
pub fn parse_scheme_file(text: &str) -> Result<AssociationScheme> {
    let rows = content_lines(text);
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "empty scheme file".into(),
        });
    }
    // A single leading integer is a size header; a full row is the matrix.
    let first_tokens = tokens(&rows[0].1);
    let (expect_n, matrix_rows) = if first_tokens.len() == 1 && rows.len() > 1 {
        let n: usize = first_tokens[0].parse().map_err(|_| Error::Parse {
            line: rows[0].0,
            msg: "size header is not a number".into(),
        })?;
        (Some(n), &rows[1..])
    } else {
        (None, &rows[..])
    };
    let n = expect_n.unwrap_or(matrix_rows.len());
    if matrix_rows.len() != n {
        return Err(Error::Parse {
            line: rows[0].0,
            msg: format!("expected {n} matrix rows, found {}", matrix_rows.len()),
        });
    }
    let mut color = Vec::with_capacity(n * n);
    for (line_no, row) in matrix_rows {
        let values = tokens(row);
        if values.len() != n {
            return Err(Error::Parse {
                line: *line_no,
                msg: format!("ragged row: {} entries, expected {n}", values.len()),
            });
        }
        for v in values {
            let c: u32 = v.parse().map_err(|_| Error::Parse {
                line: *line_no,
                msg: format!("bad color entry {v:?}"),
            })?;
            color.push(c);
        }
    }
    AssociationScheme::from_color_matrix(n, color)
}

/// Emits a scheme as a size header plus the color matrix; inverse of
/// [`parse_scheme_file`] on canonical schemes.
pub fn emit_scheme(scheme: &AssociationScheme) -> String {
    let n = scheme.size();
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| scheme.color(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a permutation-group file: degree on the first line, then one
/// generator per line as cycles or an image list (1-based points).
pub fn parse_permgroup_file(text: &str) -> Result<PermGroup> {
    let rows = content_lines(text);
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "empty permutation group file".into(),
        });
    }
    let degree: usize = tokens(&rows[0].1)
        .first()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse {
            line: rows[0].0,
            msg: "first line must be the degree".into(),
        })?;
    let mut gens = Vec::new();
    for (line_no, row) in &rows[1..] {
        let perm = if row.trim_start().starts_with('(') {
            parse_cycles(row, degree, *line_no)?
        } else {
            parse_image_list(row, degree, *line_no)?
        };
        gens.push(perm);
    }
    PermGroup::new(degree, gens)
}

/// Emits a permutation group as a degree header plus one generator per line
/// in cycle notation.
pub fn emit_permgroup(group: &PermGroup) -> String {
    let mut out = String::new();
    out.push_str(&group.degree().to_string());
    out.push('\n');
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

fn content_lines(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn parse_cycles(row: &str, degree: usize, line: usize) -> Result<Perm> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let trimmed = row.trim();
    let mut rest = trimmed;
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Parse {
                line,
                msg: format!("expected '(' in cycle notation: {rest:?}"),
            });
        }
        let close = rest.find(')').ok_or(Error::Parse {
            line,
            msg: "unclosed cycle".into(),
        })?;
        let inner = &rest[1..close];
        if !inner.trim().is_empty() {
            let mut cycle = Vec::new();
            for part in inner.split(',') {
                let p: usize = part.trim().parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad point {part:?}"),
                })?;
                if p == 0 || p > degree {
                    return Err(Error::Parse {
                        line,
                        msg: format!("point {p} out of range 1..{degree}"),
                    });
                }
                cycle.push(p - 1);
            }
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Perm::from_cycles(degree, &cycles).map_err(|e| Error::Parse {
        line,
        msg: e.to_string(),
    })
}

fn parse_image_list(row: &str, degree: usize, line: usize) -> Result<Perm> {
    let values = tokens(row);
    if values.len() != degree {
        return Err(Error::Parse {
            line,
            msg: format!("image list has {} entries, expected {degree}", values.len()),
        });
    }
    let mut images = Vec::with_capacity(degree);
    for v in values {
        let p: usize = v.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad image {v:?}"),
        })?;
        if p == 0 || p > degree {
            return Err(Error::Parse {
                line,
                msg: format!("image {p} out of range 1..{degree}"),
            });
        }
        images.push(p - 1);
    }
    Perm::from_images(images).map_err(|e| Error::Parse {
        line,
        msg: e.to_string(),
    })
}

/// A small result table with a fixed column order.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Tsv,
    Json,
}

impl Table {
    pub fn new(columns: &[&str]) -> Table {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Renders the table; both formats are byte-deterministic.
    pub fn emit(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Tsv => {
                let mut out = self.columns.join("\t");
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join("\t"));
                    out.push('\n');
                }
                out
            }
            TableFormat::Json => {
                let mut out = String::from("[");
                for (i, row) in self.rows.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str("\n  {");
                    for (j, (col, val)) in self.columns.iter().zip(row).enumerate() {
                        if j > 0 {
                            out.push_str(", ");
                        }
                        out.push_str(&format!("{}: {}", json_string(col), json_string(val)));
                    }
                    out.push('}');
                }
                out.push_str("\n]\n");
                out
            }
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_2x2_scheme() {
        let s = parse_scheme_file("0 1\n1 0\n").unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.rank(), 2);
        // With a header and comments.
        let s = parse_scheme_file("# comment\n2\n0 1\n1 0\n").unwrap();
        assert_eq!(s.size(), 2);
    }

    #[test]
    fn parse_rejects_ragged_rows() {
        let err = parse_scheme_file("0 1\n1\n");
        assert!(matches!(err, Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_rejects_non_scheme() {
        // Valid square matrix whose intersection numbers are inconsistent:
        // a directed edge between two otherwise-symmetric colors.
        let text = "0 1 1 1\n1 0 1 2\n1 1 0 1\n1 1 1 0\n";
        assert!(matches!(parse_scheme_file(text), Err(Error::NotAScheme(_))));
    }

    #[test]
    fn parse_rejects_bad_diagonal() {
        let text = "0 1\n1 1\n";
        assert!(parse_scheme_file(text).is_err());
    }

    #[test]
    fn scheme_round_trip() {
        let d10 = PermGroup::new(
            5,
            vec![
                Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
                Perm::from_cycles(5, &[vec![1, 4], vec![2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let s = crate::scheme::orbital_scheme(&d10).unwrap();
        let text = emit_scheme(&s);
        let back = parse_scheme_file(&text).unwrap();
        assert!(back.same_coloring(&s));
    }

    #[test]
    fn parse_permgroup_cycles_and_images() {
        let g = parse_permgroup_file("3\n(1,2,3)\n").unwrap();
        assert_eq!(g.degree(), 3);
        assert_eq!(g.order_u64(), 3);

        let g = parse_permgroup_file("4\n(1,2)\n(1,2,3,4)\n").unwrap();
        assert_eq!(g.order_u64(), 24);

        // Image list form of a 3-cycle.
        let g = parse_permgroup_file("3\n2 3 1\n").unwrap();
        assert_eq!(g.order_u64(), 3);
    }

    #[test]
    fn permgroup_order_stable_under_generator_shuffle() {
        let text = "5\n(1,2,3,4,5)\n(2,5)(3,4)\n";
        let shuffled = "5\n(2,5)(3,4)\n(1,2,3,4,5)\n";
        let a = parse_permgroup_file(text).unwrap();
        let b = parse_permgroup_file(shuffled).unwrap();
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn parse_permgroup_rejects_malformed() {
        assert!(parse_permgroup_file("3\n(1,2\n").is_err());
        assert!(parse_permgroup_file("3\n(1,5)\n").is_err());
        assert!(parse_permgroup_file("3\n1 1 2\n").is_err());
    }

    #[test]
    fn permgroup_round_trip() {
        let text = "6\n(1,2,3,4,5,6)\n(2,6)(3,5)\n";
        let g = parse_permgroup_file(text).unwrap();
        let emitted = emit_permgroup(&g);
        let back = parse_permgroup_file(&emitted).unwrap();
        assert_eq!(g.order(), back.order());
    }

    #[test]
    fn table_emission() {
        let mut t = Table::new(&["group", "rank"]);
        assert_eq!(t.emit(TableFormat::Tsv), "group\trank\n");
        t.push_row(vec!["C4".into(), "3".into()]);
        let tsv = t.emit(TableFormat::Tsv);
        assert_eq!(tsv, "group\trank\nC4\t3\n");
        let json = t.emit(TableFormat::Json);
        assert_eq!(json, "[\n  {\"group\": \"C4\", \"rank\": \"3\"}\n]\n");
    }
}
