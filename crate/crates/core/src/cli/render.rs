//! Text renderings: tableaux, reduced forms, and stack notation for Kostant
//! partitions.

use crate::cartan::{Rank, Root, RootKind};
use crate::kostant::KostantPartition;
use crate::tableaux::{Letter, MLTableau};

fn letter_text(l: Letter, utf8: bool) -> String {
    if utf8 {
        l.utf8()
    } else {
        l.ascii()
    }
}

fn rows_text(rows: &[Vec<Letter>], utf8: bool, empty: &str) -> String {
    rows.iter()
        .map(|row| {
            if row.is_empty() {
                empty.to_string()
            } else {
                row.iter().map(|&l| letter_text(l, utf8)).collect::<Vec<_>>().join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// One row per line, shaded boxes included.
pub fn tableau_text(t: &MLTableau, utf8: bool) -> String {
    rows_text(t.rows(), utf8, "")
}

/// Reduced form, one row per line; an empty row prints as `.`.
pub fn reduced_text(t: &MLTableau, utf8: bool) -> String {
    rows_text(&t.reduced_form(), utf8, ".")
}

pub fn reduced_ascii(t: &MLTableau) -> String {
    reduced_text(t, false)
}

/// The stack of a root, top line first. The two branch nodes `n−1 n` share a
/// line.
pub fn stack_lines(r: Root, rank: Rank) -> Vec<String> {
    let n = rank.n();
    let mut lines = Vec::new();
    match r.kind {
        RootKind::Beta => {
            for m in (r.i..=r.k).rev() {
                lines.push(m.to_string());
            }
        }
        RootKind::Gamma => {
            let (j, l) = (r.i, r.k);
            if l == n {
                lines.push(n.to_string());
            } else {
                for m in l..=n - 2 {
                    lines.push(m.to_string());
                }
                lines.push(format!("{} {}", n - 1, n));
            }
            for m in (j..=n - 2).rev() {
                lines.push(m.to_string());
            }
        }
    }
    lines
}

/// Centers each line of a stack within the widest line.
fn centered(lines: &[String]) -> Vec<String> {
    let width = lines.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    lines
        .iter()
        .map(|s| {
            let pad = width - s.chars().count();
            let left = pad / 2;
            format!("{}{}", " ".repeat(left), s).trim_end().to_string()
        })
        .collect()
}

/// Every part as a stack block, repeated by multiplicity, blocks separated by
/// a blank line. The empty partition renders as the empty string.
pub fn stack_blocks(a: &KostantPartition) -> String {
    let mut blocks = Vec::new();
    for (r, m) in a.parts() {
        let block = centered(&stack_lines(r, a.rank())).join("\n");
        for _ in 0..m {
            blocks.push(block.clone());
        }
    }
    blocks.join("\n\n")
}

/// Stacks drawn side by side, bottom-aligned, as in a displayed formula.
pub fn stack_row(a: &KostantPartition) -> String {
    let mut columns: Vec<Vec<String>> = Vec::new();
    for (r, m) in a.parts() {
        let col = centered(&stack_lines(r, a.rank()));
        for _ in 0..m {
            columns.push(col.clone());
        }
    }
    if columns.is_empty() {
        return String::new();
    }
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = columns
        .iter()
        .map(|c| c.iter().map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = Vec::with_capacity(height);
    for line in 0..height {
        let mut cells = Vec::with_capacity(columns.len());
        for (col, &w) in columns.iter().zip(&widths) {
            let offset = height - col.len();
            let text = if line >= offset { col[line - offset].as_str() } else { "" };
            cells.push(format!("{text:<w$}"));
        }
        out.push(cells.join("  ").trim_end().to_string());
    }
    out.join("\n")
}

/// One-line stack form for graph labels, e.g. `5[1] [3 4/2/1]`.
pub fn stack_inline(a: &KostantPartition) -> String {
    let parts = a.parts();
    if parts.is_empty() {
        return "0".to_string();
    }
    parts
        .iter()
        .map(|&(r, m)| {
            let body = stack_lines(r, a.rank()).join("/");
            if m > 1 {
                format!("{m}[{body}]")
            } else {
                format!("[{body}]")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Normalizes a stack rendering for comparison: each block becomes its lines
/// with whitespace trimmed and collapsed.
pub fn normalize_blocks(text: &str) -> Vec<Vec<String>> {
    text.split("\n\n")
        .filter(|b| !b.trim().is_empty())
        .map(|b| {
            b.lines()
                .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
                .filter(|l| !l.is_empty())
                .collect()
        })
        .collect()
}
