//! Marginally large tableaux of type `D_n`.
//!
//! A tableau has `n−1` rows over the alphabet
//! `1 ≺ 2 ≺ … ≺ n−1 ≺ {n, n̄} ≺ n−1̄ ≺ … ≺ 1̄`, with `n` and `n̄` incomparable.
//! Row `j` starts with a run of `j`s (the shaded boxes) whose length is one more
//! than the length of row `j+1`. Shaded boxes are stored explicitly.
//!
//! Barred letters are encoded as negative integers: `-k` is `k̄`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bracket::{BracketKind, BracketString};
use crate::cartan::{coroot_pairing, Rank, WeightVector};
use crate::error::{Error, Result};

/// A letter of the type `D_n` alphabet; `Letter(-k)` is `k̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(pub i32);

impl Letter {
    pub const fn unbarred(k: usize) -> Self {
        Letter(k as i32)
    }

    pub const fn barred(k: usize) -> Self {
        Letter(-(k as i32))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// `k` for both `k` and `k̄`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn in_alphabet(self, rank: Rank) -> bool {
        self.0 != 0 && self.index() <= rank.n()
    }

    /// Position in the alphabet order: `k ↦ k`, `k̄ ↦ 2n − k`. `n` and `n̄`
    /// share the level `n`.
    pub fn level(self, rank: Rank) -> usize {
        if self.is_barred() {
            2 * rank.n() - self.index()
        } else {
            self.index()
        }
    }

    /// The letter at the head of the `i`-arrow leaving `self` in the crystal of
    /// the vector representation, if any.
    pub fn lower(self, i: usize, rank: Rank) -> Option<Letter> {
        let n = rank.n();
        let v = self.0;
        let i = i as i32;
        let n = n as i32;
        let out = if i <= n - 2 {
            if v == i {
                Some(i + 1)
            } else if v == -(i + 1) {
                Some(-i)
            } else {
                None
            }
        } else if i == n - 1 {
            if v == n - 1 {
                Some(n)
            } else if v == -n {
                Some(-(n - 1))
            } else {
                None
            }
        } else if v == n - 1 {
            Some(-n)
        } else if v == n {
            Some(-(n - 1))
        } else {
            None
        };
        out.map(Letter)
    }

    /// The letter at the tail of the `i`-arrow entering `self`, if any.
    pub fn raise(self, i: usize, rank: Rank) -> Option<Letter> {
        let n = rank.n() as i32;
        // the vector representation has at most one arrow of each color at a letter
        (-n..=n)
            .filter(|&v| v != 0)
            .map(Letter)
            .find(|l| l.lower(i, rank) == Some(self))
    }

    /// `(` if an `i`-arrow leaves the letter, `)` if one enters it.
    pub fn bracket(self, i: usize, rank: Rank) -> Option<BracketKind> {
        if self.lower(i, rank).is_some() {
            Some(BracketKind::Open)
        } else if self.raise(i, rank).is_some() {
            Some(BracketKind::Close)
        } else {
            None
        }
    }

    pub fn ascii(self) -> String {
        self.0.to_string()
    }

    /// `k̄` with a combining overline.
    pub fn utf8(self) -> String {
        if self.is_barred() {
            format!("{}\u{0305}", self.index())
        } else {
            self.index().to_string()
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which linearization of the boxes orders the brackets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Rows top to bottom, each row right to left.
    #[default]
    Middle,
    /// Columns right to left, each column top to bottom.
    Far,
}

/// A box address, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// Wrong number of rows.
    Shape,
    /// A letter outside `{±1, …, ±n}`.
    Alphabet,
    /// C1: row `j` starts with `j`.
    FirstColumn,
    /// C2: rows weakly increase.
    RowOrder,
    /// C3: marginal largeness.
    MarginalLargeness,
    /// C4: entries of row `j` lie between `j` and `j̄`.
    RowBound,
    /// C5: `n` and `n̄` never share a row.
    BranchPair,
}

impl Condition {
    pub fn code(self) -> &'static str {
        match self {
            Condition::Shape => "shape",
            Condition::Alphabet => "alphabet",
            Condition::FirstColumn => "C1",
            Condition::RowOrder => "C2",
            Condition::MarginalLargeness => "C3",
            Condition::RowBound => "C4",
            Condition::BranchPair => "C5",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    pub row: usize,
    pub col: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at row {}", self.condition.code(), self.row)?;
        if let Some(c) = self.col {
            write!(f, ", column {c}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

/// A marginally large tableau, shaded boxes included.
///
/// Constructed through [`MLTableau::new`] (validated) or
/// [`MLTableau::from_rows_unchecked`] (for diagnostics). The crystal
/// operators assume a valid tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MLTableau {
    rank: Rank,
    rows: Vec<Vec<Letter>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: usize,
    rows: Vec<Vec<i32>>,
}

impl MLTableau {
    pub fn new(rank: Rank, rows: Vec<Vec<Letter>>) -> Result<Self> {
        let t = Self::from_rows_unchecked(rank, rows);
        let violations = t.validate();
        if violations.is_empty() {
            Ok(t)
        } else {
            Err(Error::InvalidTableau(violations))
        }
    }

    pub fn from_rows_unchecked(rank: Rank, rows: Vec<Vec<Letter>>) -> Self {
        MLTableau { rank, rows }
    }

    /// Convenience constructor from signed integers.
    pub fn from_ints(rank: Rank, rows: &[&[i32]]) -> Result<Self> {
        Self::new(rank, rows.iter().map(|r| r.iter().copied().map(Letter).collect()).collect())
    }

    /// `T_∞`: row `j` holds `n−j` copies of `j`.
    pub fn highest_weight(rank: Rank) -> Self {
        let n = rank.n();
        let rows = (1..n).map(|j| vec![Letter::unbarred(j); n - j]).collect();
        MLTableau { rank, rows }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Row `j`, 1-based.
    pub fn row(&self, j: usize) -> &[Letter] {
        &self.rows[j - 1]
    }

    pub fn letter_at(&self, p: Position) -> Letter {
        self.rows[p.row - 1][p.col - 1]
    }

    /// Every violated condition, with its location. Empty iff the tableau is
    /// marginally large.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.rank.n();
        let mut out = Vec::new();
        let v = |condition, row, col: Option<usize>, detail: String| Violation {
            condition,
            row,
            col,
            detail,
        };
        if self.rows.len() != n - 1 {
            out.push(v(
                Condition::Shape,
                self.rows.len(),
                None,
                format!("expected {} rows, found {}", n - 1, self.rows.len()),
            ));
            return out;
        }
        for (r, row) in self.rows.iter().enumerate() {
            let j = r + 1;
            for (c, l) in row.iter().enumerate() {
                if !l.in_alphabet(self.rank) {
                    out.push(v(Condition::Alphabet, j, Some(c + 1), format!("letter {l} not in J(D_{n})")));
                }
            }
            if out.iter().any(|x| x.condition == Condition::Alphabet) {
                continue;
            }
            match row.first() {
                Some(&first) if first == Letter::unbarred(j) => {}
                Some(&first) => out.push(v(
                    Condition::FirstColumn,
                    j,
                    Some(1),
                    format!("first entry is {first}, expected {j}"),
                )),
                None => out.push(v(Condition::FirstColumn, j, Some(1), "row is empty".into())),
            }
            for (c, w) in row.windows(2).enumerate() {
                if w[0].level(self.rank) > w[1].level(self.rank) {
                    out.push(v(
                        Condition::RowOrder,
                        j,
                        Some(c + 2),
                        format!("{} follows {}", w[1], w[0]),
                    ));
                }
            }
            let shaded = row.iter().filter(|&&l| l == Letter::unbarred(j)).count();
            let below = self.rows.get(r + 1).map_or(0, Vec::len);
            if shaded != below + 1 {
                out.push(v(
                    Condition::MarginalLargeness,
                    j,
                    None,
                    format!("{shaded} boxes of {j}, row below has {below} boxes"),
                ));
            }
            let lo = j;
            let hi = Letter::barred(j).level(self.rank);
            for (c, l) in row.iter().enumerate() {
                let lev = l.level(self.rank);
                if lev < lo || lev > hi {
                    out.push(v(
                        Condition::RowBound,
                        j,
                        Some(c + 1),
                        format!("{l} is outside [{j}, -{j}]"),
                    ));
                }
            }
            let has_n = row.contains(&Letter::unbarred(n));
            let has_bar_n = row.contains(&Letter::barred(n));
            if has_n && has_bar_n {
                out.push(v(Condition::BranchPair, j, None, format!("both {n} and -{n} present")));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Boxes in reading order, with their positions.
    pub fn reading_word(&self, reading: Reading) -> Vec<(Letter, Position)> {
        match reading {
            Reading::Middle => self.reading_word_middle(),
            Reading::Far => self.reading_word_far(),
        }
    }

    /// Rows top to bottom, each right to left.
    pub fn reading_word_middle(&self) -> Vec<(Letter, Position)> {
        let mut out = Vec::with_capacity(self.box_count());
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &l) in row.iter().enumerate().rev() {
                out.push((l, Position { row: r + 1, col: c + 1 }));
            }
        }
        out
    }

    /// Columns right to left, each top to bottom.
    pub fn reading_word_far(&self) -> Vec<(Letter, Position)> {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = Vec::with_capacity(self.box_count());
        for c in (0..width).rev() {
            for (r, row) in self.rows.iter().enumerate() {
                if let Some(&l) = row.get(c) {
                    out.push((l, Position { row: r + 1, col: c + 1 }));
                }
            }
        }
        out
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `br_i(T)`. Panics if `i` is out of range.
    pub fn bracket_sequence(&self, i: usize, reading: Reading) -> BracketString<Position> {
        self.check_color(i);
        let mut out = BracketString::new();
        for (l, p) in self.reading_word(reading) {
            if let Some(kind) = l.bracket(i, self.rank) {
                out.push(kind, p);
            }
        }
        out
    }

    /// Bracket string of row `j` alone, read right to left.
    pub fn row_bracket_sequence(&self, j: usize, i: usize) -> BracketString<Position> {
        self.check_color(i);
        let mut out = BracketString::new();
        for (c, &l) in self.row(j).iter().enumerate().rev() {
            if let Some(kind) = l.bracket(i, self.rank) {
                out.push(kind, Position { row: j, col: c + 1 });
            }
        }
        out
    }

    /// The box `f_i` acts on: the leftmost uncanceled `(`.
    pub fn select_f(&self, i: usize, reading: Reading) -> Option<Position> {
        self.bracket_sequence(i, reading)
            .leftmost_uncanceled_open()
            .map(|b| b.source)
    }

    /// The box `e_i` acts on: the rightmost uncanceled `)`.
    pub fn select_e(&self, i: usize, reading: Reading) -> Option<Position> {
        self.bracket_sequence(i, reading)
            .rightmost_uncanceled_close()
            .map(|b| b.source)
    }

    /// `f_i T` with the middle reading.
    pub fn f(&self, i: usize) -> MLTableau {
        self.f_with(i, Reading::Middle)
    }

    /// `e_i T` with the middle reading, `None` when it is zero.
    pub fn e(&self, i: usize) -> Option<MLTableau> {
        self.e_with(i, Reading::Middle)
    }

    pub fn f_with(&self, i: usize, reading: Reading) -> MLTableau {
        let p = self
            .select_f(i, reading)
            .expect("marginally large tableaux always carry an uncanceled `(`");
        let target = self
            .letter_at(p)
            .lower(i, self.rank)
            .expect("open brackets sit on letters with an outgoing arrow");
        self.replaced(p, target)
    }

    pub fn e_with(&self, i: usize, reading: Reading) -> Option<MLTableau> {
        let p = self.select_e(i, reading)?;
        let target = self
            .letter_at(p)
            .raise(i, self.rank)
            .expect("close brackets sit on letters with an incoming arrow");
        Some(self.replaced(p, target))
    }

    /// Replaces one box and restores marginal largeness by inserting or
    /// deleting shaded columns.
    fn replaced(&self, p: Position, letter: Letter) -> MLTableau {
        let rank = self.rank;
        let mut rows = self.rows.clone();
        let row = &mut rows[p.row - 1];
        row[p.col - 1] = letter;
        row.sort_by_key(|l| l.level(rank));
        restore_shading(&mut rows, rank);
        MLTableau { rank, rows }
    }

    /// `wt(T)`: content weight minus `Σ_j |R_j| ε_j`.
    pub fn weight(&self) -> WeightVector {
        let mut w = WeightVector::zero(self.rank);
        for (r, row) in self.rows.iter().enumerate() {
            for l in row {
                w.add_at(l.index() - 1, if l.is_barred() { -1 } else { 1 });
            }
            w.add_at(r, -(row.len() as i64));
        }
        w
    }

    /// Number of uncanceled `)` in `br_i(T)`.
    pub fn epsilon(&self, i: usize) -> u32 {
        self.bracket_sequence(i, Reading::Middle).uncanceled_close_count() as u32
    }

    pub fn phi(&self, i: usize) -> i64 {
        self.epsilon(i) as i64 + coroot_pairing(i, &self.weight(), self.rank)
    }

    /// Rows with every shaded box removed, left-justified.
    pub fn reduced_form(&self) -> Vec<Vec<Letter>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let j = Letter::unbarred(r + 1);
                row.iter().copied().filter(|&l| l != j).collect()
            })
            .collect()
    }

    /// Inverse of [`MLTableau::reduced_form`]: re-inserts the shaded boxes.
    pub fn expand(rank: Rank, reduced: Vec<Vec<Letter>>) -> Result<Self> {
        if reduced.len() != rank.n() - 1 {
            return Err(Error::InvalidTableau(vec![Violation {
                condition: Condition::Shape,
                row: reduced.len(),
                col: None,
                detail: format!("expected {} rows, found {}", rank.n() - 1, reduced.len()),
            }]));
        }
        let mut rows = reduced;
        for row in rows.iter_mut() {
            row.sort_by_key(|l| l.level(rank));
        }
        restore_shading(&mut rows, rank);
        Self::new(rank, rows)
    }

    /// Indices of rows that contain unshaded boxes.
    pub fn unshaded_rows(&self) -> Vec<usize> {
        self.reduced_form()
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .map(|(r, _)| r + 1)
            .collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson {
            n: self.rank.n(),
            rows: self.rows.iter().map(|r| r.iter().map(|l| l.0).collect()).collect(),
        })
        .expect("tableau serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Parses and validates `{"n":…,"rows":[[…],…]}`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json_value(serde_json::from_str(s)?)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let raw: TableauJson = serde_json::from_value(v)?;
        let rank = Rank::new(raw.n)?;
        Self::new(rank, raw.rows.into_iter().map(|r| r.into_iter().map(Letter).collect()).collect())
    }

    fn check_color(&self, i: usize) {
        assert!(
            (1..=self.rank.n()).contains(&i),
            "color {i} out of range for {}",
            self.rank
        );
    }
}

/// Sets the number of `j`s in row `j` to `1 + |R_{j+1}|`, bottom row first.
/// Rows must already be sorted, so the `j`s form a prefix.
fn restore_shading(rows: &mut [Vec<Letter>], rank: Rank) {
    let n = rank.n();
    for j in (1..n).rev() {
        let below = if j == n - 1 { 0 } else { rows[j].len() };
        let shade = Letter::unbarred(j);
        let row = &mut rows[j - 1];
        let have = row.iter().take_while(|&&l| l == shade).count();
        let want = below + 1;
        if have < want {
            row.splice(0..0, std::iter::repeat_n(shade, want - have));
        } else {
            row.drain(0..have - want);
        }
    }
}

impl fmt::Display for MLTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|l| l.ascii()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
