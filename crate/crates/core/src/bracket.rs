//! Bracket strings and `()`-cancellation, shared by both realizations.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketKind {
    Open,
    Close,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket<S> {
    pub kind: BracketKind,
    /// Where the bracket came from: a box of a tableau or a root of a partition.
    pub source: S,
}

/// A sequence of brackets, each annotated with its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketString<S> {
    brackets: Vec<Bracket<S>>,
}

/// Indices of the brackets that survive cancellation. After cancellation
/// the string reads `)…)(…(`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Uncanceled {
    pub close: Vec<usize>,
    pub open: Vec<usize>,
}

impl<S> Default for BracketString<S> {
    fn default() -> Self {
        BracketString { brackets: Vec::new() }
    }
}

impl<S> BracketString<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, kind: BracketKind, source: S) {
        self.brackets.push(Bracket { kind, source });
    }

    pub fn push_n(&mut self, kind: BracketKind, source: S, count: usize)
    where
        S: Clone,
    {
        for _ in 0..count {
            self.push(kind, source.clone());
        }
    }

    pub fn append(&mut self, mut other: BracketString<S>) {
        self.brackets.append(&mut other.brackets);
    }

    pub fn len(&self) -> usize {
        self.brackets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn brackets(&self) -> &[Bracket<S>] {
        &self.brackets
    }

    pub fn kinds(&self) -> impl Iterator<Item = BracketKind> + '_ {
        self.brackets.iter().map(|b| b.kind)
    }

    /// Cancels `()` pairs with a single stack pass.
    pub fn uncanceled(&self) -> Uncanceled {
        let mut open = Vec::new();
        let mut close = Vec::new();
        for (idx, b) in self.brackets.iter().enumerate() {
            match b.kind {
                BracketKind::Open => open.push(idx),
                BracketKind::Close => {
                    if open.pop().is_none() {
                        close.push(idx);
                    }
                }
            }
        }
        Uncanceled { close, open }
    }

    pub fn uncanceled_close_count(&self) -> usize {
        self.uncanceled().close.len()
    }

    pub fn uncanceled_open_count(&self) -> usize {
        self.uncanceled().open.len()
    }

    pub fn rightmost_uncanceled_close(&self) -> Option<&Bracket<S>> {
        self.uncanceled().close.last().map(|&i| &self.brackets[i])
    }

    pub fn leftmost_uncanceled_open(&self) -> Option<&Bracket<S>> {
        self.uncanceled().open.first().map(|&i| &self.brackets[i])
    }

    pub fn map_sources<T>(self, f: impl Fn(S) -> T) -> BracketString<T> {
        BracketString {
            brackets: self
                .brackets
                .into_iter()
                .map(|b| Bracket { kind: b.kind, source: f(b.source) })
                .collect(),
        }
    }
}

impl<S> FromIterator<Bracket<S>> for BracketString<S> {
    fn from_iter<I: IntoIterator<Item = Bracket<S>>>(iter: I) -> Self {
        BracketString { brackets: iter.into_iter().collect() }
    }
}

/// Renders only the bracket characters, e.g. `)((`.
impl<S> fmt::Display for BracketString<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.brackets {
            f.write_str(match b.kind {
                BracketKind::Open => "(",
                BracketKind::Close => ")",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(s: &str) -> BracketString<usize> {
        s.chars()
            .enumerate()
            .map(|(i, c)| Bracket {
                kind: if c == '(' { BracketKind::Open } else { BracketKind::Close },
                source: i,
            })
            .collect()
    }

    /// Naive oracle: repeatedly delete an adjacent "()" until none remain.
    fn naive_reduce(s: &str) -> String {
        let mut cur = s.to_string();
        while let Some(p) = cur.find("()") {
            cur.replace_range(p..p + 2, "");
        }
        cur
    }

    #[test]
    fn cancels_nested_pairs() {
        let b = parse(")(()((");
        let u = b.uncanceled();
        assert_eq!(u.close, vec![0]);
        assert_eq!(u.open, vec![1, 4, 5]);
        assert_eq!(b.rightmost_uncanceled_close().unwrap().source, 0);
        assert_eq!(b.leftmost_uncanceled_open().unwrap().source, 1);
    }

    #[test]
    fn empty_string() {
        let b: BracketString<()> = BracketString::new();
        assert_eq!(b.uncanceled(), Uncanceled::default());
        assert!(b.leftmost_uncanceled_open().is_none());
        assert_eq!(b.to_string(), "");
    }

    proptest! {
        #[test]
        fn stack_scan_matches_repeated_deletion(s in "[()]{0,40}") {
            let b = parse(&s);
            let u = b.uncanceled();
            let expected = naive_reduce(&s);
            let got: String = ")".repeat(u.close.len()) + &"(".repeat(u.open.len());
            prop_assert_eq!(got, expected);
        }
    }
}
