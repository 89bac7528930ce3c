//! Kostant partitions: finite multisets of positive roots, with the crystal
//! structure given by bracketing along the ordered sets `Φ_i`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bracket::{BracketKind, BracketString};
use crate::cartan::{
    add_simple, canonical_key, coroot_pairing, simple_root, subtract_simple, Lowered, Rank, Root,
    RootKind, WeightVector,
};
use crate::error::{Error, Result};

/// A multiset of positive roots. Absent roots have multiplicity zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KostantPartition {
    rank: Rank,
    parts: BTreeMap<Root, u32>,
}

#[derive(Serialize, Deserialize)]
struct PartJson {
    kind: RootKind,
    i: usize,
    k: usize,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    n: usize,
    parts: Vec<PartJson>,
}

impl KostantPartition {
    /// The empty partition, the highest-weight element.
    pub fn empty(rank: Rank) -> Self {
        KostantPartition { rank, parts: BTreeMap::new() }
    }

    /// Builds a partition from `(root, multiplicity)` pairs; repeated roots add up
    /// and zero multiplicities are dropped.
    pub fn from_parts(rank: Rank, parts: impl IntoIterator<Item = (Root, u32)>) -> Result<Self> {
        let mut a = Self::empty(rank);
        for (r, m) in parts {
            r.validate(rank)?;
            a.add(r, m);
        }
        Ok(a)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn multiplicity(&self, r: Root) -> u32 {
        self.parts.get(&r).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts counted with multiplicity.
    pub fn size(&self) -> u32 {
        self.parts.values().sum()
    }

    /// Parts with nonzero multiplicity, in canonical root order.
    pub fn parts(&self) -> Vec<(Root, u32)> {
        let mut v: Vec<(Root, u32)> = self.parts.iter().map(|(&r, &m)| (r, m)).collect();
        v.sort_by_cached_key(|(r, _)| canonical_key(*r, self.rank));
        v
    }

    pub(crate) fn add(&mut self, r: Root, m: u32) {
        if m > 0 {
            *self.parts.entry(r).or_insert(0) += m;
        }
    }

    /// Removes one copy of `r`. Panics if `r` is absent.
    pub(crate) fn remove_one(&mut self, r: Root) {
        let m = self.parts.get_mut(&r).expect("part present");
        *m -= 1;
        if *m == 0 {
            self.parts.remove(&r);
        }
    }

    /// Multiset sum. Panics on a rank mismatch.
    pub fn merged(&self, other: &KostantPartition) -> KostantPartition {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = self.clone();
        for (&r, &m) in &other.parts {
            out.add(r, m);
        }
        out
    }

    /// `S_i(α)`: `c_β` brackets for each `β ∈ Φ_i`, in the order of `Φ_i`.
    pub fn bracket_sequence(&self, i: usize) -> BracketString<Root> {
        let mut out = BracketString::new();
        for (r, kind) in phi_set(i, self.rank).members {
            out.push_n(kind, r, self.multiplicity(r) as usize);
        }
        out
    }

    pub fn f(&self, i: usize) -> KostantPartition {
        let mut out = self.clone();
        match self.bracket_sequence(i).leftmost_uncanceled_open() {
            Some(b) => {
                let raised = add_simple(b.source, i, self.rank).expect("open roots admit +α_i");
                out.remove_one(b.source);
                out.add(raised, 1);
            }
            None => out.add(simple_root(i, self.rank).expect("valid color"), 1),
        }
        out
    }

    pub fn e(&self, i: usize) -> Option<KostantPartition> {
        let b = self.bracket_sequence(i).rightmost_uncanceled_close().map(|b| b.source)?;
        let mut out = self.clone();
        out.remove_one(b);
        match subtract_simple(b, i, self.rank).expect("close roots admit −α_i") {
            Lowered::Root(r) => out.add(r, 1),
            Lowered::Zero => {}
        }
        Some(out)
    }

    /// `wt(α) = −Σ c_β β`.
    pub fn weight(&self) -> WeightVector {
        let mut w = WeightVector::zero(self.rank);
        for (&r, &m) in &self.parts {
            w -= &r.epsilon(self.rank).scaled(m as i64);
        }
        w
    }

    /// Number of uncanceled `)` in `S_i(α)`.
    pub fn epsilon(&self, i: usize) -> u32 {
        self.bracket_sequence(i).uncanceled_close_count() as u32
    }

    pub fn phi(&self, i: usize) -> i64 {
        self.epsilon(i) as i64 + coroot_pairing(i, &self.weight(), self.rank)
    }

    fn json_repr(&self) -> PartitionJson {
        let parts = self
            .parts()
            .into_iter()
            .map(|(r, mult)| PartJson { kind: r.kind, i: r.i, k: r.k, mult })
            .collect();
        PartitionJson { n: self.rank.n(), parts }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.json_repr()).expect("partition serializes")
    }

    /// Compact JSON with parts in canonical order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_repr()).expect("partition serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json_value(serde_json::from_str(s)?)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let raw: PartitionJson = serde_json::from_value(v)?;
        let rank = Rank::new(raw.n)?;
        let mut a = Self::empty(rank);
        for p in raw.parts {
            let r = Root { kind: p.kind, i: p.i, k: p.k };
            if !r.is_valid(rank) {
                return Err(Error::InvalidPartition(format!("{r} is not a positive root of {rank}")));
            }
            a.add(r, p.mult);
        }
        Ok(a)
    }
}

/// Linear form, e.g. `5β(1,1) + γ(1,3)`; `0` for the empty partition.
impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.parts();
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (r, m)) in parts.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if *m > 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// The ordered set `Φ_i` together with the bracket each member contributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSequence {
    pub i: usize,
    pub members: Vec<(Root, BracketKind)>,
}

impl PhiSequence {
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.members.iter().map(|(r, _)| *r)
    }
}

/// `Φ_i` in bracketing order. Panics if `i` is out of range.
pub fn phi_set(i: usize, rank: Rank) -> PhiSequence {
    let n = rank.n();
    assert!((1..=n).contains(&i), "color {i} out of range for {rank}");
    let mut symbols = Vec::new();
    if i < n {
        for k in 1..i {
            symbols.extend([
                Root::beta(k, i),
                Root::beta(k, i - 1),
                Root::gamma(k, i),
                Root::gamma(k, i + 1),
            ]);
        }
        symbols.push(Root::beta(i, i));
    } else {
        for k in 1..=n - 2 {
            symbols.extend([
                Root::gamma(k, n),
                Root::beta(k, n - 2),
                Root::gamma(k, n - 1),
                Root::beta(k, n - 1),
            ]);
        }
        symbols.push(Root::gamma(n - 1, n));
    }
    let members = symbols
        .into_iter()
        .filter(|r| r.is_valid(rank))
        .map(|r| (r, direction(r, i, rank)))
        .collect();
    PhiSequence { i, members }
}

fn direction(r: Root, i: usize, rank: Rank) -> BracketKind {
    if subtract_simple(r, i, rank).is_some() {
        BracketKind::Close
    } else {
        debug_assert!(add_simple(r, i, rank).is_some(), "{r} is not in Φ_{i}");
        BracketKind::Open
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn b(i: usize, k: usize) -> Root {
        Root::beta(i, k)
    }

    fn g(i: usize, k: usize) -> Root {
        Root::gamma(i, k)
    }

    /// The D_4 partition whose crystal neighbourhood is worked out by hand.
    pub(crate) fn alpha() -> KostantPartition {
        KostantPartition::from_parts(
            d(4),
            [
                (b(1, 1), 5),
                (g(1, 3), 1),
                (g(1, 2), 3),
                (g(2, 4), 2),
                (b(2, 3), 1),
                (g(2, 3), 1),
                (b(3, 3), 1),
                (g(3, 4), 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn phi_4_order_and_directions() {
        let p = phi_set(4, d(4));
        let roots: Vec<Root> = p.roots().collect();
        assert_eq!(
            roots,
            vec![g(1, 4), b(1, 2), g(1, 3), b(1, 3), g(2, 4), b(2, 2), g(2, 3), b(2, 3), g(3, 4)]
        );
        for (r, kind) in &p.members {
            let expected = if r.kind == RootKind::Gamma { BracketKind::Close } else { BracketKind::Open };
            assert_eq!(*kind, expected, "{r}");
        }
    }

    #[test]
    fn phi_sets_small_colors() {
        let r = d(4);
        assert_eq!(phi_set(1, r).members, vec![(b(1, 1), BracketKind::Close)]);
        let p2 = phi_set(2, r);
        assert_eq!(p2.roots().collect::<Vec<_>>(), vec![b(1, 2), b(1, 1), g(1, 2), g(1, 3), b(2, 2)]);
        assert_eq!(p2.members.last(), Some(&(b(2, 2), BracketKind::Close)));
    }

    /// The set-builder description of `Φ_i`, without any ordering.
    fn phi_set_builder(i: usize, r: Rank) -> Vec<Root> {
        let n = r.n();
        let mut v = Vec::new();
        if i < n {
            for k in 1..=i {
                v.extend([b(k, i - 1), b(k, i)]);
            }
            for k in 1..i {
                v.extend([g(k, i), g(k, i + 1)]);
            }
        } else {
            for k in 1..=n - 2 {
                v.extend([b(k, n - 2), b(k, n - 1), g(k, n - 1), g(k, n)]);
            }
            v.push(g(n - 1, n));
        }
        v.retain(|x| x.is_valid(r));
        v.sort();
        v.dedup();
        v
    }

    #[test]
    fn phi_set_matches_set_builder() {
        for n in 4..=7 {
            let r = d(n);
            for i in 1..=n {
                let mut got: Vec<Root> = phi_set(i, r).roots().collect();
                let len = got.len();
                got.sort();
                got.dedup();
                assert_eq!(got.len(), len, "duplicates in Φ_{i}");
                assert_eq!(got, phi_set_builder(i, r), "n={n} i={i}");
                for x in phi_set(i, r).roots() {
                    assert!(
                        subtract_simple(x, i, r).is_some() != add_simple(x, i, r).is_some(),
                        "{x} must have exactly one direction for i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_bracket_color_4() {
        let a = alpha();
        let s = a.bracket_sequence(4);
        assert_eq!(s.to_string(), "))))())");
        assert_eq!(s.rightmost_uncanceled_close().unwrap().source, g(3, 4));
        assert_eq!(a.epsilon(4), 5);
    }

    #[test]
    fn alpha_e4_f4() {
        let a = alpha();
        let mut minus = a.clone();
        minus.remove_one(g(3, 4));
        assert_eq!(a.e(4), Some(minus));
        let mut plus = a.clone();
        plus.add(g(3, 4), 1);
        assert_eq!(a.f(4), plus);
    }

    #[test]
    fn row_one_partition_color_2() {
        let a = KostantPartition::from_parts(
            d(4),
            [(b(1, 1), 4), (b(1, 3), 2), (g(1, 4), 1), (g(1, 2), 2)],
        )
        .unwrap();
        let s = a.bracket_sequence(2);
        assert_eq!(s.to_string(), "(((())");
        assert_eq!(s.leftmost_uncanceled_open().unwrap().source, b(1, 1));
        let expected = KostantPartition::from_parts(
            d(4),
            [(b(1, 1), 3), (b(1, 2), 1), (b(1, 3), 2), (g(1, 4), 1), (g(1, 2), 2)],
        )
        .unwrap();
        assert_eq!(a.f(2), expected);
    }

    #[test]
    fn empty_partition() {
        let r = d(4);
        let e = KostantPartition::empty(r);
        for i in 1..=4 {
            assert!(e.bracket_sequence(i).is_empty());
            assert_eq!(e.e(i), None);
            assert_eq!(e.epsilon(i), 0);
            assert_eq!(e.phi(i), 0);
            assert_eq!(e.f(i).parts(), vec![(simple_root(i, r).unwrap(), 1)]);
        }
        assert!(e.weight().is_zero());
        assert_eq!(e.f(1).weight().coords(), &[-1, 1, 0, 0]);
    }

    #[test]
    fn alpha_weight_from_simple_coordinates() {
        // −(5α1 + (α1+α2+α3+α4) + 3(α1+2α2+α3+α4) + 2(α2+α4) + (α2+α3) + (α2+α3+α4) + α3 + 2α4)
        let simple = [5 + 1 + 3, 1 + 6 + 2 + 1 + 1, 1 + 3 + 1 + 1 + 1, 1 + 3 + 2 + 1 + 2];
        let r = d(4);
        let mut w = WeightVector::zero(r);
        for (idx, c) in simple.iter().enumerate() {
            w -= &crate::cartan::simple_root_epsilon(idx + 1, r).scaled(*c);
        }
        assert_eq!(alpha().weight(), w);
    }

    #[test]
    fn json_is_canonical() {
        let a = alpha();
        let j = a.to_json();
        assert!(j.starts_with(r#"{"n":4,"parts":[{"kind":"beta","i":1,"k":1,"mult":5},{"kind":"gamma","i":1,"k":3,"mult":1}"#), "{j}");
        assert_eq!(KostantPartition::from_json_str(&j).unwrap(), a);
        assert!(KostantPartition::from_json_str(r#"{"n":4,"parts":[{"kind":"beta","i":1,"k":4,"mult":1}]}"#).is_err());
    }

    #[test]
    fn linear_display() {
        let a = alpha();
        assert_eq!(
            a.to_string(),
            "5β(1,1) + γ(1,3) + 3γ(1,2) + 2γ(2,4) + β(2,3) + γ(2,3) + β(3,3) + 2γ(3,4)"
        );
    }
}
