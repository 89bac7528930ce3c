//! Root-system data for type `D_n`.
//!
//! Positive roots come in two families, stored symbolically:
//!
//! | root          | simple roots                                   | ε-basis       | indices         |
//! |---------------|------------------------------------------------|---------------|-----------------|
//! | `β(i,k)`      | `α_i + … + α_k`                                | `ε_i − ε_{k+1}` | `1 ≤ i ≤ k ≤ n−1` |
//! | `γ(i,k)`      | `α_i + … + α_{n−2} + α_n + α_{n−1} + … + α_k`  | `ε_i + ε_k`   | `1 ≤ i < k ≤ n`   |
//!
//! The simple roots are `α_i = ε_i − ε_{i+1}` for `i < n` and `α_n = ε_{n−1} + ε_n`.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// Smallest supported rank; the diagram needs a trivalent node distinct from `α_1`.
pub const MIN_RANK: usize = 4;

/// The rank `n` of `D_n`, always at least [`MIN_RANK`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n < MIN_RANK {
            Err(Error::InvalidRank(n))
        } else {
            Ok(Rank(n))
        }
    }

    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// The index set `I = {1, …, n}`.
    pub fn indices(self) -> std::ops::RangeInclusive<usize> {
        1..=self.0
    }

    pub fn check_index(self, i: usize) -> Result<()> {
        if (1..=self.0).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { i, n: self.0 })
        }
    }
}

impl<'de> Deserialize<'de> for Rank {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = usize::deserialize(d)?;
        Rank::new(n).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    Beta,
    Gamma,
}

/// A positive root `β(i,k)` or `γ(i,k)`.
///
/// The derived ordering is only a storage order. Use [`canonical_key`] for
/// presentation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub kind: RootKind,
    pub i: usize,
    pub k: usize,
}

impl Root {
    pub const fn beta(i: usize, k: usize) -> Self {
        Root { kind: RootKind::Beta, i, k }
    }

    pub const fn gamma(i: usize, k: usize) -> Self {
        Root { kind: RootKind::Gamma, i, k }
    }

    pub fn is_valid(&self, rank: Rank) -> bool {
        let n = rank.n();
        match self.kind {
            RootKind::Beta => 1 <= self.i && self.i <= self.k && self.k < n,
            RootKind::Gamma => 1 <= self.i && self.i < self.k && self.k <= n,
        }
    }

    pub fn validate(self, rank: Rank) -> Result<Self> {
        if self.is_valid(rank) {
            Ok(self)
        } else {
            Err(Error::InvalidRoot { root: self, n: rank.n() })
        }
    }

    /// The root as a vector in the ε-basis. Panics if the root is not valid for `rank`.
    pub fn epsilon(self, rank: Rank) -> WeightVector {
        assert!(self.is_valid(rank), "{self} is not a root of {rank}");
        let mut v = vec![0; rank.n()];
        match self.kind {
            RootKind::Beta => {
                v[self.i - 1] += 1;
                v[self.k] -= 1;
            }
            RootKind::Gamma => {
                v[self.i - 1] += 1;
                v[self.k - 1] += 1;
            }
        }
        WeightVector(v)
    }

    /// Sum of the simple-root coefficients.
    pub fn height(self, rank: Rank) -> u32 {
        simple_coords_unchecked(self, rank).iter().sum::<i64>() as u32
    }

    /// Plain-ASCII name, e.g. `b1,3` or `g2,4`.
    pub fn ascii(self) -> String {
        match self.kind {
            RootKind::Beta => format!("b{},{}", self.i, self.k),
            RootKind::Gamma => format!("g{},{}", self.i, self.k),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::Beta => write!(f, "β({},{})", self.i, self.k),
            RootKind::Gamma => write!(f, "γ({},{})", self.i, self.k),
        }
    }
}

/// An integer vector of coefficients of `ε_1, …, ε_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn zero(rank: Rank) -> Self {
        WeightVector(vec![0; rank.n()])
    }

    pub fn from_coords(rank: Rank, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != rank.n() {
            return Err(Error::LengthMismatch { expected: rank.n(), got: coords.len() });
        }
        Ok(WeightVector(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, m: i64) -> Self {
        WeightVector(self.0.iter().map(|c| c * m).collect())
    }

    pub(crate) fn add_at(&mut self, idx: usize, delta: i64) {
        self.0[idx] += delta;
    }
}

impl AddAssign<&WeightVector> for WeightVector {
    fn add_assign(&mut self, rhs: &WeightVector) {
        assert_eq!(self.0.len(), rhs.0.len(), "weight length mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&WeightVector> for WeightVector {
    fn sub_assign(&mut self, rhs: &WeightVector) {
        assert_eq!(self.0.len(), rhs.0.len(), "weight length mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&WeightVector> for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&WeightVector> for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, c) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Result of subtracting a simple root from a positive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lowered {
    Root(Root),
    /// The root was the simple root itself.
    Zero,
}

/// All `n(n−1)` positive roots, in canonical order (see [`canonical_key`]).
pub fn positive_roots(rank: Rank) -> Vec<Root> {
    let n = rank.n();
    let mut roots = Vec::with_capacity(n * (n - 1));
    for i in 1..n {
        for k in i..n {
            roots.push(Root::beta(i, k));
        }
        for k in i + 1..=n {
            roots.push(Root::gamma(i, k));
        }
    }
    roots.sort_by_cached_key(|r| canonical_key(*r, rank));
    roots
}

/// Presentation order for roots: first by the lowest simple root in the
/// support, then lexicographically by simple-root coordinates.
///
/// For `D_4` this lists `α_1, …, γ(1,2)`, then `γ(2,4) < β(2,3) < γ(2,3)`,
/// then `α_3`, then `α_4`.
pub fn canonical_key(r: Root, rank: Rank) -> (usize, Vec<i64>) {
    let coords = simple_coords_unchecked(r, rank);
    let lead = coords.iter().position(|&c| c != 0).unwrap_or(coords.len());
    (lead, coords)
}

pub fn root_to_epsilon(r: Root, rank: Rank) -> Result<WeightVector> {
    Ok(r.validate(rank)?.epsilon(rank))
}

pub fn root_to_simple_coords(r: Root, rank: Rank) -> Result<Vec<i64>> {
    Ok(simple_coords_unchecked(r.validate(rank)?, rank))
}

// Reads the chains off the simple-root column of the root table.
fn simple_coords_unchecked(r: Root, rank: Rank) -> Vec<i64> {
    let n = rank.n();
    let mut c = vec![0i64; n];
    match r.kind {
        RootKind::Beta => {
            for m in r.i..=r.k {
                c[m - 1] += 1;
            }
        }
        RootKind::Gamma => {
            // α_i + … + α_{n−2}
            for m in r.i..=n - 2 {
                c[m - 1] += 1;
            }
            // + α_n
            c[n - 1] += 1;
            // + α_{n−1} + … + α_k
            for m in r.k..n {
                c[m - 1] += 1;
            }
        }
    }
    c
}

/// `α_i` as a root: `β(i,i)` for `i < n` and `γ(n−1,n)` for `i = n`.
pub fn simple_root(i: usize, rank: Rank) -> Result<Root> {
    rank.check_index(i)?;
    Ok(if i < rank.n() {
        Root::beta(i, i)
    } else {
        Root::gamma(rank.n() - 1, rank.n())
    })
}

/// `α_i` in the ε-basis. Panics if `i` is out of range.
pub fn simple_root_epsilon(i: usize, rank: Rank) -> WeightVector {
    simple_root(i, rank).expect("simple root index").epsilon(rank)
}

/// Decodes an ε-vector back into a positive root, if it is one.
pub fn epsilon_to_root(w: &WeightVector, rank: Rank) -> Option<Root> {
    if w.len() != rank.n() {
        return None;
    }
    let mut nonzero = w.coords().iter().enumerate().filter(|(_, &c)| c != 0);
    let (a, &ca) = nonzero.next()?;
    let (b, &cb) = nonzero.next()?;
    if nonzero.next().is_some() {
        return None;
    }
    // positions are 0-based here; a < b
    match (ca, cb) {
        (1, -1) => Some(Root::beta(a + 1, b)),
        (1, 1) => Some(Root::gamma(a + 1, b + 1)),
        _ => None,
    }
    .filter(|r| r.is_valid(rank))
}

/// Coordinates of a root-lattice vector in the simple-root basis, or `None`
/// if `w` is not in the root lattice.
pub fn epsilon_to_simple_coords(w: &WeightVector, rank: Rank) -> Option<Vec<i64>> {
    let n = rank.n();
    if w.len() != n {
        return None;
    }
    let v = w.coords();
    let mut partial = Vec::with_capacity(n);
    let mut acc = 0;
    for &x in v {
        acc += x;
        partial.push(acc);
    }
    if partial[n - 1] % 2 != 0 {
        return None;
    }
    let mut c = partial[..n - 2].to_vec();
    let last = partial[n - 1] / 2;
    c.push(partial[n - 2] - last);
    c.push(last);
    Some(c)
}

/// The root `r + α_i`, if it is positive.
pub fn add_simple(r: Root, i: usize, rank: Rank) -> Option<Root> {
    if !r.is_valid(rank) || rank.check_index(i).is_err() {
        return None;
    }
    let w = &r.epsilon(rank) + &simple_root_epsilon(i, rank);
    epsilon_to_root(&w, rank)
}

/// `r − α_i` when it is a positive root or zero.
pub fn subtract_simple(r: Root, i: usize, rank: Rank) -> Option<Lowered> {
    if !r.is_valid(rank) || rank.check_index(i).is_err() {
        return None;
    }
    let w = &r.epsilon(rank) - &simple_root_epsilon(i, rank);
    if w.is_zero() {
        return Some(Lowered::Zero);
    }
    epsilon_to_root(&w, rank).map(Lowered::Root)
}

/// `⟨α_i^∨, w⟩` in the standard realization: `c_i − c_{i+1}` for `i < n`,
/// `c_{n−1} + c_n` for `i = n`. Panics if `i` is out of range.
pub fn coroot_pairing(i: usize, w: &WeightVector, rank: Rank) -> i64 {
    let n = rank.n();
    assert!((1..=n).contains(&i), "coroot index {i} out of range for {rank}");
    assert_eq!(w.len(), n, "weight length mismatch");
    let c = w.coords();
    if i < n {
        c[i - 1] - c[i]
    } else {
        c[n - 2] + c[n - 1]
    }
}

/// The Cartan matrix `a_ij = ⟨α_j^∨, α_i⟩`, built from the Dynkin diagram.
pub fn cartan_matrix(rank: Rank) -> Vec<Vec<i64>> {
    let n = rank.n();
    let adjacent = |a: usize, b: usize| -> bool {
        let (lo, hi) = (a.min(b), a.max(b));
        (hi == lo + 1 && hi < n) || (lo == n - 2 && hi == n)
    };
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if i == j {
                        2
                    } else if adjacent(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// Number of multisets of positive roots summing to `mu` (simple-root
/// coordinates). Exhaustive recursion over the root list, one multiplicity per
/// root in turn.
pub fn kostant_partition_count(mu: &[i64], rank: Rank) -> u64 {
    assert_eq!(mu.len(), rank.n(), "mu must have length n");
    if mu.iter().any(|&c| c < 0) {
        return 0;
    }
    let roots: Vec<Vec<i64>> = positive_roots(rank)
        .into_iter()
        .map(|r| simple_coords_unchecked(r, rank))
        .collect();
    let mut remaining = mu.to_vec();
    count_from(&roots, 0, &mut remaining)
}

fn count_from(roots: &[Vec<i64>], idx: usize, remaining: &mut [i64]) -> u64 {
    if remaining.iter().all(|&c| c == 0) {
        return 1;
    }
    if idx == roots.len() {
        return 0;
    }
    let root = &roots[idx];
    let mut total = 0;
    let mut used = 0;
    loop {
        total += count_from(roots, idx + 1, remaining);
        if remaining.iter().zip(root).any(|(r, c)| r < c) {
            break;
        }
        for (r, c) in remaining.iter_mut().zip(root) {
            *r -= c;
        }
        used += 1;
    }
    for (r, c) in remaining.iter_mut().zip(root) {
        *r += c * used;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn rank_rejects_small_n() {
        assert!(matches!(Rank::new(3), Err(Error::InvalidRank(3))));
        assert!(Rank::new(4).is_ok());
        let err = Rank::new(2).unwrap_err().to_string();
        assert!(err.contains("rank must be ≥ 4"), "{err}");
    }

    #[test]
    fn positive_root_count_matches_index_enumeration() {
        for n in 4..=8 {
            let rank = d(n);
            // enumerate index pairs straight from the table's ranges
            let mut brute = 0;
            for i in 1..=n {
                for k in 1..=n {
                    if i <= k && k < n {
                        brute += 1;
                    }
                    if i < k {
                        brute += 1;
                    }
                }
            }
            let roots = positive_roots(rank);
            assert_eq!(roots.len(), brute);
            assert_eq!(roots.len(), n * (n - 1));
            let mut dedup = roots.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), roots.len());
        }
        assert_eq!(positive_roots(d(4)).len(), 12);
    }

    #[test]
    fn d4_membership() {
        let roots = positive_roots(d(4));
        assert!(roots.contains(&Root::gamma(3, 4)));
        assert!(roots.contains(&Root::beta(1, 3)));
        assert!(!roots.contains(&Root::gamma(4, 4)));
        assert!(!Root::gamma(4, 4).is_valid(d(4)));
    }

    #[test]
    fn epsilon_examples() {
        let r = d(4);
        assert_eq!(root_to_epsilon(Root::beta(1, 1), r).unwrap().coords(), &[1, -1, 0, 0]);
        assert_eq!(root_to_epsilon(Root::gamma(3, 4), r).unwrap().coords(), &[0, 0, 1, 1]);
        assert_eq!(root_to_epsilon(Root::beta(1, 3), r).unwrap().coords(), &[1, 0, 0, -1]);
        assert!(matches!(
            root_to_epsilon(Root::beta(2, 4), r),
            Err(Error::InvalidRoot { .. })
        ));
    }

    #[test]
    fn simple_coord_examples() {
        let r = d(4);
        assert_eq!(root_to_simple_coords(Root::gamma(1, 2), r).unwrap(), vec![1, 2, 1, 1]);
        assert_eq!(root_to_simple_coords(Root::beta(2, 3), r).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(root_to_simple_coords(Root::gamma(3, 4), r).unwrap(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn simple_coords_agree_with_epsilon() {
        for n in 4..=7 {
            let rank = d(n);
            let alphas: Vec<_> = (1..=n).map(|i| simple_root_epsilon(i, rank)).collect();
            for r in positive_roots(rank) {
                let coords = root_to_simple_coords(r, rank).unwrap();
                let mut via = WeightVector::zero(rank);
                for (c, a) in coords.iter().zip(&alphas) {
                    via += &a.scaled(*c);
                }
                assert_eq!(via, r.epsilon(rank), "{r}");
                assert_eq!(epsilon_to_simple_coords(&r.epsilon(rank), rank), Some(coords));
                assert_eq!(epsilon_to_root(&r.epsilon(rank), rank), Some(r));
            }
        }
    }

    #[test]
    fn simple_root_examples() {
        let r = d(4);
        assert_eq!(simple_root(1, r).unwrap(), Root::beta(1, 1));
        assert_eq!(simple_root(4, r).unwrap(), Root::gamma(3, 4));
        assert!(matches!(simple_root(5, r), Err(Error::IndexOutOfRange { i: 5, n: 4 })));
        assert!(simple_root(0, r).is_err());
        // only positive root with simple coordinates (0,0,0,1)
        let hits: Vec<_> = positive_roots(r)
            .into_iter()
            .filter(|x| root_to_simple_coords(*x, r).unwrap() == vec![0, 0, 0, 1])
            .collect();
        assert_eq!(hits, vec![Root::gamma(3, 4)]);
    }

    #[test]
    fn add_and_subtract_examples() {
        let r = d(4);
        assert_eq!(add_simple(Root::beta(1, 1), 2, r), Some(Root::beta(1, 2)));
        assert_eq!(add_simple(Root::beta(1, 2), 4, r), Some(Root::gamma(1, 4)));
        assert_eq!(add_simple(Root::beta(1, 1), 1, r), None);
        assert_eq!(subtract_simple(Root::gamma(3, 4), 4, r), Some(Lowered::Zero));
        assert_eq!(
            subtract_simple(Root::gamma(2, 3), 4, r),
            Some(Lowered::Root(Root::beta(2, 3)))
        );
        assert_eq!(subtract_simple(Root::beta(1, 3), 2, r), None);
    }

    #[test]
    fn add_subtract_round_trip() {
        for n in 4..=7 {
            let rank = d(n);
            for r in positive_roots(rank) {
                for i in rank.indices() {
                    if let Some(up) = add_simple(r, i, rank) {
                        assert_eq!(subtract_simple(up, i, rank), Some(Lowered::Root(r)));
                    }
                }
            }
        }
    }

    #[test]
    fn coroot_pairing_examples() {
        let r = d(4);
        let w = |v: Vec<i64>| WeightVector::from_coords(r, v).unwrap();
        assert_eq!(coroot_pairing(1, &w(vec![1, -1, 0, 0]), r), 2);
        // α_3 and α_4 are not joined in D_4; both meet α_2
        assert_eq!(coroot_pairing(3, &w(vec![0, 0, 1, 1]), r), 0);
        assert_eq!(coroot_pairing(2, &w(vec![0, 0, 1, 1]), r), -1);
        assert_eq!(coroot_pairing(4, &w(vec![0, 1, -1, 0]), r), -1);
        assert_eq!(coroot_pairing(4, &w(vec![0, 0, 1, -1]), r), 0);
        assert_eq!(coroot_pairing(4, &w(vec![1, -1, 0, 0]), r), 0);
    }

    #[test]
    fn coroot_pairing_reproduces_cartan_matrix() {
        for n in 4..=8 {
            let rank = d(n);
            let a = cartan_matrix(rank);
            for i in 1..=n {
                let alpha_i = simple_root_epsilon(i, rank);
                for j in 1..=n {
                    assert_eq!(coroot_pairing(j, &alpha_i, rank), a[i - 1][j - 1], "i={i} j={j}");
                }
            }
        }
        // spot-check the printed corner of the D_4 matrix
        let a = cartan_matrix(d(4));
        assert_eq!(a[1], vec![-1, 2, -1, -1]);
        assert_eq!(a[2], vec![0, -1, 2, 0]);
        assert_eq!(a[3], vec![0, -1, 0, 2]);
    }

    /// Independent oracle: coefficient extraction from the truncated generating
    /// function prod_β 1/(1 - x^β), computed by dense dynamic programming.
    fn generating_function_count(mu: &[i64], rank: Rank) -> u64 {
        let n = rank.n();
        let dims: Vec<usize> = mu.iter().map(|&m| m as usize + 1).collect();
        let size: usize = dims.iter().product();
        let index = |v: &[usize]| v.iter().zip(&dims).fold(0, |acc, (x, d)| acc * d + x);
        let decode = |mut idx: usize| {
            let mut v = vec![0usize; n];
            for p in (0..n).rev() {
                v[p] = idx % dims[p];
                idx /= dims[p];
            }
            v
        };
        let mut table = vec![0u64; size];
        table[0] = 1;
        for r in positive_roots(rank) {
            let c = root_to_simple_coords(r, rank).unwrap();
            // unbounded knapsack in increasing index order
            for idx in 0..size {
                let v = decode(idx);
                if v.iter().zip(&c).all(|(x, y)| *x as i64 >= *y) {
                    let prev: Vec<usize> =
                        v.iter().zip(&c).map(|(x, y)| (*x as i64 - y) as usize).collect();
                    table[idx] += table[index(&prev)];
                }
            }
        }
        table[index(&mu.iter().map(|&m| m as usize).collect::<Vec<_>>())]
    }

    #[test]
    fn partition_count_examples() {
        let r = d(4);
        assert_eq!(kostant_partition_count(&[1, 0, 0, 0], r), 1);
        assert_eq!(kostant_partition_count(&[1, 1, 0, 0], r), 2);
        assert_eq!(kostant_partition_count(&[0, 0, 0, 0], r), 1);
        assert_eq!(kostant_partition_count(&[0, 0, 1, 1], r), 1);
        assert_eq!(kostant_partition_count(&[-1, 0, 0, 0], r), 0);
    }

    #[test]
    fn partition_count_matches_generating_function() {
        let r = d(4);
        for a in 0..=2 {
            for b in 0..=3 {
                for c in 0..=2 {
                    for e in 0..=2 {
                        let mu = [a, b, c, e];
                        assert_eq!(
                            kostant_partition_count(&mu, r),
                            generating_function_count(&mu, r),
                            "mu={mu:?}"
                        );
                    }
                }
            }
        }
        let r5 = d(5);
        for mu in [[1, 1, 1, 1, 1], [1, 2, 2, 1, 1], [0, 1, 1, 1, 1], [2, 1, 1, 0, 1]] {
            assert_eq!(kostant_partition_count(&mu, r5), generating_function_count(&mu, r5));
        }
    }

    #[test]
    fn canonical_order_d4() {
        let r = d(4);
        let order = positive_roots(r);
        let pos = |x: Root| order.iter().position(|y| *y == x).unwrap();
        assert!(pos(Root::beta(1, 1)) < pos(Root::gamma(1, 3)));
        assert!(pos(Root::gamma(1, 3)) < pos(Root::gamma(1, 2)));
        assert!(pos(Root::gamma(1, 2)) < pos(Root::gamma(2, 4)));
        assert!(pos(Root::gamma(2, 4)) < pos(Root::beta(2, 3)));
        assert!(pos(Root::beta(2, 3)) < pos(Root::gamma(2, 3)));
        assert!(pos(Root::gamma(2, 3)) < pos(Root::beta(3, 3)));
        assert_eq!(*order.last().unwrap(), Root::gamma(3, 4));
    }

    #[test]
    fn root_json_shape() {
        let j = serde_json::to_string(&Root::gamma(3, 4)).unwrap();
        assert_eq!(j, r#"{"kind":"gamma","i":3,"k":4}"#);
        let back: Root = serde_json::from_str(r#"{"kind":"beta","i":1,"k":2}"#).unwrap();
        assert_eq!(back, Root::beta(1, 2));
        let w = WeightVector::from_coords(d(4), vec![1, -1, 0, 0]).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,-1,0,0]");
    }
}
