//! The crystal isomorphism `Ψ` from marginally large tableaux to Kostant
//! partitions, computed row by row, and its inverse.

use crate::cartan::{Rank, Root};
use crate::error::{Error, Result};
use crate::kostant::KostantPartition;
use crate::tableaux::{Letter, MLTableau};

/// Letter counts of one row, shaded boxes included.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowDecomposition {
    pub row: usize,
    /// `unbarred[k]` is the number of `k`s, `k = 0..=n` (index 0 unused).
    pub unbarred: Vec<u32>,
    /// `barred[k]` is the number of `k̄`s.
    pub barred: Vec<u32>,
}

impl RowDecomposition {
    pub fn from_row(j: usize, row: &[Letter], rank: Rank) -> Self {
        let n = rank.n();
        let mut d = RowDecomposition { row: j, unbarred: vec![0; n + 1], barred: vec![0; n + 1] };
        for l in row {
            if l.is_barred() {
                d.barred[l.index()] += 1;
            } else {
                d.unbarred[l.index()] += 1;
            }
        }
        d
    }

    /// The sorted row, shaded boxes first.
    pub fn to_row(&self, rank: Rank) -> Vec<Letter> {
        let n = rank.n();
        let mut out = Vec::new();
        for k in 1..=n {
            out.extend(std::iter::repeat_n(Letter::unbarred(k), self.unbarred[k] as usize));
        }
        for k in (1..=n).rev() {
            out.extend(std::iter::repeat_n(Letter::barred(k), self.barred[k] as usize));
        }
        out.sort_by_key(|l| l.level(rank));
        out
    }
}

/// `Ψ(R_j)`.
pub fn psi_row(d: &RowDecomposition, rank: Rank) -> KostantPartition {
    psi_row_rules(d, rank, false)
}

fn psi_row_rules(d: &RowDecomposition, rank: Rank, swap_last_rules: bool) -> KostantPartition {
    let n = rank.n();
    let j = d.row;
    let mut out = KostantPartition::empty(rank);
    let mut a = d.unbarred.clone();
    let mut b = d.barred.clone();

    // j̄ ↦ β(j,j) + γ(j,j+1)
    out.add(Root::beta(j, j), b[j]);
    out.add(Root::gamma(j, j + 1), b[j]);
    b[j] = 0;

    // each pair k, k̄ ↦ β(j,k) + γ(j,k+1)
    for k in j + 1..n {
        let p = a[k].min(b[k]);
        out.add(Root::beta(j, k), p);
        out.add(Root::gamma(j, k + 1), p);
        a[k] -= p;
        b[k] -= p;
    }

    for k in j + 1..=n {
        let (unbarred_root, barred_root) = (Root::beta(j, k - 1), Root::gamma(j, k));
        if swap_last_rules {
            out.add(barred_root, a[k]);
            out.add(unbarred_root, b[k]);
        } else {
            out.add(unbarred_root, a[k]);
            out.add(barred_root, b[k]);
        }
    }
    out
}

/// `Ψ(T) = Σ_j Ψ(R_j)`.
pub fn psi(t: &MLTableau) -> Result<KostantPartition> {
    let violations = t.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidTableau(violations));
    }
    Ok(psi_unchecked(t))
}

/// `Ψ` without validating its argument.
pub fn psi_unchecked(t: &MLTableau) -> KostantPartition {
    psi_with(t, false)
}

/// `Ψ` with the images of leftover unbarred and barred letters exchanged.
/// Not a crystal morphism; exists so verification can be shown to detect
/// a broken map.
#[doc(hidden)]
pub fn psi_mutant(t: &MLTableau) -> KostantPartition {
    psi_with(t, true)
}

fn psi_with(t: &MLTableau, swap: bool) -> KostantPartition {
    let rank = t.rank();
    let mut out = KostantPartition::empty(rank);
    for (r, row) in t.rows().iter().enumerate() {
        let d = RowDecomposition::from_row(r + 1, row, rank);
        out = out.merged(&psi_row_rules(&d, rank, swap));
    }
    out
}

/// Recovers the letters of row `j` from the parts `β(j,·)` and `γ(j,·)`,
/// without shaded boxes.
fn invert_row(a: &KostantPartition, j: usize, rank: Rank) -> RowDecomposition {
    let n = rank.n();
    let mut d = RowDecomposition { row: j, unbarred: vec![0; n + 1], barred: vec![0; n + 1] };
    for k in j..n {
        let cb = a.multiplicity(Root::beta(j, k));
        let cg = a.multiplicity(Root::gamma(j, k + 1));
        let p = cb.min(cg);
        if k == j {
            d.barred[j] += p;
        } else {
            d.unbarred[k] += p;
            d.barred[k] += p;
        }
        d.unbarred[k + 1] += cb - p;
        d.barred[k + 1] += cg - p;
    }
    d
}

/// `Ψ⁻¹(α)`.
pub fn psi_inverse(a: &KostantPartition) -> MLTableau {
    let rank = a.rank();
    let reduced = (1..rank.n())
        .map(|j| invert_row(a, j, rank).to_row(rank))
        .collect();
    MLTableau::expand(rank, reduced).expect("every Kostant partition has a preimage")
}
