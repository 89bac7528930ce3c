//! Breadth-first generation of balls in `B(∞)`, cross-checks between the two
//! realizations, and graph export.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bracket::BracketString;
use crate::cartan::{
    epsilon_to_simple_coords, kostant_partition_count, simple_root_epsilon, Rank, WeightVector,
};
use crate::error::{Error, Result};
use crate::isomorphism::{psi_inverse, psi_row, psi_unchecked, RowDecomposition};
use crate::kostant::KostantPartition;
use crate::tableaux::{MLTableau, Reading};

pub const MAX_RANK: usize = 6;
pub const MAX_DEPTH: usize = 8;
pub const DEFAULT_MAX_NODES: usize = 2_000_000;

/// Number of failures kept verbatim in a report; the rest are only counted.
const KEPT_FAILURES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Realization {
    Tableaux,
    Kostant,
}

impl Realization {
    pub fn as_str(self) -> &'static str {
        match self {
            Realization::Tableaux => "tableaux",
            Realization::Kostant => "kostant",
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Realization {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tableaux" | "tableau" | "t" => Ok(Realization::Tableaux),
            "kostant" | "kp" | "k" => Ok(Realization::Kostant),
            other => Err(format!("unknown realization `{other}`")),
        }
    }
}

/// The operations shared by both realizations.
pub trait Crystal: Clone + Eq + Hash + Send + Sync {
    const REALIZATION: Realization;

    fn highest_weight(rank: Rank) -> Self;
    fn rank(&self) -> Rank;
    fn f(&self, i: usize) -> Self;
    fn e(&self, i: usize) -> Option<Self>;
    fn weight(&self) -> WeightVector;
    fn epsilon(&self, i: usize) -> u32;
    fn phi(&self, i: usize) -> i64;
    fn to_json(&self) -> String;
    fn to_json_value(&self) -> serde_json::Value;
    /// Short multi-line label for graph drawings.
    fn label(&self) -> String;

    fn f_reading(&self, i: usize, _reading: Reading) -> Self {
        self.f(i)
    }
}

impl Crystal for MLTableau {
    const REALIZATION: Realization = Realization::Tableaux;

    fn highest_weight(rank: Rank) -> Self {
        MLTableau::highest_weight(rank)
    }
    fn rank(&self) -> Rank {
        MLTableau::rank(self)
    }
    fn f(&self, i: usize) -> Self {
        MLTableau::f(self, i)
    }
    fn e(&self, i: usize) -> Option<Self> {
        MLTableau::e(self, i)
    }
    fn weight(&self) -> WeightVector {
        MLTableau::weight(self)
    }
    fn epsilon(&self, i: usize) -> u32 {
        MLTableau::epsilon(self, i)
    }
    fn phi(&self, i: usize) -> i64 {
        MLTableau::phi(self, i)
    }
    fn to_json(&self) -> String {
        MLTableau::to_json(self)
    }
    fn to_json_value(&self) -> serde_json::Value {
        MLTableau::to_json_value(self)
    }
    fn label(&self) -> String {
        crate::cli::render::reduced_ascii(self)
    }
    fn f_reading(&self, i: usize, reading: Reading) -> Self {
        self.f_with(i, reading)
    }
}

impl Crystal for KostantPartition {
    const REALIZATION: Realization = Realization::Kostant;

    fn highest_weight(rank: Rank) -> Self {
        KostantPartition::empty(rank)
    }
    fn rank(&self) -> Rank {
        KostantPartition::rank(self)
    }
    fn f(&self, i: usize) -> Self {
        KostantPartition::f(self, i)
    }
    fn e(&self, i: usize) -> Option<Self> {
        KostantPartition::e(self, i)
    }
    fn weight(&self) -> WeightVector {
        KostantPartition::weight(self)
    }
    fn epsilon(&self, i: usize) -> u32 {
        KostantPartition::epsilon(self, i)
    }
    fn phi(&self, i: usize) -> i64 {
        KostantPartition::phi(self, i)
    }
    fn to_json(&self) -> String {
        KostantPartition::to_json(self)
    }
    fn to_json_value(&self) -> serde_json::Value {
        KostantPartition::to_json_value(self)
    }
    fn label(&self) -> String {
        crate::cli::render::stack_inline(self)
    }
}

/// Canonical key: the first 16 hex digits of the SHA-256 of the element's JSON.
pub fn element_key<C: Crystal>(x: &C) -> String {
    let digest = Sha256::digest(x.to_json().as_bytes());
    hex::encode(&digest[..8])
}

#[derive(Clone, Debug)]
pub struct Node<C> {
    pub key: String,
    pub element: C,
    /// Number of `f`-steps from the highest-weight element.
    pub depth: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub i: usize,
    pub dst: usize,
}

#[derive(Clone, Debug)]
pub struct GenerateOptions {
    pub reading: Reading,
    pub max_nodes: usize,
    /// Enforce the rank and depth ceilings.
    pub enforce_limits: bool,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions { reading: Reading::Middle, max_nodes: DEFAULT_MAX_NODES, enforce_limits: true }
    }
}

/// The ball of radius `depth` around the highest-weight element, with every
/// `f_i`-arrow leaving a node of depth `< depth`.
#[derive(Clone, Debug)]
pub struct CrystalGraph<C> {
    pub realization: Realization,
    pub rank: Rank,
    pub depth: usize,
    pub nodes: Vec<Node<C>>,
    pub edges: Vec<Edge>,
    index: HashMap<C, usize>,
}

impl<C: Crystal> CrystalGraph<C> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, x: &C) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &C) -> bool {
        self.index.contains_key(x)
    }

    /// Node counts by depth, `0..=depth`.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.depth + 1];
        for node in &self.nodes {
            out[node.depth] += 1;
        }
        out
    }

    /// Edge set as `(source key, i, target key)`, sorted.
    pub fn keyed_edges(&self) -> Vec<(String, usize, String)> {
        let mut v: Vec<_> = self
            .edges
            .iter()
            .map(|e| (self.nodes[e.src].key.clone(), e.i, self.nodes[e.dst].key.clone()))
            .collect();
        v.sort();
        v
    }
}

pub fn generate<C: Crystal>(rank: Rank, depth: usize) -> Result<CrystalGraph<C>> {
    generate_with(rank, depth, &GenerateOptions::default())
}

pub fn generate_with<C: Crystal>(
    rank: Rank,
    depth: usize,
    opts: &GenerateOptions,
) -> Result<CrystalGraph<C>> {
    if opts.enforce_limits {
        if rank.n() > MAX_RANK {
            return Err(Error::LimitExceeded { what: "rank", value: rank.n(), limit: MAX_RANK });
        }
        if depth > MAX_DEPTH {
            return Err(Error::LimitExceeded { what: "depth", value: depth, limit: MAX_DEPTH });
        }
    }
    let n = rank.n();
    let root = C::highest_weight(rank);
    let mut g = CrystalGraph {
        realization: C::REALIZATION,
        rank,
        depth,
        nodes: Vec::new(),
        edges: Vec::new(),
        index: HashMap::new(),
    };
    let mut keys: HashMap<String, usize> = HashMap::new();
    let key = element_key(&root);
    keys.insert(key.clone(), 0);
    g.index.insert(root.clone(), 0);
    g.nodes.push(Node { key, element: root, depth: 0 });

    let mut frontier = vec![0usize];
    for d in 0..depth {
        let images: Vec<Vec<C>> = frontier
            .par_iter()
            .map(|&idx| {
                let x = &g.nodes[idx].element;
                (1..=n).map(|i| x.f_reading(i, opts.reading)).collect()
            })
            .collect();
        let mut next = Vec::new();
        for (&src, row) in frontier.iter().zip(images) {
            for (slot, y) in row.into_iter().enumerate() {
                let dst = match g.index.get(&y) {
                    Some(&dst) => dst,
                    None => {
                        let key = element_key(&y);
                        if keys.contains_key(&key) {
                            return Err(Error::KeyCollision(key));
                        }
                        let dst = g.nodes.len();
                        if dst >= opts.max_nodes {
                            return Err(Error::LimitExceeded {
                                what: "node count",
                                value: dst + 1,
                                limit: opts.max_nodes,
                            });
                        }
                        keys.insert(key.clone(), dst);
                        g.index.insert(y.clone(), dst);
                        g.nodes.push(Node { key, element: y, depth: d + 1 });
                        next.push(dst);
                        dst
                    }
                };
                g.edges.push(Edge { src, i: slot + 1, dst });
            }
        }
        frontier = next;
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub invariant: String,
    pub key: String,
    pub i: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.invariant, self.key)?;
        if let Some(i) = self.i {
            write!(f, " i={i}")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Outcome of a verification run. `failure_count` counts every failure;
/// `failures` keeps the first few.
#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checked_nodes: usize,
    pub checked_edges: usize,
    /// Number of assertions evaluated per invariant.
    pub checks: BTreeMap<String, usize>,
    /// Number of failed assertions per invariant.
    pub failed: BTreeMap<String, usize>,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Records one evaluated assertion.
    pub fn check(&mut self, invariant: &str, ok: bool, key: &str, i: Option<usize>, detail: impl FnOnce() -> String) {
        *self.checks.entry(invariant.to_string()).or_insert(0) += 1;
        if !ok {
            self.fail(invariant, key, i, detail());
        }
    }

    pub fn fail(&mut self, invariant: &str, key: &str, i: Option<usize>, detail: String) {
        self.failure_count += 1;
        *self.failed.entry(invariant.to_string()).or_insert(0) += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(Failure { invariant: invariant.to_string(), key: key.to_string(), i, detail });
        }
    }

    /// Failures of one invariant, counted.
    pub fn failures_of(&self, invariant: &str) -> usize {
        self.failed.get(invariant).copied().unwrap_or(0)
    }

    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked_nodes += other.checked_nodes;
        self.checked_edges += other.checked_edges;
        for (k, v) in other.checks {
            *self.checks.entry(k).or_insert(0) += v;
        }
        for (k, v) in other.failed {
            *self.failed.entry(k).or_insert(0) += v;
        }
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes checked: {}", self.checked_nodes)?;
        writeln!(f, "edges checked: {}", self.checked_edges)?;
        for (name, count) in &self.checks {
            let bad = self.failures_of(name);
            writeln!(f, "  {name}: {count} checked, {bad} failed")?;
        }
        writeln!(f, "failures: {}", self.failure_count)?;
        for fail in &self.failures {
            writeln!(f, "  {fail}")?;
        }
        if self.failure_count > self.failures.len() {
            writeln!(f, "  … {} more", self.failure_count - self.failures.len())?;
        }
        Ok(())
    }
}

/// `e_i f_i = id`, `f_i e_i = id`, weight shift, `ε`/`φ` bookkeeping, and the
/// shape of the graph itself.
pub fn check_crystal_axioms<C: Crystal>(g: &CrystalGraph<C>) -> VerificationReport {
    let n = g.rank.n();
    let partial: Vec<VerificationReport> = g
        .nodes
        .par_iter()
        .map(|node| {
            let mut rep = VerificationReport { checked_nodes: 1, ..Default::default() };
            let x = &node.element;
            let key = node.key.as_str();
            let wt = x.weight();
            for i in 1..=n {
                let alpha = simple_root_epsilon(i, g.rank);
                let y = x.f(i);
                rep.check("e_i f_i = id", y.e(i).as_ref() == Some(x), key, Some(i), String::new);
                rep.check("wt(f_i x) = wt(x) - alpha_i", y.weight() == &wt - &alpha, key, Some(i), || {
                    format!("got {}", y.weight())
                });
                let (ex, ey) = (x.epsilon(i), y.epsilon(i));
                rep.check("eps_i(f_i x) = eps_i(x) + 1", ey == ex + 1, key, Some(i), || {
                    format!("{ex} -> {ey}")
                });
                rep.check("phi_i(f_i x) = phi_i(x) - 1", y.phi(i) == x.phi(i) - 1, key, Some(i), String::new);
                let pairing = crate::cartan::coroot_pairing(i, &wt, g.rank);
                rep.check(
                    "phi_i = eps_i + <h_i, wt>",
                    x.phi(i) == x.epsilon(i) as i64 + pairing,
                    key,
                    Some(i),
                    String::new,
                );
                let mut steps = 0u32;
                let mut cur = x.e(i);
                if let Some(z) = &cur {
                    rep.check("f_i e_i = id", &z.f(i) == x, key, Some(i), String::new);
                }
                while let Some(z) = cur {
                    steps += 1;
                    cur = z.e(i);
                }
                rep.check("eps_i = length of e_i-string", steps == ex, key, Some(i), || {
                    format!("eps {ex}, string {steps}")
                });
            }
            rep
        })
        .collect();
    let mut rep = VerificationReport::default();
    for p in partial {
        rep.absorb(p);
    }
    rep.absorb(check_graph_structure(g));
    rep
}

/// Edges are `f`-arrows, each color is a forest, and only the root has weight zero.
pub fn check_graph_structure<C: Crystal>(g: &CrystalGraph<C>) -> VerificationReport {
    let mut rep = VerificationReport { checked_edges: g.edges.len(), ..Default::default() };
    let mut incoming: HashMap<(usize, usize), usize> = HashMap::new();
    for e in &g.edges {
        let x = &g.nodes[e.src];
        let y = &g.nodes[e.dst];
        rep.check("edge is an f-arrow", x.element.f(e.i) == y.element, &x.key, Some(e.i), String::new);
        rep.check("edge raises depth by one", y.depth == x.depth + 1, &x.key, Some(e.i), String::new);
        *incoming.entry((e.dst, e.i)).or_insert(0) += 1;
    }
    for (idx, node) in g.nodes.iter().enumerate() {
        for i in 1..=g.rank.n() {
            let indeg = incoming.get(&(idx, i)).copied().unwrap_or(0);
            let defined = node.element.e(i).is_some();
            rep.check("in-degree per color matches e_i", indeg == usize::from(defined), &node.key, Some(i), || {
                format!("in-degree {indeg}, e_i defined: {defined}")
            });
        }
    }
    let zero = g.nodes.iter().filter(|n| n.element.weight().is_zero()).count();
    rep.check("unique element of weight zero", zero == 1, "graph", None, || format!("{zero} found"));
    let mut closed = true;
    for node in g.nodes.iter().filter(|n| n.depth < g.depth) {
        for i in 1..=g.rank.n() {
            closed &= g.contains(&node.element.f(i));
        }
    }
    rep.check("ball is closed under f", closed, "graph", None, String::new);
    rep
}

/// `−wt` in simple-root coordinates, bucketed.
pub fn weight_multiplicities<C: Crystal>(g: &CrystalGraph<C>) -> BTreeMap<Vec<i64>, usize> {
    let mut out = BTreeMap::new();
    for node in &g.nodes {
        let mu = epsilon_to_simple_coords(&-node.element.weight(), g.rank)
            .expect("weights lie in the root lattice");
        *out.entry(mu).or_insert(0) += 1;
    }
    out
}

/// All `μ ∈ Z_{≥0}^n` with coordinate sum at most `depth`.
pub fn weights_up_to(n: usize, depth: usize) -> Vec<Vec<i64>> {
    fn go(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=left {
            cur.push(c);
            go(n, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, depth as i64, &mut Vec::new(), &mut out);
    out
}

/// Compares node counts per weight against the Kostant partition function for
/// every `μ` of height at most the graph's depth.
pub fn check_weight_multiplicities<C: Crystal>(g: &CrystalGraph<C>) -> VerificationReport {
    let mult = weight_multiplicities(g);
    let mut rep = VerificationReport { checked_nodes: g.len(), ..Default::default() };
    let weights = weights_up_to(g.rank.n(), g.depth);
    let expected: Vec<u64> = weights.par_iter().map(|mu| kostant_partition_count(mu, g.rank)).collect();
    for (mu, want) in weights.iter().zip(expected) {
        let got = mult.get(mu).copied().unwrap_or(0) as u64;
        rep.check("multiplicity = Kostant partition count", got == want, &format!("{mu:?}"), None, || {
            format!("graph {got}, oracle {want}")
        });
    }
    rep
}

/// Checks that `psi` is a crystal isomorphism on the ball of radius `depth`.
pub fn check_isomorphism(rank: Rank, depth: usize) -> Result<VerificationReport> {
    check_isomorphism_with(rank, depth, &psi_unchecked)
}

pub fn check_isomorphism_with(
    rank: Rank,
    depth: usize,
    psi: &(dyn Fn(&MLTableau) -> KostantPartition + Sync),
) -> Result<VerificationReport> {
    let tg: CrystalGraph<MLTableau> = generate(rank, depth)?;
    let kg: CrystalGraph<KostantPartition> = generate(rank, depth)?;
    Ok(compare_graphs(&tg, &kg, psi))
}

/// The isomorphism checks on already generated balls of equal radius.
pub fn compare_graphs(
    tg: &CrystalGraph<MLTableau>,
    kg: &CrystalGraph<KostantPartition>,
    psi: &(dyn Fn(&MLTableau) -> KostantPartition + Sync),
) -> VerificationReport {
    let n = tg.rank.n();
    let mut rep = VerificationReport::default();
    rep.check("layer sizes agree", tg.layer_sizes() == kg.layer_sizes(), "graph", None, || {
        format!("tableaux {:?}, kostant {:?}", tg.layer_sizes(), kg.layer_sizes())
    });

    let partial: Vec<(VerificationReport, KostantPartition)> = tg
        .nodes
        .par_iter()
        .map(|node| {
            let t = &node.element;
            let key = node.key.as_str();
            let mut rep = VerificationReport { checked_nodes: 1, ..Default::default() };
            let a = psi(t);
            rep.check("psi(T) lies in the Kostant ball", kg.contains(&a), key, None, || a.to_string());
            rep.check("wt(T) = wt(psi T)", t.weight() == a.weight(), key, None, String::new);
            rep.check("psi_inverse(psi T) = T", &psi_inverse(&a) == t, key, None, String::new);
            for i in 1..=n {
                let ft = t.f(i);
                let lhs = psi(&ft);
                let rhs = a.f(i);
                rep.checked_edges += 1;
                rep.check("psi f_i = f_i psi", lhs == rhs, key, Some(i), || format!("{lhs} vs {rhs}"));
                let et = t.e(i).map(|x| psi(&x));
                let ea = a.e(i);
                rep.check("psi e_i = e_i psi", et == ea, key, Some(i), String::new);
                rep.check("eps_i(T) = eps_i(psi T)", t.epsilon(i) == a.epsilon(i), key, Some(i), || {
                    format!("{} vs {}", t.epsilon(i), a.epsilon(i))
                });
                rep.check("phi_i(T) = phi_i(psi T)", t.phi(i) == a.phi(i), key, Some(i), String::new);
            }
            (rep, a)
        })
        .collect();
    let mut images = HashSet::new();
    for (p, a) in partial {
        rep.absorb(p);
        images.insert(a);
    }
    rep.check("psi is injective on the ball", images.len() == tg.len(), "graph", None, || {
        format!("{} tableaux, {} images", tg.len(), images.len())
    });
    let onto = kg.nodes.iter().all(|node| images.contains(&node.element));
    rep.check("psi maps onto the Kostant ball", onto, "graph", None, String::new);

    let back: Vec<VerificationReport> = kg
        .nodes
        .par_iter()
        .map(|node| {
            let mut rep = VerificationReport::default();
            let t = psi_inverse(&node.element);
            rep.check("psi_inverse(a) is valid", t.is_valid(), &node.key, None, String::new);
            rep.check("psi(psi_inverse a) = a", psi(&t) == node.element, &node.key, None, String::new);
            rep.check("psi_inverse(a) lies in the tableau ball", tg.contains(&t), &node.key, None, String::new);
            rep
        })
        .collect();
    for p in back {
        rep.absorb(p);
    }
    rep
}

/// Compares the operators obtained from the middle and far readings, box by
/// box, and regenerates the ball with the far reading.
pub fn check_dual_reading(g: &CrystalGraph<MLTableau>) -> Result<VerificationReport> {
    let n = g.rank.n();
    let partial: Vec<VerificationReport> = g
        .nodes
        .par_iter()
        .map(|node| {
            let t = &node.element;
            let key = node.key.as_str();
            let mut rep = VerificationReport { checked_nodes: 1, ..Default::default() };
            for i in 1..=n {
                let (fm, ff) = (t.select_f(i, Reading::Middle), t.select_f(i, Reading::Far));
                rep.check("f_i selects the same box", fm == ff, key, Some(i), || format!("{fm:?} vs {ff:?}"));
                rep.check(
                    "f_i agrees across readings",
                    t.f_with(i, Reading::Middle) == t.f_with(i, Reading::Far),
                    key,
                    Some(i),
                    String::new,
                );
                let (em, ef) = (t.select_e(i, Reading::Middle), t.select_e(i, Reading::Far));
                rep.check("e_i selects the same box", em == ef, key, Some(i), || format!("{em:?} vs {ef:?}"));
                rep.check(
                    "e_i agrees across readings",
                    t.e_with(i, Reading::Middle) == t.e_with(i, Reading::Far),
                    key,
                    Some(i),
                    String::new,
                );
            }
            rep
        })
        .collect();
    let mut rep = VerificationReport::default();
    for p in partial {
        rep.absorb(p);
    }
    let opts = GenerateOptions { reading: Reading::Far, ..Default::default() };
    let far: CrystalGraph<MLTableau> = generate_with(g.rank, g.depth, &opts)?;
    rep.check("far reading yields the same edge set", far.keyed_edges() == g.keyed_edges(), "graph", None, String::new);
    Ok(rep)
}

/// Tableaux whose unshaded boxes all sit in one row.
pub fn single_row_nodes(g: &CrystalGraph<MLTableau>) -> Vec<&Node<MLTableau>> {
    g.nodes.iter().filter(|n| n.element.unshaded_rows().len() == 1).collect()
}

/// For every tableau with a single unshaded row and every color, compares the
/// uncanceled `)` and `(` counts of `br_i(T)` with those of `S_i(Ψ(T))`, and
/// checks that `f_i` commutes with `Ψ` when `br_i(T)` has an uncanceled `(`.
pub fn check_single_row_brackets(g: &CrystalGraph<MLTableau>) -> VerificationReport {
    let n = g.rank.n();
    let mut rep = VerificationReport::default();
    for node in single_row_nodes(g) {
        rep.checked_nodes += 1;
        let t = &node.element;
        let a = psi_unchecked(t);
        for i in 1..=n {
            let bt = t.bracket_sequence(i, Reading::Middle).uncanceled();
            let bk = a.bracket_sequence(i).uncanceled();
            rep.check("uncanceled ) counts agree", bt.close.len() == bk.close.len(), &node.key, Some(i), || {
                format!("tableau {}, partition {}", bt.close.len(), bk.close.len())
            });
            rep.check("uncanceled ( counts agree", bt.open.len() == bk.open.len(), &node.key, Some(i), || {
                format!("tableau {}, partition {}", bt.open.len(), bk.open.len())
            });
            if !bt.open.is_empty() {
                rep.check("f_i commutes with psi", psi_unchecked(&t.f(i)) == a.f(i), &node.key, Some(i), String::new);
            }
        }
    }
    rep
}

fn kinds<S>(b: &BracketString<S>) -> String {
    b.to_string()
}

/// `br_i(T)` is the concatenation of its rows' strings, and `S_i(Ψ(T))` the
/// concatenation of the `S_i(Ψ(R_j))`.
pub fn check_factorization(g: &CrystalGraph<MLTableau>) -> VerificationReport {
    let n = g.rank.n();
    let mut rep = VerificationReport::default();
    for node in &g.nodes {
        rep.checked_nodes += 1;
        let t = &node.element;
        let a = psi_unchecked(t);
        for i in 1..=n {
            let whole = kinds(&t.bracket_sequence(i, Reading::Middle));
            let rows: String = (1..n).map(|j| kinds(&t.row_bracket_sequence(j, i))).collect();
            rep.check("br_i factors over rows", whole == rows, &node.key, Some(i), || format!("{whole} vs {rows}"));
            let whole_kp = kinds(&a.bracket_sequence(i));
            let rows_kp: String = (1..n)
                .map(|j| {
                    let d = RowDecomposition::from_row(j, t.row(j), g.rank);
                    kinds(&psi_row(&d, g.rank).bracket_sequence(i))
                })
                .collect();
            rep.check("S_i factors over rows", whole_kp == rows_kp, &node.key, Some(i), || {
                format!("{whole_kp} vs {rows_kp}")
            });
        }
    }
    rep
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\n")
}

/// Graphviz digraph with edges labelled by color.
pub fn export_dot<C: Crystal>(g: &CrystalGraph<C>) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph binf_{}_D{}_d{} {{\n", g.realization, g.rank.n(), g.depth));
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for node in &g.nodes {
        out.push_str(&format!(
            "  \"{}\" [label=\"{}\"];\n",
            node.key,
            dot_escape(&node.element.label())
        ));
    }
    for e in &g.edges {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            g.nodes[e.src].key, g.nodes[e.dst].key, e.i
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphJson<'a> {
    realization: Realization,
    n: usize,
    depth: usize,
    nodes: Vec<NodeJson<'a>>,
    edges: Vec<EdgeJson<'a>>,
}

#[derive(Serialize)]
struct NodeJson<'a> {
    key: &'a str,
    element: serde_json::Value,
    wt: Vec<i64>,
}

#[derive(Serialize)]
struct EdgeJson<'a> {
    src: &'a str,
    i: usize,
    dst: &'a str,
}

pub fn export_json<C: Crystal>(g: &CrystalGraph<C>) -> String {
    let doc = GraphJson {
        realization: g.realization,
        n: g.rank.n(),
        depth: g.depth,
        nodes: g
            .nodes
            .iter()
            .map(|node| NodeJson {
                key: &node.key,
                element: node.element.to_json_value(),
                wt: node.element.weight().coords().to_vec(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeJson { src: &g.nodes[e.src].key, i: e.i, dst: &g.nodes[e.dst].key })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    #[test]
    fn kostant_depth_one() {
        let g: CrystalGraph<KostantPartition> = generate(d(4), 1).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.edges.len(), 4);
        assert_eq!(g.layer_sizes(), vec![1, 4]);
    }

    #[test]
    fn depth_two_counts_match_oracle() {
        let kg: CrystalGraph<KostantPartition> = generate(d(4), 2).unwrap();
        let tg: CrystalGraph<MLTableau> = generate(d(4), 2).unwrap();
        let oracle: u64 = weights_up_to(4, 2).iter().map(|mu| kostant_partition_count(mu, d(4))).sum();
        assert_eq!(kg.len() as u64, oracle);
        assert_eq!(tg.layer_sizes(), kg.layer_sizes());
    }

    #[test]
    fn small_multiplicities() {
        let g: CrystalGraph<KostantPartition> = generate(d(4), 2).unwrap();
        let m = weight_multiplicities(&g);
        assert_eq!(m[&vec![0, 0, 0, 0]], 1);
        assert_eq!(m[&vec![1, 1, 0, 0]], 2);
        assert_eq!(m[&vec![0, 0, 1, 1]], 1);
        assert_eq!(m.get(&vec![2, 0, 0, 0]), Some(&1));
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            generate::<KostantPartition>(d(7), 1),
            Err(Error::LimitExceeded { what: "rank", .. })
        ));
        assert!(matches!(
            generate::<KostantPartition>(d(4), 9),
            Err(Error::LimitExceeded { what: "depth", .. })
        ));
        let opts = GenerateOptions { max_nodes: 10, ..Default::default() };
        assert!(matches!(
            generate_with::<KostantPartition>(d(4), 3, &opts),
            Err(Error::LimitExceeded { what: "node count", .. })
        ));
    }

    #[test]
    fn keys_are_short_hex() {
        let k = element_key(&KostantPartition::empty(d(4)));
        assert_eq!(k.len(), 16);
        assert!(k.chars().all(|c| c.is_ascii_hexdigit()));
    }

    #[test]
    fn small_ball_verifies() {
        let rep = check_isomorphism(d(4), 3).unwrap();
        assert!(rep.passed(), "{rep}");
        let tg: CrystalGraph<MLTableau> = generate(d(4), 3).unwrap();
        assert!(check_crystal_axioms(&tg).passed());
        assert!(check_factorization(&tg).passed());
    }

    #[test]
    fn mutant_is_caught() {
        let rep = check_isomorphism_with(d(4), 2, &crate::isomorphism::psi_mutant).unwrap();
        assert!(!rep.passed());
    }

    #[test]
    fn dot_export_shape() {
        let g: CrystalGraph<MLTableau> = generate(d(4), 1).unwrap();
        let dot = export_dot(&g);
        assert_eq!(dot.matches(" -> ").count(), 4);
        for i in 1..=4 {
            assert!(dot.contains(&format!("[label=\"{i}\"]")));
        }
        assert_eq!(dot, export_dot(&generate::<MLTableau>(d(4), 1).unwrap()));
    }

    #[test]
    fn json_export_schema() {
        let g: CrystalGraph<KostantPartition> = generate(d(4), 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&export_json(&g)).unwrap();
        assert_eq!(v["realization"], "kostant");
        assert_eq!(v["n"], 4);
        assert_eq!(v["depth"], 1);
        assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
        assert_eq!(v["edges"].as_array().unwrap().len(), 4);
        assert_eq!(v["nodes"][0]["wt"], serde_json::json!([0, 0, 0, 0]));
        assert!(v["edges"][0]["src"].is_string());
    }
}
