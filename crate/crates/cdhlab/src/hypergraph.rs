//! F_p-labeled d-hypergraphs with polynomial semantics, symmetric-group
//! actions, orbits, automorphism groups and fully-symmetric-set analysis.
//!
//! A labeled hypergraph on `[n]` is exactly a multilinear polynomial of
//! degree at most `d` over F_p: each edge is a monomial, its label the
//! coefficient. Edges are stored as bitmasks over the vertex set with only
//! nonzero labels present, so graph equality is map equality.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::ff::{add_mod, mul_mod, sub_mod, Fp, Prime};
use crate::perm::{for_each_permutation, Perm};
use crate::{Error, Result};

/// Hard cap on vertex count; truth tables and masks assume this.
pub const MAX_VERTICES: usize = 20;
/// Largest n for which exhaustive automorphism search runs.
pub const EXHAUSTIVE_AUT_LIMIT: usize = 10;
/// Largest n for which backtracking automorphism search runs.
pub const BACKTRACKING_AUT_LIMIT: usize = 16;
/// Node budget for the backtracking automorphism search.
const AUT_SEARCH_NODE_CAP: usize = 20_000_000;
/// Orbit budget for the n!/|orbit| shortcut tried before backtracking.
const ORBIT_FIRST_CAP: usize = 50_000;

/// An F_p-labeled d-hypergraph; equivalently a multilinear polynomial of
/// degree at most d over F_p in n boolean variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledHypergraph {
    n: usize,
    p: Prime,
    d: usize,
    edges: BTreeMap<u32, u64>,
}

impl LabeledHypergraph {
    pub fn empty(n: usize, p: Prime, d: usize) -> Result<LabeledHypergraph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                what: "hypergraph",
                n,
                limit: MAX_VERTICES,
            });
        }
        if d > n {
            return Err(Error::InvalidGraph(format!(
                "degree bound {d} exceeds vertex count {n}"
            )));
        }
        Ok(LabeledHypergraph {
            n,
            p,
            d,
            edges: BTreeMap::new(),
        })
    }

    pub fn from_edges(
        n: usize,
        p: Prime,
        d: usize,
        edges: impl IntoIterator<Item = (u32, u64)>,
    ) -> Result<LabeledHypergraph> {
        let mut g = Self::empty(n, p, d)?;
        for (mask, label) in edges {
            g.add_label(mask, label)?;
        }
        Ok(g)
    }

    /// The pseudo-clique on `[n]`: every j-edge labeled `t[j-1]`.
    pub fn pseudo_clique(n: usize, p: Prime, t: &[u64]) -> Result<LabeledHypergraph> {
        let mut g = Self::empty(n, p, t.len())?;
        for (j, &label) in t.iter().enumerate() {
            if label % p.get() != 0 {
                for mask in k_subsets(n, j + 1) {
                    g.add_label(mask, label)?;
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn p(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn degree_bound(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.edges.iter().map(|(&e, &l)| (e, l))
    }

    /// Label of an edge; 0 when absent.
    #[inline]
    pub fn label(&self, mask: u32) -> u64 {
        self.edges.get(&mask).copied().unwrap_or(0)
    }

    fn check_edge_mask(&self, mask: u32) -> Result<()> {
        if mask == 0 || mask & !self.full_mask() != 0 {
            return Err(Error::InvalidGraph(format!(
                "edge {mask:#b} is empty or not contained in [{}]",
                self.n
            )));
        }
        if mask.count_ones() as usize > self.d {
            return Err(Error::InvalidGraph(format!(
                "edge of size {} exceeds degree bound {}",
                mask.count_ones(),
                self.d
            )));
        }
        Ok(())
    }

    /// Sets `lambda(mask) = value mod p`; a zero label deletes the entry.
    pub fn set_label(&mut self, mask: u32, value: u64) -> Result<()> {
        let value = value % self.p.get();
        if value == 0 {
            self.edges.remove(&mask);
            return Ok(());
        }
        self.check_edge_mask(mask)?;
        self.edges.insert(mask, value);
        Ok(())
    }

    /// Adds `value` to `lambda(mask)` in F_p.
    pub fn add_label(&mut self, mask: u32, value: u64) -> Result<()> {
        let sum = add_mod(self.label(mask), value % self.p.get(), self.p.get());
        self.set_label(mask, sum)
    }

    /// Value of the polynomial on the boolean input given as a bitmask.
    pub fn eval_mask(&self, x: u32) -> u64 {
        let mut acc = 0u64;
        for (&e, &label) in &self.edges {
            if e & x == e {
                acc += label;
            }
        }
        acc % self.p.get()
    }

    pub fn evaluate(&self, x: &[bool]) -> Result<Fp> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                want: self.n,
                got: x.len(),
            });
        }
        let mut mask = 0u32;
        for (v, &bit) in x.iter().enumerate() {
            if bit {
                mask |= 1 << v;
            }
        }
        Ok(Fp::new(self.eval_mask(mask), self.p))
    }

    fn expect_compatible(&self, other: &LabeledHypergraph) -> Result<()> {
        if self.n != other.n || self.p != other.p {
            return Err(Error::GraphMismatch(format!(
                "(n={}, p={}) vs (n={}, p={})",
                self.n, self.p, other.n, other.p
            )));
        }
        Ok(())
    }

    /// Pointwise label sum `G + H`.
    pub fn add(&self, other: &LabeledHypergraph) -> Result<LabeledHypergraph> {
        self.expect_compatible(other)?;
        let mut out = self.clone();
        out.d = self.d.max(other.d);
        for (&e, &label) in &other.edges {
            let sum = add_mod(out.label(e), label, self.p.get());
            if sum == 0 {
                out.edges.remove(&e);
            } else {
                out.edges.insert(e, sum);
            }
        }
        Ok(out)
    }

    /// Pointwise label difference `G - H`.
    pub fn sub(&self, other: &LabeledHypergraph) -> Result<LabeledHypergraph> {
        self.expect_compatible(other)?;
        let mut out = self.clone();
        out.d = self.d.max(other.d);
        for (&e, &label) in &other.edges {
            let diff = sub_mod(out.label(e), label, self.p.get());
            if diff == 0 {
                out.edges.remove(&e);
            } else {
                out.edges.insert(e, diff);
            }
        }
        Ok(out)
    }

    /// Scales every label by `c`; `c = 0` yields the empty graph.
    pub fn scale(&self, c: u64) -> LabeledHypergraph {
        let c = c % self.p.get();
        let mut out = LabeledHypergraph {
            n: self.n,
            p: self.p,
            d: self.d,
            edges: BTreeMap::new(),
        };
        if c == 0 {
            return out;
        }
        for (&e, &label) in &self.edges {
            let scaled = mul_mod(label, c, self.p.get());
            if scaled != 0 {
                out.edges.insert(e, scaled);
            }
        }
        out
    }

    /// `G + gamma * Sigma(S)`: adds `gamma` to the singleton label of every
    /// vertex in `s_mask`.
    pub fn add_sigma(&self, s_mask: u32, gamma: u64) -> Result<LabeledHypergraph> {
        let mut out = self.clone();
        let mut rest = s_mask & self.full_mask();
        while rest != 0 {
            let v = rest.trailing_zeros();
            out.add_label(1 << v, gamma)?;
            rest &= rest - 1;
        }
        Ok(out)
    }

    /// Image under a permutation: edge e with label gamma maps to pi(e)
    /// with label gamma.
    pub fn apply_perm(&self, perm: &Perm) -> LabeledHypergraph {
        assert_eq!(perm.n(), self.n, "permutation degree mismatch");
        let mut edges = BTreeMap::new();
        for (&e, &label) in &self.edges {
            edges.insert(perm.apply_mask(e), label);
        }
        LabeledHypergraph {
            n: self.n,
            p: self.p,
            d: self.d,
            edges,
        }
    }

    /// Whether the permutation given as an image table fixes the graph.
    fn fixed_by_images(&self, images: &[usize]) -> bool {
        self.edges.iter().all(|(&e, &label)| {
            let mut mapped = 0u32;
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                mapped |= 1 << images[v];
                rest &= rest - 1;
            }
            self.label(mapped) == label
        })
    }

    /// Whether the transposition (u v) is an automorphism.
    pub fn transposition_in_aut(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let (bu, bv) = (1u32 << u, 1u32 << v);
        self.edges.iter().all(|(&e, &label)| {
            let swapped = if e & bu != 0 && e & bv == 0 {
                e ^ bu | bv
            } else if e & bv != 0 && e & bu == 0 {
                e ^ bv | bu
            } else {
                e
            };
            self.label(swapped) == label
        })
    }

    /// Whether C is fully symmetric: labels depend only on the edge size
    /// and the part of the edge outside C. Checked through transpositions,
    /// which generate Sym(C).
    pub fn is_fully_symmetric(&self, c_mask: u32) -> bool {
        let verts: Vec<usize> = mask_vertices(c_mask & self.full_mask());
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if !self.transposition_in_aut(verts[i], verts[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// The partition of `[n]` into maximal fully symmetric sets: u and v
    /// share a class iff the transposition (u v) is an automorphism.
    /// (Conjugating one exchange transposition by another shows the
    /// relation is transitive, so the classes are well-defined.)
    pub fn exchange_classes(&self) -> Vec<u32> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, v: usize) -> usize {
            if parent[v] != v {
                let root = find(parent, parent[v]);
                parent[v] = root;
            }
            parent[v]
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if find(&mut parent, u) != find(&mut parent, v) && self.transposition_in_aut(u, v)
                {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    parent[ru] = rv;
                }
            }
        }
        let mut classes: BTreeMap<usize, u32> = BTreeMap::new();
        for v in 0..self.n {
            let root = find(&mut parent, v);
            *classes.entry(root).or_insert(0) |= 1 << v;
        }
        let mut out: Vec<u32> = classes.into_values().collect();
        out.sort();
        out
    }

    /// The unique exchange class with more than n/2 vertices, if any.
    /// (Two such classes would intersect and merge.)
    pub fn maximal_fully_symmetric(&self) -> Option<u32> {
        self.exchange_classes()
            .into_iter()
            .find(|c| 2 * c.count_ones() as usize > self.n)
    }

    /// Exact |Aut(G)|. Exhaustive sweep for n <= 10; for larger n the
    /// orbit route n!/|orbit| handles highly symmetric graphs (tiny
    /// orbits) and label-invariant backtracking the asymmetric ones
    /// (cheap searches).
    pub fn aut_order(&self) -> Result<u128> {
        if self.n > BACKTRACKING_AUT_LIMIT {
            return Err(Error::TooManyVertices {
                what: "automorphism search",
                n: self.n,
                limit: BACKTRACKING_AUT_LIMIT,
            });
        }
        if self.n <= EXHAUSTIVE_AUT_LIMIT {
            let mut count: u128 = 0;
            for_each_permutation(self.n, |images| {
                if self.fixed_by_images(images) {
                    count += 1;
                }
            });
            return Ok(count);
        }
        if let Ok(orbit) = self.orbit(ORBIT_FIRST_CAP) {
            return Ok(factorial(self.n) / orbit.members.len() as u128);
        }
        self.aut_order_backtracking(AUT_SEARCH_NODE_CAP)
    }

    fn aut_order_backtracking(&self, node_cap: usize) -> Result<u128> {
        // Vertex invariant: multiset of (edge size, label) over incident edges.
        let invariant = |v: usize| -> Vec<(u32, u64, u32)> {
            let mut counts: BTreeMap<(u32, u64), u32> = BTreeMap::new();
            for (&e, &label) in &self.edges {
                if e >> v & 1 == 1 {
                    *counts.entry((e.count_ones(), label)).or_insert(0) += 1;
                }
            }
            counts.into_iter().map(|((s, l), c)| (s, l, c)).collect()
        };
        let invariants: Vec<_> = (0..self.n).map(invariant).collect();
        let candidates: Vec<Vec<usize>> = (0..self.n)
            .map(|v| {
                (0..self.n)
                    .filter(|&u| invariants[u] == invariants[v])
                    .collect()
            })
            .collect();

        struct Search<'a> {
            g: &'a LabeledHypergraph,
            candidates: &'a [Vec<usize>],
            images: Vec<usize>,
            used: u32,
            nodes: usize,
            node_cap: usize,
            count: u128,
        }
        impl Search<'_> {
            fn extend_consistent(&mut self, depth: usize, target: usize) -> bool {
                // Every stored edge fully inside the assigned prefix must map
                // to an edge with the same label.
                let assigned: u32 = ((1u64 << (depth + 1)) - 1) as u32;
                self.images[depth] = target;
                for (&e, &label) in &self.g.edges {
                    if e & !assigned != 0 || e >> depth & 1 == 0 {
                        continue;
                    }
                    let mut mapped = 0u32;
                    let mut rest = e;
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        mapped |= 1 << self.images[v];
                        rest &= rest - 1;
                    }
                    if self.g.label(mapped) != label {
                        return false;
                    }
                }
                true
            }

            fn run(&mut self, depth: usize) -> Result<()> {
                if depth == self.g.n {
                    self.count += 1;
                    return Ok(());
                }
                for i in 0..self.candidates[depth].len() {
                    let target = self.candidates[depth][i];
                    if self.used >> target & 1 == 1 {
                        continue;
                    }
                    self.nodes += 1;
                    if self.nodes > self.node_cap {
                        return Err(Error::CapExceeded {
                            what: "automorphism search nodes",
                            limit: self.node_cap,
                        });
                    }
                    if self.extend_consistent(depth, target) {
                        self.used |= 1 << target;
                        self.run(depth + 1)?;
                        self.used &= !(1 << target);
                    }
                }
                Ok(())
            }
        }

        let mut search = Search {
            g: self,
            candidates: &candidates,
            images: vec![0; self.n],
            used: 0,
            nodes: 0,
            node_cap,
            count: 0,
        };
        search.run(0)?;
        Ok(search.count)
    }

    /// Full report: |Aut|, index in Sym(n), exchange classes and the
    /// maximal fully symmetric set.
    pub fn automorphism_report(&self) -> Result<AutReport> {
        let aut_order = self.aut_order()?;
        let index = factorial(self.n) / aut_order;
        Ok(AutReport {
            aut_order,
            index,
            exchange_classes: self.exchange_classes(),
            max_fully_symmetric: self.maximal_fully_symmetric(),
        })
    }

    /// The set `{pi(G) : pi in Sym(n)}`, enumerated breadth-first over
    /// adjacent transpositions. Deterministic sorted member list.
    pub fn orbit(&self, cap: usize) -> Result<Orbit> {
        let mut members: BTreeSet<LabeledHypergraph> = BTreeSet::new();
        let mut queue: VecDeque<LabeledHypergraph> = VecDeque::new();
        members.insert(self.clone());
        queue.push_back(self.clone());
        let gens: Vec<Perm> = (0..self.n.saturating_sub(1))
            .map(|i| Perm::transposition(self.n, i, i + 1))
            .collect();
        while let Some(g) = queue.pop_front() {
            for gen in &gens {
                let image = g.apply_perm(gen);
                if !members.contains(&image) {
                    if members.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "orbit enumeration",
                            limit: cap,
                        });
                    }
                    members.insert(image.clone());
                    queue.push_back(image);
                }
            }
        }
        Ok(Orbit {
            base: self.clone(),
            members: members.into_iter().collect(),
        })
    }

    /// Lexicographically minimal image of G under Sym(n), with the fixed
    /// total order on label maps given by the derived `Ord`. Constant on
    /// orbits. Falls back to a full-Sym(n) sweep (n <= 10) when the orbit
    /// exceeds the cap; errors for larger n so callers can fall back to
    /// exact-equality keys.
    pub fn canonical_form(&self, cap: usize) -> Result<LabeledHypergraph> {
        match self.orbit(cap) {
            Ok(orbit) => Ok(orbit.members.into_iter().next().expect("orbit contains base")),
            Err(Error::CapExceeded { .. }) if self.n <= EXHAUSTIVE_AUT_LIMIT => {
                let mut best: Option<LabeledHypergraph> = None;
                for_each_permutation(self.n, |images| {
                    let mut edges = BTreeMap::new();
                    for (&e, &label) in &self.edges {
                        let mut mapped = 0u32;
                        let mut rest = e;
                        while rest != 0 {
                            let v = rest.trailing_zeros() as usize;
                            mapped |= 1 << images[v];
                            rest &= rest - 1;
                        }
                        edges.insert(mapped, label);
                    }
                    let candidate = LabeledHypergraph {
                        n: self.n,
                        p: self.p,
                        d: self.d,
                        edges,
                    };
                    if best.as_ref().map_or(true, |b| candidate < *b) {
                        best = Some(candidate);
                    }
                });
                Ok(best.expect("n >= 0 has at least the identity image"))
            }
            Err(e) => Err(e),
        }
    }

    /// Reports which branch of the automorphism dichotomy holds: a fully
    /// symmetric subset on at least `n - floor(eps*n)` vertices, or
    /// index `> 2^floor(eps*n)`. The dichotomy is guaranteed for n >= 13.
    pub fn check_dichotomy(&self, eps: Epsilon) -> Result<DichotomyReport> {
        let floor_eps_n = eps.floor_times(self.n as u64) as usize;
        let threshold = self.n - floor_eps_n;
        let classes = self.exchange_classes();
        let witness = classes
            .iter()
            .copied()
            .filter(|c| c.count_ones() as usize >= threshold)
            .max_by_key(|c| c.count_ones());
        let aut_order = self.aut_order()?;
        let index = factorial(self.n) / aut_order;
        let branch2 = index > (1u128 << floor_eps_n);
        Ok(DichotomyReport {
            n: self.n,
            floor_eps_n,
            threshold_size: threshold,
            branch1_witness: witness,
            branch1: witness.is_some(),
            aut_order,
            index,
            branch2,
            lemma_applies: self.n >= 13,
        })
    }

    /// Edges crossing between C and its complement.
    pub fn crossing_edges(&self, c_mask: u32) -> Vec<u32> {
        let cbar = self.full_mask() & !c_mask;
        self.edges
            .keys()
            .copied()
            .filter(|&e| e & c_mask != 0 && e & cbar != 0)
            .collect()
    }

    /// Conditions 1-2: C fully symmetric and every edge inside C or its
    /// complement.
    pub fn is_partially_symmetry_purified(&self, c_mask: u32) -> bool {
        self.crossing_edges(c_mask).is_empty() && self.is_fully_symmetric(c_mask)
    }

    /// Conditions 1-3: additionally every edge in the complement is unary.
    pub fn is_symmetry_purified(&self, c_mask: u32) -> bool {
        let cbar = self.full_mask() & !c_mask;
        self.is_partially_symmetry_purified(c_mask)
            && self
                .edges
                .keys()
                .all(|&e| e & cbar == 0 || e.count_ones() == 1)
    }

    /// The isomorphism invariant of a symmetry-purified graph: the
    /// pseudo-clique size and type, and the complement label counts.
    pub fn purified_summary(&self, c_mask: u32) -> Result<PurifiedSummary> {
        if !self.is_symmetry_purified(c_mask) {
            return Err(Error::Hypothesis(format!(
                "graph is not symmetry-purified with respect to C = {:?}",
                mask_vertices(c_mask)
            )));
        }
        let c_mask = c_mask & self.full_mask();
        let l_c = c_mask.count_ones() as usize;
        let mut t = vec![0u64; self.d];
        for j in 1..=self.d.min(l_c) {
            // Full symmetry: all j-subsets of C share one label.
            let first: u32 = {
                let verts = mask_vertices(c_mask);
                verts[..j].iter().fold(0u32, |m, &v| m | 1 << v)
            };
            t[j - 1] = self.label(first);
        }
        let mut l = vec![0u64; self.p.get() as usize];
        let cbar = self.full_mask() & !c_mask;
        for v in mask_vertices(cbar) {
            let label = self.label(1 << v) as usize;
            l[label] += 1;
        }
        Ok(PurifiedSummary {
            p: self.p,
            d: self.d,
            l_c,
            t,
            l,
        })
    }
}

/// Exact automorphism data for a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutReport {
    pub aut_order: u128,
    pub index: u128,
    pub exchange_classes: Vec<u32>,
    pub max_fully_symmetric: Option<u32>,
}

/// The image set of a graph under Sym(n); `members.len()` equals the index
/// of Aut(G).
#[derive(Clone, Debug)]
pub struct Orbit {
    pub base: LabeledHypergraph,
    pub members: Vec<LabeledHypergraph>,
}

/// Dichotomy report for a single graph and threshold.
#[derive(Clone, Debug)]
pub struct DichotomyReport {
    pub n: usize,
    pub floor_eps_n: usize,
    pub threshold_size: usize,
    pub branch1: bool,
    pub branch1_witness: Option<u32>,
    pub aut_order: u128,
    pub index: u128,
    pub branch2: bool,
    pub lemma_applies: bool,
}

/// Exact rational threshold parameter, constrained to (0, 1/8).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Epsilon {
    num: u64,
    den: u64,
}

impl Epsilon {
    pub fn new(num: u64, den: u64) -> Result<Epsilon> {
        if num == 0 || den == 0 || 8 * num >= den {
            return Err(Error::BadEpsilon(num, den));
        }
        Ok(Epsilon { num, den })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// Exact floor of `eps * n`.
    pub fn floor_times(self, n: u64) -> u64 {
        self.num * n / self.den
    }
}

impl std::fmt::Display for Epsilon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The `(l_C, t, l_0..l_{p-1})` invariant of a symmetry-purified graph:
/// it reconstructs the graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PurifiedSummary {
    pub p: Prime,
    pub d: usize,
    /// Size of the fully symmetric pseudo-clique C.
    pub l_c: usize,
    /// `t[j-1]` is the common label of all j-subsets of C, j = 1..=d.
    pub t: Vec<u64>,
    /// `l[i]` counts complement vertices whose singleton label is i.
    pub l: Vec<u64>,
}

impl PurifiedSummary {
    pub fn new(p: Prime, d: usize, l_c: usize, t: Vec<u64>, l: Vec<u64>) -> Result<PurifiedSummary> {
        if t.len() != d {
            return Err(Error::InvalidGraph(format!(
                "type vector has length {}, expected degree bound {d}",
                t.len()
            )));
        }
        if l.len() != p.get() as usize {
            return Err(Error::InvalidGraph(format!(
                "complement counts have length {}, expected p = {p}",
                l.len()
            )));
        }
        if t.iter().any(|&x| x >= p.get()) || d > l_c + l.iter().sum::<u64>() as usize {
            return Err(Error::InvalidGraph(
                "type labels must lie in [0, p) and d must not exceed n".into(),
            ));
        }
        let summary = PurifiedSummary { p, d, l_c, t, l };
        if summary.n() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                what: "purified summary",
                n: summary.n(),
                limit: MAX_VERTICES,
            });
        }
        Ok(summary)
    }

    pub fn n(&self) -> usize {
        self.l_c + self.l.iter().sum::<u64>() as usize
    }

    /// Complement size `n - |C|`.
    pub fn complement_size(&self) -> u64 {
        self.l.iter().sum()
    }

    /// Rebuilds the canonical purified graph: C on the first `l_c`
    /// vertices, then the complement vertices grouped by label.
    pub fn build_graph(&self) -> Result<LabeledHypergraph> {
        let n = self.n();
        let mut g = LabeledHypergraph::empty(n, self.p, self.d)?;
        for (j, &label) in self.t.iter().enumerate() {
            let size = j + 1;
            if label != 0 && size <= self.l_c {
                for sub in k_subsets(self.l_c, size) {
                    g.set_label(sub, label)?;
                }
            }
        }
        let mut next = self.l_c;
        for (label, &count) in self.l.iter().enumerate() {
            for _ in 0..count {
                if label != 0 {
                    g.set_label(1 << next, label as u64)?;
                }
                next += 1;
            }
        }
        Ok(g)
    }

    /// The mask of C in the graph built by [`build_graph`].
    pub fn c_mask(&self) -> u32 {
        ((1u64 << self.l_c) - 1) as u32
    }
}

/// n! as u128 (n <= 20).
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product::<u128>().max(1)
}

/// Vertices of a mask in increasing order.
pub fn mask_vertices(mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

/// All k-subsets of `{0..n}` as bitmasks, ascending.
pub fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let mut mask: u32 = ((1u64 << k) - 1) as u32;
    let limit: u32 = ((1u64 << n) - 1) as u32;
    while mask <= limit {
        out.push(mask);
        // Gosper's hack: next subset of the same size.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if r > limit || c == 0 {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// All subsets of a mask (including the empty one), ascending.
pub fn subsets_of_mask(mask: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << mask.count_ones());
    let mut sub = 0u32;
    loop {
        out.push(sub);
        if sub == mask {
            break;
        }
        sub = (sub.wrapping_sub(mask)) & mask;
    }
    out.sort();
    out
}
