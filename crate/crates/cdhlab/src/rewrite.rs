//! Semantics-preserving rewrites: the Degree Decreasing Lemma, its
//! symmetric d-ary variant, and the two-stage symmetry-purification
//! pipeline built on them.
//!
//! The degree-decreasing identity rewrites `b(gamma*z1*z2 + y; t)` into a
//! combination of product-free atoms `b(j1*z1 + j2*z2 + j3*y; r)`; the
//! symmetric variant handles a d-ary product `gamma*x_1*...*x_d + y` on
//! boolean inputs with coefficients invariant under permuting the x's.
//! Purification uses both to rewrite a closure `s(G; r)` into a sum of
//! closures over graphs whose edges avoid the boundary of the fully
//! symmetric set C and whose complement edges are unary.
//!
//! The worklists track sums `sum beta * sA(H; t)` where `sA` sums `b` over
//! a transversal of `Sym(n) / (Sym(C) x Gamma(H))` and `Gamma(H)` is the
//! subgroup of `Sym(complement)` fixing H. Keeping the subgroup aligned
//! with C makes every rewrite step an exact coset computation; the final
//! conversion to ordinary closures multiplies each coefficient by the
//! index `[Aut(H) : Sym(C) x Gamma(H)]`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::expr::{ElementaryAtom, Expression, SymmetricExpression};
use crate::ff::{mul_mod, sub_mod, Prime};
use crate::hypergraph::{factorial, mask_vertices, subsets_of_mask, LabeledHypergraph};
use crate::perm::{perms_on_support, Perm};
use crate::{Caps, Error, Result};

/// Budget for the downward SDDL coefficient recursion.
const SDDL_RECURSION_CAP: usize = 1_000_000;

/// Coefficients beta rewriting `b(gamma*z1*z2 + y; t)` over F_p^3 into
/// `sum beta_{j1,j2,j3}^{(r)} * b(j1*z1 + j2*z2 + j3*y; r)` over F_q.
#[derive(Clone, Debug)]
pub struct DdlTable {
    p: Prime,
    q: Prime,
    gamma: u64,
    t: u64,
    beta: BTreeMap<(u64, u64, u64, u64), u64>,
}

impl DdlTable {
    /// Solves for the coefficients by Gaussian elimination over F_q on the
    /// p^3 evaluation constraints in the p^4 unknowns; free variables are
    /// zeroed and pivoting follows the lexicographic (j1, j2, j3, r) and
    /// (z1, z2, y) orders, so the output is deterministic.
    pub fn coefficients(p: Prime, q: Prime, gamma: u64, t: u64) -> Result<DdlTable> {
        if p == q {
            return Err(Error::Hypothesis(
                "degree decreasing identity needs p != q".into(),
            ));
        }
        let gamma = gamma % p.get();
        let t = t % p.get();
        let mut beta = BTreeMap::new();
        if gamma == 0 {
            // Product term vanishes: b(y; t) itself is the rewrite.
            beta.insert((0, 0, 1, t), 1);
            return Ok(DdlTable { p, q, gamma, t, beta });
        }
        let pr = p.get();
        let cols = (pr * pr * pr * pr) as usize;
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity((pr * pr * pr) as usize);
        let mut rhs: Vec<u64> = Vec::new();
        for z1 in 0..pr {
            for z2 in 0..pr {
                for y in 0..pr {
                    let mut row = vec![0u64; cols];
                    for j1 in 0..pr {
                        for j2 in 0..pr {
                            for j3 in 0..pr {
                                let value = (j1 * z1 + j2 * z2 + j3 * y) % pr;
                                let col = ((j1 * pr + j2) * pr + j3) * pr + value;
                                row[col as usize] = 1;
                            }
                        }
                    }
                    rows.push(row);
                    rhs.push(u64::from((gamma * z1 * z2 + y) % pr == t));
                }
            }
        }
        let solution = solve_linear_mod(rows, rhs, q).ok_or_else(|| {
            Error::Internal("DDL system infeasible, contradicting the lemma".into())
        })?;
        for j1 in 0..pr {
            for j2 in 0..pr {
                for j3 in 0..pr {
                    for r in 0..pr {
                        let col = (((j1 * pr + j2) * pr + j3) * pr + r) as usize;
                        if solution[col] != 0 {
                            beta.insert((j1, j2, j3, r), solution[col]);
                        }
                    }
                }
            }
        }
        Ok(DdlTable { p, q, gamma, t, beta })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn q(&self) -> Prime {
        self.q
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Nonzero entries as ((j1, j2, j3, r), beta).
    pub fn entries(&self) -> impl Iterator<Item = ((u64, u64, u64, u64), u64)> + '_ {
        self.beta.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// Exhaustive functional check of the defining identity on all of F_p^3.
    pub fn verify(&self) -> bool {
        let pr = self.p.get();
        let qr = self.q.get();
        for z1 in 0..pr {
            for z2 in 0..pr {
                for y in 0..pr {
                    let mut acc = 0u64;
                    for (&(j1, j2, j3, r), &coeff) in &self.beta {
                        if (j1 * z1 + j2 * z2 + j3 * y) % pr == r {
                            acc += coeff;
                        }
                    }
                    let want = u64::from((self.gamma * z1 * z2 + y) % pr == self.t);
                    if acc % qr != want {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Reduced row echelon solve of `rows * x = rhs` over F_q. Returns the
/// particular solution with free variables set to zero, or None when the
/// system is inconsistent.
fn solve_linear_mod(mut rows: Vec<Vec<u64>>, mut rhs: Vec<u64>, q: Prime) -> Option<Vec<u64>> {
    let qr = q.get();
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let inv = |a: u64| {
        crate::ff::Fp::new(a, q)
            .inv()
            .expect("pivot nonzero")
            .residue()
    };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        let Some(found) = (pivot_row..nrows).find(|&r| rows[r][col] % qr != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        rhs.swap(pivot_row, found);
        let scale = inv(rows[pivot_row][col] % qr);
        for c in col..ncols {
            rows[pivot_row][c] = mul_mod(rows[pivot_row][c] % qr, scale, qr);
        }
        rhs[pivot_row] = mul_mod(rhs[pivot_row] % qr, scale, qr);
        for r in 0..nrows {
            if r != pivot_row && rows[r][col] % qr != 0 {
                let factor = rows[r][col] % qr;
                for c in col..ncols {
                    let delta = mul_mod(factor, rows[pivot_row][c], qr);
                    rows[r][c] = sub_mod(rows[r][c] % qr, delta, qr);
                }
                let delta = mul_mod(factor, rhs[pivot_row], qr);
                rhs[r] = sub_mod(rhs[r] % qr, delta, qr);
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    // Inconsistent row: all-zero coefficients with nonzero right side.
    for r in pivot_row..nrows {
        if rhs[r] % qr != 0 && rows[r].iter().all(|&c| c % qr == 0) {
            return None;
        }
    }
    let mut solution = vec![0u64; ncols];
    for (row, col) in pivots {
        solution[col] = rhs[row];
    }
    Some(solution)
}

/// Coefficients for the symmetric degree-decreasing identity at arity d:
/// `b(gamma*x_1*...*x_d + y; t) = b(y; t) +
///  sum_r beta[t][r] * sum_{S subset [d]} (-1)^{|S|} b(gamma*Sigma(S)+y; r)`
/// for boolean x's, any y in F_p and any gamma != 0.
#[derive(Clone, Debug)]
pub struct SddlTable {
    p: Prime,
    q: Prime,
    d: usize,
    base_d: u128,
    beta: Vec<Vec<u64>>,
}

impl SddlTable {
    /// Base case at the smallest d0 = q^k with q^k >= d and q^k = 1 mod p
    /// (beta[t][r] = 0 for r = t and 1 otherwise), then the downward
    /// recursion `beta'[t][r] = beta[t][r] - beta[t][r+1]` applied d0 - d
    /// times.
    pub fn new(p: Prime, q: Prime, d: usize) -> Result<SddlTable> {
        if p == q {
            return Err(Error::Hypothesis(
                "symmetric degree decreasing identity needs p != q".into(),
            ));
        }
        if d == 0 {
            return Err(Error::Hypothesis("arity d must be positive".into()));
        }
        let pr = p.get();
        let qr = q.get();
        // Multiplicative order of q mod p; k runs over its multiples.
        let ord = (1..pr)
            .find(|&k| {
                let mut acc = 1u64;
                for _ in 0..k {
                    acc = acc * (qr % pr) % pr;
                }
                acc == 1
            })
            .expect("q mod p generates a finite cyclic group");
        let mut base_d: u128 = 1;
        let step: u128 = (qr as u128).pow(ord as u32);
        while base_d < d as u128 {
            base_d = base_d.checked_mul(step).ok_or(Error::CapExceeded {
                what: "SDDL base arity",
                limit: SDDL_RECURSION_CAP,
            })?;
        }
        let iterations = base_d - d as u128;
        if iterations > SDDL_RECURSION_CAP as u128 {
            return Err(Error::CapExceeded {
                what: "SDDL recursion steps",
                limit: SDDL_RECURSION_CAP,
            });
        }
        let mut beta: Vec<Vec<u64>> = (0..pr)
            .map(|t| (0..pr).map(|r| u64::from(r != t)).collect())
            .collect();
        for _ in 0..iterations {
            beta = (0..pr as usize)
                .map(|t| {
                    (0..pr as usize)
                        .map(|r| {
                            let next = (r + 1) % pr as usize;
                            sub_mod(beta[t][r], beta[t][next], qr)
                        })
                        .collect()
                })
                .collect();
        }
        Ok(SddlTable { p, q, d, base_d, beta })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn q(&self) -> Prime {
        self.q
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The arity q^k the recursion started from.
    pub fn base_d(&self) -> u128 {
        self.base_d
    }

    #[inline]
    pub fn beta(&self, t: u64, r: u64) -> u64 {
        self.beta[t as usize][r as usize]
    }

    /// `alpha_s = (-1)^s` in F_q.
    #[inline]
    pub fn alpha(&self, s: usize) -> u64 {
        if s % 2 == 0 {
            1
        } else {
            self.q.get() - 1
        }
    }

    /// Exhaustive functional check over all boolean x, all y, t in F_p and
    /// all gamma != 0. Intended for d <= 6.
    pub fn verify(&self) -> bool {
        let pr = self.p.get();
        let qr = self.q.get();
        let d = self.d;
        for gamma in 1..pr {
            for t in 0..pr {
                for x in 0..(1u32 << d) {
                    for y in 0..pr {
                        let product: u64 = u64::from(x == (1u32 << d) - 1);
                        let want = u64::from((gamma * product + y) % pr == t);
                        let mut acc = u64::from(y == t);
                        for r in 0..pr {
                            let b = self.beta(t, r);
                            if b == 0 {
                                continue;
                            }
                            let mut inner = 0u64;
                            for s_mask in 0..(1u32 << d) {
                                let chosen = (s_mask & x).count_ones() as u64;
                                let size = s_mask.count_ones() as usize;
                                if (gamma * chosen + y) % pr == r {
                                    inner = (inner + self.alpha(size)) % qr;
                                }
                            }
                            acc = (acc + b * inner) % qr;
                        }
                        if acc % qr != want {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Rewrites the atom `b(gamma*Z1*Z2 + H'; t)` (supplied as its
/// decomposition) into the product-free expression given by the DDL
/// coefficients. The decomposition is checked against `original` by
/// functional equality when n is desk-scale.
pub fn apply_ddl(
    original: &LabeledHypergraph,
    z1: &LabeledHypergraph,
    z2: &LabeledHypergraph,
    h_rest: &LabeledHypergraph,
    gamma: u64,
    t: u64,
    q: Prime,
    caps: &Caps,
) -> Result<Expression> {
    let n = original.n();
    let p = original.p();
    let gamma = gamma % p.get();
    if n <= 16 {
        let full = (1u64 << n) as u32;
        for x in 0..full {
            let combined = (gamma * z1.eval_mask(x) % p.get() * z2.eval_mask(x)
                + h_rest.eval_mask(x))
                % p.get();
            if combined != original.eval_mask(x) {
                return Err(Error::Verification(format!(
                    "decomposition check failed at input {x:#b}"
                )));
            }
        }
    }
    let table = DdlTable::coefficients(p, q, gamma, t % p.get())?;
    let mut out = Expression::empty(n, p, q);
    for ((j1, j2, j3, r), beta) in table.entries() {
        let graph = z1.scale(j1).add(&z2.scale(j2))?.add(&h_rest.scale(j3))?;
        out.add_term(ElementaryAtom::new(graph, r), beta)?;
        if out.term_count() > caps.terms {
            return Err(Error::CapExceeded {
                what: "DDL rewrite terms",
                limit: caps.terms,
            });
        }
    }
    Ok(out)
}

/// Result of iterating the symmetric identity over an orbit of equal-size
/// edges: the coefficient of each tuple `(S_1..S_l)` and the merged
/// product-free expression.
#[derive(Clone, Debug)]
pub struct SddlOrbitExpansion {
    /// Coefficient per `(tuple of chosen subsets, accepting value)`. The
    /// coefficient depends only on the accepting value and the multiset of
    /// subset sizes.
    pub tuple_coeffs: BTreeMap<(Vec<u32>, u64), u64>,
    /// `sum beta * b(gamma*(Sigma(S_1)+...+Sigma(S_l)) + H'; r)` with
    /// atoms merged by graph.
    pub expression: Expression,
}

/// Iterates the symmetric degree-decreasing identity over the edges
/// `e_1..e_l` (pairwise equal size, shared label `gamma != 0`), rewriting
/// `b(gamma*(e_1+...+e_l) + H'; t)` on boolean inputs.
pub fn apply_sddl_orbit(
    gamma: u64,
    edges: &[u32],
    h_rest: &LabeledHypergraph,
    t: u64,
    q: Prime,
    caps: &Caps,
) -> Result<SddlOrbitExpansion> {
    let p = h_rest.p();
    let gamma = gamma % p.get();
    if gamma == 0 {
        return Err(Error::Hypothesis("SDDL application needs gamma != 0".into()));
    }
    if edges.is_empty() {
        return Err(Error::Hypothesis(
            "SDDL application needs at least one edge".into(),
        ));
    }
    let size = edges[0].count_ones();
    if edges.iter().any(|e| e.count_ones() != size || *e == 0) {
        return Err(Error::Hypothesis(
            "SDDL orbit edges must be nonempty and of equal size".into(),
        ));
    }
    let table = SddlTable::new(p, q, size as usize)?;
    let qr = q.get();
    let t = t % p.get();

    // State: coefficient per (subset choices so far, accepting value).
    // The base term of each step keeps the accepting value and contributes
    // the empty subset; it merges with the alpha_0 branch of the sum.
    let mut state: BTreeMap<(Vec<u32>, u64), u64> = BTreeMap::new();
    state.insert((Vec::new(), t), 1);
    for &edge in edges {
        let mut next: BTreeMap<(Vec<u32>, u64), u64> = BTreeMap::new();
        for ((tuple, r), coeff) in &state {
            // b(y; r): drop this edge, keep the accepting value.
            let mut dropped = tuple.clone();
            dropped.push(0);
            let entry = next.entry((dropped, *r)).or_insert(0);
            *entry = (*entry + coeff) % qr;
            for r2 in p.residues() {
                let b = table.beta(*r, r2);
                if b == 0 {
                    continue;
                }
                for sub in subsets_of_mask(edge) {
                    let alpha = table.alpha(sub.count_ones() as usize);
                    let mut chosen = tuple.clone();
                    chosen.push(sub);
                    let entry = next.entry((chosen, r2)).or_insert(0);
                    *entry = (*entry + coeff * b % qr * alpha) % qr;
                }
            }
        }
        next.retain(|_, c| *c != 0);
        if next.len() > caps.terms {
            return Err(Error::CapExceeded {
                what: "SDDL orbit tuples",
                limit: caps.terms,
            });
        }
        state = next;
    }

    let mut expression = Expression::empty(h_rest.n(), p, q);
    for ((tuple, r), &coeff) in &state {
        let graph = tuple_graph(h_rest, tuple, gamma)?;
        expression.add_term(ElementaryAtom::new(graph, *r), coeff)?;
        if expression.term_count() > caps.terms {
            return Err(Error::CapExceeded {
                what: "SDDL rewrite terms",
                limit: caps.terms,
            });
        }
    }
    Ok(SddlOrbitExpansion {
        tuple_coeffs: state,
        expression,
    })
}

/// `H' + gamma*(Sigma(S_1)+...+Sigma(S_l))` for a tuple of subsets.
fn tuple_graph(
    h_rest: &LabeledHypergraph,
    tuple: &[u32],
    gamma: u64,
) -> Result<LabeledHypergraph> {
    let mut graph = h_rest.clone();
    for &sub in tuple {
        graph = graph.add_sigma(sub, gamma)?;
    }
    Ok(graph)
}

/// Worklist engine shared by both purification stages.
struct PurifyEngine {
    n: usize,
    p: Prime,
    q: Prime,
    d: usize,
    c_mask: u32,
    cbar_mask: u32,
    /// All permutations of the complement of C, extended by the identity.
    cbar_perms: Vec<Perm>,
    caps: Caps,
    ddl_cache: BTreeMap<(u64, u64), DdlTable>,
    /// `sum coeff * sA(H; t)` keyed by the C-aligned canonical form of H.
    state: BTreeMap<(LabeledHypergraph, u64), u64>,
    /// With verification on, the expansion the state must stay equal to.
    reference: Option<Expression>,
}

impl PurifyEngine {
    fn new(
        graph: &LabeledHypergraph,
        r: u64,
        coeff: u64,
        c_mask: u32,
        q: Prime,
        caps: Caps,
        verify: bool,
    ) -> Result<PurifyEngine> {
        let n = graph.n();
        let maximal = graph.maximal_fully_symmetric();
        if maximal != Some(c_mask & graph.full_mask()) {
            return Err(Error::Hypothesis(format!(
                "C = {:?} is not the maximal fully symmetric set of the graph \
                 (found {:?}); purification needs |C| > n/2 and maximality",
                mask_vertices(c_mask),
                maximal.map(mask_vertices),
            )));
        }
        let cbar_mask = graph.full_mask() & !c_mask;
        let mut engine = PurifyEngine {
            n,
            p: graph.p(),
            q,
            d: graph.degree_bound(),
            c_mask,
            cbar_mask,
            cbar_perms: perms_on_support(n, cbar_mask),
            caps,
            ddl_cache: BTreeMap::new(),
            state: BTreeMap::new(),
            reference: None,
        };
        engine.add_sterm(graph.clone(), r % graph.p().get(), coeff % q.get())?;
        if verify {
            engine.reference = Some(engine.state_expression()?);
        }
        Ok(engine)
    }

    /// Canonical representative under Sym(complement of C); the Sym(C)
    /// factor acts trivially because C stays fully symmetric.
    fn c_canonical(&self, graph: &LabeledHypergraph) -> LabeledHypergraph {
        let mut best = graph.clone();
        for perm in &self.cbar_perms {
            let image = graph.apply_perm(perm);
            if image < best {
                best = image;
            }
        }
        best
    }

    /// Order of Gamma(H) = {tau in Sym(complement) : tau(H) = H}.
    fn gamma_order(&self, graph: &LabeledHypergraph) -> u64 {
        self.cbar_perms
            .iter()
            .filter(|perm| graph.apply_perm(perm) == *graph)
            .count() as u64
    }

    /// Members of Gamma(H) as indices into `cbar_perms`.
    fn gamma_group(&self, graph: &LabeledHypergraph) -> Vec<usize> {
        self.cbar_perms
            .iter()
            .enumerate()
            .filter(|(_, perm)| graph.apply_perm(perm) == *graph)
            .map(|(i, _)| i)
            .collect()
    }

    fn add_sterm(&mut self, graph: LabeledHypergraph, t: u64, coeff: u64) -> Result<()> {
        if coeff % self.q.get() == 0 {
            return Ok(());
        }
        debug_assert!(
            graph.is_fully_symmetric(self.c_mask),
            "worklist invariant: C stays fully symmetric"
        );
        let key = (self.c_canonical(&graph), t);
        let sum = (self.state.get(&key).copied().unwrap_or(0) + coeff) % self.q.get();
        if sum == 0 {
            self.state.remove(&key);
        } else {
            self.state.insert(key, sum);
        }
        if self.state.len() > self.caps.terms {
            return Err(Error::CapExceeded {
                what: "purification worklist",
                limit: self.caps.terms,
            });
        }
        Ok(())
    }

    fn ddl_table(&mut self, gamma: u64, t: u64) -> Result<DdlTable> {
        if !self.ddl_cache.contains_key(&(gamma, t)) {
            let table = DdlTable::coefficients(self.p, self.q, gamma, t)?;
            self.ddl_cache.insert((gamma, t), table);
        }
        Ok(self.ddl_cache[&(gamma, t)].clone())
    }

    /// Stage one: remove edges crossing between C and its complement by
    /// factoring one crossing orbit as Z1*Z2 and applying the DDL.
    fn ddl_pass(&mut self) -> Result<()> {
        loop {
            let Some((key, crossings)) = self
                .state
                .keys()
                .map(|key| {
                    let count = key.0.crossing_edges(self.c_mask).len();
                    (key.clone(), count)
                })
                .filter(|(_, count)| *count > 0)
                .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
            else {
                return Ok(());
            };
            let coeff = self.state.remove(&key).expect("key taken from state");
            let (graph, t) = key;
            let gamma_h = self.gamma_order(&graph);

            let edge = *graph
                .crossing_edges(self.c_mask)
                .first()
                .expect("graph has a crossing edge");
            let gamma = graph.label(edge);
            let k = (edge & self.c_mask).count_ones() as usize;
            let e_cbar = edge & self.cbar_mask;

            // P = all k-subsets of C (Sym(C) acts set-transitively);
            // Q = Gamma(H)-orbit of the complement part. The crossing
            // orbit under Sym(C) x Gamma(H) is exactly P x Q.
            let p_masks = k_subsets_of_mask(self.c_mask, k);
            let q_masks: BTreeSet<u32> = self
                .gamma_group(&graph)
                .into_iter()
                .map(|i| self.cbar_perms[i].apply_mask(e_cbar))
                .collect();
            let mut orbit: Vec<u32> = Vec::with_capacity(p_masks.len() * q_masks.len());
            for &w in &p_masks {
                for &v in &q_masks {
                    orbit.push(w | v);
                }
            }
            for &o in &orbit {
                if graph.label(o) != gamma {
                    return Err(Error::Internal(format!(
                        "crossing orbit not uniformly labeled at {o:#b}"
                    )));
                }
            }

            let z1 = LabeledHypergraph::from_edges(
                self.n,
                self.p,
                self.d,
                p_masks.iter().map(|&w| (w, 1)),
            )?;
            let z2 = LabeledHypergraph::from_edges(
                self.n,
                self.p,
                self.d,
                q_masks.iter().map(|&v| (v, 1)),
            )?;
            let mut h_rest = graph.clone();
            for &o in &orbit {
                let reduced = sub_mod(h_rest.label(o), gamma, self.p.get());
                h_rest.set_label(o, reduced)?;
            }

            let table = self.ddl_table(gamma, t)?;
            for ((j1, j2, j3, r), beta) in table.entries() {
                let image = z1.scale(j1).add(&z2.scale(j2))?.add(&h_rest.scale(j3))?;
                debug_assert!(image.crossing_edges(self.c_mask).len() < crossings);
                // The Sym(n)/(Sym(C) x Gamma(H)) transversal covers each
                // coset of the image's own aligned group
                // |Gamma(image)| / |Gamma(H)| times.
                let gamma_image = self.gamma_order(&image);
                debug_assert_eq!(gamma_image % gamma_h, 0);
                let multiplicity = (gamma_image / gamma_h) % self.q.get();
                self.add_sterm(
                    image,
                    r,
                    coeff * beta % self.q.get() * multiplicity % self.q.get(),
                )?;
            }
            self.verify_step()?;
        }
    }

    /// Stage two: shrink complement edges of size >= 2 to singletons by
    /// iterating the symmetric identity over their Gamma(H)-orbits.
    fn sddl_pass(&mut self) -> Result<()> {
        loop {
            let Some(max_size) = self
                .state
                .keys()
                .flat_map(|(g, _)| g.edges().map(|(e, _)| e))
                .filter(|&e| e & self.c_mask == 0 && e.count_ones() >= 2)
                .map(|e| e.count_ones())
                .max()
            else {
                return Ok(());
            };
            let c_mask = self.c_mask;
            let count_at_max = move |g: &LabeledHypergraph| {
                g.edges()
                    .filter(|&(e, _)| e & c_mask == 0 && e.count_ones() == max_size)
                    .count()
            };
            let key = self
                .state
                .keys()
                .map(|key| (key.clone(), count_at_max(&key.0)))
                .filter(|(_, c)| *c > 0)
                .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
                .map(|(key, _)| key)
                .expect("some graph realizes the maximum");
            let coeff = self.state.remove(&key).expect("key taken from state");
            let (graph, t) = key;
            let gamma_members = self.gamma_group(&graph);

            let edge = graph
                .edges()
                .map(|(e, _)| e)
                .filter(|&e| e & self.c_mask == 0 && e.count_ones() == max_size)
                .min()
                .expect("graph realizes the maximum");
            let gamma = graph.label(edge);
            let orbit: BTreeSet<u32> = gamma_members
                .iter()
                .map(|&i| self.cbar_perms[i].apply_mask(edge))
                .collect();
            let orbit: Vec<u32> = orbit.into_iter().collect();
            for &o in &orbit {
                if graph.label(o) != gamma {
                    return Err(Error::Internal(format!(
                        "complement orbit not uniformly labeled at {o:#b}"
                    )));
                }
            }
            let mut h_rest = graph.clone();
            for &o in &orbit {
                let reduced = sub_mod(h_rest.label(o), gamma, self.p.get());
                h_rest.set_label(o, reduced)?;
            }

            let expansion = apply_sddl_orbit(gamma, &orbit, &h_rest, t, self.q, &self.caps)?;
            // Regroup tuples by their orbit under Gamma(H): the summed
            // b-images of one tuple orbit form an exact multiple of the
            // aligned closure of its graph.
            for ((tuple, r), &beta) in &expansion.tuple_coeffs {
                let mut stabilizer = 0u64;
                let mut minimal = true;
                for &i in &gamma_members {
                    let perm = &self.cbar_perms[i];
                    let image = permute_tuple(tuple, &orbit, perm);
                    if image < *tuple {
                        minimal = false;
                        break;
                    }
                    if image == *tuple {
                        stabilizer += 1;
                    }
                }
                if !minimal {
                    continue;
                }
                let image_graph = tuple_graph(&h_rest, tuple, gamma)?;
                debug_assert!(count_at_max(&image_graph) < count_at_max(&graph));
                debug_assert!(image_graph.crossing_edges(self.c_mask).is_empty());
                let gamma_image = self.gamma_order(&image_graph);
                debug_assert_eq!(gamma_image % stabilizer, 0);
                let multiplicity = (gamma_image / stabilizer) % self.q.get();
                self.add_sterm(
                    image_graph,
                    *r,
                    coeff * beta % self.q.get() * multiplicity % self.q.get(),
                )?;
            }
            self.verify_step()?;
        }
    }

    /// Expands the worklist state to a plain expression: the cosets of
    /// Sym(C) x Gamma(H) correspond to the orbit of the pair (H, C) under
    /// Sym(n), with repeated graphs contributing multiplicity.
    fn state_expression(&self) -> Result<Expression> {
        let mut out = Expression::empty(self.n, self.p, self.q);
        for ((graph, t), &coeff) in &self.state {
            for (image, _) in pair_orbit(graph, self.c_mask, self.caps.orbit)? {
                out.add_term(ElementaryAtom::new(image, *t), coeff)?;
            }
        }
        Ok(out)
    }

    fn verify_step(&self) -> Result<()> {
        let Some(reference) = &self.reference else {
            return Ok(());
        };
        if self.n > self.caps.truth_table_n {
            return Err(Error::TooManyVertices {
                what: "verification truth table",
                n: self.n,
                limit: self.caps.truth_table_n,
            });
        }
        let current = self.state_expression()?;
        let full = (1u64 << self.n) as u32;
        for x in 0..full {
            if current.eval_mask(x) != reference.eval_mask(x) {
                return Err(Error::Verification(format!(
                    "purification step changed the function at input {x:#b}"
                )));
            }
        }
        Ok(())
    }

    /// Converts `sum coeff * sA(H; t)` into ordinary closures: each
    /// coefficient picks up the index [Aut(H) : Sym(C) x Gamma(H)].
    fn into_symmetric_expression(self) -> Result<SymmetricExpression> {
        let mut out = SymmetricExpression::empty(self.n, self.p, self.q);
        let c_order = factorial(self.c_mask.count_ones() as usize);
        for ((graph, t), coeff) in &self.state {
            let aligned_order = c_order * self.gamma_order(graph) as u128;
            let aut_order = graph.aut_order()?;
            debug_assert_eq!(aut_order % aligned_order, 0);
            let index = (aut_order / aligned_order) % self.q.get() as u128;
            out.add_sterm(
                graph.clone(),
                *t,
                coeff * index as u64 % self.q.get(),
                &self.caps,
            )?;
        }
        Ok(out)
    }
}

/// Position-respecting action of a complement permutation on a tuple of
/// chosen subsets: tau sends the subset chosen at edge e_i to the slot of
/// tau(e_i).
fn permute_tuple(tuple: &[u32], orbit: &[u32], perm: &Perm) -> Vec<u32> {
    let mut out = vec![0u32; tuple.len()];
    for (i, &sub) in tuple.iter().enumerate() {
        let target_edge = perm.apply_mask(orbit[i]);
        let slot = orbit
            .binary_search(&target_edge)
            .expect("Gamma(H) permutes the orbit");
        out[slot] = perm.apply_mask(sub);
    }
    out
}

/// Orbit of the pair (graph, marked set) under Sym(n); its size is the
/// index of the aligned subgroup Sym(C) x Gamma(H).
fn pair_orbit(
    graph: &LabeledHypergraph,
    c_mask: u32,
    cap: usize,
) -> Result<Vec<(LabeledHypergraph, u32)>> {
    let n = graph.n();
    let mut seen: BTreeSet<(LabeledHypergraph, u32)> = BTreeSet::new();
    let mut queue: VecDeque<(LabeledHypergraph, u32)> = VecDeque::new();
    seen.insert((graph.clone(), c_mask));
    queue.push_back((graph.clone(), c_mask));
    let gens: Vec<Perm> = (0..n.saturating_sub(1))
        .map(|i| Perm::transposition(n, i, i + 1))
        .collect();
    while let Some((g, c)) = queue.pop_front() {
        for gen in &gens {
            let image = (g.apply_perm(gen), gen.apply_mask(c));
            if !seen.contains(&image) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "coset enumeration",
                        limit: cap,
                    });
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All k-subsets of the set given by `mask`.
fn k_subsets_of_mask(mask: u32, k: usize) -> Vec<u32> {
    subsets_of_mask(mask)
        .into_iter()
        .filter(|s| s.count_ones() as usize == k)
        .collect()
}

/// Stage one only: rewrites `coeff * s(G; r)` into a sum of closures over
/// partially symmetry-purified graphs (no crossing edges), preserving the
/// computed function. C must be the maximal fully symmetric set of G and
/// have more than n/2 vertices.
pub fn partially_purify(
    graph: &LabeledHypergraph,
    r: u64,
    coeff: u64,
    c_mask: u32,
    q: Prime,
    caps: &Caps,
) -> Result<SymmetricExpression> {
    let mut engine = PurifyEngine::new(graph, r, coeff, c_mask, q, *caps, false)?;
    engine.ddl_pass()?;
    engine.into_symmetric_expression()
}

/// Full pipeline on a single closure: crossing-edge removal followed by
/// complement-edge shrinking. Every output graph is symmetry-purified
/// with respect to C and the output expression computes the same function
/// as `coeff * s(G; r)`. With `verify` set, the truth-table oracle runs
/// after every worklist step and aborts on mismatch.
pub fn purify_closure(
    graph: &LabeledHypergraph,
    r: u64,
    coeff: u64,
    c_mask: u32,
    q: Prime,
    caps: &Caps,
    verify: bool,
) -> Result<SymmetricExpression> {
    let mut engine = PurifyEngine::new(graph, r, coeff, c_mask, q, *caps, verify)?;
    engine.ddl_pass()?;
    engine.sddl_pass()?;
    engine.into_symmetric_expression()
}

/// Purifies every closure of a symmetric expression, each with respect to
/// its own maximal fully symmetric set (which must exceed n/2 vertices).
pub fn purify(
    expr: &SymmetricExpression,
    caps: &Caps,
    verify: bool,
) -> Result<SymmetricExpression> {
    let mut out = SymmetricExpression::empty(expr.n(), expr.p(), expr.q());
    for (graph, r, coeff) in expr.sterms() {
        let c_mask = graph.maximal_fully_symmetric().ok_or_else(|| {
            Error::Hypothesis(
                "a closure has no fully symmetric set on more than half the vertices".into(),
            )
        })?;
        let purified = purify_closure(graph, r, coeff, c_mask, expr.q(), caps, verify)?;
        for (g, t, c) in purified.sterms() {
            out.add_sterm(g.clone(), t, c, caps)?;
        }
    }
    Ok(out)
}
