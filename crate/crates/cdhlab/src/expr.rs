//! Expressions over elementary atoms `b(G; r)` and symmetric closures
//! `s(G; r)`: evaluation, symmetry checking, normalization, Hamming-weight
//! profiles, and the brute-force truth-table equivalence oracle.
//!
//! An atom `b(G; r)` is the 0/1 indicator that the polynomial of G takes
//! value r on a boolean input; an expression is an F_q-linear combination
//! of atoms. The closure `s(G; r)` sums `b` over one representative per
//! coset of Aut(G) in Sym(V) — the smallest symmetric expression
//! containing `b(G; r)`.

use std::collections::BTreeMap;

use crate::ff::{add_mod, mul_mod, seq_min_period, sub_mod, Prime};
use crate::hypergraph::LabeledHypergraph;
use crate::perm::Perm;
use crate::{Caps, Error, Result};

/// Indicator atom: 1 on inputs where the graph's polynomial equals `r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryAtom {
    pub graph: LabeledHypergraph,
    pub r: u64,
}

impl ElementaryAtom {
    pub fn new(graph: LabeledHypergraph, r: u64) -> ElementaryAtom {
        let r = r % graph.p().get();
        ElementaryAtom { graph, r }
    }

    #[inline]
    pub fn eval_mask(&self, x: u32) -> bool {
        self.graph.eval_mask(x) == self.r
    }

    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        Ok(self.graph.evaluate(x)?.residue() == self.r)
    }
}

/// Normalized F_q-linear combination of elementary atoms: duplicate
/// `(G, r)` pairs are merged and zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    n: usize,
    p: Prime,
    q: Prime,
    terms: BTreeMap<ElementaryAtom, u64>,
}

impl Expression {
    pub fn empty(n: usize, p: Prime, q: Prime) -> Expression {
        Expression {
            n,
            p,
            q,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a normalized expression, merging duplicate atoms in F_q.
    pub fn from_terms(
        n: usize,
        p: Prime,
        q: Prime,
        terms: impl IntoIterator<Item = (ElementaryAtom, u64)>,
    ) -> Result<Expression> {
        let mut out = Self::empty(n, p, q);
        for (atom, coeff) in terms {
            out.add_term(atom, coeff)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, atom: ElementaryAtom, coeff: u64) -> Result<()> {
        if atom.graph.n() != self.n || atom.graph.p() != self.p {
            return Err(Error::InvalidExpression(format!(
                "atom on (n={}, p={}) added to expression on (n={}, p={})",
                atom.graph.n(),
                atom.graph.p(),
                self.n,
                self.p
            )));
        }
        let q = self.q.get();
        let sum = add_mod(self.terms.get(&atom).copied().unwrap_or(0), coeff % q, q);
        if sum == 0 {
            self.terms.remove(&atom);
        } else {
            self.terms.insert(atom, sum);
        }
        Ok(())
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
    pub fn q(&self) -> Prime {
        self.q
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ElementaryAtom, u64)> {
        self.terms.iter().map(|(a, &c)| (a, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the two expressions in F_q.
    pub fn add(&self, other: &Expression) -> Result<Expression> {
        if self.n != other.n || self.p != other.p || self.q != other.q {
            return Err(Error::InvalidExpression(
                "adding expressions with different (n, p, q)".into(),
            ));
        }
        let mut out = self.clone();
        for (atom, coeff) in other.terms() {
            out.add_term(atom.clone(), coeff)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> Expression {
        let c = c % self.q.get();
        let mut out = Self::empty(self.n, self.p, self.q);
        if c == 0 {
            return out;
        }
        for (atom, coeff) in self.terms() {
            out.terms
                .insert(atom.clone(), mul_mod(coeff, c, self.q.get()));
        }
        out
    }

    /// Value in F_q on the boolean input given as a bitmask.
    pub fn eval_mask(&self, x: u32) -> u64 {
        let mut acc = 0u64;
        for (atom, coeff) in &self.terms {
            if atom.eval_mask(x) {
                acc += coeff;
            }
        }
        acc % self.q.get()
    }

    pub fn evaluate(&self, x: &[bool]) -> Result<u64> {
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
        Ok(self.eval_mask(mask))
    }

    pub fn apply_perm(&self, perm: &Perm) -> Expression {
        let mut terms = BTreeMap::new();
        for (atom, &coeff) in &self.terms {
            terms.insert(
                ElementaryAtom::new(atom.graph.apply_perm(perm), atom.r),
                coeff,
            );
        }
        Expression {
            n: self.n,
            p: self.p,
            q: self.q,
            terms,
        }
    }

    /// Syntactic symmetry: every transposition of `[n]` leaves the term map
    /// unchanged (transpositions generate Sym(n)).
    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    fn symmetry_violation(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let tau = Perm::transposition(self.n, u, v);
                if &self.apply_perm(&tau) != self {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Decomposes a symmetric expression into closures by greedy peeling:
    /// take any remaining atom, subtract its full closure, recurse. The
    /// result re-expands to exactly this expression.
    pub fn decompose_symmetric(&self, caps: &Caps) -> Result<SymmetricExpression> {
        if let Some((u, v)) = self.symmetry_violation() {
            return Err(Error::NotSymmetric { u, v });
        }
        let mut rest = self.clone();
        let mut out = SymmetricExpression::empty(self.n, self.p, self.q);
        while let Some((atom, &coeff)) = rest.terms.iter().next() {
            let atom = atom.clone();
            let closure = SymmetricExpression::closure(&atom.graph, atom.r, coeff, self.q, caps)?;
            let expanded = closure.expand(caps)?;
            // subtract: by symmetry of `rest` every orbit atom carries `coeff`
            for (orbit_atom, c) in expanded.terms() {
                rest.add_term(orbit_atom.clone(), sub_mod(0, c, self.q.get()))?;
            }
            out.absorb(closure)?;
        }
        Ok(out)
    }
}

/// F_q-linear combination of symmetric closures `s(G; r)`, keyed by the
/// canonical form of G so the coefficient is a class function. When
/// canonicalization is capped the raw graph is kept as key; that may leave
/// isomorphic sterms unmerged but never affects correctness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricExpression {
    n: usize,
    p: Prime,
    q: Prime,
    sterms: BTreeMap<(LabeledHypergraph, u64), u64>,
}

impl SymmetricExpression {
    pub fn empty(n: usize, p: Prime, q: Prime) -> SymmetricExpression {
        SymmetricExpression {
            n,
            p,
            q,
            sterms: BTreeMap::new(),
        }
    }

    /// The closure `coeff * s(G; r)` as a one-term symmetric expression.
    pub fn closure(
        graph: &LabeledHypergraph,
        r: u64,
        coeff: u64,
        q: Prime,
        caps: &Caps,
    ) -> Result<SymmetricExpression> {
        SymmetricExpression::from_sterms(
            graph.n(),
            graph.p(),
            q,
            [(graph.clone(), r, coeff)],
            caps,
        )
    }

    pub fn from_sterms(
        n: usize,
        p: Prime,
        q: Prime,
        sterms: impl IntoIterator<Item = (LabeledHypergraph, u64, u64)>,
        caps: &Caps,
    ) -> Result<SymmetricExpression> {
        let mut out = Self::empty(n, p, q);
        for (graph, r, coeff) in sterms {
            out.add_sterm(graph, r, coeff, caps)?;
        }
        Ok(out)
    }

    /// Adds `coeff * s(G; r)`, canonicalizing the key when feasible.
    pub fn add_sterm(
        &mut self,
        graph: LabeledHypergraph,
        r: u64,
        coeff: u64,
        caps: &Caps,
    ) -> Result<()> {
        if graph.n() != self.n || graph.p() != self.p {
            return Err(Error::InvalidExpression(format!(
                "sterm on (n={}, p={}) added to expression on (n={}, p={})",
                graph.n(),
                graph.p(),
                self.n,
                self.p
            )));
        }
        let key_graph = match graph.canonical_form(caps.orbit) {
            Ok(canon) => canon,
            Err(Error::CapExceeded { .. }) | Err(Error::TooManyVertices { .. }) => graph,
            Err(e) => return Err(e),
        };
        let r = r % self.p.get();
        let q = self.q.get();
        let key = (key_graph, r);
        let sum = add_mod(self.sterms.get(&key).copied().unwrap_or(0), coeff % q, q);
        if sum == 0 {
            self.sterms.remove(&key);
        } else {
            self.sterms.insert(key, sum);
        }
        if self.sterms.len() > caps.terms {
            return Err(Error::CapExceeded {
                what: "symmetric expression terms",
                limit: caps.terms,
            });
        }
        Ok(())
    }

    fn absorb(&mut self, other: SymmetricExpression) -> Result<()> {
        for ((graph, r), coeff) in other.sterms {
            let q = self.q.get();
            let entry = self.sterms.entry((graph, r)).or_insert(0);
            *entry = add_mod(*entry, coeff, q);
        }
        self.sterms.retain(|_, &mut c| c != 0);
        Ok(())
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
    pub fn q(&self) -> Prime {
        self.q
    }

    pub fn sterms(&self) -> impl Iterator<Item = (&LabeledHypergraph, u64, u64)> {
        self.sterms.iter().map(|((g, r), &c)| (g, *r, c))
    }

    pub fn sterm_count(&self) -> usize {
        self.sterms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sterms.is_empty()
    }

    /// Expands every closure to its orbit atoms, producing the underlying
    /// plain expression.
    pub fn expand(&self, caps: &Caps) -> Result<Expression> {
        let mut out = Expression::empty(self.n, self.p, self.q);
        for ((graph, r), &coeff) in &self.sterms {
            let orbit = graph.orbit(caps.orbit)?;
            for member in orbit.members {
                out.add_term(ElementaryAtom::new(member, *r), coeff)?;
                if out.term_count() > caps.terms {
                    return Err(Error::CapExceeded {
                        what: "expression terms",
                        limit: caps.terms,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Number of distinct atoms in the full expansion: the sum of orbit
    /// indices over the sterms.
    pub fn expression_size(&self, caps: &Caps) -> Result<u128> {
        let mut total: u128 = 0;
        for ((graph, _), _) in &self.sterms {
            total += graph.orbit(caps.orbit)?.members.len() as u128;
        }
        Ok(total)
    }

    pub fn eval_mask(&self, x: u32, caps: &Caps) -> Result<u64> {
        let mut acc = 0u64;
        for ((graph, r), &coeff) in &self.sterms {
            let orbit = graph.orbit(caps.orbit)?;
            let hits = orbit
                .members
                .iter()
                .filter(|member| member.eval_mask(x) == *r)
                .count() as u64;
            acc = add_mod(acc, mul_mod(hits % self.q.get(), coeff, self.q.get()), self.q.get());
        }
        Ok(acc)
    }
}

/// The symmetric closure `s(G; r)` of a single atom, with coefficient 1.
pub fn symmetric_closure(
    graph: &LabeledHypergraph,
    r: u64,
    q: Prime,
    caps: &Caps,
) -> Result<SymmetricExpression> {
    SymmetricExpression::from_sterms(
        graph.n(),
        graph.p(),
        q,
        [(graph.clone(), r, 1)],
        caps,
    )
}

/// A full circuit: inner expression plus the outer accepting set
/// `R ⊆ F_q`; outputs 1 iff the inner value lands in R.
#[derive(Clone, Debug)]
pub struct CircuitSpec {
    pub inner: CircuitInner,
    pub outer_accept: Vec<u64>,
}

#[derive(Clone, Debug)]
pub enum CircuitInner {
    Plain(Expression),
    Symmetric(SymmetricExpression),
}

impl CircuitSpec {
    pub fn n(&self) -> usize {
        match &self.inner {
            CircuitInner::Plain(e) => e.n(),
            CircuitInner::Symmetric(e) => e.n(),
        }
    }

    pub fn q(&self) -> Prime {
        match &self.inner {
            CircuitInner::Plain(e) => e.q(),
            CircuitInner::Symmetric(e) => e.q(),
        }
    }

    pub fn eval_mask(&self, x: u32, caps: &Caps) -> Result<bool> {
        let value = match &self.inner {
            CircuitInner::Plain(e) => e.eval_mask(x),
            CircuitInner::Symmetric(e) => e.eval_mask(x, caps)?,
        };
        Ok(self.outer_accept.contains(&value))
    }
}

/// Hamming-weight profile of a symmetric function: the value at each
/// weight m in 0..=n, with the minimal period attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingProfile {
    pub values: Vec<u64>,
    pub min_period: usize,
}

impl HammingProfile {
    pub fn new(values: Vec<u64>) -> Result<HammingProfile> {
        let min_period = seq_min_period(&values)?;
        Ok(HammingProfile { values, min_period })
    }
}

fn weight_mask(m: usize) -> u32 {
    ((1u64 << m) - 1) as u32
}

/// Profile of a symmetric expression: values[m] is the F_q value on
/// `1^m 0^(n-m)`.
pub fn hamming_profile(expr: &SymmetricExpression, caps: &Caps) -> Result<HammingProfile> {
    let expanded = expr.expand(caps)?;
    let values = (0..=expr.n())
        .map(|m| expanded.eval_mask(weight_mask(m)))
        .collect();
    HammingProfile::new(values)
}

/// Profile of a plain expression, which must be symmetric.
pub fn hamming_profile_expression(expr: &Expression, _caps: &Caps) -> Result<HammingProfile> {
    if let Some((u, v)) = expr.symmetry_violation() {
        return Err(Error::NotSymmetric { u, v });
    }
    let values = (0..=expr.n())
        .map(|m| expr.eval_mask(weight_mask(m)))
        .collect();
    HammingProfile::new(values)
}

/// 0/1 profile of a full circuit (outer gate applied). The inner
/// expression must be symmetric.
pub fn hamming_profile_circuit(circuit: &CircuitSpec, caps: &Caps) -> Result<HammingProfile> {
    if let CircuitInner::Plain(e) = &circuit.inner {
        if let Some((u, v)) = e.symmetry_violation() {
            return Err(Error::NotSymmetric { u, v });
        }
    }
    let values = (0..=circuit.n())
        .map(|m| circuit.eval_mask(weight_mask(m), caps).map(u64::from))
        .collect::<Result<Vec<u64>>>()?;
    HammingProfile::new(values)
}

/// Brute-force oracle: equal value on all 2^n boolean inputs.
pub fn equivalent(lhs: &Expression, rhs: &Expression, caps: &Caps) -> Result<bool> {
    if lhs.n() != rhs.n() {
        return Err(Error::InvalidExpression(
            "comparing expressions of different arity".into(),
        ));
    }
    if lhs.n() > caps.truth_table_n {
        return Err(Error::TooManyVertices {
            what: "truth table",
            n: lhs.n(),
            limit: caps.truth_table_n,
        });
    }
    let full = (1u64 << lhs.n()) as u32;
    Ok((0..full).all(|x| lhs.eval_mask(x) == rhs.eval_mask(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::k_subsets;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn unary(n: usize, pr: Prime, v: usize) -> LabeledHypergraph {
        LabeledHypergraph::from_edges(n, pr, 1, [(1u32 << v, 1)]).unwrap()
    }

    fn four_vertex_example() -> LabeledHypergraph {
        let mut g = LabeledHypergraph::empty(4, p(3), 2).unwrap();
        for mask in k_subsets(3, 2) {
            g.set_label(mask, 1).unwrap();
        }
        g.set_label(1 << 3, 2).unwrap();
        g
    }

    #[test]
    fn atom_eval() {
        let empty = LabeledHypergraph::empty(3, p(2), 1).unwrap();
        let zero_atom = ElementaryAtom::new(empty.clone(), 0);
        let one_atom = ElementaryAtom::new(empty, 1);
        for x in 0..8 {
            assert!(zero_atom.eval_mask(x));
            assert!(!one_atom.eval_mask(x));
        }
        let g = LabeledHypergraph::from_edges(2, p(2), 2, [(0b11, 1)]).unwrap();
        assert!(ElementaryAtom::new(g, 1).eval_mask(0b11));
    }

    #[test]
    fn normalization_merges_and_cancels() {
        let g = unary(2, p(2), 0);
        let atom = ElementaryAtom::new(g.clone(), 1);
        let e = Expression::from_terms(
            2,
            p(2),
            p(2),
            [(atom.clone(), 1), (atom.clone(), 1)],
        )
        .unwrap();
        assert!(e.is_empty()); // 1 + 1 = 0 in F_2

        let e = Expression::from_terms(
            2,
            p(2),
            p(3),
            [(atom.clone(), 1), (atom.clone(), 2)],
        )
        .unwrap();
        assert!(e.is_empty()); // 1 + 2 = 0 in F_3

        let other = ElementaryAtom::new(unary(2, p(2), 0), 0);
        let e = Expression::from_terms(2, p(2), p(3), [(atom, 1), (other, 1)]).unwrap();
        assert_eq!(e.term_count(), 2); // distinct accepting values stay apart
    }

    #[test]
    fn expression_eval_cases() {
        let e = Expression::empty(3, p(2), p(3));
        assert_eq!(e.eval_mask(0b101), 0);

        let empty_graph = LabeledHypergraph::empty(3, p(2), 1).unwrap();
        let e = Expression::from_terms(
            3,
            p(2),
            p(3),
            [(ElementaryAtom::new(empty_graph, 0), 1)],
        )
        .unwrap();
        for x in 0..8 {
            assert_eq!(e.eval_mask(x), 1);
        }

        // s(x1; 1) over p=2, q=3, n=3: counts ones mod 3.
        let closure = symmetric_closure(&unary(3, p(2), 0), 1, p(3), &caps()).unwrap();
        let expanded = closure.expand(&caps()).unwrap();
        assert_eq!(expanded.term_count(), 3);
        assert_eq!(expanded.eval_mask(0b011), 2);
        assert_eq!(expanded.eval_mask(0b111), 0);
    }

    #[test]
    fn circuit_eval_cases() {
        let closure = symmetric_closure(&unary(3, p(2), 0), 1, p(3), &caps()).unwrap();
        let all: Vec<u64> = (0..3).collect();
        let circuit = CircuitSpec {
            inner: CircuitInner::Symmetric(closure.clone()),
            outer_accept: all,
        };
        for x in 0..8 {
            assert!(circuit.eval_mask(x, &caps()).unwrap());
        }
        let circuit = CircuitSpec {
            inner: CircuitInner::Symmetric(closure.clone()),
            outer_accept: vec![],
        };
        for x in 0..8 {
            assert!(!circuit.eval_mask(x, &caps()).unwrap());
        }
        let circuit = CircuitSpec {
            inner: CircuitInner::Symmetric(closure),
            outer_accept: vec![0],
        };
        assert!(circuit.eval_mask(0b111, &caps()).unwrap()); // 3 mod 3 = 0
        assert!(!circuit.eval_mask(0b011, &caps()).unwrap());
    }

    #[test]
    fn closure_sizes() {
        let clique = LabeledHypergraph::pseudo_clique(5, p(2), &[0, 1]).unwrap();
        let closure = symmetric_closure(&clique, 1, p(3), &caps()).unwrap();
        assert_eq!(closure.expand(&caps()).unwrap().term_count(), 1);
        assert_eq!(closure.expression_size(&caps()).unwrap(), 1);

        let closure = symmetric_closure(&unary(5, p(2), 2), 0, p(3), &caps()).unwrap();
        assert_eq!(closure.expression_size(&caps()).unwrap(), 5);

        let closure = symmetric_closure(&four_vertex_example(), 1, p(2), &caps()).unwrap();
        assert_eq!(closure.expression_size(&caps()).unwrap(), 4);
    }

    #[test]
    fn closure_expansion_is_symmetric() {
        let closure = symmetric_closure(&four_vertex_example(), 1, p(2), &caps()).unwrap();
        let expanded = closure.expand(&caps()).unwrap();
        assert!(expanded.is_symmetric());

        let single = Expression::from_terms(
            2,
            p(2),
            p(3),
            [(ElementaryAtom::new(unary(2, p(2), 0), 1), 1)],
        )
        .unwrap();
        assert!(!single.is_symmetric());

        let both = Expression::from_terms(
            2,
            p(2),
            p(3),
            [
                (ElementaryAtom::new(unary(2, p(2), 0), 1), 1),
                (ElementaryAtom::new(unary(2, p(2), 1), 1), 1),
            ],
        )
        .unwrap();
        assert!(both.is_symmetric());
    }

    #[test]
    fn decompose_round_trips() {
        // sum of b(x_i; 1) over i, n = 2
        let e = Expression::from_terms(
            2,
            p(2),
            p(3),
            [
                (ElementaryAtom::new(unary(2, p(2), 0), 1), 1),
                (ElementaryAtom::new(unary(2, p(2), 1), 1), 1),
            ],
        )
        .unwrap();
        let sym = e.decompose_symmetric(&caps()).unwrap();
        assert_eq!(sym.sterm_count(), 1);
        assert_eq!(sym.expand(&caps()).unwrap(), e);

        // 2 * s(G; 0) round-trip
        let closure =
            SymmetricExpression::from_sterms(4, p(3), p(3), [(four_vertex_example(), 0, 2)], &caps())
                .unwrap();
        let expanded = closure.expand(&caps()).unwrap();
        let back = expanded.decompose_symmetric(&caps()).unwrap();
        assert_eq!(back, closure);
        assert_eq!(back.expand(&caps()).unwrap(), expanded);

        let not_symmetric = Expression::from_terms(
            2,
            p(2),
            p(3),
            [(ElementaryAtom::new(unary(2, p(2), 0), 1), 1)],
        )
        .unwrap();
        assert!(matches!(
            not_symmetric.decompose_symmetric(&caps()),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn decompose_two_classes() {
        let g1 = unary(4, p(2), 0);
        let g2 = LabeledHypergraph::from_edges(4, p(2), 2, [(0b0011, 1)]).unwrap();
        let sym = SymmetricExpression::from_sterms(
            4,
            p(2),
            p(3),
            [(g1, 1, 1), (g2, 0, 2)],
            &caps(),
        )
        .unwrap();
        let expanded = sym.expand(&caps()).unwrap();
        let back = expanded.decompose_symmetric(&caps()).unwrap();
        assert_eq!(back.sterm_count(), 2);
        assert_eq!(back, sym);
    }

    #[test]
    fn random_symmetric_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..=6usize {
            for _ in 0..10 {
                let mut sym = SymmetricExpression::empty(n, p(2), p(3));
                for _ in 0..rng.gen_range(1..4) {
                    let mut g = LabeledHypergraph::empty(n, p(2), 2).unwrap();
                    for size in 1..=2usize {
                        for mask in k_subsets(n, size) {
                            if rng.gen_bool(0.25) {
                                g.set_label(mask, 1).unwrap();
                            }
                        }
                    }
                    sym.add_sterm(g, rng.gen_range(0..2), rng.gen_range(1..3), &caps())
                        .unwrap();
                }
                let expanded = sym.expand(&caps()).unwrap();
                let back = expanded.decompose_symmetric(&caps()).unwrap();
                assert_eq!(back.expand(&caps()).unwrap(), expanded);
            }
        }
    }

    #[test]
    fn transpositions_fix_closure_expansions() {
        let closure = symmetric_closure(&four_vertex_example(), 2, p(2), &caps()).unwrap();
        let expanded = closure.expand(&caps()).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                let tau = Perm::transposition(4, u, v);
                assert_eq!(expanded.apply_perm(&tau), expanded);
            }
        }
    }

    #[test]
    fn profile_count_of_ones() {
        let closure = symmetric_closure(&unary(3, p(2), 0), 1, p(3), &caps()).unwrap();
        let profile = hamming_profile(&closure, &caps()).unwrap();
        assert_eq!(profile.values, vec![0, 1, 2, 0]);
        assert_eq!(profile.min_period, 3);
    }

    #[test]
    fn profile_matches_all_inputs_of_same_weight() {
        let closure = symmetric_closure(&four_vertex_example(), 1, p(2), &caps()).unwrap();
        let expanded = closure.expand(&caps()).unwrap();
        let profile = hamming_profile(&closure, &caps()).unwrap();
        for x in 0..16u32 {
            assert_eq!(expanded.eval_mask(x), profile.values[x.count_ones() as usize]);
        }
    }

    #[test]
    fn profile_smallest_period_four() {
        // Sum over i<j of x_i x_j over F_2, n = 8: minimal period exactly 4.
        let clique = LabeledHypergraph::pseudo_clique(8, p(2), &[0, 1]).unwrap();
        let closure = symmetric_closure(&clique, 1, p(3), &caps()).unwrap();
        let profile = hamming_profile(&closure, &caps()).unwrap();
        assert_eq!(profile.values, vec![0, 0, 1, 1, 0, 0, 1, 1, 0]);
        assert_eq!(profile.min_period, 4);
    }

    #[test]
    fn and_profile_has_no_period() {
        for n in 3..=10usize {
            let graph =
                LabeledHypergraph::from_edges(n, p(2), n, [(((1u64 << n) - 1) as u32, 1)]).unwrap();
            let inner = Expression::from_terms(
                n,
                p(2),
                p(3),
                [(ElementaryAtom::new(graph, 1), 1)],
            )
            .unwrap();
            let circuit = CircuitSpec {
                inner: CircuitInner::Plain(inner),
                outer_accept: vec![1],
            };
            let profile = hamming_profile_circuit(&circuit, &caps()).unwrap();
            let mut expected = vec![0u64; n + 1];
            expected[n] = 1;
            assert_eq!(profile.values, expected);
            assert_eq!(profile.min_period, n + 1);
        }
    }

    #[test]
    fn expansion_size_times_aut_is_factorial() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..15 {
            let n = 5;
            let mut g = LabeledHypergraph::empty(n, p(3), 2).unwrap();
            for size in 1..=2usize {
                for mask in k_subsets(n, size) {
                    if rng.gen_bool(0.3) {
                        g.set_label(mask, rng.gen_range(0..3)).unwrap();
                    }
                }
            }
            let closure = symmetric_closure(&g, 0, p(2), &caps()).unwrap();
            let size = closure.expression_size(&caps()).unwrap();
            assert_eq!(size * g.aut_order().unwrap(), crate::hypergraph::factorial(n));
        }
    }

    #[test]
    fn equivalence_oracle() {
        let g = unary(3, p(2), 0);
        let atom = ElementaryAtom::new(g, 1);
        let e1 = Expression::from_terms(3, p(2), p(2), [(atom.clone(), 1)]).unwrap();
        // adding the same atom twice over F_2 cancels
        let e2 = Expression::from_terms(
            3,
            p(2),
            p(2),
            [(atom.clone(), 1), (atom.clone(), 1), (atom, 1)],
        )
        .unwrap();
        assert!(equivalent(&e1, &e2, &caps()).unwrap());
        assert!(equivalent(&e1, &e1, &caps()).unwrap());
        let zero = Expression::empty(3, p(2), p(2));
        assert!(!equivalent(&e1, &zero, &caps()).unwrap());
    }
}
