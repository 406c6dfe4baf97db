//! Two-terminal series-parallel networks and the spanning-tree constructions
//! built from continued fractions.
//!
//! A term carries the pair (T, F): spanning trees of the network, and
//! spanning 2-forests separating the two terminals. For the realized graph
//! with a marked edge e joining the terminals, tau(G - e) = T and
//! tau(G / e) = F. The Ser/Par recursion computes both exactly, and the
//! syntactic Ser<->Par involution is planar duality on this graph class, so
//! no embedding is ever computed.

use crate::cfrac::{cf_expand, ntd_search, quotient_sum};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};
use crate::rng::SplitMix64;
use crate::{Int, Rat};
use num::integer::gcd;
use num::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpNode {
    Leaf,
    Ser(Box<SpTerm>, Box<SpTerm>),
    Par(Box<SpTerm>, Box<SpTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTerm {
    node: SpNode,
    trees: Int,
    forests: Int,
    leaves: usize,
}

impl SpTerm {
    pub fn leaf() -> Self {
        SpTerm {
            node: SpNode::Leaf,
            trees: Int::one(),
            forests: Int::one(),
            leaves: 1,
        }
    }

    pub fn ser(a: SpTerm, b: SpTerm) -> Self {
        let trees = &a.trees * &b.trees;
        let forests = &a.forests * &b.trees + &a.trees * &b.forests;
        let leaves = a.leaves + b.leaves;
        SpTerm {
            node: SpNode::Ser(Box::new(a), Box::new(b)),
            trees,
            forests,
            leaves,
        }
    }

    pub fn par(a: SpTerm, b: SpTerm) -> Self {
        let trees = &a.trees * &b.forests + &a.forests * &b.trees;
        let forests = &a.forests * &b.forests;
        let leaves = a.leaves + b.leaves;
        SpTerm {
            node: SpNode::Par(Box::new(a), Box::new(b)),
            trees,
            forests,
            leaves,
        }
    }

    pub fn trees(&self) -> &Int {
        &self.trees
    }

    pub fn forests(&self) -> &Int {
        &self.forests
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    /// tau(G - e) / tau(G / e) of the realized marked graph.
    pub fn ratio(&self) -> Rat {
        Rat::new(self.trees.clone(), self.forests.clone())
    }
}

/// Ser <-> Par everywhere; swaps (T, F).
pub fn dualize(t: &SpTerm) -> SpTerm {
    match &t.node {
        SpNode::Leaf => SpTerm::leaf(),
        SpNode::Ser(a, b) => SpTerm::par(dualize(a), dualize(b)),
        SpNode::Par(a, b) => SpTerm::ser(dualize(a), dualize(b)),
    }
}

/// Add an edge parallel to the marked edge: ratio goes from T/F to (T+F)/F.
pub fn par_extend(t: SpTerm) -> SpTerm {
    SpTerm::par(SpTerm::leaf(), t)
}

/// A bundle of k parallel leaves, balanced so the tree depth stays
/// logarithmic for large k. (T, F) = (k, 1).
fn bundle(k: u64) -> SpTerm {
    debug_assert!(k >= 1);
    if k == 1 {
        SpTerm::leaf()
    } else {
        SpTerm::par(bundle(k / 2), bundle(k - k / 2))
    }
}

/// k parallel extensions at once; same term semantics and same realized
/// multigraph as k nested `par_extend` steps.
fn par_extend_many(t: SpTerm, k: u64) -> SpTerm {
    if k == 0 {
        t
    } else {
        SpTerm::par(bundle(k), t)
    }
}

/// Realize the continued fraction [a_0; a_1, .., a_s] as a term with
/// T/F = its value in lowest terms and exactly sum(a_i) leaves. The base
/// case is the bundle (the dualized cycle); the step dualizes the tail and
/// extends in parallel a_0 times.
pub fn from_cf(quotients: &[u64]) -> Result<SpTerm> {
    if quotients.is_empty() {
        return Err(Error::BadParameters("empty quotient list".into()));
    }
    if let Some(&bad) = quotients.iter().find(|&&q| q < 1) {
        return Err(Error::BadQuotient(bad));
    }
    let mut term = bundle(*quotients.last().unwrap());
    for &q in quotients[..quotients.len() - 1].iter().rev() {
        term = par_extend_many(dualize(&term), q);
    }
    Ok(term)
}

/// Parallel join: ratios add, (T, F) = (T1 F2 + F1 T2, F1 F2). The two
/// marked edges of the operands merge into the one marked edge of the
/// result, so realized edge counts add minus one.
pub fn sum_terms(t1: SpTerm, t2: SpTerm) -> SpTerm {
    SpTerm::par(t1, t2)
}

/// Build the multigraph of a term between terminals 0 and 1; if requested,
/// append the marked edge joining the terminals and record its id.
pub fn realize(t: &SpTerm, with_marked: bool) -> Multigraph {
    fn count_inner(t: &SpTerm) -> usize {
        match &t.node {
            SpNode::Leaf => 0,
            SpNode::Ser(a, b) => 1 + count_inner(a) + count_inner(b),
            SpNode::Par(a, b) => count_inner(a) + count_inner(b),
        }
    }
    let mut g = Multigraph::new(2 + count_inner(t));
    let mut fresh = 2;
    emit(t, 0, 1, &mut g, &mut fresh);
    if with_marked {
        let id = g.add_edge(0, 1);
        g.marked = Some(id);
    }
    g
}

fn emit(t: &SpTerm, u: usize, w: usize, g: &mut Multigraph, fresh: &mut usize) {
    match &t.node {
        SpNode::Leaf => {
            g.add_edge(u, w);
        }
        SpNode::Ser(a, b) => {
            let mid = *fresh;
            *fresh += 1;
            emit(a, u, mid, g, fresh);
            emit(b, mid, w, g, fresh);
        }
        SpNode::Par(a, b) => {
            emit(a, u, w, g, fresh);
            emit(b, u, w, g, fresh);
        }
    }
}

/// Smallest-quotient-sum denominator for n: exhaustive scan of all coprime
/// d < n when n is small, fixed-seed sampling otherwise. Returns (d, s(n/d)).
pub fn best_denominator(n: u64, budget: u64) -> (u64, u64) {
    debug_assert!(n >= 2);
    let score = |d: u64| quotient_sum(n, d).expect("d >= 1");
    let mut best_d = 1;
    let mut best = score(1); // the bundle fallback: s(n/1) = n
    if n - 1 <= budget {
        for d in 2..n {
            if gcd(n, d) != 1 {
                continue;
            }
            let s = score(d);
            if s < best {
                best = s;
                best_d = d;
            }
        }
    } else {
        let mut rng = SplitMix64::new(0x7472_6565 ^ n);
        let mut tried = 0;
        while tried < budget {
            let d = rng.range(1, n - 1);
            tried += 1;
            if gcd(n, d) != 1 {
                continue;
            }
            let s = score(d);
            if s < best || (s == best && d < best_d) {
                best = s;
                best_d = d;
            }
        }
    }
    (best_d, best)
}

/// A planar multigraph with exactly n spanning trees: realize the continued
/// fraction of n/d for a low-quotient-sum d coprime to n, without the marked
/// edge. Edge count is s(n/d).
pub fn exact_tree_graph(n: u64) -> Multigraph {
    exact_tree_graph_with_budget(n, 100_000)
}

pub fn exact_tree_graph_with_budget(n: u64, budget: u64) -> Multigraph {
    assert!(n >= 1);
    if n == 1 {
        return Multigraph::new(1);
    }
    let (d, _) = best_denominator(n, budget);
    let term = from_cf(cf_expand(n, d).expect("n, d >= 1").quotients()).expect("quotients >= 1");
    // gcd(n, d) = 1, so the term's tree count is exactly n.
    debug_assert_eq!(term.trees(), &Int::from(n));
    realize(&term, false)
}

/// Cross-check route: one graph per prime power, wedged at a vertex.
/// tau multiplies over the pieces.
pub fn exact_tree_graph_factored(n: u64) -> Multigraph {
    assert!(n >= 1);
    let mut g = Multigraph::new(1);
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        while rest % p == 0 {
            rest /= p;
            g = g.wedge(&exact_tree_graph(p), 0, 0);
        }
        p += 1;
    }
    if rest > 1 {
        g = g.wedge(&exact_tree_graph(rest), 0, 0);
    }
    g
}

/// A planar multigraph and a marked edge with spanning tree ratio exactly
/// A/B. The input is reduced internally; construction splits by regime
/// (integer ratios as bundles, [1,2] via the two-fraction sum, larger ratios
/// by parallel extension of the dual, A < B by dualizing B/A).
pub fn ratio_graph(a: u64, b: u64, budget: Option<u64>) -> Result<(Multigraph, EdgeId)> {
    if a == 0 || b == 0 {
        return Err(Error::BadParameters("ratio must be positive".into()));
    }
    let g = gcd(a, b);
    let (a, b) = (a / g, b / g);
    let budget = budget.unwrap_or(100_000);
    let term = if a >= b {
        ratio_term(a, b, budget)?
    } else {
        dualize(&ratio_term(b, a, budget)?)
    };
    let graph = realize(&term, true);
    let marked = graph.marked.expect("realize added the marked edge");
    let got = graph.tree_ratio(marked)?;
    assert_eq!(
        got,
        Rat::new(Int::from(a), Int::from(b)),
        "constructed ratio disagrees with the matrix-tree oracle"
    );
    Ok((graph, marked))
}

/// Term with ratio A/B for coprime A >= B >= 1.
fn ratio_term(a: u64, b: u64, budget: u64) -> Result<SpTerm> {
    if b == 1 {
        // pure bundle: ratio a over the marked edge
        return Ok(bundle(a));
    }
    // A' in [B+1, 2B-1]; ratio A/B = (floor(A/B) - 1) + A'/B
    let extensions = a / b - 1;
    let a_prime = b + a - (a / b) * b;
    debug_assert!(b < a_prime && a_prime < 2 * b);
    let m = ntd_search(a_prime, b, budget)?;
    // 1/(A'/m) + 1/(A'/(B-m)) = B/A'; dualize to A'/B
    let left = dualize(&from_cf(cf_expand(a_prime, m)?.quotients())?);
    let right = dualize(&from_cf(cf_expand(a_prime, b - m)?.quotients())?);
    let inner = sum_terms(left, right);
    debug_assert_eq!(
        inner.ratio(),
        Rat::new(Int::from(b), Int::from(a_prime))
    );
    Ok(par_extend_many(dualize(&inner), extensions))
}
