//! Binary matroids over F2.
//!
//! Contraction and deletion keep the ground set: contracted elements project
//! to zero and become loops, deleted elements are marked forbidden and are
//! excluded from every independent set (so they are loops of the resulting
//! matroid too). Indices therefore stay stable across `M`, `M - x`, `M / x`.
//!
//! Counting convention: `count_bases` counts bases of the matroid at hand
//! (its own rank). Formulas of the shape `B(M - x)` appearing in ratios and
//! recurrences mean "bases of M avoiding x" and are computed with
//! `count_bases_avoiding`, which is 0 when x is a coloop; the two notions
//! differ exactly there.

use crate::bits::SubsetMask;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::{brute_limit, Int};

#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatroid {
    dim: usize,
    cols: Vec<u64>,
    labels: Vec<String>,
    forbidden: SubsetMask,
}

impl BinaryMatroid {
    /// Build from columns; bit `j` of `cols[i]` is coordinate `j` of element `i`.
    pub fn new(dim: usize, cols: Vec<u64>) -> Result<Self> {
        if dim > 64 {
            return Err(Error::BadParameters(format!(
                "ambient dimension {dim} exceeds 64"
            )));
        }
        if cols.len() > 64 {
            return Err(Error::BadParameters(format!(
                "ground set of size {} exceeds 64",
                cols.len()
            )));
        }
        let mask = if dim == 64 { !0u64 } else { (1u64 << dim) - 1 };
        if let Some(bad) = cols.iter().position(|&c| c & !mask != 0) {
            return Err(Error::BadParameters(format!(
                "column {bad} has bits above dimension {dim}"
            )));
        }
        let labels = (0..cols.len()).map(|i| format!("e{i}")).collect();
        Ok(BinaryMatroid {
            dim,
            cols,
            labels,
            forbidden: SubsetMask::EMPTY,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::BadParameters(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ground_set(&self) -> SubsetMask {
        SubsetMask::full(self.n())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn forbidden(&self) -> SubsetMask {
        self.forbidden
    }

    pub fn raw_cols(&self) -> &[u64] {
        &self.cols
    }

    /// Column of element `i`, or 0 when the element is deleted.
    fn col(&self, i: usize) -> u64 {
        if self.forbidden.contains(i) {
            0
        } else {
            self.cols[i]
        }
    }

    /// Rank of a subset: the size of its largest independent subset.
    /// Deleted elements contribute nothing.
    pub fn rank(&self, set: SubsetMask) -> usize {
        let mut pivots: Vec<u64> = Vec::new();
        for i in set.minus(self.forbidden).iter() {
            let v = reduce(self.cols[i], &pivots);
            if v != 0 {
                insert_pivot(v, &mut pivots);
            }
        }
        pivots.len()
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground_set())
    }

    pub fn is_independent(&self, set: SubsetMask) -> bool {
        if !set.is_disjoint(self.forbidden) {
            return false;
        }
        self.rank(set) == set.card()
    }

    pub fn is_loop(&self, x: usize) -> bool {
        self.col(x) == 0
    }

    pub fn loops(&self) -> SubsetMask {
        SubsetMask::from_indices((0..self.n()).filter(|&i| self.is_loop(i)))
    }

    pub fn nonloops(&self) -> SubsetMask {
        self.loops().complement(self.n())
    }

    /// Par(x): non-loops parallel to `x`, including `x` itself. Over F2 two
    /// non-loops are parallel exactly when their columns coincide.
    pub fn parallel_class(&self, x: usize) -> Result<SubsetMask> {
        if self.is_loop(x) {
            return Err(Error::LoopArgument(x));
        }
        let cx = self.col(x);
        Ok(SubsetMask::from_indices(
            (0..self.n()).filter(|&y| self.col(y) == cx),
        ))
    }

    /// Parallel classes, each reported once, ordered by smallest member.
    pub fn parallel_classes(&self) -> Vec<SubsetMask> {
        let mut seen = SubsetMask::EMPTY;
        let mut out = Vec::new();
        for x in self.nonloops().iter() {
            if !seen.contains(x) {
                let class = self.parallel_class(x).expect("x is a non-loop");
                seen = seen.union(class);
                out.push(class);
            }
        }
        out
    }

    /// M/A: project every column to the quotient by span(A). Ground set is
    /// preserved; elements of A become loops.
    pub fn contract(&self, set: SubsetMask) -> Result<Self> {
        if !self.is_independent(set) {
            return Err(Error::DependentContraction);
        }
        let mut pivots: Vec<u64> = Vec::new();
        for i in set.iter() {
            let v = reduce(self.cols[i], &pivots);
            debug_assert!(v != 0);
            insert_pivot(v, &mut pivots);
        }
        let cols = self
            .cols
            .iter()
            .map(|&c| reduce(c, &pivots))
            .collect::<Vec<_>>();
        Ok(BinaryMatroid {
            dim: self.dim,
            cols,
            labels: self.labels.clone(),
            forbidden: self.forbidden,
        })
    }

    /// M - A: mark elements forbidden; indices stay stable.
    pub fn delete(&self, set: SubsetMask) -> Self {
        let mut m = self.clone();
        m.forbidden = m.forbidden.union(set);
        m
    }

    /// Block-diagonal stack of representations.
    pub fn direct_sum(&self, other: &BinaryMatroid) -> Result<Self> {
        let dim = self.dim + other.dim;
        if dim > 64 || self.n() + other.n() > 64 {
            return Err(Error::BadParameters(
                "direct sum exceeds the 64-element representation".into(),
            ));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|&c| c << self.dim));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut forbidden = self.forbidden;
        for i in other.forbidden.iter() {
            forbidden = forbidden.insert(self.n() + i);
        }
        Ok(BinaryMatroid {
            dim,
            cols,
            labels,
            forbidden,
        })
    }

    /// Graphical matroid of a connected multigraph via the vertex-edge
    /// incidence matrix over F2. Bases are the spanning trees.
    pub fn from_graph(g: &Multigraph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::BadParameters(
                "graphical matroid requires a connected graph".into(),
            ));
        }
        if g.vertex_count() > 64 {
            return Err(Error::BadParameters("too many vertices".into()));
        }
        let cols = g
            .edges()
            .iter()
            .map(|e| {
                if e.u == e.w {
                    0
                } else {
                    (1u64 << e.u) | (1u64 << e.w)
                }
            })
            .collect();
        BinaryMatroid::new(g.vertex_count(), cols)
    }

    /// Visit every basis (independent set of size `full_rank()`), masks in
    /// lexicographic order of their sorted index sequences.
    pub fn for_each_basis(&self, mut f: impl FnMut(SubsetMask)) -> Result<()> {
        let r = self.full_rank();
        self.for_each_independent_of_size(r, &mut f)
    }

    /// Visit every independent set of the given size.
    pub fn for_each_independent_of_size(
        &self,
        size: usize,
        f: &mut impl FnMut(SubsetMask),
    ) -> Result<()> {
        let n = self.n();
        let limit = brute_limit();
        if n > limit {
            return Err(Error::SizeLimit { n, limit });
        }
        let mut pivots: Vec<u64> = Vec::new();
        self.extend_independent(0, SubsetMask::EMPTY, size, &mut pivots, f);
        Ok(())
    }

    fn extend_independent(
        &self,
        from: usize,
        chosen: SubsetMask,
        target: usize,
        pivots: &mut Vec<u64>,
        f: &mut impl FnMut(SubsetMask),
    ) {
        let have = chosen.card();
        if have == target {
            f(chosen);
            return;
        }
        // Not enough elements left to reach the target size.
        if have + (self.n() - from) < target {
            return;
        }
        for i in from..self.n() {
            if have + (self.n() - i) < target {
                break;
            }
            let v = reduce(self.col(i), pivots);
            if v != 0 {
                insert_pivot(v, pivots);
                self.extend_independent(i + 1, chosen.insert(i), target, pivots, f);
                remove_pivot(v, pivots);
            }
        }
    }

    /// Visit every independent set, the empty set included.
    pub fn for_each_independent(&self, f: &mut impl FnMut(SubsetMask)) -> Result<()> {
        let n = self.n();
        let limit = brute_limit();
        if n > limit {
            return Err(Error::SizeLimit { n, limit });
        }
        fn rec(
            m: &BinaryMatroid,
            from: usize,
            chosen: SubsetMask,
            pivots: &mut Vec<u64>,
            f: &mut impl FnMut(SubsetMask),
        ) {
            f(chosen);
            for i in from..m.n() {
                let v = reduce(m.col(i), pivots);
                if v != 0 {
                    insert_pivot(v, pivots);
                    rec(m, i + 1, chosen.insert(i), pivots, f);
                    remove_pivot(v, pivots);
                }
            }
        }
        let mut pivots = Vec::new();
        rec(self, 0, SubsetMask::EMPTY, &mut pivots, f);
        Ok(())
    }

    pub fn bases(&self) -> Result<Vec<SubsetMask>> {
        let mut out = Vec::new();
        self.for_each_basis(|b| out.push(b))?;
        Ok(out)
    }

    pub fn count_bases(&self) -> Result<Int> {
        let mut count = 0u64;
        self.for_each_basis(|_| count += 1)?;
        Ok(Int::from(count))
    }

    /// Bases of `self` that avoid `avoid`. This is the `B(M - x)` of the
    /// deletion-contraction recurrence: zero when `avoid` contains a coloop.
    pub fn count_bases_avoiding(&self, avoid: SubsetMask) -> Result<Int> {
        let mut count = 0u64;
        self.for_each_basis(|b| {
            if b.is_disjoint(avoid) {
                count += 1;
            }
        })?;
        Ok(Int::from(count))
    }

    /// One basis, deterministically: ascending scan keeping what extends.
    pub fn greedy_basis(&self) -> SubsetMask {
        let mut pivots: Vec<u64> = Vec::new();
        let mut chosen = SubsetMask::EMPTY;
        for i in 0..self.n() {
            let v = reduce(self.col(i), &pivots);
            if v != 0 {
                insert_pivot(v, &mut pivots);
                chosen = chosen.insert(i);
            }
        }
        chosen
    }
}

impl std::fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BinaryMatroid(d={}, cols=[", self.dim)?;
        for (i, c) in self.cols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c:0w$b}", w = self.dim.max(1))?;
        }
        write!(f, "]")?;
        if !self.forbidden.is_empty() {
            write!(f, ", deleted={}", self.forbidden)?;
        }
        write!(f, ")")
    }
}

fn reduce(mut v: u64, pivots: &[u64]) -> u64 {
    for &p in pivots {
        let lead = 1u64 << (63 - p.leading_zeros());
        if v & lead != 0 {
            v ^= p;
        }
    }
    v
}

fn insert_pivot(v: u64, pivots: &mut Vec<u64>) {
    debug_assert!(v != 0);
    pivots.push(v);
}

fn remove_pivot(v: u64, pivots: &mut Vec<u64>) {
    let pos = pivots.iter().rposition(|&p| p == v).expect("pivot present");
    pivots.remove(pos);
}
