//! Interval calculus for Richardson varieties.
//!
//! A pair `v ≤ w` stands for the intersection of the Schubert variety of `w`
//! with the opposite Schubert variety of `v`; it is nonempty exactly when
//! `v ≤ w` and has dimension `l(w) - l(v)`. Set-theoretic statements are
//! grounded in the cell model: each point of the flag variety lies in a
//! unique pair of (opposite-)Schubert cells, so a closed union of Richardson
//! varieties is faithfully represented by its set of cell pairs
//! `(a, b)` with `a ≤ b`. The cell model is the ground truth the fast
//! interval arithmetic is checked against; its justification (cells
//! partition, closures are interval-described) is an input fact from the
//! geometry and is not re-derived here.
//!
//! All values here are immutable and operations are pure functions over a
//! shared [`WeylGroup`], so exhaustive sweeps may partition the pair space
//! across threads freely.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::bitmat::{and_rows, iter_bits};
use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylGroup};

/// A Richardson interval `[v, w]` with `v ≤ w`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    v: WeylElement,
    w: WeylElement,
}

impl Interval {
    /// Builds `[v, w]`, rejecting pairs with `v ≰ w` (the empty variety).
    pub fn new(g: &WeylGroup, v: WeylElement, w: WeylElement) -> Result<Interval> {
        if !g.bruhat_leq(v, w) {
            return Err(Error::EmptyInterval {
                v: g.word_string(v),
                w: g.word_string(w),
            });
        }
        Ok(Interval { v, w })
    }

    /// The full flag variety `[e, w0]`.
    pub fn full(g: &WeylGroup) -> Interval {
        Interval {
            v: g.identity(),
            w: g.longest(),
        }
    }

    pub fn v(&self) -> WeylElement {
        self.v
    }

    pub fn w(&self) -> WeylElement {
        self.w
    }

    pub fn dim(&self, g: &WeylGroup) -> usize {
        g.length(self.w) - g.length(self.v)
    }

    pub fn is_point(&self) -> bool {
        self.v == self.w
    }

    /// Containment law: `[v', w'] ⊆ [v, w]` iff `v ≤ v' ≤ w' ≤ w`.
    pub fn contains(&self, g: &WeylGroup, inner: &Interval) -> bool {
        g.bruhat_leq(self.v, inner.v) && g.bruhat_leq(inner.w, self.w)
    }

    /// The set of cell pairs `{(a, b) : v ≤ a ≤ b ≤ w}`.
    pub fn cellset(&self, g: &WeylGroup) -> CellSet {
        let mut pairs = BTreeSet::new();
        for a in g.between(self.v, self.w) {
            for b in g.between(a, self.w) {
                pairs.insert((a, b));
            }
        }
        CellSet { pairs }
    }

    /// The Richardson divisors: `[a, w]` for covers `a` of `v` below `w`,
    /// and `[v, b]` for cocovers `b` of `w` above `v`.
    ///
    /// A point interval has no divisors and yields the empty set.
    pub fn divisors(&self, g: &WeylGroup) -> Vec<Interval> {
        let mut out = Vec::new();
        for &a in g.covers(self.v) {
            if g.bruhat_leq(a, self.w) {
                out.push(Interval { v: a, w: self.w });
            }
        }
        for &b in g.cocovers(self.w) {
            if g.bruhat_leq(self.v, b) {
                out.push(Interval { v: self.v, w: b });
            }
        }
        out.sort_unstable();
        out
    }

    /// The boundary: everything in the interval except its open cell, i.e.
    /// the union of all divisors.
    pub fn boundary(&self, g: &WeylGroup) -> UnionVariety {
        UnionVariety::from_components(g, self.divisors(g))
    }

    /// Order-reversal `[v, w] -> [w0·w, w0·v]`; exchanges the two divisor
    /// families.
    pub fn translate_w0(&self, g: &WeylGroup) -> Interval {
        Interval {
            v: g.prod(g.longest(), self.w),
            w: g.prod(g.longest(), self.v),
        }
    }

    /// Rendering like `X[v=121, w=12321]`.
    pub fn label(&self, g: &WeylGroup) -> String {
        format!("X[v={}, w={}]", g.word_string(self.v), g.word_string(self.w))
    }

    /// Parses `"v:w"` where both sides are reduced-word digit strings.
    pub fn parse(g: &WeylGroup, s: &str) -> Result<Interval> {
        let (vs, ws) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `v:w`, got `{s}`")))?;
        let v = g.element_from_word_str(vs)?;
        let w = g.element_from_word_str(ws)?;
        Interval::new(g, v, w)
    }
}

/// Every nonempty interval `[v, w]` of the group, ascending by `(v, w)` id.
pub fn all_intervals(g: &WeylGroup) -> Vec<Interval> {
    let mut out = Vec::new();
    for v in g.elements() {
        for w in g.elements() {
            if g.bruhat_leq(v, w) {
                out.push(Interval { v, w });
            }
        }
    }
    out.sort_unstable();
    out
}

/// An exact set of cell pairs `(a, b)`, `a ≤ b`, standing for a closed union
/// of Richardson varieties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSet {
    pairs: BTreeSet<(WeylElement, WeylElement)>,
}

impl CellSet {
    pub fn empty() -> CellSet {
        CellSet {
            pairs: BTreeSet::new(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (WeylElement, WeylElement)>) -> CellSet {
        CellSet {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: WeylElement, b: WeylElement) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (WeylElement, WeylElement)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        CellSet {
            pairs: self.pairs.union(&other.pairs).copied().collect(),
        }
    }

    pub fn intersect(&self, other: &CellSet) -> CellSet {
        CellSet {
            pairs: self.pairs.intersection(&other.pairs).copied().collect(),
        }
    }

    pub fn minus(&self, other: &CellSet) -> CellSet {
        CellSet {
            pairs: self.pairs.difference(&other.pairs).copied().collect(),
        }
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    /// The irreducible components: containment-maximal intervals `[a, b]`
    /// whose full cellset lies inside this set.
    ///
    /// Candidates are exactly the member pairs, since a maximal interval
    /// contributes its own `(a, b)` cell.
    pub fn components(&self, g: &WeylGroup) -> Vec<Interval> {
        let mut candidates = Vec::new();
        'cand: for &(a, b) in &self.pairs {
            for x in g.between(a, b) {
                for y in g.between(x, b) {
                    if !self.pairs.contains(&(x, y)) {
                        continue 'cand;
                    }
                }
            }
            candidates.push(Interval { v: a, w: b });
        }
        antichain_max(g, candidates)
    }
}

/// Keeps only the containment-maximal intervals, sorted.
fn antichain_max(g: &WeylGroup, mut list: Vec<Interval>) -> Vec<Interval> {
    list.sort_unstable();
    list.dedup();
    let keep: Vec<Interval> = list
        .iter()
        .filter(|x| {
            !list
                .iter()
                .any(|y| y != *x && y.contains(g, x))
        })
        .copied()
        .collect();
    keep
}

/// A finite union of Richardson varieties, stored as the antichain of its
/// containment-maximal components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionVariety {
    components: Vec<Interval>,
}

impl UnionVariety {
    pub fn empty() -> UnionVariety {
        UnionVariety {
            components: Vec::new(),
        }
    }

    /// Reduces an arbitrary list of intervals to its maximal antichain.
    pub fn from_components(g: &WeylGroup, list: Vec<Interval>) -> UnionVariety {
        UnionVariety {
            components: antichain_max(g, list),
        }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn cellset(&self, g: &WeylGroup) -> CellSet {
        let mut out = CellSet::empty();
        for c in &self.components {
            out = out.union(&c.cellset(g));
        }
        out
    }

    /// Irreducible components of the set-theoretic pairwise intersection.
    ///
    /// Distributes over components and uses the fast path per irreducible
    /// pair; agreement with the cell-model oracle is a tested invariant.
    pub fn intersect(&self, g: &WeylGroup, other: &UnionVariety) -> UnionVariety {
        let mut pieces = Vec::new();
        for x in &self.components {
            for y in &other.components {
                pieces.extend(intersect_irreducible(g, x, y));
            }
        }
        UnionVariety::from_components(g, pieces)
    }

    pub fn label(&self, g: &WeylGroup) -> String {
        if self.components.is_empty() {
            "(empty)".into()
        } else {
            self.components
                .iter()
                .map(|c| c.label(g))
                .collect::<Vec<_>>()
                .join(" ∪ ")
        }
    }
}

/// Components of `[v,w] ∩ [v',w']`: candidates `[a, b]` with `a` over the
/// minimal upper bounds of `{v, v'}` and `b` over the maximal lower bounds
/// of `{w, w'}`, filtered to `a ≤ b` and reduced to the maximal ones.
pub fn intersect_irreducible(g: &WeylGroup, x: &Interval, y: &Interval) -> Vec<Interval> {
    let mut out = Vec::new();
    for &a in &g.minimal_upper_bounds(x.v, y.v) {
        for &b in &g.maximal_lower_bounds(x.w, y.w) {
            if g.bruhat_leq(a, b) {
                out.push(Interval { v: a, w: b });
            }
        }
    }
    antichain_max(g, out)
}

/// Sweep engine over all intervals of one group: interval enumeration,
/// cellsets as bitsets (a cell pair `(a, b)` is an interval `[a, b]`, so
/// both live in the same index space), and the precomputed table of
/// pairwise intersection components.
///
/// Construction cost is quadratic in the interval count; this is the
/// engine for exhaustive sweeps at small rank, not a lazy query structure.
pub struct CellModel<'g> {
    g: &'g WeylGroup,
    intervals: Vec<Interval>,
    index: HashMap<Interval, u32>,
    words: usize,
    /// `cellbits[i]` = bitset of interval ids `[a, b]` with cells inside
    /// interval `i`.
    cellbits: Vec<Vec<u64>>,
    /// Fast-path intersection components per unordered pair as interval
    /// ids, row-major lower triangle.
    pairs: Vec<Vec<u32>>,
}

impl<'g> CellModel<'g> {
    pub fn new(g: &'g WeylGroup) -> CellModel<'g> {
        let intervals = all_intervals(g);
        let index: HashMap<Interval, u32> = intervals
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i as u32))
            .collect();
        let words = intervals.len().div_ceil(64);
        let cellbits = intervals
            .iter()
            .map(|x| {
                let mut row = vec![0u64; words];
                for a in g.between(x.v, x.w) {
                    for b in g.between(a, x.w) {
                        let id = index[&Interval { v: a, w: b }] as usize;
                        row[id / 64] |= 1 << (id % 64);
                    }
                }
                row
            })
            .collect();
        let pairs = (0..intervals.len())
            .into_par_iter()
            .flat_map_iter(|i| (0..=i).map(move |j| (i, j)))
            .map(|(i, j)| {
                intersect_irreducible(g, &intervals[i], &intervals[j])
                    .into_iter()
                    .map(|c| index[&c])
                    .collect()
            })
            .collect();
        CellModel {
            g,
            intervals,
            index,
            words,
            cellbits,
            pairs,
        }
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.g
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn id(&self, x: &Interval) -> u32 {
        self.index[x]
    }

    fn cellbits_of_union(&self, u: &UnionVariety) -> Vec<u64> {
        let mut row = vec![0u64; self.words];
        for c in u.components() {
            for (k, w) in self.cellbits[self.id(c) as usize].iter().enumerate() {
                row[k] |= w;
            }
        }
        row
    }

    /// Cell-model oracle for intersections: intersect cellsets as bitsets,
    /// then extract the maximal intervals whose cellset lies inside.
    pub fn oracle_intersect(&self, x: &UnionVariety, y: &UnionVariety) -> UnionVariety {
        let meet = and_rows(&self.cellbits_of_union(x), &self.cellbits_of_union(y));
        let mut candidates = Vec::new();
        for id in iter_bits(&meet) {
            let cb = &self.cellbits[id];
            if cb.iter().zip(&meet).all(|(a, b)| a & !b == 0) {
                candidates.push(self.intervals[id]);
            }
        }
        UnionVariety {
            components: antichain_max(self.g, candidates),
        }
    }

    /// Whether `inner`'s cellset is contained in `outer`'s, on the
    /// precomputed bitset rows.
    pub fn cellset_subset(&self, inner: &Interval, outer: &Interval) -> bool {
        let a = &self.cellbits[self.id(inner) as usize];
        let b = &self.cellbits[self.id(outer) as usize];
        a.iter().zip(b).all(|(x, y)| x & !y == 0)
    }

    /// Fast-path components of the intersection of two intervals, as ids
    /// into [`Self::intervals`], from the precomputed table.
    pub fn pair_component_ids(&self, i: u32, j: u32) -> &[u32] {
        let (hi, lo) = (i.max(j) as usize, i.min(j) as usize);
        &self.pairs[hi * (hi + 1) / 2 + lo]
    }

    /// Fast-path components of the intersection of two intervals.
    pub fn pair_components(&self, x: &Interval, y: &Interval) -> Vec<Interval> {
        self.pair_component_ids(self.id(x), self.id(y))
            .iter()
            .map(|&id| self.intervals[id as usize])
            .collect()
    }
}
