//! Finite Weyl groups generated from a Cartan type.
//!
//! Elements are canonicalized as exact integer matrices in the reflection
//! representation on the root lattice; ids are assigned in breadth-first
//! order from the identity, so the id order refines length. All tables
//! (multiplication steps, reduced words, reflections, covers, Bruhat
//! relation) are populated at generation time and immutable afterwards,
//! which makes a `WeylGroup` freely shareable across threads.

use std::collections::HashMap;

use crate::bitmat::{and_rows, iter_bits, BitMatrix};
use crate::cartan::CartanType;
use crate::error::{Error, Result};

/// Default cap on the group order accepted by [`WeylGroup::generate`].
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// An element of a generated [`WeylGroup`], identified by its table index.
///
/// Ids are stable within one generated group; id 0 is the identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement(pub(crate) u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A fully generated finite Weyl group.
pub struct WeylGroup {
    cartan: CartanType,
    rank: usize,
    /// Reflection-representation matrices, row-major rank×rank.
    mats: Vec<Vec<i32>>,
    length: Vec<u32>,
    /// `right_step[id * rank + i]` = id of `w · s_i`.
    right_step: Vec<u32>,
    /// Reduced word per element, 0-based letters, least descent last.
    words: Vec<Vec<u8>>,
    inverse: Vec<u32>,
    reflections: Vec<WeylElement>,
    covers_up: Vec<Vec<WeylElement>>,
    covers_down: Vec<Vec<WeylElement>>,
    /// Row `w` holds `{v : v ≤ w}`.
    leq_down: BitMatrix,
    /// Row `v` holds `{w : v ≤ w}`.
    leq_up: BitMatrix,
    w0: WeylElement,
}

fn mat_identity(n: usize) -> Vec<i32> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

impl WeylGroup {
    /// Generates the full group, with the default order cap of 10^6.
    pub fn generate(cartan: CartanType) -> Result<WeylGroup> {
        Self::generate_with_cap(cartan, DEFAULT_ORDER_CAP)
    }

    /// Generates the full group, refusing types whose classical order
    /// exceeds `cap`.
    pub fn generate_with_cap(cartan: CartanType, cap: usize) -> Result<WeylGroup> {
        let order = cartan.weyl_order();
        if order > cap as u128 {
            return Err(Error::OrderCapExceeded { cartan, order, cap });
        }
        let rank = cartan.rank();
        let c = cartan.cartan_matrix();

        // s_i acts on the simple-root basis by alpha_j -> alpha_j - c[i][j] alpha_i,
        // i.e. the identity matrix with c[i][j] subtracted across row i.
        let simples: Vec<Vec<i32>> = (0..rank)
            .map(|i| {
                let mut m = mat_identity(rank);
                for j in 0..rank {
                    m[i * rank + j] -= c[i][j] as i32;
                }
                m
            })
            .collect();

        // Breadth-first generation by right multiplication; depth = length.
        let mut mats = vec![mat_identity(rank)];
        let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
        index.insert(mats[0].clone(), 0);
        let mut length = vec![0u32];
        let mut right_step: Vec<u32> = Vec::new();

        let mut id = 0usize;
        while id < mats.len() {
            for s in &simples {
                let m = mat_mul(&mats[id], s, rank);
                let target = *index.entry(m.clone()).or_insert_with(|| {
                    mats.push(m);
                    length.push(length[id] + 1);
                    (mats.len() - 1) as u32
                });
                right_step.push(target);
            }
            id += 1;
        }
        let n = mats.len();

        // Reduced words by walking down the least descent.
        let step = |w: usize, i: usize| right_step[w * rank + i] as usize;
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); n];
        for w in 0..n {
            let mut cur = w;
            let mut rev = Vec::with_capacity(length[w] as usize);
            while cur != 0 {
                let i = (0..rank)
                    .find(|&i| length[step(cur, i)] < length[cur])
                    .expect("non-identity element has a descent");
                rev.push(i as u8);
                cur = step(cur, i);
            }
            rev.reverse();
            words[w] = rev;
        }

        let apply_word = |start: usize, word: &[u8]| -> usize {
            word.iter().fold(start, |acc, &i| step(acc, i as usize))
        };

        let mut inverse = vec![0u32; n];
        for w in 0..n {
            let mut inv = 0usize;
            for &i in words[w].iter().rev() {
                inv = step(inv, i as usize);
            }
            inverse[w] = inv as u32;
        }

        // Reflections: the conjugates of the simple reflections.
        let mut refl: Vec<u32> = Vec::new();
        {
            let mut seen = vec![false; n];
            for u in 0..n {
                for i in 0..rank {
                    let t = apply_word(step(u, i), &words[inverse[u] as usize]);
                    if !seen[t] {
                        seen[t] = true;
                        refl.push(t as u32);
                    }
                }
            }
            refl.sort_unstable();
        }

        // Covering pairs: v ⋖ v·t for a reflection t raising length by one.
        let mut covers_up: Vec<Vec<WeylElement>> = vec![Vec::new(); n];
        let mut covers_down: Vec<Vec<WeylElement>> = vec![Vec::new(); n];
        for v in 0..n {
            for &t in &refl {
                let x = apply_word(v, &words[t as usize]);
                if length[x] == length[v] + 1 {
                    covers_up[v].push(WeylElement(x as u32));
                    covers_down[x].push(WeylElement(v as u32));
                }
            }
        }
        for list in covers_up.iter_mut().chain(covers_down.iter_mut()) {
            list.sort_unstable();
        }

        // Bruhat order as the transitive closure of the covering relation.
        // BFS ids are sorted by length, so cocover rows are already complete.
        let mut leq_down = BitMatrix::new(n, n);
        for w in 0..n {
            leq_down.set(w, w);
            for u in covers_down[w].clone() {
                leq_down.or_row_into(u.index(), w);
            }
        }
        let leq_up = leq_down.transpose(n);

        let w0 = (0..n)
            .max_by_key(|&w| length[w])
            .map(|w| WeylElement(w as u32))
            .expect("nonempty group");

        Ok(WeylGroup {
            cartan,
            rank,
            mats,
            length,
            right_step,
            words,
            inverse,
            reflections: refl.into_iter().map(WeylElement).collect(),
            covers_up,
            covers_down,
            leq_down,
            leq_up,
            w0,
        })
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn longest(&self) -> WeylElement {
        self.w0
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn simple(&self, i: usize) -> Result<WeylElement> {
        if i == 0 || i > self.rank {
            return Err(Error::BadWordLetter {
                letter: i,
                rank: self.rank,
            });
        }
        Ok(WeylElement(self.right_step[i - 1]))
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.length[w.index()] as usize
    }

    fn check(&self, w: WeylElement) -> Result<()> {
        if w.index() >= self.order() {
            return Err(Error::ForeignElement {
                id: w.index(),
                order: self.order(),
            });
        }
        Ok(())
    }

    pub(crate) fn step(&self, w: WeylElement, i0: usize) -> WeylElement {
        WeylElement(self.right_step[w.index() * self.rank + i0])
    }

    pub(crate) fn prod(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        self.words[b.index()]
            .iter()
            .fold(a, |acc, &i| self.step(acc, i as usize))
    }

    /// Canonical id of the product `u · v`.
    pub fn multiply(&self, u: WeylElement, v: WeylElement) -> Result<WeylElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.prod(u, v))
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.index()])
    }

    /// The deterministic reduced word of `w`, 1-based letters.
    ///
    /// At each step the least simple-reflection index among the right
    /// descents is taken, so the word is reproducible across runs.
    pub fn reduced_word(&self, w: WeylElement) -> Vec<usize> {
        self.words[w.index()].iter().map(|&i| i as usize + 1).collect()
    }

    /// Renders the reduced word as digits, with `e` for the identity.
    pub fn word_string(&self, w: WeylElement) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            "e".into()
        } else {
            word.into_iter().map(|i| i.to_string()).collect()
        }
    }

    /// Multiplies out a word of 1-based letters; the word need not be
    /// reduced.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            if i == 0 || i > self.rank {
                return Err(Error::BadWordLetter {
                    letter: i,
                    rank: self.rank,
                });
            }
            w = self.step(w, i - 1);
        }
        Ok(w)
    }

    /// Parses a digit string such as `"121"`; `"e"` or `""` is the identity.
    pub fn element_from_word_str(&self, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(self.identity());
        }
        let word: Vec<usize> = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad word letter `{c}`")))
            })
            .collect::<Result<_>>()?;
        self.element_from_word(&word)
    }

    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.step(w, i - 1)) < self.length(w)
    }

    pub fn reflections(&self) -> &[WeylElement] {
        &self.reflections
    }

    /// Elements covering `w` in Bruhat order.
    pub fn covers(&self, w: WeylElement) -> &[WeylElement] {
        &self.covers_up[w.index()]
    }

    /// Elements covered by `w` in Bruhat order.
    pub fn cocovers(&self, w: WeylElement) -> &[WeylElement] {
        &self.covers_down[w.index()]
    }

    /// Bruhat order via the precomputed covering-closure table.
    pub fn bruhat_leq(&self, v: WeylElement, w: WeylElement) -> bool {
        self.leq_down.get(w.index(), v.index())
    }

    pub fn bruhat_lt(&self, v: WeylElement, w: WeylElement) -> bool {
        v != w && self.bruhat_leq(v, w)
    }

    /// Bruhat order by the subword criterion on the fixed reduced word of
    /// `w`; independent of the covering-closure route and used as its test
    /// oracle.
    ///
    /// Scanning the word left to right, the set of products of reduced
    /// subwords seen so far is maintained; a letter extends a product only
    /// when it raises length, which characterizes exactly the elements with
    /// a reduced expression embedded in the scanned prefix.
    pub fn subword_leq(&self, v: WeylElement, w: WeylElement) -> bool {
        self.subword_down_set(w).contains(&v)
    }

    /// `{v : v ≤ w}` computed by the subword criterion alone.
    pub fn subword_down_set(&self, w: WeylElement) -> Vec<WeylElement> {
        let n = self.order();
        let mut in_set = vec![false; n];
        in_set[0] = true;
        let mut members = vec![0usize];
        for &i in &self.words[w.index()] {
            let mut added = Vec::new();
            for &u in &members {
                let x = self.step(WeylElement(u as u32), i as usize).index();
                if !in_set[x] && self.length[x] > self.length[u] {
                    in_set[x] = true;
                    added.push(x);
                }
            }
            members.extend(added);
        }
        members.sort_unstable();
        members.into_iter().map(|u| WeylElement(u as u32)).collect()
    }

    /// Elements `x` with `v ≤ x ≤ w`, ascending by id.
    pub fn between(&self, v: WeylElement, w: WeylElement) -> Vec<WeylElement> {
        let row = and_rows(self.leq_up.row(v.index()), self.leq_down.row(w.index()));
        iter_bits(&row).map(|i| WeylElement(i as u32)).collect()
    }

    /// Minimal elements of `{x : a ≤ x and b ≤ x}`.
    ///
    /// Bruhat order is not a lattice, so this is a set in general.
    pub fn minimal_upper_bounds(&self, a: WeylElement, b: WeylElement) -> Vec<WeylElement> {
        let row = and_rows(self.leq_up.row(a.index()), self.leq_up.row(b.index()));
        let mut candidates: Vec<WeylElement> =
            iter_bits(&row).map(|i| WeylElement(i as u32)).collect();
        candidates.sort_by_key(|&x| self.length(x));
        let mut kept: Vec<WeylElement> = Vec::new();
        for x in candidates {
            if !kept.iter().any(|&k| self.bruhat_leq(k, x)) {
                kept.push(x);
            }
        }
        kept.sort_unstable();
        kept
    }

    /// Maximal elements of `{x : x ≤ a and x ≤ b}`.
    pub fn maximal_lower_bounds(&self, a: WeylElement, b: WeylElement) -> Vec<WeylElement> {
        let row = and_rows(self.leq_down.row(a.index()), self.leq_down.row(b.index()));
        let mut candidates: Vec<WeylElement> =
            iter_bits(&row).map(|i| WeylElement(i as u32)).collect();
        candidates.sort_by_key(|&x| std::cmp::Reverse(self.length(x)));
        let mut kept: Vec<WeylElement> = Vec::new();
        for x in candidates {
            if !kept.iter().any(|&k| self.bruhat_leq(x, k)) {
                kept.push(x);
            }
        }
        kept.sort_unstable();
        kept
    }

}
