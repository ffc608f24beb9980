//! Textbook Buchberger over F_p and the chart ideals built on it.
//!
//! Deliberately unoptimized beyond the product criterion: inputs here are
//! tiny (three chart variables, a handful of generators). Reduced Gröbner
//! bases are canonical for a fixed monomial order, so basis equality decides
//! ideal equality.

use super::poly::{inv_mod, monomial_div, MonomialOrder, PolyFp};

/// Fully reduces `f` against `basis`.
pub fn normal_form(f: &PolyFp, basis: &[PolyFp], order: MonomialOrder) -> PolyFp {
    let p = f.prime();
    let mut rest = f.clone();
    let mut out = PolyFp::zero(p, f.nvars());
    'outer: while let Some((fm, fc)) = rest.leading(order) {
        for g in basis {
            let (gm, gc) = g.leading(order).expect("zero basis element");
            if let Some(quot) = monomial_div(fm, gm) {
                let c = fc * inv_mod(gc, p) % p;
                let t = PolyFp::monomial(p, f.nvars(), quot, c as i64);
                rest = rest.sub(&t.mul(g));
                continue 'outer;
            }
        }
        let (fm, fc) = (fm.clone(), fc);
        let t = PolyFp::monomial(p, f.nvars(), fm, fc as i64);
        out = out.add(&t);
        rest = rest.sub(&t);
    }
    out
}

fn s_poly(f: &PolyFp, g: &PolyFp, order: MonomialOrder) -> PolyFp {
    let p = f.prime();
    let (fm, fc) = f.leading(order).unwrap();
    let (gm, gc) = g.leading(order).unwrap();
    let lcm: Vec<u32> = fm.iter().zip(gm).map(|(&a, &b)| a.max(b)).collect();
    let tf = PolyFp::monomial(
        p,
        f.nvars(),
        monomial_div(&lcm, fm).unwrap(),
        inv_mod(fc, p) as i64,
    );
    let tg = PolyFp::monomial(
        p,
        f.nvars(),
        monomial_div(&lcm, gm).unwrap(),
        inv_mod(gc, p) as i64,
    );
    tf.mul(f).sub(&tg.mul(g))
}

fn coprime_leading(f: &PolyFp, g: &PolyFp, order: MonomialOrder) -> bool {
    let (fm, _) = f.leading(order).unwrap();
    let (gm, _) = g.leading(order).unwrap();
    fm.iter().zip(gm).all(|(&a, &b)| a == 0 || b == 0)
}

/// Buchberger with the product criterion, followed by interreduction to the
/// reduced (monic, autoreduced, sorted) basis.
pub fn buchberger(gens: &[PolyFp], order: MonomialOrder) -> Vec<PolyFp> {
    let mut basis: Vec<PolyFp> = gens.iter().filter(|f| !f.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        if coprime_leading(&basis[i], &basis[j], order) {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            pairs.extend((0..k).map(|i| (i, k)));
            basis.push(r);
        }
    }
    reduce_basis(basis, order)
}

fn reduce_basis(mut basis: Vec<PolyFp>, order: MonomialOrder) -> Vec<PolyFp> {
    // minimalize: after sorting by leading monomial, an element is redundant
    // when an earlier leading monomial divides its own
    basis.sort_by(|a, b| {
        order.cmp(
            a.leading(order).unwrap().0,
            b.leading(order).unwrap().0,
        )
    });
    let mut keep: Vec<PolyFp> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let fm = f.leading(order).unwrap().0;
        let redundant = basis[..i]
            .iter()
            .any(|g| monomial_div(fm, g.leading(order).unwrap().0).is_some());
        if !redundant {
            keep.push(f.clone());
        }
    }
    // tail-reduce each against the others; leading terms are untouched since
    // no kept leading monomial divides another
    let mut out: Vec<PolyFp> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<PolyFp> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        out.push(normal_form(&keep[i], &others, order).monic(order));
    }
    out.sort_by(|a, b| order.cmp(b.leading(order).unwrap().0, a.leading(order).unwrap().0));
    out
}

/// An ideal of the chart polynomial ring with its cached reduced Gröbner
/// basis; membership is decided by normal-form reduction to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartIdeal {
    p: u64,
    nvars: usize,
    gens: Vec<PolyFp>,
    gb: Vec<PolyFp>,
}

impl ChartIdeal {
    /// Grevlex with the fixed chart variable order.
    pub const ORDER: MonomialOrder = MonomialOrder::GrevLex;

    pub fn new(p: u64, nvars: usize, gens: Vec<PolyFp>) -> ChartIdeal {
        for g in &gens {
            assert_eq!(g.prime(), p);
            assert_eq!(g.nvars(), nvars);
        }
        let gb = buchberger(&gens, Self::ORDER);
        ChartIdeal { p, nvars, gens, gb }
    }

    pub fn zero_ideal(p: u64, nvars: usize) -> ChartIdeal {
        ChartIdeal::new(p, nvars, Vec::new())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[PolyFp] {
        &self.gens
    }

    /// The reduced Gröbner basis: canonical for the fixed order.
    pub fn groebner_basis(&self) -> &[PolyFp] {
        &self.gb
    }

    pub fn contains(&self, f: &PolyFp) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn normal_form(&self, f: &PolyFp) -> PolyFp {
        normal_form(f, &self.gb, Self::ORDER)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gb.len() == 1 && self.gb[0].as_constant() == Some(1)
    }

    /// Proper means not the unit ideal.
    pub fn is_proper(&self) -> bool {
        !self.is_unit_ideal()
    }

    /// Two ideals are equal iff their reduced bases coincide.
    pub fn same_ideal(&self, other: &ChartIdeal) -> bool {
        self.p == other.p && self.nvars == other.nvars && self.gb == other.gb
    }

    /// Ideal sum: union of generators.
    pub fn sum(&self, other: &ChartIdeal) -> ChartIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        ChartIdeal::new(self.p, self.nvars, gens)
    }

    /// Ideal intersection via the single-variable elimination trick:
    /// `I ∩ J = (t·I + (1−t)·J) ∩ k[x]` with `t` a fresh first variable
    /// eliminated by a block order.
    pub fn intersection(&self, other: &ChartIdeal) -> ChartIdeal {
        assert_eq!(self.p, other.p);
        assert_eq!(self.nvars, other.nvars);
        let p = self.p;
        let n = self.nvars;
        let lift = |f: &PolyFp| {
            let mut out = PolyFp::zero(p, n + 1);
            for (e, c) in f.terms() {
                let mut exps = vec![0u32];
                exps.extend_from_slice(e);
                out = out.add(&PolyFp::monomial(p, n + 1, exps, c as i64));
            }
            out
        };
        let t = PolyFp::var(p, n + 1, 0);
        let one_minus_t = PolyFp::one(p, n + 1).sub(&t);
        let mut gens: Vec<PolyFp> = self.gens.iter().map(|f| t.mul(&lift(f))).collect();
        gens.extend(other.gens.iter().map(|f| one_minus_t.mul(&lift(f))));
        let gb = buchberger(&gens, MonomialOrder::ElimFirst(1));
        let drop = gb
            .into_iter()
            .filter(|f| f.terms().all(|(e, _)| e[0] == 0))
            .map(|f| {
                let mut out = PolyFp::zero(p, n);
                for (e, c) in f.terms() {
                    out = out.add(&PolyFp::monomial(p, n, e[1..].to_vec(), c as i64));
                }
                out
            })
            .collect();
        ChartIdeal::new(p, n, drop)
    }

    /// All points of `F_p^nvars` where every generator vanishes.
    pub fn zero_points(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let total = (self.p as u128).pow(self.nvars as u32);
        let mut k = 0u128;
        while k < total {
            let mut point = Vec::with_capacity(self.nvars);
            let mut rest = k;
            for _ in 0..self.nvars {
                point.push((rest % self.p as u128) as u64);
                rest /= self.p as u128;
            }
            if self.gens.iter().all(|g| g.eval(&point) == 0) {
                out.push(point);
            }
            k += 1;
        }
        out
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero_ideal() {
            return "(0)".into();
        }
        format!(
            "({})",
            self.gb
                .iter()
                .map(|g| g.display(names))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(p: u64) -> (PolyFp, PolyFp, PolyFp) {
        (
            PolyFp::var(p, 3, 0),
            PolyFp::var(p, 3, 1),
            PolyFp::var(p, 3, 2),
        )
    }

    #[test]
    fn normal_form_reduces_members_to_zero() {
        let p = 5;
        let (x, y, _) = vars(p);
        let ideal = ChartIdeal::new(p, 3, vec![x.clone(), y.clone()]);
        let f = x.mul(&y).add(&x.pow(3)).add(&y.scale(4));
        assert!(ideal.contains(&f));
        assert!(!ideal.contains(&PolyFp::one(p, 3)));
        assert!(!ideal.contains(&x.add(&PolyFp::one(p, 3))));
    }

    #[test]
    fn groebner_detects_hidden_members() {
        // (xy - 1, y^2 - 1) contains x - y
        let p = 7;
        let (x, y, _) = vars(p);
        let one = PolyFp::one(p, 3);
        let ideal = ChartIdeal::new(
            p,
            3,
            vec![x.mul(&y).sub(&one), y.pow(2).sub(&one)],
        );
        assert!(ideal.contains(&x.sub(&y)));
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let p = 3;
        let (x, y, _) = vars(p);
        let a = ChartIdeal::new(p, 3, vec![x.clone(), y.clone()]);
        let b = ChartIdeal::new(p, 3, vec![y.add(&x), y.clone()]);
        assert!(a.same_ideal(&b));
        assert_eq!(a.groebner_basis(), b.groebner_basis());
    }

    #[test]
    fn unit_and_zero_ideals() {
        let p = 3;
        let (x, _, _) = vars(p);
        let unit = ChartIdeal::new(p, 3, vec![x.add(&PolyFp::one(p, 3)), x.clone()]);
        assert!(unit.is_unit_ideal());
        assert!(!unit.is_proper());
        let zero = ChartIdeal::zero_ideal(p, 3);
        assert!(zero.is_zero_ideal() && zero.is_proper());
        assert!(zero.contains(&PolyFp::zero(p, 3)));
        assert!(!zero.contains(&x));
    }

    #[test]
    fn sum_and_intersection() {
        let p = 3;
        let (x, y, z) = vars(p);
        let i = ChartIdeal::new(p, 3, vec![x.clone(), y.clone()]);
        let j = ChartIdeal::new(p, 3, vec![x.clone(), z.clone()]);
        let s = i.sum(&j);
        assert!(s.contains(&y) && s.contains(&z));
        let m = i.intersection(&j);
        // (x, y) ∩ (x, z) = (x, yz)
        assert!(m.contains(&x));
        assert!(m.contains(&y.mul(&z)));
        assert!(!m.contains(&y));
        assert!(!m.contains(&z));
        let expected = ChartIdeal::new(p, 3, vec![x.clone(), y.mul(&z)]);
        assert!(m.same_ideal(&expected));
    }

    #[test]
    fn zero_points_of_union_locus() {
        let p = 2;
        let (x, y, _) = vars(p);
        // V(x·y): 6 of the 8 points of F_2^3
        let ideal = ChartIdeal::new(p, 3, vec![x.mul(&y)]);
        assert_eq!(ideal.zero_points().len(), 6);
    }
}
