//! Sparse multivariate polynomials over a prime field F_p.
//!
//! Exponent vectors map to nonzero coefficients reduced into `[1, p)`; a
//! zero coefficient is never stored, so structural equality is polynomial
//! equality. Operations panic when mixing polynomials over different primes
//! or variable counts; values of one chart share both.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Monomial order used for leading terms, division, and Gröbner bases.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse-lexicographic with the fixed variable order.
    GrevLex,
    /// Block order eliminating the first `k` variables: the first block is
    /// compared by grevlex, ties fall through to grevlex on the rest.
    ElimFirst(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::ElimFirst(k) => {
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // last coordinate that differs: smaller exponent wins
            return if a[i] < b[i] {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

/// A polynomial over F_p in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyFp {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl PolyFp {
    pub fn zero(p: u64, nvars: usize) -> PolyFp {
        PolyFp {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, nvars: usize, c: i64) -> PolyFp {
        let mut f = PolyFp::zero(p, nvars);
        f.add_term(vec![0; nvars], c.rem_euclid(p as i64) as u64);
        f
    }

    pub fn one(p: u64, nvars: usize) -> PolyFp {
        PolyFp::constant(p, nvars, 1)
    }

    /// The variable `x_i` (0-based).
    pub fn var(p: u64, nvars: usize, i: usize) -> PolyFp {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        PolyFp::monomial(p, nvars, exps, 1)
    }

    pub fn monomial(p: u64, nvars: usize, exps: Vec<u32>, c: i64) -> PolyFp {
        assert_eq!(exps.len(), nvars);
        let mut f = PolyFp::zero(p, nvars);
        f.add_term(exps, c.rem_euclid(p as i64) as u64);
        f
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<u64> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let (e, &c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then_some(c)
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, u64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: u64) {
        use std::collections::btree_map::Entry;
        let c = c % self.p;
        if c == 0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut e) => {
                let v = (*e.get() + c) % self.p;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn compatible(&self, other: &PolyFp) {
        assert_eq!(self.p, other.p, "mixed primes");
        assert_eq!(self.nvars, other.nvars, "mixed variable counts");
    }

    pub fn add(&self, other: &PolyFp) -> PolyFp {
        self.compatible(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> PolyFp {
        let mut out = PolyFp::zero(self.p, self.nvars);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), self.p - c);
        }
        out
    }

    pub fn sub(&self, other: &PolyFp) -> PolyFp {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> PolyFp {
        let c = c.rem_euclid(self.p as i64) as u64;
        let mut out = PolyFp::zero(self.p, self.nvars);
        for (e, k) in self.terms() {
            let v = k * c % self.p;
            if v != 0 {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    pub fn mul(&self, other: &PolyFp) -> PolyFp {
        self.compatible(other);
        let mut out = PolyFp::zero(self.p, self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb % self.p);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> PolyFp {
        let mut out = PolyFp::one(self.p, self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        out
    }

    pub fn eval(&self, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.nvars);
        let mut acc = 0u64;
        for (e, c) in self.terms() {
            let mut t = c;
            for (i, &exp) in e.iter().enumerate() {
                t = t * pow_mod(point[i] % self.p, exp, self.p) % self.p;
            }
            acc = (acc + t) % self.p;
        }
        acc
    }

    /// Substitutes `value` for variable `i`, keeping the variable count.
    pub fn substitute(&self, i: usize, value: &PolyFp) -> PolyFp {
        self.compatible(value);
        let mut out = PolyFp::zero(self.p, self.nvars);
        for (e, c) in self.terms() {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            let term = PolyFp::monomial(self.p, self.nvars, rest, c as i64).mul(&value.pow(k));
            out = out.add(&term);
        }
        out
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] != 0)
    }

    /// Removes coordinate `i` from the exponent vectors; the variable must
    /// not occur.
    pub fn project_out(&self, i: usize) -> PolyFp {
        assert!(!self.uses_var(i), "variable still occurs");
        let mut out = PolyFp::zero(self.p, self.nvars - 1);
        for (e, c) in self.terms() {
            let mut exps = e.clone();
            exps.remove(i);
            out.terms.insert(exps, c);
        }
        out
    }

    /// Leading term under `order`.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Vec<u32>, u64)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(e, &c)| (e, c))
    }

    /// Divides by `divisor`, returning `(quotient, remainder)` such that
    /// `self = quotient·divisor + remainder` and no remainder term is
    /// divisible by the leading monomial of the divisor.
    pub fn div_rem(&self, divisor: &PolyFp, order: MonomialOrder) -> (PolyFp, PolyFp) {
        self.compatible(divisor);
        let (dm, dc) = divisor.leading(order).expect("division by zero");
        let dm = dm.clone();
        let dc_inv = inv_mod(dc, self.p);
        let mut q = PolyFp::zero(self.p, self.nvars);
        let mut r = PolyFp::zero(self.p, self.nvars);
        let mut f = self.clone();
        while let Some((fm, fc)) = f.leading(order) {
            if let Some(quot) = monomial_div(fm, &dm) {
                let c = fc * dc_inv % self.p;
                let t = PolyFp::monomial(self.p, self.nvars, quot, c as i64);
                q = q.add(&t);
                f = f.sub(&t.mul(divisor));
            } else {
                let t = PolyFp::monomial(self.p, self.nvars, fm.clone(), fc as i64);
                r = r.add(&t);
                f = f.sub(&t);
            }
        }
        (q, r)
    }

    /// Quotient when the division is exact, `None` otherwise.
    pub fn exact_div(&self, divisor: &PolyFp, order: MonomialOrder) -> Option<PolyFp> {
        let (q, r) = self.div_rem(divisor, order);
        r.is_zero().then_some(q)
    }

    /// Largest `k` with `factor^k` dividing `self`; `factor` must be
    /// nonconstant and `self` nonzero.
    pub fn multiplicity_of(&self, factor: &PolyFp, order: MonomialOrder) -> u32 {
        assert!(!self.is_zero() && factor.as_constant().is_none());
        let mut k = 0;
        let mut f = self.clone();
        while let Some(q) = f.exact_div(factor, order) {
            k += 1;
            f = q;
        }
        k
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self, order: MonomialOrder) -> PolyFp {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(inv_mod(c, self.p) as i64),
        }
    }

    /// Renders with the given variable names, e.g. `x21^2*x32 + 2`.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut monomials: Vec<(&Vec<u32>, u64)> = self.terms().collect();
        monomials.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
        let mut out = String::new();
        for (k, (e, c)) in monomials.into_iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], exp)),
                }
            }
            if factors.is_empty() {
                let _ = write!(out, "{c}");
            } else if c == 1 {
                out.push_str(&factors.join("*"));
            } else {
                let _ = write!(out, "{}*{}", c, factors.join("*"));
            }
        }
        out
    }
}

/// Componentwise monomial quotient, when it stays nonnegative.
pub fn monomial_div(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_sub(y))
        .collect()
}

pub fn pow_mod(mut b: u64, mut e: u32, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Inverse in F_p by Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero");
    pow_mod(a, (p - 2) as u32, p)
}
