//! The Frobenius trace map on a polynomial chart and the splitting checks
//! built from it.
//!
//! The trace projects onto the `x^(p-1,...,p-1)` component of the monomial
//! basis and divides exponents by `p`; coefficients are untouched because
//! they are F_p-rational. A polynomial `f` acts on functions by
//! `g ↦ trace(f·g)`, and `f` defines a splitting exactly when that map is a
//! left inverse of `p`-th powers, which by `F_*`-linearity reduces to
//! `trace(f) = 1`.

use super::grobner::ChartIdeal;
use super::poly::PolyFp;
use crate::error::{Error, Result};

/// `trace(Σ c_a x^a) = Σ_{a ≡ (p−1)·1 (mod p)} c_a x^((a−(p−1)·1)/p)`.
pub fn trace(f: &PolyFp) -> PolyFp {
    let p = f.prime();
    let pm1 = (p - 1) as u32;
    let mut out = PolyFp::zero(p, f.nvars());
    for (e, c) in f.terms() {
        if e.iter().all(|&x| x % p as u32 == pm1) {
            let shifted: Vec<u32> = e.iter().map(|&x| (x - pm1) / p as u32).collect();
            out = out.add(&PolyFp::monomial(p, f.nvars(), shifted, c as i64));
        }
    }
    out
}

/// Splitting criterion: `trace(f·g^p) = g` for all `g`, equivalently
/// `trace(f) = 1` by `F_*`-linearity.
pub fn is_splitting(f: &PolyFp) -> bool {
    trace(f).as_constant() == Some(1)
}

/// A chart polynomial verified to define a splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingSection(PolyFp);

impl SplittingSection {
    pub fn new(f: PolyFp) -> Result<SplittingSection> {
        if !is_splitting(&f) {
            return Err(Error::NotASplitting);
        }
        Ok(SplittingSection(f))
    }

    pub fn poly(&self) -> &PolyFp {
        &self.0
    }
}

/// Witness that a trace value escaped the ideal during a compatibility
/// check.
#[derive(Clone, Debug)]
pub struct CompatFailure {
    /// Index of the generator being multiplied.
    pub generator: usize,
    /// The exponent shift `b` applied.
    pub shift: Vec<u32>,
    /// The exact trace output that is not in the ideal.
    pub escaped: PolyFp,
}

/// Verdict of a compatibility check, with the first failure witness kept
/// for reporting.
#[derive(Clone, Debug)]
pub struct CompatVerdict {
    pub compatible: bool,
    pub failure: Option<CompatFailure>,
}

/// Decides `trace(f · F_* I) ⊆ I` for a splitting `f`.
///
/// It suffices to test `trace(f · x^b · g)` for each generator `g` and each
/// shift `b ∈ [0, p−1]^n`: every element of the ideal is a combination of
/// the `x^b·g` with `p`-th power coefficients, and the trace moves those
/// coefficients out unchanged.
pub fn compatibly_split(f: &PolyFp, ideal: &ChartIdeal) -> Result<CompatVerdict> {
    if !is_splitting(f) {
        return Err(Error::NotASplitting);
    }
    let p = f.prime();
    let n = f.nvars();
    for (gi, g) in ideal.generators().iter().enumerate() {
        let fg = f.mul(g);
        let mut shift = vec![0u32; n];
        loop {
            let shifted = fg.mul(&PolyFp::monomial(p, n, shift.clone(), 1));
            let tr = trace(&shifted);
            if !ideal.contains(&tr) {
                return Ok(CompatVerdict {
                    compatible: false,
                    failure: Some(CompatFailure {
                        generator: gi,
                        shift,
                        escaped: tr,
                    }),
                });
            }
            // odometer over [0, p-1]^n
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                shift[i] += 1;
                if shift[i] < p as u32 {
                    break;
                }
                shift[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    Ok(CompatVerdict {
        compatible: true,
        failure: None,
    })
}

/// Searches for `g` with `g^(p−1) = f`, by leading-term root extraction and
/// exact division.
///
/// Writing `g = m_1 + m_2 + ...` in decreasing monomial order, `m_1` is
/// forced by the leading term of `f` and each later term is forced by the
/// leading term of the residual `f − (m_1 + ... + m_k)^(p−1)` divided by
/// `(p−1)·m_1^(p−2)`. Monomial orders are well-orders, so the loop
/// terminates. The result is unique up to a scalar `μ` with `μ^(p−1) = 1`;
/// the representative with leading coefficient 1 is returned.
pub fn pth_minus_one_root(f: &PolyFp) -> Option<PolyFp> {
    let order = ChartIdeal::ORDER;
    let p = f.prime();
    let pm1 = (p - 1) as u32;
    if f.is_zero() {
        return Some(PolyFp::zero(p, f.nvars()));
    }
    if p == 2 {
        return Some(f.clone());
    }
    let (fm, fc) = f.leading(order).unwrap();
    // nonzero (p-1)st powers in F_p are exactly 1
    if fc != 1 || fm.iter().any(|&e| e % pm1 != 0) {
        return None;
    }
    let m1_exps: Vec<u32> = fm.iter().map(|&e| e / pm1).collect();
    let m1 = PolyFp::monomial(p, f.nvars(), m1_exps, 1);
    let denom = m1.pow(pm1 - 1).scale(pm1 as i64);
    let mut g = m1;
    loop {
        let residual = f.sub(&g.pow(pm1));
        if residual.is_zero() {
            return Some(g);
        }
        let (rm, rc) = residual.leading(order).unwrap();
        let (dm, dc) = denom.leading(order).unwrap();
        let quot = super::poly::monomial_div(rm, dm)?;
        let c = rc * super::poly::inv_mod(dc, p) % p;
        let next = PolyFp::monomial(p, f.nvars(), quot, c as i64);
        // progress check: candidate terms strictly decrease
        debug_assert!(
            order.cmp(
                next.leading(order).unwrap().0,
                g.terms().map(|(e, _)| e).min_by(|a, b| order.cmp(a, b)).unwrap()
            ) == std::cmp::Ordering::Less
        );
        g = g.add(&next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_on_single_monomials() {
        for p in [2u64, 3, 5] {
            let x = PolyFp::var(p, 1, 0);
            assert_eq!(trace(&x.pow((p - 1) as u32)), PolyFp::one(p, 1));
            assert!(trace(&x.pow(p as u32)).is_zero());
            // (2p−1 − (p−1))/p = 1
            assert_eq!(trace(&x.pow((2 * p - 1) as u32)), x);
        }
    }

    #[test]
    fn splitting_examples() {
        for p in [2u64, 3, 5] {
            let x = PolyFp::var(p, 1, 0);
            assert!(is_splitting(&x.pow((p - 1) as u32)));
            assert!(!is_splitting(&PolyFp::zero(p, 1)));
            let xyz = PolyFp::var(p, 3, 0)
                .mul(&PolyFp::var(p, 3, 1))
                .mul(&PolyFp::var(p, 3, 2));
            assert!(is_splitting(&xyz.pow((p - 1) as u32)));
        }
        assert!(SplittingSection::new(PolyFp::zero(3, 1)).is_err());
    }

    #[test]
    fn compatibility_on_the_line() {
        for p in [2u64, 3, 5] {
            let x = PolyFp::var(p, 1, 0);
            let f = x.pow((p - 1) as u32);
            let at_zero = ChartIdeal::new(p, 1, vec![x.clone()]);
            assert!(compatibly_split(&f, &at_zero).unwrap().compatible);
            let at_one = ChartIdeal::new(p, 1, vec![x.sub(&PolyFp::one(p, 1))]);
            let verdict = compatibly_split(&f, &at_one).unwrap();
            assert!(!verdict.compatible);
            let fail = verdict.failure.unwrap();
            assert!(!at_one.contains(&fail.escaped));
            // trivially compatible ideals
            assert!(
                compatibly_split(&f, &ChartIdeal::zero_ideal(p, 1))
                    .unwrap()
                    .compatible
            );
            let unit = ChartIdeal::new(p, 1, vec![PolyFp::one(p, 1)]);
            assert!(compatibly_split(&f, &unit).unwrap().compatible);
        }
    }

    #[test]
    fn compatibility_requires_a_splitting() {
        let p = 3;
        let x = PolyFp::var(p, 1, 0);
        let ideal = ChartIdeal::new(p, 1, vec![x.clone()]);
        assert!(matches!(
            compatibly_split(&x, &ideal),
            Err(Error::NotASplitting)
        ));
    }

    #[test]
    fn root_extraction() {
        for p in [2u64, 3, 5] {
            let pm1 = (p - 1) as u32;
            let x = PolyFp::var(p, 3, 0);
            let y = PolyFp::var(p, 3, 1);
            let z = PolyFp::var(p, 3, 2);
            assert_eq!(pth_minus_one_root(&x.pow(pm1)), Some(x.clone()));
            if p > 2 {
                let f = x.pow(pm1).add(&PolyFp::one(p, 3));
                assert_eq!(pth_minus_one_root(&f), None);
            }
            let g = x.add(&y).mul(&z);
            let recovered = pth_minus_one_root(&g.pow(pm1)).unwrap();
            assert_eq!(recovered.pow(pm1), g.pow(pm1));
            // leading coefficient of the representative is 1
            assert_eq!(recovered.leading(ChartIdeal::ORDER).unwrap().1, 1);
        }
    }

    #[test]
    fn root_of_zero() {
        assert_eq!(pth_minus_one_root(&PolyFp::zero(5, 2)), Some(PolyFp::zero(5, 2)));
    }
}
