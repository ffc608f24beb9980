//! The big-cell chart of the flag variety of SL_2 and SL_3 over F_p.
//!
//! The chart is the open cell around the standard flag, parameterized by
//! unitriangular lower matrices; its coordinates are the strictly-lower
//! entries, read row-major. Restricted to this chart the codimension-1
//! Schubert divisors are cut out by the bottom-left minors, while the
//! codimension-1 opposite Schubert divisors lie entirely at infinity, so
//! their derived equations (the top-left principal minors) restrict to
//! units. Neither statement is hardcoded: every candidate equation is
//! accepted only when its F_p zero set agrees, pointwise, with the cell
//! membership computed by the Bruhat decomposition oracle.
//!
//! The canonical section is the product of all the divisor equations raised
//! to the (p−1)st power, scaled so its trace is 1. The Richardson
//! restriction ideals are generated by corner-rank minors and are accepted
//! only after the same pointwise verification.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cartan::{CartanType, Family};
use crate::error::{Error, Result};
use crate::richardson::Interval;
use crate::weyl::{WeylElement, WeylGroup};

use super::decompose::{FpMatrix, Permutation};
use super::grobner::ChartIdeal;
use super::poly::{inv_mod, PolyFp};
use super::trace::{compatibly_split, pth_minus_one_root, trace, CompatFailure, SplittingSection};

/// One F_p point of the chart with its cell pair.
#[derive(Clone, Debug)]
pub struct ChartPoint {
    pub coords: Vec<u64>,
    /// Schubert cell: `b` with the point in `B·b·B`.
    pub schubert: WeylElement,
    /// Opposite cell: `a` with the point in `B⁻·a·B`.
    pub opposite: WeylElement,
}

/// The verified big-cell model.
pub struct BigCellModel {
    n: usize,
    p: u64,
    group: WeylGroup,
    names: Vec<String>,
    nvars: usize,
    /// Codimension-1 Schubert divisors `[e, b]` with their chart equations.
    schubert_divisors: Vec<(WeylElement, PolyFp)>,
    /// Codimension-1 opposite divisors `[a, w0]` with their derived chart
    /// equations (units here).
    opposite_divisors: Vec<(WeylElement, PolyFp)>,
    canonical: SplittingSection,
    /// `root^(p-1)` equals the canonical section.
    root: PolyFp,
    richardson_ideals: BTreeMap<Interval, ChartIdeal>,
    points: Vec<ChartPoint>,
}

impl BigCellModel {
    /// Builds and verifies the chart model for SL_n over F_p.
    pub fn build(n: usize, p: u64) -> Result<BigCellModel> {
        if !(2..=3).contains(&n) {
            return Err(Error::UnsupportedChart(format!("n = {n}, expected 2 or 3")));
        }
        if ![2, 3, 5].contains(&p) {
            return Err(Error::UnsupportedChart(format!(
                "p = {p}, expected one of 2, 3, 5"
            )));
        }
        let group = WeylGroup::generate(CartanType::new(Family::A, n - 1)?)?;
        let nvars = n * (n - 1) / 2;
        let mut names = Vec::with_capacity(nvars);
        for i in 1..n {
            for j in 0..i {
                names.push(format!("x{}{}", i + 1, j + 1));
            }
        }

        // chart points with their cell pairs, by the decomposition oracle
        let mut points = Vec::new();
        let total = p.pow(nvars as u32);
        for code in 0..total {
            let mut coords = Vec::with_capacity(nvars);
            let mut rest = code;
            for _ in 0..nvars {
                coords.push(rest % p);
                rest /= p;
            }
            let m = FpMatrix::unitriangular_lower(p, n, &coords);
            let schubert = m.bruhat_cell()?.to_element(&group)?;
            let opposite = m.opposite_cell()?.to_element(&group)?;
            points.push(ChartPoint {
                coords,
                schubert,
                opposite,
            });
        }

        // symbolic unitriangular matrix over the chart variables
        let matrix = symbolic_unitriangular(p, n, nvars);

        // Schubert divisor equations: bottom-left minors, matched to the
        // cocovers of w0 by the point oracle.
        let mut schubert_divisors: Vec<(WeylElement, PolyFp)> = Vec::new();
        let mut schubert_candidates: Vec<PolyFp> = (1..n)
            .map(|k| {
                let rows: Vec<usize> = (n - k..n).collect();
                let cols: Vec<usize> = (0..k).collect();
                minor(&matrix, &rows, &cols)
            })
            .collect();
        for &b in group.cocovers(group.longest()) {
            let expected: Vec<bool> = points
                .iter()
                .map(|pt| group.bruhat_leq(pt.schubert, b))
                .collect();
            let hit = schubert_candidates.iter().position(|eq| {
                points
                    .iter()
                    .zip(&expected)
                    .all(|(pt, &want)| (eq.eval(&pt.coords) == 0) == want)
            });
            match hit {
                Some(idx) => {
                    schubert_divisors.push((b, schubert_candidates.remove(idx)));
                }
                None => {
                    let pt = &points[0];
                    return Err(Error::Construction(format!(
                        "no bottom-left minor cuts the Schubert divisor [e, {}]; \
                         first chart point {:?} decomposes to {}",
                        group.word_string(b),
                        pt.coords,
                        group.word_string(pt.schubert),
                    )));
                }
            }
        }

        // Opposite divisor equations: top-left principal minors, verified
        // against the opposite-cell condition (vacuous vanishing on this
        // chart, so the equations must be units); the size-k minor is paired
        // with the k-th atom.
        let mut opposite_divisors: Vec<(WeylElement, PolyFp)> = Vec::new();
        let atoms: Vec<WeylElement> = group.covers(group.identity()).to_vec();
        for (k, &a) in atoms.iter().enumerate() {
            let rows: Vec<usize> = (0..=k).collect();
            let eq = minor(&matrix, &rows, &rows);
            if let Some(pt) = points.iter().find(|pt| {
                let vanishes = eq.eval(&pt.coords) == 0;
                let inside = group.bruhat_leq(a, pt.opposite);
                vanishes != inside
            }) {
                return Err(Error::Construction(format!(
                    "derived equation for the opposite divisor [{}, w0] fails \
                     the point oracle at {:?}",
                    group.word_string(a),
                    pt.coords,
                )));
            }
            opposite_divisors.push((a, eq));
        }

        // canonical section: product of all divisor equations to the
        // (p-1)st, scaled so the trace is 1
        let product = schubert_divisors
            .iter()
            .chain(&opposite_divisors)
            .fold(PolyFp::one(p, nvars), |acc, (_, eq)| acc.mul(eq));
        let raised = product.pow((p - 1) as u32);
        let t = trace(&raised);
        let scalar = t
            .as_constant()
            .filter(|&c| c != 0)
            .ok_or_else(|| {
                Error::Construction(format!(
                    "trace of the divisor product is not a unit constant: {}",
                    t.display(&names)
                ))
            })?;
        let candidate = raised.scale(inv_mod(scalar, p) as i64);
        let canonical = SplittingSection::new(candidate).map_err(|_| {
            Error::Construction("normalized canonical candidate is not a splitting".into())
        })?;
        let root = pth_minus_one_root(canonical.poly()).ok_or_else(|| {
            Error::Construction("canonical section is not a (p-1)st power".into())
        })?;

        // Z(canonical) must be exactly the union of the verified divisor
        // zero sets
        for pt in &points {
            let in_z = canonical.poly().eval(&pt.coords) == 0;
            let in_divisors = schubert_divisors
                .iter()
                .chain(&opposite_divisors)
                .any(|(_, eq)| eq.eval(&pt.coords) == 0);
            if in_z != in_divisors {
                return Err(Error::Construction(format!(
                    "zero set of the canonical section disagrees with the \
                     divisor union at {:?}",
                    pt.coords
                )));
            }
        }

        // Richardson restriction ideals for the intervals meeting the chart,
        // from corner-rank minors, each verified against the point oracle
        let mut richardson_ideals = BTreeMap::new();
        for w in group.elements() {
            let ideal = rank_condition_ideal(&matrix, p, n, &group, w);
            if let Some(pt) = points.iter().find(|pt| {
                let vanishes = ideal.generators().iter().all(|g| g.eval(&pt.coords) == 0);
                let inside = group.bruhat_leq(pt.schubert, w);
                vanishes != inside
            }) {
                return Err(Error::Construction(format!(
                    "rank-condition ideal for [e, {}] fails the point oracle \
                     at {:?}",
                    group.word_string(w),
                    pt.coords
                )));
            }
            let interval = Interval::new(&group, group.identity(), w)?;
            richardson_ideals.insert(interval, ideal);
        }

        Ok(BigCellModel {
            n,
            p,
            group,
            names,
            nvars,
            schubert_divisors,
            opposite_divisors,
            canonical,
            root,
            richardson_ideals,
            points,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn canonical_section(&self) -> &SplittingSection {
        &self.canonical
    }

    /// The verified `(p-1)`st root of the canonical section.
    pub fn root(&self) -> &PolyFp {
        &self.root
    }

    pub fn schubert_divisors(&self) -> &[(WeylElement, PolyFp)] {
        &self.schubert_divisors
    }

    pub fn opposite_divisors(&self) -> &[(WeylElement, PolyFp)] {
        &self.opposite_divisors
    }

    /// All divisor equations, Schubert then opposite.
    pub fn divisor_equations(&self) -> Vec<PolyFp> {
        self.schubert_divisors
            .iter()
            .chain(&self.opposite_divisors)
            .map(|(_, eq)| eq.clone())
            .collect()
    }

    pub fn richardson_ideals(&self) -> &BTreeMap<Interval, ChartIdeal> {
        &self.richardson_ideals
    }

    pub fn points(&self) -> &[ChartPoint] {
        &self.points
    }

    /// Indices of chart points where every generator vanishes.
    pub fn zero_point_indices(&self, ideal: &ChartIdeal) -> Vec<usize> {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, pt)| ideal.generators().iter().all(|g| g.eval(&pt.coords) == 0))
            .map(|(i, _)| i)
            .collect()
    }

    /// The induced splitting on a Schubert divisor: divides the canonical
    /// section by the divisor equation to the (p−1)st and substitutes the
    /// divisor's chart parameterization (the equation solved for a variable
    /// it is linear in), projecting that variable away.
    pub fn divisor_restriction(&self, divisor_index: usize) -> Result<PolyFp> {
        let (_, eq) = &self.schubert_divisors[divisor_index];
        let (var, value) = solve_linear(eq).ok_or_else(|| {
            Error::UnsupportedChart(
                "divisor equation is not linear in any chart variable".into(),
            )
        })?;
        let quotient = self
            .canonical
            .poly()
            .exact_div(&eq.pow((self.p - 1) as u32), ChartIdeal::ORDER)
            .ok_or_else(|| {
                Error::Construction("divisor equation does not divide the section".into())
            })?;
        Ok(quotient.substitute(var, &value).project_out(var))
    }

    /// Runs the compatibly-split sweep over the candidate ideal family and
    /// classifies each candidate. `extras` adds user-supplied ideals.
    pub fn enumerate_split_primes(&self, extras: &[(String, ChartIdeal)]) -> SplitSweep {
        let mut family: Vec<(String, ChartIdeal)> = Vec::new();
        let push = |family: &mut Vec<(String, ChartIdeal)>, label: String, ideal: ChartIdeal| {
            if ideal.is_unit_ideal() {
                return; // the empty variety is not a candidate subvariety
            }
            if !family.iter().any(|(_, seen)| seen.same_ideal(&ideal)) {
                family.push((label, ideal));
            }
        };

        for (interval, ideal) in &self.richardson_ideals {
            push(
                &mut family,
                format!("richardson {}", interval.label(&self.group)),
                ideal.clone(),
            );
        }
        let eqs = self.divisor_equations();
        for mask in 0u32..(1 << eqs.len()) {
            let gens: Vec<PolyFp> = (0..eqs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| eqs[i].clone())
                .collect();
            let label = format!("divisor-subset 0b{mask:b}");
            push(&mut family, label, ChartIdeal::new(self.p, self.nvars, gens));
        }
        for i in 0..self.nvars {
            for c in 0..self.p {
                let gen = PolyFp::var(self.p, self.nvars, i)
                    .sub(&PolyFp::constant(self.p, self.nvars, c as i64));
                let label = format!("hyperplane {} - {}", self.names[i], c);
                push(
                    &mut family,
                    label,
                    ChartIdeal::new(self.p, self.nvars, vec![gen]),
                );
            }
        }
        for (label, ideal) in extras {
            push(&mut family, label.clone(), ideal.clone());
        }

        let candidates: Vec<CandidateVerdict> = family
            .into_par_iter()
            .map(|(label, ideal)| self.classify(label, ideal))
            .collect();
        SplitSweep { candidates }
    }

    fn classify(&self, label: String, ideal: ChartIdeal) -> CandidateVerdict {
        let verdict =
            compatibly_split(self.canonical.poly(), &ideal).expect("canonical is a splitting");
        let zero = self.zero_point_indices(&ideal);
        // the desk-scale irreducibility test: a unique maximal Schubert cell
        // among the zero points, filling that cell's whole closure
        let mut maxima: Vec<WeylElement> = Vec::new();
        for &i in &zero {
            let b = self.points[i].schubert;
            if maxima.iter().any(|&m| self.group.bruhat_leq(b, m)) {
                continue;
            }
            maxima.retain(|&m| !self.group.bruhat_leq(m, b));
            if !maxima.contains(&b) {
                maxima.push(b);
            }
        }
        let cell_irreducible = maxima.len() == 1 && {
            let w = maxima[0];
            let closure: Vec<usize> = self
                .points
                .iter()
                .enumerate()
                .filter(|(_, pt)| self.group.bruhat_leq(pt.schubert, w))
                .map(|(i, _)| i)
                .collect();
            zero == closure
        };
        let matched = self
            .richardson_ideals
            .iter()
            .find(|(_, r)| r.same_ideal(&ideal))
            .map(|(interval, _)| *interval);
        let proper = ideal.is_proper();
        CandidateVerdict {
            label,
            accepted: verdict.compatible && proper && cell_irreducible,
            split: verdict.compatible,
            failure: verdict.failure,
            proper,
            cell_irreducible,
            matched,
            zero_points: zero,
            ideal,
        }
    }
}

/// Classification of one candidate ideal from the sweep.
#[derive(Clone, Debug)]
pub struct CandidateVerdict {
    pub label: String,
    pub ideal: ChartIdeal,
    /// The compatibility check passed.
    pub split: bool,
    pub failure: Option<CompatFailure>,
    pub proper: bool,
    /// Desk-scale cell test: the zero locus is the closure of a single
    /// Schubert cell (meaningful for split candidates).
    pub cell_irreducible: bool,
    /// Richardson restriction ideal this one equals, if any.
    pub matched: Option<Interval>,
    pub zero_points: Vec<usize>,
    pub accepted: bool,
}

/// Result of the split-prime sweep.
#[derive(Clone, Debug)]
pub struct SplitSweep {
    pub candidates: Vec<CandidateVerdict>,
}

impl SplitSweep {
    pub fn accepted(&self) -> impl Iterator<Item = &CandidateVerdict> {
        self.candidates.iter().filter(|c| c.accepted)
    }
}

fn symbolic_unitriangular(p: u64, n: usize, nvars: usize) -> Vec<Vec<PolyFp>> {
    let mut m = vec![vec![PolyFp::zero(p, nvars); n]; n];
    let mut k = 0;
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            if i == j {
                *entry = PolyFp::one(p, nvars);
            } else if j < i {
                *entry = PolyFp::var(p, nvars, k);
                k += 1;
            }
        }
    }
    m
}

/// Determinant of the chosen rows × cols submatrix, by Laplace expansion.
fn minor(m: &[Vec<PolyFp>], rows: &[usize], cols: &[usize]) -> PolyFp {
    assert_eq!(rows.len(), cols.len());
    let first = &m[rows[0]][cols[0]];
    if rows.len() == 1 {
        return first.clone();
    }
    let mut acc = PolyFp::zero(first.prime(), first.nvars());
    for (k, &r) in rows.iter().enumerate() {
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = m[r][cols[0]].mul(&minor(m, &sub_rows, &cols[1..]));
        acc = if k % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// The permutation of the symmetric-group element `w`, inverse to
/// `Permutation::to_element`.
pub fn permutation_of_element(g: &WeylGroup, w: WeylElement) -> Permutation {
    let n = g.rank() + 1;
    let mut map: Vec<usize> = (0..n).collect();
    for i in g.reduced_word(w) {
        map.swap(i - 1, i);
    }
    Permutation::from_map(map)
}

/// The corner-rank ideal of the Schubert restriction `[e, w]`: for every
/// corner `(i, j)` the minors of the bottom-left submatrix one larger than
/// the rank of the permutation matrix there.
fn rank_condition_ideal(
    matrix: &[Vec<PolyFp>],
    p: u64,
    n: usize,
    g: &WeylGroup,
    w: WeylElement,
) -> ChartIdeal {
    let sigma = permutation_of_element(g, w);
    let nvars = n * (n - 1) / 2;
    let mut gens: Vec<PolyFp> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // rank bound on rows i.., cols ..=j
            let r = (0..=j).filter(|&k| sigma.image(k) >= i).count();
            let rows: Vec<usize> = (i..n).collect();
            let cols: Vec<usize> = (0..=j).collect();
            if r + 1 > rows.len().min(cols.len()) {
                continue;
            }
            for sub_rows in combinations(&rows, r + 1) {
                for sub_cols in combinations(&cols, r + 1) {
                    gens.push(minor(matrix, &sub_rows, &sub_cols));
                }
            }
        }
    }
    ChartIdeal::new(p, nvars, gens)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, items[0]);
            rest
        })
        .collect::<Vec<_>>();
    out.extend(combinations(&items[1..], k));
    out
}

/// Solves `eq = 0` for a variable occurring linearly with constant
/// coefficient: returns `(i, value)` with `x_i := value`.
fn solve_linear(eq: &PolyFp) -> Option<(usize, PolyFp)> {
    let p = eq.prime();
    let n = eq.nvars();
    'vars: for i in 0..n {
        let mut coeff: Option<u64> = None;
        let mut rest = PolyFp::zero(p, n);
        for (e, c) in eq.terms() {
            match e[i] {
                0 => {
                    rest = rest.add(&PolyFp::monomial(p, n, e.clone(), c as i64));
                }
                1 if e.iter().enumerate().all(|(k, &x)| k == i || x == 0) => {
                    if coeff.replace(c).is_some() {
                        continue 'vars;
                    }
                }
                _ => continue 'vars,
            }
        }
        if let Some(c) = coeff {
            // c·x_i + rest = 0  =>  x_i = -c^{-1}·rest
            let value = rest.scale(-(inv_mod(c, p) as i64));
            return Some((i, value));
        }
    }
    None
}
