//! Bruhat decomposition of invertible matrices over a prime field by
//! Gaussian elimination respecting the Borel.
//!
//! Row operations adding a lower row to an upper one and column operations
//! adding an earlier column to a later one realize the two-sided action of
//! the upper-triangular Borel, so picking the lowest available pivot in each
//! column reduces a matrix to the permutation matrix of its Bruhat cell.
//! Picking the highest available pivot instead uses the lower-triangular
//! Borel on the left and yields the opposite decomposition. Together the two
//! assign each point its cell pair.

use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylGroup};

use super::poly::inv_mod;

/// A square matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    n: usize,
    a: Vec<u64>,
}

impl FpMatrix {
    pub fn new(p: u64, n: usize, entries: Vec<u64>) -> FpMatrix {
        assert_eq!(entries.len(), n * n);
        FpMatrix {
            p,
            n,
            a: entries.into_iter().map(|x| x % p).collect(),
        }
    }

    pub fn identity(p: u64, n: usize) -> FpMatrix {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        FpMatrix { p, n, a }
    }

    /// The permutation matrix with ones at `(sigma(j), j)`.
    pub fn permutation(p: u64, sigma: &Permutation) -> FpMatrix {
        let n = sigma.len();
        let mut a = vec![0; n * n];
        for j in 0..n {
            a[sigma.image(j) * n + j] = 1;
        }
        FpMatrix { p, n, a }
    }

    /// Unitriangular lower matrix with the given strictly-lower entries in
    /// row-major order: `(2,1), (3,1), (3,2), ...` 1-based.
    pub fn unitriangular_lower(p: u64, n: usize, below: &[u64]) -> FpMatrix {
        assert_eq!(below.len(), n * (n - 1) / 2);
        let mut m = FpMatrix::identity(p, n);
        let mut k = 0;
        for i in 1..n {
            for j in 0..i {
                m.a[i * n + j] = below[k] % p;
                k += 1;
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.n + j]
    }

    fn scale_row(&mut self, i: usize, c: u64) {
        for j in 0..self.n {
            self.a[i * self.n + j] = self.a[i * self.n + j] * c % self.p;
        }
    }

    /// row_dst -= c * row_src
    fn sub_row(&mut self, dst: usize, src: usize, c: u64) {
        for j in 0..self.n {
            let s = self.a[src * self.n + j] * c % self.p;
            self.a[dst * self.n + j] = (self.a[dst * self.n + j] + self.p - s) % self.p;
        }
    }

    /// col_dst -= c * col_src
    fn sub_col(&mut self, dst: usize, src: usize, c: u64) {
        for i in 0..self.n {
            let s = self.a[i * self.n + src] * c % self.p;
            self.a[i * self.n + dst] = (self.a[i * self.n + dst] + self.p - s) % self.p;
        }
    }

    fn decompose(&self, lowest_pivot: bool) -> Result<Permutation> {
        let n = self.n;
        let mut m = self.clone();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&i| !used[i] && m.get(i, j) != 0).collect();
            let &r = if lowest_pivot {
                rows.last()
            } else {
                rows.first()
            }
            .ok_or(Error::SingularMatrix(self.p))?;
            used[r] = true;
            pivot_of_col[j] = Some(r);
            m.scale_row(r, inv_mod(m.get(r, j), self.p));
            for i in 0..n {
                if i == r || m.get(i, j) == 0 {
                    continue;
                }
                if !used[i] {
                    // unused rows sit on the clearing side of the pivot
                    m.sub_row(i, r, m.get(i, j));
                } else {
                    // a used pivot row: clear with its own pivot column
                    let jp = (0..j)
                        .find(|&jj| pivot_of_col[jj] == Some(i))
                        .expect("used row has a pivot column");
                    m.sub_col(j, jp, m.get(i, j));
                }
            }
        }
        Ok(Permutation {
            map: pivot_of_col.into_iter().map(|r| r.unwrap()).collect(),
        })
    }

    /// The permutation `w` with `g ∈ B·w·B` for the upper Borel `B`.
    pub fn bruhat_cell(&self) -> Result<Permutation> {
        self.decompose(true)
    }

    /// The permutation `a` with `g ∈ B⁻·a·B`.
    pub fn opposite_cell(&self) -> Result<Permutation> {
        self.decompose(false)
    }
}

/// A permutation of `{0, ..., n-1}`, as the map `column -> pivot row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Permutation {
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, j: usize) -> usize {
        self.map[j]
    }

    pub fn inversions(&self) -> usize {
        let n = self.map.len();
        (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.map[i] > self.map[j])
            .count()
    }

    /// One-line notation, 1-based, e.g. `[2, 3, 1]`.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&r| r + 1).collect()
    }

    /// The corresponding element of the symmetric-group Weyl group, with
    /// the adjacent transposition at positions `i, i+1` mapping to the
    /// `i`-th simple reflection.
    pub fn to_element(&self, g: &WeylGroup) -> Result<WeylElement> {
        if g.rank() + 1 != self.map.len() {
            return Err(Error::UnsupportedChart(format!(
                "permutation of {} letters needs a rank-{} symmetric-group type",
                self.map.len(),
                self.map.len() - 1
            )));
        }
        // bubble down to the identity, recording the swaps
        let mut sigma = self.map.clone();
        let mut pushes: Vec<usize> = Vec::new();
        loop {
            match (0..sigma.len() - 1).find(|&i| sigma[i] > sigma[i + 1]) {
                None => break,
                Some(i) => {
                    sigma.swap(i, i + 1);
                    pushes.push(i);
                }
            }
        }
        // sigma = t_{last} ∘ ... ∘ t_{first}, so multiply in reverse
        let mut w = g.identity();
        for &i in pushes.iter().rev() {
            w = g.multiply(w, g.simple(i + 1)?)?;
        }
        Ok(w)
    }
}
