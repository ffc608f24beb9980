//! Cartan types of the finite crystallographic families and their Cartan
//! matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Simple-group family letter.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A finite Cartan type such as `A3` or `G2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    /// Validates the rank bounds of the family (A: ≥1, B/C: ≥2, D: ≥3,
    /// E: 6–8, F: 4, G: 2).
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let bad = |reason| Error::InvalidRank {
            family: family.letter(),
            rank,
            reason,
        };
        match family {
            Family::A if rank < 1 => return Err(bad("rank must be at least 1")),
            Family::B | Family::C if rank < 2 => return Err(bad("rank must be at least 2")),
            Family::D if rank < 3 => return Err(bad("rank must be at least 3")),
            Family::E if !(6..=8).contains(&rank) => return Err(bad("rank must be 6, 7 or 8")),
            Family::F if rank != 4 => return Err(bad("rank must be 4")),
            Family::G if rank != 2 => return Err(bad("rank must be 2")),
            _ => {}
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group by the classical formula.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1 << n) * fact(n),
            Family::D => (1 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of positive roots; equals the length of the longest element.
    pub fn positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Cartan matrix `c[i][j] = <alpha_j, alpha_i^vee>` in Bourbaki numbering.
    pub(crate) fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
                // short last root: double bond
                c[n - 2][n - 1] = -2;
            }
            Family::C => {
                for i in 0..n - 1 {
                    edge(&mut c, i, i + 1);
                }
                c[n - 1][n - 2] = -2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    edge(&mut c, i, i + 1);
                }
                edge(&mut c, n - 3, n - 1);
            }
            Family::E => {
                // Bourbaki: chain 1-3-4-5-..., node 2 attached to 4.
                edge(&mut c, 0, 2);
                edge(&mut c, 1, 3);
                for i in 2..n - 1 {
                    edge(&mut c, i, i + 1);
                }
            }
            Family::F => {
                edge(&mut c, 0, 1);
                edge(&mut c, 2, 3);
                c[1][2] = -2;
                c[2][1] = -1;
            }
            Family::G => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses strings like `"A3"`, `"b2"`, `"G2"`: case-insensitive family
    /// letter followed by a decimal rank.
    fn from_str(s: &str) -> Result<CartanType> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::ParseCartan(s.into()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::UnknownFamily(letter.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseCartan(s.into()))?;
        CartanType::new(family, rank)
    }
}
