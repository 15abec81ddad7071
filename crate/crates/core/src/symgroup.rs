//! Permutations of `{1, …, ℓ}`, parabolic subgroups and minimal coset representatives.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Permutation in one-line notation (stored 0-based, displayed 1-based).
///
/// Composition is `(w·v)(x) = w(v(x))`; multiplying on the right by `τ_i`
/// swaps the entries in positions `i` and `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(ell: usize) -> Self {
        Perm((0..ell as u8).collect())
    }

    /// Builds from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let ell = images.len();
        let mut seen = vec![false; ell];
        for &x in images {
            if x == 0 || x > ell || seen[x - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// The simple transposition `τ_i = (i, i+1)`, 1-based.
    pub fn simple(ell: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= ell {
            return Err(Error::IndexOutOfRange { index: i, max: ell.saturating_sub(1) });
        }
        let mut p = Self::identity(ell);
        p.0.swap(i - 1, i);
        Ok(p)
    }

    /// `τ_{i_1} ⋯ τ_{i_k}`.
    pub fn from_word(ell: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(ell);
        for &i in word {
            if i == 0 || i >= ell {
                return Err(Error::IndexOutOfRange { index: i, max: ell.saturating_sub(1) });
            }
            p.0.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `w(x)` for 0-based `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, v: &Perm) -> Result<Perm> {
        if self.degree() != v.degree() {
            return Err(Error::Mismatch { expected: self.degree(), got: v.degree() });
        }
        Ok(Perm(v.0.iter().map(|&x| self.0[x as usize]).collect()))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    /// `ℓ(w τ_i) < ℓ(w)`, with 1-based `i`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `ℓ(τ_i w) < ℓ(w)`, with 1-based `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// `w τ_i`.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.0.swap(i - 1, i);
        p
    }

    /// `τ_i w`.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// A reduced word `[i_1, …, i_k]` with `w = τ_{i_1} ⋯ τ_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            w = w.mul_simple_right(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// All of `S_ℓ` in lexicographic order of one-line notation (identity first).
    pub fn all(ell: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..ell as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            let Some(i) = (1..ell).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..ell).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Longest element `w_0`.
    pub fn longest(ell: usize) -> Perm {
        Perm((0..ell as u8).rev().collect())
    }

    /// Places `self` on positions `offset..offset + degree` inside `S_total`.
    pub fn shifted(&self, offset: usize, total: usize) -> Perm {
        let mut p = Perm::identity(total);
        for (i, &x) in self.0.iter().enumerate() {
            p.0[offset + i] = x + offset as u8;
        }
        p
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(0, format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_one_line(&images)
    }
}

/// Ordered composition `(ℓ_1, …, ℓ_p)` of `ℓ` into positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Half-open position ranges of the blocks.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&k| {
                let r = start..start + k;
                start += k;
                r
            })
            .collect()
    }

    /// Simple reflections `τ_i` (1-based) lying inside a block.
    pub fn inner_simple_reflections(&self) -> Vec<usize> {
        self.blocks()
            .into_iter()
            .flat_map(|b| (b.start + 1)..b.end)
            .collect()
    }

    fn block_of(&self) -> Vec<usize> {
        self.blocks()
            .into_iter()
            .enumerate()
            .flat_map(|(k, b)| b.map(move |_| k))
            .collect()
    }

    pub fn contains(&self, w: &Perm) -> bool {
        let blk = self.block_of();
        (0..w.degree()).all(|x| blk[x] == blk[w.apply(x)])
    }

    /// All elements of `S_{ℓ_1} × ⋯ × S_{ℓ_p}`.
    pub fn parabolic_elements(&self) -> Vec<Perm> {
        let ell = self.total();
        let mut acc = vec![Perm::identity(ell)];
        for b in self.blocks() {
            let local = Perm::all(b.len());
            acc = acc
                .iter()
                .flat_map(|p| {
                    local.iter().map(move |l| {
                        p.compose(&l.shifted(b.start, ell)).expect("same degree")
                    })
                })
                .collect();
        }
        acc.sort();
        acc
    }

    /// `w_π`, reversing each block.
    pub fn longest(&self) -> Perm {
        let mut v = Vec::with_capacity(self.total());
        for b in self.blocks() {
            v.extend(b.rev().map(|x| x as u8));
        }
        Perm(v)
    }

    /// Minimal-length representatives of the cosets `P w`, `P` the parabolic subgroup.
    pub fn min_coset_reps(&self) -> Vec<Perm> {
        let blk = self.block_of();
        Perm::all(self.total())
            .into_iter()
            .filter(|d| {
                let inv = d.inverse();
                (1..d.degree()).all(|i| blk[i - 1] != blk[i] || inv.0[i - 1] < inv.0[i])
            })
            .collect()
    }

    /// Writes `w = p·d` with `p` parabolic and `d` a minimal coset representative.
    pub fn factor(&self, w: &Perm) -> (Perm, Perm) {
        let ell = w.degree();
        let mut d = vec![0u8; ell];
        for b in self.blocks() {
            let mut positions: Vec<usize> = (0..ell).filter(|&x| b.contains(&w.apply(x))).collect();
            positions.sort_unstable();
            for (k, pos) in positions.into_iter().enumerate() {
                d[pos] = (b.start + k) as u8;
            }
        }
        let d = Perm(d);
        let p = w.compose(&d.inverse()).expect("same degree");
        (p, d)
    }
}

/// Minimal coset representatives of `(S_{ℓ1} × S_{ℓ2}) \ S_{ℓ1+ℓ2}`.
pub fn min_coset_reps(ell1: usize, ell2: usize) -> Result<Vec<Perm>> {
    Ok(Partition::new(vec![ell1, ell2])?.min_coset_reps())
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_descents() {
        assert_eq!(Perm::identity(4).length(), 0);
        assert_eq!(Perm::longest(3).length(), 3);
        let t1 = Perm::simple(3, 1).unwrap();
        assert!(t1.has_right_descent(1));
        assert!(!t1.has_right_descent(2));
        assert!(Perm::simple(3, 3).is_err());
    }

    #[test]
    fn composition_convention() {
        let w: Perm = "2 3 1".parse().unwrap();
        let v: Perm = "1 3 2".parse().unwrap();
        assert_eq!(w.compose(&v).unwrap().to_string(), "2 1 3");
        assert_eq!(w.mul_simple_right(2), w.compose(&Perm::simple(3, 2).unwrap()).unwrap());
        assert_eq!(w.mul_simple_left(1), Perm::simple(3, 1).unwrap().compose(&w).unwrap());
        assert!(w.compose(&Perm::identity(2)).is_err());
    }

    #[test]
    fn parabolic_examples() {
        let p = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(p.parabolic_elements(), vec![Perm::identity(2)]);
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.parabolic_elements().len(), 2);
        assert_eq!(p.longest(), Perm::simple(3, 1).unwrap());
        assert_eq!(Partition::new(vec![3]).unwrap().longest(), Perm::longest(3));
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn coset_representatives() {
        let reps = min_coset_reps(1, 1).unwrap();
        assert_eq!(reps, vec![Perm::identity(2), Perm::simple(2, 1).unwrap()]);
        assert_eq!(min_coset_reps(2, 1).unwrap().len(), 3);
    }
}
