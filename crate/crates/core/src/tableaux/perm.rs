//! Permutations in one-line notation, composed left to right.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n` stored as its images `w(1), ..., w(n)`.
///
/// Products compose left to right: `x` is sent by `u * w` to `w(u(x))`.
/// The Coxeter length is cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    img: Vec<u8>,
    len: u32,
}

fn inversions(img: &[u8]) -> u32 {
    let mut c = 0;
    for i in 0..img.len() {
        for j in i + 1..img.len() {
            if img[i] > img[j] {
                c += 1;
            }
        }
    }
    c
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { img: (1..=n as u8).collect(), len: 0 }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("rank {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[x] = true;
        }
        let img: Vec<u8> = images.iter().map(|&x| x as u8).collect();
        let len = inversions(&img);
        Ok(Self { img, len })
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(1 <= i && i < n, "s_{i} not in S_{n}");
        let mut w = Self::identity(n);
        w.img.swap(i - 1, i);
        w.len = 1;
        w
    }

    /// The transposition `(i, m)`.
    pub fn transposition(i: usize, m: usize, n: usize) -> Self {
        assert!(i >= 1 && m <= n && i != m, "invalid transposition ({i},{m})");
        let mut img: Vec<u8> = (1..=n as u8).collect();
        img.swap(i - 1, m - 1);
        let len = inversions(&img);
        Self { img, len }
    }

    /// `sigma_{i,j} = s_i s_{i+1} ... s_{j-1}`, the identity when `i == j`.
    pub fn sigma(i: usize, j: usize, n: usize) -> Self {
        assert!(1 <= i && i <= j && j <= n, "invalid sigma({i},{j})");
        Self::from_word(&(i..j).collect::<Vec<_>>(), n)
    }

    /// `s_{w_1} s_{w_2} ...` (not necessarily reduced).
    pub fn from_word(word: &[usize], n: usize) -> Self {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.mul_simple(i);
        }
        w
    }

    /// Every permutation of `1..=n`, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation { len: inversions(prefix), img: prefix.clone() });
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x as u8 + 1);
                    go(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// `w(x)` for `1 <= x <= n`.
    pub fn image(&self, x: usize) -> usize {
        self.img[x - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&x| x as usize).collect()
    }

    /// `w^-1(y)`: the position holding value `y`.
    pub fn preimage(&self, y: usize) -> usize {
        self.img.iter().position(|&x| x as usize == y).expect("value in range") + 1
    }

    /// True when `l(w s_i) > l(w)`: value `i` precedes value `i+1`.
    pub fn ascends_right(&self, i: usize) -> bool {
        self.preimage(i) < self.preimage(i + 1)
    }

    /// `w s_i`: swaps the values `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let up = self.ascends_right(i);
        let img = self
            .img
            .iter()
            .map(|&x| match x as usize {
                x if x == i => (i + 1) as u8,
                x if x == i + 1 => i as u8,
                _ => x,
            })
            .collect();
        Self { img, len: if up { self.len + 1 } else { self.len - 1 } }
    }

    /// `s_i w`: swaps the positions `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Self {
        let up = self.img[i - 1] < self.img[i];
        let mut img = self.img.clone();
        img.swap(i - 1, i);
        Self { img, len: if up { self.len + 1 } else { self.len - 1 } }
    }

    /// The left-to-right product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "permutations of different rank");
        let img: Vec<u8> = self.img.iter().map(|&x| other.img[x as usize - 1]).collect();
        let len = inversions(&img);
        Self { img, len }
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0u8; self.n()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize - 1] = (i + 1) as u8;
        }
        Self { img, len: self.len }
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.len as usize);
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (1..w.n()).find(|&i| !w.ascends_right(i)).expect("non-identity has a descent");
            word.push(i);
            w = w.mul_simple(i);
        }
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.img.iter().map(u8::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_to_right_composition() {
        let s1 = Permutation::simple(1, 3);
        let s2 = Permutation::simple(2, 3);
        // 1 -> 2 under s1, then 2 -> 3 under s2
        assert_eq!(s1.compose(&s2).image(1), 3);
        assert_eq!(s1.compose(&s2), s1.mul_simple(2));
        assert_eq!(s2.simple_mul(1), s1.compose(&s2));
    }

    #[test]
    fn sigma_words() {
        assert!(Permutation::sigma(3, 3, 5).is_identity());
        let s = Permutation::sigma(2, 4, 5);
        assert_eq!(s.reduced_word(), vec![2, 3]);
        assert_eq!(s.length(), 2);
        assert_eq!(s.images(), vec![1, 4, 2, 3, 5]);
    }

    #[test]
    fn reduced_words_rebuild() {
        let w = Permutation::from_images(&[3, 1, 4, 5, 2]).unwrap();
        let word = w.reduced_word();
        assert_eq!(word.len() as u32, w.length());
        assert_eq!(Permutation::from_word(&word, 5), w);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(5));
    }

    #[test]
    fn transpositions() {
        let t = Permutation::transposition(1, 3, 3);
        assert_eq!(t, Permutation::from_word(&[2, 1, 2], 3));
        assert_eq!(t.length(), 3);
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }
}
