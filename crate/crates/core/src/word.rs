//! Words over involutive generators and the solution of the word problem in
//! the twin group `T_n`.
//!
//! `T_n` is the right-angled Coxeter group on `s_1, ..., s_{n-1}` where
//! `s_i` and `s_j` commute exactly when `|i - j| >= 2`. A word is reduced
//! iff it has no subword `s_i x_1 ... x_k s_i` with every `x_j` commuting
//! with `s_i`, and any two reduced words for the same element differ by
//! commuting swaps. The normal form is the lexicographically least reduced
//! word, so equality is sequence identity of normal forms.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TwinError};

/// The two letter families: twin generators `s_i` and the virtual
/// (symmetric-group) generators `rho_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LetterKind {
    S,
    Rho,
}

/// A single generator letter. Ordered by index first, so `s_1 < s_2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxLetter {
    pub index: u8,
    pub kind: LetterKind,
}

impl CoxLetter {
    pub const fn s(index: u8) -> Self {
        CoxLetter { index, kind: LetterKind::S }
    }

    pub const fn rho(index: u8) -> Self {
        CoxLetter { index, kind: LetterKind::Rho }
    }

    pub fn is_s(self) -> bool {
        self.kind == LetterKind::S
    }

    /// Far commutation `|i - j| >= 2`, independent of letter kind.
    #[inline]
    pub fn far_from(self, other: CoxLetter) -> bool {
        self.index.abs_diff(other.index) >= 2
    }
}

impl fmt::Display for CoxLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::S => write!(f, "s{}", self.index),
            LetterKind::Rho => write!(f, "r{}", self.index),
        }
    }
}

/// A finite word over [`CoxLetter`]s. The empty word is the identity; the
/// inverse of a word is its reversal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxWord(Vec<CoxLetter>);

impl CoxWord {
    pub fn new(letters: Vec<CoxLetter>) -> Self {
        CoxWord(letters)
    }

    pub fn identity() -> Self {
        CoxWord(Vec::new())
    }

    /// Builds an `s`-word from generator indices, e.g. `[1, 2, 1]` is `s1 s2 s1`.
    pub fn from_indices(indices: &[u8]) -> Self {
        CoxWord(indices.iter().map(|&i| CoxLetter::s(i)).collect())
    }

    pub fn letters(&self) -> &[CoxLetter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<CoxLetter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = CoxLetter> + '_ {
        self.0.iter().copied()
    }

    pub fn concat(&self, other: &CoxWord) -> CoxWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        CoxWord(letters)
    }

    pub fn pow(&self, exp: usize) -> CoxWord {
        CoxWord(self.0.repeat(exp))
    }

    pub fn push(&mut self, letter: CoxLetter) {
        self.0.push(letter);
    }

    /// Largest letter index occurring in the word (0 for the empty word).
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.index as usize).max().unwrap_or(0)
    }

    pub fn has_virtual_letters(&self) -> bool {
        self.0.iter().any(|l| !l.is_s())
    }
}

impl FromIterator<CoxLetter> for CoxWord {
    fn from_iter<I: IntoIterator<Item = CoxLetter>>(iter: I) -> Self {
        CoxWord(iter.into_iter().collect())
    }
}

impl<'a> Mul<&'a CoxWord> for &CoxWord {
    type Output = CoxWord;

    fn mul(self, rhs: &'a CoxWord) -> CoxWord {
        self.concat(rhs)
    }
}

impl fmt::Display for CoxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The ambient twin group `T_n`: rank `n`, generators `s_1..s_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    rank: usize,
}

impl GroupSpec {
    pub const MAX_RANK: usize = 255;

    pub fn new(rank: usize) -> Result<Self> {
        if !(2..=Self::MAX_RANK).contains(&rank) {
            return Err(TwinError::UnsupportedRank(rank, "2..=255"));
        }
        Ok(GroupSpec { rank })
    }

    /// The smallest twin group containing every letter of `words`.
    pub fn covering<'a>(words: impl IntoIterator<Item = &'a CoxWord>) -> Self {
        let max = words.into_iter().map(CoxWord::max_index).max().unwrap_or(0);
        GroupSpec { rank: (max + 1).clamp(2, Self::MAX_RANK) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of generators, `n - 1`.
    pub fn generator_count(&self) -> usize {
        self.rank - 1
    }

    pub fn generators(&self) -> impl Iterator<Item = CoxLetter> {
        (1..self.rank as u8).map(CoxLetter::s)
    }

    pub fn commute(&self, i: usize, j: usize) -> bool {
        i.abs_diff(j) >= 2
    }

    /// Checks that `w` is an `s`-word with all indices in `1..n`.
    pub fn check(&self, w: &CoxWord) -> Result<()> {
        for l in w.iter() {
            if !l.is_s() {
                return Err(TwinError::VirtualLetter(l.index as usize));
            }
            self.check_index(l.index as usize)?;
        }
        Ok(())
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index >= self.rank {
            return Err(TwinError::IndexOutOfRange { index, rank: self.rank });
        }
        Ok(())
    }
}

/// Reduction on raw letters without rank validation.
///
/// Each incoming letter scans back over the commuting tail of the stack; if
/// it meets its own twin the pair cancels, otherwise it is pushed. The stack
/// is reduced after every step.
pub(crate) fn reduce_letters(letters: &[CoxLetter]) -> Vec<CoxLetter> {
    let mut stack: Vec<CoxLetter> = Vec::with_capacity(letters.len());
    for &x in letters {
        let mut cancel_at = None;
        for (pos, &y) in stack.iter().enumerate().rev() {
            if y == x {
                cancel_at = Some(pos);
                break;
            }
            if !y.far_from(x) {
                break;
            }
        }
        match cancel_at {
            Some(pos) => {
                stack.remove(pos);
            }
            None => stack.push(x),
        }
    }
    stack
}

/// Lexicographically least linear extension of the commutation order of a
/// reduced word.
pub(crate) fn lex_least_letters(reduced: &[CoxLetter]) -> Vec<CoxLetter> {
    let len = reduced.len();
    // blockers[p]: earlier untaken letters that do not commute with reduced[p]
    let mut blockers = vec![0usize; len];
    for p in 0..len {
        for q in 0..p {
            if !reduced[q].far_from(reduced[p]) {
                blockers[p] += 1;
            }
        }
    }
    let mut taken = vec![false; len];
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let mut best: Option<usize> = None;
        for p in 0..len {
            if !taken[p] && blockers[p] == 0 && best.is_none_or(|b| reduced[p] < reduced[b]) {
                best = Some(p);
            }
        }
        let q = best.expect("a reduced word always has a minimal letter");
        taken[q] = true;
        out.push(reduced[q]);
        for p in q + 1..len {
            if !taken[p] && !reduced[q].far_from(reduced[p]) {
                blockers[p] -= 1;
            }
        }
    }
    out
}

pub(crate) fn normal_form_letters(letters: &[CoxLetter]) -> Vec<CoxLetter> {
    lex_least_letters(&reduce_letters(letters))
}

/// A geodesic word equal to `w` in `T_n`.
pub fn reduce(w: &CoxWord, spec: &GroupSpec) -> Result<CoxWord> {
    spec.check(w)?;
    Ok(CoxWord(reduce_letters(&w.0)))
}

/// The canonical representative of `w`: the lexicographically least
/// geodesic among the commutation class of `reduce(w)`.
pub fn normal_form(w: &CoxWord, spec: &GroupSpec) -> Result<CoxWord> {
    spec.check(w)?;
    Ok(CoxWord(normal_form_letters(&w.0)))
}

pub fn equal(u: &CoxWord, v: &CoxWord, spec: &GroupSpec) -> Result<bool> {
    Ok(normal_form(u, spec)? == normal_form(v, spec)?)
}

pub fn invert(w: &CoxWord) -> CoxWord {
    w.0.iter().rev().copied().collect()
}

/// `g^{-1} w g`, unreduced.
pub fn conjugate(w: &CoxWord, g: &CoxWord) -> CoxWord {
    let mut out = invert(g);
    out.0.extend_from_slice(&w.0);
    out.0.extend_from_slice(&g.0);
    out
}

/// Tits condition: no letter pair `s_i ... s_i` whose separating letters
/// all commute with `s_i`.
pub fn is_reduced(w: &CoxWord) -> bool {
    let letters = w.letters();
    for (p, &x) in letters.iter().enumerate() {
        for &y in &letters[p + 1..] {
            if y == x {
                return false;
            }
            if !y.far_from(x) {
                break;
            }
        }
    }
    true
}

/// All elements of `T_n` of length at most `max_len`, grouped by length,
/// each level given as sorted normal forms.
pub fn elements_by_length(spec: &GroupSpec, max_len: usize) -> Vec<Vec<CoxWord>> {
    let gens: Vec<CoxLetter> = spec.generators().collect();
    let mut levels = vec![vec![CoxWord::identity()]];
    for len in 1..=max_len {
        let mut next: HashSet<Vec<CoxLetter>> = HashSet::new();
        for w in &levels[len - 1] {
            for &g in &gens {
                let mut letters = w.0.clone();
                letters.push(g);
                let reduced = reduce_letters(&letters);
                if reduced.len() == len {
                    next.insert(lex_least_letters(&reduced));
                }
            }
        }
        let mut level: Vec<CoxWord> = next.into_iter().map(CoxWord).collect();
        level.sort();
        levels.push(level);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ix: &[u8]) -> CoxWord {
        CoxWord::from_indices(ix)
    }

    fn spec(n: usize) -> GroupSpec {
        GroupSpec::new(n).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&w(&[1, 1]), &spec(3)).unwrap(), CoxWord::identity());
        assert_eq!(reduce(&w(&[1, 3, 1]), &spec(4)).unwrap(), w(&[3]));
        let braid_cube = w(&[1, 2]).pow(3);
        assert_eq!(reduce(&braid_cube, &spec(3)).unwrap(), braid_cube);
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(normal_form(&w(&[3, 1]), &spec(4)).unwrap(), w(&[1, 3]));
        assert_eq!(normal_form(&w(&[2, 1, 2]), &spec(3)).unwrap(), w(&[2, 1, 2]));
        assert_eq!(normal_form(&w(&[1, 3, 1, 3]), &spec(4)).unwrap(), CoxWord::identity());
        // s3 s1 s2 s4 s3 ... commuting blocks sort to the front where legal
        assert_eq!(normal_form(&w(&[4, 2, 1]), &spec(5)).unwrap(), w(&[2, 1, 4]));
    }

    #[test]
    fn equal_examples() {
        assert!(equal(&w(&[1, 3]), &w(&[3, 1]), &spec(4)).unwrap());
        assert!(!equal(&w(&[1, 2]).pow(3), &w(&[2, 1]).pow(3), &spec(3)).unwrap());
        assert!(equal(&CoxWord::identity(), &w(&[1, 1]), &spec(3)).unwrap());
    }

    #[test]
    fn invert_and_conjugate() {
        assert_eq!(invert(&w(&[1, 2, 3])), w(&[3, 2, 1]));
        assert_eq!(invert(&CoxWord::identity()), CoxWord::identity());
        assert_eq!(invert(&w(&[2])), w(&[2]));
        let b = w(&[1, 2]).pow(3);
        let g = w(&[3]);
        assert_eq!(conjugate(&b, &g), &(&g * &b) * &g);
        assert_eq!(conjugate(&b, &CoxWord::identity()), b);
        let c = conjugate(&CoxWord::identity(), &w(&[1, 2]));
        assert!(normal_form(&c, &spec(3)).unwrap().is_empty());
    }

    #[test]
    fn out_of_range_and_virtual_letters_rejected() {
        assert_eq!(reduce(&w(&[3]), &spec(3)), Err(TwinError::IndexOutOfRange { index: 3, rank: 3 }));
        assert!(reduce(&w(&[0]), &spec(3)).is_err());
        let mixed = CoxWord::new(vec![CoxLetter::s(1), CoxLetter::rho(1)]);
        assert_eq!(normal_form(&mixed, &spec(3)), Err(TwinError::VirtualLetter(1)));
        assert!(GroupSpec::new(1).is_err());
    }

    #[test]
    fn element_counts_small_ranks() {
        // T_2 = Z_2
        let t2 = elements_by_length(&spec(2), 4);
        assert_eq!(t2.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 0, 0, 0]);
        // T_3 infinite dihedral: two elements of each positive length
        let t3 = elements_by_length(&spec(3), 5);
        assert_eq!(t3.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 2, 2, 2, 2, 2]);
        // T_4 = (Z_2 x Z_2) * Z_2
        let t4 = elements_by_length(&spec(4), 2);
        assert_eq!(t4[1].len(), 3);
        // s1s2, s2s1, s2s3, s3s2, s1s3
        assert_eq!(t4[2].len(), 5);
    }

    #[test]
    fn tits_scan() {
        assert!(is_reduced(&w(&[1, 2, 1])));
        assert!(!is_reduced(&w(&[1, 3, 1])));
        assert!(is_reduced(&w(&[1, 2, 3, 1])));
    }
}
