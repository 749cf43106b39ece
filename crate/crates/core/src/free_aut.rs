//! The free group `F_7 = PT_4` on the basis `b_1, ..., b_7`, endomorphisms
//! given by image words, and the conjugation action `phi_4: T_4 -> Aut(F_7)`.
//!
//! Composition is diagrammatic: `compose(f, g)` applies `f` first, then `g`.
//! With the right conjugation action `x -> g^{-1} x g` this makes
//! `phi_4(uv) = compose(phi_4(u), phi_4(v))`.
//!
//! The action tables are stored as data and cross-checked by
//! [`equivariance_cases`], which recomputes every entry from the
//! Reidemeister-Schreier rewriting of `b_i^g`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Result, TwinError};
use crate::grammar::{parse_free_word, parse_word};
use crate::schreier::{Presentation, PureCosets, Symbol};
use crate::tietze::{adjoin_generator, tietze_simplify_with, TietzeOptions, TietzeOutcome};
use crate::twin::is_pure;
use crate::word::{conjugate, elements_by_length, CoxLetter, CoxWord, GroupSpec};

pub const PT4_RANK: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    /// 1-based basis index.
    pub index: u8,
    /// `+1` or `-1`.
    pub sign: i8,
}

impl FreeLetter {
    pub fn inverse(self) -> Self {
        FreeLetter { index: self.index, sign: -self.sign }
    }
}

impl fmt::Display for FreeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "b{}^-1", self.index)
        } else {
            write!(f, "b{}", self.index)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<FreeLetter>);

impl FreeWord {
    /// Wraps letters as given; see [`free_reduce`].
    pub fn new(letters: Vec<FreeLetter>) -> Self {
        FreeWord(letters)
    }

    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(index: u8) -> Self {
        FreeWord(vec![FreeLetter { index, sign: 1 }])
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        free_reduce(&FreeWord(out))
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.index as usize).max().unwrap_or(0)
    }

    /// Exponent sums mod 2 over `rank` basis elements.
    pub fn parity(&self, rank: usize) -> Vec<u8> {
        let mut v = vec![0u8; rank];
        for l in &self.0 {
            v[l.index as usize - 1] ^= 1;
        }
        v
    }
}

impl fmt::Display for FreeWord {
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

pub fn free_reduce(w: &FreeWord) -> FreeWord {
    let mut out: Vec<FreeLetter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    FreeWord(out)
}

/// An endomorphism of a free group, given by the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeAut {
    images: Vec<FreeWord>,
}

impl FreeAut {
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if let Some(bad) = images.iter().find(|w| w.max_index() > rank) {
            return Err(TwinError::Invalid(format!("image {bad} leaves the rank-{rank} basis")));
        }
        Ok(FreeAut { images: images.iter().map(free_reduce).collect() })
    }

    pub fn identity(rank: usize) -> Self {
        FreeAut { images: (1..=rank as u8).map(FreeWord::generator).collect() }
    }

    /// Conjugation `x -> c^{-1} x c`.
    pub fn inner(rank: usize, c: &FreeWord) -> Self {
        let c = free_reduce(c);
        FreeAut { images: (1..=rank as u8).map(|i| c.inverse().mul(&FreeWord::generator(i)).mul(&c)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `b_i` (1-based).
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| w.0 == [FreeLetter { index: i as u8 + 1, sign: 1 }])
    }
}

impl fmt::Display for FreeAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            writeln!(f, "b{} -> {w}", i + 1)?;
        }
        Ok(())
    }
}

pub fn apply_aut(f: &FreeAut, w: &FreeWord) -> FreeWord {
    let mut out = Vec::new();
    for l in w.letters() {
        let img = f.image(l.index as usize);
        if l.sign > 0 {
            out.extend_from_slice(&img.0);
        } else {
            out.extend(img.0.iter().rev().map(|x| x.inverse()));
        }
    }
    free_reduce(&FreeWord(out))
}

/// `f` first, then `g`.
pub fn compose(f: &FreeAut, g: &FreeAut) -> FreeAut {
    FreeAut { images: f.images.iter().map(|w| apply_aut(g, w)).collect() }
}

const PHI4_TABLE: [[&str; 7]; 3] = [
    ["b1^-1", "b2^-1", "b4", "b3", "b6", "b5", "b1 b7^-1 b1^-1"],
    ["b1^-1", "b3", "b2", "b1^-1 b4^-1 b1", "b5^-1", "b7", "b6"],
    ["b2", "b1", "b5^-1 b3^-1 b5", "b6^-1 b4^-1 b6", "b5^-1", "b6^-1", "b2^-1 b6^-1 b4^-1 b1 b7 b3 b5"],
];

/// `phi_4(s_i)` as stored in the action table, `i in 1..=3`.
pub fn phi4_generator(i: usize) -> Result<FreeAut> {
    GroupSpec::new(4)?.check_index(i)?;
    static GENS: OnceLock<Vec<FreeAut>> = OnceLock::new();
    let gens = GENS.get_or_init(|| {
        PHI4_TABLE
            .iter()
            .map(|row| {
                let images = row.iter().map(|s| parse_free_word(s).expect("table parses")).collect();
                FreeAut::new(images).expect("table has rank 7")
            })
            .collect()
    });
    Ok(gens[i - 1].clone())
}

/// `phi_4(w)`: the product of the generator automorphisms in word order.
pub fn phi4(w: &CoxWord) -> Result<FreeAut> {
    GroupSpec::new(4)?.check(w)?;
    let mut acc = FreeAut::identity(PT4_RANK);
    for l in w.iter() {
        acc = compose(&acc, &phi4_generator(l.index as usize)?);
    }
    Ok(acc)
}

/// The basis `b_1..b_7` of `PT_4` as words in `T_4`.
pub fn basis_words() -> Vec<CoxWord> {
    [
        "(s1 s2)^3",
        "s3 (s1 s2)^3 s3",
        "s2 s3 (s1 s2)^3 s3 s2",
        "s1 s2 s3 (s1 s2)^3 s3 s2 s1",
        "(s2 s3)^3",
        "s1 (s2 s3)^3 s1",
        "s2 s1 (s2 s3)^3 s1 s2",
    ]
    .iter()
    .map(|s| parse_word(s).expect("basis words parse"))
    .collect()
}

/// Rewriting machinery expressing pure words of `T_4` in the basis
/// `b_1..b_7`: the Reidemeister-Schreier presentation of `PT_4` with the
/// basis adjoined as protected generators, Tietze-reduced until only the
/// basis remains.
pub struct PureBasis {
    cosets: PureCosets,
    outcome: TietzeOutcome,
}

impl PureBasis {
    pub fn build() -> Result<Self> {
        let cosets = PureCosets::new(4)?;
        let mut p = cosets.table().presentation();
        let mut protected = BTreeSet::new();
        for (i, b) in basis_words().into_iter().enumerate() {
            let name = format!("b{}", i + 1);
            let def = cosets.rewrite_tau(&b)?;
            p = adjoin_generator(&p, &name, b, &def);
            protected.insert(name);
        }
        let outcome = tietze_simplify_with(&p, &TietzeOptions { protected, ..Default::default() });
        let expected: Vec<Symbol> = (1..=PT4_RANK).map(|i| format!("b{i}")).collect();
        let reduced = &outcome.presentation;
        if reduced.generators != expected || !reduced.relators.is_empty() {
            return Err(TwinError::Invalid(format!(
                "basis did not survive simplification: {} generators, {} relators",
                reduced.generators.len(),
                reduced.relators.len()
            )));
        }
        Ok(PureBasis { cosets, outcome })
    }

    /// The shared instance.
    pub fn get() -> Result<&'static PureBasis> {
        static BASIS: OnceLock<std::result::Result<PureBasis, TwinError>> = OnceLock::new();
        BASIS.get_or_init(PureBasis::build).as_ref().map_err(Clone::clone)
    }

    pub fn express(&self, w: &CoxWord) -> Result<FreeWord> {
        let tau = self.cosets.rewrite_tau(w)?;
        let letters = self
            .outcome
            .rewrite(&tau)
            .into_iter()
            .map(|(s, e)| {
                let index = s[1..].parse::<u8>().expect("survivors are b1..b7");
                FreeLetter { index, sign: e as i8 }
            })
            .collect();
        Ok(FreeWord(letters))
    }
}

/// Expresses a pure word of `T_4` in the basis `b_1..b_7`.
pub fn express_pure(w: &CoxWord) -> Result<FreeWord> {
    if !is_pure(w, 4)? {
        return Err(TwinError::NotPure(w.to_string()));
    }
    PureBasis::get()?.express(w)
}

/// Expands a free word back into `T_4` using the basis words.
pub fn expand_free(w: &FreeWord) -> CoxWord {
    let basis = basis_words();
    let mut out = CoxWord::identity();
    for l in w.letters() {
        let b = &basis[l.index as usize - 1];
        out = if l.sign > 0 { out.concat(b) } else { out.concat(&crate::word::invert(b)) };
    }
    out
}

/// How a surviving generator of a simplified `PT_4` presentation relates to
/// the basis `b_1..b_7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisMatch {
    /// The meaning equals `b_index` or its inverse.
    Basis { index: usize, inverse: bool },
    /// The meaning equals `(s2 s1)^3 ((s2 s3)^3)^{s1 s2 s1}` or its inverse,
    /// which the cube relation rewrites as `b_7^{-1} b_1^{-1}`.
    CubeRelation { inverse: bool },
}

/// `(s2 s1)^3 ((s2 s3)^3)^{s1 s2 s1}`, the generator `S[s2s1s3s2s1,s3]`.
pub fn cube_relation_word() -> CoxWord {
    parse_word("(s2 s1)^3 s1 s2 s1 (s2 s3)^3 s1 s2 s1").expect("literal parses")
}

/// Matches each meaning against `b_i^{±1}`, then against the cube-relation
/// word.
pub fn match_basis(meaning: &CoxWord) -> Result<Option<BasisMatch>> {
    let spec = GroupSpec::new(4)?;
    let inv = crate::word::invert(meaning);
    for (i, b) in basis_words().iter().enumerate() {
        if crate::word::equal(meaning, b, &spec)? {
            return Ok(Some(BasisMatch::Basis { index: i + 1, inverse: false }));
        }
        if crate::word::equal(&inv, b, &spec)? {
            return Ok(Some(BasisMatch::Basis { index: i + 1, inverse: true }));
        }
    }
    let c = cube_relation_word();
    if crate::word::equal(meaning, &c, &spec)? {
        return Ok(Some(BasisMatch::CubeRelation { inverse: false }));
    }
    if crate::word::equal(&inv, &c, &spec)? {
        return Ok(Some(BasisMatch::CubeRelation { inverse: true }));
    }
    Ok(None)
}

/// Whether a list of matches accounts for all of `b_1..b_7` exactly once:
/// a cube-relation match stands for `b_7` and requires `b_1` directly.
pub fn matches_cover_basis(matches: &[Option<BasisMatch>]) -> bool {
    let mut covered = [0usize; PT4_RANK];
    let mut has_cube = false;
    for m in matches {
        match m {
            Some(BasisMatch::Basis { index, .. }) => covered[index - 1] += 1,
            Some(BasisMatch::CubeRelation { .. }) => {
                covered[PT4_RANK - 1] += 1;
                has_cube = true;
            }
            None => return false,
        }
    }
    matches.len() == PT4_RANK && covered.iter().all(|&c| c == 1) && (!has_cube || covered[0] == 1)
}

/// Final matching pass on a simplified `PT_4` presentation: a survivor
/// equal to the cube-relation word is traded for `b_7` by one Tietze move,
/// using `x = b_7^{-1} b_1^{-1}` with `b_1` taken from the survivor matching
/// it. Presentations without such a survivor are returned unchanged.
pub fn align_to_basis(p: &Presentation) -> Result<Presentation> {
    let mut cube = None;
    let mut b1 = None;
    for g in &p.generators {
        let meaning = p.meaning(g).ok_or_else(|| TwinError::Invalid(format!("no meaning for {g}")))?;
        match match_basis(meaning)? {
            Some(BasisMatch::CubeRelation { inverse }) => cube = Some((g.clone(), inverse)),
            Some(BasisMatch::Basis { index: 1, inverse }) => b1 = Some((g.clone(), inverse)),
            _ => {}
        }
    }
    let (Some((x, x_inv)), Some((y, y_inv))) = (cube, b1) else {
        return Ok(p.clone());
    };
    // b7 = b1^{-1} x^{-1}, or b1^{-1} x when x matches the inverse.
    let definition = vec![(y, if y_inv { 1 } else { -1 }), (x.clone(), if x_inv { 1 } else { -1 })];
    let b7 = basis_words().pop().expect("seven basis words");
    let name = format!("b{PT4_RANK}");
    let extended = adjoin_generator(p, &name, b7, &definition);
    let protected = extended.generators.iter().filter(|g| **g != x).cloned().collect();
    let outcome = tietze_simplify_with(&extended, &TietzeOptions { protected, ..Default::default() });
    Ok(outcome.presentation)
}

/// One entry of the action table checked from first principles.
#[derive(Clone, Debug)]
pub struct EquivarianceCase {
    pub basis: usize,
    pub generator: usize,
    pub table: FreeWord,
    pub computed: FreeWord,
}

impl EquivarianceCase {
    pub fn holds(&self) -> bool {
        self.table == self.computed
    }
}

/// For every `b_i` and `g in {s1, s2, s3}`: `express_pure(b_i^g)` against
/// the stored `phi_4(g)(b_i)`.
pub fn equivariance_cases() -> Result<Vec<EquivarianceCase>> {
    let basis = basis_words();
    let mut out = Vec::new();
    for g in 1..=3 {
        let aut = phi4_generator(g)?;
        let gw = CoxWord::from_indices(&[g as u8]);
        for (i, b) in basis.iter().enumerate() {
            out.push(EquivarianceCase {
                basis: i + 1,
                generator: g,
                table: aut.image(i + 1).clone(),
                computed: express_pure(&conjugate(b, &gw))?,
            });
        }
    }
    Ok(out)
}

/// Square matrix over `Z_2`; column `j` holds the parity vector of the
/// image of basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z2Matrix {
    cols: Vec<Vec<u8>>,
}

impl Z2Matrix {
    pub fn identity(n: usize) -> Self {
        Z2Matrix { cols: (0..n).map(|j| (0..n).map(|i| u8::from(i == j)).collect()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// Entry in row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.cols[j][i]
    }

    /// `self` applied after `other`.
    pub fn mul(&self, other: &Z2Matrix) -> Z2Matrix {
        let n = self.dim();
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut out = vec![0u8; n];
                for (k, &bit) in col.iter().enumerate() {
                    if bit == 1 {
                        for (o, &x) in out.iter_mut().zip(&self.cols[k]) {
                            *o ^= x;
                        }
                    }
                }
                out
            })
            .collect();
        Z2Matrix { cols }
    }

    /// Whether the span of the first `k` basis vectors is invariant.
    pub fn preserves_prefix(&self, k: usize) -> bool {
        self.cols[..k].iter().all(|c| c[k..].iter().all(|&b| b == 0))
    }

    /// Restriction to the span of the first `k` basis vectors.
    pub fn restrict(&self, k: usize) -> Option<Z2Matrix> {
        self.preserves_prefix(k).then(|| Z2Matrix { cols: self.cols[..k].iter().map(|c| c[..k].to_vec()).collect() })
    }

    /// The permutation this matrix induces on basis vectors, if any
    /// (`perm[j]` = index of the image of `e_j`).
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let perm: Vec<usize> = self
            .cols
            .iter()
            .map(|c| {
                let ones: Vec<usize> = (0..c.len()).filter(|&i| c[i] == 1).collect();
                (ones.len() == 1).then(|| ones[0])
            })
            .collect::<Option<_>>()?;
        let distinct: HashSet<usize> = perm.iter().copied().collect();
        (distinct.len() == perm.len()).then_some(perm)
    }
}

/// The induced map on `PT_4 / V = Z_2^7`, `V` generated by squares.
pub fn quotient_action(f: &FreeAut) -> Z2Matrix {
    Z2Matrix { cols: f.images.iter().map(|w| w.parity(f.rank())).collect() }
}

/// Order of the matrix group generated by `gens`.
pub fn matrix_group_order(gens: &[Z2Matrix]) -> usize {
    let Some(first) = gens.first() else { return 1 };
    let id = Z2Matrix::identity(first.dim());
    let mut seen: HashSet<Z2Matrix> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in gens {
            let next = m.mul(g);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.len()
}

/// Searches the nontrivial elements of `T_4` of length at most `max_len`
/// for one acting trivially; returns the first in length-then-lex order.
pub fn faithfulness_search(max_len: usize) -> Result<Option<CoxWord>> {
    let spec = GroupSpec::new(4)?;
    let gens: Vec<FreeAut> = (1..=3).map(phi4_generator).collect::<Result<_>>()?;
    let levels = elements_by_length(&spec, max_len);
    let mut known: std::collections::HashMap<CoxWord, FreeAut> =
        std::collections::HashMap::from([(CoxWord::identity(), FreeAut::identity(PT4_RANK))]);
    for level in levels.iter().skip(1) {
        // every element of length k is w s with w of length k-1 a prefix of its normal form
        let computed: Vec<(CoxWord, FreeAut)> = level
            .par_iter()
            .map(|w| {
                let (prefix, last) = w.letters().split_at(w.len() - 1);
                let prefix = CoxWord::new(prefix.to_vec());
                let last: CoxLetter = last[0];
                let aut = compose(&known[&prefix], &gens[last.index as usize - 1]);
                (w.clone(), aut)
            })
            .collect();
        for (w, aut) in &computed {
            if aut.is_identity() {
                return Ok(Some(w.clone()));
            }
        }
        known.extend(computed);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(s: &str) -> FreeWord {
        parse_free_word(s).unwrap()
    }

    fn w(s: &str) -> CoxWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert!(free_reduce(&fw("b1 b1^-1")).is_empty());
        assert_eq!(free_reduce(&fw("b2 b3 b3^-1 b4")), fw("b2 b4"));
        assert_eq!(free_reduce(&fw("b1^-1 b1 b1")), fw("b1"));
    }

    #[test]
    fn apply_examples() {
        let s1 = phi4_generator(1).unwrap();
        let s2 = phi4_generator(2).unwrap();
        assert_eq!(apply_aut(&s1, &fw("b3")), fw("b4"));
        assert_eq!(apply_aut(&s2, &fw("b4")), fw("b1^-1 b4^-1 b1"));
        let x = fw("b2 b5^-1 b7");
        assert_eq!(apply_aut(&FreeAut::identity(7), &x), x);
    }

    #[test]
    fn compose_examples() {
        let s1 = phi4_generator(1).unwrap();
        let s3 = phi4_generator(3).unwrap();
        assert!(compose(&s1, &s1).is_identity());
        assert_eq!(compose(&s1, &s3), compose(&s3, &s1));
        assert_eq!(compose(&s1, &FreeAut::identity(7)), s1);
    }

    #[test]
    fn phi4_examples() {
        let s3 = phi4(&w("s3")).unwrap();
        assert_eq!(s3.image(7), &fw("b2^-1 b6^-1 b4^-1 b1 b7 b3 b5"));
        assert!(phi4(&CoxWord::identity()).unwrap().is_identity());
        let cube = phi4(&w("(s1 s2)^3")).unwrap();
        assert_eq!(cube, FreeAut::inner(7, &fw("b1")));
        assert!(phi4(&w("s4")).is_err());
    }

    #[test]
    fn express_examples() {
        assert_eq!(express_pure(&w("(s1 s2)^3")).unwrap(), fw("b1"));
        assert!(express_pure(&CoxWord::identity()).unwrap().is_empty());
        assert!(matches!(express_pure(&w("s1")), Err(TwinError::NotPure(_))));
        // the eliminated eighth generator
        let eighth = w("s1 s2 s1 (s2 s3)^3 s1 s2 s1");
        let e = express_pure(&eighth).unwrap();
        assert_eq!(e, fw("b1 b7^-1 b1^-1"));
        let spec = GroupSpec::new(4).unwrap();
        assert!(crate::word::equal(&expand_free(&e), &eighth, &spec).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let s1 = quotient_action(&phi4_generator(1).unwrap()).restrict(4).unwrap();
        assert_eq!(s1.as_permutation().unwrap(), vec![0, 1, 3, 2]);
        let s3 = quotient_action(&phi4_generator(3).unwrap()).restrict(4).unwrap();
        assert_eq!(s3.as_permutation().unwrap(), vec![1, 0, 2, 3]);
        assert_eq!(quotient_action(&FreeAut::identity(7)), Z2Matrix::identity(7));
    }

    #[test]
    fn faithfulness_small_depths() {
        assert_eq!(faithfulness_search(1).unwrap(), None);
        assert_eq!(faithfulness_search(2).unwrap(), None);
    }

    #[test]
    fn cube_relation_word_in_basis() {
        assert_eq!(express_pure(&cube_relation_word()).unwrap(), fw("b7^-1 b1^-1"));
        assert_eq!(match_basis(&cube_relation_word()).unwrap(), Some(BasisMatch::CubeRelation { inverse: false }));
        assert_eq!(match_basis(&w("s3 (s2 s1)^3 s3")).unwrap(), Some(BasisMatch::Basis { index: 2, inverse: true }));
    }

    #[test]
    fn aligned_pt4_matches_basis_directly() {
        let p = crate::tietze::tietze_simplify(&crate::schreier::subgroup_presentation(4).unwrap());
        let aligned = align_to_basis(&p).unwrap();
        assert_eq!((aligned.generators.len(), aligned.relators.len()), (7, 0));
        let matches: Vec<_> =
            aligned.generators.iter().map(|g| match_basis(aligned.meaning(g).unwrap()).unwrap()).collect();
        assert!(matches.iter().all(|m| matches!(m, Some(BasisMatch::Basis { .. }))));
        assert!(matches_cover_basis(&matches));
    }

    #[test]
    fn bad_images_rejected() {
        assert!(FreeAut::new(vec![fw("b2")]).is_err());
    }
}
