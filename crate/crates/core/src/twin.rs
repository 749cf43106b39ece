//! Structure specific to `T_n`: the projection onto the symmetric group,
//! pure-twin membership, the abelianization, the center search and the
//! equational identities used by the verification suites.
//!
//! Permutations compose left to right, in word order: `compose(p, q)` applies
//! `p` first and then `q`, so `perm_image(uv) = compose(perm_image(u),
//! perm_image(v))`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Result, TwinError};
use crate::word::{self, conjugate, equal, invert, CoxLetter, CoxWord, GroupSpec};

/// A bijection of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Checked constructor from one-line notation (1-based values).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(TwinError::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the point `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Right action of an adjacent transposition `(i, i+1)` on values.
    pub(crate) fn then_swap_values(&mut self, i: usize) {
        for x in &mut self.images {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }

    /// Sign as a parity bit: true for odd permutations.
    pub fn is_odd(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] - 1;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Image of a letter sequence in `S_n`, ignoring letter kinds; both `s_i`
/// and `rho_i` map to `(i, i+1)`.
pub(crate) fn perm_of_letters(letters: &[CoxLetter], n: usize) -> Permutation {
    let mut p = Permutation::identity(n);
    for l in letters {
        p.then_swap_values(l.index as usize);
    }
    p
}

/// The projection `pi: T_n -> S_n`, `s_i -> (i, i+1)`.
pub fn perm_image(w: &CoxWord, n: usize) -> Result<Permutation> {
    GroupSpec::new(n)?.check(w)?;
    Ok(perm_of_letters(w.letters(), n))
}

/// Membership in the pure twin group `PT_n = ker(pi)`.
pub fn is_pure(w: &CoxWord, n: usize) -> Result<bool> {
    Ok(perm_image(w, n)?.is_identity())
}

pub fn verify_identity(lhs: &CoxWord, rhs: &CoxWord, n: usize) -> Result<bool> {
    equal(lhs, rhs, &GroupSpec::new(n)?)
}

/// Image in the abelianization `T_n -> Z_2^{n-1}`: exponent-sum parities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianImage(pub Vec<u8>);

impl AbelianImage {
    pub fn zero(n: usize) -> Self {
        AbelianImage(vec![0; n - 1])
    }

    pub fn add(&self, other: &AbelianImage) -> AbelianImage {
        AbelianImage(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }
}

pub fn abelian_image(w: &CoxWord, n: usize) -> Result<AbelianImage> {
    GroupSpec::new(n)?.check(w)?;
    let mut img = AbelianImage::zero(n);
    for l in w.iter() {
        img.0[l.index as usize - 1] ^= 1;
    }
    Ok(img)
}

/// Membership in the commutator subgroup `T_n'`.
pub fn in_commutator_subgroup(w: &CoxWord, n: usize) -> Result<bool> {
    Ok(abelian_image(w, n)?.is_zero())
}

/// Nontrivial elements of length at most `max_len` that commute with every
/// generator. Returned as sorted normal forms.
pub fn center_search(n: usize, max_len: usize) -> Result<Vec<CoxWord>> {
    let spec = GroupSpec::new(n)?;
    let gens: Vec<CoxWord> = spec.generators().map(|g| CoxWord::new(vec![g])).collect();
    let candidates: Vec<CoxWord> = word::elements_by_length(&spec, max_len).into_iter().skip(1).flatten().collect();
    let mut central: Vec<CoxWord> = candidates
        .into_par_iter()
        .filter(|w| {
            gens.iter()
                .all(|g| word::normal_form_letters((w * g).letters()) == word::normal_form_letters((g * w).letters()))
        })
        .collect();
    central.sort();
    Ok(central)
}

/// Commutator `[a, b] = a^{-1} b^{-1} a b`, unreduced.
pub fn commutator(a: &CoxWord, b: &CoxWord) -> CoxWord {
    let mut out = invert(a);
    out = out.concat(&invert(b));
    out = out.concat(a);
    out.concat(b)
}

/// Checks `[(s1 s2)^{2^{i-1}}, s1] = (s1 s2)^{-2^i}` in `T_3`, the step
/// behind `gamma_{i+1}(T_3) = <(s1 s2)^{2^i}>`.
pub fn lcs_identity_t3(i: u32) -> Result<bool> {
    if i == 0 {
        return Err(TwinError::Invalid("lower central index starts at 1".into()));
    }
    let base = CoxWord::from_indices(&[1, 2]);
    let lhs = commutator(&base.pow(1usize << (i - 1)), &CoxWord::from_indices(&[1]));
    let rhs = invert(&base.pow(1usize << i));
    verify_identity(&lhs, &rhs, 3)
}

/// `s_{from} s_{from+1} ... s_{to}` (increasing) or empty when `from > to`.
pub fn ascending(from: usize, to: usize) -> CoxWord {
    (from..=to).map(|i| CoxLetter::s(i as u8)).collect()
}

/// `(s_a s_b)^3`.
pub fn cube(a: usize, b: usize) -> CoxWord {
    CoxWord::from_indices(&[a as u8, b as u8]).pow(3)
}

/// A single instance of an equational identity in `T_n`.
#[derive(Clone, Debug)]
pub struct IdentityCase {
    pub label: String,
    pub rank: usize,
    pub lhs: CoxWord,
    pub rhs: CoxWord,
}

impl IdentityCase {
    pub fn holds(&self) -> Result<bool> {
        verify_identity(&self.lhs, &self.rhs, self.rank)
    }
}

/// Conjugated cube swap: `s_{l-1} ((s_{l-1} s_l)^3)^c = ((s_l s_{l-1})^3)^c s_{l-1}`
/// with `c = s_{l+1} ... s_{n-1}`, for `2 <= l <= n-1`.
pub fn commuting_cube_cases(n: usize) -> Vec<IdentityCase> {
    (2..n)
        .map(|l| {
            let c = ascending(l + 1, n - 1);
            let s = CoxWord::from_indices(&[(l - 1) as u8]);
            IdentityCase {
                label: format!("cube-shift n={n} l={l}"),
                rank: n,
                lhs: s.concat(&conjugate(&cube(l - 1, l), &c)),
                rhs: conjugate(&cube(l, l - 1), &c).concat(&s),
            }
        })
        .collect()
}

/// `m_{k,i} = s_k s_{k-1} ... s_{i+1}` (empty when `i = k`).
pub fn m_factor(k: usize, i: usize) -> CoxWord {
    (i + 1..=k).rev().map(|j| CoxLetter::s(j as u8)).collect()
}

/// Transversal shifts of the cube: for `i + 1 < l <= n - 1`,
/// `m s_l m^{-1} s_{l-1} = ((s_l s_{l-1})^3)^{s_{l+1} ... s_{n-1}}` with
/// `m = m_{n-1,i}`; when `l = n - 1` the conjugator is empty.
pub fn transversal_cube_cases(n: usize) -> Vec<IdentityCase> {
    let mut out = Vec::new();
    for i in 0..n - 1 {
        for l in i + 2..n {
            let m = m_factor(n - 1, i);
            let lhs = m
                .concat(&CoxWord::from_indices(&[l as u8]))
                .concat(&invert(&m))
                .concat(&CoxWord::from_indices(&[(l - 1) as u8]));
            let rhs = if l == n - 1 { cube(l, l - 1) } else { conjugate(&cube(l, l - 1), &ascending(l + 1, n - 1)) };
            let part = if l == n - 1 { 3 } else { 2 };
            out.push(IdentityCase { label: format!("transversal-cube({part}) n={n} i={i} l={l}"), rank: n, lhs, rhs });
        }
    }
    out
}

/// The relation among the last-index cube conjugates, valid for `n >= 4`:
/// `(s_{n-2}s_{n-3})^3 ((s_{n-2}s_{n-1})^3)^{m_{n-3,n-4} m_{n-2,n-4}} (s_{n-3}s_{n-2})^3
///  = ((s_{n-1}s_{n-2})^3)^{m_{n-3,n-4} m_{n-2,n-3}}`.
pub fn cube_relation_case(n: usize) -> IdentityCase {
    assert!(n >= 4, "cube relation needs n >= 4");
    let left_conj = m_factor(n - 3, n - 4).concat(&m_factor(n - 2, n - 4));
    let right_conj = m_factor(n - 3, n - 4).concat(&m_factor(n - 2, n - 3));
    IdentityCase {
        label: format!("cube-relation n={n}"),
        rank: n,
        lhs: cube(n - 2, n - 3).concat(&conjugate(&cube(n - 2, n - 1), &left_conj)).concat(&cube(n - 3, n - 2)),
        rhs: conjugate(&cube(n - 1, n - 2), &right_conj),
    }
}

/// `a_{e,k} = s1^e (s1 s2)^k s3 (s1 s2)^{-k} s1^e` in `T_4`.
pub fn d4_generator(e: bool, k: i64) -> CoxWord {
    let base = CoxWord::from_indices(&[1, 2]);
    let pow = |k: i64| {
        if k >= 0 {
            base.pow(k as usize)
        } else {
            invert(&base).pow(k.unsigned_abs() as usize)
        }
    };
    let s1 = if e { CoxWord::from_indices(&[1]) } else { CoxWord::identity() };
    s1.concat(&pow(k)).concat(&CoxWord::from_indices(&[3])).concat(&pow(-k)).concat(&s1)
}

/// Relations of the kernel of `T_4 -> T_3`: `a_{0,-k} a_{1,k} = 1` and
/// `a_{0,k}^2 = 1` for `|k| <= bound`.
pub fn d4_relation_cases(bound: i64) -> Vec<IdentityCase> {
    let mut out = Vec::new();
    for k in -bound..=bound {
        out.push(IdentityCase {
            label: format!("a(0,{})a(1,{k}) = 1", -k),
            rank: 4,
            lhs: d4_generator(false, -k).concat(&d4_generator(true, k)),
            rhs: CoxWord::identity(),
        });
        out.push(IdentityCase {
            label: format!("a(0,{k})^2 = 1"),
            rank: 4,
            lhs: d4_generator(false, k).pow(2),
            rhs: CoxWord::identity(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_word;

    fn w(s: &str) -> CoxWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn perm_image_examples() {
        assert_eq!(perm_image(&w("s1"), 3).unwrap(), Permutation::transposition(3, 1, 2));
        assert!(perm_image(&w("(s1 s2)^3"), 3).unwrap().is_identity());
        assert_eq!(perm_image(&w("s2 s1 s2"), 3).unwrap(), Permutation::transposition(3, 1, 3));
        assert!(perm_image(&w("s3"), 3).is_err());
    }

    #[test]
    fn composition_is_word_order() {
        // s1 then s2: 1 -> 2 -> 3
        let p = perm_image(&w("s1 s2"), 3).unwrap();
        assert_eq!(p.apply(1), 3);
        let q = perm_image(&w("s1"), 3).unwrap().compose(&perm_image(&w("s2"), 3).unwrap());
        assert_eq!(p, q);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn purity_examples() {
        assert!(is_pure(&w("(s1 s2)^3"), 3).unwrap());
        assert!(!is_pure(&w("s1"), 3).unwrap());
        assert!(is_pure(&conjugate(&w("(s2 s3)^3"), &w("s1")), 4).unwrap());
    }

    #[test]
    fn abelian_examples() {
        assert_eq!(abelian_image(&w("(s1 s2)^3"), 3).unwrap(), AbelianImage(vec![1, 1]));
        assert!(!in_commutator_subgroup(&w("(s1 s2)^3"), 3).unwrap());
        assert!(in_commutator_subgroup(&w("(s1 s2)^2"), 3).unwrap());
        assert!(abelian_image(&CoxWord::identity(), 3).unwrap().is_zero());
        // [s1, s2] = (s1 s2)^2
        assert!(verify_identity(&commutator(&w("s1"), &w("s2")), &w("(s1 s2)^2"), 3).unwrap());
    }

    #[test]
    fn center_examples() {
        assert!(center_search(3, 6).unwrap().is_empty());
        assert!(center_search(5, 5).unwrap().is_empty());
        assert!(center_search(4, 0).unwrap().is_empty());
        // T_2 = Z_2 is abelian
        assert_eq!(center_search(2, 3).unwrap(), vec![w("s1")]);
    }

    #[test]
    fn lower_central_identities() {
        for i in 1..=6 {
            assert!(lcs_identity_t3(i).unwrap(), "i = {i}");
        }
        assert!(lcs_identity_t3(0).is_err());
    }

    #[test]
    fn generalized_relation_at_rank_four() {
        let eq = w("(s2 s1)^3 s1 s2 s1 (s2 s3)^3 s1 s2 s1 (s1 s2)^3");
        let rhs = w("s2 s1 (s3 s2)^3 s1 s2");
        assert!(verify_identity(&eq, &rhs, 4).unwrap());
        let case = cube_relation_case(4);
        assert_eq!(case.lhs, eq);
        assert_eq!(case.rhs, rhs);
    }

    #[test]
    fn transversal_cube_instance() {
        // n = 3, l = 2, m = s2 s1
        let lhs = w("s2 s1 s2 (s2 s1)^-1 s1");
        assert!(verify_identity(&lhs, &w("(s2 s1)^3"), 3).unwrap());
        assert!(transversal_cube_cases(3).iter().all(|c| c.holds().unwrap()));
    }

    #[test]
    fn d4_relation_instance() {
        let lhs = d4_generator(false, -2).concat(&d4_generator(true, 2));
        assert!(verify_identity(&lhs, &CoxWord::identity(), 4).unwrap());
        assert_eq!(d4_generator(false, 0), w("s3"));
    }

    #[test]
    fn m_factors() {
        assert_eq!(m_factor(3, 0), w("s3 s2 s1"));
        assert_eq!(m_factor(3, 2), w("s3"));
        assert!(m_factor(3, 3).is_empty());
    }
}
