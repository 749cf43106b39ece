//! Generators of `PT_n` relative to `PT_{n-1}`, the resulting rank bound,
//! and the two formulas for the first Betti number.
//!
//! New generators are conjugates `((s_{l-1} s_l)^3)^λ` with `λ` drawn from
//! the transversal, never containing a factor `m_{l,·}`:
//!
//! * `l = 2`: `λ = m_3 ... m_{n-1}`, every factor nontrivial;
//! * `2 < l < n-1`: `λ = m_{l-2} m_{l-1} m_{l+1} ... m_{n-1}` with the
//!   trailing factors nontrivial and the pair `(m_{l-2}, m_{l-1})` either
//!   both trivial or with `m_{l-2}` nontrivial;
//! * `l = n-1`: `λ = m_{n-3} m_{n-2}` under the same pair rule, minus the
//!   single conjugate that the cube relation expresses through the others.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Result, TwinError};
use crate::schreier::TransversalElem;
use crate::twin::cube;
use crate::word::{conjugate, normal_form, CoxWord, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureGenerator {
    pub l: usize,
    pub conjugator: TransversalElem,
    pub word: CoxWord,
}

impl PureGenerator {
    fn new(l: usize, indices: Vec<u8>) -> Self {
        let conjugator = TransversalElem::new(indices).expect("indices in range");
        let word = conjugate(&cube(l - 1, l), &conjugator.word());
        PureGenerator { l, conjugator, word }
    }

    /// The same generator viewed in `T_n` for a larger `n`.
    pub fn embed(&self, n: usize) -> PureGenerator {
        let mut indices = self.conjugator.indices().to_vec();
        indices.extend(indices.len() as u8 + 1..n as u8);
        PureGenerator {
            l: self.l,
            conjugator: TransversalElem::new(indices).expect("trivial padding"),
            word: self.word.clone(),
        }
    }
}

fn check_rank(n: usize) -> Result<()> {
    if (3..=7).contains(&n) {
        Ok(())
    } else {
        Err(TwinError::UnsupportedRank(n, "3..=7"))
    }
}

/// All index tuples with `i_k` ranging over `choices[k-1]`.
fn tuples(choices: &[Vec<u8>]) -> Vec<Vec<u8>> {
    choices.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.into_iter()
            .flat_map(|t| {
                opts.iter().map(move |&i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect()
    })
}

fn trivial(k: usize) -> Vec<u8> {
    vec![k as u8]
}

fn nontrivial(k: usize) -> Vec<u8> {
    (0..k as u8).collect()
}

/// `(i_{l-2}, i_{l-1})` pairs: both trivial, or `m_{l-2}` nontrivial with
/// `m_{l-1}` arbitrary.
fn pair_choices(l: usize) -> Vec<(u8, u8)> {
    let mut out = vec![((l - 2) as u8, (l - 1) as u8)];
    for a in 0..(l - 2) as u8 {
        for b in 0..l as u8 {
            out.push((a, b));
        }
    }
    out
}

fn candidates(n: usize, l: usize) -> Vec<PureGenerator> {
    if l == 2 {
        let mut choices = vec![trivial(1), trivial(2)];
        choices.extend((3..n).map(nontrivial));
        return tuples(&choices).into_iter().map(|t| PureGenerator::new(2, t)).collect();
    }
    let mut out = Vec::new();
    for (a, b) in pair_choices(l) {
        let mut choices: Vec<Vec<u8>> = (1..l - 2).map(trivial).collect();
        choices.push(vec![a]);
        choices.push(vec![b]);
        choices.push(trivial(l));
        choices.extend((l + 1..n).map(nontrivial));
        out.extend(tuples(&choices).into_iter().map(|t| PureGenerator::new(l, t)));
    }
    out
}

/// Indices of the conjugator removed at `l = n-1`: `m_{n-3,n-4} m_{n-2,n-4}`.
fn removed_indices(n: usize) -> Vec<u8> {
    let mut t: Vec<u8> = (1..n as u8).collect();
    t[n - 4] = (n - 4) as u8;
    t[n - 3] = (n - 4) as u8;
    t
}

/// New generators of `PT_n` over `PT_{n-1}`, sorted by `(l, conjugator)`.
/// For `n = 3` this is the single generator `(s1 s2)^3`.
pub fn pure_generators(n: usize) -> Result<Vec<PureGenerator>> {
    check_rank(n)?;
    if n == 3 {
        return Ok(vec![PureGenerator::new(2, vec![1, 2])]);
    }
    let removed = removed_indices(n);
    let mut out: Vec<PureGenerator> = (2..n)
        .into_par_iter()
        .flat_map_iter(|l| candidates(n, l))
        .filter(|g| !(g.l == n - 1 && g.conjugator.indices() == removed.as_slice()))
        .collect();
    out.sort_by(|a, b| (a.l, &a.conjugator).cmp(&(b.l, &b.conjugator)));
    Ok(out)
}

/// The conjugate dropped from the `l = n-1` family, `n >= 4`.
pub fn removed_generator(n: usize) -> Result<PureGenerator> {
    check_rank(n)?;
    if n < 4 {
        return Err(TwinError::UnsupportedRank(n, "4..=7"));
    }
    Ok(PureGenerator::new(n - 1, removed_indices(n)))
}

/// The full generating set of `PT_n`: new generators of every `PT_k`,
/// `3 <= k <= n`, embedded in `T_n`.
pub fn all_pure_generators(n: usize) -> Result<Vec<PureGenerator>> {
    check_rank(n)?;
    let mut out = Vec::new();
    for k in 3..=n {
        out.extend(pure_generators(k)?.iter().map(|g| g.embed(n)));
    }
    Ok(out)
}

/// Two emitted generators that are equal in `T_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coincidence {
    pub first: PureGenerator,
    pub second: PureGenerator,
}

/// Pairwise equality over [`all_pure_generators`]; empty when the set is
/// duplicate-free.
pub fn coincidences(n: usize) -> Result<Vec<Coincidence>> {
    let gens = all_pure_generators(n)?;
    let spec = GroupSpec::new(n)?;
    let forms: Vec<CoxWord> = gens.par_iter().map(|g| normal_form(&g.word, &spec)).collect::<Result<_>>()?;
    let mut seen: HashMap<&CoxWord, usize> = HashMap::new();
    let mut out = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        if let Some(&j) = seen.get(f) {
            out.push(Coincidence { first: gens[j].clone(), second: gens[i].clone() });
        } else {
            seen.insert(f, i);
        }
    }
    Ok(out)
}

/// Upper bound `r_n` on the rank of `PT_n`, `n >= 4`:
/// `r_n = r_{n-1} + (n-1)!/2 + (n-1)! Σ_{l=3}^{n-2} (l-1)^2/l! + (n-3)(n-1)`.
pub fn rank_bound(n: usize) -> Result<u128> {
    if !(4..=30).contains(&n) {
        return Err(TwinError::UnsupportedRank(n, "4..=30"));
    }
    let mut r: u128 = 7;
    for k in 5..=n as u128 {
        let mut step = 0u128;
        for l in 2..=k - 2 {
            // (k-1)!/l! = (l+1)(l+2)...(k-1)
            let tail: u128 = (l + 1..k).product();
            step += tail * (l - 1) * (l - 1);
        }
        r += step + (k - 3) * (k - 1);
    }
    Ok(r)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_betti(n: usize) -> Result<()> {
    if (3..=100).contains(&n) {
        Ok(())
    } else {
        Err(TwinError::UnsupportedRank(n, "3..=100"))
    }
}

/// `Σ_{i=3}^n C(n,i) C(i-1,2)`.
pub fn betti_binomial(n: usize) -> Result<u128> {
    check_betti(n)?;
    let n = n as u128;
    Ok((3..=n).map(|i| binomial(n, i) * binomial(i - 1, 2)).sum())
}

/// `2^{n-3} (n^2 - 5n + 8) - 1`.
pub fn betti_closed_form(n: usize) -> Result<u128> {
    check_betti(n)?;
    let n = n as u128;
    Ok((1u128 << (n - 3)) * (n * n + 8 - 5 * n) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twin::is_pure;

    #[test]
    fn pt3_is_cyclic_on_the_cube() {
        let g = pure_generators(3).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].word, cube(1, 2));
    }

    #[test]
    fn counts() {
        assert_eq!(pure_generators(4).unwrap().len(), 6);
        assert_eq!(pure_generators(5).unwrap().len(), 36);
        assert_eq!(pure_generators(6).unwrap().len(), 200);
        assert_eq!(all_pure_generators(4).unwrap().len(), 7);
        assert!(pure_generators(2).is_err());
        assert!(pure_generators(8).is_err());
    }

    #[test]
    fn rank_bounds() {
        assert_eq!(rank_bound(4).unwrap(), 7);
        assert_eq!(rank_bound(5).unwrap(), 43);
        assert_eq!(rank_bound(6).unwrap(), 243);
        assert!(rank_bound(3).is_err());
    }

    #[test]
    fn betti_values() {
        for (n, b) in [(3, 1), (4, 7), (5, 31)] {
            assert_eq!(betti_binomial(n).unwrap(), b);
            assert_eq!(betti_closed_form(n).unwrap(), b);
        }
    }

    #[test]
    fn emitted_words_are_pure_and_refined() {
        for n in 3..=5 {
            for g in pure_generators(n).unwrap() {
                assert!(is_pure(&g.word, n).unwrap());
                if g.l < n {
                    assert!(!g.conjugator.has_factor(g.l));
                }
            }
        }
    }

    #[test]
    fn removed_generator_for_t4() {
        let r = removed_generator(4).unwrap();
        assert_eq!(r.conjugator.word(), CoxWord::from_indices(&[1, 2, 1]));
        assert!(coincidences(5).unwrap().is_empty());
    }

    #[test]
    fn no_further_coincidences_up_to_seven() {
        for n in 4..=7 {
            assert_eq!(coincidences(n).unwrap(), Vec::new(), "n={n}");
        }
    }
}
