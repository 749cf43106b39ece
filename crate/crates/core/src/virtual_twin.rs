//! Virtual twin groups `VT_n` and welded twin groups `WT_n`.
//!
//! Generators are `s_i` and `ρ_i` (written `r_i`). Besides the twin
//! relations, `VT_n` has
//!
//! ```text
//! ρ_i^2 = 1,   ρ_i ρ_j = ρ_j ρ_i (|i-j| >= 2),   ρ_i ρ_{i+1} ρ_i = ρ_{i+1} ρ_i ρ_{i+1},
//! s_i ρ_j = ρ_j s_i (|i-j| >= 2),                ρ_i ρ_{i+1} s_i = s_{i+1} ρ_i ρ_{i+1},
//! ```
//!
//! and `WT_n` adds `ρ_i s_{i+1} s_i = s_{i+1} s_i ρ_{i+1}`. No normal form
//! is known here, so equality is only semi-decided by bounded search.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Result, TwinError};
use crate::twin::{perm_of_letters, Permutation};
use crate::word::{invert, CoxLetter, CoxWord, GroupSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Involution,
    FarCommute,
    RhoInvolution,
    RhoFarCommute,
    RhoBraid,
    MixedFarCommute,
    Mixed,
    Welded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: CoxWord,
    pub rhs: CoxWord,
}

impl Relation {
    /// `lhs rhs^{-1}`.
    pub fn relator(&self) -> CoxWord {
        self.lhs.concat(&invert(&self.rhs))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug)]
pub struct VirtualPresentation {
    pub rank: usize,
    pub welded: bool,
    pub relations: Vec<Relation>,
}

impl VirtualPresentation {
    pub fn relators(&self) -> Vec<CoxWord> {
        self.relations.iter().map(Relation::relator).collect()
    }

    pub fn check(&self, w: &CoxWord) -> Result<()> {
        for l in w.iter() {
            if l.index == 0 || l.index as usize >= self.rank {
                return Err(TwinError::IndexOutOfRange { index: l.index as usize, rank: self.rank });
            }
        }
        Ok(())
    }
}

fn word(letters: &[CoxLetter]) -> CoxWord {
    CoxWord::new(letters.to_vec())
}

fn s(i: usize) -> CoxLetter {
    CoxLetter::s(i as u8)
}

fn r(i: usize) -> CoxLetter {
    CoxLetter::rho(i as u8)
}

pub fn vt_presentation(n: usize) -> Result<VirtualPresentation> {
    GroupSpec::new(n)?;
    use RelationKind::*;
    let empty = CoxWord::identity;
    let mut rel = Vec::new();
    for i in 1..n {
        rel.push(Relation { kind: Involution, lhs: word(&[s(i), s(i)]), rhs: empty() });
    }
    for i in 1..n {
        for j in i + 2..n {
            rel.push(Relation { kind: FarCommute, lhs: word(&[s(i), s(j)]), rhs: word(&[s(j), s(i)]) });
        }
    }
    for i in 1..n {
        rel.push(Relation { kind: RhoInvolution, lhs: word(&[r(i), r(i)]), rhs: empty() });
    }
    for i in 1..n {
        for j in i + 2..n {
            rel.push(Relation { kind: RhoFarCommute, lhs: word(&[r(i), r(j)]), rhs: word(&[r(j), r(i)]) });
        }
    }
    for i in 1..n.saturating_sub(1) {
        rel.push(Relation {
            kind: RhoBraid,
            lhs: word(&[r(i), r(i + 1), r(i)]),
            rhs: word(&[r(i + 1), r(i), r(i + 1)]),
        });
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                rel.push(Relation { kind: MixedFarCommute, lhs: word(&[s(i), r(j)]), rhs: word(&[r(j), s(i)]) });
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        rel.push(Relation { kind: Mixed, lhs: word(&[r(i), r(i + 1), s(i)]), rhs: word(&[s(i + 1), r(i), r(i + 1)]) });
    }
    Ok(VirtualPresentation { rank: n, welded: false, relations: rel })
}

pub fn wt_presentation(n: usize) -> Result<VirtualPresentation> {
    let mut p = vt_presentation(n)?;
    p.welded = true;
    for i in 1..n - 1 {
        p.relations.push(Relation {
            kind: RelationKind::Welded,
            lhs: word(&[r(i), s(i + 1), s(i)]),
            rhs: word(&[s(i + 1), s(i), r(i + 1)]),
        });
    }
    Ok(p)
}

/// Image in `S_n`: both `s_i` and `ρ_i` go to `(i, i+1)`.
pub fn vt_perm_image(w: &CoxWord, n: usize) -> Result<Permutation> {
    GroupSpec::new(n)?;
    for l in w.iter() {
        if l.index == 0 || l.index as usize >= n {
            return Err(TwinError::IndexOutOfRange { index: l.index as usize, rank: n });
        }
    }
    Ok(perm_of_letters(w.letters(), n))
}

/// Deletes every `ρ` letter.
pub fn retraction(w: &CoxWord) -> CoxWord {
    w.iter().filter(|l| l.is_s()).collect()
}

/// Relations whose two sides retract to different elements of `T_n`.
pub fn retraction_defects(p: &VirtualPresentation) -> Result<Vec<Relation>> {
    let spec = GroupSpec::new(p.rank)?;
    let mut out = Vec::new();
    for rel in &p.relations {
        if !crate::word::equal(&retraction(&rel.lhs), &retraction(&rel.rhs), &spec)? {
            out.push(rel.clone());
        }
    }
    Ok(out)
}

/// The symmetric-group relations written in the `ρ` letters.
pub fn rho_section_relations(n: usize) -> Result<Vec<(CoxWord, CoxWord)>> {
    GroupSpec::new(n)?;
    let mut out = Vec::new();
    for i in 1..n {
        out.push((word(&[r(i), r(i)]), CoxWord::identity()));
        for j in i + 2..n {
            out.push((word(&[r(i), r(j)]), word(&[r(j), r(i)])));
        }
        if i + 1 < n {
            out.push((word(&[r(i), r(i + 1), r(i)]), word(&[r(i + 1), r(i), r(i + 1)])));
        }
    }
    Ok(out)
}

/// A single rewrite step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Replace `from` by `to` at `pos`, where `(from, to)` is relation
    /// `relation` read forwards or backwards, optionally with both sides
    /// inverted.
    Rewrite {
        relation: usize,
        backwards: bool,
        inverted: bool,
        pos: usize,
    },
    Insert {
        pos: usize,
        letter: CoxLetter,
    },
    Delete {
        pos: usize,
    },
}

/// The words visited from `u` to `v`, with the move producing each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<(Move, CoxWord)>,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundedEquality {
    Equal(Certificate),
    Unknown,
}

impl BoundedEquality {
    pub fn is_equal(&self) -> bool {
        matches!(self, BoundedEquality::Equal(_))
    }
}

fn sides(rel: &Relation, backwards: bool, inverted: bool) -> (Vec<CoxLetter>, Vec<CoxLetter>) {
    let (a, b) = if backwards { (&rel.rhs, &rel.lhs) } else { (&rel.lhs, &rel.rhs) };
    if inverted {
        (invert(a).into_letters(), invert(b).into_letters())
    } else {
        (a.letters().to_vec(), b.letters().to_vec())
    }
}

/// Applies `mv`, or `None` if it does not match `w`.
pub fn apply_move(p: &VirtualPresentation, w: &[CoxLetter], mv: Move) -> Option<Vec<CoxLetter>> {
    match mv {
        Move::Rewrite { relation, backwards, inverted, pos } => {
            let (from, to) = sides(p.relations.get(relation)?, backwards, inverted);
            if pos + from.len() > w.len() || w[pos..pos + from.len()] != from[..] {
                return None;
            }
            let mut out = w[..pos].to_vec();
            out.extend(to);
            out.extend_from_slice(&w[pos + from.len()..]);
            Some(out)
        }
        Move::Insert { pos, letter } => {
            if pos > w.len() || letter.index == 0 || letter.index as usize >= p.rank {
                return None;
            }
            let mut out = w[..pos].to_vec();
            out.extend([letter, letter]);
            out.extend_from_slice(&w[pos..]);
            Some(out)
        }
        Move::Delete { pos } => {
            if pos + 1 >= w.len() || w[pos] != w[pos + 1] {
                return None;
            }
            let mut out = w[..pos].to_vec();
            out.extend_from_slice(&w[pos + 2..]);
            Some(out)
        }
    }
}

fn moves(p: &VirtualPresentation, w: &[CoxLetter], cap: usize) -> Vec<(Move, Vec<CoxLetter>)> {
    let mut out = Vec::new();
    for (relation, rel) in p.relations.iter().enumerate() {
        for backwards in [false, true] {
            for inverted in [false, true] {
                let (from, to) = sides(rel, backwards, inverted);
                if from.is_empty() || w.len() + to.len() > cap + from.len() || from.len() > w.len() {
                    continue;
                }
                for pos in 0..=w.len() - from.len() {
                    let mv = Move::Rewrite { relation, backwards, inverted, pos };
                    if let Some(next) = apply_move(p, w, mv) {
                        out.push((mv, next));
                    }
                }
            }
        }
    }
    for pos in 0..w.len().saturating_sub(1) {
        if let Some(next) = apply_move(p, w, Move::Delete { pos }) {
            out.push((Move::Delete { pos }, next));
        }
    }
    if w.len() + 2 <= cap {
        for pos in 0..=w.len() {
            for i in 1..p.rank {
                for letter in [s(i), r(i)] {
                    let mv = Move::Insert { pos, letter };
                    out.push((mv, apply_move(p, w, mv).expect("insertion always applies")));
                }
            }
        }
    }
    out
}

/// Breadth-first search from `u` for `v` using at most `depth` moves, never
/// exceeding length `max(|u|, |v|) + depth`.
pub fn bounded_equal(u: &CoxWord, v: &CoxWord, p: &VirtualPresentation, depth: usize) -> Result<BoundedEquality> {
    p.check(u)?;
    p.check(v)?;
    let cap = u.len().max(v.len()) + depth;
    let start = u.letters().to_vec();
    let target = v.letters();
    let mut parent: HashMap<Vec<CoxLetter>, Option<(Vec<CoxLetter>, Move)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut found = target == u.letters();
    while !found {
        let Some((w, d)) = queue.pop_front() else { break };
        if d == depth {
            continue;
        }
        for (mv, next) in moves(p, &w, cap) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((w.clone(), mv)));
            if next == target {
                found = true;
                break;
            }
            queue.push_back((next, d + 1));
        }
    }
    if !found {
        return Ok(BoundedEquality::Unknown);
    }
    let mut steps = Vec::new();
    let mut cur = target.to_vec();
    while let Some(Some((prev, mv))) = parent.get(&cur) {
        steps.push((*mv, CoxWord::new(cur.clone())));
        cur = prev.clone();
    }
    steps.reverse();
    Ok(BoundedEquality::Equal(Certificate { steps }))
}

/// Replays a certificate from `u`; true iff every move applies, produces
/// the recorded word, and the path ends at `v`.
pub fn replay(u: &CoxWord, v: &CoxWord, p: &VirtualPresentation, cert: &Certificate) -> bool {
    let mut cur = u.letters().to_vec();
    for (mv, expected) in &cert.steps {
        match apply_move(p, &cur, *mv) {
            Some(next) if next == expected.letters() => cur = next,
            _ => return false,
        }
    }
    cur == v.letters()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_word;

    fn w(s: &str) -> CoxWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn relator_counts() {
        assert_eq!(vt_presentation(3).unwrap().relations.len(), 6);
        assert_eq!(vt_presentation(4).unwrap().relations.len(), 14);
        assert_eq!(wt_presentation(3).unwrap().relations.len(), 7);
    }

    #[test]
    fn relators_are_permutation_trivial() {
        for n in 3..=6 {
            for p in [vt_presentation(n).unwrap(), wt_presentation(n).unwrap()] {
                for r in p.relators() {
                    assert!(vt_perm_image(&r, n).unwrap().is_identity(), "{r}");
                }
            }
        }
    }

    #[test]
    fn perm_image_examples() {
        assert_eq!(vt_perm_image(&w("r1"), 3).unwrap(), Permutation::transposition(3, 1, 2));
        assert!(vt_perm_image(&w("s1 r1"), 3).unwrap().is_identity());
        assert!(vt_perm_image(&w("r3"), 3).is_err());
    }

    #[test]
    fn retraction_examples() {
        assert_eq!(retraction(&w("r1 s2 r3")), w("s2"));
        assert!(retraction(&w("r1 r2")).is_empty());
        assert_eq!(retraction(&w("s1 s2 s1")), w("s1 s2 s1"));
    }

    #[test]
    fn retraction_breaks_only_the_mixed_relation() {
        let defects = retraction_defects(&vt_presentation(5).unwrap()).unwrap();
        assert_eq!(defects.len(), 3);
        assert!(defects.iter().all(|r| r.kind == RelationKind::Mixed));
    }

    #[test]
    fn bounded_equal_examples() {
        let vt3 = vt_presentation(3).unwrap();
        let res = bounded_equal(&w("r1 r2 r1"), &w("r2 r1 r2"), &vt3, 1).unwrap();
        let BoundedEquality::Equal(cert) = res else { panic!("expected EQUAL") };
        assert!(replay(&w("r1 r2 r1"), &w("r2 r1 r2"), &vt3, &cert));

        let res = bounded_equal(&w("s1 s2 s1"), &w("s2 s1 s2"), &vt3, 4).unwrap();
        assert_eq!(res, BoundedEquality::Unknown);

        let wt3 = wt_presentation(3).unwrap();
        assert!(bounded_equal(&w("s1 s2 r1"), &w("r2 s1 s2"), &wt3, 2).unwrap().is_equal());
        assert!(!bounded_equal(&w("s1 s2 r1"), &w("r2 s1 s2"), &vt3, 2).unwrap().is_equal());
    }

    #[test]
    fn replay_rejects_tampering() {
        let vt3 = vt_presentation(3).unwrap();
        let BoundedEquality::Equal(cert) = bounded_equal(&w("s1 s1 r1"), &w("r1"), &vt3, 1).unwrap() else {
            panic!("expected EQUAL")
        };
        assert!(replay(&w("s1 s1 r1"), &w("r1"), &vt3, &cert));
        assert!(!replay(&w("s2 s2 r1"), &w("r1"), &vt3, &cert));
    }
}
