//! The 24-triangle fundamental domain of `PT_4` acting on the hyperbolic
//! plane, with its sides glued by the generators `S_{λ,a}`.
//!
//! Triangle `D_λ` is the image of the base triangle under `λ ∈ Λ_4`; its
//! label is the index string of `λ` read backwards (`s1 s2 s3` gives
//! `"321"`, the identity gives `"0"`). Sides are numbered after the
//! reflections `s1, s2, s3`. The generator `λ a (overline{λa})^{-1}` glues
//! side `a` of `D_λ` to side `a` of `D_{overline{λa}}`.
//!
//! Corners are named by the opposite side. The corner opposite side 2,
//! where sides 1 and 3 meet at a right angle, is finite; the other two
//! are ideal.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Result, TwinError};
use crate::schreier::{coset_rep, transversal, TransversalElem};
use crate::word::{CoxLetter, CoxWord};

pub const SIDES: [u8; 3] = [1, 2, 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub label: String,
    pub elem: TransversalElem,
}

impl Triangle {
    fn new(elem: TransversalElem) -> Self {
        Triangle { label: label_of(&elem.word()), elem }
    }

    pub fn word(&self) -> CoxWord {
        self.elem.word()
    }
}

fn label_of(w: &CoxWord) -> String {
    if w.is_empty() {
        "0".to_string()
    } else {
        w.letters().iter().rev().map(|l| l.index.to_string()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CornerKind {
    Finite,
    Ideal,
}

/// Kind of the corner opposite `side`.
pub fn corner_kind(side: u8) -> CornerKind {
    if side == 2 {
        CornerKind::Finite
    } else {
        CornerKind::Ideal
    }
}

/// A side slot: triangle index and side number.
pub type Slot = (usize, u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidePairing {
    pub pairs: Vec<(Slot, Slot)>,
}

impl SidePairing {
    /// Checks that every one of the `3 * triangles` slots occurs exactly once
    /// and that paired sides carry the same number.
    pub fn validate(&self, triangles: usize) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.pairs {
            if a.1 != b.1 {
                return Err(TwinError::NonMatchingPairing(format!("{a:?} and {b:?} differ in side")));
            }
            for s in [a, b] {
                if s.0 >= triangles || !SIDES.contains(&s.1) {
                    return Err(TwinError::NonMatchingPairing(format!("slot {s:?} out of range")));
                }
                if !seen.insert(s) {
                    return Err(TwinError::NonMatchingPairing(format!("slot {s:?} used twice")));
                }
            }
        }
        if seen.len() != 3 * triangles {
            return Err(TwinError::NonMatchingPairing(format!("{} of {} slots covered", seen.len(), 3 * triangles)));
        }
        Ok(())
    }

    pub fn partner(&self, slot: Slot) -> Option<Slot> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == slot {
                Some(b)
            } else if b == slot {
                Some(a)
            } else {
                None
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub triangles: Vec<Triangle>,
    pub pairing: SidePairing,
}

impl Complex {
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.triangles.iter().position(|t| t.label == label)
    }
}

/// The triangles of `Λ_4` and the pairing derived from the generators
/// `S_{λ,a}`; each unordered pair arises from two `(λ, a)`.
pub fn build_complex() -> Complex {
    let elems = transversal(4).expect("rank 4 is supported");
    let index: HashMap<&TransversalElem, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut pairs = BTreeSet::new();
    for (i, lambda) in elems.iter().enumerate() {
        for a in SIDES {
            let moved = lambda.word().concat(&CoxWord::new(vec![CoxLetter::s(a)]));
            let j = index[&coset_rep(&moved, 4).expect("S-letters in range")];
            pairs.insert(((i, a).min((j, a)), (i, a).max((j, a))));
        }
    }
    Complex {
        triangles: elems.into_iter().map(Triangle::new).collect(),
        pairing: SidePairing { pairs: pairs.into_iter().collect() },
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Corner slot index: triangle `t`, corner opposite side `c`.
fn corner(t: usize, c: u8) -> usize {
    3 * t + (c as usize - 1)
}

/// Rank over `GF(2)` of rows given as bit masks.
fn rank_gf2(mut rows: Vec<u128>) -> usize {
    let mut rank = 0;
    for bit in 0..128 {
        let mask = 1u128 << bit;
        let Some(p) = rows[rank..].iter().position(|r| r & mask != 0) else { continue };
        rows.swap(rank, rank + p);
        let pivot = rows[rank];
        for r in rows.iter_mut().skip(rank + 1) {
            if *r & mask != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurfaceReport {
    pub triangles: usize,
    pub edges: usize,
    pub connected: bool,
    pub orientable: bool,
    pub ideal_vertex_classes: usize,
    pub finite_vertex_classes: usize,
    pub filled_euler_char: i64,
    pub pi1_rank: i64,
    /// Mod-2 Betti numbers of the filled surface.
    pub betti_mod2: [usize; 3],
    /// Genus from the mod-2 first Betti number (orientable case).
    pub genus: usize,
}

impl SurfaceReport {
    /// A sphere with eight punctures and free fundamental group of rank 7.
    pub fn is_eight_punctured_sphere(&self) -> bool {
        self.connected
            && self.orientable
            && self.edges == 36
            && self.filled_euler_char == 2
            && self.genus == 0
            && self.ideal_vertex_classes == 8
            && self.pi1_rank == 7
    }
}

impl fmt::Display for SurfaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "triangles: {}", self.triangles)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "connected: {}", self.connected)?;
        writeln!(f, "orientable: {}", self.orientable)?;
        writeln!(f, "finite vertex classes: {}", self.finite_vertex_classes)?;
        writeln!(f, "ideal vertex classes: {}", self.ideal_vertex_classes)?;
        writeln!(f, "filled Euler characteristic: {}", self.filled_euler_char)?;
        writeln!(f, "mod-2 Betti numbers: {:?}", self.betti_mod2)?;
        writeln!(f, "genus: {}", self.genus)?;
        write!(f, "pi1 rank: {}", self.pi1_rank)
    }
}

pub fn surface_invariants(triangles: &[Triangle], pairing: &SidePairing) -> Result<SurfaceReport> {
    let f = triangles.len();
    pairing.validate(f)?;
    let e = pairing.pairs.len();
    if f > 128 || e > 128 {
        return Err(TwinError::Invalid("complex too large for the homology check".into()));
    }

    let mut faces = UnionFind::new(f);
    let mut corners = UnionFind::new(3 * f);
    for &((t, a), (u, _)) in &pairing.pairs {
        faces.union(t, u);
        for c in SIDES.into_iter().filter(|&c| c != a) {
            corners.union(corner(t, c), corner(u, c));
        }
    }
    let connected = (0..f).all(|t| faces.find(t) == faces.find(0));

    // orientable iff glued triangles can be given opposite colours
    let mut colour: Vec<Option<bool>> = vec![None; f];
    let mut orientable = true;
    for start in 0..f {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            let c = colour[t].unwrap();
            for a in SIDES {
                let (u, _) = pairing.partner((t, a)).expect("validated matching");
                match colour[u] {
                    None => {
                        colour[u] = Some(!c);
                        stack.push(u);
                    }
                    Some(cu) if cu == c => orientable = false,
                    Some(_) => {}
                }
            }
        }
    }

    let mut class_ids: HashMap<usize, usize> = HashMap::new();
    let mut class_kind: Vec<CornerKind> = Vec::new();
    let mut vertex_of = vec![0usize; 3 * f];
    for t in 0..f {
        for c in SIDES {
            let root = corners.find(corner(t, c));
            let next = class_ids.len();
            let id = *class_ids.entry(root).or_insert_with(|| {
                class_kind.push(corner_kind(c));
                next
            });
            if class_kind[id] != corner_kind(c) {
                return Err(TwinError::Invalid(format!("vertex class {id} mixes corner kinds")));
            }
            vertex_of[corner(t, c)] = id;
        }
    }
    let v = class_kind.len();
    let ideal = class_kind.iter().filter(|&&k| k == CornerKind::Ideal).count();
    let finite = v - ideal;
    if v > 128 {
        return Err(TwinError::Invalid("complex too large for the homology check".into()));
    }

    let mut edge_of: HashMap<Slot, usize> = HashMap::new();
    let mut boundary1 = Vec::with_capacity(e);
    for (k, &(s, t)) in pairing.pairs.iter().enumerate() {
        edge_of.insert(s, k);
        edge_of.insert(t, k);
        let ends: Vec<usize> = SIDES.into_iter().filter(|&c| c != s.1).map(|c| vertex_of[corner(s.0, c)]).collect();
        boundary1.push((1u128 << ends[0]) ^ (1u128 << ends[1]));
    }
    let boundary2: Vec<u128> =
        (0..f).map(|t| SIDES.into_iter().fold(0u128, |acc, a| acc ^ (1u128 << edge_of[&(t, a)]))).collect();
    let r1 = rank_gf2(boundary1);
    let r2 = rank_gf2(boundary2);
    let betti_mod2 = [v - r1, e - r1 - r2, f - r2];

    let filled_euler_char = v as i64 - e as i64 + f as i64;
    Ok(SurfaceReport {
        triangles: f,
        edges: e,
        connected,
        orientable,
        ideal_vertex_classes: ideal,
        finite_vertex_classes: finite,
        filled_euler_char,
        pi1_rank: 1 - (filled_euler_char - ideal as i64),
        betti_mod2,
        genus: betti_mod2[1] / 2,
    })
}

/// A gluing as printed: `D_{from}^{side} -> D_{to}^{side}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrintedGluing {
    pub list: &'static str,
    pub from: &'static str,
    pub to: &'static str,
    pub side: u8,
}

const fn g(list: &'static str, from: &'static str, to: &'static str, side: u8) -> PrintedGluing {
    PrintedGluing { list, from, to, side }
}

/// The printed gluing lists, in order.
pub const PRINTED_GLUINGS: [PrintedGluing; 36] = [
    g("A1", "1", "0", 1),
    g("A1", "12", "2", 1),
    g("A1", "121", "21", 1),
    g("A1", "2", "0", 2),
    g("A1", "21", "1", 2),
    g("A1", "121", "12", 2),
    g("A2", "3", "0", 3),
    g("A2", "31", "1", 3),
    g("A2", "32", "2", 3),
    g("A2", "321", "21", 3),
    g("A2", "312", "12", 3),
    g("A2", "3121", "121", 3),
    g("A3", "31", "3", 1),
    g("A3", "312", "32", 1),
    g("A3", "3121", "321", 1),
    g("B1", "123", "23", 1),
    g("B1", "1231", "231", 1),
    g("B1", "1232", "232", 1),
    g("B1", "12321", "2321", 1),
    g("B1", "12312", "2312", 1),
    g("B1", "123121", "23121", 1),
    g("B2", "232", "23", 3),
    g("B2", "2321", "231", 3),
    g("B2", "23121", "2312", 3),
    g("B3", "1231", "123", 2),
    g("B3", "12312", "1232", 2),
    g("B3", "123212", "12321", 2),
    g("B3", "1232", "123", 3),
    g("B3", "12321", "1231", 3),
    g("B3", "123121", "12312", 3),
    g("C", "23", "3", 2),
    g("C", "231", "31", 2),
    g("C", "232", "32", 2),
    g("C", "2321", "321", 2),
    g("C", "2312", "312", 2),
    g("C", "23121", "3121", 2),
];

/// Boundary sides (all side 2) of the two halves before the final gluing.
pub const PRINTED_BOUNDARY_A: [&str; 6] = ["3", "31", "321", "3121", "312", "32"];
pub const PRINTED_BOUNDARY_B: [&str; 6] = ["2312", "23123", "2321", "231", "23", "232"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum GluingStatus {
    Agrees,
    /// A printed label names no triangle.
    InvalidLabel {
        label: String,
        derived_partner_of_other: Option<String>,
    },
    /// Both labels are valid but the derived pairing glues them elsewhere.
    Disagrees {
        derived_partner: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GluingCheck {
    pub list: &'static str,
    pub printed: String,
    pub status: GluingStatus,
}

/// Compares every printed gluing with the derived pairing.
pub fn compare_printed(complex: &Complex) -> Vec<GluingCheck> {
    PRINTED_GLUINGS
        .iter()
        .map(|p| {
            let printed = format!("D_{}^{} -> D_{}^{}", p.from, p.side, p.to, p.side);
            let from = complex.index_of_label(p.from);
            let to = complex.index_of_label(p.to);
            let partner_label =
                |t: usize| complex.pairing.partner((t, p.side)).map(|(u, _)| complex.triangles[u].label.clone());
            let status = match (from, to) {
                (Some(a), Some(b)) => match complex.pairing.partner((a, p.side)) {
                    Some((u, _)) if u == b => GluingStatus::Agrees,
                    _ => GluingStatus::Disagrees { derived_partner: partner_label(a).unwrap_or_default() },
                },
                (None, Some(b)) => {
                    GluingStatus::InvalidLabel { label: p.from.to_string(), derived_partner_of_other: partner_label(b) }
                }
                (Some(a), None) => {
                    GluingStatus::InvalidLabel { label: p.to.to_string(), derived_partner_of_other: partner_label(a) }
                }
                (None, None) => GluingStatus::InvalidLabel {
                    label: format!("{} and {}", p.from, p.to),
                    derived_partner_of_other: None,
                },
            };
            GluingCheck { list: p.list, printed, status }
        })
        .collect()
}

/// Printed boundary labels that name no triangle.
pub fn invalid_boundary_labels(complex: &Complex) -> Vec<&'static str> {
    PRINTED_BOUNDARY_A
        .iter()
        .chain(PRINTED_BOUNDARY_B.iter())
        .copied()
        .filter(|l| complex.index_of_label(l).is_none())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_follow_reversed_words() {
        let c = build_complex();
        assert_eq!(c.triangles.len(), 24);
        assert!(c.index_of_label("0").is_some());
        assert!(c.index_of_label("321").is_some());
        assert!(c.index_of_label("123121").is_some());
        assert!(c.index_of_label("123212").is_none());
    }

    #[test]
    fn first_gluing_is_derived() {
        let c = build_complex();
        let d1 = c.index_of_label("1").unwrap();
        let d0 = c.index_of_label("0").unwrap();
        assert_eq!(c.pairing.partner((d1, 1)), Some((d0, 1)));
        assert_eq!(c.pairing.pairs.len(), 36);
    }

    #[test]
    fn eight_punctured_sphere() {
        let c = build_complex();
        let r = surface_invariants(&c.triangles, &c.pairing).unwrap();
        assert_eq!(r.finite_vertex_classes, 6);
        assert_eq!(r.ideal_vertex_classes, 8);
        assert_eq!(r.filled_euler_char, 2);
        assert_eq!(r.betti_mod2, [1, 0, 1]);
        assert!(r.is_eight_punctured_sphere());
    }

    #[test]
    fn broken_pairing_rejected() {
        let mut c = build_complex();
        c.pairing.pairs.pop();
        assert!(matches!(surface_invariants(&c.triangles, &c.pairing), Err(TwinError::NonMatchingPairing(_))));
    }
}
