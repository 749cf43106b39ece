//! Tietze simplification of presentations.
//!
//! Moves, applied until none fires:
//! 1. drop generators whose meaning is trivial in the twin group,
//! 2. freely and cyclically reduce relators, dropping empty and repeated ones,
//! 3. eliminate a generator occurring exactly once in some relator by solving
//!    that relator for it (this covers the length-two relators `x y^{+-1}`).
//!
//! Every eliminated symbol is recorded with its value as a word in the
//! surviving generators.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::schreier::{Presentation, SignedWord, Symbol};
use crate::word::{self, CoxWord};

/// Which symbol is eliminated first when several are eligible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EliminationOrder {
    /// Eliminate the symbol with the shortest meaning first.
    #[default]
    ShortestMeaningFirst,
    LongestMeaningFirst,
}

#[derive(Clone, Debug, Default)]
pub struct TietzeOptions {
    pub order: EliminationOrder,
    /// Symbols never eliminated (e.g. an adjoined preferred basis).
    pub protected: BTreeSet<Symbol>,
}

#[derive(Clone, Debug)]
pub struct TietzeOutcome {
    pub presentation: Presentation,
    /// Eliminated symbol -> its value in the surviving generators.
    pub eliminated: BTreeMap<Symbol, SignedWord>,
}

impl TietzeOutcome {
    /// Rewrites a word in the original symbols into the surviving ones.
    pub fn rewrite(&self, w: &[(Symbol, i32)]) -> SignedWord {
        let mut out: SignedWord = Vec::new();
        for (s, e) in w {
            match self.eliminated.get(s) {
                Some(value) if *e > 0 => out.extend(value.iter().cloned()),
                Some(value) => out.extend(value.iter().rev().map(|(t, f)| (t.clone(), -f))),
                None => out.push((s.clone(), *e)),
            }
        }
        crate::schreier::free_reduce_signed(&out)
    }
}

type Letter = (u32, i32);

fn free_reduce(w: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &(s, e) in w.iter() {
        match out.last() {
            Some(&(t, f)) if t == s && f == -e => {
                out.pop();
            }
            _ => out.push((s, e)),
        }
    }
    *w = out;
}

fn cyclic_reduce(w: &mut Vec<Letter>) {
    free_reduce(w);
    let mut start = 0;
    let mut end = w.len();
    while end - start >= 2 && w[start].0 == w[end - 1].0 && w[start].1 == -w[end - 1].1 {
        start += 1;
        end -= 1;
    }
    *w = w[start..end].to_vec();
}

fn inverse(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&(s, e)| (s, -e)).collect()
}

/// Canonical key for a relator up to cyclic rotation and inversion.
fn relator_key(w: &[Letter]) -> Vec<Letter> {
    let inv = inverse(w);
    let mut best: Option<Vec<Letter>> = None;
    for base in [w, &inv[..]] {
        for r in 0..base.len().max(1) {
            let rot: Vec<Letter> = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn substitute(w: &[Letter], target: u32, value: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len());
    for &(s, e) in w {
        if s == target {
            if e > 0 {
                out.extend_from_slice(value);
            } else {
                out.extend(inverse(value));
            }
        } else {
            out.push((s, e));
        }
    }
    free_reduce(&mut out);
    out
}

struct Simplifier {
    names: Vec<Symbol>,
    alive: Vec<bool>,
    protected: Vec<bool>,
    /// Elimination preference: smaller is eliminated first.
    rank: Vec<(i64, Symbol)>,
    relators: Vec<Vec<Letter>>,
    eliminated: BTreeMap<u32, Vec<Letter>>,
}

impl Simplifier {
    fn eliminate(&mut self, x: u32, value: Vec<Letter>) {
        debug_assert!(value.iter().all(|&(s, _)| s != x));
        for r in &mut self.relators {
            if r.iter().any(|&(s, _)| s == x) {
                *r = substitute(r, x, &value);
            }
        }
        for v in self.eliminated.values_mut() {
            if v.iter().any(|&(s, _)| s == x) {
                *v = substitute(v, x, &value);
            }
        }
        self.eliminated.insert(x, value);
        self.alive[x as usize] = false;
    }

    fn normalize_relators(&mut self) {
        let mut seen = HashSet::new();
        let relators = std::mem::take(&mut self.relators);
        for mut r in relators {
            cyclic_reduce(&mut r);
            if !r.is_empty() && seen.insert(relator_key(&r)) {
                self.relators.push(r);
            }
        }
        self.relators.sort_by_key(Vec::len);
    }

    /// Finds the best `(relator, symbol)` with the symbol occurring once.
    fn pick(&self) -> Option<(usize, u32)> {
        let mut best: Option<(usize, usize, u32)> = None;
        for (ri, r) in self.relators.iter().enumerate() {
            if let Some((len, _, _)) = best {
                if r.len() > len {
                    break;
                }
            }
            let mut counts: HashMap<u32, usize> = HashMap::new();
            for &(s, _) in r {
                *counts.entry(s).or_default() += 1;
            }
            for (&s, &c) in &counts {
                if c != 1 || self.protected[s as usize] {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((_, _, b)) => self.rank[s as usize] < self.rank[b as usize],
                };
                if better {
                    best = Some((r.len(), ri, s));
                }
            }
        }
        best.map(|(_, ri, s)| (ri, s))
    }

    fn run(&mut self) {
        loop {
            self.normalize_relators();
            let Some((ri, x)) = self.pick() else { break };
            let r = self.relators.swap_remove(ri);
            let p = r.iter().position(|&(s, _)| s == x).expect("picked symbol occurs");
            let e = r[p].1;
            // r = u x^e v  =>  x^e = (v u)^{-1}
            let vu: Vec<Letter> = r[p + 1..].iter().chain(&r[..p]).copied().collect();
            let mut value = if e > 0 { inverse(&vu) } else { vu };
            free_reduce(&mut value);
            self.eliminate(x, value);
        }
    }
}

/// Simplifies with default options.
pub fn tietze_simplify(p: &Presentation) -> Presentation {
    tietze_simplify_with(p, &TietzeOptions::default()).presentation
}

pub fn tietze_simplify_with(p: &Presentation, opts: &TietzeOptions) -> TietzeOutcome {
    let index: HashMap<&str, u32> = p.generators.iter().enumerate().map(|(i, s)| (s.as_str(), i as u32)).collect();
    let meaning_len = |s: &Symbol| -> Option<usize> {
        let m = p.meaning(s)?;
        let spec = word::GroupSpec::covering([m]);
        Some(word::normal_form(m, &spec).ok()?.len())
    };
    let lens: Vec<Option<usize>> = p.generators.iter().map(meaning_len).collect();
    let rank = p
        .generators
        .iter()
        .zip(&lens)
        .map(|(s, len)| {
            let len = len.unwrap_or(0) as i64;
            let key = match opts.order {
                EliminationOrder::LongestMeaningFirst => -len,
                EliminationOrder::ShortestMeaningFirst => len,
            };
            (key, s.clone())
        })
        .collect();
    let mut simp = Simplifier {
        names: p.generators.clone(),
        alive: vec![true; p.generators.len()],
        protected: p.generators.iter().map(|s| opts.protected.contains(s)).collect(),
        rank,
        relators: p.relators.iter().map(|r| r.iter().map(|(s, e)| (index[s.as_str()], *e)).collect()).collect(),
        eliminated: BTreeMap::new(),
    };
    for (i, len) in lens.iter().enumerate() {
        if *len == Some(0) && !simp.protected[i] {
            simp.eliminate(i as u32, Vec::new());
        }
    }
    simp.run();

    let name = |w: &[Letter]| -> SignedWord { w.iter().map(|&(s, e)| (simp.names[s as usize].clone(), e)).collect() };
    let generators: Vec<Symbol> =
        simp.names.iter().zip(&simp.alive).filter(|(_, &a)| a).map(|(s, _)| s.clone()).collect();
    let meanings =
        p.meanings.as_ref().map(|m| generators.iter().filter_map(|g| Some((g.clone(), m.get(g)?.clone()))).collect());
    let presentation = Presentation { relators: simp.relators.iter().map(|r| name(r)).collect(), generators, meanings };
    let eliminated = simp.eliminated.iter().map(|(&s, w)| (simp.names[s as usize].clone(), name(w))).collect();
    TietzeOutcome { presentation, eliminated }
}

/// Adjoins a new generator `name` standing for `meaning`, with the defining
/// relator `name^{-1} definition` where `definition` spells the same element
/// in the existing symbols.
pub fn adjoin_generator(p: &Presentation, name: &str, meaning: CoxWord, definition: &[(Symbol, i32)]) -> Presentation {
    let mut out = p.clone();
    out.generators.push(name.to_string());
    let mut rel: SignedWord = vec![(name.to_string(), -1)];
    rel.extend(definition.iter().cloned());
    out.relators.push(rel);
    out.meanings.get_or_insert_with(BTreeMap::new).insert(name.to_string(), meaning);
    out
}
