//! Reference oracles that use only the defining relations, never the
//! normal-form code.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;
use twin_core::{CoxLetter, CoxWord};

pub type Letters = Vec<u8>;

fn far(a: u8, b: u8) -> bool {
    a.abs_diff(b) >= 2
}

/// Words reachable by deleting `xx` or swapping adjacent far letters.
fn shrink_moves(w: &[u8]) -> Vec<Letters> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        if w[i] == w[i + 1] {
            let mut v = w[..i].to_vec();
            v.extend_from_slice(&w[i + 2..]);
            out.push(v);
        } else if far(w[i], w[i + 1]) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
    }
    out
}

/// All words of length at most `max_len` over `1..=gens`.
pub fn all_words(gens: u8, max_len: usize) -> Vec<Letters> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Letters| {
                (1..=gens).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Connected components of the rewriting graph on `words` (closed under
/// deletion of `xx`, swaps of far letters and insertion of `xx` within the
/// set). Returns one component id per word.
pub fn rewriting_components(words: &[Letters], gens: u8) -> Vec<usize> {
    let index: HashMap<&Letters, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, w) in words.iter().enumerate() {
        let mut neighbours = shrink_moves(w);
        for pos in 0..=w.len() {
            for g in 1..=gens {
                let mut v = w[..pos].to_vec();
                v.extend([g, g]);
                v.extend_from_slice(&w[pos..]);
                neighbours.push(v);
            }
        }
        for v in neighbours {
            if let Some(&j) = index.get(&v) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..words.len()).map(|i| find(&mut parent, i)).collect()
}

/// Words reachable from `w` by non-increasing moves; by Tits' solution of
/// the word problem, two words are equal iff these sets meet.
pub fn valley(w: &[u8]) -> HashSet<Letters> {
    let mut seen: HashSet<Letters> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for next in shrink_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Minimal-length words of the valley of `w`.
pub fn valley_floor(w: &[u8]) -> HashSet<Letters> {
    let v = valley(w);
    let min = v.iter().map(Vec::len).min().unwrap_or(0);
    v.into_iter().filter(|x| x.len() == min).collect()
}

pub fn oracle_equal(u: &[u8], v: &[u8]) -> bool {
    let a = valley_floor(u);
    valley_floor(v).iter().any(|x| a.contains(x))
}

pub fn to_word(w: &[u8]) -> CoxWord {
    CoxWord::from_indices(w)
}

pub fn to_letters(w: &CoxWord) -> Letters {
    w.iter().map(|l: CoxLetter| l.index).collect()
}

pub fn random_word<R: Rng>(rng: &mut R, gens: u8, max_len: usize) -> Letters {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(1..=gens)).collect()
}

/// Applies random relation moves (insert/delete `xx`, far swaps) while
/// staying within `max_len`; the result equals `w` in `T_n`.
pub fn perturb<R: Rng>(rng: &mut R, w: &[u8], gens: u8, max_len: usize, steps: usize) -> Letters {
    let mut cur = w.to_vec();
    for _ in 0..steps {
        let mut options = shrink_moves(&cur);
        if cur.len() + 2 <= max_len {
            let pos = rng.gen_range(0..=cur.len());
            let g = rng.gen_range(1..=gens);
            let mut v = cur[..pos].to_vec();
            v.extend([g, g]);
            v.extend_from_slice(&cur[pos..]);
            options.push(v);
        }
        if options.is_empty() {
            break;
        }
        cur = options.swap_remove(rng.gen_range(0..options.len()));
    }
    cur
}
