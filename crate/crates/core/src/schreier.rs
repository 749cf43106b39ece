//! Schreier transversals and Reidemeister-Schreier presentations for
//! finite-index subgroups of twin groups, with the pure twin group
//! `PT_n <= T_n` as the main instance.
//!
//! The transversal `Lambda_n` consists of the words
//! `m_{1,i_1} m_{2,i_2} ... m_{n-1,i_{n-1}}` with `m_{k,i} = s_k s_{k-1} ... s_{i+1}`
//! and `0 <= i_k <= k` (`i_k = k` is the empty factor). It maps bijectively
//! onto `S_n`, so the coset of a word is found by looking up its permutation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TwinError};
use crate::grammar::parse_word;
use crate::twin::{m_factor, perm_of_letters, Permutation};
use crate::word::{self, invert, CoxLetter, CoxWord, GroupSpec};

/// An element of `Lambda_n`, stored as its index tuple `(i_1, ..., i_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransversalElem {
    indices: Vec<u8>,
}

impl TransversalElem {
    pub fn new(indices: Vec<u8>) -> Result<Self> {
        for (pos, &i) in indices.iter().enumerate() {
            if i as usize > pos + 1 {
                return Err(TwinError::Invalid(format!("transversal index i_{} = {i} exceeds {}", pos + 1, pos + 1)));
            }
        }
        Ok(TransversalElem { indices })
    }

    /// The identity coset representative of `Lambda_n`.
    pub fn identity(n: usize) -> Self {
        TransversalElem { indices: (1..n as u8).collect() }
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    pub fn rank(&self) -> usize {
        self.indices.len() + 1
    }

    /// Index `i_k` (1-based `k`).
    pub fn index(&self, k: usize) -> usize {
        self.indices[k - 1] as usize
    }

    /// Whether the factor `m_{k, i_k}` is nontrivial.
    pub fn has_factor(&self, k: usize) -> bool {
        self.index(k) < k
    }

    pub fn word(&self) -> CoxWord {
        let mut letters = Vec::new();
        for (pos, &i) in self.indices.iter().enumerate() {
            letters.extend(m_factor(pos + 1, i as usize).iter());
        }
        CoxWord::new(letters)
    }
}

impl fmt::Display for TransversalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// `Lambda_n` in lexicographic order of the index tuples; `n!` elements.
pub fn transversal(n: usize) -> Result<Vec<TransversalElem>> {
    GroupSpec::new(n)?;
    let mut out = vec![TransversalElem { indices: Vec::new() }];
    for k in 1..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=k as u8).map(move |i| {
                    let mut indices = t.indices.clone();
                    indices.push(i);
                    TransversalElem { indices }
                })
            })
            .collect();
    }
    Ok(out)
}

/// Compact word spelling used inside generator symbols, e.g. `s2s1` or `1`.
fn compact(w: &CoxWord) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|l| l.to_string()).collect()
    }
}

/// Right cosets of a finite-index subgroup of `T_n`: a prefix-closed
/// transversal (entry 0 is the identity) and the right action of each
/// generator on coset indices.
#[derive(Clone, Debug)]
pub struct CosetTable {
    rank: usize,
    reps: Vec<CoxWord>,
    action: Vec<Vec<usize>>,
}

impl CosetTable {
    /// Validates that `action` is a permutation action of the generators by
    /// involutions, matching the representatives.
    pub fn new(rank: usize, reps: Vec<CoxWord>, action: Vec<Vec<usize>>) -> Result<Self> {
        let spec = GroupSpec::new(rank)?;
        let gens = spec.generator_count();
        if reps.is_empty() || !reps[0].is_empty() || action.len() != reps.len() {
            return Err(TwinError::Invalid("coset table needs the identity first".into()));
        }
        for (c, row) in action.iter().enumerate() {
            if row.len() != gens {
                return Err(TwinError::Invalid(format!("coset {c} has {} actions", row.len())));
            }
            for (a, &d) in row.iter().enumerate() {
                if d >= reps.len() || action[d][a] != c {
                    return Err(TwinError::Invalid(format!("s{} does not act as an involution", a + 1)));
                }
            }
        }
        let table = CosetTable { rank, reps, action };
        for (c, rep) in table.reps.iter().enumerate() {
            spec.check(rep)?;
            if table.walk(rep.letters()) != c {
                return Err(TwinError::Invalid(format!("representative {rep} is not in coset {c}")));
            }
        }
        Ok(table)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, coset: usize) -> &CoxWord {
        &self.reps[coset]
    }

    pub fn act(&self, coset: usize, letter: CoxLetter) -> usize {
        self.action[coset][letter.index as usize - 1]
    }

    /// Coset of a word, by walking the action from the trivial coset.
    pub fn walk(&self, letters: &[CoxLetter]) -> usize {
        letters.iter().fold(0, |c, &l| self.act(c, l))
    }

    pub fn symbol(&self, coset: usize, letter: CoxLetter) -> String {
        format!("S[{},{}]", compact(&self.reps[coset]), letter)
    }

    /// `S_{lambda,a} = (lambda a)(rep(lambda a))^{-1}`.
    pub fn schreier_word(&self, coset: usize, letter: CoxLetter) -> CoxWord {
        let mut w = self.reps[coset].clone();
        w.push(letter);
        w.concat(&invert(&self.reps[self.act(coset, letter)]))
    }

    /// Reidemeister rewriting of a signed letter sequence lying in the
    /// subgroup; negative letters use the coset after the step.
    pub fn tau(&self, letters: &[(CoxLetter, i32)]) -> Result<SignedWord> {
        let mut coset = 0;
        let mut out = Vec::with_capacity(letters.len());
        for &(l, sign) in letters {
            if sign > 0 {
                out.push((self.symbol(coset, l), 1));
                coset = self.act(coset, l);
            } else {
                coset = self.act(coset, l);
                out.push((self.symbol(coset, l), -1));
            }
        }
        if coset != 0 {
            return Err(TwinError::Invalid("word does not lie in the subgroup".into()));
        }
        Ok(out)
    }

    /// Kernel of `T_n -> S_n` with transversal `Lambda_n`.
    pub fn pure_twin(n: usize) -> Result<Self> {
        Ok(PureCosets::new(n)?.table)
    }

    /// Kernel of `T_3 -> T_2` (`s1 -> s1`, `s2 -> 1`) with transversal `{1, s1}`.
    pub fn strand_deletion_t3() -> Self {
        let reps = vec![CoxWord::identity(), CoxWord::from_indices(&[1])];
        let action = vec![vec![1, 0], vec![0, 1]];
        CosetTable::new(3, reps, action).expect("static table is valid")
    }

    /// Generators `S_{lambda,a}` and relators `tau(lambda r lambda^{-1})`
    /// over the defining relators `r` of `T_n`.
    pub fn presentation(&self) -> Presentation {
        let spec = GroupSpec::new(self.rank).expect("validated rank");
        let gens: Vec<CoxLetter> = spec.generators().collect();
        let mut generators = Vec::with_capacity(self.len() * gens.len());
        let mut meanings = BTreeMap::new();
        for c in 0..self.len() {
            for &g in &gens {
                let sym = self.symbol(c, g);
                meanings.insert(sym.clone(), self.schreier_word(c, g));
                generators.push(sym);
            }
        }
        let defining = defining_relators(&spec);
        let relators: Vec<SignedWord> = (0..self.len())
            .into_par_iter()
            .flat_map_iter(|c| {
                let rep = &self.reps[c];
                defining.iter().map(move |r| {
                    let mut letters: Vec<(CoxLetter, i32)> = rep.iter().map(|l| (l, 1)).collect();
                    letters.extend(r.iter().map(|l| (l, 1)));
                    letters.extend(rep.letters().iter().rev().map(|&l| (l, -1)));
                    self.tau(&letters).expect("conjugated relators lie in the subgroup")
                })
            })
            .collect();
        Presentation { generators, relators, meanings: Some(meanings) }
    }
}

/// Defining relators of `T_n`: every `s_i^2` and every `(s_i s_j)^2` with
/// `j - i >= 2`.
pub fn defining_relators(spec: &GroupSpec) -> Vec<CoxWord> {
    let n = spec.rank() as u8;
    let mut out: Vec<CoxWord> = (1..n).map(|i| CoxWord::from_indices(&[i, i])).collect();
    for i in 1..n {
        for j in i + 2..n {
            out.push(CoxWord::from_indices(&[i, j, i, j]));
        }
    }
    out
}

/// Coset machinery for `PT_n <= T_n`, with permutation lookup for the bar
/// map.
#[derive(Clone, Debug)]
pub struct PureCosets {
    n: usize,
    elems: Vec<TransversalElem>,
    lookup: HashMap<Permutation, usize>,
    table: CosetTable,
}

impl PureCosets {
    pub fn new(n: usize) -> Result<Self> {
        let elems = transversal(n)?;
        // identity first: it is the last tuple in lexicographic order
        let mut order: Vec<usize> = (0..elems.len()).collect();
        order.rotate_right(1);
        let elems: Vec<TransversalElem> = order.into_iter().map(|i| elems[i].clone()).collect();
        let perms: Vec<Permutation> = elems.iter().map(|e| perm_of_letters(e.word().letters(), n)).collect();
        let lookup: HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        if lookup.len() != elems.len() {
            return Err(TwinError::Invalid("transversal does not biject onto S_n".into()));
        }
        let action = perms
            .iter()
            .map(|p| {
                (1..n)
                    .map(|a| {
                        let mut q = p.clone();
                        q.then_swap_values(a);
                        lookup[&q]
                    })
                    .collect()
            })
            .collect();
        let reps = elems.iter().map(TransversalElem::word).collect();
        let table = CosetTable { rank: n, reps, action };
        Ok(PureCosets { n, elems, lookup, table })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn elems(&self) -> &[TransversalElem] {
        &self.elems
    }

    /// Coset index of a word (via its permutation).
    pub fn coset_index(&self, w: &CoxWord) -> Result<usize> {
        GroupSpec::new(self.n)?.check(w)?;
        Ok(self.lookup[&perm_of_letters(w.letters(), self.n)])
    }

    pub fn coset_rep(&self, w: &CoxWord) -> Result<TransversalElem> {
        Ok(self.elems[self.coset_index(w)?].clone())
    }

    pub fn index_of(&self, elem: &TransversalElem) -> Option<usize> {
        if elem.rank() != self.n {
            return None;
        }
        self.lookup.get(&perm_of_letters(elem.word().letters(), self.n)).copied()
    }

    pub fn schreier_generator(&self, lambda: &TransversalElem, a: CoxLetter) -> Result<CoxWord> {
        let spec = GroupSpec::new(self.n)?;
        if !a.is_s() {
            return Err(TwinError::VirtualLetter(a.index as usize));
        }
        spec.check_index(a.index as usize)?;
        let c =
            self.index_of(lambda).ok_or_else(|| TwinError::Invalid(format!("{lambda} is not in the transversal")))?;
        Ok(self.table.schreier_word(c, a))
    }

    pub fn rewrite_tau(&self, w: &CoxWord) -> Result<SignedWord> {
        GroupSpec::new(self.n)?.check(w)?;
        let letters: Vec<(CoxLetter, i32)> = w.iter().map(|l| (l, 1)).collect();
        self.table.tau(&letters).map_err(|_| TwinError::NotPure(w.to_string()))
    }
}

/// The bar map: the unique `lambda` in `Lambda_n` with `pi(lambda) = pi(w)`.
pub fn coset_rep(w: &CoxWord, n: usize) -> Result<TransversalElem> {
    PureCosets::new(n)?.coset_rep(w)
}

pub fn schreier_generator(lambda: &TransversalElem, a: CoxLetter, n: usize) -> Result<CoxWord> {
    PureCosets::new(n)?.schreier_generator(lambda, a)
}

/// Reidemeister rewriting of a pure word into the `S_{lambda,a}` alphabet.
pub fn rewrite_tau(w: &CoxWord, n: usize) -> Result<SignedWord> {
    PureCosets::new(n)?.rewrite_tau(w)
}

/// Unsimplified Reidemeister-Schreier presentation of `PT_n`, `2 <= n <= 6`.
pub fn subgroup_presentation(n: usize) -> Result<Presentation> {
    if !(2..=6).contains(&n) {
        return Err(TwinError::UnsupportedRank(n, "2..=6"));
    }
    Ok(PureCosets::new(n)?.table.presentation())
}

pub type Symbol = String;

/// A word in abstract generator symbols with exponents `+1` / `-1`.
pub type SignedWord = Vec<(Symbol, i32)>;

/// Free reduction of a signed word.
pub fn free_reduce_signed(w: &[(Symbol, i32)]) -> SignedWord {
    let mut out: SignedWord = Vec::with_capacity(w.len());
    for (s, e) in w {
        match out.last() {
            Some((t, f)) if t == s && *f == -e => {
                out.pop();
            }
            _ => out.push((s.clone(), *e)),
        }
    }
    out
}

pub fn invert_signed(w: &[(Symbol, i32)]) -> SignedWord {
    w.iter().rev().map(|(s, e)| (s.clone(), -e)).collect()
}

/// A group presentation in abstract symbols, optionally carrying the
/// `T_n`-word each symbol stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Symbol>,
    pub relators: Vec<SignedWord>,
    pub meanings: Option<BTreeMap<Symbol, CoxWord>>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<Vec<(String, i32)>>,
    meanings: BTreeMap<String, String>,
}

impl Presentation {
    pub fn new(generators: Vec<Symbol>, relators: Vec<SignedWord>) -> Self {
        Presentation { generators, relators, meanings: None }
    }

    /// Every relator symbol is a declared generator.
    pub fn validate(&self) -> Result<()> {
        let known: std::collections::HashSet<&str> = self.generators.iter().map(String::as_str).collect();
        for r in &self.relators {
            for (s, e) in r {
                if !known.contains(s.as_str()) {
                    return Err(TwinError::Invalid(format!("relator uses undeclared symbol {s}")));
                }
                if e.abs() != 1 {
                    return Err(TwinError::Invalid(format!("exponent {e} on {s} is not +-1")));
                }
            }
        }
        Ok(())
    }

    pub fn meaning(&self, sym: &str) -> Option<&CoxWord> {
        self.meanings.as_ref()?.get(sym)
    }

    /// Substitutes meanings into a signed word; negative letters invert.
    pub fn expand(&self, w: &[(Symbol, i32)]) -> Result<CoxWord> {
        let mut out = CoxWord::identity();
        for (s, e) in w {
            let m = self.meaning(s).ok_or_else(|| TwinError::Invalid(format!("no meaning recorded for {s}")))?;
            out = if *e > 0 { out.concat(m) } else { out.concat(&invert(m)) };
        }
        Ok(out)
    }

    /// Every relator expands to the identity in the twin group.
    pub fn relators_hold(&self) -> Result<bool> {
        for r in &self.relators {
            let w = self.expand(r)?;
            if !word::normal_form(&w, &GroupSpec::covering([&w]))?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> String {
        let doc = PresentationJson {
            generators: self.generators.clone(),
            relators: self.relators.clone(),
            meanings: self.meanings.iter().flatten().map(|(k, v)| (k.clone(), v.to_string())).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("presentation serializes")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let doc: PresentationJson = serde_json::from_str(src).map_err(|e| TwinError::Invalid(e.to_string()))?;
        let meanings = if doc.meanings.is_empty() {
            None
        } else {
            let mut m = BTreeMap::new();
            for (k, v) in doc.meanings {
                m.insert(k, parse_word(&v)?);
            }
            Some(m)
        };
        let p = Presentation { generators: doc.generators, relators: doc.relators, meanings };
        p.validate()?;
        Ok(p)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators ({}):", self.generators.len())?;
        for g in &self.generators {
            match self.meaning(g) {
                Some(m) => writeln!(f, "  {g} = {m}")?,
                None => writeln!(f, "  {g}")?,
            }
        }
        writeln!(f, "relators ({}):", self.relators.len())?;
        for r in &self.relators {
            let parts: Vec<String> =
                r.iter().map(|(s, e)| if *e > 0 { s.clone() } else { format!("{s}^-1") }).collect();
            writeln!(f, "  {}", parts.join(" "))?;
        }
        Ok(())
    }
}
