//! Partition of the graded triples of `S_n` into classes of equal constants.

use std::collections::{BTreeMap, HashMap};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::{apply_identities, recursion_step, split_by_star, RecursionOutcome, Triple, Tuple};
use crate::error::{Error, Result};
use crate::weyl::{star_factorize, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// Known to vanish without computing anything.
    Zero,
    Regular,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleClass {
    pub kind: ClassKind,
    pub representative: Triple,
    pub triples: Vec<Triple>,
    /// Star splittings of members whose factors are not all connected.
    pub split: Vec<Tuple>,
}

impl TripleClass {
    /// Every tuple in the class: the triples followed by their splittings.
    pub fn tuples(&self) -> impl Iterator<Item = Tuple> + '_ {
        self.triples.iter().map(Triple::tuple).chain(self.split.iter().cloned())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModifiedPartition {
    pub n: usize,
    /// The zero class first, then regular classes ordered by representative.
    pub classes: Vec<TripleClass>,
}

impl ModifiedPartition {
    pub fn zero_class(&self) -> &TripleClass {
        &self.classes[0]
    }

    pub fn regular(&self) -> impl Iterator<Item = &TripleClass> {
        self.classes.iter().filter(|c| c.kind == ClassKind::Regular)
    }

    pub fn triple_count(&self) -> usize {
        self.classes.iter().map(|c| c.triples.len()).sum()
    }
}

fn has_zero_pattern(t: &Triple) -> bool {
    (1..t.n()).any(|i| recursion_step(t, i) == RecursionOutcome::Zero)
}

fn level(u: &Permutation) -> usize {
    star_factorize(u).map(|s| s.level()).unwrap_or(1)
}

/// Group every triple with `ℓ(w) = ℓ(u) + ℓ(v)` by the identities and the
/// recursion. Triples with `u ≰ w` or `v ≰ w`, and every class meeting the
/// vanishing pattern of the recursion, form the zero class. Ranks above 4
/// need `allow_large`; ranks above 5 are refused.
pub fn build_modified_partition(n: usize, allow_large: bool) -> Result<ModifiedPartition> {
    if !(2..=5).contains(&n) || (n == 5 && !allow_large) {
        return Err(Error::BoundExceeded(format!("triple partition of S_{n}")));
    }
    let perms = Permutation::all(n);
    let mut by_length: BTreeMap<usize, Vec<&Permutation>> = BTreeMap::new();
    for p in &perms {
        by_length.entry(p.length()).or_default().push(p);
    }
    let mut triples = Vec::new();
    for w in &perms {
        for u in &perms {
            let Some(lu) = w.length().checked_sub(u.length()) else { continue };
            for v in by_length.get(&lu).into_iter().flatten() {
                triples.push(Triple { u: u.clone(), v: (*v).clone(), w: w.clone() });
            }
        }
    }
    triples.sort();
    let index: HashMap<&Triple, usize> = triples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let zero = triples.len();
    let mut uf = UnionFind::<usize>::new(triples.len() + 1);
    for (i, t) in triples.iter().enumerate() {
        if !t.is_bounded() {
            uf.union(i, zero);
            continue;
        }
        for s in apply_identities(t) {
            uf.union(i, index[&s]);
        }
        for k in 1..n {
            if let RecursionOutcome::Moved(s) = recursion_step(t, k) {
                uf.union(i, index[&s]);
            }
        }
    }
    for (i, t) in triples.iter().enumerate() {
        if has_zero_pattern(t) {
            uf.union(i, zero);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Triple>> = BTreeMap::new();
    for (i, t) in triples.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(t.clone());
    }
    let zero_root = uf.find(zero);
    let mut classes: Vec<TripleClass> = Vec::new();
    let mut zero_class = TripleClass {
        kind: ClassKind::Zero,
        representative: triples[0].clone(),
        triples: groups.remove(&zero_root).unwrap_or_default(),
        split: Vec::new(),
    };
    if let Some(r) = zero_class.triples.iter().min_by_key(|t| (t.w.length(), (*t).clone())) {
        zero_class.representative = r.clone();
    }
    for (_, members) in groups {
        let representative = members.iter().min_by_key(|t| (t.w.length(), (*t).clone())).expect("nonempty").clone();
        let mut split: Vec<Tuple> = members
            .iter()
            .filter(|t| level(&t.u) > 1 || level(&t.v) > 1)
            .map(split_by_star)
            .collect();
        split.sort();
        split.dedup();
        classes.push(TripleClass { kind: ClassKind::Regular, representative, triples: members, split });
    }
    classes.sort_by(|a, b| (a.representative.w.length(), &a.representative).cmp(&(b.representative.w.length(), &b.representative)));
    classes.insert(0, zero_class);
    log::debug!("S_{n}: {} graded triples in {} classes", triples.len(), classes.len());
    Ok(ModifiedPartition { n, classes })
}
