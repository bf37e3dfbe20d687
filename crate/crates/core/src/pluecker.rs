//! Plücker-coordinate combinatorics of translated Schubert varieties and the
//! facet unions they degenerate to.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gc_polytope::{Face, FaceUnion, Polytope};
use crate::ladder::{subsets, Edge, LadderDiagram, PositivePath};
use crate::weyl::{grassmannian_perm, ParabolicShape, Partition, Permutation};

/// Index sets `I` with `p_I = 0`, grouped by level.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VanishingSet {
    pub per_level: BTreeMap<usize, BTreeSet<PositivePath>>,
}

impl VanishingSet {
    fn with_levels(levels: &[usize]) -> Self {
        VanishingSet {
            per_level: levels.iter().map(|&l| (l, BTreeSet::new())).collect(),
        }
    }

    pub fn insert(&mut self, p: PositivePath) {
        self.per_level.entry(p.level()).or_default().insert(p);
    }

    pub fn contains(&self, p: &PositivePath) -> bool {
        self.per_level.get(&p.level()).is_some_and(|s| s.contains(p))
    }

    /// All paths in canonical order.
    pub fn paths(&self) -> Vec<PositivePath> {
        self.per_level.values().flatten().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.per_level.values().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Image under `I ↦ sort(u(I))`.
    pub fn translate(&self, u: &Permutation) -> VanishingSet {
        VanishingSet {
            per_level: self
                .per_level
                .iter()
                .map(|(&l, set)| (l, set.iter().map(|p| p.translate(u)).collect()))
                .collect(),
        }
    }
}

/// A divisor `D_{p_I}` together with the effective edges on its path.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DivisorFacetUnion {
    pub path: PositivePath,
    pub facets: Vec<Edge>,
}

pub fn divisor_facet_union(diagram: &LadderDiagram, path: &PositivePath) -> DivisorFacetUnion {
    DivisorFacetUnion {
        path: path.clone(),
        facets: diagram.effective_edges_on(path),
    }
}

/// Path of the translated Schubert divisor `u X^{s_{n_i}}`: steps at `sort(u({1..n_i}))`.
pub fn w_divisor(shape: &ParabolicShape, u: &Permutation, level: usize) -> Result<PositivePath> {
    if !shape.cuts().contains(&level) {
        return Err(Error::InvalidPath(format!("level {level} for shape {shape}")));
    }
    if u.n() != shape.n() {
        return Err(Error::RankMismatch(u.n(), shape.n()));
    }
    Ok(PositivePath::bottom(level).translate(u))
}

fn check_min_rep(shape: &ParabolicShape, v: &Permutation) -> Result<()> {
    if v.n() != shape.n() {
        return Err(Error::RankMismatch(v.n(), shape.n()));
    }
    if !shape.contains_min_rep(v) {
        return Err(Error::NotMinimal {
            perm: v.to_string(),
            shape: shape.to_string(),
        });
    }
    Ok(())
}

/// Vanishing coordinates of `X^v` (`opposite`) or `X_v`: at level `d`,
/// `p_I = 0` iff `π_I ≱ π_{sort v[1..d]}` (resp. `π_I ≰ π_{sort v[1..d]}`).
pub fn vanishing_schubert(shape: &ParabolicShape, v: &Permutation, opposite: bool) -> Result<VanishingSet> {
    check_min_rep(shape, v)?;
    let n = shape.n();
    let mut out = VanishingSet::with_levels(shape.cuts());
    for &level in shape.cuts() {
        let anchor = PositivePath::bottom(level).translate(v);
        for s in subsets(n, level) {
            let p = PositivePath::new(s).expect("subsets are increasing");
            let keeps = if opposite { anchor.leq(&p) } else { p.leq(&anchor) };
            if !keeps {
                out.insert(p);
            }
        }
    }
    Ok(out)
}

/// Vanishing coordinates of `u X^v`.
pub fn vanishing_translated(shape: &ParabolicShape, u: &Permutation, v: &Permutation) -> Result<VanishingSet> {
    if u.n() != shape.n() {
        return Err(Error::RankMismatch(u.n(), shape.n()));
    }
    Ok(vanishing_schubert(shape, v, true)?.translate(u))
}

/// `{p_I = 0 : π_I contains e}` over all levels.
pub fn toric_divisor_equations(diagram: &LadderDiagram, e: Edge) -> Result<VanishingSet> {
    if !diagram.is_effective(e) {
        return Err(Error::NotEffective(e.to_string()));
    }
    let n = diagram.n();
    let mut out = VanishingSet::with_levels(diagram.levels());
    for p in diagram.all_paths() {
        if p.edges(n).contains(&e) {
            out.insert(p);
        }
    }
    Ok(out)
}

/// Coordinates vanishing on the toric subvariety of `F_μ` (`{π_I ≱ π_μ}`) or,
/// when `dual`, of `F^∨_μ` (`{π_I ≰ π_μ}`).
pub fn toric_subvariety_equations(shape: &ParabolicShape, mu: &Partition, dual: bool) -> Result<VanishingSet> {
    let m = shape
        .is_grassmannian()
        .ok_or_else(|| Error::Precondition(format!("shape {shape} is not a Grassmannian")))?;
    let w = grassmannian_perm(mu, m, shape.n())?;
    vanishing_schubert(shape, &w, !dual)
}

/// Intersection over paths of the union of facets on each path.
pub fn fold_paths(p: &Polytope, paths: &[PositivePath], start: FaceUnion) -> FaceUnion {
    let n = p.n();
    let mut items: Vec<(Vec<usize>, &PositivePath)> = paths
        .iter()
        .map(|path| {
            let ks = path.edges(n).into_iter().filter_map(|e| p.facet_index(e)).collect();
            (ks, path)
        })
        .collect();
    items.sort_by(|a, b| (a.0.len(), a.1).cmp(&(b.0.len(), b.1)));
    items.dedup_by(|a, b| a.1 == b.1);
    let mut cur = start;
    for (ks, _) in items {
        if cur.is_empty() {
            break;
        }
        let mask: u128 = ks.iter().fold(0, |m, &k| m | 1u128 << k);
        let mut next: Vec<Face> = Vec::new();
        for g in cur.faces() {
            if g.facet_mask() & mask != 0 {
                next.push(*g);
                continue;
            }
            next.extend(ks.iter().filter_map(|&k| p.meet_facet(g, k)));
        }
        cur = FaceUnion::from_faces(next);
    }
    cur
}

/// `Δ(u, v) = ⋂_I ⋃_{e ⊂ π_{u(I)}} F_e` over the vanishing coordinates of `X^v`.
pub fn delta_uv(p: &Polytope, u: &Permutation, v: &Permutation) -> Result<FaceUnion> {
    let vs = vanishing_translated(p.shape(), u, v)?;
    Ok(fold_paths(p, &vs.paths(), FaceUnion::single(p.whole())))
}

/// `Δ(w_0, π(w_0 w))`, the facet union attached to `X_w`.
pub fn delta_schubert(p: &Polytope, w: &Permutation) -> Result<FaceUnion> {
    let shape = p.shape();
    let w0 = Permutation::longest(shape.n());
    let v = shape.min_coset_rep(&w0.compose(w)?);
    delta_uv(p, &w0, &v)
}
