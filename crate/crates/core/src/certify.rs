//! Certificates for structure constants: intersect the facet unions of
//! translated Schubert varieties and count the vertices left over.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeffs::{
    build_modified_partition, chevalley, gr2_reduction, structure_constant, ClassKind, Gr2Reduction, Triple, TripleClass,
    Tuple,
};
use crate::error::{Error, Result};
use crate::gc_polytope::{FaceUnion, Polytope, Vertex};
use crate::ladder::Edge;
use crate::pluecker::{delta_schubert, fold_paths, vanishing_translated};
use crate::weyl::{grassmannian_perm, ParabolicShape, Partition, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub shape: ParabolicShape,
    pub vs: Vec<Permutation>,
    pub w: Permutation,
    pub us: Vec<Permutation>,
    pub vertices: Vec<Vertex>,
    /// How many members of `vertices` are regular.
    pub regular: usize,
    pub count: usize,
    pub oracle: i64,
    pub status: Status,
}

/// Why a translation tuple does not certify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    PositiveDimensional { dim: usize, edges: Vec<Edge> },
    OutsideVx { vertex: Vertex },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::PositiveDimensional { dim, edges } => {
                let e: Vec<String> = edges.iter().map(Edge::to_string).collect();
                write!(f, "face of dimension {dim} cut out by {}", e.join(" "))
            }
            Obstruction::OutsideVx { vertex } => write!(f, "vertex {:?} is not in V^X", vertex.blocks),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Evaluation {
    Certified(Certificate),
    Failed { obstruction: Obstruction },
}

impl Evaluation {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Evaluation::Certified(c) => Some(c),
            Evaluation::Failed { .. } => None,
        }
    }
}

fn check_inputs(p: &Polytope, vs: &[Permutation], w: &Permutation, us: &[Permutation]) -> Result<()> {
    let shape = p.shape();
    let n = shape.n();
    if vs.len() != us.len() {
        return Err(Error::Precondition(format!("{} classes but {} translations", vs.len(), us.len())));
    }
    for x in vs.iter().chain(us).chain([w]) {
        if x.n() != n {
            return Err(Error::RankMismatch(x.n(), n));
        }
    }
    for x in vs.iter().chain([w]) {
        if !shape.contains_min_rep(x) {
            return Err(Error::NotMinimal { perm: x.to_string(), shape: shape.to_string() });
        }
    }
    let total: usize = vs.iter().map(Permutation::length).sum();
    if total != w.length() {
        return Err(Error::Precondition(format!("lengths sum to {total}, but l(w) = {}", w.length())));
    }
    Ok(())
}

/// `⋂_i Δ(u_i, v_i) ∩ Δ(w_0, π(w_0 w))` as an antichain of faces.
pub fn intersection(p: &Polytope, vs: &[Permutation], w: &Permutation, us: &[Permutation]) -> Result<FaceUnion> {
    check_inputs(p, vs, w, us)?;
    let mut cur = delta_schubert(p, w)?;
    for (u, v) in us.iter().zip(vs) {
        if cur.is_empty() {
            break;
        }
        let paths = vanishing_translated(p.shape(), u, v)?.paths();
        cur = fold_paths(p, &paths, cur);
    }
    Ok(cur)
}

/// Evaluate one translation tuple.
pub fn evaluate(p: &Polytope, vs: &[Permutation], w: &Permutation, us: &[Permutation]) -> Result<Evaluation> {
    let faces = intersection(p, vs, w, us)?;
    let mut vertices = Vec::with_capacity(faces.len());
    for f in faces.faces() {
        let dim = p.face_dimension(Some(f));
        if dim > 0 {
            let obstruction = Obstruction::PositiveDimensional { dim: dim as usize, edges: p.face_edges(f) };
            return Ok(Evaluation::Failed { obstruction });
        }
        vertices.push(p.face_point(f).expect("0-dimensional face"));
    }
    for v in &vertices {
        if !p.in_vx(v)? {
            log::info!("vertex {:?} of the intersection lies in V but not in V^X", v.blocks);
            return Ok(Evaluation::Failed { obstruction: Obstruction::OutsideVx { vertex: v.clone() } });
        }
    }
    vertices.sort_by(|a, b| a.blocks.cmp(&b.blocks));
    let oracle = structure_constant(vs, w)?;
    let count = vertices.len();
    let status = if count as i64 == oracle { Status::Certified } else { Status::Mismatch };
    if status == Status::Mismatch {
        log::error!("vertex count {count} differs from the structure constant {oracle} for {vs:?} -> {w:?} with {us:?}");
    }
    Ok(Evaluation::Certified(Certificate {
        shape: p.shape().clone(),
        vs: vs.to_vec(),
        w: w.clone(),
        us: us.to_vec(),
        regular: vertices.iter().filter(|v| p.is_regular(v)).count(),
        vertices,
        count,
        oracle,
        status,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// Translate the first class only.
    Single = 1,
    /// Constructions built from the inputs.
    Recipe = 2,
    /// Every tuple of translations.
    Full = 3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub min_tier: Tier,
    pub max_tier: Tier,
    /// Upper bound on full-enumeration candidates per call.
    pub budget: u64,
    /// Full-enumeration index to start from.
    pub cursor: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { min_tier: Tier::Single, max_tier: Tier::Full, budget: 1 << 20, cursor: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Certified { tier: Tier, tried: u64, certificate: Certificate },
    /// Vanishes for order reasons, no search needed.
    Zero { reason: String },
    Exhausted { tried: u64, next_cursor: Option<u64>, last_obstruction: Option<Obstruction> },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Certified { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

fn power(c: &Permutation, k: usize) -> Permutation {
    (0..k).fold(Permutation::identity(c.n()), |acc, _| acc.mul(c))
}

/// `u(j) = j` for `j < m`, `u(j) = j + q` for `m <= j <= m + r - 1`, the rest increasing.
pub fn block_shift(m: usize, n: usize, r: usize, q: usize) -> Result<Permutation> {
    if m == 0 || m + r + q > n {
        return Err(Error::Precondition(format!("block shift ({r},{q}) in Gr({m},{n})")));
    }
    let mut window: Vec<usize> = (1..m).collect();
    window.extend((m..m + r).map(|j| j + q));
    let rest: Vec<usize> = (1..=n).filter(|x| !window.contains(x)).collect();
    window.extend(rest);
    Permutation::from_window(window)
}

fn with_one(n: usize, len: usize, i: usize, u: Permutation) -> Vec<Permutation> {
    let mut us = vec![Permutation::identity(n); len];
    us[i] = u;
    us
}

fn tier_single(n: usize, len: usize) -> Vec<Vec<Permutation>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    Permutation::all(n).into_iter().map(|u| with_one(n, len, 0, u)).collect()
}

fn tier_recipe(shape: &ParabolicShape, vs: &[Permutation], w: &Permutation) -> Vec<Vec<Permutation>> {
    let n = shape.n();
    let len = vs.len();
    let mut out: Vec<Vec<Permutation>> = Vec::new();
    if let (Some(m), 2) = (shape.is_grassmannian(), len) {
        let parts: Vec<Option<Partition>> = vs.iter().map(|v| crate::weyl::partition_of_perm(v, m).ok()).collect();
        let special = |p: &Partition| p.parts().iter().skip(1).all(|&x| x == 0);
        if let (Some(a), Some(b)) = (&parts[0], &parts[1]) {
            if special(a) && special(b) {
                for (i, (r, q)) in [(0, (a.parts()[0], b.parts()[0])), (1, (b.parts()[0], a.parts()[0]))] {
                    if let Ok(u) = block_shift(m, n, r, q) {
                        out.push(with_one(n, len, i, u));
                    }
                }
            }
        }
    }
    for i in 0..len {
        for j in (0..len).filter(|&j| j != i) {
            out.push(with_one(n, len, i, vs[j].clone()));
            out.push(with_one(n, len, i, vs[j].inverse()));
        }
        out.push(with_one(n, len, i, w.clone()));
    }
    let c = Permutation::cycle(n);
    for k in 1..n {
        for i in 0..len {
            out.push(with_one(n, len, i, power(&c, k)));
        }
        if len >= 2 {
            for l in 1..n {
                let mut us = with_one(n, len, 0, power(&c, k));
                us[1] = power(&c, l);
                out.push(us);
            }
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|us| seen.insert(us.clone()));
    out
}

/// The `k`-th tuple of `W^len` in lexicographic order.
fn full_candidate(all: &[Permutation], len: usize, mut k: u64) -> Vec<Permutation> {
    let base = all.len() as u64;
    let mut us = vec![all[0].clone(); len];
    for slot in (0..len).rev() {
        us[slot] = all[(k % base) as usize].clone();
        k /= base;
    }
    us
}

fn first_certified(
    p: &Polytope,
    vs: &[Permutation],
    w: &Permutation,
    candidates: &[Vec<Permutation>],
) -> Result<(Option<(usize, Certificate)>, Option<Obstruction>)> {
    let found = candidates
        .par_iter()
        .enumerate()
        .map(|(k, us)| (k, evaluate(p, vs, w, us)))
        .find_map_first(|(k, r)| match r {
            Ok(Evaluation::Certified(c)) => Some(Ok((k, c))),
            Ok(Evaluation::Failed { .. }) => None,
            Err(e) => Some(Err(e)),
        })
        .transpose()?;
    if found.is_some() {
        return Ok((found, None));
    }
    let last = match candidates.last() {
        Some(us) => match evaluate(p, vs, w, us)? {
            Evaluation::Failed { obstruction } => Some(obstruction),
            Evaluation::Certified(_) => None,
        },
        None => None,
    };
    Ok((None, last))
}

/// Search translation tuples tier by tier; the first certificate in the
/// canonical order of each tier wins, independent of thread count.
pub fn search(p: &Polytope, vs: &[Permutation], w: &Permutation, opts: &SearchOptions) -> Result<SearchOutcome> {
    let probe: Vec<Permutation> = vec![Permutation::identity(p.n()); vs.len()];
    check_inputs(p, vs, w, &probe)?;
    if let Some(v) = vs.iter().find(|v| !v.bruhat_leq(w)) {
        return Ok(SearchOutcome::Zero { reason: format!("{v} is not below {w} in Bruhat order") });
    }
    let n = p.n();
    let mut tried = 0u64;
    let mut last = None;
    let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    for tier in [Tier::Single, Tier::Recipe] {
        if tier < opts.min_tier || tier > opts.max_tier {
            continue;
        }
        let mut cands = match tier {
            Tier::Single => tier_single(n, vs.len()),
            _ => tier_recipe(p.shape(), vs, w),
        };
        cands.retain(|us| seen.insert(us.clone()));
        let (found, obstruction) = first_certified(p, vs, w, &cands)?;
        if let Some((k, certificate)) = found {
            return Ok(SearchOutcome::Certified { tier, tried: tried + k as u64 + 1, certificate });
        }
        tried += cands.len() as u64;
        last = obstruction.or(last);
    }
    if opts.max_tier < Tier::Full {
        return Ok(SearchOutcome::Exhausted { tried, next_cursor: None, last_obstruction: last });
    }
    let all = Permutation::all(n);
    let total = (all.len() as u64).checked_pow(vs.len() as u32).unwrap_or(u64::MAX);
    let end = total.min(opts.cursor.saturating_add(opts.budget));
    const CHUNK: u64 = 4096;
    let mut k = opts.cursor;
    while k < end {
        let stop = end.min(k + CHUNK);
        let cands: Vec<Vec<Permutation>> = (k..stop)
            .map(|i| full_candidate(&all, vs.len(), i))
            .filter(|us| !seen.contains(us))
            .collect();
        let (found, obstruction) = first_certified(p, vs, w, &cands)?;
        if let Some((j, certificate)) = found {
            return Ok(SearchOutcome::Certified { tier: Tier::Full, tried: tried + j as u64 + 1, certificate });
        }
        tried += cands.len() as u64;
        last = obstruction.or(last);
        k = stop;
    }
    let next_cursor = (end < total).then_some(end);
    Ok(SearchOutcome::Exhausted { tried, next_cursor, last_obstruction: last })
}

/// Polytopes shared across a batch, one per shape.
#[derive(Default)]
pub struct PolytopeCache {
    map: Mutex<HashMap<ParabolicShape, Arc<Polytope>>>,
}

impl PolytopeCache {
    pub fn get(&self, shape: &ParabolicShape) -> Result<Arc<Polytope>> {
        if let Some(p) = self.map.lock().expect("cache lock").get(shape) {
            return Ok(p.clone());
        }
        let p = Arc::new(Polytope::new(shape)?);
        self.map.lock().expect("cache lock").insert(shape.clone(), p.clone());
        Ok(p)
    }
}

/// The coarsest shape for which every entry is a minimal coset representative.
pub fn coarsest_shape(perms: &[Permutation]) -> Option<ParabolicShape> {
    let n = perms.first()?.n();
    let cuts: BTreeSet<usize> = perms.iter().flat_map(|p| p.right_descents()).collect();
    if cuts.is_empty() {
        return None;
    }
    ParabolicShape::new(cuts.into_iter().collect(), n).ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Resolution {
    Zero,
    Certified { tuple: Tuple, tier: Tier, certificate: Certificate },
    Unresolved { tried: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub index: usize,
    pub kind: ClassKind,
    pub representative: Triple,
    pub triples: usize,
    pub tuples: usize,
    pub constant: i64,
    /// Every member triple has the class constant under the oracle.
    pub consistent: bool,
    pub resolution: Resolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n: usize,
    pub triples: usize,
    pub classes: Vec<ClassReport>,
    pub certified: usize,
    pub zero: usize,
    pub unresolved: usize,
    /// Per-triple searches without moving inside the class, when requested.
    pub direct: Option<DirectStats>,
}

/// How the nontrivial triples with `u, v <= w` fare on their own.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectStats {
    pub total: usize,
    pub by_tier: Vec<(Tier, usize)>,
    pub unresolved: Vec<Triple>,
}

impl SweepReport {
    pub fn all_resolved(&self) -> bool {
        self.unresolved == 0 && self.classes.iter().all(|c| c.consistent)
    }
}

fn shapes_for(t: &Tuple) -> Vec<ParabolicShape> {
    let n = t.w.n();
    let complete = ParabolicShape::complete(n).expect("n >= 2");
    let mut all: Vec<Permutation> = t.factors.clone();
    all.push(t.w.clone());
    let mut out = Vec::new();
    if let Some(s) = coarsest_shape(&all) {
        if s != complete && (s.is_grassmannian().is_some()) {
            out.push(s);
        }
    }
    out.push(complete);
    out
}

fn nontrivial(t: &Tuple) -> Tuple {
    Tuple { factors: t.factors.iter().filter(|u| !u.is_identity()).cloned().collect(), w: t.w.clone() }
}

/// Try every tuple of a class, tier by tier, on the coarsest supported shape first.
pub fn resolve_class(class: &TripleClass, cache: &PolytopeCache, opts: &SearchOptions) -> Result<Resolution> {
    if class.kind == ClassKind::Zero {
        return Ok(Resolution::Zero);
    }
    let mut tuples: Vec<Tuple> = class.tuples().map(|t| nontrivial(&t)).collect();
    tuples.sort_by(|a, b| (a.factors.len(), a.w.length(), a).cmp(&(b.factors.len(), b.w.length(), b)));
    tuples.dedup();
    let mut tried = 0;
    for tier in [Tier::Single, Tier::Recipe, Tier::Full] {
        if tier < opts.min_tier || tier > opts.max_tier {
            continue;
        }
        for t in &tuples {
            for shape in shapes_for(t) {
                let p = cache.get(&shape)?;
                let o = SearchOptions { min_tier: tier, max_tier: tier, ..*opts };
                match search(&p, &t.factors, &t.w, &o)? {
                    SearchOutcome::Certified { tier, certificate, .. } => {
                        return Ok(Resolution::Certified { tuple: t.clone(), tier, certificate });
                    }
                    SearchOutcome::Zero { .. } => return Ok(Resolution::Zero),
                    SearchOutcome::Exhausted { tried: k, .. } => tried += k,
                }
            }
        }
    }
    Ok(Resolution::Unresolved { tried })
}

fn resolve_tuple(t: &Tuple, cache: &PolytopeCache, opts: &SearchOptions) -> Result<Option<Tier>> {
    for tier in [Tier::Single, Tier::Recipe, Tier::Full] {
        if tier < opts.min_tier || tier > opts.max_tier {
            continue;
        }
        for shape in shapes_for(t) {
            let p = cache.get(&shape)?;
            let o = SearchOptions { min_tier: tier, max_tier: tier, ..*opts };
            if let SearchOutcome::Certified { tier, .. } = search(&p, &t.factors, &t.w, &o)? {
                return Ok(Some(tier));
            }
        }
    }
    Ok(None)
}

fn direct_stats(classes: &[TripleClass], cache: &PolytopeCache, opts: &SearchOptions) -> Result<DirectStats> {
    let triples: Vec<&Triple> = classes
        .iter()
        .filter(|c| c.kind == ClassKind::Regular)
        .flat_map(|c| c.triples.iter())
        .filter(|t| !t.u.is_identity() && !t.v.is_identity() && t.is_bounded())
        .collect();
    let tiers: Vec<Option<Tier>> = triples.par_iter().map(|t| resolve_tuple(&t.tuple(), cache, opts)).collect::<Result<_>>()?;
    let mut stats = DirectStats { total: triples.len(), ..Default::default() };
    for tier in [Tier::Single, Tier::Recipe, Tier::Full] {
        stats.by_tier.push((tier, tiers.iter().filter(|t| **t == Some(tier)).count()));
    }
    stats.unresolved = triples.iter().zip(&tiers).filter(|(_, t)| t.is_none()).map(|(t, _)| (*t).clone()).collect();
    stats.unresolved.sort();
    Ok(stats)
}

/// Resolve every class of the triple partition of `S_n`; with `direct`, also
/// search every nontrivial triple on its own.
pub fn sweep(n: usize, allow_large: bool, direct: bool, opts: &SearchOptions) -> Result<SweepReport> {
    let partition = build_modified_partition(n, allow_large)?;
    let cache = PolytopeCache::default();
    let classes: Vec<ClassReport> = partition
        .classes
        .par_iter()
        .enumerate()
        .map(|(index, class)| {
            let constant = if class.kind == ClassKind::Zero { 0 } else { class.representative.constant() };
            let consistent = class.triples.iter().all(|t| t.constant() == constant)
                && class.split.iter().all(|t| t.constant() == Ok(constant));
            if !consistent {
                log::error!("class {index} ({:?}) mixes structure constants", class.representative);
            }
            let resolution = resolve_class(class, &cache, opts)?;
            Ok(ClassReport {
                index,
                kind: class.kind,
                representative: class.representative.clone(),
                triples: class.triples.len(),
                tuples: class.triples.len() + class.split.len(),
                constant,
                consistent,
                resolution,
            })
        })
        .collect::<Result<_>>()?;
    let count = |f: fn(&Resolution) -> bool| classes.iter().filter(|c| f(&c.resolution)).count();
    let direct = if direct { Some(direct_stats(&partition.classes, &cache, opts)?) } else { None };
    Ok(SweepReport {
        direct,
        n,
        triples: partition.triple_count(),
        certified: count(|r| matches!(r, Resolution::Certified { .. })),
        zero: count(|r| matches!(r, Resolution::Zero)),
        unresolved: count(|r| matches!(r, Resolution::Unresolved { .. })),
        classes,
    })
}

/// Certificate for `N_{(r),(q)}^{(r+q)}` on `Gr(m, n)` from the block shift.
pub fn special_certificate(m: usize, n: usize, r: usize, q: usize) -> Result<Evaluation> {
    let shape = ParabolicShape::grassmannian(m, n)?;
    let p = Polytope::new(&shape)?;
    let row = |x: usize| {
        let mut parts = vec![0; m];
        parts[0] = x;
        grassmannian_perm(&Partition(parts), m, n)
    };
    let vs = vec![row(r)?, row(q)?];
    let us = vec![block_shift(m, n, r, q)?, Permutation::identity(n)];
    evaluate(&p, &vs, &row(r + q)?, &us)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannianRow {
    pub lambda: Partition,
    pub mu: Partition,
    pub eta: Partition,
    pub oracle: i64,
    pub reduction: Gr2Reduction,
    pub resolution: Resolution,
}

/// Every `Gr(2, n)` triple, reduced to a special constant and certified.
pub fn gr2_table(n: usize, opts: &SearchOptions) -> Result<Vec<GrassmannianRow>> {
    let shape = ParabolicShape::grassmannian(2, n)?;
    let p = Polytope::new(&shape)?;
    let parts = Partition::all_in_box(2, n);
    let mut jobs = Vec::new();
    for l in &parts {
        for mu in &parts {
            for eta in parts.iter().filter(|e| e.size() == l.size() + mu.size()) {
                jobs.push((l.clone(), mu.clone(), eta.clone()));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(lambda, mu, eta)| {
            let perm = |x: &Partition| grassmannian_perm(x, 2, n);
            let (u, v, w) = (perm(&lambda)?, perm(&mu)?, perm(&eta)?);
            let oracle = structure_constant(&[u.clone(), v.clone()], &w)?;
            let reduction = gr2_reduction(&lambda, &mu, &eta, n)?;
            let resolution = match reduction {
                Gr2Reduction::Zero => Resolution::Zero,
                Gr2Reduction::Special { m, n, r, q } => match special_certificate(m, n, r, q)? {
                    Evaluation::Certified(c) => Resolution::Certified { tuple: Tuple { factors: c.vs.clone(), w: c.w.clone() }, tier: Tier::Recipe, certificate: c },
                    Evaluation::Failed { .. } => Resolution::Unresolved { tried: 1 },
                },
                Gr2Reduction::Direct => {
                    let vs = vec![u, v];
                    match search(&p, &vs, &w, opts)? {
                        SearchOutcome::Certified { tier, certificate, .. } => Resolution::Certified { tuple: Tuple { factors: vs, w }, tier, certificate },
                        SearchOutcome::Zero { .. } => Resolution::Zero,
                        SearchOutcome::Exhausted { tried, .. } => Resolution::Unresolved { tried },
                    }
                }
            };
            Ok(GrassmannianRow { lambda, mu, eta, oracle, reduction, resolution })
        })
        .collect()
}

/// `σ^{(a)} σ^{(b)} = σ^{(a+b)}` on `Gr(1, n)`: every nonzero constant certified by the block shift.
pub fn gr1_table(n: usize) -> Result<Vec<(usize, usize, Evaluation)>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n - a {
            out.push((a, b, special_certificate(1, n, a, b)?));
        }
    }
    Ok(out)
}

/// Chevalley triples `(1), μ, η` of `Gr(m, n)`, searched with recipes only.
pub fn chevalley_table(m: usize, n: usize) -> Result<Vec<(Partition, Partition, SearchOutcome)>> {
    let shape = ParabolicShape::grassmannian(m, n)?;
    let p = Polytope::new(&shape)?;
    let mut one = vec![0; m];
    one[0] = 1;
    let divisor = grassmannian_perm(&Partition(one), m, n)?;
    let mut jobs = Vec::new();
    for mu in Partition::all_in_box(m, n) {
        for eta in chevalley(&mu, m, n) {
            jobs.push((mu.clone(), eta));
        }
    }
    let opts = SearchOptions { min_tier: Tier::Recipe, max_tier: Tier::Recipe, ..Default::default() };
    jobs.into_par_iter()
        .map(|(mu, eta)| {
            let vs = vec![divisor.clone(), grassmannian_perm(&mu, m, n)?];
            let w = grassmannian_perm(&eta, m, n)?;
            let outcome = search(&p, &vs, &w, &opts)?;
            Ok((mu, eta, outcome))
        })
        .collect()
}
