//! Ladder diagrams, their edges, and the lattice of positive paths.
//!
//! Cells of the triangular grid are addressed as `(i, j)` with `1 <= j <= i <= n`,
//! standing for the pattern entry `λ^{(i)}_j`. Geometrically the cell sits in
//! column `j` and row `i - j` counted from the bottom. Columns of block `l`
//! carry boxes in rows `0 .. n - n_l`; the cells above them form the square
//! `Q_l` whose entries are pinned to the top-row value of that block.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{ParabolicShape, Partition, Permutation};

/// Linear index of cell `(i, j)`.
#[inline]
pub fn cell_index(i: usize, j: usize) -> usize {
    i * (i - 1) / 2 + j - 1
}

pub fn cell_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Inverse of [`cell_index`].
pub fn cell_of_index(idx: usize) -> (usize, usize) {
    let mut i = 1;
    while cell_index(i + 1, 1) <= idx {
        i += 1;
    }
    (i, idx - cell_index(i, 1) + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellKind {
    Box,
    /// Pinned to the value of block `l` (1-based).
    Constant(usize),
}

/// A unit edge between two cells of the grid.
///
/// `H(i, j)` is the bottom edge of cell `(i, j)` and encodes `λ^{(i)}_j = λ^{(i-1)}_j`.
/// `V(i, j)` is the right edge of cell `(i, j)` and encodes `λ^{(i)}_j = λ^{(i+1)}_{j+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Edge {
    H(usize, usize),
    V(usize, usize),
}

impl Edge {
    /// The two cells it separates, upper/left one first.
    pub fn cells(&self) -> ((usize, usize), (usize, usize)) {
        match *self {
            Edge::H(i, j) => ((i, j), (i - 1, j)),
            Edge::V(i, j) => ((i, j), (i + 1, j + 1)),
        }
    }

    pub fn is_horizontal(&self) -> bool {
        matches!(self, Edge::H(..))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::H(i, j) => write!(f, "H({i},{j})"),
            Edge::V(i, j) => write!(f, "V({i},{j})"),
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Edge> for String {
    fn from(e: Edge) -> String {
        e.to_string()
    }
}

impl TryFrom<String> for Edge {
    type Error = Error;

    fn try_from(s: String) -> Result<Edge> {
        s.parse()
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Edge> {
        let s = s.trim();
        let bad = || Error::Parse(format!("edge `{s}`"));
        let (kind, rest) = s.split_at(1);
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let mut it = inner.split(',').map(|x| x.trim().parse::<usize>());
        let (Some(Ok(i)), Some(Ok(j)), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        match kind {
            "H" if j >= 1 && j < i => Ok(Edge::H(i, j)),
            "V" if j >= 1 && j <= i => Ok(Edge::V(i, j)),
            _ => Err(bad()),
        }
    }
}

/// A positive path, stored as the positions `i_1 < ... < i_l` of its horizontal steps.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PositivePath(Vec<usize>);

impl PositivePath {
    pub fn new(steps: Vec<usize>) -> Result<Self> {
        if steps.is_empty() || steps[0] == 0 || steps.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidPath(format!("{steps:?}")));
        }
        Ok(PositivePath(steps))
    }

    /// The path with horizontal steps at the sorted image of `set`.
    pub fn from_set(set: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = set.into_iter().collect();
        v.sort_unstable();
        Self::new(v)
    }

    pub fn bottom(level: usize) -> Self {
        PositivePath((1..=level).collect())
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// `π_I <= π_J`: `I` is at least as long and below `J` componentwise.
    pub fn leq(&self, other: &PositivePath) -> bool {
        self.level() >= other.level() && other.0.iter().zip(&self.0).all(|(j, i)| i <= j)
    }

    pub fn incomparable(&self, other: &PositivePath) -> bool {
        !self.leq(other) && !other.leq(self)
    }

    pub fn meet(&self, other: &PositivePath) -> PositivePath {
        let (long, short) = if self.level() >= other.level() { (self, other) } else { (other, self) };
        let mut v: Vec<usize> = short.0.iter().zip(&long.0).map(|(a, b)| *a.min(b)).collect();
        v.extend_from_slice(&long.0[short.level()..]);
        PositivePath::new(v).expect("meet is strictly increasing")
    }

    pub fn join(&self, other: &PositivePath) -> PositivePath {
        let (long, short) = if self.level() >= other.level() { (self, other) } else { (other, self) };
        let v: Vec<usize> = short.0.iter().zip(&long.0).map(|(a, b)| *a.max(b)).collect();
        PositivePath::new(v).expect("join is strictly increasing")
    }

    /// Sorted image `u(I)`.
    pub fn translate(&self, u: &Permutation) -> PositivePath {
        PositivePath::from_set(self.0.iter().map(|&i| u.apply(i))).expect("image of a valid path")
    }

    /// `(i_m - m, ..., i_1 - 1)`.
    pub fn partition(&self) -> Partition {
        Partition(self.0.iter().enumerate().rev().map(|(t, &i)| i - (t + 1)).collect())
    }

    /// The level-`m` path of a partition in the `m x (n - m)` box.
    pub fn from_partition(mu: &Partition) -> Result<PositivePath> {
        let m = mu.len();
        PositivePath::new((1..=m).map(|t| mu.0[m - t] + t).collect())
    }

    /// Steps as `true` for horizontal, `false` for vertical, over `1..=n`.
    fn directions(&self, n: usize) -> Vec<bool> {
        let mut d = vec![false; n];
        for &i in &self.0 {
            d[i - 1] = true;
        }
        d
    }

    /// The grid edge traversed at each step, `None` on the outer boundary.
    fn step_edges(&self, n: usize) -> Vec<Option<Edge>> {
        let mut out = Vec::with_capacity(n);
        let mut c = 0;
        for (s, h) in self.directions(n).into_iter().enumerate() {
            let s = s + 1;
            if h {
                c += 1;
                out.push((s > c).then_some(Edge::H(s, c)));
            } else {
                out.push((c >= 1).then(|| Edge::V(s - 1, c)));
            }
        }
        out
    }

    /// All interior unit edges lying on the path, in traversal order.
    pub fn edges(&self, n: usize) -> Vec<Edge> {
        self.step_edges(n).into_iter().flatten().collect()
    }

    /// Corners as pairs of the edges meeting there (boundary segments as `None`).
    pub fn corners(&self, n: usize) -> Vec<(Option<Edge>, Option<Edge>)> {
        let dirs = self.directions(n);
        let edges = self.step_edges(n);
        (1..n)
            .filter(|&s| dirs[s - 1] != dirs[s])
            .map(|s| (edges[s - 1], edges[s]))
            .collect()
    }

    pub fn parse(s: &str) -> Result<PositivePath> {
        let t = s.trim().trim_start_matches(['[', '(', '{']).trim_end_matches([']', ')', '}']);
        let steps = if t.contains(',') {
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{x}`: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("`{t}`"))))
                .collect::<Result<Vec<_>>>()?
        };
        PositivePath::new(steps)
    }
}

impl PartialOrd for PositivePath {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by level, then lexicographically.
impl Ord for PositivePath {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.level(), &self.0).cmp(&(other.level(), &other.0))
    }
}

impl fmt::Display for PositivePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for PositivePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "π[{self}]")
    }
}

/// Strictly increasing `size`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < size - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, size, &mut Vec::new(), &mut out);
    out
}

/// The ladder diagram of a partial flag shape.
#[derive(Clone, Debug)]
pub struct LadderDiagram {
    shape: ParabolicShape,
    kinds: Vec<CellKind>,
    edges: Vec<(Edge, bool)>,
    roof: Vec<Edge>,
}

impl LadderDiagram {
    pub fn new(shape: &ParabolicShape) -> Self {
        let n = shape.n();
        let mut kinds = vec![CellKind::Box; cell_count(n)];
        for i in 1..=n {
            for j in 1..=i {
                let l = shape.block_of(j);
                if i - j >= n - shape.cut(l) {
                    kinds[cell_index(i, j)] = CellKind::Constant(l);
                }
            }
        }
        let mut diagram = LadderDiagram {
            shape: shape.clone(),
            kinds,
            edges: Vec::new(),
            roof: Vec::new(),
        };
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in 1..=i {
                if j < i {
                    let e = Edge::H(i, j);
                    if let Some(eff) = diagram.classify(e) {
                        edges.push((e, eff));
                    }
                }
                if i < n {
                    let e = Edge::V(i, j);
                    if let Some(eff) = diagram.classify(e) {
                        edges.push((e, eff));
                    }
                }
            }
        }
        edges.sort();
        diagram.edges = edges;
        diagram.roof = diagram.roof_edges_in_order();
        diagram
    }

    pub fn shape(&self) -> &ParabolicShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn kind(&self, i: usize, j: usize) -> CellKind {
        self.kinds[cell_index(i, j)]
    }

    pub fn kinds(&self) -> &[CellKind] {
        &self.kinds
    }

    /// `None` when the edge separates two constant cells, else its effectiveness.
    fn classify(&self, e: Edge) -> Option<bool> {
        let n = self.n();
        let ((ia, ja), (ib, jb)) = e.cells();
        match (self.kind(ia, ja), self.kind(ib, jb)) {
            (CellKind::Box, CellKind::Box) => Some(true),
            (CellKind::Constant(_), CellKind::Constant(_)) => None,
            (CellKind::Constant(l), CellKind::Box) => match e {
                Edge::H(_, j) => Some(j == self.shape.cut(l - 1) + 1),
                Edge::V(..) => Some(false),
            },
            (CellKind::Box, CellKind::Constant(l)) => match e {
                Edge::V(i, j) => Some(i - j == n - self.shape.cut(l)),
                Edge::H(..) => Some(false),
            },
        }
    }

    /// Every grid edge with its effective flag.
    pub fn all_edges(&self) -> &[(Edge, bool)] {
        &self.edges
    }

    pub fn effective_edges(&self) -> Vec<Edge> {
        self.edges.iter().filter(|(_, eff)| *eff).map(|(e, _)| *e).collect()
    }

    pub fn is_edge(&self, e: Edge) -> bool {
        self.edges.binary_search_by(|(x, _)| x.cmp(&e)).is_ok()
    }

    pub fn is_effective(&self, e: Edge) -> bool {
        self.edges
            .binary_search_by(|(x, _)| x.cmp(&e))
            .map(|k| self.edges[k].1)
            .unwrap_or(false)
    }

    pub fn box_count(&self) -> usize {
        self.kinds.iter().filter(|k| **k == CellKind::Box).count()
    }

    /// Levels `n_1 .. n_k` at which paths define Plücker coordinates.
    pub fn levels(&self) -> &[usize] {
        self.shape.cuts()
    }

    pub fn paths_at_level(&self, level: usize) -> Result<Vec<PositivePath>> {
        if !self.levels().contains(&level) && level != self.n() {
            return Err(Error::InvalidPath(format!("level {level} for shape {}", self.shape)));
        }
        Ok(subsets(self.n(), level).into_iter().map(PositivePath).collect())
    }

    /// Paths at all levels `n_1 .. n_k`, in canonical order.
    pub fn all_paths(&self) -> Vec<PositivePath> {
        self.levels()
            .iter()
            .flat_map(|&l| subsets(self.n(), l).into_iter().map(PositivePath))
            .collect()
    }

    pub fn effective_edges_on(&self, p: &PositivePath) -> Vec<Edge> {
        p.edges(self.n()).into_iter().filter(|e| self.is_effective(*e)).collect()
    }

    /// Roof edges: bottoms of `Q_1 .. Q_k` (right to left) each followed by the
    /// left side of the next square (top to bottom).
    fn roof_edges_in_order(&self) -> Vec<Edge> {
        let n = self.n();
        let mut out = Vec::new();
        for l in 1..=self.shape.k() {
            let (lo, hi) = (self.shape.cut(l - 1), self.shape.cut(l));
            let r = n - hi;
            for j in (lo + 1..=hi).rev() {
                out.push(Edge::H(j + r, j));
            }
            let next = self.shape.cut(l + 1);
            for r in (n - next..n - hi).rev() {
                out.push(Edge::V(hi + r, hi));
            }
        }
        out
    }

    pub fn roof_edges(&self) -> &[Edge] {
        &self.roof
    }

    /// For each roof edge, the path with fewest corners among those having a
    /// corner that contains the edge.
    pub fn special_paths(&self) -> Vec<PositivePath> {
        let n = self.n();
        let paths = self.all_paths();
        let corner_data: Vec<_> = paths.iter().map(|p| p.corners(n)).collect();
        self.roof
            .iter()
            .map(|e| {
                let mut best: Option<(usize, &PositivePath)> = None;
                let mut tie = false;
                for (p, corners) in paths.iter().zip(&corner_data) {
                    if !corners.iter().any(|(a, b)| *a == Some(*e) || *b == Some(*e)) {
                        continue;
                    }
                    match best {
                        Some((c, _)) if corners.len() > c => {}
                        Some((c, _)) if corners.len() == c => tie = true,
                        _ => {
                            best = Some((corners.len(), p));
                            tie = false;
                        }
                    }
                }
                let (_, p) = best.expect("every roof edge lies on a corner of some path");
                debug_assert!(!tie, "special path for {e} is not unique");
                p.clone()
            })
            .collect()
    }

    /// ASCII picture: `#` for boxes, the block number for constant cells.
    pub fn ascii(&self) -> String {
        let n = self.n();
        let mut s = String::new();
        for r in (0..n).rev() {
            for j in 1..=n - r {
                let c = match self.kind(j + r, j) {
                    CellKind::Box => '#',
                    CellKind::Constant(l) => char::from_digit(l as u32 % 36, 36).unwrap_or('*'),
                };
                s.push(c);
            }
            s.push('\n');
        }
        s
    }
}

/// Entries `x^{(i)}_j`, `1 <= j <= i <= n`, over a triangular array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangle {
    n: usize,
    entries: Vec<i64>,
}

impl Triangle {
    pub fn zeros(n: usize) -> Self {
        Triangle {
            n,
            entries: vec![0; cell_count(n)],
        }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != cell_count(n) {
            return Err(Error::InvalidPattern(format!("{} entries for n = {n}", entries.len())));
        }
        Ok(Triangle { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[cell_index(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.entries[cell_index(i, j)] = x;
    }

    pub fn add(&mut self, other: &Triangle) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
    }

    pub fn top_row(&self) -> Vec<i64> {
        (1..=self.n).map(|j| self.get(self.n, j)).collect()
    }

    /// `x^{(i+1)}_j >= x^{(i)}_j >= x^{(i+1)}_{j+1}` everywhere.
    pub fn interlaces(&self) -> bool {
        (1..self.n).all(|i| (1..=i).all(|j| self.get(i + 1, j) >= self.get(i, j) && self.get(i, j) >= self.get(i + 1, j + 1)))
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.n)
            .rev()
            .map(|i| {
                let row: Vec<String> = (1..=i).map(|j| self.get(i, j).to_string()).collect();
                row.join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// A Gelfand-Cetlin pattern `λ^{(i)}_j`.
pub type GcPattern = Triangle;
/// A pattern of exponents `b_{ij}`.
pub type BPattern = Triangle;
/// The 0/1 exponent vector `β_I` of a path.
pub type ExponentVector = Triangle;

/// `β_I`: a one in the box right above each horizontal step.
pub fn exponent_vector(p: &PositivePath, n: usize) -> ExponentVector {
    let mut b = Triangle::zeros(n);
    for (t, &i) in p.steps().iter().enumerate() {
        b.set(i, t + 1, 1);
    }
    b
}

/// `λ^{(i)}_j = b_{i,j} + b_{i-1,j} + ... + b_{j,j}`.
pub fn phi(b: &BPattern) -> GcPattern {
    let n = b.n();
    let mut out = Triangle::zeros(n);
    for j in 1..=n {
        let mut acc = 0;
        for i in j..=n {
            acc += b.get(i, j);
            out.set(i, j, acc);
        }
    }
    out
}

/// `b_{ij} = λ^{(i)}_j - λ^{(i-1)}_j`, with `λ^{(j-1)}_j = 0`.
pub fn psi(lam: &GcPattern) -> BPattern {
    let n = lam.n();
    let mut out = Triangle::zeros(n);
    for j in 1..=n {
        for i in j..=n {
            let below = if i > j { lam.get(i - 1, j) } else { 0 };
            out.set(i, j, lam.get(i, j) - below);
        }
    }
    out
}

/// Check that a numeric top row is compatible with the shape and nonnegative.
pub fn validate_lambda(shape: &ParabolicShape, lambda: &[i64]) -> Result<()> {
    let n = shape.n();
    if lambda.len() != n || lambda[n - 1] < 0 {
        return Err(Error::InvalidPattern(format!("λ = {lambda:?} for shape {shape}")));
    }
    for j in 1..n {
        let same_block = shape.block_of(j) == shape.block_of(j + 1);
        let ok = if same_block { lambda[j - 1] == lambda[j] } else { lambda[j - 1] > lambda[j] };
        if !ok {
            return Err(Error::InvalidPattern(format!("λ = {lambda:?} for shape {shape}")));
        }
    }
    Ok(())
}

/// Write a lattice point as a sum of path exponent vectors, stripping the lowest path first.
/// The result lists `λ_n` copies of the bottom path `π_{1..n}` and `b_j` paths of each level `j`.
pub fn decompose_weight(shape: &ParabolicShape, point: &GcPattern) -> Result<Vec<PositivePath>> {
    let n = shape.n();
    if point.n() != n || !point.interlaces() {
        return Err(Error::InvalidPattern(format!("{point:?}")));
    }
    validate_lambda(shape, &point.top_row())?;
    let mut rest = point.clone();
    let mut out = Vec::new();
    loop {
        let level = (1..=n).take_while(|&t| rest.get(n, t) >= 1).count();
        if level == 0 {
            break;
        }
        let steps: Vec<usize> = (1..=level)
            .map(|t| (t..=n).find(|&i| rest.get(i, t) >= 1).expect("column reaches the top"))
            .collect();
        let p = PositivePath::new(steps).map_err(|_| Error::InvalidPattern(format!("{point:?}")))?;
        let mut shift = phi(&exponent_vector(&p, n));
        for x in shift.entries.iter_mut() {
            *x = -*x;
        }
        rest.add(&shift);
        out.push(p);
    }
    if rest.entries.iter().any(|&x| x != 0) {
        return Err(Error::InvalidPattern(format!("{point:?}")));
    }
    Ok(out)
}

/// `Υ_λ`: all sums `Σ β_{I}` with `λ_n` bottom paths and `b_j` paths of each level `j`.
pub fn weight_set(shape: &ParabolicShape, lambda: &[i64]) -> Result<BTreeSet<BPattern>> {
    validate_lambda(shape, lambda)?;
    let n = shape.n();
    let diagram = LadderDiagram::new(shape);
    let mut base = Triangle::zeros(n);
    for _ in 0..lambda[n - 1] {
        base.add(&exponent_vector(&PositivePath::bottom(n), n));
    }
    let mut sums: BTreeSet<BPattern> = BTreeSet::from([base]);
    for &level in shape.cuts() {
        let b = lambda[level - 1] - lambda[level];
        let vectors: Vec<BPattern> = diagram
            .paths_at_level(level)?
            .iter()
            .map(|p| exponent_vector(p, n))
            .collect();
        // multisets of size b, as nondecreasing index sequences
        let mut layer: BTreeMap<usize, BTreeSet<BPattern>> = BTreeMap::new();
        for s in sums {
            layer.entry(0).or_default().insert(s);
        }
        for _ in 0..b {
            let mut next: BTreeMap<usize, BTreeSet<BPattern>> = BTreeMap::new();
            for (&start, set) in &layer {
                for s in set {
                    for (k, v) in vectors.iter().enumerate().skip(start) {
                        let mut t = s.clone();
                        t.add(v);
                        next.entry(k).or_default().insert(t);
                    }
                }
            }
            layer = next;
        }
        sums = layer.into_values().flatten().collect();
    }
    Ok(sums)
}
