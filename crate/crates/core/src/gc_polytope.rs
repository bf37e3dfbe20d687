//! Exact face arithmetic on the Gelfand-Cetlin polytope of a partial flag shape.
//!
//! The top row is kept symbolic: block `l` carries the value `a_l` with
//! `a_1 > a_2 > ... > a_{k+1}`. A face is stored by the set of facets that
//! contain it, which identifies it uniquely. Intersections are closed by a
//! saturation of the equality system over the interlacing order; the vertex
//! list gives an independent, brute-force view of every face.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::{cell_count, cell_index, validate_lambda, CellKind, Edge, GcPattern, LadderDiagram, PositivePath, Triangle};
use crate::weyl::{ParabolicShape, Partition};

/// Largest rank whose cells and facets fit in a 128-bit mask.
pub const MAX_RANK: usize = 11;

type Mask = u128;

#[inline]
fn bit(k: usize) -> Mask {
    1u128 << k
}

/// A nonempty face, identified by the facets containing it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face {
    facets: Mask,
}

impl Face {
    pub fn facet_mask(&self) -> u128 {
        self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.count_ones() as usize
    }

    /// Point-set containment `self ⊇ other`.
    pub fn contains(&self, other: &Face) -> bool {
        self.facets & !other.facets == 0
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face({:#x})", self.facets)
    }
}

/// Result of saturating an equality system.
#[derive(Clone, Debug)]
pub struct Closure {
    pub face: Face,
    pub dim: usize,
    /// Block each cell is pinned to, if any.
    pub pinned: Vec<Option<u8>>,
}

/// A vertex: a pattern whose entries are top-row values, with its tight facets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Vertex {
    /// Block index of every cell, in cell order.
    pub blocks: Vec<u8>,
    /// Facets through the vertex, written as a hex string in JSON.
    #[serde(with = "hex_mask")]
    pub tight: u128,
}

mod hex_mask {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(mask: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{mask:#x}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let text = String::deserialize(d)?;
        let digits = text.strip_prefix("0x").ok_or_else(|| D::Error::custom(format!("mask `{text}` lacks 0x")))?;
        u128::from_str_radix(digits, 16).map_err(D::Error::custom)
    }
}

impl Vertex {
    pub fn block(&self, i: usize, j: usize) -> usize {
        self.blocks[cell_index(i, j)] as usize
    }

    pub fn face(&self) -> Face {
        Face { facets: self.tight }
    }

    pub fn facet_count(&self) -> usize {
        self.tight.count_ones() as usize
    }

    /// Numeric pattern for a given top-row value per block.
    pub fn pattern(&self, n: usize, block_values: &[i64]) -> GcPattern {
        Triangle::from_entries(n, self.blocks.iter().map(|&b| block_values[b as usize - 1]).collect())
            .expect("cell count matches")
    }
}

/// An antichain of maximal faces; the empty list is the empty set.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FaceUnion {
    faces: Vec<Face>,
}

impl FaceUnion {
    pub fn empty() -> Self {
        FaceUnion { faces: Vec::new() }
    }

    pub fn single(face: Face) -> Self {
        FaceUnion { faces: vec![face] }
    }

    /// Keep maximal faces only, in canonical order.
    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut all: Vec<Face> = faces.into_iter().collect();
        all.sort_by_key(|f| (f.facet_count(), f.facets));
        all.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(all.len());
        for f in all {
            if !kept.iter().any(|g| g.contains(&f)) {
                kept.push(f);
            }
        }
        kept.sort();
        FaceUnion { faces: kept }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn union(&self, other: &FaceUnion) -> FaceUnion {
        FaceUnion::from_faces(self.faces.iter().chain(&other.faces).copied())
    }

    pub fn intersect(&self, other: &FaceUnion, p: &Polytope) -> FaceUnion {
        let mut out = Vec::new();
        for f in &self.faces {
            for g in &other.faces {
                if let Some(h) = p.intersect(f, g) {
                    out.push(h);
                }
            }
        }
        FaceUnion::from_faces(out)
    }

    /// Point-set containment `self ⊇ other`.
    pub fn contains(&self, other: &FaceUnion) -> bool {
        other.faces.iter().all(|g| self.faces.iter().any(|f| f.contains(g)))
    }
}

/// The Gelfand-Cetlin polytope of a shape with symbolic top row.
#[derive(Debug)]
pub struct Polytope {
    diagram: LadderDiagram,
    facets: Vec<Edge>,
    facet_cells: Vec<(usize, usize)>,
    /// `(upper, lower)` cell pairs of every interlacing inequality.
    relations: Vec<(usize, usize)>,
    /// Representative cell of each block's constant region.
    block_cell: Vec<usize>,
    lambda: Option<Vec<i64>>,
    vertices: OnceLock<Vec<Vertex>>,
}

impl Polytope {
    pub fn new(shape: &ParabolicShape) -> Result<Self> {
        let n = shape.n();
        if n > MAX_RANK {
            return Err(Error::BoundExceeded(format!("polytope rank {n} > {MAX_RANK}")));
        }
        let diagram = LadderDiagram::new(shape);
        let facets = diagram.effective_edges();
        let facet_cells = facets
            .iter()
            .map(|e| {
                let ((ia, ja), (ib, jb)) = e.cells();
                (cell_index(ia, ja), cell_index(ib, jb))
            })
            .collect();
        let mut relations = Vec::new();
        for i in 1..n {
            for j in 1..=i {
                relations.push((cell_index(i + 1, j), cell_index(i, j)));
                relations.push((cell_index(i, j), cell_index(i + 1, j + 1)));
            }
        }
        let block_cell = (1..=shape.k() + 1).map(|l| cell_index(n, shape.cut(l))).collect();
        Ok(Polytope {
            diagram,
            facets,
            facet_cells,
            relations,
            block_cell,
            lambda: None,
            vertices: OnceLock::new(),
        })
    }

    /// Polytope with a numeric top row, validated against the shape.
    pub fn with_lambda(shape: &ParabolicShape, lambda: &[i64]) -> Result<Self> {
        validate_lambda(shape, lambda)?;
        let mut p = Self::new(shape)?;
        p.lambda = Some(lambda.to_vec());
        Ok(p)
    }

    pub fn diagram(&self) -> &LadderDiagram {
        &self.diagram
    }

    pub fn shape(&self) -> &ParabolicShape {
        self.diagram.shape()
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    pub fn block_count(&self) -> usize {
        self.shape().k() + 1
    }

    pub fn lambda(&self) -> Option<&[i64]> {
        self.lambda.as_deref()
    }

    /// Value of each block used for numeric work (`a_l`).
    pub fn block_values(&self) -> Vec<i64> {
        match &self.lambda {
            Some(l) => (1..=self.block_count()).map(|b| l[self.shape().cut(b) - 1]).collect(),
            None => (1..=self.block_count()).map(|b| (self.block_count() - b) as i64).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.diagram.box_count()
    }

    pub fn facets(&self) -> &[Edge] {
        &self.facets
    }

    pub fn facet_index(&self, e: Edge) -> Option<usize> {
        self.facets.binary_search(&e).ok()
    }

    pub fn whole(&self) -> Face {
        Face { facets: 0 }
    }

    pub fn facet(&self, e: Edge) -> Result<Face> {
        let k = self.facet_index(e).ok_or_else(|| Error::NotEffective(e.to_string()))?;
        Ok(self.closure_of_mask(bit(k)).expect("facets are nonempty").face)
    }

    pub fn face_edges(&self, f: &Face) -> Vec<Edge> {
        (0..self.facets.len()).filter(|&k| f.facets & bit(k) != 0).map(|k| self.facets[k]).collect()
    }

    pub fn face_from_edges(&self, edges: &[Edge]) -> Result<Option<Face>> {
        let mut mask = 0;
        for e in edges {
            mask |= bit(self.facet_index(*e).ok_or_else(|| Error::NotEffective(e.to_string()))?);
        }
        Ok(self.closure_of_mask(mask).map(|c| c.face))
    }

    /// Face cut out by equalities between cells, given as `((i, j), (i', j'))`.
    pub fn face_from_atoms(&self, atoms: &[((usize, usize), (usize, usize))]) -> Option<Face> {
        let pairs: Vec<(usize, usize)> = atoms.iter().map(|&((a, b), (c, d))| (cell_index(a, b), cell_index(c, d))).collect();
        self.saturate(&pairs).map(|c| c.face)
    }

    /// Face pinning the given cells to the value of block `l`.
    pub fn face_pinning(&self, cells: &[(usize, usize)], block: usize) -> Option<Face> {
        let target = self.block_cell[block - 1];
        let pairs: Vec<(usize, usize)> = cells.iter().map(|&(i, j)| (cell_index(i, j), target)).collect();
        self.saturate(&pairs).map(|c| c.face)
    }

    pub fn intersect(&self, f: &Face, g: &Face) -> Option<Face> {
        let mask = f.facets | g.facets;
        if mask == f.facets {
            return Some(*f);
        }
        if mask == g.facets {
            return Some(*g);
        }
        self.closure_of_mask(mask).map(|c| c.face)
    }

    pub fn meet_facet(&self, f: &Face, k: usize) -> Option<Face> {
        if f.facets & bit(k) != 0 {
            return Some(*f);
        }
        self.closure_of_mask(f.facets | bit(k)).map(|c| c.face)
    }

    pub fn closure(&self, f: &Face) -> Closure {
        self.closure_of_mask(f.facets).expect("stored faces are nonempty")
    }

    /// Dimension through saturation; `-1` for the empty face.
    pub fn face_dimension(&self, f: Option<&Face>) -> i64 {
        match f {
            None => -1,
            Some(f) => self.closure(f).dim as i64,
        }
    }

    fn closure_of_mask(&self, mask: Mask) -> Option<Closure> {
        let pairs: Vec<(usize, usize)> = (0..self.facets.len())
            .filter(|&k| mask & bit(k) != 0)
            .map(|k| self.facet_cells[k])
            .collect();
        self.saturate(&pairs)
    }

    /// Merge equal cells, collapse cycles of the interlacing order, and detect
    /// contradictions between constants. Free classes left over are independent,
    /// so their number is the dimension.
    fn saturate(&self, atoms: &[(usize, usize)]) -> Option<Closure> {
        let n = self.n();
        let cells = cell_count(n);
        let kinds = self.diagram.kinds();
        let mut parent: Vec<usize> = (0..cells).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };
        for (c, kind) in kinds.iter().enumerate() {
            if let CellKind::Constant(l) = kind {
                union(&mut parent, c, self.block_cell[l - 1]);
            }
        }
        for &(a, b) in atoms {
            union(&mut parent, a, b);
        }
        let mut class_of = vec![usize::MAX; cells];
        let mut roots: Vec<usize> = Vec::new();
        for c in 0..cells {
            let r = find(&mut parent, c);
            if class_of[r] == usize::MAX {
                class_of[r] = roots.len();
                roots.push(r);
            }
            class_of[c] = class_of[r];
        }
        let m = roots.len();
        let mut block: Vec<Option<u8>> = vec![None; m];
        for (c, kind) in kinds.iter().enumerate() {
            if let CellKind::Constant(l) = kind {
                let x = class_of[c];
                match block[x] {
                    Some(b) if b as usize != *l => return None,
                    _ => block[x] = Some(*l as u8),
                }
            }
        }
        let rel: Vec<(usize, usize)> = self
            .relations
            .iter()
            .map(|&(a, b)| (class_of[a], class_of[b]))
            .filter(|(a, b)| a != b)
            .collect();
        let mut reach: Vec<Mask> = vec![0; m];
        loop {
            let mut changed = false;
            for &(hi, lo) in &rel {
                let add = reach[lo] | bit(lo);
                if reach[hi] | add != reach[hi] {
                    reach[hi] |= add;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for x in 0..m {
            if let Some(bx) = block[x] {
                for y in 0..m {
                    if x != y && reach[x] & bit(y) != 0 {
                        if let Some(by) = block[y] {
                            if bx >= by {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        let mut scc = vec![usize::MAX; m];
        let mut scc_block: Vec<Option<u8>> = Vec::new();
        for x in 0..m {
            if scc[x] != usize::MAX {
                continue;
            }
            let id = scc_block.len();
            let mut b = None;
            for y in x..m {
                if y == x || (reach[x] & bit(y) != 0 && reach[y] & bit(x) != 0) {
                    scc[y] = id;
                    b = b.or(block[y]);
                }
            }
            scc_block.push(b);
        }
        let dim = scc_block.iter().filter(|b| b.is_none()).count();
        let mut facets: Mask = 0;
        for (k, &(a, b)) in self.facet_cells.iter().enumerate() {
            if scc[class_of[a]] == scc[class_of[b]] {
                facets |= bit(k);
            }
        }
        let pinned = (0..cells).map(|c| scc_block[scc[class_of[c]]]).collect();
        Some(Closure {
            face: Face { facets },
            dim,
            pinned,
        })
    }

    /// The vertex of a 0-dimensional face.
    pub fn face_point(&self, f: &Face) -> Option<Vertex> {
        let c = self.closure(f);
        if c.dim != 0 {
            return None;
        }
        let blocks: Vec<u8> = c.pinned.iter().map(|b| b.expect("0-dimensional faces pin every cell")).collect();
        let tight = self.tight_mask(&blocks);
        Some(Vertex { blocks, tight })
    }

    fn tight_mask(&self, blocks: &[u8]) -> Mask {
        self.facet_cells
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| blocks[a] == blocks[b])
            .fold(0, |m, (k, _)| m | bit(k))
    }

    /// All vertices, enumerated once.
    pub fn vertices(&self) -> &[Vertex] {
        self.vertices.get_or_init(|| self.enumerate_vertices())
    }

    fn enumerate_vertices(&self) -> Vec<Vertex> {
        let n = self.n();
        let kinds = self.diagram.kinds();
        let mut blocks = vec![0u8; cell_count(n)];
        for j in 1..=n {
            blocks[cell_index(n, j)] = self.shape().block_of(j) as u8;
        }
        let order: Vec<(usize, usize)> = (1..n).rev().flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
        let mut out = Vec::new();
        self.assign(&order, 0, &mut blocks, kinds, &mut out);
        out
    }

    fn assign(&self, order: &[(usize, usize)], pos: usize, blocks: &mut Vec<u8>, kinds: &[CellKind], out: &mut Vec<Vertex>) {
        if pos == order.len() {
            if self.is_isolated(blocks) {
                let tight = self.tight_mask(blocks);
                out.push(Vertex {
                    blocks: blocks.clone(),
                    tight,
                });
            }
            return;
        }
        let (i, j) = order[pos];
        let lo = blocks[cell_index(i + 1, j)];
        let hi = blocks[cell_index(i + 1, j + 1)];
        let c = cell_index(i, j);
        match kinds[c] {
            CellKind::Constant(l) => {
                let l = l as u8;
                if lo <= l && l <= hi {
                    blocks[c] = l;
                    self.assign(order, pos + 1, blocks, kinds, out);
                }
            }
            CellKind::Box => {
                for b in lo..=hi {
                    blocks[c] = b;
                    self.assign(order, pos + 1, blocks, kinds, out);
                }
            }
        }
    }

    /// Every connected region of equal adjacent entries contains a constant cell.
    fn is_isolated(&self, blocks: &[u8]) -> bool {
        let kinds = self.diagram.kinds();
        let cells = blocks.len();
        let mut anchored: Vec<bool> = kinds.iter().map(|k| matches!(k, CellKind::Constant(_))).collect();
        loop {
            let mut changed = false;
            for &(a, b) in &self.relations {
                if blocks[a] == blocks[b] && anchored[a] != anchored[b] {
                    anchored[a] = true;
                    anchored[b] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (0..cells).all(|c| anchored[c])
    }

    /// Vertices lying on the face.
    pub fn face_vertices(&self, f: &Face) -> Vec<&Vertex> {
        self.vertices().iter().filter(|v| f.facets & !v.tight == 0).collect()
    }

    /// Affine rank of the vertex set of the face; `-1` when no vertex satisfies it.
    pub fn dimension_oracle(&self, f: &Face) -> i64 {
        let verts = self.face_vertices(f);
        let values = self.block_values();
        let vecs: Vec<Vec<i64>> = verts
            .iter()
            .map(|v| v.blocks.iter().map(|&b| values[b as usize - 1]).collect())
            .collect();
        affine_rank(&vecs)
    }

    /// Effective facets through the vertex equal the dimension.
    pub fn is_regular(&self, v: &Vertex) -> bool {
        v.facet_count() == self.dim()
    }

    /// Whether the coordinate point of `v` lies on the flag variety.
    pub fn in_vx(&self, v: &Vertex) -> Result<bool> {
        let shape = self.shape();
        if shape.is_grassmannian().is_some() {
            return Ok(true);
        }
        if !shape.is_complete() {
            return Err(Error::UnsupportedShape(shape.to_string()));
        }
        let n = self.n();
        for i in 1..=n.saturating_sub(2) {
            for j in 1..=i {
                let x = v.block(i, j);
                if v.block(i + 1, j + 1) == x && v.block(i + 1, j) == x && v.block(i + 2, j + 1) == x {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For each level `n_l`, the path separating values `>= a_l` from the rest.
    pub fn coordinate_point(&self, v: &Vertex) -> Vec<PositivePath> {
        let n = self.n();
        (1..=self.shape().k())
            .map(|l| {
                let level = self.shape().cut(l);
                let steps = (1..=level)
                    .map(|t| (t..=n).find(|&i| v.block(i, t) <= l).expect("top row reaches a_l"))
                    .collect();
                PositivePath::new(steps).expect("separating path is strictly increasing")
            })
            .collect()
    }

    fn grassmannian_m(&self) -> Result<usize> {
        self.shape()
            .is_grassmannian()
            .ok_or_else(|| Error::Precondition(format!("shape {} is not a Grassmannian", self.shape())))
    }

    /// Cells `(i, j)` of boxes below the path of `mu`.
    fn boxes_below(&self, mu: &Partition) -> Result<(Vec<(usize, usize)>, Vec<(usize, usize)>)> {
        let m = self.grassmannian_m()?;
        let n = self.n();
        if !mu.fits(m, n) {
            return Err(Error::InvalidPartition(format!("{mu} in Gr({m},{n})")));
        }
        let p = PositivePath::from_partition(mu)?;
        let (mut below, mut above) = (Vec::new(), Vec::new());
        for (t, &i) in p.steps().iter().enumerate() {
            let t = t + 1;
            for r in 0..n - m {
                if r < i - t {
                    below.push((t + r, t));
                } else {
                    above.push((t + r, t));
                }
            }
        }
        Ok((below, above))
    }

    /// `F_μ`: every box below the path of `mu` equals `b`.
    pub fn named_face_f(&self, mu: &Partition) -> Result<Face> {
        let (below, _) = self.boxes_below(mu)?;
        Ok(self.face_pinning(&below, 2).expect("F_μ is nonempty"))
    }

    /// `F^∨_μ`: every box above the path of `mu` equals `a`.
    pub fn named_face_fvee(&self, mu: &Partition) -> Result<Face> {
        let (_, above) = self.boxes_below(mu)?;
        Ok(self.face_pinning(&above, 1).expect("F^∨_μ is nonempty"))
    }

    /// `Δ_(k) = Δ ∩ {λ^{(k)}_1 = λ^{(k+1)}_1, λ^{(k)}_2 = λ^{(k+1)}_2}` on `Gr(2, n)`,
    /// reading `λ^{(1)}_2` as `b`.
    pub fn delta_k_face(&self, k: usize) -> Result<Face> {
        let m = self.grassmannian_m()?;
        let n = self.n();
        if m != 2 || k == 0 || k > n - 2 {
            return Err(Error::Precondition(format!("Δ_({k}) needs Gr(2,n) with 1 <= k <= n-2")));
        }
        let mut atoms = vec![((k, 1), (k + 1, 1))];
        if k >= 2 {
            atoms.push(((k, 2), (k + 1, 2)));
        } else {
            atoms.push(((2, 2), (n, n)));
        }
        Ok(self.face_from_atoms(&atoms).expect("Δ_(k) is nonempty"))
    }

    /// Block symbols of the boxes of `v`, in cell order.
    pub fn vertex_row(&self, v: &Vertex) -> Vec<String> {
        let n = self.n();
        (1..=n)
            .flat_map(|i| (1..=i).map(move |j| (i, j)))
            .filter(|&(i, j)| self.diagram.kind(i, j) == CellKind::Box)
            .map(|(i, j)| format!("a{}", v.block(i, j)))
            .collect()
    }

    /// Header matching [`Polytope::vertex_row`].
    pub fn box_labels(&self) -> Vec<String> {
        let n = self.n();
        (1..=n)
            .flat_map(|i| (1..=i).map(move |j| (i, j)))
            .filter(|&(i, j)| self.diagram.kind(i, j) == CellKind::Box)
            .map(|(i, j)| format!("l{i}_{j}"))
            .collect()
    }
}

/// Affine rank of a point set, `-1` if empty. Exact integer elimination.
pub fn affine_rank(points: &[Vec<i64>]) -> i64 {
    let Some(first) = points.first() else {
        return -1;
    };
    let mut basis: Vec<Vec<i128>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for p in &points[1..] {
        let mut v: Vec<i128> = p.iter().zip(first).map(|(a, b)| (*a - *b) as i128).collect();
        for (row, &piv) in basis.iter().zip(&pivots) {
            if v[piv] != 0 {
                let (a, b) = (row[piv], v[piv]);
                for (x, y) in v.iter_mut().zip(row) {
                    *x = *x * a - *y * b;
                }
                normalize(&mut v);
            }
        }
        if let Some(piv) = v.iter().position(|&x| x != 0) {
            basis.push(v);
            pivots.push(piv);
        }
    }
    basis.len() as i64
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Integral patterns with top row `lambda`: the lattice points `Π_λ`.
pub fn lattice_points(shape: &ParabolicShape, lambda: &[i64]) -> Result<Vec<GcPattern>> {
    validate_lambda(shape, lambda)?;
    let n = shape.n();
    let mut t = Triangle::zeros(n);
    for (j, &x) in lambda.iter().enumerate() {
        t.set(n, j + 1, x);
    }
    let order: Vec<(usize, usize)> = (1..n).rev().flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fn rec(order: &[(usize, usize)], pos: usize, t: &mut Triangle, out: &mut Vec<GcPattern>) {
        if pos == order.len() {
            out.push(t.clone());
            return;
        }
        let (i, j) = order[pos];
        for x in t.get(i + 1, j + 1)..=t.get(i + 1, j) {
            t.set(i, j, x);
            rec(order, pos + 1, t, out);
        }
    }
    rec(&order, 0, &mut t, &mut out);
    out.sort();
    Ok(out)
}
