//! Kogan faces (equalities down columns) and dual Kogan faces (equalities
//! along diagonals) of the complete flag polytope, with their words.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gc_polytope::{FaceUnion, Polytope};
use crate::ladder::Edge;
use crate::pluecker::{delta_schubert, delta_uv};
use crate::weyl::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoganFace {
    pub dual: bool,
    pub edges: Vec<Edge>,
    pub word: Vec<usize>,
    pub perm: Permutation,
    pub reduced: bool,
}

/// The edges carrying letters, in reading order, with their letters.
///
/// Kogan: the bottom edge of the box in column `t`, row `r >= 1` is `H(t + r, t)`
/// and carries `s_{n-r}`; read bottom to top, then left to right.
/// Dual: the right edge of the box in column `t`, row `r` is `V(t + r, t)` and
/// carries `s_t`; read left to right, then bottom to top.
pub fn reading_order(n: usize, dual: bool) -> Vec<(Edge, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    if dual {
        for r in 0..n - 1 {
            for t in 1..n - r {
                out.push((Edge::V(t + r, t), t));
            }
        }
    } else {
        for t in 1..n {
            for r in 1..=n - t {
                out.push((Edge::H(t + r, t), n - r));
            }
        }
    }
    out
}

fn complete_shape_check(p: &Polytope) -> Result<()> {
    if p.shape().is_complete() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("Kogan faces need a complete flag shape, got {}", p.shape())))
    }
}

fn face_from_positions(n: usize, order: &[(Edge, usize)], positions: &[usize], dual: bool) -> KoganFace {
    let edges: Vec<Edge> = positions.iter().map(|&k| order[k].0).collect();
    let word: Vec<usize> = positions.iter().map(|&k| order[k].1).collect();
    let perm = Permutation::from_word(&word, n).expect("letters below n");
    let reduced = perm.length() == word.len();
    KoganFace { dual, edges, word, perm, reduced }
}

/// Read the word of a face given by its edges.
pub fn read_word(n: usize, edges: &[Edge], dual: bool) -> Result<KoganFace> {
    let order = reading_order(n, dual);
    let mut positions = Vec::with_capacity(edges.len());
    for e in edges {
        let k = order
            .iter()
            .position(|(f, _)| f == e)
            .ok_or_else(|| Error::NotEffective(format!("{e} is not a {} edge of Fl_{n}", if dual { "dual Kogan" } else { "Kogan" })))?;
        positions.push(k);
    }
    positions.sort_unstable();
    positions.dedup();
    Ok(face_from_positions(n, &order, &positions, dual))
}

/// The face picking the given 1-based positions of the reading word of `w_0`.
pub fn from_positions(n: usize, positions: &[usize], dual: bool) -> Result<KoganFace> {
    let order = reading_order(n, dual);
    let mut idx = Vec::with_capacity(positions.len());
    for &k in positions {
        if k == 0 || k > order.len() {
            return Err(Error::Precondition(format!("position {k} outside 1..={}", order.len())));
        }
        idx.push(k - 1);
    }
    idx.sort_unstable();
    idx.dedup();
    Ok(face_from_positions(n, &order, &idx, dual))
}

/// Every reduced (dual) Kogan face whose word multiplies to `target`.
pub fn enumerate_reduced(target: &Permutation, dual: bool) -> Vec<KoganFace> {
    let n = target.n();
    let order = reading_order(n, dual);
    let goal = target.length();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn dfs(
        k: usize,
        cur: &Permutation,
        order: &[(Edge, usize)],
        target: &Permutation,
        goal: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let len = chosen.len();
        if len == goal {
            if cur == target {
                out.push(chosen.clone());
            }
            return;
        }
        if order.len() - k < goal - len {
            return;
        }
        let next = cur.mul_simple_right(order[k].1);
        // `next` must remain a prefix of `target` in the right weak order.
        if next.length() == len + 1 && next.inverse().mul(target).length() == goal - len - 1 {
            chosen.push(k);
            dfs(k + 1, &next, order, target, goal, chosen, out);
            chosen.pop();
        }
        dfs(k + 1, cur, order, target, goal, chosen, out);
    }
    let mut found = Vec::new();
    dfs(0, &Permutation::identity(n), &order, target, goal, &mut chosen, &mut found);
    for positions in found {
        out.push(face_from_positions(n, &order, &positions, dual));
    }
    out
}

/// Union of the reduced Kogan faces attached to `X_v`, or of the reduced dual
/// Kogan faces attached to `X^v` when `opposite`.
pub fn degeneration_union(p: &Polytope, v: &Permutation, opposite: bool) -> Result<FaceUnion> {
    complete_shape_check(p)?;
    if v.n() != p.n() {
        return Err(Error::RankMismatch(v.n(), p.n()));
    }
    let target = if opposite { v.clone() } else { Permutation::longest(p.n()).mul(v) };
    let mut faces = Vec::new();
    for f in enumerate_reduced(&target, opposite) {
        if let Some(face) = p.face_from_edges(&f.edges)? {
            faces.push(face);
        }
    }
    Ok(FaceUnion::from_faces(faces))
}

/// Whether the Kogan union agrees with the facet union computed from the
/// vanishing Plücker coordinates.
pub fn agrees_with_delta(p: &Polytope, v: &Permutation, opposite: bool) -> Result<bool> {
    let kogan = degeneration_union(p, v, opposite)?;
    let delta = if opposite { delta_uv(p, &Permutation::identity(p.n()), v)? } else { delta_schubert(p, v)? };
    let same = kogan == delta;
    if !same {
        log::info!("Kogan union differs from the Plücker facet union for {v} (opposite: {opposite})");
    }
    Ok(same)
}
