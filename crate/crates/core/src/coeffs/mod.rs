//! Structure constants `N_{u_1 ... u_m}^w` and the moves relating them.

mod classes;
mod lr;
mod schubert;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{grassmannian_perm, star_factorize, Partition, Permutation};

pub use classes::{build_modified_partition, ClassKind, ModifiedPartition, TripleClass};
pub use lr::lr_coefficient;
pub use schubert::{expand, expand_product, schubert_poly, schubert_poly_transition, SchubertPolynomial};

/// Coefficient of `σ^w` in `σ^{u_1} ⋯ σ^{u_m}` in the cohomology of the complete flag variety.
pub fn structure_constant(us: &[Permutation], w: &Permutation) -> Result<i64> {
    let n = w.n();
    if let Some(u) = us.iter().find(|u| u.n() != n) {
        return Err(Error::RankMismatch(u.n(), n));
    }
    if us.iter().map(Permutation::length).sum::<usize>() != w.length() {
        return Ok(0);
    }
    if us.iter().any(|u| !u.bruhat_leq(w)) {
        return Ok(0);
    }
    let factors: Vec<Permutation> = us.iter().filter(|u| !u.is_identity()).cloned().collect();
    match factors.len() {
        0 => return Ok(i64::from(w.is_identity())),
        1 => return Ok(i64::from(factors[0] == *w)),
        _ => {}
    }
    Ok(expand_product(&factors).get(&w.trimmed()).copied().unwrap_or(0))
}

/// A triple `(u, v, w)` standing for `N_{u,v}^w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub u: Permutation,
    pub v: Permutation,
    pub w: Permutation,
}

impl Triple {
    pub fn new(u: Permutation, v: Permutation, w: Permutation) -> Result<Self> {
        for x in [&u, &v] {
            if x.n() != w.n() {
                return Err(Error::RankMismatch(x.n(), w.n()));
            }
        }
        Ok(Triple { u, v, w })
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// `ℓ(w) = ℓ(u) + ℓ(v)`.
    pub fn is_graded(&self) -> bool {
        self.w.length() == self.u.length() + self.v.length()
    }

    /// `u ≤ w` and `v ≤ w` in Bruhat order.
    pub fn is_bounded(&self) -> bool {
        self.u.bruhat_leq(&self.w) && self.v.bruhat_leq(&self.w)
    }

    pub fn constant(&self) -> i64 {
        structure_constant(&[self.u.clone(), self.v.clone()], &self.w).expect("ranks agree")
    }

    pub fn swap(&self) -> Triple {
        Triple { u: self.v.clone(), v: self.u.clone(), w: self.w.clone() }
    }

    /// Conjugate every entry by `w_0`.
    pub fn conjugate(&self) -> Triple {
        let w0 = Permutation::longest(self.n());
        let c = |x: &Permutation| w0.mul(x).mul(&w0);
        Triple { u: c(&self.u), v: c(&self.v), w: c(&self.w) }
    }

    /// `(u, w_0 w, w_0 v)`.
    pub fn dual(&self) -> Triple {
        let w0 = Permutation::longest(self.n());
        Triple { u: self.u.clone(), v: w0.mul(&self.w), w: w0.mul(&self.v) }
    }

    pub fn tuple(&self) -> Tuple {
        Tuple { factors: vec![self.u.clone(), self.v.clone()], w: self.w.clone() }
    }

    pub fn parse(text: &str, n: Option<usize>) -> Result<Triple> {
        let parts: Vec<&str> = text.split(';').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected u;v;w, got {text:?}")));
        }
        let w = Permutation::parse(parts[2], n)?;
        let n = Some(w.n());
        Triple::new(Permutation::parse(parts[0], n)?, Permutation::parse(parts[1], n)?, w)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.u, self.v, self.w)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N[{}, {} ; {}]", self.u.word_string(), self.v.word_string(), self.w.word_string())
    }
}

/// A tuple `(u_1, ..., u_m, w)` standing for `N_{u_1 ... u_m}^w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Tuple {
    pub factors: Vec<Permutation>,
    pub w: Permutation,
}

impl Tuple {
    pub fn constant(&self) -> Result<i64> {
        structure_constant(&self.factors, &self.w)
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in &self.factors {
            write!(f, "{u};")?;
        }
        write!(f, "{}", self.w)
    }
}

/// Every triple reachable by swapping, conjugating by `w_0` and dualizing.
pub fn apply_identities(t: &Triple) -> Vec<Triple> {
    let mut seen = vec![t.clone()];
    let mut i = 0;
    while i < seen.len() {
        let cur = seen[i].clone();
        for next in [cur.swap(), cur.conjugate(), cur.dual()] {
            if !seen.contains(&next) {
                seen.push(next);
            }
        }
        i += 1;
    }
    seen.sort();
    seen
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecursionOutcome {
    /// `N_{u,v}^w = N_{u s_i, v}^{w s_i}`.
    Moved(Triple),
    Zero,
    NotApplicable,
}

/// The descent recursion at `s_i`.
pub fn recursion_step(t: &Triple, i: usize) -> RecursionOutcome {
    if i == 0 || i >= t.n() {
        return RecursionOutcome::NotApplicable;
    }
    if t.u.has_right_descent(i) || t.v.has_right_descent(i) {
        return RecursionOutcome::NotApplicable;
    }
    if t.w.has_right_descent(i) {
        return RecursionOutcome::Zero;
    }
    RecursionOutcome::Moved(Triple { u: t.u.mul_simple_right(i), v: t.v.clone(), w: t.w.mul_simple_right(i) })
}

/// Replace `u` and `v` by their star factors.
pub fn split_by_star(t: &Triple) -> Tuple {
    let split = |x: &Permutation| match star_factorize(x) {
        Ok(s) => s.factors,
        Err(_) => vec![x.clone()],
    };
    let mut factors = split(&t.u);
    factors.extend(split(&t.v));
    Tuple { factors, w: t.w.clone() }
}

/// Partitions `η` obtained from `μ` by adding one box inside `m x (n - m)`.
pub fn chevalley(mu: &Partition, m: usize, n: usize) -> Vec<Partition> {
    let p = mu.parts();
    (0..m)
        .filter(|&i| p[i] < n - m && (i == 0 || p[i - 1] > p[i]))
        .map(|i| {
            let mut e = p.to_vec();
            e[i] += 1;
            Partition(e)
        })
        .collect()
}

/// `σ^{(1,1)} σ^μ` in `Gr(2, n)`: a single class or zero.
pub fn pieri_gr2(mu: &Partition, n: usize) -> Option<Partition> {
    let p = mu.parts();
    (p.len() == 2 && p[0] < n - 2).then(|| Partition(vec![p[0] + 1, p[1] + 1]))
}

/// Coefficient of `σ^{(r+q)}` in `σ^{(r)} σ^{(q)}` on `Gr(m, n)`.
pub fn special_constant(m: usize, n: usize, r: usize, q: usize) -> i64 {
    i64::from(m < n && r + q <= n - m)
}

/// How a `Gr(2, n)` constant reduces to a special one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gr2Reduction {
    Zero,
    /// `N = N_{(r),(q)}^{(r+q)}` on `Gr(m, n)`.
    Special { m: usize, n: usize, r: usize, q: usize },
    /// The reduced Grassmannian would not be proper; evaluate directly.
    Direct,
}

pub fn gr2_reduction(lambda: &Partition, mu: &Partition, eta: &Partition, n: usize) -> Result<Gr2Reduction> {
    for p in [lambda, mu, eta] {
        if !p.fits(2, n) {
            return Err(Error::InvalidPartition(format!("{p} in Gr(2,{n})")));
        }
    }
    let (l, m, e) = (lambda.parts(), mu.parts(), eta.parts());
    if e[1] < l[1] + m[1] {
        return Ok(Gr2Reduction::Zero);
    }
    let a = l[0] - l[1];
    let b = m[0] - m[1];
    let shift = l[1] + m[1];
    if e[0] < shift {
        return Ok(Gr2Reduction::Zero);
    }
    let (c, d) = (e[0] - shift, e[1] - shift);
    if !(n >= 2 + c && c >= d && c + d == a + b && c >= a.max(b)) {
        return Ok(Gr2Reduction::Zero);
    }
    if d + 2 >= n {
        return Ok(Gr2Reduction::Direct);
    }
    Ok(Gr2Reduction::Special { m: d + 2, n, r: a - d, q: b - d })
}

/// `N_{λμ}^η` on `Gr(2, n)` through the reduction to special constants.
pub fn gr2_constant(lambda: &Partition, mu: &Partition, eta: &Partition, n: usize) -> Result<i64> {
    Ok(match gr2_reduction(lambda, mu, eta, n)? {
        Gr2Reduction::Zero => 0,
        Gr2Reduction::Special { m, n, r, q } => special_constant(m, n, r, q),
        Gr2Reduction::Direct => grassmannian_constant(lambda, mu, eta, 2, n)?,
    })
}

/// `N_{w_λ, w_μ}^{w_η}` computed in the complete flag variety.
pub fn grassmannian_constant(lambda: &Partition, mu: &Partition, eta: &Partition, m: usize, n: usize) -> Result<i64> {
    let u = grassmannian_perm(lambda, m, n)?;
    let v = grassmannian_perm(mu, m, n)?;
    let w = grassmannian_perm(eta, m, n)?;
    structure_constant(&[u, v], &w)
}
