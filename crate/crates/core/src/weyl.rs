//! Type A Weyl group combinatorics: permutations in one-line notation,
//! Bruhat order, reduced words, parabolic quotients and star factorizations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` stored by its window `w(1) .. w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    window: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(window: Vec<u8>) -> Result<Self> {
        Permutation::from_window(window.into_iter().map(usize::from).collect())
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.window
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n as u8).collect(),
        }
    }

    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        if n == 0 || n > 64 {
            return Err(Error::InvalidPermutation(format!("rank {n} out of range")));
        }
        let mut seen = vec![false; n + 1];
        for &x in &window {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{window:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            window: window.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// The simple transposition `s_i` swapping `i` and `i + 1`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!("s{i} in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.window.swap(i - 1, i);
        Ok(p)
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_l}`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        let mut p = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::InvalidPermutation(format!("s{i} in S_{n}")));
            }
            p.window.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn longest(n: usize) -> Self {
        Permutation {
            window: (1..=n as u8).rev().collect(),
        }
    }

    /// The cycle `C = (2, 3, ..., n, 1)` in one-line notation.
    pub fn cycle(n: usize) -> Self {
        Permutation {
            window: (0..n as u8).map(|i| (i + 1) % n as u8 + 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> Vec<usize> {
        self.window.iter().map(|&x| x as usize).collect()
    }

    /// `w(i)` for `1 <= i <= n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            window: other.window.iter().map(|&x| self.window[x as usize - 1]).collect(),
        })
    }

    /// Composition for callers that already know the ranks agree.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        self.compose(other).expect("rank mismatch")
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0u8; self.n()];
        for (i, &x) in self.window.iter().enumerate() {
            window[x as usize - 1] = i as u8 + 1;
        }
        Permutation { window }
    }

    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `w s_i`, i.e. swap the entries in positions `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.window.swap(i - 1, i);
        p
    }

    /// `s_i w`, i.e. swap the values `i` and `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        for x in p.window.iter_mut() {
            if *x as usize == i {
                *x += 1;
            } else if *x as usize == i + 1 {
                *x -= 1;
            }
        }
        p
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.window[i - 1] > self.window[i]
    }

    /// `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.window[i - 1] > inv.window[i]
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.n()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// Bruhat order via the rank-matrix criterion.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let n = self.n();
        if self.length() > other.length() {
            return false;
        }
        let mut cu = vec![0usize; n + 2];
        let mut cw = vec![0usize; n + 2];
        for i in 0..n {
            for j in 1..=self.window[i] as usize {
                cu[j] += 1;
            }
            for j in 1..=other.window[i] as usize {
                cw[j] += 1;
            }
            if (1..=n).any(|j| cu[j] > cw[j]) {
                return false;
            }
        }
        true
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count())
            .collect()
    }

    /// The permutation of rank `n` with the given code, if the code fits.
    pub fn from_code(code: &[usize], n: usize) -> Result<Permutation> {
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut window = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= avail.len() {
                return Err(Error::InvalidPermutation(format!("code {code:?} in S_{n}")));
            }
            window.push(avail.remove(c));
        }
        Permutation::from_window(window)
    }

    /// Embed into `S_m` for `m >= n` by fixing `n+1..m`.
    pub fn extend(&self, m: usize) -> Permutation {
        let mut window = self.window.clone();
        window.extend(self.n() as u8 + 1..=m as u8);
        Permutation { window }
    }

    /// Drop trailing fixed points beyond `n`, keeping at least rank 1.
    pub fn trimmed(&self) -> Permutation {
        let mut window = self.window.clone();
        while window.len() > 1 && *window.last().unwrap() as usize == window.len() {
            window.pop();
        }
        Permutation { window }
    }

    /// Restriction to `S_m`, if `self` fixes every point above `m`.
    pub fn restrict(&self, m: usize) -> Option<Permutation> {
        if m > self.n() {
            return Some(self.extend(m));
        }
        if (m + 1..=self.n()).all(|i| self.apply(i) == i) {
            Some(Permutation {
                window: self.window[..m].to_vec(),
            })
        } else {
            None
        }
    }

    /// Every permutation of rank `n` in lexicographic window order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                window: cur.iter().map(|&x| x as u8).collect(),
            });
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Parse a window (`3124` or `3,1,2,4`), a word (`s1*s2*s1`) or `id`.
    /// Words and `id` need the rank.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Permutation> {
        let t = text.trim();
        if t == "id" || t == "e" {
            let n = n.ok_or_else(|| Error::Parse("rank needed for `id`".into()))?;
            return Ok(Permutation::identity(n));
        }
        if t.starts_with('s') {
            let n = n.ok_or_else(|| Error::Parse(format!("rank needed for word `{t}`")))?;
            let word = t
                .split('*')
                .map(|part| {
                    part.trim()
                        .strip_prefix('s')
                        .and_then(|d| d.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad letter `{part}` in `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Permutation::from_word(&word, n);
        }
        let t = t.trim_start_matches('[').trim_end_matches(']');
        let window: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{x}`: {e}"))))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("`{t}`"))))
                .collect::<Result<_>>()?
        };
        let p = Permutation::from_window(window)?;
        if let Some(n) = n {
            if p.n() != n {
                return Err(Error::RankMismatch(p.n(), n));
            }
        }
        Ok(p)
    }

    /// Reduced word rendered as `s1*s2*s1`, or `id`.
    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            "id".into()
        } else {
            word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("*")
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in &self.window {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A weakly decreasing sequence of nonnegative integers with a fixed number of parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn zero(m: usize) -> Self {
        Partition(vec![0; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Componentwise containment `self ⊆ other`.
    pub fn leq(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.len() == m
            && self.0.windows(2).all(|p| p[0] >= p[1])
            && self.0.first().is_none_or(|&x| x <= n - m)
    }

    /// Complement in the `m x (n - m)` box.
    pub fn complement(&self, n: usize) -> Partition {
        let m = self.len();
        Partition(self.0.iter().rev().map(|&x| n - m - x).collect())
    }

    /// All partitions in the `m x (n - m)` box, in lexicographic order.
    pub fn all_in_box(m: usize, n: usize) -> Vec<Partition> {
        fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if cur.len() == m {
                out.push(Partition(cur.clone()));
                return;
            }
            for x in 0..=max {
                cur.push(x);
                rec(m, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, n - m, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{x}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(s.to_string()));
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cuts `0 < n_1 < ... < n_k < n` of a partial flag variety.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParabolicShape {
    cuts: Vec<usize>,
    n: usize,
}

impl ParabolicShape {
    pub fn new(cuts: Vec<usize>, n: usize) -> Result<Self> {
        if cuts.is_empty() || !(2..=64).contains(&n) {
            return Err(Error::InvalidShape(format!("{cuts:?};{n}")));
        }
        if cuts[0] == 0 || *cuts.last().unwrap() >= n || cuts.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidShape(format!("{cuts:?};{n}")));
        }
        Ok(ParabolicShape { cuts, n })
    }

    pub fn grassmannian(m: usize, n: usize) -> Result<Self> {
        Self::new(vec![m], n)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new((1..n).collect(), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n_1 .. n_k`.
    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn k(&self) -> usize {
        self.cuts.len()
    }

    /// `n_l` for `0 <= l <= k + 1`.
    pub fn cut(&self, l: usize) -> usize {
        match l {
            0 => 0,
            l if l <= self.k() => self.cuts[l - 1],
            _ => self.n,
        }
    }

    /// Block `l` (1-based) containing column/index `j`.
    pub fn block_of(&self, j: usize) -> usize {
        self.cuts.iter().take_while(|&&c| c < j).count() + 1
    }

    pub fn is_grassmannian(&self) -> Option<usize> {
        (self.k() == 1).then(|| self.cuts[0])
    }

    pub fn is_complete(&self) -> bool {
        self.k() == self.n - 1
    }

    /// `w ∈ W^P`: increasing on every block.
    pub fn contains_min_rep(&self, w: &Permutation) -> bool {
        w.n() == self.n
            && (1..self.n).all(|i| self.cuts.contains(&i) || w.apply(i) < w.apply(i + 1))
    }

    /// Sort the window of `w` within each block.
    pub fn min_coset_rep(&self, w: &Permutation) -> Permutation {
        let mut window = w.window();
        for l in 1..=self.k() + 1 {
            window[self.cut(l - 1)..self.cut(l)].sort_unstable();
        }
        Permutation::from_window(window).expect("sorting keeps a permutation")
    }

    /// All of `W^P` sorted by length, then window.
    pub fn min_reps(&self) -> Vec<Permutation> {
        let mut reps: Vec<Permutation> =
            Permutation::all(self.n).into_iter().filter(|w| self.contains_min_rep(w)).collect();
        reps.sort_by_key(|w| (w.length(), w.clone()));
        reps
    }

    /// Parse `n1,...,nk,n`.
    pub fn parse(text: &str) -> Result<Self> {
        let nums = text
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{x}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let Some((&n, cuts)) = nums.split_last() else {
            return Err(Error::InvalidShape(text.into()));
        };
        Self::new(cuts.to_vec(), n)
    }
}

impl fmt::Display for ParabolicShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cuts.iter().map(|c| c.to_string()).collect();
        write!(f, "{},{}", parts.join(","), self.n)
    }
}

impl fmt::Debug for ParabolicShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cuts.iter().map(|c| c.to_string()).collect();
        write!(f, "Λ({};{})", parts.join(","), self.n)
    }
}

impl FromStr for ParabolicShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// The Grassmannian permutation `w_μ ∈ W^P` of a partition in the `m x (n-m)` box.
pub fn grassmannian_perm(mu: &Partition, m: usize, n: usize) -> Result<Permutation> {
    if m == 0 || m >= n || !mu.fits(m, n) {
        return Err(Error::InvalidPartition(format!("{mu} in Gr({m},{n})")));
    }
    let mut window: Vec<usize> = (1..=m).map(|j| mu.0[m - j] + j).collect();
    let rest: Vec<usize> = (1..=n).filter(|x| !window.contains(x)).collect();
    window.extend(rest);
    Permutation::from_window(window)
}

/// Partition `(w(m) - m, ..., w(1) - 1)` of a Grassmannian permutation.
pub fn partition_of_perm(w: &Permutation, m: usize) -> Result<Partition> {
    let shape = ParabolicShape::grassmannian(m, w.n())?;
    if !shape.contains_min_rep(w) {
        return Err(Error::NotMinimal {
            perm: w.to_string(),
            shape: shape.to_string(),
        });
    }
    Ok(Partition((1..=m).rev().map(|j| w.apply(j) - j).collect()))
}

/// Factorization `u = u_1 ... u_m` with pairwise commuting, disjointly supported factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarFactorization {
    pub factors: Vec<Permutation>,
    pub supports: Vec<Vec<usize>>,
}

impl StarFactorization {
    pub fn level(&self) -> usize {
        self.factors.len()
    }
}

/// Split `u` along the connected components of its support on the Dynkin line.
pub fn star_factorize(u: &Permutation) -> Result<StarFactorization> {
    if u.is_identity() {
        return Err(Error::Precondition("star factorization of the identity".into()));
    }
    let word = u.reduced_word();
    let mut support: Vec<usize> = word.clone();
    support.sort_unstable();
    support.dedup();
    let mut components: Vec<Vec<usize>> = Vec::new();
    for s in support {
        match components.last_mut() {
            Some(c) if *c.last().unwrap() + 1 == s => c.push(s),
            _ => components.push(vec![s]),
        }
    }
    let factors = components
        .iter()
        .map(|c| {
            let sub: Vec<usize> = word.iter().copied().filter(|i| c.contains(i)).collect();
            Permutation::from_word(&sub, u.n()).expect("letters in range")
        })
        .collect();
    Ok(StarFactorization {
        factors,
        supports: components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, None).unwrap()
    }

    fn word(w: &[usize], n: usize) -> Permutation {
        Permutation::from_word(w, n).unwrap()
    }

    /// All reduced words by exhaustive search.
    fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..w.n() {
            if w.has_right_descent(i) {
                for mut r in reduced_words(&w.mul_simple_right(i)) {
                    r.push(i);
                    out.push(r);
                }
            }
        }
        out
    }

    fn subword_leq(u: &Permutation, w: &Permutation) -> bool {
        let rw = reduced_words(w).remove(0);
        let l = rw.len();
        (0u32..1 << l).any(|mask| {
            let sub: Vec<usize> = (0..l).filter(|b| mask >> b & 1 == 1).map(|b| rw[b]).collect();
            sub.len() == u.length() && word(&sub, u.n()) == *u
        })
    }

    #[test]
    fn compose_examples() {
        let n = 3;
        let s1 = Permutation::simple(1, n).unwrap();
        let s2 = Permutation::simple(2, n).unwrap();
        assert!(s1.compose(&s1).unwrap().is_identity());
        assert_eq!(s1.compose(&s2).unwrap().window(), vec![2, 3, 1]);
        let w0 = Permutation::longest(4);
        assert!(w0.compose(&w0).unwrap().is_identity());
        assert!(s1.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest(4).length(), 6);
        let w = p("312");
        let brute = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|&(i, j)| i < j && w.window()[i] > w.window()[j])
            .count();
        assert_eq!(w.length(), brute);
        assert_eq!(w.length(), 2);
    }

    #[test]
    fn bruhat_matches_subwords_up_to_four() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            for u in &all {
                for w in &all {
                    assert_eq!(u.bruhat_leq(w), subword_leq(u, w), "{u:?} {w:?}");
                }
            }
        }
        assert!(!Permutation::simple(1, 3).unwrap().bruhat_leq(&Permutation::simple(2, 3).unwrap()));
        assert!(word(&[1, 2], 3).bruhat_leq(&word(&[1, 2, 1], 3)));
    }

    #[test]
    fn longest_and_conjugation() {
        assert_eq!(Permutation::longest(2).window(), vec![2, 1]);
        let n = 6;
        let w0 = Permutation::longest(n);
        for i in 1..n {
            let si = Permutation::simple(i, n).unwrap();
            assert_eq!(w0.mul(&si).mul(&w0), Permutation::simple(n - i, n).unwrap());
        }
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(p("213").reduced_word(), vec![1]);
        assert_eq!(Permutation::longest(3).reduced_word(), vec![1, 2, 1]);
        for n in 1..=4 {
            for w in Permutation::all(n) {
                let mut words = reduced_words(&w);
                words.sort();
                assert_eq!(w.reduced_word(), words[0]);
                assert_eq!(word(&w.reduced_word(), n), w);
            }
        }
    }

    #[test]
    fn coset_representatives() {
        let shape = ParabolicShape::grassmannian(2, 4).unwrap();
        assert_eq!(shape.min_coset_rep(&p("3142")).window(), vec![1, 3, 2, 4]);
        let complete = ParabolicShape::complete(4).unwrap();
        for w in Permutation::all(4) {
            assert_eq!(complete.min_coset_rep(&w), w);
        }
    }

    #[test]
    fn grassmannian_perm_examples() {
        assert!(grassmannian_perm(&Partition::zero(3), 3, 6).unwrap().is_identity());
        let w = grassmannian_perm(&Partition(vec![1, 0]), 2, 4).unwrap();
        assert_eq!(w.window(), vec![1, 3, 2, 4]);
        let w = grassmannian_perm(&Partition(vec![2, 1, 0]), 3, 6).unwrap();
        assert_eq!(w, word(&[2, 4, 3], 6));
        assert!(grassmannian_perm(&Partition(vec![3, 0]), 2, 4).is_err());
    }

    #[test]
    fn grassmannian_round_trip_and_monotone() {
        for (m, n) in [(2, 4), (2, 5), (3, 6)] {
            let parts = Partition::all_in_box(m, n);
            for mu in &parts {
                let w = grassmannian_perm(mu, m, n).unwrap();
                assert_eq!(&partition_of_perm(&w, m).unwrap(), mu);
                assert_eq!(w.length(), mu.size());
                for nu in &parts {
                    let v = grassmannian_perm(nu, m, n).unwrap();
                    assert_eq!(mu.leq(nu), w.bruhat_leq(&v));
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let f = star_factorize(&word(&[1, 3], 4)).unwrap();
        assert_eq!(f.factors, vec![word(&[1], 4), word(&[3], 4)]);
        assert_eq!(star_factorize(&word(&[1, 2, 3], 4)).unwrap().level(), 1);
        let f = star_factorize(&word(&[1, 2, 4], 5)).unwrap();
        assert_eq!(f.factors, vec![word(&[1, 2], 5), word(&[4], 5)]);
        assert!(star_factorize(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("2,1,3,4"), p("2134"));
        assert_eq!(Permutation::parse("s1*s2*s1", Some(3)).unwrap(), Permutation::longest(3));
        assert!(Permutation::parse("id", Some(4)).unwrap().is_identity());
        assert!(Permutation::parse("1134", None).is_err());
        assert_eq!("(2,1,0)".parse::<Partition>().unwrap(), Partition(vec![2, 1, 0]));
        assert_eq!(ParabolicShape::parse("1,2,3,4").unwrap(), ParabolicShape::complete(4).unwrap());
        assert!(ParabolicShape::parse("3,2,4").is_err());
    }

    #[test]
    fn code_round_trip() {
        for w in Permutation::all(5) {
            assert_eq!(Permutation::from_code(&w.code(), 5).unwrap(), w);
        }
        assert_eq!(Permutation::cycle(5).window(), vec![2, 3, 4, 5, 1]);
    }
}
