//! Schubert polynomials and expansion of products in the Schubert basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::weyl::Permutation;

type Exponent = Vec<u8>;

/// A polynomial in `x_1, x_2, ...` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SchubertPolynomial {
    terms: BTreeMap<Exponent, i64>,
}

fn trim(mut e: Exponent) -> Exponent {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl SchubertPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), 1)
    }

    pub fn monomial(exponent: Vec<u8>, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(trim(exponent), coeff);
        p
    }

    /// The variable `x_i`.
    pub fn x(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self::monomial(e, 1)
    }

    fn add_term(&mut self, e: Exponent, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[u8]) -> i64 {
        self.terms.get(&trim(exponent.to_vec())).copied().unwrap_or(0)
    }

    /// Lexicographically smallest monomial.
    pub fn lowest_term(&self) -> Option<(&[u8], i64)> {
        self.terms.iter().next().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn add_scaled(&mut self, other: &SchubertPolynomial, c: i64) {
        for (e, x) in &other.terms {
            self.add_term(e.clone(), c * x);
        }
    }

    pub fn mul(&self, other: &SchubertPolynomial) -> SchubertPolynomial {
        let mut acc: BTreeMap<Exponent, i64> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let len = a.len().max(b.len());
                let e: Exponent = (0..len)
                    .map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0))
                    .collect();
                *acc.entry(e).or_insert(0) += x * y;
            }
        }
        acc.retain(|_, c| *c != 0);
        SchubertPolynomial { terms: acc }
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> SchubertPolynomial {
        let mut acc: BTreeMap<Exponent, i64> = BTreeMap::new();
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            let (p, q) = (e[i - 1], e[i]);
            let mut push = |a: u8, b: u8, c: i64| {
                let mut f = e.clone();
                f[i - 1] = a;
                f[i] = b;
                *acc.entry(trim(f)).or_insert(0) += c;
            };
            if p > q {
                for k in 0..p - q {
                    push(p - 1 - k, q + k, c);
                }
            } else if p < q {
                for k in 0..q - p {
                    push(p + k, q - 1 - k, -c);
                }
            }
        }
        acc.retain(|_, c| *c != 0);
        SchubertPolynomial { terms: acc }
    }
}

fn key(w: &Permutation) -> Vec<u8> {
    w.trimmed().window().into_iter().map(|x| x as u8).collect()
}

type Cache = RwLock<HashMap<Vec<u8>, Arc<SchubertPolynomial>>>;

fn dd_cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn transition_cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn cached(cache: &Cache, k: &[u8], make: impl FnOnce() -> SchubertPolynomial) -> Arc<SchubertPolynomial> {
    if let Some(p) = cache.read().expect("cache lock").get(k) {
        return p.clone();
    }
    let p = Arc::new(make());
    cache.write().expect("cache lock").insert(k.to_vec(), p.clone());
    p
}

/// `𝔖_w` by divided differences from the staircase monomial `𝔖_{w_0}`.
pub fn schubert_poly(w: &Permutation) -> Arc<SchubertPolynomial> {
    let t = w.trimmed();
    cached(dd_cache(), &key(&t), || {
        let n = t.n();
        if t == Permutation::longest(n) {
            return SchubertPolynomial::monomial((1..n).rev().map(|x| x as u8).collect(), 1);
        }
        let i = (1..n).find(|&i| !t.has_right_descent(i)).expect("not the longest element");
        schubert_poly(&t.mul_simple_right(i)).divided_difference(i)
    })
}

/// `𝔖_w` by the Lascoux-Schützenberger transition recursion.
pub fn schubert_poly_transition(w: &Permutation) -> Arc<SchubertPolynomial> {
    let t = w.trimmed();
    cached(transition_cache(), &key(&t), || {
        if t.is_identity() {
            return SchubertPolynomial::one();
        }
        let n = t.n();
        let win = t.window();
        let r = (1..n).rev().find(|&r| win[r - 1] > win[r]).expect("nonidentity has a descent");
        let s = (r + 1..=n).rev().find(|&j| win[j - 1] < win[r - 1]).expect("descent gives a smaller later value");
        let mut vw = win.clone();
        vw.swap(r - 1, s - 1);
        let v = Permutation::from_window(vw.clone()).expect("transposition of a permutation");
        let target = v.length() + 1;
        let mut out = SchubertPolynomial::x(r).mul(&schubert_poly_transition(&v));
        for q in 1..r {
            let mut uw = vw.clone();
            uw.swap(q - 1, r - 1);
            let u = Permutation::from_window(uw).expect("transposition of a permutation");
            if u.length() == target {
                out.add_scaled(&schubert_poly_transition(&u), 1);
            }
        }
        out
    })
}

/// Coefficients of a polynomial in the Schubert basis, keyed by trimmed permutations.
/// The lowest monomial of `𝔖_w` in lexicographic order is `x^{code(w)}`, so
/// peeling lowest monomials off recovers the expansion.
pub fn expand(p: &SchubertPolynomial) -> BTreeMap<Permutation, i64> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rest.lowest_term() {
        let code: Vec<usize> = e.iter().map(|&x| x as usize).collect();
        let rank = code.iter().enumerate().map(|(i, &c)| i + 1 + c).max().unwrap_or(1).max(code.len() + 1);
        let w = Permutation::from_code(&code, rank).expect("code fits its rank").trimmed();
        let s = schubert_poly_transition(&w);
        rest.add_scaled(&s, -c);
        *out.entry(w).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

type ProductCache = RwLock<HashMap<Vec<Vec<u8>>, Arc<BTreeMap<Permutation, i64>>>>;

fn product_cache() -> &'static ProductCache {
    static C: OnceLock<ProductCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Expansion of `𝔖_{u_1} ... 𝔖_{u_m}` in the Schubert basis.
pub fn expand_product(us: &[Permutation]) -> Arc<BTreeMap<Permutation, i64>> {
    let mut keys: Vec<Vec<u8>> = us.iter().map(key).filter(|k| k.len() > 1).collect();
    keys.sort();
    if let Some(e) = product_cache().read().expect("cache lock").get(&keys) {
        return e.clone();
    }
    let mut prod = SchubertPolynomial::one();
    for u in us {
        prod = prod.mul(&schubert_poly(u));
    }
    let e = Arc::new(expand(&prod));
    product_cache().write().expect("cache lock").insert(keys, e.clone());
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, None).unwrap()
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(*schubert_poly(&Permutation::identity(4)), SchubertPolynomial::one());
        for n in 2..=5 {
            assert_eq!(*schubert_poly(&Permutation::simple(1, n).unwrap()), SchubertPolynomial::x(1));
        }
        let mut s2 = SchubertPolynomial::x(1);
        s2.add_scaled(&SchubertPolynomial::x(2), 1);
        assert_eq!(*schubert_poly(&p("132")), s2);
        // 𝔖_{1432}
        let s = schubert_poly(&p("1432"));
        let expected = [[2, 1, 0], [2, 0, 1], [1, 2, 0], [1, 1, 1], [0, 2, 1]];
        assert_eq!(s.len(), expected.len());
        for e in expected {
            assert_eq!(s.coefficient(&e), 1);
        }
    }

    #[test]
    fn transition_matches_divided_differences() {
        for w in Permutation::all(5) {
            assert_eq!(*schubert_poly(&w), *schubert_poly_transition(&w), "{w:?}");
        }
    }

    #[test]
    fn lowest_term_is_code_monomial() {
        for w in Permutation::all(5) {
            let s = schubert_poly(&w);
            let code: Vec<u8> = w.code().into_iter().map(|c| c as u8).collect();
            let (e, c) = s.lowest_term().unwrap();
            assert_eq!((e, c), (trim(code).as_slice(), 1));
        }
    }

    #[test]
    fn expansion_recovers_single_polynomials() {
        for w in Permutation::all(4) {
            let e = expand(&schubert_poly(&w));
            assert_eq!(e.len(), 1);
            assert_eq!(e.get(&w.trimmed()), Some(&1));
        }
    }

    #[test]
    fn monk_rule() {
        // 𝔖_{s_1} 𝔖_{s_1} = 𝔖_{s_2 s_1}... in S_3: x_1^2 = 𝔖_{312}
        let e = expand_product(&[p("213"), p("213")]);
        assert_eq!(e.iter().map(|(w, c)| (w.to_string(), *c)).collect::<Vec<_>>(), vec![("312".to_string(), 1)]);
    }
}
