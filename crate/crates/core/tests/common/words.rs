//! Naive model of `U(n)`: words rewritten by adjacent swaps.

use std::collections::HashMap;

use ado_core::envelope::{monomials_up_to, Element};
use ado_core::{LieAlgebra, PbwMonomial, Rational, Subspace};
use num_traits::{One, Zero};

pub type Words = HashMap<Vec<usize>, Rational>;

#[derive(Clone, Copy)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Rewrites adjacent descents `.. a b ..` (a > b) as `.. b a .. + .. [a,b] ..`
/// until every word is non-decreasing.
pub fn rewrite(n: &LieAlgebra, start: Words, strategy: Strategy) -> Words {
    let mut done = Words::new();
    let mut todo: Vec<(Vec<usize>, Rational)> = start.into_iter().collect();
    while let Some((w, c)) = todo.pop() {
        if c.is_zero() {
            continue;
        }
        let descents = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]);
        let pos = match strategy {
            Strategy::Leftmost => descents.min(),
            Strategy::Rightmost => descents.max(),
        };
        let Some(p) = pos else {
            let e = done.entry(w).or_insert_with(Rational::zero);
            *e += c;
            continue;
        };
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        todo.push((swapped, c.clone()));
        for (k, x) in n.structure(w[p], w[p + 1]).iter().enumerate() {
            if !x.is_zero() {
                let mut shorter = w[..p].to_vec();
                shorter.push(k);
                shorter.extend_from_slice(&w[p + 2..]);
                todo.push((shorter, &c * x));
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

pub fn word_to_monomial(dim: usize, w: &[usize]) -> PbwMonomial {
    let mut e = vec![0u32; dim];
    for &i in w {
        e[i] += 1;
    }
    PbwMonomial::new(e)
}

pub fn as_element(dim: usize, words: &Words) -> Element {
    let mut out = Element::new();
    for (w, c) in words {
        let e = out.entry(word_to_monomial(dim, w)).or_insert_with(Rational::zero);
        *e += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn all_words(letters: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (0..letters).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out
}

/// `I ∩ L`: the span of the degree-`≤ M` parts of all words of length
/// `M+1 ..= bound`, over the monomials of degree `≤ M` in their own order.
pub fn oracle_low_ideal(n: &LieAlgebra, m: usize, bound: usize) -> (Vec<PbwMonomial>, Subspace) {
    let dim = n.dim();
    let monos = monomials_up_to(dim, m);
    let pos: HashMap<&PbwMonomial, usize> = monos.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut vecs = Vec::new();
    for len in m + 1..=bound {
        for w in all_words(dim, len) {
            let nf = rewrite(n, Words::from([(w, Rational::one())]), Strategy::Leftmost);
            let mut v = vec![Rational::zero(); monos.len()];
            for (word, c) in nf {
                if word.len() <= m {
                    v[pos[&word_to_monomial(dim, &word)]] += c;
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                vecs.push(v);
            }
        }
    }
    let ideal = Subspace::from_vectors(monos.len(), &vecs);
    (monos, ideal)
}

/// `(span{1, x} ∩ I = 0, A ∩ I = 0)` for `A = span{1, x, x_1 x_2}`, with
/// `ideal` given over `monos`.
pub fn a_intersection_oracle(n: &LieAlgebra, monos: &[PbwMonomial], ideal: &Subspace) -> (bool, bool) {
    let dim = n.dim();
    let pos: HashMap<&PbwMonomial, usize> = monos.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let vec_of = |words: &Words| {
        let mut v = vec![Rational::zero(); monos.len()];
        for (mono, c) in as_element(dim, words) {
            v[pos[&mono]] += c;
        }
        v
    };
    let mut deg1 = vec![vec_of(&Words::from([(vec![], Rational::one())]))];
    deg1.extend((0..dim).map(|i| vec_of(&Words::from([(vec![i], Rational::one())]))));
    let mut a = deg1.clone();
    for i in 0..dim {
        for j in 0..dim {
            a.push(vec_of(&rewrite(n, Words::from([(vec![i, j], Rational::one())]), Strategy::Rightmost)));
        }
    }
    let misses = |vs: &[Vec<Rational>]| Subspace::from_vectors(monos.len(), vs).intersect(ideal).unwrap().is_zero();
    (misses(&deg1), misses(&a))
}
