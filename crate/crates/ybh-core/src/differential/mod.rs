//! Three independent constructions of the differential d_n: the skein
//! decomposition into generator words, the curtain composites, and the
//! psi recursion. All three produce the same 2^(n-1) x 2^n matrix; the
//! redundancy is the point, since each construction exercises different
//! identities.
//!
//! A generator word is indexed by a composition (a_1, ..., a_r) of n:
//! the first part is the arity of the primed generator, the rest are
//! unprimed. Compositions whose unprimed tail ends in an odd run of
//! arity-1 (identity) generators cancel pairwise and are excluded, so
//! the word set S(n) keeps only even trailing identity runs.

pub mod curtain;
pub mod generators;
pub mod psi;

pub use curtain::{d_curtain, d_left, d_right};
pub use generators::{generator, tau, theta, GeneratorKind};
pub use psi::{d_psi, gamma_lambda_sets, psi};

use crate::linalg::RingMatrix;
use generators::generator as gen_matrix;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// One summand of the skein decomposition, indexed by a composition of n.
/// The body holds maximal runs of equal unprimed arities with the
/// trailing identity run split off, so the last body run never has
/// arity 1 and `trailing_identity` is always even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWord {
    pub side: Side,
    pub primed_arity: usize,
    pub body: Vec<(usize, usize)>,
    pub trailing_identity: usize,
}

impl GeneratorWord {
    pub fn total_arity(&self) -> usize {
        self.primed_arity
            + self.body.iter().map(|&(a, m)| a * m).sum::<usize>()
            + self.trailing_identity
    }

    /// The composition (a_1, ..., a_r) this word came from.
    pub fn arity_sequence(&self) -> Vec<usize> {
        let mut seq = vec![self.primed_arity];
        for &(a, m) in &self.body {
            seq.extend(std::iter::repeat(a).take(m));
        }
        seq.extend(std::iter::repeat(1).take(self.trailing_identity));
        seq
    }

    fn factors(&self) -> Vec<(GeneratorKind, usize)> {
        let seq = self.arity_sequence();
        match self.side {
            Side::Left => std::iter::once((GeneratorKind::GPrime, seq[0]))
                .chain(seq[1..].iter().map(|&a| (GeneratorKind::G, a)))
                .collect(),
            Side::Right => seq[1..]
                .iter()
                .rev()
                .map(|&a| (GeneratorKind::H, a))
                .chain(std::iter::once((GeneratorKind::HPrime, seq[0])))
                .collect(),
        }
    }

    /// Kronecker product of the word's generator matrices, in wall order:
    /// g'_{a_1} g_{a_2} ... g_{a_r} on the left, h_{a_r} ... h_{a_2} h'_{a_1}
    /// on the right.
    pub fn matrix(&self) -> RingMatrix {
        let mut fs = self.factors().into_iter();
        let (k0, a0) = fs.next().expect("words are nonempty");
        let mut acc = gen_matrix(k0, a0).as_ref().clone();
        for (k, a) in fs {
            acc = acc.kron(&gen_matrix(k, a));
        }
        acc
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (kind, a) in self.factors() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = match kind {
                GeneratorKind::G => "g",
                GeneratorKind::GPrime => "g'",
                GeneratorKind::H => "h",
                GeneratorKind::HPrime => "h'",
            };
            write!(f, "{name}_{a}")?;
        }
        Ok(())
    }
}

fn pack_word(parts: &[usize], side: Side) -> Option<GeneratorWord> {
    let body_parts = &parts[1..];
    let trailing = body_parts.iter().rev().take_while(|&&a| a == 1).count();
    if trailing % 2 != 0 {
        return None;
    }
    let mut body: Vec<(usize, usize)> = Vec::new();
    for &a in &body_parts[..body_parts.len() - trailing] {
        match body.last_mut() {
            Some((b, m)) if *b == a => *m += 1,
            _ => body.push((a, 1)),
        }
    }
    Some(GeneratorWord {
        side,
        primed_arity: parts[0],
        body,
        trailing_identity: trailing,
    })
}

/// The word set S(n) for one wall, in lexicographic composition order.
pub fn enumerate_sn(n: usize, side: Side) -> Vec<GeneratorWord> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(remaining: usize, parts: &mut Vec<usize>, side: Side, out: &mut Vec<GeneratorWord>) {
        if remaining == 0 {
            if let Some(w) = pack_word(parts, side) {
                out.push(w);
            }
            return;
        }
        for a in 1..=remaining {
            parts.push(a);
            rec(remaining - a, parts, side, out);
            parts.pop();
        }
    }
    rec(n, &mut parts, side, &mut out);
    out
}

/// The skein construction: signed sum of all generator words of both walls.
pub fn d_skein(n: usize) -> RingMatrix {
    assert!(n >= 1);
    let mut d = RingMatrix::zeros(1 << (n - 1), 1 << n);
    for w in enumerate_sn(n, Side::Left) {
        let m = w.matrix();
        d = if n % 2 == 1 { &d - &m } else { &d + &m };
    }
    for w in enumerate_sn(n, Side::Right) {
        d = &d + &w.matrix();
    }
    d
}

/// The differential d_n: V^(x)n -> V^(x)(n-1), cached. Built by the
/// curtain construction, the cheapest of the three.
pub fn differential(n: usize) -> Arc<RingMatrix> {
    assert!(n >= 1);
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<RingMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Arc::clone(m);
    }
    let m = Arc::new(curtain::d_curtain(n));
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compositions(n: usize) -> Vec<Vec<usize>> {
        enumerate_sn(n, Side::Left)
            .iter()
            .map(|w| w.arity_sequence())
            .collect()
    }

    #[test]
    fn word_sets_small_n() {
        assert_eq!(compositions(1), vec![vec![1]]);
        assert_eq!(compositions(2), vec![vec![2]]);
        let mut s3 = compositions(3);
        s3.sort();
        assert_eq!(s3, vec![vec![1, 1, 1], vec![1, 2], vec![3]]);
        let mut s4 = compositions(4);
        s4.sort();
        assert_eq!(
            s4,
            vec![
                vec![1, 1, 2],
                vec![1, 3],
                vec![2, 1, 1],
                vec![2, 2],
                vec![4]
            ]
        );
        assert_eq!(compositions(5).len(), 11);
    }

    #[test]
    fn word_invariants() {
        for n in 1..=7 {
            for w in enumerate_sn(n, Side::Right) {
                assert_eq!(w.total_arity(), n);
                assert_eq!(w.trailing_identity % 2, 0);
                if let Some(&(a, _)) = w.body.last() {
                    assert_ne!(a, 1, "body must not end in an identity run");
                }
                let m = w.matrix();
                assert_eq!((m.rows(), m.cols()), (1 << (n - 1), 1 << n));
            }
        }
    }

    #[test]
    fn word_display() {
        let w = pack_word(&[1, 2, 1, 1], Side::Left).unwrap();
        assert_eq!(w.to_string(), "g'_1 g_2 g_1 g_1");
        let w = pack_word(&[1, 2, 1, 1], Side::Right).unwrap();
        assert_eq!(w.to_string(), "h_1 h_1 h_2 h'_1");
        assert!(pack_word(&[2, 2, 1], Side::Left).is_none());
    }

    #[test]
    fn skein_low_degrees_vanish() {
        assert!(d_skein(1).is_zero());
        assert!(d_skein(2).is_zero());
    }

    #[test]
    fn skein_matches_curtain() {
        for n in 3..=6 {
            assert_eq!(d_skein(n), d_curtain(n), "constructions differ at n = {n}");
        }
    }

    #[test]
    fn memoized_differential_is_shared() {
        let a = differential(3);
        let b = differential(3);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, d_curtain(3));
    }
}
