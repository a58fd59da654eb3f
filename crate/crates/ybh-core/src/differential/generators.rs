//! Generator maps for the skein decomposition of the differential.
//!
//! A left generator g_k: V^(x)k -> V^(x)k pulls the last two tensor
//! factors through a cup and re-emits a cap in front, scaling the passed
//! factors by xi; its primed variant g'_k: V^(x)k -> V^(x)(k-1) ends the
//! cap on the wall through lambda instead. Right generators h_l, h'_l
//! mirror this with zeta and the right wall. The scalar bookkeeping is
//! carried by theta (left) and tau (right):
//!
//!   theta(i_1..i_k) = (-1)^(i_{k-1}) (1 - delta_{i_{k-1} i_k})
//!                       y^(i_k - i_{k-1}) y^(4(k-2) - 2 sum_{j<=k-2} i_j) y
//!   tau(i_1..i_l)   = (-1)^(i_1) (1 - delta_{i_1 i_2})
//!                       y^(i_2 - i_1) y^(2 sum_{t>=3} i_t - 2(l-2)) y
//!
//! Both are y times a cup evaluation times zig-zag scalars: theta collects
//! xi(e_i) = y^(4-2i) over the leading factors, tau collects
//! zeta(e_i) = y^(2i-2) over the trailing ones, which fixes the sign of
//! the exponent -2(l-2) in tau.

use crate::laurent::{LaurentPoly, Rational};
use crate::linalg::{RingMatrix, TensorIndex};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    G,
    GPrime,
    H,
    HPrime,
}

fn digit_check(indices: &[u8]) {
    assert!(indices.len() >= 2, "need at least two tensor indices");
    assert!(indices.iter().all(|&d| d == 1 || d == 2), "digits must be 1 or 2");
}

pub fn theta(indices: &[u8]) -> LaurentPoly {
    digit_check(indices);
    let k = indices.len();
    let (a, b) = (indices[k - 2], indices[k - 1]);
    if a == b {
        return LaurentPoly::zero();
    }
    let sign: i64 = if a == 1 { -1 } else { 1 };
    let head_sum: i64 = indices[..k - 2].iter().map(|&d| d as i64).sum();
    let exp = (b as i64 - a as i64) + 4 * (k as i64 - 2) - 2 * head_sum + 1;
    LaurentPoly::monomial(exp, Rational::from_integer(sign.into()))
}

pub fn tau(indices: &[u8]) -> LaurentPoly {
    digit_check(indices);
    let l = indices.len();
    let (a, b) = (indices[0], indices[1]);
    if a == b {
        return LaurentPoly::zero();
    }
    let sign: i64 = if a == 1 { -1 } else { 1 };
    let tail_sum: i64 = indices[2..].iter().map(|&d| d as i64).sum();
    let exp = (b as i64 - a as i64) + 2 * tail_sum - 2 * (l as i64 - 2) + 1;
    LaurentPoly::monomial(exp, Rational::from_integer(sign.into()))
}

fn build(kind: GeneratorKind, arity: usize) -> RingMatrix {
    assert!(arity >= 1);
    if arity == 1 {
        return match kind {
            GeneratorKind::G | GeneratorKind::H => RingMatrix::identity(2),
            GeneratorKind::GPrime | GeneratorKind::HPrime => crate::skein::maps().mu.clone(),
        };
    }
    let k = arity;
    let out_n = match kind {
        GeneratorKind::G | GeneratorKind::H => k,
        GeneratorKind::GPrime | GeneratorKind::HPrime => k - 1,
    };
    let mut m = RingMatrix::zeros(1 << out_n, 1 << k);
    for input in TensorIndex::all(k) {
        let digits = input.digits();
        let coeff = match kind {
            GeneratorKind::G | GeneratorKind::GPrime => theta(digits),
            GeneratorKind::H | GeneratorKind::HPrime => tau(digits),
        };
        if coeff.is_zero() {
            continue;
        }
        let col = input.flat();
        // (plus-output, minus-output) digit words
        let (pos, neg): (Vec<u8>, Vec<u8>) = match kind {
            GeneratorKind::G => {
                let tail = &digits[..k - 2];
                (
                    [&[1, 2][..], tail].concat(),
                    [&[2, 1][..], tail].concat(),
                )
            }
            GeneratorKind::GPrime => {
                let tail = &digits[..k - 2];
                ([&[2][..], tail].concat(), [&[1][..], tail].concat())
            }
            GeneratorKind::H => {
                let head = &digits[2..];
                (
                    [head, &[1, 2][..]].concat(),
                    [head, &[2, 1][..]].concat(),
                )
            }
            GeneratorKind::HPrime => {
                let head = &digits[2..];
                ([head, &[1][..]].concat(), [head, &[2][..]].concat())
            }
        };
        m.add_to(TensorIndex::new(pos).flat(), col, &coeff);
        m.add_to(TensorIndex::new(neg).flat(), col, &(-&coeff));
    }
    m
}

/// The matrix of g/g'/h/h' at the given arity, cached.
pub fn generator(kind: GeneratorKind, arity: usize) -> Arc<RingMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<(GeneratorKind, usize), Arc<RingMatrix>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(kind, arity)) {
        return Arc::clone(m);
    }
    let m = Arc::new(build(kind, arity));
    Arc::clone(cache.lock().unwrap().entry((kind, arity)).or_insert(m))
}
