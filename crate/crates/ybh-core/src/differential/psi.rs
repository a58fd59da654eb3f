//! The psi recursion: closed-form families that assemble the alternating
//! curtain sums without cancellation.
//!
//! psi_n: V^(x)n -> V^(x)(n+1) appends a cap on the right and drags its
//! left leg across all n strands into the left wall; psi'_n mirrors this.
//! Each expands over the skein relation R = 1 + beta.alpha into a sum of
//! cup/cap words indexed by the sets Gamma (wall terms) and Lambda
//! (through-strand terms), built by the recursions
//!
//!   Gamma(n) = Gamma(n-1).xi  u  Gamma(n-m).(alpha 1^(m-2) beta)  u  {1^n beta}
//!   Lambda(n) = Lambda(n-1).xi u  Lambda(n-m).(alpha 1^(m-2) beta) u  {alpha 1^(n-2) beta}
//!
//! with juxtaposition meaning Kronecker concatenation and m ranging as
//! far as the recursed set is defined (m <= n for Gamma, whose base case
//! sits at level 0; m <= n-1 for Lambda, whose base sits at level 1).
//! That gives |Gamma(n)| = 2^n and |Lambda(n)| = 2^(n-1), matching the
//! 2^n terms of the full skein expansion of psi_n: appending
//! alpha 1^(m-2) beta fuses the previous word's trailing cap into an
//! interior cup/cap block, so every expansion term arises exactly once.
//! The alternating column sums telescope to
//!
//!   sum_i (-1)^i d^l_{i,n} =  sum_i psi_{2(i-1)} alpha 1^(n-2i)            (n even)
//!   sum_i (-1)^i d^l_{i,n} = -mu 1^(n-1) - sum_j psi_{2j-1} alpha 1^(n-2j-1)  (n odd)
//!
//! and d_psi adds the mirrored right-wall families with the same parity
//! rule as the curtain sum.

use super::Side;
use crate::linalg::RingMatrix;
use crate::skein::{identity_pow, maps};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn build_psi(n: usize, side: Side) -> RingMatrix {
    let sk = maps();
    match side {
        Side::Left => {
            if n == 0 {
                return sk.lambda_l.clone();
            }
            let mut acc = sk.mu.kron(&identity_pow(n + 1));
            for s in 1..=n {
                let f = identity_pow(s - 1).kron(&sk.r).kron(&identity_pow(n + 1 - s));
                acc = acc.compose(&f);
            }
            acc.compose(&identity_pow(n).kron(&sk.beta))
        }
        Side::Right => {
            if n == 0 {
                return sk.lambda_r.clone();
            }
            let mut acc = identity_pow(n + 1).kron(&sk.mu);
            for s in (2..=n + 1).rev() {
                let f = identity_pow(s - 1).kron(&sk.r).kron(&identity_pow(n + 1 - s));
                acc = acc.compose(&f);
            }
            acc.compose(&sk.beta.kron(&identity_pow(n)))
        }
    }
}

/// psi_n (left) or psi'_n (right): V^(x)n -> V^(x)(n+1), cached.
pub fn psi(n: usize, side: Side) -> Arc<RingMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Side), Arc<RingMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(n, side)) {
        return Arc::clone(m);
    }
    let m = Arc::new(build_psi(n, side));
    Arc::clone(cache.lock().unwrap().entry((n, side)).or_insert(m))
}

fn gamma_set_arc(n: usize) -> Arc<Vec<RingMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<RingMatrix>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return Arc::clone(v);
    }
    let sk = maps();
    let mut out = Vec::new();
    if n == 0 {
        out.push(sk.beta.clone());
    } else {
        for g in gamma_set_arc(n - 1).iter() {
            out.push(g.kron(&sk.xi));
        }
        for m in 2..=n {
            let mid = sk.alpha.kron(&identity_pow(m - 2)).kron(&sk.beta);
            for g in gamma_set_arc(n - m).iter() {
                out.push(g.kron(&mid));
            }
        }
        out.push(identity_pow(n).kron(&sk.beta));
    }
    let v = Arc::new(out);
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(v))
}

fn lambda_set_arc(n: usize) -> Arc<Vec<RingMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<RingMatrix>>>>> = OnceLock::new();
    assert!(n >= 1, "Lambda starts at n = 1");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return Arc::clone(v);
    }
    let sk = maps();
    let mut out = Vec::new();
    if n == 1 {
        out.push(sk.xi.clone());
    } else {
        for f in lambda_set_arc(n - 1).iter() {
            out.push(f.kron(&sk.xi));
        }
        for m in 2..n {
            let mid = sk.alpha.kron(&identity_pow(m - 2)).kron(&sk.beta);
            for f in lambda_set_arc(n - m).iter() {
                out.push(f.kron(&mid));
            }
        }
        out.push(sk.alpha.kron(&identity_pow(n - 2)).kron(&sk.beta));
    }
    let v = Arc::new(out);
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(v))
}

/// The expansion sets (Gamma^(n,n+2), Lambda^(n,n)), n >= 1. Checks the
/// expansion identity psi_n = sum mu.Gamma^(n-1,n+1) + sum lambda.Lambda^(n,n)
/// before returning.
pub fn gamma_lambda_sets(n: usize) -> (Vec<RingMatrix>, Vec<RingMatrix>) {
    assert!(n >= 1);
    let gamma = gamma_set_arc(n);
    let lambda = lambda_set_arc(n);
    let sk = maps();
    let mut sum = RingMatrix::zeros(1 << (n + 1), 1 << n);
    for g in gamma_set_arc(n - 1).iter() {
        sum = &sum + &sk.mu.kron(g);
    }
    for f in lambda.iter() {
        sum = &sum + &sk.lambda_l.kron(f);
    }
    assert_eq!(
        sum,
        *psi(n, Side::Left),
        "psi expansion identity failed at n = {n}"
    );
    (gamma.to_vec(), lambda.to_vec())
}

/// sum_{m=2..=n} psi_{n-m} . alpha . 1^(m-2), plus the bare absorption
/// term: the closed form of d^l_{n,n} (and mirrored, of d^r_{n,n}).
pub fn full_drag_closed_form(n: usize, side: Side) -> RingMatrix {
    assert!(n >= 2);
    let sk = maps();
    let mut sum = match side {
        Side::Left => sk.mu.kron(&identity_pow(n - 1)),
        Side::Right => identity_pow(n - 1).kron(&sk.mu),
    };
    for m in 2..=n {
        let term = match side {
            Side::Left => psi(n - m, side).kron(&sk.alpha).kron(&identity_pow(m - 2)),
            Side::Right => identity_pow(m - 2).kron(&sk.alpha).kron(&psi(n - m, side)),
        };
        sum = &sum + &term;
    }
    sum
}

pub fn d_psi(n: usize) -> RingMatrix {
    assert!(n >= 1);
    let sk = maps();
    let mut d = RingMatrix::zeros(1 << (n - 1), 1 << n);
    if n % 2 == 0 {
        for i in 1..=n / 2 {
            let left = psi(2 * (i - 1), Side::Left)
                .kron(&sk.alpha)
                .kron(&identity_pow(n - 2 * i));
            let right = identity_pow(n - 2 * i)
                .kron(&sk.alpha)
                .kron(&psi(2 * (i - 1), Side::Right));
            d = &(&d + &left) + &right;
        }
    } else {
        d = &d - &sk.mu.kron(&identity_pow(n - 1));
        d = &d + &identity_pow(n - 1).kron(&sk.mu);
        for j in 1..=(n - 1) / 2 {
            let left = psi(2 * j - 1, Side::Left)
                .kron(&sk.alpha)
                .kron(&identity_pow(n - 2 * j - 1));
            let right = identity_pow(n - 2 * j - 1)
                .kron(&sk.alpha)
                .kron(&psi(2 * j - 1, Side::Right));
            d = &(&d - &left) + &right;
        }
    }
    d
}
