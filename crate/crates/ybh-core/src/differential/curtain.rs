//! The curtain construction of the differential.
//!
//! d^l_{i,n} drags the i-th strand to the left wall: R acts first at
//! positions (i-1, i), then (i-2, i-1), and so on down to (1, 2), after
//! which mu absorbs the first strand. d^r_{i,n} is the mirror image
//! through the right wall. The differential alternates signs over i and
//! flips the orientation of the right family with the parity of n:
//!
//!   d_n = sum_i (-1)^i d^l_{i,n} + (-1)^n sum_i (-1)^i d^r_{i,n}

use crate::linalg::RingMatrix;
use crate::skein::{identity_pow, maps};

/// d^l_{i,n}: V^(x)n -> V^(x)(n-1), 1 <= i <= n.
pub fn d_left(i: usize, n: usize) -> RingMatrix {
    assert!(n >= 1 && (1..=n).contains(&i), "strand index out of range");
    let sk = maps();
    let mut acc = sk.mu.kron(&identity_pow(n - 1));
    for s in 1..i {
        let f = identity_pow(s - 1).kron(&sk.r).kron(&identity_pow(n - s - 1));
        acc = acc.compose(&f);
    }
    acc
}

/// d^r_{i,n}: V^(x)n -> V^(x)(n-1), 1 <= i <= n.
pub fn d_right(i: usize, n: usize) -> RingMatrix {
    assert!(n >= 1 && (1..=n).contains(&i), "strand index out of range");
    let sk = maps();
    let mut acc = identity_pow(n - 1).kron(&sk.mu);
    for s in 1..i {
        let f = identity_pow(n - s - 1).kron(&sk.r).kron(&identity_pow(s - 1));
        acc = acc.compose(&f);
    }
    acc
}

pub fn d_curtain(n: usize) -> RingMatrix {
    assert!(n >= 1);
    let mut d = RingMatrix::zeros(1 << (n - 1), 1 << n);
    for i in 1..=n {
        let left = d_left(i, n);
        let right = d_right(i, n);
        let sgn_i = i % 2 == 0;
        let term = if sgn_i { left } else { -&left };
        d = &d + &term;
        let sgn_r = sgn_i == (n % 2 == 0);
        let term = if sgn_r { right } else { -&right };
        d = &d + &term;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn absorption_maps() {
        let sk = maps();
        assert_eq!(d_left(1, 3), sk.mu.kron(&identity_pow(2)));
        assert_eq!(d_right(1, 3), identity_pow(2).kron(&sk.mu));
        assert_eq!(d_left(2, 2), sk.mu.kron(&identity_pow(1)).compose(&sk.r));
    }

    #[test]
    fn shapes() {
        for n in 1..=5 {
            for i in 1..=n {
                let l = d_left(i, n);
                assert_eq!((l.rows(), l.cols()), (1 << (n - 1), 1 << n));
                let r = d_right(i, n);
                assert_eq!((r.rows(), r.cols()), (1 << (n - 1), 1 << n));
            }
        }
    }

    #[test]
    fn low_degrees_vanish() {
        assert!(d_curtain(1).is_zero());
        assert!(d_curtain(2).is_zero());
    }

    #[test]
    fn degree_three_columns() {
        let d3 = d_curtain(3);
        assert_eq!((d3.rows(), d3.cols()), (4, 8));
        // d3(e1 e1 e2), flat column 1
        assert_eq!(d3.get(0, 1), p("1 - y^4"));
        assert_eq!(d3.get(1, 1), p("y^2 - 1"));
        assert_eq!(d3.get(2, 1), p("y^4 - y^2"));
        assert_eq!(d3.get(3, 1), p("0"));
        // d3(e1 e2 e2), flat column 3
        assert_eq!(d3.get(0, 3), p("0"));
        assert_eq!(d3.get(1, 3), p("1 - y^2"));
        assert_eq!(d3.get(2, 3), p("y^2 - y^4"));
        assert_eq!(d3.get(3, 3), p("y^4 - 1"));
        // all other columns vanish
        for c in [0, 2, 4, 5, 6, 7] {
            assert!(d3.column(c).is_zero(), "column {c} expected zero");
        }
    }

    #[test]
    fn composes_to_zero() {
        for n in 2..=6 {
            let dn = d_curtain(n);
            let dn1 = d_curtain(n + 1);
            assert!(dn.compose(&dn1).is_zero(), "d{n} . d{} != 0", n + 1);
        }
    }
}
