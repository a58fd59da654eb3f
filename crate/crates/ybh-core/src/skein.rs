//! The normalized Jones R-matrix and its skein decomposition.
//!
//! V is free of rank 2 over k = Q[y, y^-1] with basis e1, e2. On the
//! ordered basis e1 x e1, e1 x e2, e2 x e1, e2 x e2 of V x V,
//!
//! ```text
//!         | 1   0     0   0 |
//!     R = | 0  1-y^2  1   0 |
//!         | 0  y^2    0   0 |
//!         | 0   0     0   1 |
//! ```
//!
//! so each column sums to 1 (column-unital). R decomposes as I + J with
//! J = beta alpha for the cup alpha: V x V -> k and cap beta: k -> V x V,
//!
//! ```text
//! alpha(e1 x e2) = -y,   alpha(e2 x e1) = y^-1,   alpha = 0 else,
//! beta(1) = y (e1 x e2 - e2 x e1),
//! ```
//!
//! the skein-theoretic analog of resolving a crossing into an identity
//! and a cup-cap pair. Sliding a cup past a cap produces the zig-zag
//! scalings xi = diag(y^2, 1) and zeta = diag(1, y^2) with
//! xi zeta = y^2. The boundary walls act trivially through mu = (1, 1),
//! and lambda_l(1) = y(e2 - e1) = -lambda_r closes a cap onto a wall.
//!
//! Powers of J generate a skew Temperley-Lieb algebra: with
//! h_i = 1^(i-1) x J x 1^(n-i-1) the relations
//! h_i h_i = -(y^2+1) h_i, h_i h_{i+-1} h_i = y^2 h_i, and distant
//! commutation hold. The middle family is the Temperley-Lieb zig-zag
//! e_i e_{i+-1} e_i = e_i with the slide factor xi zeta = y^2 attached:
//! h_i h_{i+1} h_i = (beta x 1) xi zeta (alpha x 1) shifted to slot i.

use crate::laurent::LaurentPoly;
use crate::linalg::RingMatrix;
use std::sync::OnceLock;

/// The fixed skein maps, built once.
#[derive(Debug)]
pub struct SkeinMaps {
    pub r: RingMatrix,
    pub j: RingMatrix,
    pub alpha: RingMatrix,
    pub beta: RingMatrix,
    pub xi: RingMatrix,
    pub zeta: RingMatrix,
    pub lambda_l: RingMatrix,
    pub lambda_r: RingMatrix,
    pub mu: RingMatrix,
}

fn p(s: &str) -> LaurentPoly {
    s.parse().expect("constant polynomial")
}

fn build() -> SkeinMaps {
    let r = RingMatrix::from_rows(vec![
        vec![p("1"), p("0"), p("0"), p("0")],
        vec![p("0"), p("1 - y^2"), p("1"), p("0")],
        vec![p("0"), p("y^2"), p("0"), p("0")],
        vec![p("0"), p("0"), p("0"), p("1")],
    ]);
    let alpha = RingMatrix::from_rows(vec![vec![p("0"), p("-y"), p("y^-1"), p("0")]]);
    let beta = RingMatrix::from_rows(vec![vec![p("0")], vec![p("y")], vec![p("-y")], vec![p("0")]]);
    let xi = RingMatrix::from_rows(vec![vec![p("y^2"), p("0")], vec![p("0"), p("1")]]);
    let zeta = RingMatrix::from_rows(vec![vec![p("1"), p("0")], vec![p("0"), p("y^2")]]);
    let lambda_l = RingMatrix::from_rows(vec![vec![p("-y")], vec![p("y")]]);
    let lambda_r = -&lambda_l;
    let mu = RingMatrix::from_rows(vec![vec![p("1"), p("1")]]);
    let j = beta.compose(&alpha);
    SkeinMaps { r, j, alpha, beta, xi, zeta, lambda_l, lambda_r, mu }
}

pub fn maps() -> &'static SkeinMaps {
    static MAPS: OnceLock<SkeinMaps> = OnceLock::new();
    MAPS.get_or_init(build)
}

/// Identity on V^(x)n, a 2^n x 2^n matrix.
pub fn identity_pow(n: usize) -> RingMatrix {
    RingMatrix::identity(1 << n)
}

/// R with its e1 x e2 diagonal entry replaced by 1; a negative control
/// that the verification battery can actually fail.
pub fn corrupted_r() -> RingMatrix {
    let mut r = maps().r.clone();
    r.set(1, 1, LaurentPoly::one());
    r
}

/// R = I + beta alpha, exactly.
pub fn check_skein() -> bool {
    let m = maps();
    m.r == &RingMatrix::identity(4) + &m.j
}

/// (m x 1)(1 x m)(m x 1) = (1 x m)(m x 1)(1 x m) on V^(x)3.
pub fn check_ybe(m: &RingMatrix) -> bool {
    assert_eq!((m.rows(), m.cols()), (4, 4), "YBE expects a 4 x 4 matrix");
    let id2 = RingMatrix::identity(2);
    let left = m.kron(&id2);
    let right = id2.kron(m);
    left.compose(&right).compose(&left) == right.compose(&left).compose(&right)
}

/// Every column sums to the constant 1.
pub fn check_column_unital(m: &RingMatrix) -> bool {
    let one = LaurentPoly::one();
    (0..m.cols()).all(|j| {
        let mut sum = LaurentPoly::zero();
        for i in 0..m.rows() {
            if let Some(e) = m.entry(i, j) {
                sum += e;
            }
        }
        sum == one
    })
}

/// The Lemma 3.2/3.3 loop evaluations:
/// alpha beta = -(y^2+1); composing a cup past a cap gives xi and zeta;
/// xi zeta = zeta xi = y^2; closing lambda_l onto a cup equals mu zeta.
pub fn check_loop_identities() -> bool {
    let m = maps();
    let id2 = RingMatrix::identity(2);
    let minus_loop = RingMatrix::from_rows(vec![vec![p("-1 - y^2")]]);
    let y2_id = id2.scale(&p("y^2"));

    let cup_cap_xi = m.alpha.kron(&id2).compose(&id2.kron(&m.beta));
    let cup_cap_zeta = id2.kron(&m.alpha).compose(&m.beta.kron(&id2));
    let lambda_closure = m.alpha.compose(&m.lambda_l.kron(&id2));

    m.alpha.compose(&m.beta) == minus_loop
        && cup_cap_xi == m.xi
        && cup_cap_zeta == m.zeta
        && m.xi.compose(&m.zeta) == y2_id
        && m.zeta.compose(&m.xi) == y2_id
        && lambda_closure == m.mu.compose(&m.zeta)
}

/// h_i = 1^(i-1) x J x 1^(n-i-1) acting on V^(x)n.
pub fn stl_generator(i: usize, n: usize) -> RingMatrix {
    assert!(i >= 1 && i + 1 <= n, "stl_generator index out of range: i={i}, n={n}");
    identity_pow(i - 1).kron(&maps().j).kron(&identity_pow(n - i - 1))
}

/// All four skew Temperley-Lieb relation families on n strands.
pub fn check_stl_relations(n: usize) -> bool {
    assert!(n >= 2);
    let h: Vec<RingMatrix> = (1..n).map(|i| stl_generator(i, n)).collect();
    let minus_loop = p("-1 - y^2");
    let y2 = p("y^2");
    for a in 0..h.len() {
        if h[a].compose(&h[a]) != h[a].scale(&minus_loop) {
            return false;
        }
        for b in 0..h.len() {
            let ha_hb = h[a].compose(&h[b]);
            if a.abs_diff(b) == 1 {
                if ha_hb.compose(&h[a]) != h[a].scale(&y2) {
                    return false;
                }
            } else if a != b && ha_hb != h[b].compose(&h[a]) {
                return false;
            }
        }
    }
    true
}

/// Left and right wall conditions for the trivial action mu, each built
/// as the literal composite mu (mu x 1) (wall-side R) = mu (mu x 1).
/// For trivial mu both reduce to column-unitality.
pub fn check_wall_condition(m: &RingMatrix) -> bool {
    assert_eq!((m.rows(), m.cols()), (4, 4), "wall condition expects a 4 x 4 matrix");
    let sk = maps();
    let id2 = RingMatrix::identity(2);
    let left_wall = sk.mu.compose(&sk.mu.kron(&id2));
    let right_wall = sk.mu.compose(&id2.kron(&sk.mu));
    left_wall.compose(m) == left_wall && right_wall.compose(m) == right_wall
}
