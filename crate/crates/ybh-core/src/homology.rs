//! Homology of the chain complex and the reports built on top of it:
//! cohomology with a universal-coefficient cross-check, the degree-2
//! cocycle witness, images of the special basis vectors e_{j,i},
//! annihilator bookkeeping for the constant words, and the
//! Fibonacci-profile conjecture.
//!
//! Conventions: H_n = ker d_n / im d_{n+1} over k = Q[y, y^-1]. Every
//! group splits as k^free (+) sum_t k/(t) with the torsion factors read
//! off the Smith normal form of d_{n+1}. Degree 0 is never reported.
//!
//! Special vectors: e_{1,i} is the word with e_1 in every slot except an
//! e_2 at position i (1-based), e_{2,i} swaps the roles, and i = 0 means
//! the constant word. Their images under d_n land on the constant output
//! words with coefficients given by closed forms in `closed_form_coefficient`.

use crate::differential::differential;
use crate::laurent::LaurentPoly;
use crate::linalg::snf::SmithNormalForm;
use crate::linalg::{RingMatrix, TensorIndex};
use crate::skein::maps;
use std::fmt;

/// One homology or cohomology group in split form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    /// Nonunit invariant factors, canonical and in divisibility order.
    pub torsion: Vec<LaurentPoly>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Equality as abstract modules: free rank plus torsion multiset.
    pub fn same_module(&self, other: &HomologyGroup) -> bool {
        fn key(g: &HomologyGroup) -> Vec<String> {
            let mut v: Vec<String> =
                g.torsion.iter().map(|t| t.canonicalize().to_string()).collect();
            v.sort();
            v
        }
        self.free_rank == other.free_rank && key(self) == key(other)
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("k".into()),
            r => parts.push(format!("k^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("k/({t})"));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" (+) "))
    }
}

/// H_n of the complex. `max_built` is the top degree whose differential
/// the caller wants constructed up front; it must reach d_{n+1}.
pub fn homology(n: usize, max_built: usize) -> HomologyGroup {
    assert!(n >= 1, "degree must be positive");
    assert!(max_built >= n + 1, "need the differential one degree above {n}");
    for m in 1..=max_built {
        differential(m);
    }
    let down = differential(n);
    let up = differential(n + 1);
    assert!(down.compose(&up).is_zero(), "d_{n} . d_{} is nonzero", n + 1);
    let snf_up = SmithNormalForm::compute(&up);
    let free_rank = (1usize << n) - down.rank() - snf_up.rank();
    HomologyGroup { degree: n, free_rank, torsion: snf_up.nonunit_factors() }
}

/// H^n computed directly from the transposed complex and cross-checked
/// against the universal-coefficient description (free part of H_n plus
/// the torsion of d_n). Panics if the two disagree.
pub fn cohomology(n: usize) -> HomologyGroup {
    assert!(n >= 1, "degree must be positive");
    let down = differential(n);
    let up = differential(n + 1);

    let snf_in = SmithNormalForm::compute(&down.transpose());
    let free_rank = (1usize << n) - up.transpose().rank() - snf_in.rank();
    let direct = HomologyGroup { degree: n, free_rank, torsion: snf_in.nonunit_factors() };

    let via_uct = HomologyGroup {
        degree: n,
        free_rank: homology(n, n + 1).free_rank,
        torsion: SmithNormalForm::compute(&down).nonunit_factors(),
    };
    assert!(
        direct.same_module(&via_uct),
        "cohomology mismatch in degree {n}: direct {direct}, universal-coefficient {via_uct}"
    );
    direct
}

/// The cap alpha is a 2-cocycle that is not a coboundary: alpha . d_3
/// vanishes while alpha(e_1 (x) e_2) = -y does not.
pub fn check_alpha_cocycle() -> bool {
    let alpha = &maps().alpha;
    let vanishes = alpha.compose(&differential(3)).is_zero();
    let value = alpha.get(0, TensorIndex::new(vec![1, 2]).flat());
    vanishes && !value.is_zero()
}

/// The basis word e_{j,i} of V^(x)n described in the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecialVector {
    pub n: usize,
    pub j: u8,
    pub i: usize,
}

impl SpecialVector {
    pub fn new(n: usize, j: u8, i: usize) -> Self {
        assert!(n >= 1, "need at least one tensor factor");
        assert!(j == 1 || j == 2, "j must be 1 or 2");
        assert!(i <= n, "position {i} out of range for {n} factors");
        Self { n, j, i }
    }

    pub fn tensor_index(&self) -> TensorIndex {
        let digits =
            (1..=self.n).map(|p| if p == self.i { 3 - self.j } else { self.j }).collect();
        TensorIndex::new(digits)
    }

    pub fn flat(&self) -> usize {
        self.tensor_index().flat()
    }
}

/// Row index of the constant word e_{j,0} in V^(x)m.
fn constant_row(m: usize, j: u8) -> usize {
    if j == 1 {
        0
    } else {
        (1usize << m) - 1
    }
}

/// Coefficient of the constant output word e^{n-1}_{j,0} in d_n(e^n_{j,i}),
/// read straight out of the differential.
pub fn special_coefficient(n: usize, j: u8, i: usize) -> LaurentPoly {
    assert!(n >= 2, "need an output factor to project onto");
    let v = SpecialVector::new(n, j, i);
    differential(n).get(constant_row(n - 1, j), v.flat())
}

/// Closed form for `special_coefficient`, valid from four factors up
/// (every value for i >= 1; the i = 0 column vanishes entirely).
pub fn closed_form_coefficient(n: usize, j: u8, i: usize) -> LaurentPoly {
    assert!(j == 1 || j == 2, "j must be 1 or 2");
    assert!(i <= n, "position {i} out of range for {n} factors");
    if i == 0 {
        return LaurentPoly::zero();
    }
    assert!(n >= 4, "closed forms hold from four factors up");
    let diff = |a: i64, b: i64| &LaurentPoly::y_pow(a) - &LaurentPoly::y_pow(b);
    let (ni, ii) = (n as i64, i as i64);
    match (j, i % 2 == 1, n % 2 == 1) {
        (1, true, _) => diff(0, 2 * ii - 2),
        (1, false, _) => diff(2 * ii - 2, 2),
        (2, true, true) => diff(2 * ni - 2 * ii, 0),
        (2, false, true) => diff(2, 2 * ni - 2 * ii),
        (2, true, false) => diff(2 * (ni - ii), 2),
        (2, false, false) => diff(0, 2 * (ni - ii)),
        _ => unreachable!(),
    }
}

/// Full image column d_n(e_{j,i}), with a companion check that the two
/// constant-output coefficients match the closed forms (the cross one
/// always vanishes).
pub fn special_image(n: usize, j: u8, i: usize) -> RingMatrix {
    let v = SpecialVector::new(n, j, i);
    if i >= 1 {
        assert!(n > 3, "positioned special vectors need at least four factors");
    }
    let col = differential(n).column(v.flat());
    if n >= 2 {
        let own = col.get(constant_row(n - 1, j), 0);
        let cross = col.get(constant_row(n - 1, 3 - j), 0);
        assert_eq!(
            own,
            closed_form_coefficient(n, j, i),
            "closed form disagrees with d_{n}(e_({j},{i}))"
        );
        assert!(cross.is_zero(), "d_{n}(e_({j},{i})) leaks onto the opposite constant word");
    }
    col
}

/// What the images of the special vectors one degree up say about the
/// constant words e_{1,0} and e_{2,0} in degree n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnnihilatorReport {
    /// Odd n: gcd of the coefficient family landing on e_{1,0}
    /// resp. e_{2,0} under d_{n+1}.
    Odd { family1: LaurentPoly, family2: LaurentPoly },
    /// Even n: whether some coefficient on e_{1,0} is a unit (which
    /// would put e_{1,0} in the image), and the gcd annihilating the
    /// class of e_{2,0}.
    Even { boundary_unit: bool, annihilator: LaurentPoly },
}

impl fmt::Display for AnnihilatorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnnihilatorReport::Odd { family1, family2 } => {
                write!(f, "gcd on e_(1,0): {family1}; gcd on e_(2,0): {family2}")
            }
            AnnihilatorReport::Even { boundary_unit, annihilator } => write!(
                f,
                "unit coefficient on e_(1,0): {boundary_unit}; annihilator of e_(2,0): {annihilator}"
            ),
        }
    }
}

/// Computes the report for degree n >= 4 from the actual columns of
/// d_{n+1}; nothing here consults the closed forms.
pub fn annihilator_report(n: usize) -> AnnihilatorReport {
    assert!(n >= 4, "annihilator bookkeeping starts in degree 4");
    let m = n + 1;
    let family = |j: u8| -> Vec<LaurentPoly> {
        (1..=m).map(|i| special_coefficient(m, j, i)).filter(|c| !c.is_zero()).collect()
    };
    let gcd_of = |fam: &[LaurentPoly]| -> LaurentPoly {
        fam.iter().fold(LaurentPoly::zero(), |acc, c| {
            if acc.is_zero() {
                c.canonicalize()
            } else {
                acc.gcd(c)
            }
        })
    };
    let f1 = family(1);
    let f2 = family(2);
    if n % 2 == 1 {
        AnnihilatorReport::Odd { family1: gcd_of(&f1), family2: gcd_of(&f2) }
    } else {
        AnnihilatorReport::Even {
            boundary_unit: f1.iter().any(LaurentPoly::is_unit),
            annihilator: gcd_of(&f2),
        }
    }
}

/// Partial sums of the Fibonacci numbers: s_m = f_1 + ... + f_{m+1} with
/// f_1 = f_2 = 1, and s_m = 0 for negative m.
pub fn fib_partial_sum(m: i64) -> usize {
    if m < 0 {
        return 0;
    }
    let (mut a, mut b) = (1usize, 1usize);
    let mut sum = 0usize;
    for _ in 0..=m {
        sum += a;
        (a, b) = (b, a + b);
    }
    sum
}

/// Predicted multiplicity a_n of k/(y^2 - 1) in degree n:
/// a_0 = a_1 = 0 and a_n = 2^n - 2 - a_{n-1} - s_{n-3} - s_{n-2}.
pub fn torsion_count(n: usize) -> usize {
    let mut a = 0usize;
    for k in 2..=n {
        let ki = k as i64;
        a = (1usize << k) - 2 - a - fib_partial_sum(ki - 3) - fib_partial_sum(ki - 2);
    }
    a
}

/// The conjectured shape of H_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjecturePrediction {
    pub degree: usize,
    /// Multiplicity of k/(y^2 - 1).
    pub a_n: usize,
    /// Multiplicity of k/(y^4 - 1), the Fibonacci partial sum s_{n-2}.
    pub s_n_minus_2: usize,
    pub predicted: HomologyGroup,
}

pub fn conjecture_prediction(n: usize) -> ConjecturePrediction {
    assert!(n >= 1, "degree must be positive");
    let a_n = torsion_count(n);
    let s_n_minus_2 = fib_partial_sum(n as i64 - 2);
    let quad = &LaurentPoly::y_pow(2) - &LaurentPoly::one();
    let quart = &LaurentPoly::y_pow(4) - &LaurentPoly::one();
    let mut torsion = vec![quad; a_n];
    torsion.extend(std::iter::repeat(quart).take(s_n_minus_2));
    let predicted = HomologyGroup { degree: n, free_rank: 2, torsion };
    ConjecturePrediction { degree: n, a_n, s_n_minus_2, predicted }
}

/// One row of the conjecture report: prediction next to computation.
#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub degree: usize,
    pub prediction: ConjecturePrediction,
    pub computed: HomologyGroup,
    pub agrees: bool,
}

/// Compares prediction and computation in degrees 2..=max_n. The
/// dimension bookkeeping 2^n = 2 + a_{n-1} + s_{n-3} + a_n + s_{n-2}
/// is asserted for every reported degree.
pub fn conjecture_report(max_n: usize) -> Vec<ConjectureRow> {
    assert!(max_n >= 2, "the report starts in degree 2");
    (2..=max_n)
        .map(|n| {
            let ni = n as i64;
            let rhs = 2
                + torsion_count(n - 1)
                + fib_partial_sum(ni - 3)
                + torsion_count(n)
                + fib_partial_sum(ni - 2);
            assert_eq!(1usize << n, rhs, "dimension bookkeeping failed in degree {n}");
            let prediction = conjecture_prediction(n);
            let computed = homology(n, n + 1);
            let agrees = prediction.predicted.same_module(&computed);
            ConjectureRow { degree: n, prediction, computed, agrees }
        })
        .collect()
}
