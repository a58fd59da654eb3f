//! Laurent polynomials over Q in one variable y.
//!
//! The ring k = Q[y, y^-1] is a localization of Q[y], hence a PID, and it
//! is Euclidean for the norm `max exponent - min exponent`. Division by
//! leading-term elimination strictly shrinks that span, which is what the
//! Smith normal form routine relies on.
//!
//! A polynomial is a sparse map from exponents to nonzero rational
//! coefficients. The canonical representative of an associate class has
//! nonzero constant term and coefficient 1 at its highest exponent, so
//! `1 - y^2` canonicalizes to `y^2 - 1` and every unit canonicalizes to 1.

use num::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact coefficient type: arbitrary-precision rationals.
pub type Rational = BigRational;

/// Sparse Laurent polynomial; no zero coefficients are ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// c * y^e
    pub fn monomial(e: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// y^e
    pub fn y_pow(e: i64) -> Self {
        Self::monomial(e, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Units of Q[y, y^-1] are exactly the nonzero monomials c*y^e.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate (exponent, coefficient) pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Coefficient at exponent e (zero if absent).
    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest exponent and its coefficient. None for the zero polynomial.
    pub fn leading(&self) -> Option<(i64, &Rational)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    /// Lowest exponent and its coefficient. None for the zero polynomial.
    pub fn trailing(&self) -> Option<(i64, &Rational)> {
        self.terms.iter().next().map(|(&e, c)| (e, c))
    }

    /// Euclidean norm: highest minus lowest exponent.
    ///
    /// Panics on the zero polynomial, which has no norm.
    pub fn euclid_norm(&self) -> u64 {
        let (top, _) = self.leading().expect("euclid_norm of zero");
        let (bot, _) = self.trailing().unwrap();
        (top - bot) as u64
    }

    fn add_term(&mut self, e: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiply by y^k.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    /// Quotient and remainder: self = q * b + r with r = 0 or
    /// euclid_norm(r) < euclid_norm(b).
    ///
    /// Leading-term elimination: each step cancels the highest term of the
    /// running remainder against the highest term of b. The subtracted
    /// multiple of b occupies exponents down to top(r) - norm(b), which
    /// stays at or above bot(r) while norm(r) >= norm(b), so the span
    /// strictly shrinks and the loop terminates.
    ///
    /// Panics if b is zero.
    pub fn euclid_div(&self, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        let (b_top, b_lead) = b.leading().expect("division by zero polynomial");
        let b_norm = b.euclid_norm();
        let mut q = LaurentPoly::zero();
        let mut r = self.clone();
        while !r.is_zero() && r.euclid_norm() >= b_norm {
            let (r_top, r_lead) = r.leading().unwrap();
            let t = LaurentPoly::monomial(r_top - b_top, r_lead / b_lead);
            r -= &(&t * b);
            q += &t;
        }
        (q, r)
    }

    /// Exact quotient; panics if b does not divide self.
    pub fn div_exact(&self, b: &LaurentPoly) -> LaurentPoly {
        let (q, r) = self.euclid_div(b);
        assert!(r.is_zero(), "inexact division: {self} by {b}");
        q
    }

    pub fn divides(&self, other: &LaurentPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.euclid_div(self).1.is_zero()
    }

    /// Canonical associate: shift so the lowest exponent is 0, then divide
    /// by the coefficient at the highest exponent. The result is the unique
    /// associate with nonzero constant term and leading coefficient 1.
    ///
    /// Panics on the zero polynomial, which has no canonical associate.
    pub fn canonicalize(&self) -> LaurentPoly {
        let (_, lead) = self.leading().expect("canonicalize of zero");
        let (bot, _) = self.trailing().unwrap();
        let inv = Rational::one() / lead;
        self.shift(-bot).scale(&inv)
    }

    /// Greatest common divisor, returned canonicalized.
    ///
    /// Panics when both inputs are zero.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd(0, 0) is undefined"
        );
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.euclid_div(&b);
            a = b;
            b = r;
        }
        a.canonicalize()
    }

    /// Extended gcd: (g, s, t) with s self + t other = g and g equal to
    /// [`LaurentPoly::gcd`] of the inputs.
    ///
    /// Panics when both inputs are zero.
    pub fn extended_gcd(&self, other: &LaurentPoly) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd(0, 0) is undefined"
        );
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (LaurentPoly::one(), LaurentPoly::zero());
        let (mut t0, mut t1) = (LaurentPoly::zero(), LaurentPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.euclid_div(&r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), &s0 - &(&q * &s1));
            (t0, t1) = (t1.clone(), &t0 - &(&q * &t1));
        }
        let unit = r0.canonicalize().div_exact(&r0);
        (&r0 * &unit, &s0 * &unit, &t0 * &unit)
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &(-c));
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Text form: ascending exponents, ` + ` / ` - ` separators with the
/// magnitude after the sign, `c*y^e` per term, bare coefficient when
/// e = 0, a leading `-` attached to the first term, and `0` for zero.
/// Examples: `1 - 1*y^4`, `-1 + 1*y^2`, `-3/2*y^-1 + 2*y^3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            write_coeff(f, &mag)?;
            if e != 0 {
                write!(f, "*y^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parse failure for the Laurent polynomial text form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseLaurentError {
    #[error("empty polynomial text")]
    Empty,
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("malformed coefficient `{0}`")]
    BadCoefficient(String),
    #[error("malformed exponent `{0}`")]
    BadExponent(String),
}

fn parse_term(poly: &mut LaurentPoly, raw: &str, negate: bool) -> Result<(), ParseLaurentError> {
    let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if term.is_empty() {
        return Err(ParseLaurentError::BadTerm(raw.to_string()));
    }
    let (coeff_part, exp) = match term.find('y') {
        None => (term.as_str(), 0i64),
        Some(pos) => {
            let head = term[..pos].trim_end_matches('*');
            let tail = &term[pos + 1..];
            let exp = if tail.is_empty() {
                1
            } else {
                let digits = tail
                    .strip_prefix('^')
                    .ok_or_else(|| ParseLaurentError::BadTerm(raw.to_string()))?;
                i64::from_str(digits)
                    .map_err(|_| ParseLaurentError::BadExponent(raw.to_string()))?
            };
            (head, exp)
        }
    };
    let coeff = match coeff_part {
        "" => Rational::one(),
        text => Rational::from_str(text)
            .map_err(|_| ParseLaurentError::BadCoefficient(raw.to_string()))?,
    };
    let coeff = if negate { -coeff } else { coeff };
    poly.add_term(exp, &coeff);
    Ok(())
}

/// Accepts the display form and common variants: implicit coefficient 1
/// (`y^2 - 1`), omitted `*`, flexible whitespace. A `+`/`-` splits terms
/// unless it directly follows `^`.
impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseLaurentError::Empty);
        }
        let mut poly = LaurentPoly::zero();
        let mut term = String::new();
        let mut negate = false;
        let mut seen_any = false;
        let mut prev_sig = None::<char>;
        for ch in s.chars() {
            let is_split = (ch == '+' || ch == '-') && prev_sig != Some('^');
            if is_split {
                if term.trim().is_empty() {
                    if seen_any {
                        return Err(ParseLaurentError::BadTerm(s.to_string()));
                    }
                    if ch == '-' {
                        negate = !negate;
                    }
                } else {
                    parse_term(&mut poly, &term, negate)?;
                    seen_any = false;
                    term.clear();
                    negate = ch == '-';
                }
                prev_sig = Some(ch);
                continue;
            }
            term.push(ch);
            if !ch.is_whitespace() {
                prev_sig = Some(ch);
                seen_any = true;
            }
        }
        if term.trim().is_empty() {
            return Err(ParseLaurentError::BadTerm(s.to_string()));
        }
        parse_term(&mut poly, &term, negate)?;
        Ok(poly)
    }
}
