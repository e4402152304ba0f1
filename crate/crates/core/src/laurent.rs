//! Sparse multivariable Laurent polynomials with integer coefficients and
//! half-integer exponents.
//!
//! Every exponent is stored doubled, so `t^(1/2)` has the exponent entry `1`
//! and `t^(-1)` has `-2`. This keeps factors such as `t^(1/2) - t^(-1/2)`
//! ordinary polynomials and all arithmetic exact.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("dimension mismatch: {left} variables vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not exactly divisible by {divisor}")]
    NotDivisible { divisor: String },
    #[error("polynomial is not (anti)palindromic in a way expressible in z = t^(1/2) - t^(-1/2)")]
    NotSymmetric,
    #[error("expected a polynomial in one variable, found {0}")]
    NotUnivariate(usize),
    #[error("malformed polynomial data: {0}")]
    Format(String),
}

/// Exponent vector; entry `k` is twice the exponent of `t_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec(Vec<i32>);

impl ExpVec {
    pub fn doubled(entries: Vec<i32>) -> Self {
        ExpVec(entries)
    }

    /// Exponent vector of the integral lattice point `s`.
    pub fn from_lattice(s: &[i64]) -> Self {
        ExpVec(s.iter().map(|&x| (2 * x) as i32).collect())
    }

    pub fn zeros(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The true exponents as a lattice point, if all of them are integers.
    pub fn to_lattice(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|&e| if e % 2 == 0 { Some(i64::from(e / 2)) } else { None })
            .collect()
    }

    fn plus(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn minus(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn negated(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|a| -a).collect())
    }
}

/// A Laurent polynomial in `nvars` variables over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExpVec::zeros(nvars), c)
    }

    pub fn monomial(exp: ExpVec, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c.into());
        p
    }

    /// `t_i^(1/2) - t_i^(-1/2)` for the zero-based variable index `i`.
    pub fn half_difference(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut up = vec![0; nvars];
        up[i] = 1;
        let mut down = vec![0; nvars];
        down[i] = -1;
        let mut p = Self::monomial(ExpVec(up), 1);
        p.add_term(ExpVec(down), BigInt::from(-1));
        p
    }

    /// `prod_i (t_i^(1/2) - t_i^(-1/2))` over all variables.
    pub fn half_difference_product(nvars: usize) -> Self {
        (0..nvars).fold(Self::one(nvars), |acc, i| {
            &acc * &Self::half_difference(nvars, i)
        })
    }

    /// Builds a polynomial from `(doubled exponents, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(LaurentError::DimensionMismatch {
                    left: nvars,
                    right: exp.len(),
                });
            }
            p.add_term(ExpVec(exp), c.into());
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: ExpVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExpVec) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&ExpVec, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn check_dims(&self, other: &LaurentPoly) -> Result<(), LaurentError> {
        if self.nvars != other.nvars {
            return Err(LaurentError::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_dims(other)?;
        let mut acc: BTreeMap<ExpVec, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.plus(eb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: acc,
        })
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial with exponent `shift`.
    pub fn shift(&self, shift: &ExpVec) -> LaurentPoly {
        assert_eq!(shift.len(), self.nvars, "shift dimension");
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.plus(shift), v.clone()))
                .collect(),
        }
    }

    /// Substitutes `t_i -> t_i^(-1)` in every variable.
    pub fn invert_variables(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.negated(), v.clone()))
                .collect(),
        }
    }

    fn exponent_bounds(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for e in it {
            for (k, &x) in e.0.iter().enumerate() {
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
        Some((lo, hi))
    }

    /// Exact division: returns `q` with `q * divisor == self`.
    ///
    /// Uses lexicographic leading terms. Since degrees in each variable add
    /// under multiplication, every quotient exponent is confined to a box
    /// computed up front, which bounds the loop and turns a nonzero
    /// remainder into an error instead of an endless Laurent tail.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.check_dims(divisor)?;
        let not_divisible = || LaurentError::NotDivisible {
            divisor: divisor.to_string(),
        };
        let (d_lo, d_hi) = divisor.exponent_bounds().ok_or(LaurentError::DivisionByZero)?;
        let Some((p_lo, p_hi)) = self.exponent_bounds() else {
            return Ok(Self::zero(self.nvars));
        };
        let q_lo: Vec<i32> = p_lo.iter().zip(&d_lo).map(|(a, b)| a - b).collect();
        let q_hi: Vec<i32> = p_hi.iter().zip(&d_hi).map(|(a, b)| a - b).collect();
        if q_lo.iter().zip(&q_hi).any(|(l, h)| l > h) {
            return Err(not_divisible());
        }
        let (d_lead_exp, d_lead_coeff) = divisor
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero divisor");

        let mut remainder = self.clone();
        let mut quotient = Self::zero(self.nvars);
        while let Some((e, c)) = remainder.leading_term() {
            let q_exp = e.minus(&d_lead_exp);
            let in_box = q_exp
                .0
                .iter()
                .enumerate()
                .all(|(k, &x)| q_lo[k] <= x && x <= q_hi[k]);
            let (q_coeff, rem) = c.div_rem(&d_lead_coeff);
            if !in_box || !rem.is_zero() {
                return Err(not_divisible());
            }
            let step = Self::monomial(q_exp, q_coeff);
            remainder = remainder.checked_sub(&step.checked_mul(divisor)?)?;
            quotient = quotient.checked_add(&step)?;
        }
        Ok(quotient)
    }

    /// Sets every variable equal to a single variable `t`.
    pub fn specialize_diagonal(&self) -> LaurentPoly {
        let mut out = Self::zero(1);
        for (e, c) in &self.terms {
            out.add_term(ExpVec(vec![e.0.iter().sum()]), c.clone());
        }
        out
    }

    /// Sum of all coefficients, i.e. the value at `t_1 = ... = t_n = 1`.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Rewrites a one-variable polynomial in the basis `z^k`,
    /// `z = t^(1/2) - t^(-1/2)`.
    ///
    /// The coefficients are peeled off from the bottom: the constant term in
    /// `z` is the value at `t = 1`, after which the rest divides exactly by
    /// `z`. Representability requires `p(t^-1) = p(t)` for integral
    /// exponents and `p(t^-1) = -p(t)` for half-integral ones.
    pub fn conway_substitute(&self) -> Result<ConwayPoly, LaurentError> {
        if self.nvars != 1 {
            return Err(LaurentError::NotUnivariate(self.nvars));
        }
        if self.is_zero() {
            return Ok(ConwayPoly { coeffs: Vec::new() });
        }
        let parities: Vec<i32> = self.terms.keys().map(|e| e.0[0].rem_euclid(2)).collect();
        let odd = parities[0] == 1;
        if parities.iter().any(|&p| (p == 1) != odd) {
            return Err(LaurentError::NotSymmetric);
        }
        let mirrored = self.invert_variables();
        let expected = if odd { -self } else { self.clone() };
        if mirrored != expected {
            return Err(LaurentError::NotSymmetric);
        }

        let z = Self::half_difference(1, 0);
        let mut coeffs = Vec::new();
        let mut rest = self.clone();
        while !rest.is_zero() {
            let a = rest.evaluate_at_one();
            rest = rest.checked_sub(&Self::constant(1, a.clone()))?;
            coeffs.push(a);
            rest = rest
                .divide_exact(&z)
                .map_err(|_| LaurentError::NotSymmetric)?;
        }
        Ok(ConwayPoly::new(coeffs))
    }

    /// Terms as `(lattice point, coefficient)` pairs, or `None` if some
    /// exponent is a half-integer.
    pub fn lattice_support(&self) -> Option<Vec<(Vec<i64>, BigInt)>> {
        self.terms
            .iter()
            .map(|(e, c)| e.to_lattice().map(|s| (s, c.clone())))
            .collect()
    }

    /// JSON array of `[doubled exponent vector, coefficient]` pairs in
    /// ascending lexicographic order. Coefficients outside the `i64` range
    /// are written as decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    Value::Array(vec![
                        Value::Array(e.0.iter().map(|&x| Value::from(x)).collect()),
                        coeff_to_json(c),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(nvars: usize, value: &Value) -> Result<LaurentPoly, LaurentError> {
        let fmt_err = |m: &str| LaurentError::Format(m.to_string());
        let items = value
            .as_array()
            .ok_or_else(|| fmt_err("polynomial must be an array of [exponents, coefficient]"))?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| fmt_err("each term must be a two-element array"))?;
            let exps = pair[0]
                .as_array()
                .ok_or_else(|| fmt_err("exponent vector must be an array"))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .and_then(|v| i32::try_from(v).ok())
                        .ok_or_else(|| fmt_err("exponents must be 32-bit integers"))
                })
                .collect::<Result<Vec<i32>, _>>()?;
            let coeff = match &pair[1] {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| fmt_err("coefficients must be integers"))?,
                Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| fmt_err("coefficient string is not an integer"))?,
                _ => return Err(fmt_err("coefficient must be an integer")),
            };
            terms.push((exps, coeff));
        }
        LaurentPoly::from_terms(nvars, terms)
    }
}

fn coeff_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(&e.0, coeff_to_json(c)))?;
        }
        seq.end()
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, doubled: i32) -> fmt::Result {
    if doubled % 2 == 0 {
        write!(f, "^{}", doubled / 2)
    } else {
        write!(f, "^({doubled}/2)")
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest lexicographic term first, e.g. `t1^(1/2)*t2^(1/2) - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let factors: Vec<(usize, i32)> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(k, &x)| (k, x))
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (j, (k, x)) in factors.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                if self.nvars == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t{}", k + 1)?;
                }
                if *x != 2 {
                    write_exponent(f, *x)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

/// Polynomial in `z = t^(1/2) - t^(-1/2)`; `coeffs[k]` multiplies `z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConwayPoly {
    coeffs: Vec<BigInt>,
}

impl ConwayPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ConwayPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Expands back into a one-variable Laurent polynomial in `t`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let z = LaurentPoly::half_difference(1, 0);
        let mut power = LaurentPoly::one(1);
        let mut out = LaurentPoly::zero(1);
        for c in &self.coeffs {
            out = &out + &power.scale(c);
            power = &power * &z;
        }
        out
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, exps: &[i32], c: i64) -> LaurentPoly {
        assert_eq!(exps.len(), n);
        LaurentPoly::monomial(ExpVec::doubled(exps.to_vec()), c)
    }

    fn z(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::half_difference(n, i)
    }

    #[test]
    fn add_cancels() {
        let p = &t(1, &[2], 1) - &LaurentPoly::one(1);
        assert_eq!(&p + &LaurentPoly::one(1), t(1, &[2], 1));
        assert_eq!(&p + &LaurentPoly::zero(1), p);
        let s = &t(1, &[1], 1) + &t(1, &[-1], 1);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let err = LaurentPoly::one(1).checked_add(&LaurentPoly::one(2));
        assert_eq!(err, Err(LaurentError::DimensionMismatch { left: 1, right: 2 }));
        assert!(LaurentPoly::one(2).checked_mul(&LaurentPoly::one(3)).is_err());
        assert!(LaurentPoly::one(2).divide_exact(&LaurentPoly::one(3)).is_err());
    }

    #[test]
    fn squares_of_z() {
        let zz = &z(1, 0) * &z(1, 0);
        let expected = LaurentPoly::from_terms(1, [(vec![2], 1), (vec![0], -2), (vec![-2], 1)]).unwrap();
        assert_eq!(zz, expected);
        let zz2 = &z(2, 0) * &z(2, 1);
        assert_eq!(&zz2 * &LaurentPoly::one(2), zz2);
    }

    #[test]
    fn whitehead_division() {
        let wh = -&(&z(2, 0) * &z(2, 1));
        let q = wh.divide_exact(&z(2, 0)).unwrap();
        assert_eq!(q, -&z(2, 1));
        assert_eq!(wh.divide_exact(&LaurentPoly::one(2)).unwrap(), wh);
    }

    #[test]
    fn one_variable_long_division() {
        let p = LaurentPoly::from_terms(1, [(vec![2], 1), (vec![0], -2), (vec![-2], 1)]).unwrap();
        assert_eq!(p.divide_exact(&z(1, 0)).unwrap(), z(1, 0));
    }

    #[test]
    fn non_divisible_fails_loudly() {
        // t - 1 + t^-1 is not a multiple of t^(1/2) - t^(-1/2).
        let p = LaurentPoly::from_terms(1, [(vec![2], 1), (vec![0], -1), (vec![-2], 1)]).unwrap();
        assert!(matches!(p.divide_exact(&z(1, 0)), Err(LaurentError::NotDivisible { .. })));
        // 1 / (1 - t^-1) has no polynomial quotient.
        let d = LaurentPoly::from_terms(1, [(vec![0], 1), (vec![-2], -1)]).unwrap();
        assert!(LaurentPoly::one(1).divide_exact(&d).is_err());
        // Non-unit leading coefficients must divide.
        assert!(LaurentPoly::one(1).divide_exact(&LaurentPoly::constant(1, 2)).is_err());
        assert_eq!(
            LaurentPoly::one(1).divide_exact(&LaurentPoly::zero(1)),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn diagonal_specialization() {
        let wh = -&(&z(2, 0) * &z(2, 1));
        let expected = -&LaurentPoly::from_terms(1, [(vec![2], 1), (vec![0], -2), (vec![-2], 1)]).unwrap();
        assert_eq!(wh.specialize_diagonal(), expected);
        assert_eq!(LaurentPoly::constant(3, 5).specialize_diagonal(), LaurentPoly::constant(1, 5));
        assert_eq!(t(2, &[2, -2], 1).specialize_diagonal(), LaurentPoly::one(1));
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(LaurentPoly::one(3).evaluate_at_one(), BigInt::from(1));
        assert_eq!(LaurentPoly::zero(2).evaluate_at_one(), BigInt::from(0));
        let p = &z(1, 0) * &z(1, 0);
        assert_eq!(p.evaluate_at_one(), BigInt::from(0));
    }

    #[test]
    fn conway_examples() {
        let zz = &z(1, 0) * &z(1, 0);
        let c = zz.conway_substitute().unwrap();
        assert_eq!(c.coeffs(), &[BigInt::from(0), BigInt::from(0), BigInt::from(1)]);
        assert_eq!(LaurentPoly::one(1).conway_substitute().unwrap().coeffs(), &[BigInt::from(1)]);
        let trefoil = LaurentPoly::from_terms(1, [(vec![2], 1), (vec![0], -1), (vec![-2], 1)]).unwrap();
        let c = trefoil.conway_substitute().unwrap();
        assert_eq!(c.to_string(), "z^2 + 1");
        assert_eq!(c.to_laurent(), trefoil);
    }

    #[test]
    fn conway_rejects_asymmetric_input() {
        let p = &t(1, &[2], 1) - &t(1, &[-2], 1);
        assert_eq!(p.conway_substitute(), Err(LaurentError::NotSymmetric));
        let mixed = &t(1, &[1], 1) + &LaurentPoly::one(1);
        assert_eq!(mixed.conway_substitute(), Err(LaurentError::NotSymmetric));
        assert_eq!(
            LaurentPoly::one(2).conway_substitute(),
            Err(LaurentError::NotUnivariate(2))
        );
    }

    #[test]
    fn display_is_readable() {
        let wh = -&(&z(2, 0) * &z(2, 1));
        assert_eq!(
            wh.to_string(),
            "-t1^(1/2)*t2^(1/2) + t1^(1/2)*t2^(-1/2) + t1^(-1/2)*t2^(1/2) - t1^(-1/2)*t2^(-1/2)"
        );
        let p = LaurentPoly::from_terms(1, [(vec![2], 1), (vec![0], -2), (vec![-4], 3)]).unwrap();
        assert_eq!(p.to_string(), "t - 2 + 3*t^-2");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn json_is_sorted_and_parses_back() {
        let wh = -&(&z(2, 0) * &z(2, 1));
        let json = wh.to_json();
        assert_eq!(
            json.to_string(),
            "[[[-1,-1],-1],[[-1,1],1],[[1,-1],1],[[1,1],-1]]"
        );
        assert_eq!(serde_json::to_value(&wh).unwrap(), json);
        assert_eq!(LaurentPoly::from_json(2, &json).unwrap(), wh);
        let big = LaurentPoly::constant(1, BigInt::from(i64::MAX) * 4);
        let back = LaurentPoly::from_json(1, &big.to_json()).unwrap();
        assert_eq!(back, big);
        assert!(LaurentPoly::from_json(2, &serde_json::json!([[[1], 1]])).is_err());
        assert!(LaurentPoly::from_json(1, &serde_json::json!({"a": 1})).is_err());
    }
}
