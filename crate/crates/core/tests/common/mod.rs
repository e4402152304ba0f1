//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; it only uses the public data types to
//! compare results.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::Ratio;

pub type Q = Ratio<i64>;

/// Values of H on `[-2, 2]^2` for the Whitehead link, rows from `s2 = 2`
/// down to `s2 = -2`, columns `s1 = -2..=2`.
pub const WHITEHEAD_H: [[i64; 5]; 5] = [
    [2, 1, 0, 0, 0],
    [2, 1, 0, 0, 0],
    [2, 1, 1, 0, 0],
    [3, 2, 1, 1, 1],
    [4, 3, 2, 2, 2],
];

pub fn whitehead_h(s1: i64, s2: i64) -> i64 {
    WHITEHEAD_H[(2 - s2) as usize][(s1 + 2) as usize]
}

/// `V_s` for `s >= 0` of an L-space knot, read off the staircase complex
/// determined by the exponents of its Alexander polynomial.
///
/// Exponents `n_0 > n_1 > ...` alternate in sign starting with `+`. The
/// even generators `x_{2k}` sit at `(a_k, b_k)` with `(a_0, b_0) = (0, g)`,
/// and `V_s = min_k max(a_k, b_k - s)`.
pub fn staircase_v(symmetric: &[(i64, i64)]) -> BTreeMap<i64, i64> {
    let mut exps: Vec<i64> = symmetric.iter().filter(|(_, c)| *c != 0).map(|(e, _)| *e).collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    let g = exps[0];
    let mut corners = vec![(0i64, g)];
    let mut k = 0;
    while 2 * k + 2 < exps.len() {
        let (a, b) = corners[k];
        let a_next = a + (exps[2 * k] - exps[2 * k + 1]);
        let b_next = b - (exps[2 * k + 1] - exps[2 * k + 2]);
        corners.push((a_next, b_next));
        k += 1;
    }
    (0..=g + 1)
        .map(|s| {
            let v = corners.iter().map(|&(a, b)| a.max(b - s)).min().unwrap();
            (s, v)
        })
        .collect()
}

/// d-invariant of the lens space `L(p, q)` by the reciprocity recursion.
pub fn lens_d_recursive(p: i64, q: i64, i: i64) -> Q {
    if p == 1 {
        return Q::from_integer(0);
    }
    let r = p.rem_euclid(q);
    let j = i.rem_euclid(q);
    Q::new((2 * i + 1 - p - q).pow(2) - p * q, 4 * p * q) - lens_d_recursive(q, r, j)
}

/// Dense one-variable polynomial `coeffs[k]` at exponent `(low + k) / 2`,
/// i.e. exponents in steps of one half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dense {
    pub low: i32,
    pub coeffs: Vec<i64>,
}

impl Dense {
    pub fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        while self.coeffs.first() == Some(&0) {
            self.coeffs.remove(0);
            self.low += 1;
        }
        self
    }

    pub fn terms(&self) -> Vec<(i32, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, &c)| (self.low + k as i32, c))
            .collect()
    }
}

/// Schoolbook long division from the top degree; `None` on a remainder.
pub fn long_divide(num: &Dense, den: &Dense) -> Option<Dense> {
    let num = num.clone().trimmed();
    let den = den.clone().trimmed();
    if num.coeffs.is_empty() {
        return Some(Dense { low: 0, coeffs: vec![] });
    }
    let mut rem = num.coeffs.clone();
    let dl = den.coeffs.len();
    if rem.len() < dl {
        return None;
    }
    let lead = *den.coeffs.last().unwrap();
    let mut quot = vec![0; rem.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + dl - 1];
        if top % lead != 0 {
            return None;
        }
        let c = top / lead;
        quot[k] = c;
        for (j, d) in den.coeffs.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    if rem.iter().any(|&x| x != 0) {
        return None;
    }
    Some(Dense { low: num.low - den.low, coeffs: quot }.trimmed())
}

/// Coefficients of `prod_i (t_i^(1/2) - t_i^(-1/2))` by enumerating sign
/// vectors.
pub fn z_product_terms(n: usize) -> Vec<(Vec<i32>, i64)> {
    (0..1u32 << n)
        .map(|mask| {
            let exps: Vec<i32> = (0..n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            let sign = exps.iter().filter(|&&e| e < 0).count() % 2;
            (exps, if sign == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Coefficient at `s` of `Delta(t) / (1 - t^-1) = Delta(t) (1 + t^-1 + t^-2 + ...)`.
pub fn knot_series_coeff(symmetric: &[(i64, i64)], s: i64) -> i64 {
    let mut total = 0;
    for &(k, c) in symmetric {
        for j in 0.. {
            if k - j < s {
                break;
            }
            if k - j == s {
                total += c;
            }
        }
    }
    total
}

pub const TREFOIL: &[(i64, i64)] = &[(1, 1), (0, -1), (-1, 1)];
pub const T25: &[(i64, i64)] = &[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)];
pub const T34: &[(i64, i64)] = &[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)];
