//! Plain-text rendering of lattice functions.
//!
//! Two-component functions print as a grid with `s1` increasing to the
//! right and `s2` upward. The `s2 = 0` row is drawn dotted and the origin
//! column is marked with `:` above the grid:
//!
//! ```text
//!         s2
//!         :
//!   2  1  0  0  0
//!   2  1  0  0  0
//! ..2..1..1..0..0 > s1
//!   3  2  1  1  1
//!   4  3  2  2  2
//! ```

use std::fmt::Write;

use crate::lattice::{box_points, HModel, LatticeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeFunction {
    BigH,
    SmallH,
    HPrime,
}

impl LatticeFunction {
    pub fn symbol(self) -> &'static str {
        match self {
            LatticeFunction::BigH => "H",
            LatticeFunction::SmallH => "h",
            LatticeFunction::HPrime => "h'",
        }
    }

    pub fn eval(self, m: &HModel, s: &[i64]) -> Result<i64, LatticeError> {
        match self {
            LatticeFunction::BigH => m.eval_big_h(s),
            LatticeFunction::SmallH => m.eval_h(s),
            LatticeFunction::HPrime => m.eval_h_prime(s),
        }
    }
}

/// Grid of `f(s1, s2)` for `s1, s2` in `[-radius, radius]`.
pub fn grid<F>(radius: i64, mut f: F) -> String
where
    F: FnMut(i64, i64) -> i64,
{
    let rows: Vec<(i64, Vec<String>)> = (-radius..=radius)
        .rev()
        .map(|s2| (s2, (-radius..=radius).map(|s1| f(s1, s2).to_string()).collect()))
        .collect();
    let width = rows
        .iter()
        .flat_map(|(_, r)| r.iter().map(String::len))
        .max()
        .unwrap_or(1)
        + 2;
    let axis = width * radius as usize + width - 1;
    let mut out = String::new();
    writeln!(out, "{}s2", " ".repeat(axis)).unwrap();
    writeln!(out, "{}:", " ".repeat(axis)).unwrap();
    for (s2, cells) in rows {
        let pad = if s2 == 0 { '.' } else { ' ' };
        let mut line = String::new();
        for c in cells {
            line.extend(std::iter::repeat(pad).take(width - c.len()));
            line.push_str(&c);
        }
        if s2 == 0 {
            line.push_str(" > s1");
        }
        writeln!(out, "{line}").unwrap();
    }
    out
}

/// Text rendering of `which` on the box of the given radius.
///
/// Functions that vanish on the whole box print as `0 everywhere`. Two
/// variables give a grid, one variable a pair of rows, and more variables
/// a list of the nonzero values.
pub fn render_function(m: &HModel, which: LatticeFunction, radius: i64) -> Result<String, LatticeError> {
    let n = m.components();
    let mut values = Vec::new();
    for s in box_points(n, radius) {
        let v = which.eval(m, &s)?;
        values.push((s, v));
    }
    if values.iter().all(|(_, v)| *v == 0) {
        return Ok("0 everywhere\n".into());
    }
    match n {
        1 => {
            let cells: Vec<(String, String)> = values
                .iter()
                .map(|(s, v)| (s[0].to_string(), v.to_string()))
                .collect();
            let width = cells.iter().map(|(a, b)| a.len().max(b.len())).max().unwrap_or(1) + 1;
            let mut top = String::from("s");
            let mut bottom = String::from(which.symbol());
            let label = top.len().max(bottom.len());
            top = format!("{top:<label$}");
            bottom = format!("{bottom:<label$}");
            for (a, b) in cells {
                write!(top, "{a:>width$}").unwrap();
                write!(bottom, "{b:>width$}").unwrap();
            }
            Ok(format!("{top}\n{bottom}\n"))
        }
        2 => {
            let mut err = None;
            let g = grid(radius, |s1, s2| {
                which.eval(m, &[s1, s2]).unwrap_or_else(|e| {
                    err = Some(e);
                    0
                })
            });
            match err {
                Some(e) => Err(e),
                None => Ok(g),
            }
        }
        _ => {
            let mut out = String::new();
            for (s, v) in values.iter().filter(|(_, v)| *v != 0) {
                let p: Vec<String> = s.iter().map(i64::to_string).collect();
                writeln!(out, "{}({}) = {v}", which.symbol(), p.join(",")).unwrap();
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{HPrimeTable, Provenance};

    fn whitehead() -> HModel {
        HModel::brunnian(HPrimeTable::delta(2), Provenance::Manual).unwrap()
    }

    #[test]
    fn whitehead_grid() {
        let expected = concat!(
            "        s2\n",
            "        :\n",
            "  2  1  0  0  0\n",
            "  2  1  0  0  0\n",
            "..2..1..1..0..0 > s1\n",
            "  3  2  1  1  1\n",
            "  4  3  2  2  2\n",
        );
        assert_eq!(render_function(&whitehead(), LatticeFunction::BigH, 2).unwrap(), expected);
    }

    #[test]
    fn small_h_grid() {
        let expected = concat!(
            "     s2\n",
            "     :\n",
            "  0  0  0\n",
            "..0..1..0 > s1\n",
            "  0  0  0\n",
        );
        assert_eq!(render_function(&whitehead(), LatticeFunction::SmallH, 1).unwrap(), expected);
    }

    #[test]
    fn vanishing_functions() {
        let unknot = HModel::unlink(1);
        assert_eq!(render_function(&unknot, LatticeFunction::SmallH, 3).unwrap(), "0 everywhere\n");
    }

    #[test]
    fn knot_rows() {
        let trefoil = HModel::brunnian(HPrimeTable::delta(1), Provenance::Manual).unwrap();
        assert_eq!(
            render_function(&trefoil, LatticeFunction::BigH, 2).unwrap(),
            "s -2 -1  0  1  2\nH  2  1  1  0  0\n"
        );
    }

    #[test]
    fn three_variable_list() {
        let b = HModel::brunnian(HPrimeTable::delta(3), Provenance::Manual).unwrap();
        assert_eq!(render_function(&b, LatticeFunction::HPrime, 2).unwrap(), "h'(0,0,0) = 1\n");
    }
}
