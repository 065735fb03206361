//! Fraction-free elimination over the rationals.
//!
//! Rows are scaled to primitive integer vectors and combined with integer
//! cross-multiplication (`a·x − b·r`), followed by content removal. Rational
//! numbers only appear at the very end when each row is divided by its
//! pivot.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{Echelon, SparseRow};

type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators and removes content; the leading entry is made
/// positive. Zero entries are dropped and the result is column-sorted.
pub(crate) fn primitive_integer_row(row: &[(usize, BigRational)]) -> IntRow {
    let mut merged: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (c, v) in row {
        *merged.entry(*c).or_insert_with(BigRational::zero) += v;
    }
    merged.retain(|_, v| !v.is_zero());
    let lcm = merged
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: IntRow = merged
        .into_iter()
        .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let Some(first) = row.first() else {
        return row;
    };
    let mut g = first.1.abs();
    for (_, v) in &row[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.1.is_negative();
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// `a·row − b·other` for sorted sparse integer rows.
fn combine(a: &BigInt, row: &[(usize, BigInt)], b: &BigInt, other: &[(usize, BigInt)]) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let (c, v) = if j >= other.len() || (i < row.len() && row[i].0 < other[j].0) {
            i += 1;
            (row[i - 1].0, a * &row[i - 1].1)
        } else if i >= row.len() || other[j].0 < row[i].0 {
            j += 1;
            (other[j - 1].0, -(b * &other[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (row[i - 1].0, a * &row[i - 1].1 - b * &other[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

struct IntBuilder {
    cols: usize,
    rows: BTreeMap<usize, IntRow>,
    is_pivot: Vec<bool>,
}

impl IntBuilder {
    fn insert(&mut self, row: IntRow) {
        if row.is_empty() || self.rows.len() == self.cols {
            return;
        }
        // Pivot-column entries of the incoming row are never altered by
        // subtracting other (fully reduced) rows, so all coefficients can be
        // read up front and applied with a single common scale factor.
        let involved: Vec<(usize, BigInt)> = row
            .iter()
            .filter(|(c, _)| self.is_pivot[*c])
            .cloned()
            .collect();
        let mut x = row;
        if !involved.is_empty() {
            let scale = involved
                .iter()
                .fold(BigInt::one(), |acc, (p, _)| acc.lcm(&self.rows[p][0].1));
            let mut acc: BTreeMap<usize, BigInt> = x
                .iter()
                .filter(|(c, _)| !self.is_pivot[*c])
                .map(|(c, v)| (*c, v * &scale))
                .collect();
            for (p, b) in &involved {
                let prow = &self.rows[p];
                let factor = b * (&scale / &prow[0].1);
                for (c, w) in &prow[1..] {
                    let e = acc.entry(*c).or_insert_with(BigInt::zero);
                    *e -= &factor * w;
                }
            }
            x = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        let x = make_primitive(x);
        let Some((pivot, lead)) = x.first().cloned() else {
            return;
        };
        for r in self.rows.values_mut() {
            if let Ok(pos) = r.binary_search_by_key(&pivot, |(c, _)| *c) {
                let w = r[pos].1.clone();
                *r = make_primitive(combine(&lead, r, &w, &x));
            }
        }
        self.is_pivot[pivot] = true;
        self.rows.insert(pivot, x);
    }
}

pub(crate) fn rational_echelon(cols: usize, rows: &[SparseRow<BigRational>]) -> Echelon<BigRational> {
    let mut b = IntBuilder {
        cols,
        rows: BTreeMap::new(),
        is_pivot: vec![false; cols],
    };
    for r in rows {
        b.insert(primitive_integer_row(r));
    }
    let pivots: Vec<usize> = b.rows.keys().copied().collect();
    let rows = b
        .rows
        .into_values()
        .map(|r| {
            let lead = r[0].1.clone();
            r.into_iter()
                .map(|(c, v)| (c, BigRational::new(v, lead.clone())))
                .collect()
        })
        .collect();
    Echelon { cols, pivots, rows }
}
