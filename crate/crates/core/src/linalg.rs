//! Exact sparse row reduction.
//!
//! Rows are accumulated fraction-free over the integers (each row kept
//! primitive with a positive leading entry) and only converted to monic
//! rational rows when a reduced echelon form is requested. Pivots are
//! always the leftmost nonzero column.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

/// Sorted by column, no explicit zeros.
pub(crate) type SparseVec = Vec<(usize, Rational)>;

type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators and makes the row primitive with positive lead.
fn to_int_row(v: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, c) in v {
        lcm = lcm.lcm(c.denom());
    }
    let mut row: IntRow =
        v.iter().map(|(i, c)| (*i, c.numer() * (&lcm / c.denom()))).filter(|(_, c)| !c.is_zero()).collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, c) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    let negate = first.1.is_negative();
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a*x - b*y` on sparse integer rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, a * &x[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Semi-echelon basis: every row has a distinct leading column.
#[derive(Clone, Default)]
pub(crate) struct Echelon {
    rows: Vec<IntRow>,
    pivot_of: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading-term reduction; the result is zero iff `row` is in the span.
    fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some((c, lead)) = row.first().cloned() {
            let Some(&p) = self.pivot_of.get(&c) else { break };
            let prow = &self.rows[p];
            let plead = &prow[0].1;
            let g = plead.gcd(&lead);
            row = combine(&(plead / &g), &row, &(&lead / &g), prow);
            make_primitive(&mut row);
        }
        row
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let row = self.reduce(to_int_row(v));
        if row.is_empty() {
            return false;
        }
        self.pivot_of.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    #[cfg(test)]
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(to_int_row(v)).is_empty()
    }

    /// Reduced row echelon form: monic pivots, zero above and below every
    /// pivot, rows sorted by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = self
            .rows
            .into_iter()
            .map(|r| {
                let lead = r[0].1.clone();
                r.into_iter().map(|(i, c)| (i, Rational::new(c, lead.clone()))).collect()
            })
            .collect();
        rows.sort_by_key(|r| r[0].0);
        for s in (0..rows.len()).rev() {
            let pc = rows[s][0].0;
            let (head, tail) = rows.split_at_mut(s);
            let srow = &tail[0];
            for r in head.iter_mut() {
                if let Ok(pos) = r.binary_search_by_key(&pc, |e| e.0) {
                    let f = r[pos].1.clone();
                    *r = axpy(r, &f, srow);
                }
            }
        }
        rows
    }
}

/// `x - f*y`.
pub(crate) fn axpy(x: &SparseVec, f: &Rational, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push(x[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(f * &y[j].1)));
            j += 1;
        } else {
            let v = &x[i].1 - f * &y[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Solves `Σ_j x_j · columns[j] = rhs` over the rationals. Returns one
/// solution (free unknowns set to zero) or `None` if inconsistent.
pub(crate) fn solve(columns: &[SparseVec], rhs: &SparseVec) -> Option<Vec<Rational>> {
    let n = columns.len();
    let mut eqs: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (e, c) in col {
            eqs.entry(*e).or_default().push((j, c.clone()));
        }
    }
    for (e, c) in rhs {
        eqs.entry(*e).or_default().push((n, c.clone()));
    }
    let mut ech = Echelon::new();
    for row in eqs.values() {
        ech.insert(row);
    }
    let mut x = alloc::vec![Rational::zero(); n];
    for row in ech.into_rref() {
        let p = row[0].0;
        if p == n {
            return None;
        }
        if let Some((_, v)) = row.iter().find(|e| e.0 == n) {
            x[p] = v.clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, c)| (i, q(c))).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = Echelon::new();
        a.insert(&sv(&[(0, 2), (1, 4), (2, 2)]));
        a.insert(&sv(&[(1, 1), (2, 3)]));
        assert!(!a.insert(&sv(&[(0, 1), (1, 3), (2, 4)])));
        let mut b = Echelon::new();
        b.insert(&sv(&[(0, 1), (1, 3), (2, 4)]));
        b.insert(&sv(&[(0, 2), (1, 5), (2, 5)]));
        assert_eq!(a.into_rref(), b.into_rref());
    }

    #[test]
    fn rref_shape() {
        let mut a = Echelon::new();
        a.insert(&sv(&[(0, 1), (1, 1), (3, 5)]));
        a.insert(&sv(&[(1, 2), (2, 2)]));
        let r = a.into_rref();
        assert_eq!(r[0], sv(&[(0, 1), (2, -1), (3, 5)]));
        assert_eq!(r[1], sv(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn membership() {
        let mut a = Echelon::new();
        a.insert(&sv(&[(0, 1), (1, 1)]));
        assert!(a.contains(&sv(&[(0, -3), (1, -3)])));
        assert!(a.contains(&Vec::new()));
        assert!(!a.contains(&sv(&[(1, 1)])));
    }

    #[test]
    fn solving() {
        // x0*(1,1) + x1*(0,1) = (2,5)
        let cols = vec![sv(&[(0, 1), (1, 1)]), sv(&[(1, 1)])];
        let x = solve(&cols, &sv(&[(0, 2), (1, 5)])).unwrap();
        assert_eq!(x, vec![q(2), q(3)]);
        let cols = vec![sv(&[(0, 1), (1, 1)])];
        assert!(solve(&cols, &sv(&[(0, 1)])).is_none());
    }
}
