use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponent vector indexed by a [`VariableSpace`](super::VariableSpace).
///
/// Ordered by graded lexicographic order: total degree first, then the
/// exponent of the earliest variable, so `x1 > x2 > ... > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn from_exponents(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    /// The single variable `x_index`.
    pub fn var(n_vars: usize, index: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(&e, &w)| u32::from(e) * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / x_index`, or `None` when the exponent is zero.
    pub fn lower(&self, index: usize) -> Option<Monomial> {
        if self.0[index] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[index] -= 1;
        Some(Monomial(e))
    }

    /// All monomials in `n_vars` variables of exactly degree `d`,
    /// in descending graded-lex order.
    pub fn all_of_degree(n_vars: usize, d: u32) -> Vec<Monomial> {
        fn rec(pos: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if pos + 1 == cur.len() {
                cur[pos] = left as u16;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e as u16;
                rec(pos + 1, left - e, cur, out);
            }
            cur[pos] = 0;
        }
        if n_vars == 0 {
            return if d == 0 { vec![Monomial(Vec::new())] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(0, d, &mut vec![0; n_vars], &mut out);
        out
    }

    /// All monomials with the given weighted degree.
    pub fn all_of_weighted_degree(weights: &[u32], d: u32) -> Vec<Monomial> {
        fn rec(pos: usize, left: u32, w: &[u32], cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if pos == w.len() {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            let max = left / w[pos];
            for e in (0..=max).rev() {
                cur[pos] = e as u16;
                rec(pos + 1, left - e * w[pos], w, cur, out);
            }
            cur[pos] = 0;
        }
        let mut out = Vec::new();
        rec(0, d, weights, &mut vec![0; weights.len()], &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
