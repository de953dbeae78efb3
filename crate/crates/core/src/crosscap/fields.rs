//! Closed forms of the Euler field and the three families `ξ_j^f`.
//!
//! Components are ordered `(A_1..A_{k-2}, B_1..B_{k-1}, C_1, C_2)`, matching
//! the target coordinates `(U, V, W_1, W_2)`. Out-of-range symbols follow
//! the conventions `U_{k-1} = V_k = 0`, `U_k = 1`, and `U_r = V_r = 0` for
//! `r ≤ 0` or `r > k`.

use alloc::vec::Vec;

use super::{CrossCapContext, CrossCapError, Family, LiftableField};
use crate::algebra::{Poly, PolyVec, Rational};

struct Symbols<'a> {
    ctx: &'a CrossCapContext,
}

impl Symbols<'_> {
    fn k(&self) -> i64 {
        self.ctx.k as i64
    }

    fn u(&self, r: i64) -> Poly {
        let vars = self.ctx.target_vars();
        if r == self.k() {
            return Poly::one(vars);
        }
        match usize::try_from(r).ok().and_then(|r| self.ctx.u_index(r)) {
            Some(i) => Poly::var(vars, i),
            None => Poly::zero(vars),
        }
    }

    fn v(&self, r: i64) -> Poly {
        let vars = self.ctx.target_vars();
        match usize::try_from(r).ok().and_then(|r| self.ctx.v_index(r)) {
            Some(i) => Poly::var(vars, i),
            None => Poly::zero(vars),
        }
    }

    fn w1(&self) -> Poly {
        Poly::var(self.ctx.target_vars(), self.ctx.w_index(1).unwrap())
    }

    fn w2(&self) -> Poly {
        Poly::var(self.ctx.target_vars(), self.ctx.w_index(2).unwrap())
    }

    fn c(&self, n: i64) -> Poly {
        Poly::integer(self.ctx.target_vars(), n)
    }

    fn zero(&self) -> Poly {
        Poly::zero(self.ctx.target_vars())
    }
}

/// `Σ_{r=lo}^{hi} term(r)`, zero when the range is empty.
fn sum(s: &Symbols, lo: i64, hi: i64, term: impl Fn(i64) -> Poly) -> Poly {
    (lo..=hi).fold(s.zero(), |acc, r| &acc + &term(r))
}

/// `((k-1)U_1, …, 2U_{k-2}, (k-1)V_1, …, V_{k-1}, kW_1, kW_2)`.
pub fn euler_field(ctx: &CrossCapContext) -> PolyVec {
    let vars = ctx.target_vars();
    let comps =
        (0..vars.len()).map(|i| Poly::var(vars, i).scale(&Rational::from_integer(vars.weight(i).into()))).collect();
    PolyVec::new(vars, comps).expect("same space")
}

fn first(s: &Symbols, j: i64) -> Vec<Poly> {
    let k = s.k();
    let mut out = Vec::new();
    for i in 1..=k - 2 {
        out.push(&s.c((k - i) * (k - j)) * &(&s.u(i) * &s.u(j)));
    }
    for i in 1..=k - 1 {
        let a = sum(s, 1, i - 1, |r| &s.u(i + j - r) * &s.v(r));
        let b = sum(s, 1, i, |r| &s.u(r) * &s.v(i + j - r));
        let mut e = &(&s.c(k) * &a) - &(&s.c(k) * &b);
        e = &e - &(&s.c((i - 1) * (k - j)) * &(&s.u(j) * &s.v(i)));
        e = &e + &(&s.c(k) * &(&s.v(i + j) * &s.w1()));
        e = &e - &(&s.c(k) * &(&s.u(i + j) * &s.w2()));
        out.push(e);
    }
    out.push(&s.c(k * (k - j)) * &(&s.u(j) * &s.w1()));
    out.push(&(&s.c(-k) * &(&s.v(j) * &s.w1())) + &(&s.c(k - j) * &(&s.u(j) * &s.w2())));
    out
}

fn second(s: &Symbols, j: i64) -> Vec<Poly> {
    let k = s.k();
    let mut out = Vec::new();
    for i in 1..=k - 2 {
        let n = k + i - j + 1;
        let mut e = &s.c(-k * n) * &(&s.u(n) * &s.w1());
        e = &e + &(&s.c(k) * &sum(s, 1, i, |r| &s.c(k + i - j - 2 * r + 1) * &(&s.u(r) * &s.u(n - r))));
        e = &e - &(&s.c(j * (i + 1)) * &(&s.u(i + 1) * &s.u(k - j)));
        out.push(e);
    }
    for i in 1..=k - 1 {
        let n = k + i - j + 1;
        let mut e = &s.c(-k * n) * &(&s.v(n) * &s.w1());
        e = &e + &(&s.c(k) * &sum(s, 1, i, |r| &s.c(n - r) * &(&s.u(r) * &s.v(n - r))));
        e = &e - &(&s.c(k) * &sum(s, 1, i, |r| &s.c(r) * &(&s.u(n - r) * &s.v(r))));
        e = &e - &(&s.c(j * (i + 1)) * &(&s.u(k - j) * &s.v(i + 1)));
        out.push(e);
    }
    let n = k - j + 1;
    out.push(&(&s.c(k * n) * &(&s.u(n) * &s.w1())) + &(&s.c(j) * &(&s.u(1) * &s.u(k - j))));
    out.push(&(&s.c(k * n) * &(&s.v(n) * &s.w1())) + &(&s.c(j) * &(&s.v(1) * &s.u(k - j))));
    out
}

fn third(s: &Symbols, j: i64) -> Vec<Poly> {
    let k = s.k();
    let mut out = Vec::new();
    for i in 1..=k - 2 {
        let n = k + i - j + 1;
        let mut e = &s.c(-k * n) * &(&s.u(n) * &s.w2());
        e = &e + &(&s.c(k) * &sum(s, 1, i, |r| &s.c(n - r) * &(&s.u(n - r) * &s.v(r))));
        e = &e - &(&s.c(k) * &sum(s, 1, i, |r| &s.c(r) * &(&s.u(r) * &s.v(n - r))));
        e = &e - &(&s.c(k * (i + 1)) * &(&s.u(i + 1) * &s.v(k - j)));
        out.push(e);
    }
    for i in 1..=k - 1 {
        let n = k + i - j + 1;
        let mut e = &s.c(-k * n) * &(&s.v(n) * &s.w2());
        e = &e + &(&s.c(k) * &sum(s, 1, i, |r| &s.c(k + i - j - 2 * r + 1) * &(&s.v(r) * &s.v(n - r))));
        e = &e - &(&s.c(k * (i + 1)) * &(&s.v(i + 1) * &s.v(k - j)));
        out.push(e);
    }
    let n = k - j + 1;
    out.push(&(&s.c(k * n) * &(&s.u(n) * &s.w2())) + &(&s.c(k) * &(&s.u(1) * &s.v(k - j))));
    out.push(&(&s.c(k * n) * &(&s.v(n) * &s.w2())) + &(&s.c(k) * &(&s.v(1) * &s.v(k - j))));
    out
}

/// `ξ_j^f` for `f ∈ {1, 2, 3}` and `1 ≤ j ≤ k-1`.
pub fn family_field(ctx: &CrossCapContext, f: u8, j: usize) -> Result<LiftableField, CrossCapError> {
    let k = ctx.k();
    let family =
        Family::from_number(f).filter(|_| (1..k).contains(&j)).ok_or(CrossCapError::FieldIndex { family: f, j, k })?;
    let s = Symbols { ctx };
    let comps = match family {
        Family::First => first(&s, j as i64),
        Family::Second => second(&s, j as i64),
        Family::Third => third(&s, j as i64),
        Family::Euler => unreachable!(),
    };
    Ok(LiftableField { family, j: Some(j), components: PolyVec::new(ctx.target_vars(), comps).expect("same space") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polyvec, DegreeMode};

    fn field(k: usize, f: u8, j: usize) -> (CrossCapContext, PolyVec) {
        let ctx = CrossCapContext::new(k).unwrap();
        let v = family_field(&ctx, f, j).unwrap().components;
        (ctx, v)
    }

    #[test]
    fn euler_three() {
        let ctx = CrossCapContext::new(3).unwrap();
        let e = parse_polyvec("2*U1; 2*V1; V2; 3*W1; 3*W2", ctx.target_vars()).unwrap();
        assert_eq!(ctx.euler().components, e);
    }

    // Expected values below come from a separate sympy transcription of the
    // same closed forms, cross-checked for liftability over φ_3.
    #[test]
    fn first_family_k3() {
        let (ctx, v) = field(3, 1, 1);
        let e = parse_polyvec(
            "4*U1^2; -3*U1*V1 + 3*V2*W1; -5*U1*V2 - 3*W2; 6*U1*W1; -3*V1*W1 + 2*U1*W2",
            ctx.target_vars(),
        )
        .unwrap();
        assert_eq!(v, e);
        let (ctx, v) = field(3, 1, 2);
        let e = parse_polyvec("0; -3*U1*V2 - 3*W2; 3*V1; 0; -3*V2*W1", ctx.target_vars()).unwrap();
        assert_eq!(v, e);
    }

    #[test]
    fn second_and_third_families_k3() {
        let cases = [
            (2, 1, "6*U1; -3*V1; -6*V2; 9*W1; 0"),
            (2, 2, "-9*W1; 2*U1*V2; -3*V1; 2*U1^2; 2*U1*V1 + 6*V2*W1"),
            (3, 1, "9*V1; -6*V2^2; 0; 3*U1*V2 + 9*W2; 3*V1*V2"),
            (3, 2, "-3*U1*V2 - 9*W2; -3*V1*V2; 0; 3*U1*V1; 3*V1^2 + 6*V2*W2"),
        ];
        for (f, j, text) in cases {
            let (ctx, v) = field(3, f, j);
            assert_eq!(v, parse_polyvec(text, ctx.target_vars()).unwrap(), "ξ_{j}^{f}");
        }
    }

    #[test]
    fn index_errors() {
        let ctx = CrossCapContext::new(3).unwrap();
        assert!(family_field(&ctx, 4, 1).is_err());
        assert!(family_field(&ctx, 1, 0).is_err());
        assert!(family_field(&ctx, 1, 3).is_err());
    }

    #[test]
    fn fields_vanish_and_are_at_most_quadratic() {
        for k in 2..=6 {
            let ctx = CrossCapContext::new(k).unwrap();
            for f in ctx.fields() {
                let v = &f.components;
                assert!(v.vanishes_at_origin(), "{}", f.label());
                assert!(v.degree().unwrap() <= 2, "{}", f.label());
            }
        }
    }

    #[test]
    fn quasihomogeneous_with_constant_shift() {
        for k in 2..=6 {
            let ctx = CrossCapContext::new(k).unwrap();
            let w = ctx.target_vars().weights();
            for f in ctx.fields() {
                let mut shifts = alloc::collections::BTreeSet::new();
                for (b, c) in f.components.components().iter().enumerate() {
                    assert!(c.is_quasihomogeneous(), "{} component {b}", f.label());
                    if let Some(d) = c.degree(DegreeMode::Weighted) {
                        shifts.insert(i64::from(d) - i64::from(w[b]));
                    }
                }
                assert_eq!(shifts.len(), 1, "{} shifts {:?}", f.label(), shifts);
                let shift = *shifts.iter().next().unwrap();
                // family 1 shifts by k - j, families 2 and 3 by j - 1
                let expect = match (f.family, f.j) {
                    (Family::Euler, _) => 0,
                    (Family::First, Some(j)) => (k - j) as i64,
                    (_, Some(j)) => j as i64 - 1,
                    _ => unreachable!(),
                };
                assert_eq!(shift, expect, "{}", f.label());
            }
        }
    }
}
