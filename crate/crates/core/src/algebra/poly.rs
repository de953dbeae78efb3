use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::vars::same_space;
use super::{AlgebraError, Monomial, Rational, VariableSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    Standard,
    Weighted,
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by graded-lex order and never hold a
/// zero coefficient, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Poly {
    vars: Arc<VariableSpace>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(vars: &Arc<VariableSpace>) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VariableSpace>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VariableSpace>, c: Rational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn integer(vars: &Arc<VariableSpace>, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(c.into()))
    }

    pub fn var(vars: &Arc<VariableSpace>, index: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), index), Rational::one())
    }

    /// Variable by name. Panics if the name is not in the space.
    pub fn named(vars: &Arc<VariableSpace>, name: &str) -> Self {
        let i = vars.index_of(name).unwrap_or_else(|| panic!("no variable `{name}`"));
        Self::var(vars, i)
    }

    pub fn monomial(vars: &Arc<VariableSpace>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.n_vars(), vars.len(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { vars: vars.clone(), terms }
    }

    pub fn from_terms(vars: &Arc<VariableSpace>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.n_vars(), vars.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Arc<VariableSpace> {
        &self.vars
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

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.vars.len()))
    }

    /// Largest term degree; `None` for the zero polynomial.
    pub fn degree(&self, mode: DegreeMode) -> Option<u32> {
        self.term_degrees(mode).max()
    }

    /// Smallest term degree; `None` for the zero polynomial.
    pub fn order(&self, mode: DegreeMode) -> Option<u32> {
        self.term_degrees(mode).min()
    }

    fn term_degrees(&self, mode: DegreeMode) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(move |m| match mode {
            DegreeMode::Standard => m.degree(),
            DegreeMode::Weighted => m.weighted_degree(self.vars.weights()),
        })
    }

    /// True when every term has the same weighted degree.
    pub fn is_quasihomogeneous(&self) -> bool {
        self.degree(DegreeMode::Weighted) == self.order(DegreeMode::Weighted)
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_space(other)?;
        let mut out = Poly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    fn check_space(&self, other: &Poly) -> Result<(), AlgebraError> {
        if same_space(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch)
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term of standard degree above `d`.
    pub fn truncate(&self, d: u32) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Terms of standard degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        self.filter_terms(|m| m.degree() == d)
    }

    pub(crate) fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn partial_derivative(&self, index: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if let Some(lower) = m.lower(index) {
                out.add_term(lower, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn contains_var(&self, index: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(index) > 0)
    }

    /// Composition: every variable of `self` that occurs is replaced by its
    /// image under `assignment`. All images must share one variable space,
    /// which becomes the space of the result.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<usize, Poly>,
        target: &Arc<VariableSpace>,
    ) -> Result<Poly, AlgebraError> {
        for img in assignment.values() {
            if !same_space(img.vars(), target) {
                return Err(AlgebraError::VariableMismatch);
            }
        }
        let mut powers: BTreeMap<usize, Vec<Poly>> = BTreeMap::new();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = assignment
                    .get(&i)
                    .ok_or_else(|| AlgebraError::UnassignedVariable(self.vars.name(i).to_string()))?;
                let cache = powers.entry(i).or_insert_with(|| alloc::vec![Poly::one(target)]);
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * img;
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// [`substitute`](Self::substitute) with one image per variable.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly, AlgebraError> {
        if images.len() != self.vars.len() {
            return Err(AlgebraError::LengthMismatch { expected: self.vars.len(), found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.vars().clone(),
            None => return Ok(self.clone()),
        };
        let map = images.iter().cloned().enumerate().collect();
        self.substitute(&map, &target)
    }

    /// Same terms reinterpreted in a space with identical arity.
    pub fn with_vars(&self, vars: &Arc<VariableSpace>) -> Poly {
        assert_eq!(vars.len(), self.vars.len());
        Poly { vars: vars.clone(), terms: self.terms.clone() }
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Canonical text form: terms in descending graded-lex order,
/// e.g. `-5*U1*V2 - 3*W2`. Parses back to the same polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(alloc::format!("{}^{}", self.vars.name(i), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    /// Panics on mismatched variable spaces; see [`Poly::checked_add`].
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs).expect("poly add: variable spaces differ")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.checked_sub(rhs).expect("poly sub: variable spaces differ")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs).expect("poly mul: variable spaces differ")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
