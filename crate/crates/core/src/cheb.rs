//! Sparse polynomials in the Chebyshev basis `{T_0, T_1, ...}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::Result;
use crate::rational::{half, int, Rational};
use crate::scalar::{cheb_values, number_field, ChebKind, FieldElement, NumberField, Scalar};

/// `Σ c_n T_n` with no stored zero coefficients.
#[derive(Clone, PartialEq)]
pub struct ChebPoly<S: Scalar> {
    field: S::Field,
    coeffs: BTreeMap<usize, S>,
}

/// A polynomial with rational coefficients.
pub type QPoly = ChebPoly<Rational>;
/// A polynomial with coefficients in ℚ(cos(π/k)).
pub type FieldPoly = ChebPoly<FieldElement>;

impl<S: Scalar> ChebPoly<S> {
    pub fn zero_in(field: &S::Field) -> Self {
        ChebPoly {
            field: field.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// `T_n` itself.
    pub fn t_in(field: &S::Field, n: usize) -> Self {
        Self::from_terms_in(field, [(n, S::from_rational_in(field, &int(1)))])
    }

    pub fn constant_in(field: &S::Field, c: S) -> Self {
        Self::from_terms_in(field, [(0, c)])
    }

    /// Sums the given `(degree, coefficient)` terms; repeated degrees add up.
    pub fn from_terms_in(field: &S::Field, terms: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut p = Self::zero_in(field);
        for (n, c) in terms {
            p.add_term(n, &c);
        }
        p
    }

    pub fn field(&self) -> &S::Field {
        &self.field
    }

    pub fn add_term(&mut self, n: usize, c: &S) {
        if S::is_zero(c) {
            return;
        }
        match self.coeffs.get_mut(&n) {
            Some(existing) => {
                let sum = S::add(existing, c);
                if S::is_zero(&sum) {
                    self.coeffs.remove(&n);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(n, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, n: usize) -> S {
        self.coeffs
            .get(&n)
            .cloned()
            .unwrap_or_else(|| S::zero_in(&self.field))
    }

    pub fn get(&self, n: usize) -> Option<&S> {
        self.coeffs.get(&n)
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &S)> + '_ {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        S::compatible(&self.field, &other.field)?;
        let mut out = self.clone();
        for (n, c) in other.terms() {
            out.add_term(n, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        S::compatible(&self.field, &other.field)?;
        let mut out = self.clone();
        for (n, c) in other.terms() {
            out.add_term(n, &S::neg(c));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms_in(&self.field, self.terms().map(|(n, a)| (n, S::mul(a, c))))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::from_terms_in(&self.field, self.terms().map(|(n, a)| (n, S::scale(a, r))))
    }

    /// Product via `T_m T_n = ½T_{m+n} + ½T_{|m-n|}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        S::compatible(&self.field, &other.field)?;
        let h = half();
        let mut out = Self::zero_in(&self.field);
        for (m, a) in self.terms() {
            for (n, b) in other.terms() {
                let c = S::scale(&S::mul(a, b), &h);
                out.add_term(m + n, &c);
                out.add_term(m.abs_diff(n), &c);
            }
        }
        Ok(out)
    }

    /// `x·P`, using `x T_0 = T_1` and `x T_n = ½T_{n+1} + ½T_{n-1}`.
    pub fn mul_x(&self) -> Self {
        let h = half();
        let mut out = Self::zero_in(&self.field);
        for (n, c) in self.terms() {
            if n == 0 {
                out.add_term(1, c);
            } else {
                let hc = S::scale(c, &h);
                out.add_term(n + 1, &hc);
                out.add_term(n - 1, &hc);
            }
        }
        out
    }

    /// `P(T_k(x))`, using `T_n ∘ T_k = T_{nk}`.
    pub fn compose_t(&self, k: usize) -> Self {
        Self::from_terms_in(&self.field, self.terms().map(|(n, c)| (n * k, c.clone())))
    }

    /// Value at `x = 1`, the coefficient sum.
    pub fn eval_one(&self) -> S {
        self.terms()
            .fold(S::zero_in(&self.field), |acc, (_, c)| S::add(&acc, c))
    }

    /// Value at `x = |cos(π/k)|`.
    pub fn eval_at_abs_cos(&self, k: usize) -> Result<FieldElement> {
        let field = number_field(k)?;
        let values = cheb_values(ChebKind::T, self.degree().unwrap_or(0), k)?;
        let mut acc = FieldElement::zero(&field);
        for (n, c) in self.terms() {
            acc = &acc + &(&S::to_field(c, &field)? * &values[n]);
        }
        Ok(acc)
    }

    /// Embeds the coefficients into ℚ(cos(π/k)).
    pub fn to_field(&self, k: usize) -> Result<FieldPoly> {
        let field = number_field(k)?;
        self.to_number_field(&field)
    }

    pub fn to_number_field(&self, field: &Arc<NumberField>) -> Result<FieldPoly> {
        let mut out = FieldPoly::zero_in(field);
        for (n, c) in self.terms() {
            out.add_term(n, &S::to_field(c, field)?);
        }
        Ok(out)
    }

    pub fn field_label(&self) -> String {
        S::field_label(&self.field)
    }
}

impl QPoly {
    pub fn zero() -> Self {
        Self::zero_in(&())
    }

    pub fn one() -> Self {
        Self::t(0)
    }

    pub fn t(n: usize) -> Self {
        Self::t_in(&(), n)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        Self::from_terms_in(&(), terms)
    }

    /// `1 - x² = ½T_0 - ½T_2`.
    pub fn one_minus_x_squared() -> Self {
        Self::from_terms([(0, half()), (2, -half())])
    }
}

/// `U_n` in the T-basis: `U_{-1} = 0`, `U_n = 2(T_n + T_{n-2} + ...)` with the
/// `T_0` term (even `n`) carrying coefficient 1.
pub fn u_in_t(n: i64) -> QPoly {
    assert!(n >= -1, "U_{n} is undefined");
    if n < 0 {
        return QPoly::zero();
    }
    let n = n as usize;
    QPoly::from_terms(
        (0..=n / 2)
            .map(|j| n - 2 * j)
            .map(|d| (d, if d == 0 { int(1) } else { int(2) })),
    )
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<S: Scalar> $trait<&ChebPoly<S>> for &ChebPoly<S> {
            type Output = ChebPoly<S>;
            fn $method(self, rhs: &ChebPoly<S>) -> ChebPoly<S> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<S: Scalar> $trait<ChebPoly<S>> for ChebPoly<S> {
            type Output = ChebPoly<S>;
            fn $method(self, rhs: ChebPoly<S>) -> ChebPoly<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, checked_add);
forward_poly_binop!(Sub, sub, checked_sub);

impl<S: Scalar> std::ops::Mul<&ChebPoly<S>> for &ChebPoly<S> {
    type Output = ChebPoly<S>;
    fn mul(self, rhs: &ChebPoly<S>) -> ChebPoly<S> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Neg for &ChebPoly<S> {
    type Output = ChebPoly<S>;
    fn neg(self) -> ChebPoly<S> {
        ChebPoly::from_terms_in(&self.field, self.terms().map(|(n, c)| (n, S::neg(c))))
    }
}

/// `c5*T5 + c3*T3 + ...` in descending degree; `0` for the zero polynomial.
impl<S: Scalar> fmt::Display for ChebPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, c)) in self.terms().rev().enumerate() {
            let text = c.to_string();
            let compound = text.trim_start_matches('-').contains(' ');
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            let body = if compound { format!("({body})") } else { body };
            match (i, negative) {
                (0, true) => write!(f, "-{body}*T{n}")?,
                (0, false) => write!(f, "{body}*T{n}")?,
                (_, true) => write!(f, " - {body}*T{n}")?,
                (_, false) => write!(f, " + {body}*T{n}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for ChebPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChebPoly[{}]({self})", self.field_label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rational::rat;

    #[test]
    fn linearization_examples() {
        assert_eq!(
            &QPoly::t(1) * &QPoly::t(1),
            QPoly::from_terms([(2, half()), (0, half())])
        );
        assert_eq!(
            &QPoly::t(2) * &QPoly::t(3),
            QPoly::from_terms([(5, half()), (1, half())])
        );
        let p = QPoly::from_terms([(4, rat(2, 3)), (1, rat(-1, 5))]);
        assert_eq!(&p * &QPoly::one(), p);
    }

    #[test]
    fn mul_x_examples() {
        assert_eq!(QPoly::t(0).mul_x(), QPoly::t(1));
        assert_eq!(
            QPoly::t(1).mul_x(),
            QPoly::from_terms([(2, half()), (0, half())])
        );
        assert!(QPoly::zero().mul_x().is_zero());
    }

    #[test]
    fn u_in_t_examples() {
        assert!(u_in_t(-1).is_zero());
        assert_eq!(u_in_t(0), QPoly::one());
        assert_eq!(u_in_t(1), QPoly::from_terms([(1, int(2))]));
        assert_eq!(u_in_t(2), QPoly::from_terms([(2, int(2)), (0, int(1))]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(QPoly::t(5).eval_one(), int(1));
        assert_eq!(QPoly::zero().eval_one(), int(0));
        let u2 = u_in_t(2);
        assert_eq!(u2.eval_at_abs_cos(2).unwrap().as_rational(), Some(&int(-1)));
    }

    #[test]
    fn field_mismatch_is_detected() {
        let a = QPoly::t(1).to_field(4).unwrap();
        let b = QPoly::t(1).to_field(5).unwrap();
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn display() {
        let p = QPoly::from_terms([(5, half()), (3, rat(1, 6)), (1, rat(1, 3))]);
        assert_eq!(p.to_string(), "1/2*T5 + 1/6*T3 + 1/3*T1");
        let q = QPoly::from_terms([(2, int(-1)), (0, rat(1, 3))]);
        assert_eq!(q.to_string(), "-1*T2 + 1/3*T0");
        assert_eq!(QPoly::zero().to_string(), "0");
        let f = number_field(5).unwrap();
        let t = FieldElement::theta(&f);
        let fp = FieldPoly::from_terms_in(&f, [(1, &t + &FieldElement::one(&f))]);
        assert_eq!(fp.to_string(), "(1 + theta)*T1");
    }

    #[test]
    fn compose_maps_degrees() {
        let p = QPoly::from_terms([(2, rat(2, 3)), (0, rat(1, 3))]);
        assert_eq!(
            p.compose_t(3),
            QPoly::from_terms([(6, rat(2, 3)), (0, rat(1, 3))])
        );
    }

    #[test]
    fn chebyshev_identities() {
        // (2x² - 2) U_{n-1} = T_{n+1} - T_{n-1}
        let two_x2_minus_2 = QPoly::from_terms([(2, int(1)), (0, int(-1))]);
        for n in 1..=40usize {
            let lhs = &two_x2_minus_2 * &u_in_t(n as i64 - 1);
            assert_eq!(lhs, &QPoly::t(n + 1) - &QPoly::t(n - 1), "n={n}");
        }
        for n in 0..=20i64 {
            for m in 0..=20i64 {
                let lhs = (&QPoly::t(m as usize) * &u_in_t(n - 1)).scale_rational(&int(2));
                let rhs = if m <= n {
                    &u_in_t(m + n - 1) + &u_in_t(n - m - 1)
                } else {
                    &u_in_t(m + n - 1) - &u_in_t(m - n - 1)
                };
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }
}
