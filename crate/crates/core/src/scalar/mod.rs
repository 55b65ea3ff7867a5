//! Exact scalars: ℚ and the real fields ℚ(cos(π/k)).
//!
//! Every coefficient in the crate is either a [`Rational`] or a
//! [`FieldElement`]. Rationals embed into each field as constants, and the
//! [`Scalar`] trait lets polynomial code run over both.

mod field;
mod minpoly;
pub(crate) mod qpoly;

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

pub use field::{
    field_label, number_field, parse_theta_label, theta_label, FieldElement, NumberField,
};
pub use minpoly::{cyclotomic, minimal_polynomial, MinPoly};

use crate::error::{Error, Result};
use crate::rational::{half, Rational};

/// Coefficient domain for [`crate::ChebPoly`].
///
/// All operations are associated functions so they never collide with the
/// operator traits already implemented on the concrete types.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Identifies the field the value lives in. `()` for ℚ.
    type Field: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn field_of(x: &Self) -> Self::Field;
    fn zero_in(field: &Self::Field) -> Self;
    fn from_rational_in(field: &Self::Field, r: &Rational) -> Self;
    fn is_zero(x: &Self) -> bool;
    fn add(a: &Self, b: &Self) -> Self;
    fn sub(a: &Self, b: &Self) -> Self;
    fn mul(a: &Self, b: &Self) -> Self;
    fn neg(a: &Self) -> Self;
    fn scale(a: &Self, r: &Rational) -> Self;
    fn checked_div(a: &Self, b: &Self) -> Result<Self>;
    fn compatible(a: &Self::Field, b: &Self::Field) -> Result<()>;
    /// Embeds the value into ℚ(cos(π/k)).
    fn to_field(x: &Self, field: &Arc<NumberField>) -> Result<FieldElement>;
    fn field_label(field: &Self::Field) -> String;
}

impl Scalar for Rational {
    type Field = ();

    fn field_of(_: &Self) -> Self::Field {}
    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn from_rational_in(_: &(), r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(x: &Self) -> bool {
        Zero::is_zero(x)
    }
    fn add(a: &Self, b: &Self) -> Self {
        a + b
    }
    fn sub(a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(a: &Self) -> Self {
        -a
    }
    fn scale(a: &Self, r: &Rational) -> Self {
        a * r
    }
    fn checked_div(a: &Self, b: &Self) -> Result<Self> {
        if Zero::is_zero(b) {
            Err(Error::DivisionByZero)
        } else {
            Ok(a / b)
        }
    }
    fn compatible(_: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn to_field(x: &Self, field: &Arc<NumberField>) -> Result<FieldElement> {
        Ok(FieldElement::from_rational(field, x))
    }
    fn field_label(_: &()) -> String {
        "Q".to_string()
    }
}

impl Scalar for FieldElement {
    type Field = Arc<NumberField>;

    fn field_of(x: &Self) -> Self::Field {
        x.field().clone()
    }
    fn zero_in(field: &Self::Field) -> Self {
        FieldElement::zero(field)
    }
    fn from_rational_in(field: &Self::Field, r: &Rational) -> Self {
        FieldElement::from_rational(field, r)
    }
    fn is_zero(x: &Self) -> bool {
        x.is_zero()
    }
    fn add(a: &Self, b: &Self) -> Self {
        a + b
    }
    fn sub(a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(a: &Self) -> Self {
        -a
    }
    fn scale(a: &Self, r: &Rational) -> Self {
        a.scale(r)
    }
    fn checked_div(a: &Self, b: &Self) -> Result<Self> {
        a.checked_div(b)
    }
    fn compatible(a: &Self::Field, b: &Self::Field) -> Result<()> {
        if a.k() == b.k() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: a.label(),
                right: b.label(),
            })
        }
    }
    fn to_field(x: &Self, field: &Arc<NumberField>) -> Result<FieldElement> {
        Self::compatible(x.field(), field)?;
        Ok(x.clone())
    }
    fn field_label(field: &Self::Field) -> String {
        field.label()
    }
}

/// Chebyshev polynomials of the first (`T`) and second (`U`) kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChebKind {
    T,
    U,
}

/// `|cos(π/k)|` inside ℚ(cos(π/k)).
pub fn abs_cos(k: usize) -> Result<FieldElement> {
    let field = number_field(k)?;
    let theta = FieldElement::theta(&field);
    let c = theta.scale(&half());
    Ok(if k == 1 { -c } else { c })
}

/// `sin²(π/k) = 1 - cos²(π/k)`.
pub fn sin_squared(k: usize) -> Result<FieldElement> {
    let c = abs_cos(k)?;
    Ok(&FieldElement::one(c.field()) - &(&c * &c))
}

/// `T_n(|cos(π/k)|)` or `U_n(|cos(π/k)|)`, with `U_{-1} = 0`.
pub fn cheb_value(kind: ChebKind, n: i64, k: usize) -> Result<FieldElement> {
    let c = abs_cos(k)?;
    let field = c.field().clone();
    if n < 0 {
        return match (kind, n) {
            (ChebKind::U, -1) => Ok(FieldElement::zero(&field)),
            _ => Err(Error::InvalidParameter(format!(
                "Chebyshev index {n} is out of range for {kind:?}"
            ))),
        };
    }
    let two_c = c.scale(&Rational::from_integer(2.into()));
    let mut prev = FieldElement::one(&field);
    let mut cur = match kind {
        ChebKind::T => c.clone(),
        ChebKind::U => two_c.clone(),
    };
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        let next = &(&two_c * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `T_0..=T_n` (or `U_0..=U_n`) at `|cos(π/k)|`, computed in one pass.
pub fn cheb_values(kind: ChebKind, n: usize, k: usize) -> Result<Vec<FieldElement>> {
    let c = abs_cos(k)?;
    let field = c.field().clone();
    let two_c = c.scale(&Rational::from_integer(2.into()));
    let mut out = Vec::with_capacity(n + 1);
    out.push(FieldElement::one(&field));
    if n >= 1 {
        out.push(match kind {
            ChebKind::T => c.clone(),
            ChebKind::U => two_c.clone(),
        });
    }
    for i in 2..=n {
        let next = &(&two_c * &out[i - 1]) - &out[i - 2];
        out.push(next);
    }
    Ok(out)
}
