//! The real number field ℚ(cos(π/k)) with elements stored as coordinate
//! vectors over the power basis of `θ = 2cos(π/k)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::minpoly::{minimal_polynomial, MinPoly};
use super::qpoly;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug)]
pub struct NumberField {
    k: usize,
    minpoly: Arc<MinPoly>,
    modulus: Vec<Rational>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn minimal_polynomial(&self) -> &MinPoly {
        &self.minpoly
    }

    /// `"Q(cos(pi/k))"`
    pub fn label(&self) -> String {
        field_label(self.k)
    }

    /// `"2cos(pi/k)"`
    pub fn theta_label(&self) -> String {
        theta_label(self.k)
    }

    /// Reduces an arbitrary coordinate polynomial modulo the minimal polynomial.
    fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        qpoly::trim(&mut poly);
        if poly.len() > d {
            let (_, rem) = qpoly::div_rem(&poly, &self.modulus);
            poly = rem;
        }
        poly.resize(d, Rational::zero());
        poly
    }
}

pub fn field_label(k: usize) -> String {
    format!("Q(cos(pi/{k}))")
}

pub fn theta_label(k: usize) -> String {
    format!("2cos(pi/{k})")
}

/// The shared field ℚ(cos(π/k)).
pub fn number_field(k: usize) -> Result<Arc<NumberField>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<NumberField>>>> = OnceLock::new();
    let minpoly = minimal_polynomial(k)?;
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap();
    let field = guard.entry(k).or_insert_with(|| {
        let modulus = minpoly
            .coefficients()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Arc::new(NumberField {
            k,
            minpoly,
            modulus,
        })
    });
    Ok(field.clone())
}

/// An exact element of ℚ(cos(π/k)).
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.k == other.field.k && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn zero(field: &Arc<NumberField>) -> Self {
        FieldElement {
            field: field.clone(),
            coords: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_rational(field, &Rational::one())
    }

    pub fn from_rational(field: &Arc<NumberField>, r: &Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = r.clone();
        FieldElement {
            field: field.clone(),
            coords,
        }
    }

    /// Builds `Σ coords[i] θ^i`, reducing if more coordinates than the degree are given.
    pub fn from_coords(field: &Arc<NumberField>, coords: Vec<Rational>) -> Self {
        FieldElement {
            field: field.clone(),
            coords: field.reduce(coords),
        }
    }

    /// The generator `θ = 2cos(π/k)`.
    pub fn theta(field: &Arc<NumberField>) -> Self {
        Self::from_coords(field, vec![Rational::zero(), Rational::one()])
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.field.k
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coords[0])
    }

    /// Floating-point value, for display only.
    pub fn to_f64(&self) -> f64 {
        let theta = 2.0 * (std::f64::consts::PI / self.field.k as f64).cos();
        self.coords
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * theta + crate::rational::to_f64(c))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field.k == other.field.k {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.label(),
                right: other.field.label(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.field.degree() == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &other.coords[0]],
            });
        }
        let product = qpoly::mul(&self.coords, &other.coords);
        Ok(FieldElement {
            field: self.field.clone(),
            coords: self.field.reduce(product),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// minimal polynomial.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coords: vec![self.coords[0].recip()],
            });
        }
        let (gcd, s) = qpoly::xgcd_left(&self.coords, &self.field.modulus);
        if gcd != [Rational::one()] {
            return Err(Error::Internal(format!(
                "minimal polynomial of 2cos(pi/{}) is not coprime to a nonzero element",
                self.field.k
            )));
        }
        Ok(FieldElement::from_coords(&self.field, s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement(k={}, {})", self.field.k, self)
    }
}

/// `a + b*theta + c*theta^2`, zero terms omitted.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match power {
                0 => format_rational(&c.abs()),
                _ => {
                    let base = if power == 1 {
                        "theta".to_string()
                    } else {
                        format!("theta^{power}")
                    };
                    if c.abs().is_one() {
                        base
                    } else {
                        format!("{}*{base}", format_rational(&c.abs()))
                    }
                }
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct FieldElementRepr {
    coords: Vec<String>,
    theta: String,
}

/// Parses `"2cos(pi/k)"` back into `k`.
pub fn parse_theta_label(s: &str) -> Result<usize> {
    s.strip_prefix("2cos(pi/")
        .and_then(|rest| rest.strip_suffix(')'))
        .and_then(|k| k.parse().ok())
        .filter(|&k| k > 0)
        .ok_or_else(|| Error::Parse(format!("unrecognized theta label {s:?}")))
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldElementRepr {
            coords: self.coords.iter().map(format_rational).collect(),
            theta: self.field.theta_label(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FieldElementRepr::deserialize(d)?;
        let k = parse_theta_label(&repr.theta).map_err(de::Error::custom)?;
        let field = number_field(k).map_err(de::Error::custom)?;
        if repr.coords.len() != field.degree() {
            return Err(de::Error::custom(format!(
                "expected {} coordinates for {}, found {}",
                field.degree(),
                field.label(),
                repr.coords.len()
            )));
        }
        let coords = repr
            .coords
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Ok(FieldElement { field, coords })
    }
}
