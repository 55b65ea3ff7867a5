//! The polynomial sequence of a family: `P_n` in the T-basis, the weights
//! `h(n)`, kernel polynomials `P_n*`, and expansion of arbitrary polynomials
//! in the basis `{P_0, P_1, ...}`.
//!
//! `P_n` and `h(n)` are memoized per family fingerprint; cached prefixes only
//! grow, so concurrent readers always see a consistent sequence.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cheb::{ChebPoly, QPoly};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::rational::{self, int, Rational};
use crate::scalar::Scalar;

#[derive(Default)]
struct SequenceCache {
    polys: Mutex<Vec<Arc<QPoly>>>,
    weights: Mutex<Vec<Rational>>,
}

fn cache_for(spec: &FamilySpec) -> Arc<SequenceCache> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<SequenceCache>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    cache
        .lock()
        .unwrap()
        .entry(spec.fingerprint())
        .or_default()
        .clone()
}

/// `h(0..=N)` with `h(0) = 1`, `h(n) = h(n-1)·a_{n-1}/c_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTable {
    #[serde(with = "rational::serde_vec")]
    pub values: Vec<Rational>,
}

impl WeightTable {
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The weights `h(0..=n)`.
pub fn weight_h(spec: &FamilySpec, n: usize) -> Result<WeightTable> {
    let cache = cache_for(spec);
    let mut h = cache.weights.lock().unwrap();
    if h.is_empty() {
        h.push(Rational::one());
    }
    while h.len() <= n {
        let m = h.len();
        let next = &h[m - 1] * spec.coeff_a(m - 1)? / spec.coeff_c(m)?;
        h.push(next);
    }
    Ok(WeightTable {
        values: h[..=n].to_vec(),
    })
}

/// `P_0..=P_n`, shared with the cache.
pub fn polynomials(spec: &FamilySpec, n: usize) -> Result<Vec<Arc<QPoly>>> {
    let cache = cache_for(spec);
    let mut polys = cache.polys.lock().unwrap();
    if polys.is_empty() {
        polys.push(Arc::new(QPoly::one()));
    }
    while polys.len() <= n {
        let m = polys.len() - 1;
        // P_{m+1} = (x P_m - c_m P_{m-1}) / a_m
        let c = spec.coeff_c(m)?;
        let a = spec.coeff_a(m)?;
        let mut next = polys[m].mul_x();
        if m >= 1 {
            next = &next - &polys[m - 1].scale_rational(&c);
        }
        let next = next.scale_rational(&a.recip());
        polys.push(Arc::new(next));
    }
    Ok(polys[..=n].to_vec())
}

/// `P_n` in the T-basis.
pub fn polynomial(spec: &FamilySpec, n: usize) -> Result<QPoly> {
    Ok(polynomials(spec, n)?[n].as_ref().clone())
}

/// `Σ_{j ≤ ⌊n/2⌋} h(n-2j)` and `Σ_{j ≤ ⌊n/2⌋} h(n-2j) P_{n-2j}`.
fn kernel_parts(spec: &FamilySpec, n: usize) -> Result<(Rational, QPoly)> {
    let h = weight_h(spec, n)?;
    let polys = polynomials(spec, n)?;
    let mut den = Rational::zero();
    let mut num = QPoly::zero();
    for j in 0..=n / 2 {
        let d = n - 2 * j;
        den += h.get(d);
        num = &num + &polys[d].scale_rational(h.get(d));
    }
    Ok((den, num))
}

/// The kernel polynomial `P_n*`, normalized so that `P_n*(1) = 1`.
pub fn kernel_polynomial(spec: &FamilySpec, n: usize) -> Result<QPoly> {
    let (den, num) = kernel_parts(spec, n)?;
    Ok(num.scale_rational(&den.recip()))
}

/// The constant `C_n*` with `(1-x²) P_n* = C_n* (P_{n+2} - P_n)`, computed by
/// the ratio formula and by the Christoffel–Darboux formula, in that order.
pub fn c_star(spec: &FamilySpec, n: usize) -> Result<(Rational, Rational)> {
    let h = weight_h(spec, n + 2)?;
    let c1 = spec.coeff_c(n + 1)?;
    let c2 = spec.coeff_c(n + 2)?;
    let top = &c1 * &c2 * h.get(n + 2);

    let ratio_den: Rational = (0..=n / 2).map(|j| h.get(n - 2 * j).clone()).sum();
    let ratio = -(&top / ratio_den);

    let cd_den: Rational = (0..=n).map(|j| h.get(j).clone()).sum::<Rational>() + &c1 * h.get(n + 1);
    let cd = -(int(2) * &top / cd_den);
    Ok((ratio, cd))
}

/// Coefficients `e_0..=e_d` with `poly = Σ e_j P_j`, by descending elimination.
pub fn expand_in_p<S: Scalar>(spec: &FamilySpec, poly: &ChebPoly<S>) -> Result<Vec<S>> {
    let Some(d) = poly.degree() else {
        return Ok(Vec::new());
    };
    let polys = polynomials(spec, d)?;
    let field = poly.field().clone();
    let mut rem = poly.clone();
    let mut out = vec![S::zero_in(&field); d + 1];
    for n in (0..=d).rev() {
        let Some(top) = rem.get(n) else { continue };
        let lead = polys[n].coeff(n);
        if lead.is_zero() {
            return Err(Error::Internal(format!(
                "P_{n} has vanishing leading coefficient"
            )));
        }
        let e = S::scale(top, &lead.recip());
        for (m, c) in polys[n].terms() {
            rem.add_term(m, &S::neg(&S::scale(&e, c)));
        }
        out[n] = e;
    }
    if !rem.is_zero() {
        return Err(Error::Internal(
            "P-basis elimination left a remainder".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{half, rat};

    fn ultra_half() -> FamilySpec {
        FamilySpec::ultraspherical(rat(1, 2)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(
            weight_h(&FamilySpec::chebyshev_t(), 3).unwrap().values,
            ints(&[1, 2, 2, 2])
        );
        assert_eq!(weight_h(&ultra_half(), 2).unwrap().values, ints(&[1, 4, 9]));
        assert_eq!(weight_h(&ultra_half(), 0).unwrap().values, ints(&[1]));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(polynomial(&ultra_half(), 1).unwrap(), QPoly::t(1));
        assert_eq!(
            polynomial(&ultra_half(), 2).unwrap(),
            QPoly::from_terms([(2, rat(2, 3)), (0, rat(1, 3))])
        );
        assert_eq!(
            polynomial(&ultra_half().sieve(2), 3).unwrap(),
            QPoly::from_terms([(3, rat(2, 3)), (1, rat(1, 3))])
        );
        for n in 0..12 {
            assert_eq!(
                polynomial(&FamilySpec::chebyshev_t(), n).unwrap(),
                QPoly::t(n)
            );
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(
            kernel_polynomial(&FamilySpec::chebyshev_t(), 1).unwrap(),
            QPoly::t(1)
        );
        assert_eq!(
            kernel_polynomial(&ultra_half(), 2).unwrap(),
            QPoly::from_terms([(2, rat(3, 5)), (0, rat(2, 5))])
        );
        assert_eq!(kernel_polynomial(&ultra_half(), 0).unwrap(), QPoly::one());
    }

    #[test]
    fn c_star_examples() {
        assert_eq!(
            c_star(&FamilySpec::chebyshev_t(), 0).unwrap(),
            (-half(), -half())
        );
        let (a, b) = c_star(&ultra_half(), 0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn expand_examples() {
        let spec = ultra_half();
        let p4 = polynomial(&spec, 4).unwrap();
        let e = expand_in_p(&spec, &p4).unwrap();
        assert_eq!(e, ints(&[0, 0, 0, 0, 1]));
        assert_eq!(
            expand_in_p(&spec, &QPoly::t(2)).unwrap(),
            vec![rat(-1, 2), int(0), rat(3, 2)]
        );
        assert!(expand_in_p(&spec, &QPoly::zero()).unwrap().is_empty());
    }

    #[test]
    fn table_exhaustion_propagates() {
        let spec = FamilySpec::table(vec![rat(1, 3)]).unwrap();
        assert!(polynomial(&spec, 2).is_ok());
        assert_eq!(
            polynomial(&spec, 3).unwrap_err(),
            Error::OutOfRange { n: 2, len: 1 }
        );
    }
}
