//! Families of recurrence coefficients `c_n ∈ (0,1)`.
//!
//! A [`FamilySpec`] is a pure description: it yields `c_n` on demand and is
//! checked lazily, so an invalid coefficient is reported with the index at
//! which it was first requested.

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, half, in_unit_interval, int, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilySpec {
    /// `c_n = ½` for all `n`: the Chebyshev polynomials of the first kind.
    ChebyshevT,
    /// `c_n = n / (2n + 2α + 1)`, `α > -1`.
    Ultraspherical {
        #[serde(with = "rational::serde_str")]
        alpha: Rational,
    },
    /// `c_1, c_2, ...` listed explicitly.
    Table {
        #[serde(with = "rational::serde_vec")]
        c: Vec<Rational>,
    },
    /// `c(n;k) = c_{n/k}` if `k | n`, else `½`.
    Sieved { k: usize, inner: Box<FamilySpec> },
    /// `c_n = num(n) / den(n)` for polynomials given by ascending coefficients.
    Custom {
        #[serde(with = "rational::serde_vec")]
        num: Vec<Rational>,
        #[serde(with = "rational::serde_vec")]
        den: Vec<Rational>,
    },
    /// `inner` with the single coefficient `c_n` replaced.
    Override {
        inner: Box<FamilySpec>,
        n: usize,
        #[serde(with = "rational::serde_str")]
        c: Rational,
    },
    /// `head` for `n ≤ upto`, `tail` afterwards.
    Spliced {
        upto: usize,
        head: Box<FamilySpec>,
        tail: Box<FamilySpec>,
    },
}

impl FamilySpec {
    pub fn chebyshev_t() -> Self {
        FamilySpec::ChebyshevT
    }

    pub fn ultraspherical(alpha: Rational) -> Result<Self> {
        let spec = FamilySpec::Ultraspherical { alpha };
        spec.validate()?;
        Ok(spec)
    }

    pub fn table(c: Vec<Rational>) -> Result<Self> {
        let spec = FamilySpec::Table { c };
        spec.validate()?;
        Ok(spec)
    }

    pub fn custom(num: Vec<Rational>, den: Vec<Rational>) -> Result<Self> {
        let spec = FamilySpec::Custom { num, den };
        spec.validate()?;
        Ok(spec)
    }

    /// Replaces `c_n` by `c`.
    pub fn with_override(&self, n: usize, c: Rational) -> Result<Self> {
        let spec = FamilySpec::Override {
            inner: Box::new(self.clone()),
            n,
            c,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Keeps `c_1..c_upto` and continues with `tail`.
    pub fn spliced(&self, upto: usize, tail: FamilySpec) -> Self {
        FamilySpec::Spliced {
            upto,
            head: Box::new(self.clone()),
            tail: Box::new(tail),
        }
    }

    /// The `k`-sieved family. `sieve(1)` is the family itself.
    ///
    /// Panics if `k == 0`.
    pub fn sieve(&self, k: usize) -> Self {
        assert!(k >= 1, "sieving requires k >= 1");
        if k == 1 {
            self.clone()
        } else {
            FamilySpec::Sieved {
                k,
                inner: Box::new(self.clone()),
            }
        }
    }

    /// Checks the static parameters (not the full coefficient stream).
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::ChebyshevT => Ok(()),
            FamilySpec::Ultraspherical { alpha } => {
                if *alpha > int(-1) {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter(format!(
                        "ultraspherical alpha = {} must exceed -1",
                        rational::format_rational(alpha)
                    )))
                }
            }
            FamilySpec::Table { c } => {
                for (i, value) in c.iter().enumerate() {
                    if !in_unit_interval(value) {
                        return Err(Error::InvalidCoefficient {
                            n: i + 1,
                            value: value.clone(),
                        });
                    }
                }
                Ok(())
            }
            FamilySpec::Sieved { k, inner } => {
                if *k == 0 {
                    return Err(Error::ZeroK);
                }
                inner.validate()
            }
            FamilySpec::Custom { den, .. } => {
                if den.iter().all(Zero::is_zero) {
                    Err(Error::InvalidParameter(
                        "custom family denominator is the zero polynomial".into(),
                    ))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Override { inner, n, c } => {
                if *n == 0 {
                    return Err(Error::InvalidParameter(
                        "override index must be at least 1".into(),
                    ));
                }
                if !in_unit_interval(c) {
                    return Err(Error::InvalidCoefficient {
                        n: *n,
                        value: c.clone(),
                    });
                }
                inner.validate()
            }
            FamilySpec::Spliced { head, tail, .. } => {
                head.validate()?;
                tail.validate()
            }
        }
    }

    fn raw_c(&self, n: usize) -> Result<Rational> {
        match self {
            FamilySpec::ChebyshevT => Ok(half()),
            FamilySpec::Ultraspherical { alpha } => {
                let n = int(n as i64);
                let den = &n * int(2) + alpha * int(2) + int(1);
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(n / den)
            }
            FamilySpec::Table { c } => c
                .get(n - 1)
                .cloned()
                .ok_or(Error::OutOfRange { n, len: c.len() }),
            FamilySpec::Sieved { k, inner } => {
                if n.is_multiple_of(*k) {
                    inner.coeff_c(n / k)
                } else {
                    Ok(half())
                }
            }
            FamilySpec::Custom { num, den } => {
                let x = int(n as i64);
                let eval =
                    |p: &[Rational]| p.iter().rev().fold(Rational::zero(), |acc, a| acc * &x + a);
                let d = eval(den);
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(eval(num) / d)
            }
            FamilySpec::Override { inner, n: at, c } => {
                if n == *at {
                    Ok(c.clone())
                } else {
                    inner.coeff_c(n)
                }
            }
            FamilySpec::Spliced { upto, head, tail } => {
                if n <= *upto {
                    head.coeff_c(n)
                } else {
                    tail.coeff_c(n)
                }
            }
        }
    }

    /// `c_n`, with `c_0 = 0`.
    pub fn coeff_c(&self, n: usize) -> Result<Rational> {
        if n == 0 {
            return Ok(Rational::zero());
        }
        let value = self.raw_c(n)?;
        if in_unit_interval(&value) {
            Ok(value)
        } else {
            Err(Error::InvalidCoefficient { n, value })
        }
    }

    /// `a_n = 1 - c_n`, with `a_0 = 1`.
    pub fn coeff_a(&self, n: usize) -> Result<Rational> {
        Ok(Rational::one() - self.coeff_c(n)?)
    }

    /// `c_1..=c_n`.
    pub fn coefficients(&self, n: usize) -> Result<Vec<Rational>> {
        (1..=n).map(|i| self.coeff_c(i)).collect()
    }

    /// Canonical identity used to key caches.
    pub fn fingerprint(&self) -> String {
        serde_json::to_string(self).expect("family specs always serialize")
    }
}

/// A random coefficient `p/q ∈ (0,1)` with `2 ≤ q ≤ max_den`.
pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R, max_den: i64) -> Rational {
    let q = rng.random_range(2..=max_den.max(2));
    let p = rng.random_range(1..q);
    rat(p, q)
}

/// A table family with `len` random coefficients.
pub fn random_table<R: Rng + ?Sized>(rng: &mut R, len: usize) -> FamilySpec {
    FamilySpec::Table {
        c: (0..len).map(|_| random_coefficient(rng, 16)).collect(),
    }
}

/// The ultraspherical parameter matching `c_1`: `α = 1/(2c_1) - 3/2`.
pub fn fitted_alpha(c1: &Rational) -> Rational {
    (int(2) * c1).recip() - rat(3, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn ultra_half() -> FamilySpec {
        FamilySpec::ultraspherical(rat(1, 2)).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(ultra_half().coeff_c(1).unwrap(), rat(1, 4));
        assert_eq!(FamilySpec::chebyshev_t().coeff_c(7).unwrap(), half());
        assert_eq!(ultra_half().sieve(2).coeff_c(4).unwrap(), rat(1, 3));
        assert_eq!(ultra_half().sieve(2).coeff_c(3).unwrap(), half());
        assert_eq!(ultra_half().coeff_c(0).unwrap(), int(0));
        assert_eq!(ultra_half().coeff_a(0).unwrap(), int(1));
    }

    #[test]
    fn sieve_by_one_is_identity() {
        let spec = ultra_half();
        assert_eq!(spec.sieve(1), spec);
        let cheb = FamilySpec::chebyshev_t().sieve(5);
        for n in 1..30 {
            assert_eq!(cheb.coeff_c(n).unwrap(), half());
        }
    }

    #[test]
    fn table_errors() {
        let t = FamilySpec::table(vec![rat(1, 3), rat(1, 2)]).unwrap();
        assert_eq!(
            t.coeff_c(3).unwrap_err(),
            Error::OutOfRange { n: 3, len: 2 }
        );
        assert_eq!(
            FamilySpec::table(vec![rat(3, 2)]).unwrap_err(),
            Error::InvalidCoefficient {
                n: 1,
                value: rat(3, 2)
            }
        );
    }

    #[test]
    fn lazy_check_reports_index() {
        // c_n = n/4 leaves (0,1) at n = 4
        let spec = FamilySpec::custom(vec![int(0), int(1)], vec![int(4)]).unwrap();
        assert_eq!(spec.coeff_c(3).unwrap(), rat(3, 4));
        assert_eq!(
            spec.coeff_c(4).unwrap_err(),
            Error::InvalidCoefficient {
                n: 4,
                value: int(1)
            }
        );
    }

    #[test]
    fn ultraspherical_rejects_alpha_at_most_minus_one() {
        assert!(FamilySpec::ultraspherical(int(-1)).is_err());
        assert!(FamilySpec::ultraspherical(rat(-1, 2)).is_ok());
    }

    #[test]
    fn json_schema() {
        let json = r#"{"kind":"sieved","k":2,"inner":{"kind":"ultraspherical","alpha":"1/2"}}"#;
        let spec: FamilySpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec, ultra_half().sieve(2));
        assert_eq!(spec.fingerprint(), json);
        let t: FamilySpec = serde_json::from_str(r#"{"kind":"table","c":["1/2","1/4"]}"#).unwrap();
        assert_eq!(t.coeff_c(2).unwrap(), rat(1, 4));
        let c: FamilySpec = serde_json::from_str(r#"{"kind":"chebyshev_t"}"#).unwrap();
        assert_eq!(c, FamilySpec::ChebyshevT);
    }

    #[test]
    fn override_and_splice() {
        let base = FamilySpec::chebyshev_t();
        let o = base.with_override(3, rat(1, 3)).unwrap();
        assert_eq!(o.coeff_c(3).unwrap(), rat(1, 3));
        assert_eq!(o.coeff_c(4).unwrap(), half());
        let s = ultra_half().spliced(2, FamilySpec::chebyshev_t());
        assert_eq!(s.coeff_c(2).unwrap(), rat(1, 3));
        assert_eq!(s.coeff_c(3).unwrap(), half());
    }

    #[test]
    fn random_tables_are_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let t = random_table(&mut rng, 40);
        t.validate().unwrap();
        assert_eq!(t.coefficients(40).unwrap().len(), 40);
    }

    #[test]
    fn fitted_alpha_inverts_first_coefficient() {
        for alpha in [rat(-1, 4), rat(1, 2), int(1), rat(7, 2)] {
            let spec = FamilySpec::ultraspherical(alpha.clone()).unwrap();
            assert_eq!(fitted_alpha(&spec.coeff_c(1).unwrap()), alpha);
        }
    }
}
