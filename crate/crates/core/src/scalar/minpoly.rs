//! Minimal polynomial of `2cos(π/k)` obtained by folding the cyclotomic
//! polynomial `Φ_{2k}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Monic integer polynomial, coefficients in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPoly {
    k: usize,
    coeffs: Vec<BigInt>,
}

impl MinPoly {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Coefficients `[a_0, a_1, ..., a_d]` with `a_d = 1`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for MinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic divisor; panics if the remainder is nonzero.
fn int_exact_div(a: &[BigInt], monic: &[BigInt]) -> Vec<BigInt> {
    let db = monic.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for shift in (0..quot.len()).rev() {
        let factor = rem[shift + db].clone();
        if factor.is_zero() {
            continue;
        }
        for (i, c) in monic.iter().enumerate() {
            rem[i + shift] -= &factor * c;
        }
        quot[shift] = factor;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// `Φ_n` as ascending integer coefficients, memoized.
pub fn cyclotomic(n: usize) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    assert!(n >= 1);
    let mut numerator = vec![BigInt::zero(); n + 1];
    numerator[0] = -BigInt::one();
    numerator[n] = BigInt::one();
    let mut divisor = vec![BigInt::one()];
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        divisor = int_mul(&divisor, &cyclotomic(d));
    }
    let phi = int_exact_div(&numerator, &divisor);
    cache.lock().unwrap().insert(n, phi.clone());
    phi
}

/// Writes a palindromic polynomial of degree `2m` as `x^m Ψ(x + 1/x)`, returning Ψ.
fn fold_palindromic(phi: &[BigInt]) -> Vec<BigInt> {
    let m = (phi.len() - 1) / 2;
    // Laurent coefficients for x^{-m}..x^{m}, offset by m.
    let mut laurent = phi.to_vec();
    let mut psi = vec![BigInt::zero(); m + 1];
    for i in (0..=m).rev() {
        let b = laurent[i + m].clone();
        if b.is_zero() {
            continue;
        }
        // subtract b * (x + 1/x)^i
        let mut binom = BigInt::one();
        for t in 0..=i {
            let exponent = i as isize - 2 * t as isize;
            laurent[(exponent + m as isize) as usize] -= &b * &binom;
            binom = binom * BigInt::from(i - t) / BigInt::from(t + 1);
        }
        psi[i] = b;
    }
    debug_assert!(laurent.iter().all(Zero::is_zero));
    psi
}

fn build(k: usize) -> MinPoly {
    let coeffs = if k == 1 {
        vec![BigInt::from(2), BigInt::one()]
    } else {
        fold_palindromic(&cyclotomic(2 * k))
    };
    MinPoly { k, coeffs }
}

/// The minimal polynomial of `2cos(π/k)` over ℚ.
pub fn minimal_polynomial(k: usize) -> Result<Arc<MinPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MinPoly>>>> = OnceLock::new();
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&k) {
        return Ok(hit.clone());
    }
    let mp = Arc::new(build(k));
    cache.lock().unwrap().insert(k, mp.clone());
    Ok(mp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(k: usize) -> Vec<i64> {
        minimal_polynomial(k)
            .unwrap()
            .coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn totient(n: usize) -> usize {
        (1..=n).filter(|&i| num_integer::gcd(i, n) == 1).count()
    }

    #[test]
    fn small_cases() {
        assert_eq!(coeffs(1), vec![2, 1]);
        assert_eq!(coeffs(2), vec![0, 1]);
        assert_eq!(coeffs(3), vec![-1, 1]);
        assert_eq!(coeffs(4), vec![-2, 0, 1]);
        assert_eq!(coeffs(5), vec![-1, -1, 1]);
        assert_eq!(coeffs(6), vec![-3, 0, 1]);
        assert_eq!(coeffs(7), vec![1, -2, -1, 1]);
        assert_eq!(coeffs(8), vec![2, 0, -4, 0, 1]);
        assert_eq!(coeffs(12), vec![1, 0, -4, 0, 1]);
    }

    #[test]
    fn rejects_zero() {
        assert_eq!(minimal_polynomial(0).unwrap_err(), Error::ZeroK);
    }

    #[test]
    fn cyclotomic_values() {
        let to_i =
            |v: Vec<BigInt>| -> Vec<i64> { v.iter().map(|c| i64::try_from(c).unwrap()).collect() };
        assert_eq!(to_i(cyclotomic(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(to_i(cyclotomic(10)), vec![1, -1, 1, -1, 1]);
        assert_eq!(to_i(cyclotomic(1)), vec![-1, 1]);
    }

    #[test]
    fn degree_is_half_totient() {
        for k in 2..=30 {
            assert_eq!(
                minimal_polynomial(k).unwrap().degree(),
                totient(2 * k) / 2,
                "k={k}"
            );
        }
    }

    #[test]
    fn nearest_root_matches_2cos() {
        for k in 1..=30 {
            let target = 2.0 * (std::f64::consts::PI / k as f64).cos();
            let c: Vec<f64> = minimal_polynomial(k)
                .unwrap()
                .coefficients()
                .iter()
                .map(|c| i64::try_from(c).unwrap() as f64)
                .collect();
            let eval = |x: f64| c.iter().rev().fold(0.0, |acc, a| acc * x + a);
            let deriv = |x: f64| {
                c.iter()
                    .enumerate()
                    .skip(1)
                    .rev()
                    .fold(0.0, |acc, (i, a)| acc * x + i as f64 * a)
            };
            let mut root = target;
            for _ in 0..50 {
                root -= eval(root) / deriv(root);
            }
            assert!((root - target).abs() < 1e-12, "k={k}: {root} vs {target}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(minimal_polynomial(5).unwrap().to_string(), "x^2 - x - 1");
        assert_eq!(minimal_polynomial(1).unwrap().to_string(), "x + 2");
        assert_eq!(minimal_polynomial(2).unwrap().to_string(), "x");
        assert_eq!(minimal_polynomial(4).unwrap().to_string(), "x^2 - 2");
        assert_eq!(
            minimal_polynomial(7).unwrap().to_string(),
            "x^3 - x^2 - 2x + 1"
        );
    }
}
