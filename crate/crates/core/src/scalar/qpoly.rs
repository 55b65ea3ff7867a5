//! Dense univariate polynomials over ℚ, coefficients in ascending order.
//! Only what the number-field layer needs: products, remainders, and the
//! extended Euclidean algorithm.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let factor = &rem[dr] / &lead;
        let shift = dr - db;
        for (i, c) in b.iter().enumerate().take(db + 1) {
            if !c.is_zero() {
                rem[i + shift] -= &factor * c;
            }
        }
        quot[shift] += factor;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)` and `g = gcd(a, m)` made monic.
pub(crate) fn xgcd_left(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (Vec::new(), vec![Rational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(d) = degree(&r0) {
        let inv = r0[d].recip();
        for c in r0.iter_mut() {
            *c *= &inv;
        }
        for c in s0.iter_mut() {
            *c *= &inv;
        }
    }
    (r0, s0)
}
