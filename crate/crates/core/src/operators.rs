//! The sieved operators `D_k` and `A_k` and the Fourier coefficients of a
//! family under them.
//!
//! On the T-basis, with `c = |cos(π/k)|`,
//!
//! ```text
//! D_k T_n = U_{n-1}(c) U_{n-1}(x),    A_k T_n = T_n(c) T_n(x).
//! ```
//!
//! `D_1` is the ordinary derivative and `A_1` the identity. For `k ≥ 2`,
//! `D_k T_n = 0` exactly when `k | n`.
//!
//! The Fourier coefficients are read off the expansions
//! `D_k P_n = Σ_j κ_n(j;k) h(j) P_j` and `A_k P_n = Σ_j α_n(j;k) h(j) P_j`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cheb::{u_in_t, ChebPoly, FieldPoly};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::rational::{int, Rational};
use crate::scalar::{
    abs_cos, cheb_value, cheb_values, number_field, sin_squared, ChebKind, FieldElement, Scalar,
};
use crate::sequence::{expand_in_p, polynomials, weight_h};

/// `D_k P`, with coefficients in ℚ(cos(π/k)).
pub fn apply_dk<S: Scalar>(poly: &ChebPoly<S>, k: usize) -> Result<FieldPoly> {
    let field = number_field(k)?;
    let mut out = FieldPoly::zero_in(&field);
    let Some(d) = poly.degree() else {
        return Ok(out);
    };
    let u = cheb_values(ChebKind::U, d, k)?;
    for (n, c) in poly.terms() {
        if n == 0 {
            continue;
        }
        let weight = &S::to_field(c, &field)? * &u[n - 1];
        if weight.is_zero() {
            continue;
        }
        for (m, b) in u_in_t(n as i64 - 1).terms() {
            out.add_term(m, &weight.scale(b));
        }
    }
    Ok(out)
}

/// `A_k P`, with coefficients in ℚ(cos(π/k)).
pub fn apply_ak<S: Scalar>(poly: &ChebPoly<S>, k: usize) -> Result<FieldPoly> {
    let field = number_field(k)?;
    let mut out = FieldPoly::zero_in(&field);
    let Some(d) = poly.degree() else {
        return Ok(out);
    };
    let t = cheb_values(ChebKind::T, d, k)?;
    for (n, c) in poly.terms() {
        out.add_term(n, &(&S::to_field(c, &field)? * &t[n]));
    }
    Ok(out)
}

/// `κ_n(j;k)` for `j < n ≤ n_max` and `α_n(j;k)` for `j ≤ n ≤ n_max`.
///
/// Row `n` of `kappa` has `n` entries and row `n` of `alpha` has `n + 1`.
/// `sigma[n] = κ_n(n-1;k)`, with `sigma[0] = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierTable {
    pub k: usize,
    pub n_max: usize,
    pub kappa: Vec<Vec<FieldElement>>,
    pub alpha: Vec<Vec<FieldElement>>,
    pub sigma: Vec<FieldElement>,
}

fn lookup(
    table: &[Vec<FieldElement>],
    zero: &FieldElement,
    n: i64,
    j: i64,
) -> Result<FieldElement> {
    if n < 0 || j < 0 {
        return Ok(zero.clone());
    }
    let row = table.get(n as usize).ok_or(Error::OutOfRange {
        n: n as usize,
        len: table.len(),
    })?;
    Ok(row.get(j as usize).cloned().unwrap_or_else(|| zero.clone()))
}

impl FourierTable {
    fn zero(&self) -> FieldElement {
        FieldElement::zero(self.sigma[0].field())
    }

    /// `κ_n(j;k)`; zero outside `0 ≤ j < n`, error past `n_max`.
    pub fn kappa(&self, n: i64, j: i64) -> Result<FieldElement> {
        lookup(&self.kappa, &self.zero(), n, j)
    }

    /// `α_n(j;k)`; zero outside `0 ≤ j ≤ n`, error past `n_max`.
    pub fn alpha(&self, n: i64, j: i64) -> Result<FieldElement> {
        lookup(&self.alpha, &self.zero(), n, j)
    }

    fn truncated(&self, n_max: usize) -> FourierTable {
        FourierTable {
            k: self.k,
            n_max,
            kappa: self.kappa[..=n_max].to_vec(),
            alpha: self.alpha[..=n_max].to_vec(),
            sigma: self.sigma[..=n_max].to_vec(),
        }
    }
}

type TableCache = Mutex<HashMap<(String, usize), Arc<FourierTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn fourier_row(
    spec: &FamilySpec,
    k: usize,
    poly: &ChebPoly<Rational>,
    inv_h: &[Rational],
    n: usize,
) -> Result<(Vec<FieldElement>, Vec<FieldElement>)> {
    let field = number_field(k)?;
    let read = |image: FieldPoly, len: usize| -> Result<Vec<FieldElement>> {
        let e = expand_in_p(spec, &image)?;
        Ok((0..len)
            .map(|j| match e.get(j) {
                Some(x) => x.scale(&inv_h[j]),
                None => FieldElement::zero(&field),
            })
            .collect())
    };
    let kappa = read(apply_dk(poly, k)?, n)?;
    let alpha = read(apply_ak(poly, k)?, n + 1)?;
    Ok((kappa, alpha))
}

/// The Fourier coefficients of `spec` under `D_k`, `A_k` up to row `n_max`.
pub fn fourier_table(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Arc<FourierTable>> {
    let key = (spec.fingerprint(), k);
    if let Some(t) = table_cache().lock().unwrap().get(&key) {
        if t.n_max == n_max {
            return Ok(t.clone());
        }
        if t.n_max > n_max {
            return Ok(Arc::new(t.truncated(n_max)));
        }
    }
    let field = number_field(k)?;
    let polys = polynomials(spec, n_max)?;
    let inv_h: Vec<Rational> = weight_h(spec, n_max)?
        .values
        .iter()
        .map(|h| h.recip())
        .collect();
    let rows = (0..=n_max)
        .into_par_iter()
        .map(|n| fourier_row(spec, k, &polys[n], &inv_h, n))
        .collect::<Result<Vec<_>>>()?;
    let (kappa, alpha): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let sigma = (0..=n_max)
        .map(|n| match n {
            0 => FieldElement::zero(&field),
            _ => kappa[n][n - 1].clone(),
        })
        .collect();
    let table = Arc::new(FourierTable {
        k,
        n_max,
        kappa,
        alpha,
        sigma,
    });
    let mut cache = table_cache().lock().unwrap();
    let slot = cache.entry(key).or_insert_with(|| table.clone());
    if slot.n_max < n_max {
        *slot = table.clone();
    }
    Ok(table)
}

/// Rows `0..=n_max` of `κ_n(j;k)`.
pub fn kappa_table(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Vec<Vec<FieldElement>>> {
    Ok(fourier_table(spec, k, n_max)?.kappa.clone())
}

/// Rows `0..=n_max` of `α_n(j;k)`.
pub fn alpha_table(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Vec<Vec<FieldElement>>> {
    Ok(fourier_table(spec, k, n_max)?.alpha.clone())
}

/// `σ(n;k) = κ_n(n-1;k)` from the table and from `U_{n-1}(c) / (c_n h(n))`.
pub fn sigma_val(spec: &FamilySpec, k: usize, n: usize) -> Result<(FieldElement, FieldElement)> {
    if n == 0 {
        return Err(Error::InvalidParameter("sigma is defined for n ≥ 1".into()));
    }
    let table = fourier_table(spec, k, n)?.sigma[n].clone();
    let h = weight_h(spec, n)?;
    let scale = (spec.coeff_c(n)? * h.get(n)).recip();
    let closed = cheb_value(ChebKind::U, n as i64 - 1, k)?.scale(&scale);
    Ok((table, closed))
}

/// Closed forms of `α_n(n;k)` and, for `n ≥ 2`, `α_n(n-2;k)`.
pub fn alpha_closed_forms(
    spec: &FamilySpec,
    k: usize,
    n: usize,
) -> Result<(FieldElement, Option<FieldElement>)> {
    let h = weight_h(spec, n)?;
    let diagonal = cheb_value(ChebKind::T, n as i64, k)?.scale(&h.get(n).recip());
    if n < 2 {
        return Ok((diagonal, None));
    }
    let mut walk = Rational::zero();
    for j in 1..n {
        walk += spec.coeff_a(j - 1)? * spec.coeff_c(j)?;
    }
    let factor = (int(n as i64) - int(4) * walk)
        / (int(2) * spec.coeff_c(n - 1)? * spec.coeff_c(n)? * h.get(n));
    let sub = &cheb_value(ChebKind::U, n as i64 - 2, k)? * &sin_squared(k)?;
    Ok((diagonal, Some(sub.scale(&factor))))
}

/// `D_k(PQ) - [D_k P · A_k Q + A_k P · D_k Q]`, which vanishes identically.
pub fn product_rule_residual<S: Scalar>(
    p: &ChebPoly<S>,
    q: &ChebPoly<S>,
    k: usize,
) -> Result<FieldPoly> {
    let field = number_field(k)?;
    let p = p.to_number_field(&field)?;
    let q = q.to_number_field(&field)?;
    let lhs = apply_dk(&p.checked_mul(&q)?, k)?;
    let first = apply_dk(&p, k)?.checked_mul(&apply_ak(&q, k)?)?;
    let second = apply_ak(&p, k)?.checked_mul(&apply_dk(&q, k)?)?;
    lhs.checked_sub(&first.checked_add(&second)?)
}

/// `a_n κ_{n+1}(j) + c_n κ_{n-1}(j) - c [a_j κ_n(j+1) + c_j κ_n(j-1)] - α_n(j)`
/// with `c = |cos(π/k)|`, which vanishes for every `n, j`.
pub fn kappa_recurrence_residual(
    spec: &FamilySpec,
    k: usize,
    n: usize,
    j: usize,
) -> Result<FieldElement> {
    let t = fourier_table(spec, k, n + 1)?;
    let (ni, ji) = (n as i64, j as i64);
    let lhs = &t.kappa(ni + 1, ji)?.scale(&spec.coeff_a(n)?)
        + &t.kappa(ni - 1, ji)?.scale(&spec.coeff_c(n)?);
    let inner = &t.kappa(ni, ji + 1)?.scale(&spec.coeff_a(j)?)
        + &t.kappa(ni, ji - 1)?.scale(&spec.coeff_c(j)?);
    Ok(&(&lhs - &(&abs_cos(k)? * &inner)) - &t.alpha(ni, ji)?)
}
