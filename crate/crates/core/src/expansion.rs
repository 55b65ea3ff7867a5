//! Connection coefficients between a family and the T-basis, and the explicit
//! T-expansion of its sieved polynomials.
//!
//! With `P_n = Σ_j r_n(j) T_{n-2j}`, the tables `p` and `q` split each `r_n`
//! so that for `m = kn + i`, `0 ≤ i < k`,
//!
//! ```text
//! P_m(x; k) = Σ_j p_n(j) T_{kn-2jk-i}(x) + q_n(j) T_{kn-2jk+i}(x).
//! ```
//!
//! The tables depend on neither `i` nor `k`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cheb::QPoly;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::rational::{self, binomial, half, int, pochhammer, Rational};
use crate::sequence::polynomial;

/// Rows `0..=n_max` of `r`, `p`, `q`; row `n` has entries `j = 0..=⌊n/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTables {
    pub n_max: usize,
    #[serde(with = "rational::serde_table")]
    pub r: Vec<Vec<Rational>>,
    #[serde(with = "rational::serde_table")]
    pub p: Vec<Vec<Rational>>,
    #[serde(with = "rational::serde_table")]
    pub q: Vec<Vec<Rational>>,
}

fn entry(table: &[Vec<Rational>], n: usize, j: i64) -> Rational {
    if j < 0 {
        return Rational::zero();
    }
    table
        .get(n)
        .and_then(|row| row.get(j as usize))
        .cloned()
        .unwrap_or_else(Rational::zero)
}

impl ExpansionTables {
    /// `r_n(j)`, zero outside the triangle.
    pub fn r(&self, n: usize, j: i64) -> Rational {
        entry(&self.r, n, j)
    }

    /// `p_n(j)`, zero outside the triangle.
    pub fn p(&self, n: usize, j: i64) -> Rational {
        entry(&self.p, n, j)
    }

    /// `q_n(j)`, zero outside the triangle.
    pub fn q(&self, n: usize, j: i64) -> Rational {
        entry(&self.q, n, j)
    }
}

/// `r_n(0..=⌊n/2⌋)`, read off `P_n`.
pub fn r_coeffs(spec: &FamilySpec, n: usize) -> Result<Vec<Rational>> {
    let poly = polynomial(spec, n)?;
    Ok((0..=n / 2).map(|j| poly.coeff(n - 2 * j)).collect())
}

/// `r`, `p`, `q` for rows `0..=n_max`.
pub fn pq_tables(spec: &FamilySpec, n_max: usize) -> Result<ExpansionTables> {
    let r = (0..=n_max)
        .map(|n| r_coeffs(spec, n))
        .collect::<Result<Vec<_>>>()?;
    let mut p: Vec<Vec<Rational>> = vec![vec![Rational::zero()]];
    let mut q: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 1..=n_max {
        let two_a = int(2) * spec.coeff_a(n)?;
        let skew = &two_a - Rational::one();
        let mut p_row = Vec::with_capacity(n / 2 + 1);
        let mut q_row = Vec::with_capacity(n / 2 + 1);
        for j in 0..=(n / 2) as i64 {
            let p_prev = entry(&p, n - 1, j - 1);
            if n % 2 == 0 && j as usize == n / 2 {
                p_row.push(Rational::zero());
                q_row.push(p_prev);
                continue;
            }
            let q_prev = entry(&q, n - 1, j);
            p_row.push((&skew * &q_prev + &p_prev) / &two_a);
            q_row.push((&q_prev + &skew * &p_prev) / &two_a);
        }
        p.push(p_row);
        q.push(q_row);
    }
    Ok(ExpansionTables { n_max, r, p, q })
}

fn assemble(tables: &ExpansionTables, k: usize, n: usize, i: usize) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for j in 0..=n / 2 {
        let base = (k * n - 2 * j * k) as i64;
        let p = tables.p(n, j as i64);
        let q = tables.q(n, j as i64);
        out.add_term((base + i as i64) as usize, &q);
        let low = base - i as i64;
        if low >= 0 {
            out.add_term(low as usize, &p);
        } else if !p.is_zero() {
            return Err(Error::Internal(format!(
                "p_{n}({j}) = {p} multiplies T_{low}"
            )));
        }
    }
    Ok(out)
}

/// `P_m(x; k)` assembled from the `p`/`q` tables of `spec`.
pub fn sieved_poly_expansion(spec: &FamilySpec, k: usize, m: usize) -> Result<QPoly> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let (n, i) = (m / k, m % k);
    let tables = pq_tables(spec, n)?;
    assemble(&tables, k, n, i)
}

/// `P_0(x; k)..=P_m(x; k)` sharing one table computation.
pub fn sieved_poly_expansions(spec: &FamilySpec, k: usize, m: usize) -> Result<Vec<QPoly>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let tables = pq_tables(spec, m / k)?;
    (0..=m)
        .map(|t| assemble(&tables, k, t / k, t % k))
        .collect()
}

/// `Σ_{i ≤ j} [r_n(i) - r_{n+1}(i)]`.
pub fn p_via_partial_sums(spec: &FamilySpec, n: usize, j: usize) -> Result<Rational> {
    if j > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "index {j} exceeds ⌊{n}/2⌋"
        )));
    }
    let rn = r_coeffs(spec, n)?;
    let rn1 = r_coeffs(spec, n + 1)?;
    Ok((0..=j).map(|i| &rn[i] - &rn1[i]).sum())
}

/// `(r_n(j), p_n(j))` for the ultraspherical family by closed form.
pub fn ultraspherical_rp(alpha: &Rational, n: usize, j: usize) -> Result<(Rational, Rational)> {
    if *alpha == -half() {
        return Err(Error::InvalidParameter(
            "alpha = -1/2 is the Chebyshev family; use chebyshev_t".into(),
        ));
    }
    if *alpha <= int(-1) {
        return Err(Error::InvalidParameter(format!(
            "alpha must exceed -1, got {alpha}"
        )));
    }
    if j > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "index {j} exceeds ⌊{n}/2⌋"
        )));
    }
    let shift = alpha + half();
    let denom = pochhammer(&(int(2) * alpha + int(1)), n);
    if n.is_multiple_of(2) && j == n / 2 {
        let half_rise = pochhammer(&shift, j);
        let r = binomial(n, j) * &half_rise * &half_rise / denom;
        return Ok((r, Rational::zero()));
    }
    let r = int(2) * binomial(n, j) * pochhammer(&shift, j) * pochhammer(&shift, n - j) / denom;
    let factor = (int(2 * j as i64) + int(2) * alpha + int(1))
        / (int(2 * n as i64) + int(4) * alpha + int(2));
    let p = factor * &r;
    Ok((r, p))
}
