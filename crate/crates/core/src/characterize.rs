//! Finite-horizon decision procedures for `k`-sievedness.
//!
//! A family is `k`-sieved when `c_n = ½` for every `n` not divisible by `k`.
//! Each check here tests one condition equivalent to that property and
//! reports either `Holds` up to the horizon or the first index at which it
//! fails, with an exact nonzero witness. A failure is definitive; a pass says
//! nothing beyond the horizon.
//!
//! For `k = 1` every family is sieved and the conditions on `D_1` instead
//! single out the ultraspherical families, so the report compares them with
//! the ultraspherical family fitted to `c_1`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cheb::{FieldPoly, QPoly};
use crate::error::{Error, Result};
use crate::family::{fitted_alpha, FamilySpec};
use crate::operators::{apply_ak, apply_dk, fourier_table, FourierTable};
use crate::rational::{self, half, int, Rational};
use crate::scalar::{cheb_values, number_field, ChebKind, FieldElement};
use crate::sequence::{expand_in_p, kernel_polynomial, polynomials};

/// Extra rows the report checks past the horizon on the completed family.
pub const HORIZON_SLACK: usize = 4;

/// Smallest horizon accepted by the `κ` conditions.
pub const KAPPA_MIN_HORIZON: usize = 5;

/// The conditions a report evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    /// `c_n = ½` whenever `k ∤ n`.
    #[serde(rename = "thm3.1-i")]
    SievedDirect,
    /// `A_k P_n = T_n(|cos(π/k)|) P_n`.
    #[serde(rename = "thm3.1-ii")]
    Eigenvector,
    /// `α_{n+1}(n-1;k) = 0`.
    #[serde(rename = "thm3.1-iii")]
    AlphaVanishing,
    /// `D_k P_n = D_k P_n(1) P*_{n-1}`.
    #[serde(rename = "thm3.2-ii")]
    KernelPolynomial,
    /// `(1-x²) D_k P_n ⟂ P_0, ..., P_{n-2}`.
    #[serde(rename = "thm3.2-iii")]
    Orthogonality,
    /// `κ_{n+2}(n-1;k) = σ(n+2;k)` and `κ_{n+4}(n-1-2m;k) = σ(n+4;k)` for some `m`.
    #[serde(rename = "thm3.2-iv")]
    KappaFull,
    /// The reduced set of `κ` conditions.
    #[serde(rename = "thm3.2-iv-weakened")]
    KappaWeakened,
    /// `4 Σ_{j ≤ n} a_{j-1} c_j = n + 1` whenever `k ∤ n`.
    #[serde(rename = "eq3.7")]
    CentralEquation,
    /// `c_n = n / (2n + 2α + 1)` with `α = 1/(2c_1) - 3/2`; `k = 1` only.
    #[serde(rename = "thm3.2-i-prime")]
    UltrasphericalFit,
}

impl Condition {
    /// Conditions equivalent to sievedness for `k ≥ 2`.
    pub const SIEVED: [Condition; 8] = [
        Condition::SievedDirect,
        Condition::Eigenvector,
        Condition::AlphaVanishing,
        Condition::KernelPolynomial,
        Condition::Orthogonality,
        Condition::KappaFull,
        Condition::KappaWeakened,
        Condition::CentralEquation,
    ];

    /// Conditions on `D_1` that characterize ultraspherical families.
    pub const ULTRASPHERICAL: [Condition; 5] = [
        Condition::UltrasphericalFit,
        Condition::KernelPolynomial,
        Condition::Orthogonality,
        Condition::KappaFull,
        Condition::KappaWeakened,
    ];

    /// The report identifier.
    pub fn wire_name(self) -> &'static str {
        match self {
            Condition::SievedDirect => "thm3.1-i",
            Condition::Eigenvector => "thm3.1-ii",
            Condition::AlphaVanishing => "thm3.1-iii",
            Condition::KernelPolynomial => "thm3.2-ii",
            Condition::Orthogonality => "thm3.2-iii",
            Condition::KappaFull => "thm3.2-iv",
            Condition::KappaWeakened => "thm3.2-iv-weakened",
            Condition::CentralEquation => "eq3.7",
            Condition::UltrasphericalFit => "thm3.2-i-prime",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Condition::SievedDirect => "c_n = 1/2 whenever k does not divide n",
            Condition::Eigenvector => "P_n is an eigenvector of A_k",
            Condition::AlphaVanishing => "alpha_{n+1}(n-1;k) = 0",
            Condition::KernelPolynomial => "D_k P_n = D_k P_n(1) P*_{n-1}",
            Condition::Orthogonality => "(1-x^2) D_k P_n is orthogonal to P_0..P_{n-2}",
            Condition::KappaFull => "kappa/sigma conditions",
            Condition::KappaWeakened => "reduced kappa/sigma conditions",
            Condition::CentralEquation => "4 sum a_{j-1} c_j = n+1 whenever k does not divide n",
            Condition::UltrasphericalFit => "c_n matches the ultraspherical family fitted to c_1",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown condition {s:?}")))
    }
}

/// Which `κ` conditions to require.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KappaMode {
    #[default]
    Full,
    Weakened,
}

impl FromStr for KappaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(KappaMode::Full),
            "weakened" => Ok(KappaMode::Weakened),
            _ => Err(Error::InvalidParameter(format!(
                "unknown mode {s:?}; expected full or weakened"
            ))),
        }
    }
}

/// An exact nonzero value showing why a condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WitnessWire", try_from = "WitnessWire")]
pub struct Witness {
    pub value: FieldElement,
    pub detail: String,
}

#[derive(Serialize, Deserialize)]
struct WitnessWire {
    value: String,
    field: String,
    #[serde(with = "rational::serde_vec")]
    coords: Vec<Rational>,
    detail: String,
}

impl From<Witness> for WitnessWire {
    fn from(w: Witness) -> Self {
        WitnessWire {
            value: w.value.to_string(),
            field: w.value.field().label(),
            coords: w.value.coords().to_vec(),
            detail: w.detail,
        }
    }
}

impl TryFrom<WitnessWire> for Witness {
    type Error = Error;

    fn try_from(w: WitnessWire) -> Result<Self> {
        let k = w
            .field
            .strip_prefix("Q(cos(pi/")
            .and_then(|s| s.strip_suffix("))"))
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("unrecognized field label {:?}", w.field)))?;
        let field = number_field(k)?;
        if w.coords.len() > field.degree() {
            return Err(Error::Parse(format!(
                "too many coordinates for {}",
                w.field
            )));
        }
        Ok(Witness {
            value: FieldElement::from_coords(&field, w.coords),
            detail: w.detail,
        })
    }
}

/// Outcome of one condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds { horizon: usize },
    FailsAt { n: usize, witness: Witness },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn failing_index(&self) -> Option<usize> {
        match self {
            Verdict::Holds { .. } => None,
            Verdict::FailsAt { n, .. } => Some(*n),
        }
    }

    fn fails(n: usize, value: FieldElement, detail: String) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::Internal(format!(
                "zero witness at n = {n}: {detail}"
            )));
        }
        Ok(Verdict::FailsAt {
            n,
            witness: Witness { value, detail },
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds { horizon } => write!(f, "holds up to {horizon}"),
            Verdict::FailsAt { n, witness } => {
                write!(f, "fails at {n}: {} [{}]", witness.detail, witness.value)
            }
        }
    }
}

/// A condition and its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ResultWire", try_from = "ResultWire")]
pub struct ConditionResult {
    pub condition: Condition,
    pub verdict: Verdict,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum VerdictTag {
    Holds,
    Fails,
}

#[derive(Serialize, Deserialize)]
struct ResultWire {
    condition: Condition,
    verdict: VerdictTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    horizon: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

impl From<ConditionResult> for ResultWire {
    fn from(r: ConditionResult) -> Self {
        match r.verdict {
            Verdict::Holds { horizon } => ResultWire {
                condition: r.condition,
                verdict: VerdictTag::Holds,
                horizon: Some(horizon),
                n: None,
                witness: None,
            },
            Verdict::FailsAt { n, witness } => ResultWire {
                condition: r.condition,
                verdict: VerdictTag::Fails,
                horizon: None,
                n: Some(n),
                witness: Some(witness),
            },
        }
    }
}

impl TryFrom<ResultWire> for ConditionResult {
    type Error = Error;

    fn try_from(w: ResultWire) -> Result<Self> {
        let verdict = match (w.verdict, w.horizon, w.n, w.witness) {
            (VerdictTag::Holds, Some(horizon), None, None) => Verdict::Holds { horizon },
            (VerdictTag::Fails, None, Some(n), Some(witness)) => Verdict::FailsAt { n, witness },
            _ => {
                return Err(Error::Parse(format!(
                    "inconsistent verdict fields for {}",
                    w.condition
                )))
            }
        };
        Ok(ConditionResult {
            condition: w.condition,
            verdict,
        })
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::ZeroK)
    } else {
        Ok(())
    }
}

fn constant(k: usize, r: &Rational) -> Result<FieldElement> {
    Ok(FieldElement::from_rational(&number_field(k)?, r))
}

fn fmt_q(r: &Rational) -> String {
    rational::format_rational(r)
}

/// The highest-degree coefficient of a nonzero residual.
fn leading(residual: &FieldPoly) -> (usize, FieldElement) {
    let (d, c) = residual.terms().next_back().expect("nonzero residual");
    (d, c.clone())
}

/// `c_n = ½` for every `n ≤ n_max` with `k ∤ n`.
pub fn check_sieved_direct(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Verdict> {
    check_k(k)?;
    for n in (1..=n_max).filter(|n| n % k != 0) {
        let c = spec.coeff_c(n)?;
        if c != half() {
            return Verdict::fails(n, constant(k, &c)?, format!("c_{n} = {} ≠ 1/2", fmt_q(&c)));
        }
    }
    Ok(Verdict::Holds { horizon: n_max })
}

/// `c_n = n / (2n + 2α + 1)` for `n ≤ n_max`, `α = 1/(2c_1) - 3/2`.
pub fn check_ultraspherical_fit(spec: &FamilySpec, n_max: usize) -> Result<Verdict> {
    let alpha = fitted_alpha(&spec.coeff_c(1)?);
    let fit = FamilySpec::ultraspherical(alpha.clone())?;
    for n in 1..=n_max {
        let (c, expected) = (spec.coeff_c(n)?, fit.coeff_c(n)?);
        if c != expected {
            return Verdict::fails(
                n,
                constant(1, &(&c - &expected))?,
                format!(
                    "c_{n} = {} ≠ {} (ultraspherical alpha = {})",
                    fmt_q(&c),
                    fmt_q(&expected),
                    fmt_q(&alpha)
                ),
            );
        }
    }
    Ok(Verdict::Holds { horizon: n_max })
}

/// `A_k P_n = T_n(|cos(π/k)|) P_n` for `n ≤ n_max`.
pub fn check_eigen(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Verdict> {
    check_k(k)?;
    let field = number_field(k)?;
    let polys = polynomials(spec, n_max)?;
    let eigen = cheb_values(ChebKind::T, n_max, k)?;
    for (n, p) in polys.iter().enumerate() {
        let p = p.to_number_field(&field)?;
        let residual = apply_ak(&p, k)?.checked_sub(&p.scale(&eigen[n]))?;
        if !residual.is_zero() {
            let (d, c) = leading(&residual);
            return Verdict::fails(
                n,
                c,
                format!("A_k P_{n} - T_{n}(|cos(pi/k)|) P_{n} = {residual} (T{d} coefficient)"),
            );
        }
        if p.eval_at_abs_cos(k)? != eigen[n] {
            return Err(Error::Internal(format!(
                "eigenvalue of P_{n} differs from P_{n}(|cos(pi/{k})|)"
            )));
        }
    }
    Ok(Verdict::Holds { horizon: n_max })
}

fn alpha_vanishing(t: &FourierTable, n_max: usize) -> Result<Verdict> {
    for n in 1..n_max {
        let a = t.alpha(n as i64 + 1, n as i64 - 1)?;
        if !a.is_zero() {
            let detail = format!("alpha_{}({};{}) = {a}", n + 1, n - 1, t.k);
            return Verdict::fails(n, a, detail);
        }
    }
    Ok(Verdict::Holds { horizon: n_max })
}

/// `α_{n+1}(n-1;k) = 0` for `1 ≤ n ≤ n_max - 1`.
pub fn check_alpha_vanishing(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Verdict> {
    check_k(k)?;
    alpha_vanishing(fourier_table(spec, k, n_max)?.as_ref(), n_max)
}

/// The kernel-polynomial property and its orthogonality form, row by row.
///
/// The two are equivalent for each `n` separately; a row on which they
/// disagree is an internal-consistency error.
pub fn check_kernel_pair(spec: &FamilySpec, k: usize, n_max: usize) -> Result<(Verdict, Verdict)> {
    check_k(k)?;
    let field = number_field(k)?;
    let polys = polynomials(spec, n_max)?;
    let weight = QPoly::one_minus_x_squared().to_number_field(&field)?;
    let mut kernel_verdict = None;
    let mut orth_verdict = None;
    for (n, p) in polys.iter().enumerate().skip(1) {
        let d = apply_dk(p.as_ref(), k)?;
        let scale = d.eval_one();
        let kernel = kernel_polynomial(spec, n - 1)?.to_number_field(&field)?;
        let residual = d.checked_sub(&kernel.scale(&scale))?;
        let kernel_ok = residual.is_zero();

        let e = expand_in_p(spec, &weight.checked_mul(&d)?)?;
        let bad = e
            .iter()
            .take(n.saturating_sub(1))
            .position(|x| !x.is_zero());
        if kernel_ok != bad.is_none() {
            return Err(Error::InternalConsistency {
                first: Condition::KernelPolynomial.wire_name().into(),
                second: Condition::Orthogonality.wire_name().into(),
                horizon: n,
            });
        }
        if kernel_verdict.is_none() && !kernel_ok {
            let (deg, c) = leading(&residual);
            kernel_verdict = Some(Verdict::fails(
                n,
                c,
                format!(
                    "D_k P_{n} - D_k P_{n}(1) P*_{} = {residual} (T{deg} coefficient)",
                    n - 1
                ),
            )?);
        }
        if let (None, Some(j)) = (&orth_verdict, bad) {
            orth_verdict = Some(Verdict::fails(
                n,
                e[j].clone(),
                format!("(1-x^2) D_k P_{n} has P_{j} coefficient {}", e[j]),
            )?);
        }
        if kernel_verdict.is_some() && orth_verdict.is_some() {
            break;
        }
    }
    let holds = Verdict::Holds { horizon: n_max };
    Ok((
        kernel_verdict.unwrap_or_else(|| holds.clone()),
        orth_verdict.unwrap_or(holds),
    ))
}

/// `D_k P_n = D_k P_n(1) P*_{n-1}` for `1 ≤ n ≤ n_max`, cross-checked against
/// the orthogonality form.
pub fn check_dk_kernel_property(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Verdict> {
    Ok(check_kernel_pair(spec, k, n_max)?.0)
}

/// `(1-x²) D_k P_n` is orthogonal to `P_0..P_{n-2}` for `1 ≤ n ≤ n_max`.
pub fn check_orthogonality(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Verdict> {
    Ok(check_kernel_pair(spec, k, n_max)?.1)
}

fn kappa_gap(t: &FourierTable, row: usize, j: usize) -> Result<(FieldElement, String)> {
    let kappa = t.kappa(row as i64, j as i64)?;
    let sigma = &t.sigma[row];
    let detail = format!(
        "kappa_{row}({j};{k}) = {kappa} ≠ sigma({row};{k}) = {sigma}",
        k = t.k
    );
    Ok((&kappa - sigma, detail))
}

/// Whether some `j` in `js` has `κ_row(j) = σ(row)`; otherwise the gap at the first `j`.
fn kappa_exists(
    t: &FourierTable,
    row: usize,
    mut js: impl Iterator<Item = usize>,
) -> Result<Option<(FieldElement, String)>> {
    let first = js.next().expect("nonempty range");
    let gap = kappa_gap(t, row, first)?;
    if gap.0.is_zero() {
        return Ok(None);
    }
    for j in js {
        if kappa_gap(t, row, j)?.0.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some((
        gap.0,
        format!("no admissible index; e.g. {}", gap.1),
    )))
}

fn kappa_conditions(t: &FourierTable, n_max: usize, mode: KappaMode) -> Result<Verdict> {
    let k = t.k;
    match (mode, k) {
        (KappaMode::Full, _) | (KappaMode::Weakened, 3..) => {
            let limit = match mode {
                KappaMode::Full => n_max - 4,
                KappaMode::Weakened => n_max - 2,
            };
            for n in 1..=limit {
                let (gap, detail) = kappa_gap(t, n + 2, n - 1)?;
                if !gap.is_zero() {
                    return Verdict::fails(n, gap, detail);
                }
                if mode == KappaMode::Full || n == 1 {
                    let js = (0..=(n - 1) / 2).map(|m| n - 1 - 2 * m);
                    if let Some((gap, detail)) = kappa_exists(t, n + 4, js)? {
                        return Verdict::fails(n, gap, detail);
                    }
                }
            }
        }
        (KappaMode::Weakened, _) => {
            for n in (1..).take_while(|n| 2 * n < n_max) {
                let (gap, detail) = kappa_gap(t, 2 * n + 1, 2 * n - 2)?;
                if !gap.is_zero() {
                    return Verdict::fails(n, gap, detail);
                }
                if 2 * n + 3 <= n_max {
                    let js = (0..n).map(|m| 2 * m);
                    if let Some((gap, detail)) = kappa_exists(t, 2 * n + 3, js)? {
                        return Verdict::fails(n, gap, detail);
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds { horizon: n_max })
}

/// The `κ`/`σ` conditions up to `n_max`; needs `n_max ≥ 5`.
///
/// Full mode requires, for `1 ≤ n ≤ n_max - 4`, `κ_{n+2}(n-1) = σ(n+2)` and
/// `κ_{n+4}(n-1-2m) = σ(n+4)` for some `0 ≤ m ≤ ⌊(n-1)/2⌋`.
///
/// Weakened mode for `k ≥ 3` keeps the first equation for `n ≤ n_max - 2`
/// and the second only at `n = 1`. For `k ≤ 2` it requires
/// `κ_{2n+1}(2n-2) = σ(2n+1)` and `κ_{2n+3}(2m) = σ(2n+3)` for some `m < n`.
pub fn check_kappa_conditions(
    spec: &FamilySpec,
    k: usize,
    n_max: usize,
    mode: KappaMode,
) -> Result<Verdict> {
    check_k(k)?;
    if n_max < KAPPA_MIN_HORIZON {
        return Err(Error::HorizonTooSmall {
            horizon: n_max,
            needed: format!("the kappa conditions need rows up to at least {KAPPA_MIN_HORIZON}"),
        });
    }
    kappa_conditions(fourier_table(spec, k, n_max)?.as_ref(), n_max, mode)
}

/// `4 Σ_{j=1}^n a_{j-1} c_j = n + 1` for every `n ≤ n_max` with `k ∤ n`.
pub fn verify_central_equation(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Verdict> {
    check_k(k)?;
    let mut walk = Rational::zero();
    for n in 1..=n_max {
        walk += spec.coeff_a(n - 1)? * spec.coeff_c(n)?;
        if n % k == 0 {
            continue;
        }
        let lhs = int(4) * &walk;
        let rhs = int(n as i64 + 1);
        if lhs != rhs {
            return Verdict::fails(
                n,
                constant(k, &(&lhs - &rhs))?,
                format!("4 sum a_(j-1) c_j = {} ≠ {}", fmt_q(&lhs), fmt_q(&rhs)),
            );
        }
    }
    Ok(Verdict::Holds { horizon: n_max })
}

/// All condition verdicts for one family, `k` and horizon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub fingerprint: String,
    pub family: FamilySpec,
    pub k: usize,
    pub horizon: usize,
    /// Rows actually examined on the completed family.
    pub checked_rows: usize,
    #[serde(
        with = "opt_rational",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub fitted_alpha: Option<Rational>,
    pub conditions: Vec<ConditionResult>,
}

mod opt_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

impl CharacterizationReport {
    pub fn verdict(&self, condition: Condition) -> Option<&Verdict> {
        self.conditions
            .iter()
            .find(|r| r.condition == condition)
            .map(|r| &r.verdict)
    }

    /// Whether every condition holds.
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|r| r.verdict.holds())
    }

    /// Whether the family is `k`-sieved up to the horizon.
    pub fn sieved(&self) -> bool {
        self.verdict(Condition::SievedDirect)
            .is_some_and(Verdict::holds)
    }
}

impl fmt::Display for CharacterizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.fingerprint)?;
        writeln!(f, "k = {}, horizon = {}", self.k, self.horizon)?;
        if let Some(a) = &self.fitted_alpha {
            writeln!(f, "fitted ultraspherical alpha = {}", fmt_q(a))?;
        }
        for r in &self.conditions {
            writeln!(f, "{:<20} {}", r.condition.wire_name(), r.verdict)?;
        }
        Ok(())
    }
}

/// Evaluates one condition at `rows` on `spec`.
fn evaluate(spec: &FamilySpec, k: usize, rows: usize, condition: Condition) -> Result<Verdict> {
    match condition {
        Condition::SievedDirect => check_sieved_direct(spec, k, rows),
        Condition::Eigenvector => check_eigen(spec, k, rows),
        Condition::AlphaVanishing => check_alpha_vanishing(spec, k, rows),
        Condition::KernelPolynomial => check_dk_kernel_property(spec, k, rows),
        Condition::Orthogonality => check_orthogonality(spec, k, rows),
        Condition::KappaFull => check_kappa_conditions(spec, k, rows, KappaMode::Full),
        Condition::KappaWeakened => check_kappa_conditions(spec, k, rows, KappaMode::Weakened),
        Condition::CentralEquation => verify_central_equation(spec, k, rows),
        Condition::UltrasphericalFit => check_ultraspherical_fit(spec, rows),
    }
}

/// `spec` up to `horizon`, continued by a family that satisfies every condition.
fn completion(spec: &FamilySpec, k: usize, horizon: usize) -> Result<FamilySpec> {
    let tail = if k == 1 {
        FamilySpec::ultraspherical(fitted_alpha(&spec.coeff_c(1)?))?
    } else {
        FamilySpec::chebyshev_t()
    };
    spec.coefficients(horizon)?;
    Ok(spec.spliced(horizon, tail))
}

fn run_all(
    spec: &FamilySpec,
    k: usize,
    rows: usize,
    conditions: &[Condition],
) -> Result<Vec<(Condition, Verdict)>> {
    fourier_table(spec, k, rows)?;
    let pair = conditions.contains(&Condition::KernelPolynomial);
    let (kernel, rest) = rayon::join(
        || pair.then(|| check_kernel_pair(spec, k, rows)).transpose(),
        || {
            conditions
                .par_iter()
                .filter(|c| !matches!(c, Condition::KernelPolynomial | Condition::Orthogonality))
                .map(|&c| Ok((c, evaluate(spec, k, rows, c)?)))
                .collect::<Result<Vec<_>>>()
        },
    );
    let mut out = rest?;
    if let Some((kv, ov)) = kernel? {
        out.push((Condition::KernelPolynomial, kv));
        out.push((Condition::Orthogonality, ov));
    }
    out.sort_by_key(|(c, _)| *c);
    Ok(out)
}

/// Checks each group of equivalent conditions for agreement.
fn disagreement(
    verdicts: &[(Condition, Verdict)],
    groups: &[&[Condition]],
) -> Option<(Condition, Condition)> {
    for group in groups {
        let find = |c: Condition| {
            verdicts
                .iter()
                .find(|(d, _)| *d == c)
                .map(|(_, v)| v.holds())
        };
        let anchor = group[0];
        let expected = find(anchor)?;
        for &c in &group[1..] {
            if find(c) != Some(expected) {
                return Some((anchor, c));
            }
        }
    }
    None
}

fn groups(k: usize) -> Vec<&'static [Condition]> {
    const TRIVIAL: [Condition; 4] = [
        Condition::SievedDirect,
        Condition::Eigenvector,
        Condition::AlphaVanishing,
        Condition::CentralEquation,
    ];
    if k == 1 {
        vec![&TRIVIAL, &Condition::ULTRASPHERICAL]
    } else {
        vec![&Condition::SIEVED]
    }
}

/// Runs every condition and cross-validates them.
///
/// The family is kept up to `horizon` and continued by a family satisfying
/// all conditions (`c_n = ½` for `k ≥ 2`, the fitted ultraspherical family for
/// `k = 1`). Every condition is then examined on `horizon + HORIZON_SLACK`
/// rows, so each of them constrains exactly `c_1..c_horizon`. A failing
/// index may therefore exceed `horizon`.
///
/// Conditions that should be equivalent but disagree yield
/// [`Error::InternalConsistency`] with the smallest horizon that exhibits it.
pub fn characterization_report(
    spec: &FamilySpec,
    k: usize,
    horizon: usize,
) -> Result<CharacterizationReport> {
    check_k(k)?;
    if horizon == 0 {
        return Err(Error::HorizonTooSmall {
            horizon,
            needed: "at least one coefficient must be examined".into(),
        });
    }
    let mut conditions: Vec<Condition> = Condition::SIEVED.to_vec();
    let fitted = if k == 1 {
        conditions.push(Condition::UltrasphericalFit);
        Some(fitted_alpha(&spec.coeff_c(1)?))
    } else {
        None
    };
    let rows = horizon + HORIZON_SLACK;
    let completed = completion(spec, k, horizon)?;
    let verdicts = run_all(&completed, k, rows, &conditions)?;
    let groups = groups(k);
    if let Some((first, second)) = disagreement(&verdicts, &groups) {
        let smallest = (1..=horizon)
            .find(|&h| {
                let Ok(c) = completion(spec, k, h) else {
                    return false;
                };
                let a = evaluate(&c, k, h + HORIZON_SLACK, first).map(|v| v.holds());
                let b = evaluate(&c, k, h + HORIZON_SLACK, second).map(|v| v.holds());
                matches!((a, b), (Ok(a), Ok(b)) if a != b)
            })
            .unwrap_or(horizon);
        return Err(Error::InternalConsistency {
            first: first.wire_name().into(),
            second: second.wire_name().into(),
            horizon: smallest,
        });
    }
    let conditions = verdicts
        .into_iter()
        .map(|(condition, verdict)| ConditionResult {
            condition,
            verdict: match verdict {
                Verdict::Holds { .. } => Verdict::Holds { horizon },
                fails => fails,
            },
        })
        .collect();
    Ok(CharacterizationReport {
        fingerprint: spec.fingerprint(),
        family: spec.clone(),
        k,
        horizon,
        checked_rows: rows,
        fitted_alpha: fitted,
        conditions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ultra_half() -> FamilySpec {
        FamilySpec::ultraspherical(rat(1, 2)).unwrap()
    }

    fn witness_q(v: &Verdict) -> (usize, Rational) {
        match v {
            Verdict::FailsAt { n, witness } => (
                *n,
                witness
                    .value
                    .as_rational()
                    .expect("rational witness")
                    .clone(),
            ),
            Verdict::Holds { .. } => panic!("expected a failure"),
        }
    }

    #[test]
    fn direct_examples() {
        assert!(check_sieved_direct(&ultra_half().sieve(2), 2, 40)
            .unwrap()
            .holds());
        let v = check_sieved_direct(&ultra_half(), 2, 40).unwrap();
        assert_eq!(witness_q(&v), (1, rat(1, 4)));
        for k in 1..=6 {
            assert!(check_sieved_direct(&FamilySpec::chebyshev_t(), k, 40)
                .unwrap()
                .holds());
        }
        assert_eq!(
            check_sieved_direct(&ultra_half(), 0, 4).unwrap_err(),
            Error::ZeroK
        );
    }

    #[test]
    fn eigen_examples() {
        let sieved = ultra_half().sieve(2);
        assert!(check_eigen(&sieved, 2, 30).unwrap().holds());
        let p3 = crate::sequence::polynomial(&sieved, 3).unwrap();
        assert!(p3.eval_at_abs_cos(2).unwrap().is_zero());
        let v = check_eigen(&ultra_half(), 2, 30).unwrap();
        assert_eq!(witness_q(&v).0, 2);
        assert!(
            check_eigen(&FamilySpec::ultraspherical(rat(3, 7)).unwrap(), 1, 20)
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn alpha_examples() {
        let spec = FamilySpec::ultraspherical(int(1)).unwrap().sieve(3);
        assert!(check_alpha_vanishing(&spec, 3, 30).unwrap().holds());
        let v = check_alpha_vanishing(&ultra_half(), 2, 30).unwrap();
        assert_eq!(witness_q(&v), (1, rat(2, 3)));
        for k in 2..=5 {
            assert!(check_alpha_vanishing(&FamilySpec::chebyshev_t(), k, 30)
                .unwrap()
                .holds());
        }
    }

    #[test]
    fn kernel_examples() {
        assert!(check_dk_kernel_property(&ultra_half().sieve(2), 2, 20)
            .unwrap()
            .holds());
        let one = FamilySpec::ultraspherical(int(1)).unwrap();
        assert!(check_dk_kernel_property(&one, 1, 20).unwrap().holds());
        // c_2 sits at a multiple of k = 2, so the family is still 2-sieved
        let even = FamilySpec::chebyshev_t()
            .with_override(2, rat(1, 3))
            .unwrap();
        assert!(check_dk_kernel_property(&even, 2, 20).unwrap().holds());
        let odd = FamilySpec::chebyshev_t()
            .with_override(3, rat(1, 3))
            .unwrap();
        let (kv, ov) = check_kernel_pair(&odd, 2, 20).unwrap();
        assert!(!kv.holds() && !ov.holds());
    }

    #[test]
    fn kappa_examples() {
        let sieved = ultra_half().sieve(2);
        assert!(check_kappa_conditions(&sieved, 2, 24, KappaMode::Full)
            .unwrap()
            .holds());
        let v = check_kappa_conditions(&ultra_half(), 2, 24, KappaMode::Full).unwrap();
        assert_eq!(witness_q(&v), (1, rat(1, 2) + rat(1, 6)));
        let one = FamilySpec::ultraspherical(int(1)).unwrap();
        assert!(check_kappa_conditions(&one, 1, 24, KappaMode::Full)
            .unwrap()
            .holds());
        assert!(matches!(
            check_kappa_conditions(&one, 1, 4, KappaMode::Full),
            Err(Error::HorizonTooSmall { horizon: 4, .. })
        ));
        assert!("sideways".parse::<KappaMode>().is_err());
        assert_eq!(
            "weakened".parse::<KappaMode>().unwrap(),
            KappaMode::Weakened
        );
    }

    #[test]
    fn central_examples() {
        assert!(verify_central_equation(&ultra_half().sieve(2), 2, 40)
            .unwrap()
            .holds());
        for k in 1..=6 {
            assert!(verify_central_equation(&FamilySpec::chebyshev_t(), k, 40)
                .unwrap()
                .holds());
        }
        let v = verify_central_equation(&ultra_half(), 2, 40).unwrap();
        assert_eq!(witness_q(&v), (1, int(-1)));
    }

    #[test]
    fn report_examples() {
        let r = characterization_report(&FamilySpec::chebyshev_t(), 3, 24).unwrap();
        assert!(r.all_hold() && r.sieved());
        let r = characterization_report(&ultra_half(), 2, 24).unwrap();
        assert!(r.conditions.iter().all(|c| !c.verdict.holds()));
        assert_eq!(
            r.verdict(Condition::SievedDirect).unwrap().failing_index(),
            Some(1)
        );
        let parent = FamilySpec::table(vec![
            rat(1, 3),
            rat(2, 5),
            rat(5, 8),
            rat(1, 7),
            rat(3, 4),
            rat(2, 9),
        ])
        .unwrap();
        let r = characterization_report(&parent.sieve(4), 4, 24).unwrap();
        assert!(r.all_hold());
    }

    #[test]
    fn report_k_one() {
        let r = characterization_report(&FamilySpec::ultraspherical(rat(5, 3)).unwrap(), 1, 12)
            .unwrap();
        assert!(r.all_hold());
        assert_eq!(r.fitted_alpha, Some(rat(5, 3)));
        let bent = FamilySpec::ultraspherical(int(1))
            .unwrap()
            .with_override(4, rat(1, 3))
            .unwrap();
        let r = characterization_report(&bent, 1, 12).unwrap();
        assert!(r.sieved());
        assert!(!r.verdict(Condition::UltrasphericalFit).unwrap().holds());
        assert!(!r.verdict(Condition::KappaFull).unwrap().holds());
    }

    #[test]
    fn report_json_round_trip() {
        let r = characterization_report(&ultra_half(), 2, 10).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains(r#""condition":"thm3.1-iii","verdict":"fails","n":1"#));
        assert!(text.contains(r#""field":"Q(cos(pi/2))""#));
        let back: CharacterizationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn horizon_limits_claims() {
        let late = FamilySpec::chebyshev_t()
            .with_override(13, rat(1, 3))
            .unwrap();
        assert!(characterization_report(&late, 2, 12).unwrap().all_hold());
        let r = characterization_report(&late, 2, 13).unwrap();
        assert!(r.conditions.iter().all(|c| !c.verdict.holds()));
    }
}
