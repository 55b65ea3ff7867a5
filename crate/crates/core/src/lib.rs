//! Exact arithmetic for random walk polynomial sequences and their sieved
//! variants.
//!
//! A random walk polynomial sequence is fixed by coefficients `c_n ∈ (0,1)`
//! through `x P_n = (1 - c_n) P_{n+1} + c_n P_{n-1}`, `P_0 = 1`, `P_1 = x`.
//! Its `k`-sieved version replaces `c_n` by `½` whenever `k ∤ n`. The crate
//! provides
//!
//! - exact scalars in ℚ and in the real cyclotomic fields ℚ(cos(π/k))
//!   ([`scalar`]),
//! - polynomials in the Chebyshev T-basis ([`cheb`]),
//! - families, weights and kernel polynomials ([`family`], [`sequence`]),
//! - the explicit T-expansion of sieved polynomials ([`expansion`]),
//! - the operators `D_k`, `A_k` and their Fourier coefficients ([`operators`]),
//! - finite-horizon characterizations of sievedness ([`characterize`]),
//! - the configuration and rendering layer of the `rwps` binary ([`cli`]).
//!
//! ```
//! use rwps::{sieved_poly_expansion, FamilySpec, rat};
//!
//! let parent = FamilySpec::ultraspherical(rat(1, 2)).unwrap();
//! let p5 = sieved_poly_expansion(&parent, 2, 5).unwrap();
//! assert_eq!(p5.to_string(), "1/2*T5 + 1/6*T3 + 1/3*T1");
//! ```

pub mod characterize;
pub mod cheb;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod family;
pub mod operators;
pub mod rational;
pub mod scalar;
pub mod sequence;

pub use characterize::{
    characterization_report, check_alpha_vanishing, check_dk_kernel_property, check_eigen,
    check_kappa_conditions, check_kernel_pair, check_orthogonality, check_sieved_direct,
    check_ultraspherical_fit, verify_central_equation, CharacterizationReport, Condition,
    KappaMode, Verdict, Witness,
};
pub use cheb::{u_in_t, ChebPoly, FieldPoly, QPoly};
pub use error::{Error, Result};
pub use expansion::{
    p_via_partial_sums, pq_tables, r_coeffs, sieved_poly_expansion, sieved_poly_expansions,
    ultraspherical_rp, ExpansionTables,
};
pub use family::FamilySpec;
pub use operators::{
    alpha_closed_forms, alpha_table, apply_ak, apply_dk, fourier_table, kappa_recurrence_residual,
    kappa_table, product_rule_residual, sigma_val, FourierTable,
};
pub use rational::{format_rational, half, int, parse_rational, rat, Rational};
pub use scalar::{
    abs_cos, cheb_value, cheb_values, minimal_polynomial, number_field, sin_squared, ChebKind,
    FieldElement, MinPoly, NumberField, Scalar,
};
pub use sequence::{
    c_star, expand_in_p, kernel_polynomial, polynomial, polynomials, weight_h, WeightTable,
};
