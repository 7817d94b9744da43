//! Composed sums and products of univariate and bivariate polynomials,
//! computed through resultants and through Newton–Puiseux branch expansions.
//!
//! The crate is organised bottom-up:
//!
//! * [`fields`]: exact coefficient fields (Q, Q(ζ_N), F_{p^e}).
//! * [`unipoly`] / [`bipoly`]: polynomial arithmetic, Newton polygons.
//! * [`puiseux`] / [`newton_puiseux`]: truncated Puiseux series and branch
//!   expansion of monic bivariate polynomials.
//! * [`compose_uni`] / [`compose_bi`]: composed sums and products.
//! * [`homog`]: homogeneous bivariate polynomials and decompositions.

pub mod error;
pub mod fields;
pub mod ring;
pub mod unipoly;
pub mod bipoly;
pub mod puiseux;
pub mod newton_puiseux;
pub mod compose_uni;
pub mod compose_bi;
pub mod homog;

pub use error::{Error, Result};
pub use fields::{build_extension, nth_root, primitive_root_of_unity, Fe, Field, FieldConfig, Rational};
pub use unipoly::UniPoly;
pub use compose_uni::{
    associate, associate_units, check_irreducibility_criterion, composed_mul_uni, composed_sum_uni, composed_uni, decompose_uni,
    decompose_uni_with, AlternateDecomposition, DecomposeOptions, DecompositionResult, DiamondKind, IrreducibilityReport,
};
pub use compose_bi::{
    agrees_with, composed_mul, composed_mul_exact, composed_product, composed_seeded, composed_sum, composed_sum_exact, substitute, BiOp,
    ComposedResult,
};
pub use homog::{
    coefficient_subfield_degree, degree_one_group_table, homog_compose, homog_decompose, homog_decompose_with, is_associate, membership,
    unit_element, unit_value, GroupTableReport, HomogAlternate, HomogDecomposition, HomogeneousElement, Membership,
};
pub use newton_puiseux::{conjugate_closure, expand_branches, expand_branches_seeded, verify_product};
pub use puiseux::{BranchSet, PuiseuxSeries, Q64};
pub use bipoly::{BivariatePoly, CompositionMode, LaurentPoly, NewtonEdge, NewtonPolygon, XyPoly};

/// Render `coeff*monomial` terms as a signed sum. An empty monomial marks
/// the constant term; non-numeric coefficients are parenthesised.
pub(crate) fn fmt_terms<I: Iterator<Item = (Fe, String)>>(terms: I) -> String {
    let terms: Vec<(Fe, String)> = terms.filter(|(c, _)| !c.is_zero()).collect();
    if terms.is_empty() {
        return "0".into();
    }
    let single = terms.len() == 1;
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative_number();
        let mag = if neg { -&c } else { c };
        let coeff = if mag.is_simple() || (single && mono.is_empty()) {
            mag.to_string()
        } else {
            format!("({mag})")
        };
        let body = if mono.is_empty() {
            coeff
        } else if mag.is_one() {
            mono
        } else {
            format!("{coeff}*{mono}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}
