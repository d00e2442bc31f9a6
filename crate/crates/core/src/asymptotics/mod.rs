//! Circle-method main terms for `a_p(n)`, the constant `c_p`, and checks of
//! the identities relating them to Dedekind, Ramanujan and character sums.

mod constants;
mod singular;
mod verify;

pub use constants::{
    class_number, class_number_checked, cp_all, cp_constant, g_sum, parity_allows, s_sum, s_sum_value, t_sum,
    ClassNumberMethod, CpReport, CpValue, CpVariant,
};
pub use singular::{
    a_p, approx_almkvist, approx_garvan, approx_garvan_with, phi_term, shift, twisted_divisor_sum, ApproxMethod,
    ApproxReport, SnappedInteger, EXACT_LIMIT,
};
pub use verify::{
    conjecture2_delta, remark31_scan, verify_conjecture1, verify_conjecture2, verify_intro_identity, verify_prop21,
    verify_theorem33, ConjectureReport, ExponentReading, IntroReport, Prop21Report, Remark31Report, Remark31Row,
    TransformCase, TransformReport,
};
