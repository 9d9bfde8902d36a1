//! Shared derived constants of the coefficient field.

use super::{d_ratexpr, Gen, RatExpr};

/// A′/A.
pub fn a_ratio() -> RatExpr {
    RatExpr::gen(Gen::A1)
        .div(&RatExpr::gen(Gen::A))
        .expect("A nonzero")
}

/// (A′/A)² .
pub fn a_ratio_sq() -> RatExpr {
    a_ratio().pow(2)
}

/// (A′/A)′ = A″/A − (A′/A)².
pub fn a_ratio_prime() -> RatExpr {
    &RatExpr::gen(Gen::A2)
        .div(&RatExpr::gen(Gen::A))
        .expect("A nonzero")
        - &a_ratio_sq()
}

/// Σ = 2(A′/A)² − (A′/A)′, the recurring combination of the pipelines.
pub fn sigma() -> RatExpr {
    &(&RatExpr::int(2) * &a_ratio_sq()) - &a_ratio_prime()
}

/// Σ′ (one derivative of Σ).
pub fn sigma_prime() -> RatExpr {
    d_ratexpr(&sigma()).expect("within the order bound")
}
