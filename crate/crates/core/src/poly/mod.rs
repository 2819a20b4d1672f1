//! Exact checks for polynomial quandle and rack operations on `[0, 1]`.
//!
//! Every right multiplication of a quandle on the closed unit interval is a
//! homeomorphism, so it fixes or swaps the endpoints; `R_0` fixes `0` by
//! idempotency, and continuity in `y` makes every `R_y` fix both.
//! For a polynomial `f = Σ a_ij x^i y^j` this forces `a_00 = 0`,
//! `f(0, y) ≡ 0`, `f(1, y) ≡ 1` and `f(x, x) ≡ x`.
//! [`check_polynomial_quandle`] tests those identities in order and then
//! self-distributivity, all in exact rational arithmetic.
//! [`check_polynomial_rack`] decides whether a polynomial is a rack
//! operation of the form `f(x, y) = f(x)` with `f` a bijection of `[0, 1]`.
//!
//! The same argument applies to an analytic `f` whose Taylor series at the
//! origin converges on the unit square; that case is not mechanized here.

mod bivariate;
mod check;
mod univariate;

pub use bivariate::BiPoly;
pub use check::{
    check_polynomial_quandle, check_polynomial_rack, QuandleStep, QuandleVerdict, RackFailure,
    RackVerdict,
};
pub use univariate::UniPoly;

use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

/// Largest accepted total degree.
pub const DEGREE_CAP: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u64, cap: u32 },
    #[error("coefficient of x^{i} y^{j} has a zero denominator")]
    ZeroDenominator { i: u32, j: u32 },
}

/// Writes `c₀·m₀ + c₁·m₁ + …`, omitting unit coefficients and zero powers.
fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (BigRational, alloc::vec::Vec<(u32, char)>)>,
{
    let mut first = true;
    for (c, vars) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let mut wrote = false;
        if !mag.is_one() || vars.iter().all(|&(e, _)| e == 0) {
            write!(f, "{mag}")?;
            wrote = true;
        }
        for (e, v) in vars.into_iter().filter(|&(e, _)| e > 0) {
            if wrote {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
            wrote = true;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
