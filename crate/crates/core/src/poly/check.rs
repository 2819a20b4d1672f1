use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bivariate::{BiPoly, TriPoly};
use super::univariate::UniPoly;

/// The identities tested by [`check_polynomial_quandle`], in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuandleStep {
    /// `f(0, 0) = 0`, i.e. `a_00 = 0`.
    ConstantTerm,
    /// `f(0, y) ≡ 0`, i.e. every `a_0j = 0`.
    VanishesAtZero,
    /// `f(1, y) ≡ 1`.
    FixesOne,
    /// `f(x, x) ≡ x`.
    Idempotent,
    /// `f(f(x, y), z) ≡ f(f(x, z), f(y, z))`.
    Distributive,
}

impl QuandleStep {
    pub const ALL: [QuandleStep; 5] = [
        QuandleStep::ConstantTerm,
        QuandleStep::VanishesAtZero,
        QuandleStep::FixesOne,
        QuandleStep::Idempotent,
        QuandleStep::Distributive,
    ];

    /// 1-based position in the pipeline.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            QuandleStep::ConstantTerm => "constant_term",
            QuandleStep::VanishesAtZero => "vanishes_at_zero",
            QuandleStep::FixesOne => "fixes_one",
            QuandleStep::Idempotent => "idempotent",
            QuandleStep::Distributive => "distributive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuandleVerdict {
    /// Every step holds and `p = x`.
    ForcedTrivial { passed: Vec<QuandleStep> },
    /// `step` fails; `detail` names the offending coefficient or identity.
    Violated { step: QuandleStep, passed: Vec<QuandleStep>, detail: String },
    /// Every step holds but `p ≠ x`. No such input is known; the variant
    /// exists so that one would be reported rather than misclassified.
    Unresolved { passed: Vec<QuandleStep>, detail: String },
}

impl QuandleVerdict {
    pub fn is_forced_trivial(&self) -> bool {
        matches!(self, QuandleVerdict::ForcedTrivial { .. })
    }

    pub fn passed(&self) -> &[QuandleStep] {
        match self {
            QuandleVerdict::ForcedTrivial { passed }
            | QuandleVerdict::Violated { passed, .. }
            | QuandleVerdict::Unresolved { passed, .. } => passed,
        }
    }
}

/// Rational sample points used to refute distributivity before expanding it.
const PROBES: [(i64, i64); 4] = [(1, 3), (1, 2), (3, 4), (2, 7)];

fn distributivity_counterexample(p: &BiPoly) -> Option<String> {
    let pts: Vec<BigRational> =
        PROBES.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
    for x in &pts {
        for y in &pts {
            let xy = p.eval(x, y);
            for z in &pts {
                let lhs = p.eval(&xy, z);
                let rhs = p.eval(&p.eval(x, z), &p.eval(y, z));
                if lhs != rhs {
                    return Some(format!(
                        "f(f(x,y),z) = {lhs} but f(f(x,z),f(y,z)) = {rhs} at (x,y,z) = ({x}, {y}, {z})"
                    ));
                }
            }
        }
    }
    let z = TriPoly::monomial([0, 0, 1]);
    let lhs = TriPoly::compose(p, &TriPoly::from_bipoly(p, 0, 1), &z);
    let rhs =
        TriPoly::compose(p, &TriPoly::from_bipoly(p, 0, 2), &TriPoly::from_bipoly(p, 1, 2));
    lhs.first_difference(&rhs).map(|(e, a, b)| {
        format!(
            "coefficient of x^{} y^{} z^{} is {a} in f(f(x,y),z) but {b} in f(f(x,z),f(y,z))",
            e[0], e[1], e[2]
        )
    })
}

/// Runs the endpoint, idempotency and self-distributivity identities on
/// `p` in exact arithmetic and reports the first failure.
pub fn check_polynomial_quandle(p: &BiPoly) -> QuandleVerdict {
    let mut passed = Vec::new();
    let violated = |step, passed: &Vec<QuandleStep>, detail| QuandleVerdict::Violated {
        step,
        passed: passed.clone(),
        detail,
    };

    let a00 = p.coeff(0, 0);
    if !a00.is_zero() {
        return violated(QuandleStep::ConstantTerm, &passed, format!("a_00 = {a00} != 0"));
    }
    passed.push(QuandleStep::ConstantTerm);

    if let Some((_, j, c)) = p.terms().find(|&(i, _, _)| i == 0) {
        return violated(QuandleStep::VanishesAtZero, &passed, format!("a_0{j} = {c} != 0"));
    }
    passed.push(QuandleStep::VanishesAtZero);

    let at_one = p.at_x(&BigRational::one());
    if at_one != UniPoly::one() {
        return violated(QuandleStep::FixesOne, &passed, format!("f(1,y) = {at_one} is not 1"));
    }
    passed.push(QuandleStep::FixesOne);

    let diag = p.diagonal();
    if diag != UniPoly::x() {
        return violated(QuandleStep::Idempotent, &passed, format!("f(x,x) = {diag} is not x"));
    }
    passed.push(QuandleStep::Idempotent);

    if let Some(detail) = distributivity_counterexample(p) {
        return violated(QuandleStep::Distributive, &passed, detail);
    }
    passed.push(QuandleStep::Distributive);

    if *p == BiPoly::x() {
        QuandleVerdict::ForcedTrivial { passed }
    } else {
        QuandleVerdict::Unresolved {
            passed,
            detail: format!("{p} satisfies every identity but is not x"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RackFailure {
    /// `p` involves `y`.
    DependsOnY { degree: u32 },
    /// `{p(0), p(1)} ≠ {0, 1}`.
    Endpoints { at_zero: BigRational, at_one: BigRational },
    /// `p'` changes sign at this many points of `(0, 1)`.
    NotMonotone { sign_changes: usize },
}

impl fmt::Display for RackFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RackFailure::DependsOnY { degree } => write!(f, "depends on y (y-degree {degree})"),
            RackFailure::Endpoints { at_zero, at_one } => {
                write!(f, "endpoint values p(0) = {at_zero}, p(1) = {at_one} are not {{0, 1}}")
            }
            RackFailure::NotMonotone { sign_changes } => {
                write!(f, "derivative changes sign {sign_changes} time(s) in (0, 1)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RackVerdict {
    /// `p(x, y) = p(x)` is a bijection of `[0, 1]`.
    Valid { increasing: bool },
    Rejected(RackFailure),
}

impl RackVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, RackVerdict::Valid { .. })
    }
}

/// Decides whether `p` is a rack operation on `[0, 1]` of the form
/// `p(x, y) = p(x)`. Such an operation is automatically self-distributive,
/// so the question is whether `p` is a bijection of the interval.
pub fn check_polynomial_rack(p: &BiPoly) -> RackVerdict {
    let Some(u) = p.as_univariate_x() else {
        return RackVerdict::Rejected(RackFailure::DependsOnY { degree: p.degree_y().unwrap_or(0) });
    };
    let zero = BigRational::zero();
    let one = BigRational::one();
    let (at_zero, at_one) = (u.eval(&zero), u.eval(&one));
    let increasing = at_zero == zero && at_one == one;
    if !(increasing || (at_zero == one && at_one == zero)) {
        return RackVerdict::Rejected(RackFailure::Endpoints { at_zero, at_one });
    }
    // p is strictly monotone on [0, 1] iff p' has no root of odd
    // multiplicity inside (0, 1).
    let odd: UniPoly = u
        .derivative()
        .squarefree_decomposition()
        .into_iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(UniPoly::one(), |acc, (g, _)| acc.mul(&g));
    let sign_changes = odd.count_roots_between(&zero, &one);
    if sign_changes > 0 {
        return RackVerdict::Rejected(RackFailure::NotMonotone { sign_changes });
    }
    RackVerdict::Valid { increasing }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_ints(terms).unwrap()
    }

    #[test]
    fn identity_is_forced_trivial() {
        let v = check_polynomial_quandle(&BiPoly::x());
        assert_eq!(v, QuandleVerdict::ForcedTrivial { passed: QuandleStep::ALL.to_vec() });
    }

    #[test]
    fn documented_rejections() {
        let v = check_polynomial_quandle(&p(&[(0, 1, 2), (1, 0, -1)]));
        let QuandleVerdict::Violated { step, detail, .. } = v else { panic!() };
        assert_eq!(step, QuandleStep::VanishesAtZero);
        assert_eq!(detail, "a_01 = 2 != 0");

        let v = check_polynomial_quandle(&p(&[(2, 0, 1)]));
        let QuandleVerdict::Violated { step, passed, .. } = v else { panic!() };
        assert_eq!(step, QuandleStep::Idempotent);
        assert_eq!(passed.len(), 3);

        let v = check_polynomial_quandle(&p(&[(0, 0, 1), (1, 0, 1)]));
        assert!(matches!(v, QuandleVerdict::Violated { step: QuandleStep::ConstantTerm, .. }));

        let v = check_polynomial_quandle(&p(&[(1, 0, 1), (1, 1, 1)]));
        assert!(matches!(v, QuandleVerdict::Violated { step: QuandleStep::FixesOne, .. }));
    }

    #[test]
    fn endpoint_identities_alone_do_not_force_triviality() {
        // x + x(1 − x)(x − y) vanishes at x = 0, is 1 at x = 1 and x on the
        // diagonal, but still depends on y; self-distributivity rejects it.
        let q = p(&[(1, 0, 1), (2, 0, 1), (3, 0, -1), (1, 1, -1), (2, 1, 1)]);
        let v = check_polynomial_quandle(&q);
        let QuandleVerdict::Violated { step, passed, .. } = v else { panic!("{v:?}") };
        assert_eq!(step, QuandleStep::Distributive);
        assert_eq!(passed.len(), 4);
    }

    #[test]
    fn rack_examples() {
        assert_eq!(check_polynomial_rack(&p(&[(3, 0, 1)])), RackVerdict::Valid { increasing: true });
        assert_eq!(
            check_polynomial_rack(&p(&[(0, 0, 1), (1, 0, -1)])),
            RackVerdict::Valid { increasing: false }
        );
        assert_eq!(
            check_polynomial_rack(&p(&[(1, 0, 1), (0, 1, 1)])),
            RackVerdict::Rejected(RackFailure::DependsOnY { degree: 1 })
        );
        assert!(matches!(
            check_polynomial_rack(&p(&[(2, 0, 2)])),
            RackVerdict::Rejected(RackFailure::Endpoints { .. })
        ));
        // 4x³ − 6x² + 3x = (2x−1)³/2 + 1/2: flat at 1/2 but strictly increasing.
        assert!(check_polynomial_rack(&p(&[(3, 0, 4), (2, 0, -6), (1, 0, 3)])).is_valid());
        // x + 4x(2x − 1)(x − 1) leaves the interval and comes back.
        let wiggle = p(&[(1, 0, 1), (3, 0, 8), (2, 0, -12), (1, 0, 4)]);
        assert!(matches!(
            check_polynomial_rack(&wiggle),
            RackVerdict::Rejected(RackFailure::NotMonotone { sign_changes: 2 })
        ));
    }
}
