//! Sparse bivariate (and, internally, trivariate) polynomials over `Q`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::univariate::UniPoly;
use super::{PolyError, DEGREE_CAP};

/// `Σ a_ij x^i y^j` with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    /// Sums the given `(i, j, a_ij)` terms (repeats add up) and drops zeros.
    /// Rejects total degree above [`DEGREE_CAP`].
    pub fn from_terms<I>(terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (u32, u32, BigRational)>,
    {
        let mut map: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for (i, j, c) in terms {
            if i as u64 + j as u64 > DEGREE_CAP as u64 {
                return Err(PolyError::DegreeCap { degree: i as u64 + j as u64, cap: DEGREE_CAP });
            }
            *map.entry((i, j)).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(BiPoly { terms: map })
    }

    /// Terms given as `(i, j, numerator, denominator)`.
    pub fn from_fractions<I>(terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (u32, u32, i64, i64)>,
    {
        let mut out = Vec::new();
        for (i, j, num, den) in terms {
            if den == 0 {
                return Err(PolyError::ZeroDenominator { i, j });
            }
            out.push((i, j, BigRational::new(BigInt::from(num), BigInt::from(den))));
        }
        BiPoly::from_terms(out)
    }

    /// Integer coefficients, for examples and tests.
    pub fn from_ints(terms: &[(u32, u32, i64)]) -> Result<Self, PolyError> {
        BiPoly::from_fractions(terms.iter().map(|&(i, j, c)| (i, j, c, 1)))
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// The projection `(x, y) ↦ x`.
    pub fn x() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((1, 0), BigRational::one());
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigRational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * pow(x, i) * pow(y, j);
        }
        acc
    }

    /// Floating-point evaluation, for sampling and plotting only.
    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c.to_f64().unwrap_or(f64::NAN) * libm::pow(x, i as f64) * libm::pow(y, j as f64)
            })
            .sum()
    }

    /// `p(x0, y)` as a polynomial in `y`.
    pub fn at_x(&self, x0: &BigRational) -> UniPoly {
        let mut c = alloc::vec![BigRational::zero(); self.degree_y().map_or(0, |d| d as usize + 1)];
        for (&(i, j), a) in &self.terms {
            c[j as usize] += a * pow(x0, i);
        }
        UniPoly::new(c)
    }

    /// `p(x, x)`.
    pub fn diagonal(&self) -> UniPoly {
        let mut c = alloc::vec![BigRational::zero(); self.degree().map_or(0, |d| d as usize + 1)];
        for (&(i, j), a) in &self.terms {
            c[(i + j) as usize] += a;
        }
        UniPoly::new(c)
    }

    /// The polynomial in `x` when `p` does not depend on `y`.
    pub fn as_univariate_x(&self) -> Option<UniPoly> {
        if self.degree_y().unwrap_or(0) > 0 {
            return None;
        }
        Some(self.at_y0())
    }

    fn at_y0(&self) -> UniPoly {
        let mut c = alloc::vec![BigRational::zero(); self.degree_x().map_or(0, |d| d as usize + 1)];
        for (&(i, j), a) in &self.terms {
            if j == 0 {
                c[i as usize] += a;
            }
        }
        UniPoly::new(c)
    }
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::write_terms(
            f,
            self.terms.iter().map(|(&(i, j), c)| (c.clone(), alloc::vec![(i, 'x'), (j, 'y')])),
        )
    }
}

/// Polynomials in `x, y, z`, used to expand both sides of the
/// self-distributivity identity.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct TriPoly {
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl TriPoly {
    fn one() -> Self {
        TriPoly::monomial([0, 0, 0])
    }

    pub(crate) fn monomial(e: [u32; 3]) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(e, BigRational::one());
        TriPoly { terms }
    }

    /// `p(u, v)` where `u`, `v` are the variables with the given indices.
    pub(crate) fn from_bipoly(p: &BiPoly, u: usize, v: usize) -> Self {
        let mut out = TriPoly::default();
        for (&(i, j), c) in &p.terms {
            let mut e = [0u32; 3];
            e[u] += i;
            e[v] += j;
            out.add_term(e, c.clone());
        }
        out
    }

    fn add_term(&mut self, e: [u32; 3], c: BigRational) {
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn mul(&self, other: &TriPoly) -> TriPoly {
        let mut out = TriPoly::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
            }
        }
        out
    }

    fn powers(&self, max: u32) -> Vec<TriPoly> {
        let mut out = Vec::with_capacity(max as usize + 1);
        out.push(TriPoly::one());
        for k in 1..=max as usize {
            let next = out[k - 1].mul(self);
            out.push(next);
        }
        out
    }

    /// `p(a, b)` for trivariate arguments.
    pub(crate) fn compose(p: &BiPoly, a: &TriPoly, b: &TriPoly) -> TriPoly {
        let pa = a.powers(p.degree_x().unwrap_or(0));
        let pb = b.powers(p.degree_y().unwrap_or(0));
        let mut out = TriPoly::default();
        for (&(i, j), c) in &p.terms {
            for (e, t) in pa[i as usize].mul(&pb[j as usize]).terms {
                out.add_term(e, t * c);
            }
        }
        out
    }

    /// Some monomial where `self` and `other` differ, with both coefficients.
    pub(crate) fn first_difference(&self, other: &TriPoly) -> Option<([u32; 3], BigRational, BigRational)> {
        let keys: alloc::collections::BTreeSet<&[u32; 3]> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|e| {
            let a = self.terms.get(e).cloned().unwrap_or_else(BigRational::zero);
            let b = other.terms.get(e).cloned().unwrap_or_else(BigRational::zero);
            (a != b).then_some((*e, a, b))
        })
    }
}
