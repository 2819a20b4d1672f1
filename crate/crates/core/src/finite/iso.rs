use alloc::vec::Vec;

use super::perm;
use super::{FiniteError, FiniteQuandle};

/// Default size bound for [`are_isomorphic`].
pub const ISO_SEARCH_BOUND: usize = 16;

/// Per-element data that any isomorphism must preserve.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Profile {
    idempotent: bool,
    orbit_size: usize,
    /// `#{b : a ▷ b = a}`
    stabilizing: usize,
    /// `#{b : b ▷ a = b}`, the fixed points of `R_a`
    fixed_by: usize,
    /// Cycle type of the column `R_a` (empty when not a permutation)
    cycle_type: Vec<usize>,
}

fn profiles(q: &FiniteQuandle) -> Vec<Profile> {
    let n = q.size();
    let gens: Vec<_> = (0..n).filter_map(|b| q.right_mul(b).ok()).collect();
    let mut orbit_size = alloc::vec![1usize; n];
    if gens.len() == n {
        for orbit in perm::orbits(n, &gens) {
            for &i in &orbit {
                orbit_size[i] = orbit.len();
            }
        }
    }
    (0..n)
        .map(|a| Profile {
            idempotent: q.op(a, a) == a,
            orbit_size: orbit_size[a],
            stabilizing: (0..n).filter(|&b| q.op(a, b) == a).count(),
            fixed_by: (0..n).filter(|&b| q.op(b, a) == b).count(),
            cycle_type: q.right_mul(a).map(|p| p.cycle_type()).unwrap_or_default(),
        })
        .collect()
}

/// True iff `phi` is a bijection with `phi(a ▷ b) = phi(a) ▷ phi(b)` for all
/// `a, b`.
pub fn check_isomorphism(q1: &FiniteQuandle, q2: &FiniteQuandle, phi: &[usize]) -> bool {
    let n = q1.size();
    if q2.size() != n || phi.len() != n {
        return false;
    }
    let mut hit = alloc::vec![false; n];
    for &v in phi {
        if v >= n || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    (0..n).all(|a| (0..n).all(|b| phi[q1.op(a, b)] == q2.op(phi[a], phi[b])))
}

/// Backtracking isomorphism search with the default size bound.
pub fn are_isomorphic(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
) -> Result<Option<Vec<usize>>, FiniteError> {
    are_isomorphic_bounded(q1, q2, ISO_SEARCH_BOUND)
}

/// Returns a witness bijection `phi` (indexed by elements of `q1`) or `None`.
/// Sizes above `bound` are refused with [`FiniteError::BoundExceeded`].
pub fn are_isomorphic_bounded(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    bound: usize,
) -> Result<Option<Vec<usize>>, FiniteError> {
    for q in [q1, q2] {
        if q.size() > bound {
            return Err(FiniteError::BoundExceeded { size: q.size(), bound });
        }
    }
    let n = q1.size();
    if q2.size() != n {
        return Ok(None);
    }
    let p1 = profiles(q1);
    let p2 = profiles(q2);
    let (mut s1, mut s2) = (p1.clone(), p2.clone());
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }
    let candidates: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).filter(|&b| p1[a] == p2[b]).collect()).collect();
    // Most constrained elements first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (candidates[a].len(), a));

    let mut search = Search {
        q1,
        q2,
        candidates: &candidates,
        order: &order,
        phi: alloc::vec![usize::MAX; n],
        used: alloc::vec![false; n],
    };
    if search.extend(0) {
        debug_assert!(check_isomorphism(q1, q2, &search.phi));
        Ok(Some(search.phi))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    q1: &'a FiniteQuandle,
    q2: &'a FiniteQuandle,
    candidates: &'a [Vec<usize>],
    order: &'a [usize],
    phi: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let a = self.order[depth];
        for &img in &self.candidates[a] {
            if self.used[img] {
                continue;
            }
            self.phi[a] = img;
            self.used[img] = true;
            if self.consistent(a) && self.extend(depth + 1) {
                return true;
            }
            self.used[img] = false;
            self.phi[a] = usize::MAX;
        }
        false
    }

    /// Checks every product involving `a` whose factors and result are all
    /// assigned.
    fn consistent(&self, a: usize) -> bool {
        let n = self.q1.size();
        let unset = usize::MAX;
        for b in 0..n {
            if self.phi[b] == unset {
                continue;
            }
            for (x, y) in [(a, b), (b, a)] {
                let xy = self.q1.op(x, y);
                let want = self.q2.op(self.phi[x], self.phi[y]);
                if self.phi[xy] != unset {
                    if self.phi[xy] != want {
                        return false;
                    }
                } else if self.used[want] {
                    // want is already the image of something other than xy.
                    return false;
                }
            }
        }
        true
    }
}
