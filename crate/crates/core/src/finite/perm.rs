use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::FiniteError;

/// A permutation of `{0, …, n-1}` stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its images, rejecting anything that is not a
    /// bijection of `{0, …, n-1}`.
    pub fn from_images(images: &[usize]) -> Result<Self, FiniteError> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in images {
            if i >= n || seen[i] {
                return Err(FiniteError::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Perm(images.iter().map(|&i| i as u32).collect()))
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        Perm(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }
}

/// Breadth-first closure of `generators` under composition.
///
/// Returns the elements in discovery order, identity first. Fails once more
/// than `max_order` elements have been found.
pub fn closure(n: usize, generators: &[Perm], max_order: usize) -> Result<Vec<Perm>, FiniteError> {
    let id = Perm::identity(n);
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    order.push(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                if seen.len() > max_order {
                    return Err(FiniteError::GroupTooLarge { limit: max_order });
                }
                order.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(order)
}

/// Orbits of the group generated by `generators`, each sorted, listed by
/// smallest element.
pub fn orbits(n: usize, generators: &[Perm]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for g in generators {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut buckets: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for i in 0..n {
        let r = find(&mut parent, i);
        buckets[r].push(i);
    }
    buckets.into_iter().filter(|b| !b.is_empty()).collect()
}
