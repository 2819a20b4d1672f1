use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::perm::{self, Perm};
use super::FiniteError;

/// A finite group as a multiplication table, validated on construction
/// (closure, identity, inverses, and associativity over all triples).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    label: String,
}

impl GroupTable {
    pub fn from_rows(rows: &[Vec<usize>], label: impl Into<String>) -> Result<Self, FiniteError> {
        let n = rows.len();
        if n == 0 {
            return Err(FiniteError::Empty);
        }
        let mut mult = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(FiniteError::NotSquare { row, len: r.len(), expected: n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(FiniteError::EntryOutOfRange { row, col, value, size: n });
                }
                mult.push(value as u32);
            }
        }
        let at = |a: usize, b: usize| mult[a * n + b] as usize;

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| FiniteError::InvalidGroup("no identity element".into()))?;
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| FiniteError::InvalidGroup(format!("element {a} has no inverse")))?;
            inv.push(b as u32);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(FiniteError::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable { n, mult, inv, identity, label: label.into() })
    }

    pub fn from_fn(
        n: usize,
        label: impl Into<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, FiniteError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::from_rows(&rows, label)
    }

    /// The permutation group generated by `generators`, elements indexed in
    /// breadth-first discovery order (identity is 0). Products are `a·b =
    /// "apply a, then b"`.
    pub fn from_permutations(
        generators: &[Perm],
        label: impl Into<String>,
    ) -> Result<Self, FiniteError> {
        let degree = generators.first().map_or(1, Perm::len);
        if generators.iter().any(|g| g.len() != degree) {
            return Err(FiniteError::InvalidGroup("generators of different degree".into()));
        }
        let elements = perm::closure(degree, generators, 5040)?;
        let index = |p: &Perm| elements.iter().position(|e| e == p).expect("closed set");
        let rows: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index(&a.then(b))).collect())
            .collect();
        Self::from_rows(&rows, label)
    }

    pub fn cyclic(n: usize) -> Result<Self, FiniteError> {
        Self::from_fn(n, format!("Z{n}"), |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2m` (symmetries of a regular `m`-gon), `m ≥ 3`.
    pub fn dihedral(m: usize) -> Result<Self, FiniteError> {
        if m < 3 {
            return Err(FiniteError::InvalidGroup(format!("dihedral group needs m >= 3, got {m}")));
        }
        let rot: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
        let refl: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
        Self::from_permutations(
            &[Perm::from_images(&rot)?, Perm::from_images(&refl)?],
            format!("D{}", 2 * m),
        )
    }

    pub fn symmetric(k: usize) -> Result<Self, FiniteError> {
        if k == 0 || k > 7 {
            return Err(FiniteError::InvalidGroup(format!("symmetric group degree {k} unsupported")));
        }
        let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        let mut swap: Vec<usize> = (0..k).collect();
        if k > 1 {
            swap.swap(0, 1);
        }
        Self::from_permutations(
            &[Perm::from_images(&cycle)?, Perm::from_images(&swap)?],
            format!("S{k}"),
        )
    }

    /// Alternating group, generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(k: usize) -> Result<Self, FiniteError> {
        if k == 0 || k > 7 {
            return Err(FiniteError::InvalidGroup(format!(
                "alternating group degree {k} unsupported"
            )));
        }
        let mut gens = Vec::new();
        for i in 2..k {
            let mut p: Vec<usize> = (0..k).collect();
            p[0] = 1;
            p[1] = i;
            p[i] = 0;
            gens.push(Perm::from_images(&p)?);
        }
        if gens.is_empty() {
            gens.push(Perm::identity(k));
        }
        Self::from_permutations(&gens, format!("A{k}"))
    }

    /// Quaternion group `Q8`; element `2u + s` is the unit `u ∈ {1, i, j, k}`
    /// with sign `(-1)^s`.
    pub fn quaternion() -> Result<Self, FiniteError> {
        // Unit products without sign: (unit, negate).
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        Self::from_fn(8, "Q8", |a, b| {
            let (u, neg) = UNIT[a / 2][b / 2];
            let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
            2 * u + sign as usize
        })
    }

    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<Self, FiniteError> {
        let m = h.order();
        Self::from_fn(g.order() * m, format!("{}x{}", g.label, h.label), |a, b| {
            g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn orders() {
        assert_eq!(GroupTable::cyclic(7).unwrap().order(), 7);
        assert_eq!(GroupTable::dihedral(5).unwrap().order(), 10);
        assert_eq!(GroupTable::symmetric(3).unwrap().order(), 6);
        assert_eq!(GroupTable::symmetric(4).unwrap().order(), 24);
        assert_eq!(GroupTable::alternating(4).unwrap().order(), 12);
        let q8 = GroupTable::quaternion().unwrap();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        let k4 = GroupTable::direct_product(
            &GroupTable::cyclic(2).unwrap(),
            &GroupTable::cyclic(2).unwrap(),
        )
        .unwrap();
        assert!(k4.is_abelian());
        assert!((0..4).all(|a| k4.mul(a, a) == k4.identity()));
    }

    #[test]
    fn rejects_non_groups() {
        // Left-zero semigroup: associative, no identity.
        assert!(GroupTable::from_rows(&[vec![0, 0], vec![1, 1]], "lz").is_err());
        // Has identity and inverses but is not associative.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match GroupTable::from_rows(&rows, "loop") {
            Err(FiniteError::InvalidGroup(msg)) => assert!(msg.contains("associative")),
            other => panic!("expected rejection, got {other:?}"),
        }
        assert!(GroupTable::from_rows(&[vec![0, 2], vec![1, 0]], "range").is_err());
    }
}
