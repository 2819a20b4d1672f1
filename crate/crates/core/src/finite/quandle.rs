use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use super::perm::{self, Perm};
use super::{FiniteError, GroupTable};

/// Default cap on the order of an inner automorphism group built by closure.
pub const INNER_GROUP_LIMIT: usize = 2_000_000;

/// A finite binary operation on `{0, …, n-1}` meant to be a rack or quandle.
///
/// Construction only checks that the table is square with entries in range.
/// Whether the axioms hold is what [`check_rack`] and [`check_quandle`] are
/// for, so deliberately broken tables can be represented too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    n: usize,
    table: Vec<u32>,
    label: String,
}

impl FiniteQuandle {
    pub fn from_rows(rows: &[Vec<usize>], label: impl Into<String>) -> Result<Self, FiniteError> {
        let n = rows.len();
        if n == 0 {
            return Err(FiniteError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(FiniteError::NotSquare { row, len: r.len(), expected: n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(FiniteError::EntryOutOfRange { row, col, value, size: n });
                }
                table.push(value as u32);
            }
        }
        Ok(FiniteQuandle { n, table, label: label.into() })
    }

    pub fn from_fn(
        n: usize,
        label: impl Into<String>,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, FiniteError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::from_rows(&rows, label)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `a ▷ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// The column `a ↦ a ▷ b` as an image vector.
    pub fn column(&self, b: usize) -> Vec<usize> {
        (0..self.n).map(|a| self.op(a, b)).collect()
    }

    /// `R_b` as a permutation, or the first collision if column `b` is not
    /// bijective.
    pub fn right_mul(&self, b: usize) -> Result<Perm, FiniteError> {
        let mut preimage = alloc::vec![usize::MAX; self.n];
        for a in 0..self.n {
            let v = self.op(a, b);
            if preimage[v] != usize::MAX {
                return Err(FiniteError::ColumnNotBijective {
                    column: b,
                    first: preimage[v],
                    second: a,
                    value: v,
                });
            }
            preimage[v] = a;
        }
        Ok(Perm::from_raw(self.column(b).into_iter().map(|v| v as u32).collect()))
    }

    /// All right multiplications, `R_0, …, R_{n-1}`.
    pub fn right_muls(&self) -> Result<Vec<Perm>, FiniteError> {
        (0..self.n).map(|b| self.right_mul(b)).collect()
    }

    /// Table of `R_b⁻¹`, laid out like the operation table:
    /// `inv[v * n + b] = a` with `a ▷ b = v`.
    pub fn right_inverse_table(&self) -> Result<Vec<u32>, FiniteError> {
        let n = self.n;
        let mut inv = alloc::vec![0u32; n * n];
        for b in 0..n {
            let r = self.right_mul(b)?;
            for a in 0..n {
                inv[r.apply(a) * n + b] = a as u32;
            }
        }
        Ok(inv)
    }
}

pub fn make_trivial(n: usize) -> Result<FiniteQuandle, FiniteError> {
    FiniteQuandle::from_fn(n, format!("trivial({n})"), |a, _| a)
}

/// Dihedral quandle `R_n`: `i ▷ j = 2j - i mod n`.
pub fn make_dihedral(n: usize) -> Result<FiniteQuandle, FiniteError> {
    FiniteQuandle::from_fn(n, format!("dihedral({n})"), |i, j| (2 * j + n - i) % n)
}

/// Alexander quandle on `Z_n`: `a ▷ b = t·a + (1-t)·b mod n`.
pub fn make_alexander(n: usize, t: i64) -> Result<FiniteQuandle, FiniteError> {
    if n == 0 {
        return Err(FiniteError::Empty);
    }
    let m = n as i64;
    let gcd = t.gcd(&m) as u64;
    if gcd != 1 {
        return Err(FiniteError::NotInvertible { n, t, gcd });
    }
    let t_mod = t.rem_euclid(m);
    let s_mod = (1 - t).rem_euclid(m);
    FiniteQuandle::from_fn(n, format!("alexander({n},{t})"), |a, b| {
        ((t_mod * a as i64 + s_mod * b as i64) % m) as usize
    })
}

/// Conjugation quandle: `a ▷ b = b⁻¹ a b`.
pub fn make_conj(g: &GroupTable) -> Result<FiniteQuandle, FiniteError> {
    FiniteQuandle::from_fn(g.order(), format!("conj({})", g.label()), |a, b| {
        g.mul(g.mul(g.inv(b), a), b)
    })
}

/// Core quandle: `a ▷ b = b a⁻¹ b`.
pub fn make_core(g: &GroupTable) -> Result<FiniteQuandle, FiniteError> {
    FiniteQuandle::from_fn(g.order(), format!("core({})", g.label()), |a, b| {
        g.mul(g.mul(b, g.inv(a)), b)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// I: `a ▷ a = a`.
    Idempotency,
    /// II: every right multiplication is a bijection.
    RightInvertibility,
    /// III: `(a ▷ b) ▷ c = (a ▷ c) ▷ (b ▷ c)`.
    SelfDistributivity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Idempotency => "idempotency",
            Axiom::RightInvertibility => "right_invertibility",
            Axiom::SelfDistributivity => "self_distributivity",
        }
    }
}

/// First counterexample found for an axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    Idempotency { a: usize, value: usize },
    /// `first ▷ column = second ▷ column = value`.
    RightInvertibility { column: usize, first: usize, second: usize, value: usize },
    SelfDistributivity { a: usize, b: usize, c: usize, lhs: usize, rhs: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub size: usize,
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn verdict(&self, axiom: Axiom) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn first_violation(&self) -> Option<Violation> {
        self.verdicts.iter().find_map(|v| v.witness)
    }
}

fn verdict(axiom: Axiom, witness: Option<Violation>) -> AxiomVerdict {
    AxiomVerdict { axiom, holds: witness.is_none(), witness }
}

fn invertibility_witness(q: &FiniteQuandle) -> Option<Violation> {
    (0..q.size()).find_map(|b| match q.right_mul(b) {
        Ok(_) => None,
        Err(FiniteError::ColumnNotBijective { column, first, second, value }) => {
            Some(Violation::RightInvertibility { column, first, second, value })
        }
        Err(_) => unreachable!("right_mul only reports collisions"),
    })
}

fn distributivity_witness(q: &FiniteQuandle) -> Option<Violation> {
    let n = q.size();
    for a in 0..n {
        for b in 0..n {
            let ab = q.op(a, b);
            for c in 0..n {
                let lhs = q.op(ab, c);
                let rhs = q.op(q.op(a, c), q.op(b, c));
                if lhs != rhs {
                    return Some(Violation::SelfDistributivity { a, b, c, lhs, rhs });
                }
            }
        }
    }
    None
}

/// Exhaustive check of axioms II and III over all `n³` triples.
pub fn check_rack(q: &FiniteQuandle) -> AxiomReport {
    AxiomReport {
        size: q.size(),
        verdicts: alloc::vec![
            verdict(Axiom::RightInvertibility, invertibility_witness(q)),
            verdict(Axiom::SelfDistributivity, distributivity_witness(q)),
        ],
    }
}

/// [`check_rack`] plus idempotency of the diagonal.
pub fn check_quandle(q: &FiniteQuandle) -> AxiomReport {
    let idem = (0..q.size())
        .find(|&a| q.op(a, a) != a)
        .map(|a| Violation::Idempotency { a, value: q.op(a, a) });
    let mut report = check_rack(q);
    report.verdicts.insert(0, verdict(Axiom::Idempotency, idem));
    report
}

/// The inner group `Inn(X) = ⟨R_x⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroupSummary {
    pub generators: Vec<Perm>,
    pub order: usize,
    pub orbits: Vec<Vec<usize>>,
}

impl PermGroupSummary {
    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }
}

pub fn inner_group(q: &FiniteQuandle) -> Result<PermGroupSummary, FiniteError> {
    inner_group_bounded(q, INNER_GROUP_LIMIT)
}

pub fn inner_group_bounded(
    q: &FiniteQuandle,
    max_order: usize,
) -> Result<PermGroupSummary, FiniteError> {
    let generators = q.right_muls()?;
    let order = perm::closure(q.size(), &generators, max_order)?.len();
    let orbits = perm::orbits(q.size(), &generators);
    Ok(PermGroupSummary { generators, order, orbits })
}

/// True iff `Inn(X)` acts transitively. Only orbits are needed, so this does
/// not enumerate the group.
pub fn is_connected(q: &FiniteQuandle) -> Result<bool, FiniteError> {
    let generators = q.right_muls()?;
    Ok(perm::orbits(q.size(), &generators).len() == 1)
}
