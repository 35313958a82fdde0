use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::group::FiniteGroup;

/// Largest order accepted by [`enumerate_skew_braces`].
pub const ENUMERATION_BOUND: usize = 6;

/// `(G, ·, ⋆)` with `g ⋆ (h · t) = (g ⋆ h) · g⁻¹ · (g ⋆ t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewBrace {
    dot: FiniteGroup,
    circ: FiniteGroup,
}

/// Checks the compatibility law on every triple.
pub fn compatible(dot: &FiniteGroup, circ: &FiniteGroup) -> bool {
    first_incompatible(dot, circ).is_none()
}

fn first_incompatible(dot: &FiniteGroup, circ: &FiniteGroup) -> Option<(usize, usize, usize)> {
    let n = dot.order();
    for g in 0..n {
        let gi = dot.inv(g);
        for h in 0..n {
            for t in 0..n {
                let lhs = circ.mul(g, dot.mul(h, t));
                let rhs = dot.mul(dot.mul(circ.mul(g, h), gi), circ.mul(g, t));
                if lhs != rhs {
                    return Some((g, h, t));
                }
            }
        }
    }
    None
}

impl SkewBrace {
    pub fn new(dot: FiniteGroup, circ: FiniteGroup) -> Result<SkewBrace> {
        if dot.order() != circ.order() {
            return Err(Error::InvalidSkewBrace(format!(
                "orders differ: {} and {}",
                dot.order(),
                circ.order()
            )));
        }
        if let Some((g, h, t)) = first_incompatible(&dot, &circ) {
            return Err(Error::InvalidSkewBrace(format!("compatibility fails at ({g},{h},{t})")));
        }
        Ok(SkewBrace { dot, circ })
    }

    /// `g ⋆ h = g · h`.
    pub fn trivial(g: &FiniteGroup) -> SkewBrace {
        SkewBrace { dot: g.clone(), circ: g.clone() }
    }

    /// `g ⋆ h = h · g`.
    pub fn opposite(g: &FiniteGroup) -> SkewBrace {
        SkewBrace { dot: g.clone(), circ: g.opposite() }
    }

    pub fn dot(&self) -> &FiniteGroup {
        &self.dot
    }
    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }
    pub fn order(&self) -> usize {
        self.dot.order()
    }

    /// Equality of both Cayley tables, ignoring names.
    pub fn same_tables(&self, other: &SkewBrace) -> bool {
        self.dot.table() == other.dot.table() && self.circ.table() == other.circ.table()
    }

    /// `Γ_g(h) = g⁻¹ · (g ⋆ h)`.
    pub fn gamma(&self, g: usize, h: usize) -> usize {
        self.dot.mul(self.dot.inv(g), self.circ.mul(g, h))
    }
}

/// Every skew brace with additive group `g`, up to equality of the `⋆` table.
///
/// Candidates are maps `λ: G → Aut(G, ·)` with `λ_e = id`; each gives the
/// operation `g ⋆ h = g · λ_g(h)`, which always satisfies the compatibility
/// law, so only the group axioms of `⋆` need checking.
pub fn enumerate_skew_braces(g: &FiniteGroup) -> Result<Vec<SkewBrace>> {
    let n = g.order();
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded { order: n, bound: ENUMERATION_BOUND });
    }
    let auts = g.automorphisms();
    let e = g.identity();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut choice = vec![0usize; others.len()];
    let mut tables = BTreeSet::new();
    loop {
        let mut lambda = vec![0usize; n];
        for (k, &x) in others.iter().enumerate() {
            lambda[x] = choice[k];
        }
        let table: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| g.mul(a, auts[lambda[a]][b])).collect()).collect();
        if FiniteGroup::from_table("", table.clone()).is_ok() {
            tables.insert(table);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(tables
                    .into_iter()
                    .enumerate()
                    .map(|(i, t)| {
                        let circ = FiniteGroup::from_table(format!("{}#{i}", g.name()), t).expect("checked above");
                        SkewBrace::new(g.clone(), circ).expect("compatible by construction")
                    })
                    .collect());
            }
            choice[k] += 1;
            if choice[k] < auts.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
