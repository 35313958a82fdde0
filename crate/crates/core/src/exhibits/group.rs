use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite group given by its Cayley table on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.name, self.table)
    }
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses by brute force.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let name = name.into();
        let n = table.len();
        let bad = |msg: String| Error::InvalidGroup(format!("{name}: {msg}"));
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(bad("table is not an n x n table on 0..n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| bad("no identity".into()))?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x][y] == identity && table[y][x] == identity)
                    .ok_or_else(|| bad(format!("{x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { name, table, identity, inverse })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(format!("C{n}"), table).expect("cyclic group")
    }

    /// Pairs `(a, b)` indexed as `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let nb = b.order();
        let n = a.order() * nb;
        let table = (0..n)
            .map(|x| (0..n).map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)).collect())
            .collect();
        FiniteGroup::from_table(format!("{}x{}", a.name, b.name), table).expect("product of groups")
    }

    /// The group generated by permutations of `0..degree`; elements are
    /// sorted lexicographically, so the identity is element 0.
    pub fn from_permutations(name: impl Into<String>, gens: &[Vec<usize>]) -> FiniteGroup {
        let degree = gens[0].len();
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut k = 0;
        while k < elems.len() {
            for g in gens {
                let p: Vec<usize> = (0..degree).map(|i| elems[k][g[i]]).collect();
                if !elems.contains(&p) {
                    elems.push(p);
                }
            }
            k += 1;
        }
        elems.sort();
        let index: BTreeMap<Vec<usize>, usize> = elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        // (σ·τ)(i) = σ(τ(i))
        let table = elems
            .iter()
            .map(|s| elems.iter().map(|t| index[&(0..degree).map(|i| s[t[i]]).collect::<Vec<_>>()]).collect())
            .collect();
        FiniteGroup::from_table(name, table).expect("permutation group")
    }

    pub fn symmetric3() -> FiniteGroup {
        FiniteGroup::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// Symmetries of the square, order 8.
    pub fn dihedral4() -> FiniteGroup {
        FiniteGroup::from_permutations("D4", &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    /// `{±1, ±i, ±j, ±k}`; element `2u + s` is `(-1)^s · u` for units `1, i, j, k`.
    pub fn quaternion() -> FiniteGroup {
        // unit products: (sign, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (s, u) = UNIT[x / 2][y / 2];
                        2 * u + (s + x % 2 + y % 2) % 2
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table("Q8", table).expect("quaternion group")
    }

    /// All built-in groups of order at most 8.
    pub fn builtin() -> Vec<FiniteGroup> {
        let c = FiniteGroup::cyclic;
        vec![
            c(1),
            c(2),
            c(3),
            c(4),
            FiniteGroup::direct_product(&c(2), &c(2)),
            c(5),
            c(6),
            FiniteGroup::symmetric3(),
            c(7),
            c(8),
            FiniteGroup::direct_product(&c(2), &c(4)),
            FiniteGroup::direct_product(&FiniteGroup::direct_product(&c(2), &c(2)), &c(2)),
            FiniteGroup::dihedral4(),
            FiniteGroup::quaternion(),
        ]
    }

    pub fn builtin_named(name: &str) -> Option<FiniteGroup> {
        FiniteGroup::builtin().into_iter().find(|g| g.name.eq_ignore_ascii_case(name))
    }

    pub fn builtin_of_order(order: usize) -> Vec<FiniteGroup> {
        FiniteGroup::builtin().into_iter().filter(|g| g.order() == order).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `a ⋅op b = b ⋅ a`.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order();
        let table = (0..n).map(|a| (0..n).map(|b| self.mul(b, a)).collect()).collect();
        FiniteGroup::from_table(format!("{}op", self.name), table).expect("opposite group")
    }

    fn generated_by(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut seen = self.generated_by(&gens);
        while let Some(x) = (0..self.order()).find(|&x| !seen[x]) {
            gens.push(x);
            seen = self.generated_by(&gens);
        }
        gens
    }

    /// Every homomorphism into `target`, as element maps.
    pub fn homomorphisms_to(&self, target: &FiniteGroup) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let mut out = Vec::new();
        let mut images = vec![0usize; gens.len()];
        loop {
            if let Some(map) = self.extend(target, &gens, &images) {
                out.push(map);
            }
            // odometer over images
            let mut k = 0;
            loop {
                if k == images.len() {
                    return out;
                }
                images[k] += 1;
                if images[k] < target.order() {
                    break;
                }
                images[k] = 0;
                k += 1;
            }
        }
    }

    fn extend(&self, target: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map: Vec<Option<usize>> = vec![None; n];
        map[self.identity] = Some(target.identity);
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            let fx = map[x].expect("visited");
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = target.mul(fx, img);
                match map[y] {
                    None => {
                        map[y] = Some(fy);
                        stack.push(y);
                    }
                    Some(v) if v != fy => return None,
                    Some(_) => {}
                }
            }
        }
        let map: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
        let hom = (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])));
        hom.then_some(map)
    }

    /// `Aut(G)`, identity first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let mut auts: Vec<Vec<usize>> = self
            .homomorphisms_to(self)
            .into_iter()
            .filter(|m| {
                let mut seen = vec![false; m.len()];
                m.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            })
            .collect();
        auts.sort();
        auts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders() {
        let orders: Vec<usize> = FiniteGroup::builtin().iter().map(FiniteGroup::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]);
    }

    #[test]
    fn abelian_flags() {
        for g in FiniteGroup::builtin() {
            let expect = !matches!(g.name(), "S3" | "D4" | "Q8");
            assert_eq!(g.is_abelian(), expect, "{}", g.name());
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion();
        let (minus_one, i, j, k) = (1, 2, 4, 6);
        assert_eq!(q.mul(i, i), minus_one);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), k + 1);
        assert_eq!(q.identity(), 0);
    }

    #[test]
    fn automorphism_counts() {
        // |Aut| by brute force over all bijections for the small ones
        for g in FiniteGroup::builtin().into_iter().filter(|g| g.order() <= 6) {
            let n = g.order();
            let mut count = 0;
            let mut perm: Vec<usize> = (0..n).collect();
            permute(&mut perm, 0, &mut |p| {
                if (0..n).all(|a| (0..n).all(|b| p[g.mul(a, b)] == g.mul(p[a], p[b]))) {
                    count += 1;
                }
            });
            assert_eq!(g.automorphisms().len(), count, "{}", g.name());
        }
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn sign_map_is_a_homomorphism() {
        let homs = FiniteGroup::symmetric3().homomorphisms_to(&FiniteGroup::cyclic(2));
        assert_eq!(homs.len(), 2);
    }
}
