use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensorcat::Obj;

type Column = Vec<(usize, Scalar)>;

/// An exact linear map `dom -> cod`.
///
/// Stored column-wise with only the nonzero entries kept, rows ascending.
/// Structure maps of group algebras are permutation-like, so this stays small
/// even on four-fold tensor powers.
#[derive(Clone, PartialEq, Eq)]
pub struct Mor {
    dom: Obj,
    cod: Obj,
    cols: Vec<Column>,
}

impl Mor {
    pub fn identity(x: &Obj) -> Mor {
        Mor {
            dom: x.clone(),
            cod: x.clone(),
            cols: (0..x.dim()).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    pub fn zero(dom: &Obj, cod: &Obj) -> Mor {
        Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            cols: vec![Vec::new(); dom.dim()],
        }
    }

    /// From a row-major dense matrix (`cod.dim()` rows, `dom.dim()` columns).
    pub fn from_rows(dom: &Obj, cod: &Obj, rows: Vec<Vec<Scalar>>) -> Result<Mor> {
        let shape_err = |r: usize, c: usize| Error::ShapeMismatch {
            dom: dom.clone(),
            cod: cod.clone(),
            rows: r,
            cols: c,
        };
        if rows.len() != cod.dim() {
            return Err(shape_err(rows.len(), rows.first().map_or(0, Vec::len)));
        }
        let mut cols = vec![Vec::new(); dom.dim()];
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dom.dim() {
                return Err(shape_err(cod.dim(), row.len()));
            }
            for (c, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v));
                }
            }
        }
        Ok(Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            cols,
        })
    }

    /// Builds a map column by column; `f(j)` lists `(row, value)` pairs of the
    /// image of basis vector `j`. Repeated rows are summed.
    pub fn from_columns<I>(dom: &Obj, cod: &Obj, mut f: impl FnMut(usize) -> I) -> Mor
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let cols = (0..dom.dim())
            .map(|j| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (r, v) in f(j) {
                    assert!(r < cod.dim(), "row {r} out of range for {cod}");
                    *acc.entry(r).or_insert_with(Scalar::zero) += &v;
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            cols,
        }
    }

    /// Linear extension of a map of basis indices, `e_j -> e_{f(j)}`.
    pub fn from_basis_map(dom: &Obj, cod: &Obj, f: impl Fn(usize) -> usize) -> Mor {
        Mor::from_columns(dom, cod, |j| [(f(j), Scalar::one())])
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    /// Nonzero entries of column `j`, rows ascending.
    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.cols[c]
            .binary_search_by_key(&r, |(i, _)| *i)
            .map_or_else(|_| Scalar::zero(), |k| self.cols[c][k].1.clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.cols()]; self.rows()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }

    pub fn nonzero_count(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Nonzero entries as `(row, col, value)`, column-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// Same matrix, relabelled objects. The new objects must be equal to the
    /// old ones as types.
    pub fn relabel(mut self, dom: &Obj, cod: &Obj) -> Mor {
        assert!(dom == &self.dom && cod == &self.cod, "relabel changes type");
        self.dom = dom.clone();
        self.cod = cod.clone();
        self
    }

    /// `self ∘ g`. Panics when `g.cod() != self.dom()`; use [`compose`] for
    /// the fallible form.
    pub fn after(&self, g: &Mor) -> Mor {
        compose(self, g).unwrap_or_else(|e| panic!("ill-typed composition: {e}"))
    }

    /// `self ⊗ g`.
    pub fn ox(&self, g: &Mor) -> Mor {
        tensor(self, g)
    }

    pub fn add(&self, other: &Mor) -> Result<Mor> {
        self.same_type(other)?;
        Ok(Mor::from_columns(&self.dom, &self.cod, |j| {
            self.cols[j].iter().chain(other.cols[j].iter()).cloned().collect::<Vec<_>>()
        }))
    }

    pub fn sub(&self, other: &Mor) -> Result<Mor> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Mor {
        if s.is_zero() {
            return Mor::zero(&self.dom, &self.cod);
        }
        Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * s)).collect())
                .collect(),
        }
    }

    fn same_type(&self, other: &Mor) -> Result<()> {
        if self.dom != other.dom {
            return Err(Error::DomainMismatch {
                expected: self.dom.clone(),
                found: other.dom.clone(),
            });
        }
        if self.cod != other.cod {
            return Err(Error::DomainMismatch {
                expected: self.cod.clone(),
                found: other.cod.clone(),
            });
        }
        Ok(())
    }

    pub fn is_square(&self) -> bool {
        self.dom.dim() == self.cod.dim()
    }
}

/// `f ∘ g`: apply `g` first.
pub fn compose(f: &Mor, g: &Mor) -> Result<Mor> {
    if g.cod != f.dom {
        return Err(Error::DomainMismatch {
            expected: f.dom.clone(),
            found: g.cod.clone(),
        });
    }
    let cols = g
        .cols
        .iter()
        .map(|gcol| {
            if let [(k, v)] = gcol.as_slice() {
                if v.is_one() {
                    return f.cols[*k].clone();
                }
            }
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, gv) in gcol {
                for (r, fv) in &f.cols[*k] {
                    *acc.entry(*r).or_insert_with(Scalar::zero) += &(fv * gv);
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect();
    Ok(Mor {
        dom: g.dom.clone(),
        cod: f.cod.clone(),
        cols,
    })
}

/// Kronecker product, left factor major.
pub fn tensor(f: &Mor, g: &Mor) -> Mor {
    let gr = g.rows();
    let mut cols = Vec::with_capacity(f.cols() * g.cols());
    for fcol in &f.cols {
        for gcol in &g.cols {
            let mut col = Vec::with_capacity(fcol.len() * gcol.len());
            for (i, a) in fcol {
                for (k, b) in gcol {
                    col.push((i * gr + k, a * b));
                }
            }
            cols.push(col);
        }
    }
    Mor {
        dom: f.dom.tensor(&g.dom),
        cod: f.cod.tensor(&g.cod),
        cols,
    }
}

/// Exact equality of type and every entry.
pub fn mor_equal(f: &Mor, g: &Mor) -> bool {
    f == g
}

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} -> {:?}", self.dom, self.cod)?;
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn obj(n: usize) -> Obj {
        Obj::new(format!("X{n}"), n)
    }

    fn mat(dom: usize, cod: usize) -> impl Strategy<Value = Mor> {
        proptest::collection::vec((-3i64..4, 1i64..3), dom * cod).prop_map(move |v| {
            let rows = (0..cod)
                .map(|r| (0..dom).map(|c| Scalar::ratio(v[r * dom + c].0, v[r * dom + c].1)).collect())
                .collect();
            Mor::from_rows(&obj(dom), &obj(cod), rows).unwrap()
        })
    }

    #[test]
    fn composition_checks_inner_objects() {
        let f = Mor::identity(&obj(2));
        let g = Mor::identity(&obj(3));
        assert!(matches!(compose(&f, &g), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn shape_checked() {
        let r = Mor::from_rows(&obj(2), &obj(1), vec![vec![Scalar::one()]]);
        assert!(matches!(r, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn tensor_of_identities() {
        let h = obj(2);
        let b = obj(3);
        assert_eq!(tensor(&Mor::identity(&h), &Mor::identity(&b)), Mor::identity(&h.tensor(&b)));
    }

    proptest! {
        // block (i,j) of f ⊗ g is f[i][j] * g, checked index by index
        #[test]
        fn kronecker_blocks(f in mat(2, 2), g in mat(2, 2)) {
            let t = tensor(&f, &g);
            for i in 0..2 { for j in 0..2 { for k in 0..2 { for l in 0..2 {
                prop_assert_eq!(t.entry(i * 2 + k, j * 2 + l), &f.entry(i, j) * &g.entry(k, l));
            }}}}
        }

        #[test]
        fn associativity(f in mat(2, 3), g in mat(3, 2), h in mat(2, 3)) {
            prop_assert_eq!(f.after(&g).after(&h), f.after(&g.after(&h)));
        }

        #[test]
        fn interchange(f in mat(2, 2), g in mat(3, 2), f2 in mat(2, 2), g2 in mat(2, 3)) {
            prop_assert_eq!(tensor(&f, &g).after(&tensor(&f2, &g2)), tensor(&f.after(&f2), &g.after(&g2)));
        }

        #[test]
        fn dense_roundtrip(f in mat(3, 2)) {
            let back = Mor::from_rows(f.dom(), f.cod(), f.to_rows()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
