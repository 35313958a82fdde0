use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite-dimensional object, optionally carrying a parity per basis vector.
///
/// Equality compares dimension and parities only; the name is a label. An
/// ungraded object compares equal to a graded one whose parities are all even.
#[derive(Clone)]
pub struct Obj {
    name: Arc<str>,
    dim: usize,
    grading: Option<Arc<[u8]>>,
}

impl Obj {
    /// An ungraded object. Panics if `dim == 0`.
    pub fn new(name: impl Into<String>, dim: usize) -> Obj {
        assert!(dim >= 1, "objects have positive dimension");
        Obj {
            name: Arc::from(name.into()),
            dim,
            grading: None,
        }
    }

    pub fn graded(name: impl Into<String>, parities: Vec<u8>) -> Result<Obj> {
        let name = name.into();
        if parities.is_empty() {
            return Err(Error::InvalidObject(format!("{name}: empty grading")));
        }
        if let Some(p) = parities.iter().find(|&&p| p > 1) {
            return Err(Error::InvalidObject(format!("{name}: parity {p} not in {{0,1}}")));
        }
        Ok(Obj {
            name: Arc::from(name),
            dim: parities.len(),
            grading: Some(Arc::from(parities)),
        })
    }

    /// The unit object `K`: dimension one, even.
    pub fn unit() -> Obj {
        Obj {
            name: Arc::from("K"),
            dim: 1,
            grading: Some(Arc::from(vec![0u8])),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.grading.is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.dim == 1 && self.parity(0) == 0 && &*self.name == "K"
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.grading.as_ref().map_or(0, |g| g[i])
    }

    pub fn with_name(&self, name: impl Into<String>) -> Obj {
        Obj {
            name: Arc::from(name.into()),
            ..self.clone()
        }
    }

    /// The tensor object. `K` is a strict unit on both sides.
    pub fn tensor(&self, other: &Obj) -> Obj {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let grading = match (&self.grading, &other.grading) {
            (None, None) => None,
            _ => {
                let mut g = Vec::with_capacity(self.dim * other.dim);
                for i in 0..self.dim {
                    for j in 0..other.dim {
                        g.push((self.parity(i) + other.parity(j)) % 2);
                    }
                }
                Some(Arc::from(g))
            }
        };
        Obj {
            name: Arc::from(format!("{}⊗{}", self.name, other.name)),
            dim: self.dim * other.dim,
            grading,
        }
    }

    /// Canonical dual: same dimension, same parities, dual basis.
    pub fn dual(&self) -> Obj {
        if self.is_unit() {
            return self.clone();
        }
        let name = match self.name.strip_suffix('*') {
            Some(base) if !base.contains('⊗') => base.to_string(),
            _ => format!("{}*", self.name),
        };
        Obj {
            name: Arc::from(name),
            ..self.clone()
        }
    }
}

impl PartialEq for Obj {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && (0..self.dim).all(|i| self.parity(i) == other.parity(i))
    }
}

impl Eq for Obj {}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(dim {})", self.name, self.dim)
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.grading {
            None => write!(f, "{}[{}]", self.name, self.dim),
            Some(g) => write!(f, "{}{:?}", self.name, g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_is_strict() {
        let h = Obj::new("H", 3);
        assert_eq!(Obj::unit().tensor(&h).name(), "H");
        assert_eq!(h.tensor(&Obj::unit()).name(), "H");
    }

    #[test]
    fn gradings_add_mod_two() {
        let l = Obj::graded("L", vec![0, 1]).unwrap();
        let ll = l.tensor(&l);
        assert_eq!(ll.grading().unwrap(), &[0, 1, 1, 0]);
        assert_eq!(ll.dim(), 4);
    }

    #[test]
    fn rejects_bad_grading() {
        assert!(Obj::graded("X", vec![]).is_err());
        assert!(Obj::graded("X", vec![0, 2]).is_err());
    }

    #[test]
    fn dual_keeps_grading() {
        let l = Obj::graded("L", vec![0, 1]).unwrap();
        assert_eq!(l.dual().name(), "L*");
        assert_eq!(l.dual().dual().name(), "L");
        assert_eq!(l.dual(), l);
    }
}
