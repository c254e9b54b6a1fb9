use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weyl::Poly;

/// Polynomials of total degree at most `max_degree` in one or two variables,
/// with monomials enumerated in graded-lex order: by total degree, then by
/// descending x-degree (`1, x, y, x², xy, y², …`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedSpace {
    nvars: u8,
    max_degree: u32,
}

impl GradedSpace {
    pub fn new(nvars: u8, max_degree: u32) -> Result<Self> {
        match nvars {
            1 | 2 => Ok(GradedSpace { nvars, max_degree }),
            n => Err(Error::BadVariableCount(n)),
        }
    }

    pub fn univariate(max_degree: u32) -> Self {
        GradedSpace {
            nvars: 1,
            max_degree,
        }
    }

    pub fn bivariate(max_degree: u32) -> Self {
        GradedSpace {
            nvars: 2,
            max_degree,
        }
    }

    pub fn nvars(&self) -> u8 {
        self.nvars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn dim(&self) -> usize {
        let n = self.max_degree as usize;
        if self.nvars == 1 {
            n + 1
        } else {
            (n + 1) * (n + 2) / 2
        }
    }

    /// Position of `x^i y^j`, or `None` if it lies outside the space.
    pub fn index(&self, i: u32, j: u32) -> Option<usize> {
        if self.nvars == 1 {
            return (j == 0 && i <= self.max_degree).then_some(i as usize);
        }
        let d = i + j;
        if d > self.max_degree {
            return None;
        }
        let d = d as usize;
        Some(d * (d + 1) / 2 + (d - i as usize))
    }

    /// Exponents of the monomial at `idx`.
    pub fn monomial(&self, idx: usize) -> (u32, u32) {
        assert!(idx < self.dim(), "basis index out of range");
        if self.nvars == 1 {
            return (idx as u32, 0);
        }
        let mut d = 0usize;
        while (d + 1) * (d + 2) / 2 <= idx {
            d += 1;
        }
        let offset = idx - d * (d + 1) / 2;
        let i = d - offset;
        (i as u32, offset as u32)
    }

    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.dim()).map(move |k| self.monomial(k))
    }

    pub fn basis_poly(&self, idx: usize) -> Poly {
        let (i, j) = self.monomial(idx);
        Poly::monomial(self.nvars, i, j, Scalar::one())
    }

    /// Coordinate vector of `p`; fails if `p` has a term outside the space.
    pub fn coords(&self, p: &Poly) -> Result<Vec<Scalar>> {
        if p.nvars() != self.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: p.nvars(),
            });
        }
        let mut v = vec![Scalar::zero(); self.dim()];
        for (&(i, j), c) in p.terms() {
            let k = self.index(i, j).ok_or_else(|| Error::DegreeOverflow {
                monomial: monomial_name(i, j),
                max_degree: self.max_degree,
            })?;
            v[k] = c.clone();
        }
        Ok(v)
    }

    pub fn poly_from_coords(&self, v: &[Scalar]) -> Poly {
        assert_eq!(v.len(), self.dim(), "coordinate vector length");
        Poly::from_terms(
            self.nvars,
            v.iter()
                .enumerate()
                .map(|(k, c)| (self.monomial(k), c.clone())),
        )
    }
}

pub(crate) fn monomial_name(i: u32, j: u32) -> String {
    match (i, j) {
        (0, 0) => "1".to_string(),
        _ => {
            let mut parts = Vec::new();
            for (name, d) in [("x", i), ("y", j)] {
                match d {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    d => parts.push(format!("{name}^{d}")),
                }
            }
            parts.join("*")
        }
    }
}
