//! Truncated graded polynomial spaces, matrices of operators acting on them,
//! and operator exponentials: an exact series for degree-lowering operators
//! and error-controlled scaling-and-squaring otherwise.

mod expm;
mod matrix;
mod space;

pub use expm::{exp_exact_nilpotent, exp_numeric, taylor_schedule};
pub use matrix::Matrix;
pub use space::GradedSpace;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::weyl::{Poly, WeylOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "mode", content = "digits")]
pub enum Mode {
    Exact,
    Float(u32),
}

impl Mode {
    pub fn of(m: &Matrix) -> Mode {
        match m.precision() {
            None => Mode::Exact,
            Some(d) => Mode::Float(d),
        }
    }
}

/// Square matrix of an operator on a [`GradedSpace`]: column `c` holds the
/// coordinates of the operator applied to basis monomial `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix {
    space: GradedSpace,
    entries: Matrix,
    mode: Mode,
}

impl OpMatrix {
    pub fn new(space: GradedSpace, entries: Matrix) -> Result<Self> {
        if entries.rows() != space.dim() || entries.cols() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on a space of dimension {}",
                entries.rows(),
                entries.cols(),
                space.dim()
            )));
        }
        let mode = Mode::of(&entries);
        Ok(OpMatrix {
            space,
            entries,
            mode,
        })
    }

    pub fn identity(space: GradedSpace) -> Self {
        OpMatrix {
            space,
            entries: Matrix::identity(space.dim()),
            mode: Mode::Exact,
        }
    }

    pub fn space(&self) -> GradedSpace {
        self.space
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn into_entries(self) -> Matrix {
        self.entries
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn to_float(&self, digits: u32) -> OpMatrix {
        OpMatrix {
            space: self.space,
            entries: self.entries.to_float(digits),
            mode: Mode::Float(digits),
        }
    }

    fn check_space(&self, other: &OpMatrix) -> Result<()> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch(format!(
                "spaces differ: {:?} vs {:?}",
                self.space, other.space
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.check_space(other)?;
        OpMatrix::new(self.space, self.entries.try_mul(&other.entries)?)
    }

    pub fn try_add(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.check_space(other)?;
        OpMatrix::new(self.space, self.entries.try_add(&other.entries)?)
    }

    pub fn try_sub(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.check_space(other)?;
        OpMatrix::new(self.space, self.entries.try_sub(&other.entries)?)
    }

    pub fn scale(&self, c: &Scalar) -> OpMatrix {
        OpMatrix::new(self.space, self.entries.scale(c)).expect("same shape")
    }

    pub fn commutator(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Image of a polynomial lying in the space.
    pub fn apply_poly(&self, p: &Poly) -> Result<Poly> {
        let v = self.space.coords(p)?;
        Ok(self.space.poly_from_coords(&self.entries.mul_vec(&v)))
    }
}

/// Rectangular matrix of `op` from `domain` into `codomain`.
///
/// This is how degree-raising operators are represented: pick a codomain
/// large enough to hold every image.
pub fn to_matrix_between(
    op: &WeylOp,
    domain: GradedSpace,
    codomain: GradedSpace,
) -> Result<Matrix> {
    for space in [domain, codomain] {
        if op.nvars() != space.nvars() {
            return Err(Error::VariableMismatch {
                left: op.nvars(),
                right: space.nvars(),
            });
        }
    }
    let mut m = Matrix::zeros(codomain.dim(), domain.dim());
    for c in 0..domain.dim() {
        let basis = domain.basis_poly(c);
        let image = op.apply(&basis)?;
        for (&(i, j), v) in image.terms() {
            let r = codomain.index(i, j).ok_or_else(|| {
                let (bi, bj) = domain.monomial(c);
                Error::DegreeOverflow {
                    monomial: space::monomial_name(bi, bj),
                    max_degree: codomain.max_degree(),
                }
            })?;
            m.set(r, c, v.clone());
        }
    }
    Ok(m)
}

/// Matrix of `op` on `space`. Fails with `DegreeOverflow`, naming the first
/// offending basis monomial, when the space is not invariant under `op`.
pub fn to_matrix(op: &WeylOp, space: GradedSpace) -> Result<OpMatrix> {
    OpMatrix::new(space, to_matrix_between(op, space, space)?)
}

/// Similarity transform `t · a · t_inv`, after confirming `t_inv · t = I`
/// (exactly in exact mode; in float mode to within `10^-(digits-4)` scaled
/// by `dim·max|t|·max|t_inv|`).
pub fn conjugate(a: &OpMatrix, t: &OpMatrix, t_inv: &OpMatrix) -> Result<OpMatrix> {
    a.check_space(t)?;
    a.check_space(t_inv)?;
    let prod = t_inv.try_mul(t)?;
    let id = Matrix::identity(a.space.dim());
    let deviation = prod.entries.try_sub(&id)?.max_abs();
    let ok = match prod.mode {
        Mode::Exact => deviation.is_zero(),
        Mode::Float(d) => {
            // rounding in t_inv·t grows with the size of the factors
            let size = &(&t.entries.max_abs() * &t_inv.entries.max_abs())
                * &Scalar::int(a.space.dim() as i64);
            let size = if size > Scalar::one() {
                size
            } else {
                Scalar::one()
            };
            let inv_tol = Scalar::Float(Real::from_int(10, d)).pow(d.saturating_sub(4));
            &deviation * &inv_tol <= size
        }
    };
    if !ok {
        return Err(Error::NotInverse {
            deviation: deviation.to_string(),
        });
    }
    t.try_mul(a)?.try_mul(t_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{euler_operator, hermite_operator, OpTerm, Var};

    #[test]
    fn derivative_matrix() {
        let m = to_matrix(&WeylOp::dx(1), GradedSpace::univariate(2)).unwrap();
        let mut expected = Matrix::zeros(3, 3);
        expected.set(0, 1, Scalar::int(1));
        expected.set(1, 2, Scalar::int(2));
        assert_eq!(m.entries(), &expected);
        assert_eq!(m.mode(), Mode::Exact);
    }

    #[test]
    fn euler_matrix_is_diagonal() {
        let m = to_matrix(&euler_operator(1, Var::X), GradedSpace::univariate(2)).unwrap();
        assert_eq!(
            m.entries(),
            &Matrix::diag(&[Scalar::int(0), Scalar::int(1), Scalar::int(2)])
        );
    }

    #[test]
    fn raising_generator_fits_at_matching_weight() {
        // x²D − 2x: 1 → −2x, x → −x², x² → 0
        let f = WeylOp::from_terms(
            1,
            [
                (OpTerm::new(2, 0, 1, 0), Scalar::one()),
                (OpTerm::new(1, 0, 0, 0), Scalar::int(-2)),
            ],
        );
        let m = to_matrix(&f, GradedSpace::univariate(2)).unwrap();
        assert_eq!(m.entries().get(1, 0), &Scalar::int(-2));
        assert_eq!(m.entries().get(2, 1), &Scalar::int(-1));
        assert!((0..3).all(|r| m.entries().get(r, 2).is_zero()));
    }

    #[test]
    fn overflow_names_monomial() {
        let err = to_matrix(&WeylOp::x(1), GradedSpace::univariate(3)).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeOverflow {
                monomial: "x^3".into(),
                max_degree: 3
            }
        );
    }

    #[test]
    fn conjugation_checks_inverse() {
        let s = GradedSpace::univariate(4);
        let a = to_matrix(&hermite_operator(1, Var::X), s).unwrap();
        let t = exp_exact_nilpotent(&WeylOp::dx(1), s).unwrap();
        assert!(matches!(
            conjugate(&a, &t, &t),
            Err(Error::NotInverse { .. })
        ));
        let id = OpMatrix::identity(s);
        assert_eq!(
            conjugate(
                &id,
                &t,
                &exp_exact_nilpotent(&(-&WeylOp::dx(1)), s).unwrap()
            )
            .unwrap(),
            id
        );
    }
}
