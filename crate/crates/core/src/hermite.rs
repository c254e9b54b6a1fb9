//! Hermite, bivariate Hermite, Legendre and Laguerre polynomials.
//!
//! Each family is generated by its operator formula and paired with an
//! independent classical recurrence used as an oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyspace::{exp_exact_nilpotent, GradedSpace, OpMatrix};
use crate::scalar::{binomial, factorial, Scalar};
use crate::weyl::{
    hermite_operator, mixed_derivative, scaled_laplacian, total_euler, Poly, Var, WeylOp,
};

/// Positive-definite quadratic form `[[a, b], [b, c]]`, stored through the
/// square roots of its diagonal so that `a^(k/2)` and `c^(k/2)` stay exact.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaForm {
    sqrt_a: Scalar,
    b: Scalar,
    sqrt_c: Scalar,
}

impl LambdaForm {
    pub fn new(sqrt_a: Scalar, b: Scalar, sqrt_c: Scalar) -> Result<Self> {
        let det = &(&sqrt_a * &sqrt_c).pow(2) - &b.pow(2);
        let positive = |s: &Scalar| !s.is_zero() && !s.is_negative();
        if !positive(&sqrt_a) || !positive(&sqrt_c) || !positive(&det) {
            return Err(Error::NotPositiveDefinite {
                det: det.to_string(),
            });
        }
        Ok(LambdaForm { sqrt_a, b, sqrt_c })
    }

    /// The three forms `(√a, b, √c)` = `(1, 1/2, 1)`, `(2, 1, 3)`,
    /// `(1, -1/3, 2)` used across the check grids.
    pub fn standard_samples() -> Vec<LambdaForm> {
        [(1, 1, 1, 2, 1, 1), (2, 1, 1, 1, 3, 1), (1, 1, -1, 3, 2, 1)]
            .into_iter()
            .map(|(sa, sad, bn, bd, sc, scd)| {
                LambdaForm::new(
                    Scalar::ratio(sa, sad),
                    Scalar::ratio(bn, bd),
                    Scalar::ratio(sc, scd),
                )
                .expect("standard samples are positive definite")
            })
            .collect()
    }

    pub fn sqrt_a(&self) -> &Scalar {
        &self.sqrt_a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn sqrt_c(&self) -> &Scalar {
        &self.sqrt_c
    }

    pub fn a(&self) -> Scalar {
        self.sqrt_a.pow(2)
    }

    pub fn c(&self) -> Scalar {
        self.sqrt_c.pow(2)
    }

    /// `√(ac)`.
    pub fn sqrt_ac(&self) -> Scalar {
        &self.sqrt_a * &self.sqrt_c
    }

    /// The coupling `b/√(ac)` that appears in the bivariate operators.
    pub fn coupling(&self) -> Scalar {
        &self.b / &self.sqrt_ac()
    }
}

impl fmt::Display for LambdaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.sqrt_a, self.b, self.sqrt_c)
    }
}

impl FromStr for LambdaForm {
    type Err = Error;

    /// Parses `"sqrt_a,b,sqrt_c"` with each entry an exact rational.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "lambda must be three rationals sqrt_a,b,sqrt_c; got {s:?}"
            )));
        }
        let v: Vec<Scalar> = parts.iter().map(|p| p.parse()).collect::<Result<_>>()?;
        LambdaForm::new(v[0].clone(), v[1].clone(), v[2].clone())
    }
}

impl Serialize for LambdaForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LambdaForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Pairing of the indices with the variables in the `u_{n,m}` basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `x^(n-k) y^(m-k)`: n goes with x, as in the bivariate Hermite sum.
    #[default]
    NWithX,
    /// `x^(m-k) y^(n-k)`: the swapped pairing, kept for comparison.
    MWithX,
}

/// `exp(∓(∂x² + ∂y²)/2)` on the graded space, exactly. `inverse = false`
/// gives the Gaussian transform taking monomials to Hermite polynomials.
pub fn gaussian_transform(space: GradedSpace, inverse: bool) -> Result<OpMatrix> {
    let c = if inverse {
        Scalar::ratio(1, 2)
    } else {
        Scalar::ratio(-1, 2)
    };
    exp_exact_nilpotent(&scaled_laplacian(space.nvars(), c), space)
}

/// Probabilists' Hermite polynomial, as the Gaussian transform of `x^n`.
pub fn hermite_e(n: u32) -> Poly {
    let t =
        gaussian_transform(GradedSpace::univariate(n), false).expect("degree-lowering operator");
    t.apply_poly(&Poly::x_pow(n))
        .expect("x^n lies in the space")
}

/// Recurrence oracle: `He_{k+1} = x·He_k − k·He_{k−1}`.
pub fn hermite_oracle(n: u32) -> Poly {
    hermite_oracle_table(n).pop().expect("nonempty")
}

/// `[He_0, …, He_n]` by the three-term recurrence.
pub fn hermite_oracle_table(n: u32) -> Vec<Poly> {
    let x = Poly::x_pow(1);
    let mut out = vec![Poly::x_pow(0)];
    if n >= 1 {
        out.push(x.clone());
    }
    for k in 1..n {
        let next = &(&x * &out[k as usize]) - &out[k as usize - 1].scale(&Scalar::int(k as i64));
        out.push(next);
    }
    out
}

/// `Σ_k C(n,k) He_{n−k}`, which should equal `He_n(x + 1)`.
pub fn shift_expansion(n: u32) -> Poly {
    let table = hermite_oracle_table(n);
    let mut out = Poly::zero(1);
    for k in 0..=n {
        let c = Scalar::from_ubig(binomial(n, k));
        out = &out + &table[(n - k) as usize].scale(&c);
    }
    out
}

/// `(−1)^k k! C(m,k) C(n,k) √a^(n−k) b^k √c^(m−k)`.
fn bivariate_coeff(n: u32, m: u32, k: u32, sqrt_a: &Scalar, b: &Scalar, sqrt_c: &Scalar) -> Scalar {
    let sign = if k % 2 == 1 {
        Scalar::int(-1)
    } else {
        Scalar::one()
    };
    let comb = Scalar::from_ubig(binomial(m, k) * binomial(n, k));
    let c = &(&sign * &factorial(k)) * &comb;
    &(&(&c * &sqrt_a.pow(n - k)) * &b.pow(k)) * &sqrt_c.pow(m - k)
}

/// The polynomial basis `u_{n,m}` carried to `Ĥ_{n,m}` by the Gaussian
/// transform.
pub fn u_poly(n: u32, m: u32, lam: &LambdaForm) -> Poly {
    u_poly_with(n, m, lam, Convention::NWithX)
}

pub fn u_poly_with(n: u32, m: u32, lam: &LambdaForm, conv: Convention) -> Poly {
    let mut p = Poly::zero(2);
    for k in 0..=n.min(m) {
        let c = bivariate_coeff(n, m, k, &lam.sqrt_a, &lam.b, &lam.sqrt_c);
        let (i, j) = match conv {
            Convention::NWithX => (n - k, m - k),
            Convention::MWithX => (m - k, n - k),
        };
        p.add_term(i, j, c);
    }
    p
}

/// Direct sum `Σ_k (−1)^k k! C(m,k) C(n,k) √a^(n−k) b^k √c^(m−k) He_{n−k}(x) He_{m−k}(y)`
/// for arbitrary coefficients; no positivity is required of them.
pub fn bivariate_hermite_sum(n: u32, m: u32, sqrt_a: &Scalar, b: &Scalar, sqrt_c: &Scalar) -> Poly {
    let hx = hermite_oracle_table(n);
    let hy = hermite_oracle_table(m);
    let mut p = Poly::zero(2);
    for k in 0..=n.min(m) {
        let c = bivariate_coeff(n, m, k, sqrt_a, b, sqrt_c);
        let prod = &hx[(n - k) as usize].lift(false) * &hy[(m - k) as usize].lift(true);
        p = &p + &prod.scale(&c);
    }
    p
}

/// `Ĥ_{n,m}` as the Gaussian transform of `u_{n,m}`.
pub fn bivariate_hermite_transform(n: u32, m: u32, lam: &LambdaForm) -> Poly {
    let t =
        gaussian_transform(GradedSpace::bivariate(n + m), false).expect("degree-lowering operator");
    t.apply_poly(&u_poly(n, m, lam))
        .expect("u lies in the space")
}

/// Bivariate Hermite polynomial `Ĥ_{n,m}(x, y, Λ)`. Both the direct sum and
/// the transform route are evaluated; they must agree exactly.
pub fn bivariate_hermite(n: u32, m: u32, lam: &LambdaForm) -> Result<Poly> {
    let direct = bivariate_hermite_sum(n, m, &lam.sqrt_a, &lam.b, &lam.sqrt_c);
    let transformed = bivariate_hermite_transform(n, m, lam);
    if direct != transformed {
        return Err(Error::InvalidArgument(format!(
            "bivariate Hermite routes disagree at n={n}, m={m}, lambda={lam}"
        )));
    }
    Ok(direct)
}

/// `(x∂x − ∂x²) + (y∂y − ∂y²) − 2(b/√(ac))∂x∂y`, with the `Ĥ_{n,m}` as
/// eigenfunctions.
pub fn bivariate_hermite_operator(lam: &LambdaForm) -> WeylOp {
    let dh = &hermite_operator(2, Var::X) + &hermite_operator(2, Var::Y);
    &dh - &mixed_derivative().scale(&(&lam.coupling() * &Scalar::int(2)))
}

/// `x∂x + y∂y − 2(b/√(ac))∂x∂y`, the same operator seen in the `u_{n,m}`
/// frame.
pub fn transformed_bivariate_operator(lam: &LambdaForm) -> WeylOp {
    &total_euler() - &mixed_derivative().scale(&(&lam.coupling() * &Scalar::int(2)))
}

/// Legendre polynomial `(1 / 2^n n!) dⁿ/dxⁿ (x² − 1)ⁿ`.
pub fn legendre_rodrigues(n: u32) -> Poly {
    let base = Poly::from_coeffs(&[Scalar::int(-1), Scalar::zero(), Scalar::one()]).pow(n);
    let dn = WeylOp::dx(1).power(n);
    let norm = &Scalar::int(2).pow(n) * &factorial(n);
    dn.apply(&base)
        .expect("univariate")
        .scale(&(&Scalar::one() / &norm))
}

/// Recurrence oracle `(k+1) P_{k+1} = (2k+1) x P_k − k P_{k−1}`.
pub fn legendre_oracle(n: u32) -> Poly {
    let x = Poly::x_pow(1);
    let mut prev = Poly::x_pow(0);
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for k in 1..n {
        let k = k as i64;
        let next = (&(&x * &cur).scale(&Scalar::int(2 * k + 1)) - &prev.scale(&Scalar::int(k)))
            .scale(&Scalar::ratio(1, k + 1));
        prev = cur;
        cur = next;
    }
    cur
}

/// Laguerre polynomial from `(1/n!) (d/dx − 1)ⁿ xⁿ`.
pub fn laguerre_rodrigues(n: u32) -> Poly {
    let d_minus_one = &WeylOp::dx(1) - &WeylOp::identity(1);
    d_minus_one
        .power(n)
        .apply(&Poly::x_pow(n))
        .expect("univariate")
        .scale(&(&Scalar::one() / &factorial(n)))
}

/// Recurrence oracle `(k+1) L_{k+1} = (2k+1−x) L_k − k L_{k−1}`.
pub fn laguerre_oracle(n: u32) -> Poly {
    let mut prev = Poly::x_pow(0);
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::from_coeffs(&[Scalar::one(), Scalar::int(-1)]);
    for k in 1..n {
        let k = k as i64;
        let factor = Poly::from_coeffs(&[Scalar::int(2 * k + 1), Scalar::int(-1)]);
        let next =
            (&(&factor * &cur) - &prev.scale(&Scalar::int(k))).scale(&Scalar::ratio(1, k + 1));
        prev = cur;
        cur = next;
    }
    cur
}

/// How an operator-formula output relates to its recurrence oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    /// formula = oracle
    Direct,
    /// formula = (−1)ⁿ · oracle
    Alternating,
}

/// The sign convention under which `formula` matches `oracle` at degree `n`,
/// if either does.
pub fn sign_convention(formula: &Poly, oracle: &Poly, n: u32) -> Option<SignConvention> {
    if formula == oracle {
        Some(SignConvention::Direct)
    } else if n % 2 == 1 && formula == &-oracle {
        Some(SignConvention::Alternating)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{hermite_operator, Var};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(&coeffs.iter().map(|&c| Scalar::int(c)).collect::<Vec<_>>())
    }

    fn lam(sa: (i64, i64), b: (i64, i64), sc: (i64, i64)) -> LambdaForm {
        LambdaForm::new(
            Scalar::ratio(sa.0, sa.1),
            Scalar::ratio(b.0, b.1),
            Scalar::ratio(sc.0, sc.1),
        )
        .unwrap()
    }

    #[test]
    fn small_hermite() {
        assert_eq!(hermite_e(0), p(&[1]));
        assert_eq!(hermite_e(2), p(&[-1, 0, 1]));
        assert_eq!(hermite_e(3), p(&[0, -3, 0, 1]));
        assert_eq!(hermite_oracle(1), p(&[0, 1]));
        assert_eq!(hermite_oracle(4), p(&[3, 0, -6, 0, 1]));
        assert_eq!(hermite_oracle(5), p(&[0, 15, 0, -10, 0, 1]));
    }

    #[test]
    fn appell_and_parity() {
        let table = hermite_oracle_table(20);
        for n in 1..=20u32 {
            let d = WeylOp::dx(1).apply(&table[n as usize]).unwrap();
            assert_eq!(d, table[n as usize - 1].scale(&Scalar::int(n as i64)));
            let sign = if n % 2 == 0 {
                Scalar::one()
            } else {
                Scalar::int(-1)
            };
            assert_eq!(
                table[n as usize].reflect_x(),
                table[n as usize].scale(&sign)
            );
        }
    }

    #[test]
    fn shift_expansion_values() {
        assert_eq!(shift_expansion(0), p(&[1]));
        assert_eq!(shift_expansion(2), p(&[0, 2, 1]));
        // He_3(x+1) = (x+1)^3 - 3(x+1) = x^3 + 3x^2 - 2
        assert_eq!(shift_expansion(3), p(&[-2, 0, 3, 1]));
        let x_plus_1 = p(&[1, 1]);
        assert_eq!(
            shift_expansion(3),
            &x_plus_1.pow(3) - &x_plus_1.scale(&Scalar::int(3))
        );
    }

    #[test]
    fn u_and_bivariate_small_cases() {
        let l = lam((1, 1), (1, 2), (1, 1));
        assert_eq!(u_poly(0, 0, &l), Poly::constant(2, Scalar::one()));
        let xy_minus_b =
            Poly::from_terms(2, [((1, 1), Scalar::one()), ((0, 0), Scalar::ratio(-1, 2))]);
        assert_eq!(u_poly(1, 1, &l), xy_minus_b);
        assert_eq!(bivariate_hermite(1, 1, &l).unwrap(), xy_minus_b);

        let l2 = lam((2, 1), (1, 1), (3, 1));
        assert_eq!(u_poly(1, 0, &l2), Poly::monomial(2, 1, 0, Scalar::int(2)));
        let expected = Poly::from_terms(2, [((2, 0), Scalar::int(4)), ((0, 0), Scalar::int(-4))]);
        assert_eq!(bivariate_hermite(2, 0, &l2).unwrap(), expected);
        let six_xy_minus_1 =
            Poly::from_terms(2, [((1, 1), Scalar::int(6)), ((0, 0), Scalar::int(-1))]);
        assert_eq!(bivariate_hermite(1, 1, &l2).unwrap(), six_xy_minus_1);
    }

    #[test]
    fn swapped_convention_moves_exponents() {
        let l = lam((2, 1), (1, 1), (3, 1));
        let u = u_poly_with(2, 1, &l, Convention::MWithX);
        assert!(u.terms().all(|(&(i, j), _)| i + 1 == j));
        assert_eq!(u_poly_with(2, 1, &l, Convention::NWithX).swap_xy(), u);
    }

    #[test]
    fn lambda_validation() {
        assert!(LambdaForm::new(Scalar::one(), Scalar::one(), Scalar::one()).is_err());
        assert!(LambdaForm::new(Scalar::int(-1), Scalar::zero(), Scalar::one()).is_err());
        assert!(LambdaForm::new(Scalar::zero(), Scalar::zero(), Scalar::one()).is_err());
        let l: LambdaForm = "1,-1/3,2".parse().unwrap();
        assert_eq!(l.c(), Scalar::int(4));
        assert_eq!(l.to_string(), "1,-1/3,2");
        assert!("1,1".parse::<LambdaForm>().is_err());
        assert!("1,2,1".parse::<LambdaForm>().is_err());
    }

    #[test]
    fn rodrigues_small_cases() {
        assert_eq!(legendre_rodrigues(0), p(&[1]));
        assert_eq!(legendre_rodrigues(1), p(&[0, 1]));
        let p2 = Poly::from_coeffs(&[Scalar::ratio(-1, 2), Scalar::zero(), Scalar::ratio(3, 2)]);
        assert_eq!(legendre_rodrigues(2), p2);
        assert_eq!(legendre_oracle(2), p2);
        assert_eq!(laguerre_rodrigues(0), p(&[1]));
        assert_eq!(laguerre_rodrigues(1), p(&[1, -1]));
        let l2 = Poly::from_coeffs(&[Scalar::one(), Scalar::int(-2), Scalar::ratio(1, 2)]);
        assert_eq!(laguerre_rodrigues(2), l2);
        assert_eq!(laguerre_oracle(2), l2);
    }

    #[test]
    fn sign_convention_detection() {
        let l3 = laguerre_oracle(3);
        assert_eq!(sign_convention(&l3, &l3, 3), Some(SignConvention::Direct));
        assert_eq!(
            sign_convention(&-&l3, &l3, 3),
            Some(SignConvention::Alternating)
        );
        assert_eq!(sign_convention(&Poly::x_pow(1), &l3, 3), None);
    }

    #[test]
    fn hermite_eigen_relation() {
        let dh = hermite_operator(1, Var::X);
        let he3 = hermite_e(3);
        assert_eq!(dh.apply(&he3).unwrap(), he3.scale(&Scalar::int(3)));
    }
}
