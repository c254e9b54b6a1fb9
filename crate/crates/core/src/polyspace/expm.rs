use super::{to_matrix, GradedSpace, Matrix, OpMatrix};
use crate::error::{Error, Result};
use crate::scalar::{validate_precision, Scalar};
use crate::weyl::WeylOp;

/// `exp(op)` on `space` for an operator whose every term strictly lowers the
/// total degree. The matrix is nilpotent there, so the finite series
/// `Σ_{p ≤ P} M^p / p!` with `P = ⌈N / min drop⌉` is the exact exponential.
pub fn exp_exact_nilpotent(op: &WeylOp, space: GradedSpace) -> Result<OpMatrix> {
    let mut min_drop = i64::MAX;
    for (t, _) in op.terms() {
        let drop = -t.degree_shift();
        if drop <= 0 {
            return Err(Error::NotNilpotent {
                term: t.to_string(),
            });
        }
        min_drop = min_drop.min(drop);
    }
    let m = to_matrix(op, space)?;
    let dim = space.dim();
    if op.is_zero() {
        return Ok(OpMatrix::identity(space));
    }
    let max_power = (space.max_degree() as i64 + min_drop - 1) / min_drop;

    let mut sum = Matrix::identity(dim);
    let mut term = Matrix::identity(dim);
    for p in 1..=max_power {
        term = term.try_mul(m.entries())?.scale(&Scalar::ratio(1, p));
        if term.is_zero() {
            break;
        }
        sum = sum.try_add(&term)?;
    }
    OpMatrix::new(space, sum)
}

/// Squarings `s` and Taylor degree `p` for a matrix of 1-norm `norm` so that
/// `θ^(p+1)/(p+1)! · e^θ < 10^-digits` with `θ = norm / 2^s ≤ 1`, minimizing
/// the matrix-product count `s + p`.
pub fn taylor_schedule(norm: f64, digits: u32) -> (u32, u32) {
    if norm == 0.0 {
        return (0, 0);
    }
    let target = -(digits as f64);
    let s_min = norm.log2().ceil().max(0.0) as u32;
    let mut best = (u32::MAX, 0, 0);
    for s in s_min..s_min + 64 {
        let theta = norm / 2f64.powi(s as i32);
        let log_theta = theta.log10();
        // log10(e^θ) ≤ log10(e)
        let mut log_bound = std::f64::consts::LOG10_E * theta;
        let mut p = 0u32;
        loop {
            log_bound += log_theta - ((p + 1) as f64).log10();
            if log_bound < target {
                break;
            }
            p += 1;
        }
        let cost = s + p;
        if cost < best.0 {
            best = (cost, s, p);
        }
    }
    (best.1, best.2)
}

/// Float-mode `exp(m)` at `digits` decimal digits by scaling and squaring
/// a Taylor polynomial.
///
/// The work is carried out with guard digits covering the squarings and
/// the magnitude of `m`, then rounded to the requested precision.
pub fn exp_numeric(m: &OpMatrix, digits: u32) -> Result<OpMatrix> {
    let digits = validate_precision(digits)?;
    let space = m.space();
    let dim = space.dim();
    let norm = m.entries().norm1_f64();
    if norm == 0.0 {
        return Ok(OpMatrix::identity(space).to_float(digits));
    }
    let guard0 = 10 + (1.0 + norm).log10().ceil() as u32;
    let (s0, _) = taylor_schedule(norm, digits + guard0);
    let work = digits + guard0 + (s0 as f64 * std::f64::consts::LOG10_2).ceil() as u32 + 2;
    let (s, p) = taylor_schedule(norm, work);

    let a = m.entries().map(|x| {
        let r = x.to_real(work);
        Scalar::Float(r.mul_pow2(-(s as isize)))
    });
    let id = Matrix::identity(dim).to_float(work);

    // Horner: I + A/1 (I + A/2 (… (I + A/p)))
    let mut t = id.clone();
    for k in (1..=p).rev() {
        let inv_k = Scalar::ratio(1, k as i64).to_float(work);
        t = id.try_add(&a.try_mul(&t)?.scale(&inv_k))?;
    }
    for _ in 0..s {
        t = t.try_mul(&t)?;
    }
    OpMatrix::new(space, t.to_float(digits))
}
