//! sl(2,R) generator families realized as differential operators, the
//! ladder representation on an abstract power basis `{B^k}`, and an exact
//! checker for the relations `[e,f] = 2h`, `[h,e] = −e`, `[h,f] = f`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::LambdaForm;
use crate::polyspace::{conjugate, GradedSpace, Matrix, OpMatrix};
use crate::scalar::Scalar;
use crate::weyl::{hermite_operator, mixed_derivative, total_euler, OpTerm, Var, WeylOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `h = xD − n/2`, `e = D`, `f = x²D − nx`.
    Univariate,
    /// The univariate family carried to the Hermite basis by `e^{−D²/2}`.
    HermiteConjugated,
    /// Bivariate family with the raising operator exactly as printed.
    BivariateLiteral,
    /// Bivariate family carried to the Hermite basis (`h′, e′, f′`).
    BivariateConjugated,
    /// Bivariate family with a raising operator solved for exactly.
    BivariateRepaired,
    /// Index actions on the power basis `B^k`.
    Ladder,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::Univariate => "univariate",
            Family::HermiteConjugated => "hermite-conjugated",
            Family::BivariateLiteral => "bivariate-literal",
            Family::BivariateConjugated => "bivariate-conjugated",
            Family::BivariateRepaired => "bivariate-repaired",
            Family::Ladder => "ladder",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorTriple {
    pub h: WeylOp,
    pub e: WeylOp,
    pub f: WeylOp,
    pub family: Family,
}

impl GeneratorTriple {
    fn new(h: WeylOp, e: WeylOp, f: WeylOp, family: Family) -> Self {
        assert!(
            h.nvars() == e.nvars() && e.nvars() == f.nvars(),
            "generators must share the variable count"
        );
        GeneratorTriple { h, e, f, family }
    }

    pub fn nvars(&self) -> u8 {
        self.h.nvars()
    }
}

/// Names of the three relation residuals, in report order.
pub const RELATION_NAMES: [&str; 3] = ["[e,f]-2h", "[h,e]+e", "[h,f]-f"];

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    Op(WeylOp),
    Matrix(Matrix),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Op(op) => op.is_zero(),
            Residual::Matrix(m) => m.is_zero(),
        }
    }

    pub fn max_abs(&self) -> Scalar {
        match self {
            Residual::Op(op) => op.max_abs_coeff(),
            Residual::Matrix(m) => m.max_abs(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Op(op) => write!(f, "{op}"),
            Residual::Matrix(m) if m.is_zero() => f.write_str("0"),
            Residual::Matrix(m) => write!(
                f,
                "{}x{} matrix, max |entry| {}",
                m.rows(),
                m.cols(),
                m.max_abs()
            ),
        }
    }
}

/// Residuals of `[e,f] − 2h`, `[h,e] + e`, `[h,f] − f`.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub family: Family,
    pub residuals: [Residual; 3],
    pub exact_pass: [bool; 3],
}

impl RelationReport {
    fn from_residuals(family: Family, residuals: [Residual; 3]) -> Self {
        let exact_pass = [
            residuals[0].is_zero(),
            residuals[1].is_zero(),
            residuals[2].is_zero(),
        ];
        RelationReport {
            family,
            residuals,
            exact_pass,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.exact_pass.iter().all(|&p| p)
    }

    pub fn max_residual(&self) -> Scalar {
        self.residuals
            .iter()
            .map(Residual::max_abs)
            .fold(Scalar::zero(), |m, r| if r > m { r } else { m })
    }
}

/// `h = xD − n/2`, `e = D`, `f = x²D − nx`.
pub fn univariate_generators(n: &Scalar) -> GeneratorTriple {
    let x = WeylOp::x(1);
    let d = WeylOp::dx(1);
    let half_n = n * &Scalar::ratio(1, 2);
    let h = &(&x * &d) - &WeylOp::scalar(1, half_n);
    let f = &(&x.power(2) * &d) - &x.scale(n);
    GeneratorTriple::new(h, d, f, Family::Univariate)
}

/// `X1 = 𝔻_H − n/2`, `X2 = D`, `X3 = (x − D)(𝔻_H − n)` with `𝔻_H = xD − D²`.
pub fn hermite_conjugated_generators(n: &Scalar) -> GeneratorTriple {
    let x = WeylOp::x(1);
    let d = WeylOp::dx(1);
    let dh = hermite_operator(1, Var::X);
    let x1 = &dh - &WeylOp::scalar(1, n * &Scalar::ratio(1, 2));
    let x3 = &(&x - &d) * &(&dh - &WeylOp::scalar(1, n.clone()));
    GeneratorTriple::new(x1, d, x3, Family::HermiteConjugated)
}

/// `½(x∂x + y∂y + 1) + α∂x∂y`.
pub fn bivariate_cartan(alpha: &Scalar) -> WeylOp {
    let half = Scalar::ratio(1, 2);
    &(&total_euler() + &WeylOp::identity(2)).scale(&half) + &mixed_derivative().scale(alpha)
}

/// `h = ½(x∂x + y∂y + 1) + α∂x∂y`, `e = α∂x∂y`,
/// `f = (1/2α)xy + ½(x∂x + y∂y) + (α/4)∂x∂y`, as printed. These need not
/// satisfy the sl(2) relations; [`check_relations`] reports what they give.
pub fn bivariate_generators_literal(alpha: &Scalar) -> Result<GeneratorTriple> {
    if alpha.is_zero() {
        return Err(Error::ZeroParameter("alpha"));
    }
    let xy = WeylOp::term(2, OpTerm::new(1, 1, 0, 0), Scalar::one());
    let f = &(&xy.scale(&(&Scalar::one() / &(alpha * &Scalar::int(2))))
        + &total_euler().scale(&Scalar::ratio(1, 2)))
        + &mixed_derivative().scale(&(alpha * &Scalar::ratio(1, 4)));
    Ok(GeneratorTriple::new(
        bivariate_cartan(alpha),
        mixed_derivative().scale(alpha),
        f,
        Family::BivariateLiteral,
    ))
}

/// Same `h` and `e` as the literal family; `f` is the member of
/// `span{xy, x∂x + y∂y, ∂x∂y, 1}` that satisfies `[e,f] = 2h` and
/// `[h,f] = f`, found by exact linear solve.
pub fn bivariate_generators_repaired(alpha: &Scalar) -> Result<GeneratorTriple> {
    if alpha.is_zero() {
        return Err(Error::ZeroParameter("alpha"));
    }
    let h = bivariate_cartan(alpha);
    let e = mixed_derivative().scale(alpha);
    let ansatz = [
        WeylOp::term(2, OpTerm::new(1, 1, 0, 0), Scalar::one()),
        total_euler(),
        mixed_derivative(),
        WeylOp::identity(2),
    ];
    // [e, Σ c_i B_i] = 2h  and  Σ c_i ([h, B_i] − B_i) = 0
    let mut lhs_ops: Vec<(WeylOp, WeylOp)> = Vec::new();
    for b in &ansatz {
        let first = e.commutator(b)?;
        let second = h.commutator(b)?.try_sub(b)?;
        lhs_ops.push((first, second));
    }
    let target_first = h.scale(&Scalar::int(2));
    let mut keys: Vec<(usize, OpTerm)> = Vec::new();
    for (first, second) in &lhs_ops {
        keys.extend(first.terms().map(|(t, _)| (0, *t)));
        keys.extend(second.terms().map(|(t, _)| (1, *t)));
    }
    keys.extend(target_first.terms().map(|(t, _)| (0, *t)));
    keys.sort();
    keys.dedup();

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (eq, key) in &keys {
        rows.push(
            lhs_ops
                .iter()
                .map(|(a, b)| if *eq == 0 { a.coeff(key) } else { b.coeff(key) })
                .collect::<Vec<_>>(),
        );
        rhs.push(if *eq == 0 {
            target_first.coeff(key)
        } else {
            Scalar::zero()
        });
    }
    let coeffs = solve_linear(rows, rhs).ok_or(Error::NoSolution)?;
    let mut f = WeylOp::zero(2);
    for (c, b) in coeffs.iter().zip(&ansatz) {
        f = &f + &b.scale(c);
    }
    let triple = GeneratorTriple::new(h, e, f, Family::BivariateRepaired);
    if !check_relations(&triple).all_pass() {
        return Err(Error::NoSolution);
    }
    Ok(triple)
}

/// Least-effort exact solve of an (over)determined system; free variables
/// are set to zero. `None` when inconsistent.
fn solve_linear(mut rows: Vec<Vec<Scalar>>, mut rhs: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = &Scalar::one() / &rows[r][c];
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        rhs[r] = &rhs[r] * &inv;
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                rows[i] = rows[i]
                    .iter()
                    .zip(&rows[r])
                    .map(|(a, b)| a - &(&factor * b))
                    .collect();
                rhs[i] = &rhs[i] - &(&factor * &rhs[r]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some(x)
}

/// `h′ = ½(𝔻_H(x) + 𝔻_H(y) + 1) − (b/√(ac))∂x∂y`, `e′ = −(b/√(ac))∂x∂y`,
/// `f′ = −(√(ac)/2b)(x − ∂x)(y − ∂y) + h′`, as printed.
pub fn conjugated_bivariate_generators(lam: &LambdaForm) -> Result<GeneratorTriple> {
    if lam.b().is_zero() {
        return Err(Error::ZeroParameter("b"));
    }
    let beta = lam.coupling();
    let dh = &hermite_operator(2, Var::X) + &hermite_operator(2, Var::Y);
    let h = &(&dh + &WeylOp::identity(2)).scale(&Scalar::ratio(1, 2))
        - &mixed_derivative().scale(&beta);
    let e = mixed_derivative().scale(&-&beta);
    let xm = &WeylOp::x(2) - &WeylOp::dx(2);
    let ym = &WeylOp::y() - &WeylOp::dy();
    let k = -&(&lam.sqrt_ac() / &(lam.b() * &Scalar::int(2)));
    let f = &(&xm * &ym).scale(&k) + &h;
    Ok(GeneratorTriple::new(h, e, f, Family::BivariateConjugated))
}

/// The lowering operator `A⁻ = e′`.
pub fn lowering_operator(lam: &LambdaForm) -> Result<WeylOp> {
    Ok(conjugated_bivariate_generators(lam)?.e)
}

/// Exact symbolic residuals of the three relations. Failure is data.
pub fn check_relations(t: &GeneratorTriple) -> RelationReport {
    let comm = |a: &WeylOp, b: &WeylOp| a.commutator(b).expect("shared nvars");
    let r1 = &comm(&t.e, &t.f) - &t.h.scale(&Scalar::int(2));
    let r2 = &comm(&t.h, &t.e) + &t.e;
    let r3 = &comm(&t.h, &t.f) - &t.f;
    RelationReport::from_residuals(
        t.family,
        [Residual::Op(r1), Residual::Op(r2), Residual::Op(r3)],
    )
}

/// The relation `[h′, A⁻] = −A⁻` alone, as an operator residual.
pub fn lowering_relation_residual(lam: &LambdaForm) -> Result<WeylOp> {
    let t = conjugated_bivariate_generators(lam)?;
    Ok(&t.h.commutator(&t.e)? + &t.e)
}

/// sl(2) generators acting on a finite slice `{B^0, …, B^(dim−1)}` of a power
/// basis. For `h = (B/B′)D − n/2`, `e = D/B′`, `f = (B²/B′)D − nB` the chain
/// rule forces `h·B^k = (k − n/2)B^k`, `e·B^k = k B^(k−1)`,
/// `f·B^k = (k − n)B^(k+1)`, whatever `B` is.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderRep {
    pub weight_n: Scalar,
    pub dim: usize,
}

/// Matrices of a [`LadderRep`]; the raising image of the top basis vector is
/// dropped, so relations involving `f` hold on the block `0..dim−1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderMatrices {
    pub h: OpMatrix,
    pub e: OpMatrix,
    pub f: OpMatrix,
}

impl LadderRep {
    pub fn new(weight_n: Scalar, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "ladder dimension must be at least 1".into(),
            ));
        }
        Ok(LadderRep { weight_n, dim })
    }

    pub fn h_action(&self, k: usize) -> Scalar {
        &Scalar::int(k as i64) - &(&self.weight_n * &Scalar::ratio(1, 2))
    }

    /// Coefficient of `B^(k−1)` in `e·B^k`.
    pub fn e_action(&self, k: usize) -> Scalar {
        Scalar::int(k as i64)
    }

    /// Coefficient of `B^(k+1)` in `f·B^k`.
    pub fn f_action(&self, k: usize) -> Scalar {
        &Scalar::int(k as i64) - &self.weight_n
    }

    fn space(&self) -> GradedSpace {
        GradedSpace::univariate(self.dim as u32 - 1)
    }

    pub fn matrices(&self) -> LadderMatrices {
        let n = self.dim;
        let h = Matrix::diag(&(0..n).map(|k| self.h_action(k)).collect::<Vec<_>>());
        let mut e = Matrix::zeros(n, n);
        let mut f = Matrix::zeros(n, n);
        for k in 0..n {
            if k > 0 {
                e.set(k - 1, k, self.e_action(k));
            }
            if k + 1 < n {
                f.set(k + 1, k, self.f_action(k));
            }
        }
        let space = self.space();
        let wrap = |m| OpMatrix::new(space, m).expect("square");
        LadderMatrices {
            h: wrap(h),
            e: wrap(e),
            f: wrap(f),
        }
    }

    /// `(B/B′)D` alone: `diag(0, 1, …, dim−1)`.
    pub fn euler_matrix(&self) -> OpMatrix {
        let d = Matrix::diag(
            &(0..self.dim)
                .map(|k| Scalar::int(k as i64))
                .collect::<Vec<_>>(),
        );
        OpMatrix::new(self.space(), d).expect("square")
    }
}

pub fn ladder_matrices(rep: &LadderRep) -> LadderMatrices {
    rep.matrices()
}

/// Relations of a matrix triple restricted to the leading `block` indices.
pub fn check_matrix_relations(
    h: &OpMatrix,
    e: &OpMatrix,
    f: &OpMatrix,
    block: usize,
    family: Family,
) -> Result<RelationReport> {
    let restrict = |m: OpMatrix| m.entries().block(0..block, 0..block);
    let r1 = e.commutator(f)?.try_sub(&h.scale(&Scalar::int(2)))?;
    let r2 = h.commutator(e)?.try_add(e)?;
    let r3 = h.commutator(f)?.try_sub(f)?;
    Ok(RelationReport::from_residuals(
        family,
        [
            Residual::Matrix(restrict(r1)),
            Residual::Matrix(restrict(r2)),
            Residual::Matrix(restrict(r3)),
        ],
    ))
}

/// Ladder relations checked on the interior block `0..dim−1`.
pub fn check_ladder_relations(rep: &LadderRep) -> RelationReport {
    let m = rep.matrices();
    check_matrix_relations(&m.h, &m.e, &m.f, rep.dim - 1, Family::Ladder).expect("same space")
}

/// Conjugates each generator matrix by `t … t_inv`.
pub fn conjugate_triple(
    h: &OpMatrix,
    e: &OpMatrix,
    f: &OpMatrix,
    t: &OpMatrix,
    t_inv: &OpMatrix,
) -> Result<(OpMatrix, OpMatrix, OpMatrix)> {
    Ok((
        conjugate(h, t, t_inv)?,
        conjugate(e, t, t_inv)?,
        conjugate(f, t, t_inv)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{bivariate_hermite, gaussian_transform, u_poly};
    use crate::polyspace::{to_matrix, to_matrix_between};
    use crate::weyl::Poly;

    #[test]
    fn univariate_relations_hold() {
        for n in [0, 2, 5] {
            let r = check_relations(&univariate_generators(&Scalar::int(n)));
            assert!(r.all_pass(), "n = {n}");
        }
        let g = univariate_generators(&Scalar::ratio(7, 3));
        assert!(check_relations(&g).all_pass());
        // n = 0: [e,f] = 2xD
        let g0 = univariate_generators(&Scalar::zero());
        let two_xd = WeylOp::term(1, OpTerm::new(1, 0, 1, 0), Scalar::int(2));
        assert_eq!(g0.e.commutator(&g0.f).unwrap(), two_xd);
    }

    #[test]
    fn hermite_conjugated_relations_hold() {
        for n in 0..6 {
            assert!(check_relations(&hermite_conjugated_generators(&Scalar::int(n))).all_pass());
        }
    }

    #[test]
    fn x3_is_gaussian_conjugate() {
        // weight n = N keeps f inside the space
        let n = 10u32;
        let space = GradedSpace::univariate(n);
        let g = univariate_generators(&Scalar::int(n as i64));
        let x = hermite_conjugated_generators(&Scalar::int(n as i64));
        let t = gaussian_transform(space, false).unwrap();
        let t_inv = gaussian_transform(space, true).unwrap();
        let conj = conjugate(&to_matrix(&g.f, space).unwrap(), &t, &t_inv).unwrap();
        assert_eq!(conj, to_matrix(&x.f, space).unwrap());

        // general weight: represent as a map from degree ≤ N into degree ≤ N+1
        let big = GradedSpace::univariate(n + 1);
        let tb = gaussian_transform(big, false).unwrap();
        for w in [0i64, 3, 7] {
            let g = univariate_generators(&Scalar::int(w));
            let x = hermite_conjugated_generators(&Scalar::int(w));
            let f = to_matrix_between(&g.f, space, big).unwrap();
            let lhs = to_matrix_between(&x.f, space, big).unwrap();
            let rhs = &(tb.entries() * &f) * t_inv.entries();
            assert_eq!(lhs, rhs, "weight {w}");
        }
    }

    #[test]
    fn literal_bivariate_family() {
        let t = bivariate_generators_literal(&Scalar::one()).unwrap();
        let r = check_relations(&t);
        assert_eq!(r.exact_pass, [false, true, false]);
        assert!(!r.residuals[0].is_zero());
        assert!(bivariate_generators_literal(&Scalar::zero()).is_err());
    }

    #[test]
    fn repaired_bivariate_family() {
        for alpha in [Scalar::one(), Scalar::ratio(-1, 2), Scalar::ratio(3, 7)] {
            let lit = bivariate_generators_literal(&alpha).unwrap();
            let rep = bivariate_generators_repaired(&alpha).unwrap();
            assert!(check_relations(&rep).all_pass());
            assert_eq!(lit.h, rep.h);
            assert_eq!(lit.e, rep.e);
        }
    }

    #[test]
    fn cartan_eigenvalue_on_u() {
        for lam in LambdaForm::standard_samples() {
            let alpha = -&lam.coupling();
            let h = bivariate_generators_literal(&alpha).unwrap().h;
            let u = u_poly(1, 1, &lam);
            assert_eq!(h.apply(&u).unwrap(), u.scale(&Scalar::ratio(3, 2)));
        }
    }

    #[test]
    fn conjugated_family() {
        for lam in LambdaForm::standard_samples() {
            let t = conjugated_bivariate_generators(&lam).unwrap();
            let beta = lam.coupling();
            assert_eq!(t.e, mixed_derivative().scale(&-&beta));
            assert!(lowering_relation_residual(&lam).unwrap().is_zero());
            let hh = bivariate_hermite(1, 1, &lam).unwrap();
            assert_eq!(t.h.apply(&hh).unwrap(), hh.scale(&Scalar::ratio(3, 2)));

            // h′ is the Gaussian conjugate of h with α = −b/√(ac)
            let space = GradedSpace::bivariate(6);
            let h = bivariate_generators_literal(&-&beta).unwrap().h;
            let tr = gaussian_transform(space, false).unwrap();
            let tr_inv = gaussian_transform(space, true).unwrap();
            let conj = conjugate(&to_matrix(&h, space).unwrap(), &tr, &tr_inv).unwrap();
            assert_eq!(conj, to_matrix(&t.h, space).unwrap());
        }
        let degenerate = LambdaForm::new(Scalar::one(), Scalar::zero(), Scalar::one()).unwrap();
        assert!(conjugated_bivariate_generators(&degenerate).is_err());
    }

    #[test]
    fn ladder_small_case() {
        let rep = LadderRep::new(Scalar::int(2), 3).unwrap();
        let m = rep.matrices();
        assert_eq!(
            m.h.entries(),
            &Matrix::diag(&[Scalar::int(-1), Scalar::zero(), Scalar::one()])
        );
        let e2 =
            m.e.entries()
                .mul_vec(&[Scalar::zero(), Scalar::zero(), Scalar::one()]);
        assert_eq!(e2, vec![Scalar::zero(), Scalar::int(2), Scalar::zero()]);
        assert!(check_ladder_relations(&rep).all_pass());
        assert!(LadderRep::new(Scalar::one(), 0).is_err());
    }

    #[test]
    fn ladder_matches_monomial_basis() {
        // B = x: the ladder is the univariate family on monomials
        let n = 4i64;
        let rep = LadderRep::new(Scalar::int(n), n as usize + 1).unwrap();
        let g = univariate_generators(&Scalar::int(n));
        let space = GradedSpace::univariate(n as u32);
        let m = rep.matrices();
        assert_eq!(m.h, to_matrix(&g.h, space).unwrap());
        assert_eq!(m.e, to_matrix(&g.e, space).unwrap());
        assert_eq!(m.f, to_matrix(&g.f, space).unwrap());
    }

    #[test]
    fn ladder_actions_forced_by_chain_rule() {
        // B = x² − 1, B′ = 2x: check B′·(op·B^k) against the polynomial identities
        let b = Poly::from_coeffs(&[Scalar::int(-1), Scalar::zero(), Scalar::one()]);
        let bp = Poly::from_coeffs(&[Scalar::zero(), Scalar::int(2)]);
        let d = WeylOp::dx(1);
        let n = Scalar::int(3);
        let rep = LadderRep::new(n.clone(), 6).unwrap();
        for k in 0..5u32 {
            let bk = b.pow(k);
            let dbk = d.apply(&bk).unwrap();
            // (B/B′)D B^k = h_action + n/2
            assert_eq!(&b * &dbk, (&bp * &bk).scale(&Scalar::int(k as i64)));
            // (D/B′) B^k = k B^(k−1)
            if k > 0 {
                assert_eq!(dbk, (&bp * &b.pow(k - 1)).scale(&rep.e_action(k as usize)));
            }
            // (B²/B′)D B^k − nB^(k+1) = (k − n) B^(k+1)
            let lhs = &(&b.pow(2) * &dbk) - &(&bp * &b.pow(k + 1)).scale(&n);
            assert_eq!(lhs, (&bp * &b.pow(k + 1)).scale(&rep.f_action(k as usize)));
        }
    }

    #[test]
    fn solver_detects_inconsistency() {
        let rows = vec![vec![Scalar::one()], vec![Scalar::one()]];
        assert!(solve_linear(rows, vec![Scalar::one(), Scalar::int(2)]).is_none());
    }
}
