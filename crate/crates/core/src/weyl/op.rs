use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::{check_nvars, same_nvars, write_monomial, write_sum, Poly};
use crate::error::Result;
use crate::scalar::{binomial, falling, Scalar};

/// One normal-ordered word `x^x y^y ∂x^dx ∂y^dy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OpTerm {
    pub x: u32,
    pub y: u32,
    pub dx: u32,
    pub dy: u32,
}

impl OpTerm {
    pub const fn new(x: u32, y: u32, dx: u32, dy: u32) -> Self {
        OpTerm { x, y, dx, dy }
    }

    /// Change in total degree when the word acts on a monomial it does not kill.
    pub fn degree_shift(&self) -> i64 {
        (self.x + self.y) as i64 - (self.dx + self.dy) as i64
    }

    pub fn order(&self) -> u32 {
        self.dx + self.dy
    }

    fn render(&self, nvars: u8) -> String {
        let mut s = String::new();
        write_monomial(&mut s, self.x, self.y).unwrap();
        let derivs: [(&str, u32); 2] = if nvars == 1 {
            [("D", self.dx), ("", 0)]
        } else {
            [("Dx", self.dx), ("Dy", self.dy)]
        };
        for (name, k) in derivs {
            if k == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(name);
            if k > 1 {
                s.push_str(&format!("^{k}"));
            }
        }
        s
    }
}

impl fmt::Display for OpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.render(2);
        f.write_str(if r.is_empty() { "1" } else { &r })
    }
}

/// A differential operator with polynomial coefficients in one or two
/// variables, held in normal-ordered form (coordinates left of derivatives).
///
/// The term map never holds zero coefficients, so two operators are equal
/// exactly when their maps are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylOp {
    nvars: u8,
    terms: BTreeMap<OpTerm, Scalar>,
}

impl WeylOp {
    pub fn zero(nvars: u8) -> Self {
        let nvars = check_nvars(nvars).expect("nvars must be 1 or 2");
        WeylOp {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(nvars: u8, c: Scalar) -> Self {
        Self::term(nvars, OpTerm::new(0, 0, 0, 0), c)
    }

    pub fn identity(nvars: u8) -> Self {
        Self::scalar(nvars, Scalar::one())
    }

    /// A single word with coefficient `c`. Panics on y-factors in one variable.
    pub fn term(nvars: u8, t: OpTerm, c: Scalar) -> Self {
        let mut op = Self::zero(nvars);
        op.add_term(t, c);
        op
    }

    pub fn from_terms<I>(nvars: u8, terms: I) -> Self
    where
        I: IntoIterator<Item = (OpTerm, Scalar)>,
    {
        let mut op = Self::zero(nvars);
        for (t, c) in terms {
            op.add_term(t, c);
        }
        op
    }

    /// Multiplication by x.
    pub fn x(nvars: u8) -> Self {
        Self::term(nvars, OpTerm::new(1, 0, 0, 0), Scalar::one())
    }

    /// Multiplication by y (bivariate).
    pub fn y() -> Self {
        Self::term(2, OpTerm::new(0, 1, 0, 0), Scalar::one())
    }

    /// d/dx.
    pub fn dx(nvars: u8) -> Self {
        Self::term(nvars, OpTerm::new(0, 0, 1, 0), Scalar::one())
    }

    /// ∂/∂y (bivariate).
    pub fn dy() -> Self {
        Self::term(2, OpTerm::new(0, 0, 0, 1), Scalar::one())
    }

    pub fn nvars(&self) -> u8 {
        self.nvars
    }

    pub fn add_term(&mut self, t: OpTerm, c: Scalar) {
        assert!(
            self.nvars == 2 || (t.y == 0 && t.dy == 0),
            "y-factor on a univariate operator"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpTerm, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &OpTerm) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.terms.values().all(Scalar::is_exact)
    }

    /// Float precision of the widest float coefficient, if any.
    pub fn precision(&self) -> Option<u32> {
        self.terms.values().filter_map(Scalar::precision).max()
    }

    /// Largest degree change of any term; `None` for the zero operator.
    pub fn max_degree_shift(&self) -> Option<i64> {
        self.terms.keys().map(OpTerm::degree_shift).max()
    }

    pub fn scale(&self, c: &Scalar) -> WeylOp {
        WeylOp::from_terms(self.nvars, self.terms.iter().map(|(t, v)| (*t, v * c)))
    }

    pub fn try_add(&self, other: &WeylOp) -> Result<WeylOp> {
        same_nvars(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(*t, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &WeylOp) -> Result<WeylOp> {
        self.try_add(&-other)
    }

    /// Composition `self ∘ other`, returned in normal order.
    ///
    /// Moving `∂^k` past `x^p` uses the closed Leibniz form
    /// `∂^k x^p = Σ_t C(k,t) p!/(p-t)! x^(p-t) ∂^(k-t)`, which is what
    /// repeated application of `∂x = x∂ + 1` produces.
    pub fn compose(&self, other: &WeylOp) -> Result<WeylOp> {
        same_nvars(self.nvars, other.nvars)?;
        let mut out = WeylOp::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let cab = ca * cb;
                for tx in 0..=a.dx.min(b.x) {
                    let wx = binomial(a.dx, tx) * falling(b.x, tx);
                    for ty in 0..=a.dy.min(b.y) {
                        let wy = binomial(a.dy, ty) * falling(b.y, ty);
                        let key = OpTerm {
                            x: a.x + b.x - tx,
                            y: a.y + b.y - ty,
                            dx: a.dx - tx + b.dx,
                            dy: a.dy - ty + b.dy,
                        };
                        out.add_term(key, &cab * &Scalar::from_ubig(&wx * &wy));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &WeylOp) -> Result<WeylOp> {
        self.compose(other)?.try_sub(&other.compose(self)?)
    }

    /// `self^k` under composition.
    pub fn power(&self, k: u32) -> WeylOp {
        let mut acc = WeylOp::identity(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Action on a polynomial.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        same_nvars(self.nvars, p.nvars())?;
        let mut out = Poly::zero(self.nvars);
        for (t, c) in &self.terms {
            for (&(i, j), pc) in p.terms() {
                if i < t.dx || j < t.dy {
                    continue;
                }
                let w = falling(i, t.dx) * falling(j, t.dy);
                out.add_term(
                    i - t.dx + t.x,
                    j - t.dy + t.y,
                    &(c * pc) * &Scalar::from_ubig(w),
                );
            }
        }
        Ok(out)
    }

    /// Returns `s` with `self = s·other`, or `None` when the two are not
    /// proportional (or `other` is zero). A zero `self` gives `s = 0`.
    ///
    /// Exact operands are compared exactly. When floats are involved the
    /// coefficient ratios must agree to within the working precision
    /// (relative tolerance `10^-(digits-5)`).
    pub fn scalar_multiple_of(&self, other: &WeylOp) -> Option<Scalar> {
        if other.is_zero() || self.nvars != other.nvars {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() != other.terms.len()
            || self
                .terms
                .keys()
                .zip(other.terms.keys())
                .any(|(a, b)| a != b)
        {
            return None;
        }
        let (t0, a0) = self.terms.iter().next()?;
        let s = a0 / &other.terms[t0];
        let digits = self.precision().max(other.precision());
        for (t, a) in &self.terms {
            let predicted = &s * &other.terms[t];
            match digits {
                None => {
                    if &predicted != a {
                        return None;
                    }
                }
                Some(d) => {
                    let tol = Scalar::Float(crate::scalar::Real::from_int(10, d))
                        .pow(d.saturating_sub(5));
                    let diff = (&predicted - a).abs();
                    if &diff * &tol > a.abs() {
                        return None;
                    }
                }
            }
        }
        Some(s)
    }

    /// Largest absolute coefficient (zero for the zero operator).
    pub fn max_abs_coeff(&self) -> Scalar {
        self.terms
            .values()
            .map(Scalar::abs)
            .fold(Scalar::zero(), |m, c| if c > m { c } else { m })
    }
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        self.try_add(rhs).expect("operator variable mismatch")
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        self.try_sub(rhs).expect("operator variable mismatch")
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        self.compose(rhs).expect("operator variable mismatch")
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (*t, -c)).collect(),
        }
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(t, c)| (c, t.render(self.nvars))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> WeylOp {
        WeylOp::dx(1)
    }
    fn x() -> WeylOp {
        WeylOp::x(1)
    }
    fn hermite_op() -> WeylOp {
        &(&x() * &d()) - &d().power(2)
    }

    #[test]
    fn additive_inverse_and_doubling() {
        let xd = &x() * &d();
        assert!((&xd + &xd.scale(&Scalar::int(-1))).is_zero());
        assert_eq!(&d() + &d(), d().scale(&Scalar::int(2)));
        let dh = hermite_op();
        assert_eq!(
            dh,
            WeylOp::from_terms(
                1,
                [
                    (OpTerm::new(1, 0, 1, 0), Scalar::one()),
                    (OpTerm::new(0, 0, 2, 0), Scalar::int(-1))
                ]
            )
        );
    }

    #[test]
    fn product_rule() {
        assert_eq!(&d() * &x(), &WeylOp::identity(1) + &(&x() * &d()));
        assert_eq!(
            &x() * &d(),
            WeylOp::term(1, OpTerm::new(1, 0, 1, 0), Scalar::one())
        );
    }

    #[test]
    fn euler_operator_squared() {
        let xd = &x() * &d();
        let sq = &xd * &xd;
        let expected = &xd + &WeylOp::term(1, OpTerm::new(2, 0, 2, 0), Scalar::one());
        assert_eq!(sq, expected);
        // oracle: (xD)^2 x^m = m^2 x^m
        for m in 0..=5u32 {
            let img = sq.apply(&Poly::x_pow(m)).unwrap();
            assert_eq!(img, Poly::monomial(1, m, 0, Scalar::int((m * m) as i64)));
        }
    }

    #[test]
    fn heisenberg_and_hermite_commutators() {
        assert_eq!(d().commutator(&x()).unwrap(), WeylOp::identity(1));
        assert_eq!(hermite_op().commutator(&d()).unwrap(), -&d());
    }

    #[test]
    fn actions() {
        assert_eq!(
            d().apply(&Poly::x_pow(3)).unwrap(),
            Poly::monomial(1, 2, 0, Scalar::int(3))
        );
        let he2 = Poly::from_coeffs(&[Scalar::int(-1), Scalar::zero(), Scalar::one()]);
        assert_eq!(
            hermite_op().apply(&he2).unwrap(),
            he2.scale(&Scalar::int(2))
        );
        let dxdy = &WeylOp::dx(2) * &WeylOp::dy();
        let xy = Poly::monomial(2, 1, 1, Scalar::one());
        assert_eq!(dxdy.apply(&xy).unwrap(), Poly::constant(2, Scalar::one()));
        assert!(WeylOp::zero(1).apply(&he2).unwrap().is_zero());
    }

    #[test]
    fn proportionality() {
        let c = hermite_op().commutator(&d()).unwrap();
        assert_eq!(c.scalar_multiple_of(&d()), Some(Scalar::int(-1)));
        assert_eq!(x().scalar_multiple_of(&d()), None);
        assert_eq!(
            WeylOp::zero(1).scalar_multiple_of(&d()),
            Some(Scalar::zero())
        );
        assert_eq!(d().scalar_multiple_of(&WeylOp::zero(1)), None);
    }

    #[test]
    fn float_proportionality_tolerates_rounding() {
        let e = Scalar::euler(40);
        let a = (&x() + &d()).scale(&e);
        let b = &x() + &d();
        let s = a.scalar_multiple_of(&b).unwrap();
        assert!((s.to_f64() - std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn mismatch_errors() {
        assert!(x().try_add(&WeylOp::y()).is_err());
        assert!(x().compose(&WeylOp::y()).is_err());
        assert!(x().apply(&Poly::zero(2)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(hermite_op().to_string(), "x*D - D^2");
        let mixed = (&WeylOp::dx(2) * &WeylOp::dy()).scale(&Scalar::ratio(-1, 2));
        assert_eq!(mixed.to_string(), "-1/2*Dx*Dy");
        assert_eq!(WeylOp::zero(2).to_string(), "0");
    }
}
