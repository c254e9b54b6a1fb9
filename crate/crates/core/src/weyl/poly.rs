use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub(crate) fn check_nvars(nvars: u8) -> Result<u8> {
    match nvars {
        1 | 2 => Ok(nvars),
        n => Err(Error::BadVariableCount(n)),
    }
}

pub(crate) fn same_nvars(left: u8, right: u8) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::VariableMismatch { left, right })
    }
}

/// Polynomial in one or two variables with sparse coefficients keyed by
/// `(x-degree, y-degree)`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    nvars: u8,
    coeffs: BTreeMap<(u32, u32), Scalar>,
}

impl Poly {
    pub fn zero(nvars: u8) -> Self {
        let nvars = check_nvars(nvars).expect("nvars must be 1 or 2");
        Poly {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: u8, c: Scalar) -> Self {
        Self::monomial(nvars, 0, 0, c)
    }

    /// `c * x^xdeg * y^ydeg`. Panics if `ydeg > 0` for a univariate polynomial.
    pub fn monomial(nvars: u8, xdeg: u32, ydeg: u32, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(xdeg, ydeg, c);
        p
    }

    /// `x^n` in one variable.
    pub fn x_pow(n: u32) -> Self {
        Self::monomial(1, n, 0, Scalar::one())
    }

    pub fn from_terms<I>(nvars: u8, terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Scalar)>,
    {
        let mut p = Self::zero(nvars);
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Univariate polynomial from coefficients in ascending degree.
    pub fn from_coeffs(coeffs: &[Scalar]) -> Self {
        Self::from_terms(
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    pub fn nvars(&self) -> u8 {
        self.nvars
    }

    pub fn add_term(&mut self, xdeg: u32, ydeg: u32, c: Scalar) {
        assert!(
            self.nvars == 2 || ydeg == 0,
            "y-degree on a univariate polynomial"
        );
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry((xdeg, ydeg)) {
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

    pub fn coeff(&self, xdeg: u32, ydeg: u32) -> Scalar {
        self.coeffs
            .get(&(xdeg, ydeg))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Stored terms in ascending `(x-degree, y-degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.values().all(Scalar::is_exact)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_terms(self.nvars, self.coeffs.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        same_nvars(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        same_nvars(self.nvars, other.nvars)?;
        let mut out = Poly::zero(self.nvars);
        for (&(i, j), a) in &self.coeffs {
            for (&(p, q), b) in &other.coeffs {
                out.add_term(i + p, j + q, a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, Scalar::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges the roles of x and y.
    pub fn swap_xy(&self) -> Poly {
        assert_eq!(self.nvars, 2, "swap_xy needs a bivariate polynomial");
        Poly::from_terms(
            2,
            self.coeffs.iter().map(|(&(i, j), c)| ((j, i), c.clone())),
        )
    }

    /// `p(-x, y)`.
    pub fn reflect_x(&self) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.coeffs.iter().map(|(&(i, j), c)| {
                let c = if i % 2 == 1 { -c } else { c.clone() };
                ((i, j), c)
            }),
        )
    }

    /// Embeds a univariate polynomial in x or y of a bivariate ring.
    pub fn lift(&self, into_y: bool) -> Poly {
        assert_eq!(self.nvars, 1);
        Poly::from_terms(
            2,
            self.coeffs.iter().map(|(&(i, _), c)| {
                let key = if into_y { (0, i) } else { (i, 0) };
                (key, c.clone())
            }),
        )
    }

    pub fn to_float(&self, digits: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (*k, v.to_float(digits)))
                .collect(),
        }
    }

    /// Largest absolute coefficient (zero for the zero polynomial).
    pub fn max_abs_coeff(&self) -> Scalar {
        self.coeffs
            .values()
            .map(Scalar::abs)
            .fold(Scalar::zero(), |m, c| if c > m { c } else { m })
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial variable mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial variable mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, xdeg: u32, ydeg: u32) -> fmt::Result {
    let mut first = true;
    for (name, d) in [("x", xdeg), ("y", ydeg)] {
        if d == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if d == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{d}")?;
        }
    }
    Ok(())
}

/// Joins signed `coeff*factor` terms in the `a - b + c` style.
pub(crate) fn write_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Scalar, String)>,
{
    let mut first = true;
    for (c, factor) in terms {
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let unit = mag == Scalar::one();
        if factor.is_empty() {
            write!(f, "{mag}")?;
        } else if unit {
            f.write_str(&factor)?;
        } else {
            write!(f, "{mag}*{factor}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // highest total degree first
        let mut keys: Vec<_> = self.coeffs.iter().collect();
        keys.sort_by(|a, b| {
            let (ai, aj) = *a.0;
            let (bi, bj) = *b.0;
            (bi + bj, bi).cmp(&(ai + aj, ai))
        });
        write_sum(
            f,
            keys.into_iter().map(|(&(i, j), c)| {
                let mut s = String::new();
                write_monomial(&mut s, i, j).unwrap();
                (c, s)
            }),
        )
    }
}
