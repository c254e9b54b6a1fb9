use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::*;
use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::hermite::{Convention, LambdaForm};
use crate::scalar::{validate_precision, Scalar, DEFAULT_PRECISION};
use crate::sl2::Family;

/// One registered check: its id and the identity it tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckInfo {
    pub id: &'static str,
    pub description: &'static str,
}

const fn info(id: &'static str, description: &'static str) -> CheckInfo {
    CheckInfo { id, description }
}

/// Every check id, in suite order.
pub const CHECKS: &[CheckInfo] = &[
    info("hermite-oracle", "exp(-D^2/2) x^n equals He_n from He_{k+1} = x He_k - k He_{k-1}"),
    info("eq2", "(xD - D^2) He_n = n He_n"),
    info("eq8", "[e,f] = 2h, [h,e] = -e, [h,f] = f for h = xD - n/2, e = D, f = x^2 D - n x (--family picks another family)"),
    info("eq12", "exp(-D^2/2) xD exp(D^2/2) = xD - D^2, as matrices"),
    info("eq19", "sl(2) relations of X1 = xD - D^2 - n/2, X2 = D, X3 = (x - D)(xD - D^2 - n)"),
    info("prop1", "X3 equals exp(-D^2/2)(x^2 D - n x)exp(D^2/2), as matrices"),
    info("eq25", "exp(D) He_n = sum_k C(n,k) He_{n-k}"),
    info("eq31", "exp(-D^2/2)(x + 1/e)^n = exp(xD - D^2 - n - D/(1-e)) He_n"),
    info("bch", "e^X e^Y = e^(X + s/(1-e^-s) Y) where [X,Y] = sY is computed exactly"),
    info("eq36", "(x Dx - Dx^2) + (y Dy - Dy^2) - 2b/sqrt(ac) Dx Dy has eigenfunctions H_{n,m} with eigenvalue n + m"),
    info("eq41", "H_{n,m} = exp(-(Dx^2 + Dy^2)/2) u_{n,m} under the chosen exponent pairing"),
    info("eq49", "exp((Dx^2 + Dy^2)/2) conjugates the bivariate Hermite operator to x Dx + y Dy - 2b/sqrt(ac) Dx Dy"),
    info("eq50", "(x Dx + y Dy - 2b/sqrt(ac) Dx Dy) u_{n,m} = (n + m) u_{n,m}"),
    info("eq53-literal", "sl(2) relations of h = (x Dx + y Dy + 1)/2 + a Dx Dy, e = a Dx Dy, f = xy/(2a) + (x Dx + y Dy)/2 + a/4 Dx Dy"),
    info("eq53-repaired", "sl(2) relations with f solved for in span{xy, x Dx + y Dy, Dx Dy, 1}"),
    info("eq55", "((x Dx + y Dy + 1)/2 - b/sqrt(ac) Dx Dy) u_{n,m} = (n + m + 1)/2 u_{n,m}"),
    info("eq58", "sl(2) relations of h', e', f' in the bivariate Hermite frame"),
    info("eq60", "[h', A-] = -A- with A- = -b/sqrt(ac) Dx Dy"),
    info("ladder", "sl(2) relations of k - n/2, k B^(k-1), (k - n) B^(k+1) on the power basis B^k"),
    info("theorem1", "exp(bivariate Hermite operator) H_{n,m}(b -> b') = a^(n/2) c^(m/2) e^(n+m) He_n(x) He_m(y), for three choices of b'"),
    info("eq78", "exp(h0 + e) exp((1-e) e) = exp(h0) on the power basis, h0 = (B/B') D"),
    info("legendre", "(1/(2^n n!)) D^n (x^2 - 1)^n equals the Bonnet recurrence"),
    info("laguerre", "(1/n!)(D - 1)^n x^n equals the Laguerre recurrence"),
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

const WEIGHTS: [u32; 4] = [0, 1, 2, 5];

/// Parameters for single checks and for the suite. Unset fields expand to
/// a default grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CheckConfig {
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub lambda: Option<LambdaForm>,
    pub alpha: Option<Scalar>,
    pub degree: Option<u32>,
    pub dim: Option<usize>,
    pub precision: u32,
    pub tolerance: Option<Scalar>,
    pub variant: Option<Theorem1Variant>,
    pub family: Option<Family>,
    pub convention: Convention,
    /// Largest univariate degree in default grids.
    pub max_n: u32,
    /// Largest `n + m` in default bivariate grids.
    pub max_nm: u32,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            n: None,
            m: None,
            lambda: None,
            alpha: None,
            degree: None,
            dim: None,
            precision: DEFAULT_PRECISION,
            tolerance: None,
            variant: None,
            family: None,
            convention: Convention::NWithX,
            max_n: 12,
            max_nm: 6,
        }
    }
}

type Job = Box<dyn Fn() -> VerificationReport + Send + Sync>;

impl CheckConfig {
    fn settings(&self) -> FloatSettings {
        FloatSettings {
            precision: self.precision,
            tolerance: self.tolerance.clone(),
        }
    }

    fn ns(&self, default: impl IntoIterator<Item = u32>) -> Vec<u32> {
        match self.n {
            Some(n) => vec![n],
            None => default.into_iter().collect(),
        }
    }

    fn lambdas(&self) -> Vec<LambdaForm> {
        match &self.lambda {
            Some(l) => vec![l.clone()],
            None => LambdaForm::standard_samples(),
        }
    }

    fn pairs(&self) -> Vec<(u32, u32)> {
        match (self.n, self.m) {
            (Some(n), Some(m)) => vec![(n, m)],
            _ => (0..=self.max_nm)
                .flat_map(|t| (0..=t).map(move |n| (n, t - n)))
                .filter(|&(n, m)| self.n.is_none_or(|x| x == n) && self.m.is_none_or(|x| x == m))
                .collect(),
        }
    }

    fn alphas(&self) -> Vec<Scalar> {
        match &self.alpha {
            Some(a) => vec![a.clone()],
            None => std::iter::once(Scalar::one())
                .chain(self.lambdas().iter().map(|l| -&l.coupling()))
                .collect(),
        }
    }

    fn relation_params(
        &self,
        n: Scalar,
        alpha: Scalar,
        lambda: LambdaForm,
        dim: usize,
    ) -> RelationParams {
        RelationParams {
            n,
            alpha,
            lambda,
            dim,
        }
    }

    fn jobs(&self, id: &str) -> Result<Vec<Job>> {
        let s = self.settings();
        let mut jobs: Vec<Job> = Vec::new();
        let lam0 = self.lambdas()[0].clone();
        match id {
            "hermite-oracle" => {
                for n in self.ns(0..=self.max_n) {
                    jobs.push(Box::new(move || verify_hermite_oracle(n)));
                }
            }
            "eq2" => {
                for n in self.ns(0..=self.max_n) {
                    let lam = lam0.clone();
                    jobs.push(Box::new(move || {
                        verify_eigen(EigenCheck::Hermite, n, 0, &lam)
                    }));
                }
            }
            "eq36" | "eq50" | "eq55" => {
                let check = match id {
                    "eq36" => EigenCheck::BivariateHermite,
                    "eq50" => EigenCheck::Transformed,
                    _ => EigenCheck::Cartan,
                };
                for lam in self.lambdas() {
                    for (n, m) in self.pairs() {
                        let lam = lam.clone();
                        jobs.push(Box::new(move || verify_eigen(check, n, m, &lam)));
                    }
                }
            }
            "eq41" => {
                let conv = self.convention;
                for lam in self.lambdas() {
                    for (n, m) in self.pairs() {
                        let lam = lam.clone();
                        jobs.push(Box::new(move || {
                            verify_transform_consistency(n, m, &lam, conv)
                        }));
                    }
                }
            }
            "eq8" | "eq19" | "eq53-literal" | "eq53-repaired" | "eq58" | "ladder" => {
                let family = match id {
                    "eq8" => self.family.unwrap_or(Family::Univariate),
                    "eq19" => Family::HermiteConjugated,
                    "eq53-literal" => Family::BivariateLiteral,
                    "eq53-repaired" => Family::BivariateRepaired,
                    "eq58" => Family::BivariateConjugated,
                    _ => Family::Ladder,
                };
                let mut grid = Vec::new();
                match family {
                    Family::Univariate | Family::HermiteConjugated => {
                        for n in self.ns(WEIGHTS) {
                            grid.push(self.relation_params(
                                Scalar::int(n as i64),
                                Scalar::one(),
                                lam0.clone(),
                                1,
                            ));
                        }
                    }
                    Family::BivariateLiteral | Family::BivariateRepaired => {
                        for a in self.alphas() {
                            grid.push(self.relation_params(Scalar::zero(), a, lam0.clone(), 1));
                        }
                    }
                    Family::BivariateConjugated => {
                        for lam in self.lambdas() {
                            grid.push(self.relation_params(Scalar::zero(), Scalar::one(), lam, 1));
                        }
                    }
                    Family::Ladder => {
                        let dims = self.dim.map_or(vec![1, 2, 3, 8, 16], |d| vec![d]);
                        for n in self.ns(WEIGHTS) {
                            for &d in &dims {
                                grid.push(self.relation_params(
                                    Scalar::int(n as i64),
                                    Scalar::one(),
                                    lam0.clone(),
                                    d,
                                ));
                            }
                        }
                    }
                }
                for rp in grid {
                    jobs.push(Box::new(move || verify_relations(family, &rp)));
                }
            }
            "eq60" => {
                for lam in self.lambdas() {
                    jobs.push(Box::new(move || verify_lowering(&lam)));
                }
            }
            "eq12" => {
                let degree = self.degree.unwrap_or(8);
                let lam = lam0.clone();
                jobs.push(Box::new(move || {
                    verify_conjugation(ConjugationCheck::Hermite, degree, &lam)
                }));
            }
            "eq49" => {
                let degree = self.degree.unwrap_or(8);
                for lam in self.lambdas() {
                    jobs.push(Box::new(move || {
                        verify_conjugation(ConjugationCheck::Bivariate, degree, &lam)
                    }));
                }
            }
            "prop1" => {
                let degree = self.degree.unwrap_or(10);
                let mut weights = self.ns(WEIGHTS);
                if self.n.is_none() {
                    weights.push(degree);
                }
                for n in weights {
                    jobs.push(Box::new(move || verify_prop1(n, degree)));
                }
            }
            "eq25" => {
                for n in self.ns(0..=self.max_n) {
                    jobs.push(Box::new(move || verify_eq25(n)));
                }
            }
            "eq31" => {
                for n in self.ns(0..=self.max_n.min(6)) {
                    let degree = self.degree.unwrap_or(n + 8);
                    let s = s.clone();
                    jobs.push(Box::new(move || verify_eq31(n, degree, &s)));
                }
            }
            "bch" => {
                let mut pairs = vec![
                    (BchPair::HermiteDerivative, self.degree.unwrap_or(10)),
                    (BchPair::EulerDerivative, self.degree.unwrap_or(10)),
                    (BchPair::Commuting, self.degree.unwrap_or(10)),
                ];
                if self.degree.is_none() {
                    pairs.push((BchPair::HermiteDerivative, 20));
                }
                for lam in self.lambdas() {
                    let pair = BchPair::BivariateMixed {
                        lambda: lam,
                        kappa: Scalar::one(),
                    };
                    pairs.push((pair, self.degree.unwrap_or(6)));
                }
                for (pair, degree) in pairs {
                    let s = s.clone();
                    jobs.push(Box::new(move || verify_bch_pair(&pair, degree, &s)));
                }
            }
            "theorem1" => {
                let variants = self
                    .variant
                    .map_or(Theorem1Variant::ALL.to_vec(), |v| vec![v]);
                for lam in self.lambdas() {
                    for (n, m) in self.pairs() {
                        let degree = self.degree.unwrap_or(n + m);
                        for &v in &variants {
                            let (lam, s) = (lam.clone(), s.clone());
                            jobs.push(Box::new(move || verify_theorem1(n, m, &lam, v, degree, &s)));
                        }
                    }
                }
            }
            "eq78" => {
                let n = self.n.unwrap_or(0);
                for dim in self.dim.map_or(vec![2, 4, 8, 16], |d| vec![d]) {
                    let s = s.clone();
                    jobs.push(Box::new(move || verify_eq78(dim, n, &s)));
                }
            }
            "legendre" => {
                for n in self.ns(0..=20) {
                    jobs.push(Box::new(move || verify_legendre(n)));
                }
            }
            "laguerre" => {
                for n in self.ns(0..=20) {
                    jobs.push(Box::new(move || verify_laguerre(n)));
                }
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown check id {other:?}"
                )))
            }
        }
        Ok(jobs)
    }
}

fn run_jobs(jobs: Vec<Job>) -> Vec<VerificationReport> {
    // order follows the job list, not completion
    jobs.par_iter().map(|j| j()).collect()
}

/// Runs one check id (or `all`) over the grid described by `config`.
pub fn run_check(id: &str, config: &CheckConfig) -> Result<Vec<VerificationReport>> {
    validate_precision(config.precision)?;
    if id == "all" {
        return run_suite(config);
    }
    Ok(run_jobs(config.jobs(id)?))
}

/// Every registered check, in registry order.
pub fn run_suite(config: &CheckConfig) -> Result<Vec<VerificationReport>> {
    validate_precision(config.precision)?;
    let mut jobs = Vec::new();
    for c in CHECKS {
        jobs.extend(config.jobs(c.id)?);
    }
    Ok(run_jobs(jobs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_registered_id_runs() {
        let cfg = CheckConfig {
            n: Some(1),
            m: Some(1),
            dim: Some(3),
            degree: Some(4),
            ..CheckConfig::default()
        };
        for c in CHECKS {
            let reports = run_check(c.id, &cfg).unwrap();
            assert!(!reports.is_empty(), "{}", c.id);
        }
        assert!(run_check("nope", &cfg).is_err());
    }

    #[test]
    fn grid_pairs() {
        let cfg = CheckConfig {
            max_nm: 2,
            ..CheckConfig::default()
        };
        assert_eq!(
            cfg.pairs(),
            vec![(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
        );
    }

    #[test]
    fn config_from_json() {
        let cfg: CheckConfig = serde_json::from_str(
            r#"{"n": 3, "lambda": "1,1/2,1", "variant": "computed-s", "alpha": "-1/2"}"#,
        )
        .unwrap();
        assert_eq!(cfg.n, Some(3));
        assert_eq!(cfg.variant, Some(Theorem1Variant::ComputedS));
        assert_eq!(cfg.alpha, Some(Scalar::ratio(-1, 2)));
        assert!(serde_json::from_str::<CheckConfig>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn low_precision_rejected() {
        let cfg = CheckConfig {
            precision: 5,
            ..CheckConfig::default()
        };
        assert!(run_check("eq31", &cfg).is_err());
    }
}
