//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use hermops::hermite::{
    hermite_e, hermite_oracle, laguerre_oracle, laguerre_rodrigues, sign_convention, LambdaForm,
    SignConvention,
};
use hermops::polyspace::GradedSpace;
use hermops::scalar::Scalar;
use hermops::sl2::{
    check_ladder_relations, check_relations, hermite_conjugated_generators,
    lowering_relation_residual, univariate_generators, LadderRep,
};
use hermops::verify::{
    bch_check, run_check, tolerance_exp10, verify_bch_pair, verify_conjugation, verify_eigen,
    verify_eq25, verify_eq31, verify_eq78, verify_laguerre, verify_legendre, verify_prop1,
    verify_theorem1, BchPair, CheckConfig, ConjugationCheck, EigenCheck, FloatSettings,
    Theorem1Variant, VerificationReport,
};
use hermops::weyl::{mixed_derivative, OpTerm, Poly, WeylOp};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn settings(tol_exp: u32) -> FloatSettings {
    FloatSettings {
        precision: 50,
        tolerance: Some(tolerance_exp10(tol_exp)),
    }
}

fn all_pass(reports: &[VerificationReport]) -> Outcome {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{} reports", reports.len())),
        Some(r) => Err(format!(
            "{} {} residual {} verdict {}",
            r.check_id,
            r.params_string(),
            r.residual_string(),
            r.verdict
        )),
    }
}

fn max_residual(reports: &[VerificationReport]) -> String {
    let worst = reports
        .iter()
        .map(|r| r.residual.clone())
        .fold(Scalar::zero(), |m, r| if r > m { r } else { m })
        .to_f64();
    format!("{worst:.3e}")
}

fn c1_hermite_oracle() -> Outcome {
    let start = Instant::now();
    for n in 0..=64 {
        if hermite_e(n) != hermite_oracle(n) {
            return Err(format!("mismatch at n = {n}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 5.0 {
        return Err(format!("took {secs:.2} s"));
    }
    Ok(format!("n <= 64 in {secs:.2} s"))
}

fn c2_commutation_tables() -> Outcome {
    let weights = [0i64, 1, 2, 5];
    for &n in &weights {
        let n = Scalar::int(n);
        if !check_relations(&univariate_generators(&n)).all_pass() {
            return Err(format!("univariate family, n = {n}"));
        }
        if !check_relations(&hermite_conjugated_generators(&n)).all_pass() {
            return Err(format!("Hermite-conjugated family, n = {n}"));
        }
        for dim in 1..=16 {
            if !check_ladder_relations(&LadderRep::new(n.clone(), dim).unwrap()).all_pass() {
                return Err(format!("ladder n = {n}, dim = {dim}"));
            }
        }
    }
    for lam in LambdaForm::standard_samples() {
        if !lowering_relation_residual(&lam).unwrap().is_zero() {
            return Err(format!("[h',A-] = -A- at lambda {lam}"));
        }
    }
    Ok("univariate, Hermite-conjugated, lowering pair, ladder dim <= 16".into())
}

fn c3_eigen_equations() -> Outcome {
    let mut reports = Vec::new();
    let lam0 = &LambdaForm::standard_samples()[0];
    for n in 0..=32 {
        reports.push(verify_eigen(EigenCheck::Hermite, n, 0, lam0));
    }
    for lam in LambdaForm::standard_samples() {
        for t in 0..=12 {
            for n in 0..=t {
                for check in [
                    EigenCheck::BivariateHermite,
                    EigenCheck::Transformed,
                    EigenCheck::Cartan,
                ] {
                    reports.push(verify_eigen(check, n, t - n, &lam));
                }
            }
        }
    }
    all_pass(&reports)
}

fn c4_prop1() -> Outcome {
    let reports: Vec<_> = (0..=10).map(|n| verify_prop1(n, 10)).collect();
    all_pass(&reports).map(|s| format!("{s}, N = 10"))
}

fn c5_prop3() -> Outcome {
    let reports: Vec<_> = LambdaForm::standard_samples()
        .iter()
        .map(|lam| verify_conjugation(ConjugationCheck::Bivariate, 8, lam))
        .collect();
    all_pass(&reports).map(|s| format!("{s}, N = 8"))
}

fn c6_shift_identity() -> Outcome {
    let reports: Vec<_> = (0..=32).map(verify_eq25).collect();
    all_pass(&reports)
}

fn c7_eq31() -> Outcome {
    let start = Instant::now();
    let s = settings(8);
    let mut worst = Scalar::zero();
    for n in 0..=6 {
        let base = verify_eq31(n, n + 8, &s);
        let wide = verify_eq31(n, n + 12, &s);
        for r in [&base, &wide] {
            if !r.passed() {
                return Err(format!(
                    "n = {n}, {}: residual {}",
                    r.params_string(),
                    r.residual_string()
                ));
            }
        }
        let change = (&base.residual - &wide.residual).abs();
        if change >= tolerance_exp10(8) {
            return Err(format!("n = {n}: residual moved by {change} when N grew"));
        }
        if base.residual > worst {
            worst = base.residual.clone();
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 30.0 {
        return Err(format!("took {secs:.2} s"));
    }
    Ok(format!("max residual {:.3e}, {secs:.2} s", worst.to_f64()))
}

fn c8_bch() -> Outcome {
    let s = settings(8);
    let mut reports = run_check("bch", &CheckConfig::default()).map_err(|e| e.to_string())?;
    for lam in LambdaForm::standard_samples() {
        for kappa in [Scalar::one(), Scalar::ratio(-3, 2)] {
            let pair = BchPair::BivariateMixed {
                lambda: lam.clone(),
                kappa,
            };
            reports.push(verify_bch_pair(&pair, 8, &s));
        }
    }
    reports.push(verify_bch_pair(&BchPair::HermiteDerivative, 20, &s));
    reports.push(verify_bch_pair(&BchPair::EulerDerivative, 20, &s));
    let lam = &LambdaForm::standard_samples()[2];
    let d = hermops::hermite::bivariate_hermite_operator(lam);
    let r = bch_check(&d, &mixed_derivative(), GradedSpace::bivariate(6), &s);
    if !r.notes.iter().any(|n| n == "s = -2") {
        return Err(format!(
            "expected s = -2 for the mixed pair, notes {:?}",
            r.notes
        ));
    }
    reports.push(r);
    for r in &reports {
        if r.residual > tolerance_exp10(8) || !r.passed() {
            return Err(format!(
                "{}: residual {}",
                r.params_string(),
                r.residual_string()
            ));
        }
    }
    Ok(format!(
        "{} pairs, max residual {}",
        reports.len(),
        max_residual(&reports)
    ))
}

fn c9_theorem1() -> Outcome {
    let s = settings(6);
    let mut computed = Vec::new();
    let mut recorded = Vec::new();
    for lam in LambdaForm::standard_samples() {
        for t in 0..=6 {
            for n in 0..=t {
                let m = t - n;
                for v in Theorem1Variant::ALL {
                    let r = verify_theorem1(n, m, &lam, v, n + m, &s);
                    match v {
                        Theorem1Variant::ComputedS => computed.push(r),
                        _ => recorded.push(r),
                    }
                }
            }
        }
    }
    all_pass(&computed)?;
    let mut detail = format!("computed-s max residual {}", max_residual(&computed));
    for v in [
        Theorem1Variant::PaperOneMinusE,
        Theorem1Variant::PaperEMinusOne,
    ] {
        let runs: Vec<_> = recorded
            .iter()
            .filter(|r| r.params.get("variant").map(String::as_str) == Some(v.label()))
            .cloned()
            .collect();
        let failing = runs.iter().filter(|r| !r.passed()).count();
        detail += &format!(
            "; {} max residual {} ({failing}/{} outside tolerance, recorded)",
            v.label(),
            max_residual(&runs),
            runs.len()
        );
    }
    Ok(detail)
}

fn c10_ladder_identity() -> Outcome {
    let s = settings(10);
    let reports: Vec<_> = (2..=16).map(|dim| verify_eq78(dim, 0, &s)).collect();
    all_pass(&reports).map(|r| format!("{r}, max residual {}", max_residual(&reports)))
}

fn c11_rodrigues() -> Outcome {
    let mut reports = Vec::new();
    for n in 0..=20 {
        reports.push(verify_legendre(n));
        reports.push(verify_laguerre(n));
        let conv = sign_convention(&laguerre_rodrigues(n), &laguerre_oracle(n), n);
        if conv != Some(SignConvention::Direct) {
            return Err(format!("Laguerre sign convention at n = {n}: {conv:?}"));
        }
    }
    all_pass(&reports).map(|s| format!("{s}, Laguerre convention direct"))
}

fn random_op(nvars: u8) -> impl Strategy<Value = WeylOp> {
    let y = if nvars == 2 { 0u32..=2 } else { 0u32..=0 };
    let term = (0u32..=2, y.clone(), 0u32..=2, y).prop_map(|(a, b, c, d)| OpTerm::new(a, b, c, d));
    let coeff = (-5i64..=5, 1i64..=3).prop_map(|(p, q)| Scalar::ratio(p, q));
    prop::collection::vec((term, coeff), 0..4).prop_map(move |t| WeylOp::from_terms(nvars, t))
}

fn random_poly(nvars: u8) -> impl Strategy<Value = Poly> {
    let y = if nvars == 2 { 0u32..=3 } else { 0u32..=0 };
    let coeff = (-5i64..=5, 1i64..=3).prop_map(|(p, q)| Scalar::ratio(p, q));
    prop::collection::vec(((0u32..=3, y), coeff), 0..5)
        .prop_map(move |t| Poly::from_terms(nvars, t))
}

fn c12_properties() -> Outcome {
    let cases = 500;
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    let strat =
        (1u8..=2).prop_flat_map(|n| (random_op(n), random_op(n), random_op(n), random_poly(n)));
    runner
        .run(&strat, |(a, b, c, p)| {
            let hom = a.compose(&b).unwrap().apply(&p).unwrap();
            prop_assert_eq!(hom, a.apply(&b.apply(&p).unwrap()).unwrap());
            let ab = a.commutator(&b).unwrap();
            prop_assert_eq!(&ab, &-&b.commutator(&a).unwrap());
            let jacobi = &(&a.commutator(&b.commutator(&c).unwrap()).unwrap()
                + &b.commutator(&c.commutator(&a).unwrap()).unwrap())
                + &c.commutator(&ab).unwrap();
            prop_assert!(jacobi.is_zero());
            Ok(())
        })
        .map_err(|e| format!("property failure: {e}"))?;

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hermops"))
            .args(["check", "all"])
            .env_remove("HERMOPS_PRECISION")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("two runs of `check all` differ".into());
    }
    Ok(format!(
        "{cases} cases x 3 properties; `check all` byte-identical ({} bytes)",
        a.stdout.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Hermite oracle equivalence", c1_hermite_oracle),
        ("commutation tables", c2_commutation_tables),
        ("eigen-equations", c3_eigen_equations),
        ("Gaussian conjugate of the raising operator", c4_prop1),
        ("bivariate conjugation identity", c5_prop3),
        ("shift identity for He_n", c6_shift_identity),
        ("shifted-power identity, numeric", c7_eq31),
        ("BCH closed form with computed s", c8_bch),
        ("bivariate BCH theorem, computed-s variant", c9_theorem1),
        ("ladder exponential identity", c10_ladder_identity),
        ("Rodrigues formulas", c11_rodrigues),
        ("property suites and determinism", c12_properties),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{secs:.2} s]",
                i + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:>2} FAIL  {name}: {detail} [{secs:.2} s]",
                    i + 1
                );
            }
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
