//! Verification suites driving the library checkers; each suite yields a
//! flat list of named pass/fail/skip records.

use crate::report::{check, skip, Check};
use xlaguerre::appendix::golden_type3_tables;
use xlaguerre::classical::{
    laguerre_derivative_identity_check, laguerre_three_point_identities, AlphaParam,
};
use xlaguerre::exceptional::{
    lemma1_check, lemma2_check, xlag, xlag1, xlag3, xlag3_alt, xlag3_integral, Family,
    FirstOrderOp, Variant,
};
use xlaguerre::numerics::gram::{gram_matrix, inner_product, norm_closed_form};
use xlaguerre::numerics::quad::Tolerance;
use xlaguerre::numerics::substitute_alpha;
use xlaguerre::ode::{
    darboux_recovers_family, eigen_residual, factorization_identity_check, gauge_check,
    s_operator_eigen_check, symmetric_form_check, SeedFunction, SeedTag,
};
use xlaguerre::spectral::{
    boundary_functional, classify, completeness_residuals, first_solution_bounded_probe,
    l2_membership_probe, residuals_decrease, second_solution_growth_probe, BoundaryConditionKind,
    BoundaryFn, DeficiencyIndex, EndpointClass,
};

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub m_range: (u32, u32),
    pub k_range: (u32, u32),
    pub nmax_offset: u32,
    pub family: Option<Family>,
    pub alphas: Option<Vec<f64>>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            m_range: (1, 3),
            k_range: (1, 8),
            nmax_offset: 6,
            family: None,
            alphas: None,
        }
    }
}

impl SuiteParams {
    fn families(&self) -> Vec<Family> {
        match self.family {
            Some(f) => vec![f],
            None => vec![Family::TypeI, Family::TypeII, Family::TypeIII],
        }
    }

    fn alphas_for(&self, family: Family, m: u32) -> Vec<f64> {
        match &self.alphas {
            Some(list) => list.clone(),
            None => match family {
                Family::TypeI => vec![0.5, 1.5],
                Family::TypeII => vec![m as f64 - 0.5, m as f64 + 0.5],
                Family::TypeIII => vec![-0.75, -0.5, -0.25],
            },
        }
    }

    fn ms(&self) -> impl Iterator<Item = u32> {
        self.m_range.0..=self.m_range.1
    }

    fn ks(&self) -> impl Iterator<Item = u32> {
        self.k_range.0..=self.k_range.1
    }
}

pub fn run_appendix() -> Vec<Check> {
    golden_type3_tables()
        .into_iter()
        .map(|(m, n, expected)| {
            let ok = xlag3(m, n).map(|p| p == expected).unwrap_or(false);
            check(
                format!("appendix/m={m}/n={n}"),
                ok,
                if ok {
                    "matches".into()
                } else {
                    "MISMATCH".into()
                },
            )
        })
        .collect()
}

pub fn run_identities(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for m in params.ms().filter(|m| *m >= 1) {
        for k in params.ks() {
            let n = m + k;
            out.push(check(
                format!("identities/lemma1/m={m}/k={k}"),
                lemma1_check(m, k),
                String::new(),
            ));
            out.push(check(
                format!("identities/lemma2/m={m}/k={k}"),
                lemma2_check(m, k),
                String::new(),
            ));
            let direct = xlag3(m, n);
            let alt = xlag3_alt(m, n);
            let integral = xlag3_integral(m, n);
            let ok =
                matches!((&direct, &alt, &integral), (Ok(a), Ok(b), Ok(c)) if a == b && a == c);
            out.push(check(
                format!("identities/type3-representations/m={m}/k={k}"),
                ok,
                String::new(),
            ));
        }
        // ladder definitions
        for n in Family::TypeIII.degrees(m, 4) {
            if n == 0 {
                continue;
            }
            let a_op = FirstOrderOp::new(Family::TypeIII, Variant::A, m, 1);
            let ok = a_op
                .apply_poly(&xlaguerre::classical::laguerre(
                    n as i64 - m as i64 - 1,
                    AlphaParam::alpha(1),
                ))
                .map(|img| xlag3(m, n).map(|p| p == -&img).unwrap_or(false))
                .unwrap_or(false);
            out.push(check(
                format!("identities/type3-ladder/m={m}/n={n}"),
                ok,
                String::new(),
            ));
        }
        for n in Family::TypeI.degrees(m, 4) {
            let a_op = FirstOrderOp::new(Family::TypeI, Variant::A, m, -1);
            let ok = a_op
                .apply_poly(&xlaguerre::classical::laguerre(
                    n as i64 - m as i64,
                    AlphaParam::alpha(-1),
                ))
                .map(|img| xlag1(m, n).map(|p| p == -&img).unwrap_or(false))
                .unwrap_or(false);
            out.push(check(
                format!("identities/type1-ladder/m={m}/n={n}"),
                ok,
                String::new(),
            ));
        }
        // eigen-residuals for the three families
        for family in [Family::TypeI, Family::TypeII, Family::TypeIII] {
            for n in family
                .degrees(m, (params.k_range.1 + 2) as usize)
                .into_iter()
                .filter(|&n| n <= m + params.k_range.1)
            {
                let ok = eigen_residual(family, m, n)
                    .map(|r| r.is_zero())
                    .unwrap_or(false);
                out.push(check(
                    format!(
                        "identities/eigen-residual/{}/m={m}/n={n}",
                        family.label().replace(' ', "-")
                    ),
                    ok,
                    String::new(),
                ));
            }
        }
        out.push(check(
            format!("identities/factorization/Type-I/m={m}"),
            factorization_identity_check(Family::TypeI, m, 8),
            String::new(),
        ));
        out.push(check(
            format!("identities/factorization/Type-II/m={m}"),
            factorization_identity_check(Family::TypeII, m, 8),
            String::new(),
        ));
        out.push(check(
            format!("identities/factorization/Type-III/m={m}"),
            factorization_identity_check(Family::TypeIII, m, 8),
            String::new(),
        ));
        out.push(check(
            format!("identities/gauge/m={m}"),
            gauge_check(m, 8),
            String::new(),
        ));
        for n in Family::TypeIII.degrees(m, 4) {
            let ok = s_operator_eigen_check(m, n).unwrap_or(false);
            out.push(check(
                format!("identities/s-operator/m={m}/n={n}"),
                ok,
                String::new(),
            ));
        }
        // seeds and the Darboux engine
        for tag in [SeedTag::Phi0, SeedTag::Phi1, SeedTag::Phi2, SeedTag::Phi3] {
            let seed = SeedFunction::new(tag, m, 0);
            out.push(check(
                format!("identities/seed-eigenvalue/{tag:?}/m={m}"),
                seed.eigen_residual().is_zero(),
                String::new(),
            ));
        }
        for family in [Family::TypeI, Family::TypeII, Family::TypeIII] {
            let result = darboux_recovers_family(family, m);
            let ok = match (family, &result) {
                (Family::TypeIII, Ok(d)) => *d == xlaguerre::alpha::AlphaPoly::linear(-1, -1),
                (_, Ok(d)) => d.is_zero(),
                (_, Err(_)) => false,
            };
            let details = match &result {
                Ok(d) => format!("a0 shift: {d}"),
                Err(e) => format!("{e}"),
            };
            out.push(check(
                format!(
                    "identities/darboux/{}/m={m}",
                    family.label().replace(' ', "-")
                ),
                ok,
                details,
            ));
        }
    }
    // classical identities feeding the proofs
    for n in 1..=8u32 {
        out.push(check(
            format!("identities/laguerre-derivative/n={n}"),
            laguerre_derivative_identity_check(n, AlphaParam::alpha(0)),
            String::new(),
        ));
        out.push(check(
            format!("identities/laguerre-three-point/n={n}"),
            laguerre_three_point_identities(n, AlphaParam::alpha(0)),
            String::new(),
        ));
    }
    out
}

pub fn run_norms(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for family in params.families() {
        let m_lo = if family == Family::TypeII {
            params.m_range.0
        } else {
            params.m_range.0.max(1)
        };
        for m in m_lo..=params.m_range.1 {
            for a in params.alphas_for(family, m) {
                if !family.alpha_admissible(m, a) {
                    out.push(skip(
                        format!("norms/{}/m={m}/alpha={a}", family.label().replace(' ', "-")),
                        "alpha out of the admissible range".into(),
                    ));
                    continue;
                }
                for n in family
                    .degrees(m, (params.nmax_offset + 2) as usize)
                    .into_iter()
                    .filter(|&n| n <= m + params.nmax_offset)
                {
                    let name = format!(
                        "norms/{}/m={m}/alpha={a}/n={n}",
                        family.label().replace(' ', "-")
                    );
                    let closed = match norm_closed_form(family, m, n, a) {
                        Ok(v) => v,
                        Err(e) => {
                            out.push(check(name, false, format!("{e}")));
                            continue;
                        }
                    };
                    let p = substitute_alpha(&xlag(family, m, n).unwrap(), a);
                    let tol = Tolerance::abs_rel(1e-12 * closed.max(1.0), 1e-11);
                    match inner_product(family, m, a, &p, &p, tol) {
                        Ok(q) => {
                            let rel = (q.value - closed).abs() / closed;
                            let bound = if family == Family::TypeIII && n == 0 {
                                1e-6
                            } else {
                                1e-8
                            };
                            out.push(check(name, rel < bound, format!("rel_err={rel:.3e}")));
                        }
                        Err(e) => out.push(check(name, false, format!("{e}"))),
                    }
                }
                // the symmetric form agrees with the expression numerically
                let n_probe = family.degrees(m, 2)[1];
                let y = xlag(family, m, n_probe).unwrap();
                let ok = symmetric_form_check(family, m, a, &[0.5, 1.0, 2.5], &y).unwrap_or(false);
                out.push(check(
                    format!(
                        "norms/symmetric-form/{}/m={m}/alpha={a}",
                        family.label().replace(' ', "-")
                    ),
                    ok,
                    String::new(),
                ));
            }
        }
    }
    out
}

pub fn run_gram(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for family in params.families() {
        let m_lo = if family == Family::TypeII {
            params.m_range.0
        } else {
            params.m_range.0.max(1)
        };
        for m in m_lo..=params.m_range.1 {
            for a in params.alphas_for(family, m) {
                let name = format!("gram/{}/m={m}/alpha={a}", family.label().replace(' ', "-"));
                if !family.alpha_admissible(m, a) {
                    out.push(skip(name, "alpha out of the admissible range".into()));
                    continue;
                }
                let degrees: Vec<u32> = family
                    .degrees(m, (params.nmax_offset + 2) as usize)
                    .into_iter()
                    .filter(|&n| n <= m + params.nmax_offset)
                    .collect();
                match gram_matrix(family, m, a, &degrees, Tolerance::abs_rel(1e-11, 1e-10)) {
                    Ok(rep) => {
                        let diag_ok = rep.diag_rel_errors.iter().all(|e| *e < 1e-8);
                        let ok = rep.max_offdiag_rel < 1e-8 && diag_ok;
                        out.push(check(
                            name,
                            ok,
                            format!(
                                "max_offdiag_rel={:.3e} max_diag_rel_err={:.3e}",
                                rep.max_offdiag_rel,
                                rep.diag_rel_errors.iter().cloned().fold(0.0f64, f64::max)
                            ),
                        ));
                    }
                    Err(e) => out.push(check(name, false, format!("{e}"))),
                }
            }
        }
    }
    out
}

pub fn run_spectral(params: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    // classification against the theorem table
    let sweeps: Vec<(Family, u32, f64, EndpointClass)> = {
        let mut v = Vec::new();
        for m in 1..=3u32 {
            for a in [0.25, 0.5, 0.75, 0.99, 1.0, 1.5, 2.5] {
                let expect = if a < 1.0 {
                    EndpointClass::LimitCircle
                } else {
                    EndpointClass::LimitPoint
                };
                v.push((Family::TypeI, m, a, expect));
            }
        }
        for a in [-0.5f64, -0.1, 0.5, 0.99, 1.0, 1.5] {
            let expect = if a < 1.0 {
                EndpointClass::LimitCircle
            } else {
                EndpointClass::LimitPoint
            };
            v.push((Family::TypeII, 0, a, expect));
        }
        for a in [0.25f64, 0.75, 1.0, 2.0] {
            let expect = if a < 1.0 {
                EndpointClass::LimitCircle
            } else {
                EndpointClass::LimitPoint
            };
            v.push((Family::TypeII, 1, a, expect));
        }
        for m in 2..=3u32 {
            for a in [m as f64 - 0.5, m as f64 + 0.5] {
                v.push((Family::TypeII, m, a, EndpointClass::LimitPoint));
            }
        }
        for a in [-0.9, -0.6, -0.3, -0.1] {
            v.push((Family::TypeIII, 1, a, EndpointClass::LimitCircle));
        }
        v
    };
    for (family, m, a, expect) in sweeps {
        let name = format!(
            "spectral/classify/{}/m={m}/alpha={a}",
            family.label().replace(' ', "-")
        );
        match classify(family, m, a) {
            Ok(c) => {
                let want_di = if expect == EndpointClass::LimitCircle {
                    DeficiencyIndex(1, 1)
                } else {
                    DeficiencyIndex(0, 0)
                };
                let ok = c.at_zero == expect
                    && c.at_infinity == EndpointClass::LimitPoint
                    && c.deficiency == want_di;
                out.push(check(
                    name,
                    ok,
                    format!(
                        "at0={} def=({},{})",
                        c.at_zero.label(),
                        c.deficiency.0,
                        c.deficiency.1
                    ),
                ));
                // corroborating integrability probe for x^{-a}
                let probe = l2_membership_probe(family, m, a, -a).unwrap();
                out.push(check(
                    format!(
                        "spectral/l2-probe/{}/m={m}/alpha={a}",
                        family.label().replace(' ', "-")
                    ),
                    probe.integrable == (expect == EndpointClass::LimitCircle)
                        && probe.numeric_agrees,
                    format!("exponent={}", probe.exponent),
                ));
            }
            Err(e) => out.push(check(name, false, format!("{e}"))),
        }
    }
    // boundary functionals separate eigenfunctions from x^{-a}
    for family in params.families() {
        let m_lo = if family == Family::TypeII { 0 } else { 1 };
        for m in m_lo..=params.m_range.1.min(3) {
            for a in params.alphas_for(family, m) {
                if !family.alpha_admissible(m, a) {
                    continue;
                }
                let fam = family.label().replace(' ', "-");
                let mut all_pass = true;
                for n in family.degrees(m, 5).into_iter() {
                    let p = substitute_alpha(&xlag(family, m, n).unwrap(), a);
                    let rep = boundary_functional(
                        BoundaryConditionKind::XPowAlphaPlusOneDeriv,
                        a,
                        &BoundaryFn::Poly(p),
                    );
                    all_pass &= rep.map(|r| r.pass).unwrap_or(false);
                }
                out.push(check(
                    format!("spectral/bc-eigenfunctions/{fam}/m={m}/alpha={a}"),
                    all_pass,
                    String::new(),
                ));
                let rep = boundary_functional(
                    BoundaryConditionKind::XPowAlphaPlusOneDeriv,
                    a,
                    &BoundaryFn::PowNegAlpha,
                );
                out.push(check(
                    format!("spectral/bc-rejects-x-neg-a/{fam}/m={m}/alpha={a}"),
                    rep.map(|r| !r.pass).unwrap_or(false),
                    String::new(),
                ));
                // second solution leaves L2 at infinity, first stays
                let xs = [5.0, 10.0, 20.0, 40.0];
                let grow = second_solution_growth_probe(family, m, a, &xs)
                    .map(|r| r.pass)
                    .unwrap_or(false);
                let bounded = first_solution_bounded_probe(family, m, a, &xs).unwrap_or(false);
                out.push(check(
                    format!("spectral/growth-probe/{fam}/m={m}/alpha={a}"),
                    grow && bounded,
                    String::new(),
                ));
            }
        }
    }
    // completeness corroboration
    for m in [1u32, 2] {
        for j in 0..=4u32 {
            let ok = completeness_residuals(m, -0.5, j, 10)
                .map(|r| residuals_decrease(&r))
                .unwrap_or(false);
            out.push(check(
                format!("spectral/completeness/m={m}/j={j}"),
                ok,
                String::new(),
            ));
        }
    }
    out
}

pub fn run_suite(suite: &str, params: &SuiteParams) -> Vec<Check> {
    match suite {
        "appendix" => run_appendix(),
        "identities" => run_identities(params),
        "norms" => run_norms(params),
        "gram" => run_gram(params),
        "spectral" => run_spectral(params),
        "all" => {
            let mut out = run_appendix();
            out.extend(run_identities(params));
            out.extend(run_norms(params));
            out.extend(run_gram(params));
            out.extend(run_spectral(params));
            out
        }
        _ => unreachable!("clap validates the suite name"),
    }
}
