//! Built-in reproduction scenarios. Each builds the relevant graphs and
//! checks verdicts and coefficients exactly.

use super::config::Config;
use crate::error::{Error, Result};
use crate::families::{doob, dual_polar_2a, gosset, halved_cube, hamming, hermitian_forms, johnson};
use crate::graph_core::{classical_parameters, intersection_array, near_polygon_check, Graph};
use crate::rational::{frac, q, to_fraction_string, Q};
use crate::terwilliger::{flatten, graph_isomorphic, DEFAULT_ISO_LIMIT};
use crate::tmodules::{
    decompose, doob_symbolic_check, endpoint1_census, extreme_nontrivial_eigenvalues, ratio_pair, tf_isomorphic,
    tightness, Algebra, Census, DecomposeOptions, Decomposition, LocalPosition,
};
use crate::uniform::closed_forms::{
    dual_polar_determinant, dual_polar_structure, halved_cube_determinant, halved_cube_structure, hamming_determinant,
    hamming_structure,
};
use crate::uniform::{
    certify_uniform, non_thin_diagnostic, principal_determinant, verify_on_graph, ParameterMatrix, UniformCertificate,
    Verdict,
};
use serde::Serialize;

pub const SUITES: [&str; 8] = [
    "hamming",
    "halved_cube",
    "doob",
    "dual_polar",
    "tight",
    "johnson",
    "negative_type",
    "classification",
];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
}

struct Checks(Vec<SuiteCheck>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(SuiteCheck { name: name.into(), passed, detail: detail.into() });
    }
}

fn fmt(xs: &[Q]) -> String {
    xs.iter().map(to_fraction_string).collect::<Vec<_>>().join(", ")
}

pub fn run_suite(name: &str, config: &Config) -> Result<SuiteReport> {
    let mut c = Checks(Vec::new());
    match name {
        "hamming" => hamming_suite(&mut c, config)?,
        "halved_cube" => halved_cube_suite(&mut c, config)?,
        "doob" => doob_suite(&mut c, config)?,
        "dual_polar" => dual_polar_suite(&mut c, config)?,
        "tight" => tight_suite(&mut c, config)?,
        "johnson" => johnson_suite(&mut c, config)?,
        "negative_type" => negative_type_suite(&mut c, config)?,
        "classification" => main_suite(&mut c, config)?,
        other => {
            return Err(Error::InvalidParams(format!("unknown suite `{other}`; known: {}", SUITES.join(", "))))
        }
    }
    let passed = c.0.iter().all(|x| x.passed);
    Ok(SuiteReport { suite: name.to_string(), passed, checks: c.0 })
}

fn certify(g: &Graph, config: &Config) -> Result<UniformCertificate> {
    certify_uniform(g, 0, &config.certify_options())
}

fn verdict_check(c: &mut Checks, label: &str, cert: &UniformCertificate, want: Verdict) {
    let detail = match &cert.failure {
        Some(f) => format!("{:?} ({:?} at layer {:?})", cert.verdict, f.kind, f.layer),
        None => format!("{:?}", cert.verdict),
    };
    c.add(format!("{label}: verdict {want:?}"), cert.verdict == want, detail);
}

fn determinants_match(u: &ParameterMatrix, expected: impl Fn(usize, usize) -> Q) -> (bool, String) {
    let eps = u.epsilon;
    for s in 1..=eps {
        for t in s..=eps {
            let got = principal_determinant(u, s, t);
            if got != expected(s, t) {
                return (false, format!("det U_{{{s},{t}}} = {} expected {}", got, expected(s, t)));
            }
        }
    }
    (true, format!("all 1 <= s <= t <= {eps}"))
}

fn hamming_suite(c: &mut Checks, config: &Config) -> Result<()> {
    for (d, n) in [(3, 3), (3, 4), (4, 3)] {
        let label = format!("H({d},{n})");
        let g = hamming(d, n, config.vertex_budget)?;
        let cert = certify(&g, config)?;
        verdict_check(c, &label, &cert, Verdict::StronglyUniform);
        let half = frac(-1, 2);
        let eps = cert.epsilon;
        let interior = cert.e_minus.len() == eps
            && cert.e_minus[1..].iter().all(|e| *e == half)
            && cert.e_plus[..eps - 1].iter().all(|e| *e == half);
        c.add(format!("{label}: interior e = -1/2"), interior, format!("e- [{}] e+ [{}]", fmt(&cert.e_minus), fmt(&cert.e_plus)));
        let f_ok = cert.f.len() == eps && cert.f.iter().all(|f| *f == q(n as i64 - 1));
        c.add(format!("{label}: f_i = n - 1"), f_ok, format!("[{}]", fmt(&cert.f)));
        let closed = hamming_structure(d, n as i64);
        c.add(format!("{label}: closed form verifies"), verify_on_graph(&g, 0, &closed)?, "");
        let (ok, detail) = determinants_match(&closed.u, hamming_determinant);
        c.add(format!("{label}: determinants"), ok, detail);
    }
    Ok(())
}

fn halved_cube_suite(c: &mut Checks, config: &Config) -> Result<()> {
    for n in [7usize, 9] {
        let d = n / 2;
        let label = format!("½H({n},2)");
        let g = halved_cube(n, config.vertex_budget)?;
        let cert = certify(&g, config)?;
        verdict_check(c, &label, &cert, Verdict::StronglyUniform);
        let closed = halved_cube_structure(d);
        c.add(format!("{label}: closed form verifies"), verify_on_graph(&g, 0, &closed)?, "");
        let same = cert.structure.as_ref().is_some_and(|s| *s == closed);
        c.add(
            format!("{label}: certificate equals closed form"),
            same,
            format!("e- [{}] e+ [{}] f [{}]", fmt(&cert.e_minus), fmt(&cert.e_plus), fmt(&cert.f)),
        );
        let (ok, detail) = determinants_match(&closed.u, |s, t| halved_cube_determinant(d, s, t));
        c.add(format!("{label}: determinants"), ok, detail);
    }
    let g = halved_cube(7, config.vertex_budget)?;
    let c7 = certify(&g, config)?;
    let first = c7.e_plus.first().cloned().unwrap_or_default() == frac(-7, 10) && c7.f.first() == Some(&q(-21));
    c.add("½H(7,2): e_1+ = -7/10, f_1 = -21", first, format!("e_1+ = {:?}, f_1 = {:?}", c7.e_plus.first().map(to_fraction_string), c7.f.first().map(to_fraction_string)));
    let dec = decompose(&g, 0, &DecomposeOptions { seed: config.decomposition_seed, ..Default::default() })?;
    let d_graph = 3i64;
    let bad: Vec<String> = dec
        .modules
        .iter()
        .filter(|m| {
            let dm = m.diameter as i64;
            let e = if (d_graph - dm) % 2 == 0 { 0 } else { -1 };
            (d_graph - dm - e) != 2 * m.endpoint as i64
        })
        .map(|m| format!("r={} d={}", m.endpoint, m.diameter))
        .collect();
    c.add(
        "½H(7,2): every module has r = (D - d - e)/2",
        bad.is_empty() && dec.covered_dim == g.n(),
        if bad.is_empty() { format!("{} modules", dec.modules.len()) } else { bad.join("; ") },
    );
    Ok(())
}

fn doob_suite(c: &mut Checks, config: &Config) -> Result<()> {
    let g = doob(1, 1, config.vertex_budget)?;
    let cert = certify(&g, config)?;
    verdict_check(c, "D(1,1)", &cert, Verdict::StronglyUniform);
    let structure_ok = cert.structure.as_ref().is_some_and(|s| *s == hamming_structure(3, 4));
    c.add("D(1,1): e = -1/2, f_i = 3", structure_ok, format!("e- [{}] e+ [{}] f [{}]", fmt(&cert.e_minus), fmt(&cert.e_plus), fmt(&cert.f)));
    let failing: Vec<String> = (0..=6)
        .flat_map(|delta| (0..=6).map(move |p| (delta, p)))
        .filter(|&(delta, p)| !doob_symbolic_check(delta, p).holds)
        .map(|(delta, p)| format!("({delta},{p})"))
        .collect();
    c.add("ladder identity for 0 <= δ, p <= 6", failing.is_empty(), failing.join(" "));
    let h = hamming(3, 4, config.vertex_budget)?;
    let iso = graph_isomorphic(&flatten(&g, 0)?.graph, &flatten(&h, 0)?.graph, DEFAULT_ISO_LIMIT)?;
    c.add("flatten(D(1,1)) ≅ flatten(H(3,4))", iso.is_some(), "");
    Ok(())
}

fn dual_polar_suite(c: &mut Checks, config: &Config) -> Result<()> {
    let g = dual_polar_2a(2, 3, config.vertex_budget)?;
    let label = "2A5(2)";
    c.add(format!("{label}: 891 vertices"), g.n() == 891, g.n().to_string());
    let ia = intersection_array(&g)?;
    let qs: Vec<i64> = classical_parameters(&ia).iter().map(|p| p.q).collect();
    c.add(format!("{label}: classical q = -2"), qs.contains(&-2), format!("{qs:?}"));
    let cert = certify(&g, config)?;
    verdict_check(c, label, &cert, Verdict::StronglyUniform);
    let closed = dual_polar_structure(3, -2);
    let values_ok = cert.e_minus[1..].iter().all(|e| *e == frac(-16, 5))
        && cert.e_plus[..2].iter().all(|e| *e == frac(-1, 20))
        && cert.f.iter().all(|f| *f == q(32));
    c.add(
        format!("{label}: e- = -16/5, e+ = -1/20, f = 32"),
        values_ok,
        format!("e- [{}] e+ [{}] f [{}]", fmt(&cert.e_minus), fmt(&cert.e_plus), fmt(&cert.f)),
    );
    c.add(format!("{label}: closed form verifies"), verify_on_graph(&g, 0, &closed)?, "");
    let (ok, detail) = determinants_match(&closed.u, |s, t| dual_polar_determinant(-2, s, t));
    c.add(format!("{label}: determinants"), ok, detail);
    c.add(format!("{label}: near polygon"), near_polygon_check(&g, &ia), "");
    Ok(())
}

fn census_of(g: &Graph, config: &Config) -> Result<(Decomposition, Census)> {
    let dec = decompose(g, 0, &DecomposeOptions { seed: config.decomposition_seed, ..Default::default() })?;
    let census = endpoint1_census(g, 0, &dec)?;
    Ok((dec, census))
}

fn tight_suite(c: &mut Checks, config: &Config) -> Result<()> {
    let graphs = [
        ("J(6,3)", johnson(6, 3, config.vertex_budget)?),
        ("Gosset", gosset()),
        ("½H(8,2)", halved_cube(8, config.vertex_budget)?),
    ];
    for (label, g) in &graphs {
        let cert = certify(g, config)?;
        verdict_check(c, label, &cert, Verdict::NoUniform);
        let ia = intersection_array(g)?;
        let (t1, td) = extreme_nontrivial_eigenvalues(&ia)?;
        let t = tightness(&ia, &t1, &td);
        c.add(format!("{label}: tight with zero gap"), t.tight, format!("gap {}", to_fraction_string(&t.gap)));
        let (dec, census) = census_of(g, config)?;
        let positions: Vec<LocalPosition> = census.classes.iter().map(|k| k.position).collect();
        let two = census.classes.len() == 2
            && positions.contains(&LocalPosition::ThetaOneTilde)
            && positions.contains(&LocalPosition::ThetaDTilde);
        c.add(format!("{label}: two endpoint-1 classes at θ̃_1 and θ̃_D"), two, format!("{positions:?}"));
        c.add(format!("{label}: (η, d, t) pattern"), census.predictions_hold, "");
        if census.classes.len() == 2 {
            let (a, b) = (&census.classes[0], &census.classes[1]);
            if let (Some(la), Some(lb)) = (&a.ladder, &b.ladder) {
                let iso = tf_isomorphic(&dec.modules[a.members[0]], la, &dec.modules[b.members[0]], lb);
                c.add(format!("{label}: the two classes are not T_f-isomorphic"), !iso, format!("β {} vs {}", fmt(&la.beta), fmt(&lb.beta)));
            }
        }
    }
    Ok(())
}

fn johnson_suite(c: &mut Checks, config: &Config) -> Result<()> {
    let (n, d) = (9usize, 4usize);
    let g = johnson(n, d, config.vertex_budget)?;
    let cert = certify(&g, config)?;
    verdict_check(c, "J(9,4)", &cert, Verdict::NoUniform);
    let (dec, census) = census_of(&g, config)?;
    c.add("J(9,4): three endpoint-1 classes", census.classes.len() == 3, census.classes.len().to_string());
    let mut short: Vec<_> = census.classes.iter().filter(|k| k.diameter + 2 == d).collect();
    short.sort_by_key(|k| k.dual_endpoint);
    let ok = short.len() == 2 && short[0].dual_endpoint == Some(1) && short[1].dual_endpoint == Some(2);
    c.add("J(9,4): two classes with d = D - 2, dual endpoints 1 and 2", ok, format!("{}", short.len()));
    if ok {
        let (w, wp) = (short[0], short[1]);
        let (lw, lwp) = (w.ladder.as_ref().expect("thin"), wp.ladder.as_ref().expect("thin"));
        let iso = tf_isomorphic(&dec.modules[w.members[0]], lw, &dec.modules[wp.members[0]], lwp);
        c.add("J(9,4): not T_f-isomorphic", !iso, "");
        let expected = (Q::new(((n - d - 1) as i64).into(), ((n - d - 2) as i64).into()), frac(1, 2));
        let got = ratio_pair(lw, lwp, 0);
        let detail = got
            .as_ref()
            .map(|(a, b)| format!("β1/β'1 = {}, γ'0/γ0 = {}", to_fraction_string(a), to_fraction_string(b)))
            .unwrap_or_default();
        c.add("J(9,4): ratios 4/3 and 1/2", got == Some(expected), detail);
        let gamma_w: Vec<Q> = (0..lw.gamma.len() as i64).map(|i| q((i + 1) * (i + 2))).collect();
        let gamma_wp: Vec<Q> = (0..lwp.gamma.len() as i64).map(|i| q((i + 1) * (i + 1))).collect();
        c.add(
            "J(9,4): γ_i = (i+1)(i+2) and γ'_i = (i+1)²",
            lw.gamma == gamma_w && lwp.gamma == gamma_wp,
            format!("[{}] [{}]", fmt(&lw.gamma), fmt(&lwp.gamma)),
        );
    }
    Ok(())
}

fn negative_type_suite(c: &mut Checks, config: &Config) -> Result<()> {
    let g = hermitian_forms(2, 3, config.vertex_budget)?;
    let ia = intersection_array(&g)?;
    let cert = certify(&g, config)?;
    verdict_check(c, "Her2(3)", &cert, Verdict::NoUniform);
    c.add("Her2(3): not a near polygon", !near_polygon_check(&g, &ia), "");
    let opts = DecomposeOptions {
        algebra: Algebra::Tf,
        max_endpoint: Some(1),
        seed: config.decomposition_seed,
        ..Default::default()
    };
    let dec = decompose(&g, 0, &opts)?;
    let diag = non_thin_diagnostic(&g, 0, &dec)?;
    let detail = diag.witness.as_ref().map(|w| format!("layer dims {:?}", w.layer_dims)).unwrap_or_default();
    c.add("Her2(3): endpoint-1 T_f-module with dim E*_2W >= 2", diag.witness.is_some(), detail);
    let (c2, a2, a3, b2) = (q(ia.c(2)), q(ia.a(2)), q(ia.a(3)), q(ia.b(2)));
    let expected = vec![-&c2 * (&a2 - &a3), -&c2 * (&b2 + &a2 - &a3)];
    let agree = !diag.endpoint_one.is_empty()
        && diag.endpoint_one.iter().all(|r| r.independent && r.lr2_coordinates.as_ref() == Some(&expected));
    c.add(
        "Her2(3): LR²w = -c2(a2-a3) E*_2Aw - c2(b2+a2-a3) E*_2A_2w",
        agree,
        format!("expected [{}]", fmt(&expected)),
    );
    let dp = dual_polar_2a(2, 3, config.vertex_budget)?;
    let dia = intersection_array(&dp)?;
    c.add("2A5(2): near polygon", near_polygon_check(&dp, &dia), "");
    Ok(())
}

fn main_suite(c: &mut Checks, config: &Config) -> Result<()> {
    let b = config.vertex_budget;
    let cases: Vec<(&str, Graph, bool)> = vec![
        ("H(3,3)", hamming(3, 3, b)?, true),
        ("H(4,3)", hamming(4, 3, b)?, true),
        ("½H(7,2)", halved_cube(7, b)?, true),
        ("D(1,1)", doob(1, 1, b)?, true),
        ("J(6,3)", johnson(6, 3, b)?, false),
        ("J(9,4)", johnson(9, 4, b)?, false),
        ("Gosset", gosset(), false),
        ("½H(8,2)", halved_cube(8, b)?, false),
    ];
    for (label, g, uniform) in &cases {
        let cert = certify(g, config)?;
        let got = cert.verdict != Verdict::NoUniform;
        c.add(
            format!("{label}: {}", if *uniform { "uniform" } else { "no uniform structure" }),
            got == *uniform,
            format!("{:?}", cert.verdict),
        );
    }
    Ok(())
}
