//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Exact comparisons
//! throughout; the only tolerance is the 1e-9 used to isolate eigenvalues,
//! which never decides a result because every spectrum here is rational.

#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use drg_uniform::families::*;
use drg_uniform::graph_core::*;
use drg_uniform::terwilliger::*;
use drg_uniform::tmodules::*;
use drg_uniform::uniform::closed_forms::halved_cube_determinant;
use drg_uniform::uniform::*;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

const TOL: f64 = 1e-9;
const BUDGET: usize = 100_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn certify(g: &Graph) -> UniformCertificate {
    certify_uniform(g, 0, &CertifyOptions::default()).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:.2?}, limit {limit:?}"))
    }
}

/// Strongly uniform with every interior entry of `U` equal to `em`/`ep` and constant `f`.
fn check_constant(c: &UniformCertificate, em: &Q, ep: &Q, f: &Q) -> Result<(), String> {
    ensure!(c.verdict == Verdict::StronglyUniform, "verdict {:?}", c.verdict);
    let eps = c.epsilon;
    for i in 1..=eps {
        ensure!(i == 1 || c.e_minus[i - 1] == *em, "e_{i}⁻ = {}", c.e_minus[i - 1]);
        ensure!(i == eps || c.e_plus[i - 1] == *ep, "e_{i}⁺ = {}", c.e_plus[i - 1]);
        ensure!(c.f[i - 1] == *f, "f_{i} = {}", c.f[i - 1]);
    }
    Ok(())
}

fn c1_hamming() -> Outcome {
    let mut detail = Vec::new();
    for (d, n) in [(3, 3), (3, 4), (4, 3)] {
        let start = Instant::now();
        let g = hamming(d, n, BUDGET).unwrap();
        let c = certify(&g);
        check_constant(&c, &frac(-1, 2), &frac(-1, 2), &q(n as i64 - 1)).map_err(|e| format!("H({d},{n}): {e}"))?;
        within(start, Duration::from_secs(5), &format!("H({d},{n})"))?;
        detail.push(format!("H({d},{n}) {:.2?}", start.elapsed()));
    }
    Ok(detail.join(", "))
}

fn c2_doob() -> Outcome {
    let start = Instant::now();
    let g = doob(1, 1, BUDGET).unwrap();
    ensure!(g.n() == 64, "D(1,1) has {} vertices", g.n());
    check_constant(&certify(&g), &frac(-1, 2), &frac(-1, 2), &q(3)).map_err(|e| format!("D(1,1): {e}"))?;
    for delta in 0..=6 {
        for p in 0..=6 {
            let r = doob_symbolic_check(delta, p);
            ensure!(r.holds, "doob check fails at ({delta},{p}): {:?}", r.mismatches.first());
        }
    }
    let fd = flatten(&g, 0).unwrap().graph;
    let fh = flatten(&hamming(3, 4, BUDGET).unwrap(), 0).unwrap().graph;
    ensure!(graph_isomorphic(&fd, &fh, DEFAULT_ISO_LIMIT).unwrap().is_some(), "flattened graphs not isomorphic");
    within(start, Duration::from_secs(30), "D(1,1)")?;
    Ok(format!("49 shapes checked, flattened graphs isomorphic, {:.2?}", start.elapsed()))
}

fn c3_halved_cube() -> Outcome {
    let g = halved_cube(7, BUDGET).unwrap();
    ensure!(g.n() == 64, "½H(7,2) has {} vertices", g.n());
    let c = certify(&g);
    ensure!(c.verdict == Verdict::StronglyUniform, "verdict {:?}", c.verdict);
    let d = 3i64;
    for i in 1..=3i64 {
        let den = 6 - 8 * i + 4 * d;
        let em = frac(4 * i - 1 - 2 * d, den);
        let ep = frac(4 * i - 5 - 2 * d, den);
        let f = q(-(4 * i - 5) * (4 * i - 1) + (16 * i - 12) * d - 4 * d * d);
        let k = (i - 1) as usize;
        ensure!(i == 1 || c.e_minus[k] == em, "e_{i}⁻ = {} want {em}", c.e_minus[k]);
        ensure!(i == 3 || c.e_plus[k] == ep, "e_{i}⁺ = {} want {ep}", c.e_plus[k]);
        ensure!(c.f[k] == f, "f_{i} = {} want {f}", c.f[k]);
    }
    ensure!(c.e_plus[0] == frac(-7, 10) && c.f[0] == q(-21), "layer 1 values");
    let u = &c.structure.as_ref().unwrap().u;
    let dense = u.dense();
    for s in 1..=3 {
        for t in s..=3 {
            let det = principal_determinant(u, s, t);
            let sub: Vec<Vec<Q>> = dense[s - 1..t].iter().map(|r| r[s - 1..t].to_vec()).collect();
            ensure!(det == oracle_det(sub), "det(U_{s},{t}) disagrees with elimination");
            ensure!(det == halved_cube_determinant(3, s, t), "det(U_{s},{t}) disagrees with closed form");
        }
    }
    Ok(format!("e⁻ {:?} e⁺ {:?} f {:?}", strs(&c.e_minus), strs(&c.e_plus), strs(&c.f)))
}

fn strs(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn c4_dual_polar() -> Outcome {
    let start = Instant::now();
    let g = dual_polar_2a(2, 3, BUDGET).unwrap();
    ensure!(g.n() == 891, "²A₅(2) has {} vertices", g.n());
    let c = certify(&g);
    let qq = q(-2);
    let q2 = &qq * &qq;
    let em = -(&q2 * &q2) / (&q2 + q(1));
    let ep = -(q2.recip()) / (&q2 + q(1));
    let f = num_traits::pow(-qq.clone(), 5);
    ensure!(em == frac(-16, 5) && ep == frac(-1, 20) && f == q(32), "substituted values");
    check_constant(&c, &em, &ep, &f)?;
    let u = &c.structure.as_ref().unwrap().u;
    for s in 1..=3usize {
        for t in s..=3usize {
            let m = t - s;
            let want = (num_traits::pow(qq.clone(), 2 * (m + 2)) - q(1))
                / ((&q2 - q(1)) * num_traits::pow(&q2 + q(1), m + 1));
            ensure!(principal_determinant(u, s, t) == want, "det(U_{s},{t})");
        }
    }
    within(start, Duration::from_secs(600), "²A₅(2)")?;
    Ok(format!("{:.2?}", start.elapsed()))
}

fn census(g: &Graph) -> Census {
    let dec = decompose(g, 0, &DecomposeOptions { max_endpoint: Some(1), ..Default::default() }).unwrap();
    endpoint1_census(g, 0, &dec).unwrap()
}

fn c5_tight() -> Outcome {
    let mut detail = Vec::new();
    for (name, g) in [("J(6,3)", johnson(6, 3, BUDGET).unwrap()), ("Gosset", gosset()), ("½H(8,2)", halved_cube(8, BUDGET).unwrap())] {
        let c = certify(&g);
        ensure!(c.verdict == Verdict::NoUniform, "{name}: verdict {:?}", c.verdict);
        let ia = intersection_array(&g).unwrap();
        let (t1, td) = extreme_nontrivial_eigenvalues(&ia).unwrap();
        let tg = tightness(&ia, &t1, &td);
        ensure!(tg.tight && tg.gap.is_zero(), "{name}: not tight, gap {}", tg.gap);
        let cs = census(&g);
        ensure!(cs.classes.len() == 2, "{name}: {} classes", cs.classes.len());
        let etas: Vec<Extended> =
            cs.classes.iter().map(|c| Extended::Finite(c.local_eigenvalue.clone().unwrap())).collect();
        ensure!(etas.contains(&cs.theta_one_tilde) && etas.contains(&cs.theta_d_tilde), "{name}: local eigenvalues {etas:?}");
        detail.push(format!("{name} ({:?})", c.failure.map(|f| f.kind).unwrap()));
    }
    Ok(detail.join(", "))
}

fn c6_johnson() -> Outcome {
    let g = johnson(9, 4, BUDGET).unwrap();
    let c = certify(&g);
    ensure!(c.verdict == Verdict::NoUniform, "verdict {:?}", c.verdict);
    let dec = decompose(&g, 0, &DecomposeOptions { max_endpoint: Some(1), ..Default::default() }).unwrap();
    let cs = endpoint1_census(&g, 0, &dec).unwrap();
    ensure!(cs.classes.len() == 3, "{} classes", cs.classes.len());
    let short: Vec<&CensusClass> = cs.classes.iter().filter(|c| c.diameter + 2 == cs.diameter).collect();
    ensure!(short.len() == 2, "{} classes of diameter D-2", short.len());
    let at = |p: LocalPosition| short.iter().find(|c| c.position == p).copied();
    let (Some(w), Some(v)) = (at(LocalPosition::ThetaDTilde), at(LocalPosition::ThetaOneTilde)) else {
        return Err("the two short classes are not at θ̃_D and θ̃_1".into());
    };
    let (lw, lv) = (w.ladder.as_ref().unwrap(), v.ladder.as_ref().unwrap());
    let mw = &dec.modules[w.members[0]];
    let mv = &dec.modules[v.members[0]];
    ensure!(!tf_isomorphic(mw, lw, mv, lv), "short classes are T_f-isomorphic");
    let (a, b) = ratio_pair(lw, lv, 0).ok_or("ratio undefined")?;
    ensure!(a == frac(4, 3) && b == frac(1, 2), "ratios {a} vs {b}");
    Ok(format!("β₁/β′₁ = {a}, γ′₀/γ₀ = {b}"))
}

fn c7_hermitian() -> Outcome {
    let g = hermitian_forms(2, 3, BUDGET).unwrap();
    ensure!(g.n() == 512, "Her₂(3) has {} vertices", g.n());
    let c = certify(&g);
    ensure!(c.verdict == Verdict::NoUniform, "verdict {:?}", c.verdict);
    let dec = decompose(&g, 0, &DecomposeOptions { algebra: Algebra::Tf, max_endpoint: Some(1), ..Default::default() })
        .unwrap();
    let diag = non_thin_diagnostic(&g, 0, &dec).unwrap();
    let wit = diag.witness.ok_or("no non-thin endpoint-1 module")?;
    ensure!(wit.layer2_dim >= 2, "dim E*_2W = {}", wit.layer2_dim);
    let ia = intersection_array(&g).unwrap();
    ensure!(!near_polygon_check(&g, &ia), "Her₂(3) reported as a near polygon");
    let dp = dual_polar_2a(2, 3, BUDGET).unwrap();
    let dia = intersection_array(&dp).unwrap();
    ensure!(near_polygon_check(&dp, &dia), "²A₅(2) not reported as a near polygon");
    Ok(format!("witness module {} with layer dims {:?}", wit.module_index, wit.layer_dims))
}

/// Sparse split checks, cheap enough for every family.
fn split_properties(g: &Graph, x: usize) -> Result<(), String> {
    let dp = bfs_layers(g, x).unwrap();
    let s = lfr_split(g, &dp);
    ensure!(s.r == s.l.transpose(), "R ≠ Lᵀ");
    ensure!(s.f == s.f.transpose(), "F not symmetric");
    ensure!(
        s.l.disjoint_sum(&s.f).and_then(|lf| lf.disjoint_sum(&s.r)).is_some_and(|a| a == s.adjacency()),
        "A ≠ L + F + R"
    );
    for y in 0..g.n() {
        for &z in g.neighbors(y) {
            let (ly, lz) = (dp.layer_of[y], dp.layer_of[z]);
            let which = (s.l.get(y, z), s.f.get(y, z), s.r.get(y, z));
            let want = (lz == ly + 1, ly == lz, ly == lz + 1);
            ensure!(which == want, "edge {y}-{z} in the wrong part");
        }
    }
    let es = DualIdempotents::new(&dp);
    let diags: Vec<Vec<u8>> = (0..es.len()).map(|i| es.diagonal(i)).collect();
    for v in 0..g.n() {
        ensure!(diags.iter().map(|d| d[v] as usize).sum::<usize>() == 1, "ΣE*_i ≠ I at {v}");
    }
    let fl = flatten(g, x).unwrap();
    ensure!(fl.graph.is_bipartite() && fl.graph.is_connected(), "Γ_f not bipartite and connected");
    let before = bfs_layers(g, x).unwrap();
    let after = bfs_layers(&fl.graph, x).unwrap();
    ensure!(before.layer_of == after.layer_of, "Γ_f changes distances from the base");
    Ok(())
}

fn idempotent_identities(g: &Graph) -> Result<(), String> {
    let ia = intersection_array(g).unwrap();
    let spec = spectrum(&ia, TOL);
    let theta = spec.exact_eigenvalues().ok_or("irrational spectrum")?;
    let pi = primitive_idempotents(g, &spec).map_err(|e| e.to_string())?;
    let es: Vec<Vec<Vec<Q>>> = (0..pi.len()).map(|i| pi.dense(i)).collect();
    let n = g.n();
    let a: Vec<Vec<Q>> = dense_adjacency(g).into_iter().map(|r| r.into_iter().map(q).collect()).collect();
    for y in 0..n {
        for z in 0..n {
            let s: Q = es.iter().map(|e| e[y][z].clone()).sum();
            ensure!(s == if y == z { Q::one() } else { Q::zero() }, "ΣE_i ≠ I");
        }
    }
    for i in 0..es.len() {
        let tr: Q = (0..n).map(|y| es[i][y][y].clone()).sum();
        ensure!(tr == q(spec.multiplicities[i]), "tr E_{i}");
        let ae = mat_mul(&a, &es[i]);
        ensure!(ae.iter().flatten().zip(es[i].iter().flatten()).all(|(x, e)| *x == &theta[i] * e), "AE_{i} ≠ θE_{i}");
        for j in i..es.len() {
            let p = mat_mul(&es[i], &es[j]);
            let ok = if i == j { p == es[i] } else { p.iter().flatten().all(Zero::is_zero) };
            ensure!(ok, "E_{i}E_{j}");
        }
    }
    Ok(())
}

fn decomposition_properties(g: &Graph, algebra: Algebra) -> Result<(), String> {
    let dp = bfs_layers(g, 0).unwrap();
    let ops = LayerOps::new(g, &dp);
    let split = lfr_split(g, &dp);
    let dec = decompose(g, 0, &DecomposeOptions { algebra, ..Default::default() }).map_err(|e| e.to_string())?;
    ensure!(dec.modules.iter().map(|m| m.dim).sum::<usize>() == g.n(), "dimensions do not sum to n");
    let mut all = Vec::new();
    for m in &dec.modules {
        let b = m.global_basis(&ops);
        for v in &b {
            let mut images = vec![split.l.apply(v), split.r.apply(v)];
            if algebra == Algebra::T {
                images.push(split.f.apply(v));
            }
            for img in images {
                ensure!(in_span(&b, &img), "module with endpoint {} not invariant", m.endpoint);
            }
        }
        all.extend(b);
    }
    ensure!(rank(&all) == g.n(), "modules do not span");
    Ok(())
}

fn c8_properties() -> Outcome {
    let mut graphs = small_families();
    graphs.push(("Her2(3)".into(), hermitian_forms(2, 3, BUDGET).unwrap()));
    graphs.push(("2A5(2)".into(), dual_polar_2a(2, 3, BUDGET).unwrap()));
    let mut counts = [0usize; 3];
    for (name, g) in &graphs {
        for x in [0, g.n() / 2, g.n() - 1] {
            split_properties(g, x).map_err(|e| format!("{name} base {x}: {e}"))?;
        }
        let ia = intersection_array(g).unwrap();
        krein_parameters(&spectrum(&ia, TOL), TOL).map_err(|e| format!("{name}: {e}"))?;
        if g.n() <= 64 {
            idempotent_identities(g).map_err(|e| format!("{name}: {e}"))?;
            counts[0] += 1;
        }
        if g.n() <= 130 {
            decomposition_properties(g, Algebra::T).map_err(|e| format!("{name} T: {e}"))?;
            counts[1] += 1;
        }
        if g.n() <= 64 {
            decomposition_properties(g, Algebra::Tf).map_err(|e| format!("{name} Tf: {e}"))?;
            counts[2] += 1;
        }
    }
    Ok(format!(
        "{} families at 3 bases; idempotents on {}, T-decompositions on {}, Tf-decompositions on {}",
        graphs.len(),
        counts[0],
        counts[1],
        counts[2]
    ))
}

fn c9_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11ce);
    let entry = |rng: &mut ChaCha8Rng| frac(rng.gen_range(-9..=9), rng.gen_range(1..=7));
    let mut compared = 0;
    for _ in 0..200 {
        let eps = rng.gen_range(1..=12);
        let em: Vec<Q> = (0..eps).map(|_| entry(&mut rng)).collect();
        let ep: Vec<Q> = (0..eps).map(|_| entry(&mut rng)).collect();
        let u = ParameterMatrix::new(em, ep);
        let dense = u.dense();
        for s in 1..=eps {
            for t in s..=eps {
                let sub: Vec<Vec<Q>> = dense[s - 1..t].iter().map(|r| r[s - 1..t].to_vec()).collect();
                ensure!(principal_determinant(&u, s, t) == oracle_det(sub), "det(U_{s},{t}) on a random matrix");
                compared += 1;
            }
        }
    }
    let families = small_families();
    for (name, g) in &families {
        let brute = brute_intersection_numbers(g).ok_or(format!("{name} is not distance-regular"))?;
        let ia = intersection_array(g).map_err(|e| format!("{name}: {e}"))?;
        ensure!(ia.intersection_numbers() == brute, "{name}: p^h_ij disagree");
    }
    Ok(format!("{compared} determinants, {} families", families.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 Hamming graphs strongly uniform", c1_hamming),
        ("2 Doob graph strongly uniform", c2_doob),
        ("3 odd halved cube closed forms", c3_halved_cube),
        ("4 dual polar graph 2A5(2)", c4_dual_polar),
        ("5 tight graphs obstructed", c5_tight),
        ("6 Johnson J(9,4) obstructed", c6_johnson),
        ("7 Hermitian forms Her2(3)", c7_hermitian),
        ("8 property suites", c8_properties),
        ("9 oracle equivalence", c9_oracles),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {name} ({t:.2?}): {detail}"),
            Err(e) => {
                failed += 1;
                println!("[FAIL] {name} ({t:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
