//! The 891-vertex dual polar graph on a Hermitian form over GF(4):
//! certificate and principal determinants of its parameter matrix.
use drg_uniform::families::dual_polar_2a;
use drg_uniform::graph_core::{classical_parameters, intersection_array, near_polygon_check};
use drg_uniform::rational::{to_fraction_string, Q};
use drg_uniform::uniform::{certify_uniform, principal_determinant, CertifyOptions};
use std::time::Instant;

fn main() -> drg_uniform::Result<()> {
    let start = Instant::now();
    let g = dual_polar_2a(2, 3, 100_000)?;
    let ia = intersection_array(&g)?;
    println!("{} vertices, classical parameters {:?}", g.n(), classical_parameters(&ia));
    println!("near polygon: {}", near_polygon_check(&g, &ia));
    let cert = certify_uniform(&g, 0, &CertifyOptions::default())?;
    let show = |v: &[Q]| v.iter().map(to_fraction_string).collect::<Vec<_>>().join(", ");
    println!("{:?}: e⁻ = [{}], e⁺ = [{}], f = [{}]", cert.verdict, show(&cert.e_minus), show(&cert.e_plus), show(&cert.f));
    let u = &cert.structure.as_ref().expect("uniform").u;
    for s in 1..=3 {
        for t in s..=3 {
            println!("det U[{s}..{t}] = {}", principal_determinant(u, s, t));
        }
    }
    println!("done in {:.2?}", start.elapsed());
    Ok(())
}
