//! Eigenvalues, multiplicities, Krein parameters and Q-polynomial orderings of J(6,3).
use drg_uniform::families::johnson;
use drg_uniform::graph_core::{intersection_array, krein_parameters, q_polynomial_orderings, spectrum};

fn main() -> drg_uniform::Result<()> {
    let g = johnson(6, 3, 1000)?;
    let ia = intersection_array(&g)?;
    let spec = spectrum(&ia, 1e-9);
    let theta = spec.exact_eigenvalues().expect("Johnson graphs have integral spectra");
    for (t, m) in theta.iter().zip(&spec.multiplicities) {
        println!("θ = {t:>3}  multiplicity {m}");
    }
    let krein = krein_parameters(&spec, 1e-9)?;
    let q = krein.exact.as_ref().unwrap();
    println!("q^1_11 = {}, q^2_11 = {}", q[1][1][1], q[2][1][1]);
    println!("Q-polynomial orderings: {:?}", q_polynomial_orderings(&krein));
    Ok(())
}
