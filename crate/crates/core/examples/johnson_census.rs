//! Endpoint-1 modules of J(9,4): three classes, and the two short ones are
//! distinguished by their ladder ratios.
use drg_uniform::families::johnson;
use drg_uniform::tmodules::{decompose, endpoint1_census, ratio_pair, DecomposeOptions, LocalPosition};

fn main() -> drg_uniform::Result<()> {
    let g = johnson(9, 4, 1000)?;
    let dec = decompose(&g, 0, &DecomposeOptions { max_endpoint: Some(1), ..Default::default() })?;
    let census = endpoint1_census(&g, 0, &dec)?;
    println!("θ̃_1 = {}, θ̃_D = {}", serde_json::to_string(&census.theta_one_tilde)?, serde_json::to_string(&census.theta_d_tilde)?);
    for c in &census.classes {
        println!(
            "η = {} d = {} t = {:?} ×{} {:?} ladder {}",
            c.local_eigenvalue.as_ref().map_or("?".into(), |x| x.to_string()),
            c.diameter,
            c.dual_endpoint,
            c.multiplicity,
            c.position,
            serde_json::to_string(&c.ladder)?
        );
    }
    let at = |p| census.classes.iter().find(|c| c.position == p).and_then(|c| c.ladder.as_ref());
    if let (Some(w), Some(v)) = (at(LocalPosition::ThetaDTilde), at(LocalPosition::ThetaOneTilde)) {
        let (x, y) = ratio_pair(w, v, 0).unwrap();
        println!("β₁/β′₁ = {x}, γ′₀/γ₀ = {y}");
    }
    Ok(())
}
