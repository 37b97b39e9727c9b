//! Split the standard module of H(3,3) into irreducible T- and T_f-modules.
use drg_uniform::families::hamming;
use drg_uniform::tmodules::{decompose, Algebra, DecomposeOptions};

fn main() -> drg_uniform::Result<()> {
    let g = hamming(3, 3, 1000)?;
    for algebra in [Algebra::T, Algebra::Tf] {
        let dec = decompose(&g, 0, &DecomposeOptions { algebra, ..Default::default() })?;
        println!("{algebra:?}: {} modules covering {} of {}", dec.modules.len(), dec.covered_dim, dec.n);
        for m in &dec.modules {
            println!(
                "  endpoint {} diameter {} dual endpoint {:?} layer dims {:?} thin {}",
                m.endpoint, m.diameter, m.dual_endpoint, m.layer_dims, m.thin
            );
        }
    }
    Ok(())
}
