//! Her₂(3): an endpoint-1 T_f-module that is not thin at layer 2.
use drg_uniform::families::hermitian_forms;
use drg_uniform::tmodules::{decompose, Algebra, DecomposeOptions};
use drg_uniform::uniform::non_thin_diagnostic;

fn main() -> drg_uniform::Result<()> {
    let g = hermitian_forms(2, 3, 1000)?;
    let opts = DecomposeOptions { algebra: Algebra::Tf, max_endpoint: Some(1), ..Default::default() };
    let dec = decompose(&g, 0, &opts)?;
    let diag = non_thin_diagnostic(&g, 0, &dec)?;
    println!("{}", serde_json::to_string_pretty(&diag)?);
    Ok(())
}
