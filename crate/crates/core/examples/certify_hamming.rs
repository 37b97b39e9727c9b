//! Certify a uniform structure on H(3,3) and print the certificate.
use drg_uniform::families::hamming;
use drg_uniform::uniform::{certify_uniform, verify_on_graph, CertifyOptions};

fn main() -> drg_uniform::Result<()> {
    let g = hamming(3, 3, 1000)?;
    let cert = certify_uniform(&g, 0, &CertifyOptions::default())?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    let us = cert.structure.as_ref().expect("H(3,3) is uniform");
    println!("re-verified on the whole graph: {}", verify_on_graph(&g, 0, us)?);
    Ok(())
}
