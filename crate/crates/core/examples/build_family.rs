//! Build members of each family and print their intersection arrays.
use drg_uniform::families::FamilySpec;
use drg_uniform::graph_core::intersection_array;

fn main() -> drg_uniform::Result<()> {
    let specs = [
        FamilySpec::parse("hamming", &[3, 3])?,
        FamilySpec::parse("johnson", &[9, 4])?,
        FamilySpec::parse("halved_cube", &[7])?,
        FamilySpec::parse("doob", &[1, 1])?,
        FamilySpec::Gosset,
        FamilySpec::parse("dual_polar", &[2, 2])?,
        FamilySpec::parse("hermitian", &[2, 2])?,
    ];
    for spec in specs {
        let g = spec.build(100_000)?;
        let ia = intersection_array(&g)?;
        println!(
            "{:<10} n = {:>4}  {{{:?}; {:?}}}",
            spec.label(),
            g.n(),
            &ia.b_seq()[..ia.diameter()],
            &ia.c_seq()[1..]
        );
    }
    Ok(())
}
