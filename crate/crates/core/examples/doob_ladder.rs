//! Check the lowering/raising relation on the Doob module shapes.
use drg_uniform::tmodules::doob_symbolic_check;

fn main() {
    for delta in 0..=6 {
        let row: Vec<String> = (0..=6)
            .map(|p| {
                let r = doob_symbolic_check(delta, p);
                format!("{}({})", if r.holds { "ok" } else { "FAIL" }, r.vectors_checked)
            })
            .collect();
        println!("δ = {delta}: {}", row.join(" "));
    }
}
