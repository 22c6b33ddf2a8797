//! Nearly Gorenstein test with each of its criteria, which are evaluated
//! independently and must agree.
//!
//! ```text
//! cargo run --example nearly_gorenstein
//! ```

use resgraph::{classify, fixtures, WeightedDualGraph};

fn main() -> Result<(), resgraph::Error> {
    let graphs: [(&str, WeightedDualGraph); 6] = [
        ("E7", fixtures::e7()),
        ("rational triple point D_0", fixtures::rtp_d0()),
        ("rational triple point B_{0,3}", fixtures::rtp_b0(3)),
        ("heavy center star, n = 5", fixtures::heavy_center_star(5)),
        ("two nodes, coefficient 2", fixtures::heavy_coefficient_two()),
        ("e = 4 quotient", fixtures::non_ulrich_quotient()),
    ];
    println!(
        "{:<32} {:>3} {:>5} {:>5} {:>5} {:>5} {:>5} {:>3}",
        "graph", "e", "G", "NG", "F=Z", "anti", "num", "l"
    );
    for (name, g) in &graphs {
        let r = classify::nearly_gorenstein(g)?;
        println!(
            "{name:<32} {:>3} {:>5} {:>5} {:>5} {:>5} {:>5} {:>3}  case {}",
            r.multiplicity,
            r.gorenstein,
            r.nearly_gorenstein,
            r.criterion_f_equals_zf,
            r.criterion_k_plus_zf_anti_nef,
            r.criterion_numeric,
            r.trace_colength,
            r.structural.case,
        );
    }
    Ok(())
}
