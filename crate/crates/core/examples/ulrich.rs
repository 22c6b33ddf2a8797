//! Numeric Ulrich test `e = (mu - 1) l` for the trace ideal of
//! non-Gorenstein rational singularities.
//!
//! ```text
//! cargo run --example ulrich
//! ```

use resgraph::{classify, engine, fixtures, WeightedDualGraph};

fn main() -> Result<(), resgraph::Error> {
    let graphs: [(&str, WeightedDualGraph); 4] = [
        ("rational triple point A_{2,3,4}", fixtures::rtp_a(2, 3, 4)),
        ("graded family, n = 3", fixtures::graded_trace_family(3)),
        ("e = 4 quotient", fixtures::non_ulrich_quotient()),
        ("quotient list item 5", fixtures::ding_item(5)),
    ];
    for (name, g) in &graphs {
        let f = engine::trace_cycle(g)?;
        println!(
            "{name:<32} e {}  mu {}  l {}  Ulrich {}",
            engine::multiplicity(g)?,
            classify::mu_numeric(g, &f)?,
            engine::colength(g, &f)?,
            classify::is_ulrich_numeric(g, &f)?
        );
    }
    Ok(())
}
