//! Exhaustive census of weighted trees up to isomorphism.
//!
//! ```text
//! cargo run --release --example census -- 6 4
//! ```

use resgraph::census::{enumerate_graphs, summarize, EnumerationConfig, Predicate};

fn main() -> Result<(), resgraph::Error> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"));
    let max_vertices = args.next().unwrap_or(5) as usize;
    let max_weight = args.next().unwrap_or(4);

    let all = enumerate_graphs(&EnumerationConfig::new(max_vertices, max_weight))?;
    println!("{:#?}", summarize(&all));

    let config = EnumerationConfig::new(max_vertices, max_weight).with_predicates(&[
        Predicate::Rational,
        Predicate::NonGorenstein,
        Predicate::NearlyGorenstein,
    ]);
    let ng = enumerate_graphs(&config)?;
    println!("non-Gorenstein nearly Gorenstein rational trees: {}", ng.len());
    for row in ng.iter().take(12) {
        println!(
            "  {:<24} e={} case {:?}",
            row.key,
            row.multiplicity.unwrap_or(0),
            row.structural_case
        );
    }

    let cyclic = enumerate_graphs(&EnumerationConfig::new(4, 3).all_graphs())?;
    let with_cycles = cyclic.iter().filter(|r| !r.graph.is_tree()).count();
    println!(
        "graphs with at most 4 vertices and weights <= 3: {} ({with_cycles} with cycles, none rational)",
        cyclic.len()
    );
    Ok(())
}
