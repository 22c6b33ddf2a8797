//! Almost reduced nearly Gorenstein graphs and the ADE-shaped weight
//! patterns that describe them.
//!
//! ```text
//! cargo run --example ade_patterns
//! ```

use resgraph::{classify, dsl};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        "chain -2 -4 -2 -3",
        "star -2 : [-2] [-2] [-2 -5]",
        "star -2 : [-3] [-2] [-2 -2]",
        "star -2 : [-2] [-2 -2] [-2 -2 -3]",
        "star -2 : [-2 -2] [-2 -2] [-2]",
        "star -3 : [-2] [-2] [-2]",
    ];
    for text in cases {
        let g = dsl::parse_graph(text)?;
        let ng = classify::nearly_gorenstein(&g)?;
        let ar = classify::is_almost_reduced(&g)?;
        let ade = classify::match_ade(&g)?;
        println!(
            "{text:<40} NG {:<5} almost reduced {:<5} pattern {}",
            ng.nearly_gorenstein,
            ar,
            ade.pattern.map_or("-".to_string(), |p| p.to_string())
        );
    }
    Ok(())
}
