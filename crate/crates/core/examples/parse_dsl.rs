//! The line-oriented graph language, its error locations and the JSON
//! report of a parsed graph.
//!
//! ```text
//! cargo run --example parse_dsl
//! ```

use resgraph::{dsl, report};

const EXAMPLE_6_3: &str = "\
# A_{2,2,2}: a -3 center with three arms of two -2 curves
vertex c -3
vertex a1 -2
vertex a2 -2
vertex b1 -2
vertex b2 -2
vertex d1 -2
vertex d2 -2
edge c a1
edge a1 a2
edge c b1
edge b1 b2
edge c d1
edge d1 d2
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = dsl::parse_graph(EXAMPLE_6_3)?;
    let r = report::classify_report(&g)?;
    println!("{}", serde_json::to_string_pretty(&r)?);

    print!("round trip:\n{}", dsl::emit(&g));

    for bad in [
        "vertex a -2\nvertex a -3",
        "vertex a 2",
        "chain -2 x",
        "vertex a -2\nvertex b -2",
    ] {
        let e = dsl::parse_graph(bad).unwrap_err();
        println!("{:<28} -> {e} [{}]", format!("{bad:?}"), e.code());
    }
    Ok(())
}
