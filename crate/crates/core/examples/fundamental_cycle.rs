//! Fundamental cycle of a few graphs, with the computation sequence that
//! produced it.
//!
//! ```text
//! cargo run --example fundamental_cycle
//! ```

use resgraph::{engine, fixtures, WeightedDualGraph};

fn show(name: &str, g: &WeightedDualGraph) -> Result<(), resgraph::Error> {
    let (z, seq) = engine::fundamental_cycle(g)?;
    let steps: Vec<String> = seq.steps.iter().map(|s| g.id(s.vertex).to_string()).collect();
    println!("{name}");
    println!("  Z_f      {:?}", z.coefficients());
    println!("  Z_f^2    {}", engine::pair(g, &z, &z));
    println!(
        "  sequence {} then {}",
        g.id(seq.seed.unwrap_or(0)),
        steps.join(" ")
    );
    Ok(())
}

fn main() -> Result<(), resgraph::Error> {
    show("E8", &fixtures::e8())?;
    show("D6", &fixtures::d_n(6))?;
    show("rational triple point A_{2,2,2}", &fixtures::rtp_a(2, 2, 2))?;
    show("heavy center star, n = 6", &fixtures::heavy_center_star(6))?;
    Ok(())
}
