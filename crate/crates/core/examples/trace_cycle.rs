//! Canonical trace cycle `F` and the colength of the trace ideal for the
//! graded family whose colength grows with `n`.
//!
//! ```text
//! cargo run --example trace_cycle
//! ```

use resgraph::{engine, fixtures};

fn main() -> Result<(), resgraph::Error> {
    println!("{:>2}  {:>5}  {:>4}  {:>3}  F", "n", "F^2", "K.F", "l");
    for n in 2..=6 {
        let g = fixtures::graded_trace_family(n);
        let f = engine::trace_cycle(&g)?;
        println!(
            "{n:>2}  {:>5}  {:>4}  {:>3}  {:?}",
            engine::pair(&g, &f, &f),
            engine::canonical_degree(&g, &f),
            engine::colength(&g, &f)?,
            f.coefficients()
        );
    }
    Ok(())
}
