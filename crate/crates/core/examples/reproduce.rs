//! Runs both classification reproductions at their default bounds and
//! prints the reports.
//!
//! ```text
//! cargo run --release --example reproduce
//! ```

use std::time::Instant;

use resgraph::reproduce::{reproduce_arng, reproduce_ding};

fn main() -> Result<(), resgraph::Error> {
    let t = Instant::now();
    let arng = reproduce_arng(8, 5)?;
    println!("{arng}\n  ({:.1?})\n", t.elapsed());

    let t = Instant::now();
    let ding = reproduce_ding(5, 8)?;
    println!("{ding}\n  ({:.1?})", t.elapsed());

    if !(arng.passes() && ding.passes()) {
        std::process::exit(1);
    }
    Ok(())
}
