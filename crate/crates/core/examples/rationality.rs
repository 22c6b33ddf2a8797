//! Rationality test: a graph is rational exactly when every step of the
//! fundamental-cycle sequence adds a curve meeting the partial cycle with
//! value 1.
//!
//! ```text
//! cargo run --example rationality
//! ```

use resgraph::{dsl, engine};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("E8", "star -2 : [-2 -2 -2 -2] [-2 -2] [-2]"),
        ("four -3 arms on a -2 center", "star -2 : [-3] [-3] [-3] [-3]"),
        ("-2 center with four -2 arms", "star -2 : [-2] [-2] [-2] [-2]"),
        (
            "triangle of -3 curves",
            "vertex a -3\nvertex b -3\nvertex c -3\nedge a b\nedge b c\nedge c a",
        ),
    ];
    for (name, text) in cases {
        let g = dsl::parse_graph(text)?;
        match engine::rationality(&g) {
            Ok(r) => {
                print!("{name:<32} rational {:<5} p_f {}", r.is_rational, r.p_f);
                if let Some(s) = r.first_violation {
                    print!("  first violation at {} (value {})", g.id(s.vertex), s.value);
                }
                println!();
            }
            Err(e) => println!("{name:<32} {e}"),
        }
    }
    Ok(())
}
