//! Quotient singularities: Hirzebruch–Jung branches, Pinkham–Demazure
//! divisors and the list of nearly Gorenstein quotients.
//!
//! ```text
//! cargo run --example quotient
//! ```

use resgraph::quotient::{self, Fraction};
use resgraph::{classify, fixtures};

fn main() -> Result<(), resgraph::Error> {
    println!("7/3 -> {:?}", quotient::fraction_to_branch(7, 3)?);
    println!("[3, 2, 2] -> {}", quotient::branch_fraction(&[3, 2, 2])?);

    for item in 2..=11u8 {
        let g = fixtures::ding_item(item);
        let pd = quotient::pd_divisor(&g)?;
        let matched = quotient::match_ding(&g)?;
        println!(
            "item {item:>2}: {:<32} log terminal {} match {}",
            pd.display(),
            quotient::is_log_terminal(&g)?,
            matched.map_or("-".to_string(), |m| m.to_string())
        );
    }

    let g = quotient::graph_from_pd(
        2,
        &[Fraction::new(2, 1), Fraction::new(2, 1), Fraction::new(7, 3)],
    )?;
    println!(
        "D = 1/2 P_1 + 1/2 P_2 + 3/7 P_3: weights {:?}, match {:?}, trace colength {}",
        g.weights(),
        quotient::match_ding(&g)?,
        classify::end_curve_colength(&g)?
    );
    Ok(())
}
