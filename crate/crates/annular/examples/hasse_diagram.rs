//! Prints the poset of annular noncrossing signed permutations for
//! (p, q) = (2, 1): every element grouped by rank, then every cover edge
//! with its structural kind.

use annular::{PosetContext, Result};

fn main() -> Result<()> {
    let ctx = PosetContext::new(2, 1)?;
    let mut elements = ctx.elements()?;
    elements.sort_by_key(|e| (e.abs_length(), e.to_string()));

    println!(
        "poset on B_{} below {} ({} elements)",
        ctx.n(),
        ctx.gamma(),
        elements.len()
    );
    for rank in 0..=ctx.n() {
        let row: Vec<String> = elements
            .iter()
            .filter(|e| e.abs_length() == rank)
            .map(|e| {
                let conn = if e.connectivity(ctx.p()) > 0 { "*" } else { "" };
                format!("{e}{conn}")
            })
            .collect();
        println!("rank {rank}: {}", row.join("  "));
    }
    println!("(* marks elements with a connected paired cycle)");

    println!();
    let mut edge_count = 0;
    for lo in &elements {
        for (tau, hi) in ctx.covers_of(lo) {
            let kind = ctx.cover_type(lo, &hi).expect("genuine cover");
            println!("{lo} -> {hi}   via {tau}   [{kind}]");
            edge_count += 1;
        }
    }
    println!("{edge_count} cover edges");
    Ok(())
}
