//! Prints the poset of marked annular noncrossing permutations of type A
//! for (p, q) = (2, 1) and checks its maximal chains against the closed
//! form p*q/(p+q) * C(p+q, q) * p^p * q^q.

use annular::formulas::pq_count;
use annular::marked::MarkedPoset;
use annular::formulas::BigCount;
use annular::Result;

fn main() -> Result<()> {
    let poset = MarkedPoset::new(2, 1)?;
    println!(
        "marked poset for (p, q) = ({}, {}), {} elements",
        poset.p(),
        poset.q(),
        poset.elements().len()
    );
    for rank in 0..=poset.n() {
        let row: Vec<String> = poset
            .elements()
            .iter()
            .filter(|e| e.rank() == rank)
            .map(|e| e.to_string())
            .collect();
        println!("rank {rank}: {}", row.join("  "));
    }

    let chains: Vec<_> = poset.maximal_chains().collect();
    let connected = chains
        .iter()
        .filter(|c| c.is_connected(poset.p()))
        .count();
    println!(
        "{} maximal chains, {} connected",
        chains.len(),
        connected
    );
    assert_eq!(BigCount::from(connected), pq_count(poset.p(), poset.q()));
    assert_eq!(connected, chains.len());

    println!(
        "{} of {} elements lie in the disconnected suborder",
        poset.disconnected_element_count(),
        poset.elements().len()
    );
    Ok(())
}
