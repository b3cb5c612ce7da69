//! Counts saturated chains from the identity to the full zero cycle
//! [1 2 ... n] in absolute order on B_n and checks the n^n closed form,
//! then cross-checks absolute length against a breadth-first oracle.

use annular::formulas::reiner_count;
use annular::poset_b::saturated_chain_count_to;
use annular::signed::{all_signed_permutations, full_zero_cycle};
use annular::verify::bfs_lengths_b;
use annular::Result;

fn main() -> Result<()> {
    for n in 1..=4 {
        let top = full_zero_cycle(n)?;
        let count = saturated_chain_count_to(&top);
        println!("n = {n}: {count} saturated chains to {top} (expect {})", reiner_count(n));
        assert_eq!(count, reiner_count(n));
    }

    // The cycle-type length formula agrees with graph distance in the
    // Cayley graph of B_n generated by all reflections.
    for n in 1..=3 {
        let oracle = bfs_lengths_b(n);
        for s in all_signed_permutations(n) {
            assert_eq!(s.abs_length(), oracle[&s]);
        }
        println!("n = {n}: absolute length matches BFS distance for all {} elements", oracle.len());
    }
    Ok(())
}
