//! Counts minimal transitive transposition factorizations whose product has
//! a prescribed cycle type, three ways: exhaustive search, the
//! inclusion-exclusion walk recursion, and the closed form.

use annular::factorization::{count_f_lambda_dfs, count_f_lambda_dp};
use annular::formulas::gj_count;
use annular::perm::partitions_of;
use annular::Result;

fn main() -> Result<()> {
    println!("{:>12} {:>10} {:>10} {:>10}", "cycle type", "search", "recursion", "closed");
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            let dfs = count_f_lambda_dfs(&lambda)?;
            let dp = count_f_lambda_dp(&lambda)?;
            let closed = gj_count(&lambda);
            assert_eq!(dfs, dp);
            assert_eq!(dfs, closed);
            println!(
                "{:>12} {:>10} {:>10} {:>10}",
                lambda.to_string(),
                dfs.to_string(),
                dp.to_string(),
                closed.to_string()
            );
        }
    }
    // Beyond the search guard the recursion still matches the closed form.
    for lambda in partitions_of(6) {
        assert_eq!(count_f_lambda_dp(&lambda)?, gj_count(&lambda));
    }
    println!("n = 6: recursion agrees with the closed form on all partitions");
    Ok(())
}
