//! Lifts a positive reflection tuple (product: the paired top element) to a
//! reflection tuple for the zero-cycle top element by transporting a zero
//! reflection along a shortest support path, for (p, q) = (3, 2).

use annular::factorization::{
    lift_positive, plus_tuple, preimages_under_plus, tuple_product_b,
};
use annular::goldens::lift_example_tuples;
use annular::Result;

fn show(label: &str, taus: &[annular::BTransposition]) {
    let s: Vec<String> = taus.iter().map(|t| t.to_string()).collect();
    println!("{label}: ({})", s.join(", "));
}

fn main() -> Result<()> {
    let (sigma, tau, tau_prime) = lift_example_tuples();
    let n = 5;

    show("positive tuple sigma", &sigma);
    println!("  product {}", tuple_product_b(&sigma, n)?);

    let lifted = lift_positive(&sigma, 3, 2)?;
    show("lift(sigma)", &lifted);
    println!("  product {}", tuple_product_b(&lifted, n)?);
    assert_eq!(lifted, tau_prime);

    let fiber = preimages_under_plus(&sigma, 3, 2)?;
    println!("fiber of sigma under the positive-part map:");
    for t in &fiber {
        show("  preimage", t);
        assert_eq!(plus_tuple(t)?, sigma);
    }
    assert_eq!(fiber.len(), 2);
    assert!(fiber.contains(&tau));
    assert!(fiber.contains(&tau_prime));
    println!("both preimages map back to sigma; the lift picks one of them");
    Ok(())
}
