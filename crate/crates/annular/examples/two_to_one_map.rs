//! Demonstrates the 2-to-1 map from transitive reflection factorizations of
//! the type B top element onto minimal transitive factorizations of the
//! two-cycle permutation of type A, for (p, q) = (2, 1).
//!
//! Forgetting signs sends each length-3 reflection tuple with product
//! [1 2][3] whose supports connect {1,2,3} to a transposition tuple with
//! product (1 2)(3); every image is hit by exactly two tuples, and the two
//! preimages differ by flipping the signs tied to one connected factor.

use annular::factorization::{abs_tuple, enumerate_fb, toggle_connected};
use annular::Result;
use std::collections::BTreeMap;

fn main() -> Result<()> {
    let (p, q) = (2usize, 1usize);
    let tuples = enumerate_fb(p, q)?;
    println!("{} reflection tuples with product [1 2][3]", tuples.len());

    let mut fibers: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for taus in &tuples {
        let image = abs_tuple(taus)?
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let shown = taus
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        fibers.entry(image).or_default().push(shown);

        let partner = toggle_connected(taus, p, q)?;
        assert_ne!(&partner, taus);
        assert_eq!(abs_tuple(&partner)?, abs_tuple(taus)?);
    }

    println!("{} distinct images, each with fiber size 2:", fibers.len());
    for (image, fiber) in &fibers {
        assert_eq!(fiber.len(), 2);
        println!("  {image}");
        for t in fiber {
            println!("      <- {t}");
        }
    }
    Ok(())
}
