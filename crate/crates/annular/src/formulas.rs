//! Closed-form counts: minimal transitive factorization numbers, maximal
//! chain counts of the annular type B poset, their marked type A analogues,
//! and assorted binomial/Catalan helpers. Everything is exact big-integer
//! arithmetic; rational intermediates are asserted integral.

use crate::perm::Partition;
use num::{BigInt, BigRational, BigUint, Zero};

pub type BigCount = BigUint;

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// Binomial coefficient, zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(n as u64), BigUint::from(k as u64))
}

fn upow(base: usize, exp: usize) -> BigUint {
    BigUint::from(base as u64).pow(exp as u32)
}

fn to_integer(value: BigRational, what: &str) -> BigUint {
    assert!(value.is_integer(), "{what} must be an integer, got {value}");
    value
        .to_integer()
        .to_biguint()
        .unwrap_or_else(|| panic!("{what} must be nonnegative"))
}

/// Number of minimal transitive factorizations of a permutation with cycle
/// type λ ⊢ n into n + (number of parts) - 2 transpositions:
/// (n+ℓ-2)! n^(ℓ-3) Π λ_i^{λ_i} / (λ_i - 1)!.
pub fn gj_count(lambda: &Partition) -> BigCount {
    let n = lambda.n();
    let parts = lambda.num_parts();
    let mut value = BigRational::from(BigInt::from(factorial(n + parts - 2)));
    if parts >= 3 {
        value *= BigInt::from(upow(n, parts - 3));
    } else {
        value /= BigInt::from(upow(n, 3 - parts));
    }
    for &part in lambda.parts() {
        value *= BigInt::from(upow(part, part));
        value /= BigInt::from(factorial(part - 1));
    }
    to_integer(value, "factorization count")
}

/// The two-cycle specialization: pq/(p+q) C(p+q, q) p^p q^q.
pub fn pq_count(p: usize, q: usize) -> BigCount {
    assert!(p >= 1 && q >= 1);
    let mut value = BigRational::from(BigInt::from(binomial(p + q, q)));
    value *= BigInt::from(p as u64 * q as u64);
    value /= BigInt::from((p + q) as u64);
    value *= BigInt::from(upow(p, p));
    value *= BigInt::from(upow(q, q));
    to_integer(value, "two-cycle factorization count")
}

/// Disconnected maximal chains of the annular type B poset:
/// C(p+q, q) p^p q^q.
pub fn dmc_count(p: usize, q: usize) -> BigCount {
    assert!(p >= 1 && q >= 1);
    binomial(p + q, q) * upow(p, p) * upow(q, q)
}

/// Connected maximal chains, as the explicit sum over the connectivity c of
/// the bottom crossing element: Σ_{c>=1} 2c C(p+q, p-c) p^{p-c} q^{q+c}.
pub fn cmc_sum(p: usize, q: usize) -> BigCount {
    assert!(p >= 1 && q >= 1);
    (1..=p)
        .map(|c| BigUint::from(2 * c as u64) * binomial(p + q, p - c) * upow(p, p - c) * upow(q, q + c))
        .sum()
}

/// Connected maximal chains in closed form: twice the factorization count.
pub fn cmc_closed(p: usize, q: usize) -> BigCount {
    BigUint::from(2u64) * pq_count(p, q)
}

/// All maximal chains of the annular type B poset.
pub fn nc_chain_count_b(p: usize, q: usize) -> BigCount {
    dmc_count(p, q) + cmc_sum(p, q)
}

/// Left side of the weighted-sum identity: Σ_{c>=1} c C(p+q, p-c) p^{p-c} q^{q+c}.
pub fn kk_lhs(p: usize, q: usize) -> BigCount {
    assert!(p >= 1 && q >= 1);
    (1..=p)
        .map(|c| BigUint::from(c as u64) * binomial(p + q, p - c) * upow(p, p - c) * upow(q, q + c))
        .sum()
}

/// Right side of the weighted-sum identity: pq/(p+q) C(p+q, q) p^p q^q.
pub fn kk_rhs(p: usize, q: usize) -> BigCount {
    pq_count(p, q)
}

/// Maximal chains of the marked annular type A poset, as the explicit sum;
/// provably equal to `pq_count`.
pub fn marked_chain_count(p: usize, q: usize) -> BigCount {
    kk_lhs(p, q)
}

pub fn catalan(n: usize) -> BigCount {
    let value = BigRational::new(
        BigInt::from(binomial(2 * n, n)),
        BigInt::from(n as u64 + 1),
    );
    to_integer(value, "Catalan number")
}

pub fn central_binomial(n: usize) -> BigCount {
    binomial(2 * n, n)
}

/// Disconnected elements of the annular type B poset: C(2p, p) C(2q, q).
pub fn disconnected_b_count(p: usize, q: usize) -> BigCount {
    central_binomial(p) * central_binomial(q)
}

/// Disconnected elements of the marked annular type A poset: 2 Cat(p) Cat(q).
pub fn disconnected_marked_count(p: usize, q: usize) -> BigCount {
    BigUint::from(2u64) * catalan(p) * catalan(q)
}

/// Maximal chains of the full type B noncrossing partition lattice: n^n.
pub fn reiner_count(n: usize) -> BigCount {
    assert!(n >= 1);
    upow(n, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn factorization_counts() {
        assert_eq!(gj_count(&lam("1")), big(1));
        assert_eq!(gj_count(&lam("2")), big(1));
        assert_eq!(gj_count(&lam("1,1")), big(1));
        assert_eq!(gj_count(&lam("2,1")), big(8));
        assert_eq!(gj_count(&lam("1,1,1")), big(24));
        assert_eq!(gj_count(&lam("3,2")), big(1296));
        assert_eq!(gj_count(&lam("1,1,1,1,1")), big(1_008_000));
        // Single cycles give Cayley's n^(n-2).
        for n in 1..=8 {
            assert_eq!(
                gj_count(&Partition::new(vec![n]).unwrap()),
                if n >= 2 { upow(n, n - 2) } else { big(1) },
                "n = {n}"
            );
        }
    }

    #[test]
    fn two_cycle_counts() {
        assert_eq!(pq_count(1, 1), big(1));
        assert_eq!(pq_count(2, 1), big(8));
        assert_eq!(pq_count(3, 1), big(81));
        assert_eq!(pq_count(2, 2), big(96));
        assert_eq!(pq_count(3, 2), big(1296));
        for p in 1..=6 {
            for q in 1..=6 {
                assert_eq!(pq_count(p, q), pq_count(q, p));
                assert_eq!(
                    gj_count(&Partition::new(vec![p.max(q), p.min(q)]).unwrap()),
                    pq_count(p, q)
                );
            }
        }
    }

    #[test]
    fn chain_counts() {
        assert_eq!(dmc_count(1, 1), big(2));
        assert_eq!(cmc_sum(1, 1), big(2));
        assert_eq!(nc_chain_count_b(1, 1), big(4));
        assert_eq!(dmc_count(2, 1), big(12));
        assert_eq!(cmc_sum(2, 1), big(16));
        assert_eq!(nc_chain_count_b(2, 1), big(28));
        assert_eq!(dmc_count(3, 2), big(1080));
        assert_eq!(cmc_sum(3, 2), big(2592));
        assert_eq!(nc_chain_count_b(3, 2), big(3672));
    }

    #[test]
    fn weighted_sum_identity() {
        assert_eq!(kk_lhs(2, 1), big(8));
        assert_eq!(kk_rhs(2, 1), big(8));
        for p in 1..=12 {
            for q in 1..=12 {
                assert_eq!(kk_lhs(p, q), kk_rhs(p, q), "identity at ({p},{q})");
                assert_eq!(cmc_sum(p, q), cmc_closed(p, q), "doubled form at ({p},{q})");
            }
        }
    }

    #[test]
    fn marked_chain_counts() {
        assert_eq!(marked_chain_count(1, 1), big(1));
        assert_eq!(marked_chain_count(2, 1), big(8));
        assert_eq!(marked_chain_count(2, 2), big(96));
        assert_eq!(marked_chain_count(3, 2), pq_count(3, 2));
    }

    #[test]
    fn element_counts_and_catalan() {
        let cats = [1u64, 1, 2, 5, 14, 42, 132];
        for (n, &c) in cats.iter().enumerate() {
            assert_eq!(catalan(n), big(c));
        }
        assert_eq!(central_binomial(3), big(20));
        assert_eq!(disconnected_b_count(2, 1), big(12));
        assert_eq!(disconnected_marked_count(2, 1), big(4));
        assert_eq!(disconnected_marked_count(2, 2), big(8));
    }

    #[test]
    fn full_lattice_chain_counts() {
        for n in 1..=6 {
            assert_eq!(reiner_count(n), upow(n, n));
        }
        assert_eq!(reiner_count(5), big(3125));
    }

    #[test]
    fn binomial_is_total() {
        assert_eq!(binomial(4, 6), BigUint::zero());
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(factorial(0), big(1));
    }
}
