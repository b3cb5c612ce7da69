//! Acceptance suite: one test (and one printed line) per criterion.
//!
//! Every check is an exact integer comparison; the helper panics with the
//! offending report line on any failure.

use annular::encoding::{count_tuples, maximal_profile, Flavor};
use annular::factorization::{
    abs_tuple, count_f_lambda_dfs, enumerate_fb, enumerate_fplus, resign_positive,
};
use annular::formulas::{
    catalan, disconnected_b_count, disconnected_marked_count, marked_chain_count, pq_count,
    BigCount,
};
use annular::goldens::{annulus_golden, hasse_golden, lift_golden, render};
use annular::marked::MarkedPoset;
use annular::perm::Partition;
use annular::verify::{run_suite, Report, VerifyParams};
use annular::PosetContext;

fn assert_suite(suite: &str, max_n: Option<usize>) -> Vec<Report> {
    let params = VerifyParams { max_n, pair: None };
    let reports = run_suite(suite, &params).expect("suite runs");
    for r in &reports {
        assert!(r.pass, "{}", r.line());
    }
    reports
}

fn pairs_with_sum_up_to(bound: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=bound {
        for p in 1..n {
            out.push((p, n - p));
        }
    }
    out
}

#[test]
fn criterion_01_factorization_counts_match_closed_form() {
    let reports = assert_suite("gj", Some(7));
    // One report per partition of 1..=7.
    assert_eq!(reports.len(), 1 + 2 + 3 + 5 + 7 + 11 + 15);
    println!("criterion 1 PASS: factorization counts match the closed form for all partitions up to weight 7");
}

#[test]
fn criterion_02_chain_counts_match_closed_forms() {
    let reports = assert_suite("chains", Some(6));
    let spot = |check: &str, params: &str| {
        reports
            .iter()
            .find(|r| r.check == check && r.params == params)
            .unwrap_or_else(|| panic!("missing report {check} [{params}]"))
            .actual
            .clone()
    };
    assert_eq!(spot("chains-connected", "p=2,q=1"), "16");
    assert_eq!(spot("chains-disconnected", "p=2,q=1"), "12");
    println!("criterion 2 PASS: maximal chain counts match the closed forms for p+q <= 6");
}

#[test]
fn criterion_03_two_to_one_fibers_on_sample_pairs() {
    let reports = assert_suite("two-to-one", None);
    let fiber_reports = reports
        .iter()
        .filter(|r| r.check == "two-to-one-fibers")
        .count();
    assert_eq!(fiber_reports, 5);
    println!("criterion 3 PASS: the sign-forgetting map is 2-to-1 with toggle-related fibers on all five sample pairs");
}

#[test]
fn criterion_04_plus_fiber_sizes() {
    assert_suite("plus-fibers", Some(4));
    println!("criterion 4 PASS: positive-part fibers have the predicted sizes for p+q <= 4");
}

#[test]
fn criterion_05_reflection_and_positive_bijections() {
    for (p, q) in pairs_with_sum_up_to(5) {
        let ctx = PosetContext::new(p, q).unwrap();
        let fb = enumerate_fb(p, q).unwrap();
        assert_eq!(
            BigCount::from(fb.len()),
            ctx.chain_counts().unwrap().connected,
            "reflection tuples vs connected chains at ({p},{q})"
        );
        let fplus = enumerate_fplus(p, q).unwrap();
        let lambda = Partition::new(vec![p.max(q), p.min(q)]).unwrap();
        assert_eq!(
            BigCount::from(fplus.len()),
            count_f_lambda_dfs(&lambda).unwrap(),
            "positive tuples vs type A factorizations at ({p},{q})"
        );
        for tuple in &fplus {
            assert_eq!(&resign_positive(&abs_tuple(tuple).unwrap()), tuple);
        }
    }
    println!("criterion 5 PASS: reflection tuples match connected chains and positive tuples biject with type A factorizations for p+q <= 5");
}

#[test]
fn criterion_06_marked_chains_count_and_roundtrip() {
    assert_suite("marked", Some(5));
    assert_eq!(marked_chain_count(2, 1), BigCount::from(8u32));
    assert_eq!(marked_chain_count(2, 2), BigCount::from(96u32));
    println!("criterion 6 PASS: marked maximal chains are connected, round-trip, and match the closed form for p+q <= 5");
}

#[test]
fn criterion_07_binomial_identity_grid() {
    let reports = assert_suite("kk", Some(30));
    assert_eq!(reports.len(), 900);
    println!("criterion 7 PASS: the binomial-sum identity holds on the full 30 x 30 grid");
}

#[test]
fn criterion_08_full_zero_cycle_chain_count() {
    assert_suite("reiner", Some(5));
    println!("criterion 8 PASS: saturated chains to the full zero cycle number n^n for n <= 5");
}

#[test]
fn criterion_09_length_oracles() {
    assert_suite("length-b", Some(4));
    println!("criterion 9 PASS: cycle-type length formulas agree with BFS distances (B_n for n <= 4, S_n for n <= 5)");
}

#[test]
fn criterion_10_disconnected_element_counts_and_inequality() {
    for p in 1..=3usize {
        for q in 1..=3usize {
            let ctx = PosetContext::new(p, q).unwrap();
            let disconnected = ctx
                .elements()
                .unwrap()
                .iter()
                .filter(|e| e.connectivity(p) == 0)
                .count();
            assert_eq!(BigCount::from(disconnected), disconnected_b_count(p, q));
            let poset = MarkedPoset::new(p, q).unwrap();
            assert_eq!(
                BigCount::from(poset.disconnected_element_count()),
                disconnected_marked_count(p, q)
            );
            assert_eq!(
                disconnected_marked_count(p, q),
                BigCount::from(2u32) * catalan(p) * catalan(q)
            );
        }
    }
    let b_elements = PosetContext::new(2, 1).unwrap().elements().unwrap().len();
    let marked_elements = MarkedPoset::new(2, 1).unwrap().elements().len();
    assert_eq!(b_elements, 20);
    assert_eq!(marked_elements, 8);
    assert_ne!(b_elements, 2 * marked_elements);
    println!("criterion 10 PASS: disconnected element counts match both closed forms and the poset sizes differ from a naive doubling");
}

#[test]
fn criterion_11_encodings_and_multichain_correspondence() {
    assert_suite("encoding", Some(3));
    // The maximal-profile evaluation reproduces the chain counts directly.
    let profile = maximal_profile(2, 1);
    assert_eq!(
        count_tuples(2, 1, profile.len(), &profile, Flavor::TypeA).unwrap(),
        pq_count(2, 1)
    );
    println!("criterion 11 PASS: chain encodings are injective, match the counting polynomial, and the multichain correspondence is 2-to-1");
}

#[test]
fn criterion_12_golden_fixtures_reproduce() {
    assert_eq!(
        render(&lift_golden().unwrap()),
        include_str!("goldens/lift_3_2.json")
    );
    assert_eq!(
        render(&hasse_golden().unwrap()),
        include_str!("goldens/hasse_2_1.json")
    );
    assert_eq!(
        render(&annulus_golden().unwrap()),
        include_str!("goldens/annulus_4_3.json")
    );
    let hasse = hasse_golden().unwrap();
    assert_eq!(hasse["atoms"].as_array().unwrap().len(), 9);
    assert_eq!(hasse["coatoms"].as_array().unwrap().len(), 9);
    let lift = lift_golden().unwrap();
    assert_eq!(lift["lift_equals_second_preimage"], true);
    println!("criterion 12 PASS: the worked lift example, the 20-element Hasse diagram, and the annulus permutations reproduce exactly");
}
