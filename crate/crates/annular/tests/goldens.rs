//! Regression tests pinning the committed JSON fixtures byte-for-byte.

use annular::factorization::{plus_tuple, toggle_connected, tuple_product_b};
use annular::goldens::{
    annulus_golden, export_goldens, hasse_golden, lift_example_tuples, lift_golden, render,
};
use annular::signed::{beta_pq, gamma_pq};

#[test]
fn lift_fixture_matches_committed_file() {
    assert_eq!(
        render(&lift_golden().unwrap()),
        include_str!("goldens/lift_3_2.json")
    );
}

#[test]
fn hasse_fixture_matches_committed_file() {
    assert_eq!(
        render(&hasse_golden().unwrap()),
        include_str!("goldens/hasse_2_1.json")
    );
}

#[test]
fn annulus_fixture_matches_committed_file() {
    assert_eq!(
        render(&annulus_golden().unwrap()),
        include_str!("goldens/annulus_4_3.json")
    );
}

#[test]
fn export_reproduces_committed_fixtures() {
    let dir = std::env::temp_dir().join(format!("goldens-export-{}", std::process::id()));
    let written = export_goldens(&dir).unwrap();
    let committed = [
        include_str!("goldens/lift_3_2.json"),
        include_str!("goldens/hasse_2_1.json"),
        include_str!("goldens/annulus_4_3.json"),
    ];
    assert_eq!(written.len(), committed.len());
    for (path, expected) in written.iter().zip(committed) {
        assert_eq!(std::fs::read_to_string(path).unwrap(), expected);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lift_tuples_satisfy_plus_toggle_and_product_relations() {
    let (sigma, tau, tau_prime) = lift_example_tuples();
    assert_eq!(plus_tuple(&tau).unwrap(), sigma);
    assert_eq!(plus_tuple(&tau_prime).unwrap(), sigma);
    assert_eq!(toggle_connected(&tau, 3, 2).unwrap(), tau_prime);
    assert_eq!(toggle_connected(&tau_prime, 3, 2).unwrap(), tau);
    assert_eq!(tuple_product_b(&sigma, 5).unwrap(), beta_pq(3, 2).unwrap());
    assert_eq!(tuple_product_b(&tau, 5).unwrap(), gamma_pq(3, 2).unwrap());
    assert_eq!(
        tuple_product_b(&tau_prime, 5).unwrap(),
        gamma_pq(3, 2).unwrap()
    );
}

#[test]
fn hasse_fixture_spot_values() {
    let v = hasse_golden().unwrap();
    assert_eq!(v["atoms"].as_array().unwrap().len(), 9);
    assert_eq!(v["coatoms"].as_array().unwrap().len(), 9);
    assert_eq!(v["element_count"], 20);
    assert_eq!(v["edge_count"], 46);
}
