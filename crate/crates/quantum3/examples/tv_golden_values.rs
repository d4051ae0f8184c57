//! Computes the state-sum invariant of S³ and S¹×S² for every builtin,
//! by direct enumeration and by tensor-network contraction.
//!
//!     cargo run --release --example tv_golden_values

use quantum3::builtins;
use quantum3::state_sum::{tv_contract, tv_enumerate, Strategy};
use quantum3::triangulation::builders::{s1_x_s2, sphere_s3};
use quantum3::Scalar;

fn main() {
    let s3 = sphere_s3();
    let s1s2 = s1_x_s2();
    println!(
        "S3: {} tets, {} edge classes;  S1xS2: {} tets, {} edge classes",
        s3.n_tets(),
        s3.n_edge_classes(),
        s1s2.n_tets(),
        s1s2.n_edge_classes()
    );
    println!(
        "{:<10} {:>14} {:>14} {:>14} {:>10}",
        "category", "|S3| enum", "|S3| contract", "1/dim", "|S1xS2|"
    );
    for name in builtins::BUILTIN_NAMES {
        let b = builtins::by_name(name).unwrap();
        let cat = b.spherical();
        let (ve, states) = tv_enumerate(cat, &s3, 1_000_000).unwrap();
        let vc = tv_contract(cat, &s3, &Strategy::MinFill, 10_000_000).unwrap();
        let v2 = tv_contract(cat, &s1s2, &Strategy::MinFill, 10_000_000).unwrap();
        let expect = Scalar::new(1.0, 0.0) / cat.global_dim();
        println!(
            "{name:<10} {:>14.9} {:>14.9} {:>14.9} {:>10.6}   ({states} admissible states, width {})",
            ve.re, vc.value.re, expect.re, v2.value.re, v2.width
        );
    }
}
