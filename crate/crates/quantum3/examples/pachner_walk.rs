//! Random Pachner moves on a triangulation of S³: the complex changes, the
//! invariant does not.
//!
//!     cargo run --release --example pachner_walk

use quantum3::builtins;
use quantum3::state_sum::{tv_contract, Strategy};
use quantum3::triangulation::builders::sphere_s3;
use quantum3::triangulation::pachner::{fuzz_walk, Move};

fn main() {
    let cat = builtins::fibonacci();
    let s3 = sphere_s3();
    let base = tv_contract(&cat.base, &s3, &Strategy::MinFill, 10_000_000)
        .unwrap()
        .value;
    println!("start: 5 tets, |S3| = {:.9}", base.re);
    let walk = fuzz_walk(&s3, 30, 11, 18);
    let mut max_dev = 0f64;
    for (i, (mv, tri)) in walk.iter().enumerate() {
        let r = tv_contract(&cat.base, tri, &Strategy::MinFill, 10_000_000).unwrap();
        let dev = (r.value - base).norm();
        max_dev = max_dev.max(dev);
        let tag = match mv {
            Move::Expand23(t) => format!("2-3 at triangle {t}"),
            Move::Expand14(t) => format!("1-4 at tet {t}"),
            Move::Shrink32(e) => format!("3-2 at edge {e}"),
            Move::Shrink41(v) => format!("4-1 at vertex {v}"),
        };
        println!(
            "move {i:2}: {tag:<22} -> {:2} tets, value {:.12}, |dev| {dev:.2e}",
            tri.n_tets(),
            r.value.re
        );
    }
    println!("max deviation over the walk: {max_dev:.3e}");
}
