//! The end-to-end cross-relation: the state-sum invariant of a lens space
//! equals tau(M) tau(-M) computed from the surgery presentation (a p-framed
//! unknot), tying the triangulation and diagram pipelines together.
//!
//!     cargo run --release --example lens_space_cross_check

use quantum3::builtins;
use quantum3::state_sum::{tv_contract, Strategy};
use quantum3::surgery::{mirror, s3_presentation, tau, unknot_presentation};
use quantum3::triangulation::builders::{lens, s1_x_s2, sphere_s3};
use quantum3::Tolerance;

fn main() {
    let tol = Tolerance::new(1e-8);
    for (name, cat) in [("fibonacci", builtins::fibonacci()), ("ising", builtins::ising())] {
        println!("== {name}");
        let root = cat.base.global_dim().sqrt();
        let mut cases = vec![
            ("S3".to_string(), sphere_s3(), s3_presentation()),
            ("S1xS2".to_string(), s1_x_s2(), unknot_presentation(0)),
        ];
        for p in 2..=5 {
            cases.push((format!("lens({p})"), lens(p), unknot_presentation(p as i64)));
        }
        println!(
            "  {:<10} {:>6} {:>16} {:>16} {:>10}",
            "manifold", "tets", "|M| (state sum)", "tau(M) tau(-M)", "|diff|"
        );
        for (case, tri, pres) in cases {
            let lhs = tv_contract(&cat.base, &tri, &Strategy::MinFill, 10_000_000)
                .unwrap()
                .value;
            let t = tau(&cat, root, &pres, &tol, 1).unwrap();
            let tm = tau(&cat, root, &mirror(&pres), &tol, 1).unwrap();
            let rhs = t * tm;
            println!(
                "  {case:<10} {:>6} {:>16.9} {:>16.9} {:>10.2e}",
                tri.n_tets(),
                lhs.re,
                rhs.re,
                (lhs - rhs).norm()
            );
        }
    }
}
