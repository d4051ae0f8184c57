//! Kirby-color evaluations and the surgery invariant: Gauss sums from
//! Omega-colored unknots, WRT golden values, and Kirby-move invariance.
//!
//!     cargo run --release --example kirby_color_wrt

use std::collections::BTreeSet;

use quantum3::builtins;
use quantum3::category::modular::delta_pm;
use quantum3::diagram::{chain_link, evaluate_kirby, unknot, unlink};
use quantum3::surgery::{s3_presentation, unknot_presentation, wrt, SurgeryPresentation};
use quantum3::Tolerance;

fn main() {
    let tol = Tolerance::default();
    for (name, cat) in [("fibonacci", builtins::fibonacci()), ("ising", builtins::ising())] {
        println!("== {name}");
        let (dp, dm) = delta_pm(&cat);
        let omega = BTreeSet::from([0u32]);
        for (f, expect, label) in [(1i64, dp, "Delta+"), (-1, dm, "Delta-")] {
            let v = evaluate_kirby(&cat, &unknot(None, f), &omega, 1).unwrap();
            println!("  <O_Omega^{f:+}> = {:.6} {:+.6}i = {label}", v.re, v.im);
            assert!(tol.approx_eq(v, expect));
        }
        let w_s3 = wrt(&cat, &s3_presentation(), &tol, 1).unwrap();
        let w_s1s2 = wrt(&cat, &unknot_presentation(0), &tol, 1).unwrap();
        println!("  WRT(S3) = {:.9}; WRT(S1xS2) = {:.9} (dim = {:.9})",
            w_s3.re, w_s1s2.re, cat.base.global_dim().re);

        // Kirby move 1: a distant +-1-framed unknot changes nothing
        let base = wrt(&cat, &unknot_presentation(2), &tol, 1).unwrap();
        for f in [1i64, -1] {
            let p = SurgeryPresentation::new(unlink(&[(None, 2), (None, f)]), BTreeSet::from([0, 1])).unwrap();
            let v = wrt(&cat, &p, &tol, 1).unwrap();
            println!("  stabilize by O^{f:+}: {:.9} {:+.9}i (base {:.9} {:+.9}i)", v.re, v.im, base.re, base.im);
        }
        // Kirby move 2: slide one unknot over the other
        let (a, b) = (1i64, 2i64);
        let before = SurgeryPresentation::new(unlink(&[(None, a), (None, b)]), BTreeSet::from([0, 1])).unwrap();
        let after = SurgeryPresentation::new(chain_link(None, None, a + b, b, b), BTreeSet::from([0, 1])).unwrap();
        let v1 = wrt(&cat, &before, &tol, 1).unwrap();
        let v2 = wrt(&cat, &after, &tol, 1).unwrap();
        println!("  handle slide (a={a}, b={b}): before {:.9} {:+.9}i, after {:.9} {:+.9}i", v1.re, v1.im, v2.re, v2.im);
    }
}
