//! Runs the full validator suite over every builtin category data set and
//! prints the algebraic-identity residuals.
//!
//!     cargo run --release --example validate_builtins

use quantum3::builtins;
use quantum3::category::modular::{delta_pm, is_modular, s_matrix, s_matrix_sanity};
use quantum3::category::validate::{
    check_hexagon, check_orthonormality, check_pentagon, check_ribbon, validate_fusion_ring,
};
use quantum3::Tolerance;

fn main() {
    let tol = Tolerance::default();
    println!("{:<10} {:>4} {:>12} {:>12} {:>12} {:>12}  modular", "name", "rank", "pentagon", "ortho", "hexagon", "ribbon");
    for name in builtins::BUILTIN_NAMES {
        let b = builtins::by_name(name).unwrap();
        let data = b.spherical();
        let ring_report = validate_fusion_ring(&data.ring);
        assert!(ring_report.is_empty(), "{name}: {ring_report:?}");
        let p = check_pentagon(data).unwrap();
        let o = check_orthonormality(data).unwrap();
        let (h, r, m) = match b.modular() {
            Some(md) => (
                format!("{:.2e}", check_hexagon(md).unwrap()),
                format!("{:.2e}", check_ribbon(md).unwrap()),
                format!("{}", is_modular(md, &tol).unwrap()),
            ),
            None => ("-".into(), "-".into(), "-".into()),
        };
        println!("{name:<10} {:>4} {p:>12.2e} {o:>12.2e} {h:>12} {r:>12}  {m}", data.rank());
        if let Some(md) = b.modular() {
            let s = s_matrix(md).unwrap();
            let (dp, dm) = delta_pm(md);
            println!(
                "           S-matrix sanity {:.2e}; delta+ = {:.6} {:+.6}i, delta- = {:.6} {:+.6}i, product residual {:.2e}",
                s_matrix_sanity(md, &s),
                dp.re,
                dp.im,
                dm.re,
                dm.im,
                (dp * dm - md.base.global_dim()).norm()
            );
        }
    }
}
