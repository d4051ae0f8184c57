//! Tensor-network contraction planning: elimination orders, induced widths,
//! and cost caps on the edge networks of the builtin triangulations.
//!
//!     cargo run --release --example contraction_planning

use quantum3::builtins;
use quantum3::state_sum::{build_network, contract_network, elimination_order, Strategy};
use quantum3::triangulation::builders::{lens, s1_x_s2, sphere_s3};

fn main() {
    let cat = builtins::ising();
    for (name, tri) in [
        ("S3".to_string(), sphere_s3()),
        ("S1xS2".to_string(), s1_x_s2()),
        ("lens(2)".to_string(), lens(2)),
        ("lens(5)".to_string(), lens(5)),
    ] {
        let net = build_network(&cat.base, &tri).unwrap();
        println!(
            "{name}: {} variables, {} factors (rank {})",
            net.n_vars,
            net.factors.len(),
            net.rank
        );
        for strat in [Strategy::MinDegree, Strategy::MinFill] {
            let (order, width) = elimination_order(&net, &strat).unwrap();
            let entries = (net.rank as u64).pow(width as u32);
            println!(
                "  {strat:<22?} width {width:>2}  (largest intermediate {entries} entries)"
            );
            let r = contract_network(&net, &order, 100_000_000).unwrap();
            println!("    value {:.9} {:+.9}i", r.value.re, r.value.im);
        }
        // a deliberately bad order for comparison
        let order: Vec<usize> = (0..net.n_vars).collect();
        let (_, width) = elimination_order(&net, &Strategy::Given(order)).unwrap();
        println!("  identity order          width {width:>2}");
        // tight cap demonstration
        let (order, _) = elimination_order(&net, &Strategy::MinFill).unwrap();
        match contract_network(&net, &order, 27) {
            Err(e) => println!("  with a 27-entry cap: {e}"),
            Ok(_) => println!("  contraction fits in 27 entries"),
        }
    }
}
