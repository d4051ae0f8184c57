//! Evaluates colored framed link diagrams: unknots, framed unknots with
//! explicit curls, and Hopf links reproducing the S-matrix.
//!
//!     cargo run --release --example link_invariants

use quantum3::builtins;
use quantum3::category::modular::s_matrix;
use quantum3::diagram::{curled_unknot, evaluate, hopf_link, powi, unknot};

fn main() {
    let cat = builtins::ising();
    println!("Ising: labels 0 = unit, 1 = sigma, 2 = psi\n");
    for x in 0..cat.rank() {
        let v = evaluate(&cat, &unknot(Some(x), 0)).unwrap();
        println!("<unknot_{x}> = {:.6}  (qdim {:.6})", v.re, cat.base.qdim(x).re);
    }
    println!();
    for x in 1..cat.rank() {
        for n in [-2i64, -1, 1, 2] {
            let declared = evaluate(&cat, &unknot(Some(x), n)).unwrap();
            let drawn = evaluate(&cat, &curled_unknot(Some(x), n)).unwrap();
            let expect = powi(cat.twist(x), n) * cat.base.qdim(x);
            println!(
                "<unknot_{x}, framing {n:+}> = {:.6} {:+.6}i  drawn-curls {:.6} {:+.6}i  twist^n*d {:.6} {:+.6}i",
                declared.re, declared.im, drawn.re, drawn.im, expect.re, expect.im
            );
        }
    }
    println!("\nHopf links against the S-matrix:");
    let s = s_matrix(&cat).unwrap();
    for i in 0..cat.rank() {
        for j in 0..cat.rank() {
            let v = evaluate(&cat, &hopf_link(Some(i), Some(j), 0, 0, true)).unwrap();
            println!("<hopf({i},{j})> = {:9.6}   S[{i}][{j}] = {:9.6}", v.re, s[i][j].re);
        }
    }
}
