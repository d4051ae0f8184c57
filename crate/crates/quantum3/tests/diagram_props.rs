//! Diagram-engine properties: planar isotopy, Reidemeister invariance,
//! Kirby-color values, mirrors, and the sliding identity.


use std::collections::{BTreeMap, BTreeSet};

use quantum3::builtins;
use quantum3::category::modular::{delta_pm, s_matrix};
use quantum3::category::ModularData;
use quantum3::diagram::{
    chain_link, evaluate, evaluate_kirby, hopf_link, unknot, Component, Dir, Event, MorseDiagram,
};
use quantum3::{real, Scalar, Tolerance};

fn modular_builtins() -> Vec<(&'static str, ModularData)> {
    vec![
        ("vec_z2_triv", builtins::vec_zn_trivially_braided(2)),
        ("vec_z3_triv", builtins::vec_zn_trivially_braided(3)),
        ("fibonacci", builtins::fibonacci()),
        ("ising", builtins::ising()),
    ]
}

fn zigzag_circle(color: usize, l1: Dir, cap_first: bool) -> MorseDiagram {
    let mut components = BTreeMap::new();
    components.insert(0, Component { color: Some(color), framing: 0 });
    let slices = if cap_first {
        vec![
            vec![Event::Cup { pos: 0, component: 0, left_dir: l1 }],
            vec![Event::Cup { pos: 1, component: 0, left_dir: l1.flip() }],
            vec![Event::Cap { pos: 2 }],
            vec![Event::Cap { pos: 0 }],
        ]
    } else {
        vec![
            vec![Event::Cup { pos: 0, component: 0, left_dir: l1 }],
            vec![Event::Cup { pos: 1, component: 0, left_dir: l1.flip() }],
            vec![Event::Cap { pos: 0 }],
            vec![Event::Cap { pos: 0 }],
        ]
    };
    MorseDiagram { components, slices }
}

#[test]
fn zigzag_cancellation() {
    let tol = Tolerance::default();
    for (name, cat) in modular_builtins() {
        for x in 0..cat.rank() {
            for l1 in [Dir::Up, Dir::Down] {
                for cap_first in [true, false] {
                    let v = evaluate(&cat, &zigzag_circle(x, l1, cap_first)).unwrap();
                    assert!(
                        tol.approx_eq(v, cat.base.qdim(x)),
                        "{name} x={x}: zigzag gave {v}"
                    );
                }
            }
        }
    }
}

/// Closure of a 2- or 3-strand braid word on cups, then the inverse word,
/// capped off: must equal the disjoint circles regardless of the word.
fn braid_sandwich(colors: &[usize], word: &[(usize, bool)]) -> MorseDiagram {
    let mut components = BTreeMap::new();
    let mut slices = Vec::new();
    for (i, &c) in colors.iter().enumerate() {
        components.insert(i as u32, Component { color: Some(c), framing: 0 });
        slices.push(vec![Event::Cup { pos: 2 * i, component: i as u32, left_dir: Dir::Up }]);
    }
    for &(p, s) in word {
        slices.push(vec![Event::Cross { pos: p, positive: s }]);
    }
    for &(p, s) in word.iter().rev() {
        slices.push(vec![Event::Cross { pos: p, positive: !s }]);
    }
    for i in (0..colors.len()).rev() {
        slices.push(vec![Event::Cap { pos: 2 * i }]);
    }
    MorseDiagram { components, slices }
}

#[test]
fn reidemeister_two_and_three() {
    let tol = Tolerance::default();
    for (name, cat) in modular_builtins() {
        let r = cat.rank();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let target = cat.base.qdim(i) * cat.base.qdim(j) * cat.base.qdim(k);
                    // words on inner strands 1..4 of the 6-strand closure
                    let w1 = [(1usize, true), (2, true), (1, true)];
                    let w2 = [(2usize, true), (1, true), (2, true)];
                    let d1 = braid_sandwich(&[i, j, k], &w1);
                    let d2 = braid_sandwich(&[i, j, k], &w2);
                    let v1 = evaluate(&cat, &d1).unwrap();
                    let v2 = evaluate(&cat, &d2).unwrap();
                    assert!(tol.approx_eq(v1, target), "{name} ({i},{j},{k}) R-sandwich 1: {v1}");
                    assert!(tol.approx_eq(v2, target), "{name} ({i},{j},{k}) R-sandwich 2: {v2}");
                }
                // pure R2: one positive then one negative crossing
                let d = braid_sandwich(&[i, j], &[(1usize, true)]);
                let v = evaluate(&cat, &d).unwrap();
                assert!(
                    tol.approx_eq(v, cat.base.qdim(i) * cat.base.qdim(j)),
                    "{name} ({i},{j}) R2: {v}"
                );
            }
        }
    }
}

#[test]
fn hopf_link_matches_s_matrix_and_monodromy_formula() {
    let tol = Tolerance::default();
    for (name, cat) in modular_builtins() {
        let s = s_matrix(&cat).unwrap();
        for i in 0..cat.rank() {
            for j in 0..cat.rank() {
                // dual route: the monodromy formula
                let mut formula = Scalar::new(0.0, 0.0);
                for c in 0..cat.rank() {
                    if cat.base.ring.adm(i, j, c) {
                        formula += cat.base.qdim(c) * cat.rsym(i, j, c) * cat.rsym(j, i, c);
                    }
                }
                assert!(tol.approx_eq(s[i][j], formula), "{name} S[{i}{j}]: {} vs {formula}", s[i][j]);
                let direct = evaluate(&cat, &hopf_link(Some(i), Some(j), 0, 0, true)).unwrap();
                assert!(tol.approx_eq(direct, s[i][j]), "{name} hopf[{i}{j}]");
            }
        }
    }
}

#[test]
fn kirby_color_values() {
    let tol = Tolerance::default();
    for (name, cat) in modular_builtins() {
        let (dp, dm) = delta_pm(&cat);
        let omega: BTreeSet<u32> = BTreeSet::from([0]);
        let plus = evaluate_kirby(&cat, &unknot(None, 1), &omega, 1).unwrap();
        let minus = evaluate_kirby(&cat, &unknot(None, -1), &omega, 1).unwrap();
        let zero = evaluate_kirby(&cat, &unknot(None, 0), &omega, 1).unwrap();
        assert!(tol.approx_eq(plus, dp), "{name}: O+ {plus} vs {dp}");
        assert!(tol.approx_eq(minus, dm), "{name}: O- {minus} vs {dm}");
        assert!(tol.approx_eq(zero, cat.base.global_dim()), "{name}: O0");
    }
}

#[test]
fn sliding_property_through_omega() {
    // slide a colored strand over a +1-framed Omega circle: the disjoint
    // picture equals the linked one with the slid framing
    let tol = Tolerance::default();
    for (name, cat) in [("fibonacci", builtins::fibonacci()), ("ising", builtins::ising())] {
        let (dp, _) = delta_pm(&cat);
        let omega: BTreeSet<u32> = BTreeSet::from([1]);
        for x in 0..cat.rank() {
            let lhs = cat.base.qdim(x) * dp;
            let slid = chain_link(Some(x), None, 1, 1, 1);
            let rhs = evaluate_kirby(&cat, &slid, &omega, 1).unwrap();
            assert!(tol.approx_eq(lhs, rhs), "{name} x={x}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn mirror_evaluation_is_conjugate() {
    // unitary data: swapping all crossings and negating framings conjugates
    let tol = Tolerance::default();
    for (name, cat) in [("fibonacci", builtins::fibonacci()), ("ising", builtins::ising())] {
        let diagrams: Vec<MorseDiagram> = vec![
            unknot(Some(cat.rank() - 1), 3),
            hopf_link(Some(1), Some(cat.rank() - 1), 2, -1, true),
            chain_link(Some(1), Some(1), 0, 2, 2),
        ];
        for d in diagrams {
            let mut m = d.clone();
            for c in m.components.values_mut() {
                c.framing = -c.framing;
            }
            for slice in m.slices.iter_mut() {
                for ev in slice.iter_mut() {
                    if let Event::Cross { positive, .. } = ev {
                        *positive = !*positive;
                    }
                }
            }
            let v = evaluate(&cat, &d).unwrap();
            let vm = evaluate(&cat, &m).unwrap();
            assert!(tol.approx_eq(vm, v.conj()), "{name}: {vm} vs conj {v}");
        }
    }
}

#[test]
fn parallel_kirby_sum_is_deterministic() {
    let cat = builtins::ising();
    let omega: BTreeSet<u32> = BTreeSet::from([0, 1]);
    let d = chain_link(None, None, 2, 1, 1);
    let serial = evaluate_kirby(&cat, &d, &omega, 1).unwrap();
    let parallel = evaluate_kirby(&cat, &d, &omega, 4).unwrap();
    assert_eq!(serial, parallel, "worker count must not change the value");
}

#[test]
fn framed_unknot_brute_force_oracle() {
    // expected value computed by inserting explicit curls (drawn kinks) and
    // evaluating, then frozen against the declared-framing path
    let tol = Tolerance::default();
    for (name, cat) in [("fibonacci", builtins::fibonacci()), ("ising", builtins::ising())] {
        for x in 0..cat.rank() {
            for n in [-2i64, -1, 0, 1, 3] {
                let drawn = evaluate(&cat, &quantum3::diagram::curled_unknot(Some(x), n)).unwrap();
                let declared = evaluate(&cat, &unknot(Some(x), n)).unwrap();
                let expect = quantum3::diagram::powi(cat.twist(x), n) * cat.base.qdim(x);
                assert!(tol.approx_eq(drawn, expect), "{name} x={x} n={n} drawn");
                assert!(tol.approx_eq(declared, expect), "{name} x={x} n={n} declared");
            }
        }
    }
}

#[test]
fn omega_conflict_rejected() {
    let cat = builtins::fibonacci();
    let d = unknot(Some(1), 0);
    let omega: BTreeSet<u32> = BTreeSet::from([0]);
    assert!(evaluate_kirby(&cat, &d, &omega, 1).is_err());
}

#[test]
fn pointed_braided_category_is_not_modular() {
    let tol = Tolerance::default();
    let cat = builtins::vec_zn_trivially_braided(3);
    let s = s_matrix(&cat).unwrap();
    for row in &s {
        for v in row {
            assert!(tol.approx_eq(*v, real(1.0)));
        }
    }
}
