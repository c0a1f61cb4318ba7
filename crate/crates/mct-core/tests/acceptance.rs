//! End-to-end acceptance checks: every theorem value, table entry and
//! structural property the workbench claims to reproduce, checked
//! against the independent engines. Each check prints one line.

use mct_core::closed_forms::{
    caterpillar_a1, cylinder_a1_via_domination, cylinder_thresholds, grid_a1_via_domination,
    grid_thresholds, realization_value, torus_thresholds, union_bounds,
};
use mct_core::enumerate::{labeled_graphs, GraphClass};
use mct_core::game::{
    mct_spec, policy_bob_attack, policy_breaker_pairing, simulate, solve, threshold_exact,
    ExactPolicy, GameSpec, Player, RandomPolicy, Role,
};
use mct_core::graph::{
    cartesian_product, disjoint_union, make_caterpillar, make_cycle, make_path, Graph,
};
use mct_core::hypergraph::{clique_hypergraph, simplify, transversal_hypergraph};
use mct_core::invariants::{a1_by_alpha, a1_by_deletion, triangle_free_thresholds};
use mct_core::{Hypergraph, VertexSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn torus(n: usize, m: usize) -> Graph {
    cartesian_product(&make_cycle(n).unwrap(), &make_cycle(m).unwrap()).unwrap()
}
fn cylinder(n: usize, m: usize) -> Graph {
    cartesian_product(&make_cycle(n).unwrap(), &make_path(m).unwrap()).unwrap()
}
fn grid(n: usize, m: usize) -> Graph {
    cartesian_product(&make_path(n).unwrap(), &make_path(m).unwrap()).unwrap()
}

/// (a_1, a_1') by exact game search, Alice-start and Bob-start.
fn exact_pair(g: &Graph) -> (Option<usize>, Option<usize>) {
    (
        threshold_exact(g, 1, Player::Alice).unwrap().value,
        threshold_exact(g, 1, Player::Bob).unwrap().value,
    )
}

#[test]
fn acceptance_1_torus() {
    for n in 3..=8 {
        for m in n..=8 {
            let pair = torus_thresholds(n, m).unwrap();
            if n >= 4 {
                let t = triangle_free_thresholds(&torus(n, m)).unwrap();
                assert_eq!(t.a1, pair.a1.value, "torus ({n},{m}) a1 formula");
                assert_eq!(t.a1_prime, Some(pair.a1_prime.value), "torus ({n},{m}) a1'");
            }
        }
    }
    for (n, m) in [(3, 3), (3, 4), (3, 5)] {
        let pair = torus_thresholds(n, m).unwrap();
        let (a1, a1p) = exact_pair(&torus(n, m));
        assert_eq!(a1, Some(pair.a1.value), "torus ({n},{m}) a1 exact");
        assert_eq!(a1p, Some(pair.a1_prime.value), "torus ({n},{m}) a1' exact");
    }
    println!("acceptance 1 (torus closed forms vs formula and game engines): pass");
}

#[test]
fn acceptance_2_cylinder_table() {
    for n in 3..=12 {
        for m in 2..=8 {
            let pair = cylinder_thresholds(n, m).unwrap();
            if n >= 4 {
                let t = triangle_free_thresholds(&cylinder(n, m)).unwrap();
                assert_eq!(t.a1, pair.a1.value, "cylinder ({n},{m}) a1 formula");
                assert_eq!(
                    t.a1_prime,
                    Some(pair.a1_prime.value),
                    "cylinder ({n},{m}) a1'"
                );
            }
            if n >= 4 && m >= 3 {
                assert_eq!(
                    cylinder_a1_via_domination(n, m).unwrap(),
                    pair.a1.value,
                    "cylinder ({n},{m}) a1 domination pathway"
                );
            }
        }
    }
    println!("acceptance 2 (cylinder table, three independent routes): pass");
}

#[test]
fn acceptance_3_grid_table() {
    for n in 2..=6 {
        for m in n..=13 {
            let pair = grid_thresholds(n, m).unwrap();
            let g = grid(n, m);
            let t = triangle_free_thresholds(&g).unwrap();
            assert_eq!(t.a1, pair.a1.value, "grid ({n},{m}) a1 formula");
            assert_eq!(t.a1_prime, Some(pair.a1_prime.value), "grid ({n},{m}) a1'");
            if n >= 3 {
                assert_eq!(
                    grid_a1_via_domination(n, m).unwrap(),
                    pair.a1.value,
                    "grid ({n},{m}) a1 domination pathway"
                );
            }
            if n * m <= 14 {
                let (a1, a1p) = exact_pair(&g);
                assert_eq!(a1, Some(pair.a1.value), "grid ({n},{m}) a1 exact");
                assert_eq!(a1p, Some(pair.a1_prime.value), "grid ({n},{m}) a1' exact");
            }
        }
    }
    println!("acceptance 3 (grid table vs formula, domination and game engines): pass");
}

#[test]
fn acceptance_4_triangle_free_exhaustive() {
    let mut graphs = 0usize;
    for n in 2..=6 {
        for g in labeled_graphs(n, GraphClass::TriangleFreeIsolateFree).unwrap() {
            let alpha = a1_by_alpha(&g).unwrap();
            let deletion = a1_by_deletion(&g).unwrap();
            let (a1, a1p) = exact_pair(&g);
            assert_eq!(alpha, deletion, "route mismatch on {:?}", g.edges());
            assert_eq!(a1, Some(alpha), "game mismatch on {:?}", g.edges());
            assert_eq!(a1p, Some(g.max_degree()), "a1' mismatch on {:?}", g.edges());
            graphs += 1;
        }
    }
    println!(
        "acceptance 4 (triangle-free theorem, {graphs} labeled graphs exhaustively): pass"
    );
}

#[test]
fn acceptance_5_caterpillars() {
    for m in 1..=7 {
        for l in 1..=5 {
            let value = caterpillar_a1(m, l).unwrap().value;
            let t = make_caterpillar(m, l).unwrap();
            assert_eq!(
                a1_by_alpha(&t).unwrap(),
                value,
                "caterpillar ({m},{l}) formula route"
            );
            if t.n() <= 12 {
                let a1 = threshold_exact(&t, 1, Player::Alice).unwrap().value;
                assert_eq!(a1, Some(value), "caterpillar ({m},{l}) game route");
            }
        }
    }
    println!("acceptance 5 (caterpillar closed form vs formula and game engines): pass");
}

#[test]
fn acceptance_6_unions() {
    for k in 1..=4 {
        for l in 1..=k {
            for i in 0..=l {
                let value = realization_value(k, l, i).unwrap();
                let g = disjoint_union(
                    &make_caterpillar(k, k + i).unwrap(),
                    &make_caterpillar(l, k + i).unwrap(),
                )
                .unwrap();
                assert_eq!(
                    a1_by_alpha(&g).unwrap(),
                    value,
                    "realization ({k},{l},{i})"
                );
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(61);
    for trial in 0..200 {
        let g1 = random_graph(&mut rng, 5);
        let g2 = random_graph(&mut rng, 5);
        let a1 = threshold_exact(&g1, 1, Player::Alice).unwrap().value.unwrap();
        let a2 = threshold_exact(&g2, 1, Player::Alice).unwrap().value.unwrap();
        let u = disjoint_union(&g1, &g2).unwrap();
        let au = threshold_exact(&u, 1, Player::Alice).unwrap().value.unwrap();
        let (lo, hi) = union_bounds(a1, a2).unwrap();
        assert!(
            lo <= au && au <= hi,
            "union bound violated on trial {trial}: {a1}, {a2} vs {au}"
        );
    }
    println!("acceptance 6 (union realization and bounds): pass");
}

fn random_graph(rng: &mut StdRng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn random_simple_hypergraph(rng: &mut StdRng, max_n: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(2..=max_n);
    let count = rng.gen_range(1..=max_edges);
    let edges: Vec<VertexSet> = (0..count)
        .map(|_| {
            let mask = rng.gen_range(1u32..1 << n);
            (0..n).filter(|&v| mask >> v & 1 == 1).collect()
        })
        .collect();
    simplify(&Hypergraph::new(n, edges).unwrap()).unwrap()
}

#[test]
fn acceptance_7_duality_and_role_switch() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut switches = 0usize;
    for trial in 0..500 {
        let h = random_simple_hypergraph(&mut rng, 10, 8);
        let tr = transversal_hypergraph(&h).unwrap();
        let back = transversal_hypergraph(&tr).unwrap();
        let mut a: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
        let mut b: Vec<Vec<usize>> = back.edges().iter().map(|e| e.to_vec()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "involution failed on trial {trial}");

        if h.n() <= 8 && !h.has_singleton() {
            let on_h = GameSpec::new(h.clone(), 1, 1, Role::Maker).unwrap();
            let on_tr = GameSpec::new(tr, 1, 1, Role::Breaker).unwrap();
            let maker_wins_h = solve(&on_h).unwrap().winner == Role::Maker;
            let breaker_wins_tr = solve(&on_tr).unwrap().winner == Role::Breaker;
            assert_eq!(
                maker_wins_h, breaker_wins_tr,
                "role switch failed on trial {trial}"
            );
            switches += 1;
        }
    }
    println!(
        "acceptance 7 (dual involution x500, role switch x{switches}): pass"
    );
}

#[test]
fn acceptance_8_strategy_scripts() {
    // the attack script wins against perfect defense below threshold
    let mut attacks = 0usize;
    for n in 2..=6 {
        for g in labeled_graphs(n, GraphClass::TriangleFreeIsolateFree).unwrap() {
            let a1 = a1_by_deletion(&g).unwrap();
            for a in 1..a1 {
                let spec = mct_spec(&g, a, 1, Player::Alice).unwrap();
                let mut bob = policy_bob_attack(&g).unwrap();
                let (out, _) =
                    simulate(&spec, &mut bob, &mut ExactPolicy::new()).unwrap();
                assert_eq!(
                    out.winner,
                    Role::Maker,
                    "attack failed at a={a} on {:?}",
                    g.edges()
                );
                attacks += 1;
            }
        }
    }

    // the pairing script never loses once Alice's bias covers the
    // board degree
    let mut rng = StdRng::seed_from_u64(8);
    let mut boards = 0usize;
    while boards < 50 {
        let h = random_simple_hypergraph(&mut rng, 10, 8);
        if h.has_singleton() {
            continue;
        }
        boards += 1;
        let a = h.max_vertex_degree();
        let spec = GameSpec::new(h, 1, a, Role::Maker).unwrap();
        for seed in 0..100 {
            let mut alice = policy_breaker_pairing(&spec).unwrap();
            let mut bob = RandomPolicy::seeded(seed);
            let (out, _) = simulate(&spec, &mut bob, &mut alice).unwrap();
            assert_eq!(
                out.winner,
                Role::Breaker,
                "pairing lost on board {boards}, seed {seed}"
            );
        }
    }
    println!(
        "acceptance 8 (attack script x{attacks} games, pairing x5000 games): pass"
    );
}

#[test]
fn acceptance_9_monotonicity_and_ordering() {
    for n in 2..=6 {
        for g in labeled_graphs(n, GraphClass::TriangleFreeIsolateFree).unwrap() {
            let board = clique_hypergraph(&g);
            let cap = board.max_vertex_degree().max(g.n());
            let mut alice_won = false;
            for a in 1..=cap {
                let spec = GameSpec::new(board.clone(), 1, a, Role::Breaker).unwrap();
                let wins = solve(&spec).unwrap().winner == Role::Breaker;
                assert!(
                    wins || !alice_won,
                    "Alice-win not monotone in a on {:?}",
                    g.edges()
                );
                alice_won |= wins;
            }
            let (a1, a1p) = exact_pair(&g);
            assert!(
                a1p.unwrap() >= a1.unwrap(),
                "a1' < a1 on {:?}",
                g.edges()
            );
        }
    }
    println!("acceptance 9 (bias monotonicity and a1' >= a1): pass");
}
