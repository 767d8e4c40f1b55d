//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance`.

use domgame::bounds::{self, BoundFamily, Verdict};
use domgame::game::Player;
use domgame::gen::{gen_min_degree_graph, GenModel};
use domgame::graph::{self, Graph};
use domgame::scheme::{Family, Params};
use domgame::solver;
use domgame::strategy::{self, Policy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, desc: &str, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id}: {verdict} — {desc}");
    assert!(
        failures.is_empty(),
        "criterion {id} failed ({} cases), first: {}",
        failures.len(),
        failures[0]
    );
}

// ---- corpus helpers ----------------------------------------------------

/// All labeled connected graphs on n vertices (n small enough to
/// enumerate every edge subset).
fn labeled_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// A seeded random connected graph on n vertices.
fn random_connected(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let p: f64 = rng.gen_range(0.2..0.7);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Small connected corpus: exhaustive to n = 5, sampled at n = 6, 7.
fn small_connected_corpus() -> Vec<Graph> {
    let mut corpus = Vec::new();
    for n in 2..=5 {
        corpus.extend(labeled_connected(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    for n in [6usize, 7] {
        for _ in 0..25 {
            corpus.push(random_connected(n, &mut rng));
        }
    }
    corpus
}

/// Corpus for the 2n/3 bound: a spread of the small corpus plus larger
/// random connected graphs up to n = 14.
fn two_thirds_corpus() -> Vec<Graph> {
    let mut corpus: Vec<Graph> = small_connected_corpus()
        .into_iter()
        .step_by(5)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for n in 8..=14 {
        for _ in 0..6 {
            corpus.push(random_connected(n, &mut rng));
        }
    }
    corpus.push(graph::path(9));
    corpus.push(graph::cycle(12));
    corpus.push(graph::star(6));
    corpus
}

/// Corpus for the minimum-degree-3 bound: seeded cubic and degree-floor
/// graphs on 8..=14 vertices plus the named examples.
fn deg3_corpus() -> Vec<Graph> {
    let mut corpus = Vec::new();
    for n in [8usize, 10, 12, 14] {
        for seed in 0..14 {
            corpus.push(gen_min_degree_graph(n, 3, GenModel::RegularPairing, seed).unwrap());
        }
    }
    for n in 8..=14 {
        for seed in 100..107 {
            corpus.push(gen_min_degree_graph(n, 3, GenModel::DegreeFloorRepair, seed).unwrap());
        }
    }
    corpus.push(graph::petersen());
    corpus.push(graph::complete(4));
    corpus.push(graph::complete_bipartite(3, 3));
    corpus.push(graph::cube());
    corpus
}

/// Corpus for the minimum-degree-4 bound: seeded 4-regular and
/// degree-floor graphs on 10..=14 vertices plus named dense examples.
fn deg4_corpus() -> Vec<Graph> {
    let mut corpus = Vec::new();
    for n in 10..=14 {
        for seed in 0..10 {
            corpus.push(gen_min_degree_graph(n, 4, GenModel::RegularPairing, seed).unwrap());
        }
    }
    for n in 10..=14 {
        for seed in 200..210 {
            corpus.push(gen_min_degree_graph(n, 4, GenModel::DegreeFloorRepair, seed).unwrap());
        }
    }
    corpus.push(graph::complete(5));
    corpus.push(graph::complete_bipartite(4, 4));
    corpus.push(graph::complete_multipartite(&[2, 2, 2]));
    corpus.push(graph::complete_multipartite(&[3, 3, 4]));
    corpus
}

fn wc(g: &Graph, family: Family, first: Player) -> u32 {
    strategy::worst_case_length_vs_greedy(g, family, first, strategy::DEFAULT_SEARCH_BUDGET)
        .unwrap()
}

// ---- criteria ----------------------------------------------------------

#[test]
fn criterion_1_parameter_identities() {
    let mut failures = Vec::new();
    for d in 4..=64i64 {
        let p = match Params::new(d) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("d={d}: {e}"));
                continue;
            }
        };
        let (a, b, s) = (p.a, p.b, p.s);
        let checks = [
            ("chain", p.chain_holds()),
            ("6a-4b=2s", 6 * a - 4 * b == 2 * s),
            (
                "5a-3b+(5d-12)x1=2s",
                5 * a - 3 * b + (5 * d - 12) * p.x1 == 2 * s,
            ),
            (
                "4a-2b+2x1+(4d-6)x2=2s",
                4 * a - 2 * b + 2 * p.x1 + (4 * d - 6) * p.x2 == 2 * s,
            ),
            (
                "a+d(b-x1-x2-x3)=s",
                a + d * (b - p.x1 - p.x2 - p.x3) == s,
            ),
            ("3a+(3d-4)x3>=2s", 3 * a + (3 * d - 4) * p.x3 >= 2 * s),
        ];
        for (name, ok) in checks {
            if !ok {
                failures.push(format!("d={d}: {name}"));
            }
        }
    }
    report(1, "coefficient identities for 4 <= d <= 64", &failures);
}

#[test]
fn criterion_2_headline_rationals() {
    let mut failures = Vec::new();
    let mut expect = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_string());
        }
    };
    let p4 = Params::new(4).unwrap();
    let p5 = Params::new(5).unwrap();
    // a/s in lowest terms, by cross multiplication.
    expect("a/s|d=4 = 37/72", p4.a * 72 == p4.s * 37);
    expect("a/s|d=5 = 2102/4377", p5.a * 4377 == p5.s * 2102);
    expect("37/72 < 0.5139", 37 * 10000 < 5139 * 72);
    expect("2102/4377 < 0.4803", 2102i64 * 10000 < 4803 * 4377);
    expect("34/61 < 0.5574", 34 * 10000 < 5574 * 61);
    report(2, "headline coefficients as exact rationals", &failures);
}

#[test]
fn criterion_3_sandwich() {
    let mut corpus = small_connected_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..200 {
        let n = rng.gen_range(4..=12);
        corpus.push(random_connected(n, &mut rng));
    }
    assert!(corpus.len() >= 500, "only {} graphs", corpus.len());
    let mut failures = Vec::new();
    for g in &corpus {
        let r = solver::check_sandwich(g).unwrap();
        if !r.holds {
            failures.push(format!("{}: {:?}", g.to_graph6(), r));
        }
    }
    report(
        3,
        &format!(
            "gamma <= gamma_g <= 2 gamma - 1 on {} connected graphs",
            corpus.len()
        ),
        &failures,
    );
}

#[test]
fn criterion_4_two_thirds_bound() {
    let corpus = two_thirds_corpus();
    let mut failures = Vec::new();
    for g in &corpus {
        let n = g.n();
        let floor = bounds::bound_floor(BoundFamily::General23, n).unwrap();
        let gamma_g = solver::game_value(g, Player::Dominator).unwrap();
        let gamma_gp = solver::game_value(g, Player::Staller).unwrap();
        let wc_d = wc(g, Family::TwoThirds, Player::Dominator);
        let wc_s = wc(g, Family::TwoThirds, Player::Staller);
        for (name, len) in [
            ("gamma_g", gamma_g as i64),
            ("gamma_g'", gamma_gp as i64),
            ("wc_D", wc_d as i64),
            ("wc_S", wc_s as i64),
        ] {
            if len > floor {
                failures.push(format!(
                    "{}: {name} = {len} > floor(2n/3) = {floor}",
                    g.to_graph6()
                ));
            }
        }
        if (gamma_g > wc_d) || (gamma_gp > wc_s) {
            failures.push(format!("{}: exact above worst case", g.to_graph6()));
        }
    }
    report(
        4,
        &format!("2n/3 bound on {} isolate-free graphs", corpus.len()),
        &failures,
    );
}

#[test]
fn criterion_5_deg3_bound() {
    let corpus = deg3_corpus();
    assert!(corpus.len() >= 100);
    let mut failures = Vec::new();
    for g in &corpus {
        let n = g.n();
        let floor_d = bounds::bound_floor(BoundFamily::Deg3, n).unwrap();
        let floor_s = bounds::bound_floor(BoundFamily::Deg3StallerStart, n).unwrap();
        let wc_d = wc(g, Family::Deg3, Player::Dominator) as i64;
        let wc_s = wc(g, Family::Deg3, Player::Staller) as i64;
        let gamma_g = solver::game_value(g, Player::Dominator).unwrap() as i64;
        if wc_d > floor_d {
            failures.push(format!("{}: wc_D {wc_d} > {floor_d}", g.to_graph6()));
        }
        if wc_s > floor_s {
            failures.push(format!("{}: wc_S {wc_s} > {floor_s}", g.to_graph6()));
        }
        if gamma_g > floor_d {
            failures.push(format!("{}: gamma_g {gamma_g} > {floor_d}", g.to_graph6()));
        }
    }
    report(
        5,
        &format!("34n/61 bounds on {} graphs with delta >= 3", corpus.len()),
        &failures,
    );
}

#[test]
fn criterion_6_mindeg_bound() {
    let corpus = deg4_corpus();
    assert!(corpus.len() >= 100);
    let mut failures = Vec::new();
    for g in &corpus {
        let n = g.n();
        let delta = g.min_degree() as i64;
        for d in [delta, 4] {
            let fam = Family::min_deg(d).unwrap();
            let floor_d = bounds::bound_floor(BoundFamily::MinDeg(d), n).unwrap();
            let floor_s =
                bounds::bound_floor(BoundFamily::MinDegStallerStart(d), n).unwrap();
            let wc_d = wc(g, fam, Player::Dominator) as i64;
            let wc_s = wc(g, fam, Player::Staller) as i64;
            if wc_d > floor_d {
                failures.push(format!(
                    "{} d={d}: wc_D {wc_d} > {floor_d}",
                    g.to_graph6()
                ));
            }
            if wc_s > floor_s {
                failures.push(format!(
                    "{} d={d}: wc_S {wc_s} > {floor_s}",
                    g.to_graph6()
                ));
            }
            if d == delta {
                break; // delta == 4: one pass covers both
            }
        }
    }
    report(
        6,
        &format!("a n/s bounds on {} graphs with delta >= 4", corpus.len()),
        &failures,
    );
}

#[test]
fn criterion_7_lemma_suite() {
    // Simulated greedy games over the corpora of criteria 4-6; the game
    // driver records every per-turn floor, threshold, switch-drop,
    // ledger, color-monotonicity and structural-lemma breach.
    let mut failures = Vec::new();
    let mut games = 0usize;
    let mut run = |g: &Graph, fam: Family| {
        for staller in [
            Policy::MinGainStaller,
            Policy::RandomStaller { seed: 7 },
        ] {
            for first in [Player::Dominator, Player::Staller] {
                let t = strategy::play_game(g, fam, &Policy::GreedyDominator, &staller, first)
                    .unwrap();
                games += 1;
                for v in &t.violations {
                    failures.push(format!("{} [{}]: {v}", g.to_graph6(), fam.name()));
                }
            }
        }
    };
    for g in two_thirds_corpus() {
        run(&g, Family::TwoThirds);
    }
    for g in deg3_corpus() {
        run(&g, Family::Deg3);
    }
    for g in deg4_corpus() {
        let fam = Family::min_deg(g.min_degree() as i64).unwrap();
        run(&g, fam);
        run(&g, Family::min_deg(4).unwrap());
    }
    // Worst-case Staller games on a small subset.
    for g in [graph::petersen(), graph::cube(), graph::complete_bipartite(3, 3)] {
        for first in [Player::Dominator, Player::Staller] {
            let t = strategy::play_game(
                &g,
                Family::Deg3,
                &Policy::GreedyDominator,
                &Policy::WorstCaseStaller,
                first,
            )
            .unwrap();
            games += 1;
            for v in &t.violations {
                failures.push(format!("{} [deg3/worst]: {v}", g.to_graph6()));
            }
        }
    }
    report(
        7,
        &format!("zero lemma violations across {games} simulated games"),
        &failures,
    );
}

#[test]
fn criterion_8_oracle_equivalence() {
    // Plain unmemoized minimax, reimplemented here as the independent oracle.
    fn plain(closed: &[u64], full: u64, dominated: u64, mover: Player) -> u32 {
        if dominated == full {
            return 0;
        }
        let mut best: Option<u32> = None;
        for &cm in closed {
            if cm & !dominated == 0 {
                continue;
            }
            let sub = 1 + plain(closed, full, dominated | cm, mover.other());
            best = Some(match (best, mover) {
                (None, _) => sub,
                (Some(b), Player::Dominator) => b.min(sub),
                (Some(b), Player::Staller) => b.max(sub),
            });
        }
        best.unwrap()
    }

    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    for i in 0..50 {
        let n = rng.gen_range(3..=8);
        let g = random_connected(n, &mut rng);
        let closed: Vec<u64> = (0..n).map(|v| g.closed_rows()[v].as_word()).collect();
        let full = (1u64 << n) - 1;
        for first in [Player::Dominator, Player::Staller] {
            let fast = solver::game_value(&g, first).unwrap();
            let slow = plain(&closed, full, 0, first);
            if fast != slow {
                failures.push(format!(
                    "graph {i} ({}): memoized {fast} != plain {slow}",
                    g.to_graph6()
                ));
            }
        }
    }
    // Relabeling invariance.
    let g = random_connected(8, &mut rng);
    let base = solver::game_value(&g, Player::Dominator).unwrap();
    for _ in 0..20 {
        let mut perm: Vec<usize> = (0..8).collect();
        for i in (1..8usize).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabel(&perm).unwrap();
        let v = solver::game_value(&h, Player::Dominator).unwrap();
        if v != base {
            failures.push(format!("relabel {perm:?}: {v} != {base}"));
        }
    }
    report(8, "memoized minimax vs plain recursion + relabeling", &failures);
}

#[test]
fn criterion_9_log_bound_comparison() {
    let mut failures = Vec::new();
    for row in bounds::compare_bounds(3, 21).unwrap() {
        if row.verdict != Verdict::PolynomialWins {
            failures.push(format!("d={}: {:?}", row.d, row.verdict));
        }
    }
    report(
        9,
        "polynomial coefficient certified below the ln bound for 3 <= d <= 21",
        &failures,
    );
}
