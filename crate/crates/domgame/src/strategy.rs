//! Player policies and game drivers: the greedy Dominator, several Staller
//! instantiations, full-trace simulation with invariant checking, and the
//! adversarial worst-case search against the deterministic greedy Dominator.

use crate::error::{Error, Result};
use crate::game::{Color, GameState, Player};
use crate::graph::Graph;
use crate::phase::{
    self, advance_phase, boundary_is_persistent, last_checked_boundary, phase0_floor,
    staller_floor, structural_check, PhaseMachine, SwitchRecord,
};
use crate::scheme::{max_gain, min_gain, potential, Family, Scheme};
use crate::solver::{self, SolverConfig};
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;

pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// How a player chooses moves. The greedy Dominator is the strategy the
/// bounds are proved for; the Staller variants are concrete adversaries
/// (the bounds quantify over all of them).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    GreedyDominator,
    ExactOptimal,
    RandomStaller { seed: u64 },
    MinGainStaller,
    WorstCaseStaller,
}

// ---- trace -------------------------------------------------------------

pub const TRACE_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct TraceTurn {
    /// 1-based turn index.
    pub i: usize,
    pub player: Player,
    pub v: usize,
    /// Phase the turn belongs to; 0 for the Staller-start opening turn.
    pub phase: usize,
    /// Value-assignment stage active during the turn.
    pub stage: u8,
    /// Potential decrease under the active stage.
    pub gain: i64,
    /// Potential after the turn, under the active stage.
    pub p_after: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhaseSpan {
    pub phase: usize,
    /// First and last turn of the phase; skipped phases have `b == e`
    /// equal to the end of the phase they collapsed onto.
    pub b: usize,
    pub e: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Trace {
    pub version: u32,
    /// graph6 encoding of the graph the game was played on.
    pub graph: String,
    pub first: Player,
    pub turns: Vec<TraceTurn>,
    pub switches: Vec<SwitchRecord>,
    pub phases: Vec<PhaseSpan>,
    pub length: usize,
    /// Human-readable invariant violations; empty on a healthy game.
    pub violations: Vec<String>,
}

impl Trace {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

// ---- single moves ------------------------------------------------------

/// Advances the phase machine, then plays the maximum-gain vertex under
/// the now-active stage.
pub fn greedy_dominator_move(
    s: &GameState<'_>,
    machine: &mut PhaseMachine,
    before_turn: usize,
) -> Result<usize> {
    machine.advance(s, before_turn)?;
    Ok(max_gain(s, machine.scheme())?.0)
}

/// One Staller move under `policy`; `scheme` and `phase` describe the
/// phase state the gains are valued in.
pub fn staller_move(
    s: &GameState<'_>,
    policy: &Policy,
    scheme: Scheme,
    phase: usize,
    family: &Family,
    rng: &mut ChaCha8Rng,
    budget: u64,
) -> Result<usize> {
    if s.is_over() {
        return Err(Error::GameOver);
    }
    match policy {
        Policy::RandomStaller { .. } => Ok(s
            .legal_moves()
            .iter()
            .choose(rng)
            .expect("game not over")),
        Policy::MinGainStaller => Ok(min_gain(s, scheme)?.0),
        Policy::WorstCaseStaller => {
            let mut search = WorstSearch::new(*family, budget);
            search.best_staller_move(s, phase)
        }
        Policy::ExactOptimal => exact_optimal_move(s),
        Policy::GreedyDominator => Err(Error::FamilyPrecondition(
            "GreedyDominator is not a Staller policy".into(),
        )),
    }
}

fn exact_optimal_move(s: &GameState<'_>) -> Result<usize> {
    let cfg = SolverConfig::default();
    solver::optimal_move(s.graph(), s.dominated().as_word(), s.to_move(), cfg)?
        .ok_or(Error::GameOver)
}

// ---- full games --------------------------------------------------------

/// Plays a full game and returns its trace. The invariant suite (gain
/// floors, thresholds, switch drops, structural lemmas, color
/// monotonicity, ledger conservation) runs whenever the Dominator is the
/// greedy policy; any breach lands in `trace.violations`.
pub fn play_game(
    g: &Graph,
    family: Family,
    dominator: &Policy,
    staller: &Policy,
    first: Player,
) -> Result<Trace> {
    family.check_applicable(g)?;
    let greedy = *dominator == Policy::GreedyDominator;
    if !greedy && *dominator != Policy::ExactOptimal {
        return Err(Error::FamilyPrecondition(
            "Dominator policy must be GreedyDominator or ExactOptimal".into(),
        ));
    }

    let seed = match staller {
        Policy::RandomStaller { seed } => *seed,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut state = GameState::new(g, first);
    let mut machine = PhaseMachine::new(family, &state)?;
    let mut turns: Vec<TraceTurn> = Vec::new();
    let mut spans: Vec<PhaseSpan> = Vec::new();
    let mut violations: Vec<String> = Vec::new();
    let mut active_persistent: Vec<usize> = Vec::new();
    let mut prev_view = state.residual();
    let mut phase_begin = 1usize;

    if first == Player::Staller {
        spans.push(PhaseSpan { phase: 0, b: 1, e: 1 });
        phase_begin = 2;
    }

    let mut turn = 0usize;
    while !state.is_over() {
        turn += 1;
        let player = state.to_move();
        let staller_opening = player == Player::Staller && turn == 1;

        let (phase_for_turn, scheme) = if player == Player::Dominator {
            let n_switch_before = machine.ledger.switches.len();
            let out = machine.advance(&state, turn)?;
            if !out.crossed.is_empty() {
                let e = turn - 1;
                let mut first_crossed = true;
                for &b in &out.crossed {
                    spans.push(PhaseSpan {
                        phase: b,
                        b: if first_crossed { phase_begin } else { e },
                        e,
                    });
                    first_crossed = false;
                    if greedy && b <= last_checked_boundary(&family) {
                        for v in structural_check(g, &prev_view, &family, b) {
                            violations.push(v.to_string());
                        }
                        if boundary_is_persistent(&family, b) {
                            active_persistent.push(b);
                        }
                    }
                }
                phase_begin = turn;
            }
            for sw in &machine.ledger.switches[n_switch_before..] {
                if sw.drop < 0 {
                    violations.push(format!(
                        "negative switch drop {} before turn {}",
                        sw.drop, sw.before_turn
                    ));
                }
            }
            (machine.phase(), machine.scheme())
        } else if staller_opening {
            (0, family.first_scheme())
        } else {
            (machine.phase(), machine.scheme())
        };

        let pol = if player == Player::Dominator { dominator } else { staller };
        let v = match (player, pol) {
            (Player::Dominator, Policy::GreedyDominator) => max_gain(&state, scheme)?.0,
            (Player::Dominator, Policy::ExactOptimal) => exact_optimal_move(&state)?,
            (Player::Staller, pol) => staller_move(
                &state,
                pol,
                scheme,
                phase_for_turn.max(1),
                &family,
                &mut rng,
                DEFAULT_SEARCH_BUDGET,
            )?,
            _ => unreachable!(),
        };

        let p_before = potential(&state, scheme)?;
        let dominated_before = state.dominated().len();
        state = state.apply_move(v)?;
        let p_after = potential(&state, scheme)?;
        let gain = p_before - p_after;
        machine.record_gain(gain);

        if state.dominated().len() <= dominated_before {
            violations.push(format!("turn {turn}: dominated set did not grow"));
        }

        if greedy {
            match player {
                Player::Dominator => {
                    let t = machine.threshold();
                    if gain < t {
                        violations.push(format!(
                            "turn {turn}: Dominator gain {gain} below threshold {t} in phase {phase_for_turn}"
                        ));
                    }
                }
                Player::Staller => {
                    let floor = if staller_opening {
                        phase0_floor(&family)
                    } else {
                        staller_floor(&family, phase_for_turn)
                    };
                    if gain < floor {
                        violations.push(format!(
                            "turn {turn}: Staller gain {gain} below floor {floor} in phase {phase_for_turn}"
                        ));
                    }
                }
            }
        }

        let view = state.residual();
        check_view_invariants(g, &state, &prev_view, &view, turn, &mut violations);
        if greedy {
            for &b in &active_persistent {
                for viol in structural_check(g, &view, &family, b) {
                    violations.push(format!("turn {turn} (persistent) {viol}"));
                }
            }
        }
        prev_view = view;

        turns.push(TraceTurn {
            i: turn,
            player,
            v,
            phase: phase_for_turn,
            stage: scheme.stage,
            gain,
            p_after,
        });
    }

    if turn >= phase_begin || spans.is_empty() {
        spans.push(PhaseSpan {
            phase: machine.phase(),
            b: phase_begin,
            e: turn,
        });
    }

    // Ledger conservation: the whole initial potential is spent by gains
    // and switch drops (the terminal residual graph is worth 0).
    let ledger = &machine.ledger;
    if ledger.initial != ledger.gains_total() + ledger.drops_total() {
        violations.push(format!(
            "ledger leak: initial {} != gains {} + drops {}",
            ledger.initial,
            ledger.gains_total(),
            ledger.drops_total()
        ));
    }

    Ok(Trace {
        version: TRACE_VERSION,
        graph: g.to_graph6(),
        first,
        length: turns.len(),
        turns,
        switches: ledger.switches.clone(),
        phases: spans,
        violations,
    })
}

fn check_view_invariants(
    g: &Graph,
    state: &GameState<'_>,
    prev: &crate::game::ResidualView,
    view: &crate::game::ResidualView,
    turn: usize,
    violations: &mut Vec<String>,
) {
    let legal = state.legal_moves();
    for u in 0..g.n() {
        let backwards = matches!(
            (prev.color[u], view.color[u]),
            (Color::Blue, Color::White) | (Color::Red, Color::White) | (Color::Red, Color::Blue)
        );
        if backwards {
            violations.push(format!("turn {turn}: vertex {u} color moved backwards"));
        }
        match view.color[u] {
            Color::White => {
                if view.residual_deg[u] != g.degree(u) {
                    violations.push(format!(
                        "turn {turn}: white vertex {u} residual degree {} != original {}",
                        view.residual_deg[u],
                        g.degree(u)
                    ));
                }
            }
            Color::Blue => {
                if view.white_deg[u] == 0 {
                    violations.push(format!("turn {turn}: blue vertex {u} has no white neighbor"));
                }
            }
            Color::Red => {}
        }
        // Legal moves are exactly the non-red vertices.
        let non_red = view.color[u] != Color::Red;
        if legal.contains(u) != non_red {
            violations.push(format!(
                "turn {turn}: vertex {u} legality disagrees with its color"
            ));
        }
    }
}

// ---- adversarial search ------------------------------------------------

/// Depth-first maximization over Staller choices with the Dominator fixed
/// to the deterministic greedy strategy. Memoized on (dominated set,
/// phase, mover); needs n <= 64.
pub struct WorstSearch {
    family: Family,
    memo: HashMap<(u64, usize, Player), u32>,
    budget: u64,
    nodes: u64,
}

impl WorstSearch {
    pub fn new(family: Family, budget: u64) -> Self {
        WorstSearch {
            family,
            memo: HashMap::new(),
            budget,
            nodes: 0,
        }
    }

    fn longest(&mut self, s: &GameState<'_>, phase: usize) -> Result<u32> {
        if s.is_over() {
            return Ok(0);
        }
        let key = (s.dominated().as_word(), phase, s.to_move());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        let val = match s.to_move() {
            Player::Dominator => {
                let (phase, _) = advance_phase(&self.family, phase, s)?;
                let specs = phase::phase_specs(&self.family);
                let scheme = self.family.stage(specs[phase - 1].stage);
                let (v, _) = max_gain(s, scheme)?;
                1 + self.longest(&s.apply_move(v)?, phase)?
            }
            Player::Staller => {
                let mut best = 0;
                for v in s.legal_moves().iter() {
                    best = best.max(1 + self.longest(&s.apply_move(v)?, phase)?);
                }
                best
            }
        };
        self.memo.insert(key, val);
        Ok(val)
    }

    /// First move of a longest completion; ties break to the smallest id.
    pub fn best_staller_move(&mut self, s: &GameState<'_>, phase: usize) -> Result<usize> {
        let mut best: Option<(u32, usize)> = None;
        for v in s.legal_moves().iter() {
            let val = 1 + self.longest(&s.apply_move(v)?, phase)?;
            if best.is_none_or(|(b, _)| val > b) {
                best = Some((val, v));
            }
        }
        best.map(|(_, v)| v).ok_or(Error::GameOver)
    }
}

/// Maximum game length over all Staller play sequences when the Dominator
/// plays the greedy strategy of `family`.
pub fn worst_case_length_vs_greedy(
    g: &Graph,
    family: Family,
    first: Player,
    budget: u64,
) -> Result<u32> {
    family.check_applicable(g)?;
    if g.n() > 64 {
        return Err(Error::CapExceeded { n: g.n(), cap: 64 });
    }
    let start = GameState::new(g, first);
    let mut search = WorstSearch::new(family, budget);
    search.longest(&start, 1)
}
