//! Phase automaton: per-phase value-assignment stages and Dominator gain
//! thresholds, the gain/switch-drop ledger, and the structural checks that
//! must hold at (and after) each phase boundary.

use crate::error::Result;
use crate::game::{Color, GameState, ResidualView};
use crate::graph::Graph;
use crate::scheme::{max_gain, potential, switch_drop, Family, Scheme};
use serde::Serialize;

/// One phase: which stage values moves, and the least gain Dominator must
/// be able to seize for the phase to stay active.
#[derive(Clone, Copy, Debug)]
pub struct PhaseSpec {
    pub stage: u8,
    pub threshold: i64,
}

/// Phases of a family, indexed from 1. The final phase's threshold is 1,
/// which always holds while the game is running.
pub fn phase_specs(family: &Family) -> Vec<PhaseSpec> {
    match family {
        Family::TwoThirds => vec![
            PhaseSpec { stage: 1, threshold: 4 },
            PhaseSpec { stage: 1, threshold: 1 },
        ],
        Family::Deg3 => vec![
            PhaseSpec { stage: 1, threshold: 88 },
            PhaseSpec { stage: 2, threshold: 91 },
            PhaseSpec { stage: 3, threshold: 84 },
            PhaseSpec { stage: 3, threshold: 1 },
        ],
        Family::MinDeg(p) => {
            let (a, b, d) = (p.a, p.b, p.d);
            vec![
                PhaseSpec { stage: 1, threshold: 5 * a - 4 * b },
                PhaseSpec { stage: 2, threshold: 4 * a - 3 * b + (4 * d - 6) * p.x1 },
                PhaseSpec { stage: 3, threshold: 3 * a - 2 * b + 2 * p.x1 + (3 * d - 2) * p.x2 },
                PhaseSpec { stage: 4, threshold: 2 * a + (2 * d - 2) * p.x3 },
                PhaseSpec { stage: 4, threshold: 1 },
            ]
        }
    }
}

/// Least gain any single move yields in the given phase, Staller's included.
pub fn staller_floor(family: &Family, phase: usize) -> i64 {
    match family {
        Family::TwoThirds => [2, 3][phase - 1],
        Family::Deg3 => [34, 31, 38, 61][phase - 1],
        Family::MinDeg(p) => {
            let (a, d) = (p.a, p.d);
            [
                a,
                a + (d - 6) * p.x1,
                a + (d - 4) * p.x2,
                a + (d - 2) * p.x3,
                p.s,
            ][phase - 1]
        }
    }
}

/// Least gain of the opening Staller move in a Staller-start game,
/// accounted under the family's first stage.
pub fn phase0_floor(family: &Family) -> i64 {
    match family {
        Family::TwoThirds => 3,
        Family::Deg3 => 88, // 34 + 3*18
        Family::MinDeg(p) => p.a + p.d * (p.a - p.b),
    }
}

/// The per-turn average the family's bound needs over each phase.
pub fn phase_average_floor(family: &Family) -> i64 {
    match family {
        Family::TwoThirds => 3,
        Family::Deg3 => 61,
        Family::MinDeg(p) => p.s,
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SwitchRecord {
    /// 1-based index of the Dominator turn the switch precedes.
    pub before_turn: usize,
    pub drop: i64,
}

/// Running account of the game's potential: opening value, per-turn gains
/// under the active stage, and the drop at each stage switch. Conservation
/// (initial = gains + drops + final) is checked by the game driver.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Ledger {
    pub initial: i64,
    pub gains: Vec<i64>,
    pub switches: Vec<SwitchRecord>,
}

impl Ledger {
    pub fn gains_total(&self) -> i64 {
        self.gains.iter().sum()
    }

    pub fn drops_total(&self) -> i64 {
        self.switches.iter().map(|s| s.drop).sum()
    }
}

#[derive(Debug)]
pub struct AdvanceOutcome {
    /// Phase boundaries crossed, in order: crossing boundary `i` means
    /// phase `i` (possibly skipped) ended at the state inspected.
    pub crossed: Vec<usize>,
}

/// Tracks the active phase of one game and its gain ledger.
pub struct PhaseMachine {
    family: Family,
    phase: usize,
    pub ledger: Ledger,
}

impl PhaseMachine {
    pub fn new(family: Family, start: &GameState<'_>) -> Result<PhaseMachine> {
        let initial = potential(start, family.first_scheme())?;
        Ok(PhaseMachine {
            family,
            phase: 1,
            ledger: Ledger {
                initial,
                ..Default::default()
            },
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn phase(&self) -> usize {
        self.phase
    }

    pub fn scheme(&self) -> Scheme {
        self.family.stage(phase_specs(&self.family)[self.phase - 1].stage)
    }

    pub fn threshold(&self) -> i64 {
        phase_specs(&self.family)[self.phase - 1].threshold
    }

    pub fn record_gain(&mut self, gain: i64) {
        self.ledger.gains.push(gain);
    }

    /// Called immediately before a Dominator turn (`before_turn`, 1-based):
    /// advances past every phase whose condition fails, recording the
    /// potential drop of each stage switch.
    pub fn advance(&mut self, s: &GameState<'_>, before_turn: usize) -> Result<AdvanceOutcome> {
        let (new_phase, crossed) = advance_phase(&self.family, self.phase, s)?;
        let specs = phase_specs(&self.family);
        let mut stage = specs[self.phase - 1].stage;
        for &boundary in &crossed {
            let next_stage = specs[boundary].stage; // phase boundary+1, 0-indexed
            if next_stage != stage {
                let drop = switch_drop(s, self.family.stage(stage), self.family.stage(next_stage))?;
                self.ledger.switches.push(SwitchRecord { before_turn, drop });
                stage = next_stage;
            }
        }
        self.phase = new_phase;
        Ok(AdvanceOutcome { crossed })
    }
}

/// Pure phase-transition function: from `phase`, returns the phase active
/// for the coming Dominator turn and the list of boundaries crossed.
pub fn advance_phase(
    family: &Family,
    mut phase: usize,
    s: &GameState<'_>,
) -> Result<(usize, Vec<usize>)> {
    let specs = phase_specs(family);
    let mut crossed = Vec::new();
    while phase < specs.len() {
        let spec = specs[phase - 1];
        let (_, mg) = max_gain(s, family.stage(spec.stage))?;
        if mg >= spec.threshold {
            break;
        }
        crossed.push(phase);
        phase += 1;
    }
    Ok((phase, crossed))
}

// ---- structural checks -------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub boundary: usize,
    pub vertex: usize,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "after phase {}: vertex {}: {}",
            self.boundary, self.vertex, self.detail
        )
    }
}

/// Whether the claims of this boundary stay in force for the rest of the
/// game (degree caps do; the endgame star/pair structure is checked only
/// at the boundary itself).
pub fn boundary_is_persistent(family: &Family, boundary: usize) -> bool {
    match family {
        Family::TwoThirds => false,
        Family::Deg3 => boundary <= 2,
        Family::MinDeg(_) => boundary <= 3,
    }
}

pub fn last_checked_boundary(family: &Family) -> usize {
    match family {
        Family::TwoThirds => 1,
        Family::Deg3 => 3,
        Family::MinDeg(_) => 4,
    }
}

/// Checks the structural claims that hold once phase `boundary` has ended.
/// Empty result means the residual view satisfies them all.
pub fn structural_check(
    g: &Graph,
    view: &ResidualView,
    family: &Family,
    boundary: usize,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let cap_white = |caps: &mut Vec<Violation>, cap: u32| {
        for v in 0..g.n() {
            if view.color[v] == Color::White && view.white_deg[v] > cap {
                caps.push(Violation {
                    boundary,
                    vertex: v,
                    detail: format!("white vertex has {} white neighbors, cap {cap}", view.white_deg[v]),
                });
            }
        }
    };
    let cap_blue = |caps: &mut Vec<Violation>, cap: u32| {
        for v in 0..g.n() {
            if view.color[v] == Color::Blue && view.white_deg[v] > cap {
                caps.push(Violation {
                    boundary,
                    vertex: v,
                    detail: format!("blue vertex has {} white neighbors, cap {cap}", view.white_deg[v]),
                });
            }
        }
    };
    // The endgame structure: white centers with only blue leaves, each blue
    // vertex a leaf; `min_center_deg` bounds the star order from below.
    let star_structure = |out: &mut Vec<Violation>, min_center_deg: u32| {
        for v in 0..g.n() {
            match view.color[v] {
                Color::White => {
                    if view.white_deg[v] != 0 {
                        out.push(Violation {
                            boundary,
                            vertex: v,
                            detail: format!(
                                "white vertex has {} white neighbors, expected 0",
                                view.white_deg[v]
                            ),
                        });
                    }
                    if view.residual_deg[v] < min_center_deg {
                        out.push(Violation {
                            boundary,
                            vertex: v,
                            detail: format!(
                                "white center has residual degree {}, expected >= {min_center_deg}",
                                view.residual_deg[v]
                            ),
                        });
                    }
                }
                Color::Blue => {
                    if view.white_deg[v] != 1 {
                        out.push(Violation {
                            boundary,
                            vertex: v,
                            detail: format!(
                                "blue vertex has {} white neighbors, expected exactly 1",
                                view.white_deg[v]
                            ),
                        });
                    }
                }
                Color::Red => {}
            }
        }
    };
    match (family, boundary) {
        (Family::TwoThirds, 1) => star_structure(&mut out, 1),
        (Family::Deg3, 1) => {
            cap_white(&mut out, 2);
            cap_blue(&mut out, 3);
        }
        (Family::Deg3, 2) => {
            cap_white(&mut out, 1);
            cap_blue(&mut out, 2);
        }
        (Family::Deg3, 3) => star_structure(&mut out, 3),
        (Family::MinDeg(_), 1) => {
            cap_white(&mut out, 3);
            cap_blue(&mut out, 4);
        }
        (Family::MinDeg(_), 2) => {
            cap_white(&mut out, 2);
            cap_blue(&mut out, 3);
        }
        (Family::MinDeg(_), 3) => {
            cap_white(&mut out, 1);
            cap_blue(&mut out, 2);
        }
        (Family::MinDeg(p), 4) => star_structure(&mut out, p.d as u32),
        _ => {
            // Boundaries past the last lemma-bearing one carry no claims.
        }
    }
    out
}
