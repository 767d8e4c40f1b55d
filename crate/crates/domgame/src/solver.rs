//! Exact computation of the domination number and the game domination
//! numbers on small graphs, by memoized minimax. Ground truth for every
//! other module.

use crate::error::{Error, Result};
use crate::game::Player;
use crate::graph::Graph;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Largest order accepted; past this the state space is out of desk scale.
    pub cap: usize,
    /// Abort cleanly once the memo table holds this many entries.
    pub memo_budget: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cap: 22,
            memo_budget: 1 << 25,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SandwichReport {
    pub gamma: u32,
    pub gamma_g: u32,
    pub gamma_g_prime: u32,
    pub holds: bool,
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.closed_rows()[v].as_word()).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

struct Minimax<'a> {
    closed: &'a [u64],
    full: u64,
    memo: HashMap<(u64, Player), u32>,
    budget: usize,
}

impl Minimax<'_> {
    /// Remaining turns from (dominated, mover) under optimal play.
    /// Dominator minimizes, Staller maximizes; each move counts one turn.
    fn value(&mut self, dominated: u64, mover: Player) -> Result<u32> {
        if dominated == self.full {
            return Ok(0);
        }
        if let Some(&v) = self.memo.get(&(dominated, mover)) {
            return Ok(v);
        }
        if self.memo.len() >= self.budget {
            return Err(Error::MemoBudgetExceeded(self.budget));
        }
        let mut best: Option<u32> = None;
        for (v, &cm) in self.closed.iter().enumerate() {
            if cm & !dominated == 0 {
                continue; // v dominates nothing new
            }
            let _ = v;
            let sub = 1 + self.value(dominated | cm, mover.other())?;
            best = Some(match (best, mover) {
                (None, _) => sub,
                (Some(b), Player::Dominator) => b.min(sub),
                (Some(b), Player::Staller) => b.max(sub),
            });
        }
        let val = best.expect("non-terminal position must have a legal move");
        self.memo.insert((dominated, mover), val);
        Ok(val)
    }
}

/// Minimax game length with `first` to move: γ_g for Dominator,
/// γ_g′ for Staller.
pub fn game_value(g: &Graph, first: Player) -> Result<u32> {
    game_value_with(g, first, SolverConfig::default())
}

pub fn game_value_with(g: &Graph, first: Player, cfg: SolverConfig) -> Result<u32> {
    if g.n() > cfg.cap {
        return Err(Error::CapExceeded { n: g.n(), cap: cfg.cap });
    }
    let closed = closed_masks(g);
    let mut mm = Minimax {
        closed: &closed,
        full: full_mask(g.n()),
        memo: HashMap::new(),
        budget: cfg.memo_budget,
    };
    mm.value(0, first)
}

/// Optimal move for `mover` from a given dominated set, or `None` when the
/// game is over. Ties break to the smallest vertex id.
pub fn optimal_move(g: &Graph, dominated: u64, mover: Player, cfg: SolverConfig) -> Result<Option<usize>> {
    if g.n() > cfg.cap {
        return Err(Error::CapExceeded { n: g.n(), cap: cfg.cap });
    }
    let closed = closed_masks(g);
    let full = full_mask(g.n());
    if dominated == full {
        return Ok(None);
    }
    let mut mm = Minimax {
        closed: &closed,
        full,
        memo: HashMap::new(),
        budget: cfg.memo_budget,
    };
    let mut best: Option<(u32, usize)> = None;
    for (v, &cm) in closed.iter().enumerate() {
        if cm & !dominated == 0 {
            continue;
        }
        let val = 1 + mm.value(dominated | cm, mover.other())?;
        let better = match (best, mover) {
            (None, _) => true,
            (Some((b, _)), Player::Dominator) => val < b,
            (Some((b, _)), Player::Staller) => val > b,
        };
        if better {
            best = Some((val, v));
        }
    }
    Ok(best.map(|(_, v)| v))
}

/// Minimum size of a dominating set, by branch and bound on the lowest
/// undominated vertex.
pub fn domination_number(g: &Graph) -> Result<u32> {
    domination_number_with(g, SolverConfig::default())
}

pub fn domination_number_with(g: &Graph, cfg: SolverConfig) -> Result<u32> {
    if g.n() > cfg.cap {
        return Err(Error::CapExceeded { n: g.n(), cap: cfg.cap });
    }
    let closed = closed_masks(g);
    let full = full_mask(g.n());
    let mut best = g.n() as u32; // taking every vertex always dominates
    branch(&closed, full, 0, 0, &mut best);
    Ok(best)
}

fn branch(closed: &[u64], full: u64, dominated: u64, size: u32, best: &mut u32) {
    if dominated == full {
        *best = (*best).min(size);
        return;
    }
    if size + 1 >= *best {
        return;
    }
    // Lowest undominated vertex; some chosen vertex must cover it, and the
    // candidates are exactly its closed neighborhood.
    let v = (!dominated & full).trailing_zeros() as usize;
    let mut cands = closed[v];
    while cands != 0 {
        let u = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        branch(closed, full, dominated | closed[u], size + 1, best);
    }
}

/// Computes γ, γ_g and γ_g′ and checks γ ≤ γ_g ≤ 2γ−1. A report with
/// `holds == false` indicates a solver bug, not a property of the graph.
pub fn check_sandwich(g: &Graph) -> Result<SandwichReport> {
    check_sandwich_with(g, SolverConfig::default())
}

pub fn check_sandwich_with(g: &Graph, cfg: SolverConfig) -> Result<SandwichReport> {
    let gamma = domination_number_with(g, cfg)?;
    let gamma_g = game_value_with(g, Player::Dominator, cfg)?;
    let gamma_g_prime = game_value_with(g, Player::Staller, cfg)?;
    Ok(SandwichReport {
        gamma,
        gamma_g,
        gamma_g_prime,
        holds: gamma <= gamma_g && gamma_g < 2 * gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};

    #[test]
    fn game_value_examples() {
        assert_eq!(game_value(&complete(5), Player::Dominator).unwrap(), 1);
        // C4: two-ply exhaustive tree gives 2.
        assert_eq!(game_value(&cycle(4), Player::Dominator).unwrap(), 2);
        // P3 Staller first: best Staller move is a leaf, one more move needed.
        assert_eq!(game_value(&path(3), Player::Staller).unwrap(), 2);
    }

    #[test]
    fn domination_number_examples() {
        assert_eq!(domination_number(&complete(5)).unwrap(), 1);
        assert_eq!(domination_number(&cycle(6)).unwrap(), 2);
        assert_eq!(domination_number(&petersen()).unwrap(), 3);
    }

    #[test]
    fn sandwich_examples() {
        let r = check_sandwich(&complete(5)).unwrap();
        assert_eq!((r.gamma, r.gamma_g), (1, 1));
        assert!(r.holds);

        let r = check_sandwich(&cycle(4)).unwrap();
        assert_eq!((r.gamma, r.gamma_g), (2, 2));
        assert!(r.holds);

        let r = check_sandwich(&cycle(6)).unwrap();
        assert_eq!(r.gamma, 2);
        assert!((2..=3).contains(&r.gamma_g));
        assert!(r.holds);
    }

    #[test]
    fn cap_is_enforced() {
        let g = cycle(25);
        assert!(matches!(
            game_value(&g, Player::Dominator),
            Err(Error::CapExceeded { .. })
        ));
        let relaxed = SolverConfig { cap: 30, ..Default::default() };
        assert!(game_value_with(&g, Player::Dominator, relaxed).is_ok());
    }

    #[test]
    fn optimal_move_finishes_games() {
        let g = petersen();
        let cfg = SolverConfig::default();
        let closed: Vec<u64> = (0..g.n()).map(|v| g.closed_rows()[v].as_word()).collect();
        let full = (1u64 << g.n()) - 1;
        let mut dominated = 0u64;
        let mut mover = Player::Dominator;
        let mut turns = 0;
        while dominated != full {
            let v = optimal_move(&g, dominated, mover, cfg).unwrap().unwrap();
            dominated |= closed[v];
            mover = mover.other();
            turns += 1;
        }
        assert_eq!(turns, game_value(&g, Player::Dominator).unwrap());
    }
}
