//! Domination-game state machine: dominated-set evolution, white/blue/red
//! coloring and the residual-graph view.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::Dominator => write!(f, "Dominator"),
            Player::Staller => write!(f, "Staller"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Color {
    White,
    Blue,
    Red,
}

/// A position in the domination game on a fixed original graph.
///
/// Value semantics: applying a move yields a fresh state, so positions can
/// be copied and explored freely while sharing the underlying graph.
#[derive(Clone)]
pub struct GameState<'g> {
    graph: &'g Graph,
    dominated: VertexSet,
    moves: Vec<usize>,
    first: Player,
}

impl<'g> GameState<'g> {
    pub fn new(graph: &'g Graph, first: Player) -> Self {
        GameState {
            graph,
            dominated: VertexSet::new(graph.n()),
            moves: Vec::new(),
            first,
        }
    }

    /// Rebuilds a state from a dominated set directly (no move history).
    /// `turn_parity` tells how many moves were notionally played.
    pub fn from_dominated(
        graph: &'g Graph,
        dominated: VertexSet,
        first: Player,
        moves_played: usize,
    ) -> Self {
        let mut s = GameState {
            graph,
            dominated,
            moves: Vec::new(),
            first,
        };
        // Parity is all that matters for whose turn it is.
        s.moves = vec![usize::MAX; moves_played];
        s
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn dominated(&self) -> &VertexSet {
        &self.dominated
    }

    pub fn moves(&self) -> &[usize] {
        &self.moves
    }

    /// Number of moves already played (0-based turn counter).
    pub fn turn(&self) -> usize {
        self.moves.len()
    }

    pub fn first_player(&self) -> Player {
        self.first
    }

    pub fn to_move(&self) -> Player {
        if self.turn().is_multiple_of(2) {
            self.first
        } else {
            self.first.other()
        }
    }

    /// Vertices whose closed neighborhood is not yet fully dominated:
    /// exactly the white and blue vertices of the residual view.
    pub fn legal_moves(&self) -> VertexSet {
        let mut legal = VertexSet::new(self.graph.n());
        for v in 0..self.graph.n() {
            if !self.graph.closed_rows()[v].is_subset_of(&self.dominated) {
                legal.insert(v);
            }
        }
        legal
    }

    pub fn is_legal(&self, v: usize) -> bool {
        v < self.graph.n() && !self.graph.closed_rows()[v].is_subset_of(&self.dominated)
    }

    pub fn is_over(&self) -> bool {
        self.dominated.is_full()
    }

    pub fn apply_move(&self, v: usize) -> Result<GameState<'g>> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange(v, self.graph.n()));
        }
        if !self.is_legal(v) {
            return Err(Error::IllegalMove(v));
        }
        let mut next = self.clone();
        next.dominated.union_with(&self.graph.closed_rows()[v]);
        next.moves.push(v);
        Ok(next)
    }

    pub fn residual(&self) -> ResidualView {
        colors(self.graph, &self.dominated)
    }
}

/// Per-vertex color and degree view of the residual graph.
///
/// The residual graph is the original graph minus red vertices and minus
/// blue-blue edges; it is derived on demand, never mutated in place.
#[derive(Clone, Debug)]
pub struct ResidualView {
    pub color: Vec<Color>,
    /// Number of white neighbors (in the original graph; identical in the
    /// residual graph for white and blue vertices).
    pub white_deg: Vec<u32>,
    /// Number of blue neighbors; zero for blue vertices by residual-graph
    /// construction, and zero for red vertices.
    pub blue_deg: Vec<u32>,
    /// Degree in the residual graph: full original degree for white
    /// vertices, white-degree for blue vertices, zero for red.
    pub residual_deg: Vec<u32>,
}

impl ResidualView {
    pub fn count(&self, c: Color) -> usize {
        self.color.iter().filter(|&&x| x == c).count()
    }

    pub fn all_red(&self) -> bool {
        self.color.iter().all(|&c| c == Color::Red)
    }
}

/// Colors every vertex with respect to a dominated set `N[D]`.
pub fn colors(g: &Graph, dominated: &VertexSet) -> ResidualView {
    let n = g.n();
    let mut color = Vec::with_capacity(n);
    for v in 0..n {
        let c = if !dominated.contains(v) {
            Color::White
        } else if g.closed_rows()[v].is_subset_of(dominated) {
            Color::Red
        } else {
            Color::Blue
        };
        color.push(c);
    }
    let mut white_deg = vec![0u32; n];
    let mut blue_deg = vec![0u32; n];
    let mut residual_deg = vec![0u32; n];
    for v in 0..n {
        match color[v] {
            Color::Red => {}
            Color::White | Color::Blue => {
                let mut wd = 0u32;
                let mut bd = 0u32;
                for u in g.neighbors(v).iter() {
                    match color[u] {
                        Color::White => wd += 1,
                        Color::Blue => bd += 1,
                        Color::Red => {}
                    }
                }
                white_deg[v] = wd;
                residual_deg[v] = match color[v] {
                    Color::White => {
                        blue_deg[v] = bd;
                        wd + bd
                    }
                    // Blue-blue edges are dropped from the residual graph.
                    _ => wd,
                };
            }
        }
    }
    ResidualView {
        color,
        white_deg,
        blue_deg,
        residual_deg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    #[test]
    fn colors_star_example() {
        // K1,3 with center 0; dominated = N[leaf 1] = {0, 1}.
        let g = star(3);
        let dominated = VertexSet::from_vertices(4, [0, 1]);
        let view = colors(&g, &dominated);
        assert_eq!(view.color[1], Color::Red);
        assert_eq!(view.color[0], Color::Blue);
        assert_eq!(view.white_deg[0], 2);
        assert_eq!(view.color[2], Color::White);
        assert_eq!(view.color[3], Color::White);
        assert_eq!(view.residual_deg[0], 2);
    }

    #[test]
    fn colors_empty_and_terminal() {
        let g = cycle(5);
        let fresh = colors(&g, &VertexSet::new(5));
        assert!(fresh.color.iter().all(|&c| c == Color::White));
        for v in 0..5 {
            assert_eq!(fresh.white_deg[v], g.degree(v));
        }
        let done = colors(&g, &VertexSet::full(5));
        assert!(done.all_red());
        assert!(done.residual_deg.iter().all(|&d| d == 0));
    }

    #[test]
    fn legal_moves_and_apply() {
        let g = path(3);
        let s = GameState::new(&g, Player::Dominator);
        assert_eq!(s.legal_moves().len(), 3);

        let after = s.apply_move(1).unwrap();
        assert!(after.is_over());
        assert!(after.legal_moves().is_empty());
        assert!(after.apply_move(0).is_err());
    }

    #[test]
    fn legal_moves_respect_red() {
        // K1,3, dominated = {leaf1, center}: red leaf 1 is illegal.
        let g = star(3);
        let s = GameState::from_dominated(
            &g,
            VertexSet::from_vertices(4, [0, 1]),
            Player::Dominator,
            1,
        );
        let legal: Vec<_> = s.legal_moves().iter().collect();
        assert_eq!(legal, vec![0, 2, 3]);
    }

    #[test]
    fn apply_move_c4() {
        let g = cycle(4);
        let s = GameState::new(&g, Player::Dominator).apply_move(0).unwrap();
        let view = s.residual();
        assert_eq!(view.color[0], Color::Red);
        assert_eq!(view.color[1], Color::Blue);
        assert_eq!(view.color[3], Color::Blue);
        assert_eq!(view.color[2], Color::White);
        assert_eq!(s.to_move(), Player::Staller);
    }

    #[test]
    fn is_over_examples() {
        let k5 = complete(5);
        let s = GameState::new(&k5, Player::Dominator);
        assert!(!s.is_over());
        assert!(s.apply_move(0).unwrap().is_over());

        let p2 = path(2);
        assert!(GameState::new(&p2, Player::Dominator)
            .apply_move(0)
            .unwrap()
            .is_over());
    }

    #[test]
    fn lemma_basic_along_random_play() {
        // Color monotonicity plus the two degree facts, along a fixed play.
        let g = petersen_like();
        let mut s = GameState::new(&g, Player::Dominator);
        let mut prev = s.residual();
        while !s.is_over() {
            let v = s.legal_moves().iter().next().unwrap();
            s = s.apply_move(v).unwrap();
            let view = s.residual();
            for u in 0..g.n() {
                match (prev.color[u], view.color[u]) {
                    (Color::Blue, Color::White) | (Color::Red, Color::White) | (Color::Red, Color::Blue) => {
                        panic!("color moved backwards at {u}")
                    }
                    _ => {}
                }
                match view.color[u] {
                    Color::White => assert_eq!(view.residual_deg[u], g.degree(u)),
                    Color::Blue => assert!(view.white_deg[u] >= 1),
                    Color::Red => assert_eq!(view.residual_deg[u], 0),
                }
            }
            prev = view;
        }
    }

    fn petersen_like() -> crate::graph::Graph {
        crate::graph::petersen()
    }
}
