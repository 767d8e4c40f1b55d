//! Seeded corpus generators: graphs meeting the minimum-degree
//! preconditions the strategy families require.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenModel {
    /// Stub pairing rejected until simple: yields a delta-regular graph.
    RegularPairing,
    /// Random edges added to low-degree vertices until every degree
    /// reaches delta: yields min degree >= delta, degrees uneven.
    DegreeFloorRepair,
}

impl GenModel {
    pub fn name(&self) -> &'static str {
        match self {
            GenModel::RegularPairing => "regular-pairing",
            GenModel::DegreeFloorRepair => "degree-floor-repair",
        }
    }
}

const PAIRING_RETRIES: usize = 2000;

/// Generates a simple graph on `n` vertices with minimum degree at least
/// `delta`, reproducibly from `seed`.
pub fn gen_min_degree_graph(n: usize, delta: usize, model: GenModel, seed: u64) -> Result<Graph> {
    if n == 0 || delta >= n {
        return Err(Error::Infeasible(format!(
            "no simple graph on {n} vertices has minimum degree {delta}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match model {
        GenModel::RegularPairing => {
            if !(n * delta).is_multiple_of(2) {
                return Err(Error::Infeasible(format!(
                    "{n} * {delta} is odd: no {delta}-regular graph on {n} vertices"
                )));
            }
            for _ in 0..PAIRING_RETRIES {
                if let Some(g) = try_pairing(n, delta, &mut rng)? {
                    return Ok(g);
                }
            }
            Err(Error::RetriesExhausted(PAIRING_RETRIES))
        }
        GenModel::DegreeFloorRepair => repair(n, delta, &mut rng),
    }
}

/// One configuration-model draw; `None` when the pairing produced a loop
/// or parallel edge.
fn try_pairing(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Result<Option<Graph>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, delta)).collect();
    stubs.shuffle(rng);
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    for pair in stubs.chunks(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return Ok(None);
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Ok(None);
        }
        edges.push(key);
    }
    Ok(Some(Graph::from_edge_list(n, &edges)?))
}

fn repair(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    loop {
        let deficient: Vec<usize> = (0..n).filter(|&v| adj[v].len() < delta).collect();
        if deficient.is_empty() {
            break;
        }
        for v in deficient {
            while adj[v].len() < delta {
                let u = rng.gen_range(0..n);
                if u != v && !adj[v].contains(&u) {
                    adj[v].insert(u);
                    adj[u].insert(v);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (v, nbrs) in adj.iter().enumerate() {
        for &u in nbrs {
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}
