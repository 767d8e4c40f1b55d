//! Value assignments: per-color (and per blue-degree-class) vertex values,
//! the degree-parameterized coefficient polynomials, potentials and gains.
//!
//! All arithmetic is exact integer arithmetic; bound comparisons elsewhere
//! use rationals, never floats.

use crate::error::{Error, Result};
use crate::game::{Color, GameState, ResidualView};
use crate::graph::Graph;
use serde::Serialize;

/// The six degree polynomials for the minimum-degree-d family, evaluated
/// exactly, plus the strict inequality chain they must satisfy:
/// 0 < x1 < x2 < x3 < b−x1−x2−x3 < b < a and x3 < a−b.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Params {
    pub d: i64,
    pub a: i64,
    pub b: i64,
    pub x1: i64,
    pub x2: i64,
    pub x3: i64,
    pub s: i64,
}

impl Params {
    pub fn new(d: i64) -> Result<Params> {
        if d < 4 {
            return Err(Error::ParamDomain(format!("d = {d}, need d >= 4")));
        }
        let p = Params {
            d,
            a: 30 * d.pow(4) - 56 * d.pow(3) - 258 * d.pow(2) + 708 * d - 432,
            b: 111 * d.pow(3) - 561 * d.pow(2) + 888 * d - 432,
            x1: 6 * d.pow(3) - 19 * d.pow(2) + 15 * d,
            x2: 15 * d.pow(3) - 64 * d.pow(2) + 65 * d,
            x3: 30 * d.pow(3) - 144 * d.pow(2) + 202 * d - 72,
            s: 90 * d.pow(4) - 390 * d.pow(3) + 348 * d.pow(2) + 348 * d - 432,
        };
        if !p.chain_holds() {
            return Err(Error::ParamDomain(format!(
                "inequality chain violated at d = {d}: {p:?}"
            )));
        }
        Ok(p)
    }

    pub fn chain_holds(&self) -> bool {
        let rest = self.b - self.x1 - self.x2 - self.x3;
        0 < self.x1
            && self.x1 < self.x2
            && self.x2 < self.x3
            && self.x3 < rest
            && rest < self.b
            && self.b < self.a
            && self.x3 < self.a - self.b
    }
}

/// Which strategy family the Dominator is playing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// The 2/1/0 assignment behind the 2n/3 bound; any isolate-free graph.
    TwoThirds,
    /// The 34/16/13/10/9 assignments behind 34n/61; needs δ ≥ 3.
    Deg3,
    /// The polynomial assignments behind a·n/s; needs δ ≥ d ≥ 4.
    MinDeg(Params),
}

impl Family {
    pub fn min_deg(d: i64) -> Result<Family> {
        Ok(Family::MinDeg(Params::new(d)?))
    }

    /// MinDeg(δ) when δ ≥ 4, Deg3 when δ = 3, otherwise TwoThirds.
    pub fn auto(g: &Graph) -> Result<Family> {
        let delta = g.min_degree() as i64;
        if delta >= 4 {
            Family::min_deg(delta)
        } else if delta == 3 {
            Ok(Family::Deg3)
        } else {
            Ok(Family::TwoThirds)
        }
    }

    pub fn stage_count(&self) -> u8 {
        match self {
            Family::TwoThirds => 1,
            Family::Deg3 => 3,
            Family::MinDeg(_) => 4,
        }
    }

    pub fn stage(&self, stage: u8) -> Scheme {
        assert!(stage >= 1 && stage <= self.stage_count());
        Scheme { family: *self, stage }
    }

    pub fn first_scheme(&self) -> Scheme {
        self.stage(1)
    }

    pub fn name(&self) -> String {
        match self {
            Family::TwoThirds => "two-thirds".into(),
            Family::Deg3 => "deg3".into(),
            Family::MinDeg(p) => format!("mindeg{}", p.d),
        }
    }

    /// Checks the precondition the family's theorem places on the graph.
    pub fn check_applicable(&self, g: &Graph) -> Result<()> {
        let delta = g.min_degree() as i64;
        let need = match self {
            Family::TwoThirds => 1,
            Family::Deg3 => 3,
            Family::MinDeg(p) => p.d,
        };
        if delta < need {
            return Err(Error::FamilyPrecondition(format!(
                "family {} needs min degree >= {need}, graph has delta = {delta}",
                self.name()
            )));
        }
        Ok(())
    }
}

/// One value-assignment stage within a family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Scheme {
    pub family: Family,
    pub stage: u8,
}

impl Scheme {
    pub fn white_value(&self) -> i64 {
        match self.family {
            Family::TwoThirds => 2,
            Family::Deg3 => 34,
            Family::MinDeg(p) => p.a,
        }
    }

    /// Table entry for a vertex of the given color; blue vertices are
    /// classed by their residual degree (their white-neighbor count).
    pub fn vertex_value(&self, color: Color, residual_deg: u32) -> Result<i64> {
        match color {
            Color::Red => Ok(0),
            Color::White => Ok(self.white_value()),
            Color::Blue => self.blue_value(residual_deg),
        }
    }

    fn blue_value(&self, deg: u32) -> Result<i64> {
        debug_assert!(deg >= 1, "blue vertex with no white neighbor");
        let inapplicable = |class: &str| {
            Err(Error::StageInapplicable(format!(
                "class {class} undefined in stage {} of family {}",
                self.stage,
                self.family.name()
            )))
        };
        match self.family {
            Family::TwoThirds => Ok(1),
            Family::Deg3 => match (self.stage, deg) {
                (1, _) => Ok(16),
                (2, d) if d >= 3 => Ok(16),
                (2, 2) => Ok(13),
                (2, _) => Ok(10),
                (3, d) if d >= 3 => inapplicable("B>=3"),
                (3, 2) => Ok(13),
                (3, _) => Ok(9),
                _ => unreachable!(),
            },
            Family::MinDeg(p) => match (self.stage, deg) {
                (1, _) => Ok(p.b),
                (2, d) if d >= 4 => Ok(p.b),
                (2, 3) => Ok(p.b - p.x1),
                (2, 2) => Ok(p.b - 2 * p.x1),
                (2, _) => Ok(p.b - 3 * p.x1),
                (3, d) if d >= 4 => inapplicable("B4"),
                (3, 3) => Ok(p.b - p.x1),
                (3, 2) => Ok(p.b - p.x1 - p.x2),
                (3, _) => Ok(p.b - p.x1 - 2 * p.x2),
                (4, d) if d >= 3 => inapplicable("B>=3"),
                (4, 2) => Ok(p.b - p.x1 - p.x2),
                (4, _) => Ok(p.b - p.x1 - p.x2 - p.x3),
                _ => unreachable!(),
            },
        }
    }

    /// Serializable description of the stage's value table, for docs/CLI.
    pub fn table_json(&self) -> serde_json::Value {
        let mut classes = serde_json::Map::new();
        classes.insert("W".into(), self.white_value().into());
        for deg in 1..=4u32 {
            let key = format!("B{deg}");
            match self.blue_value(deg) {
                Ok(v) => classes.insert(key, v.into()),
                Err(_) => classes.insert(key, serde_json::Value::Null),
            };
        }
        classes.insert("R".into(), 0.into());
        serde_json::json!({
            "family": self.family.name(),
            "stage": self.stage,
            "values": classes,
        })
    }
}

/// Sum of vertex values of the residual view under `scheme`.
pub fn potential_of_view(view: &ResidualView, scheme: Scheme) -> Result<i64> {
    let mut p = 0i64;
    for v in 0..view.color.len() {
        p += scheme.vertex_value(view.color[v], view.residual_deg[v])?;
    }
    Ok(p)
}

pub fn potential(s: &GameState<'_>, scheme: Scheme) -> Result<i64> {
    potential_of_view(&s.residual(), scheme)
}

/// Decrease in potential caused by playing `v`; positive for every legal move.
pub fn gain(s: &GameState<'_>, scheme: Scheme, v: usize) -> Result<i64> {
    let after = s.apply_move(v)?;
    Ok(potential(s, scheme)? - potential(&after, scheme)?)
}

/// Legal vertex of maximum gain; ties break to the smallest vertex id.
pub fn max_gain(s: &GameState<'_>, scheme: Scheme) -> Result<(usize, i64)> {
    let before = potential(s, scheme)?;
    let mut best: Option<(usize, i64)> = None;
    for v in s.legal_moves().iter() {
        let g = before - potential(&s.apply_move(v)?, scheme)?;
        if best.is_none_or(|(_, bg)| g > bg) {
            best = Some((v, g));
        }
    }
    best.ok_or(Error::GameOver)
}

/// Legal vertex of minimum gain; ties break to the smallest vertex id.
pub fn min_gain(s: &GameState<'_>, scheme: Scheme) -> Result<(usize, i64)> {
    let before = potential(s, scheme)?;
    let mut best: Option<(usize, i64)> = None;
    for v in s.legal_moves().iter() {
        let g = before - potential(&s.apply_move(v)?, scheme)?;
        if best.is_none_or(|(_, bg)| g < bg) {
            best = Some((v, g));
        }
    }
    best.ok_or(Error::GameOver)
}

/// Potential drop caused by replacing `from` with the later stage `to`
/// of the same family; never negative on a reachable state.
pub fn switch_drop(s: &GameState<'_>, from: Scheme, to: Scheme) -> Result<i64> {
    assert_eq!(from.family, to.family, "switch within one family only");
    assert!(to.stage > from.stage, "switch must move to a later stage");
    Ok(potential(s, from)? - potential(s, to)?)
}
