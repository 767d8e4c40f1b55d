//! The bound catalogue: exact rational upper bounds on game length for
//! each strategy family, plus the logarithmic bound with certified
//! (outward-rounded) rational enclosures of ln.

use crate::error::{Error, Result};
use crate::scheme::Params;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Which bound a game length is compared against. The Staller-start
/// variants subtract a family-specific constant before dividing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFamily {
    /// 2n/3 on any isolate-free graph.
    General23,
    /// 34n/61, minimum degree 3.
    Deg3,
    /// (34n - 27)/61 for Staller-start games, minimum degree 3.
    Deg3StallerStart,
    /// a(d)·n / s(d), minimum degree >= d >= 4.
    MinDeg(i64),
    /// (a(d)·n - c(d)) / s(d) for Staller-start games.
    MinDegStallerStart(i64),
    /// Strict bound 2(1 + ln(δ+1))/(δ+1) · n, minimum degree δ >= 2.
    LogBound(i64),
}

impl BoundFamily {
    pub fn name(&self) -> String {
        match self {
            BoundFamily::General23 => "general-2/3".into(),
            BoundFamily::Deg3 => "deg3".into(),
            BoundFamily::Deg3StallerStart => "deg3-staller-start".into(),
            BoundFamily::MinDeg(d) => format!("mindeg{d}"),
            BoundFamily::MinDegStallerStart(d) => format!("mindeg{d}-staller-start"),
            BoundFamily::LogBound(delta) => format!("log-delta{delta}"),
        }
    }

    /// Minimum degree the bound's theorem requires.
    pub fn min_degree_required(&self) -> i64 {
        match self {
            BoundFamily::General23 => 1,
            BoundFamily::Deg3 | BoundFamily::Deg3StallerStart => 3,
            BoundFamily::MinDeg(d) | BoundFamily::MinDegStallerStart(d) => *d,
            BoundFamily::LogBound(delta) => *delta,
        }
    }
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The Staller-start correction constant of the MinDeg family,
/// 30d^5 - 227d^4 + 637d^3 - 786d^2 + 360d.
pub fn staller_start_constant(d: i64) -> i64 {
    30 * d.pow(5) - 227 * d.pow(4) + 637 * d.pow(3) - 786 * d.pow(2) + 360 * d
}

/// Exact rational value of the bound at order `n`. For `LogBound` the
/// result is a certified upper enclosure of the (irrational) bound; the
/// comparison against it stays strict and therefore sound.
pub fn bound_value(family: BoundFamily, n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::ParamDomain("bound_value needs n >= 1".into()));
    }
    let n_rat = BigRational::from(BigInt::from(n));
    match family {
        BoundFamily::General23 => Ok(rat(2, 3) * n_rat),
        BoundFamily::Deg3 => Ok(rat(34, 61) * n_rat),
        BoundFamily::Deg3StallerStart => Ok((rat(34, 1) * n_rat - rat(27, 1)) / rat(61, 1)),
        BoundFamily::MinDeg(d) => {
            let p = Params::new(d)?;
            Ok(rat(p.a, p.s) * n_rat)
        }
        BoundFamily::MinDegStallerStart(d) => {
            let p = Params::new(d)?;
            let c = staller_start_constant(d);
            Ok((rat(p.a, 1) * n_rat - rat(c, 1)) / rat(p.s, 1))
        }
        BoundFamily::LogBound(delta) => {
            let (_, hi) = log_coeff_interval(delta)?;
            Ok(hi * n_rat)
        }
    }
}

/// Largest game length consistent with the bound: floor of the value for
/// the non-strict polynomial bounds, and the largest integer strictly
/// below the certified lower enclosure for `LogBound`.
pub fn bound_floor(family: BoundFamily, n: usize) -> Result<i64> {
    let v = match family {
        BoundFamily::LogBound(delta) => {
            let (lo, _) = log_coeff_interval(delta)?;
            let v = lo * BigRational::from(BigInt::from(n));
            return Ok(strict_floor(&v));
        }
        _ => bound_value(family, n)?,
    };
    Ok(v.floor().to_integer().to_i64().expect("bound fits in i64"))
}

fn strict_floor(v: &BigRational) -> i64 {
    let f = v.floor();
    let f_int = f.to_integer().to_i64().expect("bound fits in i64");
    if &f == v {
        f_int - 1
    } else {
        f_int
    }
}

/// Does a game of `len` turns respect the bound at order `n`?
pub fn check_length(family: BoundFamily, n: usize, len: u32) -> Result<bool> {
    Ok((len as i64) <= bound_floor(family, n)?)
}

// ---- certified natural logarithm ---------------------------------------

/// Number of series terms; the enclosure width is below (1/3)^(2J) which
/// is far tighter than any comparison made here needs.
const LN_TERMS: u32 = 40;

/// Rational enclosure of atanh(z) for 0 <= z <= 1/2, from the odd power
/// series with an explicit geometric tail bound.
fn atanh_interval(z: &BigRational) -> (BigRational, BigRational) {
    assert!(!z.is_negative() && z < &rat(1, 2));
    let z2 = z * z;
    let mut term = z.clone(); // z^(2j+1)
    let mut sum = BigRational::zero();
    for j in 0..LN_TERMS {
        sum += &term / BigRational::from(BigInt::from(2 * j + 1));
        term *= &z2;
    }
    // Tail: sum_{j>=J} z^(2j+1)/(2j+1) <= z^(2J+1) / ((2J+1)(1 - z^2)).
    let tail = &term
        / (BigRational::from(BigInt::from(2 * LN_TERMS + 1)) * (BigRational::one() - &z2));
    (sum.clone(), sum + tail)
}

fn ln2_interval() -> (BigRational, BigRational) {
    // ln 2 = 2 atanh(1/3).
    let (lo, hi) = atanh_interval(&rat(1, 3));
    (lo * rat(2, 1), hi * rat(2, 1))
}

/// Rational enclosure of ln(x) for rational x >= 1, by halving into
/// [1, 2) and summing the atanh series: ln x = k ln 2 + 2 atanh((m-1)/(m+1)).
pub fn ln_interval(x: &BigRational) -> Result<(BigRational, BigRational)> {
    if x < &BigRational::one() {
        return Err(Error::ParamDomain("ln_interval needs x >= 1".into()));
    }
    let two = rat(2, 1);
    let mut m = x.clone();
    let mut k = 0u32;
    while m >= two {
        m /= &two;
        k += 1;
    }
    let z = (&m - BigRational::one()) / (&m + BigRational::one());
    let (alo, ahi) = atanh_interval(&z);
    let (l2lo, l2hi) = ln2_interval();
    let k_rat = BigRational::from(BigInt::from(k));
    Ok((
        alo * &two + &k_rat * l2lo,
        ahi * two + k_rat * l2hi,
    ))
}

/// Enclosure of the logarithmic bound's coefficient 2(1 + ln(δ+1))/(δ+1).
pub fn log_coeff_interval(delta: i64) -> Result<(BigRational, BigRational)> {
    if delta < 2 {
        return Err(Error::ParamDomain(format!(
            "log bound needs minimum degree >= 2, got {delta}"
        )));
    }
    let (lo, hi) = ln_interval(&rat(delta + 1, 1))?;
    let scale = rat(2, delta + 1);
    Ok((
        &scale * (BigRational::one() + lo),
        scale * (BigRational::one() + hi),
    ))
}

// ---- coefficient comparison --------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    PolynomialWins,
    LogWins,
    Indecisive,
}

#[derive(Clone, Debug)]
pub struct CompareRow {
    pub d: i64,
    /// a(d)/s(d) in lowest terms, or 34/61 at d = 3.
    pub poly: BigRational,
    pub log_lo: BigRational,
    pub log_hi: BigRational,
    pub verdict: Verdict,
}

/// Per-degree coefficient of the polynomial family at minimum degree d.
pub fn poly_coeff(d: i64) -> Result<BigRational> {
    if d == 3 {
        Ok(rat(34, 61))
    } else {
        let p = Params::new(d)?;
        Ok(rat(p.a, p.s))
    }
}

/// Compares the polynomial and logarithmic per-vertex coefficients for
/// every d in `[lo, hi]`. Verdicts are emitted only when the certified
/// enclosure separates the two; otherwise the row is `Indecisive`.
pub fn compare_bounds(lo: i64, hi: i64) -> Result<Vec<CompareRow>> {
    if lo < 3 || hi > 64 || lo > hi {
        return Err(Error::ParamDomain(format!(
            "degree range {lo}..={hi} outside [3, 64]"
        )));
    }
    let mut rows = Vec::new();
    for d in lo..=hi {
        let poly = poly_coeff(d)?;
        let (log_lo, log_hi) = log_coeff_interval(d)?;
        let verdict = if poly < log_lo {
            Verdict::PolynomialWins
        } else if poly > log_hi {
            Verdict::LogWins
        } else {
            Verdict::Indecisive
        };
        rows.push(CompareRow {
            d,
            poly,
            log_lo,
            log_hi,
            verdict,
        });
    }
    Ok(rows)
}
