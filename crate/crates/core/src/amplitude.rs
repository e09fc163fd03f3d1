//! Transition amplitudes between Gelfand–Tsetlin patterns on adjacent levels.
//!
//! A transition adds one letter `k` to a standard Weyl tableau. In pattern form the
//! levels below `k` are untouched and every level `j ≥ k` gains a single box, in row
//! `τ_j`. Two independent routes produce the amplitude: Louck's product formula for
//! any `d`, and a four-case closed form for `d = 2`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AmplitudeError;
use crate::radical::Radical;
use crate::tableaux::{interlacing_violation, GtPattern};

/// The data Louck's formula needs about one transition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionContext {
    pub lower: GtPattern,
    pub upper: GtPattern,
    /// Letter added, `1..=d`.
    pub k: usize,
    /// `tau[j - k]` is the 1-based row that grows at level `j`.
    pub tau: Vec<usize>,
}

impl TransitionContext {
    /// `τ_j` for `k ≤ j ≤ d`.
    pub fn tau(&self, j: usize) -> usize {
        self.tau[j - self.k]
    }
}

/// `p_{i,j} = m_{i,j} + j - i`.
pub fn partial_hook(pattern: &GtPattern, i: usize, j: usize) -> Result<i64, AmplitudeError> {
    let d = pattern.d();
    if i == 0 || i > j || j > d {
        return Err(AmplitudeError::HookIndex { i, j, d });
    }
    Ok(i64::from(pattern.entry(i, j)) + j as i64 - i as i64)
}

fn hook(pattern: &GtPattern, i: usize, j: usize) -> i64 {
    i64::from(pattern.entry(i, j)) + j as i64 - i as i64
}

/// Reads off `k` and the `τ_j` for a candidate transition `lower → upper`.
pub fn transition_context(lower: &GtPattern, upper: &GtPattern) -> Result<TransitionContext, AmplitudeError> {
    let d = lower.d();
    if upper.d() != d {
        return Err(AmplitudeError::NotAnEdge(format!("patterns have {d} and {} levels", upper.d())));
    }
    let k = (1..=d)
        .find(|&j| lower.level(j) != upper.level(j))
        .ok_or_else(|| AmplitudeError::NotAnEdge("patterns are identical".into()))?;
    let mut tau = Vec::with_capacity(d - k + 1);
    for j in k..=d {
        let mut grown = None;
        for (i, (&a, &b)) in lower.level(j).iter().zip(upper.level(j)).enumerate() {
            if a == b {
                continue;
            }
            if b != a + 1 || grown.is_some() {
                return Err(AmplitudeError::NotAnEdge(format!("level {j} does not gain exactly one box")));
            }
            grown = Some(i + 1);
        }
        let row = grown.ok_or_else(|| AmplitudeError::NotAnEdge(format!("level {j} does not gain a box")))?;
        tau.push(row);
    }
    Ok(TransitionContext { lower: lower.clone(), upper: upper.clone(), k, tau })
}

/// Louck's amplitude for `lower → upper`, with every partial hook taken on `lower`.
///
/// The product over `j = k+1..=d` carries the sign `sgn(τ_{j-1} - τ_j)` with
/// `sgn(0) = +1`; the level-`k` quotient is omitted when `k = 1`.
pub fn louck_amplitude(lower: &GtPattern, upper: &GtPattern) -> Result<Radical, AmplitudeError> {
    let ctx = transition_context(lower, upper)?;
    let d = lower.d();
    let k = ctx.k;
    let p = |i: usize, j: usize| hook(lower, i, j);

    let mut negative = false;
    let mut num = BigInt::one();
    let mut den = BigInt::one();

    for j in (k + 1)..=d {
        let prev = ctx.tau(j - 1);
        let cur = ctx.tau(j);
        if prev < cur {
            negative = !negative;
        }
        for i in (1..j).filter(|&i| i != prev) {
            num *= p(cur, j) - p(i, j - 1);
            den *= p(prev, j - 1) - p(i, j - 1) + 1;
        }
        for i in (1..=j).filter(|&i| i != cur) {
            num *= p(prev, j - 1) - p(i, j) + 1;
            den *= p(cur, j) - p(i, j);
        }
    }
    if k > 1 {
        let top = ctx.tau(k);
        for i in 1..k {
            num *= p(top, k) - p(i, k - 1);
        }
        for i in (1..=k).filter(|&i| i != top) {
            den *= p(top, k) - p(i, k);
        }
    }
    if den.is_zero() {
        return Err(AmplitudeError::DivisionByZero);
    }
    let sign = if negative { Sign::Minus } else { Sign::Plus };
    Ok(Radical::signed_sqrt(sign, &magnitude(&num), &magnitude(&den)))
}

fn magnitude(v: &BigInt) -> BigUint {
    v.abs().to_biguint().expect("absolute value is nonnegative")
}

/// Which closed-form case a `d = 2` transition falls under.
///
/// Rules 3 and 4 shift every entry down by the length of the second row and then
/// defer to Rules 1 and 2; the reported rule is the one applied after the shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternRule {
    /// First row grows, letter `2` added.
    Rule1a,
    /// First row grows, letter `1` added.
    Rule1b,
    /// Second row grows, letter `2` added.
    Rule2a,
    /// Second row grows, letter `1` added.
    Rule2b,
}

/// Classification of a `d = 2` transition: the base rule, the shift applied before it
/// (zero for Rules 1 and 2 proper), and the reduced `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternCase {
    pub rule: PatternRule,
    pub shift: u32,
    pub n: u32,
    pub m11: u32,
}

impl PatternCase {
    /// Name in the Weyl-tableau statement: Rule 3 and Rule 4 when a shift was needed.
    pub fn outer_rule(&self) -> u8 {
        match (self.rule, self.shift) {
            (PatternRule::Rule1a | PatternRule::Rule1b, 0) => 1,
            (PatternRule::Rule2a | PatternRule::Rule2b, 0) => 2,
            (PatternRule::Rule1a | PatternRule::Rule1b, _) => 3,
            _ => 4,
        }
    }
}

/// Classifies a `d = 2` transition into the pattern-rule case it falls under.
pub fn classify_d2(lower: &GtPattern, upper: &GtPattern) -> Result<PatternCase, AmplitudeError> {
    if lower.d() != 2 || upper.d() != 2 {
        return Err(AmplitudeError::WrongDimension(lower.d()));
    }
    transition_context(lower, upper)?;
    let (a, b) = (lower.entry(1, 2), lower.entry(2, 2));
    let same_m11 = lower.entry(1, 1) == upper.entry(1, 1);
    // Subtracting b from every entry reduces the lower top row to (a - b, 0).
    let shift = b;
    let m11 = upper.entry(1, 1) - shift;
    let first_row_grows = upper.entry(1, 2) == a + 1;
    let (rule, n) = if first_row_grows {
        (if same_m11 { PatternRule::Rule1a } else { PatternRule::Rule1b }, a - b + 1)
    } else {
        (if same_m11 { PatternRule::Rule2a } else { PatternRule::Rule2b }, a - b + 1)
    };
    Ok(PatternCase { rule, shift, n, m11 })
}

/// The `d = 2` closed form.
pub fn pattern_amplitude_d2(lower: &GtPattern, upper: &GtPattern) -> Result<Radical, AmplitudeError> {
    let case = classify_d2(lower, upper)?;
    let (n, m) = (u64::from(case.n), u64::from(case.m11));
    Ok(match case.rule {
        PatternRule::Rule1a => Radical::signed_sqrt_u64(1, n - m, n),
        PatternRule::Rule1b => Radical::signed_sqrt_u64(1, m, n),
        PatternRule::Rule2a => Radical::signed_sqrt_u64(1, m, n),
        PatternRule::Rule2b => Radical::signed_sqrt_u64(-1, n - m, n),
    })
}

/// How edge amplitudes are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AmplitudeEngine {
    /// Louck's formula, any `d`.
    #[default]
    Louck,
    /// Closed-form rules, `d = 2` only.
    PatternD2,
    /// Both, failing on any disagreement.
    BothVerify,
}

impl AmplitudeEngine {
    pub fn amplitude(&self, lower: &GtPattern, upper: &GtPattern) -> Result<Radical, AmplitudeError> {
        match self {
            AmplitudeEngine::Louck => louck_amplitude(lower, upper),
            AmplitudeEngine::PatternD2 => pattern_amplitude_d2(lower, upper),
            AmplitudeEngine::BothVerify => {
                let louck = louck_amplitude(lower, upper)?;
                let pattern = pattern_amplitude_d2(lower, upper)?;
                if louck != pattern {
                    return Err(AmplitudeError::EngineMismatch {
                        louck: louck.to_string(),
                        pattern: pattern.to_string(),
                    });
                }
                Ok(louck)
            }
        }
    }

    /// Rejects engines that cannot serve dimension `d`.
    pub fn check_dimension(&self, d: usize) -> Result<(), AmplitudeError> {
        match self {
            AmplitudeEngine::Louck => Ok(()),
            _ if d == 2 => Ok(()),
            _ => Err(AmplitudeError::WrongDimension(d)),
        }
    }
}

/// Source of edge amplitudes: computed on demand or looked up in a prebuilt graph.
pub trait EdgeAmplitudes: Sync {
    fn edge_amplitude(&self, lower: &GtPattern, upper: &GtPattern) -> Result<Radical, AmplitudeError>;
}

impl EdgeAmplitudes for AmplitudeEngine {
    fn edge_amplitude(&self, lower: &GtPattern, upper: &GtPattern) -> Result<Radical, AmplitudeError> {
        self.amplitude(lower, upper)
    }
}

/// Patterns reachable from `lower` by inserting letter `k`, each with its `τ` vector
/// (`tau[j - k] = τ_j`). Ordered by `τ` lexicographically.
pub fn insertions(lower: &GtPattern, k: usize) -> Vec<(GtPattern, Vec<usize>)> {
    step_patterns(lower, k, None, 1)
}

/// Patterns obtained from `upper` by removing letter `k`; `top_row` pins `τ_d` (1-based).
pub fn removals(upper: &GtPattern, k: usize, top_row: Option<usize>) -> Vec<(GtPattern, Vec<usize>)> {
    step_patterns(upper, k, top_row, -1)
}

fn step_patterns(start: &GtPattern, k: usize, top_row: Option<usize>, delta: i64) -> Vec<(GtPattern, Vec<usize>)> {
    let d = start.d();
    let mut out = Vec::new();
    if k == 0 || k > d {
        return out;
    }
    let mut levels = start.levels().to_vec();
    let mut tau = Vec::with_capacity(d - k + 1);

    #[allow(clippy::too_many_arguments)]
    fn go(
        j: usize,
        d: usize,
        top_row: Option<usize>,
        delta: i64,
        start: &GtPattern,
        levels: &mut Vec<Vec<u32>>,
        tau: &mut Vec<usize>,
        out: &mut Vec<(GtPattern, Vec<usize>)>,
    ) {
        if j > d {
            out.push((GtPattern::from_levels_unchecked(levels.clone()), tau.clone()));
            return;
        }
        for row in 1..=j {
            if j == d && top_row.is_some_and(|r| r != row) {
                continue;
            }
            let old = start.entry(row, j);
            let new = i64::from(old) + delta;
            if new < 0 {
                continue;
            }
            levels[j - 1][row - 1] = new as u32;
            let ok_below = j == 1 || interlacing_violation(&levels[j - 1], &levels[j - 2]).is_none();
            let ok_row = levels[j - 1].windows(2).all(|w| w[0] >= w[1]);
            if ok_below && ok_row {
                tau.push(row);
                go(j + 1, d, top_row, delta, start, levels, tau, out);
                tau.pop();
            }
            levels[j - 1][row - 1] = old;
        }
    }

    go(k, d, top_row, delta, start, &mut levels, &mut tau, &mut out);
    out
}
