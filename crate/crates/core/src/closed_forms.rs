//! Closed-form values of both measures for the named families, and upper
//! bounds for joins.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilySpec;

/// An exact value, or an integer interval where only bounds are known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClosedFormValue {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
}

impl ClosedFormValue {
    pub fn exact(value: usize) -> Self {
        ClosedFormValue::Exact { value }
    }

    pub fn interval(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        ClosedFormValue::Interval { lo, hi }
    }

    pub fn lo(&self) -> usize {
        match *self {
            ClosedFormValue::Exact { value } => value,
            ClosedFormValue::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> usize {
        match *self {
            ClosedFormValue::Exact { value } => value,
            ClosedFormValue::Interval { hi, .. } => hi,
        }
    }

    pub fn value(&self) -> Option<usize> {
        match *self {
            ClosedFormValue::Exact { value } => Some(value),
            ClosedFormValue::Interval { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ClosedFormValue::Exact { .. })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo() <= v && v <= self.hi()
    }
}

impl fmt::Display for ClosedFormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClosedFormValue::Exact { value } => write!(f, "{value}"),
            ClosedFormValue::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
        }
    }
}

/// Closed-form values of both measures for one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub d1: ClosedFormValue,
    pub d2: ClosedFormValue,
}

impl ClosedForm {
    fn exact(d1: usize, d2: usize) -> Self {
        ClosedForm {
            d1: ClosedFormValue::exact(d1),
            d2: ClosedFormValue::exact(d2),
        }
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

pub fn closed_form_tree(n: usize) -> Result<ClosedForm> {
    require(n >= 1, || "tree requires n >= 1".into())?;
    Ok(ClosedForm::exact(1, 1 - n % 2))
}

/// Which branch of the complete-graph formula applies, with `a = ⌊√n⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompleteCase {
    /// `n = a² + 2t`, `0 <= t <= a`.
    EvenOffset,
    /// `n = a² + 1`.
    SquarePlusOne,
    /// `n = a² + 2t + 1`, `1 <= t <= a - 1`.
    OddOffset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteDerivation {
    pub n: usize,
    pub a: usize,
    pub case: CompleteCase,
    /// Number of vertices labelled 0 in a minimising labelling.
    pub k_star: usize,
}

/// `(n - 2k) + |(n - 2k)² - n| / 2` for a balance `d = n - 2k >= 0`.
fn complete_objective(n: usize, d: usize) -> usize {
    d + (d * d).abs_diff(n) / 2
}

pub fn closed_form_complete(n: usize) -> Result<(ClosedForm, CompleteDerivation)> {
    require(n >= 1, || "complete requires n >= 1".into())?;
    let a = n.isqrt();
    let offset = n - a * a;
    let (case, d1) = if offset % 2 == 0 {
        (CompleteCase::EvenOffset, a + offset / 2)
    } else if offset == 1 {
        (CompleteCase::SquarePlusOne, 2 * a - 1)
    } else {
        (CompleteCase::OddOffset, a + 1 + ((a + 1) * (a + 1) - n) / 2)
    };

    // Minimising balance d = n - 2k from each half of the objective.
    let ceil_root = if a * a == n { a } else { a + 1 };
    let match_parity = |d: usize, step_up: bool| {
        if d % 2 == n % 2 {
            Some(d)
        } else if step_up {
            Some(d + 1)
        } else {
            d.checked_sub(1)
        }
    };
    let above = match_parity(ceil_root, true).filter(|&d| d <= n);
    let below = if a * a == n {
        a.checked_sub(2)
    } else {
        match_parity(a, false)
    };
    let best = match (above, below) {
        (Some(x), Some(y)) if complete_objective(n, y) <= complete_objective(n, x) => y,
        (Some(x), _) => x,
        (None, Some(y)) => y,
        (None, None) => unreachable!("n >= 1 always has a candidate balance"),
    };
    if complete_objective(n, best) != d1 {
        return Err(Error::Defect(format!(
            "complete graph n={n}: minimiser n-2k={best} gives {} but the formula gives {d1}",
            complete_objective(n, best)
        )));
    }
    let deriv = CompleteDerivation {
        n,
        a,
        case,
        k_star: (n - best) / 2,
    };
    Ok((ClosedForm::exact(d1, n / 2), deriv))
}

/// Which branch of the multipartite first-measure bound applies, with
/// `(2a)² <= s < (2a+2)²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultipartiteCase {
    Square,
    /// `(2a)² < s < (2a+1)²`, `s` even.
    LowerEven,
    /// `(2a)² < s < (2a+1)²`, `s` odd.
    LowerOdd,
    /// `(2a+1)² < s < (2a+2)²`, `s` even.
    UpperEven,
    /// `(2a+1)² < s < (2a+2)²`, `s` odd.
    UpperOdd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteDerivation {
    pub parts: Vec<usize>,
    /// Number of odd parts.
    pub s: usize,
    pub a: usize,
    /// `⌊s/2⌋`.
    pub q: usize,
    pub case: MultipartiteCase,
    /// Upper bound of the applicable case (equals `√s` when `s` is square).
    pub case_bound: usize,
    /// Per-part balance `nᵢ - 2kᵢ` of the first-measure witness.
    pub d_vector: Vec<i64>,
    /// Per-part count of 0-labels of the first-measure witness.
    pub k_vector: Vec<usize>,
    /// Per-part balance of the second-measure witness.
    pub d2_d_vector: Vec<i64>,
    /// Per-part count of 0-labels of the second-measure witness.
    pub d2_k_vector: Vec<usize>,
}

/// Value of the first measure for a labelling with per-part balances `d`:
/// `|Σd| + |(Σd)² - Σd²| / 2`.
pub fn multipartite_objective(d: &[i64]) -> usize {
    let sum: i64 = d.iter().sum();
    let squares: i64 = d.iter().map(|x| x * x).sum();
    sum.unsigned_abs() as usize + (sum * sum - squares).unsigned_abs() as usize / 2
}

pub fn closed_form_multipartite(parts: &[usize]) -> Result<(ClosedForm, MultipartiteDerivation)> {
    require(!parts.is_empty(), || "multipartite requires at least one part".into())?;
    require(!parts.contains(&0), || "multipartite parts must all be >= 1".into())?;
    let s = parts.iter().filter(|&&p| p % 2 == 1).count();
    let root = s.isqrt();
    let a = root / 2;
    let q = s / 2;

    let (case, case_bound) = if root * root == s {
        (MultipartiteCase::Square, root)
    } else {
        let sq = |x: usize| x * x;
        let lower = s < sq(2 * a + 1);
        // (2a - 1)² with a = 0 is 1.
        let odd_below = sq((2 * a).abs_diff(1));
        match (lower, s % 2 == 0) {
            (true, true) => (MultipartiteCase::LowerEven, (s + 1 - odd_below) / 2),
            (true, false) => (MultipartiteCase::LowerOdd, (s + 1 - sq((2 * a).saturating_sub(2))) / 2),
            (false, true) => (MultipartiteCase::UpperEven, (s + 1 - odd_below) / 2),
            (false, false) => (MultipartiteCase::UpperOdd, (s + 1 - sq(2 * a)) / 2),
        }
    };

    // First-measure witness: the first ⌈(s - ⌊√s⌋)/2⌉ odd parts get balance -1,
    // the other odd parts +1, even parts 0.
    let negatives = (s - root).div_ceil(2);
    let mut d_vector = Vec::with_capacity(parts.len());
    let mut d2_d_vector = Vec::with_capacity(parts.len());
    let mut odd_seen = 0;
    for &p in parts {
        if p % 2 == 0 {
            d_vector.push(0);
            d2_d_vector.push(0);
        } else {
            odd_seen += 1;
            d_vector.push(if odd_seen <= negatives { -1 } else { 1 });
            // kᵢ = ⌊nᵢ/2⌋ for the first q odd parts, ⌊nᵢ/2⌋ + 1 after.
            d2_d_vector.push(if odd_seen <= q { 1 } else { -1 });
        }
    }
    let to_k = |d: &[i64]| -> Vec<usize> {
        parts
            .iter()
            .zip(d)
            .map(|(&p, &di)| ((p as i64 - di) / 2) as usize)
            .collect()
    };
    let k_vector = to_k(&d_vector);
    let d2_k_vector = to_k(&d2_d_vector);

    let witness_value = multipartite_objective(&d_vector);
    if witness_value != case_bound {
        return Err(Error::Defect(format!(
            "multipartite {parts:?}: witness value {witness_value} differs from case bound {case_bound}"
        )));
    }

    let d1 = if case == MultipartiteCase::Square {
        ClosedFormValue::exact(root)
    } else {
        ClosedFormValue::interval(root, case_bound.min(3 * root))
    };
    let deriv = MultipartiteDerivation {
        parts: parts.to_vec(),
        s,
        a,
        q,
        case,
        case_bound,
        d_vector,
        k_vector,
        d2_d_vector,
        d2_k_vector,
    };
    Ok((
        ClosedForm {
            d1,
            d2: ClosedFormValue::exact(q),
        },
        deriv,
    ))
}

pub fn closed_form_cycle(n: usize) -> Result<ClosedForm> {
    require(n >= 3, || format!("cycle requires n >= 3, got {n}"))?;
    Ok(match n % 4 {
        0 => ClosedForm::exact(0, 0),
        2 => ClosedForm::exact(2, 2),
        _ => ClosedForm::exact(2, 1),
    })
}

pub fn closed_form_wheel(n: usize) -> Result<ClosedForm> {
    require(n >= 4, || format!("wheel requires n >= 4, got {n}"))?;
    Ok(match n % 4 {
        0 => ClosedForm::exact(2, 2),
        2 => ClosedForm::exact(0, 0),
        _ => ClosedForm::exact(1, 0),
    })
}

pub fn closed_form_fan(m: usize, n: usize) -> Result<ClosedForm> {
    require(m >= 1 && n >= 1, || format!("fan requires m >= 1 and n >= 1, got m={m}, n={n}"))?;
    let d1 = if m % 2 == 1 && n % 2 == 0 { 2 } else { 1 };
    let d2 = if m % 2 == 0 && n % 2 == 1 { 0 } else { 1 };
    Ok(ClosedForm::exact(d1, d2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JoinBounds {
    pub d1_upper: usize,
    pub d2_upper: usize,
}

/// Upper bounds for a join from the measures of its two sides:
/// `D1 <= D1₁·D1₂ + D1₁ + D1₂` and `D2 <= D2₁ + D2₂ + 1`.
pub fn join_upper_bounds(d1_g1: usize, d1_g2: usize, d2_g1: usize, d2_g2: usize) -> JoinBounds {
    JoinBounds {
        d1_upper: d1_g1 * d1_g2 + d1_g1 + d1_g2,
        d2_upper: d2_g1 + d2_g2 + 1,
    }
}

/// As [`join_upper_bounds`], but the `+1` in the second bound is only added
/// when both sides have odd order; with an even side the balanced pairing
/// gives `D2₁ + D2₂`.
pub fn join_upper_bounds_strict(
    d1_g1: usize,
    d1_g2: usize,
    d2_g1: usize,
    d2_g2: usize,
    n1: usize,
    n2: usize,
) -> JoinBounds {
    let mut b = join_upper_bounds(d1_g1, d1_g2, d2_g1, d2_g2);
    if n1 % 2 == 0 || n2 % 2 == 0 {
        b.d2_upper -= 1;
    }
    b
}

/// Closed-form values for any family. Joins get `[0, bound]` intervals built
/// from the upper ends of their sides.
pub fn closed_form(spec: &FamilySpec) -> Result<ClosedForm> {
    spec.validate()?;
    match spec {
        FamilySpec::Path { n } => closed_form_tree(*n),
        FamilySpec::Cycle { n } => closed_form_cycle(*n),
        FamilySpec::Complete { n } => closed_form_complete(*n).map(|(c, _)| c),
        FamilySpec::Star { n } => closed_form_multipartite(&[1, *n]).map(|(c, _)| c),
        FamilySpec::Multipartite { parts } => closed_form_multipartite(parts).map(|(c, _)| c),
        FamilySpec::Wheel { n } => closed_form_wheel(*n),
        FamilySpec::Fan { m, n } => closed_form_fan(*m, *n),
        FamilySpec::Join(a, b) => {
            let (ca, cb) = (closed_form(a)?, closed_form(b)?);
            let bounds = join_upper_bounds(ca.d1.hi(), cb.d1.hi(), ca.d2.hi(), cb.d2.hi());
            Ok(ClosedForm {
                d1: ClosedFormValue::interval(0, bounds.d1_upper),
                d2: ClosedFormValue::interval(0, bounds.d2_upper),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(c: ClosedForm) -> (usize, usize) {
        (c.d1.value().unwrap(), c.d2.value().unwrap())
    }

    #[test]
    fn trees() {
        assert_eq!(pair(closed_form_tree(7).unwrap()), (1, 0));
        assert_eq!(pair(closed_form_tree(2).unwrap()), (1, 1));
        assert_eq!(pair(closed_form_tree(1).unwrap()), (1, 0));
        assert!(closed_form_tree(0).is_err());
    }

    #[test]
    fn complete_examples() {
        assert_eq!(pair(closed_form_complete(10).unwrap().0), (5, 5));
        assert_eq!(pair(closed_form_complete(12).unwrap().0), (6, 6));
        assert_eq!(pair(closed_form_complete(9).unwrap().0), (3, 4));
        assert!(closed_form_complete(0).is_err());
    }

    #[test]
    fn complete_matches_balance_enumeration() {
        // min over k of |n-2k| + |C(k,2) + C(n-k,2) - k(n-k)|, computed directly.
        let choose2 = |x: i64| x * (x - 1) / 2;
        for n in 1..=200usize {
            let ni = n as i64;
            let brute = (0..=ni)
                .map(|k| (ni - 2 * k).abs() + (choose2(k) + choose2(ni - k) - k * (ni - k)).abs())
                .min()
                .unwrap() as usize;
            let (cf, deriv) = closed_form_complete(n).unwrap();
            assert_eq!(cf.d1.value(), Some(brute), "n={n}");
            let k = deriv.k_star as i64;
            let at_k = (ni - 2 * k).abs() + (choose2(k) + choose2(ni - k) - k * (ni - k)).abs();
            assert_eq!(at_k as usize, brute, "k_star for n={n}");
        }
    }

    #[test]
    fn complete_tie_prefers_lower_balance() {
        // n = a² + 3 ties between the two halves; the smaller balance wins.
        for a in 2..10usize {
            let n = a * a + 3;
            let (_, deriv) = closed_form_complete(n).unwrap();
            assert_eq!(n - 2 * deriv.k_star, a - 1, "n={n}");
            assert_eq!(deriv.case, CompleteCase::OddOffset);
        }
    }

    #[test]
    fn multipartite_examples() {
        let (c, _) = closed_form_multipartite(&[3, 3, 3, 3]).unwrap();
        assert_eq!(pair(c), (2, 2));
        let (c, d) = closed_form_multipartite(&[1, 1, 1]).unwrap();
        assert_eq!(c.d1, ClosedFormValue::interval(1, 2));
        assert_eq!(c.d2, ClosedFormValue::exact(1));
        assert_eq!(d.case, MultipartiteCase::UpperOdd);
        let (c, _) = closed_form_multipartite(&[2, 4]).unwrap();
        assert_eq!(pair(c), (0, 0));
        let (c, _) = closed_form_multipartite(&[1; 6]).unwrap();
        assert_eq!(c.d1, ClosedFormValue::interval(2, 3));
        assert_eq!(c.d2, ClosedFormValue::exact(3));
        assert!(closed_form_multipartite(&[]).is_err());
        assert!(closed_form_multipartite(&[1, 0]).is_err());
    }

    #[test]
    fn multipartite_second_witness() {
        let (_, d) = closed_form_multipartite(&[3, 5, 2]).unwrap();
        assert_eq!((d.s, d.q), (2, 1));
        assert_eq!(d.d2_k_vector, vec![1, 3, 1]);
        assert_eq!(d.d2_d_vector.iter().sum::<i64>().unsigned_abs() as usize, d.s % 2);
    }

    #[test]
    fn multipartite_derivation_invariants() {
        for s in 0..=200usize {
            let parts: Vec<usize> = (0..s).map(|i| 2 * (i % 3) + 1).chain([2, 4]).collect();
            let (c, d) = closed_form_multipartite(&parts).unwrap();
            assert_eq!(d.s, s);
            assert!((2 * d.a).pow(2) <= s && s < (2 * d.a + 2).pow(2));
            assert!(c.d1.lo() <= c.d1.hi());
            assert!(d.case_bound <= 3 * s.isqrt() || d.case == MultipartiteCase::Square);
            for ((&p, &di), &ki) in parts.iter().zip(&d.d_vector).zip(&d.k_vector) {
                assert!(di.unsigned_abs() as usize <= p);
                assert_eq!((p as i64 - di).rem_euclid(2), 0);
                assert_eq!(p as i64 - 2 * ki as i64, di);
            }
            let sum: i64 = d.d2_d_vector.iter().sum();
            assert_eq!(sum.unsigned_abs() as usize, s % 2);
            assert_eq!(multipartite_objective(&d.d_vector), d.case_bound);
        }
    }

    #[test]
    fn cordial_iff_at_most_three_odd_parts() {
        for s in 0..20usize {
            let parts = vec![1; s.max(1)];
            let (c, d) = closed_form_multipartite(&parts).unwrap();
            assert_eq!(c.d2.value().unwrap() <= 1, d.s <= 3);
        }
    }

    #[test]
    fn cycles_wheels_fans() {
        assert_eq!(pair(closed_form_cycle(8).unwrap()), (0, 0));
        assert_eq!(pair(closed_form_cycle(5).unwrap()), (2, 1));
        assert_eq!(pair(closed_form_cycle(6).unwrap()), (2, 2));
        assert!(closed_form_cycle(2).is_err());
        assert_eq!(pair(closed_form_wheel(6).unwrap()), (0, 0));
        assert_eq!(pair(closed_form_wheel(9).unwrap()), (1, 0));
        assert_eq!(pair(closed_form_wheel(8).unwrap()), (2, 2));
        assert!(closed_form_wheel(3).is_err());
        assert_eq!(pair(closed_form_fan(1, 2).unwrap()), (2, 1));
        assert_eq!(pair(closed_form_fan(2, 1).unwrap()), (1, 0));
        assert_eq!(pair(closed_form_fan(2, 2).unwrap()), (1, 1));
        assert!(closed_form_fan(0, 1).is_err());
        assert!(closed_form_fan(1, 0).is_err());
    }

    #[test]
    fn cross_family_coherence() {
        assert_eq!(closed_form_wheel(4).unwrap(), closed_form_complete(4).unwrap().0);
        assert_eq!(closed_form_fan(1, 2).unwrap(), closed_form_complete(3).unwrap().0);
        assert_eq!(closed_form_fan(2, 1).unwrap(), closed_form_tree(3).unwrap());
        for n in 1..=16 {
            let (complete, _) = closed_form_complete(n).unwrap();
            let (multi, _) = closed_form_multipartite(&vec![1; n]).unwrap();
            assert!(multi.d1.contains(complete.d1.value().unwrap()), "n={n}");
            assert_eq!(multi.d2, complete.d2, "n={n}");
            if multi.d1.is_exact() {
                assert_eq!(multi.d1, complete.d1, "n={n}");
            }
        }
    }

    #[test]
    fn join_bounds() {
        assert_eq!(join_upper_bounds(2, 2, 1, 1), JoinBounds { d1_upper: 8, d2_upper: 3 });
        for x in 0..10 {
            assert_eq!(join_upper_bounds(0, x, 0, 0).d1_upper, x);
        }
        assert_eq!(join_upper_bounds_strict(2, 2, 1, 1, 3, 3).d2_upper, 3);
        assert_eq!(join_upper_bounds_strict(2, 2, 1, 1, 4, 3).d2_upper, 2);
    }

    #[test]
    fn join_closed_form_is_an_interval() {
        let spec = FamilySpec::Join(
            Box::new(FamilySpec::Complete { n: 3 }),
            Box::new(FamilySpec::Complete { n: 3 }),
        );
        let c = closed_form(&spec).unwrap();
        assert_eq!(c.d1, ClosedFormValue::interval(0, 8));
        assert_eq!(c.d2, ClosedFormValue::interval(0, 3));
    }
}
