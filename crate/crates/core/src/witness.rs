//! Explicit labellings attaining the closed-form values.

use crate::closed_forms::{closed_form, closed_form_complete, closed_form_multipartite};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::labelling::{stats, Labelling};
use crate::tree::tree_optimal_labelling;

/// Constructed labellings for both measures. Where one construction serves
/// both, the two fields are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyWitness {
    /// Attains the first measure (for non-square multipartite graphs, its upper bound).
    pub d1: Labelling,
    /// Friendly, and attains the second measure.
    pub d2: Labelling,
}

impl FamilyWitness {
    fn same(f: Labelling) -> Self {
        FamilyWitness { d1: f.clone(), d2: f }
    }
}

/// The repeating 0,0,1,1 cycle labelling: vertex `i` (0-based) gets 0 iff
/// `i mod 4` is 0 or 1. Consecutive edges then alternate 0,1,0,1.
pub fn cycle_pattern(n: usize) -> Labelling {
    Labelling::from_bits((0..n).map(|i| i % 4 >= 2))
}

/// Cycle witness; for `n ≡ 2 (mod 4)` the last vertex is relabelled 1, which
/// balances the vertices without changing either edge count.
pub fn cycle_labelling(n: usize) -> Labelling {
    let mut f = cycle_pattern(n);
    if n % 4 == 2 {
        f.set(n - 1, true);
    }
    f
}

/// Rim carries the unmodified cycle pattern, hub labelled 1.
pub fn wheel_labelling(n: usize) -> Labelling {
    let rim = cycle_pattern(n - 1);
    Labelling::from_bits(rim.iter().chain([true]))
}

/// Path vertex `vᵢ` (1-based) gets 0 iff `i mod 4` is 0 or 1; the first
/// `⌊m/2⌋` independent vertices get 0 and the last `⌊m/2⌋` get 1. For odd `m`
/// the middle vertex gets 0 when `n mod 4` is 0 or 3, otherwise 1.
pub fn fan_labelling(m: usize, n: usize) -> Labelling {
    let path = (1..=n).map(|i| matches!(i % 4, 2 | 3));
    let middle = m.div_ceil(2);
    let independent = (1..=m).map(|i| {
        if i <= m / 2 {
            false
        } else if i > middle {
            true
        } else {
            matches!(n % 4, 1 | 2)
        }
    });
    Labelling::from_bits(path.chain(independent))
}

/// Within each block, the first `kᵢ` vertices are labelled 0 and the rest 1.
fn block_labelling(parts: &[usize], zeros: &[usize]) -> Labelling {
    Labelling::from_bits(
        parts
            .iter()
            .zip(zeros)
            .flat_map(|(&p, &k)| (0..p).map(move |j| j >= k)),
    )
}

fn complete_witness(n: usize) -> Result<FamilyWitness> {
    let (_, deriv) = closed_form_complete(n)?;
    let first_k = |k: usize| Labelling::from_bits((0..n).map(|i| i >= k));
    Ok(FamilyWitness {
        d1: first_k(deriv.k_star),
        d2: first_k(n / 2),
    })
}

fn multipartite_witness(parts: &[usize]) -> Result<FamilyWitness> {
    let (_, deriv) = closed_form_multipartite(parts)?;
    Ok(FamilyWitness {
        d1: block_labelling(parts, &deriv.k_vector),
        d2: block_labelling(parts, &deriv.d2_k_vector),
    })
}

fn concat(a: &Labelling, b: &Labelling) -> Labelling {
    Labelling::from_bits(a.iter().chain(b.iter()))
}

fn join_witness(a: &FamilySpec, b: &FamilySpec) -> Result<FamilyWitness> {
    let wa = construct_witness(a)?;
    let wb = construct_witness(b)?;
    let d1 = concat(&wa.d1, &wb.d1);
    let (mut fa, mut fb) = (wa.d2, wb.d2);
    if a.order() % 2 == 1 && b.order() % 2 == 1 {
        // Orient the two odd sides with opposite vertex surpluses.
        let sa = stats(&generate(a)?, &fa)?;
        let sb = stats(&generate(b)?, &fb)?;
        if sa.v_diff() < 0 {
            fa = fa.complement();
        }
        if sb.v_diff() > 0 {
            fb = fb.complement();
        }
    }
    Ok(FamilyWitness {
        d1,
        d2: concat(&fa, &fb),
    })
}

/// Builds the explicit labellings for `spec` and checks them against the
/// closed-form values on the generated graph.
pub fn construct_witness(spec: &FamilySpec) -> Result<FamilyWitness> {
    spec.validate()?;
    let witness = match spec {
        FamilySpec::Path { n } => {
            let g = generate(spec)?;
            debug_assert_eq!(g.n(), *n);
            FamilyWitness::same(tree_optimal_labelling(&g)?)
        }
        FamilySpec::Cycle { n } => FamilyWitness::same(cycle_labelling(*n)),
        FamilySpec::Wheel { n } => FamilyWitness::same(wheel_labelling(*n)),
        FamilySpec::Fan { m, n } => FamilyWitness::same(fan_labelling(*m, *n)),
        FamilySpec::Complete { n } => complete_witness(*n)?,
        FamilySpec::Star { n } => multipartite_witness(&[1, *n])?,
        FamilySpec::Multipartite { parts } => multipartite_witness(parts)?,
        FamilySpec::Join(a, b) => join_witness(a, b)?,
    };

    let g = generate(spec)?;
    let cf = closed_form(spec)?;
    let s1 = stats(&g, &witness.d1)?;
    let s2 = stats(&g, &witness.d2)?;
    let d1_ok = match cf.d1.value() {
        Some(v) => s1.total() == v,
        None => s1.total() <= cf.d1.hi(),
    };
    let d2_ok = s2.is_friendly()
        && match cf.d2.value() {
            Some(v) => s2.delta_e == v,
            None => s2.delta_e <= cf.d2.hi(),
        };
    if !d1_ok || !d2_ok {
        return Err(Error::Defect(format!(
            "{spec}: witnesses give (Δv+Δe = {}, Δv = {}, Δe = {}) against closed form ({}, {})",
            s1.total(),
            s2.delta_v,
            s2.delta_e,
            cf.d1,
            cf.d2
        )));
    }
    Ok(witness)
}
