//! Symbolic filtrations with cardinal multiplicities.
//!
//! Index sets enter only through their cardinality: a finite count or an
//! aleph ℵ_k. Sorting and merging work over a validated system's
//! [`ExtPattern`] alone; the pattern already guarantees the Ext vanishing
//! that licenses each swap at arbitrary cardinality, so no concrete
//! splittings are computed here.

use crate::hsys::ExtPattern;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Aleph indices are capped; cardinal arithmetic beyond this fragment is out
/// of scope.
pub const MAX_ALEPH_INDEX: u32 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymbError {
    #[error("unknown omega label: {0}")]
    UnknownOmega(String),
    #[error("aleph index {0} exceeds the supported bound {MAX_ALEPH_INDEX}")]
    AlephOutOfRange(u32),
    #[error("zero multiplicity is not a filtration step")]
    ZeroMultiplicity,
    #[error("steps are not sorted descending")]
    NotSorted,
    #[error("illegal swap: pattern allows Ext¹(Δ_{upper}, Δ_{lower}) ≠ 0")]
    IllegalSwap { upper: String, lower: String },
}

/// A cardinal in normalized form: a finite count or ℵ_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cardinal {
    Finite(u64),
    Aleph(u32),
}

impl Cardinal {
    pub fn aleph(k: u32) -> Result<Self, SymbError> {
        if k > MAX_ALEPH_INDEX {
            return Err(SymbError::AlephOutOfRange(k));
        }
        Ok(Cardinal::Aleph(k))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Cardinal::Finite(0))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }
}

impl std::fmt::Display for Cardinal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Aleph(k) => write!(f, "aleph_{k}"),
        }
    }
}

/// Cardinal addition: finite+finite sums, a finite summand is absorbed by
/// any aleph, and two alephs take the larger index.
pub fn card_add(a: Cardinal, b: Cardinal) -> Cardinal {
    match (a, b) {
        (Cardinal::Finite(x), Cardinal::Finite(y)) => Cardinal::Finite(x + y),
        (Cardinal::Aleph(k), Cardinal::Finite(_)) | (Cardinal::Finite(_), Cardinal::Aleph(k)) => {
            Cardinal::Aleph(k)
        }
        (Cardinal::Aleph(j), Cardinal::Aleph(k)) => Cardinal::Aleph(j.max(k)),
    }
}

/// A slim filtration reduced to its factor data: (ω, cardinal) steps,
/// bottom-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicFiltration {
    steps: Vec<(usize, Cardinal)>,
}

impl SymbolicFiltration {
    /// Steps as (omega index, cardinal); zero multiplicities are rejected.
    pub fn new(pattern: &ExtPattern, steps: Vec<(usize, Cardinal)>) -> Result<Self, SymbError> {
        for &(omega, card) in &steps {
            if omega >= pattern.omega_count() {
                return Err(SymbError::UnknownOmega(format!("index {omega}")));
            }
            if card.is_zero() {
                return Err(SymbError::ZeroMultiplicity);
            }
            if let Cardinal::Aleph(k) = card {
                if k > MAX_ALEPH_INDEX {
                    return Err(SymbError::AlephOutOfRange(k));
                }
            }
        }
        Ok(SymbolicFiltration { steps })
    }

    pub fn steps(&self) -> &[(usize, Cardinal)] {
        &self.steps
    }

    pub fn class_sequence(&self, pattern: &ExtPattern) -> Vec<usize> {
        self.steps
            .iter()
            .map(|&(o, _)| pattern.class_of(o))
            .collect()
    }
}

/// ℓ_ω at cardinal level: the cardinal sum of the multiplicities per ω.
pub fn symb_ell(f: &SymbolicFiltration) -> std::collections::BTreeMap<usize, Cardinal> {
    let mut out = std::collections::BTreeMap::new();
    for &(omega, card) in &f.steps {
        out.entry(omega)
            .and_modify(|c| *c = card_add(*c, card))
            .or_insert(card);
    }
    out
}

/// Sorts the steps to descending class rank by adjacent swaps, re-checking at
/// each swap that the pattern forbids the obstructing Ext. Multiplicities
/// ride along unchanged, so ℓ is preserved by construction.
pub fn symb_sort(
    pattern: &ExtPattern,
    f: &SymbolicFiltration,
) -> Result<SymbolicFiltration, SymbError> {
    let mut steps = f.steps.clone();
    let rank = |omega: usize| pattern.rank_of_omega(omega);
    loop {
        let mut swapped = false;
        for j in 0..steps.len().saturating_sub(1) {
            if rank(steps[j].0) < rank(steps[j + 1].0) {
                if pattern.ext_nonzero[steps[j + 1].0][steps[j].0] {
                    return Err(SymbError::IllegalSwap {
                        upper: pattern.omega[steps[j + 1].0].clone(),
                        lower: pattern.omega[steps[j].0].clone(),
                    });
                }
                steps.swap(j, j + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Ok(SymbolicFiltration { steps })
}

/// An ordered layer at cardinal level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicLayer {
    pub class: usize,
    pub factors: Vec<(usize, Cardinal)>,
}

/// Coalesces adjacent equal-class steps of a sorted symbolic filtration,
/// adding cardinals for repeated ω.
pub fn symb_merge(
    pattern: &ExtPattern,
    f: &SymbolicFiltration,
) -> Result<Vec<SymbolicLayer>, SymbError> {
    let ranks: Vec<usize> = f.steps.iter().map(|&(o, _)| pattern.rank_of_omega(o)).collect();
    if ranks.windows(2).any(|w| w[0] < w[1]) {
        return Err(SymbError::NotSorted);
    }
    let mut layers: Vec<SymbolicLayer> = Vec::new();
    for &(omega, card) in &f.steps {
        let class = pattern.class_of(omega);
        match layers.last_mut() {
            Some(layer) if layer.class == class => {
                match layer.factors.iter_mut().find(|(o, _)| *o == omega) {
                    Some((_, c)) => *c = card_add(*c, card),
                    None => layer.factors.push((omega, card)),
                }
            }
            _ => layers.push(SymbolicLayer {
                class,
                factors: vec![(omega, card)],
            }),
        }
    }
    for layer in &mut layers {
        layer.factors.sort_by_key(|&(o, _)| o);
    }
    Ok(layers)
}
