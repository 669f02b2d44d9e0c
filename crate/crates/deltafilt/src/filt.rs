//! Concrete Δ̃-filtrations: validation, slim refinement, Ext-driven sorting,
//! ordered filtrations, uniqueness, multiplicity invariants ℓ_ω, and
//! direct-summand splitting via traces.
//!
//! A filtration of M is a strictly increasing chain of submodules from 0 to M
//! whose successive quotients are direct sums of copies of the system's Δ_ω.
//! Slim means one ω per step. Sorting bubbles adjacent out-of-order steps by
//! splitting the middle extension (the Ext direction the axioms forbid is
//! exactly the one a swap needs to vanish) and taking the preimage of the
//! complement. Merging adjacent equal classes yields the ordered filtration,
//! which is unique for the module; uniqueness and ℓ-invariance are theorems
//! here re-run as checks.

use crate::gfmat::MatError;
use crate::hsys::{ExtPattern, HomologicalSystem, HsysError};
use crate::preord::{Linearization, PreordError};
use crate::qrep::{
    decompose_grouped, image_submodule, isomorphism, preimage, quotient_rep_full,
    split_retraction, submodule_rep, trace, Hom, IsoVerdict, QrepError, Representation,
    SearchLimits, SubRep, Submodule,
};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FiltError {
    #[error("nesting violation: {0}")]
    NestingViolation(String),
    #[error("step {step}: a quotient summand with dims {dims:?} matches no Δ_ω")]
    FactorNotInDelta { step: usize, dims: Vec<usize> },
    #[error("step {step}: claimed factors do not match the computed decomposition")]
    FactorClaimMismatch { step: usize },
    #[error("filtration is not sorted descending")]
    NotSorted,
    #[error("filtrations have different underlying modules")]
    ModuleMismatch,
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("endomorphism is not idempotent")]
    NotIdempotent,
    #[error("trace sum mismatch: {0}")]
    TraceSumMismatch(String),
    #[error("split failed (this contradicts HS4): {0}")]
    SplitFailed(String),
    #[error(transparent)]
    Hsys(#[from] HsysError),
    #[error(transparent)]
    Qrep(#[from] QrepError),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Preord(#[from] PreordError),
}

/// Multiplicities ℓ_ω keyed by omega index; absent means zero.
pub type MultiplicityMap = BTreeMap<usize, usize>;

pub fn ell_add(a: &MultiplicityMap, b: &MultiplicityMap) -> MultiplicityMap {
    let mut out = a.clone();
    for (&k, &v) in b {
        *out.entry(k).or_insert(0) += v;
    }
    out
}

/// A raw Δ̃-filtration: the module, a strictly increasing chain of submodules
/// whose last entry is the whole module (empty for the zero module), and
/// optionally the claimed factors per step.
#[derive(Debug, Clone)]
pub struct Filtration {
    pub module: Representation,
    pub chain: Vec<Submodule>,
    /// Claimed (omega index, multiplicity) lists per step; when absent,
    /// validation identifies the factors itself.
    pub factors: Option<Vec<Vec<(usize, usize)>>>,
}

impl Filtration {
    /// The one-step filtration 0 ⊂ M; factor identification is left to
    /// validation, so this is the auto-filtration for modules that are
    /// direct sums of Δ's.
    pub fn single_step(system: &HomologicalSystem, module: Representation) -> Filtration {
        let chain = if module.is_zero() {
            Vec::new()
        } else {
            vec![module.full_submodule(system.algebra())]
        };
        Filtration {
            module,
            chain,
            factors: None,
        }
    }
}

/// One validated step: the identified factors and the witnesses needed for
/// refinement.
#[derive(Debug, Clone)]
pub struct CheckedStep {
    /// Aggregated (omega, multiplicity), sorted by omega index.
    pub factors: Vec<(usize, usize)>,
    /// Witness embeddings Δ_ω → quotient, one group per omega.
    pub groups: Vec<StepGroup>,
    pub quotient: Representation,
    /// chain[j] as a representation with its inclusion into the module.
    pub sub: SubRep,
    /// Projection chain[j] → quotient (in the sub's coordinates).
    pub proj: Hom,
}

#[derive(Debug, Clone)]
pub struct StepGroup {
    pub omega: usize,
    /// One embedding Δ_ω → quotient per copy.
    pub copies: Vec<Hom>,
}

/// A validated filtration with witnessed factor identifications.
#[derive(Debug, Clone)]
pub struct CheckedFiltration {
    pub steps: Vec<CheckedStep>,
}

impl CheckedFiltration {
    pub fn ell(&self) -> MultiplicityMap {
        let mut out = MultiplicityMap::new();
        for step in &self.steps {
            for &(omega, mult) in &step.factors {
                *out.entry(omega).or_insert(0) += mult;
            }
        }
        out
    }
}

/// Submodule of `parent.rep` corresponding to `child ⊆ parent` (both
/// submodules of the same ambient module).
fn restrict_to_sub(
    system: &HomologicalSystem,
    parent: &SubRep,
    child: &Submodule,
) -> Result<Submodule, FiltError> {
    let alg = system.algebra();
    let mut spaces = Vec::new();
    for (v, s) in child.spaces().iter().enumerate() {
        let coords = parent
            .incl
            .mat(v)
            .solve(s.basis())?
            .ok_or_else(|| FiltError::NestingViolation(format!("not contained at vertex {v}")))?;
        spaces.push(coords.column_space());
    }
    Ok(Submodule::new(alg, &parent.rep, spaces)?)
}

/// Image of `sub` under the vertexwise maps of `via`, as a submodule of
/// `target`.
fn push_forward(
    system: &HomologicalSystem,
    target: &Representation,
    via: &Hom,
    sub: &Submodule,
) -> Result<Submodule, FiltError> {
    let alg = system.algebra();
    let spaces = sub
        .spaces()
        .iter()
        .enumerate()
        .map(|(v, s)| via.mat(v).mul(s.basis()).column_space())
        .collect();
    Ok(Submodule::new(alg, target, spaces)?)
}

/// Validates nesting, arrow closure, and factor isomorphisms. Factor
/// identification decomposes each step quotient and matches the summands to
/// the Δ's; claimed factors, when present, must agree.
pub fn validate_filtration(
    system: &HomologicalSystem,
    f: &Filtration,
) -> Result<CheckedFiltration, FiltError> {
    system.require_valid()?;
    let alg = system.algebra();
    let limits = SearchLimits::default();
    if let Some(claimed) = &f.factors {
        if claimed.len() != f.chain.len() {
            return Err(FiltError::NestingViolation(format!(
                "{} factor lists for {} steps",
                claimed.len(),
                f.chain.len()
            )));
        }
    }
    if f.module.is_zero() {
        if f.chain.is_empty() {
            return Ok(CheckedFiltration { steps: Vec::new() });
        }
        return Err(FiltError::NestingViolation(
            "zero module admits only the empty chain".into(),
        ));
    }
    if f.chain.is_empty() {
        return Err(FiltError::NestingViolation(
            "nonzero module needs a nonempty chain".into(),
        ));
    }
    // strict nesting from 0 up to the full module
    let mut prev_dim = 0usize;
    for (j, sub) in f.chain.iter().enumerate() {
        for (v, s) in sub.spaces().iter().enumerate() {
            if s.ambient_dim() != f.module.dim_at(v) {
                return Err(FiltError::NestingViolation(format!(
                    "step {j}: ambient dim {} at vertex {v}, module has {}",
                    s.ambient_dim(),
                    f.module.dim_at(v)
                )));
            }
        }
        if j > 0 && !f.chain[j - 1].is_contained_in(sub)? {
            return Err(FiltError::NestingViolation(format!(
                "step {j} does not contain step {}",
                j - 1
            )));
        }
        if sub.total_dim() <= prev_dim {
            return Err(FiltError::NestingViolation(format!(
                "step {j} does not strictly grow"
            )));
        }
        prev_dim = sub.total_dim();
    }
    if !f.chain.last().unwrap().is_full() {
        return Err(FiltError::NestingViolation(
            "chain does not end at the full module".into(),
        ));
    }
    let mut steps = Vec::with_capacity(f.chain.len());
    for j in 0..f.chain.len() {
        let sub = submodule_rep(alg, &f.module, &f.chain[j])?;
        let below = if j == 0 {
            sub.rep.zero_submodule(alg)
        } else {
            restrict_to_sub(system, &sub, &f.chain[j - 1])?
        };
        let (quotient, proj, _) = quotient_rep_full(alg, &sub.rep, &below)?;
        let (groups_raw, _certainty) = decompose_grouped(alg, &quotient, &limits)?;
        let mut groups: Vec<StepGroup> = Vec::new();
        for (rep, _mult, embeds) in groups_raw {
            let mut matched = None;
            for (oi, delta) in system.deltas().iter().enumerate() {
                if let IsoVerdict::Isomorphic(iso) = isomorphism(alg, delta, &rep, &limits) {
                    matched = Some((oi, iso));
                    break;
                }
            }
            let Some((omega, iso)) = matched else {
                return Err(FiltError::FactorNotInDelta {
                    step: j,
                    dims: rep.dims().to_vec(),
                });
            };
            let copies = embeds.iter().map(|e| e.compose(&iso)).collect();
            groups.push(StepGroup { omega, copies });
        }
        groups.sort_by_key(|g| g.omega);
        let factors: Vec<(usize, usize)> =
            groups.iter().map(|g| (g.omega, g.copies.len())).collect();
        if let Some(claimed) = &f.factors {
            let mut want = claimed[j].clone();
            want.sort();
            // aggregate duplicate omegas in the claim
            let mut agg: Vec<(usize, usize)> = Vec::new();
            for (o, m) in want {
                match agg.last_mut() {
                    Some((lo, lm)) if *lo == o => *lm += m,
                    _ => agg.push((o, m)),
                }
            }
            if agg != factors {
                return Err(FiltError::FactorClaimMismatch { step: j });
            }
        }
        steps.push(CheckedStep {
            factors,
            groups,
            quotient,
            sub,
            proj,
        });
    }
    Ok(CheckedFiltration { steps })
}

/// A slim filtration: one ω per step.
#[derive(Debug, Clone)]
pub struct SlimFiltration {
    pub module: Representation,
    pub chain: Vec<Submodule>,
    pub steps: Vec<SlimStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlimStep {
    pub omega: usize,
    pub mult: usize,
}

impl SlimFiltration {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// As a raw filtration with its factors claimed, for re-validation.
    pub fn as_filtration(&self) -> Filtration {
        Filtration {
            module: self.module.clone(),
            chain: self.chain.clone(),
            factors: Some(
                self.steps
                    .iter()
                    .map(|s| vec![(s.omega, s.mult)])
                    .collect(),
            ),
        }
    }
}

/// ℓ_ω of a slim filtration.
pub fn ell(f: &SlimFiltration) -> MultiplicityMap {
    let mut out = MultiplicityMap::new();
    for s in &f.steps {
        *out.entry(s.omega).or_insert(0) += s.mult;
    }
    out
}

/// The order vector: quotient classes of the slim steps, bottom-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderVector(pub Vec<usize>);

pub fn order_vector(pattern: &ExtPattern, f: &SlimFiltration) -> OrderVector {
    OrderVector(f.steps.iter().map(|s| pattern.class_of(s.omega)).collect())
}

/// Refines a validated filtration to a slim one by splitting each multi-ω
/// step along partial sums of its quotient decomposition (preimages under
/// the step projection). ℓ is preserved and re-asserted.
pub fn refine_to_slim(
    system: &HomologicalSystem,
    f: &Filtration,
) -> Result<SlimFiltration, FiltError> {
    let checked = validate_filtration(system, f)?;
    let alg = system.algebra();
    let mut chain: Vec<Submodule> = Vec::new();
    let mut steps: Vec<SlimStep> = Vec::new();
    for (j, step) in checked.steps.iter().enumerate() {
        let k = step.groups.len();
        // partial sums of the group images, in quotient coordinates
        let mut running = step.quotient.zero_submodule(alg);
        for (gi, group) in step.groups.iter().enumerate() {
            steps.push(SlimStep {
                omega: group.omega,
                mult: group.copies.len(),
            });
            if gi + 1 == k {
                chain.push(f.chain[j].clone());
                continue;
            }
            for copy in &group.copies {
                let img = image_submodule(alg, &step.quotient, copy)?;
                running = running.sum(&img)?;
            }
            // preimage in the subrep, then in module coordinates
            let pre = preimage(alg, &step.sub.rep, &step.proj, &running)?;
            chain.push(push_forward(system, &f.module, &step.sub.incl, &pre)?);
        }
    }
    let slim = SlimFiltration {
        module: f.module.clone(),
        chain,
        steps,
    };
    debug_assert_eq!(ell(&slim), checked.ell());
    Ok(slim)
}

/// Result of sorting, with the swap count for the quadratic bound check.
#[derive(Debug, Clone)]
pub struct SortedSlim {
    pub slim: SlimFiltration,
    pub swaps: usize,
    /// ℓ after every individual swap, asserted equal along the way.
    pub ell_trace: Vec<MultiplicityMap>,
}

/// Sorts a slim filtration to a descending order vector by adjacent swaps.
///
/// A swap at position j is legal because the classes are strictly increasing
/// there, so HS4 (through the pattern) forbids the Ext that would obstruct
/// splitting H_{j+1}/H_{j−1}; the new middle term is the preimage of the
/// complement produced by the split retraction.
pub fn sort_slim(
    system: &HomologicalSystem,
    f: &SlimFiltration,
) -> Result<SortedSlim, FiltError> {
    let pattern = system.ext_pattern()?;
    sort_slim_with_pattern(system, &pattern, f)
}

/// Same, under an explicit linearization of the quotient poset.
pub fn sort_slim_with(
    system: &HomologicalSystem,
    f: &SlimFiltration,
    lin: Linearization,
) -> Result<SortedSlim, FiltError> {
    let pattern = system.ext_pattern()?.with_linearization(lin)?;
    sort_slim_with_pattern(system, &pattern, f)
}

fn sort_slim_with_pattern(
    system: &HomologicalSystem,
    pattern: &ExtPattern,
    f: &SlimFiltration,
) -> Result<SortedSlim, FiltError> {
    let alg = system.algebra();
    let mut chain = f.chain.clone();
    let mut steps = f.steps.clone();
    let t = steps.len();
    let ell_before = ell(f);
    let mut swaps = 0usize;
    let mut ell_trace = Vec::new();
    loop {
        let mut swapped = false;
        for j in 0..t.saturating_sub(1) {
            let r_low = pattern.rank_of_omega(steps[j].omega);
            let r_high = pattern.rank_of_omega(steps[j + 1].omega);
            if r_low >= r_high {
                continue;
            }
            // the pattern must rule out Ext¹(Δ_{ω_{j+1}}, Δ_{ω_j})
            if pattern.ext_nonzero[steps[j + 1].omega][steps[j].omega] {
                return Err(FiltError::SplitFailed(format!(
                    "pattern allows Ext¹(Δ_{}, Δ_{}) ≠ 0 against the linearization",
                    pattern.omega[steps[j + 1].omega],
                    pattern.omega[steps[j].omega]
                )));
            }
            // work inside H_{j+1}/H_{j-1}
            let upper = submodule_rep(alg, &f.module, &chain[j + 1])?;
            let below = if j == 0 {
                upper.rep.zero_submodule(alg)
            } else {
                restrict_to_sub(system, &upper, &chain[j - 1])?
            };
            let (quot, proj, _) = quotient_rep_full(alg, &upper.rep, &below)?;
            let middle_in_upper = restrict_to_sub(system, &upper, &chain[j])?;
            let middle_image = push_forward(system, &quot, &proj, &middle_in_upper)?;
            let (_retraction, complement) = split_retraction(alg, &quot, &middle_image)
                .map_err(|e| FiltError::SplitFailed(e.to_string()))?;
            let pre = preimage(alg, &upper.rep, &proj, &complement)?;
            let new_middle = push_forward(system, &f.module, &upper.incl, &pre)?;
            // strict nesting of the replacement
            let below_dim = if j == 0 { 0 } else { chain[j - 1].total_dim() };
            if new_middle.total_dim() <= below_dim
                || new_middle.total_dim() >= chain[j + 1].total_dim()
            {
                return Err(FiltError::SplitFailed(
                    "complement preimage is not strictly between its neighbours".into(),
                ));
            }
            chain[j] = new_middle;
            steps.swap(j, j + 1);
            swaps += 1;
            let now = {
                let mut m = MultiplicityMap::new();
                for s in &steps {
                    *m.entry(s.omega).or_insert(0) += s.mult;
                }
                m
            };
            if now != ell_before {
                return Err(FiltError::SplitFailed("ℓ changed during a swap".into()));
            }
            ell_trace.push(now);
            swapped = true;
        }
        if !swapped {
            break;
        }
    }
    debug_assert!(swaps <= t * t.saturating_sub(1) / 2);
    Ok(SortedSlim {
        slim: SlimFiltration {
            module: f.module.clone(),
            chain,
            steps,
        },
        swaps,
        ell_trace,
    })
}

/// One layer of an ordered filtration: a quotient class, the cumulative
/// submodule up to this layer, and the per-ω factor content.
#[derive(Debug, Clone)]
pub struct Layer {
    pub class: usize,
    pub sub: Submodule,
    pub factors: Vec<(usize, usize)>,
}

/// The ordered filtration: layers bottom-up with strictly decreasing class
/// rank, i.e. the chain {0} ⊊ W_{u_a} ⊊ ⋯ ⊊ W_{u_1} = M with
/// u_1 ≺ u_2 ≺ ⋯ ≺ u_a.
#[derive(Debug, Clone)]
pub struct OrderedFiltration {
    pub module: Representation,
    pub layers: Vec<Layer>,
}

impl OrderedFiltration {
    pub fn class_sequence(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.class).collect()
    }

    pub fn ell(&self) -> MultiplicityMap {
        let mut out = MultiplicityMap::new();
        for layer in &self.layers {
            for &(omega, mult) in &layer.factors {
                *out.entry(omega).or_insert(0) += mult;
            }
        }
        out
    }

    /// Exact equality: same classes and the same submodule chains, subspace
    /// by subspace.
    pub fn same_chain_as(&self, other: &OrderedFiltration) -> bool {
        self.layers.len() == other.layers.len()
            && self
                .layers
                .iter()
                .zip(other.layers.iter())
                .all(|(a, b)| a.class == b.class && a.sub == b.sub)
    }
}

/// Coalesces consecutive equal-class steps of a sorted slim filtration into
/// layers. Errors with `NotSorted` when the order vector is not descending.
pub fn merge_to_ordered(
    pattern: &ExtPattern,
    f: &SlimFiltration,
) -> Result<OrderedFiltration, FiltError> {
    let ranks: Vec<usize> = f
        .steps
        .iter()
        .map(|s| pattern.rank_of_omega(s.omega))
        .collect();
    if ranks.windows(2).any(|w| w[0] < w[1]) {
        return Err(FiltError::NotSorted);
    }
    let mut layers: Vec<Layer> = Vec::new();
    for (i, step) in f.steps.iter().enumerate() {
        let class = pattern.class_of(step.omega);
        match layers.last_mut() {
            Some(layer) if layer.class == class => {
                layer.sub = f.chain[i].clone();
                match layer.factors.iter_mut().find(|(o, _)| *o == step.omega) {
                    Some((_, m)) => *m += step.mult,
                    None => layer.factors.push((step.omega, step.mult)),
                }
            }
            _ => layers.push(Layer {
                class,
                sub: f.chain[i].clone(),
                factors: vec![(step.omega, step.mult)],
            }),
        }
    }
    for layer in &mut layers {
        layer.factors.sort();
    }
    // classes strictly decrease in rank bottom-up
    debug_assert!(layers
        .windows(2)
        .all(|w| pattern.linearization.rank_of(w[0].class)
            > pattern.linearization.rank_of(w[1].class)));
    Ok(OrderedFiltration {
        module: f.module.clone(),
        layers,
    })
}

/// The full pipeline: validate → slim → sort → merge.
pub fn ordered_filtration(
    system: &HomologicalSystem,
    f: &Filtration,
) -> Result<OrderedFiltration, FiltError> {
    let pattern = system.ext_pattern()?;
    let slim = refine_to_slim(system, f)?;
    let sorted = sort_slim_with_pattern(system, &pattern, &slim)?;
    merge_to_ordered(&pattern, &sorted.slim)
}

/// The pipeline under an explicit linearization.
pub fn ordered_filtration_with(
    system: &HomologicalSystem,
    f: &Filtration,
    lin: Linearization,
) -> Result<OrderedFiltration, FiltError> {
    let pattern = system.ext_pattern()?.with_linearization(lin)?;
    let slim = refine_to_slim(system, f)?;
    let sorted = sort_slim_with_pattern(system, &pattern, &slim)?;
    merge_to_ordered(&pattern, &sorted.slim)
}

#[derive(Debug, Clone)]
pub struct UniquenessVerdict {
    pub chains_equal: bool,
    pub classes_equal: bool,
    pub ell_equal: bool,
    pub first: OrderedFiltration,
    pub second: OrderedFiltration,
}

impl UniquenessVerdict {
    pub fn is_unique(&self) -> bool {
        self.chains_equal && self.classes_equal && self.ell_equal
    }
}

/// Computes both ordered filtrations and compares them as exact subspace
/// chains, plus ℓ-invariance.
pub fn check_uniqueness(
    system: &HomologicalSystem,
    f1: &Filtration,
    f2: &Filtration,
) -> Result<UniquenessVerdict, FiltError> {
    if f1.module != f2.module {
        return Err(FiltError::ModuleMismatch);
    }
    let o1 = ordered_filtration(system, f1)?;
    let o2 = ordered_filtration(system, f2)?;
    Ok(UniquenessVerdict {
        chains_equal: o1.same_chain_as(&o2),
        classes_equal: o1.class_sequence() == o2.class_sequence(),
        ell_equal: o1.ell() == o2.ell(),
        first: o1,
        second: o2,
    })
}

/// A short exact sequence 0 → L → M → N → 0 given by its maps.
#[derive(Debug, Clone)]
pub struct ExactSequence {
    pub inclusion: Hom,
    pub projection: Hom,
}

#[derive(Debug, Clone)]
pub struct AdditivityVerdict {
    pub ell_l: MultiplicityMap,
    pub ell_m: MultiplicityMap,
    pub ell_n: MultiplicityMap,
    pub additive: bool,
}

/// Checks ℓ_ω(M) = ℓ_ω(L) + ℓ_ω(N) over an exact sequence. ℓ(M) comes from
/// `m_filt` when supplied, otherwise from the filtration induced by pushing
/// L's chain forward and pulling N's chain back, which validation then
/// re-identifies factor by factor.
#[allow(clippy::too_many_arguments)]
pub fn additivity_check(
    system: &HomologicalSystem,
    l_filt: &Filtration,
    m: &Representation,
    m_filt: Option<&Filtration>,
    n_filt: &Filtration,
    seq: &ExactSequence,
) -> Result<AdditivityVerdict, FiltError> {
    let alg = system.algebra();
    let l = &l_filt.module;
    let n = &n_filt.module;
    if !seq.inclusion.is_homomorphism(alg, l, m) {
        return Err(FiltError::NotExact("inclusion is not a homomorphism".into()));
    }
    if !seq.projection.is_homomorphism(alg, m, n) {
        return Err(FiltError::NotExact("projection is not a homomorphism".into()));
    }
    for v in 0..l.dims().len() {
        if seq.inclusion.mat(v).rank() != l.dim_at(v) {
            return Err(FiltError::NotExact(format!("inclusion not injective at vertex {v}")));
        }
        if seq.projection.mat(v).rank() != n.dim_at(v) {
            return Err(FiltError::NotExact(format!(
                "projection not surjective at vertex {v}"
            )));
        }
        let ker = seq.projection.mat(v).kernel_basis();
        let img = seq.inclusion.mat(v).column_space();
        if ker != img {
            return Err(FiltError::NotExact(format!(
                "kernel ≠ image at vertex {v}"
            )));
        }
    }
    let ell_l = validate_filtration(system, l_filt)?.ell();
    let ell_n = validate_filtration(system, n_filt)?.ell();
    let ell_m = match m_filt {
        Some(mf) => {
            if mf.module != *m {
                return Err(FiltError::ModuleMismatch);
            }
            validate_filtration(system, mf)?.ell()
        }
        None => {
            let mut chain: Vec<Submodule> = Vec::new();
            for sub in &l_filt.chain {
                chain.push(push_forward(system, m, &seq.inclusion, sub)?);
            }
            for sub in &n_filt.chain {
                // skip the final full entry only when it adds nothing new
                let pre = preimage(alg, m, &seq.projection, sub)?;
                if chain.last().map(|c| c.total_dim()) == Some(pre.total_dim()) {
                    continue;
                }
                chain.push(pre);
            }
            let induced = Filtration {
                module: m.clone(),
                chain,
                factors: None,
            };
            validate_filtration(system, &induced)?.ell()
        }
    };
    let additive = ell_m == ell_add(&ell_l, &ell_n);
    Ok(AdditivityVerdict {
        ell_l,
        ell_m,
        ell_n,
        additive,
    })
}

/// Per-layer ℓ additivity record of a summand split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerCertificate {
    pub class: usize,
    pub entries: Vec<CertEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertEntry {
    pub omega: usize,
    pub total: usize,
    pub image_part: usize,
    pub kernel_part: usize,
}

/// One side of a summand split: the summand as a representation, its
/// inclusion into the split module, and its ordered filtration.
#[derive(Debug, Clone)]
pub struct SummandSide {
    pub rep: Representation,
    pub incl: Hom,
    pub ordered: OrderedFiltration,
}

#[derive(Debug, Clone)]
pub struct SummandSplit {
    pub image: SummandSide,
    pub kernel: SummandSide,
    pub certificates: Vec<LayerCertificate>,
}

/// Splits an ordered filtration along an idempotent endomorphism e of m:
/// for each layer, bottom-up, the trace of the layer on image(e) and on
/// kernel(e) decomposes the layer as a direct sum; passing to quotients and
/// recursing yields ordered filtrations of both summands, with the per-layer
/// certificate ℓ_ω(W) = ℓ_ω(L-part) + ℓ_ω(N-part).
pub fn summand_split(
    system: &HomologicalSystem,
    m: &Representation,
    ordered: &OrderedFiltration,
    e: &Hom,
) -> Result<SummandSplit, FiltError> {
    system.require_valid()?;
    let alg = system.algebra();
    if !e.is_homomorphism(alg, m, m) {
        return Err(FiltError::NotIdempotent);
    }
    if e.compose(e) != *e {
        return Err(FiltError::NotIdempotent);
    }
    if ordered.module != *m {
        return Err(FiltError::ModuleMismatch);
    }
    let limits = SearchLimits::default();
    let image_sub = image_submodule(alg, m, e)?;
    let kernel_sub = {
        let spaces = e.mats().iter().map(|mt| mt.kernel_basis()).collect();
        Submodule::new(alg, m, spaces)?
    };
    let image_side = submodule_rep(alg, m, &image_sub)?;
    let kernel_side = submodule_rep(alg, m, &kernel_sub)?;
    // walk the layers in the successive quotients
    let mut cur_rep = m.clone();
    let mut cur_e = e.clone();
    let mut cur_layers: Vec<(usize, Submodule, Vec<(usize, usize)>)> = ordered
        .layers
        .iter()
        .map(|l| (l.class, l.sub.clone(), l.factors.clone()))
        .collect();
    // projection m → current quotient
    let mut pi: Hom = Hom::identity(alg.field(), m);
    let mut image_layers: Vec<Layer> = Vec::new();
    let mut kernel_layers: Vec<Layer> = Vec::new();
    let mut certificates: Vec<LayerCertificate> = Vec::new();
    while let Some((class, w_sub, w_factors)) = cur_layers.first().cloned() {
        let w_rep = submodule_rep(alg, &cur_rep, &w_sub)?;
        // the bottom layer is the trace of itself on the whole module
        let tr_all = trace(alg, &w_rep.rep, &cur_rep)?;
        if tr_all != w_sub {
            return Err(FiltError::TraceSumMismatch(
                "bottom layer differs from its trace on the module".into(),
            ));
        }
        let l_cur = image_submodule(alg, &cur_rep, &cur_e)?;
        let n_cur = {
            let spaces = cur_e.mats().iter().map(|mt| mt.kernel_basis()).collect();
            Submodule::new(alg, &cur_rep, spaces)?
        };
        let l_sub_rep = submodule_rep(alg, &cur_rep, &l_cur)?;
        let n_sub_rep = submodule_rep(alg, &cur_rep, &n_cur)?;
        let tr_l_local = trace(alg, &w_rep.rep, &l_sub_rep.rep)?;
        let tr_n_local = trace(alg, &w_rep.rep, &n_sub_rep.rep)?;
        let l_a = push_forward(system, &cur_rep, &l_sub_rep.incl, &tr_l_local)?;
        let n_a = push_forward(system, &cur_rep, &n_sub_rep.incl, &tr_n_local)?;
        if l_a.sum(&n_a)? != w_sub || !l_a.intersect(&n_a)?.is_zero() {
            return Err(FiltError::TraceSumMismatch(format!(
                "layer of class {class}: traces do not sum directly to the layer"
            )));
        }
        // identify factors on both sides
        let l_factors = identify_layer_factors(system, &limits, &cur_rep, &l_a, class)?;
        let n_factors = identify_layer_factors(system, &limits, &cur_rep, &n_a, class)?;
        let mut entries = Vec::new();
        for &(omega, total) in &w_factors {
            let ip = l_factors.iter().find(|(o, _)| *o == omega).map_or(0, |x| x.1);
            let kp = n_factors.iter().find(|(o, _)| *o == omega).map_or(0, |x| x.1);
            if total != ip + kp {
                return Err(FiltError::TraceSumMismatch(format!(
                    "ℓ_{omega} on layer {class}: {total} ≠ {ip} + {kp}"
                )));
            }
            entries.push(CertEntry {
                omega,
                total,
                image_part: ip,
                kernel_part: kp,
            });
        }
        // sides must not contribute factors the layer does not have
        for (o, c) in l_factors.iter().chain(n_factors.iter()) {
            if *c > 0 && !w_factors.iter().any(|(wo, _)| wo == o) {
                return Err(FiltError::TraceSumMismatch(format!(
                    "side factor Δ_{o} absent from the layer"
                )));
            }
        }
        certificates.push(LayerCertificate { class, entries });
        // cumulative chain entries in the summands' own coordinates
        if !l_a.is_zero() {
            let into_cur = pi.compose(&image_side.incl);
            let cumulative = preimage(alg, &image_side.rep, &into_cur, &l_a)?;
            image_layers.push(Layer {
                class,
                sub: cumulative,
                factors: l_factors,
            });
        }
        if !n_a.is_zero() {
            let into_cur = pi.compose(&kernel_side.incl);
            let cumulative = preimage(alg, &kernel_side.rep, &into_cur, &n_a)?;
            kernel_layers.push(Layer {
                class,
                sub: cumulative,
                factors: n_factors,
            });
        }
        // pass to the quotient by the bottom layer
        let (next_rep, proj, sect) = quotient_rep_full(alg, &cur_rep, &w_sub)?;
        let next_e = Hom::new(
            (0..next_rep.dims().len())
                .map(|v| proj.mat(v).mul(cur_e.mat(v)).mul(&sect[v]))
                .collect(),
        );
        debug_assert!(next_e.is_homomorphism(alg, &next_rep, &next_rep));
        debug_assert_eq!(next_e.compose(&next_e), next_e);
        let mut next_layers = Vec::new();
        for (c, sub, factors) in cur_layers.iter().skip(1) {
            next_layers.push((*c, push_forward(system, &next_rep, &proj, sub)?, factors.clone()));
        }
        cur_layers = next_layers;
        pi = proj.compose(&pi);
        cur_rep = next_rep;
        cur_e = next_e;
    }
    // the chains must exhaust both summands
    if let Some(last) = image_layers.last() {
        if last.sub.total_dim() != image_side.rep.total_dim() {
            return Err(FiltError::TraceSumMismatch(
                "image-side chain does not reach the summand".into(),
            ));
        }
    } else if !image_side.rep.is_zero() {
        return Err(FiltError::TraceSumMismatch("image side never appeared".into()));
    }
    if let Some(last) = kernel_layers.last() {
        if last.sub.total_dim() != kernel_side.rep.total_dim() {
            return Err(FiltError::TraceSumMismatch(
                "kernel-side chain does not reach the summand".into(),
            ));
        }
    } else if !kernel_side.rep.is_zero() {
        return Err(FiltError::TraceSumMismatch("kernel side never appeared".into()));
    }
    Ok(SummandSplit {
        image: SummandSide {
            rep: image_side.rep.clone(),
            incl: image_side.incl.clone(),
            ordered: OrderedFiltration {
                module: image_side.rep,
                layers: image_layers,
            },
        },
        kernel: SummandSide {
            rep: kernel_side.rep.clone(),
            incl: kernel_side.incl.clone(),
            ordered: OrderedFiltration {
                module: kernel_side.rep,
                layers: kernel_layers,
            },
        },
        certificates,
    })
}

/// Decomposes a layer slice and matches every factor to a Δ with the layer's
/// class; returns aggregated (omega, mult).
fn identify_layer_factors(
    system: &HomologicalSystem,
    limits: &SearchLimits,
    ambient: &Representation,
    slice: &Submodule,
    class: usize,
) -> Result<Vec<(usize, usize)>, FiltError> {
    let alg = system.algebra();
    if slice.is_zero() {
        return Ok(Vec::new());
    }
    let slice_rep = submodule_rep(alg, ambient, slice)?;
    let (groups, _) = decompose_grouped(alg, &slice_rep.rep, limits)?;
    let pattern = system.ext_pattern()?;
    let mut out: Vec<(usize, usize)> = Vec::new();
    for (rep, mult, _) in groups {
        let mut matched = None;
        for (oi, delta) in system.deltas().iter().enumerate() {
            if isomorphism(alg, delta, &rep, limits).as_bool() {
                matched = Some(oi);
                break;
            }
        }
        let Some(omega) = matched else {
            return Err(FiltError::FactorNotInDelta {
                step: usize::MAX,
                dims: rep.dims().to_vec(),
            });
        };
        if pattern.class_of(omega) != class {
            return Err(FiltError::TraceSumMismatch(format!(
                "trace factor Δ_{omega} has class {} on a layer of class {class}",
                pattern.class_of(omega)
            )));
        }
        out.push((omega, mult));
    }
    out.sort();
    Ok(out)
}

/// Builds M = ⊕ Δ_{ω_i} together with its single-step filtration, the
/// auto-filtration for explicit Δ-sums.
pub fn delta_sum(
    system: &HomologicalSystem,
    omegas: &[usize],
) -> (Representation, Filtration) {
    let alg = system.algebra();
    let parts: Vec<&Representation> = omegas.iter().map(|&o| system.delta(o)).collect();
    let ds = crate::qrep::direct_sum(alg, &parts);
    let mut agg: MultiplicityMap = MultiplicityMap::new();
    for &o in omegas {
        *agg.entry(o).or_insert(0) += 1;
    }
    let factors: Vec<(usize, usize)> = agg.into_iter().collect();
    let module = ds.rep.clone();
    let chain = if module.is_zero() {
        Vec::new()
    } else {
        vec![module.full_submodule(alg)]
    };
    let f = Filtration {
        module: ds.rep,
        chain,
        factors: if omegas.is_empty() {
            None
        } else {
            Some(vec![factors])
        },
    };
    (module, f)
}
