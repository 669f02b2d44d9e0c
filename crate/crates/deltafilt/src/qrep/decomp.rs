use super::algebra::AlgebraPresentation;
use super::hom::{hom_basis, Hom, HomSpace};
use super::rep::{submodule_rep, Representation, Submodule};
use super::QrepError;
use crate::gfmat::FieldSpec;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Budgets for the isomorphism and indecomposability searches. Coefficient
/// spaces with at most `exhaustive_max` vectors are enumerated completely
/// (the verdict is then certified); larger spaces fall back to seeded
/// randomized trials.
#[derive(Debug, Clone)]
pub struct SearchLimits {
    pub exhaustive_max: u64,
    pub seed: u64,
    pub trials: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        let seed = std::env::var("DELTAFILT_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0xDE17AF11);
        SearchLimits {
            exhaustive_max: 1_000_000,
            seed,
            trials: 300,
        }
    }
}

impl SearchLimits {
    fn rng(&self) -> StdRng {
        StdRng::seed_from_u64(self.seed)
    }

    /// Whether GF(p)^k fits under the exhaustive budget.
    fn can_enumerate(&self, p: u64, k: usize) -> bool {
        let mut total: u64 = 1;
        for _ in 0..k {
            total = match total.checked_mul(p) {
                Some(t) if t <= self.exhaustive_max => t,
                _ => return false,
            };
        }
        true
    }
}

/// A value plus how it was reached: exhaustively (certified) or by a
/// randomized search that may have missed a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Exact(T),
    Probable { value: T, trials: u64 },
}

impl<T: Copy> SearchOutcome<T> {
    pub fn value(&self) -> T {
        match self {
            SearchOutcome::Exact(v) => *v,
            SearchOutcome::Probable { value, .. } => *value,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SearchOutcome::Exact(_))
    }
}

#[derive(Debug, Clone)]
pub enum IsoVerdict {
    /// A concrete invertible intertwiner.
    Isomorphic(Hom),
    /// Certified: dimension mismatch, zero Hom space, or exhausted search.
    NotIsomorphic,
    /// Randomized search found no invertible element.
    ProbablyNot { trials: u64 },
}

impl IsoVerdict {
    pub fn as_bool(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

fn combine_coeffs(
    field: FieldSpec,
    hs: &HomSpace,
    source: &Representation,
    target: &Representation,
    coeffs: &[u64],
) -> Hom {
    hs.combine(field, source, target, coeffs)
}

/// Iterates coefficient vectors in GF(p)^k as a base-p counter, starting
/// after the zero vector.
struct CoeffCounter {
    p: u64,
    digits: Vec<u64>,
    done: bool,
}

impl CoeffCounter {
    fn new(p: u64, k: usize) -> Self {
        CoeffCounter {
            p,
            digits: vec![0; k],
            done: k == 0,
        }
    }
}

impl Iterator for CoeffCounter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < self.p {
                return Some(self.digits.clone());
            }
            *d = 0;
        }
        self.done = true;
        None
    }
}

/// Decides isomorphism by searching the Hom space for an invertible element.
/// Exhaustive below the budget, randomized above it.
pub fn isomorphism(
    alg: &AlgebraPresentation,
    m: &Representation,
    n: &Representation,
    limits: &SearchLimits,
) -> IsoVerdict {
    let f = alg.field();
    if m.dims() != n.dims() {
        return IsoVerdict::NotIsomorphic;
    }
    if m.is_zero() {
        return IsoVerdict::Isomorphic(Hom::identity(f, m));
    }
    let hs = hom_basis(alg, m, n);
    let k = hs.dim();
    if k == 0 {
        return IsoVerdict::NotIsomorphic;
    }
    if limits.can_enumerate(f.p(), k) {
        for coeffs in CoeffCounter::new(f.p(), k) {
            let cand = combine_coeffs(f, &hs, m, n, &coeffs);
            if cand.is_invertible() {
                return IsoVerdict::Isomorphic(cand);
            }
        }
        IsoVerdict::NotIsomorphic
    } else {
        let mut rng = limits.rng();
        for _ in 0..limits.trials {
            let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
            let cand = combine_coeffs(f, &hs, m, n, &coeffs);
            if cand.is_invertible() {
                return IsoVerdict::Isomorphic(cand);
            }
        }
        IsoVerdict::ProbablyNot {
            trials: limits.trials,
        }
    }
}

pub fn is_isomorphic(alg: &AlgebraPresentation, m: &Representation, n: &Representation) -> bool {
    isomorphism(alg, m, n, &SearchLimits::default()).as_bool()
}

/// Fitting decomposition m = im(φ^K) ⊕ ker(φ^K) for K beyond the total
/// dimension; returns the pair when both parts are nonzero.
fn fitting_split(
    alg: &AlgebraPresentation,
    m: &Representation,
    phi: &Hom,
) -> Result<Option<(Submodule, Submodule)>, QrepError> {
    let total = m.total_dim();
    let mut power = phi.clone();
    let mut exponent = 1usize;
    while exponent < total {
        power = power.compose(&power);
        exponent *= 2;
    }
    let image_spaces: Vec<_> = power.mats().iter().map(|mt| mt.column_space()).collect();
    let image_dim: usize = image_spaces.iter().map(|s| s.dim()).sum();
    if image_dim == 0 || image_dim == total {
        return Ok(None);
    }
    let image = Submodule::new(alg, m, image_spaces)?;
    let kernel_spaces: Vec<_> = power.mats().iter().map(|mt| mt.kernel_basis()).collect();
    let kernel = Submodule::new(alg, m, kernel_spaces)?;
    debug_assert_eq!(image.total_dim() + kernel.total_dim(), total);
    debug_assert!(image.intersect(&kernel)?.is_zero());
    Ok(Some((image, kernel)))
}

enum SplitSearch {
    Found(Submodule, Submodule),
    NoneCertified,
    NoneProbable(u64),
}

/// Looks for a proper direct-sum split of m, Fitting-style. Candidates:
/// every End basis element shifted by every scalar multiple of the identity,
/// then the full coefficient space when affordable, then randomized trials.
fn find_split(
    alg: &AlgebraPresentation,
    m: &Representation,
    limits: &SearchLimits,
) -> Result<SplitSearch, QrepError> {
    let f = alg.field();
    let end = hom_basis(alg, m, m);
    let k = end.dim();
    if k <= 1 {
        // End = GF(p)·id: local, indecomposable
        return Ok(SplitSearch::NoneCertified);
    }
    let id = Hom::identity(f, m);
    for b in &end.basis {
        for lambda in 0..f.p() {
            let cand = b.add(&id.scale(f.neg(lambda)));
            if cand.is_zero() {
                continue;
            }
            if let Some((u, w)) = fitting_split(alg, m, &cand)? {
                return Ok(SplitSearch::Found(u, w));
            }
        }
    }
    if limits.can_enumerate(f.p(), k) {
        for coeffs in CoeffCounter::new(f.p(), k) {
            let cand = combine_coeffs(f, &end, m, m, &coeffs);
            if let Some((u, w)) = fitting_split(alg, m, &cand)? {
                return Ok(SplitSearch::Found(u, w));
            }
        }
        return Ok(SplitSearch::NoneCertified);
    }
    let mut rng = limits.rng();
    let mut trials = 0u64;
    for _ in 0..limits.trials {
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
        let base = combine_coeffs(f, &end, m, m, &coeffs);
        for lambda in 0..f.p() {
            trials += 1;
            let cand = base.add(&id.scale(f.neg(lambda)));
            if cand.is_zero() {
                continue;
            }
            if let Some((u, w)) = fitting_split(alg, m, &cand)? {
                return Ok(SplitSearch::Found(u, w));
            }
        }
    }
    Ok(SplitSearch::NoneProbable(trials))
}

/// Indecomposability: End(m) contains no idempotent besides 0 and the
/// identity. Exhaustive searches certify the answer; randomized ones report
/// the trial count.
pub fn is_indecomposable(
    alg: &AlgebraPresentation,
    m: &Representation,
    limits: &SearchLimits,
) -> Result<SearchOutcome<bool>, QrepError> {
    if m.is_zero() {
        return Err(QrepError::ZeroModule);
    }
    match find_split(alg, m, limits)? {
        SplitSearch::Found(..) => Ok(SearchOutcome::Exact(false)),
        SplitSearch::NoneCertified => Ok(SearchOutcome::Exact(true)),
        SplitSearch::NoneProbable(trials) => Ok(SearchOutcome::Probable {
            value: true,
            trials,
        }),
    }
}

/// One indecomposable summand instance with its embedding into the
/// decomposed module.
#[derive(Debug, Clone)]
pub struct DecompFactor {
    pub rep: Representation,
    pub embedding: Hom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certainty {
    Certified,
    Randomized,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub factors: Vec<DecompFactor>,
    pub certainty: Certainty,
}

/// Full Krull–Schmidt decomposition into indecomposable summand instances,
/// each with its embedding. The zero module decomposes into nothing.
pub fn decompose(
    alg: &AlgebraPresentation,
    m: &Representation,
    limits: &SearchLimits,
) -> Result<Decomposition, QrepError> {
    let mut factors = Vec::new();
    let mut certified = true;
    let id = Hom::identity(alg.field(), m);
    decompose_rec(alg, m, &id, limits, &mut factors, &mut certified)?;
    Ok(Decomposition {
        factors,
        certainty: if certified {
            Certainty::Certified
        } else {
            Certainty::Randomized
        },
    })
}

fn decompose_rec(
    alg: &AlgebraPresentation,
    m: &Representation,
    embed: &Hom,
    limits: &SearchLimits,
    out: &mut Vec<DecompFactor>,
    certified: &mut bool,
) -> Result<(), QrepError> {
    if m.is_zero() {
        return Ok(());
    }
    match find_split(alg, m, limits)? {
        SplitSearch::Found(u, w) => {
            for part in [u, w] {
                let sub = submodule_rep(alg, m, &part)?;
                let part_embed = embed.compose(&sub.incl);
                decompose_rec(alg, &sub.rep, &part_embed, limits, out, certified)?;
            }
            Ok(())
        }
        SplitSearch::NoneCertified => {
            out.push(DecompFactor {
                rep: m.clone(),
                embedding: embed.clone(),
            });
            Ok(())
        }
        SplitSearch::NoneProbable(_) => {
            *certified = false;
            out.push(DecompFactor {
                rep: m.clone(),
                embedding: embed.clone(),
            });
            Ok(())
        }
    }
}

/// Decomposition with isomorphic factors grouped: (representative,
/// multiplicity, embeddings of each instance).
pub fn decompose_grouped(
    alg: &AlgebraPresentation,
    m: &Representation,
    limits: &SearchLimits,
) -> Result<(Vec<(Representation, usize, Vec<Hom>)>, Certainty), QrepError> {
    let d = decompose(alg, m, limits)?;
    let mut groups: Vec<(Representation, usize, Vec<Hom>)> = Vec::new();
    for factor in d.factors {
        match groups
            .iter_mut()
            .find(|(rep, _, _)| isomorphism(alg, rep, &factor.rep, limits).as_bool())
        {
            Some((_, mult, embeds)) => {
                *mult += 1;
                embeds.push(factor.embedding);
            }
            None => groups.push((factor.rep, 1, vec![factor.embedding])),
        }
    }
    Ok((groups, d.certainty))
}
