//! Finite preordered sets, their partial-order quotients, and linear
//! extensions.
//!
//! A preorder is reflexive and transitive. Quotienting by mutual
//! comparability (c₁ ~ c₂ iff c₁ ≤ c₂ and c₂ ≤ c₁) yields a poset on the
//! classes; a linearization is a total order extending that poset. All
//! carriers are finite, so the order-extension principle degenerates to
//! topological sorting.
//!
//! The divisibility constructions ([`divisibility`], [`q_lex_linearization`],
//! [`inverter_linearization`]) build concrete total orders on {1..n} that
//! extend "divides".

use std::fmt::{Debug, Display};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PreordError {
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("cycle detected while linearizing")]
    CycleDetected,
    #[error("linear extension count exceeds cap {cap}")]
    CapExceeded { cap: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
}

/// Finite preorder: carrier labels plus a reflexive-transitive boolean
/// relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder<L> {
    carrier: Vec<L>,
    leq: Vec<Vec<bool>>,
}

impl<L: Clone + Eq + Display> Preorder<L> {
    /// Smallest reflexive-transitive relation containing `pairs`.
    pub fn close_transitive(carrier: Vec<L>, pairs: &[(L, L)]) -> Result<Self, PreordError> {
        for (i, a) in carrier.iter().enumerate() {
            if carrier[i + 1..].contains(a) {
                return Err(PreordError::DuplicateLabel(a.to_string()));
            }
        }
        let n = carrier.len();
        let index = |l: &L| -> Result<usize, PreordError> {
            carrier
                .iter()
                .position(|c| c == l)
                .ok_or_else(|| PreordError::UnknownLabel(l.to_string()))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            leq[index(a)?][index(b)?] = true;
        }
        // Floyd-Warshall closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Ok(Preorder { carrier, leq })
    }

    pub fn carrier(&self) -> &[L] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, l: &L) -> Option<usize> {
        self.carrier.iter().position(|c| c == l)
    }

    /// Relation by carrier index.
    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn leq(&self, a: &L, b: &L) -> Option<bool> {
        Some(self.leq[self.index_of(a)?][self.index_of(b)?])
    }

    pub fn pairs(&self) -> Vec<(L, L)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.leq[i][j] {
                    out.push((self.carrier[i].clone(), self.carrier[j].clone()));
                }
            }
        }
        out
    }

    /// Quotient by mutual comparability. Classes are listed in carrier order
    /// of their least member, so class indices are deterministic.
    pub fn quotient(&self) -> QuotientPoset<L> {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![i];
            class_of[i] = c;
            for j in i + 1..n {
                if class_of[j] == usize::MAX && self.leq[i][j] && self.leq[j][i] {
                    class_of[j] = c;
                    members.push(j);
                }
            }
            classes.push(members);
        }
        let m = classes.len();
        let mut leq = vec![vec![false; m]; m];
        for (u, cu) in classes.iter().enumerate() {
            for (v, cv) in classes.iter().enumerate() {
                // well-definedness: any representative pair decides, and we
                // check all pairs agree
                let val = self.leq[cu[0]][cv[0]];
                for &a in cu {
                    for &b in cv {
                        assert_eq!(
                            self.leq[a][b], val,
                            "quotient relation not well-defined"
                        );
                    }
                }
                leq[u][v] = val;
            }
        }
        // antisymmetry of the induced relation
        for u in 0..m {
            for v in 0..m {
                if u != v {
                    assert!(
                        !(leq[u][v] && leq[v][u]),
                        "quotient relation not antisymmetric"
                    );
                }
            }
        }
        QuotientPoset {
            labels: self.carrier.clone(),
            classes,
            leq,
            class_of,
        }
    }
}

/// The poset of mutual-comparability classes of a preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPoset<L> {
    labels: Vec<L>,
    /// Each class is a set of carrier indices.
    classes: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
    class_of: Vec<usize>,
}

impl<L: Clone + Eq> QuotientPoset<L> {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_members(&self, c: usize) -> Vec<&L> {
        self.classes[c].iter().map(|&i| &self.labels[i]).collect()
    }

    /// Class index of a carrier element, by carrier index.
    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, l: &L) -> Option<usize> {
        self.labels.iter().position(|x| x == l).map(|i| self.class_of[i])
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.leq[u][v]
    }

    /// Deterministic linearization: Kahn's algorithm, always removing the
    /// least-index minimal class (class indices follow carrier order).
    pub fn linearize(&self) -> Result<Linearization, PreordError> {
        let priority: Vec<usize> = (0..self.class_count()).collect();
        self.linearize_with_priority(&priority)
    }

    /// Kahn's algorithm with an explicit tiebreak: among the minimal classes
    /// the one appearing earliest in `priority` is removed first.
    pub fn linearize_with_priority(
        &self,
        priority: &[usize],
    ) -> Result<Linearization, PreordError> {
        let m = self.class_count();
        if priority.len() != m {
            return Err(PreordError::PreconditionViolated(format!(
                "priority lists {} classes, poset has {m}",
                priority.len()
            )));
        }
        let mut placed = vec![false; m];
        let mut order = Vec::with_capacity(m);
        while order.len() < m {
            let next = priority.iter().copied().find(|&u| {
                !placed[u]
                    && (0..m).all(|v| placed[v] || v == u || !self.leq[v][u])
            });
            match next {
                Some(u) => {
                    placed[u] = true;
                    order.push(u);
                }
                None => return Err(PreordError::CycleDetected),
            }
        }
        let lin = Linearization { order };
        debug_assert!(lin.extends(self));
        Ok(lin)
    }

    /// All linear extensions, in lexicographic class-index order, erroring
    /// when more than `cap` exist.
    pub fn enumerate_linearizations(&self, cap: usize) -> Result<Vec<Linearization>, PreordError> {
        let m = self.class_count();
        let mut out = Vec::new();
        let mut placed = vec![false; m];
        let mut prefix = Vec::with_capacity(m);
        fn rec<L: Clone + Eq>(
            q: &QuotientPoset<L>,
            placed: &mut Vec<bool>,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Linearization>,
            cap: usize,
        ) -> Result<(), PreordError> {
            let m = q.class_count();
            if prefix.len() == m {
                if out.len() == cap {
                    return Err(PreordError::CapExceeded { cap });
                }
                out.push(Linearization {
                    order: prefix.clone(),
                });
                return Ok(());
            }
            for u in 0..m {
                if !placed[u] && (0..m).all(|v| placed[v] || v == u || !q.leq[v][u]) {
                    placed[u] = true;
                    prefix.push(u);
                    rec(q, placed, prefix, out, cap)?;
                    prefix.pop();
                    placed[u] = false;
                }
            }
            Ok(())
        }
        rec(self, &mut placed, &mut prefix, &mut out, cap)?;
        for lin in &out {
            debug_assert!(lin.extends(self));
        }
        Ok(out)
    }
}

/// A total order on the quotient classes: `order[rank] = class`, earlier
/// means smaller under ≼.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linearization {
    order: Vec<usize>,
}

impl Linearization {
    /// Builds from an explicit class sequence, checking it is a permutation
    /// extending the poset.
    pub fn from_order<L: Clone + Eq>(
        q: &QuotientPoset<L>,
        order: Vec<usize>,
    ) -> Result<Self, PreordError> {
        let m = q.class_count();
        let mut seen = vec![false; m];
        for &c in &order {
            if c >= m || seen[c] {
                return Err(PreordError::PreconditionViolated(
                    "order is not a permutation of the classes".into(),
                ));
            }
            seen[c] = true;
        }
        if order.len() != m {
            return Err(PreordError::PreconditionViolated(
                "order does not cover all classes".into(),
            ));
        }
        let lin = Linearization { order };
        if !lin.extends(q) {
            return Err(PreordError::PreconditionViolated(
                "order does not extend the poset".into(),
            ));
        }
        Ok(lin)
    }

    pub fn class_sequence(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of a class: smaller rank = smaller under ≼.
    pub fn rank_of(&self, class: usize) -> usize {
        self.order
            .iter()
            .position(|&c| c == class)
            .expect("class out of range")
    }

    /// u ≤ v in the poset implies rank(u) ≤ rank(v).
    pub fn extends<L: Clone + Eq>(&self, q: &QuotientPoset<L>) -> bool {
        let m = q.class_count();
        if self.order.len() != m {
            return false;
        }
        for u in 0..m {
            for v in 0..m {
                if q.leq(u, v) && self.rank_of(u) > self.rank_of(v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Divisibility preorder on {1..n}: a ≤ b iff a divides b. Already a partial
/// order, so its quotient has singleton classes.
pub fn divisibility(n: u64) -> Preorder<u64> {
    assert!(n >= 1);
    let carrier: Vec<u64> = (1..=n).collect();
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if b % a == 0 {
                pairs.push((a, b));
            }
        }
    }
    Preorder::close_transitive(carrier, &pairs).expect("labels are the carrier")
}

/// Total prime multiplicity Ω(a): the number of prime factors counted with
/// repetition. q(1) = 0.
pub fn q_length(a: u64) -> u32 {
    assert!(a >= 1);
    let mut a = a;
    let mut count = 0;
    let mut d = 2u64;
    while d * d <= a {
        while a % d == 0 {
            a /= d;
            count += 1;
        }
        d += 1;
    }
    if a > 1 {
        count += 1;
    }
    count
}

/// Per-level total orders for the q-lexicographic construction: an explicit
/// permutation of the members of each q-level. Levels not listed fall back to
/// numeric order.
pub type LevelOrders = Vec<(u32, Vec<u64>)>;

/// The q-lexicographic total order on {1..n}: compare Ω first, then the
/// level order. Always extends divisibility, which is re-checked.
pub fn q_lex_linearization(n: u64, level_orders: &LevelOrders) -> Result<Linearization, PreordError> {
    let pre = divisibility(n);
    let q = pre.quotient();
    let key = |a: u64| -> Result<(u32, usize), PreordError> {
        let level = q_length(a);
        match level_orders.iter().find(|(l, _)| *l == level) {
            Some((_, order)) => {
                let pos = order.iter().position(|&x| x == a).ok_or_else(|| {
                    PreordError::PreconditionViolated(format!(
                        "level order for q={level} does not mention {a}"
                    ))
                })?;
                Ok((level, pos))
            }
            None => Ok((level, a as usize)),
        }
    };
    let mut elems: Vec<u64> = (1..=n).collect();
    let mut keyed = Vec::with_capacity(elems.len());
    for &a in &elems {
        keyed.push(key(a)?);
    }
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by_key(|&i| keyed[i]);
    elems = idx.iter().map(|&i| (i + 1) as u64).collect();
    // classes are singletons in carrier order, so class index = value - 1
    let order: Vec<usize> = elems.iter().map(|&a| (a - 1) as usize).collect();
    let lin = Linearization { order };
    if !lin.extends(&q) {
        return Err(PreordError::PostconditionFailed(
            "q-lex order does not extend divisibility".into(),
        ));
    }
    Ok(lin)
}

/// Data computed by [`inverter_linearization`], exposing the injection.
#[derive(Debug, Clone)]
pub struct InverterOrder {
    pub d: u64,
    pub n_prime: u64,
    pub m_prime: u64,
    /// i(a) for a in {1..bound}.
    pub injection: Vec<(u64, u64)>,
    pub linearization: Linearization,
}

/// Total order on {1..bound} that extends divisibility and places n before m,
/// built by pulling the q-lex order back through the injection
/// i(a) = a when m′ ∤ a, i(a) = n′·a when m′ | a, where n = n′·d, m = m′·d,
/// d = gcd(n, m).
///
/// Preconditions: n ∤ m, m ∤ n, q(m) < q(n), both within the bound. The
/// postconditions (i injective, extends divisibility, n before m) are checked
/// exhaustively; n-before-m can genuinely fail when m′ divides d, which the
/// construction does not exclude, and is reported as a postcondition failure.
pub fn inverter_linearization(n: u64, m: u64, bound: u64) -> Result<InverterOrder, PreordError> {
    if n < 1 || m < 1 || n > bound || m > bound {
        return Err(PreordError::PreconditionViolated(format!(
            "n={n}, m={m} must lie in 1..={bound}"
        )));
    }
    if m % n == 0 {
        return Err(PreordError::PreconditionViolated(format!("{n} divides {m}")));
    }
    if n % m == 0 {
        return Err(PreordError::PreconditionViolated(format!("{m} divides {n}")));
    }
    if q_length(m) >= q_length(n) {
        return Err(PreordError::PreconditionViolated(format!(
            "need q({m}) < q({n}), got {} >= {}",
            q_length(m),
            q_length(n)
        )));
    }
    let d = gcd(n, m);
    let n_prime = n / d;
    let m_prime = m / d;
    let i = |a: u64| -> u64 {
        if a % m_prime == 0 {
            n_prime * a
        } else {
            a
        }
    };
    let injection: Vec<(u64, u64)> = (1..=bound).map(|a| (a, i(a))).collect();
    // i injective on {1..bound}
    for (k, &(_, ia)) in injection.iter().enumerate() {
        for &(_, ib) in &injection[k + 1..] {
            if ia == ib {
                return Err(PreordError::PostconditionFailed(format!(
                    "injection collides at value {ia}"
                )));
            }
        }
    }
    // pulled-back q-lex order with numeric level orders on the codomain
    let mut elems: Vec<u64> = (1..=bound).collect();
    elems.sort_by_key(|&a| (q_length(i(a)), i(a)));
    let pre = divisibility(bound);
    let q = pre.quotient();
    let order: Vec<usize> = elems.iter().map(|&a| (a - 1) as usize).collect();
    let lin = Linearization { order };
    if !lin.extends(&q) {
        return Err(PreordError::PostconditionFailed(
            "pulled-back order does not extend divisibility".into(),
        ));
    }
    if lin.rank_of((n - 1) as usize) > lin.rank_of((m - 1) as usize) {
        return Err(PreordError::PostconditionFailed(format!(
            "{n} does not precede {m} (happens when m'={m_prime} divides d={d})"
        )));
    }
    Ok(InverterOrder {
        d,
        n_prime,
        m_prime,
        injection,
        linearization: lin,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn close_transitive_single_pair() {
        let p = Preorder::close_transitive(vec![1u64, 2], &[(2, 1)]).unwrap();
        assert_eq!(p.leq(&2, &1), Some(true));
        assert_eq!(p.leq(&1, &2), Some(false));
        assert_eq!(p.leq(&1, &1), Some(true));
        assert_eq!(p.leq(&2, &2), Some(true));
    }

    #[test]
    fn close_transitive_empty_pairs_is_discrete() {
        let p = Preorder::close_transitive(vec!["a", "b", "c"], &[]).unwrap();
        for a in ["a", "b", "c"] {
            for b in ["a", "b", "c"] {
                assert_eq!(p.leq(&a, &b), Some(a == b));
            }
        }
    }

    #[test]
    fn close_transitive_forces_composite() {
        let p = Preorder::close_transitive(vec!["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(p.leq(&"a", &"c"), Some(true));
    }

    #[test]
    fn close_transitive_unknown_label() {
        let r = Preorder::close_transitive(vec!["a"], &[("a", "z")]);
        assert_eq!(r, Err(PreordError::UnknownLabel("z".into())));
    }

    #[test]
    fn quotient_discrete_gives_singletons() {
        let p = Preorder::close_transitive(vec![1u64, 2, 3], &[]).unwrap();
        let q = p.quotient();
        assert_eq!(q.class_count(), 3);
    }

    #[test]
    fn quotient_merges_mutually_related() {
        let p = Preorder::close_transitive(vec!["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let q = p.quotient();
        assert_eq!(q.class_count(), 1);
        assert_eq!(q.class_members(0).len(), 2);
    }

    #[test]
    fn quotient_of_divisibility_is_identity() {
        let p = divisibility(6);
        assert_eq!(p.leq(&2, &4), Some(true));
        assert_eq!(p.leq(&4, &2), Some(false));
        for k in 1..=6 {
            assert_eq!(p.leq(&k, &k), Some(true));
            assert_eq!(p.leq(&1, &k), Some(true));
        }
        let q = p.quotient();
        assert_eq!(q.class_count(), 6);
        // 1 is minimal: 1 ≤ k for all k
        for k in 0..6 {
            assert!(q.leq(0, k));
        }
    }

    #[test]
    fn quotient_antisymmetry_exhaustive_small_carriers() {
        // all preorders on <= 3 elements arising from arbitrary pair sets
        let labels = vec![0u64, 1, 2];
        let all_pairs: Vec<(u64, u64)> = labels
            .iter()
            .flat_map(|&a| labels.iter().map(move |&b| (a, b)))
            .collect();
        for mask in 0u32..(1 << all_pairs.len()) {
            let pairs: Vec<(u64, u64)> = all_pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let p = Preorder::close_transitive(labels.clone(), &pairs).unwrap();
            let _ = p.quotient(); // antisymmetry asserted inside
        }
    }

    #[test]
    fn quotient_antisymmetry_randomized_carriers_up_to_eight() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(5150);
        for _ in 0..200 {
            let n = rng.gen_range(4..=8u64);
            let labels: Vec<u64> = (0..n).collect();
            let pair_count = rng.gen_range(0..=(n * n / 2)) as usize;
            let pairs: Vec<(u64, u64)> = (0..pair_count)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let p = Preorder::close_transitive(labels, &pairs).unwrap();
            let q = p.quotient(); // antisymmetry asserted inside
            assert!(q.linearize().unwrap().extends(&q));
        }
    }

    #[test]
    fn linearize_chain_is_unique() {
        let p = Preorder::close_transitive(vec![1u64, 2, 3], &[(3, 2), (2, 1)]).unwrap();
        let q = p.quotient();
        let lin = q.linearize().unwrap();
        // classes indexed in carrier order: class 0 = {1}, 1 = {2}, 2 = {3}
        assert_eq!(lin.class_sequence(), &[2, 1, 0]);
        assert_eq!(q.enumerate_linearizations(10).unwrap().len(), 1);
    }

    #[test]
    fn linearize_antichain_uses_tiebreak() {
        let p = Preorder::close_transitive(vec!["a", "b"], &[]).unwrap();
        let q = p.quotient();
        let lin = q.linearize().unwrap();
        assert_eq!(lin.class_sequence(), &[0, 1]);
        // a custom priority reverses the antichain but still extends
        let rev = q.linearize_with_priority(&[1, 0]).unwrap();
        assert_eq!(rev.class_sequence(), &[1, 0]);
        assert!(rev.extends(&q));
    }

    #[test]
    fn linearize_divisibility_four() {
        let q = divisibility(4).quotient();
        let lin = q.linearize().unwrap();
        let rank = |a: u64| lin.rank_of((a - 1) as usize);
        assert_eq!(rank(1), 0);
        assert!(rank(2) < rank(4));
        assert!(lin.extends(&q));
    }

    #[test]
    fn enumerate_antichain_of_three() {
        let p = Preorder::close_transitive(vec![1u64, 2, 3], &[]).unwrap();
        let lins = p.quotient().enumerate_linearizations(100).unwrap();
        assert_eq!(lins.len(), 6);
    }

    #[test]
    fn enumerate_cap_exceeded() {
        let p = Preorder::close_transitive(vec![1u64, 2, 3], &[]).unwrap();
        assert_eq!(
            p.quotient().enumerate_linearizations(5),
            Err(PreordError::CapExceeded { cap: 5 })
        );
    }

    #[test]
    fn enumerate_divisibility_2_3_4_has_both_orders() {
        let p = Preorder::close_transitive(vec![2u64, 3, 4], &[(2, 4)]).unwrap();
        let q = p.quotient();
        let lins = q.enumerate_linearizations(100).unwrap();
        let c2 = q.class_of(&2).unwrap();
        let c3 = q.class_of(&3).unwrap();
        assert!(lins.iter().any(|l| l.rank_of(c2) < l.rank_of(c3)));
        assert!(lins.iter().any(|l| l.rank_of(c3) < l.rank_of(c2)));
    }

    /// Brute-force count of permutations extending the poset.
    fn brute_force_extension_count<L: Clone + Eq>(q: &QuotientPoset<L>) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(q.class_count())
            .into_iter()
            .filter(|perm| Linearization { order: perm.clone() }.extends(q))
            .count()
    }

    #[test]
    fn enumeration_matches_brute_force_small_posets() {
        for n in 1..=6u64 {
            let q = divisibility(n).quotient();
            let enumerated = q.enumerate_linearizations(10_000).unwrap().len();
            assert_eq!(enumerated, brute_force_extension_count(&q), "n = {n}");
        }
        // and a non-divisibility shape: the fence a < b > c
        let p = Preorder::close_transitive(vec!["a", "b", "c"], &[("a", "b"), ("c", "b")]).unwrap();
        let q = p.quotient();
        assert_eq!(
            q.enumerate_linearizations(100).unwrap().len(),
            brute_force_extension_count(&q)
        );
    }

    #[test]
    fn q_length_values() {
        assert_eq!(q_length(12), 3);
        assert_eq!(q_length(1), 0);
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(q_length(p), 1);
        }
    }

    #[test]
    fn q_lex_default_levels_on_six() {
        let lin = q_lex_linearization(6, &Vec::new()).unwrap();
        let seq: Vec<u64> = lin.class_sequence().iter().map(|&c| (c + 1) as u64).collect();
        assert_eq!(seq, vec![1, 2, 3, 5, 4, 6]);
    }

    #[test]
    fn q_lex_reversed_level_one_still_extends() {
        let overrides = vec![(1u32, vec![5u64, 3, 2])];
        let lin = q_lex_linearization(6, &overrides).unwrap();
        let rank = |a: u64| lin.rank_of((a - 1) as usize);
        assert!(rank(5) < rank(3) && rank(3) < rank(2));
        // exhaustive divisor-pair check
        for a in 1..=6u64 {
            for b in 1..=6u64 {
                if b % a == 0 {
                    assert!(rank(a) <= rank(b), "{a} | {b}");
                }
            }
        }
    }

    #[test]
    fn q_lex_single_element() {
        let lin = q_lex_linearization(1, &Vec::new()).unwrap();
        assert_eq!(lin.class_sequence(), &[0]);
    }

    #[test]
    fn inverter_8_6_24() {
        let inv = inverter_linearization(8, 6, 24).unwrap();
        assert_eq!(inv.d, 2);
        assert_eq!(inv.n_prime, 4);
        assert_eq!(inv.m_prime, 3);
        let i = |a: u64| inv.injection.iter().find(|&&(x, _)| x == a).unwrap().1;
        assert_eq!(i(6), 24);
        assert_eq!(i(8), 8);
        assert_eq!(q_length(8), 3);
        assert_eq!(q_length(24), 4);
        let rank = |a: u64| inv.linearization.rank_of((a - 1) as usize);
        assert!(rank(8) < rank(6));
        // i(a) = a whenever 3 does not divide a
        for a in 1..=24u64 {
            if a % 3 != 0 {
                assert_eq!(i(a), a);
            }
        }
        // extends divisibility exhaustively on {1..24}
        for a in 1..=24u64 {
            for b in 1..=24u64 {
                if b % a == 0 {
                    assert!(rank(a) <= rank(b), "{a} | {b}");
                }
            }
        }
    }

    #[test]
    fn inverter_rejects_divisibility_violations() {
        assert!(matches!(
            inverter_linearization(4, 8, 24),
            Err(PreordError::PreconditionViolated(_))
        ));
        assert!(matches!(
            inverter_linearization(8, 4, 24),
            Err(PreordError::PreconditionViolated(_))
        ));
        // q(m) >= q(n)
        assert!(matches!(
            inverter_linearization(6, 8, 24),
            Err(PreordError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn inverter_reports_broken_claim_when_m_prime_divides_d() {
        // n = 12, m = 9: d = 3, n' = 4, m' = 3 divides d, and the pulled-back
        // order puts 9 before 12
        let r = inverter_linearization(12, 9, 24);
        assert!(matches!(r, Err(PreordError::PostconditionFailed(_))));
    }
}
