use super::algebra::AlgebraPresentation;
use super::rep::{submodule_rep, Representation, Submodule};
use super::QrepError;
use crate::gfmat::{FieldSpec, Mat};

/// A homomorphism of representations: one matrix per vertex,
/// target-dim × source-dim. The intertwiner law `N_a·f_src = f_tgt·M_a`
/// is a property of where the value came from, not of the struct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    mats: Vec<Mat>,
}

impl Hom {
    pub fn new(mats: Vec<Mat>) -> Self {
        Hom { mats }
    }

    pub fn identity(field: FieldSpec, rep: &Representation) -> Self {
        Hom {
            mats: rep
                .dims()
                .iter()
                .map(|&d| Mat::identity(field, d))
                .collect(),
        }
    }

    pub fn zero(field: FieldSpec, source: &Representation, target: &Representation) -> Self {
        Hom {
            mats: source
                .dims()
                .iter()
                .zip(target.dims())
                .map(|(&s, &t)| Mat::zero(field, t, s))
                .collect(),
        }
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    pub fn mat(&self, v: usize) -> &Mat {
        &self.mats[v]
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    /// self ∘ g (g applied first).
    pub fn compose(&self, g: &Hom) -> Hom {
        Hom {
            mats: self
                .mats
                .iter()
                .zip(g.mats.iter())
                .map(|(f, g)| f.mul(g))
                .collect(),
        }
    }

    pub fn add(&self, other: &Hom) -> Hom {
        Hom {
            mats: self
                .mats
                .iter()
                .zip(other.mats.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Hom {
        Hom {
            mats: self.mats.iter().map(|m| m.scale(c)).collect(),
        }
    }

    /// All vertex components invertible.
    pub fn is_invertible(&self) -> bool {
        self.mats
            .iter()
            .all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    pub fn inverse(&self) -> Option<Hom> {
        let mats = self
            .mats
            .iter()
            .map(|m| m.inverse())
            .collect::<Option<Vec<_>>>()?;
        Some(Hom { mats })
    }

    /// Checks the intertwiner law against explicit source and target.
    pub fn is_homomorphism(
        &self,
        alg: &AlgebraPresentation,
        source: &Representation,
        target: &Representation,
    ) -> bool {
        alg.quiver().arrows().iter().enumerate().all(|(ai, a)| {
            let lhs = self.mats[a.target].mul(source.map(ai));
            let rhs = target.map(ai).mul(&self.mats[a.source]);
            lhs == rhs
        })
    }

    /// Concatenated row-major entries, vertex by vertex: the coordinate
    /// vector used by Hom-space linear algebra.
    pub fn to_vector(&self, field: FieldSpec) -> Mat {
        let total: usize = self.mats.iter().map(|m| m.rows() * m.cols()).sum();
        let mut v = Mat::zero(field, total, 1);
        let mut k = 0;
        for m in &self.mats {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    v.set(k, 0, m.get(i, j));
                    k += 1;
                }
            }
        }
        v
    }

    pub fn from_vector(
        field: FieldSpec,
        source: &Representation,
        target: &Representation,
        v: &Mat,
    ) -> Hom {
        let mut mats = Vec::with_capacity(source.dims().len());
        let mut k = 0;
        for (&s, &t) in source.dims().iter().zip(target.dims()) {
            let mut m = Mat::zero(field, t, s);
            for i in 0..t {
                for j in 0..s {
                    m.set(i, j, v.get(k, 0));
                    k += 1;
                }
            }
            mats.push(m);
        }
        Hom { mats }
    }
}

/// A basis of Hom(source, target), each element an intertwiner.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub basis: Vec<Hom>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Linear combination with the given coefficients.
    pub fn combine(
        &self,
        field: FieldSpec,
        source: &Representation,
        target: &Representation,
        coeffs: &[u64],
    ) -> Hom {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut acc = Hom::zero(field, source, target);
        for (c, b) in coeffs.iter().zip(self.basis.iter()) {
            if *c != 0 {
                acc = acc.add(&b.scale(*c));
            }
        }
        acc
    }

    /// Coordinates of a hom lying in the span of this basis.
    pub fn coords_of(&self, field: FieldSpec, h: &Hom) -> Result<Mat, QrepError> {
        if self.basis.is_empty() {
            if h.is_zero() {
                return Ok(Mat::zero(field, 0, 1));
            }
            return Err(QrepError::Dimension(
                "hom does not lie in the empty hom space".into(),
            ));
        }
        let mut stacked = self.basis[0].to_vector(field);
        for b in &self.basis[1..] {
            stacked = stacked.hstack(&b.to_vector(field));
        }
        stacked
            .solve(&h.to_vector(field))?
            .ok_or_else(|| QrepError::Dimension("hom outside the hom space".into()))
    }
}

/// Basis of all intertwiners source → target, as the kernel of the linear
/// system stacking `f_tgt·M_a − N_a·f_src` over the arrows.
pub fn hom_basis(
    alg: &AlgebraPresentation,
    source: &Representation,
    target: &Representation,
) -> HomSpace {
    let q = alg.quiver();
    let f = alg.field();
    let nv = q.vertex_count();
    // unknown layout: vec(f_v) blocks in vertex order, row-major inside
    let block_sizes: Vec<usize> = (0..nv)
        .map(|v| target.dim_at(v) * source.dim_at(v))
        .collect();
    let offsets: Vec<usize> = block_sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let unknowns: usize = block_sizes.iter().sum();
    let eq_count: usize = q
        .arrows()
        .iter()
        .map(|a| target.dim_at(a.target) * source.dim_at(a.source))
        .sum();
    let mut system = Mat::zero(f, eq_count, unknowns);
    let mut row = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = source.map(ai); // source.dim(t) × source.dim(s)
        let na = target.map(ai); // target.dim(t) × target.dim(s)
        for i in 0..target.dim_at(t) {
            for j in 0..source.dim_at(s) {
                // (f_t · M_a)[i,j] = Σ_k f_t[i,k] · M_a[k,j]
                for k in 0..source.dim_at(t) {
                    let col = offsets[t] + i * source.dim_at(t) + k;
                    let v = f.add(system.get(row, col), ma.get(k, j));
                    system.set(row, col, v);
                }
                // −(N_a · f_s)[i,j] = −Σ_k N_a[i,k] · f_s[k,j]
                for k in 0..target.dim_at(s) {
                    let col = offsets[s] + k * source.dim_at(s) + j;
                    let v = f.sub(system.get(row, col), na.get(i, k));
                    system.set(row, col, v);
                }
                row += 1;
            }
        }
    }
    let ker = system.kernel_basis();
    let basis = (0..ker.dim())
        .map(|j| Hom::from_vector(f, source, target, &ker.basis().column(j)))
        .collect();
    HomSpace { basis }
}

/// The Euler form on dimension vectors: Σ_v d_v·e_v − Σ_{a: i→j} d_i·e_j.
/// For a relation-free (hereditary) algebra this equals
/// dim Hom(M, N) − dim Ext¹(M, N) for any reps with those dimension vectors.
pub fn euler_form(alg: &AlgebraPresentation, d: &[usize], e: &[usize]) -> Result<i64, QrepError> {
    if !alg.is_hereditary() {
        return Err(QrepError::NotHereditary);
    }
    let q = alg.quiver();
    assert_eq!(d.len(), q.vertex_count());
    assert_eq!(e.len(), q.vertex_count());
    let mut acc: i64 = d
        .iter()
        .zip(e.iter())
        .map(|(&a, &b)| (a * b) as i64)
        .sum();
    for a in q.arrows() {
        acc -= (d[a.source] * e[a.target]) as i64;
    }
    Ok(acc)
}

/// Trace of `l` on `n`: the sum of the images of all homomorphisms l → n,
/// equivalently the sum of the images of a Hom basis. Always a submodule;
/// zero iff Hom(l, n) = 0.
pub fn trace(
    alg: &AlgebraPresentation,
    l: &Representation,
    n: &Representation,
) -> Result<Submodule, QrepError> {
    let hs = hom_basis(alg, l, n);
    let mut spaces: Vec<_> = n
        .dims()
        .iter()
        .map(|&d| crate::gfmat::Subspace::zero(alg.field(), d))
        .collect();
    for h in &hs.basis {
        for (v, m) in h.mats().iter().enumerate() {
            spaces[v] = spaces[v].sum(&m.column_space())?;
        }
    }
    Submodule::new(alg, n, spaces)
}

/// Splits off a submodule: finds a retraction r : b → a with r·incl = id and
/// returns it together with its kernel, a complement of `a` in `b`.
///
/// The retraction system is solved exactly, so this is a decision procedure
/// for whether the extension 0 → a → b → b/a → 0 splits. When
/// Ext¹(b/a, a) = 0 (the callers' precondition) a solution always exists;
/// `NoRetraction` therefore signals a violated precondition.
pub fn split_retraction(
    alg: &AlgebraPresentation,
    b: &Representation,
    a: &Submodule,
) -> Result<(Hom, Submodule), QrepError> {
    let f = alg.field();
    let sub = submodule_rep(alg, b, a)?;
    let q = alg.quiver();
    let nv = q.vertex_count();
    let arep = &sub.rep;
    // unknowns: vec(r_v), r_v : a.dim(v) × b.dim(v)
    let block_sizes: Vec<usize> = (0..nv).map(|v| arep.dim_at(v) * b.dim_at(v)).collect();
    let offsets: Vec<usize> = block_sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let unknowns: usize = block_sizes.iter().sum();
    let intertwiner_rows: usize = q
        .arrows()
        .iter()
        .map(|arr| arep.dim_at(arr.target) * b.dim_at(arr.source))
        .sum();
    let retraction_rows: usize = (0..nv).map(|v| arep.dim_at(v) * arep.dim_at(v)).sum();
    let mut system = Mat::zero(f, intertwiner_rows + retraction_rows, unknowns);
    let mut rhs = Mat::zero(f, intertwiner_rows + retraction_rows, 1);
    let mut row = 0;
    // r_t · B_a − A_a · r_s = 0
    for (ai, arr) in q.arrows().iter().enumerate() {
        let (s, t) = (arr.source, arr.target);
        let ba = b.map(ai);
        let aa = arep.map(ai);
        for i in 0..arep.dim_at(t) {
            for j in 0..b.dim_at(s) {
                for k in 0..b.dim_at(t) {
                    let col = offsets[t] + i * b.dim_at(t) + k;
                    let v = f.add(system.get(row, col), ba.get(k, j));
                    system.set(row, col, v);
                }
                for k in 0..arep.dim_at(s) {
                    let col = offsets[s] + k * b.dim_at(s) + j;
                    let v = f.sub(system.get(row, col), aa.get(i, k));
                    system.set(row, col, v);
                }
                row += 1;
            }
        }
    }
    // r_v · incl_v = I
    for v in 0..nv {
        let inc = sub.incl.mat(v); // b.dim(v) × a.dim(v)
        for i in 0..arep.dim_at(v) {
            for j in 0..arep.dim_at(v) {
                for k in 0..b.dim_at(v) {
                    let col = offsets[v] + i * b.dim_at(v) + k;
                    let val = f.add(system.get(row, col), inc.get(k, j));
                    system.set(row, col, val);
                }
                rhs.set(row, 0, if i == j { 1 } else { 0 });
                row += 1;
            }
        }
    }
    let sol = system
        .solve(&rhs)?
        .ok_or_else(|| QrepError::NoRetraction("retraction system inconsistent".into()))?;
    let mut mats = Vec::with_capacity(nv);
    let mut k = 0;
    for v in 0..nv {
        let mut m = Mat::zero(f, arep.dim_at(v), b.dim_at(v));
        for i in 0..arep.dim_at(v) {
            for j in 0..b.dim_at(v) {
                m.set(i, j, sol.get(k, 0));
                k += 1;
            }
        }
        mats.push(m);
    }
    let r = Hom::new(mats);
    debug_assert!(r.is_homomorphism(alg, b, arep));
    let complement_spaces: Vec<_> = r.mats().iter().map(|m| m.kernel_basis()).collect();
    let complement = Submodule::new(alg, b, complement_spaces)?;
    // complement ⊕ a = b, exactly
    debug_assert!(complement.intersect(a)?.is_zero());
    debug_assert_eq!(complement.total_dim() + a.total_dim(), b.total_dim());
    Ok((r, complement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfmat::{FieldSpec, Subspace};
    use crate::qrep::quiver::Quiver;
    use crate::qrep::rep::direct_sum;

    fn gf5() -> FieldSpec {
        FieldSpec::new(5).unwrap()
    }

    fn a2_alg() -> AlgebraPresentation {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap();
        AlgebraPresentation::new(q, gf5(), vec![], 2).unwrap()
    }

    fn p1(alg: &AlgebraPresentation) -> Representation {
        Representation::new(
            vec![1, 1],
            vec![Mat::from_rows(alg.field(), &[vec![1]]).unwrap()],
        )
    }

    fn s1(alg: &AlgebraPresentation) -> Representation {
        Representation::new(vec![1, 0], vec![Mat::zero(alg.field(), 0, 1)])
    }

    fn s2(alg: &AlgebraPresentation) -> Representation {
        Representation::new(vec![0, 1], vec![Mat::zero(alg.field(), 1, 0)])
    }

    #[test]
    fn hom_dims_on_a2() {
        let alg = a2_alg();
        let (p1, s1, s2) = (p1(&alg), s1(&alg), s2(&alg));
        // P2 = S2 here
        assert_eq!(hom_basis(&alg, &s2, &p1).dim(), 1);
        assert_eq!(hom_basis(&alg, &p1, &s2).dim(), 0);
        assert_eq!(hom_basis(&alg, &s1, &p1).dim(), 0);
        assert_eq!(hom_basis(&alg, &p1, &s1).dim(), 1);
        assert_eq!(hom_basis(&alg, &p1, &p1).dim(), 1);
        assert_eq!(hom_basis(&alg, &s1, &s2).dim(), 0);
    }

    #[test]
    fn hom_contains_identity() {
        let alg = a2_alg();
        let m = p1(&alg);
        let hs = hom_basis(&alg, &m, &m);
        assert!(hs.dim() >= 1);
        let id = Hom::identity(gf5(), &m);
        assert!(hs.coords_of(gf5(), &id).is_ok());
    }

    #[test]
    fn hom_basis_elements_are_intertwiners() {
        let alg = a2_alg();
        let m = p1(&alg);
        let n = direct_sum(&alg, &[&s1(&alg), &s2(&alg)]).rep;
        for h in &hom_basis(&alg, &m, &n).basis {
            assert!(h.is_homomorphism(&alg, &m, &n));
        }
    }

    #[test]
    fn euler_form_values() {
        let alg = a2_alg();
        assert_eq!(euler_form(&alg, &[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(euler_form(&alg, &[1, 0], &[1, 0]).unwrap(), 1);
        assert_eq!(euler_form(&alg, &[1, 1], &[0, 1]).unwrap(), 0);
    }

    #[test]
    fn euler_form_needs_hereditary() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        let alg = AlgebraPresentation::new(
            q,
            gf5(),
            vec![vec![super::super::algebra::RelationTerm {
                coeff: 1,
                path: vec![0, 0],
            }]],
            2,
        )
        .unwrap();
        assert_eq!(euler_form(&alg, &[1], &[1]), Err(QrepError::NotHereditary));
    }

    #[test]
    fn trace_of_s2_on_p1_is_socle() {
        let alg = a2_alg();
        let (p1, s2) = (p1(&alg), s2(&alg));
        let t = trace(&alg, &s2, &p1).unwrap();
        assert_eq!(t.dims(), vec![0, 1]);
    }

    #[test]
    fn trace_of_p1_on_s2_is_zero() {
        let alg = a2_alg();
        let (p1, s2) = (p1(&alg), s2(&alg));
        assert!(trace(&alg, &p1, &s2).unwrap().is_zero());
    }

    #[test]
    fn trace_of_module_on_itself_is_everything() {
        let alg = a2_alg();
        let m = p1(&alg);
        assert!(trace(&alg, &m, &m).unwrap().is_full());
    }

    #[test]
    fn split_retraction_on_direct_sum() {
        let alg = a2_alg();
        let b = direct_sum(&alg, &[&s1(&alg), &s2(&alg)]).rep;
        // a = the S2 summand
        let a = Submodule::new(
            &alg,
            &b,
            vec![Subspace::zero(gf5(), 1), Subspace::full(gf5(), 1)],
        )
        .unwrap();
        let (r, complement) = split_retraction(&alg, &b, &a).unwrap();
        assert_eq!(complement.dims(), vec![1, 0]);
        assert!(complement.intersect(&a).unwrap().is_zero());
        // r restricted to a is the identity
        let sub = submodule_rep(&alg, &b, &a).unwrap();
        let restricted = r.compose(&sub.incl);
        assert_eq!(restricted, Hom::identity(gf5(), &sub.rep));
    }

    #[test]
    fn split_retraction_refuses_nonsplit_extension() {
        let alg = a2_alg();
        let b = p1(&alg);
        let socle = Submodule::new(
            &alg,
            &b,
            vec![Subspace::zero(gf5(), 1), Subspace::full(gf5(), 1)],
        )
        .unwrap();
        assert!(matches!(
            split_retraction(&alg, &b, &socle),
            Err(QrepError::NoRetraction(_))
        ));
    }

    #[test]
    fn split_retraction_diagonal_in_double() {
        let alg = a2_alg();
        let s2 = s2(&alg);
        let b = direct_sum(&alg, &[&s2, &s2]).rep;
        // diagonal copy of S2
        let diag = Subspace::from_span(&Mat::from_rows(gf5(), &[vec![1], vec![1]]).unwrap());
        let a = Submodule::new(&alg, &b, vec![Subspace::zero(gf5(), 0), diag]).unwrap();
        let (_, complement) = split_retraction(&alg, &b, &a).unwrap();
        assert_eq!(complement.dims(), vec![0, 1]);
        assert!(complement.intersect(&a).unwrap().is_zero());
        assert_eq!(complement.sum(&a).unwrap().total_dim(), 2);
    }
}
