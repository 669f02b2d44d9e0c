use super::algebra::AlgebraPresentation;
use super::hom::Hom;
use super::quiver::Path;
use super::QrepError;
use crate::gfmat::{quotient_coords, Mat, Subspace};

/// A module over a path algebra, as a representation of its quiver: one
/// dimension per vertex, one matrix per arrow (target-dim × source-dim).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepViolation {
    Shape {
        arrow: usize,
        expected: (usize, usize),
        got: (usize, usize),
    },
    Relation {
        relation: usize,
    },
    VertexCount {
        expected: usize,
        got: usize,
    },
    ArrowCount {
        expected: usize,
        got: usize,
    },
}

impl Representation {
    pub fn new(dims: Vec<usize>, maps: Vec<Mat>) -> Self {
        Representation { dims, maps }
    }

    pub fn zero(alg: &AlgebraPresentation) -> Self {
        let q = alg.quiver();
        Representation {
            dims: vec![0; q.vertex_count()],
            maps: q
                .arrows()
                .iter()
                .map(|_| Mat::zero(alg.field(), 0, 0))
                .collect(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    /// Composite of arrow maps along a path; identity for the trivial path.
    pub fn eval_path(&self, alg: &AlgebraPresentation, path: &Path) -> Mat {
        let f = alg.field();
        let mut acc = Mat::identity(f, self.dims[path.source]);
        for &a in &path.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// The full subspace at every vertex.
    pub fn full_submodule(&self, alg: &AlgebraPresentation) -> Submodule {
        Submodule {
            spaces: self
                .dims
                .iter()
                .map(|&d| Subspace::full(alg.field(), d))
                .collect(),
        }
    }

    pub fn zero_submodule(&self, alg: &AlgebraPresentation) -> Submodule {
        Submodule {
            spaces: self
                .dims
                .iter()
                .map(|&d| Subspace::zero(alg.field(), d))
                .collect(),
        }
    }
}

/// Shape and relation validation; failures come back as structured data.
pub fn validate_representation(
    alg: &AlgebraPresentation,
    rep: &Representation,
) -> Result<(), Vec<RepViolation>> {
    let q = alg.quiver();
    let mut violations = Vec::new();
    if rep.dims.len() != q.vertex_count() {
        violations.push(RepViolation::VertexCount {
            expected: q.vertex_count(),
            got: rep.dims.len(),
        });
        return Err(violations);
    }
    if rep.maps.len() != q.arrow_count() {
        violations.push(RepViolation::ArrowCount {
            expected: q.arrow_count(),
            got: rep.maps.len(),
        });
        return Err(violations);
    }
    for (ai, a) in q.arrows().iter().enumerate() {
        let expected = (rep.dims[a.target], rep.dims[a.source]);
        let got = (rep.maps[ai].rows(), rep.maps[ai].cols());
        if expected != got {
            violations.push(RepViolation::Shape {
                arrow: ai,
                expected,
                got,
            });
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    for (ri, rel) in alg.relations().iter().enumerate() {
        let (src, tgt) = alg.relation_endpoints(rel);
        let mut acc = Mat::zero(alg.field(), rep.dims[tgt], rep.dims[src]);
        for term in rel {
            let p = Path {
                source: src,
                arrows: term.path.clone(),
            };
            acc = acc.add(&rep.eval_path(alg, &p).scale(term.coeff));
        }
        if !acc.is_zero() {
            violations.push(RepViolation::Relation { relation: ri });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// A submodule: one subspace per vertex, closed under the arrow maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    spaces: Vec<Subspace>,
}

impl Submodule {
    /// Checks arrow closure: maps[a]·spaces[src] ⊆ spaces[tgt].
    pub fn new(
        alg: &AlgebraPresentation,
        rep: &Representation,
        spaces: Vec<Subspace>,
    ) -> Result<Self, QrepError> {
        let q = alg.quiver();
        if spaces.len() != q.vertex_count() {
            return Err(QrepError::Dimension(format!(
                "expected {} vertex spaces, got {}",
                q.vertex_count(),
                spaces.len()
            )));
        }
        for (v, s) in spaces.iter().enumerate() {
            if s.ambient_dim() != rep.dims[v] {
                return Err(QrepError::Dimension(format!(
                    "vertex {v}: ambient {} vs module dim {}",
                    s.ambient_dim(),
                    rep.dims[v]
                )));
            }
        }
        for (ai, a) in q.arrows().iter().enumerate() {
            let image = rep.maps[ai].mul(spaces[a.source].basis()).column_space();
            if !image.is_contained_in(&spaces[a.target])? {
                return Err(QrepError::NotASubmodule(format!(
                    "arrow {} does not preserve the subspaces",
                    a.name
                )));
            }
        }
        Ok(Submodule { spaces })
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn space(&self, v: usize) -> &Subspace {
        &self.spaces[v]
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dim()).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.spaces.iter().all(|s| s.is_full())
    }

    pub fn is_contained_in(&self, other: &Submodule) -> Result<bool, QrepError> {
        for (a, b) in self.spaces.iter().zip(other.spaces.iter()) {
            if !a.is_contained_in(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule, QrepError> {
        let spaces = self
            .spaces
            .iter()
            .zip(other.spaces.iter())
            .map(|(a, b)| a.sum(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Submodule { spaces })
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule, QrepError> {
        let spaces = self
            .spaces
            .iter()
            .zip(other.spaces.iter())
            .map(|(a, b)| a.intersect(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Submodule { spaces })
    }
}

/// A submodule realized as a representation in its own right, with the
/// inclusion homomorphism.
#[derive(Debug, Clone)]
pub struct SubRep {
    pub rep: Representation,
    pub incl: Hom,
}

/// Restricts the ambient maps to the subspace bases. The coordinates are the
/// canonical basis columns of each subspace.
pub fn submodule_rep(
    alg: &AlgebraPresentation,
    rep: &Representation,
    sub: &Submodule,
) -> Result<SubRep, QrepError> {
    let q = alg.quiver();
    let dims: Vec<usize> = sub.spaces.iter().map(|s| s.dim()).collect();
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (ai, a) in q.arrows().iter().enumerate() {
        let image = rep.maps[ai].mul(sub.spaces[a.source].basis());
        let coords = sub.spaces[a.target]
            .basis()
            .solve(&image)?
            .ok_or_else(|| QrepError::NotASubmodule(format!("arrow {}", a.name)))?;
        maps.push(coords);
    }
    let srep = Representation::new(dims, maps);
    let incl = Hom::new(
        sub.spaces
            .iter()
            .map(|s| s.basis().clone())
            .collect::<Vec<_>>(),
    );
    Ok(SubRep { rep: srep, incl })
}

/// The quotient representation M/U with its canonical projection.
pub fn quotient_rep(
    alg: &AlgebraPresentation,
    rep: &Representation,
    sub: &Submodule,
) -> Result<(Representation, Hom), QrepError> {
    let (q, p, _) = quotient_rep_full(alg, rep, sub)?;
    Ok((q, p))
}

/// Like [`quotient_rep`] but also returns the per-vertex sections of the
/// projection. The sections are vertexwise linear only, not a homomorphism,
/// but satisfy proj_v · sect_v = id, which is what idempotent descent and
/// similar constructions need.
pub fn quotient_rep_full(
    alg: &AlgebraPresentation,
    rep: &Representation,
    sub: &Submodule,
) -> Result<(Representation, Hom, Vec<Mat>), QrepError> {
    let q = alg.quiver();
    let f = alg.field();
    let mut projs = Vec::with_capacity(q.vertex_count());
    let mut sects = Vec::with_capacity(q.vertex_count());
    for (v, s) in sub.spaces.iter().enumerate() {
        let (p, sec) = quotient_coords(f, rep.dims[v], s);
        projs.push(p);
        sects.push(sec);
    }
    let dims: Vec<usize> = projs.iter().map(|p| p.rows()).collect();
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (ai, a) in q.arrows().iter().enumerate() {
        maps.push(projs[a.target].mul(&rep.maps[ai]).mul(&sects[a.source]));
    }
    Ok((Representation::new(dims, maps), Hom::new(projs), sects))
}

/// Arrow-action closure of per-vertex spans: the smallest submodule
/// containing the given vectors. Vectors are columns grouped by vertex.
pub fn sub_generated(
    alg: &AlgebraPresentation,
    rep: &Representation,
    vectors: &[(usize, Mat)],
) -> Result<Submodule, QrepError> {
    let q = alg.quiver();
    let f = alg.field();
    let mut spaces: Vec<Subspace> = rep
        .dims
        .iter()
        .map(|&d| Subspace::zero(f, d))
        .collect();
    for (v, col) in vectors {
        if col.rows() != rep.dims[*v] {
            return Err(QrepError::Dimension(format!(
                "vector at vertex {v} has {} rows, module has {}",
                col.rows(),
                rep.dims[*v]
            )));
        }
        spaces[*v] = spaces[*v].sum(&col.column_space())?;
    }
    loop {
        let mut changed = false;
        for (ai, a) in q.arrows().iter().enumerate() {
            let image = rep.maps[ai].mul(spaces[a.source].basis()).column_space();
            let merged = spaces[a.target].sum(&image)?;
            if merged.dim() != spaces[a.target].dim() {
                spaces[a.target] = merged;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Submodule::new(alg, rep, spaces)
}

/// Image of a homomorphism into `target`, automatically arrow-closed.
pub fn image_submodule(
    alg: &AlgebraPresentation,
    target: &Representation,
    f: &Hom,
) -> Result<Submodule, QrepError> {
    let spaces: Vec<Subspace> = f.mats().iter().map(|m| m.column_space()).collect();
    Submodule::new(alg, target, spaces)
}

/// Preimage {x : f(x) ∈ sub} of a submodule of f's target, computed
/// vertexwise and verified arrow-closed.
pub fn preimage(
    alg: &AlgebraPresentation,
    source: &Representation,
    f: &Hom,
    sub: &Submodule,
) -> Result<Submodule, QrepError> {
    let field = alg.field();
    let mut spaces = Vec::with_capacity(source.dims.len());
    for (v, s) in sub.spaces.iter().enumerate() {
        let (proj, _) = quotient_coords(field, s.ambient_dim(), s);
        spaces.push(proj.mul(f.mat(v)).kernel_basis());
    }
    Submodule::new(alg, source, spaces)
}

/// Block-diagonal direct sum with the biproduct injections and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub rep: Representation,
    pub injections: Vec<Hom>,
    pub projections: Vec<Hom>,
}

pub fn direct_sum(alg: &AlgebraPresentation, parts: &[&Representation]) -> DirectSum {
    let q = alg.quiver();
    let f = alg.field();
    let nv = q.vertex_count();
    let dims: Vec<usize> = (0..nv)
        .map(|v| parts.iter().map(|r| r.dims[v]).sum())
        .collect();
    let offsets: Vec<Vec<usize>> = (0..nv)
        .map(|v| {
            let mut acc = 0;
            parts
                .iter()
                .map(|r| {
                    let o = acc;
                    acc += r.dims[v];
                    o
                })
                .collect()
        })
        .collect();
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (ai, a) in q.arrows().iter().enumerate() {
        let mut m = Mat::zero(f, dims[a.target], dims[a.source]);
        for (pi, r) in parts.iter().enumerate() {
            let block = &r.maps[ai];
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    m.set(
                        offsets[a.target][pi] + i,
                        offsets[a.source][pi] + j,
                        block.get(i, j),
                    );
                }
            }
        }
        maps.push(m);
    }
    let rep = Representation::new(dims.clone(), maps);
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for (pi, r) in parts.iter().enumerate() {
        let mut inj = Vec::with_capacity(nv);
        let mut prj = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut i_m = Mat::zero(f, dims[v], r.dims[v]);
            let mut p_m = Mat::zero(f, r.dims[v], dims[v]);
            for k in 0..r.dims[v] {
                i_m.set(offsets[v][pi] + k, k, 1);
                p_m.set(k, offsets[v][pi] + k, 1);
            }
            inj.push(i_m);
            prj.push(p_m);
        }
        injections.push(Hom::new(inj));
        projections.push(Hom::new(prj));
    }
    DirectSum {
        rep,
        injections,
        projections,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfmat::FieldSpec;
    use crate::qrep::quiver::Quiver;

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

    #[test]
    fn validate_p1_ok() {
        let alg = a2_alg();
        assert!(validate_representation(&alg, &p1(&alg)).is_ok());
    }

    #[test]
    fn validate_shape_violation() {
        let alg = a2_alg();
        let bad = Representation::new(vec![1, 1], vec![Mat::zero(gf5(), 2, 1)]);
        let err = validate_representation(&alg, &bad).unwrap_err();
        assert!(matches!(err[0], RepViolation::Shape { .. }));
    }

    #[test]
    fn validate_relation_violation() {
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
        // x acts invertibly, so x^2 != 0
        let bad = Representation::new(vec![1], vec![Mat::from_rows(gf5(), &[vec![1]]).unwrap()]);
        let err = validate_representation(&alg, &bad).unwrap_err();
        assert!(matches!(err[0], RepViolation::Relation { relation: 0 }));
        // x acting as zero satisfies it
        let good = Representation::new(vec![1], vec![Mat::zero(gf5(), 1, 1)]);
        assert!(validate_representation(&alg, &good).is_ok());
    }

    #[test]
    fn submodule_rejects_non_closed() {
        let alg = a2_alg();
        let m = p1(&alg);
        // the vertex-1 line alone is not arrow-closed in P1
        let spaces = vec![Subspace::full(gf5(), 1), Subspace::zero(gf5(), 1)];
        assert!(matches!(
            Submodule::new(&alg, &m, spaces),
            Err(QrepError::NotASubmodule(_))
        ));
        // the socle is
        let socle = vec![Subspace::zero(gf5(), 1), Subspace::full(gf5(), 1)];
        assert!(Submodule::new(&alg, &m, socle).is_ok());
    }

    #[test]
    fn sub_generated_closes_under_arrows() {
        let alg = a2_alg();
        let m = p1(&alg);
        let top = Mat::from_rows(gf5(), &[vec![1]]).unwrap();
        let s = sub_generated(&alg, &m, &[(0, top)]).unwrap();
        // generating by the top vector of P1 drags in the socle
        assert_eq!(s.dims(), vec![1, 1]);
    }

    #[test]
    fn quotient_of_p1_by_socle_is_s1() {
        let alg = a2_alg();
        let m = p1(&alg);
        let socle = Submodule::new(
            &alg,
            &m,
            vec![Subspace::zero(gf5(), 1), Subspace::full(gf5(), 1)],
        )
        .unwrap();
        let (qrep, proj) = quotient_rep(&alg, &m, &socle).unwrap();
        assert_eq!(qrep.dims(), &[1, 0]);
        assert!(proj.mat(0).rows() == 1);
    }

    #[test]
    fn preimage_under_projection_to_self() {
        let alg = a2_alg();
        let m = p1(&alg);
        let id = Hom::identity(alg.field(), &m);
        let socle = Submodule::new(
            &alg,
            &m,
            vec![Subspace::zero(gf5(), 1), Subspace::full(gf5(), 1)],
        )
        .unwrap();
        let pre = preimage(&alg, &m, &id, &socle).unwrap();
        assert_eq!(pre, socle);
    }

    #[test]
    fn direct_sum_biproduct_laws() {
        let alg = a2_alg();
        let s1 = Representation::new(vec![1, 0], vec![Mat::zero(gf5(), 0, 1)]);
        let s2 = Representation::new(vec![0, 1], vec![Mat::zero(gf5(), 1, 0)]);
        let ds = direct_sum(&alg, &[&s1, &s2]);
        assert_eq!(ds.rep.dims(), &[1, 1]);
        for i in 0..2 {
            for j in 0..2 {
                let comp = ds.projections[i].compose(&ds.injections[j]);
                if i == j {
                    let src = if i == 0 { &s1 } else { &s2 };
                    assert_eq!(comp, Hom::identity(gf5(), src));
                } else {
                    assert!(comp.is_zero());
                }
            }
        }
        // sum of inj∘proj is the identity on the sum
        let total = ds.injections[0]
            .compose(&ds.projections[0])
            .add(&ds.injections[1].compose(&ds.projections[1]));
        assert_eq!(total, Hom::identity(gf5(), &ds.rep));
    }

    #[test]
    fn direct_sum_of_p1_twice() {
        let alg = a2_alg();
        let m = p1(&alg);
        let ds = direct_sum(&alg, &[&m, &m]);
        assert_eq!(ds.rep.dims(), &[2, 2]);
        assert!(validate_representation(&alg, &ds.rep).is_ok());
    }

    #[test]
    fn empty_direct_sum_is_zero() {
        let alg = a2_alg();
        let ds = direct_sum(&alg, &[]);
        assert!(ds.rep.is_zero());
    }
}
