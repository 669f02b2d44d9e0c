use super::algebra::AlgebraPresentation;
use super::hom::{hom_basis, Hom};
use super::quiver::Path;
use super::rep::{submodule_rep, validate_representation, Representation, Submodule};
use super::QrepError;
use crate::gfmat::{quotient_coords, Mat, Subspace};

/// The simple module at a vertex: one-dimensional there, zero elsewhere.
pub fn simple(alg: &AlgebraPresentation, v: usize) -> Representation {
    let q = alg.quiver();
    let f = alg.field();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|x| usize::from(x == v)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| Mat::zero(f, dims[a.target], dims[a.source]))
        .collect();
    Representation::new(dims, maps)
}

/// The indecomposable projective at a vertex together with its path-basis
/// coordinates, which the cover construction needs.
#[derive(Debug, Clone)]
pub struct ProjectiveData {
    pub rep: Representation,
    pub source_vertex: usize,
    /// Paths from the vertex with length < nilpotency bound, grouped by
    /// endpoint; the ambient coordinates before killing the relation span.
    pub paths: Vec<Vec<Path>>,
    /// Per-vertex projection from path coordinates onto the quotient.
    pub proj: Vec<Mat>,
    /// Per-vertex section of the projection.
    pub sect: Vec<Mat>,
}

/// Path basis from `v` modulo the relation ideal, truncated at the
/// nilpotency bound; the arrow action appends arrows to paths.
pub fn projective(alg: &AlgebraPresentation, v: usize) -> Representation {
    projective_data(alg, v).rep
}

pub fn projective_data(alg: &AlgebraPresentation, v: usize) -> ProjectiveData {
    let q = alg.quiver();
    let f = alg.field();
    let bound = alg.nilpotency_bound();
    let nv = q.vertex_count();
    let all_paths = q.paths_from(v, bound);
    let mut paths: Vec<Vec<Path>> = vec![Vec::new(); nv];
    for p in all_paths {
        let t = p.target(q);
        paths[t].push(p);
    }
    // span of the relation ideal inside each truncated path space:
    // w · ρ · u with w from v to the relation source and u onward, terms of
    // length >= bound dropped (they lie in the ideal by the certificate)
    let mut ideal_vectors: Vec<Vec<Mat>> = vec![Vec::new(); nv];
    for rel in alg.relations() {
        let (rsrc, rtgt) = alg.relation_endpoints(rel);
        for w in paths.iter().flatten().filter(|w| w.target(q) == rsrc) {
            for u in q.paths_from(rtgt, bound) {
                let x = u.target(q);
                let mut vec = Mat::zero(f, paths[x].len(), 1);
                let mut nonzero = false;
                for term in rel {
                    let total = w.len() + term.path.len() + u.len();
                    if total >= bound {
                        continue;
                    }
                    let mut arrows = w.arrows.clone();
                    arrows.extend_from_slice(&term.path);
                    arrows.extend_from_slice(&u.arrows);
                    let composite = Path { source: v, arrows };
                    let idx = paths[x]
                        .iter()
                        .position(|p| *p == composite)
                        .expect("composite path is in the truncated basis");
                    vec.set(idx, 0, f.add(vec.get(idx, 0), term.coeff));
                    nonzero = true;
                }
                if nonzero && !vec.is_zero() {
                    ideal_vectors[x].push(vec);
                }
            }
        }
    }
    let mut proj = Vec::with_capacity(nv);
    let mut sect = Vec::with_capacity(nv);
    let mut dims = Vec::with_capacity(nv);
    for x in 0..nv {
        let ambient = paths[x].len();
        let span = if ideal_vectors[x].is_empty() {
            Subspace::zero(f, ambient)
        } else {
            let mut m = ideal_vectors[x][0].clone();
            for vcol in &ideal_vectors[x][1..] {
                m = m.hstack(vcol);
            }
            Subspace::from_span(&m)
        };
        let (p, s) = quotient_coords(f, ambient, &span);
        dims.push(p.rows());
        proj.push(p);
        sect.push(s);
    }
    // arrow action: append the arrow, dropping paths that reach the bound
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (ai, a) in q.arrows().iter().enumerate() {
        let (x, y) = (a.source, a.target);
        let mut append = Mat::zero(f, paths[y].len(), paths[x].len());
        for (pi, p) in paths[x].iter().enumerate() {
            if p.len() + 1 >= bound {
                continue;
            }
            let ext = p.extended(q, ai);
            let idx = paths[y]
                .iter()
                .position(|c| *c == ext)
                .expect("extended path is in the truncated basis");
            append.set(idx, pi, 1);
        }
        maps.push(proj[y].mul(&append).mul(&sect[x]));
    }
    let rep = Representation::new(dims, maps);
    debug_assert!(validate_representation(alg, &rep).is_ok());
    ProjectiveData {
        rep,
        source_vertex: v,
        paths,
        proj,
        sect,
    }
}

/// The radical: the sum of the images of all arrow maps.
pub fn radical(
    alg: &AlgebraPresentation,
    m: &Representation,
) -> Result<Submodule, QrepError> {
    let q = alg.quiver();
    let f = alg.field();
    let mut spaces: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::zero(f, d)).collect();
    for (ai, a) in q.arrows().iter().enumerate() {
        spaces[a.target] = spaces[a.target].sum(&m.map(ai).column_space())?;
    }
    Submodule::new(alg, m, spaces)
}

/// Per-vertex dimensions of m / rad m.
pub fn top_dims(alg: &AlgebraPresentation, m: &Representation) -> Result<Vec<usize>, QrepError> {
    let rad = radical(alg, m)?;
    Ok(m.dims()
        .iter()
        .zip(rad.spaces())
        .map(|(&d, s)| d - s.dim())
        .collect())
}

/// A projective cover: P0 = ⊕ P_v^{top multiplicity} with a surjection onto
/// the module lifting a chosen basis of the top.
#[derive(Debug, Clone)]
pub struct Cover {
    pub p0: Representation,
    pub epi: Hom,
    pub kernel: Submodule,
}

pub fn projective_cover(
    alg: &AlgebraPresentation,
    m: &Representation,
) -> Result<Cover, QrepError> {
    let q = alg.quiver();
    let f = alg.field();
    let nv = q.vertex_count();
    if m.is_zero() {
        let p0 = Representation::zero(alg);
        let epi = Hom::zero(f, &p0, m);
        let kernel = p0.zero_submodule(alg);
        return Ok(Cover { p0, epi, kernel });
    }
    let rad = radical(alg, m)?;
    // generators: section vectors of m_v / rad_v, per vertex
    let mut blocks: Vec<(usize, Mat)> = Vec::new(); // (vertex, generator column)
    for v in 0..nv {
        let (_, sec) = quotient_coords(f, m.dim_at(v), rad.space(v));
        for j in 0..sec.cols() {
            blocks.push((v, sec.column(j)));
        }
    }
    let proj_data: Vec<ProjectiveData> = (0..nv).map(|v| projective_data(alg, v)).collect();
    // assemble P0 and the epi block by block
    let mut dims = vec![0usize; nv];
    for (v, _) in &blocks {
        for x in 0..nv {
            dims[x] += proj_data[*v].rep.dim_at(x);
        }
    }
    let mut maps: Vec<Mat> = q
        .arrows()
        .iter()
        .map(|a| Mat::zero(f, dims[a.target], dims[a.source]))
        .collect();
    let mut epi_mats: Vec<Mat> = (0..nv).map(|x| Mat::zero(f, m.dim_at(x), dims[x])).collect();
    let mut offset = vec![0usize; nv];
    for (v, gen) in &blocks {
        let pd = &proj_data[*v];
        for (ai, a) in q.arrows().iter().enumerate() {
            let block = pd.rep.map(ai);
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    maps[ai].set(
                        offset[a.target] + i,
                        offset[a.source] + j,
                        block.get(i, j),
                    );
                }
            }
        }
        for x in 0..nv {
            // columns of the path-level map: each path π ↦ M_π(gen)
            let mut path_cols = Mat::zero(f, m.dim_at(x), pd.paths[x].len());
            for (pi, p) in pd.paths[x].iter().enumerate() {
                let img = m.eval_path(alg, p).mul(gen);
                for i in 0..m.dim_at(x) {
                    path_cols.set(i, pi, img.get(i, 0));
                }
            }
            let block = path_cols.mul(&pd.sect[x]);
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    epi_mats[x].set(i, offset[x] + j, block.get(i, j));
                }
            }
        }
        for x in 0..nv {
            offset[x] += pd.rep.dim_at(x);
        }
    }
    let p0 = Representation::new(dims, maps);
    let epi = Hom::new(epi_mats);
    debug_assert!(validate_representation(alg, &p0).is_ok());
    debug_assert!(epi.is_homomorphism(alg, &p0, m));
    // surjectivity per vertex (Nakayama: the top is covered)
    for x in 0..nv {
        if epi.mat(x).rank() != m.dim_at(x) {
            return Err(QrepError::Dimension(format!(
                "cover is not surjective at vertex {x}"
            )));
        }
    }
    let kernel_spaces: Vec<Subspace> = epi.mats().iter().map(|mt| mt.kernel_basis()).collect();
    let kernel = Submodule::new(alg, &p0, kernel_spaces)?;
    Ok(Cover { p0, epi, kernel })
}

/// A projective presentation P1 → P0 → m → 0: the cover of m plus the cover
/// of the kernel, composed into the differential d.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub p0: Representation,
    pub epi: Hom,
    pub p1: Representation,
    pub d: Hom,
}

pub fn presentation(
    alg: &AlgebraPresentation,
    m: &Representation,
) -> Result<Presentation, QrepError> {
    let cover = projective_cover(alg, m)?;
    let k = submodule_rep(alg, &cover.p0, &cover.kernel)?;
    let kcover = projective_cover(alg, &k.rep)?;
    let d = k.incl.compose(&kcover.epi);
    Ok(Presentation {
        p0: cover.p0,
        epi: cover.epi,
        p1: kcover.p0,
        d,
    })
}

/// Ext¹(m, n) as the cokernel of Hom(P0, n) → Hom(K, n) where K is the
/// kernel of a projective cover of m: the dimension plus homs K → n whose
/// classes form a basis of the cokernel.
#[derive(Debug, Clone)]
pub struct Ext1 {
    pub dim: usize,
    /// The presentation kernel the representatives map out of.
    pub kernel: Representation,
    pub representatives: Vec<Hom>,
}

pub fn ext1_data(
    alg: &AlgebraPresentation,
    m: &Representation,
    n: &Representation,
) -> Result<Ext1, QrepError> {
    let f = alg.field();
    let empty = |kernel: Representation| Ext1 {
        dim: 0,
        kernel,
        representatives: Vec::new(),
    };
    if m.is_zero() || n.is_zero() {
        return Ok(empty(Representation::zero(alg)));
    }
    let cover = projective_cover(alg, m)?;
    if cover.kernel.is_zero() {
        return Ok(empty(Representation::zero(alg))); // m is projective
    }
    let k = submodule_rep(alg, &cover.p0, &cover.kernel)?;
    let hom_k = hom_basis(alg, &k.rep, n);
    if hom_k.dim() == 0 {
        return Ok(empty(k.rep));
    }
    let hom_p0 = hom_basis(alg, &cover.p0, n);
    // image of the restriction map, in Hom(K, n) coordinates
    let image = if hom_p0.dim() == 0 {
        crate::gfmat::Subspace::zero(f, hom_k.dim())
    } else {
        let mut cols = Mat::zero(f, hom_k.dim(), 0);
        for h in &hom_p0.basis {
            let coords = hom_k.coords_of(f, &h.compose(&k.incl))?;
            cols = cols.hstack(&coords);
        }
        cols.column_space()
    };
    let (_, sect) = quotient_coords(f, hom_k.dim(), &image);
    let representatives: Vec<Hom> = (0..sect.cols())
        .map(|j| {
            let coeffs: Vec<u64> = (0..hom_k.dim()).map(|i| sect.get(i, j)).collect();
            hom_k.combine(f, &k.rep, n, &coeffs)
        })
        .collect();
    Ok(Ext1 {
        dim: hom_k.dim() - image.dim(),
        kernel: k.rep,
        representatives,
    })
}

/// dim Ext¹(m, n), computed from a projective cover of m as the cokernel of
/// Hom(P0, n) → Hom(K, n) where K is the kernel of the cover.
pub fn ext1_dim(
    alg: &AlgebraPresentation,
    m: &Representation,
    n: &Representation,
) -> Result<usize, QrepError> {
    if m.is_zero() || n.is_zero() {
        return Ok(0);
    }
    let f = alg.field();
    let cover = projective_cover(alg, m)?;
    if cover.kernel.is_zero() {
        return Ok(0); // m is projective
    }
    let k = submodule_rep(alg, &cover.p0, &cover.kernel)?;
    let hom_k = hom_basis(alg, &k.rep, n);
    if hom_k.dim() == 0 {
        return Ok(0);
    }
    let hom_p0 = hom_basis(alg, &cover.p0, n);
    if hom_p0.dim() == 0 {
        return Ok(hom_k.dim());
    }
    // restriction map Hom(P0, n) → Hom(K, n) in coordinates
    let mut restricted = hom_p0.basis[0].compose(&k.incl).to_vector(f);
    for h in &hom_p0.basis[1..] {
        restricted = restricted.hstack(&h.compose(&k.incl).to_vector(f));
    }
    Ok(hom_k.dim() - restricted.rank())
}
