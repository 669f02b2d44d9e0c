//! JSON wire formats and the workspace loader.
//!
//! A workspace is one self-describing document:
//!
//! ```json
//! {
//!   "algebra": {
//!     "quiver": {"vertices": ["1", "2"],
//!                "arrows": [{"name": "a", "from": "1", "to": "2"}]},
//!     "p": 5,
//!     "relations": [[{"coeff": 1, "path": ["a", "b"]}]],
//!     "nilpotency_bound": 2
//!   },
//!   "modules": {"P1": {"dims": {"1": 1, "2": 1}, "maps": {"a": [[1]]}}},
//!   "systems": {"main": {"omega": ["1", "2"],
//!                        "preorder_pairs": [["2", "1"]],
//!                        "delta": {"1": "P1", "2": "P2"}}},
//!   "filtrations": {"f": {"module": "P1",
//!                          "chain": [{"spaces": {"2": [[1]]}}],
//!                          "factors": [[{"omega": "2", "mult": 1}]]}},
//!   "endomorphisms": {"e": {"module": "M", "maps": {"1": [[1]]}}},
//!   "symbolic": {"s": {"steps": [{"omega": "1", "card": {"finite": 2}}]}}
//! }
//! ```
//!
//! Matrices are row-major arrays of arrays of nonnegative integers < p.
//! Chain subspaces are given by basis vectors (one array per vector). Paths
//! list arrow names in traversal order. `delta` values are module names or
//! inline representations. Vertices missing from `dims` have dimension zero;
//! arrows missing from `maps` act as the (forced) zero matrix.

use crate::filt::Filtration;
use crate::gfmat::{FieldSpec, Mat, Subspace};
use crate::hsys::HomologicalSystem;
use crate::preord::Preorder;
use crate::qrep::{
    validate_representation, AlgebraPresentation, Hom, Quiver, RelationTerm, Representation,
    Submodule,
};
use crate::symb::Cardinal;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
    #[error("unresolved reference: {kind} {name:?}")]
    Unresolved { kind: &'static str, name: String },
}

fn invalid(context: impl Into<String>, message: impl std::fmt::Display) -> JsonError {
    JsonError::Invalid {
        context: context.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationTermJson {
    pub coeff: u64,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub quiver: QuiverJson,
    pub p: u64,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTermJson>>,
    pub nilpotency_bound: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepJson {
    #[serde(default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<u64>>>,
}

/// A representation by name or inline.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepRef {
    Name(String),
    Inline(RepJson),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemJson {
    pub omega: Vec<String>,
    #[serde(default)]
    pub preorder_pairs: Vec<(String, String)>,
    pub delta: BTreeMap<String, RepRef>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainStepJson {
    #[serde(default)]
    pub spaces: BTreeMap<String, Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorJson {
    pub omega: String,
    pub mult: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiltrationJson {
    pub module: String,
    pub chain: Vec<ChainStepJson>,
    #[serde(default)]
    pub factors: Option<Vec<Vec<FactorJson>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EndoJson {
    pub module: String,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolicStepJson {
    pub omega: String,
    pub card: Cardinal,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolicJson {
    pub steps: Vec<SymbolicStepJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WorkspaceJson {
    pub algebra: AlgebraJson,
    #[serde(default)]
    pub modules: BTreeMap<String, RepJson>,
    #[serde(default)]
    pub systems: BTreeMap<String, SystemJson>,
    #[serde(default)]
    pub filtrations: BTreeMap<String, FiltrationJson>,
    #[serde(default)]
    pub endomorphisms: BTreeMap<String, EndoJson>,
    #[serde(default)]
    pub symbolic: BTreeMap<String, SymbolicJson>,
}

/// Standalone preorder document for `linearize`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreorderJson {
    pub carrier: Vec<serde_json::Value>,
    #[serde(default)]
    pub pairs: Vec<(serde_json::Value, serde_json::Value)>,
}

fn merge_section<T>(
    acc: &mut BTreeMap<String, T>,
    other: BTreeMap<String, T>,
    kind: &str,
) -> Result<(), JsonError> {
    for (name, value) in other {
        if acc.contains_key(&name) {
            return Err(invalid(
                format!("{kind} {name:?}"),
                "defined in more than one document",
            ));
        }
        acc.insert(name, value);
    }
    Ok(())
}

fn value_label(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn parse_preorder(doc: &PreorderJson) -> Result<Preorder<String>, JsonError> {
    let carrier: Vec<String> = doc.carrier.iter().map(value_label).collect();
    let pairs: Vec<(String, String)> = doc
        .pairs
        .iter()
        .map(|(a, b)| (value_label(a), value_label(b)))
        .collect();
    Preorder::close_transitive(carrier, &pairs).map_err(|e| invalid("preorder", e))
}

/// Strict matrix parse: the exact shape, every entry < p.
fn parse_matrix(
    field: FieldSpec,
    context: &str,
    rows: usize,
    cols: usize,
    data: &[Vec<u64>],
) -> Result<Mat, JsonError> {
    if data.len() != rows {
        return Err(invalid(
            context,
            format!("expected {rows} rows, got {}", data.len()),
        ));
    }
    for (i, row) in data.iter().enumerate() {
        if row.len() != cols {
            return Err(invalid(
                context,
                format!("row {i} has {} entries, expected {cols}", row.len()),
            ));
        }
        for &e in row {
            if e >= field.p() {
                return Err(invalid(
                    context,
                    format!("entry {e} out of range for GF({})", field.p()),
                ));
            }
        }
    }
    Mat::from_rows_sized(field, rows, cols, data).map_err(|e| invalid(context, e))
}

pub fn parse_algebra(doc: &AlgebraJson) -> Result<AlgebraPresentation, JsonError> {
    let quiver = Quiver::new(
        doc.quiver.vertices.clone(),
        doc.quiver
            .arrows
            .iter()
            .map(|a| (a.name.clone(), a.from.clone(), a.to.clone()))
            .collect(),
    )
    .map_err(|e| invalid("quiver", e))?;
    let field = FieldSpec::new(doc.p).map_err(|e| invalid("algebra.p", e))?;
    let mut relations = Vec::new();
    for (ri, rel) in doc.relations.iter().enumerate() {
        let mut terms = Vec::new();
        for term in rel {
            let mut path = Vec::new();
            for name in &term.path {
                let ai = quiver
                    .arrow_index(name)
                    .ok_or_else(|| invalid(format!("relation {ri}"), format!("unknown arrow {name}")))?;
                path.push(ai);
            }
            terms.push(RelationTerm {
                coeff: term.coeff,
                path,
            });
        }
        relations.push(terms);
    }
    AlgebraPresentation::new(quiver, field, relations, doc.nilpotency_bound)
        .map_err(|e| invalid("algebra", e))
}

pub fn parse_representation(
    alg: &AlgebraPresentation,
    context: &str,
    doc: &RepJson,
) -> Result<Representation, JsonError> {
    let q = alg.quiver();
    let f = alg.field();
    let mut dims = vec![0usize; q.vertex_count()];
    for (label, &d) in &doc.dims {
        let v = q
            .vertex_index(label)
            .ok_or_else(|| invalid(context, format!("unknown vertex {label}")))?;
        dims[v] = d;
    }
    let mut maps = Vec::with_capacity(q.arrow_count());
    for a in q.arrows() {
        let rows = dims[a.target];
        let cols = dims[a.source];
        match doc.maps.get(&a.name) {
            Some(data) => maps.push(parse_matrix(
                f,
                &format!("{context}.maps.{}", a.name),
                rows,
                cols,
                data,
            )?),
            None => maps.push(Mat::zero(f, rows, cols)),
        }
    }
    for name in doc.maps.keys() {
        if q.arrow_index(name).is_none() {
            return Err(invalid(context, format!("unknown arrow {name}")));
        }
    }
    let rep = Representation::new(dims, maps);
    validate_representation(alg, &rep)
        .map_err(|v| invalid(context, format!("invalid representation: {v:?}")))?;
    Ok(rep)
}

pub fn representation_to_json(alg: &AlgebraPresentation, rep: &Representation) -> RepJson {
    let q = alg.quiver();
    let mut dims = BTreeMap::new();
    for (v, label) in q.vertices().iter().enumerate() {
        if rep.dim_at(v) > 0 {
            dims.insert(label.clone(), rep.dim_at(v));
        }
    }
    let mut maps = BTreeMap::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let m = rep.map(ai);
        if !m.is_zero() {
            maps.insert(a.name.clone(), m.to_rows());
        }
    }
    RepJson { dims, maps }
}

/// A filtration bound to a named module. Factor claims stay by omega label
/// until a command binds them to a system.
#[derive(Debug, Clone)]
pub struct LoadedFiltration {
    pub module_name: String,
    pub filtration: Filtration,
    pub factor_claims: Option<Vec<Vec<FactorJson>>>,
}

#[derive(Debug, Clone)]
pub struct LoadedEndo {
    pub module_name: String,
    pub hom: Hom,
}

/// A fully loaded and cross-resolved workspace. Systems are structurally
/// checked here; axiom validation runs on demand.
#[derive(Debug)]
pub struct Workspace {
    pub algebra: AlgebraPresentation,
    pub modules: BTreeMap<String, Representation>,
    pub systems: BTreeMap<String, HomologicalSystem>,
    pub filtrations: BTreeMap<String, LoadedFiltration>,
    pub endomorphisms: BTreeMap<String, LoadedEndo>,
    pub symbolic: BTreeMap<String, Vec<(String, Cardinal)>>,
}

impl Workspace {
    pub fn from_json(text: &str) -> Result<Workspace, JsonError> {
        let doc: WorkspaceJson = serde_json::from_str(text)?;
        Workspace::from_doc(&doc)
    }

    /// Loads a workspace from a single document or from a directory of
    /// documents. Directory documents must share the algebra; their named
    /// sections are merged and duplicate names are rejected.
    pub fn from_path(path: &std::path::Path) -> Result<Workspace, JsonError> {
        let read = |p: &std::path::Path| -> Result<String, JsonError> {
            std::fs::read_to_string(p).map_err(|e| invalid(p.display().to_string(), e))
        };
        if !path.is_dir() {
            return Workspace::from_json(&read(path)?);
        }
        let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(path)
            .map_err(|e| invalid(path.display().to_string(), e))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
            .collect();
        files.sort();
        if files.is_empty() {
            return Err(invalid(
                path.display().to_string(),
                "directory contains no .json documents",
            ));
        }
        let mut merged: Option<WorkspaceJson> = None;
        for file in &files {
            let doc: WorkspaceJson = serde_json::from_str(&read(file)?)?;
            match &mut merged {
                None => merged = Some(doc),
                Some(acc) => {
                    let acc_algebra = serde_json::to_value(&acc.algebra)?;
                    let doc_algebra = serde_json::to_value(&doc.algebra)?;
                    if acc_algebra != doc_algebra {
                        return Err(invalid(
                            file.display().to_string(),
                            "algebra differs from the other documents in the directory",
                        ));
                    }
                    merge_section(&mut acc.modules, doc.modules, "module")?;
                    merge_section(&mut acc.systems, doc.systems, "system")?;
                    merge_section(&mut acc.filtrations, doc.filtrations, "filtration")?;
                    merge_section(&mut acc.endomorphisms, doc.endomorphisms, "endomorphism")?;
                    merge_section(&mut acc.symbolic, doc.symbolic, "symbolic filtration")?;
                }
            }
        }
        Workspace::from_doc(&merged.expect("at least one document"))
    }

    pub fn from_doc(doc: &WorkspaceJson) -> Result<Workspace, JsonError> {
        let algebra = parse_algebra(&doc.algebra)?;
        let mut modules = BTreeMap::new();
        for (name, rep_doc) in &doc.modules {
            modules.insert(
                name.clone(),
                parse_representation(&algebra, &format!("modules.{name}"), rep_doc)?,
            );
        }
        let mut systems = BTreeMap::new();
        for (name, sys_doc) in &doc.systems {
            let context = format!("systems.{name}");
            let preorder =
                Preorder::close_transitive(sys_doc.omega.clone(), &sys_doc.preorder_pairs)
                    .map_err(|e| invalid(&context, e))?;
            let mut delta = Vec::with_capacity(sys_doc.omega.len());
            for omega in &sys_doc.omega {
                let rep_ref = sys_doc.delta.get(omega).ok_or_else(|| {
                    invalid(&context, format!("delta is missing omega {omega}"))
                })?;
                let rep = match rep_ref {
                    RepRef::Name(module_name) => modules
                        .get(module_name)
                        .cloned()
                        .ok_or_else(|| JsonError::Unresolved {
                            kind: "module",
                            name: module_name.clone(),
                        })?,
                    RepRef::Inline(rep_doc) => parse_representation(
                        &algebra,
                        &format!("{context}.delta.{omega}"),
                        rep_doc,
                    )?,
                };
                delta.push(rep);
            }
            for omega in sys_doc.delta.keys() {
                if !sys_doc.omega.contains(omega) {
                    return Err(invalid(&context, format!("delta has unknown omega {omega}")));
                }
            }
            let system = HomologicalSystem::new(algebra.clone(), sys_doc.omega.clone(), preorder, delta)
                .map_err(|e| invalid(&context, e))?;
            systems.insert(name.clone(), system);
        }
        let mut filtrations = BTreeMap::new();
        for (name, f_doc) in &doc.filtrations {
            let context = format!("filtrations.{name}");
            let module = modules
                .get(&f_doc.module)
                .ok_or_else(|| JsonError::Unresolved {
                    kind: "module",
                    name: f_doc.module.clone(),
                })?
                .clone();
            let mut chain = Vec::new();
            for (si, step) in f_doc.chain.iter().enumerate() {
                let mut spaces = Vec::new();
                for (v, label) in algebra.quiver().vertices().iter().enumerate() {
                    let dim = module.dim_at(v);
                    match step.spaces.get(label) {
                        Some(vectors) => {
                            // basis vectors come in as rows; columns span the space
                            let m = parse_matrix(
                                algebra.field(),
                                &format!("{context}.chain[{si}].{label}"),
                                vectors.len(),
                                dim,
                                vectors,
                            )?;
                            spaces.push(Subspace::from_span(&m.transpose()));
                        }
                        None => spaces.push(Subspace::zero(algebra.field(), dim)),
                    }
                }
                for label in step.spaces.keys() {
                    if algebra.quiver().vertex_index(label).is_none() {
                        return Err(invalid(&context, format!("unknown vertex {label}")));
                    }
                }
                let sub = Submodule::new(&algebra, &module, spaces)
                    .map_err(|e| invalid(format!("{context}.chain[{si}]"), e))?;
                chain.push(sub);
            }
            // the chain may omit the final full step; append it
            if !module.is_zero()
                && chain.last().map(|s| s.total_dim()) != Some(module.total_dim())
            {
                chain.push(module.full_submodule(&algebra));
            }
            filtrations.insert(
                name.clone(),
                LoadedFiltration {
                    module_name: f_doc.module.clone(),
                    filtration: Filtration {
                        module,
                        chain,
                        factors: None,
                    },
                    factor_claims: f_doc.factors.clone(),
                },
            );
        }
        let mut endomorphisms = BTreeMap::new();
        for (name, e_doc) in &doc.endomorphisms {
            let context = format!("endomorphisms.{name}");
            let module = modules
                .get(&e_doc.module)
                .ok_or_else(|| JsonError::Unresolved {
                    kind: "module",
                    name: e_doc.module.clone(),
                })?;
            let mut mats = Vec::new();
            for (v, label) in algebra.quiver().vertices().iter().enumerate() {
                let d = module.dim_at(v);
                match e_doc.maps.get(label) {
                    Some(data) => mats.push(parse_matrix(
                        algebra.field(),
                        &format!("{context}.{label}"),
                        d,
                        d,
                        data,
                    )?),
                    None => mats.push(Mat::zero(algebra.field(), d, d)),
                }
            }
            let hom = Hom::new(mats);
            if !hom.is_homomorphism(&algebra, module, module) {
                return Err(invalid(&context, "not an endomorphism (intertwiner law fails)"));
            }
            endomorphisms.insert(
                name.clone(),
                LoadedEndo {
                    module_name: e_doc.module.clone(),
                    hom,
                },
            );
        }
        let mut symbolic = BTreeMap::new();
        for (name, s_doc) in &doc.symbolic {
            let steps: Vec<(String, Cardinal)> = s_doc
                .steps
                .iter()
                .map(|s| (s.omega.clone(), s.card))
                .collect();
            symbolic.insert(name.clone(), steps);
        }
        Ok(Workspace {
            algebra,
            modules,
            systems,
            filtrations,
            endomorphisms,
            symbolic,
        })
    }

    /// Re-attaches a filtration's claimed factors for a given system, mapping
    /// omega labels to indices.
    pub fn claims_for_system(
        system: &HomologicalSystem,
        claims: &[Vec<FactorJson>],
    ) -> Result<Vec<Vec<(usize, usize)>>, JsonError> {
        claims
            .iter()
            .map(|step| {
                step.iter()
                    .map(|f| {
                        system
                            .omega_index(&f.omega)
                            .map(|i| (i, f.mult))
                            .ok_or_else(|| JsonError::Unresolved {
                                kind: "omega",
                                name: f.omega.clone(),
                            })
                    })
                    .collect()
            })
            .collect()
    }
}
