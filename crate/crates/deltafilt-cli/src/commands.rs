use deltafilt::filt::{
    check_uniqueness, ell, merge_to_ordered, order_vector, ordered_filtration,
    ordered_filtration_with, refine_to_slim, sort_slim, summand_split, Filtration,
    MultiplicityMap, OrderedFiltration,
};
use deltafilt::hsys::{ExtPattern, HomologicalSystem};
use deltafilt::json::{parse_preorder, PreorderJson, Workspace};
use deltafilt::preord::{
    divisibility, inverter_linearization, q_lex_linearization, Linearization, PreordError,
    QuotientPoset,
};
use deltafilt::qrep::{
    decompose_grouped, ext1_data, ext1_dim, euler_form, hom_basis, is_isomorphic, SearchLimits,
};
use deltafilt::symb::{symb_ell, symb_merge, symb_sort, SymbolicFiltration};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;

pub enum CliError {
    /// Unreadable or malformed input, unresolved names: exit 2.
    Input(String),
    /// A check could not be carried out: exit 1.
    Semantic(String),
}

pub struct CmdOutput {
    pub report: Value,
    pub pretty: String,
    pub pass: bool,
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn semantic<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Semantic(e.to_string())
}

fn load_workspace(path: &Path) -> Result<Workspace, CliError> {
    if !path.exists() {
        return Err(CliError::Input(format!("{}: not found", path.display())));
    }
    Workspace::from_path(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn class_label(q: &QuotientPoset<String>, class: usize) -> String {
    let members = q.class_members(class);
    if members.len() == 1 {
        members[0].clone()
    } else {
        format!(
            "{{{}}}",
            members
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn ell_json(system: &HomologicalSystem, ell: &MultiplicityMap) -> Value {
    let mut map = serde_json::Map::new();
    for (&omega, &mult) in ell {
        map.insert(system.omega()[omega].clone(), json!(mult));
    }
    Value::Object(map)
}

fn layers_json(system: &HomologicalSystem, pattern: &ExtPattern, o: &OrderedFiltration) -> Value {
    let layers: Vec<Value> = o
        .layers
        .iter()
        .map(|layer| {
            let factors: Vec<Value> = layer
                .factors
                .iter()
                .map(|&(omega, mult)| {
                    json!({"omega": system.omega()[omega].clone(), "mult": mult})
                })
                .collect();
            json!({
                "class": class_label(&pattern.quotient, layer.class),
                "dims": layer.sub.dims(),
                "factors": factors,
            })
        })
        .collect();
    json!(layers)
}

pub fn validate(
    path: &Path,
    system: Option<&str>,
    all_linearizations: bool,
    cap: usize,
) -> Result<CmdOutput, CliError> {
    let mut ws = load_workspace(path)?;
    let names: Vec<String> = match system {
        Some(name) => {
            if !ws.systems.contains_key(name) {
                return Err(CliError::Input(format!("unknown system {name:?}")));
            }
            vec![name.to_string()]
        }
        None => ws.systems.keys().cloned().collect(),
    };
    if names.is_empty() {
        return Err(CliError::Input("workspace contains no systems".into()));
    }
    let mut all_pass = true;
    let mut systems_json = serde_json::Map::new();
    let mut pretty = String::new();
    for name in &names {
        let sys = ws.systems.get_mut(name).expect("checked above");
        let report = sys.validate().map_err(semantic)?.clone();
        let mut entry = serde_json::to_value(&report).map_err(semantic)?;
        let passed = report.all_passed();
        all_pass &= passed;
        if let Value::Object(map) = &mut entry {
            map.insert("passed".into(), json!(passed));
        }
        let _ = writeln!(
            pretty,
            "system {name}: {}",
            if passed { "all axioms pass" } else { "FAIL" }
        );
        for (axiom, result) in [
            ("HS1", &report.hs1),
            ("HS2", &report.hs2),
            ("HS3", &report.hs3),
            ("HS4", &report.hs4),
        ] {
            let _ = writeln!(
                pretty,
                "  {axiom}: {}{}",
                if result.passed { "pass" } else { "fail" },
                if result.witnesses.is_empty() {
                    String::new()
                } else {
                    format!(" ({} witness(es))", result.witnesses.len())
                }
            );
        }
        if all_linearizations {
            let prime = sys.validate_prime(cap).map_err(semantic)?;
            all_pass &= prime.passed && prime.agrees_with_validate;
            let _ = writeln!(
                pretty,
                "  HS3'/HS4' over {} linearization(s): {}",
                prime.linearizations_checked,
                if prime.passed { "pass" } else { "fail" }
            );
            if let Value::Object(map) = &mut entry {
                map.insert("prime".into(), serde_json::to_value(&prime).map_err(semantic)?);
            }
        }
        systems_json.insert(name.clone(), entry);
    }
    Ok(CmdOutput {
        report: json!({
            "command": "validate",
            "status": if all_pass { "ok" } else { "fail" },
            "systems": systems_json,
        }),
        pretty,
        pass: all_pass,
    })
}

fn string_linearization_json(q: &QuotientPoset<String>, lin: &Linearization) -> Value {
    let classes: Vec<Value> = lin
        .class_sequence()
        .iter()
        .map(|&c| {
            json!(q
                .class_members(c)
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>())
        })
        .collect();
    let flat: Vec<String> = lin
        .class_sequence()
        .iter()
        .flat_map(|&c| q.class_members(c).into_iter().cloned())
        .collect();
    json!({"classes": classes, "labels": flat})
}

fn u64_linearization_labels(lin: &Linearization) -> Vec<u64> {
    // divisibility quotients are singleton classes in carrier order 1..n
    lin.class_sequence().iter().map(|&c| (c + 1) as u64).collect()
}

pub fn linearize(
    path: Option<&Path>,
    div: Option<u64>,
    q_lex: bool,
    inverter: Option<&[u64]>,
    enumerate: bool,
    cap: usize,
) -> Result<CmdOutput, CliError> {
    if let Some(args) = inverter {
        let [n, m, bound] = args else {
            return Err(CliError::Input("--inverter takes n m bound".into()));
        };
        let inv = inverter_linearization(*n, *m, *bound).map_err(semantic)?;
        let order = u64_linearization_labels(&inv.linearization);
        let mut pretty = format!(
            "inverter n={n} m={m} bound={bound}: d={}, n'={}, m'={}\norder: {:?}\n",
            inv.d, inv.n_prime, inv.m_prime, order
        );
        let _ = writeln!(pretty, "{n} precedes {m}: true; extends divisibility: true");
        return Ok(CmdOutput {
            report: json!({
                "command": "linearize",
                "status": "ok",
                "inverter": {"d": inv.d, "n_prime": inv.n_prime, "m_prime": inv.m_prime},
                "injection": inv.injection.iter().map(|&(a, ia)| json!([a, ia])).collect::<Vec<_>>(),
                "order": order,
            }),
            pretty,
            pass: true,
        });
    }
    if let Some(n) = div {
        let pre = divisibility(n);
        let quotient = pre.quotient();
        let lin = if q_lex {
            q_lex_linearization(n, &Vec::new()).map_err(semantic)?
        } else {
            quotient.linearize().map_err(semantic)?
        };
        let order = u64_linearization_labels(&lin);
        let mut report = json!({
            "command": "linearize",
            "status": "ok",
            "carrier": (1..=n).collect::<Vec<u64>>(),
            "classes": (1..=n).map(|k| json!([k])).collect::<Vec<_>>(),
            "order": order,
        });
        let mut pretty = format!("divisibility on 1..{n}\norder: {order:?}\n");
        if enumerate {
            match quotient.enumerate_linearizations(cap) {
                Ok(lins) => {
                    let all: Vec<Vec<u64>> =
                        lins.iter().map(u64_linearization_labels).collect();
                    let _ = writeln!(pretty, "{} linear extension(s)", all.len());
                    if let Value::Object(map) = &mut report {
                        map.insert("extensions".into(), json!(all));
                        map.insert("extension_count".into(), json!(all.len()));
                    }
                }
                Err(e @ PreordError::CapExceeded { .. }) => return Err(semantic(e)),
                Err(e) => return Err(semantic(e)),
            }
        }
        return Ok(CmdOutput {
            report,
            pretty,
            pass: true,
        });
    }
    let Some(path) = path else {
        return Err(CliError::Input(
            "provide a preorder file, --divisibility, or --inverter".into(),
        ));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let doc: PreorderJson = serde_json::from_str(&text).map_err(input)?;
    let pre = parse_preorder(&doc).map_err(input)?;
    let quotient = pre.quotient();
    let lin = quotient.linearize().map_err(semantic)?;
    let mut report = json!({
        "command": "linearize",
        "status": "ok",
        "carrier": pre.carrier(),
        "quotient_classes": (0..quotient.class_count())
            .map(|c| json!(quotient.class_members(c).iter().map(|s| s.to_string()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
        "linearization": string_linearization_json(&quotient, &lin),
    });
    let mut pretty = format!(
        "carrier of {} element(s), {} class(es)\n",
        pre.len(),
        quotient.class_count()
    );
    if enumerate {
        let lins = quotient.enumerate_linearizations(cap).map_err(semantic)?;
        let _ = writeln!(pretty, "{} linear extension(s)", lins.len());
        if let Value::Object(map) = &mut report {
            map.insert(
                "extensions".into(),
                json!(lins
                    .iter()
                    .map(|l| string_linearization_json(&quotient, l))
                    .collect::<Vec<_>>()),
            );
            map.insert("extension_count".into(), json!(lins.len()));
        }
    }
    Ok(CmdOutput {
        report,
        pretty,
        pass: true,
    })
}

pub fn hom_or_ext(
    path: &Path,
    m_name: &str,
    n_name: &str,
    euler: bool,
    want_ext: bool,
) -> Result<CmdOutput, CliError> {
    let ws = load_workspace(path)?;
    let m = ws
        .modules
        .get(m_name)
        .ok_or_else(|| CliError::Input(format!("unknown module {m_name:?}")))?;
    let n = ws
        .modules
        .get(n_name)
        .ok_or_else(|| CliError::Input(format!("unknown module {n_name:?}")))?;
    let hs = hom_basis(&ws.algebra, m, n);
    let ext = ext1_dim(&ws.algebra, m, n).map_err(semantic)?;
    let command = if want_ext { "ext" } else { "hom" };
    let dim = if want_ext { ext } else { hs.dim() };
    let mut report = json!({
        "command": command,
        "status": "ok",
        "source": m_name,
        "target": n_name,
        "dim": dim,
        "hom_dim": hs.dim(),
        "ext_dim": ext,
    });
    let hom_to_json = |h: &deltafilt::qrep::Hom| -> Value {
        let mats: Vec<Value> = ws
            .algebra
            .quiver()
            .vertices()
            .iter()
            .enumerate()
            .map(|(v, label)| json!({label.clone(): h.mat(v).to_rows()}))
            .collect();
        json!(mats)
    };
    if want_ext {
        // basis of the cokernel Hom(K, n) / im Hom(P0, n), as homs out of
        // the presentation kernel K
        let data = ext1_data(&ws.algebra, m, n).map_err(semantic)?;
        if let Value::Object(map) = &mut report {
            map.insert(
                "kernel_dims".into(),
                json!(data.kernel.dims()),
            );
            map.insert(
                "basis".into(),
                json!(data.representatives.iter().map(hom_to_json).collect::<Vec<_>>()),
            );
        }
    } else {
        let basis: Vec<Value> = hs.basis.iter().map(hom_to_json).collect();
        if let Value::Object(map) = &mut report {
            map.insert("basis".into(), json!(basis));
        }
    }
    let mut pretty = format!("dim {command}({m_name}, {n_name}) = {dim}\n");
    let mut pass = true;
    if euler {
        let value = euler_form(&ws.algebra, m.dims(), n.dims()).map_err(semantic)?;
        let agrees = hs.dim() as i64 - ext as i64 == value;
        pass &= agrees;
        let _ = writeln!(
            pretty,
            "euler form = {value}, dim Hom − dim Ext¹ = {}: {}",
            hs.dim() as i64 - ext as i64,
            if agrees { "agrees" } else { "MISMATCH" }
        );
        if let Value::Object(map) = &mut report {
            map.insert("euler".into(), json!(value));
            map.insert("euler_agrees".into(), json!(agrees));
            if !agrees {
                map.insert("status".into(), json!("fail"));
            }
        }
    }
    Ok(CmdOutput {
        report,
        pretty,
        pass,
    })
}

/// Binds a named filtration to the system, translating factor claims.
fn bind_filtration(
    ws: &Workspace,
    system: &HomologicalSystem,
    name: &str,
) -> Result<Filtration, CliError> {
    let loaded = ws
        .filtrations
        .get(name)
        .ok_or_else(|| CliError::Input(format!("unknown filtration {name:?}")))?;
    let mut f = loaded.filtration.clone();
    if let Some(claims) = &loaded.factor_claims {
        f.factors = Some(Workspace::claims_for_system(system, claims).map_err(input)?);
    }
    Ok(f)
}

#[allow(clippy::too_many_arguments)]
pub fn filter(
    path: &Path,
    system_name: &str,
    module: Option<&str>,
    filtration: Option<&str>,
    check_unique: Option<&str>,
    all_linearizations: bool,
    cap: usize,
    symbolic: Option<&str>,
) -> Result<CmdOutput, CliError> {
    let mut ws = load_workspace(path)?;
    {
        let sys = ws
            .systems
            .get_mut(system_name)
            .ok_or_else(|| CliError::Input(format!("unknown system {system_name:?}")))?;
        let report = sys.validate().map_err(semantic)?;
        if !report.all_passed() {
            return Err(CliError::Semantic(format!(
                "system {system_name:?} fails validation; run `validate` for the report"
            )));
        }
    }
    let sys = &ws.systems[system_name];
    let pattern = sys.ext_pattern().map_err(semantic)?;
    if let Some(symb_name) = symbolic {
        let steps_by_label = ws
            .symbolic
            .get(symb_name)
            .ok_or_else(|| CliError::Input(format!("unknown symbolic filtration {symb_name:?}")))?;
        let mut steps = Vec::new();
        for (label, card) in steps_by_label {
            let omega = sys
                .omega_index(label)
                .ok_or_else(|| CliError::Input(format!("unknown omega {label:?}")))?;
            steps.push((omega, *card));
        }
        let f = SymbolicFiltration::new(&pattern, steps).map_err(input)?;
        let sorted = symb_sort(&pattern, &f).map_err(semantic)?;
        let layers = symb_merge(&pattern, &sorted).map_err(semantic)?;
        let ell_map = symb_ell(&sorted);
        let step_json = |s: &SymbolicFiltration| -> Vec<Value> {
            s.steps()
                .iter()
                .map(|&(o, c)| json!({"omega": sys.omega()[o].clone(), "card": c}))
                .collect()
        };
        let mut pretty = String::from("symbolic pipeline\n");
        let _ = writeln!(pretty, "steps before: {}", json!(step_json(&f)));
        let _ = writeln!(pretty, "steps after:  {}", json!(step_json(&sorted)));
        let report = json!({
            "command": "filter",
            "status": "ok",
            "symbolic": {
                "steps_before": step_json(&f),
                "steps_after": step_json(&sorted),
                "layers": layers.iter().map(|l| json!({
                    "class": class_label(&pattern.quotient, l.class),
                    "factors": l.factors.iter().map(|&(o, c)| json!({
                        "omega": sys.omega()[o].clone(), "card": c
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "ell": ell_map.iter().map(|(&o, c)| json!({
                    "omega": sys.omega()[o].clone(), "card": c
                })).collect::<Vec<_>>(),
            }
        });
        return Ok(CmdOutput {
            report,
            pretty,
            pass: true,
        });
    }
    // with --module alone, modules that are explicit direct sums of Δ's are
    // auto-filtered through the one-step chain
    let (f, filtration_name) = match filtration {
        Some(name) => {
            let f = bind_filtration(&ws, sys, name)?;
            if let Some(expected) = module {
                let loaded = &ws.filtrations[name];
                if loaded.module_name != expected {
                    return Err(CliError::Input(format!(
                        "filtration {name:?} is over module {:?}, not {expected:?}",
                        loaded.module_name
                    )));
                }
            }
            (f, name.to_string())
        }
        None => {
            let module_name = module.ok_or_else(|| {
                CliError::Input(
                    "provide --filtration, --module (auto-filter), or --symbolic".into(),
                )
            })?;
            let m = ws
                .modules
                .get(module_name)
                .ok_or_else(|| CliError::Input(format!("unknown module {module_name:?}")))?;
            (
                Filtration::single_step(sys, m.clone()),
                format!("(auto: 0 ⊂ {module_name})"),
            )
        }
    };
    let filtration_name = filtration_name.as_str();
    let slim = refine_to_slim(sys, &f).map_err(semantic)?;
    let before = order_vector(&pattern, &slim);
    let sorted = sort_slim(sys, &slim).map_err(semantic)?;
    let after = order_vector(&pattern, &sorted.slim);
    let ordered = merge_to_ordered(&pattern, &sorted.slim).map_err(semantic)?;
    let ell_map = ell(&sorted.slim);
    let class_labels =
        |ov: &deltafilt::filt::OrderVector| -> Vec<String> {
            ov.0.iter()
                .map(|&c| class_label(&pattern.quotient, c))
                .collect()
        };
    let mut pass = true;
    let mut report = json!({
        "command": "filter",
        "status": "ok",
        "system": system_name,
        "filtration": filtration_name,
        "order_vector_before": class_labels(&before),
        "order_vector_after": class_labels(&after),
        "swaps": sorted.swaps,
        "layers": layers_json(sys, &pattern, &ordered),
        "ell": ell_json(sys, &ell_map),
    });
    let mut pretty = format!(
        "order vector: {:?} → {:?} in {} swap(s)\nℓ = {}\n",
        class_labels(&before),
        class_labels(&after),
        sorted.swaps,
        ell_json(sys, &ell_map)
    );
    if let Some(other_name) = check_unique {
        let other = bind_filtration(&ws, sys, other_name)?;
        let verdict = check_uniqueness(sys, &f, &other).map_err(semantic)?;
        pass &= verdict.is_unique();
        let _ = writeln!(
            pretty,
            "uniqueness against {other_name:?}: {}",
            if verdict.is_unique() { "identical ordered chains" } else { "MISMATCH" }
        );
        if let Value::Object(map) = &mut report {
            map.insert(
                "uniqueness".into(),
                json!({
                    "other": other_name,
                    "chains_equal": verdict.chains_equal,
                    "classes_equal": verdict.classes_equal,
                    "ell_equal": verdict.ell_equal,
                }),
            );
        }
    }
    if all_linearizations {
        let lins = pattern
            .quotient
            .enumerate_linearizations(cap)
            .map_err(semantic)?;
        let mut identical = true;
        for lin in &lins {
            let alt = ordered_filtration_with(sys, &f, lin.clone()).map_err(semantic)?;
            identical &= alt.same_chain_as(&ordered);
        }
        pass &= identical;
        let _ = writeln!(
            pretty,
            "ordered chain under all {} linearization(s): {}",
            lins.len(),
            if identical { "identical" } else { "MISMATCH" }
        );
        if let Value::Object(map) = &mut report {
            map.insert(
                "all_linearizations".into(),
                json!({"count": lins.len(), "identical": identical}),
            );
        }
    }
    if !pass {
        if let Value::Object(map) = &mut report {
            map.insert("status".into(), json!("fail"));
        }
    }
    Ok(CmdOutput {
        report,
        pretty,
        pass,
    })
}

pub fn split(
    path: &Path,
    system_name: &str,
    module: &str,
    filtration: &str,
    idempotent: &str,
) -> Result<CmdOutput, CliError> {
    let mut ws = load_workspace(path)?;
    {
        let sys = ws
            .systems
            .get_mut(system_name)
            .ok_or_else(|| CliError::Input(format!("unknown system {system_name:?}")))?;
        let report = sys.validate().map_err(semantic)?;
        if !report.all_passed() {
            return Err(CliError::Semantic(format!(
                "system {system_name:?} fails validation"
            )));
        }
    }
    let sys = &ws.systems[system_name];
    let pattern = sys.ext_pattern().map_err(semantic)?;
    let m = ws
        .modules
        .get(module)
        .ok_or_else(|| CliError::Input(format!("unknown module {module:?}")))?;
    let loaded_f = ws
        .filtrations
        .get(filtration)
        .ok_or_else(|| CliError::Input(format!("unknown filtration {filtration:?}")))?;
    if loaded_f.module_name != module {
        return Err(CliError::Input(format!(
            "filtration {filtration:?} is over module {:?}, not {module:?}",
            loaded_f.module_name
        )));
    }
    let e = ws
        .endomorphisms
        .get(idempotent)
        .ok_or_else(|| CliError::Input(format!("unknown endomorphism {idempotent:?}")))?;
    if e.module_name != module {
        return Err(CliError::Input(format!(
            "endomorphism {idempotent:?} is over module {:?}, not {module:?}",
            e.module_name
        )));
    }
    let f = bind_filtration(&ws, sys, filtration)?;
    let ordered = ordered_filtration(sys, &f).map_err(semantic)?;
    let split = summand_split(sys, m, &ordered, &e.hom).map_err(semantic)?;
    let cert_json: Vec<Value> = split
        .certificates
        .iter()
        .map(|c| {
            json!({
                "class": class_label(&pattern.quotient, c.class),
                "entries": c.entries.iter().map(|e| json!({
                    "omega": sys.omega()[e.omega].clone(),
                    "total": e.total,
                    "image_part": e.image_part,
                    "kernel_part": e.kernel_part,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut pretty = String::from("summand split certificates:\n");
    for c in &split.certificates {
        for entry in &c.entries {
            let _ = writeln!(
                pretty,
                "  ℓ_{}: {} = {} + {}",
                sys.omega()[entry.omega],
                entry.total,
                entry.image_part,
                entry.kernel_part
            );
        }
    }
    let report = json!({
        "command": "split",
        "status": "ok",
        "system": system_name,
        "module": module,
        "idempotent": idempotent,
        "certificates": cert_json,
        "image": {
            "dims": split.image.rep.dims(),
            "layers": layers_json(sys, &pattern, &split.image.ordered),
            "ell": ell_json(sys, &split.image.ordered.ell()),
        },
        "kernel": {
            "dims": split.kernel.rep.dims(),
            "layers": layers_json(sys, &pattern, &split.kernel.ordered),
            "ell": ell_json(sys, &split.kernel.ordered.ell()),
        },
    });
    Ok(CmdOutput {
        report,
        pretty,
        pass: true,
    })
}

pub fn decompose(
    path: &Path,
    module: &str,
    system: Option<&str>,
) -> Result<CmdOutput, CliError> {
    let mut ws = load_workspace(path)?;
    let m = ws
        .modules
        .get(module)
        .cloned()
        .ok_or_else(|| CliError::Input(format!("unknown module {module:?}")))?;
    let limits = SearchLimits::default();
    let (groups, certainty) = decompose_grouped(&ws.algebra, &m, &limits).map_err(semantic)?;
    let sys = match system {
        Some(name) => {
            let sys = ws
                .systems
                .get_mut(name)
                .ok_or_else(|| CliError::Input(format!("unknown system {name:?}")))?;
            sys.validate().map_err(semantic)?;
            Some(&ws.systems[name])
        }
        None => None,
    };
    let mut factors_json = Vec::new();
    let mut pretty = format!("{module} decomposes into {} factor class(es)\n", groups.len());
    for (rep, mult, _) in &groups {
        let omega = sys.and_then(|s| {
            s.deltas()
                .iter()
                .position(|d| is_isomorphic(s.algebra(), d, rep))
                .map(|i| s.omega()[i].clone())
        });
        let _ = writeln!(
            pretty,
            "  dims {:?} × {mult}{}",
            rep.dims(),
            omega.as_ref().map_or(String::new(), |o| format!(" (Δ_{o})"))
        );
        factors_json.push(json!({
            "dims": rep.dims(),
            "mult": mult,
            "omega": omega,
        }));
    }
    Ok(CmdOutput {
        report: json!({
            "command": "decompose",
            "status": "ok",
            "module": module,
            "factors": factors_json,
            "certified": matches!(certainty, deltafilt::qrep::Certainty::Certified),
        }),
        pretty,
        pass: true,
    })
}
