use super::quiver::{Path, Quiver};
use super::QrepError;
use crate::gfmat::FieldSpec;

/// One term of a relation: a coefficient times a path, the path given as
/// arrow indices in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: u64,
    pub path: Vec<usize>,
}

/// A relation is a linear combination of parallel paths, each of length >= 2.
pub type Relation = Vec<RelationTerm>;

/// A path algebra over GF(p) presented by a quiver, admissible relations, and
/// a nilpotency bound L certifying that every path of length L lies in the
/// relation ideal (hence the algebra is finite-dimensional).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    quiver: Quiver,
    field: FieldSpec,
    relations: Vec<Relation>,
    nilpotency_bound: usize,
}

impl AlgebraPresentation {
    pub fn new(
        quiver: Quiver,
        field: FieldSpec,
        relations: Vec<Relation>,
        nilpotency_bound: usize,
    ) -> Result<Self, QrepError> {
        if nilpotency_bound < 1 {
            return Err(QrepError::BadNilpotencyBound {
                bound: nilpotency_bound,
                reason: "bound must be at least 1".into(),
            });
        }
        let mut cleaned = Vec::with_capacity(relations.len());
        for rel in relations {
            let mut terms = Vec::new();
            let mut endpoints: Option<(usize, usize)> = None;
            for term in rel {
                let coeff = field.reduce(term.coeff);
                if coeff == 0 {
                    continue;
                }
                if term.path.len() < 2 {
                    return Err(QrepError::BadRelation(format!(
                        "path of length {} (admissible relations need length >= 2)",
                        term.path.len()
                    )));
                }
                // composability and endpoints
                let mut pos = None;
                for &ai in &term.path {
                    if ai >= quiver.arrow_count() {
                        return Err(QrepError::BadRelation(format!("arrow index {ai} out of range")));
                    }
                    let a = quiver.arrow(ai);
                    if let Some(p) = pos {
                        if a.source != p {
                            return Err(QrepError::BadRelation("path not composable".into()));
                        }
                    }
                    pos = Some(a.target);
                }
                let src = quiver.arrow(term.path[0]).source;
                let tgt = pos.unwrap();
                match endpoints {
                    None => endpoints = Some((src, tgt)),
                    Some(e) => {
                        if e != (src, tgt) {
                            return Err(QrepError::BadRelation(
                                "relation terms are not parallel".into(),
                            ));
                        }
                    }
                }
                terms.push(RelationTerm {
                    coeff,
                    path: term.path,
                });
            }
            if !terms.is_empty() {
                cleaned.push(terms);
            }
        }
        let alg = AlgebraPresentation {
            quiver,
            field,
            relations: cleaned,
            nilpotency_bound,
        };
        alg.check_nilpotency_certificate()?;
        Ok(alg)
    }

    /// What can be verified of "every path of length L lies in the ideal":
    /// complete for relation-free quivers (acyclicity plus path lengths) and
    /// for purely monomial relations (subpath rewriting); for relations with
    /// several terms the bound is trusted as a certificate.
    fn check_nilpotency_certificate(&self) -> Result<(), QrepError> {
        let bound = self.nilpotency_bound;
        if self.relations.is_empty() {
            if !self.quiver.is_acyclic() {
                return Err(QrepError::BadNilpotencyBound {
                    bound,
                    reason: "quiver has an oriented cycle and no relations".into(),
                });
            }
            if self.quiver.longest_path_len() >= bound {
                return Err(QrepError::BadNilpotencyBound {
                    bound,
                    reason: format!(
                        "a path of length {} exists",
                        self.quiver.longest_path_len()
                    ),
                });
            }
            return Ok(());
        }
        if self.relations.iter().all(|r| r.len() == 1) {
            let monomials: Vec<&[usize]> =
                self.relations.iter().map(|r| r[0].path.as_slice()).collect();
            let contains_monomial = |path: &[usize]| {
                monomials.iter().any(|m| {
                    path.windows(m.len()).any(|w| w == *m)
                })
            };
            for v in 0..self.quiver.vertex_count() {
                for p in self.quiver.paths_from(v, bound + 1) {
                    if p.len() == bound && !contains_monomial(&p.arrows) {
                        return Err(QrepError::BadNilpotencyBound {
                            bound,
                            reason: format!(
                                "path of length {bound} from vertex {v} avoids every relation"
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency_bound
    }

    pub fn is_hereditary(&self) -> bool {
        self.relations.is_empty()
    }

    /// Relation source/target vertices (terms are parallel by construction).
    pub fn relation_endpoints(&self, rel: &Relation) -> (usize, usize) {
        let first = &rel[0];
        let src = self.quiver.arrow(first.path[0]).source;
        let p = Path {
            source: src,
            arrows: first.path.clone(),
        };
        (src, p.target(&self.quiver))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf5() -> FieldSpec {
        FieldSpec::new(5).unwrap()
    }

    fn a2() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into())],
        )
        .unwrap()
    }

    #[test]
    fn relation_free_needs_acyclic_and_big_enough_bound() {
        assert!(AlgebraPresentation::new(a2(), gf5(), vec![], 2).is_ok());
        assert!(matches!(
            AlgebraPresentation::new(a2(), gf5(), vec![], 1),
            Err(QrepError::BadNilpotencyBound { .. })
        ));
        let loop_q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        assert!(matches!(
            AlgebraPresentation::new(loop_q, gf5(), vec![], 5),
            Err(QrepError::BadNilpotencyBound { .. })
        ));
    }

    #[test]
    fn monomial_certificate_is_checked() {
        let loop_q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        // x^2 = 0 certifies bound 2
        let rel = vec![vec![RelationTerm {
            coeff: 1,
            path: vec![0, 0],
        }]];
        assert!(AlgebraPresentation::new(loop_q.clone(), gf5(), rel.clone(), 2).is_ok());
        // bound 3 also fine (length-3 paths contain x^2)
        assert!(AlgebraPresentation::new(loop_q.clone(), gf5(), rel, 3).is_ok());
        // x^3 = 0 does not certify bound 2
        let rel3 = vec![vec![RelationTerm {
            coeff: 1,
            path: vec![0, 0, 0],
        }]];
        assert!(matches!(
            AlgebraPresentation::new(loop_q, gf5(), rel3, 2),
            Err(QrepError::BadNilpotencyBound { .. })
        ));
    }

    #[test]
    fn short_relation_paths_rejected() {
        let q = a2();
        let rel = vec![vec![RelationTerm {
            coeff: 1,
            path: vec![0],
        }]];
        assert!(matches!(
            AlgebraPresentation::new(q, gf5(), rel, 2),
            Err(QrepError::BadRelation(_))
        ));
    }

    #[test]
    fn nonparallel_relation_rejected() {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
                ("c".into(), "2".into(), "2".into()),
            ],
        )
        .unwrap();
        let rel = vec![vec![
            RelationTerm {
                coeff: 1,
                path: vec![0, 1],
            },
            RelationTerm {
                coeff: 1,
                path: vec![0, 2],
            },
        ]];
        assert!(matches!(
            AlgebraPresentation::new(q, gf5(), rel, 4),
            Err(QrepError::BadRelation(_))
        ));
    }
}
