use super::QrepError;

/// A finite quiver: vertex labels and named arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Quiver {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, QrepError> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[i + 1..].contains(v) {
                return Err(QrepError::DuplicateVertex(v.clone()));
            }
        }
        let index = |l: &str| -> Result<usize, QrepError> {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| QrepError::UnknownVertex(l.to_string()))
        };
        let mut named = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            if named.iter().any(|a: &Arrow| a.name == name) {
                return Err(QrepError::DuplicateArrow(name));
            }
            named.push(Arrow {
                source: index(&from)?,
                target: index(&to)?,
                name,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: named,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn is_acyclic(&self) -> bool {
        // DFS with colors
        let n = self.vertex_count();
        let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        fn visit(q: &Quiver, v: usize, state: &mut [u8]) -> bool {
            state[v] = 1;
            for a in q.arrows() {
                if a.source != v {
                    continue;
                }
                if state[a.target] == 1 {
                    return false;
                }
                if state[a.target] == 0 && !visit(q, a.target, state) {
                    return false;
                }
            }
            state[v] = 2;
            true
        }
        (0..n).all(|v| state[v] != 0 || visit(self, v, &mut state))
    }

    /// Length of the longest path; only meaningful when acyclic.
    pub fn longest_path_len(&self) -> usize {
        assert!(self.is_acyclic());
        let n = self.vertex_count();
        let mut longest = vec![usize::MAX; n]; // MAX = not computed
        fn depth(q: &Quiver, v: usize, memo: &mut [usize]) -> usize {
            if memo[v] != usize::MAX {
                return memo[v];
            }
            let mut best = 0;
            for a in q.arrows() {
                if a.source == v {
                    best = best.max(1 + depth(q, a.target, memo));
                }
            }
            memo[v] = best;
            best
        }
        (0..n).map(|v| depth(self, v, &mut longest)).max().unwrap_or(0)
    }

    /// All paths starting at `v` with length < `max_len`, including the
    /// trivial path, ordered by length then lexicographically by arrow index.
    pub fn paths_from(&self, v: usize, max_len: usize) -> Vec<Path> {
        let mut out = vec![Path {
            source: v,
            arrows: Vec::new(),
        }];
        let mut frontier = vec![Path {
            source: v,
            arrows: Vec::new(),
        }];
        for _ in 1..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                let end = p.target(self);
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == end {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path { source: v, arrows });
                    }
                }
            }
            out.extend(next.iter().cloned());
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        out
    }
}

/// A path in a quiver: a source vertex plus arrow indices in traversal order
/// (the first listed arrow is followed first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.source, |&a| q.arrow(a).target)
    }

    /// self followed by `next` (targets must match sources).
    pub fn then(&self, q: &Quiver, next: &Path) -> Path {
        assert_eq!(self.target(q), next.source, "paths not composable");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Path {
            source: self.source,
            arrows,
        }
    }

    /// self extended by one arrow.
    pub fn extended(&self, q: &Quiver, arrow: usize) -> Path {
        assert_eq!(self.target(q), q.arrow(arrow).source);
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path {
            source: self.source,
            arrows,
        }
    }
}
