//! The Schur–Weyl–Young graph: standard Weyl tableaux grouped by level and frame,
//! joined by amplitude-labelled transitions.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::amplitude::{insertions, AmplitudeEngine, EdgeAmplitudes};
use crate::error::{AmplitudeError, TableauError, TransformError};
use crate::exec::{Config, Execution};
use crate::radical::Radical;
use crate::tableaux::{partitions, Alphabet, GtPattern, Partition, WeylTableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwyVertex {
    pub id: usize,
    pub level: usize,
    pub pattern: GtPattern,
}

impl SwyVertex {
    pub fn shape(&self) -> Partition {
        self.pattern.shape()
    }

    pub fn tableau(&self) -> WeylTableau {
        WeylTableau::from_gt(&self.pattern)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwyEdge {
    pub lower: usize,
    pub upper: usize,
    /// Letter added, `1..=d`.
    pub k: u8,
    pub amplitude: Radical,
}

#[derive(Clone, Debug)]
pub struct SwyGraph {
    d: usize,
    n_max: usize,
    vertices: Vec<SwyVertex>,
    levels: Vec<Range<usize>>,
    edges: Vec<SwyEdge>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: HashMap<GtPattern, usize>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl PartialEq for SwyGraph {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.n_max == other.n_max && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for SwyGraph {}

impl SwyGraph {
    /// Builds the graph up to level `n_max` with Louck amplitudes.
    pub fn build(d: usize, n_max: usize) -> Self {
        Self::build_with(d, n_max, &Config::default()).expect("Louck amplitudes exist on every transition")
    }

    pub fn build_with(d: usize, n_max: usize, config: &Config) -> Result<Self, TransformError> {
        if d == 0 {
            return Err(TableauError::ZeroDimension.into());
        }
        config.engine.check_dimension(d)?;
        let mut vertices = Vec::new();
        let mut levels = Vec::with_capacity(n_max + 1);
        for level in 0..=n_max {
            let start = vertices.len();
            for shape in partitions(level, d) {
                for pattern in GtPattern::enumerate(&shape, d)? {
                    vertices.push(SwyVertex { id: vertices.len(), level, pattern });
                }
            }
            levels.push(start..vertices.len());
        }
        let index: HashMap<GtPattern, usize> = vertices.iter().map(|v| (v.pattern.clone(), v.id)).collect();

        let below_top: Vec<usize> = levels[..n_max].iter().flat_map(|r| r.clone()).collect();
        let engine = config.engine;
        let per_vertex = config.execution.try_map(&below_top, |&id| {
            let lower = &vertices[id].pattern;
            let mut out = Vec::new();
            for k in 1..=d {
                let mut targets: Vec<(usize, GtPattern)> =
                    insertions(lower, k).into_iter().map(|(up, _)| (index[&up], up)).collect();
                targets.sort_by_key(|(uid, _)| *uid);
                for (upper, up) in targets {
                    let amplitude = engine.amplitude(lower, &up)?;
                    out.push(SwyEdge { lower: id, upper, k: k as u8, amplitude });
                }
            }
            Ok::<_, AmplitudeError>(out)
        })?;
        let edges: Vec<SwyEdge> = per_vertex.into_iter().flatten().collect();
        Ok(Self::assemble(d, n_max, vertices, levels, index, edges))
    }

    fn assemble(
        d: usize,
        n_max: usize,
        vertices: Vec<SwyVertex>,
        levels: Vec<Range<usize>>,
        index: HashMap<GtPattern, usize>,
        edges: Vec<SwyEdge>,
    ) -> Self {
        let mut up = vec![Vec::new(); vertices.len()];
        let mut down = vec![Vec::new(); vertices.len()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (e, edge) in edges.iter().enumerate() {
            up[edge.lower].push(e);
            down[edge.upper].push(e);
            edge_index.insert((edge.lower, edge.upper), e);
        }
        Self { d, n_max, vertices, levels, edges, up, down, index, edge_index }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn vertices(&self) -> &[SwyVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[SwyEdge] {
        &self.edges
    }

    pub fn vertex(&self, id: usize) -> Option<&SwyVertex> {
        self.vertices.get(id)
    }

    pub fn vertex_of(&self, pattern: &GtPattern) -> Option<usize> {
        self.index.get(pattern).copied()
    }

    /// Vertices on `level`, in canonical order.
    pub fn level(&self, level: usize) -> &[SwyVertex] {
        self.levels.get(level).map_or(&[], |r| &self.vertices[r.clone()])
    }

    /// Edges from `v` one level up, optionally only those adding letter `k`.
    pub fn up_edges(&self, v: usize, k: Option<u8>) -> Result<Vec<&SwyEdge>, TransformError> {
        let ids = self.up.get(v).ok_or(TransformError::UnknownVertex(v))?;
        Ok(ids.iter().map(|&e| &self.edges[e]).filter(|e| k.is_none_or(|k| e.k == k)).collect())
    }

    /// Edges into `v` from one level down, optionally only those removing letter `k`.
    pub fn down_edges(&self, v: usize, k: Option<u8>) -> Result<Vec<&SwyEdge>, TransformError> {
        let ids = self.down.get(v).ok_or(TransformError::UnknownVertex(v))?;
        Ok(ids.iter().map(|&e| &self.edges[e]).filter(|e| k.is_none_or(|k| e.k == k)).collect())
    }

    pub fn edge_between(&self, lower: usize, upper: usize) -> Option<&SwyEdge> {
        self.edge_index.get(&(lower, upper)).map(|&e| &self.edges[e])
    }

    /// Vertex count per frame on `level`.
    pub fn level_census(&self, level: usize) -> BTreeMap<Partition, usize> {
        let mut census = BTreeMap::new();
        for v in self.level(level) {
            *census.entry(v.shape()).or_insert(0) += 1;
        }
        census
    }

    /// Graphviz rendering, one cluster per (level, frame). Byte-deterministic.
    pub fn to_dot(&self) -> String {
        let alphabet = Alphabet::new(self.d as u8);
        let mut out = String::new();
        let _ = writeln!(out, "digraph swy_d{}_n{} {{", self.d, self.n_max);
        out.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
        for level in 0..=self.n_max {
            let mut frame_idx = 0;
            let verts = self.level(level);
            let mut i = 0;
            while i < verts.len() {
                let shape = verts[i].shape();
                let _ = writeln!(out, "  subgraph cluster_{level}_{frame_idx} {{");
                let _ = writeln!(out, "    label=\"level {level} {shape}\";");
                while i < verts.len() && verts[i].shape() == shape {
                    let v = &verts[i];
                    let label = if v.level == 0 {
                        "empty".to_string()
                    } else {
                        v.tableau()
                            .rows()
                            .iter()
                            .map(|r| {
                                r.iter().map(|&l| alphabet.to_external(l).to_string()).collect::<Vec<_>>().join(" ")
                            })
                            .collect::<Vec<_>>()
                            .join("\\n")
                    };
                    let _ = writeln!(out, "    v{} [label=\"{}\"];", v.id, label);
                    i += 1;
                }
                out.push_str("  }\n");
                frame_idx += 1;
            }
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}: {}\"];",
                e.lower,
                e.upper,
                alphabet.to_external(e.k),
                e.amplitude
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        let alphabet = Alphabet::new(self.d as u8);
        GraphJson {
            d: self.d,
            n_max: self.n_max,
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexJson {
                    id: v.id,
                    level: v.level,
                    shape: v.shape().parts().to_vec(),
                    tableau_rows: v.tableau().external_rows(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    lower: e.lower,
                    upper: e.upper,
                    k: alphabet.to_external(e.k),
                    amplitude: e.amplitude.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds a graph from its JSON dump, checking every vertex and edge.
    pub fn from_json(json: &GraphJson) -> Result<Self, TransformError> {
        let d = json.d;
        if d == 0 || d > u8::MAX as usize {
            return Err(TableauError::ZeroDimension.into());
        }
        let alphabet = Alphabet::new(d as u8);
        let mut vertices = Vec::with_capacity(json.vertices.len());
        let mut levels: Vec<Range<usize>> = Vec::new();
        for (pos, v) in json.vertices.iter().enumerate() {
            if v.id != pos {
                return Err(TransformError::Inconsistent(format!("vertex id {} at position {pos}", v.id)));
            }
            let tableau = WeylTableau::from_external(d as u8, v.tableau_rows.clone())?;
            let shape = Partition::new(v.shape.clone())?;
            if tableau.shape() != shape || tableau.size() != v.level {
                return Err(TableauError::ShapeMismatch {
                    expected: shape.to_string(),
                    found: tableau.shape().to_string(),
                }
                .into());
            }
            while levels.len() <= v.level {
                levels.push(pos..pos);
            }
            if levels.len() != v.level + 1 {
                return Err(TransformError::Inconsistent("vertices not sorted by level".into()));
            }
            levels[v.level].end = pos + 1;
            vertices.push(SwyVertex { id: pos, level: v.level, pattern: tableau.to_gt() });
        }
        while levels.len() <= json.n_max {
            let end = vertices.len();
            levels.push(end..end);
        }
        let index: HashMap<GtPattern, usize> = vertices.iter().map(|v| (v.pattern.clone(), v.id)).collect();
        let mut edges = Vec::with_capacity(json.edges.len());
        for e in &json.edges {
            if e.lower >= vertices.len() || e.upper >= vertices.len() {
                return Err(TransformError::UnknownVertex(e.lower.max(e.upper)));
            }
            let k = alphabet.from_external(e.k)?;
            let ctx = crate::amplitude::transition_context(&vertices[e.lower].pattern, &vertices[e.upper].pattern)?;
            if ctx.k != k as usize {
                return Err(TransformError::Inconsistent(format!(
                    "edge {}->{} adds letter {}",
                    e.lower, e.upper, ctx.k
                )));
            }
            edges.push(SwyEdge { lower: e.lower, upper: e.upper, k, amplitude: e.amplitude.clone() });
        }
        Ok(Self::assemble(d, json.n_max, vertices, levels, index, edges))
    }

    /// Number of edges whose amplitude differs between Louck's formula and the
    /// `d = 2` rules. Always zero for a correct implementation.
    pub fn count_engine_disagreements(&self, execution: Execution) -> Result<usize, AmplitudeError> {
        if self.d != 2 {
            return Err(AmplitudeError::WrongDimension(self.d));
        }
        let mismatches = execution.try_map(&self.edges, |e| {
            let lower = &self.vertices[e.lower].pattern;
            let upper = &self.vertices[e.upper].pattern;
            let louck = crate::amplitude::louck_amplitude(lower, upper)?;
            let pattern = crate::amplitude::pattern_amplitude_d2(lower, upper)?;
            Ok::<_, AmplitudeError>(usize::from(louck != pattern))
        })?;
        Ok(mismatches.into_iter().sum())
    }
}

impl EdgeAmplitudes for SwyGraph {
    fn edge_amplitude(&self, lower: &GtPattern, upper: &GtPattern) -> Result<Radical, AmplitudeError> {
        let (Some(&lo), Some(&up)) = (self.index.get(lower), self.index.get(upper)) else {
            return Err(AmplitudeError::NotInGraph);
        };
        self.edge_between(lo, up).map(|e| e.amplitude.clone()).ok_or(AmplitudeError::NotInGraph)
    }
}

/// Amplitude source that prefers a prebuilt graph and falls back to an engine for
/// transitions above the graph's top level.
pub struct CachedAmplitudes<'a> {
    pub graph: &'a SwyGraph,
    pub fallback: AmplitudeEngine,
}

impl EdgeAmplitudes for CachedAmplitudes<'_> {
    fn edge_amplitude(&self, lower: &GtPattern, upper: &GtPattern) -> Result<Radical, AmplitudeError> {
        match self.graph.edge_amplitude(lower, upper) {
            Err(AmplitudeError::NotInGraph) => self.fallback.amplitude(lower, upper),
            other => other,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub level: usize,
    pub shape: Vec<u32>,
    pub tableau_rows: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub lower: usize,
    pub upper: usize,
    pub k: u32,
    pub amplitude: Radical,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub d: usize,
    pub n_max: usize,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn find(g: &SwyGraph, rows: Vec<Vec<u32>>) -> usize {
        let t = WeylTableau::from_external(g.d() as u8, rows).unwrap();
        g.vertex_of(&t.to_gt()).unwrap()
    }

    #[test]
    fn small_levels() {
        let g = SwyGraph::build(2, 1);
        assert_eq!(g.level(0).len(), 1);
        assert_eq!(g.level(1).len(), 2);
        assert_eq!(g.edges().len(), 2);

        let g = SwyGraph::build(2, 3);
        assert_eq!(g.level_census(3), BTreeMap::from([(p(&[3]), 4), (p(&[2, 1]), 2)]));
        assert_eq!(g.level_census(2), BTreeMap::from([(p(&[2]), 3), (p(&[1, 1]), 1)]));
        assert_eq!(g.level_census(0), BTreeMap::from([(Partition::empty(), 1)]));
        assert_eq!(g.vertices().len(), 13);

        let g3 = SwyGraph::build(3, 2);
        assert_eq!(g3.level_census(2), BTreeMap::from([(p(&[2]), 6), (p(&[1, 1]), 3)]));
    }

    #[test]
    fn edge_amplitudes() {
        let g = SwyGraph::build(2, 3);
        let zero = find(&g, vec![vec![0]]);
        let zero_one = find(&g, vec![vec![0, 1]]);
        let e = g.edge_between(zero, zero_one).unwrap();
        assert_eq!(e.amplitude, Radical::signed_sqrt_u64(1, 1, 2));

        let ups = g.up_edges(zero, Some(2)).unwrap();
        assert_eq!(ups.len(), 2);
        assert!(ups.iter().all(|e| e.amplitude == Radical::signed_sqrt_u64(1, 1, 2)));

        assert!(g.down_edges(0, None).unwrap().is_empty());
        assert!(g.up_edges(999, None).is_err());

        let t = find(&g, vec![vec![0, 1], vec![1]]);
        let downs = g.down_edges(t, None).unwrap();
        assert_eq!(downs.len(), 3);
        let from_11 = find(&g, vec![vec![1, 1]]);
        let from_01 = find(&g, vec![vec![0, 1]]);
        let from_col = find(&g, vec![vec![0], vec![1]]);
        for e in downs {
            if e.lower == from_11 {
                assert_eq!((e.k, &e.amplitude), (1, &Radical::signed_sqrt_u64(-1, 2, 3)));
            } else if e.lower == from_01 {
                assert_eq!((e.k, &e.amplitude), (2, &Radical::signed_sqrt_u64(1, 1, 3)));
            } else {
                assert_eq!((e.lower, e.k), (from_col, 2));
            }
        }
    }

    #[test]
    fn upward_fans_are_normalized() {
        for d in 1..=3 {
            let g = SwyGraph::build(d, 4);
            for v in g.vertices().iter().filter(|v| v.level < 4) {
                for k in 1..=d as u8 {
                    let total: Radical = g.up_edges(v.id, Some(k)).unwrap().iter().map(|e| e.amplitude.square()).sum();
                    assert!(total.is_one(), "d={d} vertex {} k={k}: {total}", v.pattern);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = SwyGraph::build(2, 3);
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back = SwyGraph::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, g);
        let g0 = SwyGraph::build(3, 0);
        assert_eq!(SwyGraph::from_json(&g0.to_json()).unwrap(), g0);
    }

    #[test]
    fn dot_output() {
        let dot = SwyGraph::build(2, 1).to_dot();
        assert_eq!(dot.matches(" [label=").count(), 3 + 2);
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert_eq!(dot, SwyGraph::build(2, 1).to_dot());
        let dot3 = SwyGraph::build(2, 3).to_dot();
        assert_eq!(dot3.lines().filter(|l| l.trim_start().starts_with('v') && !l.contains("->")).count(), 13);
    }

    #[test]
    fn engines_build_identical_graphs() {
        let louck = SwyGraph::build(2, 5);
        let pattern = SwyGraph::build_with(2, 5, &Config::default().with_engine(AmplitudeEngine::PatternD2)).unwrap();
        assert_eq!(louck, pattern);
        assert!(SwyGraph::build_with(3, 2, &Config::default().with_engine(AmplitudeEngine::PatternD2)).is_err());
    }
}
