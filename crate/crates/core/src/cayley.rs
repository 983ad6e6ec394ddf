//! The graph on a set of representatives in which `θ` and `θ'` are joined
//! when `θ' = θS`, `θT` or `θT⁻¹` in PSL₂(ℤ).
//!
//! The union of the translated triangles `θD` has connected interior
//! exactly when this graph is connected; a BFS spanning tree is the
//! certificate.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::cosets::{CosetList, Subgroup};
use crate::error::{Error, Result};
use crate::residues::Level;
use crate::words::{psl_normalize, GroupWord, Mat2, PslMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    T,
}

impl Generator {
    pub fn label(self) -> &'static str {
        match self {
            Generator::S => "S",
            Generator::T => "T",
        }
    }
}

/// `vertex[to] = vertex[from] * generator` in PSL₂(ℤ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub generator: Generator,
}

#[derive(Clone, Debug)]
pub struct CayleyGraph {
    tag: Option<(Level, Subgroup)>,
    vertices: Vec<PslMat>,
    words: Vec<GroupWord>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

/// The graph of a coset list. Fails if two reps agree in PSL₂(ℤ).
pub fn build_graph(list: &CosetList) -> Result<CayleyGraph> {
    let mut g = CayleyGraph::from_words(list.words().cloned())?;
    g.tag = Some((list.level(), list.group()));
    Ok(g)
}

impl CayleyGraph {
    pub fn from_words(words: impl IntoIterator<Item = GroupWord>) -> Result<CayleyGraph> {
        let words: Vec<GroupWord> = words.into_iter().collect();
        let vertices: Vec<PslMat> = words.iter().map(|w| psl_normalize(w.evaluate())).collect();

        let mut index: HashMap<PslMat, usize> = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if let Some(&first) = index.get(v) {
                return Err(Error::DuplicateVertex {
                    first: words[first].to_string(),
                    second: words[i].to_string(),
                });
            }
            index.insert(*v, i);
        }

        // S is an involution in PSL2, so each S-edge is found from both ends;
        // T-edges are found once from the tail (the T^-1 lookup is the same edge).
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            let m = v.mat();
            if let Some(&j) = index.get(&psl_normalize(m * Mat2::S)) {
                if i < j {
                    edges.push(Edge { from: i, to: j, generator: Generator::S });
                }
            }
            if let Some(&j) = index.get(&psl_normalize(m * Mat2::t(1))) {
                edges.push(Edge { from: i, to: j, generator: Generator::T });
            }
        }

        let mut adjacency = vec![Vec::new(); vertices.len()];
        for e in &edges {
            adjacency[e.from].push(e.to);
            adjacency[e.to].push(e.from);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }

        Ok(CayleyGraph {
            tag: None,
            vertices,
            words,
            edges,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> PslMat {
        self.vertices[i]
    }

    pub fn word(&self, i: usize) -> &GroupWord {
        &self.words[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn find(&self, word: &GroupWord) -> Option<usize> {
        let target = psl_normalize(word.evaluate());
        self.vertices.iter().position(|v| *v == target)
    }

    /// The first vertex equal to `S` in PSL₂(ℤ), else vertex 0.
    pub fn default_root(&self) -> usize {
        self.find(&GroupWord::s()).unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.spanning_tree(0).len() == self.len()
    }

    /// Connected components, each listed in BFS order from its smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let tree = self.spanning_tree(start);
            for &v in &tree.order {
                seen[v] = true;
            }
            out.push(tree.order);
        }
        out
    }

    /// BFS tree of the component containing `root`.
    pub fn spanning_tree(&self, root: usize) -> SpanningTree {
        assert!(root < self.len(), "root {root} out of range");
        let mut parent = vec![None; self.len()];
        let mut depth = vec![None; self.len()];
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        depth[root] = Some(0);
        while let Some(v) = queue.pop_front() {
            let dv = depth[v].expect("queued vertices have a depth");
            for &w in &self.adjacency[v] {
                if depth[w].is_none() {
                    depth[w] = Some(dv + 1);
                    parent[w] = Some(v);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        SpanningTree {
            root,
            parent,
            depth,
            order,
        }
    }

    fn generator_between(&self, i: usize, j: usize) -> Option<Generator> {
        self.edges
            .iter()
            .find(|e| (e.from == i && e.to == j) || (e.from == j && e.to == i))
            .map(|e| e.generator)
    }

    /// Graphviz rendering labelled by words. With a tree, tree edges are bold
    /// and the rest dashed; `tree_only` drops the non-tree edges.
    pub fn to_dot(&self, tree: Option<&SpanningTree>, tree_only: bool) -> String {
        let mut out = String::from("graph G {\n");
        if let Some((level, group)) = self.tag {
            let _ = writeln!(out, "  label=\"{group} N={level}\";");
        }
        out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
        for (i, w) in self.words.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{w}\"];");
        }
        let in_tree = |e: &Edge| {
            tree.is_some_and(|t| t.parent[e.to] == Some(e.from) || t.parent[e.from] == Some(e.to))
        };
        match (tree, tree_only) {
            (Some(t), true) => {
                for &v in &t.order[1..] {
                    let p = t.parent[v].expect("non-root tree vertex has a parent");
                    let g = self.generator_between(p, v).expect("tree edges are graph edges");
                    let _ = writeln!(out, "  n{p} -- n{v} [label=\"{}\"];", g.label());
                }
            }
            _ => {
                for e in &self.edges {
                    let style = match tree {
                        Some(_) if in_tree(e) => ", style=bold",
                        Some(_) => ", style=dashed",
                        None => "",
                    };
                    let _ = writeln!(
                        out,
                        "  n{} -- n{} [label=\"{}\"{style}];",
                        e.from,
                        e.to,
                        e.generator.label()
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl SpanningTree {
    pub fn root(&self) -> usize {
        self.root
    }

    /// Number of vertices covered.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.depth[v].is_some()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Vertices in BFS order, root first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `(parent, child)` pairs in BFS order of the child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.order[1..]
            .iter()
            .map(|&v| (self.parent[v].expect("non-root has parent"), v))
            .collect()
    }

    pub fn depth_of(&self, v: usize) -> Option<usize> {
        self.depth[v]
    }

    pub fn depth(&self) -> usize {
        self.depth.iter().flatten().copied().max().unwrap_or(0)
    }
}
