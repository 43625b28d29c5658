//! Simply-laced Dynkin diagrams, their positive roots, highest-root labels,
//! the canonical (Dynkin) involution and the affine extension.
//!
//! Vertex numbering is fixed once and for all:
//!
//! * `A_n`: `1..=n` along the chain.
//! * `D_n`: `1..=n-2` along the chain, fork vertices `n-1` and `n` both
//!   attached to `n-2`.
//! * `E_n`: `1..=n-1` along the long chain, vertex `n` attached to chain
//!   vertex `3`. The chain starts at the end of the shorter arm, so for `E_7`
//!   and `E_8` vertex `1` carries label 2.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex ids are 1-based.
pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DiagramType {
    A,
    D,
    E,
}

impl FromStr for DiagramType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A" | "a" => Ok(DiagramType::A),
            "D" | "d" => Ok(DiagramType::D),
            "E" | "e" => Ok(DiagramType::E),
            other => Err(format!("unknown diagram type `{other}` (expected A, D or E)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    ty: DiagramType,
    rank: usize,
    /// Sorted, each edge stored as `(u, v)` with `u < v`.
    edges: Vec<(Vertex, Vertex)>,
}

impl DynkinDiagram {
    pub fn diagram_type(&self) -> DiagramType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.rank
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.rank).contains(&v)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Name such as `E6` or `D12`.
    pub fn name(&self) -> String {
        format!("{:?}{}", self.ty, self.rank)
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.ty, self.rank)
    }
}

impl FromStr for DynkinDiagram {
    type Err = String;

    /// Parses names like `E6`, `a12`, `D5`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let ty: DiagramType = head.parse()?;
        let rank: usize = tail
            .parse()
            .map_err(|_| format!("bad rank in diagram name `{s}`"))?;
        build_diagram(ty, rank).map_err(|e| e.to_string())
    }
}

pub fn build_diagram(ty: DiagramType, rank: usize) -> Result<DynkinDiagram> {
    let valid = match ty {
        DiagramType::A => rank >= 1,
        DiagramType::D => rank >= 4,
        DiagramType::E => (6..=8).contains(&rank),
    };
    if !valid {
        return Err(Error::InvalidRank { ty, rank });
    }
    let mut edges = Vec::with_capacity(rank.saturating_sub(1));
    match ty {
        DiagramType::A => edges.extend((1..rank).map(|i| (i, i + 1))),
        DiagramType::D => {
            edges.extend((1..rank - 2).map(|i| (i, i + 1)));
            edges.push((rank - 2, rank - 1));
            edges.push((rank - 2, rank));
        }
        DiagramType::E => {
            edges.extend((1..rank - 1).map(|i| (i, i + 1)));
            edges.push((3, rank));
        }
    }
    edges.sort_unstable();
    Ok(DynkinDiagram { ty, rank, edges })
}

/// A root written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coefficients: Vec<i64>,
}

impl Root {
    pub fn simple(rank: usize, v: Vertex) -> Self {
        let mut coefficients = vec![0; rank];
        coefficients[v - 1] = 1;
        Root { coefficients }
    }

    pub fn height(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    pub fn coefficient(&self, v: Vertex) -> i64 {
        self.coefficients[v - 1]
    }
}

/// All positive roots, ordered by height and then lexicographically.
///
/// Built by closing the simple roots under `α ↦ α + α_i` using root strings:
/// for a positive root `α ≠ α_i`, the `α_i`-string through `α` runs from
/// `α - pα_i` to `α + qα_i` with `p - q = ⟨α, α_i^∨⟩`.
pub fn positive_roots(diagram: &DynkinDiagram) -> Vec<Root> {
    let n = diagram.rank;
    let pairing = |c: &[i64], i: Vertex| -> i64 {
        let mut s = 2 * c[i - 1];
        for j in diagram.neighbours(i) {
            s -= c[j - 1];
        }
        s
    };

    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut out = Vec::new();
    let mut layer: BTreeSet<Vec<i64>> = diagram
        .vertices()
        .map(|v| Root::simple(n, v).coefficients)
        .collect();

    while !layer.is_empty() {
        known.extend(layer.iter().cloned());
        let mut next = BTreeSet::new();
        for c in &layer {
            for i in diagram.vertices() {
                let mut p = 0;
                let mut down = c.clone();
                loop {
                    down[i - 1] -= 1;
                    if down[i - 1] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let q = p - pairing(c, i);
                if q > 0 {
                    let mut up = c.clone();
                    up[i - 1] += 1;
                    next.insert(up);
                }
            }
        }
        out.extend(layer.into_iter().map(|coefficients| Root { coefficients }));
        layer = next;
    }
    out
}

/// Coefficients of the highest root, keyed by vertex.
pub fn highest_root_labels(diagram: &DynkinDiagram) -> BTreeMap<Vertex, u32> {
    let roots = positive_roots(diagram);
    let top = roots.last().expect("every diagram has at least one root");
    diagram
        .vertices()
        .map(|v| (v, top.coefficient(v) as u32))
        .collect()
}

/// A permutation of `1..=len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Vertex>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (1..=len).collect(),
        }
    }

    pub fn from_images(images: Vec<Vertex>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s == (1..=images.len()).collect::<Vec<_>>()
        });
        Permutation { images }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.images[v - 1]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn images(&self) -> &[Vertex] {
        &self.images
    }
}

/// The canonical involution: chain reversal on `A_n`, fork swap on `D_n` for
/// odd `n`, the reflection of `E_6`, and the identity otherwise (including
/// `D_4`, where no triality is used).
pub fn dynkin_involution(diagram: &DynkinDiagram) -> Permutation {
    let n = diagram.rank;
    match diagram.ty {
        DiagramType::A => Permutation::from_images((1..=n).map(|v| n + 1 - v).collect()),
        DiagramType::D if n % 2 == 1 => {
            let mut images: Vec<Vertex> = (1..=n).collect();
            images.swap(n - 2, n - 1);
            Permutation::from_images(images)
        }
        DiagramType::E if n == 6 => Permutation::from_images(vec![5, 4, 3, 2, 1, 6]),
        _ => Permutation::identity(n),
    }
}

/// An ADE diagram recognised inside some ambient graph, with `map[i - 1]`
/// the ambient vertex playing the role of canonical vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub diagram: DynkinDiagram,
    pub map: Vec<Vertex>,
}

impl Embedding {
    /// The Dynkin involution transported to the ambient vertex ids, as pairs
    /// `(v, ι(v))`.
    pub fn involution_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let iota = dynkin_involution(&self.diagram);
        self.diagram
            .vertices()
            .map(|i| (self.map[i - 1], self.map[iota.apply(i) - 1]))
            .collect()
    }
}

/// Recognises a connected simply-laced tree as `A_n`, `D_n` or `E_{6,7,8}`
/// and returns the canonical numbering on it. `None` if the subgraph is not
/// one of these shapes.
pub fn classify_subgraph<F>(vertices: &BTreeSet<Vertex>, adjacent: F) -> Option<Embedding>
where
    F: Fn(Vertex, Vertex) -> bool,
{
    let n = vertices.len();
    if n == 0 {
        return None;
    }
    let nbrs: BTreeMap<Vertex, Vec<Vertex>> = vertices
        .iter()
        .map(|&v| {
            let list = vertices
                .iter()
                .copied()
                .filter(|&w| w != v && adjacent(v, w))
                .collect();
            (v, list)
        })
        .collect();
    let edge_count: usize = nbrs.values().map(Vec::len).sum::<usize>() / 2;
    if edge_count + 1 != n {
        return None;
    }
    // connected + n-1 edges => tree
    let start = *vertices.iter().next()?;
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &nbrs[&v] {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    if seen.len() != n {
        return None;
    }

    // Follows a path starting at `from`, stepping away from `prev`.
    let follow = |prev: Vertex, from: Vertex| -> Vec<Vertex> {
        let mut arm = vec![from];
        let (mut p, mut c) = (prev, from);
        loop {
            let next: Vec<Vertex> = nbrs[&c].iter().copied().filter(|&w| w != p).collect();
            match next.as_slice() {
                [w] => {
                    arm.push(*w);
                    p = c;
                    c = *w;
                }
                _ => return arm,
            }
        }
    };

    let branch: Vec<Vertex> = nbrs
        .iter()
        .filter(|(_, l)| l.len() >= 3)
        .map(|(&v, _)| v)
        .collect();
    match branch.as_slice() {
        [] => {
            let end = *nbrs.iter().find(|(_, l)| l.len() <= 1)?.0;
            let mut path = vec![end];
            if n > 1 {
                path.extend(follow(end, nbrs[&end][0]));
            }
            Some(Embedding {
                diagram: build_diagram(DiagramType::A, n).ok()?,
                map: path,
            })
        }
        [centre] => {
            let centre = *centre;
            if nbrs[&centre].len() != 3 {
                return None;
            }
            let mut arms: Vec<Vec<Vertex>> =
                nbrs[&centre].iter().map(|&w| follow(centre, w)).collect();
            arms.sort_by_key(|a| (a.len(), a[0]));
            let lens = [arms[0].len(), arms[1].len(), arms[2].len()];
            let mut map = Vec::with_capacity(n);
            let ty = match lens {
                [1, 1, _] => {
                    map.extend(arms[2].iter().rev());
                    map.push(centre);
                    map.push(arms[0][0]);
                    map.push(arms[1][0]);
                    DiagramType::D
                }
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                    map.extend(arms[1].iter().rev());
                    map.push(centre);
                    map.extend(arms[2].iter());
                    map.push(arms[0][0]);
                    DiagramType::E
                }
                _ => return None,
            };
            Some(Embedding {
                diagram: build_diagram(ty, n).ok()?,
                map,
            })
        }
        _ => None,
    }
}

/// An ADE diagram with its affine vertex `rank + 1` attached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedDiagram {
    base: DynkinDiagram,
    affine_neighbours: Vec<Vertex>,
    /// Affine `A_1`: the literature draws a double bond; it is kept as one
    /// adjacency record carrying this flag.
    affine_a1: bool,
    /// Labels of `1..=rank+1`, affine vertex last (always 1).
    labels: Vec<u32>,
}

impl ExtendedDiagram {
    pub fn base(&self) -> &DynkinDiagram {
        &self.base
    }

    pub fn affine_vertex(&self) -> Vertex {
        self.base.rank + 1
    }

    pub fn affine_edges(&self) -> Vec<(Vertex, Vertex)> {
        let a = self.affine_vertex();
        self.affine_neighbours.iter().map(|&v| (v, a)).collect()
    }

    pub fn is_affine_a1(&self) -> bool {
        self.affine_a1
    }

    pub fn vertex_count(&self) -> usize {
        self.base.rank + 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.vertex_count()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.vertex_count()).contains(&v)
    }

    pub fn label(&self, v: Vertex) -> u32 {
        self.labels[v - 1]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        let a = self.affine_vertex();
        if u == a {
            self.affine_neighbours.contains(&v)
        } else if v == a {
            self.affine_neighbours.contains(&u)
        } else {
            self.base.adjacent(u, v)
        }
    }

    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let a = self.affine_vertex();
        if v == a {
            return self.affine_neighbours.clone();
        }
        let mut out = self.base.neighbours(v);
        if self.affine_neighbours.contains(&v) {
            out.push(a);
        }
        out
    }

    /// Connected components of the extended diagram with `removed` deleted.
    pub fn components_without(&self, removed: Vertex) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::from([removed]);
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbours(v) {
                    if seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Attaches the affine vertex (label 1) wherever the highest-root labels fail
/// to balance: the vertices with `2·label(v) > Σ neighbour labels`. After
/// attaching, `2·label(v) = Σ neighbour labels` holds at every vertex.
pub fn extend_affine(diagram: &DynkinDiagram) -> ExtendedDiagram {
    let labels = highest_root_labels(diagram);
    let mut affine_neighbours = Vec::new();
    let mut affine_a1 = false;
    for v in diagram.vertices() {
        let around: u32 = diagram.neighbours(v).iter().map(|w| labels[w]).sum();
        let defect = 2 * labels[&v] - around;
        match defect {
            0 => {}
            1 => affine_neighbours.push(v),
            2 => {
                affine_neighbours.push(v);
                affine_a1 = true;
            }
            _ => unreachable!("highest-root defect is at most 2"),
        }
    }
    let mut all: Vec<u32> = labels.values().copied().collect();
    all.push(1);
    ExtendedDiagram {
        base: diagram.clone(),
        affine_neighbours,
        affine_a1,
        labels: all,
    }
}

/// Every diagram `A_1..=A_max_a`, `D_4..=D_max_d`, `E_6`, `E_7`, `E_8`.
pub fn catalogue(max_a: usize, max_d: usize) -> Vec<DynkinDiagram> {
    let a = (1..=max_a).map(|n| build_diagram(DiagramType::A, n));
    let d = (4..=max_d).map(|n| build_diagram(DiagramType::D, n));
    let e = (6..=8).map(|n| build_diagram(DiagramType::E, n));
    a.chain(d)
        .chain(e)
        .map(|d| d.expect("catalogue ranks are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(s: &str) -> DynkinDiagram {
        s.parse().unwrap()
    }

    fn labels_vec(d: &DynkinDiagram) -> Vec<u32> {
        highest_root_labels(d).into_values().collect()
    }

    #[test]
    fn build_rejects_bad_ranks() {
        assert!(matches!(
            build_diagram(DiagramType::D, 3),
            Err(Error::InvalidRank { .. })
        ));
        assert!(build_diagram(DiagramType::E, 9).is_err());
        assert!(build_diagram(DiagramType::E, 5).is_err());
        assert!(build_diagram(DiagramType::A, 0).is_err());
    }

    #[test]
    fn a1_is_a_point() {
        let d = build_diagram(DiagramType::A, 1).unwrap();
        assert_eq!(d.rank(), 1);
        assert!(d.edges().is_empty());
    }

    #[test]
    fn e6_has_one_trivalent_vertex() {
        let d = diag("E6");
        let degrees: Vec<usize> = d.vertices().map(|v| d.neighbours(v).len()).collect();
        assert_eq!(degrees, vec![1, 2, 3, 2, 1, 1]);
    }

    #[test]
    fn small_root_counts() {
        assert_eq!(positive_roots(&diag("A2")).len(), 3);
        assert_eq!(positive_roots(&diag("E6")).len(), 36);
        assert_eq!(positive_roots(&diag("E8")).len(), 120);
    }

    #[test]
    fn labels_match_the_figures() {
        assert_eq!(labels_vec(&diag("A4")), vec![1, 1, 1, 1]);
        assert_eq!(labels_vec(&diag("D6")), vec![1, 2, 2, 2, 1, 1]);
        assert_eq!(labels_vec(&diag("E6")), vec![1, 2, 3, 2, 1, 2]);
        assert_eq!(labels_vec(&diag("E7")), vec![2, 3, 4, 3, 2, 1, 2]);
        assert_eq!(labels_vec(&diag("E8")), vec![2, 4, 6, 5, 4, 3, 2, 3]);
    }

    #[test]
    fn involution_cases() {
        assert_eq!(dynkin_involution(&diag("A2")).images(), &[2, 1]);
        assert_eq!(dynkin_involution(&diag("D5")).images(), &[1, 2, 3, 5, 4]);
        assert!(dynkin_involution(&diag("D4")).is_identity());
        assert!(dynkin_involution(&diag("D6")).is_identity());
        assert!(dynkin_involution(&diag("E7")).is_identity());
        assert!(dynkin_involution(&diag("E8")).is_identity());
        assert_eq!(dynkin_involution(&diag("E6")).images(), &[5, 4, 3, 2, 1, 6]);
    }

    #[test]
    fn affine_attachment_points() {
        let e6 = extend_affine(&diag("E6"));
        assert_eq!(e6.affine_edges(), vec![(6, 7)]);
        assert_eq!(e6.label(6), 2);
        let e7 = extend_affine(&diag("E7"));
        assert_eq!(e7.affine_edges(), vec![(1, 8)]);
        let e8 = extend_affine(&diag("E8"));
        assert_eq!(e8.affine_edges(), vec![(7, 9)]);
        let a1 = extend_affine(&diag("A1"));
        assert!(a1.is_affine_a1());
        assert_eq!(a1.affine_edges(), vec![(1, 2)]);
        let a4 = extend_affine(&diag("A4"));
        assert_eq!(a4.affine_edges(), vec![(1, 5), (4, 5)]);
        let d5 = extend_affine(&diag("D5"));
        assert_eq!(d5.affine_edges(), vec![(2, 6)]);
    }

    /// Tries every single attachment point and keeps those that balance the
    /// labels; the rule used by `extend_affine` must pick the same vertex.
    #[test]
    fn affine_attachment_agrees_with_brute_force() {
        for d in catalogue(8, 8) {
            if d.diagram_type() == DiagramType::A {
                continue;
            }
            let labels = highest_root_labels(&d);
            let balanced_with = |w: Vertex| {
                d.vertices().all(|v| {
                    let mut around: u32 = d.neighbours(v).iter().map(|u| labels[u]).sum();
                    if v == w {
                        around += 1;
                    }
                    2 * labels[&v] == around
                }) && labels[&w] == 2
            };
            let candidates: Vec<Vertex> = d.vertices().filter(|&w| balanced_with(w)).collect();
            let ext = extend_affine(&d);
            let attached: Vec<Vertex> = ext.affine_edges().iter().map(|e| e.0).collect();
            assert_eq!(candidates, attached, "{d}");
        }
    }

    #[test]
    fn classify_recovers_each_type() {
        for d in catalogue(9, 9) {
            let verts: BTreeSet<Vertex> = d.vertices().collect();
            let emb = classify_subgraph(&verts, |u, v| d.adjacent(u, v)).unwrap();
            assert_eq!(emb.diagram, d);
        }
    }

    #[test]
    fn classify_rejects_cycles_and_affine_shapes() {
        let ext = extend_affine(&diag("A3"));
        let all: BTreeSet<Vertex> = ext.vertices().collect();
        assert!(classify_subgraph(&all, |u, v| ext.adjacent(u, v)).is_none());
        let ext = extend_affine(&diag("E6"));
        let all: BTreeSet<Vertex> = ext.vertices().collect();
        assert!(classify_subgraph(&all, |u, v| ext.adjacent(u, v)).is_none());
    }

    #[test]
    fn parse_names() {
        assert_eq!(diag("e7").rank(), 7);
        assert!("D3".parse::<DynkinDiagram>().is_err());
        assert!("F4".parse::<DynkinDiagram>().is_err());
        assert!("E".parse::<DynkinDiagram>().is_err());
    }
}
