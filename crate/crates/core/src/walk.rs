//! The iterated-involution wall-crossing walk on a shaded extended diagram.
//!
//! A chamber is a set of shaded vertices of the extended diagram. Crossing
//! the wall of a shaded vertex `v` deletes `v`, applies the Dynkin
//! involution to every connected component of what remains, moves the other
//! shaded vertices along, and keeps `v` shaded. The crossed wall is labelled
//! by the label of `v` in the extended diagram.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{classify_subgraph, extend_affine, DynkinDiagram, ExtendedDiagram, Vertex};

/// Upper bound on crossings while searching for a period.
pub const PERIOD_GUARD: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChamberState {
    extended: Arc<ExtendedDiagram>,
    shaded: BTreeSet<Vertex>,
    last_crossed: Option<Vertex>,
}

impl ChamberState {
    pub fn extended(&self) -> &ExtendedDiagram {
        &self.extended
    }

    pub fn shaded(&self) -> &BTreeSet<Vertex> {
        &self.shaded
    }

    pub fn last_crossed(&self) -> Option<Vertex> {
        self.last_crossed
    }

    /// The shaded vertex to cross next when walking in one direction: the
    /// one that was not just crossed. `None` unless exactly two are shaded.
    pub fn onward(&self) -> Option<Vertex> {
        if self.shaded.len() != 2 {
            return None;
        }
        self.shaded
            .iter()
            .copied()
            .find(|&v| Some(v) != self.last_crossed)
    }
}

/// One wall crossing: which vertex was crossed and the wall's label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub vertex: Vertex,
    pub label: u32,
}

/// A crossing placed in a walk; `position` counts crossings from the start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WallRecord {
    pub position: usize,
    pub vertex: Vertex,
    pub label: u32,
}

pub fn initial_state(diagram: &DynkinDiagram, chosen: &[Vertex]) -> Result<ChamberState> {
    if chosen.is_empty() {
        return Err(Error::EmptySelection);
    }
    if let Some(&bad) = chosen.iter().find(|&&v| !diagram.contains(v)) {
        return Err(Error::UnknownVertex(bad));
    }
    let extended = extend_affine(diagram);
    let mut shaded: BTreeSet<Vertex> = chosen.iter().copied().collect();
    shaded.insert(extended.affine_vertex());
    Ok(ChamberState {
        extended: Arc::new(extended),
        shaded,
        last_crossed: None,
    })
}

/// The involution of `extended ∖ {removed}` obtained by applying the Dynkin
/// involution on each connected component. Returned as a lookup on vertices.
fn componentwise_involution(extended: &ExtendedDiagram, removed: Vertex) -> HashMap<Vertex, Vertex> {
    let mut image = HashMap::new();
    for comp in extended.components_without(removed) {
        let emb = classify_subgraph(&comp, |u, v| extended.adjacent(u, v))
            .expect("proper subdiagrams of an affine ADE diagram are finite ADE");
        image.extend(emb.involution_pairs());
    }
    image
}

pub fn cross(state: &ChamberState, v: Vertex) -> Result<(ChamberState, Crossing)> {
    if !state.shaded.contains(&v) {
        return Err(Error::NotShaded(v));
    }
    let image = componentwise_involution(&state.extended, v);
    let shaded = state
        .shaded
        .iter()
        .map(|&w| if w == v { v } else { image[&w] })
        .collect();
    let label = state.extended.label(v);
    Ok((
        ChamberState {
            extended: Arc::clone(&state.extended),
            shaded,
            last_crossed: Some(v),
        },
        Crossing { vertex: v, label },
    ))
}

/// Walks rightwards from the fundamental chamber: the first crossing uses
/// the chosen vertex, every later one the shaded vertex not just crossed.
struct RightwardWalk {
    state: ChamberState,
    next: Vertex,
}

impl RightwardWalk {
    fn new(diagram: &DynkinDiagram, vertex: Vertex) -> Result<Self> {
        let state = initial_state(diagram, &[vertex])?;
        if state.shaded.len() != 2 {
            return Err(Error::Precondition(
                "a one-dimensional walk needs a single finite vertex".into(),
            ));
        }
        Ok(RightwardWalk {
            state,
            next: vertex,
        })
    }

    fn step(&mut self) -> Result<Crossing> {
        let (state, crossing) = cross(&self.state, self.next)?;
        self.next = state.onward().expect("two shaded vertices");
        self.state = state;
        Ok(crossing)
    }
}

pub fn label_sequence_1d(
    diagram: &DynkinDiagram,
    vertex: Vertex,
    count: usize,
) -> Result<Vec<WallRecord>> {
    if count == 0 {
        return Err(Error::Precondition("count must be at least 1".into()));
    }
    let mut walk = RightwardWalk::new(diagram, vertex)?;
    (0..count)
        .map(|position| {
            let c = walk.step()?;
            Ok(WallRecord {
                position,
                vertex: c.vertex,
                label: c.label,
            })
        })
        .collect()
}

/// One period of the 1D walk: `n` walls from a label-1 wall up to (not
/// including) the next label-1 wall.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Period {
    pub n: usize,
    pub equator_labels: Vec<u32>,
}

/// Finds the period of the walk through `vertex`.
///
/// The walk is run until its state `(shaded set, last crossed)` recurs, which
/// bounds one full cycle of the state machine. Within that cycle the label-1
/// walls must be evenly spaced with identical label runs between them; the
/// run is the period. The state cycle may be a multiple of it, since the
/// extended diagram can carry a symmetry exchanging the two ends of a period.
pub fn period_1d(diagram: &DynkinDiagram, vertex: Vertex) -> Result<Period> {
    let mut walk = RightwardWalk::new(diagram, vertex)?;
    let mut seen: HashMap<(BTreeSet<Vertex>, Option<Vertex>), usize> = HashMap::new();
    let mut labels = Vec::new();
    let cycle = loop {
        if labels.len() >= PERIOD_GUARD {
            return Err(Error::PeriodBoundExceeded(PERIOD_GUARD));
        }
        let c = walk.step()?;
        labels.push(c.label);
        let i = labels.len() - 1;
        let key = (walk.state.shaded.clone(), walk.state.last_crossed);
        if let Some(&j) = seen.get(&key) {
            break labels[j + 1..=i].to_vec();
        }
        seen.insert(key, i);
    };

    let ones: Vec<usize> = (0..cycle.len()).filter(|&i| cycle[i] == 1).collect();
    let Some(&first) = ones.first() else {
        return Err(Error::InconsistentPeriod(format!(
            "no label-1 wall in a cycle of {} crossings",
            cycle.len()
        )));
    };
    let n = cycle.len() / ones.len();
    let rotated: Vec<u32> = cycle[first..].iter().chain(&cycle[..first]).copied().collect();
    let equator_labels = rotated[..n].to_vec();
    if cycle.len() % ones.len() != 0
        || rotated.chunks(n).any(|chunk| chunk != equator_labels.as_slice())
    {
        return Err(Error::InconsistentPeriod(format!(
            "label cycle {cycle:?} is not a repetition of one run"
        )));
    }
    Ok(Period { n, equator_labels })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub label: u32,
    pub crossed_vertex: Vertex,
}

/// Chambers reachable by wall crossing, keyed by shaded set. Edges are
/// directed crossings; every crossing's reverse is also present once both
/// endpoints have been expanded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChamberGraph {
    pub diagram: String,
    pub chosen: Vec<Vertex>,
    pub nodes: Vec<Vec<Vertex>>,
    pub edges: Vec<GraphEdge>,
}

impl ChamberGraph {
    pub fn node_index(&self, shaded: &BTreeSet<Vertex>) -> Option<usize> {
        let key: Vec<Vertex> = shaded.iter().copied().collect();
        self.nodes.iter().position(|n| *n == key)
    }
}

/// Breadth-first closure under crossing every shaded vertex, expanding nodes
/// up to depth `max_depth - 1` so every recorded edge leaves a node at depth
/// below `max_depth`.
pub fn chamber_graph(
    diagram: &DynkinDiagram,
    chosen: &[Vertex],
    max_depth: usize,
) -> Result<ChamberGraph> {
    if chosen.is_empty() || chosen.len() > 2 {
        return Err(Error::Precondition(
            "chamber graphs take one or two chosen vertices".into(),
        ));
    }
    if max_depth == 0 {
        return Err(Error::Precondition("maxDepth must be at least 1".into()));
    }
    let start = initial_state(diagram, chosen)?;
    let mut index: HashMap<BTreeSet<Vertex>, usize> = HashMap::from([(start.shaded.clone(), 0)]);
    let mut nodes = vec![start.shaded.clone()];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((state, depth)) = queue.pop_front() {
        if depth >= max_depth {
            continue;
        }
        let from = index[&state.shaded];
        for &v in &state.shaded {
            let (next, c) = cross(&state, v)?;
            let to = match index.get(&next.shaded) {
                Some(&i) => i,
                None => {
                    let i = nodes.len();
                    index.insert(next.shaded.clone(), i);
                    nodes.push(next.shaded.clone());
                    queue.push_back((next, depth + 1));
                    i
                }
            };
            edges.push(GraphEdge {
                from,
                to,
                label: c.label,
                crossed_vertex: v,
            });
        }
    }
    let mut chosen: Vec<Vertex> = chosen.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    Ok(ChamberGraph {
        diagram: diagram.name(),
        chosen,
        nodes: nodes.into_iter().map(|s| s.into_iter().collect()).collect(),
        edges,
    })
}
