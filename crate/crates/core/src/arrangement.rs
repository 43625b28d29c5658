//! Periodic wall arrangements generated directly from restricted roots.
//!
//! For a chosen vertex set `J`, every positive root restricts to its
//! `J`-coordinates `c`. The arrangement consists of the walls
//! `{θ : c·θ = n}` for each nonzero restriction `c` and every integer `n`.
//! This is independent of the wall-crossing walk and serves as its oracle.
//!
//! Everything here is exact: positions are `Ratio<i64>`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{positive_roots, DynkinDiagram, Vertex};

pub type Q = Ratio<i64>;

/// The `J`-coordinates of a positive root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RestrictedRoot(pub Vec<i64>);

impl RestrictedRoot {
    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    fn content(&self) -> i64 {
        self.0.iter().fold(0, |g, &c| g.gcd(&c))
    }

    fn dot(&self, p: &[Q]) -> Q {
        self.0.iter().zip(p).map(|(&c, x)| x * c).sum()
    }
}

fn check_selection(diagram: &DynkinDiagram, j: &[Vertex]) -> Result<()> {
    if j.is_empty() {
        return Err(Error::EmptySelection);
    }
    if j.len() > 2 {
        return Err(Error::Precondition(
            "restricted roots are only built for one or two vertices".into(),
        ));
    }
    if let Some(&bad) = j.iter().find(|&&v| !diagram.contains(v)) {
        return Err(Error::UnknownVertex(bad));
    }
    if j.len() == 2 && j[0] == j[1] {
        return Err(Error::Precondition("the two chosen vertices coincide".into()));
    }
    Ok(())
}

/// Nonzero restrictions of the positive roots to the coordinates in `j`
/// (in the given order), deduplicated.
pub fn restricted_roots(diagram: &DynkinDiagram, j: &[Vertex]) -> Result<BTreeSet<RestrictedRoot>> {
    check_selection(diagram, j)?;
    Ok(positive_roots(diagram)
        .iter()
        .map(|r| RestrictedRoot(j.iter().map(|&v| r.coefficient(v)).collect()))
        .filter(|r| r.0.iter().any(|&c| c != 0))
        .collect())
}

/// A half-open box `[lo, hi)` in each coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    #[serde(with = "q_vec")]
    pub lo: Vec<Q>,
    #[serde(with = "q_vec")]
    pub hi: Vec<Q>,
}

impl Window {
    pub fn new(lo: Vec<Q>, hi: Vec<Q>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a >= b) {
            return Err(Error::EmptyWindow);
        }
        Ok(Window { lo, hi })
    }

    pub fn unit(dimension: usize) -> Self {
        Window {
            lo: vec![Q::zero(); dimension],
            hi: vec![Q::from_integer(1); dimension],
        }
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    pub fn translate(&self, shift: &[i64]) -> Window {
        let add = |v: &[Q]| v.iter().zip(shift).map(|(x, &s)| x + s).collect();
        Window {
            lo: add(&self.lo),
            hi: add(&self.hi),
        }
    }

    pub fn contains(&self, p: &[Q]) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (lo, hi))| lo <= x && x < hi)
    }
}

/// `{θ : normal·θ = level}`. In one dimension the wall also carries a label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Wall {
    pub normal: Vec<i64>,
    pub level: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<u32>,
}

impl Wall {
    /// Position of a 1D wall.
    pub fn position(&self) -> Q {
        Q::new(self.level, self.normal[0])
    }

    /// Primitive normal and rational level: equal keys mean equal walls.
    pub fn key(&self) -> (Vec<i64>, Q) {
        let g = self.normal.iter().fold(0i64, |g, &c| g.gcd(&c));
        (
            self.normal.iter().map(|c| c / g).collect(),
            Q::new(self.level, g),
        )
    }

    pub fn translate(&self, shift: &[i64]) -> Wall {
        let delta: i64 = self.normal.iter().zip(shift).map(|(c, s)| c * s).sum();
        Wall {
            level: self.level + delta,
            ..self.clone()
        }
    }

    /// The part of a 2D line inside the closed box of `window`, if it has
    /// positive length.
    pub fn segment_in(&self, window: &Window) -> Option<[(Q, Q); 2]> {
        let (x0, y0, x1, y1) = (window.lo[0], window.lo[1], window.hi[0], window.hi[1]);
        let square = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)];
        let f = |p: &(Q, Q)| p.0 * self.normal[0] + p.1 * self.normal[1] - self.level;
        let mut pts: Vec<(Q, Q)> = Vec::new();
        for i in 0..4 {
            let (a, b) = (square[i], square[(i + 1) % 4]);
            let (fa, fb) = (f(&a), f(&b));
            if fa.is_zero() {
                pts.push(a);
            }
            if fa * fb < Q::zero() {
                let t = fa / (fa - fb);
                pts.push((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)));
            }
        }
        pts.sort();
        pts.dedup();
        match pts.as_slice() {
            [p, .., q] if p != q => Some([*p, *q]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lattice {
    pub rank: usize,
    pub generators: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn standard(rank: usize) -> Self {
        Lattice {
            rank,
            generators: (0..rank)
                .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallArrangement {
    pub dimension: usize,
    /// Restricted roots generating the periodic arrangement.
    pub roots: Vec<RestrictedRoot>,
    pub walls: Vec<Wall>,
    pub window: Window,
    pub lattice: Lattice,
}

/// Walls through the window, keyed by primitive normal and level, each
/// represented by its smallest realising restricted root.
fn walls_in(roots: &BTreeSet<RestrictedRoot>, window: &Window) -> BTreeMap<(Vec<i64>, Q), Wall> {
    let mut out: BTreeMap<(Vec<i64>, Q), Wall> = BTreeMap::new();
    let mut ordered: Vec<&RestrictedRoot> = roots.iter().collect();
    ordered.sort_by_key(|r| (r.content(), r.0.clone()));
    for root in ordered {
        // c ≥ 0, so c·θ over the half-open box sweeps exactly [c·lo, c·hi).
        let from = root.dot(&window.lo).ceil().to_integer();
        let to = root.dot(&window.hi).ceil().to_integer();
        for level in from..to {
            let wall = Wall {
                normal: root.0.clone(),
                level,
                label: None,
            };
            out.entry(wall.key()).or_insert(wall);
        }
    }
    out
}

/// The 1D arrangement through `vertex`: walls at `n/c` for each restricted
/// coefficient `c`. A wall is labelled by the least `c` that produces it,
/// which is the denominator of its position in lowest terms.
pub fn oracle_walls_1d(diagram: &DynkinDiagram, vertex: Vertex, window: &Window) -> Result<WallArrangement> {
    if window.dimension() != 1 {
        return Err(Error::Precondition("a 1D arrangement needs a 1D window".into()));
    }
    let roots = restricted_roots(diagram, &[vertex])?;
    let mut walls: Vec<Wall> = walls_in(&roots, window)
        .into_values()
        .map(|w| Wall {
            label: Some(w.normal[0] as u32),
            ..w
        })
        .collect();
    walls.sort_by_key(|w| w.position());
    Ok(WallArrangement {
        dimension: 1,
        roots: roots.into_iter().collect(),
        walls,
        window: window.clone(),
        lattice: Lattice::standard(1),
    })
}

/// All lines `c₁x + c₂y = n` meeting the window, for `c` the restricted roots
/// of the pair `j`. Walls are unlabelled.
pub fn arrangement_2d(diagram: &DynkinDiagram, j: &[Vertex], window: &Window) -> Result<WallArrangement> {
    if j.len() != 2 {
        return Err(Error::Precondition(
            "a 2D arrangement needs exactly two vertices".into(),
        ));
    }
    if window.dimension() != 2 {
        return Err(Error::Precondition("a 2D arrangement needs a 2D window".into()));
    }
    let roots = restricted_roots(diagram, j)?;
    let walls = walls_in(&roots, window).into_values().collect();
    Ok(WallArrangement {
        dimension: 2,
        roots: roots.into_iter().collect(),
        walls,
        window: window.clone(),
        lattice: Lattice::standard(2),
    })
}

/// Connected pieces of the unit cell `[0,1)^d` cut out by the walls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chambers {
    Intervals(Vec<(Q, Q)>),
    /// Convex polygons, vertices counter-clockwise.
    Polygons(Vec<Vec<(Q, Q)>>),
}

impl Chambers {
    pub fn count(&self) -> usize {
        match self {
            Chambers::Intervals(v) => v.len(),
            Chambers::Polygons(v) => v.len(),
        }
    }
}

type Polygon = Vec<(Q, Q)>;

/// Splits a convex polygon along `normal·p = level`; `None` if the line misses
/// its interior.
fn split(poly: &Polygon, normal: &[i64], level: Q) -> Option<(Polygon, Polygon)> {
    let f = |p: &(Q, Q)| p.0 * normal[0] + p.1 * normal[1] - level;
    let values: Vec<Q> = poly.iter().map(f).collect();
    if !(values.iter().any(Signed::is_positive) && values.iter().any(Signed::is_negative)) {
        return None;
    }
    let (mut above, mut below) = (Vec::new(), Vec::new());
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        let (fa, fb) = (values[i], values[(i + 1) % poly.len()]);
        if !fa.is_negative() {
            above.push(a);
        }
        if !fa.is_positive() {
            below.push(a);
        }
        if fa * fb < Q::zero() {
            let t = fa / (fa - fb);
            let p = (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1));
            above.push(p);
            below.push(p);
        }
    }
    Some((above, below))
}

pub fn chambers_in_fundamental_domain(arrangement: &WallArrangement) -> Chambers {
    let roots: BTreeSet<RestrictedRoot> = arrangement.roots.iter().cloned().collect();
    let cell = Window::unit(arrangement.dimension);
    let walls = walls_in(&roots, &cell);
    match arrangement.dimension {
        1 => {
            let mut cuts: Vec<Q> = walls.values().map(Wall::position).collect();
            cuts.sort();
            let ends = cuts.iter().skip(1).copied().chain([Q::from_integer(1)]);
            Chambers::Intervals(cuts.iter().copied().zip(ends).collect())
        }
        _ => {
            let (zero, one) = (Q::zero(), Q::from_integer(1));
            let mut cells: Vec<Polygon> = vec![vec![(zero, zero), (one, zero), (one, one), (zero, one)]];
            for wall in walls.values() {
                let level = Q::from_integer(wall.level);
                let mut next = Vec::with_capacity(cells.len() + 4);
                for poly in cells {
                    match split(&poly, &wall.normal, level) {
                        Some((a, b)) => {
                            next.push(a);
                            next.push(b);
                        }
                        None => next.push(poly),
                    }
                }
                cells = next;
            }
            Chambers::Polygons(cells)
        }
    }
}

mod q_vec {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse::<Q>().map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(s: &str) -> DynkinDiagram {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn coeffs(set: &BTreeSet<RestrictedRoot>) -> Vec<Vec<i64>> {
        set.iter().map(|r| r.0.clone()).collect()
    }

    /// Lines of the unit square counted with Euler's formula: every line
    /// segment is split at the intersection points it contains, and
    /// `faces = edges - vertices + 1` for the connected planar graph.
    fn euler_chamber_count(roots: &BTreeSet<RestrictedRoot>) -> usize {
        let mut lines: BTreeSet<(Vec<i64>, Q)> = BTreeSet::new();
        for r in roots {
            let (a, b) = (r.0[0], r.0[1]);
            for n in 0..=(a + b) {
                let g = a.gcd(&b);
                lines.insert((vec![a / g, b / g], q(n, g)));
            }
        }
        let lines: Vec<_> = lines.into_iter().collect();
        let inside = |p: &(Q, Q)| {
            p.0 >= Q::zero() && p.0 <= Q::from_integer(1) && p.1 >= Q::zero() && p.1 <= Q::from_integer(1)
        };
        let meet = |l: &(Vec<i64>, Q), m: &(Vec<i64>, Q)| -> Option<(Q, Q)> {
            let det = l.0[0] * m.0[1] - l.0[1] * m.0[0];
            if det == 0 {
                return None;
            }
            let det = Q::from_integer(det);
            let x = (l.1 * m.0[1] - m.1 * l.0[1]) / det;
            let y = (m.1 * l.0[0] - l.1 * m.0[0]) / det;
            Some((x, y))
        };
        let mut points_on: Vec<BTreeSet<(Q, Q)>> = vec![BTreeSet::new(); lines.len()];
        for i in 0..lines.len() {
            for k in i + 1..lines.len() {
                if let Some(p) = meet(&lines[i], &lines[k]).filter(inside) {
                    points_on[i].insert(p);
                    points_on[k].insert(p);
                }
            }
        }
        let vertices: BTreeSet<(Q, Q)> = points_on.iter().flatten().copied().collect();
        let edges: usize = points_on.iter().map(|s| s.len().saturating_sub(1)).sum();
        edges + 1 - vertices.len()
    }

    #[test]
    fn restricted_root_examples() {
        assert_eq!(coeffs(&restricted_roots(&diag("E6"), &[3]).unwrap()), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(coeffs(&restricted_roots(&diag("A1"), &[1]).unwrap()), vec![vec![1]]);
        let e8 = restricted_roots(&diag("E8"), &[2, 7]).unwrap();
        for c in [[1, 0], [0, 1], [4, 2]] {
            assert!(e8.contains(&RestrictedRoot(c.to_vec())), "{c:?}");
        }
        assert!(matches!(restricted_roots(&diag("E8"), &[1, 2, 3]), Err(Error::Precondition(_))));
    }

    #[test]
    fn e6_middle_walls() {
        let arr = oracle_walls_1d(&diag("E6"), 3, &Window::unit(1)).unwrap();
        let pos: Vec<Q> = arr.walls.iter().map(Wall::position).collect();
        assert_eq!(pos, vec![q(0, 1), q(1, 3), q(1, 2), q(2, 3)]);
        let labels: Vec<u32> = arr.walls.iter().map(|w| w.label.unwrap()).collect();
        assert_eq!(labels, vec![1, 3, 2, 3]);
    }

    #[test]
    fn label_one_walls_are_integers() {
        let w = Window::new(vec![q(0, 1)], vec![q(2, 1)]).unwrap();
        let arr = oracle_walls_1d(&diag("D6"), 5, &w).unwrap();
        let pos: Vec<Q> = arr.walls.iter().map(Wall::position).collect();
        assert_eq!(pos, vec![q(0, 1), q(1, 1)]);
        assert!(arr.walls.iter().all(|w| w.label == Some(1)));
    }

    #[test]
    fn e8_label_five_walls() {
        let arr = oracle_walls_1d(&diag("E8"), 4, &Window::unit(1)).unwrap();
        let labels: Vec<u32> = arr.walls.iter().map(|w| w.label.unwrap()).collect();
        assert_eq!(labels, vec![1, 5, 4, 3, 5, 2, 5, 3, 4, 5]);
    }

    #[test]
    fn empty_window_is_rejected() {
        assert_eq!(Window::new(vec![q(1, 1)], vec![q(1, 1)]), Err(Error::EmptyWindow));
        assert_eq!(Window::new(vec![q(0, 1), q(2, 1)], vec![q(1, 1), q(1, 1)]), Err(Error::EmptyWindow));
    }

    #[test]
    fn half_open_window_edges() {
        let w = Window::new(vec![q(1, 2)], vec![q(1, 1)]).unwrap();
        let arr = oracle_walls_1d(&diag("E6"), 3, &w).unwrap();
        let pos: Vec<Q> = arr.walls.iter().map(Wall::position).collect();
        assert_eq!(pos, vec![q(1, 2), q(2, 3)]);
    }

    #[test]
    fn a2_triangle_tiling() {
        let arr = arrangement_2d(&diag("A2"), &[1, 2], &Window::unit(2)).unwrap();
        let normals: BTreeSet<Vec<i64>> = arr.walls.iter().map(|w| w.normal.clone()).collect();
        assert_eq!(normals, BTreeSet::from([vec![0, 1], vec![1, 0], vec![1, 1]]));
        // x = 0, y = 0, x + y = 0 and x + y = 1 meet [0,1)^2
        assert_eq!(arr.walls.len(), 4);
        assert_eq!(chambers_in_fundamental_domain(&arr).count(), 2);
    }

    #[test]
    fn single_vertex_2d_request_is_rejected() {
        assert!(matches!(
            arrangement_2d(&diag("A1"), &[1], &Window::unit(2)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn one_dimensional_chambers() {
        let arr = oracle_walls_1d(&diag("E6"), 3, &Window::unit(1)).unwrap();
        assert_eq!(chambers_in_fundamental_domain(&arr).count(), 4);
        let arr = oracle_walls_1d(&diag("A3"), 2, &Window::unit(1)).unwrap();
        assert_eq!(
            chambers_in_fundamental_domain(&arr),
            Chambers::Intervals(vec![(q(0, 1), q(1, 1))])
        );
    }

    #[test]
    fn polygon_split_matches_euler_count() {
        for (name, j) in [("A2", [1, 2]), ("A3", [1, 3]), ("D5", [2, 3]), ("E6", [3, 6]), ("E7", [3, 4]), ("E8", [2, 7])] {
            let d = diag(name);
            let arr = arrangement_2d(&d, &j, &Window::unit(2)).unwrap();
            let roots = restricted_roots(&d, &j).unwrap();
            assert_eq!(chambers_in_fundamental_domain(&arr).count(), euler_chamber_count(&roots), "{name}");
        }
    }

    #[test]
    fn polygons_tile_the_cell() {
        let arr = arrangement_2d(&diag("E8"), &[2, 7], &Window::unit(2)).unwrap();
        let Chambers::Polygons(polys) = chambers_in_fundamental_domain(&arr) else {
            panic!("2D arrangement gave intervals");
        };
        let area = |p: &Vec<(Q, Q)>| -> Q {
            let n = p.len();
            (0..n).map(|i| p[i].0 * p[(i + 1) % n].1 - p[(i + 1) % n].0 * p[i].1).sum::<Q>() / 2
        };
        assert!(polys.iter().all(|p| area(p) > Q::zero()));
        assert_eq!(polys.iter().map(area).sum::<Q>(), Q::from_integer(1));
    }

    #[test]
    fn segment_clipping() {
        let w = Wall { normal: vec![1, 1], level: 1, label: None };
        let seg = w.segment_in(&Window::unit(2)).unwrap();
        assert_eq!(seg, [(q(0, 1), q(1, 1)), (q(1, 1), q(0, 1))]);
        let corner = Wall { normal: vec![1, 1], level: 2, label: None };
        assert_eq!(corner.segment_in(&Window::unit(2)), None);
    }
}
