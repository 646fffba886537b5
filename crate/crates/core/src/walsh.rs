//! A line with stacked frames.
//!
//! The space is `R` with, for every `n >= 1`, a rectangular frame `C_n` of
//! width `2n` and height `n` glued along its bottom edge `[-n, n]`. Only the
//! three free sides of a frame are new; they form a path of length `4n` from
//! the corner `(-n, 0)` to the corner `(n, 0)`, parameterized by arc length.
//! All coordinates are exact rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WalshPoint {
    Line(Rational64),
    /// Arc position strictly inside `(0, 4n)` on the frame `C_n`.
    Frame {
        n: u32,
        pos: Rational64,
    },
}

impl WalshPoint {
    pub fn line(s: impl Into<Rational64>) -> Self {
        WalshPoint::Line(s.into())
    }

    /// A point on `C_n`; the end positions `0` and `4n` are the corners on
    /// the line.
    pub fn frame(n: u32, pos: impl Into<Rational64>) -> Result<Self> {
        let pos = pos.into();
        if n == 0 {
            return Err(Error::ZeroFrame);
        }
        let len = Rational64::from(4 * n as i64);
        if pos < Rational64::zero() || pos > len {
            return Err(Error::ArcOutOfRange {
                n,
                pos: *pos.numer() as f64 / *pos.denom() as f64,
                len: 4 * n,
            });
        }
        let n_r = Rational64::from(n as i64);
        Ok(if pos.is_zero() {
            WalshPoint::Line(-n_r)
        } else if pos == len {
            WalshPoint::Line(n_r)
        } else {
            WalshPoint::Frame { n, pos }
        })
    }

    /// Planar coordinates of the point.
    pub fn coordinates(&self) -> (Rational64, Rational64) {
        match *self {
            WalshPoint::Line(s) => (s, Rational64::zero()),
            WalshPoint::Frame { n, pos } => {
                let n = Rational64::from(n as i64);
                if pos <= n {
                    (-n, pos)
                } else if pos <= n * 3 {
                    (pos - n * 2, n)
                } else {
                    (n, n * 4 - pos)
                }
            }
        }
    }
}

impl fmt::Display for WalshPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalshPoint::Line(s) => write!(f, "Line({s})"),
            WalshPoint::Frame { n, pos } => write!(f, "Frame({n}, {pos})"),
        }
    }
}

/// The base point `b0 = 0` on the line.
pub fn b0() -> WalshPoint {
    WalshPoint::Line(Rational64::zero())
}

/// Left corner `(-n, 0)` of `C_n`.
pub fn x1(n: u32) -> WalshPoint {
    WalshPoint::Line(Rational64::from(-(n as i64)))
}

/// Right corner `(n, 0)` of `C_n`.
pub fn x2(n: u32) -> WalshPoint {
    WalshPoint::Line(Rational64::from(n as i64))
}

/// Upper left corner `(-n, n)` of `C_n`.
pub fn y1(n: u32) -> WalshPoint {
    WalshPoint::Frame {
        n,
        pos: Rational64::from(n as i64),
    }
}

/// Upper right corner `(n, n)` of `C_n`.
pub fn y2(n: u32) -> WalshPoint {
    WalshPoint::Frame {
        n,
        pos: Rational64::from(3 * n as i64),
    }
}

/// Ways to reach the line from a point: `(line coordinate, cost)`.
fn exits(p: &WalshPoint) -> Vec<(Rational64, Rational64)> {
    match *p {
        WalshPoint::Line(s) => vec![(s, Rational64::zero())],
        WalshPoint::Frame { n, pos } => {
            let n = Rational64::from(n as i64);
            vec![(-n, pos), (n, n * 4 - pos)]
        }
    }
}

pub fn walsh_distance(p: &WalshPoint, q: &WalshPoint) -> Rational64 {
    let mut best = None::<Rational64>;
    for (c1, k1) in exits(p) {
        for (c2, k2) in exits(q) {
            let d = k1 + (c1 - c2).abs() + k2;
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    let mut best = best.expect("every point has an exit");
    if let (WalshPoint::Frame { n: n1, pos: l1 }, WalshPoint::Frame { n: n2, pos: l2 }) = (p, q) {
        if n1 == n2 {
            best = best.min((*l1 - *l2).abs());
        }
    }
    best
}

/// Gromov product based at `b0`.
pub fn walsh_gromov(p: &WalshPoint, q: &WalshPoint) -> Rational64 {
    let o = b0();
    (walsh_distance(&o, p) + walsh_distance(&o, q) - walsh_distance(p, q)) / 2
}

/// `h_q(p) = d(p, q) - d(b0, q)`.
pub fn horofunction(q: &WalshPoint, p: &WalshPoint) -> Rational64 {
    walsh_distance(p, q) - walsh_distance(&b0(), q)
}

/// Shortest-path distance on the explicit graph of frames `1..=max_frame`
/// (widened to contain both query points), computed by Dijkstra.
pub fn dijkstra_distance(p: &WalshPoint, q: &WalshPoint, max_frame: u32) -> Rational64 {
    use petgraph::algo::dijkstra;
    use petgraph::graph::{NodeIndex, UnGraph};

    let frame_of = |w: &WalshPoint| match w {
        WalshPoint::Frame { n, .. } => *n,
        WalshPoint::Line(s) => s.abs().ceil().to_integer() as u32,
    };
    let k = max_frame.max(frame_of(p)).max(frame_of(q));

    let mut graph = UnGraph::<WalshPoint, Rational64>::new_undirected();
    let mut line_nodes: BTreeMap<Rational64, NodeIndex> = BTreeMap::new();
    let mut line_node = |g: &mut UnGraph<WalshPoint, Rational64>, s: Rational64| {
        *line_nodes
            .entry(s)
            .or_insert_with(|| g.add_node(WalshPoint::Line(s)))
    };

    let mut frame_stops: BTreeMap<u32, Vec<(Rational64, NodeIndex)>> = BTreeMap::new();
    let mut endpoints = [NodeIndex::end(); 2];
    for (slot, w) in [p, q].into_iter().enumerate() {
        endpoints[slot] = match *w {
            WalshPoint::Line(s) => line_node(&mut graph, s),
            WalshPoint::Frame { n, pos } => {
                let stops = frame_stops.entry(n).or_default();
                match stops.iter().find(|(l, _)| *l == pos) {
                    Some(&(_, idx)) => idx,
                    None => {
                        let idx = graph.add_node(*w);
                        stops.push((pos, idx));
                        idx
                    }
                }
            }
        };
    }

    for n in 1..=k {
        let len = Rational64::from(4 * n as i64);
        let left = line_node(&mut graph, Rational64::from(-(n as i64)));
        let right = line_node(&mut graph, Rational64::from(n as i64));
        let mut stops = frame_stops.remove(&n).unwrap_or_default();
        stops.sort_by_key(|s| s.0);
        let mut prev = (Rational64::zero(), left);
        for (pos, idx) in stops.into_iter().chain([(len, right)]) {
            graph.add_edge(prev.1, idx, pos - prev.0);
            prev = (pos, idx);
        }
    }

    let line: Vec<(Rational64, NodeIndex)> = line_nodes.into_iter().collect();
    for w in line.windows(2) {
        graph.add_edge(w[0].1, w[1].1, w[1].0 - w[0].0);
    }

    let dist = dijkstra(&graph, endpoints[0], Some(endpoints[1]), |e| *e.weight());
    dist[&endpoints[1]]
}

/// Total order used for deterministic output.
pub fn compare(p: &WalshPoint, q: &WalshPoint) -> Ordering {
    match (p, q) {
        (WalshPoint::Line(a), WalshPoint::Line(b)) => a.cmp(b),
        (WalshPoint::Line(_), WalshPoint::Frame { .. }) => Ordering::Less,
        (WalshPoint::Frame { .. }, WalshPoint::Line(_)) => Ordering::Greater,
        (WalshPoint::Frame { n: n1, pos: l1 }, WalshPoint::Frame { n: n2, pos: l2 }) => {
            n1.cmp(n2).then(l1.cmp(l2))
        }
    }
}
