//! Instance generators from Vertex Cover, each with a certificate stating the
//! flooding optimum it should have, and a brute-force Vertex Cover solver to
//! check those certificates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{FloodError, Result};
use crate::graph::{Color, ColoredGraph, Vertex};
use crate::interval::IntervalRepresentation;

/// A simple undirected graph given as a Vertex Cover input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcInstance {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl VcInstance {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(FloodError::UnknownVertex(u.max(v)));
            }
            if u == v {
                return Err(FloodError::InvalidInput(format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(FloodError::InvalidInput(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(VcInstance { n, edges })
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Vertices that lie on at least one edge form a single component.
    fn edges_connected(&self) -> bool {
        let mut dsu = DisjointSets::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        let mut roots = self.edges.iter().map(|&(u, _)| dsu.find(u)).collect::<Vec<_>>();
        roots.dedup();
        roots.sort_unstable();
        roots.dedup();
        roots.len() <= 1
    }
}

/// What a reduction claims about its output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    /// The flooding optimum equals `offset + τ(source)`.
    pub offset: usize,
    pub color_legend: BTreeMap<Color, String>,
    pub vertex_legend: Vec<String>,
    /// Source edges in gadget order.
    pub edge_order: Vec<(Vertex, Vertex)>,
}

fn check_source(vc: &VcInstance, min_edges: usize) -> Result<()> {
    if vc.m() < min_edges {
        return Err(FloodError::ReductionDomain(format!("needs at least {min_edges} edges, got {}", vc.m())));
    }
    if !vc.edges_connected() {
        return Err(FloodError::ReductionDomain("source edges must form one component".into()));
    }
    Ok(())
}

/// Caterpillar of maximum degree 3 whose optimum is `3m + τ`.
///
/// Edge `i = {u, v}` becomes backbone vertices `b1..b6` (ids `5i..=5i+5`, so
/// consecutive gadgets share `b6 = b1`) and hairs `h3` on `b3`, `h4` on `b4`
/// (ids `5m + 1 + 2i` and `5m + 2 + 2i`). Colors: `b = 1`, `e = 2`, source
/// vertex `x` is `3 + x`.
pub fn vc_to_caterpillar(vc: &VcInstance) -> Result<(ColoredGraph, ReductionCertificate)> {
    check_source(vc, 1)?;
    let m = vc.m();
    let backbone = 5 * m + 1;
    let n = backbone + 2 * m;
    let k = vc.n as Color + 2;
    let (b, e) = (1, 2);
    let vertex_color = |x: Vertex| 3 + x as Color;
    let mut colors = vec![b; n];
    let mut legend = vec![String::new(); n];
    let mut edges: Vec<(Vertex, Vertex)> = (0..backbone - 1).map(|i| (i, i + 1)).collect();
    for (i, &(u, v)) in vc.edges.iter().enumerate() {
        let base = 5 * i;
        let gadget = [b, e, vertex_color(v), vertex_color(u), e, b];
        for (j, &c) in gadget.iter().enumerate() {
            colors[base + j] = c;
            legend[base + j] = format!("b{}", j + 1);
        }
        let (h3, h4) = (backbone + 2 * i, backbone + 2 * i + 1);
        colors[h3] = vertex_color(u);
        colors[h4] = vertex_color(v);
        legend[h3] = "h3".into();
        legend[h4] = "h4".into();
        edges.push((base + 2, h3));
        edges.push((base + 3, h4));
    }
    let g = ColoredGraph::new(n, &edges, colors, k)?;
    let mut color_legend = BTreeMap::from([(b, "b".to_string()), (e, "e".to_string())]);
    for x in 0..vc.n {
        color_legend.insert(vertex_color(x), format!("v{x}"));
    }
    let cert = ReductionCertificate { offset: 3 * m, color_legend, vertex_legend: legend, edge_order: vc.edges.clone() };
    Ok((g, cert))
}

/// Proper interval representation whose optimum is `m² + τ`.
///
/// Unit intervals `[t, t + 1]` with gadget stride `2m`: backbone `i` sits at
/// `t = 2mi`, the twins `J_i`, `J'_i` (colors `u`, `v`) at `t = 2mi + m`, and
/// the two paths joining them to the neighbouring backbones carry the same
/// colors `w_1^i..w_{m-1}^i`, numbered outward from the twins. Colors: `b =
/// 1`, source vertex `x` is `2 + x`, `w_j^i` is `2 + n + i(m − 1) + j − 1`.
pub fn vc_to_proper_interval(vc: &VcInstance) -> Result<(IntervalRepresentation, ReductionCertificate)> {
    if vc.m() < 2 {
        return Err(FloodError::ReductionDomain(
            "the proper interval construction needs m >= 2: with one edge the joining paths have no interior".into(),
        ));
    }
    check_source(vc, 2)?;
    let m = vc.m();
    let stride = 2 * m;
    let b: Color = 1;
    let vertex_color = |x: Vertex| 2 + x as Color;
    let w = |i: usize, j: usize| (2 + vc.n + i * (m - 1) + j - 1) as Color;
    let k = (vc.n + m * (m - 1) + 1) as Color;

    let mut intervals = Vec::new();
    let mut colors = Vec::new();
    let mut legend = Vec::new();
    let mut push = |t: usize, c: Color, role: String| {
        intervals.push((t, t + 1));
        colors.push(c);
        legend.push(role);
    };
    for i in 0..=m {
        push(stride * i, b, format!("I{i}"));
    }
    for (i, &(u, v)) in vc.edges.iter().enumerate() {
        let mid = stride * i + m;
        push(mid, vertex_color(u), format!("J{i}"));
        push(mid, vertex_color(v), format!("J'{i}"));
        for j in 1..m {
            push(mid - j, w(i, j), format!("left w{j}^{i}"));
        }
        for j in 1..m {
            push(mid + j, w(i, j), format!("right w{j}^{i}"));
        }
    }
    let mut color_legend = BTreeMap::from([(b, "b".to_string())]);
    for x in 0..vc.n {
        color_legend.insert(vertex_color(x), format!("v{x}"));
    }
    for i in 0..m {
        for j in 1..m {
            color_legend.insert(w(i, j), format!("w{j}^{i}"));
        }
    }
    let rep = IntervalRepresentation { intervals, colors, k };
    rep.validate()?;
    let cert = ReductionCertificate { offset: m * m, color_legend, vertex_legend: legend, edge_order: vc.edges.clone() };
    Ok((rep, cert))
}

/// Minimum vertex cover size and a cover, by subsets of increasing size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCover {
    pub tau: usize,
    pub cover: Vec<Vertex>,
}

pub const VC_BRUTEFORCE_MAX: usize = 20;

pub fn vc_bruteforce(vc: &VcInstance) -> Result<VertexCover> {
    if vc.n > VC_BRUTEFORCE_MAX {
        return Err(FloodError::Capacity { what: "vertex cover brute force vertices", needed: vc.n, max: VC_BRUTEFORCE_MAX });
    }
    let covers = |mask: u32| vc.edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1);
    let best = (0u32..1 << vc.n)
        .filter(|&mask| covers(mask))
        .min_by_key(|&mask| (mask.count_ones(), mask.reverse_bits()))
        .expect("the full vertex set is a cover");
    let cover = (0..vc.n).filter(|&v| best >> v & 1 == 1).collect();
    Ok(VertexCover { tau: best.count_ones() as usize, cover })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_covers() {
        let edge = VcInstance::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(vc_bruteforce(&edge).unwrap().tau, 1);
        let k3 = VcInstance::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(vc_bruteforce(&k3).unwrap().tau, 2);
        let c5 = VcInstance::new(5, (0..5).map(|i| (i, (i + 1) % 5)).collect()).unwrap();
        assert_eq!(vc_bruteforce(&c5).unwrap().tau, 3);
    }

    #[test]
    fn caterpillar_shape() {
        let k3 = VcInstance::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let (g, cert) = vc_to_caterpillar(&k3).unwrap();
        assert_eq!(g.n(), 16 + 6);
        assert_eq!(g.k(), 5);
        assert_eq!(cert.offset, 9);
        assert!(g.vertices().all(|v| g.degree(v) <= 3));
    }

    #[test]
    fn proper_interval_shape() {
        let p3 = VcInstance::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let (rep, cert) = vc_to_proper_interval(&p3).unwrap();
        assert_eq!(rep.n(), 11);
        assert_eq!(rep.k, 6);
        assert_eq!(cert.offset, 4);
        assert!(rep.is_proper());
        // with m = 2 the layout coincides with the integer one
        assert_eq!(&rep.intervals[..3], &[(0, 1), (4, 5), (8, 9)]);
        assert_eq!(rep.intervals[3], (2, 3));
        let k3 = VcInstance::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(vc_to_proper_interval(&k3).unwrap().0.k, 10);
    }

    #[test]
    fn domain_errors() {
        let edge = VcInstance::new(2, vec![(0, 1)]).unwrap();
        assert!(matches!(vc_to_proper_interval(&edge), Err(FloodError::ReductionDomain(_))));
        let empty = VcInstance::new(2, vec![]).unwrap();
        assert!(matches!(vc_to_caterpillar(&empty), Err(FloodError::ReductionDomain(_))));
        let split = VcInstance::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(vc_to_caterpillar(&split), Err(FloodError::ReductionDomain(_))));
        let isolated = VcInstance::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(vc_to_caterpillar(&isolated).unwrap().0.k(), 5);
    }
}
