//! Reference triangulation: cut the surface along the arcs dual to the rose
//! to get a polygon, fan-triangulate it, and cone each puncture hole.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ComponentKind, Surface, SurfaceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexRole {
    BoundaryBase,
    BoundaryAux,
    Puncture,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub boundary: bool,
}

/// An edge used by a triangle, possibly against its orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub edge: usize,
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub surface: SurfaceSpec,
    pub vertices: Vec<VertexRole>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<[Side; 3]>,
    pub base_point_of: BTreeMap<String, usize>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

pub fn standard_triangulation(spec: &SurfaceSpec) -> crate::error::Result<Triangulation> {
    let surface = Surface::new(spec)?;
    Ok(triangulate(&surface))
}

fn triangulate(s: &Surface) -> Triangulation {
    let rib = &s.ribbon;
    let k = s.rank();
    if k == 0 {
        let mut base_point_of = BTreeMap::new();
        base_point_of.insert(s.spec.boundary[0].clone(), 0);
        let edges = (0..3).map(|i| Edge { from: i, to: (i + 1) % 3, boundary: true }).collect();
        let tri = [0, 1, 2].map(|e| Side { edge: e, reversed: false });
        return Triangulation {
            surface: s.spec.clone(),
            vertices: vec![VertexRole::BoundaryBase, VertexRole::BoundaryAux, VertexRole::BoundaryAux],
            edges,
            triangles: vec![tri],
            base_point_of,
        };
    }
    let m = 4 * k;
    let mut dsu = Dsu((0..m).collect());
    for e in 0..k {
        let p = rib.pos[2 * e];
        let q = rib.pos[2 * e + 1];
        dsu.union(2 * p, 2 * q + 1);
        dsu.union(2 * p + 1, 2 * q);
    }
    let mut class_id = BTreeMap::new();
    let mut vid = vec![0; m];
    for (v, slot) in vid.iter_mut().enumerate() {
        let r = dsu.find(v);
        let next = class_id.len();
        *slot = *class_id.entry(r).or_insert(next);
    }
    let mut vertices = vec![VertexRole::BoundaryAux; class_id.len()];
    let mut edges = Vec::new();
    // dual arcs
    let mut dual = vec![0; k];
    for (e, d) in dual.iter_mut().enumerate() {
        let p = rib.pos[2 * e];
        *d = edges.len();
        edges.push(Edge { from: vid[2 * p], to: vid[2 * p + 1], boundary: false });
    }
    // boundary segments, one per corner
    let mut seg = vec![0; 2 * k];
    for (c, sg) in seg.iter_mut().enumerate() {
        *sg = edges.len();
        edges.push(Edge { from: vid[2 * c + 1], to: vid[(2 * c + 2) % m], boundary: true });
    }
    let polygon_side = |sidx: usize| -> Side {
        if sidx.is_multiple_of(2) {
            let h = rib.order[sidx / 2];
            Side { edge: dual[h / 2], reversed: h % 2 == 1 }
        } else {
            Side { edge: seg[(sidx - 1) / 2], reversed: false }
        }
    };
    let mut diag = vec![usize::MAX; m];
    for (j, dj) in diag.iter_mut().enumerate().take(m - 1).skip(2) {
        *dj = edges.len();
        edges.push(Edge { from: vid[0], to: vid[j], boundary: false });
    }
    let mut triangles = Vec::new();
    for j in 1..=m - 2 {
        let first = if j == 1 { polygon_side(0) } else { Side { edge: diag[j], reversed: false } };
        let last = if j + 1 == m - 1 { polygon_side(m - 1) } else { Side { edge: diag[j + 1], reversed: true } };
        triangles.push([first, polygon_side(j), last]);
    }
    let mut base_point_of = BTreeMap::new();
    for comp in &s.components {
        let v = vid[2 * comp.base_corner + 1];
        match comp.kind {
            ComponentKind::Boundary => {
                vertices[v] = VertexRole::BoundaryBase;
                base_point_of.insert(comp.label.clone(), v);
            }
            ComponentKind::Puncture => {
                let loop_edge = seg[comp.base_corner];
                edges[loop_edge].boundary = false;
                vertices[v] = VertexRole::Interior;
                let p = vertices.len();
                vertices.push(VertexRole::Puncture);
                let spoke = edges.len();
                edges.push(Edge { from: v, to: p, boundary: false });
                triangles.push([
                    Side { edge: loop_edge, reversed: true },
                    Side { edge: spoke, reversed: false },
                    Side { edge: spoke, reversed: true },
                ]);
            }
        }
    }
    Triangulation { surface: s.spec.clone(), vertices, edges, triangles, base_point_of }
}

impl Side {
    fn ends(&self, t: &Triangulation) -> (usize, usize) {
        let e = &t.edges[self.edge];
        if self.reversed {
            (e.to, e.from)
        } else {
            (e.from, e.to)
        }
    }
}

/// Checks the structural invariants; returns one diagnostic per violation.
pub fn validate_triangulation(t: &Triangulation) -> Vec<String> {
    let mut diags = Vec::new();
    let nv = t.vertices.len();
    for (i, e) in t.edges.iter().enumerate() {
        if e.from >= nv || e.to >= nv {
            diags.push(format!("edge {i}: endpoint out of range"));
        }
    }
    if !diags.is_empty() {
        return diags;
    }
    let mut fwd = vec![0usize; t.edges.len()];
    let mut bwd = vec![0usize; t.edges.len()];
    for (ti, tri) in t.triangles.iter().enumerate() {
        if tri.iter().any(|s| s.edge >= t.edges.len()) {
            diags.push(format!("triangle {ti}: unknown edge"));
            continue;
        }
        for j in 0..3 {
            let (_, to) = tri[j].ends(t);
            let (from, _) = tri[(j + 1) % 3].ends(t);
            if to != from {
                diags.push(format!("triangle {ti}: sides {j} and {} do not meet", (j + 1) % 3));
            }
            if tri[j].reversed {
                bwd[tri[j].edge] += 1;
            } else {
                fwd[tri[j].edge] += 1;
            }
        }
    }
    for (i, e) in t.edges.iter().enumerate() {
        let uses = fwd[i] + bwd[i];
        if uses > 2 {
            diags.push(format!("edge {i}: non-manifold edge ({uses} triangle sides)"));
        } else if e.boundary && uses != 1 {
            diags.push(format!("edge {i}: boundary edge used {uses} times"));
        } else if !e.boundary && uses != 2 {
            diags.push(format!("edge {i}: interior edge used {uses} times"));
        } else if !e.boundary && (fwd[i] != 1 || bwd[i] != 1) {
            diags.push(format!("edge {i}: orientation mismatch"));
        }
    }
    let spec = &t.surface;
    let chi = nv as i64 - t.edges.len() as i64 + t.triangles.len() as i64;
    let expected = 2 - 2 * spec.genus as i64 - spec.boundary.len() as i64;
    if chi != expected {
        diags.push(format!("chi mismatch: V-E+F = {chi}, expected {expected}"));
    }
    // boundary trace
    let mut succ: Vec<Option<usize>> = vec![None; nv];
    let mut indeg = vec![0usize; nv];
    for (i, e) in t.edges.iter().enumerate().filter(|(_, e)| e.boundary) {
        if succ[e.from].is_some() {
            diags.push(format!("edge {i}: boundary vertex {} has two outgoing boundary edges", e.from));
        }
        succ[e.from] = Some(e.to);
        indeg[e.to] += 1;
    }
    let on_boundary: Vec<bool> = (0..nv).map(|v| succ[v].is_some() || indeg[v] > 0).collect();
    for v in 0..nv {
        if on_boundary[v] && (succ[v].is_none() || indeg[v] != 1) {
            diags.push(format!("vertex {v}: boundary does not close up"));
        }
    }
    let mut cycle_of = vec![usize::MAX; nv];
    let mut cycles = 0;
    for v in 0..nv {
        if !on_boundary[v] || cycle_of[v] != usize::MAX || succ[v].is_none() {
            continue;
        }
        let mut u = v;
        while cycle_of[u] == usize::MAX {
            cycle_of[u] = cycles;
            match succ[u] {
                Some(w) => u = w,
                None => break,
            }
        }
        cycles += 1;
    }
    if cycles != spec.boundary.len() {
        diags.push(format!("boundary has {cycles} components, expected {}", spec.boundary.len()));
    }
    let mut bases_per_cycle = vec![0usize; cycles];
    for (v, role) in t.vertices.iter().enumerate() {
        match role {
            VertexRole::BoundaryBase | VertexRole::BoundaryAux if !on_boundary[v] => {
                diags.push(format!("vertex {v}: tagged boundary but not on the boundary"))
            }
            VertexRole::Puncture | VertexRole::Interior if on_boundary[v] => {
                diags.push(format!("vertex {v}: tagged interior but on the boundary"))
            }
            VertexRole::BoundaryBase if cycle_of[v] != usize::MAX => bases_per_cycle[cycle_of[v]] += 1,
            _ => {}
        }
    }
    for (c, &b) in bases_per_cycle.iter().enumerate() {
        if b != 1 {
            diags.push(format!("boundary component {c}: {b} base points"));
        }
    }
    for label in &spec.boundary {
        match t.base_point_of.get(label) {
            Some(&v) if v < nv && t.vertices[v] == VertexRole::BoundaryBase => {}
            _ => diags.push(format!("boundary {label}: missing base point")),
        }
    }
    let punct = t.vertices.iter().filter(|r| **r == VertexRole::Puncture).count();
    if punct != spec.punctures as usize {
        diags.push(format!("{punct} puncture vertices, expected {}", spec.punctures));
    }
    diags
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_triangulations_validate() {
        for g in 0..=3 {
            for d in 1..=4 {
                for n in 0..=5 {
                    let spec = SurfaceSpec::new(g, d).with_punctures(n);
                    let t = standard_triangulation(&spec).unwrap();
                    assert_eq!(validate_triangulation(&t), Vec::<String>::new(), "{spec}");
                    assert_eq!(t, standard_triangulation(&spec).unwrap());
                }
            }
        }
    }

    #[test]
    fn corruptions_are_reported() {
        let spec = SurfaceSpec::new(1, 1);
        let mut t = standard_triangulation(&spec).unwrap();
        let extra = t.triangles[0];
        t.triangles.push(extra);
        let d = validate_triangulation(&t);
        assert!(d.iter().any(|m| m.contains("non-manifold edge")), "{d:?}");
        assert!(d.iter().any(|m| m.contains("chi mismatch")));

        let mut t = standard_triangulation(&spec).unwrap();
        t.surface.genus = 2;
        assert!(validate_triangulation(&t).iter().any(|m| m.contains("chi mismatch")));
    }
}
