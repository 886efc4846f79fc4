//! Small hand-built foliation graphs and systematic corruptions of them.

use super::*;

struct Builder {
    g: FoliationGraph,
}

impl Builder {
    fn new(genus: u32, boundary_count: u32) -> Builder {
        Builder {
            g: FoliationGraph {
                surface: FoliatedSurface { genus, boundary_count, closed: boundary_count == 0 },
                elliptic: Vec::new(),
                hyperbolic: Vec::new(),
                fake: Vec::new(),
                incidence: Vec::new(),
                c_circles: false,
                c_circles_essential: false,
            },
        }
    }

    fn e(mut self, id: &str, sign: i8, a_arcs: bool) -> Builder {
        self.g.elliptic.push(EllipticPoint {
            id: id.into(),
            sign,
            binding: "C1".into(),
            essential: true,
            strongly_essential: sign < 0,
            a_arcs,
        });
        self
    }

    fn h(mut self, id: &str, sign: i8, region: Region, ends: &[&str]) -> Builder {
        self.g.hyperbolic.push(HyperbolicPoint { id: id.into(), sign, region, degenerated: false });
        for v in ends {
            if v.starts_with('f') && !self.g.fake.iter().any(|f| f == v) {
                self.g.fake.push(v.to_string());
            }
            self.g.incidence.push((v.to_string(), id.into()));
        }
        self
    }

    fn c(mut self, essential: bool) -> Builder {
        self.g.c_circles = true;
        self.g.c_circles_essential = essential;
        self
    }

    fn degenerate(mut self, id: &str) -> Builder {
        self.g.hyperbolic.iter_mut().find(|h| h.id == id).expect("known id").degenerated = true;
        self
    }

    fn done(self) -> FoliationGraph {
        self.g
    }
}

/// Disc with one negative elliptic point `v` surrounded by `k` positive ab-tiles.
pub fn ot_disc(k: usize) -> FoliationGraph {
    let mut b = Builder::new(0, 1).e("v", -1, false);
    for i in 1..=k {
        b = b.e(&format!("w{i}"), 1, true);
    }
    for i in 1..=k {
        let (wi, wj, f) = (format!("w{i}"), format!("w{}", i % k + 1), format!("f{i}"));
        b = b.h(&format!("h{i}"), 1, Region::Ab, &[&wi, &wj, "v", &f]);
    }
    b.done()
}

/// The standard unknot disc: counts `(e+, e-, h+, h-) = (2, 0, 1, 0)`.
pub fn unknot_disc() -> FoliationGraph {
    Builder::new(0, 1).e("w1", 1, true).e("w2", 1, true).h("h1", 1, Region::Aa, &["w1", "w2", "f1", "f2"]).done()
}

pub fn valid_graphs() -> Vec<(&'static str, FoliationGraph)> {
    vec![
        ("unknot disc", unknot_disc()),
        ("radial disc", Builder::new(0, 1).e("w", 1, true).done()),
        ("overtwisted disc k=3", ot_disc(3)),
        ("overtwisted disc k=1", ot_disc(1)),
        ("sphere", Builder::new(0, 0).e("w", 1, false).e("v", -1, false).done()),
        (
            "sphere with bb-tiles",
            Builder::new(0, 0)
                .e("w1", 1, false)
                .e("w2", 1, false)
                .e("v1", -1, false)
                .e("v2", -1, false)
                .h("h1", 1, Region::Bb, &["w1", "w2", "v1", "v2"])
                .h("h2", -1, Region::Bb, &["w1", "w2", "v1", "v2"])
                .done(),
        ),
        (
            "torus",
            Builder::new(1, 0)
                .e("w", 1, false)
                .e("v", -1, false)
                .h("h1", 1, Region::Bb, &["w", "w", "v", "v"])
                .h("h2", -1, Region::Bb, &["w", "w", "v", "v"])
                .done(),
        ),
        (
            "annulus with bc-annuli",
            Builder::new(0, 2)
                .e("w", 1, false)
                .e("v", -1, false)
                .h("h1", 1, Region::Bc, &["w", "v"])
                .h("h2", -1, Region::Bc, &["w", "v"])
                .c(true)
                .degenerate("h2")
                .done(),
        ),
        ("pants", Builder::new(0, 3).h("h1", 1, Region::Cc, &[]).c(false).done()),
        (
            "disc with bb-tiles",
            Builder::new(0, 1)
                .e("w1", 1, true)
                .e("w2", 1, true)
                .e("v1", -1, false)
                .e("v2", -1, false)
                .h("h1", 1, Region::Bb, &["w1", "w2", "v1", "v2"])
                .h("h2", -1, Region::Bb, &["w1", "w2", "v1", "v2"])
                .h("h3", 1, Region::Ab, &["w1", "w2", "v1", "f1"])
                .done(),
        ),
        (
            "holed torus",
            Builder::new(1, 1)
                .e("w", 1, true)
                .e("v", -1, false)
                .h("h1", 1, Region::Bb, &["w", "w", "v", "v"])
                .h("h2", -1, Region::Bb, &["w", "w", "v", "v"])
                .h("h3", -1, Region::Ab, &["w", "w", "v", "f1"])
                .done(),
        ),
        ("negative aa disc", Builder::new(0, 1).e("w1", 1, true).e("w2", 1, true).h("h1", -1, Region::Aa, &["w1", "w2", "f1", "f2"]).done()),
    ]
}

/// Single-field changes of `g`, each of which breaks a checked rule.
///
/// Not included: hyperbolic signs (no rule constrains them) and the
/// degenerated flag of regions that may degenerate.
pub fn corruptions(g: &FoliationGraph) -> Vec<(String, FoliationGraph)> {
    let mut out = Vec::new();
    let mut push = |what: String, h: FoliationGraph| out.push((what, h));
    for i in 0..g.elliptic.len() {
        let id = &g.elliptic[i].id;
        let mut h = g.clone();
        h.elliptic[i].sign = -h.elliptic[i].sign;
        push(format!("sign of {id}"), h);
        let mut h = g.clone();
        h.elliptic[i].a_arcs = !h.elliptic[i].a_arcs;
        push(format!("a-arc flag of {id}"), h);
        let e = &g.elliptic[i];
        if e.strongly_essential {
            let mut h = g.clone();
            h.elliptic[i].essential = false;
            push(format!("essential flag of {id}"), h);
        } else if !e.essential {
            let mut h = g.clone();
            h.elliptic[i].strongly_essential = true;
            push(format!("strongly essential flag of {id}"), h);
        }
    }
    for i in 0..g.hyperbolic.len() {
        let hp = &g.hyperbolic[i];
        for r in Region::ALL {
            if r != hp.region {
                let mut h = g.clone();
                h.hyperbolic[i].region = r;
                push(format!("region of {} to {r}", hp.id), h);
            }
        }
        if !hp.region.may_degenerate() {
            let mut h = g.clone();
            h.hyperbolic[i].degenerated = true;
            push(format!("degenerated flag of {}", hp.id), h);
        }
    }
    for i in 0..g.incidence.len() {
        let mut h = g.clone();
        h.incidence.remove(i);
        push(format!("drop incidence {:?}", g.incidence[i]), h);
        let mut h = g.clone();
        h.incidence.push(g.incidence[i].clone());
        push(format!("repeat incidence {:?}", g.incidence[i]), h);
    }
    for i in 0..g.fake.len() {
        let mut h = g.clone();
        h.fake.remove(i);
        push(format!("drop fake vertex {}", g.fake[i]), h);
    }
    let mut h = g.clone();
    h.surface.genus += 1;
    push("genus".into(), h);
    let mut h = g.clone();
    h.surface.boundary_count += 1;
    push("boundary count".into(), h);
    let mut h = g.clone();
    h.surface.closed = !h.surface.closed;
    push("closed flag".into(), h);
    if g.c_circles && g.hyperbolic.iter().any(|h| h.region.has_c_circles()) {
        let mut h = g.clone();
        h.c_circles = false;
        push("c-circle flag".into(), h);
    }
    if !g.c_circles {
        let mut h = g.clone();
        h.c_circles_essential = true;
        push("c-circle essential flag".into(), h);
    }
    out
}
