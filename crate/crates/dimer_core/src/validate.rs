//! Axiom checks for a dimer model with boundary on the disc.

use serde::Serialize;

use crate::error::StructuralError;
use crate::model::{Color, DimerModel, Topology};

/// Outcome of one axiom over the whole model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// Ids of the offending vertices, arrows or faces (which kind depends on the axiom).
    pub offending: Vec<u32>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub passed: bool,
    pub n: usize,
    pub connected: bool,
    pub checks: Vec<AxiomCheck>,
}

impl ModelReport {
    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{} ({})", c.axiom, c.detail))
            .collect();
        if failed.is_empty() {
            "all axioms hold".to_string()
        } else {
            failed.join("; ")
        }
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

fn check(axiom: &'static str, offending: Vec<u32>, detail: impl Into<String>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: offending.is_empty(),
        offending,
        detail: detail.into(),
    }
}

/// Validates `model` against every dimer-model axiom.
///
/// Returns a structural error only when ids cannot be resolved or a face
/// cycle does not close; every other problem is reported in the
/// [`ModelReport`].
pub fn validate(model: &DimerModel) -> Result<ModelReport, StructuralError> {
    let topo = Topology::build(model)?;
    let nv = model.vertices.len();
    let na = model.arrows.len();

    let loops: Vec<u32> = (0..na)
        .filter(|&a| topo.tail[a] == topo.head[a])
        .map(|a| model.arrows[a].id)
        .collect();

    // Face multiplicity: internal arrows lie in one black and one white face,
    // boundary arrows in exactly one face.
    let mut multiplicity = Vec::new();
    for (a, arrow) in model.arrows.iter().enumerate() {
        let occ = &topo.occurrences[a];
        let ok = if arrow.is_boundary {
            occ.len() == 1
        } else {
            occ.len() == 2 && topo.colors[occ[0].0] != topo.colors[occ[1].0]
        };
        if !ok {
            multiplicity.push(arrow.id);
        }
    }

    // Flags: boundary labels exactly on boundary arrows, boundary vertices
    // exactly those touched by a boundary arrow.
    let mut flag_arrows = Vec::new();
    let mut on_boundary = vec![false; nv];
    for (a, arrow) in model.arrows.iter().enumerate() {
        if arrow.is_boundary != arrow.boundary_label.is_some() {
            flag_arrows.push(arrow.id);
        }
        if arrow.is_boundary {
            on_boundary[topo.tail[a]] = true;
            on_boundary[topo.head[a]] = true;
        }
    }
    let flag_vertices: Vec<u32> = (0..nv)
        .filter(|&v| model.vertices[v].is_boundary != on_boundary[v])
        .map(|v| model.vertices[v].id)
        .collect();
    let mut flag_offending = flag_arrows.clone();
    flag_offending.extend(&flag_vertices);
    let flags = check(
        "boundary_flags",
        flag_offending,
        format!(
            "{} arrows with inconsistent label flags, {} vertices with inconsistent boundary flags",
            flag_arrows.len(),
            flag_vertices.len()
        ),
    );

    let incidence = incidence_failures(model, &topo);
    let euler_value = nv as i64 - na as i64 + model.faces.len() as i64;
    let euler = AxiomCheck {
        axiom: "euler_characteristic",
        passed: euler_value == 1,
        offending: vec![],
        detail: format!("|Q0| - |Q1| + |Q2| = {euler_value}"),
    };
    let (boundary, n) = boundary_cycle_check(model, &topo);
    let connected = is_connected(nv, &topo);
    let connectivity = AxiomCheck {
        axiom: "connected",
        passed: connected,
        offending: vec![],
        detail: if connected {
            "quiver is connected".into()
        } else {
            "quiver is disconnected".into()
        },
    };

    let checks = vec![
        check("no_loops", loops, "arrows with tail equal to head"),
        check(
            "face_multiplicity",
            multiplicity,
            "internal arrows need one black and one white face, boundary arrows one face",
        ),
        flags,
        check(
            "incidence_graph",
            incidence,
            "incidence graph must be a line at boundary vertices and a cycle at internal vertices",
        ),
        euler,
        boundary,
        connectivity,
    ];
    let passed = checks.iter().all(|c| c.passed);
    Ok(ModelReport {
        passed,
        n,
        connected,
        checks,
    })
}

/// Vertices whose incidence graph is not a nonempty line (boundary) or cycle (internal).
///
/// The incidence graph at `v` has the arrows incident with `v` as nodes and an
/// edge for every consecutive pair `a, b` in a face cycle with `h a = v = t b`.
fn incidence_failures(model: &DimerModel, topo: &Topology) -> Vec<u32> {
    let nv = model.vertices.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for a in 0..model.arrows.len() {
        incident[topo.tail[a]].push(a);
        if topo.head[a] != topo.tail[a] {
            incident[topo.head[a]].push(a);
        }
    }
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for cycle in &topo.cycles {
        for pos in 0..cycle.len() {
            let a = cycle[pos];
            let b = cycle[(pos + 1) % cycle.len()];
            edges[topo.head[a]].push((a, b));
        }
    }
    let mut bad = Vec::new();
    for v in 0..nv {
        let nodes = &incident[v];
        if nodes.is_empty() {
            bad.push(model.vertices[v].id);
            continue;
        }
        let pos_of = |a: usize| nodes.iter().position(|&x| x == a).expect("incident arrow");
        let mut degree = vec![0usize; nodes.len()];
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for &(a, b) in &edges[v] {
            let (pa, pb) = (pos_of(a), pos_of(b));
            degree[pa] += 1;
            degree[pb] += 1;
            let (ra, rb) = (find(&mut parent, pa), find(&mut parent, pb));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        let connected = (0..nodes.len()).all(|x| find(&mut parent, x) == root);
        let ok = if model.vertices[v].is_boundary {
            let ends = degree.iter().filter(|&&d| d == 1).count();
            let middles = degree.iter().filter(|&&d| d == 2).count();
            let end_arrows_boundary = nodes
                .iter()
                .zip(&degree)
                .filter(|(_, &d)| d == 1)
                .all(|(&a, _)| model.arrows[a].is_boundary);
            connected && ends == 2 && ends + middles == nodes.len() && end_arrows_boundary
        } else {
            connected && degree.iter().all(|&d| d == 2)
        };
        if !ok {
            bad.push(model.vertices[v].id);
        }
    }
    bad
}

/// The vertex a boundary arrow leaves and enters when the disc boundary is walked clockwise.
///
/// A boundary arrow in a white (clockwise) face points clockwise; one in a
/// black face points anticlockwise.
pub(crate) fn clockwise_ends(topo: &Topology, a: usize) -> Option<(usize, usize)> {
    let occ = &topo.occurrences[a];
    if occ.len() != 1 {
        return None;
    }
    match topo.colors[occ[0].0] {
        Color::White => Some((topo.tail[a], topo.head[a])),
        Color::Black => Some((topo.head[a], topo.tail[a])),
    }
}

fn boundary_cycle_check(model: &DimerModel, topo: &Topology) -> (AxiomCheck, usize) {
    let boundary: Vec<usize> = (0..model.arrows.len())
        .filter(|&a| model.arrows[a].is_boundary)
        .collect();
    let n = boundary.len();
    let fail = |offending: Vec<u32>, detail: String| {
        (
            AxiomCheck {
                axiom: "boundary_cycle",
                passed: false,
                offending,
                detail,
            },
            n,
        )
    };
    if n == 0 {
        return fail(vec![], "no boundary arrows".into());
    }
    let nv = model.vertices.len();
    let mut out_cw: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut in_cw: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for &a in &boundary {
        match clockwise_ends(topo, a) {
            Some((from, to)) => {
                out_cw[from].push(a);
                in_cw[to].push(a);
            }
            None => {
                return fail(
                    vec![model.arrows[a].id],
                    "boundary arrow without a unique face".into(),
                )
            }
        }
    }
    let bad: Vec<u32> = (0..nv)
        .filter(|&v| {
            let touched = !out_cw[v].is_empty() || !in_cw[v].is_empty();
            touched && (out_cw[v].len() != 1 || in_cw[v].len() != 1)
        })
        .map(|v| model.vertices[v].id)
        .collect();
    if !bad.is_empty() {
        return fail(
            bad,
            "boundary arrows do not form a single clockwise cycle at these vertices".into(),
        );
    }
    let mut labels: Vec<u32> = boundary
        .iter()
        .filter_map(|&a| model.arrows[a].boundary_label)
        .collect();
    labels.sort_unstable();
    if labels != (1..=n as u32).collect::<Vec<_>>() {
        return fail(
            vec![],
            format!("boundary labels are not a bijection with 1..{n}"),
        );
    }
    // Walk clockwise from label 1 and require labels to increase by one each step.
    let start = boundary
        .iter()
        .copied()
        .find(|&a| model.arrows[a].boundary_label == Some(1))
        .expect("label 1 present");
    let mut a = start;
    for step in 0..n {
        let expected = step as u32 + 1;
        if model.arrows[a].boundary_label != Some(expected) {
            return fail(
                vec![model.arrows[a].id],
                format!("labels are not in clockwise cyclic order: expected {expected}"),
            );
        }
        let (_, to) = clockwise_ends(topo, a).expect("boundary arrow");
        a = out_cw[to][0];
    }
    if a != start {
        return fail(vec![], "boundary arrows form more than one cycle".into());
    }
    (
        AxiomCheck {
            axiom: "boundary_cycle",
            passed: true,
            offending: vec![],
            detail: format!("single cycle with n = {n}"),
        },
        n,
    )
}

fn is_connected(nv: usize, topo: &Topology) -> bool {
    if nv == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); nv];
    for (a, &t) in topo.tail.iter().enumerate() {
        adj[t].push(topo.head[a]);
        adj[topo.head[a]].push(t);
    }
    let mut seen = vec![false; nv];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}
