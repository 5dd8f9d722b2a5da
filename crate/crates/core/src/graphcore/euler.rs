use serde::Serialize;

use super::{components, Certificate, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EulerObstruction {
    Empty,
    Disconnected { components: usize },
    OddDegree { vertex: usize, degree: usize },
}

/// Hierholzer's algorithm. Every vertex counts for connectivity, so the
/// input should already have its isolated vertices removed.
pub fn eulerian_circuit(g: &Graph) -> Result<Certificate, EulerObstruction> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(EulerObstruction::Empty);
    }
    let comps = components(g).len();
    if comps > 1 {
        return Err(EulerObstruction::Disconnected { components: comps });
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) % 2 == 1) {
        return Err(EulerObstruction::OddDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut rows: Vec<_> = (0..n).map(|v| g.row(v).clone()).collect();
    let mut stack = vec![0usize];
    let mut walk = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&v) = stack.last() {
        match rows[v].first() {
            Some(w) => {
                rows[v].remove(w);
                rows[w].remove(v);
                stack.push(w);
            }
            None => {
                walk.push(v);
                stack.pop();
            }
        }
    }
    walk.reverse();
    Ok(Certificate::EulerCircuit { walk })
}
