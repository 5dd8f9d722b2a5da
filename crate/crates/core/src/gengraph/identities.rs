//! Structural identities between generating graphs, each evaluated by
//! comparing explicitly constructed graphs under explicit vertex maps.

use serde::Serialize;

use super::{delta_graph, generating_graph, GeneratingGraph, Result};
use crate::graphcore::{components, Graph};
use crate::groupkit::{
    find_isomorphism, is_nilpotent, quotient_mod_frattini, FrattiniQuotient, Group, GroupError,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub detail: String,
}

impl IdentityCheck {
    fn new(holds: bool, detail: impl Into<String>) -> Self {
        IdentityCheck {
            holds,
            detail: detail.into(),
        }
    }
}

/// Index `k` with `x = rep(coset(x)) · f_k`.
fn frattini_position(g: &Group, fq: &FrattiniQuotient, x: usize) -> usize {
    let rep = fq.representatives[fq.coset_of[x]];
    let f = g.mul(g.inverse(rep), x);
    fq.frattini_elements
        .binary_search(&f)
        .expect("element lies in its coset")
}

/// Checks that `graph`, whose vertex v stands for element `elements[v]`,
/// is exactly `target` (a graph over group elements).
fn same_graph_on_elements(
    graph: &Graph,
    elements: &[usize],
    target: &GeneratingGraph,
) -> IdentityCheck {
    if elements.len() != target.vertex_count() {
        return IdentityCheck::new(
            false,
            format!(
                "{} vertices against {}",
                elements.len(),
                target.vertex_count()
            ),
        );
    }
    let mut pos = Vec::with_capacity(elements.len());
    for &x in elements {
        match target.vertex_of(x) {
            Some(v) => pos.push(v),
            None => {
                return IdentityCheck::new(
                    false,
                    format!("element {x} is not a vertex of the target"),
                )
            }
        }
    }
    for (u, v) in graph.edges() {
        if !target.graph.has_edge(pos[u], pos[v]) {
            return IdentityCheck::new(
                false,
                format!("edge {{{}, {}}} missing", elements[u], elements[v]),
            );
        }
    }
    let (a, b) = (graph.edge_count(), target.graph.edge_count());
    IdentityCheck::new(
        a == b,
        format!("{} vertices, {a} edges against {b}", elements.len()),
    )
}

/// Δ(G) against Δ(G/Φ)[K̄_|Φ|] with the block of every coset that
/// generates G/Φ on its own made complete. For noncyclic G no coset does;
/// for cyclic G the blocks of the generating cosets are complete and all
/// others, not just Φ itself, stay independent. The vertex (c, k) of the
/// right side is the element rep(c) · f_k.
pub fn lex_decomposition_check(g: &Group) -> Result<IdentityCheck> {
    if !g.is_two_generated() {
        return Err(GroupError::NotTwoGenerated.into());
    }
    let fq = quotient_mod_frattini(g)?;
    let f = fq.frattini_elements.len();
    let dq = delta_graph(&generating_graph(&fq.quotient));
    let mut rhs = dq.graph.without_marks().lex_product(&Graph::null(f));
    for v in dq.graph.self_dominating().iter() {
        for a in 0..f {
            for b in a + 1..f {
                rhs.add_edge(v * f + a, v * f + b);
            }
        }
    }
    let elements: Vec<usize> = dq
        .vertex_elements
        .iter()
        .flat_map(|&c| (0..f).map(move |k| (c, k)))
        .map(|(c, k)| fq.lift(g, c, k))
        .collect();
    let delta = delta_graph(&generating_graph(g));
    Ok(same_graph_on_elements(&rhs, &elements, &delta))
}

/// deg_Γ(G)(x) = deg_Γ(G/Φ)(xΦ)·|Φ| for every x when G is noncyclic; for
/// cyclic G only the minimum degree of Δ scales this way.
pub fn degree_lifting_check(g: &Group) -> Result<IdentityCheck> {
    let fq = quotient_mod_frattini(g)?;
    let f = fq.frattini_elements.len();
    let gamma = generating_graph(g);
    let gq = generating_graph(&fq.quotient);
    if g.is_cyclic() {
        let min = |gg: &GeneratingGraph| gg.graph.degrees().into_iter().filter(|&d| d > 0).min();
        let (a, b) = (min(&gamma), min(&gq).map(|d| d * f));
        return Ok(IdentityCheck::new(
            a == b,
            format!("δ(Δ(G)) = {a:?}, δ(Δ(G/Φ))·|Φ| = {b:?}"),
        ));
    }
    for x in 0..g.order() {
        let lhs = gamma.graph.degree(x);
        let rhs = gq.graph.degree(fq.coset_of[x]) * f;
        if lhs != rhs {
            return Ok(IdentityCheck::new(
                false,
                format!("element {x}: degree {lhs}, quotient degree × |Φ| = {rhs}"),
            ));
        }
    }
    Ok(IdentityCheck::new(
        true,
        format!("{} elements, |Φ| = {f}", g.order()),
    ))
}

/// For each subset X of V(Δ(G)) (given as element indices, |X| ≥ 2), the
/// induced subgraph on X is connected iff the one on XΦ is.
pub fn connectedness_lifting_check(g: &Group, subsets: &[Vec<usize>]) -> Result<IdentityCheck> {
    let fq = quotient_mod_frattini(g)?;
    let delta = delta_graph(&generating_graph(g));
    let connected = |elements: &[usize]| -> Option<bool> {
        let vs: Option<Vec<usize>> = elements.iter().map(|&x| delta.vertex_of(x)).collect();
        Some(components(&delta.graph.induced(&vs?)).len() == 1)
    };
    for x in subsets {
        let mut set = x.clone();
        set.sort_unstable();
        set.dedup();
        if set.len() < 2 {
            continue;
        }
        let mut lifted: Vec<usize> = set
            .iter()
            .flat_map(|&e| fq.frattini_elements.iter().map(move |&f| g.mul(e, f)))
            .collect();
        lifted.sort_unstable();
        lifted.dedup();
        match (connected(&set), connected(&lifted)) {
            (Some(a), Some(b)) if a == b => {}
            (Some(a), Some(b)) => {
                return Ok(IdentityCheck::new(
                    false,
                    format!("X = {set:?}: X connected {a}, XΦ connected {b}"),
                ))
            }
            _ => {
                return Ok(IdentityCheck::new(
                    false,
                    format!("X = {set:?} is not inside V(Δ)"),
                ))
            }
        }
    }
    Ok(IdentityCheck::new(
        true,
        format!("{} subsets", subsets.len()),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProductContainment {
    /// Γ(G×H) ⊆ Γ(G)×Γ(H)
    pub product_in_graphs: bool,
    /// Γ(G)×Γ(H) ⊆ Γ(G×H)
    pub graphs_in_product: bool,
}

/// Edge containments between Γ(G×H) and Γ(G)×Γ(H); the element (a, b) of
/// G×H and the vertex (a, b) of the graph product share index a·|H| + b.
pub fn gamma_product_containment(g: &Group, h: &Group) -> ProductContainment {
    let prod = generating_graph(&g.direct_product(h)).graph;
    let tensor = generating_graph(g)
        .graph
        .direct_product(&generating_graph(h).graph);
    let contained = |a: &Graph, b: &Graph| a.edges().into_iter().all(|(u, v)| b.has_edge(u, v));
    ProductContainment {
        product_in_graphs: contained(&prod, &tensor),
        graphs_in_product: contained(&tensor, &prod),
    }
}

/// Δ(G×H) = Δ(G)×Δ(H), the vertex (i, j) of the right side being the
/// element (x_i, y_j).
pub fn delta_product_check(g: &Group, h: &Group) -> IdentityCheck {
    let dg = delta_graph(&generating_graph(g));
    let dh = delta_graph(&generating_graph(h));
    let rhs = dg
        .graph
        .without_marks()
        .direct_product(&dh.graph.without_marks());
    let m = h.order();
    let elements: Vec<usize> = dg
        .vertex_elements
        .iter()
        .flat_map(|&x| dh.vertex_elements.iter().map(move |&y| x * m + y))
        .collect();
    let lhs = delta_graph(&generating_graph(&g.direct_product(h)));
    same_graph_on_elements(&rhs, &elements, &lhs)
}

/// Edge containments between Δ(G) and Δ(A)×Δ(B) for an internal direct
/// product G = A × B, with A and B given as groups with their embeddings
/// into G. The vertex (i, j) of the product is the element ι_A(x_i)·ι_B(y_j).
pub fn internal_delta_product(
    g: &Group,
    (a, embed_a): (&Group, &[usize]),
    (b, embed_b): (&Group, &[usize]),
) -> ProductContainment {
    let da = delta_graph(&generating_graph(a));
    let db = delta_graph(&generating_graph(b));
    let product = da
        .graph
        .without_marks()
        .direct_product(&db.graph.without_marks());
    let elements: Vec<usize> = da
        .vertex_elements
        .iter()
        .flat_map(|&x| db.vertex_elements.iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.mul(embed_a[x], embed_b[y]))
        .collect();
    let delta = delta_graph(&generating_graph(g));
    let mut position = vec![usize::MAX; g.order()];
    for (i, &x) in elements.iter().enumerate() {
        position[x] = i;
    }
    let graphs_in_product = product.edges().into_iter().all(|(u, v)| {
        matches!((delta.vertex_of(elements[u]), delta.vertex_of(elements[v])), (Some(x), Some(y)) if delta.graph.has_edge(x, y))
    });
    let product_in_graphs = delta.graph.edges().into_iter().all(|(u, v)| {
        let (x, y) = (
            position[delta.vertex_elements[u]],
            position[delta.vertex_elements[v]],
        );
        x != usize::MAX && y != usize::MAX && product.has_edge(x, y)
    });
    ProductContainment {
        product_in_graphs,
        graphs_in_product,
    }
}

/// The p-part of x in an abelian group of squarefree exponent `rad`:
/// x^e with e ≡ 1 (mod p) and e ≡ 0 (mod rad/p).
fn component(q: &Group, x: usize, p: usize, rad: usize) -> usize {
    let co = rad / p;
    let k = (1..p).find(|k| k * co % p == 1).unwrap_or(0);
    q.pow(x, if p == rad { 1 } else { k * co })
}

/// Adjacency in Γ(G/Φ) by closure against the componentwise rule: some
/// nontrivial coordinate at every cyclic prime, and distinct nontrivial
/// cyclic subgroups at every noncyclic prime.
pub fn componentwise_criterion_check(g: &Group) -> Result<IdentityCheck> {
    if !is_nilpotent(g) {
        return Err(GroupError::NotNilpotent.into());
    }
    let st = crate::groupkit::nilpotent_structure(g)?;
    st.require_two_generated()?;
    let fq = quotient_mod_frattini(g)?;
    let q = &fq.quotient;
    let gq = generating_graph(q);
    let ps: Vec<usize> = st.cyclic_primes().iter().map(|&p| p as usize).collect();
    let qs: Vec<usize> = st.noncyclic_primes().iter().map(|&p| p as usize).collect();
    let rad: usize = ps.iter().chain(&qs).product();
    let n = q.order();
    let comps: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            ps.iter()
                .chain(&qs)
                .map(|&p| component(q, x, p, rad))
                .collect()
        })
        .collect();
    let r = ps.len();
    let rule = |x: usize, y: usize| {
        (0..r).all(|i| comps[x][i] != 0 || comps[y][i] != 0)
            && (r..r + qs.len()).all(|j| {
                let (a, b) = (comps[x][j], comps[y][j]);
                a != 0 && b != 0 && !q.closure(&[a]).contains(b)
            })
    };
    for x in 0..n {
        for y in x + 1..n {
            if rule(x, y) != gq.graph.has_edge(x, y) {
                return Ok(IdentityCheck::new(
                    false,
                    format!(
                        "cosets {x}, {y}: rule {} closure {}",
                        rule(x, y),
                        gq.graph.has_edge(x, y)
                    ),
                ));
            }
        }
    }
    Ok(IdentityCheck::new(
        true,
        format!("{} quotient pairs", n * (n - 1) / 2),
    ))
}

/// When G/Φ(G) ≅ H/Φ(H) and |Φ(G)| = |Φ(H)|, sends rep(c)·f_k to
/// rep'(ι(c))·f'_k for an isomorphism ι of the quotients and checks that
/// Γ(G) maps exactly onto Γ(H).
pub fn quotient_bijection_check(g: &Group, h: &Group) -> Result<IdentityCheck> {
    let fg = quotient_mod_frattini(g)?;
    let fh = quotient_mod_frattini(h)?;
    if fg.frattini_elements.len() != fh.frattini_elements.len() {
        return Ok(IdentityCheck::new(
            false,
            format!(
                "|Φ| differ: {} and {}",
                fg.frattini_elements.len(),
                fh.frattini_elements.len()
            ),
        ));
    }
    let Some(iso) = find_isomorphism(&fg.quotient, &fh.quotient) else {
        return Ok(IdentityCheck::new(
            false,
            "Frattini quotients are not isomorphic",
        ));
    };
    let map: Vec<usize> = (0..g.order())
        .map(|x| fh.lift(h, iso[fg.coset_of[x]], frattini_position(g, &fg, x)))
        .collect();
    let gamma_h = generating_graph(h);
    let gamma_g = generating_graph(g);
    Ok(same_graph_on_elements(&gamma_g.graph, &map, &gamma_h))
}
