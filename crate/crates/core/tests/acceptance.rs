//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Expected values come from the brute-force oracles in `common`, from
//! closed forms evaluated here, or from explicitly stated constants.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use common::*;
use gengraph::constructions::{
    c2_times_p_hamiltonian, cyclic_clique_colouring, cyclic_hamiltonian, nilpotent_hamiltonian,
    nilpotent_td, pgroup_hamiltonian, CycleMethod, NilpotentHamilton,
};
use gengraph::gengraph::{
    degree_census, example_family_cross_check, example_family_graph, quotient_bijection_check,
    recover_cyclic_radical, GeneratingGraph, DEFAULT_FAMILY_VERTEX_GUARD,
};
use gengraph::graphcore::{
    basic_metrics, chromatic_number, clique_number, edge_connectivity, eulerian_circuit,
    hamiltonian, kappa_product_formula, td_bounds, total_domination, verify_certificate,
    vertex_connectivity, Certificate, ChromaticOutcome, CliqueOutcome, DominationOutcome, Graph,
    HamiltonOutcome, MultipartiteParams, SearchBudget,
};
use gengraph::groupkit::{find_isomorphism, is_nilpotent, quotient_mod_frattini, Group};
use gengraph::verifier::{default_catalog, Subject};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct Member {
    name: String,
    group: Group,
    gamma: Graph,
    delta: Graph,
    delta_elements: Vec<usize>,
}

impl Member {
    fn new(name: &str, group: Group) -> Self {
        let gamma = brute_gamma(&group);
        let delta_elements: Vec<usize> = (0..group.order())
            .filter(|&x| gamma.degree(x) > 0)
            .collect();
        let delta = gamma.induced(&delta_elements);
        Member {
            name: name.to_string(),
            group,
            gamma,
            delta,
            delta_elements,
        }
    }

    fn is_cyclic(&self) -> bool {
        cyclic_sylow_primes(&self.group).len() == prime_factors(self.group.order()).len()
    }

    fn gamma_graph(&self) -> GeneratingGraph {
        GeneratingGraph {
            graph: self.gamma.clone(),
            vertex_elements: (0..self.group.order()).collect(),
        }
    }
}

fn member(spec: &str) -> Member {
    Member::new(spec, grp(spec))
}

/// Nilpotent groups of the default catalog.
fn catalog_nilpotent() -> Vec<Member> {
    default_catalog()
        .into_iter()
        .filter_map(|entry| match entry.subject {
            Subject::Group(spec) => {
                let g = grp_up_to(&spec, entry.max_order);
                is_nilpotent(&g).then(|| Member::new(&spec, g))
            }
            Subject::Pair(..) => None,
        })
        .collect()
}

fn kappa_checked(graph: &Graph) -> Result<usize, String> {
    let k = vertex_connectivity(graph);
    ensure!(
        verify_certificate(graph, &k.certificate),
        "cut witness does not verify"
    );
    Ok(k.value)
}

fn min_degree(graph: &Graph) -> usize {
    graph.degrees().into_iter().min().unwrap_or(0)
}

fn criterion_1(cat: &[Member]) -> Outcome {
    let mut n = 0;
    for m in cat.iter().filter(|m| m.delta.vertex_count() <= 150) {
        let formula = prime_factors(m.group.order())
            .iter()
            .fold(m.group.order(), |acc, &(p, _)| acc / p * (p - 1));
        let kappa = kappa_checked(&m.delta).map_err(|e| format!("{}: {e}", m.name))?;
        let delta = min_degree(&m.delta);
        ensure!(
            kappa == formula && delta == formula,
            "{}: κ = {kappa}, δ = {delta}, formula {formula}",
            m.name
        );
        n += 1;
    }
    Ok(format!("κ = δ = |G|∏(1−1/p) on {n} groups"))
}

fn criterion_2() -> Outcome {
    for n in 2..=36 {
        let m = member(&format!("C{n}"));
        let k = kappa_checked(&m.delta)?;
        ensure!(k == totient(n), "C{n}: κ = {k}, φ = {}", totient(n));
    }
    for p in [2, 3, 5] {
        let m = member(&format!("C{p}^2"));
        let k = kappa_checked(&m.delta)?;
        ensure!(k == p * p - p, "C{p}^2: κ = {k}");
    }
    for (n, p) in [(5, 2), (2, 3), (7, 3)] {
        let m = member(&format!("C{n} x C{p}^2"));
        let k = kappa_checked(&m.delta)?;
        let phi = totient(m.group.order());
        ensure!(k == phi, "C{n} x C{p}^2: κ = {k}, φ(|G|) = {phi}");
    }
    Ok("C_n (n ≤ 36), C_p² (p ≤ 5), C_n × C_p² (3 groups)".into())
}

fn criterion_3() -> Outcome {
    for spec in ["C8", "C12", "C4 x C3^2", "Heis3", "C2^2 x C9"] {
        let m = member(spec);
        let fq = quotient_mod_frattini(&m.group).map_err(|e| e.to_string())?;
        let f = fq.frattini_elements.len();
        let quotient = Member::new("quotient", fq.quotient.clone());
        let (k, kq) = (kappa_checked(&m.delta)?, kappa_checked(&quotient.delta)?);
        ensure!(k == kq * f, "{spec}: κ = {k}, κ(G/Φ)·|Φ| = {kq}·{f}");
        ensure!(
            min_degree(&m.delta) == min_degree(&quotient.delta) * f,
            "{spec}: δ(Δ(G)) = {}, δ(Δ(G/Φ))·|Φ| = {}",
            min_degree(&m.delta),
            min_degree(&quotient.delta) * f
        );
        if !m.is_cyclic() {
            for x in 0..m.group.order() {
                let (d, dq) = (m.gamma.degree(x), quotient.gamma.degree(fq.coset_of[x]));
                ensure!(
                    d == dq * f,
                    "{spec}: element {x} has degree {d}, quotient degree {dq}·{f}"
                );
            }
        }
    }
    Ok("κ and degrees scale by |Φ| on 5 groups".into())
}

fn is_euler_circuit(graph: &Graph, walk: &[usize]) -> bool {
    let m = graph.edge_count();
    if walk.len() != m + 1 || walk.first() != walk.last() {
        return false;
    }
    let mut used = std::collections::HashSet::new();
    walk.windows(2)
        .all(|w| graph.has_edge(w[0], w[1]) && used.insert((w[0].min(w[1]), w[0].max(w[1]))))
}

fn criterion_4(cat: &[Member]) -> Outcome {
    let mut refused = 0;
    for m in cat {
        let predicted = !(m.is_cyclic() && m.group.order() % 2 == 0);
        match eulerian_circuit(&m.delta) {
            Ok(Certificate::EulerCircuit { walk }) => {
                ensure!(predicted, "{}: circuit found, none predicted", m.name);
                ensure!(
                    is_euler_circuit(&m.delta, &walk),
                    "{}: circuit does not verify",
                    m.name
                );
            }
            Ok(other) => return Err(format!("{}: unexpected certificate {other:?}", m.name)),
            Err(obstruction) => {
                ensure!(
                    !predicted,
                    "{}: refused ({obstruction:?}) but predicted Eulerian",
                    m.name
                );
                ensure!(
                    m.delta.degrees().iter().any(|d| d % 2 == 1),
                    "{}: refused without an odd vertex",
                    m.name
                );
                refused += 1;
            }
        }
    }
    Ok(format!("{} groups, {refused} refused", cat.len()))
}

/// The element sequence is a Hamiltonian cycle of Δ(G).
fn element_cycle_ok(m: &Member, elements: &[usize]) -> bool {
    let pos: Option<Vec<usize>> = elements
        .iter()
        .map(|x| m.delta_elements.binary_search(x).ok())
        .collect();
    pos.is_some_and(|p| is_cycle_of(&m.delta, &p))
        && (0..elements.len())
            .all(|i| generates(&m.group, elements[i], elements[(i + 1) % elements.len()]))
}

fn criterion_5() -> Outcome {
    let budget = SearchBudget::default();
    for n in 3..=36 {
        let m = member(&format!("C{n}"));
        let c = cyclic_hamiltonian(n).map_err(|e| e.to_string())?;
        ensure!(
            element_cycle_ok(&m, &c.elements),
            "C{n}: cycle does not verify"
        );
    }
    for spec in ["C2^2", "C3^2", "C5^2", "C7^2", "C8", "Heis3"] {
        let m = member(spec);
        let NilpotentHamilton::Yes(c) =
            nilpotent_hamiltonian(&m.group, budget).map_err(|e| e.to_string())?
        else {
            return Err(format!("{spec}: no cycle"));
        };
        ensure!(
            spec == "C2^2" || c.method != CycleMethod::Search,
            "{spec}: built by search"
        );
        ensure!(
            element_cycle_ok(&m, &c.elements),
            "{spec}: cycle does not verify"
        );
    }
    for p_spec in ["C3^2", "Heis3"] {
        let (g, c) = c2_times_p_hamiltonian(&grp(p_spec)).map_err(|e| e.to_string())?;
        ensure!(
            c.method == CycleMethod::C2TimesPGluing,
            "C2 x {p_spec}: method {:?}",
            c.method
        );
        let m = Member::new(p_spec, g);
        ensure!(
            element_cycle_ok(&m, &c.elements),
            "C2 x {p_spec}: glued cycle does not verify"
        );
    }
    for spec in ["C2^2 x C3", "C2^2 x C3^2", "C12", "C2^2 x C9"] {
        let m = member(spec);
        let found = hamiltonian(&m.delta, SearchBudget::new(10_000_000));
        let HamiltonOutcome::Yes { cycle, .. } = found.outcome else {
            return Err(format!("{spec}: search gave {:?}", found.outcome));
        };
        ensure!(
            is_cycle_of(&m.delta, &cycle),
            "{spec}: search cycle does not verify"
        );
    }
    let c2 = nilpotent_hamiltonian(&grp("C2"), budget).map_err(|e| e.to_string())?;
    ensure!(
        matches!(c2, NilpotentHamilton::No { .. }),
        "C2 not refused: {c2:?}"
    );
    Ok("constructions verify on 40 groups, search on 4, C2 refused".into())
}

fn criterion_6() -> Outcome {
    for spec in ["C3^2", "C5^2", "Heis3"] {
        let m = member(spec);
        let (a, b) = m.group.least_generating_pair().ok_or("not 2-generated")?;
        let (cycle, chords) = pgroup_hamiltonian(&m.group, a, b).map_err(|e| e.to_string())?;
        let Some(Certificate::HChords {
            cycle: verts,
            chords: Some(((r, s), (u, v))),
        }) = chords
        else {
            return Err(format!("{spec}: no chords"));
        };
        ensure!(
            (r, s, u, v) == (0, 2, 1, 3),
            "{spec}: chords at ({r},{s}), ({u},{v})"
        );
        ensure!(
            verts == cycle.vertices,
            "{spec}: chord cycle differs from the cycle"
        );
        ensure!(
            is_cycle_of(&m.delta, &verts),
            "{spec}: cycle does not verify"
        );
        ensure!(
            m.delta.has_edge(verts[r], verts[s]) && m.delta.has_edge(verts[u], verts[v]),
            "{spec}: chord is not an edge"
        );
        ensure!(verts.len() % 2 == 0, "{spec}: odd cycle");
    }
    Ok("chords {0,2} and {1,3} on C3², C5², Heis3".into())
}

fn exact_td(graph: &Graph) -> Result<usize, String> {
    let found = total_domination(graph, SearchBudget::default()).map_err(|e| e.to_string())?;
    match found.outcome {
        DominationOutcome::Found { gamma, set } => {
            ensure!(
                totally_dominates(graph, &set),
                "search set does not dominate"
            );
            Ok(gamma)
        }
        DominationOutcome::BudgetExceeded { .. } => {
            Err("total domination search ran out of budget".into())
        }
    }
}

fn nested_ceiling(parts: &[usize]) -> usize {
    parts.iter().rev().fold(1, |x, &a| (a * x).div_ceil(a - 1))
}

fn upper_bound(parts: &[usize]) -> usize {
    let s = parts.len();
    let t = (0..=s)
        .find(|&t| parts[t..].iter().all(|&a| a + t > s))
        .unwrap();
    (1 << t) * (s - t + 1)
}

fn criterion_7(cat: &[Member]) -> Outcome {
    let budget = SearchBudget::default();
    for n in 2..=36 {
        let m = member(&format!("C{n}"));
        let td = nilpotent_td(&m.group, budget).map_err(|e| e.to_string())?;
        ensure!(
            td.gamma == 1 && td.set.len() == 1,
            "C{n}: γ_t = {}",
            td.gamma
        );
        ensure!(
            span(&m.group, &td.set) == n,
            "C{n}: witness is not a generator"
        );
    }
    for (spec, s) in [("C2^2", 1), ("C2^2 x C3^2", 2)] {
        let m = member(spec);
        let gamma = exact_td(&m.delta)?;
        ensure!(gamma == s + 1, "{spec}: γ_t = {gamma}, expected {}", s + 1);
    }
    let mut compared = 0;
    for m in cat
        .iter()
        .filter(|m| !m.is_cyclic() && m.delta.vertex_count() <= 120)
    {
        let direct = exact_td(&m.delta).map_err(|e| format!("{}: {e}", m.name))?;
        let td = nilpotent_td(&m.group, budget).map_err(|e| format!("{}: {e}", m.name))?;
        ensure!(
            direct == td.gamma,
            "{}: direct {direct}, reduction {}",
            m.name,
            td.gamma
        );
        let lifted: Option<Vec<usize>> = td
            .set
            .iter()
            .map(|x| m.delta_elements.binary_search(x).ok())
            .collect();
        ensure!(
            lifted.is_some_and(|v| totally_dominates(&m.delta, &v)),
            "{}: lifted set does not dominate",
            m.name
        );
        compared += 1;
    }
    for parts in [vec![3, 4], vec![3, 4, 6], vec![4, 4, 4]] {
        let product = parts[1..]
            .iter()
            .fold(Graph::complete(parts[0]), |acc, &a| {
                acc.direct_product(&Graph::complete(a))
            });
        let exact = exact_td(&product)?;
        let (lower, upper) = (nested_ceiling(&parts), upper_bound(&parts));
        let b = td_bounds(&MultipartiteParams::new(parts.clone()).unwrap())
            .map_err(|e| e.to_string())?;
        ensure!(
            (b.lower, b.upper) == (lower, upper),
            "{parts:?}: library bounds {b:?}"
        );
        ensure!(
            lower <= exact && exact <= upper,
            "{parts:?}: {lower} ≤ {exact} ≤ {upper} fails"
        );
    }
    Ok(format!(
        "cyclic γ_t = 1, s+1 cases, {compared} reductions, 3 bound sandwiches"
    ))
}

fn omega_chi(graph: &Graph) -> Result<(usize, usize), String> {
    let budget = SearchBudget::default();
    let CliqueOutcome::Found { clique } = clique_number(graph, budget).outcome else {
        return Err("clique search ran out of budget".into());
    };
    ensure!(is_clique(graph, &clique), "clique does not verify");
    let ChromaticOutcome::Exact { chi, colouring } = chromatic_number(graph, budget).outcome else {
        return Err("colouring search ran out of budget".into());
    };
    ensure!(
        is_proper_colouring(graph, &colouring),
        "colouring is not proper"
    );
    Ok((clique.len(), chi))
}

fn criterion_8() -> Outcome {
    for n in 2..=24 {
        let m = member(&format!("C{n}"));
        let expected = totient(n) + prime_factors(n).len();
        let (clique, colouring) = cyclic_clique_colouring(n).map_err(|e| e.to_string())?;
        let (Certificate::Clique { vertices }, Certificate::Colouring { classes }) =
            (clique, colouring)
        else {
            return Err(format!("C{n}: unexpected certificate kinds"));
        };
        ensure!(
            vertices.len() == expected && is_clique(&m.gamma, &vertices),
            "C{n}: clique"
        );
        let colours = classes
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        ensure!(
            colours == expected && is_proper_colouring(&m.gamma, &classes),
            "C{n}: colouring"
        );
        let (w, chi) = omega_chi(&m.gamma)?;
        ensure!(
            w == expected && chi == expected,
            "C{n}: ω = {w}, χ = {chi}, expected {expected}"
        );
    }
    for (spec, p) in [
        ("C2^2", 2),
        ("C3^2", 3),
        ("C2^2 x C9", 2),
        ("C2^2 x C3^2", 2),
        ("C4 x C3^2", 3),
    ] {
        let m = member(spec);
        let (w, chi) = omega_chi(&m.gamma)?;
        ensure!(
            w == p + 1 && chi == p + 1,
            "{spec}: ω = {w}, χ = {chi}, expected {}",
            p + 1
        );
    }
    Ok("ω = χ = φ(n)+π(n) for n ≤ 24 and p+1 on 5 noncyclic groups".into())
}

fn criterion_9(cat: &[Member]) -> Outcome {
    for m in cat {
        let profile =
            degree_census(&m.group, &m.gamma_graph()).map_err(|e| format!("{}: {e}", m.name))?;
        let bad = profile.mismatches();
        ensure!(bad.is_empty(), "{}: {}", m.name, bad.join("; "));
        let observed_count = m.delta.vertex_count();
        ensure!(
            profile.nonisolated_observed == observed_count,
            "{}: census saw {} vertices, graph has {observed_count}",
            m.name,
            profile.nonisolated_observed
        );
    }
    let m = member("C2^2 x C9");
    let p = degree_census(&m.group, &m.gamma_graph()).map_err(|e| e.to_string())?;
    let pairs = m.gamma.edge_count() * 2 + m.gamma.self_dominating().iter().count();
    ensure!(pairs * 3 == 36 * 36, "C2^2 x C9: {pairs} generating pairs");
    ensure!(
        p.gen_probability_formula.to_string() == "1/3"
            && m.delta.vertex_count() == 27
            && min_degree(&m.delta) == 12,
        "C2^2 x C9: P = {}, |V(Δ)| = {}, δ = {}",
        p.gen_probability_formula,
        m.delta.vertex_count(),
        min_degree(&m.delta)
    );
    Ok(format!(
        "census exact on {} groups; C2²×C9: P = 1/3, |V(Δ)| = 27, δ = 12",
        cat.len()
    ))
}

fn criterion_10() -> Outcome {
    let first = example_family_graph(1, DEFAULT_FAMILY_VERTEX_GUARD).map_err(|e| e.to_string())?;
    ensure!(
        first.vertex_count() == 54,
        "d=1: {} vertices",
        first.vertex_count()
    );
    ensure!(
        first.graph.degrees().iter().all(|&d| d == 24),
        "d=1: not 24-regular"
    );
    ensure!(
        example_family_cross_check(1, 1000).map_err(|e| e.to_string())?,
        "d=1: rule-based graph differs from the table graph"
    );
    let m = member("Ex(1)");
    ensure!(
        m.delta == first.graph && m.delta_elements == first.vertex_elements,
        "d=1: rule-based graph differs from the brute-force graph"
    );
    let second = example_family_graph(2, DEFAULT_FAMILY_VERTEX_GUARD).map_err(|e| e.to_string())?;
    let regular = 2 * (3 * 4) * (5 * 16);
    ensure!(
        second.vertex_count() == 5400,
        "d=2: {} vertices",
        second.vertex_count()
    );
    ensure!(
        second.graph.degrees().iter().all(|&d| d == regular),
        "d=2: not {regular}-regular"
    );
    Ok(
        "d=1: 54 vertices, 24-regular, equal to brute force; d=2: 5400 vertices, 1920-regular"
            .into(),
    )
}

fn criterion_11(cat: &[Member]) -> Outcome {
    let (g, h) = (grp("C2^2 x C9 x C3"), grp("C2^2 x Heis3"));
    ensure!(
        g.order() == 108 && h.order() == 108,
        "orders {} and {}",
        g.order(),
        h.order()
    );
    let (fg, fh) = (
        quotient_mod_frattini(&g).map_err(|e| e.to_string())?,
        quotient_mod_frattini(&h).map_err(|e| e.to_string())?,
    );
    ensure!(
        fg.frattini_elements.len() == 3 && fh.frattini_elements.len() == 3,
        "|Φ| = {} and {}",
        fg.frattini_elements.len(),
        fh.frattini_elements.len()
    );
    let target = grp("C2^2 x C3^2");
    ensure!(
        find_isomorphism(&fg.quotient, &target).is_some()
            && find_isomorphism(&fh.quotient, &target).is_some(),
        "quotients are not C2^2 x C3^2"
    );
    let check = quotient_bijection_check(&g, &h).map_err(|e| e.to_string())?;
    ensure!(check.holds, "bijection fails: {}", check.detail);
    let mut n = 0;
    for m in cat.iter().filter(|m| !m.is_cyclic()) {
        let expected: usize = cyclic_sylow_primes(&m.group).iter().product();
        let got =
            recover_cyclic_radical(&m.gamma_graph()).map_err(|e| format!("{}: {e}", m.name))?;
        ensure!(
            got == expected,
            "{}: recovered {got}, expected {expected}",
            m.name
        );
        n += 1;
    }
    Ok(format!(
        "Γ(C2²×C9×C3) ≅ Γ(C2²×Heis3) by the coset map; radical recovered on {n} groups"
    ))
}

fn criterion_12(cat: &[Member]) -> Outcome {
    let mut n = 0;
    for m in cat.iter().filter(|m| m.delta.vertex_count() <= 150) {
        let lambda = edge_connectivity(&m.delta);
        ensure!(
            verify_certificate(&m.delta, &lambda.certificate),
            "{}: edge cut does not verify",
            m.name
        );
        let d = min_degree(&m.delta);
        let diameter = basic_metrics(&m.delta).diameter;
        ensure!(
            lambda.value == d,
            "{}: λ = {}, δ = {d}",
            m.name,
            lambda.value
        );
        ensure!(
            diameter.is_some_and(|x| x <= 2),
            "{}: diameter {diameter:?}",
            m.name
        );
        n += 1;
    }
    Ok(format!("λ = δ and diameter ≤ 2 on {n} groups"))
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges)
}

fn criterion_13() -> Outcome {
    let k222 = Graph::complete_multipartite(&[2, 2, 2]);
    let instances = [
        ("K_{2,2,2}", k222.clone(), vec![2, 2, 2], Some(16)),
        ("Petersen", petersen(), vec![2, 2, 3], None),
        ("C_6", Graph::cycle(6), vec![1, 1, 2, 3], None),
    ];
    let mut parts_seen = Vec::new();
    for (name, gamma, parts, stated) in instances {
        let params = MultipartiteParams::new(parts.clone()).unwrap();
        let k = vertex_connectivity(&gamma).value;
        ensure!(
            k == exhaustive_vertex_connectivity(&gamma),
            "{name}: κ disagrees with exhaustive search"
        );
        let formula = kappa_product_formula(k, min_degree(&gamma), &params)
            .map_err(|e| format!("{name}: {e}"))?;
        let product = gamma.direct_product(&Graph::complete_multipartite(&parts));
        let measured = kappa_checked(&product)?;
        ensure!(
            measured == formula,
            "{name} × K{parts:?}: measured {measured}, formula {formula}"
        );
        if let Some(v) = stated {
            ensure!(measured == v, "{name} × K{parts:?}: {measured}, stated {v}");
        }
        parts_seen.push(format!("{name}×K{parts:?}={measured}"));
    }
    Ok(parts_seen.join(", "))
}

fn criterion_14() -> Outcome {
    let run = |jobs: &str, format: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_gengraph"))
            .args([
                "--no-header",
                "verify",
                "--catalog",
                "default",
                "--jobs",
                jobs,
                "--format",
                format,
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(
            out.status.code() == Some(0),
            "jobs {jobs}: exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
        Ok(out.stdout)
    };
    for format in ["table", "json"] {
        let (one, eight) = (run("1", format)?, run("8", format)?);
        ensure!(
            !one.is_empty() && one == eight,
            "{format} reports differ between 1 and 8 jobs"
        );
    }
    Ok("table and json reports identical for --jobs 1 and 8, exit 0".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cat = catalog_nilpotent();
    println!(
        "catalog: {} nilpotent groups built in {:.1?}",
        cat.len(),
        start.elapsed()
    );
    let criteria: Vec<Criterion> = vec![
        ("maximal connectivity", Box::new(|| criterion_1(&cat))),
        ("special-case connectivity", Box::new(criterion_2)),
        ("Frattini scaling", Box::new(criterion_3)),
        ("Eulerian criterion", Box::new(|| criterion_4(&cat))),
        ("Hamiltonian cycles", Box::new(criterion_5)),
        ("chord certificates", Box::new(criterion_6)),
        ("total domination", Box::new(|| criterion_7(&cat))),
        ("clique and chromatic numbers", Box::new(criterion_8)),
        ("degree census", Box::new(|| criterion_9(&cat))),
        ("rule-based family graphs", Box::new(criterion_10)),
        ("graph determines quotient", Box::new(|| criterion_11(&cat))),
        (
            "edge connectivity and diameter",
            Box::new(|| criterion_12(&cat)),
        ),
        ("product connectivity formula", Box::new(criterion_13)),
        ("determinism", Box::new(criterion_14)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {status} {name}: {detail} [{:.1?}]",
            i + 1,
            t.elapsed()
        );
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
