use serde_json::{json, Value};

use super::{CheckId, CheckResult, Question};
use crate::constructions::{
    nilpotent_hamiltonian, nilpotent_td, ConstructionError, NilpotentHamilton,
};
use crate::gengraph::{
    degree_census, degree_lifting_check, delta_graph, generating_graph, internal_delta_product,
    lex_decomposition_check, quotient_bijection_check, recover_cyclic_radical, GenError,
    GeneratingGraph, IdentityCheck,
};
use crate::graphcore::{
    basic_metrics, chromatic_number, clique_number, edge_connectivity, eulerian_circuit,
    hamiltonian, td_bounds, total_domination, verify_certificate, vertex_connectivity, Certificate,
    ChromaticOutcome, CliqueOutcome, DominationOutcome, GraphError, HamiltonOutcome, SearchBudget,
};
use crate::groupkit::{
    find_isomorphism, is_nilpotent, nilpotent_structure, quotient_mod_frattini, sylow_split,
    totient_profile, Group, GroupError, NilpotentStructure,
};

/// Largest Δ(G) on which flows and exact searches are run.
const SEARCH_VERTEX_LIMIT: usize = 150;
/// Largest Δ(G) on which total domination is solved on the full graph.
const DIRECT_TD_LIMIT: usize = 120;
/// Largest Γ(G) for clique and chromatic search.
const CLIQUE_VERTEX_LIMIT: usize = 200;

fn delta_of(g: &Group) -> GeneratingGraph {
    delta_graph(&generating_graph(g))
}

fn identity(
    result: CheckResult,
    check: std::result::Result<IdentityCheck, GenError>,
) -> CheckResult {
    match check {
        Ok(c) => result.compared(c.holds, json!("holds"), json!(c.detail)),
        Err(e) => result.skipped(e.to_string()),
    }
}

fn budget_or_error(result: CheckResult, e: ConstructionError) -> CheckResult {
    match e {
        ConstructionError::BudgetExceeded { nodes } => {
            result.budget(nodes, "search budget exhausted")
        }
        other => result.compared(false, Value::Null, json!(other.to_string())),
    }
}

/// |G|·∏(1 − 1/p) over all primes of |G|.
fn min_degree_formula(g: &Group) -> usize {
    totient_profile(g.order() as u64).phi as usize
}

/// Exact γ_t of a graph with marks, or the node count spent.
fn exact_td(
    graph: &crate::graphcore::Graph,
    budget: SearchBudget,
) -> std::result::Result<(usize, u64), u64> {
    match total_domination(graph, budget) {
        Ok(s) => match s.outcome {
            DominationOutcome::Found { gamma, .. } => Ok((gamma, s.nodes)),
            DominationOutcome::BudgetExceeded { .. } => Err(s.nodes),
        },
        Err(GraphError::Undefined { .. }) | Err(GraphError::Precondition(_)) => Err(0),
    }
}

/// Applicability shared by the nilpotent checks: nilpotent, 2-generated
/// and nontrivial.
fn nilpotent_data(g: &Group) -> std::result::Result<NilpotentStructure, String> {
    if g.order() < 2 {
        return Err("trivial group".into());
    }
    let st = nilpotent_structure(g).map_err(|e| e.to_string())?;
    st.require_two_generated().map_err(|e| e.to_string())?;
    Ok(st)
}

/// Evaluates one check on one group. Inapplicable checks are skipped with a
/// reason; disagreements are reported as failures, never raised.
pub fn run_check(g: &Group, spec: &str, check: CheckId, budget: SearchBudget) -> CheckResult {
    let result = CheckResult::new(spec, check.as_str());
    if check == CheckId::CompleteDelta {
        if !g.is_two_generated() {
            return result.skipped(GroupError::NotTwoGenerated.to_string());
        }
        let expected = totient_profile(g.order() as u64).factorization.as_slice()
            == [(g.order() as u64, 1)]
            || (g.order() == 4 && !g.is_cyclic());
        let observed = delta_of(g).graph.is_complete();
        return result.compared(expected == observed, json!(expected), json!(observed));
    }
    let st = match nilpotent_data(g) {
        Ok(st) => st,
        Err(reason) => return result.skipped(reason),
    };
    match check {
        CheckId::MaxConnectivity => max_connectivity(g, result),
        CheckId::Eulerian => {
            let expected = !(g.is_cyclic() && g.order().is_multiple_of(2));
            let delta = delta_of(g);
            let observed = match eulerian_circuit(&delta.graph) {
                Ok(c) => verify_certificate(&delta.graph, &c),
                Err(_) => false,
            };
            result.compared(expected == observed, json!(expected), json!(observed))
        }
        CheckId::Hamiltonian => {
            let expected = g.order() != 2;
            match nilpotent_hamiltonian(g, budget) {
                Ok(NilpotentHamilton::Yes(cycle)) => result.compared(
                    expected,
                    json!({"hamiltonian": expected}),
                    json!({"hamiltonian": true, "method": cycle.method}),
                ),
                Ok(NilpotentHamilton::No { reason }) => result.compared(
                    !expected,
                    json!({"hamiltonian": expected}),
                    json!({"hamiltonian": false, "reason": reason}),
                ),
                Ok(NilpotentHamilton::BudgetExceeded { nodes }) => {
                    result.budget(nodes, "Hamiltonian search")
                }
                Err(e) => budget_or_error(result, e),
            }
        }
        CheckId::TotalDomination => total_domination_check(g, &st, result, budget),
        CheckId::CliqueChromatic => clique_chromatic(g, &st, result, budget),
        CheckId::LexDecomposition => identity(result, lex_decomposition_check(g)),
        CheckId::DegreeLifting => identity(result, degree_lifting_check(g)),
        CheckId::CoprimeProduct => coprime_product(g, &st, result),
        CheckId::DegreeFormulas => degree_formulas(g, result),
        CheckId::GraphDeterminesQuotient => {
            if st.is_cyclic() {
                return result.skipped("cyclic group");
            }
            let expected = st.cyclic_radical() as usize;
            match recover_cyclic_radical(&generating_graph(g)) {
                Ok(v) => result.compared(v == expected, json!(expected), json!(v)),
                Err(e) => result.compared(false, json!(expected), json!(e.to_string())),
            }
        }
        CheckId::KappaFrattiniScaling => kappa_scaling(g, result),
        CheckId::EdgeConnectivityDiameter => {
            let delta = delta_of(g);
            if delta.vertex_count() > SEARCH_VERTEX_LIMIT {
                return result.skipped(format!("Δ has more than {SEARCH_VERTEX_LIMIT} vertices"));
            }
            let lambda = edge_connectivity(&delta.graph);
            let m = basic_metrics(&delta.graph);
            let pass = Some(lambda.value) == m.min_degree && m.diameter.is_some_and(|d| d <= 2);
            let mut r = result.compared(
                pass,
                json!({"lambda": m.min_degree, "diameter_at_most": 2}),
                json!({"lambda": lambda.value, "diameter": m.diameter}),
            );
            if !pass {
                r.certificates.push(lambda.certificate);
            }
            r
        }
        CheckId::TdProductSubmultiplicative => td_submultiplicative(g, result, budget),
        CheckId::TdSandwich => td_sandwich(g, &st, result, budget),
        CheckId::CompleteDelta => unreachable!(),
    }
}

fn max_connectivity(g: &Group, result: CheckResult) -> CheckResult {
    let delta = delta_of(g);
    if delta.vertex_count() > SEARCH_VERTEX_LIMIT {
        return result.skipped(format!("Δ has more than {SEARCH_VERTEX_LIMIT} vertices"));
    }
    let formula = min_degree_formula(g);
    let kappa = vertex_connectivity(&delta.graph);
    let min_degree = basic_metrics(&delta.graph).min_degree;
    let pass = verify_certificate(&delta.graph, &kappa.certificate)
        && kappa.value == formula
        && min_degree == Some(formula);
    let mut r = result.compared(
        pass,
        json!({"kappa": formula, "delta": formula}),
        json!({"kappa": kappa.value, "delta": min_degree}),
    );
    if !pass {
        r.certificates.push(kappa.certificate);
    }
    r
}

fn kappa_scaling(g: &Group, result: CheckResult) -> CheckResult {
    let delta = delta_of(g);
    if delta.vertex_count() > SEARCH_VERTEX_LIMIT {
        return result.skipped(format!("Δ has more than {SEARCH_VERTEX_LIMIT} vertices"));
    }
    let fq = match quotient_mod_frattini(g) {
        Ok(fq) => fq,
        Err(e) => return result.skipped(e.to_string()),
    };
    let kq = vertex_connectivity(&delta_of(&fq.quotient).graph).value;
    let f = fq.frattini_elements.len();
    let kappa = vertex_connectivity(&delta.graph).value;
    result.compared(
        kappa == kq * f,
        json!({"kappa_quotient_times_frattini": kq * f}),
        json!({"kappa": kappa}),
    )
}

fn degree_formulas(g: &Group, result: CheckResult) -> CheckResult {
    match degree_census(g, &generating_graph(g)) {
        Ok(p) => {
            let bad = p.mismatches();
            let expected = json!({
                "gen_probability": p.gen_probability_formula,
                "nonisolated": p.nonisolated_formula,
                "min_degree": p.min_degree_formula,
                "classes": p.classes.len(),
            });
            let observed = json!({
                "gen_probability": p.gen_probability_observed,
                "nonisolated": p.nonisolated_observed,
                "min_degree": p.min_degree_observed,
                "mismatches": bad,
            });
            result.compared(bad.is_empty(), expected, observed)
        }
        Err(e) => result.skipped(e.to_string()),
    }
}

fn total_domination_check(
    g: &Group,
    st: &NilpotentStructure,
    result: CheckResult,
    budget: SearchBudget,
) -> CheckResult {
    let delta = delta_of(g);
    let direct = if delta.vertex_count() <= DIRECT_TD_LIMIT {
        match exact_td(&delta.graph, budget) {
            Ok(v) => Some(v),
            Err(nodes) => return result.budget(nodes, "total domination search on Δ(G)"),
        }
    } else {
        None
    };
    let nodes_direct = direct.map_or(0, |(_, n)| n);
    let direct = direct.map(|(v, _)| v);
    if st.is_cyclic() {
        let mut r = result.compared(
            direct.unwrap_or(1) == 1,
            json!(1),
            json!({"direct": direct}),
        );
        r.nodes = nodes_direct;
        return r;
    }
    let reduced = match nilpotent_td(g, budget) {
        Ok(t) => t,
        Err(e) => return budget_or_error(result, e),
    };
    let s = st.s();
    let q1 = st.smallest_noncyclic_prime().expect("noncyclic") as usize;
    let expected = if q1 >= s {
        json!(s + 1)
    } else {
        json!({"at_least": s + 1})
    };
    let pass = reduced.gamma > s
        && (q1 < s || reduced.gamma == s + 1)
        && direct.is_none_or(|d| d == reduced.gamma);
    let mut r = result.compared(
        pass,
        expected,
        json!({"direct": direct, "reduction": reduced.gamma}),
    );
    r.nodes = nodes_direct + reduced.nodes;
    r
}

fn clique_chromatic(
    g: &Group,
    st: &NilpotentStructure,
    result: CheckResult,
    budget: SearchBudget,
) -> CheckResult {
    if g.order() > CLIQUE_VERTEX_LIMIT {
        return result.skipped(format!("Γ has more than {CLIQUE_VERTEX_LIMIT} vertices"));
    }
    let expected = if st.is_cyclic() {
        let t = totient_profile(g.order() as u64);
        t.phi as usize + t.pi_count
    } else {
        st.smallest_noncyclic_prime().expect("noncyclic") as usize + 1
    };
    let gamma = generating_graph(g);
    let omega = clique_number(&gamma.graph, budget);
    let chi = chromatic_number(&gamma.graph, budget);
    let nodes = omega.nodes + chi.nodes;
    let (clique, chi, colouring) = match (omega.outcome, chi.outcome) {
        (CliqueOutcome::Found { clique }, ChromaticOutcome::Exact { chi, colouring }) => {
            (clique, chi, colouring)
        }
        _ => return result.budget(nodes, "clique or colouring search"),
    };
    let omega = clique.len();
    let clique = Certificate::Clique { vertices: clique };
    let colouring = Certificate::Colouring { classes: colouring };
    let valid =
        verify_certificate(&gamma.graph, &clique) && verify_certificate(&gamma.graph, &colouring);
    let pass = valid && omega == expected && chi == expected;
    let mut r = result.compared(
        pass,
        json!({"omega": expected, "chi": expected}),
        json!({"omega": omega, "chi": chi}),
    );
    r.nodes = nodes;
    if !pass {
        r.certificates = vec![clique, colouring];
    }
    r
}

/// Δ(A)×Δ(B) ⊆ Δ(G) for any split into coprime factors, with equality
/// when both factors are noncyclic. With two or more noncyclic Sylow
/// subgroups the split is taken at the smallest noncyclic prime so that
/// equality is tested.
fn coprime_product(g: &Group, st: &NilpotentStructure, result: CheckResult) -> CheckResult {
    let p = match st.noncyclic_primes().as_slice() {
        [q, _, ..] => *q,
        _ => totient_profile(g.order() as u64).factorization[0].0,
    };
    let Some(((a, ea), (b, eb))) = sylow_split(g, p) else {
        return result.skipped("order is a prime power");
    };
    let both_noncyclic = !a.is_cyclic() && !b.is_cyclic();
    let c = internal_delta_product(g, (&a, &ea), (&b, &eb));
    let pass = c.graphs_in_product && (!both_noncyclic || c.product_in_graphs);
    result.compared(
        pass,
        json!({"factors": [a.order(), b.order()], "product_in_delta": true, "delta_in_product": both_noncyclic.then_some(true)}),
        json!({"product_in_delta": c.graphs_in_product, "delta_in_product": c.product_in_graphs}),
    )
}

/// γ_t(Δ(A)×Δ(B)) ≤ γ_t(Δ(A))·γ_t(Δ(B)) for the split at the smallest
/// prime; self-dominating vertices count as looped.
fn td_submultiplicative(g: &Group, result: CheckResult, budget: SearchBudget) -> CheckResult {
    let p = totient_profile(g.order() as u64).factorization[0].0;
    let Some(((a, _), (b, _))) = sylow_split(g, p) else {
        return result.skipped("order is a prime power");
    };
    let (da, db) = (delta_of(&a).graph, delta_of(&b).graph);
    let product = da.direct_product_with_loops(&db);
    if product.vertex_count() > DIRECT_TD_LIMIT {
        return result.skipped(format!("product has more than {DIRECT_TD_LIMIT} vertices"));
    }
    let mut nodes = 0;
    let mut values = Vec::with_capacity(3);
    for graph in [&product, &da, &db] {
        match exact_td(graph, budget) {
            Ok((v, n)) => {
                values.push(v);
                nodes += n;
            }
            Err(n) => return result.budget(nodes + n, "total domination search"),
        }
    }
    let bound = values[1] * values[2];
    let mut r = result.compared(
        values[0] <= bound,
        json!({"at_most": bound}),
        json!({"product": values[0], "factors": [values[1], values[2]]}),
    );
    r.nodes = nodes;
    r
}

fn td_sandwich(
    g: &Group,
    st: &NilpotentStructure,
    result: CheckResult,
    budget: SearchBudget,
) -> CheckResult {
    if st.is_cyclic() {
        return result.skipped("cyclic group");
    }
    let td = match nilpotent_td(g, budget) {
        Ok(t) => t,
        Err(e) => return budget_or_error(result, e),
    };
    let red = td.reduction.as_ref().expect("noncyclic");
    let bounds = match td_bounds(&red.parts) {
        Ok(b) => b,
        Err(e) => return result.skipped(e.to_string()),
    };
    let s = red.parts.len();
    let pass = s < bounds.lower && bounds.lower <= td.gamma && td.gamma <= bounds.upper;
    let mut r = result.compared(
        pass,
        json!({"lower": bounds.lower, "upper": bounds.upper, "t": bounds.t}),
        json!({"gamma": td.gamma, "parts": red.parts.parts()}),
    );
    r.nodes = td.nodes;
    r
}

/// The pair form of graph-determines-quotient: Γ(G) ≅ Γ(H) is expected
/// exactly when G/Φ(G) ≅ H/Φ(H) and |Φ(G)| = |Φ(H)|. A positive pair must
/// map onto each other under the coset bijection; a negative pair must
/// have different degree multisets.
pub fn run_pair_check(g: &Group, h: &Group, label: &str) -> CheckResult {
    let result = CheckResult::new(label, CheckId::GraphDeterminesQuotient.as_str());
    if !(is_nilpotent(g) && is_nilpotent(h)) {
        return result.skipped(GroupError::NotNilpotent.to_string());
    }
    let (fg, fh) = match (quotient_mod_frattini(g), quotient_mod_frattini(h)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return result.skipped(e.to_string()),
    };
    let expected = fg.frattini_elements.len() == fh.frattini_elements.len()
        && find_isomorphism(&fg.quotient, &fh.quotient).is_some();
    if expected {
        return identity(result, quotient_bijection_check(g, h));
    }
    let multiset = |x: &Group| {
        let mut d = generating_graph(x).graph.degrees();
        d.sort_unstable();
        d
    };
    let differ = multiset(g) != multiset(h);
    result.compared(
        differ,
        json!("non-isomorphic"),
        json!(if differ {
            "degree multisets differ"
        } else {
            "degree multisets agree"
        }),
    )
}

/// One of the open questions on a single group, nilpotent or not. A
/// failure is flagged `COUNTEREXAMPLE` and keeps its certificates.
pub fn scan_question(
    g: &Group,
    spec: &str,
    question: Question,
    budget: SearchBudget,
) -> CheckResult {
    let result = CheckResult::new(spec, question.as_str());
    if g.order() < 2 {
        return result.skipped("trivial group");
    }
    if !g.is_two_generated() {
        return result.skipped(GroupError::NotTwoGenerated.to_string());
    }
    let mut r = match question {
        Question::Conn => {
            let delta = delta_of(g);
            let kappa = vertex_connectivity(&delta.graph);
            let min = basic_metrics(&delta.graph).min_degree;
            let pass = Some(kappa.value) == min;
            let mut r = result.compared(pass, json!({"kappa": min}), json!({"kappa": kappa.value}));
            if !pass {
                r.certificates.push(kappa.certificate);
            }
            r
        }
        Question::Ham => {
            if g.order() == 2 {
                return result.skipped("Δ(C₂) = K₂");
            }
            let delta = delta_of(g);
            let found = hamiltonian(&delta.graph, budget);
            match found.outcome {
                HamiltonOutcome::Yes { cycle, .. } => {
                    let cert = Certificate::HamCycle { cycle };
                    let ok = verify_certificate(&delta.graph, &cert);
                    let mut r = result.compared(ok, json!(true), json!(ok));
                    r.nodes = found.nodes;
                    r
                }
                HamiltonOutcome::No { reason } => {
                    let mut r = result.compared(
                        false,
                        json!(true),
                        json!({"hamiltonian": false, "reason": reason}),
                    );
                    r.nodes = found.nodes;
                    r
                }
                HamiltonOutcome::BudgetExceeded => {
                    return result.budget(found.nodes, "Hamiltonian search")
                }
            }
        }
        Question::Chrom => {
            let gamma = generating_graph(g);
            let omega = clique_number(&gamma.graph, budget);
            let chi = chromatic_number(&gamma.graph, budget);
            let nodes = omega.nodes + chi.nodes;
            let (CliqueOutcome::Found { clique }, ChromaticOutcome::Exact { chi, colouring }) =
                (omega.outcome, chi.outcome)
            else {
                return result.budget(nodes, "clique or colouring search");
            };
            let pass = clique.len() == chi;
            let mut r = result.compared(pass, json!({"chi": clique.len()}), json!({"chi": chi}));
            r.nodes = nodes;
            if !pass {
                r.certificates = vec![
                    Certificate::Clique { vertices: clique },
                    Certificate::Colouring { classes: colouring },
                ];
            }
            r
        }
    };
    if r.status == super::Status::Fail {
        r.flag = Some("COUNTEREXAMPLE".into());
    }
    r
}
