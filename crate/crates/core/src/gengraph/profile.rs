use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::{generating_graph, GenError, GeneratingGraph, Result};
use crate::groupkit::{
    nilpotent_structure, quotient_mod_frattini, Group, GroupError, NilpotentStructure,
};

/// Exact rational, serialised as `"a"` or `"a/b"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exact(pub Ratio<u64>);

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Exact {
    fn equals(&self, n: usize) -> bool {
        self.0 == Ratio::from_integer(n as u64)
    }
}

/// One degree class: elements whose Φ-coset has order ∏_{i∈I} p_i ∏_j q_j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeClass {
    /// The primes p_i with i ∈ I.
    pub subset: Vec<u64>,
    pub coset_order: u64,
    pub observed_count: usize,
    /// Distinct Γ-degrees seen in the class, ascending.
    pub observed_degrees: Vec<usize>,
    pub alpha: Exact,
    pub beta: Exact,
    pub epsilon: u8,
}

impl DegreeClass {
    pub fn agrees(&self) -> bool {
        self.alpha.equals(self.observed_count)
            && match self.observed_degrees.as_slice() {
                [d] => self.beta.equals(*d),
                [] => self.observed_count == 0,
                _ => false,
            }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub structure: NilpotentStructure,
    pub frattini_order: usize,
    pub classes: Vec<DegreeClass>,
    pub gen_probability_observed: Exact,
    pub gen_probability_formula: Exact,
    pub nonisolated_observed: usize,
    pub nonisolated_formula: Exact,
    pub min_degree_observed: Option<usize>,
    pub min_degree_formula: Exact,
}

impl DegreeProfile {
    /// Human-readable descriptions of every disagreement.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.gen_probability_observed != self.gen_probability_formula {
            out.push(format!(
                "P(2): observed {} formula {}",
                self.gen_probability_observed, self.gen_probability_formula
            ));
        }
        if !self.nonisolated_formula.equals(self.nonisolated_observed) {
            out.push(format!(
                "|V(Δ)|: observed {} formula {}",
                self.nonisolated_observed, self.nonisolated_formula
            ));
        }
        if !self
            .min_degree_observed
            .is_some_and(|d| self.min_degree_formula.equals(d))
        {
            out.push(format!(
                "δ: observed {:?} formula {}",
                self.min_degree_observed, self.min_degree_formula
            ));
        }
        for c in &self.classes {
            if !c.agrees() {
                out.push(format!(
                    "class {:?}: observed count {} degrees {:?}, formula α={} β={}",
                    c.subset, c.observed_count, c.observed_degrees, c.alpha, c.beta
                ));
            }
        }
        out
    }
}

fn frac(num: u64, den: u64) -> Ratio<u64> {
    Ratio::new(num, den)
}

/// Observed degree statistics of `gamma` = Γ(G) next to the closed-form
/// values computed from the Sylow data of G. Disagreements are recorded,
/// not raised.
pub fn degree_census(g: &Group, gamma: &GeneratingGraph) -> Result<DegreeProfile> {
    if g.order() == 1 {
        return Err(GroupError::InvalidParameter("trivial group".into()).into());
    }
    let st = nilpotent_structure(g)?;
    st.require_two_generated()?;
    let fq = quotient_mod_frattini(g)?;
    let n = g.order() as u64;
    let order = Ratio::from_integer(n);
    let ps = st.cyclic_primes();
    let qs = st.noncyclic_primes();
    let q_prod: u64 = qs.iter().product();
    let q_sq: Ratio<u64> = qs.iter().map(|&q| frac(q * q - 1, q * q)).product();
    let q_lin: Ratio<u64> = qs.iter().map(|&q| frac(q - 1, q)).product();
    let degrees = gamma.graph.degrees();
    let coset_orders: Vec<u64> = (0..g.order())
        .map(|x| fq.quotient.element_order(fq.coset_of[x]) as u64)
        .collect();

    let r = ps.len();
    let mut classes = Vec::with_capacity(1 << r);
    for mask in 0..1usize << r {
        let inside = |i: usize| mask >> i & 1 == 1;
        let subset: Vec<u64> = (0..r).filter(|&i| inside(i)).map(|i| ps[i]).collect();
        let coset_order = subset.iter().product::<u64>() * q_prod;
        let mut alpha = order * q_sq;
        let mut beta = order * q_lin;
        for (i, &p) in ps.iter().enumerate() {
            if inside(i) {
                alpha *= frac(p - 1, p);
            } else {
                alpha *= frac(1, p);
                beta *= frac(p - 1, p);
            }
        }
        let epsilon = u8::from(st.is_cyclic() && subset.len() == r);
        let beta = beta - Ratio::from_integer(u64::from(epsilon));
        let members: Vec<usize> = (0..g.order())
            .filter(|&x| coset_orders[x] == coset_order)
            .collect();
        let mut observed_degrees: Vec<usize> = members.iter().map(|&x| degrees[x]).collect();
        observed_degrees.sort_unstable();
        observed_degrees.dedup();
        classes.push(DegreeClass {
            subset,
            coset_order,
            observed_count: members.len(),
            observed_degrees,
            alpha: Exact(alpha),
            beta: Exact(beta),
            epsilon,
        });
    }

    let ordered_pairs = 2 * gamma.graph.edge_count() + gamma.graph.self_dominating().count();
    let p_cyc: Ratio<u64> = ps.iter().map(|&p| frac(p * p - 1, p * p)).product();
    let min_formula = classes[0].beta;
    Ok(DegreeProfile {
        frattini_order: fq.frattini_elements.len(),
        classes,
        gen_probability_observed: Exact(frac(ordered_pairs as u64, n * n)),
        gen_probability_formula: Exact(p_cyc * q_sq * q_lin),
        nonisolated_observed: degrees.iter().filter(|&&d| d > 0).count(),
        nonisolated_formula: Exact(order * q_sq),
        min_degree_observed: degrees.iter().copied().filter(|&d| d > 0).min(),
        min_degree_formula: min_formula,
        structure: st,
    })
}

/// Builds Γ(G) and checks every observed degree statistic against its
/// formula, failing with `InternalMismatch` on any disagreement.
pub fn degree_profile(g: &Group) -> Result<DegreeProfile> {
    let profile = degree_census(g, &generating_graph(g))?;
    let bad = profile.mismatches();
    if bad.is_empty() {
        Ok(profile)
    } else {
        Err(GenError::InternalMismatch(bad.join("; ")))
    }
}

/// |{v : deg v ≠ 0}| / |{v : deg v = δ(Δ)}| for a graph Γ(G).
pub fn recover_cyclic_radical(gamma: &GeneratingGraph) -> Result<usize> {
    let degrees = gamma.graph.degrees();
    let nonisolated = degrees.iter().filter(|&&d| d > 0).count();
    let Some(min) = degrees.iter().copied().filter(|&d| d > 0).min() else {
        return Err(GenError::NonIntegral { num: 0, den: 0 });
    };
    let minimal = degrees.iter().filter(|&&d| d == min).count();
    if nonisolated % minimal != 0 {
        return Err(GenError::NonIntegral {
            num: nonisolated,
            den: minimal,
        });
    }
    Ok(nonisolated / minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{build_group, parse_spec};

    fn grp(s: &str) -> Group {
        build_group(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn c6_classes() {
        let p = degree_profile(&grp("C6")).unwrap();
        assert_eq!(p.classes.len(), 4);
        let full = p.classes.iter().find(|c| c.coset_order == 6).unwrap();
        assert_eq!(
            (
                full.observed_count,
                full.observed_degrees.as_slice(),
                full.epsilon
            ),
            (2, &[5][..], 1)
        );
        let empty = &p.classes[0];
        assert_eq!(
            (
                empty.coset_order,
                empty.observed_count,
                empty.observed_degrees.as_slice()
            ),
            (1, 1, &[2][..])
        );
        assert_eq!(p.gen_probability_formula.to_string(), "2/3");
    }

    #[test]
    fn klein_times_c9() {
        let g = grp("C2^2 x C9");
        let p = degree_profile(&g).unwrap();
        assert_eq!(p.gen_probability_observed.to_string(), "1/3");
        assert_eq!(p.nonisolated_observed, 27);
        assert_eq!(p.min_degree_observed, Some(12));
        assert_eq!(recover_cyclic_radical(&generating_graph(&g)).unwrap(), 3);
    }

    #[test]
    fn heisenberg_profile() {
        let p = degree_profile(&grp("Heis3")).unwrap();
        assert_eq!(p.frattini_order, 3);
        assert_eq!(p.min_degree_observed, Some(18));
    }

    #[test]
    fn klein_radical_is_one() {
        assert_eq!(
            recover_cyclic_radical(&generating_graph(&grp("C2^2"))).unwrap(),
            1
        );
    }

    #[test]
    fn non_nilpotent_refused() {
        assert!(matches!(
            degree_profile(&grp("Ex(1)")),
            Err(GenError::Group(GroupError::NotNilpotent))
        ));
    }
}
