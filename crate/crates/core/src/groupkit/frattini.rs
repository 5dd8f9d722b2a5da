use std::collections::{HashSet, VecDeque};

use super::structure::is_nilpotent;
use super::{totient_profile, ElementSet, Group, GroupError, Result};
use crate::bitset::BitSet;

/// Largest order for which the full subgroup lattice is enumerated.
pub const DEFAULT_LATTICE_GUARD: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrattiniMethod {
    /// Intersection of all maximal subgroups of the full lattice.
    Lattice,
    /// ⟨[x, y], x^rad⟩ with rad the product of the primes dividing |G|;
    /// valid for nilpotent groups only.
    NilpotentFormula,
}

/// Every subgroup of `g`, obtained by closing the set of cyclic subgroups
/// under pairwise joins. Sorted by (size, mask).
pub fn subgroup_lattice(g: &Group, guard: usize) -> Result<Vec<ElementSet>> {
    if g.order() > guard {
        return Err(GroupError::OrderGuard {
            order: g.order(),
            max: guard,
        });
    }
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut all: Vec<(BitSet, Vec<usize>)> = Vec::new();
    let mut queue = VecDeque::new();
    for x in 0..g.order() {
        let h = g.closure(&[x]);
        if seen.insert(h.mask().clone()) {
            all.push((h.mask().clone(), vec![x]));
            queue.push_back(all.len() - 1);
        }
    }
    while let Some(i) = queue.pop_front() {
        let mut j = 0;
        while j < all.len() {
            if i != j && !all[i].0.is_subset(&all[j].0) && !all[j].0.is_subset(&all[i].0) {
                let mut gens = all[i].1.clone();
                gens.extend(all[j].1.iter().copied());
                let joined = g.closure(&gens);
                if seen.insert(joined.mask().clone()) {
                    all.push((joined.mask().clone(), gens));
                    queue.push_back(all.len() - 1);
                }
            }
            j += 1;
        }
    }
    let mut subgroups: Vec<ElementSet> = all
        .into_iter()
        .map(|(m, _)| ElementSet::from_mask(m, true))
        .collect();
    subgroups.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.mask().cmp(b.mask())));
    Ok(subgroups)
}

pub fn frattini(g: &Group, method: FrattiniMethod) -> Result<ElementSet> {
    frattini_with_guard(g, method, DEFAULT_LATTICE_GUARD)
}

pub fn frattini_with_guard(g: &Group, method: FrattiniMethod, guard: usize) -> Result<ElementSet> {
    match method {
        FrattiniMethod::Lattice => {
            let lattice = subgroup_lattice(g, guard)?;
            let n = g.order();
            let proper: Vec<&ElementSet> = lattice.iter().filter(|h| h.size() < n).collect();
            let maximal = proper
                .iter()
                .filter(|h| !proper.iter().any(|k| k.size() > h.size() && h.is_subset(k)));
            let mut phi = BitSet::full(n);
            for h in maximal {
                phi.intersect_with(h.mask());
            }
            Ok(ElementSet::from_mask(phi, true))
        }
        FrattiniMethod::NilpotentFormula => {
            if !is_nilpotent(g) {
                return Err(GroupError::NotNilpotent);
            }
            let n = g.order();
            let rad: u64 = totient_profile(n as u64)
                .factorization
                .iter()
                .map(|&(p, _)| p)
                .product();
            let mut seeds = BitSet::new(n);
            for x in 0..n {
                seeds.insert(g.pow(x, rad as usize));
                for y in x + 1..n {
                    seeds.insert(g.commutator(x, y));
                }
            }
            let seeds: Vec<usize> = seeds.iter().collect();
            Ok(g.closure(&seeds))
        }
    }
}

/// G/Φ(G) together with the projection. Coset ids are assigned in order of
/// their least element, which is also the chosen representative.
#[derive(Clone, Debug)]
pub struct FrattiniQuotient {
    pub quotient: Group,
    pub frattini: ElementSet,
    /// Elements of Φ(G) in ascending index order (identity first).
    pub frattini_elements: Vec<usize>,
    /// element index → coset index
    pub coset_of: Vec<usize>,
    /// coset index → least element of the coset
    pub representatives: Vec<usize>,
}

impl FrattiniQuotient {
    /// The element `rep(coset) · f_k` with `f_k` the k-th element of Φ(G).
    pub fn lift(&self, g: &Group, coset: usize, k: usize) -> usize {
        g.mul(self.representatives[coset], self.frattini_elements[k])
    }
}

pub fn quotient_mod_frattini(g: &Group) -> Result<FrattiniQuotient> {
    let phi = if is_nilpotent(g) {
        frattini(g, FrattiniMethod::NilpotentFormula)?
    } else {
        frattini(g, FrattiniMethod::Lattice)?
    };
    quotient_by(g, phi)
}

pub(crate) fn quotient_by(g: &Group, phi: ElementSet) -> Result<FrattiniQuotient> {
    let n = g.order();
    let phi_elems = phi.elements();
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(x);
        for &f in &phi_elems {
            coset_of[g.mul(x, f)] = id;
        }
    }
    let m = representatives.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &representatives {
        for &b in &representatives {
            table.push(coset_of[g.mul(a, b)]);
        }
    }
    // a subgroup that is not normal yields an ill-defined product
    for x in 0..n {
        for &y in &representatives {
            if coset_of[g.mul(x, y)] != table[coset_of[x] * m + coset_of[y]] {
                return Err(GroupError::InvalidParameter(
                    "quotient by a non-normal subgroup".into(),
                ));
            }
        }
    }
    let labels = representatives
        .iter()
        .map(|&r| g.label(r).to_string())
        .collect();
    let quotient = Group::from_table(m, table, Some(labels))?;
    Ok(FrattiniQuotient {
        quotient,
        frattini: phi,
        frattini_elements: phi_elems,
        coset_of,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{build_group, parse_spec};

    fn grp(s: &str) -> Group {
        build_group(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn frattini_of_c12() {
        let g = grp("C12");
        let phi = frattini(&g, FrattiniMethod::Lattice).unwrap();
        assert_eq!(phi.elements(), vec![0, 6]);
        assert_eq!(frattini(&g, FrattiniMethod::NilpotentFormula).unwrap(), phi);
    }

    #[test]
    fn frattini_of_klein_is_trivial() {
        let g = grp("C2^2");
        assert_eq!(frattini(&g, FrattiniMethod::Lattice).unwrap().size(), 1);
        assert_eq!(
            frattini(&g, FrattiniMethod::NilpotentFormula)
                .unwrap()
                .size(),
            1
        );
    }

    #[test]
    fn frattini_of_heisenberg_is_centre() {
        let g = grp("Heis3");
        let lat = frattini(&g, FrattiniMethod::Lattice).unwrap();
        let formula = frattini(&g, FrattiniMethod::NilpotentFormula).unwrap();
        assert_eq!(lat, formula);
        // centre = {(0,0,c)} = indices 0, 1, 2
        assert_eq!(lat.elements(), vec![0, 1, 2]);
    }

    #[test]
    fn formula_refuses_non_nilpotent() {
        let g = grp("Ex(1)");
        assert_eq!(
            frattini(&g, FrattiniMethod::NilpotentFormula),
            Err(GroupError::NotNilpotent)
        );
    }

    #[test]
    fn lattice_of_c12_has_six_subgroups() {
        let g = grp("C12");
        assert_eq!(subgroup_lattice(&g, 200).unwrap().len(), 6);
        let k = grp("C2^2");
        assert_eq!(subgroup_lattice(&k, 200).unwrap().len(), 5);
        assert!(subgroup_lattice(&grp("C12"), 10).is_err());
    }

    #[test]
    fn quotients() {
        let q = quotient_mod_frattini(&grp("C12")).unwrap();
        assert_eq!(q.quotient.order(), 6);
        assert!(q.quotient.is_cyclic());

        let k = grp("C2^2");
        let q = quotient_mod_frattini(&k).unwrap();
        assert_eq!(q.coset_of, vec![0, 1, 2, 3]);

        let q = quotient_mod_frattini(&grp("Heis3")).unwrap();
        assert_eq!(q.quotient.order(), 9);
        assert!(q.quotient.is_abelian());
        assert!(q.quotient.element_orders().iter().all(|&o| o <= 3));
    }
}
