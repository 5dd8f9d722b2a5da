use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::{totient_profile, ElementSet, Group, GroupError, Result};

/// Prime data of a nilpotent group: the primes whose Sylow subgroup is
/// cyclic (with exponents), then the remaining primes in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentStructure {
    pub order: u64,
    pub cyclic_sylow: Vec<(u64, u32)>,
    pub noncyclic_sylow: Vec<(u64, u32)>,
    pub two_generated: bool,
}

impl NilpotentStructure {
    pub fn r(&self) -> usize {
        self.cyclic_sylow.len()
    }

    pub fn s(&self) -> usize {
        self.noncyclic_sylow.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.noncyclic_sylow.is_empty()
    }

    pub fn cyclic_primes(&self) -> Vec<u64> {
        self.cyclic_sylow.iter().map(|&(p, _)| p).collect()
    }

    pub fn noncyclic_primes(&self) -> Vec<u64> {
        self.noncyclic_sylow.iter().map(|&(q, _)| q).collect()
    }

    /// p₁⋯p_r, the empty product being 1.
    pub fn cyclic_radical(&self) -> u64 {
        self.cyclic_primes().iter().product()
    }

    /// Smallest prime whose Sylow subgroup is not cyclic.
    pub fn smallest_noncyclic_prime(&self) -> Option<u64> {
        self.noncyclic_sylow.first().map(|&(q, _)| q)
    }

    pub fn require_two_generated(&self) -> Result<()> {
        if self.two_generated {
            Ok(())
        } else {
            Err(GroupError::NotTwoGenerated)
        }
    }
}

/// Elements whose order is a power of `p`.
pub(crate) fn p_elements(g: &Group, p: u64) -> ElementSet {
    let mut set = ElementSet::new(g.order());
    for x in 0..g.order() {
        let mut o = g.element_order(x) as u64;
        while o.is_multiple_of(p) {
            o /= p;
        }
        if o == 1 {
            set.insert(x);
        }
    }
    set
}

fn is_product_closed(g: &Group, set: &ElementSet) -> bool {
    let elems = set.elements();
    elems
        .iter()
        .all(|&a| elems.iter().all(|&b| set.contains(g.mul(a, b))))
}

/// Nilpotent iff, for every prime p, the p-elements form a subgroup and the
/// order is the product of those subgroup orders.
pub fn is_nilpotent(g: &Group) -> bool {
    let profile = totient_profile(g.order() as u64);
    let mut product = 1usize;
    for &(p, _) in &profile.factorization {
        let set = p_elements(g, p);
        if !is_product_closed(g, &set) {
            return false;
        }
        product *= set.size();
    }
    product == g.order()
}

pub fn nilpotent_structure(g: &Group) -> Result<NilpotentStructure> {
    if !is_nilpotent(g) {
        return Err(GroupError::NotNilpotent);
    }
    let profile = totient_profile(g.order() as u64);
    let mut cyclic_sylow = Vec::new();
    let mut noncyclic_sylow = Vec::new();
    for &(p, a) in &profile.factorization {
        let full = p.pow(a) as usize;
        if g.element_orders().contains(&full) {
            cyclic_sylow.push((p, a));
        } else {
            noncyclic_sylow.push((p, a));
        }
    }
    let two_generated = noncyclic_sylow.is_empty() || g.is_two_generated();
    Ok(NilpotentStructure {
        order: g.order() as u64,
        cyclic_sylow,
        noncyclic_sylow,
        two_generated,
    })
}

type Embedded = (Group, Vec<usize>);

/// G = A × B with A the Sylow p-subgroup and B the product of the other
/// Sylow subgroups, each with its embedding into G. `None` unless G is
/// nilpotent and p is one of at least two prime divisors of |G|.
pub fn sylow_split(g: &Group, p: u64) -> Option<(Embedded, Embedded)> {
    if !is_nilpotent(g) {
        return None;
    }
    let primes = totient_profile(g.order() as u64).factorization;
    if primes.len() < 2 || !primes.iter().any(|&(q, _)| q == p) {
        return None;
    }
    let sylow = p_elements(g, p);
    let mut rest = ElementSet::new(g.order());
    for x in (0..g.order()).filter(|&x| !(g.element_order(x) as u64).is_multiple_of(p)) {
        rest.insert(x);
    }
    Some((g.subgroup(&sylow).ok()?, g.subgroup(&rest).ok()?))
}

/// For an abelian group, the number of elements of each order; this
/// histogram determines a finite abelian group up to isomorphism.
pub fn abelian_order_histogram(g: &Group) -> Option<BTreeMap<usize, usize>> {
    if !g.is_abelian() {
        return None;
    }
    let mut hist = BTreeMap::new();
    for &o in g.element_orders() {
        *hist.entry(o).or_insert(0) += 1;
    }
    Some(hist)
}

/// An isomorphism `a → b` for 2-generated `a`, found by sending the least
/// generating pair of `a` to each candidate pair of `b` and extending along
/// words. Returns `None` when no pair extends.
pub fn find_isomorphism(a: &Group, b: &Group) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let (x, y) = a.least_generating_pair()?;
    let (ox, oy) = (a.element_order(x), a.element_order(y));
    let n = b.order();
    for u in (0..n).filter(|&u| b.element_order(u) == ox) {
        for v in (0..n).filter(|&v| b.element_order(v) == oy) {
            if let Some(map) = extend_map(a, b, (x, y), (u, v)) {
                return Some(map);
            }
        }
    }
    None
}

fn extend_map(
    a: &Group,
    b: &Group,
    src: (usize, usize),
    dst: (usize, usize),
) -> Option<Vec<usize>> {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(e) = queue.pop_front() {
        for (s, t) in [(src.0, dst.0), (src.1, dst.1)] {
            let next = a.mul(e, s);
            let image = b.mul(map[e], t);
            if map[next] == usize::MAX {
                map[next] = image;
                queue.push_back(next);
            } else if map[next] != image {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &m in &map {
        if m == usize::MAX || std::mem::replace(&mut hit[m], true) {
            return None;
        }
    }
    for i in 0..n {
        for j in 0..n {
            if map[a.mul(i, j)] != b.mul(map[i], map[j]) {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{build_group, parse_spec};

    fn grp(s: &str) -> Group {
        build_group(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn klein_times_c9() {
        let st = nilpotent_structure(&grp("C2^2 x C9")).unwrap();
        assert_eq!(st.cyclic_sylow, vec![(3, 2)]);
        assert_eq!(st.noncyclic_sylow, vec![(2, 2)]);
        assert_eq!((st.r(), st.s()), (1, 1));
        assert!(st.two_generated);
    }

    #[test]
    fn cyclic_twelve() {
        let st = nilpotent_structure(&grp("C12")).unwrap();
        assert_eq!(st.cyclic_primes(), vec![2, 3]);
        assert_eq!(st.s(), 0);
        assert!(st.is_cyclic());
    }

    #[test]
    fn example_family_is_not_nilpotent() {
        assert_eq!(
            nilpotent_structure(&grp("Ex(1)")),
            Err(GroupError::NotNilpotent)
        );
    }

    #[test]
    fn three_generated_detected() {
        let st = nilpotent_structure(&grp("C2^3")).unwrap();
        assert!(!st.two_generated);
        assert_eq!(st.require_two_generated(), Err(GroupError::NotTwoGenerated));
    }

    #[test]
    fn isomorphism_search() {
        let a = grp("C6");
        let b = grp("C2 x C3");
        let map = find_isomorphism(&a, &b).unwrap();
        assert_eq!(map[0], 0);
        assert!(find_isomorphism(&grp("C4"), &grp("C2^2")).is_none());
        assert_eq!(abelian_order_histogram(&a), abelian_order_histogram(&b));
        assert!(abelian_order_histogram(&grp("Heis3")).is_none());
    }
}
