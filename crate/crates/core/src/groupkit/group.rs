use std::fmt::Write as _;

use super::{GroupError, Result};
use crate::bitset::BitSet;

/// A finite group stored as a Cayley table. Element `0` is always the
/// identity and `mul(i, j)` is the product of element `i` by element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<usize>,
    labels: Vec<String>,
    orders: Vec<usize>,
}

/// A subset of a group's elements. `closed` is only set by routines that
/// have checked closure under the product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    mask: BitSet,
    closed: bool,
}

impl ElementSet {
    pub fn new(order: usize) -> Self {
        ElementSet {
            mask: BitSet::new(order),
            closed: false,
        }
    }

    pub fn from_elements(order: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        ElementSet {
            mask: BitSet::from_indices(order, elements),
            closed: false,
        }
    }

    pub(crate) fn from_mask(mask: BitSet, closed: bool) -> Self {
        ElementSet { mask, closed }
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask.contains(g)
    }

    pub fn insert(&mut self, g: usize) {
        if self.mask.insert(g) {
            self.closed = false;
        }
    }

    pub fn size(&self) -> usize {
        self.mask.count()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    pub fn elements(&self) -> Vec<usize> {
        self.mask.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        ElementSet {
            mask,
            closed: self.closed && other.closed,
        }
    }
}

/// Reusable buffers for repeated subgroup closures on the same group.
pub(crate) struct ClosureScratch {
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<usize>,
}

impl ClosureScratch {
    pub(crate) fn new(order: usize) -> Self {
        ClosureScratch {
            stamp: vec![0; order],
            epoch: 0,
            queue: Vec::with_capacity(order),
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }
}

impl Group {
    /// Validates a row-major Cayley table: identity at index 0, right
    /// inverses, and associativity (Light's test over a generating set).
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(GroupError::InvalidCayley("empty group".into()));
        }
        if table.len() != order * order {
            return Err(GroupError::InvalidCayley(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(GroupError::InvalidCayley(format!(
                "entry {bad} out of range"
            )));
        }
        let labels = match labels {
            Some(l) if l.len() == order => l,
            Some(l) => {
                return Err(GroupError::InvalidCayley(format!(
                    "{} labels for {order} elements",
                    l.len()
                )))
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        let table: Vec<u32> = table.into_iter().map(|x| x as u32).collect();
        for j in 0..order {
            if table[j] as usize != j || table[j * order] as usize != j {
                return Err(GroupError::InvalidCayley(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for i in 0..order {
            match (0..order).find(|&j| table[i * order + j] == 0) {
                Some(j) => inverses[i] = j,
                None => {
                    return Err(GroupError::InvalidCayley(format!(
                        "element {i} has no inverse"
                    )))
                }
            }
        }
        let mut g = Group {
            order,
            table,
            inverses,
            labels,
            orders: Vec::new(),
        };
        g.check_associative()?;
        g.orders = (0..order)
            .map(|i| {
                let mut x = i;
                let mut m = 1;
                while x != 0 {
                    x = g.mul(x, i);
                    m += 1;
                }
                m
            })
            .collect();
        Ok(g)
    }

    fn check_associative(&self) -> Result<()> {
        // left-normed words in the greedy generators reach every element, so
        // these generators generate the table as a magma
        let gens = self.greedy_generators();
        for &s in &gens {
            for x in 0..self.order {
                let xs = self.mul(x, s);
                for y in 0..self.order {
                    if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                        return Err(GroupError::InvalidCayley(format!(
                            "associativity fails at ({x}, {s}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = self.closure(&[]);
        for x in 0..self.order {
            if !reached.contains(x) {
                gens.push(x);
                reached = self.closure(&gens);
            }
        }
        gens
    }

    pub fn trivial() -> Self {
        Group::from_table(1, vec![0], Some(vec!["1".into()])).expect("trivial group")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = labels;
        self
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.orders[a];
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inverse(ba), ab)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    /// Least-index element generating the whole group, if any.
    pub fn cyclic_generator(&self) -> Option<usize> {
        self.orders.iter().position(|&o| o == self.order)
    }

    /// Least subgroup containing `seeds`, by saturating right products.
    pub fn closure(&self, seeds: &[usize]) -> ElementSet {
        let mut mask = BitSet::new(self.order);
        mask.insert(0);
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in seeds {
                let y = self.mul(x, s);
                if mask.insert(y) {
                    queue.push(y);
                }
            }
        }
        ElementSet::from_mask(mask, true)
    }

    pub fn closure_of(&self, seeds: &ElementSet) -> ElementSet {
        self.closure(&seeds.elements())
    }

    pub fn is_generating_pair(&self, g: usize, h: usize) -> bool {
        let mut scratch = ClosureScratch::new(self.order);
        self.generates_pair(g, h, &mut scratch)
    }

    /// Size of ⟨g, h⟩ compared against |G| using shared scratch buffers.
    pub(crate) fn generates_pair(&self, g: usize, h: usize, scratch: &mut ClosureScratch) -> bool {
        let n = self.order;
        let epoch = scratch.next_epoch();
        scratch.queue.clear();
        scratch.queue.push(0);
        scratch.stamp[0] = epoch;
        let mut head = 0;
        while head < scratch.queue.len() {
            let x = scratch.queue[head];
            head += 1;
            let row = &self.table[x * n..(x + 1) * n];
            for s in [g, h] {
                let y = row[s] as usize;
                if scratch.stamp[y] != epoch {
                    scratch.stamp[y] = epoch;
                    scratch.queue.push(y);
                }
            }
        }
        scratch.queue.len() == n
    }

    /// Checks whether some pair of elements generates the group.
    pub fn is_two_generated(&self) -> bool {
        self.least_generating_pair().is_some()
    }

    /// Lexicographically least `(a, b)` with `a <= b` generating the group.
    pub fn least_generating_pair(&self) -> Option<(usize, usize)> {
        let mut scratch = ClosureScratch::new(self.order);
        (0..self.order)
            .flat_map(|a| (a..self.order).map(move |b| (a, b)))
            .find(|&(a, b)| self.generates_pair(a, b, &mut scratch))
    }

    /// Direct product with element `(a, b)` at index `a * |other| + b`.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (n, m) = (self.order, other.order);
        let order = n * m;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a1, b1) = (x / m, x % m);
            for y in 0..order {
                let (a2, b2) = (y / m, y % m);
                table.push((self.mul(a1, a2) * m + other.mul(b1, b2)) as u32);
            }
        }
        let labels = (0..order)
            .map(|x| join_labels(&self.labels[x / m], &other.labels[x % m]))
            .collect();
        let inverses = (0..order)
            .map(|x| self.inverse(x / m) * m + other.inverse(x % m))
            .collect();
        let orders = (0..order)
            .map(|x| lcm(self.orders[x / m], other.orders[x % m]))
            .collect();
        Group {
            order,
            table,
            inverses,
            labels,
            orders,
        }
    }

    /// Realises a closed subset as a group of its own. Elements keep their
    /// relative order, so the returned embedding is increasing.
    pub fn subgroup(&self, set: &ElementSet) -> Result<(Group, Vec<usize>)> {
        let elems = set.elements();
        if elems.first() != Some(&0) {
            return Err(GroupError::InvalidParameter(
                "subgroup must contain the identity".into(),
            ));
        }
        let mut position = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            position[e] = i;
        }
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                let p = position[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(GroupError::InvalidParameter(
                        "subset is not closed under the product".into(),
                    ));
                }
                table.push(p);
            }
        }
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let g = Group::from_table(k, table, Some(labels))?;
        Ok((g, elems))
    }

    /// Serialises in the `cayley 1` text format.
    pub fn to_cayley_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cayley 1");
        let _ = writeln!(out, "{}", self.order);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| self.mul(i, j).to_string())
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        for (k, l) in self.labels.iter().enumerate() {
            if *l != k.to_string() {
                let _ = writeln!(out, "label {k} {l}");
            }
        }
        out
    }

    pub fn from_cayley_text(text: &str) -> Result<Group> {
        let bad = |m: String| GroupError::InvalidCayley(m);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some("cayley 1") => {}
            other => return Err(bad(format!("bad header {other:?}"))),
        }
        let n: usize = lines
            .next()
            .ok_or_else(|| bad("missing order".into()))?
            .parse()
            .map_err(|_| bad("order is not an integer".into()))?;
        if n == 0 {
            return Err(bad("order must be positive".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for r in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| bad(format!("missing row {r}")))?;
            let row: std::result::Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| bad(format!("row {r} has a non-integer entry")))?;
            if row.len() != n {
                return Err(bad(format!("row {r} has {} entries", row.len())));
            }
            table.extend(row);
        }
        let mut labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        for line in lines {
            let mut parts = line.splitn(3, char::is_whitespace);
            match (parts.next(), parts.next(), parts.next()) {
                (Some("label"), Some(k), Some(name)) => {
                    let k: usize = k
                        .parse()
                        .map_err(|_| bad(format!("bad label line {line:?}")))?;
                    if k >= n {
                        return Err(bad(format!("label index {k} out of range")));
                    }
                    labels[k] = name.trim().to_string();
                }
                _ => return Err(bad(format!("unexpected line {line:?}"))),
            }
        }
        Group::from_table(n, table, Some(labels))
    }
}

fn join_labels(a: &str, b: &str) -> String {
    let strip = |s: &str| -> String {
        if s.starts_with('(') && s.ends_with(')') {
            s[1..s.len() - 1].to_string()
        } else {
            s.to_string()
        }
    };
    format!("({},{})", strip(a), strip(b))
}

fn lcm(a: usize, b: usize) -> usize {
    a / super::gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{build_group, parse_spec};

    fn grp(s: &str) -> Group {
        build_group(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn closure_in_c12() {
        let g = grp("C12");
        // g^4 and g^6 generate <g^2>
        let h = g.closure(&[4, 6]);
        assert_eq!(h.size(), 6);
        assert!(h.is_closed());
        assert_eq!(h.elements(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(g.closure(&[0]).elements(), vec![0]);
    }

    #[test]
    fn klein_pairs() {
        let g = grp("C2^2");
        let h = g.closure(&[1, 2]);
        assert_eq!(h.size(), 4);
        assert!(!g.is_generating_pair(1, 1));
        assert!(g.is_generating_pair(1, 2));
    }

    #[test]
    fn c6_generation() {
        let g = grp("C6");
        assert!(g.is_generating_pair(1, 5));
        assert!(!g.is_generating_pair(2, 4));
        let mut orders = g.element_orders().to_vec();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 3, 3, 6, 6]);
    }

    #[test]
    fn rejects_non_associative_table() {
        // a loop of order 5 that is not a group
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(
            Group::from_table(5, t, None),
            Err(GroupError::InvalidCayley(_))
        ));
    }

    #[test]
    fn rejects_misplaced_identity() {
        let t = vec![1, 0, 0, 1];
        assert!(Group::from_table(2, t, None).is_err());
    }

    #[test]
    fn cayley_text_round_trip() {
        let g = grp("Heis3");
        let back = Group::from_cayley_text(&g.to_cayley_text()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn cayley_text_errors() {
        assert!(Group::from_cayley_text("cayley 2\n1\n0\n").is_err());
        assert!(Group::from_cayley_text("cayley 1\n2\n0 1\n").is_err());
        assert!(Group::from_cayley_text("cayley 1\n1\n0\nlabel 3 x\n").is_err());
        let g = Group::from_cayley_text("cayley 1\n2\n0 1\n1 0\nlabel 1 t\n").unwrap();
        assert_eq!(g.label(1), "t");
    }

    #[test]
    fn subgroup_extraction() {
        let g = grp("C2^2 x C9");
        let s = g.closure(&[1]);
        let (h, emb) = g.subgroup(&s).unwrap();
        assert_eq!(h.order(), s.size());
        assert_eq!(emb[0], 0);
        for a in 0..h.order() {
            for b in 0..h.order() {
                assert_eq!(emb[h.mul(a, b)], g.mul(emb[a], emb[b]));
            }
        }
    }
}
