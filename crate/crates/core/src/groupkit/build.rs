use std::fs;

use super::numth::nth_odd_prime;
use super::spec::{Factor, GroupSpec};
use super::{Group, GroupError, Result};

pub const DEFAULT_MAX_ORDER: usize = 200;

pub fn build_group(spec: &GroupSpec) -> Result<Group> {
    build_group_with_guard(spec, DEFAULT_MAX_ORDER)
}

/// Builds the direct product of the factors of `spec`, refusing anything whose
/// order exceeds `max_order`.
pub fn build_group_with_guard(spec: &GroupSpec, max_order: usize) -> Result<Group> {
    let mut order: usize = 1;
    let mut file_texts = Vec::new();
    for f in &spec.factors {
        let o = match f {
            Factor::CayleyFile(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
                let n = cayley_header_order(&text)?;
                file_texts.push(text);
                Some(n)
            }
            _ => factor_order(f),
        };
        order = o
            .and_then(|o| order.checked_mul(o))
            .ok_or(GroupError::OrderGuard {
                order: usize::MAX,
                max: max_order,
            })?;
    }
    if order > max_order {
        return Err(GroupError::OrderGuard {
            order,
            max: max_order,
        });
    }
    let mut files = file_texts.into_iter();
    let mut acc: Option<Group> = None;
    for f in &spec.factors {
        let g = match f {
            Factor::Cyclic(n) => cyclic(*n),
            Factor::CyclicPower(n, k) => {
                let c = cyclic(*n);
                (1..*k).fold(c.clone(), |a, _| a.direct_product(&c))
            }
            Factor::Heisenberg(p) => heisenberg(*p),
            Factor::ExampleFamily(d) => example_family(*d),
            Factor::CayleyFile(_) => Group::from_cayley_text(&files.next().expect("file text"))?,
        };
        acc = Some(match acc {
            None => g,
            Some(a) => a.direct_product(&g),
        });
    }
    acc.ok_or_else(|| GroupError::InvalidParameter("empty spec".into()))
}

fn factor_order(f: &Factor) -> Option<usize> {
    match f {
        Factor::Cyclic(n) => Some(*n),
        Factor::CyclicPower(n, k) => n.checked_pow(u32::try_from(*k).ok()?),
        Factor::Heisenberg(p) => p.checked_pow(3),
        Factor::ExampleFamily(d) => example_family_order(*d),
        Factor::CayleyFile(_) => None,
    }
}

fn cayley_header_order(text: &str) -> Result<usize> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    if lines.next() != Some("cayley 1") {
        return Err(GroupError::InvalidCayley("bad header".into()));
    }
    lines
        .next()
        .and_then(|l| l.parse().ok())
        .ok_or_else(|| GroupError::InvalidCayley("missing order".into()))
}

pub(crate) fn cyclic(n: usize) -> Group {
    let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    Group::from_table(n, table, None).expect("cyclic table is a group")
}

/// Upper unitriangular 3×3 matrices over Z_p, as triples (a, b, c) with
/// (a₁,b₁,c₁)(a₂,b₂,c₂) = (a₁+a₂, b₁+b₂, c₁+c₂+a₁b₂).
fn heisenberg(p: usize) -> Group {
    let n = p * p * p;
    let split = |x: usize| (x / (p * p), x / p % p, x % p);
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, b1, c1) = split(x);
        for y in 0..n {
            let (a2, b2, c2) = split(y);
            let (a, b, c) = ((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
            table.push(a * p * p + b * p + c);
        }
    }
    let labels = (0..n)
        .map(|x| {
            let (a, b, c) = split(x);
            format!("[{a},{b},{c}]")
        })
        .collect();
    Group::from_table(n, table, Some(labels)).expect("Heisenberg table is a group")
}

pub fn example_family_order(d: usize) -> Option<usize> {
    (1..=d).try_fold(4usize, |acc, i| {
        let p = nth_odd_prime(i) as usize;
        acc.checked_mul(p.checked_pow(3)?)
    })
}

/// Coordinates of an element of (∏ C_{p_i}³) ⋊ C₂²: the 3d exponents
/// `n_{i,l}` (i-major) and the C₂² part `h ∈ {0,1,2,3}` with `h_j = j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct FamilyElement {
    pub coords: Vec<usize>,
    pub h: usize,
}

pub(crate) fn family_primes(d: usize) -> Vec<usize> {
    (1..=d).map(|i| nth_odd_prime(i) as usize).collect()
}

pub(crate) fn family_index(primes: &[usize], e: &FamilyElement) -> usize {
    let mut idx = 0;
    for (i, &p) in primes.iter().enumerate() {
        for l in 0..3 {
            idx = idx * p + e.coords[3 * i + l];
        }
    }
    idx * 4 + e.h
}

pub(crate) fn family_element(primes: &[usize], mut idx: usize) -> FamilyElement {
    let h = idx % 4;
    idx /= 4;
    let mut coords = vec![0; 3 * primes.len()];
    for (i, &p) in primes.iter().enumerate().rev() {
        for l in (0..3).rev() {
            coords[3 * i + l] = idx % p;
            idx /= p;
        }
    }
    FamilyElement { coords, h }
}

/// `h_j` inverts every coordinate except the j-th one of each block.
fn act(primes: &[usize], h: usize, coords: &[usize]) -> Vec<usize> {
    let mut out = coords.to_vec();
    if h == 0 {
        return out;
    }
    for (i, &p) in primes.iter().enumerate() {
        for l in 0..3 {
            if l + 1 != h {
                let c = &mut out[3 * i + l];
                *c = (p - *c) % p;
            }
        }
    }
    out
}

fn example_family(d: usize) -> Group {
    let primes = family_primes(d);
    let n = example_family_order(d).expect("order checked by guard");
    let elems: Vec<FamilyElement> = (0..n).map(|x| family_element(&primes, x)).collect();
    let mut table = Vec::with_capacity(n * n);
    for x in &elems {
        for y in &elems {
            let moved = act(&primes, x.h, &y.coords);
            let mut coords = x.coords.clone();
            for (i, &p) in primes.iter().enumerate() {
                for l in 0..3 {
                    let k = 3 * i + l;
                    coords[k] = (coords[k] + moved[k]) % p;
                }
            }
            table.push(family_index(
                &primes,
                &FamilyElement {
                    coords,
                    h: x.h ^ y.h,
                },
            ));
        }
    }
    let labels = elems
        .iter()
        .map(|e| {
            let c: Vec<String> = e.coords.iter().map(|c| c.to_string()).collect();
            format!("[{};h{}]", c.join(" "), e.h)
        })
        .collect();
    Group::from_table(n, table, Some(labels)).expect("semidirect product table is a group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::parse_spec;

    fn grp(s: &str) -> Group {
        build_group(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_orders() {
        let g = grp("C6");
        assert_eq!(g.order(), 6);
        assert!(g.is_cyclic());
        assert_eq!(grp("C1").order(), 1);
    }

    #[test]
    fn heisenberg_three() {
        let g = grp("Heis3");
        assert_eq!(g.order(), 27);
        // exponent 3: x^3 = 1 for every x, via the table
        for x in 0..27 {
            let x3 = g.mul(g.mul(x, x), x);
            assert_eq!(x3, 0);
        }
        // (1,0,0) and (0,1,0) do not commute
        let a = 9;
        let b = 3;
        assert_ne!(g.mul(a, b), g.mul(b, a));
        assert!(!g.is_abelian());
    }

    #[test]
    fn example_family_one() {
        let g = grp("Ex(1)");
        assert_eq!(g.order(), 108);
        assert!(!g.is_abelian());
        assert_eq!(example_family_order(2), Some(4 * 27 * 125));
    }

    #[test]
    fn family_index_round_trip() {
        let primes = family_primes(2);
        for idx in (0..13500).step_by(37) {
            assert_eq!(family_index(&primes, &family_element(&primes, idx)), idx);
        }
    }

    #[test]
    fn guard_refuses_large_orders() {
        let spec = parse_spec("C15 x C15").unwrap();
        assert_eq!(
            build_group(&spec),
            Err(GroupError::OrderGuard {
                order: 225,
                max: 200
            })
        );
        assert!(build_group_with_guard(&spec, 225).is_ok());
        assert!(build_group(&parse_spec("Ex(2)").unwrap()).is_err());
    }

    #[test]
    fn products_compose() {
        let g = grp("C2^2 x C9");
        assert_eq!(g.order(), 36);
        assert!(g.is_abelian());
        assert!(!g.is_cyclic());
        assert_eq!(g.label(0), "(0,0,0)");
    }

    #[test]
    fn cayley_file_factor() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c3.txt");
        fs::write(&path, grp("C3").to_cayley_text()).unwrap();
        let spec = parse_spec(&format!("file:{} x C2", path.display())).unwrap();
        let g = build_group(&spec).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_cyclic());
        let missing = parse_spec("file:/nonexistent/x.txt").unwrap();
        assert!(matches!(build_group(&missing), Err(GroupError::Io(_))));
    }
}
