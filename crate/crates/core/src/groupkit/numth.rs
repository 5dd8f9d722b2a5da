use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotientProfile {
    pub factorization: Vec<(u64, u32)>,
    pub phi: u64,
    pub pi_count: usize,
}

/// Trial-division factorisation together with φ(n) and the number of
/// distinct prime divisors.
pub fn totient_profile(n: u64) -> TotientProfile {
    assert!(n >= 1, "totient_profile needs n >= 1");
    let mut factorization = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factorization.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factorization.push((m, 1));
    }
    let phi = factorization
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1));
    TotientProfile {
        pi_count: factorization.len(),
        factorization,
        phi,
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && totient_profile(n).factorization == [(n, 1)]
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `nth_odd_prime(1) == 3`, `nth_odd_prime(2) == 5`, ...
pub fn nth_odd_prime(i: usize) -> u64 {
    assert!(i >= 1);
    (3..)
        .step_by(2)
        .filter(|&p| is_prime(p))
        .nth(i - 1)
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n)
            .filter(|&k| gcd(k as usize, n as usize) == 1)
            .count() as u64
    }

    #[test]
    fn small_values() {
        let t = totient_profile(12);
        assert_eq!((t.phi, t.pi_count), (4, 2));
        let t = totient_profile(1);
        assert_eq!((t.phi, t.pi_count), (1, 0));
        assert!(t.factorization.is_empty());
    }

    #[test]
    fn one_hundred_eight() {
        let t = totient_profile(108);
        assert_eq!(t.factorization, vec![(2, 2), (3, 3)]);
        assert_eq!(t.phi, brute_phi(108));
        assert_eq!(t.phi, 36);
        assert_eq!(t.pi_count, 2);
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..400 {
            assert_eq!(totient_profile(n).phi, brute_phi(n), "n={n}");
        }
    }

    #[test]
    fn odd_primes() {
        assert_eq!(nth_odd_prime(1), 3);
        assert_eq!(nth_odd_prime(2), 5);
        assert_eq!(nth_odd_prime(4), 11);
    }
}
