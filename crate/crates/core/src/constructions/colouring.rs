use super::{ConstructionError, Result};
use crate::gengraph::generating_graph;
use crate::graphcore::{verify_certificate, Certificate};
use crate::groupkit::build::cyclic;
use crate::groupkit::totient_profile;

/// A clique and a proper colouring of Γ(C_n) of the same size φ(n) + π(n).
///
/// The clique is every generator x_1, …, x_u together with y_i = g^{p_i}
/// for each prime p_i of n. With B_i = ⟨g^{p_i}⟩, the non-generators get
/// colour i − 1 for the least i with x ∈ B_i, and the generator x_k gets
/// its own colour r + k − 1. Vertices are element indices.
pub fn cyclic_clique_colouring(n: usize) -> Result<(Certificate, Certificate)> {
    if n < 2 {
        return Err(ConstructionError::Precondition(
            "n must be at least 2".into(),
        ));
    }
    let g = cyclic(n);
    let gen = g.cyclic_generator().expect("cyclic");
    let primes: Vec<usize> = totient_profile(n as u64)
        .factorization
        .iter()
        .map(|&(p, _)| p as usize)
        .collect();
    let r = primes.len();
    let generators: Vec<usize> = (0..n).filter(|&x| g.element_order(x) == n).collect();
    let ys: Vec<usize> = primes.iter().map(|&p| g.pow(gen, p)).collect();
    let blocks: Vec<_> = ys.iter().map(|&y| g.closure(&[y])).collect();

    let mut clique: Vec<usize> = generators.iter().chain(&ys).copied().collect();
    clique.sort_unstable();
    let classes: Vec<usize> = (0..n)
        .map(|x| match generators.binary_search(&x) {
            Ok(k) => r + k,
            Err(_) => blocks
                .iter()
                .position(|b| b.contains(x))
                .expect("non-generators lie in a block"),
        })
        .collect();

    let gamma = generating_graph(&g);
    let size = clique.len();
    let clique = Certificate::Clique { vertices: clique };
    let colouring = Certificate::Colouring { classes };
    if size != generators.len() + r || !verify_certificate(&gamma.graph, &clique) {
        return Err(ConstructionError::Invalid(format!("clique of Γ(C_{n})")));
    }
    if !verify_certificate(&gamma.graph, &colouring) {
        return Err(ConstructionError::Invalid(format!("colouring of Γ(C_{n})")));
    }
    Ok((clique, colouring))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(n: usize) -> (usize, usize) {
        let (Certificate::Clique { vertices }, Certificate::Colouring { classes }) =
            cyclic_clique_colouring(n).unwrap()
        else {
            unreachable!()
        };
        let colours = classes.iter().max().unwrap() + 1;
        (vertices.len(), colours)
    }

    #[test]
    fn small_orders() {
        assert_eq!(sizes(12), (6, 6));
        assert_eq!(sizes(2), (2, 2));
        assert_eq!(sizes(9), (7, 7));
    }

    #[test]
    fn trivial_refused() {
        assert!(cyclic_clique_colouring(1).is_err());
    }
}
