//! Closed-form bounds for products of complete and complete multipartite
//! graphs.

use serde::Serialize;

use super::GraphError;

/// Part sizes of a complete multipartite graph, or the factor sizes of a
/// product of complete graphs, kept in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteParams {
    parts: Vec<usize>,
}

impl MultipartiteParams {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, GraphError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(GraphError::Precondition(
                "parts must be nonempty and positive".into(),
            ));
        }
        parts.sort_unstable();
        Ok(MultipartiteParams { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Least t ≥ 0 with a_i > s − t for every (1-based) i > t.
    pub fn t(&self) -> usize {
        let s = self.parts.len();
        (0..=s)
            .find(|&t| self.parts[t..].iter().all(|&a| a > s - t))
            .unwrap()
    }
}

/// κ(Γ × K_{t_1,…,t_u}) = min(κ(Γ)·Σ t_i, δ(Γ)·Σ_{i<u} t_i) for u ≥ 3 and
/// parts satisfying the two partial-sum conditions.
pub fn kappa_product_formula(
    kappa: usize,
    min_degree: usize,
    parts: &MultipartiteParams,
) -> Result<usize, GraphError> {
    let t = parts.parts();
    let u = t.len();
    if u < 3 {
        return Err(GraphError::Precondition(format!(
            "need at least 3 parts, got {u}"
        )));
    }
    let head: usize = t[..u - 2].iter().sum();
    if head < t[u - 2] || head + t[u - 2] < t[u - 1] {
        return Err(GraphError::Precondition(format!(
            "parts {t:?} violate the partial-sum conditions"
        )));
    }
    let total: usize = t.iter().sum();
    Ok((kappa * total).min(min_degree * (total - t[u - 1])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TdBounds {
    pub lower: usize,
    pub upper: usize,
    pub t: usize,
}

/// Bounds on γ_t(K_{a_1} × ⋯ × K_{a_s}): the nested ceiling
/// ⌈a_1/(a_1−1)⌈…⌈a_s/(a_s−1)⌉…⌉⌉ below and 2^t(s − t + 1) above.
pub fn td_bounds(parts: &MultipartiteParams) -> Result<TdBounds, GraphError> {
    let a = parts.parts();
    if a[0] < 2 {
        return Err(GraphError::Precondition(
            "every factor needs at least 2 vertices".into(),
        ));
    }
    let s = a.len();
    let lower = a
        .iter()
        .rev()
        .fold(1usize, |x, &ai| (ai * x).div_ceil(ai - 1));
    let t = parts.t();
    Ok(TdBounds {
        lower,
        upper: (1usize << t) * (s - t + 1),
        t,
    })
}
