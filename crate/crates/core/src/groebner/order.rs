use std::cmp::Ordering;

use crate::ring::{GradedRing, Monomial};

/// Monomial orders supported by the Gröbner engine.
///
/// Every order is encoded by an integer key that is linear in the exponent
/// vector, so the key of a product is the sum of the keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Primary weighted degree, then reverse lexicographic.
    #[default]
    WeightedGrevlex,
    /// Pure lexicographic with `x0 > x1 > …`.
    Lex,
    /// Block order: the first `k` variables, compared by weighted grevlex,
    /// dominate; ties are broken by weighted grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    pub(crate) fn key(&self, weights: &[i64], exps: &[u32]) -> Box<[i64]> {
        let n = exps.len();
        match *self {
            MonomialOrder::Lex => exps.iter().map(|&e| e as i64).collect(),
            MonomialOrder::WeightedGrevlex => block_key(weights, exps, 0, n).collect(),
            MonomialOrder::Elimination(k) => {
                let k = k.min(n);
                block_key(weights, exps, 0, k)
                    .chain(block_key(weights, exps, k, n))
                    .collect()
            }
        }
    }

    pub fn cmp(&self, ring: &GradedRing, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(ring.weights(), a.exps())
            .cmp(&self.key(ring.weights(), b.exps()))
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::WeightedGrevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}

fn block_key<'a>(
    weights: &'a [i64],
    exps: &'a [u32],
    lo: usize,
    hi: usize,
) -> impl Iterator<Item = i64> + 'a {
    let deg: i64 = (lo..hi).map(|i| exps[i] as i64 * weights[i]).sum();
    std::iter::once(deg).chain((lo..hi).rev().map(move |i| -(exps[i] as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_key_agrees_with_ring_comparison() {
        let r = GradedRing::with_weights(&[1, 2, 2, 3]).unwrap();
        let ms = r.monomials_of_degree(6);
        for a in &ms {
            for b in &ms {
                assert_eq!(
                    MonomialOrder::WeightedGrevlex.cmp(&r, a, b),
                    r.cmp_grevlex(a, b)
                );
            }
        }
    }

    #[test]
    fn elimination_block_dominates() {
        let r = GradedRing::with_weights(&[1, 1, 1]).unwrap();
        let o = MonomialOrder::Elimination(1);
        let t = Monomial::new(vec![1, 0, 0]);
        let big = Monomial::new(vec![0, 7, 9]);
        assert_eq!(o.cmp(&r, &t, &big), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_weights() {
        let r = GradedRing::with_weights(&[1, 5]).unwrap();
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![0, 9]);
        assert_eq!(MonomialOrder::Lex.cmp(&r, &a, &b), Ordering::Greater);
        assert_eq!(
            MonomialOrder::WeightedGrevlex.cmp(&r, &a, &b),
            Ordering::Less
        );
    }
}
