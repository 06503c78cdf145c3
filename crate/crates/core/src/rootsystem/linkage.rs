//! Direct linkage through the adjoint module, and chains of direct links.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{RootSystem, Weight};
use crate::error::{Error, Result};

impl RootSystem {
    /// Dominant `ν` with `V(ν) ⊂ V(θ) ⊗ V(λ)`, `θ` the highest root.
    pub fn adjoint_neighbours(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        let theta = self.highest_root_weight();
        Ok(self.tensor_decompose_klimyk(&theta, lambda)?.into_keys().collect())
    }

    /// Whether `Hom(g ⊗ V(λ), V(μ)) ≠ 0`.
    pub fn directly_linked(&self, lambda: &Weight, mu: &Weight) -> Result<bool> {
        self.require_dominant(lambda)?;
        self.require_dominant(mu)?;
        Ok(self.adjoint_neighbours(lambda)?.contains(mu))
    }

    /// Breadth-first search for a chain `μ = μ_0, …, μ_m = λ` of direct links,
    /// with `m ≤ max_steps` and every `μ_k` of height at most
    /// `max(ht λ, ht μ) + ht(θ)·max_steps`.
    pub fn link_chain(&self, lambda: &Weight, mu: &Weight, max_steps: usize) -> Result<Vec<Weight>> {
        self.require_dominant(lambda)?;
        self.require_dominant(mu)?;
        if self.pq_class(lambda) != self.pq_class(mu) {
            return Err(Error::NotSameClass(lambda.to_string(), mu.to_string()));
        }
        if lambda == mu {
            return Ok(vec![mu.clone()]);
        }
        let theta_h = self.scaled_height(&self.highest_root_weight());
        let bound = self.scaled_height(lambda).max(self.scaled_height(mu))
            + theta_h * max_steps as i64;

        let mut parent: HashMap<Weight, Weight> = HashMap::new();
        let mut queue = VecDeque::from([(mu.clone(), 0usize)]);
        parent.insert(mu.clone(), mu.clone());
        while let Some((nu, steps)) = queue.pop_front() {
            if steps == max_steps {
                continue;
            }
            for next in self.adjoint_neighbours(&nu)? {
                if parent.contains_key(&next) || self.scaled_height(&next) > bound {
                    continue;
                }
                parent.insert(next.clone(), nu.clone());
                if &next == lambda {
                    let mut chain = vec![next];
                    while chain.last() != Some(mu) {
                        let prev = parent[chain.last().expect("nonempty")].clone();
                        chain.push(prev);
                    }
                    chain.reverse();
                    return Ok(chain);
                }
                queue.push_back((next, steps + 1));
            }
        }
        Err(Error::SearchExhausted(max_steps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn direct_links_a1() {
        let a1 = rs("A1");
        assert!(a1.directly_linked(&w(&[2]), &w(&[0])).unwrap());
        assert!(!a1.directly_linked(&w(&[1]), &w(&[0])).unwrap());
        assert!(a1.directly_linked(&w(&[2]), &w(&[2])).unwrap());
        assert!(!a1.directly_linked(&w(&[0]), &w(&[0])).unwrap());
        assert!(matches!(a1.directly_linked(&w(&[-2]), &w(&[0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn direct_links_match_peeling() {
        for name in ["A2", "B2", "G2"] {
            let r = rs(name);
            let theta = r.highest_root_weight();
            for a in 0..3 {
                for b in 0..3 {
                    let lam = w(&[a, b]);
                    let peeled: BTreeSet<Weight> =
                        r.tensor_decompose(&theta, &lam).unwrap().into_keys().collect();
                    assert_eq!(peeled, r.adjoint_neighbours(&lam).unwrap(), "{name} {lam}");
                }
            }
        }
    }

    #[test]
    fn linkage_is_symmetric() {
        let r = rs("B2");
        for a in 0..3 {
            for b in 0..3 {
                let lam = w(&[a, b]);
                for nu in r.adjoint_neighbours(&lam).unwrap() {
                    assert!(r.directly_linked(&nu, &lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.link_chain(&w(&[4]), &w(&[0]), 5).unwrap(), vec![w(&[0]), w(&[2]), w(&[4])]);
        assert_eq!(a1.link_chain(&w(&[3]), &w(&[3]), 0).unwrap(), vec![w(&[3])]);
        assert!(matches!(a1.link_chain(&w(&[1]), &w(&[0]), 5), Err(Error::NotSameClass(_, _))));
        assert!(matches!(a1.link_chain(&w(&[8]), &w(&[0]), 2), Err(Error::SearchExhausted(2))));

        let a2 = rs("A2");
        assert_eq!(a2.link_chain(&w(&[1, 1]), &w(&[0, 0]), 3).unwrap(), vec![w(&[0, 0]), w(&[1, 1])]);
        let chain = a2.link_chain(&w(&[3, 0]), &w(&[0, 0]), 4).unwrap();
        assert_eq!(chain.first(), Some(&w(&[0, 0])));
        assert_eq!(chain.last(), Some(&w(&[3, 0])));
        for pair in chain.windows(2) {
            assert!(a2.directly_linked(&pair[0], &pair[1]).unwrap());
        }
    }
}
