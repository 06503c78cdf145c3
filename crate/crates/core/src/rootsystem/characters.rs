//! Characters of finite-dimensional simple modules: Weyl dimension formula,
//! Freudenthal multiplicities, tensor product decomposition.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::{RootSystem, Weight};
use crate::error::{Error, Result};

/// Weight multiplicities of a module, keyed by weight.
pub type Multiplicities = BTreeMap<Weight, u64>;

impl RootSystem {
    /// Weyl dimension formula `∏_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        self.require_dominant(lambda)?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for root in self.positive_roots() {
            let cc = self.coroot_coeffs(root)?;
            let top: i64 = cc.iter().zip(&lambda.0).map(|(m, l)| m * (l + 1)).sum();
            let bottom: i64 = cc.iter().sum();
            num *= top;
            den *= bottom;
        }
        let (q, r) = (&num / &den, &num % &den);
        if r != BigInt::from(0) {
            return Err(Error::CheckFailed(format!("Weyl dimension of {lambda} is not integral")));
        }
        q.to_u64()
            .ok_or_else(|| Error::CheckFailed(format!("dimension of {lambda} overflows u64")))
    }

    /// All weight multiplicities of `V(λ)` by Freudenthal's recursion.
    pub fn weight_mults(&self, lambda: &Weight) -> Result<Arc<Multiplicities>> {
        self.require_dominant(lambda)?;
        if let Some(hit) = self.char_cache.lock().expect("cache poisoned").get(lambda) {
            return Ok(Arc::clone(hit));
        }
        let computed = Arc::new(self.freudenthal(lambda)?);
        self.char_cache
            .lock()
            .expect("cache poisoned")
            .insert(lambda.clone(), Arc::clone(&computed));
        Ok(computed)
    }

    fn freudenthal(&self, lambda: &Weight) -> Result<Multiplicities> {
        let n = self.rank();
        let rho = self.rho();
        let lr = lambda.add(&rho);
        let top_norm = self.scaled_inner(&lr, &lr);
        let simple: Vec<Weight> = (0..n).map(|i| self.simple_root(i)).collect();
        let roots: Vec<(Weight, &Vec<i64>, i64)> = self
            .positive_roots()
            .iter()
            .map(|r| (self.root_to_weight(r), r, r.iter().sum::<i64>()))
            .collect();

        // multiplicity and depth (number of simple roots subtracted from λ)
        let mut mults: HashMap<Weight, (i64, i64)> = HashMap::new();
        mults.insert(lambda.clone(), (1, 0));
        let mut level = vec![lambda.clone()];
        let mut depth = 0i64;
        while !level.is_empty() {
            depth += 1;
            let candidates: HashSet<Weight> = level
                .iter()
                .flat_map(|w| simple.iter().map(move |a| w.sub(a)))
                .collect();
            let mut next = Vec::new();
            for mu in candidates {
                let mr = mu.add(&rho);
                let denom = top_norm - self.scaled_inner(&mr, &mr);
                if denom == 0 {
                    continue;
                }
                let mut num = 0i64;
                for (aw, ar, ht) in &roots {
                    let mut k = 1;
                    let mut shifted = mu.add(aw);
                    while k * ht <= depth {
                        if let Some(&(m, _)) = mults.get(&shifted) {
                            num += m * self.scaled_root_pairing(&shifted, ar);
                        }
                        shifted = shifted.add(aw);
                        k += 1;
                    }
                }
                let num = 2 * num;
                if num % denom != 0 {
                    return Err(Error::CheckFailed(format!(
                        "Freudenthal recursion produced a fraction at {mu} in V{lambda}"
                    )));
                }
                let m = num / denom;
                if m < 0 {
                    return Err(Error::CheckFailed(format!("negative multiplicity at {mu}")));
                }
                if m > 0 {
                    next.push((mu, m));
                }
            }
            level = next.iter().map(|(w, _)| w.clone()).collect();
            for (w, m) in next {
                mults.insert(w, (m, depth));
            }
        }
        Ok(mults.into_iter().map(|(w, (m, _))| (w, m as u64)).collect())
    }

    /// Dominant part of `ch V(λ) · ch V(μ)`.
    fn dominant_product(&self, a: &Multiplicities, b: &Multiplicities) -> BTreeMap<Weight, i64> {
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        for (wa, ma) in a {
            for (wb, mb) in b {
                let s = wa.add(wb);
                if s.is_dominant() {
                    *out.entry(s).or_insert(0) += (ma * mb) as i64;
                }
            }
        }
        out
    }

    /// Decomposes `V(λ) ⊗ V(μ)` by peeling highest weights off the product
    /// character.
    ///
    /// The next weight peeled is the dominant weight of greatest height, ties
    /// broken lexicographically; no remaining weight can lie above it.
    pub fn tensor_decompose(&self, lambda: &Weight, mu: &Weight) -> Result<Multiplicities> {
        self.require_dominant(lambda)?;
        self.require_dominant(mu)?;
        let ca = self.weight_mults(lambda)?;
        let cb = self.weight_mults(mu)?;
        let mut rest = self.dominant_product(&ca, &cb);
        let mut out = Multiplicities::new();
        while let Some(top) = rest
            .iter()
            .filter(|(_, &m)| m != 0)
            .map(|(w, _)| w)
            .max_by_key(|w| (self.scaled_height(w), (*w).clone()))
            .cloned()
        {
            let c = rest[&top];
            if c < 0 {
                return Err(Error::CheckFailed(format!("negative remainder at {top}")));
            }
            out.insert(top.clone(), c as u64);
            for (w, m) in self.weight_mults(&top)?.iter() {
                if w.is_dominant() {
                    *rest.entry(w.clone()).or_insert(0) -= c * (*m as i64);
                }
            }
            rest.retain(|_, m| *m != 0);
        }
        Ok(out)
    }

    /// Decomposes `V(small) ⊗ V(big)` with the Brauer–Klimyk rule, summing
    /// over the weights of the first factor only.
    pub fn tensor_decompose_klimyk(&self, small: &Weight, big: &Weight) -> Result<Multiplicities> {
        self.require_dominant(small)?;
        self.require_dominant(big)?;
        let rho = self.rho();
        let shift = big.add(&rho);
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, m) in self.weight_mults(small)?.iter() {
            let (dom, odd) = self.to_dominant(&w.add(&shift));
            if dom.0.contains(&0) {
                continue;
            }
            let sign = if odd { -1 } else { 1 };
            *acc.entry(dom.sub(&rho)).or_insert(0) += sign * (*m as i64);
        }
        let mut out = Multiplicities::new();
        for (w, m) in acc {
            match m.cmp(&0) {
                std::cmp::Ordering::Less => {
                    return Err(Error::CheckFailed(format!("negative Klimyk coefficient at {w}")))
                }
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => {
                    out.insert(w, m as u64);
                }
            }
        }
        Ok(out)
    }
}
