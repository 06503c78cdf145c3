//! Irreducible classes over `K`, their dimensions under base change, and
//! tensor products decomposed by Galois descent.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::FieldElem;
use crate::lweight::LWeight;
use crate::rootsystem::{LieType, Weight};

/// A conjugacy class `[ω]` of dominant ℓ-weights together with its
/// dimension data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrClass {
    pub key: LWeight,
    pub orbit: Vec<LWeight>,
    pub degree: usize,
    pub weight: Weight,
    /// `dim_F V_F(ω)`, the product of the Weyl dimensions at each point.
    pub dim_f: u64,
    /// `dim_K V_K(ω) = deg(ω)·dim_F V_F(ω)`.
    pub dim_k: u64,
}

/// Parts sorted by class key, multiplicities positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<(IrrClass, u64)>,
}

impl Decomposition {
    pub fn total_dim_k(&self) -> u64 {
        self.parts.iter().map(|(c, m)| c.dim_k * m).sum()
    }

    pub fn multiplicity(&self, key: &LWeight) -> u64 {
        self.parts
            .iter()
            .find(|(c, _)| &c.key == key)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }
}

pub fn dim_f(omega: &LWeight) -> Result<u64> {
    omega.require_dominant()?;
    let rs = omega.root_system();
    omega
        .point_weights()
        .values()
        .try_fold(1u64, |acc, lam| Ok(acc * rs.weyl_dim(lam)?))
}

pub fn classify(omega: &LWeight) -> Result<IrrClass> {
    omega.require_dominant()?;
    let (orbit, degree) = omega.conj_class()?;
    let dim_f = dim_f(omega)?;
    for other in &orbit {
        if self::dim_f(other)? != dim_f {
            return Err(Error::CheckFailed(format!("conjugates of {omega} differ in dimension")));
        }
    }
    Ok(IrrClass {
        key: orbit[0].clone(),
        weight: omega.wt()?,
        degree,
        dim_f,
        dim_k: degree as u64 * dim_f,
        orbit,
    })
}

/// Dimensions `(dim_F W_F(ω), dim_K W_K(ω))` of the local Weyl module in
/// type A1, where `dim_F = 2^{wt(ω)}`.
pub fn dim_weyl(omega: &LWeight) -> Result<(u64, u64)> {
    let lie = omega.root_system().lie_type();
    if lie != LieType::A(1) {
        return Err(Error::UnsupportedType(lie.to_string()));
    }
    let wt = omega.wt()?;
    let exp = u32::try_from(wt.coords()[0])
        .map_err(|_| Error::CheckFailed(format!("weight {wt} too large")))?;
    let f = 2u64
        .checked_pow(exp)
        .ok_or_else(|| Error::CheckFailed(format!("2^{exp} overflows")))?;
    Ok((f, omega.degree() as u64 * f))
}

/// `V_F(ϖ) ⊗ V_F(π)` as a multiset of dominant ℓ-weights.
pub fn tensor_decompose_f(a: &LWeight, b: &LWeight) -> Result<BTreeMap<LWeight, u64>> {
    a.check_setting(b)?;
    a.require_dominant()?;
    b.require_dominant()?;
    let rs = a.root_system();
    let wa = a.point_weights();
    let wb = b.point_weights();
    let zero = Weight::zero(rs.rank());
    let mut points: Vec<&FieldElem> = wa.keys().chain(wb.keys()).collect();
    points.sort();
    points.dedup();

    // running list of (per-point weights, multiplicity)
    let mut partial: Vec<(BTreeMap<FieldElem, Weight>, u64)> = vec![(BTreeMap::new(), 1)];
    for p in points {
        let lam = wa.get(p).unwrap_or(&zero);
        let mu = wb.get(p).unwrap_or(&zero);
        let local = rs.tensor_decompose(lam, mu)?;
        let mut next = Vec::with_capacity(partial.len() * local.len());
        for (parts, m) in &partial {
            for (nu, k) in &local {
                let mut parts = parts.clone();
                if !nu.is_zero() {
                    parts.insert(p.clone(), nu.clone());
                }
                next.push((parts, m * k));
            }
        }
        partial = next;
    }
    let mut out: BTreeMap<LWeight, u64> = BTreeMap::new();
    for (parts, m) in partial {
        *out.entry(a.from_point_weights(&parts)).or_insert(0) += m;
    }
    Ok(out)
}

/// Decomposes `V_K(ϖ) ⊗ V_K(π)`.
///
/// All pairs of conjugates are multiplied over `F`, the constituents are
/// grouped into `H`-orbits, and a class `[σ]` gets the multiplicity of any of
/// its members.
pub fn tensor_decompose_k(a: &LWeight, b: &LWeight) -> Result<Decomposition> {
    a.check_setting(b)?;
    a.require_dominant()?;
    b.require_dominant()?;
    let mut f_level: BTreeMap<LWeight, u64> = BTreeMap::new();
    for x in a.orbit() {
        for y in b.orbit() {
            for (sigma, m) in tensor_decompose_f(&x, &y)? {
                *f_level.entry(sigma).or_insert(0) += m;
            }
        }
    }
    let mut classes: BTreeMap<LWeight, (IrrClass, u64)> = BTreeMap::new();
    for (sigma, m) in &f_level {
        let key = sigma.class_key()?;
        if classes.contains_key(&key) {
            continue;
        }
        let class = classify(sigma)?;
        for member in &class.orbit {
            if f_level.get(member) != Some(m) {
                return Err(Error::DescentInconsistency(format!(
                    "{sigma} has multiplicity {m} but its conjugate {member} has {}",
                    f_level.get(member).copied().unwrap_or(0)
                )));
            }
        }
        classes.insert(key, (class, *m));
    }
    let parts: Vec<(IrrClass, u64)> = classes.into_values().collect();
    let out = Decomposition { parts };
    let expected = classify(a)?.dim_k * classify(b)?.dim_k;
    if out.total_dim_k() != expected {
        return Err(Error::CheckFailed(format!(
            "decomposition has dimension {} instead of {expected}",
            out.total_dim_k()
        )));
    }
    Ok(out)
}

/// `|H| / |Stab(ϖ) ∩ Stab(π)|`, the degree of `K(ϖ, π)` over `K`.
pub fn compositum_degree(a: &LWeight, b: &LWeight) -> Result<usize> {
    a.check_setting(b)?;
    let common = a.stabilizer().intersect(&b.stabilizer());
    Ok(a.context().base_group().order() / common.order())
}

/// `deg(ϖπ) ≤ [K(ϖ,π):K] ≤ deg(ϖ)·deg(π)`.
pub fn chain_check(a: &LWeight, b: &LWeight) -> Result<bool> {
    let c = compositum_degree(a, b)?;
    let prod = a.mul(b)?;
    Ok(prod.degree() <= c && c <= a.degree() * b.degree())
}

/// Whether `V_K(ϖ) ⊗ V_K(π)` is irreducible: `ϖ, π` relatively prime and
/// `deg(ϖπ) = deg(ϖ)·deg(π)`.
pub fn tp_irreducible_criterion(a: &LWeight, b: &LWeight) -> Result<bool> {
    if !a.relatively_prime(b)? {
        return Ok(false);
    }
    Ok(a.mul(b)?.degree() == a.degree() * b.degree())
}

/// The same predicate for `W_K(ϖ) ⊗ W_K(π) ≅ W_K(ϖπ)`.
pub fn wtp_criterion(a: &LWeight, b: &LWeight) -> Result<bool> {
    tp_irreducible_criterion(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::galois::presets;
    use crate::lweight::tests::Setting;
    use proptest::prelude::*;

    #[test]
    fn classify_examples() {
        let s = Setting::gaussian("A1");
        let c = classify(&s.lw(&[(1, s.gi(0, 1), 2)])).unwrap();
        assert_eq!((c.degree, c.dim_f, c.dim_k), (2, 3, 6));
        let c = classify(&s.lw(&[(1, s.gi(0, 1), 2), (1, s.gi(0, -1), 2)])).unwrap();
        assert_eq!((c.degree, c.dim_f, c.dim_k), (1, 9, 9));
        let c = classify(&s.one()).unwrap();
        assert_eq!((c.degree, c.dim_f, c.dim_k), (1, 1, 1));
        assert!(matches!(classify(&s.lw(&[(1, s.gi(0, 1), -1)])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn weyl_dims() {
        let s = Setting::gaussian("A1");
        assert_eq!(dim_weyl(&s.lw(&[(1, s.gi(0, 1), 2)])).unwrap(), (4, 8));
        assert_eq!(
            dim_weyl(&s.lw(&[(1, s.gi(0, 1), 2), (1, s.gi(0, -1), 2)])).unwrap(),
            (16, 16)
        );
        assert_eq!(dim_weyl(&s.one()).unwrap(), (1, 1));
        let t = Setting::gaussian("A2");
        assert!(matches!(dim_weyl(&t.one()), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn distinct_points() {
        let s = Setting::gaussian("A1");
        let p = s.lw(&[(1, s.gi(0, 1), 1)]);
        let q = s.lw(&[(1, s.gi(0, 2), 1)]);
        let d = tensor_decompose_k(&p, &q).unwrap();
        assert_eq!(d.parts.len(), 2);
        for (c, m) in &d.parts {
            assert_eq!((*m, c.degree, c.dim_k), (1, 2, 8));
        }
        let pq = p.mul(&q).unwrap();
        let pbar_q = s.lw(&[(1, s.gi(0, -1), 1), (1, s.gi(0, 2), 1)]);
        assert_eq!(d.multiplicity(&pq.class_key().unwrap()), 1);
        assert_eq!(d.multiplicity(&pbar_q.class_key().unwrap()), 1);
        assert_eq!(d.total_dim_k(), 16);
        assert!(!tp_irreducible_criterion(&p, &q).unwrap());
    }

    #[test]
    fn conjugate_points() {
        let s = Setting::gaussian("A1");
        let p = s.lw(&[(1, s.gi(0, 1), 1)]);
        let pbar = s.lw(&[(1, s.gi(0, -1), 1)]);
        let d = tensor_decompose_k(&p, &pbar).unwrap();
        let real = p.mul(&pbar).unwrap();
        let sq = p.mul(&p).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert_eq!(d.multiplicity(&real.class_key().unwrap()), 2);
        assert_eq!(d.multiplicity(&sq.class_key().unwrap()), 1);
        assert_eq!(d.multiplicity(&s.one()), 2);
        assert_eq!(d.total_dim_k(), 16);
    }

    #[test]
    fn identity_factor() {
        let s = Setting::gaussian("A2");
        let w = s.lw(&[(1, s.gi(1, 1), 1), (2, s.gi(0, 3), 2)]);
        let d = tensor_decompose_k(&w, &s.one()).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].0, classify(&w).unwrap());
        assert_eq!(d.parts[0].1, 1);
    }

    #[test]
    fn biquadratic_criterion() {
        let ctx = presets::cyclotomic8(vec![0, 1, 2, 3]).unwrap();
        let s = Setting::new(ctx, "A1");
        let f = s.ctx.field();
        let i = f.elem(vec![rat(0), rat(0), rat(1), rat(0)]).unwrap();
        let sqrt2 = f.elem(vec![rat(0), rat(1), rat(0), rat(-1)]).unwrap();
        let p = s.lw(&[(1, i, 1)]);
        let q = s.lw(&[(1, sqrt2, 1)]);
        assert_eq!((p.degree(), q.degree()), (2, 2));
        assert_eq!(compositum_degree(&p, &q).unwrap(), 4);
        assert!(tp_irreducible_criterion(&p, &q).unwrap());
        let d = tensor_decompose_k(&p, &q).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].1, 1);
        assert_eq!(d.parts[0].0.key, p.mul(&q).unwrap().class_key().unwrap());
    }

    #[test]
    fn compositum_examples() {
        let s = Setting::gaussian("A1");
        let p = s.lw(&[(1, s.gi(0, 1), 1)]);
        let pbar = s.lw(&[(1, s.gi(0, -1), 1)]);
        assert_eq!(compositum_degree(&p, &p).unwrap(), 2);
        assert_eq!(compositum_degree(&p, &pbar).unwrap(), 2);
        assert_eq!(p.degree() * pbar.degree(), 4);
        let r = s.lw(&[(1, s.gi(2, 0), 1)]);
        let r2 = s.lw(&[(1, s.gi(-3, 0), 1)]);
        assert_eq!(compositum_degree(&r, &r2).unwrap(), 1);
        assert!(tp_irreducible_criterion(&r, &p).unwrap());
        assert!(wtp_criterion(&r, &p).unwrap());
    }

    fn arb_c5() -> impl Strategy<Value = Vec<(usize, [i64; 4], i64)>> {
        prop::collection::vec((1usize..=2, [-1i64..=1, -1i64..=1, -1i64..=1, -1i64..=1], 1i64..=2), 0..3)
    }

    fn build_c5(s: &Setting, raw: &[(usize, [i64; 4], i64)]) -> LWeight {
        let entries: Vec<_> = raw
            .iter()
            .filter(|(_, c, _)| c.iter().any(|&x| x != 0))
            .map(|(i, c, e)| (*i, s.ctx.field().elem(c.iter().map(|&x| rat(x)).collect()).unwrap(), *e))
            .collect();
        s.lw(&entries)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn cyclotomic_descent(x in arb_c5(), y in arb_c5()) {
            let ctx = presets::cyclotomic5(vec![0, 3]).unwrap();
            let s = Setting::new(ctx, "A2");
            let (a, b) = (build_c5(&s, &x), build_c5(&s, &y));
            let ab = tensor_decompose_k(&a, &b).unwrap();
            prop_assert_eq!(ab.total_dim_k(), classify(&a).unwrap().dim_k * classify(&b).unwrap().dim_k);
            prop_assert_eq!(&ab, &tensor_decompose_k(&b, &a).unwrap());
            prop_assert!(chain_check(&a, &b).unwrap());
            if tp_irreducible_criterion(&a, &b).unwrap() {
                prop_assert_eq!(ab.parts.len(), 1);
                prop_assert_eq!(&ab.parts[0].0, &classify(&a.mul(&b).unwrap()).unwrap());
                prop_assert_eq!(ab.parts[0].1, 1);
            }
            let c = classify(&a).unwrap();
            prop_assert_eq!(classify(&a.dual().unwrap()).unwrap().dim_k, c.dim_k);
            let orbit_sum: u64 = c.orbit.iter().map(|o| dim_f(o).unwrap()).sum();
            prop_assert_eq!(orbit_sum, c.dim_k);
        }

        #[test]
        fn trivial_base_group(x in arb_c5(), y in arb_c5()) {
            let ctx = presets::cyclotomic5(vec![0]).unwrap();
            let s = Setting::new(ctx, "A2");
            let (a, b) = (build_c5(&s, &x), build_c5(&s, &y));
            prop_assert_eq!(a.degree(), 1);
            let ab = tensor_decompose_k(&a, &b).unwrap();
            let f = tensor_decompose_f(&a, &b).unwrap();
            prop_assert_eq!(ab.parts.len(), f.len());
            for (c, m) in &ab.parts {
                prop_assert_eq!(f[&c.key], *m);
            }
        }
    }
}
