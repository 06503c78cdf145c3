//! ℓ-weights in factored Drinfeld form.
//!
//! An ℓ-weight is a finitely supported map `(node i, point a) ↦ e` standing
//! for the tuple `ω_i(u) = ∏_a (1 − a·u)^{e(i,a)}`. It is dominant when every
//! exponent is positive. The subgroup `H` of the context acts pointwise on the
//! spectral points; orbits are the conjugacy classes over `K = L^H`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{FieldElem, FieldOps};
use crate::galois::{GaloisContext, Subgroup};
use crate::rootsystem::{RootSystem, Weight};

#[derive(Clone)]
pub struct LWeight {
    ctx: Arc<GaloisContext>,
    rs: Arc<RootSystem>,
    /// Nodes are 0-based here.
    factors: BTreeMap<(usize, FieldElem), i64>,
}

impl PartialEq for LWeight {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for LWeight {}

impl PartialOrd for LWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors.cmp(&other.factors)
    }
}

impl Hash for LWeight {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
    }
}

impl fmt::Debug for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LWeight({self})")
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, ((node, a), e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "(1-[{a}]u)_{}", node + 1)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl LWeight {
    /// Builds an ℓ-weight from `(node, point, exponent)` triples with 0-based
    /// nodes; repeated pairs are merged and zero exponents dropped.
    pub fn new(
        ctx: Arc<GaloisContext>,
        rs: Arc<RootSystem>,
        entries: impl IntoIterator<Item = (usize, FieldElem, i64)>,
    ) -> Result<Self> {
        let n = ctx.field().degree();
        let rank = rs.rank();
        let mut factors = BTreeMap::new();
        for (node, a, e) in entries {
            if node >= rank {
                return Err(Error::InvalidLWeight(format!(
                    "node {} outside 1..={rank}",
                    node + 1
                )));
            }
            if a.coords().len() != n {
                return Err(Error::InvalidLWeight(format!("point {a} is not in a degree-{n} field")));
            }
            if a.is_zero() {
                return Err(Error::InvalidLWeight("spectral point 0".into()));
            }
            *factors.entry((node, a)).or_insert(0) += e;
        }
        factors.retain(|_, e| *e != 0);
        Ok(LWeight { ctx, rs, factors })
    }

    pub fn identity(ctx: Arc<GaloisContext>, rs: Arc<RootSystem>) -> Self {
        LWeight { ctx, rs, factors: BTreeMap::new() }
    }

    /// `ω_{λ,a}`: the tuple `(1 − a·u)^{λ(h_i)}`.
    pub fn at_point(ctx: Arc<GaloisContext>, rs: Arc<RootSystem>, lambda: &Weight, a: &FieldElem) -> Result<Self> {
        if lambda.coords().len() != rs.rank() {
            return Err(Error::DimensionMismatch(format!("weight {lambda} for rank {}", rs.rank())));
        }
        let entries: Vec<_> = lambda
            .coords()
            .iter()
            .enumerate()
            .map(|(i, &e)| (i, a.clone(), e))
            .collect();
        Self::new(ctx, rs, entries)
    }

    fn with_factors(&self, factors: BTreeMap<(usize, FieldElem), i64>) -> Self {
        LWeight { ctx: Arc::clone(&self.ctx), rs: Arc::clone(&self.rs), factors }
    }

    pub fn context(&self) -> &Arc<GaloisContext> {
        &self.ctx
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Factor map with 0-based nodes.
    pub fn factors(&self) -> &BTreeMap<(usize, FieldElem), i64> {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.factors.values().all(|&e| e > 0)
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    pub fn same_setting(&self, other: &LWeight) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx)
            && (Arc::ptr_eq(&self.rs, &other.rs) || *self.rs == *other.rs)
    }

    pub fn check_setting(&self, other: &LWeight) -> Result<()> {
        if self.same_setting(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn mul(&self, other: &LWeight) -> Result<LWeight> {
        self.check_setting(other)?;
        let mut factors = self.factors.clone();
        for (k, e) in &other.factors {
            *factors.entry(k.clone()).or_insert(0) += e;
        }
        factors.retain(|_, e| *e != 0);
        Ok(self.with_factors(factors))
    }

    pub fn inv(&self) -> LWeight {
        self.with_factors(self.factors.iter().map(|(k, e)| (k.clone(), -e)).collect())
    }

    pub fn pow(&self, k: i64) -> LWeight {
        if k == 0 {
            return self.with_factors(BTreeMap::new());
        }
        self.with_factors(self.factors.iter().map(|(key, e)| (key.clone(), e * k)).collect())
    }

    /// `g·ω`, moving every spectral point by the automorphism `g`.
    pub fn act(&self, g: usize) -> LWeight {
        self.with_factors(
            self.factors
                .iter()
                .map(|((i, a), e)| ((*i, self.ctx.apply_aut(g, a)), *e))
                .collect(),
        )
    }

    /// Elements of `H` fixing `ω`.
    pub fn stabilizer(&self) -> Subgroup {
        let h = self.ctx.base_group();
        let fixing: Vec<usize> = h.elements().iter().copied().filter(|&g| self.act(g) == *self).collect();
        self.ctx.subgroup(fixing).expect("stabilizers are subgroups")
    }

    /// Sorted `H`-orbit of `ω`.
    pub fn orbit(&self) -> Vec<LWeight> {
        let set: BTreeSet<LWeight> = self
            .ctx
            .base_group()
            .elements()
            .iter()
            .map(|&g| self.act(g))
            .collect();
        set.into_iter().collect()
    }

    /// The conjugacy class and its size, the degree of `ω`.
    pub fn conj_class(&self) -> Result<(Vec<LWeight>, usize)> {
        let orbit = self.orbit();
        let deg = orbit.len();
        let by_stabilizer = self.ctx.base_group().order() / self.stabilizer().order();
        if deg != by_stabilizer {
            return Err(Error::CheckFailed(format!(
                "orbit of {self} has {deg} elements but the stabilizer has index {by_stabilizer}"
            )));
        }
        Ok((orbit, deg))
    }

    pub fn degree(&self) -> usize {
        self.orbit().len()
    }

    /// `Σ_i deg(ω_i(u)) ω_i`.
    pub fn wt(&self) -> Result<Weight> {
        self.require_dominant()?;
        Ok(self.raw_wt())
    }

    pub(crate) fn raw_wt(&self) -> Weight {
        let mut w = vec![0; self.rs.rank()];
        for ((i, _), e) in &self.factors {
            w[*i] += e;
        }
        Weight(w)
    }

    /// Every point appearing at some node.
    pub fn points(&self) -> BTreeSet<FieldElem> {
        self.factors.keys().map(|(_, a)| a.clone()).collect()
    }

    /// `λ_a = (e(i,a))_i` for every point in the support.
    pub fn point_weights(&self) -> BTreeMap<FieldElem, Weight> {
        let rank = self.rs.rank();
        let mut out: BTreeMap<FieldElem, Weight> = BTreeMap::new();
        for ((i, a), e) in &self.factors {
            out.entry(a.clone()).or_insert_with(|| Weight::zero(rank)).0[*i] = *e;
        }
        out
    }

    /// Builds `∏_a ω_{λ_a, a}` from per-point weights.
    pub fn from_point_weights(&self, parts: &BTreeMap<FieldElem, Weight>) -> LWeight {
        let mut factors = BTreeMap::new();
        for (a, lam) in parts {
            for (i, &e) in lam.coords().iter().enumerate() {
                if e != 0 {
                    factors.insert((i, a.clone()), e);
                }
            }
        }
        self.with_factors(factors)
    }

    pub fn exponent(&self, node: usize, a: &FieldElem) -> i64 {
        self.factors.get(&(node, a.clone())).copied().unwrap_or(0)
    }

    /// Whether `ω_i(u)` and `π_j(u)` are coprime for all nodes `i, j`.
    pub fn relatively_prime(&self, other: &LWeight) -> Result<bool> {
        self.check_setting(other)?;
        self.require_dominant()?;
        other.require_dominant()?;
        Ok(self.points().is_disjoint(&other.points()))
    }

    /// Splits `ω = ω^K · ω̃`, where `ω^K` collects the `H`-orbits of points
    /// on which every node's exponent is constant.
    pub fn rational_split(&self) -> Result<(LWeight, LWeight)> {
        self.require_dominant()?;
        let h = self.ctx.base_group();
        let mut seen: BTreeSet<FieldElem> = BTreeSet::new();
        let mut rational = BTreeMap::new();
        for a in self.points() {
            if seen.contains(&a) {
                continue;
            }
            let orbit = self.ctx.orbit(h, &a);
            seen.extend(orbit.iter().cloned());
            let constant = (0..self.rs.rank()).all(|i| {
                let e = self.exponent(i, &a);
                orbit.iter().all(|b| self.exponent(i, b) == e)
            });
            if constant {
                for b in &orbit {
                    for i in 0..self.rs.rank() {
                        let e = self.exponent(i, b);
                        if e != 0 {
                            rational.insert((i, b.clone()), e);
                        }
                    }
                }
            }
        }
        let wk = self.with_factors(rational);
        let rest = self.mul(&wk.inv())?;
        Ok((wk, rest))
    }

    /// `ω*`: replaces `λ_a` by `−w₀λ_a` at every point.
    pub fn dual(&self) -> Result<LWeight> {
        self.require_dominant()?;
        let mut parts = BTreeMap::new();
        for (a, lam) in self.point_weights() {
            parts.insert(a, self.rs.w0_negate(&lam)?);
        }
        Ok(self.from_point_weights(&parts))
    }

    /// Coefficients of `ω_i(u)`, ascending in `u`.
    pub fn expand_coeffs(&self, node: usize) -> Result<Vec<FieldElem>> {
        self.require_dominant()?;
        if node >= self.rs.rank() {
            return Err(Error::InvalidLWeight(format!("node {} outside 1..={}", node + 1, self.rs.rank())));
        }
        let f = self.ctx.field();
        let mut coeffs = vec![f.one()];
        for ((i, a), e) in &self.factors {
            if *i != node {
                continue;
            }
            let minus_a = f.neg(a);
            for _ in 0..*e {
                let mut next = vec![f.zero(); coeffs.len() + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    next[k] = f.add(&next[k], c);
                    next[k + 1] = f.add(&next[k + 1], &f.mul(c, &minus_a));
                }
                coeffs = next;
            }
        }
        Ok(coeffs)
    }

    /// The least element of the `H`-orbit.
    pub fn class_key(&self) -> Result<LWeight> {
        self.require_dominant()?;
        Ok(self.orbit().into_iter().next().expect("orbit contains ω"))
    }
}
