//! The irreducible `K[X]`-module `K(ϖ)`, realized as the field generated
//! over `K` by the coefficients of `ϖ`, with explicit multiplication
//! matrices in a primitive power basis.
//!
//! Matrices are stored over `L`; that their entries lie in `K` is checked by
//! applying every element of `H`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exact::{FieldElem, FieldOps, MatrixL, MatrixQ, RationalField};
use crate::galois::Subgroup;
use crate::lweight::LWeight;
use crate::repclass::compositum_degree;

/// Coefficients `ϖ_{i,r}` of `ω_i(u)` for `r ≥ 1`, keyed by 0-based node and
/// `r`.
pub fn coefficient_tuple(omega: &LWeight) -> Result<BTreeMap<(usize, usize), FieldElem>> {
    let mut out = BTreeMap::new();
    for node in 0..omega.root_system().rank() {
        for (r, c) in omega.expand_coeffs(node)?.into_iter().enumerate().skip(1) {
            out.insert((node, r), c);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct KXModule {
    pub lweight: LWeight,
    /// Elements of `H` fixing every coefficient.
    pub stabilizer: Subgroup,
    pub primitive: FieldElem,
    pub dim: usize,
    pub coset_reps: Vec<usize>,
    /// `V[j][k] = σ_j(t^k)`.
    pub vandermonde: MatrixL,
    /// Keyed by 0-based node and coefficient index `r ≥ 1`.
    pub generators: BTreeMap<(usize, usize), MatrixL>,
    coefficients: BTreeMap<(usize, usize), FieldElem>,
}

impl KXModule {
    pub fn build(omega: &LWeight) -> Result<Self> {
        omega.require_dominant()?;
        let ctx = omega.context();
        let f = ctx.field();
        let h = ctx.base_group();
        let coefficients = coefficient_tuple(omega)?;

        let fixing: Vec<usize> = h
            .elements()
            .iter()
            .copied()
            .filter(|&g| coefficients.values().all(|c| ctx.apply_aut(g, c) == *c))
            .collect();
        let stabilizer = ctx.subgroup(fixing)?;
        let dim = h.order() / stabilizer.order();

        let primitive = find_primitive(omega, &coefficients, &stabilizer, dim)?;

        let mut seen = BTreeSet::new();
        let mut coset_reps = Vec::new();
        for &g in h.elements() {
            if seen.insert(ctx.apply_aut(g, &primitive)) {
                coset_reps.push(g);
            }
        }
        if coset_reps.len() != dim {
            return Err(Error::CheckFailed(format!(
                "primitive element has {} conjugates, expected {dim}",
                coset_reps.len()
            )));
        }

        let conj_t: Vec<FieldElem> = coset_reps.iter().map(|&g| ctx.apply_aut(g, &primitive)).collect();
        let vandermonde = MatrixL::from_fn(dim, dim, |j, k| f.pow(&conj_t[j], k as u32));
        let vinv = vandermonde.inverse(f)?;

        let mut generators = BTreeMap::new();
        for (key, s) in &coefficients {
            let diag = MatrixL::from_fn(dim, dim, |j, k| {
                if j == k {
                    ctx.apply_aut(coset_reps[j], s)
                } else {
                    f.zero()
                }
            });
            let m = vinv.mul(f, &diag.mul(f, &vandermonde)?)?;
            if !m.entries().iter().all(|e| ctx.is_fixed_by(h, e)) {
                return Err(Error::CheckFailed(format!(
                    "multiplication matrix for coefficient {} of node {} leaves K",
                    key.1,
                    key.0 + 1
                )));
            }
            generators.insert(*key, m);
        }

        Ok(KXModule {
            lweight: omega.clone(),
            stabilizer,
            primitive,
            dim,
            coset_reps,
            vandermonde,
            generators,
            coefficients,
        })
    }

    pub fn coefficient(&self, node: usize, r: usize) -> Option<&FieldElem> {
        self.coefficients.get(&(node, r))
    }

    /// Matrix of multiplication by the primitive element: the companion
    /// matrix of its minimal polynomial over `K`.
    pub fn primitive_matrix(&self) -> Result<MatrixL> {
        let f = self.lweight.context().field();
        let n = self.dim;
        let last = self.power_coords(n)?;
        Ok(MatrixL::from_fn(n, n, |i, j| {
            if j == n - 1 {
                last[i].clone()
            } else if i == j + 1 {
                f.one()
            } else {
                f.zero()
            }
        }))
    }

    /// Coordinates of `t^n` in the basis `1, t, …, t^{n-1}`.
    fn power_coords(&self, n: usize) -> Result<Vec<FieldElem>> {
        let ctx = self.lweight.context();
        let f = ctx.field();
        let vinv = self.vandermonde.inverse(f)?;
        let images: Vec<FieldElem> = self
            .coset_reps
            .iter()
            .map(|&g| f.pow(&ctx.apply_aut(g, &self.primitive), n as u32))
            .collect();
        Ok((0..self.dim)
            .map(|k| {
                (0..self.dim).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(vinv.get(k, j), &images[j])))
            })
            .collect())
    }

    /// Whether `charpoly(M_{i,r}) = ∏_j (u − σ_j(ϖ_{i,r}))`.
    pub fn charpoly_split_check(&self, node: usize, r: usize) -> Result<bool> {
        let m = self
            .generators
            .get(&(node, r))
            .ok_or_else(|| Error::InvalidLWeight(format!("no coefficient {r} at node {}", node + 1)))?;
        let ctx = self.lweight.context();
        let f = ctx.field();
        let s = &self.coefficients[&(node, r)];
        let mut expected = vec![f.one()];
        for &g in &self.coset_reps {
            let root = f.neg(&ctx.apply_aut(g, s));
            let mut next = vec![f.zero(); expected.len() + 1];
            for (k, c) in expected.iter().enumerate() {
                next[k + 1] = f.add(&next[k + 1], c);
                next[k] = f.add(&next[k], &f.mul(c, &root));
            }
            expected = next;
        }
        Ok(m.charpoly(f)? == expected)
    }
}

/// Scans `Σ c_k s_k` over the distinct non-rational coefficients with small
/// nonnegative weights, by increasing total weight, for an element whose
/// stabilizer in `H` is `stab`.
fn find_primitive(
    omega: &LWeight,
    coefficients: &BTreeMap<(usize, usize), FieldElem>,
    stab: &Subgroup,
    dim: usize,
) -> Result<FieldElem> {
    let ctx = omega.context();
    let f = ctx.field();
    let h = ctx.base_group();
    if dim == 1 {
        return Ok(f.one());
    }
    let values: Vec<&FieldElem> = coefficients
        .values()
        .filter(|c| !ctx.is_fixed_by(h, c))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let bound = 10 * dim * dim;
    let m = values.len();
    if m == 0 {
        return Err(Error::PrimitiveSearchFailed(0));
    }
    let mut tried = 0;
    let mut total = 1usize;
    loop {
        for weights in compositions(total, m) {
            if tried >= bound {
                return Err(Error::PrimitiveSearchFailed(bound));
            }
            tried += 1;
            let t = weights.iter().zip(&values).fold(f.zero(), |acc, (&c, v)| {
                f.add(&acc, &f.mul(&f.from_i64(c as i64), v))
            });
            if ctx.stabilizer(h, &t) == *stab {
                return Ok(t);
            }
        }
        total += 1;
    }
}

/// All vectors of `m` nonnegative integers summing to `total`, in
/// lexicographically decreasing order.
fn compositions(total: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return Vec::new();
    }
    if m == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, m - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `K(ϖ) ≅ K(π)` decided by class keys, cross-checked against a direct
/// search for `h ∈ H` carrying one coefficient tuple to the other.
pub fn iso_test(a: &LWeight, b: &LWeight) -> Result<bool> {
    a.check_setting(b)?;
    let by_key = a.class_key()? == b.class_key()?;
    let ta = coefficient_tuple(a)?;
    let tb = coefficient_tuple(b)?;
    let ctx = a.context();
    let structural = ta.len() == tb.len()
        && ta.keys().eq(tb.keys())
        && ctx.base_group().elements().iter().any(|&g| {
            ta.iter().all(|(k, v)| tb.get(k) == Some(&ctx.apply_aut(g, v)))
        });
    if by_key != structural {
        return Err(Error::CheckFailed(format!(
            "class keys and coefficient conjugacy disagree for {a} and {b}"
        )));
    }
    Ok(by_key)
}

/// Rank over `K` of `K(ϖ) ⊗_K K(π) → L`, `x ⊗ y ↦ xy`, and whether the map
/// is injective.
pub fn tensor_embedding_rank(a: &LWeight, b: &LWeight) -> Result<(usize, bool)> {
    a.check_setting(b)?;
    let ma = KXModule::build(a)?;
    let mb = KXModule::build(b)?;
    let ctx = a.context();
    let f = ctx.field();
    let k_basis = ctx.fixed_space_basis(ctx.base_group());
    let mut rows = Vec::new();
    for j in 0..ma.dim {
        let x = f.pow(&ma.primitive, j as u32);
        for k in 0..mb.dim {
            let xy = f.mul(&x, &f.pow(&mb.primitive, k as u32));
            for c in &k_basis {
                rows.push(f.mul(c, &xy).coords().to_vec());
            }
        }
    }
    let rank_q = MatrixQ::from_rows(rows)?.rank(&RationalField);
    if rank_q % k_basis.len() != 0 {
        return Err(Error::CheckFailed(format!(
            "image has Q-dimension {rank_q}, not a multiple of [K:Q] = {}",
            k_basis.len()
        )));
    }
    let rank = rank_q / k_basis.len();
    let expected = compositum_degree(a, b)?;
    if rank != expected {
        return Err(Error::CheckFailed(format!(
            "embedding rank {rank} differs from the compositum degree {expected}"
        )));
    }
    Ok((rank, rank == ma.dim * mb.dim))
}
