//! Declared Galois number fields with explicit automorphism groups.
//!
//! The caller supplies the modulus `m`, the images `g(θ)` of every group
//! element and a subgroup `H`; [`GaloisContext::new`] verifies that the data
//! really describes a Galois extension `L/Q` with group `G` and builds the
//! composition table. The base field is `K = L^H`.
//!
//! Irreducibility of `m` is certified indirectly: `m` square-free, `|G| =
//! deg m`, and the fixed space of `G` one-dimensional. A context that passes
//! these checks with a reducible modulus still fails at the first inversion
//! of a zero divisor.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{FieldElem, FieldOps, MatrixQ, NumberField, PolyQ, Rational, RationalField};

/// Sorted list of group element indices, closed under composition and
/// containing the identity `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(Vec<usize>);

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup(self.0.iter().copied().filter(|&g| other.contains(g)).collect())
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisContext {
    field: NumberField,
    images: Vec<FieldElem>,
    /// `actions[g]` row `k` holds the coordinates of `g(θ^k)`.
    actions: Vec<Vec<Vec<Rational>>>,
    /// `table[g][h]` is the index of `g ∘ h`.
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    base: Subgroup,
}

impl GaloisContext {
    /// Validates the declared data and builds the context.
    pub fn new(modulus: PolyQ, aut_images: Vec<PolyQ>, subgroup: Vec<usize>) -> Result<Self> {
        let field = NumberField::new(modulus.clone())?;
        if !modulus.is_square_free() {
            return Err(Error::InvalidModulus(format!("{modulus} is not square-free")));
        }
        let n = field.degree();
        if aut_images.is_empty() {
            return Err(Error::WrongOrder { group: 0, degree: n });
        }
        if aut_images.len() != n {
            return Err(Error::WrongOrder {
                group: aut_images.len(),
                degree: n,
            });
        }
        let images: Vec<FieldElem> = aut_images.iter().map(|p| field.from_poly(p)).collect();
        if images[0] != field.generator() {
            return Err(Error::NotClosed("element 0 must be the identity θ ↦ θ".into()));
        }
        for (g, img) in images.iter().enumerate() {
            if !field.eval_poly(&modulus, img).is_zero() {
                return Err(Error::NotARoot(format!("automorphism {g}: m({img}) ≠ 0")));
            }
        }
        let distinct: BTreeSet<&FieldElem> = images.iter().collect();
        if distinct.len() != images.len() {
            return Err(Error::NotClosed("duplicate automorphism images".into()));
        }

        let actions: Vec<Vec<Vec<Rational>>> = images
            .iter()
            .map(|img| {
                let mut pw = field.one();
                (0..n)
                    .map(|_| {
                        let row = pw.coords().to_vec();
                        pw = field.mul(&pw, img);
                        row
                    })
                    .collect()
            })
            .collect();

        let mut ctx = GaloisContext {
            field,
            images,
            actions,
            table: Vec::new(),
            inverse: Vec::new(),
            base: Subgroup(vec![0]),
        };

        // (g ∘ h)(θ) = g(h(θ))
        let mut table = vec![vec![0; n]; n];
        for g in 0..n {
            for h in 0..n {
                let img = ctx.apply_aut(g, &ctx.images[h]);
                table[g][h] = ctx
                    .images
                    .iter()
                    .position(|x| *x == img)
                    .ok_or_else(|| Error::NotClosed(format!("{g} ∘ {h} maps θ to {img}")))?;
            }
        }
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == 0)
                .ok_or_else(|| Error::NotClosed(format!("element {g} has no inverse")))?;
        }
        ctx.table = table;
        ctx.inverse = inverse;

        let whole = ctx.whole_group();
        let fixed = ctx.fixed_space_dim(&whole);
        if fixed > 1 {
            return Err(Error::FixedFieldTooBig(fixed));
        }
        let base = ctx.subgroup(subgroup)?;
        let expected = n / base.order();
        let got = ctx.fixed_space_dim(&base);
        if got != expected {
            return Err(Error::BadSubgroup(format!(
                "fixed space of H has dimension {got}, expected {expected}"
            )));
        }
        ctx.base = base;
        Ok(ctx)
    }

    /// Same field and group with a different base subgroup.
    pub fn with_subgroup(&self, subgroup: Vec<usize>) -> Result<Self> {
        let base = self.subgroup(subgroup)?;
        let mut ctx = self.clone();
        ctx.base = base;
        Ok(ctx)
    }

    /// Validates a list of indices as a subgroup.
    pub fn subgroup(&self, mut elems: Vec<usize>) -> Result<Subgroup> {
        elems.sort_unstable();
        elems.dedup();
        let n = self.order();
        if let Some(&bad) = elems.iter().find(|&&g| g >= n) {
            return Err(Error::BadSubgroup(format!("index {bad} out of range")));
        }
        if elems.first() != Some(&0) {
            return Err(Error::BadSubgroup("missing the identity".into()));
        }
        for &g in &elems {
            for &h in &elems {
                if elems.binary_search(&self.table[g][h]).is_err() {
                    return Err(Error::BadSubgroup(format!("{g} ∘ {h} leaves the set")));
                }
            }
        }
        Ok(Subgroup(elems))
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn modulus(&self) -> &PolyQ {
        self.field.modulus()
    }

    /// Images `g(θ)`, identity first.
    pub fn images(&self) -> &[FieldElem] {
        &self.images
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    pub fn compose(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn whole_group(&self) -> Subgroup {
        Subgroup((0..self.order()).collect())
    }

    /// The subgroup `H` defining the base field `K = L^H`.
    pub fn base_group(&self) -> &Subgroup {
        &self.base
    }

    /// `[K : Q]`.
    pub fn base_degree(&self) -> usize {
        self.order() / self.base.order()
    }

    /// Applies `g` to `a` by substituting `g(θ)` for `θ`.
    pub fn apply_aut(&self, g: usize, a: &FieldElem) -> FieldElem {
        let n = self.field.degree();
        let act = &self.actions[g];
        let mut out = vec![Rational::zero(); n];
        for (k, c) in a.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dst, v) in out.iter_mut().zip(&act[k]) {
                *dst += c * v;
            }
        }
        self.field.elem(out).expect("length preserved")
    }

    pub fn orbit(&self, s: &Subgroup, a: &FieldElem) -> Vec<FieldElem> {
        let set: BTreeSet<FieldElem> = s.0.iter().map(|&g| self.apply_aut(g, a)).collect();
        set.into_iter().collect()
    }

    pub fn stabilizer(&self, s: &Subgroup, a: &FieldElem) -> Subgroup {
        Subgroup(
            s.0.iter()
                .copied()
                .filter(|&g| self.apply_aut(g, a) == *a)
                .collect(),
        )
    }

    /// Q-basis of `{v ∈ L : g(v) = v for all g ∈ S}`.
    pub fn fixed_space_basis(&self, s: &Subgroup) -> Vec<FieldElem> {
        let n = self.field.degree();
        let q = RationalField;
        // column k of (g - 1) is the image of θ^k minus θ^k
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for &g in &s.0 {
            for i in 0..n {
                rows.push(
                    (0..n)
                        .map(|k| {
                            let v = self.actions[g][k][i].clone();
                            if i == k {
                                v - Rational::from_integer(1.into())
                            } else {
                                v
                            }
                        })
                        .collect(),
                );
            }
        }
        let m = MatrixQ::from_rows(rows).expect("rectangular");
        m.kernel(&q)
            .into_iter()
            .map(|v| self.field.elem(v).expect("length n"))
            .collect()
    }

    pub fn fixed_space_dim(&self, s: &Subgroup) -> usize {
        self.fixed_space_basis(s).len()
    }

    pub fn is_fixed_by(&self, s: &Subgroup, a: &FieldElem) -> bool {
        s.0.iter().all(|&g| self.apply_aut(g, a) == *a)
    }
}

/// Ready-made contexts used throughout the tests and examples.
pub mod presets {
    use super::*;
    use crate::exact::{rat, PolyQ};

    fn poly(c: &[i64]) -> PolyQ {
        PolyQ::from_i64(c)
    }

    /// `L = K = Q` (modulus θ).
    pub fn rationals() -> GaloisContext {
        GaloisContext::new(poly(&[0, 1]), vec![poly(&[0, 1])], vec![0]).expect("valid")
    }

    /// `L = Q(i)` with `i = θ`, `θ² + 1 = 0`; `K = Q` when `full_base`,
    /// otherwise `K = L`.
    pub fn gaussian(full_base: bool) -> GaloisContext {
        let h = if full_base { vec![0, 1] } else { vec![0] };
        GaloisContext::new(poly(&[1, 0, 1]), vec![poly(&[0, 1]), poly(&[0, -1])], h).expect("valid")
    }

    /// `L = Q(ζ₅)`, group elements `θ ↦ θ^k` for `k = 1, 2, 3, 4` (indices 0..4).
    pub fn cyclotomic5(subgroup: Vec<usize>) -> Result<GaloisContext> {
        let m = poly(&[1, 1, 1, 1, 1]);
        let images = (1..=4).map(|k| PolyQ::monomial(rat(1), k)).collect();
        GaloisContext::new(m, images, subgroup)
    }

    /// `L = Q(ζ₈) = Q(i, √2)` with `θ⁴ + 1 = 0`; group elements `θ ↦ θ^k` for
    /// `k = 1, 3, 5, 7`. Here `i = θ²` and `√2 = θ − θ³`.
    pub fn cyclotomic8(subgroup: Vec<usize>) -> Result<GaloisContext> {
        let m = poly(&[1, 0, 0, 0, 1]);
        let images = [1usize, 3, 5, 7]
            .iter()
            .map(|&k| PolyQ::monomial(rat(1), k))
            .collect();
        GaloisContext::new(m, images, subgroup)
    }
}
