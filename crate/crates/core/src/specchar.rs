//! Spectral characters: the image of an ℓ-weight in `P_F / Q_F`, computed
//! pointwise in `P/Q`, and the block partition they induce.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::exact::FieldElem;
use crate::galois::GaloisContext;
use crate::lweight::LWeight;
use crate::rootsystem::PQClass;

/// Finitely supported map from spectral points to nonzero classes in P/Q.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectralCharacter(pub BTreeMap<FieldElem, PQClass>);

impl SpectralCharacter {
    pub fn entries(&self) -> &BTreeMap<FieldElem, PQClass> {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h·χ`, with `(h·χ)(h(a)) = χ(a)`.
    pub fn act(&self, ctx: &GaloisContext, g: usize) -> SpectralCharacter {
        SpectralCharacter(self.0.iter().map(|(a, c)| (ctx.apply_aut(g, a), c.clone())).collect())
    }
}

/// Accepts any ℓ-weight, dominant or not.
pub fn spectral_character(omega: &LWeight) -> SpectralCharacter {
    let rs = omega.root_system();
    SpectralCharacter(
        omega
            .point_weights()
            .into_iter()
            .map(|(a, lam)| (a, rs.pq_class(&lam)))
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    )
}

/// Whether `χ2 = h·χ1` for some `h ∈ H`.
pub fn equivalent_chars(ctx: &GaloisContext, a: &SpectralCharacter, b: &SpectralCharacter) -> bool {
    a.0.len() == b.0.len()
        && ctx.base_group().elements().iter().any(|&g| a.act(ctx, g) == *b)
}

pub fn same_block(a: &LWeight, b: &LWeight) -> Result<bool> {
    a.check_setting(b)?;
    Ok(equivalent_chars(a.context(), &spectral_character(a), &spectral_character(b)))
}

/// Groups dominant ℓ-weights by block.
///
/// Members keep their input order; groups are ordered by their least class
/// key.
pub fn partition_blocks(items: &[LWeight]) -> Result<Vec<Vec<LWeight>>> {
    for w in items {
        w.require_dominant()?;
    }
    if let Some(first) = items.first() {
        for w in &items[1..] {
            first.check_setting(w)?;
        }
    }
    let chars: Vec<SpectralCharacter> = items.iter().map(spectral_character).collect();
    let mut parent: Vec<usize> = (0..items.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj && equivalent_chars(items[i].context(), &chars[i], &chars[j]) {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..items.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut keyed: Vec<(LWeight, Vec<LWeight>)> = Vec::new();
    for members in groups.into_values() {
        let mut least: Option<LWeight> = None;
        for &i in &members {
            let k = items[i].class_key()?;
            if least.as_ref().is_none_or(|l| k < *l) {
                least = Some(k);
            }
        }
        keyed.push((least.expect("groups are nonempty"), members.iter().map(|&i| items[i].clone()).collect()));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}
