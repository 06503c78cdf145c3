//! Finite root systems of types A–G.
//!
//! Conventions: `cartan[i][j] = ⟨α_i^∨, α_j⟩` (Bourbaki node order), so the
//! simple root `α_j` has fundamental-weight coordinates given by column `j`.
//! Root lengths are normalized with short roots at `d = ⟨α,α⟩/2 = 1`.
//! Weights are integer vectors in the fundamental-weight basis; roots are
//! integer vectors in the simple-root basis.

mod characters;
mod linkage;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::smith::int_matmul;
use crate::exact::{rat, smith_normal_form, MatrixQ, RationalField, SmithForm};

pub use characters::Multiplicities;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl LieType {
    pub fn rank(&self) -> usize {
        match *self {
            LieType::A(n) | LieType::B(n) | LieType::C(n) | LieType::D(n) | LieType::E(n) => n,
            LieType::F4 => 4,
            LieType::G2 => 2,
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            LieType::A(n) => n >= 1,
            LieType::B(n) | LieType::C(n) => n >= 2,
            LieType::D(n) => n >= 4,
            LieType::E(n) => (6..=8).contains(&n),
            LieType::F4 | LieType::G2 => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnknownType(self.to_string()))
        }
    }

    /// Cartan matrix `⟨α_i^∨, α_j⟩`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match *self {
            LieType::A(_) | LieType::B(_) | LieType::C(_) | LieType::F4 | LieType::G2 => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            LieType::D(_) => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            LieType::E(_) => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match *self {
            LieType::B(_) => a[n - 1][n - 2] = -2,
            LieType::C(_) => a[n - 2][n - 1] = -2,
            LieType::F4 => a[2][1] = -2,
            LieType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::A(n) => write!(f, "A{n}"),
            LieType::B(n) => write!(f, "B{n}"),
            LieType::C(n) => write!(f, "C{n}"),
            LieType::D(n) => write!(f, "D{n}"),
            LieType::E(n) => write!(f, "E{n}"),
            LieType::F4 => write!(f, "F4"),
            LieType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match (letter, rank) {
            ('A', n) => LieType::A(n),
            ('B', n) => LieType::B(n),
            ('C', n) => LieType::C(n),
            ('D', n) => LieType::D(n),
            ('E', n) => LieType::E(n),
            ('F', 4) => LieType::F4,
            ('G', 2) => LieType::G2,
            _ => return Err(bad()),
        };
        t.validate().map_err(|_| bad())
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An element of the finite group P/Q, as residues modulo the nontrivial
/// invariant factors of the Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PQClass(pub Vec<i64>);

impl PQClass {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn residues(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for PQClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    root_lengths: Vec<i64>,
    /// `det(A) · A^{-1}`; applied to a weight gives `det(A)` times its
    /// simple-root coordinates.
    adjugate: Vec<Vec<i64>>,
    det: i64,
    smith: SmithForm,
    pq_moduli: Vec<i64>,
    pq_rows: Vec<Vec<i64>>,
    highest_root: usize,
    char_cache: Mutex<HashMap<Weight, Arc<Multiplicities>>>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        RootSystem {
            lie_type: self.lie_type,
            cartan: self.cartan.clone(),
            lengths: self.lengths.clone(),
            positive_roots: self.positive_roots.clone(),
            root_lengths: self.root_lengths.clone(),
            adjugate: self.adjugate.clone(),
            det: self.det,
            smith: self.smith.clone(),
            pq_moduli: self.pq_moduli.clone(),
            pq_rows: self.pq_rows.clone(),
            highest_root: self.highest_root,
            char_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("lie_type", &self.lie_type)
            .field("positive_roots", &self.positive_roots.len())
            .finish()
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.lie_type == other.lie_type
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Result<Self> {
        let lie_type = lie_type.validate()?;
        let n = lie_type.rank();
        let cartan = lie_type.cartan();
        let lengths = symmetrizer(&cartan);

        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        roots.extend(frontier.iter().cloned());
        while let Some(beta) = frontier.pop() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut r = beta.clone();
                r[i] -= pairing;
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && roots.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> = roots.into_iter().collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let expected = match lie_type {
            LieType::A(n) => n * (n + 1) / 2,
            LieType::B(n) | LieType::C(n) => n * n,
            LieType::D(n) => n * (n - 1),
            LieType::E(6) => 36,
            LieType::E(7) => 63,
            LieType::E(_) => 120,
            LieType::F4 => 24,
            LieType::G2 => 6,
        };
        if positive_roots.len() != expected {
            return Err(Error::CheckFailed(format!(
                "{lie_type}: generated {} positive roots, expected {expected}",
                positive_roots.len()
            )));
        }
        let root_lengths: Vec<i64> = positive_roots
            .iter()
            .map(|r| {
                let mut s = 0;
                for i in 0..n {
                    for j in 0..n {
                        s += r[i] * r[j] * lengths[i] * cartan[i][j];
                    }
                }
                s / 2
            })
            .collect();

        let q = RationalField;
        let a = MatrixQ::from_rows(cartan.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect())?;
        let inv = a.inverse(&q)?;
        let det = crate::exact::smith::int_det(&cartan);
        let adjugate: Vec<Vec<i64>> = inv
            .to_rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * rat(det)).to_integer().to_i64().expect("small"))
                    .collect()
            })
            .collect();

        let smith = smith_normal_form(&cartan);
        let mut pq_moduli = Vec::new();
        let mut pq_rows = Vec::new();
        for (k, &d) in smith.diagonal.iter().enumerate() {
            if d == 1 {
                continue;
            }
            let mut row = smith.left[k].clone();
            // rescale by a unit so the first fundamental weight with a unit
            // residue maps to 1
            if let Some(r) = row.iter().map(|x| x.rem_euclid(d)).find(|r| r.gcd(&d) == 1) {
                let u = (1..d).find(|u| (u * r).rem_euclid(d) == 1).unwrap_or(1);
                for x in row.iter_mut() {
                    *x = (*x * u).rem_euclid(d);
                }
            }
            pq_moduli.push(d);
            pq_rows.push(row);
        }

        let max_height = positive_roots.iter().map(|r| r.iter().sum::<i64>()).max().unwrap_or(0);
        let tops: Vec<usize> = (0..positive_roots.len())
            .filter(|&k| positive_roots[k].iter().sum::<i64>() == max_height)
            .collect();
        if tops.len() != 1 {
            return Err(Error::CheckFailed(format!("{lie_type}: highest root is not unique")));
        }

        Ok(RootSystem {
            lie_type,
            cartan,
            lengths,
            positive_roots,
            root_lengths,
            adjugate,
            det,
            smith,
            pq_moduli,
            pq_rows,
            highest_root: tops[0],
            char_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(name.parse()?)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_{α_i} = ⟨α_i, α_i⟩/2` for the simple roots.
    pub fn simple_lengths(&self) -> &[i64] {
        &self.lengths
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn root_length(&self, root: &[i64]) -> Result<i64> {
        let k = self.root_index(root)?;
        Ok(self.root_lengths[k])
    }

    fn root_index(&self, root: &[i64]) -> Result<usize> {
        self.positive_roots
            .iter()
            .position(|r| r.as_slice() == root)
            .ok_or_else(|| Error::NotARoot(format!("{root:?} in {}", self.lie_type)))
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.positive_roots[self.highest_root]
    }

    pub fn smith(&self) -> &SmithForm {
        &self.smith
    }

    /// Orders of the cyclic factors of P/Q.
    pub fn pq_moduli(&self) -> &[i64] {
        &self.pq_moduli
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|i| (0..n).map(|j| self.cartan[i][j] * root[j]).sum()).collect())
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|j| self.cartan[j][i]).collect())
    }

    /// The highest root as a weight (highest weight of the adjoint module).
    pub fn highest_root_weight(&self) -> Weight {
        self.root_to_weight(self.highest_root())
    }

    /// Coroot coefficients `m_i^∨ = (d_{α_i}/d_α)·m_i` of a positive root
    /// `α = Σ m_i α_i`, so that `α^∨ = Σ m_i^∨ α_i^∨`.
    pub fn coroot_coeffs(&self, root: &[i64]) -> Result<Vec<i64>> {
        let k = self.root_index(root)?;
        let d = self.root_lengths[k];
        root.iter()
            .zip(&self.lengths)
            .map(|(&m, &di)| {
                if (di * m) % d != 0 {
                    Err(Error::CheckFailed(format!("non-integral coroot coefficient for {root:?}")))
                } else {
                    Ok(di * m / d)
                }
            })
            .collect()
    }

    /// `det(A)·(λ, μ)`.
    pub(crate) fn scaled_inner(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for k in 0..n {
            let ck: i64 = (0..n).map(|i| self.adjugate[k][i] * a.0[i]).sum();
            s += ck * self.lengths[k] * b.0[k];
        }
        s
    }

    /// `det(A)·(λ, α)` for a root in simple coordinates.
    pub(crate) fn scaled_root_pairing(&self, w: &Weight, root: &[i64]) -> i64 {
        (0..self.rank())
            .map(|j| root[j] * self.lengths[j] * w.0[j])
            .sum::<i64>()
            * self.det
    }

    /// `det(A)` times the height (sum of simple-root coordinates).
    pub fn scaled_height(&self, w: &Weight) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|k| (0..n).map(|i| self.adjugate[k][i] * w.0[i]).sum::<i64>())
            .sum()
    }

    pub fn cartan_det(&self) -> i64 {
        self.det
    }

    /// Image of a weight in P/Q.
    pub fn pq_class(&self, w: &Weight) -> PQClass {
        PQClass(
            self.pq_rows
                .iter()
                .zip(&self.pq_moduli)
                .map(|(row, &d)| row.iter().zip(&w.0).map(|(a, b)| a * b).sum::<i64>().rem_euclid(d))
                .collect(),
        )
    }

    pub fn pq_add(&self, a: &PQClass, b: &PQClass) -> PQClass {
        PQClass(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.pq_moduli)
                .map(|((x, y), d)| (x + y).rem_euclid(*d))
                .collect(),
        )
    }

    pub fn pq_zero(&self) -> PQClass {
        PQClass(vec![0; self.pq_moduli.len()])
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.0[i];
        Weight(
            (0..self.rank())
                .map(|j| w.0[j] - c * self.cartan[j][i])
                .collect(),
        )
    }

    /// Dominant Weyl conjugate and the parity of the reflections used.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, bool) {
        let mut x = w.clone();
        let mut odd = false;
        while let Some(i) = x.0.iter().position(|&c| c < 0) {
            x = self.reflect(&x, i);
            odd = !odd;
        }
        (x, odd)
    }

    /// `−w₀μ`.
    pub fn w0_negate(&self, mu: &Weight) -> Result<Weight> {
        self.require_dominant(mu)?;
        Ok(self.to_dominant(&mu.neg()).0)
    }

    pub(crate) fn require_dominant(&self, w: &Weight) -> Result<()> {
        if w.0.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "weight {w} for a rank-{} system",
                self.rank()
            )));
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    pub fn smith_transform_check(&self) -> bool {
        let prod = int_matmul(&int_matmul(&self.smith.left, &self.cartan), &self.smith.right);
        prod.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &v)| v == if i == j { self.smith.diagonal[i] } else { 0 })
        })
    }
}

/// Smallest positive integers `d` with `d_i a_ij = d_j a_ji`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // rationals as (num, den); the Dynkin diagram is connected
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let (p, q) = d[i].expect("visited");
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                // d_j = d_i a_ij / a_ji
                let num = p * cartan[i][j];
                let den = q * cartan[j][i];
                let g = num.gcd(&den);
                let (mut num, mut den) = (num / g, den / g);
                if den < 0 {
                    num = -num;
                    den = -den;
                }
                d[j] = Some((num, den));
                stack.push(j);
            }
        }
    }
    let lcm_den = d.iter().map(|x| x.expect("connected").1).fold(1i64, |a, b| a.lcm(&b));
    let ints: Vec<i64> = d.iter().map(|x| {
        let (p, q) = x.expect("connected");
        p * (lcm_den / q)
    }).collect();
    let g = ints.iter().fold(0i64, |a, &b| a.gcd(&b));
    ints.into_iter().map(|x| x / g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    #[test]
    fn parse_types() {
        assert_eq!("A1".parse::<LieType>().unwrap(), LieType::A(1));
        assert_eq!("g2".parse::<LieType>().unwrap(), LieType::G2);
        assert!("A0".parse::<LieType>().is_err());
        assert!("F3".parse::<LieType>().is_err());
        assert!("E9".parse::<LieType>().is_err());
        assert!("X2".parse::<LieType>().is_err());
        assert!(matches!("D3".parse::<LieType>(), Err(Error::UnknownType(_))));
    }

    #[test]
    fn root_counts() {
        for (name, count) in [
            ("A1", 1), ("A2", 3), ("A4", 10), ("B2", 4), ("B3", 9), ("C3", 9), ("D4", 12),
            ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6),
        ] {
            assert_eq!(rs(name).positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn build_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots(), &[vec![1]]);
        assert_eq!(a1.simple_lengths(), &[1]);

        let a2 = rs("A2");
        let roots: BTreeSet<Vec<i64>> = a2.positive_roots().iter().cloned().collect();
        assert_eq!(roots, BTreeSet::from([vec![1, 0], vec![0, 1], vec![1, 1]]));

        let g2 = rs("G2");
        assert!(g2.positive_roots().contains(&vec![3, 2]));
        assert_eq!(g2.simple_lengths(), &[1, 3]);
        assert_eq!(g2.highest_root(), &[3, 2]);
    }

    #[test]
    fn lengths_for_non_simply_laced() {
        assert_eq!(rs("B3").simple_lengths(), &[2, 2, 1]);
        assert_eq!(rs("C3").simple_lengths(), &[1, 1, 2]);
        assert_eq!(rs("F4").simple_lengths(), &[2, 2, 1, 1]);
    }

    #[test]
    fn coroot_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.coroot_coeffs(&[1, 1]).unwrap(), vec![1, 1]);
        let g2 = rs("G2");
        assert_eq!(g2.root_length(&[3, 2]).unwrap(), 3);
        assert_eq!(g2.coroot_coeffs(&[3, 2]).unwrap(), vec![1, 2]);
        assert_eq!(g2.coroot_coeffs(&[0, 1]).unwrap(), vec![0, 1]);
        assert!(matches!(g2.coroot_coeffs(&[2, 2]), Err(Error::NotARoot(_))));
    }

    #[test]
    fn coroot_pairing_identity() {
        // ⟨α,α⟩·m_i^∨ = 2 d_{α_i} m_i
        for name in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let r = rs(name);
            for root in r.positive_roots() {
                let d = r.root_length(root).unwrap();
                let cc = r.coroot_coeffs(root).unwrap();
                for i in 0..r.rank() {
                    assert_eq!(2 * d * cc[i], 2 * r.simple_lengths()[i] * root[i]);
                }
            }
        }
    }

    #[test]
    fn pq_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.pq_class(&Weight(vec![1])), PQClass(vec![1]));
        assert_eq!(a1.pq_class(&Weight(vec![2])), PQClass(vec![0]));
        let a2 = rs("A2");
        assert_eq!(a2.pq_moduli(), &[3]);
        assert_eq!(a2.pq_class(&Weight(vec![1, 0])), PQClass(vec![1]));
        assert_eq!(a2.pq_class(&Weight(vec![0, 1])), PQClass(vec![2]));
        for name in ["A3", "B2", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(name);
            assert!(r.smith_transform_check());
            for root in r.positive_roots() {
                assert!(r.pq_class(&r.root_to_weight(root)).is_zero(), "{name} {root:?}");
            }
        }
        assert_eq!(rs("D4").pq_moduli(), &[2, 2]);
        assert!(rs("E8").pq_moduli().is_empty());
    }

    #[test]
    fn pq_is_homomorphism() {
        let r = rs("D5");
        for a in 0..3 {
            for b in 0..3 {
                let x = Weight(vec![a, 0, b, 1, 0]);
                let y = Weight(vec![b, 1, 0, a, 2]);
                assert_eq!(r.pq_class(&x.add(&y)), r.pq_add(&r.pq_class(&x), &r.pq_class(&y)));
            }
        }
    }

    #[test]
    fn w0_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.w0_negate(&Weight(vec![3])).unwrap(), Weight(vec![3]));
        let a2 = rs("A2");
        assert_eq!(a2.w0_negate(&Weight(vec![1, 0])).unwrap(), Weight(vec![0, 1]));
        let d4 = rs("D4");
        assert_eq!(d4.w0_negate(&Weight(vec![1, 0, 0, 0])).unwrap(), Weight(vec![1, 0, 0, 0]));
        let e6 = rs("E6");
        assert_eq!(
            e6.w0_negate(&Weight(vec![1, 0, 0, 0, 0, 0])).unwrap(),
            Weight(vec![0, 0, 0, 0, 0, 1])
        );
        assert!(matches!(a2.w0_negate(&Weight(vec![-1, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn w0_is_involution() {
        for name in ["A3", "D5", "E6", "B3"] {
            let r = rs(name);
            let n = r.rank();
            for i in 0..n {
                for k in 1..3 {
                    let w = Weight::fundamental(n, i).scale(k).add(&Weight::fundamental(n, (i + 1) % n));
                    let once = r.w0_negate(&w).unwrap();
                    assert_eq!(r.w0_negate(&once).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn highest_root_weights() {
        assert_eq!(rs("A1").highest_root_weight(), Weight(vec![2]));
        assert_eq!(rs("A2").highest_root_weight(), Weight(vec![1, 1]));
        assert_eq!(rs("G2").highest_root_weight(), Weight(vec![0, 1]));
        assert_eq!(rs("B3").highest_root_weight(), Weight(vec![0, 1, 0]));
        assert_eq!(rs("C3").highest_root_weight(), Weight(vec![2, 0, 0]));
    }
}
