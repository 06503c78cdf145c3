//! Dense matrices over an exact field.

use super::field::{FieldElem, FieldOps};
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Row-major dense matrix. Arithmetic goes through a [`FieldOps`] instance
/// passed by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

/// Matrix over a number field.
pub type MatrixL = Matrix<FieldElem>;
/// Matrix over Q.
pub type MatrixQ = Matrix<Rational>;

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity<F: FieldOps<Elem = E>>(field: &F, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<T: Clone + PartialEq>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(field.zero(), |acc, k| {
                field.add(&acc, &field.mul(self.get(i, k), other.get(k, j)))
            })
        }))
    }

    pub fn add<F: FieldOps<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| field.add(self.get(i, j), other.get(i, j)))
    }

    pub fn scale<F: FieldOps<Elem = E>>(&self, field: &F, c: &E) -> Self {
        self.map(|x| field.mul(x, c))
    }

    pub fn trace<F: FieldOps<Elem = E>>(&self, field: &F) -> E {
        (0..self.rows.min(self.cols)).fold(field.zero(), |acc, i| field.add(&acc, self.get(i, i)))
    }

    pub fn is_identity<F: FieldOps<Elem = E>>(&self, field: &F) -> bool {
        self.is_square() && *self == Self::identity(field, self.rows)
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref<F: FieldOps<Elem = E>>(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || field.is_zero(self.get(i, c)) {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = field.sub(self.get(i, j), &field.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank<F: FieldOps<Elem = E>>(&self, field: &F) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of the right kernel `{x : self·x = 0}`.
    pub fn kernel<F: FieldOps<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![field.zero(); self.cols];
                v[fc] = field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Exact inverse by Gauss–Jordan elimination on `[self | I]`.
    pub fn inverse<F: FieldOps<Elem = E>>(&self, field: &F) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let pivots = aug.rref(field);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    /// Characteristic polynomial `det(u·I − self)`, ascending coefficients,
    /// by the Faddeev–LeVerrier recursion (valid in characteristic zero).
    pub fn charpoly<F: FieldOps<Elem = E>>(&self, field: &F) -> Result<Vec<E>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("charpoly of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = field.one();
        let ident = Self::identity(field, n);
        let mut m = Self::from_fn(n, n, |_, _| field.zero());
        for k in 1..=n {
            m = self.mul(field, &m)?.add(field, &ident.scale(field, &coeffs[n - k + 1]));
            let am = self.mul(field, &m)?;
            let inv_k = field.inv(&field.from_rational(&rat(k as i64)))?;
            coeffs[n - k] = field.neg(&field.mul(&am.trace(field), &inv_k));
        }
        Ok(coeffs)
    }

    /// Degree of the minimal polynomial: the least `k` for which
    /// `I, A, …, A^k` are linearly dependent.
    pub fn minpoly_degree<F: FieldOps<Elem = E>>(&self, field: &F) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("minpoly of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut powers: Vec<Vec<E>> = vec![Self::identity(field, n).entries];
        let mut cur = Self::identity(field, n);
        for k in 1..=n {
            cur = cur.mul(field, self)?;
            powers.push(cur.entries.clone());
            let stacked = Matrix::from_rows(powers.clone())?;
            if stacked.rank(field) < powers.len() {
                return Ok(k);
            }
        }
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{NumberField, RationalField};
    use crate::exact::poly::PolyQ;
    use crate::exact::rational::ratio;
    use proptest::prelude::*;

    fn gaussian() -> NumberField {
        NumberField::new(PolyQ::from_i64(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn identity_inverse() {
        let k = gaussian();
        let id = MatrixL::identity(&k, 3);
        assert_eq!(id.inverse(&k).unwrap(), id);
    }

    #[test]
    fn diagonal_inverse() {
        let k = gaussian();
        let i = k.generator();
        let m = MatrixL::from_rows(vec![vec![i.clone(), k.zero()], vec![k.zero(), k.one()]]).unwrap();
        let expected = MatrixL::from_rows(vec![vec![k.neg(&i), k.zero()], vec![k.zero(), k.one()]]).unwrap();
        assert_eq!(m.inverse(&k).unwrap(), expected);
    }

    #[test]
    fn vandermonde_inverse_closed_form() {
        // [[1, i], [1, -i]]^{-1} = 1/(-2i) [[-i, -i], [-1, 1]] = [[1/2, 1/2], [-i/2, i/2]]
        let k = gaussian();
        let i = k.generator();
        let v = MatrixL::from_rows(vec![vec![k.one(), i.clone()], vec![k.one(), k.neg(&i)]]).unwrap();
        let half = k.from_rational(&ratio(1, 2));
        let half_i = k.scale(&i, &ratio(1, 2));
        let expected = MatrixL::from_rows(vec![
            vec![half.clone(), half],
            vec![k.neg(&half_i), half_i],
        ])
        .unwrap();
        let inv = v.inverse(&k).unwrap();
        assert_eq!(inv, expected);
        assert!(inv.mul(&k, &v).unwrap().is_identity(&k));
    }

    #[test]
    fn singular_detected() {
        let q = RationalField;
        let m = MatrixQ::from_rows(vec![vec![ratio(1, 1), ratio(2, 1)], vec![ratio(2, 1), ratio(4, 1)]]).unwrap();
        assert_eq!(m.inverse(&q), Err(Error::Singular));
        assert_eq!(m.rank(&q), 1);
        assert_eq!(m.kernel(&q).len(), 1);
    }

    #[test]
    fn charpoly_of_rotation() {
        let q = RationalField;
        let m = MatrixQ::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]).unwrap();
        assert_eq!(m.charpoly(&q).unwrap(), vec![rat(1), rat(0), rat(1)]);
        assert_eq!(m.minpoly_degree(&q).unwrap(), 2);
        assert_eq!(MatrixQ::identity(&q, 3).minpoly_degree(&q).unwrap(), 1);
    }

    fn arb_matrix() -> impl Strategy<Value = MatrixL> {
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec((-3i64..=3, -3i64..=3), n * n).prop_map(move |v| {
                let k = gaussian();
                let entries: Vec<FieldElem> = v
                    .into_iter()
                    .map(|(a, b)| k.elem(vec![rat(a), rat(b)]).unwrap())
                    .collect();
                MatrixL::from_fn(n, n, |i, j| entries[i * n + j].clone())
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_times_matrix_is_identity(m in arb_matrix()) {
            let k = gaussian();
            match m.inverse(&k) {
                Ok(inv) => {
                    prop_assert!(inv.mul(&k, &m).unwrap().is_identity(&k));
                    prop_assert!(m.mul(&k, &inv).unwrap().is_identity(&k));
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::Singular);
                    prop_assert!(m.rank(&k) < m.rows());
                }
            }
        }
    }
}
