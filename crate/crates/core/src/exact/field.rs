//! Number fields `Q[θ]/(m)` and the arithmetic trait shared with Q.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::PolyQ;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Exact field arithmetic on some element type.
///
/// Lets the linear algebra in [`super::matrix`] run over Q and over a number
/// field with the same code.
pub trait FieldOps {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_rational(&self, r: &Rational) -> Self::Elem;
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct RationalField;

impl FieldOps for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, r: &Rational) -> Rational {
        r.clone()
    }
}

/// An element of `Q[θ]/(m)`, stored as its canonical coordinate vector in
/// the power basis `1, θ, …, θ^{n-1}`.
///
/// Ordering is lexicographic on the coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    coords: Vec<Rational>,
}

impl FieldElem {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn to_poly(&self) -> PolyQ {
        PolyQ::new(self.coords.clone())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "({c})t")?,
                _ if c.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Q[θ]/(m)` for a monic modulus `m` of degree `n ≥ 1`.
///
/// Irreducibility of `m` is not checked here; a reducible modulus surfaces
/// as [`Error::ZeroDivisor`] on the first inversion of a zero divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: PolyQ,
    degree: usize,
    /// Reductions of θ^n, …, θ^{2n-2}, used by multiplication.
    high_powers: Vec<Vec<Rational>>,
}

impl NumberField {
    pub fn new(modulus: PolyQ) -> Result<Self> {
        let degree = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::InvalidModulus("degree must be at least 1".into())),
        };
        if !modulus.is_monic() {
            return Err(Error::InvalidModulus(format!("{modulus} is not monic")));
        }
        let mut high_powers = Vec::with_capacity(degree.saturating_sub(1));
        for k in degree..(2 * degree).saturating_sub(1) {
            let r = PolyQ::monomial(Rational::one(), k).rem(&modulus);
            high_powers.push(Self::pad(r.into_coeffs(), degree));
        }
        Ok(NumberField {
            modulus,
            degree,
            high_powers,
        })
    }

    fn pad(mut c: Vec<Rational>, n: usize) -> Vec<Rational> {
        c.resize(n, Rational::zero());
        c
    }

    pub fn modulus(&self) -> &PolyQ {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Canonical element from exactly `n` coordinates.
    pub fn elem(&self, coords: Vec<Rational>) -> Result<FieldElem> {
        if coords.len() != self.degree {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                self.degree,
                coords.len()
            )));
        }
        Ok(FieldElem { coords })
    }

    /// Reduces an arbitrary polynomial in θ.
    pub fn from_poly(&self, p: &PolyQ) -> FieldElem {
        FieldElem {
            coords: Self::pad(p.rem(&self.modulus).into_coeffs(), self.degree),
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        self.from_rational(&rat(n))
    }

    /// The generator θ (zero when the modulus is linear in θ with root 0).
    pub fn generator(&self) -> FieldElem {
        self.from_poly(&PolyQ::from_i64(&[0, 1]))
    }

    pub fn scale(&self, a: &FieldElem, c: &Rational) -> FieldElem {
        FieldElem {
            coords: a.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, a: &FieldElem, e: u32) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates a rational polynomial at a field element (Horner).
    pub fn eval_poly(&self, p: &PolyQ, x: &FieldElem) -> FieldElem {
        p.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            let t = self.mul(&acc, x);
            self.add(&t, &self.from_rational(c))
        })
    }
}

impl FieldOps for NumberField {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        FieldElem {
            coords: vec![Rational::zero(); self.degree],
        }
    }

    fn one(&self) -> FieldElem {
        self.from_rational(&Rational::one())
    }

    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }

    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        }
    }

    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let n = self.degree;
        let mut full = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        let mut coords: Vec<Rational> = full[..n].to_vec();
        for (k, c) in full[n..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dst, r) in coords.iter_mut().zip(&self.high_powers[k]) {
                *dst += c * r;
            }
        }
        FieldElem { coords }
    }

    fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem {
            coords: a.coords.iter().map(|x| -x).collect(),
        }
    }

    /// Inverse via extended Euclid against the modulus.
    fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = PolyQ::xgcd(&a.to_poly(), &self.modulus);
        if g.degree() != Some(0) {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.from_poly(&s))
    }

    fn is_zero(&self, a: &FieldElem) -> bool {
        a.is_zero()
    }

    fn from_rational(&self, r: &Rational) -> FieldElem {
        let mut coords = vec![Rational::zero(); self.degree];
        coords[0] = r.clone();
        FieldElem { coords }
    }
}
