//! Sparse multivariate polynomials over Q in the loop Cartan symbols.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{FieldElem, PolyQ, Rational};

/// Variables. Roots are named by free-form tags such as `a1` or `a1+a2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    /// `h_{α,s}`, `s ≥ 1`.
    H { root: String, s: u32 },
    /// `Λ_{α,r}`, `r ≥ 1`.
    Lambda { root: String, r: u32 },
    /// `h_α` after evaluation.
    HEval { root: String },
    /// A symbolic evaluation point `a`.
    Point,
    /// The generator `θ` of a number field.
    Theta,
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::H { root, s } => write!(f, "h[{root},{s}]"),
            Sym::Lambda { root, r } => write!(f, "L[{root},{r}]"),
            Sym::HEval { root } => write!(f, "h[{root}]"),
            Sym::Point => write!(f, "a"),
            Sym::Theta => write!(f, "t"),
        }
    }
}

/// Exponent map of a monomial, zero exponents never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub BTreeMap<Sym, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(s: Sym, e: u32) -> Self {
        let mut m = BTreeMap::new();
        if e > 0 {
            m.insert(s, e);
        }
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (s, e) in &other.0 {
            *m.entry(s.clone()).or_insert(0) += e;
        }
        Monomial(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SymPoly { terms }
    }

    pub fn var(s: Sym) -> Self {
        Self::term(Rational::one(), Monomial::var(s, 1))
    }

    pub fn h(root: &str, s: u32) -> Self {
        Self::var(Sym::H { root: root.to_string(), s })
    }

    pub fn lambda(root: &str, r: u32) -> Self {
        Self::var(Sym::Lambda { root: root.to_string(), r })
    }

    pub fn h_eval(root: &str) -> Self {
        Self::var(Sym::HEval { root: root.to_string() })
    }

    /// A number field element as a polynomial in `θ`.
    pub fn from_field_elem(a: &FieldElem) -> Self {
        let mut out = SymPoly::zero();
        for (k, c) in a.coords().iter().enumerate() {
            out = &out + &Self::term(c.clone(), Monomial::var(Sym::Theta, k as u32));
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        let mut out = SymPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Replaces each symbol for which `f` returns `Some` by that polynomial.
    pub fn substitute(&self, f: &impl Fn(&Sym) -> Option<SymPoly>) -> SymPoly {
        let mut cache: HashMap<(Sym, u32), SymPoly> = HashMap::new();
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = SymPoly::constant(c.clone());
            let mut kept = Monomial::one();
            for (s, &e) in &m.0 {
                match f(s) {
                    Some(p) => {
                        let pe = cache.entry((s.clone(), e)).or_insert_with(|| p.pow(e));
                        acc = &acc * pe;
                    }
                    None => {
                        kept.0.insert(s.clone(), e);
                    }
                }
            }
            out = &out + &acc.times_monomial(&kept);
        }
        out
    }

    fn times_monomial(&self, m: &Monomial) -> SymPoly {
        SymPoly { terms: self.terms.iter().map(|(k, v)| (k.times(m), v.clone())).collect() }
    }

    /// Reduces powers of `θ` modulo a monic polynomial.
    pub fn reduce_theta(&self, modulus: &PolyQ) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0.get(&Sym::Theta).copied().unwrap_or(0);
            let mut rest = m.clone();
            rest.0.remove(&Sym::Theta);
            let r = PolyQ::monomial(c.clone(), e as usize).rem(modulus);
            for (k, v) in r.coeffs().iter().enumerate() {
                let mut mono = rest.clone();
                if k > 0 {
                    mono.0.insert(Sym::Theta, k as u32);
                }
                out = &out + &SymPoly::term(v.clone(), mono);
            }
        }
        out
    }

    /// `binom(h, k) = h(h−1)⋯(h−k+1)/k!` in the variable `x`.
    pub fn binomial(x: &SymPoly, k: u32) -> SymPoly {
        let mut out = SymPoly::one();
        let mut fact = Rational::one();
        for j in 0..k {
            out = &out * &(x - &SymPoly::constant(Rational::from_integer(j.into())));
            fact *= Rational::from_integer((j + 1).into());
        }
        out.scale(&(Rational::one() / fact))
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;

    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(m);
            }
        }
        SymPoly { terms }
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;

    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;

    fn neg(self) -> SymPoly {
        SymPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;

    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let slot = terms.entry(ma.times(mb)).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SymPoly { terms }
    }
}

/// Terms in decreasing total degree, then by symbol order.
impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let neg = *c < Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else if abs.is_integer() {
                write!(f, "{abs}*{m}")?;
            } else {
                write!(f, "({abs})*{m}")?;
            }
        }
        Ok(())
    }
}
