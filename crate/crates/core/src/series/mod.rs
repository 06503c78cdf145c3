//! Truncated power series in `u` whose coefficients are polynomials in the
//! loop Cartan symbols `h_{α,s}`, and the generating-function identities
//! relating them to the `Λ_{α,r}`.

mod sympoly;

use std::fmt;

use num_traits::Zero;

pub use sympoly::{Monomial, Sym, SymPoly};

use crate::error::{Error, Result};
use crate::exact::{rat, ratio, FieldElem, NumberField, Rational};
use crate::rootsystem::RootSystem;

pub const DEFAULT_ORDER: usize = 8;

/// Coefficients of `u^0, …, u^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<SymPoly>,
}

impl TruncSeries {
    /// Pads with zeros or truncates to `order + 1` coefficients.
    pub fn new(order: usize, mut coeffs: Vec<SymPoly>) -> Self {
        coeffs.resize(order + 1, SymPoly::zero());
        TruncSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![SymPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[SymPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> &SymPoly {
        &self.coeffs[r]
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order().min(other.order());
        let mut out = vec![SymPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> TruncSeries {
        let mut out = TruncSeries::one(self.order());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn map(&self, f: impl Fn(&SymPoly) -> SymPoly) -> TruncSeries {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn require_unit_constant(&self) -> Result<()> {
        if self.coeffs[0] == SymPoly::one() {
            Ok(())
        } else {
            Err(Error::BadConstantTerm)
        }
    }

    /// `exp(x)` for `x` with zero constant term.
    pub fn exp(&self) -> Result<TruncSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm);
        }
        // n E_n = Σ_{k=1}^n k x_k E_{n−k}
        let n = self.order();
        let mut e = vec![SymPoly::one()];
        for m in 1..=n {
            let mut acc = SymPoly::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &e[m - k]).scale(&rat(k as i64));
            }
            e.push(acc.scale(&ratio(1, m as i64)));
        }
        Ok(TruncSeries { coeffs: e })
    }

    /// `log(y)` for `y` with constant term 1.
    pub fn log(&self) -> Result<TruncSeries> {
        self.require_unit_constant()?;
        // n L_n = n y_n − Σ_{k=1}^{n−1} k L_k y_{n−k}
        let n = self.order();
        let mut l = vec![SymPoly::zero()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&rat(m as i64));
            for k in 1..m {
                acc = &acc - &(&l[k] * &self.coeffs[m - k]).scale(&rat(k as i64));
            }
            l.push(acc.scale(&ratio(1, m as i64)));
        }
        Ok(TruncSeries { coeffs: l })
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<TruncSeries> {
        self.require_unit_constant()?;
        let n = self.order();
        let mut g = vec![SymPoly::one()];
        for m in 1..=n {
            let mut acc = SymPoly::zero();
            for k in 1..=m {
                acc = &acc - &(&self.coeffs[k] * &g[m - k]);
            }
            g.push(acc);
        }
        Ok(TruncSeries { coeffs: g })
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match r {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{r}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.order() + 1)
    }
}

/// Label of a positive root by its simple-root coordinates, e.g. `a1+2a2`.
pub fn root_tag(root: &[i64]) -> String {
    let parts: Vec<String> = root
        .iter()
        .enumerate()
        .filter(|(_, &m)| m != 0)
        .map(|(i, &m)| if m == 1 { format!("a{}", i + 1) } else { format!("{m}a{}", i + 1) })
        .collect();
    parts.join("+")
}

/// `Λ_α(u) = exp(−Σ_{s≥1} h_{α,s} u^s / s)`.
pub fn lambda_from_h(root: &str, order: usize) -> TruncSeries {
    let mut x = vec![SymPoly::zero()];
    for s in 1..=order {
        x.push(SymPoly::h(root, s as u32).scale(&ratio(-1, s as i64)));
    }
    TruncSeries::new(order, x).exp().expect("zero constant term")
}

/// `1 + Σ_r Λ_{α,r} u^r` with the `Λ_{α,r}` as free symbols.
pub fn generic_lambda_series(root: &str, order: usize) -> TruncSeries {
    let mut c = vec![SymPoly::one()];
    for r in 1..=order {
        c.push(SymPoly::lambda(root, r as u32));
    }
    TruncSeries::new(order, c)
}

/// `h_{α,s} = −s·[u^s] log Λ_α(u)` for `s = 1..=N`.
pub fn h_from_lambda(series: &TruncSeries) -> Result<Vec<SymPoly>> {
    let l = series.log()?;
    Ok((1..=series.order())
        .map(|s| l.coeff(s).scale(&rat(-(s as i64))))
        .collect())
}

/// Checks that `h ↦ Λ` and `Λ ↦ h` are mutually inverse substitutions up to
/// order `N`.
pub fn round_trip_check(root: &str, order: usize) -> Result<bool> {
    let lam = lambda_from_h(root, order);
    let h_in_lambda = h_from_lambda(&generic_lambda_series(root, order))?;

    let lam_sub = |s: &Sym| match s {
        Sym::Lambda { root: r, r: k } if r == root => Some(lam.coeff(*k as usize).clone()),
        _ => None,
    };
    for (s, h) in h_in_lambda.iter().enumerate() {
        if h.substitute(&lam_sub) != SymPoly::h(root, s as u32 + 1) {
            return Ok(false);
        }
    }
    let h_sub = |s: &Sym| match s {
        Sym::H { root: r, s: k } if r == root => Some(h_in_lambda[*k as usize - 1].clone()),
        _ => None,
    };
    for r in 1..=order {
        if lam.coeff(r).substitute(&h_sub) != SymPoly::lambda(root, r as u32) {
            return Ok(false);
        }
    }
    Ok(h_from_lambda(&lam)?
        .iter()
        .enumerate()
        .all(|(s, h)| *h == SymPoly::h(root, s as u32 + 1)))
}

/// `∏_i Λ_{α_i}(u)^{m_i^∨}`.
pub fn lambda_alpha_from_simples(rs: &RootSystem, root: &[i64], order: usize) -> Result<TruncSeries> {
    let cc = rs.coroot_coeffs(root)?;
    let mut out = TruncSeries::one(order);
    for (i, &m) in cc.iter().enumerate() {
        if m > 0 {
            out = out.mul(&lambda_from_h(&format!("a{}", i + 1), order).pow(m as u32));
        }
    }
    Ok(out)
}

/// Substitutes `h_{α,s} = Σ_i m_i^∨ h_{α_i,s}` into `Λ_α(u)` and compares
/// with the product of the simple-root series.
pub fn lambda_alpha_check(rs: &RootSystem, root: &[i64], order: usize) -> Result<bool> {
    let cc = rs.coroot_coeffs(root)?;
    let tag = root_tag(root);
    let direct = lambda_from_h(&tag, order);
    let sub = |s: &Sym| match s {
        Sym::H { root: r, s: k } if *r == tag => {
            let mut acc = SymPoly::zero();
            for (i, &m) in cc.iter().enumerate() {
                acc = &acc + &SymPoly::h(&format!("a{}", i + 1), *k).scale(&rat(m));
            }
            Some(acc)
        }
        _ => None,
    };
    let substituted = direct.map(|c| c.substitute(&sub));
    Ok(substituted == lambda_alpha_from_simples(rs, root, order)?)
}

/// `τ_k`: `h_{α,s} ↦ h_{α,ks}`.
pub fn twist(series: &TruncSeries, k: u32) -> Result<TruncSeries> {
    if k == 0 {
        return Err(Error::CheckFailed("twist by k = 0".into()));
    }
    Ok(series.map(|c| {
        c.substitute(&|s| match s {
            Sym::H { root, s } => Some(SymPoly::h(root, s * k)),
            _ => None,
        })
    }))
}

/// An evaluation point for `ev_a`.
#[derive(Clone, Debug)]
pub enum EvalPoint {
    Rational(Rational),
    /// A free symbol `a`.
    Symbolic,
    /// An element of a number field; powers of `θ` are reduced.
    Field(NumberField, FieldElem),
}

impl EvalPoint {
    fn as_poly(&self) -> SymPoly {
        match self {
            EvalPoint::Rational(q) => SymPoly::constant(q.clone()),
            EvalPoint::Symbolic => SymPoly::var(Sym::Point),
            EvalPoint::Field(_, a) => SymPoly::from_field_elem(a),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            EvalPoint::Rational(q) => q.is_zero(),
            EvalPoint::Symbolic => false,
            EvalPoint::Field(_, a) => a.is_zero(),
        }
    }

    fn reduce(&self, p: &SymPoly) -> SymPoly {
        match self {
            EvalPoint::Field(f, _) => p.reduce_theta(f.modulus()),
            _ => p.clone(),
        }
    }
}

/// `ev_a`: `h_{α,s} ↦ a^s h_α` for the given root.
pub fn eval_at(series: &TruncSeries, root: &str, point: &EvalPoint) -> Result<TruncSeries> {
    if point.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let a = point.as_poly();
    let h = SymPoly::h_eval(root);
    Ok(series.map(|c| {
        let out = c.substitute(&|s| match s {
            Sym::H { root: r, s } if r == root => Some(&point.reduce(&a.pow(*s)) * &h),
            _ => None,
        });
        point.reduce(&out)
    }))
}

/// `ev_a(Λ_{α,r}) = (−a)^r binom(h_α, r)`.
pub fn ev_lambda_check(root: &str, order: usize, point: &EvalPoint, r: usize) -> Result<bool> {
    if r > order {
        return Err(Error::CheckFailed(format!("coefficient {r} beyond order {order}")));
    }
    let ev = eval_at(&lambda_from_h(root, order), root, point)?;
    let minus_a = -&point.as_poly();
    let expected = point.reduce(&(&minus_a.pow(r as u32) * &SymPoly::binomial(&SymPoly::h_eval(root), r as u32)));
    Ok(*ev.coeff(r) == expected)
}

/// The antipode on `Λ`-series: the multiplicative inverse.
pub fn series_inverse(series: &TruncSeries) -> Result<TruncSeries> {
    series.inverse()
}

/// `H_α(u) = ev_{−1}(Λ_α(u))`, checked against `Σ_k binom(h_α, k) u^k`.
pub fn h_series(root: &str, order: usize) -> Result<TruncSeries> {
    let out = eval_at(&lambda_from_h(root, order), root, &EvalPoint::Rational(rat(-1)))?;
    let h = SymPoly::h_eval(root);
    for k in 0..=order {
        if *out.coeff(k) != SymPoly::binomial(&h, k as u32) {
            return Err(Error::CheckFailed(format!("coefficient {k} of H(u) is not binom(h, {k})")));
        }
    }
    Ok(out)
}

/// One line of the series verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
}

/// Runs every series identity at the given order for one root system.
pub fn check_suite(rs: &RootSystem, order: usize) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let mut push = |name: String, passed: bool| out.push(CheckLine { name, passed });
    let tag = "a1";
    let lam = lambda_from_h(tag, order);

    push(format!("round trip h <-> Lambda to order {order}"), round_trip_check(tag, order)?);

    let inv = series_inverse(&lam)?;
    push("Lambda * S(Lambda) = 1".into(), lam.mul(&inv) == TruncSeries::one(order));
    push("S(S(Lambda)) = Lambda".into(), series_inverse(&inv)? == lam);

    push(format!("H(u) coefficients are binomials to order {order}"), h_series(tag, order).is_ok());

    let rmax = order.min(6);
    let mut symbolic = true;
    let mut sampled = true;
    for r in 0..=rmax {
        symbolic &= ev_lambda_check(tag, order, &EvalPoint::Symbolic, r)?;
        for q in [rat(1), rat(-2), ratio(3, 5)] {
            sampled &= ev_lambda_check(tag, order, &EvalPoint::Rational(q), r)?;
        }
    }
    push(format!("ev_a(Lambda_r) = (-a)^r binom(h, r) for r <= {rmax}, symbolic a"), symbolic);
    push(format!("ev_a(Lambda_r) = (-a)^r binom(h, r) for r <= {rmax}, sampled a"), sampled);

    for root in rs.positive_roots() {
        push(
            format!("Lambda_{} from simple roots ({})", root_tag(root), rs.lie_type()),
            lambda_alpha_check(rs, root, order)?,
        );
    }
    Ok(out)
}
