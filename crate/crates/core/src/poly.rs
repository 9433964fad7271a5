//! Exact polynomial arithmetic over the rationals.
//!
//! [`Polynomial`] is a sparse polynomial in the simple-root symbols
//! `a1..ad`; [`PolyT`] is a dense univariate polynomial in the single
//! parameter `t` obtained by sending every simple root to `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

pub type Exponent = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: String },
    #[error("malformed polynomial JSON: {0}")]
    BadJson(String),
}

pub type Result<T, E = PolyError> = std::result::Result<T, E>;

/// Sparse polynomial in `nvars` variables with rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

/// Product that skips gcd normalization when both factors are integers.
fn rat_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(c.into()))
    }

    /// The variable `a{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, [(e, BigRational::one())])
    }

    /// The linear form `sum_i coeffs[i] a_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs.iter().enumerate().map(|(i, &c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, BigRational::from_integer(c.into()))
            }),
        )
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must equal the number of variables");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let x = o.get_mut();
                if x.is_integer() && c.is_integer() {
                    *x = BigRational::from_integer(x.numer() + c.numer());
                } else {
                    *x += c;
                }
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// True for zero or for a polynomial homogeneous of degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(PolyError::RankMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, rat_mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// In-place `self += other * factor`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Self) {
        assert_eq!(self.nvars, other.nvars);
        for (ea, ca) in &other.terms {
            for (eb, cb) in &factor.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.add_term(e, rat_mul(ca, cb));
            }
        }
    }

    /// Substitutes `a_i -> t` for every variable.
    pub fn specialize_to_t(&self) -> PolyT {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (e, c) in &self.terms {
            let d = e.iter().sum::<u32>() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] += c;
        }
        PolyT::from_coeffs(coeffs)
    }

    /// Every coefficient in the simple-root monomial basis is nonnegative.
    pub fn is_graham_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / den`, by leading-term reduction in lex order.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        self.check_rank(den)?;
        let (lead_e, lead_c) = match den.terms.iter().next_back() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.nvars);
        let mut remainder = Self::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lead_e).all(|(x, y)| x >= y) {
                let qe: Exponent = e.iter().zip(&lead_e).map(|(x, y)| x - y).collect();
                let qc = if lead_c.is_integer() && c.is_integer() && (c.numer() % lead_c.numer()).is_zero() {
                    BigRational::from_integer(c.numer() / lead_c.numer())
                } else {
                    c / &lead_c
                };
                let term = Self::from_terms(self.nvars, [(qe.clone(), qc.clone())]);
                rem.add_scaled(den, &term.neg());
                quotient.add_term(qe, qc);
            } else {
                rem.terms.remove(&e);
                remainder.add_term(e, c);
            }
        }
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(PolyError::NotDivisible {
                remainder: remainder.to_string(),
            })
        }
    }

    /// JSON form `[[exponents, numerator, denominator], ...]` in ascending
    /// exponent order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!([e, bigint_json(c.numer()), bigint_json(c.denom())]))
                .collect(),
        )
    }

    pub fn from_json(nvars: usize, v: &Value) -> Result<Self> {
        let bad = |m: &str| PolyError::BadJson(m.to_string());
        let arr = v.as_array().ok_or_else(|| bad("expected an array of terms"))?;
        let mut p = Self::zero(nvars);
        for t in arr {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("term must be [exponents, num, den]"))?;
            let e: Exponent = t[0]
                .as_array()
                .ok_or_else(|| bad("exponents must be an array"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| bad("exponents must be nonnegative integers"))?;
            if e.len() != nvars {
                return Err(PolyError::RankMismatch(e.len(), nvars));
            }
            let num = json_bigint(&t[1]).ok_or_else(|| bad("bad numerator"))?;
            let den = json_bigint(&t[2]).ok_or_else(|| bad("bad denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            p.add_term(e, BigRational::new(num, den));
        }
        Ok(p)
    }
}

fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn json_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigRational, first: bool, has_monomial: bool) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    let mag = c.abs();
    if !has_monomial {
        write!(f, "{mag}")
    } else if mag.is_one() {
        Ok(())
    } else {
        write!(f, "{mag}*")
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text, e.g. `a1*a2 + a1^2`, terms in ascending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("a{}", i + 1) } else { format!("a{}^{x}", i + 1) })
                .collect();
            write_coeff(f, c, k == 0, !factors.is_empty())?;
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial rank mismatch")
    }
}
impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial rank mismatch")
    }
}
impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial rank mismatch")
    }
}
impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Which arithmetic operation [`poly_arith`] performs.
#[derive(Debug, Clone)]
pub enum PolyOp<'a> {
    Add(&'a Polynomial),
    Mul(&'a Polynomial),
    Scale(&'a BigRational),
}

/// Add, multiply or scale, rejecting operands of different rank.
pub fn poly_arith(a: &Polynomial, op: PolyOp<'_>) -> Result<Polynomial> {
    match op {
        PolyOp::Add(b) => a.checked_add(b),
        PolyOp::Mul(b) => a.checked_mul(b),
        PolyOp::Scale(c) => Ok(a.scale(c)),
    }
}

/// Univariate polynomial in `t`; `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyT {
    coeffs: Vec<BigRational>,
}

impl PolyT {
    pub fn zero() -> Self {
        PolyT { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `c t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyT { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `(power, coefficient)` if exactly one coefficient is nonzero.
    pub fn as_monomial(&self) -> Option<(usize, &BigRational)> {
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let first = nz.next()?;
        nz.next().is_none().then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k == d || c.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// In-place `self += a * b`.
    pub fn add_product(&mut self, a: &PolyT, b: &PolyT) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let n = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < n {
            self.coeffs.resize(n, BigRational::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j] += x * y;
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Exact quotient by long division.
    pub fn divide_exact(&self, den: &PolyT) -> Result<PolyT> {
        let dd = den.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(PolyT::zero());
        };
        if nd < dd {
            return Err(PolyError::NotDivisible {
                remainder: self.to_string(),
            });
        }
        let mut q = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            q[k] = c;
        }
        let r = PolyT::from_coeffs(rem);
        if r.is_zero() {
            Ok(PolyT::from_coeffs(q))
        } else {
            Err(PolyError::NotDivisible {
                remainder: r.to_string(),
            })
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| json!([k, bigint_json(c.numer()), bigint_json(c.denom())]))
                .collect(),
        )
    }
}

impl fmt::Display for PolyT {
    /// Canonical text in ascending powers, e.g. `2*t^1`, `t^2`, `3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_coeff(f, c, first, k > 0)?;
            if k > 0 {
                write!(f, "t^{k}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyT({self})")
    }
}

impl Add for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}
impl Sub for &PolyT {
    type Output = PolyT;
    fn sub(self, rhs: &PolyT) -> PolyT {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyT::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}
impl Mul for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        let mut out = PolyT::zero();
        out.add_product(self, rhs);
        out
    }
}
impl Neg for &PolyT {
    type Output = PolyT;
    fn neg(self) -> PolyT {
        PolyT::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Coefficient ring for fixed-point restrictions: anything a root can be
/// mapped into, with addition and multiplication.
pub trait WeightRing: Clone + Send + Sync {
    fn zero(rank: usize) -> Self;
    fn one(rank: usize) -> Self;
    /// Image of the root with the given simple-root coordinates.
    fn from_root(coeffs: &[i64]) -> Self;
    fn is_zero(&self) -> bool;
    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self);
}

impl WeightRing for Polynomial {
    fn zero(rank: usize) -> Self {
        Polynomial::zero(rank)
    }
    fn one(rank: usize) -> Self {
        Polynomial::one(rank)
    }
    fn from_root(coeffs: &[i64]) -> Self {
        Polynomial::linear(coeffs)
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        self.add_scaled(a, b);
    }
}

impl WeightRing for PolyT {
    fn zero(_rank: usize) -> Self {
        PolyT::zero()
    }
    fn one(_rank: usize) -> Self {
        PolyT::one()
    }
    fn from_root(coeffs: &[i64]) -> Self {
        PolyT::monomial(BigRational::from_integer(coeffs.iter().sum::<i64>().into()), 1)
    }
    fn is_zero(&self) -> bool {
        PolyT::is_zero(self)
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        PolyT::add_product(self, a, b);
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> Polynomial {
        Polynomial::var(2, i - 1)
    }

    #[test]
    fn arith_examples() {
        let a3 = &a(1) + &a(2);
        let p = &a(1) * &a3;
        assert_eq!(p.to_string(), "a1*a2 + a1^2");
        assert_eq!(&p * &Polynomial::one(2), p);
        let diff = &(&a(1) + &a(2)) * &(&a(1) - &a(2));
        assert_eq!(diff, &(&a(1) * &a(1)) - &(&a(2) * &a(2)));
        assert_eq!(
            poly_arith(&a(1), PolyOp::Add(&Polynomial::var(3, 0))),
            Err(PolyError::RankMismatch(2, 3))
        );
        assert_eq!(poly_arith(&a(1), PolyOp::Scale(&rat(-2))).unwrap().to_string(), "-2*a1");
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(a(1).specialize_to_t(), PolyT::t());
        assert_eq!((&a(1) + &a(2)).specialize_to_t(), PolyT::from_int_coeffs(&[0, 2]));
        let p = &a(1) * &(&a(1) + &a(2));
        assert_eq!(p.specialize_to_t(), PolyT::from_int_coeffs(&[0, 0, 2]));
    }

    #[test]
    fn positivity_examples() {
        assert!((&a(1) + &a(2)).is_graham_positive());
        assert!(!(&a(1) - &a(2)).is_graham_positive());
        assert!(Polynomial::zero(2).is_graham_positive());
    }

    #[test]
    fn division_examples() {
        let num = &(&a(1) * &a(1)) + &(&a(1) * &a(2));
        assert_eq!(num.divide_exact(&a(1)).unwrap(), &a(1) + &a(2));
        let two_t2 = PolyT::from_int_coeffs(&[0, 0, 2]);
        assert_eq!(two_t2.divide_exact(&PolyT::t()).unwrap(), PolyT::from_int_coeffs(&[0, 2]));
        assert!(matches!(
            (&a(1) * &a(1)).divide_exact(&a(2)),
            Err(PolyError::NotDivisible { .. })
        ));
        assert_eq!(a(1).divide_exact(&Polynomial::zero(2)), Err(PolyError::DivisionByZero));
        assert_eq!(PolyT::t().divide_exact(&PolyT::zero()), Err(PolyError::DivisionByZero));
        assert!(matches!(
            PolyT::from_int_coeffs(&[1, 1]).divide_exact(&PolyT::t()),
            Err(PolyError::NotDivisible { .. })
        ));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!(Polynomial::one(2).to_string(), "1");
        assert_eq!((&a(1) - &a(2)).to_string(), "-a2 + a1");
        let half = Polynomial::constant(2, BigRational::new(1.into(), 2.into()));
        assert_eq!((&half * &a(1)).to_string(), "1/2*a1");
        assert_eq!(PolyT::from_int_coeffs(&[0, 2]).to_string(), "2*t^1");
        assert_eq!(PolyT::from_int_coeffs(&[2]).to_string(), "2");
        assert_eq!(PolyT::from_int_coeffs(&[0, 1]).to_string(), "t^1");
        assert_eq!(PolyT::from_int_coeffs(&[1, -3]).to_string(), "1 - 3*t^1");
    }

    #[test]
    fn json_round_trip() {
        let p = &(&a(1) * &a(1)) - &a(2).scale(&BigRational::new(3.into(), 4.into()));
        let j = p.to_json();
        assert_eq!(j.to_string(), "[[[0,1],-3,4],[[2,0],1,1]]");
        assert_eq!(Polynomial::from_json(2, &j).unwrap(), p);
        assert!(Polynomial::from_json(3, &j).is_err());
        assert!(Polynomial::from_json(2, &json!([[[1, 0], 1, 0]])).is_err());
    }
}
