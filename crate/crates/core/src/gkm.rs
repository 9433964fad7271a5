//! Equivariant Schubert calculus on `G/B` by localization at the torus-fixed
//! points, which are indexed by the Weyl group.
//!
//! A class is stored as its vector of restrictions, one polynomial per Weyl
//! group element. Schubert classes come from Billey's subword formula.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::{PolyError, Polynomial, WeightRing};
use crate::rootsys::{RootSystem, WeylElt, WeylGroup};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GkmError {
    #[error("classes live on different root systems")]
    RankMismatch,
    #[error("value at {at} is not homogeneous of degree {degree}")]
    Inhomogeneous { at: String, degree: u32 },
    #[error("class is not in the span of the Schubert basis: {0}")]
    NotInSpan(String),
    #[error("integral is not a polynomial: {0}")]
    NonPolynomialResult(String),
    #[error("structure constant c[{u}, {v}; {w}] = {coefficient} is not Graham positive")]
    PositivityViolation {
        u: String,
        v: String,
        w: String,
        coefficient: String,
    },
    #[error("ordinary structure constant c[{u}, {v}; {w}] = {value} is not an integer")]
    NonIntegral {
        u: String,
        v: String,
        w: String,
        value: String,
    },
    #[error("element {0} does not belong to this Weyl group")]
    UnknownElement(String),
    #[error("malformed class JSON: {0}")]
    BadJson(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T, E = GkmError> = std::result::Result<T, E>;

/// Restrictions `σ_v|_w` for every `v`, at the fixed point `w` whose reduced
/// word is `word`.
///
/// Runs Billey's formula as a dynamic program over the letters of `word`:
/// after processing a prefix, entry `x` holds the sum over subwords of the
/// prefix that are reduced words for `x`, weighted by the product of the
/// roots `s_{i1}...s_{i(j-1)}(α_{ij})` at the chosen positions.
pub fn restriction_column<R: WeightRing>(group: &WeylGroup, word: &[usize]) -> Vec<R> {
    let rs = group.root_system();
    let rank = rs.rank();
    let mut column = vec![R::zero(rank); group.len()];
    column[group.identity_index()] = R::one(rank);
    let mut prefix = group.identity_index();
    for &i in word {
        let image = group.element(prefix).action()[rs.simple_root_index(i) as usize];
        let weight = R::from_root(rs.root(image).coeffs());
        // Targets x s_i are strictly longer than x, hence have larger indices;
        // walking downwards reads every source before it is overwritten.
        for x in (0..group.len()).rev() {
            if column[x].is_zero() || group.is_right_descent(x, i) {
                continue;
            }
            let y = group.right_mul(x, i);
            let (lo, hi) = column.split_at_mut(y);
            hi[0].add_product(&lo[x], &weight);
        }
        prefix = group.right_mul(prefix, i);
    }
    column
}

/// Persistent storage for restriction columns, keyed by the fixed point.
pub trait RestrictionStore: Send + Sync {
    fn load(&self, group: &WeylGroup, w: usize) -> Option<Vec<Polynomial>>;
    fn store(&self, group: &WeylGroup, w: usize, column: &[Polynomial]);
}

/// A class in equivariant cohomology of `G/B`, given by its restrictions to
/// every fixed point.
#[derive(Clone)]
pub struct LocalizedClass {
    group: Arc<WeylGroup>,
    degree: u32,
    values: Vec<Polynomial>,
}

impl PartialEq for LocalizedClass {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.values == other.values
    }
}

impl std::fmt::Debug for LocalizedClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for (w, p) in self.support() {
            m.entry(&self.group.element(w).word_string(), &p.to_string());
        }
        m.finish()
    }
}

impl LocalizedClass {
    /// Builds a class from one value per Weyl element (in enumeration
    /// order), checking that every value is homogeneous of `degree`.
    pub fn new(group: Arc<WeylGroup>, degree: u32, values: Vec<Polynomial>) -> Result<Self> {
        assert_eq!(values.len(), group.len(), "one value per Weyl element");
        let rank = group.root_system().rank();
        for (w, p) in values.iter().enumerate() {
            if p.nvars() != rank {
                return Err(GkmError::RankMismatch);
            }
            if !p.is_homogeneous_of(degree) {
                return Err(GkmError::Inhomogeneous {
                    at: group.element(w).word_string(),
                    degree,
                });
            }
        }
        Ok(LocalizedClass {
            group,
            degree,
            values,
        })
    }

    /// Builds a class from its nonzero values; the degree is read off them.
    pub fn from_sparse(
        group: Arc<WeylGroup>,
        values: impl IntoIterator<Item = (WeylElt, Polynomial)>,
    ) -> Result<Self> {
        let rank = group.root_system().rank();
        let mut dense = vec![Polynomial::zero(rank); group.len()];
        let mut degree = None;
        for (w, p) in values {
            let idx = group
                .index_of(&w)
                .ok_or_else(|| GkmError::UnknownElement(w.word_string()))?;
            if degree.is_none() {
                degree = p.homogeneous_degree();
            }
            dense[idx] = p;
        }
        Self::new(group, degree.unwrap_or(0), dense)
    }

    pub fn constant(group: Arc<WeylGroup>, c: Polynomial) -> Result<Self> {
        let degree = c.homogeneous_degree().unwrap_or(0);
        let values = vec![c; group.len()];
        Self::new(group, degree, values)
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn value(&self, w: usize) -> &Polynomial {
        &self.values[w]
    }

    pub fn at(&self, w: &WeylElt) -> Option<&Polynomial> {
        self.group.index_of(w).map(|i| &self.values[i])
    }

    /// Nonzero values with their element indices.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.values.iter().enumerate().filter(|(_, p)| !p.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let mut values = serde_json::Map::new();
        for (w, p) in self.support() {
            values.insert(self.group.element(w).word_string(), p.to_json());
        }
        json!({
            "type": type_json(self.group.root_system()),
            "degree": self.degree,
            "values": values,
        })
    }

    pub fn from_json(group: Arc<WeylGroup>, v: &Value) -> Result<Self> {
        let bad = |m: &str| GkmError::BadJson(m.to_string());
        let rs = group.root_system().clone();
        if let Some(t) = v.get("type") {
            if *t != type_json(&rs) && !t.is_null() {
                return Err(bad("type does not match the root system"));
            }
        }
        let degree = v
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing degree"))? as u32;
        let values = v
            .get("values")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing values object"))?;
        let mut dense = vec![Polynomial::zero(rs.rank()); group.len()];
        for (key, pv) in values {
            let w = rs
                .parse_element(key)
                .map_err(|e| GkmError::BadJson(e.to_string()))?;
            let idx = group.index_of(&w).ok_or_else(|| GkmError::UnknownElement(key.clone()))?;
            dense[idx] = Polynomial::from_json(rs.rank(), pv)?;
        }
        Self::new(group, degree, dense)
    }
}

/// JSON identification of a root system: its label, or its Cartan matrix.
pub fn type_json(rs: &RootSystem) -> Value {
    match rs.type_label() {
        Some(l) => json!(l),
        None => json!(rs.cartan()),
    }
}

/// Structure constants `c_{uv}^w` keyed by element indices.
#[derive(Clone, Debug)]
pub struct StructTable {
    pub group: Arc<WeylGroup>,
    pub entries: BTreeMap<(usize, usize, usize), Polynomial>,
}

/// Localization engine for one Weyl group, with memoized restrictions.
pub struct SchubertCalculus {
    group: Arc<WeylGroup>,
    columns: Vec<OnceLock<Arc<[Polynomial]>>>,
    store: Option<Arc<dyn RestrictionStore>>,
    top_product: OnceLock<Polynomial>,
}

impl SchubertCalculus {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let columns = (0..group.len()).map(|_| OnceLock::new()).collect();
        SchubertCalculus {
            group,
            columns,
            store: None,
            top_product: OnceLock::new(),
        }
    }

    pub fn with_store(mut self, store: Arc<dyn RestrictionStore>) -> Self {
        self.store = Some(store);
        self
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.group.root_system()
    }

    fn rank(&self) -> usize {
        self.root_system().rank()
    }

    pub fn index(&self, w: &WeylElt) -> Result<usize> {
        self.group
            .index_of(w)
            .ok_or_else(|| GkmError::UnknownElement(w.word_string()))
    }

    /// All restrictions at the fixed point `w`: entry `v` is `σ_v|_w`.
    pub fn column(&self, w: usize) -> Arc<[Polynomial]> {
        self.columns[w]
            .get_or_init(|| {
                if let Some(store) = &self.store {
                    if let Some(col) = store.load(&self.group, w) {
                        if col.len() == self.group.len() && col.iter().all(|p| p.nvars() == self.rank()) {
                            return col.into();
                        }
                    }
                }
                let col: Vec<Polynomial> = restriction_column(&self.group, self.group.element(w).word());
                if let Some(store) = &self.store {
                    store.store(&self.group, w, &col);
                }
                col.into()
            })
            .clone()
    }

    /// Computes every column, in parallel.
    pub fn precompute(&self) {
        (0..self.group.len()).into_par_iter().for_each(|w| {
            self.column(w);
        });
    }

    pub fn restriction(&self, v: usize, w: usize) -> Polynomial {
        self.column(w)[v].clone()
    }

    /// `σ_v|_w`.
    pub fn billey_restriction(&self, v: &WeylElt, w: &WeylElt) -> Result<Polynomial> {
        Ok(self.restriction(self.index(v)?, self.index(w)?))
    }

    pub fn schubert_class_at(&self, v: usize) -> LocalizedClass {
        let values = (0..self.group.len()).map(|w| self.column(w)[v].clone()).collect();
        LocalizedClass {
            group: self.group.clone(),
            degree: self.group.length(v) as u32,
            values,
        }
    }

    /// The equivariant Schubert class `σ_v`.
    pub fn schubert_class(&self, v: &WeylElt) -> Result<LocalizedClass> {
        Ok(self.schubert_class_at(self.index(v)?))
    }

    /// GKM condition: `f(w) - f(w r_β)` is divisible by `w(β)` for every
    /// fixed point `w` and positive root `β`.
    pub fn gkm_verify(&self, f: &LocalizedClass) -> bool {
        let g = &self.group;
        let rs = g.root_system();
        (0..g.len()).all(|w| {
            (0..rs.num_positive_roots() as u32).all(|beta| {
                let x = g.mul_reflection(w, beta);
                if x < w {
                    return true;
                }
                let diff = f.value(w) - f.value(x);
                if diff.is_zero() {
                    return true;
                }
                let root = rs.root(g.element(w).action()[beta as usize]);
                diff.divide_exact(&Polynomial::linear(root.coeffs())).is_ok()
            })
        })
    }

    pub fn class_product(&self, f: &LocalizedClass, g: &LocalizedClass) -> Result<LocalizedClass> {
        if f.group.root_system().cartan() != g.group.root_system().cartan() {
            return Err(GkmError::RankMismatch);
        }
        let values = f.values.iter().zip(&g.values).map(|(a, b)| a * b).collect();
        Ok(LocalizedClass {
            group: f.group.clone(),
            degree: f.degree + g.degree,
            values,
        })
    }

    /// Coefficients `d_w` with `f = sum_w d_w σ_w`, by Bruhat-graded
    /// back-substitution.
    pub fn expand_in_schubert_basis(&self, f: &LocalizedClass) -> Result<BTreeMap<usize, Polynomial>> {
        self.expand_up_to(f, self.group.len())
    }

    /// Back-substitution restricted to the first `n` elements. Exact for
    /// classes in the span whenever every element past `n` is longer than
    /// the degree of `f`, since those coefficients vanish.
    fn expand_up_to(&self, f: &LocalizedClass, n: usize) -> Result<BTreeMap<usize, Polynomial>> {
        let mut residual = f.values[..n].to_vec();
        let mut coeffs = BTreeMap::new();
        // Enumeration order is length-graded, so the first nonzero residual is
        // at a Bruhat-minimal element of the remaining support.
        for w in 0..n {
            if residual[w].is_zero() {
                continue;
            }
            let diag = self.restriction(w, w);
            let d = residual[w].divide_exact(&diag).map_err(|e| {
                GkmError::NotInSpan(format!("at {}: {e}", self.group.element(w).word_string()))
            })?;
            let minus_d = -&d;
            for x in w + 1..n {
                let col = self.column(x);
                if !col[w].is_zero() {
                    residual[x].add_scaled(&col[w], &minus_d);
                }
            }
            residual[w] = Polynomial::zero(self.rank());
            coeffs.insert(w, d);
        }
        Ok(coeffs)
    }

    /// `c_{uv}^w` for all `w`, by expanding the pointwise product. Fails with
    /// [`GkmError::PositivityViolation`] if any coefficient has a negative
    /// simple-root monomial coefficient.
    pub fn structure_constants_at(&self, u: usize, v: usize) -> Result<BTreeMap<usize, Polynomial>> {
        let prod = self.class_product(&self.schubert_class_at(u), &self.schubert_class_at(v))?;
        let degree = self.group.length(u) + self.group.length(v);
        let cutoff = self.group.elements().partition_point(|w| w.length() <= degree);
        let coeffs = self.expand_up_to(&prod, cutoff)?;
        if let Some((w, c)) = coeffs.iter().find(|(_, c)| !c.is_graham_positive()) {
            return Err(GkmError::PositivityViolation {
                u: self.group.element(u).word_string(),
                v: self.group.element(v).word_string(),
                w: self.group.element(*w).word_string(),
                coefficient: c.to_string(),
            });
        }
        Ok(coeffs)
    }

    pub fn structure_constants(&self, u: &WeylElt, v: &WeylElt) -> Result<BTreeMap<usize, Polynomial>> {
        self.structure_constants_at(self.index(u)?, self.index(v)?)
    }

    /// The full table over all ordered pairs `(u, v)`, computed in parallel
    /// on the current rayon pool; the result does not depend on scheduling.
    pub fn structure_table(&self) -> Result<StructTable> {
        self.precompute();
        let n = self.group.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
        let rows: Vec<BTreeMap<usize, Polynomial>> = pairs
            .par_iter()
            .map(|&(u, v)| self.structure_constants_at(u, v))
            .collect::<Result<_>>()?;
        let mut entries = BTreeMap::new();
        for (&(u, v), row) in pairs.iter().zip(rows) {
            for (w, c) in row {
                entries.insert((u, v, w), c);
            }
        }
        Ok(StructTable {
            group: self.group.clone(),
            entries,
        })
    }

    /// Product of all positive roots.
    pub fn positive_root_product(&self) -> &Polynomial {
        self.top_product.get_or_init(|| {
            let rs = self.root_system();
            rs.positive_roots()
                .iter()
                .fold(Polynomial::one(rs.rank()), |acc, r| &acc * &Polynomial::linear(r.coeffs()))
        })
    }

    /// Equivariant Euler class of the tangent space at `w`:
    /// the product of `-w(β)` over positive roots `β`.
    pub fn euler_class(&self, w: usize) -> Polynomial {
        let rs = self.root_system();
        let action = self.group.element(w).action();
        (0..rs.num_positive_roots()).fold(Polynomial::one(rs.rank()), |acc, b| {
            let image = rs.root(action[b]).negated();
            &acc * &Polynomial::linear(image.coeffs())
        })
    }

    /// Pushforward to a point, `sum_w f(w) / e(w)`.
    ///
    /// Each Euler class is `±` the product of the positive roots, with sign
    /// `(-1)^(N - l(w))`, so the sum is taken over that common denominator.
    pub fn integrate(&self, f: &LocalizedClass) -> Result<Polynomial> {
        let rs = self.root_system();
        let n_pos = rs.num_positive_roots();
        let mut numerator = Polynomial::zero(rs.rank());
        for (w, p) in f.support() {
            if (n_pos - self.group.length(w)) % 2 == 0 {
                numerator = &numerator + p;
            } else {
                numerator = &numerator - p;
            }
        }
        numerator
            .divide_exact(self.positive_root_product())
            .map_err(|e| GkmError::NonPolynomialResult(e.to_string()))
    }
}

/// Keeps the degree-zero constants `c_{uv}^w` with `l(u) + l(v) = l(w)`:
/// the structure constants of ordinary cohomology.
pub fn forget_to_ordinary(table: &StructTable) -> Result<BTreeMap<(usize, usize, usize), BigInt>> {
    let g = &table.group;
    let mut out = BTreeMap::new();
    for (&(u, v, w), c) in &table.entries {
        if g.length(u) + g.length(v) != g.length(w) {
            continue;
        }
        let value = c.as_constant().unwrap_or_else(BigRational::zero);
        if !value.is_integer() || value.is_negative() {
            return Err(GkmError::NonIntegral {
                u: g.element(u).word_string(),
                v: g.element(v).word_string(),
                w: g.element(w).word_string(),
                value: value.to_string(),
            });
        }
        if !value.is_zero() {
            out.insert((u, v, w), value.to_integer());
        }
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) fn is_one(c: &Polynomial) -> bool {
    use num_traits::One;
    c.as_constant().is_some_and(|x| x.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn calc(label: &str) -> SchubertCalculus {
        let rs = Arc::new(RootSystem::from_label(label).unwrap());
        SchubertCalculus::new(Arc::new(rs.weyl_enumerate().unwrap()))
    }

    fn a(i: usize) -> Polynomial {
        Polynomial::var(2, i - 1)
    }

    fn el(c: &SchubertCalculus, s: &str) -> WeylElt {
        c.root_system().parse_element(s).unwrap()
    }

    #[test]
    fn identity_class_restricts_to_one() {
        let c = calc("A2");
        let e = c.schubert_class(&el(&c, "e")).unwrap();
        assert!(e.values().iter().all(is_one));
    }

    #[test]
    fn s1_at_longest_element() {
        let c = calc("A2");
        let r = c.billey_restriction(&el(&c, "s1"), &el(&c, "s1 s2 s1")).unwrap();
        assert_eq!(r, &a(1) + &a(2));
    }

    #[test]
    fn top_class() {
        let c = calc("A2");
        let w0 = c.schubert_class(&el(&c, "321")).unwrap();
        let support: Vec<_> = w0.support().map(|(w, _)| w).collect();
        assert_eq!(support, vec![5]);
        assert_eq!(w0.value(5), &(&(&a(1) * &a(2)) * &(&a(1) + &a(2))));
    }

    #[test]
    fn gkm_rejects_point_class() {
        let c = calc("A1");
        let g = c.group().clone();
        let bad = LocalizedClass::new(g.clone(), 0, vec![Polynomial::one(1), Polynomial::zero(1)]).unwrap();
        assert!(!c.gkm_verify(&bad));
        let one = LocalizedClass::constant(g, Polynomial::one(1)).unwrap();
        assert!(c.gkm_verify(&one));
    }

    #[test]
    fn inhomogeneous_class_rejected() {
        let c = calc("A1");
        let vals = vec![Polynomial::one(1), Polynomial::var(1, 0)];
        assert!(matches!(
            LocalizedClass::new(c.group().clone(), 0, vals),
            Err(GkmError::Inhomogeneous { .. })
        ));
    }

    #[test]
    fn non_gkm_class_not_in_span() {
        let c = calc("A1");
        let bad = LocalizedClass::new(c.group().clone(), 0, vec![Polynomial::one(1), Polynomial::zero(1)]).unwrap();
        assert!(matches!(c.expand_in_schubert_basis(&bad), Err(GkmError::NotInSpan(_))));
        assert!(matches!(c.integrate(&bad), Err(GkmError::NonPolynomialResult(_))));
    }

    #[test]
    fn integrate_degree_bound() {
        let c = calc("A1");
        let one = c.schubert_class(&el(&c, "e")).unwrap();
        assert!(c.integrate(&one).unwrap().is_zero());
        let top = c.schubert_class(&el(&c, "s1")).unwrap();
        assert!(is_one(&c.integrate(&top).unwrap()));
    }

    #[test]
    fn euler_class_is_signed_root_product() {
        let c = calc("A2");
        let p = c.positive_root_product().clone();
        for w in 0..c.group().len() {
            let sign = if (3 - c.group().length(w)) % 2 == 0 { 1 } else { -1 };
            assert_eq!(c.euler_class(w), p.scale(&rat(sign)));
        }
    }

    #[test]
    fn class_json_round_trip() {
        let c = calc("A2");
        let s = c.schubert_class(&el(&c, "231")).unwrap();
        let j = s.to_json();
        assert_eq!(j["type"], "A2");
        assert_eq!(j["degree"], 2);
        assert_eq!(
            j["values"]["s1 s2"].to_string(),
            "[[[1,1],1,1],[[2,0],1,1]]"
        );
        assert_eq!(LocalizedClass::from_json(c.group().clone(), &j).unwrap(), s);
    }
}
