//! Peterson Schubert calculus.
//!
//! The circle-equivariant cohomology of the Peterson variety is presented by
//! restrictions to its fixed points `w_K`, one for each subset `K` of the
//! simple roots. The classes `p_K` are pullbacks of the Schubert classes of
//! Coxeter elements `v_K`; every simple root restricts to the single
//! parameter `t`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::gkm::{restriction_column, SchubertCalculus};
use crate::poly::{PolyError, PolyT};
use crate::rootsys::{CoxeterOrder, RootSysError, SubsetK, WeylElt, WeylGroup};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PetersonError {
    #[error("class is not in the span of the p-basis: {0}")]
    NotInSpan(String),
    #[error("{what} = {value} at K={k} is not a nonnegative polynomial in t")]
    PositivityViolation { what: String, k: String, value: String },
    #[error("{what} = {value} at K={k} has the wrong shape: {reason}")]
    ShapeViolation {
        what: String,
        k: String,
        value: String,
        reason: String,
    },
    #[error("closed-form precondition violated: {0}")]
    Precondition(String),
    #[error("operation requires a type A root system")]
    NotTypeA,
    #[error("subset {0} is not contained in the simple roots")]
    SubsetOutOfRange(String),
    #[error("classes have different ranks")]
    RankMismatch,
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T, E = PetersonError> = std::result::Result<T, E>;

/// A class on the Peterson variety: one polynomial in `t` per subset `K`,
/// indexed by the subset's bit mask.
#[derive(Clone, PartialEq, Eq)]
pub struct PetersonClass {
    rank: usize,
    degree: u32,
    values: Vec<PolyT>,
}

impl std::fmt::Debug for PetersonClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for k in SubsetK::all(self.rank) {
            m.entry(&k, &self.value(k).to_string());
        }
        m.finish()
    }
}

impl PetersonClass {
    /// One value per subset, indexed by bit mask.
    pub fn new(rank: usize, degree: u32, values: Vec<PolyT>) -> Self {
        assert_eq!(values.len(), 1 << rank, "one value per subset of the simple roots");
        PetersonClass { rank, degree, values }
    }

    pub fn from_map(rank: usize, degree: u32, values: impl IntoIterator<Item = (SubsetK, PolyT)>) -> Self {
        let mut dense = vec![PolyT::zero(); 1 << rank];
        for (k, v) in values {
            dense[k.mask() as usize] = v;
        }
        Self::new(rank, degree, dense)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn value(&self, k: SubsetK) -> &PolyT {
        &self.values[k.mask() as usize]
    }

    /// Whether each value is zero or `c t^degree`.
    pub fn is_homogeneous(&self) -> bool {
        self.values.iter().all(|v| v.is_homogeneous_of(self.degree as usize))
    }

    pub fn product(&self, other: &PetersonClass) -> Result<PetersonClass> {
        if self.rank != other.rank {
            return Err(PetersonError::RankMismatch);
        }
        Ok(PetersonClass {
            rank: self.rank,
            degree: self.degree + other.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }
}

/// Coefficients of a class in the basis `{p_K}`; absent keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PetersonExpansion {
    pub coeffs: BTreeMap<SubsetK, PolyT>,
}

impl PetersonExpansion {
    pub fn coeff(&self, k: SubsetK) -> PolyT {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SubsetK, &PolyT)> {
        self.coeffs.iter()
    }

    /// `{"1,2": [[power, num, den], ...], ...}` in subset order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(k, c)| json!({"K": k.to_string(), "coefficient": c.to_string(), "terms": c.to_json()}))
                .collect(),
        )
    }
}

/// Where the restrictions at Peterson fixed points come from.
enum Source {
    /// Billey's formula evaluated directly in `Q[t]`.
    Direct,
    /// Specialization of the multivariate restrictions of a shared engine.
    Shared(Arc<SchubertCalculus>),
}

/// Peterson Schubert calculus for one root system.
pub struct PetersonCalculus {
    group: Arc<WeylGroup>,
    order: CoxeterOrder,
    source: Source,
    /// Index of `w_K`, by mask.
    fixed_points: Vec<usize>,
    /// Index of `v_K`, by mask (`e` for the empty set).
    coxeter: Vec<usize>,
    /// Restrictions of every Schubert class to `w_K`, by mask.
    columns: Vec<OnceLock<Arc<[PolyT]>>>,
}

impl PetersonCalculus {
    pub fn new(group: Arc<WeylGroup>) -> Result<Self> {
        Self::build(group, CoxeterOrder::Increasing, Source::Direct)
    }

    pub fn with_order(group: Arc<WeylGroup>, order: CoxeterOrder) -> Result<Self> {
        Self::build(group, order, Source::Direct)
    }

    /// Reads restrictions from (and fills) the memo cache of `schubert`.
    pub fn shared(schubert: Arc<SchubertCalculus>, order: CoxeterOrder) -> Result<Self> {
        let group = schubert.group().clone();
        Self::build(group, order, Source::Shared(schubert))
    }

    fn build(group: Arc<WeylGroup>, order: CoxeterOrder, source: Source) -> Result<Self> {
        let rs = group.root_system().clone();
        let rank = rs.rank();
        let mut fixed_points = Vec::with_capacity(1 << rank);
        let mut coxeter = Vec::with_capacity(1 << rank);
        for mask in 0..1u64 << rank {
            let k = SubsetK::from_mask(mask);
            let wk = rs.longest_element(k)?;
            fixed_points.push(group.index_of(&wk).expect("parabolic element in group"));
            let vk = if k.is_empty() {
                rs.identity()
            } else {
                rs.coxeter_element(k, order)?
            };
            coxeter.push(group.index_of(&vk).expect("Coxeter element in group"));
        }
        Ok(PetersonCalculus {
            columns: (0..1 << rank).map(|_| OnceLock::new()).collect(),
            group,
            order,
            source,
            fixed_points,
            coxeter,
        })
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.root_system().rank()
    }

    pub fn order(&self) -> CoxeterOrder {
        self.order
    }

    pub fn subsets(&self) -> Vec<SubsetK> {
        SubsetK::all(self.rank())
    }

    fn check(&self, k: SubsetK) -> Result<()> {
        if k.is_subset_of(SubsetK::full(self.rank())) {
            Ok(())
        } else {
            Err(PetersonError::SubsetOutOfRange(format!("{k:?}")))
        }
    }

    /// The fixed point `w_K`: the longest element of the parabolic subgroup.
    pub fn peterson_fixed_point(&self, k: SubsetK) -> Result<WeylElt> {
        self.check(k)?;
        Ok(self.group.element(self.fixed_points[k.mask() as usize]).clone())
    }

    pub fn coxeter_element(&self, k: SubsetK) -> Result<WeylElt> {
        self.check(k)?;
        Ok(self.group.element(self.coxeter[k.mask() as usize]).clone())
    }

    fn column(&self, j: SubsetK) -> Arc<[PolyT]> {
        self.columns[j.mask() as usize]
            .get_or_init(|| {
                let w = self.fixed_points[j.mask() as usize];
                match &self.source {
                    Source::Direct => restriction_column::<PolyT>(&self.group, self.group.element(w).word()).into(),
                    Source::Shared(s) => s.column(w).iter().map(|p| p.specialize_to_t()).collect(),
                }
            })
            .clone()
    }

    /// Pullback of `σ_w`: its restrictions to every `w_J`, specialized to `t`.
    pub fn restrict_schubert(&self, w: usize) -> PetersonClass {
        let values = (0..1u64 << self.rank())
            .map(|j| self.column(SubsetK::from_mask(j))[w].clone())
            .collect();
        PetersonClass::new(self.rank(), self.group.length(w) as u32, values)
    }

    /// `p_K`, the pullback of the Schubert class of the Coxeter element `v_K`.
    pub fn p_class(&self, k: SubsetK) -> Result<PetersonClass> {
        self.check(k)?;
        Ok(self.restrict_schubert(self.coxeter[k.mask() as usize]))
    }

    /// Coefficients `d_K` with `f = sum_K d_K p_K`, by back-substitution over
    /// subsets ordered by size.
    pub fn expand_in_p_basis(&self, f: &PetersonClass) -> Result<PetersonExpansion> {
        if f.rank != self.rank() {
            return Err(PetersonError::RankMismatch);
        }
        let mut residual = f.values.clone();
        let mut out = PetersonExpansion::default();
        let subsets = self.subsets();
        for (pos, &k) in subsets.iter().enumerate() {
            let rk = &residual[k.mask() as usize];
            if rk.is_zero() {
                continue;
            }
            let pk = self.p_class(k)?;
            let d = rk
                .divide_exact(pk.value(k))
                .map_err(|e| PetersonError::NotInSpan(format!("at K={k}: {e}")))?;
            residual[k.mask() as usize] = PolyT::zero();
            for &j in &subsets[pos + 1..] {
                let pj = pk.value(j);
                if !pj.is_zero() {
                    let r = &mut residual[j.mask() as usize];
                    *r = &*r - &(&d * pj);
                }
            }
            out.coeffs.insert(k, d);
        }
        Ok(out)
    }

    /// `c_{I,J}^K` for all `K`: the expansion of `p_I p_J`. Nonnegativity,
    /// grading and support are checked; a failure is an error, never dropped.
    pub fn peterson_structure_constants(&self, i: SubsetK, j: SubsetK) -> Result<PetersonExpansion> {
        let prod = self.p_class(i)?.product(&self.p_class(j)?)?;
        let exp = self.expand_in_p_basis(&prod)?;
        for (&k, c) in exp.iter() {
            let what = format!("c[{i}; {j}]");
            if !c.is_nonnegative() {
                return Err(PetersonError::PositivityViolation {
                    what,
                    k: k.to_string(),
                    value: c.to_string(),
                });
            }
            let reason = if !i.union(j).is_subset_of(k) {
                Some("K does not contain I and J".to_string())
            } else if k.len() > i.len() + j.len() {
                Some("|K| exceeds |I|+|J|".to_string())
            } else if !c.is_homogeneous_of(i.len() + j.len() - k.len()) {
                Some(format!("not homogeneous of degree {}", i.len() + j.len() - k.len()))
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(PetersonError::ShapeViolation {
                    what,
                    k: k.to_string(),
                    value: c.to_string(),
                    reason,
                });
            }
        }
        Ok(exp)
    }

    /// `b_w^K`: the expansion of the pullback of `σ_w` in the p-basis. Each
    /// coefficient must be a nonnegative monomial of degree `l(w) - |K|`.
    pub fn pullback_expansion(&self, w: &WeylElt) -> Result<PetersonExpansion> {
        let idx = self
            .group
            .index_of(w)
            .ok_or_else(|| PetersonError::NotInSpan(format!("{w} is not in the Weyl group")))?;
        self.pullback_expansion_at(idx)
    }

    pub fn pullback_expansion_at(&self, w: usize) -> Result<PetersonExpansion> {
        let exp = self.expand_in_p_basis(&self.restrict_schubert(w))?;
        let len = self.group.length(w);
        let word = self.group.element(w).word_string();
        for (&k, c) in exp.iter() {
            let what = format!("b[{word}]");
            if !c.is_nonnegative() {
                return Err(PetersonError::PositivityViolation {
                    what,
                    k: k.to_string(),
                    value: c.to_string(),
                });
            }
            let shape_ok = c
                .as_monomial()
                .is_some_and(|(power, _)| k.len() <= len && power == len - k.len());
            if !shape_ok {
                return Err(PetersonError::ShapeViolation {
                    what,
                    k: k.to_string(),
                    value: c.to_string(),
                    reason: format!("expected a monomial of degree {}", len as i64 - k.len() as i64),
                });
            }
        }
        Ok(exp)
    }

    /// All `c_{I,J}^K`, rows ordered by `(I, J, K)` in subset order. Pairs are
    /// computed in parallel on the current rayon pool.
    pub fn structure_table(&self) -> Result<Vec<(SubsetK, SubsetK, SubsetK, PolyT)>> {
        let subsets = self.subsets();
        subsets.par_iter().for_each(|&j| {
            self.column(j);
        });
        let pairs: Vec<(SubsetK, SubsetK)> = subsets
            .iter()
            .flat_map(|&i| subsets.iter().map(move |&j| (i, j)))
            .collect();
        let rows: Vec<PetersonExpansion> = pairs
            .par_iter()
            .map(|&(i, j)| self.peterson_structure_constants(i, j))
            .collect::<Result<_>>()?;
        Ok(pairs
            .into_iter()
            .zip(rows)
            .flat_map(|((i, j), exp)| exp.coeffs.into_iter().map(move |(k, c)| (i, j, k, c)))
            .collect())
    }

    /// Compares every admissible consecutive triple against
    /// [`closed_form_cijk`]. Type A only.
    pub fn cross_validate(&self) -> Result<CrossValidationReport> {
        if !self.group.root_system().is_type_a() {
            return Err(PetersonError::NotTypeA);
        }
        let rank = self.rank();
        let intervals: Vec<SubsetK> = self.subsets().into_iter().filter(|k| k.is_consecutive()).collect();
        let mut report = CrossValidationReport {
            rank,
            order: self.order,
            checked: 0,
            failures: Vec::new(),
        };
        for &i in &intervals {
            for &j in &intervals {
                let computed = match self.peterson_structure_constants(i, j) {
                    Ok(exp) => exp,
                    Err(e) => {
                        report.failures.push(Mismatch {
                            i,
                            j,
                            k: SubsetK::EMPTY,
                            closed_form: String::new(),
                            computed: format!("error: {e}"),
                        });
                        continue;
                    }
                };
                for &k in &intervals {
                    if !admissible(i, j, k) {
                        continue;
                    }
                    report.checked += 1;
                    let expected = closed_form_cijk(i, j, k)?;
                    let got = computed.coeff(k);
                    if expected != got {
                        report.failures.push(Mismatch {
                            i,
                            j,
                            k,
                            closed_form: expected.to_string(),
                            computed: got.to_string(),
                        });
                    }
                }
            }
        }
        Ok(report)
    }
}

fn admissible(i: SubsetK, j: SubsetK, k: SubsetK) -> bool {
    [i, j, k].iter().all(|s| s.is_consecutive())
        && i.union(j).is_subset_of(k)
        && k.len() <= i.len() + j.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub i: SubsetK,
    pub j: SubsetK,
    pub k: SubsetK,
    pub closed_form: String,
    pub computed: String,
}

/// Outcome of [`PetersonCalculus::cross_validate`].
#[derive(Clone, Debug)]
pub struct CrossValidationReport {
    pub rank: usize,
    pub order: CoxeterOrder,
    pub checked: usize,
    pub failures: Vec<Mismatch>,
}

impl CrossValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "coxeter_order": format!("{:?}", self.order).to_lowercase(),
            "checked": self.checked,
            "passed": self.passed(),
            "failures": self.failures.iter().map(|m| json!({
                "I": m.i.to_string(),
                "J": m.j.to_string(),
                "K": m.k.to_string(),
                "closed_form": m.closed_form,
                "computed": m.computed,
            })).collect::<Vec<_>>(),
        })
    }
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Multinomial `n! / (a! b! c!)`; zero unless the parts are nonnegative and
/// sum to `n`.
pub fn multinomial(n: i64, parts: [i64; 3]) -> BigInt {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigInt::zero();
    }
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// Type-A closed form for `c_{I,J}^K` when `I`, `J`, `K` are nonempty runs of
/// consecutive indices with `I ∪ J ⊆ K` and `|K| ≤ |I| + |J|`:
///
/// `a! M(H_I - T_J + 1; a, T_I - T_K, H_K - H_J) M(H_J - T_I + 1; a, T_J - T_K, H_K - H_I) t^a`
///
/// where `a = |I| + |J| - |K|`, `H` and `T` are the largest and smallest
/// members, and `M` is a multinomial coefficient.
pub fn closed_form_cijk(i: SubsetK, j: SubsetK, k: SubsetK) -> Result<PolyT> {
    for (name, s) in [("I", i), ("J", j), ("K", k)] {
        if !s.is_consecutive() {
            return Err(PetersonError::Precondition(format!(
                "{name} = {{{s}}} is not a nonempty run of consecutive indices"
            )));
        }
    }
    if !i.union(j).is_subset_of(k) {
        return Err(PetersonError::Precondition(format!("K = {{{k}}} does not contain I ∪ J")));
    }
    if k.len() > i.len() + j.len() {
        return Err(PetersonError::Precondition("|K| > |I| + |J|".into()));
    }
    let hi = |s: SubsetK| s.max_1based().unwrap() as i64;
    let lo = |s: SubsetK| s.min_1based().unwrap() as i64;
    let a = (i.len() + j.len() - k.len()) as i64;
    let first = multinomial(hi(i) - lo(j) + 1, [a, lo(i) - lo(k), hi(k) - hi(j)]);
    let second = multinomial(hi(j) - lo(i) + 1, [a, lo(j) - lo(k), hi(k) - hi(i)]);
    let value = factorial(a) * first * second;
    Ok(PolyT::monomial(BigRational::from_integer(value), a as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn calc(label: &str) -> PetersonCalculus {
        let rs = Arc::new(RootSystem::from_label(label).unwrap());
        PetersonCalculus::new(Arc::new(rs.weyl_enumerate().unwrap())).unwrap()
    }

    fn k(m: &[usize]) -> SubsetK {
        SubsetK::of(m)
    }

    fn t(c: &[i64]) -> PolyT {
        PolyT::from_int_coeffs(c)
    }

    #[test]
    fn fixed_points() {
        let a2 = calc("A2");
        assert!(a2.peterson_fixed_point(SubsetK::EMPTY).unwrap().is_identity());
        assert_eq!(a2.peterson_fixed_point(k(&[1, 2])).unwrap().word(), &[0, 1, 0]);
        assert_eq!(calc("A3").peterson_fixed_point(k(&[2])).unwrap().word(), &[1]);
        assert!(a2.peterson_fixed_point(k(&[3])).is_err());
    }

    #[test]
    fn p_classes() {
        let a1 = calc("A1");
        let p1 = a1.p_class(k(&[1])).unwrap();
        assert_eq!(p1.value(SubsetK::EMPTY), &PolyT::zero());
        assert_eq!(p1.value(k(&[1])), &PolyT::t());

        let a2 = calc("A2");
        let p1 = a2.p_class(k(&[1])).unwrap();
        assert_eq!(
            [SubsetK::EMPTY, k(&[1]), k(&[2]), k(&[1, 2])].map(|j| p1.value(j).clone()),
            [t(&[]), t(&[0, 1]), t(&[]), t(&[0, 2])]
        );
        let p12 = a2.p_class(k(&[1, 2])).unwrap();
        assert_eq!(
            [SubsetK::EMPTY, k(&[1]), k(&[2]), k(&[1, 2])].map(|j| p12.value(j).clone()),
            [t(&[]), t(&[]), t(&[]), t(&[0, 0, 2])]
        );
        let p0 = a2.p_class(SubsetK::EMPTY).unwrap();
        assert!(a2.subsets().iter().all(|&j| p0.value(j) == &PolyT::one()));
    }

    #[test]
    fn expansions() {
        let a2 = calc("A2");
        let p1 = a2.p_class(k(&[1])).unwrap();
        let p2 = a2.p_class(k(&[2])).unwrap();
        let e = a2.expand_in_p_basis(&p1).unwrap();
        assert_eq!(e.coeffs.into_iter().collect::<Vec<_>>(), vec![(k(&[1]), PolyT::one())]);
        let e = a2.expand_in_p_basis(&p1.product(&p2).unwrap()).unwrap();
        assert_eq!(e.coeffs.into_iter().collect::<Vec<_>>(), vec![(k(&[1, 2]), t(&[2]))]);
        let e = a2.expand_in_p_basis(&p1.product(&p1).unwrap()).unwrap();
        assert_eq!(
            e.coeffs.into_iter().collect::<Vec<_>>(),
            vec![(k(&[1]), PolyT::t()), (k(&[1, 2]), PolyT::one())]
        );
    }

    #[test]
    fn not_in_span() {
        let a1 = calc("A1");
        let f = PetersonClass::from_map(1, 0, [(k(&[1]), PolyT::one())]);
        assert!(matches!(a1.expand_in_p_basis(&f), Err(PetersonError::NotInSpan(_))));
    }

    #[test]
    fn structure_constant_examples() {
        assert_eq!(calc("A1").peterson_structure_constants(k(&[1]), k(&[1])).unwrap().coeff(k(&[1])), PolyT::t());
        let a2 = calc("A2");
        assert_eq!(
            a2.peterson_structure_constants(k(&[1]), k(&[2])).unwrap().coeff(k(&[1, 2])),
            t(&[2])
        );
        for j in a2.subsets() {
            let c = a2.peterson_structure_constants(SubsetK::EMPTY, j).unwrap();
            assert_eq!(c.coeffs.into_iter().collect::<Vec<_>>(), vec![(j, PolyT::one())]);
        }
    }

    #[test]
    fn pullback_examples() {
        let a2 = calc("A2");
        let rs = a2.group().root_system().clone();
        let e = a2.pullback_expansion(&rs.identity()).unwrap();
        assert_eq!(e.coeffs.into_iter().collect::<Vec<_>>(), vec![(SubsetK::EMPTY, PolyT::one())]);
        for m in [&[1][..], &[2], &[1, 2]] {
            let vk = a2.coxeter_element(k(m)).unwrap();
            let e = a2.pullback_expansion(&vk).unwrap();
            assert_eq!(e.coeffs.into_iter().collect::<Vec<_>>(), vec![(k(m), PolyT::one())]);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_cijk(k(&[1]), k(&[1]), k(&[1])).unwrap(), PolyT::t());
        assert_eq!(closed_form_cijk(k(&[1]), k(&[2]), k(&[1, 2])).unwrap(), t(&[2]));
        assert_eq!(closed_form_cijk(k(&[1]), k(&[1]), k(&[1, 2])).unwrap(), t(&[1]));
        assert!(matches!(
            closed_form_cijk(k(&[1, 3]), k(&[1]), k(&[1, 2, 3])),
            Err(PetersonError::Precondition(_))
        ));
        assert!(matches!(
            closed_form_cijk(k(&[1]), k(&[2]), k(&[2])),
            Err(PetersonError::Precondition(_))
        ));
        assert!(matches!(
            closed_form_cijk(k(&[1]), k(&[1]), k(&[1, 2, 3])),
            Err(PetersonError::Precondition(_))
        ));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(2, [0, 1, 1]), BigInt::from(2));
        assert_eq!(multinomial(4, [2, 1, 1]), BigInt::from(12));
        assert_eq!(multinomial(2, [0, 1, 0]), BigInt::zero());
        assert_eq!(multinomial(-1, [0, -1, 0]), BigInt::zero());
    }

    #[test]
    fn cross_validate_small() {
        let r = calc("A1").cross_validate().unwrap();
        assert_eq!(r.checked, 1);
        assert!(r.passed());
        let r = calc("A2").cross_validate().unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let b2 = calc("B2");
        assert_eq!(b2.cross_validate().unwrap_err(), PetersonError::NotTypeA);
    }

    #[test]
    fn shared_source_matches_direct() {
        let rs = Arc::new(RootSystem::from_label("A3").unwrap());
        let g = Arc::new(rs.weyl_enumerate().unwrap());
        let direct = PetersonCalculus::new(g.clone()).unwrap();
        let shared = PetersonCalculus::shared(Arc::new(SchubertCalculus::new(g.clone())), CoxeterOrder::Increasing).unwrap();
        for w in 0..g.len() {
            assert_eq!(direct.restrict_schubert(w), shared.restrict_schubert(w));
        }
    }
}
