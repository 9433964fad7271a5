//! Finite root systems, their Weyl groups, Bruhat order and parabolic data.
//!
//! Roots are stored in the simple-root basis. A Weyl group element is
//! identified by the permutation it induces on the full root list; its
//! reduced word is derived from that permutation and is the lexicographically
//! smallest reduced word.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

/// Default cap on the order of an enumerated Weyl group (covers A7).
pub const DEFAULT_MAX_WEYL: usize = 50_000;

/// Upper bound on the number of positive roots generated before a Cartan
/// matrix is declared to be of infinite type.
/// Largest simple-root coefficient of any root of a finite root system is 6
/// (in E8); anything beyond this bound means the orbit does not close.
const MAX_ROOT_COEFF: i64 = 6;
const MAX_POSITIVE_ROOTS: usize = 4_096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSysError {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type (more than {0} positive roots)")]
    NotFiniteType(usize),
    #[error("Weyl group has more than {cap} elements")]
    WeylCapExceeded { cap: usize },
    #[error("unknown root system type label {0:?}")]
    UnknownType(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("a Coxeter element needs a nonempty subset")]
    EmptySubset,
    #[error("{0:?} is not a root of this root system")]
    NotARoot(Vec<i64>),
    #[error("invalid Weyl group element: {0}")]
    BadElement(String),
}

pub type Result<T, E = RootSysError> = std::result::Result<T, E>;

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Self {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A finite crystallographic root system given by its Cartan matrix.
///
/// `cartan[i][j]` is the pairing of the i-th simple coroot with the j-th
/// simple root, so the simple reflection `s_i` sends a root `r` to
/// `r - (sum_j cartan[i][j] r_j) α_i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    type_label: Option<String>,
    /// Positive roots first (graded by height, then by descending coefficient
    /// vector), then their negatives in the same order.
    roots: Vec<Root>,
    root_index: HashMap<Vec<i64>, u32>,
    /// `simple_action[i][r]` is the index of `s_i(roots[r])`.
    simple_action: Vec<Box<[u32]>>,
}

impl RootSystem {
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = cartan.len();
        if rank == 0 {
            return Err(RootSysError::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(RootSysError::InvalidCartan(format!(
                    "row {} has length {}, expected {rank}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(RootSysError::InvalidCartan(format!(
                        "diagonal entry ({0},{0}) is {a}, expected 2",
                        i + 1
                    )));
                }
                if i != j && a > 0 {
                    return Err(RootSysError::InvalidCartan(format!(
                        "off-diagonal entry ({},{}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if i != j && a < -3 {
                    return Err(RootSysError::NotFiniteType(0));
                }
                if i != j && (a == 0) != (cartan[j][i] == 0) {
                    return Err(RootSysError::InvalidCartan(format!(
                        "entries ({0},{1}) and ({1},{0}) must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let reflect = |i: usize, r: &[i64]| -> Vec<i64> {
            let pairing: i64 = cartan[i].iter().zip(r).map(|(a, c)| a * c).sum();
            let mut out = r.to_vec();
            out[i] -= pairing;
            out
        };

        let mut positive: Vec<Vec<i64>> = (0..rank).map(|i| Root::simple(rank, i).0).collect();
        let mut seen: HashSet<Vec<i64>> = positive.iter().cloned().collect();
        let mut frontier = positive.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for i in 0..rank {
                    let image = reflect(i, r);
                    if image.iter().any(|c| c.abs() > MAX_ROOT_COEFF) {
                        return Err(RootSysError::NotFiniteType(positive.len()));
                    }
                    let nonneg = image.iter().all(|&c| c >= 0);
                    let nonpos = image.iter().all(|&c| c <= 0);
                    if !nonneg && !nonpos {
                        return Err(RootSysError::NotFiniteType(positive.len()));
                    }
                    if nonneg && seen.insert(image.clone()) {
                        next.push(image);
                    }
                }
            }
            positive.extend(next.iter().cloned());
            if positive.len() > MAX_POSITIVE_ROOTS {
                return Err(RootSysError::NotFiniteType(MAX_POSITIVE_ROOTS));
            }
            frontier = next;
        }
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let mut roots: Vec<Root> = positive.iter().cloned().map(Root).collect();
        roots.extend(positive.iter().map(|r| Root(r.clone()).negated()));
        let root_index: HashMap<Vec<i64>, u32> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k as u32))
            .collect();
        let mut simple_action = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut perm = Vec::with_capacity(roots.len());
            for r in &roots {
                let image = reflect(i, &r.0);
                match root_index.get(&image) {
                    Some(&k) => perm.push(k),
                    None => return Err(RootSysError::NotFiniteType(positive.len())),
                }
            }
            simple_action.push(perm.into_boxed_slice());
        }

        Ok(RootSystem {
            rank,
            cartan,
            type_label: None,
            roots,
            root_index,
            simple_action,
        })
    }

    /// Builds a root system from a Cartan-type label such as `"A3"`, `"B2"`,
    /// `"D4"` or `"E6"`.
    pub fn from_label(label: &str) -> Result<Self> {
        let cartan = cartan_for_label(label)?;
        let mut rs = Self::from_cartan(cartan)?;
        rs.type_label = Some(label.trim().to_ascii_uppercase());
        Ok(rs)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.type_label = Some(label.into());
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn type_label(&self) -> Option<&str> {
        self.type_label.as_deref()
    }

    /// Whether the Cartan matrix is that of type A_rank in the standard
    /// numbering.
    pub fn is_type_a(&self) -> bool {
        self.cartan == cartan_type_a(self.rank)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive_roots()]
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank).map(|i| Root::simple(self.rank, i)).collect()
    }

    /// All roots: the positive roots followed by their negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, index: u32) -> &Root {
        &self.roots[index as usize]
    }

    pub fn root_index(&self, root: &Root) -> Option<u32> {
        self.root_index.get(&root.0).copied()
    }

    pub(crate) fn simple_root_index(&self, i: usize) -> u32 {
        self.root_index[&Root::simple(self.rank, i).0]
    }

    pub(crate) fn is_positive_index(&self, index: u32) -> bool {
        (index as usize) < self.num_positive_roots()
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt {
            word: Vec::new(),
            action: (0..self.roots.len() as u32).collect(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElt> {
        self.check_index(i)?;
        Ok(WeylElt {
            word: vec![i],
            action: self.simple_action[i].clone(),
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(RootSysError::IndexOutOfRange {
                index: i + 1,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// The element `s_{word[0]} s_{word[1]} ...` (0-based indices). The word
    /// need not be reduced; the result carries its canonical reduced word.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut action: Box<[u32]> = (0..self.roots.len() as u32).collect();
        for &i in word {
            self.check_index(i)?;
            let s = &self.simple_action[i];
            // (w s_i)(r) = w(s_i(r))
            action = s.iter().map(|&k| action[k as usize]).collect();
        }
        Ok(self.element_from_action(action))
    }

    /// Reconstructs an element from its root permutation.
    pub(crate) fn element_from_action(&self, action: Box<[u32]>) -> WeylElt {
        let word = self.canonical_word(&action);
        WeylElt { word, action }
    }

    /// Lexicographically smallest reduced word: repeatedly strip the smallest
    /// left descent.
    fn canonical_word(&self, action: &[u32]) -> Vec<usize> {
        let mut action = action.to_vec();
        let mut word = Vec::new();
        loop {
            let mut descent = None;
            for i in 0..self.rank {
                let target = self.simple_root_index(i);
                let pre = action.iter().position(|&k| k == target).unwrap() as u32;
                if !self.is_positive_index(pre) {
                    descent = Some(i);
                    break;
                }
            }
            let Some(i) = descent else { break };
            word.push(i);
            // s_i w
            let s = &self.simple_action[i];
            for k in action.iter_mut() {
                *k = s[*k as usize];
            }
        }
        word
    }

    /// `w(r)`.
    pub fn act_on_root(&self, w: &WeylElt, r: &Root) -> Result<Root> {
        let k = self
            .root_index(r)
            .ok_or_else(|| RootSysError::NotARoot(r.0.clone()))?;
        Ok(self.roots[w.action[k as usize] as usize].clone())
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: &WeylElt) -> usize {
        let n = self.num_positive_roots();
        w.action[..n]
            .iter()
            .filter(|&&k| !self.is_positive_index(k))
            .count()
    }

    /// Enumerates the Weyl group with the default size cap.
    pub fn weyl_enumerate(self: &Arc<Self>) -> Result<WeylGroup> {
        WeylGroup::new(self.clone(), DEFAULT_MAX_WEYL)
    }

    /// Longest element of the parabolic subgroup generated by `k`.
    pub fn longest_element(&self, k: SubsetK) -> Result<WeylElt> {
        self.check_subset(k)?;
        let mut action: Box<[u32]> = (0..self.roots.len() as u32).collect();
        'grow: loop {
            for i in k.iter() {
                let image = action[self.simple_root_index(i) as usize];
                if self.is_positive_index(image) {
                    let s = &self.simple_action[i];
                    action = s.iter().map(|&r| action[r as usize]).collect();
                    continue 'grow;
                }
            }
            break;
        }
        Ok(self.element_from_action(action))
    }

    /// Coxeter element of `k`: one simple reflection per member, multiplied
    /// in the given order.
    pub fn coxeter_element(&self, k: SubsetK, order: CoxeterOrder) -> Result<WeylElt> {
        self.check_subset(k)?;
        if k.is_empty() {
            return Err(RootSysError::EmptySubset);
        }
        let mut word: Vec<usize> = k.iter().collect();
        if order == CoxeterOrder::Decreasing {
            word.reverse();
        }
        self.element_from_word(&word)
    }

    fn check_subset(&self, k: SubsetK) -> Result<()> {
        match k.iter().find(|&i| i >= self.rank) {
            Some(i) => Err(RootSysError::IndexOutOfRange {
                index: i + 1,
                rank: self.rank,
            }),
            None => Ok(()),
        }
    }

    /// Parses an element given as a word (`"s1 s2 s1"`, `"1 2 1"`, `"e"`) or,
    /// in type A, as a one-line permutation (`"231"`, `"[2,3,1]"`).
    pub fn parse_element(&self, text: &str) -> Result<WeylElt> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "id" {
            return Ok(self.identity());
        }
        let looks_word = t.contains('s') || t.contains(' ');
        if !looks_word && self.is_type_a() {
            if let Some(perm) = parse_one_line(t) {
                if perm.len() == self.rank + 1 {
                    return self.element_from_one_line(&perm);
                }
                return Err(RootSysError::BadElement(format!(
                    "{t:?} has {} entries, expected {}",
                    perm.len(),
                    self.rank + 1
                )));
            }
        }
        let mut word = Vec::new();
        for tok in t.split(|c: char| c.is_whitespace() || c == ',' || c == '*') {
            let tok = tok.trim_start_matches('s');
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok
                .parse()
                .map_err(|_| RootSysError::BadElement(format!("bad reflection {tok:?} in {t:?}")))?;
            if i == 0 {
                return Err(RootSysError::BadElement("reflection indices start at 1".into()));
            }
            word.push(i - 1);
        }
        self.element_from_word(&word)
    }

    /// Type A only: the element with one-line notation `perm` (values 1..=n),
    /// where `s_i` swaps positions i and i+1 when multiplied on the right.
    pub fn element_from_one_line(&self, perm: &[usize]) -> Result<WeylElt> {
        let n = perm.len();
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if !self.is_type_a() || n != self.rank + 1 || sorted != (1..=n).collect::<Vec<_>>() {
            return Err(RootSysError::BadElement(format!(
                "{perm:?} is not a permutation of 1..={} in type A{}",
                self.rank + 1,
                self.rank
            )));
        }
        // Bubble sort from the right: w = (w s_i) s_i with w(i) > w(i+1).
        let mut p = perm.to_vec();
        let mut rev = Vec::new();
        while let Some(i) = (0..n - 1).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            rev.push(i);
        }
        rev.reverse();
        self.element_from_word(&rev)
    }

    /// Type A only: one-line notation of `w`.
    pub fn one_line(&self, w: &WeylElt) -> Option<Vec<usize>> {
        if !self.is_type_a() {
            return None;
        }
        let mut p: Vec<usize> = (1..=self.rank + 1).collect();
        for &i in &w.word {
            p.swap(i, i + 1);
        }
        Some(p)
    }
}

fn parse_one_line(t: &str) -> Option<Vec<usize>> {
    let inner = t.trim_start_matches('[').trim_end_matches(']');
    if inner.contains(',') {
        inner.split(',').map(|x| x.trim().parse().ok()).collect()
    } else if inner.chars().all(|c| c.is_ascii_digit()) {
        Some(inner.chars().map(|c| c.to_digit(10).unwrap() as usize).collect())
    } else {
        None
    }
}

fn cartan_type_a(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

/// Cartan matrix for a Bourbaki type label.
pub fn cartan_for_label(label: &str) -> Result<Vec<Vec<i64>>> {
    let l = label.trim().to_ascii_uppercase();
    let unknown = || RootSysError::UnknownType(label.to_string());
    let (family, n) = l.split_at(1.min(l.len()));
    let n: usize = n.parse().map_err(|_| unknown())?;
    let c = match (family, n) {
        ("A", n) if n >= 1 => cartan_type_a(n),
        ("B", n) if n >= 2 => {
            let mut c = cartan_type_a(n);
            c[n - 1][n - 2] = -2;
            c
        }
        ("C", n) if n >= 2 => {
            let mut c = cartan_type_a(n);
            c[n - 2][n - 1] = -2;
            c
        }
        ("D", n) if n >= 4 => {
            let mut c = cartan_type_a(n);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            c
        }
        ("E", n) if (6..=8).contains(&n) => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            let mut c = vec![vec![0; n]; n];
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..n - 1).map(|i| (i, i + 1)));
            for i in 0..n {
                c[i][i] = 2;
            }
            for (i, j) in edges {
                c[i][j] = -1;
                c[j][i] = -1;
            }
            c
        }
        ("F", 4) => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        ("G", 2) => vec![vec![2, -1], vec![-3, 2]],
        _ => return Err(unknown()),
    };
    Ok(c)
}

/// Order in which the reflections of a Coxeter element are multiplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoxeterOrder {
    #[default]
    Increasing,
    Decreasing,
}

/// A Weyl group element. Equality and hashing use the root permutation only.
#[derive(Clone)]
pub struct WeylElt {
    word: Vec<usize>,
    action: Box<[u32]>,
}

impl WeylElt {
    /// Canonical (lexicographically smallest) reduced word, 0-based indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Index permutation of the root list of the owning root system.
    pub fn action(&self) -> &[u32] {
        &self.action
    }

    /// Set of simple reflections occurring in any reduced word.
    pub fn support(&self) -> SubsetK {
        SubsetK::from_indices(self.word.iter().copied())
    }

    /// `self * other`.
    pub fn compose(&self, other: &WeylElt, rs: &RootSystem) -> WeylElt {
        let action = other.action.iter().map(|&k| self.action[k as usize]).collect();
        rs.element_from_action(action)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElt {
        let mut action = vec![0u32; self.action.len()].into_boxed_slice();
        for (k, &img) in self.action.iter().enumerate() {
            action[img as usize] = k as u32;
        }
        rs.element_from_action(action)
    }

    /// Word rendered with 1-based indices, e.g. `"s1 s2 s1"`, or `"e"`.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "e".to_string();
        }
        self.word
            .iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}
impl Eq for WeylElt {}
impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}
impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt({})", self.word_string())
    }
}
impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

/// Subset of the simple roots, stored as a bit mask over 0-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetK(u64);

impl SubsetK {
    pub const EMPTY: SubsetK = SubsetK(0);

    pub fn from_mask(mask: u64) -> Self {
        SubsetK(mask)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        SubsetK(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// From 1-based indices as they are written by hand.
    pub fn of(members: &[usize]) -> Self {
        Self::from_indices(members.iter().map(|&i| i - 1))
    }

    pub fn full(rank: usize) -> Self {
        SubsetK((1u64 << rank) - 1)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetK) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetK) -> SubsetK {
        SubsetK(self.0 | other.0)
    }

    /// 0-based members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Whether the members form a run of consecutive indices (nonempty).
    pub fn is_consecutive(self) -> bool {
        if self.is_empty() {
            return false;
        }
        let shifted = self.0 >> self.0.trailing_zeros();
        shifted & (shifted + 1) == 0
    }

    /// Smallest member, 1-based.
    pub fn min_1based(self) -> Option<usize> {
        self.iter().next().map(|i| i + 1)
    }

    /// Largest member, 1-based.
    pub fn max_1based(self) -> Option<usize> {
        self.iter().last().map(|i| i + 1)
    }

    /// All subsets of `{0..rank}`, ordered by size and then by sorted members.
    pub fn all(rank: usize) -> Vec<SubsetK> {
        let mut v: Vec<SubsetK> = (0..1u64 << rank).map(SubsetK).collect();
        v.sort();
        v
    }

    /// Parses `"1,2"` (1-based); the empty string or `"{}"` is the empty set.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let t = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut mask = 0u64;
        for tok in t.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok.parse().map_err(|_| format!("bad subset member {tok:?}"))?;
            if i == 0 || i > 64 {
                return Err(format!("subset member {i} out of range"));
            }
            mask |= 1 << (i - 1);
        }
        Ok(SubsetK(mask))
    }
}

impl Ord for SubsetK {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}
impl PartialOrd for SubsetK {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetK {
    /// Sorted comma-joined 1-based indices, `""` for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        f.write_str(&s.join(","))
    }
}
impl fmt::Debug for SubsetK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// An enumerated Weyl group with multiplication tables.
///
/// Elements are indexed in a deterministic order: by length, then by
/// canonical reduced word.
#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    elements: Vec<WeylElt>,
    index: HashMap<Box<[u32]>, usize>,
    /// `right_mul[w * rank + i]` is the index of `w s_i`.
    right_mul: Vec<u32>,
    /// Root permutations of the reflections in the positive roots.
    reflections: OnceLock<Vec<Box<[u32]>>>,
}

impl WeylGroup {
    pub fn new(rs: Arc<RootSystem>, cap: usize) -> Result<Self> {
        let rank = rs.rank;
        let mut elements = vec![rs.identity()];
        let mut index: HashMap<Box<[u32]>, usize> = HashMap::new();
        index.insert(elements[0].action.clone(), 0);
        let mut level_start = 0;
        loop {
            let level_end = elements.len();
            let mut next: Vec<WeylElt> = Vec::new();
            let mut seen: HashSet<Box<[u32]>> = HashSet::new();
            for u in &elements[level_start..level_end] {
                for i in 0..rank {
                    // u s_i is longer iff u(α_i) > 0
                    if !rs.is_positive_index(u.action[rs.simple_root_index(i) as usize]) {
                        continue;
                    }
                    let s = &rs.simple_action[i];
                    let action: Box<[u32]> = s.iter().map(|&k| u.action[k as usize]).collect();
                    if seen.insert(action.clone()) {
                        next.push(rs.element_from_action(action));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            if elements.len() + next.len() > cap {
                return Err(RootSysError::WeylCapExceeded { cap });
            }
            next.sort_by(|a, b| a.word.cmp(&b.word));
            level_start = level_end;
            for e in next {
                index.insert(e.action.clone(), elements.len());
                elements.push(e);
            }
        }

        let mut right_mul = vec![0u32; elements.len() * rank];
        for (w, e) in elements.iter().enumerate() {
            for i in 0..rank {
                let s = &rs.simple_action[i];
                let action: Box<[u32]> = s.iter().map(|&k| e.action[k as usize]).collect();
                right_mul[w * rank + i] = index[&action] as u32;
            }
        }
        Ok(WeylGroup {
            rs,
            elements,
            index,
            right_mul,
            reflections: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn element(&self, w: usize) -> &WeylElt {
        &self.elements[w]
    }

    pub fn index_of(&self, w: &WeylElt) -> Option<usize> {
        self.index.get(&w.action).copied()
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].word.len()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn longest_index(&self) -> usize {
        self.elements.len() - 1
    }

    /// Index of `w s_i`.
    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right_mul[w * self.rs.rank + i] as usize
    }

    /// Whether `s_i` is a right descent of `w`, i.e. `w(α_i) < 0`.
    pub fn is_right_descent(&self, w: usize, i: usize) -> bool {
        let k = self.elements[w].action[self.rs.simple_root_index(i) as usize];
        !self.rs.is_positive_index(k)
    }

    /// Index of `w · v`.
    pub fn mul(&self, w: usize, v: usize) -> usize {
        self.elements[v]
            .word
            .iter()
            .fold(w, |acc, &i| self.right_mul(acc, i))
    }

    /// Bruhat order `u ≤ w`, by matching a reduced word of `u` as a subword of
    /// the canonical reduced word of `w`, scanning `w` from the right.
    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        let (mut u, mut w) = (u, w);
        loop {
            if self.length(u) > self.length(w) {
                return false;
            }
            if self.length(u) == 0 {
                return true;
            }
            if self.length(w) == self.length(u) {
                return u == w;
            }
            let s = *self.elements[w].word.last().unwrap();
            if self.is_right_descent(u, s) {
                u = self.right_mul(u, s);
            }
            w = self.right_mul(w, s);
        }
    }

    /// Index of `w r_β` for the positive root with index `beta`.
    pub fn mul_reflection(&self, w: usize, beta: u32) -> usize {
        let r = &self.reflections()[beta as usize];
        let action: Box<[u32]> = r.iter().map(|&k| self.elements[w].action[k as usize]).collect();
        self.index[&action]
    }

    /// Root permutations of the reflections `r_β`, one per positive root.
    pub fn reflections(&self) -> &[Box<[u32]>] {
        self.reflections.get_or_init(|| {
            (0..self.rs.num_positive_roots() as u32)
                .map(|beta| self.compute_reflection(beta))
                .collect()
        })
    }

    fn compute_reflection(&self, beta: u32) -> Box<[u32]> {
        // β = u(α_i) for some u, i; then r_β = u s_i u⁻¹.
        let rs = &self.rs;
        for (u, e) in self.elements.iter().enumerate() {
            for i in 0..rs.rank {
                if e.action[rs.simple_root_index(i) as usize] == beta {
                    let us = &self.elements[self.right_mul(u, i)].action;
                    let mut inv = vec![0u32; e.action.len()];
                    for (k, &img) in e.action.iter().enumerate() {
                        inv[img as usize] = k as u32;
                    }
                    return inv.iter().map(|&k| us[k as usize]).collect();
                }
            }
        }
        unreachable!("every root is a Weyl translate of a simple root")
    }

    /// Every reduced word of `w` (0-based), in lexicographic order.
    pub fn reduced_words(&self, w: usize) -> Vec<Vec<usize>> {
        if self.length(w) == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rs.rank {
            if self.is_right_descent(w, i) {
                for mut word in self.reduced_words(self.right_mul(w, i)) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }

    /// Indices of the elements of the parabolic subgroup generated by `k`.
    pub fn parabolic(&self, k: SubsetK) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.elements[w].support().is_subset_of(k))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::from_label(&format!("A{n}")).unwrap())
    }

    #[test]
    fn positive_root_counts() {
        for (label, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
        ] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(rs.num_positive_roots(), n, "{label}");
            assert!(rs.positive_roots().iter().all(Root::is_positive));
        }
    }

    #[test]
    fn a2_positive_roots() {
        let rs = RootSystem::from_cartan(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let roots: Vec<_> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(rs.is_type_a());
    }

    #[test]
    fn rejects_bad_cartan() {
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![1]]),
            Err(RootSysError::InvalidCartan(_))
        ));
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, 1], vec![1, 2]]),
            Err(RootSysError::InvalidCartan(_))
        ));
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, -1], vec![0, 2]]),
            Err(RootSysError::InvalidCartan(_))
        ));
        // affine A1
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]),
            Err(RootSysError::NotFiniteType(_))
        ));
        // hyperbolic rank 2: coefficients grow without bound
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, -3], vec![-3, 2]]),
            Err(RootSysError::NotFiniteType(_))
        ));
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, -1 << 40], vec![-1, 2]]),
            Err(RootSysError::NotFiniteType(_))
        ));
        // affine A3 (cycle)
        assert!(matches!(
            RootSystem::from_cartan(vec![
                vec![2, -1, 0, -1],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![-1, 0, -1, 2],
            ]),
            Err(RootSysError::NotFiniteType(_))
        ));
        assert!(matches!(
            RootSystem::from_label("Q3"),
            Err(RootSysError::UnknownType(_))
        ));
    }

    #[test]
    fn act_on_root_examples() {
        let rs = a(2);
        let s1 = rs.simple_reflection(0).unwrap();
        let a1 = Root(vec![1, 0]);
        let a2 = Root(vec![0, 1]);
        assert_eq!(rs.act_on_root(&s1, &a1).unwrap(), Root(vec![-1, 0]));
        assert_eq!(rs.act_on_root(&s1, &a2).unwrap(), Root(vec![1, 1]));
        let s1s2 = rs.element_from_word(&[0, 1]).unwrap();
        assert_eq!(rs.act_on_root(&s1s2, &a1).unwrap(), a2);
        assert!(rs.act_on_root(&s1, &Root(vec![2, 0])).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(a(1).weyl_enumerate().unwrap().len(), 2);
        let w2 = a(2).weyl_enumerate().unwrap();
        let lengths: Vec<_> = (0..w2.len()).map(|w| w2.length(w)).collect();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(a(3).weyl_enumerate().unwrap().len(), 24);
        let b2 = Arc::new(RootSystem::from_label("B2").unwrap());
        assert_eq!(b2.weyl_enumerate().unwrap().len(), 8);
        let g2 = Arc::new(RootSystem::from_label("G2").unwrap());
        assert_eq!(g2.weyl_enumerate().unwrap().len(), 12);
    }

    #[test]
    fn weyl_cap() {
        let err = WeylGroup::new(a(4), 100).unwrap_err();
        assert_eq!(err, RootSysError::WeylCapExceeded { cap: 100 });
    }

    #[test]
    fn bruhat_examples() {
        let rs = a(2);
        let g = rs.weyl_enumerate().unwrap();
        let idx = |w: &[usize]| g.index_of(&rs.element_from_word(w).unwrap()).unwrap();
        assert!(!g.bruhat_leq(idx(&[0]), idx(&[1])));
        assert!(g.bruhat_leq(idx(&[0]), idx(&[0, 1, 0])));
        for w in 0..g.len() {
            assert!(g.bruhat_leq(0, w));
        }
    }

    #[test]
    fn parabolic_longest_and_coxeter() {
        let rs = a(3);
        assert!(rs.longest_element(SubsetK::EMPTY).unwrap().is_identity());
        let a2 = a(2);
        let w0 = a2.longest_element(SubsetK::of(&[1, 2])).unwrap();
        assert_eq!(w0.word(), &[0, 1, 0]);
        let w13 = rs.longest_element(SubsetK::of(&[1, 3])).unwrap();
        assert_eq!(w13.word(), &[0, 2]);
        assert_eq!(
            rs.coxeter_element(SubsetK::of(&[1, 2, 3]), CoxeterOrder::Increasing)
                .unwrap()
                .word(),
            &[0, 1, 2]
        );
        assert_eq!(
            rs.coxeter_element(SubsetK::EMPTY, CoxeterOrder::Increasing),
            Err(RootSysError::EmptySubset)
        );
    }

    #[test]
    fn one_line_round_trip() {
        let rs = a(2);
        let w = rs.parse_element("231").unwrap();
        assert_eq!(w.word(), &[0, 1]);
        assert_eq!(rs.one_line(&w).unwrap(), vec![2, 3, 1]);
        assert_eq!(rs.parse_element("312").unwrap().word(), &[1, 0]);
        assert_eq!(rs.parse_element("s1 s2 s1").unwrap(), rs.parse_element("321").unwrap());
        assert!(rs.parse_element("2314").is_err());
        assert!(rs.parse_element("s0").is_err());
    }

    #[test]
    fn subset_helpers() {
        let k = SubsetK::of(&[2, 3]);
        assert!(k.is_consecutive());
        assert!(!SubsetK::of(&[1, 3]).is_consecutive());
        assert_eq!(k.to_string(), "2,3");
        assert_eq!(SubsetK::parse("2,3").unwrap(), k);
        assert_eq!(SubsetK::parse("").unwrap(), SubsetK::EMPTY);
        let all = SubsetK::all(2);
        assert_eq!(
            all,
            vec![SubsetK::EMPTY, SubsetK::of(&[1]), SubsetK::of(&[2]), SubsetK::of(&[1, 2])]
        );
    }
}
