//! Finite strict partial orders, unit interval posets and starting sets.
//!
//! Elements are labeled `0..n` in the Rust API. The JSON form uses labels
//! `1..=n`.

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{one, ExactRational};

/// A binary relation on `0..n`, stored as a dense `n x n` matrix where
/// `less[i * n + j]` means `i < j` in the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Relation {
    n: usize,
    less: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            less: vec![false; n * n],
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Self::empty(n);
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::LabelOutOfRange { i, j, n });
            }
            rel.insert(i, j);
        }
        Ok(rel)
    }

    pub fn from_fn(n: usize, mut less: impl FnMut(usize, usize) -> bool) -> Self {
        let mut rel = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                rel.less[i * n + j] = less(i, j);
            }
        }
        rel
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.less[i * self.n + j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.less[i * self.n + j] = true;
    }

    /// Related pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.lt(i, j))
            .collect()
    }

    pub fn down_size(&self, i: usize) -> usize {
        (0..self.n).filter(|&k| self.lt(k, i)).count()
    }

    pub fn up_size(&self, i: usize) -> usize {
        (0..self.n).filter(|&k| self.lt(i, k)).count()
    }

    /// Warshall closure.
    pub fn transitive_closure(&self) -> Self {
        let mut rel = self.clone();
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if rel.lt(i, k) {
                    for j in 0..n {
                        if rel.lt(k, j) {
                            rel.insert(i, j);
                        }
                    }
                }
            }
        }
        rel
    }

    /// Irreflexive and transitive (antisymmetry follows from these two).
    pub fn check_strict_order(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if self.lt(i, i) {
                return Err(Error::NotStrictOrder(format!(
                    "{} < {} (reflexive)",
                    i + 1,
                    i + 1
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.lt(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.lt(j, k) && !self.lt(i, k) {
                        return Err(Error::NotStrictOrder(format!(
                            "{} < {} < {} but not {} < {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            i + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The relation transported along `new_label[old] = new`.
    pub fn relabel(&self, new_label: &[usize]) -> Self {
        let mut rel = Self::empty(self.n);
        for (i, j) in self.pairs() {
            rel.insert(new_label[i], new_label[j]);
        }
        rel
    }
}

/// No induced chain `a < b < c` together with an element `d` incomparable to
/// all three.
pub fn is_three_plus_one_free(rel: &Relation) -> bool {
    find_three_plus_one(rel).is_none()
}

fn find_three_plus_one(rel: &Relation) -> Option<[usize; 4]> {
    let n = rel.len();
    for b in 0..n {
        for a in (0..n).filter(|&a| rel.lt(a, b)) {
            for c in (0..n).filter(|&c| rel.lt(b, c)) {
                for d in 0..n {
                    if d != a
                        && d != b
                        && d != c
                        && !rel.comparable(d, a)
                        && !rel.comparable(d, b)
                        && !rel.comparable(d, c)
                    {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// No induced pair of 2-chains `a < b`, `c < d` with no relation between
/// them.
pub fn is_two_plus_two_free(rel: &Relation) -> bool {
    find_two_plus_two(rel).is_none()
}

fn find_two_plus_two(rel: &Relation) -> Option<[usize; 4]> {
    let chains = rel.pairs();
    for &(a, b) in &chains {
        for &(c, d) in &chains {
            let disjoint = a != c && a != d && b != c && b != d;
            if disjoint
                && !rel.comparable(a, c)
                && !rel.comparable(a, d)
                && !rel.comparable(b, c)
                && !rel.comparable(b, d)
            {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

pub fn is_unit_interval(rel: &Relation) -> bool {
    is_three_plus_one_free(rel) && is_two_plus_two_free(rel)
}

fn check_unit_interval(rel: &Relation) -> Result<()> {
    if find_three_plus_one(rel).is_some() {
        return Err(Error::NotUnitInterval("3+1"));
    }
    if find_two_plus_two(rel).is_some() {
        return Err(Error::NotUnitInterval("2+2"));
    }
    Ok(())
}

/// A unit interval order on `0..n` in canonical labeling: labels follow the
/// order of left endpoints in any unit-interval realization, so `i < j` as
/// labels never has `j` below `i` in the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UnitIntervalPoset {
    rel: Relation,
}

impl UnitIntervalPoset {
    /// Accepts `rel` only if it is already a canonical unit interval order.
    pub fn new(rel: Relation) -> Result<Self> {
        rel.check_strict_order()?;
        check_unit_interval(&rel)?;
        check_canonical(&rel)?;
        Ok(Self { rel })
    }

    pub(crate) fn new_unchecked(rel: Relation) -> Self {
        debug_assert_eq!(
            Self::new(rel.clone()).map(|_| ()),
            Ok(()),
            "not a canonical unit interval order"
        );
        Self { rel }
    }

    pub fn size(&self) -> usize {
        self.rel.len()
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.rel.lt(i, j)
    }

    pub fn up_sizes(&self) -> Vec<usize> {
        (0..self.size()).map(|i| self.rel.up_size(i)).collect()
    }

    pub fn down_sizes(&self) -> Vec<usize> {
        (0..self.size()).map(|i| self.rel.down_size(i)).collect()
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.size(),
            relations: self
                .rel
                .pairs()
                .into_iter()
                .map(|(i, j)| [i + 1, j + 1])
                .collect(),
        }
    }

    /// Compact JSON text, e.g. `{"n":2,"relations":[[1,2]]}`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data serializes")
    }

    /// Parses any unit interval order in JSON form; the relation is closed
    /// transitively and brought to canonical labeling.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: PosetJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json(&json)
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let n = json.n;
        let pairs = json
            .relations
            .iter()
            .map(|&[i, j]| {
                if i == 0 || j == 0 || i > n || j > n {
                    Err(Error::LabelOutOfRange { i, j, n })
                } else {
                    Ok((i - 1, j - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let rel = Relation::from_pairs(n, &pairs)?.transitive_closure();
        canonical_form(&rel)
    }
}

fn check_canonical(rel: &Relation) -> Result<()> {
    let n = rel.len();
    for i in 0..n {
        for j in i + 1..n {
            if rel.lt(j, i) {
                return Err(Error::NotCanonical(format!("{} < {}", j + 1, i + 1)));
            }
        }
    }
    for i in 1..n {
        if rel.down_size(i - 1) > rel.down_size(i) {
            return Err(Error::NotCanonical(format!(
                "down-set sizes decrease at {}",
                i + 1
            )));
        }
        if rel.up_size(i - 1) < rel.up_size(i) {
            return Err(Error::NotCanonical(format!(
                "up-set sizes increase at {}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// JSON wire form of a poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub relations: Vec<[usize; 2]>,
}

/// Relabel a unit interval order by (down-set size ascending, up-set size
/// descending, old label). Down-sets and up-sets of a (2+2)-free order are
/// nested, so equal keys only occur for elements with identical down- and
/// up-sets, and the result depends only on the isomorphism class.
pub fn canonical_form(rel: &Relation) -> Result<UnitIntervalPoset> {
    rel.check_strict_order()?;
    check_unit_interval(rel)?;
    Ok(canonicalize_unchecked(rel))
}

/// [`canonical_form`] without the validity checks, for relations already
/// known to be unit interval orders.
pub(crate) fn canonicalize_unchecked(rel: &Relation) -> UnitIntervalPoset {
    let n = rel.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (rel.down_size(i), Reverse(rel.up_size(i)), i));
    let mut new_label = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        new_label[old] = new;
    }
    UnitIntervalPoset::new_unchecked(rel.relabel(&new_label))
}

pub fn posets_isomorphic(p: &Relation, q: &Relation) -> Result<bool> {
    Ok(canonical_form(p)? == canonical_form(q)?)
}

/// Strictly increasing exact rationals `x_1 < ... < x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StartingSet {
    points: Vec<ExactRational>,
}

impl StartingSet {
    pub fn new(points: Vec<ExactRational>) -> Result<Self> {
        if let Some(index) = points.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing { index: index + 1 });
        }
        Ok(Self { points })
    }

    /// Sorts `points`; fails on duplicates.
    pub fn from_unsorted(mut points: Vec<ExactRational>) -> Result<Self> {
        points.sort();
        Self::new(points)
    }

    pub fn points(&self) -> &[ExactRational] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `i < j` iff `x_i + 1 < x_j`. The start-point labeling is already the
/// canonical one.
pub fn poset_from_starting_set(set: &StartingSet) -> UnitIntervalPoset {
    let xs = set.points();
    let n = xs.len();
    let mut rel = Relation::empty(n);
    // Elements above i form a suffix starting at `first_above`, which only
    // moves right as i grows.
    let mut first_above = 0;
    for i in 0..n {
        let shifted = &xs[i] + one();
        while first_above < n && xs[first_above] <= shifted {
            first_above += 1;
        }
        for j in first_above..n {
            rel.insert(i, j);
        }
    }
    UnitIntervalPoset::new_unchecked(rel)
}
