//! Permutations and signed permutations in one-line notation.
//!
//! A [`SignedPerm`] of rank `n` is stored as `[σ(1), ..., σ(n)]` and extended
//! to `±[n]` by `σ(-i) = -σ(i)`. Products are composition of maps:
//! `(u * v)(i) = u(v(i))`, so right multiplication by a simple reflection
//! acts on positions and left multiplication acts on values.
//!
//! Simple reflections: `s_i` (`i >= 1`) swaps `i` and `i+1`; in type B `s_0`
//! negates `1`; in type D `s_0` is `1 -> -2, 2 -> -1`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{domain, guard, parse, Error, Result};
use crate::qseries::Family;

/// Largest group order for which the Cayley-graph BFS is run.
pub const MAX_BFS_ORDER: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OneLine")]
pub struct SignedPerm {
    oneline: Vec<i32>,
}

#[derive(Deserialize)]
struct OneLine {
    oneline: Vec<i32>,
}

impl TryFrom<OneLine> for SignedPerm {
    type Error = Error;
    fn try_from(v: OneLine) -> Result<Self> {
        SignedPerm::new(v.oneline)
    }
}

impl SignedPerm {
    pub fn new(oneline: Vec<i32>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &x in &oneline {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(domain(format!(
                    "{oneline:?} is not a signed permutation of rank {n}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { oneline })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            oneline: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[i32] {
        &self.oneline
    }

    pub fn is_identity(&self) -> bool {
        self.oneline
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    /// `σ(i)` for `i` in `±[n]`.
    pub fn image(&self, i: i32) -> i32 {
        let v = self.oneline[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self ∘ rhs`.
    ///
    /// # Panics
    /// If the ranks differ.
    pub fn compose(&self, rhs: &SignedPerm) -> SignedPerm {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in composition");
        SignedPerm {
            oneline: rhs.oneline.iter().map(|&x| self.image(x)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0; self.rank()];
        for (i, &x) in self.oneline.iter().enumerate() {
            let pos = i as i32 + 1;
            inv[x.unsigned_abs() as usize - 1] = if x < 0 { -pos } else { pos };
        }
        SignedPerm { oneline: inv }
    }

    /// 1-indexed positions holding negative entries.
    pub fn neg_positions(&self) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| self.oneline[i - 1] < 0)
            .collect()
    }

    pub fn neg(&self) -> usize {
        self.oneline.iter().filter(|&&x| x < 0).count()
    }

    /// `-Σ_{i ∈ Neg} σ_i`, the total absolute value of the negative entries.
    pub fn neg_sum(&self) -> usize {
        self.oneline
            .iter()
            .filter(|&&x| x < 0)
            .map(|&x| x.unsigned_abs() as usize)
            .sum()
    }

    pub fn belongs_to(&self, family: Family) -> bool {
        match family {
            Family::A => self.neg() == 0,
            Family::B => true,
            Family::D => self.neg().is_multiple_of(2),
        }
    }

    fn check_family(&self, family: Family) -> Result<()> {
        if self.belongs_to(family) {
            Ok(())
        } else {
            Err(domain(format!(
                "{self} is not an element of type {family:?}"
            )))
        }
    }

    /// `self · s_i` (acts on positions).
    pub fn right_simple(&self, i: usize, family: Family) -> Result<SignedPerm> {
        let n = self.rank();
        let mut w = self.oneline.clone();
        match (i, family) {
            (0, Family::A) => return Err(domain("type A has no generator s_0")),
            (0, Family::B) if n >= 1 => w[0] = -w[0],
            (0, Family::D) if n >= 2 => {
                let (a, b) = (w[0], w[1]);
                w[0] = -b;
                w[1] = -a;
            }
            (i, _) if i >= 1 && i < n => w.swap(i - 1, i),
            _ => return Err(domain(format!("no generator s_{i} in rank {n}"))),
        }
        Ok(SignedPerm { oneline: w })
    }

    /// `s_i · self` (acts on values).
    pub fn left_simple(&self, i: usize, family: Family) -> Result<SignedPerm> {
        let s = SignedPerm::identity(self.rank()).right_simple(i, family)?;
        Ok(s.compose(self))
    }

    /// The product `s_{w_1} s_{w_2} ⋯ s_{w_k}`.
    pub fn from_word(word: &[usize], n: usize, family: Family) -> Result<SignedPerm> {
        word.iter().try_fold(SignedPerm::identity(n), |acc, &i| {
            acc.right_simple(i, family)
        })
    }

    /// All elements of the type-`family` group on `n` letters, sorted by one-line notation.
    pub fn all(family: Family, n: usize) -> Vec<SignedPerm> {
        let mut perms = Vec::new();
        let mut current: Vec<i32> = (1..=n as i32).collect();
        permutations(&mut current, 0, &mut perms);
        let mut out = Vec::new();
        for p in perms {
            let signs: u32 = if family == Family::A { 1 } else { 1 << n };
            for mask in 0..signs {
                let w: Vec<i32> = p
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if mask >> k & 1 == 1 { -x } else { x })
                    .collect();
                let s = SignedPerm { oneline: w };
                if s.belongs_to(family) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    /// Order of the type-`family` group on `n` letters.
    pub fn group_order(family: Family, n: usize) -> usize {
        let fact: usize = (1..=n).product();
        match family {
            Family::A => fact,
            Family::B => fact << n,
            Family::D if n == 0 => 1,
            Family::D => (fact << n) / 2,
        }
    }
}

fn permutations(v: &mut Vec<i32>, k: usize, out: &mut Vec<Vec<i32>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

impl std::ops::Mul for &SignedPerm {
    type Output = SignedPerm;
    fn mul(self, rhs: &SignedPerm) -> SignedPerm {
        self.compose(rhs)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.oneline.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Parses one-line notation `[4,2,-6,5,1,3]` (brackets optional).
impl FromStr for SignedPerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        if body.trim().is_empty() {
            return Ok(SignedPerm::identity(0));
        }
        let oneline = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|e| parse(format!("bad entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::new(oneline)
    }
}

/// Number of pairs `i < j` with `w_i > w_j`.
pub fn inv_word(w: &[i32]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// 1-indexed positions `i` with `w_i > w_{i+1}`.
pub fn des_word(w: &[i32]) -> Vec<usize> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn maj_word(w: &[i32]) -> usize {
    des_word(w).iter().sum()
}

/// Coxeter length with respect to the simple reflections.
pub fn length_s(s: &SignedPerm, family: Family) -> Result<usize> {
    s.check_family(family)?;
    let inv = inv_word(&s.oneline);
    Ok(match family {
        Family::A => inv,
        Family::B => inv + s.neg_sum(),
        Family::D => inv + s.neg_sum() - s.neg(),
    })
}

/// Descent set of the one-line word.
pub fn des_set(s: &SignedPerm, family: Family) -> Result<Vec<usize>> {
    s.check_family(family)?;
    Ok(des_word(&s.oneline))
}

pub fn des(s: &SignedPerm, family: Family) -> Result<usize> {
    Ok(des_set(s, family)?.len())
}

pub fn ides_set(s: &SignedPerm, family: Family) -> Result<Vec<usize>> {
    des_set(&s.inverse(), family)
}

pub fn ides(s: &SignedPerm, family: Family) -> Result<usize> {
    Ok(ides_set(s, family)?.len())
}

/// Type-dependent major index:
/// A: `maj(w)`; B: `2 maj(w) + neg`; D: `maj(w) - Σ_{Neg} σ_i - neg`.
pub fn maj(s: &SignedPerm, family: Family) -> Result<usize> {
    s.check_family(family)?;
    let m = maj_word(&s.oneline);
    Ok(match family {
        Family::A => m,
        Family::B => 2 * m + s.neg(),
        Family::D => m + s.neg_sum() - s.neg(),
    })
}

pub fn imaj(s: &SignedPerm, family: Family) -> Result<usize> {
    maj(&s.inverse(), family)
}

/// Reverse the relative order of the negative entries, keeping their positions.
pub fn rev(s: &SignedPerm) -> SignedPerm {
    let positions = s.neg_positions();
    let mut oneline = s.oneline.clone();
    for (k, &p) in positions.iter().enumerate() {
        oneline[p - 1] = s.oneline[positions[positions.len() - 1 - k] - 1];
    }
    SignedPerm { oneline }
}

/// Cycle notation. A cycle whose last entry is the negative of its first,
/// `(i_1, ..., i_{k-1}, -i_1)`, stands for `i_1 -> ... -> i_{k-1} -> -i_1 -> ...`;
/// any other cycle `(a_1, ..., a_k)` also implies its mirror `(-a_1, ..., -a_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CycleDecomp {
    pub cycles: Vec<Vec<i32>>,
}

impl CycleDecomp {
    pub fn is_paired(cycle: &[i32]) -> bool {
        cycle.len() >= 2 && cycle[cycle.len() - 1] == -cycle[0]
    }

    /// `l(c) = k - 1` summed over the cycles.
    pub fn length(&self) -> usize {
        self.cycles.iter().map(|c| c.len().saturating_sub(1)).sum()
    }
}

impl fmt::Display for CycleDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &self.cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleDecomp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(parse(format!("expected '(' in {s:?}")));
            };
            let end = body
                .find(')')
                .ok_or_else(|| parse(format!("unclosed cycle in {s:?}")))?;
            let inner = body[..end].trim();
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i32>()
                            .map_err(|e| parse(format!("bad entry {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = body[end + 1..].trim_start();
        }
        Ok(CycleDecomp { cycles })
    }
}

/// Canonical cycle notation: cycles ordered by their smallest absolute value,
/// each starting at that value taken positive; fixed points are omitted.
pub fn to_cycles(s: &SignedPerm) -> CycleDecomp {
    let n = s.rank();
    let mut visited = vec![false; n + 1];
    let mut cycles = Vec::new();
    for x in 1..=n as i32 {
        if visited[x as usize] || s.image(x) == x {
            continue;
        }
        let mut orbit = vec![x];
        let mut y = s.image(x);
        while y != x {
            orbit.push(y);
            y = s.image(y);
        }
        for &y in &orbit {
            visited[y.unsigned_abs() as usize] = true;
        }
        if let Some(m) = orbit.iter().position(|&y| y == -x) {
            orbit.truncate(m + 1);
        }
        cycles.push(orbit);
    }
    CycleDecomp { cycles }
}

pub fn from_cycles(c: &CycleDecomp, n: usize) -> Result<SignedPerm> {
    let mut oneline: Vec<i32> = (1..=n as i32).collect();
    let mut used = vec![false; n + 1];
    let set = |from: i32, to: i32, oneline: &mut Vec<i32>| {
        let (from, to) = if from < 0 { (-from, -to) } else { (from, to) };
        oneline[from as usize - 1] = to;
    };
    for cycle in &c.cycles {
        if cycle.is_empty() {
            continue;
        }
        let paired = CycleDecomp::is_paired(cycle);
        let body = if paired {
            &cycle[..cycle.len() - 1]
        } else {
            &cycle[..]
        };
        for &x in body {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || used[a] {
                return Err(domain(format!("malformed cycle notation {c}")));
            }
            used[a] = true;
        }
        for k in 0..body.len() {
            let next = if k + 1 < body.len() {
                body[k + 1]
            } else if paired {
                -body[0]
            } else {
                body[0]
            };
            set(body[k], next, &mut oneline);
        }
    }
    SignedPerm::new(oneline)
}

/// Absolute length from the cycle formula (types A and B).
pub fn length_t(s: &SignedPerm) -> usize {
    to_cycles(s).length()
}

/// All reflections of the type-`family` group on `n` letters.
pub fn reflections(family: Family, n: usize) -> Vec<SignedPerm> {
    let mut out = Vec::new();
    for i in 1..=n as i32 {
        for j in i + 1..=n as i32 {
            out.push(
                from_cycles(
                    &CycleDecomp {
                        cycles: vec![vec![i, j]],
                    },
                    n,
                )
                .unwrap(),
            );
            if family != Family::A {
                out.push(
                    from_cycles(
                        &CycleDecomp {
                            cycles: vec![vec![i, -j]],
                        },
                        n,
                    )
                    .unwrap(),
                );
            }
        }
        if family == Family::B {
            out.push(
                from_cycles(
                    &CycleDecomp {
                        cycles: vec![vec![i, -i]],
                    },
                    n,
                )
                .unwrap(),
            );
        }
    }
    out
}

type DistanceTable = Arc<HashMap<Vec<i32>, usize>>;

fn bfs_table(family: Family, n: usize) -> Result<DistanceTable> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), DistanceTable>>> = OnceLock::new();
    guard(
        "reflection-length BFS",
        MAX_BFS_ORDER,
        SignedPerm::group_order(family, n),
    )?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(family, n)) {
        return Ok(t.clone());
    }
    let refl = reflections(family, n);
    let mut dist = HashMap::new();
    let start = SignedPerm::identity(n);
    dist.insert(start.oneline.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w.oneline];
        for t in &refl {
            let next = w.compose(t);
            if !dist.contains_key(&next.oneline) {
                dist.insert(next.oneline.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    let table = Arc::new(dist);
    cache.lock().unwrap().insert((family, n), table.clone());
    Ok(table)
}

/// Absolute length as a graph distance in the Cayley graph on all reflections.
pub fn length_t_bfs(s: &SignedPerm, family: Family) -> Result<usize> {
    s.check_family(family)?;
    let table = bfs_table(family, s.rank())?;
    Ok(table[&s.oneline])
}

/// Absolute length in the given type: cycle formula for A and B, BFS for D.
pub fn length_t_typed(s: &SignedPerm, family: Family) -> Result<usize> {
    match family {
        Family::A | Family::B => {
            s.check_family(family)?;
            Ok(length_t(s))
        }
        Family::D => length_t_bfs(s, family),
    }
}

/// Absolute order: `u <=_T v` iff `l_T(v) = l_T(u) + l_T(u^{-1} v)`.
pub fn leq_t(u: &SignedPerm, v: &SignedPerm, family: Family) -> Result<bool> {
    if u.rank() != v.rank() {
        return Err(domain("absolute order needs equal ranks"));
    }
    let lv = length_t_typed(v, family)?;
    let lu = length_t_typed(u, family)?;
    let rest = length_t_typed(&u.inverse().compose(v), family)?;
    Ok(lv == lu + rest)
}

/// Which product of the simple reflections to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterVariant {
    /// `s_1 s_2 ⋯ s_{n-1}` (A) or `s_0 s_1 ⋯ s_{n-1}` (B, D).
    Ascending,
    /// `s_{n-1} ⋯ s_1` (A) or `s_{n-1} ⋯ s_1 s_0` (B, D).
    Descending,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterElement {
    pub element: SignedPerm,
    pub word: Vec<usize>,
}

/// Coxeter element of the type-`family` group on `n` letters.
pub fn coxeter_element(family: Family, n: usize, variant: CoxeterVariant) -> CoxeterElement {
    let first = if family == Family::A { 1 } else { 0 };
    let mut word: Vec<usize> = (first..n).collect();
    if family == Family::D && n < 2 {
        word.clear();
    }
    if variant == CoxeterVariant::Descending {
        word.reverse();
    }
    let element = SignedPerm::from_word(&word, n, family).expect("generators in range");
    CoxeterElement { element, word }
}

/// Formats a word of simple reflections as `s2 s1 s0`.
pub fn word_to_string(word: &[usize]) -> String {
    word.iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Set of absolute values moved by `s`.
pub fn support(s: &SignedPerm) -> BTreeSet<usize> {
    (1..=s.rank())
        .filter(|&i| s.oneline[i - 1] != i as i32)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::QPoly;
    use proptest::prelude::*;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    fn cyc(s: &str) -> CycleDecomp {
        s.parse().unwrap()
    }

    /// Word length over simple generators, by BFS; independent of the formulas.
    fn simple_bfs(family: Family, n: usize) -> HashMap<Vec<i32>, usize> {
        let gens: Vec<usize> = match family {
            Family::A => (1..n).collect(),
            _ => (0..n).collect(),
        };
        let mut dist = HashMap::from([(SignedPerm::identity(n).oneline, 0)]);
        let mut queue = VecDeque::from([SignedPerm::identity(n)]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w.oneline];
            for &g in &gens {
                let next = w.right_simple(g, family).unwrap();
                dist.entry(next.oneline.clone()).or_insert_with(|| {
                    queue.push_back(next.clone());
                    d + 1
                });
            }
        }
        dist
    }

    #[test]
    fn inversions() {
        assert_eq!(inv_word(&[1, 2, 3]), 0);
        assert_eq!(inv_word(&[-1, -2]), 1);
        assert_eq!(inv_word(&[1, 3, -4, -2]), 4);
    }

    #[test]
    fn lengths() {
        assert_eq!(length_s(&p("[-1,-2]"), Family::B).unwrap(), 4);
        assert_eq!(length_s(&p("[7,3,4,5,2,6,9,8,1]"), Family::A).unwrap(), 17);
        assert!(length_s(&p("[-1,2]"), Family::A).is_err());
        assert!(length_s(&p("[-1,2]"), Family::D).is_err());
        for (family, n) in [(Family::A, 5), (Family::B, 4), (Family::D, 4)] {
            let oracle = simple_bfs(family, n);
            let all = SignedPerm::all(family, n);
            assert_eq!(all.len(), oracle.len());
            for s in all {
                assert_eq!(length_s(&s, family).unwrap(), oracle[&s.oneline], "{s}");
            }
        }
    }

    #[test]
    fn simple_reflection_conventions() {
        let s12 = SignedPerm::from_word(&[1, 2], 3, Family::A).unwrap();
        assert_eq!(s12, p("[2,3,1]"));
        assert_eq!(
            SignedPerm::from_word(&[0], 2, Family::B).unwrap(),
            p("[-1,2]")
        );
        assert_eq!(
            SignedPerm::from_word(&[0], 3, Family::D).unwrap(),
            p("[-2,-1,3]")
        );
        let w = p("[3,-1,2]");
        assert_eq!(w.left_simple(1, Family::B).unwrap(), p("[3,-2,1]"));
        assert_eq!(w.right_simple(1, Family::B).unwrap(), p("[-1,3,2]"));
    }

    #[test]
    fn major_indices() {
        let sigma = p("[7,3,4,5,2,6,9,8,1]");
        assert_eq!(des_set(&sigma, Family::A).unwrap(), vec![1, 4, 7, 8]);
        assert_eq!(ides_set(&sigma, Family::A).unwrap(), vec![1, 2, 6, 8]);
        assert_eq!(maj(&sigma, Family::A).unwrap(), 20);
        assert_eq!(imaj(&sigma, Family::A).unwrap(), 17);
        assert_eq!(maj(&p("[-1,2]"), Family::B).unwrap(), 1);
        assert_eq!(maj(&SignedPerm::identity(4), Family::D).unwrap(), 0);
    }

    #[test]
    fn maj_and_length_equidistributed() {
        for (family, max) in [(Family::A, 6), (Family::B, 4), (Family::D, 4)] {
            for n in 1..=max {
                let all = SignedPerm::all(family, n);
                let by_maj = QPoly::from_stats(all.iter().map(|s| maj(s, family).unwrap()));
                let by_len = QPoly::from_stats(all.iter().map(|s| length_s(s, family).unwrap()));
                assert_eq!(by_maj, by_len, "{family:?}{n}");
            }
        }
    }

    #[test]
    fn reversal() {
        assert_eq!(rev(&p("[2,-4,3,-1]")), p("[2,-1,3,-4]"));
        assert_eq!(rev(&p("[-3,-2,-1]")), p("[-1,-2,-3]"));
        assert_eq!(rev(&SignedPerm::identity(4)), SignedPerm::identity(4));
        for s in SignedPerm::all(Family::B, 4) {
            assert_eq!(rev(&rev(&s)), s);
        }
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(to_cycles(&p("[4,2,6,5,1,3]")), cyc("(1,4,5)(3,6)"));
        assert_eq!(to_cycles(&p("[4,2,-6,5,1,3]")), cyc("(1,4,5)(3,-6,-3)"));
        assert_eq!(to_cycles(&p("[4,2,6,5,-1,-3]")), cyc("(1,4,5,-1)(3,6,-3)"));
        assert_eq!(to_cycles(&p("[-3,-2,-1]")), cyc("(1,-3)(2,-2)"));
        assert_eq!(
            from_cycles(&cyc("(6,3,-6)(1,4,5)"), 6).unwrap(),
            p("[4,2,-6,5,1,3]")
        );
        assert_eq!(to_cycles(&p("[-3,-2,-1]")).to_string(), "(1,-3)(2,-2)");
        assert_eq!(to_cycles(&SignedPerm::identity(3)).to_string(), "()");
        assert!(from_cycles(&cyc("(1,2)(2,3)"), 3).is_err());
        assert!(from_cycles(&cyc("(1,5)"), 3).is_err());
        for s in SignedPerm::all(Family::B, 3) {
            assert_eq!(from_cycles(&to_cycles(&s), 3).unwrap(), s);
        }
    }

    #[test]
    fn absolute_length() {
        assert_eq!(length_t(&p("[4,2,6,5,1,3]")), 3);
        assert_eq!(length_t(&p("[-3,-2,-1]")), 2);
        for (family, max) in [(Family::A, 5), (Family::B, 3)] {
            for n in 1..=max {
                for s in SignedPerm::all(family, n) {
                    assert_eq!(length_t(&s), length_t_bfs(&s, family).unwrap(), "{s}");
                    assert!(length_t(&s) <= length_s(&s, family).unwrap());
                }
            }
        }
        for t in reflections(Family::D, 4) {
            assert_eq!(length_t_bfs(&t, Family::D).unwrap(), 1);
        }
        assert!(length_t_bfs(&SignedPerm::identity(7), Family::B).is_err());
    }

    #[test]
    fn absolute_order() {
        let c = coxeter_element(Family::B, 3, CoxeterVariant::Ascending).element;
        assert_eq!(c, p("[2,3,-1]"));
        assert_eq!(to_cycles(&c), cyc("(1,2,3,-1)"));
        assert!(leq_t(&p("[-3,-2,-1]"), &c, Family::B).unwrap());
        assert!(leq_t(&SignedPerm::identity(3), &c, Family::B).unwrap());
        let t = p("[2,1,3]");
        assert!(!leq_t(&c, &t, Family::B).unwrap());
    }

    #[test]
    fn coxeter_elements() {
        let down = coxeter_element(Family::A, 3, CoxeterVariant::Descending);
        assert_eq!(down.word, vec![2, 1]);
        assert_eq!(down.element, p("[3,1,2]"));
        assert_eq!(to_cycles(&down.element), cyc("(1,3,2)"));
        assert_eq!(
            coxeter_element(Family::A, 2, CoxeterVariant::Ascending).element,
            p("[2,1]")
        );
        assert_eq!(
            coxeter_element(Family::B, 5, CoxeterVariant::Ascending).element,
            p("[2,3,4,5,-1]")
        );
        for (family, n) in [(Family::A, 5), (Family::B, 4), (Family::D, 4)] {
            let rank = if family == Family::A { n - 1 } else { n };
            for v in [CoxeterVariant::Ascending, CoxeterVariant::Descending] {
                let c = coxeter_element(family, n, v).element;
                let lc = length_t_typed(&c, family).unwrap();
                assert_eq!(lc, rank);
                let max = SignedPerm::all(family, n)
                    .iter()
                    .map(|s| length_t_typed(s, family).unwrap())
                    .max()
                    .unwrap();
                assert_eq!(lc, max);
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(SignedPerm::all(Family::D, 4).len(), 192);
        assert_eq!(SignedPerm::group_order(Family::D, 4), 192);
        assert_eq!(SignedPerm::group_order(Family::B, 3), 48);
        assert_eq!(SignedPerm::all(Family::A, 0).len(), 1);
    }

    #[test]
    fn json_shape() {
        let s = p("[4,2,-6,5,1,3]");
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"oneline":[4,2,-6,5,1,3]}"#);
        assert_eq!(serde_json::from_str::<SignedPerm>(&j).unwrap(), s);
        assert!(serde_json::from_str::<SignedPerm>(r#"{"oneline":[1,1]}"#).is_err());
    }

    fn arb_signed(n: usize) -> impl Strategy<Value = SignedPerm> {
        (
            Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(w, signs)| {
                let v = w
                    .iter()
                    .zip(signs)
                    .map(|(&x, s)| if s { -x } else { x })
                    .collect();
                SignedPerm::new(v).unwrap()
            })
    }

    proptest! {
        #[test]
        fn inverse_and_composition(u in arb_signed(7), v in arb_signed(7)) {
            prop_assert!(u.compose(&u.inverse()).is_identity());
            let uv = u.compose(&v);
            prop_assert_eq!(uv.inverse(), v.inverse().compose(&u.inverse()));
            prop_assert_eq!(length_s(&u, Family::B).unwrap(), length_s(&u.inverse(), Family::B).unwrap());
        }

        #[test]
        fn cycles_round_trip(u in arb_signed(9)) {
            let c = to_cycles(&u);
            prop_assert_eq!(from_cycles(&c, 9).unwrap(), u.clone());
            prop_assert_eq!(c.to_string().parse::<CycleDecomp>().unwrap(), c);
            prop_assert_eq!(rev(&rev(&u)), u);
        }
    }
}
