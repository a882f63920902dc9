//! Non-crossing partitions, both as absolute-order intervals `[1, c]_T` and
//! as set partitions of `[n]` (type A) or `±[n]` (type B).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::qseries::{Family, GroupType, QPoly};
use crate::rootposets::cat_q;
use crate::signedperm::{
    coxeter_element, from_cycles, length_s, length_t_typed, leq_t, rev, to_cycles, CoxeterVariant,
    CycleDecomp, SignedPerm,
};
use crate::sortable::enumerate_sortables_unguarded;

/// A set partition of `{1, ..., n}`; blocks sorted internally and by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartitionA {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartitionA {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for &x in blocks.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(domain(format!("blocks do not partition [1,{n}]")));
            }
            seen[x] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(domain(format!("blocks do not cover [1,{n}]")));
        }
        blocks.sort();
        Ok(SetPartitionA { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        SetPartitionA {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl fmt::Display for SetPartitionA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(&self.blocks).expect("blocks serialize"))
    }
}

/// Position of a signed label in the order `-1 < -2 < ... < -n < 1 < ... < n`.
pub fn b_order_key(x: i32, n: usize) -> usize {
    if x < 0 {
        x.unsigned_abs() as usize
    } else {
        n + x as usize
    }
}

/// A set partition of `±[n]` closed under negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartitionB {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl SetPartitionB {
    /// Checks that the blocks partition `±[n]` and that `-B` is a block with `B`.
    pub fn new(n: usize, blocks: Vec<Vec<i32>>) -> Result<Self> {
        let mut blocks: Vec<Vec<i32>> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut b| {
                b.sort_by_key(|&x| b_order_key(x, n));
                b
            })
            .collect();
        let mut seen = HashSet::new();
        for &x in blocks.iter().flatten() {
            if x == 0 || x.unsigned_abs() as usize > n || !seen.insert(x) {
                return Err(domain(format!("blocks do not partition ±[1,{n}]")));
            }
        }
        if seen.len() != 2 * n {
            return Err(domain(format!("blocks do not cover ±[1,{n}]")));
        }
        let as_sets: HashSet<BTreeSet<i32>> =
            blocks.iter().map(|b| b.iter().copied().collect()).collect();
        for b in &as_sets {
            let neg: BTreeSet<i32> = b.iter().map(|x| -x).collect();
            if !as_sets.contains(&neg) {
                return Err(domain("partition is not closed under negation"));
            }
        }
        blocks.sort_by_key(|b| b.iter().map(|&x| b_order_key(x, n)).collect::<Vec<_>>());
        Ok(SetPartitionB { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// Number of blocks with `B = -B`.
    pub fn symmetric_blocks(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.iter().all(|x| b.contains(&-x)))
            .count()
    }
}

impl fmt::Display for SetPartitionB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(&self.blocks).expect("blocks serialize"))
    }
}

/// Crossing test on blocks already mapped to positions of a total order.
fn crossing_free(blocks: &[Vec<usize>]) -> bool {
    let mut owner = HashMap::new();
    for (k, b) in blocks.iter().enumerate() {
        for &x in b {
            owner.insert(x, k);
        }
    }
    let mut points: Vec<usize> = owner.keys().copied().collect();
    points.sort_unstable();
    let m = points.len();
    let block_of = |i: usize| owner[&points[i]];
    for a in 0..m {
        for b in a + 1..m {
            if block_of(a) == block_of(b) {
                continue;
            }
            for c in b + 1..m {
                if block_of(c) != block_of(a) {
                    continue;
                }
                for d in c + 1..m {
                    if block_of(d) == block_of(b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_noncrossing_a(p: &SetPartitionA) -> bool {
    crossing_free(&p.blocks)
}

pub fn is_noncrossing_b(p: &SetPartitionB) -> bool {
    let mapped: Vec<Vec<usize>> = p
        .blocks
        .iter()
        .map(|b| b.iter().map(|&x| b_order_key(x, p.n)).collect())
        .collect();
    crossing_free(&mapped)
}

fn group_rank(family: Family, n: usize) -> usize {
    GroupType::on_letters(family, n).rank
}

/// `NC(W, c) = [1, c]_T`, sorted by one-line notation.
pub fn nc_elements(family: Family, c: &SignedPerm) -> Result<Vec<SignedPerm>> {
    let n = c.rank();
    if length_t_typed(c, family)? != group_rank(family, n) {
        return Err(domain(format!(
            "{c} is not a Coxeter element of type {family:?}"
        )));
    }
    let all = SignedPerm::all(family, n);
    let keep = all
        .par_iter()
        .map(|w| leq_t(w, c, family))
        .collect::<Result<Vec<bool>>>()?;
    Ok(all
        .into_iter()
        .zip(keep)
        .filter_map(|(w, k)| k.then_some(w))
        .collect())
}

/// `rev(NC(W, c))`, sorted.
pub fn rev_nc(family: Family, c: &SignedPerm) -> Result<Vec<SignedPerm>> {
    let mut out: Vec<SignedPerm> = nc_elements(family, c)?.iter().map(rev).collect();
    out.sort();
    Ok(out)
}

/// `Σ q^{l_S(σ)}` over `rev(NC(W, c))`.
pub fn rev_nc_polynomial(family: Family, c: &SignedPerm) -> Result<QPoly> {
    let elems = rev_nc(family, c)?;
    let stats = elems
        .iter()
        .map(|s| length_s(s, family))
        .collect::<Result<Vec<_>>>()?;
    Ok(QPoly::from_stats(stats))
}

/// Every cycle increasing (from its minimum) and the cycle supports non-crossing.
pub fn nc_perm_test_a(s: &SignedPerm) -> bool {
    if s.neg() > 0 {
        return false;
    }
    let cycles = to_cycles(s);
    let increasing = cycles
        .cycles
        .iter()
        .all(|c| c.windows(2).all(|w| w[0] < w[1]));
    increasing && is_noncrossing_a(&perm_to_partition_a(s))
}

/// Blocks become increasing cycles.
pub fn partition_to_perm_a(p: &SetPartitionA) -> Result<SignedPerm> {
    if !is_noncrossing_a(p) {
        return Err(domain(format!("{p} is crossing")));
    }
    let cycles = p
        .blocks
        .iter()
        .filter(|b| b.len() > 1)
        .map(|b| b.iter().map(|&x| x as i32).collect())
        .collect();
    from_cycles(&CycleDecomp { cycles }, p.n)
}

/// Cycle supports as blocks.
pub fn perm_to_partition_a(s: &SignedPerm) -> SetPartitionA {
    let n = s.rank();
    let mut seen = vec![false; n + 1];
    let mut blocks = Vec::new();
    for x in 1..=n {
        if seen[x] {
            continue;
        }
        let mut block = vec![x];
        seen[x] = true;
        let mut y = s.image(x as i32).unsigned_abs() as usize;
        while y != x {
            seen[y] = true;
            block.push(y);
            y = s.image(y as i32).unsigned_abs() as usize;
        }
        blocks.push(block);
    }
    SetPartitionA::new(n, blocks).expect("cycle supports partition [n]")
}

/// Each block `B_1 < ... < B_k` (in the order `-1 < ... < -n < 1 < ... < n`)
/// becomes the cycle `B_1 -> B_2 -> ... -> B_k -> B_1`.
pub fn partition_to_perm_b(p: &SetPartitionB) -> Result<SignedPerm> {
    if !is_noncrossing_b(p) {
        return Err(domain(format!("{p} is crossing")));
    }
    let n = p.n;
    let mut oneline: Vec<i32> = (1..=n as i32).collect();
    for b in &p.blocks {
        for (k, &x) in b.iter().enumerate() {
            let next = b[(k + 1) % b.len()];
            if x > 0 {
                oneline[x as usize - 1] = next;
            }
        }
    }
    SignedPerm::new(oneline)
}

/// Orbits on `±[n]` as blocks.
pub fn perm_to_partition_b(s: &SignedPerm) -> SetPartitionB {
    let n = s.rank();
    let mut seen = HashSet::new();
    let mut blocks = Vec::new();
    for x in (1..=n as i32).flat_map(|x| [-x, x]) {
        if seen.contains(&x) {
            continue;
        }
        let mut block = vec![x];
        seen.insert(x);
        let mut y = s.image(x);
        while y != x {
            seen.insert(y);
            block.push(y);
            y = s.image(y);
        }
        blocks.push(block);
    }
    SetPartitionB::new(n, blocks).expect("orbits partition ±[n]")
}

/// One Coxeter element examined in the type-D comparison.
#[derive(Clone, Debug, Serialize)]
pub struct D4Case {
    pub coxeter: String,
    pub polynomial: QPoly,
    pub cardinality: usize,
    pub differs: bool,
}

/// Outcome of comparing `Cat(D_4; q)` with the rev-non-crossing and sortable
/// generating functions.
#[derive(Clone, Debug, Serialize)]
pub struct D4Report {
    pub cat_d4: QPoly,
    pub class_size: usize,
    pub centralizer_size: usize,
    pub nc_cases: Vec<D4Case>,
    pub sortable_cases: Vec<D4Case>,
}

impl D4Report {
    /// Every case differs from `Cat(D_4; q)` while agreeing in cardinality.
    pub fn holds(&self) -> bool {
        let card = 50;
        !self.nc_cases.is_empty()
            && !self.sortable_cases.is_empty()
            && self
                .nc_cases
                .iter()
                .chain(&self.sortable_cases)
                .all(|c| c.differs && c.cardinality == card)
            && self.class_size * self.centralizer_size == SignedPerm::group_order(Family::D, 4)
    }
}

fn orderings(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in orderings(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Checks that `Cat(D_4; q)` differs from `Σ q^{l_S}` over `rev(NC(D_4, c))` for
/// every Coxeter element `c`, and from `Σ q^{l_S}` over `Cox_c(D_4)` for every
/// ordering of the simple reflections.
pub fn d4_counterexample() -> Result<D4Report> {
    let family = Family::D;
    let cat = cat_q(GroupType::d(4))?;
    let group = SignedPerm::all(family, 4);
    let c = coxeter_element(family, 4, CoxeterVariant::Ascending).element;
    let class: BTreeSet<SignedPerm> = group
        .iter()
        .map(|g| g.compose(&c).compose(&g.inverse()))
        .collect();
    let centralizer = group
        .iter()
        .filter(|g| g.compose(&c) == c.compose(g))
        .count();
    let nc_cases = class
        .par_iter()
        .map(|c| {
            let poly = rev_nc_polynomial(family, c)?;
            Ok(D4Case {
                coxeter: c.to_string(),
                cardinality: usize::try_from(poly.eval_one()).unwrap_or(0),
                differs: poly != cat,
                polynomial: poly,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let sortable_cases = orderings(&[0, 1, 2, 3])
        .par_iter()
        .map(|word| {
            let sortables = enumerate_sortables_unguarded(family, 4, word)?;
            let poly = QPoly::from_stats(
                sortables
                    .iter()
                    .map(|s| length_s(s, family))
                    .collect::<Result<Vec<_>>>()?,
            );
            Ok(D4Case {
                coxeter: crate::signedperm::word_to_string(word),
                cardinality: sortables.len(),
                differs: poly != cat,
                polynomial: poly,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(D4Report {
        cat_d4: cat,
        class_size: class.len(),
        centralizer_size: centralizer,
        nc_cases,
        sortable_cases,
    })
}
