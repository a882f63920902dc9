//! Positive roots, root posets and their order ideals (non-nesting partitions).
//!
//! Roots are kept in typed form. For type A on `n` letters and type B of
//! rank `n` the ideals are also drawn as cell sets (see [`crate::paths`]):
//!
//! * type A: `e_b - e_a` sits in cell `(n-b, n-a)`;
//! * type B: cell `(i, j)` with `b = n - i`, `k = j - i` holds `e_b - e_{b-k}`
//!   when `k < b`, `e_b` when `k = b` and `e_{k-b} + e_b` when `k > b`.
//!
//! In both pictures `(i, j)` covers `(i, j-1)` and `(i+1, j)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, guard, parse, Error, Result};
use crate::noncrossing::SetPartitionA;
use crate::paths::{
    cells_a, cells_b, descents, dyck_a_from_cells, dyck_b_from_cells, maj_a, maj_b, CellSet,
    DyckWordA, DyckWordB,
};
use crate::qseries::{Family, GroupType, QPoly};

/// Largest number of letters for type-A ideal enumeration.
pub const MAX_IDEALS_A: usize = 9;
/// Largest rank for type-B ideal enumeration.
pub const MAX_IDEALS_B: usize = 6;
/// Largest rank for type-D ideal enumeration.
pub const MAX_IDEALS_D: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// `e_b - e_a` with `a < b`.
    Diff(usize, usize),
    /// `e_b`.
    Short(usize),
    /// `e_a + e_b` with `a < b`.
    Sum(usize, usize),
}

impl Root {
    /// Coordinates in `R^n`.
    pub fn vector(&self, n: usize) -> Vec<i32> {
        let mut v = vec![0; n];
        match *self {
            Root::Diff(a, b) => {
                v[a - 1] -= 1;
                v[b - 1] += 1;
            }
            Root::Short(b) => v[b - 1] += 1,
            Root::Sum(a, b) => {
                v[a - 1] += 1;
                v[b - 1] += 1;
            }
        }
        v
    }

    /// Height in the root poset of the given family.
    pub fn height(&self, family: Family) -> usize {
        match (*self, family) {
            (Root::Diff(a, b), _) => b - a,
            (Root::Short(b), _) => b,
            (Root::Sum(a, b), Family::D) => a + b - 2,
            (Root::Sum(a, b), _) => a + b,
        }
    }

    fn largest_index(&self) -> usize {
        match *self {
            Root::Diff(_, b) | Root::Short(b) | Root::Sum(_, b) => b,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(a, b) => write!(f, "e{b}-e{a}"),
            Root::Short(b) => write!(f, "e{b}"),
            Root::Sum(a, b) => write!(f, "e{a}+e{b}"),
        }
    }
}

impl FromStr for Root {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let index = |t: &str| -> Result<usize> {
            t.strip_prefix('e')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&d| d > 0)
                .ok_or_else(|| parse(format!("bad root {s:?}")))
        };
        if let Some((l, r)) = s.split_once('+') {
            let (a, b) = (index(l)?, index(r)?);
            return match a.cmp(&b) {
                std::cmp::Ordering::Less => Ok(Root::Sum(a, b)),
                std::cmp::Ordering::Greater => Ok(Root::Sum(b, a)),
                std::cmp::Ordering::Equal => Err(parse(format!("bad root {s:?}"))),
            };
        }
        if let Some((l, r)) = s.split_once('-') {
            let (b, a) = (index(l)?, index(r)?);
            if a >= b {
                return Err(parse(format!("{s:?} is not a positive root")));
            }
            return Ok(Root::Diff(a, b));
        }
        Ok(Root::Short(index(&s)?))
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Simple roots: `e_{i+1} - e_i`, plus `e_1` (B) or `e_1 + e_2` (D).
pub fn simple_roots(t: GroupType) -> Vec<Root> {
    let n = t.letters();
    let mut out = Vec::new();
    match t.family {
        Family::B if n >= 1 => out.push(Root::Short(1)),
        Family::D if n >= 2 => out.push(Root::Sum(1, 2)),
        _ => {}
    }
    out.extend((1..n).map(|i| Root::Diff(i, i + 1)));
    out
}

/// Positive roots sorted by height, then by their typed form.
pub fn positive_roots(t: GroupType) -> Vec<Root> {
    let n = t.letters();
    let mut out = Vec::new();
    for b in 1..=n {
        for a in 1..b {
            out.push(Root::Diff(a, b));
            if t.family != Family::A {
                out.push(Root::Sum(a, b));
            }
        }
        if t.family == Family::B {
            out.push(Root::Short(b));
        }
    }
    out.sort_by_key(|r| (r.height(t.family), *r));
    out
}

pub fn is_positive_root(r: &Root, t: GroupType) -> bool {
    let n = t.letters();
    let in_range = match *r {
        Root::Diff(a, b) | Root::Sum(a, b) => 1 <= a && a < b && b <= n,
        Root::Short(b) => 1 <= b && b <= n,
    };
    in_range
        && match (r, t.family) {
            (Root::Short(_), Family::B) => true,
            (Root::Short(_), _) => false,
            (Root::Sum(..), Family::A) => false,
            _ => true,
        }
}

/// A root poset with its covering relation.
#[derive(Clone, Debug)]
pub struct RootPoset {
    pub system: GroupType,
    pub roots: Vec<Root>,
    /// `lower[k]`: indices of the roots covered by `roots[k]`.
    pub lower: Vec<Vec<usize>>,
    /// `upper[k]`: indices of the roots covering `roots[k]`.
    pub upper: Vec<Vec<usize>>,
    index: HashMap<Root, usize>,
}

impl RootPoset {
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn covers(&self, upper: &Root, lower: &Root) -> bool {
        match (self.index_of(upper), self.index_of(lower)) {
            (Some(u), Some(l)) => self.lower[u].contains(&l),
            _ => false,
        }
    }

    /// Cover pairs `(upper, lower)`.
    pub fn cover_pairs(&self) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for (u, lows) in self.lower.iter().enumerate() {
            for &l in lows {
                out.push((self.roots[u], self.roots[l]));
            }
        }
        out
    }

    /// `true` iff `a <= b`.
    pub fn leq(&self, a: &Root, b: &Root) -> bool {
        let (Some(a), Some(b)) = (self.index_of(a), self.index_of(b)) else {
            return false;
        };
        let mut stack = vec![b];
        let mut seen = vec![false; self.roots.len()];
        while let Some(x) = stack.pop() {
            if x == a {
                return true;
            }
            for &y in &self.lower[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// `β` covers `α` iff `β - α` is a simple root.
pub fn root_poset(t: GroupType) -> RootPoset {
    let n = t.letters();
    let roots = positive_roots(t);
    let simple: Vec<Vec<i32>> = simple_roots(t).iter().map(|r| r.vector(n)).collect();
    let vectors: Vec<Vec<i32>> = roots.iter().map(|r| r.vector(n)).collect();
    let mut lower = vec![Vec::new(); roots.len()];
    let mut upper = vec![Vec::new(); roots.len()];
    for (u, vu) in vectors.iter().enumerate() {
        for (l, vl) in vectors.iter().enumerate() {
            let diff: Vec<i32> = vu.iter().zip(vl).map(|(x, y)| x - y).collect();
            if simple.contains(&diff) {
                lower[u].push(l);
                upper[l].push(u);
            }
        }
    }
    let index = roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
    RootPoset {
        system: t,
        roots,
        lower,
        upper,
        index,
    }
}

/// A downward-closed set of positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderIdeal {
    pub system: GroupType,
    pub roots: BTreeSet<Root>,
}

impl OrderIdeal {
    pub fn empty(system: GroupType) -> Self {
        OrderIdeal {
            system,
            roots: BTreeSet::new(),
        }
    }

    pub fn full(system: GroupType) -> Self {
        OrderIdeal {
            system,
            roots: positive_roots(system).into_iter().collect(),
        }
    }

    /// Checked constructor.
    pub fn new(system: GroupType, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let roots: BTreeSet<Root> = roots.into_iter().collect();
        if let Some(r) = roots.iter().find(|r| !is_positive_root(r, system)) {
            return Err(domain(format!("{r} is not a positive root of {system}")));
        }
        let poset = root_poset(system);
        for r in &roots {
            let k = poset.index_of(r).expect("positive root");
            if let Some(&l) = poset.lower[k]
                .iter()
                .find(|&&l| !roots.contains(&poset.roots[l]))
            {
                return Err(domain(format!(
                    "not an order ideal: {r} is present but {} is not",
                    poset.roots[l]
                )));
            }
        }
        Ok(OrderIdeal { system, roots })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    /// Sorted root strings, e.g. `["e2-e1", "e1"]`.
    pub fn root_strings(&self) -> Vec<String> {
        self.roots.iter().map(|r| r.to_string()).collect()
    }

    /// Parses a comma- or whitespace-separated list of roots, with optional brackets and quotes.
    pub fn parse(system: GroupType, s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .map(|c| if "[]{}\"'".contains(c) { ' ' } else { c })
            .collect();
        let roots = cleaned
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Root>>>()?;
        OrderIdeal::new(system, roots)
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.root_strings().join(", "))
    }
}

/// Maximal elements of an ideal (an antichain).
pub fn maximal_elements(ideal: &OrderIdeal) -> Vec<Root> {
    let poset = root_poset(ideal.system);
    ideal
        .roots
        .iter()
        .filter(|r| {
            let k = poset.index_of(r).expect("positive root");
            poset.upper[k]
                .iter()
                .all(|&u| !ideal.contains(&poset.roots[u]))
        })
        .copied()
        .collect()
}

/// The ideal generated by an antichain (or any set of roots).
pub fn ideal_from_generators(system: GroupType, gens: &[Root]) -> Result<OrderIdeal> {
    let poset = root_poset(system);
    let mut roots = BTreeSet::new();
    let mut stack = Vec::new();
    for g in gens {
        let k = poset
            .index_of(g)
            .ok_or_else(|| domain(format!("{g} is not a positive root of {system}")))?;
        stack.push(k);
    }
    while let Some(k) = stack.pop() {
        if roots.insert(poset.roots[k]) {
            stack.extend(poset.lower[k].iter().copied());
        }
    }
    Ok(OrderIdeal { system, roots })
}

pub fn is_antichain(system: GroupType, roots: &[Root]) -> bool {
    let poset = root_poset(system);
    roots.iter().enumerate().all(|(x, a)| {
        roots
            .iter()
            .enumerate()
            .all(|(y, b)| x == y || !poset.leq(a, b))
    })
}

fn ideal_limit(t: GroupType) -> (&'static str, usize, usize) {
    match t.family {
        Family::A => ("ideals(A)", MAX_IDEALS_A, t.letters()),
        Family::B => ("ideals(B)", MAX_IDEALS_B, t.letters()),
        Family::D => ("ideals(D)", MAX_IDEALS_D, t.letters()),
    }
}

/// All order ideals, sorted.
pub fn ideals(t: GroupType) -> Result<Vec<OrderIdeal>> {
    let (what, max, got) = ideal_limit(t);
    guard(what, max, got)?;
    Ok(ideals_unguarded(t))
}

/// [`ideals`] without the size guard.
pub fn ideals_unguarded(t: GroupType) -> Vec<OrderIdeal> {
    let poset = root_poset(t);
    let m = poset.roots.len();
    let mut out = Vec::new();
    let mut chosen = vec![false; m];
    // roots are sorted by height, so lower covers are decided before each root
    fn walk(k: usize, poset: &RootPoset, chosen: &mut Vec<bool>, out: &mut Vec<OrderIdeal>) {
        if k == poset.roots.len() {
            let roots = (0..k)
                .filter(|&x| chosen[x])
                .map(|x| poset.roots[x])
                .collect();
            out.push(OrderIdeal {
                system: poset.system,
                roots,
            });
            return;
        }
        walk(k + 1, poset, chosen, out);
        if poset.lower[k].iter().all(|&l| chosen[l]) {
            chosen[k] = true;
            walk(k + 1, poset, chosen, out);
            chosen[k] = false;
        }
    }
    walk(0, &poset, &mut chosen, &mut out);
    out.sort();
    out
}

/// `Σ_I q^{|I|}`.
pub fn cat_q(t: GroupType) -> Result<QPoly> {
    Ok(QPoly::from_stats(ideals(t)?.iter().map(OrderIdeal::len)))
}

// ---- cells of type A ----

pub fn root_of_cell_a(cell: (usize, usize), n: usize) -> Result<Root> {
    let (i, j) = cell;
    if !(i < j && j < n) {
        return Err(domain(format!("({i},{j}) is not a type A cell for n={n}")));
    }
    Ok(Root::Diff(n - j, n - i))
}

pub fn cell_of_root_a(r: &Root, n: usize) -> Result<(usize, usize)> {
    match *r {
        Root::Diff(a, b) if 1 <= a && a < b && b <= n => Ok((n - b, n - a)),
        _ => Err(domain(format!("{r} is not a type A root for n={n}"))),
    }
}

// ---- cells of type B ----

pub fn root_of_cell_b(cell: (usize, usize), n: usize) -> Result<Root> {
    let (i, j) = cell;
    if !(i < j && i + j < 2 * n) {
        return Err(domain(format!("({i},{j}) is not a type B cell for n={n}")));
    }
    let b = n - i;
    let k = j - i;
    Ok(match k.cmp(&b) {
        std::cmp::Ordering::Less => Root::Diff(b - k, b),
        std::cmp::Ordering::Equal => Root::Short(b),
        std::cmp::Ordering::Greater => Root::Sum(k - b, b),
    })
}

pub fn cell_of_root_b(r: &Root, n: usize) -> Result<(usize, usize)> {
    if !is_positive_root(r, GroupType::b(n)) {
        return Err(domain(format!("{r} is not a type B root for n={n}")));
    }
    let b = r.largest_index();
    let i = n - b;
    let k = r.height(Family::B);
    Ok((i, i + k))
}

/// Cell picture of a type-A or type-B ideal.
pub fn ideal_cells(ideal: &OrderIdeal) -> Result<CellSet> {
    let n = ideal.system.letters();
    ideal
        .roots
        .iter()
        .map(|r| match ideal.system.family {
            Family::A => cell_of_root_a(r, n),
            Family::B => cell_of_root_b(r, n),
            Family::D => Err(domain("type D ideals have no cell picture")),
        })
        .collect()
}

pub fn ideal_from_cells(system: GroupType, cells: &CellSet) -> Result<OrderIdeal> {
    let n = system.letters();
    let roots = cells
        .iter()
        .map(|&c| match system.family {
            Family::A => root_of_cell_a(c, n),
            Family::B => root_of_cell_b(c, n),
            Family::D => Err(domain("type D ideals have no cell picture")),
        })
        .collect::<Result<Vec<_>>>()?;
    OrderIdeal::new(system, roots)
}

pub fn ideal_to_dyck_a(ideal: &OrderIdeal) -> Result<DyckWordA> {
    if ideal.system.family != Family::A {
        return Err(domain("expected a type A ideal"));
    }
    dyck_a_from_cells(ideal.system.letters(), &ideal_cells(ideal)?)
}

pub fn dyck_to_ideal_a(d: &DyckWordA) -> OrderIdeal {
    let system = GroupType::on_letters(Family::A, d.semilength());
    ideal_from_cells(system, &cells_a(d)).expect("Dyck path cells form an ideal")
}

pub fn ideal_to_dyck_b(ideal: &OrderIdeal) -> Result<DyckWordB> {
    if ideal.system.family != Family::B {
        return Err(domain("expected a type B ideal"));
    }
    dyck_b_from_cells(ideal.system.letters(), &ideal_cells(ideal)?)
}

pub fn dyck_to_ideal_b(d: &DyckWordB) -> OrderIdeal {
    ideal_from_cells(GroupType::b(d.order()), &cells_b(d)).expect("Dyck path cells form an ideal")
}

/// Descent set of the associated Dyck path.
pub fn ideal_des(ideal: &OrderIdeal) -> Result<Vec<usize>> {
    Ok(match ideal.system.family {
        Family::A => descents(ideal_to_dyck_a(ideal)?.steps()),
        Family::B => descents(ideal_to_dyck_b(ideal)?.steps()),
        Family::D => return Err(domain("type D ideals have no Dyck path")),
    })
}

/// Major index of the associated Dyck path.
pub fn ideal_maj(ideal: &OrderIdeal) -> Result<usize> {
    Ok(match ideal.system.family {
        Family::A => maj_a(&ideal_to_dyck_a(ideal)?),
        Family::B => maj_b(&ideal_to_dyck_b(ideal)?),
        Family::D => return Err(domain("type D ideals have no Dyck path")),
    })
}

/// Lift to rank one higher: shift every cell up by one row (A) or two rows (B)
/// and fill the bottom row (A) or the two bottom rows (B).
pub fn lift_delta(ideal: &OrderIdeal) -> Result<OrderIdeal> {
    let t = ideal.system;
    let rows = match t.family {
        Family::A => 1,
        Family::B => 2,
        Family::D => return Err(domain("the lift is defined for types A and B only")),
    };
    let n = t.letters() + 1;
    let lifted = GroupType::on_letters(t.family, n);
    let mut cells: CellSet = ideal_cells(ideal)?
        .into_iter()
        .map(|(i, j)| (i, j + rows))
        .collect();
    for i in 0..n {
        for k in 1..=rows {
            let cell = (i, i + k);
            let valid = match t.family {
                Family::A => cell.1 < n,
                _ => cell.0 + cell.1 < 2 * n,
            };
            if valid {
                cells.insert(cell);
            }
        }
    }
    ideal_from_cells(lifted, &cells)
}

/// The non-nesting set partition whose arcs are the maximal roots: `e_b - e_a`
/// joins `a` and `b`.
pub fn ideal_to_arc_partition_a(ideal: &OrderIdeal) -> Result<SetPartitionA> {
    if ideal.system.family != Family::A {
        return Err(domain("arc partitions are defined for type A"));
    }
    let n = ideal.system.letters();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for r in maximal_elements(ideal) {
        if let Root::Diff(a, b) = r {
            let (x, y) = (find(&mut parent, a), find(&mut parent, b));
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut where_: HashMap<usize, usize> = HashMap::new();
    for x in 1..=n {
        let root = find(&mut parent, x);
        let k = *where_.entry(root).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[k].push(x);
    }
    SetPartitionA::new(n, blocks)
}

/// Inverse of [`ideal_to_arc_partition_a`] on non-nesting partitions.
pub fn arc_partition_to_ideal_a(p: &SetPartitionA) -> Result<OrderIdeal> {
    let n = p.n();
    let mut arcs = Vec::new();
    for block in p.blocks() {
        for w in block.windows(2) {
            arcs.push(Root::Diff(w[0], w[1]));
        }
    }
    let system = GroupType::on_letters(Family::A, n);
    if !is_antichain(system, &arcs) {
        return Err(domain("partition is nesting"));
    }
    ideal_from_generators(system, &arcs)
}
