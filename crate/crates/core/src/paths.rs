//! Dyck paths of types A and B.
//!
//! A path is a word over `{N, E}`. Cells are 0-indexed pairs `(i, j)` with
//! `i < j`: column `i`, row `j`. A cell lies below a path when the path's
//! height over column `i` exceeds `j`, where the height over column `i` is the
//! number of north steps taken before the `(i+1)`-th east step (or all of
//! them, if the path has at most `i` east steps).
//!
//! Type A cells satisfy `j <= n - 1`; type B cells satisfy `j <= 2n - 1 - i`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, guard, parse, Error, Result};
use crate::qseries::{Family, QPoly};

pub type Cell = (usize, usize);
pub type CellSet = BTreeSet<Cell>;

/// Largest semilength accepted by the type-A generating-function builders.
pub const MAX_ENUM_A: usize = 12;
/// Largest order accepted by the type-B generating-function builders.
pub const MAX_ENUM_B: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
}

impl Step {
    fn flip(self) -> Step {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'N' | 'n' => Ok(Step::N),
            'E' | 'e' => Ok(Step::E),
            other => Err(parse(format!("unexpected step {other:?}"))),
        })
        .collect()
}

fn write_steps(steps: &[Step], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for s in steps {
        f.write_str(match s {
            Step::N => "N",
            Step::E => "E",
        })?;
    }
    Ok(())
}

pub fn steps_to_string(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| if *s == Step::N { 'N' } else { 'E' })
        .collect()
}

fn stays_weakly_above(steps: &[Step]) -> bool {
    let mut level = 0i64;
    for s in steps {
        level += if *s == Step::N { 1 } else { -1 };
        if level < 0 {
            return false;
        }
    }
    true
}

/// Height of the path over each column `0..columns`.
fn column_heights(steps: &[Step], columns: usize) -> Vec<usize> {
    let mut heights = Vec::with_capacity(columns);
    let mut north = 0;
    for s in steps {
        match s {
            Step::N => north += 1,
            Step::E => {
                if heights.len() < columns {
                    heights.push(north);
                }
            }
        }
    }
    while heights.len() < columns {
        heights.push(north);
    }
    heights
}

/// A balanced Dyck word of semilength `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWordA {
    steps: Vec<Step>,
}

impl DyckWordA {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let north = steps.iter().filter(|s| **s == Step::N).count();
        if 2 * north != steps.len() {
            return Err(domain("type A Dyck word must have as many N as E steps"));
        }
        if !stays_weakly_above(&steps) {
            return Err(domain("Dyck word goes below the diagonal"));
        }
        Ok(DyckWordA { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// `N^n E^n`.
    pub fn full(n: usize) -> Self {
        let mut steps = vec![Step::N; n];
        steps.extend(vec![Step::E; n]);
        DyckWordA { steps }
    }

    /// `(NE)^n`.
    pub fn zigzag(n: usize) -> Self {
        DyckWordA {
            steps: (0..n).flat_map(|_| [Step::N, Step::E]).collect(),
        }
    }
}

impl FromStr for DyckWordA {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckWordA::new(parse_steps(s)?)
    }
}

impl fmt::Display for DyckWordA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(&self.steps, f)
    }
}

/// A type-B Dyck path: `2n` steps staying weakly above the diagonal, free endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWordB {
    steps: Vec<Step>,
}

impl DyckWordB {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(domain("type B Dyck word must have even length"));
        }
        if !stays_weakly_above(&steps) {
            return Err(domain("Dyck word goes below the diagonal"));
        }
        Ok(DyckWordB { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The order `n` (half the number of steps).
    pub fn order(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::N).count()
    }
}

impl From<DyckWordA> for DyckWordB {
    fn from(d: DyckWordA) -> Self {
        DyckWordB { steps: d.steps }
    }
}

impl FromStr for DyckWordB {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckWordB::new(parse_steps(s)?)
    }
}

impl fmt::Display for DyckWordB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(&self.steps, f)
    }
}

fn extend_words(
    prefix: &mut Vec<Step>,
    level: usize,
    north_left: usize,
    east_left: usize,
    total: usize,
    balanced: bool,
    out: &mut Vec<Vec<Step>>,
) {
    if prefix.len() == total {
        out.push(prefix.clone());
        return;
    }
    let remaining = total - prefix.len();
    // lexicographic on the serialized form: 'E' < 'N'
    if east_left > 0 && level > 0 {
        prefix.push(Step::E);
        extend_words(
            prefix,
            level - 1,
            north_left,
            east_left - 1,
            total,
            balanced,
            out,
        );
        prefix.pop();
    }
    let can_north = if balanced {
        north_left > 0
    } else {
        remaining > 0
    };
    if can_north {
        prefix.push(Step::N);
        extend_words(
            prefix,
            level + 1,
            north_left.saturating_sub(1),
            east_left,
            total,
            balanced,
            out,
        );
        prefix.pop();
    }
}

/// All Dyck words of semilength `n`, in lexicographic order of their strings.
pub fn enumerate_a(n: usize) -> Vec<DyckWordA> {
    let mut out = Vec::new();
    extend_words(&mut Vec::new(), 0, n, n, 2 * n, true, &mut out);
    out.into_iter().map(|steps| DyckWordA { steps }).collect()
}

/// All type-B Dyck paths of order `n`, in lexicographic order of their strings.
pub fn enumerate_b(n: usize) -> Vec<DyckWordB> {
    let mut out = Vec::new();
    extend_words(&mut Vec::new(), 0, 2 * n, 2 * n, 2 * n, false, &mut out);
    out.into_iter().map(|steps| DyckWordB { steps }).collect()
}

pub fn cells_a(d: &DyckWordA) -> CellSet {
    let n = d.semilength();
    let h = column_heights(&d.steps, n);
    let mut cells = CellSet::new();
    for (i, &hi) in h.iter().enumerate() {
        for j in i + 1..hi.min(n) {
            cells.insert((i, j));
        }
    }
    cells
}

pub fn area_a(d: &DyckWordA) -> usize {
    cells_a(d).len()
}

pub fn cells_b(d: &DyckWordB) -> CellSet {
    let n = d.order();
    let h = column_heights(&d.steps, n);
    let mut cells = CellSet::new();
    for (i, &hi) in h.iter().enumerate() {
        // valid rows: i < j <= 2n-1-i
        for j in i + 1..hi.min(2 * n - i) {
            cells.insert((i, j));
        }
    }
    cells
}

pub fn area_b(d: &DyckWordB) -> usize {
    cells_b(d).len()
}

/// `true` iff `cells` is closed under `(i,j) -> (i+1,j)` and `(i,j) -> (i,j-1)`
/// within the valid region `i < j <= bound(i)`.
pub fn is_staircase_closed(cells: &CellSet, bound: impl Fn(usize) -> usize) -> bool {
    cells.iter().all(|&(i, j)| {
        let right_ok = !(i + 1 < j && j <= bound(i + 1)) || cells.contains(&(i + 1, j));
        let down_ok = !(j > i + 1) || cells.contains(&(i, j - 1));
        i < j && j <= bound(i) && right_ok && down_ok
    })
}

fn counts_per_column(cells: &CellSet, columns: usize) -> Vec<usize> {
    let mut counts = vec![0; columns];
    for &(i, _) in cells {
        if i < columns {
            counts[i] += 1;
        }
    }
    counts
}

/// Inverse of [`cells_a`].
pub fn dyck_a_from_cells(n: usize, cells: &CellSet) -> Result<DyckWordA> {
    if !is_staircase_closed(cells, |_| n.saturating_sub(1)) {
        return Err(domain("cell set is not a type A staircase ideal"));
    }
    let counts = counts_per_column(cells, n);
    let mut steps = Vec::with_capacity(2 * n);
    let mut north = 0;
    for (i, c) in counts.iter().enumerate() {
        let h = (i + 1 + c).max(north);
        steps.extend(std::iter::repeat_n(Step::N, h - north));
        north = h;
        steps.push(Step::E);
    }
    let d = DyckWordA::new(steps)?;
    if &cells_a(&d) != cells {
        return Err(domain("cell set does not come from a Dyck path"));
    }
    Ok(d)
}

/// Inverse of [`cells_b`].
pub fn dyck_b_from_cells(n: usize, cells: &CellSet) -> Result<DyckWordB> {
    let bound = |i: usize| (2 * n).saturating_sub(1 + i);
    if !is_staircase_closed(cells, bound) {
        return Err(domain("cell set is not a type B staircase ideal"));
    }
    let counts = counts_per_column(cells, n);
    // first saturated column is the number of east steps
    let east = (0..n)
        .find(|&i| counts[i] == (2 * n - 1).saturating_sub(2 * i))
        .unwrap_or(n);
    let mut steps = Vec::with_capacity(2 * n);
    let mut north = 0;
    for (i, c) in counts.iter().enumerate().take(east) {
        let h = i + 1 + c;
        if h < north {
            return Err(domain("cell set does not come from a Dyck path"));
        }
        steps.extend(std::iter::repeat_n(Step::N, h - north));
        north = h;
        steps.push(Step::E);
    }
    steps.extend(std::iter::repeat_n(Step::N, 2 * n - steps.len()));
    let d = DyckWordB::new(steps)?;
    if &cells_b(&d) != cells {
        return Err(domain("cell set does not come from a Dyck path"));
    }
    Ok(d)
}

/// 1-indexed descent positions of a word, comparing with `greater`.
fn descents_by(steps: &[Step], greater: Step) -> Vec<usize> {
    steps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == greater && w[1] != greater)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Descents with respect to `N < E`, i.e. positions of `EN` factors.
pub fn descents(steps: &[Step]) -> Vec<usize> {
    descents_by(steps, Step::E)
}

pub fn des_a(d: &DyckWordA) -> usize {
    descents(&d.steps).len()
}

/// `sum_{i in Des(D)} (2n - i)`.
pub fn maj_a(d: &DyckWordA) -> usize {
    let len = d.steps.len();
    descents(&d.steps).iter().map(|i| len - i).sum()
}

/// Reverse the word and swap `N <-> E`.
pub fn conjugate_a(d: &DyckWordA) -> DyckWordA {
    DyckWordA {
        steps: d.steps.iter().rev().map(|s| s.flip()).collect(),
    }
}

/// Number of east steps.
pub fn neg_b(d: &DyckWordB) -> usize {
    d.steps.iter().filter(|s| **s == Step::E).count()
}

pub fn des_b(d: &DyckWordB) -> usize {
    descents(&d.steps).len()
}

/// `2 (neg(D) + sum_{i in Des(D)} (2n - i))`.
pub fn maj_b(d: &DyckWordB) -> usize {
    let len = d.steps.len();
    let sum: usize = descents(&d.steps).iter().map(|i| len - i).sum();
    2 * (neg_b(d) + sum)
}

/// `2 maj(w)` with `w` the reversed word and `maj(w) = sum_{Des(w)} i`.
pub fn maj_b_via_reverse(d: &DyckWordB) -> usize {
    let rev: Vec<Step> = d.steps.iter().rev().copied().collect();
    2 * descents(&rev).iter().sum::<usize>()
}

/// A lattice word with `n` north and `n` east steps and no ballot condition.
pub fn parse_lattice_word(s: &str) -> Result<Vec<Step>> {
    let steps = parse_steps(s)?;
    let north = steps.iter().filter(|s| **s == Step::N).count();
    if 2 * north != steps.len() {
        return Err(domain("lattice word must have as many N as E steps"));
    }
    Ok(steps)
}

/// `sum_{i in Des(L)} (2n - i)` with respect to `E < N` (descents at `NE`).
pub fn maj_lattice(word: &[Step]) -> usize {
    let len = word.len();
    descents_by(word, Step::N).iter().map(|i| len - i).sum()
}

/// Replace each east step that reaches a new minimum level below zero by a
/// north step. Bijective from balanced lattice words onto type-B paths.
pub fn unfold_lattice_to_b(word: &[Step]) -> Result<DyckWordB> {
    let north = word.iter().filter(|s| **s == Step::N).count();
    if 2 * north != word.len() {
        return Err(domain("lattice word must have as many N as E steps"));
    }
    let mut level = 0i64;
    let mut min = 0i64;
    let steps = word
        .iter()
        .map(|&s| {
            level += if s == Step::N { 1 } else { -1 };
            if level < min {
                min = level;
                Step::N
            } else {
                s
            }
        })
        .collect();
    DyckWordB::new(steps)
}

/// Split a type-B path into its lower part (a type-A path of semilength `n`)
/// and the suffix after its `n`-th north step.
pub fn split_lower_upper(d: &DyckWordB) -> (DyckWordA, Vec<Step>) {
    let n = d.order();
    let mut seen = 0;
    let mut cut = d.steps.len();
    let mut lower = Vec::with_capacity(2 * n);
    for (idx, &s) in d.steps.iter().enumerate() {
        if s == Step::N {
            if seen == n {
                lower.push(Step::E);
                continue;
            }
            seen += 1;
            if seen == n && cut == d.steps.len() {
                cut = idx + 1;
            }
        }
        lower.push(s);
    }
    if seen < n {
        // fewer than n north steps: the lower part is the path itself padded
        // to semilength n; close it with north/east pairs is impossible, so
        // append the missing north steps before the trailing east run.
        let missing = n - seen;
        let trailing_e = lower.iter().rev().take_while(|s| **s == Step::E).count();
        let pos = lower.len() - trailing_e;
        for _ in 0..missing {
            lower.insert(pos, Step::N);
        }
        lower.truncate(2 * n);
        let upper = Vec::new();
        let lower = DyckWordA::new(lower).expect("lower part is a Dyck word");
        return (lower, upper);
    }
    let upper = d.steps[cut..].to_vec();
    let lower = DyckWordA::new(lower).expect("lower part is a Dyck word");
    (lower, upper)
}

/// Partition `(lambda_1 >= ...)` inside the staircase `(n-1, ..., 1, 0)` whose
/// parts are the cells above the path in each row.
pub fn to_partition(d: &DyckWordA) -> Vec<usize> {
    let mut row_x = Vec::new();
    let mut east = 0;
    for s in &d.steps {
        match s {
            Step::N => row_x.push(east),
            Step::E => east += 1,
        }
    }
    row_x.reverse();
    row_x.retain(|&x| x > 0);
    row_x
}

pub fn from_partition(n: usize, lambda: &[usize]) -> Result<DyckWordA> {
    if lambda.len() > n || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(domain("not a partition fitting inside the staircase"));
    }
    // row j (from the bottom) starts at x = lambda_{n-j}
    let mut row_x = vec![0; n];
    for (k, &part) in lambda.iter().enumerate() {
        let row = n - 1 - k;
        if part > row {
            return Err(domain("partition does not fit inside the staircase"));
        }
        row_x[row] = part;
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut east = 0;
    for x in row_x {
        while east < x {
            steps.push(Step::E);
            east += 1;
        }
        steps.push(Step::N);
    }
    while east < n {
        steps.push(Step::E);
        east += 1;
    }
    DyckWordA::new(steps)
}

/// `sum_D q^{area(D)}` over type-A (semilength `n`) or type-B (order `n`) paths.
pub fn area_polynomial(flavor: Family, n: usize) -> Result<QPoly> {
    match flavor {
        Family::A => {
            guard("area_polynomial(A)", MAX_ENUM_A, n)?;
            Ok(QPoly::from_stats(enumerate_a(n).iter().map(area_a)))
        }
        Family::B => {
            guard("area_polynomial(B)", MAX_ENUM_B, n)?;
            Ok(QPoly::from_stats(enumerate_b(n).iter().map(area_b)))
        }
        Family::D => Err(domain("type D has no Dyck path model")),
    }
}

/// `sum_D q^{maj(D)}` over type-A or type-B paths.
pub fn maj_polynomial(flavor: Family, n: usize) -> Result<QPoly> {
    match flavor {
        Family::A => {
            guard("maj_polynomial(A)", MAX_ENUM_A, n)?;
            Ok(QPoly::from_stats(enumerate_a(n).iter().map(maj_a)))
        }
        Family::B => {
            guard("maj_polynomial(B)", MAX_ENUM_B, n)?;
            Ok(QPoly::from_stats(enumerate_b(n).iter().map(maj_b)))
        }
        Family::D => Err(domain("type D has no Dyck path model")),
    }
}

/// Cell sets serialize as JSON arrays of `[i, j]`.
pub fn cells_to_json(cells: &CellSet) -> String {
    let v: Vec<[usize; 2]> = cells.iter().map(|&(i, j)| [i, j]).collect();
    serde_json::to_string(&v).expect("cells serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{q_binomial, qcat_a, qcat_product, GroupType};

    fn a(s: &str) -> DyckWordA {
        s.parse().unwrap()
    }

    fn b(s: &str) -> DyckWordB {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let two: Vec<String> = enumerate_a(2).iter().map(|d| d.to_string()).collect();
        assert_eq!(two, ["NENE", "NNEE"]);
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(enumerate_a(n).len(), c);
        }
        let central = [1, 2, 6, 20, 70, 252];
        for (n, &c) in central.iter().enumerate() {
            assert_eq!(enumerate_b(n).len(), c);
        }
        let zero = enumerate_b(0);
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].to_string(), "");
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let strs: Vec<String> = enumerate_b(4).iter().map(|d| d.to_string()).collect();
        let mut sorted = strs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(strs, sorted);
    }

    #[test]
    fn figure_path_cells() {
        let d = a("NNENNEENENNENEEE");
        let expected: CellSet = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (1, 3),
            (4, 6),
            (5, 7),
        ]
        .into_iter()
        .collect();
        assert_eq!(cells_a(&d), expected);
        assert_eq!(to_partition(&d), vec![5, 4, 4, 3, 1, 1]);
        assert_eq!(area_a(&d), 28 - 18);
        assert_eq!(from_partition(8, &[5, 4, 4, 3, 1, 1]).unwrap(), d);
        assert_eq!(dyck_a_from_cells(8, &expected).unwrap(), d);
    }

    #[test]
    fn extreme_paths() {
        for n in 0..6 {
            assert_eq!(area_a(&DyckWordA::full(n)), n * n.saturating_sub(1) / 2);
            assert!(cells_a(&DyckWordA::zigzag(n)).is_empty());
            assert_eq!(maj_a(&DyckWordA::full(n)), 0);
        }
    }

    #[test]
    fn type_b_areas() {
        assert_eq!(area_b(&b("NNNN")), 4);
        assert_eq!(area_b(&b("NENE")), 0);
        assert_eq!(cells_b(&b("NENN")), [(1, 2)].into_iter().collect());
        let mut areas: Vec<usize> = enumerate_b(2).iter().map(area_b).collect();
        areas.sort_unstable();
        assert_eq!(areas, [0, 1, 1, 2, 3, 4]);
    }

    #[test]
    fn major_indices() {
        assert_eq!(maj_a(&a("NENENE")), 6);
        let d = b("NENNENNNENNE");
        assert_eq!(neg_b(&d), 4);
        assert_eq!(descents(d.steps()), vec![2, 5, 9]);
        assert_eq!(maj_b(&d), 48);
        assert_eq!(maj_b_via_reverse(&d), 48);
        assert_eq!(maj_b(&b("NNNN")), 0);
        assert_eq!(maj_b(&b("NENN")), 6);
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate_a(&a("NENENE")), a("NENENE"));
        assert_eq!(conjugate_a(&a("NNEE")), a("NNEE"));
        assert_eq!(conjugate_a(&a("NNEENE")), a("NENNEE"));
    }

    #[test]
    fn lattice_unfolding() {
        let l = parse_lattice_word("NEENEENNENNE").unwrap();
        assert_eq!(maj_lattice(&l), 24);
        let d = unfold_lattice_to_b(&l).unwrap();
        assert_eq!(d, b("NENNENNNENNE"));
        assert_eq!(maj_b(&d), 48);
        assert_eq!(
            unfold_lattice_to_b(&parse_steps("NNNEEE").unwrap()).unwrap(),
            b("NNNEEE")
        );
        assert_eq!(
            unfold_lattice_to_b(&parse_steps("EN").unwrap()).unwrap(),
            b("NN")
        );
        assert!(unfold_lattice_to_b(&parse_steps("NNE").unwrap()).is_err());
    }

    #[test]
    fn lower_upper_split() {
        let (lower, upper) = split_lower_upper(&b("NNNNEEENNNNE"));
        assert_eq!(lower, a("NNNNEEENNEEE"));
        assert_eq!(steps_to_string(&upper), "NNE");
        let (lower, upper) = split_lower_upper(&b("NNEENE"));
        assert_eq!(lower, a("NNEENE"));
        assert_eq!(steps_to_string(&upper), "E");
        let (lower, upper) = split_lower_upper(&b("NENE"));
        assert_eq!(lower, a("NENE"));
        assert_eq!(steps_to_string(&upper), "E");
        let (lower, upper) = split_lower_upper(&b("NNNNNN"));
        assert_eq!(lower, a("NNNEEE"));
        assert_eq!(steps_to_string(&upper), "NNN");
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            area_polynomial(Family::B, 2).unwrap(),
            "q^4 + q^3 + q^2 + 2q + 1".parse().unwrap()
        );
        assert_eq!(area_polynomial(Family::A, 1).unwrap(), QPoly::one());
        assert_eq!(
            maj_polynomial(Family::B, 2).unwrap(),
            qcat_product(GroupType::b(2)).unwrap()
        );
        assert!(matches!(
            area_polynomial(Family::A, 13),
            Err(Error::Size { .. })
        ));
        assert!(area_polynomial(Family::D, 2).is_err());
    }

    #[test]
    fn area_recurrence_type_a() {
        let cat: Vec<QPoly> = (0..=9)
            .map(|n| area_polynomial(Family::A, n).unwrap())
            .collect();
        for n in 0..=8 {
            let rhs: QPoly = (0..=n).map(|k| (&cat[k] * &cat[n - k]).shift(k)).sum();
            assert_eq!(cat[n + 1], rhs, "n={n}");
        }
    }

    #[test]
    fn area_recurrence_type_b() {
        let cat: Vec<QPoly> = (0..=6)
            .map(|n| area_polynomial(Family::A, n).unwrap())
            .collect();
        let catb: Vec<QPoly> = (0..=6)
            .map(|n| area_polynomial(Family::B, n).unwrap())
            .collect();
        for n in 0..=6 {
            let sum: QPoly = (0..n)
                .map(|k| (&catb[k] * &cat[n - k]).shift(2 * k + 1))
                .sum();
            assert_eq!(catb[n], &cat[n] + &sum, "n={n}");
        }
    }

    #[test]
    fn maj_generating_functions() {
        for n in 0..=8 {
            assert_eq!(
                maj_polynomial(Family::A, n).unwrap(),
                qcat_a(n.max(1)).clone().pipe_if(n == 0)
            );
        }
        for n in 0..=6 {
            assert_eq!(
                maj_polynomial(Family::B, n).unwrap(),
                q_binomial(2 * n, n).unwrap().dilate(2)
            );
        }
    }

    trait PipeIf {
        fn pipe_if(self, zero: bool) -> QPoly;
    }
    impl PipeIf for QPoly {
        fn pipe_if(self, zero: bool) -> QPoly {
            if zero {
                QPoly::one()
            } else {
                self
            }
        }
    }

    #[test]
    fn conjugate_maj_equidistributed() {
        for n in 0..=8 {
            let paths = enumerate_a(n);
            for d in &paths {
                assert_eq!(conjugate_a(&conjugate_a(d)), *d);
            }
            let direct = QPoly::from_stats(paths.iter().map(maj_a));
            let conj = QPoly::from_stats(paths.iter().map(|d| maj_a(&conjugate_a(d))));
            assert_eq!(direct, conj);
        }
    }

    #[test]
    fn cell_round_trips() {
        for n in 0..=7 {
            for d in enumerate_a(n) {
                let c = cells_a(&d);
                assert!(is_staircase_closed(&c, |_| n.saturating_sub(1)));
                assert_eq!(dyck_a_from_cells(n, &c).unwrap(), d);
            }
        }
        for n in 0..=6 {
            for d in enumerate_b(n) {
                let c = cells_b(&d);
                assert!(is_staircase_closed(&c, |i| (2 * n).saturating_sub(1 + i)));
                assert_eq!(dyck_b_from_cells(n, &c).unwrap(), d);
                assert_eq!(maj_b(&d), maj_b_via_reverse(&d));
            }
        }
    }

    #[test]
    fn rejects_bad_words() {
        assert!("NEEN".parse::<DyckWordA>().is_err());
        assert!("NNE".parse::<DyckWordA>().is_err());
        assert!("NX".parse::<DyckWordA>().is_err());
        assert!("EN".parse::<DyckWordB>().is_err());
    }

    #[test]
    fn cells_json() {
        assert_eq!(cells_to_json(&cells_b(&b("NENN"))), "[[1,2]]");
    }
}
