//! Statistic-preserving bijections.
//!
//! * `phi` sends an order ideal (non-nesting partition) of type A or B to an
//!   element of `rev(NC(W))` by peeling off shells of maximal roots.
//! * `psi_a` / `psi_b` send a Dyck path to a `c`-sortable element by reading
//!   the simple reflections written in its cells.
//!
//! Type-B ideals are unfolded into symmetric interval systems on the labels
//! `-n < ... < -1 < 1 < ... < n`, so both types share one shelling routine.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::noncrossing::rev_nc;
use crate::paths::{
    area_a, area_b, cells_a, cells_b, enumerate_a, enumerate_b, maj_a, maj_b, neg_b,
    split_lower_upper, CellSet, DyckWordA, DyckWordB, Step,
};
use crate::qseries::{qcat_product, Family, GroupType, QPoly};
use crate::rootposets::{
    cat_q, ideal_cells, ideal_des, ideal_from_cells, ideal_maj, ideals, lift_delta,
    maximal_elements, OrderIdeal, Root,
};
use crate::signedperm::{
    coxeter_element, des_set, from_cycles, ides_set, imaj, length_s, maj, rev, CoxeterVariant,
    CycleDecomp, SignedPerm,
};
use crate::sortable::{c_sorting_word, enumerate_sortables, standard_c_word, SortingWord};

/// An interval `[lo, hi]` of signed labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Span {
    pub lo: i32,
    pub hi: i32,
    /// The interval passes through the fold between `-1` and `1`.
    pub fold: bool,
}

impl Span {
    fn new(lo: i32, hi: i32) -> Self {
        Span {
            lo,
            hi,
            fold: lo < 0 && hi > 0,
        }
    }

    fn mirror(&self) -> Span {
        Span::new(-self.hi, -self.lo)
    }
}

/// The intervals a root unfolds to (one for type A, a mirror pair or a single
/// self-mirror interval for type B).
pub fn spans(root: &Root, family: Family) -> Result<Vec<Span>> {
    let base = match (*root, family) {
        (Root::Diff(a, b), Family::A) => return Ok(vec![Span::new(a as i32, b as i32)]),
        (Root::Diff(a, b), Family::B) => Span::new(a as i32, b as i32),
        (Root::Short(b), Family::B) => Span::new(-1, b as i32),
        (Root::Sum(a, b), Family::B) => Span::new(-(a as i32 + 1), b as i32),
        _ => {
            return Err(domain(format!(
                "{root} cannot be unfolded in type {family:?}"
            )))
        }
    };
    let m = base.mirror();
    Ok(if m == base { vec![base] } else { vec![base, m] })
}

/// Cycles contributed by one shell of maximal roots.
pub fn shell_cycles(maximal: &[Root], family: Family) -> Result<CycleDecomp> {
    let mut all: Vec<Span> = Vec::new();
    for r in maximal {
        all.extend(spans(r, family)?);
    }
    all.sort();
    all.dedup();
    let endpoints = endpoint_sequences(&all);
    let mut out = Vec::new();
    for seq in endpoints {
        let symmetric = {
            let mut m: Vec<i32> = seq.iter().map(|x| -x).collect();
            m.reverse();
            m == seq
        };
        if symmetric {
            let mut cycle: Vec<i32> = seq.iter().copied().filter(|&x| x > 0).collect();
            cycle.push(-cycle[0]);
            out.push(cycle);
        } else if seq[0] > 0 {
            out.push(seq);
        } else if seq.iter().any(|&x| x > 0) {
            return Err(Error::Internal(format!(
                "asymmetric block through the fold: {seq:?}"
            )));
        }
    }
    out.sort_by_key(|c| c.iter().map(|x| x.unsigned_abs()).min());
    Ok(CycleDecomp { cycles: out })
}

/// Sorted spans grouped into blocks; each block gives `(lo_1, chain points, hi_last)`.
fn endpoint_sequences(sorted: &[Span]) -> Vec<Vec<i32>> {
    let mut out: Vec<Vec<i32>> = Vec::new();
    let mut reach = i32::MIN;
    let mut prev_hi = i32::MIN;
    for s in sorted {
        if out.is_empty() || reach < s.lo {
            if let Some(block) = out.last_mut() {
                block.push(reach);
            }
            out.push(vec![s.lo]);
        } else if s.lo == prev_hi {
            out.last_mut().expect("open block").push(s.lo);
        }
        reach = reach.max(s.hi);
        prev_hi = s.hi;
    }
    if let Some(block) = out.last_mut() {
        block.push(reach);
    }
    out
}

/// Move every cell of height above two one step inward: `(i, j) -> (i+1, j-1)`.
pub fn strip(ideal: &OrderIdeal) -> Result<OrderIdeal> {
    let cells: CellSet = ideal_cells(ideal)?
        .into_iter()
        .filter(|&(i, j)| j - i > 2)
        .map(|(i, j)| (i + 1, j - 1))
        .collect();
    ideal_from_cells(ideal.system, &cells)
}

/// Shells of `ideal`, outermost first.
pub fn shells(ideal: &OrderIdeal) -> Result<Vec<CycleDecomp>> {
    let family = ideal.system.family;
    let mut out = Vec::new();
    let mut current = ideal.clone();
    while !current.is_empty() {
        out.push(shell_cycles(&maximal_elements(&current), family)?);
        current = strip(&current)?;
    }
    Ok(out)
}

/// The shelling bijection from ideals to `rev(NC(W))`.
pub fn phi(ideal: &OrderIdeal) -> Result<SignedPerm> {
    let family = ideal.system.family;
    if family == Family::D {
        return Err(domain("phi is defined for types A and B only"));
    }
    let n = ideal.system.letters();
    let mut cycles = Vec::new();
    for shell in shells(ideal)? {
        cycles.extend(shell.cycles);
    }
    // a paired cycle lists its first entry twice; count each cycle's support once
    let mut seen = BTreeSet::new();
    for c in &cycles {
        let support: BTreeSet<u32> = c.iter().map(|x| x.unsigned_abs()).collect();
        if !seen.is_disjoint(&support) {
            return Err(Error::Internal("shell cycles are not disjoint".into()));
        }
        seen.extend(support);
    }
    from_cycles(&CycleDecomp { cycles }, n)
}

fn psi_from_cells(
    n: usize,
    family: Family,
    factors: Vec<Vec<usize>>,
) -> Result<(SignedPerm, SortingWord)> {
    let mut factors = factors;
    while factors.last().is_some_and(Vec::is_empty) {
        factors.pop();
    }
    let word = SortingWord { factors };
    let sigma = word.evaluate(n, family)?;
    Ok((sigma, word))
}

/// Reads the cells diagonal by diagonal; cell `(i, j)` carries `s_{n-1-i}`.
pub fn psi_a(d: &DyckWordA) -> Result<(SignedPerm, SortingWord)> {
    let n = d.semilength();
    let cells = cells_a(d);
    let factors = (1..n.max(1))
        .map(|k| {
            cells
                .iter()
                .filter(|&&(i, j)| j - i == k)
                .map(|&(i, _)| n - 1 - i)
                .collect()
        })
        .collect();
    psi_from_cells(n, Family::A, factors)
}

/// Factor `f` reads the lower cells on diagonal `f`, then the upper cells in
/// column `n - f`. Lower cells carry `s_{n-1-i}`, upper cells `s_{2n-1-i-j}`.
pub fn psi_b(d: &DyckWordB) -> Result<(SignedPerm, SortingWord)> {
    let n = d.order();
    let cells = cells_b(d);
    let factors = (1..=n)
        .map(|f| {
            let lower = cells
                .iter()
                .filter(|&&(i, j)| j < n && j - i == f)
                .map(|&(i, _)| n - 1 - i);
            let upper = cells
                .iter()
                .filter(|&&(i, j)| j >= n && i == n - f)
                .map(|&(i, j)| 2 * n - 1 - i - j);
            lower.chain(upper).collect()
        })
        .collect();
    psi_from_cells(n, Family::B, factors)
}

/// Result of an exhaustive check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub identity: String,
    pub rank: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn two_n(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * n.saturating_sub(1),
        _ => 2 * n * n,
    }
}

fn standard_nc_c(family: Family, n: usize) -> SignedPerm {
    coxeter_element(family, n, CoxeterVariant::Ascending).element
}

macro_rules! check {
    ($fails:expr, $cond:expr, $($fmt:tt)*) => {
        if !$cond {
            $fails.push(format!($($fmt)*));
        }
    };
}

fn phi_item(ideal: &OrderIdeal, n: usize) -> Result<(SignedPerm, Vec<String>)> {
    let family = ideal.system.family;
    let sigma = phi(ideal)?;
    let mut fails = Vec::new();
    let ls = length_s(&sigma, family)?;
    check!(
        fails,
        ls == ideal.len(),
        "{ideal}: l_S({sigma}) = {ls} but |I| = {}",
        ideal.len()
    );
    let m = ideal_maj(ideal)?;
    let (ms, is) = (maj(&sigma, family)?, imaj(&sigma, family)?);
    check!(
        fails,
        m + ms + is == two_n(family, n),
        "{ideal}: maj {m} + {ms} + {is} != {}",
        two_n(family, n)
    );
    match family {
        Family::A => {
            let des_s = des_set(&sigma, family)?;
            let ides_s = ides_set(&sigma, family)?;
            check!(fails, des_s.len() == ides_s.len(), "{sigma}: des != ides");
            let des_i = ideal_des(ideal)?.len();
            check!(
                fails,
                des_i + des_s.len() == n.saturating_sub(1),
                "{ideal}: des(I) + des(phi(I)) = {} != n-1",
                des_i + des_s.len()
            );
            let lifted = lift_delta(ideal)?;
            let sigma2 = phi(&lifted)?;
            let mut expect_des: BTreeSet<usize> = ides_s.iter().copied().collect();
            expect_des.insert(n);
            let got_des: BTreeSet<usize> = des_set(&sigma2, family)?.into_iter().collect();
            check!(
                fails,
                got_des == expect_des,
                "{ideal}: Des of lifted image {got_des:?}"
            );
            let mut expect_ides: BTreeSet<usize> = des_s.iter().map(|i| i + 1).collect();
            expect_ides.insert(1);
            let got_ides: BTreeSet<usize> = ides_set(&sigma2, family)?.into_iter().collect();
            check!(
                fails,
                got_ides == expect_ides,
                "{ideal}: iDes of lifted image {got_ides:?}"
            );
            let m2 = ideal_maj(&lifted)?;
            let des_l = ideal_des(&lifted)?.len();
            check!(
                fails,
                m2 == m + des_i && des_l == des_i,
                "{ideal}: maj(lift) {m2}, maj {m}, des {des_i}, des(lift) {des_l}"
            );
        }
        Family::B => {
            let lifted = lift_delta(ideal)?;
            let sigma2 = phi(&lifted)?;
            let mut ext: Vec<i32> = sigma.oneline().to_vec();
            ext.push(-(n as i32 + 1));
            let expected = SignedPerm::new(ext)?;
            check!(
                fails,
                sigma2 == expected,
                "{ideal}: phi(lift) = {sigma2}, expected {expected}"
            );
        }
        Family::D => unreachable!(),
    }
    Ok((sigma, fails))
}

/// Exhaustive check of the shelling bijection on `W = A_{n-1}` or `B_n`.
pub fn verify_phi_theorems(family: Family, n: usize) -> Result<Report> {
    if family == Family::D {
        return Err(domain("phi is defined for types A and B only"));
    }
    let t = GroupType::on_letters(family, n);
    let n = t.letters();
    let all = ideals(t)?;
    let items = all
        .par_iter()
        .map(|i| phi_item(i, n))
        .collect::<Result<Vec<_>>>()?;
    let mut failures: Vec<String> = items.iter().flat_map(|(_, f)| f.clone()).collect();
    let images: Vec<SignedPerm> = items.into_iter().map(|(s, _)| s).collect();
    let image_set: BTreeSet<SignedPerm> = images.iter().cloned().collect();
    check!(
        failures,
        image_set.len() == images.len(),
        "phi is not injective"
    );
    let target: BTreeSet<SignedPerm> = rev_nc(family, &standard_nc_c(family, n))?
        .into_iter()
        .collect();
    check!(failures, image_set == target, "image of phi is not rev(NC)");
    let by_ls = QPoly::from_stats(
        target
            .iter()
            .map(|s| length_s(s, family))
            .collect::<Result<Vec<_>>>()?,
    );
    check!(
        failures,
        by_ls == cat_q(t)?,
        "Cat(W;q) != sum over rev(NC) of q^l_S"
    );
    let by_maj = QPoly::from_stats(
        target
            .iter()
            .map(|s| Ok(maj(s, family)? + imaj(s, family)?))
            .collect::<Result<Vec<_>>>()?,
    );
    check!(
        failures,
        by_maj == qcat_product(t)?,
        "q-Cat(W;q) != sum over rev(NC) of q^(maj+imaj)"
    );
    let by_ideal = QPoly::from_stats(all.iter().map(ideal_maj).collect::<Result<Vec<_>>>()?);
    let dual = QPoly::from_stats(
        target
            .iter()
            .map(|s| Ok(two_n(family, n) - maj(s, family)? - imaj(s, family)?))
            .collect::<Result<Vec<_>>>()?,
    );
    check!(
        failures,
        by_ideal == dual,
        "maj generating functions do not match"
    );
    Ok(Report {
        identity: format!(
            "phi {t}: l_S(phi(I)) = |I|, maj(I) + maj(phi(I)) + imaj(phi(I)) = {}",
            two_n(family, n)
        ),
        rank: t.rank,
        checked: all.len(),
        failures,
    })
}

fn psi_a_item(d: &DyckWordA, c: &[usize]) -> Result<(SignedPerm, Vec<String>)> {
    let n = d.semilength();
    let family = Family::A;
    let (sigma, word) = psi_a(d)?;
    let mut fails = Vec::new();
    check!(
        fails,
        c_sorting_word(&sigma, c, family)? == word,
        "{d}: word {word} is not the sorting word"
    );
    check!(fails, word.is_decreasing(), "{d}: {word} is not sortable");
    let ls = length_s(&sigma, family)?;
    check!(
        fails,
        ls == area_a(d),
        "{d}: l_S {ls} != area {}",
        area_a(d)
    );
    let total = maj_a(d) + maj(&sigma, family)? + imaj(&sigma, family)?;
    check!(fails, total == two_n(family, n), "{d}: maj sum {total}");
    let k = d
        .steps()
        .iter()
        .rev()
        .take_while(|s| **s == Step::E)
        .count();
    if k >= 1 && k <= n {
        let des: BTreeSet<usize> = des_set(&sigma, family)?.into_iter().collect();
        check!(
            fails,
            sigma.image(k as i32) == 1 && (1..k).all(|i| des.contains(&i)),
            "{d}: last-descent property fails for {sigma}"
        );
    }
    Ok((sigma, fails))
}

fn psi_b_item(d: &DyckWordB, c: &[usize]) -> Result<(SignedPerm, Vec<String>)> {
    let n = d.order();
    let family = Family::B;
    let (sigma, word) = psi_b(d)?;
    let mut fails = Vec::new();
    check!(
        fails,
        c_sorting_word(&sigma, c, family)? == word,
        "{d}: word {word} is not the sorting word"
    );
    check!(fails, word.is_decreasing(), "{d}: {word} is not sortable");
    let ls = length_s(&sigma, family)?;
    check!(
        fails,
        ls == area_b(d),
        "{d}: l_S {ls} != area {}",
        area_b(d)
    );
    let total = maj_b(d) + maj(&sigma, family)? + imaj(&sigma, family)?;
    check!(fails, total == two_n(family, n), "{d}: maj sum {total}");
    check!(
        fails,
        neg_b(d) + sigma.neg() == n,
        "{d}: neg(D) + neg(sigma) != n"
    );
    let (lower, _) = split_lower_upper(d);
    let (sigma1, _) = psi_a(&lower)?;
    check!(
        fails,
        ides_set(&sigma, family)? == ides_set(&sigma1, family)?,
        "{d}: iDes(sigma) != iDes(sigma_1)"
    );
    check!(
        fails,
        imaj(&sigma, family)? == imaj(&sigma1, family)? + sigma.neg(),
        "{d}: imaj(sigma) != imaj(sigma_1) + neg(sigma)"
    );
    let lower_b: DyckWordB = lower.clone().into();
    let lower_total = maj_b(&lower_b) + maj(&sigma1, family)? + imaj(&sigma1, family)?;
    check!(
        fails,
        lower_total == total,
        "{d}: lower part gives {lower_total}"
    );
    Ok((sigma, fails))
}

/// Exhaustive check of the cell-reading bijection on `W = A_{n-1}` or `B_n`.
pub fn verify_psi_theorems(family: Family, n: usize) -> Result<Report> {
    let t = GroupType::on_letters(family, n);
    let c = standard_c_word(family, n);
    let sortables = enumerate_sortables(family, n, &c)?;
    let items: Vec<(SignedPerm, Vec<String>)> = match family {
        Family::A => enumerate_a(n)
            .par_iter()
            .map(|d| psi_a_item(d, &c))
            .collect::<Result<_>>()?,
        Family::B => enumerate_b(n)
            .par_iter()
            .map(|d| psi_b_item(d, &c))
            .collect::<Result<_>>()?,
        Family::D => return Err(domain("psi is defined for types A and B only")),
    };
    let checked = items.len();
    let mut failures: Vec<String> = items.iter().flat_map(|(_, f)| f.clone()).collect();
    let image: BTreeSet<SignedPerm> = items.into_iter().map(|(s, _)| s).collect();
    check!(failures, image.len() == checked, "psi is not injective");
    let target: BTreeSet<SignedPerm> = sortables.into_iter().collect();
    check!(
        failures,
        image == target,
        "image of psi is not the set of sortables"
    );
    let by_ls = QPoly::from_stats(
        target
            .iter()
            .map(|s| length_s(s, family))
            .collect::<Result<Vec<_>>>()?,
    );
    check!(
        failures,
        by_ls == cat_q(t)?,
        "Cat(W;q) != sum over Cox_c of q^l_S"
    );
    let by_maj = QPoly::from_stats(
        target
            .iter()
            .map(|s| Ok(maj(s, family)? + imaj(s, family)?))
            .collect::<Result<Vec<_>>>()?,
    );
    check!(
        failures,
        by_maj == qcat_product(t)?,
        "q-Cat(W;q) != sum over Cox_c of q^(maj+imaj)"
    );
    Ok(Report {
        identity: format!(
            "psi {t}: l_S(psi(D)) = area(D), maj(D) + maj(psi(D)) + imaj(psi(D)) = {}",
            two_n(family, n)
        ),
        rank: t.rank,
        checked,
        failures,
    })
}

/// `phi` inverted by table lookup.
pub fn phi_inverse_table(family: Family, n: usize) -> Result<HashMap<SignedPerm, OrderIdeal>> {
    let t = GroupType::on_letters(family, n);
    ideals(t)?.into_iter().map(|i| Ok((phi(&i)?, i))).collect()
}

/// `psi_a` inverted by table lookup.
pub fn psi_a_inverse_table(n: usize) -> Result<HashMap<SignedPerm, DyckWordA>> {
    enumerate_a(n)
        .into_iter()
        .map(|d| Ok((psi_a(&d)?.0, d)))
        .collect()
}

/// `psi_b` inverted by table lookup.
pub fn psi_b_inverse_table(n: usize) -> Result<HashMap<SignedPerm, DyckWordB>> {
    enumerate_b(n)
        .into_iter()
        .map(|d| Ok((psi_b(&d)?.0, d)))
        .collect()
}

/// `rev` applied to the image of `phi`; lands in `NC(W)` itself.
pub fn phi_nc(ideal: &OrderIdeal) -> Result<SignedPerm> {
    Ok(rev(&phi(ideal)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootposets::ideal_from_generators;
    use crate::signedperm::to_cycles;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    fn gens(t: GroupType, roots: &str) -> OrderIdeal {
        let roots: Vec<Root> = roots
            .split_whitespace()
            .map(|r| r.parse().unwrap())
            .collect();
        ideal_from_generators(t, &roots).unwrap()
    }

    #[test]
    fn worked_type_a() {
        let ideal = gens(GroupType::a(8), "e4-e1 e5-e2 e6-e3 e7-e5 e9-e7");
        assert_eq!(ideal.len(), 17);
        let sigma = phi(&ideal).unwrap();
        assert_eq!(sigma, p("[7,3,4,5,2,6,9,8,1]"));
        assert_eq!(length_s(&sigma, Family::A).unwrap(), 17);
        let lifted = phi(&lift_delta(&ideal).unwrap()).unwrap();
        assert_eq!(lifted, p("[10,6,3,4,5,7,2,9,8,1]"));
        assert_eq!(
            ideal_maj(&ideal).unwrap()
                + maj(&sigma, Family::A).unwrap()
                + imaj(&sigma, Family::A).unwrap(),
            72
        );
    }

    #[test]
    fn worked_type_b() {
        let b4 = GroupType::b(4);
        let ideal = gens(b4, "e4-e1 e1 e3-e2");
        let sigma = phi(&ideal).unwrap();
        assert_eq!(to_cycles(&sigma).to_string(), "(1,4,-1)(2,3)");
        assert_eq!(sigma, p("[4,3,2,-1]"));
        let lifted = phi(&lift_delta(&ideal).unwrap()).unwrap();
        assert_eq!(lifted, p("[4,3,2,-1,-5]"));

        let shell = shell_cycles(&[Root::Short(2), Root::Diff(1, 4)], Family::B).unwrap();
        assert_eq!(shell.to_string(), "(4,-4)");
        let both = phi(&gens(b4, "e2 e4-e1")).unwrap();
        assert_eq!(to_cycles(&both).to_string(), "(2,3)(4,-4)");
        assert_eq!(length_s(&both, Family::B).unwrap(), 8);
        let s = phi(&gens(GroupType::b(3), "e3 e1+e2")).unwrap();
        assert_eq!(s, p("[2,-1,-3]"));
        assert_eq!(length_s(&s, Family::B).unwrap(), 7);
        assert_eq!(
            phi(&OrderIdeal::full(GroupType::b(2))).unwrap(),
            p("[-1,-2]")
        );
        assert!(phi(&OrderIdeal::empty(b4)).unwrap().is_identity());
    }

    #[test]
    fn spans_unfold() {
        assert_eq!(
            spans(&Root::Short(2), Family::B).unwrap(),
            vec![Span::new(-1, 2), Span::new(-2, 1)]
        );
        assert_eq!(spans(&Root::Sum(1, 3), Family::B).unwrap().len(), 2);
        assert_eq!(
            spans(&Root::Short(1), Family::B).unwrap(),
            vec![Span::new(-1, 1)]
        );
        assert!(spans(&Root::Short(1), Family::A).is_err());
        assert!(phi(&OrderIdeal::empty(GroupType::d(3))).is_err());
    }

    #[test]
    fn worked_psi() {
        let d: DyckWordA = "NNNNEEENNEEE".parse().unwrap();
        let (sigma, word) = psi_a(&d).unwrap();
        assert_eq!(sigma, p("[6,2,1,5,4,3]"));
        assert_eq!(word.to_string(), "s5 s4 s3 s2 s1 | s5 s4 s2 | s5");

        let d: DyckWordB = "NNNNEEENNNNE".parse().unwrap();
        let (sigma, word) = psi_b(&d).unwrap();
        assert_eq!(sigma, p("[1,-2,-6,5,4,3]"));
        assert_eq!(
            word.to_string(),
            "s5 s4 s3 s2 s1 s0 | s5 s4 s2 s1 s0 | s5 s2 s1"
        );
        let (s0, w0) = psi_b(&"NENN".parse().unwrap()).unwrap();
        assert_eq!(s0, p("[-1,2]"));
        assert_eq!(w0.to_string(), "s0");
    }

    #[test]
    fn small_ranks_verify() {
        for n in 0..=6 {
            let r = verify_phi_theorems(Family::A, n).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            let r = verify_psi_theorems(Family::A, n).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
        for n in 0..=4 {
            let r = verify_phi_theorems(Family::B, n).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            let r = verify_psi_theorems(Family::B, n).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn inverse_tables() {
        let t = phi_inverse_table(Family::B, 3).unwrap();
        assert_eq!(t.len(), 20);
        for (sigma, ideal) in &t {
            assert_eq!(&phi(ideal).unwrap(), sigma);
        }
        assert_eq!(psi_a_inverse_table(5).unwrap().len(), 42);
        assert_eq!(psi_b_inverse_table(3).unwrap().len(), 20);
    }
}
