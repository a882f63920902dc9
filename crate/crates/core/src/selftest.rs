//! Fixed worked examples, checked verbatim.

use serde::Serialize;

use crate::bijmaps::{phi, psi_a, psi_b, shell_cycles, strip};
use crate::noncrossing::{nc_elements, SetPartitionA};
use crate::paths::{
    area_b, cells_a, descents, maj_b, maj_lattice, neg_b, parse_lattice_word, split_lower_upper,
    steps_to_string, unfold_lattice_to_b, DyckWordA, DyckWordB,
};
use crate::qseries::{cat_number, qcat_a, CoxeterType, Family, GroupType};
use crate::rootposets::{
    cat_q, dyck_to_ideal_a, ideal_des, ideal_from_generators, ideal_maj, ideal_to_arc_partition_a,
    ideals, lift_delta, maximal_elements, OrderIdeal, Root,
};
use crate::signedperm::{
    coxeter_element, from_cycles, imaj, length_s, maj, rev, to_cycles, CoxeterVariant, CycleDecomp,
    SignedPerm,
};
use crate::sortable::{c_sorting_word, is_c_sortable, standard_c_word};
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

fn perm(s: &str) -> Result<SignedPerm> {
    s.parse()
}

fn roots(s: &str) -> Result<Vec<Root>> {
    s.split_whitespace().map(str::parse).collect()
}

fn a8_ideal() -> Result<OrderIdeal> {
    ideal_from_generators(GroupType::a(8), &roots("e4-e1 e5-e2 e6-e3 e7-e5 e9-e7")?)
}

fn b4_ideal() -> Result<OrderIdeal> {
    ideal_from_generators(GroupType::b(4), &roots("e4-e1 e1 e3-e2")?)
}

type Probe = fn() -> Result<bool>;

const CHECKS: &[(&str, Probe)] = &[
    ("q-integer [3]", || {
        Ok(crate::qseries::q_integer(3) == "1 + q + q^2".parse()?)
    }),
    ("Catalan numbers B2 H3 E8", || {
        Ok(cat_number(GroupType::b(2)) == 6.into()
            && cat_number(CoxeterType::H3) == 32.into()
            && cat_number(CoxeterType::E8) == 25080.into())
    }),
    ("q-Catalan symmetry n=3", || Ok(qcat_a(3).is_palindromic(6))),
    ("type B paths of length 2", || {
        Ok(crate::paths::enumerate_b(2).len() == 6)
    }),
    ("cells of the n=8 path", || {
        let d: DyckWordA = "NNENNEENENNENEEE".parse()?;
        let want = [
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
        ];
        Ok(cells_a(&d) == want.into_iter().collect())
    }),
    ("B2 areas NNNN and NENE", || {
        Ok(area_b(&"NNNN".parse()?) == 4 && area_b(&"NENE".parse()?) == 0)
    }),
    ("B6 path maj 48", || {
        let d: DyckWordB = "NENNENNNENNE".parse()?;
        Ok(neg_b(&d) == 4 && descents(d.steps()) == [2, 5, 9] && maj_b(&d) == 48)
    }),
    ("Cat_B2(q) from paths", || {
        Ok(crate::paths::area_polynomial(Family::B, 2)? == "1 + 2q + q^2 + q^3 + q^4".parse()?)
    }),
    ("lattice path maj 24", || {
        let l = parse_lattice_word("NEENEENNENNE")?;
        let d = unfold_lattice_to_b(&l)?;
        Ok(maj_lattice(&l) == 24 && maj_b(&d) == 48)
    }),
    ("upper part NNE", || {
        let d: DyckWordB = "NNNNEEENNNNE".parse()?;
        let (lower, upper) = split_lower_upper(&d);
        Ok(lower.to_string() == "NNNNEEENNEEE" && steps_to_string(&upper) == "NNE")
    }),
    ("l_S of phi_9 image", || {
        Ok(length_s(&perm("[7,3,4,5,2,6,9,8,1]")?, Family::A)? == 17)
    }),
    ("maj 20 and imaj 17", || {
        let s = from_cycles(&"(1,7,9)(2,3,4,5)".parse()?, 9)?;
        Ok(maj(&s, Family::A)? == 20 && imaj(&s, Family::A)? == 17)
    }),
    ("rev example", || {
        Ok(rev(&perm("[2,-4,3,-1]")?) == perm("[2,-1,3,-4]")?)
    }),
    ("cycle notation", || {
        let c = |s: &str| -> Result<CycleDecomp> { s.parse() };
        Ok(to_cycles(&perm("[4,2,6,5,1,3]")?) == c("(1,4,5)(3,6)")?
            && to_cycles(&perm("[4,2,-6,5,1,3]")?) == c("(1,4,5)(3,-6,-3)")?
            && from_cycles(&c("(1,4,5)(6,3,-6)")?, 6)? == perm("[4,2,-6,5,1,3]")?
            && to_cycles(&perm("[4,2,6,5,-1,-3]")?) == c("(1,4,5,-1)(3,6,-3)")?
            && c("(1,4,5)(3,6)")?.length() == 3)
    }),
    ("Coxeter elements", || {
        let a = coxeter_element(Family::A, 3, CoxeterVariant::Descending);
        let b = coxeter_element(Family::B, 5, CoxeterVariant::Ascending);
        Ok(a.word == [2, 1] && a.element == perm("[3,1,2]")? && b.element == perm("[2,3,4,5,-1]")?)
    }),
    ("B2 and D4 ideal counts", || {
        Ok(ideals(GroupType::b(2))?.len() == 6 && ideals(GroupType::d(4))?.len() == 50)
    }),
    ("Cat(B2;q) from ideals", || {
        Ok(cat_q(GroupType::b(2))? == "1 + 2q + q^2 + q^3 + q^4".parse()?)
    }),
    ("10-root ideal of the n=8 path", || {
        let ideal = dyck_to_ideal_a(&"NNENNEENENNENEEE".parse()?);
        let want = SetPartitionA::new(8, vec![vec![1, 3], vec![2, 4, 5, 7, 8], vec![6]])?;
        Ok(ideal.len() == 10 && ideal_to_arc_partition_a(&ideal)? == want)
    }),
    ("A8 ideal descents and lift", || {
        let ideal = a8_ideal()?;
        let lifted = lift_delta(&ideal)?;
        Ok(ideal_des(&ideal)? == [5, 8, 11, 13]
            && ideal_maj(&ideal)? == 35
            && ideal_des(&lifted)? == [6, 9, 12, 14]
            && ideal_maj(&lifted)? == 39)
    }),
    ("B3 noncrossing count", || {
        let c = coxeter_element(Family::B, 3, CoxeterVariant::Ascending).element;
        Ok(nc_elements(Family::B, &c)?.len() == 20)
    }),
    ("S3 sorting words", || {
        let c = standard_c_word(Family::A, 3);
        let words = ["", "s2", "s2 s1", "s2 s1 | s2", "s1", "s1 | s2"];
        let mut ok = true;
        for w in words {
            let word: crate::sortable::SortingWord = w.parse()?;
            let elt = word.evaluate(3, Family::A)?;
            ok &= c_sorting_word(&elt, &c, Family::A)? == word;
        }
        Ok(ok)
    }),
    ("[2,3,1] is not sortable", || {
        Ok(!is_c_sortable(
            &perm("[2,3,1]")?,
            &standard_c_word(Family::A, 3),
            Family::A,
        )?)
    }),
    ("shell (1,7,9)", || {
        let ideal = a8_ideal()?;
        Ok(
            shell_cycles(&maximal_elements(&ideal), Family::A)?.to_string() == "(1,7,9)"
                && strip(&ideal)?.root_strings() == ["e3-e2", "e4-e3", "e5-e4"],
        )
    }),
    ("shell (1,4,-1)", || {
        Ok(shell_cycles(&roots("e4-e1 e1")?, Family::B)?.to_string() == "(1,4,-1)")
    }),
    ("phi_9 and its lift", || {
        let ideal = a8_ideal()?;
        let s = phi(&ideal)?;
        let l = phi(&lift_delta(&ideal)?)?;
        Ok(s == perm("[7,3,4,5,2,6,9,8,1]")?
            && l == perm("[10,6,3,4,5,7,2,9,8,1]")?
            && ideal_maj(&ideal)? + maj(&s, Family::A)? + imaj(&s, Family::A)? == 72)
    }),
    ("phi_4 and its lift", || {
        let ideal = b4_ideal()?;
        Ok(phi(&ideal)? == perm("[4,3,2,-1]")?
            && to_cycles(&phi(&ideal)?).to_string() == "(1,4,-1)(2,3)"
            && phi(&lift_delta(&ideal)?)? == perm("[4,3,2,-1,-5]")?)
    }),
    ("psi_A word", || {
        let (s, w) = psi_a(&"NNNNEEENNEEE".parse()?)?;
        Ok(s == perm("[6,2,1,5,4,3]")? && w.to_string() == "s5 s4 s3 s2 s1 | s5 s4 s2 | s5")
    }),
    ("psi_B word", || {
        let (s, w) = psi_b(&"NNNNEEENNNNE".parse()?)?;
        Ok(s == perm("[1,-2,-6,5,4,3]")?
            && w.to_string() == "s5 s4 s3 s2 s1 s0 | s5 s4 s2 s1 s0 | s5 s2 s1"
            && is_c_sortable(&s, &standard_c_word(Family::B, 6), Family::B)?)
    }),
    ("D4 inequality", || {
        Ok(crate::noncrossing::d4_counterexample()?.holds())
    }),
];

/// Runs every fixed example; a check that errors counts as a failure.
pub fn run() -> Vec<Check> {
    CHECKS
        .iter()
        .map(|(name, probe)| Check {
            name,
            passed: probe().unwrap_or(false),
        })
        .collect()
}
