//! `c`-sorting words and Coxeter-sortable elements.
//!
//! The `c`-sorting word of `w` is found greedily: scan `c c c ...` letter by
//! letter and keep a letter `s` whenever it is a left descent of what remains
//! of `w`. Letters kept in one pass through `c` form one factor.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, guard, parse, Error, Result};
use crate::qseries::Family;
use crate::signedperm::{coxeter_element, length_s, CoxeterVariant, SignedPerm};

/// Largest number of letters for type-A sortable enumeration.
pub const MAX_SORTABLE_A: usize = 8;
/// Largest rank for type-B sortable enumeration.
pub const MAX_SORTABLE_B: usize = 5;
/// Largest rank for type-D sortable enumeration.
pub const MAX_SORTABLE_D: usize = 4;

/// A word in the simple reflections split into passes through `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SortingWord {
    pub factors: Vec<Vec<usize>>,
}

impl SortingWord {
    pub fn letters(&self) -> Vec<usize> {
        self.factors.iter().flatten().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.factors.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn factor_sets(&self) -> Vec<BTreeSet<usize>> {
        self.factors
            .iter()
            .map(|f| f.iter().copied().collect())
            .collect()
    }

    /// `S_1 ⊇ S_2 ⊇ ...`.
    pub fn is_decreasing(&self) -> bool {
        self.factor_sets().windows(2).all(|w| w[1].is_subset(&w[0]))
    }

    pub fn evaluate(&self, n: usize, family: Family) -> Result<SignedPerm> {
        SignedPerm::from_word(&self.letters(), n, family)
    }
}

impl fmt::Display for SortingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| {
                fac.iter()
                    .map(|i| format!("s{i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&parts.join(" | "))
    }
}

impl FromStr for SortingWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SortingWord::default());
        }
        let factors = s
            .split('|')
            .map(|part| {
                part.split_whitespace()
                    .map(|t| {
                        t.strip_prefix('s')
                            .and_then(|d| d.parse::<usize>().ok())
                            .ok_or_else(|| parse(format!("bad letter {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SortingWord { factors })
    }
}

/// The default word for sortables: `s_{n-1} ⋯ s_1` (A) or `s_{n-1} ⋯ s_1 s_0` (B, D).
pub fn standard_c_word(family: Family, n: usize) -> Vec<usize> {
    coxeter_element(family, n, CoxeterVariant::Descending).word
}

fn check_c_word(c_word: &[usize], n: usize, family: Family) -> Result<()> {
    let expected: BTreeSet<usize> = standard_c_word(family, n).into_iter().collect();
    let given: BTreeSet<usize> = c_word.iter().copied().collect();
    if given != expected || c_word.len() != expected.len() {
        return Err(domain(format!(
            "c must use each simple reflection of type {family:?} on {n} letters exactly once"
        )));
    }
    Ok(())
}

/// The `c`-sorting word of `w`.
pub fn c_sorting_word(w: &SignedPerm, c_word: &[usize], family: Family) -> Result<SortingWord> {
    let n = w.rank();
    check_c_word(c_word, n, family)?;
    let mut rest = w.clone();
    let mut len = length_s(&rest, family)?;
    let mut factors = Vec::new();
    while len > 0 {
        let mut factor = Vec::new();
        for &s in c_word {
            let next = rest.left_simple(s, family)?;
            let next_len = length_s(&next, family)?;
            if next_len < len {
                rest = next;
                len = next_len;
                factor.push(s);
                if len == 0 {
                    break;
                }
            }
        }
        debug_assert!(!factor.is_empty());
        factors.push(factor);
    }
    Ok(SortingWord { factors })
}

pub fn is_c_sortable(w: &SignedPerm, c_word: &[usize], family: Family) -> Result<bool> {
    Ok(c_sorting_word(w, c_word, family)?.is_decreasing())
}

fn sortable_limit(family: Family) -> (&'static str, usize) {
    match family {
        Family::A => ("enumerate_sortables(A)", MAX_SORTABLE_A),
        Family::B => ("enumerate_sortables(B)", MAX_SORTABLE_B),
        Family::D => ("enumerate_sortables(D)", MAX_SORTABLE_D),
    }
}

/// All `c`-sortable elements of the group on `n` letters, sorted by one-line notation.
pub fn enumerate_sortables(family: Family, n: usize, c_word: &[usize]) -> Result<Vec<SignedPerm>> {
    let (what, max) = sortable_limit(family);
    guard(what, max, n)?;
    enumerate_sortables_unguarded(family, n, c_word)
}

/// [`enumerate_sortables`] without the size guard.
pub fn enumerate_sortables_unguarded(
    family: Family,
    n: usize,
    c_word: &[usize],
) -> Result<Vec<SignedPerm>> {
    check_c_word(c_word, n, family)?;
    let all = SignedPerm::all(family, n);
    let keep = all
        .par_iter()
        .map(|w| is_c_sortable(w, c_word, family))
        .collect::<Result<Vec<bool>>>()?;
    Ok(all
        .into_iter()
        .zip(keep)
        .filter_map(|(w, k)| k.then_some(w))
        .collect())
}

/// No `i < j < k` with `w_k < w_i < w_j`.
pub fn avoids_231(s: &SignedPerm) -> bool {
    let w = s.oneline();
    let n = w.len();
    // for each j, is there i < j with w_i < w_j and k > j with w_k < w_i?
    for j in 0..n {
        for i in 0..j {
            if w[i] < w[j] && w[j + 1..].iter().any(|&x| x < w[i]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{cat_number, GroupType, QPoly};
    use num_bigint::BigInt;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn s3_sorting_words() {
        let c = standard_c_word(Family::A, 3);
        assert_eq!(c, vec![2, 1]);
        let cases = [
            ("[1,2,3]", ""),
            ("[1,3,2]", "s2"),
            ("[2,1,3]", "s1"),
            ("[3,1,2]", "s2 s1"),
            ("[3,2,1]", "s2 s1 | s2"),
            ("[2,3,1]", "s1 | s2"),
        ];
        for (w, word) in cases {
            let sw = c_sorting_word(&p(w), &c, Family::A).unwrap();
            assert_eq!(sw.to_string(), word, "{w}");
            assert_eq!(sw.evaluate(3, Family::A).unwrap(), p(w));
        }
        assert!(!is_c_sortable(&p("[2,3,1]"), &c, Family::A).unwrap());
        let sortables = enumerate_sortables(Family::A, 3, &c).unwrap();
        assert_eq!(sortables.len(), 5);
        assert!(!sortables.contains(&p("[2,3,1]")));
    }

    #[test]
    fn worked_words() {
        let c = standard_c_word(Family::A, 6);
        let w = c_sorting_word(&p("[6,2,1,5,4,3]"), &c, Family::A).unwrap();
        assert_eq!(w.to_string(), "s5 s4 s3 s2 s1 | s5 s4 s2 | s5");
        let cb = standard_c_word(Family::B, 6);
        assert_eq!(cb, vec![5, 4, 3, 2, 1, 0]);
        let v = p("[1,-2,-6,5,4,3]");
        let wb = c_sorting_word(&v, &cb, Family::B).unwrap();
        assert_eq!(
            wb.to_string(),
            "s5 s4 s3 s2 s1 s0 | s5 s4 s2 s1 s0 | s5 s2 s1"
        );
        assert!(is_c_sortable(&v, &cb, Family::B).unwrap());
        assert!(
            c_sorting_word(&SignedPerm::identity(4), &[3, 2, 1], Family::A)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn word_round_trip() {
        let w: SortingWord = "s5 s4 | s5".parse().unwrap();
        assert_eq!(w.factors, vec![vec![5, 4], vec![5]]);
        assert_eq!(w.to_string(), "s5 s4 | s5");
        assert!("s5 t4".parse::<SortingWord>().is_err());
    }

    #[test]
    fn sorting_words_are_reduced() {
        for (family, n) in [(Family::A, 5), (Family::B, 4), (Family::D, 4)] {
            let c = standard_c_word(family, n);
            for w in SignedPerm::all(family, n) {
                let sw = c_sorting_word(&w, &c, family).unwrap();
                assert_eq!(sw.len(), length_s(&w, family).unwrap());
                assert_eq!(sw.evaluate(n, family).unwrap(), w);
            }
        }
    }

    #[test]
    fn counts() {
        for n in 1..=6 {
            let t = GroupType::on_letters(Family::A, n);
            let c = standard_c_word(Family::A, n);
            let got = enumerate_sortables(Family::A, n, &c).unwrap().len();
            assert_eq!(BigInt::from(got), cat_number(t));
        }
        for n in 1..=4 {
            let c = standard_c_word(Family::B, n);
            let got = enumerate_sortables(Family::B, n, &c).unwrap().len();
            assert_eq!(BigInt::from(got), cat_number(GroupType::b(n)));
        }
        let b2 = enumerate_sortables(Family::B, 2, &[1, 0]).unwrap();
        let poly = QPoly::from_stats(b2.iter().map(|s| length_s(s, Family::B).unwrap()));
        assert_eq!(poly, "1 + 2q + q^2 + q^3 + q^4".parse().unwrap());
        assert!(matches!(
            enumerate_sortables(Family::B, 6, &standard_c_word(Family::B, 6)),
            Err(Error::Size { .. })
        ));
        assert!(enumerate_sortables(Family::A, 3, &[2, 2]).is_err());
    }

    #[test]
    fn pattern_231() {
        assert!(avoids_231(&SignedPerm::identity(5)));
        assert!(!avoids_231(&p("[2,3,1]")));
        assert!(avoids_231(&p("[6,2,1,5,4,3]")));
        for n in 1..=6 {
            let c = standard_c_word(Family::A, n);
            for w in SignedPerm::all(Family::A, n) {
                assert_eq!(
                    is_c_sortable(&w, &c, Family::A).unwrap(),
                    avoids_231(&w),
                    "{w}"
                );
            }
        }
    }

    #[test]
    fn commuting_letters_do_not_matter() {
        // s_3 s_1 = s_1 s_3, so both words name the same Coxeter element
        let c = enumerate_sortables(Family::B, 4, &[3, 1, 2, 0]).unwrap();
        let d = enumerate_sortables(Family::B, 4, &[1, 3, 2, 0]).unwrap();
        assert_eq!(c, d);
        let e = enumerate_sortables(Family::A, 5, &[4, 2, 3, 1]).unwrap();
        let f = enumerate_sortables(Family::A, 5, &[2, 4, 3, 1]).unwrap();
        assert_eq!(e, f);
    }
}
