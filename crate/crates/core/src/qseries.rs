//! Exact polynomial arithmetic in `q` and the closed-form q-Catalan numbers.
//!
//! [`QPoly`] is a dense polynomial with arbitrary-precision integer
//! coefficients. Everything that counts objects by a statistic in this crate
//! ends up as a `QPoly`, so equality of generating functions is plain `==`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{domain, parse, Error, Result};

/// Integer polynomial in `q`, constant term first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient vector and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^k`.
    pub fn monomial(k: usize, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::from_big(coeffs)
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_big(coeffs.into_iter().map(Into::into).collect())
    }

    fn from_big(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Generating polynomial `sum_x q^{stat(x)}` of a statistic.
    pub fn from_stats<I: IntoIterator<Item = usize>>(stats: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for s in stats {
            if coeffs.len() <= s {
                coeffs.resize(s + 1, BigInt::zero());
            }
            coeffs[s] += 1;
        }
        Self::from_big(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Substitute `q -> q^k` (`k >= 1`).
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QPoly { coeffs }
    }

    /// Exact long division. Fails unless `divisor` divides `self` with an
    /// integral quotient and zero remainder.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let dlead = divisor
            .coeffs
            .last()
            .ok_or_else(|| domain("division by the zero polynomial"))?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return Err(Error::Internal(format!(
                "non-exact division: deg {} < deg {}",
                self.coeffs.len() - 1,
                dd
            )));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % dlead).is_zero() {
                return Err(Error::Internal(format!(
                    "non-exact division: {top} is not divisible by {dlead}"
                )));
            }
            let f = top / dlead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * c;
            }
            quot[k] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal(format!(
                "non-exact division of {self} by {divisor}"
            )));
        }
        Ok(Self::from_big(quot))
    }

    /// `true` iff `coeff(k) == coeff(center - k)` for every `k`.
    pub fn is_palindromic(&self, center: i64) -> bool {
        let len = self.coeffs.len() as i64;
        (0..len).all(|k| {
            let mirror = center - k;
            let other = if mirror < 0 {
                BigInt::zero()
            } else {
                self.coeff(mirror as usize)
            };
            self.coeffs[k as usize] == other
        })
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

pub fn is_palindromic(p: &QPoly, center: i64) -> bool {
    p.is_palindromic(center)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_big((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_big((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_big(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_big(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers, e.g. `1 + 2q + q^2 - 3q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) format. Terms may appear in any order.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = QPoly::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let (coef, exp) = match body.find('q') {
                None => (body, 0usize),
                Some(p) => {
                    let rest = &body[p + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| parse(format!("bad exponent in term {term:?}")))?
                    };
                    (&body[..p], exp)
                }
            };
            let coef: BigInt = if coef.is_empty() {
                BigInt::one()
            } else {
                coef.parse()
                    .map_err(|_| parse(format!("bad coefficient in term {term:?}")))?
            };
            let mut coeffs = vec![BigInt::zero(); exp + 1];
            coeffs[exp] = coef * sign;
            acc = &acc + &QPoly::from_big(coeffs);
        }
        Ok(acc)
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        let mut st = serializer.serialize_struct("QPoly", 1)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .into_iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| de::Error::custom("coefficient is not an integer")),
                serde_json::Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| de::Error::custom("coefficient string is not an integer")),
                _ => Err(de::Error::custom("coefficient must be a number or string")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPoly::from_big(coeffs))
    }
}

/// Reflection-group family used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

/// A classical reflection group `A_r`, `B_r` or `D_r`.
///
/// `A_r` acts on `r + 1` letters (it is the symmetric group `S_{r+1}`); `B_r`
/// and `D_r` act on `r` signed letters. Rank `0` denotes the trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupType {
    pub family: Family,
    pub rank: usize,
}

impl GroupType {
    pub const fn new(family: Family, rank: usize) -> Self {
        GroupType { family, rank }
    }

    pub const fn a(rank: usize) -> Self {
        Self::new(Family::A, rank)
    }

    pub const fn b(rank: usize) -> Self {
        Self::new(Family::B, rank)
    }

    pub const fn d(rank: usize) -> Self {
        Self::new(Family::D, rank)
    }

    /// The group whose elements are (signed) permutations of `n` letters:
    /// `A_{n-1}`, `B_n` or `D_n`.
    pub fn on_letters(family: Family, n: usize) -> Self {
        match family {
            Family::A => Self::a(n.saturating_sub(1)),
            Family::B | Family::D => Self::new(family, n),
        }
    }

    /// Number of letters the group permutes.
    pub fn letters(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::D => self.rank,
        }
    }

    /// Degrees `d_1, ..., d_l` and the Coxeter number `h`.
    pub fn degrees(&self) -> (Vec<usize>, usize) {
        let r = self.rank;
        match self.family {
            Family::A => ((2..=r + 1).collect(), r + 1),
            Family::B => ((1..=r).map(|i| 2 * i).collect(), 2 * r),
            Family::D => {
                if r < 2 {
                    // D_1 is not a reflection group; treat as trivial.
                    return (Vec::new(), 0);
                }
                let mut d: Vec<usize> = (1..r).map(|i| 2 * i).collect();
                d.push(r);
                d.sort_unstable();
                (d, 2 * r - 2)
            }
        }
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.letters();
        match self.family {
            Family::A => n * (n - 1) / 2,
            Family::B => n * n,
            Family::D => n * n.saturating_sub(1),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.family, self.rank)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(parse(format!("unknown family {other:?}"))),
        }
    }
}

impl FromStr for GroupType {
    type Err = Error;
    /// Accepts `A3`, `A_3`, `b_2`, ...
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (fam, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let family: Family = fam.parse()?;
        let rank = rest
            .trim_start_matches('_')
            .parse()
            .map_err(|_| parse(format!("bad rank in {s:?}")))?;
        Ok(GroupType::new(family, rank))
    }
}

/// Any irreducible finite real reflection group, for [`cat_number`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterType {
    Classical(GroupType),
    I2(usize),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl CoxeterType {
    pub fn degrees(&self) -> (Vec<usize>, usize) {
        match self {
            CoxeterType::Classical(t) => t.degrees(),
            CoxeterType::I2(k) => (vec![2, *k], *k),
            CoxeterType::H3 => (vec![2, 6, 10], 10),
            CoxeterType::H4 => (vec![2, 12, 20, 30], 30),
            CoxeterType::F4 => (vec![2, 6, 8, 12], 12),
            CoxeterType::E6 => (vec![2, 5, 6, 8, 9, 12], 12),
            CoxeterType::E7 => (vec![2, 6, 8, 10, 12, 14, 18], 18),
            CoxeterType::E8 => (vec![2, 8, 12, 14, 18, 20, 24, 30], 30),
        }
    }
}

impl From<GroupType> for CoxeterType {
    fn from(t: GroupType) -> Self {
        CoxeterType::Classical(t)
    }
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_integer(k: usize) -> QPoly {
    QPoly::from_coeffs(std::iter::repeat_n(1, k))
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`.
pub fn q_factorial(k: usize) -> QPoly {
    (1..=k).fold(QPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial `[k choose l]_q`, built by the q-Pascal recurrence
/// `[k, l] = [k-1, l-1] + q^l [k-1, l]`.
pub fn q_binomial(k: usize, l: usize) -> Result<QPoly> {
    if l > k {
        return Err(domain(format!("q_binomial({k}, {l}): l > k")));
    }
    let mut row = vec![QPoly::one()];
    for m in 1..=k {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 {
                row[j - 1].clone()
            } else {
                QPoly::zero()
            };
            let right = if j < m {
                row[j].shift(j)
            } else {
                QPoly::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(l))
}

/// `prod_i [d_i + h]_q / [d_i]_q` for a classical group.
pub fn qcat_product(t: GroupType) -> Result<QPoly> {
    let (degrees, h) = t.degrees();
    let num = degrees
        .iter()
        .fold(QPoly::one(), |acc, &d| &acc * &q_integer(d + h));
    let den = degrees
        .iter()
        .fold(QPoly::one(), |acc, &d| &acc * &q_integer(d));
    num.div_exact(&den)
}

/// `1/[n+1]_q [2n choose n]_q`.
pub fn qcat_a(n: usize) -> QPoly {
    let binom = q_binomial(2 * n, n).expect("n <= 2n");
    binom
        .div_exact(&q_integer(n + 1))
        .expect("q-Catalan division is exact")
}

/// `prod_i (d_i + h) / d_i` as an exact integer.
pub fn cat_number(t: impl Into<CoxeterType>) -> BigInt {
    let (degrees, h) = t.into().degrees();
    let num: BigInt = degrees.iter().map(|&d| BigInt::from(d + h)).product();
    let den: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    debug_assert!((&num % &den).is_zero());
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn q_integer_values() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), QPoly::one());
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(5, 0).unwrap(), QPoly::one());
        assert_eq!(q_binomial(2, 1).unwrap(), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert!(matches!(q_binomial(2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn q_binomial_matches_factorial_quotient() {
        for k in 0..9 {
            for l in 0..=k {
                let direct = q_factorial(k)
                    .div_exact(&(&q_factorial(l) * &q_factorial(k - l)))
                    .unwrap();
                assert_eq!(q_binomial(k, l).unwrap(), direct);
            }
        }
    }

    #[test]
    fn qcat_values() {
        assert_eq!(qcat_a(1), QPoly::one());
        assert_eq!(qcat_a(2), p(&[1, 0, 1]));
        assert_eq!(qcat_a(3), p(&[1, 0, 1, 1, 1, 0, 1]));
        assert_eq!(qcat_product(GroupType::a(1)).unwrap(), p(&[1, 0, 1]));
        assert_eq!(qcat_product(GroupType::a(2)).unwrap(), qcat_a(3));
        assert_eq!(
            qcat_product(GroupType::b(2)).unwrap(),
            q_binomial(4, 2).unwrap().dilate(2)
        );
    }

    #[test]
    fn cat_numbers_table() {
        assert_eq!(cat_number(GroupType::b(2)), BigInt::from(6));
        assert_eq!(cat_number(GroupType::a(2)), BigInt::from(5));
        assert_eq!(cat_number(GroupType::d(4)), BigInt::from(50));
        assert_eq!(cat_number(CoxeterType::I2(5)), BigInt::from(7));
        assert_eq!(cat_number(CoxeterType::H3), BigInt::from(32));
        assert_eq!(cat_number(CoxeterType::H4), BigInt::from(280));
        assert_eq!(cat_number(CoxeterType::F4), BigInt::from(105));
        assert_eq!(cat_number(CoxeterType::E6), BigInt::from(833));
        assert_eq!(cat_number(CoxeterType::E7), BigInt::from(4160));
        assert_eq!(cat_number(CoxeterType::E8), BigInt::from(25080));
    }

    #[test]
    fn palindromes() {
        assert!(p(&[1, 0, 1]).is_palindromic(2));
        assert!(!p(&[1, 1]).is_palindromic(2));
        assert!(qcat_a(3).is_palindromic(6));
        for n in 1..=8 {
            assert!(qcat_a(n).is_palindromic((n * (n - 1)) as i64), "n={n}");
        }
        for n in 1..=6 {
            let b = qcat_product(GroupType::b(n)).unwrap();
            assert!(b.is_palindromic((2 * n * n) as i64), "n={n}");
        }
    }

    #[test]
    fn qcat_a_agrees_with_product_and_catalan() {
        for n in 1..=10 {
            let t = GroupType::a(n - 1);
            assert_eq!(qcat_a(n), qcat_product(t).unwrap());
            assert_eq!(qcat_a(n).eval_one(), cat_number(t));
        }
    }

    #[test]
    fn wrong_degrees_are_detected() {
        // [5]_q / [2]_q is not a polynomial
        assert!(matches!(
            q_integer(5).div_exact(&q_integer(2)),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn display_and_parse() {
        let poly = p(&[1, 2, 1, 1, 1]);
        assert_eq!(poly.to_string(), "1 + 2q + q^2 + q^3 + q^4");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-q + 3q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!("q^4 + q^3 + q^2 + 2q + 1".parse::<QPoly>().unwrap(), poly);
        assert_eq!("-q + 3q^3".parse::<QPoly>().unwrap(), p(&[0, -1, 0, 3]));
    }

    #[test]
    fn json_shape() {
        let poly = p(&[1, 0, 2]);
        let s = serde_json::to_string(&poly).unwrap();
        assert_eq!(s, r#"{"coeffs":[1,0,2]}"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, poly);
        let big = QPoly::from_coeffs([BigInt::from(i64::MAX) * 4]);
        let back: QPoly = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    #[test]
    fn group_type_parsing() {
        assert_eq!("B_3".parse::<GroupType>().unwrap(), GroupType::b(3));
        assert_eq!("a7".parse::<GroupType>().unwrap(), GroupType::a(7));
        assert!("X2".parse::<GroupType>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn q_binomial_symmetric(k in 0usize..=12, l in 0usize..=12) {
                prop_assume!(l <= k);
                prop_assert_eq!(q_binomial(k, l).unwrap(), q_binomial(k, k - l).unwrap());
            }

            #[test]
            fn product_then_divide(a in proptest::collection::vec(-5i64..5, 0..6),
                                   b in proptest::collection::vec(-5i64..5, 1..5)) {
                let pa = QPoly::from_coeffs(a.iter().copied());
                let pb = QPoly::from_coeffs(b.iter().copied());
                prop_assume!(!pb.is_zero());
                let prod = &pa * &pb;
                prop_assert_eq!(prod.div_exact(&pb).unwrap(), pa.clone());
                prop_assert_eq!(prod.to_string().parse::<QPoly>().unwrap(), prod);
            }
        }
    }
}
