//! The character ring of `SL_n`.
//!
//! Characters live in `Z[x_1^±, ..., x_n^±] / (x_1 ... x_n - 1)`.  Every
//! monomial has a unique representative whose last exponent is 0, obtained
//! by subtracting the last exponent from all coordinates; [`Weight`] stores
//! exactly these normal forms.  A [`Character`] is a finite `Z`-linear
//! combination of normalized weights with arbitrary-precision coefficients.
//!
//! Conventions used throughout:
//!
//! * `h(d)` is the complete homogeneous symmetric polynomial, `h(d) = 0`
//!   for `d < 0` and `h(0) = 1`.
//! * `e(d)` is elementary symmetric, zero outside `0 <= d <= n`.
//! * `h_trunc(q, d)` keeps only monomials with every exponent `< q`; it
//!   vanishes outside `0 <= d <= n(q-1)`.
//! * `schur2(a, b) = h(a) h(b) - h(a+1) h(b-1)` (two-row Jacobi-Trudi) and
//!   `schur2_trunc` is the same expression in truncated `h`'s.
//! * `dual` substitutes `x_i -> x_i^{-1}`; `frobenius(q)` raises every
//!   variable to the `q`-th power, `q` a prime power (or 1).
//! * `nim(m)` (rank 3 only) sums `x1^a x2^b x3^c` over `a + b + c = 2m`
//!   with `a XOR b XOR c = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::padic::is_prime_power_or_one;
use crate::{Error, Result};

/// An `SL_n` weight in normal form: an exponent vector whose last entry
/// is 0.  Ordering is lexicographic, so the maximum term of a character
/// is its highest weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    /// Normalizes a raw exponent vector into the standard representative
    /// modulo `(1, 1, ..., 1)`.  Needs at least two coordinates.
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::Domain(format!(
                "a weight needs at least 2 coordinates, got {}",
                raw.len()
            )));
        }
        let last = raw[raw.len() - 1];
        Ok(Weight(raw.iter().map(|&x| x - last).collect()))
    }

    /// Number of coordinates `n`.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// The normalized exponents.
    pub fn exps(&self) -> &[i64] {
        &self.0
    }

    /// True when the exponents are non-increasing, i.e. the weight is
    /// dominant.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominance order: `self - other` is a non-negative integer
    /// combination of simple roots `x_i/x_{i+1}` modulo `(1, ..., 1)`.
    pub fn dominates(&self, other: &Weight) -> bool {
        assert_eq!(self.rank(), other.rank(), "weights of different rank");
        let n = self.rank() as i64;
        let total: i64 = self.0.iter().sum::<i64>() - other.0.iter().sum::<i64>();
        if total.rem_euclid(n) != 0 {
            return false;
        }
        let t = -total / n;
        let mut partial = 0i64;
        for i in 0..self.rank() - 1 {
            partial += self.0[i] - other.0[i];
            if partial + (i as i64 + 1) * t < 0 {
                return false;
            }
        }
        true
    }
}

/// An element of the `SL_n` character ring: a sparse sum of normalized
/// weights with `BigInt` coefficients.  Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    n: usize,
    terms: BTreeMap<Weight, BigInt>,
}

/// One serialized character term.  Coefficients round-trip through JSON
/// numbers exactly, at arbitrary precision.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct JsonTerm {
    /// Normalized exponent vector, length `n`.
    pub exp: Vec<i64>,
    /// Integer coefficient.
    pub coeff: serde_json::Number,
}

impl Character {
    /// The zero character in rank `n`.
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        Character { n, terms: BTreeMap::new() }
    }

    /// The unit character.
    pub fn one(n: usize) -> Self {
        let mut c = Self::zero(n);
        c.insert(Weight(vec![0; n]), BigInt::one());
        c
    }

    /// A single term `coeff * x^weight`.
    pub fn monomial(weight: Weight, coeff: BigInt) -> Self {
        let mut c = Self::zero(weight.rank());
        c.insert(weight, coeff);
        c
    }

    /// Complete homogeneous symmetric polynomial `h_d` in `n` variables;
    /// zero for `d < 0`.
    pub fn h(n: usize, d: i64) -> Self {
        let mut c = Self::zero(n);
        if d < 0 {
            return c;
        }
        for exps in compositions_bounded(d, n, d) {
            c.insert(Weight::normalize(&exps).expect("n >= 2"), BigInt::one());
        }
        c
    }

    /// Elementary symmetric polynomial `e_d`; zero outside `0 <= d <= n`.
    pub fn e(n: usize, d: i64) -> Self {
        let mut c = Self::zero(n);
        if d < 0 || d > n as i64 {
            return c;
        }
        for exps in compositions_bounded(d, n, 1) {
            c.insert(Weight::normalize(&exps).expect("n >= 2"), BigInt::one());
        }
        c
    }

    /// Truncated complete homogeneous polynomial: monomials of degree `d`
    /// with every exponent `< q`.  Zero outside `0 <= d <= n(q-1)`.
    pub fn h_trunc(n: usize, q: u64, d: i64) -> Result<Self> {
        if q < 1 {
            return Err(Error::Domain("truncation order q must be >= 1".into()));
        }
        let mut c = Self::zero(n);
        if d < 0 || d > n as i64 * (q as i64 - 1) {
            return Ok(c);
        }
        for exps in compositions_bounded(d, n, q as i64 - 1) {
            c.insert(Weight::normalize(&exps).expect("n >= 2"), BigInt::one());
        }
        Ok(c)
    }

    /// Two-row Schur polynomial via Jacobi-Trudi:
    /// `s_(a,b) = h_a h_b - h_{a+1} h_{b-1}`.
    pub fn schur2(n: usize, a: i64, b: i64) -> Self {
        let pos = Self::h(n, a).checked_mul(&Self::h(n, b)).expect("same rank");
        let neg = Self::h(n, a + 1).checked_mul(&Self::h(n, b - 1)).expect("same rank");
        pos.checked_sub(&neg).expect("same rank")
    }

    /// Truncated two-row Schur polynomial: the Jacobi-Trudi expression in
    /// `h_trunc(q, -)`.
    pub fn schur2_trunc(n: usize, q: u64, a: i64, b: i64) -> Result<Self> {
        let pos = Self::h_trunc(n, q, a)?.checked_mul(&Self::h_trunc(n, q, b)?)?;
        let neg = Self::h_trunc(n, q, a + 1)?.checked_mul(&Self::h_trunc(n, q, b - 1)?)?;
        pos.checked_sub(&neg)
    }

    /// Nim character (rank 3 only): the sum of `x1^a x2^b x3^c` over
    /// `a + b + c = 2m` with `a XOR b XOR c = 0`.
    pub fn nim(n: usize, m: i64) -> Result<Self> {
        if n != 3 {
            return Err(Error::Domain(format!("nim characters require n = 3, got n = {n}")));
        }
        if m < 0 {
            return Err(Error::Domain(format!("nim index must be >= 0, got {m}")));
        }
        let mut c = Self::zero(3);
        for a in 0..=2 * m {
            for b in 0..=2 * m - a {
                let cc = 2 * m - a - b;
                if (a as u64) ^ (b as u64) ^ (cc as u64) == 0 {
                    c.insert(Weight::normalize(&[a, b, cc]).expect("n = 3"), BigInt::one());
                }
            }
        }
        Ok(c)
    }

    /// Rank of the ambient ring.
    pub fn n(&self) -> usize {
        self.n
    }

    /// True when no terms remain.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct weights.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic weight order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in descending lexicographic weight order (highest weight
    /// first); this is the serialization order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Coefficient of a weight (zero when absent).
    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of coefficients: the dimension of the virtual representation,
    /// i.e. the evaluation at `x_i = 1`.
    pub fn dim_eval(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Lexicographically largest weight.  Errors on the zero character.
    pub fn highest_weight(&self) -> Result<&Weight> {
        self.terms.keys().next_back().ok_or(Error::ZeroCharacter)
    }

    /// True when the character is invariant under permuting the variables.
    pub fn is_symmetric(&self) -> bool {
        for (w, c) in &self.terms {
            for perm in w.exps().iter().copied().permutations(self.n) {
                let pw = Weight::normalize(&perm).expect("n >= 2");
                if self.coeff(&pw) != *c {
                    return false;
                }
            }
        }
        true
    }

    /// Checked sum; errors if the ranks differ.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Checked difference; errors if the ranks differ.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), -c);
        }
        Ok(out)
    }

    /// Checked product; errors if the ranks differ.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        let mut terms: BTreeMap<Weight, BigInt> = BTreeMap::new();
        let mut scratch = vec![0i64; self.n];
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                for (i, s) in scratch.iter_mut().enumerate() {
                    *s = w1.0[i] + w2.0[i];
                }
                let w = Weight::normalize(&scratch).expect("n >= 2");
                let entry = terms.entry(w).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Character { n: self.n, terms })
    }

    /// Additive inverse.
    pub fn negate(&self) -> Self {
        Character {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// Dual character: substitutes `x_i -> x_i^{-1}` and renormalizes.
    pub fn dual(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let neg: Vec<i64> = w.exps().iter().map(|&x| -x).collect();
            out.insert(Weight::normalize(&neg).expect("n >= 2"), c.clone());
        }
        out
    }

    /// Frobenius twist: raises every variable to the `q`-th power.
    /// `q` must be 1 or a prime power.
    pub fn frobenius(&self, q: u64) -> Result<Self> {
        if !is_prime_power_or_one(q) {
            return Err(Error::NotPrimePower(q));
        }
        let qi = i64::try_from(q)
            .map_err(|_| Error::Domain(format!("frobenius twist {q} does not fit in i64")))?;
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let exps: Option<Vec<i64>> = w.exps().iter().map(|&x| x.checked_mul(qi)).collect();
            let exps = exps
                .ok_or_else(|| Error::Domain("exponent overflow in frobenius twist".into()))?;
            out.insert(Weight(exps), c.clone());
        }
        Ok(out)
    }

    /// Serializes to a JSON array of `{"exp": [...], "coeff": int}` in
    /// descending weight order.  Round-trips bit-exactly via `from_json`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_terms()).expect("character terms always serialize")
    }

    /// The serialized term list (descending weight order).
    pub fn json_terms(&self) -> Vec<JsonTerm> {
        self.terms_desc()
            .map(|(w, c)| JsonTerm {
                exp: w.exps().to_vec(),
                coeff: serde_json::Number::from_str(&c.to_string())
                    .expect("a decimal integer is a valid JSON number"),
            })
            .collect()
    }

    /// Parses a JSON term array as produced by `to_json`.  Exponent vectors
    /// must have length `n`; non-normalized exponents are normalized and
    /// duplicate weights are summed.
    pub fn from_json(n: usize, s: &str) -> Result<Self> {
        let parsed: Vec<JsonTerm> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_terms(n, &parsed)
    }

    /// Builds a character from weight/coefficient pairs, summing repeats.
    pub fn from_weighted_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Weight, BigInt)>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("rank must be at least 2, got {n}")));
        }
        let mut out = Self::zero(n);
        for (w, c) in terms {
            if w.rank() != n {
                return Err(Error::RankMismatch { expected: n, found: w.rank() });
            }
            out.insert(w, c);
        }
        Ok(out)
    }

    /// Rebuilds a character from serialized terms.
    pub fn from_terms(n: usize, terms: &[JsonTerm]) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("rank must be at least 2, got {n}")));
        }
        let mut out = Self::zero(n);
        for (idx, term) in terms.iter().enumerate() {
            if term.exp.len() != n {
                return Err(Error::RankMismatch { expected: n, found: term.exp.len() });
            }
            let coeff = BigInt::from_str(&term.coeff.to_string()).map_err(|_| {
                Error::Parse(format!(
                    "term {idx}: coefficient {} is not an integer",
                    term.coeff
                ))
            })?;
            out.insert(Weight::normalize(&term.exp)?, coeff);
        }
        Ok(out)
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    fn insert(&mut self, w: Weight, c: BigInt) {
        debug_assert_eq!(w.rank(), self.n);
        debug_assert_eq!(*w.0.last().expect("non-empty"), 0, "weight not normalized");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms_desc().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let trivial = w.exps().iter().all(|&x| x == 0);
            if trivial {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "x^{:?}", w.exps())?;
            } else {
                write!(f, "{mag}*x^{:?}", w.exps())?;
            }
        }
        Ok(())
    }
}

macro_rules! ref_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Character> for &Character {
            type Output = Character;
            fn $method(self, rhs: &Character) -> Character {
                self.$checked(rhs).expect("character rank mismatch")
            }
        }
    };
}

ref_binop!(Add, add, checked_add);
ref_binop!(Sub, sub, checked_sub);
ref_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.negate()
    }
}

/// All length-`parts` vectors of integers in `[0, bound]` summing to
/// `total`; empty when `total` is negative or exceeds capacity.
pub(crate) fn compositions_bounded(total: i64, parts: usize, bound: i64) -> Vec<Vec<i64>> {
    compositions_capped(total, &vec![bound; parts])
}

/// All non-negative integer vectors `v` with `v[i] <= caps[i]` summing to
/// `total`.
pub(crate) fn compositions_capped(total: i64, caps: &[i64]) -> Vec<Vec<i64>> {
    fn rec(total: i64, caps: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if caps.len() == 1 {
            if total >= 0 && total <= caps[0] {
                cur.push(total);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let rest: i64 = caps[1..].iter().sum();
        let lo = (total - rest).max(0);
        let hi = total.min(caps[0]);
        for v in lo..=hi {
            cur.push(v);
            rec(total - v, &caps[1..], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total < 0 || caps.iter().any(|&c| c < 0) {
        return out;
    }
    if caps.is_empty() {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, caps, &mut Vec::with_capacity(caps.len()), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(exps: &[i64]) -> Weight {
        Weight::normalize(exps).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn h_times_h_splits() {
        let h1 = Character::h(3, 1);
        let lhs = &h1 * &h1;
        let rhs = &Character::h(3, 2) + &Character::e(3, 2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_dimensions() {
        // dim h(n, d) = C(d+n-1, n-1), dim e(n, d) = C(n, d)
        assert_eq!(Character::h(3, 4).dim_eval(), big(15));
        assert_eq!(Character::h(4, 3).dim_eval(), big(20));
        assert_eq!(Character::e(4, 2).dim_eval(), big(6));
        assert_eq!(Character::e(3, 4).dim_eval(), big(0));
        assert_eq!(Character::h(3, -1).is_zero(), true);
        assert_eq!(Character::h(3, 0), Character::one(3));
    }

    #[test]
    fn truncation_conventions() {
        // q = 1 keeps only degree 0
        assert_eq!(Character::h_trunc(3, 1, 0).unwrap(), Character::one(3));
        assert!(Character::h_trunc(3, 1, 1).unwrap().is_zero());
        // out of range
        assert!(Character::h_trunc(3, 2, 4).unwrap().is_zero());
        assert!(Character::h_trunc(3, 2, -1).unwrap().is_zero());
        // top truncated degree is the determinant monomial = 1
        assert_eq!(Character::h_trunc(3, 2, 3).unwrap(), Character::one(3));
        assert!(Character::h_trunc(3, 0, 1).is_err());
    }

    #[test]
    fn truncated_schur_frozen_values() {
        assert_eq!(Character::schur2_trunc(3, 2, 3, 0).unwrap(), Character::one(3));
        // s^(4)_(8,1) in rank 3: dimension 8, highest weight (2,1,0),
        // weight (0,0,0) with multiplicity 2
        let s = Character::schur2_trunc(3, 4, 8, 1).unwrap();
        assert_eq!(s.dim_eval(), big(8));
        assert_eq!(s.highest_weight().unwrap(), &w(&[2, 1, 0]));
        assert_eq!(s.coeff(&w(&[0, 0, 0])), big(2));
        assert_eq!(s.term_count(), 7);
        let expected: Vec<(Vec<i64>, i64)> = vec![
            (vec![2, 1, 0], 1),
            (vec![1, 2, 0], 1),
            (vec![1, -1, 0], 1),
            (vec![0, 0, 0], 2),
            (vec![-1, 1, 0], 1),
            (vec![-1, -2, 0], 1),
            (vec![-2, -1, 0], 1),
        ];
        let got: Vec<(Vec<i64>, i64)> = s
            .terms_desc()
            .map(|(w, c)| (w.exps().to_vec(), i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn schur_highest_weight_and_dimension() {
        // rank 3 two-row dimension: (a-b+1)(b+1)(a+2)/2
        for (a, b) in [(1i64, 0i64), (2, 1), (3, 1), (4, 2), (5, 0)] {
            let s = Character::schur2(3, a, b);
            assert_eq!(s.highest_weight().unwrap(), &w(&[a, b, 0]));
            assert_eq!(s.dim_eval(), big((a - b + 1) * (b + 1) * (a + 2) / 2));
            assert!(s.is_symmetric());
            let hw = s.highest_weight().unwrap().clone();
            for (other, _) in s.terms() {
                assert!(hw.dominates(other));
            }
        }
        // adjoint of sl3
        assert_eq!(Character::schur2(3, 2, 1).dim_eval(), big(8));
        // degenerate Jacobi-Trudi rows
        assert!(Character::schur2(3, 1, 2).is_zero());
    }

    #[test]
    fn nim_values() {
        let n2 = Character::nim(3, 2).unwrap();
        let mut expected = Character::zero(3);
        for e in [[2i64, 2, 0], [0, -2, 0], [-2, 0, 0]] {
            expected = &expected + &Character::monomial(w(&e), big(1));
        }
        assert_eq!(n2, expected);
        assert_eq!(Character::nim(3, 0).unwrap(), Character::one(3));
        assert_eq!(Character::nim(3, 5).unwrap().dim_eval(), big(9));
        // doubling: nim(q + m) = F^q(s_(1,1)) * nim(m) for m < q = 2^k
        for (q, m) in [(2i64, 1i64), (4, 1), (4, 3), (8, 5)] {
            let lhs = Character::nim(3, q + m).unwrap();
            let rhs = &Character::schur2(3, 1, 1).frobenius(q as u64).unwrap()
                * &Character::nim(3, m).unwrap();
            assert_eq!(lhs, rhs, "q = {q}, m = {m}");
        }
        assert!(Character::nim(4, 1).is_err());
        assert!(Character::nim(3, -1).is_err());
    }

    #[test]
    fn dual_and_frobenius() {
        let s = Character::schur2(3, 2, 1);
        assert_eq!(s.dual().dual(), s);
        // self-dual representation
        assert_eq!(s.dual(), s);
        let h = Character::h(3, 2);
        // dual of h_a is s_(a,a)
        assert_eq!(h.dual(), Character::schur2(3, 2, 2));
        let f = h.frobenius(4).unwrap();
        assert_eq!(f.highest_weight().unwrap(), &w(&[8, 0, 0]));
        assert_eq!(f.dim_eval(), h.dim_eval());
        assert!(h.frobenius(6).is_err());
        assert_eq!(h.frobenius(1).unwrap(), h);
    }

    #[test]
    fn ring_errors() {
        let a = Character::h(3, 1);
        let b = Character::h(4, 1);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::RankMismatch { expected: 3, found: 4 })
        );
        assert!(a.checked_mul(&b).is_err());
        assert_eq!(Character::zero(3).highest_weight(), Err(Error::ZeroCharacter));
        assert!(Weight::normalize(&[1]).is_err());
    }

    #[test]
    fn dominance_order() {
        assert!(w(&[2, 1, 0]).dominates(&w(&[0, 0, 0])));
        assert!(!w(&[0, 0, 0]).dominates(&w(&[2, 1, 0])));
        assert!(w(&[2, 1, 0]).dominates(&w(&[1, 2, 0])));
        assert!(!w(&[1, 2, 0]).dominates(&w(&[2, 1, 0])));
        // incomparable: difference not in the root lattice
        assert!(!w(&[1, 0, 0]).dominates(&w(&[0, 0, 0])));
        assert!(w(&[1, 1, 0]).dominates(&w(&[1, 1, 0])));
    }

    #[test]
    fn serialization_round_trip() {
        let mut c = Character::schur2(3, 3, 1).negate();
        let huge = BigInt::from_str("123456789012345678901234567890").unwrap();
        c = &c + &Character::monomial(w(&[9, 4, 0]), huge);
        let json = c.to_json();
        let back = Character::from_json(3, &json).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), json);
        // descending order in the serialized form
        let terms: Vec<JsonTerm> = serde_json::from_str(&json).unwrap();
        assert_eq!(terms[0].exp, vec![9, 4, 0]);
        // wrong exponent length rejected
        assert!(Character::from_json(4, &json).is_err());
        // malformed input rejected with a parse error
        assert!(matches!(
            Character::from_json(3, "[{\"exp\": [1,0,0], \"coeff\": 1.5}]"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(Character::from_json(3, "not json"), Err(Error::Parse(_))));
        // non-normalized input exponents are normalized and merged
        let merged =
            Character::from_json(3, "[{\"exp\":[2,1,1],\"coeff\":4},{\"exp\":[1,0,0],\"coeff\":-3}]")
                .unwrap();
        assert_eq!(merged.coeff(&w(&[1, 0, 0])), big(1));
    }

    #[test]
    fn display_format() {
        assert_eq!(Character::zero(3).to_string(), "0");
        assert_eq!(Character::one(3).to_string(), "1");
        let c = Character::schur2(3, 1, 0);
        assert_eq!(c.to_string(), "x^[1, 0, 0] + x^[0, 1, 0] + x^[-1, -1, 0]");
        let d = Character::one(3).negate();
        assert_eq!(d.to_string(), "-1");
    }
}
