//! Character formulas for the cohomology of twisted divided powers
//! `D^d R(e-1)` on `P(V)` with `dim V = 3`, and their translation to
//! line bundles on the incidence variety.
//!
//! The twist convention is fixed here once and used everywhere:
//! `h^i(d, e) = [H^i(P, D^d R(e-1))]`.  Operations that take the raw
//! sheaf twist `e` instead carry `_twist` in their argument name and say
//! so in their docs.  The two sides are linked by `h0(d, e) = h1(e, d)`.
//!
//! [`CharacterTable`] implements the characteristic-`p` recursion for
//! `h1`: with `(t, k)` the leading term of `d` base `p` and `q = p^k`,
//!
//! * `e > (t+1)q - 2`: `h1(d, e) = 0`;
//! * `e < tq`: `h1(d, e) = s_(d-1, e)`;
//! * otherwise `h1(d, e) = F^q(h_t^∨) h1(d-tq, e-tq)
//!   + F^q(h_{t-1}^∨) s^(q)_(e-1+(2-t)q, d-tq)
//!   + F^q(h_{t-2}^∨) (h0((t+1)q-d-2, (t+1)q-e-2))^∨`
//!
//! with `h1(0, e) = 0` and `h_j = 0` for `j < 0`, so the third summand
//! dies on its own when `t = 1`, and `h0(-1, -) = 0` because `D^{-1} = 0`.
//! Everything else in this module is a closed form: the Euler
//! characteristic, the `p <= d < 2p` truncated-Schur formula, the corner
//! values `F^{p^k}(s_(t-1,t-1))`, the highest weight of `h1`, and the
//! `p = 2` closed form built from nim characters.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::char_ring::{Character, Weight};
use crate::padic::{is_prime, leading_term, truncations};
use crate::{Error, Result};

/// Memoized `h0`/`h1` recursion for `n = 3` at a fixed prime `p`.
///
/// The memo table is the only shared state; it sits behind a mutex, so a
/// table can be shared across threads freely.  Returned characters are
/// plain values.
pub struct CharacterTable {
    p: u64,
    memo: Mutex<HashMap<(i64, i64), Character>>,
}

/// Result of a line-bundle character request: either the exact character
/// (possibly zero) or an explicit refusal for the cases with no formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleChar {
    Computed(Character),
    /// Global sections with both twists non-negative (and their Serre
    /// duals): no character formula is in scope, only the vanishing
    /// pattern.  Refusing beats guessing.
    NotComputable,
}

impl BundleChar {
    /// The character, when one was computed.
    pub fn character(&self) -> Option<&Character> {
        match self {
            BundleChar::Computed(c) => Some(c),
            BundleChar::NotComputable => None,
        }
    }
}

/// Corner evaluation: the sharp non-vanishing point for `d = t p^k`
/// together with the line bundle it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerData {
    /// `d = t p^k`.
    pub d: i64,
    /// `a = (t+n-2) p^k - n + 1`, one below the regularity bound.
    pub a: i64,
    /// `b = -d - n + 1`.
    pub b: i64,
    /// `[H^1(P, D^d R(a-1))] = F^{p^k}(s_(t-1, t-1))`.
    pub character: Character,
}

fn check_pair(d: i64, e: i64) -> Result<()> {
    if d < 0 || e < 0 {
        return Err(Error::Domain(format!("need d, e >= 0, got (d, e) = ({d}, {e})")));
    }
    Ok(())
}

impl CharacterTable {
    /// Builds a table for characteristic `p` (must be prime).
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CharacterTable { p, memo: Mutex::new(HashMap::new()) })
    }

    /// The characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// `h1(d, e) = [H^1(P, D^d R(e-1))]` for `n = 3`, by the recursion.
    pub fn h1(&self, d: i64, e: i64) -> Result<Character> {
        check_pair(d, e)?;
        self.h1_inner(d, e)
    }

    /// `h0(d, e) = [H^0(P, D^d R(e-1))] = h1(e, d)` for `n = 3`.
    pub fn h0(&self, d: i64, e: i64) -> Result<Character> {
        check_pair(d, e)?;
        self.h1_inner(e, d)
    }

    fn h1_inner(&self, d: i64, e: i64) -> Result<Character> {
        debug_assert!(d >= 0 && e >= 0);
        if d == 0 {
            return Ok(Character::zero(3));
        }
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&(d, e)) {
            return Ok(hit.clone());
        }
        let lead = leading_term(d as u64, self.p)?;
        let q = lead.q as i64;
        let t = lead.t as i64;
        let result = if e > (t + 1) * q - 2 {
            Character::zero(3)
        } else if e < t * q {
            Character::schur2(3, d - 1, e)
        } else {
            // frobenius-twisted dual h factors; h(j < 0) = 0 retires the
            // third summand when t = 1
            let fro = |j: i64| Character::h(3, j).dual().frobenius(lead.q);
            let mut acc = fro(t)?.checked_mul(&self.h1_inner(d - t * q, e - t * q)?)?;
            let trunc =
                Character::schur2_trunc(3, lead.q, e - 1 + (2 - t) * q, d - t * q)?;
            acc = acc.checked_add(&fro(t - 1)?.checked_mul(&trunc)?)?;
            let third = fro(t - 2)?;
            if !third.is_zero() {
                let dual_h0 = self
                    .h0_boundary((t + 1) * q - d - 2, (t + 1) * q - e - 2)?
                    .dual();
                acc = acc.checked_add(&third.checked_mul(&dual_h0)?)?;
            }
            acc
        };
        self.memo.lock().expect("memo lock").insert((d, e), result.clone());
        Ok(result)
    }

    // h0(d, e) at the recursion boundary, where d may reach -1 (D^{-1} = 0).
    fn h0_boundary(&self, d: i64, e: i64) -> Result<Character> {
        if d < 0 {
            return Ok(Character::zero(3));
        }
        debug_assert!(e >= 0, "boundary twist went negative");
        self.h1_inner(e, d)
    }

    /// Exact character of `H^i(X, O(a, b))` on the incidence variety for
    /// `n = 3`, for every `(a, b, i)`.
    ///
    /// The nonzero middle-degree groups are cohomology on `P(V)`:
    /// `H^1(X, O(a, b)) = H^0(P, D^d R(a-1))` and
    /// `H^2(X, O(a, b)) = H^1(P, D^d R(a-1))` with `d = -b - 2`, valid for
    /// `a >= 0`, `b <= -2`; the swap `(a, b) -> (b, a)` dualizes characters
    /// and Serre duality pairs `H^i(a, b)` with `H^{3-i}(-2-a, -2-b)`.
    /// Global-section characters (both twists non-negative, degree 0, and
    /// their Serre duals in degree 3) have no formula here and come back
    /// [`BundleChar::NotComputable`].
    pub fn line_bundle_character(&self, a: i64, b: i64, i: i64) -> Result<BundleChar> {
        let computed = |c: Character| Ok(BundleChar::Computed(c));
        if !(0..=3).contains(&i) {
            return computed(Character::zero(3));
        }
        if a == -1 || b == -1 {
            return computed(Character::zero(3));
        }
        if a >= 0 && b >= 0 {
            return if i == 0 {
                Ok(BundleChar::NotComputable)
            } else {
                computed(Character::zero(3))
            };
        }
        if a <= -2 && b <= -2 {
            // Serre-dual to a global-sections case
            return if i == 3 {
                Ok(BundleChar::NotComputable)
            } else {
                computed(Character::zero(3))
            };
        }
        // exactly one negative twist remains; swapping dualizes
        let (x, y, dualize) = if b <= -2 { (a, b, false) } else { (b, a, true) };
        let d = -y - 2;
        let ch = match i {
            1 => self.h1_inner(x, d)?,
            2 => self.h1_inner(d, x)?,
            _ => Character::zero(3),
        };
        computed(if dualize { ch.dual() } else { ch })
    }
}

/// SL-equivariant Euler characteristic `χ(d, e) = h0(d, e) - h1(d, e)`
/// for `n = 3`: equals `s_(e-1, d)` when `e > d`, `-s_(d-1, e)` when
/// `d > e`, and `0` when `d = e`; the single two-row expression
/// `h_{e-1} h_d - h_e h_{d-1}` covers all three cases.
pub fn euler_char(n: usize, d: i64, e: i64) -> Result<Character> {
    if n != 3 {
        return Err(Error::RankMismatch { expected: 3, found: n });
    }
    check_pair(d, e)?;
    Ok(Character::schur2(3, e - 1, d))
}

/// `[H^1(P, D^d R(e_twist))]` for `p <= d < 2p` and `e_twist >= d - 1`,
/// any rank: the truncated two-row Schur `s^(p)_(e_twist + p, d - p)`.
///
/// `e_twist` is the raw sheaf twist, not the shifted convention.
pub fn char_small_d(n: usize, p: u64, d: i64, e_twist: i64) -> Result<Character> {
    if n < 3 {
        return Err(Error::Domain(format!("incidence setting needs n >= 3, got n = {n}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pi = p as i64;
    if d < pi || d >= 2 * pi {
        return Err(Error::Domain(format!("need p <= d < 2p, got d = {d}, p = {p}")));
    }
    if e_twist < d - 1 {
        return Err(Error::Domain(format!(
            "need e_twist >= d - 1 = {}, got {e_twist}",
            d - 1
        )));
    }
    Character::schur2_trunc(n, p, e_twist + pi, d - pi)
}

/// The corner value: for `d = t p^k` the last non-vanishing `H^1` along
/// the regularity edge sits at twist `a - 1` with
/// `a = (t+n-2) p^k - n + 1`, and its character is the Frobenius twist
/// `F^{p^k}(s_(t-1, t-1))`.
pub fn corner_char(n: usize, p: u64, t: u64, k: u32) -> Result<CornerData> {
    if n < 3 {
        return Err(Error::Domain(format!("incidence setting needs n >= 3, got n = {n}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if t < 1 || t >= p {
        return Err(Error::Domain(format!("need 1 <= t < p, got t = {t}, p = {p}")));
    }
    let q = p
        .checked_pow(k)
        .and_then(|q| i64::try_from(q).ok())
        .ok_or_else(|| Error::Domain(format!("p^k overflows: p = {p}, k = {k}")))?;
    let ni = n as i64;
    let ti = t as i64;
    let d = ti.checked_mul(q).ok_or_else(|| Error::Domain("t * p^k overflows".into()))?;
    let a = (ti + ni - 2)
        .checked_mul(q)
        .and_then(|x| x.checked_add(1 - ni))
        .ok_or_else(|| Error::Domain("corner twist overflows".into()))?;
    let b = -d - ni + 1;
    let character = Character::schur2(n, ti - 1, ti - 1).frobenius(q as u64)?;
    Ok(CornerData { d, a, b, character })
}

/// Highest weight of `h1(d, e)` for `n = 3`, without computing the
/// character.
///
/// Errors with [`Error::ZeroCharacter`] when `h1(d, e) = 0` (per the
/// vanishing classification).  For `d > e` the weight is `(d-1, e, 0)`.
/// For `d <= e` take the minimal `q' = p^s` such that `d = m q' + d'` and
/// `e = m q' + e'` share the digits above position `s` (`p` does not
/// divide `m`) and both remainders are at most `q' - 2`; the weight is
/// `(d - e' - 2, e - 2e' - 2, 0)`.  Such `q'` must exist whenever
/// `h1(d, e)` is nonzero; a failed scan is reported as an internal error
/// rather than silently falling back.
pub fn hw_h1(d: i64, e: i64, p: u64) -> Result<Weight> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_pair(d, e)?;
    if d == 0 {
        return Err(Error::ZeroCharacter);
    }
    let lead = leading_term(d as u64, p)?;
    let q = lead.q as i64;
    let t = lead.t as i64;
    if e > (t + 1) * q - 2 {
        return Err(Error::ZeroCharacter);
    }
    if d > e {
        return Weight::normalize(&[d - 1, e, 0]);
    }
    let pi = p as i64;
    let mut qp = 1i64;
    while qp <= e {
        let (m, dr) = (d / qp, d % qp);
        let er = e % qp;
        if m == e / qp && m % pi != 0 && dr <= qp - 2 && er <= qp - 2 {
            return Weight::normalize(&[d - er - 2, e - 2 * er - 2, 0]);
        }
        qp *= pi;
    }
    Err(Error::Internal(format!(
        "no admissible scale q' = p^s for (d, e) = ({d}, {e}), p = {p}; \
         contradicts the vanishing classification"
    )))
}

/// Closed form for `h1(d, e)` at `p = 2`, from binary truncations: for
/// `2^k <= d <= e <= 2^{k+1} - 2`,
/// `h1(d, e) = Σ_{i in I} F^{2^{i+1}}(N_{l_i(d)}) s^(2^i)_(r_i(e) - 1 + 2^{i+1}, r_i(d))`
/// where `I` collects the positions `1 <= i <= k` with `d_i = e_i = 1`,
/// equal left truncations, and `r_i(e) <= 2^i - 2`.  The top position
/// `i = k` always qualifies.
pub fn h1_p2_closed(d: i64, e: i64, k: u32) -> Result<Character> {
    if k < 1 || k > 61 {
        return Err(Error::Domain(format!("need 1 <= k <= 61, got k = {k}")));
    }
    let lo = 1i64 << k;
    let hi = 2 * lo - 2;
    if !(lo <= d && d <= e && e <= hi) {
        return Err(Error::Domain(format!(
            "need 2^k <= d <= e <= 2^(k+1) - 2, got (d, e) = ({d}, {e}), k = {k}"
        )));
    }
    let mut acc = Character::zero(3);
    let mut top_included = false;
    for i in 1..=k {
        let td = truncations(d as u64, i, k)?;
        let te = truncations(e as u64, i, k)?;
        let cap = (1i64 << i) - 2;
        if td.bit != 1 || te.bit != 1 || td.left != te.left || te.right as i64 > cap {
            continue;
        }
        if i == k {
            top_included = true;
        }
        let nim = Character::nim(3, td.left as i64)?.frobenius(1 << (i + 1))?;
        let trunc = Character::schur2_trunc(
            3,
            1 << i,
            te.right as i64 - 1 + (1i64 << (i + 1)),
            td.right as i64,
        )?;
        acc = acc.checked_add(&nim.checked_mul(&trunc)?)?;
    }
    if !top_included {
        // 2^k <= d, e <= 2^{k+1}-2 forces the top position to qualify
        return Err(Error::Internal(format!(
            "top binary position excluded for (d, e) = ({d}, {e}), k = {k}"
        )));
    }
    Ok(acc)
}
