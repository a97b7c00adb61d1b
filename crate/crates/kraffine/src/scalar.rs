//! Exact q-monomials `ζ₂₄^k · q^e` with `e ∈ (1/12)ℤ`.
//!
//! Spectral parameters and denominator roots all live in this group. The
//! exponent is stored in twelfths so that `q_s = q^{1/2}` and `q_t = q^{1/3}`
//! and one further square root stay exact.

use std::fmt;
use std::ops::{Div, Mul, Neg};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `ζ₂₄^zeta · q^{e12/12}`. Ordered by q-exponent first, then by `zeta`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMonomial {
    e12: i64,
    zeta: u8,
}

impl QMonomial {
    pub const ONE: QMonomial = QMonomial { e12: 0, zeta: 0 };

    pub fn from_twelfths(zeta: i64, e12: i64) -> Self {
        QMonomial {
            e12,
            zeta: zeta.rem_euclid(24) as u8,
        }
    }

    /// `ζ₂₄^zeta · q^qexp`; fails if the reduced denominator does not divide 12.
    pub fn new(zeta: i64, qexp: Ratio<i64>) -> Result<Self> {
        if 12 % qexp.denom() != 0 {
            return Err(Error::ExponentOverflow(format!("q^{qexp}")));
        }
        Ok(Self::from_twelfths(
            zeta,
            qexp.numer() * (12 / qexp.denom()),
        ))
    }

    /// `q^{num/den}`; panics if `den` does not divide 12.
    pub fn q_pow(num: i64, den: i64) -> Self {
        assert!(
            den > 0 && 12 % den == 0,
            "denominator {den} does not divide 12"
        );
        Self::from_twelfths(0, num * (12 / den))
    }

    pub fn q() -> Self {
        Self::q_pow(1, 1)
    }
    pub fn neg_q() -> Self {
        -Self::q()
    }
    pub fn qs() -> Self {
        Self::q_pow(1, 2)
    }
    pub fn qt() -> Self {
        Self::q_pow(1, 3)
    }
    pub fn root_of_unity(k: i64) -> Self {
        Self::from_twelfths(k, 0)
    }
    pub fn minus_one() -> Self {
        Self::root_of_unity(12)
    }
    /// `√−1 = ζ₂₄^6`.
    pub fn i() -> Self {
        Self::root_of_unity(6)
    }
    /// `ω = ζ₂₄^8`, a primitive cube root of unity.
    pub fn omega() -> Self {
        Self::root_of_unity(8)
    }

    pub fn zeta(self) -> u8 {
        self.zeta
    }
    pub fn e12(self) -> i64 {
        self.e12
    }
    pub fn qexp(self) -> Ratio<i64> {
        Ratio::new(self.e12, 12)
    }
    pub fn is_unit_root(self) -> bool {
        self.e12 == 0
    }

    pub fn pow(self, n: i64) -> Self {
        Self::from_twelfths(self.zeta as i64 * n, self.e12 * n)
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    /// Bar involution: `q ↦ q^{-1}` and complex conjugation on roots of unity.
    pub fn bar(self) -> Self {
        Self::from_twelfths(-(self.zeta as i64), -self.e12)
    }

    /// The substitution `q ↦ q^k` (roots of unity untouched).
    pub fn subst_q_pow(self, k: i64) -> Self {
        Self::from_twelfths(self.zeta as i64, self.e12 * k)
    }

    /// Both square roots `{r, -r}` with `r` having `zeta < 12`.
    pub fn square_roots(self) -> Result<[QMonomial; 2]> {
        if self.e12 % 2 != 0 {
            return Err(Error::ExponentOverflow(format!("sqrt({self})")));
        }
        if !self.zeta.is_multiple_of(2) {
            return Err(Error::NotRepresentable(format!("sqrt({self})")));
        }
        let r = Self::from_twelfths(self.zeta as i64 / 2, self.e12 / 2);
        Ok([r, -r])
    }

    /// The three cube roots, sorted by `zeta`.
    pub fn cube_roots(self) -> Result<[QMonomial; 3]> {
        if self.e12 % 3 != 0 {
            return Err(Error::ExponentOverflow(format!("cbrt({self})")));
        }
        if !self.zeta.is_multiple_of(3) {
            return Err(Error::NotRepresentable(format!("cbrt({self})")));
        }
        let r = Self::from_twelfths(self.zeta as i64 / 3, self.e12 / 3);
        let w = Self::omega();
        let mut out = [r, r * w, r * w * w];
        out.sort_by_key(|m| m.zeta);
        Ok(out)
    }
}

impl Mul for QMonomial {
    type Output = QMonomial;
    fn mul(self, rhs: QMonomial) -> QMonomial {
        Self::from_twelfths(self.zeta as i64 + rhs.zeta as i64, self.e12 + rhs.e12)
    }
}

impl Div for QMonomial {
    type Output = QMonomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: QMonomial) -> QMonomial {
        self * rhs.inv()
    }
}

impl Neg for QMonomial {
    type Output = QMonomial;
    fn neg(self) -> QMonomial {
        Self::from_twelfths(self.zeta as i64 + 12, self.e12)
    }
}

impl std::iter::Product for QMonomial {
    fn product<I: Iterator<Item = QMonomial>>(iter: I) -> Self {
        iter.fold(QMonomial::ONE, |a, b| a * b)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.zeta {
            0 => {}
            12 => f.write_str("-")?,
            z => write!(f, "z24^{z}*")?,
        }
        let e = self.qexp();
        if *e.denom() == 1 {
            write!(f, "q^{{{}}}", e.numer())
        } else {
            write!(f, "q^{{{}/{}}}", e.numer(), e.denom())
        }
    }
}

impl fmt::Debug for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, whole: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::MalformedScalar(whole.to_string()))
}

impl FromStr for QMonomial {
    type Err = Error;

    /// Accepts `[-][i|w|z24^K][*]q[^E]` where `E` is `P`, `{P}` or `{P/R}`,
    /// and the bare units `1`, `-1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedScalar(s.to_string());
        let mut rest = s.trim();
        let mut zeta: i64 = 0;
        if let Some(r) = rest.strip_prefix('-') {
            zeta += 12;
            rest = r;
        }
        if let Some(r) = rest.strip_prefix("z24^") {
            let end = r.find(['*', 'q']).unwrap_or(r.len());
            zeta += parse_int(&r[..end], s)?;
            rest = &r[end..];
        } else if let Some(r) = rest.strip_prefix('i') {
            zeta += 6;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('w') {
            zeta += 8;
            rest = r;
        }
        let had_star = rest.starts_with('*');
        rest = rest.strip_prefix('*').unwrap_or(rest);
        if rest.is_empty() {
            return if had_star {
                Err(bad())
            } else {
                Ok(Self::from_twelfths(zeta, 0))
            };
        }
        if rest == "1" {
            return Ok(Self::from_twelfths(zeta, 0));
        }
        let rest = rest.strip_prefix('q').ok_or_else(bad)?;
        if rest.is_empty() {
            return Ok(Self::from_twelfths(zeta, 12));
        }
        let exp = rest.strip_prefix('^').ok_or_else(bad)?;
        let exp = match exp.strip_prefix('{') {
            Some(e) => e.strip_suffix('}').ok_or_else(bad)?,
            None => exp,
        };
        let (p, r) = match exp.split_once('/') {
            Some((p, r)) => (parse_int(p, s)?, parse_int(r, s)?),
            None => (parse_int(exp, s)?, 1),
        };
        if r <= 0 {
            return Err(bad());
        }
        Self::new(zeta, Ratio::new(p, r))
    }
}

#[derive(Serialize, Deserialize)]
struct QMonomialJson {
    zeta24: i64,
    qexp: [i64; 2],
}

impl Serialize for QMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let e = self.qexp();
        QMonomialJson {
            zeta24: self.zeta as i64,
            qexp: [*e.numer(), *e.denom()],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = QMonomialJson::deserialize(d)?;
        if j.qexp[1] == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        QMonomial::new(j.zeta24, Ratio::new(j.qexp[0], j.qexp[1])).map_err(serde::de::Error::custom)
    }
}

/// Element of `ℤ[ζ₂₄]` in the power basis `1, ζ, …, ζ⁷`, reduced by
/// `Φ₂₄(x) = x⁸ − x⁴ + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Cyclo24(pub [i64; 8]);

impl Cyclo24 {
    pub fn zero() -> Self {
        Cyclo24([0; 8])
    }

    pub fn root(k: u8) -> Self {
        // ζ^8 = ζ^4 − 1 and ζ^12 = −1.
        let k = k % 24;
        let (sign, k) = if k >= 12 { (-1, k - 12) } else { (1, k) };
        let mut c = [0i64; 8];
        if k < 8 {
            c[k as usize] = sign;
        } else {
            c[(k - 4) as usize] += sign;
            c[(k - 8) as usize] -= sign;
        }
        Cyclo24(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add_assign(&mut self, other: &Cyclo24) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
    }

    pub fn scaled(&self, s: i64) -> Cyclo24 {
        Cyclo24(self.0.map(|c| c * s))
    }

    pub fn mul(&self, other: &Cyclo24) -> Cyclo24 {
        let mut out = Cyclo24::zero();
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                if b != 0 {
                    out.add_assign(&Cyclo24::root((i + j) as u8).scaled(a * b));
                }
            }
        }
        out
    }

    /// If the element is `±ζ^k`, return `k`.
    pub fn as_root(&self) -> Option<u8> {
        (0..24u8).find(|&k| Cyclo24::root(k) == *self)
    }
}

impl fmt::Debug for Cyclo24 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, c)| {
                if k == 0 {
                    format!("{c}")
                } else {
                    format!("{c}*z24^{k}")
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Shorthand for `(-q)^a`.
pub fn neg_q_pow(a: i64) -> QMonomial {
    QMonomial::neg_q().pow(a)
}

/// Shorthand for `(-q_s)^a`.
pub fn neg_qs_pow(a: i64) -> QMonomial {
    (-QMonomial::qs()).pow(a)
}

/// Shorthand for `(-q_t)^a`.
pub fn neg_qt_pow(a: i64) -> QMonomial {
    (-QMonomial::qt()).pow(a)
}

/// Shorthand for `(-1)^a`.
pub fn sign_pow(a: i64) -> QMonomial {
    if a.is_even() {
        QMonomial::ONE
    } else {
        QMonomial::minus_one()
    }
}
