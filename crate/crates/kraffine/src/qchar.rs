//! q-characters from tableaux: single-box monomials per type, column and
//! rectangle evaluation, and exact enumeration of KR q-characters in type A.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::affine_data::{cartan_data, AffineType, Kind};
use crate::error::{Error, Result};
use crate::scalar::QMonomial;

/// Monomial in the variables `Y_{i,a}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YMonomial(BTreeMap<(u32, QMonomial), i64>);

impl YMonomial {
    pub fn one() -> Self {
        YMonomial::default()
    }

    /// `Y_{i,a}^e`; node 0 is the constant 1.
    pub fn y(i: u32, a: QMonomial, e: i64) -> Self {
        let mut m = YMonomial::one();
        m.mul_y(i, a, e);
        m
    }

    fn mul_y(&mut self, i: u32, a: QMonomial, e: i64) {
        if i == 0 || e == 0 {
            return;
        }
        let v = self.0.entry((i, a)).or_insert(0);
        *v += e;
        if *v == 0 {
            self.0.remove(&(i, a));
        }
    }

    /// Sets every `Y_{node,·}` to 1.
    fn kill_node(mut self, node: u32) -> Self {
        self.0.retain(|&(i, _), _| i != node);
        self
    }

    pub fn is_dominant(&self) -> bool {
        self.0.values().all(|&e| e > 0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (u32, QMonomial, i64)> + '_ {
        self.0.iter().map(|(&(i, a), &e)| (i, a, e))
    }

    pub fn inv(&self) -> YMonomial {
        YMonomial(self.0.iter().map(|(&k, &e)| (k, -e)).collect())
    }

    /// Every spectral parameter multiplied by `c`.
    pub fn shifted(&self, c: QMonomial) -> YMonomial {
        YMonomial(self.0.iter().map(|(&(i, a), &e)| ((i, a * c), e)).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .factors()
            .map(|(i, a, e)| json!([i, a, e]))
            .collect::<Vec<_>>())
    }
}

impl Mul for &YMonomial {
    type Output = YMonomial;
    fn mul(self, rhs: &YMonomial) -> YMonomial {
        let mut out = self.clone();
        for (&(i, a), &e) in &rhs.0 {
            out.mul_y(i, a, e);
        }
        out
    }
}

impl Mul for YMonomial {
    type Output = YMonomial;
    fn mul(self, rhs: YMonomial) -> YMonomial {
        &self * &rhs
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(i, a, e)| {
                if e == 1 {
                    format!("Y[{i},{a}]")
                } else {
                    format!("Y[{i},{a}]^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite `ℤ`-combination of Y-monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QCharacter(BTreeMap<YMonomial, BigInt>);

impl QCharacter {
    pub fn one() -> Self {
        QCharacter::from_monomial(YMonomial::one())
    }

    pub fn from_monomial(m: YMonomial) -> Self {
        let mut c = QCharacter::default();
        c.add(m, BigInt::one());
        c
    }

    pub fn add(&mut self, m: YMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let v = self.0.entry(m.clone()).or_default();
        *v += c;
        if v.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn add_char(&mut self, other: &QCharacter) {
        for (m, c) in &other.0 {
            self.add(m.clone(), c.clone());
        }
    }

    pub fn sub_char(&mut self, other: &QCharacter) {
        for (m, c) in &other.0 {
            self.add(m.clone(), -c.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &BigInt)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shifted(&self, c: QMonomial) -> QCharacter {
        QCharacter(
            self.0
                .iter()
                .map(|(m, v)| (m.shifted(c), v.clone()))
                .collect(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .0
            .iter()
            .map(|(m, c)| json!({"monomial": m.to_json(), "coeff": c.to_string()}))
            .collect::<Vec<_>>())
    }
}

impl Mul for &QCharacter {
    type Output = QCharacter;
    fn mul(self, rhs: &QCharacter) -> QCharacter {
        let mut out = QCharacter::default();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &rhs.0 {
                out.add(m1 * m2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for QCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for QCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn dominant_monomials(chi: &QCharacter) -> Vec<(YMonomial, BigInt)> {
    chi.0
        .iter()
        .filter(|(m, _)| m.is_dominant())
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

pub fn classical_dimension(chi: &QCharacter) -> BigInt {
    chi.0.values().sum()
}

/// Exponent sums per node `1..=nodes`.
pub fn weight(y: &YMonomial, nodes: u32) -> Vec<i64> {
    let mut w = vec![0; nodes as usize];
    for (i, _, e) in y.factors() {
        if (1..=nodes).contains(&i) {
            w[i as usize - 1] += e;
        }
    }
    w
}

/// A tableau letter: `i`, `0` or `ī` (written `b i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Num(u32),
    Zero,
    Bar(u32),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Num(i) => write!(f, "{i}"),
            Letter::Zero => f.write_str("0"),
            Letter::Bar(i) => write!(f, "b{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Width {
    Full,
    Half,
}

/// The letters of the type's crystal `B(ϖ₁)` (`B(ϖ₂)` for G₂) in increasing
/// order; letters sharing a rank are incomparable.
fn alphabet(kind: Kind) -> Vec<(Letter, u32)> {
    use Letter::*;
    let chain = |n: u32, zero: bool| {
        let mut v: Vec<Letter> = (1..=n).map(Num).collect();
        if zero {
            v.push(Zero);
        }
        v.extend((1..=n).rev().map(Bar));
        v.into_iter()
            .enumerate()
            .map(|(r, l)| (l, r as u32))
            .collect::<Vec<_>>()
    };
    let d_chain = |n: u32| {
        let mut v: Vec<(Letter, u32)> = (1..n).map(|i| (Num(i), i - 1)).collect();
        v.push((Num(n), n - 1));
        v.push((Bar(n), n - 1));
        v.extend(
            (1..n)
                .rev()
                .enumerate()
                .map(|(j, i)| (Bar(i), n + j as u32)),
        );
        v
    };
    match kind {
        Kind::A1 { n } => (1..=n as u32).map(|i| (Num(i), i - 1)).collect(),
        Kind::B1 { n } => chain(n as u32, true),
        Kind::C1 { n } => chain(n as u32, false),
        Kind::D1 { n } => d_chain(n as u32),
        Kind::G2 => chain(3, true),
        Kind::D2 { n } => d_chain(n as u32 + 1),
        Kind::D43 => chain(4, false),
        Kind::A2Odd { .. } | Kind::A2Even { .. } => Vec::new(),
    }
}

fn rank_of(kind: Kind, l: Letter) -> Option<u32> {
    alphabet(kind)
        .into_iter()
        .find(|&(x, _)| x == l)
        .map(|(_, r)| r)
}

fn invalid(ty: AffineType, l: impl fmt::Display) -> Error {
    Error::InvalidLetter {
        ty: ty.to_string(),
        letter: l.to_string(),
    }
}

/// `q̃`: `q_s` for B, `q_t` for G₂, `q` otherwise.
fn qtilde(kind: Kind) -> QMonomial {
    match kind {
        Kind::B1 { .. } => QMonomial::qs(),
        Kind::G2 => QMonomial::qt(),
        _ => QMonomial::q(),
    }
}

/// The single-box monomial at spectral parameter `a`.
pub fn box_monomial(
    ty: AffineType,
    letter: Letter,
    a: QMonomial,
    width: Width,
) -> Result<YMonomial> {
    use Letter::*;
    let kind = ty.kind()?;
    if rank_of(kind, letter).is_none() {
        return Err(invalid(ty, letter));
    }
    let y = YMonomial::y;
    let q = QMonomial::q();
    let qs = QMonomial::qs();
    let qt = QMonomial::qt();
    let m = match (kind, width) {
        (Kind::A1 { n }, Width::Full) => {
            let Num(i) = letter else { unreachable!() };
            (y(i - 1, a * q.pow(i as i64), -1) * y(i, a * q.pow(i as i64 - 1), 1))
                .kill_node(n as u32)
        }
        (Kind::B1 { n }, Width::Full) => {
            let n = n as u32;
            let p = |e: i64| a * qs.pow(e);
            let n2 = 2 * n as i64;
            match letter {
                Num(i) if i < n => y(i - 1, p(2 * i as i64), -1) * y(i, p(2 * (i as i64 - 1)), 1),
                Num(_) => y(n - 1, p(n2), -1) * y(n, p(n2 - 3), 1) * y(n, p(n2 - 1), 1),
                Zero => y(n, p(n2 + 1), -1) * y(n, p(n2 - 3), 1),
                Bar(i) if i == n => {
                    y(n - 1, p(n2 - 2), 1) * y(n, p(n2 - 1), -1) * y(n, p(n2 + 1), -1)
                }
                Bar(i) => {
                    let i = i as i64;
                    y(i as u32 - 1, p(2 * (n2 - i - 1)), 1) * y(i as u32, p(2 * (n2 - i)), -1)
                }
            }
        }
        (Kind::B1 { n }, Width::Half) => {
            let n = n as u32;
            let p = |e: i64| a * qs.pow(e);
            let nn = n as i64;
            match letter {
                Num(i) if i < n => y(i - 1, p(i as i64 - 1), -1) * y(i, p(i as i64 - 2), 1),
                Num(_) => y(n, p(nn - 1), -1),
                Zero => y(n, p(nn), 1),
                Bar(i) if i == n => y(n, p(nn + 2), -2),
                Bar(_) => YMonomial::one(),
            }
        }
        (Kind::C1 { n }, Width::Full) => {
            let p = |e: i64| a * qs.pow(e);
            match letter {
                Num(i) => y(i - 1, p(i as i64), -1) * y(i, p(i as i64 - 1), 1),
                Bar(i) => {
                    let ii = i as i64;
                    y(i - 1, p(2 * n - ii + 2), 1) * y(i, p(2 * n - ii + 3), -1)
                }
                Zero => unreachable!(),
            }
        }
        (Kind::D1 { n }, Width::Full) => {
            let (nu, n) = (n as u32, n);
            let p = |e: i64| a * q.pow(e);
            match letter {
                Num(i) if i + 1 < nu => y(i - 1, p(i as i64), -1) * y(i, p(i as i64 - 1), 1),
                Num(i) if i + 1 == nu => {
                    y(nu - 2, p(n - 1), -1) * y(nu - 1, p(n - 2), 1) * y(nu, p(n - 2), 1)
                }
                Num(_) => y(nu - 1, p(n), -1) * y(nu, p(n - 2), 1),
                Bar(i) if i == nu => y(nu - 1, p(n - 2), 1) * y(nu, p(n), -1),
                Bar(i) if i + 1 == nu => {
                    y(nu - 2, p(n - 1), 1) * y(nu - 1, p(n), -1) * y(nu, p(n), -1)
                }
                Bar(i) => {
                    let ii = i as i64;
                    y(i - 1, p(2 * n - ii - 2), 1) * y(i, p(2 * n - ii - 1), -1)
                }
                Zero => unreachable!(),
            }
        }
        (Kind::D1 { n }, Width::Half) => {
            let (nu, n) = (n as u32, n);
            let p = |e: i64| a * q.pow(e);
            match letter {
                Num(i) if i + 1 < nu => y(i - 1, p(i as i64 - 1), -1) * y(i, p(i as i64 - 2), 1),
                Num(i) if i + 1 == nu => y(nu - 2, p(n - 2), -1),
                Num(_) => y(nu, p(n - 1), 1),
                Bar(i) if i == nu => y(nu - 1, p(n - 1), 1),
                Bar(i) if i + 1 == nu => y(nu - 1, p(n + 1), -1) * y(nu, p(n + 1), -1),
                Bar(_) => YMonomial::one(),
                Zero => unreachable!(),
            }
        }
        (Kind::G2, Width::Full) => {
            let p = |e: i64| a * qt.pow(e);
            match letter {
                Num(1) => y(2, a, 1),
                Num(2) => y(1, p(1), 1) * y(2, p(2), -1),
                Num(_) => y(1, p(7), -1) * y(2, p(4), 1) * y(2, p(6), 1),
                Zero => y(2, p(4), 1) * y(2, p(8), -1),
                Bar(3) => y(1, p(5), 1) * y(2, p(6), -1) * y(2, p(8), -1),
                Bar(2) => y(1, p(12), -1) * y(2, p(10), 1),
                Bar(_) => y(2, p(12), -1),
            }
        }
        (Kind::D2 { n }, Width::Full) => {
            let (nu, n) = (n as u32, n);
            let b = a.square_roots()?[0];
            let p = |e: i64| a * q.pow(e);
            let pb = |e: i64| b * q.pow(e);
            match letter {
                Num(i) if i < nu => y(i - 1, p(2 * i as i64), -1) * y(i, p(2 * (i as i64 - 1)), 1),
                Num(i) if i == nu => {
                    y(nu - 1, p(n), -1) * y(nu, pb(n - 1), 1) * y(nu, -pb(n - 1), 1)
                }
                Num(_) => y(nu, pb(n + 1), -1) * y(nu, -pb(n - 1), 1),
                Bar(i) if i == nu + 1 => y(nu, pb(n - 1), 1) * y(nu, -pb(n + 1), -1),
                Bar(i) if i == nu => {
                    y(nu - 1, p(2 * n), 1) * y(nu, pb(n + 1), -1) * y(nu, -pb(n + 1), -1)
                }
                Bar(i) => {
                    let ii = i as i64;
                    y(i - 1, p(2 * (2 * n - ii)), 1) * y(i, p(2 * (2 * n + 1 - ii)), -1)
                }
                Zero => unreachable!(),
            }
        }
        (Kind::D2 { n }, Width::Half) => {
            let (nu, n) = (n as u32, n);
            let a2 = a.pow(2);
            let p2 = |e: i64| a2 * q.pow(e);
            let p = |e: i64| a * q.pow(e);
            match letter {
                Num(i) if i < nu => {
                    y(i - 1, p2(2 * (i as i64 - 1)), -1) * y(i, p2(2 * (i as i64 - 2)), 1)
                }
                Num(i) if i == nu => y(nu - 1, p2(2 * (n - 2)), -1),
                Num(_) => y(nu, p(n), 1),
                Bar(i) if i == nu + 1 => y(nu, -p(n), 1),
                Bar(i) if i == nu => y(nu, p(n + 2), -1) * y(nu, -p(n + 2), -1),
                Bar(_) => YMonomial::one(),
                Zero => unreachable!(),
            }
        }
        (Kind::D43, Width::Full) => {
            let w = QMonomial::omega();
            let w2 = w.pow(2);
            let a3 = a.pow(3);
            let p = |e: i64| a * q.pow(e);
            let p3 = |e: i64| a3 * q.pow(e);
            match letter {
                Num(1) => y(1, a, 1),
                Num(2) => y(1, p(2), -1) * y(2, p3(3), 1),
                Num(3) => y(2, p3(9), -1) * y(1, w * p(2), 1) * y(1, w2 * p(2), 1),
                Num(_) => y(1, w * p(2), 1) * y(1, w2 * p(4), -1),
                Bar(4) => y(1, w2 * p(2), 1) * y(1, w * p(4), -1),
                Bar(3) => y(1, w * p(4), -1) * y(1, w2 * p(4), -1) * y(2, p3(9), 1),
                Bar(2) => y(1, p(4), 1) * y(2, p3(15), -1),
                Bar(_) => y(1, p(6), -1),
                Zero => unreachable!(),
            }
        }
        _ => return Err(invalid(ty, format!("h:{letter}"))),
    };
    Ok(m)
}

/// `χ_q(C_a) = ∏_h box(i_h)_{a q̃^{k+1-2h}}`.
pub fn column_qchar(
    ty: AffineType,
    column: &[Letter],
    width: Width,
    a: QMonomial,
) -> Result<YMonomial> {
    let qt = qtilde(ty.kind()?);
    let k = column.len() as i64;
    let mut out = YMonomial::one();
    for (h, &l) in column.iter().enumerate() {
        let h = h as i64 + 1;
        out = out * box_monomial(ty, l, a * qt.pow(k + 1 - 2 * h), width)?;
    }
    Ok(out)
}

/// A rectangular tableau stored by columns, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub columns: Vec<Vec<Letter>>,
    pub width: Width,
}

impl Tableau {
    pub fn height(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    /// Strictly increasing columns, weakly increasing rows in the type's order.
    pub fn is_semistandard(&self, ty: AffineType) -> Result<bool> {
        let kind = ty.kind()?;
        let r = |l: Letter| rank_of(kind, l).ok_or_else(|| invalid(ty, l));
        for c in &self.columns {
            for w in c.windows(2) {
                if r(w[0])? >= r(w[1])? {
                    return Ok(false);
                }
            }
        }
        for w in self.columns.windows(2) {
            for (&x, &y) in w[0].iter().zip(&w[1]) {
                let (rx, ry) = (r(x)?, r(y)?);
                if rx > ry || (rx == ry && x != y) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `,`; within a row letters are digits, `0`, or `b` + digit,
    /// optionally separated by spaces. A leading `h:` makes every column half width.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::MalformedTableau(format!("{s}: {m}"));
        let (width, body) = match s.trim().strip_prefix("h:") {
            Some(rest) => (Width::Half, rest),
            None => (Width::Full, s.trim()),
        };
        let mut rows: Vec<Vec<Letter>> = Vec::new();
        for row in body.split(',') {
            let mut letters = Vec::new();
            let mut chars = row.chars().filter(|c| !c.is_whitespace()).peekable();
            while let Some(c) = chars.next() {
                let bar = c == 'b';
                let d = if bar {
                    chars.next().ok_or_else(|| bad("dangling `b`"))?
                } else {
                    c
                };
                let v = d.to_digit(10).ok_or_else(|| bad("unexpected character"))?;
                letters.push(match (bar, v) {
                    (false, 0) => Letter::Zero,
                    (false, v) => Letter::Num(v),
                    (true, 0) => return Err(bad("`b0` is not a letter")),
                    (true, v) => Letter::Bar(v),
                });
            }
            rows.push(letters);
        }
        let w = rows[0].len();
        if w == 0 || rows.iter().any(|r| r.len() != w) {
            return Err(bad("rows must be nonempty and of equal length"));
        }
        let columns = (0..w)
            .map(|j| rows.iter().map(|r| r[j]).collect())
            .collect();
        Ok(Tableau { columns, width })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.width == Width::Half {
            f.write_str("h:")?;
        }
        let rows: Vec<String> = (0..self.height())
            .map(|h| {
                self.columns
                    .iter()
                    .map(|c| c[h].to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(","))
    }
}

/// `χ_q(T_a) = ∏_j χ_q(C^{(j)}_{a q^{1-m+2j}})`, taken as written.
pub fn tableau_qchar(ty: AffineType, t: &Tableau, a: QMonomial) -> Result<YMonomial> {
    let m = t.columns.len() as i64;
    let q = QMonomial::q();
    let mut out = YMonomial::one();
    for (j, c) in t.columns.iter().enumerate() {
        let j = j as i64 + 1;
        out = out * column_qchar(ty, c, t.width, a * q.pow(1 - m + 2 * j))?;
    }
    Ok(out)
}

/// `∏_{j=1}^m Y_{k, a(-q̌_k)^{m+1-2j}}`.
pub fn kr_highest_monomial(ty: AffineType, k: u32, m: u32, a: QMonomial) -> Result<YMonomial> {
    ty.check_node(k)?;
    let cd = cartan_data(ty);
    let base = -cd.qcheck_k(k);
    let m = m as i64;
    Ok((1..=m).fold(YMonomial::one(), |acc, j| {
        acc * YMonomial::y(k, a * base.pow(m + 1 - 2 * j), 1)
    }))
}

/// The spectral offset `c` making the all-`[1..k]` tableau at `a c` equal the highest monomial at `a`.
pub fn calibration(ty: AffineType, k: u32, m: u32) -> Result<QMonomial> {
    let column: Vec<Letter> = (1..=k).map(Letter::Num).collect();
    let t = Tableau {
        columns: vec![column; m as usize],
        width: Width::Full,
    };
    let raw = tableau_qchar(ty, &t, QMonomial::ONE)?;
    let want = kr_highest_monomial(ty, k, m, QMonomial::ONE)?;
    // Both are products of Y_{k,·}; compare the smallest spectral parameters.
    let lo = |y: &YMonomial| {
        y.factors()
            .map(|(_, a, _)| a)
            .min()
            .unwrap_or(QMonomial::ONE)
    };
    let c = lo(&want) / lo(&raw);
    if raw.shifted(c) != want {
        return Err(Error::InvalidInput(format!(
            "no uniform calibration for {ty} V({k}^{m})"
        )));
    }
    Ok(c)
}

/// All `k × m` semistandard tableaux with entries `1..=n`, as column index sequences.
fn rectangles(n: u32, k: u32, m: u32, cap: usize) -> Result<(Vec<Vec<u32>>, Vec<Vec<usize>>)> {
    use itertools::Itertools;
    let cols: Vec<Vec<u32>> = (1..=n).combinations(k as usize).collect();
    let le = |a: &Vec<u32>, b: &Vec<u32>| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        cols: &[Vec<u32>],
        m: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
        le: &dyn Fn(&Vec<u32>, &Vec<u32>) -> bool,
    ) -> Result<()> {
        if stack.len() == m {
            if out.len() >= cap {
                return Err(Error::EnumerationCapExceeded { cap });
            }
            out.push(stack.clone());
            return Ok(());
        }
        let start = stack.last().copied().unwrap_or(0);
        for c in start..cols.len() {
            if stack.last().is_none_or(|&p| le(&cols[p], &cols[c])) {
                stack.push(c);
                rec(cols, m, stack, out, cap, le)?;
                stack.pop();
            }
        }
        Ok(())
    }
    rec(&cols, m as usize, &mut stack, &mut out, cap, &le)?;
    Ok((cols, out))
}

/// `χ_q(V(k^m)_a)` for `A_{n-1}^{(1)}`, summed over all rectangular semistandard tableaux
/// and calibrated so that the highest monomial is `kr_highest_monomial(k, m, a)`.
pub fn kr_qcharacter_type_a(
    n: u32,
    k: u32,
    m: u32,
    a: QMonomial,
    cap: usize,
) -> Result<QCharacter> {
    let ty = AffineType::new(crate::affine_data::Family::A, n - 1, 1)?;
    ty.check_node(k)?;
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let c = calibration(ty, k, m)?;
    let (cols, tabs) = rectangles(n, k, m, cap)?;
    let q = QMonomial::q();
    let mi = m as i64;
    // column monomials per (column, position)
    let mut cache: Vec<Vec<YMonomial>> = Vec::with_capacity(cols.len());
    for col in &cols {
        let letters: Vec<Letter> = col.iter().map(|&i| Letter::Num(i)).collect();
        let mut row = Vec::with_capacity(m as usize);
        for j in 1..=mi {
            row.push(column_qchar(
                ty,
                &letters,
                Width::Full,
                a * c * q.pow(1 - mi + 2 * j),
            )?);
        }
        cache.push(row);
    }
    let mut chi = QCharacter::default();
    for t in tabs {
        let mono = t
            .iter()
            .enumerate()
            .fold(YMonomial::one(), |acc, (j, &ci)| &acc * &cache[ci][j]);
        chi.add(mono, BigInt::one());
    }
    Ok(chi)
}
