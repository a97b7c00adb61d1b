//! Universal coefficients `a_{l^p,k^m}(z)` as formal products of infinite
//! Pochhammer blocks `(c z; b)_∞`, and the telescoping reduction that decides
//! whether a ratio of such products is a Laurent polynomial.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine_data::{cartan_data, AffineType, Kind};
use crate::denominator::{Denominators, RootMultiset};
use crate::error::{Error, Result};
use crate::scalar::{neg_q_pow, sign_pow, QMonomial};

/// `(arg · z; base)_∞^{mult}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PochhammerBlock {
    pub arg: QMonomial,
    pub base: QMonomial,
    pub mult: i64,
}

/// A product of blocks sharing one base, canonicalized by argument.
#[derive(Clone, PartialEq, Eq)]
pub struct PochhammerProduct {
    base: QMonomial,
    blocks: BTreeMap<QMonomial, i64>,
}

impl PochhammerProduct {
    pub fn unit(base: QMonomial) -> Self {
        PochhammerProduct {
            base,
            blocks: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> QMonomial {
        self.base
    }

    pub fn is_unit(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn push(&mut self, arg: QMonomial, mult: i64) {
        let e = self.blocks.entry(arg).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.blocks.remove(&arg);
        }
    }

    pub fn blocks(&self) -> Vec<PochhammerBlock> {
        self.blocks
            .iter()
            .map(|(&arg, &mult)| PochhammerBlock {
                arg,
                base: self.base,
                mult,
            })
            .collect()
    }

    pub fn block_count(&self) -> (i64, i64) {
        let num = self.blocks.values().filter(|&&m| m > 0).sum();
        let den = -self.blocks.values().filter(|&&m| m < 0).sum::<i64>();
        (num, den)
    }

    fn check_base(&self, other: &PochhammerProduct) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(
                self.base.to_string(),
                other.base.to_string(),
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &PochhammerProduct) -> Result<PochhammerProduct> {
        self.check_base(other)?;
        let mut out = self.clone();
        for (&a, &m) in &other.blocks {
            out.push(a, m);
        }
        Ok(out)
    }

    pub fn inv(&self) -> PochhammerProduct {
        PochhammerProduct {
            base: self.base,
            blocks: self.blocks.iter().map(|(&a, &m)| (a, -m)).collect(),
        }
    }

    /// The product evaluated at `c·z`.
    pub fn at_scaled(&self, c: QMonomial) -> PochhammerProduct {
        PochhammerProduct {
            base: self.base,
            blocks: self.blocks.iter().map(|(&a, &m)| (a * c, m)).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct B {
            arg: QMonomial,
            mult: i64,
        }
        let blocks: Vec<B> = self
            .blocks
            .iter()
            .map(|(&arg, &mult)| B { arg, mult })
            .collect();
        serde_json::json!({ "blocks": blocks, "base": self.base })
    }
}

impl fmt::Display for PochhammerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (a, m) in &self.blocks {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "({a}·z; {})", self.base)?;
            if *m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PochhammerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of linear factors `(z - root)^mult`, with possibly negative multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LinearFactorProduct(BTreeMap<QMonomial, i64>);

impl LinearFactorProduct {
    pub fn push(&mut self, root: QMonomial, mult: i64) {
        let e = self.0.entry(root).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.0.remove(&root);
        }
    }

    pub fn from_roots(r: &RootMultiset, sign: i64) -> Self {
        let mut out = LinearFactorProduct::default();
        for (root, m) in r.factors() {
            out.push(root, sign * m as i64);
        }
        out
    }

    pub fn extend(&mut self, other: &LinearFactorProduct) {
        for (&r, &m) in &other.0 {
            self.push(r, m);
        }
    }

    pub fn factors(&self) -> Vec<(QMonomial, i64)> {
        self.0.iter().map(|(&r, &m)| (r, m)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.values().all(|&m| m > 0)
    }
}

impl fmt::Display for LinearFactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(r, &m)| {
                if m == 1 {
                    format!("(z - {r})")
                } else {
                    format!("(z - {r})^{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(""))
    }
}

impl fmt::Debug for LinearFactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LinearFactorProduct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct F {
            root: QMonomial,
            mult: i64,
        }
        let v: Vec<F> = self
            .0
            .iter()
            .map(|(&root, &mult)| F { root, mult })
            .collect();
        v.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub residual_blocks: PochhammerProduct,
    pub finite_part: LinearFactorProduct,
    pub is_laurent: bool,
}

impl RatioReport {
    pub fn is_unit(&self) -> bool {
        self.residual_blocks.is_unit() && self.finite_part.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "residual_blocks": self.residual_blocks.to_json(),
            "finite_part": self.finite_part,
            "is_laurent": self.is_laurent,
        })
    }
}

/// Integer `k` with `a = b^k · c`, if any.
fn base_log(a: QMonomial, c: QMonomial, b: QMonomial) -> Option<i64> {
    let r = a / c;
    if b.e12() == 0 {
        return None;
    }
    if r.e12() % b.e12() != 0 {
        return None;
    }
    let k = r.e12() / b.e12();
    (b.pow(k) == r).then_some(k)
}

/// Telescopes `num / den` using `(a b^k z; b)_∞ = (a z; b)_∞ / ∏_{j<k} (1 - a b^j z)`.
pub fn reduce_ratio(num: &PochhammerProduct, den: &PochhammerProduct) -> Result<RatioReport> {
    let total = num.mul(&den.inv())?;
    reduce(&total)
}

fn reduce(total: &PochhammerProduct) -> Result<RatioReport> {
    let b = total.base;
    // Group arguments into classes modulo integer powers of the base; the
    // representative of each class is its smallest q-exponent.
    let mut classes: Vec<(QMonomial, Vec<(i64, i64)>)> = Vec::new();
    for (&a, &m) in &total.blocks {
        match classes
            .iter_mut()
            .find_map(|(rep, v)| base_log(a, *rep, b).map(|k| (v, k)))
        {
            Some((v, k)) => v.push((k, m)),
            None => classes.push((a, vec![(0, m)])),
        }
    }
    let mut residual = PochhammerProduct::unit(b);
    let mut finite = LinearFactorProduct::default();
    for (rep, members) in classes {
        let kmin = members.iter().map(|&(k, _)| k).min().unwrap();
        let rep = rep * b.pow(kmin);
        let mut sum = 0;
        for (k, m) in members {
            let k = k - kmin;
            sum += m;
            // (rep b^k z)^m = (rep z)^m ∏_{j<k} (1 - rep b^j z)^{-m}; (1 - c z) ~ (z - c^{-1}).
            for j in 0..k {
                finite.push((rep * b.pow(j)).inv(), -m);
            }
        }
        residual.push(rep, sum);
    }
    let is_laurent = residual.is_unit() && finite.is_polynomial();
    Ok(RatioReport {
        residual_blocks: residual,
        finite_part: finite,
        is_laurent,
    })
}

pub fn canonical_eq_mod_units(p1: &PochhammerProduct, p2: &PochhammerProduct) -> Result<bool> {
    Ok(reduce_ratio(p1, p2)?.is_unit())
}

/// `a_{l^p,k^m}` from the denominators `d_{l^p,k^m}` and `d_{(l*)^p,k^m}`.
pub fn ucoef_from_denominators(
    den: &Denominators,
    k: u32,
    m: u32,
    l: u32,
    p: u32,
) -> Result<PochhammerProduct> {
    let cd = cartan_data(den.ty);
    let x = den.kr(l, p, k, m)?;
    let y = den.kr(cd.star(l), p, k, m)?;
    let ps = cd.pstar;
    let b = cd.base();
    let mut out = PochhammerProduct::unit(b);
    for &yv in y.roots() {
        out.push(ps * yv, 1);
        out.push(ps * yv.bar(), 1);
    }
    for &xv in x.roots() {
        out.push(xv, -1);
        out.push(b * xv.bar(), -1);
    }
    Ok(out)
}

/// Accumulates the closed-form products; every bracket is a list of block arguments.
struct Builder {
    out: PochhammerProduct,
}

impl Builder {
    fn new(base: QMonomial) -> Self {
        Builder {
            out: PochhammerProduct::unit(base),
        }
    }
    fn frac<N, D>(&mut self, num: N, den: D)
    where
        N: IntoIterator<Item = Vec<QMonomial>>,
        D: IntoIterator<Item = Vec<QMonomial>>,
    {
        for b in num {
            for a in b {
                self.out.push(a, 1);
            }
        }
        for b in den {
            for a in b {
                self.out.push(a, -1);
            }
        }
    }
}

/// `[a]`: a single block with argument `c^a` for the type's bracket constant `c`.
fn br(c: QMonomial, a: i64) -> Vec<QMonomial> {
    vec![c.pow(a)]
}
/// `⟨a⟩ = (-(-q)^a z)`.
fn pa(a: i64) -> Vec<QMonomial> {
    vec![-neg_q_pow(a)]
}
/// `((-1)^d q_s^a z)`.
fn pnz(a: i64, d: i64) -> Vec<QMonomial> {
    vec![sign_pow(d) * QMonomial::qs().pow(a)]
}
/// `∏_s (1 - (-q)^{36s+3a} z³)`: three blocks over the cube roots of unity.
fn bb(a: i64) -> Vec<QMonomial> {
    let w = QMonomial::omega();
    (0..3).map(|j| w.pow(j) * neg_q_pow(a)).collect()
}
/// `∏_s (1 + x_s + x_s²)` with `x_s = (-q)^{12s+a} z`: the two primitive cube-root blocks.
fn ppb(a: i64) -> Vec<QMonomial> {
    let w = QMonomial::omega();
    vec![w * neg_q_pow(a), w.pow(2) * neg_q_pow(a)]
}

/// The closed-form `a_{l^p,k^m}(z)`.
pub fn universal_coefficient(
    ty: AffineType,
    k: u32,
    m: u32,
    l: u32,
    p: u32,
) -> Result<PochhammerProduct> {
    ty.check_node(k)?;
    ty.check_node(l)?;
    if m == 0 || p == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let cd = cartan_data(ty);
    let mut bld = Builder::new(cd.base());
    let (k, m, l, p) = (k as i64, m as i64, l as i64, p as i64);
    let dmp = (m - p).abs();
    let unavailable = || Error::UcoefDataUnavailable(format!("{ty} a_{{{l}^{p},{k}^{m}}}"));
    match ty.kind()? {
        Kind::A1 { n } => {
            let c = QMonomial::neg_q();
            let dkl = (k - l).abs();
            let e = (n - k - l).abs();
            for s in 1..=k.min(l).min(n - k).min(n - l) {
                for t in 0..m.min(p) {
                    let st = 2 * (s + t);
                    bld.frac(
                        [br(c, n + e + dmp + st), br(c, n - e - dmp - st)],
                        [br(c, dkl + dmp + st), br(c, 2 * n - dkl - dmp - st)],
                    );
                }
            }
        }
        Kind::B1 { n } => {
            let c = QMonomial::neg_q();
            if k < n && l < n {
                let dkl = (k - l).abs();
                for s in 1..=k.min(l) {
                    for t in 0..m.min(p) {
                        let st = 2 * (s + t);
                        bld.frac(
                            [br(c, k + l - dmp - st), pa(2 * n - dkl - dmp - 1 - st)],
                            [br(c, dkl + dmp + st), pa(2 * n + k + l - dmp - 1 - st)],
                        );
                        bld.frac(
                            [
                                pa(2 * n + dkl + dmp - 1 + st),
                                br(c, 4 * n - k - l + dmp - 2 + st),
                            ],
                            [
                                pa(2 * n - k - l + dmp - 1 + st),
                                br(c, 4 * n - dkl - dmp - 2 - st),
                            ],
                        );
                    }
                }
            } else if k == n && l == n {
                let (p, m) = (p.min(m), p.max(m));
                for s in 1..=n {
                    for t in 0..p {
                        let d = m - p;
                        bld.frac(
                            [
                                pnz(4 * n + 4 * s + 2 * t - 4 + d, d),
                                pnz(4 * n - 4 * s - 2 * t - d, d),
                            ],
                            [
                                pnz(4 * s + 2 * t - 2 + d, d),
                                pnz(8 * n - 2 - 4 * s - 2 * t - d, d),
                            ],
                        );
                    }
                }
            } else {
                // a_{l^p, n^m}, l < n
                let (l, p, m) = if k == n { (l, p, m) } else { (k, m, p) };
                let d = m + n + l + p;
                let e = (2 * p - m).abs();
                for s in 1..=l {
                    for t in 0..(2 * p).min(m) {
                        bld.frac(
                            [
                                pnz(2 * n + 2 * l - e - 4 * s - 2 * t, d),
                                pnz(6 * n - 2 * l - 4 + e + 4 * s + 2 * t, d),
                            ],
                            [
                                pnz(2 * n - 2 * l - 2 + e + 4 * s + 2 * t, d),
                                pnz(6 * n - 2 + 2 * l - e - 4 * s - 2 * t, d),
                            ],
                        );
                    }
                }
            }
        }
        Kind::C1 { n } => {
            let c = -QMonomial::qs();
            if k < n && l < n {
                let dkl = (k - l).abs();
                for s in 1..=k.min(l) {
                    for t in 0..m.min(p) {
                        let st = 2 * s + 2 * t;
                        bld.frac(
                            [br(c, k + l - dmp - st), br(c, 4 * n + 4 - k - l + dmp + st)],
                            [br(c, dkl + dmp + st), br(c, 4 * n + 4 - dkl - dmp - st)],
                        );
                        bld.frac(
                            [
                                br(c, 2 * n + 2 + dkl + dmp + st),
                                br(c, 2 * n + 2 - dkl - dmp - st),
                            ],
                            [
                                br(c, 2 * n + 2 - k - l + dmp + st),
                                br(c, 2 * n + 2 + k + l - dmp - st),
                            ],
                        );
                    }
                }
            } else if k == n && l == n {
                let (p, m) = (p.min(m), p.max(m));
                let d = m + p;
                for s in 1..=n {
                    for t in 0..p {
                        let (x, y) = (2 * m - 2 * p, 2 * s + 4 * t);
                        bld.frac(
                            [pnz(2 * n + 4 + x + y, d), pnz(2 * n - x - y, d)],
                            [pnz(2 + x + y, d), pnz(4 * n + 2 - x - y, d)],
                        );
                    }
                }
            } else {
                let (l, p, m) = if k == n { (l, p, m) } else { (k, m, p) };
                let d = m + n + l + p;
                let e = (2 * m - p).abs();
                for s in 1..=l {
                    for t in 0..p.min(2 * m) {
                        let st = 2 * s + 2 * t;
                        bld.frac(
                            [pnz(n + 1 + l - e - st, d), pnz(3 * n + 3 - l + e + st, d)],
                            [pnz(n + 1 - l + e + st, d), pnz(3 * n + 3 + l - e - st, d)],
                        );
                    }
                }
            }
        }
        Kind::D1 { n } => {
            let c = QMonomial::neg_q();
            let (lo, hi) = (k.min(l), k.max(l));
            if hi < n - 1 {
                let dkl = hi - lo;
                for s in 1..=lo {
                    for t in 0..m.min(p) {
                        let st = 2 * (s + t);
                        bld.frac(
                            [br(c, k + l - dmp - st), br(c, 2 * n - 2 + dkl + dmp + st)],
                            [br(c, dkl + dmp + st), br(c, 2 * n - 2 + k + l - dmp - st)],
                        );
                        bld.frac(
                            [
                                br(c, 2 * n - 2 - dkl - dmp - st),
                                br(c, 4 * n - k - l + dmp - 4 + st),
                            ],
                            [
                                br(c, 2 * n - k - l + dmp - 2 + st),
                                br(c, 4 * n - 4 - dkl - dmp - st),
                            ],
                        );
                    }
                }
            } else if lo < n - 1 {
                for s in 1..=lo {
                    for t in 0..m.min(p) {
                        let st = 2 * (s + t);
                        bld.frac(
                            [
                                br(c, 3 * n - lo - 3 + dmp + st),
                                br(c, n - 1 + lo - dmp - st),
                            ],
                            [
                                br(c, n - lo - 1 + dmp + st),
                                br(c, 3 * n - 3 + lo - dmp - st),
                            ],
                        );
                    }
                }
            } else {
                // Spin pairs. The numerator comes from the dual pair, so for odd n
                // (where n-1 and n are swapped by *) the two numerator families trade places.
                let same = lo == hi;
                let d = dmp;
                let num_same = |s: i64, t: i64| {
                    [
                        br(c, 2 * n + 4 * s + 2 * t - 4 + d),
                        br(c, 2 * n - 4 * s - 2 * t - d),
                    ]
                };
                let num_mixed = |s: i64, t: i64| {
                    [
                        br(c, 2 * n + 4 * s + 2 * t + d - 2),
                        br(c, 2 * n - 4 * s - 2 * t - d - 2),
                    ]
                };
                let num_from_same = same == (n % 2 == 0);
                for t in 0..m.min(p) {
                    for s in 1..=n / 2 {
                        if num_from_same {
                            bld.frac(num_same(s, t), []);
                        }
                        if same {
                            bld.frac(
                                [],
                                [
                                    br(c, 4 * s + 2 * t - 2 + d),
                                    br(c, 4 * n - 2 - 4 * s - 2 * t - d),
                                ],
                            );
                        }
                    }
                    for s in 1..=(n - 1) / 2 {
                        if !num_from_same {
                            bld.frac(num_mixed(s, t), []);
                        }
                        if !same {
                            bld.frac(
                                [],
                                [
                                    br(c, 4 * s + 2 * t + d),
                                    br(c, 4 * n - 4 * s - 2 * t - d - 4),
                                ],
                            );
                        }
                    }
                }
            }
        }
        Kind::G2 => {
            let c = -QMonomial::qt();
            match (k, l) {
                (1, 1) => {
                    let (p, m) = (p.min(m), p.max(m));
                    let d = 3 * m - 3 * p;
                    for s in 1..=4 {
                        for t in 0..p {
                            bld.frac(
                                [br(c, 16 + 2 * s + d + 6 * t), br(c, 8 - 2 * s - d - 6 * t)],
                                [br(c, 4 + 2 * s + d + 6 * t), br(c, 20 - 2 * s - d - 6 * t)],
                            );
                        }
                    }
                }
                (2, 2) => {
                    let (p, m) = (p.min(m), p.max(m));
                    let d = m - p;
                    for t in 0..p {
                        let (u, v) = (d + 2 * t, -d - 2 * t);
                        bld.frac(
                            [14, 18, 20, 24].map(|a| br(c, a + u)),
                            [2, 6, 8, 12].map(|a| br(c, a + u)),
                        );
                        bld.frac(
                            [10, 6, 4, 0].map(|a| br(c, a + v)),
                            [22, 18, 16, 12].map(|a| br(c, a + v)),
                        );
                    }
                }
                _ => {
                    // a_{1^p, 2^m}
                    let (p, m) = if l == 1 { (p, m) } else { (m, p) };
                    let d = (m - 3 * p).abs();
                    for t in 0..(3 * p).min(m) {
                        bld.frac(
                            [3 - 2 * t - d, 7 - 2 * t - d, 17 + 2 * t + d, 21 + 2 * t + d]
                                .map(|a| br(c, a)),
                            [5 + 2 * t + d, 9 + 2 * t + d, 15 - 2 * t - d, 19 - 2 * t - d]
                                .map(|a| br(c, a)),
                        );
                    }
                }
            }
        }
        Kind::D43 => {
            let c = QMonomial::neg_q();
            for t in 0..m.min(p) {
                match (k, l) {
                    (1, 1) => {
                        let (u, v) = (dmp + 2 * t, -dmp - 2 * t);
                        bld.frac(
                            [br(c, 8 + u), br(c, 4 + v), br(c, 12 + u), br(c, v)],
                            [br(c, 2 + u), br(c, 10 + v), br(c, 6 + u), br(c, 6 + v)],
                        );
                        bld.frac([ppb(10 + u), ppb(2 + v)], [ppb(4 + u), ppb(8 + v)]);
                    }
                    (2, 2) => {
                        let (u, v) = (dmp + 2 * t, -dmp - 2 * t);
                        bld.frac(
                            [bb(8 + u), bb(4 + v), bb(10 + u), bb(10 + u)],
                            [bb(2 + u), bb(10 + v), bb(4 + u), bb(4 + u)],
                        );
                        bld.frac(
                            [bb(2 + v), bb(2 + v), bb(12 + u), bb(v)],
                            [bb(8 + v), bb(8 + v), bb(6 + u), bb(6 + v)],
                        );
                    }
                    _ => {
                        let (u, v) = (dmp + 2 * t, -dmp - 2 * t);
                        bld.frac(
                            [bb(9 + u), bb(3 + v), bb(11 + u), bb(1 + v)],
                            [bb(3 + u), bb(9 + v), bb(5 + u), bb(7 + v)],
                        );
                    }
                }
            }
        }
        _ => return Err(unavailable()),
    }
    Ok(bld.out)
}

/// A KR module `V(k^m)_a`; level 0 is the trivial module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KrModule {
    pub node: u32,
    pub level: u32,
    pub spectral: QMonomial,
}

impl KrModule {
    pub fn new(node: u32, level: u32, spectral: QMonomial) -> Self {
        KrModule {
            node,
            level,
            spectral,
        }
    }
    pub fn trivial() -> Self {
        KrModule {
            node: 0,
            level: 0,
            spectral: QMonomial::ONE,
        }
    }
}

impl std::fmt::Display for KrModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}^{} @ {}", self.node, self.level, self.spectral)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The probe `N` on the left: `d_{N,M}` and `a_{N,M}`.
    Left,
    /// The probe on the right: `d_{M,N}` and `a_{M,N}`.
    Right,
}

/// Denominator and universal coefficient of the ordered pair `(A_a, B_b)` as
/// functions of `z`, with both spectral parameters folded in: `f_{A_a,B_b}(z) = f_{A,B}(z b/a)`.
fn pair_data(
    den: &Denominators,
    base: QMonomial,
    first: KrModule,
    second: KrModule,
) -> Result<(LinearFactorProduct, PochhammerProduct)> {
    if first.level == 0 || second.level == 0 {
        return Ok((
            LinearFactorProduct::default(),
            PochhammerProduct::unit(base),
        ));
    }
    let c = second.spectral / first.spectral;
    let d = den.kr(first.node, first.level, second.node, second.level)?;
    // roots of d(c z) are ρ / c
    let d = d.scaled(c.inv());
    let a = universal_coefficient(den.ty, second.node, second.level, first.node, first.level)?
        .at_scaled(c);
    Ok((LinearFactorProduct::from_roots(&d, 1), a))
}

/// The Laurent-membership ratio attached to a surjection `M' ⊗ M'' ↠ M` and a probe `N`.
pub fn ak_ratio_check(
    den: &Denominators,
    factors: (KrModule, KrModule),
    target: KrModule,
    probe: KrModule,
    side: Side,
) -> Result<RatioReport> {
    let base = cartan_data(den.ty).base();
    let data = |m: KrModule| match side {
        Side::Left => pair_data(den, base, probe, m),
        Side::Right => pair_data(den, base, m, probe),
    };
    let (d1, a1) = data(factors.0)?;
    let (d2, a2) = data(factors.1)?;
    let (d0, a0) = data(target)?;
    let mut finite = d1;
    finite.extend(&d2);
    finite.extend(&LinearFactorProduct(
        d0.0.into_iter().map(|(r, m)| (r, -m)).collect(),
    ));
    let rep = reduce_ratio(&a0, &a1.mul(&a2)?)?;
    finite.extend(&rep.finite_part);
    let is_laurent = rep.residual_blocks.is_unit() && finite.is_polynomial();
    Ok(RatioReport {
        residual_blocks: rep.residual_blocks,
        finite_part: finite,
        is_laurent,
    })
}
