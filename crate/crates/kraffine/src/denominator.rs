//! Denominators `d_{k^m,l^p}(z)` of normalized R-matrices between KR modules,
//! stored as multisets of roots: each root `ρ` stands for a factor `(z - ρ)`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::affine_data::{AffineType, Kind};
use crate::error::{Error, Result};
use crate::scalar::{neg_q_pow, neg_qs_pow, neg_qt_pow, sign_pow, Cyclo24, QMonomial};

/// Multiset of roots kept sorted by (q-exponent, zeta).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RootMultiset {
    roots: Vec<QMonomial>,
}

impl RootMultiset {
    pub fn new(mut roots: Vec<QMonomial>) -> Self {
        roots.sort();
        RootMultiset { roots }
    }

    pub fn empty() -> Self {
        RootMultiset::default()
    }

    pub fn roots(&self) -> &[QMonomial] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn multiplicity(&self, rho: QMonomial) -> usize {
        self.roots.iter().filter(|&&r| r == rho).count()
    }

    /// Distinct roots with multiplicities.
    pub fn factors(&self) -> Vec<(QMonomial, usize)> {
        let mut out: Vec<(QMonomial, usize)> = Vec::new();
        for &r in &self.roots {
            match out.last_mut() {
                Some((x, c)) if *x == r => *c += 1,
                _ => out.push((r, 1)),
            }
        }
        out
    }

    pub fn union(&self, other: &RootMultiset) -> RootMultiset {
        let mut v = self.roots.clone();
        v.extend_from_slice(&other.roots);
        RootMultiset::new(v)
    }

    /// Roots of `f(z / c)` given the roots of `f(z)`: every root is multiplied by `c`.
    pub fn scaled(&self, c: QMonomial) -> RootMultiset {
        RootMultiset::new(self.roots.iter().map(|&r| r * c).collect())
    }

    pub fn all_positive(&self) -> bool {
        self.roots.iter().all(|r| r.e12() > 0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct F {
            root: QMonomial,
            mult: usize,
        }
        let factors: Vec<F> = self
            .factors()
            .into_iter()
            .map(|(root, mult)| F { root, mult })
            .collect();
        serde_json::json!({ "factors": factors })
    }
}

impl FromIterator<QMonomial> for RootMultiset {
    fn from_iter<I: IntoIterator<Item = QMonomial>>(iter: I) -> Self {
        RootMultiset::new(iter.into_iter().collect())
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .into_iter()
            .map(|(r, c)| {
                let r = r.to_string();
                let f = match r.strip_prefix('-') {
                    Some(rest) => format!("(z + {rest})"),
                    None => format!("(z - {r})"),
                };
                if c == 1 {
                    f
                } else {
                    format!("{f}^{c}")
                }
            })
            .collect();
        f.write_str(&parts.join(""))
    }
}

impl fmt::Debug for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A coefficient of an expanded denominator: a finite sum `Σ c_e q^{e/12}` with
/// `c_e ∈ ℤ[ζ₂₄]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Coefficient(BTreeMap<i64, Cyclo24>);

impl Coefficient {
    fn one() -> Self {
        let mut m = BTreeMap::new();
        m.insert(0, Cyclo24::root(0));
        Coefficient(m)
    }

    fn add_term(&mut self, e12: i64, c: Cyclo24) {
        let entry = self.0.entry(e12).or_default();
        entry.add_assign(&c);
        if entry.is_zero() {
            self.0.remove(&e12);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The coefficient as a single q-monomial, `None` for zero.
    pub fn as_monomial(&self) -> Result<Option<QMonomial>> {
        match self.0.len() {
            0 => Ok(None),
            1 => {
                let (&e, c) = self.0.iter().next().unwrap();
                let z = c.as_root().ok_or(Error::CoefficientNotMonomial)?;
                Ok(Some(QMonomial::from_twelfths(z as i64, e)))
            }
            _ => Err(Error::CoefficientNotMonomial),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(&e, c)| match c.as_root() {
                Some(z) => QMonomial::from_twelfths(z as i64, e).to_string(),
                None => format!("({c:?})*{}", QMonomial::from_twelfths(0, e)),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficients of `∏ (z - ρ)`, leading coefficient first.
pub fn expand(r: &RootMultiset) -> Vec<Coefficient> {
    let mut coeffs = vec![Coefficient::one()];
    for &rho in r.roots() {
        // multiply by (z - rho)
        let neg = -rho;
        let mut next = vec![Coefficient::default(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            for (&e, v) in &c.0 {
                next[i].add_term(e, *v);
                next[i + 1].add_term(e + neg.e12(), v.mul(&Cyclo24::root(neg.zeta())));
            }
        }
        coeffs = next;
    }
    coeffs
}

pub fn root_multiplicity(r: &RootMultiset, rho: QMonomial) -> usize {
    r.multiplicity(rho)
}

/// User-supplied fundamental denominators for pairs the built-in tables lack.
#[derive(Clone, Debug, Default)]
pub struct FundamentalTable {
    entries: BTreeMap<(AffineType, u32, u32), RootMultiset>,
    pub source: String,
}

impl FundamentalTable {
    /// Parses lines `TYPE k l : root;root;...`, `#` starting a comment.
    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut t = FundamentalTable {
            entries: BTreeMap::new(),
            source: source.to_string(),
        };
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::ExtensionTable {
                line: no + 1,
                msg: msg.to_string(),
            };
            let (head, tail) = line.split_once(':').ok_or_else(|| err("missing `:`"))?;
            let fields: Vec<&str> = head.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err("expected `TYPE k l`"));
            }
            let ty: AffineType = fields[0].parse().map_err(|e: Error| err(&e.to_string()))?;
            let k: u32 = fields[1].parse().map_err(|_| err("bad node k"))?;
            let l: u32 = fields[2].parse().map_err(|_| err("bad node l"))?;
            ty.check_node(k).map_err(|e| err(&e.to_string()))?;
            ty.check_node(l).map_err(|e| err(&e.to_string()))?;
            let mut roots = Vec::new();
            for r in tail.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                roots.push(r.parse::<QMonomial>().map_err(|e| err(&e.to_string()))?);
            }
            let rm = RootMultiset::new(roots);
            if let Some(prev) = t.entries.get(&(ty, l, k)) {
                if *prev != rm {
                    return Err(err("table is not symmetric in (k,l)"));
                }
            }
            t.entries.insert((ty, k, l), rm.clone());
            t.entries.insert((ty, l, k), rm);
        }
        Ok(t)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn get(&self, ty: AffineType, k: u32, l: u32) -> Option<&RootMultiset> {
        self.entries.get(&(ty, k, l))
    }
}

/// Denominator oracle for one affine type, optionally backed by an extension table.
#[derive(Clone, Debug)]
pub struct Denominators<'a> {
    pub ty: AffineType,
    kind: Kind,
    ext: Option<&'a FundamentalTable>,
}

fn unavailable(ty: AffineType, k: u32, l: u32) -> Error {
    Error::FundamentalDataUnavailable {
        ty: ty.to_string(),
        k,
        l,
    }
}

impl<'a> Denominators<'a> {
    pub fn new(ty: AffineType) -> Self {
        Denominators {
            ty,
            kind: ty.kind().expect("validated"),
            ext: None,
        }
    }

    pub fn with_extensions(ty: AffineType, ext: &'a FundamentalTable) -> Self {
        Denominators {
            ty,
            kind: ty.kind().expect("validated"),
            ext: Some(ext),
        }
    }

    fn check(&self, k: u32, l: u32) -> Result<()> {
        self.ty.check_node(k)?;
        self.ty.check_node(l)
    }

    /// `d_{k,l}(z)`.
    pub fn fundamental(&self, k: u32, l: u32) -> Result<RootMultiset> {
        self.check(k, l)?;
        if let Some(r) = builtin_fundamental(self.kind, k as i64, l as i64)? {
            return Ok(r);
        }
        if let Some(r) = self.ext.and_then(|t| t.get(self.ty, k, l)) {
            return Ok(r.clone());
        }
        Err(unavailable(self.ty, k, l))
    }

    /// `d_{k^m,l^p}(z)`.
    pub fn kr(&self, k: u32, m: u32, l: u32, p: u32) -> Result<RootMultiset> {
        self.check(k, l)?;
        if m == 0 || p == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let (ki, mi, li, pi) = (k as i64, m as i64, l as i64, p as i64);
        match self.kind {
            Kind::B1 { n } if ki == n || li == n => Ok(b_spin(n, ki, mi, li, pi)),
            Kind::C1 { n } => Ok(c_kr(n, ki, mi, li, pi)),
            Kind::G2 if !(ki == 1 && li == 1) => Ok(g2_kr(ki, mi, li, pi)),
            Kind::D2 { n } => d2_substitution(n, ki, mi, li, pi),
            _ => Ok(normal_form(
                &self.fundamental(k, l)?,
                mi,
                pi,
                QMonomial::neg_q(),
            )),
        }
    }

    /// The explicit closed forms for `D_{n+1}^{(2)}` as stated for twisted types:
    /// the normal form on non-spin pairs and the printed spin formulas otherwise.
    pub fn d2_explicit(&self, k: u32, m: u32, l: u32, p: u32) -> Result<RootMultiset> {
        self.check(k, l)?;
        let Kind::D2 { n } = self.kind else {
            return Err(Error::UnsupportedType(self.ty.to_string()));
        };
        let (ki, mi, li, pi) = (k as i64, m as i64, l as i64, p as i64);
        if ki < n && li < n {
            return Ok(normal_form(
                &self.fundamental(k, l)?,
                mi,
                pi,
                QMonomial::neg_q(),
            ));
        }
        let q = QMonomial::q();
        let mut roots = Vec::new();
        if ki == n && li == n {
            for t in 0..mi.min(pi) {
                for s in 1..=n {
                    roots.push(-sign_pow(s + t + pi + mi) * q.pow(2 * s + 2 * t + (pi - mi).abs()));
                }
            }
        } else {
            // Orient as d_{l^p, n^m} with l < n.
            let (l, p, m) = if ki == n { (li, pi, mi) } else { (ki, mi, pi) };
            for t in 0..p.min(m) {
                for s in 1..=l {
                    let sq = -sign_pow(n + l + p + m) * q.pow(n - l + (p - m).abs() + 2 * (s + t));
                    roots.extend(sq.square_roots()?);
                }
            }
        }
        Ok(RootMultiset::new(roots))
    }

    /// The `z ↦ c z` shifted normal form `∏_t d_{k,l}((-q)^{-|p-m|-2t} z)` on top of
    /// the fundamental table, for any type with a fundamental available.
    pub fn normal_form(&self, k: u32, m: u32, l: u32, p: u32) -> Result<RootMultiset> {
        Ok(normal_form(
            &self.fundamental(k, l)?,
            m as i64,
            p as i64,
            QMonomial::neg_q(),
        ))
    }
}

pub fn fundamental_denominator(ty: AffineType, k: u32, l: u32) -> Result<RootMultiset> {
    Denominators::new(ty).fundamental(k, l)
}

pub fn kr_denominator(ty: AffineType, k: u32, m: u32, l: u32, p: u32) -> Result<RootMultiset> {
    Denominators::new(ty).kr(k, m, l, p)
}

/// `∏_{t=0}^{min(m,p)-1} d((b)^{-|p-m|-2t} z)`: each root times `b^{|p-m|+2t}`.
fn normal_form(fund: &RootMultiset, m: i64, p: i64, b: QMonomial) -> RootMultiset {
    let mut roots = Vec::new();
    for t in 0..m.min(p) {
        let c = b.pow((p - m).abs() + 2 * t);
        roots.extend(fund.roots().iter().map(|&r| r * c));
    }
    RootMultiset::new(roots)
}

fn builtin_fundamental(kind: Kind, k: i64, l: i64) -> Result<Option<RootMultiset>> {
    let mut r = Vec::new();
    let d = (k - l).abs();
    match kind {
        Kind::A1 { n } => {
            for s in 1..=k.min(l).min(n - k).min(n - l) {
                r.push(neg_q_pow(d + 2 * s));
            }
        }
        Kind::B1 { n } => {
            if k < n && l < n {
                for s in 1..=k.min(l) {
                    r.push(neg_q_pow(d + 2 * s));
                    r.push(-neg_q_pow(2 * n - k - l - 1 + 2 * s));
                }
            } else if k == n && l == n {
                for s in 1..=n {
                    r.push(QMonomial::qs().pow(4 * s - 2));
                }
            } else {
                let l = k.min(l);
                for s in 1..=l {
                    r.push(sign_pow(n + l) * QMonomial::qs().pow(2 * n - 2 * l - 1 + 4 * s));
                }
            }
        }
        Kind::C1 { n } => {
            for s in 1..=k.min(l).min(n - k).min(n - l) {
                r.push(neg_qs_pow(d + 2 * s));
            }
            for s in 1..=k.min(l) {
                r.push(neg_qs_pow(2 * n + 2 - k - l + 2 * s));
            }
        }
        Kind::D1 { n } => r = d1_fundamental(n, k, l),
        Kind::G2 => {
            let qt = QMonomial::qt();
            match (k.min(l), k.max(l)) {
                (1, 1) => r.extend([6, 8, 10, 12].map(|e| qt.pow(e))),
                (1, 2) => r.extend([7, 11].map(|e| -qt.pow(e))),
                _ => r.extend([2, 8, 12].map(|e| qt.pow(e))),
            }
        }
        Kind::A2Odd { n } => {
            for s in 1..=k.min(l) {
                r.push(neg_q_pow(d + 2 * s));
                r.push(-neg_q_pow(2 * n - k - l + 2 * s));
            }
        }
        Kind::A2Even { .. } => return Ok(None),
        Kind::D2 { n } => return d2_substitution(n, k, 1, l, 1).map(Some),
        Kind::D43 => {
            if k == 2 && l == 2 {
                let q = QMonomial::q();
                for (e, mult) in [(6, 1), (12, 2), (18, 1)] {
                    for _ in 0..mult {
                        r.extend(q.pow(e).cube_roots()?);
                    }
                }
            } else {
                return Ok(None);
            }
        }
    }
    Ok(Some(RootMultiset::new(r)))
}

/// Fundamental denominators of `D_n^{(1)}`; valid as written for `n ≥ 3`.
fn d1_fundamental(n: i64, k: i64, l: i64) -> Vec<QMonomial> {
    let mut r = Vec::new();
    let (a, b) = (k.min(l), k.max(l));
    if b <= n - 2 {
        for s in 1..=a {
            r.push(neg_q_pow(b - a + 2 * s));
            r.push(neg_q_pow(2 * n - 2 - k - l + 2 * s));
        }
    } else if a <= n - 2 {
        for s in 1..=a {
            r.push(neg_q_pow(n - a - 1 + 2 * s));
        }
    } else if a == b {
        for s in 1..=n / 2 {
            r.push(neg_q_pow(4 * s - 2));
        }
    } else {
        for s in 1..=(n - 1) / 2 {
            r.push(neg_q_pow(4 * s));
        }
    }
    r
}

fn d1_kr(n: i64, k: i64, m: i64, l: i64, p: i64) -> RootMultiset {
    normal_form(
        &RootMultiset::new(d1_fundamental(n, k, l)),
        m,
        p,
        QMonomial::neg_q(),
    )
}

fn b_spin(n: i64, k: i64, m: i64, l: i64, p: i64) -> RootMultiset {
    let qs = QMonomial::qs();
    if k == n && l == n {
        let fund = builtin_fundamental(Kind::B1 { n }, n, n).unwrap().unwrap();
        return normal_form(&fund, m, p, -qs);
    }
    // Orient as d_{l^p, n^m} with l < n.
    let (l, p, m) = if k == n { (l, p, m) } else { (k, m, p) };
    let mut r = Vec::new();
    for t in 0..(2 * p).min(m) {
        for s in 1..=l {
            r.push(
                sign_pow(n + l + p + m)
                    * qs.pow(2 * n - 2 * l - 2 + (2 * p - m).abs() + 4 * s + 2 * t),
            );
        }
    }
    RootMultiset::new(r)
}

fn c_kr(n: i64, k: i64, m: i64, l: i64, p: i64) -> RootMultiset {
    let qs = QMonomial::qs();
    let mut r = Vec::new();
    if k < n && l < n {
        if m.max(p) == 1 {
            return builtin_fundamental(Kind::C1 { n }, k, l).unwrap().unwrap();
        }
        let (dkl, dmp) = ((k - l).abs(), (m - p).abs());
        for t in 0..m.min(p) {
            for s in 1..=k.min(l) {
                r.push(neg_qs_pow(dkl + dmp + 2 * (s + t)));
                r.push(neg_qs_pow(2 * n + 2 - k - l + dmp + 2 * (s + t)));
            }
        }
    } else if k == n && l == n {
        for t in 0..m.min(p) {
            for s in 1..=n {
                r.push(sign_pow(m + p) * qs.pow(2 + (2 * m - 2 * p).abs() + 2 * s + 4 * t));
            }
        }
    } else {
        // Orient as d_{l^p, n^m} with l < n.
        let (l, p, m) = if k == n { (l, p, m) } else { (k, m, p) };
        for t in 0..p.min(2 * m) {
            for s in 1..=l {
                r.push(
                    sign_pow(n + p + l + m) * qs.pow(n + 1 - l + (2 * m - p).abs() + 2 * s + 2 * t),
                );
            }
        }
    }
    RootMultiset::new(r)
}

fn g2_kr(k: i64, m: i64, l: i64, p: i64) -> RootMultiset {
    let qt = QMonomial::qt();
    let mut r = Vec::new();
    if k == 2 && l == 2 {
        match (m, p) {
            (1, 1) => return builtin_fundamental(Kind::G2, 2, 2).unwrap().unwrap(),
            (2, 2) => {
                return RootMultiset::new(
                    [2, 4, 8, 8, 10, 12, 14]
                        .iter()
                        .map(|&e| qt.pow(e))
                        .collect(),
                )
            }
            _ => {}
        }
        let dmp = (m - p).abs();
        for t in 0..m.min(p) {
            for s in 1..=2 {
                r.push(neg_qt_pow(-2 + dmp + 4 * s + 2 * t));
                r.push(neg_qt_pow(4 + dmp + 4 * s + 2 * t));
            }
        }
        return RootMultiset::new(r);
    }
    // d_{1^p, 2^m}
    let (p, m) = if k == 1 { (m, p) } else { (p, m) };
    let fund = builtin_fundamental(Kind::G2, 1, 2).unwrap().unwrap();
    for t in 0..(3 * p).min(m) {
        let c = neg_qt_pow((3 * p - m).abs() - 2 + 2 * t);
        r.extend(fund.roots().iter().map(|&x| x * c));
    }
    RootMultiset::new(r)
}

/// `D_{n+1}^{(2)}` from `D_{n+1}^{(1)}` by the three substitution rules, read
/// literally: `d(z²; q²)` on non-spin pairs, `d(-z²; q²)` on mixed pairs and
/// `d_{n^p,n^m}(-z; q²)·d_{n^p,(n+1)^m}(-z; q²)` on the spin pair.
pub fn d2_substitution(n: i64, k: i64, m: i64, l: i64, p: i64) -> Result<RootMultiset> {
    let big = n + 1;
    let mut out = Vec::new();
    if k < n && l < n {
        for rho in d1_kr(big, k, m, l, p).roots() {
            out.extend(rho.subst_q_pow(2).square_roots()?);
        }
    } else if k == n && l == n {
        let a = d1_kr(big, n, m, n, p);
        let b = d1_kr(big, n, m, n + 1, p);
        for rho in a.roots().iter().chain(b.roots()) {
            out.push(-rho.subst_q_pow(2));
        }
    } else {
        for rho in d1_kr(big, k, m, l, p).roots() {
            out.extend((-rho.subst_q_pow(2)).square_roots()?);
        }
    }
    Ok(RootMultiset::new(out))
}
