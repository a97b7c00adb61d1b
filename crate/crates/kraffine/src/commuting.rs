//! Pole orders between KR modules, tensor-product simplicity, Hernandez–Leclerc
//! quivers with their KR cluster modules, and Schur–Weyl quivers.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::affine_data::{cartan_data, AffineType, Kind};
use crate::arquiver::CoordQuiver;
use crate::denominator::Denominators;
use crate::error::{Error, Result};
use crate::scalar::QMonomial;
use crate::tsystem::{w_to_v, KRLabel};
use crate::ucoef::KrModule;

/// `V(k^m)_a` from a label in either convention.
pub fn kr_module(ty: AffineType, l: KRLabel) -> KrModule {
    let v = w_to_v(ty, l);
    KrModule::new(v.node, v.level, v.spectral)
}

/// Parses one `k^m @ scalar` per line; `#` starts a comment.
pub fn parse_module_list(text: &str) -> Result<Vec<KrModule>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::InvalidInput(format!("line {}: {msg}: `{raw}`", n + 1));
        let (km, a) = line
            .split_once('@')
            .ok_or_else(|| bad("expected `k^m @ scalar`"))?;
        let (k, m) = km
            .trim()
            .split_once('^')
            .ok_or_else(|| bad("expected `k^m`"))?;
        let k: u32 = k.trim().parse().map_err(|_| bad("bad node"))?;
        let m: u32 = m.trim().parse().map_err(|_| bad("bad level"))?;
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        out.push(KrModule::new(k, m, a.trim().parse()?));
    }
    Ok(out)
}

/// Multiplicity of `b/a` in `d_{k^m,l^p}` plus that of `a/b` in `d_{l^p,k^m}`.
pub fn pole_order(den: &Denominators, x: KrModule, y: KrModule) -> Result<usize> {
    let ratio = y.spectral / x.spectral;
    let d1 = den.kr(x.node, x.level, y.node, y.level)?;
    let d2 = den.kr(y.node, y.level, x.node, x.level)?;
    Ok(d1.multiplicity(ratio) + d2.multiplicity(ratio.inv()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub first: usize,
    pub second: usize,
    /// `a_second / a_first`.
    pub ratio: QMonomial,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityDecision {
    pub simple: bool,
    pub witness: Option<Obstruction>,
}

/// A tensor product of KR modules is simple iff no pair has a pole.
pub fn tensor_simple(den: &Denominators, modules: &[KrModule]) -> Result<SimplicityDecision> {
    for i in 0..modules.len() {
        for j in i + 1..modules.len() {
            let o = pole_order(den, modules[i], modules[j])?;
            if o > 0 {
                let ratio = modules[j].spectral / modules[i].spectral;
                return Ok(SimplicityDecision {
                    simple: false,
                    witness: Some(Obstruction {
                        first: i,
                        second: j,
                        ratio,
                        order: o,
                    }),
                });
            }
        }
    }
    Ok(SimplicityDecision {
        simple: true,
        witness: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HLVertex {
    pub node: u32,
    /// Level after the relabel `(i,r) ↦ (i, r + d_i)`.
    pub r: i64,
    pub k: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct HLQuiver {
    #[serde(rename = "type")]
    pub ty: AffineType,
    pub depth: i64,
    pub vertices: Vec<HLVertex>,
    /// Arrows as indices into `vertices`.
    pub arrows: Vec<(usize, usize)>,
}

/// The unique `k ≥ 1` with `0 < k·b_ii − |r| ≤ b_ii`.
pub fn hl_multiplicity(b_ii: i64, r: i64) -> u32 {
    let k = (r.abs() + b_ii - 1).div_euclid(b_ii).max(0) + 1;
    let k = if (k - 1) * b_ii - r.abs() > 0 {
        k - 1
    } else {
        k
    };
    k as u32
}

fn untwisted(ty: AffineType) -> Result<()> {
    match ty.kind()? {
        Kind::A1 { .. } | Kind::B1 { .. } | Kind::C1 { .. } | Kind::D1 { .. } | Kind::G2 => Ok(()),
        _ => Err(Error::UnsupportedType(format!(
            "{ty} (Hernandez-Leclerc quivers are untwisted only)"
        ))),
    }
}

/// The Hernandez–Leclerc quiver truncated to levels `−R ≤ r ≤ 0`.
///
/// Of the two components, the one through `(1,−1)` is kept (`(1,0)` for `G₂`),
/// matching the printed quivers.
pub fn hl_quiver(ty: AffineType, depth: i64) -> Result<HLQuiver> {
    untwisted(ty)?;
    if depth < 0 {
        return Err(Error::InvalidInput("depth must be non-negative".into()));
    }
    let cd = cartan_data(ty);
    let n = cd.nodes.len();
    let b = |i: usize, j: usize| cd.d[i] * cd.cartan[i][j];
    let bmax = (0..n).map(|i| b(i, i)).max().unwrap();
    let (lo, hi) = (-depth - 4 * bmax - 4, 4 * bmax + 4);
    // BFS in the relabelled coordinates; arrows are undirected for connectivity.
    let seed = if matches!(ty.kind()?, Kind::G2) {
        (0usize, 0i64)
    } else {
        (0, -1)
    };
    let mut seen: BTreeSet<(usize, i64)> = BTreeSet::new();
    let mut queue = VecDeque::from([seed]);
    seen.insert(seed);
    while let Some((i, r)) = queue.pop_front() {
        let r0 = r - cd.d[i];
        for j in 0..n {
            let bij = b(i, j);
            if bij == 0 {
                continue;
            }
            for s0 in [r0 + bij, r0 - b(j, i)] {
                let s = s0 + cd.d[j];
                if (lo..=hi).contains(&s) && seen.insert((j, s)) {
                    queue.push_back((j, s));
                }
            }
        }
    }
    let mut vertices: Vec<HLVertex> = seen
        .iter()
        .filter(|&&(_, r)| r <= 0 && r >= -depth)
        .map(|&(i, r)| HLVertex {
            node: i as u32 + 1,
            r,
            k: hl_multiplicity(b(i, i), r),
        })
        .collect();
    vertices.sort_by_key(|v| (v.node, std::cmp::Reverse(v.r)));
    let mut arrows = Vec::new();
    for (x, u) in vertices.iter().enumerate() {
        for (y, v) in vertices.iter().enumerate() {
            let (i, j) = (u.node as usize - 1, v.node as usize - 1);
            let (r0, s0) = (u.r - cd.d[i], v.r - cd.d[j]);
            if b(i, j) != 0 && s0 == r0 + b(i, j) {
                arrows.push((x, y));
            }
        }
    }
    Ok(HLQuiver {
        ty,
        depth,
        vertices,
        arrows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterModule {
    pub vertex: HLVertex,
    pub w: KRLabel,
    pub v: KRLabel,
}

/// `W^{(i)}_{k_{i,r}, (−q_d)^r}` at every vertex, with `q_d^{max d} = q`.
pub fn hl_cluster_modules(ty: AffineType, depth: i64) -> Result<Vec<ClusterModule>> {
    let quiver = hl_quiver(ty, depth)?;
    let cd = cartan_data(ty);
    let qd = QMonomial::q_pow(1, cd.max_d());
    Ok(quiver
        .vertices
        .iter()
        .map(|&vertex| {
            let w = KRLabel::w(vertex.node, vertex.k, (-qd).pow(vertex.r));
            ClusterModule {
                vertex,
                w,
                v: w_to_v(ty, w),
            }
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutingReport {
    #[serde(rename = "type")]
    pub ty: AffineType,
    pub depth: i64,
    pub modules: Vec<ClusterModule>,
    pub pairs_checked: usize,
    pub violations: Vec<Obstruction>,
}

/// Checks that every pair of cluster modules strongly commutes.
pub fn verify_commuting_family(den: &Denominators, depth: i64) -> Result<CommutingReport> {
    let modules = hl_cluster_modules(den.ty, depth)?;
    let ms: Vec<KrModule> = modules.iter().map(|c| kr_module(den.ty, c.v)).collect();
    let report = check_family(den, &ms)?;
    Ok(CommutingReport {
        ty: den.ty,
        depth,
        modules,
        pairs_checked: report.0,
        violations: report.1,
    })
}

/// All-pairs pole orders of an arbitrary family.
pub fn check_family(den: &Denominators, ms: &[KrModule]) -> Result<(usize, Vec<Obstruction>)> {
    let mut violations = Vec::new();
    let mut pairs = 0;
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            pairs += 1;
            let order = pole_order(den, ms[i], ms[j])?;
            if order > 0 {
                let ratio = ms[j].spectral / ms[i].spectral;
                violations.push(Obstruction {
                    first: i,
                    second: j,
                    ratio,
                    order,
                });
            }
        }
    }
    Ok((pairs, violations))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SWEntry {
    pub name: String,
    pub node: u32,
    pub x: QMonomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SWDatum {
    pub entries: Vec<SWEntry>,
}

impl SWDatum {
    /// Fundamental modules at the simple roots of an AR quiver.
    pub fn from_ar_quiver(g: &CoordQuiver) -> Result<Self> {
        let mut entries = Vec::new();
        for i in 1..=g.system.rank {
            let k = g.system.simple(i);
            let m = g.module(k)?;
            entries.push(SWEntry {
                name: g.label(k),
                node: m.node,
                x: m.spectral,
            });
        }
        Ok(SWDatum { entries })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SWQuiver {
    pub names: Vec<String>,
    /// `arrows[i][j] = d_ij`.
    pub arrows: Vec<Vec<usize>>,
    pub cartan: Vec<Vec<i64>>,
}

impl SWQuiver {
    /// Edges of the underlying graph with multiplicity `−a_ij`.
    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.names.len();
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.cartan[i][j] != 0 {
                    e.push((i, j, -self.cartan[i][j]));
                }
            }
        }
        e
    }

    /// Recognises `A_n` and `D_n` among the underlying simple graphs.
    pub fn dynkin_type(&self) -> Option<String> {
        let n = self.names.len();
        let edges = self.edges();
        if edges.iter().any(|&(_, _, m)| m != 1) || edges.len() + 1 != n {
            return None;
        }
        let mut adj = vec![Vec::new(); n];
        for &(i, j, _) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return None;
        }
        let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
        let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
        match branch.as_slice() {
            [] => Some(format!("A{n}")),
            [c] if deg[*c] == 3 => {
                // D_n: two of the three arms have length one.
                let short = adj[*c].iter().filter(|&&w| deg[w] == 1).count();
                (short >= 2 && n >= 4).then(|| format!("D{n}"))
            }
            _ => None,
        }
    }
}

/// `d_ij` = order of the zero of `d_{V_i,V_j}` at `X(j)/X(i)`.
pub fn schur_weyl_quiver(den: &Denominators, datum: &SWDatum) -> Result<SWQuiver> {
    let n = datum.entries.len();
    let mut arrows = vec![vec![0usize; n]; n];
    for (i, a) in datum.entries.iter().enumerate() {
        for (j, b) in datum.entries.iter().enumerate() {
            if i != j {
                arrows[i][j] = den.kr(a.node, 1, b.node, 1)?.multiplicity(b.x / a.x);
            }
        }
    }
    let cartan = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        2
                    } else {
                        -((arrows[i][j] + arrows[j][i]) as i64)
                    }
                })
                .collect()
        })
        .collect();
    Ok(SWQuiver {
        names: datum.entries.iter().map(|e| e.name.clone()).collect(),
        arrows,
        cartan,
    })
}
