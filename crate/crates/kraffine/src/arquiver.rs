//! Simply-laced root systems, (folded) AR quivers in coordinates, reflection
//! functors, convex orders, commutation-class words, minimal pairs and the
//! fundamental Dorey triples they produce.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::affine_data::{cartan_data, AffineType, Kind};
use crate::error::{Error, Result};
use crate::scalar::{neg_q_pow, neg_qs_pow, neg_qt_pow, sign_pow, QMonomial};
use crate::tsystem::KRLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SimplyLaced {
    A,
    D,
}

/// Positive roots of `A_n` or `D_n` in the simple-root basis.
#[derive(Clone, Debug)]
pub struct RootSystemSL {
    pub kind: SimplyLaced,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystemSL {
    pub fn new(kind: SimplyLaced, rank: usize) -> Result<Self> {
        let ok = match kind {
            SimplyLaced::A => rank >= 1,
            SimplyLaced::D => rank >= 3,
        };
        if !ok {
            return Err(Error::UnsupportedType(format!("{kind:?}{rank}")));
        }
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut edges: Vec<(usize, usize)> =
            (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        if kind == SimplyLaced::D {
            edges.pop();
            edges.push((rank - 3, rank - 1));
        }
        for (i, j) in edges {
            cartan[i][j] = -1;
            cartan[j][i] = -1;
        }
        let mut rs = RootSystemSL {
            kind,
            rank,
            cartan,
            roots: Vec::new(),
            index: HashMap::new(),
        };
        let mut found: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                v
            })
            .collect();
        let mut frontier = found.clone();
        while let Some(v) = frontier.pop() {
            for i in 0..rank {
                let w = rs.reflect_vec(i + 1, &v);
                if w.iter().all(|&c| c >= 0) && !found.contains(&w) {
                    found.push(w.clone());
                    frontier.push(w);
                }
            }
        }
        found.sort_by_key(|v| {
            (
                v.iter().sum::<i64>(),
                v.iter().map(|c| -c).collect::<Vec<_>>(),
            )
        });
        rs.index = found
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, v)| (v, k))
            .collect();
        rs.roots = found;
        Ok(rs)
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    /// `s_i(v)` for a 1-based node `i`.
    pub fn reflect_vec(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank).map(|j| v[j] * self.cartan[j][i - 1]).sum();
        let mut w = v.to_vec();
        w[i - 1] -= pairing;
        w
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn simple(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank];
        v[i - 1] = 1;
        self.index[&v]
    }

    /// The node `i` when root `k` is `α_i`.
    pub fn simple_node(&self, k: usize) -> Option<usize> {
        let v = &self.roots[k];
        (v.iter().sum::<i64>() == 1).then(|| v.iter().position(|&c| c == 1).unwrap() + 1)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i - 1][j - 1] != 0
    }

    /// Coordinates in the orthonormal basis: `α_i = ε_i − ε_{i+1}` for `A`,
    /// and additionally `α_n = ε_{n−1} + ε_n` for `D`.
    pub fn epsilon(&self, k: usize) -> Vec<i64> {
        let v = &self.roots[k];
        let n = self.rank;
        let mut e = vec![0i64; n + 1];
        for (i, &c) in v.iter().enumerate() {
            if self.kind == SimplyLaced::D && i == n - 1 {
                e[n - 2] += c;
                e[n - 1] += c;
            } else {
                e[i] += c;
                e[i + 1] -= c;
            }
        }
        e
    }

    /// `[a,b]` (or `[a]`) for `A`, `<a,±b>` for `D`.
    pub fn label(&self, k: usize) -> String {
        let v = &self.roots[k];
        match self.kind {
            SimplyLaced::A => {
                let a = v.iter().position(|&c| c != 0).unwrap() + 1;
                let b = v.iter().rposition(|&c| c != 0).unwrap() + 1;
                if a == b {
                    format!("[{a}]")
                } else {
                    format!("[{a},{b}]")
                }
            }
            SimplyLaced::D => {
                let e = self.epsilon(k);
                let nz: Vec<usize> = (0..e.len()).filter(|&i| e[i] != 0).collect();
                let b = if e[nz[1]] > 0 {
                    format!("{}", nz[1] + 1)
                } else {
                    format!("-{}", nz[1] + 1)
                };
                format!("<{},{}>", nz[0] + 1, b)
            }
        }
    }

    pub fn parse_label(&self, s: &str) -> Option<usize> {
        (0..self.roots.len()).find(|&k| self.label(k) == s.replace(' ', ""))
    }

    fn apply_perm(&self, sigma: &[usize], v: &[i64]) -> Vec<i64> {
        let mut w = vec![0; self.rank];
        for (i, &c) in v.iter().enumerate() {
            w[sigma[i] - 1] += c;
        }
        w
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub root: usize,
    pub row: u32,
    pub p: i64,
}

/// A (folded) AR quiver: positive roots of the simply-laced `𝗀` placed at
/// coordinates `(i,p)`.
#[derive(Clone, Debug)]
pub struct CoordQuiver {
    pub ty: AffineType,
    pub system: RootSystemSL,
    /// Coordinate of each root, indexed like `system.roots`.
    pub coords: Vec<(u32, i64)>,
    /// Row lengths `d_i` entering the arrow rule.
    pub row_d: Vec<i64>,
    /// The diagram automorphism `σ` on nodes of `𝗀` (1-based values).
    pub sigma: Vec<usize>,
    /// The word of `τ`, applied right to left.
    pub tau: Vec<usize>,
    pub xi: Vec<i64>,
    pub reflections: Vec<usize>,
    rows_adj: Vec<Vec<bool>>,
    shift: i64,
    row_star: Vec<u32>,
}

struct Setup {
    kind: SimplyLaced,
    rank: usize,
    sigma: Vec<usize>,
    rows: usize,
    row_d: Vec<i64>,
    rows_adj: Vec<Vec<bool>>,
    shift: i64,
    row_star: Vec<u32>,
}

fn setup(ty: AffineType) -> Result<Setup> {
    let kind = ty.kind()?;
    let sl_setup = |k: SimplyLaced, n: usize| -> Result<Setup> {
        let rs = RootSystemSL::new(k, n)?;
        let adj = (1..=n)
            .map(|i| (1..=n).map(|j| rs.adjacent(i, j)).collect())
            .collect();
        let (shift, row_star) = match k {
            SimplyLaced::A => (
                (n + 1) as i64,
                (1..=n).map(|i| (n + 1 - i) as u32).collect(),
            ),
            SimplyLaced::D => {
                let star = (1..=n)
                    .map(|i| match i {
                        _ if n.is_multiple_of(2) => i,
                        _ if i == n - 1 => n,
                        _ if i == n => n - 1,
                        _ => i,
                    } as u32)
                    .collect();
                (2 * n as i64 - 2, star)
            }
        };
        Ok(Setup {
            kind: k,
            rank: n,
            sigma: (1..=n).collect(),
            rows: n,
            row_d: vec![1; n],
            rows_adj: adj,
            shift,
            row_star,
        })
    };
    let folded = |k: SimplyLaced, n: usize, sigma: Vec<usize>, shift: i64| -> Result<Setup> {
        let cd = cartan_data(ty);
        let r = cd.nodes.len();
        let adj = (1..=r as u32)
            .map(|i| (1..=r as u32).map(|j| cd.adjacent(i, j)).collect())
            .collect();
        Ok(Setup {
            kind: k,
            rank: n,
            sigma,
            rows: r,
            row_d: cd.d.clone(),
            rows_adj: adj,
            shift,
            row_star: (1..=r as u32).collect(),
        })
    };
    match kind {
        Kind::A1 { .. } | Kind::A2Odd { .. } | Kind::A2Even { .. } => {
            sl_setup(SimplyLaced::A, ty.rank as usize)
        }
        Kind::D1 { n } => sl_setup(SimplyLaced::D, n as usize),
        Kind::D2 { n } => sl_setup(SimplyLaced::D, n as usize + 1),
        Kind::D43 => sl_setup(SimplyLaced::D, 4),
        Kind::B1 { n } => {
            let n = n as usize;
            let sigma = (1..2 * n).map(|i| 2 * n - i).collect();
            folded(SimplyLaced::A, 2 * n - 1, sigma, 4 * n as i64 - 2)
        }
        Kind::C1 { n } => {
            let n = n as usize;
            let mut sigma: Vec<usize> = (1..=n + 1).collect();
            sigma.swap(n - 1, n);
            folded(SimplyLaced::D, n + 1, sigma, 2 * n as i64 + 2)
        }
        Kind::G2 => folded(SimplyLaced::D, 4, vec![3, 2, 4, 1], 12),
    }
}

pub fn build_gamma(ty: AffineType, xi1: i64) -> Result<CoordQuiver> {
    let s = setup(ty)?;
    let system = RootSystemSL::new(s.kind, s.rank)?;
    let n = s.rows;
    let mut xi = vec![xi1; n];
    // Heights propagate along the row diagram from row 1.
    let mut done = vec![false; n];
    done[0] = true;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if s.rows_adj[i][j] && !done[j] {
                let step = s.row_d[i].min(s.row_d[j]);
                xi[j] = if j > i { xi[i] - step } else { xi[i] + step };
                done[j] = true;
                stack.push(j);
            }
        }
    }
    let tau: Vec<usize> = (1..=n).collect();
    let twisted_coxeter = |v: &[i64]| -> Vec<i64> {
        let mut w = system.apply_perm(&s.sigma, v);
        for &i in tau.iter().rev() {
            w = system.reflect_vec(i, &w);
        }
        w
    };
    let mut coords: Vec<Option<(u32, i64)>> = vec![None; system.num_positive()];
    for k in 1..=n {
        let mut v = vec![0; system.rank];
        v[k - 1] = 1;
        for &i in tau[..k - 1].iter().rev() {
            v = system.reflect_vec(i, &v);
        }
        let mut p = xi[k - 1];
        while let Some(idx) = system.index_of(&v) {
            if coords[idx].is_some() {
                return Err(Error::InvalidInput(format!(
                    "root {} placed twice",
                    system.label(idx)
                )));
            }
            coords[idx] = Some((k as u32, p));
            v = twisted_coxeter(&v);
            p -= 2;
        }
    }
    let coords = coords
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            c.ok_or_else(|| Error::InvalidInput(format!("root {} not reached", system.label(k))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoordQuiver {
        ty,
        system,
        coords,
        row_d: s.row_d,
        sigma: s.sigma,
        tau,
        xi,
        reflections: Vec::new(),
        rows_adj: s.rows_adj,
        shift: s.shift,
        row_star: s.row_star,
    })
}

impl CoordQuiver {
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn root_at(&self, row: u32, p: i64) -> Option<usize> {
        self.coords.iter().position(|&c| c == (row, p))
    }

    pub fn label(&self, k: usize) -> String {
        self.system.label(k)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self
            .coords
            .iter()
            .enumerate()
            .map(|(root, &(row, p))| Vertex { root, row, p })
            .collect();
        v.sort_by_key(|x| (x.row, x.p));
        v
    }

    fn arrow_between(&self, a: (u32, i64), b: (u32, i64)) -> bool {
        let (i, j) = (a.0 as usize - 1, b.0 as usize - 1);
        self.rows_adj[i][j] && b.1 - a.1 == self.row_d[i].min(self.row_d[j])
    }

    /// All arrows as pairs of root indices.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, &ca) in self.coords.iter().enumerate() {
            for (b, &cb) in self.coords.iter().enumerate() {
                if self.arrow_between(ca, cb) {
                    out.push((a, b));
                }
            }
        }
        out.sort_by_key(|&(a, b)| (self.coords[a], self.coords[b]));
        out
    }

    pub fn is_sink(&self, k: usize) -> bool {
        let c = self.coords[k];
        !self.coords.iter().any(|&d| self.arrow_between(c, d))
    }

    /// The reflection functor at the sink `α_i` (`i` a node of `𝗀`).
    pub fn reflect(&self, i: usize) -> Result<CoordQuiver> {
        if i == 0 || i > self.system.rank {
            return Err(Error::InvalidInput(format!("node {i} out of range")));
        }
        let a = self.system.simple(i);
        if !self.is_sink(a) {
            return Err(Error::NotASink(i));
        }
        let mut coords = vec![(0, 0); self.len()];
        for (k, &c) in self.coords.iter().enumerate() {
            if k == a {
                let (r, q) = c;
                coords[k] = (self.row_star[r as usize - 1], q - self.shift);
            } else {
                let w = self.system.reflect_vec(i, &self.system.roots[k]);
                coords[self.system.index_of(&w).expect("s_i permutes Φ⁺ minus α_i")] = c;
            }
        }
        let mut out = self.clone();
        out.coords = coords;
        out.reflections.push(i);
        Ok(out)
    }

    /// `lt[a][b]` iff `a ≺ b`, i.e. there is a path from `b` to `a`.
    pub fn convex_order(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut reach = vec![vec![false; n]; n];
        let mut by_p: Vec<usize> = (0..n).collect();
        // Arrows raise p, so processing from the largest p settles successors first.
        by_p.sort_by_key(|&k| std::cmp::Reverse(self.coords[k].1));
        let arrows = self.arrows();
        let mut out_adj = vec![Vec::new(); n];
        for &(a, b) in &arrows {
            out_adj[a].push(b);
        }
        for &b in &by_p {
            let succ = out_adj[b].clone();
            for c in succ {
                reach[b][c] = true;
                let row = reach[c].clone();
                for (x, r) in row.into_iter().enumerate() {
                    if r {
                        reach[b][x] = true;
                    }
                }
            }
        }
        // reach[b][a]: path from b to a, i.e. a ≺ b.
        (0..n)
            .map(|a| (0..n).map(|b| reach[b][a]).collect())
            .collect()
    }

    /// Every `α, β, α+β ∈ Φ⁺` violating `α ≺ α+β ≺ β` or its mirror.
    pub fn convexity_violations(&self) -> Vec<(usize, usize)> {
        let lt = self.convex_order();
        let n = self.len();
        let mut bad = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let s: Vec<i64> = self.system.roots[a]
                    .iter()
                    .zip(&self.system.roots[b])
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(g) = self.system.index_of(&s) {
                    if !((lt[a][g] && lt[g][b]) || (lt[b][g] && lt[g][a])) {
                        bad.push((a, b));
                    }
                }
            }
        }
        bad
    }

    /// Visits every linear extension of `≺` (listed from the minimum up).
    fn for_each_extension(&self, cap: usize, mut f: impl FnMut(&[usize])) -> Result<usize> {
        let lt = self.convex_order();
        let n = self.len();
        let below: Vec<Vec<usize>> = (0..n)
            .map(|b| (0..n).filter(|&a| lt[a][b]).collect())
            .collect();
        let mut indeg: Vec<usize> = below.iter().map(|v| v.len()).collect();
        let above: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).filter(|&b| lt[a][b]).collect())
            .collect();
        let mut seq = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let mut count = 0usize;
        #[allow(clippy::too_many_arguments)]
        fn rec(
            n: usize,
            seq: &mut Vec<usize>,
            used: &mut [bool],
            indeg: &mut [usize],
            above: &[Vec<usize>],
            count: &mut usize,
            cap: usize,
            f: &mut dyn FnMut(&[usize]),
        ) -> bool {
            if seq.len() == n {
                *count += 1;
                if *count > cap {
                    return false;
                }
                f(seq);
                return true;
            }
            for k in 0..n {
                if used[k] || indeg[k] != 0 {
                    continue;
                }
                used[k] = true;
                seq.push(k);
                for &b in &above[k] {
                    indeg[b] -= 1;
                }
                let ok = rec(n, seq, used, indeg, above, count, cap, f);
                for &b in &above[k] {
                    indeg[b] += 1;
                }
                seq.pop();
                used[k] = false;
                if !ok {
                    return false;
                }
            }
            true
        }
        if rec(
            n, &mut seq, &mut used, &mut indeg, &above, &mut count, cap, &mut f,
        ) {
            Ok(count)
        } else {
            Err(Error::EnumerationCapExceeded { cap })
        }
    }

    /// Reduced words of `w₀` in the commutation class of the quiver.
    pub fn class_words(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut words = Vec::new();
        let mut err = None;
        self.for_each_extension(cap, |seq| match self.word_of(seq) {
            Ok(w) => words.push(w),
            Err(e) => err = Some(e),
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(words),
        }
    }

    /// The letters `i_k` with `α_{i_k} = s_{i_{k−1}} ⋯ s_{i_1}(β_k)`.
    fn word_of(&self, seq: &[usize]) -> Result<Vec<usize>> {
        let mut word: Vec<usize> = Vec::with_capacity(seq.len());
        for &k in seq {
            let mut v = self.system.roots[k].clone();
            for &i in &word {
                v = self.system.reflect_vec(i, &v);
            }
            let idx = self
                .system
                .index_of(&v)
                .and_then(|x| self.system.simple_node(x));
            match idx {
                Some(i) => word.push(i),
                None => {
                    return Err(Error::InvalidInput(
                        "extension is not a reduced word of w0".into(),
                    ))
                }
            }
        }
        Ok(word)
    }

    /// Pairs `(α, β)` with `α + β = γ`, ordered so that `α ≺ β`.
    pub fn pairs_of(&self, gamma: usize) -> Vec<(usize, usize)> {
        let lt = self.convex_order();
        let g = &self.system.roots[gamma];
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let s: Vec<i64> = self.system.roots[a]
                    .iter()
                    .zip(&self.system.roots[b])
                    .map(|(x, y)| x + y)
                    .collect();
                if &s == g {
                    out.push(if lt[b][a] { (b, a) } else { (a, b) });
                }
            }
        }
        out
    }

    /// `≺^b` restricted to `{e_γ} ∪ pairs`, intersected over all class words.
    /// Index 0 is `e_γ`; index `k ≥ 1` is `pairs[k − 1]`.
    pub fn bilex_relation(
        &self,
        gamma: usize,
        cap: usize,
    ) -> Result<(Vec<(usize, usize)>, Vec<Vec<bool>>)> {
        let pairs = self.pairs_of(gamma);
        let seqs: Vec<Vec<usize>> = std::iter::once(vec![gamma])
            .chain(pairs.iter().map(|&(a, b)| vec![a, b]))
            .collect();
        let m = seqs.len();
        let mut rel = vec![vec![true; m]; m];
        for (x, row) in rel.iter_mut().enumerate() {
            row[x] = false;
        }
        let mut pos = vec![0usize; self.len()];
        self.for_each_extension(cap, |seq| {
            for (k, &r) in seq.iter().enumerate() {
                pos[r] = k;
            }
            let sorted: Vec<Vec<usize>> = seqs
                .iter()
                .map(|s| {
                    let mut v: Vec<usize> = s.iter().map(|&r| pos[r]).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            for x in 0..m {
                for y in 0..m {
                    if rel[x][y] && !bilex_lt(&sorted[x], &sorted[y]) {
                        rel[x][y] = false;
                    }
                }
            }
        })?;
        Ok((pairs, rel))
    }

    /// Pairs covering `e_γ` under `≺^b`.
    pub fn minimal_pairs(&self, gamma: usize, cap: usize) -> Result<Vec<(usize, usize)>> {
        if self.system.simple_node(gamma).is_some() {
            return Ok(Vec::new());
        }
        let (pairs, rel) = self.bilex_relation(gamma, cap)?;
        Ok(covers(&rel).into_iter().map(|x| pairs[x - 1]).collect())
    }

    /// The module `V_Q(β)` attached to the coordinate of `β`.
    pub fn module(&self, k: usize) -> Result<KRLabel> {
        let (i, p) = self.coords[k];
        let kind = self.ty.kind()?;
        let (node, x) = match kind {
            Kind::A1 { .. } | Kind::D1 { .. } => (i, neg_q_pow(p)),
            Kind::B1 { n } => (i, sign_pow(n + i as i64) * QMonomial::qs().pow(p)),
            Kind::C1 { .. } => (i, neg_qs_pow(p)),
            Kind::G2 => (i, neg_qt_pow(p)),
            Kind::A2Odd { .. } | Kind::A2Even { .. } => {
                let big_n = self.ty.rank as i64;
                let half = (big_n + 1) / 2;
                let ii = i as i64;
                let star = if ii <= half { ii } else { big_n + 1 - ii };
                let c = if ii <= big_n + 1 - ii {
                    QMonomial::ONE
                } else {
                    sign_pow(big_n)
                };
                (star as u32, c * neg_q_pow(p))
            }
            Kind::D2 { n } => {
                let ii = i as i64;
                if ii < n {
                    (i, QMonomial::i().pow(n + 1 - ii) * neg_q_pow(p))
                } else {
                    (n as u32, sign_pow(ii) * neg_q_pow(p))
                }
            }
            Kind::D43 => {
                let (node, c) = match i {
                    1 => (1, QMonomial::ONE),
                    2 => (2, QMonomial::minus_one()),
                    3 => (1, QMonomial::omega()),
                    _ => (1, QMonomial::omega().pow(2)),
                };
                (node, c * neg_q_pow(p))
            }
        };
        Ok(KRLabel::v(node, 1, x))
    }

    /// Triples `(V_Q(β), V_Q(α), V_Q(γ))` for every minimal pair, plus the
    /// distance-two pairs whose intermediate pair is a KR string.
    pub fn dorey_triples(&self, cap: usize) -> Result<Vec<DoreyTriple>> {
        let cd = cartan_data(self.ty);
        let mut out = Vec::new();
        for gamma in 0..self.len() {
            if self.system.simple_node(gamma).is_some() {
                continue;
            }
            let (pairs, rel) = self.bilex_relation(gamma, cap)?;
            let minimal = covers(&rel);
            let tri = |(a, b): (usize, usize), kind: TripleKind| -> Result<DoreyTriple> {
                Ok(DoreyTriple {
                    gamma,
                    alpha: a,
                    beta: b,
                    modules: [self.module(b)?, self.module(a)?, self.module(gamma)?],
                    kind,
                })
            };
            for &x in &minimal {
                out.push(tri(pairs[x - 1], TripleKind::Minimal)?);
            }
            for y in 1..rel.len() {
                if !rel[0][y] || minimal.contains(&y) {
                    continue;
                }
                let between: Vec<usize> =
                    (1..rel.len()).filter(|&x| rel[0][x] && rel[x][y]).collect();
                if between.len() != 1 || !minimal.contains(&between[0]) {
                    continue;
                }
                let via = pairs[between[0] - 1];
                let (u, v) = (self.module(via.0)?, self.module(via.1)?);
                let kr_head = if u.node == v.node {
                    let step = -cd.qcheck_k(u.node);
                    if v.spectral == u.spectral * step.pow(2) {
                        Some(KRLabel::v(u.node, 2, u.spectral * step))
                    } else if u.spectral == v.spectral * step.pow(2) {
                        Some(KRLabel::v(u.node, 2, v.spectral * step))
                    } else {
                        None
                    }
                } else {
                    None
                };
                out.push(tri(pairs[y - 1], TripleKind::DistanceTwo { via, kr_head })?);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<serde_json::Value> = self
            .vertices()
            .iter()
            .map(|v| {
                serde_json::json!({
                    "root": self.label(v.root),
                    "coeffs": self.system.roots[v.root],
                    "i": v.row,
                    "p": v.p,
                })
            })
            .collect();
        let arrows: Vec<serde_json::Value> = self
            .arrows()
            .iter()
            .map(|&(a, b)| serde_json::json!([self.label(a), self.label(b)]))
            .collect();
        serde_json::json!({
            "type": self.ty.to_string(),
            "lie_type": format!("{:?}{}", self.system.kind, self.system.rank),
            "xi": self.xi,
            "reflections": self.reflections,
            "vertices": vertices,
            "arrows": arrows,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph AR {\n  node [shape=plaintext];\n");
        for v in self.vertices() {
            let _ = writeln!(
                s,
                "  r{} [label=\"{}\", pos=\"{},{}!\"];",
                v.root,
                self.label(v.root),
                v.p,
                -(v.row as i64)
            );
        }
        for (a, b) in self.arrows() {
            let _ = writeln!(s, "  r{a} -> r{b};");
        }
        s.push_str("}\n");
        s
    }

    /// Rows as printed, left to right: `(row, [(label, p)])`.
    pub fn rows(&self) -> Vec<Vec<(String, i64)>> {
        let nrows = self.row_d.len();
        let mut rows = vec![Vec::new(); nrows];
        for v in self.vertices() {
            rows[v.row as usize - 1].push((self.label(v.root), v.p));
        }
        rows
    }
}

/// Covers of index 0 in a strict order given as a relation matrix.
fn covers(rel: &[Vec<bool>]) -> Vec<usize> {
    (1..rel.len())
        .filter(|&y| rel[0][y] && !(1..rel.len()).any(|x| rel[0][x] && rel[x][y]))
        .collect()
}

/// Bi-lexicographic comparison of 0/1 sequences given by sorted supports.
fn bilex_lt(a: &[usize], b: &[usize]) -> bool {
    fn lex(a: &[usize], b: &[usize], from_left: bool) -> bool {
        let n = a.iter().chain(b).copied().max().unwrap_or(0) + 1;
        let mut ia = vec![0u8; n];
        let mut ib = vec![0u8; n];
        for &x in a {
            ia[x] += 1;
        }
        for &x in b {
            ib[x] += 1;
        }
        let order: Box<dyn Iterator<Item = usize>> = if from_left {
            Box::new(0..n)
        } else {
            Box::new((0..n).rev())
        };
        for k in order {
            if ia[k] != ib[k] {
                return ia[k] < ib[k];
            }
        }
        false
    }
    lex(a, b, true) && lex(a, b, false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TripleKind {
    Minimal,
    DistanceTwo {
        via: (usize, usize),
        kr_head: Option<KRLabel>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoreyTriple {
    pub gamma: usize,
    pub alpha: usize,
    pub beta: usize,
    /// `V_Q(β) ⊗ V_Q(α) ↠ V_Q(γ)`.
    pub modules: [KRLabel; 3],
    pub kind: TripleKind,
}
