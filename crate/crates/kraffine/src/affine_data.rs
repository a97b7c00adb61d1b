//! Affine type descriptors and the constants every other module reads:
//! Cartan matrix of the classical part, symmetrizers, `q_k`, `q̌_k`, `p*`,
//! the involution `i ↦ i*` and `γ`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{neg_q_pow, neg_qs_pow, QMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

/// `family_rank^(twist)` with the subscript exactly as printed, so `A3~1` is
/// `A_3^{(1)}` (four-dimensional natural representation) and `D5~2` is `D_5^{(2)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineType {
    pub family: Family,
    pub rank: u32,
    pub twist: u8,
}

/// The supported types in a shape that formula code can match on. `n` is the
/// integer appearing in the usual names `A_{n-1}^{(1)}`, `A_{2n-1}^{(2)}`,
/// `D_{n+1}^{(2)}` and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    A1 { n: i64 },
    B1 { n: i64 },
    C1 { n: i64 },
    D1 { n: i64 },
    G2,
    A2Odd { n: i64 },
    A2Even { n: i64 },
    D2 { n: i64 },
    D43,
}

impl AffineType {
    pub fn new(family: Family, rank: u32, twist: u8) -> Result<Self> {
        let t = AffineType {
            family,
            rank,
            twist,
        };
        t.kind()?;
        Ok(t)
    }

    pub fn kind(&self) -> Result<Kind> {
        let r = self.rank as i64;
        let k = match (self.family, self.twist) {
            (Family::A, 1) if r >= 1 => Kind::A1 { n: r + 1 },
            (Family::B, 1) if r >= 2 => Kind::B1 { n: r },
            (Family::C, 1) if r >= 2 => Kind::C1 { n: r },
            (Family::D, 1) if r >= 4 => Kind::D1 { n: r },
            (Family::G, 1) if r == 2 => Kind::G2,
            (Family::A, 2) if r >= 3 && r % 2 == 1 => Kind::A2Odd { n: (r + 1) / 2 },
            (Family::A, 2) if r >= 2 && r % 2 == 0 => Kind::A2Even { n: r / 2 },
            (Family::D, 2) if r >= 3 => Kind::D2 { n: r - 1 },
            (Family::D, 3) if r == 4 => Kind::D43,
            _ => return Err(Error::UnsupportedType(self.to_string())),
        };
        Ok(k)
    }

    pub fn is_twisted(&self) -> bool {
        self.twist > 1
    }

    /// Number of nodes in `I₀`.
    pub fn num_nodes(&self) -> u32 {
        match self.kind().expect("validated at construction") {
            Kind::A1 { n } => (n - 1) as u32,
            Kind::B1 { n } | Kind::C1 { n } | Kind::D1 { n } => n as u32,
            Kind::G2 | Kind::D43 => 2,
            Kind::A2Odd { n } | Kind::A2Even { n } | Kind::D2 { n } => n as u32,
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = u32> {
        1..=self.num_nodes()
    }

    pub fn check_node(&self, k: u32) -> Result<()> {
        if k >= 1 && k <= self.num_nodes() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                ty: self.to_string(),
                node: k,
            })
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}~{}", self.family, self.rank, self.twist)
    }
}

impl FromStr for AffineType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedSpec(s.to_string());
        let mut chars = s.chars();
        let fam = chars.next().ok_or_else(bad)?;
        let (sub, tw) = chars.as_str().split_once('~').ok_or_else(bad)?;
        let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
        if !digits(sub) || !digits(tw) {
            return Err(bad());
        }
        let rank: u32 = sub.parse().map_err(|_| bad())?;
        let twist: u8 = tw.parse().map_err(|_| bad())?;
        let family = match fam {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'G' => Family::G,
            'E' | 'F' => return Err(Error::UnsupportedType(s.to_string())),
            _ => return Err(bad()),
        };
        AffineType::new(family, rank, twist)
    }
}

/// Shape of the classical Dynkin diagram on `I₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classical {
    A,
    B,
    C,
    D,
    G,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    #[serde(rename = "type")]
    pub ty: AffineType,
    pub classical: Classical,
    pub nodes: Vec<u32>,
    /// `a_{ij} = ⟨h_i, α_j⟩`, indexed from 0 for node 1.
    pub cartan: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub qnode: Vec<QMonomial>,
    pub qcheck: Vec<QMonomial>,
    pub pstar: QMonomial,
    pub istar: Vec<u32>,
    pub gamma: i64,
    /// `m_i` with `V(ϖ_i)_x ≅ V(ϖ_i)_y` iff `x^{m_i} = y^{m_i}`.
    pub m: Vec<i64>,
    /// Twisted types write `M_z` for `M_{z^{m_i}}`.
    pub spectral_written_as_z: bool,
    /// Fundamental denominators must come from an extension table.
    pub extension_required: bool,
}

impl CartanData {
    pub fn idx(&self, k: u32) -> usize {
        (k - 1) as usize
    }
    pub fn q_k(&self, k: u32) -> QMonomial {
        self.qnode[self.idx(k)]
    }
    pub fn qcheck_k(&self, k: u32) -> QMonomial {
        self.qcheck[self.idx(k)]
    }
    pub fn d_k(&self, k: u32) -> i64 {
        self.d[self.idx(k)]
    }
    pub fn star(&self, k: u32) -> u32 {
        self.istar[self.idx(k)]
    }
    pub fn a(&self, i: u32, j: u32) -> i64 {
        self.cartan[self.idx(i)][self.idx(j)]
    }
    pub fn max_d(&self) -> i64 {
        *self.d.iter().max().unwrap()
    }
    /// The Pochhammer base `p*²` used by universal coefficients.
    pub fn base(&self) -> QMonomial {
        self.pstar.pow(2)
    }
    pub fn adjacent(&self, i: u32, j: u32) -> bool {
        i != j && self.a(i, j) != 0
    }
}

fn classical_edges(c: Classical, r: u32) -> Vec<(u32, u32)> {
    let mut e: Vec<(u32, u32)> = (1..r).map(|i| (i, i + 1)).collect();
    if c == Classical::D {
        e.pop();
        e.push((r - 2, r));
    }
    e
}

pub fn cartan_data(ty: AffineType) -> CartanData {
    let kind = ty.kind().expect("validated at construction");
    let r = ty.num_nodes();
    let q = QMonomial::q();
    let (classical, d): (Classical, Vec<i64>) = match kind {
        Kind::A1 { .. } => (Classical::A, vec![1; r as usize]),
        Kind::B1 { .. } | Kind::D2 { .. } | Kind::A2Even { .. } => {
            let mut d = vec![2; r as usize];
            d[r as usize - 1] = 1;
            (Classical::B, d)
        }
        Kind::C1 { .. } | Kind::A2Odd { .. } => {
            let mut d = vec![1; r as usize];
            d[r as usize - 1] = 2;
            (Classical::C, d)
        }
        Kind::D1 { .. } => (Classical::D, vec![1; r as usize]),
        Kind::G2 => (Classical::G, vec![3, 1]),
        Kind::D43 => (Classical::G, vec![1, 3]),
    };
    let mut cartan = vec![vec![0i64; r as usize]; r as usize];
    for i in 0..r as usize {
        cartan[i][i] = 2;
    }
    for (i, j) in classical_edges(classical, r) {
        let (a, b) = ((i - 1) as usize, (j - 1) as usize);
        let m = d[a].max(d[b]);
        cartan[a][b] = -m / d[a];
        cartan[b][a] = -m / d[b];
    }
    let maxd = *d.iter().max().unwrap();
    let qnode: Vec<QMonomial> = if ty.is_twisted() {
        vec![q; r as usize]
    } else {
        d.iter().map(|&di| QMonomial::q_pow(di, maxd)).collect()
    };
    let qcheck = qnode.clone();
    let pstar = match kind {
        Kind::A1 { n } => neg_q_pow(n),
        Kind::B1 { n } => -neg_q_pow(2 * n - 1),
        Kind::C1 { n } => neg_qs_pow(2 * n + 2),
        Kind::D1 { n } => neg_q_pow(2 * n - 2),
        Kind::G2 => QMonomial::qt().pow(12),
        Kind::A2Odd { n } => -q.pow(2 * n),
        Kind::A2Even { n } => -q.pow(2 * n + 1),
        Kind::D2 { n } => -(-q.pow(2)).pow(n),
        Kind::D43 => q.pow(6),
    };
    let istar: Vec<u32> = match kind {
        Kind::A1 { n } => (1..=r).map(|i| n as u32 - i).collect(),
        Kind::D1 { n } if n % 2 == 1 => (1..=r)
            .map(|i| match i {
                i if i == r - 1 => r,
                i if i == r => r - 1,
                i => i,
            })
            .collect(),
        _ => (1..=r).collect(),
    };
    let gamma = match kind {
        Kind::A1 { .. } | Kind::D1 { .. } => 1,
        Kind::G2 | Kind::D43 => 3,
        _ => 2,
    };
    // Twisted duals of untwisted algebras have m_i = (α_i, α_i)/2.
    let m = match kind {
        Kind::A2Odd { .. } | Kind::D2 { .. } | Kind::D43 => d.clone(),
        _ => vec![1; r as usize],
    };
    CartanData {
        ty,
        classical,
        nodes: (1..=r).collect(),
        cartan,
        d,
        qnode,
        qcheck,
        pstar,
        istar,
        gamma,
        m,
        spectral_written_as_z: ty.is_twisted(),
        extension_required: matches!(kind, Kind::A2Even { .. }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> AffineType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(
            t("G2~1"),
            AffineType {
                family: Family::G,
                rank: 2,
                twist: 1
            }
        );
        assert_eq!(
            t("D5~2"),
            AffineType {
                family: Family::D,
                rank: 5,
                twist: 2
            }
        );
        assert_eq!(t("D5~2").kind().unwrap(), Kind::D2 { n: 4 });
        assert!(matches!(
            "F4~1".parse::<AffineType>(),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            "E6~1".parse::<AffineType>(),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            "D3~1".parse::<AffineType>(),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            "A3".parse::<AffineType>(),
            Err(Error::MalformedSpec(_))
        ));
        assert!(matches!(
            "A~1".parse::<AffineType>(),
            Err(Error::MalformedSpec(_))
        ));
        for s in [
            "A1~1", "B3~1", "C2~1", "D4~1", "G2~1", "A5~2", "A4~2", "D3~2", "D4~3",
        ] {
            assert_eq!(t(s).to_string(), s);
        }
    }

    #[test]
    fn table_constants() {
        let a = cartan_data(t("A3~1"));
        assert_eq!(a.pstar, neg_q_pow(4));
        assert_eq!(a.d, vec![1, 1, 1]);
        assert_eq!(a.istar, vec![3, 2, 1]);

        let b = cartan_data(t("B3~1"));
        assert_eq!(b.pstar, -neg_q_pow(5));
        assert_eq!(b.d, vec![2, 2, 1]);
        assert_eq!(b.q_k(3), QMonomial::q_pow(1, 2));
        assert_eq!(
            b.cartan,
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );

        let g = cartan_data(t("D4~3"));
        assert_eq!(g.pstar, QMonomial::q().pow(6));
        assert_eq!(g.qcheck, g.qnode);

        let g2 = cartan_data(t("G2~1"));
        assert_eq!(g2.cartan, vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.q_k(2), QMonomial::qt());

        let d5 = cartan_data(t("D5~1"));
        assert_eq!(d5.istar, vec![1, 2, 3, 5, 4]);
    }

    #[test]
    fn invariants_all_types() {
        for s in [
            "A1~1", "A2~1", "A5~1", "B2~1", "B5~1", "C2~1", "C5~1", "D4~1", "D5~1", "G2~1", "A3~2",
            "A5~2", "A2~2", "A4~2", "D3~2", "D6~2", "D4~3",
        ] {
            let c = cartan_data(t(s));
            assert_eq!(*c.d.iter().min().unwrap(), 1, "{s}");
            for k in t(s).nodes() {
                assert_eq!(c.star(c.star(k)), k, "{s}");
            }
            let p2 = c.base();
            assert_eq!(p2.e12() % 12, 0, "{s}");
            assert!(p2.zeta() == 0 || p2.zeta() == 12, "{s}");
            // D·A symmetric
            for i in t(s).nodes() {
                for j in t(s).nodes() {
                    assert_eq!(c.d_k(i) * c.a(i, j), c.d_k(j) * c.a(j, i), "{s}");
                }
            }
        }
    }
}
