//! Higher Dorey rules: KR heads of two-fold KR tensor products, and the
//! dominant-monomial multiplicity check behind them in type A.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::affine_data::{cartan_data, AffineType, Kind};
use crate::error::{Error, Result};
use crate::qchar::dominant_monomials;
use crate::scalar::{neg_q_pow, neg_qt_pow, sign_pow, QMonomial};
use crate::tsystem::{type_a_character, KRLabel};

/// Which higher Dorey rule to instantiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DoreyCase {
    /// `V(l^m)_{(-q)^{-k}} ⊗ V(k^m)_{(-q)^l} ↠ V((k+l)^m)`.
    General { k: u32, l: u32 },
    /// Type B: `↠ V(n^{2m})`.
    BSpin { k: u32 },
    /// Type C: `V(n^m) ⊗ V(n^m) ↠ V(k^{2m})`.
    CSpin { k: u32 },
    /// Type D: spin modules `↠ V(l^m)`.
    DSpin { l: u32 },
    /// Type D with `k + l = n - 1`: `↠ V((n-1)^m) ⊗ V(n^m)`.
    DSum { k: u32, l: u32 },
    /// `G_2`: `↠ V(2^{3m})`.
    G2,
    /// `D_{n+1}^{(2)}`: spin modules `↠ V(k^m)`.
    DTwisted { k: u32 },
    /// `D_4^{(3)}`: `↠ V(2^m)`.
    D43,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoreyInstance {
    pub ty: AffineType,
    pub case: DoreyCase,
    pub factors: [KRLabel; 2],
    pub target: Vec<KRLabel>,
}

fn violated(cond: &str) -> Error {
    Error::CaseConditionViolated(cond.to_string())
}

/// `(-q^2)^{e/2}`, with `(-q^2)^{1/2} = ιq`.
fn neg_q2_half(e: i64) -> QMonomial {
    QMonomial::i().pow(e) * QMonomial::q().pow(e)
}

/// All instances of the rule `case` at level `m`.
pub fn higher_dorey_instances(
    ty: AffineType,
    case: DoreyCase,
    m: u32,
) -> Result<Vec<DoreyInstance>> {
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let kind = ty.kind()?;
    let nodes = ty.num_nodes();
    let v = KRLabel::v;
    let one = QMonomial::ONE;
    let inst = |f0: KRLabel, f1: KRLabel, target: Vec<KRLabel>| DoreyInstance {
        ty,
        case,
        factors: [f0, f1],
        target,
    };
    let out = match (case, kind) {
        (DoreyCase::General { k, l }, _) => {
            if k == 0 || l == 0 {
                return Err(violated("1 ≤ k, l"));
            }
            let sum = k + l;
            match kind {
                Kind::A1 { .. } if sum > nodes => return Err(violated("k + l ≤ n")),
                Kind::D1 { .. } if sum + 1 >= nodes => return Err(violated("k + l < n - 1")),
                Kind::B1 { .. }
                | Kind::C1 { .. }
                | Kind::A2Odd { .. }
                | Kind::A2Even { .. }
                | Kind::D2 { .. }
                    if sum >= nodes =>
                {
                    return Err(violated("k + l < n"))
                }
                Kind::G2 | Kind::D43 => {
                    return Err(violated("general rule needs a nonexceptional type"))
                }
                _ => {}
            }
            let (k6, l6) = (k as i64, l as i64);
            vec![inst(
                v(l, m, neg_q_pow(-k6)),
                v(k, m, neg_q_pow(l6)),
                vec![v(sum, m, one)],
            )]
        }
        (DoreyCase::BSpin { k }, Kind::B1 { n }) => {
            if k == 0 || k as i64 >= n {
                return Err(violated("1 ≤ k ≤ n - 1"));
            }
            let (n6, k6, m6) = (n, k as i64, m as i64);
            let q = QMonomial::q();
            vec![inst(
                v(k, m, sign_pow(n6 + m6 - k6) * q.pow(-(n6 - k6))),
                v((n6 - k6) as u32, m, sign_pow(k6 + m6) * q.pow(k6)),
                vec![v(n as u32, 2 * m, one)],
            )]
        }
        (DoreyCase::CSpin { k }, Kind::C1 { n }) => {
            if k == 0 || k as i64 >= n {
                return Err(violated("1 ≤ k ≤ n - 1"));
            }
            let (n6, k6, m6) = (n, k as i64, m as i64);
            let qs = QMonomial::qs();
            vec![inst(
                v(n as u32, m, sign_pow(-n6 - m6 + k6) * qs.pow(-1 - n6 + k6)),
                v(n as u32, m, sign_pow(n6 + m6 - k6) * qs.pow(n6 + 1 - k6)),
                vec![v(k, 2 * m, one)],
            )]
        }
        (DoreyCase::DSpin { l }, Kind::D1 { n }) => {
            if l == 0 || l as i64 > n - 2 {
                return Err(violated("1 ≤ l ≤ n - 2"));
            }
            let (n6, l6) = (n, l as i64);
            let pairs: &[(i64, i64)] = if (n6 - l6) % 2 == 0 {
                &[(n6 - 1, n6 - 1), (n6, n6)]
            } else {
                &[(n6 - 1, n6), (n6, n6 - 1)]
            };
            pairs
                .iter()
                .map(|&(a, b)| {
                    inst(
                        v(a as u32, m, neg_q_pow(-n6 + l6 + 1)),
                        v(b as u32, m, neg_q_pow(n6 - l6 - 1)),
                        vec![v(l, m, one)],
                    )
                })
                .collect()
        }
        (DoreyCase::DSum { k, l }, Kind::D1 { n }) => {
            if k == 0 || l == 0 || (k + l) as i64 != n - 1 {
                return Err(violated("k + l = n - 1"));
            }
            let n = n as u32;
            vec![inst(
                v(l, m, neg_q_pow(-(k as i64))),
                v(k, m, neg_q_pow(l as i64)),
                vec![v(n - 1, m, one), v(n, m, one)],
            )]
        }
        (DoreyCase::G2, Kind::G2) => {
            vec![inst(
                v(1, m, neg_qt_pow(-3)),
                v(1, m, neg_qt_pow(3)),
                vec![v(2, 3 * m, one)],
            )]
        }
        (DoreyCase::DTwisted { k }, Kind::D2 { n }) => {
            if k == 0 || k as i64 >= n {
                return Err(violated("1 ≤ k ≤ n - 1"));
            }
            let e = n - k as i64;
            let iota = QMonomial::i();
            [iota, -iota]
                .into_iter()
                .map(|s| {
                    inst(
                        v(n as u32, m, s * neg_q2_half(-e)),
                        v(n as u32, m, -s * neg_q2_half(e)),
                        vec![v(k, m, one)],
                    )
                })
                .collect()
        }
        (DoreyCase::D43, Kind::D43) => {
            vec![inst(
                v(1, m, neg_q_pow(-1)),
                v(1, m, neg_q_pow(1)),
                vec![v(2, m, one)],
            )]
        }
        (case, _) => {
            return Err(Error::UnsupportedType(format!(
                "{case:?} does not apply to {ty}"
            )))
        }
    };
    Ok(out)
}

impl DoreyInstance {
    /// Factor weights minus target weight is a nonnegative combination of simple roots.
    pub fn weights_balance(&self) -> bool {
        let cd = cartan_data(self.ty);
        let nn = cd.nodes.len();
        let mut diff = vec![Ratio::from_integer(0i64); nn];
        for l in &self.factors {
            diff[cd.idx(l.node)] += l.level as i64;
        }
        for l in &self.target {
            diff[cd.idx(l.node)] -= l.level as i64;
        }
        // Solve diff_j = Σ_i a(j,i) c_i for c by Gaussian elimination.
        let mut mat: Vec<Vec<Ratio<i64>>> = (0..nn)
            .map(|j| {
                let mut row: Vec<Ratio<i64>> = cd
                    .nodes
                    .iter()
                    .map(|&i| Ratio::from_integer(cd.a(cd.nodes[j], i)))
                    .collect();
                row.push(diff[j]);
                row
            })
            .collect();
        for col in 0..nn {
            let Some(piv) = (col..nn).find(|&r| !mat[r][col].is_zero()) else {
                return false;
            };
            mat.swap(col, piv);
            let p = mat[col][col];
            for x in mat[col].iter_mut() {
                *x /= p;
            }
            for r in 0..nn {
                if r != col && !mat[r][col].is_zero() {
                    let f = mat[r][col];
                    for c in 0..=nn {
                        let sub = f * mat[col][c];
                        mat[r][c] -= sub;
                    }
                }
            }
        }
        mat.iter().all(|row| !row[nn].is_negative())
    }
}

/// Coefficient of the target's highest monomial in `χ(F₀) χ(F₁)`, in type `A^{(1)}`.
pub fn verify_dominant_multiplicity(inst: &DoreyInstance, cap: usize) -> Result<BigInt> {
    let Kind::A1 { n } = inst.ty.kind()? else {
        return Err(Error::UnsupportedType(format!(
            "{}: multiplicity check is type A only",
            inst.ty
        )));
    };
    let n = n as u32;
    let product =
        &type_a_character(n, inst.factors[0], cap)? * &type_a_character(n, inst.factors[1], cap)?;
    let mut target = crate::qchar::QCharacter::one();
    for l in &inst.target {
        target = &target * &type_a_character(n, *l, cap)?;
    }
    // A type-A KR module has a single dominant monomial.
    let top = dominant_monomials(&target)
        .into_iter()
        .next()
        .map(|(y, _)| y)
        .ok_or_else(|| Error::InvalidInput("target has no dominant monomial".into()))?;
    let coeff = product
        .terms()
        .find(|(y, _)| **y == top)
        .map(|(_, c)| c.clone())
        .unwrap_or_default();
    Ok(coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> AffineType {
        s.parse().unwrap()
    }

    #[test]
    fn type_a_example() {
        let xs = higher_dorey_instances(t("A5~1"), DoreyCase::General { k: 2, l: 1 }, 2).unwrap();
        let x = &xs[0];
        assert_eq!(
            x.factors,
            [
                KRLabel::v(1, 2, neg_q_pow(-2)),
                KRLabel::v(2, 2, neg_q_pow(1))
            ]
        );
        assert_eq!(x.target, vec![KRLabel::v(3, 2, QMonomial::ONE)]);
        assert!(x.weights_balance());
    }

    #[test]
    fn g2_example() {
        let x = &higher_dorey_instances(t("G2~1"), DoreyCase::G2, 1).unwrap()[0];
        assert_eq!(x.factors[0].spectral, neg_qt_pow(-3));
        assert_eq!(x.target, vec![KRLabel::v(2, 3, QMonomial::ONE)]);
        assert!(x.weights_balance());
    }

    #[test]
    fn range_checks() {
        let e = higher_dorey_instances(t("B3~1"), DoreyCase::BSpin { k: 3 }, 1);
        assert!(matches!(e, Err(Error::CaseConditionViolated(_))));
        let e = higher_dorey_instances(t("D5~1"), DoreyCase::General { k: 2, l: 2 }, 1);
        assert!(matches!(e, Err(Error::CaseConditionViolated(_))));
        let e = higher_dorey_instances(t("C3~1"), DoreyCase::G2, 1);
        assert!(matches!(e, Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn d_spin_parity() {
        let xs = higher_dorey_instances(t("D5~1"), DoreyCase::DSpin { l: 1 }, 1).unwrap();
        let pairs: Vec<_> = xs
            .iter()
            .map(|x| (x.factors[0].node, x.factors[1].node))
            .collect();
        assert_eq!(pairs, vec![(4, 4), (5, 5)]);
        assert!(xs.iter().all(|x| x.weights_balance()));
        let xs = higher_dorey_instances(t("D5~1"), DoreyCase::DSpin { l: 2 }, 1).unwrap();
        assert_eq!(xs[0].factors[0].node + xs[0].factors[1].node, 9);
    }

    #[test]
    fn twisted_d_shift() {
        let xs = higher_dorey_instances(t("D4~2"), DoreyCase::DTwisted { k: 2 }, 1).unwrap();
        assert_eq!(xs.len(), 2);
        // n - k = 1: ι(-q²)^{-1/2} = q^{-1} and -ι(-q²)^{1/2} = q.
        let f = xs[0].factors;
        assert_eq!(
            (f[0].spectral, f[1].spectral),
            (QMonomial::q().inv(), QMonomial::q())
        );
        let f = xs[1].factors;
        assert_eq!(
            (f[0].spectral, f[1].spectral),
            (-QMonomial::q().inv(), -QMonomial::q())
        );
        assert!(xs.iter().all(|x| x.weights_balance()));
    }

    #[test]
    fn multiplicity_and_negative_control() {
        let mut x = higher_dorey_instances(t("A4~1"), DoreyCase::General { k: 2, l: 1 }, 1)
            .unwrap()
            .remove(0);
        assert_eq!(
            verify_dominant_multiplicity(&x, 10_000).unwrap(),
            BigInt::from(1)
        );
        x.factors[1].spectral = x.factors[1].spectral * QMonomial::q().pow(2);
        assert_eq!(
            verify_dominant_multiplicity(&x, 10_000).unwrap(),
            BigInt::from(0)
        );
    }
}
