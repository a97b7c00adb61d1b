//! Displayed Laurent-membership instances: a surjection `M' ⊗ M'' ↠ M`, a probe
//! `N`, and the numerator that the ratio reduces to over `d_{N,M}(z)`.

use kraffine::scalar::{neg_q_pow as nq, neg_qs_pow as nqs, sign_pow as sgn};
use kraffine::ucoef::{KrModule, Side};
use kraffine::QMonomial;

pub struct AkCase {
    pub label: String,
    pub ty: &'static str,
    pub probe: KrModule,
    pub side: Side,
    pub factors: (KrModule, KrModule),
    pub target: KrModule,
    pub numerator: Vec<QMonomial>,
}

fn v(k: u32, m: u32, a: QMonomial) -> KrModule {
    KrModule::new(k, m, a)
}

fn one(k: u32, m: u32) -> KrModule {
    KrModule::new(k, m, QMonomial::ONE)
}

fn qs(e: i64) -> QMonomial {
    QMonomial::qs().pow(e)
}

/// Roots of `z³ − (−q)^{3e}`.
fn cube(e: i64) -> [QMonomial; 3] {
    let w = QMonomial::omega();
    [nq(e), nq(e) * w, nq(e) * w.pow(2)]
}

/// `V(k^{m−1})_{x} ⊗ V(k)_{x^{1−m}} ↠ V(k^m)` with `x` a step.
fn fuse_left(k: u32, m: u32, step: fn(i64) -> QMonomial) -> (KrModule, KrModule) {
    (v(k, m - 1, step(1)), v(k, 1, step(1 - m as i64)))
}

/// `V(k)_{x^{m−1}} ⊗ V(k^{m−1})_{x^{−1}} ↠ V(k^m)`.
fn fuse_right(k: u32, m: u32, step: fn(i64) -> QMonomial) -> (KrModule, KrModule) {
    (v(k, 1, step(m as i64 - 1)), v(k, m - 1, step(-1)))
}

fn case(
    label: String,
    ty: &'static str,
    probe: KrModule,
    factors: (KrModule, KrModule),
    target: KrModule,
    numerator: Vec<QMonomial>,
) -> AkCase {
    AkCase {
        label,
        ty,
        probe,
        side: Side::Left,
        factors,
        target,
        numerator,
    }
}

pub fn cases() -> Vec<AkCase> {
    let mut out = Vec::new();

    // Type A_{n-1}^{(1)} with n = 6.
    for m in 2..=4u32 {
        let mi = m as i64;
        out.push(case(
            format!("A5~1 d_{{1,1^m}} step, m={m}"),
            "A5~1",
            one(1, 1),
            fuse_left(1, m, nq),
            one(1, m),
            vec![nq(mi - 1), nq(mi + 1)],
        ));
        out.push(case(
            format!("A5~1 d_{{1,1^m}} step', m={m}"),
            "A5~1",
            one(1, 1),
            fuse_right(1, m, nq),
            one(1, m),
            vec![nq(3 - mi), nq(mi + 1)],
        ));
        for k in 2..=3u32 {
            let ki = k as i64;
            out.push(case(
                format!("A5~1 d_{{k,1^m}} step, k={k} m={m}"),
                "A5~1",
                one(k, 1),
                fuse_left(1, m, nq),
                one(1, m),
                vec![nq(mi + ki - 2), nq(mi + ki)],
            ));
            out.push(case(
                format!("A5~1 d_{{1,k^m}} step, k={k} m={m}"),
                "A5~1",
                one(1, 1),
                fuse_left(k, m, nq),
                one(k, m),
                vec![nq(mi + ki - 2), nq(mi + ki)],
            ));
            out.push(case(
                format!("A5~1 d_{{1,k^m}} step', k={k} m={m}"),
                "A5~1",
                one(1, 1),
                fuse_right(k, m, nq),
                one(k, m),
                vec![nq(2 + ki - mi), nq(mi + ki)],
            ));
        }
    }

    // Type B_n^{(1)}.
    for (ty, n) in [("B3~1", 3i64), ("B4~1", 4)] {
        let nu = n as u32;
        for m in 2..=4u32 {
            let mi = m as i64;
            out.push(case(
                format!("{ty} d_{{1,1^m}} step, m={m}"),
                ty,
                one(1, 1),
                fuse_left(1, m, nq),
                one(1, m),
                vec![
                    nq(mi - 1),
                    -nq(2 * n + mi - 4),
                    nq(mi + 1),
                    -nq(2 * n + mi - 2),
                ],
            ));
            out.push(case(
                format!("{ty} d_{{1,1^m}} step', m={m}"),
                ty,
                one(1, 1),
                fuse_right(1, m, nq),
                one(1, m),
                vec![nq(3 - mi), -nq(2 * n - mi), nq(mi + 1), -nq(2 * n + mi - 2)],
            ));
        }
        out.push(case(
            format!("{ty} d_{{1,n^2}}"),
            ty,
            one(1, 1),
            (v(nu, 1, nqs(1)), v(nu, 1, nqs(-1))),
            one(nu, 2),
            vec![sgn(n) * qs(2 * n), sgn(n) * qs(2 * n + 2)],
        ));
        for m in 3..=4u32 {
            let mi = m as i64;
            let s = sgn(n + mi);
            out.push(case(
                format!("{ty} d_{{1,n^m}} step, m={m}"),
                ty,
                one(1, 1),
                fuse_left(nu, m, nqs),
                one(nu, m),
                vec![
                    s * qs(2 * n + mi - 4),
                    s * qs(2 * n + mi - 2),
                    s * qs(2 * n + mi),
                ],
            ));
            out.push(case(
                format!("{ty} d_{{1,n^m}} step', m={m}"),
                ty,
                one(1, 1),
                fuse_right(nu, m, nqs),
                one(nu, m),
                // Printed as q_s^{2n−m}; the factor d_{1,n}((−q_s)^{m−1}z) contributes q_s^{2n−m+2},
                // the only reading under which the stated ambiguity sits at m = 2.
                vec![
                    s * qs(2 * n - mi + 2),
                    s * qs(2 * n + mi - 2),
                    s * qs(2 * n + mi),
                ],
            ));
        }
        for m in 2..=4u32 {
            let mi = m as i64;
            let mut num = Vec::new();
            for s in 1..=n {
                num.push(nqs(4 * s + mi - 5));
                num.push(nqs(4 * s + mi - 3));
            }
            out.push(case(
                format!("{ty} d_{{n,n^m}} step, m={m}"),
                ty,
                one(nu, 1),
                fuse_left(nu, m, nqs),
                one(nu, m),
                num,
            ));
            let mut num = Vec::new();
            for s in 1..=n {
                num.push(nqs(4 * s - mi - 1));
                num.push(nqs(4 * s + mi - 3));
            }
            out.push(case(
                format!("{ty} d_{{n,n^m}} step', m={m}"),
                ty,
                one(nu, 1),
                fuse_right(nu, m, nqs),
                one(nu, m),
                num,
            ));
        }
    }

    // Type C_n^{(1)}.
    for (ty, n) in [("C3~1", 3i64), ("C4~1", 4)] {
        let nu = n as u32;
        for m in 2..=4u32 {
            let mi = m as i64;
            out.push(case(
                format!("{ty} d_{{1,1^m}} step, m={m}"),
                ty,
                one(1, 1),
                fuse_left(1, m, nqs),
                one(1, m),
                vec![
                    nqs(mi - 1),
                    nqs(2 * n + mi - 1),
                    nqs(mi + 1),
                    nqs(2 * n + mi + 1),
                ],
            ));
            out.push(case(
                format!("{ty} d_{{1,1^m}} step', m={m}"),
                ty,
                one(1, 1),
                fuse_right(1, m, nqs),
                one(1, m),
                vec![
                    nqs(3 - mi),
                    nqs(2 * n - mi + 3),
                    nqs(mi + 1),
                    nqs(2 * n + mi + 1),
                ],
            ));
            for k in 2..nu {
                let ki = k as i64;
                out.push(case(
                    format!("{ty} d_{{1,k^m}} step, k={k} m={m}"),
                    ty,
                    one(1, 1),
                    fuse_left(k, m, nqs),
                    one(k, m),
                    vec![
                        nqs(mi + ki - 2),
                        nqs(2 * n + mi - ki),
                        nqs(mi + ki),
                        nqs(2 * n + mi - ki + 2),
                    ],
                ));
                out.push(case(
                    format!("{ty} d_{{1,k^m}} step', k={k} m={m}"),
                    ty,
                    one(1, 1),
                    fuse_right(k, m, nqs),
                    one(k, m),
                    vec![
                        nqs(2 + ki - mi),
                        nqs(2 * n - mi - ki + 4),
                        nqs(mi + ki),
                        nqs(2 * n + mi - ki + 2),
                    ],
                ));
            }
        }
        out.push(case(
            format!("{ty} d_{{1,1^2}} via spin"),
            ty,
            one(1, 1),
            (v(nu, 1, nqs(-n)), v(nu, 1, nqs(n))),
            one(1, 2),
            vec![nqs(2 * n + 3), nqs(3)],
        ));
        out.push(case(
            format!("{ty} d_{{1,1^{{n+2}}}}"),
            ty,
            one(1, 1),
            (v(1, 2, nqs(n)), v(1, nu, nqs(-2))),
            one(1, nu + 2),
            vec![nqs(3 - n), nqs(n + 3), nqs(n + 3), nqs(3 * n + 3)],
        ));
    }

    // Type D_n^{(1)}.
    for (ty, n) in [("D5~1", 5i64), ("D6~1", 6)] {
        let nu = n as u32;
        for m in 2..=4u32 {
            let mi = m as i64;
            out.push(case(
                format!("{ty} d_{{1,n^m}} step, m={m}"),
                ty,
                one(1, 1),
                fuse_left(nu, m, nq),
                one(nu, m),
                vec![nq(n + mi - 3), nq(n + mi - 1)],
            ));
            out.push(case(
                format!("{ty} d_{{1,n^m}} step', m={m}"),
                ty,
                one(1, 1),
                fuse_right(nu, m, nq),
                one(nu, m),
                vec![nq(n - mi + 1), nq(n + mi - 1)],
            ));
            out.push(case(
                format!("{ty} d_{{1,1^m}} step, m={m}"),
                ty,
                one(1, 1),
                fuse_left(1, m, nq),
                one(1, m),
                vec![
                    nq(mi - 1),
                    nq(2 * n + mi - 5),
                    nq(mi + 1),
                    nq(2 * n + mi - 3),
                ],
            ));
            out.push(case(
                format!("{ty} d_{{1,1^m}} step', m={m}"),
                ty,
                one(1, 1),
                fuse_right(1, m, nq),
                one(1, m),
                vec![
                    nq(3 - mi),
                    nq(2 * n - mi - 1),
                    nq(mi + 1),
                    nq(2 * n + mi - 3),
                ],
            ));
            for k in 2..=(nu - 2) {
                let ki = k as i64;
                out.push(case(
                    format!("{ty} d_{{1,k^m}} step, k={k} m={m}"),
                    ty,
                    one(1, 1),
                    fuse_left(k, m, nq),
                    one(k, m),
                    vec![
                        nq(ki + mi - 2),
                        nq(2 * n - ki + mi - 4),
                        nq(ki + mi),
                        nq(2 * n + mi - ki - 2),
                    ],
                ));
                out.push(case(
                    format!("{ty} d_{{1,k^m}} step', k={k} m={m}"),
                    ty,
                    one(1, 1),
                    fuse_right(k, m, nq),
                    one(k, m),
                    vec![
                        nq(ki - mi + 2),
                        nq(2 * n - ki - mi),
                        nq(ki + mi),
                        nq(2 * n - ki + mi - 2),
                    ],
                ));
            }
            // Spin-spin steps: d_{n,n^m} for even n, d_{n-1,n^m} for odd n.
            let (probe, half, off) = if n % 2 == 0 {
                (nu, n / 2, 0)
            } else {
                (nu - 1, (n - 1) / 2, 2)
            };
            let mut num = Vec::new();
            for s in 1..=half {
                num.push(nq(4 * s + mi - 5 + off));
                num.push(nq(4 * s + mi - 3 + off));
            }
            out.push(case(
                format!("{ty} d_{{{probe},n^m}} step, m={m}"),
                ty,
                one(probe, 1),
                fuse_left(nu, m, nq),
                one(nu, m),
                num,
            ));
            let mut num = Vec::new();
            for s in 1..=half {
                num.push(nq(4 * s - mi - 1 + off));
                num.push(nq(4 * s + mi - 3 + off));
            }
            out.push(case(
                format!("{ty} d_{{{probe},n^m}} step', m={m}"),
                ty,
                one(probe, 1),
                fuse_right(nu, m, nq),
                one(nu, m),
                num,
            ));
        }
    }

    // Type D_4^{(3)}, node 2.
    for m in 2..=4u32 {
        let mi = m as i64;
        let tail = [cube(mi + 1), cube(mi + 3), cube(mi + 3), cube(mi + 5)].concat();
        let mut num = [cube(mi - 1), cube(mi + 1), cube(mi + 1), cube(mi + 3)].concat();
        num.extend(&tail);
        out.push(case(
            format!("D4~3 d_{{2,2^m}} step, m={m}"),
            "D4~3",
            one(2, 1),
            fuse_left(2, m, nq),
            one(2, m),
            num,
        ));
        let mut num = [cube(3 - mi), cube(5 - mi), cube(5 - mi), cube(7 - mi)].concat();
        num.extend(&tail);
        out.push(case(
            format!("D4~3 d_{{2,2^m}} step', m={m}"),
            "D4~3",
            one(2, 1),
            fuse_right(2, m, nq),
            one(2, m),
            num,
        ));
    }
    out
}
