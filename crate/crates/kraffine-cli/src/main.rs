use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kraffine::arquiver::{build_gamma, TripleKind};
use kraffine::commuting::{
    hl_quiver, kr_module, parse_module_list, schur_weyl_quiver, tensor_simple,
    verify_commuting_family, SWDatum,
};
use kraffine::dorey::{higher_dorey_instances, verify_dominant_multiplicity, DoreyCase};
use kraffine::qchar::{
    classical_dimension, dominant_monomials, kr_highest_monomial, kr_qcharacter_type_a,
};
use kraffine::tsystem::{convert_identity, tsystem_identities, verify_tsystem_qchar, Convention};
use kraffine::ucoef::{
    ak_ratio_check, canonical_eq_mod_units, ucoef_from_denominators, universal_coefficient,
    KrModule, Side,
};
use kraffine::{AffineType, Denominators, Error, FundamentalTable, QMonomial};

#[derive(Parser)]
#[command(
    name = "kraffine",
    version,
    about = "Exact denominators, universal coefficients, q-characters, \
T-systems, Dorey rules and commuting families for KR modules"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Extension table of fundamental denominators (`TYPE k l : root root ...` per line).
    #[arg(long, global = true, value_name = "FILE")]
    fundamentals: Option<PathBuf>,
    /// Allow conjectural (E-type) output.
    #[arg(long, global = true)]
    allow_conjecture: bool,
    /// Cap on enumerated tableaux.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_tableaux: usize,
    /// Cap on enumerated commutation-class words.
    #[arg(long, global = true, default_value_t = 500_000)]
    max_words: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TypeArg {
    /// Affine type, e.g. `A3~1`, `D5~2`, `G2~1`.
    #[arg(long = "type", value_name = "T")]
    ty: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Denominator d_{k^m,l^p}(z) from two `--kr k^m`.
    Denom {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, num_args = 1, required = true, value_name = "k^m")]
        kr: Vec<String>,
        /// Use the explicit D^(2) formulas instead of the substitution rules.
        #[arg(long)]
        explicit: bool,
    },
    /// Universal coefficient a_{k^m,l^p}(z), optionally checked against denominators.
    Ucoef {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, num_args = 1, required = true, value_name = "k^m")]
        kr: Vec<String>,
        /// Also rebuild from denominators and compare up to units.
        #[arg(long)]
        check: bool,
    },
    /// Laurent-membership ratio for a surjection M' ⊗ M'' ↠ M against a probe N.
    AkCheck {
        #[command(flatten)]
        t: TypeArg,
        /// Two `k^m@a` tensor factors.
        #[arg(long, num_args = 1, required = true, value_name = "k^m@a")]
        factor: Vec<String>,
        #[arg(long, value_name = "k^m@a")]
        target: String,
        #[arg(long, value_name = "k^m@a")]
        probe: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// q-character of V(k^m)_a (full expansion in type A, highest monomial otherwise).
    Qchar {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, value_name = "k^m")]
        kr: String,
        #[arg(long, default_value = "1")]
        spectral: String,
    },
    /// T-system identity with middle term X^(i)_M ⊗ X^(i)_M.
    Tsys {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        node: u32,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value = "1")]
        spectral: String,
        #[arg(long, value_enum, default_value_t = ConvArg::V)]
        convention: ConvArg,
        /// Check W→V conversion and, in type A, the q-character identity.
        #[arg(long)]
        verify: bool,
    },
    /// Fundamental Dorey triples from the AR quiver, or higher Dorey instances.
    Dorey {
        #[command(flatten)]
        t: TypeArg,
        /// Height ξ₁ of the AR quiver.
        #[arg(long, default_value_t = 0)]
        xi: i64,
        #[arg(long)]
        higher: bool,
        #[arg(long, value_enum, default_value_t = CaseArg::General)]
        case: CaseArg,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Simplicity of a tensor product of KR modules listed in FILE.
    Simple {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, value_name = "FILE")]
        modules: PathBuf,
    },
    /// Commuting-family check of the Hernandez–Leclerc cluster modules.
    HlCheck {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        depth: i64,
    },
    /// (Folded) AR quiver in coordinates.
    Ar {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        xi: i64,
        /// Comma-separated sinks to reflect at, in order.
        #[arg(long, value_delimiter = ',')]
        reflect: Vec<usize>,
        #[arg(long)]
        dot: bool,
    },
    /// Schur–Weyl quiver of a datum (JSON file) or of the AR quiver's simple roots.
    SwQuiver {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, value_name = "FILE", conflicts_with = "xi")]
        datum: Option<PathBuf>,
        #[arg(long)]
        xi: Option<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvArg {
    W,
    V,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    General,
    BSpin,
    CSpin,
    DSpin,
    DSum,
    G2,
    DTwisted,
    D43,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{out}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let domain = e.downcast_ref::<Error>().is_some();
            ExitCode::from(if domain { 2 } else { 1 })
        }
    }
}

fn parse_type(cli: &Cli, s: &str) -> anyhow::Result<AffineType> {
    if s.starts_with('E') || s.starts_with('F') {
        let note = if cli.allow_conjecture {
            "CONJECTURE: no E/F-type data is built in"
        } else {
            "E/F-type formulas are conjectural; pass --allow-conjecture"
        };
        return Err(Error::UnsupportedType(format!("{s} ({note})")).into());
    }
    Ok(s.parse::<AffineType>()?)
}

fn parse_km(s: &str) -> anyhow::Result<(u32, u32)> {
    let (k, m) = s
        .split_once('^')
        .with_context(|| format!("expected k^m, got `{s}`"))?;
    let k = k
        .trim()
        .parse()
        .with_context(|| format!("bad node in `{s}`"))?;
    let m = m
        .trim()
        .parse()
        .with_context(|| format!("bad level in `{s}`"))?;
    Ok((k, m))
}

fn parse_module(s: &str) -> anyhow::Result<KrModule> {
    let (km, a) = s
        .split_once('@')
        .with_context(|| format!("expected k^m@a, got `{s}`"))?;
    let (k, m) = parse_km(km)?;
    Ok(KrModule::new(k, m, a.trim().parse::<QMonomial>()?))
}

fn two(kr: &[String]) -> anyhow::Result<((u32, u32), (u32, u32))> {
    anyhow::ensure!(kr.len() == 2, "exactly two --kr arguments are required");
    Ok((parse_km(&kr[0])?, parse_km(&kr[1])?))
}

fn render(cli: &Cli, v: Value, text: String) -> String {
    if cli.json {
        serde_json::to_string(&v).expect("serialisable")
    } else {
        text
    }
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    let table = match &cli.fundamentals {
        Some(p) => Some(FundamentalTable::load(p)?),
        None => None,
    };
    let dens = |ty: AffineType| match &table {
        Some(t) => Denominators::with_extensions(ty, t),
        None => Denominators::new(ty),
    };
    match &cli.cmd {
        Cmd::Denom { t, kr, explicit } => {
            let ty = parse_type(cli, &t.ty)?;
            let ((k, m), (l, p)) = two(kr)?;
            let den = dens(ty);
            let d = if *explicit {
                den.d2_explicit(k, m, l, p)?
            } else {
                den.kr(k, m, l, p)?
            };
            Ok(render(
                cli,
                d.to_json(),
                format!("d_{{{k}^{m},{l}^{p}}}(z) = {d}"),
            ))
        }
        Cmd::Ucoef { t, kr, check } => {
            let ty = parse_type(cli, &t.ty)?;
            let ((k, m), (l, p)) = two(kr)?;
            let a = universal_coefficient(ty, k, m, l, p)?;
            let mut v = json!({ "coefficient": a.to_json() });
            let mut text = format!("a_{{{k}^{m},{l}^{p}}}(z) = {a}");
            if *check {
                let b = ucoef_from_denominators(&dens(ty), k, m, l, p)?;
                let same = canonical_eq_mod_units(&a, &b)?;
                v["from_denominators"] = b.to_json();
                v["consistent"] = json!(same);
                text.push_str(&format!("\nfrom denominators: {b}\nconsistent: {same}"));
            }
            Ok(render(cli, v, text))
        }
        Cmd::AkCheck {
            t,
            factor,
            target,
            probe,
            side,
        } => {
            let ty = parse_type(cli, &t.ty)?;
            anyhow::ensure!(
                factor.len() == 2,
                "exactly two --factor arguments are required"
            );
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let rep = ak_ratio_check(
                &dens(ty),
                (parse_module(&factor[0])?, parse_module(&factor[1])?),
                parse_module(target)?,
                parse_module(probe)?,
                side,
            )?;
            let text = format!(
                "finite part: {}\nresidual blocks: {}\nlaurent: {}",
                rep.finite_part, rep.residual_blocks, rep.is_laurent
            );
            Ok(render(cli, rep.to_json(), text))
        }
        Cmd::Qchar { t, kr, spectral } => {
            let ty = parse_type(cli, &t.ty)?;
            let (k, m) = parse_km(kr)?;
            let a: QMonomial = spectral.parse()?;
            if ty.family == kraffine::Family::A && ty.twist == 1 {
                let chi = kr_qcharacter_type_a(ty.rank + 1, k, m, a, cli.max_tableaux)?;
                let dom = dominant_monomials(&chi);
                let dim = classical_dimension(&chi);
                let v = json!({
                    "dimension": dim.to_string(),
                    "dominant": dom.iter().map(|(y, c)| json!({"monomial": y.to_json(), "coeff": c.to_string()})).collect::<Vec<_>>(),
                    "qcharacter": chi.to_json(),
                });
                let text = format!("dimension {dim}, {} dominant monomial(s)\n{chi}", dom.len());
                Ok(render(cli, v, text))
            } else {
                let y = kr_highest_monomial(ty, k, m, a)?;
                Ok(render(
                    cli,
                    json!({ "highest": y.to_json() }),
                    format!("highest monomial {y}"),
                ))
            }
        }
        Cmd::Tsys {
            t,
            node,
            level,
            spectral,
            convention,
            verify,
        } => {
            let ty = parse_type(cli, &t.ty)?;
            let conv = match convention {
                ConvArg::W => Convention::W,
                ConvArg::V => Convention::V,
            };
            let ids = tsystem_identities(ty, *node, *level, spectral.parse()?, conv)?;
            let mut out_json = Vec::new();
            let mut text = Vec::new();
            for id in &ids {
                let mut v = id.to_json();
                text.push(id.to_string());
                if *verify {
                    v["weights_balance"] = json!(id.weights_balance());
                    text.push(format!("  weights balance: {}", id.weights_balance()));
                    if conv == Convention::W {
                        let c = match convert_identity(id) {
                            Ok(x) => json!({"ok": true, "v": x.to_json()}),
                            Err(e) => json!({"ok": false, "error": e.to_string()}),
                        };
                        text.push(format!("  W→V against printed list: {}", c["ok"]));
                        v["conversion"] = c;
                    }
                    if ty.family == kraffine::Family::A && ty.twist == 1 {
                        let ok = verify_tsystem_qchar(id, cli.max_tableaux)?;
                        v["qchar_identity"] = json!(ok);
                        text.push(format!("  q-character identity: {ok}"));
                    }
                }
                out_json.push(v);
            }
            Ok(render(cli, Value::Array(out_json), text.join("\n")))
        }
        Cmd::Dorey {
            t,
            xi,
            higher,
            case,
            k,
            l,
            m,
        } => {
            let ty = parse_type(cli, &t.ty)?;
            if *higher {
                let (k, l) = (*k, *l);
                let case = match case {
                    CaseArg::General => DoreyCase::General { k, l },
                    CaseArg::BSpin => DoreyCase::BSpin { k },
                    CaseArg::CSpin => DoreyCase::CSpin { k },
                    CaseArg::DSpin => DoreyCase::DSpin { l },
                    CaseArg::DSum => DoreyCase::DSum { k, l },
                    CaseArg::G2 => DoreyCase::G2,
                    CaseArg::DTwisted => DoreyCase::DTwisted { k },
                    CaseArg::D43 => DoreyCase::D43,
                };
                let mut vs = Vec::new();
                let mut text = Vec::new();
                for inst in higher_dorey_instances(ty, case, *m)? {
                    let mult = if ty.family == kraffine::Family::A && ty.twist == 1 {
                        Some(verify_dominant_multiplicity(&inst, cli.max_tableaux)?)
                    } else {
                        None
                    };
                    let target: Vec<String> = inst.target.iter().map(|x| x.to_string()).collect();
                    text.push(format!(
                        "{} ⊗ {} ↠ {}{}",
                        inst.factors[0],
                        inst.factors[1],
                        target.join(" ⊗ "),
                        mult.as_ref()
                            .map(|c| format!("  (multiplicity {c})"))
                            .unwrap_or_default()
                    ));
                    let mut v = serde_json::to_value(&inst)?;
                    v["multiplicity"] = json!(mult.map(|c| c.to_string()));
                    vs.push(v);
                }
                return Ok(render(cli, Value::Array(vs), text.join("\n")));
            }
            let g = build_gamma(ty, *xi)?;
            let triples = g.dorey_triples(cli.max_words)?;
            let mut vs = Vec::new();
            let mut text = Vec::new();
            for tr in &triples {
                let [b, a, c] = &tr.modules;
                let (tag, head) = match &tr.kind {
                    TripleKind::Minimal => ("minimal".to_string(), None),
                    TripleKind::DistanceTwo { kr_head, .. } => ("distance-2".to_string(), *kr_head),
                };
                let head_txt = head.map(|h| format!(", head {h}")).unwrap_or_default();
                text.push(format!(
                    "{} = {} + {}: {b} ⊗ {a} → {c}  [{tag}{head_txt}]",
                    g.label(tr.gamma),
                    g.label(tr.alpha),
                    g.label(tr.beta)
                ));
                vs.push(json!({
                    "gamma": g.label(tr.gamma), "alpha": g.label(tr.alpha), "beta": g.label(tr.beta),
                    "modules": tr.modules, "kind": tag, "kr_head": head,
                }));
            }
            Ok(render(cli, Value::Array(vs), text.join("\n")))
        }
        Cmd::Simple { t, modules } => {
            let ty = parse_type(cli, &t.ty)?;
            let text = std::fs::read_to_string(modules)
                .with_context(|| format!("reading {}", modules.display()))?;
            let ms = parse_module_list(&text)?;
            let d = tensor_simple(&dens(ty), &ms)?;
            let txt = match &d.witness {
                None => "simple".to_string(),
                Some(w) => format!(
                    "not simple: {} and {} (ratio {}, pole order {})",
                    ms[w.first], ms[w.second], w.ratio, w.order
                ),
            };
            Ok(render(cli, serde_json::to_value(&d)?, txt))
        }
        Cmd::HlCheck { t, depth } => {
            let ty = parse_type(cli, &t.ty)?;
            let rep = verify_commuting_family(&dens(ty), *depth)?;
            let mut text = format!(
                "{} violations / {} pairs ({} modules)",
                rep.violations.len(),
                rep.pairs_checked,
                rep.modules.len()
            );
            for v in &rep.violations {
                let a = kr_module(ty, rep.modules[v.first].v);
                let b = kr_module(ty, rep.modules[v.second].v);
                text.push_str(&format!("\n  {a} vs {b}: ratio {}", v.ratio));
            }
            let mut v = serde_json::to_value(&rep)?;
            v["quiver_arrows"] = json!(hl_quiver(ty, *depth)?.arrows);
            Ok(render(cli, v, text))
        }
        Cmd::Ar {
            t,
            xi,
            reflect,
            dot,
        } => {
            let ty = parse_type(cli, &t.ty)?;
            let mut g = build_gamma(ty, *xi)?;
            for &i in reflect {
                g = g.reflect(i)?;
            }
            if *dot {
                return Ok(g.to_dot().trim_end().to_string());
            }
            let mut text = Vec::new();
            for (r, row) in g.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|(l, p)| format!("{l}@{p}")).collect();
                text.push(format!("{}: {}", r + 1, cells.join("  ")));
            }
            Ok(render(cli, g.to_json(), text.join("\n")))
        }
        Cmd::SwQuiver { t, datum, xi } => {
            let ty = parse_type(cli, &t.ty)?;
            let datum: SWDatum = match (datum, xi) {
                (Some(p), _) => {
                    let s = std::fs::read_to_string(p)
                        .with_context(|| format!("reading {}", p.display()))?;
                    serde_json::from_str(&s).context("parsing Schur-Weyl datum")?
                }
                (None, Some(xi)) => SWDatum::from_ar_quiver(&build_gamma(ty, *xi)?)?,
                (None, None) => anyhow::bail!("either --datum FILE or --xi N is required"),
            };
            let sw = schur_weyl_quiver(&dens(ty), &datum)?;
            let mut text = vec![format!(
                "underlying graph: {}",
                sw.dynkin_type().unwrap_or_else(|| "not ADE".into())
            )];
            for row in &sw.cartan {
                text.push(row.iter().map(|x| format!("{x:>3}")).collect::<String>());
            }
            let mut v = serde_json::to_value(&sw)?;
            v["dynkin_type"] = json!(sw.dynkin_type());
            Ok(render(cli, v, text.join("\n")))
        }
    }
}
