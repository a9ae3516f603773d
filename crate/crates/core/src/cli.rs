//! Command-line front end. The binary is a thin wrapper over [`run`].

use crate::acceptance;
use crate::blockgraph::{arc_diagram, layers, GraphCache};
use crate::charring::{denominator_check, dims, irr_char};
use crate::diagrams::{check_dominant, dagger, diag, diagram_of, invariants, parse_diagram, weight_of_diagram, WeightDiagram};
use crate::dsfunctor::{ds_on_euler, ds_on_simple};
use crate::error::{Error, Result};
use crate::half::Half;
use crate::rootdata::{build_algebra, Algebra, Kind, Weight};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "superchar", version, about = "Characters, superdimensions and DS images for gl(m|n) and osp(M|2n)")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Ignore SUPERCHAR_CACHE_DIR.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Euler,
    G0,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Diagram, arcs and λ† of a weight.
    Diagram {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        ascii: bool,
    },
    /// Character of L(λ) in the Euler and g₀ bases, with dim and sdim.
    Char {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = Basis::Both)]
        basis: Basis,
    },
    /// ds of ℰ⁻_λ at the given rank (default at(λ)); --simple adds DS of L(λ).
    Ds {
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        simple: bool,
    },
    /// Block graph grown from seed weights.
    Graph {
        algebra: String,
        #[arg(long = "seed", required = true, allow_hyphen_values = true)]
        seeds: Vec<String>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(0..))]
        max_norm_gr: i64,
    },
    /// Super-denominator identity for the algebra.
    DenomCheck { algebra: String },
    /// The acceptance suite; exit 0 iff every criterion passes.
    Selftest {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=12))]
        only: Option<u8>,
    },
}

/// `gl:m,n`, `ospE:m,n` or `ospO:m,n`.
pub fn parse_algebra(s: &str) -> Result<Algebra> {
    let bad = || Error::parse(format!("algebra {s:?}: expected gl:m,n | ospE:m,n | ospO:m,n"));
    let (k, rest) = s.split_once(':').ok_or_else(bad)?;
    let kind = match k {
        "gl" => Kind::Gl,
        "ospE" => Kind::OspEven,
        "ospO" => Kind::OspOdd,
        _ => return Err(bad()),
    };
    let (m, n) = rest.split_once(',').ok_or_else(bad)?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    build_algebra(kind, m, n).map_err(|e| Error::parse(format!("algebra {s:?}: {e}")))
}

fn half_list(s: &str) -> Option<Vec<Half>> {
    if s.trim().is_empty() {
        return Some(vec![]);
    }
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// Weight spec: `e1,..|d1,..` (or `/` when no coordinate is a fraction), a bare
/// integer list of × positions, or a diagram string.
pub fn parse_weight(alg: &Algebra, s: &str) -> Result<Weight> {
    let t = s.trim();
    let split = if t.contains('|') { t.split_once('|') } else if t.matches('/').count() == 1 { t.split_once('/') } else { None };
    if let Some((e, d)) = split {
        let (Some(eps), Some(delta)) = (half_list(e), half_list(d)) else {
            return Err(Error::parse(format!("weight {s:?}: bad coordinate")));
        };
        if eps.len() != alg.m || delta.len() != alg.n {
            return Err(Error::parse(format!(
                "weight {s:?}: {} needs {} ε and {} δ coordinates",
                alg.name(),
                alg.m,
                alg.n
            )));
        }
        return Ok(Weight { eps, delta });
    }
    let ints: Option<Vec<i64>> = t.split(',').map(|x| x.trim().parse().ok()).collect();
    if let Some(pos) = ints {
        if pos.len() != alg.defect() || alg.m != alg.n {
            return Err(Error::parse(format!(
                "weight {s:?}: a position list needs {} = m = n entries",
                alg.defect()
            )));
        }
        let mut f = WeightDiagram::empty(alg.kind, alg.m, alg.n);
        for p in pos {
            f.bump(p, 0, 0, 1);
        }
        return weight_of_diagram(alg, &f).map_err(|e| Error::parse(format!("weight {s:?}: {e}")));
    }
    let f = parse_diagram(alg, t)?;
    weight_of_diagram(alg, &f).map_err(|e| Error::parse(format!("diagram {s:?}: {e}")))
}

fn dominant(alg: &Algebra, s: &str) -> Result<Weight> {
    let w = parse_weight(alg, s)?;
    check_dominant(alg, &w)?;
    Ok(w)
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!("v1"));
    }
    v
}

fn json_line(v: Value) -> String {
    let v = with_schema(v);
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

fn render(f: &WeightDiagram, ascii: bool) -> String {
    f.render(!ascii)
}

fn cmd_diagram(fmt: Format, alg: &Algebra, w: &str, ascii: bool) -> Result<String> {
    let lam = dominant(alg, w)?;
    let f = diag(alg, &lam)?;
    let inv = invariants(alg, &lam)?;
    let dd = dagger(alg, &lam)?;
    let fd = diagram_of(alg, &dd.lambda)?;
    let arcs = if alg.kind == Kind::Gl { Some(arc_diagram(alg, &lam)?) } else { None };
    Ok(match fmt {
        Format::Json => json_line(json!({
            "algebra": alg.spec(),
            "weight": lam,
            "diagram": f.to_json(),
            "rendered": render(&f, ascii),
            "anchored": f.render_opts(!ascii, true),
            "invariants": inv,
            "dagger": {"rendered": render(&fd, ascii), "s": dd.s.iter().map(|b| b.to_string()).collect::<Vec<_>>(), "j": dd.j},
            "arcs": arcs.map(|a| a.arcs),
        })),
        _ => {
            let mut s = format!("{} λ = {lam}\n", alg.name());
            s += &format!("diagram   {}\n", render(&f, ascii));
            s += &format!("anchored  {}\n", f.render_opts(!ascii, true));
            s += &format!("dagger    {}\n", fd.render_opts(!ascii, true));
            if let Some(a) = arcs {
                let l: Vec<String> = a.arcs.iter().map(|(x, y)| format!("{x}→{y}")).collect();
                s += &format!("arcs      {}\n", l.join(" "));
            }
            s += &format!(
                "atypicality {}, tail {}, stable {}, kostant {}, ||λ|| {}, ||λ||_gr {}\n",
                inv.atypicality,
                inv.tail,
                inv.is_stable,
                inv.is_kostant,
                inv.norm.map_or("-".into(), |n| n.to_string()),
                inv.norm_gr
            );
            s
        }
    })
}

fn cmd_char(fmt: Format, alg: &Algebra, w: &str, basis: Basis) -> Result<String> {
    let lam = dominant(alg, w)?;
    let ic = irr_char(alg, &lam)?;
    let d = dims(alg, &ic.char);
    let euler = basis != Basis::G0;
    let g0 = basis != Basis::Euler;
    Ok(match fmt {
        Format::Json => {
            let mut v = json!({"algebra": alg.spec(), "weight": lam, "dim": d.dim.to_string(), "sdim": d.sdim.to_string()});
            if euler {
                v["euler"] = ic.euler_terms.iter().map(|(mu, c)| json!({"weight": mu, "coeff": c})).collect();
            }
            if g0 {
                v["g0"] = ic.char.to_json(alg)["terms"].clone();
            }
            json_line(v)
        }
        _ => {
            let mut s = format!("{} L{lam}\n", alg.name());
            if euler {
                let t: Vec<String> = ic
                    .euler_terms
                    .iter()
                    .map(|(mu, c)| match c {
                        1 => format!("ℰ{mu}"),
                        -1 => format!("−ℰ{mu}"),
                        _ => format!("{c}·ℰ{mu}"),
                    })
                    .collect();
                s += &format!("euler  {}\n", t.join(" + ").replace("+ −", "− "));
            }
            if g0 {
                s += &format!("g0     {}\n", ic.char);
            }
            s += &format!("dim {}  sdim {}\n", d.dim, d.sdim);
            s
        }
    })
}

fn cmd_ds(fmt: Format, alg: &Algebra, w: &str, rank: Option<usize>, simple: bool) -> Result<String> {
    let lam = dominant(alg, w)?;
    let j = match rank {
        Some(j) => j,
        None => invariants(alg, &lam)?.atypicality,
    };
    let img = ds_on_euler(alg, &lam, j)?;
    let sim = if simple { Some(ds_on_simple(alg, &lam)?) } else { None };
    Ok(match fmt {
        Format::Json => {
            let mut v = img.to_json();
            if let Some(s) = &sim {
                v["simple"] = s.to_json();
            }
            json_line(v)
        }
        _ => {
            let mut s = format!("ds_{j} ℰ⁻{lam} on {} → {}\n", alg.name(), img.target.name());
            for t in &img.terms {
                let w = t.weight.as_ref().map_or(String::new(), |w| w.to_string());
                s += &format!("  {:?} {w} coeff {}\n", t.kind, t.coeff);
            }
            s += &format!("sigma_pair {}  parity_shift {}\n", img.sigma_pair, img.parity_shift);
            if let Some(d) = sim {
                s += &format!(
                    "DS L{lam} = Π^{}(L{})^{} on {}  sdim {}\n",
                    d.parity_shift_even_hw,
                    d.core.nu,
                    d.mult,
                    d.core.algebra.name(),
                    d.core.sdim * d.mult as i128
                );
            }
            s
        }
    })
}

fn cmd_graph(fmt: Format, alg: &Algebra, seeds: &[String], bound: i64, no_cache: bool) -> Result<String> {
    let seeds: Vec<Weight> = seeds.iter().map(|s| dominant(alg, s)).collect::<Result<_>>()?;
    let g = GraphCache::from_env(no_cache).build(alg, &seeds, bound)?;
    Ok(match fmt {
        Format::Dot => g.to_dot(),
        Format::Json => json_line(g.to_json()),
        Format::Text => {
            let mut s = format!("{} block graph: {} vertices, {} edges\n", alg.name(), g.len(), g.edges.len());
            for (k, vs) in layers(&g) {
                for v in vs {
                    let f = diag(alg, &g.vertices[v])?;
                    s += &format!("  [{k}] v{v} {} {}\n", f.render_opts(true, true), g.vertices[v]);
                }
            }
            for e in &g.edges {
                s += &format!("  v{} → v{} ({}, {})\n", e.src, e.dst, e.b, e.bp);
            }
            s
        }
    })
}

fn cmd_denom(fmt: Format, alg: &Algebra) -> Result<(String, bool)> {
    let r = denominator_check(alg)?;
    let ok = r.ok && r.reversed_ok;
    let out = match fmt {
        Format::Json => json_line(serde_json::to_value(&r).expect("json")),
        _ => format!(
            "{}: ρ' = {}, s = {}, expected {} {}, reversed {} {}\n",
            r.algebra,
            r.rho_prime,
            r.s,
            r.expected,
            if r.ok { "ok" } else { "FAILED" },
            r.reversed_expected,
            if r.reversed_ok { "ok" } else { "FAILED" }
        ),
    };
    Ok((out, ok))
}

fn cmd_selftest(fmt: Format, only: Option<u8>) -> (String, bool) {
    let outs = match only {
        Some(i) => vec![acceptance::run(i)],
        None => acceptance::run_all(),
    };
    let ok = outs.iter().all(|o| o.pass);
    let s = match fmt {
        Format::Json => json_line(json!({
            "criteria": outs.iter().map(|o| json!({
                "id": o.id, "title": o.title, "pass": o.pass, "detail": o.detail, "known_failure": o.known_failure,
            })).collect::<Vec<_>>(),
            "all_pass": ok,
        })),
        _ => outs.iter().map(|o| format!("{o}\n")).collect(),
    };
    (s, ok)
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    let fmt = cli.format;
    let need = |a: &str| parse_algebra(a);
    let plain = |s: String| Ok((s, 0));
    if fmt == Format::Dot && !matches!(cli.cmd, Cmd::Graph { .. }) {
        return Err(Error::parse("--format dot is only available for graph"));
    }
    match &cli.cmd {
        Cmd::Diagram { algebra, weight, ascii } => plain(cmd_diagram(fmt, &need(algebra)?, weight, *ascii)?),
        Cmd::Char { algebra, weight, basis } => plain(cmd_char(fmt, &need(algebra)?, weight, *basis)?),
        Cmd::Ds { algebra, weight, rank, simple } => plain(cmd_ds(fmt, &need(algebra)?, weight, *rank, *simple)?),
        Cmd::Graph { algebra, seeds, max_norm_gr } => {
            plain(cmd_graph(fmt, &need(algebra)?, seeds, *max_norm_gr, cli.no_cache)?)
        }
        Cmd::DenomCheck { algebra } => {
            let (s, ok) = cmd_denom(fmt, &need(algebra)?)?;
            Ok((s, if ok { 0 } else { 1 }))
        }
        Cmd::Selftest { only } => {
            let (s, ok) = cmd_selftest(fmt, *only);
            Ok((s, if ok { 0 } else { 1 }))
        }
    }
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((s, code)) => {
            let _ = out.write_all(s.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "superchar: {e}");
            e.exit_code()
        }
    }
}
