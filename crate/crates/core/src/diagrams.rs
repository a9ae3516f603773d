//! Weight diagrams of λ+ρ and the invariants read off them.
//!
//! Positions are integers in every case. For gl(m|n) the Weyl vector
//! Σ(m+1−i)ε_i − Σ jδ_j puts `>` at a_i and `<` at −b_j with no half shift.
//! For osp(2m+1|2n) a coordinate ±c sits at position c−½.

use crate::error::{Error, Result};
use crate::half::Half;
use crate::rootdata::{Algebra, Kind, Weight};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Symbols stacked at one position. `times` counts pairs, `gt`/`lt` the unpaired rest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymbolCount {
    pub gt: u32,
    pub lt: u32,
    pub times: u32,
}

impl SymbolCount {
    pub fn is_empty(&self) -> bool {
        self.gt == 0 && self.lt == 0 && self.times == 0
    }

    pub fn n_eps(&self) -> u32 {
        self.gt + self.times
    }

    pub fn n_delta(&self) -> u32 {
        self.lt + self.times
    }

    pub fn has_core(&self) -> bool {
        self.gt > 0 || self.lt > 0
    }

    fn normalized(mut self) -> SymbolCount {
        let k = self.gt.min(self.lt);
        self.gt -= k;
        self.lt -= k;
        self.times += k;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
    None,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDiagram {
    pub kind: Kind,
    pub m: usize,
    pub n: usize,
    pub entries: BTreeMap<i64, SymbolCount>,
    pub sign: Sign,
}

impl fmt::Debug for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}

impl WeightDiagram {
    pub fn empty(kind: Kind, m: usize, n: usize) -> WeightDiagram {
        WeightDiagram { kind, m, n, entries: BTreeMap::new(), sign: Sign::None }
    }

    pub fn at(&self, p: i64) -> SymbolCount {
        self.entries.get(&p).copied().unwrap_or_default()
    }

    fn set(&mut self, p: i64, c: SymbolCount) {
        let c = c.normalized();
        if c.is_empty() {
            self.entries.remove(&p);
        } else {
            self.entries.insert(p, c);
        }
    }

    pub fn bump(&mut self, p: i64, gt: u32, lt: u32, times: u32) {
        let mut c = self.at(p);
        c.gt += gt;
        c.lt += lt;
        c.times += times;
        self.set(p, c);
    }

    pub fn atypicality(&self) -> usize {
        self.entries.values().map(|c| c.times as usize).sum()
    }

    /// Positions of the × symbols, ascending, with multiplicity.
    pub fn cross_positions(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (&p, c) in &self.entries {
            out.extend(std::iter::repeat_n(p, c.times as usize));
        }
        out
    }

    /// Same symbols moved by `d` positions.
    pub fn translated(&self, d: i64) -> WeightDiagram {
        let entries = self.entries.iter().map(|(&p, c)| (p + d, *c)).collect();
        WeightDiagram { entries, ..self.clone() }
    }

    /// One × at `p` removed; the result lives on the algebra of rank one less.
    pub fn without_cross(&self, p: i64) -> Result<WeightDiagram> {
        let mut c = self.at(p);
        if c.times == 0 {
            return Err(Error::pre(format!("no × at position {p}")));
        }
        c.times -= 1;
        let mut out = self.clone();
        out.m -= 1;
        out.n -= 1;
        out.set(p, c);
        Ok(out)
    }

    /// Diagram with all × replaced by ∘ and the sign dropped.
    pub fn core(&self) -> WeightDiagram {
        let mut out = WeightDiagram::empty(self.kind, self.m, self.n);
        for (&p, c) in &self.entries {
            out.set(p, SymbolCount { gt: c.gt, lt: c.lt, times: 0 });
        }
        out
    }

    /// Renders in the usual notation. `coord` prefixes the coordinate of the
    /// empty slot before the first symbol (gl), osp diagrams always start at 0.
    pub fn render(&self, unicode: bool) -> String {
        self.render_opts(unicode, false)
    }

    pub fn render_opts(&self, unicode: bool, coord: bool) -> String {
        let mut s = String::new();
        match self.sign {
            Sign::Plus => s.push_str("(+)"),
            Sign::Minus => s.push_str(if unicode { "(−)" } else { "(-)" }),
            Sign::None => {}
        }
        let (lo, hi) = match (self.entries.keys().next(), self.entries.keys().next_back()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => {
                if self.kind != Kind::Gl {
                    s.push_str(if unicode { "∘" } else { "o" });
                }
                return s;
            }
        };
        let start = if self.kind == Kind::Gl {
            if coord {
                s.push_str(&(lo - 1).to_string());
            }
            lo
        } else {
            0
        };
        for p in start..=hi {
            s.push_str(&render_cell(self.at(p), unicode));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let positions: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(p, c)| (p.to_string(), serde_json::Value::String(render_cell(*c, true))))
            .collect();
        serde_json::json!({
            "schema": "v1",
            "positions": positions,
            "sign": match self.sign { Sign::Plus => "+", Sign::Minus => "-", Sign::None => "none" },
        })
    }
}

fn render_cell(c: SymbolCount, unicode: bool) -> String {
    let x = if unicode { "×" } else { "x" };
    let tx = match c.times {
        0 => String::new(),
        1 => x.to_string(),
        k => format!("{x}^{k}"),
    };
    let core = ">".repeat(c.gt as usize) + &"<".repeat(c.lt as usize);
    match (core.is_empty(), tx.is_empty()) {
        (true, true) => (if unicode { "∘" } else { "o" }).to_string(),
        (true, false) => tx,
        (false, true) if core.len() == 1 => core,
        _ => format!("{{{core}{tx}}}"),
    }
}

/// Parses the usual notation: `×`/`x`, `>`, `<`, `∘`/`o`/`.`, stacks `×^3`,
/// `×³`, groups `{>×^2}`, a sign prefix `(+)`/`(−)`/`+`/`−`, and a leading
/// integer coordinate for the empty slot before the first symbol.
///
/// Without a coordinate, osp diagrams start at 0 and gl diagrams at 1, so
/// `×××` is the Weyl vector of gl(3|3).
pub fn parse_diagram(alg: &Algebra, text: &str) -> Result<WeightDiagram> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let mut sign = Sign::None;
    let bad = |msg: &str| Error::parse(format!("diagram {text:?}: {msg}"));
    let is_minus = |c: char| c == '-' || c == '−';
    // sign prefix
    if chars.len() >= 3 && chars[0] == '(' && chars[2] == ')' {
        sign = match chars[1] {
            '+' => Sign::Plus,
            c if is_minus(c) => Sign::Minus,
            _ => return Err(bad("unknown sign")),
        };
        i = 3;
    } else if !chars.is_empty()
        && (chars[0] == '+' || is_minus(chars[0]))
        && chars.get(1).is_some_and(|c| !c.is_ascii_digit())
    {
        sign = if chars[0] == '+' { Sign::Plus } else { Sign::Minus };
        i = 1;
    }
    // coordinate hint
    let mut pos: i64 = if alg.kind == Kind::Gl { 1 } else { 0 };
    let hint_start = i;
    if i < chars.len() && (is_minus(chars[i]) || chars[i].is_ascii_digit()) {
        let mut j = i;
        if is_minus(chars[j]) {
            j += 1;
        }
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        let num: String = chars[hint_start..j].iter().map(|&c| if c == '−' { '-' } else { c }).collect();
        let v: i64 = num.parse().map_err(|_| bad("bad coordinate"))?;
        pos = v + 1;
        i = j;
    }
    let mut f = WeightDiagram::empty(alg.kind, alg.m, alg.n);
    f.sign = sign;
    let read_count = |i: &mut usize| -> Result<u32> {
        if *i < chars.len() && chars[*i] == '^' {
            *i += 1;
            let st = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            let s: String = chars[st..*i].iter().collect();
            return s.parse().map_err(|_| bad("bad exponent"));
        }
        let st = *i;
        let mut v = 0u32;
        while *i < chars.len() {
            let Some(d) = superscript_digit(chars[*i]) else { break };
            v = v * 10 + d;
            *i += 1;
        }
        Ok(if *i == st { 1 } else { v })
    };
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        let mut cell = SymbolCount::default();
        match c {
            '×' | 'x' | 'X' => cell.times = read_count(&mut i)?,
            '>' => cell.gt = 1,
            '<' => cell.lt = 1,
            '∘' | 'o' | 'O' | '.' | '_' => {}
            '{' => {
                loop {
                    let Some(&d) = chars.get(i) else { return Err(bad("unclosed group")) };
                    i += 1;
                    match d {
                        '}' => break,
                        '×' | 'x' | 'X' => cell.times += read_count(&mut i)?,
                        '>' => cell.gt += 1,
                        '<' => cell.lt += 1,
                        _ => return Err(bad("bad symbol in group")),
                    }
                }
            }
            _ => return Err(bad(&format!("unexpected {c:?}"))),
        }
        f.bump(pos, cell.gt, cell.lt, cell.times);
        pos += 1;
    }
    Ok(f)
}

fn superscript_digit(c: char) -> Option<u32> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c).map(|p| p as u32)
}

fn int_pos(x: Half) -> Result<i64> {
    x.to_integer().ok_or_else(|| Error::pre(format!("coordinate {x} is not an integer")))
}

fn odd_pos(x: Half) -> Result<i64> {
    let t = x.twice();
    if t % 2 == 0 {
        return Err(Error::pre(format!("coordinate {x} is not in ½+ℤ")));
    }
    Ok((t.abs() - 1) / 2)
}

/// Diagram of a ρ-shifted vector (λ+ρ, λ†, ...).
pub fn diagram_of(alg: &Algebra, v: &Weight) -> Result<WeightDiagram> {
    alg.check_shape(v)?;
    let mut f = WeightDiagram::empty(alg.kind, alg.m, alg.n);
    match alg.kind {
        Kind::Gl => {
            for a in &v.eps {
                f.bump(int_pos(*a)?, 1, 0, 0);
            }
            for b in &v.delta {
                f.bump(int_pos(-*b)?, 0, 1, 0);
            }
        }
        Kind::OspEven => {
            for a in &v.eps {
                f.bump(int_pos(a.abs())?, 1, 0, 0);
            }
            for b in &v.delta {
                f.bump(int_pos(b.abs())?, 0, 1, 0);
            }
            if alg.m > 0 && f.at(0).is_empty() {
                let neg = v.eps.iter().filter(|a| a.signum() < 0).count();
                f.sign = if neg % 2 == 0 { Sign::Plus } else { Sign::Minus };
            }
        }
        Kind::OspOdd => {
            for a in &v.eps {
                f.bump(odd_pos(*a)?, 1, 0, 0);
            }
            for b in &v.delta {
                f.bump(odd_pos(*b)?, 0, 1, 0);
            }
            let z = f.at(0);
            if z.times > 0 && !z.has_core() {
                let plus = v.eps.contains(&Half::HALF);
                f.sign = if plus { Sign::Plus } else { Sign::Minus };
            }
        }
    }
    Ok(f)
}

/// Inverse of [`diagram_of`] on diagrams of dominant (or Λ≥) vectors.
pub fn vector_of(alg: &Algebra, f: &WeightDiagram) -> Result<Weight> {
    let mut eps: Vec<i64> = Vec::new();
    let mut del: Vec<i64> = Vec::new();
    for (&p, c) in &f.entries {
        eps.extend(std::iter::repeat_n(p, c.n_eps() as usize));
        del.extend(std::iter::repeat_n(p, c.n_delta() as usize));
    }
    if eps.len() != alg.m || del.len() != alg.n {
        return Err(Error::pre(format!(
            "diagram {} has {} ε-symbols and {} δ-symbols, {} needs {} and {}",
            f.render(true),
            eps.len(),
            del.len(),
            alg.name(),
            alg.m,
            alg.n
        )));
    }
    eps.sort_by(|a, b| b.cmp(a));
    let out = match alg.kind {
        Kind::Gl => {
            del.sort();
            Weight {
                eps: eps.iter().map(|&p| Half::int(p)).collect(),
                delta: del.iter().map(|&p| Half::int(-p)).collect(),
            }
        }
        Kind::OspEven => {
            if eps.iter().any(|&p| p < 0) || del.iter().any(|&p| p < 0) {
                return Err(Error::pre("osp positions must be non-negative"));
            }
            del.sort_by(|a, b| b.cmp(a));
            let mut e: Vec<Half> = eps.iter().map(|&p| Half::int(p)).collect();
            if f.sign == Sign::Minus {
                match e.last_mut() {
                    Some(x) if *x != Half::ZERO => *x = -*x,
                    _ => return Err(Error::pre("sign (−) needs an empty zero position")),
                }
            }
            Weight { eps: e, delta: del.iter().map(|&p| Half::int(p)).collect() }
        }
        Kind::OspOdd => {
            if eps.iter().any(|&p| p < 0) || del.iter().any(|&p| p < 0) {
                return Err(Error::pre("osp positions must be non-negative"));
            }
            del.sort_by(|a, b| b.cmp(a));
            let z = f.at(0);
            let plus_first = z.n_eps() > z.n_delta() || f.sign == Sign::Plus;
            let mut seen_zero = false;
            let e = eps
                .iter()
                .map(|&p| {
                    if p > 0 {
                        Half::halves(2 * p + 1)
                    } else if plus_first && !seen_zero {
                        seen_zero = true;
                        Half::HALF
                    } else {
                        -Half::HALF
                    }
                })
                .collect();
            Weight { eps: e, delta: del.iter().map(|&p| Half::halves(2 * p + 1)).collect() }
        }
    };
    Ok(out)
}

pub fn diag(alg: &Algebra, lambda: &Weight) -> Result<WeightDiagram> {
    diagram_of(alg, &(lambda + alg.rho()))
}

pub fn weight_of_diagram(alg: &Algebra, f: &WeightDiagram) -> Result<Weight> {
    Ok(&vector_of(alg, f)? - alg.rho())
}

/// The shape rules for diagrams of dominant weights.
pub fn is_valid_dominant_diagram(alg: &Algebra, f: &WeightDiagram) -> bool {
    let ne: u32 = f.entries.values().map(|c| c.n_eps()).sum();
    let nd: u32 = f.entries.values().map(|c| c.n_delta()).sum();
    if ne as usize != alg.m || nd as usize != alg.n {
        return false;
    }
    let single = |c: &SymbolCount| c.gt + c.lt + c.times == 1;
    match alg.kind {
        Kind::Gl => f.sign == Sign::None && f.entries.values().all(single),
        Kind::OspEven | Kind::OspOdd => {
            if f.entries.range(..0).next().is_some() {
                return false;
            }
            if !f.entries.range(1..).all(|(_, c)| single(c)) {
                return false;
            }
            let z = f.at(0);
            if alg.kind == Kind::OspEven {
                z.lt == 0
                    && z.gt <= 1
                    && ((f.sign != Sign::None) == (z.is_empty() && alg.m > 0))
            } else {
                z.gt + z.lt <= 1 && ((f.sign != Sign::None) == (z.times > 0 && !z.has_core()))
            }
        }
    }
}

/// λ ∈ Λ⁺: integral, valid diagram, and the diagram reproduces λ.
pub fn is_dominant(alg: &Algebra, lambda: &Weight) -> bool {
    if alg.check_shape(lambda).is_err() || !lambda.is_integral() {
        return false;
    }
    let Ok(f) = diag(alg, lambda) else { return false };
    is_valid_dominant_diagram(alg, &f)
        && weight_of_diagram(alg, &f).is_ok_and(|w| w == *lambda)
        && alg.is_g0_dominant(lambda)
}

pub fn check_dominant(alg: &Algebra, lambda: &Weight) -> Result<()> {
    alg.check_shape(lambda)?;
    if !is_dominant(alg, lambda) {
        return Err(Error::pre(format!("{lambda} is not a dominant weight of {}", alg.name())));
    }
    Ok(())
}

fn subsets(items: &[i64], k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k - 1);
    for s in &mut out {
        s.insert(0, items[0]);
    }
    out.extend(subsets(&items[1..], k));
    out
}

/// All dominant weights whose diagrams live in positions `lo..=hi`
/// (osp diagrams use `0..=hi`).
pub fn enumerate_dominant(alg: &Algebra, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    match alg.kind {
        Kind::Gl => {
            let pos: Vec<i64> = (lo..=hi).collect();
            for e in subsets(&pos, alg.m) {
                for d in subsets(&pos, alg.n) {
                    let mut f = WeightDiagram::empty(alg.kind, alg.m, alg.n);
                    e.iter().for_each(|&p| f.bump(p, 1, 0, 0));
                    d.iter().for_each(|&p| f.bump(p, 0, 1, 0));
                    if let Ok(w) = weight_of_diagram(alg, &f) {
                        out.push(w);
                    }
                }
            }
        }
        _ => {
            let pos: Vec<i64> = (1..=hi).collect();
            for ze in 0..=alg.m {
                for zd in 0..=alg.n {
                    for e in subsets(&pos, alg.m - ze) {
                        for d in subsets(&pos, alg.n - zd) {
                            let mut f = WeightDiagram::empty(alg.kind, alg.m, alg.n);
                            f.bump(0, ze as u32, zd as u32, 0);
                            e.iter().for_each(|&p| f.bump(p, 1, 0, 0));
                            d.iter().for_each(|&p| f.bump(p, 0, 1, 0));
                            for sign in [Sign::None, Sign::Plus, Sign::Minus] {
                                let mut g = f.clone();
                                g.sign = sign;
                                if !is_valid_dominant_diagram(alg, &g) {
                                    continue;
                                }
                                if let Ok(w) = weight_of_diagram(alg, &g) {
                                    if is_dominant(alg, &w) {
                                        out.push(w);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The t-value: 2 for osp(2m|2n) with `>` at zero in the core, 1 for odd osp, else 0.
pub fn t_value(f: &WeightDiagram) -> u8 {
    match f.kind {
        Kind::Gl => 0,
        Kind::OspOdd => 1,
        Kind::OspEven => {
            if f.at(0).gt > 0 {
                2
            } else {
                0
            }
        }
    }
}

/// Tail and y₀. For gl this is the run of × starting at the first ×,
/// passing over core symbols and stopping at the first empty position.
pub fn tail_y0(f: &WeightDiagram) -> (usize, Option<i64>) {
    match f.kind {
        Kind::Gl => {
            let Some(first) = f.entries.iter().find(|(_, c)| c.times > 0).map(|(&p, _)| p) else {
                return (0, None);
            };
            let (mut tail, mut y0) = (0usize, first);
            let mut p = first;
            loop {
                let c = f.at(p);
                if c.is_empty() {
                    break;
                }
                if c.times > 0 {
                    tail += c.times as usize;
                    y0 = p;
                }
                p += 1;
            }
            (tail, Some(y0))
        }
        Kind::OspEven => {
            let k = f.at(0).times as usize;
            (k, (k > 0).then_some(0))
        }
        Kind::OspOdd => {
            let z = f.at(0).times as usize;
            let k = if f.sign == Sign::Plus { z.saturating_sub(1) } else { z };
            (k, (k > 0).then_some(0))
        }
    }
}

/// Stable (gl): every × precedes every core symbol.
pub fn is_stable(f: &WeightDiagram) -> bool {
    if f.kind != Kind::Gl {
        return true;
    }
    let last_cross = f.entries.iter().filter(|(_, c)| c.times > 0).map(|(&p, _)| p).next_back();
    let first_core = f.entries.iter().find(|(_, c)| c.has_core()).map(|(&p, _)| p);
    match (last_cross, first_core) {
        (Some(x), Some(c)) => x < c,
        _ => true,
    }
}

/// The algebra of the principal block the howl lives in.
pub fn howl_algebra(kind: Kind, k: usize, t: u8) -> Algebra {
    match kind {
        Kind::Gl => Algebra::new(Kind::Gl, k, k),
        Kind::OspEven => Algebra::new(Kind::OspEven, k + (t as usize) / 2, k),
        Kind::OspOdd => Algebra::new(Kind::OspOdd, k, k),
    }
}

/// Core-free diagram obtained by deleting core symbols and closing the gaps.
pub fn howl_diagram(f: &WeightDiagram) -> WeightDiagram {
    let k = f.atypicality();
    let t = t_value(f);
    let ha = howl_algebra(f.kind, k, t);
    let mut h = WeightDiagram::empty(ha.kind, ha.m, ha.n);
    let mut removed = 0i64;
    match f.kind {
        Kind::Gl => {
            for (&p, c) in &f.entries {
                if c.times > 0 {
                    h.bump(p - removed, 0, 0, c.times);
                }
                removed += (c.gt + c.lt) as i64;
            }
        }
        Kind::OspEven => {
            let z = f.at(0);
            h.bump(0, if t == 2 { 1 } else { 0 }, 0, z.times);
            for (&p, c) in f.entries.range(1..) {
                if c.times > 0 {
                    h.bump(p - removed, 0, 0, c.times);
                }
                removed += (c.gt + c.lt) as i64;
            }
            if ha.m > 0 && h.at(0).is_empty() {
                h.sign = if f.sign == Sign::None { Sign::Plus } else { f.sign };
            }
        }
        Kind::OspOdd => {
            for (&p, c) in &f.entries {
                if c.times > 0 {
                    h.bump(p - removed, 0, 0, c.times);
                }
                removed += (c.gt + c.lt) as i64;
            }
            let z = h.at(0).times as usize;
            if z > 0 {
                let (tail, _) = tail_y0(f);
                h.sign = if z > tail { Sign::Plus } else { Sign::Minus };
            }
        }
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub atypicality: usize,
    pub tail: usize,
    pub y0: Option<i64>,
    pub is_stable: bool,
    pub is_kostant: bool,
    /// ||λ||; undefined for typical weights.
    pub norm: Option<i64>,
    pub norm_gr: i64,
    pub t: u8,
    #[serde(skip)]
    pub core: WeightDiagram,
    #[serde(skip)]
    pub howl: WeightDiagram,
}

pub fn invariants(alg: &Algebra, lambda: &Weight) -> Result<Invariants> {
    let f = diag(alg, lambda)?;
    Ok(invariants_of_diagram(&f))
}

pub fn invariants_of_diagram(f: &WeightDiagram) -> Invariants {
    let j = f.atypicality() as i64;
    let (tail, y0) = tail_y0(f);
    let t = t_value(f);
    let howl = howl_diagram(f);
    let a = howl.cross_positions();
    let sum: i64 = a.iter().sum();
    let (norm, norm_gr) = if j == 0 {
        (None, 0)
    } else {
        match f.kind {
            Kind::Gl => {
                let min = a[0];
                // shifted so that ||0|| = 0 and (−1)^{||λ||} = (−1)^{p(howl λ)}
                (Some(sum - j * (j + 1) / 2), a.iter().map(|x| x - min).sum::<i64>() - j * (j - 1) / 2)
            }
            Kind::OspEven => {
                let norm = if t == 2 { tail as i64 - j + sum } else { sum };
                (Some(norm), sum)
            }
            Kind::OspOdd => (Some(sum), j - tail as i64 + sum),
        }
    };
    Invariants {
        atypicality: j as usize,
        tail,
        y0,
        is_stable: is_stable(f),
        is_kostant: norm_gr == 0,
        norm,
        norm_gr,
        t,
        core: f.core(),
        howl,
    }
}

/// Data of λ† for KW(λ) := KW(λ†, S_{λ†}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaggerData {
    /// λ† as a ρ-shifted vector.
    pub lambda: Weight,
    pub s: Vec<Weight>,
    pub tail: usize,
    pub y0: Option<i64>,
    /// tail!
    pub j: u64,
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// λ† for a dominant weight λ.
pub fn dagger(alg: &Algebra, lambda: &Weight) -> Result<DaggerData> {
    dagger_shifted(alg, &(lambda + alg.rho()))
}

/// λ† for any ρ-shifted vector whose diagram makes sense (Λ≥).
pub fn dagger_shifted(alg: &Algebra, v: &Weight) -> Result<DaggerData> {
    let f = diagram_of(alg, v)?;
    let (tail, y0) = tail_y0(&f);
    if alg.kind != Kind::Gl {
        return Ok(DaggerData { lambda: v.clone(), s: alg.iso_set(tail), tail, y0, j: factorial(tail) });
    }
    let Some(y) = y0 else {
        return Ok(DaggerData { lambda: v.clone(), s: vec![], tail: 0, y0: None, j: 1 });
    };
    let fd = dagger_diagram(&f);
    let lam = vector_of(alg, &fd)?;
    let yh = Half::int(y);
    let p = lam.eps.iter().position(|x| *x == yh).expect("stack present");
    let q = lam.delta.iter().position(|x| *x == -yh).expect("stack present");
    let s = (0..tail).map(|i| &alg.eps(p + i) - &alg.delta(q + i)).collect();
    Ok(DaggerData { lambda: lam, s, tail, y0, j: factorial(tail) })
}

/// f†: the × of the tail left of y₀ are stacked onto y₀ (gl).
pub fn dagger_diagram(f: &WeightDiagram) -> WeightDiagram {
    let (tail, y0) = tail_y0(f);
    let Some(y) = y0 else { return f.clone() };
    if f.kind != Kind::Gl {
        return f.clone();
    }
    let mut g = f.clone();
    let moved: Vec<i64> = f.entries.range(..y).filter(|(_, c)| c.times > 0).map(|(&p, _)| p).collect();
    for p in moved {
        let mut c = g.at(p);
        c.times = 0;
        g.set(p, c);
    }
    let mut c = g.at(y);
    c.times = tail as u32;
    g.set(y, c);
    g
}

/// τ: core-free osp(2m+2|2n) diagram with t = 2 ↦ osp(2m+1|2n) diagram.
pub fn tau(f: &WeightDiagram) -> Result<WeightDiagram> {
    if f.kind != Kind::OspEven || t_value(f) != 2 {
        return Err(Error::pre("τ needs an osp(2m+2|2n) diagram with > at zero"));
    }
    if f.entries.values().any(|c| c.has_core() && c != &f.at(0)) || f.at(0).gt != 1 {
        return Err(Error::pre("τ needs a core-free diagram"));
    }
    if f.m == 0 {
        return Err(Error::pre("τ needs m ≥ 1"));
    }
    let mut g = WeightDiagram::empty(Kind::OspOdd, f.m - 1, f.n);
    let k0 = f.at(0).times;
    g.bump(0, 0, 0, k0);
    for (&p, c) in f.entries.range(1..) {
        g.bump(p - 1, c.gt, c.lt, c.times);
    }
    let z = g.at(0).times;
    if z > 0 {
        g.sign = if z > k0 { Sign::Plus } else { Sign::Minus };
    }
    Ok(g)
}

/// Inverse of [`tau`].
pub fn tau_inverse(g: &WeightDiagram) -> Result<WeightDiagram> {
    if g.kind != Kind::OspOdd || g.entries.values().any(|c| c.has_core()) {
        return Err(Error::pre("τ⁻¹ needs a core-free osp(2m+1|2n) diagram"));
    }
    let mut f = WeightDiagram::empty(Kind::OspEven, g.m + 1, g.n);
    let z = g.at(0).times;
    let (to_one, stay) = if g.sign == Sign::Plus && z > 0 { (1, z - 1) } else { (0, z) };
    f.bump(0, 1, 0, stay);
    f.bump(1, 0, 0, to_one);
    for (&p, c) in g.entries.range(1..) {
        f.bump(p + 1, c.gt, c.lt, c.times);
    }
    Ok(f)
}

/// σ: ε_m ↦ −ε_m on osp(2m|2n) weights.
pub fn sigma(alg: &Algebra, lambda: &Weight) -> Result<Weight> {
    alg.sigma(lambda)
}

/// Which standard module realises a translation T_{a,a+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StdModule {
    Std,
    Dual,
}

/// Validity predicate for T_{a,a+1}: exactly one of a, a+1 is empty in the core.
pub fn t_shift_valid(f: &WeightDiagram, a: i64) -> Option<StdModule> {
    if f.kind != Kind::Gl && a < 1 {
        return None;
    }
    let c = f.core();
    let (x, y) = (c.at(a), c.at(a + 1));
    match (x.is_empty(), y.is_empty()) {
        (false, true) => Some(if x.gt > 0 { StdModule::Std } else { StdModule::Dual }),
        (true, false) => Some(if y.gt > 0 { StdModule::Dual } else { StdModule::Std }),
        _ => None,
    }
}

/// Swaps positions a and a+1 of a diagram.
pub fn swap_positions(f: &WeightDiagram, a: i64) -> WeightDiagram {
    let mut g = f.clone();
    let (x, y) = (f.at(a), f.at(a + 1));
    g.set(a, y);
    g.set(a + 1, x);
    g
}

/// T_{a,a+1} on a ρ-shifted vector.
pub fn t_shift_shifted(alg: &Algebra, v: &Weight, a: i64) -> Result<(Weight, StdModule)> {
    let f = diagram_of(alg, v)?;
    let std = t_shift_valid(&f, a)
        .ok_or_else(|| Error::pre(format!("T_{{{a},{}}} is not defined on {}", a + 1, f.render(true))))?;
    Ok((vector_of(alg, &swap_positions(&f, a))?, std))
}

/// T_{a,a+1} on a dominant weight.
pub fn t_shift(alg: &Algebra, lambda: &Weight, a: i64) -> Result<Weight> {
    let (v, _) = t_shift_shifted(alg, &(lambda + alg.rho()), a)?;
    Ok(&v - alg.rho())
}

/// Canonical invariant of the central character of μ−ρ, for ρ-shifted μ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoreFingerprint {
    pub kind: Kind,
    pub eps: Vec<Half>,
    pub delta: Vec<Half>,
    /// ±1 for typical osp(2m|2n) vectors with no zero ε-coordinate, else 0.
    pub sign: i8,
    pub t: u8,
}

pub fn core_fingerprint(alg: &Algebra, mu: &Weight) -> CoreFingerprint {
    let (mut a, mut b): (Vec<Half>, Vec<Half>) = match alg.kind {
        Kind::Gl => (mu.eps.clone(), mu.delta.iter().map(|x| -*x).collect()),
        _ => (mu.eps.iter().map(|x| x.abs()).collect(), mu.delta.iter().map(|x| x.abs()).collect()),
    };
    a.sort();
    b.sort();
    let (mut ra, mut rb) = (Vec::new(), Vec::new());
    let (mut i, mut j) = (0, 0);
    let mut cancelled = false;
    while i < a.len() || j < b.len() {
        if i < a.len() && j < b.len() && a[i] == b[j] {
            cancelled = true;
            i += 1;
            j += 1;
        } else if j >= b.len() || (i < a.len() && a[i] < b[j]) {
            ra.push(a[i]);
            i += 1;
        } else {
            rb.push(b[j]);
            j += 1;
        }
    }
    let mut sign = 0;
    let mut t = 0;
    match alg.kind {
        Kind::OspEven => {
            if ra.contains(&Half::ZERO) {
                t = 2;
            }
            if !cancelled && alg.m > 0 && mu.eps.iter().all(|x| *x != Half::ZERO) {
                let neg = mu.eps.iter().filter(|x| x.signum() < 0).count();
                sign = if neg % 2 == 0 { 1 } else { -1 };
            }
        }
        Kind::OspOdd => t = 1,
        Kind::Gl => {}
    }
    CoreFingerprint { kind: alg.kind, eps: ra, delta: rb, sign, t }
}
