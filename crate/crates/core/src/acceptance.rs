//! The acceptance suite shared by `superchar selftest` and the test target.
//!
//! Every check is exact. Each criterion reports pass/fail with a short detail
//! line; criterion 8 carries a known-failure note (see [`Outcome::known_failure`]).

use crate::blockgraph::{build_block_graph, inversion_check, MarkedGraph};
use crate::charring::{
    denominator_check, dims, euler_char, euler_direct, height2, irr_char, j_value, jw, kw_general,
    kw_numerator, kw_series, std_weights, theta, FormalSum, G0Char,
};
use crate::diagrams::{
    core_fingerprint, dagger_shifted, diagram_of, enumerate_dominant, invariants, t_shift_shifted, t_shift_valid,
    weight_of_diagram, WeightDiagram,
};
use crate::dsfunctor::{ds_on_euler, ds_restrict_oracle, euler_super_weights, pr_identity_check};
use crate::error::Result;
use crate::half::Half;
use crate::rootdata::{build_algebra, Algebra, Kind, Letter, Weight};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    /// Set when a failure is understood and recorded rather than a defect.
    pub known_failure: Option<&'static str>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{:>2}] {}: {}", self.id, self.title, self.detail)?;
        if let (false, Some(why)) = (self.pass, self.known_failure) {
            write!(f, " (known: {why})")?;
        }
        Ok(())
    }
}

pub const TITLES: [&str; 12] = [
    "gl(2|2) Euler decompositions",
    "adjoint identity",
    "denominator identities",
    "ds on Euler characters vs restriction",
    "Euler characters as KW terms",
    "path matrix inversion",
    "Kostant sources",
    "osp superdimension tables",
    "dimension formula",
    "translation coherence",
    "rank-2 restriction composes",
    "pr identity",
];

const KNOWN_8: &str = "the table entries (i-1,i) and (i,i+1,i+2) have ||λ||_gr > 0, so they are not Kostant \
                       weights and sdim ℰ_λ = 0 for them; only the (0,..,0) entries can match without an osp provider";

pub fn run(id: u8) -> Outcome {
    let res = match id {
        1 => c1_gl22_euler(),
        2 => c2_adjoint(),
        3 => c3_denominators(),
        4 => c4_ds_vs_restriction(),
        5 => c5_euler_as_kw(),
        6 => c6_inversion(),
        7 => c7_kostant_sources(),
        8 => c8_osp_tables(),
        9 => c9_dimension_formula(),
        10 => c10_translation(),
        11 => c11_composability(),
        12 => c12_pr(),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let (pass, detail) = res.unwrap_or_else(|e| (false, format!("error: {e}")));
    Outcome {
        id,
        title: TITLES.get(id as usize - 1).copied().unwrap_or("?"),
        pass,
        detail,
        known_failure: (id == 8).then_some(KNOWN_8),
    }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=12).map(run).collect()
}

type Check = Result<(bool, String)>;

fn alg(kind: Kind, m: usize, n: usize) -> Algebra {
    build_algebra(kind, m, n).expect("fixed algebra")
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The gl(2|2) weight s(β₁+β₂) + iβ₁ with β₁ = ε₁−δ₂, β₂ = ε₂−δ₁.
pub fn gl22_si(s: i64, i: i64) -> Weight {
    Weight::from_ints(&[s + i, s], &[-s, -s - i])
}

fn c1_gl22_euler() -> Check {
    let g = alg(Kind::Gl, 2, 2);
    let mut n = 0;
    let mut bad = Vec::new();
    for s in -2..=2 {
        for i in 0..=5 {
            // ℰ_{s;i} in terms of simple characters
            let e = euler_char(&g, &gl22_si(s, i))?;
            let mut want = G0Char::new(0);
            let mut put = |w: Weight, k: i64| -> Result<()> {
                want.add_scaled(&irr_char(&g, &w)?.char, k);
                Ok(())
            };
            put(gl22_si(s, i), 1)?;
            if i == 1 {
                put(gl22_si(s, 0), 1)?;
                put(gl22_si(s - 1, 0), 1)?;
            } else if i > 1 {
                put(gl22_si(s, i - 1), 1)?;
            }
            n += 1;
            if e.terms != want.terms {
                bad.push(format!("E({s};{i})"));
            }
            // ch L(s;i) in the Euler basis
            let mut want_e: BTreeMap<Weight, i64> = BTreeMap::new();
            if i == 0 {
                want_e.insert(gl22_si(s, 0), 1);
            } else {
                want_e.insert(gl22_si(s - 1, 0), sign(i));
                for k in 0..=i {
                    want_e.insert(gl22_si(s, k), sign(i - k));
                }
            }
            let ic = irr_char(&g, &gl22_si(s, i))?;
            let got: BTreeMap<Weight, i64> = ic.euler_terms.iter().cloned().collect();
            n += 1;
            if got != want_e {
                bad.push(format!("L({s};{i})"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{} of {n} identities hold{}", n - bad.len(), list(&bad))))
}

fn list(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        let head: Vec<&str> = bad.iter().take(5).map(|s| s.as_str()).collect();
        format!("; failing: {}", head.join(", "))
    }
}

fn c2_adjoint() -> Check {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [2usize, 3] {
        let g = alg(Kind::Gl, n, n);
        let mut lam = g.zero();
        lam.eps[0] = Half::ONE;
        lam.delta[n - 1] = -Half::ONE;
        let mu = Weight::from_ints(&vec![-1; n], &vec![1; n]);
        let zero = g.zero();
        let ic = irr_char(&g, &lam)?;
        let got: BTreeMap<Weight, i64> = ic.euler_terms.iter().cloned().collect();
        // the sign of e^μ is (−1)^{||λ||−||μ||}, which alternates with n
        let sign_mu = if n % 2 == 0 { -1 } else { 1 };
        let want: BTreeMap<Weight, i64> = [(lam.clone(), 1), (zero.clone(), -1), (mu.clone(), sign_mu)].into_iter().collect();
        // ℰ_0 = 1 and ℰ_μ = e^μ are one-dimensional
        let one_dim = |w: &Weight| -> Result<bool> {
            let e = euler_char(&g, w)?;
            Ok(e.terms.len() == 1 && e.terms.get(w) == Some(&1) && g.g0_dim(w) == 1)
        };
        let d = dims(&g, &ic.char);
        // L sits in the adjoint as psl(n|n)
        let psl = 4 * (n * n) as i128 - 2;
        let this = got == want && one_dim(&zero)? && one_dim(&mu)? && d.sdim == 2 && d.dim == psl;
        ok &= this;
        notes.push(format!("{}: {} dim {} sdim {}", g.name(), if this { "ok" } else { "mismatch" }, d.dim, d.sdim));
    }
    Ok((ok, notes.join(", ")))
}

fn c3_denominators() -> Check {
    let mut algs: Vec<Algebra> = (1..=3).map(|s| alg(Kind::Gl, s, s)).collect();
    for s in 1..=2usize {
        algs.push(alg(Kind::OspEven, s, s));
        algs.push(alg(Kind::OspOdd, s, s));
        algs.push(alg(Kind::OspEven, s + 1, s));
    }
    let mut bad = Vec::new();
    for a in &algs {
        let r = denominator_check(a)?;
        if !(r.ok && r.reversed_ok) {
            bad.push(a.name());
        }
    }
    Ok((bad.is_empty(), format!("{} of {} algebras (both pairings){}", algs.len() - bad.len(), algs.len(), list(&bad))))
}

/// Dominant weights of the fixture window with ||λ||_gr ≤ `max_gr`.
pub fn fixtures(a: &Algebra, max_gr: i64) -> Vec<Weight> {
    enumerate_dominant(a, -2, 3)
        .into_iter()
        .filter(|w| invariants(a, w).map(|i| i.norm_gr <= max_gr).unwrap_or(false))
        .collect()
}

fn c4_algebras() -> Vec<Algebra> {
    vec![
        alg(Kind::Gl, 2, 2),
        alg(Kind::Gl, 3, 2),
        alg(Kind::OspOdd, 1, 1),
        alg(Kind::OspEven, 2, 2),
        alg(Kind::OspOdd, 2, 2),
    ]
}

fn c4_ds_vs_restriction() -> Check {
    let mut n = 0;
    let mut bad = Vec::new();
    let mut branches: BTreeMap<String, usize> = BTreeMap::new();
    for a in c4_algebras() {
        for w in fixtures(&a, 3) {
            let img = ds_on_euler(&a, &w, 1)?;
            let key = match (img.terms.first().map(|t| t.kind), img.sigma_pair) {
                (None, _) => "zero".to_string(),
                (Some(_), true) => "sigma-doubled".to_string(),
                (Some(k), false) => format!("{k:?}").to_lowercase(),
            };
            *branches.entry(key).or_default() += 1;
            let lhs = img.weight_expand()?;
            let (_, rhs) = ds_restrict_oracle(&a, &euler_super_weights(&a, &w)?, 1)?;
            n += 1;
            if lhs != rhs {
                bad.push(format!("{} {w}", a.name()));
            }
        }
    }
    let br: Vec<String> = branches.iter().map(|(k, v)| format!("{k} {v}")).collect();
    Ok((bad.is_empty(), format!("{} of {n} weights agree [{}]{}", n - bad.len(), br.join(", "), list(&bad))))
}

/// j·Re^ρ·ℰ_λ and KW(λ̂, S), both multiplied by Π_{Δ₁⁺}(e^{β/2}+e^{−β/2}).
fn euler_kw_sides(a: &Algebra, w: &Weight) -> Result<(FormalSum, FormalSum)> {
    let inv = invariants(a, w)?;
    let s = inv.tail;
    let (lam_hat, j) = match a.kind {
        Kind::Gl => {
            let mut word = Vec::new();
            word.extend((0..a.m - s).map(Letter::E));
            for k in 0..s {
                word.push(Letter::E(a.m - s + k));
                word.push(Letter::D(k));
            }
            word.extend((s..a.n).map(Letter::D));
            let fact: i64 = (1..=s as i64).product();
            (w + &a.rho_for_word(&word), sign((s / 2) as i64) * fact)
        }
        _ => (w + a.rho(), j_value(a.kind, s, inv.t)),
    };
    let e = euler_direct(a, w)?;
    let mut lhs = FormalSum::new();
    for (mu, c) in &e.terms {
        lhs = lhs.add(&jw(a, &FormalSum::monomial(mu + a.rho0(), j * c)));
    }
    let rhs = jw(a, &kw_numerator(a, &lam_hat, &a.iso_set(s))?);
    Ok((lhs, rhs))
}

fn c5_euler_as_kw() -> Check {
    let mut n = 0;
    let mut bad = Vec::new();
    for a in c4_algebras() {
        for w in fixtures(&a, 2) {
            if !invariants(&a, &w)?.is_stable {
                continue;
            }
            let (l, r) = euler_kw_sides(&a, &w)?;
            n += 1;
            if l != r {
                bad.push(format!("{} {w}", a.name()));
            }
        }
    }
    Ok((bad.is_empty(), format!("{} of {n} stable weights{}", n - bad.len(), list(&bad))))
}

/// Core-free truncation of gl(n|n): seeds are the core-free fixtures up to ||·||_gr = 4.
pub fn chi0_graph(n: usize) -> Result<MarkedGraph> {
    let a = alg(Kind::Gl, n, n);
    let seeds: Vec<Weight> = enumerate_dominant(&a, -1, 2)
        .into_iter()
        .filter(|w| {
            invariants(&a, w).map(|i| i.atypicality == n && i.norm_gr <= 4).unwrap_or(false)
        })
        .collect();
    build_block_graph(&a, &seeds, 4)
}

fn c6_inversion() -> Check {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [2, 3] {
        let g = chi0_graph(n)?;
        let r = inversion_check(&g)?;
        ok &= r;
        notes.push(format!("gl({n}|{n}) {} vertices {}", g.len(), if r { "ok" } else { "not inverse" }));
    }
    Ok((ok, notes.join(", ")))
}

fn c7_kostant_sources() -> Check {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in [2, 3] {
        let g = chi0_graph(n)?;
        let d = g.d_less();
        let unreached = (0..g.len()).filter(|&v| !(0..g.len()).any(|u| g.is_kostant(u) && d[v][u] > 0)).count();
        let fed = g.edges.iter().filter(|e| g.is_kostant(e.dst)).count();
        let kost = (0..g.len()).filter(|&v| g.is_kostant(v)).count();
        ok &= unreached == 0 && fed == 0;
        notes.push(format!("gl({n}|{n}) {kost} Kostant, {unreached} unreached, {fed} edges into Kostant"));
    }
    Ok((ok, notes.join(", ")))
}

/// Kostant-labelled entries of the osp(4|4) and osp(6|6) tables: × positions and sdim.
pub fn osp_table_entries() -> Vec<(usize, Vec<i64>, i128)> {
    let mut v = vec![(2, vec![0, 0], 1)];
    for i in 1..=4 {
        v.push((2, vec![i - 1, i], 2));
    }
    v.push((3, vec![0, 0, 0], 1));
    for i in 1..=3 {
        v.push((3, vec![i, i + 1, i + 2], 4));
    }
    v
}

fn c8_osp_tables() -> Check {
    let mut bad = Vec::new();
    let entries = osp_table_entries();
    for (k, pos, want) in &entries {
        let a = alg(Kind::OspEven, *k, *k);
        let mut f = WeightDiagram::empty(a.kind, a.m, a.n);
        for p in pos {
            f.bump(*p, 0, 0, 1);
        }
        let w = weight_of_diagram(&a, &f)?;
        let sd = dims(&a, &euler_char(&a, &w)?.with_ref_parity(w.parity().unwrap_or(0))).sdim;
        if sd != *want {
            bad.push(format!("{} {pos:?} got {sd} want {want}", a.name()));
        }
    }
    Ok((
        bad.is_empty(),
        format!(
            "{} of {} entries match; extended provider check skipped (no osp provider){}",
            entries.len() - bad.len(),
            entries.len(),
            list(&bad)
        ),
    ))
}

/// Σ_U Π_α (λ+ρ₀−ΣU | α)/(ρ₀|α) over U ⊂ Δ₁⁺∖S, as an exact quotient.
pub fn subset_sum_dim(a: &Algebra, lambda: &Weight, s: &[Weight]) -> Option<i128> {
    let odd: Vec<&Weight> = a.odd_positive().iter().filter(|b| !s.iter().any(|c| c == *b || *c == -*b)).collect();
    let den: i128 = a.even_positive().iter().map(|al| a.rho0().form4(al) as i128).product();
    // e^x/(1+e^{β}) = e^{x−β}/(1+e^{−β}) moves a negative root of S into the base
    let pos = a.odd_positive();
    let mut base = lambda + a.rho0();
    for c in s.iter().filter(|c| !pos.contains(c)) {
        base = &base + c;
    }
    let mut num: i128 = 0;
    for mask in 0u64..(1 << odd.len()) {
        let mut x = base.clone();
        for (k, b) in odd.iter().enumerate() {
            if mask >> k & 1 == 1 {
                x = &x - *b;
            }
        }
        num += a.even_positive().iter().map(|al| x.form4(al) as i128).product::<i128>();
    }
    (num % den == 0).then_some(num / den)
}

fn c9_dimension_formula() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut n = 0;
    let mut bad = Vec::new();
    for a in c4_algebras() {
        let weyl = a.weyl_elements();
        for _ in 0..50 {
            let lam = Weight::from_ints(
                &(0..a.m).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>(),
                &(0..a.n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>(),
            );
            let k = rng.gen_range(0..=a.defect());
            let w = &weyl[rng.gen_range(0..weyl.len())];
            let s: Vec<Weight> = a.iso_set(k).iter().map(|b| w.apply(b)).collect();
            let got = dims(&a, &kw_general(&a, &(&lam + a.rho()), &s, 0)?).dim;
            n += 1;
            if subset_sum_dim(&a, &lam, &s) != Some(got) {
                bad.push(format!("{} {lam} |S|={k}", a.name()));
            }
        }
    }
    let mut m = 0;
    for a in [alg(Kind::Gl, 2, 2), alg(Kind::Gl, 3, 2)] {
        for w in fixtures(&a, 3) {
            let d = dims(&a, &irr_char(&a, &w)?.char);
            m += 1;
            if d.sdim.abs() > d.dim {
                bad.push(format!("|sdim|>dim at {} {w}", a.name()));
            }
        }
    }
    Ok((bad.is_empty(), format!("{} random (λ,S) pairs, {m} irreducible characters{}", n, list(&bad))))
}

fn c10_translation() -> Check {
    let a = alg(Kind::Gl, 2, 3);
    let hv = std_weights(&a, crate::diagrams::StdModule::Std).iter().map(|(w, _)| height2(&a, w).abs()).max().unwrap_or(0);
    let (mut n, mut bad) = (0, Vec::new());
    for lam in fixtures(&a, 2) {
        let v = &lam + a.rho();
        let f = diagram_of(&a, &v)?;
        let lo = f.entries.keys().next().copied().unwrap_or(0) - 2;
        let hi = f.entries.keys().last().copied().unwrap_or(0) + 1;
        for pos in lo..=hi {
            if t_shift_valid(&f, pos).is_none() {
                continue;
            }
            n += 1;
            let (tv, vm) = t_shift_shifted(&a, &v, pos)?;
            let d = dagger_shifted(&a, &v)?;
            let td = dagger_shifted(&a, &tv)?;
            let (tdag, _) = t_shift_shifted(&a, &d.lambda, pos)?;
            let (chi, chi2) = (core_fingerprint(&a, &v), core_fingerprint(&a, &tv));
            // Kac modules: Re^ρ ch K(λ−ρ) = J_W(e^λ)
            let k = theta(&a, &jw(&a, &FormalSum::monomial(v.clone(), 1)), vm, &chi, &chi2);
            let kac_ok = k == jw(&a, &FormalSum::monomial(tv.clone(), 1));
            // KW(λ) as a series truncated below `cut`
            let cut = height2(&a, &d.lambda).min(height2(&a, &td.lambda)) - 30;
            let s1 = kw_series(&a, &d.lambda, &d.s, cut - hv)?;
            let s2 = kw_series(&a, &td.lambda, &td.s, cut)?;
            let th = theta(&a, &s1, vm, &chi, &chi2).retain(|w| height2(&a, w) >= cut);
            if tdag != td.lambda || th != s2 || !kac_ok {
                bad.push(format!("{lam} a={pos}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{} of {n} (λ, a) pairs{}", n - bad.len(), list(&bad))))
}

fn c11_composability() -> Check {
    let a = alg(Kind::Gl, 2, 2);
    let (mut n, mut bad) = (0, Vec::new());
    for w in fixtures(&a, 3) {
        let f = euler_super_weights(&a, &w)?;
        let (_, two) = ds_restrict_oracle(&a, &f, 2)?;
        let (mid, one) = ds_restrict_oracle(&a, &f, 1)?;
        let (_, again) = ds_restrict_oracle(&mid, &one, 1)?;
        n += 1;
        if two != again {
            bad.push(w.to_string());
        }
    }
    Ok((bad.is_empty(), format!("{} of {n} weights{}", n - bad.len(), list(&bad))))
}

/// (algebra, λ̂, S, β₀) cases for the pr identity.
pub fn pr_cases() -> Vec<(Algebra, Weight, Vec<Weight>, Weight)> {
    let mut out = Vec::new();
    let root = |a: &Algebra, p: usize, q: usize, sg: i64| (&a.eps(p) - &a.delta(q)).scale(sg);
    let g = alg(Kind::Gl, 2, 2);
    for (p, q) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for sg in [1, -1] {
            let b = root(&g, p, q, sg);
            for x in -2..=2 {
                for y in -2..=2 {
                    let mut l = g.zero();
                    l.eps[1 - p] = Half::int(x);
                    l.delta[1 - q] = Half::int(y);
                    out.push((g.clone(), l, vec![b.clone()], b.clone()));
                }
            }
        }
    }
    for pairing in [[(0, 0), (1, 1)], [(0, 1), (1, 0)]] {
        let s: Vec<Weight> = pairing.iter().map(|&(p, q)| root(&g, p, q, 1)).collect();
        for b in &s {
            out.push((g.clone(), g.zero(), s.clone(), b.clone()));
        }
    }
    let o3 = alg(Kind::OspOdd, 1, 1);
    for sg in [1, -1] {
        let b = root(&o3, 0, 0, sg);
        let xi = Weight { eps: vec![Half::HALF], delta: vec![-Half::HALF] };
        out.push((o3.clone(), xi, vec![b.clone()], b));
    }
    let o4 = alg(Kind::OspEven, 2, 2);
    for (p, q) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for sg in [1, -1] {
            let b = root(&o4, p, q, sg);
            for x in -2..=2 {
                for y in -2..=2 {
                    let mut l = o4.zero();
                    l.eps[1 - p] = Half::int(x);
                    l.delta[1 - q] = Half::int(y);
                    out.push((o4.clone(), l, vec![b.clone()], b.clone()));
                }
            }
        }
    }
    out
}

fn c12_pr() -> Check {
    let cases = pr_cases();
    let mut bad = Vec::new();
    for (a, l, s, b) in &cases {
        if !pr_identity_check(a, l, s, b)? {
            bad.push(format!("{} {l} β₀={b}", a.name()));
        }
    }
    Ok((bad.is_empty(), format!("{} of {} cases{}", cases.len() - bad.len(), cases.len(), list(&bad))))
}
