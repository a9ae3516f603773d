//! The homomorphism ds on supercharacters. Tail cutting on the ℰ⁻ basis, the
//! restriction oracle and the map pr live here, with DS of simple modules at
//! their atypicality rank and superdimensions.

use crate::blockgraph::{default_provider, m_lambda_with, EdgeProvider};
use crate::charring::{
    dims, euler_char, irr_char_with, jw, kac_char, kw_numerator, weight_expand, Coeff, FormalSum, G0Char, Gauss,
};
use crate::diagrams::{check_dominant, diag, invariants, weight_of_diagram, Sign, WeightDiagram};
use crate::error::{Error, Result};
use crate::half::Half;
use crate::rootdata::{iso_set_check, Algebra, Kind, Weight};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Algebra g_x for x of rank j.
pub fn target_algebra(alg: &Algebra, j: usize) -> Result<Algebra> {
    if j > alg.defect() {
        return Err(Error::pre(format!("rank {j} exceeds the defect of {}", alg.name())));
    }
    Ok(Algebra::new(alg.kind, alg.m - j, alg.n - j))
}

fn fix_sign(f: &mut WeightDiagram) {
    let z = f.at(0);
    f.sign = match f.kind {
        Kind::Gl => Sign::None,
        Kind::OspEven if f.m > 0 && z.is_empty() => {
            if f.sign == Sign::None {
                Sign::Plus
            } else {
                f.sign
            }
        }
        Kind::OspEven => Sign::None,
        Kind::OspOdd if z.times > 0 && !z.has_core() => {
            if f.sign == Sign::None {
                Sign::Minus
            } else {
                f.sign
            }
        }
        Kind::OspOdd => Sign::None,
    };
}

/// Removes one × from the tail end: leftmost for gl (followed by the shift
/// −1 that makes λ′ agree with λ restricted to h′), position zero for osp.
fn cut_one(f: &WeightDiagram) -> Result<WeightDiagram> {
    match f.kind {
        Kind::Gl => {
            let p = *f.cross_positions().first().ok_or_else(|| Error::pre("no × left to cut"))?;
            Ok(f.without_cross(p)?.translated(-1))
        }
        _ => {
            let mut g = f.without_cross(0)?;
            fix_sign(&mut g);
            Ok(g)
        }
    }
}

/// λ′: the j leftmost × of the tail removed.
pub fn cut_tail(alg: &Algebra, lambda: &Weight, j: usize) -> Result<(Algebra, Weight)> {
    check_dominant(alg, lambda)?;
    let inv = invariants(alg, lambda)?;
    if inv.tail < j {
        return Err(Error::pre(format!("tail {} is shorter than {j}", inv.tail)));
    }
    let g2 = target_algebra(alg, j)?;
    let mut f = diag(alg, lambda)?;
    for _ in 0..j {
        f = cut_one(&f)?;
    }
    Ok((g2.clone(), weight_of_diagram(&g2, &f)?))
}

/// Inverse of [`cut_tail`] for osp: j × added at zero.
pub fn uncut_tail_osp(small: &Algebra, lambda: &Weight, j: usize) -> Result<(Algebra, Weight)> {
    if small.kind == Kind::Gl {
        return Err(Error::pre("uncutting is only defined for osp"));
    }
    let big = Algebra::new(small.kind, small.m + j, small.n + j);
    let f = diag(small, lambda)?;
    let mut g = WeightDiagram { m: big.m, n: big.n, ..f.clone() };
    let mut z = g.at(0);
    z.times += j as u32;
    g.entries.insert(0, z);
    if small.kind == Kind::OspEven {
        g.sign = Sign::None;
    } else if g.sign == Sign::None && !z.has_core() {
        g.sign = Sign::Minus;
    }
    let w = weight_of_diagram(&big, &g)?;
    check_dominant(&big, &w)?;
    Ok((big, w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    Euler,
    Kac,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsTerm {
    pub kind: TermKind,
    pub weight: Option<Weight>,
    pub coeff: i64,
}

/// ds_j applied to a supercharacter, as a combination of ℰ⁻ / sch K on g_x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsImage {
    pub target: Algebra,
    pub terms: Vec<DsTerm>,
    pub sigma_pair: bool,
    pub parity_shift: u8,
}

impl DsImage {
    fn zero(target: Algebra) -> DsImage {
        DsImage {
            target,
            terms: vec![DsTerm { kind: TermKind::Zero, weight: None, coeff: 0 }],
            sigma_pair: false,
            parity_shift: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.kind == TermKind::Zero || t.coeff == 0)
    }

    /// sch of the image as Σ s_μ ch L₀(μ) over g_x.
    pub fn super_decomposition(&self) -> Result<BTreeMap<Weight, i64>> {
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        for t in &self.terms {
            let c = match (t.kind, &t.weight) {
                (TermKind::Euler, Some(w)) => (*euler_char(&self.target, w)?).clone(),
                (TermKind::Kac, Some(w)) => kac_char(&self.target, w)?,
                _ => continue,
            };
            for (mu, s) in c.super_coeffs() {
                *out.entry(mu).or_insert(0) += t.coeff * s;
            }
        }
        let sign = if self.parity_shift == 1 { -1 } else { 1 };
        Ok(out.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, sign * c)).collect())
    }

    pub fn weight_expand(&self) -> Result<FormalSum> {
        super_weight_expand(&self.target, &self.super_decomposition()?)
    }

    pub fn sdim(&self) -> Result<i128> {
        Ok(self.super_decomposition()?.iter().map(|(mu, c)| self.target.g0_dim(mu) * *c as i128).sum())
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| {
                json!({
                    "kind": t.kind,
                    "weight": t.weight,
                    "coeff": t.coeff,
                })
            })
            .collect();
        json!({
            "target": {"kind": self.target.kind, "m": self.target.m, "n": self.target.n, "name": self.target.name()},
            "terms": terms,
            "sigma_pair": self.sigma_pair,
            "parity_shift": self.parity_shift,
        })
    }
}

/// Weight expansion of Σ s_μ ch L₀(μ).
pub fn super_weight_expand(alg: &Algebra, dec: &BTreeMap<Weight, i64>) -> Result<FormalSum> {
    let mut c = G0Char::new(0);
    for (mu, s) in dec {
        c.add_term(mu.clone(), *s);
    }
    weight_expand(alg, &c, false)
}

/// (−1)^k for gl, k summing the core symbols left of each of the j cut ×;
/// 1 for stable weights and for osp.
fn gl_cut_sign(alg: &Algebra, lambda: &Weight, j: usize) -> Result<i64> {
    if alg.kind != Kind::Gl {
        return Ok(1);
    }
    let f = diag(alg, lambda)?;
    let k: u32 = f
        .cross_positions()
        .iter()
        .take(j)
        .map(|x| f.entries.range(..*x).map(|(_, s)| s.gt + s.lt).sum::<u32>())
        .sum();
    Ok(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// ds_j(ℰ⁻_λ).
pub fn ds_on_euler(alg: &Algebra, lambda: &Weight, j: usize) -> Result<DsImage> {
    if j == 0 || j > alg.defect() {
        return Err(Error::pre(format!("rank {j} is outside 1..={}", alg.defect())));
    }
    check_dominant(alg, lambda)?;
    let target = target_algebra(alg, j)?;
    let inv = invariants(alg, lambda)?;
    if inv.tail < j {
        return Ok(DsImage::zero(target));
    }
    let (g2, l2) = cut_tail(alg, lambda, j)?;
    let c = gl_cut_sign(alg, lambda, j)?;
    let one = |kind, w: &Weight| DsTerm { kind, weight: Some(w.clone()), coeff: c };
    let mut img = DsImage { target: g2.clone(), terms: vec![], sigma_pair: false, parity_shift: 0 };
    match alg.kind {
        Kind::Gl if inv.tail == j => img.terms.push(one(TermKind::Kac, &l2)),
        Kind::OspEven if inv.tail == j && alg.m > j => {
            let ls = g2.sigma(&l2)?;
            img.terms.push(one(TermKind::Euler, &l2));
            if ls != l2 {
                img.terms.push(one(TermKind::Euler, &ls));
                img.sigma_pair = true;
            }
        }
        _ => img.terms.push(one(TermKind::Euler, &l2)),
    }
    Ok(img)
}

/// ds_j computed by restriction: e^w ↦ e^{w|h_x}, cutting (ε_m, δ₁) for gl
/// and (ε_m, δ_n) for osp at each step.
pub fn ds_restrict_oracle(alg: &Algebra, f: &FormalSum, j: usize) -> Result<(Algebra, FormalSum)> {
    let target = target_algebra(alg, j)?;
    let mut cur = f.clone();
    let (mut m, mut n) = (alg.m, alg.n);
    for _ in 0..j {
        let dj = if alg.kind == Kind::Gl { 0 } else { n - 1 };
        cur = cur.map_weights(|w| w.drop_coords(&[m - 1], &[dj]));
        m -= 1;
        n -= 1;
    }
    Ok((target, cur))
}

/// ℰ⁻_λ as a weight-level supercharacter.
pub fn euler_super_weights(alg: &Algebra, lambda: &Weight) -> Result<FormalSum> {
    weight_expand(alg, &*euler_char(alg, lambda)?, true)
}

/// L^core: the typical g_x-module of the block, ν = core diagram without ×.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreModule {
    pub algebra: Algebra,
    pub nu: Weight,
    /// ν^σ when it differs from ν; L^core is then L(ν) ⊕ L(ν^σ).
    pub sigma_partner: Option<Weight>,
    pub sdim: i128,
}

impl CoreModule {
    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.name(),
            "nu": self.nu,
            "sigma_partner": self.sigma_partner,
            "sdim": self.sdim.to_string(),
        })
    }

    /// sch L^core as Σ s_μ ch L₀(μ), highest weight vectors even.
    pub fn super_decomposition(&self) -> Result<BTreeMap<Weight, i64>> {
        let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
        for w in std::iter::once(&self.nu).chain(self.sigma_partner.as_ref()) {
            for (mu, s) in euler_char(&self.algebra, w)?.super_coeffs() {
                *out.entry(mu).or_insert(0) += s;
            }
        }
        Ok(out.into_iter().filter(|(_, c)| *c != 0).collect())
    }
}

/// L^core for the block of λ, with all at(λ) crosses cut.
pub fn core_module(alg: &Algebra, lambda: &Weight) -> Result<CoreModule> {
    check_dominant(alg, lambda)?;
    let mut f = diag(alg, lambda)?;
    let j = f.atypicality();
    for _ in 0..j {
        f = match f.kind {
            Kind::Gl => {
                let p = f.cross_positions()[0];
                f.without_cross(p)?.translated(-1)
            }
            _ => {
                let p = f.cross_positions()[0];
                let mut g = f.without_cross(p)?;
                fix_sign(&mut g);
                g
            }
        };
    }
    let g2 = target_algebra(alg, j)?;
    let nu = weight_of_diagram(&g2, &f)?;
    let partner = if g2.kind == Kind::OspEven && g2.m > 0 {
        let s = g2.sigma(&nu)?;
        (s != nu).then_some(s)
    } else {
        None
    };
    let mut sdim = dims(&g2, &*euler_char(&g2, &nu)?).sdim;
    if let Some(s) = &partner {
        sdim += dims(&g2, &*euler_char(&g2, s)?).sdim;
    }
    Ok(CoreModule { algebra: g2, nu, sigma_partner: partner, sdim })
}

/// DS_j(L(λ)) at j = at(λ): Π^{parity_shift}(L^core)^{⊕ mult}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsSimple {
    pub core: CoreModule,
    pub mult: i64,
    /// ||howl(λ)|| mod 2: the shift for modules whose parity follows the weight.
    pub parity_shift: u8,
    /// The shift once L(λ) and L^core both have even highest weight vectors.
    pub parity_shift_even_hw: u8,
}

impl DsSimple {
    pub fn to_json(&self) -> Value {
        json!({
            "core": self.core.to_json(),
            "mult": self.mult,
            "parity_shift": self.parity_shift,
            "parity_shift_even_hw": self.parity_shift_even_hw,
        })
    }
}

fn m_of(provider: Option<&dyn EdgeProvider>, alg: &Algebra, lambda: &Weight) -> Result<i64> {
    let inv = invariants(alg, lambda)?;
    if inv.atypicality == 0 || (alg.kind != Kind::Gl && inv.is_kostant) {
        return Ok(1);
    }
    match provider {
        Some(p) => m_lambda_with(p, alg, lambda),
        None => m_lambda_with(default_provider(alg)?, alg, lambda),
    }
}

pub fn ds_on_simple(alg: &Algebra, lambda: &Weight) -> Result<DsSimple> {
    ds_on_simple_with(None, alg, lambda)
}

pub fn ds_on_simple_with(provider: Option<&dyn EdgeProvider>, alg: &Algebra, lambda: &Weight) -> Result<DsSimple> {
    let core = core_module(alg, lambda)?;
    let mult = m_of(provider, alg, lambda)?;
    let inv = invariants(alg, lambda)?;
    let norm = inv.norm.unwrap_or(0);
    let shift = norm.rem_euclid(2) as u8;
    let p = lambda.parity().ok_or_else(|| Error::pre("parity undefined"))?;
    let q = core.nu.parity().ok_or_else(|| Error::pre("parity undefined"))?;
    Ok(DsSimple { core, mult, parity_shift: shift, parity_shift_even_hw: shift ^ p ^ q })
}

/// ds_j(sch L(λ)) by linearity over its ℰ-decomposition, j = at(λ).
pub fn ds_simple_by_linearity(
    provider: Option<&dyn EdgeProvider>,
    alg: &Algebra,
    lambda: &Weight,
) -> Result<(Algebra, BTreeMap<Weight, i64>)> {
    let inv = invariants(alg, lambda)?;
    let j = inv.atypicality;
    let target = target_algebra(alg, j)?;
    if j == 0 {
        return Err(Error::pre("typical weights have no DS image to cut"));
    }
    let ic = if inv.is_kostant {
        crate::charring::irr_char(alg, lambda)?
    } else {
        match provider {
            Some(p) => irr_char_with(p, alg, lambda)?,
            None => irr_char_with(default_provider(alg)?, alg, lambda)?,
        }
    };
    let lp = lambda.parity().ok_or_else(|| Error::pre("parity undefined"))?;
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mu, a) in &ic.euler_terms {
        // sch L(λ) = Σ (−1)^{p(λ−μ)} a_μ ℰ⁻_μ
        let sign = if lp ^ mu.parity().unwrap_or(0) == 0 { 1 } else { -1 };
        let img = ds_on_euler(alg, mu, j)?;
        for (nu, c) in img.super_decomposition()? {
            *out.entry(nu).or_insert(0) += sign * a * c;
        }
    }
    Ok((target, out.into_iter().filter(|(_, c)| *c != 0).collect()))
}

/// sdim L(λ), highest weight vector even: (−1)^{shift}·m(λ)·sdim L^core, or 0.
pub fn sdim_simple(alg: &Algebra, lambda: &Weight) -> Result<i128> {
    sdim_simple_with(None, alg, lambda)
}

pub fn sdim_simple_with(provider: Option<&dyn EdgeProvider>, alg: &Algebra, lambda: &Weight) -> Result<i128> {
    check_dominant(alg, lambda)?;
    let inv = invariants(alg, lambda)?;
    if inv.atypicality < alg.defect() {
        return Ok(0);
    }
    let d = ds_on_simple_with(provider, alg, lambda)?;
    let sign: i128 = if d.parity_shift_even_hw == 1 { -1 } else { 1 };
    Ok(sign * d.mult as i128 * d.core.sdim)
}

/// Data of the modified superdimension on the ideal of atypicality-k modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedSdim {
    pub m: i64,
    pub core: Option<CoreModule>,
}

pub fn sdim_modified(alg: &Algebra, lambda: &Weight, k: usize) -> Result<ModifiedSdim> {
    check_dominant(alg, lambda)?;
    let at = invariants(alg, lambda)?.atypicality;
    if at > k {
        return Err(Error::pre(format!("atypicality {at} exceeds k = {k}")));
    }
    if at < k {
        return Ok(ModifiedSdim { m: 0, core: None });
    }
    let d = ds_on_simple(alg, lambda)?;
    Ok(ModifiedSdim { m: d.mult, core: Some(d.core) })
}

/// (p, q) with β₀ = ±(ε_p − δ_q).
pub fn beta0_indices(beta0: &Weight) -> Result<(usize, usize, i64)> {
    let nz_e: Vec<usize> = (0..beta0.m()).filter(|&i| beta0.eps[i] != Half::ZERO).collect();
    let nz_d: Vec<usize> = (0..beta0.n()).filter(|&j| beta0.delta[j] != Half::ZERO).collect();
    if let ([p], [q]) = (nz_e.as_slice(), nz_d.as_slice()) {
        let (a, b) = (beta0.eps[*p], beta0.delta[*q]);
        if a == Half::ONE && b == -Half::ONE {
            return Ok((*p, *q, 1));
        }
        if a == -Half::ONE && b == Half::ONE {
            return Ok((*p, *q, -1));
        }
    }
    Err(Error::pre(format!("{beta0} is not of the form ±(ε_p − δ_q)")))
}

/// pr(e^{aε_p}) = 1, pr(e^{aδ_q}) = e^{iπa}; the result lives on h′.
pub fn pr_map(f: &FormalSum<Gauss>, beta0: &Weight) -> Result<FormalSum<Gauss>> {
    let (p, q, _) = beta0_indices(beta0)?;
    let mut out = FormalSum::new();
    for (w, c) in f.iter() {
        out.add_term(w.drop_coords(&[p], &[q]), *c * Gauss::i_pow(w.delta[q].twice()));
    }
    Ok(out)
}

/// Both sides of the pr identity for KW(λ̂, S)·(1 + e^{−β₀}), multiplied by
/// the W′-invariant Π_{γ∈Δ′₁⁺}(e^{γ/2}+e^{−γ/2}) so that they are polynomials.
pub fn pr_identity_sides(
    alg: &Algebra,
    lambda_hat: &Weight,
    s: &[Weight],
    beta0: &Weight,
) -> Result<(FormalSum<Gauss>, FormalSum<Gauss>)> {
    let (p, q, sgn0) = beta0_indices(beta0)?;
    if !s.contains(beta0) || !iso_set_check(s) {
        return Err(Error::pre("S must be an iso-set containing β₀"));
    }
    for b in s {
        let (_, _, sg) = beta0_indices(b)?;
        if sg != sgn0 {
            return Err(Error::pre(format!("{b} is not a permutation image of β₀")));
        }
    }
    let xi = if alg.kind == Kind::OspOdd {
        Weight {
            eps: vec![Half::HALF; alg.m],
            delta: vec![-Half::HALF; alg.n],
        }
    } else {
        alg.zero()
    };
    let diff = lambda_hat - &xi;
    for b in s {
        let (a, c, _) = beta0_indices(b)?;
        if diff.eps[a] != Half::ZERO || diff.delta[c] != Half::ZERO {
            return Err(Error::pre(format!("λ̂ − ξ is not orthogonal to h(S)* at {b}")));
        }
    }
    let g2 = Algebra::new(alg.kind, alg.m - 1, alg.n - 1);
    let restrict = |w: &Weight| w.drop_coords(&[p], &[q]);
    let neg0 = -beta0;

    let mut lhs: FormalSum<Gauss> = FormalSum::new();
    for w in alg.weyl_elements() {
        let t: Vec<Weight> = s.iter().map(|b| w.apply(b)).collect();
        let factor = if t.contains(beta0) {
            1
        } else if t.contains(&neg0) {
            -1
        } else {
            continue;
        };
        let rest: Vec<Weight> = t.iter().filter(|b| **b != *beta0 && **b != neg0).map(&restrict).collect();
        let x = w.apply(lambda_hat);
        let c = Gauss::i_pow(x.delta[q].twice()) * Gauss::from_i64(factor * w.sign());
        let num = kw_numerator(&g2, &restrict(&x), &rest)?;
        lhs = lhs.add(&num.to_gauss().scale(c));
    }

    let l2 = restrict(lambda_hat);
    let c = Gauss::i_pow(lambda_hat.delta[q].twice());
    let rhs = if alg.kind == Kind::OspEven && alg.m > 1 && s.len() == 1 {
        let ls = g2.sigma(&l2)?;
        jw(&g2, &kw_numerator(&g2, &l2, &[])?).add(&jw(&g2, &kw_numerator(&g2, &ls, &[])?)).to_gauss()
    } else {
        let a = match alg.kind {
            Kind::Gl => s.len() as i64,
            Kind::OspEven if alg.m == 1 => s.len() as i64,
            _ => 2 * s.len() as i64,
        };
        let s2: Vec<Weight> = s.iter().filter(|b| *b != beta0).map(&restrict).collect();
        jw(&g2, &kw_numerator(&g2, &l2, &s2)?).to_gauss().scale(c * Gauss::from_i64(a))
    };
    Ok((lhs, rhs))
}

pub fn pr_identity_check(alg: &Algebra, lambda_hat: &Weight, s: &[Weight], beta0: &Weight) -> Result<bool> {
    let (l, r) = pr_identity_sides(alg, lambda_hat, s, beta0)?;
    Ok(l == r)
}
