//! Characters. Exponential sums, decompositions into simple g₀-modules, the
//! alternants KW(λ, S) and the Euler characters ℰ_λ built from them.
//!
//! Everything is exact. KW(λ̂, T)/(Re^ρ) is computed as the alternant
//! J_W(e^{λ̂+½ΣT+½ΣΔ'}·Π_{β∈Δ'}(1+e^{−β})) / J_W(e^{ρ₀}), Δ' = Δ₁⁺ ∖ ±T,
//! so every monomial reduces by Weyl's character formula to ±ch L₀(μ).

use crate::blockgraph::{build_block_graph_with, default_provider, sign_pow, EdgeProvider};
use crate::diagrams::{check_dominant, core_fingerprint, dagger, invariants, CoreFingerprint, StdModule};
use crate::error::{Error, Result};
use crate::half::Half;
use crate::rootdata::{iso_set_check, Algebra, Kind, Letter, Orbit, Weight};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Coefficient ring of a [`FormalSum`].
pub trait Coeff:
    Copy + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    const ZERO: Self;
    fn from_i64(k: i64) -> Self;
    fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }
}

impl Coeff for i64 {
    const ZERO: i64 = 0;
    fn from_i64(k: i64) -> i64 {
        k
    }
}

/// Gaussian integer a + bi.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct Gauss {
    pub re: i64,
    pub im: i64,
}

impl Gauss {
    pub const I: Gauss = Gauss { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Gauss {
        Gauss { re, im }
    }

    /// i^k.
    pub fn i_pow(k: i64) -> Gauss {
        match k.rem_euclid(4) {
            0 => Gauss::new(1, 0),
            1 => Gauss::new(0, 1),
            2 => Gauss::new(-1, 0),
            _ => Gauss::new(0, -1),
        }
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Gauss::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-self.re, -self.im)
    }
}

impl Coeff for Gauss {
    const ZERO: Gauss = Gauss { re: 0, im: 0 };
    fn from_i64(k: i64) -> Gauss {
        Gauss::new(k, 0)
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, i) => write!(f, "{i}i"),
            (r, i) if i < 0 => write!(f, "{r}-{}i", -i),
            (r, i) => write!(f, "{r}+{i}i"),
        }
    }
}

impl fmt::Debug for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite sum Σ c_w e^w.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSum<C = i64> {
    terms: BTreeMap<Weight, C>,
}

impl<C: Coeff> Default for FormalSum<C> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> FormalSum<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(w: Weight, c: C) -> Self {
        let mut s = Self::new();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Weight, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = *o.get() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
        }
    }

    pub fn get(&self, w: &Weight) -> C {
        self.terms.get(w).copied().unwrap_or(C::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -*c);
        }
        out
    }

    pub fn scale(&self, k: C) -> Self {
        let mut out = Self::new();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), *c * k);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a + b, *x * *y);
            }
        }
        out
    }

    /// Multiplication by e^w.
    pub fn shift(&self, w: &Weight) -> Self {
        self.map_weights(|x| x + w)
    }

    /// Multiplication by 1 + e^{−β}.
    pub fn times_one_plus(&self, beta: &Weight) -> Self {
        self.add(&self.shift(&-beta))
    }

    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        let mut out = Self::new();
        for (w, c) in &self.terms {
            out.add_term(f(w), *c);
        }
        out
    }

    pub fn retain(&self, keep: impl Fn(&Weight) -> bool) -> Self {
        FormalSum { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), *c)).collect() }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(C) -> D) -> FormalSum<D> {
        let mut out = FormalSum::<D>::new();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(*c));
        }
        out
    }
}

impl FormalSum<i64> {
    /// π(e^w) = (−1)^{p(w)} e^w.
    pub fn pi(&self) -> Result<FormalSum<i64>> {
        let mut out = FormalSum::new();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), parity_sign(w)? * c);
        }
        Ok(out)
    }

    pub fn to_gauss(&self) -> FormalSum<Gauss> {
        self.map_coeffs(Gauss::from_i64)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(w, c)| json!({"weight": w.to_string(), "coeff": c})).collect())
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for FormalSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}·e^{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn parity_sign(w: &Weight) -> Result<i64> {
    let p = w.parity().ok_or_else(|| Error::pre(format!("parity of {w} is undefined")))?;
    Ok(if p == 0 { 1 } else { -1 })
}

/// Σ_w sgn(w)·w(f) over the even Weyl group.
pub fn jw<C: Coeff>(alg: &Algebra, f: &FormalSum<C>) -> FormalSum<C> {
    let mut out = FormalSum::new();
    for w in alg.weyl_elements() {
        let s = C::from_i64(w.sign());
        for (x, c) in f.iter() {
            out.add_term(w.apply(x), *c * s);
        }
    }
    out
}

/// Rewrites J_W(f) in the basis J_W(e^ν), ν strictly dominant: the result
/// is keyed by ν.
pub fn alternant_reduce(alg: &Algebra, f: &FormalSum) -> FormalSum {
    let mut out = FormalSum::new();
    for (w, c) in f.iter() {
        if let Orbit::Regular { rep, sign } = alg.weyl_orbit_normalize(w) {
            out.add_term(rep, sign * c);
        }
    }
    out
}

/// A virtual g₀-module Σ c_μ L₀(μ). The constituent L₀(μ) sits in parity
/// p(μ) + `ref_parity`, i.e. relative to a highest weight vector of parity 0.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct G0Char {
    pub terms: BTreeMap<Weight, i64>,
    pub ref_parity: u8,
}

impl G0Char {
    pub fn new(ref_parity: u8) -> G0Char {
        G0Char { terms: BTreeMap::new(), ref_parity }
    }

    pub fn add_term(&mut self, mu: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(mu.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&mu);
        }
    }

    /// self + k·o; parities are intrinsic to the weights so no re-referencing is needed.
    pub fn add_scaled(&mut self, o: &G0Char, k: i64) {
        for (mu, c) in &o.terms {
            self.add_term(mu.clone(), k * c);
        }
    }

    pub fn scale(&self, k: i64) -> G0Char {
        let mut out = G0Char::new(self.ref_parity);
        out.add_scaled(self, k);
        out
    }

    pub fn div_exact(&self, k: i64) -> Result<G0Char> {
        if k == 0 {
            return Err(Error::pre("division by zero"));
        }
        let mut out = G0Char::new(self.ref_parity);
        for (mu, c) in &self.terms {
            if c % k != 0 {
                return Err(Error::pre(format!("coefficient {c} of L₀({mu}) is not divisible by {k}")));
            }
            out.add_term(mu.clone(), c / k);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn relative_parity(&self, mu: &Weight) -> u8 {
        mu.parity().unwrap_or(0) ^ self.ref_parity
    }

    /// (even, odd) multiplicity of L₀(μ).
    pub fn multiplicity(&self, mu: &Weight) -> (i64, i64) {
        let c = self.terms.get(mu).copied().unwrap_or(0);
        if self.relative_parity(mu) == 0 {
            (c, 0)
        } else {
            (0, c)
        }
    }

    /// Coefficients of the supercharacter: (−1)^{relative parity}·c_μ.
    pub fn super_coeffs(&self) -> BTreeMap<Weight, i64> {
        self.terms.iter().map(|(mu, c)| (mu.clone(), if self.relative_parity(mu) == 0 { *c } else { -c })).collect()
    }

    /// Same virtual module viewed with a different highest-weight parity.
    pub fn with_ref_parity(&self, p: u8) -> G0Char {
        G0Char { terms: self.terms.clone(), ref_parity: p }
    }

    pub fn to_json(&self, alg: &Algebra) -> Value {
        let rows: Vec<Value> = self
            .terms.keys().map(|mu| {
                let (e, o) = self.multiplicity(mu);
                json!({"mu": mu, "even": e, "odd": o, "dim": alg.g0_dim(mu).to_string()})
            })
            .collect();
        let d = dims(alg, self);
        json!({"terms": rows, "dim": d.dim.to_string(), "sdim": d.sdim.to_string()})
    }
}

impl fmt::Display for G0Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mu, c)| {
                let pi = if self.relative_parity(mu) == 1 { "Π" } else { "" };
                if *c == 1 {
                    format!("{pi}L₀{mu}")
                } else {
                    format!("{c}·{pi}L₀{mu}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Dims {
    pub dim: i128,
    /// Superdimension with the highest weight vector even.
    pub sdim: i128,
}

pub fn dims(alg: &Algebra, c: &G0Char) -> Dims {
    let mut d = Dims { dim: 0, sdim: 0 };
    for (mu, k) in &c.terms {
        let g = alg.g0_dim(mu) * *k as i128;
        d.dim += g;
        d.sdim += if c.relative_parity(mu) == 0 { g } else { -g };
    }
    d
}

fn check_g0_weight(alg: &Algebra, mu: &Weight) -> Result<()> {
    let bad = || Error::pre(format!("{mu} is not an integral g₀-weight"));
    let same_class = |xs: &[Half]| xs.windows(2).all(|p| (p[0] - p[1]).is_integer());
    match alg.kind {
        Kind::Gl => {
            if !same_class(&mu.eps) || !same_class(&mu.delta) {
                return Err(bad());
            }
        }
        Kind::OspEven | Kind::OspOdd => {
            let eps_ok = mu.eps.iter().all(|x| x.is_integer()) || mu.eps.iter().all(|x| !x.is_integer());
            if !eps_ok || !mu.delta.iter().all(|x| x.is_integer()) {
                return Err(bad());
            }
        }
    }
    if mu.parity().is_none() {
        return Err(bad());
    }
    Ok(())
}

/// Turns alternant coefficients (keyed by strictly dominant ν) into Σ c L₀(ν − ρ₀).
pub fn g0_from_alternants(alg: &Algebra, alt: &FormalSum, ref_parity: u8) -> Result<G0Char> {
    let mut out = G0Char::new(ref_parity);
    for (nu, c) in alt.iter() {
        let mu = nu - alg.rho0();
        check_g0_weight(alg, &mu)?;
        out.add_term(mu, *c);
    }
    Ok(out)
}

/// e^{λ̂+½ΣT+½ΣΔ'}·Π_{β∈Δ'}(1+e^{−β}) with Δ' = Δ₁⁺ ∖ ±T.
pub fn kw_numerator(alg: &Algebra, lambda_hat: &Weight, t: &[Weight]) -> Result<FormalSum> {
    alg.check_shape(lambda_hat)?;
    for (i, b) in t.iter().enumerate() {
        alg.check_shape(b)?;
        if !alg.is_odd_root(b) {
            return Err(Error::pre(format!("{b} is not an odd root")));
        }
        if t[..i].iter().any(|c| c == b || *c == -b) {
            return Err(Error::pre(format!("{b} occurs twice up to sign")));
        }
    }
    let rest: Vec<&Weight> =
        alg.odd_positive().iter().filter(|b| !t.iter().any(|c| c == *b || *c == -*b)).collect();
    let mut twice = lambda_hat.scale(2);
    for b in t {
        twice = &twice + b;
    }
    for b in &rest {
        twice = &twice + *b;
    }
    let base = twice.halve().ok_or_else(|| Error::pre("exponent leaves ½ℤ"))?;
    let mut f = FormalSum::monomial(base, 1);
    for b in rest {
        f = f.times_one_plus(b);
    }
    Ok(f)
}

/// KW(λ̂, T)/(Re^ρ) in the alternant basis.
pub fn kw_alternants(alg: &Algebra, lambda_hat: &Weight, t: &[Weight]) -> Result<FormalSum> {
    Ok(alternant_reduce(alg, &kw_numerator(alg, lambda_hat, t)?))
}

/// KW(λ̂, T)/(Re^ρ) as a virtual g₀-module, T any set of odd roots without ± pairs.
pub fn kw_general(alg: &Algebra, lambda_hat: &Weight, t: &[Weight], ref_parity: u8) -> Result<G0Char> {
    g0_from_alternants(alg, &kw_alternants(alg, lambda_hat, t)?, ref_parity)
}

/// KW(λ̂, S)/(Re^ρ) for an iso-set S ⊥ λ̂. Parities are relative to λ̂ − ρ.
pub fn kw_char(alg: &Algebra, lambda_hat: &Weight, s: &[Weight]) -> Result<G0Char> {
    let r = lambda_hat - alg.rho();
    kw_char_ref(alg, lambda_hat, s, &r)
}

/// As [`kw_char`] with parities relative to `refw`.
pub fn kw_char_ref(alg: &Algebra, lambda_hat: &Weight, s: &[Weight], refw: &Weight) -> Result<G0Char> {
    if !iso_set_check(s) {
        return Err(Error::pre("S is not a linearly independent set of mutually orthogonal isotropic roots"));
    }
    if let Some(b) = s.iter().find(|b| lambda_hat.form4(b) != 0) {
        return Err(Error::pre(format!("({lambda_hat}|{b}) ≠ 0")));
    }
    let p = refw.parity().ok_or_else(|| Error::pre(format!("parity of {refw} is undefined")))?;
    kw_general(alg, lambda_hat, s, p)
}

/// Kac module K(λ) for gl, or the analogous KW(λ+ρ, ∅) in general.
pub fn kac_char(alg: &Algebra, lambda: &Weight) -> Result<G0Char> {
    kw_char_ref(alg, &(lambda + alg.rho()), &[], lambda)
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// j_s: s! for gl; for osp 2^s·s! when t ∈ {1,2} and max(1, 2^{s−1}s!) when t = 0.
pub fn j_value(kind: Kind, s: usize, t: u8) -> i64 {
    match kind {
        Kind::Gl => factorial(s),
        _ if s == 0 => 1,
        _ if t == 0 => (1i64 << (s - 1)) * factorial(s),
        _ => (1i64 << s) * factorial(s),
    }
}

type CacheKey = (Kind, usize, usize, Weight);

fn euler_cache() -> &'static Mutex<HashMap<CacheKey, Arc<G0Char>>> {
    static C: OnceLock<Mutex<HashMap<CacheKey, Arc<G0Char>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// ch ℰ_λ, with parities relative to λ.
pub fn euler_char(alg: &Algebra, lambda: &Weight) -> Result<Arc<G0Char>> {
    let key = (alg.kind, alg.m, alg.n, lambda.clone());
    if let Some(c) = euler_cache().lock().expect("cache poisoned").get(&key) {
        return Ok(c.clone());
    }
    let c = Arc::new(euler_char_uncached(alg, lambda)?);
    euler_cache().lock().expect("cache poisoned").insert(key, c.clone());
    Ok(c)
}

fn euler_char_uncached(alg: &Algebra, lambda: &Weight) -> Result<G0Char> {
    check_dominant(alg, lambda)?;
    match alg.kind {
        Kind::Gl => {
            let d = dagger(alg, lambda)?;
            kw_char_ref(alg, &d.lambda, &d.s, lambda)?.div_exact(d.j as i64)
        }
        _ => {
            let inv = invariants(alg, lambda)?;
            let s = alg.iso_set(inv.tail);
            kw_char_ref(alg, &(lambda + alg.rho()), &s, lambda)?.div_exact(j_value(alg.kind, inv.tail, inv.t))
        }
    }
}

/// Positive odd roots of the tail subalgebra g_λ.
pub fn tail_odd_roots(alg: &Algebra, lambda: &Weight) -> Result<Vec<Weight>> {
    let inv = invariants(alg, lambda)?;
    let s = inv.tail;
    let (m, n) = (alg.m, alg.n);
    let (es, ds): (Vec<usize>, Vec<usize>) = match alg.kind {
        Kind::Gl => ((m - s..m).collect(), (0..s).collect()),
        Kind::OspEven => {
            let k = if inv.t == 2 { s + 1 } else { s };
            ((m - k.min(m)..m).collect(), (n - s..n).collect())
        }
        Kind::OspOdd => ((m - s..m).collect(), (n - s..n).collect()),
    };
    let support = |w: &Weight| {
        w.eps.iter().enumerate().all(|(i, x)| *x == Half::ZERO || es.contains(&i))
            && w.delta.iter().enumerate().all(|(j, x)| *x == Half::ZERO || ds.contains(&j))
    };
    Ok(alg.odd_positive().iter().filter(|b| support(b)).cloned().collect())
}

/// ch ℰ_λ straight from KW(λ+ρ, Δ₁⁺(g_λ))/(Re^ρ). Independent of λ† and of j.
pub fn euler_direct(alg: &Algebra, lambda: &Weight) -> Result<G0Char> {
    check_dominant(alg, lambda)?;
    let t = tail_odd_roots(alg, lambda)?;
    let p = lambda.parity().ok_or_else(|| Error::pre("parity undefined"))?;
    kw_general(alg, &(lambda + alg.rho()), &t, p)
}

/// Decomposition of L(λ) in the ℰ-basis and its g₀-character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrChar {
    pub lambda: Weight,
    /// (μ, a_μ) with ch L(λ) = Σ a_μ ch ℰ_μ.
    pub euler_terms: Vec<(Weight, i64)>,
    pub char: G0Char,
}

pub fn irr_char(alg: &Algebra, lambda: &Weight) -> Result<IrrChar> {
    check_dominant(alg, lambda)?;
    let inv = invariants(alg, lambda)?;
    if inv.is_kostant || inv.atypicality == 0 {
        let c = euler_char(alg, lambda)?;
        return Ok(IrrChar { lambda: lambda.clone(), euler_terms: vec![(lambda.clone(), 1)], char: (*c).clone() });
    }
    irr_char_with(default_provider(alg)?, alg, lambda)
}

/// ch L(λ) = Σ_μ (−1)^{||λ||−||μ||} d_<(μ,λ) ch ℰ_μ over the predecessor closure.
pub fn irr_char_with(provider: &dyn EdgeProvider, alg: &Algebra, lambda: &Weight) -> Result<IrrChar> {
    let g = build_block_graph_with(provider, alg, std::slice::from_ref(lambda), -1)?;
    let l = g.index_of(lambda).expect("seed present");
    let d = g.d_less();
    let p = lambda.parity().ok_or_else(|| Error::pre("parity undefined"))?;
    let mut ch = G0Char::new(p);
    let mut terms = Vec::new();
    for u in 0..g.len() {
        if d[l][u] == 0 {
            continue;
        }
        let a = sign_pow(g.norm[l] - g.norm[u]) * d[l][u];
        ch.add_scaled(&*euler_char(alg, &g.vertices[u])?, a);
        terms.push((g.vertices[u].clone(), a));
    }
    Ok(IrrChar { lambda: lambda.clone(), euler_terms: terms, char: ch })
}

/// [M : L₀(μ)] as (even, odd).
pub fn g0_multiplicity(c: &G0Char, mu: &Weight) -> (i64, i64) {
    c.multiplicity(mu)
}

type WeightKey = (Kind, usize, usize, Weight);

fn weight_cache() -> &'static Mutex<HashMap<WeightKey, Arc<FormalSum>>> {
    static C: OnceLock<Mutex<HashMap<WeightKey, Arc<FormalSum>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Divides f by 1 − e^{−α}, failing unless the division is exact.
fn divide_one_minus(f: &FormalSum, alpha: &Weight) -> Result<FormalSum> {
    let k = alpha.form4(alpha);
    // strings x + ℤα, keyed by a projection killing α; ordered by (x|α)·sign(k)
    let mut strings: BTreeMap<Weight, BTreeMap<i64, (i64, Weight)>> = BTreeMap::new();
    for (x, c) in f.iter() {
        let t = x.form4(alpha);
        let key = &x.scale(k) - &alpha.scale(t);
        strings.entry(key).or_default().insert(t * k.signum(), (*c, x.clone()));
    }
    let step = k.abs();
    let mut out = FormalSum::new();
    for pts in strings.values() {
        let (&top, (_, witness)) = pts.iter().next_back().expect("non-empty string");
        let (&bottom, _) = pts.iter().next().expect("non-empty string");
        let mut acc = 0i64;
        let mut pos = top;
        let mut y = witness.clone();
        while pos >= bottom {
            acc += pts.get(&pos).map_or(0, |p| p.0);
            if pos > bottom || acc != 0 {
                out.add_term(y.clone(), acc);
            }
            y = &y - alpha;
            pos -= step;
        }
        if acc != 0 {
            return Err(Error::pre("character division is not exact"));
        }
    }
    Ok(out)
}

/// Weights of L₀(μ) with multiplicities.
pub fn g0_weights(alg: &Algebra, mu: &Weight) -> Result<Arc<FormalSum>> {
    let key = (alg.kind, alg.m, alg.n, mu.clone());
    if let Some(c) = weight_cache().lock().expect("cache poisoned").get(&key) {
        return Ok(c.clone());
    }
    let top = mu + alg.rho0();
    let mut f = jw(alg, &FormalSum::monomial(top, 1)).shift(&-alg.rho0());
    for a in alg.even_positive() {
        f = divide_one_minus(&f, a)?;
    }
    let f = Arc::new(f);
    weight_cache().lock().expect("cache poisoned").insert(key, f.clone());
    Ok(f)
}

/// Weight multiplicities of a virtual module; `supercharacter` applies the
/// relative parity of each constituent.
pub fn weight_expand(alg: &Algebra, c: &G0Char, supercharacter: bool) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    let coeffs = if supercharacter { c.super_coeffs() } else { c.terms.clone() };
    for (mu, k) in coeffs {
        for (w, m) in g0_weights(alg, &mu)?.iter() {
            out.add_term(w.clone(), k * m);
        }
    }
    Ok(out)
}

/// Twice the linear functional that assigns the values L, L−1, …, 1 to the
/// letters of the base word; positive on every positive root.
pub fn height2(alg: &Algebra, w: &Weight) -> i64 {
    let len = alg.word().len() as i64;
    let mut h = 0;
    for (k, l) in alg.word().iter().enumerate() {
        let x = match *l {
            Letter::E(i) => w.eps[i],
            Letter::D(j) => w.delta[j],
        };
        h += x.twice() * (len - k as i64);
    }
    h
}

/// Σ_w sgn(w)·w(e^{λ̂}/Π_{β∈S}(1+e^{−β})) expanded in the direction of
/// −Δ⁺, keeping terms whose [`height2`] is at least `cutoff`.
pub fn kw_series(alg: &Algebra, lambda_hat: &Weight, s: &[Weight], cutoff: i64) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    for w in alg.weyl_elements() {
        let top = w.apply(lambda_hat);
        if height2(alg, &top) < cutoff {
            continue;
        }
        let mut f = FormalSum::monomial(top, w.sign());
        for b in s {
            let g = w.apply(b);
            let h = height2(alg, &g);
            if h == 0 {
                return Err(Error::pre(format!("{g} has height zero")));
            }
            // 1/(1+e^{−γ}) for γ > 0, and e^{−δ}/(1+e^{−δ}) for γ = −δ < 0
            let (d, start) = if h > 0 { (g.clone(), 0) } else { (-&g, 1) };
            let mut next = FormalSum::new();
            for (x, c) in f.iter() {
                let mut k = start;
                loop {
                    let y = x - &d.scale(k);
                    if height2(alg, &y) < cutoff {
                        break;
                    }
                    let sgn = sign_pow(k - start);
                    next.add_term(y, c * sgn);
                    k += 1;
                }
            }
            f = next;
        }
        out = out.add(&f);
    }
    Ok(out)
}

/// Terms e^ν with ν in the generalized eigenspace χ (ν is ρ-shifted).
pub fn p_chi(alg: &Algebra, f: &FormalSum, chi: &CoreFingerprint) -> FormalSum {
    f.retain(|w| core_fingerprint(alg, w) == *chi)
}

/// Weights of the standard module V (or V*) with multiplicity.
pub fn std_weights(alg: &Algebra, which: StdModule) -> FormalSum {
    let mut f = FormalSum::new();
    let sgn = if which == StdModule::Dual { -1 } else { 1 };
    for i in 0..alg.m {
        f.add_term(alg.eps(i).scale(sgn), 1);
        if alg.kind != Kind::Gl {
            f.add_term(alg.eps(i).scale(-sgn), 1);
        }
    }
    for j in 0..alg.n {
        f.add_term(alg.delta(j).scale(sgn), 1);
        if alg.kind != Kind::Gl {
            f.add_term(alg.delta(j).scale(-sgn), 1);
        }
    }
    if alg.kind == Kind::OspOdd {
        f.add_term(alg.zero(), 1);
    }
    f
}

/// Θ = P_χ′ ∘ (ch V ⊗ −) ∘ P_χ on Re^ρ-multiplied characters.
pub fn theta(alg: &Algebra, f: &FormalSum, v: StdModule, chi: &CoreFingerprint, chi2: &CoreFingerprint) -> FormalSum {
    p_chi(alg, &p_chi(alg, f, chi).mul(&std_weights(alg, v)), chi2)
}

/// Outcome of the super-denominator check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DenomReport {
    pub algebra: String,
    pub s: usize,
    pub rho_prime: String,
    pub expected: i64,
    pub found: String,
    pub ok: bool,
    pub reversed_expected: i64,
    pub reversed_ok: bool,
}

/// Base word containing (εδ)^s, s the defect.
pub fn denominator_word(alg: &Algebra) -> Vec<Letter> {
    let (m, n) = (alg.m, alg.n);
    let s = m.min(n);
    let mut seq: Vec<bool> = Vec::new(); // true = ε
    match alg.kind {
        Kind::Gl => {
            for _ in 0..s {
                seq.extend([true, false]);
            }
            seq.extend(std::iter::repeat_n(true, m - s));
            seq.extend(std::iter::repeat_n(false, n - s));
        }
        Kind::OspOdd => return alg.word().to_vec(),
        Kind::OspEven if m <= n => {
            seq.extend(std::iter::repeat_n(false, n - m));
            for _ in 0..m {
                seq.extend([true, false]);
            }
        }
        Kind::OspEven => {
            seq.extend(std::iter::repeat_n(true, m - n - 1));
            for _ in 0..n {
                seq.extend([true, false]);
            }
            seq.push(true);
        }
    }
    let (mut i, mut j) = (0, 0);
    seq.into_iter()
        .map(|e| {
            if e {
                i += 1;
                Letter::E(i - 1)
            } else {
                j += 1;
                Letter::D(j - 1)
            }
        })
        .collect()
}

/// KW(ρ′, S)/(Re^ρ) = j·1 for S = {ε_i − δ_i}, and (−1)^{[s/2]} j for the reversed pairing.
pub fn denominator_check(alg: &Algebra) -> Result<DenomReport> {
    let word = denominator_word(alg);
    let rho_p = alg.rho_for_word(&word);
    let s = alg.m.min(alg.n);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for w in word.windows(2) {
        if let [Letter::E(a), Letter::D(b)] = *w {
            if pairs.len() < s {
                pairs.push((a, b));
            }
        }
    }
    let e_pairs: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let d_pairs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    let sset: Vec<Weight> = (0..s).map(|i| &alg.eps(e_pairs[i]) - &alg.delta(d_pairs[i])).collect();
    let rset: Vec<Weight> = (0..s).map(|i| &alg.eps(e_pairs[i]) - &alg.delta(d_pairs[s - 1 - i])).collect();
    let t = match alg.kind {
        Kind::OspOdd => 1,
        Kind::OspEven if alg.m > alg.n => 2,
        _ => 0,
    };
    let j = j_value(alg.kind, s, t);
    let zero = alg.zero();
    let found = kw_char_ref(alg, &rho_p, &sset, &zero)?;
    let rev = kw_char_ref(alg, &rho_p, &rset, &zero)?;
    let mut want = G0Char::new(0);
    want.add_term(zero.clone(), j);
    let rsign = sign_pow((s / 2) as i64);
    let mut want_r = G0Char::new(0);
    want_r.add_term(zero, rsign * j);
    Ok(DenomReport {
        algebra: alg.name(),
        s,
        rho_prime: rho_p.to_string(),
        expected: j,
        found: found.to_string(),
        ok: found == want,
        reversed_expected: rsign * j,
        reversed_ok: rev == want_r,
    })
}
