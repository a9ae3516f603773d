//! Root data for gl(m|n), osp(2m|2n) and osp(2m+1|2n): roots, bases given by
//! words in ε/δ, Weyl vectors, the iso-sets S_s and the even Weyl group.

use crate::error::{Error, Result};
use crate::half::Half;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Gl,
    OspEven,
    OspOdd,
}

/// A weight written in the ε/δ basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub eps: Vec<Half>,
    pub delta: Vec<Half>,
}

impl Weight {
    pub fn zero(m: usize, n: usize) -> Weight {
        Weight { eps: vec![Half::ZERO; m], delta: vec![Half::ZERO; n] }
    }

    pub fn from_ints(eps: &[i64], delta: &[i64]) -> Weight {
        Weight {
            eps: eps.iter().map(|&x| Half::int(x)).collect(),
            delta: delta.iter().map(|&x| Half::int(x)).collect(),
        }
    }

    /// ε_i, 0-based.
    pub fn eps_unit(m: usize, n: usize, i: usize) -> Weight {
        let mut w = Weight::zero(m, n);
        w.eps[i] = Half::ONE;
        w
    }

    /// δ_j, 0-based.
    pub fn delta_unit(m: usize, n: usize, j: usize) -> Weight {
        let mut w = Weight::zero(m, n);
        w.delta[j] = Half::ONE;
        w
    }

    pub fn m(&self) -> usize {
        self.eps.len()
    }

    pub fn n(&self) -> usize {
        self.delta.len()
    }

    pub fn is_zero(&self) -> bool {
        self.eps.iter().chain(&self.delta).all(|x| *x == Half::ZERO)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            eps: self.eps.iter().map(|x| *x * k).collect(),
            delta: self.delta.iter().map(|x| *x * k).collect(),
        }
    }

    /// Exact halving; `None` when a coordinate would leave ½ℤ.
    pub fn halve(&self) -> Option<Weight> {
        Some(Weight {
            eps: self.eps.iter().map(|x| x.halve()).collect::<Option<_>>()?,
            delta: self.delta.iter().map(|x| x.halve()).collect::<Option<_>>()?,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.eps.iter().chain(&self.delta).all(|x| x.is_integer())
    }

    /// p(λ): sum of δ-coordinates mod 2, defined when those are integers.
    pub fn parity(&self) -> Option<u8> {
        let mut s = 0i64;
        for d in &self.delta {
            s += d.to_integer()?;
        }
        Some(s.rem_euclid(2) as u8)
    }

    /// Drops ε-coordinates `ei` and δ-coordinates `dj` (0-based) and renumbers.
    pub fn drop_coords(&self, ei: &[usize], dj: &[usize]) -> Weight {
        Weight {
            eps: self
                .eps
                .iter()
                .enumerate()
                .filter(|(i, _)| !ei.contains(i))
                .map(|(_, x)| *x)
                .collect(),
            delta: self
                .delta
                .iter()
                .enumerate()
                .filter(|(j, _)| !dj.contains(j))
                .map(|(_, x)| *x)
                .collect(),
        }
    }

    /// (self|other) times four.
    pub fn form4(&self, other: &Weight) -> i64 {
        let e: i64 = self.eps.iter().zip(&other.eps).map(|(a, b)| a.mul_quarters(*b)).sum();
        let d: i64 = self.delta.iter().zip(&other.delta).map(|(a, b)| a.mul_quarters(*b)).sum();
        e - d
    }

    pub fn same_shape(&self, other: &Weight) -> bool {
        self.m() == other.m() && self.n() == other.n()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        debug_assert!(self.same_shape(o));
        Weight {
            eps: self.eps.iter().zip(&o.eps).map(|(a, b)| *a + *b).collect(),
            delta: self.delta.iter().zip(&o.delta).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        debug_assert!(self.same_shape(o));
        Weight {
            eps: self.eps.iter().zip(&o.eps).map(|(a, b)| *a - *b).collect(),
            delta: self.delta.iter().zip(&o.delta).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[Half]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", j(&self.eps), j(&self.delta))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact value of the bilinear form: numerator over 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quarter(pub i64);

impl fmt::Display for Quarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = gcd(self.0.unsigned_abs(), 4) as i64;
        let (p, q) = (self.0 / g, 4 / g);
        if q == 1 {
            write!(f, "{p}")
        } else {
            write!(f, "{p}/{q}")
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// (ε_i|ε_j)=δ_ij, (δ_i|δ_j)=−δ_ij, (ε_i|δ_j)=0.
pub fn bilinear(w1: &Weight, w2: &Weight) -> Result<Quarter> {
    if !w1.same_shape(w2) {
        return Err(Error::pre(format!("dimension mismatch: {w1} vs {w2}")));
    }
    Ok(Quarter(w1.form4(w2)))
}

/// One letter of a base word; indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    E(usize),
    D(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    A,
    B,
    C,
    D,
}

/// Result of moving a weight into the dominant chamber of the even Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orbit {
    /// `rep = wλ` strictly dominant, `sign = sgn(w)`.
    Regular { rep: Weight, sign: i64 },
    Singular,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub kind: Kind,
    pub m: usize,
    pub n: usize,
    word: Vec<Letter>,
    even_pos: Vec<Weight>,
    odd_pos: Vec<Weight>,
    rho0: Weight,
    rho1: Weight,
    rho: Weight,
}

/// Checked constructor; rejects m = n = 0.
pub fn build_algebra(kind: Kind, m: usize, n: usize) -> Result<Algebra> {
    if m == 0 && n == 0 {
        return Err(Error::pre("m = n = 0 is not an algebra"));
    }
    Ok(Algebra::new(kind, m, n))
}

impl Algebra {
    /// Unchecked constructor, also used for the rank-zero targets of ds.
    pub fn new(kind: Kind, m: usize, n: usize) -> Algebra {
        let word = distinguished_word(kind, m, n);
        let even_pos = even_positive(kind, m, n);
        let odd_pos = odd_positive(kind, m, n, &word);
        let half_sum = |v: &[Weight]| {
            let mut acc = Weight::zero(m, n);
            for r in v {
                acc = &acc + r;
            }
            acc.halve_exact()
        };
        let rho1 = half_sum(&odd_pos);
        let (rho0, rho) = if kind == Kind::Gl {
            // fixed Weyl vector Σ(m+1−i)ε_i − Σ jδ_j; ρ₀ absorbs the str shift
            let rho = Weight {
                eps: (0..m).map(|i| Half::int((m - i) as i64)).collect(),
                delta: (0..n).map(|j| Half::int(-(j as i64 + 1))).collect(),
            };
            (&rho + &rho1, rho)
        } else {
            let rho0 = half_sum(&even_pos);
            let rho = &rho0 - &rho1;
            (rho0, rho)
        };
        Algebra { kind, m, n, word, even_pos, odd_pos, rho0, rho1, rho }
    }

    pub fn name(&self) -> String {
        match self.kind {
            Kind::Gl => format!("gl({}|{})", self.m, self.n),
            Kind::OspEven => format!("osp({}|{})", 2 * self.m, 2 * self.n),
            Kind::OspOdd => format!("osp({}|{})", 2 * self.m + 1, 2 * self.n),
        }
    }

    /// Short spec string as accepted by the command line.
    pub fn spec(&self) -> String {
        let k = match self.kind {
            Kind::Gl => "gl",
            Kind::OspEven => "ospE",
            Kind::OspOdd => "ospO",
        };
        format!("{k}:{},{}", self.m, self.n)
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn even_positive(&self) -> &[Weight] {
        &self.even_pos
    }

    pub fn odd_positive(&self) -> &[Weight] {
        &self.odd_pos
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rho0(&self) -> &Weight {
        &self.rho0
    }

    pub fn rho1(&self) -> &Weight {
        &self.rho1
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.m, self.n)
    }

    pub fn eps(&self, i: usize) -> Weight {
        Weight::eps_unit(self.m, self.n, i)
    }

    pub fn delta(&self, j: usize) -> Weight {
        Weight::delta_unit(self.m, self.n, j)
    }

    pub fn defect(&self) -> usize {
        self.m.min(self.n)
    }

    /// The supertrace weight str = Σε_i − Σδ_j (gl only meaningful).
    pub fn str_weight(&self) -> Weight {
        Weight {
            eps: vec![Half::ONE; self.m],
            delta: vec![-Half::ONE; self.n],
        }
    }

    pub fn check_shape(&self, w: &Weight) -> Result<()> {
        if w.m() != self.m || w.n() != self.n {
            return Err(Error::pre(format!(
                "weight {w} has shape ({}|{}), algebra {} needs ({}|{})",
                w.m(),
                w.n(),
                self.name(),
                self.m,
                self.n
            )));
        }
        Ok(())
    }

    /// Positive odd roots of the base given by `word`.
    pub fn odd_positive_for_word(&self, word: &[Letter]) -> Vec<Weight> {
        odd_positive(self.kind, self.m, self.n, word)
    }

    /// Weyl vector ρ₀ − ρ₁(Σ′) of the base with word `word`.
    pub fn rho_for_word(&self, word: &[Letter]) -> Weight {
        let mut acc = self.zero();
        for r in self.odd_positive_for_word(word) {
            acc = &acc + &r;
        }
        &self.rho0 - &acc.halve_exact()
    }

    /// S_s as ordered in the distinguished setting.
    pub fn iso_set(&self, s: usize) -> Vec<Weight> {
        assert!(s <= self.defect(), "s exceeds the defect");
        let (m, n) = (self.m, self.n);
        (0..s)
            .map(|i| match self.kind {
                Kind::Gl => &self.eps(m - 1 - i) - &self.delta(i),
                Kind::OspEven => &self.delta(n - 1 - i) - &self.eps(m - 1 - i),
                Kind::OspOdd => &self.eps(m - 1 - i) - &self.delta(n - 1 - i),
            })
            .collect()
    }

    pub fn is_root(&self, r: &Weight) -> bool {
        let neg = -r;
        self.even_pos.iter().chain(&self.odd_pos).any(|x| x == r || *x == neg)
    }

    pub fn is_odd_root(&self, r: &Weight) -> bool {
        let neg = -r;
        self.odd_pos.iter().any(|x| x == r || *x == neg)
    }

    fn blocks(&self) -> (Block, Block) {
        match self.kind {
            Kind::Gl => (Block::A, Block::A),
            Kind::OspEven => (Block::D, Block::C),
            Kind::OspOdd => (Block::B, Block::C),
        }
    }

    /// Strictly dominant representative of the W-orbit with sgn(w), or `Singular`.
    pub fn weyl_orbit_normalize(&self, w: &Weight) -> Orbit {
        let (be, bd) = self.blocks();
        let Some((eps, se)) = normalize_block(&w.eps, be) else {
            return Orbit::Singular;
        };
        let Some((delta, sd)) = normalize_block(&w.delta, bd) else {
            return Orbit::Singular;
        };
        Orbit::Regular { rep: Weight { eps, delta }, sign: se * sd }
    }

    /// Dominant (possibly singular) representative of the W-orbit.
    pub fn weyl_dominant(&self, w: &Weight) -> Weight {
        let (be, bd) = self.blocks();
        Weight { eps: dominant_block(&w.eps, be), delta: dominant_block(&w.delta, bd) }
    }

    /// (λ|α^∨) ≥ 0 for every positive even root.
    pub fn is_g0_dominant(&self, w: &Weight) -> bool {
        self.weyl_dominant(w) == *w
    }

    /// Weyl dimension of L_{g₀}(μ); zero when μ+ρ₀ is singular.
    pub fn g0_dim(&self, mu: &Weight) -> i128 {
        let shifted = mu + &self.rho0;
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for a in &self.even_pos {
            let p = shifted.form4(a) as i128;
            let q = self.rho0.form4(a) as i128;
            if p == 0 {
                return 0;
            }
            num *= p;
            den *= q;
            let g = gcd128(num.abs(), den.abs());
            num /= g;
            den /= g;
        }
        assert!(den.abs() == 1, "Weyl dimension not integral for {mu}");
        num * den.signum()
    }

    /// Elements of the even Weyl group as signed permutations (small ranks only).
    pub fn weyl_elements(&self) -> Vec<WeylElement> {
        let (be, bd) = self.blocks();
        let es = block_elements(self.m, be);
        let ds = block_elements(self.n, bd);
        let mut out = Vec::with_capacity(es.len() * ds.len());
        for e in &es {
            for d in &ds {
                out.push(WeylElement { eps: e.clone(), delta: d.clone() });
            }
        }
        out
    }

    /// The involution σ: ε_m ↦ −ε_m (osp(2m|2n) only).
    pub fn sigma(&self, w: &Weight) -> Result<Weight> {
        if self.kind != Kind::OspEven || self.m == 0 {
            return Err(Error::pre("σ is defined for osp(2m|2n) with m ≥ 1"));
        }
        let mut out = w.clone();
        let last = self.m - 1;
        out.eps[last] = -out.eps[last];
        Ok(out)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Weight {
    fn halve_exact(&self) -> Weight {
        self.halve().expect("half-sum of roots left ½ℤ")
    }
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

fn distinguished_word(kind: Kind, m: usize, n: usize) -> Vec<Letter> {
    use Letter::{D, E};
    let mut w = Vec::with_capacity(m + n);
    match kind {
        Kind::Gl => {
            w.extend((0..m).map(E));
            w.extend((0..n).map(D));
        }
        Kind::OspEven | Kind::OspOdd => {
            let delta_first = kind == Kind::OspEven;
            if n >= m {
                w.extend((0..n - m).map(D));
                for i in 0..m {
                    let (e, d) = (E(i), D(n - m + i));
                    if delta_first {
                        w.extend([d, e]);
                    } else {
                        w.extend([e, d]);
                    }
                }
            } else {
                w.extend((0..m - n).map(E));
                for j in 0..n {
                    let (e, d) = (E(m - n + j), D(j));
                    if delta_first {
                        w.extend([d, e]);
                    } else {
                        w.extend([e, d]);
                    }
                }
            }
        }
    }
    w
}

fn even_positive(kind: Kind, m: usize, n: usize) -> Vec<Weight> {
    let e = |i| Weight::eps_unit(m, n, i);
    let d = |j| Weight::delta_unit(m, n, j);
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            out.push(&e(i) - &e(j));
            if kind != Kind::Gl {
                out.push(&e(i) + &e(j));
            }
        }
        if kind == Kind::OspOdd {
            out.push(e(i));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(&d(i) - &d(j));
            if kind != Kind::Gl {
                out.push(&d(i) + &d(j));
            }
        }
        if kind != Kind::Gl {
            out.push(d(i).scale(2));
        }
    }
    out
}

/// Positive odd roots: read the word as a generic vector with decreasing
/// positive values and keep the odd roots that pair positively with it.
fn odd_positive(kind: Kind, m: usize, n: usize, word: &[Letter]) -> Vec<Weight> {
    let len = word.len() as i64;
    let mut ve = vec![0i64; m];
    let mut vd = vec![0i64; n];
    for (k, l) in word.iter().enumerate() {
        match *l {
            Letter::E(i) => ve[i] = len - k as i64,
            Letter::D(j) => vd[j] = len - k as i64,
        }
    }
    let e = |i| Weight::eps_unit(m, n, i);
    let d = |j| Weight::delta_unit(m, n, j);
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..n {
            let r = &e(i) - &d(j);
            out.push(if ve[i] > vd[j] { r } else { -&r });
            if kind != Kind::Gl {
                out.push(&e(i) + &d(j));
            }
        }
    }
    if kind == Kind::OspOdd {
        out.extend((0..n).map(d));
    }
    out
}

/// A signed permutation per block: image index and sign of each coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub eps: Vec<(usize, i64)>,
    pub delta: Vec<(usize, i64)>,
}

impl WeylElement {
    /// w(λ): coordinate i of λ lands in slot `perm[i].0` with sign `perm[i].1`.
    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = Weight::zero(w.m(), w.n());
        for (i, &(t, s)) in self.eps.iter().enumerate() {
            out.eps[t] = w.eps[i] * s;
        }
        for (j, &(t, s)) in self.delta.iter().enumerate() {
            out.delta[t] = w.delta[j] * s;
        }
        out
    }

    /// Determinant on the reflection representation.
    pub fn sign(&self) -> i64 {
        block_sign(&self.eps) * block_sign(&self.delta)
    }
}

fn block_sign(p: &[(usize, i64)]) -> i64 {
    let mut s: i64 = p.iter().map(|x| x.1).product();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i].0 > p[j].0 {
                s = -s;
            }
        }
    }
    s
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn block_elements(k: usize, b: Block) -> Vec<Vec<(usize, i64)>> {
    let perms = permutations(k);
    let mut out = Vec::new();
    for p in perms {
        match b {
            Block::A => out.push(p.iter().map(|&t| (t, 1)).collect()),
            _ => {
                for mask in 0u32..(1 << k) {
                    if b == Block::D && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    out.push(
                        p.iter()
                            .enumerate()
                            .map(|(i, &t)| (t, if mask >> i & 1 == 1 { -1 } else { 1 }))
                            .collect(),
                    );
                }
            }
        }
    }
    out
}

/// Sorts decreasingly and returns the parity of the sorting permutation.
fn sort_desc_with_parity(v: &mut [Half]) -> i64 {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

fn has_adjacent_equal(v: &[Half]) -> bool {
    v.windows(2).any(|p| p[0] == p[1])
}

fn normalize_block(v: &[Half], b: Block) -> Option<(Vec<Half>, i64)> {
    match b {
        Block::A => {
            let mut w = v.to_vec();
            let s = sort_desc_with_parity(&mut w);
            (!has_adjacent_equal(&w)).then_some((w, s))
        }
        Block::B | Block::C => {
            if v.contains(&Half::ZERO) {
                return None;
            }
            let flips = v.iter().filter(|x| x.signum() < 0).count();
            let mut w: Vec<Half> = v.iter().map(|x| x.abs()).collect();
            let s = sort_desc_with_parity(&mut w);
            if has_adjacent_equal(&w) {
                return None;
            }
            Some((w, if flips % 2 == 0 { s } else { -s }))
        }
        Block::D => {
            let negs = v.iter().filter(|x| x.signum() < 0).count();
            let mut w: Vec<Half> = v.iter().map(|x| x.abs()).collect();
            let s = sort_desc_with_parity(&mut w);
            if has_adjacent_equal(&w) {
                return None;
            }
            if negs % 2 == 1 {
                if let Some(last) = w.last_mut() {
                    if *last != Half::ZERO {
                        *last = -*last;
                    }
                }
            }
            Some((w, s))
        }
    }
}

fn dominant_block(v: &[Half], b: Block) -> Vec<Half> {
    match b {
        Block::A => {
            let mut w = v.to_vec();
            w.sort_by(|a, b| b.cmp(a));
            w
        }
        Block::B | Block::C => {
            let mut w: Vec<Half> = v.iter().map(|x| x.abs()).collect();
            w.sort_by(|a, b| b.cmp(a));
            w
        }
        Block::D => {
            let negs = v.iter().filter(|x| x.signum() < 0).count();
            let mut w: Vec<Half> = v.iter().map(|x| x.abs()).collect();
            w.sort_by(|a, b| b.cmp(a));
            let has_zero = w.contains(&Half::ZERO);
            if negs % 2 == 1 && !has_zero {
                if let Some(last) = w.last_mut() {
                    *last = -*last;
                }
            }
            w
        }
    }
}

/// Linearly independent and (S|S) = 0.
pub fn iso_set_check(s: &[Weight]) -> bool {
    for (i, a) in s.iter().enumerate() {
        for b in &s[i..] {
            if a.form4(b) != 0 {
                return false;
            }
        }
    }
    rank(s) == s.len()
}

/// Rank over ℚ of a family of weights, by fraction-free elimination.
pub fn rank(vs: &[Weight]) -> usize {
    let mut rows: Vec<Vec<i128>> = vs
        .iter()
        .map(|w| w.eps.iter().chain(&w.delta).map(|x| x.twice() as i128).collect())
        .collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                for k in 0..cols {
                    rows[i][k] = rows[i][k] * a - rows[r][k] * b;
                }
                let g = rows[i].iter().fold(0i128, |g, x| gcd128(g, x.abs()));
                if g > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}
