//! Arc diagrams, moves and the marked block graph for gl(m|n).
//!
//! The graph is built on howls (core-free gl(k|k) diagrams) and mapped back
//! to the block by re-inserting the core. osp blocks need an [`EdgeProvider`].

use crate::diagrams::{self, invariants_of_diagram, tail_y0, SymbolCount, WeightDiagram};
use crate::error::{Error, Result};
use crate::rootdata::{Algebra, Kind, Weight};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Arcs `(a, a')` with `a < a'`: `a` carries a ×, `a'` an empty position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDiagram {
    pub arcs: Vec<(i64, i64)>,
}

impl ArcDiagram {
    pub fn end_of(&self, a: i64) -> Option<i64> {
        self.arcs.iter().find(|(x, _)| *x == a).map(|(_, y)| *y)
    }
}

/// Right to left, each × takes the nearest free ∘ to its right; core symbols are skipped.
pub fn arc_diagram_of(f: &WeightDiagram) -> Result<ArcDiagram> {
    if f.kind != Kind::Gl {
        return Err(Error::pre("arc diagrams are defined for gl only"));
    }
    let mut taken: BTreeSet<i64> = BTreeSet::new();
    let mut arcs = Vec::new();
    for (&p, c) in f.entries.iter().rev() {
        if c.times == 0 {
            continue;
        }
        if c.times > 1 {
            return Err(Error::pre("arc diagram needs at most one × per position"));
        }
        let mut q = p + 1;
        while !f.at(q).is_empty() || taken.contains(&q) {
            q += 1;
        }
        taken.insert(q);
        arcs.push((p, q));
    }
    arcs.sort();
    Ok(ArcDiagram { arcs })
}

pub fn arc_diagram(alg: &Algebra, nu: &Weight) -> Result<ArcDiagram> {
    arc_diagram_of(&diagrams::diag(alg, nu)?)
}

/// One move ν → λ: the × at `from` goes to the empty position `bp` under its arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramMove {
    pub target: WeightDiagram,
    pub from: i64,
    /// Number of arcs nested in the moving arc that pass over or land on `bp`.
    pub weight: u32,
    pub b: u32,
    pub bp: i64,
}

impl DiagramMove {
    pub fn is_non_tail(&self) -> bool {
        self.b as usize > tail_y0(&self.target).0
    }
}

pub fn moves_from_diagram(f: &WeightDiagram) -> Result<Vec<DiagramMove>> {
    let arcs = arc_diagram_of(f)?;
    let mut out = Vec::new();
    for &(a, a2) in &arcs.arcs {
        for u in a + 1..=a2 {
            if !f.at(u).is_empty() {
                continue;
            }
            let weight = arcs.arcs.iter().filter(|&&(c, c2)| a < c && c < u && u <= c2).count() as u32;
            let mut g = f.clone();
            g.entries.remove(&a);
            g.entries.insert(u, SymbolCount { gt: 0, lt: 0, times: 1 });
            let b = 1 + g.cross_positions().iter().filter(|&&x| x < u).count() as u32;
            out.push(DiagramMove { target: g, from: a, weight, b, bp: u });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub source: Weight,
    pub target: Weight,
    pub weight: u32,
    pub b: u32,
    pub bp: i64,
    pub non_tail: bool,
}

pub fn moves_from(alg: &Algebra, nu: &Weight) -> Result<Vec<Move>> {
    let f = diagrams::diag(alg, nu)?;
    moves_from_diagram(&f)?
        .into_iter()
        .map(|mv| {
            Ok(Move {
                source: nu.clone(),
                target: diagrams::weight_of_diagram(alg, &mv.target)?,
                weight: mv.weight,
                b: mv.b,
                bp: mv.bp,
                non_tail: mv.is_non_tail(),
            })
        })
        .collect()
}

/// Edge data returned by an edge provider, on howl diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProvidedEdge {
    pub other: WeightDiagram,
    pub b: i64,
    pub bp: i64,
}

/// Source of block-graph edges on core-free diagrams.
pub trait EdgeProvider: Sync {
    fn successors(&self, h: &WeightDiagram) -> Result<Vec<ProvidedEdge>>;
    fn predecessors(&self, h: &WeightDiagram) -> Result<Vec<ProvidedEdge>>;
}

/// Non-tail moves on core-free gl(k|k) diagrams.
pub struct GlMoves;

impl EdgeProvider for GlMoves {
    fn successors(&self, h: &WeightDiagram) -> Result<Vec<ProvidedEdge>> {
        Ok(moves_from_diagram(h)?
            .into_iter()
            .filter(|m| m.is_non_tail())
            .map(|m| ProvidedEdge { other: m.target, b: m.b as i64, bp: m.bp })
            .collect())
    }

    fn predecessors(&self, h: &WeightDiagram) -> Result<Vec<ProvidedEdge>> {
        let k = h.atypicality() as i64;
        let tail = tail_y0(h).0;
        let xs = h.cross_positions();
        let mut out = Vec::new();
        for (i, &u) in xs.iter().enumerate() {
            let b = i as i64 + 1;
            if b as usize <= tail {
                continue;
            }
            for a in (u - 2 * k + 1).max(i64::MIN + 1)..u {
                if !h.at(a).is_empty() {
                    continue;
                }
                let mut nu = h.clone();
                nu.entries.remove(&u);
                nu.entries.insert(a, SymbolCount { gt: 0, lt: 0, times: 1 });
                let arcs = arc_diagram_of(&nu)?;
                if arcs.end_of(a).is_some_and(|a2| u <= a2) {
                    out.push(ProvidedEdge { other: nu, b, bp: u });
                }
            }
        }
        Ok(out)
    }
}

/// The provider for an algebra kind; osp rules are not shipped.
pub fn default_provider(alg: &Algebra) -> Result<&'static dyn EdgeProvider> {
    match alg.kind {
        Kind::Gl => Ok(&GlMoves),
        _ => Err(Error::ProviderMissing(format!(
            "no edge provider for {} blocks; osp edge rules are not part of this build",
            alg.name()
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub b: i64,
    pub bp: i64,
    pub kappa: i64,
}

#[derive(Clone, Debug)]
pub struct MarkedGraph {
    pub alg: Algebra,
    pub core: WeightDiagram,
    /// Sorted by ||·||, so every edge goes forward.
    pub vertices: Vec<Weight>,
    pub howls: Vec<WeightDiagram>,
    pub norm: Vec<i64>,
    pub norm_gr: Vec<i64>,
    pub edges: Vec<Edge>,
    index: HashMap<Weight, usize>,
}

/// Puts the core back: the howl position h becomes the h-th non-core slot.
fn insert_core(alg: &Algebra, core: &WeightDiagram, h: &WeightDiagram) -> Result<Weight> {
    let mut f = core.clone();
    f.sign = diagrams::Sign::None;
    let core_pos: Vec<i64> = core.entries.keys().copied().collect();
    for x in h.cross_positions() {
        let mut p = x;
        // p − #core<p must equal x, with p not a core slot
        loop {
            let below = core_pos.iter().filter(|&&c| c < p).count() as i64;
            let target = x + below;
            if target == p && !core_pos.contains(&p) {
                break;
            }
            p = if target > p { target } else { p + 1 };
        }
        f.entries.insert(p, SymbolCount { gt: 0, lt: 0, times: 1 });
    }
    diagrams::weight_of_diagram(alg, &f)
}

impl MarkedGraph {
    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_kostant(&self, v: usize) -> bool {
        self.norm_gr[v] == 0
    }

    /// `m[λ][ν]` = Σ over mark-monotone paths ν → λ of the product of edge weights.
    pub fn path_matrix(&self, increasing: bool, use_bp: bool, weight: impl Fn(&Edge) -> i64) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut order: Vec<&Edge> = self.edges.iter().collect();
        let mark = |e: &Edge| if use_bp { e.bp } else { e.b };
        order.sort_by_key(|e| mark(e));
        if !increasing {
            order.reverse();
        }
        // cnt[src][v]: paths from src to v seen so far
        let mut cnt = vec![vec![0i64; n]; n];
        for (s, row) in cnt.iter_mut().enumerate() {
            row[s] = 1;
        }
        let mut i = 0;
        while i < order.len() {
            let mut j = i;
            while j < order.len() && mark(order[j]) == mark(order[i]) {
                j += 1;
            }
            let mut delta: Vec<(usize, usize, i64)> = Vec::new();
            for e in &order[i..j] {
                let w = weight(e);
                for (s, row) in cnt.iter().enumerate() {
                    if row[e.src] != 0 {
                        delta.push((s, e.dst, row[e.src] * w));
                    }
                }
            }
            for (s, d, v) in delta {
                cnt[s][d] += v;
            }
            i = j;
        }
        let mut m = vec![vec![0i64; n]; n];
        for (s, row) in cnt.iter().enumerate() {
            for (d, &v) in row.iter().enumerate() {
                m[d][s] = v;
            }
        }
        m
    }

    /// A^>: decreasing paths weighted by κ.
    pub fn a_greater(&self) -> Vec<Vec<i64>> {
        self.path_matrix(false, true, |e| e.kappa)
    }

    /// A^<: increasing paths weighted by (−1)^{length}κ.
    pub fn a_less(&self) -> Vec<Vec<i64>> {
        self.path_matrix(true, true, |e| -e.kappa)
    }

    /// Number of b′-increasing paths, `d[λ][μ]`.
    pub fn d_less(&self) -> Vec<Vec<i64>> {
        self.path_matrix(true, true, |_| 1)
    }

    /// d′: (−1)^{||λ||−||μ||} Σ_{decreasing P} (−1)^{length P}.
    pub fn d_prime(&self) -> Vec<Vec<i64>> {
        let m = self.path_matrix(false, true, |_| -1);
        (0..self.len())
            .map(|l| (0..self.len()).map(|u| m[l][u] * sign_pow(self.norm[l] - self.norm[u])).collect())
            .collect()
    }

    /// Property (BB) for b′; returns an offending middle vertex.
    pub fn bb_violation(&self) -> Option<usize> {
        for e1 in &self.edges {
            for e2 in self.edges.iter().filter(|e| e.src == e1.dst) {
                if e1.bp == e2.bp {
                    return Some(e1.dst);
                }
            }
        }
        None
    }

    /// b and b′ agree on the order of marks along every path of length two.
    pub fn decreasingly_equivalent(&self) -> bool {
        self.edges.iter().all(|e1| {
            self.edges.iter().filter(|e| e.src == e1.dst).all(|e2| (e1.b > e2.b) == (e1.bp > e2.bp))
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph block {\n  rankdir=LR;\n");
        for (i, f) in self.howls.iter().enumerate() {
            let label = diagrams::diag(&self.alg, &self.vertices[i])
                .map(|d| d.render_opts(true, true))
                .unwrap_or_else(|_| f.render(true));
            s.push_str(&format!("  v{i} [label=\"{label}\\n{}\"];\n", self.vertices[i]));
        }
        for e in &self.edges {
            s.push_str(&format!("  v{} -> v{} [label=\"{}/{}\"];\n", e.src, e.dst, e.b, e.bp));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "v1",
            "algebra": self.alg.spec(),
            "vertices": self.vertices.iter().enumerate().map(|(i, w)| serde_json::json!({
                "id": i,
                "weight": w,
                "diagram": diagrams::diag(&self.alg, w).map(|d| d.render_opts(true, true)).unwrap_or_default(),
                "norm": self.norm[i],
                "norm_gr": self.norm_gr[i],
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "src": e.src, "dst": e.dst, "b": e.b, "bp": e.bp, "kappa": e.kappa,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Vertices: predecessor closure of the seeds together with their
/// successors of ||·||_gr ≤ `max_norm_gr`.
pub fn build_block_graph(alg: &Algebra, seeds: &[Weight], max_norm_gr: i64) -> Result<MarkedGraph> {
    build_block_graph_with(default_provider(alg)?, alg, seeds, max_norm_gr)
}

pub fn build_block_graph_with(
    provider: &dyn EdgeProvider,
    alg: &Algebra,
    seeds: &[Weight],
    max_norm_gr: i64,
) -> Result<MarkedGraph> {
    if seeds.is_empty() {
        return Err(Error::pre("block graph needs at least one seed"));
    }
    let mut core: Option<WeightDiagram> = None;
    let mut start: Vec<WeightDiagram> = Vec::new();
    for s in seeds {
        diagrams::check_dominant(alg, s)?;
        let f = diagrams::diag(alg, s)?;
        let inv = invariants_of_diagram(&f);
        match &core {
            None => core = Some(inv.core.clone()),
            Some(c) if *c != inv.core => return Err(Error::pre("seeds lie in different blocks")),
            _ => {}
        }
        start.push(inv.howl);
    }
    let core = core.expect("non-empty seeds");
    let gr = |h: &WeightDiagram| invariants_of_diagram(h).norm_gr;

    let mut set: BTreeSet<WeightDiagram> = start.iter().cloned().collect();
    let mut queue: VecDeque<WeightDiagram> = start.iter().cloned().collect();
    while let Some(h) = queue.pop_front() {
        for e in provider.successors(&h)? {
            if gr(&e.other) <= max_norm_gr && set.insert(e.other.clone()) {
                queue.push_back(e.other);
            }
        }
    }
    let mut queue: VecDeque<WeightDiagram> = set.iter().cloned().collect();
    while let Some(h) = queue.pop_front() {
        for e in provider.predecessors(&h)? {
            if set.insert(e.other.clone()) {
                queue.push_back(e.other);
            }
        }
    }

    let mut rows: Vec<(i64, Weight, WeightDiagram, i64)> = Vec::new();
    for h in set {
        let inv = invariants_of_diagram(&h);
        let w = insert_core(alg, &core, &h)?;
        rows.push((inv.norm.unwrap_or(0), w, h, inv.norm_gr));
    }
    rows.sort();
    let index: HashMap<Weight, usize> = rows.iter().enumerate().map(|(i, r)| (r.1.clone(), i)).collect();
    let hindex: HashMap<&WeightDiagram, usize> = rows.iter().enumerate().map(|(i, r)| (&r.2, i)).collect();
    let mut edges = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for e in provider.successors(&r.2)? {
            if let Some(&j) = hindex.get(&e.other) {
                edges.push(Edge { src: i, dst: j, b: e.b, bp: e.bp, kappa: sign_pow(rows[j].0 - r.0 + 1) });
            }
        }
    }
    edges.sort_by_key(|e| (e.src, e.dst, e.bp));
    Ok(MarkedGraph {
        alg: alg.clone(),
        core,
        norm: rows.iter().map(|r| r.0).collect(),
        norm_gr: rows.iter().map(|r| r.3).collect(),
        vertices: rows.iter().map(|r| r.1.clone()).collect(),
        howls: rows.into_iter().map(|r| r.2).collect(),
        edges,
        index,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PathCounts {
    pub d_incr: i64,
    pub d_decr_signed: i64,
}

pub fn count_paths(g: &MarkedGraph, mu: &Weight, lambda: &Weight) -> Result<PathCounts> {
    let miss = |w: &Weight| Error::pre(format!("{w} is not in the truncated graph"));
    let m = g.index_of(mu).ok_or_else(|| miss(mu))?;
    let l = g.index_of(lambda).ok_or_else(|| miss(lambda))?;
    Ok(PathCounts { d_incr: g.d_less()[l][m], d_decr_signed: g.d_prime()[l][m] })
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub fn is_identity(a: &[Vec<i64>]) -> bool {
    a.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
}

/// A^>·A^< = A^<·A^> = Id.
pub fn inversion_check(g: &MarkedGraph) -> Result<bool> {
    if let Some(v) = g.bb_violation() {
        return Err(Error::pre(format!("property (BB) fails at {}", g.vertices[v])));
    }
    let (ag, al) = (g.a_greater(), g.a_less());
    Ok(is_identity(&mat_mul(&ag, &al)) && is_identity(&mat_mul(&al, &ag)))
}

/// Σ over Kostant μ of the number of increasing paths μ → λ.
pub fn m_lambda(alg: &Algebra, lambda: &Weight) -> Result<i64> {
    m_lambda_with(default_provider(alg)?, alg, lambda)
}

pub fn m_lambda_with(provider: &dyn EdgeProvider, alg: &Algebra, lambda: &Weight) -> Result<i64> {
    let g = build_block_graph_with(provider, alg, std::slice::from_ref(lambda), -1)?;
    let l = g.index_of(lambda).expect("seed present");
    let d = g.d_less();
    Ok((0..g.len()).filter(|&u| g.is_kostant(u)).map(|u| d[l][u]).sum())
}

/// Simple content-addressed JSON cache for block graphs.
#[derive(Clone, Debug, Default)]
pub struct GraphCache {
    pub dir: Option<std::path::PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct CachedGraph {
    vertices: Vec<Weight>,
    edges: Vec<Edge>,
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

impl GraphCache {
    pub fn from_env(no_cache: bool) -> GraphCache {
        if no_cache {
            return GraphCache { dir: None };
        }
        GraphCache { dir: std::env::var_os("SUPERCHAR_CACHE_DIR").map(Into::into) }
    }

    fn key(alg: &Algebra, seeds: &[Weight], bound: i64) -> String {
        let mut s: Vec<String> = seeds.iter().map(|w| w.to_string()).collect();
        s.sort();
        format!("{:016x}", fnv1a(&format!("v1|{}|{}|{}", alg.spec(), s.join(";"), bound)))
    }

    /// Builds the graph, reusing a cached vertex/edge list when one exists.
    pub fn build(&self, alg: &Algebra, seeds: &[Weight], bound: i64) -> Result<MarkedGraph> {
        let Some(dir) = &self.dir else { return build_block_graph(alg, seeds, bound) };
        let path = dir.join(format!("graph-{}.json", Self::key(alg, seeds, bound)));
        if let Some(g) = std::fs::read_to_string(&path)
            .ok()
            .and_then(|t| serde_json::from_str::<CachedGraph>(&t).ok())
            .and_then(|c| from_cached(alg, c).ok())
        {
            return Ok(g);
        }
        let g = build_block_graph(alg, seeds, bound)?;
        let c = CachedGraph { vertices: g.vertices.clone(), edges: g.edges.clone() };
        if std::fs::create_dir_all(dir).is_ok() {
            let _ = std::fs::write(&path, serde_json::to_string(&c).unwrap_or_default());
        }
        Ok(g)
    }
}

fn from_cached(alg: &Algebra, c: CachedGraph) -> Result<MarkedGraph> {
    let mut core = None;
    let (mut howls, mut norm, mut norm_gr) = (vec![], vec![], vec![]);
    for w in &c.vertices {
        let inv = diagrams::invariants(alg, w)?;
        core.get_or_insert(inv.core.clone());
        norm.push(inv.norm.unwrap_or(0));
        norm_gr.push(inv.norm_gr);
        howls.push(inv.howl);
    }
    let index = c.vertices.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    Ok(MarkedGraph {
        alg: alg.clone(),
        core: core.ok_or_else(|| Error::pre("empty cached graph"))?,
        vertices: c.vertices,
        howls,
        norm,
        norm_gr,
        edges: c.edges,
        index,
    })
}

/// Groups vertices of a graph by ||·||_gr, handy for display.
pub fn layers(g: &MarkedGraph) -> BTreeMap<i64, Vec<usize>> {
    let mut out: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for i in 0..g.len() {
        out.entry(g.norm_gr[i]).or_default().push(i);
    }
    out
}
