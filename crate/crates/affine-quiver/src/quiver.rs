//! The quiver data structure: labeled vertices with dimensions, arrow
//! multiplicities, tensor composition, DOT/JSON serialization and
//! dimension-respecting isomorphism testing.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// What a vertex stands for. `Simple { orbit, rho }` is the simple module
/// attached to a character orbit and a stabilizer character, both by
/// canonical index; `Tuple` is a component-wise label in a tensor product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VertexKind {
    Trivial,
    Simple { orbit: usize, rho: usize },
    Tuple(Vec<VertexKind>),
}

impl VertexKind {
    /// Components for tuple flattening: a tuple contributes its parts,
    /// anything else contributes itself.
    fn components(&self) -> Vec<VertexKind> {
        match self {
            VertexKind::Tuple(parts) => parts.clone(),
            other => vec![other.clone()],
        }
    }
}

/// A quiver vertex: its label and the dimension of the simple module.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexLabel {
    pub kind: VertexKind,
    pub dim: u64,
}

impl VertexLabel {
    pub fn trivial() -> VertexLabel {
        VertexLabel {
            kind: VertexKind::Trivial,
            dim: 1,
        }
    }

    pub fn simple(orbit: usize, rho: usize, dim: u64) -> VertexLabel {
        VertexLabel {
            kind: VertexKind::Simple { orbit, rho },
            dim,
        }
    }

    /// Pairing for tensor products; nested tuples flatten one level so an
    /// n-fold product carries n-ary tuples.
    pub fn pair(a: &VertexLabel, b: &VertexLabel) -> VertexLabel {
        let mut parts = a.kind.components();
        parts.extend(b.kind.components());
        VertexLabel {
            kind: VertexKind::Tuple(parts),
            dim: a.dim * b.dim,
        }
    }

    /// Canonical label string: `C`, `W(O<k>,r<j>)`, or a parenthesized
    /// comma-joined tuple.
    pub fn label(&self) -> String {
        kind_label(&self.kind)
    }

    /// Parses a canonical label string back into a kind.
    pub fn parse_label(s: &str) -> Result<VertexKind, Error> {
        let (kind, rest) = parse_kind(s)?;
        if !rest.is_empty() {
            return Err(Error::Parse(format!("trailing input in label `{s}`")));
        }
        Ok(kind)
    }
}

fn kind_label(kind: &VertexKind) -> String {
    match kind {
        VertexKind::Trivial => "C".into(),
        VertexKind::Simple { orbit, rho } => format!("W(O{orbit},r{rho})"),
        VertexKind::Tuple(parts) => {
            let inner: Vec<String> = parts.iter().map(kind_label).collect();
            format!("({})", inner.join(","))
        }
    }
}

fn parse_kind(s: &str) -> Result<(VertexKind, &str), Error> {
    if let Some(rest) = s.strip_prefix('C') {
        return Ok((VertexKind::Trivial, rest));
    }
    if let Some(rest) = s.strip_prefix("W(O") {
        let comma = rest
            .find(",r")
            .ok_or_else(|| Error::Parse(format!("bad simple label near `{s}`")))?;
        let orbit: usize = rest[..comma]
            .parse()
            .map_err(|_| Error::Parse(format!("bad orbit index in `{s}`")))?;
        let rest = &rest[comma + 2..];
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed simple label in `{s}`")))?;
        let rho: usize = rest[..close]
            .parse()
            .map_err(|_| Error::Parse(format!("bad character index in `{s}`")))?;
        return Ok((VertexKind::Simple { orbit, rho }, &rest[close + 1..]));
    }
    if let Some(mut rest) = s.strip_prefix('(') {
        let mut parts = Vec::new();
        loop {
            let (kind, after) = parse_kind(rest)?;
            parts.push(kind);
            if let Some(after) = after.strip_prefix(',') {
                rest = after;
            } else if let Some(after) = after.strip_prefix(')') {
                return Ok((VertexKind::Tuple(parts), after));
            } else {
                return Err(Error::Parse(format!("bad tuple label near `{after}`")));
            }
        }
    }
    Err(Error::Parse(format!("unrecognized label `{s}`")))
}

/// A finite multigraph with labeled, dimension-carrying vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    vertices: Vec<VertexLabel>,
    arrows: BTreeMap<(usize, usize), u32>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    label: String,
    dim: u64,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    src: usize,
    dst: usize,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<VertexJson>,
    arrows: Vec<ArrowJson>,
}

impl Quiver {
    pub fn new(vertices: Vec<VertexLabel>) -> Quiver {
        Quiver {
            vertices,
            arrows: BTreeMap::new(),
        }
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Total number of arrows, counted with multiplicity.
    pub fn arrow_count(&self) -> u64 {
        self.arrows.values().map(|&m| m as u64).sum()
    }

    /// Arrow entries `((src, dst), multiplicity)` in sorted order.
    pub fn arrows(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.arrows.iter().map(|(&k, &m)| (k, m))
    }

    pub fn multiplicity(&self, src: usize, dst: usize) -> u32 {
        self.arrows.get(&(src, dst)).copied().unwrap_or(0)
    }

    pub fn add_arrow(&mut self, src: usize, dst: usize, mult: u32) {
        assert!(src < self.vertices.len() && dst < self.vertices.len());
        if mult == 0 {
            return;
        }
        *self.arrows.entry((src, dst)).or_insert(0) += mult;
    }

    /// Quiver of a tensor product: vertex set is the product, an arrow of
    /// multiplicity m crossed with a vertex contributes multiplicity m.
    pub fn tensor(&self, other: &Quiver) -> Quiver {
        let nb = other.vertices.len();
        let mut vertices = Vec::with_capacity(self.vertices.len() * nb);
        for a in &self.vertices {
            for b in &other.vertices {
                vertices.push(VertexLabel::pair(a, b));
            }
        }
        let mut q = Quiver::new(vertices);
        for ((s, t), m) in self.arrows() {
            for z in 0..nb {
                q.add_arrow(s * nb + z, t * nb + z, m);
            }
        }
        for ((s, t), m) in other.arrows() {
            for v in 0..self.vertices.len() {
                q.add_arrow(v * nb + s, v * nb + t, m);
            }
        }
        q
    }

    /// DOT output; an arrow of multiplicity m appears as m parallel edges.
    /// Byte-deterministic for a given quiver.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph Q {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{}\" [dim={}];\n", v.label(), v.dim));
        }
        for ((s, t), m) in self.arrows() {
            for _ in 0..m {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\";\n",
                    self.vertices[s].label(),
                    self.vertices[t].label()
                ));
            }
        }
        out.push_str("}\n");
        out
    }

    /// Lossless JSON with deterministic key order.
    pub fn to_json(&self) -> String {
        let doc = QuiverJson {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexJson {
                    id,
                    label: v.label(),
                    dim: v.dim,
                })
                .collect(),
            arrows: self
                .arrows()
                .map(|((src, dst), mult)| ArrowJson { src, dst, mult })
                .collect(),
        };
        serde_json::to_string(&doc).expect("quiver serializes")
    }

    pub fn from_json(text: &str) -> Result<Quiver, Error> {
        let doc: QuiverJson = serde_json::from_str(text)?;
        let n = doc.vertices.len();
        let mut vertices = vec![None; n];
        for v in &doc.vertices {
            if v.id >= n || vertices[v.id].is_some() {
                return Err(Error::Parse(format!("bad vertex id {}", v.id)));
            }
            vertices[v.id] = Some(VertexLabel {
                kind: VertexLabel::parse_label(&v.label)?,
                dim: v.dim,
            });
        }
        let vertices: Vec<VertexLabel> = vertices
            .into_iter()
            .map(|v| v.ok_or_else(|| Error::Parse("missing vertex id".into())))
            .collect::<Result<_, _>>()?;
        let mut q = Quiver::new(vertices);
        for a in &doc.arrows {
            if a.src >= n || a.dst >= n || a.mult == 0 {
                return Err(Error::Parse(format!(
                    "bad arrow {} -> {} (x{})",
                    a.src, a.dst, a.mult
                )));
            }
            q.add_arrow(a.src, a.dst, a.mult);
        }
        Ok(q)
    }

    /// Dimension-respecting isomorphism: a vertex bijection preserving
    /// dimensions and every arrow multiplicity. Backtracking with
    /// dimension-and-degree pruning.
    pub fn isomorphic(&self, other: &Quiver) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() || self.arrow_count() != other.arrow_count() {
            return false;
        }
        let sig = |q: &Quiver| -> Vec<(u64, Vec<(u64, u32)>, Vec<(u64, u32)>)> {
            (0..q.vertices.len())
                .map(|v| {
                    let mut outs: Vec<(u64, u32)> = q
                        .arrows()
                        .filter(|&((s, _), _)| s == v)
                        .map(|((_, t), m)| (q.vertices[t].dim, m))
                        .collect();
                    outs.sort_unstable();
                    let mut ins: Vec<(u64, u32)> = q
                        .arrows()
                        .filter(|&((_, t), _)| t == v)
                        .map(|((s, _), m)| (q.vertices[s].dim, m))
                        .collect();
                    ins.sort_unstable();
                    (q.vertices[v].dim, outs, ins)
                })
                .collect()
        };
        let sa = sig(self);
        let sb = sig(other);
        {
            let mut ka = sa.clone();
            let mut kb = sb.clone();
            ka.sort();
            kb.sort();
            if ka != kb {
                return false;
            }
        }
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        // Most-constrained first: rarest signature earliest.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| {
            (
                sa.iter().filter(|s| **s == sa[v]).count(),
                std::cmp::Reverse(sa[v].1.len() + sa[v].2.len()),
            )
        });
        self.search(other, &sa, &sb, &order, 0, &mut mapping, &mut used)
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        other: &Quiver,
        sa: &[(u64, Vec<(u64, u32)>, Vec<(u64, u32)>)],
        sb: &[(u64, Vec<(u64, u32)>, Vec<(u64, u32)>)],
        order: &[usize],
        depth: usize,
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for w in 0..other.vertices.len() {
            if used[w] || sb[w] != sa[v] {
                continue;
            }
            // Consistency with everything already mapped.
            for &u in &order[..depth] {
                let x = mapping[u];
                if self.multiplicity(v, u) != other.multiplicity(w, x)
                    || self.multiplicity(u, v) != other.multiplicity(x, w)
                {
                    continue 'cand;
                }
            }
            if self.multiplicity(v, v) != other.multiplicity(w, w) {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if self.search(other, sa, sb, order, depth + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.len())?;
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(f, "  {i}: {} (dim {})", v.label(), v.dim)?;
        }
        writeln!(f, "arrows: {}", self.arrow_count())?;
        for ((s, t), m) in self.arrows() {
            writeln!(f, "  {s} -> {t} (x{m})")?;
        }
        write!(
            f,
            "summary: {} vertices, {} arrows",
            self.vertices.len(),
            self.arrow_count()
        )
    }
}
