//! Graph-coloring utility polynomial.
//!
//! Each vertex gets a color code of `bits` binary digits. For an edge
//! `(u, v)` the indicator
//!
//! ```text
//! prod_k ( x_{u,k} x_{v,k} + (1 - x_{u,k})(1 - x_{v,k}) )
//! ```
//!
//! is 1 when both codes agree in every bit and 0 otherwise, so the sum over
//! all edges counts monochromatic edges and vanishes exactly on proper
//! colorings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pbpoly::{Monomial, Polynomial, VarId};

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut g = Graph::new(vertex_count);
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// Adds `{u, v}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidVertex(format!("self-loop on vertex {u}")));
        }
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(Error::InvalidVertex(format!(
                    "vertex {x} out of range for {} vertices",
                    self.vertex_count
                )));
            }
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Whether some assignment of `colors` colors leaves no edge
    /// monochromatic. Plain backtracking; meant for tiny graphs.
    pub fn is_colorable(&self, colors: usize) -> bool {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut color = vec![usize::MAX; self.vertex_count];
        fn go(v: usize, colors: usize, adj: &[Vec<usize>], color: &mut [usize]) -> bool {
            if v == color.len() {
                return true;
            }
            for c in 0..colors {
                if adj[v].iter().all(|&u| color[u] != c) {
                    color[v] = c;
                    if go(v + 1, colors, adj, color) {
                        return true;
                    }
                }
            }
            color[v] = usize::MAX;
            false
        }
        go(0, colors, &adj, &mut color)
    }

    /// Reads the DIMACS edge format: `p edge <V> <E>`, then `e <u> <v>`
    /// lines with 1-based vertices; `c` lines are comments. Duplicate edges
    /// are merged.
    pub fn parse_dimacs(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let mut tok = raw.split_whitespace();
            match tok.next() {
                None | Some("c") => {}
                Some("p") => {
                    if graph.is_some() {
                        return Err(Error::parse(line_no, "duplicate problem line"));
                    }
                    let format = tok.next();
                    if !matches!(format, Some("edge") | Some("col")) {
                        return Err(Error::parse(line_no, "expected `p edge <V> <E>`"));
                    }
                    let v: usize = parse_num(tok.next(), line_no, "vertex count")?;
                    let _declared_edges: usize = parse_num(tok.next(), line_no, "edge count")?;
                    graph = Some(Graph::new(v));
                }
                Some("e") => {
                    let g = graph
                        .as_mut()
                        .ok_or_else(|| Error::parse(line_no, "edge before problem line"))?;
                    let u: usize = parse_num(tok.next(), line_no, "endpoint")?;
                    let v: usize = parse_num(tok.next(), line_no, "endpoint")?;
                    if u == 0 || v == 0 {
                        return Err(Error::InvalidVertex(format!(
                            "line {line_no}: DIMACS vertices are 1-based"
                        )));
                    }
                    g.add_edge(u - 1, v - 1)?;
                }
                Some(other) => {
                    return Err(Error::parse(
                        line_no,
                        format!("unknown line type `{other}`"),
                    ));
                }
            }
        }
        graph.ok_or_else(|| Error::parse(0, "missing `p edge` line"))
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what}")))
}

/// Binary color codes of width `bits`; bit `k` of vertex `v` is the
/// original variable `x_{v*bits + k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoringEncoding {
    bits: usize,
}

impl ColoringEncoding {
    pub fn new(bits: usize) -> Result<Self> {
        if bits == 0 || bits > 16 {
            return Err(Error::InvalidConfig(format!(
                "color width must be in 1..=16 bits, got {bits}"
            )));
        }
        Ok(ColoringEncoding { bits })
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn colors(&self) -> usize {
        1 << self.bits
    }

    pub fn var_of(&self, vertex: usize, bit: usize) -> VarId {
        assert!(bit < self.bits);
        VarId::original((vertex * self.bits + bit) as u32)
    }

    /// All `vertex_count * bits` variables, including isolated vertices.
    pub fn variable_count(&self, vertex_count: usize) -> usize {
        vertex_count * self.bits
    }

    /// Color of `vertex` decoded from `value(var)`, bit `k` weighing `2^k`.
    pub fn decode(&self, vertex: usize, mut value: impl FnMut(VarId) -> bool) -> usize {
        (0..self.bits)
            .filter(|&k| value(self.var_of(vertex, k)))
            .map(|k| 1 << k)
            .sum()
    }
}

/// `ceil(log2(vertex_count))`, the code width that distinguishes every vertex.
pub fn default_bits(vertex_count: usize) -> Result<usize> {
    if vertex_count < 2 {
        return Err(Error::InvalidVertex(format!(
            "need at least 2 vertices, got {vertex_count}"
        )));
    }
    Ok((usize::BITS - (vertex_count - 1).leading_zeros()) as usize)
}

/// Indicator that `u` and `v` share a color code, fully expanded.
pub fn edge_polynomial(enc: &ColoringEncoding, u: usize, v: usize) -> Result<Polynomial> {
    if u == v {
        return Err(Error::InvalidVertex(format!(
            "edge from vertex {u} to itself"
        )));
    }
    let mut acc = Polynomial::constant(1);
    for k in 0..enc.bits() {
        let (a, b) = (enc.var_of(u, k), enc.var_of(v, k));
        // x_a x_b + (1 - x_a)(1 - x_b) = 2 x_a x_b - x_a - x_b + 1
        let factor = Polynomial::from_terms([
            (Monomial::new([a, b]), 2),
            (Monomial::var(a), -1),
            (Monomial::var(b), -1),
            (Monomial::one(), 1),
        ])?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// Sum of [`edge_polynomial`] over the edges of `g`.
pub fn utility_polynomial(g: &Graph, enc: &ColoringEncoding) -> Result<Polynomial> {
    let mut q = Polynomial::zero();
    for (u, v) in g.edges() {
        q.add_scaled_in_place(1, &edge_polynomial(enc, u, v)?)?;
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbpoly::Assignment;

    fn all_vars(g: &Graph, enc: &ColoringEncoding) -> Vec<VarId> {
        (0..g.vertex_count())
            .flat_map(|v| (0..enc.bits()).map(move |k| enc.var_of(v, k)))
            .collect()
    }

    #[test]
    fn default_bits_values() {
        assert_eq!(default_bits(2).unwrap(), 1);
        assert_eq!(default_bits(3).unwrap(), 2);
        assert_eq!(default_bits(4).unwrap(), 2);
        assert_eq!(default_bits(5).unwrap(), 3);
        assert_eq!(default_bits(8).unwrap(), 3);
        assert_eq!(default_bits(9).unwrap(), 4);
        assert!(default_bits(1).is_err());
        assert!(default_bits(0).is_err());
    }

    #[test]
    fn single_bit_edge() {
        let enc = ColoringEncoding::new(1).unwrap();
        let p = edge_polynomial(&enc, 0, 1).unwrap();
        let (a, b) = (VarId::original(0), VarId::original(1));
        let expected = Polynomial::from_terms([
            (Monomial::new([a, b]), 2),
            (Monomial::var(a), -1),
            (Monomial::var(b), -1),
            (Monomial::one(), 1),
        ])
        .unwrap();
        assert_eq!(p, expected);
        for mask in 0..4u64 {
            let asg = Assignment::from_mask(&[a, b], mask);
            let same = (mask & 1) == (mask >> 1);
            assert_eq!(p.evaluate(&asg).unwrap(), i64::from(same));
        }
    }

    #[test]
    fn edge_indicator_is_binary() {
        for bits in 1..=3 {
            let enc = ColoringEncoding::new(bits).unwrap();
            let p = edge_polynomial(&enc, 0, 1).unwrap();
            assert_eq!(p.degree(), 2 * bits);
            let vars: Vec<VarId> = (0..2 * bits as u32).map(VarId::original).collect();
            for mask in 0..1u64 << vars.len() {
                let asg = Assignment::from_mask(&vars, mask);
                let cu = enc.decode(0, |v| asg.get(v).unwrap());
                let cv = enc.decode(1, |v| asg.get(v).unwrap());
                assert_eq!(p.evaluate(&asg).unwrap(), i64::from(cu == cv));
            }
        }
    }

    #[test]
    fn two_bit_codes_01_vs_11_differ() {
        let enc = ColoringEncoding::new(2).unwrap();
        let p = edge_polynomial(&enc, 0, 1).unwrap();
        // vertex 0 -> bits (1, 0), vertex 1 -> bits (1, 1)
        let asg: Assignment = [(0, true), (1, false), (2, true), (3, true)]
            .into_iter()
            .map(|(i, b)| (VarId::original(i), b))
            .collect();
        assert_eq!(p.evaluate(&asg).unwrap(), 0);
    }

    #[test]
    fn utility_counts_monochromatic_edges() {
        let graphs = [Graph::complete(3), Graph::complete(4), {
            let mut g = Graph::new(4);
            g.add_edge(0, 1).unwrap();
            g.add_edge(1, 2).unwrap();
            g.add_edge(2, 3).unwrap();
            g
        }];
        for g in &graphs {
            for bits in 1..=2 {
                let enc = ColoringEncoding::new(bits).unwrap();
                let q = utility_polynomial(g, &enc).unwrap();
                let vars = all_vars(g, &enc);
                for mask in 0..1u64 << vars.len() {
                    let asg = Assignment::from_mask(&vars, mask);
                    let color: Vec<usize> = (0..g.vertex_count())
                        .map(|v| enc.decode(v, |x| asg.get(x).unwrap()))
                        .collect();
                    let mono = g.edges().filter(|&(u, v)| color[u] == color[v]).count();
                    assert_eq!(q.evaluate(&asg).unwrap(), mono as i64);
                }
            }
        }
    }

    #[test]
    fn complete_eight_counts() {
        let enc = ColoringEncoding::new(default_bits(8).unwrap()).unwrap();
        let q = utility_polynomial(&Graph::complete(8), &enc).unwrap();
        assert_eq!(q.variables().len(), 24);
        assert_eq!(q.len(), 1429);
        assert_eq!(q.coeff(&Monomial::one()), 28);
    }

    #[test]
    fn edgeless_graph_is_zero() {
        let enc = ColoringEncoding::new(2).unwrap();
        assert!(utility_polynomial(&Graph::new(5), &enc).unwrap().is_zero());
    }

    #[test]
    fn dimacs_parsing() {
        let g = Graph::parse_dimacs("c path\np edge 3 2\ne 1 2\ne 2 3\ne 3 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(matches!(
            Graph::parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(Error::InvalidVertex(_))
        ));
        assert!(matches!(
            Graph::parse_dimacs("e 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse_dimacs("p edge 2 1\ne 1 1\n"),
            Err(Error::InvalidVertex(_))
        ));
    }

    #[test]
    fn colorability() {
        assert!(Graph::complete(4).is_colorable(4));
        assert!(!Graph::complete(5).is_colorable(4));
        assert!(!Graph::complete(3).is_colorable(2));
        assert!(Graph::new(3).is_colorable(1));
    }
}
