//! Unit vertex-capacity flow on the split graph, searched with bitsets.
//!
//! Each vertex `v` becomes `v_in -> v_out` with capacity one; each edge `uv`
//! becomes `u_out -> v_in` and `v_out -> u_in` with unbounded capacity. A
//! vertex's state is the single vertex feeding its `in` node (`pred`), which
//! is enough to recover every residual arc.

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;
/// `pred` marker for a vertex fed directly by the super source.
const SRC: usize = usize::MAX - 1;
/// Parent marker: reached from the other half of the same vertex.
const OWN: usize = usize::MAX - 2;
const ROOT: usize = usize::MAX - 3;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    In,
    Out,
}

enum Mode {
    /// Single source and sink with unbounded capacity; they must be nonadjacent.
    Pair { s: Vertex, t: Vertex },
    /// Super source feeding every vertex of `a`, super sink fed by every vertex of `b`.
    Sets { a: VertexSet, b: VertexSet },
}

pub(crate) struct SplitFlow<'g> {
    g: &'g Graph,
    mode: Mode,
    pred: Vec<usize>,
    into_t: Vec<Vertex>,
    to_sink: VertexSet,
    value: usize,
    par_in: Vec<usize>,
    par_out: Vec<usize>,
    seen_in: VertexSet,
    seen_out: VertexSet,
}

impl<'g> SplitFlow<'g> {
    pub(crate) fn pair(g: &'g Graph, s: Vertex, t: Vertex) -> Self {
        debug_assert!(s != t && !g.has_edge(s, t));
        let mut f = Self::blank(g, Mode::Pair { s, t });
        // Common neighbours give disjoint paths of length two for free.
        for c in g.neighbors(s).intersection(g.neighbors(t)).iter() {
            f.pred[c] = s;
            f.into_t.push(c);
            f.value += 1;
        }
        f
    }

    pub(crate) fn sets(g: &'g Graph, a: VertexSet, b: VertexSet) -> Self {
        debug_assert!(a.is_disjoint(&b));
        let mut f = Self::blank(g, Mode::Sets { a, b });
        let Mode::Sets { a, b } = &f.mode else { unreachable!() };
        let (a, b) = (a.clone(), b.clone());
        for x in a.iter() {
            let free = g.neighbors(x).intersection(&b).difference(&f.to_sink);
            if let Some(y) = free.first() {
                f.pred[x] = SRC;
                f.pred[y] = x;
                f.to_sink.insert(y);
                f.value += 1;
            }
        }
        f
    }

    fn blank(g: &'g Graph, mode: Mode) -> Self {
        let n = g.n();
        SplitFlow {
            g,
            mode,
            pred: vec![NONE; n],
            into_t: Vec::new(),
            to_sink: VertexSet::new(n),
            value: 0,
            par_in: vec![NONE; n],
            par_out: vec![NONE; n],
            seen_in: VertexSet::new(n),
            seen_out: VertexSet::new(n),
        }
    }

    pub(crate) fn value(&self) -> usize {
        self.value
    }

    /// Augments until the flow reaches `limit` or is maximum.
    pub(crate) fn run(&mut self, limit: usize) -> usize {
        while self.value < limit {
            match self.search() {
                Some(end) => self.augment(end),
                None => break,
            }
        }
        self.value
    }

    fn search(&mut self) -> Option<(Side, Vertex)> {
        let n = self.g.n();
        self.seen_in = VertexSet::new(n);
        self.seen_out = VertexSet::new(n);
        let mut queue: Vec<(Side, Vertex)> = Vec::new();
        match &self.mode {
            Mode::Pair { s, .. } => {
                self.seen_in.insert(*s);
                self.seen_out.insert(*s);
                self.par_out[*s] = ROOT;
                queue.push((Side::Out, *s));
            }
            Mode::Sets { a, .. } => {
                for x in a.iter() {
                    if self.pred[x] != SRC {
                        self.seen_in.insert(x);
                        self.par_in[x] = ROOT;
                        queue.push((Side::In, x));
                    }
                }
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let (side, v) = queue[head];
            head += 1;
            match side {
                Side::Out => {
                    match &self.mode {
                        Mode::Pair { t, .. } => {
                            if self.g.has_edge(v, *t) && !self.seen_in.contains(*t) {
                                self.par_in[*t] = v;
                                return Some((Side::In, *t));
                            }
                        }
                        Mode::Sets { b, .. } => {
                            if b.contains(v) && !self.to_sink.contains(v) {
                                return Some((Side::Out, v));
                            }
                        }
                    }
                    let mut fresh = self.g.neighbors(v).difference(&self.seen_in);
                    if let Mode::Pair { t, .. } = self.mode {
                        fresh.remove(t);
                    }
                    for u in fresh.iter() {
                        self.par_in[u] = v;
                        queue.push((Side::In, u));
                    }
                    self.seen_in.union_with(&fresh);
                    if self.pred[v] != NONE && !self.seen_in.contains(v) {
                        self.seen_in.insert(v);
                        self.par_in[v] = OWN;
                        queue.push((Side::In, v));
                    }
                }
                Side::In => {
                    let p = self.pred[v];
                    if p == NONE {
                        if !self.seen_out.contains(v) {
                            self.seen_out.insert(v);
                            self.par_out[v] = OWN;
                            queue.push((Side::Out, v));
                        }
                    } else if p != SRC && !self.seen_out.contains(p) {
                        self.seen_out.insert(p);
                        self.par_out[p] = v;
                        queue.push((Side::Out, p));
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, end: (Side, Vertex)) {
        let (mut side, mut v) = end;
        match side {
            Side::In => {
                // Pair mode: the sink itself carries no state.
                self.into_t.push(self.par_in[v]);
                v = self.par_in[v];
                side = Side::Out;
            }
            Side::Out => {
                self.to_sink.insert(v);
            }
        }
        loop {
            match side {
                Side::Out => {
                    let p = self.par_out[v];
                    if p == ROOT {
                        break;
                    }
                    side = Side::In;
                    if p != OWN {
                        v = p;
                    }
                }
                Side::In => {
                    let p = self.par_in[v];
                    self.pred[v] = match p {
                        OWN => NONE,
                        ROOT => SRC,
                        u => u,
                    };
                    if p == ROOT {
                        break;
                    }
                    side = Side::Out;
                    if p != OWN {
                        v = p;
                    }
                }
            }
        }
        self.value += 1;
    }

    /// Vertex separator dual to the current (maximum) flow. Only valid after
    /// [`run`](Self::run) stopped below its limit.
    pub(crate) fn min_cut(&mut self) -> VertexSet {
        let found = self.search();
        debug_assert!(found.is_none(), "min_cut called on a non-maximum flow");
        let mut cut = self.seen_in.difference(&self.seen_out);
        if let Mode::Sets { a, .. } = &self.mode {
            for x in a.iter() {
                if !self.seen_in.contains(x) {
                    cut.insert(x);
                }
            }
        }
        if let Mode::Pair { s, .. } = self.mode {
            cut.remove(s);
        }
        cut
    }

    /// Flow paths in vertex order, source end first.
    pub(crate) fn paths(&self) -> Vec<Vec<Vertex>> {
        let walk = |mut v: Vertex, mut path: Vec<Vertex>| {
            loop {
                path.push(v);
                let p = self.pred[v];
                if p == SRC {
                    break;
                }
                if let Mode::Pair { s, .. } = self.mode {
                    if p == s {
                        path.push(s);
                        break;
                    }
                }
                v = p;
            }
            path.reverse();
            path
        };
        match &self.mode {
            Mode::Pair { t, .. } => self.into_t.iter().map(|&u| walk(u, vec![*t])).collect(),
            Mode::Sets { .. } => self.to_sink.iter().map(|b| walk(b, Vec::new())).collect(),
        }
    }
}
