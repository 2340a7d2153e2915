//! The cover group of a graph: the embedding `Φ` into `S_n ⋉ F★`, its
//! inverse `Ψ`, the cycle words `γ_a`, and the decision procedures built on
//! them.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::freeprod::{Chord, Convention, FStarElement, SemidirectElement};
use crate::graph::{basic_cycles, BasicCycle, EdgeId, EdgeWord, Graph, SpanningTree, Vertex};
use crate::perm::Permutation;
use crate::presentation::{factor_ftn, mu, AGenerator, AWord};

/// A graph together with its spanning tree and basic cycles.
#[derive(Debug, Clone)]
pub struct Context {
    graph: Graph,
    tree: SpanningTree,
    cycles: Vec<BasicCycle>,
    cycle_of: HashMap<EdgeId, usize>,
    is_k4: bool,
}

impl Context {
    /// Context on the breadth-first spanning tree.
    pub fn build(graph: Graph) -> Result<Self> {
        let tree = SpanningTree::bfs(&graph)?;
        Self::with_tree(graph, tree)
    }

    pub fn with_tree(graph: Graph, tree: SpanningTree) -> Result<Self> {
        graph.require_connected()?;
        let cycles = basic_cycles(&graph, &tree);
        let cycle_of = cycles.iter().enumerate().map(|(k, c)| (c.chord, k)).collect();
        Ok(Context {
            is_k4: graph.is_k4(),
            graph,
            tree,
            cycles,
            cycle_of,
        })
    }

    pub fn with_tree_labels<S: AsRef<str>>(graph: Graph, labels: &[S]) -> Result<Self> {
        let tree = SpanningTree::from_labels(&graph, labels)?;
        Self::with_tree(graph, tree)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn cycles(&self) -> &[BasicCycle] {
        &self.cycles
    }

    pub fn is_k4(&self) -> bool {
        self.is_k4
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn t(&self) -> usize {
        self.cycles.len()
    }

    pub fn chord(&self, e: EdgeId) -> Chord {
        Chord::new(self.graph.label(e))
    }

    pub fn chords(&self) -> Vec<Chord> {
        self.cycles.iter().map(|c| self.chord(c.chord)).collect()
    }

    /// The basic cycle closed by the chord with this label.
    pub fn cycle_of(&self, chord: &Chord) -> Result<&BasicCycle> {
        let id = self
            .graph
            .lookup(chord.as_str())
            .map_err(|_| Error::UnknownChord(chord.to_string()))?;
        self.cycle_of
            .get(&id)
            .map(|&k| &self.cycles[k])
            .ok_or_else(|| Error::UnknownChord(chord.to_string()))
    }

    pub fn parse_word(&self, text: &str) -> Result<EdgeWord> {
        self.graph.parse_word(text)
    }

    pub fn word_to_string(&self, w: &EdgeWord) -> String {
        self.graph.word_to_string(w)
    }

    /// `Φ` of a single edge: a tree edge `(a,b)` goes to `(ab)`, a chord
    /// from `s` to `e` goes to `(se)·x_{se}`.
    pub fn phi_edge(&self, e: EdgeId) -> SemidirectElement {
        let (a, b) = self.graph.edge(e).ends();
        let perm = Permutation::transposition(self.n(), a, b);
        if self.tree.contains(e) {
            SemidirectElement::from_perm(perm)
        } else {
            let f = mu(&AGenerator::new(self.chord(e), a, b), self.n()).expect("endpoints in range");
            SemidirectElement::new(perm, f).expect("same degree")
        }
    }

    pub fn phi(&self, w: &EdgeWord) -> SemidirectElement {
        self.phi_with(w, Convention::RightAction)
    }

    /// `Φ` evaluated under an explicit product convention.
    pub fn phi_with(&self, w: &EdgeWord, convention: Convention) -> SemidirectElement {
        w.letters()
            .iter()
            .fold(SemidirectElement::identity(self.n()), |acc, &e| {
                acc.mul_with(&self.phi_edge(e), convention).expect("same degree")
            })
    }

    /// The word `γ_a` of the cycle for a global vertex `a`.
    pub fn gamma(&self, cyc: &BasicCycle, a: Vertex) -> EdgeWord {
        let m = cyc.m();
        let run = |from: usize, to: usize| (from..=to).map(|i| cyc.u(i)).collect::<Vec<_>>();
        if let Some(i) = cyc.local(a) {
            return EdgeWord(if i == m {
                run(2, m)
            } else if i == m - 1 {
                run(1, m - 1)
            } else {
                let mut w = run(i + 2, m);
                w.extend(run(1, i));
                w
            });
        }
        let path = self.tree.path(cyc.global(1), a);
        let mut w = EdgeWord::new();
        for step in path.iter().rev() {
            w.extend(&self.tilde(cyc, step.edge));
        }
        w.extend(&self.gamma(cyc, cyc.global(1)));
        for step in &path {
            w.push(step.edge);
        }
        w
    }

    /// The tilde word of an edge relative to a cycle.
    pub fn tilde(&self, cyc: &BasicCycle, u: EdgeId) -> EdgeWord {
        if let Some(p) = cyc.position(u) {
            return EdgeWord(vec![cyc.u(p + 1)]);
        }
        let edge = self.graph.edge(u);
        let mut touch: Vec<usize> = [edge.a, edge.b].iter().filter_map(|&v| cyc.local(v)).collect();
        touch.sort_unstable();
        EdgeWord(match touch[..] {
            [] => vec![u],
            [i] => vec![cyc.u(i + 1), u, cyc.u(i + 1)],
            [i, j] => vec![cyc.u(i + 1), cyc.u(j + 1), u, cyc.u(j + 1), cyc.u(i + 1)],
            _ => unreachable!("an edge has two endpoints"),
        })
    }

    /// The tilde map applied letter by letter.
    pub fn tilde_word(&self, cyc: &BasicCycle, w: &EdgeWord) -> EdgeWord {
        let mut out = EdgeWord::new();
        for &e in w.letters() {
            out.extend(&self.tilde(cyc, e));
        }
        out
    }

    /// The rotation `(m ... 3 2 1)` of the cycle, in global vertices.
    pub fn tau(&self, cyc: &BasicCycle) -> Permutation {
        let order: Vec<Vertex> = cyc.vertices().iter().rev().copied().collect();
        Permutation::cycle(self.n(), &order)
    }

    /// A word over tree edges whose permutation is `s`.
    pub fn psi_perm(&self, s: &Permutation) -> EdgeWord {
        let mut cur = s.clone();
        let mut transpositions = Vec::new();
        while let Some(i) = (1..=cur.n()).find(|&i| cur.apply(i) != i) {
            let j = cur.apply(i);
            transpositions.push((i, j));
            cur = &cur * &Permutation::transposition(cur.n(), i, j);
        }
        let mut w = EdgeWord::new();
        for &(i, j) in transpositions.iter().rev() {
            let edges: Vec<EdgeId> = self.tree.path(i, j).iter().map(|s| s.edge).collect();
            let (last, head) = edges.split_last().expect("distinct vertices");
            w.extend(&EdgeWord(head.to_vec()));
            w.push(*last);
            w.extend(&EdgeWord(head.iter().rev().copied().collect()));
        }
        w
    }

    /// `γ_j⁻¹ γ_i` for the generator `x_{ij}`.
    pub fn psi_gen(&self, gen: &AGenerator) -> Result<EdgeWord> {
        let cyc = self.cycle_of(&gen.chord)?;
        for v in [gen.i, gen.j] {
            if v == 0 || v > self.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        Ok(self.gamma(cyc, gen.j).inverse().concat(&self.gamma(cyc, gen.i)))
    }

    pub fn psi_aword(&self, w: &AWord) -> Result<EdgeWord> {
        let mut out = EdgeWord::new();
        for l in w.letters() {
            let word = self.psi_gen(&l.gen)?;
            out.extend(&if l.inv { word.inverse() } else { word });
        }
        Ok(out)
    }

    /// An edge word whose image under `Φ` is `g`.
    pub fn psi(&self, g: &SemidirectElement) -> Result<EdgeWord> {
        if g.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: g.n(),
                right: self.n(),
            });
        }
        let factors = factor_ftn(&g.f)?;
        Ok(self.psi_perm(&g.perm).concat(&self.psi_aword(&factors)?))
    }

    pub fn is_trivial(&self, w: &EdgeWord) -> Verdict {
        let image = self.phi(w);
        if !image.is_identity() {
            Verdict::Nontrivial(image)
        } else if self.is_k4 && !cancels_freely(w) {
            Verdict::TrivialInQuotient
        } else {
            Verdict::Trivial
        }
    }

    /// Decides `w1 = w2` through `w1 · w2⁻¹`.
    pub fn equal(&self, w1: &EdgeWord, w2: &EdgeWord) -> Verdict {
        self.is_trivial(&w1.concat(&w2.inverse()))
    }

    /// Whether `w` lies in the kernel of the map to `S_n`, with the F part
    /// of its image.
    pub fn in_kernel(&self, w: &EdgeWord) -> (bool, FStarElement) {
        let image = self.phi(w);
        (image.perm.is_identity(), image.f)
    }

    pub fn structure_report(&self) -> StructureReport {
        let (n, t) = (self.n(), self.t());
        let classification = match t {
            0 => Classification::SymmetricGroup,
            1 => Classification::VirtuallyAbelian,
            _ => Classification::ContainsFreeSubgroup,
        };
        let exact = !self.is_k4;
        StructureReport {
            n,
            t,
            classification,
            kernel_ab_rank: t * n.saturating_sub(1),
            flags: Flags {
                is_k4: self.is_k4,
                torsion_free_kernel: exact,
                residually_finite: exact,
                word_problem_exact: exact,
            },
        }
    }
}

/// Whether a word reduces to nothing by cancelling adjacent equal letters.
fn cancels_freely(w: &EdgeWord) -> bool {
    let mut stack = Vec::new();
    for &e in w.letters() {
        if stack.last() == Some(&e) {
            stack.pop();
        } else {
            stack.push(e);
        }
    }
    stack.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Trivial,
    /// The image in `S_n ⋉ F★`, which is not the identity.
    Nontrivial(SemidirectElement),
    /// Trivial in the quotient computed for `K_4`; triviality in the group
    /// itself is not decided.
    TrivialInQuotient,
}

impl Verdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Verdict::Trivial)
    }

    /// Trivial in the computed image (counts the `K_4` quotient answer).
    pub fn image_trivial(&self) -> bool {
        !matches!(self, Verdict::Nontrivial(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Trivial => write!(f, "TRIVIAL"),
            Verdict::Nontrivial(w) => write!(f, "NONTRIVIAL {w}"),
            Verdict::TrivialInQuotient => write!(f, "TRIVIAL QUOTIENT-ONLY (K4)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    SymmetricGroup,
    VirtuallyAbelian,
    ContainsFreeSubgroup,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::SymmetricGroup => "symmetric group",
            Classification::VirtuallyAbelian => "virtually abelian",
            Classification::ContainsFreeSubgroup => "contains a free subgroup",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    pub is_k4: bool,
    pub torsion_free_kernel: bool,
    pub residually_finite: bool,
    pub word_problem_exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub n: usize,
    pub t: usize,
    pub classification: Classification,
    pub kernel_ab_rank: usize,
    pub flags: Flags,
}

impl StructureReport {
    /// The group as a semidirect product, e.g. `S_6 ⋉ Z^5`.
    pub fn group(&self) -> String {
        let n = self.n;
        match self.classification {
            Classification::SymmetricGroup => format!("S_{n}"),
            Classification::VirtuallyAbelian => format!("S_{n} ⋉ Z^{}", n - 1),
            Classification::ContainsFreeSubgroup if self.flags.is_k4 => {
                format!("S_{n} ⋉ A_{{{t},{n}}}, computed in S_{n} ⋉ F_{{{t},{n}}}", t = self.t)
            }
            Classification::ContainsFreeSubgroup => format!("S_{n} ⋉ F_{{{},{n}}}", self.t),
        }
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} t={}: {}, {}", self.n, self.t, self.classification, self.group())?;
        writeln!(f, "kernel abelianization rank: {}", self.kernel_ab_rank)?;
        writeln!(f, "K4: {}", self.flags.is_k4)?;
        writeln!(f, "torsion-free kernel: {}", self.flags.torsion_free_kernel)?;
        writeln!(f, "residually finite: {}", self.flags.residually_finite)?;
        write!(f, "exact word problem: {}", self.flags.word_problem_exact)
    }
}
