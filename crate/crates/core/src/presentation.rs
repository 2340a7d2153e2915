//! Generators `x_{ij}` of the abstract kernel group, their normal-form map
//! into F★, and relator lists for the presentations of the cover groups.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freeprod::{Chord, FStarElement, Letter, ReducedWord};
use crate::graph::{basic_cycles, Edge, EdgeWord, Graph, SpanningTree, Vertex};
use crate::perm::Permutation;

/// The generator `x_{ij}` for a chord `x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AGenerator {
    pub chord: Chord,
    pub i: Vertex,
    pub j: Vertex,
}

impl AGenerator {
    pub fn new(chord: Chord, i: Vertex, j: Vertex) -> Self {
        AGenerator { chord, i, j }
    }

    /// `x_{ji}`, equal to the inverse of `x_{ij}`.
    pub fn reversed(&self) -> Self {
        AGenerator::new(self.chord.clone(), self.j, self.i)
    }
}

impl fmt::Display for AGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "{}_{{{}{}}}", self.chord, self.i, self.j)
        } else {
            write!(f, "{}_{{{},{}}}", self.chord, self.i, self.j)
        }
    }
}

impl FromStr for AGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator {s:?}, expected e.g. x_{{14}} or x_{{1,4}}"));
        let (name, rest) = s.split_once("_{").ok_or_else(bad)?;
        let body = rest.strip_suffix('}').ok_or_else(bad)?;
        if !crate::graph::valid_label(name) {
            return Err(bad());
        }
        let (i, j) = match body.split_once(',') {
            Some((i, j)) => (i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?),
            None if body.len() == 2 && body.bytes().all(|b| b.is_ascii_digit()) => {
                ((body.as_bytes()[0] - b'0') as Vertex, (body.as_bytes()[1] - b'0') as Vertex)
            }
            None => return Err(bad()),
        };
        if i == 0 || j == 0 {
            return Err(bad());
        }
        Ok(AGenerator::new(Chord::new(name), i, j))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ALetter {
    pub gen: AGenerator,
    pub inv: bool,
}

impl ALetter {
    pub fn pos(gen: AGenerator) -> Self {
        ALetter { gen, inv: false }
    }

    pub fn neg(gen: AGenerator) -> Self {
        ALetter { gen, inv: true }
    }

    pub fn inverse(&self) -> Self {
        ALetter {
            gen: self.gen.clone(),
            inv: !self.inv,
        }
    }
}

impl fmt::Display for ALetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A word in the generators `x_{ij}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AWord(pub Vec<ALetter>);

impl AWord {
    pub fn new() -> Self {
        AWord(Vec::new())
    }

    pub fn letters(&self) -> &[ALetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> AWord {
        AWord(self.0.iter().rev().map(ALetter::inverse).collect())
    }

    pub fn concat(&self, other: &AWord) -> AWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        AWord(v)
    }

    pub fn commutator(a: &AWord, b: &AWord) -> AWord {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    /// Rewrites with `x_{ij}^-1 = x_{ji}`, `x_{ii} = 1` and
    /// `x_{ij} x_{jk} = x_{ik}`. The result has no inverse letters.
    pub fn simplify(&self) -> AWord {
        let mut stack: Vec<AGenerator> = Vec::new();
        for l in &self.0 {
            let g = if l.inv { l.gen.reversed() } else { l.gen.clone() };
            if g.i == g.j {
                continue;
            }
            match stack.last_mut() {
                Some(top) if top.chord == g.chord && top.j == g.i => {
                    top.j = g.j;
                    if top.i == top.j {
                        stack.pop();
                    }
                }
                _ => stack.push(g),
            }
        }
        AWord(stack.into_iter().map(ALetter::pos).collect())
    }

    pub fn parse(text: &str) -> Result<AWord> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(AWord::new());
        }
        text.split_whitespace()
            .map(|tok| match tok.strip_suffix("^-1") {
                Some(g) => Ok(ALetter::neg(g.parse()?)),
                None => Ok(ALetter::pos(tok.parse()?)),
            })
            .collect::<Result<Vec<_>>>()
            .map(AWord)
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl From<Vec<AGenerator>> for AWord {
    fn from(gens: Vec<AGenerator>) -> Self {
        AWord(gens.into_iter().map(ALetter::pos).collect())
    }
}

/// `x_{ij} ↦ x_j⁻¹ x_i`: the letter `x` in slot `i` and `x⁻¹` in slot `j`.
pub fn mu(gen: &AGenerator, n: usize) -> Result<FStarElement> {
    for v in [gen.i, gen.j] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let mut f = FStarElement::identity(n);
    if gen.i != gen.j {
        f = f.mul(&FStarElement::single(n, gen.i, Letter::pos(&gen.chord)))?;
        f = f.mul(&FStarElement::single(n, gen.j, Letter::neg(&gen.chord)))?;
    }
    Ok(f)
}

pub fn mu_letter(l: &ALetter, n: usize) -> Result<FStarElement> {
    let f = mu(&l.gen, n)?;
    Ok(if l.inv { f.inverse() } else { f })
}

pub fn mu_word(w: &AWord, n: usize) -> Result<FStarElement> {
    let mut f = FStarElement::identity(n);
    for l in w.letters() {
        f = f.mul(&mu_letter(l, n)?)?;
    }
    Ok(f)
}

/// `σ⁻¹ x_{ij} σ = x_{σ(i) σ(j)}`.
pub fn act_a(sigma: &Permutation, gen: &AGenerator) -> AGenerator {
    AGenerator::new(gen.chord.clone(), sigma.apply(gen.i), sigma.apply(gen.j))
}

/// Writes an element of `F_{t,n}` as a product of generators `x_{ij}`, so
/// that [`mu_word`] of the result gives `f` back.
pub fn factor_ftn(f: &FStarElement) -> Result<AWord> {
    if !f.in_ftn() {
        return Err(Error::NotInKernel(f.ab().to_string()));
    }
    let n = f.n();
    let mut out = Vec::new();
    // Slots 1..n-1 are cleared against slot n.
    for i in 1..n {
        for l in f.slot(i).letters() {
            let g = AGenerator::new(l.chord.clone(), i, n);
            out.push(ALetter { gen: g, inv: l.inv });
        }
    }
    let so_far = mu_word(&AWord(out.clone()), n)?;
    let rest = so_far.inverse().mul(f)?;
    let r = rest.slot(n);
    if !r.is_empty() {
        if n < 3 {
            return Err(Error::InvalidParameters(format!(
                "cannot express {rest} with only {n} slots"
            )));
        }
        out.extend(commutator_product(r.letters(), n).0);
    }
    Ok(AWord(out).simplify())
}

/// A word with zero exponent sums, placed in slot `n`, as a product of
/// conjugated commutators `[x_{n1}, y_{n2}]`. Bubble-sorting the letters by
/// chord turns `A a b B` into `A b a B · B⁻¹[a,b]B`; the sorted word cancels.
fn commutator_product(word: &[Letter], n: usize) -> AWord {
    let to_slot = |l: &Letter, other: Vertex| {
        let g = AGenerator::new(l.chord.clone(), n, other);
        AWord(vec![ALetter { gen: g, inv: l.inv }])
    };
    let mut w = word.to_vec();
    let mut factors = Vec::new();
    while let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w[p].chord > w[p + 1].chord) {
        let (a, b) = (w[p].clone(), w[p + 1].clone());
        let mut conj = AWord::new();
        for l in &w[p + 2..] {
            conj = conj.concat(&to_slot(l, 1));
        }
        let comm = AWord::commutator(&to_slot(&a, 1), &to_slot(&b, 2));
        factors.push(conj.inverse().concat(&comm).concat(&conj));
        w.swap(p, p + 1);
    }
    debug_assert!(ReducedWord::reduce(w).is_empty());
    factors
        .into_iter()
        .rev()
        .fold(AWord::new(), |acc, c| acc.concat(&c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// Squares, commuting disjoint pairs, braid relations.
    Coxeter,
    /// Coxeter plus one fork relator per triple of edges at a vertex.
    Coxy,
    /// Coxy plus one cycle relator per basic cycle; presents `S_n`.
    Symmetric,
    /// Defining relations of the abstract kernel group.
    Atn,
}

impl Presentation {
    pub const ALL: [Presentation; 4] = [
        Presentation::Coxeter,
        Presentation::Coxy,
        Presentation::Symmetric,
        Presentation::Atn,
    ];
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Presentation::Coxeter => "coxeter",
            Presentation::Coxy => "coxy",
            Presentation::Symmetric => "symmetric",
            Presentation::Atn => "atn",
        })
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coxeter" => Ok(Presentation::Coxeter),
            "coxy" => Ok(Presentation::Coxy),
            "symmetric" => Ok(Presentation::Symmetric),
            "atn" => Ok(Presentation::Atn),
            _ => Err(Error::Parse(format!("unknown presentation {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relator {
    Edge(EdgeWord),
    A(AWord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorSet {
    pub presentation: Presentation,
    pub relators: Vec<Relator>,
}

impl RelatorSet {
    pub fn len(&self) -> usize {
        self.relators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn edge_words(&self) -> impl Iterator<Item = &EdgeWord> {
        self.relators.iter().filter_map(|r| match r {
            Relator::Edge(w) => Some(w),
            Relator::A(_) => None,
        })
    }

    pub fn a_words(&self) -> impl Iterator<Item = &AWord> {
        self.relators.iter().filter_map(|r| match r {
            Relator::A(w) => Some(w),
            Relator::Edge(_) => None,
        })
    }

    /// One relator per line, letters separated by spaces.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for r in &self.relators {
            match r {
                Relator::Edge(w) => out.push_str(&g.word_to_string(w)),
                Relator::A(w) => out.push_str(&w.to_string()),
            }
            out.push('\n');
        }
        out
    }
}

/// Relators for `g`, with cycle relators and chords taken from the BFS tree.
pub fn relators(g: &Graph, which: Presentation) -> Result<RelatorSet> {
    g.require_connected()?;
    let tree = SpanningTree::bfs(g)?;
    relators_with_tree(g, &tree, which)
}

pub fn relators_with_tree(g: &Graph, tree: &SpanningTree, which: Presentation) -> Result<RelatorSet> {
    let mut rels = Vec::new();
    let word = |ids: &[crate::graph::EdgeId]| Relator::Edge(EdgeWord(ids.to_vec()));
    if which != Presentation::Atn {
        let ids: Vec<_> = g.edge_ids().collect();
        for &u in &ids {
            rels.push(word(&[u, u]));
        }
        for (k, &u) in ids.iter().enumerate() {
            for &v in &ids[k + 1..] {
                if g.edge(u).meets(g.edge(v)) {
                    rels.push(word(&[u, v, u, v, u, v]));
                } else {
                    rels.push(word(&[u, v, u, v]));
                }
            }
        }
    }
    if matches!(which, Presentation::Coxy | Presentation::Symmetric) {
        for v in 1..=g.n() {
            let mut at: Vec<_> = g.neighbours(v).iter().map(|&(_, e)| e).collect();
            at.sort_by(|&x, &y| g.label(x).cmp(g.label(y)));
            for a in 0..at.len() {
                for b in a + 1..at.len() {
                    for c in b + 1..at.len() {
                        let (u, v, w) = (at[a], at[b], at[c]);
                        // [u, vwv] with every generator an involution
                        rels.push(word(&[u, v, w, v, u, v, w, v]));
                    }
                }
            }
        }
    }
    if which == Presentation::Symmetric {
        g.require_connected()?;
        for cyc in basic_cycles(g, tree) {
            let m = cyc.m();
            let mut w: Vec<_> = (1..m).map(|i| cyc.u(i)).collect();
            w.extend((2..=m).rev().map(|i| cyc.u(i)));
            rels.push(word(&w));
        }
    }
    if which == Presentation::Atn {
        let chords: Vec<Chord> = tree
            .chords()
            .into_iter()
            .map(|c| Chord::new(g.label(c)))
            .collect();
        rels.extend(atn_relators(&chords, g.n()).into_iter().map(Relator::A));
    }
    Ok(RelatorSet {
        presentation: which,
        relators: rels,
    })
}

/// All instances of the four defining relation families of the kernel group
/// over the given chords and `n` indices.
pub fn atn_relators(chords: &[Chord], n: usize) -> Vec<AWord> {
    let gen = |c: &Chord, i, j| AGenerator::new(c.clone(), i, j);
    let mut out = Vec::new();
    for c in chords {
        for i in 1..=n {
            out.push(AWord::from(vec![gen(c, i, i)]));
        }
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let ik_inv = ALetter::neg(gen(c, i, k));
                    out.push(AWord(vec![
                        ALetter::pos(gen(c, i, j)),
                        ALetter::pos(gen(c, j, k)),
                        ik_inv.clone(),
                    ]));
                    out.push(AWord(vec![
                        ALetter::pos(gen(c, j, k)),
                        ALetter::pos(gen(c, i, j)),
                        ik_inv,
                    ]));
                }
            }
        }
    }
    for x in chords {
        for y in chords {
            for_distinct4(n, |i, j, k, l| {
                out.push(AWord::commutator(
                    &AWord::from(vec![gen(x, i, j)]),
                    &AWord::from(vec![gen(y, k, l)]),
                ));
            });
        }
    }
    out
}

fn for_distinct4(n: usize, mut f: impl FnMut(Vertex, Vertex, Vertex, Vertex)) {
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    if i != j && i != k && i != l && j != k && j != l && k != l {
                        f(i, j, k, l);
                    }
                }
            }
        }
    }
}

/// The data of a Tsaranov group realised as a quotient of a cover group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsaranovReport {
    pub a: usize,
    pub b: usize,
    pub graph: Graph,
    pub n: usize,
    pub t: usize,
    /// The extra relator family, in the chord letters `x_i`.
    pub relator_family: String,
}

impl TsaranovReport {
    /// The relators `x_i² x_j⁻²` for every chord and every `i < j`.
    pub fn extra_relators(&self) -> Vec<FStarElement> {
        let tree = SpanningTree::bfs(&self.graph).expect("construction is connected");
        let mut out = Vec::new();
        for c in tree.chords() {
            let x = Chord::new(self.graph.label(c));
            for i in 1..=self.n {
                for j in i + 1..=self.n {
                    let mut f = FStarElement::identity(self.n);
                    for (slot, l) in [(i, Letter::pos(&x)), (i, Letter::pos(&x)), (j, Letter::neg(&x)), (j, Letter::neg(&x))] {
                        f = f.mul(&FStarElement::single(self.n, slot, l)).expect("same n");
                    }
                    out.push(f);
                }
            }
        }
        out
    }
}

impl fmt::Display for TsaranovReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tsaranov a={} b={} t={}", self.a, self.b, self.t)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "t={}", self.t)?;
        if self.t == 0 {
            writeln!(f, "group: S_{} (no extra relators)", self.n)?;
        } else {
            writeln!(
                f,
                "group: S_{n} ⋉ F_{{{t},{n}}} modulo {}",
                self.relator_family,
                n = self.n,
                t = self.t
            )?;
        }
        write!(f, "graph:")?;
        for e in self.graph.edges() {
            write!(f, " {}=({},{})", e.label, e.a, e.b)?;
        }
        Ok(())
    }
}

/// Builds the graph whose dual is the complement of `Γ + 0`, where `Γ` is
/// `K_{a,b}` with `t` disjoint edges removed: `t` triangles on a shared edge
/// `u0 = (1,2)`, with `a - t` pendant edges at vertex 1 and `b - t` at 2.
pub fn tsaranov_presentation(a: usize, b: usize, t: usize) -> Result<TsaranovReport> {
    if a < t || b < t {
        return Err(Error::InvalidParameters(format!(
            "need a, b >= t, got a={a} b={b} t={t}"
        )));
    }
    let mut edges = vec![Edge::new("u0", 1, 2)];
    for k in 1..=t {
        edges.push(Edge::new(format!("s{k}"), 1, 2 + k));
        edges.push(Edge::new(format!("r{k}"), 2, 2 + k));
    }
    let mut next = 3 + t;
    for k in 1..=a - t {
        edges.push(Edge::new(format!("a{k}"), 1, next));
        next += 1;
    }
    for k in 1..=b - t {
        edges.push(Edge::new(format!("b{k}"), 2, next));
        next += 1;
    }
    let graph = Graph::with_vertices(next - 1, edges)?;
    Ok(TsaranovReport {
        a,
        b,
        n: graph.n(),
        t: graph.cycle_rank(),
        graph,
        relator_family: "x_i^2 x_j^-2".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::perm::perm_of_word;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(i: Vertex, j: Vertex) -> AGenerator {
        AGenerator::new(Chord::new("x"), i, j)
    }

    #[test]
    fn mu_values() {
        assert!(mu(&x(3, 3), 5).unwrap().is_identity());
        let f = mu(&x(1, 4), 6).unwrap();
        assert_eq!(f.to_string(), "1: x, 4: x^-1");
        assert!(f.in_ftn());
        assert!(matches!(mu(&x(1, 7), 6), Err(Error::VertexOutOfRange { vertex: 7, n: 6 })));
    }

    #[test]
    fn transitivity_under_mu() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let mut idx: Vec<Vertex> = (1..=7).collect();
            idx.shuffle(&mut rng);
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let lhs = mu(&x(i, j), 7).unwrap().mul(&mu(&x(j, k), 7).unwrap()).unwrap();
            assert_eq!(lhs, mu(&x(i, k), 7).unwrap());
        }
    }

    #[test]
    fn action_on_generators() {
        let id = Permutation::identity(4);
        assert_eq!(act_a(&id, &x(1, 3)), x(1, 3));
        assert_eq!(act_a(&Permutation::transposition(4, 1, 2), &x(1, 3)), x(2, 3));
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let mut images: Vec<Vertex> = (1..=6).collect();
            images.shuffle(&mut rng);
            let s = Permutation::from_images(images).unwrap();
            let g = x(rng.gen_range(1..=6), rng.gen_range(1..=6));
            let lhs = mu(&act_a(&s, &g), 6).unwrap();
            let rhs = mu(&g, 6).unwrap().act(&s).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn generator_syntax() {
        assert_eq!(x(1, 4).to_string(), "x_{14}");
        assert_eq!(x(1, 12).to_string(), "x_{1,12}");
        assert_eq!("x_{14}".parse::<AGenerator>().unwrap(), x(1, 4));
        assert_eq!("x_{1,12}".parse::<AGenerator>().unwrap(), x(1, 12));
        assert!("x_{1}".parse::<AGenerator>().is_err());
        let w = AWord::parse("x_{12} y_{3,4}^-1").unwrap();
        assert_eq!(AWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn simplification() {
        let w = AWord::from(vec![x(1, 2), x(2, 4), x(4, 4)]);
        assert_eq!(w.simplify().to_string(), "x_{14}");
        let back = AWord(vec![ALetter::pos(x(1, 2)), ALetter::neg(x(1, 2))]);
        assert!(back.simplify().is_empty());
    }

    #[test]
    fn factorisation_round_trip() {
        let n = 6;
        let f = mu(&x(1, 4), n).unwrap();
        assert_eq!(factor_ftn(&f).unwrap().to_string(), "x_{14}");
        let not_kernel = FStarElement::single(n, 2, Letter::pos(&Chord::new("x")));
        assert!(matches!(factor_ftn(&not_kernel), Err(Error::NotInKernel(_))));
        // a commutator living entirely in one slot
        let chords = [Chord::new("x"), Chord::new("y"), Chord::new("z")];
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let mut f = FStarElement::identity(n);
            for _ in 0..rng.gen_range(0..8) {
                let c = chords.choose(&mut rng).unwrap().clone();
                let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                let g = mu(&AGenerator::new(c, i, j), n).unwrap();
                f = f.mul(&if rng.gen_bool(0.5) { g } else { g.inverse() }).unwrap();
            }
            let w = factor_ftn(&f).unwrap();
            assert_eq!(mu_word(&w, n).unwrap(), f, "{f}");
        }
    }

    #[test]
    fn relator_counts() {
        let p3 = named::path(3);
        let cox = relators(&p3, Presentation::Coxy).unwrap();
        assert_eq!(cox.to_text(&p3), "a a\nb b\na b a b a b\n");
        let y = named::star(3);
        let base = relators(&y, Presentation::Coxeter).unwrap().len();
        assert_eq!(relators(&y, Presentation::Coxy).unwrap().len(), base + 1);
        let tri = named::cycle(3);
        let sym = relators(&tri, Presentation::Symmetric).unwrap();
        // BFS tree {a, c}, chord b = (2,3): cycle 2-1-3, u1 = b, u2 = a, u3 = c
        assert_eq!(sym.to_text(&tri).lines().last().unwrap(), "b a c a");
    }

    #[test]
    fn symmetric_relators_die_in_sn() {
        for g in [named::cycle(5), named::complete(4), named::sixpts(), named::random_connected(7, 3, 4)] {
            for r in relators(&g, Presentation::Symmetric).unwrap().edge_words() {
                assert!(perm_of_word(&g, r).is_identity());
            }
        }
    }

    #[test]
    fn atn_relators_die_under_mu() {
        let g = named::complete(4);
        let set = relators(&g, Presentation::Atn).unwrap();
        assert!(!set.is_empty());
        for w in set.a_words() {
            assert!(mu_word(w, 4).unwrap().is_identity(), "{w}");
        }
    }

    #[test]
    fn tsaranov_parameters() {
        let r = tsaranov_presentation(3, 3, 3).unwrap();
        assert_eq!((r.n, r.t), (5, 3));
        assert_eq!(r.graph.edge_count(), 7);
        assert_eq!(r.relator_family, "x_i^2 x_j^-2");
        assert!(r.extra_relators().iter().all(FStarElement::in_ftn));
        let r = tsaranov_presentation(4, 2, 0).unwrap();
        assert_eq!((r.n, r.t), (8, 0));
        assert!(r.extra_relators().is_empty());
        let r = tsaranov_presentation(2, 2, 1).unwrap();
        assert_eq!((r.n, r.t), (5, 1));
        assert!(matches!(tsaranov_presentation(1, 3, 2), Err(Error::InvalidParameters(_))));
    }
}
