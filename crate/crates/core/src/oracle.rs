//! Brute-force and law-based verifiers for the maps in [`crate::coxy`].
//!
//! Every check is exact. Randomised checks take a seed, which is kept in the
//! report so a failure can be replayed.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxy::Context;
use crate::error::{Error, Result};
use crate::freeprod::{Chord, Convention, FStarElement, SemidirectElement};
use crate::graph::{named, EdgeId, EdgeWord, Graph, Vertex};
use crate::perm::{perm_of_word, Permutation};
use crate::presentation::{
    act_a, mu, mu_word, relators_with_tree, tsaranov_presentation, AGenerator, AWord, Presentation,
};

/// Largest group closure [`bfs_group_order`] will enumerate.
pub const ORDER_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub id: String,
    pub checks_run: usize,
    pub failures: Vec<Failure>,
    pub seed: Option<u64>,
}

impl OracleReport {
    pub fn new(id: impl Into<String>) -> Self {
        OracleReport {
            id: id.into(),
            checks_run: 0,
            failures: Vec::new(),
            seed: None,
        }
    }

    pub fn seeded(id: impl Into<String>, seed: u64) -> Self {
        OracleReport {
            seed: Some(seed),
            ..Self::new(id)
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one comparison.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, check: &str, inputs: impl FnOnce() -> String, expected: &T, got: &T) {
        self.checks_run += 1;
        if expected != got {
            self.failures.push(Failure {
                check: check.to_string(),
                inputs: inputs(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn check_true(&mut self, check: &str, inputs: impl FnOnce() -> String, ok: bool) {
        self.check(check, inputs, &true, &ok);
    }

    pub fn absorb(&mut self, other: OracleReport) {
        self.checks_run += other.checks_run;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.id, self.checks_run)?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        for fail in self.failures.iter().take(5) {
            write!(
                f,
                "\n  {}: {}\n    expected {}\n    got      {}",
                fail.check, fail.inputs, fail.expected, fail.got
            )?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n  ... {} more failures", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

/// `Φ` of every coxy relator and the permutation of every symmetric relator
/// must be the identity.
pub fn check_relators(ctx: &Context) -> OracleReport {
    check_relators_with(ctx, Convention::RightAction)
}

pub fn check_relators_with(ctx: &Context, convention: Convention) -> OracleReport {
    let mut report = OracleReport::new("relators");
    let g = ctx.graph();
    let coxy = relators_with_tree(g, ctx.tree(), Presentation::Coxy).expect("connected");
    let identity = SemidirectElement::identity(ctx.n());
    for w in coxy.edge_words() {
        let got = ctx.phi_with(w, convention);
        report.check("phi kills relator", || g.word_to_string(w), &identity, &got);
    }
    let sym = relators_with_tree(g, ctx.tree(), Presentation::Symmetric).expect("connected");
    let id = Permutation::identity(ctx.n());
    for w in sym.edge_words() {
        report.check("perm kills relator", || g.word_to_string(w), &id, &perm_of_word(g, w));
    }
    report
}

/// Size of the group generated by `gens`, by breadth-first closure.
pub fn bfs_group_order(gens: &[Permutation]) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Ok(1);
    };
    let id = Permutation::identity(first.n());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.compose(g)?;
            if seen.insert(q.clone()) {
                if seen.len() > ORDER_LIMIT {
                    return Err(Error::OrderGuard { limit: ORDER_LIMIT });
                }
                queue.push_back(q);
            }
        }
    }
    Ok(seen.len())
}

/// Exponent sums indexed by chord and slot.
pub type SlotVector = BTreeMap<(Chord, Vertex), i64>;

/// Rank over the integers of the matrix whose rows are `vectors`, by
/// fraction-free elimination.
pub fn ab_rank(vectors: &[SlotVector]) -> usize {
    let columns: Vec<&(Chord, Vertex)> = vectors
        .iter()
        .flat_map(|v| v.keys())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| columns.iter().map(|c| BigInt::from(v.get(c).copied().unwrap_or(0))).collect())
        .collect();
    let zero = BigInt::from(0);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..columns.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != zero) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            for c in col + 1..columns.len() {
                let v = (&rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c]) / &prev;
                rows[r][c] = v;
            }
            rows[r][col] = zero.clone();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of the abelianised images of the kernel generators `x_{i,i+1}`,
/// each computed as `Φ(Ψ(x_{i,i+1}))`.
pub fn kernel_rank(ctx: &Context) -> Result<usize> {
    let mut vectors = Vec::new();
    for x in ctx.chords() {
        for i in 1..ctx.n() {
            let w = ctx.psi_gen(&AGenerator::new(x.clone(), i, i + 1))?;
            vectors.push(ctx.phi(&w).f.slot_exponents());
        }
    }
    Ok(ab_rank(&vectors))
}

pub fn check_kernel_rank(ctx: &Context) -> OracleReport {
    let mut report = OracleReport::new("kernel-rank");
    let expected = ctx.t() * ctx.n().saturating_sub(1);
    let got = kernel_rank(ctx).expect("chords come from the context");
    report.check("abelianised kernel rank", || format!("n={} t={}", ctx.n(), ctx.t()), &expected, &got);
    report
}

fn chord_names(t: usize) -> Vec<Chord> {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
    (0..t)
        .map(|k| match NAMES.get(k) {
            Some(s) => Chord::new(s),
            None => Chord::new(&format!("x{k}")),
        })
        .collect()
}

/// Verifies the defining relations and the derived identities of the kernel
/// group on random instances, in F★ through `μ`. Passing at `n = 4` says
/// nothing about the abstract group there.
pub fn identity_suite(seed: u64, n: usize, t: usize, trials: usize) -> Result<OracleReport> {
    if t == 0 || n < 4 {
        return Err(Error::InvalidParameters(format!("identity suite needs t >= 1 and n >= 4, got n={n} t={t}")));
    }
    let mut report = OracleReport::seeded(format!("identities n={n} t={t}"), seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chords = chord_names(t);
    let one = FStarElement::identity(n);
    let g = |c: &Chord, i: Vertex, j: Vertex| mu(&AGenerator::new(c.clone(), i, j), n).expect("indices in range");
    let prod = |fs: &[FStarElement]| fs.iter().fold(one.clone(), |acc, f| acc.mul(f).expect("same n"));
    let comm = |a: &FStarElement, b: &FStarElement| prod(&[a.inverse(), b.inverse(), a.clone(), b.clone()]);
    for _ in 0..trials {
        let mut idx: Vec<Vertex> = (1..=n).collect();
        idx.shuffle(&mut rng);
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        let pick = |rng: &mut ChaCha8Rng| chords.choose(rng).expect("t >= 1").clone();
        let (x, y, z, w) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let inputs = || format!("x={x} y={y} z={z} w={w} i={i} j={j} k={k} l={l}");
        let (a, b, c) = (rng.gen_range(1..=n), rng.gen_range(1..=n), rng.gen_range(1..=n));

        report.check("unit", inputs, &one, &g(&x, a, a));
        report.check("transitive", inputs, &g(&x, a, c), &prod(&[g(&x, a, b), g(&x, b, c)]));
        report.check("transitive reversed", inputs, &g(&x, a, c), &prod(&[g(&x, b, c), g(&x, a, b)]));
        report.check("disjoint commute", inputs, &one, &comm(&g(&x, i, j), &g(&y, k, l)));
        let conj = prod(&[g(&z, i, k), g(&y, k, l), g(&z, k, i)]);
        report.check("commute with conjugate", inputs, &one, &comm(&g(&x, i, j), &conj));
        let conj = prod(&[g(&z, k, i), g(&y, k, l), g(&z, i, k)]);
        report.check("commute with inner conjugate", inputs, &one, &comm(&g(&x, i, j), &conj));
        report.check(
            "triangle",
            inputs,
            &prod(&[g(&y, j, i), g(&x, i, k), g(&y, k, j)]),
            &prod(&[g(&x, j, k), g(&y, k, i), g(&x, i, j)]),
        );
        report.check(
            "triangle, first inverted",
            inputs,
            &prod(&[g(&y, i, j), g(&x, i, k), g(&y, j, k)]),
            &prod(&[g(&x, j, k), g(&y, i, k), g(&x, i, j)]),
        );
        report.check(
            "triangle, both inverted",
            inputs,
            &prod(&[g(&y, i, j), g(&x, k, i), g(&y, j, k)]),
            &prod(&[g(&x, k, j), g(&y, i, k), g(&x, j, i)]),
        );
        // s, i, j, k distinct; u, v, w = x, y, w
        let s = l;
        report.check(
            "four-index",
            inputs,
            &prod(&[g(&w, s, k), g(&x, k, i), g(&y, i, j), g(&x, j, k)]),
            &prod(&[g(&x, s, i), g(&y, i, j), g(&x, j, s), g(&w, s, k)]),
        );
        if t == 1 {
            let (p, q) = (g(&x, a, b), g(&x, c, rng.gen_range(1..=n)));
            report.check("single chord commutes", inputs, &p.mul(&q)?, &q.mul(&p)?);
        }
        // erasing one chord is a homomorphism
        let words: Vec<FStarElement> = (0..2)
            .map(|_| {
                let gens: Vec<AGenerator> = (0..4)
                    .map(|_| AGenerator::new(pick(&mut rng), rng.gen_range(1..=n), rng.gen_range(1..=n)))
                    .collect();
                mu_word(&AWord::from(gens), n).expect("indices in range")
            })
            .collect();
        let drop = pick(&mut rng);
        report.check(
            "retract",
            inputs,
            &words[0].erase(&drop).mul(&words[1].erase(&drop))?,
            &words[0].mul(&words[1])?.erase(&drop),
        );
    }
    Ok(report)
}

fn random_word(ids: &[EdgeId], len: usize, rng: &mut ChaCha8Rng) -> EdgeWord {
    EdgeWord((0..len).map(|_| *ids.choose(rng).expect("edges exist")).collect())
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<Vertex> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}

/// The permutation part of `Φ` agrees with the word's permutation.
pub fn check_perm_consistency(ctx: &Context, samples: usize, seed: u64) -> OracleReport {
    let mut report = OracleReport::seeded("perm-consistency", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<EdgeId> = ctx.graph().edge_ids().collect();
    if ids.is_empty() {
        return report;
    }
    for _ in 0..samples {
        let len = rng.gen_range(0..20);
        let w = random_word(&ids, len, &mut rng);
        report.check(
            "perm part",
            || ctx.word_to_string(&w),
            &perm_of_word(ctx.graph(), &w),
            &ctx.phi(&w).perm,
        );
    }
    report
}

/// `Φ∘Ψ` and `Ψ∘Φ` are identities.
pub fn check_round_trips(ctx: &Context, perms: usize, seed: u64) -> OracleReport {
    let mut report = OracleReport::seeded("round-trips", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ctx.n();
    for _ in 0..perms {
        let s = random_perm(n, &mut rng);
        let w = ctx.psi_perm(&s);
        report.check("phi(psi(perm))", || s.to_string(), &SemidirectElement::from_perm(s.clone()), &ctx.phi(&w));
        report.check_true("psi(perm) uses tree edges", || s.to_string(), w.letters().iter().all(|&e| ctx.tree().contains(e)));
    }
    for x in ctx.chords() {
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let gen = AGenerator::new(x.clone(), i, j);
                let expected = SemidirectElement::from_f(mu(&gen, n).expect("in range"));
                let got = ctx.phi(&ctx.psi_gen(&gen).expect("chord of the context"));
                report.check("phi(psi(x_ij))", || gen.to_string(), &expected, &got);
            }
        }
    }
    for e in ctx.graph().edge_ids() {
        let u = EdgeWord(vec![e]);
        let image = ctx.phi(&u);
        let back = ctx.psi(&image).expect("image lies in the semidirect product");
        report.check("psi(phi(u)) = u", || ctx.graph().label(e).to_string(), &image, &ctx.phi(&back));
        if ctx.tree().contains(e) {
            report.check("psi(phi(u)) literal", || ctx.graph().label(e).to_string(), &ctx.word_to_string(&u), &ctx.word_to_string(&back));
        }
    }
    report
}

/// The laws of the cycle words: `Φ(γ_a) = τ·x_{am}` and the product
/// identities between them.
pub fn check_gamma_laws(ctx: &Context) -> OracleReport {
    let mut report = OracleReport::new("gamma-laws");
    let n = ctx.n();
    for cyc in ctx.cycles() {
        let x = ctx.chord(cyc.chord);
        let tau = ctx.tau(cyc);
        let (first, last) = (cyc.global(1), cyc.global(cyc.m()));
        let gammas: Vec<EdgeWord> = (1..=n).map(|a| ctx.gamma(cyc, a)).collect();
        let phis: Vec<SemidirectElement> = gammas.iter().map(|w| ctx.phi(w)).collect();
        let gm = |a: Vertex| &phis[a - 1];
        for a in 1..=n {
            let expected = SemidirectElement::new(tau.clone(), mu(&AGenerator::new(x.clone(), a, last), n).expect("in range"))
                .expect("same degree");
            report.check("phi(gamma_a)", || format!("chord {x} a={a}"), &expected, gm(a));
            report.check(
                "gamma_j gamma_m = gamma_1 gamma_tau(j)",
                || format!("chord {x} j={a}"),
                &(gm(first) * gm(tau.apply(a))),
                &(gm(a) * gm(last)),
            );
            for b in 1..=n {
                report.check(
                    "gamma_j gamma_tau(i) = gamma_i gamma_tau(j)",
                    || format!("chord {x} i={a} j={b}"),
                    &(gm(a) * gm(tau.apply(b))),
                    &(gm(b) * gm(tau.apply(a))),
                );
            }
        }
        for i in 1..=cyc.m() {
            for j in 1..=cyc.m() {
                let (gi, gj) = (cyc.global(i), cyc.global(j));
                let (gi1, gj1) = (cyc.global(i - 1), cyc.global(j - 1));
                report.check(
                    "gamma_j gamma_(i-1) = gamma_i gamma_(j-1)",
                    || format!("chord {x} local i={i} j={j}"),
                    &(gm(gi) * gm(gj1)),
                    &(gm(gj) * gm(gi1)),
                );
            }
        }
    }
    report
}

/// The tilde map intertwines the tree action on the cycle words, and
/// conjugation permutes the kernel generators.
pub fn check_action_laws(ctx: &Context, samples: usize, seed: u64) -> OracleReport {
    let mut report = OracleReport::seeded("action-laws", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ctx.n();
    let tree = ctx.tree().tree_edges();
    if ctx.cycles().is_empty() || tree.is_empty() {
        return report;
    }
    for cyc in ctx.cycles() {
        let tau = ctx.tau(cyc);
        for u in ctx.graph().edge_ids() {
            let lhs = ctx.phi(&ctx.tilde(cyc, u)).perm;
            let p = perm_of_word(ctx.graph(), &EdgeWord(vec![u]));
            report.check("perm of tilde(u)", || ctx.graph().label(u).to_string(), &(&(&tau * &p) * &tau.inverse()), &lhs);
        }
    }
    for _ in 0..samples {
        let cyc = ctx.cycles().choose(&mut rng).expect("nonempty");
        let len = rng.gen_range(0..10);
        let sigma = random_word(&tree, len, &mut rng);
        let s = perm_of_word(ctx.graph(), &sigma);
        let a = rng.gen_range(1..=n);
        let lhs = ctx.phi(&ctx.tilde_word(cyc, &sigma)).inverse().mul(&ctx.phi(&ctx.gamma(cyc, a))).expect("same n").mul(&ctx.phi(&sigma)).expect("same n");
        report.check(
            "tilde(s)^-1 gamma_a s = gamma_s(a)",
            || format!("s={} a={a}", ctx.word_to_string(&sigma)),
            &ctx.phi(&ctx.gamma(cyc, s.apply(a))),
            &lhs,
        );
        let x = ctx.chord(cyc.chord);
        let gen = AGenerator::new(x, rng.gen_range(1..=n), rng.gen_range(1..=n));
        let phi_s = ctx.phi(&sigma);
        let conj = phi_s.conjugate(&ctx.phi(&ctx.psi_gen(&gen).expect("chord"))).expect("same n");
        report.check(
            "s^-1 psi(x_ij) s = psi(x_s(i)s(j))",
            || format!("s={} {gen}", ctx.word_to_string(&sigma)),
            &ctx.phi(&ctx.psi_gen(&act_a(&s, &gen)).expect("chord")),
            &conj,
        );
    }
    report
}

/// `Φ(ũ) = Φ(γ_c) Φ(u) Φ(γ_c)⁻¹` for every edge `u` and vertex `c` off it.
pub fn check_tilde_conjugation(ctx: &Context) -> OracleReport {
    let mut report = OracleReport::new("tilde-conjugation");
    for cyc in ctx.cycles() {
        for u in ctx.graph().edge_ids() {
            let edge = ctx.graph().edge(u);
            let tilde = ctx.phi(&ctx.tilde(cyc, u));
            let phi_u = ctx.phi(&EdgeWord(vec![u]));
            for c in (1..=ctx.n()).filter(|&c| !edge.touches(c)) {
                let gc = ctx.phi(&ctx.gamma(cyc, c));
                let got = gc.inverse().conjugate(&phi_u).expect("same n");
                report.check(
                    "tilde is conjugation by gamma_c",
                    || format!("chord {} u={} c={c}", ctx.graph().label(cyc.chord), edge.label),
                    &tilde,
                    &got,
                );
            }
        }
    }
    report
}

/// Tree case: the edge transpositions generate `S_n`, and a word is trivial
/// exactly when its permutation is.
pub fn check_tree_case(ctx: &Context, samples: usize, seed: u64) -> Result<OracleReport> {
    let mut report = OracleReport::seeded("tree-case", seed);
    let g = ctx.graph();
    let gens: Vec<Permutation> = g.edge_ids().map(|e| perm_of_word(g, &EdgeWord(vec![e]))).collect();
    let order = bfs_group_order(&gens)?;
    let factorial: usize = (1..=g.n()).product();
    report.check("group order", || format!("n={}", g.n()), &factorial, &order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    for _ in 0..samples {
        let len = 2 * rng.gen_range(0..8);
        let w = random_word(&ids, len, &mut rng);
        report.check(
            "trivial iff permutation trivial",
            || ctx.word_to_string(&w),
            &perm_of_word(g, &w).is_identity(),
            &ctx.is_trivial(&w).is_trivial(),
        );
    }
    Ok(report)
}

/// Words over a subgraph get the same verdict in the subgraph's own context
/// and in the full one. `sub` uses the vertex numbering and labels of the
/// full graph; its edges are matched by label.
pub fn parabolic_check(ctx: &Context, sub: &Graph, samples: usize, seed: u64) -> Result<OracleReport> {
    let labels: Vec<&str> = sub.edges().iter().map(|e| e.label.as_str()).collect();
    for e in sub.edges() {
        let id = ctx.graph().lookup(&e.label).map_err(|_| Error::InvalidSubgraph(format!("no edge {}", e.label)))?;
        if ctx.graph().edge(id).ends() != e.ends() {
            return Err(Error::InvalidSubgraph(format!("edge {} has different endpoints", e.label)));
        }
    }
    parabolic_check_labels(ctx, &labels, samples, seed)
}

pub fn parabolic_check_labels<S: AsRef<str>>(ctx: &Context, labels: &[S], samples: usize, seed: u64) -> Result<OracleReport> {
    if labels.is_empty() {
        return Err(Error::InvalidSubgraph("no edges".into()));
    }
    let big_ids = labels
        .iter()
        .map(|l| ctx.graph().lookup(l.as_ref()).map_err(|_| Error::InvalidSubgraph(format!("no edge {}", l.as_ref()))))
        .collect::<Result<Vec<_>>>()?;
    let (sub, _) = ctx.graph().edge_subgraph(&big_ids)?;
    if !sub.is_connected() {
        return Err(Error::InvalidSubgraph("subgraph is disconnected".into()));
    }
    if sub.is_k4() {
        return Err(Error::InvalidSubgraph("subgraph is K4".into()));
    }
    let small = Context::build(sub)?;
    let to_big = |w: &EdgeWord| EdgeWord(w.letters().iter().map(|e| big_ids[e.0]).collect());
    let mut report = OracleReport::seeded(format!("parabolic {}", labels.iter().map(|l| l.as_ref()).collect::<Vec<_>>().join(",")), seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<EdgeId> = small.graph().edge_ids().collect();
    let rels: Vec<EdgeWord> = relators_with_tree(small.graph(), small.tree(), Presentation::Coxy)?.edge_words().cloned().collect();
    for k in 0..samples {
        let w = match k % 4 {
            0 => random_word(&ids, rng.gen_range(0..24), &mut rng),
            1 => {
                // product of conjugated relators: trivial
                let mut w = EdgeWord::new();
                for _ in 0..rng.gen_range(1..4) {
                    let c = random_word(&ids, rng.gen_range(0..6), &mut rng);
                    w.extend(&c.inverse());
                    w.extend(rels.choose(&mut rng).expect("every edge gives u u"));
                    w.extend(&c);
                }
                w
            }
            2 => {
                // a word followed by a different word for its inverse: trivial
                let v = random_word(&ids, rng.gen_range(0..12), &mut rng);
                let back = small.psi(&small.phi(&v).inverse())?;
                v.concat(&back)
            }
            _ => {
                // kernel elements, trivial only by accident
                let chords = small.chords();
                if chords.is_empty() {
                    let v = random_word(&ids, rng.gen_range(0..12), &mut rng);
                    v.concat(&small.psi_perm(&small.phi(&v).perm.inverse()))
                } else {
                    let mut w = EdgeWord::new();
                    for _ in 0..rng.gen_range(1..4) {
                        let x = chords.choose(&mut rng).expect("nonempty").clone();
                        let n = small.n();
                        let gen = AGenerator::new(x, rng.gen_range(1..=n), rng.gen_range(1..=n));
                        w.extend(&small.psi_gen(&gen)?);
                    }
                    w
                }
            }
        };
        let here = small.is_trivial(&w);
        let there = ctx.is_trivial(&to_big(&w));
        report.check(
            "same verdict in subgraph and graph",
            || small.word_to_string(&w),
            &here.image_trivial(),
            &there.image_trivial(),
        );
    }
    Ok(report)
}

/// Exact isomorphism test by trying every vertex bijection.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (1..=g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (1..=h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![0; g.n() + 1];
    let mut used = vec![false; h.n() + 1];
    extend_iso(g, h, 1, &mut map, &mut used)
}

fn extend_iso(g: &Graph, h: &Graph, v: Vertex, map: &mut [Vertex], used: &mut [bool]) -> bool {
    if v > g.n() {
        return true;
    }
    for w in 1..=h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        if (1..v).all(|u| g.adjacent(u, v) == h.adjacent(map[u], w)) {
            map[v] = w;
            used[w] = true;
            if extend_iso(g, h, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

/// Looks for an induced claw among all 4-vertex subsets.
pub fn fork_by_exhaustive_search(g: &Graph) -> Option<[Vertex; 4]> {
    let n = g.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let vs = [a, b, c, d];
                    let mut deg = [0usize; 4];
                    let mut edges = 0;
                    for p in 0..4 {
                        for q in p + 1..4 {
                            if g.adjacent(vs[p], vs[q]) {
                                deg[p] += 1;
                                deg[q] += 1;
                                edges += 1;
                            }
                        }
                    }
                    if edges == 3 && deg.contains(&3) {
                        return Some(vs);
                    }
                }
            }
        }
    }
    None
}

/// The fixed test corpus: name and context.
pub fn corpus() -> Vec<(String, Context)> {
    let mut out = Vec::new();
    for n in 2..=7 {
        out.push((format!("P{n}"), Context::build(named::path(n)).expect("connected")));
    }
    out.push(("Y".into(), Context::build(named::star(3)).expect("connected")));
    for n in 3..=8 {
        out.push((format!("C{n}"), Context::build(named::cycle(n)).expect("connected")));
    }
    out.push(("K4-e".into(), Context::build(named::k4_minus_edge()).expect("connected")));
    out.push((
        "K4".into(),
        Context::with_tree_labels(named::k4_labelled(), &named::K4_TREE).expect("valid tree"),
    ));
    out.push((
        "sixpts".into(),
        Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE).expect("valid tree"),
    ));
    let ts = tsaranov_presentation(3, 3, 3).expect("valid parameters");
    out.push(("tsaranov(3,3,3)".into(), Context::build(ts.graph).expect("connected")));
    out.push(("random(7,3)".into(), Context::build(named::random_connected(7, 3, 7)).expect("connected")));
    out
}

/// Every check that applies to this graph.
pub fn verify_all(ctx: &Context, seed: u64, trials: usize) -> Vec<OracleReport> {
    let mut out = vec![
        check_relators(ctx),
        check_perm_consistency(ctx, trials, seed),
        check_round_trips(ctx, trials.min(200), seed),
        check_gamma_laws(ctx),
        check_action_laws(ctx, trials, seed),
        check_kernel_rank(ctx),
    ];
    if !ctx.is_k4() {
        out.push(check_tilde_conjugation(ctx));
    }
    if ctx.t() == 0 && ctx.n() <= 9 {
        out.push(check_tree_case(ctx, trials, seed).expect("order within the guard"));
    }
    let tree_labels: Vec<&str> = ctx.tree().tree_edges().iter().map(|&e| ctx.graph().label(e)).collect();
    if !tree_labels.is_empty() {
        out.push(parabolic_check_labels(ctx, &tree_labels, trials, seed).expect("tree is a valid subgraph"));
    }
    for cyc in ctx.cycles() {
        let mut labels: Vec<&str> = cyc.tree_edges().iter().map(|&e| ctx.graph().label(e)).collect();
        labels.push(ctx.graph().label(cyc.chord));
        out.push(parabolic_check_labels(ctx, &labels, trials, seed).expect("cycle is a valid subgraph"));
    }
    if ctx.t() >= 1 && ctx.n() >= 4 {
        out.push(identity_suite(seed, ctx.n(), ctx.t(), trials).expect("parameters checked"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        let y = named::star(3);
        let gens: Vec<_> = y.edge_ids().map(|e| perm_of_word(&y, &EdgeWord(vec![e]))).collect();
        assert_eq!(bfs_group_order(&gens).unwrap(), 24);
        let p5 = named::path(5);
        let gens: Vec<_> = p5.edge_ids().map(|e| perm_of_word(&p5, &EdgeWord(vec![e]))).collect();
        assert_eq!(bfs_group_order(&gens).unwrap(), 120);
        assert_eq!(bfs_group_order(&[Permutation::transposition(4, 1, 3)]).unwrap(), 2);
        let big: Vec<_> = (1..10).map(|i| Permutation::transposition(10, i, i + 1)).collect();
        assert!(matches!(bfs_group_order(&big), Err(Error::OrderGuard { .. })));
    }

    #[test]
    fn ranks() {
        let v = |pairs: &[(&str, Vertex, i64)]| -> SlotVector {
            pairs.iter().map(|&(c, s, e)| ((Chord::new(c), s), e)).collect()
        };
        assert_eq!(ab_rank(&[]), 0);
        assert_eq!(ab_rank(&[v(&[("x", 1, 2)]), v(&[("x", 1, 3)])]), 1);
        assert_eq!(ab_rank(&[v(&[("x", 1, 1), ("x", 2, -1)]), v(&[("x", 2, 1), ("x", 3, -1)]), v(&[("x", 1, 1), ("x", 3, -1)])]), 2);
        let six = Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE).unwrap();
        assert_eq!(kernel_rank(&six).unwrap(), 15);
        assert_eq!(kernel_rank(&Context::build(named::cycle(4)).unwrap()).unwrap(), 3);
        assert_eq!(kernel_rank(&Context::build(named::path(4)).unwrap()).unwrap(), 0);
    }

    #[test]
    fn negative_control() {
        let ctx = Context::build(named::cycle(4)).unwrap();
        assert!(check_relators(&ctx).passed());
        assert!(!check_relators_with(&ctx, Convention::FlippedComposition).passed());
        let single = Context::build(named::path(2)).unwrap();
        let r = check_relators(&single);
        assert!(r.passed());
        assert_eq!(r.checks_run, 2);
    }

    #[test]
    fn identity_suite_is_deterministic() {
        let a = identity_suite(3, 5, 2, 50).unwrap();
        assert!(a.passed(), "{a}");
        assert_eq!(a, identity_suite(3, 5, 2, 50).unwrap());
        assert!(identity_suite(1, 3, 2, 1).is_err());
        assert!(identity_suite(1, 6, 1, 100).unwrap().passed());
    }

    #[test]
    fn single_edge_parabolic() {
        let ctx = Context::build(named::cycle(5)).unwrap();
        let r = parabolic_check_labels(&ctx, &["a"], 100, 4).unwrap();
        assert!(r.passed(), "{r}");
        assert!(parabolic_check_labels(&ctx, &["a", "c"], 10, 4).is_err());
    }

    #[test]
    fn isomorphism_oracle() {
        assert!(isomorphic(&named::cycle(5), &Graph::parse("1 3 a\n3 5 b\n5 2 c\n2 4 d\n4 1 e").unwrap()));
        assert!(!isomorphic(&named::path(4), &named::star(3)));
    }

    #[test]
    fn claw_search() {
        assert!(fork_by_exhaustive_search(&named::star(3)).is_some());
        assert!(fork_by_exhaustive_search(&named::cycle(3)).is_none());
        assert!(fork_by_exhaustive_search(&named::complete(4)).is_none());
    }
}
