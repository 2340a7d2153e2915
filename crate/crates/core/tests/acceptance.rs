//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxcover::coxy::{Classification, Context};
use coxcover::graph::{dual_graph, forbidden_fork, named, Edge, EdgeId, EdgeWord, Graph};
use coxcover::oracle::{self, OracleReport};
use coxcover::presentation::{mu, tsaranov_presentation, AGenerator};
use coxcover::{Chord, Permutation, SemidirectElement};

const SEED: u64 = 20240601;

struct Outcome {
    checks: usize,
    problems: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            problems: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.problems.push(what());
        }
    }

    fn report(&mut self, name: &str, r: OracleReport) {
        self.checks += r.checks_run;
        if !r.passed() {
            self.problems.push(format!("{name}: {r}"));
        }
    }
}

fn criterion(id: usize, title: &str, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = body();
    let ok = out.problems.is_empty() && out.checks > 0;
    let status = if ok { "PASS" } else { "FAIL" };
    println!(
        "{status} {id:>2} {title} ({} checks, {:.2}s)",
        out.checks,
        start.elapsed().as_secs_f64()
    );
    for p in out.problems.iter().take(5) {
        println!("      {p}");
    }
    ok
}

fn relator_soundness() -> Outcome {
    let start = Instant::now();
    let mut out = Outcome::new();
    for (name, ctx) in oracle::corpus() {
        out.report(&name, oracle::check_relators(&ctx));
    }
    let secs = start.elapsed().as_secs_f64();
    out.expect(secs < 5.0, || format!("took {secs:.2}s, limit 5s"));
    out
}

fn tree_case() -> Outcome {
    let mut out = Outcome::new();
    let mut trees: Vec<(String, Graph)> = (2..=7).map(|n| (format!("P{n}"), named::path(n))).collect();
    trees.push(("Y".into(), named::star(3)));
    for (name, g) in trees {
        let ctx = Context::build(g).expect("connected");
        out.report(&name, oracle::check_tree_case(&ctx, 500, SEED).expect("order within guard"));
    }
    out
}

fn cycle_case() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 3..=8 {
        let ctx = Context::build(named::cycle(n)).expect("connected");
        let ids: Vec<EdgeId> = ctx.graph().edge_ids().collect();
        let mut witnesses = Vec::new();
        for _ in 0..40 {
            let w = EdgeWord((0..rng.gen_range(0..16)).map(|_| ids[rng.gen_range(0..ids.len())]).collect());
            let closed = w.concat(&ctx.psi_perm(&ctx.phi(&w).perm.inverse()));
            let (inside, f) = ctx.in_kernel(&closed);
            out.expect(inside, || format!("C{n}: closed word left the kernel"));
            out.expect(
                f.slots().iter().all(|s| s.letters().iter().all(|l| l.chord == f.slots().iter().flat_map(|s| s.letters()).next().unwrap().chord)),
                || format!("C{n}: more than one chord letter in {f}"),
            );
            witnesses.push(f);
        }
        for a in &witnesses {
            for b in &witnesses {
                out.expect(a.commutes_with(b).unwrap(), || format!("C{n}: {a} and {b} do not commute"));
            }
        }
        let rank = oracle::kernel_rank(&ctx).expect("chords of the context");
        out.expect(rank == n - 1, || format!("C{n}: kernel rank {rank}, expected {}", n - 1));
    }
    out
}

fn worked_example() -> Outcome {
    let mut out = Outcome::new();
    let ctx = Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE).expect("valid tree");
    for (word, chord, i, j) in [("c e c x", "x", 1, 4), ("b d b y", "y", 3, 6), ("c a d a c z", "z", 5, 6)] {
        let w = ctx.parse_word(word).expect("labels exist");
        let expected = SemidirectElement::new(
            Permutation::identity(6),
            mu(&AGenerator::new(Chord::new(chord), i, j), 6).expect("in range"),
        )
        .expect("same degree");
        let got = ctx.phi(&w);
        out.expect(got == expected, || format!("{word}: expected {expected}, got {got}"));
    }
    out
}

fn round_trips() -> Outcome {
    let mut out = Outcome::new();
    for (name, ctx) in oracle::corpus() {
        out.report(&name, oracle::check_round_trips(&ctx, 200, SEED));
    }
    out
}

fn gamma_laws() -> Outcome {
    let mut out = Outcome::new();
    for (name, ctx) in oracle::corpus() {
        out.report(&name, oracle::check_gamma_laws(&ctx));
    }
    out
}

fn identity_suite() -> Outcome {
    let mut out = Outcome::new();
    for (n, t) in [(5, 3), (6, 3), (4, 2)] {
        let r = oracle::identity_suite(SEED, n, t, 1000).expect("valid parameters");
        out.report(&format!("n={n} t={t}"), r);
    }
    out
}

fn structure_reports() -> Outcome {
    let mut out = Outcome::new();
    let c6 = Context::build(named::cycle(6)).unwrap().structure_report();
    out.expect(c6.classification == Classification::VirtuallyAbelian, || format!("C6: {c6}"));
    out.expect(c6.kernel_ab_rank == 5, || format!("C6 rank {}", c6.kernel_ab_rank));
    out.expect(c6.group() == "S_6 ⋉ Z^5", || format!("C6 group {}", c6.group()));
    let y = Context::build(named::star(3)).unwrap().structure_report();
    out.expect(y.classification == Classification::SymmetricGroup, || format!("Y: {y}"));
    out.expect(y.group() == "S_4", || format!("Y group {}", y.group()));
    let six = Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE).unwrap().structure_report();
    out.expect(six.classification == Classification::ContainsFreeSubgroup, || format!("sixpts: {six}"));
    out.expect(six.kernel_ab_rank == 15 && six.t * (six.n - 1) == 15, || format!("sixpts rank {}", six.kernel_ab_rank));
    out.expect(six.flags.word_problem_exact, || "sixpts should have an exact word problem".into());
    let k4 = Context::build(named::complete(4)).unwrap().structure_report();
    out.expect(k4.flags.is_k4 && !k4.flags.word_problem_exact, || format!("K4 flags {:?}", k4.flags));
    out
}

fn parabolic() -> Outcome {
    let mut out = Outcome::new();
    for (name, ctx) in oracle::corpus() {
        let g = ctx.graph();
        let mut subs: Vec<Vec<String>> = Vec::new();
        let tree: Vec<String> = ctx.tree().tree_edges().iter().map(|&e| g.label(e).to_string()).collect();
        if tree.len() >= 2 {
            subs.push(tree.clone());
        }
        for cyc in ctx.cycles() {
            let mut l: Vec<String> = cyc.tree_edges().iter().map(|&e| g.label(e).to_string()).collect();
            l.push(g.label(cyc.chord).to_string());
            subs.push(l);
        }
        if ctx.t() >= 2 && !ctx.is_k4() {
            let mut l = tree.clone();
            l.push(g.label(ctx.cycles()[0].chord).to_string());
            l.push(g.label(ctx.cycles()[1].chord).to_string());
            subs.push(l);
        }
        for (k, labels) in subs.iter().enumerate() {
            let r = oracle::parabolic_check_labels(&ctx, labels, 500, SEED + k as u64).expect("connected subgraph");
            out.report(&name, r);
        }
    }
    out
}

fn complement_plus_point(a: usize, b: usize, t: usize) -> Graph {
    // K_{a,b} minus t disjoint edges, plus an isolated point, complemented
    let n = a + b + 1;
    let bipartite = |p: usize, q: usize| {
        let (p, q) = (p.min(q), p.max(q));
        p <= a && q > a && q <= a + b && !(p <= t && q == a + p)
    };
    let mut edges = Vec::new();
    for p in 1..=n {
        for q in p + 1..=n {
            if !bipartite(p, q) {
                edges.push(Edge::new(format!("e{p}_{q}"), p, q));
            }
        }
    }
    Graph::with_vertices(n, edges).unwrap()
}

fn tsaranov() -> Outcome {
    let mut out = Outcome::new();
    let r = tsaranov_presentation(3, 3, 3).expect("valid parameters");
    out.expect(r.n == 5, || format!("n = {}", r.n));
    out.expect(r.t == 3, || format!("t = {}", r.t));
    out.expect(r.relator_family == "x_i^2 x_j^-2", || format!("relators {}", r.relator_family));
    for (a, b, t) in [(3, 3, 3), (2, 2, 1), (3, 2, 1), (2, 2, 0)] {
        let r = tsaranov_presentation(a, b, t).unwrap();
        out.expect(
            oracle::isomorphic(&dual_graph(&r.graph), &complement_plus_point(a, b, t)),
            || format!("({a},{b},{t}): dual graph is not the complement of the signed graph plus a point"),
        );
    }
    out
}

fn dual_graphs() -> Outcome {
    let mut out = Outcome::new();
    out.expect(oracle::isomorphic(&dual_graph(&named::star(3)), &named::cycle(3)), || "dual(Y) is not a triangle".into());
    for n in 3..=8 {
        let c = named::cycle(n);
        out.expect(oracle::isomorphic(&dual_graph(&c), &c), || format!("dual(C{n}) is not C{n}"));
    }
    // every graph with at most five edges on seven vertices
    let pairs: Vec<(usize, usize)> = (1..=7).flat_map(|a| (a + 1..=7).map(move |b| (a, b))).collect();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((next, chosen)) = stack.pop() {
        let edges = chosen
            .iter()
            .enumerate()
            .map(|(k, &p)| Edge::new(format!("e{k}"), pairs[p].0, pairs[p].1))
            .collect();
        let g = Graph::with_vertices(7, edges).unwrap();
        let fast = forbidden_fork(&g).is_some();
        let slow = oracle::fork_by_exhaustive_search(&g).is_some();
        out.expect(fast == slow, || format!("fork detection disagrees on {g}"));
        if chosen.len() < 5 {
            for p in next..pairs.len() {
                let mut c = chosen.clone();
                c.push(p);
                stack.push((p + 1, c));
            }
        }
    }
    for (name, ctx) in oracle::corpus() {
        out.expect(forbidden_fork(&dual_graph(ctx.graph())).is_none(), || format!("dual of {name} has a fork"));
    }
    out
}

fn main() -> ExitCode {
    let start = Instant::now();
    let results = [
        criterion(1, "relator soundness", relator_soundness),
        criterion(2, "tree case", tree_case),
        criterion(3, "cycle case", cycle_case),
        criterion(4, "worked example", worked_example),
        criterion(5, "round trips", round_trips),
        criterion(6, "gamma laws", gamma_laws),
        criterion(7, "identity suite", identity_suite),
        criterion(8, "structure reports", structure_reports),
        criterion(9, "parabolic consistency", parabolic),
        criterion(10, "tsaranov", tsaranov),
        criterion(11, "dual graph", dual_graphs),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!(
        "{passed}/{} criteria passed in {:.2}s",
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
