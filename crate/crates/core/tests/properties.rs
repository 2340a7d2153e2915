use proptest::prelude::*;

use coxcover::freeprod::Convention;
use coxcover::graph::named;
use coxcover::{
    perm_of_word, Chord, Context, EdgeId, EdgeWord, FStarElement, Letter, Permutation, ReducedWord,
    SemidirectElement, Verdict,
};

const CHORDS: [&str; 3] = ["x", "y", "z"];

fn letter() -> impl Strategy<Value = Letter> {
    (0..CHORDS.len(), any::<bool>()).prop_map(|(c, inv)| Letter::new(Chord::new(CHORDS[c]), inv))
}

fn word() -> impl Strategy<Value = ReducedWord> {
    prop::collection::vec(letter(), 0..12).prop_map(ReducedWord::reduce)
}

fn fstar(n: usize) -> impl Strategy<Value = FStarElement> {
    prop::collection::vec(word(), n).prop_map(FStarElement::from_slots)
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn element(n: usize) -> impl Strategy<Value = SemidirectElement> {
    (perm(n), fstar(n)).prop_map(|(p, f)| SemidirectElement::new(p, f).unwrap())
}

fn sixpts() -> Context {
    Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE).unwrap()
}

fn edge_word(edges: usize) -> impl Strategy<Value = EdgeWord> {
    prop::collection::vec(0..edges, 0..20).prop_map(|v| EdgeWord(v.into_iter().map(EdgeId).collect()))
}

proptest! {
    #[test]
    fn reduce_is_idempotent(w in word()) {
        prop_assert_eq!(ReducedWord::reduce(w.letters().iter().cloned()), w);
    }

    #[test]
    fn word_times_inverse_is_identity(w in word()) {
        prop_assert!(w.mul(&w.inverse()).is_empty());
    }

    #[test]
    fn free_product_is_associative(a in word(), b in word(), c in word()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn abelianization_is_a_homomorphism(f in fstar(5), g in fstar(5)) {
        prop_assert_eq!(f.mul(&g).unwrap().ab(), f.ab() + g.ab());
    }

    #[test]
    fn action_is_a_right_action(f in fstar(5), s in perm(5), t in perm(5)) {
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(f.act(&s).unwrap().act(&t).unwrap(), f.act(&st).unwrap());
    }

    #[test]
    fn action_respects_products(f in fstar(5), g in fstar(5), s in perm(5)) {
        let lhs = f.mul(&g).unwrap().act(&s).unwrap();
        let rhs = f.act(&s).unwrap().mul(&g.act(&s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn semidirect_product_is_associative(a in element(4), b in element(4), c in element(4)) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn semidirect_inverse(a in element(4)) {
        prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().mul(&a).unwrap().is_identity());
    }

    #[test]
    fn display_parses_back(a in element(5)) {
        prop_assert_eq!(SemidirectElement::parse(5, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn perm_of_word_is_a_homomorphism(u in edge_word(8), v in edge_word(8)) {
        let g = named::sixpts();
        let lhs = perm_of_word(&g, &u.concat(&v));
        let rhs = perm_of_word(&g, &u).compose(&perm_of_word(&g, &v)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_is_a_homomorphism(u in edge_word(8), v in edge_word(8)) {
        let ctx = sixpts();
        prop_assert_eq!(ctx.phi(&u.concat(&v)), ctx.phi(&u).mul(&ctx.phi(&v)).unwrap());
    }

    #[test]
    fn phi_projects_to_the_permutation(u in edge_word(8)) {
        let ctx = sixpts();
        prop_assert_eq!(ctx.phi(&u).perm, perm_of_word(ctx.graph(), &u));
    }

    #[test]
    fn normal_form_word_represents_the_image(u in edge_word(8)) {
        let ctx = sixpts();
        let back = ctx.psi(&ctx.phi(&u)).unwrap();
        prop_assert_eq!(ctx.phi(&back), ctx.phi(&u));
        prop_assert_eq!(ctx.equal(&u, &back), Verdict::Trivial);
    }

    #[test]
    fn word_times_inverse_is_trivial(u in edge_word(8)) {
        let ctx = sixpts();
        prop_assert_eq!(ctx.is_trivial(&u.concat(&u.inverse())), Verdict::Trivial);
    }

    #[test]
    fn flipped_convention_agrees_on_permutations(u in edge_word(8)) {
        let ctx = sixpts();
        prop_assert_eq!(ctx.phi_with(&u, Convention::FlippedComposition).perm.is_identity(), ctx.phi(&u).perm.is_identity());
    }
}

#[test]
fn flipped_convention_breaks_a_relator() {
    let ctx = Context::build(named::cycle(3)).unwrap();
    let report = coxcover::oracle::check_relators_with(&ctx, Convention::FlippedComposition);
    assert!(!report.passed());
}
