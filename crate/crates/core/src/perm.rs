//! Permutations of `1..=n`.
//!
//! Products are read left to right: in `s * t` the left factor acts first,
//! so `(s * t)(a) = t(s(a))`. Edge words evaluate to permutations under the
//! same rule.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::graph::{EdgeWord, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // images[i - 1] = σ(i)
    images: Vec<Vertex>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image sequence `[σ(1), ..., σ(n)]`.
    pub fn from_images(images: Vec<Vertex>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, a: Vertex, b: Vertex) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]`.
    pub fn cycle(n: usize, c: &[Vertex]) -> Self {
        let mut p = Self::identity(n);
        for (k, &v) in c.iter().enumerate() {
            p.images[v - 1] = c[(k + 1) % c.len()];
        }
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Vertex] {
        &self.images
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.images[v - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut v = self.apply(start);
            while v != start {
                seen[v] = true;
                c.push(v);
                v = self.apply(v);
            }
            out.push(c);
        }
        out
    }

    /// Parses cycle notation such as `(1 3 2)(4 5)`; `()` is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut p = Self::identity(n);
        let mut moved = vec![false; n + 1];
        let mut rest = text.trim();
        let bad = || Error::Parse(format!("bad cycle notation {text:?}"));
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(bad)?;
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let points = rest[1..inner_end]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<Vertex>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            for &v in &points {
                if v == 0 || v > n || moved[v] {
                    return Err(bad());
                }
                moved[v] = true;
            }
            if points.len() >= 2 {
                p = p.compose(&Self::cycle(n, &points))?;
            }
            rest = rest[inner_end + 1..].trim_start();
        }
        Ok(p)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutations of different degree")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// The permutation of an edge word: the left-to-right product of the
/// transpositions of its letters.
pub fn perm_of_word(g: &Graph, w: &EdgeWord) -> Permutation {
    let mut images: Vec<Vertex> = (1..=g.n()).collect();
    // images[i] tracks where i+1 has been sent so far; applying (a b) after
    // the current product relabels the values a and b.
    let mut position = images.clone(); // position[v-1] = preimage of v
    for &e in w.letters() {
        let edge = g.edge(e);
        let (a, b) = (edge.a, edge.b);
        let (pa, pb) = (position[a - 1], position[b - 1]);
        images.swap(pa - 1, pb - 1);
        position.swap(a - 1, b - 1);
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
        let mut images: Vec<Vertex> = (1..=n).collect();
        images.shuffle(rng);
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn compose_convention() {
        let s = Permutation::transposition(3, 1, 2);
        let t = Permutation::transposition(3, 2, 3);
        let st = s.compose(&t).unwrap();
        // 1 -> 3, 3 -> 2, 2 -> 1
        assert_eq!(st.images(), &[3, 1, 2]);
        assert_eq!(st.to_string(), "(1 3 2)");
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&st).unwrap(), st);
        assert!(matches!(
            id.compose(&Permutation::identity(4)),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_and_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..9);
            let s = random_perm(n, &mut rng);
            assert!((&s * &s.inverse()).is_identity());
            assert!((&s.inverse() * &s).is_identity());
        }
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 3]).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let p = Permutation::from_images(vec![3, 1, 2, 5, 4]).unwrap();
        assert_eq!(p.to_string(), "(1 3 2)(4 5)");
        assert_eq!(Permutation::parse_cycles(5, "(1 3 2)(4 5)").unwrap(), p);
        assert_eq!(Permutation::parse_cycles(5, "()").unwrap(), Permutation::identity(5));
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
    }

    #[test]
    fn word_permutations() {
        let tri = named::cycle(3);
        assert!(perm_of_word(&tri, &EdgeWord::new()).is_identity());
        // a = (1 2), c = (1 3): composing by hand, a c a sends
        // 2 -> 1 -> 3 -> 3 and 3 -> 3 -> 1 -> 2, fixing 1
        let w = tri.parse_word("a c a").unwrap();
        assert_eq!(perm_of_word(&tri, &w), Permutation::transposition(3, 2, 3));
    }

    #[test]
    fn word_evaluation_matches_product() {
        let g = named::random_connected(7, 3, 11);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let len = rng.gen_range(0..15);
            let w = EdgeWord((0..len).map(|_| crate::graph::EdgeId(rng.gen_range(0..g.edge_count()))).collect());
            let mut expect = Permutation::identity(g.n());
            for &e in w.letters() {
                let edge = g.edge(e);
                expect = &expect * &Permutation::transposition(g.n(), edge.a, edge.b);
            }
            assert_eq!(perm_of_word(&g, &w), expect);
            assert_eq!(perm_of_word(&g, &w.inverse()), expect.inverse());
        }
    }
}
