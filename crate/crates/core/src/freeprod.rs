//! Arithmetic in the direct power of a free group and in its semidirect
//! product with the symmetric group.
//!
//! An [`FStarElement`] has one freely reduced word per vertex; slot `i` holds
//! the letters `x_i`. Words in different slots commute. A permutation `σ`
//! acts on the right by `σ⁻¹ x_i σ = x_{σ(i)}`: the word in slot `i` moves to
//! slot `σ(i)`. With that action the semidirect product multiplies as
//!
//! ```text
//! (σ₁, f₁)(σ₂, f₂) = (σ₁σ₂, σ₂·f₁ · f₂)
//! ```
//!
//! where `σ₂·f₁` is [`FStarElement::act`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::perm::Permutation;

/// A letter of the chord alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord(Arc<str>);

impl Chord {
    pub fn new(label: &str) -> Self {
        Chord(Arc::from(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Chord {
    fn from(s: &str) -> Self {
        Chord::new(s)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub chord: Chord,
    pub inv: bool,
}

impl Letter {
    pub fn new(chord: Chord, inv: bool) -> Self {
        Letter { chord, inv }
    }

    pub fn pos(chord: &Chord) -> Self {
        Letter::new(chord.clone(), false)
    }

    pub fn neg(chord: &Chord) -> Self {
        Letter::new(chord.clone(), true)
    }

    pub fn inverse(&self) -> Self {
        Letter::new(self.chord.clone(), !self.inv)
    }

    pub fn exponent(&self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.chord == other.chord && self.inv != other.inv
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}^-1", self.chord)
        } else {
            write!(f, "{}", self.chord)
        }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord(Vec::new())
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in raw {
            if stack.last().is_some_and(|top| top.cancels(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        ReducedWord(stack)
    }

    pub fn letter(l: Letter) -> Self {
        ReducedWord(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &ReducedWord) -> ReducedWord {
        let common = self
            .0
            .iter()
            .rev()
            .zip(other.0.iter())
            .take_while(|(a, b)| a.cancels(b))
            .count();
        let mut letters = self.0[..self.0.len() - common].to_vec();
        letters.extend_from_slice(&other.0[common..]);
        ReducedWord(letters)
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord(self.0.iter().rev().map(Letter::inverse).collect())
    }

    pub fn exponent_sums(&self) -> BTreeMap<Chord, i64> {
        let mut sums = BTreeMap::new();
        for l in &self.0 {
            *sums.entry(l.chord.clone()).or_insert(0) += l.exponent();
        }
        sums.retain(|_, v| *v != 0);
        sums
    }

    /// Deletes every occurrence of `chord` and reduces.
    pub fn erase(&self, chord: &Chord) -> ReducedWord {
        ReducedWord::reduce(self.0.iter().filter(|l| &l.chord != chord).cloned())
    }

    fn parse(text: &str) -> Result<ReducedWord> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(ReducedWord::identity());
        }
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let (name, inv) = match tok.strip_suffix("^-1") {
                    Some(name) => (name, true),
                    None => (tok, false),
                };
                if !crate::graph::valid_label(name) {
                    return Err(Error::Parse(format!("bad letter {tok:?}")));
                }
                Ok(Letter::new(Chord::new(name), inv))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ReducedWord::reduce(letters))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Exponent sums per chord, summed over all slots.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AbVector(pub BTreeMap<Chord, i64>);

impl AbVector {
    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&v| v == 0)
    }

    pub fn get(&self, chord: &Chord) -> i64 {
        self.0.get(chord).copied().unwrap_or(0)
    }
}

impl Add for AbVector {
    type Output = AbVector;

    fn add(mut self, rhs: AbVector) -> AbVector {
        for (k, v) in rhs.0 {
            *self.0.entry(k).or_insert(0) += v;
        }
        self.0.retain(|_, v| *v != 0);
        self
    }
}

impl Neg for AbVector {
    type Output = AbVector;

    fn neg(self) -> AbVector {
        AbVector(self.0.into_iter().map(|(k, v)| (k, -v)).collect())
    }
}

impl fmt::Display for AbVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An element of `F_t × ... × F_t` (`n` factors).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FStarElement {
    slots: Vec<ReducedWord>,
}

impl FStarElement {
    pub fn identity(n: usize) -> Self {
        FStarElement {
            slots: vec![ReducedWord::identity(); n],
        }
    }

    pub fn from_slots(slots: Vec<ReducedWord>) -> Self {
        FStarElement { slots }
    }

    /// The single letter `l` placed in slot `i` (1-based).
    pub fn single(n: usize, i: Vertex, l: Letter) -> Self {
        let mut f = Self::identity(n);
        f.slots[i - 1] = ReducedWord::letter(l);
        f
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, i: Vertex) -> &ReducedWord {
        &self.slots[i - 1]
    }

    pub fn slots(&self) -> &[ReducedWord] {
        &self.slots
    }

    pub fn is_identity(&self) -> bool {
        self.slots.iter().all(ReducedWord::is_empty)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            })
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FStarElement {
            slots: self
                .slots
                .iter()
                .zip(&other.slots)
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        FStarElement {
            slots: self.slots.iter().map(ReducedWord::inverse).collect(),
        }
    }

    pub fn ab(&self) -> AbVector {
        let mut total = AbVector::default();
        for w in &self.slots {
            total = total + AbVector(w.exponent_sums());
        }
        total
    }

    /// Membership in `F_{t,n}`, the kernel of [`FStarElement::ab`].
    pub fn in_ftn(&self) -> bool {
        self.ab().is_zero()
    }

    /// Exponent sums per `(chord, slot)`.
    pub fn slot_exponents(&self) -> BTreeMap<(Chord, Vertex), i64> {
        let mut out = BTreeMap::new();
        for (i, w) in self.slots.iter().enumerate() {
            for (c, v) in w.exponent_sums() {
                out.insert((c, i + 1), v);
            }
        }
        out
    }

    /// The right action of `σ`: slot `i` moves to slot `σ(i)`.
    pub fn act(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: sigma.n(),
                right: self.n(),
            });
        }
        let mut slots = vec![ReducedWord::identity(); self.n()];
        for (i, w) in self.slots.iter().enumerate() {
            slots[sigma.apply(i + 1) - 1] = w.clone();
        }
        Ok(FStarElement { slots })
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    pub fn erase(&self, chord: &Chord) -> Self {
        FStarElement {
            slots: self.slots.iter().map(|w| w.erase(chord)).collect(),
        }
    }

    /// Parses `1` or a list such as `1: x, 4: x^-1`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut f = Self::identity(n);
        if text == "1" || text.is_empty() {
            return Ok(f);
        }
        for part in text.split(',') {
            let (slot, word) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `slot: word`, got {part:?}")))?;
            let slot: Vertex = slot
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad slot {slot:?}")))?;
            if slot == 0 || slot > n {
                return Err(Error::VertexOutOfRange { vertex: slot, n });
            }
            f.slots[slot - 1] = f.slots[slot - 1].mul(&ReducedWord::parse(word)?);
        }
        Ok(f)
    }
}

impl fmt::Display for FStarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_empty())
            .map(|(i, w)| format!("{}: {}", i + 1, w))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// How the semidirect product combines permutations. Only
/// [`Convention::RightAction`] gives the cover group; the flipped variant
/// reads products right to left, both in the permutation part and in the
/// choice of acting factor. Oracle harnesses use it to confirm they detect a
/// wrong convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    RightAction,
    FlippedComposition,
}

/// An element `σ·f` of `S_n ⋉ F★`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemidirectElement {
    pub perm: Permutation,
    pub f: FStarElement,
}

impl SemidirectElement {
    pub fn new(perm: Permutation, f: FStarElement) -> Result<Self> {
        if perm.n() != f.n() {
            return Err(Error::SizeMismatch {
                left: perm.n(),
                right: f.n(),
            });
        }
        Ok(SemidirectElement { perm, f })
    }

    pub fn identity(n: usize) -> Self {
        SemidirectElement {
            perm: Permutation::identity(n),
            f: FStarElement::identity(n),
        }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        let n = perm.n();
        SemidirectElement {
            perm,
            f: FStarElement::identity(n),
        }
    }

    pub fn from_f(f: FStarElement) -> Self {
        SemidirectElement {
            perm: Permutation::identity(f.n()),
            f,
        }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.f.is_identity()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, Convention::RightAction)
    }

    pub fn mul_with(&self, other: &Self, convention: Convention) -> Result<Self> {
        let (perm, acting) = match convention {
            Convention::RightAction => (self.perm.compose(&other.perm)?, &other.perm),
            Convention::FlippedComposition => (other.perm.compose(&self.perm)?, &self.perm),
        };
        let f = self.f.act(acting)?.mul(&other.f)?;
        Ok(SemidirectElement { perm, f })
    }

    pub fn inverse(&self) -> Self {
        let perm = self.perm.inverse();
        let f = self.f.inverse().act(&perm).expect("sizes agree");
        SemidirectElement { perm, f }
    }

    /// `self⁻¹ · other · self`.
    pub fn conjugate(&self, other: &Self) -> Result<Self> {
        self.inverse().mul(other)?.mul(self)
    }

    /// Parses the `perm | f` display form.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let (p, f) = text
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected `perm | f`, got {text:?}")))?;
        Self::new(Permutation::parse_cycles(n, p)?, FStarElement::parse(n, f)?)
    }
}

impl Mul for &SemidirectElement {
    type Output = SemidirectElement;

    fn mul(self, rhs: &SemidirectElement) -> SemidirectElement {
        SemidirectElement::mul(self, rhs).expect("elements of different degree")
    }
}

impl fmt::Display for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.perm, self.f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Chord {
        Chord::new("x")
    }

    fn y() -> Chord {
        Chord::new("y")
    }

    #[test]
    fn reduction() {
        assert!(ReducedWord::reduce([Letter::pos(&x()), Letter::neg(&x())]).is_empty());
        let w = ReducedWord::reduce([
            Letter::pos(&x()),
            Letter::pos(&y()),
            Letter::neg(&y()),
            Letter::pos(&x()),
        ]);
        assert_eq!(w.letters(), &[Letter::pos(&x()), Letter::pos(&x())]);
        assert_eq!(ReducedWord::reduce(w.letters().to_vec()), w);
        assert_eq!(w.to_string(), "x x");
    }

    #[test]
    fn fstar_products() {
        let n = 4;
        let p = FStarElement::single(n, 1, Letter::pos(&x()));
        let q = FStarElement::single(n, 2, Letter::pos(&y()));
        assert!(p.mul(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        let r = FStarElement::single(n, 1, Letter::pos(&y()));
        assert_ne!(p.mul(&r).unwrap(), r.mul(&p).unwrap());
        assert!(matches!(
            p.mul(&FStarElement::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn abelianisation() {
        let n = 5;
        assert!(FStarElement::identity(n).in_ftn());
        let f = FStarElement::from_slots(vec![
            ReducedWord::letter(Letter::pos(&x())),
            ReducedWord::reduce([Letter::neg(&x()), Letter::pos(&y())]),
            ReducedWord::identity(),
            ReducedWord::identity(),
            ReducedWord::identity(),
        ]);
        let ab = f.ab();
        assert_eq!(ab.get(&x()), 0);
        assert_eq!(ab.get(&y()), 1);
        assert_eq!(ab.0.len(), 1);
        assert!(!f.in_ftn());
    }

    #[test]
    fn action() {
        let n = 3;
        let p = FStarElement::single(n, 1, Letter::pos(&x()));
        assert_eq!(p.act(&Permutation::identity(n)).unwrap(), p);
        let moved = p.act(&Permutation::transposition(n, 1, 2)).unwrap();
        assert_eq!(moved, FStarElement::single(n, 2, Letter::pos(&x())));
    }

    #[test]
    fn semidirect_hand_product() {
        // ((12), 1) · ((23), b_2 b_3^-1) = ((12)(23), b_2 b_3^-1)
        let n = 3;
        let b = Chord::new("b");
        let f = FStarElement::parse(n, "2: b, 3: b^-1").unwrap();
        let g = SemidirectElement::from_perm(Permutation::transposition(n, 1, 2));
        let h = SemidirectElement::new(Permutation::transposition(n, 2, 3), f.clone()).unwrap();
        let gh = g.mul(&h).unwrap();
        assert_eq!(gh.perm, Permutation::parse_cycles(n, "(1 3 2)").unwrap());
        assert_eq!(gh.f, f);
        // ((23), b_2 b_3^-1) squares to the identity
        assert!(h.mul(&h).unwrap().is_identity());
        assert_eq!(h.to_string(), "(2 3) | 2: b, 3: b^-1");
        let _ = b;
    }

    #[test]
    fn display_round_trip() {
        let n = 6;
        let e = SemidirectElement::parse(n, "(1 3)(2 6 5) | 1: x y^-1, 4: x^-1").unwrap();
        assert_eq!(SemidirectElement::parse(n, &e.to_string()).unwrap(), e);
        assert_eq!(SemidirectElement::identity(n).to_string(), "() | 1");
    }
}
