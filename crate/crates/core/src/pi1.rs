//! The fundamental group of the sphere with `N + 2` punctures and its formal
//! monodromy action.
//!
//! Generators are `a` (north pole), `b_0, …, b_{N-1}` (equator) and `c`
//! (south pole) with the single relation `c b_0 ⋯ b_{N-1} a = 1`. Eliminating
//! `c` leaves the free group on `a, b_0, …, b_{N-1}`, where free reduction
//! decides equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::helix::helix_period;
use crate::length::Length;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B(usize),
    C,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A => write!(f, "a"),
            Generator::B(i) => write!(f, "b{i}"),
            Generator::C => write!(f, "c"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;

    /// `a`, `c`, `b<index>`, each optionally followed by `^-1`.
    fn from_str(token: &str) -> Result<Self> {
        let bad = || Error::UnknownGenerator(token.to_string());
        let (name, inverse) = match token.strip_suffix("^-1") {
            Some(name) => (name, true),
            None => (token, false),
        };
        let generator = match name {
            "a" => Generator::A,
            "c" => Generator::C,
            _ => {
                let digits = name.strip_prefix('b').ok_or_else(bad)?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                Generator::B(digits.parse().map_err(|_| bad())?)
            }
        };
        Ok(Letter { generator, inverse })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Cancels adjacent `x x^-1` pairs.
    pub fn freely_reduced(&self) -> GroupWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if stack.last() == Some(&l.inv()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        GroupWord(stack)
    }
}

impl fmt::Display for GroupWord {
    /// Letters separated by spaces; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub n: usize,
    pub generators: Vec<Generator>,
    /// `c b_0 ⋯ b_{N-1} a`.
    pub relation: GroupWord,
}

pub fn presentation(n: usize) -> Result<Presentation> {
    if n < 1 {
        return Err(Error::InvalidPunctureCount(n));
    }
    let mut generators = vec![Generator::A];
    generators.extend((0..n).map(Generator::B));
    generators.push(Generator::C);
    let mut relation = vec![Letter::new(Generator::C)];
    relation.extend((0..n).map(|i| Letter::new(Generator::B(i))));
    relation.push(Letter::new(Generator::A));
    Ok(Presentation {
        n,
        generators,
        relation: GroupWord(relation),
    })
}

fn check_generators(word: &GroupWord, n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidPunctureCount(n));
    }
    match word.0.iter().find(|l| matches!(l.generator, Generator::B(i) if i >= n)) {
        Some(l) => Err(Error::UnknownGenerator(l.generator.to_string())),
        None => Ok(()),
    }
}

/// Canonical form: substitute `c = a^-1 b_{N-1}^-1 ⋯ b_0^-1` and freely reduce.
pub fn normal_form(word: &GroupWord, n: usize) -> Result<GroupWord> {
    check_generators(word, n)?;
    let c_image: Vec<Letter> = std::iter::once(Letter::new(Generator::A).inv())
        .chain((0..n).rev().map(|i| Letter::new(Generator::B(i)).inv()))
        .collect();
    let mut expanded = Vec::with_capacity(word.0.len());
    for l in &word.0 {
        match (l.generator, l.inverse) {
            (Generator::C, false) => expanded.extend(c_image.iter().copied()),
            (Generator::C, true) => expanded.extend(c_image.iter().rev().map(|x| x.inv())),
            _ => expanded.push(*l),
        }
    }
    Ok(GroupWord(expanded).freely_reduced())
}

pub fn words_equal(w1: &GroupWord, w2: &GroupWord, n: usize) -> Result<bool> {
    Ok(normal_form(w1, n)? == normal_form(w2, n)?)
}

/// One factor of a composite autoequivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `- ⊗ O(k)`; `k` is never zero in a reduced expression.
    TensorO(i64),
    /// The twist at helix position `index`, or its inverse.
    Twist { index: usize, inverse: bool },
    /// The flop functor `F`, or `F^-1`.
    Flop { inverse: bool },
}

impl Atom {
    pub fn inverse(self) -> Atom {
        match self {
            Atom::TensorO(k) => Atom::TensorO(-k),
            Atom::Twist { index, inverse } => Atom::Twist {
                index,
                inverse: !inverse,
            },
            Atom::Flop { inverse } => Atom::Flop { inverse: !inverse },
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::TensorO(k) => write!(f, "O({k})"),
            Atom::Twist { index, inverse } => {
                write!(f, "T_S{index}{}", if *inverse { "^-1" } else { "" })
            }
            Atom::Flop { inverse } => write!(f, "F{}", if *inverse { "^-1" } else { "" }),
        }
    }
}

/// A composite `atoms[0] ∘ atoms[1] ∘ ⋯`, kept reduced: adjacent tensor
/// powers merge, adjacent atom/inverse pairs cancel. Twists are never
/// simplified against each other or against tensors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FunctorExpr(Vec<Atom>);

impl FunctorExpr {
    pub fn identity() -> Self {
        FunctorExpr(Vec::new())
    }

    pub fn from_atoms(atoms: impl IntoIterator<Item = Atom>) -> Self {
        let mut e = FunctorExpr::identity();
        for a in atoms {
            e.push(a);
        }
        e
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, atom: Atom) {
        if atom == Atom::TensorO(0) {
            return;
        }
        match (self.0.last().copied(), atom) {
            (Some(Atom::TensorO(j)), Atom::TensorO(k)) => {
                self.0.pop();
                if j + k != 0 {
                    self.0.push(Atom::TensorO(j + k));
                }
            }
            (Some(top), _) if top == atom.inverse() => {
                self.0.pop();
            }
            _ => self.0.push(atom),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FunctorExpr) -> FunctorExpr {
        let mut out = self.clone();
        for &a in &other.0 {
            out.push(a);
        }
        out
    }

    pub fn inverse(&self) -> FunctorExpr {
        FunctorExpr::from_atoms(self.0.iter().rev().map(|a| a.inverse()))
    }
}

impl fmt::Display for FunctorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ∘ ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

fn generator_image(g: Generator) -> FunctorExpr {
    match g {
        Generator::A => FunctorExpr::from_atoms([Atom::TensorO(-1)]),
        Generator::B(index) => FunctorExpr::from_atoms([Atom::Twist {
            index,
            inverse: false,
        }]),
        Generator::C => FunctorExpr::from_atoms([
            Atom::Flop { inverse: true },
            Atom::TensorO(-1),
            Atom::Flop { inverse: false },
        ]),
    }
}

/// Letter-by-letter image of `word` under
/// `a ↦ -⊗O(-1)`, `b_i ↦ T_{S_i}`, `c ↦ F^-1 ∘ (-⊗O(-1)) ∘ F`.
pub fn monodromy(word: &GroupWord, length: Length) -> Result<FunctorExpr> {
    check_generators(word, helix_period(length))?;
    Ok(word.0.iter().fold(FunctorExpr::identity(), |acc, l| {
        let img = generator_image(l.generator);
        acc.compose(&if l.inverse { img.inverse() } else { img })
    }))
}
