//! Homomorphisms between free groups, given by the images of generators.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::bracket::bracket;
use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::free_words::{CyclicWord, Letter, Word, MAX_RANK};
use crate::surface::RibbonSurface;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    target_rank: usize,
    images: Vec<Word>,
}

impl Homomorphism {
    pub fn new(target_rank: usize, images: Vec<Word>) -> Result<Self> {
        if images.len() > MAX_RANK {
            return Err(Error::RankTooLarge(images.len()));
        }
        if target_rank > MAX_RANK {
            return Err(Error::RankTooLarge(target_rank));
        }
        for w in &images {
            if let Some(l) = w.letters().iter().find(|l| l.generator() >= target_rank) {
                return Err(Error::LetterOutOfRank { letter: l.to_char(), rank: target_rank });
            }
        }
        Ok(Homomorphism { target_rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        let images = (0..rank).map(|g| Word::new([Letter::new(g, false)])).collect();
        Homomorphism { target_rank: rank, images }
    }

    /// Parses `a->ab,b->b`. The left sides must be exactly the first
    /// `source_rank` generators, each once, in any order.
    pub fn parse(text: &str, target_rank: usize) -> Result<Self> {
        let syntax = |message: String| Error::Syntax { line: 1, message };
        let mut assigned: Vec<Option<Word>> = Vec::new();
        for part in text.trim().split(',') {
            let (lhs, rhs) = part
                .split_once("->")
                .ok_or_else(|| syntax(format!("expected `x->word`, got {part:?}")))?;
            let lhs = lhs.trim();
            let mut chars = lhs.chars();
            let generator = match (chars.next(), chars.next()) {
                (Some(c @ 'a'..='z'), None) => c as usize - 'a' as usize,
                _ => return Err(syntax(format!("left side {lhs:?} is not a generator"))),
            };
            if assigned.len() <= generator {
                assigned.resize(generator + 1, None);
            }
            if assigned[generator].is_some() {
                return Err(syntax(format!("generator {lhs} assigned twice")));
            }
            assigned[generator] = Some(Word::parse(rhs.trim(), target_rank)?);
        }
        let images = assigned
            .into_iter()
            .enumerate()
            .map(|(g, w)| {
                w.ok_or_else(|| {
                    syntax(format!("generator {} has no image", Letter::new(g, false)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Homomorphism::new(target_rank, images)
    }

    pub fn source_rank(&self) -> usize {
        self.images.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    fn image_of(&self, l: Letter) -> Word {
        let w = &self.images[l.generator()];
        if l.is_inverse() {
            w.invert()
        } else {
            w.clone()
        }
    }

    fn check_letters(&self, letters: &[Letter]) -> Result<()> {
        match letters.iter().find(|l| l.generator() >= self.source_rank()) {
            Some(l) => Err(Error::LetterOutOfRank { letter: l.to_char(), rank: self.source_rank() }),
            None => Ok(()),
        }
    }

    pub fn apply_word(&self, u: &Word) -> Result<Word> {
        self.check_letters(u.letters())?;
        Ok(u
            .letters()
            .iter()
            .fold(Word::empty(), |acc, &l| acc.concat(&self.image_of(l))))
    }

    pub fn apply_class(&self, x: &CyclicWord) -> Result<CyclicWord> {
        Ok(self.apply_word(&Word::from(x.clone()))?.cyclic_canonical())
    }

    /// Linear extension to chains.
    pub fn apply_chain(&self, u: &Chain) -> Result<Chain> {
        let mut out = Chain::zero();
        for (x, c) in u.terms() {
            out.add_term(self.apply_class(x)?, c);
        }
        Ok(out)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Homomorphism> {
        if inner.target_rank != self.source_rank() {
            return Err(Error::RankMismatch {
                expected: self.source_rank(),
                found: inner.target_rank,
            });
        }
        let images = inner
            .images
            .iter()
            .map(|w| self.apply_word(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Homomorphism { target_rank: self.target_rank, images })
    }

    /// Equal ranks and surjective. Free groups of finite rank are Hopfian, so
    /// this is the same as being an isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.source_rank() == self.target_rank && FoldedGraph::from_generators(&self.images).is_whole_group(self.target_rank)
    }
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, w) in self.images.iter().enumerate() {
            if g > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}->{}", Letter::new(g, false), w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homomorphism({self})")
    }
}

/// Stallings graph of a finitely generated subgroup: the wedge of the
/// generator loops, folded until no vertex has two edges with one label.
#[derive(Debug)]
pub struct FoldedGraph {
    base: usize,
    /// `(vertex, letter index) -> vertex` with letter `x⁻¹` reversing `x`.
    transitions: HashMap<(usize, usize), usize>,
    vertex_count: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut v = v;
        while self.0[v] != r {
            let next = self.0[v];
            self.0[v] = r;
            v = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.0[hi] = lo;
        true
    }
}

impl FoldedGraph {
    pub fn from_generators(generators: &[Word]) -> Self {
        let mut edges: Vec<(usize, Letter, usize)> = Vec::new();
        let mut vertex_count = 1;
        for w in generators {
            let n = w.len();
            let mut at = 0;
            for (i, &l) in w.letters().iter().enumerate() {
                let next = if i + 1 == n {
                    0
                } else {
                    vertex_count += 1;
                    vertex_count - 1
                };
                edges.push((at, l, next));
                at = next;
            }
        }

        let mut uf = UnionFind((0..vertex_count).collect());
        let transitions = loop {
            let mut out: HashMap<(usize, usize), usize> = HashMap::new();
            let mut merged = false;
            for &(u, l, v) in &edges {
                let (u, v) = (uf.find(u), uf.find(v));
                for (from, letter, to) in [(u, l, v), (v, l.inverse(), u)] {
                    match out.get(&(from, letter.index())) {
                        Some(&other) => merged |= uf.union(other, to),
                        None => {
                            out.insert((from, letter.index()), to);
                        }
                    }
                }
            }
            if !merged {
                break out;
            }
        };
        let vertex_count = (0..vertex_count).filter(|&v| uf.find(v) == v).count();
        FoldedGraph { base: uf.find(0), transitions, vertex_count }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Reads the word from the base vertex; it is in the subgroup iff the
    /// path exists and closes up.
    pub fn contains(&self, w: &Word) -> bool {
        let mut at = self.base;
        for l in w.letters() {
            match self.transitions.get(&(at, l.index())) {
                Some(&next) => at = next,
                None => return false,
            }
        }
        at == self.base
    }

    pub fn is_whole_group(&self, rank: usize) -> bool {
        (0..rank).all(|g| self.contains(&Word::new([Letter::new(g, false)])))
    }
}

/// Elementary Nielsen automorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NielsenMove {
    Invert(usize),
    Swap(usize, usize),
    /// `x_i ↦ x_i · x_j^{±1}`
    RightMultiply { i: usize, j: usize, inverse: bool },
    /// `x_i ↦ x_j^{±1} · x_i`
    LeftMultiply { i: usize, j: usize, inverse: bool },
}

impl NielsenMove {
    pub fn to_homomorphism(self, rank: usize) -> Homomorphism {
        let mut h = Homomorphism::identity(rank);
        let gen = |g: usize, inv: bool| Word::new([Letter::new(g, inv)]);
        match self {
            NielsenMove::Invert(i) => h.images[i] = gen(i, true),
            NielsenMove::Swap(i, j) => h.images.swap(i, j),
            NielsenMove::RightMultiply { i, j, inverse } => {
                h.images[i] = gen(i, false).concat(&gen(j, inverse))
            }
            NielsenMove::LeftMultiply { i, j, inverse } => {
                h.images[i] = gen(j, inverse).concat(&gen(i, false))
            }
        }
        h
    }

    /// A uniformly chosen move on `rank ≥ 2` generators.
    pub fn random<R: Rng>(rank: usize, rng: &mut R) -> Self {
        let i = rng.gen_range(0..rank);
        let mut j = rng.gen_range(0..rank - 1);
        if j >= i {
            j += 1;
        }
        let inverse = rng.gen_bool(0.5);
        match rng.gen_range(0..4) {
            0 => NielsenMove::Invert(i),
            1 => NielsenMove::Swap(i, j),
            2 => NielsenMove::RightMultiply { i, j, inverse },
            _ => NielsenMove::LeftMultiply { i, j, inverse },
        }
    }
}

/// How `f∗` interacts with the bracket on one pair of classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Commutes,
    Anticommutes,
    Neither,
    /// Both sides vanish; says nothing about orientation.
    Degenerate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Commutes => "commutes",
            Verdict::Anticommutes => "anticommutes",
            Verdict::Neither => "neither",
            Verdict::Degenerate => "degenerate",
        })
    }
}

/// Compares `[f∗x, f∗y]` in the target with `f∗[x, y]`.
pub fn commutes_on(
    source: &RibbonSurface,
    target: &RibbonSurface,
    f: &Homomorphism,
    x: &CyclicWord,
    y: &CyclicWord,
) -> Result<Verdict> {
    check_surfaces(source, target, f)?;
    let lhs = bracket(target, &f.apply_class(x)?, &f.apply_class(y)?)?;
    let rhs = f.apply_chain(&bracket(source, x, y)?)?;
    Ok(if lhs.is_zero() && rhs.is_zero() {
        Verdict::Degenerate
    } else if lhs == rhs {
        Verdict::Commutes
    } else if lhs == rhs.negate() {
        Verdict::Anticommutes
    } else {
        Verdict::Neither
    })
}

pub(crate) fn check_surfaces(
    source: &RibbonSurface,
    target: &RibbonSurface,
    f: &Homomorphism,
) -> Result<()> {
    if f.source_rank() != source.rank() {
        return Err(Error::RankMismatch { expected: source.rank(), found: f.source_rank() });
    }
    if f.target_rank() != target.rank() {
        return Err(Error::RankMismatch { expected: target.rank(), found: f.target_rank() });
    }
    Ok(())
}
