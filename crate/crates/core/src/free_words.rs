//! Words in a free group of rank at most 26.
//!
//! Letters are spelled `a`–`z` for generators and `A`–`Z` for their inverses.
//! A [`Word`] is always freely reduced; a [`CyclicWord`] is the canonical
//! representative of a conjugacy class (cyclically reduced, least rotation).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest rank expressible with the single-character letter encoding.
pub const MAX_RANK: usize = 26;

/// A generator or its inverse.
///
/// Packed as `2 * generator + (inverse as u8)`, so the derived order is
/// generator ascending with the positive letter first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        assert!(generator < MAX_RANK, "generator index {generator} out of range");
        Letter((generator as u8) << 1 | inverse as u8)
    }

    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    /// +1 for a generator, −1 for an inverse.
    pub fn sign(self) -> i32 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Dense index in `0..2 * rank`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < 2 * MAX_RANK);
        Letter(index as u8)
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a'..='z' => Some(Letter::new(c as usize - 'a' as usize, false)),
            'A'..='Z' => Some(Letter::new(c as usize - 'A' as usize, true)),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        let base = if self.is_inverse() { b'A' } else { b'a' };
        (base + self.generator() as u8) as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

fn push_reduced(buffer: &mut Vec<Letter>, letter: Letter) {
    if buffer.last() == Some(&letter.inverse()) {
        buffer.pop();
    } else {
        buffer.push(letter);
    }
}

fn spell(letters: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for l in letters {
        write!(f, "{}", l.to_char())?;
    }
    Ok(())
}

/// Shortlex: length first, then lexicographic in the letter order.
fn shortlex(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A freely reduced element of a free group.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Freely reduces the given letters.
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut buffer = Vec::new();
        for l in letters {
            push_reduced(&mut buffer, l);
        }
        Word { letters: buffer }
    }

    /// Parses a letter string over the given rank and freely reduces it.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            let l = Letter::from_char(c).ok_or(Error::UnknownCharacter(c))?;
            if l.generator() >= rank {
                return Err(Error::LetterOutOfRank { letter: c, rank });
            }
            letters.push(l);
        }
        Ok(Word::new(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut buffer = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut buffer, l);
        }
        Word { letters: buffer }
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::empty(), |acc, _| acc.concat(&base))
    }

    /// Strips matching first/last inverse pairs without rotating.
    ///
    /// The result is a rotation of the canonical form, which makes it useful
    /// for exercising representative independence.
    pub fn cyclically_reduced(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i] == l[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Word {
            letters: l[i..j].to_vec(),
        }
    }

    pub fn cyclic_canonical(&self) -> CyclicWord {
        CyclicWord::from_reduced_cycle(self.cyclically_reduced().letters)
    }

    pub fn is_conjugate(&self, other: &Word) -> bool {
        self.cyclic_canonical() == other.cyclic_canonical()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        spell(&self.letters, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        spell(&self.letters, f)
    }
}

impl From<CyclicWord> for Word {
    fn from(x: CyclicWord) -> Self {
        Word { letters: x.letters }
    }
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut failure: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = failure[j - k - 1];
        while i != -1 && sj != s[(k + i as usize + 1) % n] {
            if sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if sj != s[(k + (i + 1) as usize) % n] {
            // i == -1 here
            if sj < s[k % n] {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}

/// Canonical representative of a conjugacy class in a free group.
///
/// Empty for the trivial class. Ordered shortlex, which is also the order
/// used for chain rendering and witness enumeration.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn trivial() -> Self {
        CyclicWord::default()
    }

    /// `letters` must already be cyclically reduced.
    fn from_reduced_cycle(mut letters: Vec<Letter>) -> Self {
        let k = least_rotation(&letters);
        letters.rotate_left(k);
        CyclicWord { letters }
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        Ok(Word::parse(text, rank)?.cyclic_canonical())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same as [`CyclicWord::is_trivial`].
    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Largest generator index used, plus one.
    pub fn min_rank(&self) -> usize {
        self.letters.iter().map(|l| l.generator() + 1).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> CyclicWord {
        Word::from(self.clone()).invert().cyclic_canonical()
    }

    /// The class of `x^n`; `n = 0` gives the trivial class.
    pub fn power(&self, n: i64) -> CyclicWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        // powers of a cyclically reduced word stay cyclically reduced
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        CyclicWord::from_reduced_cycle(letters)
    }

    /// Writes `x = root^exponent` with `root` primitive and `exponent` maximal.
    pub fn primitive_root(&self) -> Result<(CyclicWord, u32)> {
        let n = self.len();
        if n == 0 {
            return Err(Error::TrivialClass);
        }
        // smallest period from the prefix function
        let s = &self.letters;
        let mut pi = vec![0usize; n];
        for i in 1..n {
            let mut k = pi[i - 1];
            while k > 0 && s[i] != s[k] {
                k = pi[k - 1];
            }
            if s[i] == s[k] {
                k += 1;
            }
            pi[i] = k;
        }
        let period = n - pi[n - 1];
        let period = if n.is_multiple_of(period) { period } else { n };
        let root = CyclicWord {
            letters: s[..period].to_vec(),
        };
        Ok((root, (n / period) as u32))
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.primitive_root(), Ok((_, 1)))
    }

    /// The word read starting at letter `i`.
    pub fn rotation(&self, i: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.rotate_left(i);
        Word { letters }
    }
}

impl PartialOrd for CyclicWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclicWord {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(&self.letters, &other.letters)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        spell(&self.letters, f)?;
        write!(f, ">")
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        spell(&self.letters, f)
    }
}
