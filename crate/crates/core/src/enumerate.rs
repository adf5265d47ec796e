//! Enumeration and sampling of free homotopy classes.

use rand::Rng;

use crate::free_words::{least_rotation, CyclicWord, Letter, Word};

/// All non-trivial classes of exactly `len` letters over `rank` generators,
/// in lexicographic order of their canonical spelling.
pub fn classes_of_length(rank: usize, len: usize) -> Vec<CyclicWord> {
    let mut out = Vec::new();
    if len == 0 || rank == 0 {
        return out;
    }
    let alphabet: Vec<Letter> = (0..2 * rank).map(Letter::from_index).collect();
    let mut current = Vec::with_capacity(len);
    extend(&alphabet, len, &mut current, &mut out);
    out
}

fn extend(alphabet: &[Letter], len: usize, current: &mut Vec<Letter>, out: &mut Vec<CyclicWord>) {
    if current.len() == len {
        if len > 1 && current[0] == current[len - 1].inverse() {
            return;
        }
        let mut rotated = current.clone();
        rotated.rotate_left(least_rotation(current));
        if rotated == *current {
            out.push(Word::new(current.iter().copied()).cyclic_canonical());
        }
        return;
    }
    for &l in alphabet {
        if current.last() == Some(&l.inverse()) {
            continue;
        }
        // a canonical spelling never starts above its own first letter
        if !current.is_empty() && l < current[0] {
            continue;
        }
        current.push(l);
        extend(alphabet, len, current, out);
        current.pop();
    }
}

/// All non-trivial classes of length `1..=max_len`, shortlex ordered.
pub fn classes_up_to(rank: usize, max_len: usize) -> Vec<CyclicWord> {
    (1..=max_len).flat_map(|n| classes_of_length(rank, n)).collect()
}

/// A uniformly random freely reduced word of exactly `len` letters.
pub fn random_word<R: Rng>(rank: usize, len: usize, rng: &mut R) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::from_index(rng.gen_range(0..2 * rank));
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::new(letters)
}

/// A random non-trivial class of length `1..=max_len`.
pub fn random_class<R: Rng>(rank: usize, max_len: usize, rng: &mut R) -> CyclicWord {
    loop {
        let len = rng.gen_range(1..=max_len);
        let mut letters: Vec<Letter> = Vec::with_capacity(len);
        while letters.len() < len {
            let l = Letter::from_index(rng.gen_range(0..2 * rank));
            if letters.last() == Some(&l.inverse()) {
                continue;
            }
            if letters.len() + 1 == len && len > 1 && l == letters[0].inverse() {
                continue;
            }
            letters.push(l);
        }
        let x = Word::new(letters).cyclic_canonical();
        if x.len() == len {
            return x;
        }
    }
}
