//! The Goldman bracket of two free homotopy classes.
//!
//! Each class is drawn on the ribbon surface as a strand system: one strand
//! segment per letter running along the band of that generator, and one
//! chord per junction inside the vertex disk joining the arc where the
//! previous letter arrives to the arc where the next letter leaves. Strands
//! in a band never cross, so every intersection of the two curves is a pair
//! of chords with alternating endpoints on the disk boundary.
//!
//! Within a band the strands are sorted by their itineraries so that two
//! strands only cross where their routes genuinely split. Strands that run
//! parallel forever (as in `x` against a power of `x`) are pushed to a fixed
//! side of each other and do not cross at all.

use std::cmp::Ordering;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::free_words::{CyclicWord, Letter, Word};
use crate::surface::RibbonSurface;

/// An endpoint on the boundary circle of the vertex disk.
///
/// `arc` is the dart whose arc holds the point, `index` counts
/// counterclockwise within that arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcSlot {
    pub arc: Letter,
    /// ccw position of `arc` in the dart order
    pub arc_position: usize,
    pub index: usize,
}

impl ArcSlot {
    fn circle_key(&self) -> (usize, usize) {
        (self.arc_position, self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Junction {
    pub in_dart: Letter,
    pub out_dart: Letter,
    pub in_slot: ArcSlot,
    pub out_slot: ArcSlot,
}

/// A curve drawn on the surface. Junction `i` sits between letters `i − 1`
/// and `i` of the spelled word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandSystem {
    pub curve_id: usize,
    pub word: Vec<Letter>,
    pub junctions: Vec<Junction>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub i: usize,
    pub j: usize,
    pub sign: i32,
}

#[derive(Clone, Copy)]
struct Passage {
    curve: usize,
    t: usize,
}

/// The darts met when following a passage inward from the positive arc of
/// its band: backwards along the curve for a positive letter, forwards for a
/// negative one.
fn ray_dart(word: &[Letter], t: usize, step: usize) -> Letter {
    let n = word.len();
    if word[t].is_inverse() {
        word[(t + step) % n]
    } else {
        word[(t + n - step % n) % n].inverse()
    }
}

fn compare_passages(
    surface: &RibbonSurface,
    words: &[&[Letter]],
    band_arc: Letter,
    p: Passage,
    q: Passage,
) -> Ordering {
    let (wp, wq) = (words[p.curve], words[q.curve]);
    // rank sequences with periods |wp| and |wq| agreeing this long agree forever
    let horizon = wp.len() + wq.len();
    let mut arc = band_arc;
    for step in 1..=horizon {
        let (dp, dq) = (ray_dart(wp, p.t, step), ray_dart(wq, q.t, step));
        if dp != dq {
            // the strand heading further counterclockwise takes the lower slot
            return surface
                .ccw_distance(arc, dq)
                .cmp(&surface.ccw_distance(arc, dp));
        }
        arc = dp.inverse();
    }
    if p.curve == q.curve {
        return p.t.cmp(&q.t);
    }
    // parallel copies: the later curve sits on a fixed side of the earlier one,
    // which flips in slot order depending on whether the earlier one leaves or
    // enters the vertex through this arc
    let (first, sign) = if p.curve < q.curve { (p, Ordering::Less) } else { (q, Ordering::Greater) };
    let departing = !words[first.curve][first.t].is_inverse();
    if departing {
        sign
    } else {
        sign.reverse()
    }
}

/// Lays out any number of cyclically reduced, non-empty curves jointly.
fn build_systems(surface: &RibbonSurface, words: &[&[Letter]]) -> Vec<StrandSystem> {
    let rank = surface.rank();
    let mut bands: Vec<Vec<Passage>> = vec![Vec::new(); rank];
    for (curve, w) in words.iter().enumerate() {
        for (t, l) in w.iter().enumerate() {
            bands[l.generator()].push(Passage { curve, t });
        }
    }

    // slot of each passage at the positive arc of its band
    let mut band_slot: Vec<Vec<usize>> = words.iter().map(|w| vec![0; w.len()]).collect();
    let mut band_size = vec![0usize; rank];
    for (k, band) in bands.iter_mut().enumerate() {
        let arc = Letter::new(k, false);
        band.sort_by(|&p, &q| compare_passages(surface, words, arc, p, q));
        for (slot, p) in band.iter().enumerate() {
            band_slot[p.curve][p.t] = slot;
        }
        band_size[k] = band.len();
    }

    let slot_on = |curve: usize, t: usize, arc: Letter| {
        let s = band_slot[curve][t];
        let index = if arc.is_inverse() { band_size[arc.generator()] - 1 - s } else { s };
        ArcSlot { arc, arc_position: surface.position(arc), index }
    };

    words
        .iter()
        .enumerate()
        .map(|(curve, w)| {
            let n = w.len();
            let junctions = (0..n)
                .map(|i| {
                    let prev = (i + n - 1) % n;
                    let in_dart = w[prev].inverse();
                    let out_dart = w[i];
                    Junction {
                        in_dart,
                        out_dart,
                        in_slot: slot_on(curve, prev, in_dart),
                        out_slot: slot_on(curve, i, out_dart),
                    }
                })
                .collect();
            StrandSystem { curve_id: curve, word: w.to_vec(), junctions }
        })
        .collect()
}

fn check_spelling(surface: &RibbonSurface, w: &[Letter]) -> Result<()> {
    if w.is_empty() {
        return Err(Error::TrivialClass);
    }
    if let Some(l) = w.iter().find(|l| l.generator() >= surface.rank()) {
        return Err(Error::LetterOutOfRank { letter: l.to_char(), rank: surface.rank() });
    }
    Ok(())
}

/// Strand systems for `x` (curve 0) and `y` (curve 1), laid out jointly.
pub fn build_strand_pair(
    surface: &RibbonSurface,
    x: &CyclicWord,
    y: &CyclicWord,
) -> Result<(StrandSystem, StrandSystem)> {
    build_spelled_pair(surface, x.letters(), y.letters())
}

/// Same as [`build_strand_pair`] for arbitrary cyclically reduced spellings.
pub fn build_spelled_pair(
    surface: &RibbonSurface,
    x: &[Letter],
    y: &[Letter],
) -> Result<(StrandSystem, StrandSystem)> {
    check_spelling(surface, x)?;
    check_spelling(surface, y)?;
    for w in [x, y] {
        if w.len() > 1 && w[0] == w[w.len() - 1].inverse() {
            return Err(Error::NotCyclicallyReduced);
        }
    }
    let mut systems = build_systems(surface, &[x, y]).into_iter();
    Ok((systems.next().unwrap(), systems.next().unwrap()))
}

/// `a` strictly inside the counterclockwise open interval from `from` to `to`.
fn between_ccw(from: (usize, usize), to: (usize, usize), a: (usize, usize)) -> bool {
    if from < to {
        from < a && a < to
    } else {
        a > from || a < to
    }
}

/// Signed chord crossings between the two curves.
///
/// A crossing is positive when the circle reads `x_in, y_in, x_out, y_out`
/// counterclockwise.
pub fn crossings(sys_x: &StrandSystem, sys_y: &StrandSystem) -> Vec<Crossing> {
    let mut out = Vec::new();
    for (i, jx) in sys_x.junctions.iter().enumerate() {
        let (x_in, x_out) = (jx.in_slot.circle_key(), jx.out_slot.circle_key());
        for (j, jy) in sys_y.junctions.iter().enumerate() {
            let y_in_inside = between_ccw(x_in, x_out, jy.in_slot.circle_key());
            let y_out_inside = between_ccw(x_in, x_out, jy.out_slot.circle_key());
            if y_in_inside != y_out_inside {
                let sign = if y_in_inside { 1 } else { -1 };
                out.push(Crossing { i, j, sign });
            }
        }
    }
    out
}

/// Checks that strands pass through every band without crossing: at both
/// ends of a band the slots are gap-free and in reversed order.
pub fn band_consistent(rank: usize, systems: &[&StrandSystem]) -> bool {
    // per band: (slot at positive arc, slot at negative arc)
    let mut bands: Vec<Vec<(usize, usize)>> = vec![Vec::new(); rank];
    for sys in systems {
        let n = sys.junctions.len();
        for t in 0..n {
            let leave = sys.junctions[t].out_slot;
            let arrive = sys.junctions[(t + 1) % n].in_slot;
            if leave.arc != sys.word[t] || arrive.arc != sys.word[t].inverse() {
                return false;
            }
            let pair = if leave.arc.is_inverse() {
                (arrive.index, leave.index)
            } else {
                (leave.index, arrive.index)
            };
            bands[leave.arc.generator()].push(pair);
        }
    }
    bands.iter_mut().all(|band| {
        let n = band.len();
        band.sort_unstable();
        band.iter().enumerate().all(|(s, &(pos, neg))| pos == s && neg == n - 1 - s)
    })
}

fn splice_spelled(x: &[Letter], i: usize, y: &[Letter], j: usize) -> CyclicWord {
    let letters = x[i..]
        .iter()
        .chain(&x[..i])
        .chain(&y[j..])
        .chain(&y[..j])
        .copied();
    Word::new(letters).cyclic_canonical()
}

/// The loop product of `x` and `y` based at junction `i` of `x` and `j` of `y`.
pub fn splice(x: &CyclicWord, i: usize, y: &CyclicWord, j: usize) -> Result<CyclicWord> {
    for (index, len) in [(i, x.len()), (j, y.len())] {
        if index >= len {
            return Err(Error::IndexOutOfRange { index, len });
        }
    }
    Ok(splice_spelled(x.letters(), i, y.letters(), j))
}

fn bracket_spelled(surface: &RibbonSurface, x: &[Letter], y: &[Letter]) -> Result<Chain> {
    if x.is_empty() || y.is_empty() {
        return Ok(Chain::zero());
    }
    let (sx, sy) = build_spelled_pair(surface, x, y)?;
    Ok(crossings(&sx, &sy)
        .into_iter()
        .map(|c| (splice_spelled(x, c.i, y, c.j), c.sign as i64))
        .collect())
}

/// `[x, y] = Σ_p ε_p ⟨x ∗_p y⟩` over the crossings of the two strand systems.
/// The trivial class brackets to zero with everything.
pub fn bracket(surface: &RibbonSurface, x: &CyclicWord, y: &CyclicWord) -> Result<Chain> {
    bracket_spelled(surface, x.letters(), y.letters())
}

/// The bracket computed from arbitrary spellings; they are cyclically reduced
/// but not rotated, so the strand systems really differ from the canonical ones.
pub fn bracket_words(surface: &RibbonSurface, x: &Word, y: &Word) -> Result<Chain> {
    let (x, y) = (x.cyclically_reduced(), y.cyclically_reduced());
    bracket_spelled(surface, x.letters(), y.letters())
}

/// Bilinear extension of [`bracket`].
pub fn bracket_chain(surface: &RibbonSurface, u: &Chain, v: &Chain) -> Result<Chain> {
    let mut out = Chain::zero();
    for (x, a) in u.terms() {
        for (y, b) in v.terms() {
            for (z, c) in bracket(surface, x, y)?.terms() {
                out.add_term(z.clone(), a * b * c);
            }
        }
    }
    Ok(out)
}
