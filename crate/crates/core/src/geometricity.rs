//! Is a homotopy equivalence between surfaces homotopic to a homeomorphism?
//!
//! For surfaces with χ < 0 this holds exactly when `f∗` is an isomorphism
//! that carries the primitive boundary classes of the source bijectively onto
//! those of the target (up to inversion). That condition is decided directly.
//! Commutation with the Goldman bracket is checked on enumerated pairs of
//! classes, both to read off the orientation behaviour and to search for
//! explicit pairs on which a map fails to commute.

use std::fmt;

use crate::error::{Error, Result};
use crate::free_words::CyclicWord;
use crate::group_maps::{check_surfaces, commutes_on, Homomorphism, Verdict};
use crate::enumerate::classes_of_length;
use crate::surface::{PeripheralInfo, RibbonSurface};

/// Pairs tried when reading off the orientation sign.
pub const DEFAULT_ORIENTATION_BUDGET: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Preserving,
    Reversing,
    Undetermined,
}

impl Orientation {
    pub fn sign(self) -> Option<i32> {
        match self {
            Orientation::Preserving => Some(1),
            Orientation::Reversing => Some(-1),
            Orientation::Undetermined => None,
        }
    }

    pub fn compose(self, other: Orientation) -> Orientation {
        match (self.sign(), other.sign()) {
            (Some(a), Some(b)) if a * b > 0 => Orientation::Preserving,
            (Some(_), Some(_)) => Orientation::Reversing,
            _ => Orientation::Undetermined,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Preserving => "+1",
            Orientation::Reversing => "-1",
            Orientation::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    NotIsomorphism,
    /// The image of this source boundary component is not a primitive
    /// peripheral class.
    BoundaryClassNotPeripheral(usize),
    BoundaryMapNotBijective,
    Ok,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::NotIsomorphism => write!(f, "not-isomorphism"),
            Reason::BoundaryClassNotPeripheral(i) => write!(f, "boundary-class-not-peripheral({i})"),
            Reason::BoundaryMapNotBijective => write!(f, "boundary-map-not-bijective"),
            Reason::Ok => write!(f, "ok"),
        }
    }
}

/// Source component `source` maps to `boundary[target]^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryMatch {
    pub source: usize,
    pub target: usize,
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    pub geometric: bool,
    pub orientation: Orientation,
    pub reason: Reason,
    pub boundary_matching: Option<Vec<BoundaryMatch>>,
}

impl DecisionReport {
    fn rejected(reason: Reason) -> Self {
        DecisionReport {
            geometric: false,
            orientation: Orientation::Undetermined,
            reason,
            boundary_matching: None,
        }
    }

    /// Commutes with the bracket in the strict sense `[f∗x, f∗y] = f∗[x, y]`,
    /// which leaves out orientation-reversing homeomorphisms.
    pub fn strictly_commutes(&self) -> bool {
        self.geometric && self.orientation == Orientation::Preserving
    }
}

impl fmt::Display for DecisionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "geometric: {}", if self.geometric { "yes" } else { "no" })?;
        writeln!(f, "orientation: {}", self.orientation)?;
        write!(f, "reason: {}", self.reason)?;
        for m in self.boundary_matching.iter().flatten() {
            write!(f, "\nC{} -> C'{} (exponent {:+})", m.source, m.target, m.exponent)?;
        }
        Ok(())
    }
}

fn require_hyperbolic(s: &RibbonSurface) -> Result<()> {
    if s.is_hyperbolic() {
        Ok(())
    } else {
        Err(Error::NotHyperbolic(s.euler_characteristic()))
    }
}

/// Primitive boundary classes, one per component, in the traced orientation.
pub fn peripheral_structure(s: &RibbonSurface) -> Result<Vec<CyclicWord>> {
    require_hyperbolic(s)?;
    s.boundary_words()
        .iter()
        .map(|w| w.primitive_root().map(|(r, _)| r))
        .collect()
}

/// Unordered pairs `x < y` of non-trivial classes, ordered by total length
/// and then lexicographically.
pub struct ClassPairs {
    rank: usize,
    max_total: usize,
    by_length: Vec<Vec<CyclicWord>>,
    total: usize,
    left_len: usize,
    i: usize,
    j: usize,
}

impl ClassPairs {
    pub fn new(rank: usize, max_total: usize) -> Self {
        ClassPairs { rank, max_total, by_length: vec![Vec::new()], total: 2, left_len: 1, i: 0, j: 0 }
    }

    fn classes(&mut self, len: usize) -> &[CyclicWord] {
        while self.by_length.len() <= len {
            let n = self.by_length.len();
            self.by_length.push(classes_of_length(self.rank, n));
        }
        &self.by_length[len]
    }
}

impl Iterator for ClassPairs {
    type Item = (CyclicWord, CyclicWord);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.total > self.max_total || self.rank == 0 {
                return None;
            }
            let right_len = self.total - self.left_len;
            if self.left_len > right_len {
                self.total += 1;
                self.left_len = 1;
                self.i = 0;
                self.j = 0;
                continue;
            }
            let left_count = self.classes(self.left_len).len();
            let right_count = self.classes(right_len).len();
            if self.i >= left_count {
                self.left_len += 1;
                self.i = 0;
                self.j = 0;
                continue;
            }
            if self.j >= right_count {
                self.i += 1;
                self.j = 0;
                continue;
            }
            let x = self.by_length[self.left_len][self.i].clone();
            let y = self.by_length[right_len][self.j].clone();
            self.j += 1;
            if x < y {
                return Some((x, y));
            }
        }
    }
}

fn orientation_of(
    f: &Homomorphism,
    source: &RibbonSurface,
    target: &RibbonSurface,
    budget: usize,
) -> Result<Orientation> {
    // long enough that the budget, not the length cap, ends the search
    for (x, y) in ClassPairs::new(source.rank(), 4 * source.rank() + 8).take(budget) {
        match commutes_on(source, target, f, &x, &y)? {
            Verdict::Degenerate => continue,
            Verdict::Commutes => return Ok(Orientation::Preserving),
            Verdict::Anticommutes => return Ok(Orientation::Reversing),
            Verdict::Neither => return Ok(Orientation::Undetermined),
        }
    }
    Ok(Orientation::Undetermined)
}

pub fn is_geometric(
    f: &Homomorphism,
    source: &RibbonSurface,
    target: &RibbonSurface,
) -> Result<DecisionReport> {
    is_geometric_with_budget(f, source, target, DEFAULT_ORIENTATION_BUDGET)
}

/// Decides geometricity. `budget` bounds the bracket comparisons spent on
/// determining the orientation sign.
pub fn is_geometric_with_budget(
    f: &Homomorphism,
    source: &RibbonSurface,
    target: &RibbonSurface,
    budget: usize,
) -> Result<DecisionReport> {
    require_hyperbolic(source)?;
    require_hyperbolic(target)?;
    check_surfaces(source, target, f)?;

    if !f.is_isomorphism() {
        return Ok(DecisionReport::rejected(Reason::NotIsomorphism));
    }

    let mut matching = Vec::new();
    for (i, w) in peripheral_structure(source)?.iter().enumerate() {
        let image = f.apply_class(w)?;
        let info = if image.is_trivial() {
            PeripheralInfo::NotPeripheral
        } else {
            target.is_peripheral(&image)?
        };
        match info {
            PeripheralInfo::Peripheral { component, exponent } if exponent.abs() == 1 => {
                matching.push(BoundaryMatch { source: i, target: component, exponent })
            }
            _ => return Ok(DecisionReport::rejected(Reason::BoundaryClassNotPeripheral(i))),
        }
    }

    let mut hit = vec![false; target.boundary_words().len()];
    for m in &matching {
        if std::mem::replace(&mut hit[m.target], true) {
            return Ok(DecisionReport::rejected(Reason::BoundaryMapNotBijective));
        }
    }
    if hit.iter().any(|h| !h) {
        return Ok(DecisionReport::rejected(Reason::BoundaryMapNotBijective));
    }

    Ok(DecisionReport {
        geometric: true,
        orientation: orientation_of(f, source, target, budget)?,
        reason: Reason::Ok,
        boundary_matching: Some(matching),
    })
}

/// Looks for a pair of classes, of total length at most `max_len`, on which
/// `f∗` fails to commute with the bracket. With `strict`, anticommuting pairs
/// count as failures too. At most `budget` pairs are evaluated.
pub fn find_witness(
    f: &Homomorphism,
    source: &RibbonSurface,
    target: &RibbonSurface,
    max_len: usize,
    budget: usize,
    strict: bool,
) -> Result<Option<(CyclicWord, CyclicWord)>> {
    check_surfaces(source, target, f)?;
    for (x, y) in ClassPairs::new(source.rank(), max_len).take(budget) {
        match commutes_on(source, target, f, &x, &y)? {
            Verdict::Neither => return Ok(Some((x, y))),
            Verdict::Anticommutes if strict => return Ok(Some((x, y))),
            _ => {}
        }
    }
    Ok(None)
}
