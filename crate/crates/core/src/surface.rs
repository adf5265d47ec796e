//! Compact oriented surfaces with boundary, encoded as one-vertex ribbon graphs.
//!
//! A surface of rank `n` has one vertex and `n` edges; the `2n` darts are the
//! signed generators. Dart `x` is where a curve leaves the vertex along edge
//! `x`, and it comes back in through dart `x⁻¹`. The cyclic dart order is read
//! counterclockwise, which fixes the orientation of the surface.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::free_words::{CyclicWord, Letter, Word, MAX_RANK};

#[derive(Clone, PartialEq, Eq)]
pub struct RibbonSurface {
    rank: usize,
    order: Vec<Letter>,
    /// `position[letter.index()]` is the slot of that dart in `order`.
    position: Vec<usize>,
    boundary: Vec<CyclicWord>,
}

/// Where a class sits relative to the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeripheralInfo {
    NotPeripheral,
    /// The class is conjugate to `boundary[component]^exponent`.
    Peripheral { component: usize, exponent: i64 },
}

impl PeripheralInfo {
    pub fn is_peripheral(&self) -> bool {
        matches!(self, PeripheralInfo::Peripheral { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopologySummary {
    pub euler_characteristic: i64,
    pub genus: i64,
    pub boundary_count: usize,
}

impl RibbonSurface {
    pub fn new(rank: usize, order: Vec<Letter>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        let mut position = vec![usize::MAX; 2 * rank];
        for (i, &d) in order.iter().enumerate() {
            if d.generator() >= rank {
                return Err(Error::LetterOutOfRank { letter: d.to_char(), rank });
            }
            if position[d.index()] != usize::MAX {
                return Err(Error::DuplicateDart(d.to_char()));
            }
            position[d.index()] = i;
        }
        if let Some(missing) = (0..2 * rank).find(|&i| position[i] == usize::MAX) {
            return Err(Error::MissingDart(Letter::from_index(missing).to_char()));
        }

        let mut surface = RibbonSurface { rank, order, position, boundary: Vec::new() };
        surface.boundary = surface.trace_faces();
        let twice_genus = 1 + rank as i64 - surface.boundary.len() as i64;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(Error::NonIntegralGenus);
        }
        debug_assert!(surface.boundary_classes_distinct());
        Ok(surface)
    }

    /// Builds a surface from a string of darts such as `"abAB"`.
    pub fn from_darts(rank: usize, darts: &str) -> Result<Self> {
        let order = darts
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or(Error::UnknownCharacter(c)))
            .collect::<Result<Vec<_>>>()?;
        RibbonSurface::new(rank, order)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dart_order(&self) -> &[Letter] {
        &self.order
    }

    /// Counterclockwise slot of a dart around the vertex.
    pub fn position(&self, dart: Letter) -> usize {
        self.position[dart.index()]
    }

    pub fn next_ccw(&self, dart: Letter) -> Letter {
        self.order[(self.position(dart) + 1) % self.order.len()]
    }

    /// Counterclockwise distance from `from` to `to`, in `0..2n`.
    pub fn ccw_distance(&self, from: Letter, to: Letter) -> usize {
        let n = self.order.len();
        (self.position(to) + n - self.position(from)) % n
    }

    /// Face orbits of `d ↦ next_ccw(d⁻¹)`, listed in order of their first
    /// dart in the cyclic order.
    fn trace_faces(&self) -> Vec<CyclicWord> {
        let mut seen = vec![false; 2 * self.rank];
        let mut faces = Vec::new();
        for &start in &self.order {
            if seen[start.index()] {
                continue;
            }
            let mut letters = Vec::new();
            let mut d = start;
            while !seen[d.index()] {
                seen[d.index()] = true;
                letters.push(d);
                d = self.next_ccw(d.inverse());
            }
            let word = Word::new(letters.iter().copied());
            debug_assert_eq!(word.len(), letters.len());
            let class = word.cyclic_canonical();
            debug_assert_eq!(class.len(), letters.len(), "boundary word not cyclically reduced");
            faces.push(class);
        }
        faces
    }

    pub fn boundary_words(&self) -> &[CyclicWord] {
        &self.boundary
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 - self.rank as i64
    }

    pub fn topology(&self) -> TopologySummary {
        let chi = self.euler_characteristic();
        let b = self.boundary.len() as i64;
        TopologySummary {
            euler_characteristic: chi,
            genus: (2 - chi - b) / 2,
            boundary_count: self.boundary.len(),
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.euler_characteristic() < 0
    }

    pub fn is_peripheral(&self, x: &CyclicWord) -> Result<PeripheralInfo> {
        let (root, e) = x.primitive_root()?;
        let e = e as i64;
        for (i, w) in self.boundary.iter().enumerate() {
            let (w_root, k) = w.primitive_root()?;
            let k = k as i64;
            if e % k != 0 {
                continue;
            }
            if root == w_root {
                return Ok(PeripheralInfo::Peripheral { component: i, exponent: e / k });
            }
            if root == w_root.inverse() {
                return Ok(PeripheralInfo::Peripheral { component: i, exponent: -e / k });
            }
        }
        Ok(PeripheralInfo::NotPeripheral)
    }

    /// Primitive boundary classes of distinct components are pairwise
    /// distinct, also up to inversion. Holds whenever χ < 0.
    pub fn boundary_classes_distinct(&self) -> bool {
        if !self.is_hyperbolic() {
            return true;
        }
        let roots: Vec<CyclicWord> = self
            .boundary
            .iter()
            .map(|w| w.primitive_root().map(|(r, _)| r).unwrap_or_default())
            .collect();
        roots.iter().enumerate().all(|(i, r)| {
            roots[i + 1..].iter().all(|s| s != r && *s != r.inverse())
        })
    }
}

impl fmt::Debug for RibbonSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RibbonSurface(rank {}, order ", self.rank)?;
        for d in &self.order {
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Line-oriented text format:
///
/// ```text
/// # one-holed torus
/// rank 2
/// order a b A B
/// ```
impl FromStr for RibbonSurface {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut rank = None;
        let mut order = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| Error::Syntax { line: line_no, message };
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("rank") if rank.is_none() => {
                    let value = fields
                        .next()
                        .ok_or_else(|| syntax("missing rank value".into()))?;
                    let n: usize = value
                        .parse()
                        .map_err(|_| syntax(format!("invalid rank {value:?}")))?;
                    if fields.next().is_some() {
                        return Err(syntax("trailing text after rank".into()));
                    }
                    rank = Some(n);
                }
                Some("order") if rank.is_some() && order.is_none() => {
                    let mut darts = Vec::new();
                    for token in fields {
                        let mut chars = token.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) => {
                                darts.push(Letter::from_char(c).ok_or(Error::UnknownCharacter(c))?)
                            }
                            _ => return Err(syntax(format!("dart {token:?} is not a single letter"))),
                        }
                    }
                    order = Some(darts);
                }
                Some(other) => return Err(syntax(format!("unexpected {other:?}"))),
                None => unreachable!(),
            }
        }
        let rank = rank.ok_or(Error::Syntax { line: 1, message: "missing `rank` line".into() })?;
        let order = order.ok_or(Error::Syntax { line: 2, message: "missing `order` line".into() })?;
        RibbonSurface::new(rank, order)
    }
}
