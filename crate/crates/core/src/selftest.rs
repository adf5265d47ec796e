//! Seeded property suites over random surfaces and classes.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bracket::{band_consistent, bracket, bracket_chain, bracket_words, build_strand_pair};
use crate::chain::Chain;
use crate::enumerate::{classes_up_to, random_class, random_word};
use crate::error::Result;
use crate::free_words::{Letter, Word};
use crate::surface::RibbonSurface;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    pub rank_max: usize,
    pub len_max: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { rank_max: 3, len_max: 5, trials: 200, seed: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    /// Up to a handful of failing cases, rendered.
    pub failures: Vec<String>,
    pub failed: usize,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, cases: 0, failures: Vec::new(), failed: 0 }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub config: SelftestConfig,
    pub surfaces: Vec<RibbonSurface>,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn total_cases(&self) -> usize {
        self.suites.iter().map(|s| s.cases).sum()
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "seed {} rank-max {} len-max {} trials {}",
            c.seed, c.rank_max, c.len_max, c.trials
        )?;
        for s in &self.surfaces {
            write!(f, "surface rank {} order ", s.rank())?;
            for d in s.dart_order() {
                write!(f, "{d}")?;
            }
            writeln!(f)?;
        }
        for suite in &self.suites {
            writeln!(
                f,
                "{}: {} cases, {} passed, {} failed",
                suite.name,
                suite.cases,
                suite.cases - suite.failed,
                suite.failed
            )?;
            for msg in &suite.failures {
                writeln!(f, "  FAIL {msg}")?;
            }
        }
        write!(
            f,
            "{}: {} cases",
            if self.passed() { "PASS" } else { "FAIL" },
            self.total_cases()
        )
    }
}

/// A uniformly random one-vertex ribbon surface of the given rank.
pub fn random_surface<R: Rng>(rank: usize, rng: &mut R) -> RibbonSurface {
    let mut darts: Vec<Letter> = (0..2 * rank).map(Letter::from_index).collect();
    darts.shuffle(rng);
    RibbonSurface::new(rank, darts).expect("a permutation of all darts is a valid surface")
}

/// Torus and pants, plus one fixed and one random surface for each rank
/// from 3 up to `rank_max`.
pub fn test_surfaces<R: Rng>(rank_max: usize, rng: &mut R) -> Vec<RibbonSurface> {
    let mut out = vec![
        RibbonSurface::from_darts(2, "abAB").unwrap(),
        RibbonSurface::from_darts(2, "aAbB").unwrap(),
    ];
    for rank in 3..=rank_max.min(crate::free_words::MAX_RANK) {
        let extra: String = (2..rank)
            .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
            .map(Letter::to_char)
            .collect();
        out.push(RibbonSurface::from_darts(rank, &format!("abAB{extra}")).unwrap());
        out.push(random_surface(rank, rng));
    }
    out
}

pub fn run(config: SelftestConfig) -> Result<SelftestReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let surfaces = test_surfaces(config.rank_max.max(2), &mut rng);
    let len = config.len_max.max(1);

    let mut skew = SuiteResult::new("skew-symmetry");
    let mut jacobi = SuiteResult::new("jacobi");
    let mut peripheral = SuiteResult::new("peripheral-annihilation");
    let mut bands = SuiteResult::new("band-consistency");
    let mut conjugation = SuiteResult::new("conjugation-invariance");

    for s in &surfaces {
        let rank = s.rank();
        for _ in 0..config.trials {
            let (x, y) = (random_class(rank, len, &mut rng), random_class(rank, len, &mut rng));
            let xy = bracket(s, &x, &y)?;
            let yx = bracket(s, &y, &x)?;
            skew.record(xy == yx.negate(), || format!("{s:?} [{x},{y}] = {xy}, [{y},{x}] = {yx}"));

            let (sx, sy) = build_strand_pair(s, &x, &y)?;
            bands.record(band_consistent(rank, &[&sx, &sy]), || format!("{s:?} {x} {y}"));

            let g = random_word(rank, rng.gen_range(0..=len), &mut rng);
            let k = rng.gen_range(0..x.len());
            let spelled = g.concat(&x.rotation(k)).concat(&g.invert());
            let moved = bracket_words(s, &spelled, &Word::from(y.clone()))?;
            conjugation.record(moved == xy, || format!("{s:?} {spelled} vs {x} against {y}"));
        }

        let others = classes_up_to(rank, len);
        for w in s.boundary_words() {
            for y in &others {
                let b = bracket(s, w, y)?;
                peripheral.record(b.is_zero(), || format!("{s:?} [{w},{y}] = {b}"));
            }
        }
    }

    for _ in 0..config.trials {
        let s = &surfaces[rng.gen_range(0..surfaces.len())];
        let rank = s.rank();
        let [x, y, z] = [0; 3].map(|_| Chain::from_class(random_class(rank, len, &mut rng)));
        let cyclic_sum = [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)]
            .into_iter()
            .try_fold(Chain::zero(), |acc, (p, q, r)| -> Result<Chain> {
                Ok(acc.add(&bracket_chain(s, &bracket_chain(s, p, q)?, r)?))
            })?;
        jacobi.record(cyclic_sum.is_zero(), || format!("{s:?} {x} {y} {z}: {cyclic_sum}"));
    }

    Ok(SelftestReport {
        config,
        surfaces,
        suites: vec![skew, jacobi, peripheral, bands, conjugation],
    })
}
