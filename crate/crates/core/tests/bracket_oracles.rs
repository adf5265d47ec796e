//! The bracket checked against routes that share none of the strand sorting:
//! a layout with arbitrary (random) strand order in every band, and the
//! algebraic intersection number read off from homology.

use std::collections::BTreeMap;

use goldman::enumerate::{classes_up_to, random_class};
use goldman::selftest::random_surface;
use goldman::{bracket, bracket_words, build_strand_pair, Chain, CyclicWord, Letter, RibbonSurface, Word};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Any placement of strands inside the bands gives transverse
/// representatives, so the signed sum over chord crossings is the bracket
/// whatever order is chosen.
fn shuffled_layout_bracket(s: &RibbonSurface, x: &CyclicWord, y: &CyclicWord, seed: u64) -> Chain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = [x.letters().to_vec(), y.letters().to_vec()];
    // band -> list of (curve, letter index)
    let mut bands: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (c, w) in words.iter().enumerate() {
        for (t, l) in w.iter().enumerate() {
            bands.entry(l.generator()).or_default().push((c, t));
        }
    }
    // a point on the disk boundary: (ccw position of its arc, rank within arc)
    let mut point: BTreeMap<(usize, usize, bool), (usize, usize)> = BTreeMap::new();
    for (&g, passages) in bands.iter_mut() {
        passages.shuffle(&mut rng);
        let n = passages.len();
        let plus = s.position(Letter::new(g, false));
        let minus = s.position(Letter::new(g, true));
        for (k, &(c, t)) in passages.iter().enumerate() {
            let l = words[c][t];
            // ccw order on the positive arc is reversed on the negative arc
            let (leave, arrive) = if l.is_inverse() {
                ((minus, n - 1 - k), (plus, k))
            } else {
                ((plus, k), (minus, n - 1 - k))
            };
            point.insert((c, t, true), leave);
            point.insert((c, t, false), arrive);
        }
    }
    let chord = |c: usize, i: usize| {
        let n = words[c].len();
        (point[&(c, (i + n - 1) % n, false)], point[&(c, i, true)])
    };
    // points listed ccw from `from`: strictly between from and to?
    let inside = |from: (usize, usize), to: (usize, usize), p: (usize, usize)| {
        if from < to {
            from < p && p < to
        } else {
            p > from || p < to
        }
    };
    let mut out = Chain::zero();
    for i in 0..words[0].len() {
        let (xi, xo) = chord(0, i);
        for j in 0..words[1].len() {
            let (yi, yo) = chord(1, j);
            let (a, b) = (inside(xi, xo, yi), inside(xi, xo, yo));
            if a != b {
                let product = x.rotation(i).concat(&y.rotation(j)).cyclic_canonical();
                out.add_term(product, if a { 1 } else { -1 });
            }
        }
    }
    out
}

/// Algebraic intersection from exponent sums and the pairing of generator loops.
fn homology_intersection(s: &RibbonSurface, x: &CyclicWord, y: &CyclicWord) -> i64 {
    let n = s.rank();
    let exponent_sums = |w: &CyclicWord| {
        let mut h = vec![0i64; n];
        for l in w.letters() {
            h[l.generator()] += l.sign() as i64;
        }
        h
    };
    let (hx, hy) = (exponent_sums(x), exponent_sums(y));
    let mut total = 0;
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..n {
            if i == j || hx[i] == 0 || hy[j] == 0 {
                continue;
            }
            // generator loop i runs from arc x_i⁻¹ to arc x_i
            let (i_in, i_out) = (s.position(Letter::new(i, true)), s.position(Letter::new(i, false)));
            let (j_in, j_out) = (s.position(Letter::new(j, true)), s.position(Letter::new(j, false)));
            let between = |p: usize| {
                if i_in < i_out {
                    i_in < p && p < i_out
                } else {
                    p > i_in || p < i_out
                }
            };
            let pairing = match (between(j_in), between(j_out)) {
                (true, false) => 1,
                (false, true) => -1,
                _ => 0,
            };
            total += hx[i] * hy[j] * pairing;
        }
    }
    total
}

fn fixed_surfaces() -> Vec<RibbonSurface> {
    vec![
        RibbonSurface::from_darts(2, "abAB").unwrap(),
        RibbonSurface::from_darts(2, "aAbB").unwrap(),
        RibbonSurface::from_darts(3, "abABcC").unwrap(),
        RibbonSurface::from_darts(3, "acBAbC").unwrap(),
    ]
}

fn surface_and_pair(max_len: usize) -> impl Strategy<Value = (RibbonSurface, CyclicWord, CyclicWord)> {
    (2usize..=3, any::<u64>()).prop_map(move |(rank, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_surface(rank, &mut rng);
        let x = random_class(rank, max_len, &mut rng);
        let y = random_class(rank, max_len, &mut rng);
        (s, x, y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_shuffled_layouts((s, x, y) in surface_and_pair(7), seed in any::<u64>()) {
        prop_assert_eq!(bracket(&s, &x, &y).unwrap(), shuffled_layout_bracket(&s, &x, &y, seed));
    }

    #[test]
    fn coefficient_sum_is_intersection_number((s, x, y) in surface_and_pair(8)) {
        prop_assert_eq!(bracket(&s, &x, &y).unwrap().coefficient_sum(), homology_intersection(&s, &x, &y));
    }

    #[test]
    fn skew_symmetric((s, x, y) in surface_and_pair(8)) {
        prop_assert_eq!(bracket(&s, &x, &y).unwrap(), bracket(&s, &y, &x).unwrap().negate());
    }

    #[test]
    fn representative_independent((s, x, y) in surface_and_pair(6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = goldman::enumerate::random_word(s.rank(), 4, &mut rng);
        let h = goldman::enumerate::random_word(s.rank(), 3, &mut rng);
        let xs = g.concat(&x.rotation(seed as usize % x.len())).concat(&g.invert());
        let ys = h.concat(&y.rotation((seed >> 8) as usize % y.len())).concat(&h.invert());
        prop_assert_eq!(bracket_words(&s, &xs, &ys).unwrap(), bracket(&s, &x, &y).unwrap());
    }

    #[test]
    fn band_consistency((s, x, y) in surface_and_pair(8)) {
        let (sx, sy) = build_strand_pair(&s, &x, &y).unwrap();
        prop_assert!(goldman::bracket::band_consistent(s.rank(), &[&sx, &sy]));
    }
}

#[test]
fn shuffled_layouts_on_fixed_surfaces() {
    for s in fixed_surfaces() {
        let classes = classes_up_to(s.rank(), 3);
        for (k, x) in classes.iter().enumerate() {
            for y in classes.iter().skip(k) {
                assert_eq!(
                    bracket(&s, x, y).unwrap(),
                    shuffled_layout_bracket(&s, x, y, (k * 31 + y.len()) as u64),
                    "{s:?} [{x}, {y}]"
                );
            }
        }
    }
}

#[test]
fn commutator_of_generators_on_torus() {
    // homology classes (1,1) and (1,-1) meet algebraically -2 times
    let t = RibbonSurface::from_darts(2, "abAB").unwrap();
    let x = CyclicWord::parse("ab", 2).unwrap();
    let y = CyclicWord::parse("aB", 2).unwrap();
    let b = bracket(&t, &x, &y).unwrap();
    assert_eq!(b.coefficient_sum(), -2);
    assert_eq!(b, shuffled_layout_bracket(&t, &x, &y, 3));
}

#[test]
fn parallel_powers() {
    for s in fixed_surfaces() {
        // generators and boundary curves are simple: their pushoffs miss them
        let simple: Vec<CyclicWord> = (0..s.rank())
            .map(|g| Word::new([Letter::new(g, false)]).cyclic_canonical())
            .chain(s.boundary_words().iter().cloned())
            .collect();
        for x in &simple {
            for k in [-3i64, -2, -1, 1, 2, 3] {
                let (sx, sy) = build_strand_pair(&s, x, &x.power(k)).unwrap();
                assert!(goldman::crossings(&sx, &sy).is_empty(), "{s:?} {x} vs power {k}");
            }
        }
        // a curve with self-crossings meets its pushoff; [x, x] still cancels,
        // while [x, x^k] for other k need not vanish
        for x in classes_up_to(s.rank(), 4) {
            assert!(bracket(&s, &x, &x).unwrap().is_zero(), "{s:?} {x}");
            for k in [-2i64, -1, 2] {
                let y = x.power(k);
                assert_eq!(bracket(&s, &x, &y).unwrap(), shuffled_layout_bracket(&s, &x, &y, 11));
            }
        }
    }
}

#[test]
fn figure_eight_type_curve_against_its_inverse() {
    // aabb on the torus is not simple; its bracket with its inverse picks up
    // the commutator classes of the two loops at a self-crossing
    let t = RibbonSurface::from_darts(2, "abAB").unwrap();
    let x = CyclicWord::parse("aabb", 2).unwrap();
    let b = bracket(&t, &x, &x.inverse()).unwrap();
    assert_eq!(b.to_string(), "+1*(aabABBAb) -1*(abbaBAAB)");
    assert_eq!(b, shuffled_layout_bracket(&t, &x, &x.inverse(), 5));
}

#[test]
fn conjugated_spellings_with_word_api() {
    let t = RibbonSurface::from_darts(2, "abAB").unwrap();
    let x = Word::parse("bbAabaB", 2).unwrap();
    let y = Word::parse("b", 2).unwrap();
    assert_eq!(
        bracket_words(&t, &x, &y).unwrap(),
        bracket(&t, &x.cyclic_canonical(), &y.cyclic_canonical()).unwrap()
    );
}
