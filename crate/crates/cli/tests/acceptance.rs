//! End-to-end acceptance checks, one line of output per criterion.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tabweb::tableau::partitions;
use tabweb::verify::{
    verify_bijection, verify_depth_agreement, verify_extended, verify_promotion_rotation,
    verify_shuffle_join,
};
use tabweb::webmap::Orientation;
use tabweb::{
    count_standard, random_standard, resolve_with_faces, shuffle, MDiagram, Shape,
    StandardTableau, Web,
};
use tabweb_cli::render::{render_mdiagram, render_web};

fn tab(s: &str) -> StandardTableau {
    s.parse().unwrap()
}

/// Arcs by the stack rule: scanning left to right, an entry of row `r + 1`
/// closes the most recent still-open entry of row `r`.
fn oracle_arcs(t: &StandardTableau) -> BTreeSet<(usize, usize, usize)> {
    let word = t.row_word();
    let rows = word.iter().copied().max().map_or(0, |m| m + 1);
    let mut open: Vec<Vec<usize>> = vec![Vec::new(); rows];
    let mut arcs = BTreeSet::new();
    for (i, &r) in word.iter().enumerate() {
        let p = i + 1;
        if r > 0 {
            let lo = open[r - 1].pop().expect("standard tableau");
            arcs.insert((lo, p, r));
        }
        open[r].push(p);
    }
    arcs
}

fn arcs_of(d: &MDiagram) -> BTreeSet<(usize, usize, usize)> {
    d.arcs().iter().map(|a| (a.lo, a.hi, a.level)).collect()
}

/// Number of arcs passing over the gap between `p` and `p + 1`.
fn arcs_over_gap(arcs: &BTreeSet<(usize, usize, usize)>, p: usize) -> usize {
    arcs.iter().filter(|&&(lo, hi, _)| lo <= p && p < hi).count()
}

fn interleaving_pairs(arcs: &BTreeSet<(usize, usize, usize)>) -> usize {
    let v: Vec<_> = arcs.iter().collect();
    let mut n = 0;
    for (i, a) in v.iter().enumerate() {
        for b in &v[i + 1..] {
            let ((a0, a1, _), (b0, b1, _)) = (**a, **b);
            if (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1) {
                n += 1;
            }
        }
    }
    n
}

/// Three-row ballot sequences of length `3n` ending balanced.
fn ballot_count(n: usize) -> u128 {
    let mut ways: BTreeMap<(usize, usize, usize), u128> = BTreeMap::new();
    ways.insert((0, 0, 0), 1);
    for _ in 0..3 * n {
        let mut next = BTreeMap::new();
        for (&(a, b, c), &w) in &ways {
            for s in [(a + 1, b, c), (a, b + 1, c), (a, b, c + 1)] {
                if s.0 >= s.1 && s.1 >= s.2 && s.0 <= n {
                    *next.entry(s).or_insert(0) += w;
                }
            }
        }
        ways = next;
    }
    ways.get(&(n, n, n)).copied().unwrap_or(0)
}

fn nkk_shapes(max_boxes: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for k in 1..=max_boxes / 2 {
        for n in 0..=k.min(max_boxes - 2 * k) {
            v.push((n, k));
        }
    }
    v
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tabweb_cli::run(
        std::iter::once("tabweb").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, out)
}

/// Tableau, arcs as `(lo, hi, level)`, crossings, depth above each gap.
type Golden = (&'static str, [(usize, usize, usize); 4], usize, [usize; 5]);

const GOLDEN: [Golden; 5] = [
    ("1 4 / 2 5 / 3 6", [(1, 2, 1), (2, 3, 2), (4, 5, 1), (5, 6, 2)], 0, [1, 1, 0, 1, 1]),
    ("1 2 / 3 5 / 4 6", [(2, 3, 1), (3, 4, 2), (1, 5, 1), (5, 6, 2)], 0, [1, 2, 2, 1, 1]),
    ("1 3 / 2 4 / 5 6", [(1, 2, 1), (3, 4, 1), (4, 5, 2), (2, 6, 2)], 0, [1, 1, 2, 2, 1]),
    ("1 2 / 3 4 / 5 6", [(2, 3, 1), (1, 4, 1), (4, 5, 2), (3, 6, 2)], 1, [1, 2, 2, 2, 1]),
    ("1 3 / 2 5 / 4 6", [(1, 2, 1), (3, 5, 1), (2, 4, 2), (5, 6, 2)], 1, [1, 1, 2, 1, 1]),
];

fn criterion_1() {
    for (text, arcs, crossings, gaps) in GOLDEN {
        let t = tab(text);
        let d = MDiagram::from_tableau(&t);
        let expected: BTreeSet<_> = arcs.into_iter().collect();
        assert_eq!(arcs_of(&d), expected, "{text}: arcs");
        assert_eq!(oracle_arcs(&t), expected, "{text}: oracle arcs");

        let res = resolve_with_faces(&d).unwrap();
        let ms = d.ms().len();
        let connectors = (res.web.num_internal() - ms) / 2;
        assert_eq!(connectors, crossings, "{text}: web crossings");
        assert_eq!(interleaving_pairs(&expected), crossings, "{text}: interleavings");

        let circle = res.arrangement.circle_depth();
        let path = res.web.path_depth();
        assert_eq!(circle.faces[circle.outer].depth, 0);
        assert_eq!(path.faces[path.outer].depth, 0);
        for (p, &want) in (1..=5).zip(gaps.iter()) {
            assert_eq!(arcs_over_gap(&expected, p), want, "{text}: gap {p} oracle");
            let cf = circle
                .faces
                .iter()
                .position(|f| f.witnesses.contains(&p))
                .unwrap();
            let wf = path
                .faces
                .iter()
                .position(|f| f.witnesses.contains(&p))
                .unwrap();
            assert_eq!(circle.faces[cf].depth, want, "{text}: circle depth at gap {p}");
            assert_eq!(path.faces[wf].depth, want, "{text}: path depth at gap {p}");
            assert_eq!(res.face_map[cf], wf, "{text}: face identity at gap {p}");
        }
    }
}

fn criterion_2() {
    for (n, want) in [(1, 1u128), (2, 5), (3, 42), (4, 462)] {
        assert_eq!(ballot_count(n), want);
        assert_eq!(count_standard(&Shape::three_by(n)), want);
        let report = verify_bijection(n).unwrap();
        assert!(report.passed(), "{:?}", report.lines());
        assert_eq!(report.instances as u128, want);
        let forms: BTreeSet<String> = tabweb::enumerate_standard(&Shape::three_by(n))
            .map(|t| Web::from_tableau(&t).unwrap().canonical_form())
            .collect();
        assert_eq!(forms.len() as u128, want);
    }
}

fn criterion_3() {
    for n in 1..=4 {
        let report = verify_depth_agreement(n).unwrap();
        assert!(report.passed(), "{:?}", report.lines());
        assert_eq!(report.instances as u128, ballot_count(n));
        // faces on the baseline, against the arc-count oracle
        for t in tabweb::enumerate_standard(&Shape::three_by(n)) {
            let arcs = oracle_arcs(&t);
            let res = resolve_with_faces(&MDiagram::from_tableau(&t)).unwrap();
            assert!(res.face_map_is_bijective());
            let circle = res.arrangement.circle_depth();
            let path = res.web.path_depth();
            for (cf, face) in circle.faces.iter().enumerate() {
                let wf = res.face_map[cf];
                assert_eq!(face.depth, path.faces[wf].depth);
                for &p in &face.witnesses {
                    assert_eq!(face.depth, arcs_over_gap(&arcs, p));
                    assert!(path.faces[wf].witnesses.contains(&p));
                }
            }
        }
    }
}

/// Expected depth change at each label of an `(n,k,k)` tableau.
fn oracle_deltas(t: &StandardTableau) -> Vec<i64> {
    let arcs = oracle_arcs(t);
    let closes_up: BTreeSet<usize> = arcs.iter().filter(|a| a.2 == 2).map(|a| a.0).collect();
    t.row_word()
        .iter()
        .enumerate()
        .map(|(i, &r)| match r {
            0 => 1,
            1 if closes_up.contains(&(i + 1)) => 0,
            _ => -1,
        })
        .collect()
}

fn criterion_4() {
    for (n, k) in nkk_shapes(12) {
        let report = verify_extended(n, k).unwrap();
        assert!(report.passed(), "{:?}", report.lines());
        let shape = Shape::nkk(n, k).unwrap();
        assert_eq!(report.instances as u128, count_standard(&shape));
        for t in tabweb::enumerate_standard(&shape) {
            let w = Web::from_tableau(&t).unwrap();
            let profile = w.boundary_depth_profile();
            assert_eq!(profile.deltas, oracle_deltas(&t), "{}", tabweb::compact(&t));
            let sources = profile
                .orientations
                .iter()
                .filter(|&&o| o == Orientation::Source)
                .count();
            assert_eq!(sources, 3 * n + (k - n));
            assert_eq!(profile.orientations.len() - sources, k - n);
            assert_eq!(w.extended_depth_map().unwrap(), t);
        }
    }
}

fn criterion_5() {
    assert_eq!(tab("1 4 / 2 5 / 3").promote().unwrap(), tab("1 3 / 2 4 / 5"));
    for n in 1..=4 {
        let report = verify_promotion_rotation(n).unwrap();
        assert!(report.passed(), "{:?}", report.lines());
        assert_eq!(report.instances as u128, ballot_count(n) + 1);
        assert_eq!(report.expected_mismatches.len(), 1);
        for t in tabweb::enumerate_standard(&Shape::three_by(n)) {
            let rotated = Web::from_tableau(&t).unwrap().rotate();
            let promoted = Web::from_tableau(&t.promote().unwrap()).unwrap();
            assert_eq!(rotated.canonical_form(), promoted.canonical_form());
        }
    }
    let t = tab("1 4 / 2 5 / 3");
    let rotated = Web::from_tableau(&t).unwrap().rotate();
    let promoted = Web::from_tableau(&t.promote().unwrap()).unwrap();
    assert_ne!(rotated.canonical_form(), promoted.canonical_form());
}

fn criterion_6() {
    let worked = shuffle(&tab("1 3 / 2 5 / 4 6"), 3, &tab("1 2 / 3 4 / 5 6")).unwrap();
    assert_eq!(worked, tab("1 2 4 6 / 3 5 8 10 / 7 9 11 12"));

    let report = verify_shuffle_join(7, 200);
    assert!(report.passed(), "{:?}", report.lines());
    assert_eq!(report.instances, 402);
    assert_eq!(report.expected_mismatches.len(), 1);

    let inner = tab("1 / 2");
    let outer = tab("1 / 2 / 3");
    let s = shuffle(&inner, 2, &outer).unwrap();
    assert_eq!(s, tab("1 3 / 2 4 / 5"));
    let joined = MDiagram::from_tableau(&outer)
        .join(2, &MDiagram::from_tableau(&inner))
        .unwrap();
    assert_ne!(MDiagram::from_tableau(&s).arc_set(), joined.arc_set());
}

fn criterion_7() {
    let mut checked = 0;
    for (n, k) in nkk_shapes(12) {
        for t in tabweb::enumerate_standard(&Shape::nkk(n, k).unwrap()) {
            let faces = Web::from_tableau(&t).unwrap().faces();
            for f in faces.faces.iter().filter(|f| f.is_interior()) {
                assert_eq!(f.edges, f.walk.len());
                assert!(f.edges >= 6 && f.edges % 2 == 0, "{}", tabweb::compact(&t));
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

fn criterion_8() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..1000 {
        let size = rng.gen_range(1..=12);
        let rows = if i % 3 == 0 { 5 } else { 3 };
        let shapes = partitions(size, rows);
        let shape = &shapes[rng.gen_range(0..shapes.len())];
        let t = random_standard(shape, &mut rng);
        match i % 3 {
            0 => {
                let text = t.to_string();
                let back: StandardTableau = text.parse().unwrap();
                assert_eq!(back, t);
                assert_eq!(back.to_string(), text);
            }
            1 => {
                let d = MDiagram::from_tableau(&t);
                let text = d.to_string();
                let back: MDiagram = text.parse().unwrap();
                assert_eq!(back, d);
                assert_eq!(back.to_string(), text);
            }
            _ => {
                let mut w = Web::from_tableau(&t).unwrap();
                for _ in 0..rng.gen_range(0..=w.n_boundary()) {
                    w = w.rotate();
                }
                let text = w.to_string();
                let back: Web = text.parse().unwrap();
                assert_eq!(back, w);
                assert_eq!(back.to_string(), text);
            }
        }
    }

    for (text, ..) in GOLDEN {
        let t = tab(text);
        let d = MDiagram::from_tableau(&t);
        let w = Web::from_tableau(&t).unwrap();
        for depths in [false, true] {
            assert_eq!(render_mdiagram(&d, depths), render_mdiagram(&d.clone(), depths));
            assert_eq!(render_web(&w, depths), render_web(&w.rotate().rotate_back(), depths));
        }
        let first = run_cli(&["render", "--depths", text]);
        let second = run_cli(&["render", "--depths", text]);
        assert_eq!(first.0, 0);
        assert_eq!(first, second);
        let web_text = w.rotate().to_string();
        assert_eq!(run_cli(&["render", &web_text]), run_cli(&["render", &web_text]));
    }
}

trait RotateBack {
    fn rotate_back(&self) -> Web;
}

impl RotateBack for Web {
    fn rotate_back(&self) -> Web {
        let mut w = self.clone();
        for _ in 1..self.n_boundary() {
            w = w.rotate();
        }
        w
    }
}

fn main() {
    let criteria: [(&str, fn()); 8] = [
        ("golden 3x2 arcs, crossings and face depths", criterion_1),
        ("bijection for 3xn, n = 1..4", criterion_2),
        ("circle depth equals path depth face by face", criterion_3),
        ("boundary deltas and census on (n,k,k), <= 12 boxes", criterion_4),
        ("promotion matches rotation on 3xn, n <= 4", criterion_5),
        ("shuffle and join", criterion_6),
        ("interior faces have even size >= 6", criterion_7),
        ("round trips and deterministic rendering", criterion_8),
    ];
    std::panic::set_hook(Box::new(|info| eprintln!("  {info}")));
    let mut failed = 0;
    for (i, (desc, check)) in criteria.iter().enumerate() {
        let ok = catch_unwind(AssertUnwindSafe(check)).is_ok();
        println!("criterion {}: {} {desc}", i + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
