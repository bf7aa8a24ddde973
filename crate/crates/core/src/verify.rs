//! Property suites over exhaustive and seeded random families of tableaux.
//!
//! Every suite returns a [`VerifyReport`] whose text lines are a pure
//! function of the suite parameters and seed. Instances are checked in
//! parallel and failures are sorted before reporting.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::mdiagram::{MDiagram, PointRole};
use crate::tableau::{
    compact, count_standard, enumerate_standard, partitions, random_standard, shuffle, Shape,
    SlideDirection, StandardTableau,
};
use crate::webmap::{resolve, resolve_with_faces, Orientation, VertexKind, Web};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{parameter} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        parameter: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("shape (n,k,k) needs n <= k, got n = {n}, k = {k}")]
    InvalidShape { n: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub instance: String,
    pub property: String,
    pub witness: String,
}

impl Failure {
    fn new(instance: impl Into<String>, property: &str, witness: impl Into<String>) -> Self {
        Failure {
            instance: instance.into(),
            property: property.to_string(),
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: String,
    pub parameters: String,
    pub seed: Option<u64>,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Known counterexamples confirmed to fail as expected.
    pub expected_mismatches: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerifyReport {
    fn new(suite: &str, parameters: String, seed: Option<u64>) -> Self {
        VerifyReport {
            suite: suite.to_string(),
            parameters,
            seed,
            instances: 0,
            failures: Vec::new(),
            expected_mismatches: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines two reports of the same suite. Order does not matter.
    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self.expected_mismatches.extend(other.expected_mismatches);
        self.elapsed += other.elapsed;
        self.failures.sort();
        self.failures.dedup();
        self.expected_mismatches.sort();
        self.expected_mismatches.dedup();
        self
    }

    /// Report text: one `ok` line, or one `FAIL` line per failure, then one
    /// `EXPECTED-MISMATCH` line per confirmed counterexample.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.passed() {
            out.push(format!("ok {} {}", self.suite, self.instances));
        }
        for f in &self.failures {
            out.push(format!(
                "FAIL {} {} {} {}",
                self.suite, f.instance, f.property, f.witness
            ));
        }
        for f in &self.expected_mismatches {
            out.push(format!(
                "EXPECTED-MISMATCH {} {} {} {}",
                self.suite, f.instance, f.property, f.witness
            ));
        }
        out
    }

    fn finish(mut self, start: Instant) -> Self {
        self.failures.sort();
        self.expected_mismatches.sort();
        self.elapsed = start.elapsed();
        self
    }
}

/// Size limits for the exhaustive suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verifier {
    /// Largest `n` for suites over `3 x n` tableaux.
    pub max_columns: usize,
    /// Largest number of boxes for suites over other shapes.
    pub max_boxes: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            max_columns: 5,
            max_boxes: 15,
        }
    }
}

fn tableaux(shape: &Shape) -> Vec<StandardTableau> {
    enumerate_standard(shape).collect()
}

/// Runs `check` on every tableau in parallel and gathers failures.
fn run_all(
    report: &mut VerifyReport,
    items: &[StandardTableau],
    check: impl Fn(&StandardTableau, &str) -> Vec<Failure> + Sync,
) {
    let failures: Vec<Failure> = items
        .par_iter()
        .flat_map_iter(|t| check(t, &compact(t)))
        .collect();
    report.instances += items.len();
    report.failures.extend(failures);
}

fn check_count(report: &mut VerifyReport, shape: &Shape, found: usize) {
    let expected = count_standard(shape);
    if found as u128 != expected {
        report.failures.push(Failure::new(
            shape.to_string(),
            "instance-count",
            format!("enumerated={found},hook-length={expected}"),
        ));
    }
}

impl Verifier {
    fn check_columns(&self, n: usize) -> Result<(), VerifyError> {
        if n > self.max_columns {
            return Err(VerifyError::BoundExceeded {
                parameter: "n",
                value: n,
                bound: self.max_columns,
            });
        }
        Ok(())
    }

    fn check_boxes(&self, boxes: usize) -> Result<(), VerifyError> {
        if boxes > self.max_boxes {
            return Err(VerifyError::BoundExceeded {
                parameter: "boxes",
                value: boxes,
                bound: self.max_boxes,
            });
        }
        Ok(())
    }

    /// Depth map inverts the tableau-to-web map on `3 x n`; webs are
    /// reduced and pairwise distinct.
    pub fn bijection(&self, n: usize) -> Result<VerifyReport, VerifyError> {
        self.check_columns(n)?;
        let start = Instant::now();
        let mut report = VerifyReport::new("bijection", format!("n={n}"), None);
        let shape = Shape::three_by(n);
        let items = tableaux(&shape);
        check_count(&mut report, &shape, items.len());
        let forms: Vec<(String, Result<String, String>)> = items
            .par_iter()
            .map(|t| {
                let id = compact(t);
                let form = Web::from_tableau(t)
                    .map(|w| w.canonical_form())
                    .map_err(|e| e.to_string());
                (id, form)
            })
            .collect();
        run_all(&mut report, &items, |t, id| {
            let web = match Web::from_tableau(t) {
                Ok(w) => w,
                Err(e) => return vec![Failure::new(id, "resolve", e.to_string())],
            };
            let mut out = Vec::new();
            if let Some(w) = web.reducedness() {
                out.push(Failure::new(id, "reduced", w.to_string().replace(' ', "_")));
            }
            match web.depth_map() {
                Ok(back) if back == *t => {}
                Ok(back) => out.push(Failure::new(id, "depth-map-inverse", compact(&back))),
                Err(e) => out.push(Failure::new(id, "depth-map-inverse", e.to_string().replace(' ', "_"))),
            }
            out
        });
        let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
        for (id, form) in &forms {
            if let Ok(form) = form {
                if let Some(prev) = seen.insert(form, id) {
                    report
                        .failures
                        .push(Failure::new(id.clone(), "distinct-webs", prev.to_string()));
                }
            }
        }
        Ok(report.finish(start))
    }

    /// Circle depth of every arrangement face equals the path depth of the
    /// corresponding web face.
    pub fn depth_agreement(&self, n: usize) -> Result<VerifyReport, VerifyError> {
        self.check_columns(n)?;
        let start = Instant::now();
        let mut report = VerifyReport::new("depth-agreement", format!("n={n}"), None);
        let shape = Shape::three_by(n);
        let items = tableaux(&shape);
        check_count(&mut report, &shape, items.len());
        run_all(&mut report, &items, depth_agreement_failures);
        Ok(report.finish(start))
    }

    /// Rotating the web of `T` gives the web of the promotion of `T`, and
    /// the known non-rectangular counterexample still fails.
    pub fn promotion_rotation(&self, n: usize) -> Result<VerifyReport, VerifyError> {
        self.check_columns(n)?;
        let start = Instant::now();
        let mut report = VerifyReport::new("promotion-rotation", format!("n={n}"), None);
        let shape = Shape::three_by(n);
        let items = tableaux(&shape);
        check_count(&mut report, &shape, items.len());
        run_all(&mut report, &items, |t, id| {
            match promotion_matches_rotation(t) {
                Ok(true) => vec![],
                Ok(false) => vec![Failure::new(id, "rotate-equals-promote", "canonical-forms-differ")],
                Err(e) => vec![Failure::new(id, "rotate-equals-promote", e)],
            }
        });

        let t: StandardTableau = "1 4 / 2 5 / 3".parse().expect("literal tableau");
        let id = compact(&t);
        report.instances += 1;
        let promoted = t.promote().expect("nonempty");
        let expected: StandardTableau = "1 3 / 2 4 / 5".parse().expect("literal tableau");
        if promoted != expected {
            report
                .failures
                .push(Failure::new(id.clone(), "promote", compact(&promoted)));
        }
        match promotion_matches_rotation(&t) {
            Ok(false) => report.expected_mismatches.push(Failure::new(
                id,
                "rotate-equals-promote",
                "canonical-forms-differ",
            )),
            Ok(true) => report.failures.push(Failure::new(
                id,
                "expected-mismatch",
                "rotation-matched-promotion",
            )),
            Err(e) => report.failures.push(Failure::new(id, "expected-mismatch", e)),
        }
        Ok(report.finish(start))
    }

    /// Shuffle against join: a fixed worked instance, shuffles at the end
    /// (`i = N`) of arbitrary shapes, shuffles of a rectangular inner
    /// tableau at random `i`, and the known counterexample with a too-short
    /// inner tableau.
    pub fn shuffle_join(&self, seed: u64, trials: usize) -> VerifyReport {
        let start = Instant::now();
        let mut report = VerifyReport::new("shuffle-join", format!("trials={trials}"), Some(seed));
        let max = self.max_boxes.max(2);

        let outer: StandardTableau = "1 2 / 3 4 / 5 6".parse().expect("literal tableau");
        let inner: StandardTableau = "1 3 / 2 5 / 4 6".parse().expect("literal tableau");
        let worked = shuffle(&inner, 3, &outer).expect("position in range");
        let expected: StandardTableau = "1 2 4 6 / 3 5 8 10 / 7 9 11 12"
            .parse()
            .expect("literal tableau");
        report.instances += 1;
        let id = shuffle_id(&inner, 3, &outer);
        if worked != expected {
            report
                .failures
                .push(Failure::new(id.clone(), "worked-example", compact(&worked)));
        }
        if let Some(w) = shuffle_join_mismatch(&inner, 3, &outer) {
            report.failures.push(Failure::new(id, "shuffle-equals-join", w));
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cases = Vec::with_capacity(2 * trials);
        for _ in 0..trials {
            // arbitrary shapes, shuffle after the last entry
            let n_outer = rng.gen_range(1..max);
            let n_inner = rng.gen_range(1..=max - n_outer);
            let outer = random_standard(&random_shape(&mut rng, n_outer), &mut rng);
            let inner = random_standard(&random_shape(&mut rng, n_inner), &mut rng);
            cases.push(("part1", inner, outer.size(), outer));

            // rectangular inner at least as tall as the outer one
            let n_outer = rng.gen_range(1..=max - 3);
            let outer = random_standard(&random_shape(&mut rng, n_outer), &mut rng);
            let rows = rng.gen_range(outer.num_rows()..=3);
            let cols = rng.gen_range(1..=(max - n_outer) / rows);
            let inner = random_standard(&Shape::rectangle(rows, cols), &mut rng);
            let at = rng.gen_range(0..=outer.size());
            cases.push(("part2", inner, at, outer));
        }
        let failures: Vec<Failure> = cases
            .par_iter()
            .filter_map(|(part, inner, at, outer)| {
                shuffle_join_mismatch(inner, *at, outer)
                    .map(|w| Failure::new(shuffle_id(inner, *at, outer), part, w))
            })
            .collect();
        report.instances += cases.len();
        report.failures.extend(failures);

        let outer: StandardTableau = "1 / 2 / 3".parse().expect("literal tableau");
        let inner: StandardTableau = "1 / 2".parse().expect("literal tableau");
        let id = shuffle_id(&inner, 2, &outer);
        report.instances += 1;
        match shuffle_join_mismatch(&inner, 2, &outer) {
            Some(w) => report
                .expected_mismatches
                .push(Failure::new(id, "shuffle-equals-join", w)),
            None => report.failures.push(Failure::new(
                id,
                "expected-mismatch",
                "shuffle-matched-join",
            )),
        }
        report.finish(start)
    }

    /// Extended depth map, boundary deltas, source/sink census and face
    /// sizes over all tableaux of shape `(n,k,k)`.
    pub fn extended(&self, n: usize, k: usize) -> Result<VerifyReport, VerifyError> {
        if n > k {
            return Err(VerifyError::InvalidShape { n, k });
        }
        self.check_boxes(n + 2 * k)?;
        let start = Instant::now();
        let mut report = VerifyReport::new("extended", format!("n={n},k={k}"), None);
        let shape = Shape::nkk(n, k).expect("n <= k");
        let items = if shape.is_empty() {
            vec![StandardTableau::empty()]
        } else {
            tableaux(&shape)
        };
        check_count(&mut report, &shape, items.len());
        run_all(&mut report, &items, |t, id| extended_failures(t, id, n, k));
        Ok(report.finish(start))
    }

    /// Vertical promotion slides agree with the arc characterization over
    /// every tableau with at most three rows and at most `bound` boxes.
    ///
    /// Every entry that slides down is the predicted one. The converse fails
    /// when the row above the hole is shorter than the hole's row: the hole
    /// can leave through the end of its row before reaching the predicted
    /// entry. Those cases are counted and reported as one expected mismatch
    /// naming the smallest instance.
    pub fn slide_lemma(&self, bound: usize) -> Result<VerifyReport, VerifyError> {
        self.check_boxes(bound)?;
        let start = Instant::now();
        let mut report = VerifyReport::new("slide-lemma", format!("bound={bound}"), None);
        let mut short_rows: Vec<Failure> = Vec::new();
        let mut first: Option<Failure> = None;
        for size in 1..=bound {
            for shape in partitions(size, 3) {
                let items = tableaux(&shape);
                check_count(&mut report, &shape, items.len());
                let mut sized = VerifyReport::new("slide-lemma", String::new(), None);
                run_all(&mut sized, &items, slide_lemma_failures);
                report.instances += sized.instances;
                for f in sized.failures {
                    if f.property == SHORT_ROW {
                        short_rows.push(f);
                    } else {
                        report.failures.push(f);
                    }
                }
            }
            if first.is_none() {
                first = short_rows.iter().min().cloned();
            }
        }
        if let Some(f) = first {
            report.expected_mismatches.push(Failure::new(
                f.instance,
                SHORT_ROW,
                format!("{},count={}", f.witness, short_rows.len()),
            ));
        }
        Ok(report.finish(start))
    }
}

pub fn verify_bijection(n: usize) -> Result<VerifyReport, VerifyError> {
    Verifier::default().bijection(n)
}

pub fn verify_depth_agreement(n: usize) -> Result<VerifyReport, VerifyError> {
    Verifier::default().depth_agreement(n)
}

pub fn verify_promotion_rotation(n: usize) -> Result<VerifyReport, VerifyError> {
    Verifier::default().promotion_rotation(n)
}

pub fn verify_shuffle_join(seed: u64, trials: usize) -> VerifyReport {
    Verifier::default().shuffle_join(seed, trials)
}

pub fn verify_extended(n: usize, k: usize) -> Result<VerifyReport, VerifyError> {
    Verifier::default().extended(n, k)
}

pub fn verify_slide_lemma(bound: usize) -> Result<VerifyReport, VerifyError> {
    Verifier::default().slide_lemma(bound)
}

fn depth_agreement_failures(t: &StandardTableau, id: &str) -> Vec<Failure> {
    let res = match resolve_with_faces(&MDiagram::from_tableau(t)) {
        Ok(r) => r,
        Err(e) => return vec![Failure::new(id, "resolve", e.to_string().replace(' ', "_"))],
    };
    if !res.face_map_is_bijective() {
        return vec![Failure::new(id, "face-map", "not-a-bijection")];
    }
    let circle = res.arrangement.circle_depth();
    let path = res.web.path_depth();
    let mut out = Vec::new();
    for (fa, face) in circle.faces.iter().enumerate() {
        let fw = res.face_map[fa];
        if face.depth != path.faces[fw].depth {
            out.push(Failure::new(
                id,
                "circle-equals-path-depth",
                format!("face{fa}:circle={},path={}", face.depth, path.faces[fw].depth),
            ));
        }
    }
    out
}

fn promotion_matches_rotation(t: &StandardTableau) -> Result<bool, String> {
    let rotated = Web::from_tableau(t).map_err(|e| e.to_string())?.rotate();
    let promoted = t.promote().map_err(|e| e.to_string())?;
    let web = Web::from_tableau(&promoted).map_err(|e| e.to_string())?;
    Ok(rotated.canonical_form() == web.canonical_form())
}

fn shuffle_id(inner: &StandardTableau, at: usize, outer: &StandardTableau) -> String {
    format!("{}@{at}@{}", compact(inner), compact(outer))
}

/// Compares the m-diagram (and, for three rows, the web) of the shuffle
/// with the join of the pieces. Returns a witness on mismatch.
fn shuffle_join_mismatch(
    inner: &StandardTableau,
    at: usize,
    outer: &StandardTableau,
) -> Option<String> {
    let shuffled = match shuffle(inner, at, outer) {
        Ok(s) => s,
        Err(e) => return Some(e.to_string().replace(' ', "_")),
    };
    let lhs = MDiagram::from_tableau(&shuffled);
    let outer_d = MDiagram::from_tableau(outer);
    let inner_d = MDiagram::from_tableau(inner);
    let rhs = match outer_d.join(at, &inner_d) {
        Ok(d) => d,
        Err(e) => return Some(e.to_string().replace(' ', "_")),
    };
    if lhs.arc_set() != rhs.arc_set() {
        return Some(format!("shuffle={}", compact(&shuffled)));
    }
    if lhs.is_three_row() && outer_d.is_three_row() && inner_d.is_three_row() {
        let webs = (resolve(&lhs), resolve(&outer_d), resolve(&inner_d));
        match webs {
            (Ok(l), Ok(o), Ok(i)) => match o.join(at, &i) {
                Ok(j) if j.canonical_form() == l.canonical_form() => {}
                Ok(_) => return Some("webs-differ".into()),
                Err(e) => return Some(e.to_string().replace(' ', "_")),
            },
            _ => return Some("resolve-failed".into()),
        }
    }
    None
}

fn random_shape(rng: &mut ChaCha8Rng, size: usize) -> Shape {
    let all = partitions(size, 3);
    all[rng.gen_range(0..all.len())].clone()
}

fn extended_failures(t: &StandardTableau, id: &str, n: usize, k: usize) -> Vec<Failure> {
    let d = MDiagram::from_tableau(t);
    let web = match resolve(&d) {
        Ok(w) => w,
        Err(e) => return vec![Failure::new(id, "resolve", e.to_string().replace(' ', "_"))],
    };
    let mut out = Vec::new();
    match web.extended_depth_map() {
        Ok(back) if back == *t => {}
        Ok(back) => out.push(Failure::new(id, "extended-inverse", compact(&back))),
        Err(e) => out.push(Failure::new(id, "extended-inverse", e.to_string().replace(' ', "_"))),
    }
    if n == k {
        match web.depth_map() {
            Ok(back) if back == *t => {}
            _ => out.push(Failure::new(id, "agrees-with-depth-map", "differs")),
        }
    }

    let profile = web.boundary_depth_profile();
    for p in 1..=d.n_points() {
        let expected = match d.role(p) {
            PointRole::FirstOfM | PointRole::IsolatedLo => 1,
            PointRole::MiddleOfM => 0,
            PointRole::ThirdOfM | PointRole::IsolatedHi => -1,
            PointRole::Unused | PointRole::Chain => i64::MIN,
        };
        if profile.deltas[p - 1] != expected {
            out.push(Failure::new(
                id,
                "delta-by-role",
                format!("label{p}:delta={}", profile.deltas[p - 1]),
            ));
        }
    }
    let sinks = profile
        .orientations
        .iter()
        .filter(|&&o| o == Orientation::Sink)
        .count();
    let sources = profile.orientations.len() - sinks;
    if sources != 3 * n + (k - n) || sinks != k - n {
        out.push(Failure::new(
            id,
            "source-sink-census",
            format!("sources={sources},sinks={sinks}"),
        ));
    }

    let bipartite = web.edges().iter().all(|&(a, b)| {
        web.vertices()[a].orientation == Orientation::Source
            && web.vertices()[b].orientation == Orientation::Sink
    });
    if !bipartite {
        out.push(Failure::new(id, "even-cycles", "edge-between-like-vertices"));
    }
    let internal_ok = web
        .vertices()
        .iter()
        .enumerate()
        .all(|(v, vx)| match vx.kind {
            VertexKind::Internal => web.degree(v) == 3,
            VertexKind::Boundary(_) => web.degree(v) == 1,
        });
    if !internal_ok {
        out.push(Failure::new(id, "degrees", "wrong-degree"));
    }
    if let Some(w) = web.reducedness() {
        out.push(Failure::new(id, "reduced", w.to_string().replace(' ', "_")));
    }
    for (f, face) in web.faces().faces.iter().enumerate() {
        if face.is_interior() && (face.edges < 6 || face.edges % 2 == 1) {
            out.push(Failure::new(
                id,
                "interior-face-size",
                format!("face{f}:edges={}", face.edges),
            ));
        }
    }
    out
}

const SHORT_ROW: &str = "no-slide-under-shorter-row";

/// For each row the hole passes through, predicts which entry of the row
/// above slides down: the largest entry there joined by an arc to an entry
/// no larger than the one that vacated the hole's cell, provided it sits
/// at or right of the hole's column.
fn slide_lemma_failures(t: &StandardTableau, id: &str) -> Vec<Failure> {
    let path = t.promotion_witness().expect("nonempty tableau");
    let d = MDiagram::from_tableau(t);
    let shape = t.shape();
    let mut out = Vec::new();
    // cell where the hole enters each row, and the entry that left it
    let mut entries: Vec<(usize, usize, usize)> = vec![(0, 0, 1)];
    for s in path.vertical_slides() {
        entries.push((s.from.0, s.from.1, s.entry));
    }
    for &(row, col, b) in &entries {
        let predicted = d
            .arcs()
            .iter()
            .filter(|a| a.level == row + 1 && a.lo <= b)
            .map(|a| a.hi)
            .max()
            .filter(|&top| t.cell_of(top).map(|(_, c)| c >= col).unwrap_or(false));
        let actual = path
            .slides
            .iter()
            .find(|s| s.direction == SlideDirection::Down && s.to.0 == row)
            .map(|s| s.entry);
        if predicted == actual {
            continue;
        }
        let show = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
        let witness = format!("row{row}:predicted={},actual={}", show(predicted), show(actual));
        let shorter_above = shape.row_len(row + 1) < shape.row_len(row);
        let property = if actual.is_none() && shorter_above {
            SHORT_ROW
        } else {
            "slide-down"
        };
        out.push(Failure::new(id, property, witness));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bijection_counts() {
        for (n, count) in [(1, 1), (2, 5), (3, 42)] {
            let r = verify_bijection(n).unwrap();
            assert!(r.passed(), "{:?}", r.lines());
            assert_eq!(r.instances, count);
            assert_eq!(r.lines(), vec![format!("ok bijection {count}")]);
        }
    }

    #[test]
    fn bound_is_enforced() {
        let v = Verifier {
            max_columns: 2,
            max_boxes: 6,
        };
        assert_eq!(
            v.bijection(3).unwrap_err(),
            VerifyError::BoundExceeded {
                parameter: "n",
                value: 3,
                bound: 2
            }
        );
        assert!(v.slide_lemma(7).is_err());
        assert_eq!(
            v.extended(3, 2).unwrap_err(),
            VerifyError::InvalidShape { n: 3, k: 2 }
        );
    }

    #[test]
    fn promotion_suite_reports_the_counterexample() {
        let r = verify_promotion_rotation(2).unwrap();
        assert!(r.passed(), "{:?}", r.lines());
        assert_eq!(r.instances, 6);
        assert_eq!(r.expected_mismatches.len(), 1);
        assert!(r.lines()[1].starts_with("EXPECTED-MISMATCH promotion-rotation 1,4/2,5/3 "));
    }

    #[test]
    fn shuffle_suite_is_deterministic() {
        let a = verify_shuffle_join(7, 20);
        let b = verify_shuffle_join(7, 20);
        assert!(a.passed(), "{:?}", a.lines());
        assert_eq!(a.lines(), b.lines());
        assert_eq!(a.instances, 42);
        assert_eq!(a.expected_mismatches.len(), 1);
    }

    #[test]
    fn small_extended_and_slides() {
        let r = verify_extended(1, 2).unwrap();
        assert!(r.passed(), "{:?}", r.lines());
        assert_eq!(r.instances as u128, count_standard(&Shape::nkk(1, 2).unwrap()));
        let r = verify_slide_lemma(6).unwrap();
        assert!(r.passed(), "{:?}", r.lines());
        assert_eq!(r.instances, 1 + 2 + 4 + 9 + 21 + 51);
        assert!(r.expected_mismatches.is_empty());
    }

    #[test]
    fn slide_converse_fails_under_a_shorter_row() {
        let r = verify_slide_lemma(8).unwrap();
        assert!(r.passed(), "{:?}", r.lines());
        assert_eq!(r.expected_mismatches.len(), 1);
        let m = &r.expected_mismatches[0];
        assert_eq!(m.instance, "1,2,5/3,4,6/7,8");
        assert_eq!(m.witness, "row1:predicted=8,actual=none,count=1");
    }

    #[test]
    fn merge_sorts_failures() {
        let mut a = VerifyReport::new("s", String::new(), None);
        a.failures.push(Failure::new("b", "p", "w"));
        let mut b = VerifyReport::new("s", String::new(), None);
        b.failures.push(Failure::new("a", "p", "w"));
        let ab = a.clone().merge(b.clone());
        let ba = b.merge(a);
        assert_eq!(ab.lines(), ba.lines());
        assert_eq!(ab.lines()[0], "FAIL s a p w");
    }
}
