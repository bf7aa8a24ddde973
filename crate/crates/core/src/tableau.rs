//! Standard Young tableaux of arbitrary shape.
//!
//! Rows are indexed bottom row first: row 0 is the longest row and the
//! entry `1` always sits in its leftmost box. Columns increase upward.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::format::ParseError;

/// A cell of a tableau, `(row, column)` with row 0 at the bottom.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row {row} has length zero or is longer than the row below it")]
    InvalidShape { row: usize },
    #[error("row {row} has {found} entries but the shape requires {expected}")]
    ShapeMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {entry} at cell ({row}, {col}) is outside 1..={max}")]
    EntryOutOfRange {
        entry: usize,
        row: usize,
        col: usize,
        max: usize,
    },
    #[error("entry {entry} at cell ({row}, {col}) is used more than once")]
    DuplicateEntry { entry: usize, row: usize, col: usize },
    #[error("row {row} does not increase at column {col}")]
    RowNotIncreasing { row: usize, col: usize },
    #[error("column {col} does not increase between rows {row} and {}", row + 1)]
    ColumnNotIncreasing { row: usize, col: usize },
    #[error("operation needs a nonempty tableau")]
    EmptyTableau,
    #[error("position {position} is outside 0..={max}")]
    PositionOutOfRange { position: usize, max: usize },
    #[error("shuffled rows do not form a valid shape")]
    InvalidResultShape,
}

/// Row lengths of a Young diagram, bottom row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self, TableauError> {
        for (r, &len) in rows.iter().enumerate() {
            if len == 0 || (r > 0 && len > rows[r - 1]) {
                return Err(TableauError::InvalidShape { row: r });
            }
        }
        Ok(Shape { rows })
    }

    pub fn empty() -> Self {
        Shape { rows: Vec::new() }
    }

    /// `rows` rows of `cols` boxes each.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Shape::empty();
        }
        Shape {
            rows: vec![cols; rows],
        }
    }

    /// The `3 x n` rectangle.
    pub fn three_by(n: usize) -> Self {
        Shape::rectangle(3, n)
    }

    /// Three-row shape with `k` boxes in the bottom and middle rows and
    /// `n <= k` boxes in the top row.
    ///
    /// Written `(n, k, k)` when listed top row first; the bottom-first row
    /// lengths are `[k, k, n]`.
    pub fn nkk(n: usize, k: usize) -> Result<Self, TableauError> {
        if n == 0 {
            Shape::new(if k == 0 { vec![] } else { vec![k, k] })
        } else {
            Shape::new(vec![k, k, n])
        }
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.rows.get(row).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_rectangular(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] == w[1])
    }

    /// Rows whose last box can be removed leaving a valid shape.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| self.row_len(r + 1) < self.rows[r])
            .collect()
    }

    /// The shape with the last box of `row` removed.
    pub fn remove_corner(&self, row: usize) -> Option<Shape> {
        if row >= self.rows.len() || self.row_len(row + 1) >= self.rows[row] {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[row] -= 1;
        if rows[row] == 0 {
            rows.pop();
        }
        Some(Shape { rows })
    }

    /// Hook length of every box, indexed like the tableau rows.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        (0..self.rows.len())
            .map(|r| {
                (0..self.rows[r])
                    .map(|c| {
                        let arm = self.rows[r] - c - 1;
                        let leg = self.rows[r + 1..].iter().take_while(|&&l| l > c).count();
                        arm + leg + 1
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Number of standard tableaux of `shape`, by the hook length formula.
///
/// The factorial and the hook product are reduced prime by prime, so the
/// only intermediate values are divisors of the result. Counts above
/// `u128::MAX` (shapes with far more than 50 boxes) panic.
pub fn count_standard(shape: &Shape) -> u128 {
    let n = shape.size();
    let mut exponent = vec![0i64; n + 1];
    let mut add = |mut m: usize, sign: i64| {
        let mut p = 2;
        while p * p <= m {
            while m.is_multiple_of(p) {
                exponent[p] += sign;
                m /= p;
            }
            p += 1;
        }
        if m > 1 {
            exponent[m] += sign;
        }
    };
    for m in 2..=n {
        add(m, 1);
    }
    for row in shape.hook_lengths() {
        for h in row {
            add(h, -1);
        }
    }
    let mut count: u128 = 1;
    for (p, &e) in exponent.iter().enumerate() {
        debug_assert!(e >= 0, "hook product does not divide factorial");
        for _ in 0..e {
            count = count
                .checked_mul(p as u128)
                .expect("standard tableau count exceeds u128");
        }
    }
    count
}

/// A standard Young tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: Shape,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Checks a raw filling against `shape` and the standardness rules.
    pub fn validate(shape: Shape, rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let lens = shape.row_lengths();
        if rows.len() != lens.len() {
            let row = rows.len().min(lens.len());
            return Err(TableauError::ShapeMismatch {
                row,
                expected: shape.row_len(row),
                found: rows.get(row).map_or(0, Vec::len),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != lens[r] {
                return Err(TableauError::ShapeMismatch {
                    row: r,
                    expected: lens[r],
                    found: row.len(),
                });
            }
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                if entry == 0 || entry > n {
                    return Err(TableauError::EntryOutOfRange {
                        entry,
                        row: r,
                        col: c,
                        max: n,
                    });
                }
                if seen[entry] {
                    return Err(TableauError::DuplicateEntry {
                        entry,
                        row: r,
                        col: c,
                    });
                }
                seen[entry] = true;
            }
        }
        for (r, row) in rows.iter().enumerate() {
            if let Some(c) = (1..row.len()).find(|&c| row[c - 1] >= row[c]) {
                return Err(TableauError::RowNotIncreasing { row: r, col: c });
            }
            if r > 0 {
                if let Some(c) = (0..row.len()).find(|&c| rows[r - 1][c] >= row[c]) {
                    return Err(TableauError::ColumnNotIncreasing { row: r - 1, col: c });
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    /// Validates a filling whose shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let shape = Shape::new(rows.iter().map(Vec::len).collect())?;
        Self::validate(shape, rows)
    }

    /// Builds the tableau that puts entry `i + 1` on row `word[i]`.
    pub fn from_row_word(word: &[usize]) -> Result<Self, TableauError> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (i, &r) in word.iter().enumerate() {
            if rows.len() <= r {
                rows.resize_with(r + 1, Vec::new);
            }
            rows[r].push(i + 1);
        }
        Self::from_rows(rows)
    }

    pub fn empty() -> Self {
        StandardTableau {
            shape: Shape::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, (row, col): Cell) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Row index of every entry: `word[i]` is the row holding `i + 1`.
    pub fn row_word(&self) -> Vec<usize> {
        let mut word = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                word[e - 1] = r;
            }
        }
        word
    }

    /// Cell holding `entry`.
    pub fn cell_of(&self, entry: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.binary_search(&entry).ok().map(|c| (r, c))
        })
    }

    pub fn row_of(&self, entry: usize) -> Option<usize> {
        self.cell_of(entry).map(|(r, _)| r)
    }

    /// Jeu-de-taquin promotion: delete 1, slide the hole out to a corner,
    /// decrement every entry and put `N` in the vacated corner.
    pub fn promote(&self) -> Result<StandardTableau, TableauError> {
        let path = self.promotion_witness()?;
        let mut rows = self.rows.clone();
        for slide in &path.slides {
            rows[slide.to.0][slide.to.1] = slide.entry;
        }
        let n = self.size();
        let &(er, ec) = path.cells.last().expect("path starts at the removed box");
        rows[er][ec] = n + 1;
        for row in rows.iter_mut() {
            for e in row.iter_mut() {
                *e -= 1;
            }
        }
        Ok(StandardTableau {
            shape: self.shape.clone(),
            rows,
        })
    }

    /// Path of the hole during the promotion slides, with each slide.
    pub fn promotion_witness(&self) -> Result<PromotionPath, TableauError> {
        if self.is_empty() {
            return Err(TableauError::EmptyTableau);
        }
        let mut hole = (0, 0);
        let mut cells = vec![hole];
        let mut slides = Vec::new();
        loop {
            let (r, c) = hole;
            let above = self.entry((r + 1, c));
            let right = self.entry((r, c + 1));
            let (from, direction) = match (above, right) {
                (None, None) => break,
                (Some(_), None) => ((r + 1, c), SlideDirection::Down),
                (None, Some(_)) => ((r, c + 1), SlideDirection::Left),
                (Some(a), Some(b)) if a < b => ((r + 1, c), SlideDirection::Down),
                (Some(_), Some(_)) => ((r, c + 1), SlideDirection::Left),
            };
            slides.push(Slide {
                entry: self.rows[from.0][from.1],
                from,
                to: hole,
                direction,
            });
            hole = from;
            cells.push(hole);
        }
        Ok(PromotionPath { cells, slides })
    }

    /// Shuffle of `inner` into `self` at position `at`.
    ///
    /// Entries `1..=at` keep their rows in `self`, the next `inner.size()`
    /// entries follow the rows of `inner`, and the remaining entries of
    /// `self` follow, shifted up by `inner.size()`.
    pub fn shuffle_in(&self, at: usize, inner: &StandardTableau) -> Result<Self, TableauError> {
        shuffle(inner, at, self)
    }
}

/// Shuffle of `inner` into `outer` at position `at` (`0 <= at <= N(outer)`).
pub fn shuffle(
    inner: &StandardTableau,
    at: usize,
    outer: &StandardTableau,
) -> Result<StandardTableau, TableauError> {
    let outer_word = outer.row_word();
    if at > outer_word.len() {
        return Err(TableauError::PositionOutOfRange {
            position: at,
            max: outer_word.len(),
        });
    }
    let word: Vec<usize> = outer_word[..at]
        .iter()
        .chain(inner.row_word().iter())
        .chain(outer_word[at..].iter())
        .copied()
        .collect();
    StandardTableau::from_row_word(&word).map_err(|_| TableauError::InvalidResultShape)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlideDirection {
    /// The entry above the hole moves down into it.
    Down,
    /// The entry right of the hole moves left into it.
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slide {
    pub entry: usize,
    pub from: Cell,
    pub to: Cell,
    pub direction: SlideDirection,
}

/// Cells visited by the hole, starting at the box of the deleted 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromotionPath {
    pub cells: Vec<Cell>,
    pub slides: Vec<Slide>,
}

impl PromotionPath {
    pub fn vertical_slides(&self) -> impl Iterator<Item = &Slide> {
        self.slides
            .iter()
            .filter(|s| s.direction == SlideDirection::Down)
    }
}

/// Every shape with `size` boxes and at most `max_rows` rows, in
/// decreasing lexicographic order of row lengths.
pub fn partitions(size: usize, max_rows: usize) -> Vec<Shape> {
    fn go(left: usize, cap: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if left == 0 {
            out.push(Shape { rows: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for len in (1..=cap.min(left)).rev() {
            cur.push(len);
            go(left - len, len, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, max_rows, &mut Vec::new(), &mut out);
    out
}

/// All standard tableaux of `shape`, in lexicographic order of row words.
pub fn enumerate_standard(shape: &Shape) -> StandardTableaux {
    StandardTableaux::new(shape.clone())
}

/// Iterator returned by [`enumerate_standard`].
pub struct StandardTableaux {
    shape: Shape,
    word: Vec<usize>,
    counts: Vec<usize>,
    started: bool,
    done: bool,
}

impl StandardTableaux {
    fn new(shape: Shape) -> Self {
        let rows = shape.num_rows();
        StandardTableaux {
            shape,
            word: Vec::new(),
            counts: vec![0; rows],
            started: false,
            done: false,
        }
    }

    fn fits(&self, r: usize) -> bool {
        self.counts[r] < self.shape.row_len(r) && (r == 0 || self.counts[r] < self.counts[r - 1])
    }

    fn fill_rest(&mut self) {
        while self.word.len() < self.shape.size() {
            let r = (0..self.counts.len())
                .find(|&r| self.fits(r))
                .expect("a partial standard filling always extends");
            self.counts[r] += 1;
            self.word.push(r);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(last) = self.word.pop() {
            self.counts[last] -= 1;
            if let Some(r) = (last + 1..self.counts.len()).find(|&r| self.fits(r)) {
                self.counts[r] += 1;
                self.word.push(r);
                self.fill_rest();
                return true;
            }
        }
        false
    }

    fn current(&self) -> StandardTableau {
        let mut rows = vec![Vec::new(); self.shape.num_rows()];
        for (i, &r) in self.word.iter().enumerate() {
            rows[r].push(i + 1);
        }
        StandardTableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for StandardTableaux {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_rest();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// Uniformly random standard tableau of `shape`.
///
/// Places `N, N-1, ..., 1` by removing corners, each corner chosen with
/// probability proportional to the number of tableaux of the remaining shape.
pub fn random_standard<R: Rng + ?Sized>(shape: &Shape, rng: &mut R) -> StandardTableau {
    let mut word = vec![0; shape.size()];
    let mut current = shape.clone();
    for entry in (1..=shape.size()).rev() {
        let total = count_standard(&current);
        let mut pick = rng.gen_range(0..total);
        let mut chosen = None;
        for r in current.corners() {
            let rest = current.remove_corner(r).expect("corner");
            let weight = count_standard(&rest);
            if pick < weight {
                chosen = Some((r, rest));
                break;
            }
            pick -= weight;
        }
        let (r, rest) = chosen.expect("corner weights sum to the total count");
        word[entry - 1] = r;
        current = rest;
    }
    StandardTableau::from_row_word(&word).expect("corner removal yields a standard filling")
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str(" / ")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for StandardTableau {
    type Err = crate::format::FormatError;

    /// Parses `1 2 / 3 4 / 5 6`: rows bottom first, separated by `/`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        if text.is_empty() {
            return Ok(StandardTableau::empty());
        }
        let mut rows = Vec::new();
        let mut offset = s.len() - s.trim_start().len();
        for part in text.split('/') {
            let mut row = Vec::new();
            let mut col = offset;
            for token in part.split(' ') {
                if !token.is_empty() {
                    let value = token
                        .parse::<usize>()
                        .map_err(|_| ParseError::new(1, col + 1, format!("expected an entry, found `{token}`")))?;
                    row.push(value);
                }
                col += token.len() + 1;
            }
            if row.is_empty() {
                return Err(ParseError::new(1, offset + 1, "empty row").into());
            }
            rows.push(row);
            offset += part.len() + 1;
        }
        Ok(StandardTableau::from_rows(rows)?)
    }
}

/// Compact form without spaces, `1,2/3,4/5,6`, used in report lines.
pub fn compact(t: &StandardTableau) -> String {
    if t.is_empty() {
        return "-".into();
    }
    t.rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}
