//! Lattice path families, area codes, and sub-region enumeration.
//!
//! Two families are supported, both drawn in the quarter plane with the
//! start on the y-axis and the end on the x-axis:
//!
//! - **Integer slope**: paths from (0, n) to (rn, 0) built from Down (0,-1),
//!   Right (1,0) and Diag (r,-1) steps, staying weakly below the line from
//!   (0, n) to (rn, 0).  A path with d down steps has rd right steps and
//!   n - d diagonal steps.
//! - **Unit fraction**: paths from (0, nr) to (n, 0) built from Down (0,-1),
//!   Right (1,0) and Diag (1,-r) steps, staying weakly below the line from
//!   (0, nr) to (n, 0).  A path with d down steps has d/r right steps and
//!   n - d/r diagonal steps; when r does not divide d the family is empty.
//!
//! An optional constraint offset `h` additionally forbids every vertex
//! strictly below the line parallel to the boundary shifted h units down.
//!
//! The **area code** of a path lists, for each horizontal strip of height 1
//! (numbered top to bottom), the number of full unit cells between the
//! y-axis and the path; the entry is barred when the strip is crossed by a
//! diagonal step and unbarred when it is crossed by a down step.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{CodeError, PathError, SpecError};

/// Exact rational scalar used for region corners and slopes.
pub type Rat = Ratio<i64>;

/// Which of the two path families a spec describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SlopeMode {
    IntegerSlope,
    UnitFraction,
}

/// A path family: mode, size n, number of down steps d, slope parameter r,
/// and an optional constraint offset h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathSpec {
    pub mode: SlopeMode,
    pub n: u64,
    pub d: u64,
    pub r: u64,
    pub h: Option<u64>,
}

/// Step multiset of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepCounts {
    pub down: u64,
    pub right: u64,
    pub diag: u64,
}

impl PathSpec {
    pub fn new(mode: SlopeMode, n: u64, d: u64, r: u64) -> Result<Self, SpecError> {
        if n == 0 {
            return Err(SpecError::ZeroHeight(n));
        }
        if r == 0 {
            return Err(SpecError::ZeroSlope(r));
        }
        let max_d = match mode {
            SlopeMode::IntegerSlope => n,
            SlopeMode::UnitFraction => n * r,
        };
        if d > max_d {
            return Err(SpecError::TooManyDownSteps { d, max: max_d });
        }
        Ok(PathSpec {
            mode,
            n,
            d,
            r,
            h: None,
        })
    }

    pub fn integer_slope(n: u64, d: u64, r: u64) -> Result<Self, SpecError> {
        PathSpec::new(SlopeMode::IntegerSlope, n, d, r)
    }

    pub fn unit_fraction(n: u64, d: u64, r: u64) -> Result<Self, SpecError> {
        PathSpec::new(SlopeMode::UnitFraction, n, d, r)
    }

    pub fn with_constraint(mut self, h: u64) -> Result<Self, SpecError> {
        if h > self.height() {
            return Err(SpecError::ConstraintTooDeep {
                h,
                max: self.height(),
            });
        }
        self.h = Some(h);
        Ok(self)
    }

    /// Number of horizontal strips, i.e. the length of an area code.
    pub fn height(&self) -> u64 {
        match self.mode {
            SlopeMode::IntegerSlope => self.n,
            SlopeMode::UnitFraction => self.n * self.r,
        }
    }

    /// x-coordinate of the end point.
    pub fn width(&self) -> u64 {
        match self.mode {
            SlopeMode::IntegerSlope => self.n * self.r,
            SlopeMode::UnitFraction => self.n,
        }
    }

    /// The step multiset, or None when the family is empty (unit fraction
    /// with r not dividing d).
    pub fn step_counts(&self) -> Option<StepCounts> {
        match self.mode {
            SlopeMode::IntegerSlope => Some(StepCounts {
                down: self.d,
                right: self.r * self.d,
                diag: self.n - self.d,
            }),
            SlopeMode::UnitFraction => {
                if self.d % self.r != 0 {
                    return None;
                }
                let right = self.d / self.r;
                Some(StepCounts {
                    down: self.d,
                    right,
                    diag: self.n - right,
                })
            }
        }
    }

    /// True when (x, y) lies weakly below the boundary line.
    pub fn below_boundary(&self, x: i64, y: i64) -> bool {
        let (n, r) = (self.n as i64, self.r as i64);
        match self.mode {
            SlopeMode::IntegerSlope => x + r * y <= r * n,
            SlopeMode::UnitFraction => r * x + y <= r * n,
        }
    }

    /// True when (x, y) lies weakly above the constraint line (vacuously
    /// true when no constraint is set).
    pub fn above_constraint(&self, x: i64, y: i64) -> bool {
        let Some(h) = self.h else { return true };
        let (n, r, h) = (self.n as i64, self.r as i64, h as i64);
        match self.mode {
            SlopeMode::IntegerSlope => x + r * y >= r * (n - h),
            SlopeMode::UnitFraction => r * x + y >= r * n - h,
        }
    }

    fn vertex_ok(&self, x: i64, y: i64) -> bool {
        x >= 0 && y >= 0 && self.below_boundary(x, y) && self.above_constraint(x, y)
    }

    /// Upper bound for code entry at strip `line` (1-indexed).
    pub fn code_bound(&self, line: u64) -> i64 {
        let r = self.r as i64;
        let i = line as i64;
        match self.mode {
            SlopeMode::IntegerSlope => r * (i - 1),
            SlopeMode::UnitFraction => (i - 1) / r,
        }
    }
}

/// A single lattice step.  The derived order Down < Right < Diag is the
/// enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Down,
    Right,
    Diag,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::Down, Step::Right, Step::Diag];

    pub fn delta(&self, spec: &PathSpec) -> (i64, i64) {
        let r = spec.r as i64;
        match (self, spec.mode) {
            (Step::Down, _) => (0, -1),
            (Step::Right, _) => (1, 0),
            (Step::Diag, SlopeMode::IntegerSlope) => (r, -1),
            (Step::Diag, SlopeMode::UnitFraction) => (1, -r),
        }
    }

    pub fn letter(&self) -> char {
        match self {
            Step::Down => 'D',
            Step::Right => 'R',
            Step::Diag => 'G',
        }
    }
}

/// A concrete path of a family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub spec: PathSpec,
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Check step counts and that every vertex respects boundary and
    /// constraint.  Steps are straight segments and both lines are straight,
    /// so checking the vertices covers every point of the path.
    pub fn validate(&self) -> Result<(), PathError> {
        let counts = self.spec.step_counts().unwrap_or(StepCounts {
            down: u64::MAX,
            right: u64::MAX,
            diag: u64::MAX,
        });
        let mut got = [0u64; 3];
        for s in &self.steps {
            got[*s as usize] += 1;
        }
        for (kind, expected, actual) in [
            ("down", counts.down, got[0]),
            ("right", counts.right, got[1]),
            ("diag", counts.diag, got[2]),
        ] {
            if expected != actual {
                return Err(PathError::WrongStepCounts {
                    kind,
                    expected,
                    got: actual,
                });
            }
        }
        let (mut x, mut y) = (0i64, self.spec.height() as i64);
        for (index, s) in self.steps.iter().enumerate() {
            let (dx, dy) = s.delta(&self.spec);
            x += dx;
            y += dy;
            if !self.spec.below_boundary(x, y) {
                return Err(PathError::AboveBoundary { index, x, y });
            }
            if !self.spec.above_constraint(x, y) {
                return Err(PathError::BelowConstraint { index, x, y });
            }
        }
        Ok(())
    }

    /// The area code of the path.
    pub fn encode(&self) -> AreaCode {
        let mut entries = Vec::with_capacity(self.spec.height() as usize);
        let mut x = 0u64;
        for s in &self.steps {
            match (s, self.spec.mode) {
                (Step::Down, _) => entries.push(CodeEntry {
                    value: x,
                    bar: false,
                }),
                (Step::Right, _) => x += 1,
                (Step::Diag, SlopeMode::IntegerSlope) => {
                    entries.push(CodeEntry {
                        value: x,
                        bar: true,
                    });
                    x += self.spec.r;
                }
                (Step::Diag, SlopeMode::UnitFraction) => {
                    for _ in 0..self.spec.r {
                        entries.push(CodeEntry {
                            value: x,
                            bar: true,
                        });
                    }
                    x += 1;
                }
            }
        }
        AreaCode {
            spec: self.spec,
            entries,
        }
    }

    pub fn steps_string(&self) -> String {
        self.steps.iter().map(Step::letter).collect()
    }
}

/// One line of an area code: a cell count and a bar flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CodeEntry {
    #[serde(rename = "v")]
    pub value: u64,
    pub bar: bool,
}

impl fmt::Display for CodeEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar {
            write!(f, "{}b", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// The area code of a path: one entry per horizontal strip, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AreaCode {
    pub spec: PathSpec,
    pub entries: Vec<CodeEntry>,
}

impl AreaCode {
    /// Rebuild the unique path with this code, validating every invariant.
    pub fn decode(&self) -> Result<LatticePath, CodeError> {
        let spec = &self.spec;
        let Some(counts) = spec.step_counts() else {
            return Err(CodeError::EmptyFamily);
        };
        let height = spec.height();
        if self.entries.len() as u64 != height {
            return Err(CodeError::WrongLength {
                expected: height,
                got: self.entries.len() as u64,
            });
        }
        let unbarred = self.entries.iter().filter(|e| !e.bar).count() as u64;
        if unbarred != counts.down {
            return Err(CodeError::WrongBarCount {
                expected: counts.down,
                got: unbarred,
            });
        }
        let mut steps = Vec::new();
        let mut x = 0u64;
        let mut i = 0usize;
        while i < self.entries.len() {
            let line = i + 1;
            let e = self.entries[i];
            if (e.value as i64) > spec.code_bound(line as u64) {
                return Err(CodeError::BoundExceeded {
                    line,
                    bound: spec.code_bound(line as u64),
                });
            }
            if e.value < x {
                // Either the code decreases, or a barred run forces a jump
                // the next entry does not make.
                return Err(CodeError::NonMonotone { line });
            }
            for _ in 0..(e.value - x) {
                steps.push(Step::Right);
            }
            x = e.value;
            if !e.bar {
                steps.push(Step::Down);
                i += 1;
                continue;
            }
            match spec.mode {
                SlopeMode::IntegerSlope => {
                    steps.push(Step::Diag);
                    x += spec.r;
                    i += 1;
                }
                SlopeMode::UnitFraction => {
                    let run_end = i + spec.r as usize;
                    if run_end > self.entries.len()
                        || self.entries[i..run_end]
                            .iter()
                            .any(|o| !o.bar || o.value != e.value)
                    {
                        return Err(CodeError::BadBarRun { line });
                    }
                    steps.push(Step::Diag);
                    x += 1;
                    i = run_end;
                }
            }
        }
        for _ in 0..(spec.width() - x.min(spec.width())) {
            steps.push(Step::Right);
        }
        let path = LatticePath { spec: *spec, steps };
        path.validate()?;
        Ok(path)
    }

    /// Entries as (value, bar) pairs.
    pub fn pairs(&self) -> Vec<(u64, bool)> {
        self.entries.iter().map(|e| (e.value, e.bar)).collect()
    }
}

impl fmt::Display for AreaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Depth-first enumerator over a family, emitting paths in lexicographic
/// step order with Down < Right < Diag.
pub struct PathEnumerator {
    spec: PathSpec,
    total: usize,
    remaining: [u64; 3],
    stack: Vec<Step>,
    x: i64,
    y: i64,
    fresh: bool,
    done: bool,
}

impl PathEnumerator {
    pub fn new(spec: &PathSpec) -> Self {
        let (total, remaining, done) = match spec.step_counts() {
            Some(c) => (
                (c.down + c.right + c.diag) as usize,
                [c.down, c.right, c.diag],
                false,
            ),
            None => (0, [0, 0, 0], true),
        };
        PathEnumerator {
            spec: *spec,
            total,
            remaining,
            stack: Vec::with_capacity(total),
            x: 0,
            y: spec.height() as i64,
            fresh: true,
            done,
        }
    }

    fn can_take(&self, s: Step) -> bool {
        if self.remaining[s as usize] == 0 {
            return false;
        }
        let (dx, dy) = s.delta(&self.spec);
        self.spec.vertex_ok(self.x + dx, self.y + dy)
    }

    fn push(&mut self, s: Step) {
        let (dx, dy) = s.delta(&self.spec);
        self.x += dx;
        self.y += dy;
        self.remaining[s as usize] -= 1;
        self.stack.push(s);
    }

    fn pop(&mut self) -> Option<Step> {
        let s = self.stack.pop()?;
        let (dx, dy) = s.delta(&self.spec);
        self.x -= dx;
        self.y -= dy;
        self.remaining[s as usize] += 1;
        Some(s)
    }

    /// Resume the depth-first search; `resume` is the step just undone at the
    /// current depth (try strictly greater candidates), or None to start the
    /// depth from Step::Down.
    fn advance(&mut self, mut resume: Option<Step>) -> bool {
        loop {
            let next = Step::ALL
                .into_iter()
                .filter(|s| resume.map_or(true, |r| *s > r))
                .find(|s| self.can_take(*s));
            match next {
                Some(s) => {
                    self.push(s);
                    resume = None;
                    if self.stack.len() == self.total {
                        return true;
                    }
                }
                None => match self.pop() {
                    Some(s) => resume = Some(s),
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for PathEnumerator {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        let found = if self.fresh {
            self.fresh = false;
            if self.total == 0 {
                false
            } else {
                self.advance(None)
            }
        } else {
            let last = self.pop().expect("a completed path is on the stack");
            self.advance(Some(last))
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(LatticePath {
            spec: self.spec,
            steps: self.stack.clone(),
        })
    }
}

/// All paths of a family, lexicographic in Down < Right < Diag.
pub fn enumerate_paths(spec: &PathSpec) -> PathEnumerator {
    PathEnumerator::new(spec)
}

/// Pentagon region {(0,0), (0,a), (p,a), (b,q), (b,0)}: full rows of width b
/// below height q, cut above by the slant from (p, a) to (b, q).  For
/// unit-fraction slants the slant advances 1/r column per row; for
/// integer slants it advances r columns per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionPentagon {
    pub a: i64,
    pub b: i64,
    pub p: Rat,
    pub r: i64,
    pub q: i64,
    pub slope: SlopeMode,
}

impl RegionPentagon {
    fn run_per_row(&self) -> Rat {
        match self.slope {
            SlopeMode::UnitFraction => Rat::new(1, self.r),
            SlopeMode::IntegerSlope => Rat::from_integer(self.r),
        }
    }

    /// Inclusive (low, high) column bounds per row, top to bottom.  A high
    /// below low marks an impossible row (empty region).
    pub fn row_bounds(&self) -> Vec<(i64, i64)> {
        let run = self.run_per_row();
        (1..=self.a)
            .map(|i| {
                let top = self.a - i + 1;
                let high = if top <= self.q {
                    self.b
                } else {
                    let slant = (self.p + run * Rat::from_integer(i - 1)).floor().to_integer();
                    slant.min(self.b)
                };
                (0, high)
            })
            .collect()
    }
}

/// Hexagon region: a pentagon with the lower-left corner cut off by a second
/// slant from (0, s) down to the x-axis, parallel to the main boundary
/// (unit-fraction slants on both cuts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionHexagon {
    pub a: i64,
    pub b: i64,
    pub p: Rat,
    pub r: i64,
    pub q: i64,
    pub s: i64,
}

impl RegionHexagon {
    pub fn row_bounds(&self) -> Vec<(i64, i64)> {
        let pentagon = RegionPentagon {
            a: self.a,
            b: self.b,
            p: self.p,
            r: self.r,
            q: self.q,
            slope: SlopeMode::UnitFraction,
        };
        pentagon
            .row_bounds()
            .into_iter()
            .enumerate()
            .map(|(idx, (_, high))| {
                let i = idx as i64 + 1;
                // Row i has bottom edge y = a - i; the lower slant needs
                // x >= (s - y) / r there.
                let low = Rat::new(self.s - self.a + i, self.r).ceil().to_integer();
                (low.max(0), high)
            })
            .collect()
    }
}

/// A sub-region of the plane whose monotone paths we enumerate by their
/// left-area sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    Pentagon(RegionPentagon),
    Hexagon(RegionHexagon),
}

impl Region {
    pub fn row_bounds(&self) -> Vec<(i64, i64)> {
        match self {
            Region::Pentagon(p) => p.row_bounds(),
            Region::Hexagon(h) => h.row_bounds(),
        }
    }
}

/// All weakly increasing sequences v with bounds[i].0 <= v[i] <= bounds[i].1;
/// these are the left-area sequences of monotone paths in the region.
pub fn region_area_sequences(bounds: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(bounds.len());
    fn rec(bounds: &[(i64, i64)], current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = current.len();
        if i == bounds.len() {
            out.push(current.clone());
            return;
        }
        let floor = current.last().copied().unwrap_or(0).max(bounds[i].0);
        for v in floor..=bounds[i].1 {
            current.push(v);
            rec(bounds, current, out);
            current.pop();
        }
    }
    rec(bounds, &mut current, &mut out);
    out
}

/// Left-area sequences of every monotone path inside the region.
pub fn enumerate_region_paths(region: &Region) -> Vec<Vec<i64>> {
    region_area_sequences(&region.row_bounds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn code_of(pairs: &[(u64, bool)], spec: PathSpec) -> AreaCode {
        AreaCode {
            spec,
            entries: pairs
                .iter()
                .map(|&(value, bar)| CodeEntry { value, bar })
                .collect(),
        }
    }

    #[test]
    fn integer_slope_small_family() {
        let spec = PathSpec::integer_slope(2, 1, 2).unwrap();
        let paths: Vec<_> = enumerate_paths(&spec).collect();
        assert_eq!(paths.len(), 4);
        let codes: BTreeSet<Vec<(u64, bool)>> =
            paths.iter().map(|p| p.encode().pairs()).collect();
        let expected: BTreeSet<Vec<(u64, bool)>> = [
            vec![(0, false), (0, true)],
            vec![(0, false), (1, true)],
            vec![(0, false), (2, true)],
            vec![(0, true), (2, false)],
        ]
        .into_iter()
        .collect();
        assert_eq!(codes, expected);
    }

    #[test]
    fn lexicographic_order() {
        let spec = PathSpec::integer_slope(2, 1, 2).unwrap();
        // Lexicographic in the step order Down < Right < Diag (D < R < G).
        let words: Vec<String> = enumerate_paths(&spec).map(|p| p.steps_string()).collect();
        assert_eq!(words, vec!["DRRG", "DRGR", "DGRR", "GDRR"]);
    }

    #[test]
    fn unit_fraction_family_and_empty_case() {
        let spec = PathSpec::unit_fraction(2, 2, 2).unwrap();
        let paths: Vec<_> = enumerate_paths(&spec).collect();
        assert_eq!(paths.len(), 4);
        // r does not divide d: empty family, not an error.
        let empty = PathSpec::unit_fraction(2, 3, 2).unwrap();
        assert_eq!(enumerate_paths(&empty).count(), 0);
    }

    #[test]
    fn integer_figure_code_roundtrips() {
        // 0, 0b, 2, 3, 5b for n = 5, r = 2 (three down steps).
        let spec = PathSpec::integer_slope(5, 3, 2).unwrap();
        let code = code_of(
            &[(0, false), (0, true), (2, false), (3, false), (5, true)],
            spec,
        );
        let path = code.decode().unwrap();
        assert_eq!(path.encode(), code);
        let code2 = code_of(
            &[(0, false), (1, false), (1, true), (6, true), (8, false)],
            spec,
        );
        let path2 = code2.decode().unwrap();
        assert_eq!(path2.encode(), code2);
    }

    #[test]
    fn unit_fraction_figure_code_roundtrips() {
        // 0, 0, 0b, 0b, 2b, 2b for n = 3, r = 2, d = 2.
        let spec = PathSpec::unit_fraction(3, 2, 2).unwrap();
        let code = code_of(
            &[
                (0, false),
                (0, false),
                (0, true),
                (0, true),
                (2, true),
                (2, true),
            ],
            spec,
        );
        let path = code.decode().unwrap();
        assert_eq!(path.encode(), code);
    }

    #[test]
    fn decode_rejects_bad_codes() {
        let spec = PathSpec::integer_slope(3, 2, 1).unwrap();
        let non_monotone = code_of(&[(0, false), (1, true), (0, false)], spec);
        assert!(matches!(
            non_monotone.decode(),
            Err(CodeError::NonMonotone { .. }) | Err(CodeError::BoundExceeded { .. })
        ));
        let too_big = code_of(&[(1, false), (1, false), (2, true)], spec);
        assert!(matches!(
            too_big.decode(),
            Err(CodeError::BoundExceeded { line: 1, .. })
        ));
        let uf = PathSpec::unit_fraction(2, 2, 2).unwrap();
        let bad_run = code_of(&[(0, false), (0, false), (0, true), (1, true)], uf);
        assert!(matches!(bad_run.decode(), Err(CodeError::BadBarRun { .. })));
    }

    #[test]
    fn constraint_filters_paths() {
        let spec = PathSpec::integer_slope(2, 2, 1).unwrap();
        assert_eq!(enumerate_paths(&spec).count(), 2);
        let pinned = spec.with_constraint(0).unwrap();
        // h = 0 pins the path to the boundary line itself.
        assert_eq!(enumerate_paths(&pinned).count(), 0);
        let full = spec.with_constraint(2).unwrap();
        assert_eq!(enumerate_paths(&full).count(), 2);
    }

    #[test]
    fn single_path_families() {
        // n = 1, d = 1, r = 3: only DRRR is valid.
        let spec = PathSpec::integer_slope(1, 1, 3).unwrap();
        let paths: Vec<_> = enumerate_paths(&spec).collect();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].steps_string(), "DRRR");
        // d = 0 integer slope: the staircase of diagonals is unique.
        let diag = PathSpec::integer_slope(3, 0, 2).unwrap();
        assert_eq!(enumerate_paths(&diag).count(), 1);
    }

    #[test]
    fn pentagon_row_bounds_unit_fraction() {
        // Triangle of height 2, width 1, unit-fraction slant r = 2.
        let region = RegionPentagon {
            a: 2,
            b: 1,
            p: Rat::from_integer(0),
            r: 2,
            q: 0,
            slope: SlopeMode::UnitFraction,
        };
        assert_eq!(region.row_bounds(), vec![(0, 0), (0, 0)]);
        let seqs = enumerate_region_paths(&Region::Pentagon(region));
        assert_eq!(seqs, vec![vec![0, 0]]);
    }

    #[test]
    fn hexagon_row_bounds() {
        let region = RegionHexagon {
            a: 2,
            b: 2,
            p: Rat::from_integer(1),
            r: 2,
            q: 0,
            s: 2,
        };
        // Lower slant from (0, 2) to (1, 0): at the bottom vertex of row 1
        // (y = 1) it already forces x >= 1, so both rows need v >= 1.
        assert_eq!(region.row_bounds(), vec![(1, 1), (1, 1)]);
    }

    proptest! {
        #[test]
        fn encode_decode_roundtrip(n in 1u64..5, r in 1u64..4, d_seed in 0u64..20, unit in any::<bool>()) {
            let mode = if unit { SlopeMode::UnitFraction } else { SlopeMode::IntegerSlope };
            let max_d = if unit { n * r } else { n };
            let spec = PathSpec::new(mode, n, d_seed % (max_d + 1), r).unwrap();
            for path in enumerate_paths(&spec) {
                let code = path.encode();
                let back = code.decode().unwrap();
                prop_assert_eq!(back, path);
            }
        }

        #[test]
        fn codes_are_weakly_increasing_and_bounded(n in 1u64..5, r in 1u64..4, d_seed in 0u64..20) {
            let spec = PathSpec::integer_slope(n, d_seed % (n + 1), r).unwrap();
            for path in enumerate_paths(&spec) {
                let code = path.encode();
                let mut prev = 0i64;
                for (idx, e) in code.entries.iter().enumerate() {
                    let line = idx as u64 + 1;
                    prop_assert!((e.value as i64) <= spec.code_bound(line));
                    prop_assert!(e.value as i64 >= prev);
                    prev = e.value as i64;
                }
            }
        }
    }
}
