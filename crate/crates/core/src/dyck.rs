//! Dyck paths and their area vectors.
//!
//! A path is a word over `N` (north, `(0,1)`) and `E` (east, `(1,0)`) from the
//! origin back to the diagonal `y = x`, never dipping below it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    // Declared first so that the derived order gives 'E' < 'N'.
    East,
    North,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    /// Validates the prefix condition and the final balance.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0isize;
        let mut north = 0;
        for (position, step) in steps.iter().enumerate() {
            match step {
                Step::North => {
                    height += 1;
                    north += 1;
                }
                Step::East => height -= 1,
            }
            if height < 0 {
                return Err(Error::BelowDiagonal { position });
            }
        }
        if height != 0 {
            return Err(Error::Unbalanced {
                north,
                east: steps.len() - north,
            });
        }
        Ok(Self { steps })
    }

    pub(crate) fn new_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok(), "invalid Dyck word");
        Self { steps }
    }

    /// The path made of `runs[k]` north steps followed by one east step, for
    /// each `k`. `runs` must have a valid Dyck prefix structure.
    pub fn from_north_runs(runs: &[usize]) -> Result<Self> {
        let mut steps = Vec::with_capacity(2 * runs.len());
        for &run in runs {
            steps.extend(std::iter::repeat_n(Step::North, run));
            steps.push(Step::East);
        }
        Self::new(steps)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Number of north steps.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of north steps on each vertical line `x = k`, `0 <= k < n`.
    pub fn north_runs(&self) -> Vec<usize> {
        let mut runs = Vec::with_capacity(self.size());
        let mut run = 0;
        for step in &self.steps {
            match step {
                Step::North => run += 1,
                Step::East => {
                    runs.push(run);
                    run = 0;
                }
            }
        }
        runs
    }

    /// Reverse the word and swap `N` with `E`: the mirror image in the
    /// anti-diagonal, which is again a Dyck path.
    pub fn reversed(&self) -> Self {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match s {
                Step::North => Step::East,
                Step::East => Step::North,
            })
            .collect();
        Self { steps }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                'N' => Ok(Step::North),
                'E' => Ok(Step::East),
                found => Err(Error::DyckChar { position, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

/// `(a_1, ..., a_n)` where `a_i` counts the full unit squares in row `i`
/// between the path and the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AreaVector(Vec<usize>);

impl AreaVector {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        for (i, &a) in entries.iter().enumerate() {
            let ok = if i == 0 {
                a == 0
            } else {
                a <= entries[i - 1] + 1
            };
            if !ok {
                return Err(Error::AreaVector { index: i + 1 });
            }
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn area_vector(path: &DyckPath) -> AreaVector {
    let mut entries = Vec::with_capacity(path.size());
    let mut east = 0;
    for step in path.steps() {
        match step {
            // The i-th north step (0-based i) starts at (east, i).
            Step::North => entries.push(entries.len() - east),
            Step::East => east += 1,
        }
    }
    AreaVector(entries)
}

pub fn dyck_from_area(area: &AreaVector) -> DyckPath {
    let n = area.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut east = 0;
    for (i, &a) in area.entries().iter().enumerate() {
        let column = i - a;
        while east < column {
            steps.push(Step::East);
            east += 1;
        }
        steps.push(Step::North);
    }
    steps.extend(std::iter::repeat_n(Step::East, n - east));
    DyckPath::new_unchecked(steps)
}
