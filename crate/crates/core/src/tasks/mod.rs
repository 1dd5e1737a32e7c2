//! Generator/verifier pairs.
//!
//! A task is defined by its pair: the set of examples the generator can
//! produce on which the verifier reproduces the output. Each archetype module
//! exposes `generate`, `verify`, its minimum input dimensions and the list of
//! difficulty-bounded draws it performs.

use std::fmt;
use std::str::FromStr;

use crate::error::{PipelineError, SamplingError, VerifyError};
use crate::grid::{Example, Grid, Symbol};
use crate::rng::{DifficultyBounds, TracedRng};

mod connect_dots;
mod denoise;
mod fill_enclosed;
mod gravity;
mod majority_color;
mod mirror_h;
mod move_to_marker;
mod recolor_largest;
mod scale2;
mod symmetry_complete;

/// Why a generation attempt produced no example.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    PlacementExhausted,
    ConstraintViolated,
}

impl From<SamplingError> for FailureReason {
    fn from(_: SamplingError) -> Self {
        FailureReason::ConstraintViolated
    }
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::PlacementExhausted => "placement_exhausted",
            FailureReason::ConstraintViolated => "constraint_violated",
        })
    }
}

/// Result of one generator call together with the cardinality draws it made.
#[derive(Debug, Clone)]
pub struct GenerationAttempt {
    pub outcome: Result<Example, FailureReason>,
    pub trace: Vec<f64>,
}

impl GenerationAttempt {
    pub fn example(&self) -> Option<&Example> {
        self.outcome.as_ref().ok()
    }
}

/// The ten task archetypes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Task {
    MirrorH,
    Scale2,
    MajorityColor,
    Denoise,
    RecolorLargest,
    Gravity,
    FillEnclosed,
    MoveToMarker,
    SymmetryComplete,
    ConnectDots,
}

impl Task {
    pub const ALL: [Task; 10] = [
        Task::MirrorH,
        Task::Scale2,
        Task::MajorityColor,
        Task::Denoise,
        Task::RecolorLargest,
        Task::Gravity,
        Task::FillEnclosed,
        Task::MoveToMarker,
        Task::SymmetryComplete,
        Task::ConnectDots,
    ];

    /// Stable identifier used on the command line and in output files.
    pub fn id(self) -> &'static str {
        match self {
            Task::MirrorH => "mirror_h",
            Task::Scale2 => "scale2",
            Task::MajorityColor => "majority_color",
            Task::Denoise => "denoise",
            Task::RecolorLargest => "recolor_largest",
            Task::Gravity => "gravity",
            Task::FillEnclosed => "fill_enclosed",
            Task::MoveToMarker => "move_to_marker",
            Task::SymmetryComplete => "symmetry_complete",
            Task::ConnectDots => "connect_dots",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Task::MirrorH => "output is the input flipped upside down",
            Task::Scale2 => "every cell becomes a 2x2 block",
            Task::MajorityColor => "1x1 grid of the most frequent non-background symbol",
            Task::Denoise => "isolated single pixels are erased",
            Task::RecolorLargest => "the largest object is recolored to 1",
            Task::Gravity => "pixels fall to the bottom of their column",
            Task::FillEnclosed => "background cells sealed off from the border become 4",
            Task::MoveToMarker => "the object jumps to the marker pixel",
            Task::SymmetryComplete => "blanked cells are restored from the mirrored column",
            Task::ConnectDots => "same-colored endpoints in a line are joined",
        }
    }

    /// Smallest input grid the generator produces (reached at bounds `[0, 0]`).
    pub fn min_dims(self) -> (usize, usize) {
        match self {
            Task::MirrorH => mirror_h::MIN_DIMS,
            Task::Scale2 => scale2::MIN_DIMS,
            Task::MajorityColor => majority_color::MIN_DIMS,
            Task::Denoise => denoise::MIN_DIMS,
            Task::RecolorLargest => recolor_largest::MIN_DIMS,
            Task::Gravity => gravity::MIN_DIMS,
            Task::FillEnclosed => fill_enclosed::MIN_DIMS,
            Task::MoveToMarker => move_to_marker::MIN_DIMS,
            Task::SymmetryComplete => symmetry_complete::MIN_DIMS,
            Task::ConnectDots => connect_dots::MIN_DIMS,
        }
    }

    /// Degrees of freedom sampled through difficulty-bounded draws.
    pub fn draws(self) -> &'static [&'static str] {
        match self {
            Task::MirrorH => mirror_h::DRAWS,
            Task::Scale2 => scale2::DRAWS,
            Task::MajorityColor => majority_color::DRAWS,
            Task::Denoise => denoise::DRAWS,
            Task::RecolorLargest => recolor_largest::DRAWS,
            Task::Gravity => gravity::DRAWS,
            Task::FillEnclosed => fill_enclosed::DRAWS,
            Task::MoveToMarker => move_to_marker::DRAWS,
            Task::SymmetryComplete => symmetry_complete::DRAWS,
            Task::ConnectDots => connect_dots::DRAWS,
        }
    }

    /// Whether the number of objects in an input is a sampled quantity.
    pub fn has_variable_objects(self) -> bool {
        !matches!(self, Task::MoveToMarker)
    }

    /// Runs the generator once.
    pub fn generate(self, rng: &mut TracedRng, bounds: &DifficultyBounds) -> GenerationAttempt {
        let start = rng.trace().len();
        let outcome = match self {
            Task::MirrorH => mirror_h::generate(rng, bounds),
            Task::Scale2 => scale2::generate(rng, bounds),
            Task::MajorityColor => majority_color::generate(rng, bounds),
            Task::Denoise => denoise::generate(rng, bounds),
            Task::RecolorLargest => recolor_largest::generate(rng, bounds),
            Task::Gravity => gravity::generate(rng, bounds),
            Task::FillEnclosed => fill_enclosed::generate(rng, bounds),
            Task::MoveToMarker => move_to_marker::generate(rng, bounds),
            Task::SymmetryComplete => symmetry_complete::generate(rng, bounds),
            Task::ConnectDots => connect_dots::generate(rng, bounds),
        };
        GenerationAttempt {
            outcome,
            trace: rng.trace()[start..].to_vec(),
        }
    }

    /// Maps a valid input to its output; rejects inputs outside the task.
    pub fn verify(self, input: &Grid) -> Result<Grid, VerifyError> {
        match self {
            Task::MirrorH => mirror_h::verify(input),
            Task::Scale2 => scale2::verify(input),
            Task::MajorityColor => majority_color::verify(input),
            Task::Denoise => denoise::verify(input),
            Task::RecolorLargest => recolor_largest::verify(input),
            Task::Gravity => gravity::verify(input),
            Task::FillEnclosed => fill_enclosed::verify(input),
            Task::MoveToMarker => move_to_marker::verify(input),
            Task::SymmetryComplete => symmetry_complete::verify(input),
            Task::ConnectDots => connect_dots::verify(input),
        }
    }

    /// True when the verifier reproduces the example's output.
    pub fn accepts(self, e: &Example) -> bool {
        self.verify(&e.input).is_ok_and(|out| out == e.output)
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Task {
    type Err = PipelineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Task::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| PipelineError::UnknownTask(s.to_string()))
    }
}

/// Non-zero symbols `1..=9`.
pub(crate) const FOREGROUND: [Symbol; 9] = [
    Symbol::lit(1),
    Symbol::lit(2),
    Symbol::lit(3),
    Symbol::lit(4),
    Symbol::lit(5),
    Symbol::lit(6),
    Symbol::lit(7),
    Symbol::lit(8),
    Symbol::lit(9),
];

pub(crate) const ALL_SYMBOLS: [Symbol; 10] = [
    Symbol::lit(0),
    Symbol::lit(1),
    Symbol::lit(2),
    Symbol::lit(3),
    Symbol::lit(4),
    Symbol::lit(5),
    Symbol::lit(6),
    Symbol::lit(7),
    Symbol::lit(8),
    Symbol::lit(9),
];

/// Grid with every cell drawn independently from `colors`.
pub(crate) fn noise(rng: &mut TracedRng, height: usize, width: usize, colors: &[Symbol]) -> Grid {
    let cells = (0..height * width)
        .map(|_| colors[rng.index(colors.len())])
        .collect();
    Grid::from_cells(height, width, cells).expect("caller passes valid dims")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{connected_components, Connectivity, Isometry};
    use std::collections::HashSet;

    fn grid(rows: &[&[i64]]) -> Grid {
        Grid::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    /// Up to `n` accepted examples.
    fn accepted(task: Task, bounds: DifficultyBounds, n: usize, seed: u64) -> Vec<Example> {
        let mut out = Vec::new();
        for i in 0..(n as u64 * 10) {
            let mut rng = TracedRng::new(seed.wrapping_add(i));
            if let Ok(e) = task.generate(&mut rng, &bounds).outcome {
                if task.accepts(&e) {
                    out.push(e);
                    if out.len() == n {
                        break;
                    }
                }
            }
        }
        out
    }

    #[test]
    fn ids_round_trip() {
        for t in Task::ALL {
            assert_eq!(t.id().parse::<Task>().unwrap(), t);
        }
        assert!("mirror_v".parse::<Task>().is_err());
        let ids: HashSet<_> = Task::ALL.iter().map(|t| t.id()).collect();
        assert_eq!(ids.len(), 10);
    }

    #[test]
    fn verifier_examples() {
        assert_eq!(
            Task::MirrorH.verify(&grid(&[&[1], &[2]])).unwrap(),
            grid(&[&[2], &[1]])
        );
        let ring = grid(&[&[1, 1, 1], &[1, 0, 1], &[1, 1, 1]]);
        assert_eq!(
            Task::FillEnclosed.verify(&ring).unwrap(),
            grid(&[&[1, 1, 1], &[1, 4, 1], &[1, 1, 1]])
        );
        assert_eq!(
            Task::ConnectDots.verify(&grid(&[&[2, 0, 0, 2]])).unwrap(),
            grid(&[&[2, 2, 2, 2]])
        );
    }

    #[test]
    fn round_trip_every_archetype() {
        for task in Task::ALL {
            let examples = accepted(task, DifficultyBounds::FULL, 200, 1000);
            assert_eq!(examples.len(), 200, "{task}");
        }
    }

    #[test]
    fn generation_is_mostly_valid() {
        for task in Task::ALL {
            let mut ok = 0;
            for seed in 0..500 {
                let mut rng = TracedRng::new(seed);
                if let Ok(e) = task.generate(&mut rng, &DifficultyBounds::FULL).outcome {
                    ok += usize::from(task.accepts(&e));
                }
            }
            assert!(ok > 400, "{task}: {ok}/500");
        }
    }

    #[test]
    fn degenerate_bounds_pin_min_dims() {
        let zero = DifficultyBounds::new(0.0, 0.0).unwrap();
        for task in Task::ALL {
            for e in accepted(task, zero, 20, 7) {
                let dims = (e.input.height(), e.input.width());
                let (h, w) = task.min_dims();
                // Orientation augmentation may swap the two sides.
                assert!(dims == (h, w) || dims == (w, h), "{task}: {dims:?}");
            }
        }
    }

    #[test]
    fn majority_color_minimum() {
        let zero = DifficultyBounds::new(0.0, 0.0).unwrap();
        for e in accepted(Task::MajorityColor, zero, 50, 3) {
            assert_eq!((e.input.height(), e.input.width()), (2, 2));
            assert_eq!((e.output.height(), e.output.width()), (1, 1));
        }
    }

    #[test]
    fn denoise_outputs_have_no_isolated_pixels() {
        for e in accepted(Task::Denoise, DifficultyBounds::FULL, 1000, 11) {
            let singles = connected_components(&e.output, Connectivity::Four)
                .iter()
                .filter(|o| o.len() == 1 && o.pixels()[0].symbol != Symbol::ZERO)
                .count();
            assert_eq!(singles, 0);
        }
    }

    #[test]
    fn idempotent_archetypes() {
        for task in [
            Task::Denoise,
            Task::FillEnclosed,
            Task::Gravity,
            Task::ConnectDots,
        ] {
            for e in accepted(task, DifficultyBounds::FULL, 200, 5) {
                if let Ok(again) = task.verify(&e.output) {
                    assert_eq!(again, e.output, "{task}");
                }
            }
        }
        for e in accepted(Task::MirrorH, DifficultyBounds::FULL, 200, 5) {
            assert_eq!(Task::MirrorH.verify(&e.output).unwrap(), e.input);
        }
    }

    #[test]
    fn rotation_closure() {
        for task in [Task::Denoise, Task::MajorityColor, Task::FillEnclosed] {
            for e in accepted(task, DifficultyBounds::FULL, 200, 9) {
                for iso in Isometry::ALL {
                    let t = iso.apply_example(&e);
                    assert!(task.accepts(&t), "{task} {iso:?}");
                }
            }
        }
    }

    #[test]
    fn full_bounds_trace_is_all_ones() {
        let one = DifficultyBounds::new(1.0, 1.0).unwrap();
        for task in Task::ALL {
            let mut rng = TracedRng::new(1);
            let attempt = task.generate(&mut rng, &one);
            assert!(!attempt.trace.is_empty(), "{task}");
            assert!(attempt.trace.iter().all(|&t| t == 1.0), "{task}");
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for task in Task::ALL {
            let a = task.generate(&mut TracedRng::new(77), &DifficultyBounds::FULL);
            let b = task.generate(&mut TracedRng::new(77), &DifficultyBounds::FULL);
            assert_eq!(a.outcome, b.outcome);
            assert_eq!(a.trace, b.trace);
        }
    }
}
