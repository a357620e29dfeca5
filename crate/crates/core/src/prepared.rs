//! A scene that passed the structural checks, bundled with its A2 placement
//! and lift traces. Coloring defects are kept as warnings.

use std::fmt;

use thiserror::Error;

use crate::diagram::{validate_scene, CurvePresentation, KnotPresentation, Scene, Violation};
use crate::lifts::{
    a2_placement_seeded, trace_lifts, A2Placement, LiftTrace, PlacementSeed, Signs,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub struct InvalidScene {
    pub violations: Vec<Violation>,
}

impl fmt::Display for InvalidScene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "scene is structurally invalid")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct PreparedScene {
    scene: Scene,
    placement: A2Placement,
    gamma: LiftTrace,
    delta: Option<LiftTrace>,
    warnings: Vec<Violation>,
}

impl PreparedScene {
    pub fn new(scene: Scene) -> Result<Self, InvalidScene> {
        Self::with_seed(scene, PlacementSeed::default())
    }

    pub fn with_seed(scene: Scene, seed: PlacementSeed) -> Result<Self, InvalidScene> {
        let report = validate_scene(&scene);
        let (structural, warnings): (Vec<Violation>, Vec<Violation>) = report
            .violations
            .into_iter()
            .partition(Violation::is_structural);
        if !structural.is_empty() {
            return Err(InvalidScene {
                violations: structural,
            });
        }
        let placement = a2_placement_seeded(&scene.knot, seed).map_err(|e| InvalidScene {
            violations: vec![Violation::PlacementNotClosed {
                start: e.start,
                end: e.end,
            }],
        })?;
        let gamma = trace_lifts(&scene.gamma, &scene.knot);
        let delta = scene.delta.as_ref().map(|d| trace_lifts(d, &scene.knot));
        Ok(PreparedScene {
            scene,
            placement,
            gamma,
            delta,
            warnings,
        })
    }

    /// The same scene with the other placement seed.
    pub fn reseeded(&self, seed: PlacementSeed) -> Result<Self, InvalidScene> {
        Self::with_seed(self.scene.clone(), seed)
    }

    pub fn scene(&self) -> &Scene {
        &self.scene
    }

    pub fn knot(&self) -> &KnotPresentation {
        &self.scene.knot
    }

    pub fn gamma(&self) -> &CurvePresentation {
        &self.scene.gamma
    }

    pub fn delta(&self) -> Option<&CurvePresentation> {
        self.scene.delta.as_ref()
    }

    pub fn placement(&self) -> &A2Placement {
        &self.placement
    }

    pub fn gamma_trace(&self) -> &LiftTrace {
        &self.gamma
    }

    pub fn delta_trace(&self) -> Option<&LiftTrace> {
        self.delta.as_ref()
    }

    /// Coloring violations that do not block computation.
    pub fn warnings(&self) -> &[Violation] {
        &self.warnings
    }

    pub fn signs(&self) -> Signs<'_> {
        Signs::new(&self.scene.knot, &self.placement)
    }
}
