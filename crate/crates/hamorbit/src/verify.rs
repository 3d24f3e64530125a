//! Cross-checks between the closed forms and the brute-force oracles.
//!
//! A [`ModeCheck`] carries every independently computed quantity for one
//! mode; the comparison itself is a pure function of the stored values,
//! so tests can tamper with a field and watch the mismatch surface.

use crate::error::Result;
use crate::formula::{class_count, component_sums, Component};
use crate::group::Mode;
use crate::orbit::{burnside_count_capped, components_of, enumerate_classes_capped};
use crate::perm::DEFAULT_CAP;
use crate::ClassCount;

/// All counts for one mode: formula, Burnside scan, enumeration, and
/// both component-family breakdowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeCheck {
    pub mode: Mode,
    pub formula: ClassCount,
    pub burnside: ClassCount,
    pub enumerated: ClassCount,
    pub formula_components: Vec<(Component, ClassCount)>,
    pub scanned_components: Vec<(Component, ClassCount)>,
}

impl ModeCheck {
    /// Description of the first disagreement between the stored values,
    /// or `None` when everything matches.
    pub fn first_mismatch(&self) -> Option<String> {
        if self.burnside != self.formula {
            return Some(format!(
                "{}: Burnside scan gave {}, formula gives {}",
                self.mode, self.burnside, self.formula
            ));
        }
        if self.enumerated != self.formula {
            return Some(format!(
                "{}: enumeration found {} classes, formula gives {}",
                self.mode, self.enumerated, self.formula
            ));
        }
        if self.scanned_components.len() != self.formula_components.len() {
            return Some(format!(
                "{}: {} scanned component families, formula lists {}",
                self.mode,
                self.scanned_components.len(),
                self.formula_components.len()
            ));
        }
        for ((fc, fv), (sc, sv)) in
            self.formula_components.iter().zip(&self.scanned_components)
        {
            if fc != sc {
                return Some(format!(
                    "{}: component families disagree ({} vs {})",
                    self.mode, fc, sc
                ));
            }
            if fv != sv {
                return Some(format!(
                    "{}: component {} scan gave {}, formula gives {}",
                    self.mode, fc, sv, fv
                ));
            }
        }
        None
    }

    pub fn passed(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// Runs every oracle for one mode and collects the results.
pub fn verify_mode(mode: Mode) -> Result<ModeCheck> {
    verify_mode_capped(mode, DEFAULT_CAP)
}

/// [`verify_mode`] with an explicit enumeration cap.
pub fn verify_mode_capped(mode: Mode, cap: usize) -> Result<ModeCheck> {
    let report = burnside_count_capped(mode, cap)?;
    let scanned_components = components_of(&report);
    let enumerated = ClassCount::from(enumerate_classes_capped(mode, cap)?.len());
    Ok(ModeCheck {
        mode,
        formula: class_count(mode)?,
        burnside: report.class_count,
        enumerated,
        formula_components: component_sums(mode)?,
        scanned_components,
    })
}

/// Checks all four modes for every n in `n_min..=n_max`.
pub fn verify_range(n_min: usize, n_max: usize) -> Result<Vec<ModeCheck>> {
    verify_range_capped(n_min, n_max, DEFAULT_CAP)
}

/// [`verify_range`] with an explicit enumeration cap.
pub fn verify_range_capped(n_min: usize, n_max: usize, cap: usize) -> Result<Vec<ModeCheck>> {
    let mut checks = Vec::new();
    for n in n_min..=n_max {
        for mode in Mode::all(n)? {
            checks.push(verify_mode_capped(mode, cap)?);
        }
    }
    Ok(checks)
}
