//! Brute-force oracles for the closed forms: exhaustive fixed-point
//! scans, Burnside quotients, canonical representatives, and full class
//! enumeration.
//!
//! Scans walk X_n partitioned by first symbol; partitions run in
//! parallel and merge in partition order, so results are identical for
//! any worker count.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formula::{exact_div, Component};
use crate::group::{elements, GroupElement, Mode};
use crate::perm::{self, PermString, DEFAULT_CAP};
use crate::shape::{shape_key, ShapeKey};
use crate::ClassCount;

/// Result of a Burnside run over one mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub mode: Mode,
    /// Scan count of fixed strings for every group element.
    pub fixed_counts: BTreeMap<GroupElement, ClassCount>,
    /// Sum of all fixed counts; always `class_count · |Γ|`.
    pub burnside_total: ClassCount,
    /// The exact quotient — the number of orbits.
    pub class_count: ClassCount,
    /// Canonical representatives when the caller enumerated them too;
    /// `class_count` entries, each lexicographically minimal in its orbit.
    pub representatives: Option<Vec<PermString>>,
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Position and label lookup tables for one element, so the inner scan
/// loop is just two indexed reads per position.
fn action_tables(g: &GroupElement) -> (Vec<usize>, Vec<u8>) {
    let n = g.mode().n();
    let src = (0..n).map(|i| g.src_index(i)).collect();
    let lbl = (0..n as u8).map(|a| g.map_label(a)).collect();
    (src, lbl)
}

fn is_fixed(x: &[u8], src: &[usize], lbl: &[u8]) -> bool {
    (0..x.len()).all(|i| lbl[x[src[i]] as usize] == x[i])
}

/// True iff `g·x ≥ x` lexicographically, without materializing `g·x`.
fn image_not_below(x: &[u8], src: &[usize], lbl: &[u8]) -> bool {
    for i in 0..x.len() {
        match lbl[x[src[i]] as usize].cmp(&x[i]) {
            Ordering::Less => return false,
            Ordering::Greater => return true,
            Ordering::Equal => {}
        }
    }
    true
}

/// Number of strings in X_n fixed by `g`, by exhaustive scan.
pub fn fixed_count_scan(g: &GroupElement) -> Result<ClassCount> {
    fixed_count_scan_capped(g, DEFAULT_CAP)
}

/// [`fixed_count_scan`] with an explicit enumeration cap.
pub fn fixed_count_scan_capped(g: &GroupElement, cap: usize) -> Result<ClassCount> {
    let n = g.mode().n();
    check_cap(n, cap)?;
    let (src, lbl) = action_tables(g);
    let per_prefix: Vec<u64> = (0..n as u8)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            perm::for_each_with_prefix(n, &[first], |x| {
                if is_fixed(x, &src, &lbl) {
                    count += 1;
                }
            });
            count
        })
        .collect();
    Ok(per_prefix.into_iter().sum::<u64>().into())
}

/// Scans all of X_n once, testing every element of Γ against each string,
/// and reports the per-element fixed counts and the Burnside quotient.
pub fn burnside_count(mode: Mode) -> Result<OrbitReport> {
    burnside_count_capped(mode, DEFAULT_CAP)
}

/// [`burnside_count`] with an explicit enumeration cap.
pub fn burnside_count_capped(mode: Mode, cap: usize) -> Result<OrbitReport> {
    let n = mode.n();
    check_cap(n, cap)?;
    let els = elements(mode);
    let tables: Vec<(Vec<usize>, Vec<u8>)> = els.iter().map(action_tables).collect();
    let per_prefix: Vec<Vec<u64>> = (0..n as u8)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; els.len()];
            perm::for_each_with_prefix(n, &[first], |x| {
                for (count, (src, lbl)) in counts.iter_mut().zip(&tables) {
                    if is_fixed(x, src, lbl) {
                        *count += 1;
                    }
                }
            });
            counts
        })
        .collect();
    let mut totals = vec![0u64; els.len()];
    for part in per_prefix {
        for (total, count) in totals.iter_mut().zip(part) {
            *total += count;
        }
    }
    let fixed_counts: BTreeMap<GroupElement, ClassCount> = els
        .into_iter()
        .zip(totals.iter().map(|&t| ClassCount::from(t)))
        .collect();
    let burnside_total: ClassCount = totals.into_iter().map(ClassCount::from).sum();
    let class_count = exact_div(
        burnside_total.clone(),
        ClassCount::from(mode.group_order()),
    )?;
    Ok(OrbitReport {
        mode,
        fixed_counts,
        burnside_total,
        class_count,
        representatives: None,
    })
}

/// Scanned fixed counts grouped into the proof's component families
/// (A1–A4 for paths, B1–B4 for cycles); the brute-force counterpart of
/// [`crate::formula::component_sums`].
pub fn scanned_component_sums(mode: Mode) -> Result<Vec<(Component, ClassCount)>> {
    scanned_component_sums_capped(mode, DEFAULT_CAP)
}

/// [`scanned_component_sums`] with an explicit enumeration cap.
pub fn scanned_component_sums_capped(
    mode: Mode,
    cap: usize,
) -> Result<Vec<(Component, ClassCount)>> {
    let report = burnside_count_capped(mode, cap)?;
    Ok(components_of(&report))
}

/// Folds a report's per-element counts into its component families.
pub fn components_of(report: &OrbitReport) -> Vec<(Component, ClassCount)> {
    let mut sums: BTreeMap<Component, ClassCount> = BTreeMap::new();
    for (g, count) in &report.fixed_counts {
        let component = Component::for_family(
            report.mode.graph(),
            g.is_reversal(),
            g.is_reflection(),
        );
        *sums.entry(component).or_default() += count;
    }
    sums.into_iter().collect()
}

/// Lexicographically smallest string in the Γ-orbit of `x`.
pub fn canonical_rep(x: &PermString, mode: Mode) -> Result<PermString> {
    if x.len() != mode.n() {
        return Err(Error::LengthMismatch {
            len: x.len(),
            n: mode.n(),
        });
    }
    let mut best: Option<Vec<u8>> = None;
    let mut dst = vec![0u8; x.len()];
    for g in elements(mode) {
        g.apply_into(x.entries(), &mut dst);
        if best.as_deref().map_or(true, |b| dst.as_slice() < b) {
            best = Some(dst.clone());
        }
    }
    Ok(PermString::from_vec_unchecked(best.unwrap()))
}

/// One canonical representative per orbit, sorted, each paired with its
/// shape key.  A string is kept exactly when no group element moves it
/// lexicographically downward.
pub fn enumerate_classes(mode: Mode) -> Result<Vec<(PermString, ShapeKey)>> {
    enumerate_classes_capped(mode, DEFAULT_CAP)
}

/// [`enumerate_classes`] with an explicit enumeration cap.
pub fn enumerate_classes_capped(
    mode: Mode,
    cap: usize,
) -> Result<Vec<(PermString, ShapeKey)>> {
    let n = mode.n();
    check_cap(n, cap)?;
    let tables: Vec<(Vec<usize>, Vec<u8>)> =
        elements(mode).iter().map(action_tables).collect();
    let per_prefix: Vec<Vec<PermString>> = (0..n as u8)
        .into_par_iter()
        .map(|first| {
            let mut reps = Vec::new();
            perm::for_each_with_prefix(n, &[first], |x| {
                if tables.iter().all(|(src, lbl)| image_not_below(x, src, lbl)) {
                    reps.push(PermString::from_vec_unchecked(x.to_vec()));
                }
            });
            reps
        })
        .collect();
    per_prefix
        .into_iter()
        .flatten()
        .map(|rep| {
            let key = shape_key(&rep, mode.graph())?;
            Ok((rep, key))
        })
        .collect()
}

/// True iff some rotation or reflection carries `a` onto `b`.
pub fn similar_shapes(a: &ShapeKey, b: &ShapeKey) -> Result<bool> {
    a.is_similar_to(b)
}

/// True iff some rotation alone carries `a` onto `b`.
pub fn equivalent_shapes(a: &ShapeKey, b: &ShapeKey) -> Result<bool> {
    a.is_equivalent_to(b)
}
