//! Straight-line validity scan, kept independent of the search engine so it
//! can serve as the oracle for every solver result.

use super::{Coloring, MonoConstraint, RainbowConstraint, SolveError, WormInstance};
use crate::bitset::VertexSet;
use serde::Serialize;
use std::collections::{HashMap, HashSet};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    /// Forbidden copies that are monochromatic.
    pub monochromatic: Vec<VertexSet>,
    /// Forbidden copies that are rainbow.
    pub rainbow: Vec<VertexSet>,
    /// `(color, class size)` for classes reaching the monochromatic cap.
    pub class_cap: Vec<(usize, usize)>,
    /// Number of colors, when it reaches the rainbow cap.
    pub color_cap: Option<usize>,
}

impl ViolationReport {
    pub fn is_valid(&self) -> bool {
        self.monochromatic.is_empty()
            && self.rainbow.is_empty()
            && self.class_cap.is_empty()
            && self.color_cap.is_none()
    }
}

pub fn check(instance: &WormInstance, c: &Coloring) -> Result<ViolationReport, SolveError> {
    let n = instance.order();
    if c.len() != n {
        return Err(SolveError::LengthMismatch {
            expected: n,
            found: c.len(),
        });
    }
    let colors = c.colors();
    let mut report = ViolationReport::default();

    match &instance.mono {
        MonoConstraint::Copies(fam) => {
            for s in fam.iter() {
                let first = colors[s.first().expect("copies are nonempty")];
                if s.iter().all(|v| colors[v] == first) {
                    report.monochromatic.push(s);
                }
            }
        }
        MonoConstraint::ClassCap(k) => {
            let mut sizes: HashMap<usize, usize> = HashMap::new();
            for &col in colors {
                *sizes.entry(col).or_default() += 1;
            }
            let mut over: Vec<(usize, usize)> =
                sizes.into_iter().filter(|&(_, size)| size >= *k).collect();
            over.sort_unstable();
            report.class_cap = over;
        }
    }

    match &instance.rainbow {
        RainbowConstraint::Copies(fam) => {
            for s in fam.iter() {
                let distinct: HashSet<usize> = s.iter().map(|v| colors[v]).collect();
                if distinct.len() == s.len() {
                    report.rainbow.push(s);
                }
            }
        }
        RainbowConstraint::ColorCap(k) => {
            let used: HashSet<usize> = colors.iter().copied().collect();
            if used.len() >= *k {
                report.color_cap = Some(used.len());
            }
        }
    }
    Ok(report)
}
