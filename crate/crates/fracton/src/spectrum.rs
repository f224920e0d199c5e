//! Hausdorff-dimension classes of filling factors.
//!
//! Every nonnegative filling factor ν is assigned a label h in [1, 2]: the
//! distance from ν to the nearest odd integer, plus one. Within each unit
//! interval the map is the classical reflection spectrum
//!
//! ```text
//! h - 1 = 1 - ν (0 < ν < 1),   h - 1 = ν - 1 (1 < ν < 2),
//! h - 1 = 3 - ν (2 < ν < 3),   h - 1 = ν - 3 (3 < ν < 4),  ...
//! ```
//!
//! extended to all ν ≥ 0, with even integers labeled h = 2 and odd integers
//! h = 1. Labels pair under the duality h ↦ 3 − h; on filling factors the
//! duality reflects ν about the midpoint of its unit interval, pairing e.g.
//! (1/3, 2/3) and (5/3, 4/3), with the self-dual line at h = 3/2.
//!
//! The class of a label h is the ascending set {2k+1 ± (h−1), k = 0, 1, …}.
//! For any Farey fraction f in (0, 1) the first two members are f itself
//! and h, which is the second-member theorem checked by
//! [`check_second_member_theorem`].

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::farey::FareySequence;
use crate::rational::Fraction;

/// A nonnegative filling factor ν (numerically equal to f = N·φ0/φ).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FillingFactor(Fraction);

impl FillingFactor {
    pub fn new(value: Fraction) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeFilling(value.to_string()));
        }
        Ok(FillingFactor(value))
    }

    pub fn fraction(&self) -> &Fraction {
        &self.0
    }

    pub fn into_fraction(self) -> Fraction {
        self.0
    }
}

/// A Hausdorff dimension label, exact rational in [1, 2].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HausdorffLabel(Fraction);

impl HausdorffLabel {
    pub fn new(value: Fraction) -> Result<Self> {
        if value < Fraction::one() || value > Fraction::integer(2) {
            return Err(Error::InvalidLabel(value.to_string()));
        }
        Ok(HausdorffLabel(value))
    }

    pub fn fraction(&self) -> &Fraction {
        &self.0
    }

    pub fn into_fraction(self) -> Fraction {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

/// Maps ν to its label: h = 1 + |ν − nearest odd integer|.
///
/// With m = ⌊ν⌋ this is m + 2 − ν for even m and ν − m + 1 for odd m, which
/// also settles the boundaries: even integers map to 2, odd integers to 1.
pub fn classify(filling: &FillingFactor) -> HausdorffLabel {
    let nu = filling.fraction();
    let m = nu.floor_int();
    let h = if m.is_even() {
        Fraction::integer(m + 2) - nu.clone()
    } else {
        nu.clone() - Fraction::integer(m - 1)
    };
    HausdorffLabel::new(h).expect("reflection lands in [1, 2]")
}

/// Convenience wrapper taking a bare fraction.
pub fn classify_fraction(nu: &Fraction) -> Result<HausdorffLabel> {
    Ok(classify(&FillingFactor::new(nu.clone())?))
}

/// The dual label 3 − h. Involution with fixed point 3/2.
pub fn dual_label(label: &HausdorffLabel) -> HausdorffLabel {
    HausdorffLabel::new(Fraction::integer(3) - label.fraction().clone())
        .expect("3 - h stays in [1, 2]")
}

/// The dual filling factor: ν reflected about the midpoint of its unit
/// interval, so classify(dual ν) = 3 − classify(ν).
///
/// Integers reflect within the interval that pairs them as (0,1), (2,3), …:
/// an odd integer is treated as the right endpoint of its interval. This
/// keeps the map an involution and matches the label duality 2 ↔ 1.
pub fn dual_filling(filling: &FillingFactor) -> FillingFactor {
    let nu = filling.fraction();
    let m = nu.floor_int();
    let left = if nu.is_integer() && m.is_odd() { m - 1 } else { m };
    let reflected = Fraction::integer(2 * left + 1) - nu.clone();
    FillingFactor::new(reflected).expect("reflection preserves nonnegativity")
}

/// The fractal class of a label: all ν ≥ 0 with classify(ν) = h, ascending.
#[derive(Debug, Clone)]
pub struct FractalClass {
    label: HausdorffLabel,
}

impl FractalClass {
    pub fn new(label: HausdorffLabel) -> Self {
        FractalClass { label }
    }

    pub fn label(&self) -> &HausdorffLabel {
        &self.label
    }

    /// Lazy ascending members {2k+1 ± (h−1)}; duplicates merged, so h = 1
    /// yields the odd integers and h = 2 yields 0, 2, 4, …
    pub fn members(&self) -> impl Iterator<Item = Fraction> {
        let h = self.label.fraction().clone();
        let one = Fraction::one();
        let two = Fraction::integer(2);
        let collapsed = h == one || h == two;
        let mut k: u64 = 0;
        let mut upper_next = false;
        std::iter::from_fn(move || {
            let odd = Fraction::integer(2 * k as i64 + 1);
            let member = if collapsed {
                // one member per k once duplicates merge: the odd integers
                // for h = 1, the even integers for h = 2
                let m = if h == two { &odd - &one } else { odd.clone() };
                k += 1;
                m
            } else if upper_next {
                upper_next = false;
                let m = &odd + &h - one.clone(); // 2k+1 + (h-1)
                k += 1;
                m
            } else {
                upper_next = true;
                &odd - &h + one.clone() // 2k+1 - (h-1)
            };
            Some(member)
        })
    }

    pub fn first_members(&self, count: usize) -> Vec<Fraction> {
        self.members().take(count).collect()
    }
}

/// First `count` members of the class labeled `h`.
pub fn class_members(label: &HausdorffLabel, count: usize) -> Vec<Fraction> {
    FractalClass::new(label.clone()).first_members(count)
}

/// One Farey fraction's theorem check: its class starts (f, h).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremEntry {
    pub filling: Fraction,
    pub label: Fraction,
    pub second_member: Fraction,
    pub holds: bool,
}

/// Per-element theorem report over the interior of a Farey series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub order: u32,
    pub entries: Vec<TheoremEntry>,
}

impl TheoremReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

/// Checks, for every f in the interior of F_order, that the second member
/// of f's class equals its label exactly.
pub fn check_second_member_theorem(order: u32) -> Result<TheoremReport> {
    let seq = FareySequence::generate(order)?;
    let entries = seq
        .interior()
        .iter()
        .map(|f| {
            let label = classify_fraction(f).expect("Farey fractions are nonnegative");
            let members = class_members(&label, 2);
            let second_member = members[1].clone();
            let holds = second_member == *label.fraction();
            TheoremEntry {
                filling: f.clone(),
                label: label.into_fraction(),
                second_member,
                holds,
            }
        })
        .collect();
    Ok(TheoremReport { order, entries })
}

/// One row of the class table: the unique member of each class inside the
/// unit interval (lower, lower + 1), plus the boundary integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub lower: u32,
    pub cells: Vec<Fraction>,
}

impl TableRow {
    pub fn interval_label(&self) -> String {
        format!("{}<nu<{}", self.lower, self.lower + 1)
    }
}

/// Class members of the interior labels of F_order, tabulated per unit
/// interval, with the boundary columns h = 2 and h = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    /// Column labels, descending from 2 to 1.
    pub labels: Vec<Fraction>,
    pub rows: Vec<TableRow>,
}

/// Builds the table for the given Farey order and number of unit intervals.
///
/// Columns are the labels of the interior of F_order together with 1 and 2,
/// in descending order. In each row the h = 2 column carries the even
/// endpoint of the interval and the h = 1 column the odd endpoint; interior
/// columns carry lower + 2 − h (even lower) or h + lower − 1 (odd lower).
pub fn class_table(order: u32, rows: u32) -> Result<ClassTable> {
    if rows == 0 {
        return Err(Error::InvalidOrder);
    }
    let seq = FareySequence::generate(order)?;
    let mut labels: BTreeSet<Fraction> = seq
        .interior()
        .iter()
        .map(|f| classify_fraction(f).expect("nonnegative").into_fraction())
        .collect();
    labels.insert(Fraction::one());
    labels.insert(Fraction::integer(2));
    let labels: Vec<Fraction> = labels.into_iter().rev().collect();

    let one = Fraction::one();
    let two = Fraction::integer(2);
    let table_rows = (0..rows)
        .map(|lower| {
            let r = lower as i64;
            let cells = labels
                .iter()
                .map(|h| {
                    if *h == two {
                        Fraction::integer(if r % 2 == 0 { r } else { r + 1 })
                    } else if *h == one {
                        Fraction::integer(if r % 2 == 0 { r + 1 } else { r })
                    } else if r % 2 == 0 {
                        Fraction::integer(r + 2) - h.clone()
                    } else {
                        h.clone() + Fraction::integer(r - 1)
                    }
                })
                .collect();
            TableRow { lower, cells }
        })
        .collect();

    Ok(ClassTable {
        labels,
        rows: table_rows,
    })
}

/// Filling factor from electron number and flux ratio: N·φ0/φ.
pub fn filling_factor(electrons: u64, flux_quantum: f64, flux: f64) -> Result<f64> {
    if electrons == 0 || flux_quantum <= 0.0 || flux <= 0.0 {
        return Err(Error::NonpositiveInput);
    }
    Ok(electrons as f64 * flux_quantum / flux)
}

/// Filling factor from spin via ν = 2s.
pub fn filling_from_spin(spin: &Fraction) -> Result<Fraction> {
    if spin.is_negative() {
        return Err(Error::NegativeSpin(spin.to_string()));
    }
    Ok(Fraction::integer(2) * spin.clone())
}
