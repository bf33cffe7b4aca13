//! Family-table instances and classification results.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exponent::ExtExp;
use crate::presentation::Schema;
use crate::trace::Parameters;
use crate::upoint::UPoint;

/// Identifies one row of the 24-row family table. The row determines the
/// presentation schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyId {
    pub schema: Schema,
    pub row: u8,
}

impl FamilyId {
    pub fn new(row: u8) -> FamilyId {
        FamilyId {
            schema: schema_of_row(row),
            row,
        }
    }
}

/// Schema of each table row.
pub fn schema_of_row(row: u8) -> Schema {
    match row {
        1 => Schema::GT,
        2..=8 => Schema::Tet,
        9 => Schema::Tet6,
        10..=15 => Schema::H,
        16 => Schema::R,
        17 => Schema::PH,
        18 => Schema::S2,
        19 => Schema::P,
        20 | 22 => Schema::GTet1,
        21 => Schema::S3,
        23 | 24 => Schema::GTet2,
        _ => panic!("table rows are 1..=24, got {row}"),
    }
}

/// Slot values for one row: named integers and named half-lengths.
///
/// Rows 11 and 12 carry a two-valued `±` constant; the branch is selected by
/// the integer slot `plus` (1 for the `+` sign, 0 for `−`).
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FamilyData {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ints: BTreeMap<String, u32>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub upoints: BTreeMap<String, UPoint>,
}

impl FamilyData {
    pub fn empty() -> Self {
        FamilyData::default()
    }

    pub fn with_int(mut self, name: &str, value: u32) -> Self {
        self.ints.insert(name.to_string(), value);
        self
    }

    pub fn with_upoint(mut self, name: &str, value: UPoint) -> Self {
        self.upoints.insert(name.to_string(), value);
        self
    }

    pub fn int(&self, name: &str) -> Option<u32> {
        self.ints.get(name).copied()
    }

    pub fn upoint(&self, name: &str) -> Option<UPoint> {
        self.upoints.get(name).copied()
    }
}

impl fmt::Display for FamilyData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.ints.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.extend(self.upoints.iter().map(|(k, v)| format!("{k}={v}")));
        write!(f, "{}", parts.join(", "))
    }
}

/// One instantiated table row: slot data, the induced parameter triple, and
/// the exponents of the group's presentation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub data: FamilyData,
    pub params: Parameters,
    /// Exponent slots of `id.schema`, e.g. `[t(u), t(v), t(w)/2]` for GT.
    pub exponents: Vec<ExtExp>,
    /// Set when this match was found with the roles of (β, β′) exchanged
    /// relative to the classified input.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub swapped: bool,
}

impl FamilyInstance {
    /// Group name in family notation, e.g. `GT[3,3;inf]`.
    pub fn group_name(&self) -> String {
        self.id.schema.display_with(&self.exponents)
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {}: {}", self.id.row, self.group_name())?;
        if !(self.data.ints.is_empty() && self.data.upoints.is_empty()) {
            write!(f, " [{}]", self.data)?;
        }
        Ok(())
    }
}

/// Verdict of the parameter-space classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClassificationResult {
    /// The triple fails the class-D gate; the table does not apply.
    NotClassD,
    /// Discrete, with every matching table row listed in ascending row
    /// order.
    DiscreteInD { matches: Vec<FamilyInstance> },
    /// Inside the gate and matched by no row: not discrete, by completeness
    /// of the table.
    NotDiscrete,
    /// A row inversion hit the integer search bound or an inequality sits
    /// within tolerance of equality; neither confirmed nor excluded.
    Unresolved { reason: String },
}

impl ClassificationResult {
    pub fn is_discrete(&self) -> bool {
        matches!(self, ClassificationResult::DiscreteInD { .. })
    }

    pub fn matches(&self) -> &[FamilyInstance] {
        match self {
            ClassificationResult::DiscreteInD { matches } => matches,
            _ => &[],
        }
    }

    /// Stable numeric code (also the CLI exit status).
    pub fn code(&self) -> i32 {
        match self {
            ClassificationResult::DiscreteInD { .. } => 0,
            ClassificationResult::NotDiscrete => 1,
            ClassificationResult::NotClassD => 2,
            ClassificationResult::Unresolved { .. } => 3,
        }
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationResult::NotClassD => write!(f, "not in class D"),
            ClassificationResult::DiscreteInD { matches } => {
                writeln!(
                    f,
                    "discrete ({} match{})",
                    matches.len(),
                    if matches.len() == 1 { "" } else { "es" }
                )?;
                for m in matches {
                    writeln!(f, "  {m}")?;
                }
                Ok(())
            }
            ClassificationResult::NotDiscrete => write!(f, "not discrete"),
            ClassificationResult::Unresolved { reason } => write!(f, "unresolved: {reason}"),
        }
    }
}
