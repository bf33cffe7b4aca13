//! The finite-volume census: every family whose orbifold is compact or
//! cusped of finite volume, as validated registry data.
//!
//! Infinite families (one or two unbounded odd/even parameters) are
//! enumerated lazily up to a caller-supplied bound. Three absence facts are
//! part of the data: no compact orbifold has a GT, S2, or R group, and no
//! finite-volume cusped orbifold has an H, P, or R group.

use serde::{Deserialize, Serialize};

use crate::exponent::ExtExp;
use crate::family::{FamilyData, FamilyInstance};
use crate::presentation::Schema;
use crate::table::{generate_family, TableError};
use crate::upoint::UPoint;
use crate::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusFilter {
    All,
    Compact,
    Cusped,
}

/// One finite-volume family member. `exponents` follow the schema's slot
/// order (`Tet6` has the single slot of Tet[2,3,3;2,3,·]).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub schema: Schema,
    pub exponents: Vec<ExtExp>,
    pub compact: bool,
}

impl CensusEntry {
    fn new(schema: Schema, exps: &[u32], compact: bool) -> Self {
        CensusEntry {
            schema,
            exponents: exps.iter().map(|&k| ExtExp::Fin(k)).collect(),
            compact,
        }
    }

    pub fn group_name(&self) -> String {
        self.schema.display_with(&self.exponents)
    }
}

/// Enumerate the census. Unbounded integer parameters run up to `bound`.
pub fn finite_volume_census(
    filter: CensusFilter,
    schema: Option<Schema>,
    bound: u32,
) -> Vec<CensusEntry> {
    let mut out = Vec::new();
    let mut push = |entry: CensusEntry| {
        let wanted = match filter {
            CensusFilter::All => true,
            CensusFilter::Compact => entry.compact,
            CensusFilter::Cusped => !entry.compact,
        };
        if wanted && schema.is_none_or(|s| s == entry.schema) {
            out.push(entry);
        }
    };

    // -------- compact --------
    for m in 3..=5 {
        push(CensusEntry::new(Schema::PH, &[4, m, 3], true));
    }
    for hm in [[2, 2, 3, 5], [2, 2, 5, 3], [2, 3, 5, 2]] {
        push(CensusEntry::new(Schema::H, &hm, true));
    }
    for q3 in [4, 5] {
        push(CensusEntry::new(Schema::Tet6, &[q3], true));
    }
    for tet in [[5, 4, 3], [5, 5, 3], [3, 3, 5]] {
        push(CensusEntry::new(Schema::Tet, &tet, true));
    }
    for n in (8..=bound).step_by(2) {
        for q in [3, 5] {
            push(CensusEntry::new(Schema::P, &[n, 3, q], true));
        }
    }
    for n in (4..=bound).step_by(2) {
        push(CensusEntry::new(Schema::P, &[n, 5, 3], true));
    }
    for n in (7..=bound).step_by(2) {
        for q in 3..=5 {
            push(CensusEntry::new(Schema::GTet2, &[n, 3, q], true));
        }
    }
    for n in (5..=bound).step_by(2) {
        push(CensusEntry::new(Schema::GTet2, &[n, 5, 3], true));
    }
    for n in (3..=bound).step_by(2) {
        for m in (3..=bound).step_by(2) {
            if 2 * (u64::from(n) + u64::from(m)) < u64::from(n) * u64::from(m) {
                push(CensusEntry::new(Schema::GTet2, &[n, m, 2], true));
            }
        }
    }
    for n in (5..=bound).step_by(2) {
        push(CensusEntry::new(Schema::S3, &[n, 2, 2], true));
    }
    for s3 in [[5, 2, 3], [5, 3, 2], [3, 4, 2], [3, 5, 2]] {
        push(CensusEntry::new(Schema::S3, &s3, true));
    }
    for n in 7..=bound {
        push(CensusEntry::new(Schema::GTet1, &[n, 3, 2], true));
    }

    // -------- cusped, finite volume --------
    for gt in [[3, 3, 3], [4, 4, 2], [4, 3, 2]] {
        push(CensusEntry::new(Schema::GT, &gt, false));
    }
    push(CensusEntry::new(Schema::PH, &[4, 6, 3], false));
    for m in 2..=6 {
        push(CensusEntry::new(Schema::PH, &[6, m, 3], false));
    }
    for m in 3..=6 {
        push(CensusEntry::new(Schema::Tet, &[6, m, 3], false));
    }
    for m in [3, 4] {
        push(CensusEntry::new(Schema::S2, &[4, m, 2], false));
    }
    for n in (7..=bound).step_by(2) {
        push(CensusEntry::new(Schema::GTet2, &[n, 3, 6], false));
    }
    push(CensusEntry::new(Schema::S3, &[3, 6, 2], false));
    for n in (8..=bound).step_by(2) {
        push(CensusEntry::new(Schema::GTet1, &[n, 3, 3], false));
    }

    out
}

fn fin(e: ExtExp) -> u32 {
    e.finite().expect("census exponents are finite")
}

/// A table-row instantiation generating the entry's parameters.
///
/// Most schemas map onto one row directly; the H entries written
/// `H[2;2,m;q]` use that `H[p;n,m;q] ≅ H[p;m,n;q]` (swap the two rotation
/// generators) to land on the rows stated for `H[2;m,2;q]`.
pub fn generating_instance(
    entry: &CensusEntry,
    cfg: &Config,
) -> Result<FamilyInstance, TableError> {
    let e = &entry.exponents;
    let (row, data) = match entry.schema {
        Schema::GT => (
            1,
            FamilyData::empty()
                .with_upoint("u", UPoint::Angle(fin(e[0])))
                .with_upoint("v", UPoint::Angle(fin(e[1])))
                .with_upoint("w", UPoint::Angle(2 * fin(e[2]))),
        ),
        Schema::Tet => (
            2,
            FamilyData::empty()
                .with_upoint("u", UPoint::Angle(fin(e[0])))
                .with_upoint("v", UPoint::Angle(fin(e[1])))
                .with_upoint("w", UPoint::Angle(fin(e[2]))),
        ),
        Schema::Tet6 => (9, FamilyData::empty().with_int("m", fin(e[0]))),
        Schema::PH => (
            17,
            FamilyData::empty()
                .with_int("n", fin(e[0]))
                .with_upoint("u", UPoint::Angle(2 * fin(e[1])))
                .with_upoint("v", UPoint::Angle(fin(e[2]))),
        ),
        Schema::H => match (fin(e[1]), fin(e[2]), fin(e[3])) {
            (2, 3, 5) => (12, FamilyData::empty().with_int("plus", 0)),
            (2, 5, 3) => (11, FamilyData::empty().with_int("plus", 0)),
            (3, m, 2) => (10, FamilyData::empty().with_int("n", m)),
            (3, 3, q) => (15, FamilyData::empty().with_int("q", q)),
            (3, 2, 5) => (12, FamilyData::empty().with_int("plus", 0)),
            (5, 2, 3) => (11, FamilyData::empty().with_int("plus", 0)),
            _ => return Err(TableError::NoSuchRow(0)),
        },
        Schema::P => (
            19,
            FamilyData::empty()
                .with_int("n", fin(e[0]))
                .with_upoint("u", UPoint::Angle(fin(e[1])))
                .with_upoint("v", UPoint::Angle(fin(e[2]))),
        ),
        Schema::GTet2 => (
            23,
            FamilyData::empty()
                .with_int("n", fin(e[0]))
                .with_upoint("u", UPoint::Angle(fin(e[1])))
                .with_upoint("v", UPoint::Angle(fin(e[2]))),
        ),
        Schema::S2 => (
            18,
            FamilyData::empty()
                .with_int("n", fin(e[0]))
                .with_upoint("u", UPoint::Angle(2 * fin(e[1])))
                .with_upoint("v", UPoint::Angle(2 * fin(e[2]))),
        ),
        Schema::S3 => (
            21,
            FamilyData::empty()
                .with_int("n", fin(e[0]))
                .with_upoint("u", UPoint::Angle(2 * fin(e[1])))
                .with_upoint("v", UPoint::Angle(fin(e[2]))),
        ),
        Schema::GTet1 => {
            let n = fin(e[0]);
            if n % 2 == 1 {
                (22, FamilyData::empty().with_int("n", n))
            } else {
                (
                    20,
                    FamilyData::empty()
                        .with_int("n", n)
                        .with_upoint("u", UPoint::Angle(fin(e[1])))
                        .with_upoint("v", UPoint::Angle(2 * fin(e[2]))),
                )
            }
        }
        Schema::R => (16, FamilyData::empty().with_int("n", fin(e[0]))),
    };
    generate_family(row, data, cfg)
}
