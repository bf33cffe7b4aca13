//! The family table: parameter triples of the discrete class-D groups.
//!
//! Each of the 24 rows gives (β, γ, β′) by closed formulas in integer slots
//! (n, m, q) and half-length slots (u, v, w), together with side conditions,
//! and names the group's presentation. The table is complete: a gated triple
//! matching no row is not discrete.
//!
//! One printed row (row 14) carries constants that contradict the
//! membership gate; it is kept verbatim but admits no instance — see the
//! row test for the exact defect.
//!
//! Both directions are provided. [`generate_family`] instantiates a row and
//! validates its side conditions; [`classify`] inverts every row in closed
//! form against a given triple. [`two_elliptic_discreteness`] is the
//! three-clause criterion for two primitive elliptic generators, and
//! [`admissible_exponents`] checks the per-schema exponent conditions that
//! characterise which families occur.

use std::f64::consts::PI;

use thiserror::Error;

use crate::exponent::ExtExp;
use crate::family::{ClassificationResult, FamilyData, FamilyId, FamilyInstance};
use crate::trace::{
    beta_elliptic, classify_element, is_class_d, ElementClass, ElementType, Parameters,
};
use crate::upoint::{
    integer_from, upoint_from_beta, upoint_from_cosh, upoint_from_cosh_sq,
    upoint_from_neg4_cosh_sq, SlotCond, SlotMatch, UPoint,
};
use crate::{Config, Schema};

pub const ROW_COUNT: u8 = 24;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error("row {row}: missing slot {name}")]
    MissingSlot { row: u8, name: &'static str },
    #[error("row {row}: condition violated: {condition}")]
    ConditionViolated { row: u8, condition: &'static str },
    #[error("row {row}: {condition} sits within tolerance of equality")]
    NearEquality { row: u8, condition: &'static str },
    #[error("row {row}: parameters fail the class-D gate")]
    GateFailed { row: u8 },
    #[error("table rows are 1..=24, got {0}")]
    NoSuchRow(u8),
    #[error("schema {schema} takes {expected} exponents, got {got}")]
    Arity {
        schema: Schema,
        expected: usize,
        got: usize,
    },
}

/// Outcome of the strict inequalities that carry a tolerance band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ineq {
    Holds,
    Fails,
    Near,
}

fn strict_gt(lhs: f64, rhs: f64, tol: f64) -> Ineq {
    if (lhs - rhs).abs() <= tol * 1f64.max(lhs.abs()).max(rhs.abs()) {
        Ineq::Near
    } else if lhs > rhs {
        Ineq::Holds
    } else {
        Ineq::Fails
    }
}

/// `1/n + 1/t < 1/2`, exactly (infinite t contributes 0).
fn quarter_cond(n: u32, t: ExtExp) -> bool {
    match t {
        ExtExp::Fin(k) => 2 * (u64::from(n) + u64::from(k)) < u64::from(n) * u64::from(k),
        _ => n > 2,
    }
}

/// `a/n + 1/m < 1`, exactly.
fn sum_lt_one(a: u32, n: u32, m: ExtExp) -> bool {
    match m {
        ExtExp::Fin(k) => u64::from(a) * u64::from(k) + u64::from(n) < u64::from(n) * u64::from(k),
        _ => n > a,
    }
}

fn sqrt5() -> f64 {
    5f64.sqrt()
}

/// Slot names per row: `(integer slots, half-length slots)`.
pub fn row_slots(
    row: u8,
) -> Result<(&'static [&'static str], &'static [&'static str]), TableError> {
    Ok(match row {
        1 | 2 => (&[], &["u", "v", "w"]),
        3 => (&["n"], &["u"]),
        4 => (&["m"], &[]),
        5 | 8 | 13 | 14 => (&[], &[]),
        6 | 15 => (&["q"], &[]),
        7 => (&[], &["u"]),
        9 => (&["m"], &[]),
        10 | 16 | 22 => (&["n"], &[]),
        11 | 12 => (&["plus"], &[]),
        17..=21 | 23 => (&["n"], &["u", "v"]),
        24 => (&["n"], &["v"]),
        _ => return Err(TableError::NoSuchRow(row)),
    })
}

struct RowOutput {
    params: Parameters,
    exponents: Vec<ExtExp>,
}

fn need_int(row: u8, data: &FamilyData, name: &'static str) -> Result<u32, TableError> {
    data.int(name).ok_or(TableError::MissingSlot { row, name })
}

fn need_u(row: u8, data: &FamilyData, name: &'static str) -> Result<UPoint, TableError> {
    data.upoint(name)
        .ok_or(TableError::MissingSlot { row, name })
}

fn cond(row: u8, ok: bool, condition: &'static str) -> Result<(), TableError> {
    if ok {
        Ok(())
    } else {
        Err(TableError::ConditionViolated { row, condition })
    }
}

/// The planes-exist inequality of the two-elliptic rows,
/// `cos(π/t(w)) > sin(π/t(u)) sin(π/t(v))`, with the tolerance band.
fn plane_ineq(row: u8, u: UPoint, v: UPoint, w: UPoint, tol: f64) -> Result<(), TableError> {
    let lhs = w.t().cos_pi_over();
    let rhs = u.t().sin_pi_over() * v.t().sin_pi_over();
    match strict_gt(lhs, rhs, tol) {
        Ineq::Holds => Ok(()),
        Ineq::Fails => Err(TableError::ConditionViolated {
            row,
            condition: "cos(pi/t(w)) > sin(pi/t(u)) sin(pi/t(v))",
        }),
        Ineq::Near => Err(TableError::NearEquality {
            row,
            condition: "cos(pi/t(w)) > sin(pi/t(u)) sin(pi/t(v))",
        }),
    }
}

/// Evaluate one table row on slot data: side conditions, the parameter
/// triple, and the presentation exponents.
fn compute_row(row: u8, data: &FamilyData, cfg: &Config) -> Result<RowOutput, TableError> {
    let out = match row {
        1 | 2 => {
            let u = need_u(row, data, "u")?;
            let v = need_u(row, data, "v")?;
            let w = need_u(row, data, "w")?;
            cond(row, u.t() >= 3, "t(u) >= 3")?;
            cond(row, v.t() >= 3, "t(v) >= 3")?;
            if row == 1 {
                cond(row, w.t().is_even_or_infinite(), "(t(w),2) = 2")?;
            } else {
                cond(row, w.t().is_odd(), "(t(w),2) = 1")?;
            }
            plane_ineq(row, u, v, w, cfg.tol)?;
            let params = Parameters::new(4.0 * u.sinh_sq(), 4.0 * v.sinh_sq(), -4.0 * w.cosh_sq());
            let exponents = if row == 1 {
                vec![
                    u.t(),
                    v.t(),
                    w.t().checked_div(2).expect("even or infinite"),
                ]
            } else {
                vec![u.t(), v.t(), w.t()]
            };
            RowOutput { params, exponents }
        }
        3 => {
            let n = need_int(row, data, "n")?;
            let u = need_u(row, data, "u")?;
            cond(row, n >= 5 && n % 2 == 1, "n >= 5, (n,2) = 1")?;
            cond(row, u.t() >= 3, "t(u) >= 3")?;
            cond(
                row,
                !(n == 5 && u.t() == ExtExp::Fin(3)),
                "{n, t(u)} != {5, 3}",
            )?;
            let beta = beta_elliptic(n);
            let gamma = -(beta + 2.0) * (beta + 2.0);
            let beta_prime = 4.0 * (beta + 4.0) * u.cosh_sq() - 4.0;
            RowOutput {
                params: Parameters::new(beta, beta_prime, gamma),
                exponents: vec![u.t(), ExtExp::Fin(n), ExtExp::Fin(3)],
            }
        }
        4 => {
            let m = need_int(row, data, "m")?;
            cond(row, m >= 5 && m % 2 == 1, "m >= 5, (m,2) = 1")?;
            let gamma = 2.0 * (2.0 * PI / f64::from(m)).cos();
            RowOutput {
                params: Parameters::new(-2.0, gamma * gamma + 4.0 * gamma, gamma),
                exponents: vec![ExtExp::Fin(4), ExtExp::Fin(m), ExtExp::Fin(3)],
            }
        }
        5 => RowOutput {
            params: Parameters::new(-3.0, sqrt5() - 1.0, (sqrt5() - 1.0) / 2.0),
            exponents: vec![ExtExp::Fin(4), ExtExp::Fin(5), ExtExp::Fin(3)],
        },
        6 => {
            let q = need_int(row, data, "q")?;
            cond(row, q >= 7 && q % 2 == 1, "q >= 7, (q,4) = 1")?;
            let gamma = 2.0 * (2.0 * PI / f64::from(q)).cos();
            RowOutput {
                params: Parameters::new(-3.0, 2.0 * gamma, gamma),
                exponents: vec![ExtExp::Fin(3), ExtExp::Fin(4), ExtExp::Fin(q)],
            }
        }
        7 => {
            let u = need_u(row, data, "u")?;
            cond(row, u.t() >= 3, "t(u) >= 3")?;
            let beta_prime = 2.0 * (7.0 + 3.0 * sqrt5()) * u.cosh_sq() - 4.0;
            RowOutput {
                params: Parameters::new(-3.0, beta_prime, (sqrt5() - 3.0) / 2.0),
                exponents: vec![ExtExp::Fin(3), u.t(), ExtExp::Fin(5)],
            }
        }
        8 => RowOutput {
            params: Parameters::new(
                (sqrt5() - 5.0) / 2.0,
                (3.0 * sqrt5() - 1.0) / 2.0,
                (sqrt5() - 1.0) / 2.0,
            ),
            exponents: vec![ExtExp::Fin(3), ExtExp::Fin(3), ExtExp::Fin(5)],
        },
        9 => {
            let m = need_int(row, data, "m")?;
            cond(row, m >= 4 && m % 3 != 0, "m >= 4, (m,3) = 1")?;
            let gamma = 2.0 * (PI / f64::from(m)).cos() - 1.0;
            RowOutput {
                params: Parameters::new(-3.0, gamma * gamma + 4.0 * gamma, gamma),
                exponents: vec![ExtExp::Fin(m)],
            }
        }
        10 => {
            let n = need_int(row, data, "n")?;
            cond(row, n >= 5 && n % 2 == 1 && n % 3 != 0, "n >= 5, (n,6) = 1")?;
            let beta = beta_elliptic(n);
            let c = (PI / f64::from(n)).cos();
            let beta_prime = (2.0 / beta) * ((beta - 3.0) * c - 2.0 * beta - 3.0);
            RowOutput {
                params: Parameters::new(beta, beta_prime, beta + 3.0),
                exponents: vec![
                    ExtExp::Fin(2),
                    ExtExp::Fin(3),
                    ExtExp::Fin(n),
                    ExtExp::Fin(2),
                ],
            }
        }
        11 | 12 => {
            let plus = need_int(row, data, "plus")?;
            cond(row, plus <= 1, "plus in {0, 1}")?;
            let sign = if plus == 1 { 1.0 } else { -1.0 };
            let gamma = (sqrt5() + sign) / 2.0;
            let (beta, beta_prime, exps) = if row == 11 {
                (
                    (sqrt5() - 5.0) / 2.0,
                    3.0 * (sqrt5() + 1.0) / 2.0,
                    [2, 5, 2, 3],
                )
            } else {
                (-3.0, sqrt5(), [2, 3, 2, 5])
            };
            RowOutput {
                params: Parameters::new(beta, beta_prime, gamma),
                exponents: exps.into_iter().map(ExtExp::Fin).collect(),
            }
        }
        13 => RowOutput {
            params: Parameters::new((sqrt5() - 5.0) / 2.0, sqrt5(), (sqrt5() - 1.0) / 2.0),
            exponents: vec![
                ExtExp::Fin(2),
                ExtExp::Fin(3),
                ExtExp::Fin(2),
                ExtExp::Fin(5),
            ],
        },
        14 => RowOutput {
            params: Parameters::new(
                (sqrt5() - 5.0) / 2.0,
                (5.0 * sqrt5() + 9.0) / 2.0,
                sqrt5() + 2.0,
            ),
            exponents: vec![
                ExtExp::Fin(2),
                ExtExp::Fin(3),
                ExtExp::Fin(2),
                ExtExp::Fin(5),
            ],
        },
        15 => {
            let q = need_int(row, data, "q")?;
            cond(row, q >= 8 && q % 2 == 0 && q % 4 != 0, "q >= 8, (q,4) = 2")?;
            let gamma = 2.0 * (2.0 * PI / f64::from(q)).cos();
            RowOutput {
                params: Parameters::new(-3.0, 2.0 * gamma, gamma),
                exponents: vec![
                    ExtExp::Fin(2),
                    ExtExp::Fin(3),
                    ExtExp::Fin(3),
                    ExtExp::Fin(q),
                ],
            }
        }
        16 => {
            let n = need_int(row, data, "n")?;
            cond(row, n >= 5 && n % 2 == 1 && n % 3 != 0, "n >= 5, (n,6) = 1")?;
            let beta = beta_elliptic(n);
            let c = (PI / f64::from(n)).cos();
            let beta_prime = -(6.0 / beta) * (2.0 * c + beta + 2.0);
            RowOutput {
                params: Parameters::new(beta, beta_prime, 2.0 * (beta + 3.0)),
                exponents: vec![ExtExp::Fin(n), ExtExp::Fin(2), ExtExp::Fin(2)],
            }
        }
        17..=20 => {
            let n = need_int(row, data, "n")?;
            let u = need_u(row, data, "u")?;
            let v = need_u(row, data, "v")?;
            cond(row, n >= 4 && n % 2 == 0, "4 <= n < inf, (n,2) = 2")?;
            if row <= 18 {
                cond(row, u.t().is_even_or_infinite(), "(t(u),2) = 2")?;
            } else {
                cond(row, u.t().is_odd(), "(t(u),2) = 1")?;
            }
            cond(row, quarter_cond(n, u.t()), "1/n + 1/t(u) < 1/2")?;
            if row == 17 || row == 19 {
                cond(row, v.t().is_odd() && v.t() >= 3, "t(v) >= 3, (t(v),2) = 1")?;
            } else {
                cond(
                    row,
                    v.t().is_even_or_infinite() && v.t() >= 4,
                    "t(v) >= 4, (t(v),2) = 2",
                )?;
            }
            let beta = beta_elliptic(n);
            let gamma = 4.0 * u.cosh_sq() + beta;
            let beta_prime = if row <= 18 {
                (4.0 / gamma) * v.cosh_sq() - 4.0 * gamma / beta
            } else {
                (4.0 * (gamma - beta) / gamma) * v.cosh_sq() - 4.0 * gamma / beta
            };
            let exponents = match row {
                17 => vec![ExtExp::Fin(n), u.t().checked_div(2).unwrap(), v.t()],
                18 => vec![
                    ExtExp::Fin(n),
                    u.t().checked_div(2).unwrap(),
                    v.t().checked_div(2).unwrap(),
                ],
                19 => vec![ExtExp::Fin(n), u.t(), v.t()],
                _ => vec![ExtExp::Fin(n), u.t(), v.t().checked_div(2).unwrap()],
            };
            RowOutput {
                params: Parameters::new(beta, beta_prime, gamma),
                exponents,
            }
        }
        21 | 23 => {
            let n = need_int(row, data, "n")?;
            let u = need_u(row, data, "u")?;
            let v = need_u(row, data, "v")?;
            cond(row, n >= 3 && n % 2 == 1, "n >= 3, (n,2) = 1")?;
            if row == 21 {
                cond(row, u.t().is_even_or_infinite(), "(t(u),2) = 2")?;
            } else {
                cond(row, u.t().is_odd(), "(t(u),2) = 1")?;
            }
            cond(row, quarter_cond(n, u.t()), "1/n + 1/t(u) < 1/2")?;
            let beta = beta_elliptic(n);
            let gamma = 4.0 * u.cosh_sq() + beta;
            let c = (PI / f64::from(n)).cos();
            let shared = (2.0 / (gamma * beta))
                * ((gamma - beta) * (gamma - beta) * c + gamma * (gamma + beta));
            let beta_prime = if row == 21 {
                (2.0 / gamma) * (v.cosh() - c) - shared
            } else {
                (2.0 * (gamma - beta) / gamma) * v.cosh() - shared
            };
            let exponents = if row == 21 {
                vec![ExtExp::Fin(n), u.t().checked_div(2).unwrap(), v.t()]
            } else {
                vec![ExtExp::Fin(n), u.t(), v.t()]
            };
            RowOutput {
                params: Parameters::new(beta, beta_prime, gamma),
                exponents,
            }
        }
        22 => {
            let n = need_int(row, data, "n")?;
            cond(row, n >= 7 && n % 2 == 1, "n >= 7, (n,2) = 1")?;
            let gamma = 2.0 * (2.0 * PI / f64::from(n)).cos() - 1.0;
            let beta_prime = (2.0 / gamma) * (gamma * gamma + 2.0 * gamma + 2.0);
            RowOutput {
                params: Parameters::new(-3.0, beta_prime, gamma),
                exponents: vec![ExtExp::Fin(n), ExtExp::Fin(3), ExtExp::Fin(2)],
            }
        }
        24 => {
            let n = need_int(row, data, "n")?;
            let v = need_u(row, data, "v")?;
            cond(row, n >= 7 && n % 2 == 1, "n >= 7, (n,2) = 1")?;
            let beta = beta_elliptic(n);
            let gamma = (beta + 4.0) * (beta + 1.0);
            let c = (PI / f64::from(n)).cos();
            let beta_prime = (2.0 * (beta + 2.0) * (beta + 2.0) / (beta + 1.0)) * (v.cosh() - c)
                - (2.0 / beta) * (beta * beta + 6.0 * beta + 4.0);
            RowOutput {
                params: Parameters::new(beta, beta_prime, gamma),
                exponents: vec![ExtExp::Fin(n), ExtExp::Fin(3), v.t()],
            }
        }
        _ => return Err(TableError::NoSuchRow(row)),
    };
    Ok(out)
}

/// Instantiate a table row, validating every side condition and the class-D
/// gate.
pub fn generate_family(
    row: u8,
    data: FamilyData,
    cfg: &Config,
) -> Result<FamilyInstance, TableError> {
    let out = compute_row(row, &data, cfg)?;
    if !is_class_d(out.params, cfg) {
        return Err(TableError::GateFailed { row });
    }
    Ok(FamilyInstance {
        id: FamilyId::new(row),
        data,
        params: out.params,
        exponents: out.exponents,
        swapped: false,
    })
}

/// Result of scanning one row against a triple.
struct RowScan {
    hits: Vec<FamilyData>,
    unresolved: Option<&'static str>,
}

impl RowScan {
    fn none() -> Self {
        RowScan {
            hits: Vec::new(),
            unresolved: None,
        }
    }
    fn unresolved(reason: &'static str) -> Self {
        RowScan {
            hits: Vec::new(),
            unresolved: Some(reason),
        }
    }
    fn one(data: FamilyData) -> Self {
        RowScan {
            hits: vec![data],
            unresolved: None,
        }
    }
}

/// Combine independent slot matches into a row candidate: any `Miss` kills
/// the row, otherwise any `Unresolved` leaves it undecided.
fn join_slots(slots: Vec<(&'static str, SlotMatch)>) -> Result<Option<FamilyData>, &'static str> {
    if slots.iter().any(|(_, m)| matches!(m, SlotMatch::Miss)) {
        return Ok(None);
    }
    if slots
        .iter()
        .any(|(_, m)| matches!(m, SlotMatch::Unresolved))
    {
        return Err("half-length slot inversion beyond the integer bound");
    }
    let mut data = FamilyData::empty();
    for (name, m) in slots {
        data = data.with_upoint(name, m.hit().expect("hits only"));
    }
    Ok(Some(data))
}

/// Invert the β-cell `−4 sin²(π/n)` for an integer slot.
fn invert_beta_cell(beta: f64, accept: impl Fn(u32) -> bool, cfg: &Config) -> SlotMatch {
    if !(-4.0..0.0).contains(&beta) {
        return SlotMatch::Miss;
    }
    let approx = PI / ((-beta).sqrt() / 2.0).min(1.0).asin();
    integer_from(approx, beta_elliptic, beta, accept, cfg.tol, cfg.int_bound)
}

/// Invert `target = 2 cos(a·π/x) + shift` for an integer slot.
fn invert_two_cos(
    target: f64,
    a: f64,
    shift: f64,
    accept: impl Fn(u32) -> bool,
    cfg: &Config,
) -> SlotMatch {
    let c = (target - shift) / 2.0;
    if !(-1.0..1.0).contains(&c) {
        return SlotMatch::Miss;
    }
    let approx = a * PI / c.acos();
    let value = |k: u32| 2.0 * (a * PI / f64::from(k)).cos() + shift;
    integer_from(approx, value, target, accept, cfg.tol, cfg.int_bound)
}

fn scan_row(row: u8, p: Parameters, cfg: &Config) -> RowScan {
    let tol = cfg.tol;
    let bound = cfg.int_bound;
    match row {
        1 | 2 => {
            let wcond = if row == 1 {
                SlotCond::even(2)
            } else {
                SlotCond::odd(3)
            };
            let slots = vec![
                ("u", upoint_from_beta(p.beta, SlotCond::any(3), tol, bound)),
                (
                    "v",
                    upoint_from_beta(p.beta_prime, SlotCond::any(3), tol, bound),
                ),
                ("w", upoint_from_neg4_cosh_sq(p.gamma, wcond, tol, bound)),
            ];
            match join_slots(slots) {
                Err(reason) => RowScan::unresolved(reason),
                Ok(None) => RowScan::none(),
                Ok(Some(data)) => RowScan::one(data),
            }
        }
        3 => {
            let n = invert_beta_cell(p.beta, |n| n >= 5 && n % 2 == 1, cfg);
            let n = match n {
                SlotMatch::Miss => return RowScan::none(),
                SlotMatch::Unresolved => {
                    return RowScan::unresolved("order of f beyond the integer bound")
                }
                SlotMatch::Hit(UPoint::Angle(n)) => n,
                _ => unreachable!(),
            };
            let c2 = (p.beta_prime + 4.0) / (4.0 * (p.beta + 4.0));
            match upoint_from_cosh_sq(c2, SlotCond::any(3), tol, bound) {
                SlotMatch::Miss => RowScan::none(),
                SlotMatch::Unresolved => {
                    RowScan::unresolved("half-length slot inversion beyond the integer bound")
                }
                SlotMatch::Hit(u) => {
                    RowScan::one(FamilyData::empty().with_int("n", n).with_upoint("u", u))
                }
            }
        }
        4 => int_only_row(
            invert_two_cos(p.gamma, 2.0, 0.0, |m| m >= 5 && m % 2 == 1, cfg),
            "m",
        ),
        5 | 8 | 13 | 14 => RowScan::one(FamilyData::empty()),
        6 => int_only_row(
            invert_two_cos(p.gamma, 2.0, 0.0, |q| q >= 7 && q % 2 == 1, cfg),
            "q",
        ),
        7 => {
            let c2 = (p.beta_prime + 4.0) / (2.0 * (7.0 + 3.0 * sqrt5()));
            match upoint_from_cosh_sq(c2, SlotCond::any(3), tol, bound) {
                SlotMatch::Miss => RowScan::none(),
                SlotMatch::Unresolved => {
                    RowScan::unresolved("half-length slot inversion beyond the integer bound")
                }
                SlotMatch::Hit(u) => RowScan::one(FamilyData::empty().with_upoint("u", u)),
            }
        }
        9 => int_only_row(
            invert_two_cos(p.gamma, 1.0, -1.0, |m| m >= 4 && m % 3 != 0, cfg),
            "m",
        ),
        10 | 16 => int_only_row(
            invert_beta_cell(p.beta, |n| n >= 5 && n % 2 == 1 && n % 3 != 0, cfg),
            "n",
        ),
        11 | 12 => RowScan {
            hits: vec![
                FamilyData::empty().with_int("plus", 0),
                FamilyData::empty().with_int("plus", 1),
            ],
            unresolved: None,
        },
        15 => int_only_row(
            invert_two_cos(
                p.gamma,
                2.0,
                0.0,
                |q| q >= 8 && q % 2 == 0 && q % 4 != 0,
                cfg,
            ),
            "q",
        ),
        17..=20 => {
            let n = match invert_beta_cell(p.beta, |n| n >= 4 && n % 2 == 0, cfg) {
                SlotMatch::Miss => return RowScan::none(),
                SlotMatch::Unresolved => {
                    return RowScan::unresolved("order of f beyond the integer bound")
                }
                SlotMatch::Hit(UPoint::Angle(n)) => n,
                _ => unreachable!(),
            };
            let ucond = if row <= 18 {
                SlotCond::even(2)
            } else {
                SlotCond::odd(3)
            };
            let u = upoint_from_cosh_sq((p.gamma - p.beta) / 4.0, ucond, tol, bound);
            let vcond = if row == 17 || row == 19 {
                SlotCond::odd(3)
            } else {
                SlotCond::even(4)
            };
            let v_c2 = if row <= 18 {
                (p.beta_prime + 4.0 * p.gamma / p.beta) * p.gamma / 4.0
            } else {
                (p.beta_prime + 4.0 * p.gamma / p.beta) * p.gamma / (4.0 * (p.gamma - p.beta))
            };
            let v = upoint_from_cosh_sq(v_c2, vcond, tol, bound);
            match join_slots(vec![("u", u), ("v", v)]) {
                Err(reason) => RowScan::unresolved(reason),
                Ok(None) => RowScan::none(),
                Ok(Some(data)) => RowScan::one(data.with_int("n", n)),
            }
        }
        21 | 23 => {
            let n = match invert_beta_cell(p.beta, |n| n >= 3 && n % 2 == 1, cfg) {
                SlotMatch::Miss => return RowScan::none(),
                SlotMatch::Unresolved => {
                    return RowScan::unresolved("order of f beyond the integer bound")
                }
                SlotMatch::Hit(UPoint::Angle(n)) => n,
                _ => unreachable!(),
            };
            let ucond = if row == 21 {
                SlotCond::even(2)
            } else {
                SlotCond::odd(3)
            };
            let u = upoint_from_cosh_sq((p.gamma - p.beta) / 4.0, ucond, tol, bound);
            let c = (PI / f64::from(n)).cos();
            let shared = (2.0 / (p.gamma * p.beta))
                * ((p.gamma - p.beta) * (p.gamma - p.beta) * c + p.gamma * (p.gamma + p.beta));
            let v_cosh = if row == 21 {
                (p.beta_prime + shared) * p.gamma / 2.0 + c
            } else {
                (p.beta_prime + shared) * p.gamma / (2.0 * (p.gamma - p.beta))
            };
            let v = upoint_from_cosh(v_cosh, SlotCond::any(2), tol, bound);
            match join_slots(vec![("u", u), ("v", v)]) {
                Err(reason) => RowScan::unresolved(reason),
                Ok(None) => RowScan::none(),
                Ok(Some(data)) => RowScan::one(data.with_int("n", n)),
            }
        }
        22 => int_only_row(
            invert_two_cos(p.gamma + 1.0, 2.0, 0.0, |n| n >= 7 && n % 2 == 1, cfg),
            "n",
        ),
        24 => {
            let n = match invert_beta_cell(p.beta, |n| n >= 7 && n % 2 == 1, cfg) {
                SlotMatch::Miss => return RowScan::none(),
                SlotMatch::Unresolved => {
                    return RowScan::unresolved("order of f beyond the integer bound")
                }
                SlotMatch::Hit(UPoint::Angle(n)) => n,
                _ => unreachable!(),
            };
            let beta = beta_elliptic(n);
            let c = (PI / f64::from(n)).cos();
            let v_cosh = (p.beta_prime + (2.0 / beta) * (beta * beta + 6.0 * beta + 4.0))
                * (beta + 1.0)
                / (2.0 * (beta + 2.0) * (beta + 2.0))
                + c;
            match upoint_from_cosh(v_cosh, SlotCond::any(2), tol, bound) {
                SlotMatch::Miss => RowScan::none(),
                SlotMatch::Unresolved => {
                    RowScan::unresolved("half-length slot inversion beyond the integer bound")
                }
                SlotMatch::Hit(v) => {
                    RowScan::one(FamilyData::empty().with_int("n", n).with_upoint("v", v))
                }
            }
        }
        _ => RowScan::none(),
    }
}

fn int_only_row(m: SlotMatch, name: &'static str) -> RowScan {
    match m {
        SlotMatch::Miss => RowScan::none(),
        SlotMatch::Unresolved => RowScan::unresolved("integer slot beyond the search bound"),
        SlotMatch::Hit(UPoint::Angle(k)) => RowScan::one(FamilyData::empty().with_int(name, k)),
        _ => unreachable!(),
    }
}

fn triple_close(a: Parameters, b: Parameters, cfg: &Config) -> bool {
    cfg.close(a.beta, b.beta)
        && cfg.close(a.beta_prime, b.beta_prime)
        && cfg.close(a.gamma, b.gamma)
}

/// Reduce a non-primitive elliptic β slot of the triple, rescaling γ.
fn reduce_params(p: Parameters, cfg: &Config) -> Parameters {
    let mut out = p;
    if let Ok(ElementType::Admissible(ElementClass::Elliptic { order, turns })) =
        classify_element(out.beta, cfg)
    {
        if turns > 1 {
            let nb = beta_elliptic(order);
            out.gamma *= nb / out.beta;
            out.beta = nb;
        }
    }
    if let Ok(ElementType::Admissible(ElementClass::Elliptic { order, turns })) =
        classify_element(out.beta_prime, cfg)
    {
        if turns > 1 {
            let nb = beta_elliptic(order);
            out.gamma *= nb / out.beta_prime;
            out.beta_prime = nb;
        }
    }
    out
}

/// Decide where a parameter triple lands.
///
/// Gated triples are first rewritten in terms of a primitive pair of
/// generators, then matched against every row in both generator orders
/// (⟨f,g⟩ = ⟨g,f⟩, so the table applies to either ordering of β, β′).
/// Matches come back in ascending row order; an empty match set means not
/// discrete, unless some row inversion ran out of search bound or landed in
/// a tolerance band, which reports `Unresolved`.
pub fn classify(p: Parameters, cfg: &Config) -> ClassificationResult {
    if !is_class_d(p, cfg) {
        return ClassificationResult::NotClassD;
    }
    let reduced = reduce_params(p, cfg);

    let mut matches: Vec<FamilyInstance> = Vec::new();
    let mut unresolved: Vec<String> = Vec::new();
    for row in 1..=ROW_COUNT {
        for swapped in [false, true] {
            let target = if swapped { reduced.swapped() } else { reduced };
            let scan = scan_row(row, target, cfg);
            if let Some(reason) = scan.unresolved {
                unresolved.push(format!("row {row}: {reason}"));
            }
            for data in scan.hits {
                match compute_row(row, &data, cfg) {
                    Ok(out) if triple_close(out.params, target, cfg) => {
                        let instance = FamilyInstance {
                            id: FamilyId::new(row),
                            data,
                            params: out.params,
                            exponents: out.exponents,
                            swapped,
                        };
                        if !matches
                            .iter()
                            .any(|m| m.id.row == row && m.data == instance.data)
                        {
                            matches.push(instance);
                        }
                    }
                    Ok(_) => {}
                    Err(TableError::NearEquality { condition, .. }) => {
                        unresolved.push(format!("row {row}: {condition} near equality"));
                    }
                    Err(_) => {}
                }
            }
        }
    }
    matches.sort_by_key(|m| m.id.row);
    if !matches.is_empty() {
        ClassificationResult::DiscreteInD { matches }
    } else if !unresolved.is_empty() {
        unresolved.dedup();
        ClassificationResult::Unresolved {
            reason: unresolved.join("; "),
        }
    } else {
        ClassificationResult::NotDiscrete
    }
}

/// Discreteness for two primitive elliptic generators of orders n, m ≥ 3
/// with mutually orthogonal axes: the group is discrete iff
///
/// 1. γ ∈ (−∞, −4], or
/// 2. γ = −4 cos²(π/p) for an integer p with
///    `cos(π/p) > sin(π/n) sin(π/m)`, or
/// 3. m = n ≥ 7 odd and γ = −(β+2)².
///
/// The verdict evaluates the three clauses directly; matching clauses are
/// reported as family-table instances (clauses 1–2 through rows 1–2, clause
/// 3 through row 3 with t(u) = 3).
pub fn two_elliptic_discreteness(n: u32, m: u32, gamma: f64, cfg: &Config) -> ClassificationResult {
    if n < 3 || m < 3 || !gamma.is_finite() {
        return ClassificationResult::NotClassD;
    }
    let beta = beta_elliptic(n);
    let mut matches = Vec::new();
    let mut unresolved = Vec::new();

    // clauses 1 and 2: γ = −4 cosh² w over the half-length set
    match upoint_from_neg4_cosh_sq(gamma, SlotCond::any(2), cfg.tol, cfg.int_bound) {
        SlotMatch::Hit(w) => {
            let u = UPoint::Angle(n);
            let v = UPoint::Angle(m);
            let row = if w.t().is_odd() { 2 } else { 1 };
            let data = FamilyData::empty()
                .with_upoint("u", u)
                .with_upoint("v", v)
                .with_upoint("w", w);
            match generate_family(row, data, cfg) {
                Ok(inst) => matches.push(inst),
                Err(TableError::NearEquality { condition, .. }) => {
                    unresolved.push(format!("{condition} near equality"));
                }
                Err(_) => {}
            }
        }
        SlotMatch::Unresolved => {
            unresolved.push("rotation order of the commutator root beyond the search bound".into())
        }
        SlotMatch::Miss => {}
    }

    // clause 3: equal odd orders at least 7, γ = −(β+2)²
    if n == m && n >= 7 && n % 2 == 1 {
        let target = -(beta + 2.0) * (beta + 2.0);
        if cfg.close(gamma, target) {
            let data = FamilyData::empty()
                .with_int("n", n)
                .with_upoint("u", UPoint::Angle(3));
            if let Ok(inst) = generate_family(3, data, cfg) {
                matches.push(inst);
            }
        }
    }

    matches.sort_by_key(|i| i.id.row);
    if !matches.is_empty() {
        ClassificationResult::DiscreteInD { matches }
    } else if !unresolved.is_empty() {
        ClassificationResult::Unresolved {
            reason: unresolved.join("; "),
        }
    } else {
        ClassificationResult::NotDiscrete
    }
}

/// The per-schema exponent conditions that characterise which families
/// occur, honoring the extended-exponent conventions (`(q,2)=1` forces q
/// finite odd; `∞`, `∞̄` compare above every integer; `1/∞ = 0`).
///
/// The two symmetric slots of `GT[n,m;q]` and `Tet[n,m;q]` are treated as
/// unordered: swapping them renames the generators.
pub fn admissible_exponents(schema: Schema, exps: &[ExtExp]) -> Result<bool, TableError> {
    if exps.len() != schema.arity() {
        return Err(TableError::Arity {
            schema,
            expected: schema.arity(),
            got: exps.len(),
        });
    }
    let ok = match schema {
        Schema::GT => {
            let (lo, hi) = minmax(exps[0], exps[1]);
            let q = exps[2];
            let half_cos = match q {
                ExtExp::Fin(k) => (PI / (2.0 * f64::from(k))).cos(),
                _ => 1.0,
            };
            lo >= 3 && hi >= 3 && half_cos > lo.sin_pi_over() * hi.sin_pi_over()
        }
        Schema::PH => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            match n {
                ExtExp::Fin(n) if n >= 4 && n % 2 == 0 => {
                    sum_lt_one(2, n, m) && q.is_odd() && q >= 3
                }
                _ => false,
            }
        }
        Schema::H => {
            let (p, n, m, q) = (exps[0], exps[1], exps[2], exps[3]);
            p == ExtExp::Fin(2)
                && ((n == 2 && m == 3 && q == 5)
                    || (n == 2 && m == 5 && q == 3)
                    || (n == 3 && m == 3 && q.is_odd() && q >= 5)
                    || (n == 3
                        && q == 2
                        && matches!(m, ExtExp::Fin(k) if k >= 5 && k % 2 == 1 && k % 3 != 0)))
        }
        Schema::P => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            match n {
                ExtExp::Fin(n) if n >= 4 && n % 2 == 0 => {
                    quarter_cond(n, m) && m.is_odd() && m >= 3 && q.is_odd() && q >= 3
                }
                _ => false,
            }
        }
        Schema::Tet => {
            let (lo, hi) = minmax(exps[0], exps[1]);
            let q = exps[2];
            lo >= 3 && q.is_odd() && q >= 3 && q.cos_pi_over() > lo.sin_pi_over() * hi.sin_pi_over()
        }
        Schema::Tet6 => {
            matches!(exps[0], ExtExp::Fin(m) if m >= 4 && m % 3 != 0)
        }
        Schema::GTet1 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            let even_branch = matches!(n, ExtExp::Fin(k) if k >= 4 && k % 2 == 0)
                && m.is_odd()
                && quarter_cond(n.finite().unwrap_or(u32::MAX), m)
                && q >= 2;
            let odd_branch =
                matches!(n, ExtExp::Fin(k) if k >= 7 && k % 2 == 1) && m == 3 && q == 2;
            even_branch || odd_branch
        }
        Schema::GTet2 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            match (n, m) {
                (ExtExp::Fin(n), ExtExp::Fin(m)) => {
                    n % 2 == 1
                        && m % 2 == 1
                        && n >= 3
                        && m >= 3
                        && quarter_cond(n, ExtExp::Fin(m))
                        && q >= 2
                }
                _ => false,
            }
        }
        Schema::S2 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            matches!(n, ExtExp::Fin(k) if k >= 4 && k % 2 == 0)
                && sum_lt_one(2, n.finite().unwrap(), m)
                && q >= 2
        }
        Schema::S3 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            matches!(n, ExtExp::Fin(k) if k >= 3 && k % 2 == 1)
                && sum_lt_one(2, n.finite().unwrap(), m)
                && q >= 2
        }
        Schema::R => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            matches!(n, ExtExp::Fin(k) if k >= 5 && k % 2 == 1 && k % 3 != 0) && m == 2 && q == 2
        }
    };
    Ok(ok)
}

fn minmax(a: ExtExp, b: ExtExp) -> (ExtExp, ExtExp) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Every admissible instance of a row with integer slots and angle
/// denominators up to `max_int`, the parabolic half-length, and the given
/// hyperbolic half-lengths. Assignments failing the row's side conditions
/// are skipped.
pub fn enumerate_instances(
    row: u8,
    max_int: u32,
    lengths: &[f64],
    cfg: &Config,
) -> Result<Vec<FamilyInstance>, TableError> {
    let (int_slots, u_slots) = row_slots(row)?;
    let int_pool = |name: &str| -> Vec<u32> {
        if name == "plus" {
            vec![0, 1]
        } else {
            (2..=max_int).collect()
        }
    };
    let mut u_pool: Vec<UPoint> = (2..=max_int).map(UPoint::Angle).collect();
    u_pool.push(UPoint::Zero);
    u_pool.extend(lengths.iter().map(|&l| UPoint::Len(l)));

    let mut assignments = vec![FamilyData::empty()];
    for name in int_slots {
        let mut next = Vec::new();
        for base in &assignments {
            for value in int_pool(name) {
                next.push(base.clone().with_int(name, value));
            }
        }
        assignments = next;
    }
    for name in u_slots {
        let mut next = Vec::new();
        for base in &assignments {
            for &value in &u_pool {
                next.push(base.clone().with_upoint(name, value));
            }
        }
        assignments = next;
    }

    let mut out = Vec::new();
    for data in assignments {
        match generate_family(row, data, cfg) {
            Ok(inst) => out.push(inst),
            Err(
                TableError::ConditionViolated { .. }
                | TableError::NearEquality { .. }
                | TableError::GateFailed { .. },
            ) => {}
            Err(other) => return Err(other),
        }
    }
    Ok(out)
}
