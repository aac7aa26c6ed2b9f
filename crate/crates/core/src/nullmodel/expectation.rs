use serde::Serialize;

use crate::direction::{CoefficientKey, Direction, WedgeType};
use crate::error::{Error, Result};
use crate::moments::DegreeMoments;

/// A leading-order expectation.
///
/// `raw` is the formula value as written; `value` is the same number clamped
/// at 0 whenever one of the formula's factors is negative, which happens
/// only outside the regime where the approximation means anything.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Expectation {
    pub value: f64,
    pub raw: f64,
    pub clamped: bool,
}

impl Expectation {
    fn from_factors(factors: &[f64]) -> Self {
        let raw = factors.iter().product();
        if factors.iter().any(|&f| f < 0.0) {
            Expectation { value: 0.0, raw, clamped: true }
        } else {
            Expectation { value: raw, raw, clamped: false }
        }
    }
}

#[inline]
fn ind(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn require_edges(mom: &DegreeMoments) -> Result<(f64, f64)> {
    if mom.m == 0 {
        return Err(Error::NoEdges);
    }
    Ok((mom.n as f64, mom.m as f64))
}

/// `M_ȳz̄ - [y = z] m/n`: the tail-side factor shared by every formula.
fn tail_factor(mom: &DegreeMoments, key: CoefficientKey, n: f64, m: f64) -> f64 {
    mom.get(key.y.complement(), key.z.complement()) - ind(key.y == key.z) * m / n
}

/// Expected `H^z_xy(u)` for a node with degrees `(d_in, d_out)`:
///
/// `n (d_z(u) - [x = z]) / m² · (M_ȳz̄ - [y = z] m/n)`
pub fn expected_local_closure(
    mom: &DegreeMoments,
    d_in: usize,
    d_out: usize,
    key: CoefficientKey,
) -> Result<Expectation> {
    let (n, m) = require_edges(mom)?;
    let d_z = match key.z {
        Direction::In => d_in,
        Direction::Out => d_out,
    } as f64;
    let head = d_z - ind(key.x == key.z);
    Ok(Expectation::from_factors(&[n * head / (m * m), tail_factor(mom, key, n, m)]))
}

/// Expected average coefficient `H̄^z_xy`:
///
/// `(m - n [x = z]) / m² · (M_ȳz̄ - [y = z] m/n)`
pub fn expected_average_closure(mom: &DegreeMoments, key: CoefficientKey) -> Result<Expectation> {
    let (n, m) = require_edges(mom)?;
    let head = (m - n * ind(key.x == key.z)) / (m * m);
    Ok(Expectation::from_factors(&[head, tail_factor(mom, key, n, m)]))
}

/// Expected global coefficient:
///
/// `(M_ȳz̄ - [y = z] m/n)(M_xz - [x = z] m/n) · n² / m³`
pub fn expected_global_closure(mom: &DegreeMoments, key: CoefficientKey) -> Result<Expectation> {
    let (n, m) = require_edges(mom)?;
    let head = mom.get(key.x, key.z) - ind(key.x == key.z) * m / n;
    Ok(Expectation::from_factors(&[
        tail_factor(mom, key, n, m),
        head,
        n * n / (m * m * m),
    ]))
}

/// Expected center-based `C_xy(u)`, which equals the expected global
/// closure coefficient of type `x̄y` closed inward.
pub fn expected_clustering(mom: &DegreeMoments, t: WedgeType) -> Result<Expectation> {
    expected_global_closure(mom, CoefficientKey::new(t.first.complement(), t.second, Direction::In))
}
