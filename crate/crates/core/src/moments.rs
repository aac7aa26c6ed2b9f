//! Second-order moments of a joint (in, out) degree sequence.

use serde::Serialize;

use crate::direction::Direction;
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// `n`, `m` and the moments `M_xy = (1/n) Σ_u d_x(u) d_y(u)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeMoments {
    pub n: usize,
    pub m: u64,
    pub m_ii: f64,
    pub m_io: f64,
    pub m_oo: f64,
}

impl DegreeMoments {
    /// Moments of a joint degree sequence given as `(in, out)` pairs.
    ///
    /// The sums of products are accumulated as integers before the single
    /// division by `n`. Fails when the sequence is empty or its in- and
    /// out-degree totals differ.
    pub fn from_degrees(degrees: &[(usize, usize)]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let (mut sum_in, mut sum_out) = (0u128, 0u128);
        let (mut ii, mut io, mut oo) = (0u128, 0u128, 0u128);
        for &(di, d_o) in degrees {
            let (di, d_o) = (di as u128, d_o as u128);
            sum_in += di;
            sum_out += d_o;
            ii += di * di;
            io += di * d_o;
            oo += d_o * d_o;
        }
        if sum_in != sum_out {
            return Err(Error::InvalidArgument(format!(
                "in-degree total {sum_in} differs from out-degree total {sum_out}"
            )));
        }
        let n = degrees.len();
        let nf = n as f64;
        Ok(DegreeMoments {
            n,
            m: sum_in as u64,
            m_ii: ii as f64 / nf,
            m_io: io as f64 / nf,
            m_oo: oo as f64 / nf,
        })
    }

    /// Moments taken as given, e.g. summary values from elsewhere.
    pub fn from_values(n: usize, m: u64, m_ii: f64, m_io: f64, m_oo: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(DegreeMoments { n, m, m_ii, m_io, m_oo })
    }

    /// `M_ab`; symmetric in its arguments.
    #[inline]
    pub fn get(&self, a: Direction, b: Direction) -> f64 {
        match (a, b) {
            (Direction::In, Direction::In) => self.m_ii,
            (Direction::Out, Direction::Out) => self.m_oo,
            _ => self.m_io,
        }
    }

    /// Mean degree `m / n`.
    #[inline]
    pub fn mean_degree(&self) -> f64 {
        self.m as f64 / self.n as f64
    }
}

/// Degree moments of `g`; an empty graph has none.
pub fn moments(g: &DirectedGraph) -> Result<DegreeMoments> {
    DegreeMoments::from_degrees(&g.joint_degrees())
}
