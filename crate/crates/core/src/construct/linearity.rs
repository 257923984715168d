//! Exact affine fits for hyperedge counts along `n`, and the natural period
//! of each construction in `n`.

use serde::Serialize;

use super::Method;
use crate::error::{BergeError, Result};
use crate::model::{classify, GraphPattern};

/// `count = slope · n + intercept` through the first two points, with the
/// integer residual of every point scaled by the first gap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineFit {
    pub slope: (i128, i128),
    pub intercept: (i128, i128),
    pub residuals: Vec<i128>,
}

impl AffineFit {
    pub fn is_exact(&self) -> bool {
        self.residuals.iter().all(|&r| r == 0)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn reduce(num: i128, den: i128) -> (i128, i128) {
    let g = gcd(num, den).max(1) * den.signum();
    (num / g, den / g)
}

pub fn exact_affine_fit(points: &[(u64, u64)]) -> Result<AffineFit> {
    if points.len() < 2 || points[0].0 == points[1].0 {
        return Err(BergeError::Precondition("affine fit needs two distinct abscissae".into()));
    }
    let p = |i: usize| (points[i].0 as i128, points[i].1 as i128);
    let ((x0, y0), (x1, y1)) = (p(0), p(1));
    let (dx, dy) = (x1 - x0, y1 - y0);
    let residuals = (0..points.len())
        .map(|i| {
            let (x, y) = p(i);
            (y - y0) * dx - dy * (x - x0)
        })
        .collect();
    Ok(AffineFit {
        slope: reduce(dy, dx),
        intercept: reduce(y0 * dx - dy * x0, dx),
        residuals,
    })
}

/// Period in `n` after which a construction repeats its block structure;
/// scans group `n` by its residue modulo this value.
pub fn scan_period(method: Method, pattern: &GraphPattern, r: usize) -> Result<usize> {
    let report = classify(pattern)?;
    let v = pattern.vertex_count();
    Ok(match method {
        Method::MultipartiteCase1 => report.multipartite_classes.as_ref().and_then(|k| k.last().copied()).unwrap_or(1),
        Method::MultipartiteCase2 => r.saturating_sub(2).max(1),
        Method::Fgood if r + 4 <= v => r - 2,
        Method::Fgood => (r + 4).saturating_sub(v).max(1),
        Method::CutEdge => r + 1,
        Method::GreedyColex => v.saturating_sub(report.degree_profile.min_degree).max(1),
        Method::IsolatedEdge | Method::Oversaturated | Method::Fallback => 1,
    })
}
