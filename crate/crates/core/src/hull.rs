//! Exact 2-D hull geometry for three-candidate profiles.
//!
//! With `p = 3` every score vector is a lattice point `(r_1, r_2)`. This
//! module computes the convex hull of the score vectors with exact integer
//! orientation tests, extracts the Pareto-boundary chain (the northeast
//! edges of the hull, where a linear functional with positive weights can
//! attain its maximum) and its weak variant, and reports which candidates
//! sit on each. Rendering to documents is the front end's job.

use alloc::vec::Vec;
use core::fmt;

use crate::profile::{CandidateId, Profile};
use crate::rational::BigInt;
use crate::scorevec::score_set;

/// An exact lattice point `(r_1, r_2)`.
pub type Point = [u64; 2];

/// Hull, boundary chains and per-candidate boundary membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullGeometry {
    /// Score vector of each candidate, by id.
    pub points: Vec<Point>,
    /// Distinct hull vertices in counterclockwise order.
    pub hull: Vec<Point>,
    /// Pareto boundary of the hull: the chain from the rightmost-topmost
    /// vertex to the topmost-rightmost one.
    pub strict_chain: Vec<Point>,
    /// Weak Pareto boundary: the strict chain extended along the maximal
    /// vertical and horizontal faces.
    pub weak_chain: Vec<Point>,
    /// Candidates whose score vector lies on the strict chain.
    pub strict_boundary: Vec<CandidateId>,
    /// Candidates whose score vector lies on the weak chain.
    pub weak_boundary: Vec<CandidateId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullError {
    UnsupportedCandidateCount { p: usize },
}

impl fmt::Display for HullError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HullError::UnsupportedCandidateCount { p } => {
                write!(f, "plot supports p=3 only, profile has {p} candidates")
            }
        }
    }
}

impl core::error::Error for HullError {}

/// Exact orientation: positive for a counterclockwise turn `o -> a -> b`.
fn cross(o: Point, a: Point, b: Point) -> BigInt {
    let dx1 = BigInt::from(a[0]) - BigInt::from(o[0]);
    let dy1 = BigInt::from(a[1]) - BigInt::from(o[1]);
    let dx2 = BigInt::from(b[0]) - BigInt::from(o[0]);
    let dy2 = BigInt::from(b[1]) - BigInt::from(o[1]);
    dx1 * dy2 - dy1 * dx2
}

/// Monotone chain over distinct points; counterclockwise, no collinear
/// interior vertices.
fn convex_hull(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_unstable();
    points.dedup();
    if points.len() <= 1 {
        return points;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &points {
        while lower.len() >= 2
            && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= BigInt::ZERO
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in points.iter().rev() {
        while upper.len() >= 2
            && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= BigInt::ZERO
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn index_of_max_by(hull: &[Point], key: impl Fn(Point) -> (u64, u64)) -> usize {
    let mut best = 0;
    for i in 1..hull.len() {
        if key(hull[i]) > key(hull[best]) {
            best = i;
        }
    }
    best
}

/// Hull vertices from `from` to `to` inclusive, walking forward
/// (counterclockwise) with wraparound.
fn walk(hull: &[Point], from: usize, to: usize) -> Vec<Point> {
    let mut chain = alloc::vec![hull[from]];
    let mut i = from;
    while i != to {
        i = (i + 1) % hull.len();
        chain.push(hull[i]);
    }
    chain
}

fn on_segment(q: Point, a: Point, b: Point) -> bool {
    cross(a, b, q) == BigInt::ZERO
        && a[0].min(b[0]) <= q[0]
        && q[0] <= a[0].max(b[0])
        && a[1].min(b[1]) <= q[1]
        && q[1] <= a[1].max(b[1])
}

fn on_chain(q: Point, chain: &[Point]) -> bool {
    if chain.len() == 1 {
        return q == chain[0];
    }
    chain.windows(2).any(|seg| on_segment(q, seg[0], seg[1]))
}

/// Compute the hull picture of a three-candidate profile.
pub fn hull_geometry(profile: &Profile) -> Result<HullGeometry, HullError> {
    let p = profile.num_candidates();
    if p != 3 {
        return Err(HullError::UnsupportedCandidateCount { p });
    }
    let scores = score_set(profile);
    let points: Vec<Point> = (0..p)
        .map(|a| {
            let r = scores.vector(a).components();
            [r[0], r[1]]
        })
        .collect();

    let hull = convex_hull(points.clone());

    // Northeast chain endpoints. Walking counterclockwise from the
    // rightmost vertex to the topmost one traverses exactly the edges on
    // which positive weights can be maximal; widening the endpoints to
    // the far ends of the maximal faces adds the points only nonnegative
    // weights can pick up.
    let start_strict = index_of_max_by(&hull, |q| (q[0], q[1]));
    let end_strict = index_of_max_by(&hull, |q| (q[1], q[0]));
    let strict_chain = walk(&hull, start_strict, end_strict);

    let start_weak = index_of_max_by(&hull, |q| (q[0], u64::MAX - q[1]));
    let end_weak = index_of_max_by(&hull, |q| (q[1], u64::MAX - q[0]));
    let weak_chain = walk(&hull, start_weak, end_weak);

    let strict_boundary = (0..p)
        .filter(|&a| on_chain(points[a], &strict_chain))
        .collect();
    let weak_boundary = (0..p)
        .filter(|&a| on_chain(points[a], &weak_chain))
        .collect();

    Ok(HullGeometry {
        points,
        hull,
        strict_chain,
        weak_chain,
        strict_boundary,
        weak_boundary,
    })
}
