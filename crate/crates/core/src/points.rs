//! Finite point sets with exact rational coordinates, their squared-distance
//! sets, and generators for the structured families used in verification.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::rational::{rational_sqrt, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointSetError {
    #[error("point set is empty")]
    Empty,
    #[error("points have mixed arities")]
    MixedArity,
    #[error("duplicate point at indices {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("radius^2 = {0} is not the square of a rational")]
    IrrationalRadius(String),
    #[error("could not sample {wanted} distinct points (got {got})")]
    SamplingExhausted { wanted: usize, got: usize },
}

/// A nonempty set of pairwise-distinct points in `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    arity: usize,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self, PointSetError> {
        let arity = match points.first() {
            None => return Err(PointSetError::Empty),
            Some(p) => p.len(),
        };
        if arity == 0 || points.iter().any(|p| p.len() != arity) {
            return Err(PointSetError::MixedArity);
        }
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(PointSetError::DuplicatePoint(j, i));
                }
            }
        }
        Ok(PointSet { arity, points })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_integers(points: &[&[i64]]) -> Result<Self, PointSetError> {
        Self::new(
            points
                .iter()
                .map(|p| p.iter().map(|&c| crate::rational::rat_int(c)).collect())
                .collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &[Rational] {
        &self.points[index]
    }

    /// Subset by indices; indices must be distinct and nonempty.
    pub fn subset(&self, indices: &[usize]) -> Result<PointSet, PointSetError> {
        PointSet::new(indices.iter().map(|&i| self.points[i].clone()).collect())
    }
}

/// The set of squared Euclidean distances over unordered pairs; squared so
/// every value stays rational. All values are positive and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquaredDistanceSet {
    values: BTreeSet<Rational>,
}

impl SquaredDistanceSet {
    pub fn count(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> impl Iterator<Item = &Rational> {
        self.values.iter()
    }

    pub fn contains(&self, value: &Rational) -> bool {
        self.values.contains(value)
    }
}

pub fn squared_distance(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            &d * &d
        })
        .sum()
}

/// Exact set of squared distances of all unordered pairs. Needs two points.
pub fn squared_distance_set(points: &PointSet) -> Result<SquaredDistanceSet, PointSetError> {
    if points.len() < 2 {
        return Err(PointSetError::TooFewPoints(points.len()));
    }
    let mut values = BTreeSet::new();
    for i in 0..points.len() {
        for j in 0..i {
            values.insert(squared_distance(points.point(i), points.point(j)));
        }
    }
    Ok(SquaredDistanceSet { values })
}

/// Number of distinct distances, with the convention that a single point
/// determines zero distances.
pub fn distance_count(points: &PointSet) -> usize {
    if points.len() < 2 {
        0
    } else {
        squared_distance_set(points).expect("two points").count()
    }
}

/// The structured point families from the bound corollaries, plus exact
/// sphere sampling for randomized checks.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    /// Direct product of finite coordinate sets `T_1 x ... x T_n`.
    Box { sets: Vec<Vec<Rational>> },
    /// All permutations of `n` distinct reals, each viewed as a vector.
    Permutations { values: Vec<Rational> },
    /// The 0/1 vectors of length `n` with exactly `d` ones.
    UniformLayer { n: usize, d: usize },
    /// The 0/1 vectors of length `n` with even Hamming weight.
    EvenWeight { n: usize },
    /// `count` rational points exactly on the sphere, via stereographic
    /// parameters drawn from a seeded generator.
    SphereSample {
        center: Vec<Rational>,
        radius_sq: Rational,
        count: usize,
        seed: u64,
    },
}

pub fn generate_family(spec: &FamilySpec) -> Result<PointSet, PointSetError> {
    match spec {
        FamilySpec::Box { sets } => {
            if sets.is_empty() {
                return Err(PointSetError::InvalidFamily("box needs n >= 1".into()));
            }
            for (i, t) in sets.iter().enumerate() {
                if t.len() < 2 {
                    return Err(PointSetError::InvalidFamily(format!(
                        "coordinate set T{} needs at least 2 values",
                        i + 1
                    )));
                }
                let distinct: BTreeSet<_> = t.iter().collect();
                if distinct.len() != t.len() {
                    return Err(PointSetError::InvalidFamily(format!(
                        "coordinate set T{} has repeated values",
                        i + 1
                    )));
                }
            }
            let mut points = vec![Vec::new()];
            for t in sets {
                let mut next = Vec::with_capacity(points.len() * t.len());
                for prefix in &points {
                    for value in t {
                        let mut p = prefix.clone();
                        p.push(value.clone());
                        next.push(p);
                    }
                }
                points = next;
            }
            PointSet::new(points)
        }
        FamilySpec::Permutations { values } => {
            if values.is_empty() {
                return Err(PointSetError::InvalidFamily(
                    "permutations need n >= 1".into(),
                ));
            }
            let distinct: BTreeSet<_> = values.iter().collect();
            if distinct.len() != values.len() {
                return Err(PointSetError::InvalidFamily(
                    "permutation values must be distinct".into(),
                ));
            }
            let mut points = Vec::new();
            let mut work = values.clone();
            permute_into(&mut work, 0, &mut points);
            PointSet::new(points)
        }
        FamilySpec::UniformLayer { n, d } => {
            if *n == 0 || d > n {
                return Err(PointSetError::InvalidFamily(format!(
                    "uniform layer needs 0 <= d <= n, got n={n}, d={d}"
                )));
            }
            let mut points = Vec::new();
            for mask in 0u64..(1 << *n) {
                if (mask.count_ones() as usize) == *d {
                    points.push(bits_to_point(mask, *n));
                }
            }
            PointSet::new(points)
        }
        FamilySpec::EvenWeight { n } => {
            if *n == 0 {
                return Err(PointSetError::InvalidFamily("even weight needs n >= 1".into()));
            }
            let mut points = Vec::new();
            for mask in 0u64..(1 << *n) {
                if mask.count_ones() % 2 == 0 {
                    points.push(bits_to_point(mask, *n));
                }
            }
            PointSet::new(points)
        }
        FamilySpec::SphereSample {
            center,
            radius_sq,
            count,
            seed,
        } => sphere_sample(center, radius_sq, *count, *seed),
    }
}

fn bits_to_point(mask: u64, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| {
            if (mask >> i) & 1 == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

fn permute_into(values: &mut [Rational], k: usize, out: &mut Vec<Vec<Rational>>) {
    if k == values.len() {
        out.push(values.to_vec());
        return;
    }
    for i in k..values.len() {
        values.swap(k, i);
        permute_into(values, k + 1, out);
        values.swap(k, i);
    }
}

/// Rational points exactly on the sphere `|x - center|^2 = radius_sq`.
///
/// Inverse stereographic projection sends a rational parameter vector
/// `u in Q^{n-1}` to a rational point of the unit sphere, which is then
/// scaled and translated. The radius itself must therefore be rational,
/// i.e. `radius_sq` must be a rational square.
fn sphere_sample(
    center: &[Rational],
    radius_sq: &Rational,
    count: usize,
    seed: u64,
) -> Result<PointSet, PointSetError> {
    let n = center.len();
    if n < 2 {
        return Err(PointSetError::InvalidFamily(
            "sphere sampling needs ambient dimension >= 2".into(),
        ));
    }
    if count == 0 {
        return Err(PointSetError::InvalidFamily("count must be positive".into()));
    }
    if !radius_sq.is_positive() {
        return Err(PointSetError::InvalidFamily("radius^2 must be positive".into()));
    }
    let radius = rational_sqrt(radius_sq)
        .ok_or_else(|| PointSetError::IrrationalRadius(crate::rational::format_rational(radius_sq)))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut points = Vec::new();
    let max_attempts = 100 * count + 100;
    for _ in 0..max_attempts {
        if points.len() == count {
            break;
        }
        let params: Vec<Rational> = (0..n - 1)
            .map(|_| {
                let numer = rng.gen_range(-99i64..100);
                let denom = rng.gen_range(1i64..100);
                crate::rational::rat(numer, denom)
            })
            .collect();
        let norm_sq: Rational = params.iter().map(|t| t * t).sum();
        let denom = &norm_sq + &Rational::one();
        // unit sphere: x_i = 2 u_i / (1 + |u|^2), x_n = (1 - |u|^2) / (1 + |u|^2)
        let mut point: Vec<Rational> = params
            .iter()
            .map(|t| (t + t) / &denom * &radius)
            .collect();
        point.push((&Rational::one() - &norm_sq) / &denom * &radius);
        for (c, x) in center.iter().zip(point.iter_mut()) {
            *x += c;
        }
        debug_assert_eq!(&squared_distance(&point, center), radius_sq);
        if seen.insert(point.clone()) {
            points.push(point);
        }
    }
    if points.len() < count {
        return Err(PointSetError::SamplingExhausted {
            wanted: count,
            got: points.len(),
        });
    }
    PointSet::new(points)
}
