//! Concrete-instance verification: the evaluation matrix of a 2n-variate
//! polynomial on a point set, its exact rank and inertia against the
//! Hilbert-function bounds, distance-bound checks for every family, and
//! brute-force extremal search over small candidate sets.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bounds::{BoundReport, BoundSpec, BoundsError};
use crate::hilbert::vanishing_ideal_with_standard_monomials;
use crate::matrix::{inertia, rank, InertiaSignature, MatrixError, RationalMatrix};
use crate::monomial::TermOrder;
use crate::points::{
    distance_count, squared_distance_set, PointSet, PointSetError,
};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

pub use crate::points::{generate_family, FamilySpec, SquaredDistanceSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("polynomial has arity {got}, expected 2n = {expected}")]
    PairArityMismatch { got: usize, expected: usize },
    #[error("deg p = {degree} exceeds the hypothesis bound 2s+1 = {max}")]
    DegreeHypothesis { degree: u32, max: u32 },
    #[error("generator `{generator}` does not vanish on point #{point_index}")]
    NonVanishingGenerator {
        generator: String,
        point_index: usize,
    },
    #[error("family expects points in dimension {expected}, point set has {got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("{candidates} candidates exceed the search guard of {MAX_SEARCH_CANDIDATES}; pass a size cap")]
    SearchGuardExceeded { candidates: usize },
    #[error(transparent)]
    Points(#[from] PointSetError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

pub const MAX_SEARCH_CANDIDATES: usize = 24;

/// The canonical distance polynomial of a point set: with `D` its set of
/// squared distances,
/// `p(x, y) = prod_{t^2 in D} (t^2 - |x - y|^2)`,
/// a 2n-variate polynomial of degree twice the distance count. It vanishes
/// on every distinct pair of points of the set and is positive on the
/// diagonal.
pub fn canonical_distance_polynomial(points: &PointSet) -> Polynomial {
    let n = points.arity();
    let arity = 2 * n;
    // |x - y|^2 as a polynomial in (x_1..x_n, y_1..y_n)
    let mut norm_sq = Polynomial::zero(arity);
    for i in 0..n {
        let diff = &Polynomial::variable(arity, i) - &Polynomial::variable(arity, n + i);
        norm_sq = &norm_sq + &(&diff * &diff);
    }
    let mut product = Polynomial::one(arity);
    if points.len() >= 2 {
        let distances = squared_distance_set(points).expect("two points");
        for t in distances.values() {
            let factor = &Polynomial::constant(arity, t.clone()) - &norm_sq;
            product = &product * &factor;
        }
    }
    product
}

/// The evaluation matrix of the canonical distance polynomial, computed from
/// its factored form `prod_{t in D} (t - d^2(a_i, a_j))` entry by entry.
///
/// Equal to `pp_matrix(points, &canonical_distance_polynomial(points))` but
/// usable for large distance counts, where the expanded polynomial would
/// have astronomically many terms.
pub fn canonical_pp_matrix(points: &PointSet) -> RationalMatrix {
    let m = points.len();
    let distances: Vec<Rational> = if m >= 2 {
        squared_distance_set(points)
            .expect("two points")
            .values()
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(m);
        for j in 0..m {
            let d = crate::points::squared_distance(points.point(i), points.point(j));
            let mut value = Rational::one();
            for t in &distances {
                value *= t - &d;
            }
            row.push(value);
        }
        rows.push(row);
    }
    RationalMatrix::from_rows(rows).expect("nonempty point set")
}

/// Evaluation matrix `M[i][j] = p(a_i, a_j)` of a 2n-variate polynomial over
/// a point set. The result is symmetric iff `p` is symmetric under swapping
/// the two blocks of variables.
pub fn pp_matrix(points: &PointSet, p: &Polynomial) -> Result<RationalMatrix, VerifyError> {
    let n = points.arity();
    if p.arity() != 2 * n {
        return Err(VerifyError::PairArityMismatch {
            got: p.arity(),
            expected: 2 * n,
        });
    }
    let m = points.len();
    let mut rows = Vec::with_capacity(m);
    let mut pair = vec![Rational::zero(); 2 * n];
    for i in 0..m {
        pair[..n].clone_from_slice(points.point(i));
        let mut row = Vec::with_capacity(m);
        for j in 0..m {
            pair[n..].clone_from_slice(points.point(j));
            row.push(p.eval(&pair));
        }
        rows.push(row);
    }
    Ok(RationalMatrix::from_rows(rows).expect("nonempty point set"))
}

/// `p(y, x)`: the two variable blocks swapped.
pub fn swap_pair_polynomial(p: &Polynomial) -> Polynomial {
    let arity = p.arity();
    assert!(arity % 2 == 0, "pair polynomial needs even arity");
    let n = arity / 2;
    let perm: Vec<usize> = (0..arity).map(|i| (i + n) % arity).collect();
    p.permute_variables(&perm)
}

/// `(p(x,y) + p(y,x)) / 2`, which defines the same quadratic form.
pub fn symmetrize_pair_polynomial(p: &Polynomial) -> Polynomial {
    let sum = p + &swap_pair_polynomial(p);
    sum.scaled(&Rational::new(1.into(), 2.into()))
}

/// Outcome of checking the rank and inertia bounds on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpTheoremReport {
    pub s: u32,
    /// `h_A(s)`: standard monomials of the vanishing ideal of degree <= s.
    pub h_value: usize,
    pub rank: usize,
    /// Inertia of the symmetrized evaluation matrix.
    pub signature: InertiaSignature,
    /// `rank <= 2 h_A(s)`.
    pub rank_ok: bool,
    /// `max(r+, r-) <= h_A(s)`.
    pub inertia_ok: bool,
}

/// Checks both evaluation-matrix bounds for a point set `A`, a 2n-variate
/// polynomial `p` with `deg p <= 2s+1`, and a level `s`:
/// the rank of `M(A, p)` is at most `2 h_A(s)`, and neither inertia index of
/// the associated quadratic form exceeds `h_A(s)`.
///
/// The rank is taken on the raw evaluation matrix (no symmetry needed); the
/// inertia on its symmetric part, which carries the quadratic form.
pub fn check_pp_theorem(
    points: &PointSet,
    p: &Polynomial,
    s: u32,
) -> Result<PpTheoremReport, VerifyError> {
    if p.arity() != 2 * points.arity() {
        return Err(VerifyError::PairArityMismatch {
            got: p.arity(),
            expected: 2 * points.arity(),
        });
    }
    if let Some(degree) = p.degree() {
        if degree > 2 * s + 1 {
            return Err(VerifyError::DegreeHypothesis {
                degree,
                max: 2 * s + 1,
            });
        }
    }
    let (_, sm) = vanishing_ideal_with_standard_monomials(points, TermOrder::DegLex);
    let h_value = sm.count_leq(s);
    let matrix = pp_matrix(points, p)?;
    let rank_value = rank(&matrix);
    let signature = inertia(&matrix.symmetric_part()?)?;
    Ok(PpTheoremReport {
        s,
        h_value,
        rank: rank_value,
        signature,
        rank_ok: rank_value <= 2 * h_value,
        inertia_ok: signature.r_plus.max(signature.r_minus) <= h_value,
    })
}

/// [`check_pp_theorem`] specialized to the canonical distance polynomial,
/// evaluated in factored form so large distance counts stay cheap.
///
/// The polynomial has degree exactly twice the distance count, so the
/// hypothesis needs `2*distance_count <= 2s+1`, i.e. `s >= distance_count`;
/// `s` defaults to the distance count itself.
pub fn check_pp_theorem_canonical(
    points: &PointSet,
    s: Option<u32>,
) -> Result<PpTheoremReport, VerifyError> {
    let count = distance_count(points) as u32;
    let s = s.unwrap_or(count);
    let degree = 2 * count;
    if degree > 2 * s + 1 {
        return Err(VerifyError::DegreeHypothesis {
            degree,
            max: 2 * s + 1,
        });
    }
    let (_, sm) = vanishing_ideal_with_standard_monomials(points, TermOrder::DegLex);
    let h_value = sm.count_leq(s);
    let matrix = canonical_pp_matrix(points);
    let rank_value = rank(&matrix);
    let signature = inertia(&matrix)?;
    Ok(PpTheoremReport {
        s,
        h_value,
        rank: rank_value,
        signature,
        rank_ok: rank_value <= 2 * h_value,
        inertia_ok: signature.r_plus.max(signature.r_minus) <= h_value,
    })
}

/// Outcome of checking a point set against one bound family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceBoundReport {
    /// Number of distinct (squared) distances of the set.
    pub s: usize,
    pub size: usize,
    pub bound: BoundReport,
    pub holds: bool,
}

/// Computes `s` as the exact number of distinct squared distances of `A`,
/// evaluates the family bound at that `s`, and compares.
///
/// For the general-ideal family the theorem hypothesis is enforced: every
/// generator must vanish on every point, exactly. Closed-form families trust
/// the caller's claim that the set lies in the corresponding algebraic set,
/// which is not reconstructible from parameters alone.
pub fn check_distance_bound(
    points: &PointSet,
    spec: &BoundSpec,
) -> Result<DistanceBoundReport, VerifyError> {
    if let Some(expected) = spec.ambient_arity() {
        if expected != points.arity() {
            return Err(VerifyError::AmbientMismatch {
                expected,
                got: points.arity(),
            });
        }
    }
    if let BoundSpec::GeneralIdeal { generators, .. } = spec {
        for g in generators {
            for (index, point) in points.points().iter().enumerate() {
                if !g.eval(point).is_zero() {
                    return Err(VerifyError::NonVanishingGenerator {
                        generator: g.to_string(),
                        point_index: index,
                    });
                }
            }
        }
    }
    let s = distance_count(points);
    let bound = spec.evaluate(s as u32)?;
    let holds = BigUint::from(points.len()) <= bound.value;
    Ok(DistanceBoundReport {
        s,
        size: points.len(),
        bound,
        holds,
    })
}

/// Result of the exhaustive search: the largest subset size with at most `s`
/// distinct squared distances, and the first witness found (as candidate
/// indices, in DFS order, so the result is deterministic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub max_size: usize,
    pub witness: Vec<usize>,
}

/// Depth-first branch-and-bound over subsets of `candidates` for the largest
/// subset determining at most `s` distinct squared distances.
///
/// Without a size cap the candidate count is limited to
/// [`MAX_SEARCH_CANDIDATES`]; a cap also limits the subset size searched.
pub fn brute_force_max_sdist(
    candidates: &PointSet,
    s: usize,
    size_cap: Option<usize>,
) -> Result<SearchOutcome, VerifyError> {
    let m = candidates.len();
    if size_cap.is_none() && m > MAX_SEARCH_CANDIDATES {
        return Err(VerifyError::SearchGuardExceeded { candidates: m });
    }
    let cap = size_cap.unwrap_or(m).min(m);

    // intern the pairwise squared distances
    let mut values: Vec<Rational> = Vec::new();
    let mut dist_id = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..i {
            let d = crate::points::squared_distance(candidates.point(i), candidates.point(j));
            let id = match values.iter().position(|v| *v == d) {
                Some(id) => id,
                None => {
                    values.push(d);
                    values.len() - 1
                }
            };
            dist_id[i][j] = id;
            dist_id[j][i] = id;
        }
    }

    struct Search<'a> {
        dist_id: &'a [Vec<usize>],
        s: usize,
        cap: usize,
        m: usize,
        chosen: Vec<usize>,
        counts: Vec<u32>,
        distinct: usize,
        best_size: usize,
        best: Vec<usize>,
    }

    impl Search<'_> {
        fn run(&mut self, next: usize) {
            if self.chosen.len() > self.best_size {
                self.best_size = self.chosen.len();
                self.best = self.chosen.clone();
            }
            if next == self.m
                || self.chosen.len() == self.cap
                || self.chosen.len() + (self.m - next) <= self.best_size
            {
                return;
            }
            // include `next` if its distances keep the budget
            let mut added = Vec::new();
            let mut new_distinct = self.distinct;
            for &c in &self.chosen {
                let id = self.dist_id[c][next];
                if self.counts[id] == 0 {
                    new_distinct += 1;
                }
                self.counts[id] += 1;
                added.push(id);
            }
            if new_distinct <= self.s {
                let saved = self.distinct;
                self.distinct = new_distinct;
                self.chosen.push(next);
                self.run(next + 1);
                self.chosen.pop();
                self.distinct = saved;
            }
            for id in added {
                self.counts[id] -= 1;
            }
            // exclude `next`
            self.run(next + 1);
        }
    }

    let mut search = Search {
        dist_id: &dist_id,
        s,
        cap,
        m,
        chosen: Vec::new(),
        counts: vec![0; values.len().max(1)],
        distinct: 0,
        best_size: 0,
        best: Vec::new(),
    };
    search.run(0);
    Ok(SearchOutcome {
        max_size: search.best_size,
        witness: search.best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{box_bound, permutation_bound, uniform_bound};
    use crate::parse::parse_polynomial;
    use crate::rational::{rat, rat_int};
    use num_traits::One;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(text: &str, arity: usize) -> Polynomial {
        parse_polynomial(text, arity).unwrap()
    }

    fn unit_square() -> PointSet {
        PointSet::from_integers(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]).unwrap()
    }

    #[test]
    fn canonical_matrix_is_positive_diagonal() {
        let triangle = PointSet::from_integers(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let poly = canonical_distance_polynomial(&triangle);
        let m = pp_matrix(&triangle, &poly).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { rat_int(2) } else { rat_int(0) };
                assert_eq!(m.entry(i, j), &expected);
            }
        }
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn constant_polynomial_gives_rank_one() {
        let square = unit_square();
        let m = pp_matrix(&square, &Polynomial::one(4)).unwrap();
        assert_eq!(rank(&m), 1);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entry(i, j), &Rational::one());
            }
        }
    }

    #[test]
    fn two_point_identity_matrix() {
        let points = PointSet::from_integers(&[&[0], &[1]]).unwrap();
        // p(x, y) = 1 - (x - y)^2
        let poly = p("1 - x1^2 + 2*x1*x2 - x2^2", 2);
        let m = pp_matrix(&points, &poly).unwrap();
        assert_eq!(m.entry(0, 0), &rat_int(1));
        assert_eq!(m.entry(0, 1), &rat_int(0));
        assert_eq!(m.entry(1, 0), &rat_int(0));
        assert_eq!(m.entry(1, 1), &rat_int(1));
    }

    #[test]
    fn pp_matrix_rejects_wrong_arity() {
        let square = unit_square();
        assert_eq!(
            pp_matrix(&square, &Polynomial::one(3)),
            Err(VerifyError::PairArityMismatch {
                got: 3,
                expected: 4
            })
        );
    }

    #[test]
    fn swap_and_symmetrize() {
        // p(x, y) = x1*y1^2 in n = 1
        let poly = p("x1*x2^2", 2);
        let swapped = swap_pair_polynomial(&poly);
        assert_eq!(swapped, p("x1^2*x2", 2));
        let sym = symmetrize_pair_polynomial(&poly);
        assert_eq!(sym, p("1/2*x1*x2^2 + 1/2*x1^2*x2", 2));
    }

    #[test]
    fn pp_theorem_on_the_unit_square() {
        let square = unit_square();
        let poly = canonical_distance_polynomial(&square);
        assert_eq!(poly.degree(), Some(4));
        let report = check_pp_theorem(&square, &poly, 2).unwrap();
        assert_eq!(report.h_value, 4);
        assert_eq!(report.rank, 4);
        assert!(report.rank_ok);
        // tight: r+ = |A| = h_A(2)
        assert_eq!(report.signature.r_plus, 4);
        assert_eq!(report.signature.r_minus, 0);
        assert!(report.inertia_ok);
    }

    #[test]
    fn pp_theorem_on_collinear_points() {
        let line = PointSet::from_integers(&[&[0], &[1], &[3]]).unwrap();
        let poly = canonical_distance_polynomial(&line);
        assert_eq!(poly.degree(), Some(6));
        let report = check_pp_theorem(&line, &poly, 3).unwrap();
        assert_eq!(report.h_value, 3);
        assert_eq!(report.rank, 3);
        assert_eq!(report.signature.r_plus, 3);
        assert!(report.rank_ok && report.inertia_ok);
    }

    #[test]
    fn pp_theorem_zero_polynomial() {
        let square = unit_square();
        let report = check_pp_theorem(&square, &Polynomial::zero(4), 1).unwrap();
        assert_eq!(report.rank, 0);
        assert_eq!(report.signature.r_zero, 4);
        assert!(report.rank_ok && report.inertia_ok);
    }

    #[test]
    fn pp_theorem_degree_hypothesis_enforced() {
        let square = unit_square();
        let poly = canonical_distance_polynomial(&square); // degree 4
        assert_eq!(
            check_pp_theorem(&square, &poly, 1),
            Err(VerifyError::DegreeHypothesis { degree: 4, max: 3 })
        );
    }

    #[test]
    fn distance_bound_on_the_square_box_family() {
        let report =
            check_distance_bound(&unit_square(), &BoundSpec::Box { n: 2, q: 2 }).unwrap();
        assert_eq!(report.s, 2);
        assert_eq!(report.size, 4);
        assert_eq!(report.bound.value, BigUint::from(4u32));
        assert!(report.holds);
    }

    #[test]
    fn distance_bound_dgs_on_inscribed_square() {
        // the four poles of the unit circle: a 2-distance spherical set
        let square = PointSet::from_integers(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]).unwrap();
        let report = check_distance_bound(&square, &BoundSpec::Dgs { n: 2 }).unwrap();
        assert_eq!(report.s, 2);
        assert_eq!(report.bound.value, BigUint::from(5u32));
        assert!(report.holds);
    }

    #[test]
    fn distance_bound_permutations_tight() {
        let x3 = generate_family(&FamilySpec::Permutations {
            values: vec![rat_int(1), rat_int(2), rat_int(3)],
        })
        .unwrap();
        let report = check_distance_bound(&x3, &BoundSpec::Permutation { n: 3 }).unwrap();
        assert_eq!(report.s, 3);
        assert_eq!(report.size, 6);
        assert_eq!(report.bound.value, permutation_bound(3, 3).unwrap());
        assert!(report.holds);
    }

    #[test]
    fn distance_bound_enforces_vanishing_hypothesis() {
        let square = unit_square();
        let spec = BoundSpec::GeneralIdeal {
            arity: 2,
            generators: vec![p("x1^2 + x2^2 - 1", 2)],
        };
        let err = check_distance_bound(&square, &spec).unwrap_err();
        assert!(matches!(
            err,
            VerifyError::NonVanishingGenerator { point_index: 0, .. }
        ));

        // the box ideal does vanish on the square
        let spec = BoundSpec::GeneralIdeal {
            arity: 2,
            generators: vec![p("x1^2 - x1", 2), p("x2^2 - x2", 2)],
        };
        let report = check_distance_bound(&square, &spec).unwrap();
        assert_eq!(report.bound.value, BigUint::from(4u32));
        assert!(report.holds);
    }

    #[test]
    fn distance_bound_checks_ambient_dimension() {
        let square = unit_square();
        assert_eq!(
            check_distance_bound(&square, &BoundSpec::Bbs { n: 3 }),
            Err(VerifyError::AmbientMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn brute_force_on_the_square() {
        let square = unit_square();
        let one = brute_force_max_sdist(&square, 1, None).unwrap();
        assert_eq!(one.max_size, 2);
        let two = brute_force_max_sdist(&square, 2, None).unwrap();
        assert_eq!(two.max_size, 4);
        assert_eq!(two.witness, vec![0, 1, 2, 3]);
    }

    // Exhaustive subset enumeration, the independent oracle for the search.
    fn exhaustive_max(points: &PointSet, s: usize) -> usize {
        let m = points.len();
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let indices: Vec<usize> = (0..m).filter(|&i| (mask >> i) & 1 == 1).collect();
            if indices.len() < 2 {
                best = best.max(indices.len());
                continue;
            }
            let subset = points.subset(&indices).unwrap();
            if distance_count(&subset) <= s {
                best = best.max(indices.len());
            }
        }
        best
    }

    #[test]
    fn brute_force_matches_exhaustive_oracle() {
        let square = unit_square();
        for s in 0..=3 {
            assert_eq!(
                brute_force_max_sdist(&square, s, None).unwrap().max_size,
                exhaustive_max(&square, s)
            );
        }
        let hypercube = generate_family(&FamilySpec::Box {
            sets: vec![
                vec![rat_int(0), rat_int(1)],
                vec![rat_int(0), rat_int(1)],
                vec![rat_int(0), rat_int(1)],
            ],
        })
        .unwrap();
        for s in 1..=3 {
            assert_eq!(
                brute_force_max_sdist(&hypercube, s, None).unwrap().max_size,
                exhaustive_max(&hypercube, s)
            );
        }
    }

    #[test]
    fn brute_force_even_weight_extremum_in_dimension_four() {
        let cube4 = generate_family(&FamilySpec::Box {
            sets: vec![vec![rat_int(0), rat_int(1)]; 4],
        })
        .unwrap();
        assert_eq!(cube4.len(), 16);
        let outcome = brute_force_max_sdist(&cube4, 2, None).unwrap();
        assert_eq!(outcome.max_size, 8);
        // the bound C(4,0)+C(4,1)+C(4,2) = 11 is not attained here
        assert!(BigUint::from(outcome.max_size) < box_bound(4, 2, 2).unwrap());
        let witness = cube4.subset(&outcome.witness).unwrap();
        assert_eq!(distance_count(&witness), 2);
    }

    #[test]
    fn brute_force_guard_and_cap() {
        let big_box = generate_family(&FamilySpec::Box {
            sets: vec![
                vec![rat_int(0), rat_int(1), rat_int(2), rat_int(3), rat_int(4)],
                vec![rat_int(0), rat_int(1), rat_int(2), rat_int(3), rat_int(4)],
            ],
        })
        .unwrap();
        assert_eq!(big_box.len(), 25);
        assert_eq!(
            brute_force_max_sdist(&big_box, 1, None),
            Err(VerifyError::SearchGuardExceeded { candidates: 25 })
        );
        let capped = brute_force_max_sdist(&big_box, 2, Some(3)).unwrap();
        assert_eq!(capped.max_size, 3);
    }

    #[test]
    fn brute_force_below_family_bounds() {
        // uniform layer Y(4,2) at s = 1
        let layer = generate_family(&FamilySpec::UniformLayer { n: 4, d: 2 }).unwrap();
        let outcome = brute_force_max_sdist(&layer, 1, None).unwrap();
        assert!(BigUint::from(outcome.max_size) <= uniform_bound(4, 2, 1).unwrap());
        // permutations of (1, 2, 3) at s = 1
        let x3 = generate_family(&FamilySpec::Permutations {
            values: vec![rat_int(1), rat_int(2), rat_int(3)],
        })
        .unwrap();
        let outcome = brute_force_max_sdist(&x3, 1, None).unwrap();
        assert!(BigUint::from(outcome.max_size) <= permutation_bound(3, 1).unwrap());
    }

    fn random_point_set(rng: &mut ChaCha8Rng, n: usize, size: usize) -> PointSet {
        loop {
            let points: Vec<Vec<Rational>> = (0..size)
                .map(|_| {
                    (0..n)
                        .map(|_| rat(rng.gen_range(-4i64..5), rng.gen_range(1i64..3)))
                        .collect()
                })
                .collect();
            if let Ok(set) = PointSet::new(points) {
                return set;
            }
        }
    }

    #[test]
    fn canonical_matrix_diagonal_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = rng.gen_range(1..=3);
            let size = rng.gen_range(2..=6);
            let a = random_point_set(&mut rng, n, size);
            let m = canonical_pp_matrix(&a);
            for i in 0..a.len() {
                for j in 0..a.len() {
                    if i == j {
                        assert!(m.entry(i, i) > &Rational::zero());
                    } else {
                        assert!(m.entry(i, j).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_matrix_agrees_with_expanded_polynomial() {
        // small sets only: the expanded canonical polynomial grows quickly
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..5 {
            let a = random_point_set(&mut rng, 2, 3);
            let poly = canonical_distance_polynomial(&a);
            let expanded = pp_matrix(&a, &poly).unwrap();
            assert_eq!(canonical_pp_matrix(&a), expanded);
        }
        let triangle = PointSet::from_integers(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let poly = canonical_distance_polynomial(&triangle);
        assert_eq!(
            canonical_pp_matrix(&triangle),
            pp_matrix(&triangle, &poly).unwrap()
        );
    }
}
