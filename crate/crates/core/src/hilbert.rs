//! Standard monomials, affine Hilbert functions, vanishing ideals of finite
//! point sets (Buchberger–Möller), and finite-difference recovery of the
//! eventual Hilbert polynomial.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bounds::binomial;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::{Monomial, OrderedMonomial, TermOrder};
use crate::points::PointSet;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// The standard monomials of an ideal up to a degree cap, sorted by the term
/// order. A monomial is standard when no leading monomial of the ideal
/// divides it; the standard monomials form a basis of the quotient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialSet {
    order: TermOrder,
    arity: usize,
    degree_cap: u32,
    monomials: Vec<Monomial>,
}

impl StandardMonomialSet {
    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Number of monomials of degree at most `s`.
    pub fn count_leq(&self, s: u32) -> usize {
        self.monomials.iter().filter(|m| m.degree() <= s).count()
    }

    /// Histogram of monomial counts indexed by total degree `0..=degree_cap`.
    pub fn counts_by_degree(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.degree_cap as usize + 1];
        for m in &self.monomials {
            counts[m.degree() as usize] += 1;
        }
        counts
    }

    pub fn max_degree(&self) -> u32 {
        self.monomials.iter().map(|m| m.degree()).max().unwrap_or(0)
    }
}

/// All monomials of degree at most `s` that no leading monomial of `gb`
/// divides, enumerated by staircase-pruned exponent search.
pub fn standard_monomials_leq(gb: &GroebnerBasis, s: u32) -> StandardMonomialSet {
    let arity = gb.arity();
    let leaders = gb.leading_monomials();
    let mut monomials = Vec::new();
    let mut exps = vec![0u32; arity];
    enumerate(&leaders, arity, 0, s, &mut exps, &mut monomials);
    let order = gb.order();
    monomials.sort_by(|a, b| order.compare(a, b));
    StandardMonomialSet {
        order,
        arity,
        degree_cap: s,
        monomials,
    }
}

fn enumerate(
    leaders: &[Monomial],
    arity: usize,
    var: usize,
    budget: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    // prune once a leader supported on the assigned prefix divides it
    let divisible_already = leaders.iter().any(|lm| {
        lm.exponents()
            .iter()
            .enumerate()
            .all(|(i, &e)| if i < var { e <= exps[i] } else { e == 0 })
    });
    if divisible_already {
        return;
    }
    if var == arity {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in 0..=budget {
        exps[var] = e;
        enumerate(leaders, arity, var + 1, budget - e, exps, out);
    }
    exps[var] = 0;
}

/// The affine Hilbert function `h_{S/I}(s)`: the number of deglex standard
/// monomials of degree at most `s`. An empty (or all-zero) generator list is
/// the zero ideal, whose value is `C(arity+s, arity)`.
pub fn hilbert_function(arity: usize, generators: &[Polynomial], s: u32) -> BigUint {
    let nonzero: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return binomial(arity as u64 + s as u64, arity as u64);
    }
    let gb = buchberger(&nonzero, TermOrder::DegLex).expect("nonzero generators");
    BigUint::from(standard_monomials_leq(&gb, s).len())
}

/// Values of the affine Hilbert function for `s = 0..=s_max`.
///
/// The table is nondecreasing, starts at `h(0) = 1` for proper ideals, and is
/// bounded by `C(arity+s, arity)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    values: Vec<BigUint>,
}

impl HilbertTable {
    pub fn s_max(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn value(&self, s: u32) -> &BigUint {
        &self.values[s as usize]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Computes the Gröbner basis once and tabulates `h(s)` for `s = 0..=s_max`.
pub fn hilbert_table(arity: usize, generators: &[Polynomial], s_max: u32) -> HilbertTable {
    let nonzero: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        let values = (0..=s_max)
            .map(|s| binomial(arity as u64 + s as u64, arity as u64))
            .collect();
        return HilbertTable { values };
    }
    let gb = buchberger(&nonzero, TermOrder::DegLex).expect("nonzero generators");
    let sm = standard_monomials_leq(&gb, s_max);
    let by_degree = sm.counts_by_degree();
    let mut values = Vec::with_capacity(s_max as usize + 1);
    let mut total = 0usize;
    for s in 0..=s_max as usize {
        total += by_degree[s];
        values.push(BigUint::from(total));
    }
    HilbertTable { values }
}

/// The reduced Gröbner basis of the vanishing ideal `I(X)` of a finite point
/// set, together with the full standard monomial set (of size `|X|`).
///
/// This is the Buchberger–Möller evaluation method: enumerate monomials in
/// term order, keep those whose evaluation vectors on `X` are linearly
/// independent of their predecessors, and emit a basis element whenever a
/// monomial's evaluation vector is a combination of earlier standard ones.
pub fn vanishing_ideal_with_standard_monomials(
    points: &PointSet,
    order: TermOrder,
) -> (GroebnerBasis, StandardMonomialSet) {
    let arity = points.arity();
    let m = points.len();

    struct Row {
        pivot: usize,
        residual: Vec<Rational>,
        // residual = sum over standard monomials of combo[i] * eval(sm[i])
        combo: Vec<Rational>,
    }

    let mut standard: Vec<Monomial> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leaders: Vec<Monomial> = Vec::new();

    let mut queue: BTreeSet<OrderedMonomial> = BTreeSet::new();
    let mut enqueued: HashSet<Monomial> = HashSet::new();
    let unit = Monomial::unit(arity);
    enqueued.insert(unit.clone());
    queue.insert(OrderedMonomial::new(order, unit));

    while let Some(entry) = queue.iter().next().cloned() {
        queue.remove(&entry);
        let candidate = entry.monomial;
        if leaders.iter().any(|lm| lm.divides(&candidate)) {
            continue;
        }

        let eval: Vec<Rational> = (0..m)
            .map(|i| {
                let mut v = Rational::one();
                for (k, &e) in candidate.exponents().iter().enumerate() {
                    for _ in 0..e {
                        v *= &points.point(i)[k];
                    }
                }
                v
            })
            .collect();

        // reduce against the echelon rows, tracking the combination
        let mut residual = eval;
        let mut alpha = vec![Rational::zero(); standard.len()];
        for row in &rows {
            if residual[row.pivot].is_zero() {
                continue;
            }
            let factor = &residual[row.pivot] / &row.residual[row.pivot];
            for (r, w) in residual.iter_mut().zip(&row.residual) {
                *r -= &factor * w;
            }
            for (a, mu) in alpha.iter_mut().zip(&row.combo) {
                *a += &factor * mu;
            }
        }

        match residual.iter().position(|v| !v.is_zero()) {
            None => {
                // eval(candidate) = sum alpha_i eval(sm_i): emit the basis
                // element candidate - sum alpha_i sm_i
                let mut terms = vec![(candidate.clone(), Rational::one())];
                for (sm, a) in standard.iter().zip(&alpha) {
                    if !a.is_zero() {
                        terms.push((sm.clone(), -a.clone()));
                    }
                }
                basis.push(Polynomial::from_terms(arity, terms));
                leaders.push(candidate);
            }
            Some(pivot) => {
                let mut combo = alpha.iter().map(|a| -a.clone()).collect::<Vec<_>>();
                combo.push(Rational::one());
                rows.push(Row {
                    pivot,
                    residual,
                    combo,
                });
                for k in 0..arity {
                    let child = candidate.mul(&Monomial::variable(arity, k));
                    if enqueued.insert(child.clone()) {
                        queue.insert(OrderedMonomial::new(order, child));
                    }
                }
                standard.push(candidate);
            }
        }
    }

    debug_assert_eq!(standard.len(), m);
    let degree_cap = standard.iter().map(|m| m.degree()).max().unwrap_or(0);
    let sm = StandardMonomialSet {
        order,
        arity,
        degree_cap,
        monomials: standard,
    };
    // emitted in increasing leading-monomial order with standard-monomial
    // tails, which is exactly the reduced basis
    (GroebnerBasis::new_reduced(order, basis), sm)
}

/// The reduced Gröbner basis of the ideal of polynomials vanishing on `X`.
pub fn vanishing_ideal(points: &PointSet, order: TermOrder) -> GroebnerBasis {
    vanishing_ideal_with_standard_monomials(points, order).0
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EstimateError {
    #[error("window [{lo}, {hi}] has fewer than two values")]
    WindowTooSmall { lo: u32, hi: u32 },
    #[error("finite differences of the Hilbert function did not stabilize over [{lo}, {hi}]")]
    NotStabilized { lo: u32, hi: u32 },
}

/// Dimension, degree, and interpolating polynomial of the eventual Hilbert
/// polynomial, recovered from finite differences of computed values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolyEstimate {
    /// Degree of the eventual Hilbert polynomial.
    pub dimension: u32,
    /// `dimension! *` leading coefficient, always a positive integer.
    pub degree: BigUint,
    /// Coefficients `c_0..c_d` with `h(s) = sum c_i s^i` on the stable tail.
    pub coefficients: Vec<Rational>,
    /// First `s` from which the tail of the window is exactly polynomial.
    pub stable_from: u32,
}

/// Estimates the eventual Hilbert polynomial of `S/I` from the values
/// `h(s_lo), ..., h(s_hi)`.
///
/// Forward differences of the window are scanned for the first row with a
/// constant tail; the row index is the dimension and the constant is the
/// degree. Refuses to guess when no difference row stabilizes (at least two
/// equal trailing entries) within the window.
pub fn hilbert_poly_estimate(
    arity: usize,
    generators: &[Polynomial],
    s_lo: u32,
    s_hi: u32,
) -> Result<HilbertPolyEstimate, EstimateError> {
    if s_hi < s_lo || s_hi - s_lo < 1 {
        return Err(EstimateError::WindowTooSmall { lo: s_lo, hi: s_hi });
    }
    let table = hilbert_table(arity, generators, s_hi);
    let window: Vec<BigInt> = (s_lo..=s_hi)
        .map(|s| BigInt::from(table.value(s).clone()))
        .collect();

    let mut row = window.clone();
    for d in 0..window.len() as u32 {
        if row.len() >= 2 {
            let tail = constant_tail_len(&row);
            if tail >= 2 {
                return finish_estimate(&window, s_lo, d, row.len() - tail);
            }
        }
        if row.len() < 2 {
            break;
        }
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Err(EstimateError::NotStabilized { lo: s_lo, hi: s_hi })
}

fn constant_tail_len(row: &[BigInt]) -> usize {
    let last = row.last().expect("nonempty");
    row.iter().rev().take_while(|v| *v == last).count()
}

fn finish_estimate(
    window: &[BigInt],
    s_lo: u32,
    dimension: u32,
    tail_start_in_row: usize,
) -> Result<HilbertPolyEstimate, EstimateError> {
    // entries of difference row d at index i use h-values i..=i+d, so the
    // h-tail matching the polynomial starts at the same window index
    let stable_index = tail_start_in_row;
    let stable_from = s_lo + stable_index as u32;
    let tail = &window[stable_index..];

    // Newton forward differences at the nodes stable_from, stable_from+1, ...
    let d = dimension as usize;
    let mut diffs: Vec<BigInt> = Vec::with_capacity(d + 1);
    let mut level: Vec<BigInt> = tail.to_vec();
    for _ in 0..=d {
        diffs.push(level[0].clone());
        level = level.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let degree = diffs[d]
        .to_biguint()
        .ok_or(EstimateError::NotStabilized {
            lo: s_lo,
            hi: s_lo + window.len() as u32 - 1,
        })?;

    // h(s) = sum_i diffs[i] * C(s - stable_from, i), expanded in powers of s
    let s0 = Rational::from_integer(BigInt::from(stable_from));
    let mut coefficients = vec![Rational::zero(); d + 1];
    // falling factorial prod_{j<i} (s - s0 - j), built incrementally
    let mut falling = vec![Rational::one()];
    let mut i_factorial = Rational::one();
    for (i, diff) in diffs.iter().enumerate() {
        if i > 0 {
            let shift = &s0 + &Rational::from_integer(BigInt::from(i as u32 - 1));
            falling = poly_mul_linear(&falling, &shift);
            i_factorial *= Rational::from_integer(BigInt::from(i as u32));
        }
        let scale = Rational::from_integer(diff.clone()) / &i_factorial;
        for (c, f) in coefficients.iter_mut().zip(&falling) {
            *c += f * &scale;
        }
    }

    // the tail must be exactly polynomial; anything else is non-stabilization
    for (offset, value) in tail.iter().enumerate() {
        let s = Rational::from_integer(BigInt::from(stable_from + offset as u32));
        if eval_univariate(&coefficients, &s) != Rational::from_integer(value.clone()) {
            return Err(EstimateError::NotStabilized {
                lo: s_lo,
                hi: s_lo + window.len() as u32 - 1,
            });
        }
    }
    if !degree.is_zero() && coefficients[d].is_negative() {
        return Err(EstimateError::NotStabilized {
            lo: s_lo,
            hi: s_lo + window.len() as u32 - 1,
        });
    }

    Ok(HilbertPolyEstimate {
        dimension,
        degree,
        coefficients,
        stable_from,
    })
}

/// Multiplies a univariate coefficient vector by `(s - shift)`.
fn poly_mul_linear(coeffs: &[Rational], shift: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * shift;
    }
    out
}

fn eval_univariate(coeffs: &[Rational], at: &Rational) -> Rational {
    let mut total = Rational::zero();
    for c in coeffs.iter().rev() {
        total = total * at + c;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::points::{generate_family, FamilySpec};
    use crate::rational::{rat, rat_int};

    fn p(text: &str, arity: usize) -> Polynomial {
        parse_polynomial(text, arity).unwrap()
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn standard_monomials_of_the_unit_square_ideal() {
        let gb = buchberger(
            &[p("x1^2 - x1", 2), p("x2^2 - x2", 2)],
            TermOrder::DegLex,
        )
        .unwrap();
        let sm = standard_monomials_leq(&gb, 2);
        assert_eq!(
            sm.monomials(),
            &[mono(&[0, 0]), mono(&[0, 1]), mono(&[1, 0]), mono(&[1, 1])]
        );
    }

    #[test]
    fn staircase_of_a_single_variable() {
        let gb = buchberger(&[p("x1", 1)], TermOrder::DegLex).unwrap();
        let sm = standard_monomials_leq(&gb, 3);
        assert_eq!(sm.monomials(), &[mono(&[0])]);
    }

    #[test]
    fn circle_staircase_to_degree_two() {
        let gb = buchberger(&[p("x1^2 + x2^2 - 1", 2)], TermOrder::DegLex).unwrap();
        let sm = standard_monomials_leq(&gb, 2);
        // lm = x1^2; five standard monomials, matching C(4,2) - C(2,2)
        assert_eq!(
            sm.monomials(),
            &[
                mono(&[0, 0]),
                mono(&[0, 1]),
                mono(&[1, 0]),
                mono(&[0, 2]),
                mono(&[1, 1]),
            ]
        );
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(
            hilbert_function(2, &[p("x1^2 + x2^2 - 1", 2)], 3),
            BigUint::from(7u32)
        );
        assert_eq!(hilbert_function(3, &[], 2), BigUint::from(10u32));
        assert_eq!(
            hilbert_function(
                3,
                &[p("x1^2 - x1", 3), p("x2^2 - x2", 3), p("x3^2 - x3", 3)],
                1
            ),
            BigUint::from(4u32)
        );
    }

    #[test]
    fn vanishing_ideal_of_two_points_on_a_line() {
        let x = PointSet::from_integers(&[&[0], &[1]]).unwrap();
        let (gb, sm) = vanishing_ideal_with_standard_monomials(&x, TermOrder::DegLex);
        assert_eq!(gb.elements(), &[p("x1^2 - x1", 1)]);
        assert_eq!(sm.monomials(), &[mono(&[0]), mono(&[1])]);
    }

    #[test]
    fn vanishing_ideal_of_the_unit_square() {
        let x = PointSet::from_integers(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]).unwrap();
        let (gb, sm) = vanishing_ideal_with_standard_monomials(&x, TermOrder::DegLex);
        assert_eq!(gb.elements(), &[p("x2^2 - x2", 2), p("x1^2 - x1", 2)]);
        assert_eq!(sm.len(), 4);
    }

    #[test]
    fn vanishing_ideal_of_permutations_of_three() {
        let x = generate_family(&FamilySpec::Permutations {
            values: vec![rat_int(1), rat_int(2), rat_int(3)],
        })
        .unwrap();
        let (gb, sm) = vanishing_ideal_with_standard_monomials(&x, TermOrder::DegLex);
        assert_eq!(sm.len(), 6);
        assert_eq!(sm.counts_by_degree(), vec![1, 2, 2, 1]);
        for g in gb.elements() {
            for point in x.points() {
                assert_eq!(g.eval(point), rat_int(0));
            }
        }
    }

    #[test]
    fn vanishing_ideal_standard_monomial_count_matches_point_count() {
        let sets = [
            PointSet::from_integers(&[&[0, 0], &[2, 1], &[1, 1], &[-1, 3]]).unwrap(),
            PointSet::new(vec![
                vec![rat(1, 2), rat_int(0), rat_int(1)],
                vec![rat(1, 3), rat(1, 5), rat_int(2)],
                vec![rat_int(0), rat_int(0), rat_int(0)],
                vec![rat_int(1), rat_int(1), rat_int(1)],
                vec![rat_int(1), rat_int(-1), rat_int(0)],
            ])
            .unwrap(),
        ];
        for x in &sets {
            for order in [TermOrder::Lex, TermOrder::DegLex] {
                let (gb, sm) = vanishing_ideal_with_standard_monomials(x, order);
                assert_eq!(sm.len(), x.len());
                for g in gb.elements() {
                    for point in x.points() {
                        assert_eq!(g.eval(point), rat_int(0));
                    }
                }
                // the output is a fixed point of Buchberger reduction
                let recomputed = buchberger(gb.elements(), order).unwrap();
                assert_eq!(recomputed.elements(), gb.elements());
            }
        }
    }

    #[test]
    fn hilbert_function_saturates_at_point_count() {
        let x = PointSet::from_integers(&[&[0, 0], &[1, 2], &[3, 1], &[2, 2], &[5, 0]]).unwrap();
        let gb = vanishing_ideal(&x, TermOrder::DegLex);
        let gens: Vec<Polynomial> = gb.elements().to_vec();
        let mut previous = BigUint::zero();
        for s in 0..=(x.len() as u32) {
            let h = hilbert_function(2, &gens, s);
            assert!(h >= previous, "Hilbert function must be nondecreasing");
            previous = h;
        }
        assert_eq!(
            hilbert_function(2, &gens, x.len() as u32 - 1),
            BigUint::from(x.len())
        );
        assert_eq!(
            hilbert_function(2, &gens, x.len() as u32 + 3),
            BigUint::from(x.len())
        );
    }

    #[test]
    fn estimate_circle_dimension_and_degree() {
        let est = hilbert_poly_estimate(2, &[p("x1^2 + x2^2 - 1", 2)], 2, 8).unwrap();
        assert_eq!(est.dimension, 1);
        assert_eq!(est.degree, BigUint::from(2u32));
        // h(s) = 2s + 1
        assert_eq!(est.coefficients, vec![rat_int(1), rat_int(2)]);
    }

    #[test]
    fn estimate_full_plane() {
        let est = hilbert_poly_estimate(2, &[], 0, 6).unwrap();
        assert_eq!(est.dimension, 2);
        assert_eq!(est.degree, BigUint::one());
        // h(s) = (s+1)(s+2)/2
        assert_eq!(est.coefficients, vec![rat_int(1), rat(3, 2), rat(1, 2)]);
    }

    #[test]
    fn estimate_weierstrass_cubic() {
        let est = hilbert_poly_estimate(2, &[p("x2^2 - x1^3 - 1", 2)], 3, 9).unwrap();
        assert_eq!(est.dimension, 1);
        assert_eq!(est.degree, BigUint::from(3u32));
        // h(s) = 3s for s >= 3
        assert_eq!(est.coefficients, vec![rat_int(0), rat_int(3)]);
    }

    #[test]
    fn estimate_handles_pre_polynomial_prefix() {
        // window starts before the cubic's Hilbert function turns polynomial
        let est = hilbert_poly_estimate(2, &[p("x2^2 - x1^3 - 1", 2)], 0, 9).unwrap();
        assert_eq!(est.dimension, 1);
        assert_eq!(est.degree, BigUint::from(3u32));
        assert!(est.stable_from <= 3);
    }

    #[test]
    fn estimate_refuses_tiny_windows() {
        assert_eq!(
            hilbert_poly_estimate(2, &[], 3, 3),
            Err(EstimateError::WindowTooSmall { lo: 3, hi: 3 })
        );
    }

    #[test]
    fn estimate_reports_non_stabilization() {
        // the zero ideal in 3 variables needs four values for a cubic; a
        // 3-wide window cannot stabilize
        assert_eq!(
            hilbert_poly_estimate(3, &[], 0, 2),
            Err(EstimateError::NotStabilized { lo: 0, hi: 2 })
        );
    }
}
