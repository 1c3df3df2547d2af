//! Multivariate division, S-polynomials, Buchberger's algorithm, and
//! reduction to the unique reduced Gröbner basis.

use std::collections::BTreeSet;

use num_traits::One;
use thiserror::Error;

use crate::monomial::{Monomial, OrderedMonomial, TermOrder};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("no nonzero generators")]
    NoNonzeroGenerators,
}

/// A Gröbner basis of an ideal with respect to a fixed term order.
///
/// [`buchberger`] always returns the reduced basis: every element is monic,
/// no monomial of any element is divisible by the leading monomial of
/// another, and elements are sorted by leading monomial. The reduced basis
/// is canonical for the ideal, independent of the input generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn new_reduced(order: TermOrder, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            order,
            elements,
            reduced: true,
        }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn arity(&self) -> usize {
        self.elements[0].arity()
    }

    /// Generators of the initial ideal in(I).
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| {
                g.leading_monomial(self.order)
                    .expect("basis elements are nonzero")
                    .clone()
            })
            .collect()
    }

    /// Ideal membership: true iff the normal form of `f` is zero.
    pub fn ideal_contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.elements, self.order).is_zero()
    }

    /// Normal form of `f` modulo this basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, self.order)
    }
}

/// The S-polynomial `(lcm/lt(f))·f − (lcm/lt(g))·g`, whose leading terms
/// cancel. Panics if either input is zero.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: TermOrder) -> Polynomial {
    let (lm_f, lc_f) = f.leading_term(order).expect("zero input");
    let (lm_g, lc_g) = g.leading_term(order).expect("zero input");
    let lcm = lm_f.lcm(lm_g);
    let mf = lcm.checked_div(lm_f).expect("lcm divisible by lm");
    let mg = lcm.checked_div(lm_g).expect("lcm divisible by lm");
    let left = f.mul_term(&mf, &lc_f.recip());
    let right = g.mul_term(&mg, &lc_g.recip());
    &left - &right
}

/// Division with remainder: returns quotients `q_i` and the remainder `r`
/// with `f = sum q_i * divisors_i + r`, where no monomial of `r` is divisible
/// by any divisor's leading monomial.
///
/// Deterministic: each step reduces the order-largest reducible monomial of
/// the running remainder, trying divisors in list order.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: TermOrder,
) -> (Vec<Polynomial>, Polynomial) {
    assert!(!divisors.is_empty(), "empty divisor list");
    let arity = f.arity();
    let leaders: Vec<(Monomial, Rational)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("zero divisor");
            (m.clone(), c.clone())
        })
        .collect();

    let mut quotients = vec![Polynomial::zero(arity); divisors.len()];
    let mut remainder = f.clone();
    'outer: loop {
        // order-largest monomial of the remainder divisible by some leader
        let mut candidates: Vec<Monomial> = remainder.terms().map(|(m, _)| m.clone()).collect();
        candidates.sort_by(|a, b| order.compare(b, a));
        for m in &candidates {
            for (i, (lm, lc)) in leaders.iter().enumerate() {
                if lm.divides(m) {
                    let quotient_mono = m.checked_div(lm).expect("divides");
                    let quotient_coeff = remainder.coefficient(m) / lc;
                    let step = Polynomial::from_term(
                        arity,
                        quotient_mono.clone(),
                        quotient_coeff.clone(),
                    );
                    quotients[i] = &quotients[i] + &step;
                    remainder = &remainder - &divisors[i].mul_term(&quotient_mono, &quotient_coeff);
                    continue 'outer;
                }
            }
        }
        break;
    }
    (quotients, remainder)
}

/// Remainder of `f` on division by `divisors`: the unique linear combination
/// of standard monomials congruent to `f` when the divisors form a Gröbner
/// basis.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: TermOrder) -> Polynomial {
    divide(f, divisors, order).1
}

/// Buchberger's algorithm, normalized to the unique reduced Gröbner basis.
///
/// Pair selection follows the normal strategy (smallest lcm first); pairs are
/// pruned by the coprimality criterion and the chain criterion.
pub fn buchberger(
    generators: &[Polynomial],
    order: TermOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        if !g.is_zero() {
            let monic = g.monic(order);
            if !basis.contains(&monic) {
                basis.push(monic);
            }
        }
    }
    if basis.is_empty() {
        return Err(GroebnerError::NoNonzeroGenerators);
    }

    let mut leaders: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();

    // pending pairs keyed by lcm so the smallest pops first
    let mut pending: BTreeSet<(OrderedMonomial, usize, usize)> = BTreeSet::new();
    let mut dropped: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pending.insert((
                OrderedMonomial::new(order, leaders[i].lcm(&leaders[j])),
                j,
                i,
            ));
        }
    }

    while let Some(entry) = pending.iter().next().cloned() {
        pending.remove(&entry);
        let (lcm, i, j) = (entry.0.monomial, entry.1, entry.2);
        dropped.insert((i, j));

        if leaders[i].is_coprime(&leaders[j]) {
            continue;
        }
        // chain criterion: some k with lm_k | lcm(i,j) and both (i,k), (j,k)
        // already handled
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leaders[k].divides(&lcm)
                && dropped.contains(&pair_key(i, k))
                && dropped.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let reduced = normal_form(&s, &basis, order);
        if reduced.is_zero() {
            continue;
        }
        let reduced = reduced.monic(order);
        let new_leader = reduced.leading_monomial(order).unwrap().clone();
        basis.push(reduced);
        leaders.push(new_leader);
        let new_index = basis.len() - 1;
        for k in 0..new_index {
            pending.insert((
                OrderedMonomial::new(order, leaders[k].lcm(&leaders[new_index])),
                k,
                new_index,
            ));
        }
    }

    Ok(GroebnerBasis::new_reduced(order, inter_reduce(basis, order)))
}

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Normalizes a Gröbner basis to the reduced one: minimal leading monomials,
/// monic elements, tails in normal form, sorted by leading monomial.
fn inter_reduce(basis: Vec<Polynomial>, order: TermOrder) -> Vec<Polynomial> {
    // keep only elements whose lm is not divisible by another's lm
    let leaders: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();
    let mut kept: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = leaders.iter().enumerate().any(|(j, lm)| {
            j != i
                && lm.divides(&leaders[i])
                && (leaders[i] != *lm || j < i) // keep the first of equal leaders
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    // reduce each element's tail modulo the others until stable
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let reduced = normal_form(&kept[i], &others, order).monic(order);
            if reduced != kept[i] {
                assert!(
                    !reduced.is_zero(),
                    "minimal basis element reduced to zero"
                );
                kept[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &kept {
        debug_assert!(g.leading_term(order).unwrap().1.is_one());
    }
    kept.sort_by(|a, b| {
        order.compare(
            a.leading_monomial(order).unwrap(),
            b.leading_monomial(order).unwrap(),
        )
    });
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn p(text: &str, arity: usize) -> Polynomial {
        parse_polynomial(text, arity).unwrap()
    }

    #[test]
    fn s_polynomial_hand_computed() {
        // f = x1 - x2, g = x2^2 under deglex: lcm = x1*x2^2, S = -x2^3
        let f = p("x1 - x2", 2);
        let g = p("x2^2", 2);
        let s = s_polynomial(&f, &g, TermOrder::DegLex);
        assert_eq!(s, p("-x2^3", 2));
    }

    #[test]
    fn s_polynomial_self_pair_cancels() {
        let f = p("x1^2 + 3*x2", 2);
        assert!(s_polynomial(&f, &f, TermOrder::DegLex).is_zero());
    }

    #[test]
    fn s_polynomial_coprime_leaders_cancel_fully() {
        let f = p("x1^2", 2);
        let g = p("x2^2", 2);
        assert!(s_polynomial(&f, &g, TermOrder::DegLex).is_zero());
    }

    #[test]
    #[should_panic(expected = "zero input")]
    fn s_polynomial_zero_input_panics() {
        s_polynomial(&Polynomial::zero(2), &Polynomial::one(2), TermOrder::DegLex);
    }

    #[test]
    fn normal_form_single_step() {
        let g = vec![p("x1^2 - x1", 1)];
        assert_eq!(normal_form(&p("x1^2", 1), &g, TermOrder::DegLex), p("x1", 1));
    }

    #[test]
    fn normal_form_of_member_is_zero() {
        let g = vec![p("x1^2 - x1", 1)];
        assert!(normal_form(&g[0], &g, TermOrder::DegLex).is_zero());
    }

    #[test]
    fn normal_form_two_step_reduction() {
        // x1^2*x2 -> x1*x2 (by x1^2 - x1) and x1*x2 is irreducible
        let g = vec![p("x1^2 - x1", 2), p("x2^2 - x2", 2)];
        assert_eq!(
            normal_form(&p("x1^2*x2", 2), &g, TermOrder::DegLex),
            p("x1*x2", 2)
        );
    }

    #[test]
    fn division_certificate_re_expands() {
        let divisors = vec![p("x1^2 - x1", 2), p("x2^2 - x2", 2)];
        let f = p("x1^3*x2^2 - 5*x1*x2 + 7", 2);
        let (quotients, remainder) = divide(&f, &divisors, TermOrder::DegLex);
        let mut rebuilt = remainder.clone();
        for (q, g) in quotients.iter().zip(&divisors) {
            rebuilt = &rebuilt + &(q * g);
        }
        assert_eq!(rebuilt, f);
        for (m, _) in remainder.terms() {
            for g in &divisors {
                assert!(!g.leading_monomial(TermOrder::DegLex).unwrap().divides(m));
            }
        }
    }

    #[test]
    fn buchberger_box_generators_already_reduced() {
        let gens = vec![p("x1^2 - x1", 2), p("x2^2 - x2", 2)];
        let gb = buchberger(&gens, TermOrder::DegLex).unwrap();
        // same set; elements are listed by ascending leading monomial
        assert_eq!(gb.elements(), &[p("x2^2 - x2", 2), p("x1^2 - x1", 2)]);
        assert!(gb.is_reduced());
    }

    #[test]
    fn buchberger_principal_ideal_is_singleton() {
        let gens = vec![p("x1^2 + x2^2 - 1", 2)];
        let gb = buchberger(&gens, TermOrder::DegLex).unwrap();
        assert_eq!(gb.elements(), gens.as_slice());
    }

    #[test]
    fn buchberger_s_pair_reduces_to_zero() {
        // the single S-polynomial -x2^3 reduces to 0 by x2^2
        let gens = vec![p("x1 - x2", 2), p("x2^2", 2)];
        let gb = buchberger(&gens, TermOrder::DegLex).unwrap();
        assert_eq!(gb.elements(), gens.as_slice());
    }

    #[test]
    fn buchberger_rejects_zero_ideal() {
        assert_eq!(
            buchberger(&[Polynomial::zero(2)], TermOrder::DegLex),
            Err(GroebnerError::NoNonzeroGenerators)
        );
        assert_eq!(
            buchberger(&[], TermOrder::DegLex),
            Err(GroebnerError::NoNonzeroGenerators)
        );
    }

    #[test]
    fn ideal_membership() {
        let gb = buchberger(&[p("x1^2 - x1", 1)], TermOrder::DegLex).unwrap();
        assert!(gb.ideal_contains(&p("x1^3 - x1", 1)));
        assert!(!gb.ideal_contains(&p("x1 + 1", 1)));

        let circle = p("x1^2 + x2^2 - 1", 2);
        let gb = buchberger(&[circle.clone()], TermOrder::DegLex).unwrap();
        let f = &circle * &p("x1 - 7", 2);
        assert!(gb.ideal_contains(&f));
    }

    #[test]
    fn lex_elimination_example() {
        // intersection of circle and line: lex basis eliminates x1
        let gens = vec![p("x1^2 + x2^2 - 1", 2), p("x1 - x2", 2)];
        let gb = buchberger(&gens, TermOrder::Lex).unwrap();
        assert_eq!(
            gb.elements(),
            &[p("x2^2 - 1/2", 2), p("x1 - x2", 2)]
        );
    }

    fn random_test_polys() -> Vec<Vec<Polynomial>> {
        vec![
            vec![p("x1^2 - x1", 2), p("x2^2 - x2", 2), p("x1*x2 - x2", 2)],
            vec![p("x1^2 + x2^2 - 1", 2), p("x1*x2 - 1", 2)],
            vec![p("x1 - x2^2", 3), p("x2 - x3^2", 3), p("x3^3 - x1*x2", 3)],
            vec![p("2*x1^2*x2 - x2", 2), p("3*x1*x2^2 - x1 - 1", 2)],
        ]
    }

    #[test]
    fn buchberger_criterion_holds_on_output() {
        for gens in random_test_polys() {
            for order in [TermOrder::Lex, TermOrder::DegLex] {
                let gb = buchberger(&gens, order).unwrap();
                let elems = gb.elements();
                for i in 0..elems.len() {
                    for j in 0..i {
                        let s = s_polynomial(&elems[i], &elems[j], order);
                        assert!(
                            normal_form(&s, elems, order).is_zero(),
                            "S-pair ({i},{j}) did not reduce to zero"
                        );
                    }
                }
                for g in &gens {
                    assert!(gb.ideal_contains(g), "generator escaped the ideal");
                }
            }
        }
    }

    #[test]
    fn reduced_basis_is_canonical_under_shuffling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for gens in random_test_polys() {
            let reference = buchberger(&gens, TermOrder::DegLex).unwrap();
            let mut shuffled = gens.clone();
            for _ in 0..5 {
                shuffled.shuffle(&mut rng);
                let gb = buchberger(&shuffled, TermOrder::DegLex).unwrap();
                assert_eq!(gb.elements(), reference.elements());
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent() {
        for gens in random_test_polys() {
            let gb = buchberger(&gens, TermOrder::DegLex).unwrap();
            let f = p("x1^3*x2 + 4*x1*x2 - 2*x2 + 5", gb.arity());
            let once = gb.normal_form(&f);
            let twice = gb.normal_form(&once);
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn reduced_basis_elements_are_mutually_irreducible() {
        for gens in random_test_polys() {
            let gb = buchberger(&gens, TermOrder::DegLex).unwrap();
            let leaders = gb.leading_monomials();
            for (i, g) in gb.elements().iter().enumerate() {
                for (m, _) in g.terms() {
                    for (j, lm) in leaders.iter().enumerate() {
                        if i != j {
                            assert!(!lm.divides(m));
                        }
                    }
                }
            }
        }
    }
}
