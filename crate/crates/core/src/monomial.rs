//! Monomials as dense exponent vectors and the two term orders used
//! throughout the crate.

use std::cmp::Ordering;
use std::fmt;

/// A monomial `x1^e1 * ... * xn^en` of fixed arity `n`.
///
/// The structural `Ord` implementation is deglex (total degree first, ties by
/// exponent-vector lex with `x1` most significant), so sorted containers of
/// monomials iterate in deglex order. Term-order-sensitive code should go
/// through [`TermOrder::compare`] instead of `Ord`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1`.
    pub fn unit(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    /// The monomial `x_{index+1}` (indices are 0-based).
    pub fn variable(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index {index} out of range");
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Does `self` divide `other` componentwise?
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor` when `divisor` divides `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        assert_eq!(self.arity(), divisor.arity(), "arity mismatch");
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&divisor.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when the supports are disjoint (lcm = product).
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        assert_eq!(self.arity(), other.arity(), "arity mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Applies a variable permutation: exponent of new variable `i` is the
    /// exponent of old variable `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Monomial {
        assert_eq!(perm.len(), self.arity(), "permutation length mismatch");
        Monomial {
            exps: perm.iter().map(|&j| self.exps[j]).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity(), "arity mismatch");
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A term order on monomials with variable precedence `x1 > x2 > ... > xn`.
///
/// Both orders are multiplicative total orders with `1` minimal. Lex compares
/// exponents at the first differing index; deglex compares total degree first
/// and breaks ties by lex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TermOrder {
    Lex,
    DegLex,
}

impl TermOrder {
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        assert_eq!(u.arity(), v.arity(), "arity mismatch");
        match self {
            TermOrder::Lex => u.exponents().cmp(v.exponents()),
            TermOrder::DegLex => u
                .degree()
                .cmp(&v.degree())
                .then_with(|| u.exponents().cmp(v.exponents())),
        }
    }

    pub fn max<'a>(&self, u: &'a Monomial, v: &'a Monomial) -> &'a Monomial {
        if self.compare(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::DegLex => write!(f, "deglex"),
        }
    }
}

/// A monomial tagged with a term order, so ordered collections can key on the
/// term order instead of the structural order. All elements of one collection
/// must share the same order.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct OrderedMonomial {
    pub order: TermOrder,
    pub monomial: Monomial,
}

impl OrderedMonomial {
    pub fn new(order: TermOrder, monomial: Monomial) -> Self {
        OrderedMonomial { order, monomial }
    }
}

impl Ord for OrderedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.compare(&self.monomial, &other.monomial)
    }
}

impl PartialOrd for OrderedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
