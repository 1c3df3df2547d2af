//! Closed-form upper bounds for the size of s-distance sets in structured
//! real algebraic sets, plus the general Hilbert-function bound that
//! subsumes them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::hilbert::hilbert_function;
use crate::polynomial::Polynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

fn require(condition: bool, message: impl Into<String>) -> Result<(), BoundsError> {
    if condition {
        Ok(())
    } else {
        Err(BoundsError::InvalidParameter(message.into()))
    }
}

/// Exact binomial coefficient `C(n, k)` by the multiplicative formula;
/// zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut value = BigUint::one();
    for i in 0..k {
        value = value * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    value
}

/// Bannai–Bannai–Stanton: an s-distance set in `R^n` has at most
/// `C(n+s, s)` points.
pub fn bbs_bound(n: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(n >= 1 && s >= 1, "bbs bound needs n >= 1 and s >= 1")?;
    Ok(binomial(n as u64 + s as u64, s as u64))
}

/// Delsarte–Goethals–Seidel: an s-distance set on the unit sphere in `R^n`
/// has at most `C(n+s-1, s) + C(n+s-2, s-1)` points.
pub fn dgs_bound(n: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(n >= 2 && s >= 1, "dgs bound needs n >= 2 and s >= 1")?;
    Ok(binomial(n as u64 + s as u64 - 1, s as u64)
        + binomial(n as u64 + s as u64 - 2, s as u64 - 1))
}

/// For an s-distance set on the zero set of one polynomial of degree `d` in
/// `R^n`: `C(n+s, n) - C(n+s-d, n)` when `s >= d`, and the ambient
/// `C(n+s, n)` otherwise.
pub fn hypersurface_bound(n: u32, d: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(
        n >= 1 && d >= 1 && s >= 1,
        "hypersurface bound needs n, d, s >= 1",
    )?;
    let full = binomial(n as u64 + s as u64, n as u64);
    if s >= d {
        Ok(full - binomial(n as u64 + s as u64 - d as u64, n as u64))
    } else {
        Ok(full)
    }
}

/// Plane-curve specialization `ds - d(d-3)/2` of the hypersurface bound at
/// `n = 2`; requires `s >= d`.
pub fn plane_curve_bound(d: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(d >= 1, "plane curve bound needs d >= 1")?;
    require(s >= d, format!("plane curve bound needs s >= d, got s={s} < d={d}"))?;
    let d = BigInt::from(d);
    let s = BigInt::from(s);
    let value = &d * &s - &d * (&d - BigInt::from(3)) / BigInt::from(2);
    Ok(value.to_biguint().expect("positive for s >= d >= 1"))
}

/// For an s-distance set on a union of `p` spheres in `R^n`:
/// `sum_{i=0}^{2p-1} C(n+s-i-1, s-i)` when `s >= 2p`, otherwise the
/// Bannai–Bannai–Stanton bound.
///
/// For `s >= 2p` the sum provably equals `C(n+s, n) - C(n+s-2p, n)`; both
/// forms are evaluated and a mismatch panics, since it would mean the
/// arithmetic itself is broken.
pub fn sphere_union_bound(n: u32, p: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(
        n >= 2 && p >= 1 && s >= 1,
        "sphere union bound needs n >= 2, p >= 1, s >= 1",
    )?;
    if s < 2 * p {
        return bbs_bound(n, s);
    }
    let mut sum = BigUint::zero();
    for i in 0..(2 * p as u64) {
        sum += binomial(n as u64 + s as u64 - i - 1, s as u64 - i);
    }
    let difference = binomial(n as u64 + s as u64, n as u64)
        - binomial(n as u64 + s as u64 - 2 * p as u64, n as u64);
    assert_eq!(
        sum, difference,
        "sphere union bound: sum and difference forms disagree"
    );
    Ok(sum)
}

/// For an s-distance set in a box with `q` values per coordinate: the number
/// of monomials with every exponent below `q` and total degree at most `s`,
/// counted by dynamic programming over the variables.
pub fn box_bound(n: u32, q: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(n >= 1, "box bound needs n >= 1")?;
    require(q >= 2, "box bound needs q >= 2")?;
    // counts[j] = monomials in the first i variables of total degree j
    let cap = (s as usize).min(n as usize * (q as usize - 1));
    let mut counts = vec![BigUint::zero(); cap + 1];
    counts[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); cap + 1];
        for j in 0..=cap {
            for e in 0..=(q as usize - 1).min(j) {
                let carry = counts[j - e].clone();
                next[j] += carry;
            }
        }
        counts = next;
    }
    Ok(counts.into_iter().sum())
}

/// Extended binomial coefficient `C(n, j)_q`: the number of compositions of
/// `j` into `n` parts from `{0, ..., q-1}`. `C(n, j)_2 = C(n, j)`.
pub fn extended_binomial(n: u32, j: u32, q: u32) -> Result<BigUint, BoundsError> {
    require(n >= 1, "extended binomial needs n >= 1")?;
    require(q >= 2, "extended binomial needs q >= 2")?;
    let j = j as usize;
    let mut counts = vec![BigUint::zero(); j + 1];
    counts[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); j + 1];
        for t in 0..=j {
            for part in 0..=(q as usize - 1).min(t) {
                let carry = counts[t - part].clone();
                next[t] += carry;
            }
        }
        counts = next;
    }
    Ok(counts[j].clone())
}

/// The Mahonian numbers `I_n(0), ..., I_n(n(n-1)/2)`: counts of permutations
/// of `n` symbols by inversion number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionTable {
    n: u32,
    counts: Vec<BigUint>,
}

impl InversionTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn max_inversions(&self) -> u32 {
        self.counts.len() as u32 - 1
    }

    /// `sum_{i <= s} I_n(i)`, saturating at `n!` beyond the last inversion
    /// count.
    pub fn prefix_sum(&self, s: u32) -> BigUint {
        self.counts
            .iter()
            .take(s as usize + 1)
            .fold(BigUint::zero(), |acc, c| acc + c)
    }

    pub fn total(&self) -> BigUint {
        self.prefix_sum(self.max_inversions())
    }
}

/// Coefficients of `prod_{k=1}^{n} (1 + z + ... + z^{k-1})` by iterated
/// polynomial multiplication.
pub fn inversion_numbers(n: u32) -> InversionTable {
    let mut counts = vec![BigUint::one()];
    for k in 2..=n as usize {
        let mut next = vec![BigUint::zero(); counts.len() + k - 1];
        for (i, c) in counts.iter().enumerate() {
            for offset in 0..k {
                next[i + offset] += c;
            }
        }
        counts = next;
    }
    InversionTable { n, counts }
}

/// For an s-distance set among the permutations of `n` distinct reals:
/// `sum_{i=0}^{s} I_n(i)`.
pub fn permutation_bound(n: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(n >= 1, "permutation bound needs n >= 1")?;
    Ok(inversion_numbers(n).prefix_sum(s))
}

/// For an s-distance set among the 0/1 vectors of weight `d` in `R^n`:
/// `C(n, s)`, valid only in the window `0 <= s <= min(d, n-d)`.
pub fn uniform_bound(n: u32, d: u32, s: u32) -> Result<BigUint, BoundsError> {
    require(d <= n, "uniform bound needs 0 <= d <= n")?;
    require(
        s <= d.min(n - d),
        format!(
            "uniform bound needs s <= min(d, n-d) = {}, got s={s}",
            d.min(n - d)
        ),
    )?;
    Ok(binomial(n as u64, s as u64))
}

/// Theorem bound for an s-distance set on the zero set of an arbitrary
/// ideal: the affine Hilbert function of the quotient at `s`. Specializes to
/// every closed form above when fed the corresponding ideal.
pub fn general_bound(arity: usize, generators: &[Polynomial], s: u32) -> BigUint {
    hilbert_function(arity, generators, s)
}

/// The bound families exposed by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFamily {
    Bbs,
    Dgs,
    Hypersurface,
    SphereUnion,
    Box,
    Permutation,
    Uniform,
    GeneralIdeal,
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BoundFamily::Bbs => "bbs",
            BoundFamily::Dgs => "dgs",
            BoundFamily::Hypersurface => "hypersurface",
            BoundFamily::SphereUnion => "spheres",
            BoundFamily::Box => "box",
            BoundFamily::Permutation => "perm",
            BoundFamily::Uniform => "uniform",
            BoundFamily::GeneralIdeal => "general",
        };
        write!(f, "{name}")
    }
}

/// A bound family with its parameters fixed, ready to evaluate at any `s`.
#[derive(Clone, Debug)]
pub enum BoundSpec {
    Bbs { n: u32 },
    Dgs { n: u32 },
    Hypersurface { n: u32, d: u32 },
    SphereUnion { n: u32, p: u32 },
    Box { n: u32, q: u32 },
    Permutation { n: u32 },
    Uniform { n: u32, d: u32 },
    GeneralIdeal { arity: usize, generators: Vec<Polynomial> },
}

/// One evaluated bound: the family, the parameters it was evaluated at, the
/// value, and the instantiated formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub family: BoundFamily,
    pub parameters: BTreeMap<String, u64>,
    pub value: BigUint,
    pub formula_text: String,
}

impl BoundSpec {
    pub fn family(&self) -> BoundFamily {
        match self {
            BoundSpec::Bbs { .. } => BoundFamily::Bbs,
            BoundSpec::Dgs { .. } => BoundFamily::Dgs,
            BoundSpec::Hypersurface { .. } => BoundFamily::Hypersurface,
            BoundSpec::SphereUnion { .. } => BoundFamily::SphereUnion,
            BoundSpec::Box { .. } => BoundFamily::Box,
            BoundSpec::Permutation { .. } => BoundFamily::Permutation,
            BoundSpec::Uniform { .. } => BoundFamily::Uniform,
            BoundSpec::GeneralIdeal { .. } => BoundFamily::GeneralIdeal,
        }
    }

    /// The ambient dimension the point set must live in, when the family
    /// pins one down.
    pub fn ambient_arity(&self) -> Option<usize> {
        match self {
            BoundSpec::Bbs { n }
            | BoundSpec::Dgs { n }
            | BoundSpec::Hypersurface { n, .. }
            | BoundSpec::SphereUnion { n, .. }
            | BoundSpec::Box { n, .. }
            | BoundSpec::Permutation { n }
            | BoundSpec::Uniform { n, .. } => Some(*n as usize),
            BoundSpec::GeneralIdeal { arity, .. } => Some(*arity),
        }
    }

    pub fn evaluate(&self, s: u32) -> Result<BoundReport, BoundsError> {
        let mut parameters: BTreeMap<String, u64> = BTreeMap::new();
        parameters.insert("s".into(), s as u64);
        let (value, formula_text) = match self {
            BoundSpec::Bbs { n } => {
                parameters.insert("n".into(), *n as u64);
                let value = bbs_bound(*n, s)?;
                (value.clone(), format!("C({}+{s}, {s}) = {value}", n))
            }
            BoundSpec::Dgs { n } => {
                parameters.insert("n".into(), *n as u64);
                let value = dgs_bound(*n, s)?;
                (
                    value.clone(),
                    format!(
                        "C({}, {s}) + C({}, {}) = {value}",
                        n + s - 1,
                        n + s - 2,
                        s - 1
                    ),
                )
            }
            BoundSpec::Hypersurface { n, d } => {
                parameters.insert("n".into(), *n as u64);
                parameters.insert("d".into(), *d as u64);
                let value = hypersurface_bound(*n, *d, s)?;
                let text = if s >= *d {
                    format!("C({}, {n}) - C({}, {n}) = {value}", n + s, n + s - d)
                } else {
                    format!("C({}, {n}) = {value} (s < d)", n + s)
                };
                (value, text)
            }
            BoundSpec::SphereUnion { n, p } => {
                parameters.insert("n".into(), *n as u64);
                parameters.insert("p".into(), *p as u64);
                let value = sphere_union_bound(*n, *p, s)?;
                let text = if s >= 2 * p {
                    format!(
                        "sum_(i=0..{}) C({n}+{s}-i-1, {s}-i) = {value}",
                        2 * p - 1
                    )
                } else {
                    format!("C({}+{s}, {s}) = {value} (s < 2p)", n)
                };
                (value, text)
            }
            BoundSpec::Box { n, q } => {
                parameters.insert("n".into(), *n as u64);
                parameters.insert("q".into(), *q as u64);
                let value = box_bound(*n, *q, s)?;
                (
                    value.clone(),
                    format!(
                        "#{{monomials in {n} vars, exponents < {q}, degree <= {s}}} = {value}"
                    ),
                )
            }
            BoundSpec::Permutation { n } => {
                parameters.insert("n".into(), *n as u64);
                let value = permutation_bound(*n, s)?;
                (
                    value.clone(),
                    format!("sum_(i=0..{s}) I_{n}(i) = {value}"),
                )
            }
            BoundSpec::Uniform { n, d } => {
                parameters.insert("n".into(), *n as u64);
                parameters.insert("d".into(), *d as u64);
                let value = uniform_bound(*n, *d, s)?;
                (value.clone(), format!("C({n}, {s}) = {value}"))
            }
            BoundSpec::GeneralIdeal { arity, generators } => {
                parameters.insert("n".into(), *arity as u64);
                parameters.insert("generators".into(), generators.len() as u64);
                let value = general_bound(*arity, generators, s);
                (
                    value.clone(),
                    format!("h(S/I, {s}) = {value} with {} generators", generators.len()),
                )
            }
        };
        Ok(BoundReport {
            family: self.family(),
            parameters,
            value,
            formula_text,
        })
    }
}
