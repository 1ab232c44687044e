//! Monomials as exponent vectors, with the lexicographic order `x1 > x2 > ...`
//! used for every basis enumeration in the crate.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// A monomial in a fixed number of variables.
///
/// The degree is cached and kept equal to the exponent sum at all times.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    /// The constant monomial 1.
    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn variable(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_variable(&self) -> Option<usize> {
        if self.degree == 1 {
            self.exponents.iter().position(|&e| e == 1)
        } else {
            None
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `self / other`. Panics unless `other` divides `self`: asking for a
    /// non-divisor quotient is a contract violation.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        assert!(
            other.divides(self),
            "monomial quotient of a non-divisor: {:?} / {:?}",
            self.exponents,
            other.exponents
        );
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn gcd(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

// Lexicographic order with x1 > x2 > ... > xn: compare exponent vectors
// componentwise. Within one degree, the enumeration order below lists
// monomials in descending lex order (x^2, xy, y^2, ...).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exponents.hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exponents)
    }
}

/// All monomials of total degree `degree` in `n` variables, in descending
/// lexicographic order. Empty when `degree < 0`.
pub fn monomials_of_degree(n: usize, degree: i64) -> Vec<Monomial> {
    if degree < 0 {
        return Vec::new();
    }
    let degree = degree as u32;
    if n == 0 {
        return if degree == 0 {
            vec![Monomial::new(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::with_capacity(dim_of_degree(n, degree as i64));
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Binomial coefficient as u64; panics on overflow (desk-scale inputs only).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Dimension of the space of degree-`degree` monomials in `n` variables.
pub fn dim_of_degree(n: usize, degree: i64) -> usize {
    if degree < 0 {
        return 0;
    }
    if n == 0 {
        return usize::from(degree == 0);
    }
    binomial(degree as u64 + n as u64 - 1, n as u64 - 1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divides_and_quotient() {
        // x^2 y | x^2 y^3, quotient y^2
        assert!(m(&[2, 1]).divides(&m(&[2, 3])));
        assert_eq!(m(&[2, 3]).quotient(&m(&[2, 1])), m(&[0, 2]));
        // m | m with quotient 1
        assert!(m(&[1, 2]).divides(&m(&[1, 2])));
        assert_eq!(m(&[1, 2]).quotient(&m(&[1, 2])), Monomial::one(2));
        // xz does not divide x^2 y
        assert!(!m(&[1, 0, 1]).divides(&m(&[2, 1, 0])));
    }

    #[test]
    #[should_panic(expected = "non-divisor")]
    fn quotient_of_non_divisor_panics() {
        let _ = m(&[2, 1]).quotient(&m(&[0, 2]));
    }

    #[test]
    fn enumeration_is_descending_lex() {
        let ms = monomials_of_degree(2, 2);
        assert_eq!(ms, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let ms3 = monomials_of_degree(3, 1);
        assert_eq!(ms3, vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
        assert!(m(&[2, 0]) > m(&[1, 1]) && m(&[1, 1]) > m(&[0, 2]));
    }

    #[test]
    fn dimension_counts() {
        assert_eq!(dim_of_degree(3, 2), 6);
        assert_eq!(dim_of_degree(3, -1), 0);
        assert_eq!(dim_of_degree(1, 5), 1);
        assert_eq!(monomials_of_degree(4, 3).len(), dim_of_degree(4, 3));
        assert_eq!(binomial(6, 3), 20);
    }

    #[test]
    fn gcd_lcm_support() {
        assert_eq!(m(&[2, 1, 0]).gcd(&m(&[1, 3, 0])), m(&[1, 1, 0]));
        assert_eq!(m(&[2, 1, 0]).lcm(&m(&[1, 3, 0])), m(&[2, 3, 0]));
        assert_eq!(m(&[0, 2, 1]).support(), vec![1, 2]);
        assert_eq!(m(&[0, 1, 0]).is_variable(), Some(1));
        assert_eq!(m(&[0, 2, 0]).is_variable(), None);
    }
}
