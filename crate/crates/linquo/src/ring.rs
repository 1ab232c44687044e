//! The ambient polynomial ring context: variable names and field choice.

use serde::{Deserialize, Serialize};

use crate::error::FieldError;
use crate::field::{validate_modulus, DEFAULT_PRIME};
use crate::monomial::{dim_of_degree, monomials_of_degree, Monomial};

/// Which coefficient field a session runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldConfig {
    Rational,
    Prime(u64),
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig::Rational
    }
}

impl FieldConfig {
    /// Parses `rational` / `q` or `fp:<p>` / `fp` (default modulus 32003).
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "rational" | "q" | "qq" => Ok(FieldConfig::Rational),
            "fp" | "prime" => Ok(FieldConfig::Prime(DEFAULT_PRIME)),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .or_else(|| s.strip_prefix("fp"))
                    .or_else(|| s.strip_prefix("prime:"))
                    .ok_or(FieldError::BadModulus(0))?;
                let p: u64 = p.parse().map_err(|_| FieldError::BadModulus(0))?;
                Ok(FieldConfig::Prime(validate_modulus(p)?))
            }
        }
    }
}

/// Variable names of the ambient ring `K[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.is_empty(), "a ring needs at least one variable");
        Ring { vars }
    }

    /// `x1, ..., xn`.
    pub fn with_indexed_vars(n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>())
    }

    /// Single letters `x, y, z, w, v, u, t, s` for small n.
    pub fn with_letter_vars(n: usize) -> Self {
        const LETTERS: [&str; 8] = ["x", "y", "z", "w", "v", "u", "t", "s"];
        if n <= LETTERS.len() {
            Ring::new(LETTERS[..n].to_vec())
        } else {
            Ring::with_indexed_vars(n)
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn monomials_of_degree(&self, degree: i64) -> Vec<Monomial> {
        monomials_of_degree(self.nvars(), degree)
    }

    pub fn dim_of_degree(&self, degree: i64) -> usize {
        dim_of_degree(self.nvars(), degree)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.vars[i].clone()
                } else {
                    format!("{}^{}", self.vars[i], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_config_parsing() {
        assert_eq!(FieldConfig::parse("rational").unwrap(), FieldConfig::Rational);
        assert_eq!(FieldConfig::parse("fp").unwrap(), FieldConfig::Prime(32003));
        assert_eq!(FieldConfig::parse("fp:7").unwrap(), FieldConfig::Prime(7));
        assert!(FieldConfig::parse("fp:6").is_err());
        assert!(FieldConfig::parse("float").is_err());
    }

    #[test]
    fn monomial_formatting() {
        let ring = Ring::with_letter_vars(3);
        assert_eq!(ring.format_monomial(&Monomial::new(vec![2, 0, 1])), "x^2*z");
        assert_eq!(ring.format_monomial(&Monomial::one(3)), "1");
        assert_eq!(ring.var_index("z"), Some(2));
    }
}
