//! Sparse polynomials in `x0, x1` with exact integer coefficients.
//!
//! Terms are kept in a vector sorted by total degree and then by the
//! exponent of `x0`, with no zero coefficients, so structural equality is
//! polynomial equality and the serialized form is canonical. Coefficient
//! arithmetic is checked; overflow is an error, never a wrap.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficient overflow")]
    Overflow,
    #[error("term {0:?} has a negative or oversized exponent")]
    BadExponent([i64; 3]),
    #[error("term {0:?} has a zero coefficient")]
    ZeroCoefficient([i64; 3]),
    #[error("monomial x0^{0} x1^{1} appears twice")]
    DuplicateMonomial(u32, u32),
}

/// `x0^e0 * x1^e1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub e0: u32,
    pub e1: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e0: 0, e1: 0 };

    pub fn new(e0: u32, e1: u32) -> Self {
        Monomial { e0, e1 }
    }

    /// `x_b` for `b` in `{0, 1}`.
    pub fn var(b: u8) -> Self {
        if b == 0 {
            Monomial::new(1, 0)
        } else {
            Monomial::new(0, 1)
        }
    }

    pub fn degree(&self) -> u64 {
        self.e0 as u64 + self.e1 as u64
    }

    pub fn checked_mul(self, other: Monomial) -> Result<Monomial, PolyError> {
        Ok(Monomial {
            e0: self.e0.checked_add(other.e0).ok_or(PolyError::Overflow)?,
            e1: self.e1.checked_add(other.e1).ok_or(PolyError::Overflow)?,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.e0).cmp(&(other.degree(), other.e0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: Vec<(Monomial, i64)>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(k: i64) -> Self {
        BiPoly::term(Monomial::ONE, k)
    }

    pub fn term(m: Monomial, k: i64) -> Self {
        if k == 0 {
            BiPoly::zero()
        } else {
            BiPoly {
                terms: vec![(m, k)],
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> &[(Monomial, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn coefficient(&self, m: Monomial) -> i64 {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(&m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    fn merge(&self, other: &BiPoly, sign: i64) -> Result<BiPoly, PolyError> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, k) = other.terms[j];
                    out.push((m, k.checked_mul(sign).ok_or(PolyError::Overflow)?));
                    j += 1;
                }
                Ordering::Equal => {
                    let rhs = other.terms[j]
                        .1
                        .checked_mul(sign)
                        .ok_or(PolyError::Overflow)?;
                    let k = self.terms[i]
                        .1
                        .checked_add(rhs)
                        .ok_or(PolyError::Overflow)?;
                    if k != 0 {
                        out.push((self.terms[i].0, k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(BiPoly { terms: out })
    }

    pub fn checked_add(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.merge(other, 1)
    }

    pub fn checked_sub(&self, other: &BiPoly) -> Result<BiPoly, PolyError> {
        self.merge(other, -1)
    }

    /// `k * m * self`.
    pub fn mul_monomial(&self, m: Monomial, k: i64) -> Result<BiPoly, PolyError> {
        if k == 0 {
            return Ok(BiPoly::zero());
        }
        // Shifting by a monomial preserves the term order.
        let terms = self
            .terms
            .iter()
            .map(|&(t, c)| {
                Ok((
                    t.checked_mul(m)?,
                    c.checked_mul(k).ok_or(PolyError::Overflow)?,
                ))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(BiPoly { terms })
    }

    /// Value at `x0 = exp(i theta0)`, `x1 = exp(i theta1)`.
    ///
    /// Each monomial is evaluated as a single rotation `exp(i (e0 theta0 +
    /// e1 theta1))`, so the error does not compound with the degree.
    pub fn eval(&self, theta0: f64, theta1: f64) -> Complex64 {
        self.terms
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &(m, k)| {
                let angle = m.e0 as f64 * theta0 + m.e1 as f64 * theta1;
                acc + Complex64::from_polar(k as f64, angle)
            })
    }

    /// `[e0, e1, coeff]` triples in canonical order.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.terms
            .iter()
            .map(|&(m, k)| [m.e0 as i64, m.e1 as i64, k])
            .collect()
    }

    /// Accepts triples in any order; rejects zero coefficients, repeated
    /// monomials and exponents outside `u32`.
    pub fn from_triples(triples: &[[i64; 3]]) -> Result<BiPoly, PolyError> {
        let mut terms = Vec::with_capacity(triples.len());
        for &t in triples {
            let [e0, e1, k] = t;
            let (Ok(e0), Ok(e1)) = (u32::try_from(e0), u32::try_from(e1)) else {
                return Err(PolyError::BadExponent(t));
            };
            if k == 0 {
                return Err(PolyError::ZeroCoefficient(t));
            }
            terms.push((Monomial::new(e0, e1), k));
        }
        terms.sort_by_key(|t| t.0);
        if let Some(w) = terms.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(PolyError::DuplicateMonomial(w[0].0.e0, w[0].0.e1));
        }
        Ok(BiPoly { terms })
    }
}

pub fn poly_add(p: &BiPoly, q: &BiPoly) -> Result<BiPoly, PolyError> {
    p.checked_add(q)
}

pub fn poly_mul_monomial(p: &BiPoly, m: Monomial, k: i64) -> Result<BiPoly, PolyError> {
    p.mul_monomial(m, k)
}

pub fn poly_eval(p: &BiPoly, theta0: f64, theta1: f64) -> Complex64 {
    p.eval(theta0, theta1)
}

impl fmt::Display for BiPoly {
    /// Human-readable form, lowest degree first: `1 + 2*x0 + x0*x1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(m, k)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            for (name, e) in [("x0", m.e0), ("x1", m.e1)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            let mag = k.unsigned_abs();
            let body = match (factors.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => factors.join("*"),
                (false, _) => format!("{mag}*{}", factors.join("*")),
            };
            match (i, k < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples = Vec::<[i64; 3]>::deserialize(d)?;
        BiPoly::from_triples(&triples).map_err(serde::de::Error::custom)
    }
}
