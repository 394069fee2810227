//! Sparse Laurent polynomials in one indeterminate v over arbitrary-precision
//! integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer polynomial in v. Zero coefficients are never stored.
///
/// Exponents are signed so intermediate operator applications may pass
/// through negative powers; vectors built from the vacuum by the operator
/// words we care about end up in ℕ[v].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VPolynomial {
    terms: BTreeMap<i32, BigInt>,
}

impl VPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(e: i32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// From coefficients of v^0, v^1, ….
    pub fn from_coeffs(cs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (e, &c) in cs.iter().enumerate() {
            p.add_term(e as i32, BigInt::from(c));
        }
        p
    }

    /// [a]_v = 1 + v + … + v^{a−1}.
    pub fn gaussian(a: u32) -> Self {
        Self::from_coeffs(&vec![1; a as usize])
    }

    /// [a]_v! = [1]_v [2]_v ⋯ [a]_v.
    pub fn gaussian_factorial(a: u32) -> Self {
        (1..=a).fold(Self::one(), |acc, k| &acc * &Self::gaussian(k))
    }

    /// Π_{k≤a} (v^{1−k} + v^{3−k} + … + v^{k−1}).
    pub fn balanced_factorial(a: u32) -> Self {
        (1..=a as i32).fold(Self::one(), |acc, k| {
            let mut q = Self::zero();
            for j in 0..k {
                q.add_term(2 * j - (k - 1), BigInt::one());
            }
            &acc * &q
        })
    }

    pub fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, k: i32) -> Self {
        VPolynomial { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Lies in ℕ[v].
    pub fn is_natural(&self) -> bool {
        self.terms.iter().all(|(&e, c)| e >= 0 && c.is_positive())
    }

    /// Lies in vℕ[v].
    pub fn is_in_v_natural(&self) -> bool {
        self.terms.iter().all(|(&e, c)| e >= 1 && c.is_positive())
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &VPolynomial) -> Option<VPolynomial> {
        let (d_lo, d_lead) = d.terms.iter().next()?;
        let mut rem = self.clone();
        let mut q = VPolynomial::zero();
        let span = d.max_degree()? - d_lo;
        while let Some((&e, c)) = rem.terms.iter().next() {
            if rem.max_degree()? - e < span {
                return None;
            }
            if !(c % d_lead).is_zero() {
                return None;
            }
            let f = c / d_lead;
            let step = VPolynomial::monomial(e - d_lo, f);
            rem = &rem - &(&step * d);
            q = &q + &step;
        }
        Some(q)
    }
}

impl From<i64> for VPolynomial {
    fn from(c: i64) -> Self {
        VPolynomial::monomial(0, c)
    }
}

impl<'a> Add<&'a VPolynomial> for &'a VPolynomial {
    type Output = VPolynomial;
    fn add(self, o: &VPolynomial) -> VPolynomial {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl AddAssign<&VPolynomial> for VPolynomial {
    fn add_assign(&mut self, o: &VPolynomial) {
        for (&e, c) in &o.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &VPolynomial {
    type Output = VPolynomial;
    fn neg(self) -> VPolynomial {
        VPolynomial { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl<'a> Sub<&'a VPolynomial> for &'a VPolynomial {
    type Output = VPolynomial;
    fn sub(self, o: &VPolynomial) -> VPolynomial {
        self + &(-o)
    }
}

impl<'a> Mul<&'a VPolynomial> for &'a VPolynomial {
    type Output = VPolynomial;
    fn mul(self, o: &VPolynomial) -> VPolynomial {
        let mut r = VPolynomial::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                r.add_term(a + b, x * y);
            }
        }
        r
    }
}

impl fmt::Display for VPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{mag}v")?,
                _ if unit => write!(f, "v^{e}")?,
                _ => write!(f, "{mag}v^{e}")?,
            }
        }
        Ok(())
    }
}

// JSON: {"exponent": coefficient, ...}
impl Serialize for VPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let v = match i64::try_from(c) {
                    Ok(x) => serde_json::Value::from(x),
                    Err(_) => serde_json::Value::from(c.to_string()),
                };
                (e.to_string(), v)
            })
            .collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let m: BTreeMap<String, serde_json::Value> = BTreeMap::deserialize(d)?;
        let mut p = VPolynomial::zero();
        for (k, v) in m {
            let e: i32 = k.parse().map_err(D::Error::custom)?;
            let c: BigInt = match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient must be an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer")),
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = VPolynomial::from_coeffs(&[1, 1]);
        let b = &a * &a;
        assert_eq!(b, VPolynomial::from_coeffs(&[1, 2, 1]));
        assert_eq!(b.div_exact(&a), Some(a.clone()));
        assert_eq!(VPolynomial::from_coeffs(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(b.eval_at_one(), BigInt::from(4));
        assert!((&b - &b).is_zero());
    }

    #[test]
    fn factorial() {
        assert_eq!(VPolynomial::gaussian_factorial(1), VPolynomial::one());
        assert_eq!(VPolynomial::gaussian_factorial(2), VPolynomial::from_coeffs(&[1, 1]));
        assert_eq!(VPolynomial::gaussian_factorial(3), VPolynomial::from_coeffs(&[1, 2, 2, 1]));
    }

    #[test]
    fn display_and_json() {
        let p = VPolynomial::from_coeffs(&[0, 0, 2, 0, 1]);
        assert_eq!(p.to_string(), "v^4 + 2v^2");
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"2":2,"4":1}"#);
        let back: VPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(p.is_in_v_natural());
        assert!(!VPolynomial::one().is_in_v_natural());
    }
}
