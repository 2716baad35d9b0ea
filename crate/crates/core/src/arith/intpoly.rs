//! Integer polynomials in one variable, the τ family and minimal polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::ArithError;

/// Integer polynomial, coefficients stored from the constant term upwards.
/// The leading stored coefficient is nonzero (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.to_i64().expect("coefficient exceeds i64")).collect()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `-T` for `T`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Division with remainder by a monic divisor, exact over the integers.
    pub fn div_rem_monic(&self, d: &Self) -> Result<(Self, Self), ArithError> {
        if !d.is_monic() {
            return Err(ArithError::Invalid("divisor must be monic".into()));
        }
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Renders with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !a.is_one() {
                s.push_str(&a.to_string());
            }
            s.push_str(&mono);
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.render("T"))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// τ_{-1} = 0, τ_0 = 1, τ_r = T·τ_{r-1} − τ_{r-2}.
pub fn tau_poly(r: i64) -> IntPoly {
    assert!(r >= -1, "tau_poly needs r >= -1");
    let (mut prev, mut cur) = (IntPoly::zero(), IntPoly::one());
    if r == -1 {
        return prev;
    }
    for _ in 0..r {
        let next = IntPoly::x().mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// τ̃_n with τ_n(X) = τ̃_n(X²) for even n and τ_n(X) = X·τ̃_n(X²) for odd n.
pub fn tau_tilde(n: u32) -> IntPoly {
    let t = tau_poly(n as i64);
    let start = (n % 2) as usize;
    IntPoly::new(t.coeffs.iter().skip(start).step_by(2).cloned().collect())
}

/// Cyclotomic polynomial Φ_n by exact division of z^n − 1.
fn cyclotomic(n: u32) -> IntPoly {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    let mut p = IntPoly::new(p);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = p.div_rem_monic(&cyclotomic(d)).expect("cyclotomic polynomials are monic");
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Minimal polynomial of 2cos(π/m) over Q.
///
/// Obtained from Φ_{2m}(z) = z^k·ψ(z + 1/z), k = φ(2m)/2, then certified by
/// exact division of τ_{m−1} and a numerical root check.
pub fn minimal_polynomial(m: u32) -> Result<IntPoly, ArithError> {
    if m < 3 {
        return Err(ArithError::Invalid(format!("minimal polynomial needs m >= 3, got {m}")));
    }
    let phi = cyclotomic(2 * m);
    let k = phi.degree().expect("nonzero") / 2;
    // Peel off c_j·z^{k−j}(z²+1)^j from the palindromic Φ, top degree first.
    let mut rest = phi;
    let mut psi = vec![BigInt::zero(); k + 1];
    let zsq1 = IntPoly::from_i64(&[1, 0, 1]);
    for j in (0..=k).rev() {
        let c = rest.coeff(k + j);
        if c.is_zero() {
            continue;
        }
        let mut term = IntPoly::one();
        for _ in 0..j {
            term = term.mul(&zsq1);
        }
        let mut shifted = vec![BigInt::zero(); k - j];
        shifted.extend(term.coeffs.iter().map(|a| a * &c));
        rest = rest.sub(&IntPoly::new(shifted));
        psi[j] = c;
    }
    if !rest.is_zero() {
        return Err(ArithError::Invalid(format!("cyclotomic polynomial of order {} is not palindromic", 2 * m)));
    }
    let psi = IntPoly::new(psi);
    let (_, r) = tau_poly(m as i64 - 1).div_rem_monic(&psi)?;
    let root = 2.0 * (std::f64::consts::PI / m as f64).cos();
    if !r.is_zero() || psi.eval_f64(root).abs() > 1e-6 * (1u64 << k.min(60)) as f64 {
        return Err(ArithError::Invalid(format!("minimal polynomial certification failed for m = {m}")));
    }
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn totient(n: u32) -> u32 {
        use num_integer::Integer;
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_poly(-1), IntPoly::zero());
        assert_eq!(tau_poly(0), IntPoly::one());
        assert_eq!(tau_poly(3), IntPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(tau_poly(4), IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(tau_poly(3).to_string(), "T^3 - 2T");
    }

    #[test]
    fn tau_tilde_examples() {
        assert_eq!(tau_tilde(0), IntPoly::one());
        assert_eq!(tau_tilde(3), IntPoly::from_i64(&[-2, 1]));
        assert_eq!(tau_tilde(4), IntPoly::from_i64(&[1, -3, 1]));
        for n in 0..12u32 {
            assert_eq!(tau_tilde(n).degree(), Some((n / 2) as usize));
        }
    }

    #[test]
    fn tau_parity_and_degree() {
        for r in 0..=20i64 {
            let t = tau_poly(r);
            assert_eq!(t.degree(), Some(r as usize));
            assert!(t.is_monic());
            let sign = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert_eq!(t.reflect(), t.scale(&sign));
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(minimal_polynomial(3).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(minimal_polynomial(4).unwrap(), IntPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(minimal_polynomial(5).unwrap(), IntPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(minimal_polynomial(6).unwrap(), IntPoly::from_i64(&[-3, 0, 1]));
        assert!(minimal_polynomial(2).is_err());
    }

    #[test]
    fn minimal_polynomial_degree_and_divisibility() {
        for m in 3..=30u32 {
            let p = minimal_polynomial(m).unwrap();
            assert_eq!(p.degree(), Some((totient(2 * m) / 2) as usize), "m = {m}");
            let (_, r) = tau_poly(m as i64 - 1).div_rem_monic(&p).unwrap();
            assert!(r.is_zero());
        }
    }
}
