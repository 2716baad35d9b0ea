//! The real cyclotomic fields Q(2cos(π/m)).

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{minimal_polynomial, ArithError, Field, Rational, Ring};

/// The field Q(c) with c = 2cos(π/m), given by the minimal polynomial of c.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldCtx {
    m: u32,
    /// Monic minimal polynomial, constant term first.
    minpoly: Vec<Rational>,
}

impl FieldCtx {
    /// Returns the shared context for Q(2cos(π/m)), building it on first use.
    pub fn get(m: u32) -> Result<Arc<FieldCtx>, ArithError> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldCtx>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(c) = cache.lock().expect("field cache poisoned").get(&m) {
            return Ok(c.clone());
        }
        let p = minimal_polynomial(m)?;
        let minpoly = p.coeffs().iter().map(|c| Rational::from_bigint(c.clone())).collect();
        let ctx = Arc::new(FieldCtx { m, minpoly });
        cache.lock().expect("field cache poisoned").insert(m, ctx.clone());
        Ok(ctx)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    /// The generator 2cos(π/m).
    pub fn gen(self: &Arc<Self>) -> NumberFieldElem {
        NumberFieldElem::from_coeffs(self, vec![Rational::zero(), Rational::one()])
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> NumberFieldElem {
        NumberFieldElem::from_coeffs(self, vec![q])
    }

    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        while c.len() > d {
            let top = c.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let base = c.len() - d;
            for (j, p) in self.minpoly[..d].iter().enumerate() {
                c[base + j] = c[base + j].sub(&top.mul(p));
            }
        }
        trim(&mut c);
        c
    }
}

fn trim(c: &mut Vec<Rational>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

/// An element of Q(2cos(π/m)) as a polynomial in the generator of degree
/// below the field degree.
///
/// Rational constants may omit the context; it is attached as soon as they
/// meet an element that carries one. Combining elements of two different
/// fields is a contract violation and panics.
#[derive(Clone)]
pub struct NumberFieldElem {
    ctx: Option<Arc<FieldCtx>>,
    coeffs: Vec<Rational>,
}

impl NumberFieldElem {
    pub fn from_coeffs(ctx: &Arc<FieldCtx>, coeffs: Vec<Rational>) -> Self {
        NumberFieldElem { ctx: Some(ctx.clone()), coeffs: ctx.reduce(coeffs) }
    }

    pub fn ctx(&self) -> Option<&Arc<FieldCtx>> {
        self.ctx.as_ref()
    }

    /// Coefficients padded to the field degree (length 1 without a context).
    pub fn coeffs(&self) -> Vec<Rational> {
        let n = self.ctx.as_ref().map_or(1, |c| c.degree());
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), Rational::zero());
        v
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Attaches a context to a context-free constant.
    pub fn in_ctx(mut self, ctx: &Arc<FieldCtx>) -> Self {
        self.ctx = Some(self.merged_ctx_with(ctx));
        self
    }

    fn merged_ctx_with(&self, ctx: &Arc<FieldCtx>) -> Arc<FieldCtx> {
        match &self.ctx {
            Some(c) if c.m != ctx.m => panic!("{}", ArithError::FieldMismatch(c.m, ctx.m)),
            _ => ctx.clone(),
        }
    }

    fn merged(&self, o: &Self) -> Option<Arc<FieldCtx>> {
        match (&self.ctx, &o.ctx) {
            (Some(a), Some(b)) => {
                if a.m != b.m {
                    panic!("{}", ArithError::FieldMismatch(a.m, b.m));
                }
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, b) => b.clone(),
        }
    }

    /// Numerical value, for diagnostics and ordering of eigenvalues.
    pub fn to_f64(&self) -> f64 {
        let x = self.ctx.as_ref().map_or(0.0, |c| 2.0 * (std::f64::consts::PI / c.m as f64).cos());
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    /// Every rational coefficient, for denominator audits.
    pub fn rational_parts(&self) -> &[Rational] {
        &self.coeffs
    }

    fn from_parts(ctx: Option<Arc<FieldCtx>>, mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        NumberFieldElem { ctx, coeffs }
    }
}

impl Ring for NumberFieldElem {
    fn zero() -> Self {
        NumberFieldElem { ctx: None, coeffs: Vec::new() }
    }

    fn one() -> Self {
        NumberFieldElem { ctx: None, coeffs: vec![Rational::one()] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z).add(o.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::from_parts(self.merged(o), c)
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        let ctx = self.merged(o);
        if self.is_zero() || o.is_zero() {
            return NumberFieldElem { ctx, coeffs: Vec::new() };
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        match &ctx {
            Some(k) => NumberFieldElem { coeffs: k.reduce(c), ctx },
            None => Self::from_parts(None, c),
        }
    }

    fn neg(&self) -> Self {
        NumberFieldElem { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    fn from_rational(q: &Rational) -> Self {
        Self::from_parts(None, vec![q.clone()])
    }
}

impl Field for NumberFieldElem {
    fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(NumberFieldElem { ctx: self.ctx.clone(), coeffs: vec![q.inv()?] });
        }
        let ctx = self.ctx.clone().expect("non-rational element carries a context");
        let s = poly_inverse_mod(&self.coeffs, &ctx.minpoly)?;
        Ok(NumberFieldElem::from_coeffs(&ctx, s))
    }
}

// Polynomial helpers over Q used by the inverse.

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mul(&lead_inv);
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&c.mul(bc));
        }
        q[k] = c;
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = c[i + j].add(&x.mul(y));
        }
    }
    trim(&mut c);
    c
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let z = Rational::zero();
    let mut c: Vec<Rational> =
        (0..a.len().max(b.len())).map(|i| a.get(i).unwrap_or(&z).sub(b.get(i).unwrap_or(&z))).collect();
    trim(&mut c);
    c
}

/// s with s·a ≡ 1 modulo the irreducible p (extended Euclid).
fn poly_inverse_mod(a: &[Rational], p: &[Rational]) -> Result<Vec<Rational>, ArithError> {
    let (mut r0, mut r1) = (p.to_vec(), a.to_vec());
    let (mut s0, mut s1) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return Err(ArithError::DivisionByZero);
    }
    let c = r0[0].inv()?;
    Ok(s0.iter().map(|x| x.mul(&c)).collect())
}

/// 2cos(aπ/m) in the field, via C_0 = 2, C_1 = c, C_{k+1} = c·C_k − C_{k−1}.
pub fn two_cos(ctx: &Arc<FieldCtx>, a: u32) -> NumberFieldElem {
    let c = ctx.gen();
    let (mut prev, mut cur) = (ctx.from_rational(Rational::from_int(2)), c.clone());
    if a == 0 {
        return prev;
    }
    for _ in 1..a {
        let next = c.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// σ_a = 4cos²(aπ/m) for 1 ≤ a ≤ ⌊m/2⌋.
pub fn sigma(a: u32, m: u32) -> Result<NumberFieldElem, ArithError> {
    if m < 3 || a == 0 || a > m / 2 {
        return Err(ArithError::Invalid(format!("sigma needs 1 <= a <= m/2 and m >= 3, got a = {a}, m = {m}")));
    }
    let ctx = FieldCtx::get(m)?;
    let c = two_cos(&ctx, a);
    Ok(c.mul(&c))
}

impl PartialEq for NumberFieldElem {
    fn eq(&self, o: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.ctx, &o.ctx) {
            if a.m != b.m && !(self.coeffs.len() <= 1 && o.coeffs.len() <= 1) {
                return false;
            }
        }
        self.coeffs == o.coeffs
    }
}

impl Eq for NumberFieldElem {}

impl Hash for NumberFieldElem {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.coeffs.hash(h);
    }
}

impl fmt::Display for NumberFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*c")?,
                _ => write!(f, "({c})*c^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NumberFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    m: u32,
    coeffs: Vec<Rational>,
}

impl Serialize for NumberFieldElem {
    /// Context-free constants are written as elements of Q = Q(2cos(π/3)).
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { m: self.ctx.as_ref().map_or(3, |c| c.m), coeffs: self.coeffs() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumberFieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let ctx = FieldCtx::get(w.m).map_err(D::Error::custom)?;
        if w.coeffs.len() != ctx.degree() {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for m = {}, got {}",
                ctx.degree(),
                w.m,
                w.coeffs.len()
            )));
        }
        Ok(NumberFieldElem::from_coeffs(&ctx, w.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn golden_ratio_inverse() {
        let k = FieldCtx::get(5).unwrap();
        let c = k.gen();
        assert_eq!(c.inv().unwrap(), c.sub(&NumberFieldElem::one()));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1, 3).unwrap().as_rational(), Some(q(1)));
        assert!(sigma(2, 4).unwrap().is_zero());
        let k = FieldCtx::get(5).unwrap();
        // 4cos²(π/5) = (3+√5)/2 = 1 + φ with φ = 2cos(π/5).
        assert_eq!(sigma(1, 5).unwrap(), k.gen().add(&NumberFieldElem::from_int(1)));
        assert!(sigma(3, 5).is_err());
    }

    #[test]
    fn sigma_numeric() {
        for m in 3..=12u32 {
            for a in 1..=m / 2 {
                let want = 4.0 * (a as f64 * std::f64::consts::PI / m as f64).cos().powi(2);
                assert!((sigma(a, m).unwrap().to_f64() - want).abs() < 1e-9, "a = {a}, m = {m}");
            }
        }
    }

    #[test]
    fn sigma_differences_are_units() {
        for m in 3..=16u32 {
            for a in 1..=m / 2 {
                for b in a + 1..=m / 2 {
                    let d = sigma(a, m).unwrap().sub(&sigma(b, m).unwrap());
                    let inv = d.inv().unwrap();
                    assert_eq!(d.mul(&inv), NumberFieldElem::one());
                }
            }
        }
    }

    #[test]
    fn cosine_products() {
        for m in 3..=14u32 {
            let k = FieldCtx::get(m).unwrap();
            let mut p = NumberFieldElem::one();
            for a in 1..m {
                if 2 * a >= m {
                    break;
                }
                let c = two_cos(&k, a);
                p = p.mul(&c.mul(&c));
            }
            let want = if m % 2 == 1 { q(1) } else { Rational::new(m as i64, 2) };
            assert_eq!(p.as_rational(), Some(want), "m = {m}");
            // ∏ 4sin²(aπ/m) = ∏ (4 − 4cos²(aπ/m)) = m².
            let mut s = NumberFieldElem::one();
            for a in 1..m {
                let c = two_cos(&k, a);
                s = s.mul(&NumberFieldElem::from_int(4).sub(&c.mul(&c)));
            }
            assert_eq!(s.as_rational(), Some(q((m * m) as i64)), "m = {m}");
        }
    }

    #[test]
    fn json_shape() {
        let k = FieldCtx::get(5).unwrap();
        let x = k.gen().add(&NumberFieldElem::from_rational(&Rational::new(1, 2)));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"m":5,"coeffs":["1/2","1"]}"#);
        let back: NumberFieldElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<NumberFieldElem>(r#"{"m":5,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let a = FieldCtx::get(5).unwrap().gen();
        let b = FieldCtx::get(7).unwrap().gen();
        let _ = a.add(&b);
    }

    fn elem(m: u32) -> impl Strategy<Value = NumberFieldElem> {
        let d = FieldCtx::get(m).unwrap().degree();
        proptest::collection::vec((-20i64..20, 1i64..6), d).prop_map(move |v| {
            let k = FieldCtx::get(m).unwrap();
            NumberFieldElem::from_coeffs(&k, v.into_iter().map(|(a, b)| Rational::new(a, b)).collect())
        })
    }

    proptest! {
        #[test]
        fn field_axioms_m7(x in elem(7), y in elem(7), z in elem(7)) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv().unwrap()), NumberFieldElem::one());
            }
        }

        #[test]
        fn field_axioms_m8(x in elem(8), y in elem(8)) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            if !y.is_zero() {
                prop_assert_eq!(x.div(&y).unwrap().mul(&y), x.clone());
            }
        }
    }
}
