use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::CoxeterError;
use crate::arith::{two_cos, FieldCtx, NumberFieldElem, Ring};
use crate::linalg::Matrix;

/// Type tag of a Coxeter system. Parameters live in the tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeTag {
    /// Product of `n` copies of A1.
    A1xN(u32),
    /// Dihedral type with bond `m`.
    I2(u32),
    A3,
    A4,
    B3,
    B4,
    D4,
    F4,
    H3,
    Custom,
}

impl TypeTag {
    /// Short tag string used on the command line and in JSON.
    pub fn tag(&self) -> &'static str {
        match self {
            TypeTag::A1xN(_) => "A1xN",
            TypeTag::I2(_) => "I2",
            TypeTag::A3 => "A3",
            TypeTag::A4 => "A4",
            TypeTag::B3 => "B3",
            TypeTag::B4 => "B4",
            TypeTag::D4 => "D4",
            TypeTag::F4 => "F4",
            TypeTag::H3 => "H3",
            TypeTag::Custom => "custom",
        }
    }

    /// Types for which the decomposition family is constructed and certified.
    pub fn is_certifiable(&self) -> bool {
        matches!(self, TypeTag::A1xN(_) | TypeTag::I2(_) | TypeTag::A3 | TypeTag::A4 | TypeTag::B3)
    }

    /// Parses a tag with optional parameter: `A3`, `I2` + `m`, `I2(5)`,
    /// `A1xN` + `n`, `A1x3`, `A1`.
    pub fn parse(s: &str, param: Option<u32>) -> Result<Self, CoxeterError> {
        let t = s.trim();
        let up = t.to_ascii_uppercase();
        let inner = |pre: &str| -> Option<u32> {
            let rest = up.strip_prefix(pre)?;
            let rest = rest.trim_start_matches('(').trim_end_matches(')');
            if rest.is_empty() {
                None
            } else {
                rest.parse().ok()
            }
        };
        let need = |p: Option<u32>, what: &str| p.ok_or_else(|| CoxeterError::InvalidParam(format!("type {t} needs --{what}")));
        let tag = match up.as_str() {
            "A1" => TypeTag::A1xN(1),
            "A3" => TypeTag::A3,
            "A4" => TypeTag::A4,
            "B3" => TypeTag::B3,
            "B4" => TypeTag::B4,
            "D4" => TypeTag::D4,
            "F4" => TypeTag::F4,
            "H3" => TypeTag::H3,
            "A1XN" => TypeTag::A1xN(need(param, "n")?),
            "I2" => TypeTag::I2(need(param, "m")?),
            _ if up.starts_with("A1X") => TypeTag::A1xN(inner("A1X").ok_or_else(|| CoxeterError::UnknownType(t.into()))?),
            _ if up.starts_with("I2") => TypeTag::I2(inner("I2").ok_or_else(|| CoxeterError::UnknownType(t.into()))?),
            _ => return Err(CoxeterError::UnknownType(t.into())),
        };
        match tag {
            TypeTag::A1xN(n) if !(1..=5).contains(&n) => Err(CoxeterError::InvalidParam(format!("A1xN needs 1 <= n <= 5, got {n}"))),
            TypeTag::I2(m) if m < 3 => Err(CoxeterError::InvalidParam(format!("I2(m) needs m >= 3, got {m}"))),
            _ => Ok(tag),
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::A1xN(n) => write!(f, "A1x{n}"),
            TypeTag::I2(m) => write!(f, "I2({m})"),
            t => f.write_str(t.tag()),
        }
    }
}

impl Serialize for TypeTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TypeTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "custom" {
            return Ok(TypeTag::Custom);
        }
        TypeTag::parse(&s, None).map_err(serde::de::Error::custom)
    }
}

/// A Coxeter system (W, S). Generators are indexed `0..rank`; subsets of S
/// are bitmasks with bit `i` standing for generator `i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoxeterSystem {
    #[serde(rename = "type")]
    pub tag: TypeTag,
    pub generators: Vec<String>,
    pub coxeter_matrix: Vec<Vec<u32>>,
}

impl CoxeterSystem {
    /// Builds a custom system after checking the Coxeter matrix.
    pub fn custom(generators: Vec<String>, matrix: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        let sys = CoxeterSystem { tag: TypeTag::Custom, generators, coxeter_matrix: matrix };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<(), CoxeterError> {
        let n = self.generators.len();
        if n == 0 || n > 5 {
            return Err(CoxeterError::InvalidParam(format!("rank must be between 1 and 5, got {n}")));
        }
        if self.coxeter_matrix.len() != n || self.coxeter_matrix.iter().any(|r| r.len() != n) {
            return Err(CoxeterError::DimensionMismatch);
        }
        let mut seen = HashSet::new();
        for g in &self.generators {
            if g.chars().count() != 1 || !seen.insert(g.clone()) {
                return Err(CoxeterError::InvalidParam(format!("generator labels must be distinct single characters, got {g:?}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let m = self.coxeter_matrix[i][j];
                if i == j && m != 1 {
                    return Err(CoxeterError::InvalidParam(format!("m_ss must be 1 (generator {i})")));
                }
                if i != j && (m < 2 || m != self.coxeter_matrix[j][i]) {
                    return Err(CoxeterError::InvalidParam(format!("m_st must be symmetric and >= 2 at ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.coxeter_matrix[s][t]
    }

    /// Bitmask of S.
    pub fn full_set(&self) -> u32 {
        (1u32 << self.rank()) - 1
    }

    pub fn subsets(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.rank())
    }

    /// Index of a generator label.
    pub fn generator_index(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == label)
    }

    /// Name of a subset: concatenated labels in generator order, `∅` if empty.
    pub fn subset_name(&self, mask: u32) -> String {
        if mask == 0 {
            return "∅".to_string();
        }
        (0..self.rank()).filter(|i| mask >> i & 1 == 1).map(|i| self.generators[i].as_str()).collect()
    }

    /// Parses `12`, `{1,2}`, `∅`, `{}` or the empty string.
    pub fn parse_subset(&self, s: &str) -> Result<u32, CoxeterError> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut mask = 0u32;
        for c in t.chars().filter(|c| !matches!(c, ',' | ' ' | '∅')) {
            let i = self
                .generator_index(&c.to_string())
                .ok_or_else(|| CoxeterError::InvalidParam(format!("unknown generator {c:?} in subset {s:?}")))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    /// Whether `s` and `t` are joined in the Dynkin diagram.
    pub fn bonded(&self, s: usize, t: usize) -> bool {
        s != t && self.m(s, t) >= 3
    }

    /// Parameter `M` of the field Q(2cos(π/M)) containing every 2cos(π/m_st).
    pub fn field_parameter(&self) -> u32 {
        let mut acc = 1u32;
        for row in &self.coxeter_matrix {
            for &m in row {
                if m >= 4 {
                    acc = num_integer::lcm(acc, m);
                }
            }
        }
        if acc == 1 {
            3
        } else {
            acc
        }
    }

    pub fn field(&self) -> Arc<FieldCtx> {
        FieldCtx::get(self.field_parameter()).expect("field parameter is at least 3")
    }

    /// Whether a generator permutation preserves the Coxeter matrix.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.rank();
        perm.len() == n
            && (0..n).all(|i| perm.contains(&i))
            && (0..n).all(|s| (0..n).all(|t| self.m(perm[s], perm[t]) == self.m(s, t)))
    }

    /// |W| by breadth-first enumeration of the geometric representation.
    pub fn group_order(&self) -> Result<usize, CoxeterError> {
        const LIMIT: usize = 20_000;
        let n = self.rank();
        let ctx = self.field();
        let mm = ctx.m();
        // s(α_t) = α_t + 2cos(π/m_st)·α_s, so column t of the matrix of s is e_t + c·e_s.
        let gens: Vec<Matrix<NumberFieldElem>> = (0..n)
            .map(|s| {
                let mut g = Matrix::<NumberFieldElem>::identity(n);
                for t in 0..n {
                    let m = self.m(s, t);
                    let c = if s == t {
                        NumberFieldElem::from_int(-2)
                    } else if m == 2 {
                        NumberFieldElem::zero()
                    } else if m == 3 {
                        NumberFieldElem::one()
                    } else {
                        two_cos(&ctx, mm / m)
                    };
                    let cur = g.get(s, t).add(&c);
                    g.set(s, t, cur);
                }
                g
            })
            .collect();
        for s in 0..n {
            for t in 0..n {
                if s != t && mm % self.m(s, t) != 0 && self.m(s, t) > 3 {
                    return Err(CoxeterError::InvalidParam("bond not representable in the chosen field".into()));
                }
            }
        }
        let key = |m: &Matrix<NumberFieldElem>| m.to_rows();
        let mut seen: HashSet<Vec<Vec<NumberFieldElem>>> = HashSet::new();
        let id = Matrix::identity(n);
        seen.insert(key(&id));
        let mut frontier = vec![id];
        while let Some(w) = frontier.pop() {
            for g in &gens {
                let x = w.mul(g);
                if seen.insert(key(&x)) {
                    if seen.len() > LIMIT {
                        return Err(CoxeterError::Unsupported(format!("{} (group larger than {LIMIT})", self.tag)));
                    }
                    frontier.push(x);
                }
            }
        }
        Ok(seen.len())
    }
}

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn chain(n: usize, bonds: &[(usize, usize, u32)]) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(s, t, b) in bonds {
        m[s][t] = b;
        m[t][s] = b;
    }
    m
}

/// Builds one of the named Coxeter systems.
pub fn build_system(tag: TypeTag) -> Result<CoxeterSystem, CoxeterError> {
    let (generators, matrix) = match tag {
        TypeTag::A1xN(n) => {
            if !(1..=5).contains(&n) {
                return Err(CoxeterError::InvalidParam(format!("A1xN needs 1 <= n <= 5, got {n}")));
            }
            let g: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            (g, chain(n as usize, &[]))
        }
        TypeTag::I2(m) => {
            if m < 3 {
                return Err(CoxeterError::InvalidParam(format!("I2(m) needs m >= 3, got {m}")));
            }
            (labels(&["1", "2"]), chain(2, &[(0, 1, m)]))
        }
        TypeTag::A3 => (labels(&["1", "2", "3"]), chain(3, &[(0, 1, 3), (1, 2, 3)])),
        TypeTag::A4 => (labels(&["1", "2", "3", "4"]), chain(4, &[(0, 1, 3), (1, 2, 3), (2, 3, 3)])),
        TypeTag::B3 => (labels(&["0", "1", "2"]), chain(3, &[(0, 1, 4), (1, 2, 3)])),
        TypeTag::H3 => (labels(&["1", "2", "3"]), chain(3, &[(0, 1, 5), (1, 2, 3)])),
        TypeTag::B4 => (labels(&["1", "2", "3", "4"]), chain(4, &[(0, 1, 4), (1, 2, 3), (2, 3, 3)])),
        TypeTag::F4 => (labels(&["1", "2", "3", "4"]), chain(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)])),
        TypeTag::D4 => (labels(&["0", "1", "2", "3"]), chain(4, &[(0, 2, 3), (1, 2, 3), (2, 3, 3)])),
        TypeTag::Custom => return Err(CoxeterError::InvalidParam("custom systems are built with CoxeterSystem::custom".into())),
    };
    let sys = CoxeterSystem { tag, generators, coxeter_matrix: matrix };
    sys.validate()?;
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_matrices() {
        let a3 = build_system(TypeTag::A3).unwrap();
        assert_eq!((a3.m(0, 1), a3.m(1, 2), a3.m(0, 2)), (3, 3, 2));
        let b3 = build_system(TypeTag::B3).unwrap();
        assert_eq!(b3.generators, vec!["0", "1", "2"]);
        assert_eq!((b3.m(0, 1), b3.m(1, 2), b3.m(0, 2)), (4, 3, 2));
        assert_eq!(build_system(TypeTag::I2(7)).unwrap().m(0, 1), 7);
        assert!(build_system(TypeTag::I2(2)).is_err());
    }

    #[test]
    fn group_orders() {
        let cases = [
            (TypeTag::A1xN(3), 8),
            (TypeTag::I2(5), 10),
            (TypeTag::I2(8), 16),
            (TypeTag::A3, 24),
            (TypeTag::A4, 120),
            (TypeTag::B3, 48),
            (TypeTag::H3, 120),
            (TypeTag::D4, 192),
            (TypeTag::B4, 384),
            (TypeTag::F4, 1152),
        ];
        for (t, n) in cases {
            assert_eq!(build_system(t).unwrap().group_order().unwrap(), n, "{t}");
        }
    }

    #[test]
    fn parse_tags() {
        assert_eq!(TypeTag::parse("A1x3", None).unwrap(), TypeTag::A1xN(3));
        assert_eq!(TypeTag::parse("A1xN", Some(2)).unwrap(), TypeTag::A1xN(2));
        assert_eq!(TypeTag::parse("I2(5)", None).unwrap(), TypeTag::I2(5));
        assert_eq!(TypeTag::parse("i2", Some(6)).unwrap(), TypeTag::I2(6));
        assert!(TypeTag::parse("I2", None).is_err());
        assert!(TypeTag::parse("E8", None).is_err());
    }

    #[test]
    fn subset_names_roundtrip() {
        let b3 = build_system(TypeTag::B3).unwrap();
        for mask in b3.subsets() {
            assert_eq!(b3.parse_subset(&b3.subset_name(mask)).unwrap(), mask);
        }
        assert_eq!(b3.subset_name(0b101), "02");
    }

    #[test]
    fn automorphisms() {
        let a4 = build_system(TypeTag::A4).unwrap();
        assert!(a4.is_automorphism(&[3, 2, 1, 0]));
        assert!(!a4.is_automorphism(&[1, 0, 2, 3]));
    }
}
