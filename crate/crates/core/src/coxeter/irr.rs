use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{CoxeterError, CoxeterSystem, TypeTag};

/// Irreducible characters of W with degrees, the partial order ⪯ and, per
/// character, the chain of vertices of its component in the refined
/// compatibility graph.
///
/// Order convention: `leq[a][b]` means λ_a ⪯ λ_b, read so that
/// F^λ·kΩ·F^μ ≠ 0 implies λ ⪯ μ. Inclusion edges run from smaller to larger
/// subsets, so the sign character is the minimum and the trivial character
/// the maximum.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrData {
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    pub leq: Vec<Vec<bool>>,
    pub components: Vec<Vec<u32>>,
}

impl IrrData {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn sum_of_squares(&self) -> usize {
        self.degrees.iter().map(|d| d * d).sum()
    }

    pub fn is_leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Covering pairs (a, b): a ≺ b with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether ⪯ is reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(self.leq[a][b] && self.leq[b][c]) || self.leq[a][c])))
    }

    /// Characters whose component contains the vertex `mask`.
    pub fn at_vertex(&self, mask: u32) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.components[i].contains(&mask)).collect()
    }
}

impl Serialize for IrrData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Ch<'a> {
            label: &'a str,
            degree: usize,
        }
        let chars: Vec<Ch> = self.labels.iter().zip(&self.degrees).map(|(l, &d)| Ch { label: l, degree: d }).collect();
        let covers: Vec<[&str; 2]> = self.covers().into_iter().map(|(a, b)| [self.labels[a].as_str(), self.labels[b].as_str()]).collect();
        let mut st = s.serialize_struct("IrrData", 2)?;
        st.serialize_field("characters", &chars)?;
        st.serialize_field("order", &covers)?;
        st.end()
    }
}

/// Whether partition `a` is dominated by partition `b` (same size).
pub fn dominates(b: &[usize], a: &[usize]) -> bool {
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

fn closure(mut leq: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = leq.len();
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
    leq
}

fn masks(sys: &CoxeterSystem, names: &[&str]) -> Vec<u32> {
    names.iter().map(|n| sys.parse_subset(n).expect("static subset name")).collect()
}

fn partition_type(sys: &CoxeterSystem, table: &[(&str, &[usize], &[&str])]) -> IrrData {
    let n = table.len();
    let leq = (0..n).map(|a| (0..n).map(|b| dominates(table[b].1, table[a].1)).collect()).collect();
    IrrData {
        labels: table.iter().map(|t| t.0.to_string()).collect(),
        degrees: table.iter().map(|t| t.2.len()).collect(),
        leq,
        components: table.iter().map(|t| masks(sys, t.2)).collect(),
    }
}

/// Character data of the certified types.
/// Inclusion edges F_I^λ X_IJ F_J^μ of B3 that vanish although J ⊂ I, as
/// (λ, I, J, μ). Both are the only inclusion witnesses of λ ⪯ μ, so the
/// order leaves these pairs incomparable. The family construction checks
/// that they vanish.
pub const B3_VANISHING_INCLUSIONS: [(&str, &str, &str, &str); 2] = [("(1),(2)", "02", "2", "(2,1),∅"), ("∅,(2,1)", "01", "1", "(1^2),(1)")];

pub fn irr_data(sys: &CoxeterSystem) -> Result<IrrData, CoxeterError> {
    let data = match sys.tag {
        TypeTag::A1xN(_) => {
            let subsets: Vec<u32> = sys.subsets().collect();
            let n = subsets.len();
            IrrData {
                labels: subsets.iter().map(|&m| format!("χ_{}", sys.subset_name(m))).collect(),
                degrees: vec![1; n],
                leq: (0..n).map(|a| (0..n).map(|b| subsets[a] & subsets[b] == subsets[b]).collect()).collect(),
                components: subsets.iter().map(|&m| vec![m]).collect(),
            }
        }
        TypeTag::I2(m) => {
            let mut labels = vec!["1".to_string()];
            let mut comps = vec![vec![0b00]];
            for a in 1..=(m - 1) / 2 {
                labels.push(format!("λ_{a}"));
                comps.push(vec![0b01, 0b10]);
            }
            if m % 2 == 0 {
                labels.push("ε_1".into());
                comps.push(vec![0b01]);
                labels.push("ε_2".into());
                comps.push(vec![0b10]);
            }
            labels.push("sgn".into());
            comps.push(vec![0b11]);
            let n = labels.len();
            let leq = (0..n).map(|a| (0..n).map(|b| a == b || a == n - 1 || b == 0).collect()).collect();
            IrrData { degrees: comps.iter().map(|c| c.len()).collect(), labels, leq, components: comps }
        }
        TypeTag::A3 => partition_type(
            sys,
            &[
                ("(4)", &[4], &["∅"]),
                ("(3,1)", &[3, 1], &["1", "2", "3"]),
                ("(2,2)", &[2, 2], &["2", "13"]),
                ("(2,1^2)", &[2, 1, 1], &["12", "13", "23"]),
                ("(1^4)", &[1, 1, 1, 1], &["123"]),
            ],
        ),
        TypeTag::A4 => partition_type(
            sys,
            &[
                ("(5)", &[5], &["∅"]),
                ("(4,1)", &[4, 1], &["1", "2", "3", "4"]),
                ("(3,2)", &[3, 2], &["2", "13", "14", "24", "3"]),
                ("(3,1^2)", &[3, 1, 1], &["12", "13", "14", "23", "24", "34"]),
                ("(2^2,1)", &[2, 2, 1], &["134", "24", "23", "13", "124"]),
                ("(2,1^3)", &[2, 1, 1, 1], &["234", "134", "124", "123"]),
                ("(1^5)", &[1, 1, 1, 1, 1], &["1234"]),
            ],
        ),
        TypeTag::B3 => {
            let table: [(&str, &[&str]); 10] = [
                ("(3),∅", &["∅"]),
                ("∅,(3)", &["0"]),
                ("(2,1),∅", &["1", "2"]),
                ("(2),(1)", &["0", "1", "2"]),
                ("(1),(2)", &["0", "1", "02"]),
                ("(1^2),(1)", &["12", "02", "1"]),
                ("(1),(1^2)", &["12", "02", "01"]),
                ("∅,(2,1)", &["02", "01"]),
                ("(1^3),∅", &["12"]),
                ("∅,(1^3)", &["012"]),
            ];
            let comps: Vec<Vec<u32>> = table.iter().map(|t| masks(sys, t.1)).collect();
            let n = table.len();
            let vanishing = |a: usize, i: u32, j: u32, b: usize| {
                B3_VANISHING_INCLUSIONS.iter().any(|v| v.0 == table[a].0 && v.3 == table[b].0 && masks(sys, &[v.1, v.2]) == [i, j])
            };
            let step: Vec<Vec<bool>> = (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| comps[a].iter().any(|&i| comps[b].iter().any(|&j| i != j && i & j == j && !vanishing(a, i, j, b))))
                        .collect()
                })
                .collect();
            IrrData {
                labels: table.iter().map(|t| t.0.to_string()).collect(),
                degrees: comps.iter().map(|c| c.len()).collect(),
                leq: closure(step),
                components: comps,
            }
        }
        _ => return Err(CoxeterError::Unsupported(sys.tag.to_string())),
    };
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;

    fn data(t: TypeTag) -> (CoxeterSystem, IrrData) {
        let s = build_system(t).unwrap();
        let d = irr_data(&s).unwrap();
        (s, d)
    }

    #[test]
    fn degrees_square_to_group_order() {
        for t in [TypeTag::A1xN(1), TypeTag::A1xN(3), TypeTag::I2(3), TypeTag::I2(4), TypeTag::I2(5), TypeTag::I2(8), TypeTag::A3, TypeTag::A4, TypeTag::B3] {
            let (s, d) = data(t);
            assert_eq!(d.sum_of_squares(), s.group_order().unwrap(), "{t}");
            assert!(d.is_partial_order(), "{t}");
        }
    }

    #[test]
    fn documented_degree_lists() {
        assert_eq!(data(TypeTag::A3).1.degrees, vec![1, 3, 2, 3, 1]);
        assert_eq!(data(TypeTag::I2(5)).1.degrees, vec![1, 2, 2, 1]);
        let mut b3 = data(TypeTag::B3).1.degrees;
        b3.sort();
        assert_eq!(b3, vec![1, 1, 1, 1, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn vertex_multiplicities_cover_every_subset() {
        // Every E_I splits into at least one F_I^λ.
        for t in [TypeTag::I2(6), TypeTag::A3, TypeTag::A4, TypeTag::B3] {
            let (s, d) = data(t);
            for i in s.subsets() {
                assert!(!d.at_vertex(i).is_empty(), "{t} vertex {}", s.subset_name(i));
            }
        }
    }

    #[test]
    fn orders_have_sign_at_bottom() {
        let (_, a4) = data(TypeTag::A4);
        let sgn = a4.index("(1^5)").unwrap();
        let triv = a4.index("(5)").unwrap();
        assert!((0..a4.len()).all(|b| a4.is_leq(sgn, b) && a4.is_leq(b, triv)));
        assert!(!a4.is_leq(a4.index("(3,1^2)").unwrap(), a4.index("(2^2,1)").unwrap()));
        let (_, i2) = data(TypeTag::I2(6));
        let e1 = i2.index("ε_1").unwrap();
        let l1 = i2.index("λ_1").unwrap();
        assert!(!i2.is_leq(e1, l1) && !i2.is_leq(l1, e1));
        assert!(dominates(&[3, 1], &[2, 2]));
        assert!(a4.is_leq(a4.index("(2^2,1)").unwrap(), a4.index("(3,1^2)").unwrap()));
        let (_, b3) = data(TypeTag::B3);
        for (l, _, _, m) in B3_VANISHING_INCLUSIONS {
            let (a, b) = (b3.index(l).unwrap(), b3.index(m).unwrap());
            assert!(!b3.is_leq(a, b) && !b3.is_leq(b, a));
        }
        assert!(b3.is_partial_order());
    }
}
