use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{OmegaError, QuotientAlgebra};
use crate::arith::{Rational, Ring};
use crate::linalg::{Echelon, SparseVec};

/// Rank of the trace-form block between E_I kΩ E_J and E_J kΩ E_I.
#[derive(Clone, Debug, Serialize)]
pub struct BlockRank {
    pub head: String,
    pub tail: String,
    pub dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalInfo {
    pub dim: usize,
    pub dim_radical: usize,
    pub dim_semisimple: usize,
    pub blocks: Vec<BlockRank>,
}

fn run<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, OmegaError> {
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| OmegaError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

/// The radical via the trace form t(c) = tr(x ↦ x·c). Over a field of
/// characteristic zero, rad(kΩ) = {a : t(ab) = 0 for all b}, and since the
/// form pairs E_I kΩ E_J only with E_J kΩ E_I, the radical dimension is
/// Σ_{I,J} (dim E_I kΩ E_J − rank G_IJ) with G_IJ the Gram block.
pub fn radical(alg: &QuotientAlgebra, threads: Option<usize>) -> Result<RadicalInfo, OmegaError> {
    let n = alg.dim();
    let words = alg.words();
    run(threads, || {
        let products: Vec<Vec<(u32, SparseVec<Rational>)>> = (0..n as u32).into_par_iter().map(|i| alg.products_from(i)).collect();

        let mut t = vec![Rational::zero(); n];
        for (i, prods) in products.iter().enumerate() {
            for (j, v) in prods {
                let w = &words[*j as usize].path;
                if w.head == w.tail {
                    t[*j as usize].add_assign(&v.get(i as u32));
                }
            }
        }

        let mut gram: BTreeMap<(u32, u32), Vec<SparseVec<Rational>>> = BTreeMap::new();
        for (p, prods) in products.iter().enumerate() {
            let a = &words[p].path;
            let row = SparseVec::from_sorted(
                prods
                    .iter()
                    .filter(|(q, _)| words[*q as usize].path.tail == a.head)
                    .map(|(q, v)| (*q, v.iter().fold(Rational::zero(), |acc, (k, c)| acc.add(&c.mul(&t[k as usize])))))
                    .collect(),
            );
            gram.entry((a.head, a.tail)).or_default().push(row);
        }

        let sys = alg.system();
        let mut blocks = Vec::new();
        let mut dim_radical = 0;
        for ((head, tail), rows) in gram {
            let mut ech = Echelon::new();
            let dim = rows.len();
            for r in rows {
                ech.insert(r);
            }
            dim_radical += dim - ech.rank();
            blocks.push(BlockRank { head: sys.subset_name(head), tail: sys.subset_name(tail), dim, rank: ech.rank() });
        }
        RadicalInfo { dim: n, dim_radical, dim_semisimple: n - dim_radical, blocks }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, TypeTag};
    use crate::omega::{compute_quotient, QuotientOptions};

    #[test]
    fn rank_one_radical_is_the_arrow() {
        let a = compute_quotient(&build_system(TypeTag::A1xN(1)).unwrap(), &QuotientOptions::default()).unwrap();
        let r = radical(&a, None).unwrap();
        assert_eq!((r.dim_radical, r.dim_semisimple), (1, 2));
    }

    #[test]
    fn i2_4_semisimple_quotient_has_group_order() {
        let a = compute_quotient(&build_system(TypeTag::I2(4)).unwrap(), &QuotientOptions::default()).unwrap();
        assert_eq!(radical(&a, Some(1)).unwrap().dim_semisimple, 8);
    }
}
