use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::family::El;
use super::{build_family, DecompError, IdempotentFamily, IdentityCheck, Scalar};
use crate::arith::NumberFieldElem;
use crate::linalg::Echelon;
use crate::omega::{radical, AlgebraElement, QuotientAlgebra, RadicalInfo};

#[derive(Clone, Debug, Serialize)]
pub struct Z1Z2Report {
    pub pass: bool,
    pub idempotents: usize,
    pub checks: Vec<IdentityCheck>,
}

/// dim F^λ kΩ F^μ for one ordered pair of characters.
#[derive(Clone, Debug, Serialize)]
pub struct PeirceBlock {
    pub left: String,
    pub right: String,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Z3Report {
    pub pass: bool,
    pub peirce: Vec<PeirceBlock>,
    /// Σ_{λ,μ} dim F^λ kΩ F^μ equals dim kΩ.
    pub peirce_total_matches: bool,
    /// Covering pairs [λ, μ] of the order generated by F^λ kΩ F^μ ≠ 0.
    pub realized_order: Vec<[String; 2]>,
    /// Pairs with F^λ kΩ F^μ ≠ 0 but λ ⪯ μ false.
    pub violations: Vec<[String; 2]>,
    /// The realized order coincides with the declared order on characters.
    pub matches_declared_order: bool,
    #[serde(skip)]
    pub realized_leq: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Z4Component {
    pub label: String,
    pub degree: usize,
    /// dim F^λ kΩ F^λ.
    pub corner_dim: usize,
    /// dim of the span of the matrix units ψ_λ(e_ij).
    pub image_dim: usize,
    pub relations_hold: bool,
    pub semisimple_corner: bool,
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Z4Report {
    pub pass: bool,
    pub components: Vec<Z4Component>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalCrossCheck {
    pub dim: usize,
    pub dim_radical: usize,
    pub sum_of_squares: usize,
    pub corners_total: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DenominatorAudit {
    /// Distinct denominators of the coordinates of every F_I^λ and ψ_λ image.
    pub denominators: Vec<String>,
    pub powers_of_two_only: bool,
    pub inverted: Vec<String>,
}

fn sum<F: Scalar>(items: impl IntoIterator<Item = El<F>>) -> El<F> {
    items.into_iter().fold(El::zero(), |acc, x| acc.add(&x))
}

/// Z1: the F^λ are orthogonal idempotents summing to 1. Z2: E_I F^λ =
/// F^λ E_I, and this product is the registered F_I^λ.
pub fn check_z1_z2<F: Scalar>(alg: &QuotientAlgebra, fam: &IdempotentFamily<F>) -> Z1Z2Report {
    let sys = alg.system();
    let mut checks = Vec::new();
    let totals: Vec<El<F>> = fam.components.iter().map(|c| c.total()).collect();
    for (a, fa) in totals.iter().enumerate() {
        let la = &fam.components[a].label;
        checks.push(IdentityCheck::new(format!("F^{la} ≠ 0"), !fa.is_zero()));
        checks.push(IdentityCheck::new(format!("F^{la} F^{la} = F^{la}"), alg.mul(fa, fa) == *fa));
        for (b, fb) in totals.iter().enumerate() {
            if a != b {
                let lb = &fam.components[b].label;
                checks.push(IdentityCheck::new(format!("F^{la} F^{lb} = 0"), alg.mul(fa, fb).is_zero()));
            }
        }
    }
    checks.push(IdentityCheck::new("Σ_λ F^λ = 1", sum(totals.iter().cloned()) == alg.unit()));
    for (c, fa) in fam.components.iter().zip(&totals) {
        for v in sys.subsets() {
            let ev: El<F> = alg.vertex(v);
            let left = alg.mul(&ev, fa);
            let right = alg.mul(fa, &ev);
            let expect = c.part(v).cloned().unwrap_or_else(El::zero);
            let name = sys.subset_name(v);
            checks.push(IdentityCheck::new(format!("E_{name} F^{} = F^{} E_{name} = F_{name}^{}", c.label, c.label, c.label), left == right && left == expect));
        }
        for (v, p) in c.vertices.iter().zip(&c.parts) {
            checks.push(IdentityCheck::new(format!("F_{}^{} ≠ 0", sys.subset_name(*v), c.label), !p.is_zero()));
        }
    }
    let pass = checks.iter().all(|c| c.holds);
    Z1Z2Report { pass, idempotents: fam.len(), checks }
}

/// dim of F_I^λ · E_I kΩ E_J · F_J^μ for every (λ, I), (μ, J).
fn peirce_dims<F: Scalar>(alg: &QuotientAlgebra, fam: &IdempotentFamily<F>, diagonal_only: bool) -> Vec<Vec<usize>> {
    let n = fam.len();
    let mut dims = vec![vec![0usize; n]; n];
    for (a, ca) in fam.components.iter().enumerate() {
        for (&i, fi) in ca.vertices.iter().zip(&ca.parts) {
            for j in alg.system().subsets() {
                let targets: Vec<(usize, &El<F>)> = fam
                    .components
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| !diagonal_only || *b == a)
                    .filter_map(|(b, cb)| cb.part(j).map(|p| (b, p)))
                    .collect();
                if targets.is_empty() {
                    continue;
                }
                let left: Vec<El<F>> = alg.block(i, j).into_iter().map(|w| alg.mul(fi, &AlgebraElement::basis(w))).filter(|x| !x.is_zero()).collect();
                for (b, fj) in targets {
                    let mut ech = Echelon::new();
                    for l in &left {
                        ech.insert(alg.mul(l, fj).coords().clone());
                    }
                    dims[a][b] += ech.rank();
                }
            }
        }
    }
    dims
}

fn closure(mut r: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = r.len();
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Z3: F^λ kΩ F^μ ≠ 0 only when λ ⪯ μ. Also reports the order generated by
/// the nonzero Peirce blocks.
pub fn check_z3<F: Scalar>(alg: &QuotientAlgebra, fam: &IdempotentFamily<F>) -> Z3Report {
    let n = fam.len();
    let dims = peirce_dims(alg, fam, false);
    let labels: Vec<&String> = fam.components.iter().map(|c| &c.label).collect();
    let mut peirce = Vec::new();
    let mut violations = Vec::new();
    let mut total = 0;
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            total += dims[a][b];
            if dims[a][b] > 0 {
                peirce.push(PeirceBlock { left: labels[a].clone(), right: labels[b].clone(), dim: dims[a][b] });
                rel[a][b] = true;
                if !fam.irr.is_leq(a, b) {
                    violations.push([labels[a].clone(), labels[b].clone()]);
                }
            }
        }
    }
    let realized_leq = closure(rel);
    let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || !(realized_leq[a][b] && realized_leq[b][a])));
    let mut realized_order = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && realized_leq[a][b] && !(0..n).any(|c| c != a && c != b && realized_leq[a][c] && realized_leq[c][b]) {
                realized_order.push([labels[a].clone(), labels[b].clone()]);
            }
        }
    }
    let peirce_total_matches = total == alg.dim();
    let matches_declared_order = realized_leq == fam.irr.leq;
    Z3Report {
        pass: violations.is_empty() && antisymmetric && peirce_total_matches,
        peirce,
        peirce_total_matches,
        realized_order,
        violations,
        matches_declared_order,
        realized_leq,
    }
}

/// Z4: ψ_λ(e_ij) satisfy the matrix-unit presentation and span the corner
/// F^λ kΩ F^λ.
pub fn check_z4<F: Scalar>(alg: &QuotientAlgebra, fam: &IdempotentFamily<F>) -> Z4Report {
    let dims = peirce_dims(alg, fam, true);
    let sys = alg.system();
    let mut components = Vec::new();
    for (a, c) in fam.components.iter().enumerate() {
        let d = c.degree;
        let mut failures = Vec::new();
        let name = |i: usize| sys.subset_name(c.vertices[i]);
        let mut unit = vec![vec![El::<F>::zero(); d]; d];
        for i in 0..d {
            unit[i][i] = c.parts[i].clone();
        }
        for i in 0..d.saturating_sub(1) {
            for (p, q) in [(i, i + 1), (i + 1, i)] {
                match c.generator(p, q) {
                    Some(g) => {
                        if alg.mul(&alg.mul(&c.parts[p], g), &c.parts[q]) != *g {
                            failures.push(format!("e_{}{} is not in F_{} kΩ F_{}", name(p), name(q), name(p), name(q)));
                        }
                        unit[p][q] = g.clone();
                    }
                    None => failures.push(format!("no image for e_{},{}", name(p), name(q))),
                }
            }
        }
        for i in 0..d.saturating_sub(1) {
            if alg.mul(&unit[i][i + 1], &unit[i + 1][i]) != unit[i][i] {
                failures.push(format!("e_{0},{1} e_{1},{0} ≠ e_{0},{0}", name(i), name(i + 1)));
            }
            if alg.mul(&unit[i + 1][i], &unit[i][i + 1]) != unit[i + 1][i + 1] {
                failures.push(format!("e_{1},{0} e_{0},{1} ≠ e_{1},{1}", name(i), name(i + 1)));
            }
        }
        for i in 0..d {
            for j in 0..d {
                if alg.mul(&unit[i][i], &unit[j][j]) != if i == j { unit[i][i].clone() } else { El::zero() } {
                    failures.push(format!("e_{0},{0} e_{1},{1} wrong", name(i), name(j)));
                }
            }
        }
        for gap in 2..d {
            for i in 0..d - gap {
                unit[i][i + gap] = alg.mul(&unit[i][i + 1], &unit[i + 1][i + gap]);
                unit[i + gap][i] = alg.mul(&unit[i + gap][i + gap - 1], &unit[i + gap - 1][i]);
            }
        }
        let mut ech = Echelon::new();
        for row in &unit {
            for u in row {
                ech.insert(u.coords().clone());
            }
        }
        let image_dim = ech.rank();
        let corner_dim = dims[a][a];
        let relations_hold = failures.is_empty();
        if image_dim != corner_dim {
            failures.push(format!("ψ image has dimension {image_dim}, the corner {corner_dim}"));
        }
        components.push(Z4Component {
            label: c.label.clone(),
            degree: d,
            corner_dim,
            image_dim,
            relations_hold,
            semisimple_corner: corner_dim == d * d,
            pass: failures.is_empty(),
            failures,
        });
    }
    Z4Report { pass: components.iter().all(|c| c.pass), components }
}

/// The off-diagonal Peirce blocks and the surplus of the corners form the
/// radical: dim kΩ − dim rad = Σ d_λ² = Σ_λ dim F^λ kΩ F^λ.
pub fn cross_check_radical<F: Scalar>(fam: &IdempotentFamily<F>, z4: &Z4Report, rad: &RadicalInfo) -> RadicalCrossCheck {
    let sum_of_squares = fam.irr.sum_of_squares();
    let corners_total: usize = z4.components.iter().map(|c| c.corner_dim).sum();
    RadicalCrossCheck {
        dim: rad.dim,
        dim_radical: rad.dim_radical,
        sum_of_squares,
        corners_total,
        pass: rad.dim_semisimple == sum_of_squares && corners_total == sum_of_squares,
    }
}

fn is_power_of_two(n: &BigInt) -> bool {
    let mut n = n.clone();
    let two = BigInt::from(2);
    while !n.is_zero() && (&n % &two).is_zero() {
        n /= &two;
    }
    n.is_one()
}

/// Collects the denominators of every coordinate of the family.
pub fn denominator_audit<F: Scalar>(fam: &IdempotentFamily<F>) -> DenominatorAudit {
    let mut dens: BTreeSet<BigInt> = BTreeSet::new();
    let mut add = |e: &El<F>| {
        for (_, c) in e.coords().iter() {
            dens.insert(c.denominator());
        }
    };
    for c in &fam.components {
        c.parts.iter().for_each(&mut add);
        c.generators.iter().for_each(|g| add(&g.2));
    }
    DenominatorAudit {
        powers_of_two_only: dens.iter().all(is_power_of_two),
        denominators: dens.iter().map(|d| d.to_string()).collect(),
        inverted: fam.inverted.clone(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentitySummary {
    pub total: usize,
    pub holding: usize,
    pub failing: Vec<String>,
}

/// Everything `verify-conjecture` reports.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub tag: String,
    pub field: String,
    pub dim: usize,
    pub characters: crate::coxeter::IrrData,
    pub identities: IdentitySummary,
    pub notes: Vec<String>,
    pub z1_z2: Z1Z2Report,
    pub z3: Z3Report,
    pub z4: Z4Report,
    pub radical: RadicalCrossCheck,
    pub denominators: DenominatorAudit,
    pub pass: bool,
}

/// Builds the family, runs Z1–Z4, the radical cross-check and the
/// denominator audit.
pub fn verify_conjecture(alg: &QuotientAlgebra, threads: Option<usize>) -> Result<(IdempotentFamily<NumberFieldElem>, ConjectureReport), DecompError> {
    let fam = build_family(alg)?;
    let z1_z2 = check_z1_z2(alg, &fam);
    let z3 = check_z3(alg, &fam);
    let z4 = check_z4(alg, &fam);
    let rad = radical(alg, threads)?;
    let radical = cross_check_radical(&fam, &z4, &rad);
    let denominators = denominator_audit(&fam);
    let failing: Vec<String> = fam.identities.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect();
    let identities = IdentitySummary { total: fam.identities.len(), holding: fam.identities.len() - failing.len(), failing };
    let sys = alg.system();
    let field = if sys.field().degree() == 1 { "Q".to_string() } else { format!("Q(2cos(pi/{}))", sys.field_parameter()) };
    let pass = z1_z2.pass && z3.pass && z4.pass && radical.pass && identities.failing.is_empty();
    let report = ConjectureReport {
        schema: 1,
        tag: sys.tag.to_string(),
        field,
        dim: alg.dim(),
        characters: fam.irr.clone(),
        identities,
        notes: fam.notes.clone(),
        z1_z2,
        z3,
        z4,
        radical,
        denominators,
        pass,
    };
    Ok((fam, report))
}
