use std::marker::PhantomData;

use serde_json::{json, Value};

use super::{DecompError, IdentityCheck, Scalar};
use crate::arith::{NumberFieldElem, Rational};
use crate::coxeter::{irr_data, IrrData, TypeTag};
use crate::omega::{AlgebraElement, QuotientAlgebra};

pub(crate) type El<F> = AlgebraElement<F>;

/// The idempotents F_I^λ of one character λ and the off-diagonal images of
/// the matrix-unit generators under ψ_λ. `vertices` follows the chain order
/// of the component; `generators` holds (i, j, ψ_λ(e_ij)) for |i − j| = 1.
#[derive(Clone, Debug)]
pub struct Component<F> {
    pub label: String,
    pub degree: usize,
    pub vertices: Vec<u32>,
    pub parts: Vec<El<F>>,
    pub generators: Vec<(usize, usize, El<F>)>,
}

impl<F: Scalar> Component<F> {
    /// F^λ = Σ_I F_I^λ.
    pub fn total(&self) -> El<F> {
        self.parts.iter().fold(El::zero(), |acc, p| acc.add(p))
    }

    pub fn part(&self, vertex: u32) -> Option<&El<F>> {
        self.vertices.iter().position(|&v| v == vertex).map(|i| &self.parts[i])
    }

    pub fn generator(&self, i: usize, j: usize) -> Option<&El<F>> {
        self.generators.iter().find(|g| g.0 == i && g.1 == j).map(|g| &g.2)
    }
}

/// A family (F^λ) indexed by the characters of W, in the order of `irr`,
/// with the log of every identity asserted while building it.
#[derive(Clone, Debug)]
pub struct IdempotentFamily<F> {
    pub tag: TypeTag,
    pub irr: IrrData,
    pub components: Vec<Component<F>>,
    pub identities: Vec<IdentityCheck>,
    /// Conventions and corrections applied while building.
    pub notes: Vec<String>,
    /// Scalars inverted during the construction, rendered.
    pub inverted: Vec<String>,
}

impl<F: Scalar> IdempotentFamily<F> {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, label: &str) -> Option<&Component<F>> {
        self.components.iter().find(|c| c.label == label)
    }

    /// F_I^λ, zero when I is not in the component of λ.
    pub fn part(&self, label: &str, vertex: u32) -> Option<El<F>> {
        self.component(label).map(|c| c.part(vertex).cloned().unwrap_or_else(El::zero))
    }

    pub fn all_identities_hold(&self) -> bool {
        self.identities.iter().all(|c| c.holds)
    }

    pub fn to_json(&self, alg: &QuotientAlgebra) -> Value {
        let sys = alg.system();
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                json!({
                    "label": c.label,
                    "degree": c.degree,
                    "vertices": c.vertices.iter().map(|&v| sys.subset_name(v)).collect::<Vec<_>>(),
                    "idempotents": c.vertices.iter().zip(&c.parts).map(|(&v, p)| json!({
                        "vertex": sys.subset_name(v),
                        "terms": p.coords().len(),
                        "element": alg.render(p),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "type": self.tag,
            "components": comps,
            "identities": self.identities,
            "notes": self.notes,
        })
    }
}

/// Shared state of the per-type constructions: named access to E_I and
/// X_IJ, and the identity log.
pub(crate) struct Builder<'a, F> {
    pub alg: &'a QuotientAlgebra,
    pub irr: IrrData,
    pub identities: Vec<IdentityCheck>,
    pub notes: Vec<String>,
    pub inverted: Vec<String>,
    pub components: Vec<Option<Component<F>>>,
    _f: PhantomData<F>,
}

impl<'a, F: Scalar> Builder<'a, F> {
    pub fn new(alg: &'a QuotientAlgebra) -> Result<Self, DecompError> {
        let irr = irr_data(alg.system())?;
        let n = irr.len();
        Ok(Builder { alg, irr, identities: Vec::new(), notes: Vec::new(), inverted: Vec::new(), components: vec![None; n], _f: PhantomData })
    }

    pub fn set(&self, name: &str) -> Result<u32, DecompError> {
        Ok(self.alg.system().parse_subset(name)?)
    }

    /// E_I.
    pub fn e(&self, i: &str) -> Result<El<F>, DecompError> {
        Ok(self.alg.vertex(self.set(i)?))
    }

    /// X_IJ.
    pub fn x(&self, i: &str, j: &str) -> Result<El<F>, DecompError> {
        Ok(self.alg.edge(self.set(i)?, self.set(j)?)?)
    }

    pub fn prod(&self, factors: &[&El<F>]) -> El<F> {
        let mut it = factors.iter();
        let first = it.next().map(|f| (*f).clone()).unwrap_or_else(|| self.alg.unit());
        it.fold(first, |acc, f| self.alg.mul(&acc, f))
    }

    pub fn int(n: i64) -> F {
        F::from_int(n)
    }

    pub fn frac(n: i64, d: i64) -> F {
        F::from_rational(&Rational::new(n, d))
    }

    pub fn check(&mut self, name: impl Into<String>, holds: bool) -> bool {
        self.identities.push(IdentityCheck::new(name, holds));
        holds
    }

    pub fn check_eq(&mut self, name: impl Into<String>, a: &El<F>, b: &El<F>) -> bool {
        self.check(name, a == b)
    }

    pub fn check_zero(&mut self, name: impl Into<String>, a: &El<F>) -> bool {
        self.check(name, a.is_zero())
    }

    pub fn absorb(&mut self, prefix: &str, checks: &[IdentityCheck]) {
        for c in checks {
            self.identities.push(IdentityCheck::new(format!("{prefix}: {}", c.name), c.holds));
        }
    }

    /// F_I^λ as already registered.
    pub fn part(&self, label: &str, vertex: &str) -> Result<El<F>, DecompError> {
        let idx = self.label_index(label)?;
        let v = self.set(vertex)?;
        let comp = self.components[idx].as_ref().ok_or_else(|| DecompError::Mismatch(format!("component {label} not built yet")))?;
        Ok(comp.part(v).cloned().unwrap_or_else(El::zero))
    }

    fn label_index(&self, label: &str) -> Result<usize, DecompError> {
        self.irr.index(label).ok_or_else(|| DecompError::Mismatch(format!("unknown character {label}")))
    }

    /// Registers the component of `label` with idempotents on the named
    /// vertices and ψ_λ(e_ij) = F_I^λ · c·a · F_J^λ for each (I, J, c, a).
    pub fn component(&mut self, label: &str, parts: Vec<(&str, El<F>)>, gens: Vec<(&str, &str, F, El<F>)>) -> Result<(), DecompError> {
        let idx = self.label_index(label)?;
        let vertices = self.irr.components[idx].clone();
        let mut slots: Vec<Option<El<F>>> = vec![None; vertices.len()];
        for (name, p) in parts {
            let v = self.set(name)?;
            let k = vertices.iter().position(|&u| u == v).ok_or_else(|| DecompError::Mismatch(format!("vertex {name} is not in the component of {label}")))?;
            slots[k] = Some(p);
        }
        let parts: Vec<El<F>> = slots
            .into_iter()
            .enumerate()
            .map(|(k, p)| p.ok_or_else(|| DecompError::Mismatch(format!("no idempotent at {} for {label}", self.alg.system().subset_name(vertices[k])))))
            .collect::<Result<_, _>>()?;
        let mut generators = Vec::new();
        for (a, b, c, elem) in gens {
            let (va, vb) = (self.set(a)?, self.set(b)?);
            let i = vertices.iter().position(|&u| u == va).ok_or_else(|| DecompError::Mismatch(format!("vertex {a} is not in the component of {label}")))?;
            let j = vertices.iter().position(|&u| u == vb).ok_or_else(|| DecompError::Mismatch(format!("vertex {b} is not in the component of {label}")))?;
            let image = self.prod(&[&parts[i], &elem.scale(&c), &parts[j]]);
            generators.push((i, j, image));
        }
        self.components[idx] = Some(Component { label: label.to_string(), degree: vertices.len(), vertices, parts, generators });
        Ok(())
    }

    /// Chain component whose generators are the sandwiched edges X_IJ.
    pub fn chain(&mut self, label: &str, parts: Vec<(&str, El<F>)>) -> Result<(), DecompError> {
        let idx = self.label_index(label)?;
        let names: Vec<String> = self.irr.components[idx].iter().map(|&v| self.alg.system().subset_name(v)).collect();
        let mut gens = Vec::new();
        for w in names.windows(2) {
            gens.push((w[0].clone(), w[1].clone()));
            gens.push((w[1].clone(), w[0].clone()));
        }
        let gens: Vec<(&str, &str, F, El<F>)> = gens
            .iter()
            .map(|(a, b)| Ok((a.as_str(), b.as_str(), F::one(), self.x(a, b)?)))
            .collect::<Result<_, DecompError>>()?;
        self.component(label, parts, gens)
    }

    pub fn finish(self) -> Result<IdempotentFamily<F>, DecompError> {
        let failed: Vec<String> = self.identities.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect();
        if !failed.is_empty() {
            return Err(DecompError::IdentityFailed(failed));
        }
        let labels = self.irr.labels.clone();
        let components = self
            .components
            .into_iter()
            .zip(&labels)
            .map(|(c, l)| c.ok_or_else(|| DecompError::Mismatch(format!("no component built for {l}"))))
            .collect::<Result<_, _>>()?;
        Ok(IdempotentFamily {
            tag: self.alg.system().tag,
            irr: self.irr,
            components,
            identities: self.identities,
            notes: self.notes,
            inverted: self.inverted,
        })
    }
}

fn a1_family<F: Scalar>(alg: &QuotientAlgebra) -> Result<IdempotentFamily<F>, DecompError> {
    let mut b = Builder::new(alg)?;
    for mask in alg.system().subsets() {
        let name = alg.system().subset_name(mask);
        b.component(&format!("χ_{name}"), vec![(&name, alg.vertex(mask))], Vec::new())?;
    }
    b.finish()
}

/// The family over Q for the rational types A1^n, A3, B3 and A4.
pub fn build_rational_family(alg: &QuotientAlgebra) -> Result<IdempotentFamily<Rational>, DecompError> {
    match alg.system().tag {
        TypeTag::A1xN(_) => a1_family(alg),
        TypeTag::A3 => super::rank3::a3_family(alg),
        TypeTag::B3 => super::rank3::b3_family(alg),
        TypeTag::A4 => super::rank4::a4_family(alg),
        t => Err(DecompError::Unsupported(t.to_string())),
    }
}

/// Builds the family (F^λ) over Q(2cos(π/m)), asserting every intermediate
/// identity of the construction. The rational types are built over Q and
/// embedded.
pub fn build_family(alg: &QuotientAlgebra) -> Result<IdempotentFamily<NumberFieldElem>, DecompError> {
    match alg.system().tag {
        TypeTag::I2(_) => super::dihedral::i2_family(alg),
        _ => {
            let f = build_rational_family(alg)?;
            Ok(embed(f))
        }
    }
}

fn embed(f: IdempotentFamily<Rational>) -> IdempotentFamily<NumberFieldElem> {
    let conv = |e: &El<Rational>| e.map(|q| q.into_number_field());
    IdempotentFamily {
        tag: f.tag,
        irr: f.irr,
        components: f
            .components
            .iter()
            .map(|c| Component {
                label: c.label.clone(),
                degree: c.degree,
                vertices: c.vertices.clone(),
                parts: c.parts.iter().map(conv).collect(),
                generators: c.generators.iter().map(|(i, j, g)| (*i, *j, conv(g))).collect(),
            })
            .collect(),
        identities: f.identities,
        notes: f.notes,
        inverted: f.inverted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::build_system;
    use crate::omega::{compute_quotient, QuotientOptions};

    #[test]
    fn rank_one_uses_vertex_idempotents() {
        let a = compute_quotient(&build_system(TypeTag::A1xN(1)).unwrap(), &QuotientOptions::default()).unwrap();
        let f = build_rational_family(&a).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.part("χ_∅", 0).unwrap(), a.vertex(0));
        assert_eq!(f.part("χ_1", 1).unwrap(), a.vertex(1));
    }
}
