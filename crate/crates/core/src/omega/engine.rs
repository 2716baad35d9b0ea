//! Level-by-level enumeration of a path basis of kΩ.
//!
//! Words of length L are candidates `b·x` for basis words `b` of length L-1
//! and arrows `x`. Every relator `r` of degree `d` is multiplied on the left
//! by every basis word of length L-d; the resulting linear relations kill
//! candidates (the largest index wins). A relation that only involves older
//! words means the basis found so far was too large: it is added as an extra
//! relator and the enumeration restarts. When a level produces no survivors
//! the right action on the basis is complete, and every relator is checked
//! against every basis word. The finished right module is annihilated by the
//! ideal and is cyclic on the unit, so its dimension equals dim kΩ.

use std::collections::BTreeMap;

use super::{OmegaError, QuotientStats, Word};
use crate::arith::Rational;
use crate::linalg::{Accumulator, Echelon, SparseVec};
use crate::pathalg::{Path, PathElement, Quiver, Relator};

/// A relator flattened into arrow sequences.
#[derive(Clone, Debug)]
pub(super) struct FlatRelator {
    pub head: u32,
    pub degree: usize,
    pub paths: Vec<(Vec<u32>, Rational)>,
}

impl FlatRelator {
    pub fn from_element(head: u32, e: &PathElement<Rational>) -> Self {
        let paths: Vec<(Vec<u32>, Rational)> = e.terms().map(|(p, c)| (p.arrows.clone(), c.clone())).collect();
        let degree = paths.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
        FlatRelator { head, degree, paths }
    }
}

/// Prefix tree over the paths of all relators sharing one head and degree.
struct Trie {
    head: u32,
    degree: usize,
    nodes: Vec<TrieNode>,
    relators: usize,
}

#[derive(Default)]
struct TrieNode {
    children: BTreeMap<u32, usize>,
    terminals: Vec<(usize, Rational)>,
}

impl Trie {
    fn build(head: u32, degree: usize, rels: &[&FlatRelator]) -> Self {
        let mut nodes = vec![TrieNode::default()];
        for (ri, r) in rels.iter().enumerate() {
            for (p, c) in &r.paths {
                let mut n = 0;
                for &a in p {
                    n = match nodes[n].children.get(&a) {
                        Some(&c) => c,
                        None => {
                            nodes.push(TrieNode::default());
                            let id = nodes.len() - 1;
                            nodes[n].children.insert(a, id);
                            id
                        }
                    };
                }
                nodes[n].terminals.push((ri, c.clone()));
            }
        }
        Trie { head, degree, nodes, relators: rels.len() }
    }
}

pub(super) struct Enumeration {
    pub words: Vec<Word>,
    pub action: Vec<Vec<SparseVec<Rational>>>,
    pub length_bound: usize,
    pub stats: QuotientStats,
}

struct State<'a> {
    pos: &'a [u32],
    words: Vec<Word>,
    action: Vec<Vec<SparseVec<Rational>>>,
    by_len: Vec<Vec<u32>>,
}

impl State<'_> {
    /// u · x for an arrow x; every word in u must have its action filled.
    fn right_mul(&self, u: &SparseVec<Rational>, a: u32) -> SparseVec<Rational> {
        let p = self.pos[a as usize] as usize;
        let mut it = u.iter();
        if u.len() == 1 {
            let (b, c) = it.next().expect("one entry");
            return self.action[b as usize][p].scale(c);
        }
        let mut acc = Accumulator::new();
        for (b, c) in u.iter() {
            acc.add_vec(&self.action[b as usize][p], c);
        }
        acc.finish()
    }

    /// v·r for every relator of the trie, as relations on word indices.
    fn evaluate(&self, trie: &Trie, v: u32) -> Vec<SparseVec<Rational>> {
        let mut accs: Vec<Accumulator<Rational>> = (0..trie.relators).map(|_| Accumulator::new()).collect();
        let mut stack = vec![(0usize, SparseVec::unit(v))];
        while let Some((n, u)) = stack.pop() {
            let node = &trie.nodes[n];
            for (ri, c) in &node.terminals {
                accs[*ri].add_vec(&u, c);
            }
            for (&a, &child) in &node.children {
                let w = self.right_mul(&u, a);
                if !w.is_zero() {
                    stack.push((child, w));
                }
            }
        }
        accs.into_iter().map(|a| a.finish()).collect()
    }

    fn relation_as_element(&self, rel: &SparseVec<Rational>) -> PathElement<Rational> {
        let mut e = PathElement::zero();
        for (w, c) in rel.iter() {
            e.add_term(self.words[w as usize].path.clone(), c);
        }
        e
    }
}

pub(super) enum Outcome {
    Done(Enumeration),
    Collapse { head: u32, element: PathElement<Rational> },
}

pub(super) fn enumerate(q: &Quiver, pos: &[u32], relators: &[FlatRelator], max_length: usize) -> Result<Outcome, OmegaError> {
    let nv = q.vertex_count() as u32;
    let mut st = State { pos, words: Vec::new(), action: Vec::new(), by_len: vec![Vec::new()] };
    for v in 0..nv {
        st.words.push(Word { path: Path::vertex(v), parent: None, arrow: None });
        st.action.push(Vec::new());
        st.by_len[0].push(v);
    }

    let mut groups: BTreeMap<(u32, usize), Vec<&FlatRelator>> = BTreeMap::new();
    for r in relators {
        if r.degree == 0 {
            return Err(OmegaError::VertexCollapsed(q.system().subset_name(r.head)));
        }
        groups.entry((r.head, r.degree)).or_default().push(r);
    }
    let tries: Vec<Trie> = groups.iter().map(|(&(h, d), rs)| Trie::build(h, d, rs)).collect();

    let n_arrows = q.arrows().len();
    let mut generator = vec![true; n_arrows];
    let mut killed_rule: Vec<Vec<(u32, Rational)>> = vec![Vec::new(); n_arrows];
    let mut stats = QuotientStats::default();

    for level in 1..=max_length + 1 {
        let parents = st.by_len[level - 1].clone();
        let first_cand = st.words.len() as u32;
        for &b in &parents {
            let tail = st.words[b as usize].path.tail;
            let arrows = q.arrows_with_head(tail);
            let mut row = vec![SparseVec::new(); arrows.len()];
            for (p, &a) in arrows.iter().enumerate() {
                if generator[a as usize] {
                    let id = st.words.len() as u32;
                    let mut path = st.words[b as usize].path.clone();
                    path.arrows.push(a);
                    path.tail = q.arrow(a).tail;
                    st.words.push(Word { path, parent: Some(b), arrow: Some(a) });
                    st.action.push(Vec::new());
                    row[p] = SparseVec::unit(id);
                }
            }
            for (p, &a) in arrows.iter().enumerate() {
                if !generator[a as usize] {
                    let mut acc = Accumulator::new();
                    for (y, c) in &killed_rule[a as usize] {
                        acc.add_vec(&row[pos[*y as usize] as usize], c);
                    }
                    row[p] = acc.finish();
                }
            }
            st.action[b as usize] = row;
        }
        let n_cand = st.words.len() as u32 - first_cand;
        stats.candidates += n_cand as usize;

        let mut ech: Echelon<Rational> = Echelon::new();
        for trie in &tries {
            let useful = if level == 1 { trie.degree == 1 } else { trie.degree >= 2 };
            if !useful || trie.degree > level {
                continue;
            }
            for &v in &st.by_len[level - trie.degree] {
                if st.words[v as usize].path.tail != trie.head {
                    continue;
                }
                for rel in st.evaluate(trie, v) {
                    if rel.is_zero() {
                        continue;
                    }
                    stats.relations += 1;
                    if let Some(p) = ech.insert(rel) {
                        if p < first_cand {
                            let rel = ech.row(p).expect("inserted row").clone();
                            let head = st.words[p as usize].path.head;
                            return Ok(Outcome::Collapse { head, element: st.relation_as_element(&rel) });
                        }
                    }
                }
            }
        }
        ech.make_reduced();

        let mut remap = vec![u32::MAX; n_cand as usize];
        let mut next = first_cand;
        for c in 0..n_cand {
            if !ech.is_pivot(first_cand + c) {
                remap[c as usize] = next;
                next += 1;
            }
        }
        let map_id = |i: u32| if i < first_cand { i } else { remap[(i - first_cand) as usize] };
        for &b in &parents {
            let row = std::mem::take(&mut st.action[b as usize]);
            st.action[b as usize] = row.into_iter().map(|e| ech.reduce_full(e).map_indices(map_id)).collect();
        }
        if level == 1 {
            for c in 0..n_cand {
                let w = &st.words[(first_cand + c) as usize];
                let a = w.arrow.expect("level-one word") as usize;
                if ech.is_pivot(first_cand + c) {
                    generator[a] = false;
                    killed_rule[a] = ech
                        .reduce_full(SparseVec::unit(first_cand + c))
                        .iter()
                        .map(|(i, x)| (st.words[i as usize].arrow.expect("arrow word"), x.clone()))
                        .collect();
                }
            }
        }
        let cands: Vec<Word> = st.words.drain(first_cand as usize..).collect();
        st.action.truncate(first_cand as usize);
        let mut survivors = Vec::new();
        for (c, w) in cands.into_iter().enumerate() {
            if remap[c] != u32::MAX {
                survivors.push(remap[c]);
                st.words.push(w);
                st.action.push(Vec::new());
            }
        }
        if level == 1 {
            stats.generator_arrows = generator.iter().filter(|g| **g).count();
        }
        if survivors.is_empty() {
            stats.levels = level;
            if let Some((head, element)) = certify(&st, &tries, &mut stats) {
                return Ok(Outcome::Collapse { head, element });
            }
            let length_bound = level - 1;
            return Ok(Outcome::Done(Enumeration { words: st.words, action: st.action, length_bound, stats }));
        }
        if level > max_length {
            break;
        }
        st.by_len.push(survivors);
    }
    Err(OmegaError::NotStabilized { max_length, dim_so_far: st.words.len() })
}

/// Checks v·r = 0 for every basis word v and every relator r.
fn certify(st: &State<'_>, tries: &[Trie], stats: &mut QuotientStats) -> Option<(u32, PathElement<Rational>)> {
    for trie in tries {
        for (v, w) in st.words.iter().enumerate() {
            if w.path.tail != trie.head {
                continue;
            }
            for rel in st.evaluate(trie, v as u32) {
                stats.certified_products += 1;
                if !rel.is_zero() {
                    return Some((w.path.head, st.relation_as_element(&rel)));
                }
            }
        }
    }
    None
}

/// Relators flattened and grouped for the engine, including any extra ones
/// discovered in earlier attempts.
pub(super) fn flatten(relators: &[Relator]) -> Vec<FlatRelator> {
    relators.iter().map(|r| FlatRelator::from_element(r.head, &r.element)).collect()
}
