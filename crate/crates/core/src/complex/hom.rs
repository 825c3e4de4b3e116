//! Morphisms in the homotopy category.
//!
//! A family of degreewise maps `C^k -> D^{k+n}` is flattened into a vector of
//! basis-map coefficients. Chain maps are the kernel of the commutation
//! operator; null-homotopic ones are the image of the homotopy operator.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{ChainMap, MorphismMatrix, ProjComplex};
use crate::algebra::{BasisMap, Morphism, StarAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{quotient_basis, Matrix};
use crate::scalar::Scalar;

/// Basis of `Hom_K(C, D[n])` given by chain-map representatives.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub shift: i32,
    pub basis: Vec<ChainMap>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Copy, Debug)]
struct Slot {
    k: i32,
    r: usize,
    c: usize,
    b: BasisMap,
}

struct Layout {
    slots: Vec<Slot>,
    index: BTreeMap<(i32, usize, usize, u32), usize>,
}

impl Layout {
    fn new(alg: &StarAlgebra, src: &ProjComplex, tgt: &ProjComplex, shift: i32) -> Layout {
        let mut slots = Vec::new();
        let mut index = BTreeMap::new();
        for (&k, cols) in src.terms() {
            let rows = tgt.term(k + shift);
            for (r, &pr) in rows.iter().enumerate() {
                for (c, &pc) in cols.iter().enumerate() {
                    for b in alg.hom_basis(pc, pr) {
                        index.insert((k, r, c, b.ell), slots.len());
                        slots.push(Slot { k, r, c, b });
                    }
                }
            }
        }
        Layout { slots, index }
    }

    fn len(&self) -> usize {
        self.slots.len()
    }

    fn unit(&self, i: usize, src: &ProjComplex, tgt: &ProjComplex, shift: i32) -> MorphismMatrix {
        let s = self.slots[i];
        let mut m = MorphismMatrix::zero(tgt.term(s.k + shift), src.term(s.k));
        m.set(s.r, s.c, Morphism::basis(s.b));
        m
    }

    fn accumulate(&self, k: i32, m: &MorphismMatrix, sign: Scalar, out: &mut Matrix, col: usize) {
        for (r, c, x) in m.entries() {
            for (b, coeff) in x.terms() {
                let row = self.index[&(k, r, c, b.ell)];
                out.add_to(row, col, coeff * sign);
            }
        }
    }

    fn family(&self, v: &[Scalar], src: &ProjComplex, tgt: &ProjComplex, shift: i32) -> BTreeMap<i32, MorphismMatrix> {
        let mut maps: BTreeMap<i32, MorphismMatrix> = BTreeMap::new();
        for (s, &x) in self.slots.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            let m = maps.entry(s.k).or_insert_with(|| MorphismMatrix::zero(tgt.term(s.k + shift), src.term(s.k)));
            let cur = m.get(s.r, s.c).add(&Morphism::scaled(s.b, x));
            m.set(s.r, s.c, cur);
        }
        maps
    }
}

fn sign(n: i32) -> Scalar {
    if n % 2 == 0 {
        Scalar::ONE
    } else {
        -Scalar::ONE
    }
}

struct Operators {
    vars: Layout,
    homotopies: Layout,
    /// Commutation operator, `vars -> maps of shift n + 1`.
    delta: Matrix,
    /// Homotopy operator, `homotopies -> vars`.
    homotopy: Matrix,
}

fn operators(c: &ProjComplex, d: &ProjComplex, n: i32) -> Operators {
    let alg = *c.algebra();
    let vars = Layout::new(&alg, c, d, n);
    let eqs = Layout::new(&alg, c, d, n + 1);
    let homotopies = Layout::new(&alg, c, d, n - 1);
    let sg = sign(n);

    // delta(f)_k = (-1)^n d_D f_k - f_{k+1} d_C^k
    let mut delta = Matrix::zeros(eqs.len(), vars.len());
    for i in 0..vars.len() {
        let k = vars.slots[i].k;
        let f = vars.unit(i, c, d, n);
        if let Some(dd) = d.diff_ref(k + n) {
            eqs.accumulate(k, &dd.compose(&alg, &f), sg, &mut delta, i);
        }
        if let Some(dc) = c.diff_ref(k - 1) {
            eqs.accumulate(k - 1, &f.compose(&alg, dc), -Scalar::ONE, &mut delta, i);
        }
    }

    // h(s)_k = (-1)^n d_D s_k + s_{k+1} d_C^k
    let mut homotopy = Matrix::zeros(vars.len(), homotopies.len());
    for i in 0..homotopies.len() {
        let k = homotopies.slots[i].k;
        let s = homotopies.unit(i, c, d, n - 1);
        if let Some(dd) = d.diff_ref(k + n - 1) {
            vars.accumulate(k, &dd.compose(&alg, &s), sg, &mut homotopy, i);
        }
        if let Some(dc) = c.diff_ref(k - 1) {
            vars.accumulate(k - 1, &s.compose(&alg, dc), Scalar::ONE, &mut homotopy, i);
        }
    }
    Operators { vars, homotopies, delta, homotopy }
}

fn columns(m: &Matrix, cols: impl Iterator<Item = usize>) -> Vec<Vec<Scalar>> {
    cols.map(|c| (0..m.rows()).map(|r| m.get(r, c)).collect()).collect()
}

/// `dim Hom_K(C, D[n])`.
pub fn hom_dim(c: &ProjComplex, d: &ProjComplex, n: i32) -> usize {
    let ops = operators(c, d, n);
    ops.vars.len() - ops.delta.rank() - ops.homotopy.rank()
}

/// Basis of `Hom_K(C, D[n])`.
pub fn hom_space(c: &ProjComplex, d: &ProjComplex, n: i32) -> HomSpace {
    let ops = operators(c, d, n);
    let cycles = ops.delta.kernel();
    let boundaries = columns(&ops.homotopy, 0..ops.homotopies.len());
    let reps = quotient_basis(ops.vars.len(), &boundaries, &cycles);
    let basis = reps
        .iter()
        .map(|v| ChainMap::from_parts_unchecked(c.clone(), d.clone(), n, ops.vars.family(v, c, d, n)))
        .collect();
    HomSpace { shift: n, basis }
}

/// Summand `p` of the term in degree `k`.
type Position = (i32, usize);

/// Internal grading of the summands of a complex with homogeneous
/// differentials: `g(target) = g(source) + deg(entry)` along every nonzero
/// entry, and the first summand of each connected piece has degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    values: BTreeMap<i32, Vec<i64>>,
}

impl Grading {
    pub fn of(c: &ProjComplex) -> Result<Grading> {
        let alg = c.algebra();
        let mut values: BTreeMap<i32, Vec<Option<i64>>> =
            c.terms().iter().map(|(&k, t)| (k, vec![None; t.len()])).collect();
        // adjacency: (k, p) -> [(k', p', offset)] meaning g(k',p') = g(k,p) + offset
        let mut adj: BTreeMap<Position, Vec<(Position, i64)>> = BTreeMap::new();
        for (&k, d) in c.diffs() {
            for (r, col, x) in d.entries() {
                if x.is_zero() {
                    continue;
                }
                let (b, _) = match x.term_count() {
                    1 => x.terms().next().unwrap(),
                    _ => return Err(Error::NotGraded),
                };
                let deg = i64::from(alg.degree_of(b));
                adj.entry((k, col)).or_default().push(((k + 1, r), deg));
                adj.entry((k + 1, r)).or_default().push(((k, col), -deg));
            }
        }
        let nodes: Vec<(i32, usize)> = c.terms().iter().flat_map(|(&k, t)| (0..t.len()).map(move |p| (k, p))).collect();
        for start in nodes {
            if values[&start.0][start.1].is_some() {
                continue;
            }
            values.get_mut(&start.0).unwrap()[start.1] = Some(0);
            let mut stack = vec![start];
            while let Some(node) = stack.pop() {
                let g = values[&node.0][node.1].unwrap();
                for &(next, off) in adj.get(&node).map_or(&[][..], Vec::as_slice) {
                    let slot = &mut values.get_mut(&next.0).unwrap()[next.1];
                    match *slot {
                        Some(v) if v != g + off => return Err(Error::NotGraded),
                        Some(_) => {}
                        None => {
                            *slot = Some(g + off);
                            stack.push(next);
                        }
                    }
                }
            }
        }
        Ok(Grading {
            values: values.into_iter().map(|(k, v)| (k, v.into_iter().map(Option::unwrap).collect())).collect(),
        })
    }

    pub fn get(&self, k: i32, p: usize) -> i64 {
        self.values[&k][p]
    }
}

/// The internal-degree pieces of `Hom_K(C, D[n])`, each with its degree, in
/// increasing degree order. Zero pieces are omitted.
pub fn hom_space_graded(c: &ProjComplex, d: &ProjComplex, n: i32) -> Result<Vec<(i64, HomSpace)>> {
    let gc = Grading::of(c)?;
    let gd = Grading::of(d)?;
    let alg = *c.algebra();
    let ops = operators(c, d, n);
    let slot_degree =
        |s: &Slot, shift: i32| -> i64 { i64::from(alg.degree_of(s.b)) + gc.get(s.k, s.c) - gd.get(s.k + shift, s.r) };
    let var_deg: Vec<i64> = ops.vars.slots.iter().map(|s| slot_degree(s, n)).collect();
    let hom_deg: Vec<i64> = ops.homotopies.slots.iter().map(|s| slot_degree(s, n - 1)).collect();
    let mut degrees = var_deg.clone();
    degrees.sort_unstable();
    degrees.dedup();

    let mut out = Vec::new();
    for deg in degrees {
        let cols: Vec<usize> = (0..var_deg.len()).filter(|&i| var_deg[i] == deg).collect();
        let mut sub = Matrix::zeros(ops.delta.rows(), cols.len());
        for (j, &c0) in cols.iter().enumerate() {
            for r in 0..ops.delta.rows() {
                let v = ops.delta.get(r, c0);
                if !v.is_zero() {
                    sub.set(r, j, v);
                }
            }
        }
        let cycles: Vec<Vec<Scalar>> = sub
            .kernel()
            .into_iter()
            .map(|k| {
                let mut v = vec![Scalar::ZERO; var_deg.len()];
                for (j, &c0) in cols.iter().enumerate() {
                    v[c0] = k[j];
                }
                v
            })
            .collect();
        let boundaries = columns(&ops.homotopy, (0..hom_deg.len()).filter(|&i| hom_deg[i] == deg));
        let reps = quotient_basis(var_deg.len(), &boundaries, &cycles);
        if reps.is_empty() {
            continue;
        }
        let basis = reps
            .iter()
            .map(|v| ChainMap::from_parts_unchecked(c.clone(), d.clone(), n, ops.vars.family(v, c, d, n)))
            .collect();
        out.push((deg, HomSpace { shift: n, basis }));
    }
    Ok(out)
}
