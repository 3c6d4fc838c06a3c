//! Candidate subalgebras for the sampling-based deciders.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::StructureConstants;
use crate::exact::{rat, unit_vector, Matrix, Rational, Subspace, Vector};

use super::analysis::Analysis;

/// Seed for the sampled elements of every sweep.
pub const SWEEP_SEED: u64 = 0x5eed_0001;
/// Sampled coordinates are drawn from `[-GRID_BOUND, GRID_BOUND]`.
pub const GRID_BOUND: i64 = 2;
const SAMPLED_ELEMENTS: usize = 6;

/// Fixed-seed sample elements with small integer coordinates.
pub fn sample_elements(n: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..n).map(|_| rat(rng.gen_range(-GRID_BOUND..=GRID_BOUND))).collect())
        .collect()
}

/// Nonzero vectors of `{-1,0,1}^n` up to sign.
pub fn unit_grid(n: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v.into_iter().map(rat).collect());
        }
    }
    out
}

/// `ker R_x^n`, the Fitting null component of `R_x` (a subalgebra since
/// `R_x` is a derivation).
pub fn fitting_null(l: &StructureConstants, x: &[Rational]) -> Subspace {
    let n = l.dim();
    let r: Matrix = l.right_mult(x).pow(n as u32);
    Subspace::spanned_by(n, &r.kernel())
}

struct Collector {
    seen: HashSet<Subspace>,
    out: Vec<Subspace>,
}

impl Collector {
    fn push(&mut self, l: &StructureConstants, s: Subspace) {
        if !s.is_zero() && l.is_subalgebra(&s) && self.seen.insert(s.clone()) {
            self.out.push(s);
        }
    }
}

pub fn candidate_subalgebras(a: &Analysis) -> Vec<Subspace> {
    let l = a.algebra();
    let n = l.dim();
    let mut c = Collector {
        seen: HashSet::new(),
        out: Vec::new(),
    };
    c.push(l, l.full());
    if let Ok(nil) = a.nilradical() {
        c.push(l, nil.clone());
    }
    if let Ok(g) = a.radical() {
        c.push(l, g.clone());
    }
    c.push(l, a.leibniz_kernel().clone());
    c.push(l, a.centers().right.clone());
    c.push(l, l.product_subspace(&l.full(), &l.full()));
    let mut elements: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    elements.extend(sample_elements(n, SAMPLED_ELEMENTS, SWEEP_SEED));
    for x in &elements {
        c.push(l, fitting_null(l, x));
    }
    for x in unit_grid(n) {
        let s = Subspace::spanned_by(n, &[x]);
        c.push(l, l.subalgebra_closure(&s));
    }
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let s = Subspace::spanned_by(n, &[elements[i].clone(), elements[j].clone()]);
            c.push(l, l.subalgebra_closure(&s));
        }
    }
    c.out
}
