//! Sparse multivariate polynomials over the rationals in lex order, with a
//! budgeted Buchberger algorithm and a rational-point solver.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::{Poly, Rational};

type Monomial = Vec<u16>;

/// `x_0 > x_1 > ...` lexicographically; the leading term is the last key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.terms.insert(m, Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    fn lead(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    fn mul_term(&self, mono: &[u16], c: &Rational) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.iter().zip(mono).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &other.terms {
            for (m2, c2) in self.mul_term(m, c).terms {
                out.add_term(m2, c2);
            }
        }
        out
    }

    fn monic(&self) -> MPoly {
        match self.lead() {
            Some((_, c)) => {
                let inv = Rational::one() / c;
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Sets `x_var = value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2[var];
            m2[var] = 0;
            let mut factor = Rational::one();
            for _ in 0..e {
                factor *= value;
            }
            out.add_term(m2, c * factor);
        }
        out
    }

    /// As a univariate polynomial if only `var` occurs.
    pub fn as_univariate(&self, var: usize) -> Option<Poly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != var && e != 0) {
                return None;
            }
            let d = m[var] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] = c.clone();
        }
        Some(Poly::new(coeffs))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full reduction of `p` modulo `g` (all elements monic).
fn reduce(p: &MPoly, g: &[MPoly]) -> MPoly {
    let mut rem = MPoly::zero(p.nvars);
    let mut p = p.clone();
    while let Some((m, c)) = p.lead().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = g.iter().find(|h| divides(h.lead().unwrap().0, &m));
        match divisor {
            Some(h) => {
                let (hm, _) = h.lead().unwrap();
                let q: Monomial = m.iter().zip(hm).map(|(a, b)| a - b).collect();
                p = p.sub(&h.mul_term(&q, &c));
            }
            None => {
                p.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
    }
    rem
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerBudget {
    pub max_pairs: usize,
    pub max_terms: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget {
            max_pairs: 4000,
            max_terms: 4000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetExceeded;

/// Reduced lex Gröbner basis. An empty result means the zero ideal; a
/// constant element means the unit ideal.
pub fn groebner(polys: &[MPoly], budget: GroebnerBudget) -> Result<Vec<MPoly>, BudgetExceeded> {
    let mut g: Vec<MPoly> = Vec::new();
    for p in polys {
        let r = reduce(&p.monic(), &g);
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(vec![MPoly::constant(r.nvars, Rational::one())]);
            }
            g.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(BudgetExceeded);
        }
        let (mi, _) = g[i].lead().unwrap();
        let (mj, _) = g[j].lead().unwrap();
        let l = lcm(mi, mj);
        // coprime leading monomials reduce to zero
        if mi.iter().zip(mj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let qi: Monomial = l.iter().zip(mi).map(|(a, b)| a - b).collect();
        let qj: Monomial = l.iter().zip(mj).map(|(a, b)| a - b).collect();
        let one = Rational::one();
        let s = g[i].mul_term(&qi, &one).sub(&g[j].mul_term(&qj, &one));
        let r = reduce(&s, &g);
        if r.is_zero() {
            continue;
        }
        if r.len() > budget.max_terms {
            return Err(BudgetExceeded);
        }
        if r.is_constant() {
            return Ok(vec![MPoly::constant(r.nvars, Rational::one())]);
        }
        let k = g.len();
        g.push(r.monic());
        for i in 0..k {
            pairs.push((i, k));
        }
    }
    // minimise and interreduce
    let mut minimal: Vec<MPoly> = Vec::new();
    for (idx, p) in g.iter().enumerate() {
        let lm = p.lead().unwrap().0;
        let redundant = g.iter().enumerate().any(|(k, q)| {
            let lq = q.lead().unwrap().0;
            k != idx && divides(lq, lm) && (lq != lm || k < idx)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, p) in minimal.iter().enumerate() {
        let others: Vec<MPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, q)| q.clone())
            .collect();
        let lead = p.lead().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = p.clone();
        tail.terms.remove(&lead.0);
        let mut r = reduce(&tail, &others);
        r.add_term(lead.0, lead.1);
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| a.lead().unwrap().0.cmp(b.lead().unwrap().0));
    Ok(reduced)
}

/// Rational points of a polynomial system.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPoints {
    pub points: Vec<Vec<Rational>>,
    /// Some positive-dimensional component was only sampled.
    pub sampled: bool,
    /// The Gröbner budget was exhausted somewhere.
    pub budget_exceeded: bool,
}

const SAMPLES: [i64; 5] = [0, 1, 2, 3, -1];

/// Solves `polys = 0` over the rationals. Zero-dimensional parts are solved
/// exactly; a free affine remainder is represented by its base point and unit
/// offsets (enough to recover intersections of linear families); other
/// positive-dimensional parts are sampled at a few integer values.
pub fn rational_points(polys: &[MPoly], nvars: usize, budget: GroebnerBudget) -> RationalPoints {
    let mut out = RationalPoints::default();
    let assignment = vec![None; nvars];
    solve_rec(polys.to_vec(), assignment, budget, &mut out);
    out.points.sort();
    out.points.dedup();
    out
}

fn solve_rec(polys: Vec<MPoly>, assignment: Vec<Option<Rational>>, budget: GroebnerBudget, out: &mut RationalPoints) {
    let nvars = assignment.len();
    let free: Vec<usize> = (0..nvars).filter(|&i| assignment[i].is_none()).collect();
    let g = match groebner(&polys, budget) {
        Ok(g) => g,
        Err(BudgetExceeded) => {
            out.budget_exceeded = true;
            out.sampled = true;
            // fall back to sampling the remaining coordinates one at a time
            if let Some(&last) = free.last() {
                for s in SAMPLES {
                    let v = Rational::from_integer(s.into());
                    let next: Vec<MPoly> = polys.iter().map(|p| p.substitute(last, &v)).collect();
                    let mut a = assignment.clone();
                    a[last] = Some(v);
                    solve_rec(next, a, budget, out);
                }
            } else if polys.iter().all(|p| p.is_zero()) {
                out.points.push(finish(&assignment));
            }
            return;
        }
    };
    if g.iter().any(|p| p.is_constant()) {
        return;
    }
    if g.is_empty() {
        let base = finish(&assignment);
        out.points.push(base.clone());
        for &v in &free {
            let mut p = base.clone();
            p[v] = Rational::one();
            out.points.push(p);
        }
        return;
    }
    let Some(&last) = free.last() else {
        return;
    };
    if let Some(u) = g.iter().find_map(|p| p.as_univariate(last).filter(|u| u.degree().unwrap_or(0) > 0)) {
        for r in u.rational_roots() {
            let next: Vec<MPoly> = g.iter().map(|p| p.substitute(last, &r)).collect();
            let mut a = assignment.clone();
            a[last] = Some(r);
            solve_rec(next, a, budget, out);
        }
        return;
    }
    // `last` is unconstrained by the elimination ideal
    if g.iter().all(|p| p.terms.keys().all(|m| m[last] == 0)) {
        // the variable does not occur at all: it spans exactly
        let mut a = assignment.clone();
        a[last] = Some(Rational::zero());
        let mut sub = RationalPoints::default();
        solve_rec(g.clone(), a, budget, &mut sub);
        out.sampled |= sub.sampled;
        out.budget_exceeded |= sub.budget_exceeded;
        for p in sub.points {
            let mut q = p.clone();
            q[last] = Rational::one();
            out.points.push(p);
            out.points.push(q);
        }
        return;
    }
    out.sampled = true;
    for s in SAMPLES {
        let v = Rational::from_integer(s.into());
        let next: Vec<MPoly> = g.iter().map(|p| p.substitute(last, &v)).collect();
        let mut a = assignment.clone();
        a[last] = Some(v);
        solve_rec(next, a, budget, out);
    }
}

fn finish(assignment: &[Option<Rational>]) -> Vec<Rational> {
    assignment
        .iter()
        .map(|v| v.clone().unwrap_or_else(Rational::zero))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn x(i: usize) -> MPoly {
        MPoly::var(2, i)
    }

    #[test]
    fn groebner_of_circle_and_line() {
        // x^2 + y^2 - 1, x - y
        let c = x(0).mul(&x(0)).add(&x(1).mul(&x(1))).sub(&MPoly::constant(2, rat(1)));
        let l = x(0).sub(&x(1));
        let g = groebner(&[c, l], GroebnerBudget::default()).unwrap();
        // lex basis: y^2 - 1/2, x - y
        assert_eq!(g.len(), 2);
        let pts = rational_points(&g, 2, GroebnerBudget::default());
        assert!(pts.points.is_empty());
    }

    #[test]
    fn rational_points_of_product() {
        // x*y = 0 over Q: two lines
        let p = x(0).mul(&x(1));
        let pts = rational_points(&[p], 2, GroebnerBudget::default());
        for pt in &pts.points {
            assert!(pt[0].is_zero() || pt[1].is_zero());
        }
        assert!(pts.points.contains(&vec![rat(1), rat(0)]));
        assert!(pts.points.contains(&vec![rat(0), rat(1)]));
    }

    #[test]
    fn unit_ideal() {
        let g = groebner(&[x(0), x(0).sub(&MPoly::constant(2, rat(1)))], GroebnerBudget::default()).unwrap();
        assert!(g[0].is_constant());
    }

    #[test]
    fn free_family_is_spanned() {
        let pts = rational_points(&[], 2, GroebnerBudget::default());
        assert_eq!(pts.points.len(), 3);
        assert!(!pts.sampled);
    }
}
