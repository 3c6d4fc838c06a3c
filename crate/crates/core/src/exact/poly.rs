use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_rational, rat, ExactError, Matrix, Rational};

/// Univariate rational polynomial, coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lc_inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
                quot[k] = c;
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// `self / gcd(self, self')`, made monic.
    pub fn squarefree_part(&self) -> Result<Poly, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g).0.monic())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        assert!(a.is_square(), "polynomial evaluated at non-square matrix");
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * a;
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// `self(inner) mod modulus`.
    pub fn compose_mod(&self, inner: &Poly, modulus: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone())).rem(modulus);
        }
        acc
    }

    /// Distinct rational roots, ascending.
    ///
    /// Real roots of the squarefree part are isolated with a Sturm sequence
    /// and bisected until the interval is narrower than `1/(2 a_n^2)`; the
    /// simplest rational in such an interval is then the only possible
    /// rational root there, and is checked exactly.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.squarefree_part().expect("nonzero");
        if p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            p = p.div_rem(&Poly::t()).0;
        }
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        if p.degree() == Some(1) {
            roots.push(-&p.coeffs[0] / &p.coeffs[1]);
            roots.sort();
            return roots;
        }
        let ip = p.primitive_integer();
        let lead = ip.leading().unwrap().abs();
        let width_goal = Rational::new(BigInt::one(), BigInt::from(2) * lead.numer() * lead.numer());
        let sturm = p.sturm_sequence();
        let bound = p.cauchy_bound();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 && &hi - &lo < width_goal {
                let cand = simplest_between(&lo, &hi);
                if p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
                continue;
            }
            let mid = (&lo + &hi) / rat(2);
            if p.eval(&mid).is_zero() {
                roots.push(mid.clone());
            }
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        roots.sort();
        roots.dedup();
        roots
    }

    fn primitive_integer(&self) -> Poly {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &scaled {
            g = g.gcd(c);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        Poly::new(scaled.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }

    fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-Rational::one()));
        }
        seq
    }

    fn cauchy_bound(&self) -> Rational {
        let lc = self.leading().unwrap().abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max / lc
    }
}

fn sign_changes(seq: &[Poly], x: &Rational) -> i64 {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// The rational with the smallest denominator in the closed interval.
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if hi.is_negative() || (hi.is_zero() && lo.is_negative()) {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if &(fl.clone() + Rational::one()) <= hi {
        return fl + Rational::one();
    }
    // Both ends share the integer part: recurse on reciprocals of the
    // fractional parts (continued-fraction expansion).
    let a = lo - &fl;
    let b = hi - &fl;
    let inner = simplest_between(&b.recip(), &a.recip());
    fl + inner.recip()
}

/// Least-degree monic polynomial annihilating `a`.
pub fn minimal_polynomial(a: &Matrix) -> Result<Poly, ExactError> {
    if !a.is_square() {
        return Err(ExactError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut powers = vec![Matrix::identity(n).flatten()];
    let mut current = Matrix::identity(n);
    for k in 1..=n {
        current = &current * a;
        powers.push(current.flatten());
        let m = Matrix::from_columns(&powers, n * n).expect("lengths");
        if let Some(kv) = m.kernel().into_iter().next() {
            // The first k powers are independent, so the kernel is a line and
            // its last coordinate is nonzero.
            let lead = kv[k].clone();
            return Ok(Poly::new(kv.iter().map(|c| c / &lead).collect()));
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = format_rational(c);
            terms.push(match i {
                0 => cs,
                1 => format!("{cs}*t"),
                _ => format!("{cs}*t^{i}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn squarefree_examples() {
        assert_eq!(Poly::from_i64(&[0, 0, 1]).squarefree_part().unwrap(), Poly::t());
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let p = Poly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree_part().unwrap(), Poly::from_i64(&[-2, 1, 1]));
        assert_eq!(Poly::zero().squarefree_part(), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(minimal_polynomial(&Matrix::zeros(3, 3)).unwrap(), Poly::t());
        let jb = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        assert_eq!(minimal_polynomial(&jb).unwrap(), Poly::from_i64(&[0, 0, 1]));
        assert!(minimal_polynomial(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn rational_roots_found() {
        // (2t - 1)(t + 3)(t^2 + 1)
        let p = Poly::from_i64(&[-1, 2]).mul(&Poly::from_i64(&[3, 1])).mul(&Poly::from_i64(&[1, 0, 1]));
        assert_eq!(p.rational_roots(), vec![rat(-3), ratio(1, 2)]);
        assert!(Poly::from_i64(&[-2, 0, 1]).rational_roots().is_empty());
        assert_eq!(Poly::from_i64(&[0, 0, 1]).rational_roots(), vec![rat(0)]);
        // roots 7/3 and 22/7 are close together
        let q = Poly::from_i64(&[-7, 3]).mul(&Poly::from_i64(&[-22, 7]));
        assert_eq!(q.rational_roots(), vec![ratio(7, 3), ratio(22, 7)]);
    }

    #[test]
    fn ext_gcd_identity() {
        let a = Poly::from_i64(&[1, 0, 1]);
        let b = Poly::from_i64(&[-1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), Poly::one());
    }
}
