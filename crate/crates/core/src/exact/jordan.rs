use super::{minimal_polynomial, ExactError, Matrix, Poly};

/// Additive Jordan–Chevalley decomposition `A = S + N` of a rational matrix.
///
/// `S` and `N` are returned together with the polynomials that produce them
/// from `A`, which is what makes them rational without any eigenvalue
/// extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanChevalley {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
    /// `semisimple = semisimple_poly(A)`
    pub semisimple_poly: Poly,
    /// `nilpotent = nilpotent_poly(A)`
    pub nilpotent_poly: Poly,
    pub newton_steps: usize,
}

/// Newton iteration on the squarefree part `p` of the minimal polynomial `m`,
/// carried out in `Q[t]/(m)`: `s <- s - p(s) / p'(s)` starting from `s = t`.
/// Quadratic convergence means `ceil(log2(max multiplicity))` steps suffice.
pub fn jordan_chevalley(a: &Matrix) -> Result<JordanChevalley, ExactError> {
    let m = minimal_polynomial(a)?;
    let p = m.squarefree_part()?;
    let dp = p.derivative();
    let mut s = Poly::t().rem(&m);
    let mut steps = 0;
    loop {
        let ps = p.compose_mod(&s, &m);
        if ps.is_zero() {
            break;
        }
        let dps = dp.compose_mod(&s, &m);
        // p'(s) is a unit modulo m because gcd(p, p') = 1.
        let (g, inv, _) = dps.ext_gcd(&m);
        debug_assert_eq!(g, Poly::one(), "p'(s) invertible modulo m");
        s = s.sub(&ps.mul(&inv)).rem(&m);
        steps += 1;
    }
    let semisimple = s.eval_matrix(a);
    let nilpotent = a - &semisimple;
    Ok(JordanChevalley {
        semisimple,
        nilpotent,
        nilpotent_poly: Poly::t().sub(&s),
        semisimple_poly: s,
        newton_steps: steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_is_semisimple() {
        let d = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 2]);
        let jc = jordan_chevalley(&d).unwrap();
        assert_eq!(jc.semisimple, d);
        assert!(jc.nilpotent.is_zero());
    }

    #[test]
    fn strictly_upper_is_nilpotent() {
        let t = Matrix::from_i64(3, 3, &[0, 1, 5, 0, 0, 2, 0, 0, 0]);
        let jc = jordan_chevalley(&t).unwrap();
        assert!(jc.semisimple.is_zero());
        assert_eq!(jc.nilpotent, t);
    }

    #[test]
    fn shear() {
        let a = Matrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let jc = jordan_chevalley(&a).unwrap();
        assert_eq!(jc.semisimple, Matrix::identity(2));
        assert_eq!(jc.nilpotent, Matrix::from_i64(2, 2, &[0, 1, 0, 0]));
    }

    #[test]
    fn irrational_eigenvalues_stay_rational() {
        // companion of (t^2 - 2)^2: semisimple part has minimal polynomial t^2 - 2
        let c = Matrix::from_i64(4, 4, &[0, 0, 0, -4, 1, 0, 0, 0, 0, 1, 0, 4, 0, 0, 1, 0]);
        let jc = jordan_chevalley(&c).unwrap();
        assert_eq!(minimal_polynomial(&jc.semisimple).unwrap(), Poly::from_i64(&[-2, 0, 1]));
        assert!(jc.nilpotent.is_nilpotent());
        assert!(!jc.nilpotent.is_zero());
        assert_eq!(&jc.semisimple * &jc.nilpotent, &jc.nilpotent * &jc.semisimple);
    }
}
