use std::collections::HashSet;

use leibalg::envelope::{associative_envelope, is_completely_reducible, OperatorFamily};
use leibalg::exact::{minimal_polynomial, rat, Matrix, Poly, Subspace, Vector};
use proptest::prelude::*;

fn generator(n: usize) -> impl Strategy<Value = Matrix> {
    let entries = n * n;
    prop_oneof![
        // diagonal
        prop::collection::vec(-1i64..=1, n).prop_map(move |d| {
            let mut m = Matrix::zeros(n, n);
            for (i, x) in d.into_iter().enumerate() {
                m.set(i, i, rat(x));
            }
            m
        }),
        // upper triangular
        prop::collection::vec(-1i64..=1, entries).prop_map(move |e| {
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    m.set(i, j, rat(e[i * n + j]));
                }
            }
            m
        }),
        prop::collection::vec(-1i64..=1, entries).prop_map(move |e| Matrix::from_i64(n, n, &e)),
    ]
}

fn family(max_n: usize) -> impl Strategy<Value = OperatorFamily> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(generator(n), 1..=2).prop_map(move |g| OperatorFamily::new(n, g))
    })
}

fn invariant(fam: &OperatorFamily, w: &Subspace) -> bool {
    fam.generators()
        .iter()
        .all(|g| w.basis().iter().all(|v| w.contains_vector(&g.apply(v))))
}

fn kernel_and_image(m: &Matrix) -> [Subspace; 2] {
    let n = m.rows();
    let cols: Vec<Vector> = (0..n).map(|j| m.column(j)).collect();
    [Subspace::spanned_by(n, &m.kernel()), Subspace::spanned_by(n, &cols)]
}

/// Powers of the linear factors and of the rational-root-free cofactor of
/// the minimal polynomial of `a`.
fn primary_pieces(a: &Matrix) -> Vec<Matrix> {
    let n = a.rows();
    let mut rest = minimal_polynomial(a).unwrap();
    let mut out = vec![a.clone()];
    for r in rest.rational_roots() {
        let lin = Poly::new(vec![-r.clone(), rat(1)]);
        let mut power = Poly::one();
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            power = power.mul(&lin);
            out.push(power.eval_matrix(a));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let mut power = Poly::one();
        for _ in 0..n {
            power = power.mul(&rest);
            out.push(power.eval_matrix(a));
        }
    }
    out
}

/// Invariant subspaces among eigen-kernels and images of envelope elements
/// and grid spans, closed under sums and intersections.
fn candidate_invariant_subspaces(fam: &OperatorFamily) -> Vec<Subspace> {
    let n = fam.ambient_dim();
    let env = associative_envelope(fam, true);
    let basis = env.basis();
    let mut elements = basis.clone();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            elements.push(a + b);
        }
    }
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut out: Vec<Subspace> = Vec::new();
    let mut push = |s: Subspace, out: &mut Vec<Subspace>| {
        if !s.is_zero() && !s.is_full() && invariant(fam, &s) && seen.insert(s.clone()) {
            out.push(s);
        }
    };
    for a in &elements {
        for m in primary_pieces(a) {
            for s in kernel_and_image(&m) {
                push(s, &mut out);
            }
        }
    }
    loop {
        let before = out.len();
        let snapshot = out.clone();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                push(a.sum(b), &mut out);
                push(a.intersect(b), &mut out);
            }
        }
        if out.len() == before {
            break;
        }
    }
    // invariant grid lines and the planes they span
    let total = 5usize.pow(n as u32);
    let mut lines = Vec::new();
    for code in 1..total {
        let mut c = code;
        let v: Vector = (0..n)
            .map(|_| {
                let d = (c % 5) as i64 - 2;
                c /= 5;
                rat(d)
            })
            .collect();
        let line = Subspace::spanned_by(n, &[v]);
        if invariant(fam, &line) && !lines.contains(&line) {
            lines.push(line);
        }
    }
    for (i, a) in lines.iter().enumerate() {
        push(a.clone(), &mut out);
        for b in &lines[i + 1..] {
            push(a.sum(b), &mut out);
        }
    }
    out
}

fn brute_force_completely_reducible(fam: &OperatorFamily) -> bool {
    let subs = candidate_invariant_subspaces(fam);
    subs.iter().all(|w| {
        subs.iter()
            .any(|u| u.intersect(w).is_zero() && u.dim() + w.dim() == fam.ambient_dim())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn envelope_is_closed_under_products(fam in family(4)) {
        let env = associative_envelope(&fam, false);
        let basis = env.basis();
        for a in &basis {
            for b in &basis {
                prop_assert!(env.contains(&(a * b)));
            }
        }
        for g in fam.generators() {
            prop_assert!(env.contains(g));
        }
    }

    #[test]
    fn trace_radical_is_a_two_sided_ideal(fam in family(4), unital in any::<bool>()) {
        let env = associative_envelope(&fam, unital);
        let rad = env.trace_radical();
        for r in rad.basis() {
            prop_assert!(env.contains(&r));
            for e in env.basis() {
                prop_assert!(rad.contains(&(&r * &e)));
                prop_assert!(rad.contains(&(&e * &r)));
            }
        }
    }

    #[test]
    fn complete_reducibility_matches_complement_search(fam in family(3)) {
        prop_assert_eq!(is_completely_reducible(&fam), brute_force_completely_reducible(&fam));
    }
}
