#![allow(dead_code)]

use leibalg::algebra::StructureConstants;
use leibalg::catalog::{catalog, random_population, AlgebraEntry};
use leibalg::exact::{rat, Matrix, Rational, Subspace, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const POPULATION_SEED: u64 = 11;

/// Built-in entries followed by a small seeded population.
pub fn population(random: usize) -> Vec<AlgebraEntry> {
    let mut all = catalog();
    all.extend(random_population(POPULATION_SEED, random));
    all
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vector {
    (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect()
}

/// Random rational with small numerator and denominator.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into())
}

pub fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::spanned_by(n, &vs.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>())
}

/// Unimodular `L U` with small integer entries.
pub fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, rat(rng.gen_range(-2..=2)));
            upper.set(j, i, rat(rng.gen_range(-2..=2)));
        }
    }
    &lower * &upper
}

/// Direct evaluation of the right identity `[x,[y,z]] = [[x,y],z] - [[x,z],y]`.
pub fn right_defect(l: &StructureConstants, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let lhs = l.product(x, &l.product(y, z));
    let a = l.product(&l.product(x, y), z);
    let b = l.product(&l.product(x, z), y);
    lhs.iter().zip(a.iter().zip(&b)).map(|(p, (q, r))| p - q + r).collect()
}

/// Direct evaluation of the left identity `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`.
pub fn left_defect(l: &StructureConstants, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let lhs = l.product(x, &l.product(y, z));
    let a = l.product(&l.product(x, y), z);
    let b = l.product(y, &l.product(x, z));
    lhs.iter().zip(a.iter().zip(&b)).map(|(p, (q, r))| p - q - r).collect()
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(|x| *x == rat(0))
}
