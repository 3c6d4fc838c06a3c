//! Seeded constructions for the random population.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Kind, StructureConstants};
use crate::exact::{rat, Matrix, Rational};

use super::{lookup, AlgebraEntry, Annotations, CatalogError};

const COEFF_BOUND: i64 = 2;
/// Largest dimension the population draws, so that every member stays
/// within reach of the codimension-one search.
const POPULATION_MAX_DIM: usize = 6;

/// A right module for the demisemidirect recipe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// `q`-dimensional with zero action.
    Trivial(usize),
    /// The Lie algebra acting on itself by right multiplication.
    Adjoint,
    /// The two-dimensional natural module of `sl2` in the basis `e, h, f`.
    Natural,
    /// Explicit action matrices, one per basis element of the Lie algebra.
    Matrices(Vec<Matrix>),
    /// Random `q x q` matrices drawn from the seed; only valid for a
    /// one-dimensional Lie algebra.
    RandomScalar(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// Cyclic algebra; a missing tail is drawn from the seed.
    Cyclic { n: usize, tail: Option<Vec<Rational>> },
    Demisemidirect { lie: AlgebraEntry, module: ModuleSpec },
    DirectSum(Vec<AlgebraEntry>),
    CentralQuotient(AlgebraEntry),
    BaseChange(AlgebraEntry),
}

fn recipe_err(msg: impl Into<String>) -> CatalogError {
    CatalogError::Recipe(msg.into())
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
}

fn strongest_kind(l: &StructureConstants) -> Kind {
    l.strongest_kind().unwrap_or(Kind::Right)
}

/// Unimodular integer matrix `L U` with unit-diagonal triangular factors.
fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, small(rng));
            upper.set(j, i, small(rng));
        }
    }
    &lower * &upper
}

fn natural_sl2() -> Vec<Matrix> {
    // right action m.x = -x.m
    vec![
        Matrix::from_i64(2, 2, &[0, -1, 0, 0]),
        Matrix::from_i64(2, 2, &[-1, 0, 0, 1]),
        Matrix::from_i64(2, 2, &[0, 0, -1, 0]),
    ]
}

fn module_actions(g: &StructureConstants, spec: &ModuleSpec, rng: &mut ChaCha8Rng) -> Result<Vec<Matrix>, CatalogError> {
    let p = g.dim();
    Ok(match spec {
        ModuleSpec::Trivial(q) => vec![Matrix::zeros(*q, *q); p],
        ModuleSpec::Adjoint => (0..p).map(|i| g.right_mult_basis(i)).collect(),
        ModuleSpec::Natural => {
            if p != 3 {
                return Err(recipe_err("the natural module needs sl2"));
            }
            natural_sl2()
        }
        ModuleSpec::Matrices(ms) => ms.clone(),
        ModuleSpec::RandomScalar(q) => {
            if p != 1 {
                return Err(recipe_err("random actions need a one-dimensional Lie algebra"));
            }
            let entries: Vec<Rational> = (0..q * q).map(|_| small(rng)).collect();
            vec![Matrix::new(*q, *q, entries).expect("square")]
        }
    })
}

fn module_tag(spec: &ModuleSpec) -> String {
    match spec {
        ModuleSpec::Trivial(q) => format!("trivial{q}"),
        ModuleSpec::Adjoint => "adjoint".into(),
        ModuleSpec::Natural => "natural".into(),
        ModuleSpec::Matrices(_) => "given".into(),
        ModuleSpec::RandomScalar(q) => format!("scalar{q}"),
    }
}

/// Deterministic in `seed`; the result passes its declared identity check.
pub fn random_algebra(seed: u64, recipe: &Recipe) -> Result<AlgebraEntry, CatalogError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebra_err = |e: crate::algebra::AlgebraError| recipe_err(e.to_string());
    match recipe {
        Recipe::Cyclic { n, tail } => {
            let tail = match tail {
                Some(t) => t.clone(),
                None => {
                    let mut t = vec![rat(0)];
                    t.extend((1..*n).map(|_| small(&mut rng)));
                    t
                }
            };
            let l = StructureConstants::cyclic(*n, &tail).map_err(algebra_err)?;
            let kind = strongest_kind(&l);
            AlgebraEntry::new(format!("cyclic{n}-{seed:x}"), kind, l, Annotations::default())
        }
        Recipe::Demisemidirect { lie, module } => {
            if lie.kind != Kind::Lie {
                return Err(recipe_err(format!("`{}` is not a Lie algebra", lie.id)));
            }
            let actions = module_actions(&lie.constants, module, &mut rng)?;
            let l = StructureConstants::demisemidirect(&lie.constants, &actions).map_err(algebra_err)?;
            let kind = strongest_kind(&l);
            let id = format!("dsd-{}-{}-{seed:x}", lie.id, module_tag(module));
            AlgebraEntry::new(id, kind, l, Annotations::default())
        }
        Recipe::DirectSum(parts) => {
            let (first, rest) = parts
                .split_first()
                .ok_or_else(|| recipe_err("a direct sum needs at least one summand"))?;
            let mut l = first.right_leibniz();
            for p in rest {
                l = StructureConstants::direct_sum(&l, &p.right_leibniz());
            }
            let ids: Vec<&str> = parts.iter().map(|p| p.id.as_str()).collect();
            let kind = strongest_kind(&l);
            AlgebraEntry::new(format!("sum({})", ids.join("+")), kind, l, Annotations::default())
        }
        Recipe::CentralQuotient(e) => {
            let l = e.right_leibniz();
            let z = l.centers().center;
            if z.is_zero() {
                return Err(recipe_err(format!("`{}` has zero centre", e.id)));
            }
            let q = l.quotient(&z).map_err(algebra_err)?.algebra;
            let kind = strongest_kind(&q);
            AlgebraEntry::new(format!("{}/Z", e.id), kind, q, Annotations::default())
        }
        Recipe::BaseChange(e) => {
            let p = random_unimodular(e.constants.dim(), &mut rng);
            let to_new = p.inverse().expect("unimodular");
            let l = e.constants.change_basis(&p).map_err(algebra_err)?;
            let ann = e.annotations.transformed(&to_new);
            AlgebraEntry::new(format!("{}@{seed:x}", e.id), e.kind, l, ann)
        }
    }
}

fn builtin(id: &str) -> AlgebraEntry {
    lookup(id).expect("built-in id")
}

/// `count` seeded constructions cycling through the five recipes.
pub fn random_population(seed: u64, count: usize) -> Vec<AlgebraEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small_pool = ["abelian1", "solvable2", "heisenberg3", "symm3", "rotation3", "sl2", "cyclic4"];
    let central_pool = ["heisenberg3", "symm3"];
    let all = super::catalog();
    let mut out = Vec::with_capacity(count);
    let mut k = 0usize;
    while out.len() < count {
        let sub: u64 = rng.gen();
        let recipe = match k % 5 {
            0 => Recipe::Cyclic {
                n: rng.gen_range(2..=5),
                tail: None,
            },
            1 => {
                let options = [
                    ("sl2", ModuleSpec::Natural),
                    ("sl2", ModuleSpec::Trivial(1)),
                    ("solvable2", ModuleSpec::Adjoint),
                    ("solvable2", ModuleSpec::Trivial(1)),
                    ("abelian1", ModuleSpec::RandomScalar(rng.gen_range(1..=3))),
                ];
                let (g, m) = options.choose(&mut rng).expect("nonempty").clone();
                Recipe::Demisemidirect {
                    lie: builtin(g),
                    module: m,
                }
            }
            2 => {
                let a = builtin(small_pool.choose(&mut rng).expect("nonempty"));
                let b = builtin(small_pool.choose(&mut rng).expect("nonempty"));
                Recipe::DirectSum(vec![a, b])
            }
            3 => {
                let base = if rng.gen_bool(0.5) {
                    builtin(central_pool.choose(&mut rng).expect("nonempty"))
                } else {
                    let a = builtin(small_pool.choose(&mut rng).expect("nonempty"));
                    random_algebra(sub ^ 1, &Recipe::DirectSum(vec![a, builtin("abelian1")]))
                        .expect("direct sums are valid")
                };
                Recipe::CentralQuotient(base)
            }
            _ => Recipe::BaseChange(all.choose(&mut rng).expect("nonempty").clone()),
        };
        k += 1;
        let Ok(mut e) = random_algebra(sub, &recipe) else {
            continue;
        };
        if e.constants.dim() > POPULATION_MAX_DIM {
            continue;
        }
        e.id = format!("r{seed}.{}:{}", out.len(), e.id);
        out.push(e);
    }
    out
}
