//! Named group constructions.

use std::fmt;

use thiserror::Error;

use crate::arith;
use crate::group::{FiniteGroup, GroupError, DEFAULT_MAX_ORDER};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z_n` on `n` points.
    Cyclic(u64),
    /// Symmetries of the `n`-gon on `n` points, order `2n`.
    Dihedral(u64),
    Symmetric(u64),
    Alternating(u64),
    /// `Z_p ⋊ Z_d` on `p` points via `x ↦ x + 1` and `x ↦ a·x`, `a` of
    /// multiplicative order `d`.
    Frobenius {
        p: u64,
        d: u64,
    },
    /// `(Z3 × Z3) ⋊ (Z2 × Z2)` on the 9 points of `F3²`, with `a` negating
    /// both coordinates and `b` swapping them.
    Z3SqV4,
    /// `(Z3 × Z3) ⋊ Z4` on `F3²`, with `c: (u, v) ↦ (−v, u)`, so that
    /// `x^c = y`, `y^c = x²` and `c² = −1`.
    Z3SqZ4,
    /// `AΓL(1, 8)` on the 8 points of `F8`: `x ↦ x + 1`, `x ↦ g·x`, `x ↦ x²`.
    AGammaL18,
}

const FAMILIES: &str =
    "cyclic, dihedral, symmetric, alternating, frobenius, z3sq_v4, z3sq_z4, agammal18";

impl Family {
    /// Parses a family name and its integer parameters, as on the command line.
    pub fn parse(name: &str, params: &[u64]) -> Result<Family, FamilyError> {
        let arity = |n: usize| -> Result<(), FamilyError> {
            if params.len() == n {
                Ok(())
            } else {
                Err(FamilyError::InvalidParams {
                    family: name.to_string(),
                    reason: format!("expected {n} parameter(s), got {}", params.len()),
                })
            }
        };
        let family = match name {
            "cyclic" => {
                arity(1)?;
                Family::Cyclic(params[0])
            }
            "dihedral" => {
                arity(1)?;
                Family::Dihedral(params[0])
            }
            "symmetric" => {
                arity(1)?;
                Family::Symmetric(params[0])
            }
            "alternating" => {
                arity(1)?;
                Family::Alternating(params[0])
            }
            "frobenius" => {
                arity(2)?;
                Family::Frobenius {
                    p: params[0],
                    d: params[1],
                }
            }
            "z3sq_v4" => {
                arity(0)?;
                Family::Z3SqV4
            }
            "z3sq_z4" => {
                arity(0)?;
                Family::Z3SqZ4
            }
            "agammal18" => {
                arity(0)?;
                Family::AGammaL18
            }
            other => {
                return Err(FamilyError::UnknownFamily(format!(
                    "{other} (known: {FAMILIES})"
                )))
            }
        };
        family.validate()?;
        Ok(family)
    }

    fn invalid(&self, reason: impl Into<String>) -> FamilyError {
        FamilyError::InvalidParams {
            family: self.to_string(),
            reason: reason.into(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            Family::Cyclic(n) | Family::Symmetric(n) if n == 0 => {
                Err(self.invalid("n must be at least 1"))
            }
            Family::Dihedral(n) if n < 3 => Err(self.invalid("n must be at least 3")),
            Family::Alternating(n) if n < 3 => Err(self.invalid("n must be at least 3")),
            Family::Frobenius { p, .. } if !arith::is_prime(p) => {
                Err(self.invalid(format!("{p} is not prime")))
            }
            Family::Frobenius { p, d } if d == 0 || (p - 1) % d != 0 => {
                Err(self.invalid(format!("{d} does not divide {}", p - 1)))
            }
            _ => Ok(()),
        }
    }

    /// Identifier used for file names, e.g. `frobenius_13_6`.
    pub fn file_stem(&self) -> String {
        self.to_string().replace(' ', "_")
    }

    pub fn expected_order(&self) -> u64 {
        let factorial = |n: u64| (1..=n).product::<u64>();
        match *self {
            Family::Cyclic(n) => n,
            Family::Dihedral(n) => 2 * n,
            Family::Symmetric(n) => factorial(n),
            Family::Alternating(n) => factorial(n) / 2,
            Family::Frobenius { p, d } => p * d,
            Family::Z3SqV4 | Family::Z3SqZ4 => 36,
            Family::AGammaL18 => 168,
        }
    }

    /// Degree and generators.
    pub fn generators(&self) -> Result<(usize, Vec<Permutation>), FamilyError> {
        self.validate()?;
        let perm = |degree: usize, f: &dyn Fn(u32) -> u32| {
            Permutation::from_fn(degree, f).expect("family maps are bijections")
        };
        Ok(match *self {
            Family::Cyclic(n) => {
                let n = n as usize;
                (n, vec![perm(n, &|i| (i + 1) % n as u32)])
            }
            Family::Dihedral(n) => {
                let m = n as u32;
                (
                    n as usize,
                    vec![
                        perm(n as usize, &|i| (i + 1) % m),
                        perm(n as usize, &|i| (m - i) % m),
                    ],
                )
            }
            Family::Symmetric(n) => {
                let m = n as u32;
                let mut gens = vec![perm(n as usize, &|i| (i + 1) % m)];
                if n > 2 {
                    gens.push(perm(n as usize, &|i| match i {
                        0 => 1,
                        1 => 0,
                        _ => i,
                    }));
                }
                (n as usize, gens)
            }
            Family::Alternating(n) => {
                let m = n as u32;
                let three = perm(n as usize, &|i| match i {
                    0 => 1,
                    1 => 2,
                    2 => 0,
                    _ => i,
                });
                let long = if n % 2 == 1 {
                    perm(n as usize, &|i| (i + 1) % m)
                } else {
                    perm(n as usize, &|i| if i == 0 { 0 } else { i % (m - 1) + 1 })
                };
                (n as usize, vec![three, long])
            }
            Family::Frobenius { p, d } => {
                let a = arith::pow_mod(arith::primitive_root(p), (p - 1) / d, p);
                let q = p as u32;
                let mut gens = vec![perm(p as usize, &|i| (i + 1) % q)];
                if d > 1 {
                    gens.push(perm(p as usize, &|i| ((i as u64 * a) % p) as u32));
                }
                (p as usize, gens)
            }
            Family::Z3SqV4 | Family::Z3SqZ4 => {
                // point 3u + v is the vector (u, v) of F3²
                let affine = |f: &dyn Fn(u32, u32) -> (u32, u32)| {
                    perm(9, &|i| {
                        let (u, v) = f(i / 3, i % 3);
                        3 * (u % 3) + v % 3
                    })
                };
                let x = affine(&|u, v| (u + 1, v));
                let y = affine(&|u, v| (u, v + 1));
                let gens = if *self == Family::Z3SqV4 {
                    vec![x, y, affine(&|u, v| (3 - u, 3 - v)), affine(&|u, v| (v, u))]
                } else {
                    vec![x, y, affine(&|u, v| (3 - v, u))]
                };
                (9, gens)
            }
            Family::AGammaL18 => {
                // F8 = F2[t]/(t³ + t + 1), elements as 3-bit integers
                let mul = |a: u32, b: u32| {
                    let mut acc = 0u32;
                    for k in 0..3 {
                        if b >> k & 1 == 1 {
                            acc ^= a << k;
                        }
                    }
                    for k in (3..5).rev() {
                        if acc >> k & 1 == 1 {
                            acc ^= 0b1011 << (k - 3);
                        }
                    }
                    acc
                };
                (
                    8,
                    vec![
                        perm(8, &|x| x ^ 1),
                        perm(8, &|x| mul(0b010, x)),
                        perm(8, &|x| mul(x, x)),
                    ],
                )
            }
        })
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup, FamilyError> {
        let (degree, gens) = self.generators()?;
        Ok(FiniteGroup::generate(degree, &gens, max_order)?)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic {n}"),
            Family::Dihedral(n) => write!(f, "dihedral {n}"),
            Family::Symmetric(n) => write!(f, "symmetric {n}"),
            Family::Alternating(n) => write!(f, "alternating {n}"),
            Family::Frobenius { p, d } => write!(f, "frobenius {p} {d}"),
            Family::Z3SqV4 => f.write_str("z3sq_v4"),
            Family::Z3SqZ4 => f.write_str("z3sq_z4"),
            Family::AGammaL18 => f.write_str("agammal18"),
        }
    }
}

pub fn construct_named(family: &Family) -> Result<FiniteGroup, FamilyError> {
    family.build(DEFAULT_MAX_ORDER)
}
