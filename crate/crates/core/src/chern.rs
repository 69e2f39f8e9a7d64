//! Formal vector-bundle calculus and cycle pairings.
//!
//! A [`FormalBundle`] is a rank together with a total Chern class. Duals,
//! twists by line bundles and direct sums act on the total Chern class via the
//! splitting principle. A [`Cycle`] is anything a class can be paired against:
//! the fundamental class of a ring, the zero locus of a transverse section
//! (Poincaré dual to an Euler class), a bundle or product over another cycle,
//! or a [`CycleFunctional`] whose weights were computed elsewhere.

use std::collections::BTreeMap;

use crate::degree::DegreeCoeff;
use crate::error::{Error, Result};
use crate::graded_ring::{CohClass, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct FormalBundle {
    rank: usize,
    chern: CohClass,
}

impl FormalBundle {
    /// Wraps a total Chern class; it must start with 1 and vanish above `rank`.
    pub fn new(rank: usize, chern: CohClass) -> Result<FormalBundle> {
        if chern.constant_term() != DegreeCoeff::one() {
            return Err(Error::InvalidRelation {
                generator: "c(E)".into(),
                reason: "total Chern class must have constant term 1".into(),
            });
        }
        if let Some(top) = chern.max_degree() {
            if top as usize > rank {
                return Err(Error::DegreeTooHigh {
                    found: top,
                    dim: rank as u32,
                });
            }
        }
        Ok(FormalBundle { rank, chern })
    }

    pub fn trivial(ring: &Ring, rank: usize) -> FormalBundle {
        FormalBundle {
            rank,
            chern: ring.one(),
        }
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line(c1: &CohClass) -> Result<FormalBundle> {
        if !c1.is_zero() && c1.homogeneous_degree() != Some(1) {
            return Err(Error::NotHomogeneous { expected: 1 });
        }
        Ok(FormalBundle {
            rank: 1,
            chern: &c1.ring().one() + c1,
        })
    }

    /// Tangent bundle of the projective space with hyperplane class `hyperplane`:
    /// `c = (1 + h)^(dim + 1)`, truncated by the ring.
    pub fn tangent_projective(hyperplane: &CohClass, dim: usize) -> Result<FormalBundle> {
        let one = hyperplane.ring().one();
        let chern = (&one + hyperplane).pow(dim as u32 + 1);
        FormalBundle::new(dim, chern)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> &Ring {
        self.chern.ring()
    }

    /// Total Chern class.
    pub fn chern(&self) -> &CohClass {
        &self.chern
    }

    /// `c_k(E)`.
    pub fn c(&self, k: u32) -> CohClass {
        self.chern.component(k)
    }

    pub fn c1(&self) -> CohClass {
        self.c(1)
    }

    pub fn dual(&self) -> FormalBundle {
        let chern = (0..=self.rank as u32)
            .map(|i| {
                let ci = self.c(i);
                if i % 2 == 1 {
                    -ci
                } else {
                    ci
                }
            })
            .fold(self.ring().zero(), |acc, x| &acc + &x);
        FormalBundle {
            rank: self.rank,
            chern,
        }
    }

    /// `E ⊗ L` for a line bundle `L` with `c1(L) = t`:
    /// `c_k(E ⊗ L) = Σ_i binom(r - i, k - i) c_i(E) t^(k - i)`.
    pub fn twist(&self, line: &FormalBundle) -> Result<FormalBundle> {
        if line.rank != 1 {
            return Err(Error::NotALine(line.rank));
        }
        let ring = self.ring();
        ring.one().try_mul(line.chern())?;
        let t = line.c1();
        let r = self.rank as u32;
        let mut chern = ring.zero();
        for k in 0..=r {
            for i in 0..=k {
                let b = binom(r - i, k - i);
                if b == 0 {
                    continue;
                }
                let term = &self.c(i) * &t.pow(k - i);
                chern = &chern + &term.scale(&DegreeCoeff::constant(b));
            }
        }
        Ok(FormalBundle {
            rank: self.rank,
            chern,
        })
    }

    /// Whitney sum.
    pub fn sum(&self, other: &FormalBundle) -> Result<FormalBundle> {
        Ok(FormalBundle {
            rank: self.rank + other.rank,
            chern: self.chern.try_mul(&other.chern)?,
        })
    }

    /// Top Chern class.
    pub fn euler(&self) -> CohClass {
        self.c(self.rank as u32)
    }

    /// Determinant line `Λ^r E`.
    pub fn det(&self) -> FormalBundle {
        FormalBundle {
            rank: 1,
            chern: &self.ring().one() + &self.c1(),
        }
    }

    /// `L^{⊗k}` for a line bundle (negative `k` gives dual powers).
    pub fn line_power(&self, k: i64) -> Result<FormalBundle> {
        if self.rank != 1 {
            return Err(Error::NotALine(self.rank));
        }
        FormalBundle::line(&self.c1().scale(&DegreeCoeff::constant(k)))
    }

    /// Inverse of the total Chern class. Not itself a bundle's Chern class.
    pub fn chern_inverse(&self) -> CohClass {
        let ring = self.ring();
        let x = &self.chern - &ring.one();
        let minus_x = -&x;
        let mut inv = ring.one();
        let mut power = ring.one();
        // x is nilpotent: every term has positive degree, so x^(dim+1) = 0.
        for _ in 0..=ring.dim() {
            power = &power * &minus_x;
            if power.is_zero() {
                break;
            }
            inv = &inv + &power;
        }
        inv
    }
}

fn binom(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Linear functional on classes of one fixed degree, given by per-monomial weights.
///
/// Used for cycles whose Poincaré dual is not an Euler class: the weights are
/// counts computed by earlier pipelines.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleFunctional {
    ring: Ring,
    degree: u32,
    weights: BTreeMap<Vec<u32>, DegreeCoeff>,
}

impl CycleFunctional {
    pub fn new(ring: &Ring, degree: u32) -> CycleFunctional {
        CycleFunctional {
            ring: ring.clone(),
            degree,
            weights: BTreeMap::new(),
        }
    }

    /// Sets the weight of the monomial `Π name^exp`.
    pub fn weight(mut self, powers: &[(&str, u32)], value: DegreeCoeff) -> Result<CycleFunctional> {
        let mut exps = vec![0; self.ring.num_generators()];
        for (name, e) in powers {
            exps[self.ring.index_of(name)?] += e;
        }
        let deg = self.ring.monomial_degree(&exps);
        if deg != self.degree {
            return Err(Error::NotHomogeneous {
                expected: self.degree,
            });
        }
        self.weights.insert(exps, value);
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `Σ_m weight(m) · coeff(x, m)`; lower-degree terms pair to zero.
    pub fn pair(&self, x: &CohClass) -> Result<DegreeCoeff> {
        if x.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut total = DegreeCoeff::zero();
        for (exps, c) in x.terms() {
            let deg = self.ring.monomial_degree(exps);
            if deg > self.degree {
                return Err(Error::DegreeTooHigh {
                    found: deg,
                    dim: self.degree,
                });
            }
            if deg < self.degree {
                continue;
            }
            let w = self
                .weights
                .get(exps)
                .ok_or_else(|| Error::MissingWeight(exps.to_vec()))?;
            total += &(c * w);
        }
        Ok(total)
    }
}

/// A homology class that cohomology classes can be paired against.
#[derive(Clone, Debug)]
pub enum Cycle {
    /// The fundamental class of the ring's space.
    Fundamental(Ring),
    /// Weights injected from previously computed counts.
    Functional(CycleFunctional),
    /// Zero locus of a transverse section, Poincaré dual to `euler` in the
    /// ambient ring.
    ZeroLocus {
        ambient: Box<Cycle>,
        euler: CohClass,
    },
    /// Preimage of `base` in a ring extended by one more generator (a
    /// projective-space factor or a projectivized bundle); pairing pushes
    /// forward along the last generator.
    Fibered { base: Box<Cycle>, total: Ring },
}

impl Cycle {
    pub fn zero_locus(ambient: Cycle, euler: CohClass) -> Result<Cycle> {
        if euler.ring() != ambient.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(Cycle::ZeroLocus {
            ambient: Box::new(ambient),
            euler,
        })
    }

    pub fn fibered(base: Cycle, total: &Ring) -> Result<Cycle> {
        let n = total.num_generators();
        if n == 0 || base.ring() != &total.prefix(n - 1)? {
            return Err(Error::RingMismatch);
        }
        Ok(Cycle::Fibered {
            base: Box::new(base),
            total: total.clone(),
        })
    }

    /// The ring whose classes this cycle pairs with.
    pub fn ring(&self) -> &Ring {
        match self {
            Cycle::Fundamental(r) => r,
            Cycle::Functional(f) => f.ring(),
            Cycle::ZeroLocus { ambient, .. } => ambient.ring(),
            Cycle::Fibered { total, .. } => total,
        }
    }

    pub fn pair(&self, x: &CohClass) -> Result<DegreeCoeff> {
        match self {
            Cycle::Fundamental(r) => r.integrate(x),
            Cycle::Functional(f) => f.pair(x),
            Cycle::ZeroLocus { ambient, euler } => ambient.pair(&x.try_mul(euler)?),
            Cycle::Fibered { base, total } => base.pair(&total.pushforward(x)?),
        }
    }
}
