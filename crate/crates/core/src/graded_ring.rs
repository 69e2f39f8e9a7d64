//! Truncated graded polynomial rings.
//!
//! A [`Ring`] models the cohomology of a product of projective spaces,
//! optionally extended by the tautological class of a projectivized bundle.
//! Generators have even real degree, so the ring is commutative. Elements are
//! [`CohClass`]es: finite sums of reduced monomials with [`DegreeCoeff`]
//! coefficients.
//!
//! Two kinds of relation are supported:
//!
//! * `Nilpotent(m)`: `x^m = 0`, the hyperplane class of `P^(m-1)`;
//! * `ProjBundle([c1, .., cr])`: `l^r = -(c1 l^(r-1) + .. + cr)`, where the
//!   `ci` are classes of degree `i` in the ring of the preceding generators.
//!
//! Integration reads the coefficient of the top monomial: maximal exponent on
//! every nilpotent generator and `r - 1` on every bundle generator.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::degree::DegreeCoeff;
use crate::error::{Error, Result};

/// Relation imposed on a single generator.
#[derive(Clone, Debug, PartialEq)]
pub enum Relation {
    /// `x^order = 0`.
    Nilpotent(u32),
    /// `l^r + c1 l^(r-1) + .. + cr = 0` with `r = coefficients.len()`.
    ProjBundle(Vec<CohClass>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub name: String,
    /// Complex degree (half the real cohomological degree).
    pub degree: u32,
    pub relation: Relation,
}

/// Ordered generator declarations.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RingSpec {
    pub generators: Vec<GeneratorSpec>,
}

impl RingSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the hyperplane class of `P^dim`.
    pub fn projective(self, name: &str, dim: u32) -> Self {
        self.nilpotent(name, 1, dim + 1)
    }

    pub fn nilpotent(mut self, name: &str, degree: u32, order: u32) -> Self {
        self.generators.push(GeneratorSpec {
            name: name.to_string(),
            degree,
            relation: Relation::Nilpotent(order),
        });
        self
    }

    pub fn proj_bundle(mut self, name: &str, coefficients: Vec<CohClass>) -> Self {
        self.generators.push(GeneratorSpec {
            name: name.to_string(),
            degree: 1,
            relation: Relation::ProjBundle(coefficients),
        });
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Nilpotent {
        order: u32,
    },
    Bundle {
        rank: u32,
        /// Rewrite of `l^rank` as reduced terms, with exponents for this
        /// generator and the ones before it.
        rewrite: Vec<(Vec<u32>, DegreeCoeff)>,
    },
}

#[derive(Clone, Debug, PartialEq)]
struct Generator {
    name: String,
    degree: u32,
    kind: Kind,
}

impl Generator {
    fn top_exponent(&self) -> u32 {
        match &self.kind {
            Kind::Nilpotent { order } => order.saturating_sub(1),
            Kind::Bundle { rank, .. } => rank - 1,
        }
    }

    fn bound(&self) -> u32 {
        match &self.kind {
            Kind::Nilpotent { order } => *order,
            Kind::Bundle { rank, .. } => *rank,
        }
    }
}

#[derive(Debug, PartialEq)]
struct RingData {
    generators: Vec<Generator>,
    spec: RingSpec,
}

/// Handle to a validated ring; cheap to clone and shareable across threads.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.generators == other.0.generators
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.0.generators.iter().map(|g| g.name.as_str()).collect();
        write!(f, "Ring{names:?}")
    }
}

type Monomial = Vec<u32>;

impl Ring {
    /// Validates `spec` and builds the ring.
    pub fn new(spec: RingSpec) -> Result<Ring> {
        let mut generators: Vec<Generator> = Vec::with_capacity(spec.generators.len());
        for (index, g) in spec.generators.iter().enumerate() {
            if generators.iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
            let invalid = |reason: String| Error::InvalidRelation {
                generator: g.name.clone(),
                reason,
            };
            if g.degree == 0 {
                return Err(invalid("generator degree must be positive".into()));
            }
            let kind = match &g.relation {
                Relation::Nilpotent(order) => {
                    if *order == 0 {
                        return Err(invalid("nilpotency order must be positive".into()));
                    }
                    Kind::Nilpotent { order: *order }
                }
                Relation::ProjBundle(coeffs) => {
                    if g.degree != 1 {
                        return Err(invalid("a bundle generator has degree 1".into()));
                    }
                    if coeffs.is_empty() {
                        return Err(invalid("bundle rank must be positive".into()));
                    }
                    let rank = coeffs.len() as u32;
                    let mut rewrite = Vec::new();
                    for (i, c) in coeffs.iter().enumerate() {
                        let i = i as u32 + 1;
                        let base = &c.ring.0.generators;
                        if base.len() > index || base[..] != generators[..base.len()] {
                            return Err(invalid(format!(
                                "coefficient c{i} must lie in the ring of earlier generators"
                            )));
                        }
                        if !c.is_zero() && c.homogeneous_degree() != Some(i) {
                            return Err(invalid(format!(
                                "coefficient c{i} must be homogeneous of degree {i}"
                            )));
                        }
                        for (exps, coeff) in &c.terms {
                            let mut full = vec![0; index + 1];
                            full[..exps.len()].copy_from_slice(exps);
                            full[index] = rank - i;
                            rewrite.push((full, -coeff));
                        }
                    }
                    Kind::Bundle { rank, rewrite }
                }
            };
            generators.push(Generator {
                name: g.name.clone(),
                degree: g.degree,
                kind,
            });
        }
        Ok(Ring(Arc::new(RingData { generators, spec })))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn num_generators(&self) -> usize {
        self.0.generators.len()
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.0.generators.iter().map(|g| g.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Total complex dimension.
    pub fn dim(&self) -> u32 {
        self.0
            .generators
            .iter()
            .map(|g| g.degree * g.top_exponent())
            .sum()
    }

    pub fn top_monomial(&self) -> Monomial {
        self.0
            .generators
            .iter()
            .map(Generator::top_exponent)
            .collect()
    }

    pub fn monomial_degree(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.0.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// All reduced monomials of the given degree, in lexicographic order.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        fn walk(
            gens: &[Generator],
            i: usize,
            left: u32,
            cur: &mut Monomial,
            out: &mut Vec<Monomial>,
        ) {
            if i == gens.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for e in 0..gens[i].bound() {
                let used = e * gens[i].degree;
                if used > left {
                    break;
                }
                cur.push(e);
                walk(gens, i + 1, left - used, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        walk(&self.0.generators, 0, degree, &mut Vec::new(), &mut out);
        out
    }

    pub fn zero(&self) -> CohClass {
        CohClass {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> CohClass {
        self.constant(DegreeCoeff::one())
    }

    pub fn constant(&self, c: impl Into<DegreeCoeff>) -> CohClass {
        self.monomial(&vec![0; self.num_generators()], c)
    }

    /// `c` times the monomial with the given exponents, reduced.
    pub fn monomial(&self, exps: &[u32], c: impl Into<DegreeCoeff>) -> CohClass {
        assert_eq!(exps.len(), self.num_generators(), "exponent vector length");
        let mut terms = BTreeMap::new();
        self.reduce_into(&mut terms, exps.to_vec(), c.into());
        CohClass {
            ring: self.clone(),
            terms,
        }
    }

    /// The named generator as a class.
    pub fn gen(&self, name: &str) -> Result<CohClass> {
        let i = self.index_of(name)?;
        let mut exps = vec![0; self.num_generators()];
        exps[i] = 1;
        Ok(self.monomial(&exps, 1))
    }

    /// Adds `exps * coeff` to `acc` after applying every relation.
    fn reduce_into(
        &self,
        acc: &mut BTreeMap<Monomial, DegreeCoeff>,
        exps: Monomial,
        coeff: DegreeCoeff,
    ) {
        let gens = &self.0.generators;
        let mut stack = vec![(exps, coeff)];
        while let Some((exps, coeff)) = stack.pop() {
            if coeff.is_zero() {
                continue;
            }
            let dead = gens.iter().zip(&exps).any(|(g, e)| match g.kind {
                Kind::Nilpotent { order } => *e >= order,
                Kind::Bundle { .. } => false,
            });
            if dead {
                continue;
            }
            // Rewrite the last bundle generator that is out of range; its
            // rewrite only involves earlier generators and lower powers of itself.
            let over = gens
                .iter()
                .enumerate()
                .rev()
                .find_map(|(i, g)| match &g.kind {
                    Kind::Bundle { rank, rewrite } if exps[i] >= *rank => Some((i, *rank, rewrite)),
                    _ => None,
                });
            match over {
                Some((i, rank, rewrite)) => {
                    for (rel, rc) in rewrite {
                        let mut next = exps.clone();
                        next[i] -= rank;
                        for (n, r) in next.iter_mut().zip(rel) {
                            *n += r;
                        }
                        stack.push((next, &coeff * rc));
                    }
                }
                None => match acc.entry(exps) {
                    Entry::Vacant(v) => {
                        v.insert(coeff);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += &coeff;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                },
            }
        }
    }

    /// Coefficient of the top monomial; lower-degree terms integrate to zero.
    pub fn integrate(&self, x: &CohClass) -> Result<DegreeCoeff> {
        self.check(x)?;
        Ok(x.terms
            .get(&self.top_monomial())
            .cloned()
            .unwrap_or_default())
    }

    fn check(&self, x: &CohClass) -> Result<()> {
        if &x.ring == self {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// The ring generated by the first `n` generators.
    pub fn prefix(&self, n: usize) -> Result<Ring> {
        assert!(n <= self.num_generators());
        Ring::new(RingSpec {
            generators: self.0.spec.generators[..n].to_vec(),
        })
    }

    /// Extends this ring by a projective-space factor `P^dim`.
    pub fn extend_projective(&self, name: &str, dim: u32) -> Result<Ring> {
        let mut spec = self.0.spec.clone();
        spec = spec.projective(name, dim);
        Ring::new(spec)
    }

    /// Extends this ring by the tautological class of a projectivized bundle
    /// whose Chern classes `c1..cr` are given as classes of this ring.
    pub fn extend_proj_bundle(&self, name: &str, coefficients: Vec<CohClass>) -> Result<Ring> {
        Ring::new(self.0.spec.clone().proj_bundle(name, coefficients))
    }

    /// Whether `self` is generated by a leading subset of `other`'s generators.
    pub fn is_prefix_of(&self, other: &Ring) -> bool {
        let (a, b) = (&self.0.generators, &other.0.generators);
        a.len() <= b.len() && a[..] == b[..a.len()]
    }

    /// Pulls a class back from a prefix ring into this ring.
    pub fn embed(&self, x: &CohClass) -> Result<CohClass> {
        if !x.ring.is_prefix_of(self) {
            return Err(Error::RingMismatch);
        }
        let n = self.num_generators();
        let mut out = self.zero();
        for (exps, c) in &x.terms {
            let mut full = vec![0; n];
            full[..exps.len()].copy_from_slice(exps);
            // Already reduced in the prefix ring, and later relations do not
            // touch earlier generators.
            out.terms.insert(full, c.clone());
        }
        Ok(out)
    }

    /// Integrates out the last generator, returning a class of the prefix ring.
    ///
    /// For a bundle generator of rank `r` this is the fiber integral
    /// `l^(r-1) b -> b` (lower powers map to zero); for a nilpotent generator it
    /// integrates over the projective-space factor.
    pub fn pushforward(&self, x: &CohClass) -> Result<CohClass> {
        self.check(x)?;
        let n = self.num_generators();
        if n == 0 {
            return Err(Error::NotPushable(String::new()));
        }
        let top = self.0.generators[n - 1].top_exponent();
        let base = self.prefix(n - 1)?;
        let mut out = base.zero();
        for (exps, c) in &x.terms {
            if exps[n - 1] == top {
                out.terms.insert(exps[..n - 1].to_vec(), c.clone());
            }
        }
        Ok(out)
    }
}

/// Element of a truncated graded ring.
#[derive(Clone, PartialEq)]
pub struct CohClass {
    ring: Ring,
    terms: BTreeMap<Monomial, DegreeCoeff>,
}

impl CohClass {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reduced monomials and their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &DegreeCoeff)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[u32]) -> DegreeCoeff {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Coefficient of a monomial given by generator names, e.g. `&[("y", 1), ("a", 2)]`.
    pub fn coeff_of(&self, powers: &[(&str, u32)]) -> Result<DegreeCoeff> {
        let mut exps = vec![0; self.ring.num_generators()];
        for (name, e) in powers {
            exps[self.ring.index_of(name)?] += e;
        }
        Ok(self.coeff(&exps))
    }

    pub fn constant_term(&self) -> DegreeCoeff {
        self.coeff(&vec![0; self.ring.num_generators()])
    }

    /// The degree-`k` homogeneous component.
    pub fn component(&self, k: u32) -> CohClass {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.ring.monomial_degree(e) == k)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        CohClass {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `Some(k)` when every term has degree `k`; `None` for zero or mixed classes.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| self.ring.monomial_degree(e));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| self.ring.monomial_degree(e))
            .max()
    }

    pub fn try_add(&self, other: &CohClass) -> Result<CohClass> {
        self.ring.check(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_default();
            *slot += c;
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        Ok(CohClass {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &CohClass) -> Result<CohClass> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &CohClass) -> Result<CohClass> {
        self.ring.check(other)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                self.ring.reduce_into(&mut terms, exps, ca * cb);
            }
        }
        Ok(CohClass {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &DegreeCoeff) -> CohClass {
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        CohClass {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> CohClass {
        (0..n).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// Substitutes an integer for the degree symbol in every coefficient.
    pub fn at(&self, d: i64) -> CohClass {
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v.at(d)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        CohClass {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn neg_ref(&self) -> CohClass {
        self.scale(&DegreeCoeff::constant(-1))
    }
}

// Operator forms panic on ring mismatch; use the `try_*` methods when the
// rings are not known to agree.
impl Add for &CohClass {
    type Output = CohClass;
    fn add(self, rhs: &CohClass) -> CohClass {
        self.try_add(rhs)
            .expect("ring mismatch in CohClass addition")
    }
}

impl Sub for &CohClass {
    type Output = CohClass;
    fn sub(self, rhs: &CohClass) -> CohClass {
        self.try_sub(rhs)
            .expect("ring mismatch in CohClass subtraction")
    }
}

impl Mul for &CohClass {
    type Output = CohClass;
    fn mul(self, rhs: &CohClass) -> CohClass {
        self.try_mul(rhs)
            .expect("ring mismatch in CohClass multiplication")
    }
}

impl Add for CohClass {
    type Output = CohClass;
    fn add(self, rhs: CohClass) -> CohClass {
        &self + &rhs
    }
}

impl Sub for CohClass {
    type Output = CohClass;
    fn sub(self, rhs: CohClass) -> CohClass {
        &self - &rhs
    }
}

impl Mul for CohClass {
    type Output = CohClass;
    fn mul(self, rhs: CohClass) -> CohClass {
        &self * &rhs
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        self.neg_ref()
    }
}

impl Neg for CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        self.neg_ref()
    }
}

impl fmt::Display for CohClass {
    /// Terms by descending degree, e.g. `y^2 + (2*d - 3)*y*a + 7*a^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names: Vec<&str> = self.ring.generator_names().collect();
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            self.ring
                .monomial_degree(b)
                .cmp(&self.ring.monomial_degree(a))
                .then_with(|| b.cmp(a))
        });
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = exps
                .iter()
                .zip(&names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, n)| {
                    if *e == 1 {
                        n.to_string()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            let mut coeff = c.to_string();
            let negative = c.is_constant() && coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if i > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let needs_parens = !c.is_constant();
            match (mono.is_empty(), coeff.as_str()) {
                (true, _) => f.write_str(&coeff)?,
                (false, "1") => f.write_str(&mono.join("*"))?,
                (false, _) if needs_parens => write!(f, "({coeff})*{}", mono.join("*"))?,
                (false, _) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({self})", self.ring)
    }
}
