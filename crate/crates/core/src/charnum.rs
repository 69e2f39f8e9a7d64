//! Characteristic numbers of singular plane curves of degree `d`.
//!
//! Every count is an Euler-class integral over a space of (curve, point)
//! pairs, corrected by the contributions of the boundary strata where the
//! section degenerates. Each correction is recorded as a [`CorrectionTerm`]
//! so the intermediate numbers stay inspectable. The degree `d` is either a
//! concrete integer or the formal variable of [`DegreeCoeff`].
//!
//! Notation for the spaces used below: `y` is the hyperplane class of the
//! linear system of curves (a `P^1`, `P^2` or `P^3` after imposing point
//! conditions), `a`, `a2`, `a3` are hyperplane classes of copies of the plane
//! (the marked singular points) and `l` is `c1` of the dual tautological line
//! on the projectivized tangent bundle of the plane.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::chern::{Cycle, CycleFunctional, FormalBundle};
use crate::degree::DegreeCoeff;
use crate::error::{Error, Result};
use crate::graded_ring::{CohClass, Ring, RingSpec};
use crate::kontsevich::binomial;

/// The nine characteristic numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharNum {
    /// One node.
    N1,
    /// One node on a fixed line.
    N11,
    /// One cusp.
    K1,
    /// One cusp on a fixed line.
    K11,
    /// One tacnode.
    T1,
    /// Two nodes.
    N2,
    /// Two nodes, one of them on a fixed line.
    N21,
    /// One cusp and one node.
    K2,
    /// Three nodes.
    N3,
}

impl CharNum {
    pub const ALL: [CharNum; 9] = [
        CharNum::N1,
        CharNum::N11,
        CharNum::K1,
        CharNum::K11,
        CharNum::T1,
        CharNum::N2,
        CharNum::N21,
        CharNum::K2,
        CharNum::N3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CharNum::N1 => "N1",
            CharNum::N11 => "N11",
            CharNum::K1 => "K1",
            CharNum::K11 => "K11",
            CharNum::T1 => "T1",
            CharNum::N2 => "N2",
            CharNum::N21 => "N21",
            CharNum::K2 => "K2",
            CharNum::N3 => "N3",
        }
    }

    /// Lowest degree for which the closed form counts what it claims.
    pub fn min_degree(self) -> i64 {
        match self {
            CharNum::N1 | CharNum::N11 | CharNum::K1 | CharNum::N2 => 1,
            _ => 3,
        }
    }
}

impl fmt::Display for CharNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CharNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<CharNum> {
        CharNum::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Counts of zeros of affine bundle maps over the diagonal strata.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Excess {
    /// Second node colliding with the first.
    Node2,
    /// Same, with the first node on a fixed line.
    Node2Line,
    /// Node colliding with a cusp.
    Cusp2,
    /// Third node colliding with one of two nodes.
    Node3,
}

impl Excess {
    pub const ALL: [Excess; 4] = [
        Excess::Node2,
        Excess::Node2Line,
        Excess::Cusp2,
        Excess::Node3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Excess::Node2 => "node2",
            Excess::Node2Line => "node2_line",
            Excess::Cusp2 => "cusp2",
            Excess::Node3 => "node3",
        }
    }

    pub fn min_degree(self) -> i64 {
        match self {
            Excess::Node2 => 1,
            _ => 3,
        }
    }
}

impl fmt::Display for Excess {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Excess {
    type Err = Error;

    fn from_str(s: &str) -> Result<Excess> {
        Excess::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// What a correction term counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    CharNum(CharNum),
    Excess(Excess),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::CharNum(c) => write!(f, "{c}"),
            Quantity::Excess(e) => write!(f, "N({e})"),
        }
    }
}

/// One boundary stratum's contribution: `multiplicity * value`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectionTerm {
    pub stratum: &'static str,
    pub multiplicity: u32,
    pub quantity: Quantity,
    pub value: DegreeCoeff,
}

impl CorrectionTerm {
    pub fn new(
        stratum: &'static str,
        multiplicity: u32,
        quantity: Quantity,
        value: DegreeCoeff,
    ) -> Result<CorrectionTerm> {
        if !matches!(multiplicity, 1 | 2 | 3 | 4 | 6) {
            return Err(Error::InvalidMultiplicity(multiplicity));
        }
        Ok(CorrectionTerm {
            stratum,
            multiplicity,
            quantity,
            value,
        })
    }

    pub fn contribution(&self) -> DegreeCoeff {
        self.value.scale(self.multiplicity)
    }
}

// Local-model multiplicities. A cusp is a zero of the two-node section of
// order 3, a tacnode of order 4; the cusp-node stratum is covered twice by
// the affine map; the tacnode absorbs two node collisions on the three-node
// diagonal and contributes 4 solutions there as well.
const CUSP_IN_NODE: u32 = 3;
const TACNODE_IN_CUSP: u32 = 4;
const CUSP_NODE_COVER: u32 = 2;
const TACNODE_IN_NODES: u32 = 4;
const TACNODE_IN_TRIPLE_DIAGONAL: u32 = 2;
const DIAGONALS_OF_THIRD_POINT: u32 = 2;
const NODE_PAIRS_IN_TRIPLE: u32 = 6;

/// One Euler-class count minus its boundary corrections, divided by the
/// order of the symmetry group acting on the marked points.
#[derive(Clone, Debug, PartialEq)]
pub struct PipelineStep {
    pub label: &'static str,
    pub euler_term: DegreeCoeff,
    pub corrections: Vec<CorrectionTerm>,
    pub symmetry: u32,
}

impl PipelineStep {
    /// Sum of all correction contributions.
    pub fn boundary_total(&self) -> DegreeCoeff {
        self.corrections
            .iter()
            .fold(DegreeCoeff::zero(), |acc, t| acc + t.contribution())
    }

    /// Euler term minus the boundary total, before the symmetry quotient.
    pub fn ordered(&self) -> DegreeCoeff {
        &self.euler_term - &self.boundary_total()
    }

    pub fn result(&self) -> Result<DegreeCoeff> {
        self.ordered().div_exact(self.symmetry as i64, self.label)
    }
}

/// A characteristic number together with its validity threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct CharNumRecord {
    pub name: CharNum,
    pub min_degree: i64,
    pub value: DegreeCoeff,
}

/// How the degree is supplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Numeric(i64),
    Symbolic,
}

impl Degree {
    fn coeff(self) -> DegreeCoeff {
        match self {
            Degree::Numeric(d) => DegreeCoeff::constant(d),
            Degree::Symbolic => DegreeCoeff::var(),
        }
    }

    fn check(self, name: &str, min: i64) -> Result<()> {
        match self {
            Degree::Numeric(d) if d < min => Err(Error::BelowMinDegree {
                name: name.to_string(),
                d,
                min,
            }),
            _ => Ok(()),
        }
    }
}

/// `L ⊕ L ⊗ T*P^2` with `c1(L) = y + d h`: value and first derivative of the
/// curve's equation at the point with hyperplane class `h`.
fn node_bundle(ring: &Ring, h: &str, d: &DegreeCoeff) -> Result<FormalBundle> {
    let l = curve_line(ring, h, d)?;
    let cot = FormalBundle::tangent_projective(&ring.gen(h)?, 2)?.dual();
    l.sum(&cot.twist(&l)?)
}

/// `O(1) ⊠ O(d)` on the linear system times the plane with class `h`.
fn curve_line(ring: &Ring, h: &str, d: &DegreeCoeff) -> Result<FormalBundle> {
    FormalBundle::line(&(ring.gen("y")? + ring.gen(h)?.scale(d)))
}

/// Every ring, cycle and intermediate count of the pipelines for one degree.
#[derive(Clone, Debug)]
pub struct Pipelines {
    d: DegreeCoeff,
    /// `P^2 × P^2`, carrier of the one-node cycle in a 2-dimensional system.
    ring_p2: Ring,
    /// `P^3 × P^2`.
    ring_p3: Ring,
    /// `P^3 × P(TP^2)`.
    ring_lambda: Ring,
    /// `P^3 × P^2 × P^2`.
    ring_two_points: Ring,
    node_once: CycleFunctional,
    node_twice: CycleFunctional,
    ordered_node_pairs: CycleFunctional,
    values: BTreeMap<CharNum, DegreeCoeff>,
    excess: BTreeMap<Excess, PipelineStep>,
    steps: BTreeMap<CharNum, PipelineStep>,
}

impl Pipelines {
    /// Runs every pipeline with the given degree, numeric or formal.
    pub fn new(d: DegreeCoeff) -> Result<Pipelines> {
        let ring_p1 = Ring::new(RingSpec::new().projective("y", 1).projective("a", 2))?;
        let ring_p2 = Ring::new(RingSpec::new().projective("y", 2).projective("a", 2))?;
        let ring_p3 = Ring::new(RingSpec::new().projective("y", 3).projective("a", 2))?;
        let a3 = ring_p3.gen("a")?;
        let ring_lambda = ring_p3
            .extend_proj_bundle("l", vec![a3.scale(&3.into()), a3.pow(2).scale(&3.into())])?;
        let ring_two_points = ring_p3.extend_projective("a2", 2)?;

        let mut values = BTreeMap::new();

        // Single-point counts.
        let n1 = ring_p1.integrate(&node_bundle(&ring_p1, "a", &d)?.euler())?;
        let e2 = node_bundle(&ring_p2, "a", &d)?.euler();
        let n11 = ring_p2.integrate(&(ring_p2.gen("a")? * e2))?;
        values.insert(CharNum::N1, n1.clone());
        values.insert(CharNum::N11, n11.clone());

        let node_once = CycleFunctional::new(&ring_p2, 1)
            .weight(&[("y", 1)], n1.clone())?
            .weight(&[("a", 1)], n11.clone())?;
        // A node at a point of a fixed line, with two fewer point conditions,
        // passes through a further point in one way: the conditions are linear.
        let node_twice = CycleFunctional::new(&ring_p3, 2)
            .weight(&[("y", 2)], n1.clone())?
            .weight(&[("y", 1), ("a", 1)], n11.clone())?
            .weight(&[("a", 2)], DegreeCoeff::one())?;
        let node_once_cycle = Cycle::Functional(node_once.clone());
        let node_twice_cycle = Cycle::Functional(node_twice.clone());
        let node_on_line = Cycle::zero_locus(node_twice_cycle.clone(), ring_p3.gen("a")?)?;

        // Cusps: the Hessian along the node, a section of (L ⊗ K)^2.
        let hessian = |ring: &Ring| -> Result<CohClass> {
            let canonical = FormalBundle::tangent_projective(&ring.gen("a")?, 2)?
                .dual()
                .det();
            Ok(curve_line(ring, "a", &d)?
                .twist(&canonical)?
                .line_power(2)?
                .euler())
        };
        let k1 = node_once_cycle.pair(&hessian(&ring_p2)?)?;
        let k11 = node_on_line.pair(&hessian(&ring_p3)?)?;
        values.insert(CharNum::K1, k1.clone());
        values.insert(CharNum::K11, k11.clone());

        // Cusps with their kernel direction, inside P(TP^2) over the node cycle.
        let lam = FormalBundle::line(&ring_lambda.gen("l")?)?;
        let l_lam = curve_line(&ring_lambda, "a", &d)?;
        let cot_lam = FormalBundle::tangent_projective(&ring_lambda.gen("a")?, 2)?.dual();
        let kernel = cot_lam.twist(&lam.twist(&l_lam)?)?;
        let cusp_cycle = Cycle::zero_locus(
            Cycle::fibered(node_twice_cycle.clone(), &ring_lambda)?,
            kernel.euler(),
        )?;
        // Third derivative along the kernel direction.
        let third = lam.line_power(3)?.twist(&l_lam)?;
        let t1 = cusp_cycle.pair(&third.euler())?;
        values.insert(CharNum::T1, t1.clone());

        let mut excess = BTreeMap::new();
        let mut steps = BTreeMap::new();
        let k = |q: CharNum| Quantity::CharNum(q);

        // Node collisions.
        let diag_class = |ring: &Ring, h: &str| -> Result<CohClass> {
            let v = node_bundle(ring, h, &d)?;
            let tp = FormalBundle::tangent_projective(&ring.gen(h)?, 2)?;
            Ok((v.chern() * &tp.chern_inverse()).component(1))
        };
        let node2 = PipelineStep {
            label: "node2",
            euler_term: node_once_cycle.pair(&diag_class(&ring_p2, "a")?)?,
            corrections: vec![CorrectionTerm::new("cusp", 1, k(CharNum::K1), k1.clone())?],
            symmetry: 1,
        };
        let node2_line = PipelineStep {
            label: "node2_line",
            euler_term: node_on_line.pair(&diag_class(&ring_p3, "a")?)?,
            corrections: vec![CorrectionTerm::new(
                "cusp",
                1,
                k(CharNum::K11),
                k11.clone(),
            )?],
            symmetry: 1,
        };

        let second_node = |base: Cycle| -> Result<DegreeCoeff> {
            let total = base.ring().extend_projective("a2", 2)?;
            let e = node_bundle(&total, "a2", &d)?.euler();
            Cycle::fibered(base, &total)?.pair(&e)
        };

        let n2_step = PipelineStep {
            label: "N2",
            euler_term: second_node(node_once_cycle.clone())?,
            corrections: vec![
                CorrectionTerm::new(
                    "diagonal",
                    1,
                    Quantity::Excess(Excess::Node2),
                    node2.result()?,
                )?,
                CorrectionTerm::new("cusp", CUSP_IN_NODE, k(CharNum::K1), k1.clone())?,
            ],
            symmetry: 2,
        };
        let n21_step = PipelineStep {
            label: "N21",
            euler_term: second_node(node_on_line.clone())?,
            corrections: vec![
                CorrectionTerm::new(
                    "diagonal",
                    1,
                    Quantity::Excess(Excess::Node2Line),
                    node2_line.result()?,
                )?,
                CorrectionTerm::new("cusp", CUSP_IN_NODE, k(CharNum::K11), k11.clone())?,
            ],
            symmetry: 1,
        };
        let n2_ordered = n2_step.ordered();
        values.insert(CharNum::N2, n2_step.result()?);
        let n21 = n21_step.result()?;
        values.insert(CharNum::N21, n21.clone());

        // A node colliding with a cusp.
        let sing = l_lam.sum(&l_lam.twist(&lam)?)?;
        let gamma_sq = lam.dual().line_power(2)?;
        let cusp_class = (sing.chern() * &gamma_sq.chern_inverse()).component(1);
        let cusp2 = PipelineStep {
            label: "cusp2",
            euler_term: cusp_cycle.pair(&cusp_class)?,
            corrections: vec![CorrectionTerm::new(
                "tacnode",
                1,
                k(CharNum::T1),
                t1.clone(),
            )?],
            symmetry: 1,
        };
        let k2_step = PipelineStep {
            label: "K2",
            euler_term: second_node(cusp_cycle.clone())?,
            corrections: vec![
                CorrectionTerm::new(
                    "diagonal",
                    CUSP_NODE_COVER,
                    Quantity::Excess(Excess::Cusp2),
                    cusp2.result()?,
                )?,
                CorrectionTerm::new("tacnode", TACNODE_IN_CUSP, k(CharNum::T1), t1.clone())?,
            ],
            symmetry: 1,
        };
        let k2 = k2_step.result()?;
        values.insert(CharNum::K2, k2.clone());

        // Ordered pairs of nodes, as a cycle in P^3 × P^2 × P^2.
        let ordered_node_pairs = CycleFunctional::new(&ring_two_points, 1)
            .weight(&[("y", 1)], n2_ordered)?
            .weight(&[("a", 1)], n21.clone())?
            .weight(&[("a2", 1)], n21)?;
        let pairs_cycle = Cycle::Functional(ordered_node_pairs.clone());
        let node3 = PipelineStep {
            label: "node3",
            euler_term: pairs_cycle.pair(&diag_class(&ring_two_points, "a")?)?,
            corrections: vec![
                CorrectionTerm::new("cusp-node", 1, k(CharNum::K2), k2.clone())?,
                CorrectionTerm::new(
                    "tacnode",
                    TACNODE_IN_TRIPLE_DIAGONAL,
                    k(CharNum::T1),
                    t1.clone(),
                )?,
            ],
            symmetry: 1,
        };
        let third_node = {
            let total = ring_two_points.extend_projective("a3", 2)?;
            let e = node_bundle(&total, "a3", &d)?.euler();
            Cycle::fibered(pairs_cycle, &total)?.pair(&e)?
        };
        let n3_step = PipelineStep {
            label: "N3",
            euler_term: third_node,
            corrections: vec![
                CorrectionTerm::new(
                    "diagonal",
                    DIAGONALS_OF_THIRD_POINT,
                    Quantity::Excess(Excess::Node3),
                    node3.result()?,
                )?,
                CorrectionTerm::new("cusp-node", NODE_PAIRS_IN_TRIPLE, k(CharNum::K2), k2)?,
                CorrectionTerm::new("tacnode", TACNODE_IN_NODES, k(CharNum::T1), t1)?,
            ],
            symmetry: 6,
        };
        values.insert(CharNum::N3, n3_step.result()?);

        excess.insert(Excess::Node2, node2);
        excess.insert(Excess::Node2Line, node2_line);
        excess.insert(Excess::Cusp2, cusp2);
        excess.insert(Excess::Node3, node3);
        steps.insert(CharNum::N2, n2_step);
        steps.insert(CharNum::N21, n21_step);
        steps.insert(CharNum::K2, k2_step);
        steps.insert(CharNum::N3, n3_step);

        Ok(Pipelines {
            d,
            ring_p2,
            ring_p3,
            ring_lambda,
            ring_two_points,
            node_once,
            node_twice,
            ordered_node_pairs,
            values,
            excess,
            steps,
        })
    }

    pub fn degree(&self) -> &DegreeCoeff {
        &self.d
    }

    pub fn value(&self, name: CharNum) -> &DegreeCoeff {
        &self.values[&name]
    }

    /// The correction ledger of an excess count.
    pub fn excess_step(&self, name: Excess) -> &PipelineStep {
        &self.excess[&name]
    }

    /// The correction ledger of a multi-point count (N2, N21, K2 or N3).
    pub fn step(&self, name: CharNum) -> Option<&PipelineStep> {
        self.steps.get(&name)
    }

    pub fn ring_p2(&self) -> &Ring {
        &self.ring_p2
    }

    pub fn ring_p3(&self) -> &Ring {
        &self.ring_p3
    }

    pub fn ring_lambda(&self) -> &Ring {
        &self.ring_lambda
    }

    pub fn ring_two_points(&self) -> &Ring {
        &self.ring_two_points
    }

    /// The one-node cycle in `P^2 × P^2` as injected weights.
    pub fn node_once(&self) -> &CycleFunctional {
        &self.node_once
    }

    /// The one-node cycle in `P^3 × P^2` as injected weights.
    pub fn node_twice(&self) -> &CycleFunctional {
        &self.node_twice
    }

    pub fn ordered_node_pairs(&self) -> &CycleFunctional {
        &self.ordered_node_pairs
    }

    /// The one-node cycle in `P^2 × P^2` as the zero locus of the node section.
    pub fn node_once_dual(&self) -> Result<Cycle> {
        let e = node_bundle(&self.ring_p2, "a", &self.d)?.euler();
        Cycle::zero_locus(Cycle::Fundamental(self.ring_p2.clone()), e)
    }

    /// The one-node cycle in `P^3 × P^2` as the zero locus of the node section.
    pub fn node_twice_dual(&self) -> Result<Cycle> {
        let e = node_bundle(&self.ring_p3, "a", &self.d)?.euler();
        Cycle::zero_locus(Cycle::Fundamental(self.ring_p3.clone()), e)
    }
}

/// A characteristic number, computed through the pipelines.
pub fn charnum(name: CharNum, d: Degree) -> Result<CharNumRecord> {
    d.check(name.name(), name.min_degree())?;
    let p = Pipelines::new(d.coeff())?;
    Ok(CharNumRecord {
        name,
        min_degree: name.min_degree(),
        value: p.value(name).clone(),
    })
}

/// All nine characteristic numbers from a single pipeline run.
pub fn charnum_all(d: Degree) -> Result<Vec<CharNumRecord>> {
    let p = Pipelines::new(d.coeff())?;
    Ok(CharNum::ALL
        .into_iter()
        .map(|name| CharNumRecord {
            name,
            min_degree: name.min_degree(),
            value: p.value(name).clone(),
        })
        .collect())
}

/// The zero count `N(α)` of an affine bundle map over a diagonal stratum.
pub fn excess(name: Excess, d: Degree) -> Result<DegreeCoeff> {
    d.check(name.name(), name.min_degree())?;
    Pipelines::new(d.coeff())?.excess_step(name).result()
}

/// Genus of a smooth plane curve of degree `d`.
pub fn genus_smooth(d: i64) -> Result<u64> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let ring = Ring::new(RingSpec::new().projective("a", 2))?;
    let a = ring.gen("a")?;
    let normal = FormalBundle::line(&a.scale(&DegreeCoeff::constant(d)))?;
    let tangent = FormalBundle::tangent_projective(&a, 2)?;
    // Adjunction: c1(TC) = c1(TP^2) - c1(N), integrated over C.
    let chi = ring.integrate(&((tangent.c1() - normal.c1()) * normal.euler()))?;
    let chi = chi.as_integer().expect("constant integrand");
    assert_eq!(
        chi,
        (3 * d - d * d).into(),
        "Euler characteristic of a smooth curve"
    );
    let g = (2 - chi) / 2;
    Ok(u64::try_from(g).expect("genus is nonnegative"))
}

/// `n_d` for `d <= 4` by the classical arguments.
pub fn nd_classical(d: i64) -> Result<num_bigint::BigInt> {
    match d {
        // A line through two points; a conic through five.
        1 | 2 => Ok(1.into()),
        3 => {
            let ring = Ring::new(RingSpec::new().projective("y", 1).projective("a", 2))?;
            let e = node_bundle(&ring, "a", &DegreeCoeff::constant(3))?.euler();
            Ok(ring.integrate(&e)?.as_integer().expect("numeric degree"))
        }
        4 => {
            // Three-nodal quartics through 11 points minus cubic-plus-line
            // configurations: choose the 2 points on the line.
            let n3 = charnum(CharNum::N3, Degree::Numeric(4))?.value;
            let n3 = n3.as_integer().expect("numeric degree");
            Ok(n3 - binomial(11, 2))
        }
        _ => Err(Error::ClassicalOutOfRange(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(name: CharNum, d: i64) -> DegreeCoeff {
        charnum(name, Degree::Numeric(d)).unwrap().value
    }

    #[test]
    fn quartic_values() {
        let expected = [27, 9, 72, 20, 200, 225, 170, 840, 675];
        for (name, e) in CharNum::ALL.into_iter().zip(expected) {
            assert_eq!(num(name, 4), DegreeCoeff::constant(e), "{name}");
        }
    }

    #[test]
    fn quartic_ledgers() {
        let p = Pipelines::new(DegreeCoeff::constant(4)).unwrap();
        let c = DegreeCoeff::constant;
        let totals: Vec<_> = [CharNum::N2, CharNum::N21, CharNum::K2, CharNum::N3]
            .into_iter()
            .map(|n| p.step(n).unwrap().boundary_total())
            .collect();
        assert_eq!(totals, vec![c(279), c(73), c(1104), c(8100)]);
        assert_eq!(p.step(CharNum::N2).unwrap().ordered(), c(450));
        assert_eq!(p.step(CharNum::K2).unwrap().ordered(), c(840));
        assert_eq!(p.step(CharNum::N3).unwrap().ordered(), c(4050));
        assert_eq!(p.step(CharNum::N2).unwrap().euler_term, c(729));
    }

    #[test]
    fn excess_quartic() {
        let e = |n| excess(n, Degree::Numeric(4)).unwrap();
        assert_eq!(e(Excess::Node2), DegreeCoeff::constant(63));
        assert_eq!(e(Excess::Node2Line), DegreeCoeff::constant(13));
        assert_eq!(e(Excess::Cusp2), DegreeCoeff::constant(152));
        assert_eq!(e(Excess::Node3), DegreeCoeff::constant(1130));
    }

    #[test]
    fn symbolic_rows() {
        let s = |n| charnum(n, Degree::Symbolic).unwrap().value.to_string();
        assert_eq!(s(CharNum::N1), "3*d^2 - 6*d + 3");
        assert_eq!(s(CharNum::N21), "9*d^3 - 27*d^2 - d + 30");
    }

    #[test]
    fn min_degree_is_enforced() {
        assert_eq!(
            charnum(CharNum::K11, Degree::Numeric(2)),
            Err(Error::BelowMinDegree {
                name: "K11".into(),
                d: 2,
                min: 3
            })
        );
        assert_eq!(num(CharNum::N1, 1), DegreeCoeff::zero());
        assert_eq!(num(CharNum::K2, 3), DegreeCoeff::zero());
        assert!(excess(Excess::Cusp2, Degree::Numeric(2)).is_err());
    }

    #[test]
    fn names_parse() {
        for n in CharNum::ALL {
            assert_eq!(n.name().parse::<CharNum>().unwrap(), n);
        }
        assert!("N4".parse::<CharNum>().is_err());
        assert_eq!("node2_line".parse::<Excess>().unwrap(), Excess::Node2Line);
    }

    #[test]
    fn multiplicities_are_checked() {
        let q = Quantity::CharNum(CharNum::T1);
        assert!(CorrectionTerm::new("x", 5, q, DegreeCoeff::one()).is_err());
        assert!(CorrectionTerm::new("x", 6, q, DegreeCoeff::one()).is_ok());
    }

    #[test]
    fn genus_and_classical() {
        assert_eq!(genus_smooth(1).unwrap(), 0);
        assert_eq!(genus_smooth(3).unwrap(), 1);
        assert_eq!(genus_smooth(4).unwrap(), 3);
        assert!(genus_smooth(0).is_err());
        let v: Vec<_> = (1..=4).map(|d| nd_classical(d).unwrap()).collect();
        assert_eq!(v, vec![1.into(), 1.into(), 12.into(), 620.into()]);
        assert_eq!(nd_classical(5), Err(Error::ClassicalOutOfRange(5)));
    }
}
