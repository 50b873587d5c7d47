//! Heegner divisors `H_node`, `H_Eck`, `H_NS`, `H_Km` on `H₂` and the
//! matching orthogonality conditions in `M`.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact_arith::{det_dense, rat, Matrix, TowerNumber};
use crate::hermitian_group::involution_t;
use crate::lattice_m::complement::{gram_of, orthogonal_complement};
use crate::lattice_m::pairing;
use crate::period_domain::{psi, tower_pairing, HermitianPoint, PeriodPoint, TowerMatrix2};
use crate::sample::random_symmetric_tau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locus {
    Node,
    Eckardt,
    Ns,
    Km,
}

impl Locus {
    pub const ALL: [Locus; 4] = [Locus::Node, Locus::Eckardt, Locus::Ns, Locus::Km];

    pub fn name(self) -> &'static str {
        match self {
            Locus::Node => "node",
            Locus::Eckardt => "eckardt",
            Locus::Ns => "ns",
            Locus::Km => "km",
        }
    }

    /// The vector `v ∈ M` with `H = {z : ᵗzQv = 0}`.
    pub fn defining_vector(self) -> [i128; 6] {
        match self {
            Locus::Node => [1, -1, 0, 0, 0, 0],
            Locus::Eckardt => [0, 0, 0, 0, 1, 0],
            Locus::Ns => [0, 0, 0, 0, 1, 2],
            Locus::Km => [0, 3, 0, 0, 1, 2],
        }
    }

    /// The coordinate form of `ᵗzQv = 0` for `z = [1:z₂:…:z₆]`.
    pub fn coordinate_condition(self, z: &PeriodPoint) -> bool {
        let two = TowerNumber::int(2);
        match self {
            Locus::Node => z.z(2).is_one(),
            Locus::Eckardt => *z.z(6) == &two * z.z(5),
            Locus::Ns => z.z(6).is_zero(),
            Locus::Km => (&two * z.z(6)).is_one(),
        }
    }

    pub fn flag(self, f: &HeegnerFlags) -> bool {
        match self {
            Locus::Node => f.node,
            Locus::Eckardt => f.eckardt,
            Locus::Ns => f.ns,
            Locus::Km => f.km,
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HeegnerFlags {
    pub node: bool,
    pub eckardt: bool,
    pub ns: bool,
    pub km: bool,
}

/// `½[[0, ω], [ω², 0]]`.
fn half_b3() -> TowerMatrix2 {
    let w = TowerNumber::omega();
    let half = rat(1, 2);
    Matrix::new([
        [TowerNumber::zero(), w.scale(&half)],
        [(&w * &w).scale(&half), TowerNumber::zero()],
    ])
}

/// `H_Eck` is read as `τ₂₁ = −τ₁₂`: the diagonal part of `ᵗτ = −τ` would
/// force `τᵢᵢ = 0`, which no point of `H₂` satisfies.
pub fn heegner_membership(tau: &HermitianPoint) -> Result<HeegnerFlags> {
    if !tau.is_in_h2() {
        return Err(Error::NotInH2);
    }
    let (t12, t21) = (tau.entry(0, 1), tau.entry(1, 0));
    let shifted = tau.tau() - &half_b3();
    Ok(HeegnerFlags {
        node: (&tau.det() * &TowerNumber::int(2)) == TowerNumber::int(-1),
        eckardt: (t12 + t21).is_zero(),
        ns: t12 == t21,
        km: shifted[(0, 1)] == shifted[(1, 0)],
    })
}

/// One biconditional `ᵗzQv = 0 ⟺ coordinate condition ⟺ τ-flag`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerpCheck {
    pub locus: Locus,
    pub orthogonal: bool,
    pub coordinate: bool,
    pub tau_flag: bool,
}

impl PerpCheck {
    pub fn holds(&self) -> bool {
        self.orthogonal == self.coordinate && self.coordinate == self.tau_flag
    }
}

pub fn perp_equivalence(z: &PeriodPoint) -> Result<[PerpCheck; 4]> {
    if !z.z(1).is_one() {
        return Err(Error::Precondition("period point must lie in the chart z1 = 1".into()));
    }
    let flags = heegner_membership(&psi(z)?)?;
    Ok(Locus::ALL.map(|locus| {
        let v = locus.defining_vector().map(|x| TowerNumber::int(x as i64));
        PerpCheck {
            locus,
            orthogonal: tower_pairing(z.coords(), &v).is_zero(),
            coordinate: locus.coordinate_condition(z),
            tau_flag: locus.flag(&flags),
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementCheck {
    pub locus: Locus,
    pub basis: Vec<[i128; 6]>,
    pub gram: Vec<Vec<i128>>,
    pub claimed: Vec<Vec<i128>>,
    /// Every basis vector is orthogonal to the defining vector.
    pub orthogonal: bool,
    pub gram_matches: bool,
    /// Equal Gram determinants for a sublattice of the complement, so index 1.
    pub full_rank: bool,
}

impl ComplementCheck {
    pub fn holds(&self) -> bool {
        self.orthogonal && self.gram_matches && self.full_rank
    }
}

fn block_form(blocks: &[Vec<Vec<i128>>]) -> Vec<Vec<i128>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut out = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                out[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    out
}

fn hyperbolic(k: i128) -> Vec<Vec<i128>> {
    vec![vec![0, k], vec![k, 0]]
}

/// Listed basis of `v^⟂` and the form it is claimed to carry.
pub fn listed_complement(locus: Locus) -> (Vec<[i128; 6]>, Vec<Vec<i128>>) {
    match locus {
        Locus::Node => (
            vec![
                [1, 1, 1, 0, 0, 0],
                [3, 3, 0, -3, 1, 2],
                [1, 1, 1, -1, 0, 0],
                [-1, -1, 0, 1, 0, -1],
                [-1, -1, 0, 1, -1, -1],
            ],
            block_form(&[vec![vec![2]], vec![vec![6]], vec![vec![-2]], vec![vec![-2]], vec![vec![-2]]]),
        ),
        Locus::Eckardt => (
            vec![
                [1, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 1, 2],
            ],
            block_form(&[hyperbolic(1), hyperbolic(2), vec![vec![-12]]]),
        ),
        Locus::Ns => (
            vec![
                [1, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 1, 0],
            ],
            block_form(&[hyperbolic(1), hyperbolic(2), vec![vec![-4]]]),
        ),
        Locus::Km => (
            vec![
                [0, 1, 0, 0, 0, 0],
                [2, 1, 0, 0, 1, 1],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 1, 0, 0, 1, 0],
            ],
            block_form(&[hyperbolic(2), hyperbolic(2), vec![vec![-4]]]),
        ),
    }
}

pub fn complement_gram_verify() -> Result<Vec<ComplementCheck>> {
    Locus::ALL
        .into_iter()
        .map(|locus| {
            let v = locus.defining_vector();
            let (basis, claimed) = listed_complement(locus);
            let gram = gram_of(&basis);
            let full = orthogonal_complement(v)?;
            Ok(ComplementCheck {
                locus,
                orthogonal: basis.iter().all(|b| pairing(b, &v) == 0),
                gram_matches: gram == claimed,
                full_rank: det_dense(&gram) == full.gram_det() && det_dense(&gram) != 0,
                basis,
                gram,
                claimed,
            })
        })
        .collect()
}

/// Translation `τ ↦ τ + B/2`.
fn shift(tau: &HermitianPoint, half_b: &TowerMatrix2) -> HermitianPoint {
    HermitianPoint::new(tau.tau() + half_b)
}

fn half_b(i: usize) -> TowerMatrix2 {
    let w = TowerNumber::omega();
    let w2 = &w * &w;
    let (o, h) = (TowerNumber::zero(), TowerNumber::rational(rat(1, 2)));
    let half = rat(1, 2);
    match i {
        1 => Matrix::new([[h, o.clone()], [o.clone(), o]]),
        2 => Matrix::new([[o.clone(), o.clone()], [o, h]]),
        3 => half_b3(),
        _ => Matrix::new([[o.clone(), w2.scale(&half)], [w.scale(&half), o]]),
    }
}

/// Pass count of one sampled relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTally {
    pub relation: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl RelationTally {
    pub fn holds(&self) -> bool {
        self.passed == self.total
    }
}

/// Samples symmetric `τ ∈ H₂` and checks `T·τ, τ + B₁/2, τ + B₂/2 ∈ H_NS`,
/// `τ + B₃/2 ∈ H_Km`, `τ + B₄/2 ∈ T·H_Km`; conversely `σ − B₃/2 ∈ H_NS` for
/// sampled `σ ∈ H_Km`.
pub fn orbit_relation_check<R: Rng>(rng: &mut R, samples: usize) -> Result<Vec<RelationTally>> {
    let names = [
        "T(tau) in H_NS",
        "tau + B1/2 in H_NS",
        "tau + B2/2 in H_NS",
        "tau + B3/2 in H_Km",
        "tau + B4/2 in T(H_Km)",
        "H_Km - B3/2 in H_NS",
    ];
    let mut passed = [0usize; 6];
    for _ in 0..samples {
        let tau = random_symmetric_tau(rng);
        let checks = [
            heegner_membership(&involution_t(&tau))?.ns,
            heegner_membership(&shift(&tau, &half_b(1)))?.ns,
            heegner_membership(&shift(&tau, &half_b(2)))?.ns,
            heegner_membership(&shift(&tau, &half_b(3)))?.km,
            heegner_membership(&involution_t(&shift(&tau, &half_b(4))))?.km,
            {
                let sigma = shift(&tau, &half_b(3));
                heegner_membership(&HermitianPoint::new(sigma.tau() - &half_b(3)))?.ns
            },
        ];
        for (p, ok) in passed.iter_mut().zip(checks) {
            *p += ok as usize;
        }
    }
    Ok(names
        .iter()
        .zip(passed)
        .map(|(&relation, passed)| RelationTally { relation, passed, total: samples })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::period_domain::psi_inv;
    use crate::sample::{random_on_locus, random_period_point};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tau(entries: [[TowerNumber; 2]; 2]) -> HermitianPoint {
        HermitianPoint::new(Matrix::new(entries))
    }

    #[test]
    fn membership_examples() {
        let i = TowerNumber::i();
        let o = TowerNumber::zero();
        let f = heegner_membership(&tau([[i.clone(), o.clone()], [o.clone(), i.clone()]])).unwrap();
        assert!(f.ns && !f.node && f.eckardt && !f.km);
        let h = TowerNumber::rational(rat(1, 2));
        let f = heegner_membership(&tau([[i.clone(), h.clone()], [-h.clone(), i.clone()]])).unwrap();
        assert!(f.eckardt && !f.ns);
        let w = TowerNumber::omega();
        let w2 = &w * &w;
        let half = rat(1, 2);
        let f = heegner_membership(&tau([[i.clone(), w.scale(&half)], [w2.scale(&half), i.clone()]])).unwrap();
        assert!(f.km && !f.ns);
        // τ = diag(i, i/2) has 2 det τ = −1
        let f = heegner_membership(&tau([[i.clone(), o.clone()], [o.clone(), i.scale(&half)]])).unwrap();
        assert!(f.node);
        assert_eq!(
            heegner_membership(&tau([[-i.clone(), o.clone()], [o, i]])),
            Err(Error::NotInH2)
        );
    }

    #[test]
    fn complements() {
        let checks = complement_gram_verify().unwrap();
        assert!(checks.iter().all(ComplementCheck::holds), "{checks:?}");
        assert_eq!(checks[1].gram[4][4], -12);
    }

    #[test]
    fn perp_battery() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for locus in Locus::ALL {
            for _ in 0..25 {
                let z = random_on_locus(&mut rng, locus);
                let rec = perp_equivalence(&z).unwrap();
                assert!(rec.iter().all(PerpCheck::holds), "{rec:?}");
                assert!(rec.iter().any(|c| c.locus == locus && c.orthogonal));
            }
        }
        for _ in 0..25 {
            let z = random_period_point(&mut rng);
            let rec = perp_equivalence(&z).unwrap();
            assert!(rec.iter().all(PerpCheck::holds));
        }
    }

    #[test]
    fn node_points_through_psi_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        for _ in 0..10 {
            let z = random_on_locus(&mut rng, Locus::Node);
            let t = psi(&z).unwrap();
            assert_eq!(psi_inv(&t).unwrap(), z);
        }
    }

    #[test]
    fn orbit_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        let tallies = orbit_relation_check(&mut rng, 50).unwrap();
        assert!(tallies.iter().all(RelationTally::holds), "{tallies:?}");
        let i = TowerNumber::i();
        let o = TowerNumber::zero();
        let base = tau([[i.clone(), o.clone()], [o, i]]);
        assert!(heegner_membership(&shift(&base, &half_b(3))).unwrap().km);
        assert!(heegner_membership(&shift(&base, &half_b(1))).unwrap().ns);
    }
}
