//! Deterministic verification suites. Each check is exact; the report for a
//! given seed is byte-identical across runs.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::correspondence::{
    decompose_so0, equal_mod_sign, equivariance_check, herm_to_orth, orth_to_herm, psi_hom,
    u2_listed_preimage, GeneratorTable, HermImage,
};
use crate::cubic_invariants::{
    classical_invariants, delta_km_cleared_poly, delta_km_sigma_poly, delta_sing,
    delta_sing_from_invariants, delta_sing_invariant_poly, delta_sing_poly, enriques_involution_check,
    hessian_equations, hessian_line_check, hessian_singular_points, SylvesterParam,
};
use crate::error::{Error, Result};
use crate::exact_arith::{is_g2, rat, rint, EisMatrix2, Eisenstein};
use crate::heegner::{complement_gram_verify, orbit_relation_check, perp_equivalence, Locus};
use crate::hermitian_group::decompose::f_mod2;
use crate::hermitian_group::{
    decompose_hgamma1, f4, g_a, involution_t, involution_w, moebius, F4Matrix,
};
use crate::lattice_m::{enumerate_disc_orthogonal, is_in_enr, named, to_s5, translation_h, OrthMatrix, S5Perm};
use crate::period_domain::{act, psi, PeriodPoint};
use crate::sample;

/// One exact check with a short anchor naming the claim it tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    fn new(name: impl Into<String>, anchor: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            anchor,
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} [{}] {}", self.name, self.anchor, self.detail)
    }
}

pub fn all_passed(lines: &[CheckLine]) -> bool {
    lines.iter().all(|l| l.passed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    DiscGroup,
    QuotientGroup,
    GroupIso,
    EnrIso,
    DeltaSing,
    DeltaKm,
    Hessian,
    Heegner,
    DecomposeFuzz,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "disc-group",
        "quotient-group",
        "group-iso",
        "enr-iso",
        "delta-sing",
        "delta-km",
        "hessian",
        "heegner",
        "decompose-fuzz",
        "all",
    ];

    const ORDERED: [Suite; 9] = [
        Suite::DiscGroup,
        Suite::QuotientGroup,
        Suite::GroupIso,
        Suite::EnrIso,
        Suite::DeltaSing,
        Suite::DeltaKm,
        Suite::Hessian,
        Suite::Heegner,
        Suite::DecomposeFuzz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DiscGroup => "disc-group",
            Suite::QuotientGroup => "quotient-group",
            Suite::GroupIso => "group-iso",
            Suite::EnrIso => "enr-iso",
            Suite::DeltaSing => "delta-sing",
            Suite::DeltaKm => "delta-km",
            Suite::Hessian => "hessian",
            Suite::Heegner => "heegner",
            Suite::DecomposeFuzz => "decompose-fuzz",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ORDERED
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs a suite; each suite derives its generator from `seed` and a fixed salt, so
/// `all` reproduces each individual suite.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckLine> {
    let rng = |salt: u64| ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9).wrapping_add(salt));
    match suite {
        Suite::DiscGroup => [disc_orthogonal_group(), generator_permutations()].concat(),
        Suite::QuotientGroup => mod2_sequence(),
        Suite::GroupIso => [
            psi_dictionary(&mut rng(3)),
            equivariance_panel(&mut rng(4)),
            translation_subgroup(),
        ]
        .concat(),
        Suite::EnrIso => congruence_transport(&mut rng(5)),
        Suite::DeltaSing => delta_sing_identity(),
        Suite::DeltaKm => delta_km_bridge(),
        Suite::Hessian => hessian_geometry(&mut rng(8)),
        Suite::Heegner => heegner_battery(&mut rng(9)),
        Suite::DecomposeFuzz => decomposition_round_trips(&mut rng(10), 100),
        Suite::All => Suite::ORDERED.into_iter().flat_map(|s| run_suite(s, seed)).collect(),
    }
}

fn fail_line(name: &str, anchor: &'static str, e: &Error) -> CheckLine {
    CheckLine::new(name, anchor, false, format!("error: {e}"))
}

/// Wraps a fallible check so errors become failing lines.
fn guard(name: &str, anchor: &'static str, f: impl FnOnce() -> Result<CheckLine>) -> CheckLine {
    f().unwrap_or_else(|e| fail_line(name, anchor, &e))
}

// ---- Δ_Sing -------------------------------------------------------------

pub fn delta_sing_identity() -> Vec<CheckLine> {
    const A: &str = "Delta_Sing product = invariant formula";
    let p = delta_sing_poly();
    let q = delta_sing_invariant_poly();
    let ones = SylvesterParam::from_ints([1; 5]).expect("nonzero");
    let direct = delta_sing(&ones);
    let via = delta_sing_from_invariants(&classical_invariants(&ones));
    vec![
        CheckLine::new(
            "delta-sing.degree",
            A,
            p.total_degree() == Some(32) && p.is_homogeneous(),
            format!("degree {:?}, {} terms", p.total_degree(), p.len()),
        ),
        CheckLine::new("delta-sing.identity", A, p == q, format!("{} vs {} terms", p.len(), q.len())),
        CheckLine::new(
            "delta-sing.spot",
            A,
            direct == rint(-1215) && via == rint(-1215),
            format!("product {direct}, invariants {via}"),
        ),
    ]
}

// ---- discriminant group -------------------------------------------------

pub fn disc_orthogonal_group() -> Vec<CheckLine> {
    const A: &str = "O(q_M) = {±1} x S5";
    let auts = enumerate_disc_orthogonal();
    let mut images = BTreeSet::new();
    let mut kernel = 0;
    let mut errors = 0;
    for a in &auts {
        match a.to_s5() {
            Ok(p) => {
                kernel += (p == S5Perm::identity()) as usize;
                images.insert(p);
            }
            Err(_) => errors += 1,
        }
    }
    vec![
        CheckLine::new("disc-group.order", A, auts.len() == 240, format!("{} automorphisms", auts.len())),
        CheckLine::new(
            "disc-group.onto-s5",
            A,
            images.len() == 120 && errors == 0,
            format!("{} distinct permutations", images.len()),
        ),
        CheckLine::new("disc-group.kernel", A, kernel == 2, format!("kernel size {kernel}")),
    ]
}

pub fn generator_permutations() -> Vec<CheckLine> {
    const A: &str = "generator permutations of v1..v5";
    let p = |c: &[&[u8]]| S5Perm::from_cycles(c);
    let cases: [(&str, OrthMatrix, S5Perm); 5] = [
        ("g1", named::g1(), p(&[&[1, 4], &[3, 5]])),
        ("g2", named::g2(), p(&[&[1, 5], &[3, 4]])),
        ("u0", named::u0(), p(&[&[1, 2]])),
        ("u1", named::u1(), p(&[&[3, 5]])),
        ("u2", named::u2(), p(&[&[3, 4, 5]])),
    ];
    cases
        .into_iter()
        .map(|(name, g, expect)| {
            let label = format!("to-s5.{name}");
            guard(&label, A, || {
                let got = to_s5(&g)?;
                Ok(CheckLine::new(&label, A, got == expect, format!("{:?}", got.cycles())))
            })
        })
        .collect()
}

// ---- ψ and the dictionary ----------------------------------------------

fn monomial_units() -> Vec<EisMatrix2> {
    let mut out = Vec::new();
    for &x in &Eisenstein::UNITS {
        for &y in &Eisenstein::UNITS {
            let o = Eisenstein::ZERO;
            out.push(EisMatrix2::new([[x, o], [o, y]]));
            out.push(EisMatrix2::new([[o, x], [y, o]]));
        }
    }
    out
}

fn is_scalar_unit(a: &EisMatrix2) -> bool {
    a[(0, 1)].is_zero() && a[(1, 0)].is_zero() && a[(0, 0)] == a[(1, 1)] && a[(0, 0)].is_unit()
}

fn identity_mod2(g: &OrthMatrix) -> bool {
    (0..6).all(|i| (0..6).all(|j| (g[(i, j)] - (i == j) as i128) % 2 == 0))
}

pub fn psi_dictionary<R: Rng>(rng: &mut R) -> Vec<CheckLine> {
    const A: &str = "psi: GL2(Z[w]) -> SO+(M)0";
    let mut lines = Vec::new();
    let sample_gl2 = |rng: &mut R| {
        if rng.gen_bool(0.5) {
            sample::random_gl2(rng, 6)
        } else {
            sample::random_g2(rng, 3)
        }
    };
    lines.push(guard("psi.homomorphism", A, || {
        let mut ok = 0;
        for _ in 0..200 {
            let (a, b) = (sample_gl2(rng), sample_gl2(rng));
            ok += (psi_hom(&(&a * &b))? == &psi_hom(&a)? * &psi_hom(&b)?) as usize;
        }
        Ok(CheckLine::new("psi.homomorphism", A, ok == 200, format!("{ok}/200 pairs")))
    }));
    lines.push(guard("psi.unit-kernel", A, || {
        let units = monomial_units();
        let mut kernel = Vec::new();
        for u in &units {
            if psi_hom(u)? == OrthMatrix::identity() {
                kernel.push(u.clone());
            }
        }
        let ok = kernel.len() == 6 && kernel.iter().all(is_scalar_unit);
        Ok(CheckLine::new(
            "psi.unit-kernel",
            A,
            ok,
            format!("{} of {} monomial unit matrices in the kernel", kernel.len(), units.len()),
        ))
    }));
    lines.push(guard("psi.level-two", A, || {
        let mut samples: Vec<EisMatrix2> = (0..200).map(|_| sample_gl2(rng)).collect();
        samples.extend(monomial_units());
        let mut bad = Vec::new();
        for a in &samples {
            if identity_mod2(&psi_hom(a)?) != is_g2(a) {
                bad.push(a.clone());
            }
        }
        let detail = match bad.first() {
            None => format!("{} samples agree", samples.len()),
            Some(a) => format!("{} counterexamples, first {a}: psi = I mod 2 but not in G(2)", bad.len()),
        };
        Ok(CheckLine::new("psi.level-two", A, bad.is_empty(), detail))
    }));
    let o = Eisenstein::ZERO;
    let i = Eisenstein::ONE;
    lines.push(guard("psi.g1", A, || {
        let g = psi_hom(&EisMatrix2::new([[i, o], [i, i]]))?;
        Ok(CheckLine::new("psi.g1", A, g == named::g1(), "psi([[1,0],[1,1]]) vs g1"))
    }));
    lines.push(guard("psi.u2", A, || {
        let g = psi_hom(&u2_listed_preimage())?;
        let ok = g == named::u2();
        let detail = if ok {
            "psi([[0,-1],[1,-1]]) = u2".to_string()
        } else {
            format!("psi([[0,-1],[1,-1]]) = {} differs from u2", g.to_string().replace('\n', " "))
        };
        Ok(CheckLine::new("psi.u2", A, ok, detail))
    }));
    lines
}

pub fn equivariance_panel<R: Rng>(rng: &mut R) -> Vec<CheckLine> {
    const A: &str = "dictionary equivariance under Psi";
    let points: Vec<PeriodPoint> = (0..20).map(|_| sample::random_period_point(rng)).collect();
    GeneratorTable::standard()
        .entries
        .iter()
        .map(|entry| {
            let label = format!("equivariance.{}", entry.name);
            guard(&label, A, || {
                let mut ok = 0;
                for z in &points {
                    ok += equivariance_check(entry, z)? as usize;
                }
                Ok(CheckLine::new(&label, A, ok == points.len(), format!("{ok}/{} points, {}", points.len(), entry.herm)))
            })
        })
        .collect()
}

pub fn translation_subgroup() -> Vec<CheckLine> {
    const A: &str = "translations form Z^4";
    let vecs: Vec<[i128; 4]> = (0..625)
        .map(|n: i128| std::array::from_fn(|k| (n / 5i128.pow(k as u32)) % 5 - 2))
        .collect();
    let mats: Vec<OrthMatrix> = vecs.iter().map(|&m| translation_h(m)).collect();
    let mut bad = 0usize;
    let mut total = 0usize;
    for (x, hx) in vecs.iter().zip(&mats) {
        for (y, hy) in vecs.iter().zip(&mats) {
            let sum = std::array::from_fn(|k| x[k] + y[k]);
            bad += (&(hx * hy) != &translation_h(sum)) as usize;
            total += 1;
        }
    }
    vec![CheckLine::new(
        "translations.additive",
        A,
        bad == 0,
        format!("{} of {total} pairs satisfy h(a)h(b) = h(a+b)", total - bad),
    )]
}

// ---- mod 2 ------------------------------------------------------------

pub fn mod2_sequence() -> Vec<CheckLine> {
    const A: &str = "HGamma0(2)/HGamma1(2) = GL2(F4), projectively A5";
    guard("mod2.image", A, || {
        let gens: Vec<F4Matrix> = f4::section_generators()
            .iter()
            .map(|a| f_mod2(&g_a(a)?))
            .collect::<Result<_>>()?;
        let mut seen: HashSet<F4Matrix> = HashSet::new();
        let mut queue = VecDeque::from([F4Matrix::IDENTITY]);
        seen.insert(F4Matrix::IDENTITY);
        while let Some(m) = queue.pop_front() {
            for g in &gens {
                let n = m.mul(g);
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        let perms: BTreeSet<S5Perm> = seen.iter().map(F4Matrix::projective_permutation).collect();
        let kernel = seen.iter().filter(|m| m.projective_permutation() == S5Perm::identity()).count();
        let even = perms.iter().all(S5Perm::is_even);
        let ok = seen.len() == 180 && perms.len() == 60 && kernel == 3 && even;
        Ok(CheckLine::new(
            "mod2.image",
            A,
            ok,
            format!(
                "subgroup order {}, {} scalars, quotient order {}, all even: {even}",
                seen.len(),
                kernel,
                perms.len()
            ),
        ))
    })
    .into_vec()
}

trait IntoVec {
    fn into_vec(self) -> Vec<CheckLine>;
}

impl IntoVec for CheckLine {
    fn into_vec(self) -> Vec<CheckLine> {
        vec![self]
    }
}

// ---- Enr transport ------------------------------------------------------

pub fn congruence_transport<R: Rng>(rng: &mut R) -> Vec<CheckLine> {
    const A: &str = "HGamma1(2) corresponds to SO+_Enr";
    let mut lines = Vec::new();
    lines.push(guard("enr.congruences", A, || {
        let mut ok = 0;
        for _ in 0..100 {
            let len = rng.gen_range(1..=12);
            let word = sample::random_hgamma1_word(rng, len);
            ok += is_in_enr(&herm_to_orth(&HermImage { uses_t: false, uses_w: false, word })?)? as usize;
        }
        Ok(CheckLine::new("enr.congruences", A, ok == 100, format!("{ok}/100 images in SO+_Enr")))
    }));
    lines.push(guard("enr.w-prime", A, || {
        let g = &named::g0() * &named::i42();
        let swap = g_a(&crate::correspondence::swap_matrix())?;
        let mut ok = 0;
        for _ in 0..20 {
            let z = sample::random_period_point(rng);
            let lhs = psi(&act(&g, &z)?)?;
            // W′ = T·[A]·W applied right to left
            let rhs = involution_t(&moebius(&swap, &involution_w(&psi(&z)?)?)?);
            ok += (lhs == rhs) as usize;
        }
        Ok(CheckLine::new("enr.w-prime", A, ok == 20, format!("{ok}/20 points, g0*I42 acts as T[A]W")))
    }));
    lines
}

// ---- Δ_Km ---------------------------------------------------------------

pub fn delta_km_bridge() -> Vec<CheckLine> {
    const A: &str = "Delta_Km locus = {I8 I24 + 8 I32 = 0}";
    let lhs = delta_km_cleared_poly();
    let rhs = delta_km_sigma_poly();
    vec![CheckLine::new(
        "delta-km.identity",
        A,
        lhs == rhs,
        format!("sigma5^3 Delta_Km(1/lambda) has {} terms, sigma form {}", lhs.len(), rhs.len()),
    )]
}

// ---- Hessian ------------------------------------------------------------

fn random_lambda<R: Rng>(rng: &mut R) -> SylvesterParam {
    SylvesterParam::new(std::array::from_fn(|_| {
        let n = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        rat(n, rng.gen_range(1..=5))
    }))
    .expect("entries are nonzero")
}

pub fn hessian_geometry<R: Rng>(rng: &mut R) -> Vec<CheckLine> {
    const A: &str = "Hessian quartic: ten nodes, ten lines, Enriques involution";
    let params: Vec<SylvesterParam> = (0..12).map(|_| random_lambda(rng)).collect();
    let mut lines = Vec::new();
    lines.push(guard("hessian.nodes", A, || {
        let mut ok = 0;
        for l in &params {
            let h = hessian_equations(l)?;
            ok += hessian_singular_points().iter().all(|(_, x)| {
                let p = x.map(rint);
                h.linear.eval(&p).is_zero() && h.quartic.eval(&p).is_zero()
            }) as usize;
        }
        Ok(CheckLine::new("hessian.nodes", A, ok == 12, format!("{ok}/12 parameters")))
    }));
    lines.push(guard("hessian.lines", A, || {
        let mut ok = 0;
        for l in &params {
            let mut all = true;
            for i in 0..5 {
                for j in i + 1..5 {
                    all &= hessian_line_check(l, i, j)?;
                }
            }
            ok += all as usize;
        }
        Ok(CheckLine::new("hessian.lines", A, ok == 12, format!("{ok}/12 parameters")))
    }));
    lines.push(guard("hessian.enriques", A, || {
        let mut ok = 0;
        for l in &params {
            ok += enriques_involution_check(l)? as usize;
        }
        Ok(CheckLine::new("hessian.enriques", A, ok == 12, format!("{ok}/12 parameters")))
    }));
    lines
}

// ---- Heegner ------------------------------------------------------------

pub fn heegner_battery<R: Rng>(rng: &mut R) -> Vec<CheckLine> {
    const A: &str = "Heegner divisors: perp vector, coordinates, tau condition";
    let mut lines = Vec::new();
    for locus in Locus::ALL {
        let label = format!("heegner.on-locus.{locus}");
        lines.push(guard(&label, A, || {
            let mut ok = 0;
            for _ in 0..100 {
                let z = sample::random_on_locus(rng, locus);
                let rec = perp_equivalence(&z)?;
                let on = rec.iter().any(|c| c.locus == locus && c.orthogonal && c.tau_flag);
                ok += (on && rec.iter().all(|c| c.holds())) as usize;
            }
            Ok(CheckLine::new(&label, A, ok == 100, format!("{ok}/100 points")))
        }));
    }
    lines.push(guard("heegner.generic", A, || {
        let mut ok = 0;
        for _ in 0..100 {
            let z = sample::random_period_point(rng);
            ok += perp_equivalence(&z)?.iter().all(|c| c.holds()) as usize;
        }
        Ok(CheckLine::new("heegner.generic", A, ok == 100, format!("{ok}/100 points")))
    }));
    match complement_gram_verify() {
        Ok(checks) => {
            for c in checks {
                lines.push(CheckLine::new(
                    format!("heegner.complement.{}", c.locus),
                    "complement lattices T_node, T_Eck, T_NS, T_Km",
                    c.holds(),
                    format!("gram {:?}", c.gram),
                ));
            }
        }
        Err(e) => lines.push(fail_line("heegner.complement", "complement lattices", &e)),
    }
    match orbit_relation_check(rng, 50) {
        Ok(tallies) => {
            for t in tallies {
                lines.push(CheckLine::new(
                    format!("heegner.orbit.{}", t.relation.replace(' ', "_")),
                    "translates of H_NS",
                    t.holds(),
                    format!("{}/{}", t.passed, t.total),
                ));
            }
        }
        Err(e) => lines.push(fail_line("heegner.orbit", "translates of H_NS", &e)),
    }
    lines
}

// ---- decomposition ------------------------------------------------------

pub fn decomposition_round_trips<R: Rng>(rng: &mut R, samples: usize) -> Vec<CheckLine> {
    const A: &str = "generators of HGamma1(2), SO+(M)0 and O+(M)";
    let mut lines = Vec::new();
    lines.push(guard("decompose.hgamma1", A, || {
        let mut ok = 0;
        for _ in 0..samples {
            let len = rng.gen_range(1..=12);
            let g = sample::random_hgamma1_word(rng, len).product()?;
            ok += (decompose_hgamma1(&g)?.product()? == g) as usize;
        }
        Ok(CheckLine::new("decompose.hgamma1", A, ok == samples, format!("{ok}/{samples} round trips")))
    }));
    lines.push(guard("decompose.so0", A, || {
        let mut ok = 0;
        for _ in 0..samples {
            let len = rng.gen_range(1..=12);
            let g = sample::random_so0_word(rng, len).product()?;
            ok += (decompose_so0(&g)?.product()? == g) as usize;
        }
        Ok(CheckLine::new("decompose.so0", A, ok == samples, format!("{ok}/{samples} round trips")))
    }));
    lines.push(guard("transport.o-plus", A, || {
        let mut ok = 0;
        for _ in 0..samples {
            let len = rng.gen_range(1..=12);
            let g = sample::random_o_plus(rng, len);
            let img = orth_to_herm(&g)?;
            ok += equal_mod_sign(&herm_to_orth(&img)?, &g) as usize;
        }
        Ok(CheckLine::new("transport.o-plus", A, ok == samples, format!("{ok}/{samples} equal mod ±I6")))
    }));
    lines.push(guard("transport.hermitian", A, || {
        let mut ok = 0;
        for _ in 0..samples {
            let len = rng.gen_range(1..=12);
            let word = sample::random_hgamma1_word(rng, len);
            let img = HermImage { uses_t: false, uses_w: false, word };
            let h = img.matrix()?;
            let back = orth_to_herm(&herm_to_orth(&img)?)?;
            let hb = back.matrix()?;
            let same = !back.uses_t
                && !back.uses_w
                && Eisenstein::UNITS.iter().any(|&u| hb == h.map(|x| *x * u));
            ok += same as usize;
        }
        Ok(CheckLine::new("transport.hermitian", A, ok == samples, format!("{ok}/{samples} equal mod units")))
    }));
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_suite(Suite::EnrIso, 3);
        let b = run_suite(Suite::EnrIso, 3);
        assert_eq!(a, b);
        assert!(all_passed(&a), "{a:?}");
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::DiscGroup, Suite::QuotientGroup, Suite::DeltaKm, Suite::Hessian] {
            let lines = run_suite(s, 1);
            assert!(all_passed(&lines), "{lines:?}");
        }
    }
}
