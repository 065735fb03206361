//! Verification suites: each runs a fixed list of fixture computations and
//! records every comparison as a named check. Suites never panic on a failed
//! computation; errors become failing checks.

use std::fmt::Display;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{JordanAlgebra, LinearOperator};
use crate::constructors::{
    albert_algebra, assoc_lie, full_matrix_jordan, halfspin, hermitian_jordan, nilpotent_two_dim, skew_lie,
    so_alpha, spin_factor, AssocContext,
};
use crate::derivations::{d_assoc, dd_span, der, inn, is_derivation, so4_split_ideal, tder, OperatorSubspace};
use crate::error::Error;
use crate::lie::{LieTable, SimplicityStatus};
use crate::linalg::{Matrix, RowBasis, Solver};
use crate::scalar::Scalar;
use crate::Q;

/// Suite identifiers accepted by [`run_suite`].
pub const SUITES: [&str; 8] = ["2.2", "2.6", "2.8", "2.10", "3.4", "3.7", "4.4", "4.7"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Tier {
    #[default]
    Fast,
    /// Adds the Albert-algebra computations.
    Slow,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    /// Stated outright by the theory being checked.
    Claimed,
    /// Worked out independently (by hand or by a separate computation).
    Derived,
    /// Immediate from definitions.
    Elementary,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub origin: Origin,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub fixtures: Vec<String>,
    pub checks: Vec<Check>,
    /// Omitted unless timing was requested, so reports stay byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub solver: Solver,
    pub tier: Tier,
    pub seed: u64,
    pub timing: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            solver: Solver::default(),
            tier: Tier::Fast,
            seed: 20240607,
            timing: false,
        }
    }
}

struct Recorder {
    report: TheoremReport,
}

impl Recorder {
    fn fixture(&mut self, f: impl Into<String>) {
        let f = f.into();
        if !self.report.fixtures.contains(&f) {
            self.report.fixtures.push(f);
        }
    }

    fn eq(&mut self, name: impl Into<String>, origin: Origin, expected: impl Display, computed: impl Display) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.report.checks.push(Check {
            name: name.into(),
            pass: expected == computed,
            expected,
            computed,
            origin,
        });
    }

    fn holds(&mut self, name: impl Into<String>, origin: Origin, ok: bool) {
        self.eq(name, origin, true, ok);
    }
}

/// Runs one suite. Only an unknown suite id is an error.
pub fn run_suite(id: &str, cfg: &Config) -> Result<TheoremReport, Error> {
    let body: fn(&mut Recorder, &Config) -> Result<(), Error> = match id {
        "2.2" => direct_sum_suite,
        "2.6" => matrix_types_suite,
        "2.8" => spin_suite,
        "2.10" => albert_suite,
        "3.4" => unital_tder_suite,
        "3.7" => inner_suite,
        "4.4" => lie_tder_suite,
        "4.7" => lie_sum_suite,
        other => return Err(Error::BadParameter(format!("unknown suite {other:?}"))),
    };
    let start = Instant::now();
    let mut r = Recorder {
        report: TheoremReport {
            theorem_id: id.to_string(),
            fixtures: Vec::new(),
            checks: Vec::new(),
            wall_time_ms: None,
        },
    };
    if let Err(e) = body(&mut r, cfg) {
        r.eq("suite ran to completion", Origin::Elementary, "ok", format!("error: {e}"));
    }
    if cfg.timing {
        r.report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(r.report)
}

/// Expands `"all"` and runs each suite in order.
pub fn run_suites(ids: &[&str], cfg: &Config) -> Result<Vec<TheoremReport>, Error> {
    let mut out = Vec::new();
    for id in ids {
        if *id == "all" {
            for s in SUITES {
                out.push(run_suite(s, cfg)?);
            }
        } else {
            out.push(run_suite(id, cfg)?);
        }
    }
    Ok(out)
}

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn ones(n: usize) -> Vec<Q> {
    vec![q(1); n]
}

fn fmt_params(alpha: &[Q]) -> String {
    alpha.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Deterministic nonzero rationals with small numerators and denominators.
pub fn random_parameters(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n)
        .map(|_| {
            let mut num = 0i64;
            while num == 0 {
                num = rng.gen_range(-9..=9);
            }
            Q::new(num.into(), rng.gen_range(1..=6i64).into())
        })
        .collect()
}

fn kills_unit(space: &OperatorSubspace<Q>, unit: &[Q]) -> bool {
    space.operators().iter().all(|op| op.mul_vec(unit).iter().all(Zero::is_zero))
}

fn closed_under_commutator(space: &OperatorSubspace<Q>) -> Result<bool, Error> {
    let ops = space.operators();
    for a in &ops {
        for b in &ops {
            if !space.contains(&a.commutator(b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn status(l: &LieTable<Q>, solver: &Solver) -> Result<SimplicityStatus, Error> {
    Ok(l.simplicity(solver)?.status)
}

/// Centerless direct sums decompose Der blockwise; centers add.
fn direct_sum_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    let s = &cfg.solver;
    let h = halfspin::<Q>();
    r.fixture("halfspin ⊕ halfspin");
    r.eq("center(halfspin) dim", Origin::Derived, 0, h.center().dim());
    let sum = h.direct_sum(&h);
    r.eq("center(sum) dim", Origin::Derived, 0, sum.center().dim());
    let dh = der(&h, s)?;
    let ds = der(&sum, s)?;
    r.eq("der(sum) dim", Origin::Derived, 4, ds.dim());
    r.holds("der(sum) = der ⊕ der (block embedding)", Origin::Claimed, ds == dh.block_sum(&dh));
    let seed = RowBasis::span(4, &[vec![q(1), q(0), q(0), q(0)]])?;
    r.eq("ideal generated by the first summand's idempotent", Origin::Derived, 2, sum.ideal_closure(&seed)?.dim());

    r.fixture("spin(1,1) ⊕ spin(1,1,1)");
    let a = spin_factor(&ones(2))?;
    let b = spin_factor(&ones(3))?;
    let ab = a.direct_sum(&b);
    r.eq("dim of sum", Origin::Elementary, 7, ab.dim());
    r.holds("center(sum) = center ⊕ center", Origin::Claimed, ab.center() == a.center().direct_sum(&b.center()));
    let unit: Vec<Q> = a.unit().unwrap_or_default().iter().chain(b.unit().unwrap_or_default()).cloned().collect();
    r.holds("unit of sum is the sum of units", Origin::Elementary, ab.unit() == Some(unit.as_slice()));
    Ok(())
}

fn dd_checks(r: &mut Recorder, label: &str, j: &JordanAlgebra<Q>, ctx: &AssocContext<Q>, s: &Solver) -> Result<OperatorSubspace<Q>, Error> {
    let d = der(j, s)?;
    r.holds(format!("{label}: span of commutator maps = der"), Origin::Claimed, dd_span(ctx)? == d);
    let mut all_leibniz = true;
    for e in ctx.skew_basis().vectors() {
        all_leibniz &= is_derivation(j.table(), &d_assoc(ctx, e)?);
    }
    r.holds(format!("{label}: each commutator map is a derivation"), Origin::Claimed, all_leibniz);
    Ok(d)
}

/// Types A and B: Der(J) = {D_d}, and Der(J) simple iff L/Z(L) simple.
fn matrix_types_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    let s = &cfg.solver;
    for k in [2usize, 3] {
        let label = format!("full_matrix_jordan({k})");
        r.fixture(label.clone());
        let (j, ctx) = full_matrix_jordan::<Q>(k)?;
        let d = dd_checks(r, &label, &j, &ctx, s)?;
        r.eq(format!("{label}: der dim"), Origin::Derived, k * k - 1, d.dim());
        let identity = Matrix::<Q>::identity(k).into_vec();
        r.holds(format!("{label}: identity gives the zero map"), Origin::Elementary, d_assoc(&ctx, &identity)?.is_zero());
        let der_status = status(&LieTable::from_operators(&d)?, s)?;
        let quotient_status = status(&assoc_lie::<Q>(k)?.quotient_by_center(), s)?;
        r.eq(format!("{label}: Der simplicity"), Origin::Derived, SimplicityStatus::Simple, der_status);
        r.eq(format!("gl({k})/center simplicity"), Origin::Derived, SimplicityStatus::Simple, quotient_status);
        r.holds(format!("{label}: both sides agree"), Origin::Claimed, der_status == quotient_status);
    }
    for (k, expected) in [(2usize, None), (3, Some(SimplicityStatus::Simple)), (4, Some(SimplicityStatus::NotSimple))] {
        let label = format!("hermitian_jordan({k})");
        r.fixture(label.clone());
        let (j, ctx) = hermitian_jordan::<Q>(k)?;
        let d = dd_checks(r, &label, &j, &ctx, s)?;
        r.eq(format!("{label}: der dim"), Origin::Derived, k * (k - 1) / 2, d.dim());
        // skew elements are closed under the commutator
        let at = ctx.assoc_table();
        let p = ctx.involution().expect("transpose involution");
        let skew = ctx.skew_basis();
        let mut closed = true;
        for x in skew.vectors() {
            for y in skew.vectors() {
                let xy = at.multiply(x, y)?;
                let yx = at.multiply(y, x)?;
                let c: Vec<Q> = xy.iter().zip(&yx).map(|(a, b)| a - b).collect();
                let pc = p.mul_vec(&c);
                closed &= pc.iter().zip(&c).all(|(a, b)| (a + b).is_zero());
            }
        }
        r.holds(format!("{label}: commutator of skew elements is skew"), Origin::Claimed, closed);
        if let Some(expected) = expected {
            let der_status = status(&LieTable::from_operators(&d)?, s)?;
            let quotient_status = status(&skew_lie::<Q>(k)?.quotient_by_center(), s)?;
            r.eq(format!("{label}: Der simplicity"), Origin::Derived, expected, der_status);
            r.eq(format!("so({k})/center simplicity"), Origin::Derived, expected, quotient_status);
            r.holds(format!("{label}: both sides agree"), Origin::Claimed, der_status == quotient_status);
        }
    }
    Ok(())
}

/// `V[i][j]` = coefficient of `u_j` in `D(u_i)`.
fn restriction(op: &LinearOperator<Q>, n: usize) -> Matrix<Q> {
    let mut v = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            v[(i, j)] = op[(1 + j, 1 + i)].clone();
        }
    }
    v
}

/// Der of a spin factor is `so_α`, simple unless it is 6-dimensional.
fn spin_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    let s = &cfg.solver;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 2..=7usize {
        for alpha in [ones(n), random_parameters(&mut rng, n)] {
            let label = format!("spin({})", fmt_params(&alpha));
            r.fixture(label.clone());
            let j = spin_factor(&alpha)?;
            let d = der(&j, s)?;
            r.eq(format!("{label}: der dim"), Origin::Claimed, n * (n - 1) / 2, d.dim());
            let unit = j.unit().expect("spin factors are unital").to_vec();
            r.holds(format!("{label}: derivations kill the unit"), Origin::Claimed, kills_unit(&d, &unit));
            let mut relation = true;
            let mut block = true;
            let mut restricted = Vec::new();
            for op in d.operators() {
                block &= (0..=n).all(|c| op[(0, c)].is_zero());
                let v = restriction(&op, n);
                for a in 0..n {
                    for b in 0..n {
                        relation &= (&alpha[a] * &v[(b, a)] + &alpha[b] * &v[(a, b)]).is_zero();
                    }
                }
                restricted.push(v);
            }
            r.holds(format!("{label}: derivations preserve span(u)"), Origin::Claimed, block);
            r.holds(format!("{label}: α_i v_ji + α_j v_ij = 0"), Origin::Claimed, relation);
            let so = so_alpha(n, &alpha)?;
            let realization = so.realization().expect("so_alpha keeps its matrices");
            r.holds(
                format!("{label}: restrictions span so_alpha"),
                Origin::Claimed,
                OperatorSubspace::span(n, &restricted)? == *realization,
            );
        }
    }

    for n in [3usize, 5, 6] {
        let label = format!("so_alpha({n}, 1s)");
        r.fixture(label.clone());
        r.eq(format!("{label}: simplicity"), Origin::Claimed, SimplicityStatus::Simple, status(&so_alpha(n, &ones(n))?, s)?);
    }
    r.fixture("so_alpha(4, 1s)");
    let so4 = so_alpha(4, &ones(4))?;
    let verdict = so4.simplicity(s)?;
    r.eq("so_alpha(4, 1s): simplicity", Origin::Claimed, SimplicityStatus::NotSimple, verdict.status);
    let witness = verdict.witness.unwrap_or_else(|| RowBasis::zero(6));
    r.eq("so_alpha(4, 1s): witness dim", Origin::Claimed, 3, witness.dim());
    r.holds("so_alpha(4, 1s): witness is an ideal", Origin::Elementary, so4.is_ideal(&witness)?);
    let split = split_ideal_span(&so4, &ones(4))?;
    r.holds("so_alpha(4, 1s): witness = span of the explicit ideal", Origin::Claimed, witness == split);

    r.fixture("spin(1,1,1,1)");
    let d5 = der(&spin_factor(&ones(4))?, s)?;
    r.eq("spin(1,1,1,1): Der simplicity", Origin::Claimed, SimplicityStatus::NotSimple, status(&LieTable::from_operators(&d5)?, s)?);

    for alpha in [vec![q(1), q(1), q(1), q(4)], vec![q(2), q(1), q(2), q(1)]] {
        let label = format!("so_alpha(4, {})", fmt_params(&alpha));
        r.fixture(label.clone());
        let so = so_alpha(4, &alpha)?;
        let span = split_ideal_span(&so, &alpha)?;
        r.eq(format!("{label}: explicit ideal dim"), Origin::Claimed, 3, span.dim());
        r.holds(format!("{label}: explicit ideal is an ideal"), Origin::Claimed, so.is_ideal(&span)?);
    }
    Ok(())
}

/// Span of the explicit ideal, in the canonical basis of `so`.
pub fn split_ideal_span(so: &LieTable<Q>, alpha: &[Q]) -> Result<RowBasis<Q>, Error> {
    let realization = so.realization().ok_or(Error::BadParameter("table has no realization".into()))?;
    let coords = so4_split_ideal(alpha)?
        .iter()
        .map(|g| realization.coordinates(g)?.ok_or(Error::NotClosed(0, 0)))
        .collect::<Result<Vec<_>, _>>()?;
    RowBasis::span(so.dim(), &coords)
}

/// Albert algebra; the derivation algebra only in the slow tier.
fn albert_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    r.fixture("albert_algebra");
    let j = albert_algebra::<Q>();
    r.eq("dim", Origin::Claimed, 27, j.dim());
    r.holds("Jordan identity validated", Origin::Claimed, j.jordan_checked());
    let mut unit = vec![q(0); 27];
    unit[..3].fill(q(1));
    r.holds("unit is the identity matrix", Origin::Elementary, j.unit() == Some(unit.as_slice()));
    if cfg.tier == Tier::Fast {
        return Ok(());
    }
    let dense = der(&j, &Solver { strategy: crate::Strategy::Dense, ..cfg.solver })?;
    let modular = der(&j, &Solver { strategy: crate::Strategy::Modular, ..cfg.solver })?;
    r.eq("der dim", Origin::Claimed, 52, dense.dim());
    r.holds("dense and modular strategies agree", Origin::Elementary, dense == modular);
    let l = LieTable::from_operators(&dense)?;
    let v = l.simplicity(&cfg.solver)?;
    r.holds("Killing form nondegenerate", Origin::Derived, v.certificate.killing_nondegenerate);
    r.eq("centroid dim", Origin::Derived, 1, v.certificate.centroid_dim);
    r.eq("simplicity", Origin::Claimed, SimplicityStatus::Simple, v.status);
    Ok(())
}

/// Triple derivations of unital algebras are derivations; the nilpotent
/// example shows the unit is needed.
fn unital_tder_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    let s = &cfg.solver;
    r.fixture("nilpotent_two_dim");
    let j = nilpotent_two_dim::<Q>();
    let (d, t) = (der(&j, s)?, tder(&j, s)?);
    r.eq("nilpotent: der dim", Origin::Derived, 2, d.dim());
    r.eq("nilpotent: tder dim", Origin::Claimed, 4, t.dim());
    r.holds("nilpotent: no unit", Origin::Derived, j.unit().is_none());
    let d0 = Matrix::<Q>::from_i64_rows(&[&[1, 1], &[0, 0]]);
    r.holds("nilpotent: D0 is a triple derivation", Origin::Claimed, t.contains(&d0)?);
    r.holds("nilpotent: D0 is not a derivation", Origin::Claimed, !d.contains(&d0)?);
    r.holds("nilpotent: tder closed under commutator", Origin::Claimed, closed_under_commutator(&t)?);

    let fixtures: Vec<(String, JordanAlgebra<Q>)> = vec![
        ("spin(1,1,1)".into(), spin_factor(&ones(3))?),
        ("full_matrix_jordan(2)".into(), full_matrix_jordan(2)?.0),
        ("hermitian_jordan(3)".into(), hermitian_jordan(3)?.0),
    ];
    for (label, j) in fixtures {
        r.fixture(label.clone());
        let (d, t) = (der(&j, s)?, tder(&j, s)?);
        r.holds(format!("{label}: tder = der"), Origin::Claimed, t == d);
        let unit = j.unit().map(<[Q]>::to_vec);
        r.holds(format!("{label}: unit exists"), Origin::Elementary, unit.is_some());
        r.holds(format!("{label}: triple derivations kill the unit"), Origin::Claimed, kills_unit(&t, &unit.unwrap_or_default()));
        r.holds(format!("{label}: tder closed under commutator"), Origin::Claimed, closed_under_commutator(&t)?);
    }
    Ok(())
}

/// TDer = Der = Inn on semisimple fixtures.
fn inner_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    let s = &cfg.solver;
    let mut fixtures: Vec<(String, JordanAlgebra<Q>)> = Vec::new();
    for n in 2..=5 {
        fixtures.push((format!("spin({})", fmt_params(&ones(n))), spin_factor(&ones(n))?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x37);
    let alpha = random_parameters(&mut rng, 4);
    fixtures.push((format!("spin({})", fmt_params(&alpha)), spin_factor(&alpha)?));
    for k in [2, 3] {
        fixtures.push((format!("full_matrix_jordan({k})"), full_matrix_jordan(k)?.0));
    }
    fixtures.push(("hermitian_jordan(3)".into(), hermitian_jordan(3)?.0));
    for (label, j) in fixtures {
        r.fixture(label.clone());
        let (d, t, i) = (der(&j, s)?, tder(&j, s)?, inn(&j)?);
        r.holds(format!("{label}: inn = der"), Origin::Claimed, i == d);
        r.holds(format!("{label}: der = tder"), Origin::Claimed, d == t);
    }
    r.fixture("nilpotent_two_dim");
    let j = nilpotent_two_dim::<Q>();
    r.eq("nilpotent: inn dim", Origin::Derived, 0, inn(&j)?.dim());
    Ok(())
}

fn lie_level_checks(r: &mut Recorder, label: &str, l: &LieTable<Q>, s: &Solver, dim: usize) -> Result<(), Error> {
    r.eq(format!("{label}: dim"), Origin::Derived, dim, l.dim());
    r.holds(format!("{label}: perfect"), Origin::Derived, l.derived().dim() == l.dim());
    r.eq(format!("{label}: center dim"), Origin::Derived, 0, l.center().dim());
    let ad = l.ad_span();
    let d = l.der(s)?;
    let t = l.tder(s)?;
    r.eq(format!("{label}: ad dim"), Origin::Derived, dim, ad.dim());
    r.holds(format!("{label}: ad = der"), Origin::Claimed, ad == d);
    r.holds(format!("{label}: der = tder"), Origin::Claimed, d == t);
    Ok(())
}

/// TDer(Der J) = Der(Der J) = ad(Der J).
fn lie_tder_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    let s = &cfg.solver;
    let mut fixtures: Vec<(String, JordanAlgebra<Q>, usize)> = vec![
        ("Der(spin(1,1,1))".into(), spin_factor(&ones(3))?, 3),
        ("Der(spin(1,1,1,1,1))".into(), spin_factor(&ones(5))?, 10),
        ("Der(full_matrix_jordan(2))".into(), full_matrix_jordan(2)?.0, 3),
        ("Der(hermitian_jordan(3))".into(), hermitian_jordan(3)?.0, 3),
    ];
    if cfg.tier == Tier::Slow {
        fixtures.push(("Der(albert_algebra)".into(), albert_algebra(), 52));
    }
    for (label, j, dim) in fixtures {
        r.fixture(label.clone());
        let l = LieTable::from_operators(&der(&j, s)?)?;
        lie_level_checks(r, &label, &l, s, dim)?;
    }
    Ok(())
}

/// Direct sums of centerless Lie algebras: ad, Der and TDer split.
fn lie_sum_suite(r: &mut Recorder, cfg: &Config) -> Result<(), Error> {
    let s = &cfg.solver;
    let j = spin_factor(&ones(3))?;
    let l = LieTable::from_operators(&der(&j, s)?)?;
    r.fixture("L = Der(spin(1,1,1))");
    r.fixture("L ⊕ L");
    let sum = l.direct_sum(&l);
    lie_level_checks(r, "L ⊕ L", &sum, s, 6)?;
    r.holds("center(L ⊕ L) = center ⊕ center", Origin::Claimed, sum.center() == l.center().direct_sum(&l.center()));
    r.holds("ad(L ⊕ L) = ad ⊕ ad", Origin::Claimed, sum.ad_span() == l.ad_span().block_sum(&l.ad_span()));
    r.holds("der(L ⊕ L) = der ⊕ der", Origin::Claimed, sum.der(s)? == l.der(s)?.block_sum(&l.der(s)?));
    r.holds("tder(L ⊕ L) = tder ⊕ tder", Origin::Claimed, sum.tder(s)? == l.tder(s)?.block_sum(&l.tder(s)?));

    r.fixture("so_alpha(3, 1s) ⊕ so_alpha(3, 1s)");
    let so3 = so_alpha(3, &ones(3))?;
    r.eq("tder(so3 ⊕ so3) dim", Origin::Claimed, 6, so3.direct_sum(&so3).tder(s)?.dim());

    r.fixture("spin(1,1,1)");
    let unit = j.unit().expect("unital").to_vec();
    r.holds("spin(1,1,1): unit lies in the center, so it is not centerless", Origin::Claimed, j.center().contains(&unit)?);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("9.9", &Config::default()).is_err());
    }

    #[test]
    fn fast_suites_pass() {
        let cfg = Config::default();
        for report in run_suites(&["all"], &cfg).unwrap() {
            if let Some(c) = report.checks.iter().find(|c| !c.pass) {
                panic!("{}: {} expected {} got {}", report.theorem_id, c.name, c.expected, c.computed);
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = Config::default();
        let a = serde_json::to_string(&run_suite("2.8", &cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("2.8", &cfg).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("wall_time"));
    }
}
