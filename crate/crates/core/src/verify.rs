//! Exact operator identities on truncated Fock spaces.
//!
//! Operators act on the untruncated space, so an identity between two
//! operators is decided exactly on every basis state whose images stay
//! within `N_max`. Those are the interior states: total quanta at most
//! `N_max - interior_margin`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::factory::{
    build_casimir, build_generator, build_invariant, build_l, generator_pairs, CasimirOrder, GeneratorSet, Group,
    InvariantKind, KPair, KappaPair, MetricSignature, Part,
};
use crate::fock::basis::monomials_up_to;
use crate::fock::{ApplyCache, FockMonomial, LinearOperator, StateVector};
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub nmax: u32,
    pub interior_margin: u32,
}

impl Truncation {
    pub fn new(nmax: u32, interior_margin: u32) -> Self {
        Truncation { nmax, interior_margin }
    }

    /// Largest interior total, `None` when the interior is empty.
    pub fn interior_total(&self) -> Option<u32> {
        self.nmax.checked_sub(self.interior_margin)
    }

    pub fn interior_states(&self) -> Vec<FockMonomial> {
        self.interior_total().map(monomials_up_to).unwrap_or_default()
    }

    fn require(&self, required: u32) -> Result<()> {
        if self.interior_margin < required {
            return Err(Error::MarginTooSmall {
                required,
                got: self.interior_margin,
            });
        }
        Ok(())
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation::new(6, 4)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "exact-pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub relation: String,
    pub state: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub nmax: u32,
    pub interior_margin: u32,
    pub states_checked: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, ParseError> {
        serde_json::from_str(s).map_err(|e| ParseError::Json(e.to_string()))
    }
}

/// Serializes a report stream as a JSON list.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn reports_from_json(s: &str) -> Result<Vec<VerificationReport>, ParseError> {
    serde_json::from_str(s).map_err(|e| ParseError::Json(e.to_string()))
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "exact-pass",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "{:<40} nmax={} margin={} states={} {}",
            self.identity, self.nmax, self.interior_margin, self.states_checked, status
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  {} on {}\n  lhs = {}\n  rhs = {}", c.relation, c.state, c.lhs, c.rhs)?;
        }
        Ok(())
    }
}

/// A claimed equality `lhs == rhs` between two operators.
pub struct Relation {
    pub label: String,
    pub lhs: LinearOperator,
    pub rhs: LinearOperator,
}

impl Relation {
    pub fn new(label: impl Into<String>, lhs: LinearOperator, rhs: LinearOperator) -> Self {
        Relation {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    fn check(&self, state: &StateVector, cache: &ApplyCache) -> Result<Option<(StateVector, StateVector)>> {
        let l = self.lhs.apply_cached(state, cache)?;
        let r = self.rhs.apply_cached(state, cache)?;
        Ok(if l == r { None } else { Some((l, r)) })
    }
}

/// Decides every relation on every given state. The first failure in
/// (relation, state) order is reported.
pub fn check_relations(
    identity: &str,
    trunc: Truncation,
    states: &[FockMonomial],
    relations: &[Relation],
) -> Result<VerificationReport> {
    let cache = ApplyCache::new();
    let found = relations
        .par_iter()
        .map(|rel| -> Result<Option<Counterexample>> {
            for m in states {
                let s = StateVector::monomial(*m);
                if let Some((l, r)) = rel.check(&s, &cache)? {
                    return Ok(Some(Counterexample {
                        relation: rel.label.clone(),
                        state: m.to_string(),
                        lhs: l.to_string(),
                        rhs: r.to_string(),
                    }));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    let counterexample = found.into_iter().flatten().next();
    Ok(VerificationReport {
        identity: identity.to_string(),
        nmax: trunc.nmax,
        interior_margin: trunc.interior_margin,
        states_checked: states.len(),
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        counterexample,
    })
}

pub const SO42_MARGIN: u32 = 4;
pub const INVARIANCE_MARGIN: u32 = 2;

/// Margin needed to test `[C_order, X]` for `X` shifting totals by 2.
pub fn casimir_margin(order: CasimirOrder) -> u32 {
    2 * order.degree() + 2
}

fn l_name(mu: usize, nu: usize) -> String {
    format!("L{mu}{nu}")
}

/// The right side `i(g_mr L_ns + g_ns L_mr + g_ms L_rn + g_nr L_sm)`.
pub fn so42_rhs(mu: usize, nu: usize, rho: usize, sigma: usize) -> LinearOperator {
    let g = |a: usize, b: usize| if a == b { MetricSignature::g(a) as i64 } else { 0 };
    let mut out = LinearOperator::zero();
    for (coef, a, b) in [
        (g(mu, rho), nu, sigma),
        (g(nu, sigma), mu, rho),
        (g(mu, sigma), rho, nu),
        (g(nu, rho), sigma, mu),
    ] {
        if coef != 0 && a != b {
            let l = build_l(a, b).expect("valid indices");
            out = out.plus(&l.scaled(&Scalar::i().scale(&crate::scalar::rational(coef, 1))));
        }
    }
    out
}

/// The 105 closure relations over unordered generator pairs.
pub fn so42_relations() -> Vec<Relation> {
    let set = GeneratorSet::get();
    let pairs = generator_pairs();
    let mut out = Vec::with_capacity(105);
    for (x, &(mu, nu)) in pairs.iter().enumerate() {
        for &(rho, sigma) in &pairs[x + 1..] {
            out.push(Relation::new(
                format!("[{},{}]", l_name(mu, nu), l_name(rho, sigma)),
                LinearOperator::commutator(set.l(mu, nu), set.l(rho, sigma)),
                so42_rhs(mu, nu, rho, sigma),
            ));
        }
    }
    out
}

pub fn verify_so42(trunc: Truncation) -> Result<VerificationReport> {
    trunc.require(SO42_MARGIN)?;
    check_relations("so42 closure", trunc, &trunc.interior_states(), &so42_relations())
}

pub fn invariance_relations() -> Vec<Relation> {
    let set = GeneratorSet::get();
    let mut out = Vec::with_capacity(120);
    for a in 1..=8 {
        let j = Arc::new(build_generator(Group::Total, a));
        for (mu, nu) in generator_pairs() {
            out.push(Relation::new(
                format!("[J{a},{}]", l_name(mu, nu)),
                LinearOperator::commutator(&j, set.l(mu, nu)),
                LinearOperator::zero(),
            ));
        }
    }
    out
}

pub fn verify_invariance(trunc: Truncation) -> Result<VerificationReport> {
    trunc.require(INVARIANCE_MARGIN)?;
    check_relations("su3 invariance", trunc, &trunc.interior_states(), &invariance_relations())
}

pub fn identity_relations() -> Vec<Relation> {
    let k0 = |p| build_invariant(InvariantKind::K(p, Part::Zero));
    let kappa0 = |p| build_invariant(InvariantKind::Kappa(p, Part::Zero));
    vec![
        Relation::new(
            "kappa0(ac) = k0(ab) - k0(bc)",
            kappa0(KappaPair::AC),
            k0(KPair::AB).minus(&k0(KPair::BC)),
        ),
        Relation::new(
            "kappa0(bd) = k0(ab) - k0(ad)",
            kappa0(KappaPair::BD),
            k0(KPair::AB).minus(&k0(KPair::AD)),
        ),
        Relation::new(
            "k0(ab) + k0(cd) = k0(ad) + k0(bc)",
            k0(KPair::AB).plus(&k0(KPair::CD)),
            k0(KPair::AD).plus(&k0(KPair::BC)),
        ),
    ]
}

/// The linear identities among the diagonal invariants, on every state
/// with total at most `nmax`. They preserve counts, so no margin is used.
pub fn verify_identities(nmax: u32) -> Result<VerificationReport> {
    let trunc = Truncation::new(nmax, 0);
    check_relations("k0 identities", trunc, &trunc.interior_states(), &identity_relations())
}

fn casimir_name(order: CasimirOrder) -> String {
    format!("C{}", order.degree())
}

pub fn casimir_relations(order: CasimirOrder) -> Vec<Relation> {
    let c = Arc::new(build_casimir(order));
    let set = GeneratorSet::get();
    let name = casimir_name(order);
    let mut targets: Vec<(String, Arc<LinearOperator>)> = generator_pairs()
        .into_iter()
        .map(|(mu, nu)| (l_name(mu, nu), Arc::clone(set.l(mu, nu))))
        .collect();
    for p in [KPair::AB, KPair::CD] {
        let kind = InvariantKind::K(p, Part::Minus);
        targets.push((kind.to_string(), Arc::new(build_invariant(kind))));
    }
    targets
        .into_iter()
        .map(|(label, x)| {
            Relation::new(
                format!("[{name},{label}]"),
                LinearOperator::commutator(&c, &x),
                LinearOperator::zero(),
            )
        })
        .collect()
}

pub fn verify_casimir_commutation(order: CasimirOrder, trunc: Truncation) -> Result<VerificationReport> {
    trunc.require(casimir_margin(order))?;
    check_relations(
        &format!("{} commutation", casimir_name(order)),
        trunc,
        &trunc.interior_states(),
        &casimir_relations(order),
    )
}

/// `L(mu,nu) + L(nu,mu)` annihilates every state with total at most `nmax`.
pub fn verify_antisymmetry(nmax: u32) -> Result<VerificationReport> {
    let mut rels = Vec::new();
    for (mu, nu) in generator_pairs() {
        rels.push(Relation::new(
            format!("{} + {}", l_name(mu, nu), l_name(nu, mu)),
            build_l(mu, nu)?.plus(&build_l(nu, mu)?),
            LinearOperator::zero(),
        ));
    }
    let trunc = Truncation::new(nmax, 0);
    check_relations("L antisymmetry", trunc, &trunc.interior_states(), &rels)
}

/// Reruns a report's identity at doubled `N_max` with the same margin.
/// A pass that turns into a failure is returned as the failing report.
pub fn truncation_stability(
    trunc: Truncation,
    run: impl Fn(Truncation) -> Result<VerificationReport>,
) -> Result<(VerificationReport, VerificationReport)> {
    let base = run(trunc)?;
    let doubled = run(Truncation::new(2 * trunc.nmax, trunc.interior_margin))?;
    Ok((base, doubled))
}

/// Suites selectable from the command line.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Suite {
    So42,
    Invariance,
    Identities,
    Casimirs,
    All,
}

/// Runs the selected suite. `nmax` fixes the so(4,2) and invariance
/// truncations; Casimir checks use `nmax + 2` for `C2` and `nmax + 4` for
/// `C3`, keeping the interior at total `nmax - 4`.
pub fn run_suite(suite: Suite, nmax: u32) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let so = matches!(suite, Suite::So42 | Suite::All);
    let inv = matches!(suite, Suite::Invariance | Suite::All);
    let ids = matches!(suite, Suite::Identities | Suite::All);
    let cas = matches!(suite, Suite::Casimirs | Suite::All);
    if so {
        out.push(verify_so42(Truncation::new(nmax, SO42_MARGIN))?);
        out.push(verify_antisymmetry(nmax)?);
    }
    if inv {
        out.push(verify_invariance(Truncation::new(nmax, SO42_MARGIN))?);
    }
    if ids {
        out.push(verify_identities(nmax)?);
    }
    if cas {
        for order in [CasimirOrder::Two, CasimirOrder::Three] {
            let m = casimir_margin(order);
            out.push(verify_casimir_commutation(
                order,
                Truncation::new((nmax + m).saturating_sub(SO42_MARGIN), m),
            )?);
        }
    }
    Ok(out)
}
