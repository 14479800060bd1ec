//! Bounded exploration of the move graph and the verification drivers built
//! on it.

use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::BraidError;
use crate::garside::{to_normal_form, CanonicalForm};
use crate::invariants::{braid_index_bounds, mfw_braid_index_lower, unlink_status, HomflyEngine, UnlinkStatus};
use crate::moves::{
    conjugate, destabilize, exchange_move, is_exchange_form, self_linking, stabilize, ConePoint, MoveSequence,
    MoveStep,
};
use crate::quasipositive::{expand, qp_self_linking, NotQpReason, QPFactorization, QpCertificate, QpCertificateResult, QpMode, QpSearcher};
use crate::word::{free_reduce_letters, BraidWord};

/// Limits for every bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// States expanded by `explore`, or products formed by the band search.
    pub max_nodes: usize,
    pub max_strands: usize,
    /// Longest word kept during exploration. Inputs longer than this are
    /// still explored, with their own length as the limit.
    pub max_word_length: usize,
    /// Longest conjugator tried by the band search.
    pub max_conjugator_length: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 4000, max_strands: 5, max_word_length: 24, max_conjugator_length: 2 }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<(), BraidError> {
        if self.max_nodes == 0 || self.max_strands == 0 || self.max_word_length == 0 {
            return Err(BraidError::Invalid("budget limits must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
struct State {
    word: BraidWord,
    parent: Option<(usize, Vec<MoveStep>)>,
}

/// Everything a bounded exploration saw.
#[derive(Debug, Clone)]
pub struct ReachabilityReport {
    states: Vec<State>,
    /// Every `(w, n)` seen.
    pub visited: BTreeSet<ConePoint>,
    pub min_strands: usize,
    pub max_self_linking: i64,
    pub nodes_used: usize,
    /// True when the node budget ran out with states still unexpanded.
    pub exhausted: bool,
    /// Index of the state that satisfied the stop condition, if any.
    pub goal: Option<usize>,
}

impl ReachabilityReport {
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn word(&self, index: usize) -> &BraidWord {
        &self.states[index].word
    }

    pub fn words(&self) -> impl Iterator<Item = &BraidWord> {
        self.states.iter().map(|s| &s.word)
    }

    /// Indices of the states at the least strand count, in discovery order.
    pub fn minimal_indices(&self) -> Vec<usize> {
        (0..self.states.len()).filter(|&i| self.states[i].word.strands() == self.min_strands).collect()
    }

    pub fn minimal_representatives(&self) -> Vec<BraidWord> {
        self.minimal_indices().into_iter().map(|i| self.states[i].word.clone()).collect()
    }

    /// A state with the largest self-linking number.
    pub fn max_self_linking_word(&self) -> &BraidWord {
        self.states
            .iter()
            .map(|s| &s.word)
            .find(|w| self_linking(w) == self.max_self_linking)
            .unwrap_or(&self.states[0].word)
    }

    /// Moves leading from the root to state `index`.
    pub fn path_to(&self, index: usize) -> MoveSequence {
        let mut chunks = Vec::new();
        let mut at = index;
        while let Some((parent, steps)) = &self.states[at].parent {
            chunks.push(steps.clone());
            at = *parent;
        }
        let mut seq = MoveSequence::new(self.states[0].word.clone());
        for chunk in chunks.into_iter().rev() {
            seq.steps.extend(chunk);
        }
        seq
    }
}

/// Best-first closure of `{β}` under single-letter conjugation, free
/// reduction, stabilization, destabilization and exchange moves.
///
/// States are merged by normal form. Frontier order is strand count, then
/// word length, then the letters (ordered `1, -1, 2, -2, …`), so the result depends only on the input
/// and the budget.
pub fn explore(beta: &BraidWord, budget: &SearchBudget) -> ReachabilityReport {
    explore_until(beta, budget, |_| false)
}

/// Like [`explore`], stopping as soon as a discovered word satisfies `stop`.
pub fn explore_until(beta: &BraidWord, budget: &SearchBudget, stop: impl Fn(&BraidWord) -> bool) -> ReachabilityReport {
    let max_strands = budget.max_strands.max(beta.strands());
    let max_len = budget.max_word_length.max(beta.len());
    let root = beta.free_reduce();
    let mut root_steps = Vec::new();
    if root.len() != beta.len() {
        root_steps.push(reduce_step(&root));
    }
    let mut report = ReachabilityReport {
        states: vec![State { word: beta.clone(), parent: None }],
        visited: BTreeSet::new(),
        min_strands: beta.strands(),
        max_self_linking: self_linking(beta),
        nodes_used: 0,
        exhausted: false,
        goal: None,
    };
    report.visited.insert(ConePoint::of(beta));
    let mut seen: BTreeMap<CanonicalForm, usize> = BTreeMap::new();
    let mut heap = BinaryHeap::new();
    let start = if root_steps.is_empty() {
        0
    } else {
        report.states.push(State { word: root.clone(), parent: Some((0, root_steps)) });
        1
    };
    seen.insert(to_normal_form(&root), start);
    heap.push(Reverse((root.strands(), root.len(), lex_key(&root), start)));
    if stop(&root) {
        report.goal = Some(start);
        return report;
    }

    while let Some(Reverse((_, _, _, index))) = heap.pop() {
        if report.nodes_used >= budget.max_nodes {
            report.exhausted = true;
            break;
        }
        report.nodes_used += 1;
        let word = report.states[index].word.clone();
        for (child, steps) in neighbours(&word, max_strands, max_len) {
            let form = to_normal_form(&child);
            if seen.contains_key(&form) {
                continue;
            }
            let id = report.states.len();
            seen.insert(form, id);
            report.visited.insert(ConePoint::of(&child));
            report.min_strands = report.min_strands.min(child.strands());
            report.max_self_linking = report.max_self_linking.max(self_linking(&child));
            heap.push(Reverse((child.strands(), child.len(), lex_key(&child), id)));
            let hit = stop(&child);
            report.states.push(State { word: child, parent: Some((index, steps)) });
            if hit {
                report.goal = Some(id);
                return report;
            }
        }
    }
    report
}

/// Letters ordered `1, -1, 2, -2, …`.
fn lex_key(word: &BraidWord) -> Vec<u32> {
    word.letters().iter().map(|&l| 2 * l.unsigned_abs() - u32::from(l > 0)).collect()
}

fn reduce_step(target: &BraidWord) -> MoveStep {
    MoveStep::Conjugate {
        by: BraidWord::from_parts(target.strands(), Vec::new()),
        into: Some(target.clone()),
    }
}

/// Appends a free reduction step when `word` is not already reduced.
fn reduced(word: BraidWord, mut steps: Vec<MoveStep>) -> (BraidWord, Vec<MoveStep>) {
    let r = word.free_reduce();
    if r.len() != word.len() {
        steps.push(reduce_step(&r));
    }
    (r, steps)
}

/// Every move out of `word`, each paired with the steps that produce the
/// child from `word`.
fn neighbours(word: &BraidWord, max_strands: usize, max_len: usize) -> Vec<(BraidWord, Vec<MoveStep>)> {
    let n = word.strands();
    let mut out = Vec::new();
    for g in 1..n as i32 {
        for a in [g, -g] {
            let c = BraidWord::from_parts(n, vec![a]);
            let conj = conjugate(word, &c).expect("same strands");
            let r = BraidWord::from_parts(n, free_reduce_letters(conj.letters()));
            if r.len() <= max_len {
                out.push((r.clone(), vec![MoveStep::Conjugate { by: c, into: Some(r) }]));
            }
        }
    }
    if n < max_strands && word.len() < max_len {
        for sign in [1, -1] {
            let s = stabilize(word, sign).expect("strand limit checked");
            out.push((s, vec![MoveStep::Stabilize { sign }]));
        }
    }
    if n >= 2 {
        // Rotations of the word and of its normal-form spelling; a rotation
        // by a prefix p is conjugation by p⁻¹.
        let nf_word = to_normal_form(word).to_word();
        let mut bases = vec![(word.clone(), Vec::new())];
        if nf_word.letters() != word.letters() {
            bases.push((nf_word.clone(), vec![reduce_step(&nf_word)]));
        }
        for (base, prefix_steps) in bases {
            let len = base.len();
            for k in 0..len.max(1) {
                let rotated = base.rotate(k);
                let mut steps = prefix_steps.clone();
                if k > 0 {
                    let p: Vec<i32> = base.letters()[..k].iter().rev().map(|&l| -l).collect();
                    steps.push(MoveStep::Conjugate {
                        by: BraidWord::from_parts(n, p),
                        into: Some(rotated.clone()),
                    });
                }
                if let Ok((d, sign)) = destabilize(&rotated) {
                    let mut s = steps.clone();
                    s.push(MoveStep::Destabilize { sign });
                    out.push((d, s));
                }
                if is_exchange_form(&rotated) {
                    let e = exchange_move(&rotated).expect("checked form");
                    let mut s = steps;
                    s.push(MoveStep::Exchange);
                    out.push(reduced(e, s));
                }
            }
        }
    }
    out
}

/// Representatives at the least strand count reached, with the MFW certificate.
#[derive(Debug, Clone)]
pub struct MinimalRepresentatives {
    pub words: Vec<BraidWord>,
    pub strands: usize,
    pub mfw_lower: usize,
    /// The strand count equals the MFW lower bound, so it is the braid index.
    pub certified: bool,
    /// The exploration ran out of budget.
    pub exhausted: bool,
    pub nodes_used: usize,
    pub report: ReachabilityReport,
}

/// A computation contradicted a published theorem. This can only mean an
/// implementation bug, so callers should stop and report it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremViolation {
    pub statement: Statement,
    pub instance: String,
    pub message: String,
}

impl fmt::Display for TheoremViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} contradicted on {}: {}", self.statement.name(), self.instance, self.message)
    }
}

/// Explores from `beta` and returns the representatives of least strand
/// count.
///
/// When the count is certified minimal, every visited `(w, n)` must lie in
/// the cone over the minimal representatives; anything else is reported as
/// a violation.
pub fn find_minimal_representatives(
    beta: &BraidWord,
    budget: &SearchBudget,
) -> Result<MinimalRepresentatives, TheoremViolation> {
    let mut engine = HomflyEngine::new();
    find_minimal_with(beta, budget, &mut engine)
}

fn find_minimal_with(
    beta: &BraidWord,
    budget: &SearchBudget,
    engine: &mut HomflyEngine,
) -> Result<MinimalRepresentatives, TheoremViolation> {
    let violation = |message: String| TheoremViolation {
        statement: Statement::Gjc,
        instance: format!("{} on {} strands", beta, beta.strands()),
        message,
    };
    let p = engine.homfly(beta).map_err(|e| violation(format!("HOMFLY failed: {e}")))?;
    let mfw = mfw_braid_index_lower(&p).map_err(|e| violation(format!("{e}")))?;
    // The search cannot go below the MFW bound, so stop once it gets there
    // with a few representatives in hand.
    let report = explore(beta, budget);
    if report.min_strands < mfw {
        return Err(violation(format!("reached {} strands below the MFW bound {}", report.min_strands, mfw)));
    }
    let certified = report.min_strands == mfw;
    let words = report.minimal_representatives();
    if certified {
        let w0 = words[0].writhe();
        if let Some(bad) = words.iter().find(|w| w.writhe() != w0) {
            return Err(violation(format!("minimal representatives with writhes {} and {} ({})", w0, bad.writhe(), bad)));
        }
        let apex = ConePoint { w: w0, n: mfw };
        if let Some(p) = report.visited.iter().find(|p| !crate::moves::cone_contains(apex, **p)) {
            return Err(violation(format!("visited ({}, {}) outside the cone of ({}, {})", p.w, p.n, apex.w, apex.n)));
        }
    }
    Ok(MinimalRepresentatives {
        strands: report.min_strands,
        mfw_lower: mfw,
        certified,
        exhausted: report.exhausted,
        nodes_used: report.nodes_used,
        words,
        report,
    })
}

/// Which statement a verification checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    /// Every quasipositive link has a quasipositive minimal-index braid.
    ThmMain,
    /// `sl̄(L) ≥ −b(L)` for quasipositive `L`, with equality only for unlinks.
    ThmSlBound,
    /// Nontrivial quasipositive links are not amphicheiral.
    CorChirality,
    /// A move-invariant property of a quasipositive braid is found on a
    /// quasipositive minimal-index braid.
    PropertyTransport,
    /// Writhe and strand count of braids of one link lie in the cone of any
    /// minimal-index braid.
    Gjc,
}

impl Statement {
    pub fn name(&self) -> &'static str {
        match self {
            Statement::ThmMain => "main",
            Statement::ThmSlBound => "sl-bound",
            Statement::CorChirality => "chirality",
            Statement::PropertyTransport => "property-transport",
            Statement::Gjc => "gjc",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Inconclusive,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Certificates and counters attached to a verification.
#[derive(Debug, Clone, Default)]
pub struct VerificationDetails {
    pub sl_bar: Option<i64>,
    pub b_lower: Option<usize>,
    pub b_upper: Option<usize>,
    pub minimal_writhe: Option<i64>,
    pub nodes_used: usize,
    /// The minimal-index representative the conclusion rests on.
    pub representative: Option<BraidWord>,
    pub certificate: Option<QpCertificate>,
    pub unlink: Option<UnlinkStatus>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct VerificationRecord {
    pub statement: Statement,
    pub instance: QPFactorization,
    pub status: Status,
    pub details: VerificationDetails,
}

impl VerificationRecord {
    fn new(statement: Statement, instance: &QPFactorization) -> Self {
        VerificationRecord {
            statement,
            instance: instance.clone(),
            status: Status::Inconclusive,
            details: VerificationDetails::default(),
        }
    }

    fn inconclusive(mut self, note: impl Into<String>) -> Self {
        self.status = Status::Inconclusive;
        self.details.notes.push(note.into());
        self
    }
}

fn violation(statement: Statement, q: &QPFactorization, message: String) -> TheoremViolation {
    TheoremViolation { statement, instance: format!("{} on {} strands", expand(q), q.strands()), message }
}

/// Checks that a quasipositive minimal-index representative exists for the
/// closure of `q`.
pub fn verify_thm_main(q: &QPFactorization, budget: &SearchBudget) -> Result<VerificationRecord, TheoremViolation> {
    let mut engine = HomflyEngine::new();
    let mut searcher = QpSearcher::new(*budget);
    thm_main_with(q, budget, &mut engine, &mut searcher)
}

fn thm_main_with(
    q: &QPFactorization,
    budget: &SearchBudget,
    engine: &mut HomflyEngine,
    searcher: &mut QpSearcher,
) -> Result<VerificationRecord, TheoremViolation> {
    let beta = expand(q);
    let mut rec = VerificationRecord::new(Statement::ThmMain, q);
    let mins = find_minimal_with(&beta, budget, engine)?;
    rec.details.nodes_used = mins.nodes_used;
    rec.details.b_lower = Some(mins.mfw_lower);
    rec.details.b_upper = Some(mins.strands);
    rec.details.sl_bar = Some(qp_self_linking(q));
    if !mins.certified {
        return Ok(rec.inconclusive("minimal braid index not certified"));
    }
    let w0 = mins.words[0].writhe();
    rec.details.minimal_writhe = Some(w0);
    if w0 < 0 {
        return Err(violation(
            Statement::ThmMain,
            q,
            format!("certified minimal representatives have negative writhe {w0}"),
        ));
    }
    // The input itself is already of minimal index.
    if beta.strands() == mins.strands {
        let cert = QpCertificate { factorization: q.clone(), witness: BraidWord::from_parts(beta.strands(), Vec::new()) };
        if cert.check(&beta).unwrap_or(false) {
            rec.details.representative = Some(beta);
            rec.details.certificate = Some(cert);
            rec.status = Status::Verified;
            return Ok(rec);
        }
    }
    let mut exhausted = false;
    for rep in &mins.words {
        let result = searcher.search(rep, QpMode::Conjugacy);
        rec.details.nodes_used += searcher.nodes_used();
        match result {
            QpCertificateResult::Certificate(cert) => {
                if cert.check(rep).unwrap_or(false) {
                    rec.details.representative = Some(rep.clone());
                    rec.details.certificate = Some(cert);
                    rec.status = Status::Verified;
                    return Ok(rec);
                }
                return Err(violation(Statement::ThmMain, q, format!("certificate for {rep} fails to re-check")));
            }
            QpCertificateResult::Inconclusive => exhausted = true,
            QpCertificateResult::NotQuasipositive(_) => {}
        }
    }
    let why = if exhausted { "band search budget exhausted" } else { "no certificate within the conjugator bound" };
    Ok(rec.inconclusive(why))
}

/// Checks `sl̄ ≥ −b` for the closure of `q`, and that equality occurs only
/// for unlinks.
pub fn verify_sl_bound(q: &QPFactorization, budget: &SearchBudget) -> Result<VerificationRecord, TheoremViolation> {
    let mut engine = HomflyEngine::new();
    sl_bound_with(q, budget, &mut engine)
}

fn sl_bound_with(
    q: &QPFactorization,
    budget: &SearchBudget,
    engine: &mut HomflyEngine,
) -> Result<VerificationRecord, TheoremViolation> {
    let beta = expand(q);
    let mut rec = VerificationRecord::new(Statement::ThmSlBound, q);
    let sl = qp_self_linking(q);
    rec.details.sl_bar = Some(sl);
    let p = engine.homfly(&beta).map_err(|e| violation(Statement::ThmSlBound, q, format!("HOMFLY failed: {e}")))?;
    let morton = crate::invariants::morton_sl_upper(&p).map_err(|e| violation(Statement::ThmSlBound, q, format!("{e}")))?;
    if sl > morton {
        return Err(violation(Statement::ThmSlBound, q, format!("self-linking {sl} exceeds Morton's bound {morton}")));
    }
    let b = braid_index_bounds(&beta, budget);
    let lower = b.lower.unwrap_or(1) as usize;
    let upper = b.upper.map(|u| u as usize);
    rec.details.b_lower = Some(lower);
    rec.details.b_upper = upper;
    let exact = b.is_exact();
    let unlink = unlink_status(&beta, budget);
    rec.details.nodes_used = b.nodes_used + unlink.nodes_used();
    rec.details.unlink = Some(unlink.clone());
    let bound = -(lower as i64);
    if sl < bound {
        if exact {
            return Err(violation(Statement::ThmSlBound, q, format!("sl {sl} < -b = {bound} with b certified")));
        }
        return Ok(rec.inconclusive("sl below -b_lower and b not certified"));
    }
    if sl == bound {
        match unlink {
            UnlinkStatus::Unlink { .. } => {}
            UnlinkStatus::NotUnlink if exact => {
                return Err(violation(Statement::ThmSlBound, q, "equality for a link that is not an unlink".into()))
            }
            UnlinkStatus::NotUnlink => return Ok(rec.inconclusive("equality with uncertified b on a non-unlink")),
            UnlinkStatus::Unknown { .. } => return Ok(rec.inconclusive("equality case without an unlink certificate")),
        }
    }
    rec.status = Status::Verified;
    Ok(rec)
}

/// Checks that a quasipositive link other than an unlink is not
/// amphicheiral: its minimal representatives have positive writhe, so their
/// mirrors have negative writhe and cannot be quasipositive.
pub fn verify_chirality(q: &QPFactorization, budget: &SearchBudget) -> Result<VerificationRecord, TheoremViolation> {
    let mut engine = HomflyEngine::new();
    let mut searcher = QpSearcher::new(*budget);
    chirality_with(q, budget, &mut engine, &mut searcher)
}

fn chirality_with(
    q: &QPFactorization,
    budget: &SearchBudget,
    engine: &mut HomflyEngine,
    searcher: &mut QpSearcher,
) -> Result<VerificationRecord, TheoremViolation> {
    let beta = expand(q);
    let mut rec = VerificationRecord::new(Statement::CorChirality, q);
    rec.details.sl_bar = Some(qp_self_linking(q));
    let unlink = unlink_status(&beta, budget);
    rec.details.nodes_used = unlink.nodes_used();
    rec.details.unlink = Some(unlink.clone());
    match unlink {
        UnlinkStatus::Unlink { .. } => {
            rec.details.minimal_writhe = Some(0);
            rec.details.notes.push("unlink: amphicheiral equality case".into());
            rec.status = Status::Verified;
            return Ok(rec);
        }
        UnlinkStatus::Unknown { .. } => return Ok(rec.inconclusive("HOMFLY matches an unlink but no trivializing moves found")),
        UnlinkStatus::NotUnlink => {}
    }
    let mins = find_minimal_with(&beta, budget, engine)?;
    rec.details.nodes_used += mins.nodes_used;
    rec.details.b_lower = Some(mins.mfw_lower);
    rec.details.b_upper = Some(mins.strands);
    if !mins.certified {
        return Ok(rec.inconclusive("minimal braid index not certified"));
    }
    rec.details.minimal_writhe = Some(mins.words[0].writhe());
    for rep in &mins.words {
        if rep.writhe() <= 0 {
            return Err(violation(
                Statement::CorChirality,
                q,
                format!("minimal representative {rep} has writhe {}", rep.writhe()),
            ));
        }
        let result = searcher.search(&rep.mirror(), QpMode::Exact);
        rec.details.nodes_used += searcher.nodes_used();
        if !matches!(result, QpCertificateResult::NotQuasipositive(NotQpReason::NegativeWrithe(_))) {
            return Err(violation(
                Statement::CorChirality,
                q,
                format!("mirror of {rep} not excluded by the writhe obstruction"),
            ));
        }
    }
    rec.details.representative = mins.words.first().cloned();
    rec.status = Status::Verified;
    Ok(rec)
}

/// Failure modes of [`verify_property_transport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransportError {
    Violation(TheoremViolation),
    /// The predicate changed value under a move it must be invariant under.
    NotInvariant { before: BraidWord, after: BraidWord },
}

impl From<TheoremViolation> for TransportError {
    fn from(v: TheoremViolation) -> Self {
        TransportError::Violation(v)
    }
}

/// Number of random moves used to spot-check a predicate's invariance.
const SPOT_CHECKS: usize = 8;

/// Checks that a property of `expand(q)` invariant under conjugation and
/// positive (de)stabilization is found on some minimal-index representative.
pub fn verify_property_transport(
    q: &QPFactorization,
    property: &dyn Fn(&BraidWord) -> bool,
    budget: &SearchBudget,
    seed: u64,
) -> Result<VerificationRecord, TransportError> {
    let beta = expand(q);
    let mut rec = VerificationRecord::new(Statement::PropertyTransport, q);
    let holds = property(&beta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = beta.strands();
    for _ in 0..SPOT_CHECKS {
        let len = rng.gen_range(0..=3usize);
        let c: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n.max(2) as i32);
                if rng.gen_bool(0.5) { g } else { -g }
            })
            .filter(|&g| g.unsigned_abs() < n as u32)
            .collect();
        let moved = conjugate(&beta, &BraidWord::from_parts(n, c)).expect("same strands");
        let moved = if rng.gen_bool(0.5) { moved } else { stabilize(&moved, 1).expect("strand limit") };
        if property(&moved) != holds {
            return Err(TransportError::NotInvariant { before: beta, after: moved });
        }
        if let Ok((d, 1)) = destabilize(&moved) {
            if property(&d) != holds {
                return Err(TransportError::NotInvariant { before: moved, after: d });
            }
        }
    }
    if !holds {
        return Ok(rec.inconclusive("property does not hold on the input"));
    }
    let mins = find_minimal_representatives(&beta, budget)?;
    rec.details.nodes_used = mins.nodes_used;
    rec.details.b_lower = Some(mins.mfw_lower);
    rec.details.b_upper = Some(mins.strands);
    if !mins.certified {
        return Ok(rec.inconclusive("minimal braid index not certified"));
    }
    rec.details.minimal_writhe = Some(mins.words[0].writhe());
    match mins.words.iter().find(|w| property(w)) {
        Some(w) => {
            rec.details.representative = Some(w.clone());
            rec.status = Status::Verified;
            Ok(rec)
        }
        None => Ok(rec.inconclusive("no minimal representative found with the property")),
    }
}

/// Runs one statement over many items, sharing HOMFLY memo tables and band
/// search tables between them.
#[derive(Debug, Clone)]
pub struct Verifier {
    budget: SearchBudget,
    engine: HomflyEngine,
    searcher: QpSearcher,
}

impl Verifier {
    pub fn new(budget: SearchBudget) -> Self {
        Verifier { budget, engine: HomflyEngine::new(), searcher: QpSearcher::new(budget) }
    }

    pub fn verify(&mut self, statement: Statement, q: &QPFactorization) -> Result<VerificationRecord, TheoremViolation> {
        match statement {
            Statement::ThmMain => thm_main_with(q, &self.budget, &mut self.engine, &mut self.searcher),
            Statement::ThmSlBound => sl_bound_with(q, &self.budget, &mut self.engine),
            Statement::CorChirality => chirality_with(q, &self.budget, &mut self.engine, &mut self.searcher),
            Statement::PropertyTransport | Statement::Gjc => {
                Err(violation(statement, q, "statement needs its own driver".into()))
            }
        }
    }
}
