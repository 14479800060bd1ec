//! Braid-group calculus for quasipositive links.
//!
//! The crate is `no_std` (with `alloc`). It provides braid words and their
//! Garside normal forms, Markov and exchange moves, quasipositive band
//! factorizations, the HOMFLY-PT polynomial of braid closures with the
//! braid-index and self-linking bounds derived from it, and bounded
//! searches over the move graph that check the minimal-braid statements for
//! quasipositive links on concrete inputs.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod garside;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod quasipositive;
pub mod search;
pub mod word;

pub use error::BraidError;
pub use garside::{from_normal_form, to_normal_form, words_equal, CanonicalForm};
pub use invariants::{
    braid_index_bounds, homfly, homfly_mirror, max_self_linking_bounds, mfw_braid_index_lower, morton_sl_upper,
    unlink_status, BoundedInvariant, HomflyEngine, Provenance, UnlinkStatus,
};
pub use poly::HomflyPolynomial;
pub use quasipositive::{
    expand, qp_conjugate, qp_search, qp_search_conjugate, qp_self_linking, qp_stabilize_positive, random_corpus, random_qp, Band, CorpusParams,
    NotQpReason, QPFactorization, QpCertificate, QpCertificateResult, QpMode, QpSearcher,
};
pub use search::{
    explore, explore_until, find_minimal_representatives, verify_chirality, verify_property_transport,
    verify_sl_bound, verify_thm_main, MinimalRepresentatives, ReachabilityReport, SearchBudget, Statement, Status,
    TheoremViolation, TransportError, VerificationDetails, VerificationRecord, Verifier,
};
pub use moves::{
    conjugate, cone_contains, cone_points, destabilize, exchange_as_composite, exchange_move,
    jones_inequality_holds, self_linking, stabilize, ConePoint, MoveSequence, MoveStep,
};
pub use word::{BraidWord, Permutation};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 64;
