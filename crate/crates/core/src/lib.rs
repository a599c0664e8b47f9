//! Partial transformation monoids over a uniform partition.
//!
//! The ground set `{1, …, nm}` splits into `m` blocks of size `n`. This
//! crate works with the monoid PT_{n×m} of partial transformations sending
//! each block into a single block ([`BlockMap`]), with the wreath product
//! PTₙ ≀ Tₘ that covers it ([`WreathElement`]), and with the canonical
//! surjection [`phi`] between them: component `j` of a wreath element is
//! the local action inside block `j`, the tail says where blocks go, and
//! the only information [`phi`] forgets is the tail entry under an empty
//! component.
//!
//! On top of the element arithmetic sit
//!
//! * exact counting: [`order_formula`] gives `|PT_{n×m}| = (m(n+1)ⁿ−m+1)ᵐ`;
//! * brute-force enumeration ([`closure`]) with Cayley edge tables,
//!   BFS factorizations and congruence machinery ([`congruence_from_pairs`],
//!   [`kernel_congruence`]);
//! * named generating sets: the rank-4 set of PTₙ, its slot and tail
//!   embeddings, the unit-group pair `x1, x2` and the rank-5 set
//!   `{x1, x2, tau, tauB, sigma}` ([`build_named_generators`]), plus the
//!   words recovering the embedded permutation generators from
//!   `{x1, x2}` ([`xi_words`]);
//! * presentations: the mixed relation families R₁, R₂, R₃, pluggable
//!   defining sets for the PTₙ and Tₘ parts, relation checking by
//!   evaluation and a monoid coset enumeration
//!   ([`free_quotient_size`]) to compute presented sizes outright.
//!
//! Everything acts on the right; products read left to right. Small cases
//! are meant to be verified by brute force, and the test suite does so.
//!
//! ```
//! use ptwreath::{build_named_generators, closure, order_formula, phi};
//!
//! let alphabet = build_named_generators(2, 2).unwrap();
//! let five: Vec<_> = ["x1", "x2", "tau", "tauB", "sigma"]
//!     .iter()
//!     .map(|s| alphabet.get(s).unwrap().clone())
//!     .collect();
//! let wreath = closure(&five).unwrap();
//! assert_eq!(wreath.size(), 324);
//!
//! let blocks: Vec<_> = five.iter().map(|x| phi(x)).collect();
//! let quotient = closure(&blocks).unwrap();
//! assert_eq!(order_formula(2, 2), quotient.size().into());
//! ```

pub mod block;
pub mod element;
pub mod enumeration;
pub mod error;
pub mod generators;
pub mod presentations;
pub mod transform;
pub mod wreath;

pub use block::{
    kernel_equivalent, order_formula, phi, phi_section, preserves_partition, BigCount, BlockMap,
};
pub use element::MonoidElement;
pub use enumeration::{
    closure, closure_with_limit, congruence_from_pairs, congruences_equal, is_generating,
    kernel_congruence, Congruence, EnumeratedMonoid, DEFAULT_LIMIT,
};
pub use error::{Error, Result};
pub use generators::{
    build_named_generators, kernel_generating_pair, standard_generators_ptn, xi_generators,
    xi_words, Alphabet, PtGenerators, Word, XiWords,
};
pub use presentations::{
    build_r1, build_r2, build_r3, bundled_rp, bundled_rt, check_relations, derive_presentation,
    extra_relation, free_quotient_size, parse_relation_file, prune_presentation, substitute,
    wreath_presentation, Presentation, Relation, RelationLabel, RelationOutcome, RelationReport,
};
pub use transform::{PartialMap, UNDEFINED};
pub use wreath::WreathElement;
