//! Exact hyperspace closure operators on finite pseudometric spaces.
//!
//! The crate models a finite pseudometric space, its hyperspace of subsets,
//! ideals of bounded sets, the bornological closure operators built from them
//! and the hyperspace topologies they generate. All distances are exact
//! rationals and every ε-quantifier is decided over finitely many scales.
//!
//! ```
//! use bornlab::{cl_born, FiniteSpace, Ideal, SetFamily, Side};
//!
//! let w = FiniteSpace::on_line(&[0, 1, 3, 7]).unwrap();
//! let s = Ideal::principal(w.subset(&["a", "b"]).unwrap());
//! let f = SetFamily::singleton(w.subset(&["a", "c"]).unwrap());
//! let closed = cl_born(&w, &s, Side::Lower, f);
//! assert!(closed.iter().all(|a| !a.contains(1)));
//! ```

pub mod closure;
pub mod family;
pub mod instance;
pub mod space;
pub mod topology;

pub use closure::{
    cech_validate, cl_born, cl_born_all_members, cl_lower_mod, cl_metric, cl_tau, cl_tau_all_members, cl_upper_mod,
    idempotent_hull, is_open, is_topological, meet_closure, reflection_opens, sample_families, AxiomCheck, CechAxiom,
    CechReport, ClosureError, ClosureOperator, Hull, Provenance, Scope, Side, TopologicalVerdict,
};
pub use family::{
    cobounded_family, generate_ideal, hat_ideal, minus_ideal, plus_ideal, satisfies_club,
    stable_under_small_enlargements, star_ideal, tb_hull, FamilyError, Ideal, SetFamily, StarIdeal,
};
pub use instance::{load_space, save_space, InstanceDoc, InstanceError, TopologyDoc};
pub use space::{
    critical_bands, enlarge, format_rational, hausdorff, parse_rational, CriticalBands, Enlargement, Extended,
    FiniteSpace, Hyperspace, MetricAxiom, Rational, ScaleMode, Scales, SpaceError, Subset, DEFAULT_GRID_DENOMINATOR,
    MAX_POINTS,
};
pub use topology::{
    directedness_check, hit_family, make_topology, updown, BracketFamily, Directedness, Direction, HyperTopology,
    TopologyError, TopologySpec,
};
