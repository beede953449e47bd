//! Partition combinatorics around e-regularisation and the Mullineux map.
//!
//! - [`partition`]: the [`Partition`] type, text/JSON formats, conjugation,
//!   row/column operators and enumeration.
//! - [`regularisation`]: ladders and the e-regularisation `G`.
//! - [`mullineux`]: the e-rim, the operators `I` and `J`, and the Mullineux
//!   map `M`.
//! - [`hooks`]: hook lengths, shallow/steep hooks, L-partitions and `S`.
//! - [`verify`]: exhaustive checks producing JSON reports.
//! - [`render`] and [`cli`]: diagrams and the `mullreg` command.

pub mod cli;
pub mod error;
pub mod hooks;
pub mod mullineux;
pub mod partition;
pub mod regularisation;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
pub use hooks::{
    e_weight, hook_profile, is_l_partition, s_operator, s_value, t_value, z_value, HookClass,
    HookProfile, HookRecord,
};
pub use mullineux::{
    e_rim, mullineux, mullineux_characterization_check, mullineux_layers, strip_i, strip_j,
    strip_j_truncated, RimData,
};
pub use partition::{
    enumerate_partitions, format_partition, parse_partition, partitions_up_to, Node, Partition,
};
pub use regularisation::{ladder_counts, ladder_index, regularise, LadderCounts};
pub use verify::{
    check_boxthm, check_census, check_lemma_suite, check_main_theorem, check_structural,
    CheckConfig, VerificationReport,
};
