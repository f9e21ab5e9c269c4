//! Simulation toolkit for OSC/VAMOS downlink transmission.
//!
//! Two users share one GSM slot/frequency as orthogonal sub-channels: the
//! paired user's BPSK stream is rotated by 90 degrees and scaled by an
//! amplitude ratio `b` before both pass through the same channel. This crate
//! models that link end to end and embeds it in a multi-cell Monte-Carlo
//! harness:
//!
//! * [`baseband`] — symbol-spaced signal model: channels, burst synthesis,
//!   SNR/SCPIR algebra, training-sequence convolution matrices.
//! * [`chanest`] — joint ML estimation of the channel and `b`, plus a blind
//!   covariance-based estimator of `b`.
//! * [`equalize`] — the receivers: joint MLSE, MIC projection receiver,
//!   MIC with successive cancellation, and the two-branch V-MIC with joint
//!   reduced-state sequence estimation.
//! * [`linkmap`] — two-stage link-to-system mapping (per-burst raw BER
//!   lookup, then frame FER from the BER mean/variance) with table
//!   generation and a stand-in convolutional speech codec.
//! * [`rra`] — joint power and pairing allocation: required-power tables,
//!   minimum-weight perfect matching, and the pairing strategies.
//! * [`netsim`] — hexagonal multi-cell drop simulator with frequency
//!   hopping, DTX, hot-spot mode, and capacity-gain reporting.
//! * [`phy`] — burst-level harness tying the above together for link-level
//!   simulation and table generation.
//!
//! All randomness flows through explicitly seeded generators; every parallel
//! loop derives per-item seeds so results are independent of thread count.

pub mod baseband;
pub mod chanest;
pub mod equalize;
pub mod error;
pub mod linalg;
pub mod linkmap;
pub mod netsim;
pub mod numeric;
pub mod phy;
pub mod rra;
pub mod seeding;
pub mod units;

pub use baseband::{
    amplitude_to_scpir_db, average_snr_db, generate_cir, scpir_db_to_amplitude,
    synthesize_burst, toeplitz_from_training, BurstFrame, BurstLayout, Cir, InterferenceEntry,
    InterferenceKind, InterferenceLedger, PairLink, TrainingSequence,
};
pub use chanest::{
    blind_b_estimate, joint_ml_estimate, ls_b_given_channel, ls_channel_given_b, BlindEstConfig,
    BlindEstimate, ChannelEstimate, EstimationInput,
};
pub use equalize::{
    ceq_equalize, joint_mlse, mic_adapt, mic_equalize, project_onto, sic_receive, vmic_adapt,
    vmic_equalize, EqualizerOutput, MicConfig, MicFilters, ReceiverKind, TrellisConfig,
    VmicFilters,
};
pub use error::{Error, Result};
pub use linkmap::{
    frame_fer, generate_stage1_table, generate_stage2_table, lookup_raw_ber, CodecConfig,
    FrameRecord, Stage1Config, Stage1Table, Stage2Config, Stage2Table,
};
pub use netsim::{
    aggregate, build_layout, capacity_gain, path_gain, simulate_drop, CapacityGain, CellLayout,
    DropOptions, DropResult, NetworkConfig, SummaryPoint,
};
pub use rra::{
    allocate, build_matrices, build_rra_table, min_snr_for_fer, min_weight_perfect_matching,
    required_pair_power, scpir_power_share, PairingSolution, PairingStrategy, PowerScpirMatrices,
    RraTable, RraTableConfig, UserRecord, SINGLE_USER_SCPIR_DB,
};
