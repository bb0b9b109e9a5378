//! Decomposable cobordisms between fronts: elementary moves, the
//! pinching construction of fillings, and trace replay/verification.

mod filling;
mod moves;
mod trace;

pub use filling::{construct_filling, FillingError};
pub use moves::{apply_move, format_moves, parse_moves, pinch_down, CuspSide, Move, MoveError, MovesParseError};
pub use trace::{replay_script, verify_trace, Check, FillingTrace, ReplayError, TraceReport, TraceStep};
