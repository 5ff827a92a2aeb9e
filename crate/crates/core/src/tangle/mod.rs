//! Framed oriented tangles: a small expression language, its evaluation in a
//! representation category, and isotopy-move checks.

pub mod eval;
pub mod moves;
pub mod syntax;

pub use eval::EvalContext;
pub use moves::{
    check_move, check_moves, closed_invariance, hopf_presentations, move_suite, standard_moves,
    unknot_presentations, InvarianceReport, Move, MoveResult, MoveStatus, Requirement,
};
pub use syntax::{parse, Generator, Node, Sign, Tangle, Word};
