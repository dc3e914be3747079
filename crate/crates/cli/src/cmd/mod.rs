pub mod check;
pub mod coherence;
pub mod expand;
pub mod figures;
pub mod gen_state;
