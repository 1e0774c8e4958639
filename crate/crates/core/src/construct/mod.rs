//! Named subalgebras, the automorphism `φ`, and end-to-end checks of the
//! decomposition of H₃(O) into two copies of H(Q₃).

pub mod example1;
pub mod maximal;
pub mod named;
pub mod oracles;
